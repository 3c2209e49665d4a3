#pragma once

#include <compare>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "skernel/chain.hpp"
#include "skernel/delta.hpp"

namespace skernel {

/// A nondegenerate simplex: dimension plus position in that dimension's
/// declaration order.
struct CellId {
  int dim = 0;
  int index = 0;
  friend auto operator<=>(const CellId&, const CellId&) = default;
};

/// Canonical form of an arbitrary simplex: s_{i₁} ⋯ s_{i_k} applied to a
/// nondegenerate base, with i₁ > ⋯ > i_k.
struct SimplexRef {
  std::vector<int> word;
  CellId base;

  int dim() const { return base.dim + static_cast<int>(word.size()); }
  bool degenerate() const { return !word.empty(); }
  delta::Map surjection() const { return delta::surjection_of(word, base.dim); }

  static SimplexRef of(CellId c) { return SimplexRef{{}, c}; }
  friend auto operator<=>(const SimplexRef&, const SimplexRef&) = default;
};

/// Finite simplicial set stored through its nondegenerate simplices and their
/// faces; degenerate simplices exist implicitly as SimplexRef words. Values are
/// immutable and share their storage, so copies are cheap.
class SimplicialSet {
 public:
  /// The empty simplicial set.
  SimplicialSet();

  /// Highest dimension carrying a cell; −1 when empty.
  int top_dim() const;
  std::size_t cell_count(int dim) const;
  std::vector<std::size_t> cell_counts() const;
  std::size_t total_cells() const;

  const std::string& name(CellId c) const;
  std::optional<CellId> find(std::string_view name) const;
  /// Stored face d_i of a nondegenerate cell of positive dimension.
  const SimplexRef& face(CellId c, int i) const;

  bool pointed() const;
  /// Throws PreconditionError when unpointed.
  CellId basepoint() const;
  /// True for the basepoint and all of its degeneracies.
  bool is_basepoint_simplex(const SimplexRef& s) const;

  /// θ*(s) for θ : [m] → [dim s], in canonical form.
  SimplexRef pullback(const SimplexRef& s, const delta::Map& theta) const;
  SimplexRef apply_face(const SimplexRef& s, int i) const;
  SimplexRef apply_degeneracy(const SimplexRef& s, int j) const;

  /// Every n-simplex (degenerate ones included): nondegenerate bases by
  /// descending dimension then declaration order, surjections lexicographic.
  std::vector<SimplexRef> all_simplices(int n) const;

  /// "s1 s0 v3" style rendering and its inverse.
  std::string ref_name(const SimplexRef& s) const;
  SimplexRef parse_ref(std::string_view text) const;

  long long euler_characteristic() const;

  /// Structural equality: same names, faces and basepoint, in the same order.
  friend bool operator==(const SimplicialSet& a, const SimplicialSet& b);

 private:
  struct Data;
  std::shared_ptr<const Data> data_;
  friend class SimplicialSetBuilder;
};

/// Accumulates cells in dimension order; build() validates the simplicial identities.
class SimplicialSetBuilder {
 public:
  SimplicialSetBuilder();

  /// `faces` must reference cells already added and have dimension dim−1.
  CellId add_cell(int dim, std::string name, std::vector<SimplexRef> faces = {});
  void set_basepoint(CellId c);
  bool has_name(std::string_view name) const;
  /// `base`, or `base` with primes appended until unused.
  std::string unique_name(std::string base) const;
  std::size_t cell_count(int dim) const;

  SimplicialSet build();

 private:
  struct State;
  std::shared_ptr<State> state_;
};

/// A simplicial map, determined by the images of the nondegenerate cells.
class SimplicialMap {
 public:
  SimplicialMap(SimplicialSet source, SimplicialSet target,
                std::vector<std::vector<SimplexRef>> images);

  static SimplicialMap from_function(const SimplicialSet& source, const SimplicialSet& target,
                                     const std::function<SimplexRef(CellId)>& image);
  static SimplicialMap identity(const SimplicialSet& x);

  const SimplicialSet& source() const { return source_; }
  const SimplicialSet& target() const { return target_; }
  const SimplexRef& image(CellId c) const;
  SimplexRef operator()(const SimplexRef& s) const;

  bool preserves_basepoint() const;
  /// Levelwise injective: nondegenerate cells go to distinct nondegenerate cells.
  bool injective() const;
  /// Bijective on nondegenerate cells in every dimension.
  bool is_isomorphism() const;

  friend bool operator==(const SimplicialMap& a, const SimplicialMap& b);

 private:
  SimplicialSet source_;
  SimplicialSet target_;
  std::vector<std::vector<SimplexRef>> images_;
};

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f);

// ---------------------------------------------------------------------------
// Standard spaces

enum class SpaceKind { simplex, boundary, horn, sphere, point, interval_pointed };

/// n is the dimension (simplex, boundary, horn, sphere); k the missing face of a horn.
SimplicialSet standard_space(SpaceKind kind, int n = 0, int k = 0);
SimplicialSet standard_simplex(int n);
SimplicialSet simplex_boundary(int n);
SimplicialSet horn(int n, int k);
/// Δⁱ/∂Δⁱ, pointed; sphere(0) is two points with the first as base.
SimplicialSet sphere(int i);
SimplicialSet point();
/// Δ¹ pointed at vertex 0.
SimplicialSet interval_pointed();
/// The same simplicial set with `vertex` as basepoint.
SimplicialSet pointed_at(const SimplicialSet& x, CellId vertex);

// ---------------------------------------------------------------------------
// Constructions

/// Sub-simplicial set with inclusion.
struct Subcomplex {
  SimplicialSet object;
  SimplicialMap inclusion;
};

/// The subcomplex on the cells satisfying `keep`; throws unless closed under faces.
/// Pointedness is inherited when the basepoint is kept.
Subcomplex subcomplex(const SimplicialSet& x, const std::function<bool(CellId)>& keep);
/// Sub-simplicial set generated by cells of dimension ≤ n.
Subcomplex skeleton(const SimplicialSet& x, int n);

struct ProductSpace {
  SimplicialSet object;
  SimplicialMap pr1;
  SimplicialMap pr2;
  /// The simplex (a, b) of X × Y for simplices a ∈ X, b ∈ Y of equal dimension.
  SimplexRef pair(const SimplexRef& a, const SimplexRef& b) const;

  std::shared_ptr<const std::map<std::pair<SimplexRef, SimplexRef>, CellId>> index;
};

/// Categorical product; nondegenerate cells are pairs with no common degeneracy index.
ProductSpace product(const SimplicialSet& x, const SimplicialSet& y);

struct Coproduct {
  SimplicialSet object;
  SimplicialMap in_left;
  SimplicialMap in_right;
};

Coproduct disjoint_union(const SimplicialSet& x, const SimplicialSet& y);
/// X₊: X with a disjoint basepoint (named "+").
Coproduct add_basepoint(const SimplicialSet& x);
/// Pointed coproduct. in_right is the inclusion of Y.
Coproduct wedge(const SimplicialSet& x, const SimplicialSet& y);
/// The map X ∨ Y → Z restricting to f and g.
SimplicialMap wedge_map(const Coproduct& w, const SimplicialMap& f, const SimplicialMap& g);

struct Pushout {
  SimplicialSet object;
  SimplicialMap leg_f;   // A → X (levelwise injective)
  SimplicialMap leg_g;   // A → Y
  SimplicialMap from_x;  // X → P
  SimplicialMap from_y;  // Y → P
};

/// X ⊔_A Y along a levelwise injective f : A → X.
Pushout pushout_inj(const SimplicialMap& f, const SimplicialMap& g);
/// The map P → Z induced by hx : X → Z and hy : Y → Z with hx∘f = hy∘g.
SimplicialMap pushout_map(const Pushout& p, const SimplicialMap& hx, const SimplicialMap& hy);
/// X/A for a sub-simplicial set A (the collapse X ⊔_A point).
Pushout quotient(const SimplicialMap& inclusion);

struct SmashSpace {
  SimplicialSet object;
  ProductSpace product;
  SimplicialMap collapse;  // X × Y → X ∧ Y
  SimplexRef pair(const SimplexRef& a, const SimplexRef& b) const;
};

SmashSpace smash(const SimplicialSet& x, const SimplicialSet& y);
/// ΣⁱX = X ∧ Sⁱ.
SmashSpace suspension(const SimplicialSet& x, int i);

/// For each cell of X ∧ Y other than the basepoint, the product cell it comes from.
std::map<CellId, CellId> smash_preimages(const SmashSpace& s);
/// The map X ∧ Y → Z sending [a, b] to h(a, b) and the basepoint to Z's basepoint.
SimplicialMap smash_from(const SmashSpace& s, const SimplicialSet& target,
                         const std::function<SimplexRef(const SimplexRef&, const SimplexRef&)>& h);
/// f ∧ g.
SimplicialMap smash_map(const SmashSpace& source, const SmashSpace& target, const SimplicialMap& f,
                        const SimplicialMap& g);

/// s_{d−1} ⋯ s_0 v for a 0-cell v.
SimplexRef degenerate_vertex(CellId v, int d);
/// "s1s0.name" style label without spaces.
std::string compact_name(const SimplicialSet& x, const SimplexRef& s);

/// The constant map to the basepoint of a pointed target (or to its unique vertex).
SimplicialMap constant_map(const SimplicialSet& source, const SimplicialSet& target);

// ---------------------------------------------------------------------------
// Invariants

/// Connected components: component index of each 0-cell.
struct Components {
  std::vector<int> of_vertex;
  int count = 0;
};
Components pi0(const SimplicialSet& x);

/// Normalized chains (nondegenerate cells), or all simplices up to `cap` when
/// normalized is false. Pointed inputs give reduced chains when `reduced`.
ChainComplex chains(const SimplicialSet& x, bool normalized, std::optional<int> cap = {},
                    bool reduced = true);
/// Normalized chain map induced by f (unreduced).
ChainMap chain_map(const SimplicialMap& f);

/// Homology of normalized chains, reduced for pointed X.
HomologyGroup homology_space(const SimplicialSet& x, int n);
/// Unreduced homology of normalized chains.
HomologyGroup homology_unreduced(const SimplicialSet& x, int n);

}  // namespace skernel
