#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "skernel/bisimplicial.hpp"
#include "skernel/groupoid.hpp"
#include "skernel/simpset.hpp"

namespace skernel {

/// Wr(X) truncated at D, with its counit. Nondegenerate n-cells are the n-simplices
/// of X; for pointed X the degenerate basepoint simplices are identified with
/// degeneracies of the basepoint.
struct Wrapping {
  SimplicialSet object;
  SimplicialMap counit;
  int trunc_dim = 0;
  /// The cell of Wr(X) standing for the simplex x (basepoint degeneracies excluded).
  std::map<SimplexRef, CellId> cell_of;
  /// x viewed as a simplex of Wr(X).
  SimplexRef wrap_simplex(const SimplicialSet& x, const SimplexRef& s) const;
};

Wrapping wrap(const SimplicialSet& x, int trunc_dim);

struct SkeletonPushoutReport {
  bool ok = false;
  std::vector<std::size_t> pushout_cells;
  std::vector<std::size_t> skeleton_cells;
  std::string detail;
};

/// Checks that sk_{n+1} Wr(X) is the pushout of
/// sk_n Wr(X) ← X_{n+1} ∧ (∂Δ^{n+1})₊ → X_{n+1} ∧ (Δ^{n+1})₊.
SkeletonPushoutReport skeleton_pushout_check(const SimplicialSet& x, int n, int trunc_dim);

/// K ← f − K − g → M with pointed objects: f : K → L, g : K → M.
struct PushoutDiagram {
  SimplicialMap f;
  SimplicialMap g;
  const SimplicialSet& k() const { return f.source(); }
  const SimplicialSet& l() const { return f.target(); }
  const SimplicialSet& m() const { return g.target(); }
};

struct HomotopyPushout {
  Pushout pushout;        // (K∨K → K∧Δ¹₊) against (K∨K → M∨L)
  SmashSpace cylinder;    // K ∧ Δ¹₊
  Coproduct ends;         // K ∨ K
  Coproduct targets;      // M ∨ L
  SimplicialMap from_l;
  SimplicialMap from_m;
  const SimplicialSet& object() const { return pushout.object; }
};

/// The end of K∧Δ¹₊ at vertex 0 is glued to M along g, the end at vertex 1 to L along f.
HomotopyPushout homotopy_pushout(const PushoutDiagram& q);
/// K_Q → N induced by l : L → N and m : M → N with l∘f = m∘g.
SimplicialMap homotopy_pushout_map(const PushoutDiagram& q, const HomotopyPushout& hp,
                                   const SimplicialMap& l, const SimplicialMap& m);
/// K_Q → L ⊔_K M for injective f.
SimplicialMap strict_comparison(const PushoutDiagram& q, const HomotopyPushout& hp,
                                const Pushout& strict);

/// The bisimplicial object whose column n is M ∨ K^{∨n} ∨ L, in normal form.
BisimplicialSet bar_pushout_object(const PushoutDiagram& q);

struct CrossCheckReport {
  bool ok = false;
  std::vector<std::size_t> diagonal_cells;
  std::vector<std::size_t> pushout_cells;
  std::string detail;
};
/// Compares K_Q with the diagonal of bar_pushout_object cellwise.
CrossCheckReport homotopy_pushout_cross_check(const PushoutDiagram& q);

struct Cylinder {
  Pushout pushout;
  SmashSpace cylinder;
  SimplicialMap from_k;      // K → cyl(f), end 0
  SimplicialMap from_l;      // L → cyl(f)
  SimplicialMap retraction;  // cyl(f) → L
  const SimplicialSet& object() const { return pushout.object; }
};

/// cyl(f) = (K ∧ Δ¹₊) ⊔_K L along the end at vertex 1.
Cylinder cylinder(const SimplicialMap& f);

struct WeqCertificate {
  int range = 0;
  bool pi0_bijective = false;
  std::map<int, bool> homology_iso;
  /// "equal", "abelianized" or "skipped".
  std::string groupoid = "skipped";
  bool groupoid_consistent = true;
  /// order → (homs from source π₁, homs from target π₁); −1 when too large to count.
  std::map<int, std::pair<long long, long long>> quotients;

  bool pass() const;
  std::string summary() const;
};

WeqCertificate weq_certificate(const SimplicialMap& f, int range);

}  // namespace skernel
