#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skernel/chain.hpp"
#include "skernel/simpset.hpp"

namespace skernel {

/// Simplicial abelian group truncated at dimension D, free of finite rank in
/// each level. face(n, i): A_n → A_{n−1} for 1 ≤ n ≤ D; degen(n, j): A_n → A_{n+1}
/// for n < D.
class SimplicialAbGroup {
 public:
  using Key = std::pair<int, int>;

  SimplicialAbGroup() = default;
  /// Validates shapes and the simplicial identities unless `check` is false.
  SimplicialAbGroup(int trunc_dim, std::vector<std::size_t> ranks, std::map<Key, IntMatrix> faces,
                    std::map<Key, IntMatrix> degens, bool check = true);

  static SimplicialAbGroup constant(std::size_t rank, int trunc_dim);

  int trunc_dim() const { return trunc_; }
  std::size_t rank(int n) const;
  const IntMatrix& face(int n, int i) const;
  const IntMatrix& degen(int n, int j) const;
  /// θ* : A_n → A_m for θ : [m] → [n] with m, n ≤ D.
  IntMatrix pullback(const delta::Map& theta) const;

  /// Throws StructuralError naming the first violated identity.
  void validate() const;

  friend bool operator==(const SimplicialAbGroup&, const SimplicialAbGroup&) = default;

 private:
  int trunc_ = 0;
  std::vector<std::size_t> ranks_;
  std::map<Key, IntMatrix> faces_;
  std::map<Key, IntMatrix> degens_;
};

/// The Moore complex with the bases used to compute it.
struct Normalization {
  ChainComplex complex;             // degrees 0..D
  std::vector<IntMatrix> basis;     // basis[n]: columns spanning N_n inside A_n
  std::vector<IntMatrix> projector; // projector[n]: A_n → N_n killing degeneracies
};

Normalization normalization(const SimplicialAbGroup& a);
/// N(A)_n = ∩_{i≥1} ker ∂_i with differential ∂₀.
ChainComplex normalize_N(const SimplicialAbGroup& a);

/// K(τ≥0 C) truncated at D. Level n is ⊕ C_k over surjections [n] ↠ [k], ordered
/// by k then lexicographically.
SimplicialAbGroup dold_kan_K(const ChainComplex& c, int trunc_dim);
/// Offsets of the summands of level n of K(C), as (surjection, offset).
std::vector<std::pair<delta::Map, std::size_t>> dold_kan_summands(const ChainComplex& c, int n);

/// A_n with differential Σ(−1)ⁱ∂_i, degrees 0..D.
ChainComplex unnormalized_complex(const SimplicialAbGroup& a);

/// Basis of Z̃(X)_n: the n-simplices of X other than the degenerate basepoint.
std::vector<SimplexRef> reduced_basis(const SimplicialSet& x, int n);
SimplicialAbGroup free_reduced_Z(const SimplicialSet& x, int trunc_dim);

/// Diagonal of the bisimplicial group with (p,q)-level A_qᵖ.
SimplicialAbGroup bar_B(const SimplicialAbGroup& a);

/// Levelwise tensor product; truncation is the smaller of the two.
SimplicialAbGroup tensor(const SimplicialAbGroup& a, const SimplicialAbGroup& b);

/// Eilenberg–Zilber maps between σ≤D(N(A) ⊗ N(B)) and N(A ⊗ B).
struct EZPair {
  ChainMap shuffle;
  ChainMap aw;
};
EZPair ez_maps(const SimplicialAbGroup& a, const SimplicialAbGroup& b);
/// aw ∘ shuffle = id in every degree.
bool ez_strict(const EZPair& ez);

/// Element of A_n with ∂_i x = faces[i] for i ≠ k; faces[k] must be empty.
IntVector horn_filler(const SimplicialAbGroup& a, int n, int k,
                      const std::vector<std::optional<IntVector>>& faces);

/// π_i = H_i(N(A)), for 0 ≤ i ≤ D−1.
HomologyGroup homotopy_groups(const SimplicialAbGroup& a, int i);

/// The levelwise map Z̃(E) ⊗ Z̃(F) → Z̃(E ∧ F), (e, f) ↦ [e, f].
struct SmashTensorReport {
  bool levelwise_iso = true;
  bool commutes = true;
  std::vector<IntMatrix> maps;
  std::string detail;
  bool ok() const { return levelwise_iso && commutes; }
};
SmashTensorReport smash_tensor_comparison(const SimplicialSet& e, const SimplicialSet& f,
                                          int trunc_dim);

struct DoldKanReport {
  bool ok = true;
  std::string detail;
};
/// N(K(C)) ≅ τ≥0 C through the inclusion of the identity summands, in degrees ≤ D.
DoldKanReport check_NK(const ChainComplex& c, int trunc_dim);
/// K(N(A)) ≅ A through Φ(σ, x) = σ*(x), levelwise unimodular and conjugating all structure maps.
DoldKanReport check_KN(const SimplicialAbGroup& a);

}  // namespace skernel
