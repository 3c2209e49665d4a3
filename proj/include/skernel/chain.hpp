#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "skernel/matrix.hpp"

namespace skernel {

/// A finitely generated abelian group Zʳ ⊕ Z/t₁ ⊕ … ⊕ Z/t_k with t₁ | t₂ | … and every tᵢ ≥ 2.
struct HomologyGroup {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;

  bool is_zero() const { return free_rank == 0 && torsion.empty(); }
  /// "0", "Z", "Z^2 + Z/2", "Z/2 + Z/4", ...
  std::string to_string() const;

  /// Builds the group Zⁿ / (lattice with the given invariant factors); units are dropped.
  static HomologyGroup from_invariants(std::size_t ambient_rank,
                                       const std::vector<Integer>& invariant_factors);
  static HomologyGroup free(std::size_t r) { return HomologyGroup{r, {}}; }

  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

/// Bounded, homologically graded complex of finitely generated free abelian
/// groups. d(n): C_n → C_{n−1} has shape rank(n−1) × rank(n). The composite of
/// adjacent differentials is checked at construction.
class ChainComplex {
 public:
  /// The zero complex, placed in degree 0.
  ChainComplex();
  /// `differentials` may omit degrees whose differential is zero.
  ChainComplex(int min_deg, int max_deg, std::vector<std::size_t> ranks,
               std::map<int, IntMatrix> differentials = {});

  static ChainComplex concentrated(int degree, std::size_t rank = 1);

  int min_deg() const { return min_; }
  int max_deg() const { return max_; }
  std::size_t rank(int n) const;
  /// Zero-shaped matrices are returned outside the stored range.
  const IntMatrix& d(int n) const;
  /// Highest degree of nonzero rank, or min_deg() if every rank is zero.
  int top_nonzero_degree() const;
  long long euler_characteristic() const;

  friend bool operator==(const ChainComplex&, const ChainComplex&) = default;

 private:
  int min_ = 0;
  int max_ = 0;
  std::vector<std::size_t> ranks_;
  std::vector<IntMatrix> d_;  // d_[k] = d(min_ + k), k = 0 .. (max_ - min_ + 1)
  IntMatrix empty_;
};

/// Degree-preserving map commuting with the differentials, checked at construction.
class ChainMap {
 public:
  ChainMap(ChainComplex source, ChainComplex target, std::map<int, IntMatrix> components);

  static ChainMap identity(const ChainComplex& c);
  static ChainMap zero(const ChainComplex& source, const ChainComplex& target);

  const ChainComplex& source() const { return source_; }
  const ChainComplex& target() const { return target_; }
  /// Matrix of shape target.rank(n) × source.rank(n); zero if not stored.
  IntMatrix component(int n) const;

 private:
  ChainComplex source_;
  ChainComplex target_;
  std::map<int, IntMatrix> components_;
};

HomologyGroup homology(const ChainComplex& c, int n);

/// C[p]_n = C_{n−p}, with differential (−1)^p d_C.
ChainComplex shift(const ChainComplex& c, int p);

/// τ≥n: C above n, ker d_n in degree n, zero below.
ChainComplex truncate_good(const ChainComplex& c, int n);
/// The kernel basis used by truncate_good in degree n, as columns in C_n.
IntMatrix good_truncation_inclusion(const ChainComplex& c, int n);

/// σ≤n: C in degrees ≤ n, zero above.
ChainComplex truncate_stupid(const ChainComplex& c, int n);

ChainComplex direct_sum(const ChainComplex& a, const ChainComplex& b);

/// Graded tensor product with d(a⊗b) = da⊗b + (−1)^{|a|} a⊗db. Degree n of the
/// result is ordered by the degree i of the first factor, ascending, and within a
/// block by (index in A_i) * rank(B_{n−i}) + (index in B_{n−i}).
ChainComplex tensor(const ChainComplex& a, const ChainComplex& b);
/// (i, offset) of each nonzero-rank block of degree n of tensor(a, b).
std::vector<std::pair<int, std::size_t>> tensor_blocks(const ChainComplex& a,
                                                       const ChainComplex& b, int n);

/// Hom•(K,L)_n = ∏ᵢ Hom(K_i, L_{i+n}), (df) = d_L f − (−1)^n f d_K. Maps are
/// flattened row-major, blocks ordered by i ascending.
ChainComplex hom_complex(const ChainComplex& k, const ChainComplex& l);

/// H₀ Hom•(K,L): chain maps K → L modulo chain homotopy.
HomologyGroup homotopy_class_group(const ChainComplex& k, const ChainComplex& l);

ChainComplex mapping_cone(const ChainMap& f);
ChainMap compose(const ChainMap& g, const ChainMap& f);

/// Behaviour of H_n(f) as a map of abelian groups.
struct HomologyMapVerdict {
  int degree = 0;
  HomologyGroup source;
  HomologyGroup target;
  bool injective = false;
  bool surjective = false;
  bool iso() const { return injective && surjective; }
};

HomologyMapVerdict homology_map(const ChainMap& f, int n);

struct QuasiIsoReport {
  bool quasi_iso = true;
  std::vector<HomologyMapVerdict> degrees;
  std::string to_string() const;
};

QuasiIsoReport check_quasi_iso(const ChainMap& f);

/// Homology of the σ≤n tower of Hom(−, L) for a bounded K.
struct TowerReport {
  int stabilization_index = 0;
  std::vector<std::pair<int, HomologyGroup>> tower;  // (n, Hom_K(σ≤n K, L))
  HomologyGroup limit_group;
  bool lim1_vanishes = false;
  HomologyGroup hom_full;
  bool exactness_verified = false;
};

TowerReport sigma_tower_report(const ChainComplex& k, const ChainComplex& l);

}  // namespace skernel
