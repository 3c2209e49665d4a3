#pragma once

#include <compare>
#include <vector>

// Order-preserving maps between the finite ordinals [n] = {0, ..., n}.
namespace skernel::delta {

/// θ : [source()] → [target], θ(i) = values[i], nondecreasing.
struct Map {
  int target = 0;
  std::vector<int> values;

  int source() const { return static_cast<int>(values.size()) - 1; }
  bool is_identity() const;
  bool is_surjective() const;
  bool is_injective() const;

  friend auto operator<=>(const Map&, const Map&) = default;
};

Map identity(int n);
/// δⁱ : [n−1] → [n], the injection missing i.
Map coface(int n, int i);
/// σʲ : [n+1] → [n], the surjection hitting j twice.
Map codegeneracy(int n, int j);

/// a ∘ b (apply b first).
Map compose(const Map& a, const Map& b);

/// Unique factorization θ = injection ∘ surjection.
struct EpiMono {
  Map surjection;
  Map injection;
};
EpiMono factor(const Map& theta);

/// Degeneracy word i₁ > i₂ > … of a surjection η : [n] ↠ [p]: the positions j
/// with η(j) = η(j+1), listed descending, so that η* = s_{i₁} ⋯ s_{i_k}.
std::vector<int> word_of(const Map& surjection);
/// Surjection [p + word.size()] ↠ [p] with the given (descending) word.
Map surjection_of(const std::vector<int>& word, int p);

/// All surjections [n] ↠ [k], lexicographic in their value sequences.
std::vector<Map> surjections(int n, int k);
/// All injections [k] ↪ [n], lexicographic in their value sequences.
std::vector<Map> injections(int k, int n);

/// A (p,q)-shuffle: μ ⊔ ν = {0, …, p+q−1}, |μ| = p, |ν| = q, with the sign
/// of the permutation (μ₁ … μ_p ν₁ … ν_q).
struct Shuffle {
  std::vector<int> mu;
  std::vector<int> nu;
  int sign = 1;
};
std::vector<Shuffle> shuffles(int p, int q);

/// Subsets of {0, …, n−1} of size k, each ascending, in lexicographic order.
std::vector<std::vector<int>> subsets(int n, int k);

}  // namespace skernel::delta
