#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "skernel/chain.hpp"
#include "skernel/simpab.hpp"
#include "skernel/simpset.hpp"

// Seeded instance generators. The engine is mt19937_64 and every draw maps a raw
// 64-bit output to [lo, hi] by reduction modulo the range width, so a seed fixes
// every instance on every platform.
namespace skernel::sample {

using Rng = std::mt19937_64;

long long uniform(Rng& rng, long long lo, long long hi);

IntMatrix matrix(Rng& rng, std::size_t rows, std::size_t cols, long long bound);

/// Product of random elementary row operations, swaps and sign changes.
IntMatrix unimodular(Rng& rng, std::size_t n);

struct ComplexShape {
  int min_deg = 0;
  int max_deg = 3;
  std::size_t max_rank = 3;
  long long bound = 3;
};

/// A complex with the degree range and ranks drawn inside `shape`. Each d(n) is a
/// random combination of a kernel basis of d(n−1), redrawn until its entries lie
/// in [−bound, bound] (zero after a fixed number of misses).
ChainComplex chain_complex(Rng& rng, const ComplexShape& shape);

/// K(C) for a random C with degrees in 0..max_deg, conjugated levelwise by random
/// unimodular changes of basis.
SimplicialAbGroup simplicial_group(Rng& rng, int trunc_dim, const ComplexShape& shape);

/// Pointed set of dimension ≤ 2: base "*", vertices "v*", edges "e*" and
/// triangles "t*" whose faces are drawn among existing edges or degenerate ones.
SimplicialSet pointed_set(Rng& rng);

/// The faces ∂_i x (i ≠ k) of a random x ∈ A_n, with slot k empty.
struct Horn {
  int n = 1;
  int k = 0;
  std::vector<std::optional<IntVector>> faces;
};
Horn horn(Rng& rng, const SimplicialAbGroup& a, int max_n);

}  // namespace skernel::sample
