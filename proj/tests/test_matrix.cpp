#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "skernel/matrix.hpp"
#include "skernel/random.hpp"

using namespace skernel;

namespace {

bool is_smith(const IntMatrix& m, const SmithForm& s) {
  if (!(s.U * m * s.V == s.D)) return false;
  if (!is_unimodular(s.U) || !is_unimodular(s.V)) return false;
  for (std::size_t r = 0; r < s.D.rows(); ++r)
    for (std::size_t c = 0; c < s.D.cols(); ++c)
      if (r != c && s.D(r, c) != 0) return false;
  return true;
}

std::vector<Integer> diagonal(const IntMatrix& d) {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i) out.push_back(d(i, i));
  return out;
}

}  // namespace

TEST_CASE("smith form of the identity is the identity") {
  const IntMatrix id = IntMatrix::identity(3);
  const SmithForm s = smith_normal_form(id);
  CHECK(s.D == id);
  CHECK(is_smith(id, s));
}

TEST_CASE("smith form of a zero matrix") {
  const IntMatrix z = IntMatrix::from_rows({{0}});
  CHECK(smith_normal_form(z).D == z);
  CHECK(invariant_factors(z).empty());
}

TEST_CASE("smith form of [[2,4],[6,8]]") {
  const IntMatrix m = IntMatrix::from_rows({{2, 4}, {6, 8}});
  const SmithForm s = smith_normal_form(m);
  CHECK(is_smith(m, s));
  const std::vector<Integer> expected = oracle::smith_diagonal(oracle::rows_of(m));
  CHECK(diagonal(s.D) == expected);
  CHECK(expected == std::vector<Integer>{2, 4});
  CHECK(expected[0] * expected[1] == abs(oracle::determinant(oracle::rows_of(m))));
}

TEST_CASE("smith form agrees with the elimination oracle on random matrices") {
  sample::Rng rng(7);
  for (int t = 0; t < 300; ++t) {
    const auto r = static_cast<std::size_t>(sample::uniform(rng, 1, 6));
    const auto c = static_cast<std::size_t>(sample::uniform(rng, 1, 6));
    const IntMatrix m = sample::matrix(rng, r, c, 9);
    const SmithForm s = smith_normal_form(m);
    REQUIRE(is_smith(m, s));
    CHECK(diagonal(s.D) == oracle::smith_diagonal(oracle::rows_of(m)));
  }
}

TEST_CASE("invariant factors drop zeros and keep units") {
  const IntMatrix m = IntMatrix::from_rows({{1, 0, 0}, {0, 6, 0}, {0, 0, 0}, {0, 0, 4}});
  CHECK(invariant_factors(m) == std::vector<Integer>{1, 2, 12});
}

TEST_CASE("determinant matches the fraction-free oracle") {
  sample::Rng rng(11);
  for (int t = 0; t < 100; ++t) {
    const auto n = static_cast<std::size_t>(sample::uniform(rng, 1, 5));
    const IntMatrix m = sample::matrix(rng, n, n, 5);
    CHECK(determinant(m) == oracle::determinant(oracle::rows_of(m)));
  }
}

TEST_CASE("kernel basis is saturated and complete") {
  sample::Rng rng(3);
  for (int t = 0; t < 100; ++t) {
    const auto r = static_cast<std::size_t>(sample::uniform(rng, 1, 4));
    const auto c = static_cast<std::size_t>(sample::uniform(rng, 1, 5));
    const IntMatrix m = sample::matrix(rng, r, c, 3);
    const IntMatrix k = kernel_basis(m);
    CHECK((m * k).is_zero());
    CHECK(k.cols() == c - rank(m));
    // Saturated: the invariant factors of the basis are all 1.
    for (const auto& f : invariant_factors(k)) CHECK(f == 1);
  }
}

TEST_CASE("solving in a lattice") {
  const IntMatrix basis = IntMatrix::from_rows({{2, 0}, {0, 3}, {0, 0}});
  const auto x = solve_in_lattice(basis, IntMatrix::from_rows({{4}, {-3}, {0}}));
  REQUIRE(x);
  CHECK(*x == IntMatrix::from_rows({{2}, {-1}}));
  CHECK_FALSE(solve_in_lattice(basis, IntMatrix::from_rows({{1}, {0}, {0}})));
}

TEST_CASE("unimodular matrices invert over the integers") {
  sample::Rng rng(5);
  for (int t = 0; t < 50; ++t) {
    const auto n = static_cast<std::size_t>(sample::uniform(rng, 0, 5));
    const IntMatrix u = sample::unimodular(rng, n);
    const auto inv = unimodular_inverse(u);
    REQUIRE(inv);
    CHECK(u * *inv == IntMatrix::identity(n));
  }
  CHECK_FALSE(unimodular_inverse(IntMatrix::from_rows({{2}})));
}

TEST_CASE("large entries stay exact") {
  Integer big = 1;
  for (int i = 0; i < 40; ++i) big *= 10;
  IntMatrix m(2, 2);
  m(0, 0) = big;
  m(1, 1) = big * 6;
  CHECK(invariant_factors(m) == std::vector<Integer>{big, big * 6});
}
