#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "skernel/chain.hpp"
#include "skernel/error.hpp"
#include "skernel/random.hpp"
#include "skernel/simpset.hpp"

using namespace skernel;

namespace {

// [Z --(×2)--> Z] in degrees 1, 0.
ChainComplex times_two() { return ChainComplex(0, 1, {1, 1}, {{1, IntMatrix::from_rows({{2}})}}); }

// [Z --id--> Z] in degrees 0, −1.
ChainComplex identity_pair() { return ChainComplex(-1, 0, {1, 1}, {{0, IntMatrix::identity(1)}}); }

HomologyGroup z() { return HomologyGroup::free(1); }
HomologyGroup zmod(long long n) { return HomologyGroup{0, {Integer(n)}}; }

bool acyclic(const ChainComplex& c) {
  for (int n = c.min_deg(); n <= c.max_deg(); ++n)
    if (!homology(c, n).is_zero()) return false;
  return true;
}

// Hom•(K, L) written out from the product formula: basis (i, row, col) of
// Hom(K_i, L_{i+n}), i ascending, row-major; (df) = d_L f − (−1)^n f d_K.
ChainComplex hom_by_expansion(const ChainComplex& k, const ChainComplex& l) {
  const int lo = l.min_deg() - k.max_deg(), hi = l.max_deg() - k.min_deg();
  struct Entry {
    int i;
    std::size_t row, col;
  };
  std::map<int, std::vector<Entry>> basis;
  for (int n = lo; n <= hi; ++n)
    for (int i = k.min_deg(); i <= k.max_deg(); ++i)
      for (std::size_t r = 0; r < l.rank(i + n); ++r)
        for (std::size_t c = 0; c < k.rank(i); ++c) basis[n].push_back({i, r, c});
  std::vector<std::size_t> ranks;
  for (int n = lo; n <= hi; ++n) ranks.push_back(basis[n].size());
  std::map<int, IntMatrix> d;
  for (int n = lo + 1; n <= hi; ++n) {
    IntMatrix m(basis[n - 1].size(), basis[n].size());
    const int sign = n % 2 == 0 ? 1 : -1;
    for (std::size_t col = 0; col < basis[n].size(); ++col) {
      const Entry e = basis[n][col];
      // f = E_{row,col} : K_i → L_{i+n}.
      for (std::size_t row = 0; row < basis[n - 1].size(); ++row) {
        const Entry t = basis[n - 1][row];
        Integer v = 0;
        // d_L f lands in Hom(K_i, L_{i+n−1}).
        if (t.i == e.i && t.col == e.col && l.rank(e.i + n - 1) > 0)
          v += l.d(e.i + n)(t.row, e.row);
        // f d_K lands in Hom(K_{i+1}, L_{i+n}).
        if (t.i == e.i + 1 && t.row == e.row && k.rank(e.i + 1) > 0)
          v -= sign * k.d(e.i + 1)(e.col, t.col);
        m(row, col) = v;
      }
    }
    d[n] = m;
  }
  return ChainComplex(lo, hi, ranks, d);
}

// Classes of chain maps K → L with entries in [−b, b], modulo homotopies with
// entries in [−b, b]; returns the number of classes met.
std::size_t enumerate_homotopy_classes(const ChainComplex& k, const ChainComplex& l, int b) {
  struct Slot {
    int n;
    std::size_t r, c;
  };
  auto slots_for = [&](int shift) {
    std::vector<Slot> s;
    for (int n = k.min_deg(); n <= k.max_deg(); ++n)
      for (std::size_t r = 0; r < l.rank(n + shift); ++r)
        for (std::size_t c = 0; c < k.rank(n); ++c) s.push_back({n, r, c});
    return s;
  };
  auto all_assignments = [&](const std::vector<Slot>& slots, int shift) {
    std::vector<std::map<int, IntMatrix>> out;
    std::vector<int> v(slots.size(), -b);
    while (true) {
      std::map<int, IntMatrix> m;
      for (int n = k.min_deg(); n <= k.max_deg(); ++n) m[n] = IntMatrix(l.rank(n + shift), k.rank(n));
      for (std::size_t s = 0; s < slots.size(); ++s) m[slots[s].n](slots[s].r, slots[s].c) = v[s];
      out.push_back(std::move(m));
      std::size_t s = 0;
      while (s < v.size() && v[s] == b) v[s++] = -b;
      if (s == v.size()) break;
      ++v[s];
    }
    return out;
  };
  auto dk = [&](int n) { return k.rank(n) && k.rank(n - 1) ? k.d(n) : IntMatrix(k.rank(n - 1), k.rank(n)); };
  auto dl = [&](int n) { return l.rank(n) && l.rank(n - 1) ? l.d(n) : IntMatrix(l.rank(n - 1), l.rank(n)); };
  std::vector<std::map<int, IntMatrix>> maps;
  for (auto& f : all_assignments(slots_for(0), 0)) {
    bool chain = true;
    for (int n = k.min_deg() + 1; n <= k.max_deg(); ++n)
      chain = chain && dl(n) * f[n] == f[n - 1] * dk(n);
    if (chain) maps.push_back(std::move(f));
  }
  std::vector<std::map<int, IntMatrix>> nulls;
  for (auto& h : all_assignments(slots_for(1), 1)) {
    std::map<int, IntMatrix> g;
    for (int n = k.min_deg(); n <= k.max_deg(); ++n) {
      IntMatrix v = dl(n + 1) * h[n];
      if (n - 1 >= k.min_deg()) v = v + h[n - 1] * dk(n);
      g[n] = v;
    }
    nulls.push_back(std::move(g));
  }
  std::vector<std::size_t> rep;
  for (std::size_t a = 0; a < maps.size(); ++a) {
    bool fresh = true;
    for (std::size_t r : rep) {
      for (const auto& nh : nulls) {
        bool same = true;
        for (int n = k.min_deg(); n <= k.max_deg() && same; ++n) same = maps[a][n] - maps[r][n] == nh.at(n);
        if (same) {
          fresh = false;
          break;
        }
      }
      if (!fresh) break;
    }
    if (fresh) rep.push_back(a);
  }
  return rep.size();
}

}  // namespace

TEST_CASE("homology of [Z -2-> Z]") {
  const ChainComplex c = times_two();
  CHECK(homology(c, 0) == zmod(2));
  CHECK(homology(c, 1).is_zero());
  CHECK(homology(c, 0).to_string() == "Z/2");
}

TEST_CASE("zero differentials give the ranks back") {
  const ChainComplex c(0, 2, {1, 2, 1});
  CHECK(homology(c, 0) == z());
  CHECK(homology(c, 1) == HomologyGroup::free(2));
  CHECK(homology(c, 2) == z());
  CHECK(homology(c, 1).to_string() == "Z^2");
}

TEST_CASE("chains of the boundary of the 3-simplex") {
  const ChainComplex c = chains(simplex_boundary(3), true, std::nullopt, false);
  CHECK(homology(c, 0) == z());
  CHECK(homology(c, 1).is_zero());
  CHECK(homology(c, 2) == z());
}

TEST_CASE("homology agrees with the elimination oracle on random complexes") {
  sample::Rng rng(21);
  for (int t = 0; t < 100; ++t) {
    const ChainComplex c = sample::chain_complex(rng, {-2, 3, 4, 4});
    for (int n = c.min_deg(); n <= c.max_deg(); ++n) CHECK(homology(c, n) == oracle::homology(c, n));
  }
}

TEST_CASE("group printing") {
  CHECK(HomologyGroup{}.to_string() == "0");
  CHECK(HomologyGroup{2, {Integer(2), Integer(6)}}.to_string() == "Z^2 + Z/2 + Z/6");
  CHECK(HomologyGroup::from_invariants(3, {Integer(1), Integer(4)}) == HomologyGroup{1, {Integer(4)}});
}

TEST_CASE("shift") {
  const ChainComplex c = times_two();
  CHECK(shift(c, 0) == c);
  CHECK(shift(shift(c, 3), -3) == c);
  const ChainComplex s = shift(ChainComplex::concentrated(0), 3);
  for (int n = -1; n <= 5; ++n) CHECK(homology(s, n) == (n == 3 ? z() : HomologyGroup{}));
  CHECK(shift(c, 1).d(2) == IntMatrix::from_rows({{-2}}));
}

TEST_CASE("good truncation") {
  const ChainComplex c(0, 2, {1, 2, 1}, {{1, IntMatrix(1, 2)}, {2, IntMatrix(2, 1)}});
  const ChainComplex t = truncate_good(c, 0);
  for (int n = 0; n <= 2; ++n) {
    CHECK(t.rank(n) == c.rank(n));
    CHECK(homology(t, n) == homology(c, n));
  }
  CHECK(acyclic(truncate_good(identity_pair(), 0)));
  for (int n = -1; n <= 1; ++n) CHECK(truncate_good(identity_pair(), 0).rank(n) == 0);
  const ChainComplex t1 = truncate_good(times_two(), 1);
  for (int n = -1; n <= 2; ++n) CHECK(t1.rank(n) == 0);
}

TEST_CASE("stupid truncation") {
  const ChainComplex c = times_two();
  CHECK(truncate_stupid(c, c.max_deg()) == c);
  const ChainComplex below = truncate_stupid(c, -1);
  for (int n = -1; n <= 1; ++n) CHECK(below.rank(n) == 0);
  const ChainComplex t0 = truncate_stupid(c, 0);
  CHECK(t0.rank(0) == 1);
  CHECK(t0.rank(1) == 0);
  CHECK(homology(t0, 0) == z());
}

TEST_CASE("tensor product units and degrees") {
  sample::Rng rng(4);
  const ChainComplex c = sample::chain_complex(rng, {0, 3, 3, 3});
  CHECK(tensor(c, ChainComplex::concentrated(0)) == c);
  const ChainComplex pq = tensor(ChainComplex::concentrated(2), ChainComplex::concentrated(3));
  for (int n = 0; n <= 6; ++n) CHECK(homology(pq, n) == (n == 5 ? z() : HomologyGroup{}));
}

TEST_CASE("tensor square of [Z -2-> Z] follows the Kunneth formula") {
  const ChainComplex m = times_two();
  const ChainComplex mm = tensor(m, m);
  CHECK(homology(mm, 0) == zmod(2));
  CHECK(homology(mm, 1) == zmod(2));
  CHECK(homology(mm, 2).is_zero());
  auto hm = [&](int n) { return homology(m, n); };
  for (int n = 0; n <= 2; ++n) CHECK(homology(mm, n) == oracle::kunneth(hm, hm, 0, 0, n));
}

TEST_CASE("tensor products of random complexes follow the Kunneth formula") {
  sample::Rng rng(8);
  for (int t = 0; t < 30; ++t) {
    const ChainComplex a = sample::chain_complex(rng, {-1, 2, 2, 3});
    const ChainComplex b = sample::chain_complex(rng, {-1, 2, 2, 3});
    const ChainComplex ab = tensor(a, b);
    auto ha = [&](int n) { return homology(a, n); };
    auto hb = [&](int n) { return homology(b, n); };
    for (int n = ab.min_deg(); n <= ab.max_deg(); ++n)
      CHECK(homology(ab, n) == oracle::kunneth(ha, hb, a.min_deg(), b.min_deg(), n));
  }
}

TEST_CASE("Hom complex of Z with itself") {
  const ChainComplex z0 = ChainComplex::concentrated(0);
  const ChainComplex h = hom_complex(z0, z0);
  CHECK(h.rank(0) == 1);
  CHECK(homology(h, 0) == z());
}

TEST_CASE("Hom complex of [Z -2-> Z] into Z") {
  const ChainComplex h = hom_complex(times_two(), ChainComplex::concentrated(0));
  CHECK(h.rank(0) == 1);
  CHECK(h.rank(-1) == 1);
  // d f = d_L f − f d_K in degree 0, so the differential is multiplication by −2.
  CHECK(h.d(0) == IntMatrix::from_rows({{-2}}));
  CHECK(h == hom_by_expansion(times_two(), ChainComplex::concentrated(0)));
  CHECK(homology(h, -1) == zmod(2));
}

TEST_CASE("Hom complex matches the expanded product formula") {
  sample::Rng rng(12);
  for (int t = 0; t < 40; ++t) {
    const ChainComplex k = sample::chain_complex(rng, {-1, 2, 2, 3});
    const ChainComplex l = sample::chain_complex(rng, {-1, 2, 2, 3});
    CHECK(hom_complex(k, l) == hom_by_expansion(k, l));
  }
}

TEST_CASE("Hom complex is additive in the source") {
  sample::Rng rng(13);
  for (int t = 0; t < 10; ++t) {
    const ChainComplex k = sample::chain_complex(rng, {0, 2, 2, 3});
    const ChainComplex k2 = sample::chain_complex(rng, {0, 2, 2, 3});
    const ChainComplex l = sample::chain_complex(rng, {0, 2, 2, 3});
    const ChainComplex sum = hom_complex(direct_sum(k, k2), l);
    const ChainComplex a = hom_complex(k, l), b = hom_complex(k2, l);
    for (int n = sum.min_deg(); n <= sum.max_deg(); ++n) CHECK(sum.rank(n) == a.rank(n) + b.rank(n));
  }
}

TEST_CASE("homotopy classes of maps") {
  const ChainComplex z0 = ChainComplex::concentrated(0);
  CHECK(homotopy_class_group(z0, z0) == z());
  CHECK(enumerate_homotopy_classes(z0, z0, 4) == 9);
  CHECK(homotopy_class_group(times_two(), z0).is_zero());
  CHECK(enumerate_homotopy_classes(times_two(), z0, 4) == 1);
  const ChainComplex zz = direct_sum(times_two(), times_two());
  CHECK(homotopy_class_group(direct_sum(z0, z0), z0) == HomologyGroup::free(2));
  CHECK(homotopy_class_group(zz, z0).is_zero());
}

TEST_CASE("homotopy classes into [Z -2-> Z] from Z") {
  const ChainComplex z0 = ChainComplex::concentrated(0);
  // Maps Z → [Z -2-> Z] in degree 0 are multiples of the generator; those of 2 are null.
  CHECK(homotopy_class_group(z0, times_two()) == zmod(2));
  CHECK(enumerate_homotopy_classes(z0, times_two(), 4) == 2);
}

TEST_CASE("quasi-isomorphism checks") {
  sample::Rng rng(2);
  const ChainComplex c = sample::chain_complex(rng, {0, 3, 3, 3});
  CHECK(check_quasi_iso(ChainMap::identity(c)).quasi_iso);
  const ChainComplex m = times_two();
  CHECK_FALSE(check_quasi_iso(ChainMap::zero(m, m)).quasi_iso);
}

TEST_CASE("the good truncation includes quasi-isomorphically above the cut") {
  sample::Rng rng(17);
  for (int t = 0; t < 30; ++t) {
    const ChainComplex c = sample::chain_complex(rng, {-2, 3, 3, 3});
    const ChainComplex tc = truncate_good(c, 0);
    std::map<int, IntMatrix> comps;
    for (int n = tc.min_deg(); n <= tc.max_deg(); ++n) {
      if (n < 0) continue;
      comps[n] = n == 0 ? good_truncation_inclusion(c, 0) : IntMatrix::identity(c.rank(n));
    }
    const ChainMap inc(tc, c, comps);
    for (int n = std::max(0, c.min_deg()); n <= c.max_deg(); ++n) {
      CHECK(homology_map(inc, n).iso());
      CHECK(homology(tc, n) == homology(c, n));
    }
  }
}

TEST_CASE("mapping cone of the identity is acyclic") {
  sample::Rng rng(31);
  const ChainComplex c = sample::chain_complex(rng, {-1, 3, 3, 3});
  CHECK(acyclic(mapping_cone(ChainMap::identity(c))));
}

TEST_CASE("tower of a complex concentrated in degree 0") {
  const TowerReport r = sigma_tower_report(ChainComplex::concentrated(0), ChainComplex::concentrated(0));
  CHECK(r.stabilization_index == 0);
  CHECK(r.lim1_vanishes);
  CHECK(r.exactness_verified);
  CHECK(r.limit_group == z());
}

TEST_CASE("tower of [Z -> Z] stabilizes at 1") {
  const TowerReport r = sigma_tower_report(times_two(), ChainComplex::concentrated(0));
  CHECK(r.stabilization_index == 1);
  CHECK(r.exactness_verified);
  CHECK(r.hom_full.is_zero());
  REQUIRE(r.tower.size() == 2);
  CHECK(r.tower[0].second == z());
}

TEST_CASE("random towers: limit equals the directly computed homotopy classes") {
  sample::Rng rng(41);
  for (int t = 0; t < 50; ++t) {
    const ChainComplex k = sample::chain_complex(rng, {-1, 3, 2, 3});
    const ChainComplex l = sample::chain_complex(rng, {-1, 3, 2, 3});
    const TowerReport r = sigma_tower_report(k, l);
    CHECK(r.exactness_verified);
    CHECK(r.lim1_vanishes);
    CHECK(r.limit_group == homotopy_class_group(k, l));
  }
}

TEST_CASE("a non-composable differential is rejected with its degree") {
  CHECK_THROWS_WITH_AS(ChainComplex(0, 2, {1, 1, 1}, {{1, IntMatrix::from_rows({{1}})}, {2, IntMatrix::from_rows({{1}})}}),
                       doctest::Contains("d(1)"), StructuralError);
}
