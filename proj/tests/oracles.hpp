#pragma once

// Slow, independent reference computations used to check the library.

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "skernel/chain.hpp"

namespace oracle {

using Int = boost::multiprecision::cpp_int;
using Rows = std::vector<std::vector<Int>>;

inline Rows rows_of(const skernel::IntMatrix& m) {
  Rows out(m.rows(), std::vector<Int>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m(r, c);
  return out;
}

// Diagonal of the Smith form by repeated gcd row/column elimination.
inline std::vector<Int> smith_diagonal(Rows m) {
  const std::size_t nr = m.size(), nc = nr ? m[0].size() : 0;
  std::vector<Int> diag;
  for (std::size_t t = 0; t < std::min(nr, nc); ++t) {
    // Smallest nonzero entry of the remaining block goes to (t, t).
    auto bring_min = [&](bool whole) {
      std::size_t br = nr, bc = nc;
      for (std::size_t r = t; r < nr; ++r)
        for (std::size_t c = t; c < nc; ++c) {
          if (!whole && r != t && c != t) continue;
          if (m[r][c] != 0 && (br == nr || abs(m[r][c]) < abs(m[br][bc]))) {
            br = r;
            bc = c;
          }
        }
      if (br == nr) return false;
      std::swap(m[t], m[br]);
      for (auto& row : m) std::swap(row[t], row[bc]);
      return true;
    };
    if (!bring_min(true)) break;
    while (true) {
      bool clean = true;
      for (std::size_t r = t + 1; r < nr; ++r) {
        const Int q = m[r][t] / m[t][t];
        for (std::size_t c = t; c < nc; ++c) m[r][c] -= q * m[t][c];
        clean = clean && m[r][t] == 0;
      }
      for (std::size_t c = t + 1; c < nc; ++c) {
        const Int q = m[t][c] / m[t][t];
        for (std::size_t r = t; r < nr; ++r) m[r][c] -= q * m[r][t];
        clean = clean && m[t][c] == 0;
      }
      if (!clean) {
        bring_min(false);
        continue;
      }
      bool divides = true;
      for (std::size_t r = t + 1; r < nr && divides; ++r)
        for (std::size_t c = t + 1; c < nc; ++c)
          if (m[r][c] % m[t][t] != 0) {
            for (std::size_t k = t; k < nc; ++k) m[t][k] += m[r][k];
            divides = false;
            break;
          }
      if (divides) break;
    }
    diag.push_back(abs(m[t][t]));
  }
  while (diag.size() < std::min(nr, nc)) diag.push_back(0);
  return diag;
}

inline Int determinant(Rows m) {
  const std::size_t n = m.size();
  Int det = 1, prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(m[p], m[k]);
      det = -det;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return det * m[n - 1][n - 1];
}

// Abelian group as a list of cyclic orders, 0 standing for Z.
using Cyclics = std::vector<Int>;

inline skernel::HomologyGroup canonical(const Cyclics& orders) {
  Rows diag(orders.size(), std::vector<Int>(orders.size(), 0));
  for (std::size_t i = 0; i < orders.size(); ++i) diag[i][i] = orders[i];
  skernel::HomologyGroup g;
  for (const Int& d : smith_diagonal(diag)) {
    if (d == 0)
      ++g.free_rank;
    else if (d > 1)
      g.torsion.push_back(d);
  }
  return g;
}

inline Cyclics cyclics(const skernel::HomologyGroup& g) {
  Cyclics out(g.free_rank, 0);
  out.insert(out.end(), g.torsion.begin(), g.torsion.end());
  return out;
}

// H_n from ranks and Smith diagonals of the two adjacent differentials.
inline skernel::HomologyGroup homology(const skernel::ChainComplex& c, int n) {
  auto rank_and_torsion = [&](int k, Cyclics* torsion) {
    std::size_t rank = 0;
    if (c.rank(k) == 0 || c.rank(k - 1) == 0) return rank;
    for (const Int& d : smith_diagonal(rows_of(c.d(k)))) {
      if (d != 0) ++rank;
      if (torsion && d > 1) torsion->push_back(d);
    }
    return rank;
  };
  Cyclics torsion;
  const std::size_t out_rank = rank_and_torsion(n, nullptr);
  const std::size_t in_rank = rank_and_torsion(n + 1, &torsion);
  Cyclics all(c.rank(n) - out_rank - in_rank, 0);
  all.insert(all.end(), torsion.begin(), torsion.end());
  return canonical(all);
}

inline Int gcd_or_free(const Int& a, const Int& b) {
  if (a == 0) return b;
  if (b == 0) return a;
  return boost::multiprecision::gcd(a, b);
}

// H_n(A ⊗ B) = ⊕ H_i(A) ⊗ H_j(B) (i+j=n) ⊕ Tor(H_i(A), H_j(B)) (i+j=n−1).
inline skernel::HomologyGroup kunneth(const std::function<skernel::HomologyGroup(int)>& ha,
                                      const std::function<skernel::HomologyGroup(int)>& hb, int lo_a,
                                      int lo_b, int n) {
  Cyclics out;
  for (int i = lo_a; n - i >= lo_b; ++i)
    for (const Int& a : cyclics(ha(i)))
      for (const Int& b : cyclics(hb(n - i))) out.push_back(gcd_or_free(a, b));
  for (int i = lo_a; n - 1 - i >= lo_b; ++i)
    for (const Int& a : cyclics(ha(i)))
      for (const Int& b : cyclics(hb(n - 1 - i)))
        if (a != 0 && b != 0) out.push_back(boost::multiprecision::gcd(a, b));
  return canonical(out);
}

// (p,q)-shuffles as (μ, ν, sign): μ, ν partition {0..p+q−1}, |μ| = p.
struct Shuffle {
  std::vector<int> mu;
  std::vector<int> nu;
  int sign = 1;
};

inline std::vector<Shuffle> shuffles(int p, int q) {
  std::vector<Shuffle> out;
  const int n = p + q;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != p) continue;
    Shuffle s;
    for (int i = 0; i < n; ++i) (mask >> i & 1u ? s.mu : s.nu).push_back(i);
    int inversions = 0;
    for (int a : s.mu)
      for (int b : s.nu)
        if (a > b) ++inversions;
    s.sign = inversions % 2 ? -1 : 1;
    out.push_back(std::move(s));
  }
  return out;
}

// Nondecreasing maps [n] → [m].
inline std::vector<std::vector<int>> monotone_maps(int n, int m) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> go = [&](int lo) {
    if (static_cast<int>(cur.size()) == n + 1) {
      out.push_back(cur);
      return;
    }
    for (int v = lo; v <= m; ++v) {
      cur.push_back(v);
      go(v);
      cur.pop_back();
    }
  };
  go(0);
  return out;
}

// Degeneracy word in normal form (descending) by rewriting s_i s_j = s_{j+1} s_i for i ≤ j.
inline std::vector<int> normal_word(std::vector<int> w) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k + 1 < w.size(); ++k)
      if (w[k] <= w[k + 1]) {
        const int i = w[k], j = w[k + 1];
        w[k] = j + 1;
        w[k + 1] = i;
        changed = true;
      }
  }
  return w;
}

}  // namespace oracle
