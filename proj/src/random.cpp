#include "skernel/random.hpp"

#include "skernel/error.hpp"

namespace skernel::sample {

long long uniform(Rng& rng, long long lo, long long hi) {
  const auto width = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long long>(rng() % width);
}

IntMatrix matrix(Rng& rng, std::size_t rows, std::size_t cols, long long bound) {
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = uniform(rng, -bound, bound);
  return m;
}

IntMatrix unimodular(Rng& rng, std::size_t n) {
  IntMatrix u = IntMatrix::identity(n);
  if (n == 0) return u;
  const int steps = static_cast<int>(3 * n);
  for (int s = 0; s < steps; ++s) {
    const auto a = static_cast<std::size_t>(uniform(rng, 0, static_cast<long long>(n) - 1));
    const auto b = static_cast<std::size_t>(uniform(rng, 0, static_cast<long long>(n) - 1));
    const long long kind = uniform(rng, 0, 5);
    if (a == b || kind == 0) {
      for (std::size_t c = 0; c < n; ++c) u(a, c) = -u(a, c);
    } else if (kind == 1) {
      for (std::size_t c = 0; c < n; ++c) std::swap(u(a, c), u(b, c));
    } else {
      const long long k = uniform(rng, -2, 2);
      for (std::size_t c = 0; c < n; ++c) u(a, c) += k * u(b, c);
    }
  }
  return u;
}

namespace {

bool within(const IntMatrix& m, long long bound) {
  for (const auto& x : m.entries())
    if (x > bound || x < -bound) return false;
  return true;
}

}  // namespace

ChainComplex chain_complex(Rng& rng, const ComplexShape& shape) {
  const int lo = static_cast<int>(uniform(rng, shape.min_deg, shape.max_deg));
  const int hi = static_cast<int>(uniform(rng, lo, shape.max_deg));
  std::vector<std::size_t> ranks;
  for (int n = lo; n <= hi; ++n)
    ranks.push_back(static_cast<std::size_t>(uniform(rng, 0, static_cast<long long>(shape.max_rank))));
  auto rank = [&](int n) { return ranks[static_cast<std::size_t>(n - lo)]; };
  std::map<int, IntMatrix> d;
  for (int n = lo + 1; n <= hi; ++n) {
    const IntMatrix below = n - 1 > lo ? d.at(n - 1) : IntMatrix(0, rank(n - 1));
    const IntMatrix kernel = kernel_basis(below);
    IntMatrix chosen(rank(n - 1), rank(n));
    for (int attempt = 0; attempt < 20 && kernel.cols() > 0; ++attempt) {
      const IntMatrix candidate =
          kernel * matrix(rng, kernel.cols(), rank(n), std::min<long long>(shape.bound, 2));
      if (within(candidate, shape.bound)) {
        chosen = candidate;
        break;
      }
    }
    d.emplace(n, std::move(chosen));
  }
  return ChainComplex(lo, hi, std::move(ranks), std::move(d));
}

SimplicialAbGroup simplicial_group(Rng& rng, int trunc_dim, const ComplexShape& shape) {
  ComplexShape s = shape;
  s.min_deg = 0;
  s.max_deg = std::max(0, shape.max_deg);
  const SimplicialAbGroup k = dold_kan_K(chain_complex(rng, s), trunc_dim);
  std::vector<IntMatrix> basis, inverse;
  for (int n = 0; n <= trunc_dim; ++n) {
    basis.push_back(unimodular(rng, k.rank(n)));
    inverse.push_back(*unimodular_inverse(basis.back()));
  }
  std::vector<std::size_t> ranks;
  std::map<SimplicialAbGroup::Key, IntMatrix> faces, degens;
  for (int n = 0; n <= trunc_dim; ++n) ranks.push_back(k.rank(n));
  auto at = [](const std::vector<IntMatrix>& v, int n) -> const IntMatrix& {
    return v[static_cast<std::size_t>(n)];
  };
  for (int n = 1; n <= trunc_dim; ++n)
    for (int i = 0; i <= n; ++i)
      faces.emplace(SimplicialAbGroup::Key{n, i}, at(basis, n - 1) * k.face(n, i) * at(inverse, n));
  for (int n = 0; n < trunc_dim; ++n)
    for (int j = 0; j <= n; ++j)
      degens.emplace(SimplicialAbGroup::Key{n, j}, at(basis, n + 1) * k.degen(n, j) * at(inverse, n));
  return SimplicialAbGroup(trunc_dim, std::move(ranks), std::move(faces), std::move(degens));
}

SimplicialSet pointed_set(Rng& rng) {
  SimplicialSetBuilder b;
  std::vector<CellId> vertices{b.add_cell(0, "*")};
  b.set_basepoint(vertices[0]);
  const long long nv = uniform(rng, 0, 3);
  for (long long i = 1; i <= nv; ++i) vertices.push_back(b.add_cell(0, "v" + std::to_string(i)));
  auto pick_vertex = [&] {
    return vertices[static_cast<std::size_t>(uniform(rng, 0, static_cast<long long>(vertices.size()) - 1))];
  };
  struct Edge {
    CellId cell;
    CellId from;
    CellId to;
  };
  std::vector<Edge> edges;
  auto new_edge = [&](CellId from, CellId to) {
    const CellId e = b.add_cell(1, "e" + std::to_string(edges.size()),
                                {SimplexRef::of(to), SimplexRef::of(from)});
    edges.push_back({e, from, to});
    return SimplexRef::of(e);
  };
  const long long ne = uniform(rng, 0, 4);
  for (long long i = 0; i < ne; ++i) {
    const CellId from = pick_vertex();
    new_edge(from, pick_vertex());
  }
  // An edge from `from` to `to`: existing, degenerate when the ends agree, or new.
  auto edge_between = [&](CellId from, CellId to) {
    std::vector<SimplexRef> options;
    for (const auto& e : edges)
      if (e.from == from && e.to == to) options.push_back(SimplexRef::of(e.cell));
    if (from == to) options.push_back(degenerate_vertex(from, 1));
    if (options.empty() || uniform(rng, 0, 4) == 0) return new_edge(from, to);
    return options[static_cast<std::size_t>(uniform(rng, 0, static_cast<long long>(options.size()) - 1))];
  };
  const long long nt = uniform(rng, 0, 3);
  std::vector<std::vector<SimplexRef>> triangles;
  for (long long t = 0; t < nt; ++t) {
    const CellId v0 = pick_vertex(), v1 = pick_vertex(), v2 = pick_vertex();
    triangles.push_back({edge_between(v1, v2), edge_between(v0, v2), edge_between(v0, v1)});
  }
  for (std::size_t t = 0; t < triangles.size(); ++t)
    b.add_cell(2, "t" + std::to_string(t), std::move(triangles[t]));
  return b.build();
}

Horn horn(Rng& rng, const SimplicialAbGroup& a, int max_n) {
  Horn h;
  h.n = static_cast<int>(uniform(rng, 1, std::min(max_n, a.trunc_dim())));
  h.k = static_cast<int>(uniform(rng, 0, h.n));
  IntVector x;
  for (std::size_t r = 0; r < a.rank(h.n); ++r) x.push_back(uniform(rng, -3, 3));
  for (int i = 0; i <= h.n; ++i) {
    if (i == h.k)
      h.faces.emplace_back();
    else
      h.faces.emplace_back(a.face(h.n, i) * x);
  }
  return h;
}

}  // namespace skernel::sample
