#include "skernel/simpab.hpp"

#include <algorithm>

#include "skernel/error.hpp"

namespace skernel {

namespace {

std::string op(const char* name, int i) { return std::string(name) + std::to_string(i); }

IntMatrix block_diagonal(const IntMatrix& m, std::size_t copies) {
  IntMatrix out(m.rows() * copies, m.cols() * copies);
  for (std::size_t c = 0; c < copies; ++c) out.set_block(c * m.rows(), c * m.cols(), m);
  return out;
}

}  // namespace

SimplicialAbGroup::SimplicialAbGroup(int trunc_dim, std::vector<std::size_t> ranks,
                                     std::map<Key, IntMatrix> faces,
                                     std::map<Key, IntMatrix> degens, bool check)
    : trunc_(trunc_dim), ranks_(std::move(ranks)), faces_(std::move(faces)),
      degens_(std::move(degens)) {
  if (trunc_ < 0) throw ParameterError("truncation dimension must be nonnegative");
  if (static_cast<int>(ranks_.size()) != trunc_ + 1)
    throw StructuralError("simplicial group needs one rank per level 0..D");
  for (int n = 1; n <= trunc_; ++n)
    for (int i = 0; i <= n; ++i) {
      auto it = faces_.find({n, i});
      if (it == faces_.end())
        throw StructuralError("missing face d" + std::to_string(i) + " on level " + std::to_string(n));
      if (it->second.rows() != rank(n - 1) || it->second.cols() != rank(n))
        throw StructuralError("face d" + std::to_string(i) + " on level " + std::to_string(n) +
                              " has the wrong shape");
    }
  for (int n = 0; n < trunc_; ++n)
    for (int j = 0; j <= n; ++j) {
      auto it = degens_.find({n, j});
      if (it == degens_.end())
        throw StructuralError("missing degeneracy s" + std::to_string(j) + " on level " +
                              std::to_string(n));
      if (it->second.rows() != rank(n + 1) || it->second.cols() != rank(n))
        throw StructuralError("degeneracy s" + std::to_string(j) + " on level " +
                              std::to_string(n) + " has the wrong shape");
    }
  if (faces_.size() != static_cast<std::size_t>(trunc_ * (trunc_ + 3) / 2) ||
      degens_.size() != static_cast<std::size_t>(trunc_ * (trunc_ + 1) / 2))
    throw StructuralError("structure maps given outside the truncation range");
  if (check) validate();
}

SimplicialAbGroup SimplicialAbGroup::constant(std::size_t r, int trunc_dim) {
  std::map<Key, IntMatrix> faces, degens;
  for (int n = 1; n <= trunc_dim; ++n)
    for (int i = 0; i <= n; ++i) faces.emplace(Key{n, i}, IntMatrix::identity(r));
  for (int n = 0; n < trunc_dim; ++n)
    for (int j = 0; j <= n; ++j) degens.emplace(Key{n, j}, IntMatrix::identity(r));
  return SimplicialAbGroup(trunc_dim, std::vector<std::size_t>(static_cast<std::size_t>(trunc_dim + 1), r),
                           std::move(faces), std::move(degens), false);
}

std::size_t SimplicialAbGroup::rank(int n) const {
  if (n < 0 || n > trunc_) return 0;
  return ranks_[static_cast<std::size_t>(n)];
}

const IntMatrix& SimplicialAbGroup::face(int n, int i) const {
  auto it = faces_.find({n, i});
  if (it == faces_.end())
    throw ParameterError("face d" + std::to_string(i) + " undefined on level " + std::to_string(n));
  return it->second;
}

const IntMatrix& SimplicialAbGroup::degen(int n, int j) const {
  auto it = degens_.find({n, j});
  if (it == degens_.end())
    throw ParameterError("degeneracy s" + std::to_string(j) + " undefined on level " +
                         std::to_string(n));
  return it->second;
}

IntMatrix SimplicialAbGroup::pullback(const delta::Map& theta) const {
  const delta::EpiMono f = delta::factor(theta);
  const int m = theta.source(), n = theta.target;
  if (m > trunc_ || n > trunc_) throw RangeError("operator beyond the truncation dimension");
  // θ* = η* δ*: faces for the missing values of δ (largest first), then degeneracies.
  IntMatrix out = IntMatrix::identity(rank(n));
  int level = n;
  std::vector<int> missing;
  for (int v = 0, k = 0; v <= n; ++v) {
    if (k < static_cast<int>(f.injection.values.size()) && f.injection.values[static_cast<std::size_t>(k)] == v)
      ++k;
    else
      missing.push_back(v);
  }
  for (auto it = missing.rbegin(); it != missing.rend(); ++it) out = face(level--, *it) * out;
  const std::vector<int> word = delta::word_of(f.surjection);
  for (auto it = word.rbegin(); it != word.rend(); ++it) out = degen(level++, *it) * out;
  return out;
}

void SimplicialAbGroup::validate() const {
  auto fail = [](const std::string& what, int n) {
    throw StructuralError("simplicial identity " + what + " fails on level " + std::to_string(n));
  };
  for (int n = 2; n <= trunc_; ++n)
    for (int i = 0; i <= n - 1; ++i)
      for (int j = i + 1; j <= n; ++j)
        if (face(n - 1, i) * face(n, j) != face(n - 1, j - 1) * face(n, i))
          fail(op("d", i) + op(" d", j) + " = " + op("d", j - 1) + op(" d", i), n);
  for (int n = 0; n < trunc_; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= n + 1; ++i) {
        const IntMatrix lhs = face(n + 1, i) * degen(n, j);
        IntMatrix rhs;
        if (i < j)
          rhs = degen(n - 1, j - 1) * face(n, i);
        else if (i == j || i == j + 1)
          rhs = IntMatrix::identity(rank(n));
        else
          rhs = degen(n - 1, j) * face(n, i - 1);
        if (lhs != rhs) fail(op("d", i) + op(" s", j), n);
      }
  for (int n = 0; n + 2 <= trunc_; ++n)
    for (int i = 0; i <= n + 1; ++i)
      for (int j = i; j <= n; ++j)
        if (degen(n + 1, i) * degen(n, j) != degen(n + 1, j + 1) * degen(n, i))
          fail(op("s", i) + op(" s", j) + " = " + op("s", j + 1) + op(" s", i), n);
}

// ---------------------------------------------------------------------------

namespace {

ChainComplex moore_complex(const SimplicialAbGroup& a, std::vector<IntMatrix>& basis) {
  const int top = a.trunc_dim();
  for (int n = 0; n <= top; ++n) {
    IntMatrix k = IntMatrix::identity(a.rank(n));
    for (int i = 1; i <= n && k.cols() > 0; ++i) k = k * kernel_basis(a.face(n, i) * k);
    basis.push_back(std::move(k));
  }
  std::vector<std::size_t> ranks;
  for (const auto& b : basis) ranks.push_back(b.cols());
  std::map<int, IntMatrix> d;
  for (int n = 1; n <= top; ++n) {
    if (ranks[static_cast<std::size_t>(n - 1)] == 0 || ranks[static_cast<std::size_t>(n)] == 0) continue;
    auto x = solve_in_lattice(basis[static_cast<std::size_t>(n - 1)],
                              a.face(n, 0) * basis[static_cast<std::size_t>(n)]);
    if (!x) throw StructuralError("d0 does not preserve the normalized subgroup");
    d.emplace(n, std::move(*x));
  }
  return ChainComplex(0, top, ranks, std::move(d));
}

}  // namespace

Normalization normalization(const SimplicialAbGroup& a) {
  Normalization out;
  out.complex = moore_complex(a, out.basis);
  for (int n = 0; n <= a.trunc_dim(); ++n) {
    const IntMatrix& b = out.basis[static_cast<std::size_t>(n)];
    IntMatrix gens(a.rank(n), 0);
    for (int j = 0; j < n; ++j) gens = IntMatrix::hstack(gens, a.degen(n - 1, j));
    const IntMatrix degenerate = gens.cols() ? lattice_basis(gens) : gens;
    const IntMatrix both = IntMatrix::hstack(b, degenerate);
    std::optional<IntMatrix> inv;
    if (both.cols() == both.rows()) inv = unimodular_inverse(both);
    if (!inv)
      throw StructuralError("normalized and degenerate parts do not split level " + std::to_string(n));
    out.projector.push_back(inv->block(0, b.cols(), 0, both.cols()));
  }
  return out;
}

ChainComplex normalize_N(const SimplicialAbGroup& a) {
  std::vector<IntMatrix> basis;
  return moore_complex(a, basis);
}

// ---------------------------------------------------------------------------

std::vector<std::pair<delta::Map, std::size_t>> dold_kan_summands(const ChainComplex& c, int n) {
  std::vector<std::pair<delta::Map, std::size_t>> out;
  std::size_t offset = 0;
  for (int k = 0; k <= n; ++k)
    for (auto& s : delta::surjections(n, k)) {
      out.emplace_back(std::move(s), offset);
      offset += c.rank(k);
    }
  return out;
}

namespace {

// Matrix of θ* : K_n → K_m on the surjection-indexed decomposition.
IntMatrix dold_kan_operator(const ChainComplex& c, const delta::Map& theta,
                            const std::vector<std::pair<delta::Map, std::size_t>>& src,
                            const std::vector<std::pair<delta::Map, std::size_t>>& dst,
                            std::size_t src_rank, std::size_t dst_rank) {
  IntMatrix out(dst_rank, src_rank);
  for (const auto& [sigma, offset] : src) {
    const int k = sigma.target;
    if (c.rank(k) == 0) continue;
    const delta::EpiMono f = delta::factor(delta::compose(sigma, theta));
    const int j = f.surjection.target;
    auto it = std::find_if(dst.begin(), dst.end(), [&](const auto& e) { return e.first == f.surjection; });
    if (f.injection.is_identity()) {
      out.set_block(it->second, offset, IntMatrix::identity(c.rank(k)));
    } else if (j == k - 1 && f.injection.values.front() == 1) {
      if (c.rank(j) > 0) out.set_block(it->second, offset, c.d(k));
    }
  }
  return out;
}

std::size_t dold_kan_rank(const ChainComplex& c, int n) {
  std::size_t r = 0;
  for (int k = 0; k <= n; ++k) r += delta::surjections(n, k).size() * c.rank(k);
  return r;
}

}  // namespace

SimplicialAbGroup dold_kan_K(const ChainComplex& input, int trunc_dim) {
  if (trunc_dim < 0) throw ParameterError("truncation dimension must be nonnegative");
  const ChainComplex c = input.min_deg() < 0 ? truncate_good(input, 0) : input;
  std::vector<std::size_t> ranks;
  std::vector<std::vector<std::pair<delta::Map, std::size_t>>> summands;
  for (int n = 0; n <= trunc_dim; ++n) {
    ranks.push_back(dold_kan_rank(c, n));
    summands.push_back(dold_kan_summands(c, n));
  }
  std::map<SimplicialAbGroup::Key, IntMatrix> faces, degens;
  for (int n = 1; n <= trunc_dim; ++n)
    for (int i = 0; i <= n; ++i)
      faces.emplace(SimplicialAbGroup::Key{n, i},
                    dold_kan_operator(c, delta::coface(n, i), summands[static_cast<std::size_t>(n)],
                                      summands[static_cast<std::size_t>(n - 1)],
                                      ranks[static_cast<std::size_t>(n)],
                                      ranks[static_cast<std::size_t>(n - 1)]));
  for (int n = 0; n < trunc_dim; ++n)
    for (int j = 0; j <= n; ++j)
      degens.emplace(SimplicialAbGroup::Key{n, j},
                     dold_kan_operator(c, delta::codegeneracy(n, j), summands[static_cast<std::size_t>(n)],
                                       summands[static_cast<std::size_t>(n + 1)],
                                       ranks[static_cast<std::size_t>(n)],
                                       ranks[static_cast<std::size_t>(n + 1)]));
  return SimplicialAbGroup(trunc_dim, std::move(ranks), std::move(faces), std::move(degens), false);
}

ChainComplex unnormalized_complex(const SimplicialAbGroup& a) {
  const int top = a.trunc_dim();
  std::vector<std::size_t> ranks;
  for (int n = 0; n <= top; ++n) ranks.push_back(a.rank(n));
  std::map<int, IntMatrix> d;
  for (int n = 1; n <= top; ++n) {
    IntMatrix sum(a.rank(n - 1), a.rank(n));
    for (int i = 0; i <= n; ++i) sum = sum + Integer(i % 2 == 0 ? 1 : -1) * a.face(n, i);
    d.emplace(n, std::move(sum));
  }
  return ChainComplex(0, top, ranks, std::move(d));
}

// ---------------------------------------------------------------------------

std::vector<SimplexRef> reduced_basis(const SimplicialSet& x, int n) {
  std::vector<SimplexRef> out;
  for (auto& s : x.all_simplices(n))
    if (!x.is_basepoint_simplex(s)) out.push_back(std::move(s));
  return out;
}

SimplicialAbGroup free_reduced_Z(const SimplicialSet& x, int trunc_dim) {
  if (!x.pointed()) throw PreconditionError("free_reduced_Z needs a pointed simplicial set");
  if (trunc_dim < 0) throw ParameterError("truncation dimension must be nonnegative");
  std::vector<std::vector<SimplexRef>> basis;
  std::vector<std::map<SimplexRef, std::size_t>> index;
  std::vector<std::size_t> ranks;
  for (int n = 0; n <= trunc_dim; ++n) {
    basis.push_back(reduced_basis(x, n));
    index.emplace_back();
    for (std::size_t i = 0; i < basis.back().size(); ++i) index.back().emplace(basis.back()[i], i);
    ranks.push_back(basis.back().size());
  }
  auto matrix = [&](int from, int to, const auto& apply) {
    IntMatrix m(ranks[static_cast<std::size_t>(to)], ranks[static_cast<std::size_t>(from)]);
    const auto& src = basis[static_cast<std::size_t>(from)];
    for (std::size_t c = 0; c < src.size(); ++c) {
      const SimplexRef t = apply(src[c]);
      if (x.is_basepoint_simplex(t)) continue;
      m(index[static_cast<std::size_t>(to)].at(t), c) = 1;
    }
    return m;
  };
  std::map<SimplicialAbGroup::Key, IntMatrix> faces, degens;
  for (int n = 1; n <= trunc_dim; ++n)
    for (int i = 0; i <= n; ++i)
      faces.emplace(SimplicialAbGroup::Key{n, i},
                    matrix(n, n - 1, [&](const SimplexRef& s) { return x.apply_face(s, i); }));
  for (int n = 0; n < trunc_dim; ++n)
    for (int j = 0; j <= n; ++j)
      degens.emplace(SimplicialAbGroup::Key{n, j},
                     matrix(n, n + 1, [&](const SimplexRef& s) { return x.apply_degeneracy(s, j); }));
  return SimplicialAbGroup(trunc_dim, std::move(ranks), std::move(faces), std::move(degens), false);
}

// ---------------------------------------------------------------------------

SimplicialAbGroup bar_B(const SimplicialAbGroup& a) {
  const int top = a.trunc_dim();
  std::vector<std::size_t> ranks;
  for (int n = 0; n <= top; ++n) ranks.push_back(static_cast<std::size_t>(n) * a.rank(n));
  std::map<SimplicialAbGroup::Key, IntMatrix> faces, degens;
  for (int n = 1; n <= top; ++n) {
    const std::size_t r = a.rank(n - 1);
    for (int i = 0; i <= n; ++i) {
      // Tuple operation on A_{n−1}ⁿ → A_{n−1}ⁿ⁻¹.
      IntMatrix tuple(r * static_cast<std::size_t>(n - 1), r * static_cast<std::size_t>(n));
      const IntMatrix id = IntMatrix::identity(r);
      for (int t = 0; t < n - 1; ++t) {
        const std::size_t row = static_cast<std::size_t>(t) * r;
        if (i == 0) {
          tuple.set_block(row, static_cast<std::size_t>(t + 1) * r, id);
        } else if (t < i - 1) {
          tuple.set_block(row, static_cast<std::size_t>(t) * r, id);
        } else if (t == i - 1) {
          tuple.set_block(row, static_cast<std::size_t>(t) * r, id);
          tuple.set_block(row, static_cast<std::size_t>(t + 1) * r, id);
        } else {
          tuple.set_block(row, static_cast<std::size_t>(t + 1) * r, id);
        }
      }
      faces.emplace(SimplicialAbGroup::Key{n, i},
                    tuple * block_diagonal(a.face(n, i), static_cast<std::size_t>(n)));
    }
  }
  for (int n = 0; n < top; ++n) {
    const std::size_t r = a.rank(n + 1);
    for (int j = 0; j <= n; ++j) {
      IntMatrix tuple(r * static_cast<std::size_t>(n + 1), r * static_cast<std::size_t>(n));
      const IntMatrix id = IntMatrix::identity(r);
      for (int t = 0; t <= n; ++t) {
        if (t == j) continue;
        tuple.set_block(static_cast<std::size_t>(t) * r, static_cast<std::size_t>(t < j ? t : t - 1) * r, id);
      }
      degens.emplace(SimplicialAbGroup::Key{n, j},
                     tuple * block_diagonal(a.degen(n, j), static_cast<std::size_t>(n)));
    }
  }
  return SimplicialAbGroup(top, std::move(ranks), std::move(faces), std::move(degens), false);
}

SimplicialAbGroup tensor(const SimplicialAbGroup& a, const SimplicialAbGroup& b) {
  const int top = std::min(a.trunc_dim(), b.trunc_dim());
  std::vector<std::size_t> ranks;
  for (int n = 0; n <= top; ++n) ranks.push_back(a.rank(n) * b.rank(n));
  std::map<SimplicialAbGroup::Key, IntMatrix> faces, degens;
  for (int n = 1; n <= top; ++n)
    for (int i = 0; i <= n; ++i)
      faces.emplace(SimplicialAbGroup::Key{n, i}, IntMatrix::kronecker(a.face(n, i), b.face(n, i)));
  for (int n = 0; n < top; ++n)
    for (int j = 0; j <= n; ++j)
      degens.emplace(SimplicialAbGroup::Key{n, j},
                     IntMatrix::kronecker(a.degen(n, j), b.degen(n, j)));
  return SimplicialAbGroup(top, std::move(ranks), std::move(faces), std::move(degens), false);
}

// ---------------------------------------------------------------------------

namespace {

// s_{w_last} ⋯ s_{w_1} : A_p → A_{p+|w|} for an ascending index list w (s_{w_1} first).
IntMatrix degeneracy_chain(const SimplicialAbGroup& a, int p, const std::vector<int>& ascending) {
  IntMatrix out = IntMatrix::identity(a.rank(p));
  int level = p;
  for (int j : ascending) out = a.degen(level++, j) * out;
  return out;
}

IntMatrix front_face(const SimplicialAbGroup& a, int n, int p) {
  IntMatrix out = IntMatrix::identity(a.rank(n));
  for (int level = n; level > p; --level) out = a.face(level, level) * out;
  return out;
}

IntMatrix back_face(const SimplicialAbGroup& a, int n, int q) {
  IntMatrix out = IntMatrix::identity(a.rank(n));
  for (int level = n; level > q; --level) out = a.face(level, 0) * out;
  return out;
}

}  // namespace

EZPair ez_maps(const SimplicialAbGroup& a, const SimplicialAbGroup& b) {
  const int top = std::min(a.trunc_dim(), b.trunc_dim());
  const SimplicialAbGroup ab = tensor(a, b);
  const Normalization na = normalization(a), nb = normalization(b), nab = normalization(ab);
  const ChainComplex ca = truncate_stupid(na.complex, top);
  const ChainComplex cb = truncate_stupid(nb.complex, top);
  const ChainComplex left = truncate_stupid(tensor(ca, cb), top);
  const ChainComplex& right = nab.complex;
  std::map<int, IntMatrix> shuffle, aw;
  for (int n = 0; n <= top; ++n) {
    IntMatrix sh(right.rank(n), left.rank(n));
    IntMatrix back(left.rank(n), right.rank(n));
    const IntMatrix& proj = nab.projector[static_cast<std::size_t>(n)];
    const IntMatrix incl = nab.basis[static_cast<std::size_t>(n)];
    for (const auto& [p, offset] : tensor_blocks(ca, cb, n)) {
      const int q = n - p;
      const IntMatrix& ba = na.basis[static_cast<std::size_t>(p)];
      const IntMatrix& bb = nb.basis[static_cast<std::size_t>(q)];
      IntMatrix block(ab.rank(n), ba.cols() * bb.cols());
      for (const auto& s : delta::shuffles(p, q)) {
        const IntMatrix term = IntMatrix::kronecker(degeneracy_chain(a, p, s.nu) * ba,
                                                    degeneracy_chain(b, q, s.mu) * bb);
        block = block + Integer(s.sign) * term;
      }
      sh.set_block(0, offset, proj * block);
      const IntMatrix front = na.projector[static_cast<std::size_t>(p)] * front_face(a, n, p);
      const IntMatrix rear = nb.projector[static_cast<std::size_t>(q)] * back_face(b, n, q);
      back.set_block(offset, 0, IntMatrix::kronecker(front, rear) * incl);
    }
    shuffle.emplace(n, std::move(sh));
    aw.emplace(n, std::move(back));
  }
  return EZPair{ChainMap(left, right, std::move(shuffle)), ChainMap(right, left, std::move(aw))};
}

bool ez_strict(const EZPair& ez) {
  const ChainComplex& c = ez.shuffle.source();
  for (int n = c.min_deg(); n <= c.max_deg(); ++n)
    if (ez.aw.component(n) * ez.shuffle.component(n) != IntMatrix::identity(c.rank(n))) return false;
  return true;
}

// ---------------------------------------------------------------------------

IntVector horn_filler(const SimplicialAbGroup& a, int n, int k,
                      const std::vector<std::optional<IntVector>>& faces) {
  if (n < 1 || k < 0 || k > n)
    throw ParameterError("horn (" + std::to_string(n) + "," + std::to_string(k) + ") is invalid");
  if (n > a.trunc_dim()) throw RangeError("horn dimension exceeds the truncation dimension");
  if (static_cast<int>(faces.size()) != n + 1)
    throw ParameterError("horn needs n+1 face slots");
  for (int i = 0; i <= n; ++i) {
    const auto& f = faces[static_cast<std::size_t>(i)];
    if (i == k) {
      if (f) throw ParameterError("the missing face of the horn must be empty");
      continue;
    }
    if (!f) throw ParameterError("horn face " + std::to_string(i) + " is missing");
    if (f->size() != a.rank(n - 1)) throw ParameterError("horn face " + std::to_string(i) + " has the wrong size");
  }
  auto y = [&](int i) -> const IntVector& { return *faces[static_cast<std::size_t>(i)]; };
  for (int j = 1; j <= n && n >= 2; ++j)
    for (int i = 0; i < j; ++i) {
      if (i == k || j == k) continue;
      if (a.face(n - 1, i) * y(j) != a.face(n - 1, j - 1) * y(i))
        throw PreconditionError("incompatible horn: d" + std::to_string(i) + " x" + std::to_string(j) +
                                " != d" + std::to_string(j - 1) + " x" + std::to_string(i));
    }
  IntVector w(a.rank(n), 0);
  auto correct = [&](int r, int s) {
    IntVector z = a.face(n, r) * w;
    const IntVector& target = y(r);
    for (std::size_t t = 0; t < z.size(); ++t) z[t] = target[t] - z[t];
    const IntVector add = a.degen(n - 1, s) * z;
    for (std::size_t t = 0; t < w.size(); ++t) w[t] += add[t];
  };
  for (int r = 0; r < k; ++r) correct(r, r);
  for (int r = n; r > k; --r) correct(r, r - 1);
  return w;
}

HomologyGroup homotopy_groups(const SimplicialAbGroup& a, int i) {
  if (i < 0 || i > a.trunc_dim() - 1)
    throw RangeError("pi_" + std::to_string(i) + " is outside the trusted range 0.." +
                     std::to_string(a.trunc_dim() - 1));
  return homology(normalize_N(a), i);
}

// ---------------------------------------------------------------------------

SmashTensorReport smash_tensor_comparison(const SimplicialSet& e, const SimplicialSet& f,
                                          int trunc_dim) {
  const SmashSpace s = smash(e, f);
  const SimplicialAbGroup ze = free_reduced_Z(e, trunc_dim), zf = free_reduced_Z(f, trunc_dim);
  const SimplicialAbGroup zs = free_reduced_Z(s.object, trunc_dim);
  const SimplicialAbGroup zt = tensor(ze, zf);
  SmashTensorReport report;
  for (int n = 0; n <= trunc_dim; ++n) {
    const auto be = reduced_basis(e, n), bf = reduced_basis(f, n), bs = reduced_basis(s.object, n);
    std::map<SimplexRef, std::size_t> index;
    for (std::size_t i = 0; i < bs.size(); ++i) index.emplace(bs[i], i);
    IntMatrix m(bs.size(), be.size() * bf.size());
    for (std::size_t i = 0; i < be.size(); ++i)
      for (std::size_t j = 0; j < bf.size(); ++j) {
        const SimplexRef t = s.pair(be[i], bf[j]);
        if (s.object.is_basepoint_simplex(t)) {
          report.levelwise_iso = false;
          report.detail = "a non-base pair collapses on level " + std::to_string(n);
          continue;
        }
        m(index.at(t), i * bf.size() + j) = 1;
      }
    if (!is_unimodular(m)) {
      report.levelwise_iso = false;
      if (report.detail.empty()) report.detail = "level " + std::to_string(n) + " is not a bijection";
    }
    report.maps.push_back(std::move(m));
  }
  for (int n = 1; n <= trunc_dim; ++n)
    for (int i = 0; i <= n; ++i)
      if (zs.face(n, i) * report.maps[static_cast<std::size_t>(n)] !=
          report.maps[static_cast<std::size_t>(n - 1)] * zt.face(n, i)) {
        report.commutes = false;
        report.detail = "face d" + std::to_string(i) + " on level " + std::to_string(n);
      }
  for (int n = 0; n < trunc_dim; ++n)
    for (int j = 0; j <= n; ++j)
      if (zs.degen(n, j) * report.maps[static_cast<std::size_t>(n)] !=
          report.maps[static_cast<std::size_t>(n + 1)] * zt.degen(n, j)) {
        report.commutes = false;
        report.detail = "degeneracy s" + std::to_string(j) + " on level " + std::to_string(n);
      }
  return report;
}

// ---------------------------------------------------------------------------

DoldKanReport check_NK(const ChainComplex& input, int trunc_dim) {
  const ChainComplex c = truncate_good(input, 0);
  const SimplicialAbGroup k = dold_kan_K(c, trunc_dim);
  const Normalization n = normalization(k);
  DoldKanReport report;
  std::vector<IntMatrix> coords;
  for (int deg = 0; deg <= trunc_dim; ++deg) {
    if (n.complex.rank(deg) != c.rank(deg)) {
      report.ok = false;
      report.detail = "rank mismatch in degree " + std::to_string(deg);
      return report;
    }
    IntMatrix iota(k.rank(deg), c.rank(deg));
    const auto summands = dold_kan_summands(c, deg);
    iota.set_block(summands.back().second, 0, IntMatrix::identity(c.rank(deg)));
    if (c.rank(deg) == 0) {
      coords.emplace_back(0, 0);
      continue;
    }
    auto x = solve_in_lattice(n.basis[static_cast<std::size_t>(deg)], iota);
    if (!x || !is_unimodular(*x)) {
      report.ok = false;
      report.detail = "identity summand does not span N in degree " + std::to_string(deg);
      return report;
    }
    coords.push_back(std::move(*x));
  }
  for (int deg = 1; deg <= trunc_dim; ++deg)
    if (n.complex.d(deg) * coords[static_cast<std::size_t>(deg)] !=
        coords[static_cast<std::size_t>(deg - 1)] * c.d(deg)) {
      report.ok = false;
      report.detail = "differential mismatch in degree " + std::to_string(deg);
      return report;
    }
  return report;
}

DoldKanReport check_KN(const SimplicialAbGroup& a) {
  const int top = a.trunc_dim();
  const Normalization n = normalization(a);
  const SimplicialAbGroup k = dold_kan_K(n.complex, top);
  DoldKanReport report;
  std::vector<IntMatrix> phi;
  for (int level = 0; level <= top; ++level) {
    IntMatrix m(a.rank(level), k.rank(level));
    for (const auto& [sigma, offset] : dold_kan_summands(n.complex, level)) {
      const std::size_t r = n.complex.rank(sigma.target);
      if (r == 0) continue;
      m.set_block(0, offset, a.pullback(sigma) * n.basis[static_cast<std::size_t>(sigma.target)]);
    }
    if (m.rows() != m.cols() || !is_unimodular(m)) {
      report.ok = false;
      report.detail = "comparison map is not invertible on level " + std::to_string(level);
      return report;
    }
    phi.push_back(std::move(m));
  }
  for (int level = 1; level <= top; ++level)
    for (int i = 0; i <= level; ++i)
      if (a.face(level, i) * phi[static_cast<std::size_t>(level)] !=
          phi[static_cast<std::size_t>(level - 1)] * k.face(level, i)) {
        report.ok = false;
        report.detail = "face d" + std::to_string(i) + " on level " + std::to_string(level);
        return report;
      }
  for (int level = 0; level < top; ++level)
    for (int j = 0; j <= level; ++j)
      if (a.degen(level, j) * phi[static_cast<std::size_t>(level)] !=
          phi[static_cast<std::size_t>(level + 1)] * k.degen(level, j)) {
        report.ok = false;
        report.detail = "degeneracy s" + std::to_string(j) + " on level " + std::to_string(level);
        return report;
      }
  return report;
}

}  // namespace skernel
