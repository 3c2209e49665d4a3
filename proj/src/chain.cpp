#include "skernel/chain.hpp"

#include <algorithm>
#include <sstream>

#include "skernel/error.hpp"

namespace skernel {

std::string HomologyGroup::to_string() const {
  std::vector<std::string> parts;
  if (free_rank == 1) parts.emplace_back("Z");
  if (free_rank > 1) parts.push_back("Z^" + std::to_string(free_rank));
  for (const auto& t : torsion) parts.push_back("Z/" + t.str());
  if (parts.empty()) return "0";
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
  return out;
}

HomologyGroup HomologyGroup::from_invariants(std::size_t ambient_rank,
                                             const std::vector<Integer>& invariant_factors) {
  HomologyGroup g;
  g.free_rank = ambient_rank - invariant_factors.size();
  for (const auto& f : invariant_factors)
    if (f > 1) g.torsion.push_back(f);
  return g;
}

// ---------------------------------------------------------------------------

ChainComplex::ChainComplex() : ChainComplex(0, 0, {0}) {}

ChainComplex::ChainComplex(int min_deg, int max_deg, std::vector<std::size_t> ranks,
                           std::map<int, IntMatrix> differentials)
    : min_(min_deg), max_(max_deg), ranks_(std::move(ranks)) {
  if (min_ > max_) throw StructuralError("chain complex with min_deg > max_deg");
  if (ranks_.size() != static_cast<std::size_t>(max_ - min_ + 1))
    throw StructuralError("chain complex rank list has wrong length");
  d_.reserve(ranks_.size() + 1);
  for (int n = min_; n <= max_ + 1; ++n) {
    const std::size_t r_out = rank(n - 1), r_in = rank(n);
    auto it = differentials.find(n);
    if (it == differentials.end()) {
      d_.emplace_back(r_out, r_in);
      continue;
    }
    if (it->second.rows() != r_out || it->second.cols() != r_in) {
      throw StructuralError("differential d(" + std::to_string(n) + ") has shape " +
                            std::to_string(it->second.rows()) + "x" +
                            std::to_string(it->second.cols()) + ", expected " +
                            std::to_string(r_out) + "x" + std::to_string(r_in));
    }
    d_.push_back(std::move(it->second));
  }
  for (const auto& [n, m] : differentials)
    if ((n < min_ || n > max_ + 1) && !m.empty())
      throw StructuralError("differential d(" + std::to_string(n) + ") outside degree range");
  for (int n = min_ + 1; n <= max_; ++n) {
    if (!(d(n - 1) * d(n)).is_zero())
      throw StructuralError("d(" + std::to_string(n - 1) + ")*d(" + std::to_string(n) +
                            ") != 0");
  }
}

ChainComplex ChainComplex::concentrated(int degree, std::size_t rank) {
  return ChainComplex(degree, degree, {rank});
}

std::size_t ChainComplex::rank(int n) const {
  if (n < min_ || n > max_) return 0;
  return ranks_[static_cast<std::size_t>(n - min_)];
}

const IntMatrix& ChainComplex::d(int n) const {
  if (n < min_ || n > max_ + 1) return empty_;
  return d_[static_cast<std::size_t>(n - min_)];
}

int ChainComplex::top_nonzero_degree() const {
  for (int n = max_; n >= min_; --n)
    if (rank(n) != 0) return n;
  return min_;
}

long long ChainComplex::euler_characteristic() const {
  long long chi = 0;
  for (int n = min_; n <= max_; ++n)
    chi += (n % 2 == 0 ? 1 : -1) * static_cast<long long>(rank(n));
  return chi;
}

// ---------------------------------------------------------------------------

ChainMap::ChainMap(ChainComplex source, ChainComplex target, std::map<int, IntMatrix> components)
    : source_(std::move(source)), target_(std::move(target)), components_(std::move(components)) {
  for (const auto& [n, m] : components_) {
    if (m.rows() != target_.rank(n) || m.cols() != source_.rank(n)) {
      throw StructuralError("chain map component " + std::to_string(n) + " has shape " +
                            std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                            ", expected " + std::to_string(target_.rank(n)) + "x" +
                            std::to_string(source_.rank(n)));
    }
  }
  const int lo = std::min(source_.min_deg(), target_.min_deg());
  const int hi = std::max(source_.max_deg(), target_.max_deg()) + 1;
  for (int n = lo; n <= hi; ++n) {
    if (target_.d(n) * component(n) != component(n - 1) * source_.d(n))
      throw StructuralError("chain map does not commute with d in degree " + std::to_string(n));
  }
}

ChainMap ChainMap::identity(const ChainComplex& c) {
  std::map<int, IntMatrix> comps;
  for (int n = c.min_deg(); n <= c.max_deg(); ++n) comps[n] = IntMatrix::identity(c.rank(n));
  return ChainMap(c, c, std::move(comps));
}

ChainMap ChainMap::zero(const ChainComplex& source, const ChainComplex& target) {
  return ChainMap(source, target, {});
}

IntMatrix ChainMap::component(int n) const {
  auto it = components_.find(n);
  if (it != components_.end()) return it->second;
  return IntMatrix(target_.rank(n), source_.rank(n));
}

// ---------------------------------------------------------------------------

HomologyGroup homology(const ChainComplex& c, int n) {
  if (c.rank(n) == 0) return {};
  const std::size_t rank_out = invariant_factors(c.d(n)).size();
  const auto incoming = invariant_factors(c.d(n + 1));
  HomologyGroup g;
  g.free_rank = c.rank(n) - rank_out - incoming.size();
  for (const auto& f : incoming)
    if (f > 1) g.torsion.push_back(f);
  return g;
}

ChainComplex shift(const ChainComplex& c, int p) {
  std::vector<std::size_t> ranks;
  std::map<int, IntMatrix> d;
  const Integer sign = (p % 2 == 0) ? 1 : -1;
  for (int n = c.min_deg(); n <= c.max_deg(); ++n) {
    ranks.push_back(c.rank(n));
    if (n > c.min_deg()) d[n + p] = sign * c.d(n);
  }
  return ChainComplex(c.min_deg() + p, c.max_deg() + p, std::move(ranks), std::move(d));
}

IntMatrix good_truncation_inclusion(const ChainComplex& c, int n) {
  return kernel_basis(c.d(n));
}

ChainComplex truncate_good(const ChainComplex& c, int n) {
  if (n <= c.min_deg()) {
    // d(min) already vanishes, so ker d_min = C_min.
    return c;
  }
  if (n > c.max_deg()) return ChainComplex(n, n, {0});
  const IntMatrix z = good_truncation_inclusion(c, n);
  std::vector<std::size_t> ranks;
  std::map<int, IntMatrix> d;
  ranks.push_back(z.cols());
  for (int m = n + 1; m <= c.max_deg(); ++m) {
    ranks.push_back(c.rank(m));
    if (m == n + 1) {
      auto coords = solve_in_lattice(z, c.d(m));
      if (!coords) throw StructuralError("image of d lies outside the kernel");
      d[m] = *coords;
    } else {
      d[m] = c.d(m);
    }
  }
  return ChainComplex(n, c.max_deg(), std::move(ranks), std::move(d));
}

ChainComplex truncate_stupid(const ChainComplex& c, int n) {
  if (n >= c.max_deg()) return c;
  if (n < c.min_deg()) return ChainComplex(c.min_deg(), c.min_deg(), {0});
  std::vector<std::size_t> ranks;
  std::map<int, IntMatrix> d;
  for (int m = c.min_deg(); m <= n; ++m) {
    ranks.push_back(c.rank(m));
    if (m > c.min_deg()) d[m] = c.d(m);
  }
  return ChainComplex(c.min_deg(), n, std::move(ranks), std::move(d));
}

ChainComplex direct_sum(const ChainComplex& a, const ChainComplex& b) {
  const int lo = std::min(a.min_deg(), b.min_deg());
  const int hi = std::max(a.max_deg(), b.max_deg());
  std::vector<std::size_t> ranks;
  std::map<int, IntMatrix> d;
  for (int n = lo; n <= hi; ++n) {
    ranks.push_back(a.rank(n) + b.rank(n));
    if (n == lo) continue;
    IntMatrix m(a.rank(n - 1) + b.rank(n - 1), a.rank(n) + b.rank(n));
    m.set_block(0, 0, a.d(n));
    m.set_block(a.rank(n - 1), a.rank(n), b.d(n));
    d[n] = std::move(m);
  }
  return ChainComplex(lo, hi, std::move(ranks), std::move(d));
}

std::vector<std::pair<int, std::size_t>> tensor_blocks(const ChainComplex& a,
                                                       const ChainComplex& b, int n) {
  std::vector<std::pair<int, std::size_t>> out;
  std::size_t offset = 0;
  for (int i = a.min_deg(); i <= a.max_deg(); ++i) {
    const std::size_t r = a.rank(i) * b.rank(n - i);
    if (r == 0) continue;
    out.emplace_back(i, offset);
    offset += r;
  }
  return out;
}

namespace {

std::size_t tensor_rank(const ChainComplex& a, const ChainComplex& b, int n) {
  std::size_t r = 0;
  for (int i = a.min_deg(); i <= a.max_deg(); ++i) r += a.rank(i) * b.rank(n - i);
  return r;
}

std::size_t block_offset(const std::vector<std::pair<int, std::size_t>>& blocks, int i) {
  for (const auto& [deg, off] : blocks)
    if (deg == i) return off;
  throw StructuralError("tensor block lookup failed");
}

}  // namespace

ChainComplex tensor(const ChainComplex& a, const ChainComplex& b) {
  const int lo = a.min_deg() + b.min_deg();
  const int hi = a.max_deg() + b.max_deg();
  std::vector<std::size_t> ranks;
  std::map<int, IntMatrix> d;
  for (int n = lo; n <= hi; ++n) {
    ranks.push_back(tensor_rank(a, b, n));
    if (n == lo) continue;
    IntMatrix m(tensor_rank(a, b, n - 1), tensor_rank(a, b, n));
    const auto src = tensor_blocks(a, b, n);
    const auto dst = tensor_blocks(a, b, n - 1);
    for (const auto& [i, off] : src) {
      const int j = n - i;
      // da ⊗ b lands in block (i-1, j)
      if (a.rank(i - 1) != 0) {
        m.add_block(block_offset(dst, i - 1), off,
                    IntMatrix::kronecker(a.d(i), IntMatrix::identity(b.rank(j))));
      }
      // (−1)^i a ⊗ db lands in block (i, j-1)
      if (b.rank(j - 1) != 0) {
        const Integer sign = (i % 2 == 0) ? 1 : -1;
        m.add_block(block_offset(dst, i), off,
                    sign * IntMatrix::kronecker(IntMatrix::identity(a.rank(i)), b.d(j)));
      }
    }
    d[n] = std::move(m);
  }
  return ChainComplex(lo, hi, std::move(ranks), std::move(d));
}

namespace {

struct HomLayout {
  std::vector<std::pair<int, std::size_t>> blocks;  // (i, offset) for Hom(K_i, L_{i+n})
  std::size_t size = 0;
};

HomLayout hom_layout(const ChainComplex& k, const ChainComplex& l, int n) {
  HomLayout h;
  for (int i = k.min_deg(); i <= k.max_deg(); ++i) {
    const std::size_t r = k.rank(i) * l.rank(i + n);
    if (r == 0) continue;
    h.blocks.emplace_back(i, h.size);
    h.size += r;
  }
  return h;
}

}  // namespace

ChainComplex hom_complex(const ChainComplex& k, const ChainComplex& l) {
  const int lo = l.min_deg() - k.max_deg();
  const int hi = l.max_deg() - k.min_deg();
  std::vector<std::size_t> ranks;
  std::map<int, IntMatrix> d;
  for (int n = lo; n <= hi; ++n) {
    const HomLayout src = hom_layout(k, l, n);
    ranks.push_back(src.size);
    if (n == lo) continue;
    const HomLayout dst = hom_layout(k, l, n - 1);
    IntMatrix m(dst.size, src.size);
    const Integer sign = (n % 2 == 0) ? -1 : 1;  // −(−1)^n
    for (const auto& [i, off] : src.blocks) {
      // f_i ↦ d_L ∘ f_i in Hom(K_i, L_{i+n-1})
      if (l.rank(i + n - 1) != 0) {
        m.add_block(block_offset(dst.blocks, i), off,
                    IntMatrix::kronecker(l.d(i + n), IntMatrix::identity(k.rank(i))));
      }
      // f_i ↦ −(−1)^n f_i ∘ d_K(i+1) in Hom(K_{i+1}, L_{i+n})
      if (k.rank(i + 1) != 0) {
        m.add_block(
            block_offset(dst.blocks, i + 1), off,
            sign * IntMatrix::kronecker(IntMatrix::identity(l.rank(i + n)), k.d(i + 1).transpose()));
      }
    }
    d[n] = std::move(m);
  }
  return ChainComplex(lo, hi, std::move(ranks), std::move(d));
}

HomologyGroup homotopy_class_group(const ChainComplex& k, const ChainComplex& l) {
  return homology(hom_complex(k, l), 0);
}

ChainComplex mapping_cone(const ChainMap& f) {
  // cone_n = X_{n-1} ⊕ Y_n, d(x, y) = (−d x, f x + d y)
  const ChainComplex& x = f.source();
  const ChainComplex& y = f.target();
  const int lo = std::min(x.min_deg() + 1, y.min_deg());
  const int hi = std::max(x.max_deg() + 1, y.max_deg());
  std::vector<std::size_t> ranks;
  std::map<int, IntMatrix> d;
  for (int n = lo; n <= hi; ++n) {
    ranks.push_back(x.rank(n - 1) + y.rank(n));
    if (n == lo) continue;
    IntMatrix m(x.rank(n - 2) + y.rank(n - 1), x.rank(n - 1) + y.rank(n));
    m.set_block(0, 0, -x.d(n - 1));
    m.set_block(x.rank(n - 2), 0, f.component(n - 1));
    m.set_block(x.rank(n - 2), x.rank(n - 1), y.d(n));
    d[n] = std::move(m);
  }
  return ChainComplex(lo, hi, std::move(ranks), std::move(d));
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
  if (!(f.target() == g.source())) throw StructuralError("compose: chain maps do not chain");
  std::map<int, IntMatrix> comps;
  for (int n = f.source().min_deg(); n <= f.source().max_deg(); ++n)
    comps[n] = g.component(n) * f.component(n);
  return ChainMap(f.source(), g.target(), std::move(comps));
}

HomologyMapVerdict homology_map(const ChainMap& f, int n) {
  const ChainComplex& c = f.source();
  const ChainComplex& t = f.target();
  HomologyMapVerdict v;
  v.degree = n;
  v.source = homology(c, n);
  v.target = homology(t, n);
  const IntMatrix fn = f.component(n);
  const IntMatrix z = kernel_basis(c.d(n));
  const IntMatrix zt = kernel_basis(t.d(n));
  const IntMatrix& b = c.d(n + 1);
  const IntMatrix& bt = t.d(n + 1);
  const IntMatrix fz = fn * z;

  // surjective: f(Z) + B' = Z'
  v.surjective = lattice_basis(IntMatrix::hstack(fz, bt)) == lattice_basis(zt);

  // injective: {z ∈ Z : f z ∈ B'} = B
  const IntMatrix rel = kernel_basis(IntMatrix::hstack(fz, -bt));
  const IntMatrix preimage = z * rel.block(0, z.cols(), 0, rel.cols());
  v.injective = lattice_basis(IntMatrix::hstack(preimage, b)) == lattice_basis(b);
  return v;
}

std::string QuasiIsoReport::to_string() const {
  std::ostringstream os;
  os << (quasi_iso ? "quasi-isomorphism" : "not a quasi-isomorphism") << '\n';
  for (const auto& v : degrees) {
    os << "  H" << v.degree << ": " << v.source.to_string() << " -> " << v.target.to_string()
       << (v.injective ? " injective" : " not-injective")
       << (v.surjective ? " surjective" : " not-surjective") << '\n';
  }
  return os.str();
}

QuasiIsoReport check_quasi_iso(const ChainMap& f) {
  QuasiIsoReport r;
  const int lo = std::min(f.source().min_deg(), f.target().min_deg());
  const int hi = std::max(f.source().max_deg(), f.target().max_deg());
  for (int n = lo; n <= hi; ++n) {
    auto v = homology_map(f, n);
    if (!v.iso()) r.quasi_iso = false;
    r.degrees.push_back(std::move(v));
  }
  return r;
}

namespace {

// Restriction Hom•(K, L) → Hom•(σ≤n K, L): keep the blocks with i ≤ n.
ChainMap hom_restriction(const ChainComplex& k, const ChainComplex& l, int n) {
  const ChainComplex full = hom_complex(k, l);
  const ChainComplex part = hom_complex(truncate_stupid(k, n), l);
  std::map<int, IntMatrix> comps;
  for (int m = part.min_deg(); m <= part.max_deg(); ++m) {
    const HomLayout src = hom_layout(k, l, m);
    IntMatrix p(part.rank(m), full.rank(m));
    std::size_t row = 0;
    for (const auto& [i, off] : src.blocks) {
      if (i > n) continue;
      const std::size_t r = k.rank(i) * l.rank(i + m);
      for (std::size_t e = 0; e < r; ++e) p(row + e, off + e) = 1;
      row += r;
    }
    comps[m] = std::move(p);
  }
  return ChainMap(full, part, std::move(comps));
}

}  // namespace

namespace {

// Equality ignoring zero-rank padding at either end.
bool same_graded(const ChainComplex& a, const ChainComplex& b) {
  const int lo = std::min(a.min_deg(), b.min_deg());
  const int hi = std::max(a.max_deg(), b.max_deg());
  for (int n = lo; n <= hi; ++n) {
    if (a.rank(n) != b.rank(n)) return false;
    if (a.rank(n) > 0 && a.rank(n - 1) > 0 && !(a.d(n) == b.d(n))) return false;
  }
  return true;
}

}  // namespace

TowerReport sigma_tower_report(const ChainComplex& k, const ChainComplex& l) {
  TowerReport rep;
  for (int n = k.min_deg(); n <= k.max_deg(); ++n)
    rep.tower.emplace_back(n, homotopy_class_group(truncate_stupid(k, n), l));
  rep.stabilization_index = std::max(k.min_deg(), k.top_nonzero_degree());
  rep.limit_group = rep.tower.back().second;

  // The tower is constant from the stabilization index on: σ≤n K = K there,
  // so every transition map is the identity and lim¹ vanishes.
  bool constant = true;
  for (const auto& [n, g] : rep.tower)
    if (n >= rep.stabilization_index && !(g == rep.limit_group)) constant = false;
  rep.lim1_vanishes = constant && same_graded(truncate_stupid(k, rep.stabilization_index), k);

  rep.hom_full = homotopy_class_group(k, l);
  const HomologyMapVerdict v = homology_map(hom_restriction(k, l, rep.stabilization_index), 0);
  rep.exactness_verified = rep.lim1_vanishes && v.iso() && rep.hom_full == rep.limit_group;
  return rep;
}

}  // namespace skernel
