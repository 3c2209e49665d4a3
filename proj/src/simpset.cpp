#include "skernel/simpset.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "skernel/error.hpp"

namespace skernel {

struct SimplicialSet::Data {
  std::vector<std::vector<std::string>> names;
  std::vector<std::vector<std::vector<SimplexRef>>> faces;
  std::optional<int> basepoint;
  std::unordered_map<std::string, CellId> by_name;
};

SimplicialSet::SimplicialSet() : data_(std::make_shared<Data>()) {}

int SimplicialSet::top_dim() const {
  for (int d = static_cast<int>(data_->names.size()) - 1; d >= 0; --d)
    if (!data_->names[static_cast<std::size_t>(d)].empty()) return d;
  return -1;
}

std::size_t SimplicialSet::cell_count(int dim) const {
  if (dim < 0 || dim >= static_cast<int>(data_->names.size())) return 0;
  return data_->names[static_cast<std::size_t>(dim)].size();
}

std::vector<std::size_t> SimplicialSet::cell_counts() const {
  std::vector<std::size_t> out;
  for (int d = 0; d <= top_dim(); ++d) out.push_back(cell_count(d));
  return out;
}

std::size_t SimplicialSet::total_cells() const {
  std::size_t n = 0;
  for (const auto& level : data_->names) n += level.size();
  return n;
}

const std::string& SimplicialSet::name(CellId c) const {
  return data_->names.at(static_cast<std::size_t>(c.dim)).at(static_cast<std::size_t>(c.index));
}

std::optional<CellId> SimplicialSet::find(std::string_view name) const {
  auto it = data_->by_name.find(std::string(name));
  if (it == data_->by_name.end()) return std::nullopt;
  return it->second;
}

const SimplexRef& SimplicialSet::face(CellId c, int i) const {
  if (c.dim <= 0 || i < 0 || i > c.dim) throw ParameterError("face index out of range");
  return data_->faces.at(static_cast<std::size_t>(c.dim))
      .at(static_cast<std::size_t>(c.index))
      .at(static_cast<std::size_t>(i));
}

bool SimplicialSet::pointed() const { return data_->basepoint.has_value(); }

CellId SimplicialSet::basepoint() const {
  if (!data_->basepoint) throw PreconditionError("simplicial set is not pointed");
  return CellId{0, *data_->basepoint};
}

bool SimplicialSet::is_basepoint_simplex(const SimplexRef& s) const {
  return pointed() && s.base == basepoint();
}

SimplexRef SimplicialSet::pullback(const SimplexRef& s, const delta::Map& theta) const {
  if (theta.target != s.dim()) throw ParameterError("operator does not apply to this dimension");
  const delta::Map comp = delta::compose(s.surjection(), theta);
  delta::EpiMono f = delta::factor(comp);
  if (f.injection.is_identity()) return SimplexRef{delta::word_of(f.surjection), s.base};
  // Peel off the coface missing the largest absent value v: δ = δᵛ ∘ δ'.
  const int p = s.base.dim;
  int v = p;
  for (auto it = f.injection.values.rbegin(); it != f.injection.values.rend() && *it == v; ++it)
    --v;
  delta::Map rest{p - 1, {}};
  for (int x : f.injection.values) rest.values.push_back(x > v ? x - 1 : x);
  return pullback(face(s.base, v), delta::compose(rest, f.surjection));
}

SimplexRef SimplicialSet::apply_face(const SimplexRef& s, int i) const {
  const int n = s.dim();
  if (n < 1 || i < 0 || i > n)
    throw ParameterError("face d" + std::to_string(i) + " undefined in dimension " +
                         std::to_string(n));
  return pullback(s, delta::coface(n, i));
}

SimplexRef SimplicialSet::apply_degeneracy(const SimplexRef& s, int j) const {
  const int n = s.dim();
  if (j < 0 || j > n)
    throw ParameterError("degeneracy s" + std::to_string(j) + " undefined in dimension " +
                         std::to_string(n));
  return pullback(s, delta::codegeneracy(n, j));
}

std::vector<SimplexRef> SimplicialSet::all_simplices(int n) const {
  std::vector<SimplexRef> out;
  if (n < 0) return out;
  for (int p = std::min(n, top_dim()); p >= 0; --p) {
    const auto surj = delta::surjections(n, p);
    for (std::size_t i = 0; i < cell_count(p); ++i)
      for (const auto& s : surj)
        out.push_back(SimplexRef{delta::word_of(s), CellId{p, static_cast<int>(i)}});
  }
  return out;
}

std::string SimplicialSet::ref_name(const SimplexRef& s) const {
  std::string out;
  for (int j : s.word) out += "s" + std::to_string(j) + " ";
  return out + name(s.base);
}

SimplexRef SimplicialSet::parse_ref(std::string_view text) const {
  std::istringstream is{std::string(text)};
  std::vector<std::string> tokens;
  for (std::string t; is >> t;) tokens.push_back(t);
  if (tokens.empty()) throw InputError("empty simplex reference");
  auto base = find(tokens.back());
  if (!base) throw InputError("unknown cell '" + tokens.back() + "'");
  SimplexRef r;
  r.base = *base;
  for (std::size_t k = 0; k + 1 < tokens.size(); ++k) {
    const std::string& t = tokens[k];
    if (t.size() < 2 || t[0] != 's' ||
        !std::all_of(t.begin() + 1, t.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
      throw InputError("bad degeneracy token '" + t + "' in '" + std::string(text) + "'");
    r.word.push_back(std::stoi(t.substr(1)));
  }
  for (std::size_t k = 0; k < r.word.size(); ++k) {
    if (k > 0 && r.word[k] >= r.word[k - 1])
      throw InputError("degeneracy word not strictly descending in '" + std::string(text) + "'");
    // s_j applied to a simplex of dimension m needs j ≤ m.
    const int applied_to = r.dim() - static_cast<int>(k) - 1;
    if (r.word[k] > applied_to)
      throw InputError("degeneracy index too large in '" + std::string(text) + "'");
  }
  return r;
}

long long SimplicialSet::euler_characteristic() const {
  long long chi = 0;
  for (int d = 0; d <= top_dim(); ++d)
    chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(cell_count(d));
  return chi;
}

bool operator==(const SimplicialSet& a, const SimplicialSet& b) {
  if (a.data_ == b.data_) return true;
  const int top = std::max(a.top_dim(), b.top_dim());
  for (int d = 0; d <= top; ++d) {
    if (a.cell_count(d) != b.cell_count(d)) return false;
    for (std::size_t i = 0; i < a.cell_count(d); ++i) {
      const CellId c{d, static_cast<int>(i)};
      if (a.name(c) != b.name(c)) return false;
      for (int k = 0; d > 0 && k <= d; ++k)
        if (a.face(c, k) != b.face(c, k)) return false;
    }
  }
  return a.data_->basepoint == b.data_->basepoint;
}

// ---------------------------------------------------------------------------

struct SimplicialSetBuilder::State {
  SimplicialSet::Data data;
};

SimplicialSetBuilder::SimplicialSetBuilder() : state_(std::make_shared<State>()) {}

bool SimplicialSetBuilder::has_name(std::string_view name) const {
  return state_->data.by_name.count(std::string(name)) != 0;
}

std::string SimplicialSetBuilder::unique_name(std::string base) const {
  while (has_name(base)) base += "'";
  return base;
}

std::size_t SimplicialSetBuilder::cell_count(int dim) const {
  const auto& names = state_->data.names;
  if (dim < 0 || dim >= static_cast<int>(names.size())) return 0;
  return names[static_cast<std::size_t>(dim)].size();
}

CellId SimplicialSetBuilder::add_cell(int dim, std::string name, std::vector<SimplexRef> faces) {
  auto& d = state_->data;
  if (dim < 0) throw ParameterError("negative cell dimension");
  if (name.empty()) throw InputError("empty cell name");
  if (d.by_name.count(name)) throw InputError("duplicate cell name '" + name + "'");
  const std::size_t want = dim == 0 ? 0 : static_cast<std::size_t>(dim + 1);
  if (faces.size() != want)
    throw StructuralError("cell '" + name + "' of dimension " + std::to_string(dim) + " has " +
                          std::to_string(faces.size()) + " faces");
  for (const auto& f : faces) {
    if (f.dim() != dim - 1)
      throw StructuralError("face of '" + name + "' has dimension " + std::to_string(f.dim()));
    if (f.base.dim < 0 || f.base.dim >= static_cast<int>(d.names.size()) || f.base.index < 0 ||
        f.base.index >= static_cast<int>(d.names[static_cast<std::size_t>(f.base.dim)].size()))
      throw StructuralError("face of '" + name + "' references an unknown cell");
    for (std::size_t k = 0; k < f.word.size(); ++k)
      if (k > 0 && f.word[k] >= f.word[k - 1])
        throw StructuralError("face of '" + name + "' has a non-descending word");
  }
  if (d.names.size() <= static_cast<std::size_t>(dim)) {
    d.names.resize(static_cast<std::size_t>(dim + 1));
    d.faces.resize(static_cast<std::size_t>(dim + 1));
  }
  const CellId id{dim, static_cast<int>(d.names[static_cast<std::size_t>(dim)].size())};
  d.by_name.emplace(name, id);
  d.names[static_cast<std::size_t>(dim)].push_back(std::move(name));
  d.faces[static_cast<std::size_t>(dim)].push_back(std::move(faces));
  return id;
}

void SimplicialSetBuilder::set_basepoint(CellId c) {
  if (c.dim != 0 || c.index < 0 || static_cast<std::size_t>(c.index) >= cell_count(0))
    throw PreconditionError("basepoint must be an existing 0-cell");
  state_->data.basepoint = c.index;
}

SimplicialSet SimplicialSetBuilder::build() {
  SimplicialSet x;
  x.data_ = std::make_shared<const SimplicialSet::Data>(state_->data);
  for (int n = 2; n <= x.top_dim(); ++n) {
    for (std::size_t c = 0; c < x.cell_count(n); ++c) {
      const CellId id{n, static_cast<int>(c)};
      for (int j = 1; j <= n; ++j)
        for (int i = 0; i < j; ++i) {
          if (x.apply_face(x.face(id, j), i) != x.apply_face(x.face(id, i), j - 1)) {
            throw StructuralError("simplicial identity d" + std::to_string(i) + " d" +
                                  std::to_string(j) + " = d" + std::to_string(j - 1) + " d" +
                                  std::to_string(i) + " fails on '" + x.name(id) + "'");
          }
        }
    }
  }
  return x;
}

// ---------------------------------------------------------------------------

SimplicialMap::SimplicialMap(SimplicialSet source, SimplicialSet target,
                             std::vector<std::vector<SimplexRef>> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  images_.resize(static_cast<std::size_t>(std::max(source_.top_dim() + 1, 0)));
  for (int d = 0; d <= source_.top_dim(); ++d) {
    auto& level = images_[static_cast<std::size_t>(d)];
    if (level.size() != source_.cell_count(d))
      throw StructuralError("simplicial map: wrong number of images in dimension " +
                            std::to_string(d));
    for (const auto& r : level) {
      if (r.dim() != d || r.base.dim > target_.top_dim() || r.base.index < 0 ||
          static_cast<std::size_t>(r.base.index) >= target_.cell_count(r.base.dim))
        throw StructuralError("simplicial map: invalid image in dimension " + std::to_string(d));
    }
  }
  for (int d = 1; d <= source_.top_dim(); ++d) {
    for (std::size_t c = 0; c < source_.cell_count(d); ++c) {
      const CellId id{d, static_cast<int>(c)};
      for (int i = 0; i <= d; ++i) {
        if ((*this)(source_.face(id, i)) != target_.apply_face(image(id), i))
          throw StructuralError("simplicial map does not commute with d" + std::to_string(i) +
                                " on '" + source_.name(id) + "'");
      }
    }
  }
}

SimplicialMap SimplicialMap::from_function(const SimplicialSet& source,
                                           const SimplicialSet& target,
                                           const std::function<SimplexRef(CellId)>& image) {
  std::vector<std::vector<SimplexRef>> images;
  for (int d = 0; d <= source.top_dim(); ++d) {
    images.emplace_back();
    for (std::size_t c = 0; c < source.cell_count(d); ++c)
      images.back().push_back(image(CellId{d, static_cast<int>(c)}));
  }
  return SimplicialMap(source, target, std::move(images));
}

SimplicialMap SimplicialMap::identity(const SimplicialSet& x) {
  return from_function(x, x, [](CellId c) { return SimplexRef::of(c); });
}

const SimplexRef& SimplicialMap::image(CellId c) const {
  return images_.at(static_cast<std::size_t>(c.dim)).at(static_cast<std::size_t>(c.index));
}

SimplexRef SimplicialMap::operator()(const SimplexRef& s) const {
  const SimplexRef& fx = image(s.base);
  if (s.word.empty()) return fx;
  return target_.pullback(fx, s.surjection());
}

bool SimplicialMap::preserves_basepoint() const {
  if (!source_.pointed()) return true;
  if (!target_.pointed()) return false;
  return image(source_.basepoint()) == SimplexRef::of(target_.basepoint());
}

bool SimplicialMap::injective() const {
  for (int d = 0; d <= source_.top_dim(); ++d) {
    std::vector<CellId> seen;
    for (const auto& r : images_[static_cast<std::size_t>(d)]) {
      if (r.degenerate()) return false;
      seen.push_back(r.base);
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
  }
  return true;
}

bool SimplicialMap::is_isomorphism() const {
  if (!injective()) return false;
  const int top = std::max(source_.top_dim(), target_.top_dim());
  for (int d = 0; d <= top; ++d)
    if (source_.cell_count(d) != target_.cell_count(d)) return false;
  return true;
}

bool operator==(const SimplicialMap& a, const SimplicialMap& b) {
  return a.source_ == b.source_ && a.target_ == b.target_ && a.images_ == b.images_;
}

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f) {
  if (!(f.target() == g.source())) throw StructuralError("compose: simplicial maps do not chain");
  return SimplicialMap::from_function(f.source(), g.target(),
                                      [&](CellId c) { return g(f.image(c)); });
}

// ---------------------------------------------------------------------------
// Invariants

Components pi0(const SimplicialSet& x) {
  const std::size_t nv = x.cell_count(0);
  std::vector<int> parent(nv);
  for (std::size_t i = 0; i < nv; ++i) parent[i] = static_cast<int>(i);
  std::function<int(int)> root = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      parent[static_cast<std::size_t>(v)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
      v = parent[static_cast<std::size_t>(v)];
    }
    return v;
  };
  for (std::size_t e = 0; e < x.cell_count(1); ++e) {
    const CellId id{1, static_cast<int>(e)};
    const int a = root(x.face(id, 0).base.index);
    const int b = root(x.face(id, 1).base.index);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
  Components c;
  c.of_vertex.assign(nv, -1);
  std::map<int, int> label;
  for (std::size_t v = 0; v < nv; ++v) {
    const int r = root(static_cast<int>(v));
    auto [it, fresh] = label.emplace(r, c.count);
    if (fresh) ++c.count;
    c.of_vertex[v] = it->second;
  }
  return c;
}

ChainComplex chains(const SimplicialSet& x, bool normalized, std::optional<int> cap,
                    bool reduced) {
  const bool quotient_base = reduced && x.pointed();
  if (normalized) {
    const int top = cap ? std::min(*cap, x.top_dim()) : x.top_dim();
    if (top < 0) return ChainComplex();
    std::vector<std::size_t> ranks;
    auto index_of = [&](const SimplexRef& r) -> std::optional<std::size_t> {
      if (r.degenerate()) return std::nullopt;
      if (quotient_base && r.base == x.basepoint()) return std::nullopt;
      std::size_t i = static_cast<std::size_t>(r.base.index);
      if (quotient_base && r.base.dim == 0 && r.base.index > x.basepoint().index) --i;
      return i;
    };
    for (int n = 0; n <= top; ++n)
      ranks.push_back(x.cell_count(n) - (quotient_base && n == 0 ? 1 : 0));
    std::map<int, IntMatrix> d;
    for (int n = 1; n <= top; ++n) {
      IntMatrix m(ranks[static_cast<std::size_t>(n - 1)], ranks[static_cast<std::size_t>(n)]);
      for (std::size_t c = 0; c < x.cell_count(n); ++c) {
        const CellId id{n, static_cast<int>(c)};
        for (int i = 0; i <= n; ++i) {
          if (auto row = index_of(x.face(id, i))) m(*row, c) += (i % 2 == 0 ? 1 : -1);
        }
      }
      d[n] = std::move(m);
    }
    return ChainComplex(0, top, std::move(ranks), std::move(d));
  }
  if (!cap) throw ParameterError("unnormalized chains need a dimension cap");
  if (*cap < 0 || x.top_dim() < 0) return ChainComplex();
  std::vector<std::vector<SimplexRef>> basis;
  std::vector<std::map<SimplexRef, std::size_t>> index;
  for (int n = 0; n <= *cap; ++n) {
    basis.emplace_back();
    index.emplace_back();
    for (auto& s : x.all_simplices(n)) {
      if (quotient_base && x.is_basepoint_simplex(s)) continue;
      index.back().emplace(s, basis.back().size());
      basis.back().push_back(std::move(s));
    }
  }
  std::vector<std::size_t> ranks;
  for (const auto& b : basis) ranks.push_back(b.size());
  std::map<int, IntMatrix> d;
  for (int n = 1; n <= *cap; ++n) {
    const auto& lower = index[static_cast<std::size_t>(n - 1)];
    IntMatrix m(ranks[static_cast<std::size_t>(n - 1)], ranks[static_cast<std::size_t>(n)]);
    const auto& level = basis[static_cast<std::size_t>(n)];
    for (std::size_t c = 0; c < level.size(); ++c)
      for (int i = 0; i <= n; ++i) {
        auto it = lower.find(x.apply_face(level[c], i));
        if (it != lower.end()) m(it->second, c) += (i % 2 == 0 ? 1 : -1);
      }
    d[n] = std::move(m);
  }
  return ChainComplex(0, *cap, std::move(ranks), std::move(d));
}

ChainMap chain_map(const SimplicialMap& f) {
  const ChainComplex src = chains(f.source(), true, std::nullopt, false);
  const ChainComplex dst = chains(f.target(), true, std::nullopt, false);
  std::map<int, IntMatrix> comps;
  for (int n = 0; n <= f.source().top_dim(); ++n) {
    IntMatrix m(dst.rank(n), src.rank(n));
    for (std::size_t c = 0; c < f.source().cell_count(n); ++c) {
      const SimplexRef& r = f.image(CellId{n, static_cast<int>(c)});
      if (!r.degenerate()) m(static_cast<std::size_t>(r.base.index), c) = 1;
    }
    comps[n] = std::move(m);
  }
  return ChainMap(src, dst, std::move(comps));
}

HomologyGroup homology_space(const SimplicialSet& x, int n) {
  return homology(chains(x, true, std::nullopt, true), n);
}

HomologyGroup homology_unreduced(const SimplicialSet& x, int n) {
  return homology(chains(x, true, std::nullopt, false), n);
}

}  // namespace skernel
