#include "skernel/bisimplicial.hpp"

#include <algorithm>

#include "skernel/error.hpp"

namespace skernel {

struct BisimplicialSet::Data {
  // cells[p][q] = list of (name, hfaces, vfaces)
  struct Cell {
    std::string name;
    std::vector<BiRef> hfaces;
    std::vector<BiRef> vfaces;
  };
  std::vector<std::vector<std::vector<Cell>>> cells;

  const Cell& at(BiCell c) const {
    return cells.at(static_cast<std::size_t>(c.p))
        .at(static_cast<std::size_t>(c.q))
        .at(static_cast<std::size_t>(c.index));
  }
};

BisimplicialSet::BisimplicialSet() : data_(std::make_shared<Data>()) {}

int BisimplicialSet::max_p() const {
  for (int p = static_cast<int>(data_->cells.size()) - 1; p >= 0; --p)
    for (const auto& col : data_->cells[static_cast<std::size_t>(p)])
      if (!col.empty()) return p;
  return -1;
}

int BisimplicialSet::max_q() const {
  int best = -1;
  for (const auto& row : data_->cells)
    for (std::size_t q = 0; q < row.size(); ++q)
      if (!row[q].empty()) best = std::max(best, static_cast<int>(q));
  return best;
}

std::size_t BisimplicialSet::cell_count(int p, int q) const {
  if (p < 0 || q < 0 || p >= static_cast<int>(data_->cells.size())) return 0;
  const auto& row = data_->cells[static_cast<std::size_t>(p)];
  if (q >= static_cast<int>(row.size())) return 0;
  return row[static_cast<std::size_t>(q)].size();
}

const std::string& BisimplicialSet::name(BiCell c) const { return data_->at(c).name; }

const BiRef& BisimplicialSet::hface(BiCell c, int i) const {
  if (c.p <= 0 || i < 0 || i > c.p) throw ParameterError("horizontal face index out of range");
  return data_->at(c).hfaces.at(static_cast<std::size_t>(i));
}

const BiRef& BisimplicialSet::vface(BiCell c, int j) const {
  if (c.q <= 0 || j < 0 || j > c.q) throw ParameterError("vertical face index out of range");
  return data_->at(c).vfaces.at(static_cast<std::size_t>(j));
}

namespace {

// Splits an injection δ : [k] → [p] as δᵛ ∘ δ' with v the largest missing value.
std::pair<int, delta::Map> peel(const delta::Map& inj) {
  int v = inj.target;
  for (auto it = inj.values.rbegin(); it != inj.values.rend() && *it == v; ++it) --v;
  delta::Map rest{inj.target - 1, {}};
  for (int x : inj.values) rest.values.push_back(x > v ? x - 1 : x);
  return {v, rest};
}

}  // namespace

BiRef BisimplicialSet::pullback(const BiRef& x, const delta::Map& theta_h,
                                const delta::Map& theta_v) const {
  if (theta_h.target != x.p() || theta_v.target != x.q())
    throw ParameterError("bisimplicial operator does not apply to this bidegree");
  const delta::Map alpha_h = delta::compose(delta::surjection_of(x.hword, x.base.p), theta_h);
  const delta::Map alpha_v = delta::compose(delta::surjection_of(x.vword, x.base.q), theta_v);
  const auto fh = delta::factor(alpha_h);
  const auto fv = delta::factor(alpha_v);
  if (!fh.injection.is_identity()) {
    auto [v, rest] = peel(fh.injection);
    return pullback(hface(x.base, v), delta::compose(rest, fh.surjection), alpha_v);
  }
  if (!fv.injection.is_identity()) {
    auto [v, rest] = peel(fv.injection);
    return pullback(vface(x.base, v), fh.surjection, delta::compose(rest, fv.surjection));
  }
  return BiRef{delta::word_of(fh.surjection), delta::word_of(fv.surjection), x.base};
}

// ---------------------------------------------------------------------------

struct BisimplicialSetBuilder::State {
  std::shared_ptr<BisimplicialSet::Data> data = std::make_shared<BisimplicialSet::Data>();
};

BisimplicialSetBuilder::BisimplicialSetBuilder() : state_(std::make_shared<State>()) {}

BiCell BisimplicialSetBuilder::add_cell(int p, int q, std::string name, std::vector<BiRef> hfaces,
                                        std::vector<BiRef> vfaces) {
  if (p < 0 || q < 0) throw ParameterError("negative bidegree");
  auto& cells = state_->data->cells;
  if (static_cast<int>(hfaces.size()) != (p > 0 ? p + 1 : 0) ||
      static_cast<int>(vfaces.size()) != (q > 0 ? q + 1 : 0))
    throw StructuralError("bisimplex '" + name + "' has the wrong number of faces");
  auto exists = [&](const BiRef& r) {
    return r.base.p < static_cast<int>(cells.size()) &&
           r.base.q < static_cast<int>(cells[static_cast<std::size_t>(r.base.p)].size()) &&
           r.base.index <
               static_cast<int>(cells[static_cast<std::size_t>(r.base.p)][static_cast<std::size_t>(r.base.q)].size());
  };
  for (const auto& f : hfaces)
    if (f.p() != p - 1 || f.q() != q || !exists(f))
      throw StructuralError("bisimplex '" + name + "': bad horizontal face");
  for (const auto& f : vfaces)
    if (f.p() != p || f.q() != q - 1 || !exists(f))
      throw StructuralError("bisimplex '" + name + "': bad vertical face");
  if (static_cast<int>(cells.size()) <= p) cells.resize(static_cast<std::size_t>(p + 1));
  auto& row = cells[static_cast<std::size_t>(p)];
  if (static_cast<int>(row.size()) <= q) row.resize(static_cast<std::size_t>(q + 1));
  auto& level = row[static_cast<std::size_t>(q)];
  level.push_back({std::move(name), std::move(hfaces), std::move(vfaces)});
  return BiCell{p, q, static_cast<int>(level.size()) - 1};
}

BisimplicialSet BisimplicialSetBuilder::build() {
  BisimplicialSet out;
  out.data_ = state_->data;
  const auto id = [](int n) { return delta::identity(n); };
  for (int p = 0; p <= out.max_p(); ++p)
    for (int q = 0; q <= out.max_q(); ++q)
      for (std::size_t k = 0; k < out.cell_count(p, q); ++k) {
        const BiRef x = BiRef::of(BiCell{p, q, static_cast<int>(k)});
        auto fail = [&](const std::string& what) {
          throw StructuralError("bisimplex '" + out.name(x.base) + "' violates " + what);
        };
        for (int i = 0; i <= p; ++i)
          for (int j = i + 1; j <= p && p >= 2; ++j)
            if (out.pullback(x, delta::compose(delta::coface(p, j), delta::coface(p - 1, i)), id(q)) !=
                out.pullback(x, delta::compose(delta::coface(p, i), delta::coface(p - 1, j - 1)), id(q)))
              fail("d^h_" + std::to_string(i) + " d^h_" + std::to_string(j) + " = d^h_" +
                   std::to_string(j - 1) + " d^h_" + std::to_string(i));
        for (int i = 0; i <= q; ++i)
          for (int j = i + 1; j <= q && q >= 2; ++j)
            if (out.pullback(x, id(p), delta::compose(delta::coface(q, j), delta::coface(q - 1, i))) !=
                out.pullback(x, id(p), delta::compose(delta::coface(q, i), delta::coface(q - 1, j - 1))))
              fail("d^v_" + std::to_string(i) + " d^v_" + std::to_string(j) + " = d^v_" +
                   std::to_string(j - 1) + " d^v_" + std::to_string(i));
        for (int i = 0; i <= p && p > 0; ++i)
          for (int j = 0; j <= q && q > 0; ++j) {
            const BiRef hv = out.pullback(out.hface(x.base, i), id(p - 1), delta::coface(q, j));
            const BiRef vh = out.pullback(out.vface(x.base, j), delta::coface(p, i), id(q - 1));
            if (hv != vh)
              fail("d^h_" + std::to_string(i) + " d^v_" + std::to_string(j) + " = d^v_" +
                   std::to_string(j) + " d^h_" + std::to_string(i));
          }
      }
  state_ = std::make_shared<State>();
  return out;
}

// ---------------------------------------------------------------------------

BisimplicialSet vertically_constant(const SimplicialSet& x) {
  BisimplicialSetBuilder b;
  for (int d = 0; d <= x.top_dim(); ++d)
    for (std::size_t i = 0; i < x.cell_count(d); ++i) {
      const CellId c{d, static_cast<int>(i)};
      std::vector<BiRef> hf;
      for (int k = 0; d > 0 && k <= d; ++k) {
        const SimplexRef f = x.face(c, k);
        hf.push_back(BiRef{f.word, {}, BiCell{f.base.dim, 0, f.base.index}});
      }
      b.add_cell(d, 0, x.name(c), std::move(hf), {});
    }
  return b.build();
}

BisimplicialSet external_product(const SimplicialSet& x, const SimplicialSet& y) {
  BisimplicialSetBuilder b;
  const auto count_y = [&](int q) { return static_cast<int>(y.cell_count(q)); };
  for (int p = 0; p <= x.top_dim(); ++p)
    for (int q = 0; q <= y.top_dim(); ++q)
      for (std::size_t i = 0; i < x.cell_count(p); ++i)
        for (std::size_t j = 0; j < y.cell_count(q); ++j) {
          const CellId cx{p, static_cast<int>(i)}, cy{q, static_cast<int>(j)};
          std::vector<BiRef> hf, vf;
          for (int k = 0; p > 0 && k <= p; ++k) {
            const SimplexRef f = x.face(cx, k);
            hf.push_back(BiRef{f.word, {},
                               BiCell{f.base.dim, q, f.base.index * count_y(q) + cy.index}});
          }
          for (int k = 0; q > 0 && k <= q; ++k) {
            const SimplexRef f = y.face(cy, k);
            vf.push_back(BiRef{{}, f.word,
                               BiCell{p, f.base.dim, cx.index * count_y(f.base.dim) + f.base.index}});
          }
          b.add_cell(p, q, "(" + x.name(cx) + "," + y.name(cy) + ")", std::move(hf), std::move(vf));
        }
  return b.build();
}

// ---------------------------------------------------------------------------

namespace {

struct DiagonalNormal {
  std::vector<int> common;
  BiRef cell;
};

std::vector<int> strip_word(const std::vector<int>& word, int n, const delta::Map& eta) {
  const delta::Map s = delta::surjection_of(word, n - static_cast<int>(word.size()));
  delta::Map reduced{s.target, std::vector<int>(static_cast<std::size_t>(eta.target + 1))};
  for (int i = 0; i <= n; ++i)
    reduced.values[static_cast<std::size_t>(eta.values[static_cast<std::size_t>(i)])] =
        s.values[static_cast<std::size_t>(i)];
  return delta::word_of(reduced);
}

DiagonalNormal diagonal_normal(const BiRef& x) {
  DiagonalNormal out;
  std::set_intersection(x.hword.begin(), x.hword.end(), x.vword.begin(), x.vword.end(),
                        std::back_inserter(out.common), std::greater<int>());
  if (out.common.empty()) {
    out.cell = x;
    return out;
  }
  const int n = x.p();
  const delta::Map eta =
      delta::surjection_of(out.common, n - static_cast<int>(out.common.size()));
  out.cell = BiRef{strip_word(x.hword, n, eta), strip_word(x.vword, n, eta), x.base};
  return out;
}

}  // namespace

SimplexRef DiagonalSpace::ref(const BiRef& x) const {
  if (x.p() != x.q()) throw ParameterError("diagonal needs a bisimplex of bidegree (n, n)");
  DiagonalNormal dn = diagonal_normal(x);
  return SimplexRef{dn.common, index->at(dn.cell)};
}

DiagonalSpace diagonal(const BisimplicialSet& b) {
  SimplicialSetBuilder builder;
  auto index = std::make_shared<std::map<BiRef, CellId>>();
  std::vector<std::vector<BiRef>> cells;
  const int top = (b.max_p() < 0) ? -1 : b.max_p() + b.max_q();
  for (int n = 0; n <= top; ++n) {
    cells.emplace_back();
    for (int p = std::min(n, b.max_p()); p >= 0; --p)
      for (int q = std::min(n, b.max_q()); q >= 0; --q) {
        if ((n - p) + (n - q) > n) continue;
        for (const auto& hs : delta::subsets(n, n - p))
          for (const auto& vs : delta::subsets(n, n - q)) {
            if (std::any_of(hs.begin(), hs.end(), [&](int h) {
                  return std::find(vs.begin(), vs.end(), h) != vs.end();
                }))
              continue;
            for (std::size_t k = 0; k < b.cell_count(p, q); ++k) {
              BiRef x{std::vector<int>(hs.rbegin(), hs.rend()),
                      std::vector<int>(vs.rbegin(), vs.rend()), BiCell{p, q, static_cast<int>(k)}};
              std::vector<SimplexRef> faces;
              for (int i = 0; n > 0 && i <= n; ++i) {
                const BiRef f = b.pullback(x, delta::coface(n, i), delta::coface(n, i));
                DiagonalNormal dn = diagonal_normal(f);
                faces.push_back(SimplexRef{dn.common, index->at(dn.cell)});
              }
              std::string name;
              for (int j : x.hword) name += "h" + std::to_string(j);
              for (int j : x.vword) name += "v" + std::to_string(j);
              name = builder.unique_name(name.empty() ? b.name(x.base) : name + "." + b.name(x.base));
              const CellId id = builder.add_cell(n, std::move(name), std::move(faces));
              index->emplace(x, id);
              cells.back().push_back(std::move(x));
            }
          }
      }
  }
  return DiagonalSpace{builder.build(), std::move(cells), std::move(index)};
}

}  // namespace skernel
