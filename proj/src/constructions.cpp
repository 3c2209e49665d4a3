#include <algorithm>
#include <map>
#include <set>

#include "skernel/error.hpp"
#include "skernel/simpset.hpp"

namespace skernel {

SimplexRef degenerate_vertex(CellId v, int d) {
  SimplexRef r;
  r.base = v;
  for (int j = d - 1; j >= 0; --j) r.word.push_back(j);
  return r;
}

std::string compact_name(const SimplicialSet& x, const SimplexRef& s) {
  std::string out;
  for (int j : s.word) out += "s" + std::to_string(j);
  return out.empty() ? x.name(s.base) : out + "." + x.name(s.base);
}

namespace {

std::string subset_name(const std::vector<int>& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "]";
}

// Subsets of {0..n} (as faces of Δⁿ) accepted by `keep`, with their faces.
SimplicialSet simplex_like(int n, const std::function<bool(const std::vector<int>&)>& keep) {
  SimplicialSetBuilder b;
  std::map<std::vector<int>, CellId> ids;
  for (int k = 0; k <= n; ++k) {
    for (const auto& s : delta::subsets(n + 1, k + 1)) {
      if (!keep(s)) continue;
      std::vector<SimplexRef> faces;
      if (k > 0) {
        for (int i = 0; i <= k; ++i) {
          std::vector<int> f = s;
          f.erase(f.begin() + i);
          faces.push_back(SimplexRef::of(ids.at(f)));
        }
      }
      ids.emplace(s, b.add_cell(k, subset_name(s), std::move(faces)));
    }
  }
  return b.build();
}

}  // namespace

SimplicialSet standard_simplex(int n) {
  if (n < 0) throw ParameterError("simplex dimension must be nonnegative");
  return simplex_like(n, [](const std::vector<int>&) { return true; });
}

SimplicialSet simplex_boundary(int n) {
  if (n < 0) throw ParameterError("boundary dimension must be nonnegative");
  return simplex_like(n, [n](const std::vector<int>& s) {
    return static_cast<int>(s.size()) < n + 1;
  });
}

SimplicialSet horn(int n, int k) {
  if (n < 1 || k < 0 || k > n)
    throw ParameterError("horn (" + std::to_string(n) + "," + std::to_string(k) +
                         ") needs 0 <= k <= n and n >= 1");
  return simplex_like(n, [n, k](const std::vector<int>& s) {
    if (static_cast<int>(s.size()) == n + 1) return false;
    if (static_cast<int>(s.size()) == n && std::find(s.begin(), s.end(), k) == s.end())
      return false;
    return true;
  });
}

SimplicialSet sphere(int i) {
  if (i < 0) throw ParameterError("sphere dimension must be nonnegative");
  SimplicialSetBuilder b;
  const CellId base = b.add_cell(0, "*");
  b.set_basepoint(base);
  if (i == 0) {
    b.add_cell(0, "v");
  } else {
    std::vector<SimplexRef> faces(static_cast<std::size_t>(i + 1), degenerate_vertex(base, i - 1));
    b.add_cell(i, "c" + std::to_string(i), std::move(faces));
  }
  return b.build();
}

SimplicialSet point() {
  SimplicialSetBuilder b;
  b.set_basepoint(b.add_cell(0, "*"));
  return b.build();
}

SimplicialSet interval_pointed() {
  SimplicialSetBuilder b;
  const CellId v0 = b.add_cell(0, "[0]");
  const CellId v1 = b.add_cell(0, "[1]");
  b.add_cell(1, "[0,1]", {SimplexRef::of(v1), SimplexRef::of(v0)});
  b.set_basepoint(v0);
  return b.build();
}

SimplicialSet pointed_at(const SimplicialSet& x, CellId vertex) {
  if (vertex.dim != 0 || static_cast<std::size_t>(vertex.index) >= x.cell_count(0))
    throw ParameterError("basepoint must be a vertex");
  SimplicialSetBuilder b;
  for (int d = 0; d <= x.top_dim(); ++d)
    for (std::size_t i = 0; i < x.cell_count(d); ++i) {
      const CellId c{d, static_cast<int>(i)};
      std::vector<SimplexRef> faces;
      for (int j = 0; d > 0 && j <= d; ++j) faces.push_back(x.face(c, j));
      b.add_cell(d, x.name(c), std::move(faces));
    }
  b.set_basepoint(vertex);
  return b.build();
}

SimplicialSet standard_space(SpaceKind kind, int n, int k) {
  switch (kind) {
    case SpaceKind::simplex: return standard_simplex(n);
    case SpaceKind::boundary: return simplex_boundary(n);
    case SpaceKind::horn: return horn(n, k);
    case SpaceKind::sphere: return sphere(n);
    case SpaceKind::point: return point();
    case SpaceKind::interval_pointed: return interval_pointed();
  }
  throw ParameterError("unknown standard space");
}

// ---------------------------------------------------------------------------

Subcomplex subcomplex(const SimplicialSet& x, const std::function<bool(CellId)>& keep) {
  SimplicialSetBuilder b;
  std::map<CellId, CellId> to_new;
  for (int d = 0; d <= x.top_dim(); ++d) {
    for (std::size_t i = 0; i < x.cell_count(d); ++i) {
      const CellId c{d, static_cast<int>(i)};
      if (!keep(c)) continue;
      std::vector<SimplexRef> faces;
      for (int k = 0; d > 0 && k <= d; ++k) {
        SimplexRef f = x.face(c, k);
        auto it = to_new.find(f.base);
        if (it == to_new.end())
          throw PreconditionError("subcomplex not closed under faces at '" + x.name(c) + "'");
        f.base = it->second;
        faces.push_back(std::move(f));
      }
      to_new.emplace(c, b.add_cell(d, x.name(c), std::move(faces)));
    }
  }
  if (x.pointed()) {
    auto it = to_new.find(x.basepoint());
    if (it != to_new.end()) b.set_basepoint(it->second);
  }
  SimplicialSet sub = b.build();
  std::map<CellId, CellId> to_old;
  for (const auto& [o, n] : to_new) to_old.emplace(n, o);
  SimplicialMap inc = SimplicialMap::from_function(
      sub, x, [&](CellId c) { return SimplexRef::of(to_old.at(c)); });
  return Subcomplex{std::move(sub), std::move(inc)};
}

Subcomplex skeleton(const SimplicialSet& x, int n) {
  return subcomplex(x, [&](CellId c) {
    if (c.dim <= n) return true;
    return n < 0 && x.pointed() && c == x.basepoint();
  });
}

// ---------------------------------------------------------------------------

namespace {

struct NormalPair {
  std::vector<int> common;
  SimplexRef a;
  SimplexRef b;
};

// Splits (a, b) as η*(a', b') with η carrying exactly the common degeneracies.
NormalPair normalize_pair(const SimplexRef& a, const SimplexRef& b) {
  NormalPair out;
  std::set_intersection(a.word.begin(), a.word.end(), b.word.begin(), b.word.end(),
                        std::back_inserter(out.common), std::greater<int>());
  if (out.common.empty()) {
    out.a = a;
    out.b = b;
    return out;
  }
  const int n = a.dim();
  const delta::Map eta = delta::surjection_of(out.common, n - static_cast<int>(out.common.size()));
  auto strip = [&](const SimplexRef& r) {
    const delta::Map s = r.surjection();
    delta::Map reduced{s.target, std::vector<int>(static_cast<std::size_t>(eta.target + 1))};
    for (int i = 0; i <= n; ++i)
      reduced.values[static_cast<std::size_t>(eta.values[static_cast<std::size_t>(i)])] =
          s.values[static_cast<std::size_t>(i)];
    return SimplexRef{delta::word_of(reduced), r.base};
  };
  out.a = strip(a);
  out.b = strip(b);
  return out;
}

bool disjoint(const std::vector<int>& a, const std::vector<int>& b) {
  for (int x : a)
    if (std::find(b.begin(), b.end(), x) != b.end()) return false;
  return true;
}

std::vector<int> descending(std::vector<int> v) {
  std::sort(v.begin(), v.end(), std::greater<int>());
  return v;
}

}  // namespace

SimplexRef ProductSpace::pair(const SimplexRef& a, const SimplexRef& b) const {
  if (a.dim() != b.dim()) throw ParameterError("product pair of simplices of unequal dimension");
  NormalPair np = normalize_pair(a, b);
  return SimplexRef{np.common, index->at({np.a, np.b})};
}

ProductSpace product(const SimplicialSet& x, const SimplicialSet& y) {
  SimplicialSetBuilder builder;
  auto index = std::make_shared<std::map<std::pair<SimplexRef, SimplexRef>, CellId>>();
  std::vector<std::vector<std::pair<SimplexRef, SimplexRef>>> components;
  const int top = (x.top_dim() < 0 || y.top_dim() < 0) ? -1 : x.top_dim() + y.top_dim();
  auto lookup = [&](const SimplexRef& a, const SimplexRef& b) {
    NormalPair np = normalize_pair(a, b);
    return SimplexRef{np.common, index->at({np.a, np.b})};
  };
  for (int n = 0; n <= top; ++n) {
    components.emplace_back();
    for (int p = std::min(n, x.top_dim()); p >= 0; --p) {
      for (int q = std::min(n, y.top_dim()); q >= 0; --q) {
        if ((n - p) + (n - q) > n) continue;
        for (const auto& ja : delta::subsets(n, n - p)) {
          for (const auto& jb : delta::subsets(n, n - q)) {
            if (!disjoint(ja, jb)) continue;
            for (std::size_t xi = 0; xi < x.cell_count(p); ++xi) {
              for (std::size_t yi = 0; yi < y.cell_count(q); ++yi) {
                SimplexRef a{descending(ja), CellId{p, static_cast<int>(xi)}};
                SimplexRef b{descending(jb), CellId{q, static_cast<int>(yi)}};
                std::vector<SimplexRef> faces;
                for (int i = 0; n > 0 && i <= n; ++i)
                  faces.push_back(lookup(x.apply_face(a, i), y.apply_face(b, i)));
                const std::string name = builder.unique_name("(" + compact_name(x, a) + "," +
                                                             compact_name(y, b) + ")");
                const CellId id = builder.add_cell(n, name, std::move(faces));
                index->emplace(std::make_pair(a, b), id);
                components.back().emplace_back(a, b);
              }
            }
          }
        }
      }
    }
  }
  if (x.pointed() && y.pointed())
    builder.set_basepoint(index->at({SimplexRef::of(x.basepoint()), SimplexRef::of(y.basepoint())}));
  SimplicialSet obj = builder.build();
  auto comp = [&](CellId c) -> const std::pair<SimplexRef, SimplexRef>& {
    return components[static_cast<std::size_t>(c.dim)][static_cast<std::size_t>(c.index)];
  };
  SimplicialMap pr1 = SimplicialMap::from_function(obj, x, [&](CellId c) { return comp(c).first; });
  SimplicialMap pr2 =
      SimplicialMap::from_function(obj, y, [&](CellId c) { return comp(c).second; });
  return ProductSpace{std::move(obj), std::move(pr1), std::move(pr2), std::move(index)};
}

// ---------------------------------------------------------------------------

namespace {

// Shared implementation of ⊔ and ∨. When `glue` is set, Y's basepoint is
// identified with X's.
Coproduct coproduct(const SimplicialSet& x, const SimplicialSet& y, bool glue) {
  SimplicialSetBuilder b;
  std::map<CellId, CellId> xmap, ymap;
  const int top = std::max(x.top_dim(), y.top_dim());
  auto remap = [](const std::map<CellId, CellId>& m, SimplexRef r) {
    r.base = m.at(r.base);
    return r;
  };
  if (glue) ymap.emplace(y.basepoint(), CellId{0, x.basepoint().index});
  for (int d = 0; d <= top; ++d) {
    for (std::size_t i = 0; i < x.cell_count(d); ++i) {
      const CellId c{d, static_cast<int>(i)};
      std::vector<SimplexRef> faces;
      for (int k = 0; d > 0 && k <= d; ++k) faces.push_back(remap(xmap, x.face(c, k)));
      xmap.emplace(c, b.add_cell(d, b.unique_name(x.name(c)), std::move(faces)));
    }
    for (std::size_t i = 0; i < y.cell_count(d); ++i) {
      const CellId c{d, static_cast<int>(i)};
      if (glue && c == y.basepoint()) continue;
      std::vector<SimplexRef> faces;
      for (int k = 0; d > 0 && k <= d; ++k) faces.push_back(remap(ymap, y.face(c, k)));
      ymap.emplace(c, b.add_cell(d, b.unique_name(y.name(c)), std::move(faces)));
    }
  }
  if (glue) b.set_basepoint(xmap.at(x.basepoint()));
  SimplicialSet obj = b.build();
  auto in_x = SimplicialMap::from_function(x, obj, [&](CellId c) { return SimplexRef::of(xmap.at(c)); });
  auto in_y = SimplicialMap::from_function(y, obj, [&](CellId c) { return SimplexRef::of(ymap.at(c)); });
  return Coproduct{std::move(obj), std::move(in_x), std::move(in_y)};
}

}  // namespace

Coproduct disjoint_union(const SimplicialSet& x, const SimplicialSet& y) {
  return coproduct(x, y, false);
}

Coproduct add_basepoint(const SimplicialSet& x) {
  SimplicialSetBuilder pb;
  pb.add_cell(0, "+");
  const SimplicialSet plus = pb.build();
  Coproduct c = coproduct(x, plus, false);
  // Re-pointing requires rebuilding; the basepoint is the last 0-cell.
  SimplicialSetBuilder b;
  for (int d = 0; d <= c.object.top_dim(); ++d)
    for (std::size_t i = 0; i < c.object.cell_count(d); ++i) {
      const CellId id{d, static_cast<int>(i)};
      std::vector<SimplexRef> faces;
      for (int k = 0; d > 0 && k <= d; ++k) faces.push_back(c.object.face(id, k));
      b.add_cell(d, c.object.name(id), std::move(faces));
    }
  b.set_basepoint(c.in_right.image(CellId{0, 0}).base);
  SimplicialSet obj = b.build();
  auto in_x = SimplicialMap::from_function(x, obj, [&](CellId id) { return c.in_left.image(id); });
  auto in_p = SimplicialMap::from_function(plus, obj, [&](CellId id) { return c.in_right.image(id); });
  return Coproduct{std::move(obj), std::move(in_x), std::move(in_p)};
}

Coproduct wedge(const SimplicialSet& x, const SimplicialSet& y) {
  if (!x.pointed() || !y.pointed()) throw PreconditionError("wedge needs pointed inputs");
  return coproduct(x, y, true);
}

SimplicialMap wedge_map(const Coproduct& w, const SimplicialMap& f, const SimplicialMap& g) {
  if (!(f.target() == g.target())) throw PreconditionError("wedge_map: targets differ");
  std::map<CellId, SimplexRef> image;
  for (int d = 0; d <= f.source().top_dim(); ++d)
    for (std::size_t i = 0; i < f.source().cell_count(d); ++i) {
      const CellId c{d, static_cast<int>(i)};
      image.emplace(w.in_left.image(c).base, f.image(c));
    }
  for (int d = 0; d <= g.source().top_dim(); ++d)
    for (std::size_t i = 0; i < g.source().cell_count(d); ++i) {
      const CellId c{d, static_cast<int>(i)};
      const CellId at = w.in_right.image(c).base;
      auto [it, fresh] = image.emplace(at, g.image(c));
      if (!fresh && it->second != g.image(c))
        throw PreconditionError("wedge_map: maps disagree on the basepoint");
    }
  return SimplicialMap::from_function(w.object, f.target(),
                                      [&](CellId c) { return image.at(c); });
}

// ---------------------------------------------------------------------------

Pushout pushout_inj(const SimplicialMap& f, const SimplicialMap& g) {
  if (!(f.source() == g.source())) throw PreconditionError("pushout legs have different sources");
  if (!f.injective()) throw PreconditionError("pushout_inj: f is not levelwise injective");
  const SimplicialSet& a = f.source();
  const SimplicialSet& x = f.target();
  const SimplicialSet& y = g.target();
  std::map<CellId, CellId> preimage;  // X cell in im f → A cell
  for (int d = 0; d <= a.top_dim(); ++d)
    for (std::size_t i = 0; i < a.cell_count(d); ++i) {
      const CellId c{d, static_cast<int>(i)};
      preimage.emplace(f.image(c).base, c);
    }
  SimplicialSetBuilder b;
  std::map<CellId, CellId> ymap, xmap;
  auto y_ref = [&](SimplexRef r) {
    r.base = ymap.at(r.base);
    return r;
  };
  auto x_ref = [&](const SimplexRef& r) {
    auto it = preimage.find(r.base);
    if (it == preimage.end()) return SimplexRef{r.word, xmap.at(r.base)};
    const SimplexRef gy = g.image(it->second);
    return y_ref(r.word.empty() ? gy : y.pullback(gy, r.surjection()));
  };
  const int top = std::max(x.top_dim(), y.top_dim());
  for (int d = 0; d <= top; ++d) {
    for (std::size_t i = 0; i < y.cell_count(d); ++i) {
      const CellId c{d, static_cast<int>(i)};
      std::vector<SimplexRef> faces;
      for (int k = 0; d > 0 && k <= d; ++k) faces.push_back(y_ref(y.face(c, k)));
      ymap.emplace(c, b.add_cell(d, b.unique_name(y.name(c)), std::move(faces)));
    }
    for (std::size_t i = 0; i < x.cell_count(d); ++i) {
      const CellId c{d, static_cast<int>(i)};
      if (preimage.count(c)) continue;
      std::vector<SimplexRef> faces;
      for (int k = 0; d > 0 && k <= d; ++k) faces.push_back(x_ref(x.face(c, k)));
      xmap.emplace(c, b.add_cell(d, b.unique_name(x.name(c)), std::move(faces)));
    }
  }
  if (y.pointed()) {
    b.set_basepoint(ymap.at(y.basepoint()));
  } else if (x.pointed()) {
    b.set_basepoint(x_ref(SimplexRef::of(x.basepoint())).base);
  }
  SimplicialSet obj = b.build();
  auto from_x = SimplicialMap::from_function(x, obj, [&](CellId c) { return x_ref(SimplexRef::of(c)); });
  auto from_y = SimplicialMap::from_function(y, obj, [&](CellId c) { return y_ref(SimplexRef::of(c)); });
  return Pushout{std::move(obj), f, g, std::move(from_x), std::move(from_y)};
}

SimplicialMap pushout_map(const Pushout& p, const SimplicialMap& hx, const SimplicialMap& hy) {
  if (!(hx.target() == hy.target())) throw PreconditionError("pushout_map: targets differ");
  const SimplicialSet& a = p.leg_f.source();
  for (int d = 0; d <= a.top_dim(); ++d)
    for (std::size_t i = 0; i < a.cell_count(d); ++i) {
      const SimplexRef c = SimplexRef::of(CellId{d, static_cast<int>(i)});
      if (hx(p.leg_f(c)) != hy(p.leg_g(c)))
        throw PreconditionError("pushout_map: square does not commute on '" + a.name(c.base) +
                                "'");
    }
  std::map<CellId, SimplexRef> image;
  const SimplicialSet& y = p.leg_g.target();
  for (int d = 0; d <= y.top_dim(); ++d)
    for (std::size_t i = 0; i < y.cell_count(d); ++i) {
      const CellId c{d, static_cast<int>(i)};
      image.emplace(p.from_y.image(c).base, hy.image(c));
    }
  const SimplicialSet& x = p.leg_f.target();
  for (int d = 0; d <= x.top_dim(); ++d)
    for (std::size_t i = 0; i < x.cell_count(d); ++i) {
      const CellId c{d, static_cast<int>(i)};
      const SimplexRef r = p.from_x.image(c);
      if (!r.degenerate()) image.emplace(r.base, hx.image(c));
    }
  return SimplicialMap::from_function(p.object, hx.target(),
                                      [&](CellId c) { return image.at(c); });
}

SimplicialMap constant_map(const SimplicialSet& source, const SimplicialSet& target) {
  CellId v;
  if (target.pointed()) {
    v = target.basepoint();
  } else if (target.cell_count(0) == 1) {
    v = CellId{0, 0};
  } else {
    throw PreconditionError("constant_map: target has no distinguished vertex");
  }
  return SimplicialMap::from_function(source, target,
                                      [&](CellId c) { return degenerate_vertex(v, c.dim); });
}

Pushout quotient(const SimplicialMap& inclusion) {
  return pushout_inj(inclusion, constant_map(inclusion.source(), point()));
}

SimplexRef SmashSpace::pair(const SimplexRef& a, const SimplexRef& b) const {
  return collapse(product.pair(a, b));
}

SmashSpace smash(const SimplicialSet& x, const SimplicialSet& y) {
  if (!x.pointed() || !y.pointed()) throw PreconditionError("smash needs pointed inputs");
  ProductSpace prod = product(x, y);
  const CellId bx = x.basepoint(), by = y.basepoint();
  Subcomplex w = subcomplex(prod.object, [&](CellId c) {
    return prod.pr1.image(c).base == bx || prod.pr2.image(c).base == by;
  });
  Pushout q = quotient(w.inclusion);
  return SmashSpace{q.object, std::move(prod), q.from_x};
}

SmashSpace suspension(const SimplicialSet& x, int i) {
  if (!x.pointed()) throw PreconditionError("suspension needs a pointed input");
  return smash(x, sphere(i));
}

std::map<CellId, CellId> smash_preimages(const SmashSpace& s) {
  std::map<CellId, CellId> out;
  const SimplicialSet& p = s.product.object;
  for (int d = 0; d <= p.top_dim(); ++d)
    for (std::size_t i = 0; i < p.cell_count(d); ++i) {
      const CellId c{d, static_cast<int>(i)};
      const SimplexRef r = s.collapse.image(c);
      if (!r.degenerate() && !(r.base == s.object.basepoint())) out.emplace(r.base, c);
    }
  return out;
}

SimplicialMap smash_from(const SmashSpace& s, const SimplicialSet& target,
                         const std::function<SimplexRef(const SimplexRef&, const SimplexRef&)>& h) {
  const auto pre = smash_preimages(s);
  return SimplicialMap::from_function(s.object, target, [&](CellId c) {
    if (c == s.object.basepoint()) return SimplexRef::of(target.basepoint());
    const CellId p = pre.at(c);
    return h(s.product.pr1.image(p), s.product.pr2.image(p));
  });
}

SimplicialMap smash_map(const SmashSpace& source, const SmashSpace& target, const SimplicialMap& f,
                        const SimplicialMap& g) {
  return smash_from(source, target.object, [&](const SimplexRef& a, const SimplexRef& b) {
    return target.pair(f(a), g(b));
  });
}

}  // namespace skernel
