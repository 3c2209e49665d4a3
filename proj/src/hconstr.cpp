#include "skernel/hconstr.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "skernel/error.hpp"

namespace skernel {

SimplexRef Wrapping::wrap_simplex(const SimplicialSet& x, const SimplexRef& s) const {
  if (x.pointed() && s.dim() > 0 && x.is_basepoint_simplex(s))
    return degenerate_vertex(cell_of.at(SimplexRef::of(x.basepoint())), s.dim());
  return SimplexRef::of(cell_of.at(s));
}

Wrapping wrap(const SimplicialSet& x, int trunc_dim) {
  if (trunc_dim < 0) throw ParameterError("truncation dimension must be nonnegative");
  std::map<SimplexRef, CellId> cell_of;
  auto wrapped = [&](const SimplexRef& s) {
    if (x.pointed() && s.dim() > 0 && x.is_basepoint_simplex(s))
      return degenerate_vertex(cell_of.at(SimplexRef::of(x.basepoint())), s.dim());
    return SimplexRef::of(cell_of.at(s));
  };
  SimplicialSetBuilder b;
  std::vector<std::vector<SimplexRef>> simplices;
  for (int n = 0; n <= trunc_dim; ++n) {
    simplices.emplace_back();
    for (auto& s : x.all_simplices(n)) {
      if (x.pointed() && n > 0 && x.is_basepoint_simplex(s)) continue;
      std::vector<SimplexRef> faces;
      for (int i = 0; n > 0 && i <= n; ++i) faces.push_back(wrapped(x.apply_face(s, i)));
      const CellId c = b.add_cell(n, b.unique_name(compact_name(x, s)), std::move(faces));
      cell_of.emplace(s, c);
      simplices.back().push_back(std::move(s));
    }
  }
  if (x.pointed()) b.set_basepoint(cell_of.at(SimplexRef::of(x.basepoint())));
  SimplicialSet object = b.build();
  SimplicialMap counit = SimplicialMap::from_function(object, x, [&](CellId c) {
    return simplices[static_cast<std::size_t>(c.dim)][static_cast<std::size_t>(c.index)];
  });
  return Wrapping{std::move(object), std::move(counit), trunc_dim, std::move(cell_of)};
}

// ---------------------------------------------------------------------------

namespace {

std::vector<int> subset_of(const std::string& name) {
  std::vector<int> out;
  std::string body = name.substr(1, name.size() - 2);
  std::istringstream is(body);
  for (std::string tok; std::getline(is, tok, ',');) out.push_back(std::stoi(tok));
  return out;
}

CellId vertex_named(const SimplicialSet& x, const std::string& name) {
  auto c = x.find(name);
  if (!c) throw StructuralError("missing cell '" + name + "'");
  return *c;
}

// Same-named cells of a sub-simplicial set.
SimplicialMap by_name(const SimplicialSet& sub, const SimplicialSet& whole) {
  return SimplicialMap::from_function(sub, whole, [&](CellId c) {
    return SimplexRef::of(vertex_named(whole, sub.name(c)));
  });
}

SimplicialMap same_index(const SimplicialSet& sub, const SimplicialSet& whole) {
  return SimplicialMap::from_function(sub, whole, [](CellId c) { return SimplexRef::of(c); });
}

}  // namespace

SkeletonPushoutReport skeleton_pushout_check(const SimplicialSet& x, int n, int trunc_dim) {
  if (!x.pointed()) throw PreconditionError("skeleton_pushout_check needs a pointed simplicial set");
  if (n < 0) throw ParameterError("skeleton degree must be nonnegative");
  if (n + 1 > trunc_dim)
    throw RangeError("skeleton degree " + std::to_string(n + 1) + " exceeds the truncation " +
                     std::to_string(trunc_dim));
  const Wrapping w = wrap(x, trunc_dim);
  const Subcomplex skn = skeleton(w.object, n);
  const Subcomplex skn1 = skeleton(w.object, n + 1);

  // X_{n+1} as a discrete pointed set.
  std::vector<SimplexRef> top;
  SimplicialSetBuilder sb;
  sb.set_basepoint(sb.add_cell(0, "*"));
  for (auto& s : x.all_simplices(n + 1)) {
    if (x.is_basepoint_simplex(s)) continue;
    sb.add_cell(0, "x" + std::to_string(top.size()));
    top.push_back(std::move(s));
  }
  const SimplicialSet points = sb.build();
  const SimplicialSet bd = add_basepoint(simplex_boundary(n + 1)).object;
  const SimplicialSet full = add_basepoint(standard_simplex(n + 1)).object;
  const SmashSpace a = smash(points, bd);
  const SmashSpace b = smash(points, full);
  const SimplicialMap incl = smash_map(a, b, SimplicialMap::identity(points), by_name(bd, full));

  auto characteristic = [&](const SimplicialSet& space, const SimplicialSet& target) {
    return [&, target](const SimplexRef& p, const SimplexRef& t) {
      const SimplexRef& simplex = top[static_cast<std::size_t>(p.base.index - 1)];
      const std::vector<int> face = subset_of(space.name(t.base));
      const SimplexRef y = x.pullback(simplex, delta::Map{n + 1, face});
      return target.pullback(w.wrap_simplex(x, y), t.surjection());
    };
  };
  const SimplicialMap char_bd = smash_from(a, skn.object, characteristic(bd, skn.object));
  const SimplicialMap char_full = smash_from(b, skn1.object, characteristic(full, skn1.object));
  const Pushout p = pushout_inj(incl, char_bd);
  const SimplicialMap cmp = pushout_map(p, char_full, same_index(skn.object, skn1.object));

  SkeletonPushoutReport report;
  report.pushout_cells = p.object.cell_counts();
  report.skeleton_cells = skn1.object.cell_counts();
  report.ok = cmp.is_isomorphism();
  if (!report.ok) report.detail = "comparison map is not bijective on nondegenerate cells";
  return report;
}

// ---------------------------------------------------------------------------

namespace {

void require_pointed_diagram(const PushoutDiagram& q) {
  if (!(q.f.source() == q.g.source())) throw PreconditionError("diagram legs have different sources");
  if (!q.k().pointed() || !q.l().pointed() || !q.m().pointed())
    throw PreconditionError("homotopy pushout needs pointed objects");
  if (!q.f.preserves_basepoint() || !q.g.preserves_basepoint())
    throw PreconditionError("diagram maps must preserve basepoints");
}

SimplicialSet interval_plus() { return add_basepoint(standard_simplex(1)).object; }

SimplicialMap end_inclusion(const SmashSpace& cyl, const SimplicialSet& k, const SimplicialSet& interval,
                            int end) {
  const CellId v = vertex_named(interval, "[" + std::to_string(end) + "]");
  return SimplicialMap::from_function(k, cyl.object, [&](CellId c) {
    return cyl.pair(SimplexRef::of(c), degenerate_vertex(v, c.dim));
  });
}

}  // namespace

HomotopyPushout homotopy_pushout(const PushoutDiagram& q) {
  require_pointed_diagram(q);
  const SimplicialSet interval = interval_plus();
  SmashSpace cyl = smash(q.k(), interval);
  Coproduct ends = wedge(q.k(), q.k());
  Coproduct targets = wedge(q.m(), q.l());
  const SimplicialMap left = wedge_map(ends, end_inclusion(cyl, q.k(), interval, 0),
                                       end_inclusion(cyl, q.k(), interval, 1));
  const SimplicialMap right =
      wedge_map(ends, compose(targets.in_left, q.g), compose(targets.in_right, q.f));
  Pushout p = pushout_inj(left, right);
  SimplicialMap from_m = compose(p.from_y, targets.in_left);
  SimplicialMap from_l = compose(p.from_y, targets.in_right);
  return HomotopyPushout{std::move(p), std::move(cyl), std::move(ends), std::move(targets),
                         std::move(from_l), std::move(from_m)};
}

SimplicialMap homotopy_pushout_map(const PushoutDiagram& q, const HomotopyPushout& hp,
                                   const SimplicialMap& l, const SimplicialMap& m) {
  if (!(compose(l, q.f) == compose(m, q.g)))
    throw PreconditionError("homotopy_pushout_map: square does not commute");
  const SimplicialSet& n = l.target();
  const SimplicialMap lf = compose(l, q.f);
  const SimplicialMap hx =
      smash_from(hp.cylinder, n, [&](const SimplexRef& a, const SimplexRef&) { return lf(a); });
  const SimplicialMap hy = wedge_map(hp.targets, m, l);
  return pushout_map(hp.pushout, hx, hy);
}

SimplicialMap strict_comparison(const PushoutDiagram& q, const HomotopyPushout& hp,
                                const Pushout& strict) {
  return homotopy_pushout_map(q, hp, strict.from_x, strict.from_y);
}

BisimplicialSet bar_pushout_object(const PushoutDiagram& q) {
  require_pointed_diagram(q);
  const Coproduct targets = wedge(q.m(), q.l());
  const SimplicialSet& ml = targets.object;
  const SimplicialSet& k = q.k();
  auto column0 = [](const SimplexRef& r) {
    return BiRef{{}, r.word, BiCell{0, r.base.dim, r.base.index}};
  };
  BisimplicialSetBuilder b;
  for (int d = 0; d <= ml.top_dim(); ++d)
    for (std::size_t i = 0; i < ml.cell_count(d); ++i) {
      const CellId c{d, static_cast<int>(i)};
      std::vector<BiRef> vf;
      for (int j = 0; d > 0 && j <= d; ++j) vf.push_back(column0(ml.face(c, j)));
      b.add_cell(0, d, ml.name(c), {}, std::move(vf));
    }
  std::map<CellId, int> column1;
  const CellId kbase = k.basepoint();
  const CellId mlbase = ml.basepoint();
  for (int d = 0; d <= k.top_dim(); ++d) {
    int next = 0;
    for (std::size_t i = 0; i < k.cell_count(d); ++i) {
      const CellId c{d, static_cast<int>(i)};
      if (c == kbase) continue;
      std::vector<BiRef> hf{column0(targets.in_right(q.f(SimplexRef::of(c)))),
                            column0(targets.in_left(q.g(SimplexRef::of(c))))};
      std::vector<BiRef> vf;
      for (int j = 0; d > 0 && j <= d; ++j) {
        const SimplexRef face = k.face(c, j);
        if (face.base == kbase)
          vf.push_back(BiRef{{0}, face.word, BiCell{0, 0, mlbase.index}});
        else
          vf.push_back(BiRef{{}, face.word, BiCell{1, face.base.dim, column1.at(face.base)}});
      }
      b.add_cell(1, d, k.name(c), std::move(hf), std::move(vf));
      column1.emplace(c, next++);
    }
  }
  return b.build();
}

CrossCheckReport homotopy_pushout_cross_check(const PushoutDiagram& q) {
  const HomotopyPushout hp = homotopy_pushout(q);
  const DiagonalSpace diag = diagonal(bar_pushout_object(q));
  const SimplicialSet interval = interval_plus();
  const CellId edge = vertex_named(interval, "[0,1]");
  std::vector<CellId> k_cells;  // column-1 index → K cell, per dimension
  std::map<std::pair<int, int>, CellId> column1;
  for (int d = 0; d <= q.k().top_dim(); ++d) {
    int next = 0;
    for (std::size_t i = 0; i < q.k().cell_count(d); ++i) {
      const CellId c{d, static_cast<int>(i)};
      if (c == q.k().basepoint()) continue;
      column1.emplace(std::make_pair(d, next++), c);
    }
  }
  CrossCheckReport report;
  report.diagonal_cells = diag.object.cell_counts();
  report.pushout_cells = hp.object().cell_counts();
  const SimplicialMap cmp = SimplicialMap::from_function(diag.object, hp.object(), [&](CellId c) {
    const BiRef& x = diag.cells[static_cast<std::size_t>(c.dim)][static_cast<std::size_t>(c.index)];
    if (x.base.p == 0)
      return hp.pushout.from_y.image(CellId{x.base.q, x.base.index});
    const CellId kc = column1.at({x.base.q, x.base.index});
    return hp.pushout.from_x(hp.cylinder.pair(SimplexRef{x.vword, kc}, SimplexRef{x.hword, edge}));
  });
  report.ok = cmp.is_isomorphism();
  if (!report.ok) report.detail = "diagonal and pushout differ";
  return report;
}

// ---------------------------------------------------------------------------

Cylinder cylinder(const SimplicialMap& f) {
  if (!f.source().pointed() || !f.target().pointed())
    throw PreconditionError("cylinder needs pointed objects");
  if (!f.preserves_basepoint()) throw PreconditionError("cylinder needs a basepoint-preserving map");
  const SimplicialSet interval = interval_plus();
  SmashSpace cyl = smash(f.source(), interval);
  const SimplicialMap end1 = end_inclusion(cyl, f.source(), interval, 1);
  Pushout p = pushout_inj(end1, f);
  SimplicialMap from_k = compose(p.from_x, end_inclusion(cyl, f.source(), interval, 0));
  SimplicialMap from_l = p.from_y;
  const SimplicialMap collapse =
      smash_from(cyl, f.target(), [&](const SimplexRef& a, const SimplexRef&) { return f(a); });
  SimplicialMap retraction = pushout_map(p, collapse, SimplicialMap::identity(f.target()));
  return Cylinder{std::move(p), std::move(cyl), std::move(from_k), std::move(from_l),
                  std::move(retraction)};
}

// ---------------------------------------------------------------------------

namespace {

using Arrow = GroupoidPresentation::Arrow;
using Relation = GroupoidPresentation::Relation;

// Pushes the groupoid presentation of f's source forward; "equal" when it matches
// the target's presentation after dropping identities and formal relations.
bool presentations_match(const SimplicialMap& f) {
  const SimplicialSet& x = f.source();
  const SimplicialSet& y = f.target();
  const GroupoidPresentation gy = groupoid_presentation(y);
  std::multiset<int> hit;
  for (std::size_t e = 0; e < x.cell_count(1); ++e) {
    const Arrow a = arrow_of(y, f.image(CellId{1, static_cast<int>(e)}));
    if (a.generator) hit.insert(*a.generator);
  }
  for (std::size_t e = 0; e < gy.generators.size(); ++e)
    if (hit.count(static_cast<int>(e)) != 1) return false;
  if (hit.size() != gy.generators.size()) return false;
  auto push = [&](const SimplexRef& edge) { return arrow_of(y, f(edge)); };
  std::set<Relation> pushed, target;
  for (std::size_t t = 0; t < x.cell_count(2); ++t) {
    const CellId c{2, static_cast<int>(t)};
    Relation r{push(x.face(c, 1)), push(x.face(c, 0)), push(x.face(c, 2))};
    if (!r.trivial()) pushed.insert(r);
  }
  for (const auto& r : gy.relations)
    if (!r.trivial()) target.insert(r);
  return pushed == target;
}

std::vector<int> component_representatives(const Components& c) {
  std::vector<int> reps(static_cast<std::size_t>(c.count), -1);
  for (std::size_t v = 0; v < c.of_vertex.size(); ++v) {
    int& r = reps[static_cast<std::size_t>(c.of_vertex[v])];
    if (r < 0) r = static_cast<int>(v);
  }
  return reps;
}

}  // namespace

bool WeqCertificate::pass() const {
  if (!pi0_bijective || !groupoid_consistent) return false;
  for (const auto& [deg, ok] : homology_iso)
    if (!ok) return false;
  for (const auto& [order, counts] : quotients)
    if (counts.first >= 0 && counts.second >= 0 && counts.first != counts.second) return false;
  return true;
}

std::string WeqCertificate::summary() const {
  std::ostringstream os;
  os << (pass() ? "pass" : "FAIL") << " pi0=" << (pi0_bijective ? "yes" : "no") << " homology=";
  for (const auto& [deg, ok] : homology_iso) os << (ok ? "+" : "-");
  os << " groupoid=" << groupoid;
  if (!groupoid_consistent) os << "(mismatch)";
  if (!quotients.empty()) {
    os << " quotients=";
    bool first = true;
    for (const auto& [order, counts] : quotients) {
      os << (first ? "" : ",") << order << ":" << counts.first << "/" << counts.second;
      first = false;
    }
  }
  return os.str();
}

WeqCertificate weq_certificate(const SimplicialMap& f, int range) {
  if (range < 0) throw ParameterError("certificate range must be nonnegative");
  const SimplicialSet& x = f.source();
  const SimplicialSet& y = f.target();
  WeqCertificate cert;
  cert.range = range;

  const Components cx = pi0(x), cy = pi0(y);
  std::vector<int> image(static_cast<std::size_t>(cx.count), -1);
  bool well_defined = true;
  for (std::size_t v = 0; v < x.cell_count(0); ++v) {
    const int target = cy.of_vertex[static_cast<std::size_t>(f.image(CellId{0, static_cast<int>(v)}).base.index)];
    int& slot = image[static_cast<std::size_t>(cx.of_vertex[v])];
    if (slot >= 0 && slot != target) well_defined = false;
    slot = target;
  }
  std::set<int> hit(image.begin(), image.end());
  cert.pi0_bijective = well_defined && cx.count == cy.count &&
                       static_cast<int>(hit.size()) == cy.count && !hit.count(-1);

  const ChainMap cm = chain_map(f);
  for (int n = 0; n <= range; ++n) cert.homology_iso[n] = homology_map(cm, n).iso();

  if (range >= 1) {
    if (presentations_match(f)) {
      cert.groupoid = "equal";
    } else {
      cert.groupoid = "abelianized";
      for (int v : component_representatives(cx)) {
        const CellId base{0, v};
        const HomologyGroup hx = abelianization(pi1_presentation(x, base));
        const HomologyGroup hy = abelianization(pi1_presentation(y, f.image(base).base));
        if (!(hx == hy)) cert.groupoid_consistent = false;
      }
    }
    std::vector<GroupPresentation> px, py;
    for (int v : component_representatives(cx)) {
      const CellId base{0, v};
      px.push_back(simplify(pi1_presentation(x, base)));
      py.push_back(simplify(pi1_presentation(y, f.image(base).base)));
    }
    for (const auto& g : small_groups()) {
      auto& counts = cert.quotients[g.order()];
      auto add = [&](long long& slot, const std::vector<GroupPresentation>& ps) {
        for (const auto& p : ps) {
          if (slot < 0) return;
          auto c = count_homs(p, g);
          slot = c ? slot + *c : -1;
        }
      };
      add(counts.first, px);
      add(counts.second, py);
    }
  }
  return cert;
}

}  // namespace skernel
