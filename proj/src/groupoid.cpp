#include "skernel/groupoid.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <deque>
#include <set>

#include "skernel/error.hpp"

namespace skernel {

bool GroupoidPresentation::Relation::trivial() const {
  if (!first.generator && composite == second) return true;
  if (!second.generator && composite == first) return true;
  return false;
}

GroupoidPresentation::Arrow arrow_of(const SimplicialSet& x, const SimplexRef& edge) {
  if (edge.dim() != 1) throw ParameterError("arrow_of needs a 1-simplex");
  if (edge.degenerate()) return {std::nullopt, edge.base.index};
  return {edge.base.index, x.face(edge.base, 1).base.index};
}

GroupoidPresentation groupoid_presentation(const SimplicialSet& x) {
  GroupoidPresentation g;
  for (std::size_t v = 0; v < x.cell_count(0); ++v)
    g.objects.push_back(x.name(CellId{0, static_cast<int>(v)}));
  for (std::size_t e = 0; e < x.cell_count(1); ++e) {
    const CellId c{1, static_cast<int>(e)};
    g.generators.push_back({x.name(c), x.face(c, 1).base.index, x.face(c, 0).base.index});
  }
  for (std::size_t t = 0; t < x.cell_count(2); ++t) {
    const CellId c{2, static_cast<int>(t)};
    g.relations.push_back({arrow_of(x, x.face(c, 1)), arrow_of(x, x.face(c, 0)),
                           arrow_of(x, x.face(c, 2))});
  }
  return g;
}

// ---------------------------------------------------------------------------

GroupPresentation pi1_presentation(const SimplicialSet& x, CellId base) {
  if (base.dim != 0 || base.index < 0 || static_cast<std::size_t>(base.index) >= x.cell_count(0))
    throw ParameterError("pi1 base must be a 0-cell");
  const std::size_t nv = x.cell_count(0), ne = x.cell_count(1);
  std::vector<std::vector<std::pair<int, int>>> adj(nv);  // (edge, other end)
  for (std::size_t e = 0; e < ne; ++e) {
    const CellId c{1, static_cast<int>(e)};
    const int s = x.face(c, 1).base.index, t = x.face(c, 0).base.index;
    adj[static_cast<std::size_t>(s)].push_back({static_cast<int>(e), t});
    adj[static_cast<std::size_t>(t)].push_back({static_cast<int>(e), s});
  }
  std::vector<bool> seen(nv, false), tree(ne, false);
  std::deque<int> queue{base.index};
  seen[static_cast<std::size_t>(base.index)] = true;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (auto [e, w] : adj[static_cast<std::size_t>(v)])
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        tree[static_cast<std::size_t>(e)] = true;
        queue.push_back(w);
      }
  }
  GroupPresentation out;
  std::vector<int> letter(ne, 0);
  for (std::size_t e = 0; e < ne; ++e) {
    const CellId c{1, static_cast<int>(e)};
    if (tree[e] || !seen[static_cast<std::size_t>(x.face(c, 1).base.index)]) continue;
    out.generators.push_back(x.name(c));
    letter[e] = static_cast<int>(out.generators.size());
  }
  auto letter_of = [&](const SimplexRef& edge) {
    return edge.degenerate() ? 0 : letter[static_cast<std::size_t>(edge.base.index)];
  };
  for (std::size_t t = 0; t < x.cell_count(2); ++t) {
    const CellId c{2, static_cast<int>(t)};
    if (!seen[static_cast<std::size_t>(x.apply_face(x.face(c, 0), 0).base.index)]) continue;
    std::vector<int> r;
    // Boundary path v0 → v1 → v2 → v0.
    if (int l = letter_of(x.face(c, 2))) r.push_back(l);
    if (int l = letter_of(x.face(c, 0))) r.push_back(l);
    if (int l = letter_of(x.face(c, 1))) r.push_back(-l);
    out.relators.push_back(std::move(r));
  }
  return out;
}

namespace {

std::vector<int> reduce(std::vector<int> w) {
  std::vector<int> out;
  for (int l : w) {
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  std::size_t a = 0, b = out.size();
  while (b - a >= 2 && out[a] == -out[b - 1]) {
    ++a;
    --b;
  }
  return {out.begin() + static_cast<long>(a), out.begin() + static_cast<long>(b)};
}

std::vector<int> inverse_word(const std::vector<int>& w) {
  std::vector<int> out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
  return out;
}

}  // namespace

GroupPresentation simplify(const GroupPresentation& input) {
  GroupPresentation g = input;
  while (true) {
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> rels;
    for (auto& r : g.relators) {
      auto red = reduce(r);
      if (!red.empty() && seen.insert(red).second) rels.push_back(std::move(red));
    }
    g.relators = std::move(rels);
    std::sort(g.relators.begin(), g.relators.end(),
              [](const auto& a, const auto& b) { return a.size() < b.size(); });
    // Find a relator in which some generator occurs exactly once.
    int pick_rel = -1, pick_gen = 0;
    for (std::size_t ri = 0; ri < g.relators.size() && pick_rel < 0; ++ri) {
      std::map<int, int> count;
      for (int l : g.relators[ri]) ++count[std::abs(l)];
      for (int l : g.relators[ri])
        if (count[std::abs(l)] == 1) {
          pick_rel = static_cast<int>(ri);
          pick_gen = std::abs(l);
          break;
        }
    }
    if (pick_rel < 0) break;
    std::vector<int> r = g.relators[static_cast<std::size_t>(pick_rel)];
    const auto pos = std::find_if(r.begin(), r.end(), [&](int l) { return std::abs(l) == pick_gen; });
    const int sign = *pos > 0 ? 1 : -1;
    // r rotated to g^ε w, hence g^ε = w⁻¹.
    std::vector<int> w(pos + 1, r.end());
    w.insert(w.end(), r.begin(), pos);
    std::vector<int> value = sign > 0 ? inverse_word(w) : w;
    const std::vector<int> value_inv = inverse_word(value);
    g.relators.erase(g.relators.begin() + pick_rel);
    for (auto& rel : g.relators) {
      std::vector<int> next;
      for (int l : rel) {
        if (std::abs(l) == pick_gen) {
          const auto& v = l > 0 ? value : value_inv;
          next.insert(next.end(), v.begin(), v.end());
        } else {
          next.push_back(l);
        }
      }
      rel = std::move(next);
    }
    g.generators.erase(g.generators.begin() + (pick_gen - 1));
    for (auto& rel : g.relators)
      for (int& l : rel)
        if (std::abs(l) > pick_gen) l += l > 0 ? -1 : 1;
  }
  return g;
}

HomologyGroup abelianization(const GroupPresentation& g) {
  const std::size_t n = g.generators.size();
  IntMatrix m(g.relators.size(), n);
  for (std::size_t r = 0; r < g.relators.size(); ++r)
    for (int l : g.relators[r]) m(r, static_cast<std::size_t>(std::abs(l) - 1)) += l > 0 ? 1 : -1;
  return HomologyGroup::from_invariants(n, invariant_factors(m));
}

// ---------------------------------------------------------------------------

namespace {

FiniteGroup cyclic(int n) {
  FiniteGroup g{"Z" + std::to_string(n), {}, {}};
  for (int a = 0; a < n; ++a) {
    g.table.emplace_back();
    for (int b = 0; b < n; ++b) g.table.back().push_back((a + b) % n);
    g.inverse.push_back((n - a) % n);
  }
  return g;
}

FiniteGroup klein() {
  FiniteGroup g{"Z2xZ2", {}, {}};
  for (int a = 0; a < 4; ++a) {
    g.table.emplace_back();
    for (int b = 0; b < 4; ++b) g.table.back().push_back(a ^ b);
    g.inverse.push_back(a);
  }
  return g;
}

FiniteGroup symmetric3() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  FiniteGroup g{"S3", {}, {}};
  auto index = [&](const std::array<int, 3>& q) {
    return static_cast<int>(std::find(perms.begin(), perms.end(), q) - perms.begin());
  };
  for (const auto& a : perms) {
    g.table.emplace_back();
    for (const auto& b : perms) {
      std::array<int, 3> c{};
      for (int i = 0; i < 3; ++i) c[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(b[static_cast<std::size_t>(i)])];
      g.table.back().push_back(index(c));
    }
  }
  for (std::size_t a = 0; a < perms.size(); ++a)
    for (std::size_t b = 0; b < perms.size(); ++b)
      if (g.table[a][b] == 0) g.inverse.push_back(static_cast<int>(b));
  return g;
}

}  // namespace

const std::vector<FiniteGroup>& small_groups() {
  static const std::vector<FiniteGroup> groups{cyclic(1), cyclic(2), cyclic(3), cyclic(4),
                                               klein(),   cyclic(5), cyclic(6), symmetric3()};
  return groups;
}

std::optional<long long> count_homs(const GroupPresentation& p, const FiniteGroup& g,
                                    long long limit) {
  const int n = static_cast<int>(p.generators.size());
  const int order = g.order();
  long long space = 1;
  for (int i = 0; i < n; ++i) {
    space *= order;
    if (space > limit) return std::nullopt;
  }
  // Relators are checked as soon as their largest generator is assigned.
  std::vector<std::vector<const std::vector<int>*>> ready(static_cast<std::size_t>(n + 1));
  for (const auto& r : p.relators) {
    int top = 0;
    for (int l : r) top = std::max(top, std::abs(l));
    ready[static_cast<std::size_t>(top)].push_back(&r);
  }
  std::vector<int> value(static_cast<std::size_t>(n + 1), 0);
  auto holds = [&](const std::vector<int>& r) {
    int acc = 0;
    for (int l : r) {
      const int v = value[static_cast<std::size_t>(std::abs(l))];
      acc = g.table[static_cast<std::size_t>(acc)][static_cast<std::size_t>(l > 0 ? v : g.inverse[static_cast<std::size_t>(v)])];
    }
    return acc == 0;
  };
  for (const auto* r : ready[0])
    if (!holds(*r)) return 0;
  long long count = 0;
  std::function<void(int)> search = [&](int k) {
    if (k > n) {
      ++count;
      return;
    }
    for (int v = 0; v < order; ++v) {
      value[static_cast<std::size_t>(k)] = v;
      bool ok = true;
      for (const auto* r : ready[static_cast<std::size_t>(k)])
        if (!holds(*r)) {
          ok = false;
          break;
        }
      if (ok) search(k + 1);
    }
  };
  search(1);
  return count;
}

}  // namespace skernel
