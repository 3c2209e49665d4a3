#include "skernel/suite.hpp"

#include <atomic>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <thread>

#include "skernel/error.hpp"
#include "skernel/random.hpp"
#include "skernel/simpab.hpp"

namespace skernel {

bool SuiteReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

std::string SuiteReport::text() const {
  std::ostringstream os;
  std::size_t passed = 0;
  for (const auto& c : checks) {
    os << (c.pass ? "PASS  " : "FAIL  ") << c.label << " [" << c.instances << "]";
    if (!c.pass) os << ": " << c.detail;
    os << "\n";
    passed += c.pass ? 1 : 0;
  }
  os << passed << "/" << checks.size() << " checks passed\n";
  return os.str();
}

int threads_from_environment() {
  const char* v = std::getenv("SKERNEL_THREADS");
  if (!v) return 0;
  char* end = nullptr;
  const long n = std::strtol(v, &end, 10);
  if (end == v || *end != '\0' || n < 0) return 0;
  return static_cast<int>(std::min(n, 64L));
}

// ---------------------------------------------------------------------------

namespace {

SimplicialMap by_name(const SimplicialSet& source, const SimplicialSet& target,
                      const std::map<std::string, std::string>& rename = {}) {
  return SimplicialMap::from_function(source, target, [&](CellId c) {
    std::string name = source.name(c);
    if (auto it = rename.find(name); it != rename.end()) name = it->second;
    auto found = target.find(name);
    if (!found) throw StructuralError("no cell named '" + name + "'");
    return SimplexRef::of(*found);
  });
}

}  // namespace

std::vector<NamedDiagram> pushout_corpus() {
  const SimplicialSet pt = point();
  const SimplicialSet s0 = sphere(0), s1 = sphere(1), s2 = sphere(2);
  const SimplicialSet interval = interval_pointed();
  const SimplicialSet disk = pointed_at(standard_simplex(2), CellId{0, 0});
  const SimplicialSet circle = pointed_at(simplex_boundary(2), CellId{0, 0});
  const SimplicialSet horn20 = pointed_at(horn(2, 0), CellId{0, 0});
  const Coproduct s1_s2 = wedge(s1, s2);
  const Coproduct s1_s1 = wedge(s1, s1);
  const SimplicialMap ends = by_name(s0, interval, {{"*", "[0]"}, {"v", "[1]"}});
  auto to_point = [&](const SimplicialSet& x) { return constant_map(x, pt); };
  auto id = [](const SimplicialSet& x) { return SimplicialMap::identity(x); };
  return {
      {"point <- S0 -> point", {to_point(s0), to_point(s0)}},
      {"interval <- S0 -> interval", {ends, ends}},
      {"disk <- circle -> point", {by_name(circle, disk), to_point(circle)}},
      {"S1 v S2 <- S1 -> point", {s1_s2.in_left, to_point(s1)}},
      {"S1 <- S1 -> S1", {id(s1), id(s1)}},
      {"point <- S1 -> point", {to_point(s1), to_point(s1)}},
      {"disk <- horn -> horn", {by_name(horn20, disk), id(horn20)}},
      {"S2 <- S2 -> point", {id(s2), to_point(s2)}},
      {"S1 v S1 <- S1 -> S1 v S1", {s1_s1.in_left, s1_s1.in_right}},
      {"point <- S2 -> S2", {to_point(s2), id(s2)}},
  };
}

bool DiagramVerdict::ok() const {
  return cross_check && retraction_strict && retraction_certified && inclusion_certified &&
         comparison_certified;
}

std::string DiagramVerdict::summary() const {
  std::ostringstream os;
  os << "cross-check=" << (cross_check ? "ok" : "FAIL")
     << " retraction=" << (retraction_strict ? "strict" : "FAIL")
     << " cyl->L=" << (retraction_certified ? "pass" : "FAIL")
     << " L->cyl=" << (inclusion_certified ? "pass" : "FAIL") << " strict-comparison="
     << (comparison_applies ? (comparison_certified ? "pass" : "FAIL") : "n/a");
  return os.str();
}

DiagramVerdict verify_diagram(const PushoutDiagram& q, int range) {
  DiagramVerdict v;
  v.cross_check = homotopy_pushout_cross_check(q).ok;
  const Cylinder cyl = cylinder(q.f);
  v.retraction_strict = compose(cyl.retraction, cyl.from_l) == SimplicialMap::identity(q.l());
  v.retraction_certified = weq_certificate(cyl.retraction, range).pass();
  v.inclusion_certified = weq_certificate(cyl.from_l, range).pass();
  v.comparison_applies = q.f.injective();
  v.comparison_certified = true;
  if (v.comparison_applies) {
    const HomotopyPushout hp = homotopy_pushout(q);
    const Pushout strict = pushout_inj(q.f, q.g);
    v.comparison_certified = weq_certificate(strict_comparison(q, hp, strict), range).pass();
  }
  return v;
}

// ---------------------------------------------------------------------------

namespace {

using sample::Rng;

// Returns an empty string on success, otherwise a description of the failing instance.
using Body = std::function<std::string(Rng&, int count, bool fault)>;

struct Check {
  std::string label;
  int small = 1;
  int medium = 1;
  Body body;
};

std::string group_list(const std::function<HomologyGroup(int)>& h, int lo, int hi) {
  std::string out;
  for (int n = lo; n <= hi; ++n) out += (n > lo ? " " : "") + ("H" + std::to_string(n) + "=" + h(n).to_string());
  return out;
}

IntMatrix conjugate(const IntMatrix& d, const IntMatrix& below, const IntMatrix& above_inverse) {
  return below * d * above_inverse;
}

std::string check_smith(Rng& rng, int count, bool) {
  for (int t = 0; t < count; ++t) {
    const auto rows = static_cast<std::size_t>(sample::uniform(rng, 1, 6));
    const auto cols = static_cast<std::size_t>(sample::uniform(rng, 1, 6));
    const IntMatrix m = sample::matrix(rng, rows, cols, 9);
    const SmithForm s = smith_normal_form(m);
    const std::string where = "matrix " + std::to_string(t) + " " + m.to_string();
    if (!(s.U * m * s.V == s.D)) return where + ": D != U*M*V";
    if (!is_unimodular(s.U) || !is_unimodular(s.V)) return where + ": transform not unimodular";
    Integer prev = 1;
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) {
        const Integer& x = s.D(r, c);
        if (r != c && x != 0) return where + ": off-diagonal entry";
        if (r != c) continue;
        if (x < 0) return where + ": negative diagonal entry";
        if (prev == 0 ? x != 0 : x % prev != 0) return where + ": divisibility chain broken";
        prev = x;
      }
  }
  return {};
}

std::string check_basis_change(Rng& rng, int count, bool) {
  for (int t = 0; t < count; ++t) {
    const ChainComplex c = sample::chain_complex(rng, {-1, 3, 3, 3});
    std::map<int, IntMatrix> basis, inverse;
    for (int n = c.min_deg(); n <= c.max_deg(); ++n) {
      basis[n] = sample::unimodular(rng, c.rank(n));
      inverse[n] = *unimodular_inverse(basis[n]);
    }
    std::vector<std::size_t> ranks;
    std::map<int, IntMatrix> d;
    for (int n = c.min_deg(); n <= c.max_deg(); ++n) ranks.push_back(c.rank(n));
    for (int n = c.min_deg() + 1; n <= c.max_deg(); ++n)
      d[n] = conjugate(c.d(n), basis[n - 1], inverse[n]);
    const ChainComplex e(c.min_deg(), c.max_deg(), ranks, d);
    for (int n = c.min_deg(); n <= c.max_deg(); ++n)
      if (!(homology(c, n) == homology(e, n)))
        return "instance " + std::to_string(t) + ": H" + std::to_string(n) + " changed";
  }
  return {};
}

std::string check_good_truncation(Rng& rng, int count, bool) {
  for (int t = 0; t < count; ++t) {
    const ChainComplex c = sample::chain_complex(rng, {-1, 3, 3, 3});
    const int cut = static_cast<int>(sample::uniform(rng, c.min_deg(), c.max_deg()));
    const ChainComplex tc = truncate_good(c, cut);
    for (int n = c.min_deg(); n <= c.max_deg(); ++n) {
      const HomologyGroup want = n >= cut ? homology(c, n) : HomologyGroup{};
      if (!(homology(tc, n) == want))
        return "instance " + std::to_string(t) + ": degree " + std::to_string(n) + " after cut " +
               std::to_string(cut);
    }
  }
  return {};
}

std::string check_normalized_homology(Rng& rng, int count, bool fault) {
  constexpr int D = 4;
  bool corrupted = false;
  for (int t = 0; t < count; ++t) {
    ChainComplex c = sample::chain_complex(rng, {0, 3, 3, 3});
    const ChainComplex nk = normalize_N(dold_kan_K(c, D));
    if (fault && !corrupted) {
      for (int n = c.min_deg() + 1; n <= c.max_deg() && !corrupted; ++n) {
        if (c.d(n).is_zero()) continue;
        std::vector<std::size_t> ranks;
        std::map<int, IntMatrix> d;
        for (int m = c.min_deg(); m <= c.max_deg(); ++m) ranks.push_back(c.rank(m));
        for (int m = c.min_deg() + 1; m <= c.max_deg(); ++m) d[m] = m == n ? Integer(2) * c.d(m) : c.d(m);
        c = ChainComplex(c.min_deg(), c.max_deg(), ranks, d);
        corrupted = true;
      }
    }
    for (int n = 0; n < D; ++n)
      if (!(homology(nk, n) == homology(c, n)))
        return "instance " + std::to_string(t) + ": " +
               group_list([&](int k) { return homology(nk, k); }, 0, D - 1) + " vs " +
               group_list([&](int k) { return homology(c, k); }, 0, D - 1);
  }
  return {};
}

std::string check_nk(Rng& rng, int count, bool) {
  for (int t = 0; t < count; ++t) {
    const ChainComplex c = sample::chain_complex(rng, {-1, 3, 3, 3});
    const DoldKanReport r = check_NK(c, 4);
    if (!r.ok) return "instance " + std::to_string(t) + ": " + r.detail;
  }
  return {};
}

std::string check_kn(Rng& rng, int count, bool) {
  for (int t = 0; t < count; ++t) {
    const SimplicialAbGroup a = sample::simplicial_group(rng, 4, {0, 3, 3, 3});
    const DoldKanReport r = check_KN(a);
    if (!r.ok) return "instance " + std::to_string(t) + ": " + r.detail;
  }
  return {};
}

std::string check_homotopy_groups(Rng& rng, int count, bool) {
  constexpr int D = 4;
  for (int t = 0; t < count; ++t) {
    const ChainComplex c = sample::chain_complex(rng, {-1, 3, 3, 3});
    const SimplicialAbGroup k = dold_kan_K(c, D);
    for (int i = 0; i < D; ++i)
      if (!(homotopy_groups(k, i) == homology(c, i)))
        return "instance " + std::to_string(t) + ": pi" + std::to_string(i) + " = " +
               homotopy_groups(k, i).to_string() + ", H" + std::to_string(i) + " = " +
               homology(c, i).to_string();
  }
  return {};
}

std::string check_horns(Rng& rng, int count, bool) {
  for (int t = 0; t < count; ++t) {
    const SimplicialAbGroup k = dold_kan_K(sample::chain_complex(rng, {0, 3, 3, 3}), 3);
    const sample::Horn h = sample::horn(rng, k, 3);
    const IntVector x = horn_filler(k, h.n, h.k, h.faces);
    for (int i = 0; i <= h.n; ++i)
      if (i != h.k && !(k.face(h.n, i) * x == *h.faces[static_cast<std::size_t>(i)]))
        return "horn " + std::to_string(t) + " (n=" + std::to_string(h.n) + ", k=" +
               std::to_string(h.k) + "): face " + std::to_string(i) + " differs";
  }
  return {};
}

std::string check_bar_shift(Rng& rng, int count, bool) {
  constexpr int D = 4;
  for (int t = 0; t < count; ++t) {
    const SimplicialAbGroup a = sample::simplicial_group(rng, D, {0, 2, 2, 3});
    const ChainComplex na = normalize_N(a);
    const ChainComplex nb = normalize_N(bar_B(a));
    for (int n = 0; n < D; ++n) {
      const HomologyGroup want = n == 0 ? HomologyGroup{} : homology(na, n - 1);
      if (!(homology(nb, n) == want))
        return "instance " + std::to_string(t) + ": H" + std::to_string(n) + "(NB) = " +
               homology(nb, n).to_string() + ", expected " + want.to_string();
    }
  }
  return {};
}

std::string check_double_bar(Rng&, int, bool) {
  constexpr int D = 4;
  const ChainComplex n = normalize_N(bar_B(bar_B(SimplicialAbGroup::constant(1, D))));
  for (int k = 0; k < D; ++k) {
    const HomologyGroup want = k == 2 ? HomologyGroup::free(1) : HomologyGroup{};
    if (!(homology(n, k) == want)) return group_list([&](int j) { return homology(n, j); }, 0, D - 1);
  }
  return {};
}

std::string check_ez_strict(Rng& rng, int count, bool) {
  for (int t = 0; t < count; ++t) {
    const SimplicialAbGroup a = sample::simplicial_group(rng, 4, {0, 2, 1, 3});
    const SimplicialAbGroup b = sample::simplicial_group(rng, 4, {0, 2, 1, 3});
    if (!ez_strict(ez_maps(a, b))) return "pair " + std::to_string(t) + ": aw*shuffle != id";
  }
  return {};
}

std::string check_kunneth(Rng& rng, int count, bool) {
  constexpr int D = 4;
  for (int t = 0; t < count; ++t) {
    const SimplicialAbGroup a = sample::simplicial_group(rng, D, {0, 2, 1, 3});
    const SimplicialAbGroup b = sample::simplicial_group(rng, D, {0, 2, 1, 3});
    const ChainComplex na = normalize_N(a), nb = normalize_N(b);
    const ChainComplex nab = normalize_N(tensor(a, b));
    std::vector<HomologyGroup> ha, hb;
    bool torsion_free = true;
    for (int n = 0; n < D; ++n) {
      ha.push_back(homology(na, n));
      hb.push_back(homology(nb, n));
      torsion_free = torsion_free && ha.back().torsion.empty() && hb.back().torsion.empty();
    }
    if (!torsion_free) continue;
    for (int n = 0; n < D; ++n) {
      std::size_t rank = 0;
      for (int i = 0; i <= n; ++i)
        rank += ha[static_cast<std::size_t>(i)].free_rank * hb[static_cast<std::size_t>(n - i)].free_rank;
      if (!(homology(nab, n) == HomologyGroup::free(rank)))
        return "pair " + std::to_string(t) + ": H" + std::to_string(n) + " = " +
               homology(nab, n).to_string() + ", expected rank " + std::to_string(rank);
    }
  }
  return {};
}

const std::vector<std::pair<std::string, SimplicialSet>>& sphere_family() {
  static const std::vector<std::pair<std::string, SimplicialSet>> family{
      {"S0", sphere(0)}, {"S1", sphere(1)}, {"S2", sphere(2)}};
  return family;
}

std::string check_smash_tensor(Rng&, int, bool) {
  for (const auto& [en, e] : sphere_family())
    for (const auto& [fn, f] : sphere_family()) {
      const SmashTensorReport r = smash_tensor_comparison(e, f, 4);
      if (!r.ok()) return en + " ^ " + fn + ": " + r.detail;
    }
  return {};
}

std::string check_suspension(Rng&, int, bool) {
  for (const auto& [name, f] : sphere_family())
    for (int i = 1; i <= 2; ++i) {
      const SimplicialSet s = suspension(f, i).object;
      for (int n = 0; n <= s.top_dim() + 1; ++n) {
        const HomologyGroup want = n >= i ? homology_space(f, n - i) : HomologyGroup{};
        if (!(homology_space(s, n) == want))
          return "suspension " + std::to_string(i) + " of " + name + ": H" + std::to_string(n) +
                 " = " + homology_space(s, n).to_string();
      }
    }
  return {};
}

std::string check_wrap_counit(Rng& rng, int count, bool) {
  for (int t = 0; t < count; ++t) {
    const SimplicialSet x = sample::pointed_set(rng);
    const WeqCertificate cert = weq_certificate(wrap(x, 4).counit, 3);
    if (!cert.pass() || cert.groupoid != "equal")
      return "instance " + std::to_string(t) + ": " + cert.summary();
  }
  return {};
}

std::string check_skeleta(Rng& rng, int count, bool) {
  for (int t = 0; t < count; ++t) {
    const SimplicialSet x = sample::pointed_set(rng);
    for (int n = 0; n <= 2; ++n) {
      const SkeletonPushoutReport r = skeleton_pushout_check(x, n, 4);
      if (!r.ok) return "instance " + std::to_string(t) + ", n=" + std::to_string(n) + ": " + r.detail;
    }
  }
  return {};
}

std::string check_corpus(bool (*accept)(const DiagramVerdict&)) {
  for (const auto& [name, q] : pushout_corpus()) {
    const DiagramVerdict v = verify_diagram(q, 3);
    if (!accept(v)) return name + ": " + v.summary();
  }
  return {};
}

std::string check_point_s0_point(Rng&, int, bool) {
  const PushoutDiagram q = pushout_corpus().front().diagram;
  const SimplicialSet kq = homotopy_pushout(q).object();
  for (int n = 0; n <= kq.top_dim() + 1; ++n) {
    const HomologyGroup want = n == 1 ? HomologyGroup::free(1) : HomologyGroup{};
    if (!(homology_space(kq, n) == want))
      return group_list([&](int k) { return homology_space(kq, k); }, 0, kq.top_dim() + 1);
  }
  return {};
}

std::string check_towers(Rng& rng, int count, bool) {
  for (int t = 0; t < count; ++t) {
    const ChainComplex k = sample::chain_complex(rng, {-1, 2, 2, 3});
    const ChainComplex l = sample::chain_complex(rng, {-1, 2, 2, 3});
    const TowerReport r = sigma_tower_report(k, l);
    if (!r.exactness_verified || !r.lim1_vanishes)
      return "pair " + std::to_string(t) + ": exactness=" + (r.exactness_verified ? "yes" : "no") +
             " lim1=" + (r.lim1_vanishes ? "0" : "nonzero");
  }
  return {};
}

std::vector<Check> all_checks() {
  return {
      {"smith normal form: D = U*M*V, U and V unimodular, divisibility chain", 200, 1000, check_smith},
      {"homology is invariant under a unimodular change of basis", 20, 50, check_basis_change},
      {"good truncation keeps homology from the cut upward", 20, 50, check_good_truncation},
      {"normalized complex of K(C) has the homology of C", 20, 50, check_normalized_homology},
      {"Dold-Kan: N(K(C)) is isomorphic to the truncation of C", 20, 50, check_nk},
      {"Dold-Kan: K(N(A)) is isomorphic to A", 20, 50, check_kn},
      {"homotopy groups of K(C) are the homology of C", 10, 30, check_homotopy_groups},
      {"Kan property: horn fillers in K(C)", 50, 200, check_horns},
      {"bar construction shifts normalized homology up by one", 8, 25, check_bar_shift},
      {"bar construction twice on constant Z gives Z in degree 2", 1, 1, check_double_bar},
      {"Eilenberg-Zilber: Alexander-Whitney after shuffle is the identity", 8, 25, check_ez_strict},
      {"Eilenberg-Zilber: Kunneth formula on torsion-free pairs", 8, 25, check_kunneth},
      {"reduced chains of a smash product are the tensor of reduced chains", 9, 9, check_smash_tensor},
      {"suspension shifts reduced homology", 6, 6, check_suspension},
      {"wrapping: counit certified, groupoid presentations equal", 10, 25, check_wrap_counit},
      {"wrapping: skeleton pushout squares for n = 0, 1, 2", 5, 25, check_skeleta},
      {"homotopy pushout: diagonal of the bisimplicial bar object agrees", 10, 10,
       [](Rng&, int, bool) { return check_corpus([](const DiagramVerdict& v) { return v.cross_check; }); }},
      {"cylinder: retraction strict, cyl(f) -> L and L -> cyl(f) certified", 10, 10,
       [](Rng&, int, bool) {
         return check_corpus([](const DiagramVerdict& v) {
           return v.retraction_strict && v.retraction_certified && v.inclusion_certified;
         });
       }},
      {"homotopy pushout: comparison with the strict pushout along a coprojection certified", 10, 10,
       [](Rng&, int, bool) { return check_corpus([](const DiagramVerdict& v) { return v.comparison_certified; }); }},
      {"homotopy pushout of point <- S0 -> point is a circle", 1, 1, check_point_s0_point},
      {"truncation tower: exact sequence verified, lim1 vanishes", 30, 100, check_towers},
  };
}

}  // namespace

SuiteReport run_suite(const SuiteOptions& options) {
  const std::vector<Check> checks = all_checks();
  SuiteReport report;
  report.checks.resize(checks.size());
  auto run = [&](std::size_t index) {
    const Check& check = checks[index];
    const int count = options.size == SuiteSize::small ? check.small : check.medium;
    std::seed_seq seq{static_cast<std::uint32_t>(options.seed),
                      static_cast<std::uint32_t>(options.seed >> 32),
                      static_cast<std::uint32_t>(index)};
    Rng rng(seq);
    CheckResult& out = report.checks[index];
    out.label = check.label;
    out.instances = count;
    try {
      out.detail = check.body(rng, count, options.inject_fault);
    } catch (const std::exception& e) {
      out.detail = std::string("exception: ") + e.what();
    }
    out.pass = out.detail.empty();
  };
  const int threads = std::min<int>(options.threads, static_cast<int>(checks.size()));
  if (threads <= 1) {
    for (std::size_t i = 0; i < checks.size(); ++i) run(i);
    return report;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < checks.size(); i = next++) run(i);
    });
  for (auto& th : pool) th.join();
  return report;
}

}  // namespace skernel
