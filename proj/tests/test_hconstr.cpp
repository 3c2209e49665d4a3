#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "skernel/error.hpp"
#include "skernel/hconstr.hpp"
#include "skernel/random.hpp"
#include "skernel/suite.hpp"

using namespace skernel;

namespace {

HomologyGroup z() { return HomologyGroup::free(1); }

// Simplices of X in dimension m other than the degenerate basepoint.
std::size_t reduced_simplex_count(const SimplicialSet& x, int m) {
  std::size_t n = 0;
  for (const SimplexRef& s : x.all_simplices(m)) n += !x.is_basepoint_simplex(s);
  return n + (m == 0 ? 1 : 0);
}

// A → point → point sending everything to the base.
SimplicialMap collapse(const SimplicialSet& a) { return constant_map(a, point()); }

}  // namespace

TEST_CASE("wrapping keeps the vertices") {
  for (const SimplicialSet& x : {sphere(1), sphere(2), interval_pointed()}) {
    const Wrapping w = wrap(x, 4);
    CHECK(w.object.cell_count(0) == x.cell_count(0));
    CHECK(w.trunc_dim == 4);
  }
}

TEST_CASE("wrapping a point") {
  const Wrapping w = wrap(standard_simplex(0), 4);
  for (int n = 0; n <= 4; ++n) CHECK(w.object.cell_count(n) == 1);
  CHECK(homology_unreduced(w.object, 0) == z());
  for (int n = 1; n < 4; ++n) CHECK(homology_unreduced(w.object, n).is_zero());
  // Pointed, the degenerate base simplices are degeneracies of the base.
  CHECK(wrap(point(), 4).object.total_cells() == 1);
}

TEST_CASE("cells of Wr(X) are the reduced simplices of X") {
  sample::Rng rng(3);
  std::vector<SimplicialSet> spaces = {sphere(1), sphere(2)};
  for (int t = 0; t < 5; ++t) spaces.push_back(sample::pointed_set(rng));
  for (const SimplicialSet& x : spaces) {
    const Wrapping w = wrap(x, 4);
    for (int m = 0; m <= 4; ++m) CHECK(w.object.cell_count(m) == reduced_simplex_count(x, m));
    const ChainComplex norm = chains(w.object, true, std::nullopt, true);
    const ChainComplex full = chains(x, false, 4, true);
    for (int m = 0; m <= 4; ++m) CHECK(norm.rank(m) == full.rank(m));
    for (int m = 0; m < 4; ++m) CHECK(oracle::homology(norm, m) == oracle::homology(full, m));
  }
}

TEST_CASE("the counit is a weak equivalence certificate") {
  for (const SimplicialSet& x : {sphere(1), sphere(2), wedge(sphere(1), sphere(1)).object}) {
    const Wrapping w = wrap(x, 4);
    const WeqCertificate c = weq_certificate(w.counit, 3);
    CHECK_MESSAGE(c.pass(), c.summary());
    CHECK(c.groupoid == "equal");
  }
}

TEST_CASE("counit on random pointed sets") {
  sample::Rng rng(5);
  for (int t = 0; t < 15; ++t) {
    const SimplicialSet x = sample::pointed_set(rng);
    const Wrapping w = wrap(x, 4);
    const WeqCertificate c = weq_certificate(w.counit, 3);
    CHECK_MESSAGE(c.pass(), c.summary());
    for (int n = 0; n < 4; ++n) CHECK(homology_space(w.object, n) == homology_space(x, n));
    const GroupoidPresentation gx = groupoid_presentation(x), gw = groupoid_presentation(w.object);
    CHECK(gx.objects.size() == gw.objects.size());
  }
}

TEST_CASE("wrapped simplices map back under the counit") {
  const SimplicialSet x = sphere(2);
  const Wrapping w = wrap(x, 4);
  for (int m = 0; m <= 3; ++m)
    for (const SimplexRef& s : x.all_simplices(m)) CHECK(w.counit(w.wrap_simplex(x, s)) == s);
}

TEST_CASE("skeleta of Wr(X) are pushouts") {
  for (int n = 0; n <= 2; ++n) {
    const SkeletonPushoutReport r = skeleton_pushout_check(sphere(1), n, 4);
    CHECK_MESSAGE(r.ok, r.detail);
    CHECK(r.pushout_cells == r.skeleton_cells);
    for (std::size_t m = 0; m < r.skeleton_cells.size(); ++m)
      CHECK(r.skeleton_cells[m] == (static_cast<int>(m) <= n + 1 ? reduced_simplex_count(sphere(1), static_cast<int>(m)) : 0));
  }
  for (int n = 0; n <= 2; ++n) CHECK(skeleton_pushout_check(point(), n, 4).ok);
  sample::Rng rng(8);
  for (int t = 0; t < 5; ++t) {
    const SimplicialSet x = sample::pointed_set(rng);
    for (int n = 0; n <= 2; ++n) CHECK(skeleton_pushout_check(x, n, 4).ok);
  }
  CHECK_THROWS_AS(skeleton_pushout_check(point(), 4, 4), RangeError);
  CHECK_THROWS_AS(skeleton_pushout_check(standard_simplex(1), 0, 4), PreconditionError);
}

TEST_CASE("homotopy pushout of point <- S0 -> point is a circle") {
  const PushoutDiagram q{collapse(sphere(0)), collapse(sphere(0))};
  const HomotopyPushout hp = homotopy_pushout(q);
  const ChainComplex c = chains(hp.object(), true);
  for (int n = 0; n <= 3; ++n) CHECK(oracle::homology(c, n) == (n == 1 ? z() : HomologyGroup{}));
  CHECK(homotopy_pushout_cross_check(q).ok);
}

TEST_CASE("homotopy pushout along a coprojection compares with the strict pushout") {
  const SimplicialSet k = sphere(1), a = sphere(2);
  const Coproduct l = wedge(k, a);
  const PushoutDiagram q{l.in_left, collapse(k)};
  const HomotopyPushout hp = homotopy_pushout(q);
  const Pushout strict = pushout_inj(q.f, q.g);
  const WeqCertificate c = weq_certificate(strict_comparison(q, hp, strict), 3);
  CHECK_MESSAGE(c.pass(), c.summary());
  CHECK(homology_space(strict.object, 2) == z());
  CHECK(homology_space(strict.object, 1).is_zero());
}

TEST_CASE("homotopy pushout of identities") {
  const SimplicialSet k = sphere(1);
  const SimplicialMap id = SimplicialMap::identity(k);
  const PushoutDiagram q{id, id};
  const HomotopyPushout hp = homotopy_pushout(q);
  const SimplicialMap to_k = homotopy_pushout_map(q, hp, id, id);
  const WeqCertificate c = weq_certificate(to_k, 3);
  CHECK_MESSAGE(c.pass(), c.summary());
  CHECK(compose(to_k, hp.from_l) == id);
}

TEST_CASE("homotopy pushout rejects maps that move the basepoint") {
  const SimplicialSet s0 = sphere(0);
  const SimplicialMap swap = SimplicialMap::from_function(s0, s0, [&](CellId c) {
    return SimplexRef::of(CellId{0, 1 - c.index});
  });
  CHECK_THROWS_AS(homotopy_pushout(PushoutDiagram{swap, swap}), PreconditionError);
}

TEST_CASE("cylinders") {
  const SimplicialSet k = sphere(1);
  const Cylinder cyl_id = cylinder(SimplicialMap::identity(k));
  CHECK(compose(cyl_id.retraction, cyl_id.from_l) == SimplicialMap::identity(k));
  const WeqCertificate c = weq_certificate(cyl_id.retraction, 3);
  CHECK_MESSAGE(c.pass(), c.summary());
  CHECK(weq_certificate(cyl_id.from_l, 3).pass());

  const SimplicialSet s0 = sphere(0);
  const Cylinder cyl = cylinder(constant_map(s0, s0));
  CHECK(compose(cyl.retraction, cyl.from_l) == SimplicialMap::identity(s0));
  CHECK(weq_certificate(cyl.retraction, 3).pass());
  CHECK(pi0(cyl.object()).count == 2);
}

TEST_CASE("certificates") {
  const SimplicialSet s2 = sphere(2);
  const WeqCertificate id = weq_certificate(SimplicialMap::identity(s2), 3);
  CHECK(id.pass());
  CHECK(id.homology_iso.size() == 4);
  CHECK(weq_certificate(constant_map(standard_simplex(2), standard_simplex(0)), 3).pass());
  const WeqCertificate s1 = weq_certificate(collapse(sphere(1)), 3);
  CHECK_FALSE(s1.pass());
  CHECK_FALSE(s1.homology_iso.at(1));
  CHECK(s1.quotients.at(2).first == 2);
  CHECK(s1.quotients.at(2).second == 1);
  CHECK_FALSE(weq_certificate(collapse(sphere(0)), 3).pass());
  CHECK_THROWS_AS(weq_certificate(collapse(sphere(0)), -1), ParameterError);
}

TEST_CASE("the pushout corpus") {
  const std::vector<NamedDiagram> corpus = pushout_corpus();
  REQUIRE(corpus.size() == 10);
  CHECK(corpus.front().name == "point <- S0 -> point");
  for (const NamedDiagram& d : corpus) {
    const DiagramVerdict v = verify_diagram(d.diagram, 3);
    CHECK_MESSAGE(v.ok(), d.name << ": " << v.summary());
    CHECK(v.retraction_strict);
  }
}

TEST_CASE("the bar pushout object has M and L in column 0") {
  const PushoutDiagram q{collapse(sphere(0)), collapse(sphere(0))};
  const BisimplicialSet b = bar_pushout_object(q);
  CHECK(b.cell_count(0, 0) >= 1);
  const CrossCheckReport r = homotopy_pushout_cross_check(q);
  CHECK(r.diagonal_cells == r.pushout_cells);
}
