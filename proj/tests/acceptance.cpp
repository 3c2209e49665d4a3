// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "skernel/hconstr.hpp"
#include "skernel/random.hpp"
#include "skernel/simpab.hpp"
#include "skernel/suite.hpp"

using namespace skernel;

namespace {

struct Outcome {
  bool pass = true;
  std::string note;
  void fail(const std::string& why) {
    if (pass) note = why;
    pass = false;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

bool torsion_free(const SimplicialAbGroup& a) {
  for (int i = 0; i < a.trunc_dim(); ++i)
    if (!homotopy_groups(a, i).torsion.empty()) return false;
  return true;
}

Outcome dold_kan() {
  Outcome o;
  const auto t0 = Clock::now();
  sample::Rng rng(101);
  const sample::ComplexShape shape{0, 3, 3, 3};
  for (int t = 0; t < 50; ++t) {
    const DoldKanReport r = check_NK(sample::chain_complex(rng, shape), 3);
    if (!r.ok) o.fail("N(K(C)) instance " + std::to_string(t) + ": " + r.detail);
  }
  for (int t = 0; t < 50; ++t) {
    const DoldKanReport r = check_KN(sample::simplicial_group(rng, 3, shape));
    if (!r.ok) o.fail("K(N(A)) instance " + std::to_string(t) + ": " + r.detail);
  }
  if (seconds_since(t0) >= 30) o.fail("took longer than 30 s");
  return o;
}

Outcome bar_shift() {
  Outcome o;
  sample::Rng rng(102);
  for (int t = 0; t < 25; ++t) {
    const SimplicialAbGroup a = sample::simplicial_group(rng, 4, {0, 3, 2, 3});
    const ChainComplex na = normalize_N(a), nb = normalize_N(bar_B(a));
    if (!homology(nb, 0).is_zero()) o.fail("instance " + std::to_string(t) + ": H0 of N(BA) nonzero");
    for (int n = 0; n + 1 <= 3; ++n)
      if (!(homology(nb, n + 1) == oracle::homology(na, n)))
        o.fail("instance " + std::to_string(t) + " degree " + std::to_string(n + 1));
  }
  const ChainComplex bb = normalize_N(bar_B(bar_B(SimplicialAbGroup::constant(1, 4))));
  for (int n = 0; n <= 3; ++n)
    if (!(homology(bb, n) == (n == 2 ? HomologyGroup::free(1) : HomologyGroup{})))
      o.fail("B(B(Z)) degree " + std::to_string(n));
  return o;
}

Outcome eilenberg_zilber() {
  Outcome o;
  sample::Rng rng(103);
  const sample::ComplexShape shape{0, 3, 2, 2};
  for (int t = 0; t < 25; ++t) {
    const SimplicialAbGroup a = sample::simplicial_group(rng, 4, shape);
    const SimplicialAbGroup b = sample::simplicial_group(rng, 4, shape);
    if (!ez_strict(ez_maps(a, b))) o.fail("aw*shuffle != id on pair " + std::to_string(t));
  }
  int found = 0;
  for (int attempt = 0; attempt < 2000 && found < 25; ++attempt) {
    const SimplicialAbGroup a = sample::simplicial_group(rng, 4, shape);
    const SimplicialAbGroup b = sample::simplicial_group(rng, 4, shape);
    if (!torsion_free(a) || !torsion_free(b)) continue;
    ++found;
    const ChainComplex na = normalize_N(a), nb = normalize_N(b), nab = normalize_N(tensor(a, b));
    auto ha = [&](int n) { return oracle::homology(na, n); };
    auto hb = [&](int n) { return oracle::homology(nb, n); };
    for (int n = 0; n <= 3; ++n)
      if (!(homology(nab, n) == oracle::kunneth(ha, hb, 0, 0, n)))
        o.fail("Kunneth fails in degree " + std::to_string(n));
  }
  if (found < 25) o.fail("only " + std::to_string(found) + " torsion-free pairs drawn");
  return o;
}

Outcome wrapping() {
  Outcome o;
  sample::Rng rng(104);
  for (int t = 0; t < 25; ++t) {
    const SimplicialSet x = sample::pointed_set(rng);
    const WeqCertificate c = weq_certificate(wrap(x, 4).counit, 3);
    if (!c.pass()) o.fail("counit instance " + std::to_string(t) + ": " + c.summary());
    if (c.groupoid != "equal") o.fail("groupoid " + c.groupoid + " on instance " + std::to_string(t));
    for (int n = 0; n <= 2; ++n) {
      const SkeletonPushoutReport r = skeleton_pushout_check(x, n, 4);
      if (!r.ok) o.fail("skeleton n=" + std::to_string(n) + " instance " + std::to_string(t) + ": " + r.detail);
    }
  }
  return o;
}

Outcome smash_and_tensor() {
  Outcome o;
  for (int i = 0; i <= 2; ++i)
    for (int j = 0; j <= 2; ++j) {
      const SmashTensorReport r = smash_tensor_comparison(sphere(i), sphere(j), 4);
      if (!r.ok()) o.fail("S" + std::to_string(i) + " ^ S" + std::to_string(j) + ": " + r.detail);
    }
  for (int f = 0; f <= 2; ++f) {
    const ChainComplex base = normalize_N(free_reduced_Z(sphere(f), 5));
    for (int i = 1; i <= 2; ++i) {
      const ChainComplex s = normalize_N(free_reduced_Z(suspension(sphere(f), i).object, 5));
      const ChainComplex shifted = shift(base, i);
      for (int n = 0; n < 5; ++n)
        if (!(homology(s, n) == homology(shifted, n)))
          o.fail("suspension " + std::to_string(i) + " of S" + std::to_string(f));
    }
  }
  return o;
}

Outcome cylinders_and_pushouts() {
  Outcome o;
  for (const NamedDiagram& d : pushout_corpus()) {
    const DiagramVerdict v = verify_diagram(d.diagram, 3);
    if (!v.retraction_strict) o.fail(d.name + ": retraction not strict");
    if (!v.ok()) o.fail(d.name + ": " + v.summary());
  }
  const SimplicialSet s0 = sphere(0);
  const PushoutDiagram q{constant_map(s0, point()), constant_map(s0, point())};
  const SimplicialSet kq = homotopy_pushout(q).object();
  if (!(homology_space(kq, 1) == HomologyGroup::free(1))) o.fail("point <- S0 -> point: H1 is not Z");
  return o;
}

Outcome towers() {
  Outcome o;
  sample::Rng rng(107);
  for (int t = 0; t < 100; ++t) {
    const ChainComplex k = sample::chain_complex(rng, {-1, 3, 3, 3});
    const ChainComplex l = sample::chain_complex(rng, {-1, 3, 3, 3});
    const TowerReport r = sigma_tower_report(k, l);
    if (!r.exactness_verified) o.fail("exactness on pair " + std::to_string(t));
    if (!r.lim1_vanishes) o.fail("lim1 on pair " + std::to_string(t));
  }
  return o;
}

Outcome smith() {
  Outcome o;
  const auto t0 = Clock::now();
  sample::Rng rng(108);
  for (int t = 0; t < 1000; ++t) {
    const auto rows = static_cast<std::size_t>(sample::uniform(rng, 1, 6));
    const auto cols = static_cast<std::size_t>(sample::uniform(rng, 1, 6));
    const IntMatrix m = sample::matrix(rng, rows, cols, 9);
    const SmithForm s = smith_normal_form(m);
    const std::string tag = "matrix " + std::to_string(t);
    if (!(s.U * m * s.V == s.D)) o.fail(tag + ": D != U*M*V");
    if (!is_unimodular(s.U) || !is_unimodular(s.V)) o.fail(tag + ": transform not unimodular");
    const std::vector<oracle::Int> expected = oracle::smith_diagonal(oracle::rows_of(m));
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) {
        if (r != c && s.D(r, c) != 0) o.fail(tag + ": off-diagonal entry");
        if (r == c) {
          if (s.D(r, r) != expected[r]) o.fail(tag + ": diagonal differs from the elimination oracle");
          if (r > 0 && s.D(r - 1, r - 1) != 0 && s.D(r, r) % s.D(r - 1, r - 1) != 0) o.fail(tag + ": divisibility");
          if (r > 0 && s.D(r - 1, r - 1) == 0 && s.D(r, r) != 0) o.fail(tag + ": zero before nonzero");
        }
      }
  }
  if (seconds_since(t0) >= 10) o.fail("took longer than 10 s");
  return o;
}

Outcome kan() {
  Outcome o;
  sample::Rng rng(109);
  for (int t = 0; t < 200; ++t) {
    const SimplicialAbGroup a = sample::simplicial_group(rng, 3, {0, 3, 3, 3});
    const sample::Horn h = sample::horn(rng, a, 3);
    const IntVector x = horn_filler(a, h.n, h.k, h.faces);
    for (int i = 0; i <= h.n; ++i)
      if (i != h.k && a.face(h.n, i) * x != *h.faces[static_cast<std::size_t>(i)])
        o.fail("horn " + std::to_string(t) + " face " + std::to_string(i));
  }
  return o;
}

Outcome determinism() {
  Outcome o;
  const auto t0 = Clock::now();
  auto run = [&](std::string& out) {
    const std::string cmd = std::string(SKERNEL_CLI) + " suite --seed 0 --size small";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return -1;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    const int raw = pclose(pipe);
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  };
  std::string a, b;
  if (run(a) != 0) o.fail("first run did not exit 0");
  if (run(b) != 0) o.fail("second run did not exit 0");
  if (a != b) o.fail("outputs differ");
  if (seconds_since(t0) >= 60) o.fail("took longer than 60 s");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"Dold-Kan round trip", dold_kan},
      {"bar construction shift", bar_shift},
      {"Eilenberg-Zilber", eilenberg_zilber},
      {"wrapping functor", wrapping},
      {"smash and tensor", smash_and_tensor},
      {"cylinder and homotopy pushout", cylinders_and_pushouts},
      {"truncation towers", towers},
      {"Smith normal form", smith},
      {"Kan property", kan},
      {"suite determinism", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::ostringstream line;
    line.precision(2);
    line << std::fixed << "criterion " << i + 1 << " (" << criteria[i].first << "): " << (o.pass ? "PASS" : "FAIL")
         << " [" << seconds_since(t0) << " s]";
    if (!o.pass) line << " " << o.note;
    std::cout << line.str() << "\n";
    failures += !o.pass;
  }
  return failures == 0 ? 0 : 1;
}
