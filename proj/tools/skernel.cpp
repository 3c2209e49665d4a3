#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <CLI11.hpp>

#include "skernel/error.hpp"
#include "skernel/hconstr.hpp"
#include "skernel/io.hpp"
#include "skernel/simpab.hpp"
#include "skernel/suite.hpp"

using namespace skernel;

namespace {

constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kInputError = 2;

struct Flags {
  std::vector<std::string> inputs;
  std::string out;
  int dim = 4;
  int range = -1;
  std::uint64_t seed = 0;
  std::string size = "small";
  bool inject_fault = false;
};

struct Outcome {
  std::string report;
  bool pass = true;
};

const std::string& input(const Flags& f, std::size_t i, const char* what) {
  if (f.inputs.size() <= i) throw InputError(std::string("missing --in for ") + what);
  return f.inputs[i];
}

std::string homology_line(const std::function<HomologyGroup(int)>& h, int lo, int hi) {
  std::string out;
  for (int n = lo; n <= hi; ++n) out += (n > lo ? " " : "") + ("H" + std::to_string(n) + "=" + h(n).to_string());
  return out;
}

std::string cells_line(const SimplicialSet& x) {
  std::string out = "cells";
  for (auto c : x.cell_counts()) out += " " + std::to_string(c);
  return out;
}

std::string yes(bool b) { return b ? "yes" : "no"; }

Outcome cmd_homology(const Flags& f) {
  const io::Document doc = io::parse_document(io::read_file(input(f, 0, "the input object")));
  if (auto c = std::get_if<ChainComplex>(&doc))
    return {homology_line([&](int n) { return homology(*c, n); }, c->min_deg(), c->max_deg()) + "\n"};
  if (auto x = std::get_if<SimplicialSet>(&doc))
    return {homology_line([&](int n) { return homology_unreduced(*x, n); }, 0, x->top_dim()) + "\n"};
  const auto& a = std::get<SimplicialAbGroup>(doc);
  if (a.trunc_dim() < 1) throw RangeError("homotopy groups need D >= 1");
  return {homology_line([&](int n) { return homotopy_groups(a, n); }, 0, a.trunc_dim() - 1) + "\n"};
}

Outcome cmd_space_homology(const Flags& f) {
  const SimplicialSet x = io::parse_simplicial_set(io::read_file(input(f, 0, "the simplicial set")));
  std::string out = cells_line(x) + "\n";
  out += "unreduced " + homology_line([&](int n) { return homology_unreduced(x, n); }, 0, x.top_dim()) + "\n";
  if (x.pointed())
    out += "reduced " + homology_line([&](int n) { return homology_space(x, n); }, 0, x.top_dim()) + "\n";
  out += "components " + std::to_string(pi0(x).count) + "\n";
  return {out};
}

Outcome cmd_nk_roundtrip(const Flags& f) {
  const io::Document doc = io::parse_document(io::read_file(input(f, 0, "the input object")));
  if (auto c = std::get_if<ChainComplex>(&doc)) {
    const DoldKanReport r = check_NK(*c, f.dim);
    std::string out = "N(K(C)) = truncation of C in degrees <= " + std::to_string(f.dim) + ": " +
                      yes(r.ok) + "\n";
    if (!r.ok) out += r.detail + "\n";
    return {out, r.ok};
  }
  if (auto a = std::get_if<SimplicialAbGroup>(&doc)) {
    const DoldKanReport r = check_KN(*a);
    std::string out = "K(N(A)) = A: " + yes(r.ok) + "\n";
    if (!r.ok) out += r.detail + "\n";
    return {out, r.ok};
  }
  throw InputError("nk-roundtrip needs a chain complex or a simplicial abelian group");
}

Outcome cmd_bar(const Flags& f) {
  const SimplicialAbGroup a = io::parse_simplicial_ab_group(io::read_file(input(f, 0, "the simplicial group")));
  if (a.trunc_dim() < 1) throw RangeError("bar needs D >= 1");
  const ChainComplex na = normalize_N(a);
  const ChainComplex nb = normalize_N(bar_B(a));
  const int top = a.trunc_dim() - 1;
  bool ok = true;
  for (int n = 0; n <= top; ++n) {
    const HomologyGroup want = n == 0 ? HomologyGroup{} : homology(na, n - 1);
    ok = ok && homology(nb, n) == want;
  }
  std::string out = "N(A)  " + homology_line([&](int n) { return homology(na, n); }, 0, top) + "\n";
  out += "N(BA) " + homology_line([&](int n) { return homology(nb, n); }, 0, top) + "\n";
  out += "shift by one: " + yes(ok) + "\n";
  return {out, ok};
}

Outcome cmd_ez_verify(const Flags& f) {
  const SimplicialAbGroup a = io::parse_simplicial_ab_group(io::read_file(input(f, 0, "the first group")));
  const SimplicialAbGroup b = io::parse_simplicial_ab_group(io::read_file(input(f, 1, "the second group")));
  const EZPair ez = ez_maps(a, b);
  const bool strict = ez_strict(ez);
  const int top = std::min(a.trunc_dim(), b.trunc_dim()) - 1;
  const QuasiIsoReport q = check_quasi_iso(ez.shuffle);
  bool quasi = true;
  for (const auto& v : q.degrees)
    if (v.degree <= top && !v.iso()) quasi = false;
  std::string out = "aw*shuffle = id: " + yes(strict) + "\n";
  out += "shuffle is a homology isomorphism in degrees <= " + std::to_string(top) + ": " + yes(quasi) + "\n";
  const ChainComplex nab = normalize_N(tensor(a, b));
  out += "N(A(x)B) " + homology_line([&](int n) { return homology(nab, n); }, 0, top) + "\n";
  return {out, strict && quasi};
}

Outcome cmd_wr_verify(const Flags& f) {
  const SimplicialSet x = io::parse_simplicial_set(io::read_file(input(f, 0, "the simplicial set")));
  const int range = f.range >= 0 ? f.range : std::max(0, f.dim - 1);
  if (range > f.dim - 1 && f.dim > 0) throw RangeError("range must be at most D-1");
  const Wrapping w = wrap(x, f.dim);
  const WeqCertificate cert = weq_certificate(w.counit, range);
  return {io::serialize(cert), cert.pass()};
}

std::string diagram_report(const PushoutDiagram& q, bool& ok) {
  const HomotopyPushout hp = homotopy_pushout(q);
  const SimplicialSet& kq = hp.object();
  std::string out = "K_Q " + cells_line(kq) + "\n";
  out += "K_Q reduced " + homology_line([&](int n) { return homology_space(kq, n); }, 0, kq.top_dim()) + "\n";
  const CrossCheckReport cc = homotopy_pushout_cross_check(q);
  out += "bisimplicial diagonal agrees: " + yes(cc.ok) + "\n";
  ok = cc.ok;
  if (q.f.injective()) {
    const WeqCertificate cert = weq_certificate(strict_comparison(q, hp, pushout_inj(q.f, q.g)), 3);
    out += "strict comparison certificate: " + cert.summary() + "\n";
    ok = ok && cert.pass();
  }
  return out;
}

Outcome cmd_pushout(const Flags& f) {
  const SimplicialMap mf = io::parse_simplicial_map(io::read_file(input(f, 0, "the map f")));
  const SimplicialMap mg = io::parse_simplicial_map(io::read_file(input(f, 1, "the map g")));
  if (!(mf.source() == mg.source())) throw InputError("f and g must have the same source");
  bool ok = true;
  std::string out = diagram_report(PushoutDiagram{mf, mg}, ok);
  return {out, ok};
}

Outcome cmd_cylinder(const Flags& f) {
  const SimplicialMap mf = io::parse_simplicial_map(io::read_file(input(f, 0, "the map f")));
  const Cylinder cyl = cylinder(mf);
  const bool strict = compose(cyl.retraction, cyl.from_l) == SimplicialMap::identity(mf.target());
  const WeqCertificate back = weq_certificate(cyl.retraction, 3);
  const WeqCertificate in = weq_certificate(cyl.from_l, 3);
  std::string out = "cyl(f) " + cells_line(cyl.object()) + "\n";
  out += "retraction after inclusion is the identity: " + yes(strict) + "\n";
  out += "cyl(f) -> L: " + back.summary() + "\n";
  out += "L -> cyl(f): " + in.summary() + "\n";
  return {out, strict && back.pass() && in.pass()};
}

Outcome cmd_tower_report(const Flags& f) {
  const ChainComplex k = io::parse_chain_complex(io::read_file(input(f, 0, "K")));
  const ChainComplex l = io::parse_chain_complex(io::read_file(input(f, 1, "L")));
  const TowerReport r = sigma_tower_report(k, l);
  std::ostringstream os;
  for (const auto& [n, g] : r.tower) os << "n=" << n << " " << g.to_string() << "\n";
  os << "stabilization index " << r.stabilization_index << "\n";
  os << "limit " << r.limit_group.to_string() << "\n";
  os << "lim1 " << (r.lim1_vanishes ? "0" : "nonzero") << "\n";
  os << "homotopy classes K -> L " << r.hom_full.to_string() << "\n";
  os << "exactness verified: " << yes(r.exactness_verified) << "\n";
  return {os.str(), r.exactness_verified};
}

Outcome cmd_suite(const Flags& f) {
  SuiteOptions o;
  o.seed = f.seed;
  o.size = f.size == "medium" ? SuiteSize::medium : SuiteSize::small;
  o.threads = threads_from_environment();
  o.inject_fault = f.inject_fault;
  const SuiteReport r = run_suite(o);
  std::string out = "suite seed=" + std::to_string(f.seed) + " size=" + f.size + "\n" + r.text();
  return {out, r.all_pass()};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with simplicial sets, simplicial abelian groups and chain complexes"};
  app.require_subcommand(1);
  Flags flags;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--in", flags.inputs, "Input document (repeatable)");
    sub->add_option("--out", flags.out, "Write the report here instead of stdout");
    sub->add_option("--dim", flags.dim, "Truncation dimension D")->check(CLI::Range(0, 12));
    sub->add_option("--range", flags.range, "Certificate range")->check(CLI::Range(0, 12));
  };
  using Handler = Outcome (*)(const Flags&);
  const std::vector<std::tuple<const char*, const char*, Handler>> commands{
      {"homology", "Homology of a complex or simplicial set, homotopy groups of a simplicial group",
       cmd_homology},
      {"space-homology", "Cells, unreduced and reduced homology of a simplicial set", cmd_space_homology},
      {"nk-roundtrip", "Dold-Kan round trip on a complex or simplicial group", cmd_nk_roundtrip},
      {"bar", "Homology of N(A) and of N(BA)", cmd_bar},
      {"ez-verify", "Shuffle and Alexander-Whitney maps for two simplicial groups", cmd_ez_verify},
      {"wr-verify", "Certificate for the counit of the wrapping functor", cmd_wr_verify},
      {"pushout", "Homotopy pushout of two maps with a common source", cmd_pushout},
      {"cylinder", "Mapping cylinder of a map", cmd_cylinder},
      {"tower-report", "Truncation tower of Hom(K, L)", cmd_tower_report},
      {"suite", "Seeded verification suite", cmd_suite},
  };
  std::map<CLI::App*, Handler> handlers;
  for (const auto& [name, help, handler] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    if (std::string(name) == "suite") {
      sub->add_option("--seed", flags.seed, "Seed");
      sub->add_option("--size", flags.size, "Instance counts")->check(CLI::IsMember({"small", "medium"}));
      sub->add_option("--out", flags.out, "Write the report here instead of stdout");
      sub->add_flag("--inject-fault", flags.inject_fault)->group("");
    } else {
      common(sub);
    }
    handlers[sub] = handler;
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }
  Handler handler = nullptr;
  for (CLI::App* sub : app.get_subcommands()) handler = handlers.at(sub);

  Outcome outcome;
  try {
    outcome = handler(flags);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  if (flags.out.empty()) {
    std::cout << outcome.report;
  } else {
    std::ofstream out(flags.out, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write '" << flags.out << "'\n";
      return kInputError;
    }
    out << outcome.report;
  }
  return outcome.pass ? kOk : kVerificationFailed;
}
