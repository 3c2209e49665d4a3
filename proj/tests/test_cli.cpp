#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <string>

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(SKERNEL_CLI) + " " + args + " 2>&1";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string data(const std::string& name) { return std::string(SKERNEL_DATA) + "/" + name; }

}  // namespace

TEST_CASE("homology of the 2-sphere") {
  const Run r = run("homology --in " + data("s2.json"));
  CHECK(r.status == 0);
  CHECK(r.out == "H0=Z H1=0 H2=Z\n");
}

TEST_CASE("homology of a chain complex and a simplicial group") {
  CHECK(run("homology --in " + data("k_mult2.json")).out == "H0=Z/2 H1=0\n");
  const Run g = run("homology --in " + data("z_degree1_group.json"));
  CHECK(g.status == 0);
  CHECK(g.out.find("1=Z") != std::string::npos);
}

TEST_CASE("wr-verify on the circle passes") {
  const Run r = run("wr-verify --in " + data("s1.json") + " --dim 4");
  CHECK(r.status == 0);
  CHECK(r.out.find("\"pass\": true") != std::string::npos);
}

TEST_CASE("pushout and cylinder") {
  const Run p = run("pushout --in " + data("s0_to_point.json") + " --in " + data("s0_to_point.json"));
  CHECK(p.status == 0);
  CHECK(p.out.find("H1=Z") != std::string::npos);
  CHECK(run("cylinder --in " + data("s0_to_interval.json")).status == 0);
}

TEST_CASE("other subcommands") {
  CHECK(run("nk-roundtrip --in " + data("k_mult2.json")).status == 0);
  CHECK(run("nk-roundtrip --in " + data("z_degree1_group.json")).status == 0);
  CHECK(run("bar --in " + data("constant_z_group.json")).status == 0);
  CHECK(run("ez-verify --in " + data("constant_z_group.json") + " --in " + data("z_degree1_group.json")).status == 0);
  CHECK(run("tower-report --in " + data("k_mult2.json") + " --in " + data("l_point.json")).status == 0);
  CHECK(run("space-homology --in " + data("torus_free.json")).status == 0);
}

TEST_CASE("a corrupted differential fails the suite") {
  const Run r = run("suite --seed 0 --size small --inject-fault");
  CHECK(r.status == 1);
  CHECK(r.out.find("FAIL  normalized complex of K(C)") != std::string::npos);
}

TEST_CASE("the suite is deterministic") {
  const Run a = run("suite --seed 0 --size small");
  const Run b = run("suite --seed 0 --size small");
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind("suite seed=0 size=small\n", 0) == 0);
  CHECK(run("suite --seed 1 --size small").status == 0);
}

TEST_CASE("bad input exits with status 2") {
  CHECK(run("homology --in /nonexistent.json").status == 2);
  CHECK(run("homology").status == 2);
  CHECK(run("no-such-command").status == 2);
  CHECK(run("wr-verify --in " + data("s1.json") + " --dim 99").status == 2);
  CHECK(run("homology --in " + data("s0_to_point.json")).status == 2);
}
