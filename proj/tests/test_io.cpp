#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skernel/error.hpp"
#include "skernel/io.hpp"
#include "skernel/random.hpp"

using namespace skernel;

namespace {

std::string data(const std::string& name) { return io::read_file(std::string(SKERNEL_DATA) + "/" + name); }

std::string message_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("sample documents round-trip byte for byte") {
  for (const char* name : {"s1.json", "s2.json", "boundary_delta2.json", "torus_free.json"})
    CHECK(io::serialize(io::parse_simplicial_set(data(name))) == data(name));
  for (const char* name : {"k_mult2.json", "l_point.json"})
    CHECK(io::serialize(io::parse_chain_complex(data(name))) == data(name));
  for (const char* name : {"z_degree1_group.json", "constant_z_group.json"})
    CHECK(io::serialize(io::parse_simplicial_ab_group(data(name))) == data(name));
  for (const char* name : {"s0_to_point.json", "s0_to_interval.json"})
    CHECK(io::serialize(io::parse_simplicial_map(data(name))) == data(name));
}

TEST_CASE("the boundary of the 2-simplex loads") {
  const SimplicialSet x = io::parse_simplicial_set(data("boundary_delta2.json"));
  CHECK(x.cell_counts() == std::vector<std::size_t>{3, 3});
  CHECK_FALSE(x.pointed());
  CHECK(std::holds_alternative<SimplicialSet>(io::parse_document(data("boundary_delta2.json"))));
  CHECK(std::holds_alternative<ChainComplex>(io::parse_document(data("k_mult2.json"))));
  CHECK(std::holds_alternative<SimplicialAbGroup>(io::parse_document(data("constant_z_group.json"))));
}

TEST_CASE("random objects round-trip") {
  sample::Rng rng(6);
  for (int t = 0; t < 20; ++t) {
    const ChainComplex c = sample::chain_complex(rng, {-1, 3, 3, 5});
    CHECK(io::parse_chain_complex(io::serialize(c)) == c);
    const SimplicialSet x = sample::pointed_set(rng);
    CHECK(io::parse_simplicial_set(io::serialize(x)) == x);
    const SimplicialAbGroup a = sample::simplicial_group(rng, 3, {0, 3, 2, 2});
    CHECK(io::parse_simplicial_ab_group(io::serialize(a)) == a);
  }
}

TEST_CASE("maps round-trip") {
  const SimplicialMap f = io::parse_simplicial_map(data("s0_to_interval.json"));
  CHECK(f.preserves_basepoint());
  CHECK(io::parse_simplicial_map(io::serialize(f)) == f);
}

TEST_CASE("big integers") {
  const Integer big = Integer(1) << 80;
  const ChainComplex c(0, 1, {1, 1}, {{1, IntMatrix(1, 1, {big})}});
  const std::string text = io::serialize(c);
  CHECK(text.find("\"1208925819614629174706176\"") != std::string::npos);
  CHECK(io::parse_chain_complex(text) == c);
  const ChainComplex small(0, 1, {1, 1}, {{1, IntMatrix(1, 1, {Integer(-7)})}});
  CHECK(io::serialize(small).find("-7") != std::string::npos);
  CHECK(io::parse_chain_complex(R"({"min":0,"max":1,"ranks":{"0":1,"1":1},"d":{"1":[["-12"]]}})").d(1)(0, 0) == -12);
}

TEST_CASE("d composed with d must vanish") {
  const std::string doc = R"({"min":0,"max":2,"ranks":{"0":1,"1":1,"2":1},"d":{"1":[[1]],"2":[[1]]}})";
  const std::string msg = message_of([&] { io::parse_chain_complex(doc); });
  CHECK(msg.find("identity violation") != std::string::npos);
  CHECK(msg.find("d(1)") != std::string::npos);
}

TEST_CASE("malformed JSON reports line and column") {
  const std::string msg = message_of([] { io::parse_chain_complex("{\n  \"min\": 0,\n  \"max\": ]\n}"); });
  CHECK(msg.rfind("line 3, column 10", 0) == 0);
}

TEST_CASE("schema errors report the field") {
  CHECK(message_of([] { io::parse_chain_complex(R"({"min":0,"ranks":{}})"); }).rfind("field max: missing", 0) == 0);
  CHECK(message_of([] { io::parse_chain_complex(R"({"min":0,"max":1,"ranks":{"0":1,"1":1},"d":{"1":[[1,2]]}})"); })
            .rfind("field d.1[0]", 0) == 0);
  CHECK(message_of([] { io::parse_chain_complex(R"({"min":0,"max":0,"ranks":{"0":-1}})"); }).rfind("field ranks.0", 0) == 0);
  CHECK(message_of([] { io::parse_chain_complex(R"({"min":0,"max":0,"ranks":{},"extra":1})"); }).find("extra") !=
        std::string::npos);
  CHECK_THROWS_AS(io::parse_document("[1, 2]"), InputError);
  CHECK_THROWS_AS(io::parse_simplicial_set(R"({"pointed":false,"cells":{"1":["e"]},"faces":{"e":["a","b"]}})"),
                  InputError);
}

TEST_CASE("unreadable files") {
  CHECK_THROWS_AS(io::read_file("/nonexistent/file.json"), InputError);
}

TEST_CASE("certificates serialize") {
  const WeqCertificate c = weq_certificate(SimplicialMap::identity(sphere(1)), 2);
  const std::string text = io::serialize(c);
  CHECK(text.find("\"pass\": true") != std::string::npos);
  CHECK(text.find("\"groupoid\": \"equal\"") != std::string::npos);
}
