#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "triplex/catalog.hpp"
#include "triplex/errors.hpp"
#include "triplex/suite.hpp"
#include "triplex/system_io.hpp"

using namespace triplex;

namespace {

const std::filesystem::path data = TRIPLEX_DATA_DIR;

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string rejection(const std::string& text) {
  try {
    parse_system(text);
  } catch (const ValidationError& e) {
    return e.what();
  }
  return "";
}

int run(const std::string& args) {
  const std::string cmd = std::string(TRIPLEX_CLI) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

const char* kS2Header = R"({"name":"x","kind":"lts","dim":2,"basis":["e","f"],"entries":)";

}  // namespace

TEST_CASE("bundled files match the catalog") {
  CHECK(slurp(data / "s2.json") == dump_system(catalog::s2()));
  CHECK(slurp(data / "sl2.json") == dump_system(catalog::sl2()));
  CHECK(slurp(data / "sl3.json") == dump_system(catalog::sl3()));
  CHECK(slurp(data / "sl3_sym.json") == dump_system(catalog::sl3_symmetric_lts()));
  CHECK(slurp(data / "abelian3.json") == dump_system(catalog::abelian(3)));
  CHECK(slurp(data / "s2_plus_s2.json") == dump_system(catalog::direct_sum(catalog::s2(), catalog::s2())));
  for (const char* f : {"s2.json", "sl3_sym.json", "abelian3.json"}) {
    const TripleSystem t = load_triple_system(data / f);
    CHECK(dump_system(t) == slurp(data / f));
  }
  const SystemDocument lie = load_system(data / "sl2.json");
  REQUIRE(std::holds_alternative<LieAlgebra>(lie));
  CHECK(dump_system(std::get<LieAlgebra>(lie)) == slurp(data / "sl2.json"));
  CHECK(load_triple_system(data / "sl2.json").dim() == 3);
}

TEST_CASE("documents round trip") {
  const std::string text = std::string(kS2Header) + R"([{"args":[0,1,0],"value":{"0":"4/2"}},
    {"args":[1,0,0],"value":{"0":"-2"}},{"args":[0,1,1],"value":{"1":"-2"}},
    {"args":[1,0,1],"value":{"1":"2"}}]})";
  const SystemDocument d = parse_system(text);
  REQUIRE(std::holds_alternative<TripleSystem>(d));
  const TripleSystem& t = std::get<TripleSystem>(d);
  CHECK(t.constant(0, 1, 0) == Vec{2, 0});
  CHECK(satisfies_axioms(t));
  const SystemDocument again = parse_system(dump_system(t));
  CHECK(dump_system(std::get<TripleSystem>(again)) == dump_system(t));
}

TEST_CASE("malformed documents are rejected") {
  CHECK(rejection(R"({"kind":"lts","dim":0,"basis":[],"entries":[]})").find("positive") != std::string::npos);
  CHECK(rejection("{\n\"kind\": \"lts\",\n\"dim\": 2,,\n}").find("line 3") != std::string::npos);
  CHECK(rejection(R"({"kind":"group","dim":1,"basis":["a"],"entries":[]})").find("unknown kind") !=
        std::string::npos);
  CHECK(rejection(R"({"kind":"lts","dim":2,"basis":["e"],"entries":[]})") != "");
  CHECK(rejection(std::string(kS2Header) + R"([{"args":[0,1],"value":{"0":"1"}}]})") != "");
  CHECK(rejection(std::string(kS2Header) + R"([{"args":[0,1,2],"value":{"0":"1"}}]})").find("out of range") !=
        std::string::npos);
  CHECK(rejection(std::string(kS2Header) + R"([{"args":[0,1,0],"value":{"0":1}}]})") != "");
  CHECK(rejection(std::string(kS2Header) + R"([{"args":[0,1,0],"value":{"0":"1.5"}}]})") != "");
  CHECK(rejection(std::string(kS2Header) + R"([{"args":[0,1,0],"value":{"7":"1"}}]})") != "");
  CHECK(rejection("[1,2]") != "");
  CHECK_THROWS_AS(load_system(data / "missing.json"), ValidationError);
}

TEST_CASE("suite reports are deterministic") {
  SuiteOptions o{4, 7, kDefaultMaxMonomials};
  const SuiteReport a = run_suite("hopf", catalog::s2(), o);
  const SuiteReport b = run_suite("hopf", catalog::s2(), o);
  CHECK(a.pass());
  CHECK(a.to_json() == b.to_json());
  CHECK(std::is_sorted(a.checks.begin(), a.checks.end(),
                       [](const CheckRecord& x, const CheckRecord& y) { return x.id < y.id; }));
  CHECK(default_cap(2) == 6);
  CHECK(default_cap(3) == 4);
  CHECK(default_cap(8) == 3);
  CHECK_THROWS_AS(run_suite("nope", catalog::s2(), o), PreconditionError);
  SampleSource s(1), r(1);
  for (int i = 0; i < 50; ++i) {
    const long c = s.coefficient();
    CHECK(c == r.coefficient());
    CHECK(c >= -3);
    CHECK(c <= 3);
  }
}

TEST_CASE("command line exit codes") {
  const std::string s2 = (data / "s2.json").string();
  const std::string ab = (data / "abelian3.json").string();
  CHECK(run("check " + s2) == 0);
  CHECK(run("endo " + s2) == 0);
  CHECK(run("endo " + ab) == 1);
  CHECK(run("simple " + ab) == 1);
  CHECK(run("pbw -N 4 " + s2) == 0);
  CHECK(run("mul -N 4 " + s2 + " e f") == 0);
  CHECK(run("mul -N 2 " + s2 + " e^2 f") == 3);
  CHECK(run("mul -N 4 " + s2 + " 'e*f*e' f") == 2);
  CHECK(run("ideal -N 3 " + s2 + " --right e") == 0);
  CHECK(run("--max-monomials 10 pbw -N 4 " + s2) == 3);
  CHECK(run("verify -N 4 " + s2 + " --suite axioms") == 0);
  CHECK(run("verify " + s2 + " --suite bogus") == 2);
  CHECK(run("check " + (data / "missing.json").string()) == 2);
  CHECK(run("") == 2);
}
