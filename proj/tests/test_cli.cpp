#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>

#include <json.hpp>

#include "formhasse/cli.hpp"
#include "formhasse/json_io.hpp"

using namespace formhasse;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string golden(const std::string& name) {
  const char* dir = std::getenv("FORMHASSE_GOLDEN_DIR");
  REQUIRE(dir != nullptr);
  std::ifstream in(std::string(dir) + "/" + name);
  REQUIRE(in.good());
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("equiv") {
  auto r = run({"equiv", "--field", "Q", "--lhs", "7,1,1,1,-7", "--rhs", "1,1,1,1,-1"});
  CHECK(r.code == 0);
  CHECK(r.out == "EQUIVALENT\n");
  r = run({"equiv", "--field", "Q", "--lhs", "1,1,1,-1", "--rhs", "1,1,1,-7"});
  CHECK(r.code == 1);
  CHECK(r.out == "INEQUIVALENT (determinant class)\n");
  r = run({"equiv", "--field", "Q", "--lhs", "1,1", "--rhs", "1,1,1"});
  CHECK(r.code == 2);
  CHECK(r.err.find("dimension mismatch") != std::string::npos);
  r = run({"equiv", "--field", "K5", "--lhs", "-phi*(3-2*s5),1,1,1,3-2*s5", "--rhs", "1,1,1,1,-phi"});
  CHECK(r.code == 0);
}

TEST_CASE("usage errors name the offending token") {
  auto r = run({"equiv", "--lhs", "1,zz", "--rhs", "1,1"});
  CHECK(r.code == 2);
  CHECK(r.err.find("zz") != std::string::npos);
  CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);
  r = run({"equiv", "--field", "R", "--lhs", "1", "--rhs", "1"});
  CHECK(r.code == 2);
  CHECK(r.err.find("R") != std::string::npos);
  r = run({"frobnicate"});
  CHECK(r.code == 2);
  CHECK(r.err.find("frobnicate") != std::string::npos);
  r = run({"hasse", "--form", "1,1", "--bogus"});
  CHECK(r.code == 2);
  CHECK(r.err.find("--bogus") != std::string::npos);
  r = run({});
  CHECK(r.code == 2);
  r = run({"hilbert", "--a", "2", "--b", "3", "--place", "9"});
  CHECK(r.code == 2);
  CHECK(r.err.find("9") != std::string::npos);
  r = run({"primes", "--limit", "abc"});
  CHECK(r.code == 2);
  r = run({"verify-paper", "--section", "nosuch"});
  CHECK(r.code == 2);
  CHECK(r.err.find("nosuch") != std::string::npos);
}

TEST_CASE("hasse and hilbert") {
  auto r = run({"hasse", "--field", "Q", "--form", "-1,-1,-1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("{real,2}") != std::string::npos);
  r = run({"--json", "hasse", "--field", "K5", "--form", "1,1,1,1,-phi"});
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["ramification"].empty());
  CHECK(j["signature"]["tau"] == json({"5", "0"}));
  r = run({"hilbert", "--field", "Q", "--a", "-1", "--b", "-1", "--place", "2"});
  CHECK(r.out == "2               -1\n");
  r = run({"--json", "hilbert", "--field", "K5", "--a", "phi", "--b", "3-2*s5"});
  for (const auto& s : json::parse(r.out)["symbols"]) CHECK(s["value"] == "1");
  r = run({"hilbert", "--field", "K5", "--a", "phi", "--b", "3-2*s5", "--place", "pi:3-2*s5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("+1") != std::string::npos);
  r = run({"hilbert", "--field", "K5", "--a", "-1", "--b", "-1", "--place", "real-tau"});
  CHECK(r.out.find("-1") != std::string::npos);
  r = run({"hilbert", "--field", "K5", "--a", "-1", "--b", "-1", "--place", "11"});
  CHECK(r.code == 2);
}

TEST_CASE("classify, primes, witness") {
  auto r = run({"classify", "--form", "1,1,1,-7"});
  CHECK(r.code == 0);
  const KleinianClass k = jsonio::kleinian_from_json(json::parse(r.out));
  CHECK(k.field_disc == -7);
  CHECK(k.cocompact);
  r = run({"primes", "--limit", "20"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\n11 ") != std::string::npos);
  CHECK(r.out.find("\n19 ") != std::string::npos);
  r = run({"witness", "--lhs", "1,1,1,1,-1", "--rhs", "7,1,1,1,-7"});
  CHECK(r.code == 0);
  const KMatrix p = jsonio::matrix_from_json(json::parse(r.out)["matrix"]);
  CHECK(p.transpose() * diag_q({1, 1, 1, 1, -1}).to_form().gram() * p == diag_q({7, 1, 1, 1, -7}).to_form().gram());
  r = run({"witness", "--lhs", "1,1", "--rhs", "1,-1"});
  CHECK(r.code == 3);
  CHECK(r.out == "NOT-FOUND\n");
  r = run({"--json", "witness", "--lhs", "1,1", "--rhs", "1,-1", "--bound", "3"});
  CHECK(r.code == 3);
  CHECK(json::parse(r.out)["found"] == false);
}

TEST_CASE("verify-paper") {
  auto r = run({"verify-paper", "--section", "swd-19"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("PASS swd-19", 0) == 0);
  r = run({"--json", "verify-paper", "--section", "lemma64", "--dmax", "100"});
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["status"] == "pass");
  const Report rep = jsonio::report_from_json(j["reports"][0]);
  CHECK(rep.section == "lemma64");
  CHECK(rep.passed());
  CHECK(jsonio::report_to_json(rep) == j["reports"][0]);
}

TEST_CASE("json flag position and environment bound") {
  const auto a = run({"--json", "classify", "--form", "1,1,1,-7"});
  const auto b = run({"classify", "--json", "--form", "1,1,1,-7"});
  CHECK(a.out == b.out);
  setenv("FORMHASSE_PRIME_BOUND", "50", 1);
  auto r = run({"equiv", "--field", "Q", "--lhs", "1000003,1", "--rhs", "1,1000003"});
  CHECK(r.code == 0);
  setenv("FORMHASSE_PRIME_BOUND", "nope", 1);
  r = run({"equiv", "--field", "Q", "--lhs", "1", "--rhs", "1"});
  CHECK(r.code == 2);
  CHECK(r.err.find("nope") != std::string::npos);
  unsetenv("FORMHASSE_PRIME_BOUND");
}

TEST_CASE("golden JSON documents") {
  CHECK(run({"--json", "equiv", "--field", "Q", "--lhs", "7,1,1,1,-7", "--rhs", "1,1,1,1,-1"}).out ==
        golden("equiv.json"));
  CHECK(run({"--json", "hasse", "--field", "K5", "--form", "1,1,1,1,-phi"}).out == golden("hasse.json"));
  CHECK(run({"--json", "hilbert", "--field", "Q", "--a", "-1", "--b", "-1"}).out == golden("hilbert.json"));
  CHECK(run({"--json", "classify", "--form", "1,1,1,-7"}).out == golden("classify.json"));
  CHECK(run({"--json", "primes", "--limit", "20"}).out == golden("primes.json"));
  CHECK(run({"--json", "witness", "--lhs", "1,1", "--rhs", "2,2"}).out == golden("witness.json"));
  CHECK(run({"--json", "verify-paper", "--section", "swd-19"}).out == golden("verify-swd-19.json"));
}

TEST_CASE("golden documents match the schema") {
  for (const char* name : {"equiv.json", "hasse.json", "hilbert.json", "classify.json", "primes.json", "witness.json",
                           "verify-swd-19.json"}) {
    const json j = json::parse(golden(name));
    // numerals are strings everywhere
    std::function<void(const json&)> walk = [&](const json& v) {
      CHECK_FALSE(v.is_number());
      if (v.is_structured())
        for (const auto& c : v) walk(c);
    };
    walk(j);
  }
  jsonio::kleinian_from_json(json::parse(golden("classify.json")));
  jsonio::matrix_from_json(json::parse(golden("witness.json"))["matrix"]);
  jsonio::report_from_json(json::parse(golden("verify-swd-19.json"))["reports"][0]);
}
