#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "snb/cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = snb::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(SNB_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("eval") {
  auto r = run({"eval", "--bracket", "odd_r21", "--args", "x1;x2;th"});
  CHECK(r.code == 0);
  CHECK(r.out == "1\n");
  CHECK(run({"eval", "--bracket", "odd_r21", "--args", "x1;th;x2"}).out == "-1\n");
  r = run({"eval", "--bracket", "odd_r21", "--args", "x1;x2"});
  CHECK(r.code == 2);
  CHECK(r.err.find("arity") != std::string::npos);
  CHECK(run({"eval", "--bracket", "odd_r21", "--args", "x1;x2;y"}).code == 2);
  CHECK(run({"eval", "--bracket", "nosuch", "--args", "x1;x2;th"}).code == 2);
  CHECK(run({"bogus"}).code == 2);
}

TEST_CASE("check exit codes") {
  auto r = run({"check", "--bracket", "odd_r21", "--suite", "skew", "--samples", "5"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("effective seed: 42", 0) == 0);
  r = run({"check", "--bracket", data("odd_r21_flipped_term1.json"), "--suite", "skew", "--samples", "20"});
  CHECK(r.code == 1);
  CHECK(r.out.find("lhs =") != std::string::npos);
  CHECK(run({"check", "--bracket", "antibracket_r11", "--suite", "bv", "--samples", "5"}).code == 0);
  CHECK(run({"check", "--bracket", "odd_r21", "--suite", "nope"}).code == 2);
  CHECK(run({"check", "--bracket", "odd_r21", "--suite", "bv", "--density", "th"}).code == 2);
  CHECK(run({"check", "--bracket", data("malformed.json"), "--suite", "skew"}).code == 2);
}

TEST_CASE("check JSON output is deterministic") {
  const std::vector<std::string> args{"check", "--bracket", "odd_r21", "--suite", "fi", "--samples", "3", "--json"};
  const auto a = run(args);
  const auto b = run(args);
  CHECK(a.out == b.out);
  const auto j = nlohmann::json::parse(a.out);
  CHECK(j["seed"] == 42);
  CHECK(j["reports"].size() == 1);
}

TEST_CASE("dynamics") {
  auto r = run({"dynamics", "--bracket", "odd_r21", "--hamiltonians", "x2^2/2;th", "--order", "4", "--json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["x1"] == nlohmann::json::array({"x1", "x2", "0", "0", "0"}));
  CHECK(run({"dynamics", "--bracket", "odd_r21", "--hamiltonians", "x2^2/2;th", "--order", "0"}).code == 2);
  r = run({"dynamics", "--bracket", "odd_r21", "--hamiltonians", "0;0", "--order", "2", "--json"});
  CHECK(nlohmann::json::parse(r.out)["th"] == nlohmann::json::array({"th", "0", "0"}));
}

TEST_CASE("lie") {
  CHECK(run({"lie", "--algebra", data("so3.json"), "--tau", data("tau_bracket.json"), "--samples", "3"}).code == 0);
  auto r = run({"lie", "--algebra", data("so3_corrupted.json"), "--tau", "bracket"});
  CHECK(r.code == 1);
  CHECK(r.out.find("jacobi") != std::string::npos);
  CHECK(run({"lie", "--algebra", "so3", "--tau", data("so3_tau_flipped.json")}).code == 1);
  CHECK(run({"lie", "--algebra", data("malformed.json")}).code == 2);
}
