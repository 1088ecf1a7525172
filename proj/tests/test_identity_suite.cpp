#include "doctest.h"
#include "snb/errors.hpp"
#include "snb/identity_suite.hpp"

using namespace snb;

namespace {

CheckParams small(std::uint64_t seed = 42, std::size_t samples = 10) {
  CheckParams p;
  p.seed = seed;
  p.samples = samples;
  return p;
}

nlohmann::json term(const char* coeff, std::vector<const char*> coords, std::vector<int> slots) {
  nlohmann::json derivs = nlohmann::json::array();
  for (const char* c : coords) derivs.push_back({{"coord", c}, {"side", "L"}});
  return {{"coeff", coeff}, {"derivs", derivs}, {"sign", {{"const", 0}, {"slots", slots}}}};
}

// Jacobian determinant d(f,g,h)/d(x,y,z): a classical Nambu bracket.
BracketSpec nambu_r3() {
  nlohmann::json terms = nlohmann::json::array();
  const std::vector<std::pair<std::vector<const char*>, const char*>> perms = {
      {{"x", "y", "z"}, "1"},  {{"y", "z", "x"}, "1"},  {{"z", "x", "y"}, "1"},
      {{"y", "x", "z"}, "-1"}, {{"x", "z", "y"}, "-1"}, {{"z", "y", "x"}, "-1"}};
  for (const auto& [c, s] : perms) terms.push_back(term(s, c, {0, 0, 0}));
  return load_spec({{"name", "nambu_r3"}, {"space", "x:b,y:b,z:b"}, {"arity", 3}, {"epsilon", 0}, {"terms", terms}});
}

BracketSpec flipped(const BracketSpec& spec, std::size_t k) {
  auto terms = spec.terms();
  terms[k].coefficient = -terms[k].coefficient;
  return spec.with_terms(spec.name() + "_flip" + std::to_string(k), terms);
}

}  // namespace

TEST_CASE("classical Nambu bracket satisfies every asserted identity") {
  const auto spec = nambu_r3();
  for (auto* check : {check_skew, check_leibniz_first, check_leibniz_inner, check_cyclic, check_fi}) {
    const auto r = check(spec, small());
    CHECK_MESSAGE(r.passed(), r.suite);
    CHECK(r.trials == 10);
  }
}

TEST_CASE("antibracket passes the binary suite") {
  const auto spec = builtin("antibracket_r11");
  for (auto* check : {check_skew, check_leibniz_first, check_leibniz_inner, check_cyclic, check_fi}) {
    const auto r = check(spec, small());
    CHECK_MESSAGE(r.passed(), r.suite);
  }
  const auto g = check_generalized_skew(spec, small());
  CHECK(g.trials == 0);
  CHECK(g.details.contains("note"));
}

TEST_CASE("trial counts cover every parity pattern") {
  const auto spec = builtin("odd_r21");
  CHECK(check_skew(spec, small(42, 3)).trials == 3 * 8);
  CHECK(check_fi(spec, small(42, 2)).trials == 2 * 32);
  CHECK(parity_patterns(*spec.space(), 3).size() == 8);
  CHECK(parity_patterns(*GradedSpace::parse("x:b"), 3).size() == 1);
}

TEST_CASE("odd_r21 skew, Leibniz and cyclic relations hold") {
  const auto spec = builtin("odd_r21");
  for (auto* check : {check_skew, check_leibniz_first, check_leibniz_inner, check_cyclic})
    CHECK(check(spec, small()).passed());
}

TEST_CASE("zero bracket passes trivially") {
  auto doc = to_json(builtin("odd_r21"));
  doc["terms"] = nlohmann::json::array();
  const auto spec = load_spec(doc);
  for (auto* check : {check_skew, check_leibniz_first, check_leibniz_inner, check_cyclic, check_fi,
                      check_generalized_skew})
    CHECK(check(spec, small(1, 3)).passed());
}

TEST_CASE("every single-term sign flip of odd_r21 is detected") {
  const auto spec = builtin("odd_r21");
  for (std::size_t k = 0; k < spec.terms().size(); ++k) {
    const auto m = flipped(spec, k);
    const bool caught = !check_skew(m, small()).passed() || !check_leibniz_first(m, small()).passed() ||
                        !check_leibniz_inner(m, small()).passed() || !check_fi(m, small()).passed();
    CHECK_MESSAGE(caught, "term ", k);
  }
  const auto r = check_skew(load_spec_file(SNB_DATA_DIR "/odd_r21_flipped_term1.json"), small());
  CHECK_FALSE(r.passed());
  REQUIRE_FALSE(r.failures.empty());
  CHECK(r.failures[0].lhs != r.failures[0].rhs);
}

TEST_CASE("failure list is capped but every failing trial is counted") {
  auto p = small(42, 20);
  p.max_recorded_failures = 2;
  const auto r = check_skew(flipped(builtin("odd_r21"), 0), p);
  CHECK(r.failures.size() == 2);
  CHECK(r.failure_count > 2);
  CHECK(r.failure_count <= r.trials);
}

TEST_CASE("reports are deterministic") {
  const auto spec = builtin("odd_r21");
  CHECK(check_fi(spec, small(9, 5)).to_json() == check_fi(spec, small(9, 5)).to_json());
  CHECK(check_fi(spec, small(9, 5)).to_json() != check_fi(spec, small(10, 5)).to_json());
}

TEST_CASE("restricted bracket witness") {
  const auto spec = builtin("odd_r21");
  const std::vector<Supernumber> tail{parse("th", spec.space())};
  const auto r = find_restricted_fi_failure(spec, tail, small(42, 100));
  CHECK_FALSE(r.asserted);
  CHECK(r.details["witness_found"] == true);
  CHECK(r.details["restricted_arity"] == 2);
  REQUIRE(r.failures.size() == 1);
  CHECK(r.failures[0].lhs != r.failures[0].rhs);

  const std::vector<Supernumber> too_long{parse("th", spec.space()), parse("x1", spec.space())};
  CHECK_THROWS_AS(find_restricted_fi_failure(spec, too_long, small()), PreconditionError);
}

TEST_CASE("samples must be positive") {
  CHECK_THROWS_AS(check_skew(builtin("odd_r21"), small(42, 0)), PreconditionError);
}
