#include "doctest.h"
#include "snb/dynamics.hpp"
#include "snb/errors.hpp"

using namespace snb;

namespace {

NHSystem free_system() {
  auto spec = builtin("odd_r21");
  const auto s = spec.space();
  return NHSystem(spec, {parse("x2^2/2", s), parse("th", s)});
}

}  // namespace

TEST_CASE("equation of motion of the free system") {
  const auto sys = free_system();
  const auto& s = sys.spec().space();
  CHECK(format(eom_rhs(sys, parse("x1", s))) == "x2");
  CHECK(eom_rhs(sys, parse("x2", s)).is_zero());
  CHECK(eom_rhs(sys, parse("th", s)).is_zero());
}

TEST_CASE("free flow") {
  const auto sys = free_system();
  const auto flow = evolve(sys, 3);
  CHECK(flow.order() == 3);
  const auto j = flow.to_json();
  CHECK(j["x1"] == nlohmann::json::array({"x1", "x2", "0", "0"}));
  CHECK(j["x2"] == nlohmann::json::array({"x2", "0", "0", "0"}));
  CHECK(j["th"] == nlohmann::json::array({"th", "0", "0", "0"}));
  CHECK(flow.to_json().begin().key() == "x1");
}

TEST_CASE("truncation consistency and identity at t = 0") {
  auto spec = builtin("odd_r21");
  const auto s = spec.space();
  const NHSystem sys(spec, {parse("x1*x2 + x2^2", s), parse("x1*th", s)});
  const auto low = evolve(sys, 3, 64);
  const auto high = evolve(sys, 4, 64);
  for (std::size_t i = 0; i < s->size(); ++i) {
    CHECK(low.coefficients[i][0] == Supernumber::coordinate(s, i));
    for (std::size_t k = 0; k <= 3; ++k) CHECK(low.coefficients[i][k] == high.coefficients[i][k]);
  }
  CHECK(format(lie_series(sys, parse("x1", s), 1)[1]) == format(eom_rhs(sys, parse("x1", s))));
}

TEST_CASE("flow of a product equals the product of flows") {
  const auto sys = free_system();
  const auto& s = sys.spec().space();
  const auto f = parse("x1*th", s);
  const auto flow = evolve(sys, 5);
  CHECK(compose(f, flow) == lie_series(sys, f, 5));
  const auto g = parse("x1^2*x2 - 3*th", s);
  CHECK(compose(g, flow) == lie_series(sys, g, 5));
}

TEST_CASE("zero Hamiltonians give the identity flow") {
  auto spec = builtin("odd_r21");
  const auto s = spec.space();
  const NHSystem sys(spec, {Supernumber(s), Supernumber(s)});
  const auto flow = evolve(sys, 2);
  for (std::size_t i = 0; i < s->size(); ++i) {
    CHECK(flow.coefficients[i][0] == Supernumber::coordinate(s, i));
    CHECK(flow.coefficients[i][1].is_zero());
    CHECK(flow.coefficients[i][2].is_zero());
  }
}

TEST_CASE("conserved quantities") {
  const auto sys = free_system();
  const auto& s = sys.spec().space();
  CHECK(conserved_check(sys, parse("x2^2/2", s)).passed());
  CHECK(conserved_check(sys, parse("th", s)).passed());
  const auto r = conserved_check(sys, parse("x1", s));
  CHECK_FALSE(r.passed());
  CHECK(r.details["rate"] == "x2");
}

TEST_CASE("dynamics preconditions") {
  auto spec = builtin("odd_r21");
  const auto s = spec.space();
  CHECK_THROWS_AS(NHSystem(spec, {parse("x1", s)}), ArityError);
  const auto other = builtin("even_r12").space();
  CHECK_THROWS_AS(NHSystem(spec, {parse("x1", s), parse("x", other)}), SpaceMismatch);
  const auto sys = free_system();
  CHECK_THROWS_AS(evolve(sys, 0), PreconditionError);
  const NHSystem growing(spec, {parse("x1^2*x2^2", s), parse("th", s)});
  CHECK_THROWS_AS(evolve(growing, 8, 4), PreconditionError);
}
