#include "doctest.h"
#include "snb/bv_divergence.hpp"
#include "snb/errors.hpp"
#include "snb/sampler.hpp"

using namespace snb;

namespace {

CheckParams seeded(std::uint64_t seed, std::size_t samples = 10) {
  CheckParams p;
  p.seed = seed;
  p.samples = samples;
  return p;
}

}  // namespace

TEST_CASE("divergence of simple fields") {
  const auto odd = builtin("odd_r21");
  const auto& s = odd.space();
  const std::vector<Supernumber> tail{parse("x2", s), parse("th", s)};
  CHECK(divergence(nh_field(odd, tail), LogDensity::flat(s)).is_zero());

  const auto unit = make_field(s, {parse("1", s), Supernumber(s), Supernumber(s)});
  CHECK(format(divergence(unit, LogDensity(parse("x1", s)))) == "1");
  CHECK(divergence(unit, LogDensity::flat(s)).is_zero());
}

TEST_CASE("log-density must be even and share the space") {
  const auto odd = builtin("odd_r21");
  CHECK_THROWS_AS(LogDensity(parse("th", odd.space())), ParityError);
  CHECK_THROWS_AS(LogDensity(parse("x1 + th", odd.space())), ParityError);
  const auto even = builtin("even_r12");
  CHECK_THROWS_AS(DeltaOperator(odd, LogDensity(parse("x", even.space()))), SpaceMismatch);
}

TEST_CASE("delta goldens") {
  const auto anti = builtin("antibracket_r11");
  const DeltaOperator a(anti, LogDensity::flat(anti.space()));
  CHECK(format(delta(a, {parse("x*xi", anti.space())})) == "1");

  // The closed-form transcription gives 1 here; the divergence definition gives 0.
  const auto even = builtin("even_r12");
  const auto& s = even.space();
  const DeltaOperator e(even, LogDensity::flat(s));
  const auto f = parse("x*th1", s);
  const auto g = parse("th2", s);
  CHECK(delta(e, {f, g}).is_zero());
  CHECK(format(even_r12_delta_formula(even, f, g)) == "1");
  CHECK(delta(e, {parse("5", s), parse("x^2*th1", s)}).is_zero());
  CHECK_THROWS_AS(delta(e, {f}), ArityError);
}

TEST_CASE("delta is graded skew on random pairs") {
  const auto even = builtin("even_r12");
  const DeltaOperator e(even, LogDensity::flat(even.space()));
  for (std::uint64_t i = 0; i < 16; ++i) {
    Sampler sm(derive_seed(5, i));
    const int pf = static_cast<int>(i & 1), pg = static_cast<int>((i >> 1) & 1);
    const auto f = sm.homogeneous(even.space(), pf, 2);
    const auto g = sm.homogeneous(even.space(), pg, 2);
    CHECK(delta(e, {f, g}) == -delta(e, {g, f}).signed_by(pf * pg));
  }
}

TEST_CASE("BV relations for the antibracket") {
  const auto anti = builtin("antibracket_r11");
  for (const char* sigma : {"0", "x^2 + 3*x"}) {
    const DeltaOperator op(anti, LogDensity(parse(sigma, anti.space())));
    CHECK(check_bv_n2(op, seeded(7)).passed());
    CHECK(check_delta_leibniz_n2(op, seeded(7)).passed());
    CHECK(check_delta_skew(op, seeded(7)).passed());
    CHECK(check_delta_product_rule(op, seeded(7)).passed());
  }
  const DeltaOperator flat(anti, LogDensity::flat(anti.space()));
  const auto nil = probe_nilpotency(flat, seeded(7));
  CHECK(nil.asserted);
  CHECK(nil.passed());
}

TEST_CASE("binary-only checks reject other arities") {
  const auto odd = builtin("odd_r21");
  const DeltaOperator op(odd, LogDensity::flat(odd.space()));
  CHECK_THROWS_AS(check_bv_n2(op, seeded(7)), PreconditionError);
  CHECK_THROWS_AS(check_delta_leibniz_n2(op, seeded(7)), PreconditionError);
}

TEST_CASE("odd_r21 Delta relations that hold") {
  const auto odd = builtin("odd_r21");
  const DeltaOperator op(odd, LogDensity::flat(odd.space()));
  CHECK(check_delta_product_rule(op, seeded(7)).passed());
  CHECK(check_delta_skew(op, seeded(7)).passed());
  CHECK(check_nh_product(odd, seeded(7)).passed());
  const auto nil = probe_nilpotency(op, seeded(7, 3));
  CHECK_FALSE(nil.asserted);
}

TEST_CASE("even_r12 Delta skew") {
  const auto even = builtin("even_r12");
  CHECK(check_delta_skew(DeltaOperator(even, LogDensity::flat(even.space())), seeded(42)).passed());
}

TEST_CASE("zero bracket passes every Delta check") {
  auto doc = to_json(builtin("odd_r21"));
  doc["terms"] = nlohmann::json::array();
  const auto zero = load_spec(doc);
  const DeltaOperator op(zero, LogDensity(parse("x1^2", zero.space())));
  CHECK(check_delta_skew(op, seeded(1, 3)).passed());
  CHECK(check_delta_product_rule(op, seeded(1, 3)).passed());
  CHECK(check_delta_fi(op, seeded(1, 3)).passed());
  CHECK(check_nh_product(zero, seeded(1, 3)).passed());
  CHECK(check_field_commutator(zero, Convention::AB, seeded(1, 3)).passed());
}

TEST_CASE("closed-form cross check is report-only") {
  CheckParams p = seeded(42, 5);
  const auto r = cross_check_div_formula(p);
  CHECK_FALSE(r.asserted);
  CHECK(r.trials == 20);
  CHECK(r.details.contains("by_parity_pattern"));
}
