#include "doctest.h"
#include "snb/bracket.hpp"
#include "snb/errors.hpp"
#include "snb/rational_text.hpp"
#include "snb/sampler.hpp"

using namespace snb;

namespace {

std::vector<Supernumber> args(const BracketSpec& spec, std::initializer_list<const char*> texts) {
  std::vector<Supernumber> out;
  for (const char* t : texts) out.push_back(parse(t, spec.space()));
  return out;
}

Supernumber eval(const BracketSpec& spec, std::initializer_list<const char*> texts) {
  return eval_bracket(spec, args(spec, texts));
}

}  // namespace

TEST_CASE("builtin brackets on coordinates") {
  const auto odd = builtin("odd_r21");
  CHECK(odd.arity() == 3);
  CHECK(odd.epsilon() == 1);
  CHECK(odd.terms().size() == 6);
  CHECK(format(eval(odd, {"x1", "x2", "th"})) == "1");
  CHECK(format(eval(odd, {"x1", "th", "x2"})) == "-1");
  CHECK(eval(odd, {"x1", "x2", "1"}).is_zero());

  const auto even = builtin("even_r12");
  CHECK(even.epsilon() == 0);
  CHECK(even.terms().size() == 6);
  CHECK(format(eval(even, {"x", "th1", "th2"})) == "1");

  const auto anti = builtin("antibracket_r11");
  CHECK(anti.arity() == 2);
  CHECK(anti.epsilon() == 1);
  CHECK(format(eval(anti, {"x", "xi"})) == "1");

  CHECK_THROWS_AS(builtin("nope"), SpecError);
  CHECK(builtin_names().size() == 3);
}

TEST_CASE("bracket arity and space errors") {
  const auto odd = builtin("odd_r21");
  CHECK_THROWS_AS(eval(odd, {"x1", "x2"}), ArityError);
  const auto even = builtin("even_r12");
  std::vector<Supernumber> foreign{parse("x", even.space()), parse("th1", even.space()), parse("th2", even.space())};
  CHECK_THROWS_AS(eval_bracket(odd, foreign), SpaceMismatch);
}

TEST_CASE("bracket parity") {
  const auto odd = builtin("odd_r21");
  CHECK(bracket_parity(odd, args(odd, {"x1", "x2", "th"})) == Parity::Even);
  CHECK(bracket_parity(odd, args(odd, {"x1", "x2", "x1"})) == Parity::Odd);
  CHECK_THROWS_AS(bracket_parity(odd, args(odd, {"x1 + th", "x2", "x1"})), ParityError);
  const auto even = builtin("even_r12");
  CHECK(bracket_parity(even, args(even, {"x", "th1", "th2"})) == Parity::Even);
}

TEST_CASE("mixed arguments extend multilinearly") {
  const auto odd = builtin("odd_r21");
  CHECK(eval(odd, {"x1 + th", "x2", "th"}) == eval(odd, {"x1", "x2", "th"}) + eval(odd, {"th", "x2", "th"}));
}

TEST_CASE("NH vector fields") {
  const auto odd = builtin("odd_r21");
  const auto& s = odd.space();
  auto x = nh_field(odd, args(odd, {"x2", "th"}));
  REQUIRE(x.components.size() == 3);
  CHECK(format(x.components[0]) == "1");
  CHECK(x.components[1].is_zero());
  CHECK(x.components[2].is_zero());
  CHECK(format(apply_field(x, parse("x1", s))) == "1");
  CHECK(apply_field(x, parse("7/3", s)).is_zero());

  auto y = nh_field(odd, args(odd, {"x1", "th"}));
  CHECK(y.components[0].is_zero());
  CHECK(format(y.components[1]) == "-1");
  CHECK(y.components[2].is_zero());

  CHECK(nh_field(odd, args(odd, {"1", "th"})).is_zero());
  CHECK(apply_field(make_field(s, {Supernumber(s), Supernumber(s), Supernumber(s)}), parse("x1*x2", s)).is_zero());
}

TEST_CASE("field acts as X(f) = {f, args}") {
  const auto odd = builtin("odd_r21");
  const auto& s = odd.space();
  for (std::uint64_t i = 0; i < 20; ++i) {
    Sampler sm(derive_seed(3, i));
    const auto f = sm.homogeneous(s, static_cast<int>(i & 1), 2);
    const auto a = sm.homogeneous(s, static_cast<int>((i >> 1) & 1), 2);
    const auto b = sm.homogeneous(s, static_cast<int>((i >> 2) & 1), 2);
    std::vector<Supernumber> tail{a, b};
    CHECK(apply_field(nh_field(odd, tail), f) == eval_bracket(odd, {f, a, b}));
  }
}

TEST_CASE("field commutator") {
  const auto odd = builtin("odd_r21");
  const auto x = nh_field(odd, args(odd, {"x2^2", "x1"}));
  REQUIRE(x.parity == Parity::Odd);
  const auto y = nh_field(odd, args(odd, {"x1*x2", "x1 + x2^2"}));
  for (auto c : {Convention::AB, Convention::BA}) {
    CHECK(field_commutator(nh_field(odd, args(odd, {"1", "th"})), nh_field(odd, args(odd, {"2", "th"})), c).is_zero());
    CHECK(field_commutator(x, y, c) == signed_by(field_commutator(y, x, c), 1 + 1));
  }
  const auto even_field = nh_field(odd, args(odd, {"x1*x2", "th"}));
  REQUIRE(even_field.parity == Parity::Even);
  CHECK(field_commutator(even_field, even_field, Convention::AB).is_zero());
  CHECK(parse_convention("ab") == Convention::AB);
  CHECK(parse_convention("ba") == Convention::BA);
  CHECK_THROWS_AS(parse_convention("xy"), Error);
}

TEST_CASE("spec documents") {
  const auto odd = builtin("odd_r21");
  const auto round = load_spec(to_json(odd));
  CHECK(to_json(round) == to_json(odd));
  CHECK(to_json(load_spec_file(SNB_DATA_DIR "/odd_r21.json")) == to_json(odd));

  auto doc = to_json(odd);
  auto bad = doc;
  bad["terms"][0]["derivs"][0]["coord"] = "zz";
  CHECK_THROWS_AS(load_spec(bad), Error);
  bad = doc;
  bad["terms"][0]["derivs"].erase(0);
  CHECK_THROWS_AS(load_spec(bad), SpecError);
  bad = doc;
  bad["epsilon"] = 0;
  CHECK_THROWS_AS(load_spec(bad), SpecError);
  bad = doc;
  bad["terms"][0]["coeff"] = "1/0";
  CHECK_THROWS_AS(load_spec(bad), SpecError);
  CHECK_THROWS(load_spec_file(SNB_DATA_DIR "/malformed.json"));

  auto zero = doc;
  zero["terms"] = nlohmann::json::array();
  const auto zspec = load_spec(zero);
  CHECK(eval(zspec, {"x1", "x2", "th"}).is_zero());
}

TEST_CASE("rational text") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-4") == Rational(-4));
  CHECK_THROWS_AS(parse_rational("1/0"), SpecError);
  CHECK_THROWS_AS(parse_rational("1.5"), SpecError);
  CHECK_THROWS_AS(parse_rational("2/-3"), SpecError);
}
