#include <cctype>
#include <sstream>

#include "snb/errors.hpp"
#include "snb/graded_algebra.hpp"

namespace snb {

namespace {

constexpr unsigned kMaxExponent = 4096;

class Parser {
 public:
  Parser(std::string_view text, const SpacePtr& space) : text_(text), space_(space) {}

  Supernumber run() {
    skip_ws();
    if (pos_ == text_.size()) throw ParseError("empty expression", pos_);
    Supernumber value = expr();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return value;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Supernumber expr() {
    Supernumber value = signed_term();
    for (;;) {
      if (accept('+')) {
        value += signed_term();
      } else if (accept('-')) {
        value -= signed_term();
      } else {
        return value;
      }
    }
  }

  Supernumber signed_term() {
    if (accept('-')) return -term();
    return term();
  }

  Supernumber term() {
    Supernumber value = factor();
    for (;;) {
      if (accept('*')) {
        value = value * factor();
      } else {
        skip_ws();
        const std::size_t at = pos_;
        if (!accept('/')) return value;
        Supernumber divisor = factor();
        value = Rational(1) / constant_value(divisor, at) * value;
      }
    }
  }

  Rational constant_value(const Supernumber& s, std::size_t at) const {
    if (s.is_zero()) throw ParseError("division by zero", at);
    if (s.terms().size() == 1) {
      const auto& [m, c] = *s.terms().begin();
      bool constant = m.odd_mask == 0;
      for (auto e : m.exponents) constant = constant && e == 0;
      if (constant) return c;
    }
    throw ParseError("division by a non-constant expression", at);
  }

  Supernumber factor() {
    Supernumber value = base();
    if (accept('^')) {
      skip_ws();
      const std::size_t at = pos_;
      const mpz_class n = natural();
      if (n > kMaxExponent) throw ParseError("exponent too large", at);
      Supernumber result = Supernumber::constant(space_, 1);
      for (unsigned long i = 0; i < n.get_ui(); ++i) result = result * value;
      return result;
    }
    return value;
  }

  mpz_class natural() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected a natural number", start);
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  Supernumber base() {
    skip_ws();
    if (pos_ == text_.size()) throw ParseError("unexpected end of expression", pos_);
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Supernumber value = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return value;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Supernumber::constant(space_, Rational(natural()));
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      const auto name = text_.substr(start, pos_ - start);
      const auto index = space_->find(name);
      if (!index) throw UnknownCoordinate(std::string(name));
      return Supernumber::coordinate(space_, *index);
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  std::string_view text_;
  const SpacePtr& space_;
  std::size_t pos_ = 0;
};

}  // namespace

Supernumber parse(std::string_view text, const SpacePtr& space) { return Parser(text, space).run(); }

std::string format(const Supernumber& s) {
  if (s.is_zero()) return "0";
  const auto& space = s.space();
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : s.terms()) {
    const bool negative = c < 0;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;

    std::vector<std::string> factors;
    for (std::size_t j = 0; j < m.exponents.size(); ++j) {
      if (m.exponents[j] == 0) continue;
      std::string f = space.coord(space.bosonic_coord(j)).name;
      if (m.exponents[j] > 1) f += "^" + std::to_string(m.exponents[j]);
      factors.push_back(std::move(f));
    }
    for (std::size_t j = 0; j < space.fermionic_count(); ++j)
      if ((m.odd_mask >> j) & 1u) factors.push_back(space.coord(space.fermionic_coord(j)).name);

    const Rational magnitude = abs(c);
    if (factors.empty()) {
      out << magnitude.get_str();
      continue;
    }
    if (magnitude != 1) out << magnitude.get_str() << '*';
    for (std::size_t i = 0; i < factors.size(); ++i) out << (i ? "*" : "") << factors[i];
  }
  return out.str();
}

}  // namespace snb

#include "snb/rational_text.hpp"

namespace snb {

Rational parse_rational(std::string_view text) {
  std::size_t i = 0;
  const bool negative = !text.empty() && text[0] == '-';
  if (negative) ++i;
  auto digits = [&](std::size_t from) {
    std::size_t j = from;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    return j;
  };
  const std::size_t num_end = digits(i);
  if (num_end == i) throw SpecError("'" + std::string(text) + "' is not a rational of the form p/q");
  mpz_class num(std::string(text.substr(i, num_end - i)));
  mpz_class den = 1;
  if (num_end != text.size()) {
    if (text[num_end] != '/') throw SpecError("'" + std::string(text) + "' is not a rational of the form p/q");
    const std::size_t den_end = digits(num_end + 1);
    if (den_end == num_end + 1 || den_end != text.size())
      throw SpecError("'" + std::string(text) + "' is not a rational of the form p/q");
    den = mpz_class(std::string(text.substr(num_end + 1, den_end - num_end - 1)));
    if (den == 0) throw SpecError("zero denominator in '" + std::string(text) + "'");
  }
  Rational r(negative ? mpz_class(-num) : num, den);
  r.canonicalize();
  return r;
}

}  // namespace snb
