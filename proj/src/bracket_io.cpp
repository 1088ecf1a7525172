#include <cstdint>
#include <filesystem>
#include <fstream>

#include "snb/bracket.hpp"
#include "snb/errors.hpp"
#include "snb/rational_text.hpp"

namespace snb {

namespace {

using json = nlohmann::json;

const json& field(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) throw SpecError(std::string("missing field '") + key + "'");
  return doc.at(key);
}

int bit_field(const json& value, const std::string& what) {
  if (!value.is_number_integer()) throw SpecError(what + " must be 0 or 1");
  const auto v = value.get<long long>();
  if (v != 0 && v != 1) throw SpecError(what + " must be 0 or 1");
  return static_cast<int>(v);
}

struct TermText {
  int coefficient;
  std::vector<std::pair<const char*, Side>> derivs;
  int constant;
  std::vector<int> slots;
};

BracketSpec from_table(const char* name, const char* space_decl, std::size_t arity, int epsilon,
                       const std::vector<TermText>& table) {
  auto space = GradedSpace::parse(space_decl);
  std::vector<BracketTerm> terms;
  for (const auto& t : table) {
    BracketTerm term;
    term.coefficient = t.coefficient;
    for (const auto& [coord, side] : t.derivs) term.derivs.push_back({space->index_of(coord), side});
    term.sign = SignRule{t.constant, t.slots};
    terms.push_back(std::move(term));
  }
  return BracketSpec(name, space, arity, epsilon, std::move(terms));
}

constexpr Side L = Side::Left;
constexpr Side R = Side::Right;

}  // namespace

BracketSpec load_spec(const json& doc) {
  if (!doc.is_object()) throw SpecError("bracket document must be a JSON object");
  const auto& name = field(doc, "name");
  if (!name.is_string()) throw SpecError("'name' must be a string");
  const auto& space_decl = field(doc, "space");
  if (!space_decl.is_string()) throw SpecError("'space' must be a string");
  auto space = GradedSpace::parse(space_decl.get<std::string>());
  const auto& arity_value = field(doc, "arity");
  if (!arity_value.is_number_integer() || arity_value.get<std::int64_t>() < 0) throw SpecError("'arity' must be a natural number");
  const auto arity = arity_value.get<std::size_t>();
  const int epsilon = bit_field(field(doc, "epsilon"), "'epsilon'");
  const auto& terms_value = field(doc, "terms");
  if (!terms_value.is_array()) throw SpecError("'terms' must be an array");

  std::vector<BracketTerm> terms;
  for (const auto& t : terms_value) {
    BracketTerm term;
    const auto& coeff = field(t, "coeff");
    if (!coeff.is_string()) throw SpecError("'coeff' must be a rational string");
    term.coefficient = parse_rational(coeff.get<std::string>());
    const auto& derivs = field(t, "derivs");
    if (!derivs.is_array()) throw SpecError("'derivs' must be an array");
    for (const auto& d : derivs) {
      const auto& coord = field(d, "coord");
      if (!coord.is_string()) throw SpecError("'coord' must be a string");
      const auto index = space->find(coord.get<std::string>());
      if (!index) throw SpecError("undeclared coordinate '" + coord.get<std::string>() + "'");
      const auto& side = field(d, "side");
      if (side != "L" && side != "R") throw SpecError("'side' must be \"L\" or \"R\"");
      term.derivs.push_back({*index, side == "L" ? Side::Left : Side::Right});
    }
    const auto& sign = field(t, "sign");
    term.sign.constant = bit_field(field(sign, "const"), "sign 'const'");
    const auto& slots = field(sign, "slots");
    if (!slots.is_array()) throw SpecError("sign 'slots' must be an array");
    for (const auto& s : slots) term.sign.slots.push_back(bit_field(s, "sign slot"));
    terms.push_back(std::move(term));
  }
  return BracketSpec(name.get<std::string>(), std::move(space), arity, epsilon, std::move(terms));
}

BracketSpec load_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open bracket file '" + path + "'");
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw SpecError("malformed JSON in '" + path + "': " + e.what());
  }
  return load_spec(doc);
}

json to_json(const BracketSpec& spec) {
  json terms = json::array();
  for (const auto& t : spec.terms()) {
    json derivs = json::array();
    for (const auto& d : t.derivs)
      derivs.push_back({{"coord", spec.space()->coord(d.coord).name}, {"side", to_string(d.side)}});
    terms.push_back({{"coeff", t.coefficient.get_str()},
                     {"derivs", derivs},
                     {"sign", {{"const", t.sign.constant}, {"slots", t.sign.slots}}}});
  }
  return {{"name", spec.name()},
          {"space", spec.space()->declaration()},
          {"arity", spec.arity()},
          {"epsilon", spec.epsilon()},
          {"terms", terms}};
}

BracketSpec builtin(std::string_view name) {
  if (name == "odd_r21") {
    // {f,g,h} on R^{2|1}, degree 1.
    return from_table("odd_r21", "x1:b,x2:b,th:f", 3, 1,
                      {
                          {+1, {{"x1", L}, {"th", R}, {"x2", L}}, 0, {0, 1, 0}},
                          {-1, {{"x2", L}, {"th", R}, {"x1", L}}, 0, {0, 1, 0}},
                          {+1, {{"th", R}, {"x1", L}, {"x2", L}}, 0, {0, 0, 0}},
                          {-1, {{"th", R}, {"x2", L}, {"x1", L}}, 0, {0, 0, 0}},
                          {+1, {{"x2", L}, {"x1", L}, {"th", R}}, 0, {0, 1, 1}},
                          {-1, {{"x1", L}, {"x2", L}, {"th", R}}, 0, {0, 1, 1}},
                      });
  }
  if (name == "even_r12") {
    // {f,g,h} on R^{1|2}, degree 0. The (-1)^{|g|+|h|} * -(-1)^{|h|}
    // prefactors of the last term in each group reduce to -(-1)^{|g|}.
    return from_table("even_r12", "x:b,th1:f,th2:f", 3, 0,
                      {
                          {+1, {{"x", L}, {"th1", R}, {"th2", R}}, 1, {0, 1, 0}},
                          {+1, {{"x", L}, {"th2", R}, {"th1", R}}, 1, {0, 1, 0}},
                          {+1, {{"th1", R}, {"x", L}, {"th2", R}}, 0, {0, 1, 1}},
                          {-1, {{"th1", R}, {"th2", R}, {"x", L}}, 0, {0, 1, 0}},
                          {+1, {{"th2", R}, {"x", L}, {"th1", R}}, 0, {0, 1, 1}},
                          {-1, {{"th2", R}, {"th1", R}, {"x", L}}, 0, {0, 1, 0}},
                      });
  }
  if (name == "antibracket_r11") {
    // {f,g} = (d_r f/dx)(d_l g/dxi) - (d_r f/dxi)(d_l g/dx)
    return from_table("antibracket_r11", "x:b,xi:f", 2, 1,
                      {
                          {+1, {{"x", R}, {"xi", L}}, 0, {0, 0}},
                          {-1, {{"xi", R}, {"x", L}}, 0, {0, 0}},
                      });
  }
  throw SpecError("unknown builtin bracket '" + std::string(name) + "'");
}

std::vector<std::string> builtin_names() { return {"odd_r21", "even_r12", "antibracket_r11"}; }

BracketSpec resolve_bracket(const std::string& name_or_path) {
  for (const auto& b : builtin_names())
    if (b == name_or_path) return builtin(b);
  if (!std::filesystem::exists(name_or_path))
    throw SpecError("'" + name_or_path + "' is neither a builtin bracket nor an existing file");
  return load_spec_file(name_or_path);
}

}  // namespace snb
