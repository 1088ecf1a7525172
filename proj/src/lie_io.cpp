#include <filesystem>
#include <fstream>
#include <sstream>

#include "snb/errors.hpp"
#include "snb/lie_construction.hpp"
#include "snb/rational_text.hpp"

namespace snb {

namespace {

using json = nlohmann::json;

std::vector<std::string> tokens(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

/// "n1 .. nk p/q" -> basis indices and value.
std::pair<std::vector<std::size_t>, Rational> entry(const json& value, const LieSuperAlgebra& shape,
                                                    std::size_t nindices, const std::string& what) {
  if (!value.is_string()) throw SpecError(what + " entries must be strings");
  const auto parts = tokens(value.get<std::string>());
  if (parts.size() != nindices + 1)
    throw SpecError(what + " entry '" + value.get<std::string>() + "' needs " + std::to_string(nindices) +
                    " basis names and a coefficient");
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < nindices; ++i) idx.push_back(shape.index_of(parts[i]));
  return {std::move(idx), parse_rational(parts.back())};
}

LieSuperAlgebra::Table read_table(const json& list, const LieSuperAlgebra& shape, const std::string& what) {
  if (!list.is_array()) throw SpecError("'" + what + "' must be an array");
  const std::size_t d = shape.dim();
  LieSuperAlgebra::Table table(d * d * d, Rational(0));
  std::vector<bool> seen(table.size(), false);
  for (const auto& item : list) {
    auto [idx, value] = entry(item, shape, 3, what);
    const std::size_t at = (idx[0] * d + idx[1]) * d + idx[2];
    if (seen[at]) throw SpecError("duplicate " + what + " entry '" + item.get<std::string>() + "'");
    seen[at] = true;
    table[at] = value;
  }
  return table;
}

std::string algebra_text_entry(const LieSuperAlgebra& a, std::size_t i, std::size_t j, std::size_t k,
                               const Rational& c) {
  return a.basis(i).name + " " + a.basis(j).name + " " + a.basis(k).name + " " + c.get_str();
}

json example_document(const std::string& name) {
  auto basis = [](std::initializer_list<std::pair<const char*, int>> items) {
    json out = json::array();
    for (const auto& [n, p] : items) out.push_back({{"name", n}, {"parity", p}});
    return out;
  };
  if (name == "abelian")
    return {{"name", "abelian"}, {"epsilon", 0}, {"basis", basis({{"a1", 0}, {"a2", 0}, {"a3", 0}})},
            {"brackets", json::array()}};
  if (name == "so3")
    return {{"name", "so3"},
            {"epsilon", 0},
            {"basis", basis({{"e1", 0}, {"e2", 0}, {"e3", 0}})},
            {"brackets",
             {"e1 e2 e3 1", "e2 e1 e3 -1", "e2 e3 e1 1", "e3 e2 e1 -1", "e3 e1 e2 1", "e1 e3 e2 -1"}}};
  if (name == "heisenberg")
    return {{"name", "heisenberg"},
            {"epsilon", 0},
            {"basis", basis({{"x", 0}, {"y", 0}, {"c", 0}})},
            {"brackets", {"x y c 1", "y x c -1"}}};
  if (name == "super21")
    return {{"name", "super21"},
            {"epsilon", 0},
            {"basis", basis({{"h", 0}, {"z", 0}, {"q", 1}})},
            {"brackets", {"h q q 1", "q h q -1", "h z z 2", "z h z -2", "q q z 1"}}};
  if (name == "gl2") {
    // E_ij E_kl = delta_jk E_il; the bracket is the commutator.
    const char* names[2][2] = {{"E11", "E12"}, {"E21", "E22"}};
    json products = json::array(), brackets = json::array();
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k)
          for (int l = 0; l < 2; ++l) {
            const std::string pair = std::string(names[i][j]) + " " + names[k][l] + " ";
            if (j == k) products.push_back(pair + names[i][l] + " 1");
            if (j == k && l == i && (i != k || j != l)) {
              // [E_ij, E_ji] = E_ii - E_jj
              brackets.push_back(pair + names[i][i] + " 1");
              brackets.push_back(pair + names[j][j] + " -1");
            } else if (j == k && l != i) {
              brackets.push_back(pair + names[i][l] + " 1");
            } else if (l == i && j != k) {
              brackets.push_back(pair + names[k][j] + " -1");
            }
          }
    return {{"name", "gl2"},
            {"epsilon", 0},
            {"basis", basis({{"E11", 0}, {"E12", 0}, {"E21", 0}, {"E22", 0}})},
            {"brackets", brackets},
            {"products", products}};
  }
  throw SpecError("unknown example algebra '" + name + "'");
}

}  // namespace

AlgebraPtr load_algebra(const json& doc) {
  if (!doc.is_object()) throw SpecError("algebra document must be a JSON object");
  if (!doc.contains("basis") || !doc["basis"].is_array()) throw SpecError("missing array 'basis'");
  std::vector<BasisVector> basis;
  for (const auto& b : doc["basis"]) {
    if (!b.is_object() || !b.contains("name") || !b["name"].is_string())
      throw SpecError("basis entries need a string 'name'");
    if (!b.contains("parity") || !b["parity"].is_number_integer()) throw SpecError("basis entries need a 'parity'");
    basis.push_back({b["name"].get<std::string>(), b["parity"].get<int>()});
  }
  if (!doc.contains("epsilon") || !doc["epsilon"].is_number_integer()) throw SpecError("missing integer 'epsilon'");
  const int eps = doc["epsilon"].get<int>();
  const std::string name = doc.contains("name") && doc["name"].is_string() ? doc["name"].get<std::string>() : "algebra";

  // A bracket-free instance resolves names while the tables are read.
  const std::size_t d = basis.size();
  const LieSuperAlgebra shape(name, basis, eps, LieSuperAlgebra::Table(d * d * d, Rational(0)));
  auto brackets = read_table(doc.contains("brackets") ? doc["brackets"] : json::array(), shape, "brackets");
  std::optional<LieSuperAlgebra::Table> products;
  if (doc.contains("products")) products = read_table(doc["products"], shape, "products");
  return std::make_shared<const LieSuperAlgebra>(name, std::move(basis), eps, std::move(brackets),
                                                 std::move(products));
}

static json read_json_file(const std::string& path, const char* what) {
  std::ifstream in(path);
  if (!in) throw SpecError(std::string("cannot open ") + what + " file '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw SpecError("malformed JSON in '" + path + "': " + e.what());
  }
}

AlgebraPtr load_algebra_file(const std::string& path) { return load_algebra(read_json_file(path, "algebra")); }

json to_json(const LieSuperAlgebra& a) {
  json basis = json::array(), brackets = json::array();
  for (const auto& b : a.basis()) basis.push_back({{"name", b.name}, {"parity", b.parity}});
  const std::size_t d = a.dim();
  json products = json::array();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        if (a.bracket_constant(i, j, k) != 0)
          brackets.push_back(algebra_text_entry(a, i, j, k, a.bracket_constant(i, j, k)));
        if (a.has_product() && a.product_constant(i, j, k) != 0)
          products.push_back(algebra_text_entry(a, i, j, k, a.product_constant(i, j, k)));
      }
  json out = {{"name", a.name()}, {"epsilon", a.epsilon()}, {"basis", basis}, {"brackets", brackets}};
  if (a.has_product()) out["products"] = products;
  return out;
}

TauMap load_tau(const json& doc, AlgebraPtr algebra) {
  if (!doc.is_object()) throw SpecError("tau document must be a JSON object");
  if (doc.contains("kind")) {
    if (!doc["kind"].is_string()) throw SpecError("'kind' must be a string");
    const auto kind = doc["kind"].get<std::string>();
    if (kind == "bracket") return TauMap::lie_bracket(std::move(algebra));
    if (kind != "components") throw SpecError("unknown tau kind '" + kind + "'");
  }
  if (!doc.contains("arity") || !doc["arity"].is_number_integer() || doc["arity"].get<long long>() < 1)
    throw SpecError("'arity' must be a positive integer");
  const auto m = doc["arity"].get<std::size_t>();
  if (!doc.contains("components") || !doc["components"].is_array()) throw SpecError("missing array 'components'");
  TauMap::Components comps;
  const std::size_t d = algebra->dim();
  for (const auto& item : doc["components"]) {
    auto [idx, value] = entry(item, *algebra, m + 1, "components");
    const std::size_t k = idx.back();
    idx.pop_back();
    auto& v = comps.try_emplace(idx, d, Rational(0)).first->second;
    if (v[k] != 0) throw SpecError("duplicate tau entry '" + item.get<std::string>() + "'");
    v[k] = value;
  }
  return TauMap(std::move(algebra), m, std::move(comps));
}

TauMap resolve_tau(const std::string& keyword_or_path, AlgebraPtr algebra) {
  if (keyword_or_path == "bracket") return TauMap::lie_bracket(std::move(algebra));
  return load_tau(read_json_file(keyword_or_path, "tau"), std::move(algebra));
}

AlgebraPtr example_algebra(const std::string& name) { return load_algebra(example_document(name)); }

std::vector<std::string> example_algebra_names() { return {"abelian", "so3", "heisenberg", "super21", "gl2"}; }

TauMap example_tau(const std::string& name) {
  auto alg = example_algebra(name);
  if (name == "abelian")
    return load_tau({{"arity", 2}, {"components", {"a1 a2 a3 1", "a2 a1 a3 -1"}}}, alg);
  if (name == "super21")
    return load_tau({{"arity", 2}, {"components", {"h z z 1", "z h z -1", "h q q 1", "q h q -1"}}}, alg);
  return TauMap::lie_bracket(alg);
}

}  // namespace snb
