#include "snb/graded_algebra.hpp"

#include <set>

#include "snb/errors.hpp"

namespace snb {

namespace {

bool valid_identifier(std::string_view name) {
  if (name.empty()) return false;
  auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (!alpha(name.front())) return false;
  for (char c : name)
    if (!alpha(c) && !digit(c)) return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

const char* to_string(Parity p) {
  switch (p) {
    case Parity::Even: return "Even";
    case Parity::Odd: return "Odd";
    case Parity::Mixed: return "Mixed";
    case Parity::ZeroAny: return "ZeroAny";
  }
  return "?";
}

const char* to_string(Side s) { return s == Side::Left ? "L" : "R"; }

int parity_bit(Parity p, int zero_as) {
  switch (p) {
    case Parity::Even: return 0;
    case Parity::Odd: return 1;
    case Parity::ZeroAny: return zero_as;
    case Parity::Mixed: break;
  }
  throw ParityError("value of mixed parity where a homogeneous one is required");
}

GradedSpace::GradedSpace(std::vector<Coordinate> coords) : coords_(std::move(coords)) {
  std::set<std::string> seen;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    const auto& c = coords_[i];
    if (!valid_identifier(c.name)) throw SpecError("invalid coordinate name '" + c.name + "'");
    if (c.parity != 0 && c.parity != 1) throw SpecError("coordinate parity must be 0 or 1");
    if (!seen.insert(c.name).second) throw SpecError("duplicate coordinate '" + c.name + "'");
    if (c.parity == 0) {
      slot_.push_back(bosonic_.size());
      bosonic_.push_back(i);
    } else {
      slot_.push_back(fermionic_.size());
      fermionic_.push_back(i);
    }
  }
  if (fermionic_.size() > 64) throw SpecError("at most 64 fermionic coordinates are supported");
}

std::shared_ptr<const GradedSpace> GradedSpace::parse(std::string_view declaration) {
  std::vector<Coordinate> coords;
  std::size_t start = 0;
  while (start <= declaration.size()) {
    auto end = declaration.find(',', start);
    if (end == std::string_view::npos) end = declaration.size();
    auto entry = trim(declaration.substr(start, end - start));
    auto colon = entry.find(':');
    if (colon == std::string_view::npos)
      throw SpecError("space entry '" + std::string(entry) + "' is not of the form name:b or name:f");
    auto name = trim(entry.substr(0, colon));
    auto kind = trim(entry.substr(colon + 1));
    int parity;
    if (kind == "b") {
      parity = 0;
    } else if (kind == "f") {
      parity = 1;
    } else {
      throw SpecError("space entry '" + std::string(entry) + "' has kind other than b or f");
    }
    coords.push_back({std::string(name), parity});
    start = end + 1;
  }
  return std::make_shared<const GradedSpace>(std::move(coords));
}

std::optional<std::size_t> GradedSpace::find(std::string_view name) const {
  for (std::size_t i = 0; i < coords_.size(); ++i)
    if (coords_[i].name == name) return i;
  return std::nullopt;
}

std::size_t GradedSpace::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw UnknownCoordinate(std::string(name));
}

std::string GradedSpace::declaration() const {
  std::string out;
  for (const auto& c : coords_) {
    if (!out.empty()) out += ',';
    out += c.name;
    out += c.parity ? ":f" : ":b";
  }
  return out;
}

bool same_space(const SpacePtr& a, const SpacePtr& b) {
  return a == b || (a && b && *a == *b);
}

}  // namespace snb
