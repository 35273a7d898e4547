#include "plitho/schema.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace plitho {
namespace {

constexpr double kCoincidenceTol = 1e-12;

std::string quoted(const std::string& s) { return "'" + s + "'"; }

}  // namespace

bool AttributeSchema::sorted_by_contradiction() const {
  return std::is_sorted(contradictions.begin(), contradictions.end());
}

std::vector<std::string> validate(const AttributeSchema& schema) {
  std::vector<std::string> out;
  const std::string where = "attribute " + quoted(schema.name) + ": ";
  if (schema.values.empty()) {
    out.push_back(where + "no values");
    return out;
  }
  std::unordered_set<std::string> seen;
  for (const auto& v : schema.values)
    if (!seen.insert(v).second)
      out.push_back(where + "duplicate value " + quoted(v));
  if (schema.dominant_index >= schema.values.size())
    out.push_back(where + "dominant index out of range");
  if (schema.contradictions.size() != schema.values.size()) {
    out.push_back(where + "need one contradiction degree per value");
    return out;
  }
  for (std::size_t i = 0; i < schema.contradictions.size(); ++i)
    if (!(schema.contradictions[i] >= 0.0 && schema.contradictions[i] <= 1.0))
      out.push_back(where + "contradiction for " + quoted(schema.values[i]) +
                    " outside [0, 1]");
  if (schema.dominant_index < schema.contradictions.size() &&
      schema.contradictions[schema.dominant_index] != 0.0)
    out.push_back(where + "dominant value " +
                  quoted(schema.values[schema.dominant_index]) +
                  " must have contradiction 0");
  return out;
}

std::vector<std::string> validate(const ContradictionMatrix& m) {
  std::vector<std::string> out;
  if (m.cells.size() != m.n * m.n) {
    out.push_back("contradiction matrix: cell count does not match order");
    return out;
  }
  for (std::size_t i = 0; i < m.n; ++i) {
    for (std::size_t j = 0; j < m.n; ++j) {
      const double v = m.at(i, j);
      if (!(v >= 0.0 && v <= 1.0))
        out.push_back("contradiction matrix: entry (" + std::to_string(i) +
                      ", " + std::to_string(j) + ") outside [0, 1]");
    }
    if (m.at(i, i) != 0.0)
      out.push_back("contradiction matrix: nonzero self-contradiction at " +
                    std::to_string(i));
    for (std::size_t j = i + 1; j < m.n; ++j)
      if (m.at(i, j) != m.at(j, i))
        out.push_back("contradiction matrix: asymmetric pair (" +
                      std::to_string(i) + ", " + std::to_string(j) + ")");
  }
  return out;
}

std::size_t MultiAttributeSchema::value_count() const {
  std::size_t n = 0;
  for (const auto& c : components) n += c.size();
  return n;
}

std::size_t MultiAttributeSchema::tuple_cardinality() const {
  std::size_t n = 1;
  for (const auto& c : components) n *= c.size();
  return n;
}

std::pair<std::size_t, std::size_t> MultiAttributeSchema::locate(
    std::size_t flat) const {
  for (std::size_t k = 0; k < components.size(); ++k) {
    if (flat < components[k].size()) return {k, flat};
    flat -= components[k].size();
  }
  throw std::out_of_range("flat value position past end of schema");
}

double MultiAttributeSchema::contradiction_at(std::size_t flat) const {
  const auto [k, j] = locate(flat);
  return components[k].contradictions[j];
}

const std::string& MultiAttributeSchema::value_label(std::size_t flat) const {
  const auto [k, j] = locate(flat);
  return components[k].values[j];
}

const std::string& MultiAttributeSchema::attribute_name(
    std::size_t flat) const {
  return components[locate(flat).first].name;
}

std::vector<std::string> validate(const MultiAttributeSchema& schema) {
  std::vector<std::string> out;
  const std::string where = "schema " + quoted(schema.name) + ": ";
  if (schema.components.empty()) {
    out.push_back(where + "no attributes");
    return out;
  }
  std::unordered_set<std::string> seen;
  for (const auto& c : schema.components)
    if (!seen.insert(c.name).second)
      out.push_back(where + "duplicate attribute " + quoted(c.name));
  for (const auto& c : schema.components)
    for (auto& msg : validate(c)) out.push_back(where + msg);
  return out;
}

std::vector<double> default_contradictions(std::size_t n) {
  if (n == 0)
    throw std::invalid_argument("no values to spread contradictions over");
  std::vector<double> c(n, 0.0);
  for (std::size_t i = 1; i < n; ++i)
    c[i] = static_cast<double>(i) / static_cast<double>(n - 1);
  return c;
}

AttributeSchema canonical_schema(CanonicalKind kind) {
  switch (kind) {
    case CanonicalKind::Crisp:
      return {"crisp", {"membership", "nonmembership"}, 0, {0.0, 1.0}};
    case CanonicalKind::Fuzzy:
      return {"fuzzy", {"membership"}, 0, {0.0}};
    case CanonicalKind::IntuitionisticFuzzy:
      return {"intuitionistic", {"membership", "nonmembership"}, 0, {0.0, 1.0}};
    case CanonicalKind::Neutrosophic:
      return {"neutrosophic",
              {"membership", "indeterminacy", "nonmembership"},
              0,
              {0.0, 0.5, 1.0}};
  }
  throw std::invalid_argument("unknown canonical schema kind");
}

std::size_t split_index(const AttributeSchema& schema) {
  if (!schema.sorted_by_contradiction())
    throw std::invalid_argument("attribute " + quoted(schema.name) +
                                " is not sorted by contradiction");
  std::size_t n = 0;
  for (double c : schema.contradictions)
    if (c < 0.5) ++n;
  return n;
}

RefinedValue negate_value(const AttributeSchema& schema, std::size_t index) {
  if (!validate(schema).empty())
    throw std::invalid_argument("attribute " + quoted(schema.name) +
                                " is not well formed");
  if (!schema.sorted_by_contradiction())
    throw std::invalid_argument("attribute " + quoted(schema.name) +
                                " is not sorted by contradiction");
  if (index >= schema.size())
    throw std::out_of_range("value index past end of attribute");

  const double target = 1.0 - schema.contradictions[index];
  for (std::size_t k = 0; k < schema.size(); ++k)
    if (std::fabs(schema.contradictions[k] - target) <= kCoincidenceTol)
      return {schema.values[k], target, RefinedValue::Placement::Coincides, k};

  if (target > schema.contradictions.back())
    throw std::invalid_argument(
        "opposite of " + quoted(schema.values[index]) +
        " lies past the attribute's last contradiction degree; refine the "
        "attribute with a value at contradiction " + std::to_string(target) +
        " or beyond");
  std::size_t k = 0;
  while (schema.contradictions[k + 1] < target) ++k;
  return {"anti(" + schema.values[index] + ")", target,
          RefinedValue::Placement::Between, k};
}

}  // namespace plitho
