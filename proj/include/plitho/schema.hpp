#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace plitho {

// One attribute: its discrete values and, for each value, the contradiction
// degree against the dominant value. Fields are plain data so that malformed
// input can be materialized and then reported by validate(); operators check
// what they rely on.
struct AttributeSchema {
  std::string name;
  std::vector<std::string> values;
  std::size_t dominant_index = 0;
  std::vector<double> contradictions;  // one per value, c[dominant] == 0

  std::size_t size() const { return values.size(); }

  bool sorted_by_contradiction() const;

  friend bool operator==(const AttributeSchema&,
                         const AttributeSchema&) = default;
};

// Returns human-readable violations; empty means well formed. Checks: at least
// one value, unique value labels, dominant index in range, one contradiction
// per value, every contradiction in [0, 1], and zero contradiction at the
// dominant value.
std::vector<std::string> validate(const AttributeSchema& schema);

// Full pairwise contradiction table c(v_i, v_j), row-major.
struct ContradictionMatrix {
  std::size_t n = 0;
  std::vector<double> cells;

  double at(std::size_t i, std::size_t j) const { return cells[i * n + j]; }
  double& at(std::size_t i, std::size_t j) { return cells[i * n + j]; }

  friend bool operator==(const ContradictionMatrix&,
                         const ContradictionMatrix&) = default;
};

// Violations: wrong cell count, entries outside [0, 1], nonzero diagonal,
// asymmetric pairs.
std::vector<std::string> validate(const ContradictionMatrix& m);

// Several attributes evaluated jointly. Degree vectors over such a schema are
// flat: the components' value lists concatenated in order.
struct MultiAttributeSchema {
  std::string name;
  std::vector<AttributeSchema> components;

  // Number of flat degree positions (sum of component sizes).
  std::size_t value_count() const;
  // Number of joint value tuples (product of component sizes).
  std::size_t tuple_cardinality() const;

  // Maps a flat position to (component index, index within the component).
  std::pair<std::size_t, std::size_t> locate(std::size_t flat) const;
  double contradiction_at(std::size_t flat) const;
  const std::string& value_label(std::size_t flat) const;
  const std::string& attribute_name(std::size_t flat) const;

  friend bool operator==(const MultiAttributeSchema&,
                         const MultiAttributeSchema&) = default;
};

// Component-level checks plus: at least one component, unique attribute names.
std::vector<std::string> validate(const MultiAttributeSchema& schema);

// The m component schemas of a joint schema.
inline const std::vector<AttributeSchema>& split(
    const MultiAttributeSchema& schema) {
  return schema.components;
}

// Evenly spaced contradictions (i - 1) / (n - 1) for n values; a single value
// gets 0.
std::vector<double> default_contradictions(std::size_t n);

enum class CanonicalKind { Crisp, Fuzzy, IntuitionisticFuzzy, Neutrosophic };

// The single-attribute schema under which plithogenic aggregation collapses to
// the named classical logic.
AttributeSchema canonical_schema(CanonicalKind kind);

// Number of values whose contradiction is below one half, i.e. the boundary
// between conjunctive and disjunctive treatment. Requires a sorted schema.
std::size_t split_index(const AttributeSchema& schema);

// Where the opposite of an attribute value lands on the contradiction axis.
struct RefinedValue {
  enum class Placement { Coincides, Between };

  std::string label;
  double contradiction = 0.0;
  Placement placement = Placement::Coincides;
  // Coincides: index of the matching value. Between: index k with
  // c[k] < contradiction < c[k + 1].
  std::size_t index = 0;
};

// Opposite of values[index]: contradiction flips to 1 - c. If that coincides
// with an existing value's contradiction (within 1e-12) the result is that
// value, otherwise a new "anti(...)" value placed between its neighbours.
// Requires a valid sorted schema whose span covers the flipped contradiction.
RefinedValue negate_value(const AttributeSchema& schema, std::size_t index);

}  // namespace plitho
