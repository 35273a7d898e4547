#pragma once

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "plitho/blend.hpp"
#include "plitho/degree.hpp"
#include "plitho/schema.hpp"

namespace plitho {

// A subject's appurtenance degrees over every value of a schema, one degree
// per flat position, all of the same kind.
class Evaluation {
public:
  Evaluation(MultiAttributeSchema schema, std::vector<Degree> degrees);
  // Single attribute, wrapped into a one-component joint schema.
  Evaluation(AttributeSchema schema, std::vector<Degree> degrees);

  static Evaluation fuzzy(MultiAttributeSchema schema, std::vector<double> t);
  static Evaluation fuzzy(AttributeSchema schema, std::vector<double> t);
  static Evaluation intuitionistic(MultiAttributeSchema schema,
                                   std::vector<std::pair<double, double>> tf);
  static Evaluation intuitionistic(AttributeSchema schema,
                                   std::vector<std::pair<double, double>> tf);
  static Evaluation neutrosophic(MultiAttributeSchema schema,
                                 std::vector<std::array<double, 3>> tif);
  static Evaluation neutrosophic(AttributeSchema schema,
                                 std::vector<std::array<double, 3>> tif);

  const MultiAttributeSchema& schema() const { return schema_; }
  const std::vector<Degree>& degrees() const { return degrees_; }
  DegreeKind kind() const { return degrees_.front().kind(); }
  std::size_t size() const { return degrees_.size(); }
  double contradiction_at(std::size_t flat) const {
    return schema_.contradiction_at(flat);
  }

  friend bool operator==(const Evaluation& a, const Evaluation& b) {
    return a.schema_ == b.schema_ && a.degrees_ == b.degrees_;
  }

private:
  MultiAttributeSchema schema_;
  std::vector<Degree> degrees_;
};

// Conjunction and disjunction, value by value, each position weighted by its
// own contradiction degree. Truth blends conjunctively (resp. disjunctively),
// falsehood dually; indeterminacy averages the t-norm and t-conorm and is the
// same for both operations. Operands must share the schema and kind.
Evaluation p_and(const Evaluation& a, const Evaluation& b, NormPair pair = {});
Evaluation p_or(const Evaluation& a, const Evaluation& b, NormPair pair = {});

enum class NegationForm {
  // Each value is replaced by its opposite (contradiction 1 - c), keeping its
  // degree; the result is re-sorted. Needs every component to reach
  // contradiction 1 so the negated schema has a dominant value.
  AntiValue,
  // Degrees reversed against the unchanged value list of each component.
  Reverse,
  // Values unchanged, each degree complemented.
  DegreeComplement,
};

// How DegreeComplement treats the components.
enum class ComplementVariant {
  // Exchange truth and falsehood; indeterminacy untouched. For fuzzy degrees
  // every variant is 1 - t.
  Swap,
  // Exchange truth and falsehood and flip indeterminacy to 1 - i. Same as
  // Swap below kind 3.
  SwapFlipIndeterminacy,
  // Flip truth and falsehood to their complements; indeterminacy untouched.
  Flip,
};

Evaluation p_not(const Evaluation& a, NegationForm form,
                 ComplementVariant variant = ComplementVariant::Swap);

enum class OrderStyle {
  // Componentwise comparison; at contradiction >= 1/2 the direction reverses.
  Simple,
  // Right-hand side attenuated by (1 - c) before comparing (truth and
  // falsehood only; indeterminacy uses a fixed 1/2 factor); at contradiction
  // >= 1/2 the roles of the operands reverse.
  Plithogenic,
};

bool p_leq(const Evaluation& a, const Evaluation& b,
           OrderStyle style = OrderStyle::Simple);
bool p_eq(const Evaluation& a, const Evaluation& b,
          OrderStyle style = OrderStyle::Simple);

// Subcomponent-wise operations on refined degrees. Truth parts combine with
// the t-norm under conjunction, falsehood parts with the t-conorm,
// indeterminacy parts with the average of both; disjunction is the dual.
RefinedDegree refined_and(const RefinedDegree& a, const RefinedDegree& b,
                          NormPair pair = {});
RefinedDegree refined_or(const RefinedDegree& a, const RefinedDegree& b,
                         NormPair pair = {});
// Swaps the truth and falsehood blocks (an involution). Undefined for purely
// truth-refined degrees, which have no falsehood block to swap with.
RefinedDegree refined_not(const RefinedDegree& a);
// Subcomponent-wise inclusion. The plithogenic style attenuates the dominant
// side by (1 - cv), where cv is the contradiction of the attribute value the
// degrees refine (zero when not supplied); it is defined for cv < 1/2.
bool refined_leq(const RefinedDegree& a, const RefinedDegree& b,
                 OrderStyle style = OrderStyle::Simple, double cv = 0.0);

}  // namespace plitho
