#pragma once

#include <string>
#include <vector>

#include "plitho/ops.hpp"

namespace plitho {

// A statement whose truth is appraised value by value over a schema.
struct Proposition {
  std::string text;
  Evaluation evaluation;
};

// An outcome whose chance is appraised value by value over a schema. Chances
// are degrees, not a distribution: they need not sum to 1.
struct Event {
  std::string label;
  Evaluation evaluation;
};

Proposition conjoin(const Proposition& a, const Proposition& b,
                    NormPair pair = {});
Proposition disjoin(const Proposition& a, const Proposition& b,
                    NormPair pair = {});
Proposition negate(const Proposition& a, NegationForm form,
                   ComplementVariant variant = ComplementVariant::Swap);

Event conjoin(const Event& a, const Event& b, NormPair pair = {});
Event disjoin(const Event& a, const Event& b, NormPair pair = {});
Event negate(const Event& a, NegationForm form,
             ComplementVariant variant = ComplementVariant::Swap);

// One or more events appraised over a shared schema with a shared kind.
class ProbabilitySpace {
public:
  ProbabilitySpace(MultiAttributeSchema schema, std::vector<Event> events);

  const MultiAttributeSchema& schema() const { return schema_; }
  const std::vector<Event>& events() const { return events_; }

private:
  MultiAttributeSchema schema_;
  std::vector<Event> events_;
};

// Deterministic plain-text table: one row per event, one column per attribute
// value, degrees rendered to two decimals.
std::string space_summary(const ProbabilitySpace& space);

}  // namespace plitho
