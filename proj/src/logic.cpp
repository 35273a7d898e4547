#include "plitho/logic.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace plitho {
namespace {

std::string cell(const Degree& d) {
  char buf[40];
  switch (d.kind()) {
    case DegreeKind::Fuzzy:
      std::snprintf(buf, sizeof buf, "%.2f", d.t());
      break;
    case DegreeKind::Intuitionistic:
      std::snprintf(buf, sizeof buf, "(%.2f, %.2f)", d.t(), d.f());
      break;
    case DegreeKind::Neutrosophic:
      std::snprintf(buf, sizeof buf, "(%.2f, %.2f, %.2f)", d.t(), d.i(),
                    d.f());
      break;
  }
  return buf;
}

std::string padded(std::string s, std::size_t width, bool right) {
  if (s.size() >= width) return s;
  const std::string fill(width - s.size(), ' ');
  return right ? fill + s : s + fill;
}

}  // namespace

Proposition conjoin(const Proposition& a, const Proposition& b,
                    NormPair pair) {
  return {"(" + a.text + " and " + b.text + ")",
          p_and(a.evaluation, b.evaluation, pair)};
}

Proposition disjoin(const Proposition& a, const Proposition& b,
                    NormPair pair) {
  return {"(" + a.text + " or " + b.text + ")",
          p_or(a.evaluation, b.evaluation, pair)};
}

Proposition negate(const Proposition& a, NegationForm form,
                   ComplementVariant variant) {
  return {"(not " + a.text + ")", p_not(a.evaluation, form, variant)};
}

Event conjoin(const Event& a, const Event& b, NormPair pair) {
  return {"(" + a.label + " and " + b.label + ")",
          p_and(a.evaluation, b.evaluation, pair)};
}

Event disjoin(const Event& a, const Event& b, NormPair pair) {
  return {"(" + a.label + " or " + b.label + ")",
          p_or(a.evaluation, b.evaluation, pair)};
}

Event negate(const Event& a, NegationForm form, ComplementVariant variant) {
  return {"(not " + a.label + ")", p_not(a.evaluation, form, variant)};
}

ProbabilitySpace::ProbabilitySpace(MultiAttributeSchema schema,
                                   std::vector<Event> events)
    : schema_(std::move(schema)), events_(std::move(events)) {
  if (events_.empty())
    throw std::invalid_argument("a probability space needs at least one "
                                "event");
  for (const Event& e : events_) {
    if (!(e.evaluation.schema() == schema_))
      throw std::invalid_argument("event '" + e.label +
                                  "' is appraised over a different schema");
    if (e.evaluation.kind() != events_.front().evaluation.kind())
      throw std::invalid_argument("events carry degrees of different kinds");
  }
}

std::string space_summary(const ProbabilitySpace& space) {
  const std::size_t n = space.schema().value_count();
  std::vector<std::string> headers(n);
  for (std::size_t i = 0; i < n; ++i)
    headers[i] =
        space.schema().attribute_name(i) + "." + space.schema().value_label(i);

  std::vector<std::size_t> widths(n);
  for (std::size_t i = 0; i < n; ++i) {
    widths[i] = headers[i].size();
    for (const Event& e : space.events())
      widths[i] = std::max(widths[i], cell(e.evaluation.degrees()[i]).size());
  }
  std::size_t label_width = 5;  // "event"
  for (const Event& e : space.events())
    label_width = std::max(label_width, e.label.size());

  std::string out = padded("event", label_width, false);
  for (std::size_t i = 0; i < n; ++i)
    out += "  " + padded(headers[i], widths[i], false);
  out += "\n";
  for (const Event& e : space.events()) {
    out += padded(e.label, label_width, false);
    for (std::size_t i = 0; i < n; ++i)
      out += "  " + padded(cell(e.evaluation.degrees()[i]), widths[i], true);
    out += "\n";
  }
  return out;
}

}  // namespace plitho
