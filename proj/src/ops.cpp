#include "plitho/ops.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace plitho {
namespace {

std::string join(const std::vector<std::string>& msgs) {
  std::string out;
  for (const auto& m : msgs) {
    if (!out.empty()) out += "; ";
    out += m;
  }
  return out;
}

MultiAttributeSchema wrap(AttributeSchema attr) {
  MultiAttributeSchema schema;
  schema.name = attr.name;
  schema.components.push_back(std::move(attr));
  return schema;
}

// Absorbs the few ulps of drift convex arithmetic can leave past an endpoint.
double unit(double v) { return UnitScalar::from_arithmetic(v).value(); }

void require_compatible(const Evaluation& a, const Evaluation& b) {
  if (!(a.schema() == b.schema()))
    throw std::invalid_argument("evaluations are over different schemas");
  if (a.kind() != b.kind())
    throw std::invalid_argument("evaluations carry degrees of different "
                                "kinds");
}

// Indeterminacy stays halfway between the conjunctive and disjunctive
// readings no matter which operation runs and no matter the contradiction.
double averaged_indeterminacy(double ia, double ib, NormPair pair) {
  return 0.5 * (pair.tnorm(ia, ib) + pair.tconorm(ia, ib));
}

Evaluation combine(const Evaluation& a, const Evaluation& b, BlendMode mode,
                   NormPair pair) {
  require_compatible(a, b);
  const BlendMode dual = mode == BlendMode::And ? BlendMode::Or
                                                : BlendMode::And;
  std::vector<Degree> out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double c = a.contradiction_at(i);
    const Degree& x = a.degrees()[i];
    const Degree& y = b.degrees()[i];
    switch (a.kind()) {
      case DegreeKind::Fuzzy:
        out.push_back(Degree::fuzzy(unit(blend(x.t(), y.t(), c, mode, pair))));
        break;
      case DegreeKind::Intuitionistic:
        out.push_back(Degree::intuitionistic(
            unit(blend(x.t(), y.t(), c, mode, pair)),
            unit(blend(x.f(), y.f(), c, dual, pair))));
        break;
      case DegreeKind::Neutrosophic:
        out.push_back(Degree::neutrosophic(
            unit(blend(x.t(), y.t(), c, mode, pair)),
            unit(averaged_indeterminacy(x.i(), y.i(), pair)),
            unit(blend(x.f(), y.f(), c, dual, pair))));
        break;
    }
  }
  return Evaluation(a.schema(), std::move(out));
}

Degree complemented(const Degree& d, ComplementVariant variant) {
  switch (d.kind()) {
    case DegreeKind::Fuzzy:
      return Degree::fuzzy(1.0 - d.t());
    case DegreeKind::Intuitionistic:
      // Flipping both components leaves the unit square but not the
      // triangle t + f <= 1, so it goes through the range-only path.
      return variant == ComplementVariant::Flip
                 ? detail::make_degree(2, 1.0 - d.t(), 0.0, 1.0 - d.f())
                 : Degree::intuitionistic(d.f(), d.t());
    case DegreeKind::Neutrosophic:
      switch (variant) {
        case ComplementVariant::Swap:
          return Degree::neutrosophic(d.f(), d.i(), d.t());
        case ComplementVariant::SwapFlipIndeterminacy:
          return Degree::neutrosophic(d.f(), 1.0 - d.i(), d.t());
        case ComplementVariant::Flip:
          return Degree::neutrosophic(1.0 - d.t(), d.i(), 1.0 - d.f());
      }
  }
  throw std::logic_error("unreachable");
}

struct AntiEntry {
  double contradiction;
  std::string label;
  Degree degree;
  bool coincides;
  std::size_t coincide_index;
};

// Replace every value of one component by its opposite and re-sort. Degrees
// travel with their values.
void negate_component(const AttributeSchema& comp,
                      const std::vector<Degree>& degrees, std::size_t offset,
                      AttributeSchema& out_comp,
                      std::vector<Degree>& out_degrees) {
  std::vector<AntiEntry> entries;
  entries.reserve(comp.size());
  std::vector<bool> taken(comp.size(), false);
  for (std::size_t i = 0; i < comp.size(); ++i) {
    RefinedValue rv = negate_value(comp, i);
    const bool coincides = rv.placement == RefinedValue::Placement::Coincides;
    if (coincides) {
      if (taken[rv.index])
        throw std::invalid_argument(
            "attribute '" + comp.name + "': opposites of two values land on " +
            "'" + comp.values[rv.index] + "'; their degrees would clash");
      taken[rv.index] = true;
    }
    entries.push_back({rv.contradiction, std::move(rv.label),
                       degrees[offset + i], coincides, rv.index});
  }
  std::stable_sort(entries.begin(), entries.end(),
                   [](const AntiEntry& a, const AntiEntry& b) {
                     return a.contradiction < b.contradiction;
                   });

  out_comp.name = comp.name;
  out_comp.dominant_index = 0;
  for (auto& e : entries) {
    out_comp.values.push_back(std::move(e.label));
    out_comp.contradictions.push_back(e.contradiction);
    out_degrees.push_back(e.degree);
  }
}

bool simple_leq_at(const Degree& a, const Degree& b) {
  switch (a.kind()) {
    case DegreeKind::Fuzzy:
      return a.t() <= b.t();
    case DegreeKind::Intuitionistic:
      return a.t() <= b.t() && a.f() >= b.f();
    case DegreeKind::Neutrosophic:
      return a.t() <= b.t() && a.i() >= b.i() && a.f() >= b.f();
  }
  throw std::logic_error("unreachable");
}

bool plithogenic_leq_at(const Degree& a, const Degree& b, double c) {
  const double w = 1.0 - c;
  switch (a.kind()) {
    case DegreeKind::Fuzzy:
      return c < 0.5 ? a.t() <= w * b.t() : a.t() >= w * b.t();
    case DegreeKind::Intuitionistic:
      return c < 0.5 ? a.t() <= w * b.t() && a.f() >= w * b.f()
                     : a.t() >= w * b.t() && a.f() <= w * b.f();
    case DegreeKind::Neutrosophic:
      // The attenuation is fixed at 1/2 on the indeterminacy; past the
      // conjunctive range the operands trade places.
      return c < 0.5
                 ? a.t() <= b.t() && a.i() >= 0.5 * b.i() && a.f() >= b.f()
                 : b.t() <= a.t() && b.i() >= 0.5 * a.i() && b.f() >= a.f();
  }
  throw std::logic_error("unreachable");
}

}  // namespace

Evaluation::Evaluation(MultiAttributeSchema schema, std::vector<Degree> degrees)
    : schema_(std::move(schema)), degrees_(std::move(degrees)) {
  const auto violations = validate(schema_);
  if (!violations.empty()) throw std::invalid_argument(join(violations));
  if (degrees_.size() != schema_.value_count())
    throw std::invalid_argument("need exactly one degree per attribute value");
  for (const Degree& d : degrees_)
    if (d.kind() != degrees_.front().kind())
      throw std::invalid_argument("degrees of mixed kinds");
}

Evaluation::Evaluation(AttributeSchema schema, std::vector<Degree> degrees)
    : Evaluation(wrap(std::move(schema)), std::move(degrees)) {}

Evaluation Evaluation::fuzzy(MultiAttributeSchema schema,
                             std::vector<double> t) {
  std::vector<Degree> d;
  d.reserve(t.size());
  for (double v : t) d.push_back(Degree::fuzzy(v));
  return Evaluation(std::move(schema), std::move(d));
}

Evaluation Evaluation::fuzzy(AttributeSchema schema, std::vector<double> t) {
  return fuzzy(wrap(std::move(schema)), std::move(t));
}

Evaluation Evaluation::intuitionistic(
    MultiAttributeSchema schema, std::vector<std::pair<double, double>> tf) {
  std::vector<Degree> d;
  d.reserve(tf.size());
  for (auto [t, f] : tf) d.push_back(Degree::intuitionistic(t, f));
  return Evaluation(std::move(schema), std::move(d));
}

Evaluation Evaluation::intuitionistic(
    AttributeSchema schema, std::vector<std::pair<double, double>> tf) {
  return intuitionistic(wrap(std::move(schema)), std::move(tf));
}

Evaluation Evaluation::neutrosophic(MultiAttributeSchema schema,
                                    std::vector<std::array<double, 3>> tif) {
  std::vector<Degree> d;
  d.reserve(tif.size());
  for (auto [t, i, f] : tif) d.push_back(Degree::neutrosophic(t, i, f));
  return Evaluation(std::move(schema), std::move(d));
}

Evaluation Evaluation::neutrosophic(AttributeSchema schema,
                                    std::vector<std::array<double, 3>> tif) {
  return neutrosophic(wrap(std::move(schema)), std::move(tif));
}

Evaluation p_and(const Evaluation& a, const Evaluation& b, NormPair pair) {
  return combine(a, b, BlendMode::And, pair);
}

Evaluation p_or(const Evaluation& a, const Evaluation& b, NormPair pair) {
  return combine(a, b, BlendMode::Or, pair);
}

Evaluation p_not(const Evaluation& a, NegationForm form,
                 ComplementVariant variant) {
  switch (form) {
    case NegationForm::DegreeComplement: {
      std::vector<Degree> out;
      out.reserve(a.size());
      for (const Degree& d : a.degrees())
        out.push_back(complemented(d, variant));
      return Evaluation(a.schema(), std::move(out));
    }
    case NegationForm::Reverse: {
      std::vector<Degree> out;
      out.reserve(a.size());
      std::size_t offset = 0;
      for (const auto& comp : a.schema().components) {
        if (!comp.sorted_by_contradiction())
          throw std::invalid_argument("attribute '" + comp.name +
                                      "' is not sorted by contradiction");
        for (std::size_t i = comp.size(); i-- > 0;)
          out.push_back(a.degrees()[offset + i]);
        offset += comp.size();
      }
      return Evaluation(a.schema(), std::move(out));
    }
    case NegationForm::AntiValue: {
      MultiAttributeSchema schema;
      schema.name = a.schema().name;
      std::vector<Degree> out;
      out.reserve(a.size());
      std::size_t offset = 0;
      for (const auto& comp : a.schema().components) {
        AttributeSchema negated;
        negate_component(comp, a.degrees(), offset, negated, out);
        schema.components.push_back(std::move(negated));
        offset += comp.size();
      }
      return Evaluation(std::move(schema), std::move(out));
    }
  }
  throw std::logic_error("unreachable");
}

bool p_leq(const Evaluation& a, const Evaluation& b, OrderStyle style) {
  require_compatible(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double c = a.contradiction_at(i);
    const Degree& x = a.degrees()[i];
    const Degree& y = b.degrees()[i];
    const bool ok = style == OrderStyle::Simple
                        ? (c < 0.5 ? simple_leq_at(x, y) : simple_leq_at(y, x))
                        : plithogenic_leq_at(x, y, c);
    if (!ok) return false;
  }
  return true;
}

bool p_eq(const Evaluation& a, const Evaluation& b, OrderStyle style) {
  return p_leq(a, b, style) && p_leq(b, a, style);
}

namespace {

void require_same_shape(const RefinedDegree& a, const RefinedDegree& b) {
  if (!a.same_shape(b))
    throw std::invalid_argument("refined degrees have different shapes");
}

std::vector<double> zip(const std::vector<double>& a,
                        const std::vector<double>& b, NormPair pair,
                        bool conjunctive) {
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] = conjunctive ? pair.tnorm(a[i], b[i]) : pair.tconorm(a[i], b[i]);
  return out;
}

std::vector<double> zip_avg(const std::vector<double>& a,
                            const std::vector<double>& b, NormPair pair) {
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] = averaged_indeterminacy(a[i], b[i], pair);
  return out;
}

}  // namespace

RefinedDegree refined_and(const RefinedDegree& a, const RefinedDegree& b,
                          NormPair pair) {
  require_same_shape(a, b);
  return detail::make_refined(static_cast<int>(a.kind()),
                              zip(a.t_parts(), b.t_parts(), pair, true),
                              zip_avg(a.i_parts(), b.i_parts(), pair),
                              zip(a.f_parts(), b.f_parts(), pair, false));
}

RefinedDegree refined_or(const RefinedDegree& a, const RefinedDegree& b,
                         NormPair pair) {
  require_same_shape(a, b);
  return detail::make_refined(static_cast<int>(a.kind()),
                              zip(a.t_parts(), b.t_parts(), pair, false),
                              zip_avg(a.i_parts(), b.i_parts(), pair),
                              zip(a.f_parts(), b.f_parts(), pair, true));
}

RefinedDegree refined_not(const RefinedDegree& a) {
  if (a.kind() == DegreeKind::Fuzzy)
    throw std::invalid_argument("purely truth-refined degrees have no "
                                "falsehood block to exchange");
  return detail::make_refined(static_cast<int>(a.kind()), a.f_parts(),
                              a.i_parts(), a.t_parts());
}

bool refined_leq(const RefinedDegree& a, const RefinedDegree& b,
                 OrderStyle style, double cv) {
  require_same_shape(a, b);
  if (!(cv >= 0.0 && cv <= 1.0))
    throw std::domain_error("contradiction degree outside [0, 1]");
  double w = 1.0;
  if (style == OrderStyle::Plithogenic) {
    if (cv >= 0.5)
      throw std::domain_error("attenuated refined inclusion is defined for "
                              "contradiction below one half");
    w = 1.0 - cv;
  }
  for (std::size_t i = 0; i < a.t_parts().size(); ++i)
    if (!(a.t_parts()[i] <= w * b.t_parts()[i])) return false;
  for (std::size_t i = 0; i < a.i_parts().size(); ++i)
    if (!(a.i_parts()[i] >= w * b.i_parts()[i])) return false;
  for (std::size_t i = 0; i < a.f_parts().size(); ++i)
    if (!(a.f_parts()[i] >= w * b.f_parts()[i])) return false;
  return true;
}

}  // namespace plitho
