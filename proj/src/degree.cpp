#include "plitho/degree.hpp"

#include <string>

namespace plitho {
namespace {

// Sums drift by a few ulps when degrees come out of arithmetic; the structural
// constraints should not reject that.
constexpr double kSumSlack = 1e-12;

void check_unit(double v, const char* what) {
  if (!(v >= 0.0 && v <= 1.0))
    throw std::domain_error(std::string(what) + " outside [0, 1]");
}

double block_sum(const std::vector<double>& parts, const char* what) {
  double sum = 0.0;
  for (double v : parts) {
    check_unit(v, what);
    sum += v;
  }
  return sum;
}

}  // namespace

Degree Degree::fuzzy(double t) {
  check_unit(t, "truth degree");
  return Degree(DegreeKind::Fuzzy, t, 0.0, 0.0);
}

Degree Degree::intuitionistic(double t, double f) {
  check_unit(t, "truth degree");
  check_unit(f, "falsehood degree");
  if (t + f > 1.0 + kSumSlack)
    throw std::domain_error("truth plus falsehood exceeds 1");
  return Degree(DegreeKind::Intuitionistic, t, 0.0, f);
}

Degree Degree::neutrosophic(double t, double i, double f) {
  check_unit(t, "truth degree");
  check_unit(i, "indeterminacy degree");
  check_unit(f, "falsehood degree");
  return Degree(DegreeKind::Neutrosophic, t, i, f);
}

double Degree::i() const {
  if (kind_ != DegreeKind::Neutrosophic)
    throw std::logic_error("degree has no indeterminacy component");
  return i_;
}

double Degree::f() const {
  if (kind_ == DegreeKind::Fuzzy)
    throw std::logic_error("degree has no falsehood component");
  return f_;
}

double Degree::component(std::size_t pos) const {
  if (pos >= component_count(kind_))
    throw std::logic_error("degree component out of range");
  if (pos == 0) return t_;
  if (kind_ == DegreeKind::Neutrosophic && pos == 1) return i_;
  return f_;
}

RefinedDegree::RefinedDegree(DegreeKind kind, std::vector<double> t,
                             std::vector<double> i, std::vector<double> f)
    : kind_(kind), t_(std::move(t)), i_(std::move(i)), f_(std::move(f)) {
  block_sum(t_, "truth subcomponent");
  block_sum(i_, "indeterminacy subcomponent");
  block_sum(f_, "falsehood subcomponent");
}

RefinedDegree RefinedDegree::fuzzy(std::vector<double> t_parts) {
  if (t_parts.size() < 2)
    throw std::invalid_argument("refined fuzzy degree needs at least two "
                                "truth subcomponents");
  RefinedDegree d(DegreeKind::Fuzzy, std::move(t_parts), {}, {});
  if (block_sum(d.t_, "truth subcomponent") > 1.0 + kSumSlack)
    throw std::domain_error("truth subcomponents sum past 1");
  return d;
}

RefinedDegree RefinedDegree::intuitionistic(std::vector<double> t_parts,
                                            std::vector<double> f_parts) {
  if (t_parts.empty() || f_parts.empty() ||
      t_parts.size() + f_parts.size() < 3)
    throw std::invalid_argument("refined intuitionistic degree needs nonempty "
                                "blocks with at least three subcomponents");
  RefinedDegree d(DegreeKind::Intuitionistic, std::move(t_parts), {},
                  std::move(f_parts));
  if (block_sum(d.t_, "truth subcomponent") +
          block_sum(d.f_, "falsehood subcomponent") >
      1.0 + kSumSlack)
    throw std::domain_error("subcomponents sum past 1");
  return d;
}

RefinedDegree RefinedDegree::neutrosophic(std::vector<double> t_parts,
                                          std::vector<double> i_parts,
                                          std::vector<double> f_parts) {
  if (t_parts.empty() || i_parts.empty() || f_parts.empty() ||
      t_parts.size() + i_parts.size() + f_parts.size() < 4)
    throw std::invalid_argument("refined neutrosophic degree needs nonempty "
                                "blocks with at least four subcomponents");
  return RefinedDegree(DegreeKind::Neutrosophic, std::move(t_parts),
                       std::move(i_parts), std::move(f_parts));
}

namespace detail {

Degree make_degree(int kind, double t, double i, double f) {
  check_unit(t, "truth degree");
  check_unit(i, "indeterminacy degree");
  check_unit(f, "falsehood degree");
  return Degree(static_cast<DegreeKind>(kind), t, i, f);
}

RefinedDegree make_refined(int kind, std::vector<double> t,
                           std::vector<double> i, std::vector<double> f) {
  return RefinedDegree(static_cast<DegreeKind>(kind), std::move(t),
                       std::move(i), std::move(f));
}

}  // namespace detail
}  // namespace plitho
