#include "plitho/numbers.hpp"

#include <cmath>
#include <stdexcept>

namespace plitho {
namespace {

constexpr NormPair kProduct{Norm::Product};

void check_unit(double v, const char* what) {
  if (!(v >= 0.0 && v <= 1.0))
    throw std::domain_error(std::string(what) + " outside [0, 1]");
}

void check_lambda(double lambda) {
  if (!(lambda > 0.0)) throw std::domain_error("exponent must be positive");
}

double unit(double v) { return UnitScalar::from_arithmetic(v).value(); }

void require_aligned(const PlithogenicNumber& a, const PlithogenicNumber& b) {
  if (a.contradictions() != b.contradictions())
    throw std::invalid_argument(
        "operands carry different contradiction tuples");
}

template <typename F>
PlithogenicNumber map_components(const PlithogenicNumber& a,
                                 const PlithogenicNumber& b, F&& f) {
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] = unit(f(a.degrees()[i], b.degrees()[i], a.contradictions()[i]));
  return PlithogenicNumber(std::move(out), a.contradictions());
}

}  // namespace

PlithogenicNumber::PlithogenicNumber(std::vector<double> degrees,
                                     std::vector<double> contradictions)
    : degrees_(std::move(degrees)), contradictions_(std::move(contradictions)) {
  if (degrees_.empty())
    throw std::invalid_argument("a plithogenic number needs at least one "
                                "component");
  if (contradictions_.size() != degrees_.size())
    throw std::invalid_argument("need one contradiction degree per component");
  for (double v : degrees_) check_unit(v, "component");
  for (double c : contradictions_) check_unit(c, "contradiction degree");
  if (contradictions_.front() != 0.0)
    throw std::invalid_argument("the leading contradiction degree must be 0");
  for (std::size_t i = 1; i < contradictions_.size(); ++i)
    if (contradictions_[i] < contradictions_[i - 1])
      throw std::invalid_argument("contradiction degrees must not decrease");
}

double pn_add_component(double a, double b, double c) {
  return blend(a, b, c, BlendMode::Or, kProduct);
}

double pn_mul_component(double a, double b, double c) {
  return blend(a, b, c, BlendMode::And, kProduct);
}

double pn_scale_component(double lambda, double a, double c) {
  check_lambda(lambda);
  // Both branches reduce to a at exponent 1; return it outright so the
  // identity holds bit for bit instead of up to rounding.
  if (lambda == 1.0) return a;
  return (1.0 - c) * (1.0 - std::pow(1.0 - a, lambda)) +
         c * std::pow(a, lambda);
}

double pn_pow_component(double a, double lambda, double c) {
  check_lambda(lambda);
  if (lambda == 1.0) return a;
  return (1.0 - c) * std::pow(a, lambda) +
         c * (1.0 - std::pow(1.0 - a, lambda));
}

PlithogenicNumber pn_add(const PlithogenicNumber& a,
                         const PlithogenicNumber& b) {
  require_aligned(a, b);
  return map_components(a, b, pn_add_component);
}

PlithogenicNumber pn_mul(const PlithogenicNumber& a,
                         const PlithogenicNumber& b) {
  require_aligned(a, b);
  return map_components(a, b, pn_mul_component);
}

PlithogenicNumber pn_scale(double lambda, const PlithogenicNumber& a) {
  check_lambda(lambda);
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] =
        unit(pn_scale_component(lambda, a.degrees()[i], a.contradictions()[i]));
  return PlithogenicNumber(std::move(out), a.contradictions());
}

PlithogenicNumber pn_pow(const PlithogenicNumber& a, double lambda) {
  check_lambda(lambda);
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] =
        unit(pn_pow_component(a.degrees()[i], lambda, a.contradictions()[i]));
  return PlithogenicNumber(std::move(out), a.contradictions());
}

}  // namespace plitho
