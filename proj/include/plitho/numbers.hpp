#pragma once

#include <cstddef>
#include <vector>

#include "plitho/blend.hpp"

namespace plitho {

// A tuple of unit-interval components, each tied to a contradiction degree;
// the contradictions start at zero and never decrease along the tuple.
class PlithogenicNumber {
public:
  PlithogenicNumber(std::vector<double> degrees,
                    std::vector<double> contradictions);

  const std::vector<double>& degrees() const { return degrees_; }
  const std::vector<double>& contradictions() const { return contradictions_; }
  std::size_t size() const { return degrees_.size(); }

  friend bool operator==(const PlithogenicNumber&,
                         const PlithogenicNumber&) = default;

private:
  std::vector<double> degrees_;
  std::vector<double> contradictions_;
};

// Componentwise kernels under the product pair. Addition blends
// disjunctively, multiplication conjunctively; for each component the two sum
// to a + b. Scaling and exponentiation interpolate the classical fuzzy forms
// by the contradiction degree.
double pn_add_component(double a, double b, double c);
double pn_mul_component(double a, double b, double c);
// (1 - c) * (1 - (1 - a)^lambda) + c * a^lambda, lambda > 0.
double pn_scale_component(double lambda, double a, double c);
// (1 - c) * a^lambda + c * (1 - (1 - a)^lambda), lambda > 0.
double pn_pow_component(double a, double lambda, double c);

// Operands must carry identical contradiction tuples.
PlithogenicNumber pn_add(const PlithogenicNumber& a,
                         const PlithogenicNumber& b);
PlithogenicNumber pn_mul(const PlithogenicNumber& a,
                         const PlithogenicNumber& b);
PlithogenicNumber pn_scale(double lambda, const PlithogenicNumber& a);
PlithogenicNumber pn_pow(const PlithogenicNumber& a, double lambda);

}  // namespace plitho
