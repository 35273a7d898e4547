#pragma once

#include <stdexcept>

namespace plitho {

// Validated scalar in the closed unit interval. Out-of-range input is a hard
// error; clamping would mask upstream bugs.
class UnitScalar {
public:
  UnitScalar() = default;

  explicit UnitScalar(double v) : v_(v) {
    if (!(v >= 0.0 && v <= 1.0))
      throw std::domain_error("unit scalar outside [0, 1]");
  }

  // For results of convex arithmetic that are in range mathematically but may
  // drift past an endpoint by a few ulps.
  static UnitScalar from_arithmetic(double v) {
    constexpr double slack = 1e-9;
    if (v < 0.0 && v >= -slack) v = 0.0;
    if (v > 1.0 && v <= 1.0 + slack) v = 1.0;
    return UnitScalar(v);
  }

  double value() const { return v_; }

  friend bool operator==(UnitScalar a, UnitScalar b) { return a.v_ == b.v_; }

private:
  double v_ = 0.0;
};

enum class Norm { Product, MinMax };

// A t-norm together with its De Morgan dual t-conorm.
struct NormPair {
  Norm id = Norm::Product;

  double tnorm(double a, double b) const {
    return id == Norm::Product ? a * b : (a < b ? a : b);
  }
  double tconorm(double a, double b) const {
    return id == Norm::Product ? a + b - a * b : (a > b ? a : b);
  }
};

inline constexpr NormPair product_norms{Norm::Product};
inline constexpr NormPair minmax_norms{Norm::MinMax};

enum class BlendMode { And, Or };

// Contradiction-weighted linear combination of the t-norm and t-conorm: the
// kernel every aggregation operator reduces to. And: (1-c0)*tnorm + c0*tconorm;
// Or swaps the weights.
inline double blend(double a, double b, double c0, BlendMode mode,
                    NormPair pair = {}) {
  const double tn = pair.tnorm(a, b);
  const double tc = pair.tconorm(a, b);
  return mode == BlendMode::And ? (1.0 - c0) * tn + c0 * tc
                                : (1.0 - c0) * tc + c0 * tn;
}

inline UnitScalar tnorm(UnitScalar a, UnitScalar b, NormPair pair = {}) {
  return UnitScalar::from_arithmetic(pair.tnorm(a.value(), b.value()));
}

inline UnitScalar tconorm(UnitScalar a, UnitScalar b, NormPair pair = {}) {
  return UnitScalar::from_arithmetic(pair.tconorm(a.value(), b.value()));
}

inline UnitScalar fuzzy_complement(UnitScalar a) {
  return UnitScalar(1.0 - a.value());
}

inline UnitScalar blend(UnitScalar a, UnitScalar b, UnitScalar c0,
                        BlendMode mode, NormPair pair = {}) {
  return UnitScalar::from_arithmetic(
      blend(a.value(), b.value(), c0.value(), mode, pair));
}

}  // namespace plitho
