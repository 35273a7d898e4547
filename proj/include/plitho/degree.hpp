#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace plitho {

class Degree;
class RefinedDegree;

namespace detail {
// Library-internal constructors for operator results that legitimately land
// outside the bounds the public factories enforce on user input (for example
// a flipped intuitionistic pair, whose components sum past 1). Range-checked
// only.
Degree make_degree(int kind, double t, double i, double f);
RefinedDegree make_refined(int kind, std::vector<double> t,
                           std::vector<double> i, std::vector<double> f);
}  // namespace detail

// How many components an appurtenance degree carries: truth only, truth with
// falsehood, or truth with indeterminacy and falsehood.
enum class DegreeKind { Fuzzy = 1, Intuitionistic = 2, Neutrosophic = 3 };

inline std::size_t component_count(DegreeKind kind) {
  return static_cast<std::size_t>(kind);
}

// Appurtenance degree of one attribute value. Built through the factories so
// the kind-specific constraints hold by construction.
class Degree {
public:
  static Degree fuzzy(double t);
  // Requires t + f <= 1.
  static Degree intuitionistic(double t, double f);
  // Independent components; the sum may reach 3.
  static Degree neutrosophic(double t, double i, double f);

  DegreeKind kind() const { return kind_; }
  double t() const { return t_; }
  double i() const;
  double f() const;

  // Component by position: 0 = t, then i (kind 3 only), then f.
  double component(std::size_t pos) const;

  friend bool operator==(const Degree& a, const Degree& b) {
    return a.kind_ == b.kind_ && a.t_ == b.t_ && a.i_ == b.i_ && a.f_ == b.f_;
  }

private:
  friend Degree detail::make_degree(int, double, double, double);

  Degree(DegreeKind kind, double t, double i, double f)
      : kind_(kind), t_(t), i_(i), f_(f) {}

  DegreeKind kind_ = DegreeKind::Fuzzy;
  double t_ = 0.0;
  double i_ = 0.0;
  double f_ = 0.0;
};

// Appurtenance degree whose truth/indeterminacy/falsehood components are each
// split into subcomponents. Block sizes are fixed per object and must agree
// between operands of any operation.
class RefinedDegree {
public:
  // At least two truth subcomponents, summing to at most 1.
  static RefinedDegree fuzzy(std::vector<double> t_parts);
  // p truth and s falsehood subcomponents, p + s >= 3, total sum at most 1.
  static RefinedDegree intuitionistic(std::vector<double> t_parts,
                                      std::vector<double> f_parts);
  // p + r + s >= 4 subcomponents, each block nonempty.
  static RefinedDegree neutrosophic(std::vector<double> t_parts,
                                    std::vector<double> i_parts,
                                    std::vector<double> f_parts);

  DegreeKind kind() const { return kind_; }
  const std::vector<double>& t_parts() const { return t_; }
  const std::vector<double>& i_parts() const { return i_; }
  const std::vector<double>& f_parts() const { return f_; }

  bool same_shape(const RefinedDegree& other) const {
    return kind_ == other.kind_ && t_.size() == other.t_.size() &&
           i_.size() == other.i_.size() && f_.size() == other.f_.size();
  }

  friend bool operator==(const RefinedDegree& a, const RefinedDegree& b) {
    return a.kind_ == b.kind_ && a.t_ == b.t_ && a.i_ == b.i_ && a.f_ == b.f_;
  }

private:
  friend RefinedDegree detail::make_refined(int, std::vector<double>,
                                            std::vector<double>,
                                            std::vector<double>);

  RefinedDegree(DegreeKind kind, std::vector<double> t, std::vector<double> i,
                std::vector<double> f);

  DegreeKind kind_ = DegreeKind::Fuzzy;
  std::vector<double> t_, i_, f_;
};

}  // namespace plitho
