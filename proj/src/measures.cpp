#include "plitho/measures.hpp"

#include <cmath>
#include <stdexcept>

namespace plitho {
namespace {

void require_comparable(const std::vector<double>& a,
                        const std::vector<double>& b) {
  if (a.empty()) throw std::invalid_argument("empty degree vectors");
  if (a.size() != b.size())
    throw std::invalid_argument("degree vectors of different lengths");
}

bool all_zero(const std::vector<double>& v) {
  for (double x : v)
    if (x != 0.0) return false;
  return true;
}

// Shared convention for the overlap-based similarities, whose quotients are
// 0/0 on zero vectors.
bool degenerate(const std::vector<double>& a, const std::vector<double>& b,
                double& out) {
  const bool za = all_zero(a), zb = all_zero(b);
  if (!za && !zb) return false;
  out = (za && zb) ? 1.0 : 0.0;
  return true;
}

}  // namespace

double dice_similarity(const std::vector<double>& a,
                       const std::vector<double>& b) {
  require_comparable(a, b);
  double out;
  if (degenerate(a, b, out)) return out;
  double dot = 0.0, norms = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    dot += a[i] * b[i];
    norms += a[i] * a[i] + b[i] * b[i];
  }
  return 2.0 * dot / norms;
}

double cosine_similarity(const std::vector<double>& a,
                         const std::vector<double>& b) {
  require_comparable(a, b);
  double out;
  if (degenerate(a, b, out)) return out;
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    dot += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  return dot / (std::sqrt(na) * std::sqrt(nb));
}

double jaccard_similarity(const std::vector<double>& a,
                          const std::vector<double>& b) {
  require_comparable(a, b);
  double out;
  if (degenerate(a, b, out)) return out;
  double dot = 0.0, norms = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    dot += a[i] * b[i];
    norms += a[i] * a[i] + b[i] * b[i];
  }
  return dot / (norms - dot);
}

double hamming_distance(const std::vector<double>& a,
                        const std::vector<double>& b) {
  require_comparable(a, b);
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += std::fabs(a[i] - b[i]);
  return sum / static_cast<double>(a.size());
}

double hamming_similarity(const std::vector<double>& a,
                          const std::vector<double>& b) {
  return 1.0 - hamming_distance(a, b);
}

double euclidean_distance(const std::vector<double>& a,
                          const std::vector<double>& b) {
  require_comparable(a, b);
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    sum += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(sum / static_cast<double>(a.size()));
}

double euclidean_similarity(const std::vector<double>& a,
                            const std::vector<double>& b) {
  return 1.0 - euclidean_distance(a, b);
}

}  // namespace plitho
