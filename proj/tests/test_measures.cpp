#include "plitho/measures.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"

using namespace plitho;

namespace {

bool near(double a, double b, double tol) { return std::fabs(a - b) <= tol; }

constexpr double kTight = 1e-12;

std::vector<double> random_vector(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> v(n);
  for (auto& x : v) x = u(rng);
  return v;
}

}  // namespace

TEST_CASE("worked values") {
  const std::vector<double> a{0.6, 0.8};
  const std::vector<double> b{0.8, 0.6};

  CHECK(near(dice_similarity(a, b), 0.96, kTight));
  CHECK(near(cosine_similarity(a, b), 0.96, kTight));
  CHECK(near(jaccard_similarity(a, b), 0.923076923076923, kTight));
  CHECK(near(euclidean_distance(a, b), 0.20000000000000007, kTight));
  CHECK(near(euclidean_similarity(a, b), 1.0 - 0.20000000000000007, kTight));

  const std::vector<double> meet{0.42, 0.23, 0.73, 0.48, 0.45};
  const std::vector<double> join{0.88, 0.37, 0.57, 0.92, 0.45};
  CHECK(near(hamming_distance(meet, join), 0.24000000000000005, kTight));
  CHECK(near(hamming_similarity(meet, join), 0.76, 1e-10));
}

TEST_CASE("boundary values") {
  const std::vector<double> e1{1.0, 0.0};
  const std::vector<double> e2{0.0, 1.0};
  CHECK(dice_similarity(e1, e2) == 0.0);
  CHECK(cosine_similarity(e1, e2) == 0.0);
  CHECK(jaccard_similarity(e1, e2) == 0.0);
  CHECK(hamming_distance({1.0, 1.0}, {0.0, 0.0}) == 1.0);
  CHECK(hamming_similarity({1.0, 1.0}, {0.0, 0.0}) == 0.0);
  CHECK(euclidean_distance({1.0}, {0.0}) == 1.0);

  const std::vector<double> half{0.5};
  CHECK(dice_similarity(half, half) == 1.0);
  CHECK(jaccard_similarity(half, half) == 1.0);
}

TEST_CASE("two all-zero vectors count as identical, one as disjoint") {
  const std::vector<double> zero{0.0, 0.0, 0.0};
  const std::vector<double> live{0.1, 0.0, 0.0};
  CHECK(dice_similarity(zero, zero) == 1.0);
  CHECK(cosine_similarity(zero, zero) == 1.0);
  CHECK(jaccard_similarity(zero, zero) == 1.0);
  CHECK(dice_similarity(zero, live) == 0.0);
  CHECK(cosine_similarity(live, zero) == 0.0);
  CHECK(jaccard_similarity(zero, live) == 0.0);
  CHECK(hamming_distance(zero, zero) == 0.0);
  CHECK(euclidean_distance(zero, zero) == 0.0);
}

TEST_CASE("inputs must be nonempty and of one length") {
  const std::vector<double> a{0.1, 0.2};
  const std::vector<double> b{0.1};
  CHECK_THROWS_AS(dice_similarity(a, b), std::invalid_argument);
  CHECK_THROWS_AS(cosine_similarity(a, b), std::invalid_argument);
  CHECK_THROWS_AS(jaccard_similarity(a, b), std::invalid_argument);
  CHECK_THROWS_AS(hamming_distance(a, b), std::invalid_argument);
  CHECK_THROWS_AS(euclidean_distance(a, b), std::invalid_argument);
  CHECK_THROWS_AS(dice_similarity({}, {}), std::invalid_argument);
}

TEST_CASE("symmetry, range, and self-identity on random vectors") {
  std::mt19937_64 rng(7781);
  for (int k = 0; k < 500; ++k) {
    const auto n = static_cast<std::size_t>(1 + k % 7);
    const auto a = random_vector(rng, n);
    const auto b = random_vector(rng, n);

    const double measures_ab[] = {
        dice_similarity(a, b),    cosine_similarity(a, b),
        jaccard_similarity(a, b), hamming_distance(a, b),
        euclidean_distance(a, b), hamming_similarity(a, b),
        euclidean_similarity(a, b)};
    const double measures_ba[] = {
        dice_similarity(b, a),    cosine_similarity(b, a),
        jaccard_similarity(b, a), hamming_distance(b, a),
        euclidean_distance(b, a), hamming_similarity(b, a),
        euclidean_similarity(b, a)};
    for (std::size_t m = 0; m < 7; ++m) {
      CHECK(near(measures_ab[m], measures_ba[m], kTight));
      CHECK(measures_ab[m] >= 0.0);
      CHECK(measures_ab[m] <= 1.0);
    }

    CHECK(near(dice_similarity(a, a), 1.0, kTight));
    CHECK(near(cosine_similarity(a, a), 1.0, kTight));
    CHECK(near(jaccard_similarity(a, a), 1.0, kTight));
    CHECK(hamming_distance(a, a) == 0.0);
    CHECK(euclidean_distance(a, a) == 0.0);
  }
}

TEST_CASE("distances grow with componentwise nesting") {
  std::mt19937_64 rng(99173);
  for (int k = 0; k < 1000; ++k) {
    const auto n = static_cast<std::size_t>(1 + k % 5);
    auto lo = random_vector(rng, n);
    auto mid = random_vector(rng, n);
    auto hi = random_vector(rng, n);
    for (std::size_t i = 0; i < n; ++i) {
      double v[3] = {lo[i], mid[i], hi[i]};
      std::sort(v, v + 3);
      lo[i] = v[0];
      mid[i] = v[1];
      hi[i] = v[2];
    }
    CHECK(hamming_distance(lo, hi) >=
          std::max(hamming_distance(lo, mid), hamming_distance(mid, hi)));
    CHECK(euclidean_distance(lo, hi) >=
          std::max(euclidean_distance(lo, mid), euclidean_distance(mid, hi)));
  }
}
