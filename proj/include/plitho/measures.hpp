#pragma once

#include <vector>

namespace plitho {

// Similarity and distance over equal-length degree vectors. The overlap-based
// similarities (dice, cosine, jaccard) define two all-zero vectors as fully
// similar and an all-zero vector against a nonzero one as fully dissimilar.

double dice_similarity(const std::vector<double>& a,
                       const std::vector<double>& b);
double cosine_similarity(const std::vector<double>& a,
                         const std::vector<double>& b);
double jaccard_similarity(const std::vector<double>& a,
                          const std::vector<double>& b);

// Mean absolute componentwise difference.
double hamming_distance(const std::vector<double>& a,
                        const std::vector<double>& b);
double hamming_similarity(const std::vector<double>& a,
                          const std::vector<double>& b);

// Root mean square componentwise difference.
double euclidean_distance(const std::vector<double>& a,
                          const std::vector<double>& b);
double euclidean_similarity(const std::vector<double>& a,
                            const std::vector<double>& b);

}  // namespace plitho
