#pragma once

#include <Eigen/Core>

#include <string>
#include <vector>

namespace qcog {

/// One discrete measure over labelled exemplars. Validated instances have
/// nonnegative weights renormalized to unit sum and unique, non-empty labels.
struct ProbabilityDistribution {
  std::vector<std::string> labels;
  Eigen::ArrayXd weights;
};

/// Unchecked input triple, exactly as read from disk.
struct RawDataset {
  std::vector<std::string> exemplars;
  Eigen::ArrayXd mu_a;
  Eigen::ArrayXd mu_b;
  Eigen::ArrayXd mu_a_or_b;
};

/// Per-exemplar probability triple for two concepts and their disjunction.
/// All three distributions carry the same label sequence in the same order.
struct DisjunctionDataset {
  ProbabilityDistribution mu_a;
  ProbabilityDistribution mu_b;
  ProbabilityDistribution mu_a_or_b;

  Eigen::Index size() const { return mu_a.weights.size(); }
  const std::vector<std::string>& exemplars() const { return mu_a.labels; }
};

/// Checks column lengths, weight signs, label uniqueness, and that every
/// column sum lies within `tolerance` of 1; then renormalizes each column to
/// unit sum. A sum outside tolerance signals wrong data, not rounding.
DisjunctionDataset validate_dataset(const RawDataset& raw, double tolerance = 0.01);

}  // namespace qcog
