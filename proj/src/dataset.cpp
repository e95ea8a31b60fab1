#include "qcog/dataset.hpp"

#include <cmath>
#include <unordered_set>

#include "qcog/errors.hpp"

namespace qcog {

namespace {

ProbabilityDistribution normalized(const std::vector<std::string>& labels,
                                   const Eigen::ArrayXd& weights, double tolerance,
                                   const char* column) {
  for (Eigen::Index i = 0; i < weights.size(); ++i) {
    if (weights[i] < 0.0 || !std::isfinite(weights[i])) {
      fail(errc::negative_weight, std::string(column) + " weight for '" + labels[i] +
                                      "' is " + std::to_string(weights[i]));
    }
  }
  double sum = weights.sum();
  if (std::abs(sum - 1.0) > tolerance) {
    fail(errc::sum_out_of_tolerance,
         std::string(column) + " sums to " + std::to_string(sum) + ", expected 1 within " +
             std::to_string(tolerance));
  }
  return {labels, weights / sum};
}

}  // namespace

DisjunctionDataset validate_dataset(const RawDataset& raw, double tolerance) {
  if (!(tolerance > 0.0)) {
    fail(errc::invalid_argument, "tolerance must be positive");
  }
  auto n = static_cast<Eigen::Index>(raw.exemplars.size());
  if (raw.mu_a.size() != n || raw.mu_b.size() != n || raw.mu_a_or_b.size() != n) {
    fail(errc::length_mismatch, "columns have different lengths");
  }
  if (n == 0) {
    fail(errc::empty_input, "dataset has no exemplars");
  }
  if (n < 2) {
    fail(errc::invalid_argument, "dataset needs at least two exemplars");
  }
  std::unordered_set<std::string> seen;
  for (const auto& label : raw.exemplars) {
    if (label.empty()) {
      fail(errc::invalid_argument, "empty exemplar label");
    }
    if (!seen.insert(label).second) {
      fail(errc::duplicate_label, "duplicate exemplar label '" + label + "'");
    }
  }
  return {normalized(raw.exemplars, raw.mu_a, tolerance, "mu_a"),
          normalized(raw.exemplars, raw.mu_b, tolerance, "mu_b"),
          normalized(raw.exemplars, raw.mu_a_or_b, tolerance, "mu_a_or_b")};
}

}  // namespace qcog
