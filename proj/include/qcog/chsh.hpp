#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace qcog {

/// Outcome names for a 2x2 experiment: X chooses between x1/x2, Y between
/// y1/y2. Carried through reports so tables cannot be transposed silently.
struct OutcomeLabels {
  std::string x1;
  std::string x2;
  std::string y1;
  std::string y2;
};

/// One coincidence experiment: document counts with the fixed layout
/// n11 = (X1,Y1), n12 = (X1,Y2), n21 = (X2,Y1), n22 = (X2,Y2).
struct CoincidenceCounts {
  std::string label;  // "AB", "A'B", "AB'", "A'B'"
  OutcomeLabels outcomes;
  std::uint64_t n11 = 0;
  std::uint64_t n12 = 0;
  std::uint64_t n21 = 0;
  std::uint64_t n22 = 0;

  std::uint64_t total() const { return n11 + n12 + n21 + n22; }
  bool all_zero() const { return total() == 0; }
};

/// Joint probabilities, same layout as the counts. Sums to 1.
struct ProbabilityTable {
  double p11 = 0.0;
  double p12 = 0.0;
  double p21 = 0.0;
  double p22 = 0.0;

  double sum() const { return p11 + p12 + p21 + p22; }
};

/// Counts for one single (marginal) experiment: c1 documents for the first
/// outcome, c2 for the second.
struct MarginalPair {
  std::string label;  // "A", "A'", "B", "B'"
  std::string outcome1;
  std::string outcome2;
  std::uint64_t c1 = 0;
  std::uint64_t c2 = 0;

  std::uint64_t total() const { return c1 + c2; }
};

/// The four marginal experiments of a CHSH design.
struct MarginalCounts {
  MarginalPair a;
  MarginalPair ap;
  MarginalPair b;
  MarginalPair bp;
};

struct ChshStatistic {
  double s = 0.0;
  bool violates = false;  // |s| > 2, strictly
};

/// One evaluated experiment inside a report.
struct ChshExperiment {
  std::string label;
  OutcomeLabels outcomes;
  ProbabilityTable probabilities;
  double expectation = 0.0;
};

/// Fully evaluated CHSH design, experiments in the fixed order
/// AB, A'B, AB', A'B'.
struct ChshReport {
  std::array<ChshExperiment, 4> experiments;
  double s = 0.0;
  bool violates = false;
};

/// P_ij = n_ij / total. EmptyTable when the total is zero.
ProbabilityTable probabilities_from_counts(const CoincidenceCounts& counts);

/// E = P11 + P22 - P21 - P12 for a table summing to 1.
double expectation_value(const ProbabilityTable& table);

/// S = E(A'B') + E(A'B) + E(AB') - E(AB); violates iff |S| > 2. Each input
/// must lie in [-1, 1].
ChshStatistic chsh_statistic(double e_ab, double e_apb, double e_abp, double e_apbp);

/// Product ("separated sources") model built from marginal counts.
struct ProductModel {
  double e_a = 0.0;  // E(X) = P(X1) - P(X2) per single experiment
  double e_ap = 0.0;
  double e_b = 0.0;
  double e_bp = 0.0;
  // Factored joint experiments P(Xi,Yj) = P(Xi) P(Yj), order AB, A'B, AB', A'B'.
  // Each expectation equals the product of the two single expectations.
  std::array<ChshExperiment, 4> joint;
};

/// EmptyMarginal when any pair has zero total.
ProductModel product_expectations(const MarginalCounts& marginals);

/// The bound lemma oracle: S = xy + xy' + x'y - x'y' for inputs in [-1,1]
/// always satisfies |S| <= 2 (checked with a 1e-12 rounding allowance).
bool check_chsh_bound(double x, double xp, double y, double yp);

/// Evaluate a full design from four coincidence tables (order AB, A'B, AB',
/// A'B') or from marginal counts via the product model.
ChshReport chsh_from_counts(const std::array<CoincidenceCounts, 4>& tables);
ChshReport chsh_from_marginals(const MarginalCounts& marginals);

}  // namespace qcog
