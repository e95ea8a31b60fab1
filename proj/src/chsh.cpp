#include "qcog/chsh.hpp"

#include <cmath>
#include <string>

#include "qcog/errors.hpp"

namespace qcog {

namespace {

void check_expectation(double e, const char* name) {
  if (!(std::abs(e) <= 1.0 + 1e-12)) {
    fail(errc::out_of_range_expectation,
         std::string(name) + " = " + std::to_string(e) + " lies outside [-1, 1]");
  }
}

ChshExperiment factored_experiment(const std::string& label, const MarginalPair& x,
                                   const MarginalPair& y, double e_x, double e_y) {
  double px1 = static_cast<double>(x.c1) / static_cast<double>(x.total());
  double py1 = static_cast<double>(y.c1) / static_cast<double>(y.total());
  ChshExperiment e;
  e.label = label;
  e.outcomes = {x.outcome1, x.outcome2, y.outcome1, y.outcome2};
  e.probabilities = {px1 * py1, px1 * (1.0 - py1), (1.0 - px1) * py1,
                     (1.0 - px1) * (1.0 - py1)};
  e.expectation = e_x * e_y;
  return e;
}

}  // namespace

ProbabilityTable probabilities_from_counts(const CoincidenceCounts& counts) {
  std::uint64_t total = counts.total();
  if (total == 0) {
    fail(errc::empty_table, "coincidence table '" + counts.label + "' has zero total");
  }
  double t = static_cast<double>(total);
  return {static_cast<double>(counts.n11) / t, static_cast<double>(counts.n12) / t,
          static_cast<double>(counts.n21) / t, static_cast<double>(counts.n22) / t};
}

double expectation_value(const ProbabilityTable& table) {
  if (std::abs(table.sum() - 1.0) > 1e-9) {
    fail(errc::not_normalized,
         "probability table sums to " + std::to_string(table.sum()) + ", expected 1");
  }
  return table.p11 + table.p22 - table.p21 - table.p12;
}

ChshStatistic chsh_statistic(double e_ab, double e_apb, double e_abp, double e_apbp) {
  check_expectation(e_ab, "E(AB)");
  check_expectation(e_apb, "E(A'B)");
  check_expectation(e_abp, "E(AB')");
  check_expectation(e_apbp, "E(A'B')");
  ChshStatistic result;
  result.s = e_apbp + e_apb + e_abp - e_ab;
  result.violates = std::abs(result.s) > 2.0;
  return result;
}

ProductModel product_expectations(const MarginalCounts& marginals) {
  for (const MarginalPair* pair : {&marginals.a, &marginals.ap, &marginals.b, &marginals.bp}) {
    if (pair->total() == 0) {
      fail(errc::empty_marginal, "marginal pair '" + pair->label + "' has zero total");
    }
  }
  auto single = [](const MarginalPair& p) {
    double t = static_cast<double>(p.total());
    return (static_cast<double>(p.c1) - static_cast<double>(p.c2)) / t;
  };
  ProductModel model;
  model.e_a = single(marginals.a);
  model.e_ap = single(marginals.ap);
  model.e_b = single(marginals.b);
  model.e_bp = single(marginals.bp);
  model.joint = {factored_experiment("AB", marginals.a, marginals.b, model.e_a, model.e_b),
                 factored_experiment("A'B", marginals.ap, marginals.b, model.e_ap, model.e_b),
                 factored_experiment("AB'", marginals.a, marginals.bp, model.e_a, model.e_bp),
                 factored_experiment("A'B'", marginals.ap, marginals.bp, model.e_ap,
                                     model.e_bp)};
  return model;
}

bool check_chsh_bound(double x, double xp, double y, double yp) {
  check_expectation(x, "x");
  check_expectation(xp, "x'");
  check_expectation(y, "y");
  check_expectation(yp, "y'");
  double s = x * y + x * yp + xp * y - xp * yp;
  return std::abs(s) <= 2.0 + 1e-12;
}

ChshReport chsh_from_counts(const std::array<CoincidenceCounts, 4>& tables) {
  ChshReport report;
  for (std::size_t i = 0; i < 4; ++i) {
    const CoincidenceCounts& counts = tables[i];
    if (counts.all_zero()) {
      fail(errc::all_zero_table,
           "coincidence table '" + counts.label + "' is all zero; CHSH is undefined");
    }
    ChshExperiment& e = report.experiments[i];
    e.label = counts.label;
    e.outcomes = counts.outcomes;
    e.probabilities = probabilities_from_counts(counts);
    e.expectation = expectation_value(e.probabilities);
  }
  ChshStatistic s =
      chsh_statistic(report.experiments[0].expectation, report.experiments[1].expectation,
                     report.experiments[2].expectation, report.experiments[3].expectation);
  report.s = s.s;
  report.violates = s.violates;
  return report;
}

ChshReport chsh_from_marginals(const MarginalCounts& marginals) {
  ProductModel model = product_expectations(marginals);
  ChshReport report;
  report.experiments = model.joint;
  ChshStatistic s =
      chsh_statistic(model.joint[0].expectation, model.joint[1].expectation,
                     model.joint[2].expectation, model.joint[3].expectation);
  report.s = s.s;
  report.violates = s.violates;
  return report;
}

}  // namespace qcog
