#include "qcog/interference.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "qcog/errors.hpp"

namespace qcog {

namespace {

constexpr double kDegPerRad = 180.0 / std::numbers::pi;

// Sum of the signed non-anchor terms, the quantity balancing <A|B> = 0.
double offanchor_sum(const Eigen::ArrayXd& lambda, Eigen::Index m) {
  double sum = 0.0;
  for (Eigen::Index k = 0; k < lambda.size(); ++k) {
    if (k != m) sum += lambda[k];
  }
  return sum;
}

void check_anchor_index(Eigen::Index size, Eigen::Index m) {
  if (m < 0 || m >= size) {
    fail(errc::index_out_of_range, "anchor index " + std::to_string(m) +
                                       " outside dataset of size " + std::to_string(size));
  }
}

// The anchor's own sign tracks sign(sin beta_m) = sign(-sum), positive on tie,
// so the signed lambda_m stays consistent with the phase the anchor receives.
int anchor_sign(double offanchor) { return offanchor > 0.0 ? -1 : 1; }

}  // namespace

double ReconstructionResiduals::max() const {
  double value = 0.0;
  if (mu_a.size() > 0) value = std::max(value, mu_a.maxCoeff());
  if (mu_b.size() > 0) value = std::max(value, mu_b.maxCoeff());
  if (mu_a_or_b.size() > 0) value = std::max(value, mu_a_or_b.maxCoeff());
  return value;
}

Eigen::ArrayXd interference_terms(const DisjunctionDataset& ds) {
  return ds.mu_a_or_b.weights - (ds.mu_a.weights + ds.mu_b.weights) / 2.0;
}

Eigen::ArrayXd lambda_magnitudes(const DisjunctionDataset& ds, double clamp_eps) {
  if (clamp_eps < 0.0) {
    fail(errc::invalid_argument, "clamp_eps must be nonnegative");
  }
  Eigen::ArrayXd interference = interference_terms(ds);
  Eigen::ArrayXd result(ds.size());
  for (Eigen::Index k = 0; k < ds.size(); ++k) {
    double discriminant =
        ds.mu_a.weights[k] * ds.mu_b.weights[k] - interference[k] * interference[k];
    if (discriminant < -clamp_eps) {
      fail(errc::not_representable,
           "interference of '" + ds.exemplars()[k] +
               "' exceeds sqrt(mu_a mu_b); no Hilbert-space model exists");
    }
    result[k] = std::sqrt(std::max(discriminant, 0.0));
  }
  return result;
}

Eigen::Index select_anchor(const Eigen::ArrayXd& lambda_abs) {
  if (lambda_abs.size() == 0) {
    fail(errc::empty_input, "cannot select an anchor from an empty sequence");
  }
  Eigen::Index m = 0;
  for (Eigen::Index k = 1; k < lambda_abs.size(); ++k) {
    if (lambda_abs[k] > lambda_abs[m]) m = k;
  }
  return m;
}

SignAssignment assign_signs(const Eigen::ArrayXd& lambda_abs, Eigen::Index m) {
  check_anchor_index(lambda_abs.size(), m);
  for (Eigen::Index k = 0; k < lambda_abs.size(); ++k) {
    if (lambda_abs[k] > lambda_abs[m]) {
      fail(errc::anchor_not_maximal, "anchor magnitude " + std::to_string(lambda_abs[m]) +
                                         " is below entry " + std::to_string(k));
    }
  }
  std::vector<Eigen::Index> order;
  order.reserve(static_cast<std::size_t>(lambda_abs.size()));
  for (Eigen::Index k = 0; k < lambda_abs.size(); ++k) {
    if (k != m) order.push_back(k);
  }
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
    if (lambda_abs[a] != lambda_abs[b]) return lambda_abs[a] > lambda_abs[b];
    return a < b;
  });

  SignAssignment result;
  result.signs.assign(static_cast<std::size_t>(lambda_abs.size()), 1);
  result.source = SignAssignment::Source::greedy;
  // Each placed sign opposes the running sum, so |sum| never exceeds the
  // largest magnitude processed, which is itself at most |lambda_m|.
  double sum = 0.0;
  for (Eigen::Index k : order) {
    int sign = sum > 0.0 ? -1 : (sum < 0.0 ? 1 : -1);
    result.signs[static_cast<std::size_t>(k)] = sign;
    sum += sign * lambda_abs[k];
  }
  result.signs[static_cast<std::size_t>(m)] = anchor_sign(sum);
  return result;
}

double compute_cm(const DisjunctionDataset& ds, const Eigen::ArrayXd& interference,
                  const Eigen::ArrayXd& lambda, Eigen::Index m) {
  check_anchor_index(ds.size(), m);
  double sum = offanchor_sum(lambda, m);
  double numerator = std::hypot(sum, interference[m]);
  double mass = ds.mu_a.weights[m] * ds.mu_b.weights[m];
  if (mass == 0.0) {
    if (numerator <= 1e-9) return 0.0;
    fail(errc::zero_anchor_mass,
         "anchor '" + ds.exemplars()[m] + "' has zero mass but nonzero cross-terms");
  }
  double c_m = numerator / std::sqrt(mass);
  if (c_m > 1.0) {
    if (c_m <= 1.0 + 1e-9) return 1.0;
    fail(errc::constraint_violated,
         "sign assignment drives c_m to " + std::to_string(c_m) +
             "; the balance bound |sum lambda_k| <= |lambda_m| is violated");
  }
  return c_m;
}

Eigen::ArrayXd compute_phases(const DisjunctionDataset& ds, const Eigen::ArrayXd& interference,
                              const Eigen::ArrayXd& lambda, Eigen::Index m, double c_m) {
  check_anchor_index(ds.size(), m);
  Eigen::ArrayXd beta(ds.size());
  for (Eigen::Index k = 0; k < ds.size(); ++k) {
    if (k == m) continue;
    double mass = ds.mu_a.weights[k] * ds.mu_b.weights[k];
    if (mass == 0.0) {
      if (std::abs(interference[k]) > 1e-9) {
        fail(errc::not_representable, "exemplar '" + ds.exemplars()[k] +
                                          "' has zero mass but nonzero interference");
      }
      beta[k] = 0.0;
      continue;
    }
    double arg = interference[k] / std::sqrt(mass);
    if (arg > 1.0) {
      if (arg > 1.0 + 1e-9) {
        fail(errc::not_representable,
             "cosine argument " + std::to_string(arg) + " for '" + ds.exemplars()[k] + "'");
      }
      arg = 1.0;
    } else if (arg < -1.0) {
      if (arg < -1.0 - 1e-9) {
        fail(errc::not_representable,
             "cosine argument " + std::to_string(arg) + " for '" + ds.exemplars()[k] + "'");
      }
      arg = -1.0;
    }
    double sign = lambda[k] < 0.0 ? -1.0 : 1.0;
    beta[k] = sign * std::acos(arg) * kDegPerRad;
    if (beta[k] <= -180.0) beta[k] = 180.0;  // keep the range half-open
  }
  if (c_m == 0.0) {
    beta[m] = 0.0;
  } else {
    // Cosine fixed by I_m, sine by orthogonality; both share the positive
    // factor 1/(c_m sqrt(mu_a_m mu_b_m)), which atan2 ignores.
    beta[m] = std::atan2(-offanchor_sum(lambda, m), interference[m]) * kDegPerRad;
    if (beta[m] <= -180.0) beta[m] = 180.0;
  }
  return beta;
}

std::pair<ComplexVector, ComplexVector> build_state_vectors(const DisjunctionDataset& ds,
                                                            Eigen::Index m, double c_m,
                                                            const Eigen::ArrayXd& beta_deg) {
  check_anchor_index(ds.size(), m);
  if (beta_deg.size() != ds.size()) {
    fail(errc::length_mismatch, "phase sequence length does not match dataset");
  }
  Eigen::Index n = ds.size();
  ComplexVector a = ComplexVector::Zero(n + 1);
  ComplexVector b = ComplexVector::Zero(n + 1);
  for (Eigen::Index k = 0; k < n; ++k) {
    a[k] = std::sqrt(ds.mu_a.weights[k]);
    double modulus = std::sqrt(ds.mu_b.weights[k]);
    if (k == m) modulus *= c_m;
    b[k] = std::polar(modulus, beta_deg[k] / kDegPerRad);
  }
  b[n] = std::sqrt(std::max(ds.mu_b.weights[m] * (1.0 - c_m * c_m), 0.0));
  std::complex<double> overlap = a.dot(b);
  if (std::abs(overlap) > 1e-6) {
    fail(errc::orthogonality_failure,
         "state vectors have overlap " + std::to_string(std::abs(overlap)));
  }
  return {std::move(a), std::move(b)};
}

std::vector<Projector> build_projectors(Eigen::Index n, Eigen::Index m) {
  if (n < 1) {
    fail(errc::empty_input, "projector family needs at least one exemplar");
  }
  check_anchor_index(n, m);
  std::vector<Projector> family;
  family.reserve(static_cast<std::size_t>(n));
  for (Eigen::Index k = 0; k < n; ++k) {
    if (k == m) {
      family.emplace_back(n + 1, std::vector<Eigen::Index>{m, n});
    } else {
      family.emplace_back(n + 1, std::vector<Eigen::Index>{k});
    }
  }
  return family;
}

ReconstructionResiduals verify_reconstruction(const InterferenceFit& fit,
                                              const DisjunctionDataset& ds) {
  Eigen::Index n = ds.size();
  if (static_cast<Eigen::Index>(fit.projectors.size()) != n ||
      fit.vector_a.size() != n + 1 || fit.vector_b.size() != n + 1) {
    fail(errc::length_mismatch, "fit does not match dataset size");
  }
  ComplexVector disjunction = (fit.vector_a + fit.vector_b) / std::sqrt(2.0);
  ReconstructionResiduals res;
  res.mu_a.resize(n);
  res.mu_b.resize(n);
  res.mu_a_or_b.resize(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const Projector& p = fit.projectors[static_cast<std::size_t>(k)];
    res.mu_a[k] = std::abs(project_probability(fit.vector_a, p) - ds.mu_a.weights[k]);
    res.mu_b[k] = std::abs(project_probability(fit.vector_b, p) - ds.mu_b.weights[k]);
    res.mu_a_or_b[k] =
        std::abs(project_probability(disjunction, p) - ds.mu_a_or_b.weights[k]);
  }
  return res;
}

std::vector<Effect> classify_interference(const Eigen::ArrayXd& interference,
                                          const Eigen::ArrayXd& beta_deg,
                                          double neutral_eps) {
  if (interference.size() != beta_deg.size()) {
    fail(errc::length_mismatch, "interference and phase sequences differ in length");
  }
  std::vector<Effect> labels(static_cast<std::size_t>(interference.size()));
  for (Eigen::Index k = 0; k < interference.size(); ++k) {
    Effect e = Effect::neutral;
    if (std::abs(interference[k]) > neutral_eps) {
      e = interference[k] < 0.0 ? Effect::weakening : Effect::strengthening;
    }
    labels[static_cast<std::size_t>(k)] = e;
  }
  return labels;
}

std::vector<Eigen::Index> order_by_interference_magnitude(const Eigen::ArrayXd& interference) {
  std::vector<Eigen::Index> order(static_cast<std::size_t>(interference.size()));
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<Eigen::Index>(i);
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
    double ma = std::abs(interference[a]);
    double mb = std::abs(interference[b]);
    if (ma != mb) return ma > mb;
    return a < b;
  });
  return order;
}

InterferenceFit fit_disjunction(const DisjunctionDataset& ds,
                                const std::optional<SignAssignment>& signs) {
  InterferenceFit fit;
  fit.interference = interference_terms(ds);
  Eigen::ArrayXd lambda_abs = lambda_magnitudes(ds);
  fit.anchor = select_anchor(lambda_abs);

  if (signs.has_value()) {
    if (static_cast<Eigen::Index>(signs->signs.size()) != ds.size()) {
      fail(errc::length_mismatch, "sign assignment length does not match dataset");
    }
    for (int s : signs->signs) {
      if (s != 1 && s != -1) {
        fail(errc::invalid_argument, "signs must be +1 or -1");
      }
    }
    fit.signs = signs->signs;
  } else {
    fit.signs = assign_signs(lambda_abs, fit.anchor).signs;
  }

  fit.lambda.resize(ds.size());
  for (Eigen::Index k = 0; k < ds.size(); ++k) {
    fit.lambda[k] = fit.signs[static_cast<std::size_t>(k)] * lambda_abs[k];
  }
  // The anchor entry is not a free choice; re-derive it from the balance sum.
  int m_sign = anchor_sign(offanchor_sum(fit.lambda, fit.anchor));
  fit.signs[static_cast<std::size_t>(fit.anchor)] = m_sign;
  fit.lambda[fit.anchor] = m_sign * lambda_abs[fit.anchor];

  fit.c_m = compute_cm(ds, fit.interference, fit.lambda, fit.anchor);
  fit.beta_deg = compute_phases(ds, fit.interference, fit.lambda, fit.anchor, fit.c_m);
  auto vectors = build_state_vectors(ds, fit.anchor, fit.c_m, fit.beta_deg);
  fit.vector_a = std::move(vectors.first);
  fit.vector_b = std::move(vectors.second);
  fit.projectors = build_projectors(ds.size(), fit.anchor);
  fit.residuals = verify_reconstruction(fit, ds);
  return fit;
}

}  // namespace qcog
