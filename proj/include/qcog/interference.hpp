#pragma once

#include <Eigen/Dense>

#include <optional>
#include <utility>
#include <vector>

#include "qcog/dataset.hpp"
#include "qcog/projection.hpp"

namespace qcog {

// Reconstruction of a complex Hilbert-space model in C^(n+1) from an
// n-exemplar DisjunctionDataset. The pipeline:
//
//   I_k    = mu(A or B)_k - (mu(A)_k + mu(B)_k)/2
//   |l_k|  = sqrt(mu(A)_k mu(B)_k - I_k^2)          (representability)
//   m      = argmax |l_k|                            (anchor exemplar)
//   signs  = greedy balancing so |sum_{k!=m} l_k| <= |l_m|
//   c_m    = sqrt((sum_{k!=m} l_k)^2 + I_m^2) / sqrt(mu(A)_m mu(B)_m)
//   b_k    = sign(l_k) arccos(I_k / sqrt(mu(A)_k mu(B)_k))   for k != m
//   b_m    = atan2(-sum_{k!=m} l_k, I_m)
//   |A>    = (sqrt(mu(A)_1) .. sqrt(mu(A)_n), 0)
//   |B>_k  = e^{i b_k} sqrt(mu(B)_k)                 for k != m
//   |B>_m  = c_m e^{i b_m} sqrt(mu(B)_m),  |B>_{n+1} = sqrt(mu(B)_m (1 - c_m^2))
//
// The anchor's phase gets both its cosine (from I_m) and its sine (from
// orthogonality <A|B> = 0) honored, which is why it needs the two-argument
// arctangent and the extra compensating dimension n+1.

/// Sign choice for the lambda sequence. The anchor entry is not free: it is
/// normalized to the sign of sin(b_m), positive when that sine is zero.
struct SignAssignment {
  enum class Source { greedy, user };

  std::vector<int> signs;  // one of +1/-1 per exemplar
  Source source = Source::greedy;
};

enum class Effect { weakening, neutral, strengthening };

/// Absolute residuals of the reconstructed probabilities, one per exemplar
/// and per distribution.
struct ReconstructionResiduals {
  Eigen::ArrayXd mu_a;
  Eigen::ArrayXd mu_b;
  Eigen::ArrayXd mu_a_or_b;

  double max() const;
};

/// Complete fitted model for one dataset.
struct InterferenceFit {
  Eigen::Index anchor = 0;       // m, 0-based
  Eigen::ArrayXd interference;   // I_k
  Eigen::ArrayXd lambda;         // signed l_k
  std::vector<int> signs;        // the sign sequence actually used
  double c_m = 0.0;
  Eigen::ArrayXd beta_deg;       // phases in degrees, each in (-180, 180]
  ComplexVector vector_a;        // dimension n+1
  ComplexVector vector_b;
  std::vector<Projector> projectors;  // complete family, one per exemplar
  ReconstructionResiduals residuals;
};

/// I_k = mu(A or B)_k - (mu(A)_k + mu(B)_k)/2. Sums to 0 on renormalized data.
Eigen::ArrayXd interference_terms(const DisjunctionDataset& ds);

/// |l_k| = sqrt(mu(A)_k mu(B)_k - I_k^2). A discriminant within -clamp_eps is
/// clamped to 0; below that the dataset cannot be modeled (NotRepresentable).
Eigen::ArrayXd lambda_magnitudes(const DisjunctionDataset& ds, double clamp_eps = 1e-9);

/// Smallest index attaining the maximum magnitude.
Eigen::Index select_anchor(const Eigen::ArrayXd& lambda_abs);

/// Greedy balancing: non-anchor indices processed in descending magnitude
/// (ties by ascending index), each sign opposing the running sum, a zero sum
/// resolving to -. Guarantees |sum_{k!=m} l_k| <= max_{k!=m} |l_k| <= |l_m|.
SignAssignment assign_signs(const Eigen::ArrayXd& lambda_abs, Eigen::Index m);

/// c_m in [0,1]; values within 1e-9 above 1 are clamped, farther out the sign
/// assignment violates the balance constraint (ConstraintViolated). A zero
/// anchor mass is only legal when the numerator vanishes too (then c_m = 0).
double compute_cm(const DisjunctionDataset& ds, const Eigen::ArrayXd& interference,
                  const Eigen::ArrayXd& lambda, Eigen::Index m);

/// Phases in degrees, each in (-180, 180]. Zero-mass exemplars require
/// |I_k| <= 1e-9 and get b_k = 0; arccos arguments are clamped to [-1,1] when
/// within 1e-9. b_m = 0 when c_m = 0.
Eigen::ArrayXd compute_phases(const DisjunctionDataset& ds, const Eigen::ArrayXd& interference,
                              const Eigen::ArrayXd& lambda, Eigen::Index m, double c_m);

/// The two state vectors in C^(n+1), both unit norm and mutually orthogonal.
std::pair<ComplexVector, ComplexVector> build_state_vectors(const DisjunctionDataset& ds,
                                                            Eigen::Index m, double c_m,
                                                            const Eigen::ArrayXd& beta_deg);

/// M_k = coordinate projector onto {k} for k != m; M_m spans {m, n} (0-based),
/// the anchor coordinate plus the compensating dimension. The family is
/// pairwise disjoint and covers all n+1 coordinates.
std::vector<Projector> build_projectors(Eigen::Index n, Eigen::Index m);

/// Residuals |<A|M_k|A> - mu(A)_k|, |<B|M_k|B> - mu(B)_k| and
/// |1/2 <A+B|M_k|A+B> - mu(A or B)_k|, the disjunction state being
/// (1/sqrt 2)(|A> + |B>).
ReconstructionResiduals verify_reconstruction(const InterferenceFit& fit,
                                              const DisjunctionDataset& ds);

/// Per-exemplar labels: weakening for I_k < 0 (equivalently |b_k| >= 90 deg),
/// strengthening for I_k > 0, neutral for |I_k| <= neutral_eps. The phases
/// carry the same information and are accepted for interface symmetry.
std::vector<Effect> classify_interference(const Eigen::ArrayXd& interference,
                                          const Eigen::ArrayXd& beta_deg,
                                          double neutral_eps = 1e-12);

/// Indices sorted by |I_k| descending (ties by ascending index), for reports.
std::vector<Eigen::Index> order_by_interference_magnitude(const Eigen::ArrayXd& interference);

/// Full pipeline. Without signs, greedy balancing is used; user-supplied signs
/// must have one +1/-1 entry per exemplar (the anchor entry is normalized to
/// the convention above) and satisfy the balance constraint.
InterferenceFit fit_disjunction(const DisjunctionDataset& ds,
                                const std::optional<SignAssignment>& signs = {});

}  // namespace qcog
