#pragma once

#include <Eigen/Core>

#include <complex>

namespace qcog {

/// Double-slit geometry and screen sampling grid. Slit images sit at
/// x = -separation/2 (slit A) and x = +separation/2 (slit B); each single-slit
/// amplitude is a Gaussian envelope of width sigma around its image with a
/// path-length phase, screen at distance `distance`. All lengths in meters.
struct SlitConfig {
  double wavelength = 500e-9;
  double separation = 1e-4;
  double distance = 1.0;
  double sigma = 5e-3;
  double x_min = 0.0;
  double x_max = 0.0;
  Eigen::Index points = 2001;

  /// Grid spanning 8 sigma beyond the outer slit images, which captures all
  /// but ~1e-14 of each Gaussian mass.
  static SlitConfig with_default_grid(double wavelength, double separation, double distance,
                                      double sigma, Eigen::Index points = 2001);
};

/// Raises InvalidConfig unless all lengths are positive, points >= 2 and the
/// grid has positive width.
void validate_config(const SlitConfig& cfg);

enum class Slit { A, B };

/// psi_j(x) = N exp(-(x - a_j)^2 / (4 sigma^2)) exp(i k r_j(x)) with
/// a_A = -s/2, a_B = +s/2, k = 2 pi / wavelength, r_j(x) the slit-to-point
/// distance sqrt(L^2 + (x - a_j)^2), and N = (2 pi sigma^2)^(-1/4) so that
/// the squared modulus integrates to 1 over the real line.
std::complex<double> wave_amplitude(const SlitConfig& cfg, Slit slit, double x);

/// All five curves sampled on the grid. rho_quantum is computed directly as
/// half the squared modulus of the summed amplitude, so it is nonnegative by
/// construction and matches rho_classical + interference to rounding.
struct ScreenProfile {
  Eigen::ArrayXd x;
  Eigen::ArrayXd rho_a;          // |psi_A|^2
  Eigen::ArrayXd rho_b;          // |psi_B|^2
  Eigen::ArrayXd rho_classical;  // (rho_a + rho_b) / 2
  Eigen::ArrayXd rho_quantum;    // |psi_A + psi_B|^2 / 2
  Eigen::ArrayXd interference;   // Re(conj(psi_A) psi_B)
};

ScreenProfile screen_profile(const SlitConfig& cfg);

}  // namespace qcog
