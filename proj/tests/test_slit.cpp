#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "qcog/errors.hpp"
#include "qcog/slit.hpp"
#include "support/testutil.hpp"

using qcog::errc;
using testutil::thrown_code;

namespace {

qcog::SlitConfig sample_config() {
  return qcog::SlitConfig::with_default_grid(500e-9, 1e-4, 1.0, 5e-3);
}

// Trapezoid rule over a uniform grid.
double integrate(const Eigen::ArrayXd& x, const Eigen::ArrayXd& y) {
  double h = x[1] - x[0];
  return h * (y.sum() - 0.5 * (y[0] + y[y.size() - 1]));
}

}  // namespace

TEST_CASE("the default grid covers the slits plus eight sigmas") {
  auto cfg = sample_config();
  CHECK(cfg.x_min == doctest::Approx(-(5e-5 + 8 * 5e-3)).epsilon(1e-15));
  CHECK(cfg.x_max == doctest::Approx(5e-5 + 8 * 5e-3).epsilon(1e-15));
  CHECK(cfg.points == 2001);
}

TEST_CASE("configuration validation rejects non-positive parameters") {
  auto good = sample_config();
  qcog::validate_config(good);

  auto bad = good;
  bad.wavelength = 0.0;
  CHECK(thrown_code([&] { qcog::validate_config(bad); }) == errc::invalid_config);
  bad = good;
  bad.separation = -1e-4;
  CHECK(thrown_code([&] { qcog::validate_config(bad); }) == errc::invalid_config);
  bad = good;
  bad.distance = 0.0;
  CHECK(thrown_code([&] { qcog::validate_config(bad); }) == errc::invalid_config);
  bad = good;
  bad.sigma = 0.0;
  CHECK(thrown_code([&] { qcog::validate_config(bad); }) == errc::invalid_config);
  bad = good;
  bad.points = 1;
  CHECK(thrown_code([&] { qcog::validate_config(bad); }) == errc::invalid_config);
  bad = good;
  bad.x_max = bad.x_min;
  CHECK(thrown_code([&] { qcog::validate_config(bad); }) == errc::invalid_config);
  bad = good;
  bad.sigma = std::numeric_limits<double>::infinity();
  CHECK(thrown_code([&] { qcog::validate_config(bad); }) == errc::invalid_config);
}

TEST_CASE("single-slit amplitudes have the documented envelope and symmetry") {
  auto cfg = sample_config();
  double norm = std::pow(2.0 * std::numbers::pi * cfg.sigma * cfg.sigma, -0.25);

  // At its own image point each slit reaches the full envelope height.
  CHECK(std::abs(qcog::wave_amplitude(cfg, qcog::Slit::A, -cfg.separation / 2)) ==
        doctest::Approx(norm).epsilon(1e-12));
  CHECK(std::abs(qcog::wave_amplitude(cfg, qcog::Slit::B, cfg.separation / 2)) ==
        doctest::Approx(norm).epsilon(1e-12));

  // Mirror symmetry between the slits.
  for (double x : {0.0, 1e-3, -2.5e-3, 7e-3}) {
    CHECK(std::abs(qcog::wave_amplitude(cfg, qcog::Slit::A, x)) ==
          doctest::Approx(std::abs(qcog::wave_amplitude(cfg, qcog::Slit::B, -x)))
              .epsilon(1e-12));
  }

  // One sigma off-center the envelope drops by exp(-1/4).
  double at_sigma =
      std::abs(qcog::wave_amplitude(cfg, qcog::Slit::A, -cfg.separation / 2 + cfg.sigma));
  CHECK(at_sigma == doctest::Approx(norm * std::exp(-0.25)).epsilon(1e-12));
}

TEST_CASE("each single-slit intensity integrates to one") {
  auto cfg = qcog::SlitConfig::with_default_grid(500e-9, 1e-4, 1.0, 5e-3, 20001);
  auto profile = qcog::screen_profile(cfg);
  CHECK(std::abs(integrate(profile.x, profile.rho_a) - 1.0) < 1e-6);
  CHECK(std::abs(integrate(profile.x, profile.rho_b) - 1.0) < 1e-6);
  // The classical mixture inherits unit mass.
  CHECK(std::abs(integrate(profile.x, profile.rho_classical) - 1.0) < 1e-6);
}

TEST_CASE("profile identity, positivity, and grid symmetry") {
  auto profile = qcog::screen_profile(sample_config());
  REQUIRE(profile.x.size() == 2001);
  Eigen::Index n = profile.x.size();

  // Endpoints exact, midpoint exactly zero, grid exactly mirrored.
  CHECK(profile.x[0] == sample_config().x_min);
  CHECK(profile.x[n - 1] == sample_config().x_max);
  CHECK(profile.x[(n - 1) / 2] == 0.0);
  for (Eigen::Index i = 0; i < n; ++i) CHECK(profile.x[i] == -profile.x[n - 1 - i]);

  for (Eigen::Index i = 0; i < n; ++i) {
    CHECK(profile.rho_quantum[i] >= 0.0);
    double identity = profile.rho_classical[i] + profile.interference[i];
    CHECK(std::abs(profile.rho_quantum[i] - identity) <= 1e-12);
    // The configuration is mirror-symmetric, so every curve is even.
    CHECK(std::abs(profile.rho_quantum[i] - profile.rho_quantum[n - 1 - i]) <= 1e-12);
    CHECK(std::abs(profile.rho_a[i] - profile.rho_b[n - 1 - i]) <= 1e-12);
  }

  // Both paths open and in phase at the center: the quantum density doubles
  // the classical one.
  Eigen::Index mid = (n - 1) / 2;
  CHECK(profile.interference[mid] > 0.0);
  CHECK(profile.rho_quantum[mid] ==
        doctest::Approx(2.0 * profile.rho_classical[mid]).epsilon(1e-9));
}

TEST_CASE("closing one slit leaves half the single-slit density") {
  auto cfg = sample_config();
  auto profile = qcog::screen_profile(cfg);
  for (Eigen::Index i = 0; i < profile.x.size(); i += 250) {
    auto psi_a = qcog::wave_amplitude(cfg, qcog::Slit::A, profile.x[i]);
    CHECK(profile.rho_a[i] == doctest::Approx(std::norm(psi_a)).epsilon(1e-12));
    // With psi_B removed the detection density is |psi_A|^2 / 2.
    CHECK(0.5 * profile.rho_a[i] <= profile.rho_classical[i] + 1e-15);
  }
}

TEST_CASE("fringe spacing tracks wavelength * distance / separation") {
  // Dense symmetric grid so local maxima are resolved well.
  auto cfg = qcog::SlitConfig::with_default_grid(500e-9, 1e-4, 1.0, 5e-3, 25001);
  cfg.x_min = -0.025;
  cfg.x_max = 0.025;
  auto profile = qcog::screen_profile(cfg);

  std::vector<double> maxima;
  for (Eigen::Index i = 1; i + 1 < profile.x.size(); ++i) {
    if (profile.x[i] <= 0.0) continue;
    if (profile.rho_quantum[i] > profile.rho_quantum[i - 1] &&
        profile.rho_quantum[i] > profile.rho_quantum[i + 1]) {
      maxima.push_back(profile.x[i]);
    }
  }
  REQUIRE(maxima.size() >= 3);
  double expected = 500e-9 * 1.0 / 1e-4;  // 5 mm
  CHECK(std::abs(maxima[0] - expected) / expected < 0.05);
  for (std::size_t i = 0; i + 1 < maxima.size() && i < 2; ++i) {
    double spacing = maxima[i + 1] - maxima[i];
    CHECK(std::abs(spacing - expected) / expected < 0.05);
  }
}

TEST_CASE("interference oscillates: both signs occur away from the slits") {
  auto profile = qcog::screen_profile(sample_config());
  bool positive = false;
  bool negative = false;
  for (Eigen::Index i = 0; i < profile.x.size(); ++i) {
    if (profile.interference[i] > 1e-6) positive = true;
    if (profile.interference[i] < -1e-6) negative = true;
  }
  CHECK(positive);
  CHECK(negative);
}
