#pragma once

// Shared helpers for the unit and acceptance suites: error-code capture,
// random dataset generators, and synthetic corpus builders. All randomness
// flows through a caller-owned engine so each test pins its own seed.

#include <Eigen/Core>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "qcog/chsh.hpp"
#include "qcog/corpus.hpp"
#include "qcog/dataset.hpp"
#include "qcog/errors.hpp"

namespace testutil {

using Rng = std::mt19937_64;

/// Runs f and returns the qcog error code it throws, if any.
template <typename F>
std::optional<qcog::errc> thrown_code(F&& f) {
  try {
    std::forward<F>(f)();
  } catch (const qcog::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

/// Uniform point on the probability simplex (normalized exponential draws).
inline Eigen::ArrayXd random_simplex(Rng& rng, Eigen::Index n) {
  std::exponential_distribution<double> exp1(1.0);
  Eigen::ArrayXd weights(n);
  for (Eigen::Index i = 0; i < n; ++i) weights[i] = exp1(rng);
  return weights / weights.sum();
}

/// Random dataset guaranteed to admit the Hilbert-space construction:
/// mu_a_or_b deviates from the classical average by a zero-sum perturbation
/// t with |t_k| <= 0.9 sqrt(mu_a_k mu_b_k). The AM-GM inequality keeps
/// mu_a_or_b nonnegative automatically; draws are rejected defensively.
inline qcog::RawDataset random_representable_dataset(Rng& rng, Eigen::Index n) {
  while (true) {
    Eigen::ArrayXd mu_a = random_simplex(rng, n);
    Eigen::ArrayXd mu_b = random_simplex(rng, n);
    Eigen::ArrayXd bound = 0.9 * (mu_a * mu_b).sqrt();
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    Eigen::ArrayXd t(n);
    for (Eigen::Index i = 0; i < n; ++i) t[i] = bound[i] * unit(rng);
    // Zero-sum projection: shift each entry proportionally to its remaining
    // slack toward the violated side, which preserves |t_k| <= bound_k.
    for (int pass = 0; pass < 64; ++pass) {
      double sum = t.sum();
      if (std::abs(sum) <= 1e-16) break;
      Eigen::ArrayXd slack = sum > 0.0 ? (t + bound).eval() : (bound - t).eval();
      double total = slack.sum();
      if (total <= 0.0) break;
      t -= sum * slack / total;
    }
    Eigen::ArrayXd mu_a_or_b = (mu_a + mu_b) / 2.0 + t;
    if ((mu_a_or_b < 0.0).any() || std::abs(t.sum()) > 1e-12) continue;

    qcog::RawDataset raw;
    for (Eigen::Index i = 0; i < n; ++i) raw.exemplars.push_back("e" + std::to_string(i));
    raw.mu_a = mu_a;
    raw.mu_b = mu_b;
    raw.mu_a_or_b = mu_a_or_b;
    return raw;
  }
}

/// Uniform +/-1 signs repaired until |sum_{k != m} lambda_k| <= |lambda_m|:
/// while violated, flip the largest contributor on the majority side. Every
/// flip shrinks |sum| strictly, so the loop terminates.
inline std::vector<int> random_valid_signs(Rng& rng, const Eigen::ArrayXd& lambda_abs,
                                           Eigen::Index m) {
  std::uniform_int_distribution<int> coin(0, 1);
  std::vector<int> signs(static_cast<std::size_t>(lambda_abs.size()), 1);
  for (auto& s : signs) s = coin(rng) == 0 ? 1 : -1;
  while (true) {
    double sum = 0.0;
    for (Eigen::Index k = 0; k < lambda_abs.size(); ++k) {
      if (k != m) sum += signs[static_cast<std::size_t>(k)] * lambda_abs[k];
    }
    if (std::abs(sum) <= lambda_abs[m]) return signs;
    Eigen::Index flip = -1;
    for (Eigen::Index k = 0; k < lambda_abs.size(); ++k) {
      if (k == m) continue;
      if (signs[static_cast<std::size_t>(k)] * lambda_abs[k] * sum <= 0.0) continue;
      if (flip < 0 || lambda_abs[k] > lambda_abs[flip]) flip = k;
    }
    signs[static_cast<std::size_t>(flip)] *= -1;
  }
}

/// Corpus whose coincidence tables reproduce the given multiplicities: cell
/// (i, j) of each experiment contributes n_ij documents holding exactly the
/// phrase "subject_i verb_j".
inline qcog::Corpus synthetic_corpus(const std::array<qcog::CoincidenceCounts, 4>& tables) {
  qcog::Corpus corpus;
  corpus.source = "synthetic";
  std::uint64_t serial = 0;
  auto add = [&](const std::string& subject, const std::string& verb, std::uint64_t count) {
    for (std::uint64_t i = 0; i < count; ++i) {
      corpus.documents.push_back(
          {"d" + std::to_string(++serial), "The " + subject + " " + verb + "."});
    }
  };
  for (const auto& t : tables) {
    add(t.outcomes.x1, t.outcomes.y1, t.n11);
    add(t.outcomes.x1, t.outcomes.y2, t.n12);
    add(t.outcomes.x2, t.outcomes.y1, t.n21);
    add(t.outcomes.x2, t.outcomes.y2, t.n22);
  }
  return corpus;
}

/// Corpus of single-word documents with the given multiplicities.
inline qcog::Corpus synthetic_word_corpus(
    const std::vector<std::pair<std::string, std::uint64_t>>& words) {
  qcog::Corpus corpus;
  corpus.source = "synthetic-words";
  std::uint64_t serial = 0;
  for (const auto& [word, count] : words) {
    for (std::uint64_t i = 0; i < count; ++i) {
      corpus.documents.push_back({"d" + std::to_string(++serial), word});
    }
  }
  return corpus;
}

}  // namespace testutil
