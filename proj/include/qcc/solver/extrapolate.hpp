/*******************************************************************************
 * Copyright (c) 2026 The qcc-engine Authors.                                  *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#pragma once

#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "qcc/error.hpp"
#include "qcc/solver/qcc.hpp"

namespace qcc::solver {

/// Exponential-decay model of a converging energy sequence,
///
///   log10(E^(i) - E_0)         = a i + b
///   log10(E^(i-1) - E^(i))     = a i + b + log10(10^-a - 1)
///
/// fitted on the successive differences.
struct ExtrapolationResult {
  double a = 0.0;            ///< decay slope per iteration (negative)
  double b = 0.0;            ///< intercept of log10(E^(i) - E_0)
  double difference_intercept = 0.0; ///< intercept of the difference line
  double e0_estimate = 0.0;  ///< Hartree
  double residual = 0.0;     ///< RMS of the log10 fit residuals
  std::size_t discard = 0;
  std::size_t window = 0;

  struct Crossing {
    double threshold = 0.0;       ///< Hartree
    double fractional_iteration = 0.0;
    std::size_t iteration = 0;    ///< first whole iteration below threshold
    double expected_energy = 0.0; ///< E_0 + 10^(a i + b) at that iteration
  };
  std::vector<Crossing> crossings;

  /// Fitted E^(i).
  double energy_at(double i) const { return e0_estimate + std::pow(10.0, a * i + b); }
  /// Fitted E^(i-1) - E^(i).
  double difference_at(double i) const {
    return std::pow(10.0, a * i + difference_intercept);
  }
};

inline constexpr std::size_t kDefaultDiscard = 5;
inline constexpr std::size_t kDefaultWindow = 35;
inline const std::vector<double> kDefaultThresholds{1.6e-3, 1.6e-4};

/// Fits the differences d_i = E^(i-1) - E^(i) for i in
/// [discard + 1, discard + window], where energies[0] = E^(0).
inline ExtrapolationResult
extrapolate(const std::vector<double> &energies,
            std::size_t discard = kDefaultDiscard,
            std::size_t window = kDefaultWindow,
            const std::vector<double> &thresholds = kDefaultThresholds) {
  if (window < 3)
    throw ConfigError("extrapolate: window must hold at least 3 iterations");
  const std::size_t n_iter = energies.empty() ? 0 : energies.size() - 1;
  if (discard + window > n_iter)
    throw ConfigError("extrapolate: discard + window = " +
                      std::to_string(discard + window) + " exceeds the " +
                      std::to_string(n_iter) + " recorded iterations");

  std::vector<double> xs, ys;
  std::string bad;
  for (std::size_t i = discard + 1; i <= discard + window; ++i) {
    const double d = energies[i - 1] - energies[i];
    if (!(d > 0.0) || !std::isfinite(d)) {
      bad += (bad.empty() ? "" : ", ") + std::to_string(i);
      continue;
    }
    xs.push_back(static_cast<double>(i));
    ys.push_back(std::log10(d));
  }
  if (!bad.empty())
    throw NumericError(
        "extrapolate: energy differences are not strictly positive at "
        "iterations " + bad);

  const double n = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    sx += xs[k];
    sy += ys[k];
    sxx += xs[k] * xs[k];
    sxy += xs[k] * ys[k];
  }
  ExtrapolationResult r;
  r.discard = discard;
  r.window = window;
  r.a = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  r.difference_intercept = (sy - r.a * sx) / n;
  if (!(r.a < 0.0))
    throw NumericError("extrapolate: differences are not decaying (a = " +
                       std::to_string(r.a) + ")");
  r.b = r.difference_intercept - std::log10(std::pow(10.0, -r.a) - 1.0);

  double ss = 0.0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    const double e = ys[k] - (r.a * xs[k] + r.difference_intercept);
    ss += e * e;
  }
  r.residual = std::sqrt(ss / n);

  const std::size_t last = discard + window;
  r.e0_estimate =
      energies[last] - std::pow(10.0, r.a * static_cast<double>(last) + r.b);

  for (double thr : thresholds) {
    if (!(thr > 0.0))
      throw ConfigError("extrapolate: thresholds must be positive");
    ExtrapolationResult::Crossing c;
    c.threshold = thr;
    c.fractional_iteration = (std::log10(thr) - r.difference_intercept) / r.a;
    c.iteration = c.fractional_iteration <= 0.0
                      ? 0
                      : static_cast<std::size_t>(std::ceil(c.fractional_iteration));
    c.expected_energy = r.energy_at(static_cast<double>(c.iteration));
    r.crossings.push_back(c);
  }
  return r;
}

inline ExtrapolationResult
extrapolate(const QccTrace &trace, std::size_t discard = kDefaultDiscard,
            std::size_t window = kDefaultWindow,
            const std::vector<double> &thresholds = kDefaultThresholds) {
  return extrapolate(trace.energies(), discard, window, thresholds);
}

} // namespace qcc::solver
