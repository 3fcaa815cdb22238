/*******************************************************************************
 * Copyright (c) 2026 The qcc-engine Authors.                                  *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

namespace qcc::solver {

struct OptimizerSettings {
  double lower = -std::numbers::pi;
  double upper = std::numbers::pi;
  double tolerance = 1e-10;       ///< on the parameters (radians)
  std::size_t grid_points = 24;   ///< 1-D bracketing scan
  std::size_t max_evaluations = 20000;
  std::size_t restarts = 1;       ///< simplex restarts from random points
  double initial_step = 0.5;      ///< simplex edge length (radians)
};

/// Energy drop below which a move away from tau = 0 is treated as rounding
/// noise and the zero point is kept.
inline constexpr double kMinimumImprovement = 1e-12;

struct MinimizeResult {
  std::vector<double> x;
  double value = std::numeric_limits<double>::infinity();
  std::size_t evaluations = 0;
  bool converged = false;
};

/// Bounded 1-D minimization: a uniform scan (which always contains 0 when
/// it lies in the interval) brackets the best cell, then golden-section
/// search refines it.
inline MinimizeResult golden_section(const std::function<double(double)> &f,
                                     const OptimizerSettings &s) {
  MinimizeResult r;
  auto eval = [&](double x) {
    ++r.evaluations;
    const double v = f(x);
    if (v < r.value) {
      r.value = v;
      r.x = {x};
    }
    return v;
  };

  const std::size_t n = std::max<std::size_t>(s.grid_points, 3);
  const double h = (s.upper - s.lower) / static_cast<double>(n - 1);
  std::vector<double> grid(n);
  std::size_t best = 0;
  for (std::size_t k = 0; k < n; ++k) {
    grid[k] = eval(s.lower + h * static_cast<double>(k));
    if (grid[k] < grid[best])
      best = k;
  }
  if (s.lower <= 0.0 && 0.0 <= s.upper)
    eval(0.0);

  double a = s.lower + h * static_cast<double>(best == 0 ? 0 : best - 1);
  double b = s.lower + h * static_cast<double>(std::min(best + 1, n - 1));
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = eval(c), fd = eval(d);
  while (b - a > s.tolerance && r.evaluations < s.max_evaluations) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = eval(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = eval(d);
    }
  }
  eval(0.5 * (a + b));
  r.converged = b - a <= s.tolerance;
  return r;
}

/// Nelder-Mead simplex on the box [lower, upper]^n; trial points are
/// clamped into the box.
inline MinimizeResult
nelder_mead(const std::function<double(const std::vector<double> &)> &f,
            std::vector<double> start, const OptimizerSettings &s,
            std::size_t budget) {
  const std::size_t n = start.size();
  MinimizeResult r;
  auto clamp = [&](std::vector<double> &x) {
    for (auto &v : x)
      v = std::clamp(v, s.lower, s.upper);
  };
  auto eval = [&](std::vector<double> x) {
    clamp(x);
    ++r.evaluations;
    const double v = f(x);
    if (v < r.value) {
      r.value = v;
      r.x = x;
    }
    return std::pair{v, x};
  };

  std::vector<std::pair<double, std::vector<double>>> simplex;
  simplex.push_back(eval(start));
  for (std::size_t i = 0; i < n; ++i) {
    auto x = start;
    x[i] += (x[i] + s.initial_step <= s.upper) ? s.initial_step
                                               : -s.initial_step;
    simplex.push_back(eval(x));
  }

  auto order = [&] {
    std::sort(simplex.begin(), simplex.end(),
              [](const auto &l, const auto &r) { return l.first < r.first; });
  };
  while (r.evaluations < budget) {
    order();
    double spread = 0.0;
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        spread = std::max(spread, std::abs(simplex[i].second[k] -
                                           simplex[0].second[k]));
    if (spread < s.tolerance ||
        simplex[n].first - simplex[0].first < 1e-15) {
      r.converged = true;
      break;
    }
    std::vector<double> centroid(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        centroid[k] += simplex[i].second[k] / static_cast<double>(n);
    auto along = [&](double t) {
      std::vector<double> x(n);
      for (std::size_t k = 0; k < n; ++k)
        x[k] = centroid[k] + t * (simplex[n].second[k] - centroid[k]);
      return x;
    };
    auto refl = eval(along(-1.0));
    if (refl.first < simplex[0].first) {
      auto exp = eval(along(-2.0));
      simplex[n] = exp.first < refl.first ? exp : refl;
    } else if (refl.first < simplex[n - 1].first) {
      simplex[n] = refl;
    } else {
      auto con = refl.first < simplex[n].first ? eval(along(-0.5))
                                               : eval(along(0.5));
      if (con.first < std::min(refl.first, simplex[n].first)) {
        simplex[n] = con;
      } else {
        for (std::size_t i = 1; i <= n; ++i) {
          std::vector<double> x(n);
          for (std::size_t k = 0; k < n; ++k)
            x[k] = simplex[0].second[k] +
                   0.5 * (simplex[i].second[k] - simplex[0].second[k]);
          simplex[i] = eval(x);
        }
      }
    }
  }
  return r;
}

/// Simplex from `start`, then `restarts` more runs from seeded random points
/// in the box; the best run is polished with one more simplex pass.
inline MinimizeResult
minimize_box(const std::function<double(const std::vector<double> &)> &f,
             const std::vector<double> &start, const OptimizerSettings &s,
             std::uint64_t seed) {
  const std::size_t per_run =
      std::max<std::size_t>(s.max_evaluations / (s.restarts + 2), 50);
  MinimizeResult best = nelder_mead(f, start, s, per_run);
  std::size_t total = best.evaluations;
  std::mt19937_64 rng(seed);
  for (std::size_t k = 0; k < s.restarts; ++k) {
    std::vector<double> x(start.size());
    for (auto &v : x)
      v = s.lower + (s.upper - s.lower) *
                        (static_cast<double>(rng() >> 11) * 0x1.0p-53);
    auto run = nelder_mead(f, x, s, per_run);
    total += run.evaluations;
    if (run.value < best.value)
      best = run;
  }
  auto polish = nelder_mead(f, best.x, s, per_run);
  total += polish.evaluations;
  if (polish.value <= best.value)
    best = polish;
  best.evaluations = total;
  return best;
}

} // namespace qcc::solver
