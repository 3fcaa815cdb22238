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
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "qcc/chem/integrals.hpp"
#include "qcc/error.hpp"

namespace qcc::chem {

/// Active-space Hamiltonian data: the inactive Fock matrix, the active slice
/// of the two-electron integrals, and the scalar energy offsets.
struct ActiveSpaceProblem {
  std::size_t n_active_orbitals = 0;
  std::size_t n_active_electrons = 0;
  std::vector<std::size_t> window; ///< active orbital indices (0-based)
  Eigen::MatrixXd f_inactive;      ///< F^I_uv, Hartree
  Tensor4 g_active;                ///< (uv|xy) over the window, Hartree
  double e_inactive = 0.0;
  double e_nuclear = 0.0;

  std::size_t n_spin_orbitals() const { return 2 * n_active_orbitals; }
};

/// Orbitals [n_inactive, n_inactive + n_active_orbitals) for a CAS(e, o)
/// request on a closed-shell reference.
inline std::vector<std::size_t> cas_window(const ElectronIntegrals &ints,
                                           std::size_t n_active_electrons,
                                           std::size_t n_active_orbitals) {
  if (n_active_electrons > ints.n_electrons)
    throw ConfigError("CAS: more active electrons than electrons");
  const std::size_t inactive_e = ints.n_electrons - n_active_electrons;
  if (inactive_e % 2)
    throw ConfigError("CAS: odd number of inactive electrons (" +
                      std::to_string(inactive_e) + ")");
  const std::size_t first = inactive_e / 2;
  if (first + n_active_orbitals > ints.n_orbitals)
    throw ConfigError("CAS: window [" + std::to_string(first) + ", " +
                      std::to_string(first + n_active_orbitals) +
                      ") exceeds " + std::to_string(ints.n_orbitals) +
                      " orbitals");
  std::vector<std::size_t> window(n_active_orbitals);
  std::iota(window.begin(), window.end(), first);
  return window;
}

/// Folds the doubly occupied inactive orbitals into a one-body operator and
/// a scalar:
///
///   F^I_uv     = h_uv + sum_i (2 (ii|uv) - (iv|ui))
///   E_inactive = 1/2 sum_ij (h_ij + F^I_ij) D^I_ij,  D^I_ij = 2 delta_ij
///
/// The inactive orbitals are the lowest (n_electrons - n_active_electrons)/2
/// orbitals and must not overlap the window.
inline ActiveSpaceProblem cas_reduce(const ElectronIntegrals &ints,
                                     const std::vector<std::size_t> &window,
                                     std::size_t n_active_electrons) {
  if (window.empty())
    throw ConfigError("CAS: empty active window");
  std::set<std::size_t> unique(window.begin(), window.end());
  if (unique.size() != window.size())
    throw ConfigError("CAS: duplicate orbital in active window");
  if (*unique.rbegin() >= ints.n_orbitals)
    throw ConfigError("CAS: window orbital " +
                      std::to_string(*unique.rbegin()) + " exceeds " +
                      std::to_string(ints.n_orbitals) + " orbitals");
  if (n_active_electrons > ints.n_electrons)
    throw ConfigError("CAS: more active electrons than electrons");
  if (n_active_electrons > 2 * window.size())
    throw ConfigError("CAS: active electrons do not fit in the window");
  const std::size_t inactive_e = ints.n_electrons - n_active_electrons;
  if (inactive_e % 2)
    throw ConfigError("CAS: odd number of inactive electrons (" +
                      std::to_string(inactive_e) + ")");
  const std::size_t n_inactive = inactive_e / 2;
  for (std::size_t i = 0; i < n_inactive; ++i)
    if (unique.count(i))
      throw ConfigError("CAS: inactive orbital " + std::to_string(i) +
                        " lies inside the active window");

  const auto &h = ints.h1;
  const auto &g = ints.g2;
  auto fock = [&](std::size_t p, std::size_t q) {
    double f = h(p, q);
    for (std::size_t i = 0; i < n_inactive; ++i)
      f += 2.0 * g(i, i, p, q) - g(i, q, p, i);
    return f;
  };

  ActiveSpaceProblem prob;
  prob.n_active_orbitals = window.size();
  prob.n_active_electrons = n_active_electrons;
  prob.window = window;
  prob.e_nuclear = ints.e_nuclear;

  const std::size_t o = window.size();
  prob.f_inactive = Eigen::MatrixXd::Zero(o, o);
  for (std::size_t u = 0; u < o; ++u)
    for (std::size_t v = 0; v < o; ++v)
      prob.f_inactive(u, v) = fock(window[u], window[v]);

  prob.g_active = Tensor4(o);
  for (std::size_t u = 0; u < o; ++u)
    for (std::size_t v = 0; v < o; ++v)
      for (std::size_t x = 0; x < o; ++x)
        for (std::size_t y = 0; y < o; ++y)
          prob.g_active(u, v, x, y) =
              g(window[u], window[v], window[x], window[y]);

  double e = 0.0;
  for (std::size_t i = 0; i < n_inactive; ++i)
    e += 0.5 * (h(i, i) + fock(i, i)) * 2.0;
  prob.e_inactive = e;
  return prob;
}

/// CAS(e, o) with the contiguous window directly above the inactive space.
inline ActiveSpaceProblem cas_reduce(const ElectronIntegrals &ints,
                                     std::size_t n_active_electrons,
                                     std::size_t n_active_orbitals) {
  return cas_reduce(ints, cas_window(ints, n_active_electrons, n_active_orbitals),
                    n_active_electrons);
}

/// The whole orbital space as the active space.
inline ActiveSpaceProblem full_space(const ElectronIntegrals &ints) {
  return cas_reduce(ints, ints.n_electrons, ints.n_orbitals);
}

inline nlohmann::json to_json(const ActiveSpaceProblem &p) {
  const std::size_t o = p.n_active_orbitals;
  std::vector<double> f(o * o);
  for (std::size_t u = 0; u < o; ++u)
    for (std::size_t v = 0; v < o; ++v)
      f[u * o + v] = p.f_inactive(u, v);
  return {{"schema_version", 1},
          {"n_active_orbitals", o},
          {"n_active_electrons", p.n_active_electrons},
          {"window", p.window},
          {"f_inactive", f},
          {"g_active", p.g_active.data()},
          {"e_inactive", p.e_inactive},
          {"e_nuclear", p.e_nuclear}};
}

inline ActiveSpaceProblem active_space_from_json(const nlohmann::json &j) {
  try {
    ActiveSpaceProblem p;
    p.n_active_orbitals = j.at("n_active_orbitals").get<std::size_t>();
    p.n_active_electrons = j.at("n_active_electrons").get<std::size_t>();
    p.window = j.at("window").get<std::vector<std::size_t>>();
    const std::size_t o = p.n_active_orbitals;
    const auto f = j.at("f_inactive").get<std::vector<double>>();
    const auto g = j.at("g_active").get<std::vector<double>>();
    if (f.size() != o * o || g.size() != o * o * o * o || p.window.size() != o)
      throw ParseError("active space JSON: tensor sizes do not match "
                       "n_active_orbitals");
    p.f_inactive = Eigen::MatrixXd(o, o);
    for (std::size_t u = 0; u < o; ++u)
      for (std::size_t v = 0; v < o; ++v)
        p.f_inactive(u, v) = f[u * o + v];
    p.g_active = Tensor4(o);
    p.g_active.data() = g;
    p.e_inactive = j.at("e_inactive").get<double>();
    p.e_nuclear = j.at("e_nuclear").get<double>();
    return p;
  } catch (const nlohmann::json::exception &e) {
    throw ParseError(std::string("active space JSON: ") + e.what());
  }
}

} // namespace qcc::chem
