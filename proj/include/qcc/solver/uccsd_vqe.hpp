/*******************************************************************************
 * Copyright (c) 2026 The qcc-engine Authors.                                  *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#pragma once

#include <vector>

#include "qcc/chem/uccsd.hpp"
#include "qcc/solver/qcc.hpp"

namespace qcc::solver {

/// Single-Trotter-step UCCSD circuit: each amplitude t multiplies its
/// generator i sum_k w_k P_k, and exp(t i w_k P_k) = exp(-i (-2 t w_k) P_k/2).
inline std::vector<Rotation>
uccsd_rotations(const std::vector<chem::AmplitudeGenerator> &generators,
                const std::vector<double> &amplitudes) {
  if (generators.size() != amplitudes.size())
    throw std::invalid_argument("uccsd_rotations: amplitude count mismatch");
  std::vector<Rotation> rot;
  for (std::size_t j = 0; j < generators.size(); ++j)
    for (const auto &[p, w] : generators[j].terms)
      rot.push_back({p, -2.0 * amplitudes[j] * w});
  return rot;
}

struct UccsdResult {
  double energy = 0.0;
  double energy_at_zero = 0.0;
  std::vector<double> amplitudes;
  std::size_t evaluations = 0;
  bool converged = false;
};

/// Variational UCCSD energy, simplex-optimized from zero amplitudes.
inline UccsdResult
uccsd_vqe(const QubitHamiltonian &h, const Statevector &ref,
          const std::vector<chem::AmplitudeGenerator> &generators,
          const OptimizerSettings &settings = {}, std::uint64_t seed = 7) {
  auto energy = [&](const std::vector<double> &t) {
    return circuit_energy(h, ref, uccsd_rotations(generators, t));
  };
  UccsdResult out;
  const std::vector<double> zero(generators.size(), 0.0);
  out.energy_at_zero = energy(zero);
  out.energy = out.energy_at_zero;
  out.amplitudes = zero;
  if (generators.empty())
    return out;
  const auto m = generators.size() == 1
                     ? golden_section([&](double t) { return energy({t}); },
                                      settings)
                     : minimize_box(energy, zero, settings, seed);
  out.evaluations = m.evaluations + 1;
  out.converged = m.converged;
  if (m.value < out.energy - kMinimumImprovement) {
    out.energy = m.value;
    out.amplitudes = m.x;
  }
  return out;
}

} // namespace qcc::solver
