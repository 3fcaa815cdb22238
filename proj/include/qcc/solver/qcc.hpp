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
#include <string>
#include <vector>

#include "qcc/error.hpp"
#include "qcc/hamiltonian.hpp"
#include "qcc/sim/statevector.hpp"
#include "qcc/solver/optimize.hpp"

namespace qcc::solver {

using pauli::FlipSet;
using pauli::PauliString;
using pauli::QubitHamiltonian;
using pauli::Rotation;
using sim::Statevector;

struct QccConfig {
  std::size_t generators_per_iteration = 1;
  std::size_t max_iterations = 50;
  double energy_tolerance = 1e-6;   ///< Hartree
  double prune_threshold = pauli::kDefaultPruneThreshold;
  double gradient_threshold = 1e-10; ///< candidates below are discarded
  OptimizerSettings optimizer;
  std::uint64_t seed = 7;

  void validate() const {
    if (generators_per_iteration < 1)
      throw ConfigError("generators_per_iteration must be >= 1");
    if (!(energy_tolerance > 0.0))
      throw ConfigError("energy_tolerance must be > 0");
    if (!(prune_threshold >= 0.0) || !(gradient_threshold >= 0.0))
      throw ConfigError("thresholds must be non-negative");
    if (!(optimizer.lower < optimizer.upper))
      throw ConfigError("optimizer bounds are empty");
  }
};

/// Flip-set representative and its energy gradient at tau = 0.
struct CandidateGenerator {
  FlipSet flip_set;
  PauliString representative;
  double gradient = 0.0; ///< signed dE/dtau, Hartree per radian
  double gradient_magnitude = 0.0;
};

/// Y on the lowest flipped qubit, X on the others: odd Y-count, so the
/// generator is real and can couple a real Hamiltonian to the reference.
inline PauliString flip_representative(std::size_t n_qubits, FlipSet f) {
  if (f.empty())
    throw std::invalid_argument("flip_representative: empty flip set");
  const std::uint64_t lowest = f.mask & (~f.mask + 1);
  return PauliString(n_qubits, f.mask, lowest);
}

/// C Im <b|Q P|b> for one Hamiltonian term C Q with the same flips as P.
/// QP is diagonal, so <b|QP|b> = phase * (-1)^{|z & b|}.
inline double gradient_contribution(const PauliString &q, double c,
                                    const PauliString &p, std::uint64_t b) {
  const auto qp = pauli::multiply(q, p);
  const double sign = (std::popcount(qp.string.z_mask() & b) & 1) ? -c : c;
  switch (qp.phase.power()) {
  case 1:
    return sign;
  case 3:
    return -sign;
  default:
    return 0.0;
  }
}

/// dE/dtau at tau = 0 for exp(-i tau P / 2) on a basis reference |b>,
/// sum_k C_k Im <b|P_k P|b>. Only terms whose flips match P contribute.
inline double reference_gradient(const QubitHamiltonian &h,
                                 const PauliString &p, std::uint64_t b) {
  double g = 0.0;
  for (const auto &[q, c] : h)
    if (q.x_mask() == p.x_mask())
      g += gradient_contribution(q, c, p, b);
  return g;
}

inline std::uint64_t require_basis_state(const Statevector &ref) {
  const auto idx = ref.basis_index();
  if (idx < 0)
    throw std::invalid_argument(
        "reference must be a computational basis state");
  return static_cast<std::uint64_t>(idx);
}

/// One candidate per non-diagonal flip group of h, scored against the basis
/// reference and sorted by descending |gradient| (ties: canonical order).
inline std::vector<CandidateGenerator>
screen_generators(const QubitHamiltonian &h, const Statevector &ref,
                  double gradient_threshold = 1e-10) {
  if (ref.n_qubits() != h.n_qubits())
    throw std::invalid_argument("screen_generators: qubit count mismatch");
  const std::uint64_t b = require_basis_state(ref);
  std::vector<CandidateGenerator> out;
  for (const auto &[flips, members] : pauli::partition_by_flip_index(h)) {
    if (flips.empty())
      continue;
    CandidateGenerator cand{flips, flip_representative(h.n_qubits(), flips)};
    for (const auto &[q, c] : members)
      cand.gradient += gradient_contribution(q, c, cand.representative, b);
    cand.gradient_magnitude = std::abs(cand.gradient);
    if (cand.gradient_magnitude > gradient_threshold)
      out.push_back(cand);
  }
  std::stable_sort(out.begin(), out.end(), [](const auto &l, const auto &r) {
    if (l.gradient_magnitude != r.gradient_magnitude)
      return l.gradient_magnitude > r.gradient_magnitude;
    return l.representative < r.representative;
  });
  return out;
}

/// <ref| U^dag H U |ref> with U the ordered rotation product.
inline double circuit_energy(const QubitHamiltonian &h, const Statevector &ref,
                             const std::vector<Rotation> &rotations) {
  Statevector s = ref;
  sim::apply_rotations(s, rotations);
  return sim::expectation(s, h);
}

struct AmplitudeResult {
  double energy = 0.0;
  double energy_at_zero = 0.0;
  std::vector<double> amplitudes;
  std::size_t evaluations = 0;
  bool converged = false;
};

/// Minimizes the circuit energy over the amplitudes in the optimizer box.
/// One generator: bracketed golden-section search. Several: simplex from 0
/// plus seeded restarts. The zero point is always evaluated, so the result
/// never exceeds the starting energy.
inline AmplitudeResult
optimize_amplitudes(const QubitHamiltonian &h, const Statevector &ref,
                    const std::vector<PauliString> &generators,
                    const OptimizerSettings &settings = {},
                    std::uint64_t seed = 7) {
  if (generators.empty())
    throw std::invalid_argument("optimize_amplitudes: no generators");
  auto energy = [&](const std::vector<double> &tau) {
    std::vector<Rotation> rot;
    rot.reserve(generators.size());
    for (std::size_t j = 0; j < generators.size(); ++j)
      rot.push_back({generators[j], tau[j]});
    return circuit_energy(h, ref, rot);
  };

  AmplitudeResult out;
  const std::vector<double> zero(generators.size(), 0.0);
  out.energy_at_zero = energy(zero);

  MinimizeResult m;
  if (generators.size() == 1)
    m = golden_section([&](double t) { return energy({t}); }, settings);
  else
    m = minimize_box(energy, zero, settings, seed);

  out.evaluations = m.evaluations + 1;
  out.converged = m.converged;
  if (m.value < out.energy_at_zero - kMinimumImprovement) {
    out.energy = m.value;
    out.amplitudes = m.x;
  } else {
    out.energy = out.energy_at_zero;
    out.amplitudes = zero;
  }
  return out;
}

struct SelectedGenerator {
  PauliString generator;
  double amplitude = 0.0; ///< radians
  double gradient = 0.0;  ///< screening gradient at selection
};

struct IterationRecord {
  std::size_t index = 0; ///< 1-based
  std::vector<SelectedGenerator> generators;
  double energy = 0.0; ///< active-space energy after dressing, Hartree
  std::size_t term_count = 0;
  bool optimizer_converged = true;
};

struct QccTrace {
  std::size_t n_qubits = 0;
  std::uint64_t reference = 0; ///< basis index of the reference state
  double initial_energy = 0.0;
  std::size_t initial_term_count = 0;
  std::vector<IterationRecord> iterations;
  double final_energy = 0.0;
  bool converged = false;
  std::string stop_reason;
  double e_inactive = 0.0;
  double e_nuclear = 0.0;

  /// E^(0) (reference) followed by the energy after each iteration.
  std::vector<double> energies() const {
    std::vector<double> e{initial_energy};
    for (const auto &it : iterations)
      e.push_back(it.energy);
    return e;
  }

  /// Every selected rotation in operator-product order.
  std::vector<Rotation> rotations() const {
    std::vector<Rotation> out;
    for (const auto &it : iterations)
      for (const auto &g : it.generators)
        out.push_back({g.generator, g.amplitude});
    return out;
  }

  /// Generators with a nonzero amplitude; a zero amplitude is the fallback
  /// taken when no rotation lowers the energy.
  std::size_t parameter_count() const {
    std::size_t n = 0;
    for (const auto &it : iterations)
      for (const auto &g : it.generators)
        n += g.amplitude != 0.0;
    return n;
  }
};

struct QccResult {
  QccTrace trace;
  QubitHamiltonian dressed;
};

/// Iterative QCC from a fixed basis reference: screen flip groups, take the
/// top candidates, optimize their amplitudes, dress the Hamiltonian, repeat
/// until the energy drop falls below the tolerance, no candidate remains,
/// or the iteration cap is hit.
inline QccResult qcc_run_full(const QubitHamiltonian &h0, const Statevector &ref,
                              const QccConfig &cfg) {
  cfg.validate();
  if (ref.n_qubits() != h0.n_qubits())
    throw std::invalid_argument("qcc_run: qubit count mismatch");
  const std::uint64_t b = require_basis_state(ref);

  QubitHamiltonian h(h0.n_qubits(), cfg.prune_threshold);
  h.add(h0);

  QccResult res;
  QccTrace &trace = res.trace;
  trace.n_qubits = h.n_qubits();
  trace.reference = b;
  trace.initial_energy = h.diagonal_expectation(b);
  trace.initial_term_count = h.size();
  trace.stop_reason = "max_iterations";

  double e_old = trace.initial_energy;
  for (std::size_t it = 1; it <= cfg.max_iterations; ++it) {
    const auto cands = screen_generators(h, ref, cfg.gradient_threshold);
    if (cands.empty()) {
      trace.converged = true;
      trace.stop_reason = "no_candidates";
      break;
    }
    const std::size_t take =
        std::min(cfg.generators_per_iteration, cands.size());
    std::vector<PauliString> gens;
    for (std::size_t k = 0; k < take; ++k)
      gens.push_back(cands[k].representative);

    const auto opt = optimize_amplitudes(h, ref, gens, cfg.optimizer,
                                         cfg.seed + it);
    std::vector<Rotation> rot;
    IterationRecord rec;
    rec.index = it;
    rec.optimizer_converged = opt.converged;
    for (std::size_t k = 0; k < take; ++k) {
      rot.push_back({gens[k], opt.amplitudes[k]});
      rec.generators.push_back({gens[k], opt.amplitudes[k],
                                cands[k].gradient});
    }
    h = pauli::dress_sequence(h, rot);
    rec.energy = h.diagonal_expectation(b);
    rec.term_count = h.size();
    trace.iterations.push_back(rec);

    const double drop = e_old - rec.energy;
    e_old = rec.energy;
    if (drop < cfg.energy_tolerance) {
      trace.converged = true;
      trace.stop_reason = "energy_tolerance";
      break;
    }
  }
  trace.final_energy = h.diagonal_expectation(b);
  res.dressed = std::move(h);
  return res;
}

inline QccTrace qcc_run(const QubitHamiltonian &h0, const Statevector &ref,
                        const QccConfig &cfg) {
  return qcc_run_full(h0, ref, cfg).trace;
}

/// Active energy plus the stored inactive and nuclear offsets.
inline double total_energy(const QccTrace &trace) {
  return trace.final_energy + trace.e_inactive + trace.e_nuclear;
}

} // namespace qcc::solver
