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
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qcc/hamiltonian.hpp"
#include "qcc/sim/statevector.hpp"

namespace qcc::sim {

/// Qubit-wise commuting terms measured together in one product basis.
struct MeasurementGroup {
  std::vector<std::pair<PauliString, double>> members;
  PauliString basis; ///< per-qubit letter shared by every member

  bool accepts(const PauliString &p) const {
    return pauli::qubitwise_commutes(basis, p);
  }
};

/// Output of group_qwc: the groups plus the identity coefficient.
struct Grouping {
  std::size_t n_qubits = 0;
  double constant = 0.0;
  std::vector<MeasurementGroup> groups;
};

/// Greedy first-fit grouping over canonically ordered terms.
inline Grouping group_qwc(const QubitHamiltonian &h) {
  Grouping out;
  out.n_qubits = h.n_qubits();
  for (const auto &[p, c] : h) {
    if (p.is_identity()) {
      out.constant += c;
      continue;
    }
    auto it = std::find_if(out.groups.begin(), out.groups.end(),
                           [&](const MeasurementGroup &g) { return g.accepts(p); });
    if (it == out.groups.end()) {
      out.groups.push_back({{}, PauliString(h.n_qubits())});
      it = std::prev(out.groups.end());
    }
    it->members.emplace_back(p, c);
    it->basis = PauliString(h.n_qubits(), it->basis.x_mask() | p.x_mask(),
                            it->basis.z_mask() | p.z_mask());
  }
  return out;
}

struct GroupEstimate {
  std::size_t group_id = 0;
  double estimate = 0.0;  ///< Hartree
  double std_error = 0.0; ///< sample standard error of the estimate
  std::size_t shots = 0;
};

struct ShotEstimate {
  double energy = 0.0;   ///< constant + sum of group estimates
  double constant = 0.0; ///< identity coefficient, not sampled
  double std_error = 0.0;
  std::vector<GroupEstimate> per_group;
  std::uint64_t seed = 0;
  std::size_t shots = 0; ///< shots per group
};

/// Name recorded in output metadata for the sampling generator.
inline constexpr const char *kRngName = "mt19937_64+splitmix64-per-group";

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Uniform in [0, 1) from the top 53 bits; identical on every platform,
/// unlike std::uniform_real_distribution.
inline double unit_double(std::mt19937_64 &rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline void apply_single_qubit(Statevector &s, std::size_t q,
                               const complex (&m)[2][2]) {
  auto amps = s.amplitudes();
  const std::uint64_t bit = std::uint64_t{1} << q;
  for (std::uint64_t b = 0; b < amps.size(); ++b) {
    if (b & bit)
      continue;
    const complex a0 = amps[b];
    const complex a1 = amps[b | bit];
    amps[b] = m[0][0] * a0 + m[0][1] * a1;
    amps[b | bit] = m[1][0] * a0 + m[1][1] * a1;
  }
}

/// Rotates X-basis qubits with H and Y-basis qubits with H S^dag so that a
/// Z-basis readout measures the shared basis.
inline void rotate_to_z_basis(Statevector &s, const PauliString &basis) {
  const double r = 1.0 / std::sqrt(2.0);
  const complex hadamard[2][2] = {{r, r}, {r, -r}};
  const complex h_sdg[2][2] = {{r, complex{0.0, -r}}, {r, complex{0.0, r}}};
  for (std::size_t q = 0; q < basis.n_qubits(); ++q) {
    switch (basis.at(q)) {
    case pauli::Letter::X:
      apply_single_qubit(s, q, hadamard);
      break;
    case pauli::Letter::Y:
      apply_single_qubit(s, q, h_sdg);
      break;
    default:
      break;
    }
  }
}

} // namespace detail

/// Exact value of one group, sum of C_k <psi|P_k|psi>.
inline double group_expectation(const Statevector &state,
                                const MeasurementGroup &g) {
  double e = 0.0;
  for (const auto &[p, c] : g.members)
    e += c * pauli_expectation(state, p).real();
  return e;
}

/// Finite-shot energy estimate, `shots` samples per group drawn from the
/// exact outcome distribution of the basis-rotated state.
inline ShotEstimate sample_energy(const Statevector &state,
                                  const Grouping &grouping, std::size_t shots,
                                  std::uint64_t seed) {
  if (shots < 1)
    throw std::invalid_argument("sample_energy: shots must be >= 1");
  if (grouping.n_qubits != state.n_qubits())
    throw std::invalid_argument("sample_energy: qubit count mismatch");

  ShotEstimate est;
  est.seed = seed;
  est.shots = shots;
  est.constant = grouping.constant;
  est.energy = grouping.constant;
  double variance = 0.0;

  std::vector<double> cumulative(state.dimension());
  std::vector<std::size_t> counts(state.dimension());
  for (std::size_t gid = 0; gid < grouping.groups.size(); ++gid) {
    const auto &group = grouping.groups[gid];
    Statevector rotated = state;
    detail::rotate_to_z_basis(rotated, group.basis);

    double running = 0.0;
    const auto amps = rotated.amplitudes();
    for (std::size_t b = 0; b < amps.size(); ++b) {
      running += std::norm(amps[b]);
      cumulative[b] = running;
    }

    std::mt19937_64 rng(detail::splitmix64(seed ^ detail::splitmix64(gid)));
    std::fill(counts.begin(), counts.end(), 0);
    for (std::size_t s = 0; s < shots; ++s) {
      const double u = detail::unit_double(rng) * running;
      auto pos = std::upper_bound(cumulative.begin(), cumulative.end(), u);
      if (pos == cumulative.end())
        --pos;
      ++counts[static_cast<std::size_t>(pos - cumulative.begin())];
    }

    double sum = 0.0;
    double sum_sq = 0.0;
    for (std::uint64_t b = 0; b < counts.size(); ++b) {
      if (!counts[b])
        continue;
      double value = 0.0;
      for (const auto &[p, c] : group.members) {
        const std::uint64_t support = p.x_mask() | p.z_mask();
        value += (std::popcount(b & support) & 1) ? -c : c;
      }
      sum += counts[b] * value;
      sum_sq += counts[b] * value * value;
    }
    const double n = static_cast<double>(shots);
    const double mean = sum / n;
    const double var =
        shots > 1 ? std::max(0.0, (sum_sq - n * mean * mean) / (n - 1.0)) : 0.0;
    const double se = std::sqrt(var / n);
    est.per_group.push_back({gid, mean, se, shots});
    est.energy += mean;
    variance += se * se;
  }
  est.std_error = std::sqrt(variance);
  return est;
}

struct GroupError {
  std::size_t group_id = 0;
  std::string basis;
  double estimate = 0.0;
  double exact = 0.0;
  double difference = 0.0; ///< exact - estimate
};

/// Exact minus sampled value for every group.
inline std::vector<GroupError> per_group_error(const ShotEstimate &estimate,
                                               const Statevector &state,
                                               const Grouping &grouping) {
  if (estimate.per_group.size() != grouping.groups.size())
    throw std::invalid_argument(
        "per_group_error: estimate was produced with a different grouping");
  std::vector<GroupError> out;
  out.reserve(grouping.groups.size());
  for (const auto &ge : estimate.per_group) {
    if (ge.group_id >= grouping.groups.size())
      throw std::invalid_argument("per_group_error: unknown group id");
    const auto &g = grouping.groups[ge.group_id];
    const double exact = group_expectation(state, g);
    out.push_back({ge.group_id, g.basis.label(), ge.estimate, exact,
                   exact - ge.estimate});
  }
  return out;
}

inline nlohmann::json to_json(const ShotEstimate &est,
                              const std::vector<GroupError> &errors) {
  nlohmann::json groups = nlohmann::json::array();
  for (std::size_t i = 0; i < est.per_group.size(); ++i) {
    const auto &g = est.per_group[i];
    nlohmann::json row = {{"group_id", g.group_id},
                          {"estimate", g.estimate},
                          {"std_error", g.std_error},
                          {"shots", g.shots}};
    if (i < errors.size()) {
      row["basis"] = errors[i].basis;
      row["exact"] = errors[i].exact;
      row["difference"] = errors[i].difference;
    }
    groups.push_back(std::move(row));
  }
  return {{"energy", est.energy},       {"constant", est.constant},
          {"std_error", est.std_error}, {"seed", est.seed},
          {"shots", est.shots},         {"rng", kRngName},
          {"groups", std::move(groups)}};
}

} // namespace qcc::sim
