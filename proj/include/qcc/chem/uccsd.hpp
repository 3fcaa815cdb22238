/*******************************************************************************
 * Copyright (c) 2026 The qcc-engine Authors.                                  *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#pragma once

#include <array>
#include <cmath>
#include <utility>
#include <vector>

#include "qcc/chem/mapping.hpp"

namespace qcc::chem {

/// Spin-conserving single and double excitations out of the Hartree-Fock
/// determinant. Spin orbital p has spin p % 2.
struct ExcitationList {
  std::size_t n_electrons = 0;
  std::size_t n_spin_orbitals = 0;
  std::vector<std::pair<std::size_t, std::size_t>> singles; ///< (a, m)
  std::vector<std::array<std::size_t, 4>> doubles; ///< (a, b, m, n), a>b, m>n

  std::size_t parameter_count() const { return singles.size() + doubles.size(); }
};

/// Enumerates UCCSD amplitudes for CAS(e, o): singles a -> m with equal spin,
/// doubles (a, b) -> (m, n) as unordered pairs with equal total S_z.
inline ExcitationList uccsd_excitations(std::size_t n_active_electrons,
                                        std::size_t n_active_orbitals) {
  const std::size_t n = 2 * n_active_orbitals;
  if (n_active_electrons > n)
    throw ConfigError("uccsd_excitations: too many electrons for the space");
  ExcitationList ex;
  ex.n_electrons = n_active_electrons;
  ex.n_spin_orbitals = n;
  const std::size_t e = n_active_electrons;
  auto spin = [](std::size_t p) { return p & 1U; };

  for (std::size_t a = 0; a < e; ++a)
    for (std::size_t m = e; m < n; ++m)
      if (spin(a) == spin(m))
        ex.singles.emplace_back(a, m);

  for (std::size_t a = 0; a < e; ++a)
    for (std::size_t b = 0; b < a; ++b)
      for (std::size_t m = e; m < n; ++m)
        for (std::size_t v = e; v < m; ++v)
          if (spin(a) + spin(b) == spin(m) + spin(v))
            ex.doubles.push_back({a, b, m, v});
  return ex;
}

/// tau - tau^dag for one amplitude, mapped to qubits, written as
/// i * sum_k weight_k P_k with real weights.
struct AmplitudeGenerator {
  std::vector<std::pair<PauliString, double>> terms;
};

/// Pauli decomposition of each anti-Hermitian excitation generator, in the
/// order singles then doubles.
inline std::vector<AmplitudeGenerator>
uccsd_generator_paulis(const ExcitationList &ex, Mapping mapping) {
  const std::size_t n = ex.n_spin_orbitals;
  std::vector<AmplitudeGenerator> out;
  auto emit = [&](const std::vector<LadderOp> &tau,
                  const std::vector<LadderOp> &tau_dag) {
    FermionOperator g(n);
    g.add(1.0, tau);
    g.add(-1.0, tau_dag);
    AmplitudeGenerator gen;
    for (const auto &[p, c] : map_to_pauli_sum(g, mapping)) {
      if (std::abs(c.real()) > kHermiticityTolerance)
        throw NumericError("excitation generator is not anti-Hermitian");
      if (std::abs(c.imag()) >= pauli::kDefaultPruneThreshold)
        gen.terms.emplace_back(p, c.imag());
    }
    out.push_back(std::move(gen));
  };
  for (const auto &[a, m] : ex.singles)
    emit({cre(m), ann(a)}, {cre(a), ann(m)});
  for (const auto &[a, b, m, v] : ex.doubles)
    emit({cre(m), cre(v), ann(b), ann(a)}, {cre(a), cre(b), ann(v), ann(m)});
  return out;
}

} // namespace qcc::chem
