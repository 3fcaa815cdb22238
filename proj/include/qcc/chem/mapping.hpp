/*******************************************************************************
 * Copyright (c) 2026 The qcc-engine Authors.                                  *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#pragma once

#include <cmath>
#include <complex>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qcc/chem/fermion.hpp"
#include "qcc/encoding.hpp"
#include "qcc/hamiltonian.hpp"

namespace qcc::chem {

using pauli::PauliString;
using pauli::QubitHamiltonian;

/// Pauli sum with complex weights; intermediate form of mapped operators.
using ComplexPauliSum = std::map<PauliString, std::complex<double>>;

namespace detail {

inline std::complex<double> phase_value(pauli::Phase ph) {
  static const std::complex<double> v[] = {
      {1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return v[ph.power()];
}

inline ComplexPauliSum multiply(const ComplexPauliSum &a,
                                const ComplexPauliSum &b) {
  ComplexPauliSum out;
  for (const auto &[p, cp] : a)
    for (const auto &[q, cq] : b) {
      const auto pq = pauli::multiply(p, q);
      out[pq.string] += cp * cq * phase_value(pq.phase);
    }
  return out;
}

/// Qubit image of one ladder operator: 1/2 (A -/+ i B) for creation and
/// annihilation, where (A, B) are the two Pauli strings of the encoding.
inline ComplexPauliSum ladder_image(const LadderOp &op, std::size_t n,
                                    Mapping mapping) {
  const std::size_t p = op.index;
  PauliString a(n), b(n);
  if (mapping == Mapping::JordanWigner) {
    // X_p Z_{p-1}...Z_0 and Y_p Z_{p-1}...Z_0
    for (std::size_t q = 0; q < p; ++q) {
      a.set(q, pauli::Letter::Z);
      b.set(q, pauli::Letter::Z);
    }
    a.set(p, pauli::Letter::X);
    b.set(p, pauli::Letter::Y);
  } else {
    // X_{n-1}...X_{p+1} X_p Z_{p-1} and X_{n-1}...X_{p+1} Y_p
    for (std::size_t q = p + 1; q < n; ++q) {
      a.set(q, pauli::Letter::X);
      b.set(q, pauli::Letter::X);
    }
    a.set(p, pauli::Letter::X);
    if (p > 0)
      a.set(p - 1, pauli::Letter::Z);
    b.set(p, pauli::Letter::Y);
  }
  const double sign = op.creation ? -1.0 : 1.0;
  return {{a, {0.5, 0.0}}, {b, {0.0, 0.5 * sign}}};
}

} // namespace detail

/// Complex-weighted qubit image of an arbitrary fermion operator.
inline ComplexPauliSum map_to_pauli_sum(const FermionOperator &op,
                                        Mapping mapping) {
  const std::size_t n = op.n_spin_orbitals();
  std::vector<ComplexPauliSum> cre_img(n), ann_img(n);
  for (std::size_t p = 0; p < n; ++p) {
    cre_img[p] = detail::ladder_image({p, true}, n, mapping);
    ann_img[p] = detail::ladder_image({p, false}, n, mapping);
  }
  ComplexPauliSum total;
  for (const auto &term : op.terms()) {
    ComplexPauliSum acc{{PauliString(n), {term.coefficient, 0.0}}};
    for (const auto &l : term.ops)
      acc = detail::multiply(acc, l.creation ? cre_img[l.index]
                                             : ann_img[l.index]);
    for (const auto &[p, c] : acc)
      total[p] += c;
  }
  return total;
}

/// Imaginary weight tolerated when converting to a real Hamiltonian.
inline constexpr double kHermiticityTolerance = 1e-10;

/// Real Hamiltonian from a complex Pauli sum; throws if the operator is not
/// Hermitian.
inline QubitHamiltonian to_hamiltonian(const ComplexPauliSum &sum,
                                       std::size_t n_qubits,
                                       double prune = pauli::kDefaultPruneThreshold) {
  QubitHamiltonian h(n_qubits, prune);
  for (const auto &[p, c] : sum) {
    if (std::abs(c.imag()) > kHermiticityTolerance)
      throw NumericError("mapped operator is not Hermitian: term " +
                         p.label() + " has imaginary weight " +
                         std::to_string(c.imag()));
    h.add(p, c.real());
  }
  return h;
}

/// a^dag_p -> 1/2 (X_p - i Y_p) Z_{p-1}...Z_0.
inline QubitHamiltonian jordan_wigner(const FermionOperator &op) {
  return to_hamiltonian(map_to_pauli_sum(op, Mapping::JordanWigner),
                        op.n_spin_orbitals());
}

/// a^dag_p -> 1/2 (X_p Z_{p-1} - i Y_p) X_{p+1}...X_{n-1}; qubit j holds the
/// parity of occupations 0..j. No qubit tapering.
inline QubitHamiltonian parity_map(const FermionOperator &op) {
  return to_hamiltonian(map_to_pauli_sum(op, Mapping::Parity),
                        op.n_spin_orbitals());
}

inline QubitHamiltonian map_fermion(const FermionOperator &op, Mapping m) {
  return m == Mapping::JordanWigner ? jordan_wigner(op) : parity_map(op);
}

/// Basis index of the Hartree-Fock determinant (lowest n_electrons spin
/// orbitals occupied) under the given encoding.
inline std::uint64_t hf_state_index(std::size_t n_electrons,
                                    std::size_t n_spin_orbitals, Mapping m) {
  if (n_electrons > n_spin_orbitals)
    throw ConfigError("hf_bitstring: " + std::to_string(n_electrons) +
                      " electrons exceed " + std::to_string(n_spin_orbitals) +
                      " spin orbitals");
  if (n_spin_orbitals > pauli::kMaxQubits)
    throw ConfigError("hf_bitstring: too many spin orbitals");
  const std::uint64_t occ =
      n_electrons == 64 ? ~std::uint64_t{0}
                        : (std::uint64_t{1} << n_electrons) - 1;
  return encode_occupation(occ, n_spin_orbitals, m);
}

/// Basis label with character q holding qubit q.
inline std::string to_bitstring(std::uint64_t index, std::size_t n_qubits) {
  std::string s(n_qubits, '0');
  for (std::size_t q = 0; q < n_qubits; ++q)
    if ((index >> q) & 1U)
      s[q] = '1';
  return s;
}

inline std::string hf_bitstring(std::size_t n_electrons,
                                std::size_t n_spin_orbitals, Mapping m) {
  return to_bitstring(hf_state_index(n_electrons, n_spin_orbitals, m),
                      n_spin_orbitals);
}

} // namespace qcc::chem
