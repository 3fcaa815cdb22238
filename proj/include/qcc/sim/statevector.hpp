/*******************************************************************************
 * Copyright (c) 2026 The qcc-engine Authors.                                  *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#pragma once

#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qcc/error.hpp"
#include "qcc/hamiltonian.hpp"
#include "qcc/pauli.hpp"

namespace qcc::sim {

using complex = std::complex<double>;
using pauli::PauliString;
using pauli::QubitHamiltonian;

/// Largest register the dense engine will allocate.
inline constexpr std::size_t kMaxStatevectorQubits = 24;

/// Dense amplitude vector over 2^m basis states. Basis index bit q is the
/// state of qubit q.
class Statevector {
public:
  explicit Statevector(std::size_t n_qubits) : n_(n_qubits) {
    if (n_qubits == 0 || n_qubits > kMaxStatevectorQubits)
      throw std::invalid_argument(
          "Statevector: qubit count " + std::to_string(n_qubits) +
          " outside [1, " + std::to_string(kMaxStatevectorQubits) + "]");
    amps_.assign(std::size_t{1} << n_qubits, complex{0.0, 0.0});
    amps_[0] = 1.0;
  }

  /// Takes ownership of raw amplitudes and normalizes them.
  Statevector(std::size_t n_qubits, std::vector<complex> amplitudes)
      : n_(n_qubits), amps_(std::move(amplitudes)) {
    if (n_qubits == 0 || n_qubits > kMaxStatevectorQubits ||
        amps_.size() != (std::size_t{1} << n_qubits))
      throw std::invalid_argument("Statevector: amplitude count mismatch");
    const double nrm = norm();
    if (!(nrm > 0.0) || !std::isfinite(nrm))
      throw NumericError("Statevector: amplitudes cannot be normalized");
    for (auto &a : amps_)
      a /= nrm;
  }

  std::size_t n_qubits() const { return n_; }
  std::size_t dimension() const { return amps_.size(); }
  std::span<const complex> amplitudes() const { return amps_; }
  std::span<complex> amplitudes() { return amps_; }
  const complex &operator[](std::size_t i) const { return amps_[i]; }
  complex &operator[](std::size_t i) { return amps_[i]; }

  double norm() const {
    double s = 0.0;
    for (const auto &a : amps_)
      s += std::norm(a);
    return std::sqrt(s);
  }

  /// Index of the unique populated basis state, or -1 when the state is
  /// not a computational basis state (within tol).
  std::int64_t basis_index(double tol = 1e-12) const {
    std::int64_t found = -1;
    for (std::size_t i = 0; i < amps_.size(); ++i) {
      const double p = std::norm(amps_[i]);
      if (p <= tol)
        continue;
      if (found >= 0 || std::abs(p - 1.0) > tol)
        return -1;
      found = static_cast<std::int64_t>(i);
    }
    return found;
  }

private:
  std::size_t n_;
  std::vector<complex> amps_;
};

/// |bitstring>, where character q of the string is qubit q.
inline Statevector prepare_basis_state(std::size_t n_qubits,
                                       std::string_view bitstring) {
  if (bitstring.size() != n_qubits)
    throw std::invalid_argument("prepare_basis_state: bitstring length " +
                                std::to_string(bitstring.size()) +
                                " != qubit count " + std::to_string(n_qubits));
  std::uint64_t index = 0;
  for (std::size_t q = 0; q < n_qubits; ++q) {
    if (bitstring[q] == '1')
      index |= std::uint64_t{1} << q;
    else if (bitstring[q] != '0')
      throw ParseError("prepare_basis_state: bitstring must contain 0/1");
  }
  Statevector s(n_qubits);
  s[0] = 0.0;
  s[index] = 1.0;
  return s;
}

inline Statevector prepare_basis_state(std::size_t n_qubits,
                                       std::uint64_t index) {
  if (n_qubits > kMaxStatevectorQubits || (index >> n_qubits) != 0)
    throw std::invalid_argument("prepare_basis_state: index out of range");
  Statevector s(n_qubits);
  s[0] = 0.0;
  s[index] = 1.0;
  return s;
}

namespace detail {

/// i^k for k mod 4.
inline complex i_pow(int k) {
  switch (k & 3) {
  case 0:
    return {1.0, 0.0};
  case 1:
    return {0.0, 1.0};
  case 2:
    return {-1.0, 0.0};
  default:
    return {0.0, -1.0};
  }
}

/// <b ^ x| P |b> for P = i^{|x&z|} X^x Z^z: i^{|x&z|} (-1)^{|b & z|}.
inline complex pauli_column_phase(const PauliString &p, std::uint64_t b) {
  const int k = static_cast<int>(p.y_count()) +
                2 * (std::popcount(b & p.z_mask()) & 1);
  return i_pow(k);
}

inline void require_width(std::size_t a, std::size_t b, const char *op) {
  if (a != b)
    throw std::invalid_argument(std::string(op) + ": qubit count mismatch");
}

} // namespace detail

/// psi <- P psi.
inline void apply_pauli(Statevector &state, const PauliString &p) {
  detail::require_width(state.n_qubits(), p.n_qubits(), "apply_pauli");
  auto amps = state.amplitudes();
  const std::uint64_t x = p.x_mask();
  if (x == 0) {
    for (std::uint64_t b = 0; b < amps.size(); ++b)
      amps[b] *= detail::pauli_column_phase(p, b);
    return;
  }
  const std::uint64_t pivot = std::uint64_t{1} << (63 - std::countl_zero(x));
  for (std::uint64_t b = 0; b < amps.size(); ++b) {
    if (b & pivot)
      continue;
    const std::uint64_t c = b ^ x;
    const complex ab = amps[b];
    const complex ac = amps[c];
    amps[c] = detail::pauli_column_phase(p, b) * ab;
    amps[b] = detail::pauli_column_phase(p, c) * ac;
  }
}

/// psi <- exp(-i tau P / 2) psi = cos(tau/2) psi - i sin(tau/2) P psi.
///
/// Works on amplitude pairs (b, b ^ x_mask); diagonal strings reduce to a
/// per-amplitude phase.
inline void apply_pauli_rotation(Statevector &state, const PauliString &p,
                                 double tau) {
  detail::require_width(state.n_qubits(), p.n_qubits(),
                        "apply_pauli_rotation");
  if (!std::isfinite(tau))
    throw NumericError("apply_pauli_rotation: non-finite angle");
  if (tau == 0.0)
    return;
  const double c = std::cos(0.5 * tau);
  const complex mis{0.0, -std::sin(0.5 * tau)};
  auto amps = state.amplitudes();
  const std::uint64_t x = p.x_mask();
  if (x == 0) {
    for (std::uint64_t b = 0; b < amps.size(); ++b)
      amps[b] *= c + mis * detail::pauli_column_phase(p, b);
    return;
  }
  const std::uint64_t pivot = std::uint64_t{1} << (63 - std::countl_zero(x));
  for (std::uint64_t b = 0; b < amps.size(); ++b) {
    if (b & pivot)
      continue;
    const std::uint64_t d = b ^ x;
    const complex ab = amps[b];
    const complex ad = amps[d];
    // (P psi)[d] = phase(b) psi[b], (P psi)[b] = phase(d) psi[d]
    amps[b] = c * ab + mis * detail::pauli_column_phase(p, d) * ad;
    amps[d] = c * ad + mis * detail::pauli_column_phase(p, b) * ab;
  }
}

/// Applies U = exp(-i t_1 P_1/2) ... exp(-i t_n P_n/2) in operator order, so
/// the last rotation acts on the state first.
inline void apply_rotations(Statevector &state,
                            const std::vector<pauli::Rotation> &rotations) {
  for (auto it = rotations.rbegin(); it != rotations.rend(); ++it)
    apply_pauli_rotation(state, it->generator, it->angle);
}

/// <psi| P |psi>.
inline complex pauli_expectation(const Statevector &state,
                                 const PauliString &p) {
  detail::require_width(state.n_qubits(), p.n_qubits(), "pauli_expectation");
  const auto amps = state.amplitudes();
  const std::uint64_t x = p.x_mask();
  complex acc{0.0, 0.0};
  if (x == 0) {
    for (std::uint64_t b = 0; b < amps.size(); ++b) {
      const double w = std::norm(amps[b]);
      acc += (std::popcount(b & p.z_mask()) & 1) ? -w : w;
    }
    return acc;
  }
  for (std::uint64_t b = 0; b < amps.size(); ++b)
    acc += std::conj(amps[b ^ x]) * detail::pauli_column_phase(p, b) * amps[b];
  return acc;
}

/// Imaginary residue above which an expectation value is rejected.
inline constexpr double kImaginaryTolerance = 1e-8;

/// sum_k C_k <psi|P_k|psi>, in Hartree.
inline double expectation(const Statevector &state, const QubitHamiltonian &h) {
  detail::require_width(state.n_qubits(), h.n_qubits(), "expectation");
  complex e{0.0, 0.0};
  for (const auto &[p, c] : h)
    e += c * pauli_expectation(state, p);
  if (std::abs(e.imag()) > kImaginaryTolerance)
    throw NumericError("expectation: imaginary part " +
                       std::to_string(e.imag()) +
                       " indicates a non-Hermitian operator");
  return e.real();
}

} // namespace qcc::sim
