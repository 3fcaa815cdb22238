/*******************************************************************************
 * Copyright (c) 2026 The qcc-engine Authors.                                  *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#pragma once

// Test-only reference implementations. Everything here is built from
// explicit 2x2 matrices, Kronecker products, and occupation-number
// bit manipulation, independently of the library's symplectic algebra.

#include <algorithm>
#include <bit>
#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qcc/chem/active_space.hpp"
#include "qcc/hamiltonian.hpp"
#include "qcc/sim/statevector.hpp"

namespace qcc::testing {

using cd = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

inline Matrix pauli_2x2(char c) {
  Matrix m(2, 2);
  switch (c) {
  case 'I':
    m << 1, 0, 0, 1;
    break;
  case 'X':
    m << 0, 1, 1, 0;
    break;
  case 'Y':
    m << 0, cd(0, -1), cd(0, 1), 0;
    break;
  case 'Z':
    m << 1, 0, 0, -1;
    break;
  default:
    throw std::invalid_argument("bad letter");
  }
  return m;
}

inline Matrix kron(const Matrix &a, const Matrix &b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

/// Label character q acts on qubit q = bit q of the basis index, so later
/// characters are the more significant Kronecker factors.
inline Matrix dense_label(const std::string &label) {
  Matrix m = Matrix::Identity(1, 1);
  for (char c : label)
    m = kron(pauli_2x2(c), m);
  return m;
}

/// Sum of C_k times the tensor product, filled entry-wise from
/// <r| A_0 x ... x A_{n-1} |c> = prod_q A_q(r_q, c_q).
inline Matrix dense_hamiltonian(const pauli::QubitHamiltonian &h) {
  const std::size_t n = h.n_qubits();
  const Eigen::Index dim = Eigen::Index{1} << n;
  Matrix m = Matrix::Zero(dim, dim);
  for (const auto &[p, c] : h) {
    const std::string label = p.label();
    std::vector<Matrix> factors;
    std::uint64_t flips = 0;
    for (std::size_t q = 0; q < n; ++q) {
      factors.push_back(pauli_2x2(label[q]));
      if (label[q] == 'X' || label[q] == 'Y')
        flips |= std::uint64_t{1} << q;
    }
    for (std::uint64_t col = 0; col < static_cast<std::uint64_t>(dim); ++col) {
      const std::uint64_t row = col ^ flips;
      cd v = c;
      for (std::size_t q = 0; q < n; ++q)
        v *= factors[q]((row >> q) & 1, (col >> q) & 1);
      m(row, col) += v;
    }
  }
  return m;
}

/// exp(-i t A) for Hermitian A.
inline Matrix expm_i(const Matrix &a, double t) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(a);
  Eigen::VectorXcd phases(es.eigenvalues().size());
  for (Eigen::Index k = 0; k < phases.size(); ++k)
    phases[k] = std::exp(cd(0, -t * es.eigenvalues()[k]));
  return es.eigenvectors() * phases.asDiagonal() *
         es.eigenvectors().adjoint();
}

inline Eigen::VectorXd eigenvalues(const Matrix &m) {
  return Eigen::SelfAdjointEigenSolver<Matrix>(m, Eigen::EigenvaluesOnly)
      .eigenvalues();
}

inline Eigen::VectorXcd to_vector(const sim::Statevector &s) {
  Eigen::VectorXcd v(s.dimension());
  for (std::size_t i = 0; i < s.dimension(); ++i)
    v[i] = s[i];
  return v;
}

// ---------------------------------------------------------------------------
// Occupation-number (determinant) basis: index bit p = spin orbital p.
// a_p |n> = (-1)^{sum_{q<p} n_q} |n - e_p>, the usual canonical ordering.

/// Applies a ladder operator; returns false when the result vanishes.
inline bool apply_ladder(std::uint64_t &occ, int &sign, std::size_t p,
                         bool creation) {
  const std::uint64_t bit = std::uint64_t{1} << p;
  if (creation == bool(occ & bit))
    return false;
  if (std::popcount(occ & (bit - 1)) & 1)
    sign = -sign;
  occ ^= bit;
  return true;
}

/// Matrix of coeff * ops[0] ... ops[k-1] on 2^n occupation states.
inline Matrix ladder_product_matrix(std::size_t n,
                                    const std::vector<std::pair<std::size_t, bool>> &ops,
                                    double coeff = 1.0) {
  const Eigen::Index dim = Eigen::Index{1} << n;
  Matrix m = Matrix::Zero(dim, dim);
  for (std::uint64_t col = 0; col < static_cast<std::uint64_t>(dim); ++col) {
    std::uint64_t occ = col;
    int sign = 1;
    bool alive = true;
    for (auto it = ops.rbegin(); alive && it != ops.rend(); ++it)
      alive = apply_ladder(occ, sign, it->first, it->second);
    if (alive)
      m(occ, col) += coeff * sign;
  }
  return m;
}

/// Active-space Hamiltonian built directly in the determinant basis from
/// the spatial integrals, spin orbital 2u + s:
/// sum F_uv a+_us a_vs + 1/2 sum (uv|xy) a+_us a+_xt a_yt a_vs.
inline Matrix determinant_hamiltonian(const chem::ActiveSpaceProblem &prob) {
  const std::size_t o = prob.n_active_orbitals;
  const std::size_t n = 2 * o;
  const Eigen::Index dim = Eigen::Index{1} << n;
  Matrix m = Matrix::Zero(dim, dim);
  for (std::uint64_t col = 0; col < static_cast<std::uint64_t>(dim); ++col) {
    for (std::size_t u = 0; u < o; ++u)
      for (std::size_t v = 0; v < o; ++v)
        for (std::size_t s = 0; s < 2; ++s) {
          std::uint64_t occ = col;
          int sign = 1;
          if (apply_ladder(occ, sign, 2 * v + s, false) &&
              apply_ladder(occ, sign, 2 * u + s, true))
            m(occ, col) += prob.f_inactive(u, v) * sign;
        }
    for (std::size_t u = 0; u < o; ++u)
      for (std::size_t v = 0; v < o; ++v)
        for (std::size_t x = 0; x < o; ++x)
          for (std::size_t y = 0; y < o; ++y)
            for (std::size_t s = 0; s < 2; ++s)
              for (std::size_t t = 0; t < 2; ++t) {
                std::uint64_t occ = col;
                int sign = 1;
                if (apply_ladder(occ, sign, 2 * v + s, false) &&
                    apply_ladder(occ, sign, 2 * y + t, false) &&
                    apply_ladder(occ, sign, 2 * x + t, true) &&
                    apply_ladder(occ, sign, 2 * u + s, true))
                  m(occ, col) += 0.5 * prob.g_active(u, v, x, y) * sign;
              }
  }
  return m;
}

/// Lowest eigenvalue of m restricted to determinants with n_electrons.
inline double sector_ground(const Matrix &m, std::size_t n_electrons) {
  std::vector<Eigen::Index> idx;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    if (static_cast<std::size_t>(std::popcount(static_cast<std::uint64_t>(i))) ==
        n_electrons)
      idx.push_back(i);
  Matrix sub(idx.size(), idx.size());
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = 0; b < idx.size(); ++b)
      sub(a, b) = m(idx[a], idx[b]);
  return eigenvalues(sub)[0];
}

// ---------------------------------------------------------------------------
// Random inputs.

inline std::string random_label(std::mt19937_64 &rng, std::size_t n) {
  static const char letters[] = {'I', 'X', 'Y', 'Z'};
  std::string s(n, 'I');
  for (auto &c : s)
    c = letters[rng() % 4];
  return s;
}

inline pauli::PauliString random_pauli(std::mt19937_64 &rng, std::size_t n) {
  return pauli::PauliString::from_label(random_label(rng, n));
}

inline pauli::QubitHamiltonian random_hamiltonian(std::mt19937_64 &rng,
                                                  std::size_t n,
                                                  std::size_t terms) {
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  pauli::QubitHamiltonian h(n);
  terms = std::min(terms, std::size_t{1} << (2 * n));
  while (h.size() < terms)
    h.add(random_pauli(rng, n), coeff(rng));
  return h;
}

/// Random real-Hamiltonian (even Y-count terms only), like a chemistry one.
inline pauli::QubitHamiltonian random_real_hamiltonian(std::mt19937_64 &rng,
                                                       std::size_t n,
                                                       std::size_t terms) {
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  pauli::QubitHamiltonian h(n);
  terms = std::min(terms, std::size_t{1} << (2 * n - 1));
  while (h.size() < terms) {
    auto p = random_pauli(rng, n);
    if (p.y_count() % 2 == 0)
      h.add(p, coeff(rng));
  }
  return h;
}

inline sim::Statevector random_state(std::mt19937_64 &rng, std::size_t n) {
  std::normal_distribution<double> g;
  std::vector<cd> amps(std::size_t{1} << n);
  for (auto &a : amps)
    a = cd(g(rng), g(rng));
  return sim::Statevector(n, std::move(amps));
}

} // namespace qcc::testing
