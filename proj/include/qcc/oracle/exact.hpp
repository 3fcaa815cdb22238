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
#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "qcc/encoding.hpp"
#include "qcc/error.hpp"
#include "qcc/hamiltonian.hpp"
#include "qcc/sim/statevector.hpp"

namespace qcc::oracle {

using pauli::PauliString;
using pauli::QubitHamiltonian;
using DenseOperator = Eigen::MatrixXcd;

/// Widest register rendered as a full dense matrix (2^12 x 2^12 complex).
inline constexpr std::size_t kMaxDenseQubits = 12;
/// Widest register the exact ground-state solver accepts.
inline constexpr std::size_t kMaxExactQubits = 14;
/// Sector dimension above which the iterative solver replaces dense.
inline constexpr std::size_t kDenseDimensionLimit = 1024;

/// Restrict diagonalization to states with a fixed electron count.
struct ParticleSector {
  std::size_t n_electrons = 0;
  Mapping mapping = Mapping::JordanWigner;
};

struct GroundState {
  double energy = 0.0;
  sim::Statevector vector{1};
  bool degenerate = false;
  std::size_t dimension = 0; ///< size of the diagonalized space
  bool iterative = false;
};

/// Dense matrix of a single Pauli string.
inline DenseOperator to_dense(const PauliString &p) {
  if (p.n_qubits() > kMaxDenseQubits)
    throw std::invalid_argument("to_dense: more than " +
                                std::to_string(kMaxDenseQubits) + " qubits");
  const std::size_t dim = std::size_t{1} << p.n_qubits();
  DenseOperator m = DenseOperator::Zero(dim, dim);
  for (std::uint64_t b = 0; b < dim; ++b)
    m(b ^ p.x_mask(), b) = sim::detail::pauli_column_phase(p, b);
  return m;
}

/// sum_k C_k P_k as a dense matrix, qubit q acting on bit q of the index.
inline DenseOperator to_dense(const QubitHamiltonian &h) {
  if (h.n_qubits() > kMaxDenseQubits)
    throw std::invalid_argument("to_dense: more than " +
                                std::to_string(kMaxDenseQubits) + " qubits");
  const std::size_t dim = std::size_t{1} << h.n_qubits();
  DenseOperator m = DenseOperator::Zero(dim, dim);
  for (const auto &[p, c] : h)
    for (std::uint64_t b = 0; b < dim; ++b)
      m(b ^ p.x_mask(), b) += c * sim::detail::pauli_column_phase(p, b);
  return m;
}

namespace detail {

using complex = std::complex<double>;
using Vector = Eigen::VectorXcd;

/// H restricted to a basis subset closed under the Hamiltonian, stored as a
/// sparse matrix over the subset.
class SectorOperator {
public:
  SectorOperator(const QubitHamiltonian &h, std::vector<std::uint64_t> basis)
      : basis_(std::move(basis)) {
    const std::uint64_t full = std::uint64_t{1} << h.n_qubits();
    const bool whole = basis_.size() == full;
    std::unordered_map<std::uint64_t, std::size_t> index;
    if (!whole) {
      index.reserve(basis_.size());
      for (std::size_t i = 0; i < basis_.size(); ++i)
        index.emplace(basis_[i], i);
    }
    std::vector<Eigen::Triplet<complex>> entries;
    for (const auto &[p, c] : h)
      for (std::size_t i = 0; i < basis_.size(); ++i) {
        const std::uint64_t b = basis_[i];
        std::size_t row = b ^ p.x_mask();
        if (!whole) {
          auto it = index.find(row);
          if (it == index.end())
            continue;
          row = it->second;
        }
        entries.emplace_back(static_cast<Eigen::Index>(row),
                             static_cast<Eigen::Index>(i),
                             c * sim::detail::pauli_column_phase(p, b));
      }
    const auto n = static_cast<Eigen::Index>(basis_.size());
    matrix_.resize(n, n);
    matrix_.setFromTriplets(entries.begin(), entries.end());
  }

  std::size_t dimension() const { return basis_.size(); }
  const std::vector<std::uint64_t> &basis() const { return basis_; }

  void apply(const Vector &in, Vector &out) const { out = matrix_ * in; }

  DenseOperator dense() const { return DenseOperator(matrix_); }

private:
  std::vector<std::uint64_t> basis_;
  Eigen::SparseMatrix<complex> matrix_;
};

inline bool is_real(const QubitHamiltonian &h) {
  return std::all_of(h.begin(), h.end(), [](const auto &t) {
    return (t.first.y_count() & 1) == 0;
  });
}

struct Eigenpair {
  double value = 0.0;
  Vector vector;
  double gap = 0.0; ///< distance to the next eigenvalue, inf if none
};

inline Eigenpair dense_lowest(const SectorOperator &op, bool real) {
  const DenseOperator m = op.dense();
  Eigenpair out;
  if (real) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m.real());
    out.value = es.eigenvalues()[0];
    out.vector = es.eigenvectors().col(0).cast<complex>();
    out.gap = es.eigenvalues().size() > 1
                  ? es.eigenvalues()[1] - es.eigenvalues()[0]
                  : INFINITY;
  } else {
    Eigen::SelfAdjointEigenSolver<DenseOperator> es(m);
    out.value = es.eigenvalues()[0];
    out.vector = es.eigenvectors().col(0);
    out.gap = es.eigenvalues().size() > 1
                  ? es.eigenvalues()[1] - es.eigenvalues()[0]
                  : INFINITY;
  }
  return out;
}

/// Lanczos with full reorthogonalization. Vectors in `deflate` are projected
/// out of every Krylov vector, which lets a second run probe degeneracy.
inline Eigenpair lanczos_lowest(const SectorOperator &op,
                                const std::vector<Vector> &deflate = {},
                                std::uint64_t seed = 0x5eed) {
  const std::size_t n = op.dimension();
  const std::size_t max_steps = std::min<std::size_t>(n, 400);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;

  auto project = [&](Vector &v) {
    for (const auto &d : deflate)
      v -= d * d.dot(v);
  };

  Vector v(n);
  for (std::size_t i = 0; i < n; ++i)
    v[i] = complex{normal(rng), normal(rng)};
  project(v);
  v.normalize();

  std::vector<Vector> krylov{v};
  std::vector<double> alpha, beta;
  Vector w(n);
  Eigenpair best;
  best.value = INFINITY;
  for (std::size_t k = 0; k < max_steps; ++k) {
    op.apply(krylov[k], w);
    project(w);
    const double a = krylov[k].dot(w).real();
    alpha.push_back(a);
    for (int pass = 0; pass < 2; ++pass)
      for (const auto &q : krylov)
        w -= q * q.dot(w);
    const double b = w.norm();

    const std::size_t m = alpha.size();
    const Eigen::VectorXd diag = Eigen::Map<const Eigen::VectorXd>(
        alpha.data(), static_cast<Eigen::Index>(m));
    const Eigen::VectorXd sub = Eigen::Map<const Eigen::VectorXd>(
        beta.data(), static_cast<Eigen::Index>(m - 1));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, sub);
    const double residual = std::abs(b * es.eigenvectors()(m - 1, 0));
    const bool done = residual < 1e-10 || b < 1e-12 || k + 1 == max_steps;
    if (done) {
      best.value = es.eigenvalues()[0];
      best.gap = m > 1 ? es.eigenvalues()[1] - es.eigenvalues()[0] : INFINITY;
      best.vector = Vector::Zero(n);
      for (std::size_t i = 0; i < m; ++i)
        best.vector += es.eigenvectors()(i, 0) * krylov[i];
      best.vector.normalize();
      if (residual > 1e-6)
        throw NumericError("exact_ground: Lanczos did not converge (residual " +
                           std::to_string(residual) + ")");
      return best;
    }
    beta.push_back(b);
    krylov.push_back(w / b);
  }
  return best;
}

} // namespace detail

/// Basis labels of the requested particle sector (all states when empty).
inline std::vector<std::uint64_t>
sector_basis(std::size_t n_qubits, const std::optional<ParticleSector> &sector) {
  std::vector<std::uint64_t> basis;
  const std::uint64_t dim = std::uint64_t{1} << n_qubits;
  for (std::uint64_t b = 0; b < dim; ++b)
    if (!sector ||
        particle_count(b, n_qubits, sector->mapping) == sector->n_electrons)
      basis.push_back(b);
  return basis;
}

/// Gap below which the ground level is reported as degenerate.
inline constexpr double kDegeneracyTolerance = 1e-8;

/// Lowest eigenpair, optionally restricted to a particle-number sector.
///
/// Dense diagonalization handles sectors up to kDenseDimensionLimit states;
/// larger ones use Lanczos plus a deflated second run to detect degeneracy.
inline GroundState
exact_ground(const QubitHamiltonian &h,
             const std::optional<ParticleSector> &sector = std::nullopt) {
  if (h.n_qubits() > kMaxExactQubits)
    throw std::invalid_argument("exact_ground: more than " +
                                std::to_string(kMaxExactQubits) + " qubits");
  auto basis = sector_basis(h.n_qubits(), sector);
  if (basis.empty())
    throw std::invalid_argument("exact_ground: particle sector is empty");

  detail::SectorOperator op(h, std::move(basis));
  GroundState gs;
  gs.dimension = op.dimension();
  detail::Eigenpair pair;
  if (op.dimension() <= kDenseDimensionLimit) {
    pair = detail::dense_lowest(op, detail::is_real(h));
    gs.degenerate = pair.gap < kDegeneracyTolerance;
  } else {
    gs.iterative = true;
    pair = detail::lanczos_lowest(op);
    const auto second = detail::lanczos_lowest(op, {pair.vector}, 0xdeed);
    gs.degenerate = second.value - pair.value < kDegeneracyTolerance;
  }
  gs.energy = pair.value;

  std::vector<std::complex<double>> amps(std::size_t{1} << h.n_qubits());
  for (std::size_t i = 0; i < op.dimension(); ++i)
    amps[op.basis()[i]] = pair.vector[static_cast<Eigen::Index>(i)];
  gs.vector = sim::Statevector(h.n_qubits(), std::move(amps));
  return gs;
}

/// All eigenvalues of a dense rendering, ascending.
inline Eigen::VectorXd spectrum(const QubitHamiltonian &h) {
  Eigen::SelfAdjointEigenSolver<DenseOperator> es(to_dense(h),
                                                  Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

} // namespace qcc::oracle
