/*******************************************************************************
 * Copyright (c) 2026 The qcc-engine Authors.                                  *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#pragma once

#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qcc/error.hpp"
#include "qcc/pauli.hpp"

namespace qcc::pauli {

/// Coefficients with magnitude below this are dropped on insertion (Hartree).
inline constexpr double kDefaultPruneThreshold = 1e-12;

/// Real-weighted sum of Pauli strings, H = sum_k C_k P_k.
///
/// Terms are kept in canonical PauliString order, merged on insertion, and
/// pruned below the threshold so that iteration order and term counts are
/// reproducible.
class QubitHamiltonian {
public:
  using TermMap = std::map<PauliString, double>;

  QubitHamiltonian() = default;
  explicit QubitHamiltonian(std::size_t n_qubits,
                            double prune_threshold = kDefaultPruneThreshold)
      : n_(n_qubits), prune_(prune_threshold) {
    if (n_qubits == 0 || n_qubits > kMaxQubits)
      throw std::invalid_argument("QubitHamiltonian: bad qubit count");
    if (!(prune_threshold >= 0.0))
      throw std::invalid_argument("QubitHamiltonian: negative prune threshold");
  }

  /// Convenience builder from (label, coefficient) pairs.
  static QubitHamiltonian
  from_labels(const std::vector<std::pair<std::string, double>> &terms,
              double prune_threshold = kDefaultPruneThreshold) {
    if (terms.empty())
      throw std::invalid_argument("from_labels: no terms");
    QubitHamiltonian h(terms.front().first.size(), prune_threshold);
    for (const auto &[label, c] : terms)
      h.add(PauliString::from_label(label), c);
    return h;
  }

  std::size_t n_qubits() const { return n_; }
  double prune_threshold() const { return prune_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  const TermMap &terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  /// Adds c * p, merging with an existing term; drops the merged term if it
  /// falls below the prune threshold.
  void add(const PauliString &p, double c) {
    if (p.n_qubits() != n_)
      throw std::invalid_argument("QubitHamiltonian::add: qubit count mismatch");
    if (!std::isfinite(c))
      throw NumericError("QubitHamiltonian::add: non-finite coefficient for " +
                         p.label());
    auto [it, inserted] = terms_.try_emplace(p, c);
    if (!inserted)
      it->second += c;
    if (std::abs(it->second) < prune_)
      terms_.erase(it);
  }

  void add(const QubitHamiltonian &other, double scale = 1.0) {
    for (const auto &[p, c] : other)
      add(p, scale * c);
  }

  double coefficient(const PauliString &p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? 0.0 : it->second;
  }

  /// Coefficient of the identity string.
  double constant() const { return coefficient(PauliString(n_)); }

  /// Energy of a computational basis state |bits>. Only diagonal terms
  /// contribute, each as (-1)^{|z & bits|}.
  double diagonal_expectation(std::uint64_t bits) const {
    double e = 0.0;
    for (const auto &[p, c] : terms_)
      if (p.is_diagonal())
        e += (std::popcount(p.z_mask() & bits) & 1) ? -c : c;
    return e;
  }

  bool operator==(const QubitHamiltonian &o) const {
    return n_ == o.n_ && terms_ == o.terms_;
  }

private:
  std::size_t n_ = 0;
  double prune_ = kDefaultPruneThreshold;
  TermMap terms_;
};

using FlipGroups =
    std::map<FlipSet, std::vector<std::pair<PauliString, double>>>;

/// Groups terms by flip set; members keep canonical order.
inline FlipGroups partition_by_flip_index(const QubitHamiltonian &h) {
  FlipGroups groups;
  for (const auto &[p, c] : h)
    groups[flip_set(p)].emplace_back(p, c);
  return groups;
}

/// A Pauli rotation exp(-i * angle * generator / 2).
struct Rotation {
  PauliString generator;
  double angle = 0.0;
};

/// Similarity transform U^dag H U with U = exp(-i tau P / 2).
///
/// Terms commuting with P are untouched. An anticommuting C Q becomes
/// C cos(tau) Q + C sin(tau) (i P Q); i P Q is Hermitian so its phase is
/// exactly +-1.
inline QubitHamiltonian dress(const QubitHamiltonian &h, const PauliString &p,
                              double tau) {
  if (p.n_qubits() != h.n_qubits())
    throw std::invalid_argument("dress: qubit count mismatch");
  if (!std::isfinite(tau))
    throw NumericError("dress: non-finite rotation angle");
  if (tau == 0.0)
    return h;

  const double c = std::cos(tau);
  const double s = std::sin(tau);
  // Merge first, prune once, so the result does not depend on term order.
  QubitHamiltonian::TermMap merged;
  for (const auto &[q, coeff] : h) {
    if (commutes(p, q)) {
      merged[q] += coeff;
      continue;
    }
    const PhasedPauli pq = multiply(p, q);
    const int sign = (Phase::i() * pq.phase).real_sign();
    merged[q] += coeff * c;
    merged[pq.string] += sign * coeff * s;
  }
  QubitHamiltonian out(h.n_qubits(), h.prune_threshold());
  for (const auto &[q, coeff] : merged)
    out.add(q, coeff);
  return out;
}

/// U^dag H U with U = U_1 U_2 ... U_n in list order, i.e. the first rotation
/// is conjugated first. The matching circuit applies U_n to the state first.
inline QubitHamiltonian dress_sequence(const QubitHamiltonian &h,
                                       const std::vector<Rotation> &rotations) {
  QubitHamiltonian out = h;
  for (const auto &r : rotations)
    out = dress(out, r.generator, r.angle);
  return out;
}

} // namespace qcc::pauli
