/*******************************************************************************
 * Copyright (c) 2026 The qcc-engine Authors.                                  *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "qcc/chem/active_space.hpp"

namespace qcc::chem {

/// a^dag_index when creation is set, a_index otherwise.
struct LadderOp {
  std::size_t index = 0;
  bool creation = false;

  bool operator==(const LadderOp &) const = default;
};

/// coefficient * (ops[0] ops[1] ... ops[k-1]), leftmost acts last.
struct FermionTerm {
  double coefficient = 0.0;
  std::vector<LadderOp> ops;
};

/// Real linear combination of ladder-operator products on spin orbitals.
class FermionOperator {
public:
  explicit FermionOperator(std::size_t n_spin_orbitals)
      : n_(n_spin_orbitals) {}

  std::size_t n_spin_orbitals() const { return n_; }
  const std::vector<FermionTerm> &terms() const { return terms_; }

  void add(double coefficient, std::vector<LadderOp> ops) {
    for (const auto &op : ops)
      if (op.index >= n_)
        throw std::out_of_range("FermionOperator: spin orbital " +
                                std::to_string(op.index) + " out of range");
    terms_.push_back({coefficient, std::move(ops)});
  }

  /// True when every product has as many creators as annihilators.
  bool conserves_particle_number() const {
    for (const auto &t : terms_) {
      long balance = 0;
      for (const auto &op : t.ops)
        balance += op.creation ? 1 : -1;
      if (balance != 0)
        return false;
    }
    return true;
  }

private:
  std::size_t n_;
  std::vector<FermionTerm> terms_;
};

inline LadderOp cre(std::size_t p) { return {p, true}; }
inline LadderOp ann(std::size_t p) { return {p, false}; }

/// Spin orbital of spatial orbital u with spin sigma (0 = alpha, 1 = beta).
inline std::size_t spin_orbital(std::size_t u, std::size_t sigma) {
  return 2 * u + sigma;
}

/// Total number operator sum_p a^dag_p a_p.
inline FermionOperator number_operator(std::size_t n_spin_orbitals) {
  FermionOperator n(n_spin_orbitals);
  for (std::size_t p = 0; p < n_spin_orbitals; ++p)
    n.add(1.0, {cre(p), ann(p)});
  return n;
}

/// Spin-orbital active Hamiltonian
///
///   sum_{uv,s} F^I_uv a^dag_us a_vs
///   + 1/2 sum_{uvxy,st} (uv|xy) a^dag_us a^dag_xt a_yt a_vs
///
/// with spin orbital 2u + s. Scalar offsets are not included.
inline FermionOperator build_active_hamiltonian(const ActiveSpaceProblem &prob,
                                                double drop_below = 1e-14) {
  const std::size_t o = prob.n_active_orbitals;
  FermionOperator op(2 * o);
  for (std::size_t u = 0; u < o; ++u)
    for (std::size_t v = 0; v < o; ++v) {
      const double f = prob.f_inactive(u, v);
      if (std::abs(f) < drop_below)
        continue;
      for (std::size_t s = 0; s < 2; ++s)
        op.add(f, {cre(spin_orbital(u, s)), ann(spin_orbital(v, s))});
    }
  for (std::size_t u = 0; u < o; ++u)
    for (std::size_t v = 0; v < o; ++v)
      for (std::size_t x = 0; x < o; ++x)
        for (std::size_t y = 0; y < o; ++y) {
          const double g = prob.g_active(u, v, x, y);
          if (std::abs(g) < drop_below)
            continue;
          for (std::size_t s = 0; s < 2; ++s)
            for (std::size_t t = 0; t < 2; ++t) {
              const std::size_t p = spin_orbital(u, s), q = spin_orbital(x, t);
              const std::size_t r = spin_orbital(y, t), w = spin_orbital(v, s);
              if (p == q || r == w)
                continue;
              op.add(0.5 * g, {cre(p), cre(q), ann(r), ann(w)});
            }
        }
  return op;
}

} // namespace qcc::chem
