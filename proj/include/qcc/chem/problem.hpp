/*******************************************************************************
 * Copyright (c) 2026 The qcc-engine Authors.                                  *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#pragma once

#include <cstdint>
#include <string>

#include "qcc/chem/active_space.hpp"
#include "qcc/chem/fermion.hpp"
#include "qcc/chem/mapping.hpp"
#include "qcc/sim/statevector.hpp"

namespace qcc::chem {

/// An active-space problem mapped to qubits, with its Hartree-Fock reference.
struct QubitProblem {
  ActiveSpaceProblem space;
  Mapping mapping = Mapping::JordanWigner;
  pauli::QubitHamiltonian hamiltonian;
  std::uint64_t reference = 0;

  std::size_t n_qubits() const { return hamiltonian.n_qubits(); }
  std::size_t n_electrons() const { return space.n_active_electrons; }
  std::string reference_bits() const {
    return to_bitstring(reference, n_qubits());
  }
  sim::Statevector reference_state() const {
    return sim::prepare_basis_state(n_qubits(), reference);
  }
  /// Constant added to active energies to obtain total energies.
  double energy_offset() const { return space.e_inactive + space.e_nuclear; }
};

inline QubitProblem map_problem(const ActiveSpaceProblem &space, Mapping m) {
  QubitProblem p;
  p.space = space;
  p.mapping = m;
  p.hamiltonian = map_fermion(build_active_hamiltonian(space), m);
  p.reference =
      hf_state_index(space.n_active_electrons, space.n_spin_orbitals(), m);
  return p;
}

} // namespace qcc::chem
