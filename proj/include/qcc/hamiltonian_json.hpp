/*******************************************************************************
 * Copyright (c) 2026 The qcc-engine Authors.                                  *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#pragma once

#include <string>

#include <json.hpp>

#include "qcc/error.hpp"
#include "qcc/hamiltonian.hpp"

namespace qcc::pauli {

/// {"n_qubits": m, "terms": [{"pauli": "XZYI", "coeff": c}, ...]}
/// Labels list qubit 0 first. Coefficients are written with round-trip
/// precision.
inline nlohmann::json to_json(const QubitHamiltonian &h) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto &[p, c] : h)
    terms.push_back({{"pauli", p.label()}, {"coeff", c}});
  return {{"n_qubits", h.n_qubits()}, {"terms", std::move(terms)}};
}

inline QubitHamiltonian
hamiltonian_from_json(const nlohmann::json &j,
                      double prune_threshold = kDefaultPruneThreshold) {
  try {
    const auto n = j.at("n_qubits").get<std::size_t>();
    QubitHamiltonian h(n, prune_threshold);
    for (const auto &t : j.at("terms")) {
      const auto label = t.at("pauli").get<std::string>();
      if (label.size() != n)
        throw ParseError("Pauli label \"" + label + "\" does not have " +
                         std::to_string(n) + " letters");
      h.add(PauliString::from_label(label), t.at("coeff").get<double>());
    }
    return h;
  } catch (const nlohmann::json::exception &e) {
    throw ParseError(std::string("Hamiltonian JSON: ") + e.what());
  }
}

} // namespace qcc::pauli
