/*******************************************************************************
 * Copyright (c) 2026 The qcc-engine Authors.                                  *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qcc/error.hpp"

namespace qcc {

/// Fermion-to-qubit encodings of occupation-number states.
enum class Mapping { JordanWigner, Parity };

inline std::string to_string(Mapping m) {
  return m == Mapping::JordanWigner ? "jordan_wigner" : "parity";
}

inline Mapping mapping_from_string(std::string_view s) {
  if (s == "jw" || s == "jordan_wigner" || s == "jordan-wigner")
    return Mapping::JordanWigner;
  if (s == "parity")
    return Mapping::Parity;
  throw ConfigError("unknown mapping \"" + std::string(s) +
                    "\" (expected jordan_wigner or parity)");
}

/// Occupation bitmask (bit p = spin orbital p) to qubit basis label.
/// Parity stores on qubit j the parity of occupations 0..j.
inline std::uint64_t encode_occupation(std::uint64_t occ, std::size_t n_qubits,
                                       Mapping m) {
  if (m == Mapping::JordanWigner)
    return occ;
  std::uint64_t out = 0;
  std::uint64_t parity = 0;
  for (std::size_t j = 0; j < n_qubits; ++j) {
    parity ^= (occ >> j) & 1U;
    out |= parity << j;
  }
  return out;
}

/// Inverse of encode_occupation for an n-qubit register.
inline std::uint64_t decode_occupation(std::uint64_t bits, std::size_t n_qubits,
                                       Mapping m) {
  if (m == Mapping::JordanWigner)
    return bits;
  const std::uint64_t mask =
      n_qubits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_qubits) - 1;
  return (bits ^ (bits << 1)) & mask;
}

inline std::size_t particle_count(std::uint64_t bits, std::size_t n_qubits,
                                  Mapping m) {
  return std::popcount(decode_occupation(bits, n_qubits, m));
}

} // namespace qcc
