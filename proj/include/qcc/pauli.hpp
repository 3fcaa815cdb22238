/*******************************************************************************
 * Copyright (c) 2026 The qcc-engine Authors.                                  *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qcc/error.hpp"

namespace qcc::pauli {

/// Upper bound on the register width a PauliString can describe.
inline constexpr std::size_t kMaxQubits = 64;

/// Single-qubit Pauli letter. The numeric value packs (x, z) as x | z << 1.
enum class Letter : std::uint8_t { I = 0, X = 1, Z = 2, Y = 3 };

inline char to_char(Letter l) {
  switch (l) {
  case Letter::I:
    return 'I';
  case Letter::X:
    return 'X';
  case Letter::Y:
    return 'Y';
  case Letter::Z:
    return 'Z';
  }
  return '?';
}

/// A fourth root of unity i^k, stored as k mod 4.
class Phase {
public:
  constexpr Phase() = default;
  constexpr explicit Phase(int power) : power_(((power % 4) + 4) % 4) {}

  static constexpr Phase one() { return Phase(0); }
  static constexpr Phase i() { return Phase(1); }
  static constexpr Phase minus_one() { return Phase(2); }
  static constexpr Phase minus_i() { return Phase(3); }

  constexpr int power() const { return power_; }
  constexpr bool is_real() const { return (power_ & 1) == 0; }

  /// +1 or -1 for real phases.
  constexpr int real_sign() const {
    if (!is_real())
      throw std::logic_error("phase is imaginary");
    return power_ == 0 ? 1 : -1;
  }

  constexpr Phase operator*(Phase o) const { return Phase(power_ + o.power_); }
  constexpr Phase conj() const { return Phase(-power_); }
  constexpr bool operator==(const Phase &) const = default;

  std::string to_string() const {
    static constexpr const char *names[] = {"+1", "+i", "-1", "-i"};
    return names[power_];
  }

private:
  int power_ = 0;
};

/// n-qubit tensor product of {I, X, Y, Z} in symplectic form.
///
/// Bit i of x_mask is set iff qubit i carries X or Y; bit i of z_mask is set
/// iff qubit i carries Z or Y. Qubit 0 is the least significant bit.
class PauliString {
public:
  PauliString() = default;

  /// Identity on n qubits.
  explicit PauliString(std::size_t n_qubits) : n_(n_qubits) {
    if (n_qubits == 0 || n_qubits > kMaxQubits)
      throw std::invalid_argument("PauliString: qubit count must be in [1, " +
                                  std::to_string(kMaxQubits) + "]");
  }

  PauliString(std::size_t n_qubits, std::uint64_t x_mask, std::uint64_t z_mask)
      : PauliString(n_qubits) {
    const std::uint64_t valid = valid_mask();
    if ((x_mask & ~valid) || (z_mask & ~valid))
      throw std::invalid_argument("PauliString: mask bits beyond qubit count");
    x_ = x_mask;
    z_ = z_mask;
  }

  /// Parses a label such as "XZYI"; character k is qubit k.
  static PauliString from_label(std::string_view label) {
    PauliString p(label.size());
    for (std::size_t q = 0; q < label.size(); ++q) {
      switch (label[q]) {
      case 'I':
        break;
      case 'X':
        p.x_ |= bit(q);
        break;
      case 'Y':
        p.x_ |= bit(q);
        p.z_ |= bit(q);
        break;
      case 'Z':
        p.z_ |= bit(q);
        break;
      default:
        throw ParseError("invalid Pauli letter '" + std::string(1, label[q]) +
                         "' in label \"" + std::string(label) + "\"");
      }
    }
    return p;
  }

  /// Single letter on one qubit, identity elsewhere.
  static PauliString single(std::size_t n_qubits, std::size_t qubit,
                            Letter letter) {
    PauliString p(n_qubits);
    p.set(qubit, letter);
    return p;
  }

  std::size_t n_qubits() const { return n_; }
  std::uint64_t x_mask() const { return x_; }
  std::uint64_t z_mask() const { return z_; }

  Letter at(std::size_t qubit) const {
    check_qubit(qubit);
    const unsigned x = (x_ >> qubit) & 1U;
    const unsigned z = (z_ >> qubit) & 1U;
    return static_cast<Letter>(x | (z << 1));
  }

  void set(std::size_t qubit, Letter letter) {
    check_qubit(qubit);
    const auto code = static_cast<unsigned>(letter);
    x_ = (x_ & ~bit(qubit)) | ((code & 1U) ? bit(qubit) : 0);
    z_ = (z_ & ~bit(qubit)) | ((code & 2U) ? bit(qubit) : 0);
  }

  bool is_identity() const { return x_ == 0 && z_ == 0; }
  bool is_diagonal() const { return x_ == 0; }
  std::size_t weight() const { return std::popcount(x_ | z_); }
  std::size_t y_count() const { return std::popcount(x_ & z_); }

  std::string label() const {
    std::string s(n_, 'I');
    for (std::size_t q = 0; q < n_; ++q)
      s[q] = to_char(at(q));
    return s;
  }

  /// Canonical order: (x_mask, z_mask), then width.
  auto operator<=>(const PauliString &o) const {
    if (auto c = x_ <=> o.x_; c != 0)
      return c;
    if (auto c = z_ <=> o.z_; c != 0)
      return c;
    return n_ <=> o.n_;
  }
  bool operator==(const PauliString &) const = default;

private:
  static constexpr std::uint64_t bit(std::size_t q) {
    return std::uint64_t{1} << q;
  }
  std::uint64_t valid_mask() const {
    return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
  }
  void check_qubit(std::size_t q) const {
    if (q >= n_)
      throw std::out_of_range("PauliString: qubit index " + std::to_string(q) +
                              " out of range for " + std::to_string(n_) +
                              " qubits");
  }

  std::size_t n_ = 0;
  std::uint64_t x_ = 0;
  std::uint64_t z_ = 0;
};

/// A Pauli string with an exact fourth-root-of-unity prefactor.
struct PhasedPauli {
  Phase phase;
  PauliString string;

  bool operator==(const PhasedPauli &) const = default;
};

namespace detail {
inline void require_same_width(const PauliString &p, const PauliString &q,
                               const char *op) {
  if (p.n_qubits() != q.n_qubits())
    throw std::invalid_argument(std::string(op) + ": qubit count mismatch (" +
                                std::to_string(p.n_qubits()) + " vs " +
                                std::to_string(q.n_qubits()) + ")");
}
} // namespace detail

/// Exact product p * q.
///
/// With P = i^{|x&z|} X^x Z^z, the product picks up (-1)^{|z_p & x_q|} from
/// commuting Z^{z_p} past X^{x_q}, then the Y-count of the result is
/// re-absorbed into the letters.
inline PhasedPauli multiply(const PauliString &p, const PauliString &q) {
  detail::require_same_width(p, q, "multiply");
  const std::uint64_t x = p.x_mask() ^ q.x_mask();
  const std::uint64_t z = p.z_mask() ^ q.z_mask();
  const int power = static_cast<int>(p.y_count() + q.y_count()) +
                    2 * std::popcount(p.z_mask() & q.x_mask()) -
                    std::popcount(x & z);
  return {Phase(power), PauliString(p.n_qubits(), x, z)};
}

inline PhasedPauli multiply(const PhasedPauli &p, const PhasedPauli &q) {
  auto r = multiply(p.string, q.string);
  r.phase = p.phase * q.phase * r.phase;
  return r;
}

/// True iff pq = qp (symplectic inner product is even).
inline bool commutes(const PauliString &p, const PauliString &q) {
  detail::require_same_width(p, q, "commutes");
  const int s = std::popcount(p.x_mask() & q.z_mask()) +
                std::popcount(p.z_mask() & q.x_mask());
  return (s & 1) == 0;
}

/// Qubit-wise commutation: on every qubit the letters agree or one is I.
inline bool qubitwise_commutes(const PauliString &p, const PauliString &q) {
  detail::require_same_width(p, q, "qubitwise_commutes");
  const std::uint64_t both = (p.x_mask() | p.z_mask()) & (q.x_mask() | q.z_mask());
  return ((p.x_mask() ^ q.x_mask()) & both) == 0 &&
         ((p.z_mask() ^ q.z_mask()) & both) == 0;
}

/// Set of qubits carrying X or Y, as a bitmask.
struct FlipSet {
  std::uint64_t mask = 0;

  bool empty() const { return mask == 0; }
  std::size_t size() const { return std::popcount(mask); }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    for (std::uint64_t m = mask; m; m &= m - 1)
      out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
    return out;
  }

  auto operator<=>(const FlipSet &) const = default;
};

inline FlipSet flip_set(const PauliString &p) { return {p.x_mask()}; }

/// Positions carrying X or Y, ascending.
inline std::vector<std::size_t> flip_index(const PauliString &p) {
  return flip_set(p).indices();
}

} // namespace qcc::pauli
