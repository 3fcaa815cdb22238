/*******************************************************************************
 * Copyright (c) 2026 The qcc-engine Authors.                                  *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qcc/error.hpp"

namespace qcc::chem {

/// Four-index real tensor in chemist notation, t(p,q,r,s) = (pq|rs).
class Tensor4 {
public:
  Tensor4() = default;
  explicit Tensor4(std::size_t n) : n_(n), data_(n * n * n * n, 0.0) {}

  std::size_t extent() const { return n_; }
  double operator()(std::size_t p, std::size_t q, std::size_t r,
                    std::size_t s) const {
    return data_[((p * n_ + q) * n_ + r) * n_ + s];
  }
  double &operator()(std::size_t p, std::size_t q, std::size_t r,
                     std::size_t s) {
    return data_[((p * n_ + q) * n_ + r) * n_ + s];
  }
  const std::vector<double> &data() const { return data_; }
  std::vector<double> &data() { return data_; }

  /// Writes v into all eight index permutations of a real (pq|rs).
  void set_symmetric(std::size_t p, std::size_t q, std::size_t r,
                     std::size_t s, double v) {
    for (auto [a, b, c, d] :
         {std::array{p, q, r, s}, std::array{q, p, r, s},
          std::array{p, q, s, r}, std::array{q, p, s, r},
          std::array{r, s, p, q}, std::array{s, r, p, q},
          std::array{r, s, q, p}, std::array{s, r, q, p}})
      (*this)(a, b, c, d) = v;
  }

private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

/// Molecular-orbital integrals as read from an FCIDUMP file.
struct ElectronIntegrals {
  std::size_t n_orbitals = 0;
  std::size_t n_electrons = 0;
  int ms2 = 0;
  Eigen::MatrixXd h1; ///< h_pq, Hartree
  Tensor4 g2;         ///< (pq|rs), Hartree
  double e_nuclear = 0.0;
};

/// Largest deviation from h1 symmetry and 8-fold g2 symmetry.
inline double symmetry_violation(const ElectronIntegrals &ints) {
  const std::size_t n = ints.n_orbitals;
  double worst = (ints.h1 - ints.h1.transpose()).cwiseAbs().maxCoeff();
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s) {
          const double v = ints.g2(p, q, r, s);
          worst = std::max({worst, std::abs(v - ints.g2(q, p, r, s)),
                            std::abs(v - ints.g2(p, q, s, r)),
                            std::abs(v - ints.g2(r, s, p, q))});
        }
  return worst;
}

namespace detail {

inline std::string upper(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  return s;
}

/// Parses the &FCI ... &END namelist into key -> value tokens.
inline std::map<std::string, std::vector<std::string>>
parse_namelist(const std::string &text, std::size_t line) {
  std::string body = text;
  std::replace(body.begin(), body.end(), ',', ' ');
  std::istringstream in(body);
  std::map<std::string, std::vector<std::string>> out;
  std::string token, key;
  while (in >> token) {
    const std::string up = upper(token);
    if (up == "&FCI" || up == "&END" || up == "/" || up == "$FCI" ||
        up == "$END")
      continue;
    if (auto eq = token.find('='); eq != std::string::npos) {
      key = upper(token.substr(0, eq));
      out[key];
      if (eq + 1 < token.size())
        out[key].push_back(token.substr(eq + 1));
    } else if (!key.empty()) {
      out[key].push_back(token);
    } else {
      throw ParseError("FCIDUMP header: unexpected token '" + token + "'",
                       line);
    }
  }
  return out;
}

inline long parse_int(const std::string &s, std::size_t line,
                      const char *what) {
  long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw ParseError(std::string("FCIDUMP: bad ") + what + " '" + s + "'",
                     line);
  return v;
}

inline double parse_real(std::string s, std::size_t line) {
  std::replace(s.begin(), s.end(), 'D', 'E');
  std::replace(s.begin(), s.end(), 'd', 'e');
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v))
    throw ParseError("FCIDUMP: non-numeric value '" + s + "'", line);
  return v;
}

} // namespace detail

/// Reads an FCIDUMP stream: &FCI NORB=, NELEC=, MS2= header, then
/// `value i j k l` lines with 1-based chemist-notation indices.
///
/// i j k l all zero is the nuclear repulsion, k = l = 0 a one-electron
/// integral, and i > 0 with j = k = l = 0 an orbital energy (ignored).
/// Only one permutation of each integral needs to be present.
inline ElectronIntegrals parse_fcidump(std::istream &in) {
  std::string line;
  std::size_t line_no = 0;
  std::string header;
  bool in_header = false;
  bool header_done = false;
  std::size_t header_line = 0;
  while (!header_done && std::getline(in, line)) {
    ++line_no;
    const std::string up = detail::upper(line);
    if (!in_header) {
      if (up.find_first_not_of(" \t\r") == std::string::npos)
        continue;
      if (up.find("&FCI") == std::string::npos &&
          up.find("$FCI") == std::string::npos)
        throw ParseError("FCIDUMP: expected &FCI header", line_no);
      in_header = true;
      header_line = line_no;
    }
    header += line + " ";
    if (up.find("&END") != std::string::npos ||
        up.find("$END") != std::string::npos ||
        up.find_first_not_of(" \t\r") != std::string::npos &&
            up.substr(up.find_last_not_of(" \t\r")) == "/")
      header_done = true;
  }
  if (!header_done)
    throw ParseError("FCIDUMP: unterminated header", line_no);

  const auto keys = detail::parse_namelist(header, header_line);
  auto require = [&](const char *k) -> long {
    auto it = keys.find(k);
    if (it == keys.end() || it->second.empty())
      throw ParseError(std::string("FCIDUMP header: missing ") + k,
                       header_line);
    return detail::parse_int(it->second.front(), header_line, k);
  };

  ElectronIntegrals ints;
  const long norb = require("NORB");
  const long nelec = require("NELEC");
  if (norb <= 0 || nelec < 0 || nelec > 2 * norb)
    throw ParseError("FCIDUMP header: inconsistent NORB/NELEC", header_line);
  ints.n_orbitals = static_cast<std::size_t>(norb);
  ints.n_electrons = static_cast<std::size_t>(nelec);
  if (keys.count("MS2") && !keys.at("MS2").empty())
    ints.ms2 = static_cast<int>(
        detail::parse_int(keys.at("MS2").front(), header_line, "MS2"));
  ints.h1 = Eigen::MatrixXd::Zero(norb, norb);
  ints.g2 = Tensor4(ints.n_orbitals);

  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::vector<std::string> tok;
    for (std::string t; fields >> t;)
      tok.push_back(t);
    if (tok.empty())
      continue;
    if (tok.size() != 5)
      throw ParseError("FCIDUMP: expected 'value i j k l', got " +
                           std::to_string(tok.size()) + " fields",
                       line_no);
    const double v = detail::parse_real(tok[0], line_no);
    long idx[4];
    for (int k = 0; k < 4; ++k) {
      idx[k] = detail::parse_int(tok[k + 1], line_no, "index");
      if (idx[k] < 0 || idx[k] > norb)
        throw ParseError("FCIDUMP: index " + tok[k + 1] + " out of range [0, " +
                             std::to_string(norb) + "]",
                         line_no);
    }
    const auto [i, j, k, l] = std::array{idx[0], idx[1], idx[2], idx[3]};
    if (i == 0 && j == 0 && k == 0 && l == 0) {
      ints.e_nuclear = v;
    } else if (i > 0 && j > 0 && k == 0 && l == 0) {
      ints.h1(i - 1, j - 1) = v;
      ints.h1(j - 1, i - 1) = v;
    } else if (i > 0 && j == 0 && k == 0 && l == 0) {
      // orbital energy
    } else if (i > 0 && j > 0 && k > 0 && l > 0) {
      ints.g2.set_symmetric(i - 1, j - 1, k - 1, l - 1, v);
    } else {
      throw ParseError("FCIDUMP: unsupported index pattern", line_no);
    }
  }
  return ints;
}

inline ElectronIntegrals parse_fcidump_string(const std::string &text) {
  std::istringstream in(text);
  return parse_fcidump(in);
}

inline ElectronIntegrals load_fcidump(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw ParseError("cannot open FCIDUMP file " + path);
  try {
    return parse_fcidump(in);
  } catch (const ParseError &e) {
    throw ParseError(path + ": " + e.what());
  }
}

} // namespace qcc::chem
