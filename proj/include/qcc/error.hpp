/*******************************************************************************
 * Copyright (c) 2026 The qcc-engine Authors.                                  *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qcc {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text (FCIDUMP, JSON documents, Pauli labels).
class ParseError : public Error {
public:
  ParseError(const std::string &what, std::size_t line = 0)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

/// A numerical routine produced or received a value it cannot work with.
class NumericError : public Error {
public:
  using Error::Error;
};

/// Inconsistent configuration, manifest, or argument combination.
class ConfigError : public Error {
public:
  using Error::Error;
};

} // namespace qcc
