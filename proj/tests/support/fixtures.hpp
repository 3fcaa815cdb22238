/*******************************************************************************
 * Copyright (c) 2026 The qcc-engine Authors.                                  *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#pragma once

#include <string>

#ifndef QCC_FIXTURE_DIR
#error "QCC_FIXTURE_DIR must be defined by the build"
#endif

namespace qcc::testing {

inline std::string fixture(const std::string &name) {
  return std::string(QCC_FIXTURE_DIR) + "/" + name;
}

} // namespace qcc::testing
