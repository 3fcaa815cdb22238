/*******************************************************************************
 * Copyright (c) 2026 The qcc-engine Authors.                                  *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#pragma once

#include "qcc/error.hpp"
#include "qcc/encoding.hpp"
#include "qcc/pauli.hpp"
#include "qcc/hamiltonian.hpp"
#include "qcc/hamiltonian_json.hpp"
#include "qcc/chem/integrals.hpp"
#include "qcc/chem/active_space.hpp"
#include "qcc/chem/fermion.hpp"
#include "qcc/chem/mapping.hpp"
#include "qcc/chem/problem.hpp"
#include "qcc/chem/uccsd.hpp"
#include "qcc/sim/statevector.hpp"
#include "qcc/sim/measurement.hpp"
#include "qcc/oracle/exact.hpp"
#include "qcc/solver/optimize.hpp"
#include "qcc/solver/qcc.hpp"
#include "qcc/solver/extrapolate.hpp"
#include "qcc/solver/uccsd_vqe.hpp"
#include "qcc/solver/io.hpp"
