/*******************************************************************************
 * Copyright (c) 2026 The qcc-engine Authors.                                  *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "qcc/chem/active_space.hpp"
#include "qcc/chem/fermion.hpp"
#include "qcc/chem/integrals.hpp"
#include "qcc/chem/mapping.hpp"
#include "qcc/chem/uccsd.hpp"
#include "qcc/oracle/exact.hpp"
#include "support/dense_oracle.hpp"
#include "support/fixtures.hpp"

using namespace qcc;
using namespace qcc::chem;
namespace qt = qcc::testing;

namespace {

const char *kHeader = " &FCI NORB=2,NELEC=2,MS2=0,\n  ORBSYM=1,1,\n  ISYM=1,\n &END\n";

qt::Matrix mapped_dense(const FermionOperator &op, Mapping m) {
  return qt::dense_hamiltonian(map_fermion(op, m));
}

/// Occupation-basis matrix of a fermion operator (test oracle).
qt::Matrix occupation_dense(const FermionOperator &op) {
  const std::size_t n = op.n_spin_orbitals();
  qt::Matrix m = qt::Matrix::Zero(1 << n, 1 << n);
  for (const auto &t : op.terms()) {
    std::vector<std::pair<std::size_t, bool>> ops;
    for (const auto &l : t.ops)
      ops.emplace_back(l.index, l.creation);
    m += qt::ladder_product_matrix(n, ops, t.coefficient);
  }
  return m;
}

FermionOperator random_hermitian_operator(std::mt19937_64 &rng, std::size_t n) {
  std::uniform_real_distribution<double> c(-1.0, 1.0);
  FermionOperator op(n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q <= p; ++q) {
      const double v = c(rng);
      op.add(v, {cre(p), ann(q)});
      if (p != q)
        op.add(v, {cre(q), ann(p)});
    }
  for (int k = 0; k < 6; ++k) {
    const std::size_t p = rng() % n, q = rng() % n, r = rng() % n,
                      s = rng() % n;
    if (p == q || r == s)
      continue;
    const double v = c(rng);
    op.add(v, {cre(p), cre(q), ann(r), ann(s)});
    op.add(v, {cre(s), cre(r), ann(q), ann(p)});
  }
  return op;
}

std::size_t closed_form_singles(std::size_t e, std::size_t o) {
  return 2 * (e / 2) * (o - e / 2);
}
std::size_t closed_form_doubles(std::size_t e, std::size_t o) {
  const std::size_t occ = e / 2, vir = o - e / 2;
  auto pairs = [](std::size_t k) { return k * (k - 1) / 2; };
  return 2 * pairs(occ) * pairs(vir) + occ * vir * occ * vir;
}

} // namespace

TEST(ParseFcidump, ScalarAndOneBodyLines) {
  const auto ints = parse_fcidump_string(std::string(kHeader) +
                                         "0.5 0 0 0 0\n-1.25 1 1 0 0\n"
                                         "0.1 2 1 0 0\n");
  EXPECT_EQ(ints.n_orbitals, 2u);
  EXPECT_EQ(ints.n_electrons, 2u);
  EXPECT_EQ(ints.ms2, 0);
  EXPECT_DOUBLE_EQ(ints.e_nuclear, 0.5);
  EXPECT_DOUBLE_EQ(ints.h1(0, 0), -1.25);
  EXPECT_DOUBLE_EQ(ints.h1(0, 1), 0.1);
  EXPECT_DOUBLE_EQ(ints.h1(1, 0), 0.1);
}

TEST(ParseFcidump, CanonicalEntriesExpandToEightfoldSymmetry) {
  const auto ints = parse_fcidump_string(
      " &FCI NORB=3,NELEC=2,MS2=0 /\n"
      "0.7 1 2 3 1\n0.3 3 2 2 1\n0.2 1 1 2 2\n");
  // explicit permutation expansion of (12|31)
  const std::size_t p = 0, q = 1, r = 2, s = 0;
  for (auto [a, b, c, d] :
       {std::array{p, q, r, s}, std::array{q, p, r, s}, std::array{p, q, s, r},
        std::array{q, p, s, r}, std::array{r, s, p, q}, std::array{s, r, p, q},
        std::array{r, s, q, p}, std::array{s, r, q, p}})
    EXPECT_DOUBLE_EQ(ints.g2(a, b, c, d), 0.7);
  EXPECT_DOUBLE_EQ(ints.g2(1, 2, 0, 1), 0.3);
  EXPECT_DOUBLE_EQ(ints.g2(1, 1, 0, 0), 0.2);
  EXPECT_DOUBLE_EQ(ints.g2(0, 0, 0, 0), 0.0);
  EXPECT_EQ(symmetry_violation(ints), 0.0);
}

TEST(ParseFcidump, FortranExponentsAndOrbitalEnergies) {
  const auto ints = parse_fcidump_string(std::string(kHeader) +
                                         "1.5D-01 1 1 1 1\n-0.4 1 0 0 0\n");
  EXPECT_DOUBLE_EQ(ints.g2(0, 0, 0, 0), 0.15);
}

TEST(ParseFcidump, ErrorsCarryLineNumbers) {
  auto line_of = [](const std::string &text) -> std::size_t {
    try {
      parse_fcidump_string(text);
    } catch (const ParseError &e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of(std::string(kHeader) + "0.5 0 0 0 0\n1.0 3 1 0 0\n"), 6u);
  EXPECT_EQ(line_of(std::string(kHeader) + "abc 1 1 0 0\n"), 5u);
  EXPECT_EQ(line_of(std::string(kHeader) + "1.0 1 1 0\n"), 5u);
  EXPECT_THROW(parse_fcidump_string("NORB=2\n"), ParseError);
  EXPECT_THROW(parse_fcidump_string(" &FCI NELEC=2 &END\n"), ParseError);
  EXPECT_THROW(parse_fcidump_string(" &FCI NORB=2,NELEC=2\n0.1 1 1 1 1\n"),
               ParseError);
  EXPECT_THROW(load_fcidump("/nonexistent/file"), ParseError);
}

TEST(ParseFcidump, ShippedFixturesAreSymmetric) {
  for (const char *f : {"h2_0.74.fcidump", "lih_1.60.fcidump",
                        "h4_0.80.fcidump", "h6_1.00.fcidump"}) {
    const auto ints = load_fcidump(qt::fixture(f));
    EXPECT_LT(symmetry_violation(ints), 1e-10) << f;
  }
}

TEST(CasReduce, EmptyInactiveSpaceIsASlice) {
  const auto ints = load_fcidump(qt::fixture("h2_0.74.fcidump"));
  const auto prob = cas_reduce(ints, 2, 2);
  EXPECT_EQ(prob.e_inactive, 0.0);
  EXPECT_LT((prob.f_inactive - ints.h1).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_EQ(prob.g_active.data(), ints.g2.data());
  EXPECT_DOUBLE_EQ(prob.e_nuclear, ints.e_nuclear);
}

TEST(CasReduce, SingleInactiveOrbitalEnergy) {
  const auto ints = load_fcidump(qt::fixture("lih_1.60.fcidump"));
  const auto prob = cas_reduce(ints, 2, 2);
  ASSERT_EQ(prob.window, (std::vector<std::size_t>{1, 2}));
  // symbolic expansion with D = 2 delta and one inactive orbital
  EXPECT_NEAR(prob.e_inactive, 2 * ints.h1(0, 0) + ints.g2(0, 0, 0, 0),
              1e-12);
  for (std::size_t u = 0; u < 2; ++u)
    for (std::size_t v = 0; v < 2; ++v) {
      const std::size_t pu = u + 1, pv = v + 1;
      EXPECT_NEAR(prob.f_inactive(u, v),
                  ints.h1(pu, pv) + 2 * ints.g2(0, 0, pu, pv) -
                      ints.g2(0, pv, pu, 0),
                  1e-12);
    }
  EXPECT_LT((prob.f_inactive - prob.f_inactive.transpose()).cwiseAbs().maxCoeff(),
            1e-10);
}

TEST(CasReduce, DecoupledInactiveOrbitalReproducesFullEnergy) {
  // Orbital 0 interacts with the active pair only through Coulomb/exchange
  // integrals that F^I absorbs exactly, so the full-space FCI energy equals
  // E_nuc + E_inactive + E_active(CAS(2,2)) when orbital 0 stays doubly
  // occupied in the full ground state.
  const std::string text =
      " &FCI NORB=3,NELEC=4,MS2=0 &END\n"
      "-5.0 1 1 0 0\n-1.2 2 2 0 0\n-0.9 3 3 0 0\n0.05 3 2 0 0\n"
      "1.4 1 1 1 1\n0.6 2 2 2 2\n0.55 3 3 3 3\n0.5 2 2 3 3\n0.15 3 2 3 2\n"
      "0.4 1 1 2 2\n0.35 1 1 3 3\n0.02 2 1 2 1\n0.015 3 1 3 1\n"
      "0.3 0 0 0 0\n";
  const auto ints = parse_fcidump_string(text);
  const auto full = full_space(ints);
  const auto cas = cas_reduce(ints, 2, 2);
  const double e_full =
      qt::sector_ground(qt::determinant_hamiltonian(full), 4) + full.e_nuclear;
  const double e_cas = qt::sector_ground(qt::determinant_hamiltonian(cas), 2) +
                       cas.e_inactive + cas.e_nuclear;
  // Orbital 0 is 4 Hartree below the rest; residual coupling is tiny.
  EXPECT_NEAR(e_full, e_cas, 2e-4);
}

TEST(CasReduce, RejectsInvalidWindows) {
  const auto ints = load_fcidump(qt::fixture("lih_1.60.fcidump"));
  EXPECT_THROW(cas_reduce(ints, 2, 6), ConfigError);
  EXPECT_THROW(cas_reduce(ints, 1, 2), ConfigError);
  EXPECT_THROW(cas_reduce(ints, {0, 1}, 2), ConfigError);
  EXPECT_THROW(cas_reduce(ints, {1, 1}, 2), ConfigError);
  EXPECT_THROW(cas_reduce(ints, {1, 9}, 2), ConfigError);
}

TEST(CasReduce, ExplicitWindowMatchesContiguous) {
  const auto ints = load_fcidump(qt::fixture("lih_1.60.fcidump"));
  const auto a = cas_reduce(ints, {1, 2, 3}, 2);
  const auto b = cas_reduce(ints, 2, 3);
  EXPECT_EQ(a.window, b.window);
  EXPECT_EQ(a.g_active.data(), b.g_active.data());
}

TEST(CasReduce, MatchesExternalCasciReference) {
  // pyscf CASCI(2,2) / CASCI(4,4) for LiH at 1.60 A, STO-3G, RHF orbitals.
  const auto ints = load_fcidump(qt::fixture("lih_1.60.fcidump"));
  for (auto [e, o, ref] : {std::tuple{2u, 2u, -7.8621288334083985},
                           std::tuple{4u, 4u, -7.863061095484269}}) {
    const auto prob = cas_reduce(ints, e, o);
    const auto h = jordan_wigner(build_active_hamiltonian(prob));
    const auto gs = oracle::exact_ground(
        h, oracle::ParticleSector{e, Mapping::JordanWigner});
    EXPECT_NEAR(gs.energy + prob.e_inactive + prob.e_nuclear, ref, 1e-8);
  }
}

TEST(ActiveSpaceJson, RoundTrip) {
  const auto prob = cas_reduce(load_fcidump(qt::fixture("lih_1.60.fcidump")), 2, 3);
  const auto back =
      active_space_from_json(nlohmann::json::parse(to_json(prob).dump()));
  EXPECT_EQ(back.window, prob.window);
  EXPECT_EQ(back.g_active.data(), prob.g_active.data());
  EXPECT_EQ(back.f_inactive, prob.f_inactive);
  EXPECT_EQ(back.e_inactive, prob.e_inactive);
  EXPECT_THROW(active_space_from_json(nlohmann::json::parse("{}")), ParseError);
}

TEST(BuildActiveHamiltonian, SingleOrbitalOccupationLevels) {
  ActiveSpaceProblem prob;
  prob.n_active_orbitals = 1;
  prob.f_inactive = Eigen::MatrixXd::Constant(1, 1, -0.8);
  prob.g_active = Tensor4(1);
  const auto op = build_active_hamiltonian(prob);
  EXPECT_TRUE(op.conserves_particle_number());
  auto ev = qt::eigenvalues(qt::dense_hamiltonian(jordan_wigner(op)));
  std::vector<double> got(ev.data(), ev.data() + ev.size());
  EXPECT_NEAR(got[0], -1.6, 1e-14);
  EXPECT_NEAR(got[1], -0.8, 1e-14);
  EXPECT_NEAR(got[2], -0.8, 1e-14);
  EXPECT_NEAR(got[3], 0.0, 1e-14);
}

TEST(BuildActiveHamiltonian, NonInteractingLimitIsOrbitalFilling) {
  ActiveSpaceProblem prob;
  prob.n_active_orbitals = 2;
  prob.f_inactive = Eigen::MatrixXd(2, 2);
  prob.f_inactive << -1.0, 0.0, 0.0, -0.25;
  prob.g_active = Tensor4(2);
  const auto h = jordan_wigner(build_active_hamiltonian(prob));
  // Diagonal in the occupation basis: energy = sum of filled orbital energies.
  for (std::uint64_t occ = 0; occ < 16; ++occ) {
    double expect = 0.0;
    for (std::size_t p = 0; p < 4; ++p)
      if (occ >> p & 1)
        expect += p < 2 ? -1.0 : -0.25;
    EXPECT_NEAR(h.diagonal_expectation(occ), expect, 1e-14);
  }
}

TEST(BuildActiveHamiltonian, MatchesDeterminantOracleOnH2) {
  for (const char *f : {"h2_0.74.fcidump", "h2_1.50.fcidump"}) {
    const auto prob = full_space(load_fcidump(qt::fixture(f)));
    const auto op = build_active_hamiltonian(prob);
    const qt::Matrix det = qt::determinant_hamiltonian(prob);
    const qt::Matrix jw = qt::dense_hamiltonian(jordan_wigner(op));
    EXPECT_LT((jw - det).norm(), 1e-12) << f;
    const auto gs =
        oracle::exact_ground(jordan_wigner(op), oracle::ParticleSector{2});
    EXPECT_NEAR(gs.energy, qt::sector_ground(det, 2), 1e-12);
  }
}

TEST(BuildActiveHamiltonian, MatchesExternalFciReference) {
  // pyscf FCI totals (STO-3G) for the shipped H2 and H4 fixtures.
  for (auto [f, e, ref] :
       {std::tuple{"h2_0.60.fcidump", 2u, -1.1162860068695395},
        std::tuple{"h2_0.74.fcidump", 2u, -1.1372838344885023},
        std::tuple{"h2_1.00.fcidump", 2u, -1.1011503302326187},
        std::tuple{"h2_1.50.fcidump", 2u, -0.9981493534714101}}) {
    const auto prob = full_space(load_fcidump(qt::fixture(f)));
    const auto h = parity_map(build_active_hamiltonian(prob));
    const auto gs =
        oracle::exact_ground(h, oracle::ParticleSector{e, Mapping::Parity});
    EXPECT_NEAR(gs.energy + prob.e_nuclear, ref, 1e-9) << f;
  }
}

TEST(JordanWigner, NumberOperators) {
  for (std::size_t p : {0u, 1u}) {
    FermionOperator op(2);
    op.add(1.0, {cre(p), ann(p)});
    const auto h = jordan_wigner(op);
    EXPECT_EQ(h.size(), 2u);
    EXPECT_DOUBLE_EQ(h.constant(), 0.5);
    EXPECT_DOUBLE_EQ(
        h.coefficient(pauli::PauliString::single(2, p, pauli::Letter::Z)),
        -0.5);
  }
}

TEST(JordanWigner, HoppingTerm) {
  FermionOperator op(2);
  op.add(1.0, {cre(0), ann(1)});
  op.add(1.0, {cre(1), ann(0)});
  const auto h = jordan_wigner(op);
  EXPECT_EQ(h.size(), 2u);
  EXPECT_DOUBLE_EQ(h.coefficient(pauli::PauliString::from_label("XX")), 0.5);
  EXPECT_DOUBLE_EQ(h.coefficient(pauli::PauliString::from_label("YY")), 0.5);
  EXPECT_LT((qt::dense_hamiltonian(h) - occupation_dense(op)).norm(), 1e-14);
}

TEST(JordanWigner, RandomOperatorsMatchOccupationMatrices) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    const auto op = random_hermitian_operator(rng, 2 + rng() % 4);
    EXPECT_LT((mapped_dense(op, Mapping::JordanWigner) - occupation_dense(op))
                  .norm(),
              1e-12);
  }
}

TEST(JordanWigner, RejectsNonHermitianOperators) {
  FermionOperator op(2);
  op.add(1.0, {cre(0), ann(1)});
  EXPECT_THROW(jordan_wigner(op), NumericError);
}

TEST(ParityMap, NumberOperatorOnTwoModes) {
  FermionOperator op(2);
  op.add(1.0, {cre(0), ann(0)});
  const auto h = parity_map(op);
  // parity qubit 0 holds n_0 itself
  for (std::uint64_t occ = 0; occ < 4; ++occ)
    EXPECT_NEAR(h.diagonal_expectation(encode_occupation(occ, 2, Mapping::Parity)),
                double(occ & 1), 1e-15);
  EXPECT_LT((qt::dense_hamiltonian(h) -
             qt::Matrix(qt::Matrix::Identity(4, 4) - qt::dense_label("ZI")) / 2)
                .norm(),
            1e-14);
}

TEST(ParityMap, SpectrumMatchesJordanWigner) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 12; ++trial) {
    const auto op = random_hermitian_operator(rng, 2 + rng() % 5);
    const auto a = qt::eigenvalues(mapped_dense(op, Mapping::JordanWigner));
    const auto b = qt::eigenvalues(mapped_dense(op, Mapping::Parity));
    EXPECT_LT((a - b).cwiseAbs().maxCoeff(), 1e-10);
  }
}

TEST(ParityMap, IsTheBasisChangeOfJordanWigner) {
  // |occ> in JW corresponds to |prefix parity(occ)> in the parity encoding.
  std::mt19937_64 rng(33);
  const std::size_t n = 4;
  const auto op = random_hermitian_operator(rng, n);
  const qt::Matrix jw = mapped_dense(op, Mapping::JordanWigner);
  const qt::Matrix par = mapped_dense(op, Mapping::Parity);
  for (std::uint64_t a = 0; a < 16; ++a)
    for (std::uint64_t b = 0; b < 16; ++b)
      EXPECT_NEAR(std::abs(jw(a, b) - par(encode_occupation(a, n, Mapping::Parity),
                                          encode_occupation(b, n, Mapping::Parity))),
                  0.0, 1e-12);
}

TEST(Mappings, NumberOperatorCommutesWithHamiltonian) {
  for (auto m : {Mapping::JordanWigner, Mapping::Parity}) {
    const auto prob = cas_reduce(load_fcidump(qt::fixture("lih_1.60.fcidump")), 2, 3);
    const qt::Matrix h = mapped_dense(build_active_hamiltonian(prob), m);
    const qt::Matrix n = mapped_dense(number_operator(6), m);
    EXPECT_LT((h * n - n * h).norm(), 1e-10);
  }
}

TEST(HfBitstring, Examples) {
  EXPECT_EQ(hf_bitstring(2, 4, Mapping::JordanWigner), "1100");
  EXPECT_EQ(hf_bitstring(0, 4, Mapping::JordanWigner), "0000");
  EXPECT_EQ(hf_bitstring(0, 4, Mapping::Parity), "0000");
  EXPECT_EQ(hf_bitstring(2, 4, Mapping::Parity), "1000");
  // independent prefix-XOR of the JW occupation string
  const std::string jw = hf_bitstring(4, 8, Mapping::JordanWigner);
  std::string expect;
  char parity = '0';
  for (char c : jw) {
    parity = (c == parity) ? '0' : '1';
    expect += parity;
  }
  EXPECT_EQ(hf_bitstring(4, 8, Mapping::Parity), expect);
  EXPECT_EQ(expect, "10100000");
  EXPECT_THROW(hf_bitstring(5, 4, Mapping::Parity), ConfigError);
}

TEST(HfBitstring, DecodesBackToAufbauOccupation) {
  for (auto m : {Mapping::JordanWigner, Mapping::Parity})
    for (std::size_t e = 0; e <= 8; ++e) {
      const auto idx = hf_state_index(e, 8, m);
      EXPECT_EQ(decode_occupation(idx, 8, m), (std::uint64_t{1} << e) - 1);
    }
}

TEST(UccsdExcitations, TableCounts) {
  EXPECT_EQ(uccsd_excitations(2, 2).parameter_count(), 3u);
  const auto cas44 = uccsd_excitations(4, 4);
  EXPECT_EQ(cas44.singles.size(), 8u);
  EXPECT_EQ(cas44.doubles.size(), 18u);
  EXPECT_EQ(cas44.parameter_count(), 26u);
  const auto cas66 = uccsd_excitations(6, 6);
  EXPECT_EQ(cas66.singles.size(), 18u);
  EXPECT_EQ(cas66.doubles.size(), 99u);
  EXPECT_EQ(cas66.parameter_count(), 117u);
}

TEST(UccsdExcitations, MatchClosedFormAndGrowMonotonically) {
  std::size_t prev = 0;
  for (std::size_t k = 1; k <= 6; ++k) {
    const auto ex = uccsd_excitations(2 * k, 2 * k);
    EXPECT_EQ(ex.singles.size(), closed_form_singles(2 * k, 2 * k));
    EXPECT_EQ(ex.doubles.size(), closed_form_doubles(2 * k, 2 * k));
    EXPECT_GT(ex.parameter_count(), prev);
    prev = ex.parameter_count();
    for (const auto &[a, b, m, v] : ex.doubles) {
      EXPECT_GT(a, b);
      EXPECT_GT(m, v);
    }
  }
  for (std::size_t e = 2; e <= 6; e += 2)
    for (std::size_t o = e / 2; o <= 6; ++o) {
      const auto ex = uccsd_excitations(e, o);
      EXPECT_EQ(ex.singles.size(), closed_form_singles(e, o));
      EXPECT_EQ(ex.doubles.size(), closed_form_doubles(e, o));
    }
}

TEST(UccsdGenerators, SingleExcitationUnderJordanWigner) {
  ExcitationList ex;
  ex.n_spin_orbitals = 2;
  ex.singles = {{0, 1}};
  const auto gens = uccsd_generator_paulis(ex, Mapping::JordanWigner);
  ASSERT_EQ(gens.size(), 1u);
  // a+_1 a_0 - a+_0 a_1 = i/2 (Y_0 X_1 - X_0 Y_1)
  ASSERT_EQ(gens[0].terms.size(), 2u);
  qt::Matrix g = qt::Matrix::Zero(4, 4);
  for (const auto &[p, w] : gens[0].terms)
    g += qt::cd(0, w) * qt::dense_label(p.label());
  const qt::Matrix expect =
      qt::ladder_product_matrix(2, {{1, true}, {0, false}}) -
      qt::ladder_product_matrix(2, {{0, true}, {1, false}});
  EXPECT_LT((g - expect).norm(), 1e-14);
  const qt::Matrix ref = qt::cd(0, 0.5) * (qt::dense_label("YX") -
                                           qt::dense_label("XY"));
  EXPECT_LT((g - ref).norm(), 1e-14);
}

TEST(UccsdGenerators, DoubleExcitationHasEightEqualTerms) {
  ExcitationList ex;
  ex.n_spin_orbitals = 4;
  ex.doubles = {{1, 0, 3, 2}};
  for (auto m : {Mapping::JordanWigner, Mapping::Parity}) {
    const auto gens = uccsd_generator_paulis(ex, m);
    ASSERT_EQ(gens[0].terms.size(), 8u);
    for (const auto &[p, w] : gens[0].terms)
      EXPECT_NEAR(std::abs(w), 0.125, 1e-15);
  }
  const auto gens = uccsd_generator_paulis(ex, Mapping::JordanWigner);
  qt::Matrix g = qt::Matrix::Zero(16, 16);
  for (const auto &[p, w] : gens[0].terms)
    g += qt::cd(0, w) * qt::dense_label(p.label());
  const qt::Matrix expect =
      qt::ladder_product_matrix(4, {{3, true}, {2, true}, {0, false}, {1, false}}) -
      qt::ladder_product_matrix(4, {{1, true}, {0, true}, {2, false}, {3, false}});
  EXPECT_LT((g - expect).norm(), 1e-14);
  EXPECT_LT((g + g.adjoint()).norm(), 1e-14);
}
