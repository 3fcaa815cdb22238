/*******************************************************************************
 * Copyright (c) 2026 The qcc-engine Authors.                                  *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#pragma once

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qcc/error.hpp"
#include "qcc/solver/extrapolate.hpp"
#include "qcc/solver/qcc.hpp"

namespace qcc::solver {

inline constexpr int kSchemaVersion = 1;

inline nlohmann::json to_json(const OptimizerSettings &s) {
  return {{"lower", s.lower},
          {"upper", s.upper},
          {"tolerance", s.tolerance},
          {"grid_points", s.grid_points},
          {"max_evaluations", s.max_evaluations},
          {"restarts", s.restarts},
          {"initial_step", s.initial_step}};
}

inline nlohmann::json to_json(const QccConfig &c) {
  return {{"generators_per_iteration", c.generators_per_iteration},
          {"max_iterations", c.max_iterations},
          {"energy_tolerance", c.energy_tolerance},
          {"prune_threshold", c.prune_threshold},
          {"gradient_threshold", c.gradient_threshold},
          {"optimizer", to_json(c.optimizer)},
          {"seed", c.seed}};
}

/// Overlays the keys present in `j` onto `base`; unknown keys are errors.
inline QccConfig qcc_config_from_json(const nlohmann::json &j,
                                      QccConfig base = {}) {
  if (!j.is_object())
    throw ConfigError("QCC config must be a JSON object");
  try {
    for (const auto &[key, value] : j.items()) {
      if (key == "generators_per_iteration")
        base.generators_per_iteration = value.get<std::size_t>();
      else if (key == "max_iterations")
        base.max_iterations = value.get<std::size_t>();
      else if (key == "energy_tolerance")
        base.energy_tolerance = value.get<double>();
      else if (key == "prune_threshold")
        base.prune_threshold = value.get<double>();
      else if (key == "gradient_threshold")
        base.gradient_threshold = value.get<double>();
      else if (key == "seed")
        base.seed = value.get<std::uint64_t>();
      else if (key == "optimizer") {
        auto &o = base.optimizer;
        for (const auto &[k, v] : value.items()) {
          if (k == "lower")
            o.lower = v.get<double>();
          else if (k == "upper")
            o.upper = v.get<double>();
          else if (k == "tolerance")
            o.tolerance = v.get<double>();
          else if (k == "grid_points")
            o.grid_points = v.get<std::size_t>();
          else if (k == "max_evaluations")
            o.max_evaluations = v.get<std::size_t>();
          else if (k == "restarts")
            o.restarts = v.get<std::size_t>();
          else if (k == "initial_step")
            o.initial_step = v.get<double>();
          else
            throw ConfigError("unknown optimizer key \"" + k + "\"");
        }
      } else if (key != "schema_version") {
        throw ConfigError("unknown QCC config key \"" + key + "\"");
      }
    }
  } catch (const nlohmann::json::exception &e) {
    throw ConfigError(std::string("QCC config: ") + e.what());
  }
  base.validate();
  return base;
}

inline nlohmann::json to_json(const QccTrace &t) {
  nlohmann::json its = nlohmann::json::array();
  for (const auto &it : t.iterations) {
    nlohmann::json gens = nlohmann::json::array();
    for (const auto &g : it.generators)
      gens.push_back({{"pauli", g.generator.label()},
                      {"amplitude", g.amplitude},
                      {"gradient", g.gradient}});
    its.push_back({{"iteration", it.index},
                   {"energy", it.energy},
                   {"term_count", it.term_count},
                   {"optimizer_converged", it.optimizer_converged},
                   {"generators", std::move(gens)}});
  }
  return {{"schema_version", kSchemaVersion},
          {"n_qubits", t.n_qubits},
          {"reference", t.reference},
          {"initial_energy", t.initial_energy},
          {"initial_term_count", t.initial_term_count},
          {"final_energy", t.final_energy},
          {"total_energy", total_energy(t)},
          {"e_inactive", t.e_inactive},
          {"e_nuclear", t.e_nuclear},
          {"converged", t.converged},
          {"stop_reason", t.stop_reason},
          {"parameters", t.parameter_count()},
          {"iterations", std::move(its)}};
}

inline QccTrace trace_from_json(const nlohmann::json &j) {
  try {
    QccTrace t;
    t.n_qubits = j.value("n_qubits", std::size_t{0});
    t.reference = j.value("reference", std::uint64_t{0});
    t.initial_energy = j.at("initial_energy").get<double>();
    t.initial_term_count = j.value("initial_term_count", std::size_t{0});
    t.e_inactive = j.value("e_inactive", 0.0);
    t.e_nuclear = j.value("e_nuclear", 0.0);
    t.converged = j.value("converged", false);
    t.stop_reason = j.value("stop_reason", std::string{});
    for (const auto &it : j.at("iterations")) {
      IterationRecord rec;
      rec.index = it.value("iteration", t.iterations.size() + 1);
      rec.energy = it.at("energy").get<double>();
      rec.term_count = it.value("term_count", std::size_t{0});
      rec.optimizer_converged = it.value("optimizer_converged", true);
      if (it.contains("generators"))
        for (const auto &g : it.at("generators"))
          rec.generators.push_back(
              {pauli::PauliString::from_label(g.at("pauli").get<std::string>()),
               g.at("amplitude").get<double>(), g.value("gradient", 0.0)});
      t.iterations.push_back(std::move(rec));
    }
    t.final_energy = j.value("final_energy", t.iterations.empty()
                                                 ? t.initial_energy
                                                 : t.iterations.back().energy);
    return t;
  } catch (const nlohmann::json::exception &e) {
    throw ParseError(std::string("trace JSON: ") + e.what());
  }
}

/// Fixed-point Hartree formatting used in every CSV.
inline std::string format_energy(double e) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(10) << e;
  return os.str();
}

/// iteration,energy,term_count; row 0 is the reference energy.
inline void write_trace_csv(std::ostream &os, const QccTrace &t) {
  os << "iteration,energy,term_count\n";
  os << 0 << ',' << format_energy(t.initial_energy) << ','
     << t.initial_term_count << '\n';
  for (const auto &it : t.iterations)
    os << it.index << ',' << format_energy(it.energy) << ',' << it.term_count
       << '\n';
}

/// Reads a trace CSV written by write_trace_csv (term counts optional).
inline QccTrace trace_from_csv(std::istream &in) {
  QccTrace t;
  std::string line;
  std::size_t line_no = 0;
  bool first_row = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line.rfind("iteration", 0) == 0)
      continue;
    std::istringstream row(line);
    std::string idx, energy, terms;
    std::getline(row, idx, ',');
    std::getline(row, energy, ',');
    std::getline(row, terms, ',');
    try {
      const double e = std::stod(energy);
      const std::size_t tc = terms.empty() ? 0 : std::stoul(terms);
      if (first_row) {
        t.initial_energy = e;
        t.initial_term_count = tc;
        first_row = false;
      } else {
        IterationRecord rec;
        rec.index = std::stoul(idx);
        rec.energy = e;
        rec.term_count = tc;
        t.iterations.push_back(rec);
      }
    } catch (const std::exception &) {
      throw ParseError("trace CSV: malformed row", line_no);
    }
  }
  if (first_row)
    throw ParseError("trace CSV: no data rows");
  t.final_energy =
      t.iterations.empty() ? t.initial_energy : t.iterations.back().energy;
  return t;
}

inline nlohmann::json to_json(const ExtrapolationResult &r) {
  nlohmann::json crossings = nlohmann::json::array();
  for (const auto &c : r.crossings)
    crossings.push_back({{"threshold", c.threshold},
                         {"fractional_iteration", c.fractional_iteration},
                         {"iteration", c.iteration},
                         {"expected_energy", c.expected_energy}});
  return {{"schema_version", kSchemaVersion},
          {"a", r.a},
          {"b", r.b},
          {"difference_intercept", r.difference_intercept},
          {"e0_estimate", r.e0_estimate},
          {"residual", r.residual},
          {"fit_window", {{"discard", r.discard}, {"use", r.window}}},
          {"crossings", std::move(crossings)}};
}

} // namespace qcc::solver
