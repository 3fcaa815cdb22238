/*******************************************************************************
 * Copyright (c) 2026 The qcc-engine Authors.                                  *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
// qcc: command-line driver for the QCC engine.
//
//   qcc ham FCIDUMP          mapped active-space Hamiltonian as JSON
//   qcc fci INPUT            exact ground energies
//   qcc qcc INPUT            QCC traces plus a summary CSV
//   qcc uccsd [INPUT]        UCCSD parameter counts, optionally optimized
//   qcc extrapolate TRACE    exponential fit of a convergence trace
//   qcc measure HAMILTONIAN  finite-shot energy estimate
//   qcc pes MANIFEST         every solver of a manifest across geometries
//
// INPUT is a manifest (.json) or a single FCIDUMP file. Exit codes: 0 ok,
// 1 other failure, 2 parse error, 3 numeric error, 4 configuration error.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qcc/qcc.hpp"

namespace {

namespace fs = std::filesystem;
using json = nlohmann::json;
using namespace qcc;

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kParseFailure = 2,
  kNumericFailure = 3,
  kConfigFailure = 4,
};

struct Failure {
  int code = kOk;
  std::string message;
};

Failure classify(std::exception_ptr ep) {
  try {
    std::rethrow_exception(ep);
  } catch (const ParseError &e) {
    return {kParseFailure, e.what()};
  } catch (const NumericError &e) {
    return {kNumericFailure, e.what()};
  } catch (const ConfigError &e) {
    return {kConfigFailure, e.what()};
  } catch (const std::exception &e) {
    return {kFailure, e.what()};
  }
}

// ---------------------------------------------------------------------------
// File helpers

json read_json(const fs::path &path) {
  std::ifstream in(path);
  if (!in)
    throw ParseError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error &e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_text(const std::string &target, const std::string &text) {
  if (target.empty() || target == "-") {
    std::cout << text;
    return;
  }
  const fs::path p(target);
  if (p.has_parent_path())
    fs::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary);
  if (!out)
    throw ConfigError("cannot write " + p.string());
  out << text;
}

std::string dump(const json &j) { return j.dump(2) + "\n"; }

std::string csv_field(const std::string &s) {
  if (s.find_first_of(",\"\n") == std::string::npos)
    return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"')
      out += '"';
    out += c == '\n' ? ' ' : c;
  }
  return out + "\"";
}

std::string file_stem(const std::string &label) {
  std::string s = label;
  for (auto &c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '.' || c == '-' ||
          c == '_'))
      c = '_';
  return s;
}

std::vector<std::size_t> parse_index_list(const std::string &text,
                                          const char *what) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    try {
      std::size_t used = 0;
      const long v = std::stol(item, &used);
      if (used != item.size() || v < 0)
        throw std::invalid_argument(item);
      out.push_back(static_cast<std::size_t>(v));
    } catch (const std::exception &) {
      throw ConfigError(std::string(what) + ": \"" + text +
                        "\" is not a comma-separated list of indices");
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Active spaces and manifests

struct SpaceSpec {
  std::optional<std::size_t> electrons;
  std::optional<std::size_t> orbitals;
  std::vector<std::size_t> window; ///< 0-based orbital indices

  void overlay(const SpaceSpec &o) {
    if (o.electrons)
      electrons = o.electrons;
    if (o.orbitals)
      orbitals = o.orbitals;
    if (!o.window.empty())
      window = o.window;
  }
};

SpaceSpec space_from_json(const json &j) {
  if (!j.is_object())
    throw ConfigError("active_space must be an object");
  SpaceSpec s;
  try {
    for (const auto &[k, v] : j.items()) {
      if (k == "electrons")
        s.electrons = v.get<std::size_t>();
      else if (k == "orbitals")
        s.orbitals = v.get<std::size_t>();
      else if (k == "window")
        s.window = v.get<std::vector<std::size_t>>();
      else
        throw ConfigError("unknown active_space key \"" + k + "\"");
    }
  } catch (const json::exception &e) {
    throw ConfigError(std::string("active_space: ") + e.what());
  }
  return s;
}

chem::ActiveSpaceProblem reduce(const chem::ElectronIntegrals &ints,
                                const SpaceSpec &s) {
  if (!s.window.empty()) {
    if (!s.electrons)
      throw ConfigError("an orbital window needs an active electron count");
    if (s.orbitals && *s.orbitals != s.window.size())
      throw ConfigError("active orbital count disagrees with the window size");
    return chem::cas_reduce(ints, s.window, *s.electrons);
  }
  if (s.electrons && s.orbitals)
    return chem::cas_reduce(ints, *s.electrons, *s.orbitals);
  if (s.electrons || s.orbitals)
    throw ConfigError("active space needs both electrons and orbitals");
  return chem::full_space(ints);
}

struct Geometry {
  std::string label;
  fs::path fcidump;
  SpaceSpec space;
};

struct UccsdOptions {
  bool optimize = false;
  bool force = false;
  std::size_t max_parameters = 30;
};

struct Manifest {
  std::vector<Geometry> geometries;
  Mapping mapping = Mapping::Parity;
  std::vector<std::string> solvers{"qcc"};
  solver::QccConfig qcc;
  UccsdOptions uccsd;
  std::optional<fs::path> output_dir;
  std::optional<std::size_t> workers;
};

const std::set<std::string> kSolvers{"qcc", "uccsd", "fci"};

Manifest manifest_from_json(const json &j, const fs::path &base) {
  if (!j.is_object())
    throw ConfigError("manifest must be a JSON object");
  Manifest m;
  SpaceSpec shared;
  try {
    for (const auto &[k, v] : j.items()) {
      if (k == "schema_version") {
        if (v.get<int>() != solver::kSchemaVersion)
          throw ConfigError("unsupported manifest schema_version " + v.dump());
      } else if (k == "mapping") {
        m.mapping = mapping_from_string(v.get<std::string>());
      } else if (k == "active_space") {
        shared = space_from_json(v);
      } else if (k == "solvers") {
        m.solvers = v.get<std::vector<std::string>>();
      } else if (k == "qcc") {
        m.qcc = solver::qcc_config_from_json(v);
      } else if (k == "uccsd") {
        for (const auto &[uk, uv] : v.items()) {
          if (uk == "optimize")
            m.uccsd.optimize = uv.get<bool>();
          else if (uk == "force")
            m.uccsd.force = uv.get<bool>();
          else if (uk == "max_parameters")
            m.uccsd.max_parameters = uv.get<std::size_t>();
          else
            throw ConfigError("unknown uccsd key \"" + uk + "\"");
        }
      } else if (k == "output_dir") {
        m.output_dir = base / v.get<std::string>();
      } else if (k == "workers") {
        m.workers = v.get<std::size_t>();
      } else if (k != "geometries") {
        throw ConfigError("unknown manifest key \"" + k + "\"");
      }
    }
    if (!j.contains("geometries") || !j["geometries"].is_array() ||
        j["geometries"].empty())
      throw ConfigError("manifest needs a non-empty \"geometries\" array");
    for (const auto &g : j["geometries"]) {
      Geometry geo;
      geo.space = shared;
      for (const auto &[k, v] : g.items()) {
        if (k == "label")
          geo.label = v.is_string() ? v.get<std::string>() : v.dump();
        else if (k == "fcidump")
          geo.fcidump = base / v.get<std::string>();
        else if (k == "active_space")
          geo.space.overlay(space_from_json(v));
        else
          throw ConfigError("unknown geometry key \"" + k + "\"");
      }
      if (geo.label.empty())
        throw ConfigError("every geometry needs a label");
      if (geo.fcidump.empty())
        throw ConfigError("geometry " + geo.label + " has no fcidump path");
      m.geometries.push_back(std::move(geo));
    }
  } catch (const json::exception &e) {
    throw ConfigError(std::string("manifest: ") + e.what());
  }

  std::set<std::string> labels, stems;
  for (const auto &g : m.geometries) {
    if (!labels.insert(g.label).second)
      throw ConfigError("duplicate geometry label \"" + g.label + "\"");
    if (!stems.insert(file_stem(g.label)).second)
      throw ConfigError("geometry labels collide as file names: \"" + g.label +
                        "\"");
    if (!fs::is_regular_file(g.fcidump))
      throw ConfigError("geometry " + g.label + ": file " + g.fcidump.string() +
                        " does not exist");
  }
  for (const auto &s : m.solvers)
    if (!kSolvers.count(s))
      throw ConfigError("unknown solver \"" + s + "\" (expected qcc, uccsd, fci)");
  return m;
}

bool is_json_path(const std::string &p) {
  return fs::path(p).extension() == ".json";
}

/// A manifest file, or a single FCIDUMP treated as a one-geometry manifest.
Manifest load_input(const std::string &input) {
  if (is_json_path(input)) {
    const fs::path p(input);
    return manifest_from_json(read_json(p), p.parent_path());
  }
  if (!fs::is_regular_file(input))
    throw ConfigError("input file " + input + " does not exist");
  Manifest m;
  m.geometries.push_back({fs::path(input).stem().string(), input, {}});
  return m;
}

/// Shared flags for commands that build active-space problems.
struct ProblemFlags {
  std::string cas;
  std::string window;
  std::string mapping;

  void add_to(CLI::App *app) {
    app->add_option("--cas", cas,
                    "active space as ELECTRONS,ORBITALS (default: manifest, "
                    "else the full space)");
    app->add_option("--window", window,
                    "explicit 0-based active orbital indices, e.g. 1,2");
    app->add_option("--mapping", mapping,
                    "jw or parity (default: manifest, else parity)");
  }

  void apply(Manifest &m) const {
    SpaceSpec s;
    if (!cas.empty()) {
      const auto eo = parse_index_list(cas, "--cas");
      if (eo.size() != 2)
        throw ConfigError("--cas expects ELECTRONS,ORBITALS");
      s.electrons = eo[0];
      s.orbitals = eo[1];
    }
    if (!window.empty())
      s.window = parse_index_list(window, "--window");
    for (auto &g : m.geometries)
      g.space.overlay(s);
    if (!mapping.empty())
      m.mapping = mapping_from_string(mapping);
  }
};

/// QCC configuration flags; only flags given on the command line override.
struct QccFlags {
  std::string config_path;
  std::size_t generators = 0;
  std::size_t max_iterations = 0;
  double tolerance = 0.0;
  std::uint64_t seed = 0;
  CLI::Option *generators_opt = nullptr;
  CLI::Option *max_iterations_opt = nullptr;
  CLI::Option *tolerance_opt = nullptr;
  CLI::Option *seed_opt = nullptr;

  void add_to(CLI::App *app) {
    const solver::QccConfig d;
    app->add_option("--config", config_path, "QCC config JSON overlaid on the manifest");
    generators_opt = app->add_option(
        "-n,--generators", generators,
        "generators per iteration (default " + std::to_string(d.generators_per_iteration) + ")");
    max_iterations_opt = app->add_option(
        "--max-iterations", max_iterations,
        "iteration cap (default " + std::to_string(d.max_iterations) + ")");
    tolerance_opt = app->add_option("--tolerance", tolerance,
                                    "energy tolerance in Hartree (default 1e-6)");
    seed_opt = app->add_option("--seed", seed, "optimizer seed (default 7)");
  }

  void apply(solver::QccConfig &c) const {
    if (!config_path.empty())
      c = solver::qcc_config_from_json(read_json(config_path), c);
    if (generators_opt->count())
      c.generators_per_iteration = generators;
    if (max_iterations_opt->count())
      c.max_iterations = max_iterations;
    if (tolerance_opt->count())
      c.energy_tolerance = tolerance;
    if (seed_opt->count())
      c.seed = seed;
    c.validate();
  }
};

std::size_t default_workers() {
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Runs task(i) for i in [0, count) on up to `workers` threads. Tasks must
/// not throw.
void run_pool(std::size_t count, std::size_t workers,
              const std::function<void(std::size_t)> &task) {
  std::atomic<std::size_t> next{0};
  auto body = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < count;)
      task(i);
  };
  const std::size_t extra = std::min(std::max<std::size_t>(workers, 1), count);
  std::vector<std::jthread> pool;
  for (std::size_t k = 1; k < extra; ++k)
    pool.emplace_back(body);
  body();
}

std::vector<std::size_t> label_order(const Manifest &m) {
  std::vector<std::size_t> idx(m.geometries.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return m.geometries[a].label < m.geometries[b].label;
  });
  return idx;
}

chem::QubitProblem build_problem(const Geometry &g, Mapping mapping) {
  const auto ints = chem::load_fcidump(g.fcidump.string());
  return chem::map_problem(reduce(ints, g.space), mapping);
}

double oracle_total(const chem::QubitProblem &p) {
  const auto gs = oracle::exact_ground(
      p.hamiltonian, oracle::ParticleSector{p.n_electrons(), p.mapping});
  return gs.energy + p.energy_offset();
}

json problem_metadata(const chem::QubitProblem &p) {
  return {{"mapping", to_string(p.mapping)},
          {"n_qubits", p.n_qubits()},
          {"n_electrons", p.space.n_active_electrons},
          {"n_active_orbitals", p.space.n_active_orbitals},
          {"window", p.space.window},
          {"e_inactive", p.space.e_inactive},
          {"e_nuclear", p.space.e_nuclear},
          {"reference", p.reference_bits()},
          {"term_count", p.hamiltonian.size()}};
}

json hamiltonian_document(const chem::QubitProblem &p, const std::string &source) {
  json j = {{"schema_version", solver::kSchemaVersion}, {"source", source}};
  j.update(problem_metadata(p));
  j["hamiltonian"] = pauli::to_json(p.hamiltonian);
  return j;
}

// ---------------------------------------------------------------------------
// Per-geometry work

struct QccOutcome {
  Failure failure;
  solver::QccTrace trace;
  double e_fci_total = 0.0;
  std::optional<solver::ExtrapolationResult> fit;
  std::string fit_note;
};

QccOutcome run_qcc_geometry(const Geometry &g, Mapping mapping,
                            const solver::QccConfig &cfg, bool with_fit) {
  QccOutcome out;
  try {
    const auto p = build_problem(g, mapping);
    out.trace = solver::qcc_run(p.hamiltonian, p.reference_state(), cfg);
    out.trace.e_inactive = p.space.e_inactive;
    out.trace.e_nuclear = p.space.e_nuclear;
    out.e_fci_total = oracle_total(p);
    if (with_fit) {
      try {
        out.fit = solver::extrapolate(out.trace);
      } catch (const Error &e) {
        out.fit_note = e.what();
      }
    }
  } catch (...) {
    out.failure = classify(std::current_exception());
  }
  return out;
}

struct UccsdOutcome {
  Failure failure;
  chem::ExcitationList excitations;
  std::optional<solver::UccsdResult> result;
  double offset = 0.0;
  double e_fci_total = 0.0;
};

UccsdOutcome run_uccsd_geometry(const Geometry &g, Mapping mapping,
                                const UccsdOptions &opt, std::uint64_t seed) {
  UccsdOutcome out;
  try {
    const auto ints = chem::load_fcidump(g.fcidump.string());
    const auto space = reduce(ints, g.space);
    out.excitations = chem::uccsd_excitations(space.n_active_electrons,
                                              space.n_active_orbitals);
    if (opt.optimize) {
      const auto p = chem::map_problem(space, mapping);
      const auto gens = chem::uccsd_generator_paulis(out.excitations, mapping);
      out.result = solver::uccsd_vqe(p.hamiltonian, p.reference_state(), gens,
                                     {}, seed);
      out.offset = p.energy_offset();
      out.e_fci_total = oracle_total(p);
    }
  } catch (...) {
    out.failure = classify(std::current_exception());
  }
  return out;
}

json uccsd_row(const std::string &label, const UccsdOutcome &o) {
  json row = {{"geometry", label}};
  if (o.failure.code) {
    row["error"] = o.failure.message;
    return row;
  }
  const auto &ex = o.excitations;
  row["electrons"] = ex.n_electrons;
  row["orbitals"] = ex.n_spin_orbitals / 2;
  row["singles"] = ex.singles.size();
  row["doubles"] = ex.doubles.size();
  row["parameters"] = ex.parameter_count();
  if (o.result) {
    const double total = o.result->energy + o.offset;
    row["E_uccsd_total"] = total;
    row["E_fci_total"] = o.e_fci_total;
    row["delta"] = total - o.e_fci_total;
    row["converged"] = o.result->converged;
    row["evaluations"] = o.result->evaluations;
    row["amplitudes"] = o.result->amplitudes;
    row["desk_scale"] = true;
  }
  return row;
}

int worst(int a, int b) { return a ? a : b; }

// ---------------------------------------------------------------------------
// Commands

int cmd_ham(const std::string &fcidump, const ProblemFlags &flags,
            const std::string &output) {
  Manifest m;
  m.geometries.push_back({fs::path(fcidump).stem().string(), fcidump, {}});
  flags.apply(m);
  const auto p = build_problem(m.geometries[0], m.mapping);
  write_text(output, dump(hamiltonian_document(p, fcidump)));
  return kOk;
}

int cmd_fci(const std::string &input, const ProblemFlags &flags,
            std::optional<std::size_t> electrons, const std::string &output) {
  json rows = json::array();
  int code = kOk;
  const json probe = is_json_path(input) ? read_json(input) : json();
  if (probe.is_object() && (probe.contains("hamiltonian") || probe.contains("terms"))) {
    const bool wrapped = probe.contains("hamiltonian");
    const auto h = pauli::hamiltonian_from_json(wrapped ? probe["hamiltonian"] : probe);
    std::optional<oracle::ParticleSector> sector;
    if (!electrons && wrapped && probe.contains("n_electrons"))
      electrons = probe["n_electrons"].get<std::size_t>();
    Mapping mapping = Mapping::JordanWigner;
    if (!flags.mapping.empty())
      mapping = mapping_from_string(flags.mapping);
    else if (wrapped && probe.contains("mapping"))
      mapping = mapping_from_string(probe["mapping"].get<std::string>());
    if (electrons)
      sector = oracle::ParticleSector{*electrons, mapping};
    const auto gs = oracle::exact_ground(h, sector);
    const double offset = wrapped ? probe.value("e_inactive", 0.0) +
                                        probe.value("e_nuclear", 0.0)
                                  : 0.0;
    json row = {{"geometry", fs::path(input).stem().string()},
                {"n_qubits", h.n_qubits()},
                {"e_active", gs.energy},
                {"e_total", gs.energy + offset},
                {"dimension", gs.dimension},
                {"degenerate", gs.degenerate},
                {"iterative", gs.iterative}};
    if (sector) {
      row["n_electrons"] = *electrons;
      row["mapping"] = to_string(mapping);
    }
    rows.push_back(row);
  } else {
    Manifest m = load_input(input);
    flags.apply(m);
    for (std::size_t i : label_order(m)) {
      const auto &g = m.geometries[i];
      try {
        const auto p = build_problem(g, m.mapping);
        const auto gs = oracle::exact_ground(
            p.hamiltonian, oracle::ParticleSector{p.n_electrons(), p.mapping});
        json row = {{"geometry", g.label},
                    {"e_active", gs.energy},
                    {"e_total", gs.energy + p.energy_offset()},
                    {"dimension", gs.dimension},
                    {"degenerate", gs.degenerate},
                    {"iterative", gs.iterative}};
        row.update(problem_metadata(p));
        rows.push_back(row);
      } catch (...) {
        const auto f = classify(std::current_exception());
        rows.push_back({{"geometry", g.label}, {"error", f.message}});
        code = worst(code, f.code);
      }
    }
  }
  write_text(output, dump({{"schema_version", solver::kSchemaVersion}, {"rows", rows}}));
  return code;
}

const char *kSummaryHeader =
    "geometry,E_qcc_total,E_fci_total,delta,iterations,parameters_used,status\n";

int cmd_qcc(const std::string &input, const ProblemFlags &pflags,
            const QccFlags &qflags, std::string out_dir,
            std::optional<std::size_t> workers) {
  Manifest m = load_input(input);
  pflags.apply(m);
  qflags.apply(m.qcc);
  const fs::path dir = !out_dir.empty() ? fs::path(out_dir)
                       : m.output_dir    ? *m.output_dir
                                         : fs::path("qcc_out");
  const std::size_t n_workers = workers ? *workers : m.workers.value_or(default_workers());

  std::vector<QccOutcome> results(m.geometries.size());
  run_pool(m.geometries.size(), n_workers, [&](std::size_t i) {
    results[i] = run_qcc_geometry(m.geometries[i], m.mapping, m.qcc, false);
  });

  fs::create_directories(dir);
  std::ostringstream summary;
  summary << kSummaryHeader;
  int code = kOk;
  for (std::size_t i : label_order(m)) {
    const auto &g = m.geometries[i];
    const auto &r = results[i];
    summary << csv_field(g.label) << ',';
    if (r.failure.code) {
      summary << ",,,,," << csv_field("error: " + r.failure.message) << '\n';
      std::cerr << "qcc: geometry " << g.label << ": " << r.failure.message << '\n';
      code = worst(code, r.failure.code);
      continue;
    }
    const double total = solver::total_energy(r.trace);
    summary << solver::format_energy(total) << ','
            << solver::format_energy(r.e_fci_total) << ','
            << solver::format_energy(total - r.e_fci_total) << ','
            << r.trace.iterations.size() << ',' << r.trace.parameter_count()
            << ",ok\n";
    const std::string stem = file_stem(g.label);
    json tj = solver::to_json(r.trace);
    tj["geometry"] = g.label;
    tj["mapping"] = to_string(m.mapping);
    tj["e_fci_total"] = r.e_fci_total;
    tj["config"] = solver::to_json(m.qcc);
    write_text((dir / (stem + ".trace.json")).string(), dump(tj));
    std::ostringstream csv;
    solver::write_trace_csv(csv, r.trace);
    write_text((dir / (stem + ".trace.csv")).string(), csv.str());
  }
  write_text((dir / "summary.csv").string(), summary.str());
  std::cout << summary.str();
  return code;
}

int cmd_uccsd(const std::string &input, const ProblemFlags &pflags,
              UccsdOptions opt, bool optimize_flag, bool force_flag,
              std::optional<std::size_t> max_parameters, std::uint64_t seed,
              std::optional<std::size_t> workers, const std::string &output) {
  json rows = json::array();
  int code = kOk;
  if (input.empty()) {
    if (pflags.cas.empty())
      throw ConfigError("uccsd needs an input file or --cas ELECTRONS,ORBITALS");
    if (optimize_flag)
      throw ConfigError("--optimize needs integrals: pass a manifest or FCIDUMP");
    const auto eo = parse_index_list(pflags.cas, "--cas");
    if (eo.size() != 2)
      throw ConfigError("--cas expects ELECTRONS,ORBITALS");
    UccsdOutcome o;
    o.excitations = chem::uccsd_excitations(eo[0], eo[1]);
    json row = uccsd_row("", o);
    row.erase("geometry");
    rows.push_back(row);
    write_text(output, dump({{"schema_version", solver::kSchemaVersion}, {"rows", rows}}));
    return kOk;
  }

  Manifest m = load_input(input);
  pflags.apply(m);
  if (is_json_path(input))
    opt = m.uccsd;
  opt.optimize = opt.optimize || optimize_flag;
  opt.force = opt.force || force_flag;
  if (max_parameters)
    opt.max_parameters = *max_parameters;

  // Counts first, so they are reported even when optimization is refused.
  UccsdOptions count_only = opt;
  count_only.optimize = false;
  std::vector<UccsdOutcome> counts(m.geometries.size());
  for (std::size_t i = 0; i < m.geometries.size(); ++i)
    counts[i] = run_uccsd_geometry(m.geometries[i], m.mapping, count_only, seed);

  std::string refusal;
  if (opt.optimize && !opt.force)
    for (std::size_t i : label_order(m))
      if (!counts[i].failure.code &&
          counts[i].excitations.parameter_count() > opt.max_parameters) {
        refusal = "geometry " + m.geometries[i].label + " has " +
                  std::to_string(counts[i].excitations.parameter_count()) +
                  " UCCSD parameters, above the ceiling of " +
                  std::to_string(opt.max_parameters) +
                  "; pass --force to optimize anyway";
        break;
      }

  std::vector<UccsdOutcome> results = counts;
  if (opt.optimize && refusal.empty())
    run_pool(m.geometries.size(),
             workers ? *workers : m.workers.value_or(default_workers()),
             [&](std::size_t i) {
               results[i] = run_uccsd_geometry(m.geometries[i], m.mapping, opt, seed);
             });

  for (std::size_t i : label_order(m)) {
    rows.push_back(uccsd_row(m.geometries[i].label, results[i]));
    code = worst(code, results[i].failure.code);
  }
  json doc = {{"schema_version", solver::kSchemaVersion},
              {"mapping", to_string(m.mapping)},
              {"max_parameters", opt.max_parameters},
              {"optimized", opt.optimize && refusal.empty()},
              {"rows", rows}};
  if (!refusal.empty())
    doc["refused"] = refusal;
  write_text(output, dump(doc));
  if (!refusal.empty()) {
    std::cerr << "qcc uccsd: " << refusal << '\n';
    return kConfigFailure;
  }
  return code;
}

solver::QccTrace read_trace(const std::string &path) {
  if (fs::path(path).extension() == ".csv") {
    std::ifstream in(path);
    if (!in)
      throw ParseError("cannot open " + path);
    try {
      return solver::trace_from_csv(in);
    } catch (const ParseError &e) {
      throw ParseError(path + ": " + e.what());
    }
  }
  return solver::trace_from_json(read_json(path));
}

int cmd_extrapolate(const std::string &trace_path, std::size_t discard,
                    std::size_t window, const std::vector<double> &thresholds,
                    const std::string &output, const std::string &curve) {
  const auto trace = read_trace(trace_path);
  const auto r = solver::extrapolate(trace, discard, window, thresholds);
  json j = solver::to_json(r);
  j["e0_total_estimate"] = r.e0_estimate + trace.e_inactive + trace.e_nuclear;
  write_text(output, dump(j));
  if (!curve.empty()) {
    const auto e = trace.energies();
    std::size_t last = e.size() - 1;
    for (const auto &c : r.crossings)
      last = std::max(last, c.iteration);
    std::ostringstream os;
    os << "iteration,energy,fitted_energy,fitted_difference\n";
    for (std::size_t i = 0; i <= last; ++i) {
      os << i << ',' << (i < e.size() ? solver::format_energy(e[i]) : "") << ','
         << solver::format_energy(r.energy_at(double(i))) << ',';
      if (i > 0) {
        std::ostringstream d;
        d << std::scientific << std::setprecision(6) << r.difference_at(double(i));
        os << d.str();
      }
      os << '\n';
    }
    write_text(curve, os.str());
  }
  return kOk;
}

struct Circuit {
  std::optional<std::string> reference;
  std::vector<pauli::Rotation> rotations;
};

Circuit circuit_from_json(const json &j, std::size_t n_qubits) {
  Circuit c;
  try {
    if (j.contains("reference"))
      c.reference = j["reference"].get<std::string>();
    for (const auto &r : j.at("rotations")) {
      const auto label = r.at("pauli").get<std::string>();
      if (label.size() != n_qubits)
        throw ParseError("circuit rotation \"" + label + "\" does not act on " +
                         std::to_string(n_qubits) + " qubits");
      c.rotations.push_back({pauli::PauliString::from_label(label),
                             r.at("angle").get<double>()});
    }
  } catch (const json::exception &e) {
    throw ParseError(std::string("circuit JSON: ") + e.what());
  }
  return c;
}

int cmd_measure(const std::string &ham_path, const std::string &circuit_path,
                const std::string &trace_path, std::string reference,
                long long shots, std::uint64_t seed, const std::string &output,
                const std::string &groups_csv) {
  if (shots < 1)
    throw ConfigError("--shots must be at least 1");
  if (!circuit_path.empty() && !trace_path.empty())
    throw ConfigError("pass either --circuit or --trace, not both");
  const json doc = read_json(ham_path);
  const bool wrapped = doc.is_object() && doc.contains("hamiltonian");
  const auto h = pauli::hamiltonian_from_json(wrapped ? doc["hamiltonian"] : doc);
  const std::size_t n = h.n_qubits();

  std::vector<pauli::Rotation> rotations;
  std::optional<std::string> ref_from_input;
  if (!circuit_path.empty()) {
    auto c = circuit_from_json(read_json(circuit_path), n);
    rotations = std::move(c.rotations);
    ref_from_input = c.reference;
  } else if (!trace_path.empty()) {
    const auto t = solver::trace_from_json(read_json(trace_path));
    if (t.n_qubits && t.n_qubits != n)
      throw ConfigError("trace acts on " + std::to_string(t.n_qubits) +
                        " qubits, Hamiltonian on " + std::to_string(n));
    rotations = t.rotations();
    ref_from_input = chem::to_bitstring(t.reference, n);
  }
  if (reference.empty())
    reference = ref_from_input           ? *ref_from_input
                : wrapped && doc.contains("reference") ? doc["reference"].get<std::string>()
                                                        : std::string(n, '0');
  if (reference.size() != n)
    throw ConfigError("reference \"" + reference + "\" does not have " +
                      std::to_string(n) + " bits");

  auto state = sim::prepare_basis_state(n, reference);
  sim::apply_rotations(state, rotations);
  const auto grouping = sim::group_qwc(h);
  const auto est = sim::sample_energy(state, grouping, static_cast<std::size_t>(shots), seed);
  const auto errors = sim::per_group_error(est, state, grouping);
  const double exact = sim::expectation(state, h);

  json j = sim::to_json(est, errors);
  j["schema_version"] = solver::kSchemaVersion;
  j["exact_energy"] = exact;
  j["difference"] = exact - est.energy;
  j["reference"] = reference;
  j["rotations"] = rotations.size();
  write_text(output, dump(j));

  if (!groups_csv.empty()) {
    std::ostringstream os;
    os << "group_id,basis,terms,estimate,exact,difference,std_error\n";
    os << std::setprecision(17);
    for (std::size_t k = 0; k < errors.size(); ++k)
      os << errors[k].group_id << ',' << errors[k].basis << ','
         << grouping.groups[k].members.size() << ',' << errors[k].estimate << ','
         << errors[k].exact << ',' << errors[k].difference << ','
         << est.per_group[k].std_error << '\n';
    write_text(groups_csv, os.str());
  }
  return kOk;
}

int cmd_pes(const std::string &manifest_path, const ProblemFlags &pflags,
            const QccFlags &qflags, std::string out_dir,
            std::optional<std::size_t> workers) {
  if (!is_json_path(manifest_path))
    throw ConfigError("pes needs a manifest (.json)");
  Manifest m = load_input(manifest_path);
  pflags.apply(m);
  qflags.apply(m.qcc);
  const fs::path dir = !out_dir.empty() ? fs::path(out_dir)
                       : m.output_dir    ? *m.output_dir
                                         : fs::path("pes_out");
  const std::size_t n_workers = workers ? *workers : m.workers.value_or(default_workers());
  const auto has = [&](const char *s) {
    return std::find(m.solvers.begin(), m.solvers.end(), s) != m.solvers.end();
  };

  UccsdOptions uopt = m.uccsd;
  std::vector<UccsdOutcome> counts(m.geometries.size());
  if (has("uccsd")) {
    UccsdOptions count_only = uopt;
    count_only.optimize = false;
    for (std::size_t i = 0; i < m.geometries.size(); ++i)
      counts[i] = run_uccsd_geometry(m.geometries[i], m.mapping, count_only, m.qcc.seed);
    if (uopt.optimize && !uopt.force)
      for (const auto &c : counts)
        if (!c.failure.code && c.excitations.parameter_count() > uopt.max_parameters)
          throw ConfigError("UCCSD optimization refused: " +
                            std::to_string(c.excitations.parameter_count()) +
                            " parameters exceed the ceiling of " +
                            std::to_string(uopt.max_parameters) +
                            " (set uccsd.force in the manifest)");
  }

  struct Point {
    Failure failure;
    std::optional<chem::QubitProblem> problem;
    double e_fci_total = 0.0;
    std::optional<QccOutcome> qcc;
    std::optional<UccsdOutcome> uccsd;
  };
  std::vector<Point> points(m.geometries.size());
  run_pool(m.geometries.size(), n_workers, [&](std::size_t i) {
    Point &pt = points[i];
    const auto &g = m.geometries[i];
    try {
      pt.problem = build_problem(g, m.mapping);
      pt.e_fci_total = oracle_total(*pt.problem);
    } catch (...) {
      pt.failure = classify(std::current_exception());
      return;
    }
    if (has("qcc"))
      pt.qcc = run_qcc_geometry(g, m.mapping, m.qcc, true);
    if (has("uccsd"))
      pt.uccsd = uopt.optimize ? run_uccsd_geometry(g, m.mapping, uopt, m.qcc.seed)
                               : counts[i];
  });

  fs::create_directories(dir);
  std::ostringstream csv;
  csv << "geometry,solver,E_total,E_fci_total,delta,iterations,parameters_used,status\n";
  json geos = json::array();
  int code = kOk;
  for (std::size_t i : label_order(m)) {
    const auto &g = m.geometries[i];
    const auto &pt = points[i];
    const std::string label = csv_field(g.label);
    json gj = {{"geometry", g.label}};
    if (pt.failure.code) {
      csv << label << ",,,,,,," << csv_field("error: " + pt.failure.message) << '\n';
      gj["error"] = pt.failure.message;
      geos.push_back(gj);
      code = worst(code, pt.failure.code);
      continue;
    }
    const std::string stem = file_stem(g.label);
    const std::string fci = solver::format_energy(pt.e_fci_total);
    write_text((dir / (stem + ".hamiltonian.json")).string(),
               dump(hamiltonian_document(*pt.problem, g.fcidump.string())));
    gj["E_fci_total"] = pt.e_fci_total;
    gj.update(problem_metadata(*pt.problem));
    if (has("fci"))
      csv << label << ",fci," << fci << ',' << fci << ','
          << solver::format_energy(0.0) << ",0,0,ok\n";
    if (pt.qcc) {
      const auto &q = *pt.qcc;
      if (q.failure.code) {
        csv << label << ",qcc,," << fci << ",,,," << csv_field("error: " + q.failure.message) << '\n';
        code = worst(code, q.failure.code);
      } else {
        const double total = solver::total_energy(q.trace);
        csv << label << ",qcc," << solver::format_energy(total) << ',' << fci << ','
            << solver::format_energy(total - pt.e_fci_total) << ','
            << q.trace.iterations.size() << ',' << q.trace.parameter_count() << ",ok\n";
        json tj = solver::to_json(q.trace);
        tj["geometry"] = g.label;
        tj["mapping"] = to_string(m.mapping);
        tj["e_fci_total"] = pt.e_fci_total;
        write_text((dir / (stem + ".trace.json")).string(), dump(tj));
        std::ostringstream tc;
        solver::write_trace_csv(tc, q.trace);
        write_text((dir / (stem + ".trace.csv")).string(), tc.str());
        gj["qcc"] = {{"E_total", total},
                     {"iterations", q.trace.iterations.size()},
                     {"parameters", q.trace.parameter_count()},
                     {"stop_reason", q.trace.stop_reason}};
        if (q.fit)
          gj["qcc"]["extrapolation"] = solver::to_json(*q.fit);
        else
          gj["qcc"]["extrapolation_skipped"] = q.fit_note;
      }
    }
    if (pt.uccsd) {
      const auto &u = *pt.uccsd;
      const json row = uccsd_row(g.label, u);
      gj["uccsd"] = row;
      if (u.failure.code) {
        csv << label << ",uccsd,," << fci << ",,,," << csv_field("error: " + u.failure.message) << '\n';
        code = worst(code, u.failure.code);
      } else if (u.result) {
        const double total = u.result->energy + u.offset;
        csv << label << ",uccsd," << solver::format_energy(total) << ',' << fci << ','
            << solver::format_energy(total - pt.e_fci_total) << ",1,"
            << u.excitations.parameter_count() << ",ok\n";
      } else {
        csv << label << ",uccsd,," << fci << ",,,"
            << u.excitations.parameter_count() << ",not_optimized\n";
      }
    }
    geos.push_back(gj);
  }
  write_text((dir / "pes.csv").string(), csv.str());
  write_text((dir / "pes.json").string(),
             dump({{"schema_version", solver::kSchemaVersion},
                   {"mapping", to_string(m.mapping)},
                   {"solvers", m.solvers},
                   {"config", solver::to_json(m.qcc)},
                   {"geometries", geos}}));
  std::cout << csv.str();
  return code;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"QCC engine: qubit coupled cluster with exact-diagonalization checks"};
  app.require_subcommand(1);
  std::function<int()> run;

  // ham
  auto *ham = app.add_subcommand("ham", "write the mapped active-space qubit Hamiltonian");
  std::string ham_in, ham_out;
  ProblemFlags ham_flags;
  ham->add_option("fcidump", ham_in, "FCIDUMP file")->required();
  ham_flags.add_to(ham);
  ham->add_option("-o,--output", ham_out, "output JSON (default stdout)");
  ham->callback([&] { run = [&] { return cmd_ham(ham_in, ham_flags, ham_out); }; });

  // fci
  auto *fci = app.add_subcommand("fci", "exact ground energies (manifest, FCIDUMP or Hamiltonian JSON)");
  std::string fci_in, fci_out;
  std::size_t fci_electrons = 0;
  ProblemFlags fci_flags;
  fci->add_option("input", fci_in, "manifest, FCIDUMP, or Hamiltonian JSON")->required();
  fci_flags.add_to(fci);
  auto *fci_e = fci->add_option("--electrons", fci_electrons,
                                "particle sector for a Hamiltonian JSON");
  fci->add_option("-o,--output", fci_out, "output JSON (default stdout)");
  fci->callback([&] {
    run = [&] {
      return cmd_fci(fci_in, fci_flags,
                     fci_e->count() ? std::optional(fci_electrons) : std::nullopt, fci_out);
    };
  });

  // qcc
  auto *qcc_cmd = app.add_subcommand("qcc", "run QCC at every geometry and write a summary CSV");
  std::string qcc_in, qcc_out;
  std::size_t qcc_workers = 0;
  ProblemFlags qcc_pflags;
  QccFlags qcc_qflags;
  qcc_cmd->add_option("input", qcc_in, "manifest (.json) or FCIDUMP")->required();
  qcc_pflags.add_to(qcc_cmd);
  qcc_qflags.add_to(qcc_cmd);
  qcc_cmd->add_option("--out", qcc_out, "output directory (default: manifest output_dir, else qcc_out)");
  auto *qcc_w = qcc_cmd->add_option("-j,--workers", qcc_workers,
                                    "worker threads (default: available parallelism)");
  qcc_cmd->callback([&] {
    run = [&] {
      return cmd_qcc(qcc_in, qcc_pflags, qcc_qflags, qcc_out,
                     qcc_w->count() ? std::optional(qcc_workers) : std::nullopt);
    };
  });

  // uccsd
  auto *uccsd = app.add_subcommand("uccsd", "UCCSD parameter counts and optional VQE energies");
  std::string uccsd_in, uccsd_out;
  bool uccsd_optimize = false, uccsd_force = false;
  std::size_t uccsd_max = 30, uccsd_workers = 0;
  std::uint64_t uccsd_seed = 7;
  ProblemFlags uccsd_flags;
  uccsd->add_option("input", uccsd_in, "manifest (.json) or FCIDUMP");
  uccsd_flags.add_to(uccsd);
  uccsd->add_flag("--optimize", uccsd_optimize, "run the single-step UCCSD VQE");
  uccsd->add_flag("--force", uccsd_force, "optimize above the parameter ceiling");
  auto *uccsd_max_opt = uccsd->add_option("--max-parameters", uccsd_max,
                                          "parameter ceiling for --optimize (default 30)");
  uccsd->add_option("--seed", uccsd_seed, "optimizer seed (default 7)");
  auto *uccsd_w = uccsd->add_option("-j,--workers", uccsd_workers, "worker threads");
  uccsd->add_option("-o,--output", uccsd_out, "output JSON (default stdout)");
  uccsd->callback([&] {
    run = [&] {
      return cmd_uccsd(uccsd_in, uccsd_flags, {}, uccsd_optimize, uccsd_force,
                       uccsd_max_opt->count() ? std::optional(uccsd_max) : std::nullopt,
                       uccsd_seed,
                       uccsd_w->count() ? std::optional(uccsd_workers) : std::nullopt,
                       uccsd_out);
    };
  });

  // extrapolate
  auto *ex = app.add_subcommand("extrapolate", "fit the exponential convergence model to a trace");
  std::string ex_in, ex_out, ex_curve;
  std::size_t ex_discard = solver::kDefaultDiscard, ex_window = solver::kDefaultWindow;
  std::vector<double> ex_thresholds = solver::kDefaultThresholds;
  ex->add_option("trace", ex_in, "trace JSON or CSV")->required();
  ex->add_option("--discard", ex_discard, "leading iterations to skip (default 5)");
  ex->add_option("--window", ex_window, "iterations used in the fit (default 35)");
  ex->add_option("--threshold", ex_thresholds,
                 "energy-difference thresholds in Hartree (default 1.6e-3 1.6e-4)");
  ex->add_option("-o,--output", ex_out, "result JSON (default stdout)");
  ex->add_option("--curve", ex_curve, "write the fitted curve as CSV");
  ex->callback([&] {
    run = [&] {
      return cmd_extrapolate(ex_in, ex_discard, ex_window, ex_thresholds, ex_out, ex_curve);
    };
  });

  // measure
  auto *meas = app.add_subcommand("measure", "finite-shot energy estimate over qubit-wise commuting groups");
  std::string meas_h, meas_circuit, meas_trace, meas_ref, meas_out, meas_groups;
  long long meas_shots = 10000;
  std::uint64_t meas_seed = 1;
  meas->add_option("hamiltonian", meas_h, "Hamiltonian JSON (from `qcc ham`)")->required();
  meas->add_option("--circuit", meas_circuit, "circuit JSON: reference and rotations");
  meas->add_option("--trace", meas_trace, "QCC trace JSON whose generators form the circuit");
  meas->add_option("--reference", meas_ref, "reference bitstring, qubit 0 first");
  meas->add_option("--shots", meas_shots, "shots per group (default 10000)");
  meas->add_option("--seed", meas_seed, "sampling seed (default 1)");
  meas->add_option("-o,--output", meas_out, "estimate JSON (default stdout)");
  meas->add_option("--groups-csv", meas_groups, "per-group CSV");
  meas->callback([&] {
    run = [&] {
      return cmd_measure(meas_h, meas_circuit, meas_trace, meas_ref, meas_shots,
                         meas_seed, meas_out, meas_groups);
    };
  });

  // pes
  auto *pes = app.add_subcommand("pes", "run every manifest solver across the geometries");
  std::string pes_in, pes_out;
  std::size_t pes_workers = 0;
  ProblemFlags pes_pflags;
  QccFlags pes_qflags;
  pes->add_option("manifest", pes_in, "manifest JSON")->required();
  pes_pflags.add_to(pes);
  pes_qflags.add_to(pes);
  pes->add_option("--out", pes_out, "output directory (default: manifest output_dir, else pes_out)");
  auto *pes_w = pes->add_option("-j,--workers", pes_workers, "worker threads");
  pes->callback([&] {
    run = [&] {
      return cmd_pes(pes_in, pes_pflags, pes_qflags, pes_out,
                     pes_w->count() ? std::optional(pes_workers) : std::nullopt);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kConfigFailure;
  }
  try {
    return run();
  } catch (...) {
    const auto f = classify(std::current_exception());
    std::cerr << "qcc: " << f.message << '\n';
    return f.code;
  }
}
