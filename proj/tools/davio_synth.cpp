// Copyright 2026 The davio-synth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: synth, map, verify, sweep and export.

#include "davio/boolfn.hpp"
#include "davio/circuit.hpp"
#include "davio/lattice.hpp"
#include "davio/layout.hpp"
#include "davio/mapper.hpp"
#include "davio/serialize.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

namespace {

using davio::Json;

enum ExitCode { kOk = 0, kVerifyFailed = 1, kUsage = 2, kBudget = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  std::string function_text;
  std::string vars;
  std::string layout;
  std::string layouts = "square,heavy-hex,triangular";
  std::string style;
  std::string format;
  std::string strategy = "auto";
  std::string n_range;
  std::string input;
  std::uint64_t seed = 0;
  std::size_t max_levels = 0; // 0 selects the default budget
  std::size_t random_count = 0;
  bool routed = false;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    if (!item.empty()) {
      out.push_back(item);
    }
  }
  return out;
}

std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const auto n = std::stoul(text);
      return {n, n};
    }
    return {std::stoul(text.substr(0, dots)), std::stoul(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw UsageError("bad range '" + text + "', expected a..b");
  }
}

// Variables in order of first appearance when --vars is not given.
davio::VarSet infer_vars(const std::string& text) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < text.size();) {
    if (text[i] >= 'a' && text[i] <= 'z') {
      std::size_t j = i;
      while (j < text.size() && ((text[j] >= 'a' && text[j] <= 'z') ||
                                 (text[j] >= '0' && text[j] <= '9'))) {
        ++j;
      }
      auto name = text.substr(i, j - i);
      if (std::find(names.begin(), names.end(), name) == names.end()) {
        names.push_back(std::move(name));
      }
      i = j;
    } else {
      ++i;
    }
  }
  return davio::VarSet(std::move(names));
}

davio::EsopFunction load_function(const RunConfig& cfg) {
  if (cfg.function_text.empty()) {
    throw UsageError(cfg.command + " requires -f/--function");
  }
  const auto vars = cfg.vars.empty() ? infer_vars(cfg.function_text)
                                     : davio::VarSet::parse(cfg.vars);
  return davio::parse_esop(cfg.function_text, vars);
}

davio::DavioLattice lattice_for(const davio::EsopFunction& f,
                                const RunConfig& cfg) {
  std::optional<std::size_t> budget;
  if (cfg.max_levels > 0) {
    budget = cfg.max_levels;
  }
  davio::OrderingStrategy strategy;
  if (cfg.strategy == "auto") {
    // Count the variables the function actually depends on.
    std::size_t support = 0;
    for (std::size_t v = 0; v < f.num_vars(); ++v) {
      support += f.depends_on(v) ? 1 : 0;
    }
    strategy.kind = support <= davio::kMaxExhaustiveVariables
                        ? davio::OrderingKind::ExhaustiveMinLevels
                        : davio::OrderingKind::RoundRobin;
  } else {
    strategy = davio::OrderingStrategy::parse(cfg.strategy);
  }
  return davio::build_lattice(f, strategy, budget);
}

davio::Circuit maybe_decompose(const davio::Circuit& c, const RunConfig& cfg) {
  if (cfg.style.empty()) {
    return c;
  }
  return davio::decompose_circuit(c, davio::DecompositionStyle::parse(cfg.style));
}

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

int run_synth(const RunConfig& cfg) {
  const auto f = load_function(cfg);
  const auto lattice = lattice_for(f, cfg);
  const auto synth = davio::synthesize_from_lattice(lattice);
  const auto circuit = maybe_decompose(synth.circuit, cfg);
  const auto format = cfg.format.empty() ? "json" : cfg.format;
  if (format == "json") {
    Json j;
    j["function"] = f.to_string();
    j["vars"] = f.vars().names();
    j["n_levels"] = lattice.n_levels();
    j["swat_blocks"] = synth.swats.size();
    j["output_line"] = synth.output_line;
    j["lattice"] = davio::to_json(lattice);
    j["circuit"] = davio::to_json(circuit);
    emit(j);
  } else if (format == "dot") {
    std::cout << davio::to_dot(lattice);
  } else if (format == "qasm") {
    std::cout << davio::to_qasm(circuit);
  } else if (format == "text") {
    std::cout << "function: " << f.to_string() << '\n'
              << "levels: " << lattice.n_levels() << '\n'
              << "level variables:";
    for (const auto& name : lattice.level_var_names()) {
      std::cout << ' ' << name;
    }
    std::cout << "\nleaves:";
    for (bool b : lattice.leaves()) {
      std::cout << ' ' << (b ? 1 : 0);
    }
    std::cout << "\nqubits: " << circuit.n_qubits() << '\n'
              << "swat blocks: " << synth.swats.size() << '\n'
              << "gates: " << circuit.gates().size() << '\n'
              << "output line: " << synth.output_line << '\n';
  } else {
    throw UsageError("synth does not support format '" + format + "'");
  }
  return kOk;
}

int run_map(const RunConfig& cfg) {
  if (cfg.layout.empty()) {
    throw UsageError("map requires --layout");
  }
  const auto kind = davio::parse_layout_kind(cfg.layout);
  davio::Circuit circuit;
  std::size_t n_levels = 0;
  if (!cfg.input.empty()) {
    std::ifstream in(cfg.input);
    if (!in) {
      throw UsageError("cannot read " + cfg.input);
    }
    auto j = Json::parse(in);
    if (j.contains("circuit")) {
      j = j["circuit"];
    }
    circuit = davio::circuit_from_json(j);
    n_levels = (circuit.n_qubits() - 1) / 2;
  } else if (!cfg.function_text.empty()) {
    const auto lattice = lattice_for(load_function(cfg), cfg);
    circuit = davio::synthesize_from_lattice(lattice).circuit;
    n_levels = lattice.n_levels();
  } else if (!cfg.n_range.empty()) {
    const auto [n, n_hi] = parse_range(cfg.n_range);
    if (n != n_hi) {
      throw UsageError("map takes a single --n value");
    }
    std::vector<bool> leaves(n + 1, false);
    leaves[n] = true;
    circuit =
        davio::synthesize_from_lattice(davio::symmetric_lattice(n, leaves)).circuit;
    n_levels = n;
  } else {
    throw UsageError("map requires -f, --n or --input");
  }
  const auto report = davio::map_to_layout(kind, circuit, n_levels);
  const auto format = cfg.format.empty() ? "json" : cfg.format;
  if (format == "json") {
    auto j = davio::to_json(report);
    if (cfg.routed) {
      j["routed_circuit"] =
          davio::to_json(maybe_decompose(davio::route_swat(circuit, report), cfg));
    }
    emit(j);
  } else if (format == "qasm") {
    std::cout << davio::to_qasm(
        maybe_decompose(davio::route_swat(circuit, report), cfg));
  } else if (format == "dot") {
    std::cout << davio::to_dot(report.layout);
  } else if (format == "text") {
    std::cout << "layout: " << davio::to_string(report.layout_kind) << '\n'
              << "levels: " << report.n_levels << '\n'
              << "additional swaps: " << report.total_swaps << '\n'
              << "additional cnots: " << report.total_extra_cnots << '\n'
              << "bound only: " << (report.bound_only ? "yes" : "no") << '\n';
  } else {
    throw UsageError("map does not support format '" + format + "'");
  }
  return kOk;
}

int run_verify(const RunConfig& cfg) {
  std::vector<davio::EsopFunction> corpus;
  if (!cfg.function_text.empty()) {
    corpus.push_back(load_function(cfg));
  }
  if (cfg.random_count > 0) {
    const auto vars = cfg.vars.empty() ? davio::default_vars(4)
                                       : davio::VarSet::parse(cfg.vars);
    std::mt19937_64 rng(cfg.seed);
    for (std::size_t i = 0; i < cfg.random_count; ++i) {
      corpus.push_back(davio::random_esop(vars, rng));
    }
  }
  if (corpus.empty()) {
    throw UsageError("verify requires -f or --random");
  }
  bool all = true;
  for (const auto& f : corpus) {
    const auto synth = davio::synthesize_from_lattice(lattice_for(f, cfg));
    const bool ok = davio::verify_synthesis(synth.circuit, f, synth.output_line,
                                            synth.leaf_init);
    all = all && ok;
    std::cout << (ok ? "PASS" : "FAIL") << ' ' << f.to_string() << " ("
              << synth.n_levels << " levels)\n";
  }
  return all ? kOk : kVerifyFailed;
}

std::size_t sweep_threads() {
  std::size_t threads = std::max(1U, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("DAVIO_SYNTH_THREADS")) {
    try {
      threads = std::max<std::size_t>(1, std::stoul(env));
    } catch (const std::exception&) {
      throw UsageError("DAVIO_SYNTH_THREADS must be a positive integer");
    }
  }
  return threads;
}

int run_sweep(const RunConfig& cfg) {
  const auto [lo, hi] = parse_range(cfg.n_range.empty() ? "1..10" : cfg.n_range);
  std::vector<davio::LayoutKind> kinds;
  for (const auto& name : split(cfg.layouts, ',')) {
    kinds.push_back(davio::parse_layout_kind(name));
  }
  const auto rows = davio::run_sweep(lo, hi, kinds, sweep_threads());
  const auto format = cfg.format.empty() ? "csv" : cfg.format;
  if (format == "csv") {
    std::cout << davio::to_csv(rows);
  } else if (format == "json") {
    Json arr = Json::array();
    for (const auto& r : rows) {
      Json row;
      row["n"] = r.n;
      row["square"] = r.square ? Json(*r.square) : Json(nullptr);
      row["heavy_hex"] = r.heavy_hex ? Json(*r.heavy_hex) : Json(nullptr);
      row["triangular"] = r.triangular ? Json(*r.triangular) : Json(nullptr);
      arr.push_back(std::move(row));
    }
    emit(arr);
  } else {
    throw UsageError("sweep does not support format '" + format + "'");
  }
  return kOk;
}

int run_export(const RunConfig& cfg) {
  if (cfg.input.empty()) {
    throw UsageError("export requires --input");
  }
  std::ifstream in(cfg.input);
  if (!in) {
    throw UsageError("cannot read " + cfg.input);
  }
  const auto j = Json::parse(in);
  const auto format = cfg.format.empty() ? "json" : cfg.format;
  if (j.contains("lattice") && j.contains("circuit")) {
    // Synthesis bundle: re-serialize each part.
    const auto lattice = davio::lattice_from_json(j["lattice"]);
    const auto circuit = davio::circuit_from_json(j["circuit"]);
    if (format == "json") {
      auto out = j;
      out["lattice"] = davio::to_json(lattice);
      out["circuit"] = davio::to_json(circuit);
      emit(out);
    } else if (format == "dot") {
      std::cout << davio::to_dot(lattice);
    } else if (format == "qasm") {
      std::cout << davio::to_qasm(maybe_decompose(circuit, cfg));
    } else {
      throw UsageError("cannot export a synthesis bundle as " + format);
    }
  } else if (j.contains("level_vars")) {
    const auto lattice = davio::lattice_from_json(j);
    if (format == "json") {
      emit(davio::to_json(lattice));
    } else if (format == "dot") {
      std::cout << davio::to_dot(lattice);
    } else {
      throw UsageError("cannot export a lattice as " + format);
    }
  } else if (j.contains("gates")) {
    const auto circuit = davio::circuit_from_json(j);
    if (format == "json") {
      emit(davio::to_json(maybe_decompose(circuit, cfg)));
    } else if (format == "qasm") {
      std::cout << davio::to_qasm(maybe_decompose(circuit, cfg));
    } else if (format == "dot") {
      std::cout << davio::to_dot(circuit);
    } else {
      throw UsageError("cannot export a circuit as " + format);
    }
  } else if (j.contains("per_swat_swaps")) {
    const auto report = davio::report_from_json(j);
    if (format == "json") {
      auto out = j; // keeps an embedded routed circuit, if any
      const auto fresh = davio::to_json(report);
      for (const auto& [key, value] : fresh.items()) {
        out[key] = value;
      }
      emit(out);
    } else if (format == "dot") {
      std::cout << davio::to_dot(report.layout);
    } else {
      throw UsageError("cannot export a mapping report as " + format);
    }
  } else if (j.contains("nodes") && j.contains("edges")) {
    const auto layout = davio::layout_from_json(j);
    if (format == "json") {
      emit(davio::to_json(layout));
    } else if (format == "dot") {
      std::cout << davio::to_dot(layout);
    } else {
      throw UsageError("cannot export a layout as " + format);
    }
  } else {
    throw UsageError("unrecognised JSON artifact in " + cfg.input);
  }
  return kOk;
}

// Fills every option that was not given on the command line from the JSON
// config file.
void apply_config(const std::string& path, RunConfig& cfg,
                  const CLI::App* sub) {
  std::ifstream in(path);
  if (!in) {
    throw UsageError("cannot read config " + path);
  }
  const auto j = Json::parse(in);
  const auto given = [&](const std::string& flag) {
    return sub != nullptr && sub->count(flag) > 0;
  };
  const auto take_string = [&](const char* key, const std::string& flag,
                               std::string& dst) {
    if (j.contains(key) && !given(flag)) {
      dst = j[key].get<std::string>();
    }
  };
  if (cfg.command.empty() && j.contains("command")) {
    cfg.command = j["command"].get<std::string>();
  }
  take_string("function", "--function", cfg.function_text);
  take_string("vars", "--vars", cfg.vars);
  take_string("layout", "--layout", cfg.layout);
  take_string("layouts", "--layouts", cfg.layouts);
  take_string("style", "--style", cfg.style);
  take_string("format", "--format", cfg.format);
  take_string("strategy", "--strategy", cfg.strategy);
  take_string("n", "--n", cfg.n_range);
  take_string("input", "--input", cfg.input);
  if (j.contains("seed") && !given("--seed")) {
    cfg.seed = j["seed"].get<std::uint64_t>();
  }
  if (j.contains("max_levels") && !given("--max-levels")) {
    cfg.max_levels = j["max_levels"].get<std::size_t>();
  }
  if (j.contains("random") && !given("--random")) {
    cfg.random_count = j["random"].get<std::size_t>();
  }
  if (j.contains("routed") && !given("--routed")) {
    cfg.routed = j["routed"].get<bool>();
  }
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Positive Davio lattice synthesis and layout mapping"};
  app.require_subcommand(0, 1);
  RunConfig cfg;
  std::string config_path;
  app.add_option("--config", config_path, "JSON file with run settings");

  const auto add_function = [&](CLI::App* sub) {
    sub->add_option("-f,--function", cfg.function_text, "ESOP expression");
    sub->add_option("--vars", cfg.vars, "comma-separated variable order");
    sub->add_option("--strategy", cfg.strategy,
                    "auto, fixed-order, round-robin or exhaustive-min-levels");
    sub->add_option("--max-levels", cfg.max_levels, "lattice level budget");
    sub->add_option("--seed", cfg.seed, "seed for random corpora");
  };
  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "json, dot, qasm, csv or text");
    sub->add_option("--style", cfg.style,
                    "Toffoli decomposition: qiskit-standard, barenco, amy, "
                    "linear-nn");
  };

  auto* synth = app.add_subcommand("synth", "build a lattice and its circuit");
  add_function(synth);
  add_common(synth);

  auto* map = app.add_subcommand("map", "map a circuit onto a layout");
  add_function(map);
  add_common(map);
  map->add_option("--layout", cfg.layout, "triangular, square or heavy-hex");
  map->add_option("--n", cfg.n_range, "levels of a symmetric circuit");
  map->add_option("--input", cfg.input, "circuit or synthesis JSON");
  map->add_flag("--routed", cfg.routed, "include the routed circuit");

  auto* verify = app.add_subcommand("verify", "check synthesis exhaustively");
  add_function(verify);
  verify->add_option("--random", cfg.random_count, "number of random ESOPs");

  auto* sweep = app.add_subcommand("sweep", "tabulate additional SWAPs");
  sweep->add_option("--layouts", cfg.layouts, "comma-separated layouts");
  sweep->add_option("--n", cfg.n_range, "level range a..b");
  sweep->add_option("--format", cfg.format, "csv or json");

  auto* exp = app.add_subcommand("export", "re-serialize a JSON artifact");
  exp->add_option("--input", cfg.input, "JSON artifact")->required();
  add_common(exp);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const auto code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  const CLI::App* chosen = nullptr;
  for (const auto* sub : app.get_subcommands()) {
    chosen = sub;
    cfg.command = sub->get_name();
  }

  try {
    if (!config_path.empty()) {
      apply_config(config_path, cfg, chosen);
    }
    if (cfg.command == "synth") {
      return run_synth(cfg);
    }
    if (cfg.command == "map") {
      return run_map(cfg);
    }
    if (cfg.command == "verify") {
      return run_verify(cfg);
    }
    if (cfg.command == "sweep") {
      return run_sweep(cfg);
    }
    if (cfg.command == "export") {
      return run_export(cfg);
    }
    std::cerr << app.help();
    return kUsage;
  } catch (const davio::LevelBudgetExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBudget;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const davio::SyntaxError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const davio::UnknownVariableError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const davio::InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kVerifyFailed;
  }
}
