// Copyright 2026 The yukawa-circuits Authors
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

#include "yukawa/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>

#include <nlohmann/json.hpp>

#include "yukawa/dynamics.hpp"
#include "yukawa/errors.hpp"
#include "yukawa/model.hpp"
#include "yukawa/ordering.hpp"
#include "yukawa/synthesis.hpp"

namespace yukawa::cli {
namespace {

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

void emit(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << content;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw DomainError("cannot open output file '" + path + "'");
  file << content;
  if (!file) throw DomainError("failed writing output file '" + path + "'");
}

std::string read_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw DomainError("cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << file.rdbuf();
  return ss.str();
}

double parse_real(const std::string& text, const std::string& field) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || !std::isfinite(v))
    throw DomainError(field + ": '" + text + "' is not a finite number");
  return v;
}

ModelParams model_from_ratios(double mass_ratio, double coupling_ratio, int n_boson_qubits) {
  ModelParams p{mass_ratio, 1.0, coupling_ratio, n_boson_qubits};
  p.validate();
  return p;
}

struct DynamicsOptions {
  double mass_ratio = 7.0;
  double coupling_ratio = 1.7;
  int n_boson_qubits = 1;
  std::string fermion = "0";
  std::string boson = "0";
  std::string method = "exact";
  int trotter_steps = 10;
  int trotter_order = 2;
  double t_max = 2.0;
  int n_points = 51;
  std::string output;
  std::string format = "csv";
  int shots = 0;
  std::uint64_t seed = 0;
  std::string state_json;
};

int cmd_dynamics(const DynamicsOptions& o, std::ostream& out, std::ostream& err) {
  const ModelParams params = model_from_ratios(o.mass_ratio, o.coupling_ratio, o.n_boson_qubits);
  const Statevector initial = o.state_json.empty()
                                  ? parse_initial_state(o.fermion, o.boson, o.n_boson_qubits)
                                  : parse_state_json(read_file(o.state_json), params.n_qubits());
  EvolutionMethod method;
  if (o.method == "exact")
    method = EvolutionMethod::exact();
  else if (o.method == "compressed")
    method = EvolutionMethod::compressed();
  else
    method = EvolutionMethod::trotter(o.trotter_steps, o.trotter_order);

  const double t0 = params.reference_period();
  const auto times = time_grid(o.t_max * t0, o.n_points);
  const TimeSeries series = quench_series(params, initial, times, method, {o.shots, o.seed});

  if (o.format == "json") {
    nlohmann::json j = series;
    emit(o.output, j.dump(2) + "\n", out);
  } else {
    emit(o.output, time_series_csv(series), out);
  }

  err << "dynamics: N=" << params.n_boson_qubits << " method=" << series.method << " points=" << series.rows.size();
  if (method.kind != EvolutionKind::Exact || o.shots > 0) {
    if (params.n_qubits() <= kMaxDenseQubits) {
      const TimeSeries reference = quench_series(params, initial, times, EvolutionMethod::exact());
      err << " max|n_boson - exact|=" << format_double(max_boson_deviation(series, reference));
    } else {
      err << " exact reference unavailable";
    }
  }
  err << "\n";
  return kSuccess;
}

struct SynthOptions {
  std::string target;
  double mass_ratio = 7.0;
  double coupling_ratio = 1.7;
  double time = 1.0;
  double dt = 0.1;
  std::string strings_file;
  std::string layout = "star-ancilla";
  double default_angle = 1.0;
  std::string output;
  bool print_gates = false;
};

int cmd_synth(const SynthOptions& o, std::ostream& out) {
  std::optional<SynthesisReport> found;
  // The Trotter step approximates its target; the other targets are exact.
  bool exact_target = true;
  if (o.target == "compressed") {
    const ModelParams p = model_from_ratios(o.mass_ratio, o.coupling_ratio, 1);
    const Circuit c = compressed_two_qubit_circuit(p, o.time);
    const double d = phase_distance(circuit_unitary(c), exact_propagator(build_hamiltonian(p).total(), o.time));
    found = SynthesisReport{c, c.cnot_count(),
              "compressed exp(-iHt), N=1, M/m=" + format_double(o.mass_ratio) +
                  ", eta/m=" + format_double(o.coupling_ratio) + ", t=" + format_double(o.time),
              d};
  } else if (o.target == "trotter3") {
    const ModelParams p = model_from_ratios(o.mass_ratio, o.coupling_ratio, 2);
    const Circuit c = trotter_step_three_qubit(p, o.dt);
    exact_target = false;
    const double d = phase_distance(circuit_unitary(c), exact_propagator(build_hamiltonian(p).total(), o.dt));
    found = SynthesisReport{c, c.cnot_count(),
              "second-order Trotter step, N=2, M/m=" + format_double(o.mass_ratio) +
                  ", eta/m=" + format_double(o.coupling_ratio) + ", dt=" + format_double(o.dt),
              d};
  } else {
    if (o.strings_file.empty()) throw DomainError("--strings-file is required for --target strings");
    std::vector<PauliString> strings;
    std::vector<double> angles;
    std::istringstream lines(read_file(o.strings_file));
    std::string line;
    int line_no = 0;
    while (std::getline(lines, line)) {
      ++line_no;
      std::istringstream fields(line);
      std::string word, angle, extra;
      if (!(fields >> word) || word.front() == '#') continue;
      const std::string where = o.strings_file + ":" + std::to_string(line_no);
      try {
        strings.push_back(PauliString::parse(word));
      } catch (const DomainError& e) {
        throw DomainError(where + ": " + e.what());
      }
      angles.push_back(fields >> angle ? parse_real(angle, where) : o.default_angle);
      if (fields >> extra) throw DomainError(where + ": unexpected text '" + extra + "'");
    }
    const Layout layout = o.layout == "star" ? Layout::Star : Layout::StarAncilla;
    found = synthesize_ordered_strings(strings, angles, layout, true);
  }

  const SynthesisReport& report = *found;
  out << "target: " << report.target_description << "\n";
  out << "qubits: " << report.circuit.n_qubits() << "\n";
  out << "gates: " << report.circuit.size() << "\n";
  out << "cnot_count: " << report.cnot_count << "\n";
  if (report.verification)
    out << "verification_distance: " << format_double(*report.verification) << "\n";
  else
    out << "verification_distance: n/a\n";
  if (o.print_gates) out << report.circuit.to_text();
  if (!o.output.empty()) {
    nlohmann::json j = report.circuit;
    emit(o.output, j.dump(2) + "\n", out);
  }
  if (exact_target && report.verification && *report.verification > 1e-9) return kInvariant;
  return kSuccess;
}

int cmd_cost(int max_qubits, const std::string& methods_text, const std::string& format, const std::string& output,
             std::ostream& out, std::ostream& err) {
  std::vector<CostMethod> methods;
  std::stringstream ss(methods_text);
  for (std::string name; std::getline(ss, name, ',');) {
    try {
      methods.push_back(cost_method_from_name(name));
    } catch (const DomainError& e) {
      throw DomainError(std::string("--methods: ") + e.what());
    }
  }
  const CostReport report = cost_report(max_qubits, methods);
  if (format == "json") {
    nlohmann::json j = report;
    emit(output, j.dump(2) + "\n", out);
  } else {
    emit(output, cost_report_csv(report), out);
  }
  for (const auto& v : report.violations) err << "cost: invariant violated: " << v << "\n";
  return report.violations.empty() ? kSuccess : kInvariant;
}

int cmd_strings(int n_qubits, bool low_first, std::ostream& out) {
  const auto strings = generate_pauli_strings(n_qubits);
  for (const auto& s : strings) out << (low_first ? s.to_string_low_first() : s.to_string()) << "\n";
  out << "# count: " << strings.size() << "\n";
  return kSuccess;
}

}  // namespace

Statevector parse_initial_state(const std::string& fermion, const std::string& boson, int n_boson_qubits) {
  if (n_boson_qubits < 1 || n_boson_qubits + 1 > kMaxStateQubits)
    throw ResourceError("-N: register of " + std::to_string(n_boson_qubits) + " boson qubits exceeds the cap");
  const double r = std::numbers::sqrt2 / 2;
  Eigen::VectorXcd f(2);
  if (fermion == "0")
    f << 1, 0;
  else if (fermion == "1")
    f << 0, 1;
  else if (fermion == "+")
    f << r, r;
  else if (fermion == "-")
    f << r, -r;
  else
    throw DomainError("--fermion: '" + fermion + "' is not one of 0, 1, +, -");

  const auto dim = Eigen::Index{1} << n_boson_qubits;
  Eigen::VectorXcd b = Eigen::VectorXcd::Zero(dim);
  if (boson == "+") {
    b.setConstant(1.0 / std::sqrt(static_cast<double>(dim)));
  } else if (boson.rfind("amps:", 0) == 0) {
    std::stringstream ss(boson.substr(5));
    std::vector<double> amps;
    for (std::string item; std::getline(ss, item, ',');) amps.push_back(parse_real(item, "--boson"));
    if (static_cast<Eigen::Index>(amps.size()) != dim)
      throw DomainError("--boson: expected " + std::to_string(dim) + " amplitudes, got " + std::to_string(amps.size()));
    for (Eigen::Index k = 0; k < dim; ++k) b(k) = amps[static_cast<std::size_t>(k)];
    if (std::abs(b.norm() - 1.0) > 1e-6) throw DomainError("--boson: amplitudes are not normalized");
    b /= b.norm();
  } else {
    std::size_t used = 0;
    long long k = -1;
    try {
      k = std::stoll(boson, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != boson.size() || k < 0)
      throw DomainError("--boson: '" + boson + "' is not a Fock index, '+', or 'amps:...'");
    if (k >= dim)
      throw DomainError("--boson: Fock index " + boson + " exceeds the cutoff " + std::to_string(dim - 1));
    b(static_cast<Eigen::Index>(k)) = 1.0;
  }
  return Statevector::tensor(Statevector::from_amplitudes(std::move(b)), Statevector::from_amplitudes(std::move(f)));
}

Statevector parse_state_json(const std::string& text, int n_qubits) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("--state-json: ") + e.what());
  }
  if (!j.is_object() || !j.contains("amplitudes") || !j["amplitudes"].is_array())
    throw DomainError("--state-json: expected an object with an 'amplitudes' array");
  const auto& list = j["amplitudes"];
  const auto dim = Eigen::Index{1} << n_qubits;
  if (static_cast<Eigen::Index>(list.size()) != dim)
    throw DomainError("--state-json: expected " + std::to_string(dim) + " amplitudes");
  Eigen::VectorXcd amps(dim);
  for (Eigen::Index k = 0; k < dim; ++k) {
    const auto& a = list[static_cast<std::size_t>(k)];
    if (a.is_number())
      amps(k) = a.get<double>();
    else if (a.is_array() && a.size() == 2 && a[0].is_number() && a[1].is_number())
      amps(k) = Complex{a[0].get<double>(), a[1].get<double>()};
    else
      throw DomainError("--state-json: amplitude " + std::to_string(k) + " is not a number or [re, im]");
  }
  if (std::abs(amps.norm() - 1.0) > 1e-6) throw DomainError("--state-json: amplitudes are not normalized");
  amps /= amps.norm();
  return Statevector::from_amplitudes(std::move(amps));
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Circuits and quench dynamics for a single-site fermion-boson model"};
  app.name(args.empty() ? "yukawa" : args.front());
  app.require_subcommand(1);

  DynamicsOptions dyn;
  auto* dynamics = app.add_subcommand("dynamics", "Particle numbers after a quench, as CSV or JSON");
  dynamics->add_option("--M-over-m", dyn.mass_ratio, "Fermion mass over boson mass")->capture_default_str();
  dynamics->add_option("--eta-over-m", dyn.coupling_ratio, "Coupling over boson mass")->capture_default_str();
  dynamics->add_option("-N,--boson-qubits", dyn.n_boson_qubits, "Boson register qubits")
      ->capture_default_str()
      ->check(CLI::Range(1, kMaxStateQubits - 2));
  dynamics->add_option("--fermion", dyn.fermion, "Fermion state: 0, 1, + or -")->capture_default_str();
  dynamics->add_option("--boson", dyn.boson, "Boson state: Fock index, + or amps:a0,a1,...")->capture_default_str();
  dynamics->add_option("--method", dyn.method, "exact, compressed or trotter")
      ->capture_default_str()
      ->check(CLI::IsMember({"exact", "compressed", "trotter"}));
  dynamics->add_option("--trotter-steps", dyn.trotter_steps, "Trotter steps per time point")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  dynamics->add_option("--trotter-order", dyn.trotter_order, "Trotter order")
      ->capture_default_str()
      ->check(CLI::IsMember({1, 2}));
  dynamics->add_option("--t-max", dyn.t_max, "Final time in units of 2 pi / sqrt(m^2 + eta^2)")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  dynamics->add_option("--n-points", dyn.n_points, "Grid points")->capture_default_str()->check(CLI::Range(2, 1000000));
  dynamics->add_option("-o,--output", dyn.output, "Output file (default stdout)");
  dynamics->add_option("--format", dyn.format, "csv or json")
      ->capture_default_str()
      ->check(CLI::IsMember({"csv", "json"}));
  dynamics->add_option("--shots", dyn.shots, "Sampled shots per point (0 = exact expectations)")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  dynamics->add_option("--seed", dyn.seed, "Sampling seed")->capture_default_str();
  dynamics->add_option("--state-json", dyn.state_json, "Full-register initial state as JSON amplitudes")
      ->check(CLI::ExistingFile);

  SynthOptions syn;
  auto* synth = app.add_subcommand("synth", "Synthesize a circuit and report its CNOT count");
  synth->add_option("--target", syn.target, "compressed, trotter3 or strings")
      ->required()
      ->check(CLI::IsMember({"compressed", "trotter3", "strings"}));
  synth->add_option("--M-over-m", syn.mass_ratio, "Fermion mass over boson mass")->capture_default_str();
  synth->add_option("--eta-over-m", syn.coupling_ratio, "Coupling over boson mass")->capture_default_str();
  synth->add_option("-t,--time", syn.time, "Evolution time for --target compressed")->capture_default_str();
  synth->add_option("--dt", syn.dt, "Step size for --target trotter3")->capture_default_str();
  synth->add_option("--strings-file", syn.strings_file, "One Pauli string per line, optional angle after it")
      ->check(CLI::ExistingFile);
  synth->add_option("--layout", syn.layout, "star or star-ancilla")
      ->capture_default_str()
      ->check(CLI::IsMember({"star", "star-ancilla"}));
  synth->add_option("--angle", syn.default_angle, "Angle for strings listed without one")->capture_default_str();
  synth->add_option("-o,--output", syn.output, "Circuit JSON output file");
  synth->add_flag("--gates", syn.print_gates, "Print the gate list");

  int cost_n = 0;
  std::string cost_methods = "exact,heuristic,bound", cost_format = "csv", cost_output;
  auto* cost = app.add_subcommand("cost", "CNOT cost of the displacement strings per register size");
  cost->add_option("-N,--max-qubits", cost_n, "Largest register size")->required()->check(CLI::Range(1, 56));
  cost->add_option("--methods", cost_methods, "Comma-separated subset of exact, heuristic, bound")
      ->capture_default_str();
  cost->add_option("--format", cost_format, "csv or json")->capture_default_str()->check(CLI::IsMember({"csv", "json"}));
  cost->add_option("-o,--output", cost_output, "Output file (default stdout)");

  int strings_n = 0;
  bool low_first = false;
  auto* strings = app.add_subcommand("strings", "List the Pauli strings of the truncated b + b^dag");
  strings->add_option("-N,--qubits", strings_n, "Boson register qubits")->required()->check(CLI::Range(1, 20));
  strings->add_flag("--low-first", low_first, "Print Fock digit 0 leftmost");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  try {
    if (dynamics->parsed()) return cmd_dynamics(dyn, out, err);
    if (synth->parsed()) return cmd_synth(syn, out);
    if (cost->parsed()) return cmd_cost(cost_n, cost_methods, cost_format, cost_output, out, err);
    return cmd_strings(strings_n, low_first, out);
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    return kResource;
  } catch (const InvariantError& e) {
    err << "error: " << e.what() << "\n";
    return kInvariant;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace yukawa::cli
