// Copyright 2026 The spinqec Authors
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

#include "commands.h"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "spinqec/code_builder.h"
#include "spinqec/code_io.h"
#include "spinqec/csv.h"
#include "spinqec/kl_verifier.h"
#include "spinqec/pulse_synth.h"
#include "spinqec/qec_sim.h"
#include "spinqec/resource_model.h"

namespace spinqec {
namespace {

using nlohmann::json;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct GlobalOptions {
  std::string out_path;
  double tol = kDefaultKLTolerance;
  std::string format;  // empty: the subcommand's natural format
};

struct CodeSelector {
  int d = 3;
  int t = 1;
  std::string model = "z";
  int qudits = 1;
  bool alt = false;
  std::string code_file;

  void add_to(CLI::App* app, bool with_file) {
    app->add_option("--d", d, "logical dimension")->check(CLI::Range(2, 64));
    app->add_option("--t", t, "correctable order (distance 2t+1)")->check(CLI::IsMember({1, 2}));
    app->add_option("--model", model, "error model")->check(CLI::IsMember({"z", "xyz"}));
    app->add_option("--qudits", qudits, "number of spins (1 or 2t+1)");
    app->add_flag("--alt", alt, "the alternative distance-5 qutrit on spin 19/2");
    if (with_file) app->add_option("--code-file", code_file, "codeword JSON to load");
  }

  CodeFamily build() const {
    if (!code_file.empty()) {
      std::ifstream in(code_file);
      if (!in) throw UsageError("cannot open " + code_file);
      json j;
      try {
        in >> j;
      } catch (const json::exception& e) {
        throw UsageError(std::string("bad JSON in ") + code_file + ": " + e.what());
      }
      return code_from_json(j);
    }
    if (alt) return alt_qutrit_distance5();
    CodeSpec spec;
    spec.d = d;
    spec.t = t;
    spec.error_model = parse_error_model(model);
    spec.n_qudits = qudits;
    if (qudits > 1) spec.error_model = ErrorModel::kXYZ;
    try {
      spec.validate();
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string(e.what()) + " (try --t 1 --qudits 3 or --t 2 --qudits 5)");
    }
    return build_code(spec);
  }
};

std::string resolve_format(const GlobalOptions& g, const std::string& fallback) {
  return g.format.empty() ? fallback : g.format;
}

void emit(const GlobalOptions& g, std::ostream& out, const std::string& text) {
  if (g.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(g.out_path, std::ios::binary);
  if (!file) throw UsageError("cannot write " + g.out_path);
  file << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// ---- codes ----

std::string cmd_codes(const GlobalOptions& g, const CodeSelector& sel, bool print) {
  const CodeFamily code = sel.build();
  const std::string format = print ? "pretty" : resolve_format(g, "json");
  if (format == "pretty") return render_code(code);
  if (format == "csv") throw UsageError("codes has no CSV form; use json or pretty");
  return dump(code_to_json(code));
}

// ---- verify ----

struct NamedCode {
  std::string label;
  CodeFamily code;
};

std::vector<NamedCode> suite_instances() {
  return {
      {"qutrit distance-3 Z code", build_z_code(3, 1)},
      {"ququart distance-3 Z code", build_z_code(4, 1)},
      {"qutrit distance-5 Z code", build_z_code(3, 2)},
      {"qutrit distance-3 XYZ code", build_xyz_code(3, 1)},
      {"qutrit distance-5 XYZ code", build_xyz_code(3, 2)},
      {"qutrit three-spin code", build_multiqudit_code(3, 1)},
      {"qutrit five-spin code", build_multiqudit_code(3, 2)},
      {"alternative distance-5 qutrit", alt_qutrit_distance5()},
      {"d=2 distance-3 Z code", build_z_code(2, 1)},
      {"d=5 distance-3 Z code", build_z_code(5, 1)},
      {"d=6 distance-3 Z code", build_z_code(6, 1)},
  };
}

KLReport verify_code(const CodeFamily& code, const std::string& mode, double tol) {
  const bool z_only = code.spec.error_model == ErrorModel::kZOnly;
  const bool exact = mode == "exact" || (mode == "auto" && z_only && code.n_qudits() == 1);
  if (exact) return verify_z_kl(code, code.spec.t);
  std::vector<SpinOp> ops = {SpinOp::kZ};
  if (!z_only) ops = {SpinOp::kX, SpinOp::kY, SpinOp::kZ};
  return verify_full_kl(code, ErrorSet::all_words(code.spec.t, ops, code.n_qudits()), tol);
}

std::string describe_violation(const KLViolation& v) {
  std::ostringstream s;
  if (v.condition == "moment") {
    s << "<" << v.i << "_L|S_Z^" << v.order << "|" << v.i << "_L> = " << v.lhs << " != "
      << v.rhs << " = <" << v.j << "_L|S_Z^" << v.order << "|" << v.j << "_L>";
  } else if (v.condition == "normalization") {
    s << "<" << v.i << "_L|" << v.i << "_L> = " << v.lhs << " != 1";
  } else if (v.condition == "support") {
    s << "codeword supports overlap";
  } else {
    s << v.condition << " (" << v.i << "," << v.j << ") words [" << v.word_a << "] ["
      << v.word_b << "]: " << v.lhs << " vs " << v.rhs;
  }
  return s.str();
}

std::string render_report(const KLReport& r) {
  std::ostringstream s;
  s << (r.pass ? "PASS" : "FAIL") << "  " << r.code_name << "  ("
    << (r.exact ? "exact" : "numeric") << ")";
  if (!r.exact) {
    s << "  max_off_diagonal=" << r.max_off_diagonal
      << "  max_diagonal_mismatch=" << r.max_diagonal_mismatch << "  tol=" << r.tolerance;
  }
  s << "\n";
  for (const KLViolation& v : r.violations) s << "  FAIL: " << describe_violation(v) << "\n";
  return s.str();
}

int cmd_verify(const GlobalOptions& g, const CodeSelector& sel, bool all,
               const std::string& perturb, const std::string& mode, std::ostream& out) {
  std::vector<NamedCode> codes;
  if (all) {
    codes = suite_instances();
  } else {
    codes.push_back({"", sel.build()});
  }
  if (!perturb.empty()) {
    if (perturb != "swap-a1-b1") throw UsageError("unknown perturbation " + perturb);
    for (NamedCode& c : codes) c.code = swap_inner_pairs(c.code, 1);
  }
  const std::string format = resolve_format(g, "json");
  if (format == "csv") throw UsageError("verify has no CSV form; use json or pretty");

  bool pass = true;
  json reports = json::array();
  std::string text;
  for (const NamedCode& c : codes) {
    const KLReport r = verify_code(c.code, mode, g.tol);
    pass = pass && r.pass;
    json j = report_to_json(r);
    if (!c.label.empty()) j["instance"] = c.label;
    reports.push_back(j);
    text += render_report(r);
  }
  if (format == "pretty") {
    emit(g, out, text);
  } else {
    emit(g, out, dump(all ? reports : reports.front()));
  }
  return pass ? kExitOk : kExitFail;
}

// ---- pulses ----

std::string render_sequence(const std::string& title, const PulseSequence& seq) {
  std::ostringstream s;
  s << "# " << title << ", " << seq.steps.size() << " steps\n";
  for (size_t i = 0; i < seq.steps.size(); ++i) {
    const PulseStep& p = seq.steps[i];
    s << std::setw(3) << i << "  " << p.m1.signed_str() << " <-> " << p.m2.signed_str()
      << "  cos=" << (p.exact_cos ? p.exact_cos->str() : csv_number(p.cos_theta))
      << "  theta=" << csv_number(p.theta()) << "\n";
  }
  for (const DecodeBranch& b : seq.branches) {
    s << "branch " << b.order << ":";
    for (size_t k = 0; k < b.targets.size(); ++k) {
      s << "  " << k << "_L->" << (b.signs[k] < 0 ? "-" : "") << "|" << b.targets[k].signed_str()
        << ">";
    }
    s << "\n";
  }
  return s.str();
}

std::string cmd_pulses(const GlobalOptions& g, const CodeSelector& sel, const std::string& which) {
  const CodeFamily code = sel.build();
  const std::string format = resolve_format(g, "json");
  if (format == "csv") throw UsageError("pulses has no CSV form; use json or pretty");
  json j = {{"code", code.name}};
  std::string text;
  if (which == "encoder" || which == "both") {
    const PulseSequence enc = synthesize_encoder(code);
    j["encoder"] = sequence_to_json(enc);
    text += render_sequence(code.name + " encoder", enc);
  }
  if (which == "decoder" || which == "both") {
    const PulseSequence dec = synthesize_decoder(code);
    j["decoder"] = sequence_to_json(dec);
    text += render_sequence(code.name + " decoder", dec);
  }
  return format == "pretty" ? text : dump(j);
}

// ---- simulate ----

struct SimulateOptions {
  std::string sweep = "gain";
  int d = 3;
  double lo = 1e-4;
  double hi = 1e-2;
  int points = 10;
  GateSweepConfig gates;
};

json csv_to_json(const std::string& csv) {
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  std::vector<std::string> header;
  {
    std::istringstream h(line);
    std::string cell;
    while (std::getline(h, cell, ',')) header.push_back(cell);
  }
  json rows = json::array();
  while (std::getline(in, line)) {
    std::istringstream r(line);
    std::string cell;
    json row;
    for (size_t i = 0; std::getline(r, cell, ','); ++i) row[header.at(i)] = std::stod(cell);
    rows.push_back(row);
  }
  return rows;
}

std::string cmd_simulate(const GlobalOptions& g, const SimulateOptions& o) {
  const std::vector<double> grid = log_grid(o.lo, o.hi, o.points);
  const Eigen::VectorXcd psi = uniform_superposition(o.d);
  std::string csv;
  if (o.sweep == "gain") {
    const QecCycle d3(build_z_code(o.d, 1));
    const QecCycle d5(build_z_code(o.d, 2));
    csv = gain_table_csv(sweep_gain(d3, grid, psi), sweep_gain(d5, grid, psi));
  } else {
    const QecCycle d3(build_z_code(o.d, 1));
    csv = gate_table_csv(sweep_gate_imperfections(d3, grid, psi, o.gates));
  }
  const std::string format = resolve_format(g, "csv");
  return format == "json" ? dump(csv_to_json(csv)) : csv;
}

// ---- resources ----

std::string cmd_resources(const GlobalOptions& g, int d_min, int d_max,
                          const std::vector<int>& distances, int per_logical) {
  if (d_min > d_max) throw UsageError("--d-min exceeds --d-max");
  std::vector<int> ds;
  for (int d = d_min; d <= d_max; ++d) ds.push_back(d);
  const std::vector<ResourceRow> rows = emit_comparison(ds, distances, per_logical);
  const std::string format = resolve_format(g, "csv");
  if (format == "csv") return comparison_csv(rows);
  if (format == "json") {
    json out = json::array();
    for (const ResourceRow& r : rows) {
      out.push_back({{"d", r.d},
                     {"distance", r.distance},
                     {"qudit_dim", r.qudit_dim},
                     {"logical_qubits", r.logical_qubits},
                     {"physical_qubits", r.physical_qubits},
                     {"qubit_mapping_dim", r.qubit_mapping_dim.str()},
                     {"beyond_constructions", r.beyond_constructions}});
    }
    return dump(out);
  }
  std::ostringstream s;
  s << std::setw(3) << "d" << std::setw(10) << "distance" << std::setw(11) << "qudit_dim"
    << std::setw(14) << "2^n_physical" << "\n";
  for (const ResourceRow& r : rows) {
    s << std::setw(3) << r.d << std::setw(10) << r.distance << std::setw(11) << r.qudit_dim
      << std::setw(14) << ("2^" + std::to_string(r.physical_qubits))
      << (r.beyond_constructions ? "  (no codewords built)" : "") << "\n";
  }
  return s.str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spin-qudit error-correcting codes: build, certify, synthesize, simulate."};
  app.name("spinqec");
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--out", g.out_path, "write output to this file");
  app.add_option("--tol", g.tol, "numeric tolerance")->check(CLI::PositiveNumber);
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "pretty"}));

  CLI::App* codes = app.add_subcommand("codes", "build a code family and export it");
  CodeSelector codes_sel;
  bool print = false;
  codes_sel.add_to(codes, false);
  codes->add_flag("--print", print, "render in ket notation");

  CLI::App* verify = app.add_subcommand("verify", "certify the Knill-Laflamme conditions");
  CodeSelector verify_sel;
  bool all = false;
  std::string perturb;
  std::string mode = "auto";
  verify_sel.add_to(verify, true);
  verify->add_flag("--all", all, "verify every built-in instance");
  verify->add_option("--perturb", perturb, "deliberately break the code (swap-a1-b1)");
  verify->add_option("--mode", mode, "exact, numeric or auto")
      ->check(CLI::IsMember({"auto", "exact", "numeric"}));

  CLI::App* pulses = app.add_subcommand("pulses", "synthesize encoder and decoder pulses");
  CodeSelector pulses_sel;
  std::string which = "both";
  pulses_sel.add_to(pulses, true);
  pulses->add_option("--which", which, "encoder, decoder or both")
      ->check(CLI::IsMember({"encoder", "decoder", "both"}));

  CLI::App* simulate = app.add_subcommand("simulate", "error-correction cycle sweeps");
  SimulateOptions sim;
  simulate->add_option("--sweep", sim.sweep, "gain: distance-3 vs distance-5, gates: gate errors")
      ->check(CLI::IsMember({"gain", "gates"}));
  simulate->add_option("--d", sim.d, "logical dimension")->check(CLI::Range(2, 16));
  simulate->add_option("--min", sim.lo, "smallest t/T2")->check(CLI::PositiveNumber);
  simulate->add_option("--max", sim.hi, "largest t/T2")->check(CLI::PositiveNumber);
  simulate->add_option("--points", sim.points, "grid points")->check(CLI::Range(1, 100000));
  simulate->add_option("--gate-time", sim.gates.gate_time_ratio, "t_gate / T2")
      ->check(CLI::NonNegativeNumber);
  simulate->add_option("--infidelity-high", sim.gates.infidelity_high, "first gate infidelity")
      ->check(CLI::Range(0.0, 1.0));
  simulate->add_option("--infidelity-low", sim.gates.infidelity_low, "second gate infidelity")
      ->check(CLI::Range(0.0, 1.0));

  CLI::App* resources = app.add_subcommand("resources", "Hilbert-space resource comparison");
  int d_min = 2, d_max = 8, per_logical = 0;
  std::vector<int> distances = {3};
  resources->add_option("--d-min", d_min)->check(CLI::Range(2, 1024));
  resources->add_option("--d-max", d_max)->check(CLI::Range(2, 1024));
  resources->add_option("--distances", distances, "odd code distances")->delimiter(',');
  resources->add_option("--physical-per-logical", per_logical,
                        "physical qubits per logical qubit (default 2*distance^2-1)")
      ->check(CLI::NonNegativeNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*codes) {
      emit(g, out, cmd_codes(g, codes_sel, print));
    } else if (*verify) {
      return cmd_verify(g, verify_sel, all, perturb, mode, out);
    } else if (*pulses) {
      emit(g, out, cmd_pulses(g, pulses_sel, which));
    } else if (*simulate) {
      if (sim.lo > sim.hi) throw UsageError("--min exceeds --max");
      emit(g, out, cmd_simulate(g, sim));
    } else if (*resources) {
      emit(g, out, cmd_resources(g, d_min, d_max, distances, per_logical));
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const SynthesisError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitOk;
}

}  // namespace spinqec
