// Copyright 2026 The msqsp Authors
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


#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <regex>
#include <sstream>

#include <CLI11.hpp>

#include "msqsp/circuit.hpp"
#include "msqsp/errors.hpp"
#include "msqsp/qsp.hpp"
#include "msqsp/simulator.hpp"
#include "msqsp/target_fit.hpp"

namespace msqsp::cli {

namespace {

constexpr double kPi = std::numbers::pi;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double require_angle(const std::string& text, const std::string& flag) {
  if (auto v = parse_angle(text)) return *v;
  throw UsageError(flag + ": cannot parse angle '" + text + "'");
}

std::vector<double> require_angles(const std::string& text, const std::string& flag) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(require_angle(item, flag));
  if (out.empty()) throw UsageError(flag + ": empty angle list");
  return out;
}

void require_qubits(int n) {
  if (n < 2) throw UsageError("--n must be at least 2");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot write '" + path + "'");
  file << text;
}

// Padding pairs (c, c + pi) are identities for any c; putting the pair right
// after phi_0 with c = phi_0 makes the merged list end in (-pi, 0), so the
// last rotation can be dropped.
CompilationPlan table_layout(CompilationPlan plan) {
  auto& p = plan.phis;
  const std::size_t n = p.size();
  if (n >= 3 && p[n - 2] == 0.0 && p[n - 1] == kPi) {
    p.resize(n - 2);
    p.insert(p.begin() + 1, {p[0], p[0] + kPi});
  }
  return plan;
}

struct Options {
  int n = 0;
  std::string alpha = "0";
  std::string alphas;
  std::string kind;
  std::string out;
  std::string format = "json";
  std::string circuit;
  std::string target;
  double tolerance = 1e-6;
  int points = 257;
  int precision = 12;
  bool merged = false;
  bool round3 = false;
};

int cmd_crot_angles(const Options& o, std::ostream& out) {
  require_qubits(o.n);
  const CompilationPlan plan = crot_angles(o.n, require_angle(o.alpha, "--alpha"));
  out << std::setprecision(o.precision);
  out << "tau\t" << plan.tau << "\n";
  out << "h\t" << plan.h << "\n";
  out << "L\t" << plan.num_pulses() << "\n";
  const std::vector<double> angles = o.merged ? merged_angles(plan) : plan.phis;
  const char* name = o.merged ? "phi~_" : "phi_";
  for (std::size_t j = 0; j < angles.size(); ++j) {
    out << name << j << "\t" << angles[j] << "\n";
  }
  return kExitOk;
}

int cmd_compile(const Options& o, std::ostream& out) {
  Circuit circuit(1);
  if (o.kind == "crot") {
    require_qubits(o.n);
    circuit = build_crot_circuit(crot_angles(o.n, require_angle(o.alpha, "--alpha")));
  } else if (o.kind == "toffoli") {
    require_qubits(o.n);
    circuit = build_toffoli_circuit(o.n);
  } else if (o.kind == "weighted") {
    require_qubits(o.n);
    const std::vector<double> alphas = require_angles(o.alphas, "--alphas");
    if (static_cast<int>(alphas.size()) != o.n) {
      throw UsageError("--alphas needs one angle per Hamming weight (" +
                       std::to_string(o.n) + ")");
    }
    circuit = build_crot_circuit(weighted_plan(o.n, alphas));
  } else {
    throw UsageError("unknown circuit kind '" + o.kind + "'");
  }
  const std::string text = o.format == "text" ? to_text(circuit) : serialize(circuit);
  write_output(o.out, text, out);
  if (!o.out.empty() && o.out != "-") out << "wrote " << o.out << "\n";
  out << "qubits\t" << circuit.num_qubits() << "\n";
  out << "ms_gates\t" << circuit.ms_count() << "\n";
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const Circuit circuit = deserialize(read_file(o.circuit));
  const Eigen::MatrixXcd u = circuit_unitary(circuit);
  out << std::setprecision(o.precision);
  out << "qubits\t" << circuit.num_qubits() << "\n";
  out << "ms_gates\t" << circuit.ms_count() << "\n";

  double distance = 1.0;
  double leakage = 0.0;
  if (o.target == "crot") {
    const int n = o.n > 0 ? o.n : circuit.num_qubits();
    if (n != circuit.num_qubits()) throw UsageError("--n does not match the circuit");
    const double alpha = require_angle(o.alpha, "--alpha");
    distance = phase_distance(u, ideal_crot(n, alpha, circuit.target_qubit()));
    const BlockReport blocks = analyze_blocks(u, circuit.target_qubit());
    out << "off_block\t" << blocks.off_block << "\n";
    out << "non_phase\t" << blocks.non_phase << "\n";
  } else if (o.target == "toffoli") {
    if (circuit.ancilla_qubits().size() != 1) {
      throw UsageError("a Toffoli circuit needs exactly one ancilla");
    }
    const int n = circuit.num_qubits() - 1;
    if (o.n > 0 && o.n != n) throw UsageError("--n does not match the circuit");
    const AncillaProjection p = project_ancilla(u, circuit.ancilla_qubits()[0], 0);
    leakage = p.leakage;
    distance = phase_distance(p.block, ideal_toffoli(n));
    out << "ancilla_leakage\t" << leakage << "\n";
  } else if (o.target == "weighted") {
    const std::vector<double> alphas = require_angles(o.alphas, "--alphas");
    if (static_cast<int>(alphas.size()) != circuit.num_qubits()) {
      throw UsageError("--alphas needs one angle per Hamming weight");
    }
    distance = phase_distance(u, ideal_weighted_x(circuit.num_qubits(), alphas));
  } else {
    throw UsageError("unknown target '" + o.target + "'");
  }
  out << "phase_distance\t" << distance << "\n";
  const bool ok = distance <= o.tolerance && leakage <= o.tolerance;
  out << (ok ? "verified" : "FAILED") << "\n";
  return ok ? kExitOk : kExitVerifyFailed;
}

int cmd_series(const Options& o, std::ostream& out, std::ostream& err) {
  require_qubits(o.n);
  if (o.points < 2) throw UsageError("--points must be at least 2");
  const double alpha = require_angle(o.alpha, "--alpha");
  const ConstrainedFit fit =
      solve_constraints(constraint_set_crot(o.n, reduce_rotation_angle(alpha)));
  err << "condition number " << fit.condition << "\n";
  const Quadruple quad = crot_quadruple(o.n, alpha);

  std::ostringstream ss;
  ss << std::setprecision(o.precision);
  ss << "theta\tA\tB\tC\tD\n";
  for (int i = 0; i < o.points; ++i) {
    const double t = -kPi + 2 * kPi * i / (o.points - 1);
    ss << t << "\t" << quad.A(t) << "\t" << quad.B(t) << "\t" << quad.C(t) << "\t"
       << quad.D(t) << "\n";
  }
  ss << "\nq\ttheta_q\tA\tB\tC\tD\n";
  const Eigen::VectorXd thetas = compute_thetas(o.n, default_params(o.n).tau, default_params(o.n).h);
  for (int q = 0; q < o.n; ++q) {
    const double t = thetas(q);
    ss << q << "\t" << t << "\t" << quad.A(t) << "\t" << quad.B(t) << "\t"
       << quad.C(t) << "\t" << quad.D(t) << "\n";
  }
  write_output(o.out, ss.str(), out);
  return kExitOk;
}

int cmd_table(const Options& o, std::ostream& out) {
  out << "N\ttau\tangles\tdistance";
  if (o.round3) out << "\trounded_distance";
  out << "\n";
  for (int n = 3; n <= 6; ++n) {
    const CompilationPlan plan = table_layout(crot_angles(n, -kPi));
    std::vector<double> merged = merged_angles(plan);
    // R_z(a + 2pi) = -R_z(a); the sign is global.
    for (double& a : merged) a = std::remainder(a, 2 * kPi);
    const Eigen::MatrixXcd ideal = ideal_crot(n, -kPi);
    const double d =
        phase_distance(circuit_unitary(build_from_merged(n, plan.tau, plan.h, merged)),
                       ideal);
    out << n << "\tpi/" << n << "\t";
    if (o.round3) {
      for (double& a : merged) a = std::round(a * 1000) / 1000;
      out << std::fixed << std::setprecision(3);
    } else {
      out << std::setprecision(o.precision);
    }
    for (std::size_t j = 0; j < merged.size(); ++j) out << (j ? " " : "") << merged[j];
    out << std::defaultfloat << std::setprecision(3) << "\t" << d;
    if (o.round3) {
      const double dr = phase_distance(
          circuit_unitary(build_from_merged(n, plan.tau, plan.h, merged)), ideal);
      out << "\t" << dr;
    }
    out << "\n";
  }
  return kExitOk;
}

}  // namespace

std::optional<double> parse_angle(std::string_view text) {
  static const std::regex pi_form(
      R"(^\s*([+-]?)(\d+(?:\.\d*)?|\.\d+)?\s*\*?\s*pi\s*(?:/\s*(\d+(?:\.\d*)?))?\s*$)",
      std::regex::icase);
  const std::string s(text);
  std::smatch m;
  if (std::regex_match(s, m, pi_form)) {
    double v = kPi;
    if (m[2].matched) v *= std::stod(m[2].str());
    if (m[3].matched) {
      const double den = std::stod(m[3].str());
      if (den == 0.0) return std::nullopt;
      v /= den;
    }
    return m[1].str() == "-" ? -v : v;
  }
  const char* begin = s.data();
  const char* end = begin + s.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(*begin))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(end[-1]))) --end;
  if (begin < end && *begin == '+') ++begin;
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(begin, end, v);
  if (ec != std::errc() || ptr != end || begin == end || !std::isfinite(v)) {
    return std::nullopt;
  }
  return v;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Compile multi-controlled rotations into global MS pulse trains", "msqsp"};
  app.require_subcommand(1);
  Options o;

  auto* crot = app.add_subcommand("crot-angles", "Print the rotation angles of a plan");
  crot->add_option("--n", o.n, "Number of qubits")->required();
  crot->add_option("--alpha", o.alpha, "Rotation angle, e.g. 0.3, pi/2, -pi");
  crot->add_flag("--merged", o.merged, "Print the merged 2N+1 angle list");
  crot->add_option("--precision", o.precision, "Significant digits");

  auto* compile = app.add_subcommand("compile", "Compile a circuit");
  compile->add_option("kind", o.kind, "crot, toffoli or weighted")
      ->required()
      ->check(CLI::IsMember({"crot", "toffoli", "weighted"}));
  compile->add_option("--n", o.n, "Number of qubits; toffoli adds one ancilla")->required();
  compile->add_option("--alpha", o.alpha, "Rotation angle for crot");
  compile->add_option("--alphas", o.alphas, "Comma-separated angles for weighted");
  compile->add_option("--out", o.out, "Output file (default stdout)");
  compile->add_option("--format", o.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  auto* verify = app.add_subcommand("verify", "Simulate a circuit file against a target");
  verify->add_option("--circuit", o.circuit, "Circuit JSON file")->required();
  verify->add_option("--target", o.target, "crot, toffoli or weighted")
      ->required()
      ->check(CLI::IsMember({"crot", "toffoli", "weighted"}));
  verify->add_option("--n", o.n, "Expected qubit count");
  verify->add_option("--alpha", o.alpha, "Rotation angle for crot");
  verify->add_option("--alphas", o.alphas, "Comma-separated angles for weighted");
  verify->add_option("--tolerance", o.tolerance, "Largest accepted phase distance");
  verify->add_option("--precision", o.precision, "Significant digits");

  auto* series = app.add_subcommand("series", "Dump A, B, C, D on a grid as TSV");
  series->add_option("--n", o.n, "Number of qubits")->required();
  series->add_option("--alpha", o.alpha, "Rotation angle");
  series->add_option("--points", o.points, "Grid points on [-pi, pi]");
  series->add_option("--out", o.out, "Output file (default stdout)");
  series->add_option("--precision", o.precision, "Significant digits");

  auto* table = app.add_subcommand("table", "Merged angles of C^{N-1} R_z(-pi), N = 3..6");
  table->add_flag("--round", o.round3, "Round angles to 3 decimals");
  table->add_option("--precision", o.precision, "Significant digits");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*crot) return cmd_crot_angles(o, out);
    if (*compile) return cmd_compile(o, out);
    if (*verify) return cmd_verify(o, out);
    if (*series) return cmd_series(o, out, err);
    if (*table) return cmd_table(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    // Bad sizes and unreadable circuit files are the caller's fault; the rest
    // come from synthesis.
    const bool usage = dynamic_cast<const InvalidSize*>(&e) ||
                       dynamic_cast<const MalformedCircuit*>(&e) ||
                       dynamic_cast<const UnknownGateType*>(&e) ||
                       dynamic_cast<const QubitIndexOutOfRange*>(&e) ||
                       dynamic_cast<const SizeGuardExceeded*>(&e);
    err << (usage ? "error: " : "synthesis failed: ") << e.what() << "\n";
    return usage ? kExitUsage : kExitSynthesisFailed;
  }
  return kExitUsage;
}

}  // namespace msqsp::cli
