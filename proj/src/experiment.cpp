#include "bakersim/experiment.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

namespace bakersim {

namespace {

std::string trim(std::string s) {
  const auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

std::vector<std::string> split(const std::string &s, const std::string &sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (std::size_t pos; (pos = s.find(sep, start)) != std::string::npos; start = pos + sep.size()) {
    parts.push_back(s.substr(start, pos - start));
  }
  parts.push_back(s.substr(start));
  return parts;
}

double parse_real(const std::string &text, const std::string &whole) {
  double v = 0.0;
  const char *first = text.data();
  const char *last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last || !std::isfinite(v)) throw ConfigError("angle", "cannot parse '" + whole + "'");
  return v;
}

long long parse_integer(const std::string &text, const std::string &field) {
  long long v = 0;
  const std::string t = trim(text);
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc{} || ptr != t.data() + t.size()) {
    throw ConfigError(field, "cannot parse integer '" + text + "'");
  }
  return v;
}

/// Fixed 12-decimal format shared by every numeric CSV field.
std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", v);
  std::string s = buf;
  if (s.find_first_not_of("-0.") == std::string::npos) s = "0.000000000000";
  return s;
}

void check_row_contract(const ExperimentRow &row) {
  double sum = 0.0;
  for (double p : row.populations) sum += p;
  if (std::abs(sum - 1.0) > 1e-9) {
    throw NumericalContractError("populations sum to " + fmt(sum) + ", expected 1");
  }
  auto in_range = [](double o) { return o >= -1e-9 && o <= 1.0 + 1e-9; };
  if (!in_range(row.overlap_000) || (row.overlap_avg && !in_range(*row.overlap_avg))) {
    throw NumericalContractError("overlap outside [0, 1]");
  }
}

}  // namespace

std::string to_string(Scenario s) {
  switch (s) {
    case Scenario::Echo: return "echo";
    case Scenario::Dephase: return "dephase";
    case Scenario::RotationSweep: return "rotation-sweep";
    case Scenario::ShiftSweep: return "shift-sweep";
  }
  return "unknown";
}

Scenario parse_scenario(const std::string &name) {
  for (auto s : {Scenario::Echo, Scenario::Dephase, Scenario::RotationSweep, Scenario::ShiftSweep})
    if (to_string(s) == name) return s;
  throw ConfigError("scenario", "unknown scenario '" + name + "'");
}

double parse_angle(const std::string &raw) {
  std::string text = trim(raw);
  if (text.empty()) throw ConfigError("angle", "empty angle");
  const auto pi_pos = text.find("pi");
  if (pi_pos == std::string::npos) return parse_real(text, raw);

  std::string coef = trim(text.substr(0, pi_pos));
  std::string rest = trim(text.substr(pi_pos + 2));
  if (!coef.empty() && coef.back() == '*') coef = trim(coef.substr(0, coef.size() - 1));
  double multiplier = 1.0;
  if (coef == "-") {
    multiplier = -1.0;
  } else if (coef == "+" || coef.empty()) {
    multiplier = 1.0;
  } else {
    multiplier = parse_real(coef, raw);
  }
  double divisor = 1.0;
  if (!rest.empty()) {
    if (rest.front() != '/') throw ConfigError("angle", "cannot parse '" + raw + "'");
    divisor = parse_real(trim(rest.substr(1)), raw);
    if (divisor == 0.0) throw ConfigError("angle", "division by zero in '" + raw + "'");
  }
  return multiplier * std::numbers::pi / divisor;
}

std::vector<double> parse_angle_grid(const std::string &text) {
  if (text.find(':') != std::string::npos) {
    const auto parts = split(text, ":");
    if (parts.size() != 3) throw ConfigError("angles", "expected start:end:count, got '" + text + "'");
    const double start = parse_angle(parts[0]);
    const double end = parse_angle(parts[1]);
    const long long count = parse_integer(parts[2], "angles");
    if (count < 1) throw ConfigError("angles", "grid count must be at least 1");
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(count));
    for (long long i = 0; i < count; ++i) {
      grid.push_back(count == 1 ? start : start + (end - start) * static_cast<double>(i) / static_cast<double>(count - 1));
    }
    return grid;
  }
  std::vector<double> grid;
  for (const auto &item : split(text, ",")) grid.push_back(parse_angle(item));
  return grid;
}

std::vector<int> parse_shift_range(const std::string &text, const std::string &field) {
  const auto dots = text.find("..");
  long long lo = 0, hi = 0;
  if (dots == std::string::npos) {
    lo = hi = parse_integer(text, field);
  } else {
    lo = parse_integer(text.substr(0, dots), field);
    hi = parse_integer(text.substr(dots + 2), field);
  }
  if (hi < lo) throw ConfigError(field, "empty range '" + text + "'");
  if (hi - lo > 4096) throw ConfigError(field, "range too long");
  std::vector<int> out;
  for (long long s = lo; s <= hi; ++s) out.push_back(static_cast<int>(s));
  return out;
}

void validate(const ScenarioConfig &cfg) {
  if (cfg.qubits < 1 || cfg.qubits > 12) throw ConfigError("qubits", "must lie in 1..12");
  if (!(cfg.epsilon >= 0.0 && cfg.epsilon <= 1.0)) throw ConfigError("epsilon", "must lie in [0, 1]");
  if (cfg.initial_index >= register_dim(cfg.qubits)) {
    throw ConfigError("initial", "basis index must be below 2^qubits");
  }
  if (cfg.target_qubit < 0 || cfg.target_qubit > cfg.qubits) throw ConfigError("qubit", "must lie in 1..qubits");
  switch (cfg.scenario) {
    case Scenario::Dephase:
      if (!(cfg.dephase_p >= 0.0 && cfg.dephase_p <= 0.5)) throw ConfigError("p", "must lie in [0, 1/2]");
      break;
    case Scenario::RotationSweep: parse_angle_grid(cfg.angles); break;
    case Scenario::ShiftSweep: parse_shift_range(cfg.shifts); break;
    case Scenario::Echo: break;
  }
}

ExperimentRecord run_scenario(const ScenarioConfig &cfg) {
  validate(cfg);
  const BakerMap map = baker_map(cfg.qubits);
  const DensityMatrix initial = pseudo_pure(cfg.qubits, cfg.epsilon, cfg.initial_index);

  ExperimentRecord rec{cfg, "", {}};
  std::vector<std::pair<double, Perturbation>> points;
  switch (cfg.scenario) {
    case Scenario::Echo:
      rec.param_name = "none";
      points.emplace_back(0.0, perturbation::Shift{0});
      break;
    case Scenario::Dephase:
      rec.param_name = "p";
      points.emplace_back(cfg.dephase_p, perturbation::Dephase{cfg.target(), cfg.dephase_p});
      break;
    case Scenario::RotationSweep:
      rec.param_name = "theta";
      for (double theta : parse_angle_grid(cfg.angles)) points.emplace_back(theta, perturbation::RotX{cfg.target(), theta});
      break;
    case Scenario::ShiftSweep:
      rec.param_name = "shift";
      for (int s : parse_shift_range(cfg.shifts)) points.emplace_back(static_cast<double>(s), perturbation::Shift{s});
      break;
  }

  for (const auto &[value, pert] : points) {
    const auto echo = perturbed_echo(map, initial, pert);
    ExperimentRow row;
    row.param_value = value;
    row.overlap_000 = overlap(echo.unperturbed, echo.perturbed);
    if (cfg.average_over_basis) row.overlap_avg = basis_averaged_echo_overlap(map, pert, cfg.epsilon);
    row.entropy_vn_bits = von_neumann_entropy(echo.perturbed);
    row.entropy_diag_bits = diagonal_entropy(echo.perturbed);
    row.populations = populations(echo.perturbed);
    if (cfg.include_matrices) row.final_state = echo.perturbed;

    if (cfg.scenario == Scenario::Echo) {
      const double err = std::max(max_abs_diff(echo.perturbed, initial), max_abs_diff(echo.unperturbed, initial));
      if (err > kMatrixTol) {
        throw NumericalContractError("echo: final state differs from initial state by " + std::to_string(err));
      }
    }
    check_row_contract(row);
    rec.rows.push_back(std::move(row));
  }
  return rec;
}

std::string to_csv(const ExperimentRecord &rec) {
  std::ostringstream out;
  const std::size_t dim = register_dim(rec.config.qubits);
  out << "scenario,qubits,param_name,param_value,overlap_000,overlap_avg,entropy_vn_bits,entropy_diag_bits";
  for (std::size_t i = 0; i < dim; ++i) out << ",p_" << i;
  out << '\n';
  for (const auto &row : rec.rows) {
    out << to_string(rec.config.scenario) << ',' << rec.config.qubits << ',' << rec.param_name << ','
        << fmt(row.param_value) << ',' << fmt(row.overlap_000) << ',' << (row.overlap_avg ? fmt(*row.overlap_avg) : "")
        << ',' << fmt(row.entropy_vn_bits) << ',' << fmt(row.entropy_diag_bits);
    for (double p : row.populations) out << ',' << fmt(p);
    out << '\n';
  }
  return out.str();
}

nlohmann::json to_json(const ScenarioConfig &cfg) {
  nlohmann::json j;
  j["scenario"] = to_string(cfg.scenario);
  j["qubits"] = cfg.qubits;
  j["epsilon"] = cfg.epsilon;
  j["initial"] = cfg.initial_index;
  j["qubit"] = cfg.target().value;
  switch (cfg.scenario) {
    case Scenario::Dephase: j["p"] = cfg.dephase_p; break;
    case Scenario::RotationSweep: j["angles"] = cfg.angles; break;
    case Scenario::ShiftSweep: j["shifts"] = cfg.shifts; break;
    case Scenario::Echo: break;
  }
  j["average_over_basis"] = cfg.average_over_basis;
  j["include_matrices"] = cfg.include_matrices;
  return j;
}

nlohmann::json to_json(const ExperimentRecord &rec) {
  nlohmann::json j;
  j["format"] = kRecordFormat;
  j["config"] = to_json(rec.config);
  j["param_name"] = rec.param_name;
  auto rows = nlohmann::json::array();
  for (const auto &row : rec.rows) {
    nlohmann::json r;
    r["param_value"] = row.param_value;
    r["overlap_000"] = row.overlap_000;
    r["overlap_avg"] = row.overlap_avg ? nlohmann::json(*row.overlap_avg) : nlohmann::json(nullptr);
    r["entropy_vn_bits"] = row.entropy_vn_bits;
    r["entropy_diag_bits"] = row.entropy_diag_bits;
    r["populations"] = row.populations;
    if (row.final_state) r["final_state"] = to_json(*row.final_state);
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  return j;
}

namespace {

void write_file(const std::filesystem::path &path, const std::string &content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  out << content;
  out.close();
  if (!out) throw std::runtime_error("failed writing '" + path.string() + "'");
}

}  // namespace

void emit_csv(const ExperimentRecord &rec, const std::filesystem::path &path) { write_file(path, to_csv(rec)); }

void emit_json(const ExperimentRecord &rec, const std::filesystem::path &path) {
  write_file(path, to_json(rec).dump(2) + "\n");
}

std::vector<BenchRow> bench(int from, int to) {
  if (from < 1 || to > 12 || from > to) throw ConfigError("qubits", "bench range must lie within 1..12");
  using clock = std::chrono::steady_clock;
  auto seconds_since = [](clock::time_point t0) { return std::chrono::duration<double>(clock::now() - t0).count(); };

  std::vector<BenchRow> rows;
  for (int n = from; n <= to; ++n) {
    BenchRow row{n, 0, 0, 0, 0};
    auto t0 = clock::now();
    const Circuit circuit = baker_circuit(n);
    const CMatrix from_circuit = circuit_unitary(circuit);
    row.build_circuit_s = seconds_since(t0);

    t0 = clock::now();
    CMatrix matrix = baker_matrix(n);
    row.build_oracle_s = seconds_since(t0);
    if (max_abs_diff(from_circuit, matrix) > kMatrixTol) {
      throw NumericalContractError("bench: circuit and matrix disagree at n=" + std::to_string(n));
    }
    const BakerMap map{n, circuit, std::move(matrix)};
    const DensityMatrix ground = pseudo_pure(n, 1.0, 0);

    t0 = clock::now();
    const auto echo = perturbed_echo(map, ground, perturbation::Shift{0});
    const double echo_overlap = overlap(echo.unperturbed, echo.perturbed);
    row.echo_s = seconds_since(t0);
    if (std::abs(echo_overlap - 1.0) > 1e-9) throw NumericalContractError("bench: echo overlap is not 1");

    t0 = clock::now();
    const auto point = perturbed_echo(map, ground, perturbation::RotX{QubitIndex{n}, std::numbers::pi / 4});
    (void)overlap(point.unperturbed, point.perturbed);
    row.sweep_point_s = seconds_since(t0);
    rows.push_back(row);
  }
  return rows;
}

std::string format_bench(const std::vector<BenchRow> &rows) {
  std::ostringstream out;
  char buf[160];
  std::snprintf(buf, sizeof buf, "%6s %8s %14s %14s %12s %14s\n", "qubits", "dim", "circuit_s", "oracle_s", "echo_s",
                "sweep_point_s");
  out << buf;
  for (const auto &r : rows) {
    std::snprintf(buf, sizeof buf, "%6d %8zu %14.6f %14.6f %12.6f %14.6f\n", r.qubits, register_dim(r.qubits),
                  r.build_circuit_s, r.build_oracle_s, r.echo_s, r.sweep_point_s);
    out << buf;
  }
  return out.str();
}

}  // namespace bakersim
