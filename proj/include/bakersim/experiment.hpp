#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "bakersim/metrics.hpp"

namespace bakersim {

inline constexpr const char *kRecordFormat = "bakersim.experiment/1";

/// Raised when a configuration field is invalid; the message names the field.
class ConfigError : public std::invalid_argument {
public:
  ConfigError(const std::string &field, const std::string &why)
      : std::invalid_argument(field + ": " + why), field_(field) {}
  const std::string &field() const { return field_; }

private:
  std::string field_;
};

/// Raised when a computed result breaks a numerical contract of a scenario.
class NumericalContractError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

enum class Scenario { Echo, Dephase, RotationSweep, ShiftSweep };

std::string to_string(Scenario s);
Scenario parse_scenario(const std::string &name);

/// Accepts plain decimals and multiples/fractions of pi: "0.3", "pi",
/// "-pi/4", "3pi/8", "3*pi/8", "2*pi".
double parse_angle(const std::string &text);

/// "start:end:count" (inclusive, evenly spaced) or a comma-separated list of
/// angles.
std::vector<double> parse_angle_grid(const std::string &text);

/// "a..b" (inclusive) or a single integer.
std::vector<int> parse_shift_range(const std::string &text, const std::string &field = "shifts");

struct ScenarioConfig {
  Scenario scenario = Scenario::Echo;
  int qubits = 3;
  double epsilon = 1.0;
  std::size_t initial_index = 0;
  /// Target qubit of the rotation or dephasing; 0 selects the least
  /// significant qubit.
  int target_qubit = 0;
  std::string angles = "pi/32,pi/16,pi/8,pi/4";
  std::string shifts = "1..4";
  double dephase_p = 0.5;
  bool average_over_basis = false;
  bool include_matrices = false;

  QubitIndex target() const { return QubitIndex{target_qubit == 0 ? qubits : target_qubit}; }
};

/// Throws ConfigError naming the first invalid field.
void validate(const ScenarioConfig &cfg);

struct ExperimentRow {
  double param_value = 0.0;
  double overlap_000 = 0.0;
  std::optional<double> overlap_avg;
  double entropy_vn_bits = 0.0;
  double entropy_diag_bits = 0.0;
  std::vector<double> populations;
  std::optional<DensityMatrix> final_state;
};

struct ExperimentRecord {
  ScenarioConfig config;
  std::string param_name;
  std::vector<ExperimentRow> rows;
};

ExperimentRecord run_scenario(const ScenarioConfig &cfg);

std::string to_csv(const ExperimentRecord &rec);
nlohmann::json to_json(const ExperimentRecord &rec);
nlohmann::json to_json(const ScenarioConfig &cfg);

/// Writes the record; throws std::runtime_error when the path is unwritable.
void emit_csv(const ExperimentRecord &rec, const std::filesystem::path &path);
void emit_json(const ExperimentRecord &rec, const std::filesystem::path &path);

struct BenchRow {
  int qubits;
  double build_circuit_s;
  double build_oracle_s;
  double echo_s;
  double sweep_point_s;
};

/// Wall time per stage for each register size in [from, to], 1 <= from <= to <= 12.
std::vector<BenchRow> bench(int from, int to);
std::string format_bench(const std::vector<BenchRow> &rows);

}  // namespace bakersim
