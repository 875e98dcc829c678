// Command-line runner for baker's-map echo experiments.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "bakersim/baker.hpp"
#include "bakersim/experiment.hpp"

namespace {

void write_json(const nlohmann::json &j, const std::string &path) {
  if (path.empty() || path == "-") {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << j.dump(2) << '\n';
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Quantum baker's map echo simulator"};
  app.require_subcommand(1);

  bakersim::ScenarioConfig cfg;
  std::string scenario_name;
  std::string csv_path, json_path, dump_circuit_path;

  auto *run = app.add_subcommand("run", "Run an experiment scenario");
  run->add_option("scenario", scenario_name, "echo | dephase | rotation-sweep | shift-sweep")->required();
  run->add_option("--qubits", cfg.qubits, "Register size")->capture_default_str();
  run->add_option("--epsilon", cfg.epsilon, "Pseudo-pure purity in [0, 1]")->capture_default_str();
  run->add_option("--initial", cfg.initial_index, "Initial computational basis index")->capture_default_str();
  run->add_option("--qubit", cfg.target_qubit, "Perturbed qubit (default: least significant)");
  run->add_option("--angles", cfg.angles, "start:end:count or comma list; pi accepted")->capture_default_str();
  run->add_option("--shifts", cfg.shifts, "Shift range a..b")->capture_default_str();
  run->add_option("--p", cfg.dephase_p, "Dephasing Kraus weight in [0, 1/2]")->capture_default_str();
  run->add_flag("--average-basis", cfg.average_over_basis, "Also average overlaps over the computational basis");
  run->add_flag("--matrices", cfg.include_matrices, "Include final density matrices in JSON output");
  run->add_option("--csv", csv_path, "CSV output path");
  run->add_option("--json", json_path, "JSON output path");
  run->add_option("--dump-circuit", dump_circuit_path, "Write the baker circuit as JSON");

  int dump_qubits = 3;
  std::string dump_json;
  bool compressed = false;
  auto *dump = app.add_subcommand("dump", "Export the baker map");
  dump->require_subcommand(1);
  auto *dump_baker = dump->add_subcommand("baker", "Baker matrix as nested [re, im] arrays");
  dump_baker->add_option("--qubits", dump_qubits)->capture_default_str();
  dump_baker->add_option("--json", dump_json, "Output path (default stdout)");
  auto *dump_circ = dump->add_subcommand("circuit", "Baker gate sequence");
  dump_circ->add_option("--qubits", dump_qubits)->capture_default_str();
  dump_circ->add_option("--json", dump_json, "Output path (default stdout)");
  dump_circ->add_flag("--compressed", compressed, "Remove swaps by relabeling");

  std::string bench_range = "1..10";
  auto *bench = app.add_subcommand("bench", "Time each stage per register size");
  bench->add_option("--qubits", bench_range, "Range a..b within 1..12")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) {
      cfg.scenario = bakersim::parse_scenario(scenario_name);
      const auto rec = bakersim::run_scenario(cfg);
      if (!dump_circuit_path.empty()) write_json(bakersim::to_json(bakersim::baker_circuit(cfg.qubits)), dump_circuit_path);
      if (!csv_path.empty()) bakersim::emit_csv(rec, csv_path);
      if (!json_path.empty()) bakersim::emit_json(rec, json_path);
      if (csv_path.empty() && json_path.empty()) std::cout << bakersim::to_csv(rec);
    } else if (*dump_baker) {
      const auto map = bakersim::baker_map(dump_qubits);
      nlohmann::json j;
      j["qubits"] = dump_qubits;
      j["matrix"] = bakersim::to_json(map.matrix);
      write_json(j, dump_json);
    } else if (*dump_circ) {
      const auto circuit = bakersim::baker_circuit(dump_qubits);
      if (compressed) {
        const auto c = bakersim::relabel_compress(circuit);
        nlohmann::json j = bakersim::to_json(c.circuit);
        auto wire = nlohmann::json::array();
        for (auto w : c.wire) wire.push_back(w.value);
        j["final_wire"] = wire;
        write_json(j, dump_json);
      } else {
        write_json(bakersim::to_json(circuit), dump_json);
      }
    } else if (*bench) {
      const auto range = bakersim::parse_shift_range(bench_range, "qubits");
      std::cout << bakersim::format_bench(bakersim::bench(range.front(), range.back()));
    }
  } catch (const bakersim::ConfigError &e) {
    std::cerr << "bakersim: invalid configuration: " << e.what() << '\n';
    return 2;
  } catch (const std::exception &e) {
    std::cerr << "bakersim: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
