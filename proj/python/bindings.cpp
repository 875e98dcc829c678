#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bakersim/baker.hpp"
#include "bakersim/experiment.hpp"
#include "bakersim/metrics.hpp"
#include "bakersim/perturb.hpp"

namespace py = pybind11;
using namespace bakersim;

namespace {

using ComplexArray = py::array_t<Complex, py::array::c_style | py::array::forcecast>;

CMatrix to_cmatrix(const ComplexArray &a) {
  if (a.ndim() != 2) throw std::invalid_argument("expected a 2-D array");
  const auto rows = static_cast<std::size_t>(a.shape(0));
  const auto cols = static_cast<std::size_t>(a.shape(1));
  return CMatrix(rows, cols, std::vector<Complex>(a.data(), a.data() + rows * cols));
}

ComplexArray to_numpy(const CMatrix &m) {
  ComplexArray out({m.rows(), m.cols()});
  std::copy(m.entries().begin(), m.entries().end(), out.mutable_data());
  return out;
}

}  // namespace

PYBIND11_MODULE(_bakersim, m) {
  m.doc() = "Quantum baker's map simulator: perturbed echoes, overlaps and entropies.";

  py::class_<perturbation::Shift>(m, "Shift")
      .def(py::init([](int s) { return perturbation::Shift{s}; }), py::arg("s"))
      .def_readonly("s", &perturbation::Shift::s);
  py::class_<perturbation::RotX>(m, "RotX")
      .def(py::init([](int q, double theta) { return perturbation::RotX{QubitIndex{q}, theta}; }), py::arg("qubit"),
           py::arg("theta"))
      .def_readonly("theta", &perturbation::RotX::theta);
  py::class_<perturbation::Dephase>(m, "Dephase")
      .def(py::init([](int q, double p) { return perturbation::Dephase{QubitIndex{q}, p}; }), py::arg("qubit"),
           py::arg("p"))
      .def_readonly("p", &perturbation::Dephase::p);

  m.def("qft_matrix", [](std::size_t dim) { return to_numpy(qft_matrix(dim)); }, py::arg("dim"));
  m.def("baker_matrix", [](int n) { return to_numpy(baker_map(n).matrix); }, py::arg("n"),
        "Baker matrix, checked against its gate decomposition.");
  m.def("baker_circuit_json", [](int n) { return to_json(baker_circuit(n)).dump(); }, py::arg("n"));
  m.def("circuit_unitary_of_baker", [](int n) { return to_numpy(circuit_unitary(baker_circuit(n))); }, py::arg("n"));
  m.def("shift_matrix", [](int s, int n) { return to_numpy(shift_matrix(s, n)); }, py::arg("s"), py::arg("n"));
  m.def("shift_circuit_unitary", [](int s, int n) { return to_numpy(circuit_unitary(shift_circuit_repeated(s, n))); },
        py::arg("s"), py::arg("n"));
  m.def("pseudo_pure", [](int n, double eps, std::size_t index) { return to_numpy(pseudo_pure(n, eps, index)); },
        py::arg("n"), py::arg("epsilon"), py::arg("index"));

  m.def(
      "perturbed_echo",
      [](int n, const ComplexArray &rho, const Perturbation &pert) {
        const auto echo = perturbed_echo(baker_map(n), to_cmatrix(rho), pert);
        return py::make_tuple(to_numpy(echo.unperturbed), to_numpy(echo.perturbed));
      },
      py::arg("n"), py::arg("rho"), py::arg("perturbation"),
      "Returns (rho_f, rho_f_prime) for forward map, perturbation, inverse map.");

  m.def("overlap", [](const ComplexArray &a, const ComplexArray &b) { return overlap(to_cmatrix(a), to_cmatrix(b)); });
  m.def("von_neumann_entropy", [](const ComplexArray &rho) { return von_neumann_entropy(to_cmatrix(rho)); });
  m.def("diagonal_entropy", [](const ComplexArray &rho) { return diagonal_entropy(to_cmatrix(rho)); });
  m.def(
      "correlation_C",
      [](const ComplexArray &theory, const ComplexArray &experiment, const ComplexArray &initial) {
        return correlation_C(DeviationMatrix(to_cmatrix(theory)), DeviationMatrix(to_cmatrix(experiment)),
                             DeviationMatrix(to_cmatrix(initial)));
      },
      py::arg("theory"), py::arg("experiment"), py::arg("initial"), "Arguments are traceless deviation matrices.");
  m.def("deviation", [](const ComplexArray &rho) { return to_numpy(deviation(to_cmatrix(rho)).matrix()); });
  m.def("hermitian_eigen", [](const ComplexArray &a) {
    auto r = hermitian_eigen(to_cmatrix(a));
    return py::make_tuple(r.eigenvalues, to_numpy(r.eigenvectors));
  });

  m.def(
      "run_scenario",
      [](const std::string &scenario, int qubits, double epsilon, std::size_t initial, int qubit,
         const std::string &angles, const std::string &shifts, double p, bool average_basis, bool matrices) {
        ScenarioConfig cfg;
        cfg.scenario = parse_scenario(scenario);
        cfg.qubits = qubits;
        cfg.epsilon = epsilon;
        cfg.initial_index = initial;
        cfg.target_qubit = qubit;
        cfg.angles = angles;
        cfg.shifts = shifts;
        cfg.dephase_p = p;
        cfg.average_over_basis = average_basis;
        cfg.include_matrices = matrices;
        const auto rec = run_scenario(cfg);
        return py::make_tuple(to_csv(rec), to_json(rec).dump());
      },
      py::arg("scenario"), py::arg("qubits") = 3, py::arg("epsilon") = 1.0, py::arg("initial") = 0,
      py::arg("qubit") = 0, py::arg("angles") = "pi/32,pi/16,pi/8,pi/4", py::arg("shifts") = "1..4",
      py::arg("p") = 0.5, py::arg("average_basis") = false, py::arg("matrices") = false,
      "Returns (csv_text, json_text).");

  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
}
