"""Quantum baker's map echo simulator (Python bindings)."""

import json

from ._bakersim import (
    ConfigError,
    Dephase,
    RotX,
    Shift,
    baker_matrix,
    circuit_unitary_of_baker,
    correlation_C,
    deviation,
    diagonal_entropy,
    hermitian_eigen,
    overlap,
    perturbed_echo,
    pseudo_pure,
    qft_matrix,
    shift_circuit_unitary,
    shift_matrix,
    von_neumann_entropy,
)
from ._bakersim import baker_circuit_json as _baker_circuit_json
from ._bakersim import run_scenario as _run_scenario


def baker_circuit(n):
    """Gate list of the n-qubit baker circuit, in temporal order."""
    return json.loads(_baker_circuit_json(n))


def run_scenario(scenario, **kwargs):
    """Run a scenario; returns (csv_text, record_dict)."""
    csv_text, json_text = _run_scenario(scenario, **kwargs)
    return csv_text, json.loads(json_text)


__all__ = [
    "ConfigError",
    "Dephase",
    "RotX",
    "Shift",
    "baker_circuit",
    "baker_matrix",
    "circuit_unitary_of_baker",
    "correlation_C",
    "deviation",
    "diagonal_entropy",
    "hermitian_eigen",
    "overlap",
    "perturbed_echo",
    "pseudo_pure",
    "qft_matrix",
    "run_scenario",
    "shift_circuit_unitary",
    "shift_matrix",
    "von_neumann_entropy",
]
