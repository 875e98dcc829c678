import math

import numpy as np
import pytest

import bakersim


def test_baker_matrix_matches_fourier_definition():
    n = 3
    dim = 2**n
    x = np.arange(dim)
    inv = np.exp(-2j * np.pi * np.outer(x, x) / dim) / math.sqrt(dim)
    h = np.arange(dim // 2)
    half = np.exp(2j * np.pi * np.outer(h, h) / (dim // 2)) / math.sqrt(dim // 2)
    expected = inv @ np.kron(np.eye(2), half)
    assert np.allclose(bakersim.baker_matrix(n), expected, atol=1e-12)
    assert np.allclose(bakersim.circuit_unitary_of_baker(n), expected, atol=1e-10)


def test_baker_circuit_listing():
    gates = bakersim.baker_circuit(3)
    assert [g["gate"] for g in gates["gates"]] == ["H", "B", "H", "Swap", "H", "B", "H", "B", "B", "H", "Swap"]


def test_dephase_echo_produces_one_bit():
    rho = bakersim.pseudo_pure(3, 1.0, 0)
    rho_f, rho_fp = bakersim.perturbed_echo(3, rho, bakersim.Dephase(3, 0.5))
    assert np.allclose(rho_f, rho, atol=1e-12)
    qb = bakersim.baker_matrix(3)
    mid = qb @ rho @ qb.conj().T
    z = np.diag([1.0, -1.0] * 4)
    expected = qb.conj().T @ (0.5 * mid + 0.5 * z @ mid @ z) @ qb
    assert np.allclose(rho_fp, expected, atol=1e-12)
    assert np.allclose(np.diag(rho_fp).real, [0.5, 0, 0, 0, 0.5, 0, 0, 0], atol=1e-12)
    assert bakersim.von_neumann_entropy(rho_fp) == pytest.approx(1.0, abs=1e-9)
    assert bakersim.diagonal_entropy(rho_fp) == pytest.approx(1.0, abs=1e-9)


def test_shift_is_more_disruptive_than_rotation():
    rho = bakersim.pseudo_pure(3, 1.0, 0)
    shift = bakersim.overlap(*bakersim.perturbed_echo(3, rho, bakersim.Shift(1)))
    rot = bakersim.overlap(*bakersim.perturbed_echo(3, rho, bakersim.RotX(3, math.pi / 4)))
    assert shift < rot
    assert np.array_equal(bakersim.shift_circuit_unitary(1, 3), bakersim.shift_matrix(1, 3))


def test_correlation_and_eigen():
    dev = bakersim.deviation(bakersim.pseudo_pure(3, 1.0, 0))
    assert bakersim.correlation_C(dev, 0.5 * dev, dev) == pytest.approx(0.5, abs=1e-12)
    values, vectors = bakersim.hermitian_eigen(np.array([[0, 1], [1, 0]], dtype=complex))
    assert values == pytest.approx([-1.0, 1.0])
    assert np.allclose(vectors.conj().T @ vectors, np.eye(2))


def test_run_scenario_and_errors():
    csv_text, record = bakersim.run_scenario("shift-sweep", shifts="1..4")
    assert len(csv_text.strip().splitlines()) == 5
    assert record["param_name"] == "shift"
    assert len(record["rows"]) == 4
    with pytest.raises(ValueError, match="p"):
        bakersim.run_scenario("dephase", p=0.9)
    with pytest.raises(ValueError):
        bakersim.pseudo_pure(3, 2.0, 0)
