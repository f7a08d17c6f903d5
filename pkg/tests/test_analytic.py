import math

import numpy as np
import pytest

from jchsim.analytic import (
    coexisting_state_limit,
    fig1_gap_table,
    gap_lowest_two,
    gap_lowest_two_general,
    group_energies,
    hph_ground_energy,
    limit_variance,
    mixing_angle,
    perturbative_states_n4,
    photonic_ground_state,
    polariton_amplitudes,
    polariton_energy,
)
from jchsim.hilbert import Basis, BasisState
from jchsim.model import ModelParams, build_hamiltonian
from jchsim.solver import full_spectrum, ground_state

SQRT2 = math.sqrt(2.0)
SQRT3 = math.sqrt(3.0)


def test_polariton_energy_values():
    p = ModelParams()
    assert polariton_energy(1, "minus", p) == pytest.approx(-1.0)
    assert polariton_energy(1, "plus", p) == pytest.approx(1.0)
    assert polariton_energy(2, "minus", p) == pytest.approx(-SQRT2)
    assert polariton_energy(0, "minus", p) == 0.0
    with pytest.raises(ValueError):
        polariton_energy(-1, "minus", p)
    with pytest.raises(ValueError):
        polariton_energy(1, "down", p)


def test_branch_ordering():
    for delta in (-7.0, -0.1, 0.0, 0.1, 7.0):
        p = ModelParams(delta=delta)
        for n in range(1, 10):
            assert polariton_energy(n, "minus", p) < polariton_energy(n, "plus", p)


def test_mixing_angle_branch():
    p = ModelParams(delta=0.0)
    assert mixing_angle(1, p) == pytest.approx(math.pi / 2)
    # continuity across zero detuning
    lo = polariton_amplitudes(2, "minus", ModelParams(delta=-1e-9))
    hi = polariton_amplitudes(2, "minus", ModelParams(delta=+1e-9))
    assert np.allclose(lo, hi, atol=1e-8)
    with pytest.raises(ValueError):
        mixing_angle(0, p)


def test_single_site_eigenvalue_residual():
    # dressed amplitudes solve the single-site two-level block exactly
    for delta in (-3.0, 0.0, 2.5):
        p = ModelParams(delta=delta)
        for n in range(1, 12):
            for branch in ("minus", "plus"):
                e_amp, g_amp = polariton_amplitudes(n, branch, p)
                block = np.array([[delta, math.sqrt(n)], [math.sqrt(n), 0.0]])
                v = np.array([e_amp, g_amp])
                e = polariton_energy(n, branch, p)
                assert np.linalg.norm(block @ v - e * v) < 1e-12
                assert np.linalg.norm(v) == pytest.approx(1.0, abs=1e-15)


def test_gap_lowest_two_values():
    assert gap_lowest_two(ModelParams()) == pytest.approx(
        2 * SQRT2 - 1 - SQRT3, abs=1e-14
    )
    assert gap_lowest_two(ModelParams(delta=1e6)) < 1e-4
    assert gap_lowest_two(ModelParams(delta=-1e6)) < 1e-4
    # even in the detuning
    for d in (0.3, 1.7, 12.0):
        assert gap_lowest_two(ModelParams(delta=d)) == pytest.approx(
            gap_lowest_two(ModelParams(delta=-d)), abs=1e-14
        )


def test_gap_vs_dense_random():
    rng = np.random.default_rng(13)
    basis = Basis(4)
    for _ in range(50):
        p = ModelParams(delta=float(rng.uniform(-20, 20)))
        w = full_spectrum(build_hamiltonian(p, basis)).eigenvalues
        assert w[1] - w[0] == pytest.approx(gap_lowest_two(p), abs=1e-10)


def test_gap_general():
    assert gap_lowest_two_general(4) == pytest.approx(2 * SQRT2 - 1 - SQRT3, abs=1e-14)
    assert gap_lowest_two_general(2) == pytest.approx(2 - SQRT2, abs=1e-14)
    assert gap_lowest_two_general(6) == pytest.approx(2 * SQRT3 - SQRT2 - 2, abs=1e-14)
    gaps = [gap_lowest_two_general(n) for n in range(4, 101, 2)]
    assert all(b < a for a, b in zip(gaps, gaps[1:]))  # vanishes as N grows
    assert gaps[-1] < 0.005
    with pytest.raises(ValueError):
        gap_lowest_two_general(5)


def test_gap_general_vs_dense():
    for n in (6, 10, 14):
        w = full_spectrum(build_hamiltonian(ModelParams(), Basis(n))).eigenvalues
        assert w[1] - w[0] == pytest.approx(gap_lowest_two_general(n), abs=1e-10)


def test_photonic_ground_state_n4():
    basis = Basis(4)
    state = photonic_ground_state(4, basis)
    amps = {
        (s.n1, s.n2): a
        for s, a in zip(basis, state.amplitudes)
        if abs(a) > 1e-14
    }
    expected = {
        (4, 0): 0.25,
        (3, 1): -0.5,
        (2, 2): math.sqrt(6) / 4,
        (1, 3): -0.5,
        (0, 4): 0.25,
    }
    sign = 1.0 if amps[(2, 2)] > 0 else -1.0
    for key, val in expected.items():
        assert sign * amps[key] == pytest.approx(val, abs=1e-14)


def test_photonic_ground_state_n1():
    basis = Basis(1)
    state = photonic_ground_state(1, basis).amplitudes
    i = basis.index_of(BasisState(0, 0, 1, 0))
    j = basis.index_of(BasisState(0, 0, 0, 1))
    assert abs(state[i]) == pytest.approx(1 / SQRT2)
    assert state[i] == pytest.approx(-state[j])


def test_photonic_state_norm_exact():
    for n in range(0, 31):
        state = photonic_ground_state(n, Basis(n)).amplitudes
        assert np.linalg.norm(state) == pytest.approx(1.0, abs=1e-12)


def test_photonic_state_fidelity():
    for n in (2, 6, 12):
        basis = Basis(n)
        gs = ground_state(
            build_hamiltonian(ModelParams(delta=1e3, hopping=25.0), basis)
        )
        fid = float(np.dot(gs.vector, photonic_ground_state(n, basis).amplitudes)) ** 2
        assert fid >= 0.999


def test_coexisting_state():
    basis = Basis(2)
    state = coexisting_state_limit(2, basis).amplitudes
    assert abs(state[basis.index_of(BasisState(1, 1, 0, 0))]) == pytest.approx(1.0)
    for n in (4, 8, 12):
        basis = Basis(n)
        gs = ground_state(
            build_hamiltonian(ModelParams(delta=-1e3, hopping=1e-4), basis)
        )
        fid = float(np.dot(gs.vector, coexisting_state_limit(n, basis).amplitudes)) ** 2
        assert fid >= 0.999
    with pytest.raises(ValueError):
        coexisting_state_limit(1, Basis(1))


def test_perturbative_states():
    basis = Basis(4)
    states = perturbative_states_n4(basis)
    assert set(states) == {
        "coexisting", "photonic", "single-atom-1", "single-atom-2",
    }
    mat = np.column_stack([s.amplitudes for s in states.values()])
    assert np.allclose(mat.T @ mat, np.eye(4), atol=1e-14)
    # exact eigenstates of the zero-coupling Hamiltonian at hopping = -detuning
    h = build_hamiltonian(ModelParams(delta=-1.0, coupling=0.0, hopping=1.0), basis)
    for s in states.values():
        assert np.linalg.norm(h.matvec(s.amplitudes) + 4.0 * s.amplitudes) < 1e-12
    # small coupling picks a unique ground state inside that span
    gs = ground_state(
        build_hamiltonian(ModelParams(delta=-1.0, coupling=1e-3, hopping=1.0), basis)
    )
    weight = float(np.sum((mat.T @ gs.vector) ** 2))
    assert weight >= 0.99
    with pytest.raises(ValueError):
        perturbative_states_n4(Basis(2))


def test_limit_variance():
    assert limit_variance(4, +1) == 1.0
    assert limit_variance(2, -1) == 0.0
    assert limit_variance(30, +1) == 7.5
    with pytest.raises(ValueError):
        limit_variance(1, -1)


def test_hph_ground_energy():
    assert hph_ground_energy(4, ModelParams(hopping=1.0)) == -4.0
    assert hph_ground_energy(0, ModelParams(hopping=3.0)) == 0.0
    # symmetric mode takes over for negative hopping, same energy
    assert hph_ground_energy(4, ModelParams(hopping=-1.0)) == -4.0
    gs = ground_state(
        build_hamiltonian(
            ModelParams(delta=1e3, coupling=1e-8, hopping=25.0), Basis(8)
        )
    )
    assert gs.energy == pytest.approx(
        hph_ground_energy(8, ModelParams(hopping=25.0)), abs=1e-4
    )


def test_fig1_gap_table():
    table = fig1_gap_table([0.0])
    assert table.shape == (1, 8)
    assert table[0, 0] == pytest.approx(2 * SQRT2 - 1 - SQRT3, abs=1e-12)
    table = fig1_gap_table(np.linspace(-10, 10, 21))
    assert np.all(table >= 0)


def test_analytic_state_energies():
    # each limit state reproduces its closed-form energy under the matching
    # limit Hamiltonian
    basis = Basis(4)
    h = build_hamiltonian(ModelParams(coupling=0.0, hopping=1.0), basis)
    v = photonic_ground_state(4, basis).amplitudes
    assert v @ h.matvec(v) == pytest.approx(-4.0, abs=1e-10)
    h = build_hamiltonian(
        ModelParams(delta=-2.0, coupling=0.0, hopping=1.0), basis
    )
    v = coexisting_state_limit(4, basis).amplitudes
    assert v @ h.matvec(v) == pytest.approx(2 * (-2.0) - 2.0, abs=1e-10)


def test_group_energies_ordering():
    basis = Basis(4)
    for delta in (-5.0, 0.0, 5.0):
        groups = group_energies(basis, ModelParams(delta=delta))
        total = sum(len(members) for _, members in groups)
        assert total == 16
        energies = [e for e, _ in groups]
        assert energies == sorted(energies)
        # lowest group is the half-half dressed pair
        assert groups[0][1][0].label == "2-x2-"
