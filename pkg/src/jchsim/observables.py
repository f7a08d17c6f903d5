"""Order parameters and distributions computed from a ground-state vector.

All site operators used here are diagonal in the configuration basis
except the dressed-state projections, which are taken against the exact
zero-hopping product states.
"""

from dataclasses import dataclass

import numpy as np

from jchsim.analytic import group_energies
from jchsim.hilbert import Basis
from jchsim.model import ModelParams

NORM_TOL = 1e-8


@dataclass
class SiteMoments:
    mean_excitation: float
    variance: float
    relative_variance: float


@dataclass
class AtomMoments:
    excited_prob: float
    variance: float


@dataclass
class PolaritonGroup:
    labels: tuple
    energy: float
    probability: float


@dataclass
class GroupDistribution:
    groups: list  # of PolaritonGroup, ascending zero-hopping energy

    @property
    def probabilities(self):
        return np.array([g.probability for g in self.groups])


def _check_state(state, basis):
    state = np.asarray(state, dtype=float)
    if state.shape != (basis.dimension,):
        raise ValueError(
            f"state has shape {state.shape}, basis dimension is {basis.dimension}"
        )
    norm = np.linalg.norm(state)
    if abs(norm - 1.0) > NORM_TOL:
        raise ValueError(f"state norm {norm} deviates from 1 beyond {NORM_TOL}")
    return state


def _site_values(basis, site):
    if site == 1:
        return np.array([s.n1 + s.atom1 for s in basis], dtype=float)
    if site == 2:
        return np.array([s.n2 + s.atom2 for s in basis], dtype=float)
    raise ValueError(f"site must be 1 or 2, got {site}")


def site_moments(state, basis: Basis, site: int = 1) -> SiteMoments:
    """Mean and variance of the total excitation number on one site."""
    state = _check_state(state, basis)
    vals = _site_values(basis, site)
    p = state**2
    mean = float(p @ vals)
    var = float(p @ vals**2) - mean**2
    var = max(var, 0.0)  # clip roundoff
    n = basis.n_total
    return SiteMoments(mean, var, var / n if n > 0 else 0.0)


def atom_moments(state, basis: Basis, site: int = 1) -> AtomMoments:
    """Excitation probability of one atom and its variance p(1-p)."""
    state = _check_state(state, basis)
    flags = np.array(
        [(s.atom1 if site == 1 else s.atom2) for s in basis], dtype=float
    )
    p = float(state**2 @ flags)
    return AtomMoments(p, p * (1.0 - p))


def total_atomic_distribution(state, basis: Basis):
    """P(N_A) over the total atomic excitation N_A in {0, 1, 2}."""
    state = _check_state(state, basis)
    out = np.zeros(3)
    for amp, s in zip(state, basis):
        out[s.atom1 + s.atom2] += amp * amp
    return out


def polariton_group_distribution(
    state, basis: Basis, params: ModelParams
) -> GroupDistribution:
    """Weight of the state in each zero-hopping dressed-product level group.

    Groups are ordered by their zero-hopping energy; the probabilities sum
    to one because the product states span the fixed-excitation block.
    """
    state = _check_state(state, basis)
    groups = []
    for energy, members in group_energies(basis, params):
        prob = sum(float(m.amplitudes @ state) ** 2 for m in members)
        groups.append(
            PolaritonGroup(tuple(m.label for m in members), energy, prob)
        )
    return GroupDistribution(groups)


def variance_product(site: SiteMoments, atom: AtomMoments):
    """(variance product, relative variance product) of the two measures."""
    return site.variance * atom.variance, site.relative_variance * atom.variance
