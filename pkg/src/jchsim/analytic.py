"""Closed-form reference results: polariton states and energies, gap
formulas, and the exact limit states of the decoupled regimes.

Everything here is independent of the numerical eigensolvers and is used
to cross-check them.
"""

from dataclasses import dataclass
import math

import numpy as np

from jchsim.hilbert import Basis, BasisState
from jchsim.model import ModelParams
from jchsim.solver import fix_phase


@dataclass(frozen=True)
class PolaritonLevel:
    """Single-site dressed level |n^+-> with its energy and mixing angle."""

    n: int
    branch: str  # "minus" | "plus"; ignored for n = 0
    energy: float
    theta: float


@dataclass
class AnalyticState:
    """A closed-form state expanded over a fixed-excitation basis."""

    label: str
    amplitudes: np.ndarray


def mixing_angle(n: int, params: ModelParams) -> float:
    """theta_n with tan(theta_n) = 2*coupling*sqrt(n)/delta, theta in (0, pi).

    The atan2 branch makes the minus-branch state vary continuously across
    delta = 0 and keeps it the lower-energy state for all detunings.
    """
    if n < 1:
        raise ValueError("mixing angle defined for n >= 1")
    return math.atan2(2.0 * params.coupling * math.sqrt(n), params.delta)


def polariton_energy(n: int, branch: str, params: ModelParams) -> float:
    """Single-site dressed energy: n*w_c + delta/2 -+ sqrt(delta^2 + 4n coupling^2)/2."""
    if n < 0:
        raise ValueError(f"photon-pair quantum number must be >= 0, got {n}")
    if n == 0:
        return 0.0
    root = math.sqrt(params.delta**2 + 4.0 * n * params.coupling**2)
    base = n * params.omega_c + 0.5 * params.delta
    if branch == "minus":
        return base - 0.5 * root
    if branch == "plus":
        return base + 0.5 * root
    raise ValueError(f"branch must be 'minus' or 'plus', got {branch!r}")


def polariton_level(n: int, branch: str, params: ModelParams) -> PolaritonLevel:
    theta = mixing_angle(n, params) if n >= 1 else 0.0
    return PolaritonLevel(n, branch, polariton_energy(n, branch, params), theta)


def polariton_amplitudes(n: int, branch: str, params: ModelParams):
    """Amplitudes (on |e, n-1> and |g, n>) of the single-site dressed state."""
    if n == 0:
        return 0.0, 1.0  # |g, 0>
    half = 0.5 * mixing_angle(n, params)
    if branch == "minus":
        return math.sin(half), -math.cos(half)
    if branch == "plus":
        return math.cos(half), math.sin(half)
    raise ValueError(f"branch must be 'minus' or 'plus', got {branch!r}")


@dataclass
class ProductPolaritonState:
    """Tensor product of one dressed state per site, at zero hopping."""

    label: str
    n_site1: int
    branch1: str
    n_site2: int
    branch2: str
    energy: float
    amplitudes: np.ndarray


def _site_label(n, branch):
    if n == 0:
        return "0"
    return f"{n}{'-' if branch == 'minus' else '+'}"


def product_polariton_states(basis: Basis, params: ModelParams):
    """All dressed-state products spanning the fixed-excitation block.

    These are the exact eigenstates at zero hopping; their energies are the
    sums of the single-site dressed energies.
    """
    out = []
    n_total = basis.n_total
    for n1 in range(n_total + 1):
        n2 = n_total - n1
        for b1 in (("minus", "plus") if n1 >= 1 else ("minus",)):
            for b2 in (("minus", "plus") if n2 >= 1 else ("minus",)):
                e1, g1 = polariton_amplitudes(n1, b1, params)
                e2, g2 = polariton_amplitudes(n2, b2, params)
                vec = np.zeros(basis.dimension)
                # components: (atom1, nph1) in {(1, n1-1), (0, n1)} and same for site 2
                comps1 = [(0, n1, g1)] + ([(1, n1 - 1, e1)] if n1 >= 1 else [])
                comps2 = [(0, n2, g2)] + ([(1, n2 - 1, e2)] if n2 >= 1 else [])
                for a1, m1, c1 in comps1:
                    for a2, m2, c2 in comps2:
                        vec[basis.index_of(BasisState(a1, a2, m1, m2))] = c1 * c2
                energy = polariton_energy(n1, b1, params) + polariton_energy(n2, b2, params)
                label = f"{_site_label(n1, b1)}x{_site_label(n2, b2)}"
                out.append(ProductPolaritonState(label, n1, b1, n2, b2, energy, vec))
    return out


def group_energies(basis: Basis, params: ModelParams, cluster_tol=None):
    """Zero-hopping level groups: clustered product energies, ascending.

    Returns a list of (energy, [ProductPolaritonState, ...]).  Accidental
    degeneracies at special detunings merge groups; all members are kept.
    """
    if cluster_tol is None:
        cluster_tol = 1e-9 * (params.coupling if params.coupling > 0 else 1.0)
    prods = sorted(product_polariton_states(basis, params), key=lambda p: p.energy)
    groups = []
    for p in prods:
        if groups and abs(p.energy - groups[-1][1][0].energy) <= cluster_tol:
            groups[-1][1].append(p)
        else:
            groups.append((p.energy, [p]))
    return groups


def gap_lowest_two(params: ModelParams) -> float:
    """Closed-form gap between the two lowest zero-hopping groups at total
    excitation 4:  |sqrt(d^2+12c^2) - 2 sqrt(d^2+8c^2) + sqrt(d^2+4c^2)| / 2."""
    d2 = params.delta**2
    c2 = params.coupling**2
    return 0.5 * abs(
        math.sqrt(d2 + 12.0 * c2)
        - 2.0 * math.sqrt(d2 + 8.0 * c2)
        + math.sqrt(d2 + 4.0 * c2)
    )


def gap_lowest_two_general(n_total: int, coupling: float = 1.0) -> float:
    """Zero-hopping, zero-detuning gap for even total excitation.

    With m = n_total/2 photons per site in the lowest group, the gap is
    (2 sqrt(m) - sqrt(m-1) - sqrt(m+1)) * coupling.  Note this is the
    per-site form; the form with sqrt(N) in place of sqrt(N/2) does not
    reproduce the N = 4 value and fails the dense-solver cross-check.
    """
    if n_total % 2 != 0 or n_total < 2:
        raise ValueError(f"even total excitation >= 2 required, got {n_total}")
    m = n_total // 2
    return (2.0 * math.sqrt(m) - math.sqrt(m - 1) - math.sqrt(m + 1)) * coupling


def _delocalized_photon_amplitudes(n_photons: int, mode_sign: int):
    """Amplitudes over (n1 = M-k, n2 = k) of (b^dag)^M / sqrt(M!) |vac>,
    where b = (a1 + mode_sign * a2)/sqrt(2)."""
    amps = np.array(
        [
            (mode_sign**k) * math.sqrt(math.comb(n_photons, k)) / 2 ** (n_photons / 2.0)
            for k in range(n_photons + 1)
        ]
    )
    return amps


def photonic_ground_state(n_total: int, basis: Basis) -> AnalyticState:
    """Exact lowest state of pure photon hopping (h > 0): both atoms ground,
    all excitations in the antisymmetric delocalized mode.

    Amplitude on |(N-k)_1, k_2> is (-1)^k sqrt(C(N,k)) / 2^(N/2).
    """
    if basis.n_total != n_total:
        raise ValueError("basis does not match the requested excitation number")
    amps = _delocalized_photon_amplitudes(n_total, -1)
    vec = np.zeros(basis.dimension)
    for k, a in enumerate(amps):
        vec[basis.index_of(BasisState(0, 0, n_total - k, k))] = a
    return AnalyticState("photonic-superfluid", fix_phase(vec))


def coexisting_state_limit(n_total: int, basis: Basis, hopping_sign: int = 1) -> AnalyticState:
    """Limit state at large negative detuning: both atoms excited, the
    remaining photons delocalized.

    For hopping > 0 the antisymmetric mode is the photon ground mode (the
    dispersive atom shift renormalizes the mode frequency, not the sign of
    the hopping); `hopping_sign = -1` selects the symmetric mode instead.
    """
    if n_total < 2:
        raise ValueError(f"need total excitation >= 2, got {n_total}")
    if basis.n_total != n_total:
        raise ValueError("basis does not match the requested excitation number")
    m = n_total - 2
    amps = _delocalized_photon_amplitudes(m, -1 if hopping_sign > 0 else 1)
    vec = np.zeros(basis.dimension)
    for k, a in enumerate(amps):
        vec[basis.index_of(BasisState(1, 1, m - k, k))] = a
    return AnalyticState("coexisting", fix_phase(vec))


def perturbative_states_n4(basis: Basis):
    """The four degenerate lowest eigenstates at zero coupling and
    hopping = -delta, for total excitation 4.

    The two states with one excited atom carry three photons in the
    antisymmetric delocalized mode; the printed closed form is normalized
    here by 1/(2 sqrt(2)) (the bracketed vector has norm 2 sqrt(2)).
    """
    if basis.n_total != 4:
        raise ValueError("these states are specific to total excitation 4")

    def embed(atoms, photon_amps):
        vec = np.zeros(basis.dimension)
        for (m1, m2), a in photon_amps.items():
            vec[basis.index_of(BasisState(atoms[0], atoms[1], m1, m2))] = a
        return fix_phase(vec)

    s2 = math.sqrt(2.0)
    s3 = math.sqrt(3.0)
    co = embed((1, 1), {(1, 1): s2 / 2.0, (0, 2): -0.5, (2, 0): -0.5})
    ps = photonic_ground_state(4, basis).amplitudes
    norm = 1.0 / (2.0 * s2)
    photon3 = {
        (3, 0): norm,
        (0, 3): -norm,
        (2, 1): -s3 * norm,
        (1, 2): s3 * norm,
    }
    phi1 = embed((1, 0), photon3)
    phi2 = embed((0, 1), photon3)
    return {
        "coexisting": AnalyticState("coexisting", co),
        "photonic": AnalyticState("photonic-superfluid", ps),
        "single-atom-1": AnalyticState("single-atom-1", phi1),
        "single-atom-2": AnalyticState("single-atom-2", phi2),
    }


def limit_variance(n_total: int, detuning_sign: int) -> float:
    """Large-detuning limit of the site-1 excitation variance.

    N/4 for detuning -> +inf (all excitations photonic, binomially split);
    (N-2)/4 for detuning -> -inf (two excitations pinned in the atoms).
    """
    if detuning_sign > 0:
        return n_total / 4.0
    if n_total < 2:
        raise ValueError("negative-detuning branch needs total excitation >= 2")
    return (n_total - 2) / 4.0


def hph_ground_energy(n_total: int, params: ModelParams) -> float:
    """Ground energy of the decoupled photon Hamiltonian: N*(omega_c - |h|).

    For hopping < 0 the symmetric mode takes over as the ground mode; the
    energy is the same with |h|.
    """
    return n_total * (params.omega_c - abs(params.hopping))


def fig1_gap_table(deltas, coupling: float = 1.0, omega_c: float = 0.0):
    """Consecutive zero-hopping group-energy differences at total
    excitation 4, one row per detuning (7 columns)."""
    basis = Basis(4)
    rows = []
    for d in deltas:
        params = ModelParams(omega_c=omega_c, delta=float(d), coupling=coupling)
        energies = [e for e, _ in group_energies(basis, params)]
        rows.append(np.diff(energies))
    return np.array(rows)
