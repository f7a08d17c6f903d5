"""Eigensolvers for the fixed-excitation Hamiltonian block.

Two independent routes: a dense symmetric solve (LAPACK, used for every
problem up to DENSE_THRESHOLD) and a hand-rolled Lanczos iteration with
full reorthogonalization that serves both as headroom for larger blocks
and as a cross-check of the dense path.
"""

from dataclasses import dataclass
import math

import numpy as np
from scipy.linalg import eigh_tridiagonal

from jchsim.model import SparseHamiltonian

DENSE_THRESHOLD = 512

# degeneracy flag: gap below 1e-9 * max(1, spectral width)
DEGENERACY_REL_TOL = 1e-9


class SolverError(RuntimeError):
    """Raised when an eigensolve fails to converge or fails its residual check."""


@dataclass
class EigenResult:
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray  # orthonormal columns, eigenvectors[:, i] <-> eigenvalues[i]
    residual_norms: np.ndarray


@dataclass
class GroundState:
    energy: float
    vector: np.ndarray
    degenerate: bool
    gap_to_first_excited: float


def fix_phase(v, rel_tol=1e-12):
    """Make the first non-negligible amplitude positive (global phase)."""
    scale = np.max(np.abs(v))
    if scale == 0.0:
        return v
    for x in v:
        if abs(x) > rel_tol * scale:
            return v if x > 0 else -v
    return v


def _residuals(h: SparseHamiltonian, w, v):
    return np.array(
        [np.linalg.norm(h.matvec(v[:, i]) - w[i] * v[:, i]) for i in range(len(w))]
    )


def full_spectrum(h: SparseHamiltonian) -> EigenResult:
    """All eigenpairs via a dense symmetric solve, with a residual check."""
    if h.dim < 1:
        raise SolverError("empty Hamiltonian")
    w, v = np.linalg.eigh(h.to_dense())
    for i in range(v.shape[1]):
        v[:, i] = fix_phase(v[:, i])
    res = _residuals(h, w, v)
    tol = 1e-10 * max(1.0, np.max(np.abs(w)))
    if np.any(res > tol):
        raise SolverError(
            f"dense solve residual {np.max(res):.3e} exceeds {tol:.3e} (dim={h.dim})"
        )
    return EigenResult(w, v, res)


def lanczos_lowest(h: SparseHamiltonian, k=1, tol=1e-12, max_iter=None, seed=0):
    """k lowest eigenpairs by Lanczos with full reorthogonalization.

    The Krylov basis is re-orthogonalized against all previous vectors at
    every step, so no ghost eigenvalues appear at the cost of O(m^2 n) work.
    """
    n = h.dim
    if not 1 <= k <= n:
        raise SolverError(f"need 1 <= k <= {n}, got k={k}")
    if max_iter is None:
        max_iter = min(n, max(4 * k + 40, 80))
    rng = np.random.default_rng(seed)
    q = rng.standard_normal(n)
    q /= np.linalg.norm(q)
    basis_vecs = [q]
    alphas, betas = [], []
    w = y = None
    for m in range(1, max_iter + 1):
        z = h.matvec(basis_vecs[-1])
        alphas.append(float(basis_vecs[-1] @ z))
        # full reorthogonalization, twice for good measure
        for _ in range(2):
            for qi in basis_vecs:
                z -= (qi @ z) * qi
        beta = float(np.linalg.norm(z))
        if m >= k:
            if len(alphas) == 1:
                w = np.array(alphas)
                y = np.ones((1, 1))
            else:
                w, y = eigh_tridiagonal(np.array(alphas), np.array(betas))
            # Ritz residual estimate |beta * last component|
            est = beta * np.abs(y[-1, :k])
            scale = max(1.0, float(np.max(np.abs(w))))
            if np.all(est <= tol * scale) or beta <= 1e-14 * scale or m == n:
                break
        if m == max_iter:
            break
        betas.append(beta)
        basis_vecs.append(z / beta)
    else:  # pragma: no cover
        pass
    if w is None or len(w) < k:
        raise SolverError("Lanczos failed to produce enough Ritz pairs")
    vmat = np.column_stack(basis_vecs[: y.shape[0]])
    vecs = vmat @ y[:, :k]
    # re-normalize and check true residuals
    for i in range(k):
        vecs[:, i] /= np.linalg.norm(vecs[:, i])
        vecs[:, i] = fix_phase(vecs[:, i])
    wk = w[:k]
    res = _residuals(h, wk, vecs)
    scale = max(1.0, float(np.max(np.abs(wk))))
    if np.any(res > max(tol, 1e-9) * scale * 10):
        raise SolverError(
            f"Lanczos residual {np.max(res):.3e} too large after {len(alphas)} steps"
        )
    return EigenResult(np.array(wk), vecs, res)


def lowest_k(h: SparseHamiltonian, k: int, tol=1e-12) -> EigenResult:
    """k lowest eigenpairs, ascending."""
    if not 1 <= k <= h.dim:
        raise SolverError(f"need 1 <= k <= {h.dim}, got k={k}")
    if h.dim <= DENSE_THRESHOLD:
        full = full_spectrum(h)
        return EigenResult(
            full.eigenvalues[:k], full.eigenvectors[:, :k], full.residual_norms[:k]
        )
    return lanczos_lowest(h, k=k, tol=tol)


def ground_state(h: SparseHamiltonian, tol=1e-12) -> GroundState:
    """Lowest eigenpair with explicit degeneracy detection.

    The degeneracy flag compares the gap to DEGENERACY_REL_TOL times the
    spectral width, so near-exact crossings are reported instead of an
    arbitrary vector being passed off as "the" ground state.
    """
    if h.dim == 1:
        e = float(full_spectrum(h).eigenvalues[0])
        return GroundState(e, np.ones(1), False, math.inf)
    if h.dim <= DENSE_THRESHOLD:
        full = full_spectrum(h)
        w, v = full.eigenvalues, full.eigenvectors
        width = float(w[-1] - w[0])
    else:
        res = lanczos_lowest(h, k=2, tol=tol)
        w, v = res.eigenvalues, res.eigenvectors
        # Gershgorin-style bound as a width proxy on the iterative path
        width = 2.0 * max(1.0, float(np.max(np.abs(w))))
    gap = float(w[1] - w[0])
    degenerate = gap < DEGENERACY_REL_TOL * max(1.0, width)
    return GroundState(float(w[0]), v[:, 0].copy(), degenerate, gap)
