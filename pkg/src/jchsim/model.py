"""Hamiltonian of two coupled atom-cavity sites in a fixed-excitation block.

H = sum_j [ w_c a_j^dag a_j + w_a |e_j><e_j|
            + coupling (a_j^dag |g_j><e_j| + a_j |e_j><g_j|) ]
    + hopping (a_1^dag a_2 + a_1 a_2^dag)

with w_a = w_c + delta.  All couplings are real (rotating-wave form), so
the matrix is real symmetric.  With omega_c = 0 (the default) energies are
reported relative to the constant shift N * omega_c, which is the only
effect omega_c has inside a fixed-excitation block.
"""

from dataclasses import dataclass, replace
import math

import numpy as np

from jchsim.hilbert import Basis, BasisState


@dataclass(frozen=True)
class ModelParams:
    """Model parameters, all in units of the atom-field coupling."""

    omega_c: float = 0.0
    delta: float = 0.0
    coupling: float = 1.0
    hopping: float = 0.0

    def __post_init__(self):
        for name in ("omega_c", "delta", "coupling", "hopping"):
            v = getattr(self, name)
            if not math.isfinite(v):
                raise ValueError(f"{name} must be finite, got {v}")
        # coupling = 0 is allowed so decoupled-limit states can be checked exactly
        if self.coupling < 0:
            raise ValueError(f"coupling must be >= 0, got {self.coupling}")

    def scaled(self, c: float) -> "ModelParams":
        """All energies multiplied by c > 0; eigenvectors are unchanged."""
        if c <= 0:
            raise ValueError("scale factor must be positive")
        return replace(
            self,
            omega_c=c * self.omega_c,
            delta=c * self.delta,
            coupling=c * self.coupling,
            hopping=c * self.hopping,
        )


class SparseHamiltonian:
    """Real-symmetric matrix in triplet storage (upper triangle only)."""

    def __init__(self, basis: Basis, rows, cols, vals):
        self.basis = basis
        self.rows = np.asarray(rows, dtype=np.intp)
        self.cols = np.asarray(cols, dtype=np.intp)
        self.vals = np.asarray(vals, dtype=float)
        if not np.all(self.rows <= self.cols):
            raise ValueError("triplets must store the upper triangle (row <= col)")

    @property
    def dim(self) -> int:
        return self.basis.dimension

    def matvec(self, v):
        """H @ v with both triangle halves applied."""
        v = np.asarray(v, dtype=float)
        if v.shape != (self.dim,):
            raise ValueError(f"vector has shape {v.shape}, expected ({self.dim},)")
        out = np.zeros(self.dim)
        np.add.at(out, self.rows, self.vals * v[self.cols])
        off = self.rows != self.cols
        np.add.at(out, self.cols[off], self.vals[off] * v[self.rows[off]])
        return out

    def to_dense(self):
        m = np.zeros((self.dim, self.dim))
        m[self.rows, self.cols] = self.vals
        off = self.rows != self.cols
        m[self.cols[off], self.rows[off]] = self.vals[off]
        return m

    def dump_triplets(self) -> str:
        """Text dump `row col value` with 17 significant digits (golden files)."""
        lines = [
            "%d %d %.17g" % (r, c, v)
            for r, c, v in zip(self.rows, self.cols, self.vals)
        ]
        return "\n".join(lines) + "\n"


def matrix_element(params: ModelParams, bra: BasisState, ket: BasisState) -> float:
    """<bra|H|ket> for arbitrary configurations (zero across blocks)."""
    if bra == ket:
        a1, a2, n1, n2 = ket.atom1, ket.atom2, ket.n1, ket.n2
        return params.omega_c * (n1 + n2) + (params.omega_c + params.delta) * (a1 + a2)
    for s, t in ((bra, ket), (ket, bra)):
        # atom-field exchange on site 1: (e, n) <-> (g, n+1)
        if (
            s.atom1 == 1
            and t.atom1 == 0
            and t.n1 == s.n1 + 1
            and s.atom2 == t.atom2
            and s.n2 == t.n2
        ):
            return params.coupling * math.sqrt(s.n1 + 1)
        # atom-field exchange on site 2
        if (
            s.atom2 == 1
            and t.atom2 == 0
            and t.n2 == s.n2 + 1
            and s.atom1 == t.atom1
            and s.n1 == t.n1
        ):
            return params.coupling * math.sqrt(s.n2 + 1)
        # photon hopping: (n1, n2) <-> (n1 - 1, n2 + 1), atoms unchanged
        if (
            s.atom1 == t.atom1
            and s.atom2 == t.atom2
            and t.n1 == s.n1 - 1
            and t.n2 == s.n2 + 1
        ):
            return params.hopping * math.sqrt(s.n1 * (s.n2 + 1))
    return 0.0


def build_hamiltonian(params: ModelParams, basis: Basis) -> SparseHamiltonian:
    """Assemble the fixed-excitation block of the Hamiltonian.

    Every coupling is generated exactly once from one side of the pair, so
    the triplet list holds each upper-triangle entry a single time.
    """
    rows, cols, vals = [], [], []

    def put(i, j, v):
        if v == 0.0:
            return
        if i > j:
            i, j = j, i
        rows.append(i)
        cols.append(j)
        vals.append(v)

    wc, wa = params.omega_c, params.omega_c + params.delta
    for i, s in enumerate(basis):
        diag = wc * (s.n1 + s.n2) + wa * (s.atom1 + s.atom2)
        if diag != 0.0:
            put(i, i, diag)
        if s.atom1 == 1:
            j = basis.index_of(BasisState(0, s.atom2, s.n1 + 1, s.n2))
            put(i, j, params.coupling * math.sqrt(s.n1 + 1))
        if s.atom2 == 1:
            j = basis.index_of(BasisState(s.atom1, 0, s.n1, s.n2 + 1))
            put(i, j, params.coupling * math.sqrt(s.n2 + 1))
        if s.n1 > 0:
            j = basis.index_of(BasisState(s.atom1, s.atom2, s.n1 - 1, s.n2 + 1))
            put(i, j, params.hopping * math.sqrt(s.n1 * (s.n2 + 1)))
    return SparseHamiltonian(basis, rows, cols, vals)


def apply_hamiltonian(h: SparseHamiltonian, v):
    """Matrix-vector product H @ v."""
    return h.matvec(v)
