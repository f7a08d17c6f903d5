"""Enumeration and indexing of the fixed-excitation-number Hilbert space.

A basis state is the tuple (atom1, atom2, n1, n2): the excitation flag of
each atom and the photon number of each cavity mode.  For total excitation
number N the block has dimension 4N (N >= 1) or 1 (N = 0).

Canonical order: states sorted by (atom1, atom2, n1) ascending; n2 is
implied by the conserved total.  The order is deterministic and the index
of any state is computed arithmetically from the (atom1, atom2, n1)
structure, no hashing involved.
"""

from dataclasses import dataclass

# (atom1, atom2) sectors in canonical order
_ATOM_SECTORS = ((0, 0), (0, 1), (1, 0), (1, 1))


@dataclass(frozen=True, order=True)
class BasisState:
    """One configuration of the two-site system."""

    atom1: int
    atom2: int
    n1: int
    n2: int

    def __post_init__(self):
        if self.atom1 not in (0, 1) or self.atom2 not in (0, 1):
            raise ValueError(f"atomic excitation flags must be 0 or 1, got {self}")
        if self.n1 < 0 or self.n2 < 0:
            raise ValueError(f"photon numbers must be non-negative, got {self}")

    @property
    def total(self) -> int:
        """Conserved excitation count: photons plus excited atoms."""
        return self.atom1 + self.atom2 + self.n1 + self.n2


class Basis:
    """Ordered basis of all configurations with a given total excitation.

    Immutable after construction; safe for concurrent reads.
    """

    def __init__(self, n_total: int):
        if n_total < 0:
            raise ValueError(f"total excitation number must be >= 0, got {n_total}")
        self.n_total = n_total
        states = []
        offsets = {}
        for a1, a2 in _ATOM_SECTORS:
            rem = n_total - a1 - a2
            offsets[(a1, a2)] = len(states)
            if rem < 0:
                continue
            for n1 in range(rem + 1):
                states.append(BasisState(a1, a2, n1, rem - n1))
        self.states = tuple(states)
        self._offsets = offsets

    @property
    def dimension(self) -> int:
        return len(self.states)

    def __len__(self):
        return len(self.states)

    def __iter__(self):
        return iter(self.states)

    def __getitem__(self, i):
        return self.states[i]

    def index_of(self, state: BasisState) -> int:
        """Position of `state` in canonical order.

        Raises KeyError if the state does not belong to this block
        (wrong excitation total).
        """
        if state.total != self.n_total:
            raise KeyError(
                f"{state} has total {state.total}, basis holds total {self.n_total}"
            )
        return self._offsets[(state.atom1, state.atom2)] + state.n1

    def __repr__(self):
        return f"Basis(n_total={self.n_total}, dimension={self.dimension})"


def enumerate_basis(n_total: int) -> Basis:
    """All basis states with the given conserved excitation number."""
    return Basis(n_total)
