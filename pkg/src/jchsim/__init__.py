"""Exact diagonalization of the two-site Jaynes-Cummings-Hubbard model
restricted to a fixed total excitation number.

Two cavities, one two-level atom each, photons hop between the cavities.
The total excitation count (photons plus excited atoms) is conserved, so
every computation lives in a single 4N-dimensional block.
"""

from jchsim.hilbert import Basis, BasisState, enumerate_basis
from jchsim.model import ModelParams, SparseHamiltonian, build_hamiltonian
from jchsim.solver import EigenResult, GroundState, full_spectrum, ground_state, lowest_k

__all__ = [
    "Basis",
    "BasisState",
    "enumerate_basis",
    "ModelParams",
    "SparseHamiltonian",
    "build_hamiltonian",
    "EigenResult",
    "GroundState",
    "full_spectrum",
    "ground_state",
    "lowest_k",
]

__version__ = "0.1.0"
