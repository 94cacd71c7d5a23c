"""Clifford tableaux, Pauli-rotation groups, and phase-polynomial optimization."""

from .clifford import CliffordTableau, NotCliffordError
from .core import RotationGroup, Tableau, flatten, from_circuit, hopt, tmerge, to_circuit
from .optimize import full_optimize, phasepoly_optimize
from .pauli import PauliRotation, PauliString
from .phasepoly import (
    NotProperError,
    PhasePolynomial,
    SignatureMismatchError,
    apply_clifford_correction,
    properize,
    signature,
    todd,
    todd_once,
)

__all__ = [
    "CliffordTableau",
    "NotCliffordError",
    "NotProperError",
    "PauliRotation",
    "PauliString",
    "PhasePolynomial",
    "RotationGroup",
    "SignatureMismatchError",
    "Tableau",
    "apply_clifford_correction",
    "flatten",
    "from_circuit",
    "full_optimize",
    "hopt",
    "phasepoly_optimize",
    "properize",
    "signature",
    "tmerge",
    "to_circuit",
    "todd",
    "todd_once",
]
