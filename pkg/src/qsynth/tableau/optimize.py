"""Tableau-level optimization drivers."""

from __future__ import annotations

import logging
from typing import Literal

from .clifford import CliffordTableau
from .core import RotationGroup, Tableau, hopt, tmerge
from .phasepoly import PhasePolynomial, properize, todd

log = logging.getLogger(__name__)

PolyStrategy = Literal["todd", "properize"]


def _is_clifford_t_diagonal(g: RotationGroup) -> bool:
    return g.is_diagonal() and all(r.angle.quarter_turns() is not None for r in g.rotations)


def phasepoly_optimize(t: Tableau, strategy: PolyStrategy = "todd") -> Tableau:
    """Run TODD (or just properize) on every diagonal Clifford+T rotation group."""
    if strategy not in ("todd", "properize"):
        raise ValueError(f"unknown phase-polynomial strategy {strategy!r}")
    t = t.copy()
    i = 0
    while i < len(t.elements):
        e = t.elements[i]
        if isinstance(e, RotationGroup) and e.rotations and _is_clifford_t_diagonal(e):
            poly = PhasePolynomial.from_rotations(t.n, e.rotations)
            if i + 1 >= len(t.elements) or not isinstance(t.elements[i + 1], CliffordTableau):
                t.elements.insert(i + 1, CliffordTableau(t.n))
            cliff = t.elements[i + 1]
            step = todd if strategy == "todd" else properize
            new_cliff, new_poly = step(cliff, poly)
            log.debug("phasepoly: group %d %d -> %d terms", i, len(poly), len(new_poly))
            e.rotations = new_poly.to_rotations()
            t.elements[i + 1] = new_cliff
        i += 1
    return t


def full_optimize(t: Tableau, max_rounds: int = 20) -> tuple[Tableau, list[int]]:
    """Repeat phase merging, internal-H optimization and TODD until the T-count stops falling.

    Returns the best tableau and the T-count after each accepted round, starting
    with the input's.
    """
    history = [t.t_count()]
    best = t
    for _ in range(max_rounds):
        cand = phasepoly_optimize(hopt(tmerge(best)))
        count = cand.t_count()
        if count >= history[-1]:
            if count == history[-1] and best is t:
                best = cand
            break
        best = cand
        history.append(count)
    return best, history


__all__ = ["full_optimize", "phasepoly_optimize"]
