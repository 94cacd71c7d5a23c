"""Print one SHA-256 digest per pipeline over a fixed slice of the fuzz corpus.

Two runs (or two machines) agree byte for byte when every traversal is ordered.
"""

from __future__ import annotations

import argparse
import hashlib
from dataclasses import dataclass

from qsynth import zx
from qsynth.circuit import basic_optimize, write_qasm
from qsynth.circuit.random import fuzz_corpus
from qsynth.device import heavy_hex_device, route
from qsynth.tableau import from_circuit, full_optimize, hopt, tmerge, to_circuit
from qsynth.tableau.optimize import phasepoly_optimize


@dataclass
class Config:
    size: int = 60
    seed: int = 2024


def digests(cfg: Config) -> dict[str, str]:
    corpus = fuzz_corpus(cfg.size, cfg.seed)
    device = heavy_hex_device(6)
    parts: dict[str, list[str]] = {k: [] for k in ("zx-diagram", "zx-circuit", "tableau", "tableau-circuit",
                                                   "tableau-full", "route")}
    for c in corpus:
        d = zx.full_reduce(zx.from_circuit(c))
        parts["zx-diagram"].append(zx.write_zx(d))
        parts["zx-circuit"].append(write_qasm(basic_optimize(zx.extract_circuit(d))))
        t = phasepoly_optimize(hopt(tmerge(from_circuit(c))))
        parts["tableau"].append(str(t))
        parts["tableau-circuit"].append(write_qasm(to_circuit(t)))
        best, history = full_optimize(from_circuit(c))
        parts["tableau-full"].append(f"{history}\n{best}")
        for objective in ("swaps", "depth"):
            for scheduler in ("heuristic", "search"):
                r = route(c, device, objective, scheduler)
                parts["route"].append(f"{write_qasm(r.mapped_circuit)}{r.final_placement}{r.inserted_swaps}")
    return {k: hashlib.sha256("\x00".join(v).encode()).hexdigest() for k, v in parts.items()}


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--size", type=int, default=Config.size)
    parser.add_argument("--seed", type=int, default=Config.seed)
    ns = parser.parse_args()
    for name, digest in digests(Config(ns.size, ns.seed)).items():
        print(f"{name:16s} {digest}")


if __name__ == "__main__":
    main()
