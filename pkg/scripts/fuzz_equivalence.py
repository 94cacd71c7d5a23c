"""Run the ZX, tableau and routing pipelines over the fuzz corpus and report fidelity and T-count."""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

from qsynth import zx
from qsynth.circuit import QuantumCircuit, basic_optimize, statistics
from qsynth.circuit.random import fuzz_corpus
from qsynth.device import heavy_hex_device, route, unmap
from qsynth.tableau import from_circuit, hopt, tmerge, to_circuit
from qsynth.tableau.optimize import phasepoly_optimize
from qsynth.tensor import equiv_up_to_global_phase, unitary_of_circuit


@dataclass
class Config:
    size: int = 200
    seed: int = 2024


def pipelines(c: QuantumCircuit) -> dict[str, QuantumCircuit]:
    return {
        "zx": basic_optimize(zx.extract_circuit(zx.full_reduce(zx.from_circuit(c)))),
        "tableau": to_circuit(phasepoly_optimize(hopt(tmerge(from_circuit(c))))),
        "route": unmap(route(c, heavy_hex_device(6))),
    }


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--size", type=int, default=Config.size)
    parser.add_argument("--seed", type=int, default=Config.seed)
    ns = parser.parse_args()
    cfg = Config(ns.size, ns.seed)
    start = time.perf_counter()
    worst = {"zx": 1.0, "tableau": 1.0, "route": 1.0}
    t_in, t_out = 0, {"zx": 0, "tableau": 0, "route": 0}
    for c in fuzz_corpus(cfg.size, cfg.seed):
        u = unitary_of_circuit(c)
        t_in += statistics(c).t_count
        for name, out in pipelines(c).items():
            worst[name] = min(worst[name], equiv_up_to_global_phase(u, unitary_of_circuit(out)).fidelity)
            t_out[name] += statistics(out).t_count
    print(f"{cfg.size} circuits, input T-count {t_in}, {time.perf_counter() - start:.1f} s")
    for name in worst:
        print(f"{name:8s} min fidelity {worst[name]:.12f}  T-count {t_out[name]}")


if __name__ == "__main__":
    main()
