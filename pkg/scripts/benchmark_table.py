"""T-count, two-qubit count and runtime of the ZX and tableau routes on the bundled benchmarks."""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass
from importlib import resources

from qsynth import zx
from qsynth.circuit import basic_optimize, decompose_multi_controlled, parse_qasm, statistics
from qsynth.tableau import from_circuit, full_optimize, to_circuit


@dataclass
class Config:
    max_rounds: int = 20


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-rounds", type=int, default=Config.max_rounds)
    cfg = Config(parser.parse_args().max_rounds)
    print(f"{'benchmark':12s} {'n':>2s} {'T in':>5s} {'T zx':>5s} {'T tabl':>6s} "
          f"{'2q zx':>5s} {'2q tabl':>7s} {'s zx':>6s} {'s tabl':>6s}")
    bench = resources.files("qsynth").joinpath("data", "benchmarks")
    for path in sorted(bench.iterdir(), key=str):
        c = decompose_multi_controlled(parse_qasm(path.read_text()))
        t0 = time.perf_counter()
        a = basic_optimize(zx.extract_circuit(zx.full_reduce(zx.from_circuit(c))))
        t1 = time.perf_counter()
        b = basic_optimize(to_circuit(full_optimize(from_circuit(c), cfg.max_rounds)[0]))
        t2 = time.perf_counter()
        sa, sb = statistics(a), statistics(b)
        print(f"{path.name[:-5]:12s} {c.n_qubits:2d} {statistics(c).t_count:5d} {sa.t_count:5d} {sb.t_count:6d} "
              f"{sa.two_qubit_count:5d} {sb.two_qubit_count:7d} {t1 - t0:6.2f} {t2 - t1:6.2f}")


if __name__ == "__main__":
    main()
