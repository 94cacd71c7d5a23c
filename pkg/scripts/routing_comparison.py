"""Compare router objectives, schedulers and placements on the bundled benchmarks and devices."""

from __future__ import annotations

import argparse
import itertools
from dataclasses import dataclass
from importlib import resources

from qsynth.circuit import decompose_multi_controlled, parse_qasm
from qsynth.device import heavy_hex_device, parse_device, route, validate_mapping


@dataclass
class Config:
    decompose_swaps: bool = False


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--decompose-swaps", action="store_true")
    cfg = Config(parser.parse_args().decompose_swaps)
    data = resources.files("qsynth").joinpath("data")
    devices = [parse_device(p.read_text()) for p in sorted(data.joinpath("devices").iterdir(), key=str)]
    devices.append(heavy_hex_device(27))
    print(f"{'benchmark':12s} {'device':10s} {'objective':9s} {'scheduler':9s} {'placement':9s} "
          f"{'swaps':>5s} {'depth':>5s} {'delay':>5s}")
    for path in sorted(data.joinpath("benchmarks").iterdir(), key=str):
        c = decompose_multi_controlled(parse_qasm(path.read_text()))
        for d in devices:
            if d.n_physical < c.n_qubits:
                continue
            for objective, scheduler, placement in itertools.product(
                    ("swaps", "depth"), ("heuristic", "search"), ("identity", "greedy")):
                r = route(c, d, objective, scheduler, placement=placement, decompose_swaps=cfg.decompose_swaps)
                assert validate_mapping(r, d)
                print(f"{path.name[:-5]:12s} {d.name:10s} {objective:9s} {scheduler:9s} {placement:9s} "
                      f"{r.swap_count:5d} {r.mapped_depth:5d} {r.mapped_delay:5d}")


if __name__ == "__main__":
    main()
