"""Random-forest sweep: HF-hat rank from the recursion against |det M|.

    python scripts/rank_sweep.py --count 2000 --max-vertices 14 --seed 3
"""

from __future__ import annotations

import argparse
import random
import sys
import time
from dataclasses import dataclass
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "tests"))

from oracles import random_forest  # noqa: E402

from plumbkit.hf_rank import hfhat_rank  # noqa: E402
from plumbkit.lattice import intersection_form  # noqa: E402


@dataclass
class SweepConfig:
    count: int = 500
    max_vertices: int = 12
    max_weight: int = 10
    seed: int = 0


def sweep(cfg: SweepConfig) -> dict:
    rng = random.Random(cfg.seed)
    mismatches, largest = 0, 0
    start = time.perf_counter()
    for _ in range(cfg.count):
        g = random_forest(rng, cfg.max_vertices, cfg.max_weight)
        r = hfhat_rank(g, check=False).rank
        mismatches += r != abs(intersection_form(g).det)
        largest = max(largest, r)
    return {"graphs": cfg.count, "mismatches": mismatches, "largest_rank": largest,
            "seconds": round(time.perf_counter() - start, 3)}


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for name, default in vars(SweepConfig()).items():
        p.add_argument("--" + name.replace("_", "-"), type=int, default=default)
    stats = sweep(SweepConfig(**vars(p.parse_args())))
    for k, v in stats.items():
        print(f"{k}\t{v}")


if __name__ == "__main__":
    main()
