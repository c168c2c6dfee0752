"""Correction-term tables for every graph file in a directory.

Prints, per graph, |H_1| and the multiset of d-values; graphs whose form is
not positive definite are skipped with a note.

    python scripts/dinv_survey.py corpus
"""

from __future__ import annotations

import argparse
from collections import Counter
from dataclasses import dataclass
from pathlib import Path

from plumbkit import PreconditionError, SearchBudgetExceeded
from plumbkit.dinv import DEFAULT_BUDGET, d_table
from plumbkit.graph import parse_graph


@dataclass
class SurveyConfig:
    directory: Path
    budget: int = DEFAULT_BUDGET


def survey(cfg: SurveyConfig):
    for path in sorted(cfg.directory.glob("*.graph")):
        try:
            table = d_table(parse_graph(path.read_text()), budget=cfg.budget)
        except (ValueError, SearchBudgetExceeded) as exc:
            kind = "skipped" if isinstance(exc, PreconditionError) else "error"
            yield path.name, f"{kind}: {exc}"
            continue
        counts = Counter(table.values())
        spectrum = " ".join(f"{v}x{n}" if n > 1 else str(v) for v, n in sorted(counts.items()))
        yield path.name, f"|H1|={len(table)} d: {spectrum}"


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("directory", type=Path)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    cfg = SurveyConfig(**vars(p.parse_args()))
    for name, line in survey(cfg):
        print(f"{name}\t{line}")


if __name__ == "__main__":
    main()
