"""Rewrite tests/golden/*.out and *.code from the current CLI.

Run from anywhere; review the diff before committing.
"""

from __future__ import annotations

import shlex
import subprocess
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
GOLDEN = ROOT / "tests" / "golden"


def cases():
    for line in (GOLDEN / "cases.tsv").read_text().splitlines():
        if line.strip() and not line.startswith("#"):
            name, args = line.split("\t", 1)
            yield name, shlex.split(args)


def run(args):
    return subprocess.run([sys.executable, "-m", "plumbkit", *args], cwd=ROOT, capture_output=True)


def main():
    for name, args in cases():
        p = run(args)
        (GOLDEN / f"{name}.out").write_bytes(p.stdout)
        (GOLDEN / f"{name}.code").write_text(f"{p.returncode}\n")
        print(f"{name}: exit {p.returncode}")


if __name__ == "__main__":
    main()
