"""Check that the E(2g) relation word acts trivially on H_1, for a range of genera,
and report the action of the half word and of a single period."""

from __future__ import annotations

import argparse
import time

from plumbkit import lefschetz as lf


def order_of(m, limit: int = 12) -> int | None:
    n = len(m)
    ident = [[int(i == j) for j in range(n)] for i in range(n)]
    p = ident
    for k in range(1, limit + 1):
        p = lf.la.matmul(m, p)
        if p == ident:
            return k
    return None


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-genus", type=int, default=8)
    args = p.parse_args()
    print("genus\tlength\tidentity\thalf_word_order\tseconds")
    for g in range(2, args.max_genus + 1):
        start = time.perf_counter()
        w = lf.e2g_word(g)
        ident = lf.word_action(w) == [[int(i == j) for j in range(2 * g)] for i in range(2 * g)]
        half = lf.word_action(lf.word_from_names(g, lf.e2g_half(g)))
        print(f"{g}\t{len(w)}\t{str(ident).lower()}\t{order_of(half)}\t{time.perf_counter() - start:.3f}")


if __name__ == "__main__":
    main()
