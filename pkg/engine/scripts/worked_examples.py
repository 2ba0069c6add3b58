"""
Worked-example smoke CLI (no verification catalog)

Usage:
  python -m engine.scripts.worked_examples
  python -m engine.scripts.worked_examples --only rational

Recomputes the reference examples and compares them with the expected values:
  rational  the 2x2 rational matrix [[2,-2],[0,0]]: group, Moore-Penrose, core and dual core inverses
  f5        E12 over F5: |a{1}| = 125, |a{1,2}| = 25, prescribed outer and reflexive inverses equal E21
  f2        [[1,1],[0,0]] over F2 has no Moore-Penrose inverse

Exit code:
  0 when every value matches, 1 otherwise.
"""

from __future__ import annotations

import argparse
import sys
import time
from typing import Callable, Dict, List, Tuple

from engine.ideals.lattice import subspace_ideal
from engine.inverses.classic import core_inverse, drazin_inverse, dual_core_inverse, group_inverse, moore_penrose
from engine.inverses.equations import EQ1, EQ12, count_inverse_set
from engine.inverses.prescribed import IdealConstraints, Mode, prescribe
from engine.ring.core import ring_for
from engine.utils import write

Check = Tuple[str, Callable[[], object], object]


def _rational() -> List[Check]:
    ring = ring_for("m2q")
    a = ring.element([["2", "-2"], ["0", "0"]])
    e12 = ring.unit_matrix(1, 2)

    def result(fn):
        return lambda: ring.render(fn(a).element)

    return [
        ("group", result(group_inverse), [["1/2", "-1/2"], ["0", "0"]]),
        ("moore-penrose", result(moore_penrose), [["1/4", "0"], ["-1/4", "0"]]),
        ("core", result(core_inverse), [["1/2", "0"], ["0", "0"]]),
        ("dual-core", result(dual_core_inverse), [["1/4", "-1/4"], ["-1/4", "1/4"]]),
        ("drazin E12", lambda: (ring.render(drazin_inverse(e12).element), drazin_inverse(e12).index), ([["0", "0"], ["0", "0"]], 2)),
    ]


def _f5() -> List[Check]:
    ring = ring_for("m2f5")
    a = ring.unit_matrix(1, 2)
    S = subspace_ideal(ring, "right", [["0", "1"]])
    c = IdealConstraints(right_prin=S, right_ann=S, mode=Mode.OUTER)
    e21 = ring.render(ring.unit_matrix(2, 1))
    return [
        ("|a{1}|", lambda: count_inverse_set(a, EQ1), 125),
        ("|a{1,2}|", lambda: count_inverse_set(a, EQ12), 25),
        ("outer S,T", lambda: ring.render(prescribe(a, c, "outer").element), e21),
        ("reflexive S,T", lambda: ring.render(prescribe(a, c, "reflexive").element), e21),
    ]


def _f2() -> List[Check]:
    ring = ring_for("m2f2")
    a = ring.element([["1", "1"], ["0", "0"]])
    return [("moore-penrose", lambda: moore_penrose(a).status, "none")]


GROUPS: Dict[str, Callable[[], List[Check]]] = {"rational": _rational, "f5": _f5, "f2": _f2}


def main(argv: List[str] | None = None) -> int:
    p = argparse.ArgumentParser(description="Worked-example smoke CLI")
    p.add_argument("--only", choices=tuple(GROUPS), default=None, help="Run a single example group")
    args = p.parse_args(argv)

    names = [args.only] if args.only else list(GROUPS)
    failures = 0
    total = 0
    t0 = time.time()
    for name in names:
        write(name, style="header")
        for label, fn, expected in GROUPS[name]():
            total += 1
            got = fn()
            if got == expected:
                write(f"  ok   {label}: {got}", style="success")
            else:
                failures += 1
                write(f"  FAIL {label}: got {got}, expected {expected}", style="error")
    dt = time.time() - t0
    write(f"summary groups={len(names)} checks={total} failures={failures} in {dt:.2f}s", style="muted")
    return 1 if failures else 0


if __name__ == "__main__":
    try:
        sys.exit(main())
    except KeyboardInterrupt:
        print("Interrupted.")
        sys.exit(130)
