"""
Geninv command line.

Usage:
  python -m engine.cli.main compute   --ring m2q --element '[["2","-2"],["0","0"]]' --inverse moore-penrose
  python -m engine.cli.main enumerate --ring zn:6 --element 2 --equations 1
  python -m engine.cli.main prescribe --ring m2f5 --element '[["0","1"],["0","0"]]' \
        --constraints '{"S": {"colspace": [["0","1"]]}, "T": {"colspace": [["0","1"]]}}' --mode outer
  python -m engine.cli.main verify    --ring zn:6 --theorems all
  python -m engine.cli.main catalog
  python -m engine.cli.main --job - < job.json

JSON goes to stdout, a `summary key=value ...` line and log records to stderr.

Exit codes:
  0 found / all pass    1 no inverse        2 counterexample     3 budget exceeded
  64 usage or malformed input                65 unsupported involution
  66 not enumerable / undecidable            70 internal verification failure
  130 interrupted
"""

from __future__ import annotations

import argparse
import logging
import sys
import time
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, ValidationError

from engine.cli.codec import (
    decode_constraints,
    decode_element,
    decode_equations,
    decode_ring,
    dumps,
    encode_report,
    load_json,
)
from engine.config import get_settings, load_settings, set_settings
from engine.errors import (
    GeninvError,
    InternalVerificationError,
    NotEnumerableError,
    UndecidableError,
    UnsupportedInvolutionError,
)
from engine.inverses.bc import BCFlavor, bc_inverse
from engine.inverses.classic import (
    core_inverse,
    drazin_inverse,
    dual_core_inverse,
    group_inverse,
    inner_inverse,
    moore_penrose,
    projector_data,
    reflexive_inverse,
    two_sided_inverse,
)
from engine.inverses.equations import (
    EQ1,
    EQ12,
    EquationSet,
    count_inverse_set,
    enumerate_inverse_set,
    satisfied_equations,
)
from engine.inverses.pq import PQFlavor, pq_inverse
from engine.inverses.prescribed import Mode, prescribe
from engine.inverses.report import InverseReport
from engine.inverses.special import weighted
from engine.oracle import CATALOG, resolve_theorems, verify_many
from engine.runtime.verify_status import snapshot
from engine.utils import setup_logging, version, write

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NONE = 1
EXIT_COUNTEREXAMPLE = 2
EXIT_BUDGET = 3
EXIT_USAGE = 64
EXIT_INVOLUTION = 65
EXIT_NOT_ENUMERABLE = 66
EXIT_INTERNAL = 70
EXIT_INTERRUPTED = 130

WEIGHTED = ("ef-mp", "e-core", "f-dual-core", "w-core", "v-dual-core", "right-w-core", "left-v-dual-core")
INVERSES = (
    "inner",
    "reflexive",
    "inverse",
    "group",
    "drazin",
    "moore-penrose",
    "core",
    "dual-core",
    *WEIGHTED,
    "bc",
    "pq",
    "bott-duffin",
)
MODES = {"one": "inner", "outer": "outer", "reflexive": "reflexive"}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse exits with 2 on bad usage; usage errors here map to 64."""

    def error(self, message: str):
        raise UsageError(message)


class JobSpec(BaseModel):
    """A job read with --job; the same fields as the subcommand flags."""

    model_config = ConfigDict(extra="forbid")

    command: str
    ring: Optional[Any] = None
    element: Optional[Any] = None
    options: Dict[str, Any] = {}


# computation


def _family(kind: str, a, x, eqs: EquationSet) -> InverseReport:
    """Inner and reflexive inverses are not unique: one witness plus the members on finite rings."""
    if x is None:
        return InverseReport.none(kind, a, f"a{eqs} is empty")
    try:
        members = enumerate_inverse_set(a, eqs) if a.ring.is_finite else None
    except NotEnumerableError:
        members = None
    return InverseReport(
        kind=kind,
        subject=a,
        status="family",
        element=x,
        members=members,
        family=f"a{eqs}",
        satisfied=satisfied_equations(a, x),
        projector_data=projector_data(a, x),
    )


def _need(args, name: str):
    value = getattr(args, name, None)
    if value is None:
        raise UsageError(f"--inverse {args.inverse} needs --{name}")
    return value


def compute(args) -> InverseReport:
    ring = decode_ring(args.ring)
    a = decode_element(ring, args.element)
    kind = args.inverse
    el = lambda name: decode_element(ring, _need(args, name))  # noqa: E731
    if kind == "inner":
        return _family("inner", a, inner_inverse(a), EQ1)
    if kind == "reflexive":
        return _family("reflexive", a, reflexive_inverse(a), EQ12)
    if kind == "inverse":
        return two_sided_inverse(a)
    if kind == "group":
        return group_inverse(a)
    if kind == "drazin":
        return drazin_inverse(a)
    if kind == "moore-penrose":
        return moore_penrose(a)
    if kind == "core":
        return core_inverse(a)
    if kind == "dual-core":
        return dual_core_inverse(a)
    if kind in WEIGHTED:
        weights = [decode_element(ring, w) for w in (args.weight or [])]
        if not weights:
            raise UsageError(f"--inverse {kind} needs --weight")
        if len(weights) > (2 if kind == "ef-mp" else 1):
            raise UsageError(f"too many weights for {kind}")
        return weighted(kind, a, *weights)
    if kind == "bc":
        return bc_inverse(a, el("b"), el("c"), BCFlavor(args.flavor or BCFlavor.FULL.value))
    if kind == "pq":
        q = decode_element(ring, args.q) if args.q is not None else None
        return pq_inverse(a, el("p"), q, PQFlavor(args.flavor or PQFlavor.DJORDJEVIC_WEI.value))
    if kind == "bott-duffin":
        q = decode_element(ring, args.q) if args.q is not None else None
        return pq_inverse(a, el("p"), q, PQFlavor.BOTT_DUFFIN)
    raise UsageError(f"unknown inverse {kind!r}; expected one of {', '.join(INVERSES)}")


def _emit(obj: Any) -> None:
    sys.stdout.write(dumps(obj) + "\n")
    sys.stdout.flush()


def _summary(**fields: Any) -> None:
    write("summary " + " ".join(f"{k}={v}" for k, v in fields.items()), style="muted")


def cmd_compute(args) -> int:
    t0 = time.monotonic()
    rep = compute(args)
    out = encode_report(rep)
    if args.timings:
        out["elapsed"] = round(time.monotonic() - t0, 3)
    _emit(out)
    _summary(command="compute", inverse=args.inverse, status=rep.status)
    return EXIT_OK if rep.found else EXIT_NONE


def cmd_enumerate(args) -> int:
    t0 = time.monotonic()
    ring = decode_ring(args.ring)
    a = decode_element(ring, args.element)
    eqs = decode_equations(args.equations)
    if eqs.needs_involution:
        ring.require_involution(f"equations {eqs}")
    if not ring.is_finite:
        raise NotEnumerableError(f"{ring.label} is infinite and cannot be enumerated")
    if args.count_only:
        count = count_inverse_set(a, eqs)
        out: Dict[str, Any] = {"equations": eqs.render(), "count": count}
    else:
        members = enumerate_inverse_set(a, eqs)
        count = len(members)
        out = {"equations": eqs.render(), "count": count, "members": [ring.render(x) for x in members]}
    if args.timings:
        out["elapsed"] = round(time.monotonic() - t0, 3)
    _emit(out)
    _summary(command="enumerate", ring=ring.label, equations=eqs.render(), count=count)
    return EXIT_OK


def cmd_prescribe(args) -> int:
    t0 = time.monotonic()
    ring = decode_ring(args.ring)
    a = decode_element(ring, args.element)
    kind = MODES[args.mode]
    c = decode_constraints(ring, args.constraints, Mode.INNER if kind == "inner" else Mode.OUTER)
    rep = prescribe(a, c, kind)
    out = encode_report(rep)
    if args.timings:
        out["elapsed"] = round(time.monotonic() - t0, 3)
    _emit(out)
    _summary(command="prescribe", mode=args.mode, shape=c.shape.value, status=rep.status)
    return EXIT_OK if rep.found else EXIT_NONE


def cmd_verify(args) -> int:
    ring = decode_ring(args.ring)
    try:
        ids = resolve_theorems(args.theorems)
    except GeninvError as e:
        raise UsageError(f"{e}; catalog: {', '.join(CATALOG)}") from e
    reports = verify_many(ids, ring, args.max_cases, args.max_seconds, args.threads)
    exclude = None if args.timings else {"elapsed"}
    _emit([r.model_dump(exclude=exclude) for r in reports])
    counts = {s: sum(1 for r in reports if r.status == s) for s in ("pass", "fail", "skipped", "incomplete")}
    _summary(command="verify", ring=ring.label, theorems=len(reports), **counts)
    if args.verbose:
        for key, rec in sorted(snapshot().items()):
            log.debug("status %s: %s (%d cases)", key, rec["status"], rec["cases"])
    if counts["fail"]:
        for r in reports:
            if r.status == "fail":
                write(f"counterexample for {r.theorem}: {r.counterexample}", style="error")
        return EXIT_COUNTEREXAMPLE
    if counts["incomplete"]:
        return EXIT_BUDGET
    return EXIT_OK


def cmd_catalog(args) -> int:
    _emit([entry.summary() for entry in CATALOG.values()])
    _summary(command="catalog", theorems=len(CATALOG))
    return EXIT_OK


COMMANDS = {
    "compute": cmd_compute,
    "enumerate": cmd_enumerate,
    "prescribe": cmd_prescribe,
    "verify": cmd_verify,
    "catalog": cmd_catalog,
}


# argument parsing


def _common(p: argparse.ArgumentParser, ring: bool = True) -> None:
    if ring:
        p.add_argument("--ring", required=True, help="Ring spec JSON or shorthand (zn:6, m2f2, m2q, m2f5)")
    p.add_argument("--verbose", action="store_true", help="Debug logging on stderr")
    p.add_argument("--timings", action="store_true", help="Add elapsed seconds to the JSON output")
    p.add_argument("--max-size", dest="max_size", type=int, default=None, help="Matrix size cap for enumeration")
    p.add_argument("--threads", type=int, default=None, help="Worker threads (default: GENINV_THREADS or 1)")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="geninv", description="Exact generalized inverses in rings")
    p.add_argument("--version", action="version", version=f"geninv {version}")
    p.add_argument("--job", default=None, help="Read a JSON job from a file, or '-' for stdin")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    c = sub.add_parser("compute", help="Compute a named inverse")
    _common(c)
    c.add_argument("--element", required=True, help="Element (JSON or residue)")
    c.add_argument("--inverse", required=True, choices=INVERSES)
    c.add_argument("--weight", action="append", default=None, help="Weight e/f/w/v (repeat for ef-mp)")
    c.add_argument("--b", default=None)
    c.add_argument("--c", default=None)
    c.add_argument("--p", default=None)
    c.add_argument("--q", default=None)
    c.add_argument("--flavor", default=None, help="bc: full|right_hybrid|left_hybrid|annihilator; pq: djordjevic_wei|image_kernel|bott_duffin")

    e = sub.add_parser("enumerate", help="Enumerate an inverse set on a finite ring")
    _common(e)
    e.add_argument("--element", required=True)
    e.add_argument("--equations", required=True, help='Equation list, e.g. "1,2" or "2,5,1^2"')
    e.add_argument("--count-only", dest="count_only", action="store_true")

    r = sub.add_parser("prescribe", help="Inverses with prescribed ideals")
    _common(r)
    r.add_argument("--element", required=True)
    r.add_argument("--constraints", required=True, help="JSON object keyed by S, T, S', T' (or right_prin, ...)")
    r.add_argument("--mode", choices=tuple(MODES), default="outer")

    v = sub.add_parser("verify", help="Run catalog theorems on a ring")
    _common(v)
    v.add_argument("--theorems", default="all", help="'all' or a comma list of ids")
    v.add_argument("--max-cases", dest="max_cases", type=int, default=None)
    v.add_argument("--max-seconds", dest="max_seconds", type=float, default=None)

    k = sub.add_parser("catalog", help="List the theorem catalog")
    _common(k, ring=False)
    return p


def _job_argv(text: str) -> List[str]:
    """Translate a JSON job into subcommand arguments."""
    try:
        job = JobSpec.model_validate(load_json(text, "job"))
    except ValidationError as e:
        raise UsageError(f"malformed job: {e.errors()[0]['msg']}") from e
    argv = [job.command]
    if job.ring is not None:
        argv += ["--ring", job.ring if isinstance(job.ring, str) else dumps(job.ring)]
    if job.element is not None:
        argv += ["--element", dumps(job.element)]
    for key, value in job.options.items():
        flag = "--" + key.replace("_", "-")
        if value is True:
            argv.append(flag)
        elif value is False or value is None:
            continue
        elif isinstance(value, list) and key == "weight":
            for w in value:
                argv += [flag, dumps(w)]
        else:
            argv += [flag, value if isinstance(value, str) else dumps(value)]
    return argv


def _parse(argv: Optional[List[str]]):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.job is not None:
        text = sys.stdin.read() if args.job == "-" else open(args.job, encoding="utf-8").read()
        args = parser.parse_args(_job_argv(text))
    if args.command is None:
        raise UsageError("a command is required: " + ", ".join(COMMANDS))
    return args


def _configure(args) -> None:
    overrides: Dict[str, Any] = {"threads": args.threads}
    if args.max_size is not None:
        overrides.update(max_q_size=args.max_size, max_fp_size=args.max_size)
    base = get_settings().model_dump()
    base.update({k: v for k, v in overrides.items() if v is not None})
    set_settings(load_settings(**base))


def main(argv: Optional[List[str]] = None) -> int:
    try:
        args = _parse(argv)
    except UsageError as e:
        write(f"usage error: {e}", style="error")
        return EXIT_USAGE
    setup_logging(args.verbose)
    try:
        _configure(args)
        return COMMANDS[args.command](args)
    except UsageError as e:
        write(f"usage error: {e}", style="error")
        return EXIT_USAGE
    except UnsupportedInvolutionError as e:
        write(f"error: {e}", style="error")
        return EXIT_INVOLUTION
    except (NotEnumerableError, UndecidableError) as e:
        write(f"error: {e}", style="error")
        return EXIT_NOT_ENUMERABLE
    except InternalVerificationError as e:
        log.exception("internal verification failed")
        write(f"internal error: {e}", style="error")
        return EXIT_INTERNAL
    except (ValidationError, ValueError) as e:
        # StructuralError, PreconditionError and pydantic validation land here
        write(f"error: {e}", style="error")
        return EXIT_USAGE


if __name__ == "__main__":
    try:
        sys.exit(main())
    except KeyboardInterrupt:
        write("Interrupted.", style="error")
        sys.exit(EXIT_INTERRUPTED)
