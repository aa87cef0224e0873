"""Command-line front end; all answers come from the library."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence, TextIO

from . import __version__
from .criteria import INFINITE, INFINITE_FOR_ALL, KNOWN_FINITE, UNKNOWN, OrbitVerdict, Verdict
from .criteria import orbit_symbol, orbit_verdict, pair_verdict, parse_type
from .cyclo import to_text
from .nichols import BudgetExceeded, hilbert_prefix
from .permcore import canonical_representative, centralizer, enumerate_class
from .reps import LabelError, resolve_label
from .tables import render_text, rows_to_json, table_rows
from .ydmod import braiding, build_module

SCHEMA_VERSION = "1"

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_LOOKUP = 3

UNKNOWN_TEXT = "unknown: no implemented criterion applies"


def envelope(command: str, payload: Any) -> dict[str, Any]:
    return {"schema_version": SCHEMA_VERSION, "format": "json", "command": command, "payload": payload}


# -- text renderers -------------------------------------------------------

def _step_line(k: int, step) -> str:
    if step.conclusion is not None:
        status = step.conclusion
    elif step.applies:
        status = "no conclusion"
    else:
        status = "not applicable"
    note = f" ({step.note})" if step.note else ""
    return f"  {k}. {step.rule}: {status}{note}"


def _outcome_text(v: Verdict | OrbitVerdict) -> str:
    if v.outcome == KNOWN_FINITE:
        return f"finite, dim = {v.dim} [{v.source}]"  # type: ignore[union-attr]
    if v.outcome == INFINITE:
        return "infinite"
    if v.outcome == INFINITE_FOR_ALL:
        return "infinite for every representation"
    return UNKNOWN_TEXT


def render_verdict(v: Verdict | OrbitVerdict) -> str:
    orbit = orbit_symbol(v.cycle_type)
    head = f"M({orbit}, {v.label})" if isinstance(v, Verdict) else orbit
    lines = [f"{head} in S_{v.n}, type {v.cycle_type}: {_outcome_text(v)}"]
    if v.rule:
        lines.append(f"decided by: {v.rule}")
    lines.append("trace:")
    lines.extend(_step_line(k, s) for k, s in enumerate(v.trace, 1))
    step = v.deciding_step
    if step is not None:
        for key, val in step.witness.items():
            lines.append(f"  witness {key}: {json.dumps(val, ensure_ascii=False)}")
    return "\n".join(lines) + "\n"


# -- commands -------------------------------------------------------------

def _cmd_verdict(args) -> tuple[str, Any, str]:
    v = pair_verdict(args.n, args.type, args.rep)
    return "verdict", v.to_json(), render_verdict(v)


def _cmd_orbit(args) -> tuple[str, Any, str]:
    v = orbit_verdict(args.n, args.type)
    return "orbit", v.to_json(), render_verdict(v)


def _module(args):
    t = parse_type(args.n, args.type)
    s = canonical_representative(t)
    return build_module(enumerate_class(args.n, t), s, resolve_label(args.rep, s)), t


def _cmd_braiding(args) -> tuple[str, Any, str]:
    m, t = _module(args)
    c = braiding(m)
    basis = [m.basis_label(a) for a in range(m.dim)]
    payload = {"n": args.n, "type": t.symbol(), "rep": args.rep, "dim": m.dim,
               "basis": basis, "braiding": c.to_json()}
    lines = [f"M({orbit_symbol(t)}, {args.rep}) in S_{args.n}: dim {m.dim}"]
    lines.extend(f"  e{a + 1} = {b}" for a, b in enumerate(basis))
    for entry in c.to_json():
        a, b = entry["pair"]
        terms = " + ".join(f"({coef}) e{x}⊗e{y}" for (x, y), coef in entry["image"]) or "0"
        lines.append(f"c(e{a}⊗e{b}) = {terms}")
    return "braiding", payload, "\n".join(lines) + "\n"


def _cmd_hilbert(args) -> tuple[str, Any, str]:
    m, t = _module(args)
    g = hilbert_prefix(m, args.dmax, method=args.method, budget=args.budget)
    payload = {"n": args.n, "type": t.symbol(), "rep": args.rep, "dmax": args.dmax,
               "method": args.method, "dims": list(g.dims), "exhausted": g.exhausted,
               "total": g.total}
    text = f"dims: {' '.join(map(str, g.dims))}\nexhausted: {str(g.exhausted).lower()}\n"
    if g.total is not None:
        text += f"total: {g.total}\n"
    return "hilbert", payload, text


def _cmd_table(args) -> tuple[str, Any, str]:
    rows = table_rows(args.which)
    return "table", rows_to_json(args.which, rows), render_text(rows)


def _cmd_centralizer(args) -> tuple[str, Any, str]:
    t = parse_type(args.n, args.type)
    s = canonical_representative(t)
    g = centralizer(args.n, s)
    blocks = [
        {"length": b.length, "multiplicity": b.multiplicity, "name": b.name,
         "order": b.order, "generators": [str(x) for x in b.generators]}
        for b in (g.blocks or ())
    ]
    payload = {"n": args.n, "type": t.symbol(), "representative": str(s), "order": g.order,
               "name": g.name, "blocks": blocks}
    lines = [f"centralizer of {s} in S_{args.n}: {g.name}, order {g.order}"]
    for b in blocks:
        gens = ", ".join(b["generators"]) or "-"
        lines.append(f"  {b['length']}^{b['multiplicity']}: {b['name']} (order {b['order']}) generated by {gens}")
    return "centralizer", payload, "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nichols-sn",
        description="Decide finiteness of Nichols algebras over symmetric groups.")
    parser.add_argument("--version", action="version", version=__version__)
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json"), default="text")
    cls = argparse.ArgumentParser(add_help=False)
    cls.add_argument("-n", type=int, required=True, help="degree of the symmetric group")
    cls.add_argument("-t", "--type", required=True, help='cycle type, e.g. "2^2 3" (fixed points implied)')
    rep = argparse.ArgumentParser(add_help=False)
    rep.add_argument("-r", "--rep", required=True,
                     help="representation label: eps, sgn, chiJ^K, d4:..., or a*b per block")

    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("verdict", parents=[fmt, cls, rep], help="verdict for a pair (class, rep)")
    p.set_defaults(func=_cmd_verdict)
    p = sub.add_parser("orbit", parents=[fmt, cls], help="verdict for a class and every rep")
    p.set_defaults(func=_cmd_orbit)
    p = sub.add_parser("braiding", parents=[fmt, cls, rep], help="dump the braiding of M(C, rho)")
    p.set_defaults(func=_cmd_braiding)
    p = sub.add_parser("hilbert", parents=[fmt, cls, rep], help="graded dimensions of B(V)")
    p.add_argument("--dmax", type=int, default=3)
    p.add_argument("--budget", type=int, default=None,
                   help="max basis tensors per degree (default 10^6 or $NICHOLS_SN_BUDGET)")
    p.add_argument("--method", choices=("sparse", "dense"), default="sparse")
    p.set_defaults(func=_cmd_hilbert)
    p = sub.add_parser("table", parents=[fmt], help="recompute the S3 or S4 table")
    p.add_argument("which", choices=("s3", "s4"))
    p.set_defaults(func=_cmd_table)
    p = sub.add_parser("centralizer", parents=[fmt, cls], help="centralizer of the class representative")
    p.set_defaults(func=_cmd_centralizer)
    return parser


def run(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        command, payload, text = args.func(args)
    except (LabelError, BudgetExceeded) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_LOOKUP
    except ValueError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE
    if args.format == "json":
        out.write(json.dumps(envelope(command, payload), ensure_ascii=False, indent=2) + "\n")
    else:
        out.write(text)
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
