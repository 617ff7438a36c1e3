"""Command-line interface: ``edgecert <subcommand> ...``."""

from __future__ import annotations

import argparse
import sys
from typing import List, Optional, TextIO

import numpy as np

from .certify import certify, fmt, render_machine, render_table
from .constructions import build_B1, build_H1, build_Ht
from .cuts import brute_force_min_cut, edge_connectivity
from .enumeration import (
    EnumSpec,
    VerificationReport,
    verify_observation_2_1,
    verify_smallest_claims,
    verify_theorem_1_4,
    verify_theorem_1_5,
)
from .errors import BadTError, EdgeCertError
from .multigraph import dumps, read
from .partition import (
    check_interlacing,
    equitable_containment,
    is_equitable,
    parse_partition,
    quotient_eigs,
    quotient_matrix,
)
from .spectral import spectrum

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_VIOLATION = 0, 1, 2, 3

GRAMMAR = """\
usage:
  edgecert gen (h1|ht|b1) --d <int> [--t <int>] [--out <path>]
  edgecert spectrum <file>
  edgecert cut <file> [--brute]
  edgecert certify <file> [--actual] [--with-conjecture] [--machine]
  edgecert quotient <file> --partition <spec>
  edgecert verify --d <int> --max-n <int> [--theorems <list>] [--machine]

theorem names for verify: 1.4, 1.5, obs2.1, smallest (default 1.4,1.5)
partition spec: blocks separated by '|', vertices by ',', e.g. 0,1,2|3,4,5
"""

ZERO_SNAP = 1e-12
THEOREMS = ("1.4", "1.5", "obs2.1", "smallest")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _parser() -> argparse.ArgumentParser:
    p = _Parser(prog="edgecert", add_help=False)
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    g = sub.add_parser("gen", add_help=False)
    g.add_argument("family", choices=("h1", "ht", "b1"))
    g.add_argument("--d", type=int, required=True)
    g.add_argument("--t", type=int)
    g.add_argument("--out")

    s = sub.add_parser("spectrum", add_help=False)
    s.add_argument("file")

    c = sub.add_parser("cut", add_help=False)
    c.add_argument("file")
    c.add_argument("--brute", action="store_true")

    ce = sub.add_parser("certify", add_help=False)
    ce.add_argument("file")
    ce.add_argument("--actual", action="store_true")
    ce.add_argument("--with-conjecture", action="store_true")
    ce.add_argument("--machine", action="store_true")

    q = sub.add_parser("quotient", add_help=False)
    q.add_argument("file")
    q.add_argument("--partition", required=True)

    v = sub.add_parser("verify", add_help=False)
    v.add_argument("--d", type=int, required=True)
    v.add_argument("--max-n", type=int, required=True)
    v.add_argument("--theorems", default="1.4,1.5")
    v.add_argument("--machine", action="store_true")
    return p


def _values(xs) -> str:
    # rounding residue around zero would otherwise print as e.g. -1.5e-16
    return " ".join(fmt(0.0 if abs(x) < ZERO_SNAP else float(x)) for x in xs)


def _gen(args, out: TextIO) -> int:
    if args.family == "ht":
        if args.t is None:
            raise UsageError("gen ht needs --t")
        g = build_Ht(args.d, args.t)
    else:
        if args.t is not None:
            raise UsageError(f"gen {args.family} takes no --t")
        g = (build_H1 if args.family == "h1" else build_B1)(args.d)
    text = dumps(g)
    if args.out:
        with open(args.out, "w", encoding="ascii", newline="\n") as fh:
            fh.write(text)
    else:
        out.write(text)
    return EXIT_OK


def _spectrum(args, out: TextIO) -> int:
    sp = spectrum(read(args.file))
    out.write(f"adjacency {_values(sp.adjacency_eigs)}\n")
    out.write(f"laplacian {_values(sp.laplacian_eigs)}\n")
    if len(sp.adjacency_eigs) >= 2:
        out.write(f"lambda2 {fmt(sp.lam(2))}\n")
        out.write(f"mu2 {fmt(sp.mu(2))}\n")
    return EXIT_OK


def _cut(args, out: TextIO) -> int:
    g = read(args.file)
    res = (brute_force_min_cut if args.brute else edge_connectivity)(g)
    w = res.witness
    out.write(f"edge_connectivity {res.value}\n")
    out.write(f"side {','.join(map(str, w.side))}\n")
    out.write(f"sizes {w.a} {w.b}\n")
    return EXIT_OK


def _certify(args, out: TextIO) -> int:
    cert = certify(read(args.file), compute_actual=args.actual,
                   with_conjecture=args.with_conjecture)
    out.write(render_machine(cert) if args.machine else render_table(cert))
    return EXIT_VIOLATION if cert.sound is False else EXIT_OK


def _quotient(args, out: TextIO) -> int:
    g = read(args.file)
    p = parse_partition(args.partition)
    q = quotient_matrix(g, p)
    qe = quotient_eigs(q)
    ge = spectrum(g).adjacency_eigs
    out.write(f"partition {p}\n")
    for row in np.asarray(q.matrix):
        out.write(f"row {_values(row)}\n")
    out.write(f"eigenvalues {_values(qe)}\n")
    equitable = is_equitable(g, p)
    out.write(f"equitable {int(equitable)}\n")
    interlaces = check_interlacing(ge, qe)
    out.write(f"interlacing {int(interlaces)}\n")
    ok = interlaces
    if equitable:
        contained = equitable_containment(ge, qe)
        out.write(f"contained {int(contained)}\n")
        ok = ok and contained
    return EXIT_OK if ok else EXIT_VIOLATION


def _verify(args, out: TextIO) -> int:
    names = [s.strip() for s in args.theorems.split(",") if s.strip()]
    unknown = [s for s in names if s not in THEOREMS]
    if unknown or not names:
        raise UsageError(f"unknown theorem name(s): {','.join(unknown) or '(none)'}")
    spec = EnumSpec(args.d, args.max_n)
    report = VerificationReport()
    for name in names:
        if name == "1.4":
            part = verify_theorem_1_4(spec)
        elif name == "1.5":
            if args.d < 3:
                raise BadTError(f"no t with 2 <= t <= d - 1 for d={args.d}")
            part = verify_theorem_1_5(spec, args.d - 1)
        elif name == "obs2.1":
            part = verify_observation_2_1(args.d)
        else:
            part = verify_smallest_claims(args.d)
        report = report.merge(part)
    out.write(report.render_machine() if args.machine else report.render_text())
    return EXIT_OK if report.violations == 0 else EXIT_VIOLATION


_HANDLERS = {
    "gen": _gen,
    "spectrum": _spectrum,
    "cut": _cut,
    "certify": _certify,
    "quotient": _quotient,
    "verify": _verify,
}


def run(argv: List[str], out: Optional[TextIO] = None, err: Optional[TextIO] = None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    try:
        args = _parser().parse_args(argv)
        if args.command is None:
            raise UsageError("missing subcommand")
        return _HANDLERS[args.command](args, out)
    except UsageError as exc:
        err.write(f"edgecert: {exc}\n{GRAMMAR}")
        return EXIT_USAGE
    except (EdgeCertError, OSError) as exc:
        err.write(f"edgecert: {type(exc).__name__}: {exc}\n")
        return EXIT_DOMAIN


def main() -> None:
    sys.exit(run(sys.argv[1:]))
