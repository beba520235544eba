"""Command-line front end: ``python -m ballotperm VERB [options]``.

Exit status is 0 on success, 1 on a domain error (or a failed verification)
and 2 on a usage error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from collections import Counter
from typing import Callable, Optional

from . import boxperm, clusters, patterns, walks
from .dyck import Psi, Psi_inv
from .perms import (CLASSES, count_class, cycle_decompose, format_cycles, format_permutation,
                    parse_cycles, parse_permutation)
from .series import b_numbers, counts_by_order
from .verify import SUITES, verify_suite

FORMATS = ("json", "csv", "oeis", "text")


# -- sequences -------------------------------------------------------------

def _pattern_seq(p: tuple[int, ...]) -> Callable[[int], int]:
    return lambda n: patterns.avoid_count("ballot", n, p)


# id -> (first index, term function, description); OEIS ids for orientation only
SEQUENCES: dict[str, tuple[int, Callable[[int], int], str]] = {
    "ballot": (0, lambda n: b_numbers(n)[n], "ballot permutations (A000246 at even n)"),
    "odd_order": (0, lambda n: count_class("odd_order", n), "odd order permutations, by enumeration"),
    "ballot123": (1, _pattern_seq((1, 2, 3)), "123-avoiding ballot permutations (A208355)"),
    "ballot321": (1, _pattern_seq((3, 2, 1)), "321-avoiding ballot permutations (A071724)"),
    "ballot132": (1, _pattern_seq((1, 3, 2)), "132-avoiding ballot permutations (A005817)"),
    "ballot231": (1, _pattern_seq((2, 3, 1)), "231-avoiding ballot permutations (A005817)"),
    "ballot213": (1, _pattern_seq((2, 1, 3)), "213-avoiding ballot permutations (A151396)"),
    "ballot312": (1, _pattern_seq((3, 1, 2)), "312-avoiding ballot permutations (A151396)"),
    "gessel": (0, walks.gessel_closed_form, "2n-step Gessel excursions (A135404)"),
    "dyck213": (0, lambda n: patterns.avoid_count("dyck", 2 * n + 1, (2, 1, 3)),
                "213-avoiding Dyck permutations of length 2n+1"),
    "gb_axis": (0, lambda n: walks.axis_total("gb", n), "n-step GB walks from the origin to the x-axis (A005817)"),
    "wlpp": (0, lambda n: sum(counts_by_order(n)[n]), "well-labelled positive paths of size n"),
}


# -- helpers ---------------------------------------------------------------

def _point(text: str) -> tuple[int, int]:
    try:
        x, y = (int(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a point 'x,y', got {text!r}") from None
    return x, y


def _pattern(text: str) -> tuple[int, ...]:
    digits = text.replace(",", " ").split()
    if len(digits) == 1:
        digits = list(digits[0])
    try:
        return parse_permutation(" ".join(digits))
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def _parse_any_perm(text: str):
    """Cycle text if it has parentheses, otherwise one-line notation."""
    return parse_cycles(text) if "(" in text else cycle_decompose(parse_permutation(text))


# -- verbs -----------------------------------------------------------------
# each returns (rows, key for oeis output, text rendering)

def cmd_count(a):
    if a.cls in ("wlpp", "ocp"):
        if a.by == "horizontal":
            if a.cls == "ocp":
                raise ValueError("--by horizontal applies to wlpp only")
            if a.method == "formula":
                table = {k: clusters.count_wlpp_horizontal(a.n, k) for k in range(a.n)}
            else:
                table = Counter(w.horizontal_steps for w in clusters.enumerate_wlpp(a.n))
        elif a.method == "formula":
            table = dict(enumerate(counts_by_order(a.n)[a.n]))
        else:
            items = clusters.enumerate_wlpp(a.n) if a.cls == "wlpp" else clusters.enumerate_ocp(a.n)
            table = Counter(x.order for x in items)
        if a.by is None:
            rows = [{"class": a.cls, "n": a.n, "count": sum(table.values())}]
        else:
            rows = [{"n": a.n, "k": k, "count": c} for k, c in sorted(table.items()) if c]
    else:
        if a.by is not None:
            raise ValueError("--by applies to wlpp and ocp only")
        if a.method == "formula":
            if a.cls not in ("ballot", "odd_order") or a.pattern:
                raise ValueError("--method formula is available for ballot and odd_order without a pattern")
            value = b_numbers(a.n)[a.n]
        else:
            value = count_class(a.cls, a.n, pattern=a.pattern, h=a.h, b=a.b)
        row = {"class": a.cls, "n": a.n, "count": value}
        if a.pattern:
            row["pattern"] = "".join(map(str, a.pattern))
        if a.cls == "hb_ballot":
            row.update(h=a.h, b=a.b)
        rows = [row]
    return rows, "count", "\n".join(str(r["count"]) for r in rows)


def cmd_map(a):
    name, text = a.bijection, a.input
    if name == "Psi":
        out = format_permutation(Psi_inv(_parse_any_perm(text))) if a.inverse \
            else format_cycles(Psi(parse_permutation(text)))
    elif name == "Phi":
        out = str(clusters.Phi_inv(clusters.parse_ocp(text))) if a.inverse \
            else str(clusters.Phi(clusters.parse_cluster_perm(text)))
    elif name == "psi":
        out = boxperm.format_box_word(boxperm.psi_inv(boxperm.parse_box_cycles(text))) if a.inverse \
            else boxperm.format_box_cycles(boxperm.psi(boxperm.parse_box_word(text)))
    elif name == "phi":
        f = boxperm.phi_inv if a.inverse else boxperm.phi
        out = boxperm.format_box_word(f(boxperm.parse_box_word(text)))
    else:
        if a.inverse:
            raise ValueError(f"{name} has no inverse here")
        out = format_permutation(patterns.wilf_map(name, parse_permutation(text)))
    rows = [{"bijection": name, "inverse": a.inverse, "input": text, "output": out}]
    return rows, "output", out


def cmd_walk(a):
    if a.sum_end_axis:
        total = 0
        reach = max(a.start) + a.n
        for v in range(reach + 1):
            total += walks.count_walks(a.kind, a.n, a.start, walks.axis_point(a.kind, v), a.method)
        row = {"kind": a.kind, "n": a.n, "start": list(a.start), "end": "axis", "count": total}
    else:
        if a.end is None:
            raise ValueError("--end is required unless --sum-end-axis is given")
        count = walks.count_walks(a.kind, a.n, a.start, a.end, a.method)
        row = {"kind": a.kind, "n": a.n, "start": list(a.start), "end": list(a.end), "count": count}
    return [row], "count", str(row["count"])


def cmd_avoid(a):
    first = 0 if a.cls == "dyck" else 1
    rows = [{"class": a.cls, "pattern": "".join(map(str, a.pattern)), "n": n,
             "count": patterns.avoid_count(a.cls, n, a.pattern, a.h, a.b)}
            for n in range(first, a.n + 1)]
    return rows, "count", "\n".join(str(r["count"]) for r in rows)


def cmd_seq(a):
    if a.id not in SEQUENCES:
        raise ValueError(f"unknown sequence {a.id!r}; known: {', '.join(SEQUENCES)}")
    first, term, _ = SEQUENCES[a.id]
    rows = [{"id": a.id, "n": n, "value": term(n)} for n in range(first, a.max_n + 1)]
    return rows, "value", ",".join(str(r["value"]) for r in rows)


def cmd_verify(a):
    report = verify_suite(a.suite, a.max_n, a.seed)
    rows = [c.as_dict() for c in report.checks]
    summary = f"{report.suite}: {len(report.checks) - len(report.failures)}/{len(report.checks)} checks passed"
    a._failed = not report.passed
    return rows, "pass", summary


# -- parser ----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=None,
                        help="output format (default: oeis for seq, text for map, json otherwise)")
    common.add_argument("--out", help="write output to this file instead of stdout")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized checks")

    parser = argparse.ArgumentParser(prog="ballotperm", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("count", parents=[common], help="count a permutation class")
    p.add_argument("--class", dest="cls", required=True, choices=CLASSES + ("wlpp", "ocp"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--h", type=int, default=0)
    p.add_argument("--b", type=int, default=0)
    p.add_argument("--pattern", type=_pattern)
    p.add_argument("--by", choices=("order", "horizontal"))
    p.add_argument("--method", choices=("enumerate", "formula"), default="enumerate")
    p.set_defaults(run=cmd_count, default_format="json")

    p = sub.add_parser("map", parents=[common], help="apply a bijection")
    p.add_argument("--bijection", required=True, choices=("Psi", "Phi", "psi", "phi", "varphi", "eta"))
    p.add_argument("--input", required=True)
    p.add_argument("--inverse", action="store_true")
    p.set_defaults(run=cmd_map, default_format="text")

    p = sub.add_parser("walk", parents=[common], help="count lattice walks")
    p.add_argument("--kind", required=True, choices=tuple(walks.STEPS))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--start", type=_point, default=(0, 0))
    p.add_argument("--end", type=_point)
    p.add_argument("--method", choices=walks.METHODS, default="step_dp")
    p.add_argument("--sum-end-axis", action="store_true", help="sum over all end points on the axis")
    p.set_defaults(run=cmd_walk, default_format="json")

    p = sub.add_parser("avoid", parents=[common], help="avoidance counts for lengths up to n")
    p.add_argument("--class", dest="cls", default="ballot", choices=CLASSES)
    p.add_argument("--pattern", type=_pattern, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--h", type=int, default=0)
    p.add_argument("--b", type=int, default=0)
    p.set_defaults(run=cmd_avoid, default_format="json")

    p = sub.add_parser("seq", parents=[common], help="print a named integer sequence")
    p.add_argument("--id", required=True, help=", ".join(SEQUENCES))
    p.add_argument("--max-n", type=int, required=True)
    p.set_defaults(run=cmd_seq, default_format="oeis")

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("--suite", required=True, choices=tuple(SUITES) + ("all",))
    p.add_argument("--max-n", type=int, default=8)
    p.set_defaults(run=cmd_verify, default_format="json")
    return parser


def render(rows: list[dict], key: str, text: str, fmt: str) -> str:
    if fmt == "json":
        return "".join(json.dumps(r, default=str) + "\n" for r in rows)
    if fmt == "csv":
        buf = io.StringIO()
        fields = list(dict.fromkeys(k for r in rows for k in r))
        writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        return buf.getvalue()
    if fmt == "oeis":
        return ",".join(str(r[key]) for r in rows) + "\n"
    return text + "\n"


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        rows, key, text = args.run(args)
    except (ValueError, ArithmeticError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    out = render(rows, key, text, args.format or args.default_format)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return 1 if getattr(args, "_failed", False) else 0
