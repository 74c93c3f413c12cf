"""Command-line interface: compute, print, export and verify.

Subcommands: transition, central-basis, char-table, element, verify,
bench.  Output formats are text (default), json and csv; scalars use the
canonical string grammar of the coefficient module, or Q/bracket pretty
forms with --pretty-Q.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time
from fractions import Fraction

from .coeff import evaluate, parse_scalar, scalar_str, scalar_str_pretty, as_ratfun
from .combi import partitions
from .hecke import HeckeElement, jm_element, signed_sum, upsilon, zeta, descent_l
from .symfunc import BASES, QMatrix, transition_matrix
from . import center as _center
from . import characters as _characters
from . import verify as _verify

LARGE_N = 7


def _label(la):
    return "".join(str(p) for p in la)


def _parse_index(text):
    parts = tuple(int(c) for c in text.replace(",", "").replace(" ", ""))
    if not parts or any(p < 1 for p in parts):
        raise argparse.ArgumentTypeError("bad partition/composition %r" % text)
    return parts


def export_matrix(mat, n, fmt="text", pretty=False):
    """Render a labelled matrix; JSON uses the schema
    {"n":..,"rows":[..],"cols":[..],"entries":[[..]]}."""
    strings = mat.strings(pretty=pretty)
    rows = [_label(r) for r in mat.rows]
    cols = [_label(c) for c in mat.cols]
    if fmt == "json":
        return json.dumps({"n": n, "rows": rows, "cols": cols,
                           "entries": strings}, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow([""] + cols)
        for label, row in zip(rows, strings):
            writer.writerow([label] + row)
        return buf.getvalue()
    widths = [max(len(cols[j]), max(len(r[j]) for r in strings))
              for j in range(len(cols))]
    lw = max((len(r) for r in rows), default=0)
    lines = [" " * lw + "  " + "  ".join(c.rjust(w) for c, w in zip(cols, widths))]
    for label, row in zip(rows, strings):
        lines.append(label.rjust(lw) + "  "
                     + "  ".join(s.rjust(w) for s, w in zip(row, widths)))
    return "\n".join(lines) + "\n"


def parse_matrix_json(text):
    """Inverse of the JSON export; labels become partition tuples."""
    data = json.loads(text)
    rows = [tuple(int(c) for c in r) for r in data["rows"]]
    cols = [tuple(int(c) for c in r) for r in data["cols"]]
    entries = [[parse_scalar(s) for s in row] for row in data["entries"]]
    return QMatrix(rows, cols, entries), data["n"]


def export_element(elt, fmt="text", pretty=False):
    fmtfun = scalar_str_pretty if pretty else scalar_str
    items = {"".join(str(x) for x in w) if elt.n < 10 else str(list(w)): fmtfun(c)
             for w, c in sorted(elt.support.items())}
    if fmt == "json":
        return json.dumps({"n": elt.n, "support": items}, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["permutation", "coefficient"])
        for k, v in items.items():
            writer.writerow([k, v])
        return buf.getvalue()
    if not items:
        return "0\n"
    width = max(len(k) for k in items)
    return "".join("T[%s]  %s\n" % (k.rjust(width), v) for k, v in items.items())


def _check_large(n, allow):
    if n >= LARGE_N and not allow:
        raise SystemExit("n = %d grows as n!; pass --allow-large to proceed" % n)


def _maybe_at_q(mat, at_q):
    if at_q is None:
        return mat
    q0 = Fraction(at_q)
    return mat.map(lambda x: evaluate(as_ratfun(x), q0))


def cmd_transition(args):
    _check_large(args.n, args.allow_large)
    mat = _maybe_at_q(transition_matrix(args.n, getattr(args, "from"), args.to), args.at_q)
    sys.stdout.write(export_matrix(mat, args.n, args.format, args.pretty_Q))
    return 0


def cmd_central_basis(args):
    _check_large(args.n, args.allow_large)
    fam = _center.central_family(args.n, args.kind)
    if args.in_gamma:
        mat = _maybe_at_q(_center.family_transition(args.n, args.kind), args.at_q)
        sys.stdout.write(export_matrix(mat, args.n, args.format, args.pretty_Q))
        return 0
    for la in partitions(args.n):
        sys.stdout.write("%s (index %s):\n" % (args.kind, _label(la)))
        sys.stdout.write(export_element(fam[la], args.format, args.pretty_Q))
    return 0


def cmd_char_table(args):
    _check_large(args.n, args.allow_large)
    table = _characters.char_table(args.n, args.family, args.method)
    mat = _maybe_at_q(QMatrix(table.rows, table.cols, table.entries), args.at_q)
    sys.stdout.write(export_matrix(mat, args.n, args.format, args.pretty_Q))
    return 0


def cmd_element(args):
    _check_large(args.n, args.allow_large)
    idx = args.index
    n = args.n
    if args.kind == "zeta":
        elt = zeta(idx)
    elif args.kind == "xi":
        elt = jm_element("xi", idx[0], n)
    elif args.kind == "x":
        elt = jm_element("x", idx[0], n)
    elif args.kind == "upsilon":
        elt = upsilon(idx)
    elif args.kind == "box":
        elt = signed_sum(idx, "box")
    elif args.kind == "nabla":
        elt = signed_sum(idx, "nabla")
    elif args.kind == "L":
        elt = descent_l(idx)
    elif args.kind == "gamma":
        elt = _center.central_family(sum(idx), "gr")[tuple(sorted(idx, reverse=True))]
    else:
        raise SystemExit("unknown element kind")
    if elt.n != n:
        raise SystemExit("index does not match --n")
    sys.stdout.write(export_element(elt, args.format, args.pretty_Q))
    return 0


def cmd_verify(args):
    _check_large(args.n, args.allow_large)
    names = list(_verify.THEOREMS) if args.theorem == "all" else [args.theorem]
    workers = int(os.environ.get("HECKE_CENTER_THREADS", "1") or "1")
    reports = _verify.run_all(args.n, names, max_workers=max(1, workers))
    failed = False
    for rep in reports:
        sys.stdout.write(rep.line() + "\n")
        if args.format != "json":
            for title, mat in rep.matrices:
                sys.stdout.write("%s:\n" % title)
                sys.stdout.write(export_matrix(mat, args.n, "text", args.pretty_Q))
        failed = failed or not rep.ok
    if args.format == "json":
        payload = [{"theorem": r.theorem, "n": r.n, "status": r.status,
                    "witness": {k: str(v) for k, v in (r.witness or {}).items()} or None,
                    "elapsed": round(r.elapsed, 4)} for r in reports]
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    return 1 if failed else 0


def cmd_bench(args):
    _check_large(args.n, args.allow_large)
    n = args.n
    t0 = time.time()
    _center.central_family(n, "n1")
    t1 = time.time()
    sys.stdout.write("build N(1) family        n=%d  %.3fs\n" % (n, t1 - t0))
    _center.central_family(n, "gr")
    t2 = time.time()
    sys.stdout.write("build Geck-Rouquier basis n=%d  %.3fs\n" % (n, t2 - t1))
    gr = _center.central_family(n, "gr")
    la = partitions(n)[min(1, len(partitions(n)) - 1)]
    g = gr[la]
    from .hecke import multiply
    t3 = time.time()
    multiply(g, g)
    sys.stdout.write("square a Gamma element    n=%d  %.3fs\n" % (n, time.time() - t3))
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="hecke-center",
        description="exact computations in the center of the Hecke algebra "
                    "of the symmetric group")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--n", type=int, required=True, help="rank (symbols 1..n)")
        p.add_argument("--format", choices=("text", "json", "csv"), default="text")
        p.add_argument("--pretty-Q", action="store_true", dest="pretty_Q",
                       help="print scalars in Q / q-integer bracket form")
        p.add_argument("--at-q", default=None, metavar="A/B",
                       help="evaluate every scalar at an exact rational q")
        p.add_argument("--allow-large", action="store_true",
                       help="permit n >= %d despite factorial growth" % LARGE_N)

    p = sub.add_parser("transition", help="symmetric-function transition matrix")
    common(p)
    p.add_argument("--from", choices=BASES, required=True)
    p.add_argument("--to", choices=BASES, required=True)
    p.set_defaults(func=cmd_transition)

    p = sub.add_parser("central-basis", help="central family elements or their "
                                             "Gamma-basis expansion")
    common(p)
    p.add_argument("--kind", choices=_center.FAMILY_KINDS, required=True)
    p.add_argument("--in-gamma", action="store_true", dest="in_gamma")
    p.set_defaults(func=cmd_central_basis)

    p = sub.add_parser("char-table", help="character table of zeta or upsilon elements")
    common(p)
    p.add_argument("--family", choices=("zeta", "upsilon"), default="zeta")
    p.add_argument("--method", choices=("trace", "ram"), default="trace")
    p.set_defaults(func=cmd_char_table)

    p = sub.add_parser("element", help="print one named element")
    common(p)
    p.add_argument("--kind", required=True,
                   choices=("zeta", "xi", "x", "upsilon", "box", "nabla", "L", "gamma"))
    p.add_argument("--index", type=_parse_index, required=True,
                   help="composition/partition digits, e.g. 32 or 3,2")
    p.set_defaults(func=cmd_element)

    p = sub.add_parser("verify", help="verify a theorem or all of them")
    common(p)
    p.add_argument("--theorem", default="all",
                   choices=sorted(_verify.THEOREMS) + ["all"])
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="time the core constructions")
    common(p)
    p.set_defaults(func=cmd_bench)
    return parser


def run(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except SystemExit as exc:
        if exc.code is None or isinstance(exc.code, int):
            return exc.code or 0
        sys.stderr.write(str(exc.code) + "\n")
        return 2
    except (ValueError, KeyError) as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
