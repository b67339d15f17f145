"""Command-line front end.

Exit codes: 0 success, 1 a verification check failed, 2 bad usage or input.
Data goes to stdout, diagnostics to stderr.
"""

import argparse
import csv
import io
import json
import sys

from mdtrees import count_tables, verification
from mdtrees import enumeration_oracle as oracle
from mdtrees.count_tables import Kind
from mdtrees.tree_domain import TreeError, decompose, md_subtree, parse_tree, render_forest, render_tree

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

BFILE_HELP = (
    "bfile writes one 'index value' line per entry, reading the triangle row "
    "by row (k ascending) with a running index starting at 0"
)


class UsageError(Exception):
    pass


def _rows_as_text(triangle):
    return [[str(v) for v in row] for row in triangle.rows]


def cmd_table(kind, max_n, fmt):
    kind = Kind.parse(kind)
    if max_n < kind.first_row:
        raise UsageError(f"table {kind.value.lower()} needs --max-n >= {kind.first_row}")
    triangle = count_tables.build_triangle(kind, max_n)
    if fmt == "json":
        payload = {"kind": kind.value, "max_n": max_n, "rows": _rows_as_text(triangle)}
        return json.dumps(payload) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["n", "k", "value"])
        writer.writerows(triangle.entries())
        return buf.getvalue()
    if fmt == "bfile":
        return "".join(f"{i} {value}\n" for i, (_, _, value) in enumerate(triangle.entries()))
    return "".join(" ".join(row) + "\n" for row in _rows_as_text(triangle))


_VALUE_FUNCS = {
    Kind.O: count_tables.o_count,
    Kind.Z: count_tables.z_count,
    Kind.F: count_tables.f_count,
    Kind.R: count_tables.r_count,
}


def cmd_value(kind, n, k):
    kind = Kind.parse(kind)
    if n < kind.first_row or k < 0:
        raise UsageError(f"({n}, {k}) is outside triangle {kind.value}")
    top = n - 1 if kind is Kind.R else n
    if k > top:
        raise UsageError(f"k={k} must be at most {top} for triangle {kind.value}")
    return f"{_VALUE_FUNCS[kind](n, k)}\n"


def cmd_md(text):
    t = parse_tree(text)
    result = md_subtree(t)
    vertices = ",".join(str(v) for v in sorted(result.md_vertices))
    line = f"md={{{vertices}}} k={result.md_edge_count}"
    labels = set(t.labels())
    if labels == set(range(len(labels))):
        z_part, _ = decompose(t)
        line += f" z={render_tree(z_part)}"
    return line + "\n"


def _object_lines(family, n, k, cap):
    if family is oracle.Family.O:
        for t in oracle.enumerate_ordered_trees(range(n + 1)):
            if k is None or md_subtree(t).md_edge_count == k:
                yield render_tree(t)
    elif family is oracle.Family.Z:
        for kk in range(n + 1) if k is None else [k]:
            for t in oracle.enumerate_z_trees(n, kk, cap=cap):
                yield render_tree(t)
    elif family is oracle.Family.F:
        for kk in range(n + 1) if k is None else [k]:
            for forest in oracle.enumerate_forests(n, kk, cap=cap):
                yield render_forest(forest)
    elif family is oracle.Family.DECREASING:
        for t in oracle.enumerate_decreasing_trees(range(n + 1)):
            yield render_tree(t)
    else:
        for t in oracle.enumerate_rooted_unordered(n, cap=cap):
            yield str(t)


def _census_text(report, fmt):
    if fmt == "json":
        return json.dumps(report.to_dict()) + "\n"
    if fmt == "csv":
        lines = ["k,count"] + [f"{k},{v}" for k, v in sorted(report.census.items())]
        return "\n".join(lines) + "\n"
    if report.family is oracle.Family.DECREASING:
        return f"total:{report.total}\n"
    parts = [f"{k}:{v}" for k, v in sorted(report.census.items())]
    parts.append(f"total:{report.total}")
    return " ".join(parts) + "\n"


def cmd_enumerate(family, n, k, fmt, listing, cap, out, err):
    family = oracle.Family.parse(family)
    if fmt == "bfile":
        raise UsageError("bfile output applies only to triangles")
    if family is oracle.Family.ROOTED_UNORDERED and n < 1:
        raise UsageError("RootedUnordered needs --n >= 1")
    report = oracle.tabulate_family(family, n, k, cap=cap)
    if listing:
        for line in _object_lines(family, n, k, cap):
            out.write(line + "\n")
        # keep stdout to one object per line when listing
        err.write(_census_text(report, "plain"))
    else:
        out.write(_census_text(report, fmt))


def _check_line(check):
    status = "PASS" if check.passed else "FAIL"
    params = " ".join(f"{key}={value}" for key, value in check.params.items())
    line = f"{status} {check.id} {params} expected={verification._as_text(check.expected)} actual={verification._as_text(check.actual)}"
    if check.note:
        line += f" note: {check.note}"
    return line.replace("'", "")


def cmd_verify(suite, max_n, fmt, cap):
    reports = verification.run_suite(suite, max_n, cap=cap)
    if fmt == "json":
        payload = [r.to_dict() for r in reports]
        text = json.dumps(payload[0] if suite != "all" else payload) + "\n"
    else:
        lines = []
        for report in reports:
            lines.extend(_check_line(c) for c in report.checks)
            lines.append(report.summary())
        text = "\n".join(lines) + "\n"
    ok = all(r.all_passed for r in reports)
    return text, ok


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _nonneg(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return value


def build_parser():
    parser = _Parser(prog="mdtrees", description="Ordered labeled trees counted by maximal decreasing subtree size.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    table = sub.add_parser("table", help="print a whole triangle", epilog=BFILE_HELP)
    table.add_argument("kind", choices=["o", "z", "f", "r"], type=str.lower)
    table.add_argument("--max-n", type=_nonneg, required=True)
    table.add_argument("--format", choices=["csv", "json", "bfile", "plain"], default="plain")

    value = sub.add_parser("value", help="print a single entry")
    value.add_argument("kind", choices=["o", "z", "f", "r"], type=str.lower)
    value.add_argument("--n", type=int, required=True)
    value.add_argument("--k", type=int, required=True)

    md = sub.add_parser("md", help="show the maximal decreasing subtree of a tree")
    md.add_argument("tree")

    enum = sub.add_parser("enumerate", help="exhaustive census of a family")
    enum.add_argument("family", help="O, Z, F, Decreasing or RootedUnordered")
    enum.add_argument("--n", type=_nonneg, required=True)
    enum.add_argument("--k", type=_nonneg)
    enum.add_argument("--format", choices=["csv", "json", "bfile", "plain"], default="plain")
    enum.add_argument("--list", action="store_true", help="print every object, one per line")
    enum.add_argument("--max-cap", type=_nonneg, default=oracle.DEFAULT_CAP, help="largest n allowed (default %(default)s)")

    verify = sub.add_parser("verify", help="run verification suites")
    choices = [*verification.SUITES, "all"]
    verify.add_argument("suite_name", nargs="?", choices=choices, metavar="suite")
    verify.add_argument("--suite", choices=choices)
    verify.add_argument("--max-n", type=_nonneg, required=True)
    verify.add_argument("--format", choices=["json", "plain"], default="plain")
    verify.add_argument("--max-cap", type=_nonneg, default=oracle.DEFAULT_CAP)
    return parser


def main(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if args.command == "table":
            out.write(cmd_table(args.kind, args.max_n, args.format))
        elif args.command == "value":
            out.write(cmd_value(args.kind, args.n, args.k))
        elif args.command == "md":
            out.write(cmd_md(args.tree))
        elif args.command == "enumerate":
            cmd_enumerate(args.family, args.n, args.k, args.format, args.list, args.max_cap, out, err)
        else:
            suite = args.suite or args.suite_name
            if suite is None:
                raise UsageError("no suite given")
            if args.suite and args.suite_name and args.suite != args.suite_name:
                raise UsageError("conflicting suite arguments")
            text, ok = cmd_verify(suite, args.max_n, args.format, args.max_cap)
            out.write(text)
            return EXIT_OK if ok else EXIT_FAILED
    except (UsageError, TreeError, ValueError) as exc:
        err.write(f"mdtrees: error: {exc}\n")
        return EXIT_USAGE
    return EXIT_OK


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
