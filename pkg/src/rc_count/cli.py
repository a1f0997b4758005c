"""Command-line front end: ``rc-count`` or ``python -m rc_count``.

Exit codes: 0 success, 1 self-test failure, 2 malformed flags, 3 argument out
of range, 4 dimension balance violated, 5 table disagrees with golden values.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
import warnings
from fractions import Fraction
from pathlib import Path
from typing import Callable, List, Optional, Sequence, Tuple

from . import cache
from .counts import (
    BalanceError,
    cusp_count,
    cusp_raw_route_a,
    cusp_raw_route_b,
    level1_S2,
    level1_V2_1,
    level1_V2_11,
    planar_node_lemmas,
    tacnode_count_P2,
    tacnode_count_P3,
    triple_point_count_P2,
    triple_point_count_P3,
)
from .descendant import DESCENDANT_MEMO, descendant_invariant
from .exact import ConstraintTuple
from .nodes import modified_descendant
from .primary import PRIMARY_MEMO, nd_plane, primary_invariant
from .tables import GOLDEN, TABLE_TITLES, compute_cell, compute_table, first_mismatch

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_RANGE, EXIT_BALANCE, EXIT_GOLDEN = 0, 1, 2, 3, 4, 5


class RangeError(ValueError):
    pass


def _int_list(text: str) -> List[int]:
    if text.strip() == "":
        return []
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rc-count",
        description="Exact genus-0 invariants of P^n and counts of singular rational curves.",
    )
    parser.add_argument(
        "--cache",
        type=Path,
        default=None,
        help=f"memo cache file (default: ${cache.ENV_VAR} when set)",
    )
    parser.add_argument("--no-cache", action="store_true", help="ignore any cache file")
    sub = parser.add_subparsers(dest="command", required=True)

    inv = sub.add_parser("invariant", help="primary or one-descendant invariant")
    inv.add_argument("--n", type=int, required=True)
    inv.add_argument("--d", type=int, required=True)
    inv.add_argument("--insertions", type=_int_list, default=[], help="codimensions a1,a2,...")
    inv.add_argument("--psi", type=int, default=None, help="psi power j at the special point")
    inv.add_argument("--at", type=int, default=0, help="hyperplane power c at the special point")

    sing = sub.add_parser("singular", help="count curves with a cusp, triple point or tacnode")
    sing.add_argument("--type", choices=["cusp", "triple", "tacnode"], required=True)
    sing.add_argument("--n", type=int, required=True)
    sing.add_argument("--d", type=int, required=True)
    sing.add_argument("--points", type=int, default=None)
    sing.add_argument("--lines", type=int, default=0)
    sing.add_argument("--planes", type=int, default=0)
    sing.add_argument("--route", choices=["A", "B"], default="A", help="cusp evaluation route")

    tab = sub.add_parser("table", help="recompute a published table and compare")
    tab.add_argument("--id", type=int, required=True)
    tab.add_argument("--format", choices=["text", "csv", "json"], default="text")

    st = sub.add_parser("selftest", help="run the built-in checks")
    st.add_argument("--level", choices=["quick", "full"], default="quick")

    ca = sub.add_parser("cache", help="inspect or clear the cache file")
    ca.add_argument("action", choices=["info", "clear"])
    return parser


def _stats() -> dict:
    return {
        "primary_entries": str(len(PRIMARY_MEMO)),
        "descendant_entries": str(len(DESCENDANT_MEMO)),
        "evaluations": str(PRIMARY_MEMO.misses + DESCENDANT_MEMO.misses),
        "hits": str(PRIMARY_MEMO.hits + DESCENDANT_MEMO.hits),
    }


def _emit(out, payload: dict) -> None:
    out.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")


def cmd_invariant(args, out) -> int:
    n, d = args.n, args.d
    if n < 1 or d < 0:
        raise RangeError("need --n >= 1 and --d >= 0")
    for a in args.insertions + [args.at]:
        if not 0 <= a <= n:
            raise RangeError(f"codimension {a} outside [0, {n}]")
    if args.psi is not None and args.psi < 0:
        raise RangeError("--psi must be >= 0")
    start = time.perf_counter()
    if args.psi is None:
        value = primary_invariant(n, d, args.insertions)
        query = {"n": str(n), "d": str(d), "insertions": [str(a) for a in args.insertions]}
    else:
        value = descendant_invariant(n, d, (args.psi, args.at), args.insertions)
        query = {
            "n": str(n),
            "d": str(d),
            "insertions": [str(a) for a in args.insertions],
            "psi": str(args.psi),
            "at": str(args.at),
        }
    _emit(
        out,
        {
            "command": "invariant",
            "query": query,
            "raw": str(value),
            "divisor": "1",
            "count": str(value),
            "seconds": f"{time.perf_counter() - start:.6f}",
            "cache": _stats(),
        },
    )
    return EXIT_OK


def cmd_singular(args, out) -> int:
    n, d, kind = args.n, args.d, args.type
    if d < 1:
        raise RangeError("--d must be >= 1")
    if min(args.lines, args.planes, args.points if args.points is not None else 0) < 0:
        raise RangeError("constraint numbers must be >= 0")
    start = time.perf_counter()
    if kind == "cusp":
        if n < 2:
            raise RangeError("cusp counts need --n >= 2")
        points = args.points if args.points is not None else (3 * d - 2 if n == 2 else 0)
        if n == 2 and args.planes:
            raise RangeError("--planes needs n >= 3")
        mu = ConstraintTuple.points_lines(n, points, args.lines, args.planes)
        result = cusp_count(n, d, mu, route=args.route)
    elif n == 2:
        if args.lines or args.planes:
            raise RangeError("plane counts take points only")
        if args.points is not None and args.points != 3 * d - 2:
            raise BalanceError(f"plane {kind} counts need 3d - 2 = {3 * d - 2} points, got {args.points}")
        result = (triple_point_count_P2 if kind == "triple" else tacnode_count_P2)(d)
    elif n == 3:
        if args.planes:
            raise RangeError("P^3 counts take points and lines only")
        points = args.points if args.points is not None else 0
        if 2 * points + args.lines != 4 * d - 3:
            raise BalanceError(f"P^3 {kind} counts need 2p + q = 4d - 3 = {4 * d - 3}, got {2 * points + args.lines}")
        result = (triple_point_count_P3 if kind == "triple" else tacnode_count_P3)(d, points, args.lines)
    else:
        raise RangeError(f"{kind} counts are available for n = 2 and n = 3 only")
    _emit(
        out,
        {
            "command": "singular",
            "query": {
                "type": kind,
                "n": str(n),
                "d": str(d),
                "constraints": [str(c) for c in result.query.mu.codims],
            },
            "raw": str(result.raw),
            "divisor": str(result.divisor),
            "count": str(result.count),
            "seconds": f"{time.perf_counter() - start:.6f}",
            "cache": _stats(),
        },
    )
    return EXIT_OK


def render_table(table_id: int, rows, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(
            {
                "table": str(table_id),
                "title": TABLE_TITLES[table_id],
                "rows": [
                    {"d": str(cell.d), "constraints": cell.label, "count": str(value)} for cell, value in rows
                ],
            },
            indent=2,
        ) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["d", "constraints", "count"])
        for cell, value in rows:
            writer.writerow([cell.d, cell.label, str(value)])
        # csv quotes the comma-bearing labels; the plain form is easier to grep
        return buf.getvalue().replace('"', "")
    lines = [f"Table {table_id}: {TABLE_TITLES[table_id]}"]
    if table_id in (1, 2):
        lines.append("d:     " + ",".join(str(cell.d) for cell, _ in rows))
        lines.append("count: " + ",".join(str(v) for _, v in rows))
    else:
        for cell, value in rows:
            lines.append(f"d={cell.d}  {cell.label:<12} {value}")
    return "\n".join(lines) + "\n"


def cmd_table(args, out) -> int:
    if args.id not in GOLDEN:
        raise RangeError(f"--id must be in 1..5, got {args.id}")
    rows = compute_table(args.id)
    out.write(render_table(args.id, rows, args.format))
    bad = first_mismatch(rows)
    if bad is not None:
        cell, value = bad
        sys.stderr.write(
            f"golden mismatch in table {args.id} at d={cell.d} {cell.label}: "
            f"computed {value}, published {cell.golden}\n"
        )
        return EXIT_GOLDEN
    return EXIT_OK


Check = Tuple[str, Callable[[], Fraction], int]


def quick_checks() -> List[Check]:
    checks: List[Check] = [
        ("n_1 = 1", lambda: nd_plane(1), 1),
        ("n_2 = 1", lambda: nd_plane(2), 1),
        ("n_3 = 12", lambda: nd_plane(3), 12),
        ("n_4 = 620", lambda: nd_plane(4), 620),
        ("lines in P^3 meeting four lines", lambda: primary_invariant(3, 1, [2, 2, 2, 2]), 2),
        ("<tau_1(H^2)>_1 on P^2", lambda: descendant_invariant(2, 1, (1, 2), []), 1),
        ("<tau_2(H)>_1 on P^2", lambda: descendant_invariant(2, 1, (2, 1), []), -3),
        ("<tau_3(1)>_1 on P^2", lambda: descendant_invariant(2, 1, (3, 0), []), 6),
        ("modified psi on the line through two points", lambda: modified_descendant(2, 1, 0, 1, 0, [2, 2]), -2),
        ("modified psi squared through one point", lambda: modified_descendant(2, 1, 0, 2, 0, [2]), 0),
        ("cuspidal plane cubics", lambda: planar_node_lemmas("cusp", 3), 24),
    ]
    for p, q in [(2, 1), (1, 3), (0, 5)]:
        mu = ConstraintTuple.points_lines(3, p, q)
        checks += [
            (f"|S2| = 0 for conics, (p,q)=({p},{q})", lambda mu=mu: level1_S2(2, mu), 0),
            (f"|V2^(1)| = 0 for conics, (p,q)=({p},{q})", lambda mu=mu: level1_V2_1(2, mu), 0),
            (f"<a, V2^(1,1)> = 0 for conics, (p,q)=({p},{q})", lambda mu=mu: level1_V2_11("a", 2, mu), 0),
            (f"<eta, V2^(1,1)> = 0 for conics, (p,q)=({p},{q})", lambda mu=mu: level1_V2_11("eta", 2, mu), 0),
        ]
    for d in (1, 2, 3):
        checks += [
            (f"no triple-pointed plane curves in degree {d}", lambda d=d: triple_point_count_P2(d).count, 0),
            (f"no tacnodal plane curves in degree {d}", lambda d=d: tacnode_count_P2(d).count, 0),
        ]
    return checks


def full_checks() -> List[Check]:
    checks: List[Check] = []
    for table_id, cells in GOLDEN.items():
        for cell in cells:
            checks.append(
                (
                    f"table {table_id} d={cell.d} {cell.label}",
                    lambda t=table_id, c=cell: compute_cell(t, c),
                    int(cell.golden),
                )
            )
    checks += [
        ("P^3 (3,7) triple points = plane quartics", lambda: triple_point_count_P3(4, 3, 7).count, 60),
        ("P^3 (3,7) tacnodes = plane quartics", lambda: tacnode_count_P3(4, 3, 7).count, 1296),
        (
            "P^4 (3,0,4) cuspidal cubics = plane cuspidal cubics",
            lambda: cusp_count(4, 3, ConstraintTuple.points_lines(4, 3, 0, 4)).count,
            24,
        ),
    ]
    for cell in GOLDEN[5]:
        mu = ConstraintTuple.points_lines(4, *cell.constraints)
        checks.append(
            (
                f"cusp routes agree on P^4 d={cell.d} {cell.label}",
                lambda mu=mu, d=cell.d: cusp_raw_route_a(4, d, mu) - cusp_raw_route_b(4, d, mu),
                0,
            )
        )
    for d in range(1, 6):
        mu = ConstraintTuple.points_lines(2, 3 * d - 2)
        checks.append(
            (
                f"cusp routes agree on P^2 d={d}",
                lambda mu=mu, d=d: cusp_raw_route_a(2, d, mu) - cusp_raw_route_b(2, d, mu),
                0,
            )
        )
    return checks


def cmd_selftest(args, out) -> int:
    checks = quick_checks() + (full_checks() if args.level == "full" else [])
    failures = 0
    for name, thunk, expected in checks:
        value = thunk()
        ok = value == expected
        failures += not ok
        out.write(f"{'PASS' if ok else 'FAIL'}  {name}: {value}" + ("" if ok else f" (expected {expected})") + "\n")
    out.write(f"{len(checks) - failures}/{len(checks)} checks passed\n")
    return EXIT_OK if failures == 0 else EXIT_FAIL


def cmd_cache(args, out, path: Optional[Path]) -> int:
    if path is None:
        raise RangeError(f"no cache file given; pass --cache or set ${cache.ENV_VAR}")
    if args.action == "clear":
        existed = path.exists()
        if existed:
            path.unlink()
        _emit(out, {"command": "cache", "path": str(path), "removed": "yes" if existed else "no"})
        return EXIT_OK
    entries = cache.load(path) if path.exists() else 0
    _emit(
        out,
        {
            "command": "cache",
            "path": str(path),
            "exists": "yes" if path.exists() else "no",
            "entries": str(entries),
            "version": cache.FORMAT_VERSION,
        },
    )
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    path = None if args.no_cache else (args.cache or cache.default_path())
    try:
        if args.command == "cache":
            return cmd_cache(args, out, path)
        if path is not None:
            with warnings.catch_warnings(record=True) as caught:
                warnings.simplefilter("always")
                cache.load(path)
            for w in caught:
                sys.stderr.write(f"warning: {w.message}\n")
        handler = {
            "invariant": cmd_invariant,
            "singular": cmd_singular,
            "table": cmd_table,
            "selftest": cmd_selftest,
        }[args.command]
        code = handler(args, out)
        if path is not None:
            cache.save(path)
        return code
    except BalanceError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_BALANCE
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_RANGE


def entry_point() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry_point()
