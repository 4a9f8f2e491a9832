"""Command-line front end.  JSON on stdout by default, ``--csv`` for tables.

Exit status: 0 when everything ran and every check passed, 1 when a check
failed or a formula produced an impossible value, 2 on bad usage.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from . import counting, families, series, verify, volume
from .arith import affine_rank
from .families import XpfParams
from .verify import Check

EHRHART_MAX_N = 5
EHRHART_MAX_T = 8
VERTEX_LIST_MAX_N = 7
ENUMERATION_MAX_N = 5


class UsageError(Exception):
    pass


@dataclass
class Report:
    command: str
    params: dict
    results: dict[str, list[dict]] = field(default_factory=dict)
    checks: list[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> str:
        doc = {
            "command": self.command,
            "params": self.params,
            "results": self.results,
            "checks": [{"name": c.name, "passed": c.passed, "details": c.details} for c in self.checks],
        }
        return json.dumps(_plain(doc), sort_keys=True, indent=2)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\r\n")
        tables = [rows for _, rows in sorted(self.results.items()) if rows]
        if self.checks:
            tables.append([{"name": c.name, "passed": c.passed, "details": c.details} for c in self.checks])
        for i, rows in enumerate(tables):
            if i:
                writer.writerow([])
            header = list(rows[0])
            writer.writerow(header)
            for row in rows:
                writer.writerow([_cell(row.get(h)) for h in header])
        return buf.getvalue()


def _plain(value):
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    return value


def _cell(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple)):
        return " ".join(_cell(v) for v in value)
    return "" if value is None else str(value)


def _params(n: int, a: int, b: int) -> XpfParams:
    try:
        return XpfParams(n, a, b)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _agreement(name: str, values: dict) -> Check:
    shown = ", ".join(f"{k}={verify.show(v)}" for k, v in values.items())
    return Check(name, len(set(values.values())) == 1, shown)


def _compare(name: str, got, want) -> Check:
    return Check(name, got == want, f"got {verify.show(got)}, expected {verify.show(want)}")


# -- commands ------------------------------------------------------------------


def cmd_volume(args) -> Report:
    p = _params(args.n, args.a, args.b)
    formulas = ["closed", "recursive"] if args.formula == "all" else [args.formula]
    if args.formula == "all" and p.n <= EHRHART_MAX_N:
        formulas.append("ehrhart")
    rows = []
    for name in formulas:
        if name == "closed":
            res = volume.nvol_closed_form(p)
        elif name == "recursive":
            res = volume.vol_recursive_generalized(p)
        else:
            if p.n > EHRHART_MAX_N:
                raise UsageError(f"Ehrhart oracle is limited to n <= {EHRHART_MAX_N}, got n={p.n}")
            res = volume.ehrhart_volume_oracle(families.xpf_constraints(p), p.n)
        rows.append({"formula": name, "dim": res.dim, "euclidean": res.euclidean, "normalized": res.normalized})
    report = Report("volume", {"n": p.n, "a": p.a, "b": p.b, "formula": args.formula}, {"volumes": rows})
    if args.formula == "all":
        report.checks.append(_agreement("formulas agree", {r["formula"]: r["normalized"] for r in rows}))
    return report


def cmd_fvector(args) -> Report:
    p = _params(args.n, args.a, args.b)
    f = counting.f_vector_formula(p)
    report = Report(
        "fvector",
        {"n": p.n, "a": p.a, "b": p.b},
        {"fvector": [{"dim": d, "faces": c} for d, c in enumerate(f.entries)]},
    )
    report.checks.append(_compare("Euler relation", f.euler_sum(), 1))
    if p.n <= counting.FACE_ORACLE_MAX_N:
        report.checks.append(_compare("face oracle", f.entries, counting.brute_force_faces(p).entries))
    return report


def cmd_vertices(args) -> Report:
    p = _params(args.n, args.a, args.b)
    if p.n > VERTEX_LIST_MAX_N:
        raise UsageError(f"vertex listing is limited to n <= {VERTEX_LIST_MAX_N}, got n={p.n}")
    verts = sorted(families.xpf_vertices(p))
    rows = [{f"x{i}": v for i, v in enumerate(vert, 1)} for vert in verts]
    report = Report("vertices", {"n": p.n, "a": p.a, "b": p.b}, {"vertices": rows})
    report.checks.append(_compare("vertex count formula", len(verts), counting.vertex_count_formula(p)))
    return report


COUNT_KINDS = {
    "parking-functions": ("n", "a", "b"),
    "vertices": ("n", "a", "b"),
    "edges": ("n", "a", "b"),
    "facets": ("n", "a", "b"),
    "rational-vertices": ("a", "b"),
    "rational-parking-functions": ("a", "b"),
    "rational-catalan": ("a", "b"),
    "wipf-faces": ("n",),
    "census": ("n",),
    "permanent": ("n",),
}


def cmd_count(args) -> Report:
    names = COUNT_KINDS[args.kind]
    if len(args.params) != len(names):
        raise UsageError(f"count {args.kind} takes {len(names)} integers: {' '.join(names)}")
    vals = dict(zip(names, args.params))
    kind = args.kind
    checks = []
    if kind in ("parking-functions", "vertices", "edges", "facets"):
        p = _params(vals["n"], vals["a"], vals["b"])
        if kind == "parking-functions":
            value = counting.count_x_parking_functions(p)
            if p.n <= ENUMERATION_MAX_N:
                checks.append(_compare("enumeration", value, len(counting.enumerate_x_parking_functions(p))))
        elif kind == "vertices":
            value = counting.vertex_count_formula(p)
            if p.n <= VERTEX_LIST_MAX_N:
                checks.append(_compare("distinct vertices", value, len(families.xpf_vertices(p))))
        else:
            value = counting.edge_count_formula(p) if kind == "edges" else counting.facet_count_formula(p)
            if p.n <= counting.FACE_ORACLE_MAX_N:
                f = counting.brute_force_faces(p).entries
                checks.append(_compare("face oracle", value, f[1] if kind == "edges" else f[-2]))
        rows = [{"kind": kind, "value": value}]
    elif kind.startswith("rational"):
        a, b = vals["a"], vals["b"]
        if kind == "rational-vertices":
            value = counting.rational_vertex_count(a, b)
            checks.append(_compare("distinct vertices", value, len(families.rational_pf_vertices(a, b))))
        elif kind == "rational-parking-functions":
            value = counting.count_rational_parking_functions(a, b)
            checks.append(_compare("b^(a-1)", value, b ** (a - 1)))
        else:
            value = counting.rational_catalan(a, b)
            checks.append(_compare("Dyck paths", value, sum(1 for _ in counting.rational_dyck_paths(a, b))))
        rows = [{"kind": kind, "value": value}]
    elif kind == "wipf-faces":
        facets, verts, edges = counting.wipf_face_counts(vals["n"])
        rows = [{"kind": kind, "facets": facets, "vertices": verts, "edges": edges}]
        if vals["n"] <= counting.FACE_ORACLE_MAX_N + 1:
            checks.append(_compare("face oracle", (facets, verts, edges), counting.wipf_face_counts_brute(vals["n"])))
    elif kind == "census":
        pf, perm = counting.permutahedron_facet_census(vals["n"])
        rows = [{"kind": kind, "pinned_pf_facets": pf, "permutahedron_facets": perm}]
    else:
        rows = [{"kind": kind, "value": volume.count_permanent_positive(vals["n"])}]
    return Report("count", {"kind": kind, **vals}, {"counts": rows}, checks)


def _parse_vector(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError:
        raise UsageError(f"expected a comma-separated integer vector, got {text!r}") from None


EHRHART_FAMILIES = {"xpf": 3, "wipf": 3, "ps": 1, "pp": 2, "rational": 2}


def cmd_ehrhart(args) -> Report:
    fam = args.family
    want = EHRHART_FAMILIES[fam]
    if len(args.params) != want:
        raise UsageError(f"ehrhart {fam} takes {want} parameter(s)")
    if not 0 <= args.tmax <= EHRHART_MAX_T:
        raise UsageError(f"--tmax must be in 0..{EHRHART_MAX_T}, got {args.tmax}")
    ts = range(args.tmax + 1)
    checks = []
    if fam == "ps":
        x = _parse_vector(args.params[0])
        if len(x) > EHRHART_MAX_N + 3:
            raise UsageError(f"Pitman-Stanley vector limited to length {EHRHART_MAX_N + 3}")
        sys_ = families.ps_constraints(x)
        dim = volume.ps_dimension(sys_)
        counts = [counting.lattice_points_in_dilate(sys_, t) for t in ts]
        params = {"x": list(x)}
    else:
        ints = [int(v) for v in args.params] if all(v.lstrip("-").isdigit() for v in args.params) else None
        if ints is None:
            raise UsageError(f"ehrhart {fam} takes integer parameters")
        if fam == "rational":
            a, b = ints
            sys_ = families.rational_pf_constraints(a, b)
            dim = affine_rank(sorted(families.rational_pf_vertices(a, b)))
            params = {"a": a, "b": b}
        else:
            if fam == "pp":
                p = families.xpf_pp_equivalence(*ints)
                params = {"n": ints[0], "p": ints[1]}
            else:
                p = _params(*ints)
                params = {"n": p.n, "a": p.a, "b": p.b}
            if fam == "wipf":
                dim = p.n - 1 if p.a == 1 else p.n
            else:
                dim = 0 if (p.n, p.a) == (1, 1) else p.n
            sys_ = None if fam == "wipf" else families.xpf_constraints(p)
        if sys_ is not None and sys_.n > EHRHART_MAX_N:
            raise UsageError(f"Ehrhart counting limited to dimension {EHRHART_MAX_N}, got {sys_.n}")
        if fam == "wipf":
            if p.n > EHRHART_MAX_N + 3:
                raise UsageError(f"Ehrhart counting limited to n <= {EHRHART_MAX_N + 3}")
            counts = [counting.wipf_lattice_points(p, t) for t in ts]
            checks.append(_compare("closed-form counts", counts, [counting.wipf_ehrhart_formula(p, t) for t in ts]))
        else:
            counts = [counting.lattice_points_in_dilate(sys_, t) for t in ts]
    params["tmax"] = args.tmax
    results = {"counts": [{"t": t, "points": c} for t, c in zip(ts, counts)]}
    if args.tmax >= dim:
        poly = volume.ehrhart_polynomial(counts)
        leading = poly.coefficient(dim)
        results["polynomial"] = [
            {
                "dim": dim,
                "polynomial": str(poly),
                "coefficients": list(poly.coefficients),
                "leading": leading,
                "normalized_volume": factorial(dim) * leading,
            }
        ]
        checks.append(_compare("degree at most dim", poly.degree <= dim, True))
        checks.append(_compare("constant term", poly(0), 1))
    return Report("ehrhart", {"family": fam, **params}, results, checks)


def cmd_series(args) -> Report:
    kind, order = args.kind, args.order
    want = {"g": 1, "f": 2, "ck": 0}[kind]
    if len(args.params) != want:
        raise UsageError(f"series {kind} takes {want} integer parameter(s)")
    if order < 2:
        raise UsageError(f"--order must be at least 2, got {order}")
    checks = []
    if kind == "g":
        (b,) = args.params
        s = series.g_b_series(b, order)
        params = {"b": b}
        checks.append(_compare("g = x exp(b g)", series.verify_functional_equation(b, order, s), True))
        rows = [{"k": k, "coefficient": s[k]} for k in range(order + 1)]
    elif kind == "f":
        a, b = args.params
        s = series.f_ab_series(a, b, order)
        params = {"a": a, "b": b}
        vols = volume.recursive_volumes(order, a, b)
        checks.append(
            _compare("coefficients = V_n/n!", list(s.coefficients), [vols[n] / factorial(n) for n in range(order + 1)])
        )
        rows = [{"k": k, "coefficient": s[k]} for k in range(order + 1)]
    else:
        params = {}
        c = series.ck_from_egf(order)
        checks.append(_compare("c_k recurrence", series.ck_egf_check(order, volume.ck_sequence(order)), True))
        rows = [{"k": k, "coefficient": v} for k, v in enumerate(c)]
    return Report("series", {"kind": kind, "order": order, **params}, {"coefficients": rows}, checks)


def _threads() -> int:
    raw = os.environ.get("PARKPOLY_THREADS", "1")
    try:
        n = int(raw)
    except ValueError:
        raise UsageError(f"PARKPOLY_THREADS must be a positive integer, got {raw!r}") from None
    if n < 1:
        raise UsageError(f"PARKPOLY_THREADS must be a positive integer, got {raw!r}")
    return n


def cmd_verify(args) -> Report:
    names = list(verify.SUITES) if args.suite == "all" else [args.suite]
    workers = min(_threads(), len(names))
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            per_suite = list(pool.map(verify.run_suite, names))
    else:
        per_suite = [verify.run_suite(name) for name in names]
    checks = [c for batch in per_suite for c in batch]
    summary = [
        {"suite": name, "checks": len(batch), "failed": sum(not c.passed for c in batch)}
        for name, batch in zip(names, per_suite)
    ]
    return Report("verify", {"suite": args.suite}, {"suites": summary}, checks)


# -- argument parsing ------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--csv", action="store_true", help="emit RFC-4180 CSV tables instead of JSON")

    parser = argparse.ArgumentParser(prog="parkpoly", description="Exact computations on parking function polytopes.")
    sub = parser.add_subparsers(dest="command", required=True)

    def nab(sp):
        for name in ("n", "a", "b"):
            sp.add_argument(name, type=int)

    sp = sub.add_parser("volume", parents=[common], help="volume of X_n(a, b)")
    nab(sp)
    sp.add_argument("--formula", choices=["closed", "recursive", "ehrhart", "all"], default="closed")
    sp.set_defaults(func=cmd_volume)

    sp = sub.add_parser("fvector", parents=[common], help="f-vector of X_n(a, b)")
    nab(sp)
    sp.set_defaults(func=cmd_fvector)

    sp = sub.add_parser("vertices", parents=[common], help="vertices of X_n(a, b), sorted")
    nab(sp)
    sp.set_defaults(func=cmd_vertices)

    sp = sub.add_parser("count", parents=[common], help="counting formulas")
    sp.add_argument("kind", choices=list(COUNT_KINDS))
    sp.add_argument("params", type=int, nargs="*")
    sp.set_defaults(func=cmd_count)

    sp = sub.add_parser("ehrhart", parents=[common], help="lattice points in dilates and the Ehrhart polynomial")
    sp.add_argument("family", choices=list(EHRHART_FAMILIES))
    sp.add_argument("params", nargs="+")
    sp.add_argument("--tmax", type=int, default=3)
    sp.set_defaults(func=cmd_ehrhart)

    sp = sub.add_parser("series", parents=[common], help="generating-function coefficients")
    sp.add_argument("kind", choices=["g", "f", "ck"])
    sp.add_argument("params", type=int, nargs="*")
    sp.add_argument("--order", type=int, default=series.DEFAULT_ORDER)
    sp.set_defaults(func=cmd_series)

    sp = sub.add_parser("verify", parents=[common], help="run the self-check suites")
    sp.add_argument("--suite", choices=["all", *verify.SUITES], default="all")
    sp.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        report = args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"parkpoly: error: {exc}", file=sys.stderr)
        return 2
    except ArithmeticError as exc:
        print(f"parkpoly: check failed: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(report.to_csv() if args.csv else report.to_json() + "\n")
    for c in report.checks:
        if not c.passed:
            print(f"FAIL {c.name}: {c.details}", file=sys.stderr)
    return 0 if report.ok else 1
