"""Self-checking suites: every formula against an independent route.

A check is ``(name, passed, details)``; ``details`` always shows both sides so
a failure can be read without rerunning anything.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial, gcd
from typing import Callable, Iterator

from . import counting, families, series, volume
from .families import XpfParams

PUBLISHED_PF_VOLUMES = [0, 1, 24, 954, 59040, 5295150, 651354480, 105393619800, 21717404916480]


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    details: str


def show(value) -> str:
    """Exact, repr-free rendering: fractions as p/q, containers element-wise."""
    if isinstance(value, (list, tuple)):
        return "(" + ", ".join(show(v) for v in value) + ")"
    return str(value)


def _compare(name: str, got, want) -> Check:
    ok = got == want
    return Check(name, ok, f"got {show(got)}, expected {show(want)}")


def _agree(name: str, values: dict) -> Check:
    distinct = set(values.values())
    shown = ", ".join(f"{k}={show(v)}" for k, v in values.items())
    return Check(name, len(distinct) == 1, shown)


# -- volume --------------------------------------------------------------------


def _pf_volume_routes(n: int) -> dict[str, object]:
    p = XpfParams(n, 1, 1)
    out = {
        "closed": volume.closed_form_value(p),
        "recursive": factorial(n) * volume.recursive_volumes(n, 1, 1)[n],
        "aw": volume.nvol_aw_recursion(n),
        "bcc": volume.nvol_bcc_recursion(n, n - 1),
    }
    if n >= 2:
        out["shephard_iv"] = volume.nvol_shephard_iv(n)
        out["shephard_v"] = volume.nvol_shephard_v(n)
    return out


def volume_checks() -> Iterator[Check]:
    for n, want in enumerate(PUBLISHED_PF_VOLUMES, 1):
        yield _compare(f"published nVol(PF_{n})", volume.closed_form_value(XpfParams(n, 1, 1)), want)
    for n in range(1, 9):
        yield _agree(f"nVol(PF_{n}) routes agree", _pf_volume_routes(n))
    for n in range(2, 6):
        yield _compare(f"permanent census n={n}", volume.count_permanent_positive(n), PUBLISHED_PF_VOLUMES[n - 1])
    for n in range(1, 5):
        for a in range(1, 4):
            for b in range(1, 3):
                p = XpfParams(n, a, b)
                # measured in R^n, so the point X_1(1, b) has volume 0
                oracle = volume.ehrhart_volume_oracle(families.xpf_constraints(p), n).normalized
                yield _compare(f"Ehrhart oracle X_{n}({a},{b})", volume.closed_form_value(p), oracle)
    for n in range(2, 21):
        yield _compare(f"WZ sum n={n}", volume.wz_difference(n), 0)
        yield _compare(f"WZ certificate n={n}", volume.wz_certificate_holds(n), True)
    for n in range(1, 7):
        for p in range(n - 1, n + 4):
            yield _agree(
                f"nVol(P({n},{p})) routes agree",
                {
                    "ck": volume.nvol_pp_ck(n, p),
                    "explicit": volume.nvol_pp_explicit(n, p),
                    "bcc": volume.nvol_bcc_recursion(n, p),
                },
            )


# -- faces and counts -----------------------------------------------------------


def faces_checks() -> Iterator[Check]:
    for n in range(1, 8):
        for a in range(1, 4):
            for b in range(1, 4):
                p = XpfParams(n, a, b)
                yield _compare(
                    f"vertex count X_{n}({a},{b})", counting.vertex_count_formula(p), len(families.xpf_vertices(p))
                )
    for n in range(1, 6):
        for a in range(1, 4):
            for b in range(1, 3):
                p = XpfParams(n, a, b)
                yield _compare(
                    f"parking function count x=({a},{b},...), n={n}",
                    counting.count_x_parking_functions(p),
                    len(counting.enumerate_x_parking_functions(p)),
                )
    for n in range(1, 5):
        for a in (1, 2):
            p = XpfParams(n, a, 1)
            yield _compare(
                f"f-vector X_{n}({a},1)", counting.f_vector_formula(p).entries, counting.brute_force_faces(p).entries
            )
    for n in range(1, 11):
        for a in (1, 2):
            yield _compare(f"Euler relation X_{n}({a},b)", counting.f_vector_formula(XpfParams(n, a)).euler_sum(), 1)
    for n in (3, 4):
        yield _compare(f"facet census PF_{n}", counting.permutahedron_facet_census(n), (n, 1))
    for n in range(1, 6):
        for p in range(n - 1, n + 3):
            yield _compare(f"P({n},{p}) is a shifted X_n", families.verify_xpf_pp(n, p), True)


# -- series ----------------------------------------------------------------------


def series_checks() -> Iterator[Check]:
    for b in range(1, 6):
        yield _compare(f"g_{b} = x exp({b} g_{b})", series.verify_functional_equation(b, 10), True)
    for a in range(1, 4):
        for b in range(1, 4):
            f = series.f_ab_series(a, b, 8)
            vols = volume.recursive_volumes(8, a, b)
            got = [f[n] for n in range(9)]
            want = [vols[n] / factorial(n) for n in range(9)]
            yield _compare(f"f_({a},{b}) coefficients = V_n/n!", got, want)
    yield _compare("c_k from sqrt(1-2x)e^x", series.ck_from_egf(10), volume.ck_sequence(10))
    yield _compare("c_k recurrence", series.ck_egf_check(10, volume.ck_sequence(10)), True)


# -- rational ----------------------------------------------------------------------


def rational_checks() -> Iterator[Check]:
    for a in range(1, 7):
        for b in range(1, 10):
            if gcd(a, b) != 1:
                continue
            yield _compare(
                f"rational vertex count ({a},{b})",
                counting.rational_vertex_count(a, b),
                len(families.rational_pf_vertices(a, b)),
            )
    for a in range(1, 6):
        for b in range(1, 8):
            if gcd(a, b) != 1:
                continue
            yield _compare(
                f"rational parking functions ({a},{b})", counting.count_rational_parking_functions(a, b), b ** (a - 1)
            )


# -- weakly increasing ---------------------------------------------------------------


def weakly_checks() -> Iterator[Check]:
    for n in range(1, 5):
        for a in range(1, 4):
            for b in range(1, 3):
                p = XpfParams(n, a, b)
                got = [counting.wipf_ehrhart_formula(p, t) for t in range(5)]
                want = [counting.wipf_lattice_points_brute(p, t) for t in range(5)]
                yield _compare(f"X^w_{n}({a},{b}) dilate counts", got, want)
    for n in range(1, 7):
        yield _compare(
            f"X^w_{n}(1,1) lattice points = Catalan",
            counting.wipf_lattice_points(XpfParams(n, 1, 1), 1),
            counting.catalan(n),
        )
    for n in range(2, 6):
        sys = families.ps_constraints(families.wipf_ps_vector(XpfParams(n, 1, 1)))
        yield _compare(
            f"nVol(X^w_{n}(1,1))", volume.nvol_wipf(n), volume.ehrhart_volume_oracle(sys, n - 1).normalized
        )
    for n in range(2, 6):
        yield _compare(f"X^w_{n}(1,1) facets/vertices/edges", counting.wipf_face_counts(n), counting.wipf_face_counts_brute(n))


SUITES: dict[str, Callable[[], Iterator[Check]]] = {
    "volume": volume_checks,
    "faces": faces_checks,
    "series": series_checks,
    "rational": rational_checks,
    "weakly": weakly_checks,
}


def run_suite(name: str) -> list[Check]:
    """Run one suite; an exception inside a suite becomes a failed check."""
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    out = []
    it = SUITES[name]()
    while True:
        try:
            check = next(it)
        except StopIteration:
            break
        except Exception as exc:  # a crashing formula is a failed check, not a crash
            out.append(Check(f"{name}: raised", False, f"{type(exc).__name__}: {exc}"))
            break
        out.append(check)
    return out


def run(suite: str = "all") -> list[Check]:
    names = list(SUITES) if suite == "all" else [suite]
    return [c for name in names for c in run_suite(name)]
