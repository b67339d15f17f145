"""Named verification suites comparing the counting formulas with each
other and with exhaustive enumeration.

Every suite returns a :class:`VerificationReport`.  Triangles are always
obtained through :func:`mdtrees.count_tables.build_triangle`, so a test can
substitute a tampered triangle and watch the suites fail.
"""

import time
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache

from mdtrees import count_tables
from mdtrees import enumeration_oracle as oracle
from mdtrees.count_tables import prescribed_root_forest_count, ramanujan_poly, z_count
from mdtrees.numeric_core import binomial, catalan, factorial, rising_factorial
from mdtrees.tree_domain import decompose, graft

__all__ = [
    "SUITES",
    "Check",
    "VerificationReport",
    "run_suite",
    "verify_against_oracles",
    "verify_decomposition",
    "verify_ramanujan",
    "verify_row_sums",
    "verify_shor_link",
]


@dataclass
class Check:
    id: str
    params: dict
    expected: object
    actual: object
    passed: bool = None
    note: str = None

    def __post_init__(self):
        if self.passed is None:
            self.passed = self.expected == self.actual

    def to_dict(self):
        out = {
            "id": self.id,
            "params": self.params,
            "expected": _as_text(self.expected),
            "actual": _as_text(self.actual),
            "passed": self.passed,
        }
        if self.note:
            out["note"] = self.note
        return out


def _as_text(value):
    if isinstance(value, (list, tuple)):
        return [str(v) for v in value]
    return str(value)


@dataclass
class VerificationReport:
    suite: str
    checks: list = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def all_passed(self):
        return all(c.passed for c in self.checks)

    @property
    def failures(self):
        return [c for c in self.checks if not c.passed]

    def to_dict(self):
        return {
            "suite": self.suite,
            "checks": [c.to_dict() for c in self.checks],
            "all_passed": self.all_passed,
            "elapsed_ms": round(self.elapsed * 1000, 3),
        }

    def summary(self):
        passed = sum(c.passed for c in self.checks)
        status = "PASS" if self.all_passed else "FAIL"
        return f"{status} {self.suite}: {passed}/{len(self.checks)} checks passed"


def _timed(suite):
    def decorate(fn):
        def run(*args, **kwargs):
            start = time.perf_counter()
            report = VerificationReport(suite, fn(*args, **kwargs))
            report.elapsed = time.perf_counter() - start
            return report

        run.__name__ = fn.__name__
        run.__doc__ = fn.__doc__
        run.__wrapped__ = fn
        return run

    return decorate


@_timed("rowsum")
def verify_row_sums(max_n):
    """Each row of the O triangle sums to ``(n+1)! C_n = (n+1)^(n)``."""
    o = count_tables.build_triangle("O", max_n)
    checks = []
    for n in range(max_n + 1):
        total = sum(o.row(n))
        checks.append(Check("rowsum.rising", {"n": n}, rising_factorial(n + 1, n), total))
        checks.append(Check("rowsum.catalan", {"n": n}, factorial(n + 1) * catalan(n), total))
    return checks


@_timed("oracle")
def verify_against_oracles(max_n, cap=oracle.DEFAULT_CAP):
    """O, Z and F triangles against exhaustive censuses."""
    oracle.check_cap(max_n, cap)
    tri = {kind: count_tables.build_triangle(kind, max_n) for kind in "OZF"}
    checks = []
    for n in range(max_n + 1):
        checks.append(Check("oracle.o", {"n": n}, list(tri["O"].row(n)), _row(oracle.tabulate_o(n, cap=None).census, n)))
    for n in range(max_n + 1):
        direct = oracle.tabulate_family("Z", n, cap=None).census
        checks.append(Check("oracle.z", {"n": n}, list(tri["Z"].row(n)), _row(direct, n)))
        screened = oracle.z_filter_census(n, cap=None)
        checks.append(Check("oracle.z_filter", {"n": n}, list(tri["Z"].row(n)), _row(screened, n)))
    for n in range(max_n + 1):
        census = oracle.tabulate_family("F", n, cap=None).census
        for k in range(n + 1):
            check = Check("oracle.f", {"n": n, "k": k}, tri["F"][n, k], census.get(k, 0))
            if k == n and n >= 1:
                literal = count_tables.f_count_literal(n, k)
                check.note = (
                    f"closed-form product read literally gives {literal}; "
                    f"adopted boundary value 1 matches enumeration"
                )
            checks.append(check)
    return checks


def _row(census, n):
    return [census.get(k, 0) for k in range(n + 1)]


@_timed("shor")
def verify_shor_link(max_n, cap=oracle.DEFAULT_CAP):
    """``z(n, k) = r(n+1, k)``, plus r rows against the improper-edge census."""
    z = count_tables.build_triangle("Z", max_n)
    r = count_tables.build_triangle("R", max_n + 1)
    checks = []
    for n in range(max_n + 1):
        for k in range(n + 1):
            checks.append(Check("shor.z_eq_r", {"n": n, "k": k}, z[n, k], r[n + 1, k]))
    census_rows = max_n + 1 if cap is None else min(max_n + 1, cap)
    for n in range(1, census_rows + 1):
        census = oracle.tabulate_family("RootedUnordered", n, cap=None).census
        checks.append(Check("shor.census", {"n": n}, list(r.row(n)), [census[k] for k in range(n)]))
    return checks


@_timed("ramanujan")
def verify_ramanujan(max_n):
    """Coefficients of ``R_n`` against r rows, and the differential
    recurrence against the coefficient recurrence."""
    r = count_tables.build_triangle("R", max_n)
    checks = []
    for n in range(1, max_n + 1):
        poly = ramanujan_poly(n)
        coeffs = [poly[i] for i in range(n)]
        checks.append(Check("ramanujan.coefficients", {"n": n}, list(r.row(n)), coeffs))
    for n in range(1, max_n):
        prev = ramanujan_poly(n)
        # coefficient i of n(1+x)R + x^2 R' is n a_i + (n+i-1) a_{i-1}
        stepped = [n * prev[i] + (n + i - 1) * prev[i - 1] if i else n * prev[0] for i in range(n + 1)]
        nxt = ramanujan_poly(n + 1)
        checks.append(Check("ramanujan.recurrence", {"n": n + 1}, stepped, [nxt[i] for i in range(n + 1)]))
    return checks


@lru_cache(maxsize=None)
def _decomposition_groups(n):
    groups = Counter()
    round_trip_failures = 0
    for t in oracle.enumerate_ordered_trees(range(n + 1)):
        z_part, y_part = decompose(t)
        if graft(z_part, y_part) != t:
            round_trip_failures += 1
        m = z_part.size() - 1
        k = m - len(y_part)
        groups[k, m] += 1
    return dict(groups), round_trip_failures


@_timed("decomposition")
def verify_decomposition(max_n, cap=oracle.DEFAULT_CAP):
    """Group O_n by (MD edges k, |Z| - 1 = m) and compare each group with
    its term of the summation formula; check graft undoes decompose."""
    oracle.check_cap(max_n, cap)
    checks = []
    for n in range(max_n + 1):
        groups, failures = _decomposition_groups(n)
        checks.append(Check("decomposition.round_trip", {"n": n}, 0, failures))
        for k in range(n + 1):
            for m in range(k, n + 1):
                term = binomial(n + 1, m + 1) * z_count(m, k) * prescribed_root_forest_count(n - k, m - k)
                checks.append(
                    Check("decomposition.group", {"n": n, "k": k, "m": m}, term, groups.get((k, m), 0))
                )
    return checks


SUITES = {
    "rowsum": verify_row_sums,
    "oracle": verify_against_oracles,
    "shor": verify_shor_link,
    "ramanujan": verify_ramanujan,
    "decomposition": verify_decomposition,
}

_CAPPED = {"oracle", "shor", "decomposition"}


def run_suite(name, max_n, cap=oracle.DEFAULT_CAP):
    """Run one suite by name, or every suite for ``"all"``; returns a list
    of reports."""
    if name == "all":
        names = list(SUITES)
    elif name in SUITES:
        names = [name]
    else:
        raise ValueError(f"unknown suite {name!r}")
    for each in names:
        if each in ("oracle", "decomposition"):
            oracle.check_cap(max_n, cap)
    reports = []
    for each in names:
        if each in _CAPPED:
            reports.append(SUITES[each](max_n, cap=cap))
        else:
            reports.append(SUITES[each](max_n))
    return reports
