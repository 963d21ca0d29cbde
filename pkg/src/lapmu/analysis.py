"""p-grid sweeps, the n^(2-2/p) bound, and the theorem-verification report.

A sweep samples mu over a grid of finite p values bracketed by the exact
endpoints (maximum degree at p = 1, 4 * maxcut at p = infinity) and refuses
to return silently inconsistent data. verify_theorems runs one named check
per claim and reports PASS/FAIL/SKIP/INFO lines plus a JSON mirror.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from io import StringIO

import numpy as np

from .graph import Graph, max_degree
from .kernels import quadratic_form
from .oracles import (
    DEFAULT_MAXCUT_GUARD,
    has_spanning_balanced_biclique,
    lap_top_eigenpair,
    max_cut_bruteforce,
    mu_one,
)
from .solvers import MuEstimate, SolverConfig, multistart, threshold_cut

DEFAULT_GRID = (2.0, 3.0, 4.0, 8.0, 16.0, 32.0)

# slack for nondecreasing sweep values: solver outputs are lower bounds on
# the truth, so small inversions can only come from solver noise
MONOTONE_SLACK = 1e-6
BOUND_SLACK = 1e-8
EQUALITY_RTOL = 1e-6
EIGEN_CROSSCHECK_TOL = 1e-7
STRICT_MARGIN = 1e-9

METHOD_EXACT_DEGREE = "exact-degree"
METHOD_EXACT_MAXCUT = "exact-maxcut"
METHOD_EXACT_EIGEN = "exact-eigen"
METHOD_POWER = "power-iteration"
METHOD_GRADIENT = "projected-gradient"
METHOD_CLOSED_FORM = "closed-form"

CSV_HEADER = "p,value,method,residual,bound,iterations"

PASS = "PASS"
FAIL = "FAIL"
SKIP = "SKIP"
INFO = "INFO"


class AnalysisError(RuntimeError):
    """A sweep consistency check failed; upstream solver output is bad."""


@dataclass(frozen=True)
class SweepRow:
    """One sampled point of p -> mu(p); bound is n^(2-2/p) where p >= 2."""

    p: float
    value: float
    method: str
    residual: float | None = None
    bound: float | None = None
    iterations: int | None = None


@dataclass(frozen=True)
class CheckResult:
    check_id: str
    status: str
    measured: dict
    tolerance: float | None
    details: str


@dataclass(frozen=True)
class VerificationReport:
    n: int
    edge_count: int
    checks: tuple[CheckResult, ...]

    @property
    def failed(self) -> tuple[CheckResult, ...]:
        return tuple(c for c in self.checks if c.status == FAIL)

    def passed(self) -> bool:
        return not self.failed


def upper_bound(n: int, p: float) -> float:
    """The bound n^(2-2/p), valid for p >= 2 (n^2 at p = infinity)."""
    if n < 1:
        raise ValueError("needs at least one vertex")
    if p < 2:
        raise ValueError("bound holds for p >= 2")
    return float(n) ** (2.0 - (0.0 if p == math.inf else 2.0 / p))


def solver_method(p: float) -> str:
    return METHOD_POWER if p >= 2 else METHOD_GRADIENT


def sweep(
    g: Graph,
    p_grid=DEFAULT_GRID,
    cfg: SolverConfig | None = None,
    maxcut_guard: int = DEFAULT_MAXCUT_GUARD,
) -> list[SweepRow]:
    """Sample mu over a strictly increasing grid of finite p in (1, inf).

    Emits an exact p = 1 row first, one multistart row per grid value (the
    p = 2 row is cross-checked against the eigenvalue oracle), and an exact
    p = infinity row when n is within the max-cut guard. Raises
    AnalysisError rather than returning rows that violate monotonicity or
    the exact limits.
    """
    cfg = cfg or SolverConfig()
    grid = [float(p) for p in p_grid]
    if any(not 1.0 < p < math.inf for p in grid):
        raise ValueError("grid values must lie in (1, inf)")
    if any(b <= a for a, b in zip(grid, grid[1:])):
        raise ValueError("grid must be sorted strictly increasing")
    if g.edge_count == 0:
        raise ValueError("graph must have at least one edge")

    rows = [SweepRow(1.0, float(mu_one(g)), METHOD_EXACT_DEGREE)]
    for p in grid:
        est = multistart(g, p, cfg)
        bound = upper_bound(g.n, p) if p >= 2 else None
        rows.append(SweepRow(p, est.value, solver_method(p), est.residual, bound, est.iterations))
        if p == 2.0:
            eigen = lap_top_eigenpair(g).value
            if abs(est.value - eigen) > EIGEN_CROSSCHECK_TOL:
                raise AnalysisError(
                    f"p=2 solver value {est.value!r} disagrees with eigenvalue {eigen!r}"
                )

    mu_inf = None
    if g.n <= maxcut_guard:
        mu_inf = 4.0 * max_cut_bruteforce(g, maxcut_guard).cut_size
        rows.append(
            SweepRow(math.inf, mu_inf, METHOD_EXACT_MAXCUT, None, upper_bound(g.n, math.inf), None)
        )
    else:
        warnings.warn(
            f"p=inf row omitted: n = {g.n} exceeds max-cut guard {maxcut_guard}",
            RuntimeWarning,
            stacklevel=2,
        )

    for prev, cur in zip(rows, rows[1:]):
        if cur.value < prev.value - MONOTONE_SLACK:
            raise AnalysisError(
                f"sweep not nondecreasing: mu({prev.p}) = {prev.value!r} > mu({cur.p}) = {cur.value!r}"
            )
    for row in rows:
        if mu_inf is not None and row.value > mu_inf + BOUND_SLACK:
            raise AnalysisError(f"mu({row.p}) = {row.value!r} exceeds the p=inf limit {mu_inf!r}")
        if row.bound is not None and row.value > row.bound + BOUND_SLACK:
            raise AnalysisError(f"mu({row.p}) = {row.value!r} exceeds the bound {row.bound!r}")
    return rows


def _csv_field(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        if math.isinf(value):
            return "inf"
        return format(value, ".17g")
    return str(value)


def emit_csv(rows, destination) -> None:
    """Write sweep rows as CSV; floats carry 17 significant digits."""
    destination.write(CSV_HEADER + "\n")
    for row in rows:
        fields = (
            _csv_field(row.p),
            _csv_field(row.value),
            row.method,
            _csv_field(row.residual),
            _csv_field(row.bound),
            _csv_field(row.iterations),
        )
        destination.write(",".join(fields) + "\n")


def sweep_csv(rows) -> str:
    buffer = StringIO()
    emit_csv(rows, buffer)
    return buffer.getvalue()


def _fmt(x: float) -> str:
    return format(float(x), ".12g")


def verify_theorems(
    g: Graph,
    cfg: SolverConfig | None = None,
    grid=DEFAULT_GRID,
    maxcut_guard: int = DEFAULT_MAXCUT_GUARD,
) -> VerificationReport:
    """Run every named claim check on one graph and collect the results.

    Asserted checks report PASS/FAIL; checks blocked by the max-cut guard
    report SKIP; the threshold-cut comparison is INFO by design (the
    relation between intermediate-p maximizers and cuts is observational).
    """
    cfg = cfg or SolverConfig()
    if g.edge_count == 0:
        raise ValueError("graph must have at least one edge")
    grid = [float(p) for p in grid]
    checks: list[CheckResult] = []

    degree = max_degree(g)
    mu1 = float(mu_one(g))
    basis = np.zeros(g.n)
    basis[int(np.argmax(g.degree_array))] = 1.0
    f_basis = quadratic_form(g, basis)
    ok = mu1 == float(degree) and f_basis == float(degree)
    checks.append(
        CheckResult(
            "mu1-max-degree",
            PASS if ok else FAIL,
            {"mu_1": mu1, "max_degree": degree, "objective_at_basis_vector": f_basis},
            0.0,
            f"mu_1={_fmt(mu1)} max_degree={degree} F(e_a)={_fmt(f_basis)}",
        )
    )

    eigen = lap_top_eigenpair(g)
    mu2 = eigen.value

    cut = None
    mu_inf = None
    if g.n <= maxcut_guard:
        cut = max_cut_bruteforce(g, maxcut_guard)
        mu_inf = 4.0 * cut.cut_size

    if cut is None:
        checks.append(
            CheckResult(
                "muinf-maxcut",
                SKIP,
                {"n": g.n, "guard": maxcut_guard},
                None,
                f"skipped: n = {g.n} exceeds max-cut guard {maxcut_guard}",
            )
        )
    else:
        signs = np.where(np.asarray(cut.side_mask), 1.0, -1.0)
        f_cut = quadratic_form(g, signs)
        ok = f_cut == mu_inf
        checks.append(
            CheckResult(
                "muinf-maxcut",
                PASS if ok else FAIL,
                {"maxcut": cut.cut_size, "mu_inf": mu_inf, "objective_at_cut_vector": f_cut},
                0.0,
                f"maxcut={cut.cut_size} mu_inf={_fmt(mu_inf)} F(x_cut)={_fmt(f_cut)}",
            )
        )

    if mu_inf is None:
        ok = mu1 < mu2 - STRICT_MARGIN
        checks.append(
            CheckResult(
                "strict-increase",
                PASS if ok else FAIL,
                {"mu_1": mu1, "mu_2": mu2},
                STRICT_MARGIN,
                f"mu_1={_fmt(mu1)} < mu_2={_fmt(mu2)}; mu_inf skipped (guard)",
            )
        )
    else:
        ok = mu1 < mu2 - STRICT_MARGIN and mu2 < mu_inf - STRICT_MARGIN
        checks.append(
            CheckResult(
                "strict-increase",
                PASS if ok else FAIL,
                {"mu_1": mu1, "mu_2": mu2, "mu_inf": mu_inf},
                STRICT_MARGIN,
                f"mu_1={_fmt(mu1)} < mu_2={_fmt(mu2)} < mu_inf={_fmt(mu_inf)}",
            )
        )

    estimates: dict[float, MuEstimate] = {p: multistart(g, p, cfg) for p in grid}

    values = [estimates[p].value for p in grid]
    ok = all(b >= a - MONOTONE_SLACK for a, b in zip(values, values[1:]))
    checks.append(
        CheckResult(
            "grid-monotone",
            PASS if ok else FAIL,
            {"grid": list(grid), "values": values},
            MONOTONE_SLACK,
            " ".join(f"mu({_fmt(p)})={_fmt(v)}" for p, v in zip(grid, values)),
        )
    )

    biclique = has_spanning_balanced_biclique(g)
    bound_ps = [p for p in grid if p >= 2]
    bounds = {p: upper_bound(g.n, p) for p in bound_ps}
    bound_ok = all(estimates[p].value <= bounds[p] + BOUND_SLACK for p in bound_ps)
    rel_gaps = {p: (bounds[p] - estimates[p].value) / bounds[p] for p in bound_ps}
    measured = {
        "bounds": {str(p): bounds[p] for p in bound_ps},
        "values": {str(p): estimates[p].value for p in bound_ps},
        "relative_gaps": {str(p): rel_gaps[p] for p in bound_ps},
        "balanced_biclique": biclique,
    }
    gap_text = " ".join(f"gap({_fmt(p)})={rel_gaps[p]:.3e}" for p in bound_ps)
    if g.n % 2 == 1:
        status = SKIP if bound_ok else FAIL
        details = (
            f"bound mu(p) <= n^(2-2/p) {'holds' if bound_ok else 'VIOLATED'} at all grid p; "
            "n odd -- equality condition out of scope"
        )
    else:
        equal_at = {p: rel_gaps[p] <= EQUALITY_RTOL for p in bound_ps}
        consistent = all(equal_at[p] == biclique for p in bound_ps)
        status = PASS if bound_ok and consistent else FAIL
        details = (
            f"bound holds={bound_ok} biclique={biclique} "
            f"equality={'all' if all(equal_at.values()) else 'none' if not any(equal_at.values()) else 'mixed'} "
            + gap_text
        )
    checks.append(CheckResult("bound-equality", status, measured, EQUALITY_RTOL, details))

    lemma_ps = [p for p in grid if p >= 2]
    caps = {p: float(g.n) ** (1.0 - 2.0 / p) * mu2 for p in lemma_ps}
    ok = all(estimates[p].value <= caps[p] + BOUND_SLACK for p in lemma_ps)
    checks.append(
        CheckResult(
            "eigen-bound",
            PASS if ok else FAIL,
            {
                "mu_2": mu2,
                "caps": {str(p): caps[p] for p in lemma_ps},
                "values": {str(p): estimates[p].value for p in lemma_ps},
            },
            BOUND_SLACK,
            " ".join(f"F({_fmt(p)})={_fmt(estimates[p].value)}<=n^(1-2/p)*mu_2={_fmt(caps[p])}" for p in lemma_ps),
        )
    )

    cuts = {p: threshold_cut(g, estimates[p].x).cut_size for p in grid}
    cut_note = f"maxcut={cut.cut_size}" if cut is not None else "maxcut unavailable (guard)"
    checks.append(
        CheckResult(
            "cut-report",
            INFO,
            {
                "threshold_cuts": {str(p): cuts[p] for p in grid},
                "maxcut": cut.cut_size if cut is not None else None,
            },
            None,
            " ".join(f"cut({_fmt(p)})={cuts[p]}" for p in grid) + " " + cut_note,
        )
    )

    return VerificationReport(g.n, g.edge_count, tuple(checks))


def render_report(report: VerificationReport) -> str:
    """Line-oriented text form: one "CHECK <id> <STATUS> <details>" per check."""
    lines = [f"GRAPH n={report.n} edges={report.edge_count}"]
    lines.extend(f"CHECK {c.check_id} {c.status} {c.details}" for c in report.checks)
    return "\n".join(lines) + "\n"


def _jsonable(value):
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, (np.floating, np.integer)):
        return value.item()
    return value


def report_json(report: VerificationReport) -> dict:
    """JSON-ready mirror of the report fields."""
    return {
        "graph": {"n": report.n, "edges": report.edge_count},
        "passed": report.passed(),
        "checks": [
            {
                "id": c.check_id,
                "status": c.status,
                "measured": _jsonable(c.measured),
                "tolerance": c.tolerance,
                "details": c.details,
            }
            for c in report.checks
        ],
    }
