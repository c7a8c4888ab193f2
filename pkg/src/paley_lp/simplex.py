"""Dense two-phase simplex.

Problems are stated as::

    max|min  c @ x
    s.t.     A_ub @ x <= b_ub
             A_eq @ x == b_eq
             x[j] >= 0 unless free[j]

The solver works on a dense tableau that is periodically rebuilt from the
original data, so round-off does not accumulate over long pivot sequences.
Final primal and dual values are recomputed from the optimal basis.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

import numpy as np
from scipy.linalg.blas import dger

log = logging.getLogger(__name__)

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"
UNSTABLE = "numerically_unstable"
ITERATION_LIMIT = "iteration_limit"

PIVOT_TOL = 1e-9
ZERO_PIVOT = 1e-12
HARRIS_DELTA = 1e-10
PERTURB = 1e-7  # relative size of the phase-2 bound perturbation


class LPStructureError(ValueError):
    """Inconsistent dimensions or non-finite data in a LinearProgram."""


class SolverError(RuntimeError):
    """An LP that must be solvable came back with a non-optimal status."""

    def __init__(self, message: str, solution: "LPSolution | None" = None):
        super().__init__(message)
        self.solution = solution


def _as_matrix(A, nvar: int, name: str) -> np.ndarray:
    if A is None:
        return np.zeros((0, nvar))
    A = np.atleast_2d(np.asarray(A, dtype=float))
    if A.size == 0 and A.shape[1] != nvar:
        return np.zeros((0, nvar))
    if A.shape[1] != nvar:
        raise LPStructureError(f"{name} has {A.shape[1]} columns, expected {nvar}")
    return A


@dataclass
class LinearProgram:
    c: np.ndarray
    A_ub: np.ndarray | None = None
    b_ub: np.ndarray | None = None
    A_eq: np.ndarray | None = None
    b_eq: np.ndarray | None = None
    free: np.ndarray | None = None
    sense: str = "max"

    def __post_init__(self):
        self.c = np.asarray(self.c, dtype=float).ravel()
        nvar = len(self.c)
        self.A_ub = _as_matrix(self.A_ub, nvar, "A_ub")
        self.A_eq = _as_matrix(self.A_eq, nvar, "A_eq")
        self.b_ub = np.asarray([] if self.b_ub is None else self.b_ub, dtype=float).ravel()
        self.b_eq = np.asarray([] if self.b_eq is None else self.b_eq, dtype=float).ravel()
        if len(self.b_ub) != self.A_ub.shape[0]:
            raise LPStructureError(f"b_ub has length {len(self.b_ub)}, A_ub has {self.A_ub.shape[0]} rows")
        if len(self.b_eq) != self.A_eq.shape[0]:
            raise LPStructureError(f"b_eq has length {len(self.b_eq)}, A_eq has {self.A_eq.shape[0]} rows")
        self.free = (np.zeros(nvar, dtype=bool) if self.free is None
                     else np.asarray(self.free, dtype=bool).ravel())
        if len(self.free) != nvar:
            raise LPStructureError(f"free mask has length {len(self.free)}, expected {nvar}")
        if self.sense not in ("max", "min"):
            raise LPStructureError(f"sense must be 'max' or 'min', got {self.sense!r}")
        for name in ("c", "A_ub", "b_ub", "A_eq", "b_eq"):
            if not np.all(np.isfinite(getattr(self, name))):
                raise LPStructureError(f"{name} contains NaN or Inf")

    @property
    def num_vars(self) -> int:
        return len(self.c)

    def residuals(self, x: np.ndarray) -> dict[str, float]:
        """Worst violation of each constraint family at `x`."""
        x = np.asarray(x, dtype=float)
        ub = self.A_ub @ x - self.b_ub
        eq = self.A_eq @ x - self.b_eq
        return {
            "ub": float(max(ub.max(initial=0.0), 0.0)),
            "eq": float(np.abs(eq).max(initial=0.0)),
            "bounds": float(max(-x[~self.free].min(initial=0.0), 0.0)),
        }

    def dual_objective(self, y_ub, y_eq) -> float:
        return float(self.b_ub @ y_ub + self.b_eq @ y_eq)


@dataclass
class LPSolution:
    """Solver result.

    Multipliers follow the sensitivity convention y = d(optimum)/d(rhs), so
    ``b_ub @ dual_ub + b_eq @ dual_eq`` equals the optimum; ``dual_ub`` is
    >= 0 for max problems and <= 0 for min problems.
    """

    status: str
    objective_value: float = float("nan")
    primal: np.ndarray | None = None
    dual_ub: np.ndarray | None = None
    dual_eq: np.ndarray | None = None
    iterations: int = 0
    ray: np.ndarray | None = None
    message: str = ""
    basis: list[int] = field(default_factory=list, repr=False)

    @property
    def dual(self) -> np.ndarray | None:
        if self.dual_ub is None:
            return None
        return np.concatenate([self.dual_ub, self.dual_eq])

    @property
    def is_optimal(self) -> bool:
        return self.status == OPTIMAL


class _Tableau:
    """B^{-1}[A | b] with reduced costs, for maximisation over Ax=b, x>=0."""

    def __init__(self, A, b, c, basis, refactor_every):
        self.A, self.b, self.c = A, b, c
        self.basis = list(basis)
        self.refactor_every = refactor_every
        self.since_refactor = 0
        self.refactor()

    def refactor(self):
        B = self.A[:, self.basis]
        sol = np.linalg.solve(B, np.column_stack([self.A, self.b]))
        self.T = np.asfortranarray(sol[:, :-1])  # column-major for in-place rank-1 updates
        self.beta = sol[:, -1].copy()
        self.beta[np.abs(self.beta) < 1e-13] = 0.0
        self.y = np.linalg.solve(B.T, self.c[self.basis])
        self.d = self.c - self.y @ self.A
        self.d[self.basis] = 0.0
        self.since_refactor = 0

    @property
    def objective(self) -> float:
        return float(self.c[self.basis] @ self.beta)

    def pivot(self, r: int, e: int):
        T = self.T
        piv = T[r, e]
        row = T[r] / piv
        br = self.beta[r] / piv
        col = T[:, e].copy()
        col[r] = 0.0
        self.T = T = dger(-1.0, col, row, a=T, overwrite_a=1)
        self.beta -= col * br
        T[r] = row
        self.beta[r] = br
        self.d -= self.d[e] * row
        self.d[e] = 0.0
        self.basis[r] = e
        self.since_refactor += 1
        if self.since_refactor >= self.refactor_every:
            self.refactor()


def _run(tab: _Tableau, opt_tol: float, max_iter: int, eligible: np.ndarray,
         retire_from: int | None = None) -> tuple[str, int]:
    """Pivot to optimality. Returns (status, iterations).

    Columns with index >= `retire_from` (phase-1 artificials) become
    ineligible once they leave the basis.
    """
    m, N = tab.T.shape
    stall_limit = 10 * (m + N)
    best_obj = tab.objective
    stall = 0
    bland = False
    it = 0
    while it < max_iter:
        d = np.where(eligible, tab.d, -np.inf)
        cand = np.flatnonzero(d > opt_tol)
        if cand.size == 0:
            if tab.since_refactor:
                tab.refactor()
                continue
            return OPTIMAL, it
        order = cand if bland else cand[np.argsort(-d[cand], kind="stable")]
        entered = False
        saw_tiny = False
        for e in order:
            col = tab.T[:, e]
            cmax = np.abs(col).max(initial=0.0)
            pos = np.flatnonzero(col > PIVOT_TOL * max(1.0, cmax))
            if pos.size == 0:
                if np.any(col > ZERO_PIVOT):
                    saw_tiny = True
                    continue
                if tab.since_refactor:
                    break  # confirm the ray on a fresh factorisation
                tab.ray_col = int(e)
                return UNBOUNDED, it
            beta = np.maximum(tab.beta[pos], 0.0)
            if bland:
                ratios = beta / col[pos]
                rmin = ratios.min()
                ties = pos[ratios <= rmin + 1e-12 * (1.0 + abs(rmin))]
                r = int(min(ties, key=lambda i: tab.basis[i]))
            else:
                # Harris two-pass: relax by HARRIS_DELTA, then take the largest pivot
                bound = ((beta + HARRIS_DELTA) / col[pos]).min()
                ties = pos[beta / col[pos] <= bound]
                r = int(ties[np.argmax(col[ties])])
            leaving = tab.basis[r]
            tab.pivot(r, int(e))
            if retire_from is not None and leaving >= retire_from:
                eligible[leaving] = False
            it += 1
            entered = True
            break
        if not entered:
            if tab.since_refactor:
                tab.refactor()
                continue
            return UNSTABLE, it
        obj = tab.objective
        if obj > best_obj + 1e-12 * (1.0 + abs(best_obj)):
            best_obj, stall = obj, 0
        else:
            stall += 1
            if stall > stall_limit and not bland:
                log.debug("stalled for %d pivots; switching to Bland's rule", stall)
                bland = True
    return ITERATION_LIMIT, it


def _dual_cleanup(tab: _Tableau, max_iter: int) -> tuple[str, int]:
    """Dual simplex pivots from a dual feasible basis until beta >= 0."""
    eligible = np.ones(tab.T.shape[1], dtype=bool)
    it = 0
    while it < max_iter:
        eligible[:] = True
        eligible[tab.basis] = False
        thresh = 1e-12 * (1.0 + np.abs(tab.beta).max(initial=0.0))
        r = int(np.argmin(tab.beta))
        if tab.beta[r] >= -thresh:
            if tab.since_refactor:
                tab.refactor()
                continue
            return OPTIMAL, it
        row = tab.T[r]
        rmax = np.abs(row).max(initial=0.0)
        pos = np.flatnonzero(eligible & (row < -PIVOT_TOL * max(1.0, rmax)))
        if pos.size == 0:
            if tab.since_refactor:
                tab.refactor()
                continue
            return INFEASIBLE, it
        d = np.minimum(tab.d[pos], 0.0)
        bound = ((d - HARRIS_DELTA) / row[pos]).min()
        ties = pos[d / row[pos] <= bound]
        tab.pivot(r, int(ties[np.argmax(-row[ties])]))
        it += 1
    return ITERATION_LIMIT, it


def _phase2(tab: _Tableau, b: np.ndarray, opt_tol: float, max_iter: int) -> tuple[str, int]:
    """Primal simplex on randomly widened bounds, then restore `b` and repair.

    Theta-type LPs have vertices where hundreds of constraints are tight at
    once; without the perturbation Dantzig pricing can spend tens of
    thousands of degenerate pivots on a single vertex and drift into a
    singular basis.
    """
    eligible = np.ones(tab.T.shape[1], dtype=bool)
    rng = np.random.default_rng(0)
    delta = PERTURB * (1.0 + np.abs(tab.beta)) * rng.uniform(0.5, 1.0, len(tab.beta))
    tab.b = b + tab.A[:, tab.basis] @ delta
    tab.refactor()
    status, it = _run(tab, opt_tol, max_iter, eligible)
    if status != OPTIMAL:
        return status, it
    tab.b = b
    tab.refactor()
    total = it
    for _ in range(5):
        status, it = _dual_cleanup(tab, max_iter - total)
        total += it
        if status != OPTIMAL:
            return (UNSTABLE if status == INFEASIBLE else status), total
        status, it = _run(tab, opt_tol, max_iter - total, eligible)
        total += it
        if status != OPTIMAL or it == 0:
            return status, total
    return UNSTABLE, total


def solve(lp: LinearProgram, feas_tol: float = 1e-9, opt_tol: float = 1e-9,
          max_iter: int = 200_000, refactor_every: int | None = None) -> LPSolution:
    """Solve `lp` by two-phase simplex.

    The tableau is rebuilt from the original data every `refactor_every`
    pivots (default max(100, rows // 2)).

    Never returns a wrong optimum: a singular basis or residuals above
    `feas_tol` give status ``numerically_unstable``.
    """
    try:
        return _solve(lp, feas_tol, opt_tol, max_iter, refactor_every)
    except np.linalg.LinAlgError as exc:
        return LPSolution(status=UNSTABLE, message=f"basis factorisation failed: {exc}")


def _solve(lp, feas_tol, opt_tol, max_iter, refactor_every) -> LPSolution:
    nvar = lp.num_vars
    m_ub, m_eq = len(lp.b_ub), len(lp.b_eq)
    m = m_ub + m_eq
    if refactor_every is None:
        refactor_every = max(100, m // 2)

    # structural columns: x = P @ z, z >= 0, free vars split into z+ - z-
    free_idx = np.flatnonzero(lp.free)
    P = np.hstack([np.eye(nvar), -np.eye(nvar)[:, free_idx]])
    nz = P.shape[1]
    A0 = np.vstack([lp.A_ub, lp.A_eq]) @ P
    b = np.concatenate([lp.b_ub, lp.b_eq])
    sign = np.where(b < 0, -1.0, 1.0)
    S = np.zeros((m, m_ub))
    S[np.arange(m_ub), np.arange(m_ub)] = 1.0
    A = np.hstack([A0, S]) * sign[:, None]
    b = b * sign
    c = np.concatenate([lp.c @ P, np.zeros(m_ub)])
    if lp.sense == "min":
        c = -c
    ncol = A.shape[1]

    basis = [-1] * m
    for i in range(m_ub):
        if sign[i] > 0:
            basis[i] = nz + i
    art_rows = [i for i in range(m) if basis[i] < 0]
    iters = 0

    if art_rows:
        na = len(art_rows)
        Art = np.zeros((m, na))
        Art[art_rows, np.arange(na)] = 1.0
        A1 = np.hstack([A, Art])
        for j, i in enumerate(art_rows):
            basis[i] = ncol + j
        c1 = np.concatenate([np.zeros(ncol), -np.ones(na)])
        tab = _Tableau(A1, b, c1, basis, refactor_every)
        eligible = np.ones(A1.shape[1], dtype=bool)
        eligible[ncol:] = False  # artificials start basic and never re-enter
        status, it = _run(tab, opt_tol, max_iter, eligible, retire_from=ncol)
        iters += it
        if status != OPTIMAL:
            return LPSolution(status=status, iterations=iters, message="phase 1 did not finish")
        infeas = -tab.objective
        if infeas > feas_tol * (1.0 + np.abs(b).max(initial=0.0)):
            return LPSolution(status=INFEASIBLE, iterations=iters,
                              message=f"phase 1 optimum {infeas:.3e} > 0")
        # drive artificials out of the basis; drop rows that are redundant
        keep = np.ones(m, dtype=bool)
        for r in range(m):
            if tab.basis[r] < ncol:
                continue
            row = tab.T[r, :ncol].copy()
            row[[j for j in tab.basis if j < ncol]] = 0.0
            j = int(np.argmax(np.abs(row)))
            if abs(row[j]) > 1e-7:
                tab.pivot(r, j)
            else:
                keep[r] = False
        basis = [tab.basis[r] for r in range(m) if keep[r]]
        rows = np.flatnonzero(keep)
    else:
        rows = np.arange(m)

    A2, b2 = A[rows], b[rows]
    tab = _Tableau(A2, b2, c, basis, refactor_every)
    status, it = _phase2(tab, b2, opt_tol, max_iter)
    iters += it
    if status == UNBOUNDED:
        e = tab.ray_col
        ray_z = np.zeros(ncol)
        ray_z[e] = 1.0
        ray_z[tab.basis] = -tab.T[:, e]
        return LPSolution(status=UNBOUNDED, iterations=iters, ray=P @ ray_z[:nz],
                          message="improving ray found")
    if status != OPTIMAL:
        return LPSolution(status=status, iterations=iters)

    z = np.zeros(ncol)
    z[tab.basis] = tab.beta
    x = P @ z[:nz]
    y_rows = np.zeros(m)
    y_rows[rows] = tab.y
    y = y_rows * sign
    if lp.sense == "min":
        y = -y
    sol = LPSolution(status=OPTIMAL, objective_value=float(lp.c @ x), primal=x,
                     dual_ub=y[:m_ub], dual_eq=y[m_ub:], iterations=iters, basis=list(tab.basis))
    res = lp.residuals(x)
    scale = 1.0 + np.abs(b).max(initial=0.0)
    if max(res.values()) > feas_tol * scale:
        sol.status = UNSTABLE
        sol.message = f"final primal residuals {res} exceed tolerance"
    return sol


def solve_or_raise(lp: LinearProgram, **kw) -> LPSolution:
    sol = solve(lp, **kw)
    if not sol.is_optimal:
        raise SolverError(f"LP solve failed: {sol.status} {sol.message}".strip(), sol)
    return sol


def complementary_slackness(lp: LinearProgram, sol: LPSolution) -> float:
    """Largest |y_i * slack_i| over inequality rows plus reduced-cost violations."""
    x, y_ub, y_eq = sol.primal, sol.dual_ub, sol.dual_eq
    slack = lp.b_ub - lp.A_ub @ x
    cs = np.abs(y_ub * slack).max(initial=0.0)
    red = lp.c - lp.A_ub.T @ y_ub - lp.A_eq.T @ y_eq
    sgn = 1.0 if lp.sense == "max" else -1.0
    # reduced costs: zero on free vars, sign-restricted and complementary on bounded ones
    free_part = np.abs(red[lp.free]).max(initial=0.0)
    bnd = red[~lp.free] * sgn
    viol = max(bnd.max(initial=0.0), 0.0)
    comp = np.abs(bnd * x[~lp.free]).max(initial=0.0)
    return float(max(cs, free_part, viol, comp))
