"""Theta-number LPs for circulant graphs and the per-prime bound report."""

from __future__ import annotations

import math
import time
from dataclasses import asdict, dataclass, field
from typing import Callable

import numpy as np

from . import simplex
from .numtheory import check_prime, make_context
from .paley import CirculantGraph, complement, local_graph, paley_clique
from .spectral import GridFunction, cosine_matrix, folded_cosine, orbits, unfold

FLOOR_MARGIN = 1e-6

Solver = Callable[[simplex.LinearProgram], simplex.LPSolution]


def hp_bound(p: int) -> float:
    """Hanson-Petridis bound (sqrt(2p - 1) + 1) / 2."""
    check_prime(p)
    return (math.sqrt(2 * p - 1) + 1) / 2


def safe_floor(x: float) -> int:
    """floor(x + 1e-6): integer-valued optima must not drop by one to round-off."""
    return math.floor(x + FLOOR_MARGIN)


@dataclass
class ThetaSolution:
    value: float
    f: GridFunction  # primal optimiser, normalised so f(0) = 1/n
    orbits: list[tuple[int, ...]]
    lp: simplex.LinearProgram = field(repr=False)
    solution: simplex.LPSolution = field(repr=False)


def theta_program(g: CirculantGraph, nonneg: bool) -> tuple[simplex.LinearProgram, list]:
    """Folded LP for theta_L (nonneg=False) or theta_LS (nonneg=True).

    With h = n f, h(0) = 1 and one variable per orbit {k, -k} of non-edges
    k != 0, the program reads

        max sum_o |o| x_o   s.t.  1 + (C h)(k) >= 0,  k = 0..n//2

    and theta = 1 + optimum. Positions in the connection set are pinned to
    zero and never become variables.
    """
    n = g.n
    support = [k for k in range(1, n) if k not in g.conn]
    orbs = orbits(n, support)
    M = folded_cosine(n, orbs)
    sizes = np.array([len(o) for o in orbs], dtype=float)
    lp = simplex.LinearProgram(c=sizes, A_ub=-M, b_ub=np.ones(M.shape[0]),
                               free=np.full(len(orbs), not nonneg), sense="max")
    return lp, orbs


def solve_theta(g: CirculantGraph, nonneg: bool, solver: Solver = simplex.solve) -> ThetaSolution:
    lp, orbs = theta_program(g, nonneg)
    n = g.n
    if not orbs:
        # complete graph: f = delta_0 / n is the only feasible point
        sol = simplex.LPSolution(status=simplex.OPTIMAL, objective_value=0.0, primal=np.zeros(0),
                                 dual_ub=np.zeros(n // 2 + 1), dual_eq=np.zeros(0))
    else:
        sol = solver(lp)
    if sol.status == simplex.INFEASIBLE:
        raise simplex.SolverError("theta LP reported infeasible although f = delta_0/n is feasible", sol)
    if not sol.is_optimal:
        raise simplex.SolverError(f"theta LP failed: {sol.status} {sol.message}".strip(), sol)
    h = unfold(n, orbs, sol.primal)
    h[0] = 1.0
    return ThetaSolution(1.0 + sol.objective_value, GridFunction(h / n), orbs, lp, sol)


def theta_L_lp(g: CirculantGraph, solver: Solver = simplex.solve) -> float:
    return solve_theta(g, False, solver).value


def theta_LS_lp(g: CirculantGraph, solver: Solver = simplex.solve) -> float:
    return solve_theta(g, True, solver).value


def theta_lp_unfolded(g: CirculantGraph, nonneg: bool, solver: Solver = simplex.solve) -> float:
    """Reference LP without orbit folding or variable elimination.

    Variables f(0..n-1), constraints f(0) = 1/n, f(k) = 0 on edges,
    f(k) = f(-k), Cf >= 0 at every k. Slow; used to cross-check the folded
    program.
    """
    n = g.n
    rows, rhs = [np.eye(n)[0]], [1.0 / n]
    for k in sorted(g.conn):
        rows.append(np.eye(n)[k])
        rhs.append(0.0)
    for k in range(1, n):
        if k < n - k:
            r = np.zeros(n)
            r[k], r[n - k] = 1.0, -1.0
            rows.append(r)
            rhs.append(0.0)
    lp = simplex.LinearProgram(c=np.full(n, float(n)), A_ub=-cosine_matrix(n), b_ub=np.zeros(n),
                               A_eq=np.array(rows), b_eq=np.array(rhs),
                               free=np.full(n, not nonneg), sense="max")
    sol = solver(lp)
    if not sol.is_optimal:
        raise simplex.SolverError(f"unfolded theta LP failed: {sol.status}", sol)
    return sol.objective_value


@dataclass
class BoundReport:
    p: int
    alpha: int
    hp: float
    l_bound: float
    ls_bound: float
    omega: int | None = None
    omega_complete: bool | None = None
    omega_lower: int | None = None
    status: str = "ok"
    message: str = ""
    iterations: dict = field(default_factory=dict)
    wall_times: dict = field(default_factory=dict)

    @property
    def ls_le_hp(self) -> bool:
        return self.ls_bound <= self.hp

    @property
    def ls_lt_floor_hp(self) -> bool:
        return self.ls_bound < safe_floor(self.hp)

    @property
    def floor_mismatch(self) -> bool:
        return safe_floor(self.ls_bound) != safe_floor(self.hp)

    def to_dict(self) -> dict:
        return asdict(self)


def bound_report(p: int, compute_omega: bool = True, budget: float | None = 60.0,
                 alpha: int | None = None, solver: Solver = simplex.solve) -> BoundReport:
    """HP(p), L(p) = theta_L(complement L_p) + 1 and LS(p) = theta_LS(...) + 1."""
    ctx = make_context(p, alpha)
    gbar = complement(local_graph(ctx))
    times, iters = {}, {}

    t0 = time.perf_counter()
    th_l = solve_theta(gbar, False, solver)
    times["l"] = time.perf_counter() - t0
    iters["l"] = th_l.solution.iterations

    t0 = time.perf_counter()
    th_ls = solve_theta(gbar, True, solver)
    times["ls"] = time.perf_counter() - t0
    iters["ls"] = th_ls.solution.iterations

    rep = BoundReport(p=p, alpha=ctx.alpha, hp=hp_bound(p), l_bound=th_l.value + 1,
                      ls_bound=th_ls.value + 1, iterations=iters, wall_times=times)
    if compute_omega:
        t0 = time.perf_counter()
        res = paley_clique(ctx, budget)
        times["omega"] = time.perf_counter() - t0
        rep.omega_complete = res.complete
        rep.omega_lower = res.size
        rep.omega = res.size if res.complete else None
    return rep
