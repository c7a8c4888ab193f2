"""Dual programs for the theta LPs and verification of dual certificates.

A certificate for a prime p is a pair (f, g) of functions on Z_n,
n = (p - 1)/2, with

    (i)   f(k) = 0 whenever alpha**k - 1 is a nonzero residue,
    (ii)  f >= g + 1,
    (iii) hat g >= 0,

and any such pair proves omega(G_p) <= f(0) + 1.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import simplex
from .bounds import Solver, solve_theta
from .numtheory import is_residue, make_context
from .paley import CirculantGraph, complement, local_graph
from .spectral import (GridFunction, cosine_transform, evenness_defect, folded_cosine,
                       orbits, unfold)


class CertificateFormatError(ValueError):
    """Certificate data is structurally unusable (bad JSON, wrong lengths, ...)."""


@dataclass
class DualSolution:
    value: float
    f: GridFunction
    g: GridFunction
    solution: simplex.LPSolution = field(repr=False)


@dataclass
class DualCertificate:
    p: int
    alpha: int
    f: GridFunction
    g: GridFunction

    def __post_init__(self):
        if not isinstance(self.f, GridFunction):
            self.f = GridFunction(self.f)
        if not isinstance(self.g, GridFunction):
            self.g = GridFunction(self.g)
        n = (self.p - 1) // 2
        if self.f.n != n or self.g.n != n:
            raise CertificateFormatError(
                f"f and g must have length (p-1)/2 = {n}; got {self.f.n} and {self.g.n}")

    @property
    def n(self) -> int:
        return (self.p - 1) // 2

    @property
    def claimed_bound(self) -> float:
        return float(self.f[0]) + 1.0

    def to_json(self) -> str:
        # json writes floats with repr, i.e. shortest round-tripping form
        return json.dumps({"p": self.p, "alpha": self.alpha,
                           "f": self.f.tolist(), "g": self.g.tolist()})

    @classmethod
    def from_json(cls, text: str) -> "DualCertificate":
        try:
            data = json.loads(text)
            p, alpha, f, g = data["p"], data["alpha"], data["f"], data["g"]
        except (json.JSONDecodeError, KeyError, TypeError) as exc:
            raise CertificateFormatError(f"malformed certificate: {exc}") from exc
        if not isinstance(p, int) or not isinstance(alpha, int):
            raise CertificateFormatError("p and alpha must be integers")
        try:
            f = np.asarray(f, dtype=float)
            g = np.asarray(g, dtype=float)
            return cls(p, alpha, GridFunction(f), GridFunction(g))
        except ValueError as exc:
            raise CertificateFormatError(str(exc)) from exc

    def save(self, path) -> None:
        Path(path).write_text(self.to_json() + "\n")

    @classmethod
    def load(cls, path) -> "DualCertificate":
        try:
            text = Path(path).read_text()
        except OSError as exc:
            raise CertificateFormatError(f"cannot read {path}: {exc}") from exc
        return cls.from_json(text)


def dual_theta_LS(g: CirculantGraph, solver: Solver = simplex.solve) -> DualSolution:
    """min f(0) s.t. f = 0 on conn(complement g), f >= g_fn + 1, hat g_fn >= 0.

    Variables: f on orbits of {0} + conn(g) (free), g_fn on all orbits (free).
    """
    n = g.n
    f_orbs = orbits(n, {0} | set(g.conn))
    g_orbs = orbits(n)
    nf, ng = len(f_orbs), len(g_orbs)
    f_col = {orb[0]: i for i, orb in enumerate(f_orbs)}

    # f(k) - g(k) >= 1 per orbit, written as -f + g <= -1
    A1 = np.zeros((ng, nf + ng))
    for i, orb in enumerate(g_orbs):
        A1[i, nf + i] = 1.0
        if orb[0] in f_col:
            A1[i, f_col[orb[0]]] = -1.0
    # (C g)(k) >= 0 for k = 0..n//2
    M = folded_cosine(n, g_orbs)
    A2 = np.hstack([np.zeros((M.shape[0], nf)), -M])
    c = np.zeros(nf + ng)
    c[f_col[0]] = 1.0
    lp = simplex.LinearProgram(c=c, A_ub=np.vstack([A1, A2]),
                               b_ub=np.concatenate([-np.ones(ng), np.zeros(M.shape[0])]),
                               free=np.ones(nf + ng, dtype=bool), sense="min")
    sol = solver(lp)
    if not sol.is_optimal:
        raise simplex.SolverError(f"dual theta_LS LP failed: {sol.status} {sol.message}".strip(), sol)
    f = unfold(n, f_orbs, sol.primal[:nf])
    gv = unfold(n, g_orbs, sol.primal[nf:])
    return DualSolution(sol.objective_value, GridFunction(f), GridFunction(gv), sol)


def dual_theta_L(g: CirculantGraph, solver: Solver = simplex.solve) -> DualSolution:
    """The theta_LS dual with f = g_fn + 1 imposed, so g_fn = -1 on conn(complement g)."""
    n = g.n
    free_orbs = orbits(n, {0} | set(g.conn))
    fixed_orbs = orbits(n, set(range(1, n)) - set(g.conn))
    M_free = folded_cosine(n, free_orbs)
    fixed_part = -folded_cosine(n, fixed_orbs).sum(axis=1) if fixed_orbs else np.zeros(M_free.shape[0])
    c = np.zeros(len(free_orbs))
    c[0] = 1.0
    # C g = M_free x + fixed_part >= 0
    lp = simplex.LinearProgram(c=c, A_ub=-M_free, b_ub=fixed_part,
                               free=np.ones(len(free_orbs), dtype=bool), sense="min")
    sol = solver(lp)
    if not sol.is_optimal:
        raise simplex.SolverError(f"dual theta_L LP failed: {sol.status} {sol.message}".strip(), sol)
    gv = unfold(n, free_orbs, sol.primal) + unfold(n, fixed_orbs, -np.ones(len(fixed_orbs)))
    return DualSolution(sol.objective_value + 1.0, GridFunction(gv + 1.0), GridFunction(gv), sol)


def dual_theta_LS_reduced(g: CirculantGraph, solver: Solver = simplex.solve) -> float:
    """Eliminated form: min g(0) + 1 s.t. g <= -1 on conn(complement g), hat g >= 0."""
    n = g.n
    g_orbs = orbits(n)
    pinned = [i for i, orb in enumerate(g_orbs) if orb[0] != 0 and orb[0] not in g.conn]
    M = folded_cosine(n, g_orbs)
    A_pin = np.eye(len(g_orbs))[pinned]
    c = np.zeros(len(g_orbs))
    c[0] = 1.0
    lp = simplex.LinearProgram(c=c, A_ub=np.vstack([A_pin, -M]),
                               b_ub=np.concatenate([-np.ones(len(pinned)), np.zeros(M.shape[0])]),
                               free=np.ones(len(g_orbs), dtype=bool), sense="min")
    sol = solver(lp)
    if not sol.is_optimal:
        raise simplex.SolverError(f"reduced dual LP failed: {sol.status}", sol)
    return sol.objective_value + 1.0


def certificate_from_primal(g: CirculantGraph, nonneg: bool = True,
                            solver: Solver = simplex.solve) -> DualSolution:
    """Dual pair rebuilt from the multipliers of the primal theta LP.

    With y_k >= 0 the multiplier of the row (C h)(k) >= -1, spread w evenly
    over the orbit {k, -k}; then g = C w and f = g + 1 off the zero set.
    """
    th = solve_theta(g, nonneg, solver)
    n = g.n
    y = th.solution.dual_ub
    w = np.zeros(n)
    for k, yk in enumerate(y):
        orb = {k, (n - k) % n}
        for j in orb:
            w[j] = yk / len(orb)
    gv = cosine_transform(w).values
    f = gv + 1.0
    zero = [k for k in range(1, n) if k not in g.conn]
    f[zero] = 0.0
    return DualSolution(float(f[0]), GridFunction(f), GridFunction(gv), th.solution)


def residue_zero_set(p: int, alpha: int) -> list[int]:
    """Indices k in Z_n with alpha**k - 1 a nonzero residue mod p."""
    n = (p - 1) // 2
    return [k for k in range(n) if is_residue(pow(alpha, k, p) - 1, p)]


@dataclass
class Violation:
    condition: str  # "i", "ii", "iii" or "iii-even"
    index: int
    magnitude: float

    def describe(self) -> str:
        k = self.index
        if self.condition == "i":
            return f"f(k) != 0 at k={k} (|f(k)| = {self.magnitude:.3e})"
        if self.condition == "ii":
            return f"f(k) < g(k)+1 at k={k} (short by {self.magnitude:.3e})"
        if self.condition == "iii-even":
            return f"g not even: g(k) != g(-k) at k={k} (gap {self.magnitude:.3e})"
        return f"hat g < 0 at k={k} (value -{self.magnitude:.3e})"


@dataclass
class Verification:
    valid: bool
    bound: float
    violations: list[Violation]


def check_dual_pair(zero_set, f, g, tol: float) -> list[Violation]:
    """Conditions (i)-(iii) for arbitrary f, g on Z_n and a zero set for f."""
    f = f.values if isinstance(f, GridFunction) else np.asarray(f, dtype=float)
    g = g.values if isinstance(g, GridFunction) else np.asarray(g, dtype=float)
    n = len(f)
    out = []
    for k in zero_set:
        if abs(f[k]) > tol:
            out.append(Violation("i", int(k), float(abs(f[k]))))
    short = g + 1.0 - f
    for k in np.flatnonzero(short > tol):
        out.append(Violation("ii", int(k), float(short[k])))
    rev = np.roll(g[::-1], 1)
    if evenness_defect(g) > tol:
        for k in range(n):
            if k < (n - k) % n and abs(g[k] - rev[k]) > tol:
                out.append(Violation("iii-even", k, float(abs(g[k] - rev[k]))))
    else:
        cg = cosine_transform(g).values
        for k in np.flatnonzero(cg < -tol):
            out.append(Violation("iii", int(k), float(-cg[k])))
    return out


def verify_certificate(cert: DualCertificate, tol: float = 1e-7) -> Verification:
    """Check a certificate; the bound f(0) + 1 is meaningful only when valid."""
    n = cert.n
    if cert.f.n != n or cert.g.n != n:
        raise CertificateFormatError(f"f and g must have length {n}")
    viol = check_dual_pair(residue_zero_set(cert.p, cert.alpha), cert.f, cert.g, tol)
    return Verification(not viol, cert.claimed_bound, viol)


def paley_certificate(p: int, alpha: int | None = None, solver: Solver = simplex.solve) -> DualCertificate:
    """Optimal theta_LS dual pair for the complement of L_p."""
    ctx = make_context(p, alpha)
    dual = dual_theta_LS(complement(local_graph(ctx)), solver)
    return DualCertificate(p, ctx.alpha, dual.f, dual.g)


@dataclass
class DualityReport:
    p: int
    primal_ls: float
    dual_ls: float
    primal_l: float
    dual_l: float
    multiplier_bound: float
    certificate_valid: bool
    multiplier_certificate_valid: bool
    tol: float

    @property
    def gap_ls(self) -> float:
        return abs(self.primal_ls - self.dual_ls)

    @property
    def gap_l(self) -> float:
        return abs(self.primal_l - self.dual_l)

    @property
    def ok(self) -> bool:
        return (self.primal_ls <= self.dual_ls + self.tol and self.gap_ls <= self.tol
                and self.gap_l <= self.tol and self.certificate_valid
                and self.multiplier_certificate_valid
                and math.isclose(self.multiplier_bound, self.dual_ls + 1, abs_tol=self.tol))


def weak_duality_check(p: int, alpha: int | None = None, tol: float = 1e-6,
                       cert_tol: float = 1e-7, solver: Solver = simplex.solve) -> DualityReport:
    """Primal/dual theta values for complement(L_p), plus two certificate paths."""
    ctx = make_context(p, alpha)
    gbar = complement(local_graph(ctx))
    primal_ls = solve_theta(gbar, True, solver).value
    primal_l = solve_theta(gbar, False, solver).value
    dls = dual_theta_LS(gbar, solver)
    dl = dual_theta_L(gbar, solver)
    cert = DualCertificate(p, ctx.alpha, dls.f, dls.g)
    mult = certificate_from_primal(gbar, True, solver)
    mcert = DualCertificate(p, ctx.alpha, mult.f, mult.g)
    return DualityReport(
        p=p, primal_ls=primal_ls, dual_ls=dls.value, primal_l=primal_l, dual_l=dl.value,
        multiplier_bound=mcert.claimed_bound,
        certificate_valid=verify_certificate(cert, cert_tol).valid,
        multiplier_certificate_valid=verify_certificate(mcert, cert_tol).valid, tol=tol)
