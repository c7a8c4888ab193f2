"""Brute-force reference computations, deliberately independent of the package."""

import cmath
import itertools
import math

import numpy as np


def squares_mod(p):
    return sorted({(y * y) % p for y in range(1, p)})


def naive_dft(v):
    n = len(v)
    return [sum(v[j] * cmath.exp(-2j * math.pi * j * k / n) for j in range(n)) for k in range(n)]


def subset_clique_number(n, adjacent):
    """Largest pairwise-adjacent subset of range(n), deciding every one of the 2^n subsets.

    is_clique[S] = is_clique[S - v] and (S - v) within N(v), for v the lowest member of S.
    """
    nbr = [sum(1 << w for w in range(n) if w != v and adjacent(v, w)) for v in range(n)]
    is_clique = bytearray(1 << n)
    is_clique[0] = 1
    best = 0
    for mask in range(1, 1 << n):
        low = mask & -mask
        v = low.bit_length() - 1
        rest = mask ^ low
        if is_clique[rest] and rest & ~nbr[v] == 0:
            is_clique[mask] = 1
            best = max(best, bin(mask).count("1"))
    return best


def enumerate_clique_number(n, adjacent):
    """Exhaustive clique enumeration with no bounding: grow cliques by larger labels."""
    nbrs = [[w for w in range(v + 1, n) if adjacent(v, w)] for v in range(n)]
    best = 0

    def grow(size, cand):
        nonlocal best
        best = max(best, size)
        for i, v in enumerate(cand):
            grow(size + 1, [w for w in cand[i + 1:] if w in nbr_sets[v]])

    nbr_sets = [set(x) for x in nbrs]
    for v in range(n):
        grow(1, nbrs[v])
    return best


def vertex_enumeration(c, A_ub, b_ub, A_eq=None, b_eq=None, free=None, sense="max"):
    """Best objective over all basic feasible points, or None if none is feasible.

    Only valid for bounded LPs.
    """
    c = np.asarray(c, float)
    nv = len(c)
    A_ub = np.asarray(A_ub, float).reshape(-1, nv)
    b_ub = np.asarray(b_ub, float)
    A_eq = np.zeros((0, nv)) if A_eq is None else np.asarray(A_eq, float).reshape(-1, nv)
    b_eq = np.zeros(0) if b_eq is None else np.asarray(b_eq, float)
    free = np.zeros(nv, bool) if free is None else np.asarray(free, bool)
    rows = [A_ub[i] for i in range(len(b_ub))] + [-np.eye(nv)[j] for j in range(nv) if not free[j]]
    rhs = list(b_ub) + [0.0] * int((~free).sum())
    best = None
    need = nv - len(b_eq)
    if need < 0:
        return None
    for act in itertools.combinations(range(len(rows)), need):
        M = np.vstack([A_eq] + [rows[i][None, :] for i in act]) if nv else np.zeros((0, 0))
        r = np.concatenate([b_eq, [rhs[i] for i in act]])
        if np.linalg.matrix_rank(M) < nv:
            continue
        x = np.linalg.solve(M, r)
        if np.any(A_ub @ x > b_ub + 1e-9) or np.any(x[~free] < -1e-9):
            continue
        if len(b_eq) and np.any(np.abs(A_eq @ x - b_eq) > 1e-9):
            continue
        val = float(c @ x)
        if best is None or (val > best if sense == "max" else val < best):
            best = val
    return best


def sdp_theta(n, edges, nonneg=False):
    """Lovasz (or Schrijver, nonneg=True) theta by solving the SDP with cvxpy."""
    import cvxpy as cp

    X = cp.Variable((n, n), symmetric=True)
    cons = [X >> 0, cp.trace(X) == 1]
    cons += [X[j, k] == 0 for j, k in edges]
    if nonneg:
        cons.append(X >= 0)
    prob = cp.Problem(cp.Maximize(cp.sum(X)), cons)
    prob.solve(solver=cp.CLARABEL)
    return prob.value
