"""Circulant graphs: the Paley graph, its local graph, and exact clique search."""

from __future__ import annotations

import time
from dataclasses import dataclass

from .numtheory import PrimeContext, is_residue


@dataclass(frozen=True)
class CirculantGraph:
    """Graph on Z_n where j ~ k iff (j - k) mod n is in `conn`."""

    n: int
    conn: frozenset[int]

    def __post_init__(self):
        conn = frozenset(int(d) for d in self.conn)
        object.__setattr__(self, "conn", conn)
        if self.n < 1:
            raise ValueError(f"n={self.n} must be positive")
        bad = [d for d in conn if not 1 <= d < self.n]
        if bad:
            raise ValueError(f"connection set entries out of range 1..{self.n - 1}: {sorted(bad)}")
        asym = [d for d in conn if self.n - d not in conn]
        if asym:
            raise ValueError(f"connection set not symmetric: missing negatives of {sorted(asym)}")

    @property
    def connection_set(self) -> list[int]:
        return sorted(self.conn)

    def adjacent(self, j: int, k: int) -> bool:
        return (j - k) % self.n in self.conn

    def neighbor_masks(self) -> list[int]:
        """Adjacency rows as int bitmasks."""
        base = sum(1 << d for d in self.conn)
        full = (1 << self.n) - 1
        # rotate the base pattern by v
        return [((base << v) | (base >> (self.n - v))) & full for v in range(self.n)]


def circulant(n: int, conn) -> CirculantGraph:
    return CirculantGraph(n, frozenset(conn))


def paley_graph(ctx: PrimeContext) -> CirculantGraph:
    return CirculantGraph(ctx.p, frozenset(x for x in range(1, ctx.p) if is_residue(x, ctx.p)))


def local_graph(ctx: PrimeContext) -> CirculantGraph:
    """L_p on positions 0..n-1, position k standing for alpha**k."""
    p = ctx.p
    conn = {d for d in range(1, ctx.n) if is_residue(ctx.residue_order[d] - 1, p)}
    return CirculantGraph(ctx.n, frozenset(conn))


def complement(g: CirculantGraph) -> CirculantGraph:
    return CirculantGraph(g.n, frozenset(range(1, g.n)) - g.conn)


def graph_record(ctx: PrimeContext) -> dict:
    """JSON-ready dump of the local graph."""
    lg = local_graph(ctx)
    return {"p": ctx.p, "n": ctx.n, "alpha": ctx.alpha, "connection_set": lg.connection_set}


@dataclass
class CliqueResult:
    size: int
    clique: list[int]
    complete: bool
    nodes: int = 0
    seconds: float = 0.0


class _BudgetExceeded(Exception):
    pass


def _degeneracy_order(masks: list[int]) -> list[int]:
    """Vertices by repeated min-degree removal (ties by index), reversed so
    the densest core comes first."""
    alive = set(range(len(masks)))
    alive_mask = (1 << len(masks)) - 1
    removed = []
    while alive:
        v = min(alive, key=lambda u: ((masks[u] & alive_mask).bit_count(), u))
        removed.append(v)
        alive.discard(v)
        alive_mask &= ~(1 << v)
    return removed[::-1]


def max_clique(g: CirculantGraph, budget: float | None = 60.0) -> CliqueResult:
    """Exact maximum clique by branch and bound with greedy-colouring bounds.

    `budget` is wall-clock seconds (None for unlimited). On exhaustion the
    best clique found so far is returned with ``complete=False``.
    """
    t0 = time.perf_counter()
    deadline = None if budget is None else t0 + budget
    raw = g.neighbor_masks()
    order = _degeneracy_order(raw)
    pos = {v: i for i, v in enumerate(order)}
    # relabel so bit i is the i-th vertex in search order
    nbr = []
    for v in order:
        m, out = raw[v], 0
        while m:
            low = m & -m
            out |= 1 << pos[low.bit_length() - 1]
            m ^= low
        nbr.append(out)

    best: list[int] = []
    nodes = 0

    def colour(P: int) -> list[tuple[int, int]]:
        out = []
        k = 0
        while P:
            k += 1
            avail = P
            while avail:
                low = avail & -avail
                v = low.bit_length() - 1
                out.append((v, k))
                P &= ~low
                avail &= ~low & ~nbr[v]
        return out

    def expand(R: list[int], P: int) -> None:
        nonlocal best, nodes
        nodes += 1
        if deadline is not None and nodes % 1024 == 0 and time.perf_counter() > deadline:
            raise _BudgetExceeded
        for v, c in reversed(colour(P)):
            if len(R) + c <= len(best):
                return
            R.append(v)
            P2 = P & nbr[v]
            if P2:
                expand(R, P2)
            elif len(R) > len(best):
                best = list(R)
            R.pop()
            P &= ~(1 << v)

    complete = True
    try:
        if g.n:
            # circulant graphs are vertex-transitive: some maximum clique contains vertex 0
            root = pos[0]
            best = [root]
            if nbr[root]:
                expand([root], nbr[root])
    except _BudgetExceeded:
        complete = False
    clique = sorted(order[v] for v in best)
    return CliqueResult(len(clique), clique, complete, nodes, time.perf_counter() - t0)


def clique_number(g: CirculantGraph, budget: float | None = 60.0) -> int | None:
    """omega(g), or None when the budget runs out."""
    res = max_clique(g, budget)
    return res.size if res.complete else None


def paley_clique(ctx: PrimeContext, budget: float | None = 60.0) -> CliqueResult:
    """Max clique of G_p via the local graph: omega(G_p) = omega(L_p) + 1.

    The returned clique is in F_p labels and contains 0.
    """
    res = max_clique(local_graph(ctx), budget)
    res.clique = [0] + sorted(ctx.residue_order[k] for k in res.clique)
    res.size += 1
    return res
