#!/usr/bin/env python3
"""Wall-clock time for L(809) and LS(809) with the embedded simplex."""

import time

from paley_lp.bounds import bound_report

t0 = time.perf_counter()
rep = bound_report(809, compute_omega=False)
dt = time.perf_counter() - t0
print(f"L(809) = {rep.l_bound:.4f}  LS(809) = {rep.ls_bound:.4f}  HP(809) = {rep.hp:.4f}")
print(f"pivots {rep.iterations}, per-LP seconds {({k: round(v, 2) for k, v in rep.wall_times.items()})}")
print(f"total {dt:.2f}s")
