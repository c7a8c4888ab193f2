#!/usr/bin/env python3
"""Primal/dual agreement and certificate validity for every prime below LIMIT.

Usage: python scripts/duality_sweep.py [LIMIT]
"""

import sys

from paley_lp.certificates import weak_duality_check
from paley_lp.numtheory import primes_1_mod_4

limit = int(sys.argv[1]) if len(sys.argv) > 1 else 500
worst = 0.0
failed = []
for p in primes_1_mod_4(limit):
    rep = weak_duality_check(p)
    worst = max(worst, rep.gap_ls, rep.gap_l)
    if not rep.ok:
        failed.append(p)
    print(f"{p:>5}  LS-1 primal {rep.primal_ls:.10f} dual {rep.dual_ls:.10f}  "
          f"L-1 primal {rep.primal_l:.10f} dual {rep.dual_l:.10f}  "
          f"cert {'ok' if rep.certificate_valid else 'BAD'}")
print(f"max gap {worst:.2e}; failures: {failed or 'none'}")
