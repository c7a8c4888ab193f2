"""Command-line interface: ``paley-lp {bound,scan,certify,dual,graph,clique}``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import math
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial

from . import simplex
from .bounds import BoundReport, bound_report, hp_bound, safe_floor
from .certificates import CertificateFormatError, DualCertificate, paley_certificate, verify_certificate
from .numtheory import InvalidPrimeError, check_prime, make_context, primes_1_mod_4
from .paley import graph_record, paley_clique

log = logging.getLogger("paley_lp")

EXIT_OK, EXIT_INVALID, EXIT_USAGE, EXIT_INCOMPLETE = 0, 1, 2, 3
CSV_FIELDS = ["p", "omega", "hp", "l", "ls", "ls_minus_hp", "floor_hp_minus_hp"]
SCAN_OMEGA_LIMIT = 1000


def _fmt(x) -> str:
    return "-" if x is None or (isinstance(x, float) and math.isnan(x)) else f"{x:.4f}"


def _solver(tol: float):
    return partial(simplex.solve, feas_tol=tol, opt_tol=tol)


@dataclass
class ScanSummary:
    prime_count: int = 0
    count_ls_le_hp: int = 0
    count_ls_lt_floor_hp: int = 0
    count_floor_mismatch: int = 0
    failures: int = 0
    rows: list = field(default_factory=list, repr=False)

    def lines(self) -> list[str]:
        return [f"primes: {self.prime_count}",
                f"LS <= HP: {self.count_ls_le_hp}",
                f"LS < floor(HP): {self.count_ls_lt_floor_hp}",
                f"floor(LS) != floor(HP): {self.count_floor_mismatch}",
                f"failures: {self.failures}"]


def summarize(rows) -> ScanSummary:
    """Counts over (p, hp, ls) triples; `ls` may be NaN for failed primes."""
    s = ScanSummary(rows=list(rows))
    for r in s.rows:
        hp, ls = r["hp"], r["ls"]
        s.prime_count += 1
        if ls is None or math.isnan(ls):
            s.failures += 1
            continue
        s.count_ls_le_hp += ls <= hp
        s.count_ls_lt_floor_hp += ls < safe_floor(hp)
        s.count_floor_mismatch += safe_floor(ls) != safe_floor(hp)
    return s


def scan_row(p: int, compute_omega: bool, budget: float, tol: float, alpha=None) -> dict:
    hp = hp_bound(p)
    row = {"p": p, "omega": None, "hp": hp, "l": float("nan"), "ls": float("nan"), "error": ""}
    try:
        rep = bound_report(p, compute_omega=compute_omega, budget=budget, alpha=alpha,
                           solver=_solver(tol))
    except simplex.SolverError as exc:
        row["error"] = str(exc)
        return row
    row.update(omega=rep.omega, l=rep.l_bound, ls=rep.ls_bound)
    return row


def run_scan(limit: int, compute_omega: bool = True, budget: float = 60.0, tol: float = 1e-9,
             jobs: int = 1, omega_limit: int = SCAN_OMEGA_LIMIT) -> ScanSummary:
    primes = primes_1_mod_4(limit)
    tasks = [(p, compute_omega and p <= omega_limit, budget, tol) for p in primes]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            rows = list(ex.map(_scan_task, tasks))  # map preserves prime order
    else:
        rows = [_scan_task(t) for t in tasks]
    for r in rows:
        if r["error"]:
            log.warning("p=%d failed: %s", r["p"], r["error"])
    return summarize(rows)


def _scan_task(args) -> dict:
    return scan_row(*args)


def _num(x) -> str:
    return "" if x is None or (isinstance(x, float) and math.isnan(x)) else repr(float(x))


def write_scan_csv(rows, fh) -> None:
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(CSV_FIELDS)
    for r in rows:
        ls, hp = r["ls"], r["hp"]
        w.writerow([r["p"], "" if r["omega"] is None else r["omega"], _num(hp), _num(r["l"]), _num(ls),
                    _num(ls - hp), _num(math.floor(hp + 1e-6) - hp)])


def read_scan_csv(fh) -> list[dict]:
    rows = []
    for rec in csv.DictReader(fh):
        rows.append({"p": int(rec["p"]),
                     "omega": int(rec["omega"]) if rec["omega"] else None,
                     "hp": float(rec["hp"]),
                     "l": float(rec["l"]) if rec["l"] else float("nan"),
                     "ls": float(rec["ls"]) if rec["ls"] else float("nan")})
    return rows


def _report_dict(rep: BoundReport) -> dict:
    d = rep.to_dict()
    d["floor_ls"] = safe_floor(rep.ls_bound)
    d["floor_hp"] = safe_floor(rep.hp)
    return d


def cmd_bound(args) -> int:
    rep = bound_report(args.p, compute_omega=not args.no_clique, budget=args.clique_budget,
                       alpha=args.alpha, solver=_solver(args.tol))
    omega = str(rep.omega) if rep.omega is not None else "-"
    if args.format == "json":
        print(json.dumps(_report_dict(rep), indent=2))
    elif args.format == "csv":
        row = {"p": rep.p, "omega": rep.omega, "hp": rep.hp, "l": rep.l_bound, "ls": rep.ls_bound}
        write_scan_csv([row], sys.stdout)
    else:
        print(f"{rep.p}  {omega}  {_fmt(rep.hp)}  {_fmt(rep.l_bound)}  {_fmt(rep.ls_bound)}")
    if rep.omega_complete is False:
        print(f"omega search incomplete within budget; best clique found: {rep.omega_lower}",
              file=sys.stderr)
    return EXIT_OK


def cmd_scan(args) -> int:
    if args.limit < 5:
        print("error: limit must be >= 5", file=sys.stderr)
        return EXIT_USAGE
    summary = run_scan(args.limit, compute_omega=not args.no_clique, budget=args.clique_budget,
                       tol=args.tol, jobs=args.jobs)
    if args.format == "json":
        payload = {"prime_count": summary.prime_count, "count_ls_le_hp": summary.count_ls_le_hp,
                   "count_ls_lt_floor_hp": summary.count_ls_lt_floor_hp,
                   "count_floor_mismatch": summary.count_floor_mismatch,
                   "failures": summary.failures, "rows": summary.rows}
        text = json.dumps(payload, indent=2)
    elif args.format == "table":
        buf = io.StringIO()
        for r in summary.rows:
            om = "-" if r["omega"] is None else str(r["omega"])
            buf.write(f"{r['p']:>6}  {om:>3}  {_fmt(r['hp'])}  {_fmt(r['l'])}  {_fmt(r['ls'])}\n")
        text = buf.getvalue().rstrip("\n")
    else:
        buf = io.StringIO()
        write_scan_csv(summary.rows, buf)
        text = buf.getvalue().rstrip("\n")
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
        print("\n".join(summary.lines()))
    else:
        print(text)
        print("\n".join(summary.lines()), file=sys.stderr)
    return EXIT_OK


def cmd_certify(args) -> int:
    try:
        cert = DualCertificate.load(args.path)
        check_prime(cert.p)
        res = verify_certificate(cert, args.tol)
    except (CertificateFormatError, InvalidPrimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.format == "json":
        print(json.dumps({"valid": res.valid, "bound": res.bound,
                          "violations": [v.__dict__ for v in res.violations]}, indent=2))
    elif res.valid:
        print(f"VALID, ω(G_{cert.p}) ≤ {res.bound:.4f}")
    else:
        print(f"INVALID: {res.violations[0].describe()}")
        for v in res.violations[1:]:
            print(f"  {v.describe()}")
    return EXIT_OK if res.valid else EXIT_INVALID


def cmd_dual(args) -> int:
    cert = paley_certificate(args.p, args.alpha, solver=_solver(args.tol))
    if args.output:
        cert.save(args.output)
        print(f"wrote certificate for p={cert.p} (bound {cert.claimed_bound:.4f}) to {args.output}")
    else:
        print(cert.to_json())
    return EXIT_OK


def cmd_graph(args) -> int:
    print(json.dumps(graph_record(make_context(args.p, args.alpha)), separators=(",", ":")))
    return EXIT_OK


def cmd_clique(args) -> int:
    res = paley_clique(make_context(args.p, args.alpha), args.clique_budget)
    if not res.complete:
        print(f">= {res.size} (incomplete)")
        return EXIT_INCOMPLETE
    if args.format == "json":
        print(json.dumps({"p": args.p, "omega": res.size, "clique": res.clique}))
    else:
        print(res.size)
    return EXIT_OK


def _default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("PALEY_LP_JOBS", "1")))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=1e-9, help="solver / verification tolerance")
    common.add_argument("--no-clique", action="store_true", help="skip the clique search")
    common.add_argument("--clique-budget", type=float, default=60.0, metavar="SECONDS")
    common.add_argument("--format", choices=["csv", "json", "table"], default=None)
    common.add_argument("--jobs", type=int, default=_default_jobs())
    common.add_argument("--alpha", type=int, default=None, help="override the generator of Q_p")
    common.add_argument("-v", "--verbose", action="store_true")

    ap = argparse.ArgumentParser(prog="paley-lp", description="LP bounds on Paley graph clique numbers")
    sub = ap.add_subparsers(dest="command", required=True)
    for name, fn, arg, kind in [("bound", cmd_bound, "p", int), ("scan", cmd_scan, "limit", int),
                                ("dual", cmd_dual, "p", int), ("graph", cmd_graph, "p", int),
                                ("clique", cmd_clique, "p", int), ("certify", cmd_certify, "path", str)]:
        sp = sub.add_parser(name, parents=[common])
        sp.add_argument(arg, type=kind)
        sp.set_defaults(func=fn)
        if name in ("scan", "dual"):
            sp.add_argument("-o", "--output", default=None)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    if args.format is None:
        args.format = {"scan": "csv", "certify": "table"}.get(args.command, "table")
    if args.command == "certify" and args.tol == 1e-9:
        args.tol = 1e-7  # verification default; solves stay at 1e-9
    if hasattr(args, "p"):
        try:
            check_prime(args.p)
            if args.alpha is not None:
                make_context(args.p, args.alpha)
        except InvalidPrimeError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_USAGE
    try:
        return args.func(args)
    except simplex.SolverError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
