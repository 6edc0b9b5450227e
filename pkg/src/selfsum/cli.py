"""Command-line front end.

    selfsum compute --n N --format {list,intervals,json,bfile} [--explain]
    selfsum member  --n N --x X
    selfsum verify  --n-min A --n-max B [--oracle-max-n C] [--workers W]
    selfsum oracle  --n N --limit L
    selfsum bench   --n N[,N...] --reps R

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 overflow or
oracle cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Iterable, TextIO

from .closed_form import build_certificate, check_n, compute_q, verify_certificate
from .errors import BadN, ElementDumpTooLarge, NatOverflowError, OracleCapExceeded
from .formats import OutputDocument, as_bfile, as_intervals, as_list
from .intervals import interval_sum_range
from .oracle import sieve_to_limit, sieve_until_run
from .result import Method
from .verify import VerificationReport, certificate_report, cross_validate, sweep_certificates

FORMATS = ("list", "intervals", "json", "bfile")
BENCH_ORACLE_MAX_N = 8

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_OVERFLOW = 0, 1, 2, 3


def explain(n: int) -> str:
    """Step-by-step account of how Q(n) was obtained."""
    c = build_certificate(n)
    lines = [f"n = {n}", f"first member X1 = {c.X1}; 1..{c.X1 - 1} are non-members"]
    lines.append(f"sums of {n} distinct values from 1..{c.X1 - 1} cover {c.X1}..{c.U}: members")
    lines.append(f"{c.U + 1}..{c.U1 - 1}: too large for small non-member sums, "
                 f"too small for any other sum: non-members")
    if n >= 3 and verify_certificate(c):
        mix_lo, mix_hi = c.U1, c.T_high
        mem_lo, mem_hi = interval_sum_range(c.X1, c.U, n)
        lines += [
            f"{n - 1} values from 1..{c.X1 - 1} plus one from {c.U + 1}..{c.U1 - 1} cover {mix_lo}..{mix_hi}",
            f"sums of {n} distinct members from {c.X1}..{c.U} cover {mem_lo}..{mem_hi}",
            f"runs merge ({mem_lo} <= {mix_hi + 1}, {mem_hi} >= {mix_hi}): "
            f"{c.U1}..{c.U4}, length {c.run_length}",
            f"a run of z = {c.z} members extends itself forever: {c.run_length} >= {c.z}",
            f"every natural >= {c.U1} is a member",
        ]
    else:
        r = sieve_until_run(n)
        lines += [
            f"certificate does not verify (run length {c.run_length}, z = {c.z}); sieving instead",
            f"first self-extending member run starts at {r.all_members_from}",
            f"every natural >= {r.all_members_from} is a member",
        ]
    return "\n".join(lines)


def run_compute(n: int, fmt: str = "list", explain_steps: bool = False) -> str:
    if fmt not in FORMATS:
        raise ValueError(f"unknown format {fmt!r}")
    r = compute_q(n)
    if fmt == "list":
        body = as_list(r.q) + "\n"
    elif fmt == "intervals":
        body = as_intervals(r.q) + "\n"
    elif fmt == "json":
        body = OutputDocument.from_result(r).to_json() + "\n"
    else:
        body = as_bfile(r.q)
    if explain_steps:
        return explain(n) + "\n\n" + body
    return body


def run_member(n: int, x: int) -> tuple[bool, str]:
    """Whether ``x`` belongs to P(n), with a one-line reason."""
    if x < 1:
        raise ValueError(f"x must be >= 1, got {x}")
    r = compute_q(n)
    hit = r.q.find(x)
    if hit is not None:
        return False, f"{x} is in Q({n}) interval {hit[0]}..{hit[1]}"
    if x >= r.all_members_from:
        return True, f"{x} >= {r.all_members_from}; every natural from there on is a member"
    below = r.q.clip(x).max
    above = min(lo for lo, _ in r.q.intervals if lo > x)
    return True, f"{x} lies in the member block {below + 1}..{above - 1}"


def _oracle_doc(n: int, limit: int) -> str:
    s = sieve_to_limit(n, limit)
    start, length = s.trailing_run
    return json.dumps({
        "n": n,
        "limit": limit,
        "z": s.z,
        "members": [list(iv) for iv in s.members().intervals],
        "non_members": [list(iv) for iv in s.non_members().intervals],
        "trailing_run": {"start": start, "length": length},
    })


def verify_reports(n_min: int, n_max: int, oracle_max_n: int = 0, workers: int = 1) -> Iterable[VerificationReport]:
    if not 2 <= n_min <= n_max:
        raise ValueError(f"need 2 <= n_min <= n_max, got {n_min}, {n_max}")
    prev = None

    def chain(report):
        nonlocal prev
        if report.n >= 3 and report.slack is not None:
            if prev is not None:
                report.slack_increasing = report.slack > prev
            prev = report.slack
        return report

    n = n_min
    while n <= n_max and (n <= oracle_max_n or n == 2):
        if n <= oracle_max_n:
            report = cross_validate(n)
        else:
            report = certificate_report(n, on_overflow="report")
            t0 = time.perf_counter()
            report.method = compute_q(n).method.value
            report.timings["sieve_fallback"] = time.perf_counter() - t0
        yield chain(report)
        n += 1
    if n <= n_max:
        for report in sweep_certificates(n, n_max, workers=workers, on_overflow="report"):
            yield chain(report)


def run_verify(n_min: int, n_max: int, oracle_max_n: int = 0, out: TextIO | None = None,
               workers: int = 1) -> int:
    out = sys.stdout if out is None else out
    status = EXIT_OK
    for report in verify_reports(n_min, n_max, oracle_max_n, workers):
        out.write(report.to_json() + "\n")
        if not report.passed:
            status = EXIT_FAIL
    return status


def _best_per_call(fn, reps: int, rounds: int = 5) -> float:
    best = float("inf")
    for _ in range(rounds):
        t0 = time.perf_counter()
        for _ in range(reps):
            fn()
        best = min(best, (time.perf_counter() - t0) / reps)
    return best


def bench_rows(n_list: Iterable[int], reps: int = 100) -> list[dict]:
    rows = []
    for n in n_list:
        n = check_n(n)
        method = compute_q(n).method
        row = {
            "n": n,
            "method": method.value,
            "closed_form_s": _best_per_call(lambda: compute_q(n), max(reps, 1)),
            "oracle_s": None,
        }
        if n <= BENCH_ORACLE_MAX_N:
            row["oracle_s"] = _best_per_call(lambda: sieve_until_run(n), 1, rounds=max(1, min(reps, 3)))
        rows.append(row)
    return rows


def run_bench(n_list: Iterable[int], repetitions: int = 100) -> str:
    rows = bench_rows(n_list, repetitions)
    out = [f"{'n':>12}  {'method':<16}  {'compute_q (us)':>15}  {'sieve (ms)':>11}"]
    for r in rows:
        sieve = f"{r['oracle_s'] * 1e3:11.3f}" if r["oracle_s"] is not None else f"{'-':>11}"
        out.append(f"{r['n']:>12}  {r['method']:<16}  {r['closed_form_s'] * 1e6:15.3f}  {sieve}")
    cf = [r["closed_form_s"] for r in rows if r["method"] == Method.CLOSED_FORM.value]
    if len(cf) > 1:
        out.append(f"closed-form max/min time ratio: {max(cf) / min(cf):.2f}")
    return "\n".join(out) + "\n"


def _n_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="selfsum", description="Compute and verify Q(n).")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="print Q(n)")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--format", choices=FORMATS, default="list")
    c.add_argument("--explain", action="store_true", help="prefix a step-by-step derivation")

    m = sub.add_parser("member", help="is x in P(n)?")
    m.add_argument("--n", type=int, required=True)
    m.add_argument("--x", type=int, required=True)

    v = sub.add_parser("verify", help="certificate sweep and oracle cross-validation (JSON lines)")
    v.add_argument("--n-min", type=int, required=True)
    v.add_argument("--n-max", type=int, required=True)
    v.add_argument("--oracle-max-n", type=int, default=0)
    v.add_argument("--workers", type=int, default=1)

    o = sub.add_parser("oracle", help="run the brute-force sieve up to a limit")
    o.add_argument("--n", type=int, required=True)
    o.add_argument("--limit", type=int, required=True)

    b = sub.add_parser("bench", help="time the closed form (and the sieve for n <= 8)")
    b.add_argument("--n", type=_n_list, required=True)
    b.add_argument("--reps", type=int, default=100)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "compute":
            sys.stdout.write(run_compute(args.n, args.format, args.explain))
        elif args.command == "member":
            ok, why = run_member(args.n, args.x)
            print("true" if ok else "false")
            print(why)
        elif args.command == "verify":
            return run_verify(args.n_min, args.n_max, args.oracle_max_n, workers=args.workers)
        elif args.command == "oracle":
            print(_oracle_doc(args.n, args.limit))
        elif args.command == "bench":
            sys.stdout.write(run_bench(args.n, args.reps))
    except (NatOverflowError, OracleCapExceeded) as exc:
        print(f"selfsum: {exc}", file=sys.stderr)
        return EXIT_OVERFLOW
    except (BadN, ElementDumpTooLarge, ValueError) as exc:
        print(f"selfsum: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
