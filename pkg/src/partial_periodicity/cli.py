"""Command-line front end: eval, table, construct, verify, bench."""

from __future__ import annotations

import argparse
import math
import random
import statistics
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace

from . import closedform, oracle, sturmian, thresholds, words
from .errors import ArithmeticOverflowError, BudgetExceededError, checked

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DOMAIN = 3
EXIT_OVERFLOW = 4
EXIT_VERIFY = 5

LINEAR_CUTOFF = 10**6

_EVAL = {
    "L": (thresholds.l_full, ("h", "p", "q")),
    "H": (thresholds.h_full, ("n", "p", "q")),
    "Ld": (thresholds.l_d_fast, ("h", "p", "q")),
    "Hs": (thresholds.h_s, ("n", "p", "q")),
    "Ls": (thresholds.l_s, ("h", "p", "q")),
    "Hd": (thresholds.h_d_direct, ("n", "p", "q")),
    "Gt": (thresholds.g_tilde, ("k", "p", "q")),
}

_TABLE_KINDS = {"L": "l", "Ld": "l_d", "Gt": "g_tilde"}


class UsageError(Exception):
    pass


def _int(text: str) -> int:
    try:
        value = int(text, 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a decimal integer: {text!r}") from None
    return checked(value)


def _arity(values: list[int], names: tuple[str, ...], what: str) -> None:
    if len(values) != len(names):
        raise UsageError(f"{what} expects {len(names)} integers ({' '.join(names)}), "
                         f"got {len(values)}")


def cmd_eval(args) -> int:
    fn, names = _EVAL[args.kind]
    _arity(args.values, names, f"eval {args.kind}")
    print(fn(*args.values))
    return EXIT_OK


def cmd_table(args) -> int:
    if args.h < 0:
        raise ValueError("h must be non-negative")
    table = closedform.table_for(_TABLE_KINDS[args.kind], args.h)
    if args.format == "text":
        sys.stdout.write(table.to_text())
    elif args.format == "tsv":
        sys.stdout.write(table.to_tsv())
    else:
        print(table.to_json())
    return EXIT_OK


def cmd_construct(args) -> int:
    v = args.values
    if args.what == "S":
        _arity(v, ("p", "q"), "construct S")
        word = words.fine_wilf_word(*v)
    elif args.what == "W":
        _arity(v, ("p", "q"), "construct W")
        word = words.w_word(*v)
    elif args.what == "extremal":
        _arity(v, ("n", "p", "q"), "construct extremal")
        word = words.extremal_word_s(*v)
    elif args.what == "special":
        _arity(v, ("n", "p", "q", "l"), "construct special")
        word = words.special_word(*v)
    else:
        word = sturmian.sturmian(tuple(v))
    print(word)
    return EXIT_OK


@dataclass
class CellReport:
    p: int
    q: int
    passed: dict[str, int] = field(default_factory=dict)
    failed: dict[str, int] = field(default_factory=dict)
    unresolved: int = 0
    records: list[tuple] = field(default_factory=list)

    def check(self, prop: str, arg: int, expected: int, got: int) -> None:
        if expected == got:
            self.passed[prop] = self.passed.get(prop, 0) + 1
        else:
            self.failed[prop] = self.failed.get(prop, 0) + 1
            self.records.append((prop, self.p, self.q, arg, expected, got))


PROPERTIES = ("h_full_vs_oracle", "l_full_vs_oracle", "l_piecewise_vs_l_full",
              "l_d_paths_agree")


def _fault(table: closedform.PiecewiseThreshold) -> closedform.PiecewiseThreshold:
    # shift the constant of the first piece by one
    first = table.pieces[0]
    bad = replace(first, form=replace(first.form, c_0=first.form.c_0 + 1))
    return replace(table, pieces=(bad,) + table.pieces[1:])


def verify_cell(p: int, q: int, n_max: int, h_max: int, inject_fault: bool = False) -> CellReport:
    rep = CellReport(p, q)
    start = p + q - 2
    h_values = {n: oracle.h_oracle(n, p, q) for n in range(start, n_max + 1)}
    if p > 2:
        for n, expected in h_values.items():
            rep.check("h_full_vs_oracle", n, expected, thresholds.h_full(n, p, q))
    for h in range(h_max + 1):
        found = next((n for n, v in h_values.items() if v > h), None)
        if found is None:
            rep.unresolved += 1
            continue
        rep.check("l_full_vs_oracle", h, found, thresholds.l_full(h, p, q))
    if p > 2:
        for h in range(min(h_max, p + q - 3) + 1):
            table = closedform.l_piecewise(h)
            if inject_fault and h == 0:
                table = _fault(table)
            rep.check("l_piecewise_vs_l_full", h, thresholds.l_full(h, p, q),
                      closedform.eval_piecewise(table, p, q))
        for h in range(min(h_max, p + q - 4) + 1):
            fast = thresholds.l_d_fast(h, p, q)
            for other in (thresholds.l_d_linear(h, p, q), sturmian.l_d_via_sturmian(h, p, q),
                          closedform.eval_piecewise(closedform.l_d_piecewise(h), p, q)):
                rep.check("l_d_paths_agree", h, fast, other)
    return rep


def grid(q_max: int) -> list[tuple[int, int]]:
    return [(p, q) for q in range(3, q_max + 1) for p in range(2, q) if math.gcd(p, q) == 1]


def cmd_verify(args) -> int:
    cells = grid(args.q_max)
    jobs = [(p, q, args.n_max, args.h_max, args.inject_fault) for p, q in cells]
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            reports = list(pool.map(verify_cell, *zip(*jobs)))
    else:
        reports = [verify_cell(*job) for job in jobs]
    reports.sort(key=lambda r: (r.q, r.p))
    print(f"grid: {len(cells)} pairs, q <= {args.q_max}, n <= {args.n_max}, h <= {args.h_max}")
    failures = 0
    for prop in PROPERTIES:
        ok = sum(r.passed.get(prop, 0) for r in reports)
        bad = sum(r.failed.get(prop, 0) for r in reports)
        failures += bad
        print(f"{prop}: {ok} passed, {bad} failed")
    unresolved = sum(r.unresolved for r in reports)
    print(f"beyond n-max (skipped): {unresolved}")
    records = sorted(rec for r in reports for rec in r.records)
    for prop, p, q, arg, expected, got in records:
        print(f"MISMATCH {prop} p={p} q={q} arg={arg} expected={expected} got={got}")
    return EXIT_VERIFY if failures else EXIT_OK


def _median_us(fn, samples) -> float:
    times = []
    for h in samples:
        t0 = time.perf_counter()
        fn(h)
        times.append(time.perf_counter() - t0)
    return statistics.median(times) * 1e6


def cmd_bench(args) -> int:
    p, q = args.p, args.q
    if not 2 < p < q or math.gcd(p, q) != 1:
        raise ValueError(f"bench needs coprime 2 < p < q, got p={p}, q={q}")
    rng = random.Random(args.seed)
    span = 4 * (p + q)
    samples = [rng.randrange(span) for _ in range(args.count)]
    print(f"seed={args.seed} p={p} q={q} count={args.count}")
    fast = {h: thresholds.l_d_fast(h, p, q) for h in samples}
    print(f"l_d_fast median: {_median_us(lambda h: thresholds.l_d_fast(h, p, q), samples):.2f} us")
    if max(samples) > LINEAR_CUTOFF:
        print(f"l_d_linear skipped: budgets exceed {LINEAR_CUTOFF}")
        return EXIT_OK
    for h in samples:
        slow = thresholds.l_d_linear(h, p, q)
        if slow != fast[h]:
            print(f"MISMATCH h={h} p={p} q={q} fast={fast[h]} linear={slow}")
            return EXIT_VERIFY
    print(f"l_d_linear median: {_median_us(lambda h: thresholds.l_d_linear(h, p, q), samples):.2f} us")
    print(f"all {args.count} samples agree")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="partial-periodicity",
        description="Thresholds for the periodicity lemma on partial words.")
    sub = parser.add_subparsers(dest="command", required=True)

    ev = sub.add_parser("eval", help="evaluate one threshold function")
    ev.add_argument("kind", choices=sorted(_EVAL))
    ev.add_argument("values", nargs="+", type=_int)
    ev.set_defaults(func=cmd_eval)

    tb = sub.add_parser("table", help="print the piecewise-linear table for budget h")
    tb.add_argument("h", type=_int)
    tb.add_argument("--format", choices=("text", "tsv", "structured"), default="text")
    tb.add_argument("--kind", choices=sorted(_TABLE_KINDS), default="L")
    tb.set_defaults(func=cmd_table)

    co = sub.add_parser("construct", help="print an extremal or Sturmian word")
    co.add_argument("what", choices=("S", "W", "extremal", "special", "sturmian"))
    co.add_argument("values", nargs="*", type=_int)
    co.set_defaults(func=cmd_construct)

    ve = sub.add_parser("verify", help="sweep formulas against the brute-force oracle")
    ve.add_argument("--q-max", type=_int, default=11)
    ve.add_argument("--n-max", type=_int, default=60)
    ve.add_argument("--h-max", type=_int, default=20)
    ve.add_argument("--jobs", type=_int, default=1)
    ve.add_argument("--inject-fault", action="store_true",
                    help="corrupt one table piece to exercise the mismatch path")
    ve.set_defaults(func=cmd_verify)

    be = sub.add_parser("bench", help="time the logarithmic L^d path against the linear one")
    be.add_argument("p", type=_int)
    be.add_argument("q", type=_int)
    be.add_argument("--count", type=_int, default=1000)
    be.add_argument("--seed", type=_int, default=12345)
    be.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    except ArithmeticOverflowError as exc:
        print(f"overflow: {exc}", file=sys.stderr)
        return EXIT_OVERFLOW
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ArithmeticOverflowError as exc:
        print(f"overflow: {exc}", file=sys.stderr)
        return EXIT_OVERFLOW
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except ValueError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
