"""Command-line front end.

Subcommands: gencode, encode, syndrome, keyeq, decode, simulate,
seea-trace.  Machine-readable JSON goes to stdout (sorted keys, one
trailing newline); human diagnostics go to stderr.  Exit codes: 0 on
success, 2 on invalid input.  All randomness sits behind a single
64-bit seed; simulation trials derive their RNG from (seed, trial
index) so reports are byte-identical regardless of --jobs.

The environment variable RANKDEC_LIMIT overrides the list-decoding
enumeration budget.
"""

from __future__ import annotations

import argparse
import functools
import json
import os
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Optional, Sequence

from .decoder import (
    DEFAULT_COMBINATION_LIMIT,
    BudgetExceededError,
    decode_beyond,
    decode_bmd,
)
from .field import FieldCtx
from .gabidulin import GabidulinCode, word_add
from .keyeq import (
    ZeroSyndromeError,
    oracle_solutions,
    solution_basis,
    solve_unique,
    span_equal,
    DecodingFailure,
)
from .linpoly import LinPoly
from .seea import seea, seea_until_degree


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=True) + "\n")


def _fail(message: str) -> int:
    sys.stderr.write(f"error: {message}\n")
    return 2


def _load_json_arg(arg: str):
    """Accept inline JSON or a path to a JSON file."""
    text = arg.strip()
    if not text.startswith(("{", "[")):
        with open(text, "r", encoding="utf-8") as fh:
            text = fh.read()
    return json.loads(text)


def _load_code(arg: str) -> GabidulinCode:
    return GabidulinCode.from_json(_load_json_arg(arg))


def _load_word(code: GabidulinCode, arg: str):
    obj = _load_json_arg(arg)
    if not isinstance(obj, list) or len(obj) != code.n:
        raise ValueError(f"expected a JSON array of {code.n} element strings")
    return tuple(code.ctx.parse(s) for s in obj)


def _resolve_limit(arg: Optional[int]) -> int:
    if arg is not None:
        return arg
    env = os.environ.get("RANKDEC_LIMIT")
    if env is not None:
        return int(env)
    return DEFAULT_COMBINATION_LIMIT


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_gencode(args) -> int:
    modulus = json.loads(args.modulus) if args.modulus else None
    ctx = FieldCtx(args.q, args.m, modulus)
    h = None
    if args.h:
        h = [ctx.parse(s) for s in json.loads(args.h)]
    code = GabidulinCode(ctx, args.n, args.k, h)
    _emit(code.to_json())
    return 0


def cmd_encode(args) -> int:
    code = _load_code(args.code)
    msg = _load_json_arg(args.message)
    if not isinstance(msg, list) or len(msg) != code.k:
        raise ValueError(f"expected a JSON array of {code.k} element strings")
    word = code.encode([code.ctx.parse(s) for s in msg])
    _emit([x.to_str() for x in word])
    return 0


def cmd_syndrome(args) -> int:
    code = _load_code(args.code)
    word = _load_word(code, args.word)
    _emit({"syndrome": code.syndrome(word).to_json()})
    return 0


def cmd_keyeq(args) -> int:
    code = _load_code(args.code)
    word = _load_word(code, args.received)
    s = code.syndrome(word)
    if args.mode == "unique":
        if not s:
            _emit({"lambda": LinPoly.one(code.ctx).to_json(), "omega": []})
            return 0
        try:
            lam, omega = solve_unique(s, code.d)
        except DecodingFailure as exc:
            _emit({"failure": str(exc)})
            return 0
        _emit({"lambda": lam.to_json(), "omega": omega.to_json()})
        return 0
    if args.tau is None:
        raise ValueError("--tau is required for basis/oracle modes")
    try:
        basis = solution_basis(s, code.d, args.tau)
    except ZeroSyndromeError:
        _emit({"error_free": True})
        return 0
    if args.mode == "basis":
        out = basis.to_json()
        if args.trace:
            b = LinPoly.monomial(code.ctx, code.d - 1)
            out["trace"] = seea(b, s).to_json()
        _emit(out)
        return 0
    # oracle mode
    kernel = oracle_solutions(s, code.d, args.tau)
    _emit(
        {
            "kernel": [p.to_json() for p in kernel],
            "kernel_dimension": len(kernel),
            "basis_size": basis.size,
            "span_equal": span_equal(code.ctx, basis.delta, kernel, args.tau + 1),
        }
    )
    return 0


def cmd_decode(args) -> int:
    code = _load_code(args.code)
    word = _load_word(code, args.received)
    if args.mode == "bmd":
        outcome = decode_bmd(code, word)
    else:
        if args.tau is None:
            raise ValueError("--tau is required for beyond mode")
        outcome = decode_beyond(code, word, args.tau, _resolve_limit(args.limit))
    _emit(outcome.to_json())
    return 0


def cmd_seea_trace(args) -> int:
    ctx = FieldCtx.from_json(_load_json_arg(args.field))
    b = LinPoly.from_json(ctx, _load_json_arg(args.b))
    a = LinPoly.from_json(ctx, _load_json_arg(args.a))
    if args.bound is not None:
        i, trace = seea_until_degree(b, a, args.bound)
        out = trace.to_json()
        out["stop_index"] = i
    else:
        out = seea(b, a).to_json()
    _emit(out)
    return 0


# ---------------------------------------------------------------------------
# simulate
# ---------------------------------------------------------------------------

def _trial_seed(seed: int, index: int) -> int:
    # Fixed mixing so per-trial RNG streams are independent of --jobs.
    return (seed * 0x9E3779B97F4A7C15 + index * 0xBF58476D1CE4E5B9 + 1) % (1 << 63)


@functools.lru_cache(maxsize=8)
def _cached_code(code_json: str) -> GabidulinCode:
    return GabidulinCode.from_json(code_json)


def _run_trial(task: tuple) -> dict:
    code_json, rank_t, tau, mode, limit, seed, index = task
    code = _cached_code(code_json)
    ctx = code.ctx
    rng = random.Random(_trial_seed(seed, index))
    message = code.random_message(rng)
    sent = code.encode(message)
    error = code.random_error(rank_t, rng)
    received = word_add(sent, error)
    before = ctx.mult_count
    record = {"index": index, "budget_exceeded": False, "basis_size": None,
              "list_size": None}
    if mode == "unique":
        outcome = decode_bmd(code, received)
        record["success"] = outcome.kind == "codeword" and outcome.codewords[0] == sent
    else:
        try:
            outcome = decode_beyond(code, received, tau, limit)
        except BudgetExceededError:
            record["budget_exceeded"] = True
            record["success"] = False
        else:
            record["success"] = sent in outcome.codewords
            record["list_size"] = outcome.diagnostics.get("list_size")
            record["basis_size"] = outcome.diagnostics.get("basis_size")
    record["mults"] = ctx.mult_count - before
    return record


def cmd_simulate(args) -> int:
    code = _load_code(args.code)
    if args.mode == "list" and args.tau is None:
        raise ValueError("--tau is required in list mode")
    if args.rank < 0 or args.rank > min(code.ctx.m, code.n):
        raise ValueError("rank out of range for this code")
    limit = _resolve_limit(args.limit)
    code_json = json.dumps(code.to_json(), sort_keys=True)
    tasks = [
        (code_json, args.rank, args.tau, args.mode, limit, args.seed, i)
        for i in range(args.trials)
    ]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            records = list(pool.map(_run_trial, tasks, chunksize=max(1, args.trials // (4 * args.jobs))))
    else:
        records = [_run_trial(t) for t in tasks]
    records.sort(key=lambda r: r["index"])

    successes = sum(1 for r in records if r["success"])
    budget = sum(1 for r in records if r["budget_exceeded"])
    list_hist: dict[str, int] = {}
    basis_hist: dict[str, int] = {}
    for r in records:
        if r["list_size"] is not None:
            k = str(r["list_size"])
            list_hist[k] = list_hist.get(k, 0) + 1
        if r["basis_size"] is not None:
            k = str(r["basis_size"])
            basis_hist[k] = basis_hist.get(k, 0) + 1
    total_mults = sum(r["mults"] for r in records)
    report = {
        "mode": args.mode,
        "seed": args.seed,
        "tau": args.tau,
        "trials": args.trials,
        "per_rank": {
            str(args.rank): {
                "trials": args.trials,
                "success": successes,
                "failure": args.trials - successes - budget,
                "budget_exceeded": budget,
                "success_rate": successes / args.trials if args.trials else None,
                "list_size_hist": list_hist,
            }
        },
        "basis_size_hist": basis_hist,
        "mult_count": {
            "total": total_mults,
            "per_trial_mean": total_mults / args.trials if args.trials else None,
        },
    }
    _emit(report)
    return 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rankdec",
        description="Gabidulin (rank-metric) codes: encoding, key-equation "
                    "solving, and decoding beyond half the minimum distance.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gencode", help="construct a code and print its JSON")
    p.add_argument("--q", type=int, default=2)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--modulus", help="JSON array of modulus coefficients (ascending)")
    p.add_argument("--h", help="JSON array of element strings")
    p.set_defaults(func=cmd_gencode)

    p = sub.add_parser("encode", help="encode a message")
    p.add_argument("--code", required=True, help="code JSON (inline or file path)")
    p.add_argument("--message", required=True, help="JSON array of k element strings")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("syndrome", help="syndrome polynomial of a word")
    p.add_argument("--code", required=True)
    p.add_argument("--word", required=True, help="JSON array of n element strings")
    p.set_defaults(func=cmd_syndrome)

    p = sub.add_parser("keyeq", help="solve the key equation for a received word")
    p.add_argument("--code", required=True)
    p.add_argument("--received", required=True)
    p.add_argument("--tau", type=int)
    p.add_argument("--mode", choices=["unique", "basis", "oracle"], default="unique")
    p.add_argument("--trace", action="store_true", help="also emit the SEEA trace (basis mode)")
    p.set_defaults(func=cmd_keyeq)

    p = sub.add_parser("decode", help="decode a received word")
    p.add_argument("--code", required=True)
    p.add_argument("--received", required=True)
    p.add_argument("--mode", choices=["bmd", "beyond"], default="bmd")
    p.add_argument("--tau", type=int)
    p.add_argument("--limit", type=int)
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("simulate", help="seeded Monte-Carlo decoding statistics")
    p.add_argument("--code", required=True)
    p.add_argument("--rank", type=int, required=True, help="error rank per trial")
    p.add_argument("--tau", type=int)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--mode", choices=["unique", "list"], default="unique")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--limit", type=int)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("seea-trace", help="dump a symbolic EEA transcript")
    p.add_argument("--field", required=True, help="field JSON (inline or file path)")
    p.add_argument("--b", required=True, help="JSON array: the higher-degree input")
    p.add_argument("--a", required=True, help="JSON array: the lower-degree input")
    p.add_argument("--bound", type=int, help="stop at the remainder-degree straddle")
    p.set_defaults(func=cmd_seea_trace)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        return _fail(str(exc))
    except (ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        return _fail(str(exc))


if __name__ == "__main__":
    sys.exit(main())
