"""Command-line surface: statistics, gamma tables, verification harness,
bijections, orbits, and rix-factorizations.

Exit-code contract: 0 success, 1 verification/domain failure, 2 usage
error (including unparseable permutations and unknown check ids).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from . import actions, bijections, checks, families, rixfact
from .errors import (
    BudgetExceeded,
    MismatchAgainstDirect,
    NotABijection,
    NotExpandable,
    NotInDomain,
)
from .mpoly import GammaExpansion
from .perm import format_word, parse_permutation, statistics

HARD_CAP = 12
DEFAULT_MAX_N = 9


def _default_max_n() -> int:
    raw = os.environ.get("EULERIAN_GAMMA_MAX_N")
    if raw is None:
        return DEFAULT_MAX_N
    try:
        return min(int(raw), HARD_CAP)
    except ValueError:
        return DEFAULT_MAX_N


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--max-n",
        type=int,
        default=None,
        help=f"enumeration ceiling (1..{HARD_CAP}, default {DEFAULT_MAX_N} "
        "or EULERIAN_GAMMA_MAX_N)",
    )
    common.add_argument(
        "--output",
        choices=("json", "tsv", "text"),
        default="text",
        help="output format (default text)",
    )
    common.add_argument(
        "--threads",
        type=int,
        default=1,
        help="verification workers (0 = auto, default 1)",
    )
    common.add_argument(
        "--group-by-t",
        action="store_true",
        help="group polynomial output by powers of t",
    )

    parser = argparse.ArgumentParser(
        prog="eulerian-gamma",
        description=__doc__,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_stats = sub.add_parser(
        "stats", parents=[common], help="all statistics of one permutation"
    )
    p_stats.add_argument("perm")

    p_gamma = sub.add_parser(
        "gamma", parents=[common], help="gamma coefficient table"
    )
    p_gamma.add_argument(
        "family", choices=("basic", "derangement", "cyc", "sw3")
    )
    p_gamma.add_argument("n", type=int)

    p_verify = sub.add_parser(
        "verify", parents=[common], help="run verification checks"
    )
    p_verify.add_argument(
        "check_ids",
        nargs="+",
        metavar="check-id",
        help='check ids, or "all"',
    )

    p_map = sub.add_parser("map", parents=[common], help="apply a bijection")
    p_map.add_argument("name", choices=("phi", "phi-inv", "f", "f-inv"))
    p_map.add_argument("perm")

    p_orbit = sub.add_parser(
        "orbit", parents=[common], help="valley-hopping orbit"
    )
    p_orbit.add_argument("perm")
    p_orbit.add_argument(
        "--action", choices=("mfs", "restricted"), default="mfs"
    )

    p_rix = sub.add_parser(
        "rixfact", parents=[common], help="rix-factorization"
    )
    p_rix.add_argument("perm")

    return parser


def _resolve_max_n(args: argparse.Namespace) -> int:
    max_n = args.max_n if args.max_n is not None else _default_max_n()
    if not 1 <= max_n <= HARD_CAP:
        raise SystemExit(2)
    return max_n


def cmd_stats(args: argparse.Namespace) -> int:
    bundle = statistics(parse_permutation(args.perm))
    data = bundle.as_dict()
    if args.output == "json":
        print(json.dumps(data))
    elif args.output == "tsv":
        print("\t".join(data))
        print("\t".join(_render_value(v) for v in data.values()))
    else:
        for key, value in data.items():
            print(f"{key} = {_render_value(value)}")
    return 0


def _render_value(value) -> str:
    if isinstance(value, list):
        return "{" + ",".join(str(v) for v in value) + "}"
    return str(value)


_GAMMA_FAMILIES = {
    "basic": families.gamma_basic,
    "derangement": families.gamma_derangement,
    "cyc": families.cyc_gamma,
    "sw3": families.sw3_gamma,
}


def cmd_gamma(args: argparse.Namespace, max_n: int) -> int:
    if args.n < 1 or args.n > max_n:
        print(f"n must be in 1..{max_n}", file=sys.stderr)
        return 2
    try:
        expansion: GammaExpansion = _GAMMA_FAMILIES[args.family](args.n)
    except (MismatchAgainstDirect, NotExpandable) as exc:
        print(f"internal cross-check failed: {exc}", file=sys.stderr)
        return 1
    rows = [
        (k, g.to_text_grouped() if args.group_by_t else g.to_text_compact())
        for k, g in enumerate(expansion.gammas)
    ]
    if args.output == "json":
        print(
            json.dumps(
                {
                    "family": args.family,
                    "n": args.n,
                    "center": expansion.center,
                    "gammas": {str(k): text for k, text in rows},
                }
            )
        )
    elif args.output == "tsv":
        for k, text in rows:
            print(f"{k}\t{text}")
    else:
        for k, text in rows:
            print(f"k={k}  gamma={text}")
    return 0


def _run_one(item: tuple[str, int]) -> checks.VerificationReport:
    check_id, max_n = item
    return checks.run_check(check_id, max_n)


def cmd_verify(args: argparse.Namespace, max_n: int) -> int:
    if args.check_ids == ["all"]:
        ids = list(checks.CHECKS)
    else:
        ids = args.check_ids
        unknown = [cid for cid in ids if cid not in checks.CHECKS]
        if unknown:
            print(f"unknown check ids: {', '.join(unknown)}", file=sys.stderr)
            return 2
    jobs = [(cid, max_n) for cid in ids]
    if args.threads == 1 or len(jobs) <= 1:
        reports = [_run_one(job) for job in jobs]
    else:
        workers = args.threads if args.threads > 0 else None
        with ProcessPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(_run_one, jobs))
    # restore the requested emission order regardless of worker count
    for report in reports:
        data = report.as_dict()
        if args.output == "tsv":
            print(
                f"{data['check_id']}\t{'pass' if data['passed'] else 'FAIL'}"
                f"\t{data['n_range'][0]}..{data['n_range'][1]}"
                f"\t{data['elapsed_ms']}"
            )
        else:
            print(json.dumps(data))
    return 0 if all(r.passed for r in reports) else 1


_MAPS = {
    "phi": bijections.phi,
    "phi-inv": bijections.phi_inv,
    "f": bijections.f_map,
    "f-inv": bijections.f_inv,
}


def cmd_map(args: argparse.Namespace) -> int:
    w = parse_permutation(args.perm).word
    image = _MAPS[args.name](w)
    print(format_word(image))
    return 0


def cmd_orbit(args: argparse.Namespace) -> int:
    w = parse_permutation(args.perm).word
    members = sorted(actions.orbit(w, args.action))
    if args.output == "json":
        print(json.dumps([format_word(m) for m in members]))
    else:
        for m in members:
            print(format_word(m))
    return 0


def cmd_rixfact(args: argparse.Namespace) -> int:
    w = parse_permutation(args.perm).word
    if not w:
        print("rixfact requires n >= 1", file=sys.stderr)
        return 2
    print(rixfact.format_factorization(rixfact.rix_factorize(w)))
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        max_n = _resolve_max_n(args)
        if args.command == "stats":
            return cmd_stats(args)
        if args.command == "gamma":
            return cmd_gamma(args, max_n)
        if args.command == "verify":
            return cmd_verify(args, max_n)
        if args.command == "map":
            return cmd_map(args)
        if args.command == "orbit":
            return cmd_orbit(args)
        if args.command == "rixfact":
            return cmd_rixfact(args)
        return 2
    except NotABijection as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (NotInDomain, BudgetExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
