"""Command-line interface.

Exit codes: 0 all checks passed, 1 a check failed, 2 configuration or
validation error (the diagnostic names the offending field).
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import ConfigError, InconclusiveError, ValidationError
from .harness import COMMANDS, DEFAULT_SEED, RunConfig, load_config, run_suite


def _add_common(sub):
    sub.add_argument("--config", help="JSON config file; flags override its entries")
    sub.add_argument("--samples", type=int, help="sample count (default 100)")
    sub.add_argument("--seed", type=int, help=f"RNG seed (default {DEFAULT_SEED})")
    sub.add_argument("--radius", type=float, help="coefficient radius in (0, 1] (default 0.5)")
    sub.add_argument("--tol", type=float, help="pass tolerance (default 1e-8)")
    sub.add_argument("--floor", type=float, help="quotient domain floor (default 1e-3)")
    sub.add_argument("--out", help="write the JSON report here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lgh",
        description="Seeded numerical verification of eigenfamily and harmonic-morphism identities on classical matrix Lie groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    s = sub.add_parser("verify-identities", help="generator summation identities")
    s.add_argument("--n", type=int, default=5)
    _add_common(s)

    s = sub.add_parser("verify-lemma", help="coordinate-function tau/kappa relations")
    s.add_argument("--group", choices=["so", "u", "sp"])
    s.add_argument("--n", type=int)
    _add_common(s)

    s = sub.add_parser("verify-family", help="eigenfamily equations")
    s.add_argument("--group", choices=["so", "u", "su", "sp"])
    s.add_argument("--n", type=int)
    s.add_argument(
        "--special",
        action="store_true",
        help="SO only: isotropic-point family instead of the isotropic-subspace one",
    )
    _add_common(s)

    s = sub.add_parser("verify-morphism", help="harmonicity and conformality of P/Q")
    _add_common(s)

    s = sub.add_parser("verify-duality", help="dual eigenfamily with negated constants")
    s.add_argument("--pair", choices=["sl_r", "su_star", "sp_r", "so_star", "so_pq", "su_pq", "sp_pq"])
    s.add_argument("--n", type=int)
    s.add_argument("--p", type=int)
    s.add_argument("--q", type=int)
    _add_common(s)

    s = sub.add_parser("probe-duality", help="record dual residuals of a non-continuable family")
    s.add_argument("--p", type=int)
    s.add_argument("--q", type=int)
    _add_common(s)

    s = sub.add_parser("suite", help="run the full verification matrix")
    _add_common(s)
    return parser


def _config_from_args(args) -> RunConfig:
    cfg = load_config(args.config) if args.config else RunConfig()
    for key in ("samples", "seed", "radius", "tol", "floor"):
        val = getattr(args, key, None)
        if val is not None:
            setattr(cfg, key, val)
    if getattr(args, "n", None) is not None:
        cfg.n = args.n
    command = args.command
    if command == "verify-lemma" and args.group:
        cfg.group = {"family": args.group, "n": args.n or (cfg.group or {}).get("n")}
    if command == "verify-family" and args.group:
        spec: dict = {"group": {"family": args.group, "n": args.n}}
        if args.group == "so" and not args.special:
            spec["V"] = "standard"
        elif args.group == "so" and args.special:
            spec["p"] = [[1.0, 0.0], [0.0, 1.0]] + [[0.0, 0.0]] * ((args.n or 2) - 2)
        cfg.family = spec
    if command == "verify-duality" and args.pair:
        pair: dict = {"family": args.pair}
        if args.pair in ("so_pq", "su_pq", "sp_pq"):
            pair["p"], pair["q"] = args.p, args.q
        else:
            pair["n"] = args.n
        cfg.pair = pair
    if command == "probe-duality" and args.p is not None:
        cfg.pair = {"family": "so_pq", "p": args.p, "q": args.q}
    cfg.validate()
    return cfg


def _emit(document: dict, out: str | None):
    text = json.dumps(document, indent=2, sort_keys=True)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "suite":
            cfg = _config_from_args(args)
            document = run_suite(seed=cfg.seed, tol=cfg.tol)
            _emit(document, args.out)
            return 0 if document["passed"] else 1
        cfg = _config_from_args(args)
        report = COMMANDS[args.command](cfg)
        _emit(report.to_dict(), args.out)
        return 0 if report.passed else 1
    except ConfigError as exc:
        field = f" (field: {exc.field})" if exc.field else ""
        print(f"config error{field}: {exc}", file=sys.stderr)
        return 2
    except (ValidationError, InconclusiveError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
