"""Command-line front end.

Bit-string arguments are written v(0)...v(n) left to right.  Hex truth
tables are the plain hex rendering of the packed table int (lowest
digit = points 0..3); their length fixes n, so it must be a power of
two.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from .boolfn import TruthTable, algebraic_immunity, anf_to_str, moebius, support_weights
from .constructions import (
    gap_annihilator,
    max_ai_necessary_condition,
    necessary_condition_annihilator,
    solve_gap_system,
)
from .surveyor import (
    records_to_csv,
    records_to_json,
    report_to_json,
    survey,
    verify_theorems,
)
from .symfn import SanfVector, SymValueVector, expand, sanf_to_value, value_to_sanf


def _cmd_ai(args: argparse.Namespace) -> int:
    if args.table is not None:
        t = TruthTable.from_hex(args.table)
    else:
        t = expand(SymValueVector.from_bits_str(args.value_vector))
    w = algebraic_immunity(t)
    print(f"n: {t.n}")
    print(f"ai: {w.ai}")
    print(f"side: {'f+1' if w.side else 'f'}")
    print(f"witness: {anf_to_str(w.witness)}")
    return 0


def _cmd_convert(args: argparse.Namespace) -> int:
    if args.value_vector is not None:
        vec = SymValueVector.from_bits_str(args.value_vector)
        lam = value_to_sanf(vec)
    else:
        lam = SanfVector.from_bits_str(args.sanf)
        vec = sanf_to_value(lam)
    print(f"value-vector: {vec.bits_str()}")
    print(f"sanf: {lam.bits_str()}")
    return 0


def _cmd_lemma4(args: argparse.Namespace) -> int:
    system = solve_gap_system(args.i)
    picks = system.solutions if args.all else (system.canonical(),)
    for sol in picks:
        lam = SanfVector(2 * args.i + 1, sol)
        print(f"sanf: {lam.bits_str()}  value-vector: {sanf_to_value(lam).bits_str()}")
    return 0


def _cmd_gap_annihilator(args: argparse.Namespace) -> int:
    ga = gap_annihilator(args.n, args.i)
    print(f"n: {ga.n}")
    print(f"i: {ga.i}")
    print(f"g: {ga.g_part.bits_str()}")
    print(f"table: {ga.product.to_hex()}")
    print(f"degree: {moebius(ga.product).degree()}")
    print("support-weights: " + " ".join(map(str, support_weights(ga.product))))
    return 0


def _cmd_theorem3(args: argparse.Namespace) -> int:
    lam = SanfVector.from_bits_str(args.sanf)
    if lam.n != args.n:
        raise ValueError(f"--sanf has n = {lam.n}, but --n is {args.n}")
    print(f"condition: {'true' if max_ai_necessary_condition(lam) else 'false'}")
    if args.emit_annihilator:
        g = necessary_condition_annihilator(args.n)
        print(f"annihilator: {g.to_hex()}")
        print(f"annihilator-degree: {moebius(g).degree()}")
    return 0


def _cmd_survey(args: argparse.Namespace) -> int:
    records = survey(args.n, args.filter.replace("-", "_"), jobs=args.jobs)
    text = records_to_csv(records) if args.format == "csv" else records_to_json(records)
    if args.out is None:
        sys.stdout.write(text)
        return 0
    out = Path(args.out)
    out.write_text(text)
    if records and not args.no_figure:
        from .plotting import save_survey_figure

        save_survey_figure(records, str(out.with_suffix(".png")))
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    report = verify_theorems(args.n, jobs=args.jobs)
    sys.stdout.write(report_to_json(report))
    ok = report.theorem2_holds and report.lemma2_holds and report.theorem3_holds
    return 0 if ok else 2


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="symbool",
        description="Symmetric Boolean functions, annihilators, and algebraic immunity.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ai", help="algebraic immunity of a function")
    grp = p.add_mutually_exclusive_group(required=True)
    grp.add_argument("--table", help="hex truth table")
    grp.add_argument("--value-vector", help="v(0)..v(n) bit string (symmetric input)")
    p.set_defaults(func=_cmd_ai)

    p = sub.add_parser("convert", help="value vector <-> coefficient vector")
    grp = p.add_mutually_exclusive_group(required=True)
    grp.add_argument("--value-vector", help="v(0)..v(n) bit string")
    grp.add_argument("--sanf", help="lam(0)..lam(n) bit string")
    p.set_defaults(func=_cmd_convert)

    p = sub.add_parser("lemma4", help="gap-system solutions for a given i")
    p.add_argument("--i", type=int, required=True, help="gap parameter (>= 1)")
    p.add_argument("--all", action="store_true", help="print the whole basis")
    p.set_defaults(func=_cmd_lemma4)

    p = sub.add_parser("gap-annihilator", help="n-variable product annihilator")
    p.add_argument("--n", type=int, required=True, help="odd variable count")
    p.add_argument("--i", type=int, required=True, help="gap parameter")
    p.set_defaults(func=_cmd_gap_annihilator)

    p = sub.add_parser("theorem3", help="necessary coefficient condition")
    p.add_argument("--n", type=int, required=True, help="variable count (>= 2)")
    p.add_argument("--sanf", required=True, help="lam(0)..lam(n) bit string")
    p.add_argument(
        "--emit-annihilator",
        action="store_true",
        help="also print the product annihilator for functions failing the condition",
    )
    p.set_defaults(func=_cmd_theorem3)

    p = sub.add_parser("survey", help="per-function records over an enumeration")
    p.add_argument("--n", type=int, required=True)
    p.add_argument(
        "--filter",
        choices=["trivial-balanced", "balanced", "all"],
        default="all",
    )
    p.add_argument("--format", choices=["json", "csv"], default="csv")
    p.add_argument("--out", help="write the report here (a .png lands beside it)")
    p.add_argument("--no-figure", action="store_true", help="skip the figure")
    p.add_argument("--jobs", type=int, default=1, help="worker threads")
    p.set_defaults(func=_cmd_survey)

    p = sub.add_parser("verify", help="aggregate verification report for odd n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1, help="worker threads")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
