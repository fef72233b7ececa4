"""Command-line driver.

Exit status: 0 success, 1 a check failed (not positive, not stable, corpus
failures), 2 usage or input error.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from .chernpoly import MixedBasisError, NotHomogeneousError, parse_expr
from .corpus import CorpusError, embedded_corpus_path, load_corpus, verify_corpus
from .partitions import ParseError, parse_partition, print_partition
from .positivity import certify
from .schur_basis import dualize, expand_to_schur, expansion_from_poly
from .schur_calc import check_suspension_stability


class UsageError(Exception):
    pass


def _ranks(text: str) -> tuple[int, int]:
    try:
        m, n = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected m,n with nonnegative integers, got {text!r}") from None
    if m < 0 or n < 0:
        raise argparse.ArgumentTypeError("ranks must be nonnegative")
    return m, n


def _read_expansion(text: str, rank_hint=None):
    poly = parse_expr(text)
    if rank_hint is not None:
        if not poly.is_homogeneous():
            raise NotHomogeneousError(f"expression has degrees {sorted(poly.degrees())}")
        return expand_to_schur(poly, rank_hint)
    return expansion_from_poly(poly)


def _print_expansion(expansion, fmt: str) -> None:
    if fmt == "machine":
        for key, coeff in expansion.items():
            print(f"{print_partition(key)}\t{coeff}")
    else:
        print(expansion)


def cmd_expand(args) -> int:
    _print_expansion(_read_expansion(args.expr, args.ranks), args.format)
    return 0


def cmd_certify(args) -> int:
    verdict = certify(parse_expr(args.expr), rank_bound=args.rank_bound)
    print(verdict)
    return 0 if verdict.positive else 1


def cmd_dualize(args) -> int:
    _print_expansion(dualize(_read_expansion(args.expr)), args.format)
    return 0


def cmd_multiply(args) -> int:
    product = _read_expansion(args.left) * _read_expansion(args.right)
    _print_expansion(product, args.format)
    return 0


def cmd_verify(args) -> int:
    path = Path(args.corpus) if args.corpus else embedded_corpus_path()
    if not path.exists():
        raise UsageError(f"no such corpus file: {path}")
    report = verify_corpus(load_corpus(path), jobs=args.jobs)
    print(report.format_machine() if args.format == "machine" else report.format_text())
    return report.exit_status


def cmd_stability(args) -> int:
    if args.ranks is None:
        raise UsageError("stability needs --ranks m,n")
    partition = parse_partition(args.partition)
    m, n = args.ranks
    stable = check_suspension_stability(partition, m, n, method=args.method)
    label = "STABLE" if stable else "UNSTABLE"
    print(f"{label} partition={print_partition(partition)} ranks={m},{n}")
    return 0 if stable else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="thompos",
        description="Schur-function calculus for Thom polynomials and a positivity certifier.",
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", help="expand an expression in the Schur basis")
    p.add_argument("expr")
    p.add_argument("--ranks", type=_ranks, help="m,n: drop partitions outside the (m,n) hook")
    p.add_argument("--format", choices=("text", "machine"), default="text")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("certify", help="decide numerical positivity")
    p.add_argument("expr")
    p.add_argument("--rank-bound", type=int, default=None, metavar="E")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("dualize", help="conjugate every partition")
    p.add_argument("expr")
    p.add_argument("--format", choices=("text", "machine"), default="text")
    p.set_defaults(func=cmd_dualize)

    p = sub.add_parser("multiply", help="product of two Schur expansions")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--format", choices=("text", "machine"), default="text")
    p.set_defaults(func=cmd_multiply)

    p = sub.add_parser("verify", help="verify a corpus file (embedded corpus if omitted)")
    p.add_argument("corpus", nargs="?")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=("text", "machine"), default="text")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("stability", help="suspension-stability check for one partition")
    p.add_argument("partition")
    p.add_argument("--ranks", type=_ranks)
    p.add_argument("--method", choices=("chern", "roots"), default="chern")
    p.set_defaults(func=cmd_stability)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (ParseError, MixedBasisError, NotHomogeneousError, CorpusError, UsageError, ValueError) as exc:
        print(f"thompos {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
