import argparse
import logging
import sys
from typing import Callable, List, Optional, Tuple

from pydantic import BaseModel, ValidationError
from rich.console import Console

from cli.commands import (
    INVARIANTS,
    AbelianInput,
    InvariantInput,
    OracleInput,
    PicInput,
    SchubertInput,
    TrClassInput,
    VerifyInput,
    cmd_abelian,
    cmd_invariant,
    cmd_oracle,
    cmd_pic,
    cmd_ratmaps,
    cmd_schubert,
    cmd_tr_class,
    cmd_verify,
)
from cli.rendering import OutputFormat, emit
from cli.report_models import Report
from cli.verify_suites import SuiteRegistry, register_suites
from config.settings import LOG_LEVEL, VERBOSE_LOG_LEVEL
from core.errors import TripleCheckError
from solver.closed_form import ClosedFormVariant
from util.logging_mixin import setup_logging

EXIT_USAGE = 2

logger = logging.getLogger(__name__)

register_suites()


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=[f.value for f in OutputFormat], default=OutputFormat.TEXT.value)
    common.add_argument("--json", action="store_const", dest="format", const=OutputFormat.JSON.value, help="Kurzform für --format json")
    common.add_argument("--verbose", "-v", action="store_true", help="Fortschritt auf stderr loggen")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(prog="triplecheck", description="Exakte Rekonstruktion des Divisors TR̄_d auf M̄_{2d−3}")
    commands = parser.add_subparsers(dest="command", required=True)

    invariant = commands.add_parser("invariant", parents=[common], help="Büschelanzahlen a, b, c, e, F, N, ...")
    invariant.add_argument("name", choices=list(INVARIANTS))
    for param in ("d", "g", "a", "b", "gamma", "r"):
        invariant.add_argument(f"--{param}", type=int)

    schubert = commands.add_parser("schubert", parents=[common], help="Integrale spezieller Schubert-Klassen auf G(1,n)")
    schubert.add_argument("--n", type=int, required=True)
    schubert.add_argument("--specials", type=int, nargs="+")

    tr_class = commands.add_parser("tr-class", parents=[common], help="Klasse von TR̄_d")
    tr_class.add_argument("--d", type=int, required=True)
    tr_class.add_argument("--method", choices=["solver", "closed-form"], default="solver")
    tr_class.add_argument("--variant", choices=[v.value for v in ClosedFormVariant], default=ClosedFormVariant.CORRECTED.value)

    verify = commands.add_parser("verify", parents=[common], help="Prüf-Suiten ausführen")
    verify.add_argument("--suite", default="all", help=f"eine von {', '.join(SuiteRegistry.get_suite_names())} oder all")
    verify.add_argument("--d-min", type=int)
    verify.add_argument("--d-max", type=int)

    pic = commands.add_parser("pic", parents=[common], help="Benannte Klassen auf M̄_{2,1} und χ*(TR̄_d)")
    pic.add_argument("--d", type=int, default=3)

    abelian = commands.add_parser("abelian", parents=[common], help="Schnittzahlen auf E×E und Theta-Rückzüge")
    abelian.add_argument("--g", type=int, default=2)
    abelian.add_argument("--b", type=int, default=3)
    abelian.add_argument("--c", type=int, default=3)

    oracle = commands.add_parser("oracle", parents=[common], help="Torsionszählungen auf Kurven über F_p")
    oracle.add_argument("--n", type=int, default=3)
    oracle.add_argument("--p-max", type=int)
    oracle.add_argument("--seed", type=int)

    commands.add_parser("ratmaps", parents=[common], help="Die expliziten Überlagerungen P¹ → P¹")
    return parser


def _options(args: argparse.Namespace, *names: str) -> dict:
    return {name: getattr(args, name) for name in names if getattr(args, name, None) is not None}


def build_request(args: argparse.Namespace) -> Tuple[Callable[..., Report], Optional[BaseModel]]:
    """Übersetzt die Argumente in Befehl und validierte Anfrage."""
    if args.command == "invariant":
        return cmd_invariant, InvariantInput(name=args.name, **_options(args, "d", "g", "a", "b", "gamma", "r"))
    if args.command == "schubert":
        return cmd_schubert, SchubertInput(**_options(args, "n", "specials"))
    if args.command == "tr-class":
        return cmd_tr_class, TrClassInput(d=args.d, method=args.method, variant=args.variant)
    if args.command == "verify":
        return cmd_verify, VerifyInput(**_options(args, "suite", "d_min", "d_max"))
    if args.command == "pic":
        return cmd_pic, PicInput(d=args.d)
    if args.command == "abelian":
        return cmd_abelian, AbelianInput(g=args.g, b=args.b, c=args.c)
    if args.command == "oracle":
        return cmd_oracle, OracleInput(**_options(args, "n", "p_max", "seed"))
    return cmd_ratmaps, None


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    setup_logging(VERBOSE_LOG_LEVEL if args.verbose else LOG_LEVEL)

    try:
        handler, request = build_request(args)
        report = handler(request) if request is not None else handler()
    except ValidationError as e:
        parser.print_usage(sys.stderr)
        for error in e.errors():
            print(f"{parser.prog}: {error['msg']}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as e:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: {e}", file=sys.stderr)
        return EXIT_USAGE
    except TripleCheckError as e:
        logger.error(f"❌ {e}")
        return 1

    emit(report, OutputFormat(args.format), Console())
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
