"""
Point d'entrée en ligne de commande : run(argv) -> code de sortie.
"""
import sys
from typing import Optional, Sequence

from cli.commands import COMMANDS
from cli.parser import build_parser
from core.config import settings
from core.exceptions import PlhomError
from core.logging import configure_logging


def _apply_overrides(args) -> None:
    if args.threads is not None:
        settings.THREADS = args.threads
    if args.assign_budget is not None:
        settings.ASSIGN_BUDGET = args.assign_budget
    if args.x_budget is not None:
        settings.X_BUDGET = args.x_budget
    if args.degree_budget is not None:
        settings.DEGREE_BUDGET = args.degree_budget


def run(argv: Optional[Sequence[str]] = None) -> int:
    saved = settings.model_dump()
    try:
        args = build_parser().parse_args(argv)
        configure_logging(args.log_level)
        _apply_overrides(args)
        output = COMMANDS[args.command](args)
    except PlhomError as exc:
        print(f"error: {exc.code}: {exc}", file=sys.stderr)
        return exc.exit_code
    finally:
        for key, value in saved.items():
            setattr(settings, key, value)
    print(output.rstrip("\n"))
    return 0


__all__ = ["run"]
