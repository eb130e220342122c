"""
Définition argparse des sous-commandes.
"""
import argparse

from core.exceptions import UsageError
from models.enums import EvalMethod, GadgetTarget


class CliParser(argparse.ArgumentParser):
    """Les erreurs d'usage deviennent des UsageError (code de sortie 1)."""

    def error(self, message: str):
        raise UsageError(message)


def _common_options() -> argparse.ArgumentParser:
    common = CliParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--threads", type=int, default=None, help="worker processes for enumeration")
    common.add_argument("--assign-budget", type=int, default=None)
    common.add_argument("--x-budget", type=int, default=None)
    common.add_argument("--degree-budget", type=int, default=None)
    common.add_argument("--log-level", type=str.upper, default=None,
                        choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"])
    return common


def build_parser() -> CliParser:
    common = _common_options()
    parser = CliParser(prog="plhom", description="Exact planar partition functions and dichotomy checks.")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", parser_class=CliParser)
    sub.required = True

    p = sub.add_parser("eval", parents=[common], help="evaluate Z_M(G)")
    p.add_argument("--matrix", required=True)
    p.add_argument("--graph", required=True)
    p.add_argument("--method", choices=[m.value for m in EvalMethod], default=EvalMethod.AUTO.value)

    p = sub.add_parser("classify", parents=[common], help="dichotomy verdict")
    p.add_argument("--matrix", required=True)

    p = sub.add_parser("transform", parents=[common], help="apply an edge gadget")
    p.add_argument("--gadget", required=True, help="thicken:N, stretch:N, rmid:N or bridge")
    p.add_argument("--on", choices=[t.value for t in GadgetTarget], default=GadgetTarget.GRAPH.value)
    p.add_argument("--graph")
    p.add_argument("--matrix")

    for name, text in (("counts", "count map by enumeration"),
                       ("interpolate", "count map by Vandermonde recovery")):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("--matrix", required=True)
        p.add_argument("--graph", required=True)

    p = sub.add_parser("lattice", parents=[common], help="lattice of multiplicative relations")
    p.add_argument("--values", required=True, help="comma-separated positive rationals")

    p = sub.add_parser("confluence", parents=[common], help="confluence of an exponent vector")
    p.add_argument("--vector", required=True, help="comma-separated integers")

    p = sub.add_parser("psi", parents=[common], help="Psi_x from the characteristic polynomial")
    p.add_argument("--matrix", required=True)
    p.add_argument("--vector", required=True)

    p = sub.add_parser("forms", parents=[common], help="Forms (I)-(VI) present in a 4x4 matrix")
    p.add_argument("--matrix", required=True)

    p = sub.add_parser("ising", parents=[common], help="Z of [[a,b],[b,a]] on a planar graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)

    p = sub.add_parser("pm", parents=[common], help="weighted perfect matchings of a planar graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--weights", default=None, help="comma-separated rationals, one per edge")
    return parser
