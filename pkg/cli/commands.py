"""
Exécution des sous-commandes ; chaque commande renvoie le texte à afficher.
"""
import argparse
import logging
from typing import Callable

from core.exceptions import UsageError
from core.rational import format_rational, parse_int_list, parse_rational, parse_rational_list
from models.enums import EvalMethod, GadgetTarget
from models.gadget import GadgetKind
from models.schemas import (
    ConfluenceResultSchema,
    FormEntrySchema,
    FormsResultSchema,
    InterpolationResultSchema,
    LatticeResultSchema,
    ValueResultSchema,
)
from repositories.count_repository import count_map_repository
from repositories.graph_repository import graph_repository
from repositories.matrix_repository import matrix_repository
from repositories.verdict_repository import verdict_repository
from services.dichotomy_service import dichotomy_service
from services.gadget_service import gadget_service
from services.ising_service import ising_service
from services.lattice_service import lattice_service
from services.matrix_service import matrix_service
from services.partition_service import partition_service
from services.pfaffian_service import pfaffian_service
from services.interpolation_service import interpolation_service
from services.symmetric_service import symmetric_service
from services.tractable_service import tractable_service

log = logging.getLogger(__name__)


def _value(args: argparse.Namespace, value, method: str = None) -> str:
    if args.json:
        return ValueResultSchema(value=format_rational(value), method=method).model_dump_json(exclude_none=True)
    return format_rational(value)


def _count_lines(counts) -> str:
    return "\n".join(f"{format_rational(x)} {c}" for x, c in counts.items())


# =============================================================================
# COMMANDES
# =============================================================================

def cmd_eval(args: argparse.Namespace) -> str:
    m = matrix_repository.load(args.matrix)
    g, rot = graph_repository.load_document(args.graph)
    value = tractable_service.evaluate(m, g, EvalMethod(args.method), rot=rot)
    return _value(args, value, args.method)


def cmd_classify(args: argparse.Namespace) -> str:
    verdict = dichotomy_service.classify(matrix_repository.load(args.matrix))
    if args.json:
        return verdict_repository.serialize(verdict)
    return f"{verdict.outcome.value} {verdict.reason}"


def cmd_transform(args: argparse.Namespace) -> str:
    kind = GadgetKind.parse(args.gadget)
    if GadgetTarget(args.on) == GadgetTarget.GRAPH:
        if not args.graph:
            raise UsageError("transform --on graph needs --graph")
        return graph_repository.serialize(gadget_service.gadget_graph(kind, graph_repository.load(args.graph)))
    if not args.matrix:
        raise UsageError("transform --on matrix needs --matrix")
    return matrix_repository.serialize(gadget_service.gadget_matrix(kind, matrix_repository.load(args.matrix)))


def cmd_counts(args: argparse.Namespace) -> str:
    counts = partition_service.count_map(matrix_repository.load(args.matrix), graph_repository.load(args.graph))
    return count_map_repository.serialize(counts) if args.json else _count_lines(counts)


def cmd_interpolate(args: argparse.Namespace) -> str:
    m = matrix_repository.load(args.matrix)
    g = graph_repository.load(args.graph)
    recovered = interpolation_service.recover_counts(m, g)
    matches = recovered == partition_service.count_map(m, g)
    if args.json:
        return InterpolationResultSchema(
            counts=count_map_repository.to_schema(recovered), matches_enumeration=matches,
        ).model_dump_json()
    return f"{_count_lines(recovered)}\nmatches enumeration: {'yes' if matches else 'no'}"


def cmd_lattice(args: argparse.Namespace) -> str:
    basis = lattice_service.lattice_of(parse_rational_list(args.values))
    in_delta = lattice_service.basis_subset_of_D(basis)
    if args.json:
        return LatticeResultSchema(
            dimension=basis.dimension, basis=[list(v) for v in basis.vectors], basis_in_delta_set=in_delta,
        ).model_dump_json()
    lines = [f"dimension {basis.dimension}"]
    lines.extend(",".join(str(c) for c in v) for v in basis.vectors)
    return "\n".join(lines)


def cmd_confluence(args: argparse.Namespace) -> str:
    confluent, partition = lattice_service.is_confluent(tuple(parse_int_list(args.vector)))
    pairs = partition.as_sorted_lists() if partition is not None else None
    if args.json:
        return ConfluenceResultSchema(confluent=confluent, pairs=pairs).model_dump_json(exclude_none=True)
    if not confluent:
        return "non-confluent"
    body = " ".join(
        "({" + ",".join(map(str, s)) + "},{" + ",".join(map(str, t)) + "})" for s, t in pairs
    )
    return f"confluent {body}"


def cmd_psi(args: argparse.Namespace) -> str:
    m = matrix_repository.load(args.matrix)
    return _value(args, symmetric_service.psi_x(tuple(parse_int_list(args.vector)), m))


def cmd_forms(args: argparse.Namespace) -> str:
    forms = matrix_service.form_detect(matrix_repository.load(args.matrix))
    if args.json:
        return FormsResultSchema(
            forms=[FormEntrySchema(tag=f.tag.value, sigma=list(f.sigma)) for f in forms]
        ).model_dump_json()
    return "\n".join(f"{f.tag.value} {','.join(map(str, f.sigma))}" for f in forms) or "none"


def cmd_ising(args: argparse.Namespace) -> str:
    g, rot = graph_repository.load_document(args.graph)
    value = ising_service.ising_fkt(g, parse_rational(args.a), parse_rational(args.b), rot)
    return _value(args, value, "fkt")


def cmd_pm(args: argparse.Namespace) -> str:
    g, rot = graph_repository.load_document(args.graph)
    weights = parse_rational_list(args.weights) if args.weights else None
    return _value(args, pfaffian_service.count_pm_planar(g, rot, weights), "fkt")


COMMANDS: dict[str, Callable[[argparse.Namespace], str]] = {
    "eval": cmd_eval,
    "classify": cmd_classify,
    "transform": cmd_transform,
    "counts": cmd_counts,
    "interpolate": cmd_interpolate,
    "lattice": cmd_lattice,
    "confluence": cmd_confluence,
    "psi": cmd_psi,
    "forms": cmd_forms,
    "ising": cmd_ising,
    "pm": cmd_pm,
}
