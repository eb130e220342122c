"""
Service d'interpolation : ensemble de valeurs X(G), système de Vandermonde
et transport des comptes vers T_M(p).
"""
import itertools
import logging
from fractions import Fraction
from math import comb, prod
from typing import Optional, Sequence

from core.config import settings
from core.exceptions import (
    BudgetExceededError,
    ConsistencyError,
    DegenerateNodeError,
    DimensionMismatchError,
    DuplicateNodeError,
    NegativeExponentError,
    UnrepresentableValueError,
)
from core.rational import power
from models.counting import CountMap, ValueSet
from models.gadget import GadgetKind, GeneratingForm
from models.graph import Multigraph
from models.matrix import SymMatrix
from services.gadget_service import gadget_service
from services.partition_service import partition_service

log = logging.getLogger(__name__)


class InterpolationService:
    """Réduction PlEVAL -> COUNT par systèmes de Vandermonde."""

    # =========================================================================
    # VALEURS
    # =========================================================================

    @staticmethod
    def enumerate_X(m: SymMatrix, edge_count: int, budget: Optional[int] = None) -> ValueSet:
        """Produits des entrées distinctes de degré total edge_count, dédupliqués."""
        if edge_count < 0:
            raise ValueError("edge_count must be non-negative")
        budget = settings.X_BUDGET if budget is None else budget
        entries = tuple(m.distinct_values())
        size = comb(edge_count + len(entries) - 1, len(entries) - 1)
        if size > budget:
            raise BudgetExceededError(f"{size} compositions exceed the value-set budget {budget}")

        found: dict[Fraction, tuple[int, ...]] = {}
        for choice in itertools.combinations_with_replacement(range(len(entries)), edge_count):
            value = prod((entries[s] for s in choice), start=Fraction(1))
            if value not in found:
                k = [0] * len(entries)
                for s in choice:
                    k[s] += 1
                found[value] = tuple(k)
        values = tuple(sorted(found))
        return ValueSet(values, tuple(found[x] for x in values), entries)

    # =========================================================================
    # VANDERMONDE
    # =========================================================================

    @staticmethod
    def vandermonde_solve(nodes: Sequence[Fraction], targets: Sequence[Fraction]) -> list[Fraction]:
        """
        c tel que sum_s c_s x_s^n = t_n pour n = 1..m, par la base duale de
        Lagrange : polynôme maître prod (z - x_s) puis division synthétique.
        """
        nodes = [Fraction(x) for x in nodes]
        targets = [Fraction(t) for t in targets]
        if len(nodes) != len(targets):
            raise DimensionMismatchError(f"{len(nodes)} nodes but {len(targets)} targets")
        if len(set(nodes)) != len(nodes):
            raise DuplicateNodeError("Vandermonde nodes must be pairwise distinct")
        if any(x == 0 for x in nodes):
            raise DegenerateNodeError("node 0 gives an all-zero column for powers 1..m")
        m = len(nodes)

        # coefficients du polynôme maître, degré décroissant
        master = [Fraction(1)]
        for x in nodes:
            master = [a - x * b for a, b in zip(master + [Fraction(0)], [Fraction(0)] + master)]

        coefficients = []
        for x in nodes:
            quotient = [master[0]]
            for a in master[1:m]:
                quotient.append(a + x * quotient[-1])
            # quotient[k] multiplie z^(m-1-k) ; la cible de z^j est t_(j+1)
            numer = sum(quotient[k] * targets[m - 1 - k] for k in range(m))
            denom = prod((x - r for r in nodes if r != x), start=Fraction(1))
            coefficients.append(numer / denom / x)
        return coefficients

    # =========================================================================
    # RECONSTRUCTION DES COMPTES
    # =========================================================================

    def recover_counts(self, m: SymMatrix, g: Multigraph, x_budget: Optional[int] = None,
                       budget: Optional[int] = None) -> CountMap:
        """#_M(G, x) à partir de Z_{T_n M}(G), n = 1..|X \\ {0}| ; le compte de 0 par complément."""
        value_set = self.enumerate_X(m, g.edge_count, x_budget)
        nodes = [x for x in value_set.values if x != 0]
        targets = [
            partition_service.z_brute(gadget_service.gadget_matrix(GadgetKind.thicken(n), m), g, budget)
            for n in range(1, len(nodes) + 1)
        ]
        log.debug("Vandermonde system of size %d", len(nodes))
        solved = self.vandermonde_solve(nodes, targets)

        counts: dict[Fraction, int] = {}
        for x, c in zip(nodes, solved):
            if c.denominator != 1 or c < 0:
                raise ConsistencyError(f"recovered count {c} for value {x} is not a non-negative integer")
            counts[x] = int(c)
        missing = m.q ** g.n_vertices - sum(counts.values())
        if missing < 0 or (missing and 0 not in value_set.values):
            raise ConsistencyError(f"recovered counts do not sum to q^|V| (residue {missing})")
        if missing:
            counts[Fraction(0)] = missing
        return CountMap(counts)

    @staticmethod
    def transport_eval(form: GeneratingForm, counts: CountMap,
                       source_values: Optional[ValueSet], p: Sequence[Fraction]) -> Fraction:
        """sum_x y(x) #(x), y substituant p dans la représentation de x sur les générateurs."""
        if form.min_exponent < 0:
            raise NegativeExponentError("normalize the matrix before transporting counts")
        if len(p) != len(form.generators):
            raise DimensionMismatchError(
                f"expected {len(form.generators)} substitution values, got {len(p)}"
            )
        p = [Fraction(v) for v in p]
        total = Fraction(0)
        for x, count in counts.items():
            if source_values is not None and x not in source_values.values:
                raise UnrepresentableValueError(f"{x} is not in the source value set")
            sign, exponents = gadget_service.factor_over(x, form.generators)
            if any(k < 0 for k in exponents):
                raise NegativeExponentError(f"value {x} has a negative exponent")
            y = Fraction(-1 if sign else 1)
            for base, k in zip(p, exponents):
                y *= power(base, k)
            total += y * count
        return total


interpolation_service = InterpolationService()
