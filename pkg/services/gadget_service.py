"""
Service gadgets : réécritures de graphes, transformations matricielles
correspondantes, forme génératrice et épaississement généralisé T_M(p).
"""
import logging
from fractions import Fraction
from typing import Optional, Sequence

import sympy

from core.config import settings
from core.exceptions import (
    DimensionMismatchError,
    DomainError,
    FactorizationBudgetError,
    NegativeExponentError,
    UnrepresentableValueError,
)
from core.rational import power
from models.enums import GadgetName
from models.gadget import GadgetKind, GeneratingForm
from models.graph import Edge, Multigraph
from models.matrix import SymMatrix
from services.matrix_service import matrix_service

log = logging.getLogger(__name__)


class GadgetService:
    """Gadgets d'arête et formes génératrices."""

    # =========================================================================
    # GADGETS
    # =========================================================================

    @staticmethod
    def gadget_graph(kind: GadgetKind, g: Multigraph) -> Multigraph:
        """Réécriture parallèle de chaque arête ; nouveaux sommets ajoutés dans l'ordre des arêtes."""
        edges: list[Edge] = []
        next_vertex = g.n_vertices
        for u, v in g.edges:
            if kind.name == GadgetName.THICKEN:
                edges.extend([(u, v)] * kind.n)
            elif kind.name == GadgetName.STRETCH:
                path = [u] + list(range(next_vertex, next_vertex + kind.n - 1)) + [v]
                next_vertex += kind.n - 1
                edges.extend(zip(path, path[1:]))
            elif kind.name == GadgetName.MID_THICKEN:
                a, b = next_vertex, next_vertex + 1
                next_vertex += 2
                edges.append((u, a))
                edges.extend([(a, b)] * kind.n)
                edges.append((b, v))
            else:
                a, b = next_vertex, next_vertex + 1
                next_vertex += 2
                edges.extend([(u, a), (u, b), (v, a), (v, b), (a, b)])
        return Multigraph(next_vertex, tuple(edges))

    @staticmethod
    def gadget_matrix(kind: GadgetKind, m: SymMatrix) -> SymMatrix:
        """Matrice M' telle que Z_M(gadget(G)) = Z_M'(G)."""
        if kind.name == GadgetName.THICKEN:
            return matrix_service.entrywise_power(m, kind.n)
        if kind.name == GadgetName.STRETCH:
            return matrix_service.power(m, kind.n)
        q = m.q
        e = m.entries
        if kind.name == GadgetName.MID_THICKEN:
            # M . M^(o n) n'est pas symétrique : somme directe sur (a, b)
            middle = [[x ** kind.n for x in row] for row in e]
            return SymMatrix.from_rows([
                [sum(e[i][a] * middle[a][b] * e[b][j] for a in range(q) for b in range(q)) for j in range(q)]
                for i in range(q)
            ])
        rows = []
        for i in range(q):
            row = []
            for j in range(q):
                p = [e[i][a] * e[j][a] for a in range(q)]
                row.append(sum(p[a] * e[a][b] * p[b] for a in range(q) for b in range(q)))
            rows.append(row)
        return SymMatrix.from_rows(rows)

    # =========================================================================
    # FORMES GÉNÉRATRICES
    # =========================================================================

    @staticmethod
    def _factor(n: int, budget: int) -> dict[int, int]:
        if n > budget:
            raise FactorizationBudgetError(f"{n} exceeds the factorization budget {budget}")
        return sympy.factorint(n) if n > 1 else {}

    def generating_form(self, m: SymMatrix, budget: Optional[int] = None) -> GeneratingForm:
        """Générateurs premiers, bits de signe et exposants de chaque entrée."""
        budget = settings.FACTOR_BUDGET if budget is None else budget
        if m.has_zero():
            raise DomainError("generating form requires nonzero entries")
        factored = {}
        primes = set()
        for x in set(m.values()):
            num = self._factor(abs(x.numerator), budget)
            den = self._factor(x.denominator, budget)
            valuation = dict(num)
            for p, k in den.items():
                valuation[p] = valuation.get(p, 0) - k
            factored[x] = valuation
            primes.update(valuation)
        generators = tuple(sorted(int(p) for p in primes))
        signs = tuple(tuple(int(x < 0) for x in row) for row in m.entries)
        exponents = tuple(
            tuple(tuple(factored[x].get(p, 0) for p in generators) for x in row)
            for row in m.entries
        )
        log.debug("generating form over %s", generators)
        return GeneratingForm(generators, signs, exponents)

    def normalize_cM(self, m: SymMatrix, budget: Optional[int] = None
                     ) -> tuple[Fraction, SymMatrix, GeneratingForm]:
        """
        N = cM avec c = (prod g_t)^s, s = max(0, -e_min) ; tous les exposants
        de N sont >= 0. Si e_min >= 0 la matrice est déjà normalisée (c = 1).
        """
        form = self.generating_form(m, budget)
        shift = max(0, -form.min_exponent)
        c = Fraction(1)
        for g in form.generators:
            c *= Fraction(g) ** shift
        n = m.scaled(c)
        shifted = GeneratingForm(
            form.generators,
            form.signs,
            tuple(tuple(tuple(k + shift for k in vec) for vec in row) for row in form.exponents),
        )
        return c, n, shifted

    @staticmethod
    def t_general(form: GeneratingForm, p: Sequence[Fraction]) -> SymMatrix:
        """Entrée (i, j) = (-1)^s_ij prod_t p_t^e_ijt, avec 0^0 = 1."""
        if len(p) != len(form.generators):
            raise DimensionMismatchError(
                f"expected {len(form.generators)} substitution values, got {len(p)}"
            )
        if form.min_exponent < 0:
            raise NegativeExponentError("normalize the matrix before substituting generators")
        p = [Fraction(v) for v in p]
        rows = []
        for i in range(form.q):
            row = []
            for j in range(form.q):
                value = Fraction(-1) if form.signs[i][j] else Fraction(1)
                for base, k in zip(p, form.exponents[i][j]):
                    value *= power(base, k)
                row.append(value)
            rows.append(row)
        return SymMatrix.from_rows(rows)

    @staticmethod
    def factor_over(value: Fraction, generators: Sequence[int]) -> tuple[int, tuple[int, ...]]:
        """(bit de signe, exposants) de value sur les générateurs donnés."""
        value = Fraction(value)
        if value == 0:
            raise UnrepresentableValueError("zero has no monomial representation")
        num, den = abs(value.numerator), value.denominator
        exponents = []
        for g in generators:
            k = 0
            while num % g == 0:
                num //= g
                k += 1
            while den % g == 0:
                den //= g
                k -= 1
            exponents.append(k)
        if num != 1 or den != 1:
            raise UnrepresentableValueError(f"{value} is not a monomial over {tuple(generators)}")
        return int(value < 0), tuple(exponents)


gadget_service = GadgetService()
