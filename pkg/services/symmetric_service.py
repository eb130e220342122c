"""
Service polynômes symétriques : construction de Phi_x dans Z[l1..lq],
réduction en polynômes symétriques élémentaires et évaluation de Psi_x(M).
"""
import itertools
import logging
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from sympy import ZZ
from sympy.polys.rings import PolyElement, PolyRing, ring

from core.config import settings
from core.exceptions import DegreeBudgetError, DimensionMismatchError, DomainError, NotSymmetricError
from models.lattice import ExponentVector
from models.matrix import SymMatrix
from services.matrix_service import matrix_service

log = logging.getLogger(__name__)

Monomial = tuple[int, ...]
DominantPart = dict[Monomial, int]


@lru_cache(maxsize=None)
def lambda_ring(q: int) -> PolyRing:
    """Z[l1, ..., lq]."""
    return ring([f"l{i}" for i in range(1, q + 1)], ZZ)[0]


@lru_cache(maxsize=None)
def elementary_ring(q: int) -> PolyRing:
    """Z[e1, ..., eq]."""
    return ring([f"e{i}" for i in range(1, q + 1)], ZZ)[0]


def _sorted_desc(monomial) -> Monomial:
    return tuple(sorted(monomial, reverse=True))


class SymmetricService:
    """Théorème fondamental des polynômes symétriques, version exacte."""

    # =========================================================================
    # POLYNÔMES DE BASE
    # =========================================================================

    @staticmethod
    def elementary(q: int, k: int) -> PolyElement:
        """e_k(l1, ..., lq)."""
        r = lambda_ring(q)
        terms = {}
        for subset in itertools.combinations(range(q), k):
            terms[tuple(int(i in subset) for i in range(q))] = 1
        return r.from_dict(terms)

    @staticmethod
    def phi_poly(x: ExponentVector) -> PolyElement:
        """prod_{x_i>0} l_i^x_i - prod_{x_i<0} l_i^-x_i."""
        r = lambda_ring(len(x))
        plus = tuple(max(v, 0) for v in x)
        minus = tuple(max(-v, 0) for v in x)
        return r.from_dict({plus: 1}) - r.from_dict({minus: 1})

    def Phi_poly(self, x: ExponentVector) -> PolyElement:
        """Produit des q! conjugués de phi_x (Phi_x = G^|Stab(x)|, G sur l'orbite)."""
        orbit = set(itertools.permutations(x))
        stabilizer = 1
        for count in (list(x).count(v) for v in set(x)):
            for f in range(2, count + 1):
                stabilizer *= f
        return self._orbit_product(tuple(sorted(orbit))) ** stabilizer

    def _orbit_product(self, orbit) -> PolyElement:
        r = lambda_ring(len(orbit[0]))
        total = r.one
        for y in orbit:
            total *= self.phi_poly(y)
        return total

    # =========================================================================
    # RÉDUCTION
    # =========================================================================

    @staticmethod
    def _check_symmetric(p: PolyElement, q: int) -> None:
        terms = dict(p.items())
        for i in range(q - 1):
            for monomial, coeff in terms.items():
                swapped = list(monomial)
                swapped[i], swapped[i + 1] = swapped[i + 1], swapped[i]
                if terms.get(tuple(swapped), 0) != coeff:
                    raise NotSymmetricError(
                        f"polynomial is not invariant under swapping l{i + 1} and l{i + 2}"
                    )

    @staticmethod
    def _times_elementary(part: DominantPart, k: int, q: int) -> DominantPart:
        """Partie dominante de F . e_k, F symétrique donné par sa partie dominante."""
        subsets = [tuple(int(i in s) for i in range(q)) for s in itertools.combinations(range(q), k)]
        candidates = set()
        for nu in part:
            for ones in subsets:
                candidates.add(_sorted_desc(a + b for a, b in zip(nu, ones)))
        result = {}
        for mu in candidates:
            coeff = 0
            for ones in subsets:
                lowered = tuple(a - b for a, b in zip(mu, ones))
                if min(lowered) < 0:
                    continue
                coeff += part.get(_sorted_desc(lowered), 0)
            if coeff:
                result[mu] = coeff
        return result

    def _elementary_power_part(self, a: Monomial, q: int, cache: dict) -> DominantPart:
        """Partie dominante de e1^a1 ... eq^aq ; e_q agit comme un décalage."""
        shift = a[-1]
        base = a[:-1] + (0,)
        if base not in cache:
            if not any(base):
                cache[base] = {(0,) * q: 1}
            else:
                k = max(i for i, v in enumerate(base) if v)
                lower = list(base)
                lower[k] -= 1
                cache[base] = self._times_elementary(
                    self._elementary_power_part(tuple(lower), q, cache), k + 1, q
                )
        if not shift:
            return cache[base]
        return {tuple(v + shift for v in mu): c for mu, c in cache[base].items()}

    def symmetric_reduce(self, p: PolyElement) -> PolyElement:
        """Écriture de p en e1..eq par élimination du terme dominant."""
        q = p.ring.ngens
        self._check_symmetric(p, q)
        remaining: DominantPart = {
            tuple(mon): int(c) for mon, c in p.items() if list(mon) == sorted(mon, reverse=True)
        }
        cache: dict = {}
        result: dict[Monomial, int] = {}
        while remaining:
            mu = max(remaining)
            coeff = remaining[mu]
            a = tuple(mu[i] - mu[i + 1] for i in range(q - 1)) + (mu[-1],)
            result[a] = result.get(a, 0) + coeff
            for nu, c in self._elementary_power_part(a, q, cache).items():
                value = remaining.get(nu, 0) - coeff * c
                if value:
                    remaining[nu] = value
                else:
                    remaining.pop(nu, None)
        log.debug("symmetric reduction: %d terms, %d cached products", len(result), len(cache))
        return elementary_ring(q).from_dict(result)

    # =========================================================================
    # Psi_x
    # =========================================================================

    @lru_cache(maxsize=64)
    def _reduced_orbit_product(self, sorted_x: ExponentVector) -> PolyElement:
        orbit = tuple(sorted(set(itertools.permutations(sorted_x))))
        return self.symmetric_reduce(self._orbit_product(orbit))

    @staticmethod
    def evaluate(p: PolyElement, values) -> Fraction:
        """Évaluation exacte d'un polynôme entier en des rationnels."""
        values = [Fraction(v) for v in values]
        total = Fraction(0)
        for monomial, coeff in p.items():
            term = Fraction(int(coeff))
            for v, k in zip(values, monomial):
                if k:
                    term *= v ** k
            total += term
        return total

    def psi_x(self, x: ExponentVector, m: SymMatrix, degree_budget: Optional[int] = None) -> Fraction:
        """Phi_x exprimé par les coefficients du polynôme caractéristique de m."""
        degree_budget = settings.DEGREE_BUDGET if degree_budget is None else degree_budget
        x = tuple(int(v) for v in x)
        if len(x) != m.q:
            raise DimensionMismatchError(f"vector of length {len(x)} for a {m.q}x{m.q} matrix")
        if sum(x) != 0:
            raise DomainError(f"{list(x)} does not have zero coordinate sum")
        degree = sum(v for v in x if v > 0)
        if degree > degree_budget:
            raise DegreeBudgetError(f"sum of positive parts {degree} exceeds the degree budget {degree_budget}")
        if degree == 0:
            return Fraction(0)

        # G_{-x} = (-1)^|orbite| G_x : une seule réduction par paire {x, -x}
        key = tuple(sorted(x))
        mirrored = tuple(sorted(-v for v in x))
        sign = 1
        if mirrored < key:
            orbit_size = len(set(itertools.permutations(x)))
            key, sign = mirrored, (-1) ** orbit_size
        reduced = self._reduced_orbit_product(key)

        stabilizer = 1
        for count in (x.count(v) for v in set(x)):
            for f in range(2, count + 1):
                stabilizer *= f
        e = matrix_service.charpoly(m).e
        return (sign * self.evaluate(reduced, e)) ** stabilizer


symmetric_service = SymmetricService()
