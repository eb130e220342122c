"""
Service réseaux : relations multiplicatives L(a), critère delta_ij,
confluence et polynômes phi_x / Phi_x évalués numériquement.
"""
import itertools
import logging
from fractions import Fraction
from math import prod
from typing import Optional, Sequence

import sympy

from core.config import settings
from core.exceptions import (
    ConsistencyError,
    DimensionMismatchError,
    DomainError,
    FactorizationBudgetError,
    NonPositiveError,
    ZeroBaseError,
    ZeroVectorError,
)
from models.lattice import ExponentVector, LatticeBasis, PairedPartition

log = logging.getLogger(__name__)

IntMatrix = list[list[int]]


def _extended_gcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, s, t) avec s a + t b = g >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        quotient = old_r // r
        old_r, r = r, old_r - quotient * r
        old_s, s = s, old_s - quotient * s
        old_t, t = t, old_t - quotient * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def integer_kernel(constraints: IntMatrix, n_columns: int) -> IntMatrix:
    """
    Base entière du noyau {x : C x = 0} par réduction en colonnes avec
    transformation unimodulaire suivie ; vecteurs renvoyés en lignes.
    """
    c = [list(row) for row in constraints]
    k = [[int(i == j) for j in range(n_columns)] for i in range(n_columns)]

    def combine(i: int, j: int, s: int, t: int, u: int, v: int) -> None:
        # col_i <- s col_i + t col_j ; col_j <- u col_i + v col_j
        for mat in (c, k):
            for row in mat:
                a, b = row[i], row[j]
                row[i], row[j] = s * a + t * b, u * a + v * b

    pivot = 0
    for row_index in range(len(c)):
        if pivot == n_columns:
            break
        for j in range(pivot + 1, n_columns):
            a, b = c[row_index][pivot], c[row_index][j]
            if b == 0:
                continue
            g, s, t = _extended_gcd(a, b)
            combine(pivot, j, s, t, -b // g, a // g)
        if c[row_index][pivot] != 0:
            pivot += 1
    return [[k[i][j] for i in range(n_columns)] for j in range(pivot, n_columns)]


def hermite_rows(vectors: IntMatrix) -> IntMatrix:
    """Forme normale de Hermite en lignes : pivots positifs, entrées au-dessus réduites."""
    rows = [list(v) for v in vectors]
    if not rows:
        return rows
    n_columns = len(rows[0])
    top = 0
    for col in range(n_columns):
        if top == len(rows):
            break
        while True:
            nonzero = [r for r in range(top, len(rows)) if rows[r][col] != 0]
            if not nonzero:
                break
            best = min(nonzero, key=lambda r: abs(rows[r][col]))
            rows[top], rows[best] = rows[best], rows[top]
            done = True
            for r in range(top + 1, len(rows)):
                if rows[r][col]:
                    factor = rows[r][col] // rows[top][col]
                    rows[r] = [a - factor * b for a, b in zip(rows[r], rows[top])]
                    if rows[r][col]:
                        done = False
            if done:
                break
        if rows[top][col] == 0:
            continue
        if rows[top][col] < 0:
            rows[top] = [-a for a in rows[top]]
        for r in range(top):
            factor = rows[r][col] // rows[top][col]
            rows[r] = [a - factor * b for a, b in zip(rows[r], rows[top])]
        top += 1
    return [row for row in rows if any(row)]


class LatticeService:
    """Réseaux de relations et confluence."""

    # =========================================================================
    # RÉSEAU L(a)
    # =========================================================================

    @staticmethod
    def _valuations(values: Sequence[Fraction], budget: int) -> tuple[list[int], IntMatrix]:
        """Premiers et matrice des valuations (une ligne par premier)."""
        per_value = []
        for a in values:
            a = Fraction(a)
            if a <= 0:
                raise NonPositiveError(f"lattice values must be positive, got {a}")
            valuation = {}
            for part, sign in ((a.numerator, 1), (a.denominator, -1)):
                if part > budget:
                    raise FactorizationBudgetError(f"{part} exceeds the factorization budget {budget}")
                for p, k in (sympy.factorint(part) if part > 1 else {}).items():
                    valuation[int(p)] = valuation.get(int(p), 0) + sign * k
            per_value.append(valuation)
        primes = sorted({p for v in per_value for p in v})
        return primes, [[v.get(p, 0) for v in per_value] for p in primes]

    def lattice_of(self, a: Sequence[Fraction], budget: Optional[int] = None) -> LatticeBasis:
        """Base de {x : sum x_i = 0, prod a_i^x_i = 1}."""
        budget = settings.FACTOR_BUDGET if budget is None else budget
        _, valuations = self._valuations(a, budget)
        constraints = valuations + [[1] * len(a)]
        kernel = hermite_rows(integer_kernel(constraints, len(a)))
        log.debug("lattice of %s has dimension %d", [str(v) for v in a], len(kernel))
        return LatticeBasis(tuple(tuple(v) for v in kernel), len(a))

    def lattice_dimension(self, a: Sequence[Fraction], budget: Optional[int] = None) -> int:
        return self.lattice_of(a, budget).dimension

    def in_lattice(self, x: ExponentVector, a: Sequence[Fraction], budget: Optional[int] = None) -> bool:
        """x appartient à L(a) (sans permutation)."""
        budget = settings.FACTOR_BUDGET if budget is None else budget
        if len(x) != len(a):
            raise DimensionMismatchError(f"vector of length {len(x)} against {len(a)} values")
        _, valuations = self._valuations(a, budget)
        if sum(x) != 0:
            return False
        return all(sum(xi * v for xi, v in zip(x, row)) == 0 for row in valuations)

    def in_lattice_bar(self, x: ExponentVector, a: Sequence[Fraction], budget: Optional[int] = None) -> bool:
        """Une permutation des coordonnées de x appartient à L(a)."""
        budget = settings.FACTOR_BUDGET if budget is None else budget
        if len(x) != len(a):
            raise DimensionMismatchError(f"vector of length {len(x)} against {len(a)} values")
        _, valuations = self._valuations(a, budget)
        if sum(x) != 0:
            return False
        for y in set(itertools.permutations(x)):
            if all(sum(yi * v for yi, v in zip(y, row)) == 0 for row in valuations):
                return True
        return False

    @staticmethod
    def basis_subset_of_D(b: LatticeBasis) -> bool:
        """Chaque vecteur de base vaut +-delta_ij."""
        for vector in b.vectors:
            support = sorted(v for v in vector if v != 0)
            if support != [-1, 1]:
                return False
        return True

    # =========================================================================
    # CONFLUENCE
    # =========================================================================

    @staticmethod
    def _subset_sums(indices: Sequence[int], weights: Sequence[int]) -> dict[frozenset, int]:
        sums = {}
        for size in range(len(indices) + 1):
            for subset in itertools.combinations(indices, size):
                sums[frozenset(subset)] = sum(weights[i] for i in subset)
        return sums

    def is_confluent(self, x: ExponentVector) -> tuple[bool, Optional[PairedPartition]]:
        """
        Décision par la définition (stabilité par intersection) et, indépendamment,
        par construction des membres minimaux ; les deux chemins doivent concorder.
        """
        if not any(x):
            raise ZeroVectorError("confluence is undefined for the zero vector")
        if sum(x) != 0:
            raise DomainError(f"{list(x)} does not have zero coordinate sum")
        positive = [i for i, v in enumerate(x) if v > 0]
        negative = [i for i, v in enumerate(x) if v < 0]
        weights = [abs(v) for v in x]
        left = self._subset_sums(positive, weights)
        right = self._subset_sums(negative, weights)
        balanced = {(s, t) for s, ls in left.items() for t, rs in right.items() if ls == rs}

        by_definition = all(
            (s1 & s2, t1 & t2) in balanced
            for (s1, t1), (s2, t2) in itertools.combinations(balanced, 2)
        )

        minimal = [
            (s, t) for s, t in balanced
            if (s or t) and not any(
                (s2 or t2) and (s2, t2) != (s, t) and s2 <= s and t2 <= t
                for s2, t2 in balanced
            )
        ]
        minimal.sort(key=lambda pair: (min(pair[0] | pair[1]), sorted(pair[0]), sorted(pair[1])))
        partition_ok = (
            sum(len(s) for s, _ in minimal) == len(positive)
            and sum(len(t) for _, t in minimal) == len(negative)
            and frozenset().union(*(s for s, _ in minimal)) == frozenset(positive)
            and frozenset().union(*(t for _, t in minimal)) == frozenset(negative)
        )
        if partition_ok:
            unions = set()
            for size in range(len(minimal) + 1):
                for chosen in itertools.combinations(minimal, size):
                    unions.add((
                        frozenset().union(*(s for s, _ in chosen)),
                        frozenset().union(*(t for _, t in chosen)),
                    ))
            partition_ok = unions == balanced

        if by_definition != partition_ok:
            raise ConsistencyError(f"confluence checks disagree on {list(x)}")
        if not by_definition:
            return False, None
        return True, PairedPartition(tuple(minimal))

    # =========================================================================
    # phi_x ET Phi_x
    # =========================================================================

    @staticmethod
    def _check_arguments(x: ExponentVector, alpha: Sequence[Fraction]) -> list[Fraction]:
        if len(x) != len(alpha):
            raise DimensionMismatchError(f"vector of length {len(x)} against {len(alpha)} values")
        if sum(x) != 0:
            raise DomainError(f"{list(x)} does not have zero coordinate sum")
        alpha = [Fraction(a) for a in alpha]
        if any(a == 0 for a in alpha):
            raise ZeroBaseError("phi_x needs nonzero values")
        return alpha

    def phi_x(self, x: ExponentVector, alpha: Sequence[Fraction]) -> Fraction:
        """prod_{x_i > 0} a_i^x_i - prod_{x_i < 0} a_i^-x_i."""
        alpha = self._check_arguments(x, alpha)
        plus = prod((a ** k for a, k in zip(alpha, x) if k > 0), start=Fraction(1))
        minus = prod((a ** -k for a, k in zip(alpha, x) if k < 0), start=Fraction(1))
        return plus - minus

    def Phi_x(self, x: ExponentVector, alpha: Sequence[Fraction]) -> Fraction:
        """Produit de phi_x(x, alpha o sigma) sur S_q."""
        alpha = self._check_arguments(x, alpha)
        total = Fraction(1)
        for sigma in itertools.permutations(range(len(alpha))):
            total *= self.phi_x(x, [alpha[s] for s in sigma])
            if total == 0:
                break
        return total


lattice_service = LatticeService()
