"""
Matrices symétriques rationnelles et résultats structurels associés.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from core.exceptions import AsymmetricError, DimensionError, ParseError
from models.enums import FormTag

Permutation = tuple[int, ...]


@dataclass(frozen=True)
class SymMatrix:
    """Matrice q x q symétrique à entrées rationnelles exactes."""
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(Fraction(x) for x in row) for row in self.entries)
        q = len(rows)
        if q == 0:
            raise DimensionError("matrix dimension must be at least 1")
        if any(len(row) != q for row in rows):
            raise ParseError("matrix is not square")
        for i in range(q):
            for j in range(i + 1, q):
                if rows[i][j] != rows[j][i]:
                    raise AsymmetricError(f"entries ({i},{j}) and ({j},{i}) differ")
        object.__setattr__(self, "entries", rows)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "SymMatrix":
        return cls(tuple(tuple(Fraction(x) for x in row) for row in rows))

    @property
    def q(self) -> int:
        return len(self.entries)

    def __getitem__(self, index: tuple[int, int]) -> Fraction:
        i, j = index
        return self.entries[i][j]

    def as_lists(self) -> list[list[Fraction]]:
        return [list(row) for row in self.entries]

    def values(self) -> list[Fraction]:
        """Toutes les entrées, ligne par ligne."""
        return [x for row in self.entries for x in row]

    def distinct_values(self) -> list[Fraction]:
        return sorted(set(self.values()))

    def has_zero(self) -> bool:
        return any(x == 0 for x in self.values())

    def is_nonnegative(self) -> bool:
        return all(x >= 0 for x in self.values())

    def scaled(self, c: Fraction) -> "SymMatrix":
        return SymMatrix(tuple(tuple(c * x for x in row) for row in self.entries))

    def submatrix(self, indices: Sequence[int]) -> "SymMatrix":
        return SymMatrix(tuple(tuple(self.entries[i][j] for j in indices) for i in indices))

    def require_dimension(self, q: int) -> None:
        if self.q != q:
            raise DimensionError(f"operation requires q = {q}, got q = {self.q}")


@dataclass(frozen=True)
class CharPoly:
    """
    Fonctions symétriques élémentaires (e_1, ..., e_q) des valeurs propres :
    det(tI - M) = t^q - e_1 t^(q-1) + ... + (-1)^q e_q.
    """
    e: tuple[Fraction, ...]

    @property
    def q(self) -> int:
        return len(self.e)

    @property
    def trace(self) -> Fraction:
        return self.e[0] if self.e else Fraction(0)

    @property
    def det(self) -> Fraction:
        return self.e[-1] if self.e else Fraction(1)

    def coefficients(self) -> list[Fraction]:
        """Coefficients de t^q, t^(q-1), ..., t^0."""
        return [Fraction(1)] + [(-1) ** (k + 1) * c for k, c in enumerate(self.e)]

    def evaluate(self, t: Fraction) -> Fraction:
        acc = Fraction(0)
        for c in self.coefficients():
            acc = acc * t + c
        return acc


@dataclass(frozen=True)
class FormMatch:
    """Une forme détectée et le plus petit sigma témoin."""
    tag: FormTag
    sigma: Permutation


@dataclass(frozen=True)
class RhoValues:
    """Valeurs exactes des polynômes structurels."""
    rho_diag: Fraction
    rho_full: Fraction
    rho_dist: Fraction
    rho_indep: Fraction
    varrho_tensor: Optional[Fraction] = None
    rho_tensor: Optional[Fraction] = None


@dataclass(frozen=True)
class Predicates:
    diag_distinct: bool
    row_full: bool
    po_distinct: bool
    po_independent: bool
    varrho_tensor_zero: Optional[bool] = None
    rho_tensor_zero: Optional[bool] = None


@dataclass(frozen=True)
class TensorFactors:
    """permute(m, sigma) = a (x) b, avec a[0][0] = 1 pour la décomposition normalisée."""
    sigma: Permutation
    a: SymMatrix
    b: SymMatrix


@dataclass(frozen=True)
class DirectSumSplit:
    partition: tuple[tuple[int, ...], ...]
    blocks: tuple[SymMatrix, ...]


@dataclass(frozen=True)
class Bipartition:
    """Bipartition de l'indice ; block = M[left][right]."""
    left: tuple[int, ...]
    right: tuple[int, ...]
    block: tuple[tuple[Fraction, ...], ...]
