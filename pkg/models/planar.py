"""
Matrices antisymétriques et polynôme des sous-graphes pairs.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from core.exceptions import NotSkewError


@dataclass(frozen=True)
class SkewMatrix:
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(Fraction(x) for x in row) for row in self.entries)
        n = len(rows)
        if any(len(row) != n for row in rows):
            raise NotSkewError("matrix is not square")
        for i in range(n):
            if rows[i][i] != 0:
                raise NotSkewError(f"nonzero diagonal entry at {i}")
            for j in range(i + 1, n):
                if rows[i][j] != -rows[j][i]:
                    raise NotSkewError(f"entries ({i},{j}) and ({j},{i}) are not opposite")
        object.__setattr__(self, "entries", rows)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "SkewMatrix":
        return cls(tuple(tuple(Fraction(x) for x in row) for row in rows))

    @property
    def n(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class EvenSubgraphPoly:
    """coefficients[k] = nombre de sous-ensembles pairs de k arêtes."""
    coefficients: tuple[int, ...]

    def evaluate(self, t: Fraction) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * t + c
        return acc
