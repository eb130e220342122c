"""
Verdicts de la classification et leurs certificats.
"""
from dataclasses import dataclass
from typing import Optional, Union

from models.enums import Outcome, TwoByTwoCase
from models.matrix import Permutation, SymMatrix


@dataclass(frozen=True)
class TensorFactorization:
    """permute(m, sigma) = a (x) b avec a[0][0] = a[1][1] et b[0][0] = b[1][1]."""
    sigma: Permutation
    a: SymMatrix
    b: SymMatrix


@dataclass(frozen=True)
class DirectSum:
    partition: tuple[tuple[int, ...], ...]
    verdicts: tuple["Verdict", ...]


@dataclass(frozen=True)
class TwoByTwo:
    case: TwoByTwoCase


@dataclass(frozen=True)
class BipartiteTensor:
    """permute(m, sigma) = [[0,1],[1,0]] (x) a."""
    sigma: Permutation
    a: SymMatrix


@dataclass(frozen=True)
class Scalar:
    """Bloc 1x1, toujours traitable."""


@dataclass(frozen=True)
class HardnessWitness:
    facts: tuple[str, ...]


@dataclass(frozen=True)
class UndecidedBlock:
    indices: tuple[int, ...]


Certificate = Union[
    TensorFactorization, DirectSum, TwoByTwo, BipartiteTensor, Scalar,
    HardnessWitness, UndecidedBlock,
]


@dataclass(frozen=True)
class Verdict:
    outcome: Outcome
    reason: str
    certificate: Optional[Certificate] = None

    @property
    def is_tractable(self) -> bool:
        return self.outcome == Outcome.TRACTABLE
