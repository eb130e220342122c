"""
Réseaux de relations multiplicatives et partitions appariées.
"""
from dataclasses import dataclass

ExponentVector = tuple[int, ...]


@dataclass(frozen=True)
class LatticeBasis:
    """Base entière de L(a) ; vecteurs en forme normale de Hermite."""
    vectors: tuple[ExponentVector, ...]
    q: int

    @property
    def dimension(self) -> int:
        return len(self.vectors)


@dataclass(frozen=True)
class PairedPartition:
    """Paires (S_a, T_a) partitionnant I+ et I-, triées par plus petit indice de S_a."""
    pairs: tuple[tuple[frozenset, frozenset], ...]

    def as_sorted_lists(self) -> list[tuple[list[int], list[int]]]:
        return [(sorted(s), sorted(t)) for s, t in self.pairs]
