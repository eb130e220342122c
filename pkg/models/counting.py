"""
CountMap (x -> #_M(G, x)) et ensemble de valeurs X(G).
"""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Mapping


@dataclass(frozen=True)
class CountMap:
    """Nombre d'affectations par valeur de produit ; les comptes nuls sont omis."""
    counts: Mapping[Fraction, int] = field(default_factory=dict)

    def __post_init__(self):
        cleaned = {Fraction(x): int(c) for x, c in self.counts.items() if c}
        object.__setattr__(self, "counts", dict(sorted(cleaned.items())))

    def __getitem__(self, value: Fraction) -> int:
        return self.counts.get(Fraction(value), 0)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.counts)

    def __len__(self) -> int:
        return len(self.counts)

    def items(self):
        return self.counts.items()

    @property
    def total(self) -> int:
        """Nombre total d'affectations (q^|V|)."""
        return sum(self.counts.values())

    def merged(self, other: "CountMap") -> "CountMap":
        """Somme de deux CountMap partiels (fusion de shards)."""
        acc = dict(self.counts)
        for x, c in other.items():
            acc[x] = acc.get(x, 0) + c
        return CountMap(acc)


@dataclass(frozen=True)
class ValueSet:
    """
    Valeurs distinctes X(G) triées, avec pour chacune un vecteur k
    (exposants sur les entrées distinctes `entries`).
    """
    values: tuple[Fraction, ...]
    exponents: tuple[tuple[int, ...], ...]
    entries: tuple[Fraction, ...]

    def __len__(self) -> int:
        return len(self.values)

    def representation(self, value: Fraction) -> tuple[int, ...]:
        return self.exponents[self.values.index(Fraction(value))]
