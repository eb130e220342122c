"""
Gadgets d'arête et forme génératrice d'une matrice.
"""
from dataclasses import dataclass

from core.exceptions import ParseError
from models.enums import GadgetName


@dataclass(frozen=True)
class GadgetKind:
    """Thicken(n), Stretch(n), MidThicken(n) ou Bridge ; n >= 1."""
    name: GadgetName
    n: int = 1

    def __post_init__(self):
        if self.n < 1:
            raise ParseError(f"gadget parameter must be >= 1, got {self.n}")
        if self.name == GadgetName.BRIDGE and self.n != 1:
            raise ParseError("bridge takes no parameter")

    @classmethod
    def thicken(cls, n: int) -> "GadgetKind":
        return cls(GadgetName.THICKEN, n)

    @classmethod
    def stretch(cls, n: int) -> "GadgetKind":
        return cls(GadgetName.STRETCH, n)

    @classmethod
    def mid_thicken(cls, n: int) -> "GadgetKind":
        return cls(GadgetName.MID_THICKEN, n)

    @classmethod
    def bridge(cls) -> "GadgetKind":
        return cls(GadgetName.BRIDGE)

    @classmethod
    def parse(cls, text: str) -> "GadgetKind":
        """Format "thicken:N", "stretch:N", "rmid:N" ou "bridge"."""
        name, _, arg = text.strip().partition(":")
        try:
            kind = GadgetName(name.lower())
        except ValueError as exc:
            raise ParseError(f"unknown gadget {name!r}") from exc
        if kind == GadgetName.BRIDGE:
            if arg:
                raise ParseError("bridge takes no parameter")
            return cls.bridge()
        if not arg.strip().lstrip("-").isdigit():
            raise ParseError(f"gadget {name!r} needs an integer parameter")
        return cls(kind, int(arg))

    def __str__(self) -> str:
        if self.name == GadgetName.BRIDGE:
            return self.name.value
        return f"{self.name.value}:{self.n}"


@dataclass(frozen=True)
class GeneratingForm:
    """
    M_ij = (-1)^signs[i][j] * prod_t generators[t] ** exponents[i][j][t].
    Les générateurs sont des nombres premiers triés.
    """
    generators: tuple[int, ...]
    signs: tuple[tuple[int, ...], ...]
    exponents: tuple[tuple[tuple[int, ...], ...], ...]

    @property
    def q(self) -> int:
        return len(self.signs)

    @property
    def min_exponent(self) -> int:
        flat = [e for row in self.exponents for vec in row for e in vec]
        return min(flat, default=0)

    def exponent_vector(self, i: int, j: int) -> tuple[int, ...]:
        return self.exponents[i][j]
