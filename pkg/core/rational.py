"""
Utilitaires pour l'arithmétique rationnelle exacte (fractions.Fraction).
"""
import math
import re
from fractions import Fraction
from typing import Iterable, Optional, Union

import sympy

from core.exceptions import ParseError

Rational = Fraction
RationalLike = Union[Fraction, int, str]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_rational(text: RationalLike) -> Fraction:
    """Convertit "n", "-p/q" (ou un int / Fraction) en Fraction normalisée."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, bool):
        raise ParseError(f"not a rational: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise ParseError(f"not a rational: {text!r}")
    match = _RATIONAL_RE.match(text)
    if not match:
        raise ParseError(f"not a rational: {text!r}")
    num = int(match.group(1))
    den = int(match.group(2)) if match.group(2) is not None else 1
    if den == 0:
        raise ParseError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def format_rational(value: Fraction) -> str:
    """Représentation texte exacte : "n" ou "p/q", jamais de flottant."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational_list(text: str) -> list[Fraction]:
    """Liste séparée par des virgules ("1/2,3,-4")."""
    parts = [p for p in text.split(",") if p.strip()]
    if not parts:
        raise ParseError("empty list")
    return [parse_rational(p) for p in parts]


def parse_int_list(text: str) -> list[int]:
    parts = [p.strip() for p in text.split(",") if p.strip()]
    if not parts:
        raise ParseError("empty vector")
    try:
        return [int(p) for p in parts]
    except ValueError as exc:
        raise ParseError(f"not an integer vector: {text!r}") from exc


def rational_sqrt(value: Fraction) -> Optional[Fraction]:
    """Racine carrée exacte si elle est rationnelle, sinon None."""
    value = Fraction(value)
    if value < 0:
        return None
    num_root = math.isqrt(value.numerator)
    den_root = math.isqrt(value.denominator)
    if num_root * num_root != value.numerator or den_root * den_root != value.denominator:
        return None
    return Fraction(num_root, den_root)


def common_denominator(values: Iterable[Fraction]) -> int:
    """PPCM des dénominateurs (1 pour une séquence vide)."""
    den = 1
    for v in values:
        den = math.lcm(den, Fraction(v).denominator)
    return den


def power(base: Fraction, exponent: int) -> Fraction:
    """Puissance entière avec la convention 0**0 = 1."""
    if exponent == 0:
        return Fraction(1)
    return Fraction(base) ** exponent


def to_sympy(value: Fraction) -> sympy.Rational:
    """Fraction -> sympy.Rational."""
    value = Fraction(value)
    return sympy.Rational(value.numerator, value.denominator)


def from_sympy(value) -> Fraction:
    """sympy.Rational (ou entier) -> Fraction ; refuse les valeurs non rationnelles."""
    value = sympy.sympify(value)
    if not value.is_Rational:
        raise ValueError(f"not a rational value: {value}")
    return Fraction(int(value.p), int(value.q))
