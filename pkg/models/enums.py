"""
Enums partagés.
"""
import enum


class FormTag(str, enum.Enum):
    """Formes (I)-(VI) des matrices 4x4 non diagonal-distinctes."""
    I = "I"
    II = "II"
    III = "III"
    IV = "IV"
    V = "V"
    VI = "VI"


class GadgetName(str, enum.Enum):
    """Gadgets d'arête."""
    THICKEN = "thicken"
    STRETCH = "stretch"
    MID_THICKEN = "rmid"
    BRIDGE = "bridge"


class Outcome(str, enum.Enum):
    """Issue de la classification."""
    TRACTABLE = "tractable"
    HARD = "hard"
    UNKNOWN = "unknown"


class TwoByTwoCase(str, enum.Enum):
    """Cas traitables du théorème 2x2."""
    Y_ZERO = "y=0"
    RANK_ONE = "xz=y^2"
    EQUAL_DIAGONAL = "x=z"


class EvalMethod(str, enum.Enum):
    """Méthode d'évaluation de Z."""
    BRUTE = "brute"
    TRACTABLE = "tractable"
    AUTO = "auto"


class GadgetTarget(str, enum.Enum):
    GRAPH = "graph"
    MATRIX = "matrix"
