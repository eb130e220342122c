"""
Hiérarchie d'exceptions du projet.
Chaque erreur porte un code stable (affiché par la CLI) et un code de sortie.
"""
from typing import Sequence


class PlhomError(Exception):
    """Exception de base."""
    code = "Error"
    exit_code = 3


class UsageError(PlhomError):
    code = "Usage"
    exit_code = 1


class ConsistencyError(PlhomError):
    """Deux chemins de calcul indépendants ne concordent pas."""
    code = "Internal"
    exit_code = 4


# =============================================================================
# ERREURS D'ENTRÉE (exit 2)
# =============================================================================

class ParseError(PlhomError):
    code = "ParseError"
    exit_code = 2


class AsymmetricError(ParseError):
    code = "AsymmetricError"


class InvalidRotationError(ParseError):
    code = "InvalidRotation"


# =============================================================================
# ERREURS DE DOMAINE (exit 3)
# =============================================================================

class DomainError(PlhomError):
    code = "DomainError"
    exit_code = 3


class DimensionError(DomainError):
    code = "DimensionError"


class DimensionMismatchError(DomainError):
    code = "DimensionMismatch"


class BudgetExceededError(DomainError):
    code = "BudgetExceeded"


class FactorizationBudgetError(BudgetExceededError):
    code = "FactorizationBudget"


class DegreeBudgetError(BudgetExceededError):
    code = "DegreeBudget"


class NonPlanarError(DomainError):
    """Graphe non planaire ; `witness` contient les arêtes d'un sous-graphe de Kuratowski."""
    code = "NonPlanar"

    def __init__(self, message: str, witness: Sequence[int] = ()):
        super().__init__(message)
        self.witness = tuple(witness)


class NonPlanarEmbeddingError(DomainError):
    code = "NonPlanarEmbedding"


class NegativeExponentError(DomainError):
    code = "NegativeExponent"


class DuplicateNodeError(DomainError):
    code = "DuplicateNode"


class DegenerateNodeError(DomainError):
    code = "DegenerateNode"


class UnrepresentableValueError(DomainError):
    code = "UnrepresentableValue"


class NonPositiveError(DomainError):
    code = "NonPositive"


class ZeroVectorError(DomainError):
    code = "ZeroVector"


class ZeroBaseError(DomainError):
    code = "ZeroBase"


class NotSymmetricError(DomainError):
    code = "NotSymmetric"


class NotSkewError(DomainError):
    code = "NotSkew"


class HasLoopError(DomainError):
    code = "HasLoop"


class DegenerateWeightsError(DomainError):
    code = "DegenerateWeights"


class CertificateMismatchError(DomainError):
    code = "CertificateMismatch"


class RankDeficientError(DomainError):
    code = "RankDeficient"


class NegativeEntryError(DomainError):
    code = "NegativeEntry"


class IrrationalSpectrumError(DomainError):
    code = "IrrationalSpectrum"
