"""
Schémas pydantic pour les fichiers et sorties JSON.
"""
from typing import Optional

from pydantic import BaseModel, model_validator

from models.enums import Outcome


# ============================================================================
# FICHIERS D'ENTRÉE
# ============================================================================

class MatrixFileSchema(BaseModel):
    """Fichier matrice : {"q": int, "entries": [[str, ...], ...]}."""
    q: int
    entries: list[list[str]]

    @model_validator(mode="after")
    def check_shape(self) -> "MatrixFileSchema":
        if self.q < 1:
            raise ValueError("q must be at least 1")
        if len(self.entries) != self.q or any(len(row) != self.q for row in self.entries):
            raise ValueError(f"entries must be a {self.q}x{self.q} array")
        return self


# ============================================================================
# SORTIES
# ============================================================================

class CountEntrySchema(BaseModel):
    value: str
    count: str


class CertificateSchema(BaseModel):
    """Certificat sérialisé ; `kind` discrimine les champs utilisés."""
    kind: str
    sigma: Optional[list[int]] = None
    a: Optional[list[list[str]]] = None
    b: Optional[list[list[str]]] = None
    partition: Optional[list[list[int]]] = None
    verdicts: Optional[list["VerdictSchema"]] = None
    case: Optional[str] = None
    facts: Optional[list[str]] = None
    indices: Optional[list[int]] = None


class VerdictSchema(BaseModel):
    outcome: Outcome
    reason: str
    certificate: Optional[CertificateSchema] = None


CertificateSchema.model_rebuild()


class ValueResultSchema(BaseModel):
    """Résultat scalaire exact (eval, ising, pm, psi)."""
    value: str
    method: Optional[str] = None


class InterpolationResultSchema(BaseModel):
    counts: list[CountEntrySchema]
    matches_enumeration: bool


class LatticeResultSchema(BaseModel):
    dimension: int
    basis: list[list[int]]
    basis_in_delta_set: bool


class ConfluenceResultSchema(BaseModel):
    confluent: bool
    pairs: Optional[list[tuple[list[int], list[int]]]] = None


class FormEntrySchema(BaseModel):
    tag: str
    sigma: list[int]


class FormsResultSchema(BaseModel):
    forms: list[FormEntrySchema]
