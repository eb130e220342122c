"""
Codec JSON des verdicts de classification.
"""
from pydantic import ValidationError

from core.exceptions import ParseError
from core.rational import format_rational, parse_rational
from models.enums import TwoByTwoCase
from models.matrix import SymMatrix
from models.schemas import CertificateSchema, VerdictSchema
from models.verdict import (
    BipartiteTensor,
    Certificate,
    DirectSum,
    HardnessWitness,
    Scalar,
    TensorFactorization,
    TwoByTwo,
    UndecidedBlock,
    Verdict,
)
from repositories.base import BaseRepository


def _rows(m: SymMatrix) -> list[list[str]]:
    return [[format_rational(x) for x in row] for row in m.entries]


def _matrix(rows) -> SymMatrix:
    if rows is None:
        raise ParseError("certificate is missing a matrix factor")
    return SymMatrix(tuple(tuple(parse_rational(x) for x in row) for row in rows))


class VerdictRepository(BaseRepository[Verdict]):
    format_name = "verdict"

    # =========================================================================
    # CONVERSION Verdict <-> schéma
    # =========================================================================

    @classmethod
    def _certificate_to_schema(cls, cert: Certificate) -> CertificateSchema:
        if isinstance(cert, TensorFactorization):
            return CertificateSchema(kind="tensor", sigma=list(cert.sigma), a=_rows(cert.a), b=_rows(cert.b))
        if isinstance(cert, DirectSum):
            return CertificateSchema(
                kind="direct_sum",
                partition=[list(block) for block in cert.partition],
                verdicts=[cls.to_schema(v) for v in cert.verdicts],
            )
        if isinstance(cert, TwoByTwo):
            return CertificateSchema(kind="two_by_two", case=cert.case.value)
        if isinstance(cert, BipartiteTensor):
            return CertificateSchema(kind="bipartite_tensor", sigma=list(cert.sigma), a=_rows(cert.a))
        if isinstance(cert, Scalar):
            return CertificateSchema(kind="scalar")
        if isinstance(cert, HardnessWitness):
            return CertificateSchema(kind="hardness", facts=list(cert.facts))
        if isinstance(cert, UndecidedBlock):
            return CertificateSchema(kind="undecided_block", indices=list(cert.indices))
        raise TypeError(f"unknown certificate type {type(cert).__name__}")

    @classmethod
    def _certificate_from_schema(cls, schema: CertificateSchema) -> Certificate:
        kind = schema.kind
        if kind == "tensor":
            return TensorFactorization(tuple(schema.sigma or ()), _matrix(schema.a), _matrix(schema.b))
        if kind == "direct_sum":
            return DirectSum(
                tuple(tuple(block) for block in schema.partition or ()),
                tuple(cls.from_schema(v) for v in schema.verdicts or ()),
            )
        if kind == "two_by_two":
            try:
                return TwoByTwo(TwoByTwoCase(schema.case))
            except ValueError as exc:
                raise ParseError(f"unknown 2x2 case {schema.case!r}") from exc
        if kind == "bipartite_tensor":
            return BipartiteTensor(tuple(schema.sigma or ()), _matrix(schema.a))
        if kind == "scalar":
            return Scalar()
        if kind == "hardness":
            return HardnessWitness(tuple(schema.facts or ()))
        if kind == "undecided_block":
            return UndecidedBlock(tuple(schema.indices or ()))
        raise ParseError(f"unknown certificate kind {kind!r}")

    @classmethod
    def to_schema(cls, model: Verdict) -> VerdictSchema:
        certificate = None if model.certificate is None else cls._certificate_to_schema(model.certificate)
        return VerdictSchema(outcome=model.outcome, reason=model.reason, certificate=certificate)

    @classmethod
    def from_schema(cls, schema: VerdictSchema) -> Verdict:
        certificate = None if schema.certificate is None else cls._certificate_from_schema(schema.certificate)
        return Verdict(schema.outcome, schema.reason, certificate)

    # =========================================================================
    # CODEC
    # =========================================================================

    def parse(self, text: str) -> Verdict:
        try:
            schema = VerdictSchema.model_validate_json(text)
        except ValidationError as exc:
            raise ParseError(f"invalid verdict: {exc.errors()[0]['msg']}") from exc
        return self.from_schema(schema)

    def serialize(self, model: Verdict) -> str:
        return self.to_schema(model).model_dump_json(exclude_none=True) + "\n"


verdict_repository = VerdictRepository()
