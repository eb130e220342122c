"""
Codec JSON des matrices : {"q": int, "entries": [["p/q", ...], ...]}.
"""
from pydantic import ValidationError

from core.exceptions import ParseError
from core.rational import format_rational, parse_rational
from models.matrix import SymMatrix
from models.schemas import MatrixFileSchema
from repositories.base import BaseRepository


class MatrixRepository(BaseRepository[SymMatrix]):
    format_name = "matrix"

    @staticmethod
    def _convert_schema(schema: MatrixFileSchema) -> SymMatrix:
        """Schéma validé -> SymMatrix (AsymmetricError si non symétrique)."""
        return SymMatrix(tuple(
            tuple(parse_rational(cell) for cell in row) for row in schema.entries
        ))

    @staticmethod
    def to_schema(model: SymMatrix) -> MatrixFileSchema:
        return MatrixFileSchema(
            q=model.q,
            entries=[[format_rational(x) for x in row] for row in model.entries],
        )

    def parse(self, text: str) -> SymMatrix:
        try:
            schema = MatrixFileSchema.model_validate_json(text)
        except ValidationError as exc:
            first = exc.errors()[0]
            raise ParseError(f"invalid matrix file: {first['msg']}") from exc
        return self._convert_schema(schema)

    def serialize(self, model: SymMatrix) -> str:
        return self.to_schema(model).model_dump_json() + "\n"


matrix_repository = MatrixRepository()
