"""
Repository générique : codec texte <-> objet du domaine, plus accès fichier.
"""
from pathlib import Path
from typing import Generic, TypeVar, Union

from core.exceptions import ParseError

ModelType = TypeVar("ModelType")


# =============================================================================
# BASE REPOSITORY
# =============================================================================

class BaseRepository(Generic[ModelType]):
    """Lecture/écriture d'un type du domaine dans un format texte."""

    #: Nom du format, utilisé dans les messages d'erreur
    format_name = "text"

    def parse(self, text: str) -> ModelType:
        raise NotImplementedError

    def serialize(self, model: ModelType) -> str:
        raise NotImplementedError

    def read_text(self, path: Union[str, Path]) -> str:
        try:
            return Path(path).read_text(encoding="utf-8")
        except OSError as exc:
            raise ParseError(f"cannot read {self.format_name} file {path}: {exc.strerror}") from exc

    def load(self, path: Union[str, Path]) -> ModelType:
        """Lit et décode un fichier UTF-8."""
        return self.parse(self.read_text(path))

    def save(self, path: Union[str, Path], model: ModelType) -> None:
        Path(path).write_text(self.serialize(model), encoding="utf-8")
