"""
Format texte des graphes :
  "V E", puis E lignes "u v", puis éventuellement une ligne "rotation"
  suivie de V lignes de darts "e:s" dans l'ordre cyclique.
"""
from typing import Optional

from core.exceptions import ParseError
from models.graph import Multigraph, RotationSystem
from repositories.base import BaseRepository

ROTATION_MARKER = "rotation"


def _parse_int_pair(line: str, what: str) -> tuple[int, int]:
    parts = line.split()
    if len(parts) != 2:
        raise ParseError(f"malformed {what} line: {line!r}")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError as exc:
        raise ParseError(f"malformed {what} line: {line!r}") from exc


def _parse_dart(token: str) -> tuple[int, int]:
    edge, sep, end = token.partition(":")
    if not sep or end not in ("0", "1"):
        raise ParseError(f"malformed edge end {token!r}")
    try:
        return int(edge), int(end)
    except ValueError as exc:
        raise ParseError(f"malformed edge end {token!r}") from exc


class GraphRepository(BaseRepository[Multigraph]):
    """Codec du format graphe."""

    format_name = "graph"

    def parse_document(self, text: str) -> tuple[Multigraph, Optional[RotationSystem]]:
        """Graphe et, si présente, la rotation fournie (validée)."""
        raw_lines = text.splitlines()
        marker = None
        for index, line in enumerate(raw_lines):
            if line.strip().lower() == ROTATION_MARKER:
                marker = index
                break
        head = raw_lines if marker is None else raw_lines[:marker]
        lines = [line.strip() for line in head if line.strip()]
        if not lines:
            raise ParseError("empty graph file")

        n_vertices, n_edges = _parse_int_pair(lines[0], "header")
        if n_vertices < 0 or n_edges < 0:
            raise ParseError(f"negative counts in header {lines[0]!r}")
        if len(lines) - 1 != n_edges:
            raise ParseError(f"header announces {n_edges} edges, found {len(lines) - 1}")
        edges = tuple(_parse_int_pair(line, "edge") for line in lines[1:])
        graph = Multigraph(n_vertices, edges)

        if marker is None:
            return graph, None

        ring_lines = raw_lines[marker + 1:]
        extra = ring_lines[n_vertices:]
        if any(line.strip() for line in extra):
            raise ParseError("rotation section has more lines than vertices")
        ring_lines = ring_lines[:n_vertices] + [""] * max(0, n_vertices - len(ring_lines))
        rotation = RotationSystem(tuple(
            tuple(_parse_dart(token) for token in line.split())
            for line in ring_lines
        ))
        rotation.validate(graph)
        return graph, rotation

    def parse(self, text: str) -> Multigraph:
        return self.parse_document(text)[0]

    def serialize(self, model: Multigraph, rotation: Optional[RotationSystem] = None) -> str:
        lines = [f"{model.n_vertices} {model.edge_count}"]
        lines.extend(f"{u} {v}" for u, v in model.edges)
        if rotation is not None:
            lines.append(ROTATION_MARKER)
            lines.extend(" ".join(f"{e}:{s}" for e, s in ring) for ring in rotation.rotation)
        return "\n".join(lines) + "\n"

    def load_document(self, path) -> tuple[Multigraph, Optional[RotationSystem]]:
        return self.parse_document(self.read_text(path))


graph_repository = GraphRepository()
