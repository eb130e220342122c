"""
Multigraphes (boucles et arêtes multiples autorisées) et systèmes de rotation.
Une extrémité d'arête (dart) est un couple (e, s) : l'arête e vue depuis son
extrémité s, orientée de edges[e][s] vers edges[e][1 - s].
"""
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from core.exceptions import InvalidRotationError, ParseError

Dart = tuple[int, int]
Edge = tuple[int, int]


def twin(dart: Dart) -> Dart:
    """L'autre extrémité de la même arête."""
    return dart[0], 1 - dart[1]


@dataclass(frozen=True)
class Multigraph:
    """Graphe non orienté ; les arêtes sont identifiées par leur position."""
    n_vertices: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        if self.n_vertices < 0:
            raise ParseError(f"negative vertex count {self.n_vertices}")
        normalized = tuple((int(u), int(v)) for u, v in self.edges)
        for index, (u, v) in enumerate(normalized):
            if not (0 <= u < self.n_vertices and 0 <= v < self.n_vertices):
                raise ParseError(f"edge {index} ({u},{v}) out of range for {self.n_vertices} vertices")
        object.__setattr__(self, "edges", normalized)

    @classmethod
    def from_edges(cls, n_vertices: int, edges: Iterable[Sequence[int]]) -> "Multigraph":
        return cls(n_vertices, tuple((u, v) for u, v in edges))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def endpoint(self, dart: Dart) -> int:
        """Sommet portant le dart."""
        return self.edges[dart[0]][dart[1]]

    def darts(self) -> Iterator[Dart]:
        for e in range(len(self.edges)):
            yield e, 0
            yield e, 1

    def incident_darts(self) -> list[list[Dart]]:
        """Darts incidents à chaque sommet, dans l'ordre des arêtes."""
        incident: list[list[Dart]] = [[] for _ in range(self.n_vertices)]
        for e, (u, v) in enumerate(self.edges):
            incident[u].append((e, 0))
            incident[v].append((e, 1))
        return incident

    def degrees(self) -> list[int]:
        """Degrés ; une boucle compte deux fois."""
        deg = [0] * self.n_vertices
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def loop_indices(self) -> list[int]:
        return [e for e, (u, v) in enumerate(self.edges) if u == v]

    def multiplicities(self) -> Counter:
        """Nombre d'arêtes par paire non ordonnée {u, v}."""
        return Counter((min(u, v), max(u, v)) for u, v in self.edges)

    def induced(self, vertices: Sequence[int]) -> "Multigraph":
        """Sous-graphe induit, sommets renumérotés dans l'ordre donné."""
        index = {v: i for i, v in enumerate(vertices)}
        kept = [(index[u], index[v]) for u, v in self.edges if u in index and v in index]
        return Multigraph(len(vertices), tuple(kept))

    def disjoint_union(self, other: "Multigraph") -> "Multigraph":
        shift = self.n_vertices
        moved = tuple((u + shift, v + shift) for u, v in other.edges)
        return Multigraph(self.n_vertices + other.n_vertices, self.edges + moved)


@dataclass(frozen=True)
class RotationSystem:
    """Ordre cyclique des darts autour de chaque sommet."""
    rotation: tuple[tuple[Dart, ...], ...]
    _successor: dict = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        normalized = tuple(tuple((int(e), int(s)) for e, s in ring) for ring in self.rotation)
        object.__setattr__(self, "rotation", normalized)
        successor = {}
        for ring in normalized:
            for k, dart in enumerate(ring):
                successor[dart] = ring[(k + 1) % len(ring)]
        object.__setattr__(self, "_successor", successor)

    def successor(self, dart: Dart) -> Dart:
        """Dart suivant dans l'ordre cyclique autour du même sommet."""
        return self._successor[dart]

    def validate(self, g: Multigraph) -> None:
        """Chaque dart apparaît exactement une fois, autour de son propre sommet."""
        if len(self.rotation) != g.n_vertices:
            raise InvalidRotationError(
                f"rotation lists {len(self.rotation)} vertices, graph has {g.n_vertices}"
            )
        seen = set()
        for v, ring in enumerate(self.rotation):
            for dart in ring:
                e, s = dart
                if not (0 <= e < g.edge_count and s in (0, 1)):
                    raise InvalidRotationError(f"unknown edge end {e}:{s}")
                if dart in seen:
                    raise InvalidRotationError(f"edge end {e}:{s} listed twice")
                if g.endpoint(dart) != v:
                    raise InvalidRotationError(f"edge end {e}:{s} is not incident to vertex {v}")
                seen.add(dart)
        if len(seen) != 2 * g.edge_count:
            raise InvalidRotationError("rotation does not list every edge end")
