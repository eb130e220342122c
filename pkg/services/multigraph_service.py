"""
Service multigraphe : parsing, composantes connexes, planarité et faces.
"""
import logging
from typing import Optional

import networkx as nx

from core.exceptions import ConsistencyError, NonPlanarEmbeddingError, NonPlanarError
from models.graph import Dart, Multigraph, RotationSystem, twin
from repositories.graph_repository import graph_repository

log = logging.getLogger(__name__)


class MultigraphService:
    """Opérations combinatoires sur les multigraphes."""

    # =========================================================================
    # PARSING
    # =========================================================================

    @staticmethod
    def parse_graph(text: str) -> Multigraph:
        return graph_repository.parse(text)

    @staticmethod
    def serialize(g: Multigraph, rot: Optional[RotationSystem] = None) -> str:
        return graph_repository.serialize(g, rot)

    # =========================================================================
    # CONNEXITÉ
    # =========================================================================

    @staticmethod
    def to_networkx(g: Multigraph) -> nx.MultiGraph:
        graph = nx.MultiGraph()
        graph.add_nodes_from(range(g.n_vertices))
        graph.add_edges_from((u, v, e) for e, (u, v) in enumerate(g.edges))
        return graph

    def connected_components(self, g: Multigraph) -> list[tuple[int, ...]]:
        """Composantes triées par plus petit sommet ; sommets isolés = singletons."""
        components = [tuple(sorted(c)) for c in nx.connected_components(self.to_networkx(g))]
        return sorted(components)

    def component_edge_counts(self, g: Multigraph) -> list[tuple[tuple[int, ...], int]]:
        """(composante, nombre d'arêtes) pour chaque composante."""
        components = self.connected_components(g)
        owner = {}
        for index, comp in enumerate(components):
            for v in comp:
                owner[v] = index
        counts = [0] * len(components)
        for u, _ in g.edges:
            counts[owner[u]] += 1
        return list(zip(components, counts))

    # =========================================================================
    # PLONGEMENT PLANAIRE
    # =========================================================================

    def planar_embed(self, g: Multigraph) -> RotationSystem:
        """
        Plongement combinatoire. Boucles et arêtes parallèles sont retirées pour
        le test de planarité, puis réinsérées à côté de leur représentant.
        """
        simple = nx.Graph()
        simple.add_nodes_from(range(g.n_vertices))
        bundles: dict[tuple[int, int], list[int]] = {}
        for e, (u, v) in enumerate(g.edges):
            if u == v:
                continue
            key = (min(u, v), max(u, v))
            bundles.setdefault(key, []).append(e)
            simple.add_edge(u, v)

        is_planar, certificate = nx.check_planarity(simple, counterexample=True)
        if not is_planar:
            witness = sorted(
                bundles[(min(a, b), max(a, b))][0] for a, b in certificate.edges()
            )
            log.debug("non-planar input, witness edges %s", witness)
            raise NonPlanarError(
                f"graph is not planar (Kuratowski witness on edges {witness})", witness
            )

        loops_at: dict[int, list[int]] = {}
        for e in g.loop_indices():
            loops_at.setdefault(g.edges[e][0], []).append(e)

        rings = []
        for v in range(g.n_vertices):
            ring: list[Dart] = []
            for w in (certificate.neighbors_cw_order(v) if simple.degree(v) else ()):
                group = bundles[(min(v, w), max(v, w))]
                ordered = group if v < w else list(reversed(group))
                for e in ordered:
                    ring.append((e, 0 if g.edges[e][0] == v else 1))
            for e in loops_at.get(v, ()):
                ring.extend([(e, 0), (e, 1)])
            rings.append(tuple(ring))

        rot = RotationSystem(tuple(rings))
        try:
            self.euler_check(g, rot)
        except NonPlanarEmbeddingError as exc:
            raise ConsistencyError(f"embedder produced an invalid rotation: {exc}") from exc
        return rot

    # =========================================================================
    # FACES
    # =========================================================================

    @staticmethod
    def _face_orbits(g: Multigraph, rot: RotationSystem) -> list[list[Dart]]:
        seen = set()
        orbits = []
        for start in sorted(g.darts()):
            if start in seen:
                continue
            orbit = []
            dart = start
            while dart not in seen:
                seen.add(dart)
                orbit.append(dart)
                dart = rot.successor(twin(dart))
            orbits.append(orbit)
        return orbits

    def faces(self, g: Multigraph, rot: RotationSystem) -> list[list[Dart]]:
        """Cycles de faces : dart h suivi de succ(twin(h))."""
        rot.validate(g)
        return self._face_orbits(g, rot)

    def euler_check(self, g: Multigraph, rot: RotationSystem) -> list[list[Dart]]:
        """V - E + F = 2 sur chaque composante ; renvoie les faces."""
        faces = self.faces(g, rot)
        owner = {}
        for comp in self.connected_components(g):
            for v in comp:
                owner[v] = comp[0]
        per_component_faces: dict[int, int] = {}
        for face in faces:
            c = owner[g.endpoint(face[0])]
            per_component_faces[c] = per_component_faces.get(c, 0) + 1
        for comp, edges in self.component_edge_counts(g):
            n_faces = per_component_faces.get(comp[0], 0) if edges else 1
            if len(comp) - edges + n_faces != 2:
                raise NonPlanarEmbeddingError(
                    f"Euler check fails on component of vertex {comp[0]}: "
                    f"V={len(comp)} E={edges} F={n_faces}"
                )
        return faces


multigraph_service = MultigraphService()
