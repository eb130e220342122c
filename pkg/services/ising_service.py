"""
Service Ising planaire : développement en sous-graphes pairs, transformation
de Fisher vers un problème de couplages parfaits, évaluation par Pfaffien.
"""
import logging
from fractions import Fraction
from typing import Optional

from core.config import settings
from core.exceptions import (
    BudgetExceededError,
    ConsistencyError,
    DegenerateWeightsError,
    NonPlanarEmbeddingError,
)
from models.graph import Dart, Multigraph, RotationSystem
from models.planar import EvenSubgraphPoly
from services.multigraph_service import multigraph_service
from services.pfaffian_service import pfaffian_service

log = logging.getLogger(__name__)


def high_temperature_parameter(a: Fraction, b: Fraction) -> Fraction:
    """t = (a - b) / (a + b) ; chaque arête vaut ((a+b)/2)(1 + t s_u s_v)."""
    if a + b == 0:
        raise DegenerateWeightsError(f"a + b = 0 for a={a}, b={b}")
    return (a - b) / (a + b)


class IsingService:
    """Fonction de partition de la matrice [[a,b],[b,a]] sur graphes planaires."""

    # =========================================================================
    # ORACLE
    # =========================================================================

    @staticmethod
    def even_subgraph_poly_brute(g: Multigraph, limit: Optional[int] = None) -> EvenSubgraphPoly:
        """c_k = nombre de sous-ensembles de k arêtes de degrés tous pairs."""
        limit = settings.EVEN_SUBGRAPH_EDGE_LIMIT if limit is None else limit
        if g.edge_count > limit:
            raise BudgetExceededError(
                f"{g.edge_count} edges exceed the even-subgraph enumeration limit {limit}"
            )
        # parité des degrés -> polynôme en la taille du sous-ensemble
        states: dict[int, list[int]] = {0: [1]}
        for u, v in g.edges:
            flip = (1 << u) ^ (1 << v)
            nxt: dict[int, list[int]] = {}
            for parity, poly in states.items():
                for target, shift in ((parity, 0), (parity ^ flip, 1)):
                    acc = nxt.setdefault(target, [])
                    if len(acc) < len(poly) + shift:
                        acc.extend([0] * (len(poly) + shift - len(acc)))
                    for k, c in enumerate(poly):
                        acc[k + shift] += c
            states = nxt
        coefficients = states.get(0, [1])
        coefficients += [0] * (g.edge_count + 1 - len(coefficients))
        return EvenSubgraphPoly(tuple(coefficients))

    # =========================================================================
    # PRÉPARATION DU PLONGEMENT
    # =========================================================================

    @staticmethod
    def strip_loops(g: Multigraph, rot: Optional[RotationSystem]
                    ) -> tuple[Multigraph, Optional[RotationSystem], int]:
        """Retire les boucles (et leurs darts) ; renvoie aussi leur nombre."""
        loops = set(g.loop_indices())
        if not loops:
            return g, rot, 0
        kept = [e for e in range(g.edge_count) if e not in loops]
        index = {e: k for k, e in enumerate(kept)}
        stripped = Multigraph(g.n_vertices, tuple(g.edges[e] for e in kept))
        if rot is None:
            return stripped, None, len(loops)
        rot.validate(g)
        rings = tuple(tuple((index[e], s) for e, s in ring if e in index) for ring in rot.rotation)
        return stripped, RotationSystem(rings), len(loops)

    @staticmethod
    def chain_split(g: Multigraph, rot: RotationSystem) -> tuple[Multigraph, RotationSystem, int]:
        """
        Remplace chaque sommet de degré d >= 4 par un chemin de d - 2 sommets de
        degré 3 suivant sa rotation. Les arêtes d'origine gardent leurs indices ;
        les arêtes de chaîne sont ajoutées après. Renvoie aussi le nombre
        d'arêtes d'origine.
        """
        ends = [list(edge) for edge in g.edges]
        chain: list[tuple[int, int]] = []
        rings: list[list[Dart]] = [list(ring) for ring in rot.rotation]
        extra_rings: list[list[Dart]] = []
        next_vertex = g.n_vertices
        base = g.edge_count

        for v, ring in enumerate(rot.rotation):
            d = len(ring)
            if d < 4:
                continue
            nodes = [v] + list(range(next_vertex, next_vertex + d - 3))
            next_vertex += d - 3
            links = []
            for i in range(d - 3):
                links.append(base + len(chain))
                chain.append((nodes[i], nodes[i + 1]))
            node_rings: list[list[Dart]] = []
            node_rings.append([ring[0], ring[1], (links[0], 0)])
            for i in range(1, d - 3):
                node_rings.append([ring[i + 1], (links[i], 0), (links[i - 1], 1)])
            node_rings.append([ring[d - 2], ring[d - 1], (links[d - 4], 1)])
            for node, node_ring in zip(nodes, node_rings):
                for e, s in node_ring:
                    if e < base:
                        ends[e][s] = node
                if node == v:
                    rings[v] = node_ring
                else:
                    extra_rings.append(node_ring)

        split = Multigraph(next_vertex, tuple(tuple(e) for e in ends) + tuple(chain))
        return split, RotationSystem(tuple(tuple(r) for r in rings + extra_rings)), base

    @staticmethod
    def fisher_graph(g: Multigraph, rot: RotationSystem
                     ) -> tuple[Multigraph, RotationSystem, dict[Dart, int]]:
        """
        Un noeud par dart d'un graphe de degré <= 3 : noeud seul, arête ou
        triangle selon le degré. L'arête externe k relie les noeuds des deux
        darts de l'arête k ; les arêtes internes suivent.
        """
        node_of: dict[Dart, int] = {}
        for ring in rot.rotation:
            for dart in ring:
                node_of[dart] = len(node_of)
        edges = [(node_of[(e, 0)], node_of[(e, 1)]) for e in range(g.edge_count)]
        node_rings: list[list[Dart]] = [[] for _ in node_of]
        for e in range(g.edge_count):
            node_rings[node_of[(e, 0)]].append((e, 0))
            node_rings[node_of[(e, 1)]].append((e, 1))

        for ring in rot.rotation:
            nodes = [node_of[dart] for dart in ring]
            if len(nodes) == 2:
                k = len(edges)
                edges.append((nodes[0], nodes[1]))
                node_rings[nodes[0]].append((k, 0))
                node_rings[nodes[1]].append((k, 1))
            elif len(nodes) == 3:
                first = len(edges)
                for a in range(3):
                    edges.append((nodes[a], nodes[(a + 1) % 3]))
                for a in range(3):
                    node_rings[nodes[a]].extend([(first + a, 0), (first + (a - 1) % 3, 1)])
            elif len(nodes) > 3:
                raise ConsistencyError("Fisher gadget expects maximum degree 3")

        fisher = Multigraph(len(node_of), tuple(edges))
        fisher_rot = RotationSystem(tuple(tuple(r) for r in node_rings))
        try:
            multigraph_service.euler_check(fisher, fisher_rot)
        except NonPlanarEmbeddingError as exc:
            raise ConsistencyError(f"Fisher rotation system is not planar: {exc}") from exc
        return fisher, fisher_rot, node_of

    # =========================================================================
    # SOMME DES SOUS-GRAPHES PAIRS PAR PFAFFIEN
    # =========================================================================

    def even_subgraph_sum(self, g: Multigraph, rot: RotationSystem, t: Fraction) -> Fraction:
        """Σ_S t^{|S|} sur les sous-ensembles pairs d'un graphe sans boucle plongé."""
        t = Fraction(t)
        if g.edge_count == 0 or t == 0:
            return Fraction(1)
        multigraph_service.euler_check(g, rot)
        split, split_rot, n_original = self.chain_split(g, rot)
        fisher, fisher_rot, _ = self.fisher_graph(split, split_rot)
        forward = pfaffian_service.kasteleyn_orientation(fisher, fisher_rot)
        log.debug("Fisher graph: %d nodes, %d edges (from %d vertices, %d edges)",
                  fisher.n_vertices, fisher.edge_count, g.n_vertices, g.edge_count)

        tn, td = t.numerator, t.denominator

        def arcs_for(weight_of_original: int, p: int):
            arcs = []
            for k, (u, v) in enumerate(fisher.edges):
                w = weight_of_original if k < n_original else 1
                arcs.append((u, v, w % p) if forward[k] else (v, u, w % p))
            return arcs

        order = pfaffian_service.elimination_order(fisher.n_vertices, [(u, v, 1) for u, v in fisher.edges])

        # signe global : Pf unitaire = ±2^(dimension de l'espace des cycles)
        p0 = 2 ** 31 - 1
        cycle_rank = (split.edge_count - split.n_vertices
                      + len(multigraph_service.connected_components(split)))
        unit = pfaffian_service.pfaffian_mod(fisher.n_vertices, arcs_for(1, p0), p0, order)
        expected = pow(2, cycle_rank, p0)
        if unit == expected:
            sign = 1
        elif unit == (-expected) % p0:
            sign = -1
        else:
            raise ConsistencyError("unit Pfaffian does not count the even subgraphs")

        def arcs_for_prime(p: int):
            if tn % p == 0:
                return None
            return arcs_for(td * pow(tn, -1, p) % p, p)

        bound = (abs(tn) + td) ** n_original
        total = pfaffian_service.pfaffian_crt(
            fisher.n_vertices, arcs_for_prime, bound, order,
            scale_for_prime=lambda p: sign * pow(tn, n_original, p),
        )
        return Fraction(total, td ** n_original)

    # =========================================================================
    # FONCTION DE PARTITION
    # =========================================================================

    def ising_fkt(self, g: Multigraph, a: Fraction, b: Fraction,
                  rot: Optional[RotationSystem] = None) -> Fraction:
        """Z_[[a,b],[b,a]](G) en temps polynomial sur un graphe planaire."""
        a, b = Fraction(a), Fraction(b)
        stripped, stripped_rot, n_loops = self.strip_loops(g, rot)
        loop_factor = a ** n_loops
        n_edges = stripped.edge_count

        try:
            t = high_temperature_parameter(a, b)
        except DegenerateWeightsError:
            # a = -b : chaque arête vaut a . s_u s_v
            log.info("a + b = 0, using the direct spin-product identity")
            if any(d % 2 for d in stripped.degrees()):
                return Fraction(0)
            return a ** n_edges * 2 ** g.n_vertices * loop_factor

        if stripped_rot is None:
            stripped_rot = multigraph_service.planar_embed(stripped)
        even = self.even_subgraph_sum(stripped, stripped_rot, t)
        return ((a + b) / 2) ** n_edges * 2 ** g.n_vertices * even * loop_factor


ising_service = IsingService()
