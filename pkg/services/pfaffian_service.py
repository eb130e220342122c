"""
Service Pfaffien : élimination exacte, orientation de Kasteleyn,
Pfaffien modulaire (numpy) reconstruit par restes chinois, et comptage
pondéré des couplages parfaits sur graphe planaire plongé.
"""
import logging
from collections import deque
from fractions import Fraction
from math import isqrt, prod
from typing import Callable, Iterable, Optional, Sequence

import networkx as nx
import numpy as np
from networkx.utils import reverse_cuthill_mckee_ordering
from sympy import prevprime
from sympy.ntheory.modular import crt

from core.exceptions import (
    ConsistencyError,
    DimensionMismatchError,
    HasLoopError,
    NonPlanarEmbeddingError,
)
from core.rational import common_denominator
from models.graph import Multigraph, RotationSystem
from models.planar import SkewMatrix
from services.multigraph_service import multigraph_service

log = logging.getLogger(__name__)

#: Plus grand premier < 2^31 ; les produits de deux résidus tiennent dans un int64
FIRST_PRIME = 2 ** 31 - 1

Arc = tuple[int, int, int]


def permutation_sign(perm: Sequence[int]) -> int:
    """Signature d'une permutation par décomposition en cycles."""
    seen = [False] * len(perm)
    sign = 1
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        k = start
        while not seen[k]:
            seen[k] = True
            k = perm[k]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


class PfaffianService:
    """Pfaffiens exacts et algorithme FKT."""

    # =========================================================================
    # PFAFFIEN EXACT (petites matrices)
    # =========================================================================

    @staticmethod
    def pfaffian(a: SkewMatrix) -> Fraction:
        """Élimination antisymétrique exacte ; pivot = première entrée non nulle de la ligne."""
        n = a.n
        if n % 2:
            return Fraction(0)
        m = [list(row) for row in a.entries]
        result = Fraction(1)
        for k in range(0, n, 2):
            j = next((c for c in range(k + 1, n) if m[k][c] != 0), None)
            if j is None:
                return Fraction(0)
            if j != k + 1:
                m[k + 1], m[j] = m[j], m[k + 1]
                for row in m:
                    row[k + 1], row[j] = row[j], row[k + 1]
                result = -result
            pivot = m[k][k + 1]
            result *= pivot
            for i in range(k + 2, n):
                for c in range(k + 2, n):
                    m[i][c] += (m[k + 1][i] * m[k][c] - m[k][i] * m[k + 1][c]) / pivot
        return result

    # =========================================================================
    # PFAFFIEN MODULAIRE
    # =========================================================================

    @staticmethod
    def _pfaffian_mod(matrix: np.ndarray, p: int) -> int:
        a = matrix.copy()
        n = a.shape[0]
        result = 1
        for k in range(0, n, 2):
            nonzero = np.flatnonzero(a[k, k + 1:])
            if nonzero.size == 0:
                return 0
            j = k + 1 + int(nonzero[0])
            if j != k + 1:
                a[[k + 1, j]] = a[[j, k + 1]]
                a[:, [k + 1, j]] = a[:, [j, k + 1]]
                result = -result
            pivot = int(a[k, k + 1])
            result = result * pivot % p
            if k + 2 >= n:
                continue
            u = a[k, k + 2:]
            v = a[k + 1, k + 2:]
            idx = np.flatnonzero((u != 0) | (v != 0))
            if idx.size == 0:
                continue
            uu, vv = u[idx], v[idx]
            inverse = pow(pivot, p - 2, p)
            update = (np.outer(vv, uu) % p - np.outer(uu, vv) % p) % p
            update = update * inverse % p
            sub = np.ix_(idx + k + 2, idx + k + 2)
            a[sub] = (a[sub] + update) % p
        return result % p

    @staticmethod
    def elimination_order(n: int, arcs: Iterable[Arc]) -> list[int]:
        """Ordre de Cuthill-McKee inverse des sommets (limite le remplissage)."""
        graph = nx.Graph()
        graph.add_nodes_from(range(n))
        graph.add_edges_from((u, v) for u, v, _ in arcs)
        return list(reverse_cuthill_mckee_ordering(graph))

    def pfaffian_mod(self, n: int, arcs: Sequence[Arc], p: int,
                     order: Optional[Sequence[int]] = None) -> int:
        """Pf mod p de la matrice A[u][v] += w, A[v][u] -= w ; résultat dans [0, p)."""
        if n % 2:
            return 0
        order = list(range(n)) if order is None else list(order)
        position = {node: k for k, node in enumerate(order)}
        matrix = np.zeros((n, n), dtype=np.int64)
        for u, v, w in arcs:
            i, j = position[u], position[v]
            matrix[i, j] = (matrix[i, j] + w) % p
            matrix[j, i] = (matrix[j, i] - w) % p
        value = self._pfaffian_mod(matrix, p)
        return value * permutation_sign(order) % p

    def pfaffian_crt(self, n: int, arcs_for_prime: Callable[[int], Optional[Sequence[Arc]]],
                     bound: int, order: Optional[Sequence[int]] = None,
                     scale_for_prime: Callable[[int], int] = lambda p: 1) -> int:
        """
        Entier N avec |N| <= bound, connu modulo des premiers successifs :
        N = scale(p) . Pf(arcs(p)) mod p. arcs(p) = None écarte le premier p.
        """
        residues, moduli = [], []
        modulus = 1
        p = FIRST_PRIME
        while modulus <= 2 * bound:
            arcs = arcs_for_prime(p)
            if arcs is not None:
                residue = self.pfaffian_mod(n, arcs, p, order) * scale_for_prime(p) % p
                residues.append(residue)
                moduli.append(p)
                modulus *= p
            p = prevprime(p)
        log.debug("Pfaffian of order %d reconstructed from %d primes", n, len(moduli))
        value, _ = crt(moduli, residues, symmetric=True)
        return int(value)

    # =========================================================================
    # ORIENTATION DE KASTELEYN
    # =========================================================================

    def kasteleyn_orientation(self, g: Multigraph, rot: RotationSystem) -> list[bool]:
        """
        forward[e] : arête orientée de edges[e][0] vers edges[e][1]. Arbre couvrant
        orienté arbitrairement, puis chaque face (sauf une par composante) fixée
        impaire via l'arbre dual des arêtes hors arbre.
        """
        if g.loop_indices():
            raise HasLoopError("Kasteleyn orientation needs a loop-free graph")
        faces = multigraph_service.faces(g, rot)
        face_of = {}
        for index, face in enumerate(faces):
            for dart in face:
                face_of[dart] = index

        forward: list[Optional[bool]] = [None] * g.edge_count
        incident = g.incident_darts()
        visited = [False] * g.n_vertices
        for root in range(g.n_vertices):
            if visited[root]:
                continue
            visited[root] = True
            queue = deque([root])
            while queue:
                v = queue.popleft()
                for e, s in incident[v]:
                    w = g.edges[e][1 - s]
                    if not visited[w]:
                        visited[w] = True
                        forward[e] = True
                        queue.append(w)

        dual: dict[int, list[tuple[int, int]]] = {}
        for e in range(g.edge_count):
            if forward[e] is None:
                f0, f1 = face_of[(e, 0)], face_of[(e, 1)]
                dual.setdefault(f0, []).append((f1, e))
                dual.setdefault(f1, []).append((f0, e))

        roots = set()
        parent_edge: dict[int, int] = {}
        order = []
        seen_faces = set()
        for index in range(len(faces)):
            if index in seen_faces:
                continue
            roots.add(index)
            seen_faces.add(index)
            queue = deque([index])
            while queue:
                f = queue.popleft()
                order.append(f)
                for other, e in dual.get(f, ()):
                    if other not in seen_faces:
                        seen_faces.add(other)
                        parent_edge[other] = e
                        queue.append(other)

        def agrees(dart) -> bool:
            e, s = dart
            return forward[e] == (s == 0)

        for f in reversed(order):
            if f in roots:
                continue
            e = parent_edge[f]
            count = sum(1 for dart in faces[f] if dart[0] != e and agrees(dart))
            side = next(s for d_e, s in faces[f] if d_e == e)
            want_agree = count % 2 == 0
            forward[e] = want_agree if side == 0 else not want_agree

        for index, face in enumerate(faces):
            if index not in roots and sum(1 for dart in face if agrees(dart)) % 2 == 0:
                raise ConsistencyError(f"Kasteleyn orientation fails on face {index}")
        return [bool(f) for f in forward]

    # =========================================================================
    # COUPLAGES PARFAITS
    # =========================================================================

    @staticmethod
    def count_pm_brute(g: Multigraph, weights: Optional[Sequence[Fraction]] = None) -> Fraction:
        """Somme pondérée des couplages parfaits par énumération directe."""
        weights = [Fraction(1)] * g.edge_count if weights is None else [Fraction(w) for w in weights]
        if len(weights) != g.edge_count:
            raise DimensionMismatchError(f"{len(weights)} weights for {g.edge_count} edges")
        incident = [[] for _ in range(g.n_vertices)]
        for e, (u, v) in enumerate(g.edges):
            if u != v:
                incident[u].append((e, v))
                incident[v].append((e, u))

        def search(matched: frozenset) -> Fraction:
            free = next((v for v in range(g.n_vertices) if v not in matched), None)
            if free is None:
                return Fraction(1)
            total = Fraction(0)
            for e, other in incident[free]:
                if other not in matched:
                    total += weights[e] * search(matched | {free, other})
            return total

        return search(frozenset())

    def _exact_pfaffian(self, n: int, arcs: Sequence[Arc], order: Sequence[int]) -> int:
        """Pf entier exact, borne de Hadamard sur les lignes."""
        row_norms = [0] * n
        for u, v, w in arcs:
            row_norms[u] += w * w
            row_norms[v] += w * w
        bound = isqrt(prod(row_norms)) + 1
        return self.pfaffian_crt(n, lambda p: [(u, v, w % p) for u, v, w in arcs], bound, order)

    def count_pm_planar(self, g: Multigraph, rot: Optional[RotationSystem] = None,
                        weights: Optional[Sequence[Fraction]] = None) -> Fraction:
        """Somme pondérée des couplages parfaits par FKT (arêtes parallèles fusionnées)."""
        if g.loop_indices():
            raise HasLoopError("a loop can never be matched; remove loops first")
        weights = [Fraction(1)] * g.edge_count if weights is None else [Fraction(w) for w in weights]
        if len(weights) != g.edge_count:
            raise DimensionMismatchError(f"{len(weights)} weights for {g.edge_count} edges")
        if rot is None:
            rot = multigraph_service.planar_embed(g)
        else:
            multigraph_service.euler_check(g, rot)
        if g.n_vertices % 2:
            return Fraction(0)

        representative: dict[tuple[int, int], int] = {}
        merged_weight: dict[int, Fraction] = {}
        for e, (u, v) in enumerate(g.edges):
            key = (min(u, v), max(u, v))
            first = representative.setdefault(key, e)
            merged_weight[first] = merged_weight.get(first, Fraction(0)) + weights[e]
        kept = sorted(merged_weight)
        new_index = {e: k for k, e in enumerate(kept)}
        simple = Multigraph(g.n_vertices, tuple(g.edges[e] for e in kept))
        simple_rot = RotationSystem(tuple(
            tuple((new_index[e], s) for e, s in ring if e in new_index) for ring in rot.rotation
        ))
        try:
            forward = self.kasteleyn_orientation(simple, simple_rot)
        except NonPlanarEmbeddingError as exc:
            raise ConsistencyError(f"merged embedding is invalid: {exc}") from exc

        def oriented(e: int, weight: int) -> Arc:
            u, v = simple.edges[e]
            return (u, v, weight) if forward[e] else (v, u, weight)

        order = self.elimination_order(simple.n_vertices, [(u, v, 1) for u, v in simple.edges])
        unit = self._exact_pfaffian(simple.n_vertices, [oriented(e, 1) for e in range(simple.edge_count)], order)
        if unit == 0:
            return Fraction(0)
        sign = 1 if unit > 0 else -1

        scaled = [merged_weight[e] for e in kept]
        den = common_denominator(scaled)
        arcs = [oriented(k, int(w * den)) for k, w in enumerate(scaled)]
        value = self._exact_pfaffian(simple.n_vertices, arcs, order)
        return Fraction(sign * value, den ** (simple.n_vertices // 2))


pfaffian_service = PfaffianService()
