"""
Service d'évaluation exacte par force brute : Z_M(G) et CountMap.
C'est l'oracle de référence des autres services.
"""
import itertools
import logging
from collections import Counter
from fractions import Fraction
from math import prod
from multiprocessing import Pool
from typing import Optional

from core.config import settings
from core.exceptions import BudgetExceededError
from core.rational import common_denominator
from models.counting import CountMap
from models.graph import Multigraph
from models.matrix import SymMatrix
from services.multigraph_service import multigraph_service

log = logging.getLogger(__name__)

IntTable = list[list[int]]


def _integer_weights(m: SymMatrix) -> tuple[IntTable, int]:
    """W = D.M entière, D = dénominateur commun."""
    den = common_denominator(m.values())
    weights = [[int(x * den) for x in row] for row in m.entries]
    return weights, den


def _enumerate_shard(args) -> Counter:
    """Énumère les affectations d'une composante dont le premier sommet vaut `first`."""
    q, weights, n_local, edges, first = args
    counts: Counter = Counter()
    for rest in itertools.product(range(q), repeat=n_local - 1):
        sigma = (first,) + rest
        counts[prod(weights[sigma[u]][sigma[v]] for u, v in edges)] += 1
    return counts


class PartitionService:
    """Évaluation exhaustive de Z_M(G)."""

    @staticmethod
    def _check_budget(size: int, budget: int, what: str) -> None:
        if size > budget:
            raise BudgetExceededError(f"{what} of size {size} exceeds budget {budget}")

    # =========================================================================
    # Z PAR ÉNUMÉRATION / ÉLIMINATION
    # =========================================================================

    def z_brute(self, m: SymMatrix, g: Multigraph, budget: Optional[int] = None,
                method: str = "eliminate") -> Fraction:
        """
        Somme sur toutes les affectations V -> [q] du produit des entrées.
        method="enumerate" : compteur base q littéral ; "eliminate" : même somme,
        contractée sommet par sommet (ordre de degré minimum).
        Le budget borne q^|V| pour "enumerate" mais la plus grande table
        intermédiaire pour "eliminate" : un long chemin passe sous n'importe quel budget >= q^2.
        """
        budget = settings.ASSIGN_BUDGET if budget is None else budget
        weights, den = _integer_weights(m)
        if method == "enumerate":
            total = self._z_enumerate(m.q, weights, g, budget)
        elif method == "eliminate":
            total = self._z_eliminate(m.q, weights, g, budget)
        else:
            raise ValueError(f"unknown method {method!r}")
        return Fraction(total, den ** g.edge_count)

    def _z_enumerate(self, q: int, weights: IntTable, g: Multigraph, budget: int) -> int:
        self._check_budget(q ** g.n_vertices, budget, "assignment enumeration")
        total = 0
        for sigma in itertools.product(range(q), repeat=g.n_vertices):
            total += prod(weights[sigma[u]][sigma[v]] for u, v in g.edges)
        return total

    def _z_eliminate(self, q: int, weights: IntTable, g: Multigraph, budget: int) -> int:
        # facteur = (scope trié, table aplatie en base q)
        factors: list[tuple[tuple[int, ...], list[int]]] = []
        for u, v in g.edges:
            if u == v:
                factors.append(((u,), [weights[a][a] for a in range(q)]))
            else:
                lo, hi = min(u, v), max(u, v)
                factors.append(((lo, hi), [weights[a][b] for a in range(q) for b in range(q)]))

        result = 1
        remaining = set(range(g.n_vertices))
        largest = 0
        while remaining:
            neighbours = {v: set() for v in remaining}
            for scope, _ in factors:
                for v in scope:
                    neighbours[v].update(scope)
            vertex = min(remaining, key=lambda v: (len(neighbours[v]), v))
            remaining.discard(vertex)

            bucket = [f for f in factors if vertex in f[0]]
            if not bucket:
                result *= q
                continue
            factors = [f for f in factors if vertex not in f[0]]
            scope = tuple(sorted(set().union(*(s for s, _ in bucket)) - {vertex}))
            size = q ** (len(scope) + 1)
            self._check_budget(size, budget, "elimination table")
            largest = max(largest, size)

            table = []
            for outer in itertools.product(range(q), repeat=len(scope)):
                assignment = dict(zip(scope, outer))
                acc = 0
                for value in range(q):
                    assignment[vertex] = value
                    term = 1
                    for f_scope, f_table in bucket:
                        index = 0
                        for w in f_scope:
                            index = index * q + assignment[w]
                        term *= f_table[index]
                        if term == 0:
                            break
                    acc += term
                table.append(acc)
            if scope:
                factors.append((scope, table))
            else:
                result *= table[0]
        for scope, table in factors:
            result *= table[0]
        log.debug("elimination on %d vertices, largest table %d", g.n_vertices, largest)
        return result

    # =========================================================================
    # COUNT MAP
    # =========================================================================

    def count_map(self, m: SymMatrix, g: Multigraph, budget: Optional[int] = None,
                  threads: Optional[int] = None) -> CountMap:
        """
        x -> nombre d'affectations de produit x. Énumération par composante,
        éventuellement répartie par valeur du premier sommet sur `threads` processus.
        """
        budget = settings.ASSIGN_BUDGET if budget is None else budget
        threads = settings.thread_count if threads is None else max(1, threads)
        q = m.q
        weights, den = _integer_weights(m)

        components = multigraph_service.component_edge_counts(g)
        largest = max((len(c) for c, _ in components), default=0)
        self._check_budget(q ** largest, budget, "component enumeration")

        combined: dict[Fraction, int] = {Fraction(1): 1}
        for comp, n_edges in components:
            local = {v: i for i, v in enumerate(comp)}
            edges = [(local[u], local[v]) for u, v in g.edges if u in local]
            jobs = [(q, weights, len(comp), edges, first) for first in range(q)]
            if threads > 1 and len(jobs) > 1:
                with Pool(processes=min(threads, len(jobs))) as pool:
                    shards = pool.map(_enumerate_shard, jobs)
            else:
                shards = [_enumerate_shard(job) for job in jobs]
            merged: Counter = Counter()
            for shard in shards:
                merged.update(shard)
            scale = den ** n_edges
            local_map = {Fraction(x, scale): c for x, c in merged.items()}

            product_map: dict[Fraction, int] = {}
            for x1, c1 in combined.items():
                for x2, c2 in local_map.items():
                    key = x1 * x2
                    product_map[key] = product_map.get(key, 0) + c1 * c2
            combined = product_map
        log.debug("count map over %d components, %d values", len(components), len(combined))
        return CountMap(combined)

    @staticmethod
    def z_from_counts(c: CountMap) -> Fraction:
        """Z = somme des x . #(x)."""
        return sum((x * n for x, n in c.items()), Fraction(0))


partition_service = PartitionService()
