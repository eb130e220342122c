"""
Fixtures partagées : corpus de graphes planaires et matrices de référence.
"""
import itertools

import pytest

from models.graph import Multigraph
from models.matrix import SymMatrix


# =============================================================================
# CONSTRUCTEURS DE GRAPHES
# =============================================================================

def path(n: int) -> Multigraph:
    return Multigraph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Multigraph:
    return Multigraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Multigraph:
    return Multigraph.from_edges(n, itertools.combinations(range(n), 2))


def star(leaves: int) -> Multigraph:
    return Multigraph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def wheel(rim: int) -> Multigraph:
    edges = [(0, i) for i in range(1, rim + 1)]
    edges += [(i, i % rim + 1) for i in range(1, rim + 1)]
    return Multigraph.from_edges(rim + 1, edges)


def grid(rows: int, cols: int) -> Multigraph:
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                edges.append((v, v + 1))
            if r + 1 < rows:
                edges.append((v, v + cols))
    return Multigraph.from_edges(rows * cols, edges)


def cube() -> Multigraph:
    edges = [(u, u ^ (1 << k)) for u in range(8) for k in range(3) if u < u ^ (1 << k)]
    return Multigraph.from_edges(8, edges)


def theta(k: int = 3) -> Multigraph:
    return Multigraph.from_edges(2, [(0, 1)] * k)


def complete_bipartite(a: int, b: int) -> Multigraph:
    return Multigraph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def prism() -> Multigraph:
    return Multigraph.from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)])


def octahedron() -> Multigraph:
    opposite = {0: 1, 1: 0, 2: 3, 3: 2, 4: 5, 5: 4}
    return Multigraph.from_edges(6, [(u, v) for u, v in itertools.combinations(range(6), 2) if opposite[u] != v])


def with_edges(g: Multigraph, extra) -> Multigraph:
    return Multigraph(g.n_vertices, g.edges + tuple(extra))


def planar_corpus() -> dict[str, Multigraph]:
    """Graphes planaires connexes d'au plus 9 sommets, multigraphes compris."""
    corpus = {
        "edge": path(2),
        "P3": path(3),
        "P4": path(4),
        "P6": path(6),
        "C3": cycle(3),
        "C4": cycle(4),
        "C5": cycle(5),
        "C8": cycle(8),
        "K4": complete(4),
        "star4": star(4),
        "wheel4": wheel(4),
        "wheel5": wheel(5),
        "wheel6": wheel(6),
        "grid2x3": grid(2, 3),
        "grid3x3": grid(3, 3),
        "cube": cube(),
        "prism": prism(),
        "octahedron": octahedron(),
        "K2,3": complete_bipartite(2, 3),
        "K2,4": complete_bipartite(2, 4),
        "theta3": theta(3),
        "theta4": theta(4),
        "digon": theta(2),
        "loop": Multigraph.from_edges(1, [(0, 0)]),
        "two loops": Multigraph.from_edges(1, [(0, 0), (0, 0)]),
        "edge+loop": Multigraph.from_edges(2, [(0, 1), (1, 1)]),
        "C3+loop": with_edges(cycle(3), [(0, 0)]),
        "C4+loops": with_edges(cycle(4), [(1, 1), (3, 3)]),
        "C3 doubled edge": with_edges(cycle(3), [(0, 1)]),
        "C4 tripled edge": with_edges(cycle(4), [(2, 3), (3, 2)]),
        "K4 doubled": with_edges(complete(4), [(0, 1), (2, 3)]),
        "K4+pendant": with_edges(Multigraph(5, complete(4).edges), [(3, 4)]),
        "bowtie": Multigraph.from_edges(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]),
        "house": Multigraph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (2, 4), (3, 4)]),
        "diamond": Multigraph.from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]),
        "triangles chain": Multigraph.from_edges(
            7, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2), (4, 5), (5, 6), (6, 4)]),
        "tree": Multigraph.from_edges(7, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (2, 6)]),
        "grid2x4": grid(2, 4),
        "wheel8": wheel(8),
        "multi wheel": with_edges(wheel(4), [(0, 1), (1, 2), (0, 0)]),
        "parallel path": Multigraph.from_edges(4, [(0, 1), (0, 1), (1, 2), (2, 3), (2, 3), (2, 3)]),
        "single vertex": Multigraph(1),
    }
    return corpus


CORPUS = planar_corpus()


# =============================================================================
# FIXTURES
# =============================================================================

@pytest.fixture
def triangle() -> Multigraph:
    return cycle(3)


@pytest.fixture
def single_edge() -> Multigraph:
    return path(2)


@pytest.fixture
def corpus() -> dict[str, Multigraph]:
    return CORPUS


@pytest.fixture
def ising_tensor() -> SymMatrix:
    """[[2,1],[1,2]] (x) [[3,1],[1,3]]."""
    return SymMatrix.from_rows([
        [6, 2, 3, 1],
        [2, 6, 1, 3],
        [3, 1, 6, 2],
        [1, 3, 2, 6],
    ])


@pytest.fixture
def form_vi() -> SymMatrix:
    return SymMatrix.from_rows([[5, 1, 2, 3], [1, 5, 3, 2], [2, 3, 5, 1], [3, 2, 1, 5]])
