import itertools

import pytest

from core.exceptions import InvalidRotationError, NonPlanarEmbeddingError, NonPlanarError, ParseError
from models.graph import Multigraph, RotationSystem
from services.multigraph_service import multigraph_service
from tests.conftest import CORPUS, complete, complete_bipartite, cube, cycle, grid, path


def _darts_covered_once(g, faces):
    darts = [d for face in faces for d in face]
    return sorted(darts) == sorted(g.darts())


# =============================================================================
# PARSING
# =============================================================================

def test_parse_single_edge():
    g = multigraph_service.parse_graph("2 1\n0 1\n")
    assert g.n_vertices == 2
    assert g.edges == ((0, 1),)


def test_parse_loop_and_parallel_edges():
    loop = multigraph_service.parse_graph("1 1\n0 0")
    assert loop.edges == ((0, 0),)
    thetas = multigraph_service.parse_graph("2 3\n0 1\n0 1\n0 1")
    assert thetas.edges == ((0, 1),) * 3


def test_parse_keeps_edge_order():
    g = multigraph_service.parse_graph("3 3\n2 1\n0 2\n1 0")
    assert g.edges == ((2, 1), (0, 2), (1, 0))


@pytest.mark.parametrize("text", [
    "",
    "2\n0 1",
    "2 1\n0 2",
    "2 2\n0 1",
    "2 1\n0 x",
    "2 1\n0 1 1",
])
def test_parse_rejects_malformed(text):
    with pytest.raises(ParseError):
        multigraph_service.parse_graph(text)


def test_rotation_section_is_validated():
    from repositories.graph_repository import graph_repository

    g, rot = graph_repository.parse_document("3 3\n0 1\n1 2\n2 0\nrotation\n0:0 2:1\n0:1 1:0\n1:1 2:0\n")
    assert rot.rotation[0] == ((0, 0), (2, 1))
    assert len(multigraph_service.faces(g, rot)) == 2

    with pytest.raises(InvalidRotationError):
        graph_repository.parse_document("2 1\n0 1\nrotation\n0:1\n0:0\n")
    with pytest.raises(InvalidRotationError):
        graph_repository.parse_document("2 1\n0 1\nrotation\n0:0\n\n")
    with pytest.raises(ParseError):
        graph_repository.parse_document("2 1\n0 1\nrotation\n0-0\n0:1\n")


def test_serialize_then_parse_is_identity():
    g = Multigraph.from_edges(4, [(0, 1), (1, 1), (1, 2), (1, 2), (3, 0)])
    rot = multigraph_service.planar_embed(g)
    from repositories.graph_repository import graph_repository

    parsed, parsed_rot = graph_repository.parse_document(multigraph_service.serialize(g, rot))
    assert parsed == g
    assert parsed_rot == rot


# =============================================================================
# CONNEXITÉ
# =============================================================================

def test_connected_components():
    assert multigraph_service.connected_components(Multigraph(3)) == [(0,), (1,), (2,)]
    assert multigraph_service.connected_components(cycle(3)) == [(0, 1, 2)]
    union = cycle(3).disjoint_union(path(2))
    assert [len(c) for c in multigraph_service.connected_components(union)] == [3, 2]


def test_component_edge_counts_include_loops():
    g = Multigraph.from_edges(4, [(0, 1), (1, 1), (2, 3)])
    assert multigraph_service.component_edge_counts(g) == [((0, 1), 2), ((2, 3), 1)]


# =============================================================================
# PLANARITÉ ET FACES
# =============================================================================

@pytest.mark.parametrize("g, n_faces", [
    (complete(4), 4),
    (cube(), 6),
    (grid(3, 3), 5),
    (cycle(3), 2),
    (path(2), 1),
    (Multigraph.from_edges(2, [(0, 1)] * 3), 3),
    (Multigraph.from_edges(1, [(0, 0)]), 2),
])
def test_planar_embed_face_count(g, n_faces):
    rot = multigraph_service.planar_embed(g)
    faces = multigraph_service.euler_check(g, rot)
    assert len(faces) == n_faces
    assert _darts_covered_once(g, faces)


@pytest.mark.parametrize("g", [complete(5), complete_bipartite(3, 3)])
def test_non_planar_graphs_are_rejected(g):
    with pytest.raises(NonPlanarError) as info:
        multigraph_service.planar_embed(g)
    assert info.value.witness
    assert all(0 <= e < g.edge_count for e in info.value.witness)


def test_non_planar_with_parallel_edges_and_loops():
    g = Multigraph(5, complete(5).edges + ((0, 1), (2, 2)))
    with pytest.raises(NonPlanarError):
        multigraph_service.planar_embed(g)


def test_euler_check_rejects_a_toroidal_rotation():
    g = complete_bipartite(3, 3)
    rot = RotationSystem(tuple(tuple(ring) for ring in g.incident_darts()))
    with pytest.raises(NonPlanarEmbeddingError):
        multigraph_service.euler_check(g, rot)


def test_faces_reject_invalid_rotation():
    g = cycle(3)
    bad = RotationSystem((((0, 0), (2, 1)), ((0, 1),), ((1, 1), (2, 0))))
    with pytest.raises(InvalidRotationError):
        multigraph_service.faces(g, bad)


def test_euler_check_per_component():
    g = cycle(3).disjoint_union(cycle(4)).disjoint_union(Multigraph(1))
    faces = multigraph_service.euler_check(g, multigraph_service.planar_embed(g))
    assert len(faces) == 4


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_corpus_embeddings(name):
    g = CORPUS[name]
    faces = multigraph_service.euler_check(g, multigraph_service.planar_embed(g))
    assert _darts_covered_once(g, faces)


def test_all_five_vertex_graphs():
    pairs = list(itertools.combinations(range(5), 2))
    for mask in range(1 << len(pairs)):
        g = Multigraph.from_edges(5, [p for k, p in enumerate(pairs) if mask >> k & 1])
        if g.edge_count == 10:
            with pytest.raises(NonPlanarError):
                multigraph_service.planar_embed(g)
            continue
        faces = multigraph_service.euler_check(g, multigraph_service.planar_embed(g))
        assert _darts_covered_once(g, faces)
