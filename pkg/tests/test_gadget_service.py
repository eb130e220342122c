from fractions import Fraction

import pytest

from core.exceptions import (
    DimensionMismatchError,
    DomainError,
    FactorizationBudgetError,
    NegativeExponentError,
    ParseError,
    UnrepresentableValueError,
)
from models.enums import GadgetName
from models.gadget import GadgetKind
from models.graph import Multigraph
from models.matrix import SymMatrix
from services.gadget_service import gadget_service
from services.matrix_service import matrix_service
from services.multigraph_service import multigraph_service
from services.partition_service import partition_service
from tests.conftest import CORPUS, path

M123 = SymMatrix.from_rows([[1, 2], [2, 3]])
KINDS = [
    GadgetKind.thicken(2), GadgetKind.thicken(3),
    GadgetKind.stretch(2), GadgetKind.stretch(3),
    GadgetKind.mid_thicken(1), GadgetKind.mid_thicken(2), GadgetKind.mid_thicken(3),
    GadgetKind.bridge(),
]


# =============================================================================
# GADGETS
# =============================================================================

def test_gadget_kind_parse():
    assert GadgetKind.parse("thicken:3") == GadgetKind.thicken(3)
    assert GadgetKind.parse("RMID:2") == GadgetKind.mid_thicken(2)
    assert GadgetKind.parse("bridge").name == GadgetName.BRIDGE
    assert str(GadgetKind.stretch(4)) == "stretch:4"


@pytest.mark.parametrize("text", ["bridge:2", "thicken", "spiral:1", "stretch:0", "thicken:-1", "rmid:x"])
def test_gadget_kind_parse_errors(text):
    with pytest.raises(ParseError):
        GadgetKind.parse(text)


def test_gadget_graph_single_edge():
    edge = path(2)
    thick = gadget_service.gadget_graph(GadgetKind.thicken(3), edge)
    assert (thick.n_vertices, thick.edges) == (2, ((0, 1),) * 3)
    stretched = gadget_service.gadget_graph(GadgetKind.stretch(2), edge)
    assert (stretched.n_vertices, stretched.edges) == (3, ((0, 2), (2, 1)))
    mid = gadget_service.gadget_graph(GadgetKind.mid_thicken(2), edge)
    assert (mid.n_vertices, mid.edge_count) == (4, 4)
    assert mid.edges == ((0, 2), (2, 3), (2, 3), (3, 1))
    bridge = gadget_service.gadget_graph(GadgetKind.bridge(), edge)
    assert (bridge.n_vertices, bridge.edge_count) == (4, 5)


def test_gadget_graph_numbers_new_vertices_in_edge_order():
    g = Multigraph.from_edges(2, [(0, 1), (1, 1)])
    stretched = gadget_service.gadget_graph(GadgetKind.stretch(3), g)
    assert stretched.edges == ((0, 2), (2, 3), (3, 1), (1, 4), (4, 5), (5, 1))


def test_gadget_matrix_examples():
    assert gadget_service.gadget_matrix(GadgetKind.thicken(2), M123) == SymMatrix.from_rows([[1, 4], [4, 9]])
    assert gadget_service.gadget_matrix(GadgetKind.mid_thicken(1), M123) == matrix_service.power(M123, 3)
    swap = matrix_service.potts(2, 0)
    assert gadget_service.gadget_matrix(GadgetKind.mid_thicken(1), swap) == swap
    identity = matrix_service.identity(2)
    assert gadget_service.gadget_matrix(GadgetKind.bridge(), identity) == identity


@pytest.mark.parametrize("n, rows", [
    (2, [[53, 84], [84, 133]]),
    (3, [[141, 220], [220, 343]]),
])
def test_mid_thicken_matrix_beyond_single_edge(n, rows):
    assert gadget_service.gadget_matrix(GadgetKind.mid_thicken(n), M123) == SymMatrix.from_rows(rows)


def test_mid_thicken_matrix_on_three_states():
    m = SymMatrix.from_rows([[1, 2, 0], [2, 0, 1], [0, 1, 3]])
    assert gadget_service.gadget_matrix(GadgetKind.mid_thicken(2), m) == SymMatrix.from_rows(
        [[17, 20, 10], [20, 13, 36], [10, 36, 87]]
    )


def test_gadget_matrix_composition():
    m = SymMatrix.from_rows([[1, Fraction(1, 2), 2], [Fraction(1, 2), 3, -1], [2, -1, 0]])
    stretch = lambda n, x: gadget_service.gadget_matrix(GadgetKind.stretch(n), x)
    thicken = lambda n, x: gadget_service.gadget_matrix(GadgetKind.thicken(n), x)
    assert stretch(2, stretch(3, m)) == stretch(6, m)
    assert thicken(2, thicken(3, m)) == thicken(6, m)


@pytest.mark.parametrize("kind", KINDS, ids=str)
def test_gadget_commutation(kind):
    m = SymMatrix.from_rows([[2, Fraction(1, 3), -1], [Fraction(1, 3), 1, 4], [-1, 4, Fraction(-1, 2)]])
    for name in ("C3", "edge+loop", "digon", "P3"):
        g = CORPUS[name]
        assert partition_service.z_brute(m, gadget_service.gadget_graph(kind, g)) == \
            partition_service.z_brute(gadget_service.gadget_matrix(kind, m), g)


@pytest.mark.parametrize("kind", KINDS, ids=str)
def test_gadget_graph_preserves_planarity(kind):
    for name in ("K4", "wheel5", "C4+loops", "theta3"):
        image = gadget_service.gadget_graph(kind, CORPUS[name])
        multigraph_service.euler_check(image, multigraph_service.planar_embed(image))


# =============================================================================
# FORMES GÉNÉRATRICES
# =============================================================================

def test_generating_form_examples():
    form = gadget_service.generating_form(SymMatrix.from_rows([[2, 6], [6, 3]]))
    assert form.generators == (2, 3)
    assert form.exponent_vector(0, 1) == (1, 1)
    assert form.exponent_vector(1, 1) == (0, 1)

    half = gadget_service.generating_form(SymMatrix.from_rows([[Fraction(1, 2), 4], [4, Fraction(1, 2)]]))
    assert half.generators == (2,)
    assert half.exponent_vector(0, 0) == (-1,)
    assert half.exponent_vector(0, 1) == (2,)

    negative = gadget_service.generating_form(SymMatrix.from_rows([[-3]]))
    assert negative.signs == ((1,),)
    assert negative.exponents == (((1,),),)


def test_generating_form_errors():
    with pytest.raises(DomainError):
        gadget_service.generating_form(matrix_service.potts(2, 0))
    with pytest.raises(FactorizationBudgetError):
        gadget_service.generating_form(SymMatrix.from_rows([[101]]), budget=100)


def test_normalize_cM():
    c, n, form = gadget_service.normalize_cM(SymMatrix.from_rows([[Fraction(1, 2), 1], [1, 4]]))
    assert c == 2
    assert n == SymMatrix.from_rows([[1, 2], [2, 8]])
    assert form.exponents == (((0,), (1,)), ((1,), (3,)))

    c, n, _ = gadget_service.normalize_cM(SymMatrix.from_rows([[2, 3], [3, 5]]))
    assert c == 1
    # exposant minimal positif : pas de division
    c, n, form = gadget_service.normalize_cM(SymMatrix.from_rows([[2, 4], [4, 8]]))
    assert (c, n) == (1, SymMatrix.from_rows([[2, 4], [4, 8]]))
    assert form.exponents == (((1,), (2,)), ((2,), (3,)))
    third = Fraction(1, 3)
    c, n, _ = gadget_service.normalize_cM(SymMatrix.from_rows([[third, third], [third, third]]))
    assert c == 3
    assert set(n.values()) == {1}


def test_normalize_cM_scales_z():
    m = SymMatrix.from_rows([[Fraction(1, 2), Fraction(3, 4)], [Fraction(3, 4), 6]])
    c, n, _ = gadget_service.normalize_cM(m)
    g = CORPUS["bowtie"]
    assert partition_service.z_brute(n, g) == c ** g.edge_count * partition_service.z_brute(m, g)


def test_t_general():
    _, n, form = gadget_service.normalize_cM(SymMatrix.from_rows([[1, 2], [2, 8]]))
    assert gadget_service.t_general(form, [3]) == SymMatrix.from_rows([[1, 3], [3, 27]])
    assert gadget_service.t_general(form, [2]) == n
    assert gadget_service.t_general(form, [0]) == SymMatrix.from_rows([[1, 0], [0, 0]])


def test_t_general_reproduces_normalized_matrix():
    m = SymMatrix.from_rows([[Fraction(-1, 6), 4, 9], [4, Fraction(2, 3), -12], [9, -12, 1]])
    _, n, form = gadget_service.normalize_cM(m)
    assert gadget_service.t_general(form, form.generators) == n


def test_t_general_errors():
    form = gadget_service.generating_form(SymMatrix.from_rows([[Fraction(1, 2), 1], [1, 4]]))
    with pytest.raises(NegativeExponentError):
        gadget_service.t_general(form, [3])
    _, _, normalized = gadget_service.normalize_cM(SymMatrix.from_rows([[2, 3], [3, 5]]))
    with pytest.raises(DimensionMismatchError):
        gadget_service.t_general(normalized, [1])


def test_factor_over():
    assert gadget_service.factor_over(Fraction(-12, 5), (2, 3, 5)) == (1, (2, 1, -1))
    with pytest.raises(UnrepresentableValueError):
        gadget_service.factor_over(Fraction(7), (2, 3))
    with pytest.raises(UnrepresentableValueError):
        gadget_service.factor_over(Fraction(0), (2,))
