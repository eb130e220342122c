import random
from fractions import Fraction

import pytest

from core.exceptions import BudgetExceededError, DegenerateNodeError, DimensionMismatchError, DuplicateNodeError
from models.counting import CountMap
from models.matrix import SymMatrix
from services.gadget_service import gadget_service
from services.interpolation_service import interpolation_service
from services.matrix_service import matrix_service
from services.partition_service import partition_service
from tests.conftest import CORPUS, cycle, path

M123 = SymMatrix.from_rows([[1, 2], [2, 3]])


# =============================================================================
# ENSEMBLE DE VALEURS
# =============================================================================

def test_enumerate_X_examples():
    assert interpolation_service.enumerate_X(M123, 1).values == (1, 2, 3)
    assert interpolation_service.enumerate_X(M123, 2).values == (1, 2, 3, 4, 6, 9)
    fives = SymMatrix.from_rows([[5, 5], [5, 5]])
    assert interpolation_service.enumerate_X(fives, 3).values == (125,)


def test_enumerate_X_representations():
    value_set = interpolation_service.enumerate_X(M123, 2)
    assert value_set.entries == (1, 2, 3)
    k = value_set.representation(Fraction(6))
    assert sum(k) == 2
    assert 2 ** k[1] * 3 ** k[2] == 6


def test_enumerate_X_budget():
    m = SymMatrix.from_rows([[1, 2, 3], [2, 4, 5], [3, 5, 6]])
    with pytest.raises(BudgetExceededError):
        interpolation_service.enumerate_X(m, 10, budget=100)


# =============================================================================
# VANDERMONDE
# =============================================================================

def test_vandermonde_solve_examples():
    assert interpolation_service.vandermonde_solve([1, 2], [5, 9]) == [1, 2]
    assert interpolation_service.vandermonde_solve([1, 2, 3], [6, 14, 36]) == [1, 1, 1]


def test_vandermonde_solve_errors():
    with pytest.raises(DuplicateNodeError):
        interpolation_service.vandermonde_solve([2, 2], [1, 1])
    with pytest.raises(DegenerateNodeError):
        interpolation_service.vandermonde_solve([0, 1], [1, 1])
    with pytest.raises(DimensionMismatchError):
        interpolation_service.vandermonde_solve([1, 2], [1])


def test_vandermonde_solve_reproduces_targets():
    rng = random.Random(21)
    for size in range(1, 8):
        nodes = set()
        while len(nodes) < size:
            value = Fraction(rng.randint(-20, 20), rng.randint(1, 6))
            if value:
                nodes.add(value)
        nodes = sorted(nodes)
        targets = [Fraction(rng.randint(-50, 50), rng.randint(1, 4)) for _ in range(size)]
        c = interpolation_service.vandermonde_solve(nodes, targets)
        for n in range(1, size + 1):
            assert sum(cs * x ** n for cs, x in zip(c, nodes)) == targets[n - 1]


# =============================================================================
# RECONSTRUCTION DES COMPTES
# =============================================================================

def test_recover_counts_examples():
    assert interpolation_service.recover_counts(M123, path(2)) == CountMap({1: 1, 2: 2, 3: 1})
    assert interpolation_service.recover_counts(matrix_service.potts(2, 0), path(2)) == CountMap({0: 2, 1: 2})
    assert interpolation_service.recover_counts(M123, cycle(3)) == CountMap({1: 1, 4: 3, 12: 3, 27: 1})


@pytest.mark.parametrize("name", ["C4", "diamond", "edge+loop", "theta4", "star4", "P6"])
def test_recover_counts_matches_enumeration(name):
    g = CORPUS[name]
    m = SymMatrix.from_rows([[0, 2, Fraction(1, 2)], [2, 1, 3], [Fraction(1, 2), 3, 2]])
    assert interpolation_service.recover_counts(m, g) == partition_service.count_map(m, g)


# =============================================================================
# TRANSPORT
# =============================================================================

def test_transport_eval_examples():
    _, n, form = gadget_service.normalize_cM(SymMatrix.from_rows([[1, 2], [2, 8]]))
    edge = path(2)
    counts = partition_service.count_map(n, edge)
    values = interpolation_service.enumerate_X(n, edge.edge_count)
    assert interpolation_service.transport_eval(form, counts, values, [2]) == 13
    assert interpolation_service.transport_eval(form, counts, values, [3]) == 34
    assert interpolation_service.transport_eval(form, counts, values, [1]) == 4


def test_transport_eval_matches_substituted_matrix():
    rng = random.Random(33)
    m = SymMatrix.from_rows([[Fraction(1, 2), 3], [3, Fraction(-4, 3)]])
    _, n, form = gadget_service.normalize_cM(m)
    g = CORPUS["house"]
    counts = interpolation_service.recover_counts(n, g)
    values = interpolation_service.enumerate_X(n, g.edge_count)
    for _ in range(10):
        p = [Fraction(rng.randint(-7, 7), rng.randint(1, 5)) for _ in form.generators]
        expected = partition_service.z_brute(gadget_service.t_general(form, p), g)
        assert interpolation_service.transport_eval(form, counts, values, p) == expected
