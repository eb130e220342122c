import itertools
from fractions import Fraction

import pytest

from core.exceptions import DegreeBudgetError, DimensionMismatchError, DomainError, NotSymmetricError
from models.matrix import SymMatrix
from services.lattice_service import lattice_service
from services.matrix_service import matrix_service
from services.symmetric_service import elementary_ring, lambda_ring, symmetric_service

FORM_VI_7333 = SymMatrix.from_rows([[4, 1, 1, 1], [1, 4, 1, 1], [1, 1, 4, 1], [1, 1, 1, 4]])


def _zero_sum_vectors(bound):
    for x in itertools.product(range(-bound, bound + 1), repeat=4):
        if sum(x) == 0 and any(x) and sum(v for v in x if v > 0) <= bound:
            yield x


# =============================================================================
# RÉDUCTION SYMÉTRIQUE
# =============================================================================

def test_symmetric_reduce_examples():
    l1, l2, l3, l4 = lambda_ring(4).gens
    e1, e2, _, _ = elementary_ring(4).gens
    assert symmetric_service.symmetric_reduce(l1 + l2 + l3 + l4) == e1
    assert symmetric_service.symmetric_reduce(l1 ** 2 + l2 ** 2 + l3 ** 2 + l4 ** 2) == e1 ** 2 - 2 * e2
    assert symmetric_service.symmetric_reduce(symmetric_service.elementary(4, 2)) == e2


def test_symmetric_reduce_power_sums_three_variables():
    l1, l2, l3 = lambda_ring(3).gens
    e1, e2, e3 = elementary_ring(3).gens
    p3 = l1 ** 3 + l2 ** 3 + l3 ** 3
    assert symmetric_service.symmetric_reduce(p3) == e1 ** 3 - 3 * e1 * e2 + 3 * e3


def test_symmetric_reduce_rejects_non_symmetric():
    l1, l2, _ = lambda_ring(3).gens
    with pytest.raises(NotSymmetricError):
        symmetric_service.symmetric_reduce(l1 ** 2 + l2)


def test_symmetric_reduce_evaluation_agrees():
    values = [Fraction(2), Fraction(-1, 3), Fraction(5), Fraction(1, 2)]
    p = symmetric_service.Phi_poly((1, -1, 0, 0))
    reduced = symmetric_service.symmetric_reduce(p)
    e = [symmetric_service.evaluate(symmetric_service.elementary(4, k), values) for k in range(1, 5)]
    assert symmetric_service.evaluate(reduced, e) == symmetric_service.evaluate(p, values)


def test_Phi_poly_matches_numeric_product():
    alpha = [3, 1, 4, 2]
    for x in [(1, -1, 0, 0), (2, -1, -1, 0), (1, 1, -1, -1)]:
        assert symmetric_service.evaluate(symmetric_service.Phi_poly(x), alpha) == lattice_service.Phi_x(x, alpha)


# =============================================================================
# Psi_x
# =============================================================================

def test_psi_x_examples():
    assert symmetric_service.psi_x((1, -1, 0, 0), matrix_service.diagonal([1, 2, 3, 4])) == 20736
    assert symmetric_service.psi_x((1, -1, 0, 0), FORM_VI_7333) == 0
    a = SymMatrix.from_rows([[2, 1], [1, 3]])
    b = SymMatrix.from_rows([[5, -1], [-1, 1]])
    assert symmetric_service.psi_x((1, 1, -1, -1), matrix_service.kron(a, b)) == 0


def test_psi_x_errors():
    m = matrix_service.diagonal([1, 2, 3, 4])
    with pytest.raises(DimensionMismatchError):
        symmetric_service.psi_x((1, -1), m)
    with pytest.raises(DomainError):
        symmetric_service.psi_x((1, 0, 0, 0), m)
    with pytest.raises(DegreeBudgetError):
        symmetric_service.psi_x((5, -5, 0, 0), m)
    with pytest.raises(DegreeBudgetError):
        symmetric_service.psi_x((2, -2, 0, 0), m, degree_budget=1)


def test_psi_x_sign_of_mirrored_vector():
    m = SymMatrix.from_rows([[3, 1, 0, 0], [1, 2, 1, 0], [0, 1, 5, 2], [0, 0, 2, 1]])
    for x in [(2, -1, -1, 0), (1, 1, 1, -3)]:
        mirrored = tuple(-v for v in x)
        assert symmetric_service.psi_x(mirrored, m) == symmetric_service.psi_x(x, m)


@pytest.mark.parametrize("m", [
    matrix_service.diagonal([1, 2, 3, 6]),
    SymMatrix.from_rows([[5, 1, 2, 3], [1, 5, 3, 2], [2, 3, 5, 1], [3, 2, 1, 5]]),
    SymMatrix.from_rows([[10, 4, 3, 1], [4, 10, 1, 3], [3, 1, 7, 1], [1, 3, 1, 7]]),
], ids=["diag1236", "formVI", "formIII"])
def test_psi_x_equals_Phi_x_on_rational_spectrum(m):
    spectrum = matrix_service.rational_spectrum(m)
    assert spectrum is not None
    for x in [(1, -1, 0, 0), (1, 1, -1, -1), (2, -1, -1, 0)]:
        assert symmetric_service.psi_x(x, m) == lattice_service.Phi_x(x, spectrum)


def test_psi_x_is_homogeneous():
    m = SymMatrix.from_rows([[3, 1, 0, 1], [1, 2, 1, 0], [0, 1, 4, 1], [1, 0, 1, 1]])
    c = Fraction(3, 2)
    x = (1, -1, 0, 0)
    assert symmetric_service.psi_x(x, m.scaled(c)) == c ** 24 * symmetric_service.psi_x(x, m)


@pytest.mark.parametrize("spectrum", [[1, 2, 3, 6], [7, 3, 3, 3], [11, 5, 3, 1], [4, 2, 2, 1]])
def test_psi_x_vanishes_exactly_on_lattice_closure(spectrum):
    m = matrix_service.diagonal(spectrum)
    for x in _zero_sum_vectors(2):
        assert (symmetric_service.psi_x(x, m) == 0) == lattice_service.in_lattice_bar(x, spectrum)


@pytest.mark.slow
def test_psi_x_degree_three():
    m = matrix_service.diagonal([1, 2, 4, 8])
    assert symmetric_service.psi_x((2, -1, -1, 0), m) == 0
    assert symmetric_service.psi_x((3, -1, -1, -1), m) == lattice_service.Phi_x((3, -1, -1, -1), [1, 2, 4, 8])
    x = (2, 1, -1, -2)
    assert symmetric_service.psi_x(x, m) == lattice_service.Phi_x(x, [1, 2, 4, 8]) != 0
