from fractions import Fraction

import pytest

from core.exceptions import DimensionError
from models.matrix import SymMatrix
from services.identity_service import SPECIAL_BRIDGE_COEFFS, SPECIAL_BRIDGE_TOP_DEGREE, identity_service
from services.matrix_service import matrix_service


# =============================================================================
# PONT SPÉCIAL
# =============================================================================

def test_special_polynomial_shape():
    assert len(SPECIAL_BRIDGE_COEFFS) == 33
    assert SPECIAL_BRIDGE_TOP_DEGREE - (len(SPECIAL_BRIDGE_COEFFS) - 1) == 4
    assert SPECIAL_BRIDGE_COEFFS == tuple(reversed(SPECIAL_BRIDGE_COEFFS))
    assert sum(SPECIAL_BRIDGE_COEFFS) == 0
    assert identity_service.special_polynomial(1) == 0
    assert identity_service.special_polynomial(0) == 0


def test_special_matrix_pattern():
    m = identity_service.special_matrix(2, 1)
    assert m == SymMatrix.from_rows([[4, 2, 2, 1], [2, 1, 4, 2], [2, 4, 1, 2], [1, 2, 2, 4]])


@pytest.mark.parametrize("p, q", [(2, 1), (3, 2)])
@pytest.mark.parametrize("n", [1, 2])
def test_special_bridge_determinant(p, q, n):
    assert identity_service.special_bridge_det(p, q, n) == identity_service.special_bridge_expected(p, q, n)


def test_special_bridge_determinant_rational_parameters():
    p, q = Fraction(1, 2), Fraction(5, 3)
    assert identity_service.special_bridge_det(p, q, 1) == identity_service.special_bridge_expected(p, q, 1)


# =============================================================================
# SONDES K D K^T
# =============================================================================

def test_xi():
    m = SymMatrix.from_rows([[1, 2, 3, 4], [2, 5, 6, 7], [3, 6, 8, 9], [4, 7, 9, 10]])
    assert identity_service.xi(m) == 1 * 4 - 2 * 3
    with pytest.raises(DimensionError):
        identity_service.xi(SymMatrix.from_rows([[1, 0], [0, 1]]))


def test_equal_pair_matrix_entries():
    m = identity_service.equal_pair_matrix(Fraction(1, 4))
    assert m[0, 0] == Fraction(23, 16)
    assert m[0, 1] == m[0, 2] == Fraction(17, 16)
    assert m[0, 3] == Fraction(7, 16)


@pytest.mark.parametrize("n", [1, 3])
def test_equal_pair_probe(n):
    x = Fraction(1, 4)
    m = identity_service.equal_pair_matrix(x)
    assert identity_service.xi(identity_service.probe(m, 4, n)) == identity_service.equal_pair_expected(x, n)


@pytest.mark.parametrize("n", [1, 3])
def test_distinct_pair_probe(n):
    x, y = Fraction(1, 2), Fraction(1, 3)
    m = identity_service.distinct_pair_matrix(x, y)
    assert identity_service.xi(identity_service.probe(m, 4, n)) == identity_service.distinct_pair_expected(x, y, n)


def test_probe_does_not_depend_on_kappa():
    x, y = Fraction(-2, 5), Fraction(3, 7)
    for kappa in (Fraction(1), Fraction(2), Fraction(9, 2)):
        m = identity_service.distinct_pair_matrix(x, y, kappa)
        assert identity_service.xi(identity_service.probe(m, kappa, 1)) == identity_service.distinct_pair_expected(x, y, 1)


def test_distinct_pair_expected_is_negative_inside_unit_disc():
    assert identity_service.distinct_pair_expected(Fraction(1, 2), Fraction(1, 3), 5) < 0
    assert identity_service.equal_pair_expected(Fraction(1, 2), 1) < 0
    assert matrix_service.rational_spectrum(identity_service.equal_pair_matrix(Fraction(1, 2))) == [
        4, 2, 2, -1,
    ]
