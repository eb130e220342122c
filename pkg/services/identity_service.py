"""
Identités fermées servant d'ancres numériques aux réductions de difficulté :
polynôme du pont spécial et défaut xi des sondes K D K^T.
"""
import logging
from fractions import Fraction

from models.gadget import GadgetKind
from models.matrix import SymMatrix
from services.gadget_service import gadget_service
from services.matrix_service import matrix_service

log = logging.getLogger(__name__)

#: Coefficients de f, de x^36 à x^4
SPECIAL_BRIDGE_COEFFS = (
    1, 8, 20, 8, -32, -40, -100, -296, -84, 840, 1204, 72, -1440, -2088, -1124,
    1496, 3110, 1496, -1124, -2088, -1440, 72, 1204, 840, -84, -296, -100, -40,
    -32, 8, 20, 8, 1,
)
SPECIAL_BRIDGE_TOP_DEGREE = 36


class IdentityService:
    """Calcul direct et forme fermée de chaque identité."""

    # =========================================================================
    # PONT SPÉCIAL
    # =========================================================================

    @staticmethod
    def special_polynomial(x: Fraction) -> Fraction:
        x = Fraction(x)
        return sum(
            (c * x ** (SPECIAL_BRIDGE_TOP_DEGREE - k) for k, c in enumerate(SPECIAL_BRIDGE_COEFFS)),
            Fraction(0),
        )

    @staticmethod
    def special_matrix(p: Fraction, q: Fraction) -> SymMatrix:
        p, q = Fraction(p), Fraction(q)
        a, b, c = p * p, p * q, q * q
        return SymMatrix.from_rows([[a, b, b, c], [b, c, a, b], [b, a, c, b], [c, b, b, a]])

    def special_bridge_det(self, p: Fraction, q: Fraction, n: int) -> Fraction:
        """det(Bridge(Thicken(n)(M))) calculé par gadgets."""
        thick = gadget_service.gadget_matrix(GadgetKind.thicken(n), self.special_matrix(p, q))
        return matrix_service.determinant(gadget_service.gadget_matrix(GadgetKind.bridge(), thick))

    def special_bridge_expected(self, p: Fraction, q: Fraction, n: int) -> Fraction:
        p, q = Fraction(p), Fraction(q)
        return q ** (40 * n) * self.special_polynomial((p / q) ** n)

    # =========================================================================
    # SONDES K D K^T
    # =========================================================================

    @staticmethod
    def xi(n: SymMatrix) -> Fraction:
        """N00 N03 - N01 N02."""
        n.require_dimension(4)
        e = n.entries
        return e[0][0] * e[0][3] - e[0][1] * e[0][2]

    @staticmethod
    def probe(m: SymMatrix, kappa: Fraction, n: int) -> SymMatrix:
        """(Thicken(2)((4 / kappa^n) M^n))^2."""
        scaled = matrix_service.power(m, n).scaled(Fraction(4) / Fraction(kappa) ** n)
        thick = gadget_service.gadget_matrix(GadgetKind.thicken(2), scaled)
        return matrix_service.multiply(thick, thick)

    @staticmethod
    def equal_pair_matrix(x: Fraction, kappa: Fraction = Fraction(4)) -> SymMatrix:
        """D = kappa diag(1, x, x, -x^2)."""
        x = Fraction(x)
        return matrix_service.make_kdk(kappa, x, x, -x * x)

    @staticmethod
    def equal_pair_expected(x: Fraction, n: int) -> Fraction:
        x = Fraction(x)
        return -1024 * x ** (4 * n) * (1 - x ** (2 * n)) ** 4

    @staticmethod
    def distinct_pair_matrix(x: Fraction, y: Fraction, kappa: Fraction = Fraction(4)) -> SymMatrix:
        """D = kappa diag(1, x, y, -xy)."""
        x, y = Fraction(x), Fraction(y)
        return matrix_service.make_kdk(kappa, x, y, -x * y)

    @staticmethod
    def distinct_pair_expected(x: Fraction, y: Fraction, n: int) -> Fraction:
        x, y = Fraction(x), Fraction(y)
        big_x, big_y = x ** (2 * n), y ** (2 * n)
        return -1024 * big_x * big_y * (1 - big_x) ** 2 * (1 - big_y) ** 2


identity_service = IdentityService()
