"""
Service d'évaluation des cas traitables : dispatch sur le certificat de
classification (produit tensoriel, somme directe, feuilles 2x2).
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Optional

from core.exceptions import (
    CertificateMismatchError,
    ConsistencyError,
    DimensionError,
    DomainError,
    NonPlanarError,
)
from models.enums import EvalMethod, TwoByTwoCase
from models.graph import Multigraph, RotationSystem
from models.matrix import SymMatrix
from models.verdict import (
    BipartiteTensor,
    DirectSum,
    Scalar,
    TensorFactorization,
    TwoByTwo,
    Verdict,
)
from services.dichotomy_service import dichotomy_service
from services.ising_service import ising_service
from services.multigraph_service import multigraph_service
from services.partition_service import partition_service

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class QuadraticSurd:
    """p + q.sqrt(r) dans Q(sqrt(r))."""
    p: Fraction
    q: Fraction
    r: Fraction

    def __add__(self, other: "QuadraticSurd") -> "QuadraticSurd":
        return QuadraticSurd(self.p + other.p, self.q + other.q, self.r)

    def __mul__(self, other: "QuadraticSurd") -> "QuadraticSurd":
        return QuadraticSurd(
            self.p * other.p + self.q * other.q * self.r,
            self.p * other.q + self.q * other.p,
            self.r,
        )

    def __pow__(self, n: int) -> "QuadraticSurd":
        result = QuadraticSurd(Fraction(1), Fraction(0), self.r)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result


class TractableService:
    """Évaluation polynomiale de Z_M(G) guidée par un verdict Tractable."""

    def eval_tractable(self, m: SymMatrix, g: Multigraph, verdict: Verdict,
                       rot: Optional[RotationSystem] = None) -> Fraction:
        if not verdict.is_tractable or not dichotomy_service.validate_certificate(m, verdict):
            raise CertificateMismatchError("certificate does not validate against the matrix")
        if rot is None:
            rot = multigraph_service.planar_embed(g)
        else:
            multigraph_service.euler_check(g, rot)
        return self._evaluate(m, g, verdict, rot)

    def _evaluate(self, m: SymMatrix, g: Multigraph, verdict: Verdict,
                  rot: Optional[RotationSystem]) -> Fraction:
        cert = verdict.certificate
        if isinstance(cert, Scalar):
            return m.entries[0][0] ** g.edge_count
        if isinstance(cert, TwoByTwo):
            return self._two_by_two(m, g, cert.case, rot)
        if isinstance(cert, TensorFactorization):
            return (ising_service.ising_fkt(g, cert.a.entries[0][0], cert.a.entries[0][1], rot)
                    * ising_service.ising_fkt(g, cert.b.entries[0][0], cert.b.entries[0][1], rot))
        if isinstance(cert, BipartiteTensor):
            return (ising_service.ising_fkt(g, Fraction(0), Fraction(1), rot)
                    * ising_service.ising_fkt(g, cert.a.entries[0][0], cert.a.entries[0][1], rot))
        if isinstance(cert, DirectSum):
            return self._direct_sum(m, g, cert)
        raise CertificateMismatchError(f"no evaluator for certificate {type(cert).__name__}")

    def _direct_sum(self, m: SymMatrix, g: Multigraph, cert: DirectSum) -> Fraction:
        """Sur chaque composante connexe, Σ des blocs ; produit sur les composantes."""
        total = Fraction(1)
        for comp in multigraph_service.connected_components(g):
            sub_graph = g.induced(comp)
            total *= sum(
                (self._evaluate(m.submatrix(part), sub_graph, sub, None)
                 for part, sub in zip(cert.partition, cert.verdicts)),
                Fraction(0),
            )
        return total

    def _two_by_two(self, m: SymMatrix, g: Multigraph, case: TwoByTwoCase,
                    rot: Optional[RotationSystem]) -> Fraction:
        x, y, z = m.entries[0][0], m.entries[0][1], m.entries[1][1]
        if case == TwoByTwoCase.EQUAL_DIAGONAL:
            return ising_service.ising_fkt(g, x, y, rot)
        if case == TwoByTwoCase.Y_ZERO:
            return prod(
                (x ** edges + z ** edges for _, edges in multigraph_service.component_edge_counts(g)),
                start=Fraction(1),
            )
        return self._rank_one(x, y, z, g)

    @staticmethod
    def _rank_one(x: Fraction, y: Fraction, z: Fraction, g: Multigraph) -> Fraction:
        """M_ij = u_i u_j : Z = Π_v Σ_i u_i^deg(v), calculé dans Q(sqrt(x))."""
        zero = Fraction(0)
        if x != 0:
            u = (QuadraticSurd(zero, Fraction(1), x), QuadraticSurd(zero, y / x, x))
        else:
            u = (QuadraticSurd(zero, zero, z), QuadraticSurd(zero, Fraction(1), z))
        total = QuadraticSurd(Fraction(1), zero, u[0].r)
        for d in g.degrees():
            total = total * (u[0] ** d + u[1] ** d)
        if total.q != 0 and total.r != 0:
            raise ConsistencyError(f"rank-one total has irrational part {total.q}")
        return total.p

    # =========================================================================
    # DISPATCH
    # =========================================================================

    def evaluate(self, m: SymMatrix, g: Multigraph, method: EvalMethod = EvalMethod.AUTO,
                 budget: Optional[int] = None, rot: Optional[RotationSystem] = None) -> Fraction:
        """brute, tractable, ou auto : classification puis repli sur la force brute."""
        method = EvalMethod(method)
        if method == EvalMethod.BRUTE:
            return partition_service.z_brute(m, g, budget)
        if method == EvalMethod.TRACTABLE:
            return self.eval_tractable(m, g, dichotomy_service.classify(m), rot)
        try:
            verdict = dichotomy_service.classify(m)
        except (DimensionError, DomainError) as exc:
            log.info("classification unavailable (%s), using brute force", exc)
            return partition_service.z_brute(m, g, budget)
        if not verdict.is_tractable:
            log.info("matrix is %s, using brute force", verdict.outcome.value)
            return partition_service.z_brute(m, g, budget)
        try:
            return self.eval_tractable(m, g, verdict, rot)
        except NonPlanarError:
            log.info("graph is not planar, using brute force")
            return partition_service.z_brute(m, g, budget)


tractable_service = TractableService()
