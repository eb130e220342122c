"""
Service dichotomie : classification des matrices 2x2 et 4x4 symétriques
positives ou nulles de rang plein, avec certificats vérifiables.
"""
import itertools
import logging
from typing import Optional

from core.exceptions import (
    ConsistencyError,
    DimensionError,
    NegativeEntryError,
    PlhomError,
    RankDeficientError,
)
from models.enums import Outcome, TwoByTwoCase
from models.matrix import SymMatrix
from models.verdict import (
    BipartiteTensor,
    DirectSum,
    HardnessWitness,
    Scalar,
    TensorFactorization,
    TwoByTwo,
    UndecidedBlock,
    Verdict,
)
from services.matrix_service import matrix_service

log = logging.getLogger(__name__)

# =============================================================================
# MOTIFS (identifiants stables des théorèmes)
# =============================================================================

REASON_DOMAIN2 = "fullDomain2Hardness"
REASON_NONNEGATIVE = "fullRankNonNegativeDichotomy"
REASON_POSITIVE = "fullRankPositiveDichotomy"
REASON_SEPARABLE = "domainSeparableDichotomy"
REASON_BIPARTITE = "bipartiteDichotomy"
REASON_TENSOR = "tensorTractable"
REASON_POTTS = "tutteHardness-family"
REASON_SCALAR = "scalarBlock"
REASON_DOMAIN3 = "domain3Open"

SWAP = SymMatrix.from_rows([[0, 1], [1, 0]])


def _is_potts_shaped(m: SymMatrix) -> bool:
    diagonal = {m.entries[i][i] for i in range(m.q)}
    off = {m.entries[i][j] for i in range(m.q) for j in range(m.q) if i != j}
    return len(diagonal) == 1 and len(off) <= 1


def _two_by_two_cases(m: SymMatrix) -> list[TwoByTwoCase]:
    """Cas traitables satisfaits, dans l'ordre y = 0, xz = y^2, x = z."""
    x, y, z = m.entries[0][0], m.entries[0][1], m.entries[1][1]
    cases = []
    if y == 0:
        cases.append(TwoByTwoCase.Y_ZERO)
    if x * z == y * y:
        cases.append(TwoByTwoCase.RANK_ONE)
    if x == z:
        cases.append(TwoByTwoCase.EQUAL_DIAGONAL)
    return cases


class DichotomyService:
    """Classification Tractable / Hard / Unknown."""

    # =========================================================================
    # CLASSIFICATION
    # =========================================================================

    @staticmethod
    def _require_nonnegative(m: SymMatrix) -> None:
        if not m.is_nonnegative():
            raise NegativeEntryError("classification is defined for nonnegative matrices only")

    def classify2(self, m: SymMatrix) -> Verdict:
        m.require_dimension(2)
        self._require_nonnegative(m)
        cases = _two_by_two_cases(m)
        if cases:
            return Verdict(Outcome.TRACTABLE, REASON_DOMAIN2, TwoByTwo(cases[0]))
        return Verdict(Outcome.HARD, REASON_DOMAIN2,
                       HardnessWitness(("y != 0", "xz != y^2", "x != z")))

    def _classify_block(self, block: SymMatrix, indices: tuple[int, ...]) -> Verdict:
        if block.q == 1:
            return Verdict(Outcome.TRACTABLE, REASON_SCALAR, Scalar())
        if block.q == 2:
            return self.classify2(block)
        return Verdict(Outcome.UNKNOWN, REASON_DOMAIN3, UndecidedBlock(indices))

    def _classify_direct_sum(self, m: SymMatrix) -> Optional[Verdict]:
        split = matrix_service.direct_sum_decompose(m)
        if split is None:
            return None
        verdicts = tuple(
            self._classify_block(block, part) for part, block in zip(split.partition, split.blocks)
        )
        outcomes = {v.outcome for v in verdicts}
        if Outcome.HARD in outcomes:
            outcome = Outcome.HARD
        elif outcomes == {Outcome.TRACTABLE}:
            outcome = Outcome.TRACTABLE
        else:
            outcome = Outcome.UNKNOWN
        return Verdict(outcome, REASON_SEPARABLE, DirectSum(split.partition, verdicts))

    def _classify_bipartite(self, m: SymMatrix) -> Optional[Verdict]:
        bipartition = matrix_service.bipartite_detect(m)
        if bipartition is None:
            return None
        c = bipartition.block
        if len(bipartition.left) == 2 and c[0][0] == c[1][1] and c[0][1] == c[1][0]:
            a = SymMatrix.from_rows([[c[0][0], c[0][1]], [c[0][1], c[0][0]]])
            sigma = bipartition.left + bipartition.right
            return Verdict(Outcome.TRACTABLE, REASON_BIPARTITE, BipartiteTensor(sigma, a))
        facts = ("bipartite", f"sides {len(bipartition.left)}+{len(bipartition.right)}",
                 "off-diagonal block not cross-equal")
        return Verdict(Outcome.HARD, REASON_BIPARTITE, HardnessWitness(facts))

    def _positive_odd_power(self, m: SymMatrix) -> tuple[int, SymMatrix]:
        """Plus petit n impair avec m^n à entrées strictement positives."""
        power = m
        square = matrix_service.multiply(m, m)
        for n in range(1, 2 * m.q + 2, 2):
            if not power.has_zero():
                return n, power
            power = matrix_service.multiply(power, square)
        raise ConsistencyError("connected non-bipartite support without a positive odd power")

    def _classify_connected(self, m: SymMatrix) -> Verdict:
        n, positive = self._positive_odd_power(m)
        log.debug("tensor search on power %d", n)
        factorable = False
        for sigma in itertools.permutations(range(4)):
            if matrix_service.varrho_tensor(matrix_service.permute(positive, sigma)) != 0:
                continue
            factors = matrix_service.kron_factor(matrix_service.permute(m, sigma))
            if factors is None:
                continue
            factorable = True
            a, b = factors
            if a.entries[0][0] == a.entries[1][1] and b.entries[0][0] == b.entries[1][1]:
                reason = REASON_POSITIVE if n == 1 else REASON_NONNEGATIVE
                return Verdict(Outcome.TRACTABLE, reason, TensorFactorization(sigma, a, b))
        if factorable:
            return Verdict(Outcome.HARD, REASON_TENSOR,
                           HardnessWitness(("tensor product", "unequal diagonal in every factorization")))
        reason = REASON_POSITIVE if n == 1 else REASON_NONNEGATIVE
        return Verdict(Outcome.HARD, reason,
                       HardnessWitness(("connected", "non-bipartite", "no tensor sigma")))

    def classify4(self, m: SymMatrix) -> Verdict:
        m.require_dimension(4)
        self._require_nonnegative(m)
        if matrix_service.determinant(m) == 0:
            raise RankDeficientError("det(M) = 0: outside the full-rank scope")
        verdict = (
            self._classify_direct_sum(m)
            or self._classify_bipartite(m)
            or self._classify_connected(m)
        )
        if verdict.outcome == Outcome.HARD and _is_potts_shaped(m):
            verdict = Verdict(Outcome.HARD, REASON_POTTS, verdict.certificate)
        log.debug("classify4 -> %s (%s)", verdict.outcome.value, verdict.reason)
        return verdict

    def classify(self, m: SymMatrix) -> Verdict:
        if m.q == 2:
            return self.classify2(m)
        if m.q == 4:
            return self.classify4(m)
        raise DimensionError(f"classification covers q = 2 and q = 4, got q = {m.q}")

    # =========================================================================
    # VALIDATION DES CERTIFICATS
    # =========================================================================

    def validate_certificate(self, m: SymMatrix, v: Verdict) -> bool:
        """Vérifie exactement que le certificat prouve la structure annoncée de m."""
        try:
            return self._validate(m, v, top_level=True)
        except PlhomError as exc:
            log.debug("certificate rejected: %s", exc)
            return False

    def _validate(self, m: SymMatrix, v: Verdict, top_level: bool = False) -> bool:
        cert = v.certificate
        if isinstance(cert, DirectSum):
            return self._validate_direct_sum(m, v, cert)
        if v.outcome != Outcome.TRACTABLE:
            reclassified = self.classify(m) if top_level else self._classify_block(m, tuple(range(m.q)))
            return reclassified.outcome == v.outcome and reclassified.reason == v.reason
        if isinstance(cert, Scalar):
            return m.q == 1
        if isinstance(cert, TwoByTwo):
            return m.q == 2 and cert.case in _two_by_two_cases(m)
        if isinstance(cert, TensorFactorization):
            a, b = cert.a, cert.b
            return (
                m.q == 4 and a.q == 2 and b.q == 2
                and a.entries[0][0] == a.entries[1][1]
                and b.entries[0][0] == b.entries[1][1]
                and matrix_service.kron(a, b) == matrix_service.permute(m, cert.sigma)
            )
        if isinstance(cert, BipartiteTensor):
            a = cert.a
            return (
                m.q == 4 and a.q == 2 and a.entries[0][0] == a.entries[1][1]
                and matrix_service.kron(SWAP, a) == matrix_service.permute(m, cert.sigma)
            )
        return False

    def _validate_direct_sum(self, m: SymMatrix, v: Verdict, cert: DirectSum) -> bool:
        flat = [i for part in cert.partition for i in part]
        if sorted(flat) != list(range(m.q)) or len(cert.partition) < 2:
            return False
        if len(cert.verdicts) != len(cert.partition):
            return False
        owner = {i: k for k, part in enumerate(cert.partition) for i in part}
        for i in range(m.q):
            for j in range(m.q):
                if owner[i] != owner[j] and m.entries[i][j] != 0:
                    return False
        outcomes = set()
        for part, sub in zip(cert.partition, cert.verdicts):
            if not self._validate(m.submatrix(part), sub):
                return False
            outcomes.add(sub.outcome)
        if v.outcome == Outcome.TRACTABLE:
            return outcomes == {Outcome.TRACTABLE}
        if v.outcome == Outcome.HARD:
            return Outcome.HARD in outcomes
        return Outcome.HARD not in outcomes and Outcome.UNKNOWN in outcomes


dichotomy_service = DichotomyService()
