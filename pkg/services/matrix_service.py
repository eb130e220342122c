"""
Service matrices symétriques : arithmétique exacte, polynôme caractéristique,
prédicats structurels, formes (I)-(VI) et décompositions.
"""
import itertools
import logging
from fractions import Fraction
from functools import reduce
from typing import Optional, Sequence

import networkx as nx
import sympy

from core.exceptions import DimensionError, DomainError, IrrationalSpectrumError
from core.rational import from_sympy, rational_sqrt, to_sympy
from models.enums import FormTag
from models.matrix import (
    Bipartition,
    CharPoly,
    DirectSumSplit,
    FormMatch,
    Permutation,
    Predicates,
    RhoValues,
    SymMatrix,
    TensorFactors,
)
from repositories.matrix_repository import matrix_repository

log = logging.getLogger(__name__)

_HALF = Fraction(1, 2)
_HADAMARD = ((1, 1, 1, 1), (1, -1, 1, -1), (1, 1, -1, -1), (1, -1, -1, 1))


def _form_I(n) -> bool:
    return n[0][0] == n[1][1] and n[0][2] == n[1][2] and n[0][3] == n[1][3]


def _form_II(n) -> bool:
    return n[0][0] == n[1][1] and n[0][2] == n[1][3] and n[0][3] == n[1][2]


def _form_III(n) -> bool:
    return _form_II(n) and n[2][2] == n[3][3]


def _form_IV(n) -> bool:
    return (n[0][0] == n[1][1] == n[2][2]
            and n[0][1] == n[0][2] == n[1][2]
            and n[0][3] == n[1][3] == n[2][3])


def _form_V(n) -> bool:
    return (n[0][0] == n[1][1] == n[2][2]
            and n[0][1] == n[2][3] and n[0][2] == n[1][3] and n[0][3] == n[1][2])


def _form_VI(n) -> bool:
    return _form_V(n) and n[3][3] == n[0][0]


FORM_PATTERNS = {
    FormTag.I: _form_I,
    FormTag.II: _form_II,
    FormTag.III: _form_III,
    FormTag.IV: _form_IV,
    FormTag.V: _form_V,
    FormTag.VI: _form_VI,
}


class MatrixService:
    """Opérations exactes sur SymMatrix."""

    # =========================================================================
    # CONSTRUCTION
    # =========================================================================

    @staticmethod
    def parse_matrix(text: str) -> SymMatrix:
        return matrix_repository.parse(text)

    @staticmethod
    def potts(q: int, x: Fraction) -> SymMatrix:
        """Diagonale x, 1 ailleurs."""
        if q < 1:
            raise DimensionError(f"q must be at least 1, got {q}")
        x = Fraction(x)
        return SymMatrix(tuple(
            tuple(x if i == j else Fraction(1) for j in range(q)) for i in range(q)
        ))

    @staticmethod
    def identity(q: int) -> SymMatrix:
        return SymMatrix(tuple(tuple(Fraction(int(i == j)) for j in range(q)) for i in range(q)))

    @staticmethod
    def diagonal(values: Sequence[Fraction]) -> SymMatrix:
        q = len(values)
        return SymMatrix(tuple(
            tuple(Fraction(values[i]) if i == j else Fraction(0) for j in range(q)) for i in range(q)
        ))

    def make_kdk(self, kappa: Fraction, x: Fraction, y: Fraction, z: Fraction,
                 u_v_choice: str = "hadamard") -> SymMatrix:
        """K . kappa diag(1, x, y, z) . K^T avec K = (1/2) H (x) H."""
        if u_v_choice != "hadamard":
            raise DomainError(f"unsupported u/v choice {u_v_choice!r}")
        d = [Fraction(kappa) * Fraction(v) for v in (1, x, y, z)]
        k = [[_HALF * c for c in row] for row in _HADAMARD]
        rows = [
            [sum(k[i][s] * d[s] * k[j][s] for s in range(4)) for j in range(4)]
            for i in range(4)
        ]
        return SymMatrix.from_rows(rows)

    # =========================================================================
    # ARITHMÉTIQUE
    # =========================================================================

    @staticmethod
    def permute(m: SymMatrix, sigma: Permutation) -> SymMatrix:
        """(M^sigma)_ij = M_{sigma(i) sigma(j)}."""
        sigma = tuple(sigma)
        if sorted(sigma) != list(range(m.q)):
            raise DomainError(f"{list(sigma)} is not a permutation of range({m.q})")
        return SymMatrix(tuple(tuple(m.entries[si][sj] for sj in sigma) for si in sigma))

    @staticmethod
    def multiply(a: SymMatrix, b: SymMatrix) -> SymMatrix:
        """Produit a.b ; doit être symétrique (puissances, produits de matrices qui commutent)."""
        q = a.q
        cols = list(zip(*b.entries))
        return SymMatrix(tuple(
            tuple(sum(x * y for x, y in zip(a.entries[i], cols[j])) for j in range(q))
            for i in range(q)
        ))

    def power(self, m: SymMatrix, n: int) -> SymMatrix:
        """M^n par exponentiation rapide (n >= 0)."""
        if n < 0:
            raise DomainError("negative matrix power")
        result = self.identity(m.q)
        base = m
        while n:
            if n & 1:
                result = self.multiply(result, base)
            n >>= 1
            if n:
                base = self.multiply(base, base)
        return result

    @staticmethod
    def entrywise_power(m: SymMatrix, n: int) -> SymMatrix:
        return SymMatrix(tuple(tuple(x ** n for x in row) for row in m.entries))

    @staticmethod
    def kron(a: SymMatrix, b: SymMatrix) -> SymMatrix:
        """Produit tensoriel ; indice (i, k) -> i * b.q + k."""
        qa, qb = a.q, b.q
        return SymMatrix(tuple(
            tuple(a.entries[i][j] * b.entries[k][l] for j in range(qa) for l in range(qb))
            for i in range(qa) for k in range(qb)
        ))

    @staticmethod
    def block_diagonal(*blocks: SymMatrix) -> SymMatrix:
        q = sum(b.q for b in blocks)
        rows = [[Fraction(0)] * q for _ in range(q)]
        offset = 0
        for block in blocks:
            for i in range(block.q):
                for j in range(block.q):
                    rows[offset + i][offset + j] = block.entries[i][j]
            offset += block.q
        return SymMatrix.from_rows(rows)

    # =========================================================================
    # POLYNÔME CARACTÉRISTIQUE ET SPECTRE
    # =========================================================================

    @staticmethod
    def _to_sympy_matrix(m: SymMatrix) -> sympy.Matrix:
        return sympy.Matrix([[to_sympy(x) for x in row] for row in m.entries])

    def charpoly(self, m: SymMatrix) -> CharPoly:
        """(e_1, ..., e_q) via l'algorithme de Berkowitz."""
        coeffs = self._to_sympy_matrix(m).charpoly().all_coeffs()
        return CharPoly(tuple((-1) ** k * from_sympy(c) for k, c in enumerate(coeffs) if k > 0))

    def determinant(self, m: SymMatrix) -> Fraction:
        """Déterminant par élimination de Bareiss (chemin indépendant de charpoly)."""
        return from_sympy(self._to_sympy_matrix(m).det(method="bareiss"))

    def rational_spectrum(self, m: SymMatrix) -> Optional[list[Fraction]]:
        """Valeurs propres (décroissantes, avec multiplicité) si toutes rationnelles."""
        t = sympy.Symbol("t")
        poly = sympy.Poly([to_sympy(c) for c in self.charpoly(m).coefficients()], t, domain=sympy.QQ)
        roots = poly.ground_roots()
        if sum(roots.values()) != m.q:
            return None
        spectrum = []
        for root, mult in roots.items():
            spectrum.extend([from_sympy(root)] * mult)
        return sorted(spectrum, reverse=True)

    # =========================================================================
    # PRÉDICATS STRUCTURELS
    # =========================================================================

    @staticmethod
    def _product(values) -> Fraction:
        return reduce(lambda acc, v: acc * v, values, Fraction(1))

    @staticmethod
    def varrho_tensor(n: SymMatrix) -> Fraction:
        """(N03 - N12)^4 + (N00 N33 - N11 N22)^2 + sum_i (N_i0 N_i3 - N_i1 N_i2)^2."""
        n.require_dimension(4)
        e = n.entries
        value = (e[0][3] - e[1][2]) ** 4 + (e[0][0] * e[3][3] - e[1][1] * e[2][2]) ** 2
        for i in range(4):
            value += (e[i][0] * e[i][3] - e[i][1] * e[i][2]) ** 2
        return value

    def rho_values(self, m: SymMatrix, tensor: Optional[bool] = None,
                   strict_tensor: bool = False) -> RhoValues:
        """Valeurs exactes de rho_diag, rho_full, rho_dist, rho_indep (et des polynômes tenseur)."""
        q = m.q
        e = m.entries
        pairs = [(i, j) for i in range(q) for j in range(q) if i != j]
        perms = list(itertools.permutations(range(q)))

        rho_diag = self._product(e[i][i] - e[j][j] for i, j in pairs)
        rho_full = self._product(e[i][j1] - e[i][j2] for i in range(q) for j1, j2 in pairs)

        def gram(a, b) -> Fraction:
            aa = sum(x * x for x in a)
            bb = sum(x * x for x in b)
            ab = sum(x * y for x, y in zip(a, b))
            return aa * bb - ab * ab

        rho_dist = Fraction(1)
        rho_indep = Fraction(1)
        for i, j in pairs:
            for sigma in perms:
                permuted = [e[j][s] for s in sigma]
                rho_dist *= sum((x - y) ** 2 for x, y in zip(e[i], permuted))
                rho_indep *= gram(e[i], permuted)

        if tensor is None:
            tensor = q == 4
        varrho = rho_tensor = None
        if tensor:
            m.require_dimension(4)
            if strict_tensor and m.has_zero():
                raise DomainError("tensor polynomials are only defined for nonzero entries")
            varrho = self.varrho_tensor(m)
            rho_tensor = self._product(self.varrho_tensor(self.permute(m, s)) for s in perms)
        return RhoValues(rho_diag, rho_full, rho_dist, rho_indep, varrho, rho_tensor)

    def predicates(self, m: SymMatrix, tensor: Optional[bool] = None,
                   strict_tensor: bool = False) -> Predicates:
        values = self.rho_values(m, tensor=tensor, strict_tensor=strict_tensor)
        return Predicates(
            diag_distinct=values.rho_diag != 0,
            row_full=values.rho_full != 0,
            po_distinct=values.rho_dist != 0,
            po_independent=values.rho_indep != 0,
            varrho_tensor_zero=None if values.varrho_tensor is None else values.varrho_tensor == 0,
            rho_tensor_zero=None if values.rho_tensor is None else values.rho_tensor == 0,
        )

    # =========================================================================
    # FORMES (I)-(VI)
    # =========================================================================

    def form_detect(self, m: SymMatrix) -> list[FormMatch]:
        """Chaque forme présente avec le plus petit sigma témoin (ordre lexicographique)."""
        m.require_dimension(4)
        found: dict[FormTag, Permutation] = {}
        for sigma in itertools.permutations(range(4)):
            n = self.permute(m, sigma).entries
            for tag, pattern in FORM_PATTERNS.items():
                if tag not in found and pattern(n):
                    found[tag] = sigma
            if len(found) == len(FORM_PATTERNS):
                break
        return [FormMatch(tag, found[tag]) for tag in FORM_PATTERNS if tag in found]

    def form_eigenvalues(self, m: SymMatrix, tag: FormTag) -> list[Fraction]:
        """Valeurs propres par formule fermée pour les formes III, IV et VI."""
        match = next((f for f in self.form_detect(m) if f.tag == tag), None)
        if match is None:
            raise DomainError(f"matrix is not of Form {tag.value}")
        n = self.permute(m, match.sigma).entries

        def root(value: Fraction) -> Fraction:
            r = rational_sqrt(value)
            if r is None:
                raise IrrationalSpectrumError(f"Form {tag.value} eigenvalue needs sqrt({value})")
            return r

        if tag == FormTag.III:
            a, x, y, z, b, t = n[0][0], n[0][1], n[0][2], n[0][3], n[2][2], n[2][3]
            mu1, mu2 = a + b + x + t, a + b - x - t
            nu1 = root((a - b + x - t) ** 2 + 4 * (y + z) ** 2)
            nu2 = root((a - b - x + t) ** 2 + 4 * (y - z) ** 2)
            return [(mu1 + nu1) / 2, (mu1 - nu1) / 2, (mu2 + nu2) / 2, (mu2 - nu2) / 2]
        if tag == FormTag.IV:
            a, x, z, b = n[0][0], n[0][1], n[0][3], n[3][3]
            nu = root((a + 2 * x - b) ** 2 + 12 * z ** 2)
            return [a - x, a - x, (a + 2 * x + b + nu) / 2, (a + 2 * x + b - nu) / 2]
        if tag == FormTag.VI:
            a, x, y, z = n[0][0], n[0][1], n[0][2], n[0][3]
            return [a + x + y + z, a + x - y - z, a - x + y - z, a - x - y + z]
        raise DomainError(f"no closed-form eigenvalues for Form {tag.value}")

    # =========================================================================
    # DÉCOMPOSITIONS
    # =========================================================================

    def kron_factor(self, m: SymMatrix) -> Optional[tuple[SymMatrix, SymMatrix]]:
        """
        A, B 2x2 avec m = A (x) B, en prenant comme pivot la première entrée non
        nulle d'un bloc 2x2 (blocs diagonaux d'abord) ; A vaut 1 sur le bloc pivot.
        """
        m.require_dimension(4)
        e = m.entries
        for bi, bj in ((0, 0), (1, 1), (0, 1)):
            for k, l in ((0, 0), (1, 1), (0, 1)):
                pivot = e[2 * bi + k][2 * bj + l]
                if pivot == 0:
                    continue
                b_rows = [[e[2 * bi + r][2 * bj + c] for c in range(2)] for r in range(2)]
                a_rows = [[e[2 * r + k][2 * c + l] / pivot for c in range(2)] for r in range(2)]
                if a_rows[0][1] != a_rows[1][0] or b_rows[0][1] != b_rows[1][0]:
                    return None
                a = SymMatrix.from_rows(a_rows)
                b = SymMatrix.from_rows(b_rows)
                return (a, b) if self.kron(a, b) == m else None
        return None

    def tensor_decompose(self, m: SymMatrix) -> Optional[TensorFactors]:
        """Plus petit sigma avec varrho_tensor(M^sigma) = 0, facteurs normalisés A00 = 1."""
        m.require_dimension(4)
        if m.has_zero():
            raise DomainError("tensor decomposition requires nonzero entries")
        for sigma in itertools.permutations(range(4)):
            n = self.permute(m, sigma)
            if self.varrho_tensor(n) != 0:
                continue
            factors = self.kron_factor(n)
            if factors is not None:
                return TensorFactors(sigma, *factors)
        return None

    @staticmethod
    def _support_graph(m: SymMatrix) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(m.q))
        graph.add_edges_from(
            (i, j) for i in range(m.q) for j in range(i + 1, m.q) if m.entries[i][j] != 0
        )
        return graph

    def direct_sum_decompose(self, m: SymMatrix) -> Optional[DirectSumSplit]:
        """Composantes du graphe support (les boucles ne relient rien)."""
        components = sorted(tuple(sorted(c)) for c in nx.connected_components(self._support_graph(m)))
        if len(components) < 2:
            return None
        return DirectSumSplit(tuple(components), tuple(m.submatrix(c) for c in components))

    def bipartite_detect(self, m: SymMatrix) -> Optional[Bipartition]:
        """Bipartition à blocs diagonaux nuls ; le côté gauche contient le plus petit indice de chaque composante."""
        if any(m.entries[i][i] != 0 for i in range(m.q)):
            return None
        graph = self._support_graph(m)
        if graph.number_of_edges() == 0 or not nx.is_bipartite(graph):
            return None
        coloring = nx.bipartite.color(graph)
        left = []
        for comp in nx.connected_components(graph):
            anchor = coloring[min(comp)]
            left.extend(v for v in comp if coloring[v] == anchor)
        left = tuple(sorted(left))
        right = tuple(v for v in range(m.q) if v not in left)
        block = tuple(tuple(m.entries[i][j] for j in right) for i in left)
        return Bipartition(left, right, block)


matrix_service = MatrixService()
