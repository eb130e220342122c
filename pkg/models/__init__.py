"""
Models package - Export all models for easy access.
"""
from models.enums import EvalMethod, FormTag, GadgetName, GadgetTarget, Outcome, TwoByTwoCase
from models.graph import Dart, Edge, Multigraph, RotationSystem, twin
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
from models.counting import CountMap, ValueSet
from models.gadget import GadgetKind, GeneratingForm
from models.lattice import ExponentVector, LatticeBasis, PairedPartition
from models.planar import EvenSubgraphPoly, SkewMatrix
from models.verdict import (
    BipartiteTensor,
    Certificate,
    DirectSum,
    HardnessWitness,
    Scalar,
    TensorFactorization,
    TwoByTwo,
    UndecidedBlock,
    Verdict,
)

__all__ = [
    "EvalMethod",
    "FormTag",
    "GadgetName",
    "GadgetTarget",
    "Outcome",
    "TwoByTwoCase",
    "Dart",
    "Edge",
    "Multigraph",
    "RotationSystem",
    "twin",
    "Bipartition",
    "CharPoly",
    "DirectSumSplit",
    "FormMatch",
    "Permutation",
    "Predicates",
    "RhoValues",
    "SymMatrix",
    "TensorFactors",
    "CountMap",
    "ValueSet",
    "GadgetKind",
    "GeneratingForm",
    "ExponentVector",
    "LatticeBasis",
    "PairedPartition",
    "EvenSubgraphPoly",
    "SkewMatrix",
    "BipartiteTensor",
    "Certificate",
    "DirectSum",
    "HardnessWitness",
    "Scalar",
    "TensorFactorization",
    "TwoByTwo",
    "UndecidedBlock",
    "Verdict",
]
