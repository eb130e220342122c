"""
Services package.
"""
from services.multigraph_service import MultigraphService, multigraph_service
from services.matrix_service import MatrixService, matrix_service
from services.partition_service import PartitionService, partition_service
from services.gadget_service import GadgetService, gadget_service
from services.interpolation_service import InterpolationService, interpolation_service
from services.lattice_service import LatticeService, lattice_service
from services.symmetric_service import SymmetricService, symmetric_service
from services.pfaffian_service import PfaffianService, pfaffian_service
from services.ising_service import IsingService, ising_service
from services.dichotomy_service import DichotomyService, dichotomy_service
from services.tractable_service import TractableService, tractable_service
from services.identity_service import IdentityService, identity_service

__all__ = [
    "MultigraphService",
    "MatrixService",
    "PartitionService",
    "GadgetService",
    "InterpolationService",
    "LatticeService",
    "SymmetricService",
    "PfaffianService",
    "IsingService",
    "DichotomyService",
    "TractableService",
    "IdentityService",
    "multigraph_service",
    "matrix_service",
    "partition_service",
    "gadget_service",
    "interpolation_service",
    "lattice_service",
    "symmetric_service",
    "pfaffian_service",
    "ising_service",
    "dichotomy_service",
    "tractable_service",
    "identity_service",
]
