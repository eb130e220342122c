"""
Repositories package.
"""
from repositories.base import BaseRepository
from repositories.graph_repository import GraphRepository, graph_repository
from repositories.matrix_repository import MatrixRepository, matrix_repository
from repositories.count_repository import CountMapRepository, count_map_repository
from repositories.verdict_repository import VerdictRepository, verdict_repository

__all__ = [
    "BaseRepository",
    "GraphRepository",
    "MatrixRepository",
    "CountMapRepository",
    "VerdictRepository",
    "graph_repository",
    "matrix_repository",
    "count_map_repository",
    "verdict_repository",
]
