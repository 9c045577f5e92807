"""Benchmark problem suite; importing this package registers every adapter."""

from ..core import register
from .base import ProblemAdapter, Verdict, VerdictKind
from .sudoku import SudokuAdapter
from .latin_square import LatinSquareAdapter
from .magic_square import MagicSquareAdapter
from .sujiko import SujikoAdapter
from .futoshiki import FutoshikiAdapter
from .survo import SurvoAdapter
from .binairo import BinairoAdapter
from .n_queens import NQueensAdapter
from .graph_coloring import GraphColoringAdapter
from .vertex_cover import VertexCoverAdapter
from .hamiltonian_path import HamiltonianPathAdapter
from .subset_sum import SubsetSumAdapter

ADAPTERS = (
    SudokuAdapter(),
    LatinSquareAdapter(),
    MagicSquareAdapter(),
    SujikoAdapter(),
    FutoshikiAdapter(),
    SurvoAdapter(),
    BinairoAdapter(),
    NQueensAdapter(),
    GraphColoringAdapter(),
    VertexCoverAdapter(),
    HamiltonianPathAdapter(),
    SubsetSumAdapter(),
)

for _adapter in ADAPTERS:
    register(_adapter)

__all__ = [
    "ProblemAdapter",
    "Verdict",
    "VerdictKind",
    "ADAPTERS",
]
