"""Golden candidate programs for the benchmark's replay-mode pipeline.

Every fixture is a standalone program of the kind the pipeline's code
generation step produces: it reads input.txt, writes output.txt, and uses
nothing beyond the standard library plus the SMT solver subprocess named
by SMT_SOLVER_CMD. Correct fixtures solve their problem outright; faulty
ones reproduce documented failure arcs so the refinement loop has
something real to repair.
"""

import hashlib
import json
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Tuple

__version__ = "0.1.0"

PACKAGE_ROOT = Path(__file__).resolve().parent.parent
FIXTURES_ROOT = PACKAGE_ROOT / "fixtures"
MANIFEST_PATH = FIXTURES_ROOT / "manifest.json"


@dataclass(frozen=True)
class Fixture:
    problem: str
    variant: str
    role: str  # correct or faulty
    designated: str  # outcome kind the fixture must earn
    fixes: Optional[str] = None  # variant that repairs this fault

    @property
    def path(self) -> Path:
        return FIXTURES_ROOT / self.problem / self.variant / "program.py"

    def source(self) -> str:
        return self.path.read_text()

    def sha256(self) -> str:
        return hashlib.sha256(self.path.read_bytes()).hexdigest()


PROBLEMS: Tuple[str, ...] = (
    "binairo",
    "futoshiki",
    "graph-coloring",
    "hamiltonian-path",
    "latin-square",
    "magic-square",
    "n-queens",
    "subset-sum",
    "sudoku",
    "sujiko",
    "survo",
    "vertex-cover",
)

CATALOG: Tuple[Fixture, ...] = tuple(
    [Fixture(p, "solver", "correct", "Correct") for p in PROBLEMS]
    + [Fixture(p, "pal", "correct", "Correct") for p in PROBLEMS]
    + [
        Fixture("binairo", "faulty", "faulty", "WrongOutput", fixes="solver"),
        Fixture("subset-sum", "faulty-crash", "faulty", "RuntimeError",
                fixes="pal"),
        Fixture("subset-sum", "faulty-wrong", "faulty", "WrongOutput",
                fixes="pal"),
    ]
)


def correct_fixtures() -> Tuple[Fixture, ...]:
    return tuple(f for f in CATALOG if f.role == "correct")


def faulty_fixtures() -> Tuple[Fixture, ...]:
    return tuple(f for f in CATALOG if f.role == "faulty")


def get_fixture(problem: str, variant: str) -> Fixture:
    for fixture in CATALOG:
        if fixture.problem == problem and fixture.variant == variant:
            return fixture
    raise KeyError("no fixture %s/%s" % (problem, variant))


def load_manifest() -> dict:
    return json.loads(MANIFEST_PATH.read_text())
