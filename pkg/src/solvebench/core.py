"""Core types for problem definitions, instances and on-disk datasets.

Every problem is registered under a stable id and exposes the same adapter
surface (parse/serialize/generate/verify/solve/enumerate).  Instances are
plain text; the canonical form is single spaces between tokens, LF line
endings, exactly one trailing newline.
"""

import hashlib
import random
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Tuple

INFEASIBLE = "INFEASIBLE"

# gold sets larger than this are stored truncated and marked incomplete
GOLD_ENUMERATION_CAP = 64

GENERATION_RETRY_BUDGET = 200


class SolveBenchError(Exception):
    pass


class ParseError(SolveBenchError):
    """Malformed instance or dataset file; carries a line number when known."""

    def __init__(self, message, line: Optional[int] = None):
        if line is not None:
            message = "line %d: %s" % (line, message)
        super().__init__(message)
        self.line = line


class SizeError(SolveBenchError):
    pass


class GenerationError(SolveBenchError):
    pass


class IntegrityError(SolveBenchError):
    pass


def canonical_text(text: str) -> str:
    """Normalize to single-space tokens, LF endings, one trailing newline."""
    lines = text.replace("\r\n", "\n").replace("\r", "\n").split("\n")
    cleaned = [" ".join(ln.split()) for ln in lines]
    while cleaned and cleaned[-1] == "":
        cleaned.pop()
    if not cleaned:
        return ""
    return "\n".join(cleaned) + "\n"


def strip_trailing_blank_lines(text: str) -> str:
    """Candidate outputs keep internal spacing but lose trailing blank lines."""
    lines = text.replace("\r\n", "\n").replace("\r", "\n").split("\n")
    while lines and lines[-1].strip() == "":
        lines.pop()
    return "\n".join(lines) + ("\n" if lines else "")


class SizeDescriptor:
    """Named integer dimensions of an instance, e.g. grid_n=9 or node_count=6."""

    def __init__(self, **dims: int):
        if not dims:
            raise SizeError("size descriptor needs at least one dimension")
        for name, value in dims.items():
            if not name.isidentifier():
                raise SizeError("bad dimension name %r" % name)
            if not isinstance(value, int) or isinstance(value, bool) or value < 1:
                raise SizeError("dimension %s must be a positive int, got %r" % (name, value))
        self._dims = dict(sorted(dims.items()))

    def __getitem__(self, name: str) -> int:
        return self._dims[name]

    def get(self, name: str, default=None):
        return self._dims.get(name, default)

    def items(self):
        return self._dims.items()

    def names(self):
        return list(self._dims)

    def __eq__(self, other):
        return isinstance(other, SizeDescriptor) and self._dims == other._dims

    def __hash__(self):
        return hash(tuple(self._dims.items()))

    def __repr__(self):
        return "SizeDescriptor(%s)" % ", ".join("%s=%d" % kv for kv in self._dims.items())

    def encode(self) -> str:
        return ",".join("%s=%d" % kv for kv in self._dims.items())

    @classmethod
    def decode(cls, text: str) -> "SizeDescriptor":
        dims = {}
        for part in text.split(","):
            part = part.strip()
            if not part:
                continue
            if "=" not in part:
                raise SizeError("bad size dimension %r" % part)
            name, _, raw = part.partition("=")
            name = name.strip()
            if name in dims:
                raise SizeError("duplicate size dimension %r" % name)
            try:
                dims[name] = int(raw)
            except ValueError:
                raise SizeError("bad size value %r" % part) from None
        return cls(**dims)


@dataclass(frozen=True)
class Instance:
    problem_id: str
    text: str
    size: SizeDescriptor
    seed: Optional[int] = None

    def __post_init__(self):
        if self.text != canonical_text(self.text):
            raise ParseError("instance text is not canonical")


@dataclass
class GoldSolutionSet:
    """Known-good outputs for a train instance; complete when not truncated."""

    outputs: Tuple[str, ...]
    complete: bool

    def __post_init__(self):
        self.outputs = tuple(sorted(set(self.outputs)))

    def first(self) -> str:
        return self.outputs[0]

    def __contains__(self, text: str) -> bool:
        return text in self.outputs

    def __len__(self):
        return len(self.outputs)


@dataclass
class Dataset:
    problem_id: str
    seed: int
    train: List[Instance]
    gold: List[GoldSolutionSet]
    test: List[Instance]
    train_size: SizeDescriptor = None
    test_size: SizeDescriptor = None


_REGISTRY: Dict[str, object] = {}


def register(adapter) -> None:
    pid = adapter.problem_id
    if not re.fullmatch(r"[a-z][a-z0-9-]*", pid):
        raise SolveBenchError("problem id %r must be lowercase-kebab" % pid)
    if pid in _REGISTRY and type(_REGISTRY[pid]) is not type(adapter):
        raise SolveBenchError("problem id %r already registered" % pid)
    _REGISTRY[pid] = adapter


def get_problem(problem_id: str):
    _ensure_loaded()
    try:
        return _REGISTRY[problem_id]
    except KeyError:
        raise SolveBenchError(
            "unknown problem %r (known: %s)" % (problem_id, ", ".join(sorted(_REGISTRY)))
        ) from None


def all_problem_ids() -> List[str]:
    _ensure_loaded()
    return sorted(_REGISTRY)


def _ensure_loaded():
    if not _REGISTRY:
        from . import problems  # noqa: F401  (importing registers the suite)


def _derive_seed(rng: random.Random) -> int:
    return rng.randrange(2**32)


def build_dataset(
    problem_id: str,
    train_count: int,
    test_count: int,
    train_size: SizeDescriptor,
    test_size: SizeDescriptor,
    seed: int,
) -> Dataset:
    """Deterministically generate a dataset; test texts are disjoint from train."""
    adapter = get_problem(problem_id)
    rng = random.Random(seed)
    train: List[Instance] = []
    gold: List[GoldSolutionSet] = []
    seen = set()
    for _ in range(train_count):
        inst = _generate_unique(adapter, train_size, rng, seen)
        train.append(inst)
        outputs, complete = adapter.enumerate_solutions(inst, cap=GOLD_ENUMERATION_CAP)
        if not outputs:
            raise GenerationError(
                "%s: generated train instance has no solutions (seed %s)"
                % (problem_id, inst.seed)
            )
        gold.append(GoldSolutionSet(tuple(outputs), complete))
    test: List[Instance] = []
    for _ in range(test_count):
        test.append(_generate_unique(adapter, test_size, rng, seen))
    return Dataset(
        problem_id=problem_id,
        seed=seed,
        train=train,
        gold=gold,
        test=test,
        train_size=train_size,
        test_size=test_size,
    )


def _generate_unique(adapter, size, rng, seen) -> Instance:
    for _ in range(GENERATION_RETRY_BUDGET):
        sub_seed = _derive_seed(rng)
        inst = adapter.generate(size, random.Random(sub_seed))
        inst = Instance(adapter.problem_id, inst.text, inst.size, seed=sub_seed)
        if inst.text not in seen:
            seen.add(inst.text)
            return inst
    raise GenerationError(
        "%s: could not generate a fresh instance at size %s within %d attempts"
        % (adapter.problem_id, size.encode(), GENERATION_RETRY_BUDGET)
    )


def _manifest_line(key: str, value: str) -> str:
    return "%s %s\n" % (key, value)


def save_dataset(dataset: Dataset, root) -> Path:
    """Write <root>/<problem>/ with manifest.txt, train/NNN.in(.sol.K), test/NNN.in."""
    root = Path(root)
    pdir = root / dataset.problem_id
    (pdir / "train").mkdir(parents=True, exist_ok=True)
    (pdir / "test").mkdir(parents=True, exist_ok=True)
    lines = []
    lines.append(_manifest_line("problem", dataset.problem_id))
    lines.append(_manifest_line("seed", str(dataset.seed)))
    lines.append(_manifest_line("train_count", str(len(dataset.train))))
    lines.append(_manifest_line("test_count", str(len(dataset.test))))
    if dataset.train_size is not None:
        lines.append(_manifest_line("train_size", dataset.train_size.encode()))
    if dataset.test_size is not None:
        lines.append(_manifest_line("test_size", dataset.test_size.encode()))
    for split, instances in (("train", dataset.train), ("test", dataset.test)):
        for i, inst in enumerate(instances):
            tag = "%s.%03d" % (split, i)
            (pdir / split / ("%03d.in" % i)).write_text(inst.text)
            lines.append(_manifest_line(tag + ".size", inst.size.encode()))
            if inst.seed is not None:
                lines.append(_manifest_line(tag + ".seed", str(inst.seed)))
    for i, gs in enumerate(dataset.gold):
        for k, out in enumerate(gs.outputs):
            (pdir / "train" / ("%03d.sol.%d" % (i, k))).write_text(out)
        lines.append(_manifest_line("train.%03d.complete" % i, "1" if gs.complete else "0"))
    (pdir / "manifest.txt").write_text("".join(lines))
    return pdir


def load_dataset(pdir) -> Dataset:
    """Load a dataset directory; verifies every gold output (integrity check)."""
    pdir = Path(pdir)
    manifest_path = pdir / "manifest.txt"
    if not manifest_path.is_file():
        raise ParseError("missing manifest.txt in %s" % pdir)
    kv: Dict[str, str] = {}
    for lineno, raw in enumerate(manifest_path.read_text().splitlines(), start=1):
        if not raw.strip():
            continue
        parts = raw.split(None, 1)
        if len(parts) != 2:
            raise ParseError("manifest entry needs a key and a value", line=lineno)
        if parts[0] in kv:
            raise ParseError("duplicate manifest key %r" % parts[0], line=lineno)
        kv[parts[0]] = parts[1]
    try:
        problem_id = kv["problem"]
        seed = int(kv["seed"])
        train_count = int(kv["train_count"])
        test_count = int(kv["test_count"])
    except KeyError as exc:
        raise ParseError("manifest missing key %s" % exc) from None
    except ValueError as exc:
        raise ParseError("manifest value not an int: %s" % exc) from None
    adapter = get_problem(problem_id)

    def read_instance(split: str, i: int) -> Instance:
        tag = "%s.%03d" % (split, i)
        path = pdir / split / ("%03d.in" % i)
        if not path.is_file():
            raise ParseError("missing instance file %s" % path)
        text = path.read_text()
        if tag + ".size" not in kv:
            raise ParseError("manifest missing %s.size" % tag)
        size = SizeDescriptor.decode(kv[tag + ".size"])
        seed_val = kv.get(tag + ".seed")
        adapter.parse(text)  # raises ParseError on malformed files
        return Instance(problem_id, canonical_text(text), size,
                        seed=int(seed_val) if seed_val is not None else None)

    train = [read_instance("train", i) for i in range(train_count)]
    test = [read_instance("test", i) for i in range(test_count)]
    gold: List[GoldSolutionSet] = []
    for i, inst in enumerate(train):
        outputs = []
        k = 0
        while True:
            path = pdir / "train" / ("%03d.sol.%d" % (i, k))
            if not path.is_file():
                break
            outputs.append(path.read_text())
            k += 1
        if not outputs:
            raise ParseError("train instance %03d has no gold outputs" % i)
        for out in outputs:
            verdict = adapter.verify(inst, out)
            if verdict.kind.name != "CORRECT":
                raise IntegrityError(
                    "%s train/%03d gold output fails its verifier: %s"
                    % (problem_id, i, verdict.reason)
                )
        complete = kv.get("train.%03d.complete" % i, "1") == "1"
        gold.append(GoldSolutionSet(tuple(outputs), complete))
    return Dataset(
        problem_id=problem_id,
        seed=seed,
        train=train,
        gold=gold,
        test=test,
        train_size=SizeDescriptor.decode(kv["train_size"]) if "train_size" in kv else None,
        test_size=SizeDescriptor.decode(kv["test_size"]) if "test_size" in kv else None,
    )


def text_digest(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()[:16]
