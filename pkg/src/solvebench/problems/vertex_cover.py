"""Decide whether K vertices can cover every edge of a graph."""

import random
from typing import Optional

from ..core import GenerationError, Instance, ParseError, SizeDescriptor
from .base import (
    ProblemAdapter,
    Verdict,
    parse_edge_list,
    parse_yes_no,
    serialize_edge_list,
)

RULES = """We are given an undirected graph on N vertices numbered 0 to N-1, and a number K.
- We have to determine whether it is possible to choose at most K vertices such that every edge of the graph has at least one chosen endpoint."""

INPUT_FORMAT = """The first line of the input has two space-separated integers N and K: the number of
vertices and the maximum number of vertices that may be chosen. Every following line has
two space-separated integers u and v, one edge each. Vertices are numbered 0 to N-1."""

OUTPUT_FORMAT = """The output is a single line containing the single word YES if such a choice of
vertices exists and the single word NO otherwise."""


def _cover_exists(edges, budget: int) -> bool:
    """Branch on an uncovered edge; classic bounded search, exact for desk sizes."""
    if not edges:
        return True
    if budget == 0:
        return False
    u, v = edges[0]
    rest_u = [e for e in edges if u not in e]
    if _cover_exists(rest_u, budget - 1):
        return True
    rest_v = [e for e in edges if v not in e]
    return _cover_exists(rest_v, budget - 1)


class VertexCoverAdapter(ProblemAdapter):
    problem_id = "vertex-cover"
    rules = RULES
    input_format = INPUT_FORMAT
    output_format = OUTPUT_FORMAT
    size_dimensions = ("node_count", "edge_count")

    def measure(self, text: str) -> SizeDescriptor:
        n, _, edges = self.parse(text)
        dims = {"node_count": n}
        if edges:
            dims["edge_count"] = len(edges)
        return SizeDescriptor(**dims)

    def parse(self, text: str):
        header, edges = parse_edge_list(text, header_fields=2)
        n, k = header
        if k < 0:
            raise ParseError("budget K must be non-negative", line=1)
        return n, k, edges

    def serialize(self, struct) -> str:
        n, k, edges = struct
        return serialize_edge_list((n, k), edges)

    def default_train_size(self):
        return SizeDescriptor(node_count=6, edge_count=8)

    def default_test_size(self):
        return SizeDescriptor(node_count=8, edge_count=12)

    def _min_cover(self, edges, n: int) -> int:
        for budget in range(n + 1):
            if _cover_exists(edges, budget):
                return budget
        return n

    def generate(self, size: SizeDescriptor, rng: random.Random) -> Instance:
        self.require_dims(size, "node_count", "edge_count")
        n, e = size["node_count"], size["edge_count"]
        max_edges = n * (n - 1) // 2
        if e > max_edges:
            raise GenerationError(
                "vertex-cover: %d edges do not fit on %d vertices" % (e, n))
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        rng.shuffle(pairs)
        edges = sorted(pairs[:e])
        k_min = self._min_cover(edges, n)
        if k_min >= 1 and rng.random() < 0.5:
            k = k_min - 1  # answer NO
        else:
            k = k_min  # answer YES
        return self._instance(serialize_edge_list((n, k), edges), size)

    def verify(self, instance: Instance, candidate: str) -> Verdict:
        n, k, edges = self.parse(instance.text)
        answer = parse_yes_no(candidate)
        if answer is None:
            return Verdict.malformed("expected a single line reading YES or NO")
        truth = "YES" if _cover_exists(edges, k) else "NO"
        if answer != truth:
            return Verdict.incorrect("answer %s is wrong for this graph" % answer)
        return Verdict.correct()

    def solve(self, instance: Instance) -> str:
        n, k, edges = self.parse(instance.text)
        return ("YES" if _cover_exists(edges, k) else "NO") + "\n"

    def enumerate_solutions(self, instance: Instance, cap: int):
        return [self.solve(instance)], True
