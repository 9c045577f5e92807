"""Assign one of K colors to every vertex so adjacent vertices differ."""

import random
from typing import List, Optional

from ..core import (
    GenerationError,
    INFEASIBLE,
    Instance,
    ParseError,
    SizeDescriptor,
    strip_trailing_blank_lines,
)
from .base import (
    ProblemAdapter,
    Verdict,
    parse_edge_list,
    serialize_edge_list,
)

RULES = """We are given an undirected graph on N vertices numbered 0 to N-1, and a number K.
- Every vertex has to be assigned exactly one color from the K colors numbered 0 to K-1.
- For every edge of the graph, the two endpoints must receive different colors."""

INPUT_FORMAT = """The first line of the input has two space-separated integers N and K: the number of
vertices and the number of available colors. Every following line has two space-separated
integers u and v, one edge each. Vertices are numbered 0 to N-1."""

OUTPUT_FORMAT = """The output is a single line with N space-separated integers between 0 and K-1;
the i-th integer is the color assigned to vertex i."""


def _search(n: int, k: int, edges, cap: int = 1,
            collect: Optional[list] = None,
            rng: Optional[random.Random] = None) -> int:
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    colors = [-1] * n
    found = 0

    def rec(v: int) -> bool:
        nonlocal found
        if v == n:
            found += 1
            if collect is not None:
                collect.append(colors[:])
            return found >= cap
        options = list(range(k))
        if rng is not None:
            rng.shuffle(options)
        for col in options:
            if any(colors[w] == col for w in adj[v]):
                continue
            colors[v] = col
            stop = rec(v + 1)
            colors[v] = -1
            if stop:
                return True
        return False

    rec(0)
    return found


class GraphColoringAdapter(ProblemAdapter):
    problem_id = "graph-coloring"
    rules = RULES
    input_format = INPUT_FORMAT
    output_format = OUTPUT_FORMAT
    size_dimensions = ("node_count", "edge_count", "color_count")

    def measure(self, text: str) -> SizeDescriptor:
        n, k, edges = self.parse(text)
        dims = {"node_count": n, "color_count": k}
        if edges:
            dims["edge_count"] = len(edges)
        return SizeDescriptor(**dims)

    def parse(self, text: str):
        header, edges = parse_edge_list(text, header_fields=2)
        n, k = header
        if k < 1:
            raise ParseError("color count must be positive", line=1)
        return n, k, edges

    def serialize(self, struct) -> str:
        n, k, edges = struct
        return serialize_edge_list((n, k), edges)

    def default_train_size(self):
        return SizeDescriptor(node_count=5, edge_count=6, color_count=3)

    def default_test_size(self):
        return SizeDescriptor(node_count=7, edge_count=10, color_count=3)

    def generate(self, size: SizeDescriptor, rng: random.Random) -> Instance:
        self.require_dims(size, "node_count", "edge_count", "color_count")
        n, e, k = size["node_count"], size["edge_count"], size["color_count"]
        for _ in range(50):
            # plant a coloring, then draw edges only between color classes
            assignment = [rng.randrange(k) for _ in range(n)]
            cross = [(u, v) for u in range(n) for v in range(u + 1, n)
                     if assignment[u] != assignment[v]]
            if len(cross) < e:
                continue
            rng.shuffle(cross)
            edges = sorted(cross[:e])
            return self._instance(serialize_edge_list((n, k), edges), size)
        raise GenerationError(
            "graph-coloring: cannot fit %d cross-class edges on %d vertices with %d colors"
            % (e, n, k))

    def verify(self, instance: Instance, candidate: str) -> Verdict:
        n, k, edges = self.parse(instance.text)
        body = strip_trailing_blank_lines(candidate)
        lines = [ln for ln in body.split("\n") if ln.strip() != ""]
        if len(lines) != 1:
            return Verdict.malformed("expected a single line of %d colors" % n)
        toks = lines[0].split()
        if len(toks) != n:
            return Verdict.malformed("expected %d colors, got %d" % (n, len(toks)))
        try:
            colors = [int(t) for t in toks]
        except ValueError:
            return Verdict.malformed("non-integer color")
        if any(not (0 <= c < k) for c in colors):
            return Verdict.malformed("colors must lie in 0..%d" % (k - 1))
        for u, v in edges:
            if colors[u] == colors[v]:
                return Verdict.incorrect(
                    "edge %d-%d has both endpoints colored %d" % (u, v, colors[u]))
        return Verdict.correct()

    def solve(self, instance: Instance) -> str:
        n, k, edges = self.parse(instance.text)
        sols: list = []
        if not _search(n, k, edges, cap=1, collect=sols):
            return INFEASIBLE
        return " ".join(str(c) for c in sols[0]) + "\n"

    def enumerate_solutions(self, instance: Instance, cap: int):
        n, k, edges = self.parse(instance.text)
        sols: list = []
        found = _search(n, k, edges, cap=cap + 1, collect=sols)
        texts = [" ".join(str(c) for c in s) + "\n" for s in sols[:cap]]
        return texts, found <= cap
