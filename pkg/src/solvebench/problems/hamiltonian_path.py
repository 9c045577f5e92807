"""Decide whether a graph contains a path visiting every vertex exactly once."""

import random
from typing import Optional

from ..core import GenerationError, Instance, SizeDescriptor
from .base import (
    ProblemAdapter,
    Verdict,
    parse_edge_list,
    parse_yes_no,
    serialize_edge_list,
)

RULES = """We are given an undirected graph on N vertices numbered 0 to N-1.
- We have to determine whether the graph contains a path that visits every vertex exactly once."""

INPUT_FORMAT = """The first line of the input has a single integer N: the number of vertices.
Every following line has two space-separated integers u and v, one edge each.
Vertices are numbered 0 to N-1."""

OUTPUT_FORMAT = """The output is a single line containing the single word YES if such a path exists
and the single word NO otherwise."""


def _has_path(n: int, edges) -> bool:
    """Subset DP over (visited mask, last vertex); exact for desk sizes."""
    if n == 1:
        return True
    adj = [0] * n
    for u, v in edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    reach = [0] * (1 << n)
    for v in range(n):
        reach[1 << v] = 1 << v
    full = (1 << n) - 1
    for mask in range(1, 1 << n):
        ends = reach[mask]
        if not ends:
            continue
        if mask == full:
            return True
        for last in range(n):
            if ends >> last & 1:
                nxt = adj[last] & ~mask
                while nxt:
                    bit = nxt & -nxt
                    reach[mask | bit] |= bit
                    nxt ^= bit
    return bool(reach[full])


class HamiltonianPathAdapter(ProblemAdapter):
    problem_id = "hamiltonian-path"
    rules = RULES
    input_format = INPUT_FORMAT
    output_format = OUTPUT_FORMAT
    size_dimensions = ("node_count", "edge_count")

    def measure(self, text: str) -> SizeDescriptor:
        n, edges = self.parse(text)
        dims = {"node_count": n}
        if edges:
            dims["edge_count"] = len(edges)
        return SizeDescriptor(**dims)

    def parse(self, text: str):
        header, edges = parse_edge_list(text, header_fields=1)
        return header[0], edges

    def serialize(self, struct) -> str:
        n, edges = struct
        return serialize_edge_list((n,), edges)

    def default_train_size(self):
        return SizeDescriptor(node_count=5, edge_count=6)

    def default_test_size(self):
        return SizeDescriptor(node_count=7, edge_count=9)

    def generate(self, size: SizeDescriptor, rng: random.Random) -> Instance:
        self.require_dims(size, "node_count", "edge_count")
        n, e = size["node_count"], size["edge_count"]
        max_edges = n * (n - 1) // 2
        if e > max_edges:
            raise GenerationError(
                "hamiltonian-path: %d edges do not fit on %d vertices" % (e, n))
        want_yes = rng.random() < 0.5
        if want_yes and e >= n - 1:
            order = list(range(n))
            rng.shuffle(order)
            edges = set()
            for i in range(n - 1):
                u, v = order[i], order[i + 1]
                edges.add((min(u, v), max(u, v)))
            extras = [(u, v) for u in range(n) for v in range(u + 1, n)
                      if (u, v) not in edges]
            rng.shuffle(extras)
            for pair in extras:
                if len(edges) >= e:
                    break
                edges.add(pair)
            return self._instance(serialize_edge_list((n,), sorted(edges)), size)
        # NO instance: resample sparse graphs, then force one by isolating a vertex
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        for _ in range(50):
            rng.shuffle(pairs)
            edges = sorted(pairs[:e])
            if not _has_path(n, edges):
                return self._instance(serialize_edge_list((n,), edges), size)
        rng.shuffle(pairs)
        lonely = rng.randrange(n)
        edges = sorted(p for p in pairs if lonely not in p)[:e]
        if n > 1 and _has_path(n, edges):
            raise GenerationError(
                "hamiltonian-path: could not build a NO instance at %s" % size.encode())
        return self._instance(serialize_edge_list((n,), edges), size)

    def verify(self, instance: Instance, candidate: str) -> Verdict:
        n, edges = self.parse(instance.text)
        answer = parse_yes_no(candidate)
        if answer is None:
            return Verdict.malformed("expected a single line reading YES or NO")
        truth = "YES" if _has_path(n, edges) else "NO"
        if answer != truth:
            return Verdict.incorrect("answer %s is wrong for this graph" % answer)
        return Verdict.correct()

    def solve(self, instance: Instance) -> str:
        n, edges = self.parse(instance.text)
        return ("YES" if _has_path(n, edges) else "NO") + "\n"

    def enumerate_solutions(self, instance: Instance, cap: int):
        return [self.solve(instance)], True
