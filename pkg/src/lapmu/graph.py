"""Immutable simple undirected graphs: construction, parsing, generators.

Vertices are 0-based integers. Graphs are value objects: equality and
hashing follow (n, edge set), and all derived views are cached lazily.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property

import numpy as np


class GraphFormatError(ValueError):
    """Malformed graph input text."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1.

    Edges are stored as a sorted tuple of (i, j) pairs with i < j.
    Instances are immutable and safe to share across threads.
    """

    n: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        normalized = set()
        for edge in self.edges:
            i, j = int(edge[0]), int(edge[1])
            if i == j:
                raise ValueError(f"self-loop at vertex {i}")
            if not (0 <= i < self.n and 0 <= j < self.n):
                raise ValueError(f"edge ({i}, {j}) outside vertex range 0..{self.n - 1}")
            if i > j:
                i, j = j, i
            normalized.add((i, j))
        object.__setattr__(self, "edges", tuple(sorted(normalized)))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        """Per-vertex sorted neighbor lists."""
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for i, j in self.edges:
            adj[i].append(j)
            adj[j].append(i)
        return tuple(tuple(sorted(nbrs)) for nbrs in adj)

    @cached_property
    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(len(nbrs) for nbrs in self.adjacency)

    @cached_property
    def edge_arrays(self) -> tuple[np.ndarray, np.ndarray]:
        """Endpoint index arrays (heads, tails), for vectorized kernels."""
        if not self.edges:
            empty = np.empty(0, dtype=np.intp)
            return empty, empty.copy()
        arr = np.asarray(self.edges, dtype=np.intp)
        return arr[:, 0].copy(), arr[:, 1].copy()

    @cached_property
    def degree_array(self) -> np.ndarray:
        return np.asarray(self.degree_sequence, dtype=np.float64)


@dataclass(frozen=True)
class PartitionCut:
    """Vertex bipartition (S, T) with its cut size; True marks side S."""

    side_mask: tuple[bool, ...]
    cut_size: int

    @classmethod
    def from_mask(cls, g: Graph, mask) -> "PartitionCut":
        mask = tuple(bool(b) for b in mask)
        if len(mask) != g.n:
            raise ValueError("mask length must equal vertex count")
        cut = sum(1 for i, j in g.edges if mask[i] != mask[j])
        return cls(mask, cut)

    @property
    def s_vertices(self) -> tuple[int, ...]:
        return tuple(i for i, b in enumerate(self.side_mask) if b)

    @property
    def t_vertices(self) -> tuple[int, ...]:
        return tuple(i for i, b in enumerate(self.side_mask) if not b)


def degrees(g: Graph) -> tuple[int, ...]:
    """Degree sequence indexed by vertex."""
    return g.degree_sequence


def max_degree(g: Graph) -> int:
    if g.n == 0:
        raise ValueError("max_degree undefined on empty vertex set")
    return max(g.degree_sequence)


def complement(g: Graph) -> Graph:
    present = set(g.edges)
    edges = tuple(
        (i, j) for i in range(g.n) for j in range(i + 1, g.n) if (i, j) not in present
    )
    return Graph(g.n, edges)


def connected_components(g: Graph) -> list[list[int]]:
    """Maximal connected vertex sets, each sorted, ordered by smallest member."""
    seen = [False] * g.n
    components = []
    for start in range(g.n):
        if seen[start]:
            continue
        stack = [start]
        seen[start] = True
        comp = []
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in g.adjacency[v]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        components.append(sorted(comp))
    return components


# ---------------------------------------------------------------------------
# Parsing


def _int_token(token: str, lineno: int) -> int:
    try:
        value = int(token)
    except ValueError:
        raise GraphFormatError(f"non-integer token {token!r}", lineno) from None
    if value < 0:
        raise GraphFormatError(f"negative vertex index {value}", lineno)
    return value


def parse_edge_list(text: str) -> Graph:
    """Parse whitespace edge-list text into a Graph.

    One edge per line as two 0-based vertex indices; '#' starts a comment
    line; an optional "n <count>" line fixes the vertex count (otherwise
    n = 1 + largest endpoint). Duplicate edges collapse silently.
    """
    declared_n: int | None = None
    edges: list[tuple[int, int]] = []
    max_seen = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if tokens[0] == "n":
            if declared_n is not None:
                raise GraphFormatError("duplicate vertex-count header", lineno)
            if len(tokens) != 2:
                raise GraphFormatError('vertex-count header must be "n <count>"', lineno)
            declared_n = _int_token(tokens[1], lineno)
            continue
        if len(tokens) != 2:
            raise GraphFormatError("expected two vertex indices per edge line", lineno)
        u = _int_token(tokens[0], lineno)
        v = _int_token(tokens[1], lineno)
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}", lineno)
        if declared_n is not None and (u >= declared_n or v >= declared_n):
            raise GraphFormatError(
                f"endpoint {max(u, v)} exceeds declared vertex count {declared_n}", lineno
            )
        edges.append((u, v))
        max_seen = max(max_seen, u, v)
    n = declared_n if declared_n is not None else max_seen + 1
    return Graph(n, tuple(edges))


def parse_dimacs(text: str) -> Graph:
    """Parse DIMACS-like text: "p edge n m" header, "e u v" edges, 1-based."""
    n: int | None = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        tokens = line.split()
        if tokens[0] == "p":
            if n is not None:
                raise GraphFormatError("duplicate problem line", lineno)
            if len(tokens) != 4 or tokens[1] != "edge":
                raise GraphFormatError('problem line must be "p edge <n> <m>"', lineno)
            n = _int_token(tokens[2], lineno)
        elif tokens[0] == "e":
            if n is None:
                raise GraphFormatError("edge line before problem line", lineno)
            if len(tokens) != 3:
                raise GraphFormatError('edge line must be "e <u> <v>"', lineno)
            u = _int_token(tokens[1], lineno)
            v = _int_token(tokens[2], lineno)
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphFormatError(f"endpoint outside 1..{n}", lineno)
            if u == v:
                raise GraphFormatError(f"self-loop at vertex {u}", lineno)
            edges.append((u - 1, v - 1))
        else:
            raise GraphFormatError(f"unrecognized line type {tokens[0]!r}", lineno)
    if n is None:
        raise GraphFormatError("missing problem line")
    return Graph(n, tuple(edges))


FORMATS = ("edge-list", "dimacs")


def parse_graph(text: str, fmt: str = "edge-list") -> Graph:
    if fmt == "edge-list":
        return parse_edge_list(text)
    if fmt == "dimacs":
        return parse_dimacs(text)
    raise ValueError(f"unknown graph format {fmt!r} (expected one of {FORMATS})")


def format_edge_list(g: Graph) -> str:
    """Render a Graph in the 0-based edge-list format accepted by parse_edge_list."""
    lines = [f"n {g.n}"]
    lines.extend(f"{i} {j}" for i, j in g.edges)
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Generators


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs at least one vertex")
    return Graph(n, tuple((i, j) for i in range(n) for j in range(i + 1, n)))


def complete_bipartite(s: int, t: int) -> Graph:
    if s < 1 or t < 1:
        raise ValueError("complete bipartite graph needs nonempty classes")
    edges = tuple((i, s + j) for i in range(s) for j in range(t))
    return Graph(s + t, edges)


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs at least one vertex")
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least three vertices")
    edges = tuple((i, i + 1) for i in range(n - 1)) + ((0, n - 1),)
    return Graph(n, edges)


def star(k: int) -> Graph:
    """Star K_{1,k}: vertex 0 joined to k leaves."""
    return complete_bipartite(1, k)


def random_graph(n: int, edge_probability: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p), deterministic for a given seed.

    Vertex pairs are visited in lexicographic order and included
    independently with the given probability.
    """
    if n < 0:
        raise ValueError("vertex count must be nonnegative")
    if not 0.0 <= edge_probability <= 1.0:
        raise ValueError("edge probability must lie in [0, 1]")
    rng = random.Random(seed)
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < edge_probability:
                edges.append((i, j))
    return Graph(n, tuple(edges))


def generate(spec: str) -> Graph:
    """Build a named graph from a "name:args" spec, e.g. "random:10,0.5,42".

    Supported: complete(n), complete_bipartite(s,t), path(n), cycle(n),
    star(k), random(n,prob,seed).
    """
    name, _, argstr = spec.partition(":")
    args = argstr.split(",") if argstr else []
    try:
        if name == "complete":
            (n,) = map(int, args)
            return complete(n)
        if name == "complete_bipartite":
            s, t = map(int, args)
            return complete_bipartite(s, t)
        if name == "path":
            (n,) = map(int, args)
            return path(n)
        if name == "cycle":
            (n,) = map(int, args)
            return cycle(n)
        if name == "star":
            (k,) = map(int, args)
            return star(k)
        if name == "random":
            if len(args) != 3:
                raise ValueError("random takes n,probability,seed")
            return random_graph(int(args[0]), float(args[1]), int(args[2]))
    except ValueError as exc:
        raise ValueError(f"bad generator spec {spec!r}: {exc}") from None
    raise ValueError(f"unknown generator {name!r}")
