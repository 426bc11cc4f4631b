"""Immutable undirected graphs with bitmask vertex sets.

A vertex set is a plain Python int used as a bitmask: bit v set means
vertex v is a member. Intersection/union/difference are &, |, &~ and
cardinality is ``int.bit_count()``, which keeps the enumeration cores fast
without any extra data structures.

Graphs are frozen after construction; every operation here is a pure
function, so values can be shared freely across workers.
"""

from __future__ import annotations

import hashlib
import math
import re
from dataclasses import dataclass
from typing import Iterable, Iterator

VertexSet = int


class GraphError(ValueError):
    """Invalid graph, vertex index, or argument."""


class ParseError(GraphError):
    """Malformed canonical edge-list input."""


def vset(vertices: Iterable[int]) -> VertexSet:
    mask = 0
    for v in vertices:
        mask |= 1 << int(v)
    return mask


def iter_members(s: VertexSet) -> Iterator[int]:
    while s:
        low = s & -s
        yield low.bit_length() - 1
        s ^= low


def members(s: VertexSet) -> list[int]:
    """Ascending list of vertex indices in the set."""
    return list(iter_members(s))


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph; ``adj[v]`` is the neighbor bitmask of v.

    ``side_p_size`` > 0 flags the graph bipartite with side P occupying
    indices 0..side_p_size-1 and side L the rest.
    """

    n: int
    m: int
    adj: tuple[int, ...]
    side_p_size: int = 0

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]],
                   side_p_size: int = 0) -> "Graph":
        if n < 0:
            raise GraphError("vertex count must be non-negative")
        if side_p_size < 0 or side_p_size > n:
            raise GraphError("side_p_size out of range")
        adj = [0] * n
        seen = set()
        m = 0
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge endpoint out of range: ({u}, {v})")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise GraphError(f"duplicate edge ({key[0]}, {key[1]})")
            seen.add(key)
            if side_p_size > 0 and (u < side_p_size) == (v < side_p_size):
                raise GraphError(
                    f"edge ({u}, {v}) does not cross the bipartition")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            m += 1
        return cls(n=n, m=m, adj=tuple(adj), side_p_size=side_p_size)

    @property
    def all_vertices(self) -> VertexSet:
        return (1 << self.n) - 1

    @property
    def side_p(self) -> VertexSet:
        return (1 << self.side_p_size) - 1

    @property
    def side_l(self) -> VertexSet:
        return self.all_vertices & ~self.side_p

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as (u, v) with u < v, in lexicographic order."""
        for u in range(self.n):
            for v in iter_members(self.adj[u] >> (u + 1)):
                yield u, u + 1 + v

    def is_independent(self, s: VertexSet) -> bool:
        for v in iter_members(s):
            if self.adj[v] & s:
                return False
        return True


@dataclass(frozen=True)
class DegeneracyResult:
    """Min-degree elimination order and the resulting degeneracy."""

    order: tuple[int, ...]
    degeneracy: int


def neighborhood_of_set(g: Graph, s: VertexSet) -> VertexSet:
    """Union of neighborhoods of the members of s, minus s itself."""
    if s & ~g.all_vertices:
        raise GraphError("vertex index out of range")
    out = 0
    for v in iter_members(s):
        out |= g.adj[v]
    return out & ~s


def is_c4_free(g: Graph) -> bool:
    """True iff no two distinct vertices share two or more neighbors."""
    for u in range(g.n):
        au = g.adj[u]
        for v in range(u + 1, g.n):
            if (au & g.adj[v]).bit_count() >= 2:
                return False
    return True


def degeneracy_order(g: Graph) -> DegeneracyResult:
    """Repeated minimum-degree removal; ties broken by lowest index.

    The degeneracy is the maximum over removal steps of the degree of the
    removed vertex at removal time.
    """
    remaining = g.all_vertices
    order = []
    d = 0
    while remaining:
        best = -1
        best_deg = g.n + 1
        for v in iter_members(remaining):
            deg = (g.adj[v] & remaining).bit_count()
            if deg < best_deg:
                best, best_deg = v, deg
        order.append(best)
        d = max(d, best_deg)
        remaining &= ~(1 << best)
    return DegeneracyResult(order=tuple(order), degeneracy=d)


def induced_subgraph(g: Graph, s: VertexSet) -> Graph:
    """Subgraph on s, relabeled to 0..|s|-1 in ascending original order."""
    if not s:
        raise GraphError("induced subgraph of an empty vertex set")
    if s & ~g.all_vertices:
        raise GraphError("vertex index out of range")
    keep = members(s)
    new_index = {v: i for i, v in enumerate(keep)}
    edges = [(new_index[u], new_index[v]) for u, v in g.edges()
             if (s >> u) & 1 and (s >> v) & 1]
    side = sum(1 for v in keep if v < g.side_p_size) if g.side_p_size else 0
    # A bipartite flag survives only if both sides are still inhabited.
    if side == 0 or side == len(keep):
        side = 0
    return Graph.from_edges(len(keep), edges, side_p_size=side)


_INT = re.compile(r"^(0|[1-9][0-9]*)$")


def _parse_int(token: str, what: str) -> int:
    if not _INT.match(token):
        raise ParseError(f"malformed {what}: {token!r}")
    return int(token)


def parse_graph(data: bytes | str) -> Graph:
    """Parse the canonical edge-list format (see write_graph)."""
    if isinstance(data, (bytes, bytearray)):
        try:
            text = bytes(data).decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"not valid UTF-8: {exc}") from exc
    else:
        text = data
    if not text.endswith("\n"):
        raise ParseError("missing final newline")
    lines = text.split("\n")[:-1]
    if not lines:
        raise ParseError("empty input")
    header = lines[0].split(" ")
    if len(header) != 3:
        raise ParseError(f"malformed header: {lines[0]!r}")
    n = _parse_int(header[0], "vertex count")
    m = _parse_int(header[1], "edge count")
    side = _parse_int(header[2], "side_p_size")
    if len(lines) - 1 != m:
        raise ParseError(f"expected {m} edge lines, got {len(lines) - 1}")
    edges = []
    prev = None
    for line in lines[1:]:
        parts = line.split(" ")
        if len(parts) != 2:
            raise ParseError(f"malformed edge line: {line!r}")
        u = _parse_int(parts[0], "edge endpoint")
        v = _parse_int(parts[1], "edge endpoint")
        if u >= v:
            raise ParseError(f"edge ({u}, {v}) violates u < v")
        if v >= n:
            raise ParseError(f"edge endpoint out of range: ({u}, {v})")
        if prev is not None and (u, v) <= prev:
            if (u, v) == prev:
                raise ParseError(f"duplicate edge ({u}, {v})")
            raise ParseError(f"edge ({u}, {v}) out of sort order")
        prev = (u, v)
        edges.append((u, v))
    try:
        return Graph.from_edges(n, edges, side_p_size=side)
    except GraphError as exc:
        raise ParseError(str(exc)) from exc


def write_graph(g: Graph) -> str:
    """Canonical edge-list text: round-trips bit-exactly through parse."""
    out = [f"{g.n} {g.m} {g.side_p_size}"]
    out.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(out) + "\n"


def graph_hash(g: Graph) -> str:
    """Hex digest identifying a graph by its canonical bytes."""
    return hashlib.sha256(write_graph(g).encode("utf-8")).hexdigest()


def sqrt_degeneracy_bound(n: int) -> int:
    """ceil(sqrt(n)), the degeneracy guarantee for C4-free graphs."""
    return math.isqrt(n - 1) + 1 if n > 0 else 0
