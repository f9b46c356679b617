"""Immutable simple undirected graphs with stable edge identifiers.

Vertices are the integers 0..n-1.  Edges are stored as a lexicographically
sorted tuple of pairs (u, v) with u < v; the position of a pair in that tuple
is its edge id.  All derived structures in this package (conflict sets,
matchings, traces) refer to edges by id, so the canonical ordering makes every
algorithm in the package deterministic.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Sequence

from .errors import (
    DuplicateEdge,
    InvalidEdgeId,
    LoopEdge,
    NonDisjointSets,
    OutOfRangeVertex,
)


class Graph:
    """Immutable simple undirected graph.

    Construct through :func:`build_graph` (which validates) or the internal
    constructor with pre-normalized edges.
    """

    __slots__ = ("n", "edges", "adj", "_edge_index")

    def __init__(self, n: int, edges: tuple[tuple[int, int], ...]):
        self.n = n
        self.edges = edges
        adj: list[list[int]] = [[] for _ in range(n)]
        index: dict[tuple[int, int], int] = {}
        for eid, (u, v) in enumerate(edges):
            adj[u].append(v)
            adj[v].append(u)
            index[(u, v)] = eid
        self.adj: tuple[tuple[int, ...], ...] = tuple(
            tuple(sorted(nbrs)) for nbrs in adj
        )
        self._edge_index = index

    # -- basic queries ----------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, u: int) -> int:
        return len(self.adj[u])

    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def regular_degree(self) -> int | None:
        """The common degree if the graph is regular, else None."""
        if self.n == 0:
            return None
        d = len(self.adj[0])
        if all(len(a) == d for a in self.adj):
            return d
        return None

    def neighbors(self, u: int) -> tuple[int, ...]:
        return self.adj[u]

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return (u, v) in self._edge_index

    def edge_id(self, u: int, v: int) -> int:
        if u > v:
            u, v = v, u
        try:
            return self._edge_index[(u, v)]
        except KeyError:
            raise InvalidEdgeId(f"({u}, {v}) is not an edge") from None

    def endpoints(self, eid: int) -> tuple[int, int]:
        self.check_edge_id(eid)
        return self.edges[eid]

    def check_edge_id(self, eid: int) -> None:
        if not isinstance(eid, int) or not 0 <= eid < len(self.edges):
            raise InvalidEdgeId(f"edge id {eid!r} not in [0, {len(self.edges)})")

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))


def build_graph(n: int, pairs: Iterable[tuple[int, int]]) -> Graph:
    """Validate and canonicalize an edge list into a :class:`Graph`.

    Raises OutOfRangeVertex, LoopEdge or DuplicateEdge on bad input; pairs
    may be given in either orientation.
    """
    if n < 0:
        raise OutOfRangeVertex(f"vertex count must be nonnegative, got {n}")
    seen: set[tuple[int, int]] = set()
    for u, v in pairs:
        if not (0 <= u < n and 0 <= v < n):
            raise OutOfRangeVertex(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
        if u == v:
            raise LoopEdge(f"loop at vertex {u}")
        if u > v:
            u, v = v, u
        if (u, v) in seen:
            raise DuplicateEdge(f"edge ({u}, {v}) given more than once")
        seen.add((u, v))
    return Graph(n, tuple(sorted(seen)))


def delete_edges(g: Graph, edge_ids: Iterable[int]) -> tuple[Graph, tuple[int | None, ...]]:
    """Return the graph with the given edges removed plus an id translation.

    Vertices are retained.  The second item maps old edge id -> new edge id,
    with None for deleted edges.  Surviving edges keep their relative order,
    so the new graph's edge sequence is already canonical.
    """
    doomed = set(edge_ids)
    for eid in doomed:
        g.check_edge_id(eid)
    kept: list[tuple[int, int]] = []
    old_to_new: list[int | None] = [None] * g.m
    for eid, pair in enumerate(g.edges):
        if eid not in doomed:
            old_to_new[eid] = len(kept)
            kept.append(pair)
    return Graph(g.n, tuple(kept)), tuple(old_to_new)


# -- set/edge counting ----------------------------------------------------


def cut_size(g: Graph, xs: Iterable[int], ys: Iterable[int]) -> int:
    """Number of edges with one endpoint in xs and the other in ys.

    The two sets must be disjoint.
    """
    xset, yset = set(xs), set(ys)
    if xset & yset:
        raise NonDisjointSets(f"sets share vertices {sorted(xset & yset)}")
    count = 0
    for u in xset:
        for w in g.adj[u]:
            if w in yset:
                count += 1
    return count


def internal_edges(g: Graph, xs: Iterable[int]) -> int:
    """Number of edges of the subgraph induced by xs."""
    xset = set(xs)
    total = 0
    for u in xset:
        for w in g.adj[u]:
            if w in xset:
                total += 1
    return total // 2


# -- induced subgraph detection -------------------------------------------


def has_induced_cycle(g: Graph, k: int) -> tuple[bool, tuple[int, ...] | None]:
    """Does g contain a chordless cycle on k vertices (k in {3, 4, 5})?

    Returns (found, witness); the witness lists the cycle's vertices in
    order.  Exhaustive DFS over induced paths, canonicalized so each cycle
    is visited once: the first vertex is the smallest and the second is
    smaller than the last.
    """
    if k not in (3, 4, 5):
        raise ValueError(f"only cycle lengths 3, 4, 5 supported, got {k}")

    adjsets = [set(a) for a in g.adj]

    def extend(path: list[int]) -> tuple[int, ...] | None:
        last = path[-1]
        closing = len(path) == k - 1
        for w in g.adj[last]:
            if w <= path[0] or w in path:
                continue
            if closing:
                if path[0] not in adjsets[w]:
                    continue
                # reflection canonicalization
                if w < path[1]:
                    continue
                # chordless: w may only touch the two cycle neighbors
                if any(p in adjsets[w] for p in path[1:-1]):
                    continue
                return (*path, w)
            # extend an induced path: w adjacent only to `last` so far
            if any(p in adjsets[w] for p in path[:-1]):
                continue
            path.append(w)
            hit = extend(path)
            if hit is not None:
                return hit
            path.pop()
        return None

    for v0 in range(g.n):
        hit = extend([v0])
        if hit is not None:
            return True, hit
    return False, None


def is_claw_free(g: Graph) -> tuple[bool, tuple[int, int, int, int] | None]:
    """True iff no vertex has three pairwise non-adjacent neighbors.

    On failure returns the witness (center, leaf, leaf, leaf).
    """
    adjsets = [set(a) for a in g.adj]
    for u in range(g.n):
        nbrs = g.adj[u]
        for a, b, c in combinations(nbrs, 3):
            if b not in adjsets[a] and c not in adjsets[a] and c not in adjsets[b]:
                return False, (u, a, b, c)
    return True, None


# -- derived graphs --------------------------------------------------------


def line_graph(g: Graph) -> Graph:
    """The graph on g's edges, adjacent iff they share an endpoint.

    Vertex i of the result corresponds to edge i of g.
    """
    pairs: list[tuple[int, int]] = []
    incident: list[list[int]] = [[] for _ in range(g.n)]
    for eid, (u, v) in enumerate(g.edges):
        incident[u].append(eid)
        incident[v].append(eid)
    # two distinct edges share at most one vertex, so no pair repeats
    for ids in incident:
        for a, b in combinations(ids, 2):
            pairs.append((a, b))
    return Graph(g.m, tuple(sorted(pairs)))


def square(g: Graph) -> Graph:
    """Same vertices, adjacent iff at distance one or two in g."""
    pairs: set[tuple[int, int]] = set()
    for u in range(g.n):
        reach: set[int] = set(g.adj[u])
        for w in g.adj[u]:
            reach.update(g.adj[w])
        reach.discard(u)
        for v in reach:
            if u < v:
                pairs.add((u, v))
    return Graph(g.n, tuple(sorted(pairs)))


# -- edge-list text format --------------------------------------------------
#
# First line "n m", then m lines "u v" with 0-based endpoints.  This is the
# interchange format of every CLI subcommand.


def parse_edge_list(text: str) -> Graph:
    tokens_by_line = [
        line.split() for line in text.splitlines() if line.split() and not line.lstrip().startswith("#")
    ]
    if not tokens_by_line:
        raise ValueError("empty edge-list input")
    header = tokens_by_line[0]
    if len(header) != 2:
        raise ValueError(f"header must be 'n m', got {' '.join(header)!r}")
    n, m = int(header[0]), int(header[1])
    body = tokens_by_line[1:]
    if len(body) != m:
        raise ValueError(f"header announces {m} edges but {len(body)} lines follow")
    pairs = []
    for tok in body:
        if len(tok) != 2:
            raise ValueError(f"bad edge line {' '.join(tok)!r}")
        pairs.append((int(tok[0]), int(tok[1])))
    return build_graph(n, pairs)


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def read_edge_list(path) -> Graph:
    with open(path, "r", encoding="ascii") as fh:
        return parse_edge_list(fh.read())


def write_edge_list(g: Graph, path) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(format_edge_list(g))


def vertex_set(edges: Sequence[tuple[int, int]]) -> set[int]:
    """All endpoints of the given edge pairs."""
    out: set[int] = set()
    for u, v in edges:
        out.add(u)
        out.add(v)
    return out
