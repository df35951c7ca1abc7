"""Undirected simple graphs: generators, structural parameters, edge-list I/O.

Vertices are always the contiguous integers 0..n-1 and adjacency lists are
kept sorted, so equal graphs serialize to byte-identical text.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """Deterministic 64-bit PRNG (splitmix64); identical output on every platform."""

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def next_float(self) -> float:
        """Uniform in [0, 1) using the top 53 bits."""
        return (self.next_u64() >> 11) * 2.0**-53

    def next_below(self, n: int) -> int:
        """Uniform integer in [0, n) via 128-bit multiply-shift (no float bias)."""
        return (self.next_u64() * n) >> 64


class EdgeListError(ValueError):
    """Malformed edge-list text; carries the offending 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph with sorted adjacency lists."""

    n: int
    adjacency: tuple[tuple[int, ...], ...]
    m: int

    @staticmethod
    def from_edges(n: int, edges) -> "Graph":
        """Build a graph on vertices 0..n-1 from an iterable of (u, v) pairs."""
        if n < 1:
            raise ValueError("graph must have at least one vertex")
        seen = set()
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) outside vertex range 0..{n - 1}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise ValueError(f"duplicate edge ({key[0]}, {key[1]})")
            seen.add(key)
            adj[u].append(v)
            adj[v].append(u)
        return Graph(n, tuple(tuple(sorted(a)) for a in adj), len(seen))

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, sorted lexicographically."""
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def digest(self) -> str:
        """Short stable content hash of the canonical serialization."""
        return hashlib.sha256(to_edge_list(self).encode()).hexdigest()[:16]


@dataclass(frozen=True)
class GraphParams:
    """Structural parameters; diameter is None when disconnected, girth None when acyclic."""

    n: int
    m: int
    max_degree: int
    min_degree: int
    diameter: int | None
    girth: int | None
    connected: bool


def generate_grid(rows: int, cols: int) -> Graph:
    """Grid graph on rows x cols cells; cell (i, j) is vertex i*cols + j."""
    if rows < 1 or cols < 1:
        raise ValueError("grid dimensions must be >= 1")
    edges = []
    for i in range(rows):
        for j in range(cols):
            v = i * cols + j
            if j + 1 < cols:
                edges.append((v, v + 1))
            if i + 1 < rows:
                edges.append((v, v + cols))
    return Graph.from_edges(rows * cols, edges)


def generate_gnp(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p): each pair included independently with probability p.

    Pairs are decided in lexicographic (u, v) order, one 53-bit uniform per
    pair, so equal (n, p, seed) always produce the identical graph.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must lie in [0, 1]")
    rng = SplitMix64(seed)
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.next_float() < p:
                edges.append((u, v))
    return Graph.from_edges(n, edges)


def generate_random_tree(n: int, seed: int) -> Graph:
    """Uniform random labeled tree via a random Prufer sequence."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return Graph.from_edges(1, [])
    if n == 2:
        return Graph.from_edges(2, [(0, 1)])
    rng = SplitMix64(seed)
    seq = [rng.next_below(n) for _ in range(n - 2)]
    # Standard degree-counting decode.
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    ptr = 0
    while degree[ptr] != 1:
        ptr += 1
    leaf = ptr
    for x in seq:
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1 and x < ptr:
            leaf = x
        else:
            ptr += 1
            while degree[ptr] != 1:
                ptr += 1
            leaf = ptr
    edges.append((leaf, n - 1))
    return Graph.from_edges(n, edges)


def complement(g: Graph) -> Graph:
    """Graph with edge uv present iff absent in g (u != v)."""
    edges = []
    for u in range(g.n):
        present = set(g.adjacency[u])
        for v in range(u + 1, g.n):
            if v not in present:
                edges.append((u, v))
    return Graph.from_edges(g.n, edges)


def _bfs_distances(g: Graph, src: int) -> list[int]:
    dist = [-1] * g.n
    dist[src] = 0
    queue = [src]
    head = 0
    while head < len(queue):
        u = queue[head]
        head += 1
        for w in g.adjacency[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def _girth(g: Graph) -> int | None:
    """Length of a shortest cycle via a BFS scan from every vertex; None if acyclic."""
    best: int | None = None
    for s in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[s] = 0
        queue = [s]
        head = 0
        while head < len(queue):
            u = queue[head]
            head += 1
            if best is not None and 2 * dist[u] >= best:
                break
            for w in g.adjacency[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    cycle = dist[u] + dist[w] + 1
                    if best is None or cycle < best:
                        best = cycle
    return best


def compute_params(g: Graph) -> GraphParams:
    """Degrees, connectivity, diameter (all-pairs BFS) and girth of a graph."""
    degrees = [len(a) for a in g.adjacency]
    dist0 = _bfs_distances(g, 0)
    connected = all(d >= 0 for d in dist0)
    diameter: int | None = None
    if connected:
        diameter = 0
        for s in range(g.n):
            diameter = max(diameter, max(_bfs_distances(g, s)))
    return GraphParams(
        n=g.n,
        m=g.m,
        max_degree=max(degrees),
        min_degree=min(degrees),
        diameter=diameter,
        girth=_girth(g),
        connected=connected,
    )


def to_edge_list(g: Graph) -> str:
    """Serialize as 'n m' followed by one 'u v' line per edge, lexicographic order."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def from_edge_list(text: str) -> Graph:
    """Parse the edge-list format; '#' lines are comments.

    Vertex labels must already be 0-based and below the declared n; files
    with out-of-range labels are rejected, never renumbered.
    """
    header: tuple[int, int] | None = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if header is None:
            if len(parts) != 2:
                raise EdgeListError("expected header 'n m'", lineno)
            try:
                n, m = int(parts[0]), int(parts[1])
            except ValueError:
                raise EdgeListError("expected header 'n m'", lineno) from None
            if n < 1 or m < 0:
                raise EdgeListError("need n >= 1 and m >= 0", lineno)
            header = (n, m)
            continue
        if len(parts) != 2:
            raise EdgeListError("expected edge 'u v'", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListError("expected edge 'u v'", lineno) from None
        if not u < v:
            raise EdgeListError(f"edge must satisfy u < v, got ({u}, {v})", lineno)
        if v >= header[0]:
            raise EdgeListError(f"vertex {v} out of range 0..{header[0] - 1}", lineno)
        edges.append((u, v))
    if header is None:
        raise EdgeListError("empty file")
    if len(edges) != header[1]:
        raise EdgeListError(f"header declares {header[1]} edges, found {len(edges)}")
    try:
        return Graph.from_edges(header[0], edges)
    except ValueError as exc:
        raise EdgeListError(str(exc)) from None


def save_graph(g: Graph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(to_edge_list(g))


def load_graph(path) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return from_edge_list(fh.read())
