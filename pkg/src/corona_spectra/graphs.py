"""Simple undirected graphs, standard families, coronas and switching graphs,
plus graph6 and edge-list serialization."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .errors import GraphParseError


@dataclass(frozen=True)
class Graph:
    """Graph on vertices 0..n-1; ``edges`` holds pairs ``(u, v)`` with ``u < v``."""

    n: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 0:
            raise ValueError(f"vertex count must be a non-negative int, got {self.n!r}")
        norm = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge {e} out of range for n={self.n}")
            norm.add((u, v) if u < v else (v, u))
        object.__setattr__(self, "edges", frozenset(norm))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        edges = list(edges)
        seen = set()
        for u, v in edges:
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ValueError(f"multi-edge {key}")
            seen.add(key)
        return cls(n, frozenset(seen))

    @classmethod
    def from_adjacency(cls, rows: Sequence[Sequence[int]]) -> Graph:
        n = len(rows)
        edges = set()
        for i in range(n):
            if rows[i][i]:
                raise ValueError("adjacency matrix has a nonzero diagonal")
            for j in range(i + 1, n):
                if rows[i][j] != rows[j][i]:
                    raise ValueError("adjacency matrix is not symmetric")
                if rows[i][j] not in (0, 1):
                    raise ValueError("adjacency matrix entries must be 0/1")
                if rows[i][j]:
                    edges.add((i, j))
        return cls(n, frozenset(edges))

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def adjacency(self) -> list[list[int]]:
        a = [[0] * self.n for _ in range(self.n)]
        for u, v in self.edges:
            a[u][v] = a[v][u] = 1
        return a

    def neighbors(self) -> list[set[int]]:
        nb = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nb[u].add(v)
            nb[v].add(u)
        return nb

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def is_regular(self) -> bool:
        return len(set(self.degrees())) <= 1

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        nb = self.neighbors()
        seen, stack = {0}, [0]
        while stack:
            for w in nb[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n

    def is_tree(self) -> bool:
        return self.n >= 1 and self.num_edges == self.n - 1 and self.is_connected()

    def induced_subgraph(self, vertices: Iterable[int]) -> Graph:
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        return Graph(
            len(keep),
            frozenset((index[u], index[v]) for u, v in self.edges if u in index and v in index),
        )

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Vertex v becomes perm[v]."""
        return Graph(self.n, frozenset((perm[u], perm[v]) for u, v in self.edges))

    def __str__(self):
        return f"Graph(n={self.n}, m={self.num_edges})"


def _require_nonempty(*graphs: Graph) -> None:
    for g in graphs:
        if g.n < 1:
            raise ValueError("graphs must have at least one vertex")


def _require_order(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"order must be a positive integer, got {n!r}")


def empty(n: int) -> Graph:
    _require_order(n)
    return Graph(n)


def path(n: int) -> Graph:
    _require_order(n)
    return Graph(n, frozenset((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    _require_order(n)
    if n < 3:
        raise ValueError("a simple cycle needs at least 3 vertices")
    return Graph(n, frozenset((i, (i + 1) % n) for i in range(n)))


def star(n: int) -> Graph:
    """Star on n vertices total: center 0 joined to n-1 leaves."""
    _require_order(n)
    return Graph(n, frozenset((0, i) for i in range(1, n)))


def complete(n: int) -> Graph:
    _require_order(n)
    return Graph(n, frozenset(combinations(range(n), 2)))


def complete_multipartite(parts: Sequence[int]) -> Graph:
    if not parts or any((not isinstance(p, int)) or p < 1 for p in parts):
        raise ValueError(f"parts must be a nonempty list of positive integers, got {parts!r}")
    label = []
    for k, size in enumerate(parts):
        label.extend([k] * size)
    n = len(label)
    return Graph(n, frozenset((i, j) for i, j in combinations(range(n), 2) if label[i] != label[j]))


def complete_bipartite(p: int, q: int) -> Graph:
    return complete_multipartite([p, q])


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    shift = g1.n
    return Graph(g1.n + g2.n, g1.edges | frozenset((u + shift, v + shift) for u, v in g2.edges))


def complement(g: Graph) -> Graph:
    return Graph(g.n, frozenset(combinations(range(g.n), 2)) - g.edges)


def corona(g: Graph, h: Graph) -> Graph:
    """Corona G o H with 0-indexed labels: G vertex i -> i, copy i of H vertex k -> i + m*(k+1)."""
    _require_nonempty(g, h)
    m, n = g.n, h.n
    edges = set(g.edges)
    for i in range(m):
        for u, v in h.edges:
            edges.add((i + m * (u + 1), i + m * (v + 1)))
        for k in range(n):
            edges.add((i, i + m * (k + 1)))
    return Graph(m * (n + 1), frozenset(edges))


def corona_label(i: int, k: int, m: int) -> int:
    """1-indexed label of copy i (1..m) of H-vertex h_k (1..n), or G-vertex i when k == 0."""
    return i + m * k


def corona_block_matrix(g: Graph, h: Graph) -> list[list[int]]:
    """The block matrix [[A, 1^T (x) I_m], [1 (x) I_m, B (x) I_m]], built from Kronecker products."""
    _require_nonempty(g, h)
    a, b = g.adjacency(), h.adjacency()
    m, n = g.n, h.n
    eye = [[int(i == j) for j in range(m)] for i in range(m)]
    ones_row = [[1] * n]
    ones_col = [[1] for _ in range(n)]
    top_right = kron(ones_row, eye)
    bottom_left = kron(ones_col, eye)
    bottom_right = kron(b, eye)
    rows = [a[i] + top_right[i] for i in range(m)]
    rows += [bottom_left[i] + bottom_right[i] for i in range(m * n)]
    return rows


def kron(x: Sequence[Sequence[int]], y: Sequence[Sequence[int]]) -> list[list[int]]:
    p, q = len(y), len(y[0]) if y else 0
    return [
        [x[i // p][j // q] * y[i % p][j % q] for j in range(len(x[0]) * q)]
        for i in range(len(x) * p)
    ]


def switching_graph(t: Graph) -> Graph:
    """Adjacency I_2 (x) A_T + [[0,1],[1,0]] (x) A_complement(T); (|T|-1)-regular."""
    _require_nonempty(t)
    n = t.n
    edges = set(t.edges)
    edges |= {(u + n, v + n) for u, v in t.edges}
    for u, v in complement(t).edges:
        edges.add((u, v + n))
        edges.add((v, u + n))
    return Graph(2 * n, frozenset(edges))


# graph6

_G6_HEADER = ">>graph6<<"


def _encode_n(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    if n <= 68719476735:
        return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    raise ValueError("graph too large for graph6")


def emit_graph6(g: Graph) -> str:
    """Canonical graph6 text (no header, no newline) for the labeled graph."""
    out = bytearray(_encode_n(g.n))
    bits = [1 if (i, j) in g.edges else 0 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    for k in range(0, len(bits), 6):
        v = 0
        for b in bits[k : k + 6]:
            v = (v << 1) | b
        out.append(v + 63)
    return out.decode("ascii")


def parse_graph6(text: str | bytes) -> Graph:
    data = text.encode("ascii", "surrogateescape") if isinstance(text, str) else bytes(text)
    base = 0
    if data.startswith(_G6_HEADER.encode()):
        base = len(_G6_HEADER)
        data = data[base:]
    if data.endswith(b"\r\n"):
        data = data[:-2]
    elif data.endswith(b"\n"):
        data = data[:-1]
    for k, c in enumerate(data):
        if not 63 <= c <= 126:
            raise GraphParseError(f"byte {c!r} outside the graph6 range 63..126", base + k)
    if not data:
        raise GraphParseError("empty graph6 string", base)
    if data[0] != 126:
        n, pos = data[0] - 63, 1
    elif len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise GraphParseError("truncated 8-byte length header", base)
        n, pos = 0, 8
        for c in data[2:8]:
            n = (n << 6) | (c - 63)
        if n <= 258047:
            raise GraphParseError(f"non-canonical 8-byte length header for n={n}", base)
    else:
        if len(data) < 4:
            raise GraphParseError("truncated 4-byte length header", base)
        n, pos = 0, 4
        for c in data[1:4]:
            n = (n << 6) | (c - 63)
        if n <= 62:
            raise GraphParseError(f"non-canonical 4-byte length header for n={n}", base)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[pos:]
    if len(body) < nbytes:
        raise GraphParseError(
            f"expected {nbytes} data bytes for n={n}, found {len(body)}", base + len(data)
        )
    if len(body) > nbytes:
        raise GraphParseError("trailing bytes after graph6 data", base + pos + nbytes)
    edges = set()
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[k // 6] - 63
            if byte >> (5 - k % 6) & 1:
                edges.add((i, j))
            k += 1
    if nbytes:
        pad = (-nbits) % 6
        if (body[-1] - 63) & ((1 << pad) - 1):
            raise GraphParseError("nonzero padding bits", base + pos + nbytes - 1)
    return Graph(n, frozenset(edges))


# edge lists

def emit_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.num_edges}"]
    lines += [f"{u} {v}" for u, v in sorted(g.edges)]
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    """Parse ``n m`` followed by ``m`` lines ``u v`` (0-indexed); ``#`` starts a comment."""
    rows = []
    offset = 0
    for line in text.splitlines(keepends=True):
        stripped = line.split("#", 1)[0].strip()
        if stripped:
            rows.append((offset, stripped))
        offset += len(line.encode())
    if not rows:
        raise GraphParseError("empty edge list", 0)
    off, header = rows[0]
    parts = header.split()
    if len(parts) != 2 or not all(p.isdigit() for p in parts):
        raise GraphParseError(f"header must be 'n m', got {header!r}", off)
    n, m = int(parts[0]), int(parts[1])
    if len(rows) - 1 != m:
        raise GraphParseError(f"header declares {m} edges, found {len(rows) - 1}", off)
    edges = set()
    for off, line in rows[1:]:
        parts = line.split()
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise GraphParseError(f"edge line must be 'u v', got {line!r}", off)
        u, v = int(parts[0]), int(parts[1])
        if u == v:
            raise GraphParseError(f"self-loop at vertex {u}", off)
        if u >= n or v >= n:
            raise GraphParseError(f"edge ({u}, {v}) out of range for n={n}", off)
        key = (min(u, v), max(u, v))
        if key in edges:
            raise GraphParseError(f"repeated edge {key}", off)
        edges.add(key)
    return Graph(n, frozenset(edges))
