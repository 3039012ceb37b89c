"""Immutable bitmask-backed simple graphs and the basic vertex-set operations.

Vertices are the dense integers 0..n-1.  Adjacency is stored as one integer
bitmask per vertex, so every set operation downstream (the stable-set
solvers, the matching routines) is a handful of word operations.  External
vertex labels, where a construction has them, live in side maps owned by
the generators and never enter this representation.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator


class GraphFormatError(ValueError):
    """Malformed graph6 or edge-list text.  ``line`` is 1-based when known."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


def _mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def _bits(mask: int) -> Iterator[int]:
    while mask:
        lsb = mask & -mask
        yield lsb.bit_length() - 1
        mask ^= lsb


class Graph:
    """A finite, undirected, loopless graph without multiple edges.

    ``rows[v]`` is the neighbourhood of ``v`` as a bitmask.  Instances are
    immutable after construction and safe to share across threads.
    """

    __slots__ = ("n", "rows")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", tuple(rows))

    @classmethod
    def from_rows(cls, n: int, rows: Iterable[int]) -> "Graph":
        """Build from prevalidated adjacency masks (symmetry is checked)."""
        rows = tuple(rows)
        if len(rows) != n:
            raise ValueError("row count does not match n")
        full = (1 << n) - 1
        for v, row in enumerate(rows):
            if row & ~full:
                raise ValueError(f"row {v} references vertices >= {n}")
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
        for v, row in enumerate(rows):
            for u in _bits(row):
                if not rows[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")
        g = cls.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "rows", rows)
        return g

    def __setattr__(self, name, value):
        raise AttributeError("Graph instances are immutable")

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.rows == other.rows

    def __hash__(self):
        return hash((self.n, self.rows))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"

    def __reduce__(self):
        return (Graph.from_rows, (self.n, self.rows))

    @property
    def m(self) -> int:
        """Number of edges."""
        return sum(r.bit_count() for r in self.rows) // 2

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(_bits(self.rows[v]))

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as (u, v) pairs with u < v, in lexicographic order."""
        for u in range(self.n):
            row = self.rows[u] >> (u + 1) << (u + 1)
            for v in _bits(row):
                yield (u, v)


def _check_vertex_set(g: Graph, vertices: Iterable[int]) -> frozenset[int]:
    vs = frozenset(vertices)
    for v in vs:
        if not (isinstance(v, int) and 0 <= v < g.n):
            raise ValueError(f"vertex {v!r} out of range for n={g.n}")
    return vs


def neighborhood(g: Graph, vertices: Iterable[int]) -> frozenset[int]:
    """Union of the neighbourhoods of ``vertices``; may intersect the input."""
    vs = _check_vertex_set(g, vertices)
    m = 0
    for v in vs:
        m |= g.rows[v]
    return frozenset(_bits(m))


def closed_neighborhood(g: Graph, vertices: Iterable[int]) -> frozenset[int]:
    """The input set together with all its neighbours."""
    vs = _check_vertex_set(g, vertices)
    m = _mask_of(vs)
    for v in vs:
        m |= g.rows[v]
    return frozenset(_bits(m))


def isolated_vertices(g: Graph) -> frozenset[int]:
    return frozenset(v for v in range(g.n) if g.rows[v] == 0)


def induced_subgraph(g: Graph, keep: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph spanned by ``keep`` plus the old-id -> new-id relabeling.

    New ids follow the sorted order of the kept vertices, so the relabeling
    is order preserving.
    """
    vs = _check_vertex_set(g, keep)
    order = sorted(vs)
    relabel = {old: new for new, old in enumerate(order)}
    keep_mask = _mask_of(order)
    rows = []
    for old in order:
        row = 0
        for w in _bits(g.rows[old] & keep_mask):
            row |= 1 << relabel[w]
        rows.append(row)
    return Graph.from_rows(len(order), rows), relabel


def with_edge(g: Graph, u: int, v: int) -> Graph:
    """A copy of ``g`` with the extra edge uv (no-op if already present)."""
    if u == v:
        raise ValueError("cannot add a loop")
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise ValueError(f"edge ({u}, {v}) out of range for n={g.n}")
    if g.has_edge(u, v):
        return g
    rows = list(g.rows)
    rows[u] |= 1 << v
    rows[v] |= 1 << u
    return Graph.from_rows(g.n, rows)


def non_edges(g: Graph) -> Iterator[tuple[int, int]]:
    """Vertex pairs u < v that are not adjacent, in lexicographic order."""
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if not g.rows[u] >> v & 1:
                yield (u, v)


@dataclass(frozen=True)
class Bipartition:
    """A 2-coloring: global sides plus the per-component side pairs."""

    left: frozenset[int]
    right: frozenset[int]
    components: tuple[tuple[frozenset[int], frozenset[int]], ...]


def _two_color(g: Graph) -> tuple[Bipartition | None, tuple[int, ...] | None]:
    """BFS 2-coloring; returns (bipartition, None) or (None, odd cycle)."""
    color = [-1] * g.n
    parent = [-1] * g.n
    components: list[tuple[frozenset[int], frozenset[int]]] = []
    for root in range(g.n):
        if color[root] != -1:
            continue
        # roots take color 0, so isolated vertices land on the left side
        color[root] = 0
        comp_sides: tuple[list[int], list[int]] = ([root], [])
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in sorted(_bits(g.rows[u])):
                if color[w] == -1:
                    color[w] = color[u] ^ 1
                    parent[w] = u
                    comp_sides[color[w]].append(w)
                    queue.append(w)
                elif color[w] == color[u]:
                    return None, _odd_cycle_from_conflict(parent, u, w)
        components.append((frozenset(comp_sides[0]), frozenset(comp_sides[1])))
    left = frozenset(v for v in range(g.n) if color[v] == 0)
    right = frozenset(v for v in range(g.n) if color[v] == 1)
    return Bipartition(left, right, tuple(components)), None


def _odd_cycle_from_conflict(parent: list[int], u: int, w: int) -> tuple[int, ...]:
    path_u = [u]
    while parent[path_u[-1]] != -1:
        path_u.append(parent[path_u[-1]])
    ancestors = {v: i for i, v in enumerate(path_u)}
    path_w = [w]
    while path_w[-1] not in ancestors:
        path_w.append(parent[path_w[-1]])
    lca_index = ancestors[path_w[-1]]
    # u .. lca followed by the w-branch back down; closed by the edge uw
    return tuple(path_u[: lca_index + 1] + list(reversed(path_w[:-1])))


def bipartition(g: Graph) -> Bipartition | None:
    """The canonical BFS bipartition, or None when an odd cycle exists."""
    sides, _ = _two_color(g)
    return sides


def is_bipartite(g: Graph) -> bool:
    return bipartition(g) is not None


def odd_cycle(g: Graph) -> tuple[int, ...] | None:
    """An odd cycle witnessing non-bipartiteness, or None if bipartite."""
    _, cycle = _two_color(g)
    return cycle


# graph6: 6-bit chunks of the column-major upper adjacency triangle, each
# chunk offset by 63.  Short form covers n <= 62; '~'-prefixed long forms
# cover larger n.

_G6_HEADER = ">>graph6<<"


def _g6_decode_size(codes: list[int]) -> tuple[int, int]:
    """Vertex count and the number of size bytes consumed."""
    if not codes:
        raise GraphFormatError("empty graph6 text")
    if codes[0] != 63:
        return codes[0], 1
    if len(codes) >= 2 and codes[1] != 63:
        if len(codes) < 4:
            raise GraphFormatError("truncated graph6 size field")
        return (codes[1] << 12) | (codes[2] << 6) | codes[3], 4
    if len(codes) < 8:
        raise GraphFormatError("truncated graph6 size field")
    n = 0
    for c in codes[2:8]:
        n = n << 6 | c
    return n, 8


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line."""
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):].strip()
    codes = []
    for ch in s:
        value = ord(ch) - 63
        if not 0 <= value <= 63:
            raise GraphFormatError(f"character {ch!r} outside graph6 range 63..126")
        codes.append(value)
    n, used = _g6_decode_size(codes)
    nbits = n * (n - 1) // 2
    body = codes[used:]
    if len(body) != (nbits + 5) // 6:
        raise GraphFormatError(
            f"graph6 body has {len(body)} bytes, expected {(nbits + 5) // 6} for n={n}"
        )
    rows = [0] * n
    k = 0
    for chunk in body:
        for shift in range(5, -1, -1):
            bit = chunk >> shift & 1
            if k >= nbits:
                if bit:
                    raise GraphFormatError("nonzero trailing bits in graph6 body")
                k += 1
                continue
            if bit:
                i, j = _g6_pair(k)
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph.from_rows(n, rows)


def _g6_pair(k: int) -> tuple[int, int]:
    """The k-th (row, column) pair of the column-major upper triangle."""
    j = 1
    while j * (j - 1) // 2 <= k:
        j += 1
    j -= 1
    return k - j * (j - 1) // 2, j


def emit_graph6(g: Graph) -> str:
    """Encode as one graph6 line; inverse of :func:`parse_graph6`."""
    n = g.n
    if n <= 62:
        size = [n]
    elif n <= 258047:
        size = [63, n >> 12 & 63, n >> 6 & 63, n & 63]
    elif n <= 68719476735:
        size = [63, 63] + [n >> (6 * s) & 63 for s in range(5, -1, -1)]
    else:
        raise ValueError("graph too large for graph6")
    out = [chr(c + 63) for c in size]
    chunk = 0
    filled = 0
    for j in range(1, n):
        for i in range(j):
            chunk = chunk << 1 | (g.rows[i] >> j & 1)
            filled += 1
            if filled == 6:
                out.append(chr(chunk + 63))
                chunk = 0
                filled = 0
    if filled:
        out.append(chr((chunk << (6 - filled)) + 63))
    return "".join(out)


def parse_edge_list(text: str) -> Graph:
    """Decode the edge-list format: first data line is n, then "u v" lines.

    '#' starts a comment, blank lines are skipped, duplicate edges collapse.
    """
    n: int | None = None
    edges: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 1:
                raise GraphFormatError("expected a single vertex count", lineno)
            try:
                n = int(fields[0])
            except ValueError:
                raise GraphFormatError(f"bad vertex count {fields[0]!r}", lineno) from None
            if n < 0:
                raise GraphFormatError("vertex count must be non-negative", lineno)
            continue
        if len(fields) != 2:
            raise GraphFormatError(f"expected 'u v', got {line!r}", lineno)
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise GraphFormatError(f"bad vertex id in {line!r}", lineno) from None
        if u == v:
            raise GraphFormatError(f"loop at vertex {u}", lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"edge ({u}, {v}) out of range for n={n}", lineno)
        edges.add((min(u, v), max(u, v)))
    if n is None:
        raise GraphFormatError("missing vertex count line")
    return Graph(n, edges)


def emit_edge_list(g: Graph) -> str:
    """Inverse of :func:`parse_edge_list` (canonical ordering)."""
    lines = [str(g.n)]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"
