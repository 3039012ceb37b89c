"""Graph constructions: named reference graphs, parametric families, corpora.

The named graphs reproduce small reference pictures edge for edge; each one
is pinned by regression tests on its published invariant values (stability
number, core, matching facts) before anything else relies on it.  The two
``fig77`` constructors additionally self-check those invariants on first
use per parameter, so an out-of-range parameter is rejected instead of
silently producing a graph with the wrong core.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass
from typing import Iterator

from .graph import Graph


@dataclass
class LabeledGraph:
    """A graph plus the label -> vertex-id map used by its construction."""

    graph: Graph
    labels: dict[str, int]

    def vertex_set(self, *names: str) -> frozenset[int]:
        return frozenset(self.labels[name] for name in names)


def _from_labeled_edges(names: list[str], edges: list[tuple[str, str]]) -> LabeledGraph:
    idx = {name: i for i, name in enumerate(names)}
    g = Graph(len(names), [(idx[a], idx[b]) for a, b in edges])
    return LabeledGraph(g, idx)


def _fig1_diamond() -> LabeledGraph:
    # K4 minus one edge; the two degree-2 vertices are 0 and 3
    return _from_labeled_edges(
        ["v0", "v1", "v2", "v3"],
        [("v0", "v1"), ("v0", "v2"), ("v1", "v2"), ("v1", "v3"), ("v2", "v3")],
    )


def _fig1_k3_plus_e() -> LabeledGraph:
    # triangle with one pendant edge
    return _from_labeled_edges(
        ["v0", "v1", "v2", "v3"],
        [("v1", "v2"), ("v1", "v3"), ("v2", "v3"), ("v0", "v1")],
    )


def _fig2_g1() -> LabeledGraph:
    return _from_labeled_edges(
        ["a", "b", "c", "d", "e"],
        [("a", "c"), ("c", "d"), ("c", "b"), ("c", "e"), ("d", "e")],
    )


def _fig2_g2() -> LabeledGraph:
    return _from_labeled_edges(
        ["a", "b", "c", "d", "e", "f", "g"],
        [("a", "d"), ("d", "c"), ("c", "e"), ("d", "b"), ("e", "g"), ("e", "f"), ("f", "g")],
    )


def _fig34_graph() -> LabeledGraph:
    return _from_labeled_edges(
        ["a", "b", "c", "d", "e", "f", "g", "h"],
        [("h", "g"), ("g", "f"), ("f", "e"), ("a", "h"), ("b", "g"), ("c", "f"), ("f", "d")],
    )


def _fig3_graph() -> LabeledGraph:
    return _from_labeled_edges(
        ["v1", "v2", "v3", "v4", "t1", "t2"],
        [
            ("v1", "v2"),
            ("v2", "v3"),
            ("v3", "v4"),
            ("v3", "t1"),
            ("v4", "t2"),
            ("v3", "t2"),
            ("t1", "v4"),
        ],
    )


def _fig4_graph() -> LabeledGraph:
    return _from_labeled_edges(
        ["a", "b", "c", "v3", "v4", "t2", "t3"],
        [
            ("a", "b"),
            ("b", "v3"),
            ("v3", "v4"),
            ("b", "c"),
            ("v3", "t2"),
            ("v4", "t3"),
            ("v3", "t3"),
            ("t2", "v4"),
            ("t2", "t3"),
        ],
    )


def _fig56_graph() -> LabeledGraph:
    # two pendant-like outer vertices on a dense 5-vertex middle block
    return _from_labeled_edges(
        ["p1", "u", "v", "p2", "x", "y", "z"],
        [
            ("p1", "u"),
            ("u", "v"),
            ("v", "p2"),
            ("u", "x"),
            ("v", "y"),
            ("x", "y"),
            ("x", "z"),
            ("u", "y"),
            ("u", "z"),
            ("v", "x"),
            ("v", "z"),
            ("y", "z"),
        ],
    )


def _fig57_graph() -> LabeledGraph:
    # a path feeding a K5 block, with two extra leaves on the path end
    return _from_labeled_edges(
        ["a", "b", "u", "w", "x", "y", "c", "d", "z"],
        [
            ("a", "b"),
            ("b", "u"),
            ("u", "w"),
            ("a", "c"),
            ("a", "d"),
            ("b", "x"),
            ("b", "y"),
            ("u", "x"),
            ("w", "y"),
            ("x", "y"),
            ("x", "z"),
            ("u", "y"),
            ("u", "z"),
            ("w", "x"),
            ("w", "z"),
            ("y", "z"),
        ],
    )


_NAMED_BUILDERS = {
    "fig1_diamond": _fig1_diamond,
    "fig1_K3_plus_e": _fig1_k3_plus_e,
    "fig2_G1": _fig2_g1,
    "fig2_G2": _fig2_g2,
    "fig34_graph": _fig34_graph,
    "fig3_graph": _fig3_graph,
    "fig4_graph": _fig4_graph,
    "fig56_graph": _fig56_graph,
    "fig57_graph": _fig57_graph,
}

_NAMED_ALIASES = {
    "diamond": "fig1_diamond",
    "k3_plus_e": "fig1_K3_plus_e",
}


def named_ids() -> list[str]:
    return sorted(_NAMED_BUILDERS)


def named(graph_id: str) -> LabeledGraph:
    """Look up a named reference graph by id."""
    canonical = _NAMED_ALIASES.get(graph_id, graph_id)
    builder = _NAMED_BUILDERS.get(canonical)
    if builder is None:
        raise ValueError(f"unknown named graph {graph_id!r}")
    return builder()


def fig45(p: int, r: int) -> LabeledGraph:
    """Clique b_1..b_p with pendants a_i-b_i and leaves c_1..c_r on b_p.

    Has stability number p+r and core {a_p, c_1..c_r} of size r+1.
    """
    if p < 1 or r < 1:
        raise ValueError("fig45 requires p >= 1 and r >= 1")
    names = [f"a{i}" for i in range(1, p + 1)]
    names += [f"b{i}" for i in range(1, p + 1)]
    names += [f"c{j}" for j in range(1, r + 1)]
    edges = [(f"b{i}", f"b{j}") for i in range(1, p + 1) for j in range(i + 1, p + 1)]
    edges += [(f"a{i}", f"b{i}") for i in range(1, p + 1)]
    edges += [(f"c{j}", f"b{p}") for j in range(1, r + 1)]
    return _from_labeled_edges(names, edges)


def _build_fig77(p: int, odd: bool) -> LabeledGraph:
    names = [f"a{i}" for i in range(1, p + 1)]
    names += [f"b{i}" for i in range(1, p + 1)]
    names += ["c1", "c2"]
    edges = [(f"b{i}", f"b{i + 1}") for i in range(1, p)]
    edges += [(f"a{i}", f"b{i}") for i in range(1, p + 1)]
    edges += [(f"b{p}", "c1"), ("c1", "c2"), ("c1", f"a{p}")]
    if odd:
        names.append("c3")
        edges += [("a1", "c3"), ("b1", "c3")]
    return _from_labeled_edges(names, edges)


_fig77_admitted: set[tuple[int, bool]] = set()


def _gate_fig77(lg: LabeledGraph, p: int, odd: bool) -> None:
    """Reject parameters whose construction misses the pinned invariants."""
    if (p, odd) in _fig77_admitted:
        return
    from .matching import is_koenig_egervary
    from .stable_sets import core

    expected_n = 2 * p + 3 if odd else 2 * p + 2
    ok = lg.graph.n == expected_n and core(lg.graph) == lg.vertex_set("c2")
    if ok and not odd:
        ok = is_koenig_egervary(lg.graph)
    if not ok:
        kind = "fig77_odd" if odd else "fig77"
        raise ValueError(f"{kind} does not attain its defining invariants at p={p}")
    _fig77_admitted.add((p, odd))


def fig77(p: int) -> LabeledGraph:
    """Path b_1..b_p with pendants a_i-b_i and a two-leaf tail c_1, c_2 on
    b_p where c_1 also sees a_p; even order 2p+2, core {c_2}."""
    if p < 1:
        raise ValueError("fig77 requires p >= 1")
    lg = _build_fig77(p, odd=False)
    _gate_fig77(lg, p, odd=False)
    return lg


def fig77_odd(p: int) -> LabeledGraph:
    """The odd-order variant of :func:`fig77`: one extra vertex c_3
    adjacent to a_1 and b_1; order 2p+3, core {c_2}."""
    if p < 1:
        raise ValueError("fig77_odd requires p >= 1")
    lg = _build_fig77(p, odd=True)
    _gate_fig77(lg, p, odd=True)
    return lg


def remark_family(k: int, p: int) -> LabeledGraph:
    """k leaves x_1..x_k on y_1, with y_1..y_p a clique.

    For p >= k+3 this has core {x_1..x_k} of size k while the stability
    number stays below half the order.
    """
    if k < 1 or p < 1:
        raise ValueError("remark_family requires k >= 1 and p >= 1")
    names = [f"x{i}" for i in range(1, k + 1)] + [f"y{j}" for j in range(1, p + 1)]
    edges = [(f"x{i}", "y1") for i in range(1, k + 1)]
    edges += [(f"y{i}", f"y{j}") for i in range(1, p + 1) for j in range(i + 1, p + 1)]
    return _from_labeled_edges(names, edges)


STANDARD_FAMILIES = ("path", "cycle", "complete", "k1_plus_kn", "k1_plus_c4")


def standard(family: str, n: int | None = None) -> Graph:
    """Standard constructions: P_n, C_n, K_n, K1 + K_n, K1 + C4."""
    if family == "path":
        if n is None or n < 1:
            raise ValueError("path requires n >= 1")
        return Graph(n, [(i, i + 1) for i in range(n - 1)])
    if family == "cycle":
        if n is None or n < 3:
            raise ValueError("cycle requires n >= 3")
        return Graph(n, [(i, (i + 1) % n) for i in range(n)])
    if family == "complete":
        if n is None or n < 1:
            raise ValueError("complete requires n >= 1")
        return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])
    if family == "k1_plus_kn":
        if n is None or n < 1:
            raise ValueError("k1_plus_kn requires clique size n >= 1")
        return Graph(n + 1, [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)])
    if family == "k1_plus_c4":
        if n not in (None, 5):
            raise ValueError("k1_plus_c4 has fixed order 5")
        return Graph(5, [(1, 2), (2, 3), (3, 4), (4, 1)])
    raise ValueError(f"unknown standard family {family!r}")


_PAIR_CACHE: dict[int, list[tuple[int, int]]] = {}


def _pairs(n: int) -> list[tuple[int, int]]:
    pairs = _PAIR_CACHE.get(n)
    if pairs is None:
        pairs = _PAIR_CACHE[n] = [
            (u, v) for u in range(n) for v in range(u + 1, n)
        ]
    return pairs


def enumerate_labeled(n: int, hard_cap: int = 7) -> Iterator[Graph]:
    """All 2^(n(n-1)/2) labeled graphs on n vertices, in edge-mask order.

    Bit i of the mask is the i-th pair in lexicographic (u, v) order.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > hard_cap:
        raise ValueError(f"n={n} exceeds the enumeration cap {hard_cap}")
    pairs = _pairs(n)
    for mask in range(1 << len(pairs)):
        rows = [0] * n
        m = mask
        while m:
            lsb = m & -m
            u, v = pairs[lsb.bit_length() - 1]
            rows[u] |= 1 << v
            rows[v] |= 1 << u
            m ^= lsb
        yield Graph.from_rows(n, rows)


# splitmix64: the standard 64-bit mixing generator (Steele, Lea, Flood).
# Fixed integer arithmetic, so sampled corpora reproduce on any platform.

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def _mix64(z: int) -> int:
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9 & _MASK64
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB & _MASK64
    return z ^ (z >> 31)


def _splitmix64(state: int) -> tuple[int, int]:
    state = (state + _GOLDEN) & _MASK64
    return _mix64(state), state


def _substream_seed(seed: int, n: int, p: float, index: int) -> int:
    p_bits = struct.unpack("<Q", struct.pack("<d", p))[0]
    s = _mix64(seed & _MASK64)
    s = _mix64(s ^ n)
    s = _mix64(s ^ p_bits)
    return _mix64(s ^ index)


def sample_gnp(n: int, edge_probability: float, seed: int, count: int) -> Iterator[Graph]:
    """Reproducible G(n, p) stream.

    Graph ``index`` draws from a splitmix64 substream keyed on
    (seed, n, IEEE-754 bits of p, index); each vertex pair in lexicographic
    order consumes one 64-bit draw and becomes an edge when the draw falls
    below floor(p * 2^64).
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if not 0.0 <= edge_probability <= 1.0:
        raise ValueError("edge probability must lie in [0, 1]")
    if count < 0:
        raise ValueError("count must be non-negative")
    threshold = int(edge_probability * (1 << 64))
    pairs = _pairs(n)
    for index in range(count):
        state = _substream_seed(seed, n, edge_probability, index)
        rows = [0] * n
        for u, v in pairs:
            draw, state = _splitmix64(state)
            if draw < threshold:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
        yield Graph.from_rows(n, rows)
