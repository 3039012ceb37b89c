"""Maximum matchings, Koenig-Egervary recognition, and Hall-style queries.

General graphs go through Edmonds' blossom algorithm (contract/expand with
explicit base pointers); bipartite graphs take a Hopcroft-Karp fast path.
All tie-breaks scan vertices in increasing id, so results are deterministic.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graph import Graph, _bits, _check_vertex_set, bipartition


@dataclass(frozen=True)
class MatchingReport:
    """A maximum matching together with the derived flags."""

    mu: int
    edges: frozenset[tuple[int, int]]
    is_perfect: bool
    is_ke: bool


def _blossom_mate(g: Graph) -> list[int]:
    """Mate array of a maximum matching via the blossom algorithm.

    One alternating-tree BFS per unmatched root, in increasing root order.
    Odd cycles are contracted by redirecting ``base`` pointers to the stem
    vertex; augmentation flips the parent path from the exposed endpoint.
    """
    n = g.n
    adj = [sorted(_bits(g.rows[v])) for v in range(n)]
    mate = [-1] * n
    parent = [-1] * n
    base = list(range(n))

    def lowest_common_base(a: int, b: int) -> int:
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if mate[a] == -1:
                break
            a = parent[mate[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[mate[b]]

    def mark_blossom_path(v: int, stem: int, child: int, in_blossom: list[bool]) -> None:
        while base[v] != stem:
            in_blossom[base[v]] = True
            in_blossom[base[mate[v]]] = True
            parent[v] = child
            child = mate[v]
            v = parent[mate[v]]

    for root in range(n):
        if mate[root] != -1:
            continue
        for v in range(n):
            parent[v] = -1
            base[v] = v
        in_tree = [False] * n
        in_tree[root] = True
        queue = deque([root])
        finish = -1
        while queue and finish == -1:
            v = queue.popleft()
            for w in adj[v]:
                if base[v] == base[w] or mate[v] == w:
                    continue
                if w == root or (mate[w] != -1 and parent[mate[w]] != -1):
                    stem = lowest_common_base(v, w)
                    in_blossom = [False] * n
                    mark_blossom_path(v, stem, w, in_blossom)
                    mark_blossom_path(w, stem, v, in_blossom)
                    for u in range(n):
                        if in_blossom[base[u]]:
                            base[u] = stem
                            if not in_tree[u]:
                                in_tree[u] = True
                                queue.append(u)
                elif parent[w] == -1:
                    parent[w] = v
                    if mate[w] == -1:
                        finish = w
                        break
                    in_tree[mate[w]] = True
                    queue.append(mate[w])
        if finish != -1:
            w = finish
            while w != -1:
                pw = parent[w]
                next_w = mate[pw]
                mate[w] = pw
                mate[pw] = w
                w = next_w
    return mate


def _hopcroft_karp_mate(
    n: int, left: list[int], adj: list[list[int]], mate: list[int] | None = None
) -> list[int]:
    """Maximum-matching mate array for a bipartite graph given one side.

    ``adj`` is indexed by every vertex; only the rows of ``left`` vertices
    are consulted.  Phases run BFS layering plus layered DFS augmentation,
    scanning vertices in increasing id.
    """
    INF = float("inf")
    if mate is None:
        mate = [-1] * n
    dist: dict[int, float] = {}

    def bfs() -> bool:
        queue = deque()
        for u in left:
            if mate[u] == -1:
                dist[u] = 0
                queue.append(u)
            else:
                dist[u] = INF
        found = False
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                m = mate[w]
                if m == -1:
                    found = True
                elif dist[m] == INF:
                    dist[m] = dist[u] + 1
                    queue.append(m)
        return found

    def dfs(u: int) -> bool:
        for w in adj[u]:
            m = mate[w]
            if m == -1 or (dist[m] == dist[u] + 1 and dfs(m)):
                mate[u] = w
                mate[w] = u
                return True
        dist[u] = INF
        return False

    while bfs():
        for u in left:
            if mate[u] == -1:
                dfs(u)
    return mate


def maximum_matching(g: Graph) -> MatchingReport:
    """A maximum matching with deterministic edge choice."""
    sides = bipartition(g)
    if sides is not None:
        adj = [sorted(_bits(g.rows[v])) for v in range(g.n)]
        mate = _hopcroft_karp_mate(g.n, sorted(sides.left), adj)
    else:
        mate = _blossom_mate(g)
    edges = frozenset(
        (v, mate[v]) for v in range(g.n) if mate[v] > v
    )
    mu = len(edges)
    from .stable_sets import stability_number

    return MatchingReport(
        mu=mu,
        edges=edges,
        is_perfect=2 * mu == g.n,
        is_ke=stability_number(g) + mu == g.n,
    )


def matching_number(g: Graph) -> int:
    """mu(g) without the report wrapper."""
    sides = bipartition(g)
    if sides is not None:
        adj = [sorted(_bits(g.rows[v])) for v in range(g.n)]
        mate = _hopcroft_karp_mate(g.n, sorted(sides.left), adj)
    else:
        mate = _blossom_mate(g)
    return sum(1 for v in range(g.n) if mate[v] > v)


def is_koenig_egervary(g: Graph) -> bool:
    """Whether the stability and matching numbers add up to the order."""
    from .stable_sets import stability_number

    return stability_number(g) + matching_number(g) == g.n


def can_match_into(g: Graph, a, s) -> tuple[bool, frozenset[int] | None]:
    """Saturating-matching query from ``a`` into ``s`` along edges of g.

    True when a matching using only (a, s) edges saturates ``a``.  On
    failure the second component is a Hall violator W, the a-vertices
    reachable from an unsaturated a-vertex by alternating paths; it
    satisfies |W| > |N(W) ∩ s|.  The two sets must be disjoint.
    """
    avs = _check_vertex_set(g, a)
    svs = _check_vertex_set(g, s)
    if avs & svs:
        raise ValueError("the two sides overlap")
    if not avs:
        return True, None
    smask = 0
    for v in svs:
        smask |= 1 << v
    adj: list[list[int]] = [[] for _ in range(g.n)]
    for u in avs:
        adj[u] = sorted(_bits(g.rows[u] & smask))
    left = sorted(avs)
    mate = _hopcroft_karp_mate(g.n, left, adj)
    if all(mate[u] != -1 for u in left):
        return True, None
    # alternating BFS from every unsaturated a-vertex
    reach = {u for u in left if mate[u] == -1}
    queue = deque(sorted(reach))
    seen_s: set[int] = set()
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if w in seen_s:
                continue
            seen_s.add(w)
            m = mate[w]
            if m != -1 and m not in reach:
                reach.add(m)
                queue.append(m)
    return False, frozenset(reach)


def hall_condition_on_core(g: Graph) -> tuple[bool, tuple[int, int]]:
    """Whether |core(g)| <= |N(core(g))|, with the two sizes as witness."""
    from .graph import neighborhood
    from .stable_sets import core

    c = core(g)
    nc = neighborhood(g, c)
    return len(c) <= len(nc), (len(c), len(nc))
