"""Exact stable-set structure: stability number, maximum-set family, core.

Everything here is exponential-time exact computation aimed at small graphs
(n up to roughly 20 for single queries, n up to 12 for corpus sweeps).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .graph import Graph, _bits, _check_vertex_set, _mask_of, induced_subgraph

DEFAULT_OMEGA_CAP = 10**6


def _alpha_in_mask(rows: tuple[int, ...], mask: int) -> int:
    """Maximum stable-set size inside the induced vertex mask.

    Branch and bound on bitmasks: vertices of degree 0 or 1 in the current
    subproblem are taken greedily (always safe for maximum stable sets),
    otherwise the search branches on a maximum-degree vertex; subproblems
    whose popcount cannot beat the incumbent are pruned.
    """
    best = 0

    def dfs(m: int, size: int) -> None:
        nonlocal best
        while m:
            if size + m.bit_count() <= best:
                return
            scan = m
            pivot = -1
            pivot_deg = -1
            reduced = False
            while scan:
                lsb = scan & -scan
                v = lsb.bit_length() - 1
                scan ^= lsb
                nb = rows[v] & m
                deg = nb.bit_count()
                if deg == 0:
                    size += 1
                    m ^= lsb
                    reduced = True
                    break
                if deg == 1:
                    size += 1
                    m &= ~(lsb | nb)
                    reduced = True
                    break
                if deg > pivot_deg:
                    pivot_deg = deg
                    pivot = v
            if reduced:
                continue
            bit = 1 << pivot
            dfs(m & ~(rows[pivot] | bit), size + 1)
            m ^= bit  # exclude branch continues in this frame
        if size > best:
            best = size

    dfs(mask, 0)
    return best


def stability_number(g: Graph) -> int:
    """Size of a maximum stable set."""
    return _alpha_in_mask(g.rows, (1 << g.n) - 1)


def is_stable_set(g: Graph, vertices) -> bool:
    vs = _check_vertex_set(g, vertices)
    m = _mask_of(vs)
    return all(g.rows[v] & m == 0 for v in vs)


def enumerate_maximum_stable_sets(
    g: Graph, cap: int = DEFAULT_OMEGA_CAP
) -> tuple[list[frozenset[int]], bool]:
    """All maximum stable sets in lexicographic order of sorted vertex lists.

    Returns (sets, truncated); at most ``cap`` sets are collected and the
    flag reports whether more exist.  The empty graph has the single
    maximum stable set {} by convention.
    """
    if cap < 1:
        raise ValueError("cap must be positive")
    rows = g.rows
    full = (1 << g.n) - 1
    target = _alpha_in_mask(rows, full)
    memo: dict[int, int] = {}

    def alpha_of(mask: int) -> int:
        cached = memo.get(mask)
        if cached is None:
            cached = memo[mask] = _alpha_in_mask(rows, mask)
        return cached

    out: list[frozenset[int]] = []
    truncated = False

    def dfs(allowed: int, chosen: list[int], size: int) -> None:
        nonlocal truncated
        if truncated:
            return
        if size == target:
            if len(out) >= cap:
                truncated = True
            else:
                out.append(frozenset(chosen))
            return
        if size + alpha_of(allowed) < target:
            return
        lsb = allowed & -allowed
        v = lsb.bit_length() - 1
        chosen.append(v)
        dfs(allowed & ~(rows[v] | lsb), chosen, size + 1)
        chosen.pop()
        dfs(allowed ^ lsb, chosen, size)

    dfs(full, [], 0)
    return out, truncated


def core(g: Graph) -> frozenset[int]:
    """Intersection of all maximum stable sets.

    Computed by the decrement test: v is in the core exactly when removing
    v lowers the stability number.  The equivalence with intersecting the
    enumerated family is pinned by the oracle test suite.
    """
    full = (1 << g.n) - 1
    alpha = _alpha_in_mask(g.rows, full)
    return frozenset(
        v for v in range(g.n) if _alpha_in_mask(g.rows, full ^ (1 << v)) < alpha
    )


def core_size(g: Graph) -> int:
    """|core(g)|."""
    return len(core(g))


@dataclass(frozen=True)
class Obstruction:
    """A stable set with more members than neighbours."""

    witness: frozenset[int]
    deficiency: int


def min_deficient_stable_set(g: Graph) -> Obstruction | None:
    """The smallest stable set S with |S| > |N(S)|, lexicographically least
    among ties, or None when no stable set is deficient."""
    rows = g.rows
    full = (1 << g.n) - 1
    best: tuple[int, tuple[int, ...]] | None = None

    chosen: list[int] = []

    def dfs(allowed: int, nbrs: int) -> None:
        nonlocal best
        # later sets of equal size are lexicographically greater, so only
        # strictly smaller extensions can improve the incumbent
        if best is not None and len(chosen) + 1 >= best[0]:
            return
        scan = allowed
        while scan:
            lsb = scan & -scan
            v = lsb.bit_length() - 1
            scan ^= lsb
            chosen.append(v)
            new_nbrs = nbrs | rows[v]
            if len(chosen) > new_nbrs.bit_count() and (
                best is None or len(chosen) < best[0]
            ):
                best = (len(chosen), tuple(chosen))
            dfs(scan & ~rows[v], new_nbrs)
            chosen.pop()
            if best is not None and len(chosen) + 1 >= best[0]:
                return

    dfs(full, 0)
    if best is None:
        return None
    size, witness = best
    m = 0
    for v in witness:
        m |= rows[v]
    return Obstruction(frozenset(witness), size - m.bit_count())


def _maximal_stable_sets(rows: tuple[int, ...], within: int) -> Iterator[int]:
    """Maximal stable sets of the subgraph induced on ``within``, as masks.

    Bron-Kerbosch with pivoting, run on the complement adjacency.
    """
    comp = {v: within & ~(rows[v] | (1 << v)) for v in _bits(within)}

    def expand(r: int, p: int, x: int) -> Iterator[int]:
        if p == 0 and x == 0:
            yield r
            return
        pivot = -1
        pivot_cover = -1
        for u in _bits(p | x):
            cover = (p & comp[u]).bit_count()
            if cover > pivot_cover:
                pivot_cover = cover
                pivot = u
        for v in _bits(p & ~comp[pivot]):
            bit = 1 << v
            yield from expand(r | bit, p & comp[v], x & comp[v])
            p ^= bit
            x |= bit

    yield from expand(0, within, 0)


def is_maximum_stable_set(g: Graph, s) -> tuple[bool, frozenset[int] | None]:
    """The matched-into maximality criterion for a stable set.

    ``s`` is maximum exactly when every stable set disjoint from it can be
    matched into it.  Vertices outside N[s] fail immediately as singletons;
    otherwise every maximal stable subset of N(s) must admit a matching
    into s (matchability is inherited by subsets).  On failure the second
    component is a violating stable set W with |W| > |N(W) ∩ s|.

    Raises ValueError when ``s`` is not stable.
    """
    from .matching import can_match_into

    vs = _check_vertex_set(g, s)
    if not is_stable_set(g, vs):
        raise ValueError("input set is not stable")
    rows = g.rows
    full = (1 << g.n) - 1
    smask = _mask_of(vs)
    nbr = 0
    for v in vs:
        nbr |= rows[v]
    outside = full & ~(smask | nbr)
    if outside:
        v = (outside & -outside).bit_length() - 1
        return False, frozenset({v})
    for amask in _maximal_stable_sets(rows, nbr & ~smask):
        ok, violator = can_match_into(g, frozenset(_bits(amask)), vs)
        if not ok:
            return False, violator
    return True, None


def core_complement_subgraph(g: Graph) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced on the vertices outside N[core(g)], with relabeling."""
    c = core(g)
    closed = set(c)
    for v in c:
        closed.update(_bits(g.rows[v]))
    keep = [v for v in range(g.n) if v not in closed]
    return induced_subgraph(g, keep)


@dataclass(frozen=True)
class StableReport:
    """Summary of the maximum-stable-set structure of one graph."""

    alpha: int
    core: frozenset[int]
    xi: int
    omega: tuple[frozenset[int], ...] | None = None
    omega_count: int | None = None
    omega_truncated: bool = False


def stable_report(
    g: Graph, *, enumerate_omega: bool = False, omega_cap: int = DEFAULT_OMEGA_CAP
) -> StableReport:
    c = core(g)
    if enumerate_omega:
        omega, truncated = enumerate_maximum_stable_sets(g, omega_cap)
        return StableReport(
            alpha=stability_number(g),
            core=c,
            xi=len(c),
            omega=tuple(omega),
            omega_count=len(omega),
            omega_truncated=truncated,
        )
    return StableReport(alpha=stability_number(g), core=c, xi=len(c))
