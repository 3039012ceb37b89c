"""Independent brute-force oracles the production solvers are checked against.

Everything here works by exhaustion over vertex subsets or edge subsets and
never shares code with the solvers under test.
"""

from __future__ import annotations

from stablecore.graph import Graph


def _members(mask: int, n: int) -> frozenset[int]:
    return frozenset(v for v in range(n) if mask >> v & 1)


def is_stable_mask(g: Graph, mask: int) -> bool:
    m = mask
    while m:
        lsb = m & -m
        v = lsb.bit_length() - 1
        if g.rows[v] & mask:
            return False
        m ^= lsb
    return True


def alpha_by_subsets(g: Graph) -> int:
    """Stability number by dynamic programming over all vertex subsets."""
    n = g.n
    rows = g.rows
    table = [0] * (1 << n)
    for mask in range(1, 1 << n):
        lsb = mask & -mask
        v = lsb.bit_length() - 1
        without = mask ^ lsb
        table[mask] = max(table[without], 1 + table[mask & ~(rows[v] | lsb)])
    return table[(1 << n) - 1]


def omega_by_subsets(g: Graph) -> list[frozenset[int]]:
    """All maximum stable sets, by checking every subset."""
    n = g.n
    target = alpha_by_subsets(g)
    out = [
        _members(mask, n)
        for mask in range(1 << n)
        if mask.bit_count() == target and is_stable_mask(g, mask)
    ]
    return sorted(out, key=sorted)


def core_by_omega(g: Graph) -> frozenset[int]:
    inter: frozenset[int] | None = None
    for s in omega_by_subsets(g):
        inter = s if inter is None else inter & s
    return inter if inter is not None else frozenset()


def stable_sets_by_subsets(g: Graph) -> list[frozenset[int]]:
    return [
        _members(mask, n=g.n)
        for mask in range(1 << g.n)
        if is_stable_mask(g, mask)
    ]


def mu_by_subsets(g: Graph) -> int:
    """Matching number by dynamic programming over covered-vertex subsets."""
    n = g.n
    rows = g.rows
    table = [0] * (1 << n)
    for mask in range(1, 1 << n):
        lsb = mask & -mask
        v = lsb.bit_length() - 1
        rest = mask ^ lsb
        best = table[rest]  # v stays unmatched
        nb = rows[v] & rest
        while nb:
            wb = nb & -nb
            best = max(best, 1 + table[rest ^ wb])
            nb ^= wb
        table[mask] = best
    return table[(1 << n) - 1]


def can_saturate_by_enumeration(g: Graph, a: frozenset[int], s: frozenset[int]) -> bool:
    """Whether some matching inside the (a, s) edges saturates a; brute force."""
    a_list = sorted(a)

    def extend(i: int, used_s: frozenset[int]) -> bool:
        if i == len(a_list):
            return True
        u = a_list[i]
        for w in sorted(g.neighbors(u) & s - used_s):
            if extend(i + 1, used_s | {w}):
                return True
        return False

    return extend(0, frozenset())


def deficient_stable_sets(g: Graph) -> list[frozenset[int]]:
    """All stable sets S with |S| > |N(S)|, smallest first then lexicographic."""
    out = []
    for s in stable_sets_by_subsets(g):
        nbrs = frozenset().union(*(g.neighbors(v) for v in s)) if s else frozenset()
        if len(s) > len(nbrs):
            out.append(s)
    return sorted(out, key=lambda s: (len(s), sorted(s)))
