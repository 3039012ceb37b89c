"""Quasi-regularizability by two independent routes, plus canonical obstructions.

A graph is quasi-regularizable when its edges can carry non-negative integer
multiplicities that make the multigraph regular of nonzero degree;
equivalently, every stable set S satisfies |S| <= |N(S)|.  The enumeration
route checks that inequality directly; the polynomial route reduces it to a
perfect matching in the bipartite neighborhood-double graph.  The two must
agree everywhere, which the test suite enforces.
"""

from __future__ import annotations

from .graph import Graph, _bits
from .matching import _hopcroft_karp_mate
from .stable_sets import Obstruction, core, min_deficient_stable_set, stability_number


def is_quasi_regularizable_by_enumeration(
    g: Graph,
) -> tuple[bool, Obstruction | None]:
    """Stable-set enumeration route; exponential, desk scale only.

    Returns (answer, obstruction); the obstruction is the minimum deficient
    stable set when the answer is False.  The empty graph is not
    quasi-regularizable by convention (regularity of degree zero is
    excluded) and carries no obstruction.
    """
    if g.n == 0:
        return False, None
    obstruction = min_deficient_stable_set(g)
    return obstruction is None, obstruction


def is_quasi_regularizable(g: Graph) -> bool:
    """Polynomial route via the bipartite double graph.

    The double graph keeps two copies of the vertex set and joins u to the
    copy of v exactly when uv is an edge; the deficiency condition fails
    somewhere iff that bipartite graph misses a perfect matching
    (equivalently, g has no fractional perfect matching).
    """
    n = g.n
    if n == 0:
        return False
    if any(row == 0 for row in g.rows):
        return False
    # vertices 0..n-1 are the originals, n..2n-1 the primed copies
    adj: list[list[int]] = [[] for _ in range(2 * n)]
    for v in range(n):
        adj[v] = [w + n for w in _bits(g.rows[v])]
    mate = _hopcroft_karp_mate(2 * n, list(range(n)), adj)
    return all(mate[v] != -1 for v in range(n))


def canonical_obstruction(g: Graph) -> frozenset[int] | None:
    """A stable set S with |S| > |N(S)|, or None when none exists.

    When the stability number exceeds half the order the core itself is
    guaranteed deficient and is returned as the canonical witness;
    otherwise falls back to the minimum deficient stable set.
    """
    if 2 * stability_number(g) > g.n:
        return core(g)
    obstruction = min_deficient_stable_set(g)
    return obstruction.witness if obstruction is not None else None
