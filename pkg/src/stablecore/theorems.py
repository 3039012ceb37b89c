"""Executable premise/conclusion predicates over the stable-set structure.

Every statement the library is built around runs here as a total predicate:
``applicable`` records whether the premise held, ``holds`` whether the
conclusion followed (vacuously true when not applicable).  All statements
are proven, so any ``holds == False`` on any graph is an implementation bug
in this package, never new mathematics; the witness carries the computed
quantities needed to debug it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

from .graph import (
    Graph,
    Bipartition,
    bipartition,
    induced_subgraph,
    isolated_vertices,
    neighborhood,
    non_edges,
    with_edge,
)
from .matching import matching_number
from .quasi_reg import is_quasi_regularizable
from .stable_sets import (
    DEFAULT_OMEGA_CAP,
    core,
    core_complement_subgraph,
    core_size,
    enumerate_maximum_stable_sets,
    stability_number,
)

CLASSIFICATIONS = ("alpha0_plus", "alpha1_plus", "not_alpha_plus")


def _alpha_plus_violation(g: Graph, alpha: int) -> tuple[int, int] | None:
    """A missing edge whose addition lowers the stability number, if any.

    Checks the definition literally: every non-edge is added to a fresh
    graph and the stability number recomputed.
    """
    for u, v in non_edges(g):
        if stability_number(with_edge(g, u, v)) != alpha:
            return (u, v)
    return None


def check_alpha_plus_by_definition(g: Graph) -> bool:
    """Whether adding any single missing edge preserves the stability number."""
    return _alpha_plus_violation(g, stability_number(g)) is None


def classify(g: Graph) -> str:
    """Edge-insensitivity class by core size: 0, 1, or anything larger."""
    xi = core_size(g)
    if xi == 0:
        return "alpha0_plus"
    if xi == 1:
        return "alpha1_plus"
    return "not_alpha_plus"


@dataclass(frozen=True)
class TheoremVerdict:
    """Outcome of one predicate on one graph."""

    id: str
    applicable: bool
    holds: bool
    witness: dict | None = None

    def __post_init__(self):
        if not self.applicable and not self.holds:
            raise ValueError("vacuous verdicts must hold")


class _Facts:
    """Everything the predicate registry needs, computed once per graph."""

    def __init__(self, g: Graph, omega_cap: int = DEFAULT_OMEGA_CAP):
        self.g = g
        self.n = g.n
        self.alpha = stability_number(g)
        self.core = core(g)
        self.xi = len(self.core)
        self.ncore = neighborhood(g, self.core)
        self.isol = isolated_vertices(g)
        self.mu = matching_number(g)
        self.has_pm = 2 * self.mu == self.n
        self.is_ke = self.alpha + self.mu == self.n
        self.qr = is_quasi_regularizable(g)
        self.bip: Bipartition | None = bipartition(g)
        self.omega, truncated = enumerate_maximum_stable_sets(g, omega_cap)
        if truncated:
            raise ValueError(
                "maximum-stable-set family exceeds the enumeration cap; "
                "the predicate suite needs the complete family"
            )
        self.h_graph, self.h_map = core_complement_subgraph(g)
        self.alpha_h = stability_number(self.h_graph)
        self.core_h = core(self.h_graph)
        self.omega_h, _ = enumerate_maximum_stable_sets(self.h_graph, omega_cap)
        self.alpha_plus_violation = _alpha_plus_violation(g, self.alpha)

    def base_witness(self) -> dict:
        return {
            "n": self.n,
            "alpha": self.alpha,
            "mu": self.mu,
            "xi": self.xi,
            "core": sorted(self.core),
            "isolated": sorted(self.isol),
        }


def _verdict(pid: str, applicable: bool, holds: bool, facts: _Facts, extra: dict | None = None) -> TheoremVerdict:
    if not applicable:
        return TheoremVerdict(pid, False, True)
    witness = None
    if not holds:
        witness = facts.base_witness()
        if extra:
            witness.update(extra)
    return TheoremVerdict(pid, True, holds, witness)


def _t1(f: _Facts) -> TheoremVerdict:
    # core size at most 1 is equivalent to edge-addition insensitivity
    by_definition = f.alpha_plus_violation is None
    holds = (f.xi <= 1) == by_definition
    extra = {"violating_edge": list(f.alpha_plus_violation) if f.alpha_plus_violation else None}
    return _verdict("T1", True, holds, f, extra)


def _p9(f: _Facts) -> TheoremVerdict:
    applicable = f.xi <= 1 and not f.isol
    return _verdict("P9", applicable, f.qr, f, {"quasi_regularizable": f.qr})


def _c2(f: _Facts) -> TheoremVerdict:
    applicable = f.xi <= 1 and not f.isol
    return _verdict("C2", applicable, 2 * f.alpha <= f.n, f)


def _p4(f: _Facts) -> TheoremVerdict:
    applicable = 2 * f.alpha > f.n
    if not applicable:
        return _verdict("P4", False, True, f)
    first = f.xi <= 1
    second = f.xi == 1
    if len(f.isol) == 1:
        v = next(iter(f.isol))
        rest, _ = induced_subgraph(f.g, [u for u in range(f.n) if u != v])
        third = core_size(rest) == 0 and 2 * stability_number(rest) == f.n - 1
    else:
        third = False
    holds = first == second == third
    return _verdict("P4", True, holds, f, {"equivalents": [first, second, third]})


def _c5(f: _Facts) -> TheoremVerdict:
    applicable = 2 * f.alpha > f.n and f.xi == 1
    return _verdict("C5", applicable, f.n % 2 == 1, f)


def _t3(f: _Facts) -> TheoremVerdict:
    applicable = 2 * f.alpha > f.n
    holds = (
        (len(f.isol) == 1 or f.xi >= 2)
        and (f.xi != 1 or len(f.isol) == 1)
        and f.xi != 0
    )
    return _verdict("T3", applicable, holds if applicable else True, f)


def _c4h(f: _Facts) -> TheoremVerdict:
    applicable = 2 * f.alpha > f.n
    return _verdict("C4h", applicable, f.xi >= 1 if applicable else True, f)


def _p6(f: _Facts) -> TheoremVerdict:
    h, relabel = f.h_graph, f.h_map
    kept = set(relabel)
    no_isolated = not isolated_vertices(h)
    alpha_drop = f.alpha_h == f.alpha - f.xi
    projected = {frozenset(relabel[v] for v in s if v in kept) for s in f.omega}
    omega_match = projected == set(f.omega_h)
    core_empty = not f.core_h
    seen_outside = True
    for s in f.omega:
        ns = neighborhood(f.g, s)
        if len(s - f.core) > len(ns - f.ncore):
            seen_outside = False
            break
    checks = {
        "no_isolated": no_isolated,
        "alpha_drop": alpha_drop,
        "omega_projection": omega_match,
        "core_empty": core_empty,
        "outside_inequality": seen_outside,
    }
    return _verdict("P6", True, all(checks.values()), f, {"checks": checks})


def _t4(f: _Facts) -> TheoremVerdict:
    applicable = 2 * f.alpha > f.n
    holds = f.xi > len(f.ncore) if applicable else True
    return _verdict("T4", applicable, holds, f, {"core_neighborhood": sorted(f.ncore)})


def _p7(f: _Facts, k: int) -> TheoremVerdict:
    # scoped to graphs without isolated vertices: the bound needs the core
    # to have at least one neighbour, which isolated core vertices break
    # (two isolated vertices alone already violate the unscoped version)
    pid = f"P7.k{k}"
    applicable = k >= 2 and not f.isol and 2 * f.alpha > f.n and f.xi <= k
    holds = 2 * f.alpha <= f.n + k - 1 if applicable else True
    return _verdict(pid, applicable, holds, f, {"k": k})


def _t5(f: _Facts, k: int) -> TheoremVerdict:
    # same isolate-free scoping as P7, on which the even case rests
    pid = f"T5.k{k}"
    applicable = not f.isol and 2 * f.alpha > f.n + k - 1
    if not applicable:
        return _verdict(pid, False, True, f)
    bound = k + 2 if (f.n + k - 1) % 2 == 0 else k + 1
    return _verdict(pid, True, f.xi >= bound, f, {"k": k, "bound": bound})


def _l4c3(f: _Facts) -> TheoremVerdict:
    applicable = f.is_ke
    if not applicable:
        return _verdict("L4C3", False, True, f)
    checks = {
        "alpha_ge_mu": f.alpha >= f.mu,
        "alpha_ge_half": 2 * f.alpha >= f.n,
        "half_iff_pm": (2 * f.alpha == f.n) == f.has_pm,
        "isolated_forces_strict": not f.isol or 2 * f.alpha > f.n,
    }
    return _verdict("L4C3", True, all(checks.values()), f, {"checks": checks})


def _p5t6(f: _Facts) -> TheoremVerdict:
    applicable = f.is_ke
    if not applicable:
        return _verdict("P5T6", False, True, f)
    over_half = 2 * f.alpha > f.n
    no_pm = not f.has_pm
    not_qr = not f.qr
    deficient_core = f.xi > len(f.ncore)
    holds = over_half == no_pm == not_qr == deficient_core
    return _verdict(
        "P5T6", True, holds, f,
        {"equivalents": [over_half, no_pm, not_qr, deficient_core]},
    )


def _sides_can_split_omega(f: _Facts) -> bool:
    """Whether some bipartition has both sides maximum stable."""
    if f.n != 2 * f.alpha:
        return False
    bip = f.bip
    assert bip is not None
    if len(bip.left) == f.alpha:
        return True
    # component side swaps: subset-sum over per-component side sizes
    reachable = 1
    for side0, side1 in bip.components:
        reachable = (reachable << len(side0)) | (reachable << len(side1))
    return bool(reachable >> f.alpha & 1)


def _p8(f: _Facts) -> TheoremVerdict:
    applicable = f.bip is not None and len(f.isol) != 1
    if not applicable:
        return _verdict("P8", False, True, f)
    holds = f.xi >= 2 or (f.xi == 0 and _sides_can_split_omega(f))
    return _verdict("P8", True, holds, f)


def _tb(f: _Facts) -> TheoremVerdict:
    applicable = f.bip is not None and f.xi == 1
    holds = len(f.isol) == 1 and f.n % 2 == 1 if applicable else True
    return _verdict("TB", applicable, holds, f)


def _c6(f: _Facts) -> TheoremVerdict:
    applicable = f.bip is not None and len(f.isol) != 1
    if not applicable:
        return _verdict("C6", False, True, f)
    edge_insensitive = f.xi <= 1
    omega_set = set(f.omega)
    everything = frozenset(range(f.n))
    partitioned = any(everything - s in omega_set for s in f.omega)
    holds = edge_insensitive == f.has_pm == partitioned
    return _verdict(
        "C6", True, holds, f,
        {"equivalents": [edge_insensitive, f.has_pm, partitioned]},
    )


def _pb(f: _Facts) -> TheoremVerdict:
    applicable = f.bip is not None and len(f.isol) != 1
    holds = (2 * f.alpha > f.n) == (f.xi >= 2) if applicable else True
    return _verdict("PB", applicable, holds, f)


def _mix(f: _Facts) -> TheoremVerdict:
    applicable = f.n >= 1
    holds = f.n // 2 + 1 <= f.alpha + f.mu <= f.n if applicable else True
    return _verdict("MIX", applicable, holds, f)


_PLAIN_PREDICATES: tuple[tuple[str, Callable[[_Facts], TheoremVerdict]], ...] = (
    ("T1", _t1),
    ("P9", _p9),
    ("C2", _c2),
    ("P4", _p4),
    ("C5", _c5),
    ("T3", _t3),
    ("C4h", _c4h),
    ("P6", _p6),
    ("T4", _t4),
    ("L4C3", _l4c3),
    ("P5T6", _p5t6),
    ("P8", _p8),
    ("TB", _tb),
    ("C6", _c6),
    ("PB", _pb),
    ("MIX", _mix),
)

# (base id, evaluator, smallest meaningful k)
_K_PREDICATES: tuple[tuple[str, Callable[[_Facts, int], TheoremVerdict], int], ...] = (
    ("P7", _p7, 2),
    ("T5", _t5, 1),
)

DEFAULT_K_RANGE = range(1, 5)


def predicate_ids(k_range: Iterable[int] = DEFAULT_K_RANGE) -> list[str]:
    """The stable verdict ids produced by :func:`run_suite`."""
    ids = [pid for pid, _ in _PLAIN_PREDICATES]
    for base, _, min_k in _K_PREDICATES:
        ids.extend(f"{base}.k{k}" for k in k_range if k >= min_k)
    return sorted(ids)


def run_suite(g: Graph, k_range: Iterable[int] = DEFAULT_K_RANGE) -> list[TheoremVerdict]:
    """Evaluate every predicate on ``g``, sorted by predicate id."""
    ks = sorted(set(k_range))
    if any(k < 1 for k in ks):
        raise ValueError("k values must be positive")
    facts = _Facts(g)
    verdicts = [fn(facts) for _, fn in _PLAIN_PREDICATES]
    for _, fn, min_k in _K_PREDICATES:
        verdicts.extend(fn(facts, k) for k in ks if k >= min_k)
    verdicts.sort(key=lambda v: v.id)
    return verdicts
