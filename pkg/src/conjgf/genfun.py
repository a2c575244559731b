"""The two core computations: A_G(t) from the centralizer histogram and
B_G(t) from the centralizer recursion, plus coefficient extraction,
normalization and the equivalence predicates.

A_G(t) counts simultaneous-conjugacy orbits of n-tuples: the n-th series
coefficient is (1/|G|) sum_g |Z_G(g)|^n.  B_G(t) does the same for pairwise
commuting n-tuples via the recursion
    (1 - |Z(G)| t) B_G(t) = 1 + sum over non-central classes of t * B_{Z_G(x)}(t),
whose base case is an abelian centralizer H with B_H = 1/(1 - |H| t).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .analysis import (
    center_elements,
    centralizer_elements,
    conjugacy_data,
    group_fingerprint,
)
from .errors import RecursionDepthExceeded
from .groups import GroupTable, induced_table, is_abelian_subset
from .ratfun import PartialFractions, RationalGF, partial_fractions

MAX_B_DEPTH = 64


def a_of_t(g: GroupTable) -> RationalGF:
    """A_G(t) = (1/|G|) sum_m z_m / (1 - m t), combined and reduced."""
    hist = conjugacy_data(g).z_histogram
    acc = RationalGF.zero()
    for m in sorted(hist):
        acc = acc + RationalGF.simple(hist[m], m)
    return acc * Fraction(1, g.order)


def alpha_coefficient(g: GroupTable, n: int) -> int:
    """Number of simultaneous-conjugacy orbits on n-tuples (orbit counting lemma)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    hist = conjugacy_data(g).z_histogram
    total = sum(count * m**n for m, count in hist.items())
    if total % g.order:
        raise ArithmeticError("orbit count sum is not divisible by |G|; table is corrupt")
    return total // g.order


@dataclass
class BCache:
    """Cross-group memo for the B recursion, keyed by cheap fingerprints.

    Fingerprints are not complete isomorphism invariants, so by default a hit
    is only trusted for abelian groups (where B depends on the order alone);
    set trust_nonabelian to reuse entries across fingerprint-equal non-abelian
    groups at your own risk.
    """

    trust_nonabelian: bool = False
    entries: dict = field(default_factory=dict)

    def lookup(self, fingerprint, is_abelian: bool):
        if is_abelian or self.trust_nonabelian:
            return self.entries.get(fingerprint)
        return None

    def store(self, fingerprint, value) -> None:
        self.entries.setdefault(fingerprint, value)


def b_of_t(g: GroupTable, cache: BCache | None = None, stats: dict | None = None) -> RationalGF:
    """B_G(t) via the centralizer recursion, exact and reduced."""
    if cache is None and stats is None:
        cached = g._cache.get("b_of_t")
        if cached is None:
            cached = _b_recurse(g, BCache(), 0, None)
            g._cache.setdefault("b_of_t", cached)
        return cached
    return _b_recurse(g, cache if cache is not None else BCache(), 0, stats)


def _b_recurse(g: GroupTable, cache: BCache, depth: int, stats: dict | None) -> RationalGF:
    if depth > MAX_B_DEPTH:
        raise RecursionDepthExceeded(
            "centralizer chain failed to shrink; the table must be corrupt"
        )
    if g.is_abelian:
        return RationalGF.simple(1, g.order)
    fp = group_fingerprint(g)
    hit = cache.lookup(fp, is_abelian=False)
    if hit is not None:
        return hit
    cd = conjugacy_data(g)
    zsize = len(center_elements(g))
    if stats is not None:
        stats["groups_recursed"] = stats.get("groups_recursed", 0) + 1
        stats["classes_processed"] = stats.get("classes_processed", 0) + cd.num_classes
    acc = RationalGF.one()
    by_elements: dict[tuple[int, ...], RationalGF] = {}
    for rep, csize in zip(cd.representatives, cd.centralizer_sizes):
        if csize == g.order:  # central element
            continue
        elems = centralizer_elements(g, rep)
        bh = by_elements.get(elems)
        if bh is None:
            if is_abelian_subset(g, elems):
                bh = RationalGF.simple(1, len(elems))
            else:
                if stats is not None:
                    stats["subgroups_built"] = stats.get("subgroups_built", 0) + 1
                sub = induced_table(g, elems, label=f"{g.label}|Z({rep})")
                bh = _b_recurse(sub, cache, depth + 1, stats)
            by_elements[elems] = bh
        acc = acc + bh.times_t()
    result = acc.over_linear(zsize)
    cache.store(fp, result)
    return result


def beta_coefficient(g: GroupTable, n: int, cache: BCache | None = None) -> int:
    """Number of simultaneous-conjugacy orbits on commuting n-tuples."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    value = b_of_t(g, cache).coefficient(n)
    if value.denominator != 1:
        raise ArithmeticError("beta coefficient is not an integer; recursion is corrupt")
    return int(value)


def normalize(f: RationalGF, order: int) -> RationalGF:
    """Substitute t -> t/order; poles m become exact rationals m/order."""
    if order < 1:
        raise ValueError("order must be positive")
    return f.scale_t(Fraction(1, order))


def gf_equal(f: RationalGF, h: RationalGF) -> bool:
    """Exact equality of reduced forms."""
    return f == h


def a_equivalent(g: GroupTable, h: GroupTable) -> bool:
    return gf_equal(a_of_t(g), a_of_t(h))


def b_equivalent(g: GroupTable, h: GroupTable, cache: BCache | None = None) -> bool:
    return gf_equal(b_of_t(g, cache), b_of_t(h, cache))


__all__ = [
    "BCache",
    "PartialFractions",
    "a_equivalent",
    "a_of_t",
    "alpha_coefficient",
    "b_equivalent",
    "b_of_t",
    "beta_coefficient",
    "gf_equal",
    "normalize",
    "partial_fractions",
]
