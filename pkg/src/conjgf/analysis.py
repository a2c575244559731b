"""Structural invariants of a group table.

Conjugacy classes, centralizers, center, derived subgroup, lower central
series, the AC-group test and the maximal-class profile.  Everything here is
a pure function of an immutable GroupTable; results are memoized write-once
on the table's private cache.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NotPrimePower
from .groups import (
    GroupTable,
    Subgroup,
    is_abelian_subset,
    normal_closure,
    quotient_table,
    subgroup_closure,
)
from .pcp import is_prime


@dataclass(frozen=True)
class ClassData:
    """Conjugacy classes with centralizer sizes and the z_m histogram.

    z_histogram maps a centralizer size m to the number of *elements* whose
    centralizer has exactly m elements; the class equation is the sorted
    multiset of class sizes.
    """

    classes: tuple[tuple[int, ...], ...]
    representatives: tuple[int, ...]
    centralizer_sizes: tuple[int, ...]
    z_histogram: dict[int, int]
    class_equation: tuple[int, ...]

    @property
    def num_classes(self) -> int:
        return len(self.classes)


def conjugacy_data(g: GroupTable) -> ClassData:
    """Partition the elements into conjugacy classes (order: smallest member)."""
    cached = g._cache.get("class_data")
    if cached is not None:
        return cached
    moves = [g.conj_by(s) for s in g.generators]
    seen = np.zeros(g.order, dtype=bool)
    classes: list[tuple[int, ...]] = []
    for x in range(g.order):
        if seen[x]:
            continue
        orbit = {x}
        frontier = [x]
        seen[x] = True
        while frontier:
            nxt = []
            for y in frontier:
                for mv in moves:
                    z = int(mv[y])
                    if not seen[z]:
                        seen[z] = True
                        orbit.add(z)
                        nxt.append(z)
            frontier = nxt
        classes.append(tuple(sorted(orbit)))
    reps = tuple(c[0] for c in classes)
    cent_sizes = tuple(g.order // len(c) for c in classes)
    hist: dict[int, int] = {}
    for c, m in zip(classes, cent_sizes):
        hist[m] = hist.get(m, 0) + len(c)
    data = ClassData(
        classes=tuple(classes),
        representatives=reps,
        centralizer_sizes=cent_sizes,
        z_histogram=hist,
        class_equation=tuple(sorted(len(c) for c in classes)),
    )
    g._cache.setdefault("class_data", data)
    return data


def centralizer_elements(g: GroupTable, x: int) -> tuple[int, ...]:
    mask = g.mul[:, x] == g.mul[x, :]
    return tuple(int(v) for v in np.nonzero(mask)[0])


def centralizer(g: GroupTable, x: int) -> Subgroup:
    """All elements commuting with x."""
    return Subgroup(g, centralizer_elements(g, x))


def center_elements(g: GroupTable) -> tuple[int, ...]:
    cached = g._cache.get("center")
    if cached is not None:
        return cached
    mask = np.ones(g.order, dtype=bool)
    for s in g.generators:
        mask &= g.mul[:, s] == g.mul[s, :]
    elems = tuple(int(v) for v in np.nonzero(mask)[0])
    g._cache.setdefault("center", elems)
    return elems


def center(g: GroupTable) -> Subgroup:
    """Intersection of all centralizers."""
    return Subgroup(g, center_elements(g))


def derived_subgroup(g: GroupTable) -> Subgroup:
    """Normal closure of the commutators of the generators."""
    cached = g._cache.get("derived")
    if cached is None:
        seed = {g.commutator(s, t) for s in g.generators for t in g.generators}
        cached = normal_closure(g, seed)
        g._cache.setdefault("derived", cached)
    return Subgroup(g, cached)


def lower_central_series(g: GroupTable) -> list[Subgroup]:
    """gamma_1 = G, gamma_{i+1} = [gamma_i, G]; stops once the series is stable."""
    cached = g._cache.get("lcs")
    if cached is None:
        terms: list[tuple[int, ...]] = [tuple(range(g.order))]
        while True:
            cur = np.asarray(terms[-1], dtype=np.intp)
            seed: set[int] = set()
            for s in g.generators:
                left = g.mul[g.inv[cur], g.inv[s]]
                seed.update(int(v) for v in g.mul[left, g.mul[cur, s]])
            nxt = normal_closure(g, seed)
            if nxt == terms[-1]:
                break
            terms.append(nxt)
        cached = tuple(terms)
        g._cache.setdefault("lcs", cached)
    return [Subgroup(g, t) for t in cached]


def nilpotency_class(g: GroupTable) -> int | None:
    """Length of the lower central series, or None if it stabilizes above 1."""
    series = lower_central_series(g)
    if len(series[-1].elements) != 1:
        return None
    return len(series) - 1


def element_orders(g: GroupTable) -> np.ndarray:
    cached = g._cache.get("element_orders")
    if cached is None:
        orders = np.ones(g.order, dtype=np.int64)
        cur = np.arange(g.order)
        remaining = cur != 0
        k = 1
        while remaining.any():
            cur = g.mul[cur, np.arange(g.order)]
            k += 1
            newly_done = remaining & (cur == 0)
            orders[newly_done] = k
            remaining &= cur != 0
        g._cache.setdefault("element_orders", orders)
        cached = orders
    return cached


def exponent(g: GroupTable) -> int:
    return int(math.lcm(*(int(v) for v in np.unique(element_orders(g)))))


def group_fingerprint(g: GroupTable) -> tuple:
    """Cheap isomorphism invariants (not a complete isomorphism test)."""
    cd = conjugacy_data(g)
    orders = element_orders(g)
    vals, counts = np.unique(orders, return_counts=True)
    order_hist = tuple((int(v), int(c)) for v, c in zip(vals, counts))
    return (g.order, g.is_abelian, exponent(g), cd.class_equation, order_hist)


def is_ac_group(g: GroupTable) -> bool:
    """True iff every non-central element has an abelian centralizer."""
    zset = set(center_elements(g))
    for rep in conjugacy_data(g).representatives:
        if rep in zset:
            continue
        if not is_abelian_subset(g, centralizer_elements(g, rep)):
            return False
    return True


def _p_log(order: int, p: int) -> int:
    m = 0
    n = order
    while n % p == 0:
        n //= p
        m += 1
    if n != 1:
        raise NotPrimePower(f"order {order} is not a power of {p}")
    return m


def frattini_elements(g: GroupTable, p: int) -> tuple[int, ...]:
    """Frattini subgroup of a p-group: closure of commutators and p-th powers."""
    pw = np.arange(g.order)
    for _ in range(p - 1):
        pw = g.mul[pw, np.arange(g.order)]
    seed = set(int(v) for v in pw) | set(derived_subgroup(g).elements)
    return subgroup_closure(g, seed)


def maximal_subgroups(g: GroupTable, p: int) -> list[Subgroup]:
    """All index-p subgroups of a p-group: hyperplane preimages of G/Frattini."""
    _p_log(g.order, p)
    if g.order == 1:
        return []
    frat = frattini_elements(g, p)
    q, _reps, coset_of = quotient_table(g, frat)
    basis: list[int] = []
    span = {0}
    for x in range(1, q.order):
        if x not in span:
            basis.append(x)
            span = set(subgroup_closure(q, span | {x}))
    k = len(basis)
    coords = np.zeros((q.order, k), dtype=np.int64)

    def fill(idx: int, elem: int, coord: list[int]) -> None:
        if idx == k:
            coords[elem] = coord
            return
        cur = elem
        for c in range(p):
            fill(idx + 1, cur, coord + [c])
            cur = q.mul_index(cur, basis[idx])

    fill(0, 0, [])
    subs: list[Subgroup] = []
    for functional in _unit_functionals(p, k):
        lam = np.asarray(functional, dtype=np.int64)
        in_plane = (coords @ lam) % p == 0
        members = np.nonzero(in_plane[coset_of])[0]
        subs.append(Subgroup(g, tuple(int(v) for v in members)))
    return subs


def _unit_functionals(p: int, k: int):
    """Nonzero functionals on F_p^k up to scalar (first nonzero entry = 1)."""
    from itertools import product

    for vec in product(range(p), repeat=k):
        nz = next((i for i, v in enumerate(vec) if v), None)
        if nz is not None and vec[nz] == 1:
            yield vec


def has_abelian_maximal_subgroup(g: GroupTable, p: int) -> bool:
    return any(sub.is_abelian for sub in maximal_subgroups(g, p))


@dataclass(frozen=True)
class MaximalClassProfile:
    """Standard structural data of a p-group of maximal class.

    P_series is [P_0, ..., P_m] with P_1 the common 2-step centralizer and
    P_i = gamma_i(G) for i >= 2.  The non-boolean fields are None when the
    group is not of maximal class.
    """

    is_maximal_class: bool
    p: int
    m: int
    nilpotency_class: int
    P_series: tuple[Subgroup, ...] | None
    degree_of_commutativity_positive: bool | None
    has_abelian_maximal_subgroup: bool | None
    P1_P3_commute: bool | None


def _commute_between(g: GroupTable, a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    A = np.asarray(a, dtype=np.intp)
    B = np.asarray(b, dtype=np.intp)
    return bool(np.array_equal(g.mul[np.ix_(A, B)], g.mul[np.ix_(B, A)].T))


def _commutator_set(g: GroupTable, a: tuple[int, ...], b: tuple[int, ...]) -> set[int]:
    out: set[int] = set()
    arr = np.asarray(a, dtype=np.intp)
    for y in b:
        left = g.mul[g.inv[arr], g.inv[y]]
        out.update(int(v) for v in g.mul[left, g.mul[arr, y]])
    return out


def maximal_class_profile(g: GroupTable, p: int) -> MaximalClassProfile:
    """Maximal-class test plus the P_i series and its standard flags."""
    if not is_prime(p):
        raise NotPrimePower(f"{p} is not prime")
    m = _p_log(g.order, p)
    series = lower_central_series(g)
    cls = nilpotency_class(g)
    if cls is None or m < 4 or cls != m - 1:
        return MaximalClassProfile(
            is_maximal_class=False, p=p, m=m,
            nilpotency_class=cls if cls is not None else -1,
            P_series=None, degree_of_commutativity_positive=None,
            has_abelian_maximal_subgroup=None, P1_P3_commute=None,
        )

    def gamma(i: int) -> tuple[int, ...]:
        return series[i - 1].elements if i - 1 < len(series) else (0,)

    # P_1 = K_2: elements centralizing gamma_2 / gamma_4.
    g4 = np.zeros(g.order, dtype=bool)
    g4[list(gamma(4))] = True
    mask = np.ones(g.order, dtype=bool)
    for a in gamma(2):
        left = g.mul[g.inv, g.inv[a]]
        comm = g.mul[left, g.mul[:, a]]
        mask &= g4[comm]
    p1 = tuple(int(v) for v in np.nonzero(mask)[0])

    p_series = [Subgroup(g, tuple(range(g.order))), Subgroup(g, p1)]
    for i in range(2, m + 1):
        p_series.append(Subgroup(g, gamma(i)))

    def pset(i: int) -> tuple[int, ...]:
        return p_series[i].elements if i <= m else (0,)

    p1_abelian = is_abelian_subset(g, p1)
    if p1_abelian:
        positive = m - 3 > 0
    else:
        positive = True
        for i in range(1, m):
            for j in range(i, m):
                inside = np.zeros(g.order, dtype=bool)
                inside[list(pset(i + j + 1))] = True
                if not all(inside[c] for c in _commutator_set(g, pset(i), pset(j))):
                    positive = False
                    break
            if not positive:
                break

    return MaximalClassProfile(
        is_maximal_class=True, p=p, m=m, nilpotency_class=cls,
        P_series=tuple(p_series),
        degree_of_commutativity_positive=positive,
        has_abelian_maximal_subgroup=has_abelian_maximal_subgroup(g, p),
        P1_P3_commute=_commute_between(g, p1, pset(3)),
    )
