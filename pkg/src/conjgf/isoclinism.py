"""Isoclinism testing by the commutative-diagram definition.

Two groups are isoclinic when some isomorphism theta of their central
quotients and some isomorphism phi of their derived subgroups commute with
the commutator map.  theta is found by generator-image backtracking over the
quotients (pruned by element order and conjugacy-class size); phi is never
searched: the diagram forces it on commutator values, which generate the
derived subgroup, so it is derived and then validated.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .analysis import center_elements, conjugacy_data, derived_subgroup, element_orders
from .errors import QuotientTooLarge
from .groups import GroupTable, minimal_generating_indices, quotient_table

DEFAULT_QUOTIENT_CAP = 256


@dataclass(frozen=True)
class IsoclinismWitness:
    """A checked isoclinism: theta on quotient indices, phi on parent indices.

    theta[i] is the index in H/Z(H) of the image of quotient element i of
    G/Z(G); phi maps each element of G' (as a parent index of G) to an element
    of H' (as a parent index of H).
    """

    theta: tuple[int, ...]
    phi: dict[int, int]
    g_coset_reps: tuple[int, ...]
    h_coset_reps: tuple[int, ...]

    def verify(self, g: GroupTable, h: GroupTable) -> bool:
        """Exhaustively re-check the commutative diagram."""
        gq, greps, gcoset = _central_quotient(g)
        hq, hreps, hcoset = _central_quotient(h)
        if greps != self.g_coset_reps or hreps != self.h_coset_reps:
            return False
        theta = self.theta
        if sorted(theta) != list(range(gq.order)):
            return False
        # theta is an isomorphism of the quotients
        for a in range(gq.order):
            for b in range(gq.order):
                if theta[gq.mul_index(a, b)] != hq.mul_index(theta[a], theta[b]):
                    return False
        # phi is a bijection of the derived subgroups
        gder = derived_subgroup(g).elements
        hder = derived_subgroup(h).elements
        if sorted(self.phi) != list(gder) or sorted(self.phi.values()) != list(hder):
            return False
        # phi is a homomorphism
        for x in gder:
            for y in gder:
                if self.phi[g.mul_index(x, y)] != h.mul_index(self.phi[x], self.phi[y]):
                    return False
        # the square commutes on every coset pair
        for a in range(gq.order):
            for b in range(gq.order):
                cg = g.commutator(greps[a], greps[b])
                ch = h.commutator(hreps[theta[a]], hreps[theta[b]])
                if self.phi[cg] != ch:
                    return False
        return True


def _central_quotient(g: GroupTable):
    cached = g._cache.get("central_quotient")
    if cached is None:
        cached = quotient_table(g, center_elements(g), label=f"{g.label}/Z")
        g._cache.setdefault("central_quotient", cached)
    return cached


def _element_invariants(q: GroupTable) -> list[tuple[int, int]]:
    orders = element_orders(q)
    cd = conjugacy_data(q)
    class_size = np.empty(q.order, dtype=np.int64)
    for cls in cd.classes:
        class_size[list(cls)] = len(cls)
    return [(int(orders[x]), int(class_size[x])) for x in range(q.order)]


def _iso_images(q1: GroupTable, q2: GroupTable):
    """Yield isomorphisms q1 -> q2 as index arrays, generator-image backtracking."""
    gens = minimal_generating_indices(q1) or (0,)
    inv1 = _element_invariants(q1)
    inv2 = _element_invariants(q2)
    if sorted(inv1) != sorted(inv2):
        return
    candidates = [[y for y in range(q2.order) if inv2[y] == inv1[s]] for s in gens]

    def close(images: tuple[int, ...]):
        """Partial map on <gens[:k]> by right-multiplication closure; None on conflict."""
        mapping = {0: 0}
        frontier = [0]
        while frontier:
            nxt = []
            for x in frontier:
                for s, t in zip(gens[: len(images)], images):
                    xs = q1.mul_index(x, s)
                    yt = q2.mul_index(mapping[x], t)
                    seen = mapping.get(xs)
                    if seen is None:
                        mapping[xs] = yt
                        nxt.append(xs)
                    elif seen != yt:
                        return None
            frontier = nxt
        if len(set(mapping.values())) != len(mapping):
            return None
        return mapping

    def backtrack(k: int, images: tuple[int, ...]):
        if k == len(gens):
            mapping = close(images)
            if mapping is not None and len(mapping) == q1.order:
                theta = [0] * q1.order
                for x, y in mapping.items():
                    theta[x] = y
                yield tuple(theta)
            return
        for cand in candidates[k]:
            trial = images + (cand,)
            if close(trial) is None:
                continue
            yield from backtrack(k + 1, trial)

    yield from backtrack(0, ())


def _derive_phi(
    g: GroupTable, h: GroupTable,
    greps: tuple[int, ...], hreps: tuple[int, ...],
    theta: tuple[int, ...],
) -> dict[int, int] | None:
    """Force phi on commutator values and extend along products; None if it breaks."""
    gder = derived_subgroup(g).elements
    hder = derived_subgroup(h).elements
    if len(gder) != len(hder):
        return None
    phi: dict[int, int] = {0: 0}
    pairs: list[tuple[int, int]] = [(0, 0)]
    for a in range(len(greps)):
        for b in range(len(greps)):
            cg = g.commutator(greps[a], greps[b])
            ch = h.commutator(hreps[theta[a]], hreps[theta[b]])
            seen = phi.get(cg)
            if seen is None:
                phi[cg] = ch
                pairs.append((cg, ch))
            elif seen != ch:
                return None
    # multiplicative closure over the generating set of commutator values
    frontier = list(pairs)
    while frontier:
        nxt = []
        for x, y in frontier:
            for u, v in pairs:
                xu = g.mul_index(x, u)
                yv = h.mul_index(y, v)
                seen = phi.get(xu)
                if seen is None:
                    phi[xu] = yv
                    nxt.append((xu, yv))
                elif seen != yv:
                    return None
        frontier = nxt
    if len(phi) != len(gder) or sorted(phi) != list(gder):
        return None
    if sorted(phi.values()) != list(hder):
        return None
    return phi


def are_isoclinic(
    g: GroupTable, h: GroupTable, quotient_cap: int = DEFAULT_QUOTIENT_CAP
) -> IsoclinismWitness | None:
    """Search for an isoclinism witness; None when provably none exists."""
    gq, greps, _ = _central_quotient(g)
    hq, hreps, _ = _central_quotient(h)
    if gq.order > quotient_cap or hq.order > quotient_cap:
        raise QuotientTooLarge(
            f"central quotient of order {max(gq.order, hq.order)} exceeds cap {quotient_cap}"
        )
    if gq.order != hq.order:
        return None
    if len(derived_subgroup(g).elements) != len(derived_subgroup(h).elements):
        return None
    for theta in _iso_images(gq, hq):
        phi = _derive_phi(g, h, greps, hreps, theta)
        if phi is not None:
            witness = IsoclinismWitness(theta=theta, phi=phi,
                                        g_coset_reps=greps, h_coset_reps=hreps)
            return witness
    return None


def stem_order(g: GroupTable) -> int:
    """|G/Z(G)| * |Z(G) cap G'|: the order of the stem groups of G's family."""
    z = set(center_elements(g))
    der = set(derived_subgroup(g).elements)
    return (g.order // len(z)) * len(z & der)
