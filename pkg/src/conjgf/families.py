"""Catalog of constructible stem groups and named small groups.

Each stem-group entry carries an expected structural fingerprint (order,
center size, derived-subgroup size, nilpotency class, abelian-maximal-subgroup
flag); construction re-computes the fingerprint and refuses to hand out a
group that does not match, so a transcription slip in a presentation cannot
silently poison downstream results.

Power-commutator relations fix the orders of the *generators* only, so the
p = 3 stem groups may have exponent p^2 even when every listed generator has
order p; the p = 3 power words below (Phi3, Phi7, Phi9, Phi10) are the stated
reductions of the binomial power relations, and the remaining families
compile consistently as printed.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .analysis import (
    derived_subgroup,
    center_elements,
    has_abelian_maximal_subgroup,
    nilpotency_class,
)
from .errors import FingerprintMismatch, InvalidParameters
from .groups import GroupTable, build_from_permutations
from .pcp import PcPresentation, build_from_pcp, is_prime, prime_power_root

PHI_FAMILIES = tuple(f"Phi{k}" for k in range(2, 11))
GAMMA_FAMILIES = tuple(f"Gamma{k}" for k in range(2, 9))
ALL_FAMILIES = ("abelian",) + PHI_FAMILIES + GAMMA_FAMILIES

CATALOG_PHI_PRIMES = (3, 5)


@dataclass(frozen=True)
class FamilySpec:
    """A catalog entry: how to build a stem group and what it must look like."""

    family: str
    p: int
    order: int
    route: str  # "permutation" | "pcp"
    center_order: int
    derived_order: int
    nilpotency_class: int
    has_abelian_maximal: bool | None  # None skips the check


def _vec(d: int, **at: int) -> tuple[int, ...]:
    out = [0] * d
    for key, value in at.items():
        out[int(key[1:])] = value
    return tuple(out)


def _phi_presentation(family: str, p: int) -> PcPresentation:
    label = f"{family}({p})"
    if family == "Phi2":
        # Heisenberg group: gens a, b, c with [a, b] = c, exponent p
        return PcPresentation(p=p, relative_orders=(p,) * 3, power_words=(None,) * 3,
                              commutator_words={(1, 0): _vec(3, g2=p - 1)}, label=label)
    if family == "Phi3":
        # gens a, a1, a2, a3 with [a1,a]=a2, [a2,a]=a3; at p=3 the binomial
        # power relation forces a1^3 = a3^-1
        pw: list = [None] * 4
        if p == 3:
            pw[1] = _vec(4, g3=2)
        return PcPresentation(p=p, relative_orders=(p,) * 4, power_words=tuple(pw),
                              commutator_words={(1, 0): _vec(4, g2=1), (2, 0): _vec(4, g3=1)},
                              label=label)
    if family == "Phi4":
        # gens a, a1, a2, b1, b2 with [ai, a] = bi
        return PcPresentation(p=p, relative_orders=(p,) * 5, power_words=(None,) * 5,
                              commutator_words={(1, 0): _vec(5, g3=1), (2, 0): _vec(5, g4=1)},
                              label=label)
    if family == "Phi5":
        # gens a1..a4, b with [a1,a2] = [a3,a4] = b (extraspecial of exponent p)
        return PcPresentation(p=p, relative_orders=(p,) * 5, power_words=(None,) * 5,
                              commutator_words={(1, 0): _vec(5, g4=p - 1), (3, 2): _vec(5, g4=p - 1)},
                              label=label)
    if family == "Phi6":
        # gens a1, a2, b, b1, b2 with [a1,a2]=b, [b,ai]=bi
        return PcPresentation(p=p, relative_orders=(p,) * 5, power_words=(None,) * 5,
                              commutator_words={(1, 0): _vec(5, g2=p - 1),
                                                (2, 0): _vec(5, g3=1),
                                                (2, 1): _vec(5, g4=1)},
                              label=label)
    if family == "Phi7":
        # gens a, a1, a2, a3, b with [a1,a]=a2, [a2,a]=a3, [a1,b]=a3;
        # at p=3 the binomial power relation forces a1^3 a3 = 1
        pw = [None] * 5
        if p == 3:
            pw[1] = _vec(5, g3=2)
        return PcPresentation(p=p, relative_orders=(p,) * 5, power_words=tuple(pw),
                              commutator_words={(1, 0): _vec(5, g2=1),
                                                (2, 0): _vec(5, g3=1),
                                                (4, 1): _vec(5, g3=p - 1)},
                              label=label)
    if family == "Phi8":
        # gens a1, a2, b of relative orders p, p^2, p^2 with a1^p = b,
        # [a1,a2] = b, [b,a2] = b^p
        return PcPresentation(p=p, relative_orders=(p, p * p, p * p),
                              power_words=(_vec(3, g2=1), None, None),
                              commutator_words={(1, 0): _vec(3, g2=p * p - 1),
                                                (2, 1): _vec(3, g2=p)},
                              label=label)
    if family in ("Phi9", "Phi10"):
        # gens a, a1..a4 with [ai,a]=a_{i+1} (and [a1,a2]=a4 for Phi10);
        # at p=3 the binomial power relations force a2^3 a4 = 1 and
        # a1^3 a2^3 a3 = 1
        pw = [None] * 5
        if p == 3:
            pw[1] = _vec(5, g3=2, g4=1)
            pw[2] = _vec(5, g4=2)
        comms = {(1, 0): _vec(5, g2=1), (2, 0): _vec(5, g3=1), (3, 0): _vec(5, g4=1)}
        if family == "Phi10":
            comms[(2, 1)] = _vec(5, g4=p - 1)
        return PcPresentation(p=p, relative_orders=(p,) * 5, power_words=tuple(pw),
                              commutator_words=comms, label=label)
    raise InvalidParameters(f"unknown family {family!r}")


def _gamma_table(family: str) -> GroupTable:
    if family == "Gamma2":
        return dihedral(8)
    if family == "Gamma3":
        return dihedral(16)
    if family == "Gamma4":
        # (C4 x C4) : C2 with the inverting involution
        return build_from_pcp(PcPresentation(
            p=2, relative_orders=(2, 4, 4), power_words=(None,) * 3,
            commutator_words={(1, 0): (0, 2, 0), (2, 0): (0, 0, 2)}, label="Gamma4a2"))
    if family == "Gamma5":
        # extraspecial of order 32: five involutions, [a2,a1]=[a4,a1]=[a3,a2]=b
        return build_from_pcp(PcPresentation(
            p=2, relative_orders=(2,) * 5, power_words=(None,) * 5,
            commutator_words={(1, 0): (0, 0, 0, 0, 1), (3, 0): (0, 0, 0, 0, 1),
                              (2, 1): (0, 0, 0, 0, 1)}, label="Gamma5a1"))
    if family == "Gamma6":
        # C8 : (C2 x C2); one factor inverts, the other is the 5th-power map
        return build_from_pcp(PcPresentation(
            p=2, relative_orders=(2, 2, 8), power_words=(None,) * 3,
            commutator_words={(2, 0): (0, 0, 6), (2, 1): (0, 0, 4)}, label="Gamma6a1"))
    if family == "Gamma7":
        # C2^3 : C4 acting as a single unipotent Jordan block
        return build_from_pcp(PcPresentation(
            p=2, relative_orders=(4, 2, 2, 2), power_words=(None,) * 4,
            commutator_words={(1, 0): (0, 0, 1, 1), (2, 0): (0, 0, 0, 1)}, label="Gamma7a1"))
    if family == "Gamma8":
        return dihedral(32)
    raise InvalidParameters(f"unknown family {family!r}")


_FINGERPRINTS: dict[str, tuple] = {
    # family -> (center, derived, class, abelian max) as powers of p or ints
    "Phi2": ("p", "p", 2, True),
    "Phi3": ("p", "p2", 3, True),
    "Phi4": ("p2", "p2", 2, True),
    "Phi5": ("p", "p", 2, False),
    "Phi6": ("p2", "p3", 3, False),
    "Phi7": ("p", "p2", 3, False),
    "Phi8": ("p", "p2", 3, False),
    "Phi9": ("p", "p3", 4, True),
    "Phi10": ("p", "p3", 4, False),
    "Gamma2": (2, 2, 2, True),
    "Gamma3": (2, 4, 3, True),
    "Gamma4": (4, 4, 2, True),
    "Gamma5": (2, 2, 2, False),
    "Gamma6": (2, 4, 3, False),
    "Gamma7": (2, 4, 3, False),
    "Gamma8": (2, 8, 4, True),
}

_FAMILY_RANK = {"Phi2": 3, "Phi3": 4, "Gamma2": 3, "Gamma3": 4}


def family_spec(family: str, p: int) -> FamilySpec:
    if family == "abelian":
        if p < 1:
            raise InvalidParameters("abelian family parameter must be a positive order")
        return FamilySpec("abelian", p, p, "permutation", p, 1, 0 if p == 1 else 1, None)
    if family in GAMMA_FAMILIES:
        if p != 2:
            raise InvalidParameters(f"{family} is a family of 2-groups; p must be 2")
        rank = _FAMILY_RANK.get(family, 5)
        z, d, cls, abmax = _FINGERPRINTS[family]
        return FamilySpec(family, 2, 2**rank, "permutation" if family in ("Gamma2", "Gamma3", "Gamma8") else "pcp",
                          z, d, cls, abmax)
    if family in PHI_FAMILIES:
        if not (is_prime(p) and p % 2 == 1):
            raise InvalidParameters(f"{family} needs an odd prime, got {p}")
        if p not in CATALOG_PHI_PRIMES:
            raise InvalidParameters(
                f"catalog primes for Phi families are {CATALOG_PHI_PRIMES}; "
                f"p = {p} stays under the order cap only by accident, so it is rejected"
            )
        rank = _FAMILY_RANK.get(family, 5)
        z, d, cls, abmax = _FINGERPRINTS[family]
        to_int = {"p": p, "p2": p * p, "p3": p**3}
        return FamilySpec(family, p, p**rank, "pcp",
                          to_int.get(z, z), to_int.get(d, d), cls, abmax)
    raise InvalidParameters(f"unknown family {family!r}")


def _check_fingerprint(g: GroupTable, spec: FamilySpec) -> GroupTable:
    z = len(center_elements(g))
    d = len(derived_subgroup(g).elements)
    cls = nilpotency_class(g)
    got = (g.order, z, d, cls)
    want = (spec.order, spec.center_order, spec.derived_order, spec.nilpotency_class)
    if got != want:
        raise FingerprintMismatch(
            f"{spec.family}(p={spec.p}): built (order,|Z|,|G'|,class)={got}, expected {want}"
        )
    if spec.has_abelian_maximal is not None:
        root = prime_power_root(g.order)
        if has_abelian_maximal_subgroup(g, root[0]) != spec.has_abelian_maximal:
            raise FingerprintMismatch(
                f"{spec.family}(p={spec.p}): abelian-maximal-subgroup flag mismatch"
            )
    return g


@lru_cache(maxsize=None)
def stem_group(family: str, p: int) -> GroupTable:
    """Build (and cache) the catalog stem group of a family, fingerprint-checked."""
    spec = family_spec(family, p)
    if family == "abelian":
        return cyclic(p)
    if family in GAMMA_FAMILIES:
        g = _gamma_table(family)
    else:
        g = build_from_pcp(_phi_presentation(family, p))
    return _check_fingerprint(g, spec)


# -- named groups ---------------------------------------------------------------


def _cycles_product(orders: tuple[int, ...], label: str) -> GroupTable:
    """Direct product of cyclic groups as disjoint cycles on a shared domain."""
    total = sum(orders)
    gens = []
    offset = 0
    for n in orders:
        perm = list(range(total))
        for i in range(n):
            perm[offset + i] = offset + (i + 1) % n
        gens.append(tuple(perm))
        offset += n
    return build_from_permutations(gens, label=label)


def cyclic(n: int) -> GroupTable:
    if n < 1:
        raise InvalidParameters("cyclic group order must be >= 1")
    if n == 1:
        return build_from_permutations([(0,)], label="C1")
    return _cycles_product((n,), label=f"C{n}")


def abelian_group(orders: tuple[int, ...]) -> GroupTable:
    if not orders or any(n < 1 for n in orders):
        raise InvalidParameters("factor orders must be positive")
    label = "C" + "xC".join(str(n) for n in orders)
    if all(n == 1 for n in orders):
        return cyclic(1)
    return _cycles_product(tuple(n for n in orders if n > 1), label=label)


def elementary_abelian(p: int, rank: int) -> GroupTable:
    if not is_prime(p) or rank < 0:
        raise InvalidParameters("need a prime and a nonnegative rank")
    if rank == 0:
        return cyclic(1)
    g = build_from_pcp(PcPresentation(p=p, relative_orders=(p,) * rank,
                                      power_words=(None,) * rank,
                                      commutator_words={}, label=f"C{p}^{rank}"))
    return g


def dihedral(order: int) -> GroupTable:
    if order < 6 or order % 2:
        raise InvalidParameters("dihedral groups here have even order >= 6")
    n = order // 2
    rot = tuple((i + 1) % n for i in range(n))
    ref = tuple((-i) % n for i in range(n))
    return build_from_permutations([rot, ref], label=f"D{order}")


def semidihedral(order: int) -> GroupTable:
    root = prime_power_root(order)
    if root is None or root[0] != 2 or order < 16:
        raise InvalidParameters("semidihedral groups have order 2^n, n >= 4")
    half = order // 2
    k = half // 2 - 1  # 2^(n-2) - 1
    rot = tuple((i + 1) % half for i in range(half))
    twist = tuple((i * k) % half for i in range(half))
    return build_from_permutations([rot, twist], label=f"SD{order}")


def quaternion(order: int) -> GroupTable:
    root = prime_power_root(order)
    if root is None or root[0] != 2 or order < 8:
        raise InvalidParameters("generalized quaternion groups have order 2^n, n >= 3")
    half = order // 2
    pres = PcPresentation(
        p=2, relative_orders=(2, half),
        power_words=((0, half // 2), None),
        commutator_words={(1, 0): (0, half - 2)},
        label=f"Q{order}")
    return build_from_pcp(pres)


def symmetric(degree: int) -> GroupTable:
    if degree < 1:
        raise InvalidParameters("symmetric group degree must be >= 1")
    if degree == 1:
        return build_from_permutations([(0,)], label="S1")
    cycle = tuple((i + 1) % degree for i in range(degree))
    swap = (1, 0) + tuple(range(2, degree))
    return build_from_permutations([cycle, swap], label=f"S{degree}")


_NAMED = {
    "cyclic": cyclic,
    "dihedral": dihedral,
    "semidihedral": semidihedral,
    "quaternion": quaternion,
    "symmetric": symmetric,
}


def named_group(name: str, *params: int) -> GroupTable:
    """Dispatch for the generic named families used by tests and the CLI."""
    if name == "elementary_abelian":
        if len(params) == 1:
            root = prime_power_root(params[0])
            if root is None:
                raise InvalidParameters(f"{params[0]} is not a prime power")
            return elementary_abelian(*root)
        return elementary_abelian(*params)
    if name == "abelian":
        return abelian_group(tuple(params)) if len(params) != 1 else cyclic(params[0])
    fn = _NAMED.get(name)
    if fn is None:
        raise InvalidParameters(f"unknown named group {name!r}")
    if len(params) != 1:
        raise InvalidParameters(f"{name} takes exactly one size parameter")
    return fn(params[0])


# -- test/benchmark catalog -------------------------------------------------------


@lru_cache(maxsize=1)
def small_catalog() -> tuple[tuple[str, GroupTable], ...]:
    """Labeled groups of order <= 64 exercised by oracles and equivalence tests."""
    entries: list[tuple[str, GroupTable]] = [
        ("C1", cyclic(1)),
        ("C2", cyclic(2)),
        ("C3", cyclic(3)),
        ("C4", cyclic(4)),
        ("C2xC2", elementary_abelian(2, 2)),
        ("C5", cyclic(5)),
        ("C6", cyclic(6)),
        ("S3", symmetric(3)),
        ("C8", cyclic(8)),
        ("C4xC2", abelian_group((4, 2))),
        ("C2^3", elementary_abelian(2, 3)),
        ("D8", dihedral(8)),
        ("Q8", quaternion(8)),
        ("C9", cyclic(9)),
        ("C3xC3", elementary_abelian(3, 2)),
        ("C12", cyclic(12)),
        ("D12", dihedral(12)),
        ("C16", cyclic(16)),
        ("D16", dihedral(16)),
        ("SD16", semidihedral(16)),
        ("Q16", quaternion(16)),
        ("S4", symmetric(4)),
        ("Heis27", stem_group("Phi2", 3)),
        ("C27", cyclic(27)),
        ("C3^3", elementary_abelian(3, 3)),
        ("D32", dihedral(32)),
        ("SD32", semidihedral(32)),
        ("Q32", quaternion(32)),
        ("Gamma4a2", stem_group("Gamma4", 2)),
        ("Gamma5a1", stem_group("Gamma5", 2)),
        ("Gamma6a1", stem_group("Gamma6", 2)),
        ("Gamma7a1", stem_group("Gamma7", 2)),
        ("C2^5", elementary_abelian(2, 5)),
    ]
    return tuple(entries)
