"""Element-indexed finite groups: construction, validation, subgroups, quotients.

A group is materialized as a full multiplication table over element indices
0..order-1 with the identity fixed at index 0.  Tables are immutable after
construction; derived data is memoized write-once in a private cache, so a
table can be read from any number of workers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import ClosureExceedsCap, InvalidPermutation, NotAGroup

DEFAULT_ORDER_CAP = 10_000
FULL_ASSOCIATIVITY_LIMIT = 256


@dataclass(eq=False)
class GroupTable:
    """A fully materialized finite group on indices 0..order-1, identity at 0."""

    order: int
    mul: np.ndarray
    inv: np.ndarray
    generators: tuple[int, ...]
    label: str = ""
    identity: int = 0
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def elements(self) -> range:
        return range(self.order)

    def mul_index(self, x: int, y: int) -> int:
        return int(self.mul[x, y])

    def inverse(self, x: int) -> int:
        return int(self.inv[x])

    def conjugate(self, g: int, x: int) -> int:
        """g x g^-1."""
        return int(self.mul[self.mul[g, x], self.inv[g]])

    def commutator(self, x: int, y: int) -> int:
        """[x, y] = x^-1 y^-1 x y."""
        left = self.mul[self.inv[x], self.inv[y]]
        return int(self.mul[left, self.mul[x, y]])

    def power(self, x: int, k: int) -> int:
        if k < 0:
            return self.power(self.inverse(x), -k)
        acc = 0
        for _ in range(k):
            acc = int(self.mul[acc, x])
        return acc

    def element_order(self, x: int) -> int:
        n = 1
        cur = x
        while cur != 0:
            cur = int(self.mul[cur, x])
            n += 1
        return n

    @property
    def is_abelian(self) -> bool:
        cached = self._cache.get("is_abelian")
        if cached is None:
            cached = bool(np.array_equal(self.mul, self.mul.T))
            self._cache.setdefault("is_abelian", cached)
        return cached

    def conj_by(self, g: int) -> np.ndarray:
        """The permutation x -> g x g^-1 as an index array."""
        return self.mul[self.mul[g], self.inv[g]]

    def same_table(self, other: "GroupTable") -> bool:
        return self.order == other.order and np.array_equal(self.mul, other.mul)


@dataclass(frozen=True)
class Subgroup:
    """A subgroup given by its sorted element indices inside a parent table."""

    parent: GroupTable
    elements: tuple[int, ...]

    @classmethod
    def from_elements(
        cls, parent: GroupTable, elements: Iterable[int], check: bool = True
    ) -> "Subgroup":
        elems = tuple(sorted(int(x) for x in set(elements)))
        sub = cls(parent, elems)
        if check:
            sub.validate()
        return sub

    def validate(self) -> None:
        elems = np.asarray(self.elements, dtype=np.intp)
        if elems.size == 0 or elems[0] != 0:
            raise ValueError("subgroup must contain the identity")
        inside = np.zeros(self.parent.order, dtype=bool)
        inside[elems] = True
        products = self.parent.mul[np.ix_(elems, elems)]
        if not inside[products].all():
            raise ValueError("subgroup element set is not closed under multiplication")
        if not inside[self.parent.inv[elems]].all():
            raise ValueError("subgroup element set is not closed under inversion")
        if self.parent.order % elems.size != 0:
            raise ValueError("subgroup size does not divide the group order")

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, x: int) -> bool:
        return x in self._member_set()

    def _member_set(self) -> frozenset:
        return frozenset(self.elements)

    @property
    def is_abelian(self) -> bool:
        return is_abelian_subset(self.parent, self.elements)

    def index(self) -> int:
        return self.parent.order // self.order

    def induced(self) -> GroupTable:
        return induced_table(self.parent, self.elements)


def is_abelian_subset(g: GroupTable, elements: Sequence[int]) -> bool:
    elems = np.asarray(elements, dtype=np.intp)
    block = g.mul[np.ix_(elems, elems)]
    return bool(np.array_equal(block, block.T))


def subgroup_closure(g: GroupTable, seed: Iterable[int]) -> tuple[int, ...]:
    """Smallest subgroup containing the seed elements (closure under products)."""
    inside = np.zeros(g.order, dtype=bool)
    inside[0] = True
    frontier = sorted({int(x) for x in seed} - {0})
    for x in frontier:
        inside[x] = True
    while frontier:
        cur = np.nonzero(inside)[0]
        front = np.asarray(frontier, dtype=np.intp)
        prods = np.concatenate(
            (g.mul[np.ix_(front, cur)].ravel(), g.mul[np.ix_(cur, front)].ravel())
        )
        fresh = np.unique(prods[~inside[prods]])
        inside[fresh] = True
        frontier = fresh.tolist()
    return tuple(int(x) for x in np.nonzero(inside)[0])


def normal_closure(g: GroupTable, seed: Iterable[int]) -> tuple[int, ...]:
    """Smallest normal subgroup containing the seed elements."""
    cur = subgroup_closure(g, seed)
    while True:
        arr = np.asarray(cur, dtype=np.intp)
        conjugates: set[int] = set()
        for s in g.generators:
            conjugates.update(int(x) for x in g.conj_by(s)[arr])
        if conjugates.issubset(cur):
            return cur
        cur = subgroup_closure(g, set(cur) | conjugates)


def minimal_generating_indices(g: GroupTable) -> tuple[int, ...]:
    """Greedy small generating set: repeatedly adjoin the smallest uncovered element."""
    covered = {0}
    gens: list[int] = []
    while len(covered) < g.order:
        x = next(i for i in range(g.order) if i not in covered)
        gens.append(x)
        covered = set(subgroup_closure(g, covered | {x}))
    return tuple(gens)


def induced_table(g: GroupTable, elements: Sequence[int], label: str = "") -> GroupTable:
    """Re-index a subgroup's element set to 0..|H|-1 (by parent index order)."""
    elems = np.asarray(sorted(int(x) for x in elements), dtype=np.intp)
    if elems[0] != 0:
        raise ValueError("induced table requires the identity in the element set")
    local = np.full(g.order, -1, dtype=np.int32)
    local[elems] = np.arange(elems.size, dtype=np.int32)
    mul = local[g.mul[np.ix_(elems, elems)]]
    if (mul < 0).any():
        raise ValueError("element set is not closed under multiplication")
    inv = local[g.inv[elems]]
    sub = GroupTable(
        order=int(elems.size),
        mul=mul,
        inv=inv.astype(np.int32),
        generators=(),
        label=label or f"{g.label}|sub{elems.size}",
    )
    gens = minimal_generating_indices(sub)
    sub.generators = gens if gens else (0,)
    return sub


def quotient_table(
    g: GroupTable, normal_elements: Sequence[int], label: str = ""
) -> tuple[GroupTable, tuple[int, ...], np.ndarray]:
    """Quotient by a normal subgroup.

    Returns (quotient table, coset representatives, coset index of each parent
    element).  Cosets are represented by their smallest member and ordered by
    that representative, so the construction is deterministic.
    """
    nset = np.asarray(sorted(int(x) for x in normal_elements), dtype=np.intp)
    coset_min = np.full(g.order, g.order, dtype=np.int64)
    for x in range(g.order):
        members = g.mul[x, nset]
        coset_min[x] = int(members.min())
    reps = np.unique(coset_min)
    rep_index = {int(r): i for i, r in enumerate(reps)}
    coset_of = np.array([rep_index[int(coset_min[x])] for x in range(g.order)], dtype=np.int32)
    q = len(reps)
    mul = np.empty((q, q), dtype=np.int32)
    for a in range(q):
        mul[a, :] = coset_of[g.mul[int(reps[a]), reps]]
    inv = coset_of[g.inv[reps]].astype(np.int32)
    table = GroupTable(
        order=q,
        mul=mul,
        inv=inv,
        generators=(),
        label=label or f"{g.label}/N{len(nset)}",
    )
    gens = tuple(dict.fromkeys(int(coset_of[s]) for s in g.generators if coset_of[s] != 0))
    table.generators = gens if gens else (0,)
    return table, tuple(int(r) for r in reps), coset_of


# ---------------------------------------------------------------------------
# certification


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str  # "pass" | "fail" | "skip"
    detail: str = ""


@dataclass(frozen=True)
class CertificateReport:
    label: str
    checks: tuple[CheckResult, ...]

    @property
    def ok(self) -> bool:
        return all(c.status != "fail" for c in self.checks)

    def first_failure(self) -> CheckResult | None:
        return next((c for c in self.checks if c.status == "fail"), None)

    def lines(self) -> list[str]:
        return [f"[{c.status.upper():4s}] {c.name}" + (f" ({c.detail})" if c.detail else "") for c in self.checks]


def certify(g: GroupTable) -> CertificateReport:
    """Verify the group axioms on a table.

    Associativity is checked exhaustively up to order 256; past that, only
    (xy)s = x(ys) for all x, y and generators s is checked, which suffices by
    induction on word length once the generation check passes.
    """
    checks: list[CheckResult] = []
    mul, inv, n = g.mul, g.inv, g.order

    ok_shape = mul.shape == (n, n) and inv.shape == (n,) and (mul >= 0).all() and (mul < n).all()
    checks.append(CheckResult("table_shape", "pass" if ok_shape else "fail"))
    if not ok_shape:
        return CertificateReport(g.label, tuple(checks))

    ident = np.arange(n)
    ok_id = bool(np.array_equal(mul[0], ident) and np.array_equal(mul[:, 0], ident))
    checks.append(CheckResult("identity", "pass" if ok_id else "fail", "row/col 0 must be the identity map"))

    ok_inv = bool((mul[ident, inv] == 0).all() and (mul[inv, ident] == 0).all())
    checks.append(CheckResult("inverses", "pass" if ok_inv else "fail"))

    rows_perm = all(len(np.unique(mul[x])) == n for x in range(n))
    cols_perm = all(len(np.unique(mul[:, y])) == n for y in range(n))
    ok_cancel = rows_perm and cols_perm
    checks.append(CheckResult("cancellation", "pass" if ok_cancel else "fail", "every row and column is a permutation"))

    witness = None
    if n <= FULL_ASSOCIATIVITY_LIMIT:
        witness = _associativity_witness_full(mul)
        checks.append(
            CheckResult("associativity_full", "pass" if witness is None else "fail",
                        "" if witness is None else f"witness {witness}")
        )
        checks.append(CheckResult("associativity_generators", "skip", "covered by full check"))
    else:
        checks.append(CheckResult("associativity_full", "skip", f"order > {FULL_ASSOCIATIVITY_LIMIT}"))
        witness = _associativity_witness_generators(mul, g.generators)
        checks.append(
            CheckResult("associativity_generators", "pass" if witness is None else "fail",
                        "" if witness is None else f"witness {witness}")
        )

    if ok_cancel and witness is None:
        generated = set(subgroup_closure(g, g.generators))
        ok_gen = len(generated) == n
        checks.append(CheckResult("generation", "pass" if ok_gen else "fail",
                                  "" if ok_gen else f"generators span {len(generated)} of {n} elements"))
    else:
        checks.append(CheckResult("generation", "skip", "earlier checks failed"))
    return CertificateReport(g.label, tuple(checks))


def _associativity_witness_full(mul: np.ndarray) -> tuple[int, int, int] | None:
    n = mul.shape[0]
    for x in range(n):
        left = mul[mul[x], :]     # (x y) z
        right = mul[x][mul]       # x (y z)
        if not np.array_equal(left, right):
            bad = np.argwhere(left != right)[0]
            return (x, int(bad[0]), int(bad[1]))
    return None


def _associativity_witness_generators(
    mul: np.ndarray, generators: Sequence[int]
) -> tuple[int, int, int] | None:
    for s in generators:
        left = mul[mul, s]              # (x y) s
        right = mul[:, mul[:, s]]       # x (y s)
        if not np.array_equal(left, right):
            bad = np.argwhere(left != right)[0]
            return (int(bad[0]), int(bad[1]), int(s))
    return None


# ---------------------------------------------------------------------------
# constructors


def build_from_permutations(
    gens: Sequence[Sequence[int]],
    label: str = "",
    cap: int = DEFAULT_ORDER_CAP,
) -> GroupTable:
    """Close a set of permutations of {0..k-1} under composition.

    Elements are indexed in BFS discovery order with the identity first.
    Composition convention: (p * q)(i) = p(q(i)), i.e. q acts first.
    """
    if not gens:
        raise InvalidPermutation("need at least one generator")
    perms = [tuple(int(v) for v in p) for p in gens]
    k = len(perms[0])
    for p in perms:
        if len(p) != k:
            raise InvalidPermutation("generators act on domains of different sizes")
        if sorted(p) != list(range(k)):
            raise InvalidPermutation(f"{p} is not a bijection on 0..{k - 1}")

    identity = tuple(range(k))
    index: dict[tuple[int, ...], int] = {identity: 0}
    elems: list[tuple[int, ...]] = [identity]
    parent: list[tuple[int, int]] = [(0, -1)]  # (parent index, generator position)
    right_by_gen: list[list[int]] = [[] for _ in perms]

    pos = 0
    while pos < len(elems):
        cur = elems[pos]
        for gi, gp in enumerate(perms):
            nxt = tuple(cur[gp[i]] for i in range(k))
            at = index.get(nxt)
            if at is None:
                at = len(elems)
                if at >= cap:
                    raise ClosureExceedsCap(f"closure exceeded cap {cap}")
                index[nxt] = at
                elems.append(nxt)
                parent.append((pos, gi))
            right_by_gen[gi].append(at)
        pos += 1

    n = len(elems)
    right = [np.asarray(col, dtype=np.int32) for col in right_by_gen]
    mul = np.empty((n, n), dtype=np.int32)
    mul[:, 0] = np.arange(n, dtype=np.int32)
    for y in range(1, n):
        py, gi = parent[y]
        mul[:, y] = right[gi][mul[:, py]]
    inv = np.argmax(mul == 0, axis=1).astype(np.int32)
    table = GroupTable(
        order=n,
        mul=mul,
        inv=inv,
        generators=tuple(dict.fromkeys(index[p] for p in perms)),
        label=label or f"perm-closure({n})",
    )
    report = certify(table)
    if not report.ok:
        bad = report.first_failure()
        raise NotAGroup(bad.name, (), f"permutation closure failed certification: {bad.name}")
    return table


def build_from_cayley(table: Sequence[Sequence[int]], label: str = "") -> GroupTable:
    """Validate an explicit multiplication table and wrap it as a group.

    The identity must sit at index 0.  The first violated axiom is reported
    with a witness: a single index (identity/inverse failures) or a triple
    (associativity failures).
    """
    rows = [list(int(v) for v in row) for row in table]
    n = len(rows)
    if n == 0 or any(len(r) != n for r in rows):
        raise NotAGroup("shape", (n,), "table must be square and nonempty")
    mul = np.asarray(rows, dtype=np.int32)
    if (mul < 0).any() or (mul >= n).any():
        bad = np.argwhere((mul < 0) | (mul >= n))[0]
        raise NotAGroup("closure", (int(bad[0]), int(bad[1])), "entry out of range")

    ident = np.arange(n)
    if not np.array_equal(mul[0], ident) or not np.array_equal(mul[:, 0], ident):
        row_bad = np.nonzero(mul[0] != ident)[0]
        witness = int(row_bad[0]) if row_bad.size else int(np.nonzero(mul[:, 0] != ident)[0][0])
        raise NotAGroup("identity", (witness,), "index 0 must be a two-sided identity")

    inv = np.full(n, -1, dtype=np.int32)
    for x in range(n):
        hits = np.nonzero(mul[x] == 0)[0]
        if hits.size != 1 or mul[hits[0], x] != 0:
            raise NotAGroup("inverse", (x,), "element has no two-sided inverse")
        inv[x] = hits[0]

    for x in range(n):
        if len(np.unique(mul[x])) != n:
            raise NotAGroup("cancellation", (x,), "row is not a permutation")
        if len(np.unique(mul[:, x])) != n:
            raise NotAGroup("cancellation", (x,), "column is not a permutation")

    if n <= FULL_ASSOCIATIVITY_LIMIT:
        witness = _associativity_witness_full(mul)
    else:
        probe = GroupTable(order=n, mul=mul, inv=inv, generators=(0,), label="probe")
        probe.generators = minimal_generating_indices(probe)
        witness = _associativity_witness_generators(mul, probe.generators)
    if witness is not None:
        raise NotAGroup("associativity", witness)

    g = GroupTable(order=n, mul=mul, inv=inv, generators=(0,), label=label or f"cayley({n})")
    g.generators = minimal_generating_indices(g) or (0,)
    return g
