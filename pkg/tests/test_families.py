from __future__ import annotations

import pytest

from conjgf.analysis import (
    center_elements,
    conjugacy_data,
    derived_subgroup,
    nilpotency_class,
)
from conjgf.errors import InvalidParameters
from conjgf.families import (
    ALL_FAMILIES,
    GAMMA_FAMILIES,
    PHI_FAMILIES,
    abelian_group,
    cyclic,
    dihedral,
    elementary_abelian,
    family_spec,
    named_group,
    quaternion,
    semidihedral,
    stem_group,
    symmetric,
)
from conjgf.groups import certify
from conjgf.isoclinism import stem_order


def test_all_stem_groups_certify_and_fingerprint():
    # FingerprintMismatch must never fire on shipped catalog entries
    for family in GAMMA_FAMILIES:
        g = stem_group(family, 2)
        assert certify(g).ok, family
    for family in PHI_FAMILIES:
        g = stem_group(family, 3)
        assert certify(g).ok, family


def test_stem_order_equals_rank_order():
    for family in GAMMA_FAMILIES:
        g = stem_group(family, 2)
        assert stem_order(g) == g.order, family
    for family in PHI_FAMILIES:
        g = stem_group(family, 3)
        assert stem_order(g) == g.order, family


def test_gamma5_extraspecial():
    g = stem_group("Gamma5", 2)
    assert g.order == 32
    z = center_elements(g)
    assert len(z) == 2
    assert set(derived_subgroup(g).elements) == set(z)
    from conjgf.groups import quotient_table

    q, _, _ = quotient_table(g, z)
    assert q.is_abelian and all(q.element_order(x) <= 2 for x in q.elements())


def test_phi2_central_quotient():
    g = stem_group("Phi2", 3)
    assert g.order == 27
    assert g.order // len(center_elements(g)) == 9


def test_phi5_quotient_elementary_abelian():
    from conjgf.groups import quotient_table

    g = stem_group("Phi5", 3)
    z = center_elements(g)
    assert len(z) == 3
    q, _, _ = quotient_table(g, z)
    assert q.order == 81 and q.is_abelian
    assert all(q.element_order(x) in (1, 3) for x in q.elements())


def test_phi8_center_is_cube_of_beta():
    g = stem_group("Phi8", 3)
    assert g.order == 243
    # generators are a1, a2, b with exponent-vector indexing: b^3 has index 3
    assert set(center_elements(g)) == {0, 3, 6}


def test_named_groups():
    q8 = quaternion(8)
    assert conjugacy_data(q8).class_equation == (1, 1, 2, 2, 2)
    sd16 = semidihedral(16)
    assert sd16.order == 16
    assert nilpotency_class(sd16) == 3
    assert cyclic(1).order == 1
    assert symmetric(4).order == 24
    assert elementary_abelian(2, 4).order == 16
    assert abelian_group((4, 2)).order == 8


def test_named_group_dispatch():
    assert named_group("dihedral", 8).order == 8
    assert named_group("cyclic", 6).order == 6
    assert named_group("elementary_abelian", 8).order == 8  # parsed as 2^3
    assert named_group("symmetric", 3).order == 6
    with pytest.raises(InvalidParameters):
        named_group("frobnicator", 3)
    with pytest.raises(InvalidParameters):
        named_group("elementary_abelian", 12)


def test_invalid_family_parameters():
    with pytest.raises(InvalidParameters):
        stem_group("Gamma3", 3)
    with pytest.raises(InvalidParameters):
        stem_group("Phi5", 2)
    with pytest.raises(InvalidParameters):
        stem_group("Phi5", 7)  # outside the catalog primes
    with pytest.raises(InvalidParameters):
        stem_group("Phi1", 3)
    with pytest.raises(InvalidParameters):
        dihedral(7)
    with pytest.raises(InvalidParameters):
        semidihedral(8)
    with pytest.raises(InvalidParameters):
        quaternion(12)


def test_fingerprint_guard_fires():
    import dataclasses

    from conjgf.errors import FingerprintMismatch
    from conjgf.families import _check_fingerprint

    g = stem_group("Phi5", 3)
    wrong = dataclasses.replace(family_spec("Phi5", 3), center_order=9)
    with pytest.raises(FingerprintMismatch):
        _check_fingerprint(g, wrong)


def test_family_spec_shapes():
    spec = family_spec("Phi6", 3)
    assert (spec.order, spec.center_order, spec.derived_order) == (243, 9, 27)
    assert spec.nilpotency_class == 3
    assert spec.has_abelian_maximal is False
    assert family_spec("Gamma8", 2).has_abelian_maximal is True
    assert len(ALL_FAMILIES) == 17


def test_maximal_class_trio_same_functions(catalog):
    from conjgf.genfun import a_of_t, b_of_t

    for n, labels in ((16, ("D16", "SD16", "Q16")), (32, ("D32", "SD32", "Q32"))):
        groups = [catalog[lbl] for lbl in labels]
        a0, b0 = a_of_t(groups[0]), b_of_t(groups[0])
        for g in groups[1:]:
            assert a_of_t(g) == a0, (n, g.label)
            assert b_of_t(g) == b0, (n, g.label)
