from __future__ import annotations

import pytest

from conjgf.errors import TupleCapExceeded
from conjgf.genfun import alpha_coefficient, beta_coefficient
from conjgf.oracle import (
    alpha_brute,
    beta_brute,
    commuting_tuples,
    commuting_tuples_filter,
)


def test_alpha_brute_basics(catalog):
    s3 = catalog["S3"]
    assert alpha_brute(s3, 0).count == 1
    assert alpha_brute(s3, 2).count == 11
    result = alpha_brute(s3, 2)
    assert result.tuples_visited == 36
    assert result.mode == "all_tuples"
    assert result.record() == "S3 all_tuples 2 11 36"


def test_alpha_abelian_is_full_tuple_count(catalog):
    g = catalog["C6"]
    assert alpha_brute(g, 2).count == 36
    assert alpha_brute(g, 3).count == 216


def test_beta_brute_basics(catalog):
    s3 = catalog["S3"]
    assert beta_brute(s3, 1).count == 3  # class number
    assert beta_brute(s3, 2).count == 8
    q8 = catalog["Q8"]
    result = beta_brute(q8, 2)
    assert result.count == 22
    assert result.tuples_visited == 40  # commuting pairs in Q8


def test_beta_le_alpha(catalog):
    for label in ("S3", "D8", "Q8", "D12"):
        g = catalog[label]
        for n in range(3):
            assert beta_brute(g, n).count <= alpha_brute(g, n).count, (label, n)
        assert beta_brute(g, 1).count == alpha_brute(g, 1).count, label


def test_cap_enforced(catalog):
    with pytest.raises(TupleCapExceeded):
        alpha_brute(catalog["D32"], 2, cap=1000)
    with pytest.raises(TupleCapExceeded):
        beta_brute(catalog["D32"], 2, cap=1000)


def test_prefix_centralizer_enumeration_matches_filter(catalog):
    for label in ("C6", "S3", "D8", "Q8", "C12"):
        g = catalog[label]
        for n in (1, 2, 3):
            assert sorted(commuting_tuples(g, n)) == commuting_tuples_filter(g, n), (label, n)


def test_oracle_matches_series_small(catalog):
    for label in ("S3", "D8", "Q8", "C12"):
        g = catalog[label]
        for n in range(4):
            assert alpha_brute(g, n).count == alpha_coefficient(g, n), (label, n)
            assert beta_brute(g, n).count == beta_coefficient(g, n), (label, n)
