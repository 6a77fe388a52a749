"""Brute-force enumeration against the closed-form counts.

The expected tallies below were frozen from an independent oracle that
enumerates the *full* residue space (every curve value over Z/m) and
filters by the constraint list, rather than constructing only the free
coordinates the way the library does.  Agreement of the two routes plus
the closed forms is the point of this module.
"""
import itertools

import pytest

from arfspin.enumeration import (
    CSV_HEADER,
    CountReport,
    brute_force_counts,
    closed_form_count,
    enumerate_real_arf_functions,
    verify_range,
)
from arfspin.topology import TopologicalType

# (g, k, eps, m, n) -> (total, even, odd); oracle-frozen.
ORACLE_ROWS = [
    ((3, 2, 1, 2, 2), (16, 12, 4)),
    ((5, 0, 0, 4, 2), (1024, 512, 512)),
    ((4, 2, 0, 3, 3), (81, 81, 0)),
    ((4, 2, 0, 3, 5), (81, 81, 0)),
    ((2, 0, 0, 2, 3), (4, 2, 2)),
    ((3, 2, 1, 4, 2), (128, 64, 64)),
    ((4, 1, 1, 3, 1), (81, 81, 0)),
    ((4, 1, 1, 6, 1), (1296, 1296, 0)),
    ((7, 3, 0, 2, 4), (512, 256, 256)),
    ((7, 3, 0, 2, 6), (512, 256, 256)),
    ((7, 3, 0, 2, 8), (512, 256, 256)),
    ((5, 2, 0, 4, 4), (2048, 1024, 1024)),
    ((5, 2, 1, 4, 2), (2048, 1024, 1024)),
    ((4, 0, 0, 6, 3), (1296, 648, 648)),
    ((4, 0, 0, 6, 5), (1296, 648, 648)),
    ((4, 3, 1, 6, 3), (5184, 3240, 1944)),
]


@pytest.mark.parametrize("cell,expected", ORACLE_ROWS)
def test_brute_force_matches_frozen_oracle(cell, expected):
    g, k, eps, m, n = cell
    report = brute_force_counts(TopologicalType(g, k, eps), m, n=n)
    assert (report.total, report.even_count, report.odd_count) == expected
    assert report.match
    assert report.n_used == n


def test_closed_form_frozen_values():
    assert closed_form_count(TopologicalType(7, 3, 0), 6, 0) == 559872
    assert closed_form_count(TopologicalType(7, 3, 0), 6, 1) == 559872
    assert closed_form_count(TopologicalType(3, 2, 1), 2, 0) == 12
    assert closed_form_count(TopologicalType(3, 2, 1), 2, 1) == 4
    assert closed_form_count(TopologicalType(4, 3, 1), 6, 0) == 3240
    assert closed_form_count(TopologicalType(4, 3, 1), 6, 1) == 1944
    # odd m: everything is even-invariant
    assert closed_form_count(TopologicalType(4, 2, 0), 3, 0) == 81
    assert closed_form_count(TopologicalType(4, 2, 0), 3, 1) == 0
    # existence condition fails -> 0
    assert closed_form_count(TopologicalType(5, 2, 0), 3, 0) == 0
    assert closed_form_count(TopologicalType(4, 1, 0), 4, 0) == 0


def test_closed_form_rejects_bad_invariant():
    with pytest.raises(ValueError):
        closed_form_count(TopologicalType(3, 2, 1), 2, 2)


def test_inadmissible_genus_enumerates_nothing():
    assert list(enumerate_real_arf_functions(TopologicalType(3, 1, 0), 3)) == []
    report = brute_force_counts(TopologicalType(3, 1, 0), 3)
    assert (report.total, report.even_count, report.odd_count) == (0, 0, 0)
    assert report.match


def test_enumeration_is_lexicographic_and_deterministic():
    t = TopologicalType(3, 2, 1)
    first = next(enumerate_real_arf_functions(t, 2))
    assert first.values.alpha == (0,)
    assert first.values.beta == (0,)
    assert first.values.gamma == (0,)
    assert first.values.delta == (0,)
    a = [fn.to_dict() for fn in enumerate_real_arf_functions(t, 2)]
    b = [fn.to_dict() for fn in enumerate_real_arf_functions(t, 2)]
    assert a == b
    assert len(a) == 16


def test_every_enumerated_function_satisfies_the_derived_sum():
    for fn in enumerate_real_arf_functions(TopologicalType(5, 1, 0), 4, n=4):
        assert (sum(fn.values.gamma) + fn.gamma_n) % 4 == (1 - 5) % 4
        # twists carry the value 0
        assert fn.values.gamma[1:] == (0, 0)


def test_nonseparating_single_curve_is_refused():
    with pytest.raises(ValueError, match="n=1"):
        enumerate_real_arf_functions(TopologicalType(4, 0, 0), 2, n=1)


def test_inadmissible_n_is_refused():
    with pytest.raises(ValueError):
        enumerate_real_arf_functions(TopologicalType(4, 0, 0), 2, n=4)
    with pytest.raises(ValueError):
        brute_force_counts(TopologicalType(5, 2, 1), 2, n=4)


def test_partitioned_tally_equals_sequential():
    t = TopologicalType(3, 2, 1)
    seq = brute_force_counts(t, 4, workers=1)
    par = brute_force_counts(t, 4, workers=2)
    assert seq == par


def test_verify_range_smallest_sweep():
    reports = verify_range(2, 2)
    cells = [(r.ttype.g, r.ttype.k, r.ttype.eps, r.m, r.n_used) for r in reports]
    assert cells == [
        (2, 0, 0, 2, 3),
        (2, 1, 0, 2, 3),
        (2, 2, 0, 2, 3),
        (2, 3, 1, 2, 3),
    ]
    assert all(r.match for r in reports)
    by_cell = dict(zip(cells, reports))
    r = by_cell[(2, 0, 0, 2, 3)]
    assert (r.total, r.even_count, r.odd_count) == (4, 2, 2)
    assert r.to_csv_row() == "2,0,0,2,3,4,2,2,2,2,true"
    r = by_cell[(2, 3, 1, 2, 3)]
    assert (r.total, r.even_count, r.odd_count) == (16, 10, 6)


def test_verify_range_parallel_output_is_identical():
    assert verify_range(3, 3, workers=2) == verify_range(3, 3, workers=1)


def test_verify_range_rejects_bad_ranges():
    with pytest.raises(ValueError):
        verify_range(1, 2)
    with pytest.raises(ValueError):
        verify_range(2, 1)


def test_csv_row_shape_matches_header():
    t = TopologicalType(2, 0, 0)
    row = brute_force_counts(t, 2).to_csv_row()
    assert len(row.split(",")) == len(CSV_HEADER.split(","))


def test_count_report_checks_its_own_arithmetic():
    with pytest.raises(ValueError):
        CountReport(
            ttype=TopologicalType(2, 0, 0),
            m=2,
            n_used=3,
            total=5,
            even_count=2,
            odd_count=2,
            closed_form_even=2,
            closed_form_odd=2,
            match=True,
        )


def test_stream_size_is_free_coordinate_product():
    # even m: m^g * 2^(k-1) value sets for k >= 1 (admissible genus).
    t = TopologicalType(3, 4, 1)
    count = sum(1 for _ in enumerate_real_arf_functions(t, 2))
    assert count == 2**3 * 2**3
    assert count == closed_form_count(t, 2, 0) + closed_form_count(t, 2, 1)
