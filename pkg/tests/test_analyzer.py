"""Identity checks, proposition suites, and the pentagon reference table."""

import dataclasses
from fractions import Fraction

import pytest

from conftest import catalog_names, get_tiling
from tilebalance.analyzer import (
    REQUIRED_LABELS,
    check_hexagon,
    check_pentagon,
    run_all_checks,
    table1_compare,
    table1_row_for,
)
from tilebalance.catalog import list_catalog
from tilebalance.errors import MissingCatalogEntry
from tilebalance.periodic import limit_stats


def _failed(results):
    return [r for r in results if r.applicable and not r.passed]


@pytest.mark.parametrize("name", catalog_names())
def test_all_catalog_entries_pass_every_applicable_check(name):
    stats = limit_stats(get_tiling(name))
    bad = _failed(run_all_checks(stats))
    assert not bad, [(r.check_id, r.lhs, r.rhs) for r in bad]


@pytest.mark.parametrize("name", ["hexagon-type-1", "hexagon-type-2", "hexagon-type-3"])
def test_hexagon_corollary_exact(name):
    stats = limit_stats(get_tiling(name))
    assert stats.edge_to_edge is True
    assert stats.t_h == {6: Fraction(1)}
    assert stats.v_j == {3: Fraction(2)}
    assert stats.v == 2
    assert stats.avg_valence == 3
    assert not _failed(check_hexagon(stats))


def test_pentagon_type5_values():
    stats = limit_stats(get_tiling("pentagon-type-5"))
    assert stats.v == Fraction(3, 2)
    assert stats.e == Fraction(5, 2)
    assert stats.edge_to_edge is True
    assert stats.avg_valence == Fraction(10, 3)
    assert not _failed(check_pentagon(stats))


def test_edge_to_edge_equivalence_both_directions():
    e2e = limit_stats(get_tiling("pentagon-type-5"))
    assert e2e.v == Fraction(3, 2) and e2e.edge_to_edge
    non = limit_stats(get_tiling("pentagon-type-1"))
    assert non.v != Fraction(3, 2) and not non.edge_to_edge


def _mutations(stats):
    yield dataclasses.replace(stats, v=stats.v + 1)
    yield dataclasses.replace(stats, e=stats.e + Fraction(1, 7))
    t_h = dict(stats.t_h)
    some_h = next(iter(t_h))
    t_h[some_h] = t_h[some_h] + Fraction(1, 5)
    yield dataclasses.replace(stats, t_h=t_h)
    v_j = dict(stats.v_j)
    some_j = next(iter(v_j))
    v_j[some_j] = v_j[some_j] + Fraction(1, 3)
    yield dataclasses.replace(stats, v_j=v_j)
    yield dataclasses.replace(stats, v_j={**v_j, 17: Fraction(1, 9)})
    yield dataclasses.replace(stats, edge_to_edge=not stats.edge_to_edge)


@pytest.mark.parametrize("name", ["pentagon-type-5", "pentagon-type-13", "hexagon-type-2"])
def test_corrupted_stats_are_caught(name):
    stats = limit_stats(get_tiling(name))
    for mutant in _mutations(stats):
        assert _failed(run_all_checks(mutant)), mutant


def test_table1_lookup():
    row = table1_row_for("10")
    assert row is not None
    assert row.t_h == {5: Fraction(2, 3), 7: Fraction(1, 3)}
    assert row.v_j == {3: Fraction(5, 3), 4: Fraction(1, 6)}
    assert row.two_e == Fraction(17, 3)
    assert row.avg_valence == Fraction(34, 11)
    assert table1_row_for("nope") is None


def test_table1_compare_state():
    present = {label for _n, label, _e, _c in list_catalog()}
    if set(REQUIRED_LABELS) <= present:
        results = table1_compare()
        assert all(r.passed for _label, r in results)
        assert {label for label, _ in results} >= set(REQUIRED_LABELS)
    else:
        with pytest.raises(MissingCatalogEntry):
            table1_compare()
