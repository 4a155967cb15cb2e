"""Quotient map construction, census invariants, supercell invariance."""

from fractions import Fraction

import pytest

from conftest import catalog_names, get_tiling
from tilebalance.catalog import load_template, template_from_dict, template_to_dict
from tilebalance.errors import InvalidTilingError
from tilebalance.periodic import (
    build_periodic_tiling,
    is_edge_to_edge,
    limit_stats,
    quotient_counts,
)


@pytest.mark.parametrize("name", catalog_names())
def test_torus_euler_characteristic(name):
    tiling = get_tiling(name)
    c = quotient_counts(tiling)
    assert c.V - c.E + c.F == 0


@pytest.mark.parametrize("name", catalog_names())
def test_degree_sum_equals_twice_edges(name):
    tiling = get_tiling(name)
    c = quotient_counts(tiling)
    assert sum(j * k for j, k in c.V_j.items()) == 2 * c.E
    assert sum(h * k for h, k in c.T_h.items()) == 2 * c.E


@pytest.mark.parametrize("name", catalog_names())
def test_stats_match_template_expectations(name):
    template = load_template(name)
    stats = limit_stats(get_tiling(name))
    exp = template.expected
    if exp is None:
        pytest.skip("no expected block")
    if exp.t_h:
        assert stats.t_h == exp.t_h
    if exp.v_j:
        assert stats.v_j == exp.v_j
    if exp.v is not None:
        assert stats.v == exp.v
    if exp.e is not None:
        assert stats.e == exp.e
    if exp.w_j:
        assert stats.w_j == exp.w_j
    if exp.edge_to_edge is not None:
        assert stats.edge_to_edge is exp.edge_to_edge


def test_square_exact_stats():
    stats = limit_stats(get_tiling("square"))
    assert stats.t_h == {4: Fraction(1)}
    assert stats.v_j == {4: Fraction(1)}
    assert stats.v == 1 and stats.e == 2
    assert stats.avg_valence == 4
    assert stats.edge_to_edge


def _doubled(template):
    """The same tiling on a fundamental domain twice as large."""
    data = template_to_dict(template)
    t1 = data["lattice"][0]
    nv = len(data["vertices"])
    data["lattice"] = [[2 * t1[0], 2 * t1[1]], data["lattice"][1]]
    data["vertices"] = data["vertices"] + [
        [x + t1[0], y + t1[1]] for x, y in data["vertices"]
    ]
    tiles = []
    flats = []
    ntiles = len(data["tiles"])
    for k in (0, 1):
        for cyc in data["tiles"]:
            refs = []
            for i, m, n in cyc:
                q, rem = divmod(m + k, 2)
                refs.append([i + rem * nv, q, n])
            tiles.append(refs)
    for t, p in data.get("flat", []):
        flats.append([t, p])
        flats.append([t + ntiles, p])
    data["tiles"] = tiles
    if flats:
        data["flat"] = flats
    data["name"] = data["name"] + "-doubled"
    return template_from_dict(data)


@pytest.mark.parametrize("name", ["square", "pentagon-type-5", "pentagon-type-13"])
def test_doubled_domain_leaves_stats_invariant(name):
    base = limit_stats(get_tiling(name))
    doubled = limit_stats(build_periodic_tiling(_doubled(load_template(name))))
    assert doubled.t_h == base.t_h
    assert doubled.v_j == base.v_j
    assert doubled.v == base.v
    assert doubled.e == base.e
    assert doubled.w_j == base.w_j
    assert doubled.edge_to_edge == base.edge_to_edge


@pytest.mark.parametrize("name", catalog_names())
def test_edge_to_edge_iff_no_flat_marks(name):
    tiling = get_tiling(name)
    assert is_edge_to_edge(tiling) == (not tiling.flat)


def test_dangling_edge_rejected():
    data = template_to_dict(load_template("square"))
    # drop one boundary vertex: the cycle no longer matches its neighbors
    data["tiles"][0] = data["tiles"][0][:3]
    with pytest.raises(InvalidTilingError):
        build_periodic_tiling(template_from_dict(data))


def test_zero_area_lattice_rejected():
    data = template_to_dict(load_template("square"))
    data["lattice"] = [[1.0, 0.0], [2.0, 0.0]]
    with pytest.raises(InvalidTilingError):
        build_periodic_tiling(template_from_dict(data))
