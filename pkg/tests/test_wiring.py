"""Genericizing shears, the right-to-left sweep and the pairs file format."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from arrgroup import (
    Line,
    Arrangement,
    WiringError,
    compute_lattice,
    format_pairs,
    genericize,
    lefschetz_pairs,
    parse_arrangement,
    parse_pairs,
    simulate_sweep,
    validate_pairs,
    wiring_svg,
)
from arrgroup.wiring import PairList
from conftest import FIXTURE_NAMES, fixture_arrangement, pipeline


@pytest.mark.parametrize("name", FIXTURE_NAMES)
def test_genericize_postconditions(name):
    arr = fixture_arrangement(name)
    generic, transform = genericize(arr)
    assert not any(line.is_vertical for line in generic)
    lat = compute_lattice(generic)
    xs = [pt.x for pt in lat.points]
    assert len(xs) == len(set(xs))
    # the shear is a bijection of the plane, so incidences are untouched
    original = compute_lattice(arr)
    assert sorted(pt.incident for pt in lat.points) == sorted(
        pt.incident for pt in original.points
    )
    assert [transform.apply_line(line) for line in arr] == list(generic.lines)


def test_genericize_rejects_parallel_lines():
    arr = parse_arrangement("1 1 0\n1 1 5")
    with pytest.raises(WiringError) as err:
        genericize(arr)
    assert err.value.code == "parallel-lines"


def test_transform_point_round_trip():
    _, transform = genericize(fixture_arrangement("triangle"))
    x, y = transform.apply_point(3, -2)
    assert transform.invert_point(x, y) == (3, -2)


def test_lefschetz_pairs_two_lines():
    generic, _ = genericize(parse_arrangement("1 1 0\n0 1 3"))
    pl = lefschetz_pairs(generic)
    assert pl.ell == 2
    assert pl.pairs == ((1, 2),)


def test_lefschetz_pairs_rejects_non_generic_input():
    with pytest.raises(WiringError) as err:
        lefschetz_pairs(parse_arrangement("1 0 0\n0 1 0"))
    assert err.value.code == "not-generic"
    with pytest.raises(WiringError):
        lefschetz_pairs(parse_arrangement("0 1 0\n0 1 1\n1 0 0"))


@pytest.mark.parametrize("name", FIXTURE_NAMES)
def test_pairs_cover_every_wire_pair(name):
    pl = pipeline(name).pairs
    validate_pairs(pl)


def test_validate_pairs_rejects_bad_lists():
    with pytest.raises(WiringError) as err:
        validate_pairs(PairList(3, ((1, 4),)))
    assert err.value.code == "pair-out-of-range"
    with pytest.raises(WiringError) as err:
        validate_pairs(PairList(3, ((1, 2),)))
    assert err.value.code == "pair-count-mismatch"
    validate_pairs(PairList(3, ((1, 2),)), complete=False)


@pytest.mark.parametrize("name", FIXTURE_NAMES)
def test_sweep_reverses_the_wire_order(name):
    pl = pipeline(name).pairs
    snapshots = simulate_sweep(pl)
    assert len(snapshots) == len(pl.pairs) + 1
    assert snapshots[0] == tuple(range(1, pl.ell + 1))
    assert snapshots[-1] == tuple(range(pl.ell, 0, -1))


def test_sweep_order_is_ascending_slope():
    arr = fixture_arrangement("triangle")
    generic, transform = genericize(arr)
    slopes = [line.slope for line in generic]
    assert slopes == sorted(slopes) or len(set(slopes)) == len(slopes)


def test_pairs_are_invariant_under_x_translation():
    generic, _ = genericize(fixture_arrangement("triangle"))
    shifted = Arrangement(
        tuple(Line.make(l.a, l.b, l.c + l.a * 7) for l in generic)
    )
    assert lefschetz_pairs(shifted).pairs == lefschetz_pairs(generic).pairs


def test_pairs_format_round_trip():
    pl = pipeline("triangle").pairs
    assert parse_pairs(format_pairs(pl)) == pl


def test_parse_pairs_rejects_missing_header():
    with pytest.raises(WiringError):
        parse_pairs("1 2\n2 3\n")
    with pytest.raises(WiringError):
        parse_pairs("ell=3\n1 2 3\n")


def test_svg_is_deterministic_and_well_formed():
    pl = pipeline("triangle").pairs
    svg = wiring_svg(pl)
    assert svg == wiring_svg(pl)
    assert svg.startswith("<?xml")
    assert "<svg " in svg
    assert svg.rstrip().endswith("</svg>")
    assert svg.count("<polyline") == pl.ell


@given(
    st.tuples(st.integers(1, 6), st.integers(1, 6)).filter(lambda ab: ab[0] < ab[1])
)
def test_simulated_block_reversals_are_involutions(ab):
    pl = PairList(6, (ab, ab))
    snaps = simulate_sweep(pl)
    assert snaps[0] == snaps[-1]
