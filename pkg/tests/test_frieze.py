from __future__ import annotations

import json
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from infgon.arcs import Arc
from infgon.cluster import coefficient_frieze, specialize_ones
from infgon.errors import (
    DoesNotCloseError,
    FountainCrossingError,
    MismatchError,
    NonPositiveEntryError,
)
from infgon.frieze import (
    FriezeArray,
    check_diamond_rule,
    entry_one_iff_arc,
    format_grid,
    frieze_from_quiddity,
    frieze_from_window,
    shift_frieze,
)
from infgon.triangulation import (
    fan_window,
    leapfrog_window,
    polygon_windows,
    quiddity_at,
    random_window,
    right_fountain_windows,
    running_example,
    two_sided_windows,
)

from oracles import frieze_entry_by_continuant


def test_finite_frieze_example():
    f = frieze_from_quiddity([2, 1, 2, 1], kind="finite")
    assert f.rows() == [[0, 1, 2, 1], [0, 1, 1], [0, 1]]
    assert f.width == 1 and f.m == 4


def test_triangle_frieze():
    f = frieze_from_quiddity([1, 1, 1], kind="finite")
    assert f.rows() == [[0, 1, 1], [0, 1]]
    assert f.width == 0


def test_non_positive_quiddities():
    with pytest.raises(NonPositiveEntryError):
        frieze_from_quiddity([1, 1, 1, 1], kind="finite")
    with pytest.raises(NonPositiveEntryError):
        frieze_from_quiddity([1, 1, 1], kind="right")
    with pytest.raises(NonPositiveEntryError):
        frieze_from_quiddity([2, 0, 2], kind="right")


def test_frieze_must_close():
    with pytest.raises(DoesNotCloseError):
        frieze_from_quiddity([2, 2, 2, 2], kind="finite")
    with pytest.raises(DoesNotCloseError):
        frieze_from_quiddity([3, 1], kind="finite")


def test_bad_arguments():
    with pytest.raises(ValueError):
        frieze_from_quiddity([1, 2], kind="spiral")
    with pytest.raises(TypeError):
        frieze_from_quiddity([1.5, 2], kind="right")
    with pytest.raises(ValueError):
        frieze_from_quiddity([1, 2], kind="fountain")


def test_leapfrog_quiddity_example():
    g = frieze_from_quiddity([3, 3, 3, 1, 2, 3, 3], kind="right", lo=-4)
    assert g[0, 3] == 5 and g[0, 4] == 13 and g[-4, 0] == 21


def test_running_example_rows():
    f = frieze_from_window(running_example())
    assert f.row(0) == [0, 1, 2, 1, 3, 2, 3, 1, 1]
    assert f.row(2) == [0, 1, 5, 4, 7, 3, 5]
    assert f.quiddity() == [2, 1, 5, 1, 3, 1, 4]
    entry_one_iff_arc(f, running_example())
    assert f.one_entries() == set(running_example().arcs)


def test_fan_frieze():
    w = fan_window(-6, 6)
    f = frieze_from_window(w)
    assert f.kind == "fountain" and f.fountain == 0
    assert f.row(0)[1:] == [1] * 6
    assert all(f[a, b] == b - a for a in range(1, 6) for b in range(a + 1, 7))
    assert all(f[a, b] == b - a for a in range(-6, -1) for b in range(a + 1, 0))
    entry_one_iff_arc(f, w)
    assert f.in_hole(-1, 1)
    with pytest.raises(FountainCrossingError):
        f[-1, 1]
    with pytest.raises(KeyError):
        f[0, 9]
    assert f.get(-1, 1, "hole") == "hole"


def test_corrupted_entry_is_a_mismatch():
    w = running_example()
    f = frieze_from_window(w)
    entries = dict(f.entries)
    entries[(1, 4)] = 1
    bad = FriezeArray(f.kind, f.lo, f.hi, entries, f.fountain)
    with pytest.raises(MismatchError):
        entry_one_iff_arc(bad, w)
    with pytest.raises(MismatchError):
        check_diamond_rule(bad)
    entries[(1, 4)] = 4
    entries[(0, 3)] = 2
    with pytest.raises(MismatchError):
        entry_one_iff_arc(FriezeArray(f.kind, f.lo, f.hi, entries, f.fountain), w)


def test_entry_one_iff_arc_exhaustive():
    for w in right_fountain_windows(9):
        f = frieze_from_window(w)
        entry_one_iff_arc(f, w)
        check_diamond_rule(f)


def test_two_sided_friezes():
    for w in two_sided_windows(4, 4):
        f = frieze_from_window(w)
        entry_one_iff_arc(f, w)
        check_diamond_rule(f)
        q = [quiddity_at(w, v) if v != 0 else None for v in range(w.lo + 1, w.hi)]
        g = frieze_from_quiddity(q, kind="fountain", lo=w.lo, fountain=0)
        assert g == f


def test_finite_friezes_match_continuants():
    for m in range(3, 9):
        for w in polygon_windows(m, lo=2):
            f = frieze_from_window(w)
            assert f.width == m - 3
            assert f.one_entries() == set(w.arcs)
            quid = {v: quiddity_at(w, v, closed=True) for v in w.vertices}
            for a in w.vertices:
                for b in range(a, w.hi + 1):
                    assert f[a, b] == frieze_entry_by_continuant(quid, a, b)


@given(st.integers(0, 10_000), st.booleans())
def test_window_friezes_satisfy_the_rules(seed, two_sided):
    w = random_window(random.Random(seed), 14, two_sided)
    f = frieze_from_window(w)
    check_diamond_rule(f)
    for a, b in f.defined_pairs():
        if b == a:
            assert f[a, b] == 0
        elif b == a + 1:
            assert f[a, b] == 1
        else:
            assert isinstance(f[a, b], int) and f[a, b] > 0
    inner = [v for v in range(w.lo + 1, w.hi) if v != w.fountain]
    assert [f[v - 1, v + 1] for v in inner] == [quiddity_at(w, v) for v in inner]


@given(st.lists(st.integers(1, 6), min_size=1, max_size=10))
def test_quiddity_is_recovered(q):
    try:
        f = frieze_from_quiddity(q, kind="right")
    except NonPositiveEntryError:
        return
    assert f.quiddity() == q
    check_diamond_rule(f)


@given(st.integers(0, 10_000), st.integers(-30, 30))
def test_shift_round_trip(seed, i):
    f = frieze_from_window(random_window(random.Random(seed), 9, True))
    assert shift_frieze(f, 0) == f
    assert shift_frieze(shift_frieze(f, i), -i) == f
    g = shift_frieze(f, i)
    assert all(g[a + i, b + i] == f[a, b] for a, b in f.defined_pairs())


@given(st.integers(0, 10_000), st.booleans())
def test_json_round_trip(seed, two_sided):
    f = frieze_from_window(random_window(random.Random(seed), 9, two_sided))
    assert FriezeArray.from_json(json.loads(json.dumps(f.to_json()))) == f


def test_leapfrog_shift_matches_specialized_coefficients():
    w = leapfrog_window(4, mirrored=True)
    f = frieze_from_window(w)
    g = specialize_ones(coefficient_frieze(w.shift(1)))
    assert shift_frieze(f, 1) == g
    assert g[-3, 1] == 21


def test_grid_layout():
    text = format_grid(frieze_from_quiddity([2, 1, 2, 1], kind="finite"))
    assert text.splitlines() == ["0 1 2 1", "  0 1 1", "    0 1"]
    text = format_grid(frieze_from_window(fan_window(-2, 2)))
    assert "·" in text
    assert text.splitlines()[0].split() == ["0", "1", "1", "·", "·"]


def test_diamonds_use_boundary_products():
    f = frieze_from_window(running_example())
    assert all(f.diamond_defect(a, b) == 1 for a, b in f.diamonds())
    assert len(list(f.diamonds())) > 0
    assert Arc(0, 8) in running_example().arcs and f[0, 8] == 1
