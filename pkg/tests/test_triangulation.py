from __future__ import annotations

import json
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from infgon.arcs import INF, Arc, crossing
from infgon.errors import (
    CrossingPairError,
    IncompleteAtVertexError,
    MissingBoundaryError,
    NoFountainError,
    NotClosedError,
    NotMutableHereError,
    WindowError,
    WrongCountError,
)
from infgon.triangulation import (
    TriangulationWindow,
    fan_window,
    flip,
    fountain_arc_sets,
    is_valid,
    leapfrog_window,
    mutable_arcs,
    polygon_triangulations,
    polygon_windows,
    quadrilateral_of,
    quiddity_at,
    random_window,
    right_fountain_windows,
    running_example,
    triangles,
    two_sided_windows,
    validate_window,
    window,
)

from conftest import DATA
from oracles import all_diagonals, brute_triangles, maximal_noncrossing_sets

RUNNING_DIAGONALS = [(0, 3), (0, 7), (0, 8), (1, 3), (3, 5), (3, 7), (5, 7)]


def test_running_example_is_valid():
    w = running_example()
    validate_window(w)
    assert len(w.arcs) == 15
    assert w.kind() == "right"


def test_missing_diagonal_is_wrong_count():
    diags = [x for x in RUNNING_DIAGONALS if x != (1, 3)]
    with pytest.raises(WrongCountError) as err:
        window(0, 8, diags, fountain=0)
    assert err.value.context["region"] == Arc(0, 3)


def test_extra_arc_is_crossing_pair():
    with pytest.raises(CrossingPairError) as err:
        window(0, 8, RUNNING_DIAGONALS + [(1, 4)], fountain=0)
    assert {err.value.context["p"], err.value.context["q"]} == {Arc(0, 3), Arc(1, 4)}


def test_validation_errors():
    w = TriangulationWindow(0, 3, {(0, 1), (2, 3), (0, 3), (0, 2)})
    with pytest.raises(MissingBoundaryError):
        validate_window(w)
    with pytest.raises(NotClosedError):
        window(0, 3, [(0, 2)])
    with pytest.raises(NotClosedError):
        window(-2, 3, [(0, 3)], fountain=0)
    with pytest.raises(CrossingPairError):
        # (-1, 2) crosses the infinite arc at 0
        window(-2, 3, [(-2, 0), (0, 3), (-1, 2)], fountain=0)
    with pytest.raises(WindowError):
        window(0, 3, [(0, 5)])
    with pytest.raises(WindowError):
        window(3, 3)
    with pytest.raises(WindowError):
        window(0, 3, [(0, 3)], fountain=7)
    assert not is_valid(TriangulationWindow(0, 3, {(0, 1)}))


def test_infinite_arc_sets_the_fountain():
    w = window(0, 3, [(0, 3), (0, 2), (0, INF)])
    assert w.fountain == 0 and Arc(0, INF) not in w.arcs
    with pytest.raises(WindowError):
        window(0, 3, [(0, 3), (0, 2), (1, INF)], fountain=0)


def test_triangle_examples():
    assert {(0, 1, 3), (1, 2, 3), (3, 4, 5), (3, 5, 7), (0, 3, 7), (5, 6, 7), (0, 7, 8)} <= triangles(
        running_example()
    )
    assert triangles(window(0, 3, [(0, 2), (0, 3)])) == {(0, 1, 2), (0, 2, 3)}
    assert triangles(window(0, 2, [(0, 2)])) == {(0, 1, 2)}


def test_running_triangles_match_oracle():
    w = running_example()
    assert triangles(w) == brute_triangles(w.lo, w.hi, w.arcs)


def test_quiddity_examples():
    w = running_example()
    assert [quiddity_at(w, v) for v in range(1, 8)] == [2, 1, 5, 1, 3, 1, 4]
    with pytest.raises(IncompleteAtVertexError):
        quiddity_at(w, 0)
    with pytest.raises(IncompleteAtVertexError):
        quiddity_at(w, 8)
    sq = window(0, 3, [(0, 2), (0, 3)])
    assert [quiddity_at(sq, v, closed=True) for v in range(4)] == [2, 1, 2, 1]


def test_quadrilateral_examples():
    w = running_example()
    q = quadrilateral_of(w, Arc(0, 3))
    assert q.vertices == (0, 1, 3, 7) and q.partner == Arc(1, 7)
    q = quadrilateral_of(w, Arc(3, 7))
    assert q.vertices == (0, 3, 5, 7) and q.partner == Arc(0, 5)
    for arc in [Arc(4, 5), Arc(0, 8), Arc(2, 6)]:
        with pytest.raises(NotMutableHereError):
            quadrilateral_of(w, arc)


def test_flip_examples():
    w = running_example()
    w1 = flip(w, (0, 3))
    assert Arc(1, 7) in w1.arcs and Arc(0, 3) not in w1.arcs
    w2 = flip(w, (3, 7))
    assert Arc(0, 5) in w2.arcs and Arc(3, 7) not in w2.arcs
    assert sorted(mutable_arcs(w)) == [Arc(0, 3), Arc(0, 7), Arc(1, 3), Arc(3, 5), Arc(3, 7), Arc(5, 7)]


def test_fountain_arc_sets_examples():
    a1, a2 = fountain_arc_sets(running_example())
    assert a1 == {Arc(0, 1), Arc(0, 3), Arc(0, 7), Arc(0, 8)}
    assert a2 == {Arc(1, 3), Arc(3, 7), Arc(7, 8)}
    a1, a2 = fountain_arc_sets(fan_window(0, 4))
    assert a1 == {Arc(0, n) for n in range(1, 5)}
    assert a2 == {Arc(1, 2), Arc(2, 3), Arc(3, 4)}
    a1, a2 = fountain_arc_sets(fan_window(-4, 4), side="left")
    assert a1 == {Arc(-n, 0) for n in range(1, 5)}
    with pytest.raises(NoFountainError):
        fountain_arc_sets(window(0, 3, [(0, 2), (0, 3)]))


def test_exhaustive_validation_matches_oracle():
    # every noncrossing set of diagonals on up to 7 vertices, valid iff maximal
    for m in range(3, 8):
        hi = m - 1
        diags = [d for d in all_diagonals(0, hi) if d != (0, hi)]
        maximal = set(maximal_noncrossing_sets(0, hi))
        closing = {Arc(0, hi)} if hi >= 2 else set()
        for mask in range(2 ** len(diags)):
            chosen = {Arc(*d) for i, d in enumerate(diags) if mask >> i & 1}
            w = TriangulationWindow.make(0, hi, chosen | closing, validate=False)
            assert is_valid(w) == (frozenset(chosen) in maximal), (m, chosen)


def test_enumeration_counts_are_catalan():
    catalan = [1, 1, 2, 5, 14, 42, 132, 429]
    for m in range(3, 10):
        assert len(list(polygon_triangulations(0, m - 1))) == catalan[m - 2]
    assert sum(1 for _ in right_fountain_windows(9)) == sum(catalan[1:8])
    assert sum(1 for _ in two_sided_windows(2, 3)) == 1 * 2


def test_polygon_windows_are_valid_and_counted():
    for m in range(3, 10):
        for w in polygon_windows(m, lo=-3):
            validate_window(w)
            tris = triangles(w)
            assert len(tris) == m - 2
            total = sum(quiddity_at(w, v, closed=True) for v in w.vertices)
            assert total == 3 * (m - 2)


@given(st.integers(0, 10_000), st.booleans())
def test_flip_is_an_involution(seed, two_sided):
    w = random_window(random.Random(seed), 9, two_sided)
    validate_window(w)
    for arc in mutable_arcs(w):
        w1 = flip(w, arc)
        validate_window(w1)
        partner = quadrilateral_of(w, arc).partner
        assert flip(w1, partner) == w


@given(st.integers(0, 10_000))
def test_second_type_arcs_are_present(seed):
    w = random_window(random.Random(seed), 9)
    a1, a2 = fountain_arc_sets(w)
    assert a1 <= w.arcs and a2 <= w.arcs


@given(st.integers(0, 10_000), st.booleans(), st.integers(-20, 20))
def test_shift_mirror_and_json_round_trip(seed, two_sided, i):
    w = random_window(random.Random(seed), 9, two_sided)
    assert TriangulationWindow.from_json(json.loads(json.dumps(w.to_json()))) == w
    s = w.shift(i)
    validate_window(s)
    assert s.shift(-i) == w
    m = w.mirror()
    validate_window(m)
    assert m.mirror() == w
    for x in m.arcs:
        for y in m.arcs:
            assert not crossing(x, y)


def test_json_file_and_format():
    data = json.loads((DATA / "running.json").read_text())
    w = TriangulationWindow.from_json(data)
    assert w == running_example()
    out = w.to_json()
    assert out["format"] == "infgon/1" and [0, 1] in out["arcs"]
    with pytest.raises(WindowError):
        TriangulationWindow.from_json({**data, "format": "other"})
    with pytest.raises(WindowError):
        TriangulationWindow.from_json({"lo": 0})


def test_leapfrog_windows():
    w = leapfrog_window(4)
    m = leapfrog_window(4, mirrored=True)
    assert m == w.mirror()
    assert Arc(-4, 3) in w.arcs and Arc(-3, 4) in m.arcs
    assert w.kind() == "finite"
