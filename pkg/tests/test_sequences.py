from __future__ import annotations

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from infgon.arcs import Arc
from infgon.errors import ConsecutiveOnesError, MismatchError, NoFountainError
from infgon.sequences import (
    BinarySeq,
    GapSeq,
    MutationEffect,
    check_mutation_effect,
    has_consecutive_ones,
    is_special_window,
    penrose_decode,
    penrose_encode,
    predict_mutation_effect,
    psi,
    sequences_differ_finitely,
    specialize,
    specialize_word,
    words,
    x_sequence,
    x_to_y,
    y_sequence,
    y_to_x,
)
from infgon.triangulation import (
    fan_window,
    flip,
    fountain_arc_sets,
    leapfrog_window,
    mutable_arcs,
    random_window,
    right_fountain_windows,
    running_example,
    two_sided_windows,
    window,
)

binary = st.text(alphabet="01", max_size=60)


def test_x_sequence_examples():
    assert x_sequence(running_example()).word == "0100011"
    assert x_sequence(fan_window(0, 5)).word == "1111"
    assert x_sequence(leapfrog_window(4), at=0, side="right").word == "000"
    with pytest.raises(NoFountainError):
        x_sequence(leapfrog_window(4))


def test_y_sequence_examples():
    assert list(y_sequence(running_example())) == [1, 3, 7, 8]
    assert list(y_sequence(fan_window(0, 5))) == [1, 2, 3, 4, 5]
    assert list(x_to_y(BinarySeq.parse("1,0,0,0,0,1,0,0,1,0,1"))) == [1, 2, 7, 10, 12]
    assert list(x_to_y(BinarySeq("0100011"))) == [1, 3, 7, 8]
    assert list(x_to_y(BinarySeq("0000"))) == [1]


@given(binary)
def test_x_y_mutually_inverse(word):
    x = BinarySeq(word)
    y = x_to_y(x)
    assert y[0] == 1
    assert y_to_x(y, len(x)) == x
    assert x_to_y(y_to_x(y, len(x))) == y


def test_x_y_inverse_on_random_words():
    rng = random.Random(3)
    for _ in range(1000):
        x = BinarySeq("".join(rng.choice("01") for _ in range(rng.randrange(0, 40))))
        assert y_to_x(x_to_y(x), len(x)) == x


def test_gap_sequence_must_increase():
    with pytest.raises(ValueError):
        GapSeq((1, 3, 3))
    with pytest.raises(ValueError):
        GapSeq((0, 2))


def test_binary_seq_basics():
    s = BinarySeq("0100011")
    assert s[2] == 1 and s[1] == 0 and len(s) == 7
    with pytest.raises(IndexError):
        s[0]
    assert s.with_flip(2).word == "0000011"
    assert BinarySeq.from_json(s.to_json()) == s
    assert BinarySeq([1, 0, 1]).word == "101"
    assert str(s) == "0,1,0,0,0,1,1"
    with pytest.raises(ValueError):
        BinarySeq("012")


def test_mutation_effect_examples():
    w = running_example()
    e = predict_mutation_effect(w, Arc(0, 3))
    assert (e.position, e.before, e.after) == (2, 1, 0)
    assert e.apply(x_sequence(w)).word == "0000011"
    e = predict_mutation_effect(w, Arc(3, 7))
    assert (e.position, e.before, e.after) == (4, 0, 1)
    assert check_mutation_effect(w, Arc(3, 7)) == e
    assert predict_mutation_effect(w, Arc(3, 5)).unchanged
    assert str(MutationEffect()) == "Unchanged"
    assert e.to_json() == {"effect": "FlipAt", "position": 4, "from": 0, "to": 1}


def test_mutation_effect_exhaustive():
    for w in right_fountain_windows(9):
        for arc in mutable_arcs(w):
            effect = check_mutation_effect(w, arc)
            assert effect.apply(x_sequence(w)) == x_sequence(flip(w, arc))


def test_mutation_effect_on_left_side():
    for w in two_sided_windows(5, 2):
        for arc in mutable_arcs(w):
            check_mutation_effect(w, arc, side="left")
            check_mutation_effect(w, arc, side="right")


def test_mismatch_is_reported(monkeypatch):
    import infgon.sequences as seq

    monkeypatch.setattr(seq, "predict_mutation_effect", lambda *a, **k: seq.UNCHANGED)
    with pytest.raises(MismatchError):
        seq.check_mutation_effect(running_example(), Arc(0, 3))


def test_differ_finitely_examples():
    r = sequences_differ_finitely(BinarySeq("0100011"), BinarySeq("0000011"))
    assert r and r.differences == (2,) and r.count == 1
    s = BinarySeq("0110")
    assert sequences_differ_finitely(s, s).count == 0
    alt, zero = BinarySeq("10" * 50), BinarySeq("0" * 100)
    r = sequences_differ_finitely(alt, zero)
    assert r.count == 50
    assert not sequences_differ_finitely(alt, zero, threshold=10)
    r = sequences_differ_finitely(BinarySeq("0101"), BinarySeq("01"))
    assert r.overlap == 2 and r.left_tail == "01" and r.right_tail == ""


def test_consecutive_ones_examples():
    assert not has_consecutive_ones(BinarySeq("0101"))
    assert has_consecutive_ones(BinarySeq("0110"))
    assert not has_consecutive_ones(BinarySeq(""))
    assert has_consecutive_ones([1, 1])


def test_special_window_examples():
    assert not is_special_window(running_example())
    assert not is_special_window(fan_window(0, 6))
    assert is_special_window(window(0, 4, [(0, 2), (0, 4), (2, 4)], fountain=0))


def test_specialize_examples():
    s = specialize(running_example())
    # (0,8) closes the window, so the pair at 6,7 loses its earlier letter
    assert x_sequence(s).word == "0100001"
    assert is_special_window(s)
    fan = x_sequence(fan_window(0, 6))
    sf = x_sequence(specialize(fan_window(0, 6)))
    assert sf.word == "10101"
    assert sequences_differ_finitely(fan, sf).differences == (2, 4)
    assert specialize_word(BinarySeq("0110"), last_fixed=False).word == "0100"
    assert specialize_word(BinarySeq("111")).word == "101"


def test_special_iff_no_consecutive_ones_exhaustive():
    for w in right_fountain_windows(9):
        x = x_sequence(w)
        assert is_special_window(w) == (not has_consecutive_ones(x))
        _, a2 = fountain_arc_sets(w)
        for p, q in zip(x.positions(), list(x.positions())[1:]):
            if x[p] and x[q]:
                # consecutive fountain endpoints p+1, q+1 give a boundary arc
                assert Arc(p + 1, q + 1) in a2


@given(st.integers(0, 10_000))
def test_specialize_properties(seed):
    w = random_window(random.Random(seed), 12)
    x = x_sequence(w)
    s = specialize(w)
    sx = x_sequence(s)
    assert not has_consecutive_ones(sx)
    assert sequences_differ_finitely(x, sx).count == x.word.count("11")
    assert sx == specialize_word(x)


def test_psi_examples():
    left, right = psi(fan_window(-5, 5))
    assert left.word == right.word == "1111"
    left, right = psi(leapfrog_window(4), at=0)
    assert right.word == "000"


@given(st.integers(0, 10_000))
def test_psi_mirror_swaps_sides(seed):
    w = random_window(random.Random(seed), 9, two_sided=True)
    left, right = psi(w)
    m_left, m_right = psi(w.mirror())
    assert (m_left, m_right) == (right, left)


def test_penrose_examples():
    assert penrose_encode(BinarySeq("110")).word == "10100"
    assert penrose_decode(BinarySeq("10100")).word == "110"
    assert penrose_decode(BinarySeq("0101")).word == "011"
    with pytest.raises(ConsecutiveOnesError):
        penrose_decode(BinarySeq("110"))


@given(binary)
def test_penrose_round_trip(word):
    s = BinarySeq(word)
    t = penrose_encode(s)
    assert not has_consecutive_ones(t)
    assert penrose_decode(t) == s
    assert len(t) == len(s) + s.word.count("1")


def test_words_enumerates_all():
    assert [w.word for w in words(2)] == ["00", "01", "10", "11"]
    assert [w.word for w in words(0)] == [""]
