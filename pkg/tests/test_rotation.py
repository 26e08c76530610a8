import hypothesis.strategies as st
import pytest
from hypothesis import given
from conftest import rotations, rotations_with_subset

from bouquet_petrial.boundary import boundary_count
from bouquet_petrial.rotation import (
    LoopKind,
    RotationError,
    SignedRotation,
    cyclic_shift,
    double_flip,
    equivalent,
    inverse_string,
    join,
    loop_kind,
    normalize,
    normalize_with_moves,
    parse_rotation,
    partial_petrial,
    render,
)


def R(*xs):
    return SignedRotation(xs)


def test_parse_sign_convention():
    r = parse_rotation("1 2 -1 2")
    assert r.word == (1, 2, -1, 2)
    assert loop_kind(r, 1) is LoopKind.NON_ORIENTABLE
    assert loop_kind(r, 2) is LoopKind.ORIENTABLE


def test_parse_plain():
    r = parse_rotation("1 2 1 2")
    assert r.word == (1, 2, 1, 2)
    assert r.n == 2


@pytest.mark.parametrize("text", ["1 2 3", "1 0 1", "1 x 1", "1 1 1"])
def test_parse_errors(text):
    with pytest.raises(RotationError):
        parse_rotation(text)


def test_parse_empty_is_lone_vertex():
    assert parse_rotation("").n == 0


@pytest.mark.parametrize(
    "word, expected",
    [((-1, 2, 1, 2), (1, 2, -1, 2)), ((2, 2, 1, 1), (1, 1, 2, 2)), ((), ())],
)
def test_normalize_examples(word, expected):
    assert normalize(SignedRotation(word)).word == expected


def test_equivalent_examples():
    assert equivalent(R(-1, 2, 1, 2), R(1, 2, -1, 2))
    assert not equivalent(R(1, 2, 1, 2), R(1, 1, 2, 2))
    assert equivalent(R(), R())


def test_loop_kind_equal_negative_signs():
    assert loop_kind(R(-1, -1), 1) is LoopKind.ORIENTABLE
    with pytest.raises(RotationError):
        loop_kind(R(1, 1), 2)


def test_partial_petrial_examples():
    assert partial_petrial(R(1, 2, 1, 2), {1}).word == (1, 2, -1, 2)
    r = R(3, -1, 2, 1, 3, 2)
    assert partial_petrial(r, set()) == r
    with pytest.raises(RotationError):
        partial_petrial(r, {4})


def test_inverse_string():
    assert inverse_string([1, 2]) == (-2, -1)
    assert inverse_string([-1]) == (1,)
    assert inverse_string([]) == ()


def test_join_examples():
    assert join(R(1, 1), R(1, 1)).word == (1, 1, 2, 2)
    r = R(2, -5, 2, 5)
    j = join(R(), r)
    assert j.n == 2 and equivalent(j, R(1, -2, 1, 2))


@given(rotations(), rotations())
def test_join_face_law(r1, r2):
    assert boundary_count(join(r1, r2)) == boundary_count(r1) + boundary_count(r2) - 1


@given(rotations())
def test_normalize_idempotent(r):
    assert normalize(normalize(r)) == normalize(r)


@given(rotations())
def test_normalize_replays_from_recorded_moves(r):
    canon, shift, flipped = normalize_with_moves(r)
    assert double_flip(cyclic_shift(r, shift), flipped) == canon


@given(rotations(), st.randoms(use_true_random=False))
def test_normalize_ignores_shift_and_flips(r, rng):
    moved = cyclic_shift(r, rng.randrange(len(r.word) + 1))
    moved = double_flip(moved, [k for k in r.labels if rng.random() < 0.5])
    assert equivalent(r, moved)


@given(rotations())
def test_render_parse_roundtrip(r):
    canon = normalize(r)
    assert parse_rotation(render(canon)) == canon


@given(rotations_with_subset())
def test_partial_petrial_is_involution(case):
    r, subset = case
    assert equivalent(partial_petrial(partial_petrial(r, subset), subset), r)


@given(rotations())
def test_full_twist_twice(r):
    full = r.labels
    assert equivalent(partial_petrial(partial_petrial(r, full), full), r)
