import itertools
import random

import pytest
from hypothesis import given, strategies as st

from z2lab.gf2 import (
    BitVec,
    Gf2Matrix,
    basis_map,
    dot,
    gram_factor,
    gram_matrix,
    is_alternating,
    is_tournament,
    rank,
    tournament_rank_floor,
)

from conftest import bitvecs, matrices


def bv(s):
    return BitVec.from_str(s)


def test_dot_figure_vectors():
    assert dot(bv("110"), bv("011")) == 1


def test_dot_even_weight_self_is_zero():
    assert dot(bv("1100"), bv("1100")) == 0
    assert dot(bv("000"), bv("101")) == 0


def test_dot_length_mismatch():
    with pytest.raises(ValueError):
        dot(bv("10"), bv("100"))


def test_bitvec_text_round_trip():
    v = bv("0110")
    assert str(v) == "0110"
    assert v[1] == 1 and v[0] == 0


def test_rank_examples():
    assert rank(Gf2Matrix.identity(2)) == 2
    assert rank(Gf2Matrix.from_lists([[0, 1, 1], [1, 0, 1], [1, 1, 0]])) == 2  # J - I, n = 3
    assert rank(Gf2Matrix.zeros(4, 3)) == 0


def _rank_oracle(m: Gf2Matrix) -> int:
    """Size of the span, counted by enumerating all row combinations."""
    span = {0}
    for r in m.data:
        span |= {s ^ r for s in span}
    return len(span).bit_length() - 1


@given(matrices())
def test_rank_matches_span_size(m):
    assert rank(m) == _rank_oracle(m)


@given(matrices())
def test_rank_of_transpose(m):
    assert rank(m) == rank(m.transpose())


@given(matrices(), st.data())
def test_rank_invariant_under_row_operations(m, data):
    if m.rows < 2:
        return
    i, j = data.draw(st.lists(st.integers(0, m.rows - 1), min_size=2, max_size=2, unique=True))
    rows = list(m.data)
    rows[i], rows[j] = rows[j], rows[i]
    assert rank(Gf2Matrix(m.rows, m.cols, tuple(rows))) == rank(m)
    rows[i] ^= rows[j]
    assert rank(Gf2Matrix(m.rows, m.cols, tuple(rows))) == rank(m)


def test_basis_map_examples():
    d, coords, basis = basis_map([bv("110"), bv("011"), bv("101")])
    assert d == 2
    assert coords(bv("101")) == coords(bv("110")) ^ coords(bv("011"))
    assert basis_map([bv("00"), bv("00")])[0] == 0


def test_basis_map_rejects_outside_span():
    _, coords, _ = basis_map([bv("100")])
    with pytest.raises(ValueError):
        coords(bv("010"))


@given(st.integers(1, 6).flatmap(lambda n: st.lists(bitvecs(n), min_size=1, max_size=6)), st.data())
def test_basis_map_preserves_xor(vectors, data):
    d, coords, basis = basis_map(vectors)
    assert d == len(basis) == rank(Gf2Matrix(len(vectors), vectors[0].length, tuple(v.bits for v in vectors)))
    u = data.draw(st.sampled_from(vectors))
    v = data.draw(st.sampled_from(vectors))
    assert coords(u ^ v) == coords(u) ^ coords(v)


def test_basis_map_independent_set_is_bijective():
    vecs = [bv("1000"), bv("1100"), bv("0111"), bv("0001")]
    d, coords, _ = basis_map(vecs)
    assert d == 4
    images = {coords(BitVec(4, b)) for b in range(16)}
    assert len(images) == 16


def test_is_tournament_examples():
    assert is_tournament(Gf2Matrix.from_lists([[0, 1], [0, 0]]))
    assert not is_tournament(Gf2Matrix.identity(2))


@given(st.integers(1, 7), st.randoms(use_true_random=False))
def test_every_orientation_is_a_tournament(n, rng):
    rows = [0] * n
    for i, j in itertools.combinations(range(n), 2):
        if rng.random() < 0.5:
            rows[i] |= 1 << j
        else:
            rows[j] |= 1 << i
    for i in range(n):
        if rng.random() < 0.5:
            rows[i] |= 1 << i
    assert is_tournament(Gf2Matrix(n, n, tuple(rows)))


def test_tournament_rank_floor_values():
    assert [tournament_rank_floor(n) for n in range(1, 8)] == [0, 1, 1, 2, 2, 3, 3]
    with pytest.raises(ValueError):
        tournament_rank_floor(0)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_tournament_floor_is_attained_exhaustively(n):
    """Independent enumeration: all orientations and diagonals."""
    pairs = list(itertools.combinations(range(n), 2))
    best = n
    for choice in itertools.product((0, 1), repeat=len(pairs) + n):
        rows = [0] * n
        for (i, j), c in zip(pairs, choice):
            rows[i if c else j] |= 1 << (j if c else i)
        for i, c in enumerate(choice[len(pairs):]):
            rows[i] |= c << i
        best = min(best, rank(Gf2Matrix(n, n, tuple(rows))))
    assert best == tournament_rank_floor(n)


def test_random_large_tournaments_have_high_rank():
    from z2lab.acceptance import random_tournament

    rng = random.Random(7)
    assert min(rank(random_tournament(51, rng)) for _ in range(50)) >= 25


@given(st.integers(0, 6).flatmap(lambda n: st.lists(bitvecs(n), min_size=1, max_size=6)))
def test_gram_factor_reproduces_gram(vectors):
    g = gram_matrix(vectors)
    images = gram_factor(g)
    assert len(images) == len(vectors)
    assert gram_matrix(images) == g


def test_gram_factor_alternating_needs_extra_coordinate():
    # dot products of 110, 011, 101 form an alternating nondegenerate form on a 2-dim span
    vecs = [bv("110"), bv("011")]
    g = gram_matrix(vecs)
    assert is_alternating(g)
    assert gram_factor(g)[0].length == 3


@given(matrices())
def test_matrix_text_round_trip(m):
    assert Gf2Matrix.from_text(m.to_text()) == m
