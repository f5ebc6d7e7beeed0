from fractions import Fraction
from itertools import permutations
from math import comb
import random

from hypothesis import given, settings, strategies as st
import numpy as np
import pytest

from heckeseries import linalg
from heckeseries.errors import CapacityError, InvalidInputError
from heckeseries.hecke import (
    HeckeElement,
    QContext,
    act_on_tensor,
    antisymmetrizer_y,
    apply_generator,
    hecke_mul,
    identity_perm,
    left_mul_generator,
    length,
    q_factorial,
    q_int,
    reduced_word,
    sparse_columns,
    symmetrizer_x,
)
from heckeseries.symmetry import fixture_standard, fixture_super

Q_VALUES = [Fraction(1), Fraction(2), Fraction(3, 2)]


def T(i, n, ctx):
    return HeckeElement.generator(i, n, ctx)


def word_product(word, n, ctx):
    out = HeckeElement.one(n, ctx)
    for i in word:
        out = out * T(i, n, ctx)
    return out


def test_qcontext_excludes_zero_and_minus_one():
    for q in (0, -1):
        with pytest.raises(InvalidInputError):
            QContext(Fraction(q))


def test_q_integers():
    two = QContext(Fraction(2))
    assert q_int(3, two) == 7
    assert q_factorial(3, two) == 21
    assert q_factorial(0, two) == 1
    one = QContext(Fraction(1))
    for n in range(6):
        assert q_int(n, one) == n


def test_reduced_words_have_length_many_letters():
    for n in range(1, 5):
        for w in permutations(range(n)):
            word = reduced_word(w)
            assert len(word) == length(w)
            rebuilt = identity_perm(n)
            for i in reversed(word):
                rebuilt = left_mul_generator(i, rebuilt)
            assert rebuilt == w


def test_quadratic_relation():
    for q in Q_VALUES:
        ctx = QContext(q)
        s = T(1, 2, ctx)
        expected = s.scale(q - 1) + HeckeElement.one(2, ctx).scale(q)
        assert s * s == expected


def test_identity_is_neutral():
    ctx = QContext(Fraction(2))
    for w in permutations(range(3)):
        tw = HeckeElement.basis(w, ctx)
        assert HeckeElement.one(3, ctx) * tw == tw
        assert tw * HeckeElement.one(3, ctx) == tw


def test_braid_relation_in_h3():
    for q in Q_VALUES:
        ctx = QContext(q)
        lhs = word_product((1, 2, 1), 3, ctx)
        assert lhs == word_product((2, 1, 2), 3, ctx)
        assert lhs == HeckeElement.basis((2, 1, 0), ctx)


def test_basis_elements_match_any_reduced_word():
    ctx = QContext(Fraction(3, 2))
    for w in permutations(range(4)):
        assert word_product(reduced_word(w), 4, ctx) == HeckeElement.basis(w, ctx)


@settings(max_examples=40, deadline=None)
@given(
    st.integers(2, 4).flatmap(
        lambda n: st.tuples(st.just(n), *[st.permutations(list(range(n))) for _ in range(3)])
    ),
    st.sampled_from(Q_VALUES),
)
def test_multiplication_is_associative(data, q):
    n, u, v, w = data
    ctx = QContext(q)
    a, b, c = (HeckeElement.basis(tuple(p), ctx) for p in (u, v, w))
    assert (a * b) * c == a * (b * c)


def test_mismatched_elements_are_rejected():
    two, three = QContext(Fraction(2)), QContext(Fraction(3))
    with pytest.raises(InvalidInputError):
        hecke_mul(HeckeElement.one(2, two), HeckeElement.one(3, two), two)
    with pytest.raises(InvalidInputError):
        HeckeElement.one(2, two) + HeckeElement.one(2, three)
    with pytest.raises(InvalidInputError):
        T(3, 3, two)
    with pytest.raises(InvalidInputError):
        HeckeElement(2, two, (((0, 0), 1),))


def test_small_idempotents():
    ctx = QContext(Fraction(2))
    e, s = (0, 1), (1, 0)
    assert antisymmetrizer_y(2, ctx).as_dict() == {e: Fraction(2, 3), s: Fraction(-1, 3)}
    assert symmetrizer_x(2, ctx).as_dict() == {e: Fraction(1, 3), s: Fraction(1, 3)}
    assert symmetrizer_x(1, ctx) == HeckeElement.one(1, ctx)
    assert antisymmetrizer_y(1, ctx) == HeckeElement.one(1, ctx)


@pytest.mark.parametrize("q", Q_VALUES)
@pytest.mark.parametrize("n", [2, 3, 4])
def test_idempotent_relations(n, q):
    ctx = QContext(q)
    x, y = symmetrizer_x(n, ctx), antisymmetrizer_y(n, ctx)
    assert x * x == x
    assert y * y == y
    assert (x * y).is_zero()
    assert (y * x).is_zero()
    for i in range(1, n):
        assert x * T(i, n, ctx) == x.scale(q)
        assert T(i, n, ctx) * x == x.scale(q)
        assert y * T(i, n, ctx) == y.scale(-1)
        assert T(i, n, ctx) * y == y.scale(-1)


def test_apply_generator_on_basis_vector():
    flip = fixture_standard(2, 1)
    # x_0 ⊗ x_1 ⊗ x_1 has index 0·4 + 1·2 + 1 = 3; R_1 swaps the first two factors
    assert apply_generator(1, {3: Fraction(1)}, flip.R, 2, 3) == {5: 1}
    assert apply_generator(2, {3: Fraction(1)}, sparse_columns(flip.R), 2, 3) == {3: 1}


def test_act_on_tensor_basics():
    sym = fixture_standard(2, 2)
    ctx = QContext(sym.q)
    assert linalg.matrices_equal(act_on_tensor(HeckeElement.one(3, ctx), sym, 3), linalg.identity(8))
    assert linalg.matrices_equal(act_on_tensor(T(1, 2, ctx), sym, 2), sym.R)


def test_antisymmetrizer_of_flip_is_rank_one_projector():
    flip = fixture_standard(2, 1)
    y = act_on_tensor(antisymmetrizer_y(2, QContext(flip.q)), flip, 2)
    assert linalg.rank(y) == 1
    assert linalg.matrices_equal(y @ y, y)


def test_act_on_tensor_is_an_algebra_map():
    rng = random.Random(5)
    for sym in (fixture_standard(2, 2), fixture_standard(3, Fraction(1, 2)), fixture_super(1, 1)):
        ctx = QContext(sym.q)
        for n in (2, 3):
            perms = list(permutations(range(n)))
            for _ in range(3):
                a = HeckeElement.from_mapping(n, ctx, {rng.choice(perms): rng.randint(-3, 3) for _ in range(3)})
                b = HeckeElement.from_mapping(n, ctx, {rng.choice(perms): rng.randint(-3, 3) for _ in range(3)})
                lhs = act_on_tensor(a * b, sym, n)
                rhs = act_on_tensor(a, sym, n) @ act_on_tensor(b, sym, n)
                assert linalg.matrices_equal(lhs, rhs)


def test_act_on_tensor_rejects_mismatches():
    sym = fixture_standard(2, 2)
    with pytest.raises(InvalidInputError):
        act_on_tensor(HeckeElement.one(2, QContext(Fraction(3))), sym, 2)
    with pytest.raises(InvalidInputError):
        act_on_tensor(HeckeElement.one(2, QContext(sym.q)), sym, 3)


def test_act_on_tensor_respects_the_tensor_cap(monkeypatch):
    monkeypatch.setattr("heckeseries.config.TENSOR_DIM_CAP", 10)
    sym = fixture_standard(2, 1)
    with pytest.raises(CapacityError):
        act_on_tensor(HeckeElement.one(4, QContext(sym.q)), sym, 4)


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_antisymmetrizer_rank_for_the_flip(d):
    flip = fixture_standard(d, 1)
    ctx = QContext(flip.q)
    for n in range(1, 5 if d == 4 else 6):
        assert linalg.rank(act_on_tensor(antisymmetrizer_y(n, ctx), flip, n)) == comb(d, n)


def test_symmetrizer_ranks_for_the_deformed_standard_fixture():
    sym = fixture_standard(2, 2)
    ctx = QContext(sym.q)
    # x_1 = y_1 = 1
    assert linalg.rank(act_on_tensor(symmetrizer_x(1, ctx), sym, 1)) == 2
    for n in range(2, 4):
        x = act_on_tensor(symmetrizer_x(n, ctx), sym, n)
        y = act_on_tensor(antisymmetrizer_y(n, ctx), sym, n)
        assert linalg.rank(x) == n + 1
        assert linalg.rank(y) == comb(2, n)
        assert linalg.is_zero(x @ y)
        assert isinstance(x, np.ndarray)
