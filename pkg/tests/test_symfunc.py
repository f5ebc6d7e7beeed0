from fractions import Fraction
import random

from hypothesis import given, settings, strategies as st
import pytest

from heckeseries.errors import InvalidInputError
from heckeseries.partitions import (
    Birank,
    Partition,
    in_gamma,
    is_splitting,
    partitions_of,
    partitions_up_to,
    rectangle,
)
from heckeseries.series import RationalFunction, Polynomial, expand
from heckeseries.symfunc import (
    ElementaryPolynomial,
    SchurExpansion,
    complete_homogeneous,
    dim_simple,
    dim_splitting,
    hook_schur_identity_check,
    kostka,
    lr_coeff,
    lr_oracle,
    schur_eval,
    schur_monomials,
    schur_to_elementary,
    tensor_decompose,
)

SMALL = partitions_up_to(4)

positive_rationals = st.fractions(min_value=Fraction(1, 5), max_value=5, max_denominator=5)


def P(*parts):
    return Partition(parts)


def test_lr_coeff_examples():
    assert lr_coeff(P(3, 2, 2), P(1), P(4, 2, 2)) == 1
    assert lr_coeff(P(2, 1), P(2, 1), P(3, 2, 1)) == 2
    for lam in SMALL:
        assert lr_coeff(lam, P(), lam) == 1


def test_lr_coeff_vanishes_off_support():
    assert lr_coeff(P(2), P(1), P(1, 1, 1)) == 0
    assert lr_coeff(P(2), P(1), P(4)) == 0


def test_tensor_decompose_examples():
    assert str(tensor_decompose(P(3, 2, 2), P(1), Birank(1, 2))) == "4,2,2:1  3,2,2,1:1"
    assert str(tensor_decompose(P(1), P(1))) == "2:1  1,1:1"
    assert str(tensor_decompose(P(), P())) == "-:1"


def test_tensor_decompose_of_two_hooks():
    expansion = tensor_decompose(P(2, 1), P(2, 1))
    assert len(expansion) == 7
    assert expansion.as_dict()[P(3, 2, 1)] == 2
    assert "3,2,1:2" in str(expansion)


def test_tensor_decompose_rectangle_family():
    for m in range(1, 4):
        for n in range(1, 4):
            b = Birank(m, n)
            for k in range(5):
                lam = Partition((n + 1,) * m + (n,) * (k + 1))
                found = tensor_decompose(lam, rectangle(k, 1), b)
                expected = {
                    Partition((n + 2,) * l + (n + 1,) * (m - l) + (n,) * (k + 1) + (1,) * (k - l)): 1
                    for l in range(min(k, m) + 1)
                }
                assert found.as_dict() == expected


def test_lr_matches_monomial_oracle():
    for lam in SMALL:
        for mu in SMALL:
            assert tensor_decompose(lam, mu) == lr_oracle(lam, mu)


def test_lr_symmetries():
    for lam in SMALL:
        for mu in SMALL:
            for gamma in partitions_of(lam.weight + mu.weight):
                c = lr_coeff(lam, mu, gamma)
                assert c == lr_coeff(mu, lam, gamma)
                assert c == lr_coeff(lam.conjugate(), mu.conjugate(), gamma.conjugate())


def test_schur_evaluation_is_a_ring_map():
    rng = random.Random(7)
    for lam in SMALL:
        for mu in SMALL:
            nvars = max(lam.length, mu.length, 1)
            for _ in range(5):
                v = [Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(nvars)]
                lhs = schur_eval(lam, v) * schur_eval(mu, v)
                rhs = sum((c * schur_eval(g, v) for g, c in tensor_decompose(lam, mu).terms), Fraction(0))
                assert lhs == rhs


def test_schur_expansion_validation():
    with pytest.raises(InvalidInputError):
        SchurExpansion(((P(1), 0),))
    with pytest.raises(InvalidInputError):
        SchurExpansion(((P(1), 1), (P(1), 2)))
    ordered = SchurExpansion.from_mapping({P(1, 1): 1, P(2): 3})
    assert ordered.partitions() == [P(2), P(1, 1)]
    assert ordered.to_json() == [
        {"partition": [2], "multiplicity": 3},
        {"partition": [1, 1], "multiplicity": 1},
    ]


def test_kostka_numbers():
    assert kostka(P(2, 1), (1, 1, 1)) == 2
    assert kostka(P(3), (1, 1, 1)) == 1
    assert kostka(P(1, 1, 1), (2, 1)) == 0
    assert sum(schur_monomials(P(2, 1), 2).values()) == 2


@pytest.mark.parametrize(
    "lam,text",
    [((1, 1, 1), "e3"), ((2,), "e1^2 - e2"), ((2, 1), "e1*e2 - e3"), ((), "1")],
)
def test_schur_to_elementary_examples(lam, text):
    assert str(schur_to_elementary(Partition(lam))) == text


def test_schur_to_elementary_matches_evaluation():
    rng = random.Random(11)
    for lam in partitions_up_to(6):
        poly = schur_to_elementary(lam)
        for _ in range(4):
            v = [Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(4)]
            e_poly = Polynomial.from_roots(v)
            e = [e_poly.coefficient(i) for i in range(11)]
            assert poly.evaluate(e) == schur_eval(lam, v)


def test_elementary_polynomial_rejects_bad_indices():
    with pytest.raises(InvalidInputError):
        ElementaryPolynomial((((0,), 1),))
    assert ElementaryPolynomial.from_mapping({(1,): 1, (2,): -1}).max_index == 2


def test_complete_homogeneous():
    assert complete_homogeneous([1, 1], 3) == [1, 2, 3, 4]
    assert complete_homogeneous([], 2) == [1, 0, 0]


@pytest.mark.parametrize(
    "lam,values,expected",
    [
        ((3,), (Fraction(2, 3),), Fraction(8, 27)),
        ((1, 1), (1, 1, 1), 3),
        ((2, 1), (1, 1), 2),
        ((1, 1, 1), (1, 1), 0),
        ((), (5,), 1),
    ],
)
def test_schur_eval_examples(lam, values, expected):
    assert schur_eval(Partition(lam), values) == expected


def test_schur_eval_counts_tableaux():
    for lam in partitions_up_to(6):
        for nvars in range(1, 5):
            assert schur_eval(lam, [1] * nvars) == sum(schur_monomials(lam, nvars).values())


def test_dim_simple_examples():
    binomial = [1, 2, 1, 0, 0]
    assert dim_simple(P(2), binomial) == 3
    super11 = [1, 2, 2, 2, 2]
    assert dim_simple(P(1, 1, 1), super11) == 2
    for k in range(5):
        assert dim_simple(rectangle(k, 1), super11) == super11[k]


def test_dim_simple_needs_enough_dims():
    with pytest.raises(InvalidInputError):
        dim_simple(P(2), [1, 2])


def test_dim_simple_matches_classical_dimensions():
    for d in range(1, 5):
        dims = expand(RationalFunction(Polynomial.of(1, 1) ** d), 6).coefficients
        for lam in partitions_up_to(6):
            assert dim_simple(lam, dims) == schur_eval(lam, [1] * d)


def test_dim_splitting_examples():
    assert dim_splitting(P(1, 1), [1, 2], [3]) == (1 + 3) * (2 + 3)
    assert dim_splitting(P(2, 2), [1, 2], [3]) == (1 + 3) * (2 + 3) * 2
    for a in range(1, 5):
        for b in range(0, 4):
            assert dim_splitting(Partition((a,) + (1,) * b), [1], [1]) == 2
    x1, y1, y2 = Fraction(2), Fraction(1, 3), Fraction(5)
    expected = (x1 + y1) * (x1 + y2) * x1 * y1 ** 2 * y2 ** 2
    assert dim_splitting(P(3, 2, 2), [x1], [y1, y2]) == expected


def test_dim_splitting_rejects_non_splitting_and_non_positive():
    with pytest.raises(InvalidInputError):
        dim_splitting(P(1), [1], [1, 1])
    with pytest.raises(InvalidInputError):
        dim_splitting(P(2), [0], [1])


@settings(max_examples=25, deadline=None)
@given(
    st.lists(positive_rationals, min_size=1, max_size=2),
    st.lists(positive_rationals, min_size=1, max_size=2),
)
def test_dim_splitting_agrees_with_general_formula(x, y):
    b = Birank(len(x), len(y))
    r = RationalFunction(Polynomial.from_roots(x), Polynomial.from_roots(y, sign=-1))
    dims = expand(r, 10).coefficients
    for lam in partitions_up_to(10):
        if in_gamma(lam, b) and is_splitting(lam, b):
            assert dim_simple(lam, dims) == dim_splitting(lam, x, y)


def test_hook_schur_identity():
    for k in range(1, 5):
        assert hook_schur_identity_check(k, 1, [Fraction(7, 3)])
    assert hook_schur_identity_check(1, 2, [1, 2])
    assert hook_schur_identity_check(2, 3, [1, 2, 3])


@pytest.mark.parametrize("k,y", [(1, [1, 2, 3]), (2, [1, 2]), (3, [Fraction(1, 2), 3]), (2, [1, 2, 3])])
def test_hook_schur_identity_on_non_self_conjugate_shapes(k, y):
    assert hook_schur_identity_check(k, len(y), y)


def test_hook_schur_identity_uses_the_box_complement():
    # s_(2)(1, 2) = 7 = s_(2)(1, 1/2) * 2^2, while s_(1,1)(1, 2) = 2
    assert schur_eval(rectangle(1, 2), [1, 2]) == 7
    assert schur_eval(rectangle(2, 1), [1, 2]) == 2
    assert hook_schur_identity_check(2, 2, [1, 2])


@given(st.integers(1, 4), st.lists(positive_rationals, min_size=1, max_size=3))
def test_hook_schur_identity_property(k, y):
    assert hook_schur_identity_check(k, len(y), y)


def test_hook_schur_identity_rejects_bad_input():
    with pytest.raises(InvalidInputError):
        hook_schur_identity_check(1, 2, [1])
    with pytest.raises(InvalidInputError):
        hook_schur_identity_check(1, 1, [0])
