from fractions import Fraction
import json
from math import comb
import random

import pytest

from heckeseries import linalg
from heckeseries.errors import AxiomCheckError, CapacityError, InvalidInputError, ReconstructionError
from heckeseries.hecke import QContext, act_on_tensor, antisymmetrizer_y, symmetrizer_x
from heckeseries.partitions import Birank, in_gamma, partitions_up_to
from heckeseries.series import Polynomial, birank, duality_check, expand
from heckeseries.symfunc import dim_simple
from heckeseries.symmetry import (
    DEFAULT_FIXTURES,
    HeckeSymmetry,
    RMatrixFile,
    axiom_report,
    check_braid,
    check_half_adjoint,
    check_hecke,
    dims_lambda,
    dims_s,
    dump_rmatrix,
    fixture_standard,
    fixture_super,
    half_adjoint,
    load_rmatrix,
    padded_dims,
    parse_fixture,
    perturbed,
    poincare_from_dims,
    poincare_lambda,
    poincare_s,
    read_rmatrix_file,
    series_dims,
    usable_strands,
)


def ones(d):
    return linalg.to_matrix([[1] * (d * d) for _ in range(d * d)])


@pytest.mark.parametrize("d", [1, 2, 3])
def test_flip_passes_every_axiom(d):
    flip = fixture_standard(d, 1).R
    assert check_braid(flip, d)
    assert check_hecke(flip, 1, d)
    assert check_half_adjoint(flip, d)


def test_scaled_identity_satisfies_braid():
    assert check_braid(linalg.identity(4) * Fraction(3), 2)


def test_flip_fails_hecke_at_the_wrong_parameter():
    assert not check_hecke(fixture_standard(2, 1).R, 2, 2)


def test_perturbed_flip_fails_braid():
    broken = perturbed(fixture_standard(2, 1), 0, 1)
    assert not check_braid(broken.R, 2)
    assert "braid" in axiom_report(broken.R, broken.q, 2).failed


def test_all_ones_matrix_has_a_singular_half_adjoint():
    assert linalg.rank(half_adjoint(ones(2), 2)) == 1
    assert not check_half_adjoint(ones(2), 2)


@pytest.mark.parametrize("d,q0", [(2, 2), (3, 2), (2, Fraction(1, 3)), (4, 3)])
def test_standard_deformation_passes_every_axiom(d, q0):
    sym = fixture_standard(d, q0)
    assert sym.q == Fraction(q0) ** 2
    report = axiom_report(sym.R, sym.q, d)
    assert report.ok
    assert report.failed == []


@pytest.mark.parametrize("m,n", [(1, 1), (2, 1), (1, 2), (0, 1), (2, 0)])
def test_super_fixture_passes_every_axiom(m, n):
    sym = fixture_super(m, n)
    assert sym.d == m + n
    assert axiom_report(sym.R, 1, sym.d).ok


def test_super_fixture_without_odd_part_is_the_flip():
    assert linalg.matrices_equal(fixture_super(3, 0).R, fixture_standard(3, 1).R)


def test_fixtures_reject_bad_parameters():
    with pytest.raises(InvalidInputError):
        fixture_standard(2, 0)
    with pytest.raises(InvalidInputError):
        fixture_standard(0, 1)
    with pytest.raises(InvalidInputError):
        fixture_super(0, 0)


def test_parse_fixture():
    assert parse_fixture("standard:2:2").q == 4
    assert parse_fixture("standard:2:1/2").q == Fraction(1, 4)
    assert parse_fixture("super:1:2").d == 3
    for bad in ("standard:2", "cubic:1:1", "super:a:1", "standard:2:x"):
        with pytest.raises(InvalidInputError):
            parse_fixture(bad)


def test_symmetry_construction_checks_axioms():
    with pytest.raises(AxiomCheckError) as excinfo:
        HeckeSymmetry(2, 1, ones(2))
    assert "half_adjoint" in excinfo.value.failed
    unchecked = HeckeSymmetry(2, 1, ones(2), check=False)
    assert repr(unchecked) == "HeckeSymmetry(d=2, q=1)"
    with pytest.raises(InvalidInputError):
        HeckeSymmetry(2, -1, fixture_standard(2, 1).R)
    with pytest.raises(InvalidInputError):
        HeckeSymmetry(3, 1, fixture_standard(2, 1).R)


def test_random_single_entry_perturbations_are_rejected():
    rng = random.Random(3)
    # mixed-parity super fixtures have perturbations that stay Hecke symmetries
    for name in ("standard:2:1", "standard:2:2", "standard:3:1", "standard:3:2", "super:0:1"):
        sym = parse_fixture(name)
        size = sym.d * sym.d
        for _ in range(20):
            broken = perturbed(sym, rng.randrange(size), rng.randrange(size), rng.choice([1, -1, Fraction(1, 2)]))
            assert not axiom_report(broken.R, broken.q, broken.d).ok


@pytest.mark.parametrize(
    "fixture,N,expected",
    [
        ("standard:2:2", 4, [1, 2, 1, 0, 0]),
        ("super:1:1", 5, [1, 2, 2, 2, 2, 2]),
        ("super:0:1", 4, [1, 1, 1, 1, 1]),
        ("standard:3:2", 5, [1, 3, 3, 1, 0, 0]),
    ],
)
def test_dims_lambda_examples(fixture, N, expected):
    assert dims_lambda(parse_fixture(fixture), N) == expected


def test_dims_s_starts_with_dimension_of_v():
    for name in DEFAULT_FIXTURES:
        sym = parse_fixture(name)
        dims = dims_s(sym, 3)
        assert dims[:2] == [1, sym.d]


def test_dims_agree_with_idempotent_ranks():
    for name in ("standard:2:2", "standard:3:1", "super:1:1", "super:1:2"):
        sym = parse_fixture(name)
        ctx = QContext(sym.q)
        lam, s = dims_lambda(sym, 4), dims_s(sym, 4)
        for n in range(1, 5):
            y = act_on_tensor(antisymmetrizer_y(n, ctx), sym, n)
            x = act_on_tensor(symmetrizer_x(n, ctx), sym, n)
            assert lam[n] == linalg.rank(y)
            assert s[n] == linalg.rank(x)
            if n == 2:
                assert lam[n] + s[n] == sym.d ** n
            if n >= 3 and sym.d > 1:
                assert lam[n] + s[n] < sym.d ** n


def test_dims_respect_the_strand_cap(monkeypatch):
    monkeypatch.setattr("heckeseries.config.STRAND_CAP", 3)
    sym = fixture_standard(2, 1)
    with pytest.raises(CapacityError):
        dims_lambda(sym, 4)
    assert usable_strands(sym, 12) == 3


def test_usable_strands_respects_the_tensor_cap(monkeypatch):
    monkeypatch.setattr("heckeseries.config.TENSOR_DIM_CAP", 100)
    assert usable_strands(fixture_standard(3, 1), 12) == 4
    with pytest.raises(CapacityError):
        dims_s(fixture_standard(3, 1), 5)


def test_padded_dims_extends_only_after_a_zero():
    assert padded_dims([1, 2, 1, 0], 6) == [1, 2, 1, 0, 0, 0, 0]
    assert padded_dims([1, 2, 2, 2], 6) == [1, 2, 2, 2]
    assert padded_dims([1, 1, 0], 2) == [1, 1, 0]


def test_series_dims_pads_vanishing_exterior_powers():
    sym = fixture_standard(4, 1)
    assert usable_strands(sym, 12) == 7
    assert series_dims(sym, 12) == [1, 4, 6, 4, 1] + [0] * 8
    assert series_dims(fixture_super(1, 1), 5, "s") == [1, 2, 2, 2, 2, 2]
    with pytest.raises(InvalidInputError):
        series_dims(sym, 4, "wedge")


@pytest.mark.parametrize(
    "fixture,d,bounds",
    [("standard:4:1", 4, None), ("super:4:0", 4, None), ("standard:4:2", 4, None), ("standard:5:1", 5, (5, 2))],
)
def test_poincare_lambda_for_wide_fixtures(fixture, d, bounds):
    r = poincare_lambda(parse_fixture(fixture), bounds=bounds)
    assert r.numerator == Polynomial.of(1, 1) ** d
    assert r.denominator == Polynomial.one()
    assert birank(r) == Birank(d, 0)


@pytest.mark.parametrize(
    "fixture,num,den,b",
    [
        ("standard:2:1", [1, 2, 1], [1], (2, 0)),
        ("standard:2:2", [1, 2, 1], [1], (2, 0)),
        ("standard:3:1", [1, 3, 3, 1], [1], (3, 0)),
        ("standard:3:2", [1, 3, 3, 1], [1], (3, 0)),
        ("super:1:1", [1, 1], [1, -1], (1, 1)),
        ("super:2:1", [1, 2, 1], [1, -1], (2, 1)),
        ("super:1:2", [1, 1], [1, -2, 1], (1, 2)),
        ("super:0:1", [1], [1, -1], (0, 1)),
    ],
)
def test_poincare_lambda_closed_forms(fixture, num, den, b):
    r = poincare_lambda(parse_fixture(fixture))
    assert r.numerator == Polynomial(tuple(num))
    assert r.denominator == Polynomial(tuple(den))
    assert birank(r) == Birank(*b)


@pytest.mark.parametrize("name", DEFAULT_FIXTURES)
def test_lambda_and_s_series_are_dual(name):
    sym = parse_fixture(name)
    assert duality_check(poincare_lambda(sym, 8), poincare_s(sym, 8), 8)


@pytest.mark.parametrize("name", DEFAULT_FIXTURES)
def test_simple_dimensions_vanish_exactly_off_gamma(name):
    r = poincare_lambda(parse_fixture(name))
    b = birank(r)
    dims = expand(r, 8).coefficients
    for lam in partitions_up_to(8):
        value = dim_simple(lam, dims)
        assert value >= 0
        assert (value > 0) == in_gamma(lam, b)


def test_poincare_from_dims_propagates_reconstruction_failure():
    with pytest.raises(ReconstructionError):
        poincare_from_dims([1, 1, 2, 3, 5, 8, 13, 21, 34, 55], bounds=(1, 1))


def test_rmatrix_file_round_trip(tmp_path):
    sym = fixture_standard(2, 2)
    path = tmp_path / "standard.json"
    dump_rmatrix(sym, path)
    raw = json.loads(path.read_text())
    assert raw["d"] == 2
    assert raw["q"] == "4"
    assert raw["entries"][2][1] == "2"
    loaded = load_rmatrix(path)
    assert loaded.q == sym.q
    assert linalg.matrices_equal(loaded.R, sym.R)


def test_rmatrix_file_validation(tmp_path):
    bad_shape = tmp_path / "bad.json"
    bad_shape.write_text(json.dumps({"d": 2, "q": "1", "entries": [["1"]]}))
    with pytest.raises(InvalidInputError):
        read_rmatrix_file(bad_shape)
    not_json = tmp_path / "broken.json"
    not_json.write_text("{")
    with pytest.raises(InvalidInputError):
        read_rmatrix_file(not_json)
    with pytest.raises(InvalidInputError):
        read_rmatrix_file(tmp_path / "missing.json")


def test_rmatrix_file_loading_checks_axioms(tmp_path):
    path = tmp_path / "ones.json"
    path.write_text(RMatrixFile(d=2, q="1", entries=[["1"] * 4] * 4).model_dump_json())
    with pytest.raises(AxiomCheckError):
        load_rmatrix(path)
    assert load_rmatrix(path, check=False).R.shape == (4, 4)


def test_binomial_dims_of_the_flip():
    for d in range(1, 5):
        sym = fixture_standard(d, 1)
        N = min(5, usable_strands(sym, 5))
        assert dims_lambda(sym, N) == [comb(d, n) for n in range(N + 1)]
