from fractions import Fraction

import pytest
from conftest import exact_forms
from hypothesis import given
from hypothesis import strategies as st

from tensorclass.algebra import BinaryForm, SymmetricTensor2, exact_form, random_transform, transform
from tensorclass.classify import (
    ROOT_FALLBACK,
    SPECTRAL,
    _cross_ratio_candidates,
    canonical_form,
    classify,
    classify_complex_cubic,
    classify_complex_quartic,
    classify_real,
    classify_real_cubic,
    encode_report,
    modulus,
    takes_modulus,
)
from tensorclass.errors import (
    AmbiguityError,
    BoundaryAmbiguity,
    InvalidType,
    MissingModulus,
    NonRealInput,
    UnsupportedDegree,
)
from tensorclass.scalars import GaussianRational
from tensorclass.tolerances import DEFAULT

G = GaussianRational


def tensor(*entries):
    return SymmetricTensor2.from_entries(entries)


@pytest.mark.parametrize(
    "entries, complex_id, real_id, sig",
    [
        ((1, 2, 4, 8), 2, 2, (2, 1)),
        ((9, 6, 6, 9), 3, 3, (3, 0)),
        ((16, 8, 4, 2, 1), 2, 2, (2, 1)),
        ((2, 1, 1, 1, 2), 5, 9, (4, 2)),
        ((1, 0, 0, 0, -1), 3, 5, (4, 0)),
        ((1, 0, 0, 0, 1), 3, 3, (4, 0)),
    ],
)
def test_worked_examples(entries, complex_id, real_id, sig):
    r = classify(tensor(*entries))
    assert (r.complex_type.type_id, r.real_type.type_id, r.signature.as_tuple()) == (complex_id, real_id, sig)
    assert r.method == SPECTRAL


def test_report_text():
    r = classify(tensor(1, 2, 4, 8))
    assert str(r) == "complex: Type 2, real: Type 2, signature: (2 classes, 1 zero)"
    assert str(classify(exact_form([1, 0, 0, 0, 1]))).endswith("mu=0")


@pytest.mark.parametrize("coeffs, real_id", [((1, 0, 0, 1), 3), ((1, 0, -3, 0), 4), ((0, 3, 0, 0), 5)])
def test_real_cubic_examples(coeffs, real_id):
    assert classify_real_cubic(exact_form(coeffs)).type_id == real_id


def test_quartic_type_10():
    assert classify_real(exact_form([0, 4, 0, 0, 0])).type_id == 10


def _table_cases():
    for order, domain, last in ((3, "complex", 4), (4, "complex", 6), (3, "real", 5), (4, "real", 10)):
        for type_id in range(1, last + 1):
            if not takes_modulus(order, domain, type_id):
                yield order, domain, type_id, None
                continue
            mus = {3: [0, 1, -1] if domain == "complex" else [0, 1], 4: [-1, -2], 5: [-1, 0, 1]}[type_id]
            for mu in mus:
                yield order, domain, type_id, G(mu)
            if domain == "real" and type_id == 3:
                yield order, domain, type_id, G(Fraction(-1, 5))


@pytest.mark.parametrize("order, domain, type_id, mu", list(_table_cases()))
@pytest.mark.parametrize("mode", ["exact", "float"])
def test_canonical_forms_are_fixed_points(order, domain, type_id, mu, mode):
    f = canonical_form(type_id, order, domain, mu).to_mode(mode)
    if domain == "complex":
        got = (classify_complex_cubic if order == 3 else classify_complex_quartic)(f)
        assert got.type_id == type_id
        if mu is not None:
            assert complex(got.mu) == pytest.approx(complex(mu), abs=1e-9)
    else:
        got = classify_real(f)
        assert got.type_id == type_id
        if mu is not None:
            assert float(complex(got.mu).real) == pytest.approx(float(mu.re), abs=1e-9)


def test_degenerate_quartic_uses_root_fallback():
    r = classify(exact_form([1, 0, 2, 0, 1]))
    assert (r.complex_type.type_id, r.real_type.type_id) == (5, 9)
    assert r.method == ROOT_FALLBACK and r.signature.infinite and r.signature.degenerate
    assert "root-fallback" in str(r)


def test_zero_form():
    r = classify(exact_form([0, 0, 0, 0, 0]))
    assert (r.complex_type.type_id, r.real_type.type_id) == (1, 1)


def test_non_real_input_has_no_real_type():
    f = BinaryForm.from_coeffs([1, 0, "i", 0, 1])
    r = classify(f)
    assert r.real_type is None and r.root_pattern is None
    with pytest.raises(NonRealInput):
        classify_real(f)


@given(exact_forms(), st.integers(0, 10**6))
def test_real_type_invariant_under_real_transforms(f, seed):
    P = random_transform(seed, real_only=True, exact=True)
    assert classify_real(transform(f, P)).type_id == classify_real(f).type_id


@given(exact_forms(), st.integers(0, 10**6))
def test_complex_type_invariant_under_complex_transforms(f, seed):
    P = random_transform(seed, exact=True)
    assert classify(transform(f, P)).complex_type.type_id == classify(f).complex_type.type_id


@pytest.mark.parametrize("mu", [Fraction(1, 5), Fraction(-2, 3), Fraction(3, 2)])
def test_modulus_recovered_up_to_symmetry(mu):
    f = canonical_form(3, 4, "complex", G(mu))
    equivalent = [complex(v) for v in _cross_ratio_candidates(f, DEFAULT)]
    assert any(abs(v - float(mu)) < 1e-12 for v in equivalent)
    for seed in range(5):
        g = transform(f, random_transform(seed, exact=True))
        got = complex(modulus(g))
        assert min(abs(got - v) for v in equivalent) < 1e-8


def test_modulus_read_off_scaled():
    # 2 x^4 + 6 x^2 y^2 + 8 y^4 is x^4 + 6 (1/4) x^2 y^2 + y^4 after scaling y
    assert modulus(exact_form([2, 0, 6, 0, 8]), 3) == G(Fraction(1, 4))
    assert modulus(exact_form([1, 0, 0, 0, -1]), 5) == 0


def test_real_modulus_respects_type_ranges():
    for seed in range(5):
        P = random_transform(seed, real_only=True, exact=True)
        t3 = classify_real(transform(canonical_form(3, 4, "real", G(Fraction(-1, 5))), P))
        t4 = classify_real(transform(canonical_form(4, 4, "real", G(-1)), P))
        assert t3.type_id == 3 and complex(t3.mu).real > -1 / 3
        assert t4.type_id == 4 and complex(t4.mu).real < -1 / 3


def test_float_boundary_is_ambiguous():
    near = BinaryForm.from_coeffs([1.0, 0.0, 6 * (1 / 3 + 1e-9), 0.0, 1.0])
    with pytest.raises(BoundaryAmbiguity):
        classify(near)
    with pytest.raises(AmbiguityError):
        classify(BinaryForm.from_coeffs([1.0, 0.0, 6 * (-1 / 3 + 1e-9), 0.0, 1.0]))


def test_exact_boundary_is_decided():
    assert classify_real(exact_form([1, 0, -2, 0, 1])).type_id == 8
    assert classify_real(exact_form([1, 0, 2, 0, 1])).type_id == 9


def test_canonical_form_examples():
    assert canonical_form(4, 3, "complex").coeffs == exact_form([0, 3, 0, 0]).coeffs
    assert canonical_form(9, 4, "real").coeffs == exact_form([1, 0, 2, 0, 1]).coeffs
    assert canonical_form(3, 4, "complex", mu=0).coeffs == exact_form([1, 0, 0, 0, 1]).coeffs
    assert canonical_form(3, 4, "complex", mu="1/2").coeffs == exact_form([1, 0, 3, 0, 1]).coeffs
    assert not canonical_form(5, 4, "real", mu=0.5).exact


@pytest.mark.parametrize(
    "args, exc",
    [
        ((99, 3, "complex"), InvalidType),
        ((6, 3, "real"), InvalidType),
        ((2, 5, "complex"), InvalidType),
        ((2, 4, "complex", 1), InvalidType),
        ((3, 4, "complex"), MissingModulus),
        ((3, 4, "complex", Fraction(1, 3)), InvalidType),
        ((3, 4, "complex", Fraction(-1, 3)), InvalidType),
        ((4, 4, "real", 0), InvalidType),
        ((3, 4, "real", -1), InvalidType),
        ((3, 4, "real", "i"), InvalidType),
    ],
)
def test_canonical_form_errors(args, exc):
    with pytest.raises(exc):
        canonical_form(*args)


def test_insufficiency_witnesses():
    cubic = [classify(exact_form(c)) for c in ((1, 0, 0, 1), (1, 0, -3, 0))]
    assert cubic[0].signature == cubic[1].signature
    assert [r.real_type.type_id for r in cubic] == [3, 4]
    quartic = [classify(exact_form(c)) for c in ((1, 0, 0, 0, 1), (1, 0, 0, 0, -1))]
    assert quartic[0].signature == quartic[1].signature
    assert [r.real_type.type_id for r in quartic] == [3, 5]


def test_encode_report():
    out = encode_report(classify(tensor(1, 2, 4, 8)))
    assert out == {
        "complexType": 2,
        "realType": 2,
        "signature": {"classes": 2, "zeros": 1, "degenerate": False},
        "rootPattern": [[3, "real"]],
        "mu": None,
        "method": "spectral",
        "crossCheck": None,
    }


def test_unsupported_degree():
    with pytest.raises(UnsupportedDegree):
        classify(BinaryForm.from_coeffs([1, 0, 1]))
