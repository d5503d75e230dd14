"""Acceptance criteria, one test each. Every test prints a single PASS/FAIL line."""

import functools
import math
from collections import Counter
from fractions import Fraction

import numpy as np
from conftest import ACCEPTANCE_LINES

from tensorclass.algebra import (
    SymmetricTensor2,
    exact_form,
    random_transform,
    tensor_to_form,
    transform,
    transform_coeffs_closed,
)
from tensorclass.classify import (
    ROOT_FALLBACK,
    canonical_form,
    classify,
    classify_real,
    complex_type_details,
    takes_modulus,
)
from tensorclass.pde import canonical_text, classify_pde, parse_pde, render_pde
from tensorclass.roots import discriminant
from tensorclass.scalars import GaussianRational
from tensorclass.spectra import (
    INFINITE,
    InfiniteEigenpairs,
    class_equivalent,
    eigenpairs,
    eigenvector_equation,
    normalize_class,
    residual,
    signature,
)
from tensorclass.tolerances import DEFAULT

G = GaussianRational
SQRT3, SQRT7 = math.sqrt(3), math.sqrt(7)


def criterion(number, title):
    def wrap(fn):
        @functools.wraps(fn)
        def run(*args, **kwargs):
            try:
                fn(*args, **kwargs)
            except BaseException as exc:
                line = f"[{number:2d}] FAIL  {title}: {type(exc).__name__}"
                ACCEPTANCE_LINES.append(line)
                print(line)
                raise
            line = f"[{number:2d}] PASS  {title}"
            ACCEPTANCE_LINES.append(line)
            print(line)

        return run

    return wrap


def tensor_form(*entries):
    return tensor_to_form(SymmetricTensor2.from_entries(entries))


def matches(classes, expected, m, rel_tol=1e-8):
    """Every expected pair is equivalent to exactly one computed class, counts equal."""
    if len(classes) != len(expected):
        return False
    return all(sum(class_equivalent(c, e, m, rel_tol) for c in classes) == 1 for e in expected)


def small_residuals(f, classes):
    return all(residual(f, c) <= 1e-8 for c in classes)


@criterion(1, "cubic example with a double zero class")
def test_criterion_01_cubic_double_zero():
    expected = [(G(0), (G(-2), G(1))), (G(25), (G(1), G(2)))]
    f = tensor_form(1, 2, 4, 8)
    exact = eigenpairs(f)
    assert matches(exact, expected, 3)
    assert all(residual(f, c) == 0 for c in exact)
    fl = f.to_mode("float")
    approx = eigenpairs(fl)
    assert matches(approx, [(complex(lam), (complex(a), complex(b))) for lam, (a, b) in expected], 3)
    assert small_residuals(fl, approx)
    assert classify(f).complex_type.type_id == 2 and classify(fl).complex_type.type_id == 2


@criterion(2, "cubic example with irrational eigenpairs")
def test_criterion_02_cubic_irrational():
    expected = [(27, (1, 1))] + [
        ((3 + s * 3 * SQRT7 * 1j) / 4, ((-3 + s * SQRT7 * 1j) / 4, 1)) for s in (1, -1)
    ]
    for mode in ("exact", "float"):
        f = tensor_form(9, 6, 6, 9).to_mode(mode)
        classes = eigenpairs(f)
        assert matches(classes, expected, 3)
        assert small_residuals(f, classes)
        for e in expected:
            lam_e, dir_e = normalize_class(e, 3)
            assert any(
                abs(normalize_class(c, 3)[0] - lam_e) <= 1e-8 * abs(lam_e)
                and class_equivalent(normalize_class(c, 3), (lam_e, dir_e), 3)
                for c in classes
            )
        assert classify(f).complex_type.type_id == 3


def canonical_signatures(order, mus):
    for type_id in range(1, 5 if order == 3 else 7):
        for mu in (mus if takes_modulus(order, "complex", type_id) else [None]):
            f = canonical_form(type_id, order, "complex", None if mu is None else G(mu))
            yield type_id, mu, f


@criterion(3, "cubic canonical signatures")
def test_criterion_03_cubic_table():
    want = {1: (INFINITE, INFINITE), 2: (2, 1), 3: (3, 0), 4: (3, 1)}
    for mode in ("exact", "float"):
        for type_id, _, f in canonical_signatures(3, []):
            assert signature(f.to_mode(mode)).as_tuple() == want[type_id]


@criterion(4, "quartic canonical signatures")
def test_criterion_04_quartic_table():
    want = {1: (INFINITE, INFINITE), 2: (2, 1), 3: (4, 0), 4: (4, 1), 5: (4, 2), 6: (3, 1)}
    seen = Counter()
    for mode in ("exact", "float"):
        for type_id, _, f in canonical_signatures(4, [0, 1, -1]):
            assert signature(f.to_mode(mode)).as_tuple() == want[type_id]
            seen[type_id] += 1
    assert seen[3] == 6


@criterion(5, "quartic examples of Types 2 and 5")
def test_criterion_05_quartic_examples():
    w = complex(-0.5, SQRT3 / 2)
    for mode in ("exact", "float"):
        f = tensor_form(16, 8, 4, 2, 1).to_mode(mode)
        classes = eigenpairs(f)
        assert len(classes) == 2 and small_residuals(f, classes)
        assert any(class_equivalent(c, (125, (2, 1)), 4) for c in classes)
        assert classify(f).complex_type.type_id == 2

        g = tensor_form(2, 1, 1, 1, 2).to_mode(mode)
        classes = eigenpairs(g)
        assert len(classes) == 4 and small_residuals(g, classes)
        zeros = [c for c in classes if c.is_zero]
        assert len(zeros) == 2
        for z in (w, w.conjugate()):
            assert any(class_equivalent(c, (0j, (z, 1)), 4) for c in zeros)
        assert classify(g).complex_type.type_id == 5


def lambda_multiset(classes, m):
    return sorted(
        (round(lam.real, 9), round(lam.imag, 9)) for lam, _ in (normalize_class(c, m) for c in classes)
    )


@criterion(6, "cubic witness: equal spectra, different real types")
def test_criterion_06_cubic_witness():
    h = SQRT3 / 2
    lists = {
        (1, 0, 0, 1): [(1, (1, 1)), (1, (0, 1)), (1, (1, 0))],
        (1, 0, -3, 0): [(1, (1, 0)), (1, (-0.5, h)), (1, (-0.5, -h))],
    }
    reports, spectra = [], []
    for coeffs, expected in lists.items():
        for mode in ("exact", "float"):
            f = exact_form(coeffs).to_mode(mode)
            classes = eigenpairs(f)
            assert matches(classes, expected, 3)
            reports.append(classify(f))
            spectra.append(lambda_multiset(classes, 3))
    assert all(r.signature.as_tuple() == (3, 0) for r in reports)
    assert all(s == spectra[0] for s in spectra)
    assert [r.real_type.type_id for r in reports] == [3, 3, 4, 4]


@criterion(7, "quartic witness: equal spectra, different real types")
def test_criterion_07_quartic_witness():
    lists = {
        (1, 0, 0, 0, 1): [(1, (1, 0)), (1, (0, 1)), (1, (1, 1)), (1, (1, -1))],
        (1, 0, 0, 0, -1): [(1, (1, 0)), (1, (0, 1j)), (1, (1, 1j)), (1, (1, -1j))],
    }
    real_types = []
    for coeffs, expected in lists.items():
        for mode in ("exact", "float"):
            f = exact_form(coeffs).to_mode(mode)
            classes = eigenpairs(f)
            assert matches(classes, expected, 4)
            assert signature(f).as_tuple() == (4, 0)
            real_types.append(classify_real(f).type_id)
    assert real_types == [3, 3, 5, 5]
    at_01 = next(c for c in eigenpairs(exact_form([1, 0, 0, 0, -1])) if c.direction.x == 0)
    assert at_01.lam == -1
    assert class_equivalent((G(1), (G(0), G(0, 1))), at_01, 4)
    assert class_equivalent((1, (0, 1j)), normalize_class(at_01, 4), 4)


def random_rational_form(rng, degree):
    nums = rng.integers(-9, 10, size=degree + 1)
    dens = rng.integers(1, 5, size=degree + 1)
    coeffs = [Fraction(int(n), int(d)) for n, d in zip(nums, dens)]
    return exact_form(coeffs)


@criterion(8, "closed-form coefficient transformation")
def test_criterion_08_closed_formulas():
    rng = np.random.default_rng(8)
    worst = 0.0
    for degree in (3, 4):
        for i in range(1000):
            f = random_rational_form(rng, degree)
            P = random_transform([8, degree, i], real_only=True, exact=True)
            expanded = transform(f, P)
            assert transform_coeffs_closed(f, P) == expanded
            closed = transform_coeffs_closed(f.to_mode("float"), P.to_mode("float"))
            scale = max(abs(complex(c)) for c in expanded.coeffs) or 1.0
            worst = max(worst, max(abs(complex(a) - b) for a, b in zip(expanded.coeffs, closed.coeffs)) / scale)
    assert worst <= 1e-10


def table_forms():
    """(domain, order, type_id, form) for every table row; parametric rows at sampled mu."""
    samples = {("complex", 3): [0, 1, -1], ("real", 3): [0, 1], ("real", 4): [-1], ("real", 5): [-1, 0, 1]}
    for domain in ("complex", "real"):
        for order in (3, 4):
            rows = {(3, "complex"): 4, (4, "complex"): 6, (3, "real"): 5, (4, "real"): 10}[(order, domain)]
            for type_id in range(1, rows + 1):
                if takes_modulus(order, domain, type_id):
                    for mu in samples[(domain, type_id)]:
                        yield domain, order, type_id, canonical_form(type_id, order, domain, G(mu))
                else:
                    yield domain, order, type_id, canonical_form(type_id, order, domain)


@criterion(9, "orbit invariance of every table form")
def test_criterion_09_orbit_invariance():
    failures = []
    for domain, order, type_id, f in table_forms():
        fl = f.to_mode("float")
        for i in range(100):
            P = random_transform([9, order, type_id, i], real_only=domain == "real")
            g = transform(fl, P)
            if domain == "real":
                got, fallback = classify_real(g).type_id, False
            else:
                got, method, sig, _ = complex_type_details(g, DEFAULT)
                fallback = method == ROOT_FALLBACK
                if fallback and not (order == 4 and type_id == 5 and sig.degenerate):
                    failures.append((domain, order, type_id, i, "fallback"))
            if got != type_id:
                failures.append((domain, order, type_id, i, got))
    assert not failures, failures[:5]


@criterion(10, "PDE table operators")
def test_criterion_10_pde_tables():
    ascii_rows = {
        3: {1: "0 = Phi", 2: "U_xxx = Phi", 3: "U_xxx + U_yyy = Phi", 4: "U_xxx - 3*U_xyy = Phi", 5: "U_xxy = Phi"},
        4: {
            1: "0 = Phi",
            2: "U_xxxx = Phi",
            3: "U_xxxx + {6mu}*U_xxyy + U_yyyy = Phi",
            4: "U_xxxx + {6mu}*U_xxyy + U_yyyy = Phi",
            5: "U_xxxx + {6mu}*U_xxyy - U_yyyy = Phi",
            6: "U_xxxx + 6*U_xxyy = Phi",
            7: "U_xxxx - 6*U_xxyy = Phi",
            8: "U_xxyy = Phi",
            9: "U_xxxx + 2*U_xxyy + U_yyyy = Phi",
            10: "U_xxxy = Phi",
        },
    }
    mus = {3: [0, 1], 4: [-1], 5: [-1, 0, 1]}
    for order, rows in ascii_rows.items():
        for type_id, template in rows.items():
            for mu in mus.get(type_id, [None]) if order == 4 else [None]:
                text = template.replace("{6mu}", str(6 * mu)) if mu is not None else template
                text = text.replace("+ -", "- ")
                for mode in ("exact", "float"):
                    p = parse_pde(text, mode, order=order)
                    report = classify_pde(p)
                    assert report.real_type.type_id == type_id
                    assert report.canonical_text == canonical_text(order, type_id, report.mu)
                    if mu is not None:
                        assert complex(report.mu) == mu
                    assert parse_pde(render_pde(p), mode, order=order) == p


@criterion(11, "degenerate quartic (x^2 + y^2)^2")
def test_criterion_11_degenerate():
    for mode in ("exact", "float"):
        f = exact_form([1, 0, 2, 0, 1]).to_mode(mode)
        assert eigenvector_equation(f).is_zero
        assert isinstance(eigenpairs(f), InfiniteEigenpairs)
        sig = signature(f)
        assert sig.infinite and sig.degenerate
        r = classify(f)
        assert r.complex_type.type_id == 5 and r.method == ROOT_FALLBACK
        assert r.real_type.type_id == 9


@criterion(12, "generic class count bound")
def test_criterion_12_count_bound():
    rng = np.random.default_rng(12)
    generic = 0
    for degree in (3, 4):
        for _ in range(1000):
            coeffs = [int(v) for v in rng.integers(-5, 6, size=degree + 1)]
            if not any(coeffs):
                continue
            f = exact_form(coeffs)
            classes = eigenpairs(f)
            q_disc = discriminant(eigenvector_equation(f))
            if isinstance(classes, InfiniteEigenpairs):
                assert q_disc == 0
                continue
            assert len(classes) <= degree
            if q_disc != 0:
                generic += 1
                assert len(classes) == degree
    assert generic > 1500
