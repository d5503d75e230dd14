"""Complex and real equivalence types of binary cubics and quartics.

Over C the type follows from the spectral signature, cross-checked against
the multiplicities of the projective roots. Over R the type follows from
the root pattern alone (real roots vs conjugate pairs), since spectral data
cannot separate real orbits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from numbers import Rational

from .algebra import BinaryForm, SymmetricTensor2, exact_form, tensor_to_form
from .errors import (
    BoundaryAmbiguity,
    InternalInconsistency,
    InvalidType,
    MissingModulus,
    NonRealInput,
    UnsupportedDegree,
)
from .roots import PAIR, REAL, RootPattern, pattern_from_roots, projective_roots
from .scalars import GaussianRational, encode_scalar, format_scalar
from .spectra import SpectralSignature, encode_signature, signature
from .tolerances import DEFAULT, Tolerances

SPECTRAL = "spectral"
ROOT_FALLBACK = "root-fallback"
BOUNDARY_TOL = 1e-8
THIRD = Fraction(1, 3)

_R1, _P1 = (1, REAL), (1, PAIR)

CUBIC_SIGNATURES = {(2, 1): 2, (3, 0): 3, (3, 1): 4}
QUARTIC_SIGNATURES = {(2, 1): 2, (4, 0): 3, (4, 1): 4, (4, 2): 5, (3, 1): 6}
CUBIC_MULTIPLICITIES = {(3,): 2, (1, 1, 1): 3, (2, 1): 4}
QUARTIC_MULTIPLICITIES = {(4,): 2, (1, 1, 1, 1): 3, (2, 1, 1): 4, (2, 2): 5, (3, 1): 6}

REAL_CUBIC_PATTERNS = {
    ((3, REAL),): 2,
    (_R1, _P1): 3,
    (_R1, _R1, _R1): 4,
    ((2, REAL), _R1): 5,
}
REAL_QUARTIC_PATTERNS = {
    ((4, REAL),): 2,
    (_P1, _P1): 3,
    (_R1, _R1, _R1, _R1): 4,
    (_R1, _R1, _P1): 5,
    ((2, REAL), _P1): 6,
    ((2, REAL), _R1, _R1): 7,
    ((2, REAL), (2, REAL)): 8,
    ((2, PAIR),): 9,
    ((3, REAL), _R1): 10,
}

# Canonical representatives in monomial coefficients; None marks the 6*mu slot.
COMPLEX_CUBIC_TABLE = {1: (0, 0, 0, 0), 2: (1, 0, 0, 0), 3: (1, 0, 0, 1), 4: (0, 3, 0, 0)}
COMPLEX_QUARTIC_TABLE = {
    1: (0, 0, 0, 0, 0),
    2: (1, 0, 0, 0, 0),
    3: (1, 0, None, 0, 1),
    4: (0, 0, 6, 0, 1),
    5: (0, 0, 6, 0, 0),
    6: (0, 4, 0, 0, 0),
}
REAL_CUBIC_TABLE = {1: (0, 0, 0, 0), 2: (1, 0, 0, 0), 3: (1, 0, 0, 1), 4: (1, 0, -3, 0), 5: (0, 3, 0, 0)}
REAL_QUARTIC_TABLE = {
    1: (0, 0, 0, 0, 0),
    2: (1, 0, 0, 0, 0),
    3: (1, 0, None, 0, 1),
    4: (1, 0, None, 0, 1),
    5: (1, 0, None, 0, -1),
    6: (1, 0, 6, 0, 0),
    7: (1, 0, -6, 0, 0),
    8: (0, 0, 6, 0, 0),
    9: (1, 0, 2, 0, 1),
    10: (0, 4, 0, 0, 0),
}


@dataclass(frozen=True)
class ComplexType:
    order: int
    type_id: int
    mu: object = None


@dataclass(frozen=True)
class RealType:
    order: int
    type_id: int
    mu: object = None


@dataclass(frozen=True)
class ClassificationReport:
    complex_type: ComplexType
    real_type: RealType | None
    signature: SpectralSignature
    root_pattern: RootPattern | None
    method: str
    cross_check: str | None = None

    @property
    def mu(self):
        if self.real_type is not None:
            return self.real_type.mu
        return self.complex_type.mu

    def __str__(self):
        parts = [f"complex: Type {self.complex_type.type_id}"]
        if self.real_type is not None:
            parts.append(f"real: Type {self.real_type.type_id}")
        parts.append(f"signature: {self.signature}")
        text = ", ".join(parts)
        if self.mu is not None:
            text += f", mu={format_scalar(self.mu)}"
        if self.method == ROOT_FALLBACK:
            text += f" [{ROOT_FALLBACK}: {self.cross_check}]"
        return text


# --------------------------------------------------------------------------
# modulus of the quartic family x^4 + 6 mu x^2 y^2 +- y^4


def _exact_sqrt(q):
    if q < 0:
        return None
    n, d = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if n * n == q.numerator and d * d == q.denominator:
        return Fraction(n, d)
    return None


def _mu_read_off(f: BinaryForm, real_type_id: int | None):
    """mu straight from coefficients when f already has the shape a x^4 + c x^2 y^2 + e y^4."""
    a, b, c, d, e = f.coeffs
    if b != 0 or d != 0 or a == 0 or e == 0:
        return None
    if real_type_id is None:
        return c / (6 * a) if a == e else None
    if f.exact:
        a, c, e = a.re, c.re, e.re
        root = _exact_sqrt(abs(a * e))
        if root is None:
            root = math.sqrt(abs(a * e))
    else:
        a, c, e = a.real, c.real, e.real
        root = math.sqrt(abs(a * e))
    sign = 1 if a > 0 else -1
    if real_type_id in (3, 4) and a * e > 0:
        return _from_real(sign * c / (6 * root), f.exact)
    if real_type_id == 5 and a * e < 0:
        return _from_real(sign * c / (6 * root), f.exact)
    return None


def _from_real(v, exact: bool):
    if exact and isinstance(v, Rational):
        return GaussianRational(v)
    return float(v)


def _cross_ratio_candidates(f: BinaryForm, tol: Tolerances):
    """All mu_c with f ~ x^4 + 6 mu_c x^2 y^2 + y^4 over C, one per root ordering."""
    pts = [e.point for e in projective_roots(f, tol)]
    if len(pts) != 4:
        return []
    exact = all(p.exact for p in pts)
    if not exact:
        pts = [tuple(complex(v) for v in p.as_complex()) for p in pts]
    else:
        pts = [(p.x, p.y) for p in pts]

    def br(p, q):
        return p[0] * q[1] - q[0] * p[1]

    out = []
    for r1, r2, r3, r4 in permutations(pts):
        k = br(r1, r3) * br(r2, r4) / (br(r1, r4) * br(r2, r3))
        mu = -(1 + k) / (3 * (1 - k))
        if mu not in out:
            out.append(mu)
    return out


def _near(a, b, exact: bool, rel: float) -> bool:
    if exact:
        return a == b
    return abs(a - b) <= rel * (1 + abs(b))


def _pick(cands):
    """Smallest |mu|, preferring positive real then positive imaginary part (rounded so noise cannot flip ties)."""
    def key(v):
        z = complex(v)
        return (round(abs(z), 9), -round(z.real, 9), -round(z.imag, 9))

    return min(cands, key=key) if cands else None


def _simplify(mu):
    """Real exact values as GaussianRational, real floats as float."""
    if isinstance(mu, GaussianRational):
        return mu
    z = complex(mu) + 0.0
    return z.real + 0.0 if z.imag == 0 else z


def modulus(f: BinaryForm, real_type_id: int | None = None, tol: Tolerances = DEFAULT):
    """The modulus mu of a quartic in complex Type 3 (or real Types 3-5).

    One representative is returned; equivalent values are not canonicalized.
    """
    mu = _mu_read_off(f, real_type_id)
    if mu is None:
        cands = _cross_ratio_candidates(f, tol)
        exact = bool(cands) and isinstance(cands[0], GaussianRational)
        rel = tol.eps_root
        if real_type_id is None:
            mu = _pick(cands)
        elif real_type_id in (3, 4):
            reals = [complex(v).real for v in cands if _near(complex(v).imag, 0, exact, rel)]
            if exact:
                reals = [v.re for v in cands if not v.im]
            if real_type_id == 3:
                mu = _pick([v for v in reals if v > -THIRD and not _near(v, THIRD, exact, BOUNDARY_TOL)])
            else:
                mu = _pick([v for v in reals if v < -THIRD])
            if mu is None:
                mu = _pick(reals)
        else:
            imag = [v for v in cands if _near(complex(v).real, 0, exact, rel)]
            if exact:
                mu = _pick([v.im for v in cands if not v.re])
            else:
                mu = _pick([complex(v).imag for v in imag])
        if isinstance(mu, Rational):
            mu = GaussianRational(mu)
    if mu is None:
        return None
    _check_boundary(mu, real_type_id, f.exact)
    return _simplify(mu)


def _check_boundary(mu, real_type_id, exact: bool):
    if exact or real_type_id == 5:
        return
    z = complex(mu)
    for edge in (1 / 3, -1 / 3):
        if abs(z - edge) <= BOUNDARY_TOL:
            raise BoundaryAmbiguity(
                f"modulus {format_scalar(mu)} is within {BOUNDARY_TOL:g} of {edge:+.6f}; retry with --mode exact"
            )


# --------------------------------------------------------------------------
# complex classification


def _check_degree(f: BinaryForm, degree: int):
    if f.degree != degree:
        raise UnsupportedDegree(f"expected degree {degree}, got {f.degree}")


def complex_type_details(f: BinaryForm, tol: Tolerances):
    """(type id, method, signature, note) with the spectral/root cross-check."""
    sig_table, mult_table = (
        (CUBIC_SIGNATURES, CUBIC_MULTIPLICITIES) if f.degree == 3 else (QUARTIC_SIGNATURES, QUARTIC_MULTIPLICITIES)
    )
    sig = signature(f, tol)
    if f.is_zero:
        return 1, SPECTRAL, sig, None
    root_id = mult_table.get(projective_roots(f, tol).multiplicities())
    if root_id is None:
        raise InternalInconsistency("root multiplicities match no table row; retry with --mode exact")
    if sig.degenerate:
        return root_id, ROOT_FALLBACK, sig, "degenerate (Q identically zero)"
    sig_id = sig_table.get(sig.as_tuple())
    if sig_id == root_id:
        return root_id, SPECTRAL, sig, None
    if sig_id is None:
        return root_id, ROOT_FALLBACK, sig, f"signature {sig} matches no table row"
    if f.exact:
        return root_id, ROOT_FALLBACK, sig, f"signature {sig} is exceptional on this orbit"
    raise InternalInconsistency(
        f"signature {sig} gives Type {sig_id} but roots give Type {root_id}; retry with --mode exact"
    )


def classify_complex_cubic(f: BinaryForm, tol: Tolerances = DEFAULT) -> ComplexType:
    _check_degree(f, 3)
    return ComplexType(3, complex_type_details(f, tol)[0])


def classify_complex_quartic(f: BinaryForm, tol: Tolerances = DEFAULT) -> ComplexType:
    _check_degree(f, 4)
    type_id = complex_type_details(f, tol)[0]
    return ComplexType(4, type_id, modulus(f, None, tol) if type_id == 3 else None)


# --------------------------------------------------------------------------
# real classification


def _real_pattern(f: BinaryForm, tol: Tolerances):
    if not f.is_real:
        raise NonRealInput("real classification needs real coefficients")
    if f.is_zero:
        return ()
    return pattern_from_roots(projective_roots(f, tol))


def _real_type_id(f: BinaryForm, pattern, table) -> int:
    if f.is_zero:
        return 1
    try:
        return table[pattern]
    except KeyError:
        raise InternalInconsistency(f"root pattern {pattern} matches no table row") from None


def classify_real_cubic(f: BinaryForm, tol: Tolerances = DEFAULT) -> RealType:
    _check_degree(f, 3)
    return RealType(3, _real_type_id(f, _real_pattern(f, tol), REAL_CUBIC_PATTERNS))


def classify_real_quartic(f: BinaryForm, tol: Tolerances = DEFAULT) -> RealType:
    _check_degree(f, 4)
    type_id = _real_type_id(f, _real_pattern(f, tol), REAL_QUARTIC_PATTERNS)
    return RealType(4, type_id, modulus(f, type_id, tol) if type_id in (3, 4, 5) else None)


def classify_real(f: BinaryForm, tol: Tolerances = DEFAULT) -> RealType:
    if f.degree == 3:
        return classify_real_cubic(f, tol)
    if f.degree == 4:
        return classify_real_quartic(f, tol)
    raise UnsupportedDegree(f"degree must be 3 or 4, got {f.degree}")


def classify(obj, tol: Tolerances = DEFAULT) -> ClassificationReport:
    """Full report for a tensor or binary form of order 3 or 4."""
    f = tensor_to_form(obj) if isinstance(obj, SymmetricTensor2) else obj
    if f.degree not in (3, 4):
        raise UnsupportedDegree(f"degree must be 3 or 4, got {f.degree}")
    type_id, method, sig, note = complex_type_details(f, tol)
    real_type = pattern = None
    if f.is_real:
        pattern = _real_pattern(f, tol)
        table = REAL_CUBIC_PATTERNS if f.degree == 3 else REAL_QUARTIC_PATTERNS
        real_id = _real_type_id(f, pattern, table)
        real_mu = modulus(f, real_id, tol) if f.degree == 4 and real_id in (3, 4, 5) else None
        real_type = RealType(f.degree, real_id, real_mu)
    mu = None
    if f.degree == 4 and type_id == 3 and real_type is None:
        mu = modulus(f, None, tol)
    return ClassificationReport(ComplexType(f.degree, type_id, mu), real_type, sig, pattern, method, note)


# --------------------------------------------------------------------------
# canonical forms


def _table(order: int, domain: str):
    tables = {
        (3, "complex"): COMPLEX_CUBIC_TABLE,
        (4, "complex"): COMPLEX_QUARTIC_TABLE,
        (3, "real"): REAL_CUBIC_TABLE,
        (4, "real"): REAL_QUARTIC_TABLE,
    }
    try:
        return tables[(order, domain)]
    except KeyError:
        raise InvalidType(f"no table for order {order} over {domain!r}") from None


def takes_modulus(order: int, domain: str, type_id: int) -> bool:
    return None in _table(order, domain).get(type_id, ())


def _check_mu(domain: str, type_id: int, mu):
    z = complex(mu)
    if domain == "real" and z.imag != 0:
        raise InvalidType("real canonical forms need a real modulus")
    if domain == "complex" or type_id == 3:
        if mu == THIRD or (domain == "complex" and mu == -THIRD):
            raise InvalidType(f"mu = {format_scalar(mu)} is excluded for Type {type_id}")
    if domain == "real" and type_id == 3 and not z.real > -1 / 3:
        raise InvalidType("real Type 3 needs mu > -1/3")
    if domain == "real" and type_id == 4 and not z.real < -1 / 3:
        raise InvalidType("real Type 4 needs mu < -1/3")


def canonical_form(type_id: int, order: int, domain: str = "complex", mu=None) -> BinaryForm:
    """Table representative for ``type_id`` in monomial coefficients.

    ``mu`` is required exactly for the rows of the x^4 + 6 mu x^2 y^2 +- y^4 family.
    """
    table = _table(order, domain)
    if type_id not in table:
        raise InvalidType(f"Type {type_id} does not exist for order {order} over {domain}")
    row = table[type_id]
    if None not in row:
        if mu is not None:
            raise InvalidType(f"Type {type_id} takes no modulus")
        return exact_form(row)
    if mu is None:
        raise MissingModulus(f"Type {type_id} needs a modulus mu")
    if isinstance(mu, str):
        mu = GaussianRational.parse(mu)
    _check_mu(domain, type_id, mu)
    coeffs = [6 * mu if v is None else v for v in row]
    if isinstance(mu, (float, complex)):
        return BinaryForm.from_coeffs([complex(v) for v in coeffs])
    return exact_form(coeffs)


# --------------------------------------------------------------------------
# JSON


def encode_pattern(pattern) -> list | None:
    if pattern is None:
        return None
    return [[m, kind] for m, kind in pattern]


def encode_mu(mu):
    if mu is None:
        return None
    if isinstance(mu, float):
        return mu
    return encode_scalar(mu)


def encode_report(r: ClassificationReport) -> dict:
    return {
        "complexType": r.complex_type.type_id,
        "realType": r.real_type.type_id if r.real_type is not None else None,
        "signature": encode_signature(r.signature),
        "rootPattern": encode_pattern(r.root_pattern),
        "mu": encode_mu(r.mu),
        "method": r.method,
        "crossCheck": r.cross_check,
    }
