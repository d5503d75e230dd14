"""Binary forms, 2-dimensional symmetric tensors and the GL2 action on them.

Forms are stored in the raw monomial basis: ``coeffs[k]`` multiplies
``x**(d-k) * y**k``. The binomial weights of the tensor convention
(3b, 3c for cubics; 4b, 6c, 4d for quartics) appear only in
:func:`tensor_to_form` and :func:`form_to_tensor`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

import numpy as np

from .errors import AsymmetricTensor, InputError, SingularTransform, UnsupportedDegree
from .scalars import (
    GaussianRational,
    decode_scalar,
    encode_scalar,
    format_scalar,
    is_real_value,
    to_exact,
    unify,
)

SUPPORTED_DEGREES = (3, 4)
FLOAT_SYMMETRY_TOL = 1e-12
SAMPLE_BOX = 2.0
MIN_SAMPLE_DET = 0.1
EXACT_GRID = 1024


def _check_supported(d):
    if d not in SUPPORTED_DEGREES:
        raise UnsupportedDegree(f"degree/order must be 3 or 4, got {d}")


@dataclass(frozen=True)
class BinaryForm:
    """Homogeneous polynomial ``sum coeffs[k] x^(d-k) y^k``.

    Degrees 3 and 4 are the public ones; intermediate results (partials,
    gcd factors) reuse the type at other degrees.
    """

    degree: int
    coeffs: tuple

    def __post_init__(self):
        if self.degree < 0 or len(self.coeffs) != self.degree + 1:
            raise InputError(f"degree {self.degree} form needs {self.degree + 1} coefficients, "
                             f"got {len(self.coeffs)}")
        object.__setattr__(self, "coeffs", unify(self.coeffs))

    @classmethod
    def from_coeffs(cls, coeffs, mode: str | None = None) -> BinaryForm:
        vals = unify(coeffs, mode)
        return cls(len(vals) - 1, vals)

    @property
    def exact(self) -> bool:
        return isinstance(self.coeffs[0], GaussianRational)

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    @property
    def is_real(self) -> bool:
        return all(is_real_value(c) for c in self.coeffs)

    def to_mode(self, mode: str) -> BinaryForm:
        return BinaryForm.from_coeffs(self.coeffs, mode)

    def __call__(self, x, y):
        return evaluate(self, x, y)

    def __str__(self):
        return format_form(self)


def format_form(f: BinaryForm, x: str = "x", y: str = "y") -> str:
    d = f.degree
    terms = []
    for k, c in enumerate(f.coeffs):
        if c == 0:
            continue
        mono = "*".join(v if p == 1 else f"{v}^{p}" for v, p in ((x, d - k), (y, k)) if p)
        s = format_scalar(c)
        if not is_real_value(c):
            s = f"({s})"
        if mono:
            if s in ("1", "-1"):
                s = s[:-1]
            else:
                s += "*"
        terms.append(s + mono)
    if not terms:
        return "0"
    out = terms[0]
    for t in terms[1:]:
        out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
    return out


@dataclass(frozen=True)
class SymmetricTensor2:
    """Unique entries of a 2x2x2 (a, b, c, d) or 2x2x2x2 (a, b, c, d, e) symmetric tensor.

    Entry ``entries[j]`` is the common value of every multi-index with
    exactly ``j`` indices equal to 2.
    """

    order: int
    entries: tuple

    def __post_init__(self):
        _check_supported(self.order)
        if len(self.entries) != self.order + 1:
            raise InputError(f"order {self.order} tensor needs {self.order + 1} entries")
        object.__setattr__(self, "entries", unify(self.entries))

    @classmethod
    def from_entries(cls, entries, mode: str | None = None) -> SymmetricTensor2:
        vals = unify(entries, mode)
        return cls(len(vals) - 1, vals)

    @classmethod
    def from_full(cls, full, mode: str | None = None) -> SymmetricTensor2:
        """Build from all 2**m entries in lexicographic multi-index order."""
        flat = np.asarray(full, dtype=object).reshape(-1).tolist()
        order = {8: 3, 16: 4}.get(len(flat))
        if order is None:
            raise InputError(f"full tensor must have 8 or 16 entries, got {len(flat)}")
        vals = unify(flat, mode)
        groups = {}
        for idx, v in enumerate(vals):
            groups.setdefault(bin(idx).count("1"), []).append((idx, v))
        exact = isinstance(vals[0], GaussianRational)
        for j, members in groups.items():
            ref = members[0][1]
            for idx, v in members[1:]:
                ok = v == ref if exact else abs(v - ref) <= FLOAT_SYMMETRY_TOL * max(1.0, abs(ref))
                if not ok:
                    raise AsymmetricTensor(f"entry {_multi_index(idx, order)} = {v} differs from "
                                           f"{_multi_index(members[0][0], order)} = {ref}")
        return cls(order, tuple(groups[j][0][1] for j in range(order + 1)))

    def to_full(self) -> list:
        return [self.entries[bin(idx).count("1")] for idx in range(2 ** self.order)]

    def entry(self, *indices: int):
        """Entry at a 1-based multi-index, e.g. ``t.entry(1, 1, 2)``."""
        if len(indices) != self.order or any(i not in (1, 2) for i in indices):
            raise InputError(f"bad multi-index {indices}")
        return self.entries[sum(1 for i in indices if i == 2)]

    @property
    def exact(self) -> bool:
        return isinstance(self.entries[0], GaussianRational)


def _multi_index(idx, order):
    return tuple(1 + ((idx >> (order - 1 - k)) & 1) for k in range(order))


@dataclass(frozen=True)
class Transform2:
    """Invertible substitution ``x = p11*u + p12*v``, ``y = p21*u + p22*v``."""

    p11: object
    p12: object
    p21: object
    p22: object

    def __post_init__(self):
        vals = unify((self.p11, self.p12, self.p21, self.p22))
        for name, v in zip(("p11", "p12", "p21", "p22"), vals):
            object.__setattr__(self, name, v)
        det = vals[0] * vals[3] - vals[1] * vals[2]
        object.__setattr__(self, "det", det)
        if isinstance(det, GaussianRational):
            singular = det == 0
        else:
            scale = max(1.0, max(abs(v) for v in vals) ** 2)
            singular = abs(det) <= 1e-12 * scale
        if singular:
            raise SingularTransform(f"transform is singular (det = {format_scalar(det)})")

    @classmethod
    def from_matrix(cls, m, mode: str | None = None) -> Transform2:
        (a, b), (c, d) = m
        return cls(*unify((a, b, c, d), mode))

    @classmethod
    def identity(cls, exact: bool = True) -> Transform2:
        return cls(*unify((1, 0, 0, 1), "exact" if exact else "float"))

    @property
    def matrix(self):
        return ((self.p11, self.p12), (self.p21, self.p22))

    @property
    def exact(self) -> bool:
        return isinstance(self.p11, GaussianRational)

    @property
    def real(self) -> bool:
        return all(is_real_value(v) for v in (self.p11, self.p12, self.p21, self.p22))

    def compose(self, other: Transform2) -> Transform2:
        """Matrix product ``self @ other``: transforming by self then other equals this."""
        a, b, c, d = self.p11, self.p12, self.p21, self.p22
        e, f, g, h = other.p11, other.p12, other.p21, other.p22
        return Transform2(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)

    def inverse(self) -> Transform2:
        det = self.det
        return Transform2(self.p22 / det, -self.p12 / det, -self.p21 / det, self.p11 / det)

    def to_mode(self, mode: str) -> Transform2:
        return Transform2(*unify((self.p11, self.p12, self.p21, self.p22), mode))


# --------------------------------------------------------------------------
# operations


def tensor_to_form(t: SymmetricTensor2) -> BinaryForm:
    d = t.order
    return BinaryForm(d, tuple(comb(d, k) * e for k, e in enumerate(t.entries)))


def form_to_tensor(f: BinaryForm) -> SymmetricTensor2:
    d = f.degree
    _check_supported(d)
    return SymmetricTensor2(d, tuple(c / comb(d, k) for k, c in enumerate(f.coeffs)))


def evaluate(f: BinaryForm, x, y):
    d = f.degree
    total = 0
    for k, c in enumerate(f.coeffs):
        total = total + c * x ** (d - k) * y ** k
    return total


def partial(f: BinaryForm, var: str) -> BinaryForm:
    """Formal partial derivative; the result has degree d-1."""
    d = f.degree
    if d == 0:
        return BinaryForm(0, (f.coeffs[0] * 0,))
    if var == "x":
        return BinaryForm(d - 1, tuple((d - k) * f.coeffs[k] for k in range(d)))
    if var == "y":
        return BinaryForm(d - 1, tuple(k * f.coeffs[k] for k in range(1, d + 1)))
    raise InputError(f"variable must be 'x' or 'y', got {var!r}")


def _linear_power(p, q, n):
    """Coefficients of (p*u + q*v)**n in the monomial basis u^(n-k) v^k."""
    return [comb(n, k) * p ** (n - k) * q ** k for k in range(n + 1)]


def _convolve(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return out


def _align(f: BinaryForm, P: Transform2):
    """Bring form and transform to a common scalar kind."""
    if f.exact and not P.exact:
        f = f.to_mode("float")
    elif P.exact and not f.exact:
        P = P.to_mode("float")
    return f, P


def transform(f: BinaryForm, P: Transform2) -> BinaryForm:
    """``g(u, v) = f(p11 u + p12 v, p21 u + p22 v)`` by full expansion."""
    f, P = _align(f, P)
    d = f.degree
    out = [0] * (d + 1)
    for k, c in enumerate(f.coeffs):
        if c == 0:
            continue
        term = _convolve(_linear_power(P.p11, P.p12, d - k), _linear_power(P.p21, P.p22, k))
        for j, t in enumerate(term):
            out[j] = out[j] + c * t
    return BinaryForm(d, tuple(out))


def transform_coeffs_closed(f: BinaryForm, P: Transform2) -> BinaryForm:
    """Same result as :func:`transform`, via explicit per-coefficient formulas.

    Works on the tensor entries (a, b, c, d[, e]) and writes out the new
    entries (A, B, C, D[, E]) term by term.
    """
    f, P = _align(f, P)
    _check_supported(f.degree)
    p1, p2, p3, p4 = P.p11, P.p12, P.p21, P.p22
    t = form_to_tensor(f).entries
    if f.degree == 3:
        a, b, c, d = t
        new = (
            a * p1**3 + 3 * b * p1**2 * p3 + 3 * c * p1 * p3**2 + d * p3**3,
            a * p1**2 * p2 + b * (p1**2 * p4 + 2 * p1 * p2 * p3)
            + c * (2 * p1 * p3 * p4 + p2 * p3**2) + d * p3**2 * p4,
            a * p1 * p2**2 + b * (2 * p1 * p2 * p4 + p2**2 * p3)
            + c * (p1 * p4**2 + 2 * p2 * p3 * p4) + d * p3 * p4**2,
            a * p2**3 + 3 * b * p2**2 * p4 + 3 * c * p2 * p4**2 + d * p4**3,
        )
    else:
        a, b, c, d, e = t
        new = (
            a * p1**4 + 4 * b * p1**3 * p3 + 6 * c * p1**2 * p3**2 + 4 * d * p1 * p3**3 + e * p3**4,
            a * p1**3 * p2 + b * (3 * p1**2 * p2 * p3 + p1**3 * p4)
            + c * (3 * p1 * p2 * p3**2 + 3 * p1**2 * p3 * p4)
            + d * (p2 * p3**3 + 3 * p1 * p3**2 * p4) + e * p3**3 * p4,
            a * p1**2 * p2**2 + 2 * b * (p1**2 * p2 * p4 + p1 * p2**2 * p3)
            + c * (p1**2 * p4**2 + 4 * p1 * p2 * p3 * p4 + p2**2 * p3**2)
            + 2 * d * (p1 * p3 * p4**2 + p2 * p3**2 * p4) + e * p3**2 * p4**2,
            a * p1 * p2**3 + b * (p2**3 * p3 + 3 * p1 * p2**2 * p4)
            + 3 * c * (p1 * p2 * p4**2 + p2**2 * p3 * p4)
            + d * (p1 * p4**3 + 3 * p2 * p3 * p4**2) + e * p3 * p4**3,
            a * p2**4 + 4 * b * p2**3 * p4 + 6 * c * p2**2 * p4**2 + 4 * d * p2 * p4**3 + e * p4**4,
        )
    return tensor_to_form(SymmetricTensor2(f.degree, new))


def random_transform(seed, real_only: bool = False, exact: bool = False) -> Transform2:
    """Random invertible transform with entries in [-2, 2] (+ [-2, 2]i) and |det| >= 0.1.

    ``exact=True`` snaps the draws to the dyadic grid 1/1024 so the result
    is a Gaussian-rational transform; the same seed gives the same grid
    point in both modes.
    """
    rng = np.random.default_rng(seed)
    while True:
        re = rng.uniform(-SAMPLE_BOX, SAMPLE_BOX, size=4)
        im = np.zeros(4) if real_only else rng.uniform(-SAMPLE_BOX, SAMPLE_BOX, size=4)
        if exact:
            vals = [GaussianRational(*(_snap(r), _snap(i))) for r, i in zip(re, im)]
        else:
            vals = [complex(r, i) for r, i in zip(re, im)]
        det = vals[0] * vals[3] - vals[1] * vals[2]
        if abs(complex(det)) >= MIN_SAMPLE_DET:
            return Transform2(*vals)


def _snap(v: float):
    return Fraction(round(float(v) * EXACT_GRID), EXACT_GRID)


# --------------------------------------------------------------------------
# JSON encodings


def encode_form(f: BinaryForm) -> dict:
    return {"degree": f.degree, "coeffs": [encode_scalar(c) for c in f.coeffs]}


def decode_form(obj: dict, mode: str | None = None) -> BinaryForm:
    try:
        coeffs = [decode_scalar(c, mode) for c in obj["coeffs"]]
        deg = int(obj.get("degree", len(coeffs) - 1))
    except (KeyError, TypeError) as exc:
        raise InputError(f"malformed form JSON: {obj!r}") from exc
    if deg != len(coeffs) - 1:
        raise InputError(f"degree {deg} does not match {len(coeffs)} coefficients")
    _check_supported(deg)
    return BinaryForm.from_coeffs(coeffs, mode)


_ENTRY_NAMES = "abcde"


def encode_tensor(t: SymmetricTensor2) -> dict:
    return {"order": t.order,
            "entries": {_ENTRY_NAMES[j]: encode_scalar(v) for j, v in enumerate(t.entries)}}


def decode_tensor(obj: dict, mode: str | None = None) -> SymmetricTensor2:
    try:
        order = int(obj["order"])
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed tensor JSON: {obj!r}") from exc
    _check_supported(order)
    if "full" in obj:
        full = obj["full"]
        vals = [decode_scalar(v, mode) for v in np.asarray(full, dtype=object).reshape(-1).tolist()]
        t = SymmetricTensor2.from_full(vals, mode)
        if t.order != order:
            raise InputError(f"order {order} does not match {len(vals)} full entries")
        return t
    entries = obj.get("entries")
    if not isinstance(entries, dict):
        raise InputError("tensor JSON needs 'entries' or 'full'")
    names = _ENTRY_NAMES[: order + 1]
    if set(entries) != set(names):
        raise InputError(f"order {order} tensor needs entries {list(names)}")
    return SymmetricTensor2.from_entries([decode_scalar(entries[n], mode) for n in names], mode)


def encode_transform(P: Transform2) -> dict:
    return {"p": [[encode_scalar(v) for v in row] for row in P.matrix]}


def decode_transform(obj: dict, mode: str | None = None) -> Transform2:
    try:
        (a, b), (c, d) = obj["p"]
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed transform JSON: {obj!r}") from exc
    return Transform2(*unify([decode_scalar(v, mode) for v in (a, b, c, d)], mode))


def exact_form(coeffs) -> BinaryForm:
    """Shorthand used throughout the tests and the canonical tables."""
    return BinaryForm.from_coeffs([to_exact(c) for c in coeffs])
