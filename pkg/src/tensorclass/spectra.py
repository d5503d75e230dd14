"""Eigenpair classes and spectral signatures of 2-dimensional symmetric tensors.

For a binary form ``f`` of degree ``m`` the eigenpairs of the associated
tensor solve ``grad f(x) / m = lambda * x``. Eliminating ``lambda`` leaves
the eigenvector equation ``Q = y*f_x - x*f_y``; each projective root of Q is
one eigenpair class under ``(lambda, x) ~ (t**(m-2) * lambda, t * x)``.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from . import polynomial as poly
from .algebra import SUPPORTED_DEGREES, BinaryForm, evaluate, partial
from .errors import UnsupportedDegree
from .roots import ProjectivePoint, _dehomogenize, cluster_roots, squarefree_factor_roots
from .scalars import GaussianRational, encode_float
from .tolerances import DEFAULT, Tolerances

INFINITE = math.inf


@dataclass(frozen=True)
class EigenpairClass:
    """Representative ``(lam, direction)`` of one eigenpair class."""

    lam: object
    direction: ProjectivePoint
    multiplicity: int
    is_zero: bool

    def pair(self):
        return self.lam, (self.direction.x, self.direction.y)


@dataclass(frozen=True)
class InfiniteEigenpairs:
    """Every direction is an eigendirection (``f == 0``, or ``Q == 0`` when degenerate)."""

    degenerate: bool


@dataclass(frozen=True)
class SpectralSignature:
    classes: float  # int or INFINITE
    zeros: float
    degenerate: bool = False

    @property
    def infinite(self) -> bool:
        return self.classes == INFINITE

    def as_tuple(self) -> tuple:
        return (self.classes, self.zeros)

    def __str__(self):
        if self.infinite:
            return "infinite" + (" (degenerate)" if self.degenerate else "")
        zero_word = "zero" if self.zeros == 1 else "zeros"
        return f"({self.classes} classes, {self.zeros} {zero_word})"


def _check_degree(f: BinaryForm):
    if f.degree not in SUPPORTED_DEGREES:
        raise UnsupportedDegree(f"degree must be 3 or 4, got {f.degree}")


def eigenvector_equation(f: BinaryForm) -> BinaryForm:
    """``y*f_x - x*f_y`` in the monomial basis, same degree as f."""
    n, c = f.degree, f.coeffs
    zero = c[0] * 0
    q = []
    for j in range(n + 1):
        left = (n - j + 1) * c[j - 1] if j >= 1 else zero
        right = (j + 1) * c[j + 1] if j + 1 <= n else zero
        q.append(left - right)
    return BinaryForm(n, tuple(q))


def _eigenvalue(f: BinaryForm, point: ProjectivePoint):
    """lambda at the normalized direction, dividing by its larger coordinate."""
    m = f.degree
    x0, y0 = point.x, point.y
    if abs(x0) > abs(y0):
        return evaluate(partial(f, "x"), x0, y0) / (m * x0)
    return evaluate(partial(f, "y"), x0, y0) / (m * y0)


def _gradient_vanishes_float(f: BinaryForm, point: ProjectivePoint, tol: Tolerances) -> bool:
    x0, y0 = point.as_complex()
    s = max(abs(x0), abs(y0))
    x0, y0 = x0 / s, y0 / s
    scale = f.degree * max(abs(complex(a)) for a in f.coeffs)
    bound = tol.eps_eig * scale
    fx = complex(evaluate(partial(f, "x"), x0, y0))
    fy = complex(evaluate(partial(f, "y"), x0, y0))
    return abs(fx) <= bound and abs(fy) <= bound


def _singular_locus(f: BinaryForm):
    """Exact data for the common zeros of f_x and f_y.

    Returns the monic square-free part of gcd(f_x(t,1), f_y(t,1)) and
    whether (1 : 0) is a common zero.
    """
    fx, fy = partial(f, "x"), partial(f, "y")
    gx, _ = _dehomogenize(fx)
    gy, _ = _dehomogenize(fy)
    g = poly.gcd(gx, gy)
    finite = poly.squarefree_part(g) if poly.degree(g) > 0 else [GaussianRational(1)]
    at_inf = fx.coeffs[0] == 0 and fy.coeffs[0] == 0
    return finite, at_inf


def _exact_classes(f: BinaryForm, q: BinaryForm, tol: Tolerances):
    one, zero = GaussianRational(1), GaussianRational(0)
    singular, inf_singular = _singular_locus(f)
    asc, inf_mult = _dehomogenize(q)
    out = []
    if inf_mult:
        p = ProjectivePoint(one, zero)
        out.append(EigenpairClass(_eigenvalue(f, p), p, inf_mult, inf_singular))
    if poly.degree(asc) < 1:
        return out
    for m, g in poly.squarefree_decomposition(asc):
        h = poly.gcd(g, singular)
        pieces = [(h, True), (poly.exact_div(g, h), False)] if poly.degree(h) > 0 else [(g, False)]
        for piece, is_zero in pieces:
            for v, _ in squarefree_factor_roots(piece, tol):
                if isinstance(v, GaussianRational):
                    p = ProjectivePoint(v, one)
                    lam = zero if is_zero else _eigenvalue(f, p)
                else:
                    p = ProjectivePoint(v, 1.0 + 0j)
                    lam = 0j if is_zero else _eigenvalue(f.to_mode("float"), p)
                out.append(EigenpairClass(lam, p, m, is_zero))
    return out


def _float_classes(f: BinaryForm, q: BinaryForm, tol: Tolerances):
    asc, inf_mult = _dehomogenize(q)
    points = []
    if inf_mult:
        points.append((ProjectivePoint(1.0 + 0j, 0j), inf_mult))
    if poly.degree(asc) >= 1:
        points.extend((ProjectivePoint(c, 1.0 + 0j), m) for c, m in cluster_roots(asc, tol))
    out = []
    for p, m in points:
        is_zero = _gradient_vanishes_float(f, p, tol)
        lam = 0j if is_zero else complex(_eigenvalue(f, p))
        out.append(EigenpairClass(lam, p, m, is_zero))
    return out


def eigenpairs(f: BinaryForm, tol: Tolerances = DEFAULT):
    """One :class:`EigenpairClass` per distinct eigendirection, or an :class:`InfiniteEigenpairs`."""
    _check_degree(f)
    if f.is_zero:
        return InfiniteEigenpairs(degenerate=False)
    q = eigenvector_equation(f)
    if q.is_zero:
        return InfiniteEigenpairs(degenerate=True)
    if f.exact:
        return _exact_classes(f, q, tol)
    return _float_classes(f, q, tol)


def signature(f: BinaryForm, tol: Tolerances = DEFAULT) -> SpectralSignature:
    """(number of eigenpair classes, number of those with lambda = 0)."""
    result = eigenpairs(f, tol)
    if isinstance(result, InfiniteEigenpairs):
        return SpectralSignature(INFINITE, INFINITE, result.degenerate)
    return SpectralSignature(len(result), sum(1 for c in result if c.is_zero))


def residual(f: BinaryForm, cls: EigenpairClass) -> float:
    """Max-norm of ``grad f(x)/m - lam * x`` at the class representative."""
    m = f.degree
    x0, y0 = cls.direction.x, cls.direction.y
    if not (f.exact and isinstance(x0, GaussianRational) and isinstance(cls.lam, GaussianRational)):
        f = f.to_mode("float")
        x0, y0 = complex(x0), complex(y0)
    rx = evaluate(partial(f, "x"), x0, y0) / m - cls.lam * x0
    ry = evaluate(partial(f, "y"), x0, y0) / m - cls.lam * y0
    return max(abs(rx), abs(ry))


def _as_pair(c):
    if isinstance(c, EigenpairClass):
        return c.pair()
    lam, (x, y) = c
    return lam, (x, y)


def class_equivalent(c1, c2, m: int, rel_tol: float = 1e-8) -> bool:
    """True iff some t != 0 has ``t*x1 = x2`` and ``t**(m-2) * lam1 = lam2``.

    Accepts :class:`EigenpairClass` values or ``(lam, (x, y))`` pairs. The
    comparison is exact when every value is exact, else relative to ``rel_tol``.
    """
    lam1, (x1, y1) = _as_pair(c1)
    lam2, (x2, y2) = _as_pair(c2)
    exact = all(isinstance(v, (GaussianRational, int)) for v in (lam1, x1, y1, lam2, x2, y2))
    if not exact:
        lam1, x1, y1, lam2, x2, y2 = (complex(v) for v in (lam1, x1, y1, lam2, x2, y2))
    if abs(x1) >= abs(y1):
        if x1 == 0:
            raise ValueError("eigenvectors must be nonzero")
        t = x2 / x1
    else:
        t = y2 / y1
    if t == 0:
        return False

    def close(a, b, scale):
        if exact:
            return a == b
        return abs(a - b) <= rel_tol * max(scale, 1e-300)

    vec_scale = max(abs(x2), abs(y2))
    if not (close(t * x1, x2, vec_scale) and close(t * y1, y2, vec_scale)):
        return False
    lam_scaled = t ** (m - 2) * lam1
    return close(lam_scaled, lam2, max(abs(lam2), abs(lam_scaled), 1.0))


def normalize_class(c, m: int):
    """Class representative with lambda scaled to 1 (or left at 0).

    Returns ``(lam, (x, y))`` as complex numbers.
    """
    lam, (x, y) = _as_pair(c)
    lam, x, y = complex(lam), complex(x), complex(y)
    if lam == 0:
        return 0j, (x, y)
    # t**(m-2) * lam = 1
    t = cmath.exp(-cmath.log(lam) / (m - 2))
    return 1 + 0j, (t * x, t * y)


# --------------------------------------------------------------------------
# JSON


def encode_class(c: EigenpairClass) -> dict:
    return {
        "lambda": encode_float(c.lam),
        "direction": [encode_float(c.direction.x), encode_float(c.direction.y)],
        "multiplicity": c.multiplicity,
        "zero": c.is_zero,
    }


def _count(v):
    return "inf" if v == INFINITE else v


def encode_signature(s: SpectralSignature) -> dict:
    return {"classes": _count(s.classes), "zeros": _count(s.zeros), "degenerate": s.degenerate}
