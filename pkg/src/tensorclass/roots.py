"""Roots with multiplicities of univariate polynomials and binary forms.

Exact inputs: multiplicities come from a square-free decomposition, the
number of real roots of each real square-free factor from a Sturm
sequence. Root values are computed numerically per factor and replaced by
exact Gaussian rationals whenever a candidate verifies exactly.

Float inputs: companion-matrix eigenvalues (``numpy.roots``), grouped into
multiple roots by a backward-error test (see :class:`Tolerances`).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction

import numpy as np

from . import polynomial as poly
from .algebra import BinaryForm
from .errors import InputError, NonRealInput, UnsupportedDegree, ZeroForm, ZeroPolynomial
from .scalars import GaussianRational, is_real_value, unify
from .tolerances import DEFAULT, Tolerances

REAL = "real"
COMPLEX = "complex"
PAIR = "pair"
MAX_DEGREE = 4
_RATIONALIZE_BOUNDS = (10**4, 10**8)
_RATIONALIZE_SLACK = 1e-9


@dataclass(frozen=True)
class ProjectivePoint:
    """Direction (x : y), normalized to y = 1 when y != 0 and to (1, 0) otherwise."""

    x: object
    y: object

    @classmethod
    def of(cls, x, y) -> ProjectivePoint:
        if y != 0:
            return cls(x / y, y / y)
        if x == 0:
            raise InputError("(0, 0) is not a projective point")
        return cls(x / x, y * 0)

    @property
    def at_infinity(self) -> bool:
        return self.y == 0

    @property
    def exact(self) -> bool:
        return isinstance(self.x, GaussianRational)

    def as_complex(self) -> tuple:
        return complex(self.x), complex(self.y)


@dataclass(frozen=True)
class RootEntry:
    point: ProjectivePoint
    multiplicity: int
    kind: str  # REAL or COMPLEX


@dataclass(frozen=True)
class RootList:
    entries: tuple

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    @property
    def total_multiplicity(self) -> int:
        return sum(e.multiplicity for e in self.entries)

    def multiplicities(self) -> tuple:
        return tuple(sorted((e.multiplicity for e in self.entries), reverse=True))


RootPattern = tuple  # sorted tuple of (multiplicity, REAL | PAIR)


# --------------------------------------------------------------------------
# float clustering


def _set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        yield [[first]] + part
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]


def _cluster_error(p_norm, p_rev_norm, block_vals):
    """Backward error of declaring ``block_vals`` one multiple root at their centroid.

    The first k Taylor coefficients at the centroid must vanish, and the
    spread of the block must be what a perturbation of that size produces
    (``spread**k * |T_k|``), so distant roots with a lucky centroid are rejected.
    """
    c = sum(block_vals) / len(block_vals)
    k = len(block_vals)
    if abs(c) <= 1.0:
        t = poly.taylor_coefficients(p_norm, c, k + 1)
        spread = max(abs(v - c) for v in block_vals)
    else:
        t = poly.taylor_coefficients(p_rev_norm, 1 / c, k + 1)
        spread = max(abs(1 / v - 1 / c) if v != 0 else math.inf for v in block_vals)
    return max(max(abs(v) for v in t[:k]), spread**k * abs(t[k])), c


def _conjugation_map(raw):
    """Involution pairing each root with its nearest conjugate (greedy matching)."""
    n = len(raw)
    pairs = sorted(
        (abs(raw[j] - raw[i].conjugate()), i, j) for i in range(n) for j in range(i, n)
    )
    conj_of = [None] * n
    for _, i, j in pairs:
        if conj_of[i] is None and conj_of[j] is None:
            conj_of[i], conj_of[j] = j, i
    return conj_of


def cluster_roots(p_asc, tol: Tolerances = DEFAULT):
    """Float roots of ``p`` grouped into ``[(centroid, multiplicity), ...]``."""
    p = [complex(a) for a in poly.trim(p_asc)]
    n = len(p) - 1
    if n < 1:
        return []
    real_coeffs = all(a.imag == 0 for a in p)
    desc = [a.real for a in reversed(p)] if real_coeffs else list(reversed(p))
    raw = [complex(r) for r in np.roots(desc)]
    scale = max(abs(a) for a in p)
    p_norm = [a / scale for a in p]
    p_rev_norm = list(reversed(p_norm))
    tau = tol.eps_root ** 2

    conj_of = _conjugation_map(raw) if real_coeffs else None

    best = None
    for part in _set_partitions(list(range(n))):
        if conj_of is not None:
            blocks = {frozenset(b) for b in part}
            if any(frozenset(conj_of[i] for i in b) not in blocks for b in part):
                continue
        err = 0.0
        ok = True
        for b in part:
            if len(b) > 1:
                e, _ = _cluster_error(p_norm, p_rev_norm, [raw[i] for i in b])
                if e > tau:
                    ok = False
                    break
                err = max(err, e)
        if ok:
            key = (len(part), err)
            if best is None or key < best[0]:
                best = (key, part)
    out = []
    for b in best[1]:
        c = sum(raw[i] for i in b) / len(b)
        if real_coeffs and abs(c.imag) <= tol.eps_real * (1 + abs(c)):
            c = complex(c.real, 0.0)
        out.append((c, len(b)))
    if real_coeffs:
        out = _symmetrize(out)
    return out


def _symmetrize(clusters):
    """Make the non-real clusters of a real polynomial exact conjugate pairs."""
    upper = [(c, m) for c, m in clusters if c.imag > 0]
    lower = [(c, m) for c, m in clusters if c.imag < 0]
    if len(upper) != len(lower):
        return clusters
    real = [(c, m) for c, m in clusters if c.imag == 0]
    return real + upper + [(c.conjugate(), m) for c, m in upper]


# --------------------------------------------------------------------------
# exact square-free factors


def _polish(p_complex, z, steps=3):
    dp = poly.derivative(p_complex)
    for _ in range(steps):
        d = poly.evaluate(dp, z)
        if d == 0:
            break
        step = poly.evaluate(p_complex, z) / d
        z = z - step
        if abs(step) <= 1e-17 * (1 + abs(z)):
            break
    return z


def _rationalize(g, z):
    """An exact Gaussian rational equal to a root of g near z, or None."""
    for bound in _RATIONALIZE_BOUNDS:
        re = Fraction(z.real).limit_denominator(bound)
        im = Fraction(z.imag).limit_denominator(bound)
        if abs(complex(float(re), float(im)) - z) > _RATIONALIZE_SLACK * (1 + abs(z)):
            continue
        cand = GaussianRational(re, im)
        if poly.evaluate(g, cand) == 0:
            return cand
    return None


def squarefree_factor_roots(g, tol: Tolerances = DEFAULT):
    """Roots of an exact square-free polynomial as ``[(value, kind), ...]``.

    Values are GaussianRational when verified exactly, else complex.
    """
    g = poly.trim(g)
    n = len(g) - 1
    if n < 1:
        return []
    if n == 1:
        r = -g[0] / g[1]
        return [(r, REAL if is_real_value(r) else COMPLEX)]
    gc = [complex(a) for a in g]
    real_coeffs = all(is_real_value(a) for a in g)
    desc = [a.real for a in reversed(gc)] if real_coeffs else list(reversed(gc))
    approx = [_polish(gc, complex(z)) for z in np.roots(desc)]
    vals = []
    for z in approx:
        e = _rationalize(g, z)
        vals.append(e if e is not None else z)
    if not real_coeffs:
        out = []
        for v in vals:
            if isinstance(v, GaussianRational):
                out.append((v, REAL if not v.im else COMPLEX))
            else:
                out.append((v, REAL if abs(v.imag) <= tol.eps_real * (1 + abs(v)) else COMPLEX))
        return out
    n_real = poly.count_real_roots(g)
    order = sorted(range(n), key=lambda i: abs(complex(vals[i]).imag))
    real_vals = []
    for i in order[:n_real]:
        v = vals[i]
        if not isinstance(v, GaussianRational):
            v = complex(v.real, 0.0)
        real_vals.append((v, REAL))
    rest = [vals[i] for i in order[n_real:]]
    upper = [v for v in rest if complex(v).imag > 0]
    if 2 * len(upper) == len(rest):
        rest = upper + [v.conjugate() for v in upper]
    return real_vals + [(v, COMPLEX) for v in rest]


# --------------------------------------------------------------------------
# public operations


def _dehomogenize(f: BinaryForm):
    """(ascending coefficients of f(t, 1), multiplicity of the point (1 : 0))."""
    d = f.degree
    asc = [f.coeffs[d - j] for j in range(d + 1)]
    inf_mult = 0
    while inf_mult <= d and f.coeffs[inf_mult] == 0:
        inf_mult += 1
    return poly.trim(asc), inf_mult


def roots_complex(coeffs, tol: Tolerances = DEFAULT):
    """Roots of ``coeffs[0] t^n + ... + coeffs[n]`` as ``[(root, multiplicity), ...]``.

    Coefficients are given highest degree first, as for ``numpy.roots``.
    """
    vals = unify(coeffs)
    asc = poly.trim(list(reversed(vals)))
    if not asc:
        raise ZeroPolynomial("the zero polynomial has no root multiset")
    if len(asc) - 1 > MAX_DEGREE:
        raise UnsupportedDegree(f"degree {len(asc) - 1} exceeds {MAX_DEGREE}")
    if all(isinstance(a, GaussianRational) for a in asc):
        out = []
        for m, g in poly.squarefree_decomposition(asc):
            out.extend((v, m) for v, _ in squarefree_factor_roots(g, tol))
        return out
    return cluster_roots(asc, tol)


def _finite_entries_exact(asc, tol):
    entries = []
    for m, g in poly.squarefree_decomposition(asc):
        for v, kind in squarefree_factor_roots(g, tol):
            entries.append(RootEntry(ProjectivePoint.of(v, _one_like(v)), m, kind))
    return entries


def _one_like(v):
    return GaussianRational(1) if isinstance(v, GaussianRational) else 1.0 + 0j


def _finite_entries_float(asc, tol, real_coeffs):
    entries = []
    for c, m in cluster_roots(asc, tol):
        if real_coeffs:
            kind = REAL if c.imag == 0 else COMPLEX
        else:
            kind = REAL if abs(c.imag) <= tol.eps_real * (1 + abs(c)) else COMPLEX
        entries.append(RootEntry(ProjectivePoint.of(c, 1.0 + 0j), m, kind))
    return entries


@lru_cache(maxsize=1024)
def projective_roots(f: BinaryForm, tol: Tolerances = DEFAULT) -> RootList:
    """Projective roots of a nonzero binary form, including the point (1 : 0).

    Results are cached; forms and tolerances are immutable.
    """
    if f.is_zero:
        raise ZeroForm("the zero form vanishes everywhere")
    asc, inf_mult = _dehomogenize(f)
    if f.exact:
        entries = _finite_entries_exact(asc, tol)
        inf_point = ProjectivePoint(GaussianRational(1), GaussianRational(0))
    else:
        entries = _finite_entries_float(asc, tol, f.is_real)
        inf_point = ProjectivePoint(1.0 + 0j, 0j)
    if inf_mult:
        entries.insert(0, RootEntry(inf_point, inf_mult, REAL))
    return RootList(tuple(entries))


def pattern_key(item):
    mult, kind = item
    return (-mult, 0 if kind == REAL else 1)


def root_pattern(f: BinaryForm, tol: Tolerances = DEFAULT) -> RootPattern:
    """Multiplicity signature split into real roots and conjugate pairs."""
    if not f.is_real:
        raise NonRealInput("root patterns are defined for real forms only")
    return pattern_from_roots(projective_roots(f, tol))


def pattern_from_roots(roots: RootList) -> RootPattern:
    items = []
    for e in roots:
        if e.kind == REAL:
            items.append((e.multiplicity, REAL))
        elif complex(e.point.x).imag > 0:
            items.append((e.multiplicity, PAIR))
    return tuple(sorted(items, key=pattern_key))


def discriminant(f: BinaryForm):
    """Classical discriminant of a binary cubic or quartic (homogeneous convention).

    Vanishes exactly when the form has a repeated projective root.
    """
    if f.degree == 3:
        a, b, c, d = f.coeffs
        return b * b * c * c - 4 * a * c**3 - 4 * b**3 * d - 27 * a * a * d * d + 18 * a * b * c * d
    if f.degree == 4:
        a, b, c, d, e = f.coeffs
        return (256 * a**3 * e**3 - 192 * a**2 * b * d * e**2 - 128 * a**2 * c**2 * e**2
                + 144 * a**2 * c * d**2 * e - 27 * a**2 * d**4 + 144 * a * b**2 * c * e**2
                - 6 * a * b**2 * d**2 * e - 80 * a * b * c**2 * d * e + 18 * a * b * c * d**3
                + 16 * a * c**4 * e - 4 * a * c**3 * d**2 - 27 * b**4 * e**2 + 18 * b**3 * c * d * e
                - 4 * b**3 * d**3 - 4 * b**2 * c**3 * e + b**2 * c**2 * d**2)
    raise UnsupportedDegree(f"discriminant implemented for degrees 3 and 4, got {f.degree}")
