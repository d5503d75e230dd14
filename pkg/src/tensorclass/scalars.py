"""Scalars: exact Gaussian rationals and double-precision complex numbers.

Every public value is one of two kinds:

* exact -- a :class:`GaussianRational` ``p/q + (r/s)i`` with rational parts
  (``gmpy2.mpq``, which is a ``numbers.Rational`` and mixes freely with Fraction);
* float -- a Python ``complex`` with finite real and imaginary parts.

Arithmetic between an exact and a float value degrades to float.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from numbers import Rational

from gmpy2 import mpq

from .errors import InputError


_MPQ = type(mpq(0))
_ZERO = mpq(0)


def _rational(v):
    if isinstance(v, str):
        return mpq(Fraction(v))
    return mpq(v)


class GaussianRational:
    """Immutable complex number with rational real and imaginary parts.

    ``re`` and ``im`` are ``gmpy2.mpq`` values; constructors accept ints,
    Fractions, mpq and numeric strings.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        _set_re(self, re if type(re) is _MPQ else _rational(re))
        _set_im(self, im if type(im) is _MPQ else _rational(im))

    @classmethod
    def _make(cls, re, im=_ZERO) -> GaussianRational:
        """Construct from parts that are already mpq (hot path)."""
        obj = object.__new__(cls)
        _set_re(obj, re)
        _set_im(obj, im)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    # construction -----------------------------------------------------

    @classmethod
    def parse(cls, text: str) -> GaussianRational:
        """Parse ``"p/q+r/si"`` style text (also ``"3"``, ``"-i"``, ``"2.5-1/3i"``)."""
        s = text.replace(" ", "")
        m = _PURE_REAL.fullmatch(s)
        if m:
            return cls(Fraction(s))
        m = _PURE_IMAG.fullmatch(s)
        if m:
            return cls(0, _imag_part(m.group("sign"), m.group("num")))
        m = _COMPLEX.fullmatch(s)
        if m:
            return cls(Fraction(m.group("re")), _imag_part(m.group("sign"), m.group("num")))
        raise InputError(f"not an exact scalar: {text!r}")

    # arithmetic -------------------------------------------------------

    def _coerce(self, other):
        if type(other) is GaussianRational:
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return GaussianRational._make(mpq(other))
        if isinstance(other, (GaussianRational, Rational)):
            return other if isinstance(other, GaussianRational) else GaussianRational(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return complex(self) + other if isinstance(other, (float, complex)) else NotImplemented
        return GaussianRational._make(self.re + o.re, self.im + o.im if (self.im or o.im) else _ZERO)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational._make(-self.re, -self.im if self.im else _ZERO)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return complex(self) - other if isinstance(other, (float, complex)) else NotImplemented
        return GaussianRational._make(self.re - o.re, self.im - o.im if (self.im or o.im) else _ZERO)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return other - complex(self) if isinstance(other, (float, complex)) else NotImplemented
        return GaussianRational._make(o.re - self.re, o.im - self.im if (self.im or o.im) else _ZERO)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return complex(self) * other if isinstance(other, (float, complex)) else NotImplemented
        if not self.im and not o.im:
            return GaussianRational._make(self.re * o.re)
        return GaussianRational._make(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return complex(self) / other if isinstance(other, (float, complex)) else NotImplemented
        if not self.im and not o.im:
            if not o.re:
                raise ZeroDivisionError("GaussianRational division by zero")
            return GaussianRational._make(self.re / o.re)
        return self * o.reciprocal()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return other / complex(self) if isinstance(other, (float, complex)) else NotImplemented
        return o * self.reciprocal()

    def __pow__(self, n):
        if not isinstance(n, int):
            return complex(self) ** n
        if n < 0:
            return self.reciprocal() ** (-n)
        result = GaussianRational(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def reciprocal(self) -> GaussianRational:
        if not self.im:
            if not self.re:
                raise ZeroDivisionError("GaussianRational division by zero")
            return GaussianRational._make(1 / self.re)
        n = self.re * self.re + self.im * self.im
        return GaussianRational._make(self.re / n, -self.im / n)

    def conjugate(self) -> GaussianRational:
        return GaussianRational(self.re, -self.im)

    # comparison and conversion ----------------------------------------

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            if isinstance(other, (float, complex)):
                return complex(self) == other
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __abs__(self):
        return abs(complex(self))

    @property
    def real(self):
        return self.re

    @property
    def imag(self):
        return self.im

    def __repr__(self):
        return f"GaussianRational('{self}')"

    def __str__(self):
        if not self.im:
            return str(self.re)
        im = f"{abs(self.im)}i"
        if not self.re:
            return ("-" if self.im < 0 else "") + im
        return f"{self.re}{'-' if self.im < 0 else '+'}{im}"


_set_re = GaussianRational.__dict__["re"].__set__
_set_im = GaussianRational.__dict__["im"].__set__

_NUM = r"(?:\d+/\d+|(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)"
_PURE_REAL = re.compile(rf"[+-]?{_NUM}")
_PURE_IMAG = re.compile(rf"(?P<sign>[+-]?)(?P<num>{_NUM})?\*?i")
_COMPLEX = re.compile(rf"(?P<re>[+-]?{_NUM})(?P<sign>[+-])(?P<num>{_NUM})?\*?i")


def _imag_part(sign, num):
    value = Fraction(num) if num else Fraction(1)
    return -value if sign == "-" else value


# --------------------------------------------------------------------------
# helpers shared by every module


def is_exact(x) -> bool:
    return isinstance(x, (GaussianRational, int, Rational)) and not isinstance(x, bool)


def is_zero(x) -> bool:
    return x == 0


def is_real_value(x) -> bool:
    """True iff the imaginary part is literally zero."""
    if isinstance(x, GaussianRational):
        return not x.im
    if isinstance(x, complex):
        return x.imag == 0
    return True


def check_finite(x: complex) -> complex:
    if not (math.isfinite(x.real) and math.isfinite(x.imag)):
        raise InputError(f"non-finite scalar {x!r}")
    return x


def to_exact(x) -> GaussianRational:
    """Convert to a GaussianRational; floats convert exactly (binary value)."""
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, bool):
        raise InputError("booleans are not scalars")
    if isinstance(x, (int, Rational)):
        return GaussianRational(x)
    if isinstance(x, float):
        check_finite(complex(x))
        return GaussianRational(Fraction(x))
    if isinstance(x, complex):
        check_finite(x)
        return GaussianRational(Fraction(x.real), Fraction(x.imag))
    if isinstance(x, str):
        return GaussianRational.parse(x)
    if isinstance(x, (list, tuple)) and len(x) == 2:
        return GaussianRational(to_exact(x[0]).re, to_exact(x[1]).re)
    raise InputError(f"cannot interpret {x!r} as a scalar")


def to_float(x) -> complex:
    if isinstance(x, (list, tuple)) and len(x) == 2:
        return check_finite(complex(float(to_exact(x[0]).re) if isinstance(x[0], str) else float(x[0]),
                                    float(to_exact(x[1]).re) if isinstance(x[1], str) else float(x[1])))
    if isinstance(x, str):
        return complex(GaussianRational.parse(x))
    if isinstance(x, bool):
        raise InputError("booleans are not scalars")
    try:
        return check_finite(complex(x))
    except (TypeError, ValueError) as exc:
        raise InputError(f"cannot interpret {x!r} as a scalar") from exc


def to_scalar(x, mode: str | None = None):
    """Coerce ``x`` to a scalar.

    With ``mode=None`` the kind follows the input: ints, Fractions and
    strings become exact, Python floats and complex numbers stay float.
    """
    if mode == "exact":
        return to_exact(x)
    if mode == "float":
        return to_float(x)
    if mode is not None:
        raise InputError(f"unknown mode {mode!r}")
    if isinstance(x, (float, complex)):
        return check_finite(complex(x))
    if isinstance(x, (list, tuple)) and len(x) == 2 and any(isinstance(v, float) for v in x):
        return to_float(x)
    return to_exact(x)


def unify(values, mode: str | None = None) -> tuple:
    """Coerce a sequence so every entry has the same kind (exact unless any is float)."""
    vals = [to_scalar(v, mode) for v in values]
    if mode is None and not all(isinstance(v, GaussianRational) for v in vals):
        vals = [complex(v) for v in vals]
    return tuple(vals)


def scalar_real(x):
    """Real part as a rational (exact) or float."""
    if isinstance(x, GaussianRational):
        return x.re
    return complex(x).real


def format_scalar(x, digits: int = 12) -> str:
    """Human-readable rendering; exact values print exactly."""
    if isinstance(x, GaussianRational):
        return str(x)
    z = complex(x)
    re_s = _fmt_float(z.real, digits)
    if z.imag == 0:
        return re_s
    im_s = _fmt_float(abs(z.imag), digits) + "i"
    if z.real == 0:
        return ("-" if z.imag < 0 else "") + im_s
    return f"{re_s}{'-' if z.imag < 0 else '+'}{im_s}"


def _fmt_float(v: float, digits: int) -> str:
    if v == 0:
        return "0"
    return format(v, f".{digits}g")


def encode_scalar(x):
    """JSON encoding: exact as ``"p/q+r/si"`` string, float as ``[re, im]``."""
    if isinstance(x, GaussianRational):
        return str(x)
    z = complex(x)
    return [z.real, z.imag]


def encode_float(x) -> list:
    z = complex(x)
    return [z.real, z.imag]


def decode_scalar(obj, mode: str | None = None):
    """Inverse of :func:`encode_scalar`; also accepts plain JSON numbers."""
    if isinstance(obj, (list, tuple)):
        if len(obj) != 2:
            raise InputError(f"complex scalar must be [re, im], got {obj!r}")
        if mode is None:
            mode = "exact" if all(isinstance(v, (int, Rational, str)) for v in obj) else "float"
        return to_scalar(obj, mode)
    return to_scalar(obj, mode)
