"""Principal parts of third and fourth order linear PDEs in two variables.

A constant-coefficient principal part ``sum_k c_k * d^(n-k)/dx^(n-k) d^k/dy^k U``
corresponds to the binary form ``sum_k c_k x^(n-k) y^k``; classifying the
form over R classifies the operator.

Text grammar (whitespace is insignificant)::

    equation   := side ["=" anything]
    side       := term (("+" | "-") term)*      (a leading sign is allowed)
    term       := number ["*"] derivative | derivative | number
    derivative := "U_" ("x" | "y")+ | "U"
    number     := digits ["." digits] [exponent] | digits "/" digits

Letter order inside a derivative is irrelevant (``U_xyx == U_xxy``). Terms
below the principal order, bare numbers included, are dropped and flagged.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import BinaryForm, Transform2, transform_coeffs_closed
from .classify import RealType, classify_real, encode_mu
from .errors import NonRealCoefficient, NonRealTransform, PdeSyntaxError, UnsupportedOrder
from .scalars import GaussianRational, format_scalar, unify
from .tolerances import DEFAULT, Tolerances

SUPPORTED_ORDERS = (3, 4)

CANONICAL_TEXT = {
    3: {
        1: "0 = Φ",
        2: "∂x³U = Φ",
        3: "∂x³U+∂y³U = Φ",
        4: "∂x³U−3∂x∂y²U = Φ",
        5: "∂x²∂yU = Φ",
    },
    4: {
        1: "0 = Φ",
        2: "∂x⁴U = Φ",
        3: "∂x⁴U+6μ∂x²∂y²U+∂y⁴U = Φ",
        4: "∂x⁴U+6μ∂x²∂y²U+∂y⁴U = Φ",
        5: "∂x⁴U+6μ∂x²∂y²U−∂y⁴U = Φ",
        6: "∂x⁴U+6∂x²∂y²U = Φ",
        7: "∂x⁴U−6∂x²∂y²U = Φ",
        8: "∂x²∂y²U = Φ",
        9: "(∂x²+∂y²)²U = Φ",
        10: "∂x³∂yU = Φ",
    },
}


@dataclass(frozen=True)
class PdePrincipal:
    """``coeffs[k]`` multiplies the derivative with ``order - k`` x's and ``k`` y's.

    ``has_lower`` records that lower-order terms were dropped; it does not
    take part in equality.
    """

    order: int
    coeffs: tuple
    has_lower: bool = field(default=False, compare=False)

    def __post_init__(self):
        if self.order not in SUPPORTED_ORDERS:
            raise UnsupportedOrder(f"principal order must be 3 or 4, got {self.order}")
        if len(self.coeffs) != self.order + 1:
            raise PdeSyntaxError(f"order {self.order} needs {self.order + 1} coefficients, got {len(self.coeffs)}")
        vals = unify(self.coeffs)
        for v in vals:
            if (v.im if isinstance(v, GaussianRational) else v.imag) != 0:
                raise NonRealCoefficient(f"coefficient {format_scalar(v)} is not real")
        if not isinstance(vals[0], GaussianRational):
            vals = tuple(complex(v.real, 0.0) for v in vals)
        object.__setattr__(self, "coeffs", vals)

    @property
    def exact(self) -> bool:
        return isinstance(self.coeffs[0], GaussianRational)

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __str__(self):
        return render_pde(self)


@dataclass(frozen=True)
class PdeReport:
    real_type: RealType
    canonical_text: str

    @property
    def mu(self):
        return self.real_type.mu

    def __str__(self):
        return f"Type {self.real_type.type_id}, canonical: {self.canonical_text}"


# --------------------------------------------------------------------------
# parsing

_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<deriv>U(?:_(?P<vars>[A-Za-z]+))?)
  | (?P<num>(?:\d+/\d+|(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?))
  | (?P<op>[+\-*=])
  | (?P<ident>[A-Za-z_][A-Za-z_0-9]*)
    """,
    re.VERBOSE,
)


def _tokens(text: str):
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise PdeSyntaxError(f"unexpected character {text[pos]!r}", text, pos)
        kind = m.lastgroup if m.lastgroup != "vars" else "deriv"
        if kind != "ws":
            yield kind, m.group(kind), m.start(), m.group("vars") if kind == "deriv" else None
        pos = m.end()
        if kind == "op" and m.group("op") == "=":
            return
    yield "end", "", len(text), None


def _derivative_order(vars_, text, pos):
    if vars_ is None:
        return 0, 0
    bad = set(vars_) - {"x", "y"}
    if bad:
        raise PdeSyntaxError(f"derivative variables must be x or y, got {''.join(sorted(bad))!r}", text, pos + 2)
    return vars_.count("x"), vars_.count("y")


def _number(tok: str, mode: str):
    if mode == "float":
        return float(Fraction(tok)) if "/" in tok else float(tok)
    return GaussianRational(Fraction(tok))


def parse_pde(text: str, mode: str = "exact", order: int | None = None) -> PdePrincipal:
    """Parse a constant-coefficient principal part.

    ``order`` is only needed when the text has no derivative of order 3 or 4
    (for instance ``"0 = Phi"``); otherwise it must agree with the text.
    """
    if not text or not text.strip():
        raise PdeSyntaxError("empty PDE text")
    if mode not in ("exact", "float"):
        raise PdeSyntaxError(f"unknown mode {mode!r}")
    terms = {}  # (nx, ny) -> coefficient
    has_lower = False
    toks = list(_tokens(text))
    i = 0

    def peek():
        return toks[i]

    sign = 1
    expect_term = True
    n_terms = 0
    while True:
        kind, val, pos, vars_ = peek()
        if kind == "end" or (kind == "op" and val == "="):
            if expect_term:
                raise PdeSyntaxError("expected a term", text, pos)
            break
        if not expect_term:
            if kind == "op" and val in "+-":
                sign = -1 if val == "-" else 1
                expect_term = True
                i += 1
                continue
            raise PdeSyntaxError(f"expected '+', '-' or '=', got {val!r}", text, pos)
        if kind == "op" and val in "+-" and n_terms == 0 and sign == 1:
            sign = -1 if val == "-" else 1
            i += 1
            continue
        coeff = None
        if kind == "num":
            coeff = _number(val, mode)
            i += 1
            kind, val, pos, vars_ = peek()
            if kind == "ident" and val == "i":
                raise NonRealCoefficient(f"imaginary coefficient at position {pos}")
            if kind == "op" and val == "*":
                i += 1
                kind, val, pos, vars_ = peek()
                if kind != "deriv":
                    _reject_identifier(kind, val, text, pos)
                    raise PdeSyntaxError("expected a derivative after '*'", text, pos)
        if kind == "ident":
            _reject_identifier(kind, val, text, pos)
        if kind == "deriv":
            nx, ny = _derivative_order(vars_, text, pos)
            i += 1
            nxt = peek()
            if nxt[0] in ("deriv", "num", "ident") or (nxt[0] == "op" and nxt[1] == "*"):
                raise PdeSyntaxError("coefficients must precede the derivative", text, nxt[2])
            c = sign * (coeff if coeff is not None else _number("1", mode))
            terms[(nx, ny)] = terms.get((nx, ny), 0) + c
        elif coeff is not None:
            if coeff != 0:
                has_lower = True
        else:
            raise PdeSyntaxError(f"expected a term, got {val!r}", text, pos)
        n_terms += 1
        sign = 1
        expect_term = False
    return _assemble(terms, has_lower, order, mode)


def _reject_identifier(kind, val, text, pos):
    if kind != "ident":
        return
    if val == "i":
        raise NonRealCoefficient(f"imaginary coefficient at position {pos}")
    raise PdeSyntaxError(f"variable coefficient {val!r} (only constant coefficients are supported)", text, pos)


def _assemble(terms, has_lower, order, mode):
    present = max((nx + ny for nx, ny in terms), default=None)
    if present is not None and present > max(SUPPORTED_ORDERS):
        raise UnsupportedOrder(f"derivatives of order {present} are not supported")
    principal = present if present in SUPPORTED_ORDERS else None
    if order is not None:
        if order not in SUPPORTED_ORDERS:
            raise UnsupportedOrder(f"principal order must be 3 or 4, got {order}")
        if principal is not None and principal != order:
            raise UnsupportedOrder(f"text has order {principal}, expected {order}")
        principal = order
    if principal is None:
        raise UnsupportedOrder(
            "no derivative of order 3 or 4 found" if present is not None else "no derivative found; pass an order"
        )
    zero = _number("0", mode)
    coeffs = [zero] * (principal + 1)
    for (nx, ny), c in terms.items():
        if nx + ny == principal:
            coeffs[ny] = coeffs[ny] + c
        elif c != 0:
            has_lower = True
    return PdePrincipal(principal, tuple(coeffs), has_lower)


# --------------------------------------------------------------------------
# rendering


def _format_coeff(c) -> str:
    if isinstance(c, GaussianRational):
        return str(c.re)
    v = c.real
    short = format(v, ".12g")
    return short if float(short) == v else repr(v)


def render_pde(p: PdePrincipal) -> str:
    """``"c*U_xx..y.. + ... = Phi"``; coefficients of 1 are omitted."""
    parts = []
    for k, c in enumerate(p.coeffs):
        if c == 0:
            continue
        deriv = "U_" + "x" * (p.order - k) + "y" * k
        negative = (c.re if isinstance(c, GaussianRational) else c.real) < 0
        mag = _format_coeff(-c if negative else c)
        term = deriv if mag == "1" else f"{mag}*{deriv}"
        if parts:
            parts.append(("- " if negative else "+ ") + term)
        else:
            parts.append(("-" if negative else "") + term)
    return (" ".join(parts) if parts else "0") + " = Phi"


# --------------------------------------------------------------------------
# correspondence with binary forms


def pde_to_form(p: PdePrincipal) -> BinaryForm:
    return BinaryForm(p.order, p.coeffs)


def form_to_pde(f: BinaryForm, has_lower: bool = False) -> PdePrincipal:
    return PdePrincipal(f.degree, f.coeffs, has_lower)


def canonical_text(order: int, type_id: int, mu=None) -> str:
    text = CANONICAL_TEXT[order][type_id]
    if mu is not None and "μ" in text:
        text += f" with μ={format_scalar(mu)}"
    return text


def classify_pde(p: PdePrincipal, tol: Tolerances = DEFAULT) -> PdeReport:
    real_type = classify_real(pde_to_form(p), tol)
    return PdeReport(real_type, canonical_text(p.order, real_type.type_id, real_type.mu))


def transform_pde(p: PdePrincipal, P: Transform2) -> PdePrincipal:
    """Coefficients after the change of variables P, via the closed coefficient formulas."""
    if not P.real:
        raise NonRealTransform("PDE coordinate changes must be real")
    return form_to_pde(transform_coeffs_closed(pde_to_form(p), P), p.has_lower)


# --------------------------------------------------------------------------
# JSON


def _encode_real(c):
    if isinstance(c, GaussianRational):
        return str(c.re)
    return c.real


def encode_pde(p: PdePrincipal) -> dict:
    return {"order": p.order, "coeffs": [_encode_real(c) for c in p.coeffs], "lower": p.has_lower}


def decode_pde(obj: dict, mode: str | None = None) -> PdePrincipal:
    try:
        order, coeffs = obj["order"], obj["coeffs"]
    except (KeyError, TypeError) as exc:
        raise PdeSyntaxError(f"PDE JSON needs 'order' and 'coeffs': {exc}") from None
    return PdePrincipal(order, unify(coeffs, mode), bool(obj.get("lower", False)))


def encode_pde_report(r: PdeReport) -> dict:
    return {"realType": r.real_type.type_id, "canonicalText": r.canonical_text, "mu": encode_mu(r.mu)}
