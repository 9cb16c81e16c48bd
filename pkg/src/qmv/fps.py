"""Truncated formal Laurent series in q over exact rationals.

A series stores a dense coefficient window starting at ``min_exp`` together
with an explicit precision bound ``prec``: coefficients of q^k are exact for
every k < prec, and ``prec = INF`` marks an exact Laurent polynomial.  All
values are immutable; every operation returns a fresh series and propagates
precision conservatively (add: min, mul: min cross-valuation, invert:
prec - 2*valuation).  There is deliberately no unqualified equality between
series - comparisons go through :func:`eq_to_order` (or :func:`poly_eq` for
two exact polynomials).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Mapping, Sequence, Union

from .errors import BeyondPrecision, InsufficientPrecision, InversionOfZero

INF = math.inf

Rat = Union[int, Fraction]


def _frac(c: Rat) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


@dataclass(frozen=True, eq=False)
class Monomial:
    """A single term c*q^k with exact rational c and integer k (may be < 0).

    The canonical zero is ``Monomial(0, 0)``; construction normalizes to it.
    """

    coeff: Fraction
    exp: int

    def __post_init__(self):
        object.__setattr__(self, "coeff", _frac(self.coeff))
        if self.coeff == 0:
            object.__setattr__(self, "exp", 0)

    @property
    def is_zero(self) -> bool:
        return self.coeff == 0

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(self.coeff * other.coeff, self.exp + other.exp)

    def __neg__(self) -> "Monomial":
        return Monomial(-self.coeff, self.exp)

    def __pow__(self, n: int) -> "Monomial":
        if n < 0:
            return self.inverse() ** (-n)
        return Monomial(self.coeff**n, self.exp * n)

    def shifted(self, k: int) -> "Monomial":
        """Multiply by q^k (no-op on the canonical zero)."""
        if self.is_zero:
            return self
        return Monomial(self.coeff, self.exp + k)

    def inverse(self) -> "Monomial":
        if self.is_zero:
            raise InversionOfZero("cannot invert the zero monomial")
        return Monomial(1 / self.coeff, -self.exp)

    def __repr__(self) -> str:
        return f"Monomial({self.coeff}, q^{self.exp})"


def mono(c: Rat, k: int = 0) -> Monomial:
    return Monomial(_frac(c), k)


MONO_ZERO = mono(0)
MONO_ONE = mono(1)


@dataclass(frozen=True, eq=False)
class LaurentSeries:
    """Dense window of exact coefficients plus an explicit precision bound.

    Invariants (enforced by :func:`series`): the first and last stored
    coefficients are nonzero unless the window is empty; every stored
    exponent is < prec; the canonical zero has ``min_exp = 0, coeffs = ()``.
    """

    min_exp: int
    coeffs: tuple[Fraction, ...]
    prec: Union[int, float]

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def valuation(self) -> Union[int, None]:
        """Lowest exponent carrying a nonzero coefficient, None for zero."""
        return None if self.is_zero else self.min_exp

    def degree(self) -> Union[int, None]:
        return None if self.is_zero else self.min_exp + len(self.coeffs) - 1

    def coefficient(self, k: int) -> Fraction:
        """Exact coefficient of q^k; raises beyond the precision bound."""
        if k >= self.prec:
            raise BeyondPrecision(f"coefficient of q^{k} not known at prec {self.prec}")
        i = k - self.min_exp
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def terms(self) -> Iterator[tuple[int, Fraction]]:
        """Nonzero (exponent, coefficient) pairs in ascending exponent order."""
        for i, c in enumerate(self.coeffs):
            if c:
                yield self.min_exp + i, c

    def __add__(self, other: "LaurentSeries") -> "LaurentSeries":
        return add(self, other)

    def __sub__(self, other: "LaurentSeries") -> "LaurentSeries":
        return add(self, scale(other, -1))

    def __mul__(self, other: "LaurentSeries") -> "LaurentSeries":
        return mul(self, other)

    def __neg__(self) -> "LaurentSeries":
        return scale(self, -1)

    def __repr__(self) -> str:
        return f"LaurentSeries({format_series(self)})"


def _norm_prec(prec: Union[int, float]) -> Union[int, float]:
    return INF if prec == INF else int(prec)


def series(min_exp: int, coeffs: Sequence[Rat], prec: Union[int, float] = INF) -> LaurentSeries:
    """Normalized constructor: strips zero margins, drops terms >= prec."""
    prec = _norm_prec(prec)
    cs = [_frac(c) for c in coeffs]
    lo = 0
    while lo < len(cs) and cs[lo] == 0:
        lo += 1
    min_exp += lo
    cs = cs[lo:]
    if prec is not INF:
        keep = int(prec) - min_exp
        cs = cs[: max(0, keep)]
    while cs and cs[-1] == 0:
        cs.pop()
    if not cs:
        return LaurentSeries(0, (), prec)
    return LaurentSeries(min_exp, tuple(cs), prec)


def zero(prec: Union[int, float] = INF) -> LaurentSeries:
    return LaurentSeries(0, (), _norm_prec(prec))


def one() -> LaurentSeries:
    return series(0, [1])


def const(c: Rat) -> LaurentSeries:
    return series(0, [c])


def q_pow(k: int, c: Rat = 1) -> LaurentSeries:
    """The Laurent monomial c*q^k as an exact series."""
    return series(k, [c])


def from_monomial(m: Monomial) -> LaurentSeries:
    return zero() if m.is_zero else series(m.exp, [m.coeff])


def from_terms(terms: Mapping[int, Rat], prec: Union[int, float] = INF) -> LaurentSeries:
    if not terms:
        return zero(prec)
    lo, hi = min(terms), max(terms)
    cs = [Fraction(0)] * (hi - lo + 1)
    for k, c in terms.items():
        cs[k - lo] = _frac(c)
    return series(lo, cs, prec)


def _pval(f: LaurentSeries) -> Union[int, float]:
    """Valuation for precision accounting: prec for a series zero to finite
    precision (its content is O(q^prec)), +inf for the exact zero."""
    if f.coeffs:
        return f.min_exp
    return f.prec


def add(f: LaurentSeries, g: LaurentSeries) -> LaurentSeries:
    prec = min(f.prec, g.prec)
    if f.is_zero and g.is_zero:
        return zero(prec)
    if f.is_zero:
        return series(g.min_exp, g.coeffs, prec)
    if g.is_zero:
        return series(f.min_exp, f.coeffs, prec)
    lo = min(f.min_exp, g.min_exp)
    hi = max(f.min_exp + len(f.coeffs), g.min_exp + len(g.coeffs))
    cs = [Fraction(0)] * (hi - lo)
    for i, c in enumerate(f.coeffs):
        cs[f.min_exp - lo + i] = c
    for i, c in enumerate(g.coeffs):
        cs[g.min_exp - lo + i] += c
    return series(lo, cs, prec)


def mul(f: LaurentSeries, g: LaurentSeries) -> LaurentSeries:
    prec = min(f.prec + _pval(g), g.prec + _pval(f))
    if prec != INF:
        prec = int(prec)
    if f.is_zero or g.is_zero:
        return zero(prec)
    cs = [Fraction(0)] * (len(f.coeffs) + len(g.coeffs) - 1)
    for i, a in enumerate(f.coeffs):
        if not a:
            continue
        for j, b in enumerate(g.coeffs):
            if b:
                cs[i + j] += a * b
    return series(f.min_exp + g.min_exp, cs, prec)


def scale(f: LaurentSeries, c: Rat) -> LaurentSeries:
    c = _frac(c)
    if c == 0:
        return zero(f.prec)
    return series(f.min_exp, [c * a for a in f.coeffs], f.prec)


def shift(f: LaurentSeries, k: int) -> LaurentSeries:
    prec = INF if f.prec == INF else int(f.prec) + k
    return LaurentSeries(f.min_exp + k if f.coeffs else 0, f.coeffs, prec)


def truncate(f: LaurentSeries, order: Union[int, float]) -> LaurentSeries:
    if order >= f.prec:
        return f
    return series(f.min_exp, f.coeffs, order)


def mul_monomial(f: LaurentSeries, m: Monomial) -> LaurentSeries:
    if m.is_zero:
        return zero(INF if f.prec == INF else f.prec + m.exp)
    return shift(scale(f, m.coeff), m.exp)


def coefficient(f: LaurentSeries, k: int) -> Fraction:
    return f.coefficient(k)


def invert(f: LaurentSeries, order: int) -> LaurentSeries:
    """Series g with f*g = 1 + O(q^order); g.prec = order.

    Requires a nonzero leading coefficient in the known window and enough
    input precision: prec(f) - 2*val(f) >= order.
    """
    if f.is_zero:
        raise InversionOfZero("series is zero to its known precision")
    v = f.min_exp
    if f.prec != INF and f.prec - 2 * v < order:
        raise InsufficientPrecision(
            f"invert to order {order} needs prec {order + 2 * v}, have {f.prec}"
        )
    n_terms = order + v  # coefficients of u^-1 below this relative order
    if n_terms <= 0:
        return zero(order)
    u = f.coeffs
    lead = u[0]
    w = [Fraction(0)] * n_terms
    w[0] = 1 / lead
    for k in range(1, n_terms):
        acc = Fraction(0)
        for i in range(1, min(k, len(u) - 1) + 1):
            if u[i]:
                acc += u[i] * w[k - i]
        if acc:
            w[k] = -acc / lead
    return series(-v, w, order)


def div(num: LaurentSeries, den: LaurentSeries, order: int) -> LaurentSeries:
    """num/den with prec >= order."""
    if num.is_zero:
        return zero(order)
    g = mul(num, invert(den, order - num.min_exp))
    return truncate(g, order)


def div_binomial(f: LaurentSeries, c: Rat, e: int, order: int) -> LaurentSeries:
    """Divide f by the two-term factor (1 - c*q^e), truncated at order.

    Linear-time in the output length; e may be negative (the factor is then
    rewritten around its lowest term) and e = 0 is a scalar division.
    """
    c = _frac(c)
    if c == 0:
        return truncate(f, order)
    if e == 0:
        if c == 1:
            raise InversionOfZero("division by the zero constant 1 - 1")
        return truncate(scale(f, 1 / (1 - c)), order)
    if e < 0:
        # 1 - c q^e = (-c q^e)(1 - (1/c) q^-e)
        g = shift(scale(f, -1 / c), -e)
        return div_binomial(g, 1 / c, -e, order)
    if f.is_zero:
        return zero(min(order, f.prec))
    prec = min(order, f.prec)
    lo = f.min_exp
    n = int(prec) - lo
    if n <= 0:
        return zero(prec)
    out = [Fraction(0)] * n
    for i in range(n):
        acc = f.coeffs[i] if i < len(f.coeffs) else Fraction(0)
        if i >= e and out[i - e]:
            acc += c * out[i - e]
        out[i] = acc
    return series(lo, out, prec)


def mul_binomial(f: LaurentSeries, c: Rat, e: int) -> LaurentSeries:
    """Multiply f by (1 - c*q^e)."""
    return add(f, mul_monomial(f, mono(-_frac(c), e)))


def eq_to_order(f: LaurentSeries, g: LaurentSeries, order: int):
    """Compare coefficients of q^k for all k < order.

    Returns (True, None) on agreement, else (False, (k, f_k, g_k)) for the
    smallest mismatching exponent k.
    """
    if f.prec < order or g.prec < order:
        raise InsufficientPrecision(
            f"eq_to_order({order}) with precs {f.prec}, {g.prec}"
        )
    lo_candidates = [e for e in (f.valuation(), g.valuation()) if e is not None]
    if not lo_candidates:
        return True, None
    lo = min(lo_candidates)
    for k in range(lo, order):
        a = f.coefficient(k)
        b = g.coefficient(k)
        if a != b:
            return False, (k, a, b)
    return True, None


def poly_eq(f: LaurentSeries, g: LaurentSeries) -> bool:
    """Exact equality of two exact Laurent polynomials (both prec = INF)."""
    if f.prec != INF or g.prec != INF:
        raise InsufficientPrecision("poly_eq requires two exact polynomials")
    return f.min_exp == g.min_exp and f.coeffs == g.coeffs


def exact_div(num: LaurentSeries, den: LaurentSeries) -> LaurentSeries:
    """Exact Laurent-polynomial quotient; asserts the division leaves no
    remainder (num == q*den exactly)."""
    if num.prec != INF or den.prec != INF:
        raise InsufficientPrecision("exact_div requires exact polynomials")
    if den.is_zero:
        raise InversionOfZero("exact division by zero polynomial")
    if num.is_zero:
        return zero()
    q_deg = num.degree() - den.degree()
    q = div(num, den, q_deg + 1)
    q = LaurentSeries(q.min_exp, q.coeffs, INF)
    if not poly_eq(mul(q, den), num):
        raise ArithmeticError("exact_div: nonzero remainder")
    return q


def format_series(f: LaurentSeries, max_terms: int = 12) -> str:
    parts = []
    for k, c in f.terms():
        if len(parts) >= max_terms:
            parts.append("...")
            break
        if k == 0:
            t = str(c)
        else:
            qs = "q" if k == 1 else f"q^{k}"
            if c == 1:
                t = qs
            elif c == -1:
                t = f"-{qs}"
            else:
                t = f"{c}*{qs}"
        parts.append(t)
    body = " + ".join(parts).replace("+ -", "- ") if parts else "0"
    if f.prec == INF:
        return body
    return f"{body} + O(q^{int(f.prec)})"
