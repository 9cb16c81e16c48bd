"""q-algebra primitives in an arbitrary base q^r.

Gaussian binomials, finite / negative-index / infinite q-Pochhammer symbols
and multi-argument infinite products.  Everything is exact where the object
is a Laurent polynomial; infinite products are truncated at a caller-chosen
order.  The binomials are computed from the defining Pochhammer ratio with
an exact-division check, so the Pascal recurrence stays available as an
independent test.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence, Union

from . import fps
from .errors import PochhammerPole
from .fps import INF, LaurentSeries, Monomial, mono


@dataclass(frozen=True)
class QBase:
    """The base q^r of a Pochhammer symbol or Gaussian binomial (r >= 1)."""

    r: int

    def __post_init__(self):
        if self.r < 1:
            raise ValueError(f"base exponent must be >= 1, got {self.r}")


BaseLike = Union[int, QBase]


def _r(base: BaseLike) -> int:
    return base.r if isinstance(base, QBase) else QBase(base).r


@lru_cache(maxsize=None)
def _poch_q(n: int, r: int) -> LaurentSeries:
    """(q^r; q^r)_n as an exact polynomial."""
    f = fps.one()
    for j in range(n):
        f = fps.mul_binomial(f, 1, r * (j + 1))
    return f


@lru_cache(maxsize=None)
def gauss_binomial(n: int, m: int, base: BaseLike = 1) -> LaurentSeries:
    """Gaussian polynomial [n; m] in base q^r, zero outside 0 <= m <= n."""
    r = _r(base)
    if m < 0 or n < 0 or m > n:
        return fps.zero()
    num = _poch_q(n, r)
    den = fps.mul(_poch_q(m, r), _poch_q(n - m, r))
    return fps.exact_div(num, den)


def poch_val(a: Monomial, n: int, r: int) -> int:
    """Exact valuation of (a; q^r)_n for n >= 0 (0 if some factor is zero)."""
    if a.is_zero:
        return 0
    return sum(min(0, a.exp + r * j) for j in range(n))


def poch_val_floor(a: Monomial, r: int) -> int:
    """Lower bound on the valuation of (a; q^r)_n valid for every n >= 0."""
    if a.is_zero or a.exp >= 0:
        return 0
    v = 0
    j = 0
    while a.exp + r * j < 0:
        v += a.exp + r * j
        j += 1
    return v


def poch_finite(
    a: Monomial,
    n: int,
    base: BaseLike = 1,
    order: Union[int, None] = None,
) -> LaurentSeries:
    """(a; q^r)_n = prod_{j<n} (1 - a q^{rj}).

    For n >= 0 the result is an exact Laurent polynomial.  For n < 0 the
    reciprocal extension (a; q)_{-k} = 1/((a q^{-k}; q)_k) applies: the
    result is exact when the reciprocal polynomial is a single term, and is
    otherwise expanded to ``order`` (which must then be given).  A factor
    that vanishes identically raises :class:`PochhammerPole`.
    """
    r = _r(base)
    if n >= 0:
        f = fps.one()
        for j in range(n):
            f = fps.mul_binomial(f, a.coeff, a.exp + r * j)
        return f
    k = -n
    den = poch_finite(a.shifted(-r * k), k, base)
    if den.is_zero:
        raise PochhammerPole(f"({a!r}; q^{r})_{n} has an identically zero factor")
    if len(den.coeffs) == 1:
        v = den.valuation()
        return fps.q_pow(-v, 1 / den.coeffs[0])
    if order is None:
        raise ValueError(
            "negative-index Pochhammer with a non-monomial reciprocal "
            "needs an explicit truncation order"
        )
    return fps.invert(den, order)


def poch_infinite(a: Monomial, base: BaseLike, order: int) -> LaurentSeries:
    """(a; q^r)_inf = prod_{k>=0} (1 - a q^{rk}), truncated: prec = order.

    Factors with valuation >= order are identically 1 modulo q^order and are
    skipped; the finitely many factors with non-positive valuation (possible
    when a.exp <= 0) are multiplied exactly first.
    """
    r = _r(base)
    if a.is_zero:
        return fps.truncate(fps.one(), order)
    head = fps.one()
    k = 0
    while a.exp + r * k <= 0:
        head = fps.mul_binomial(head, a.coeff, a.exp + r * k)
        k += 1
    if head.is_zero:
        return fps.zero(order)
    tail_order = order - min(0, head.valuation())
    tail = fps.truncate(fps.one(), tail_order)
    while a.exp + r * k < tail_order:
        tail = fps.truncate(fps.mul_binomial(tail, a.coeff, a.exp + r * k), tail_order)
        k += 1
    return fps.truncate(fps.mul(head, tail), order)


def product_set(args: Sequence[Monomial], base: BaseLike, order: int) -> LaurentSeries:
    """Product of infinite Pochhammers (a_1, a_2, ...; q^r)_inf to order."""
    r = _r(base)
    slack = 0
    for a in args:
        if not a.is_zero and a.exp <= 0:
            k = 0
            while a.exp + r * k <= 0:
                slack += -(a.exp + r * k)
                k += 1
    w = order + slack
    f = fps.truncate(fps.one(), w)
    for a in args:
        f = fps.mul(f, poch_infinite(a, base, w))
    return fps.truncate(f, order)


def div_poch(
    f: LaurentSeries,
    a: Monomial,
    n: int,
    base: BaseLike,
    order: int,
) -> LaurentSeries:
    """f / (a; q^r)_n truncated at order; n may be negative (reciprocal
    extension: dividing is then an exact multiplication)."""
    r = _r(base)
    if n >= 0:
        for j in range(n):
            f = fps.div_binomial(f, a.coeff, a.exp + r * j, order)
        return f
    k = -n
    g = poch_finite(a.shifted(-r * k), k, base)
    if g.is_zero:
        raise PochhammerPole(f"({a!r}; q^{r})_{n} has an identically zero factor")
    return fps.truncate(fps.mul(f, g), order)


def mul_poch(f: LaurentSeries, a: Monomial, n: int, base: BaseLike) -> LaurentSeries:
    """f * (a; q^r)_n for n >= 0 (exact when f is exact)."""
    r = _r(base)
    for j in range(n):
        f = fps.mul_binomial(f, a.coeff, a.exp + r * j)
    return f
