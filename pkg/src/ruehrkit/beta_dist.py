"""Exact beta integrals and the distribution identities they encode.

Parameters are positive integers throughout, which keeps every quantity an
exact rational: the complete beta function has a factorial closed form and
the incomplete beta integral has a polynomial integrand.  The binomial
survival function and the negative binomial CDF are both regularized beta
values, and those identities are what the two *_sides checkers verify.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .exact_math import (
    Polynomial,
    binomial,
    linear_power,
    poly_definite_integral,
    poly_shift,
)
from .identities import SidePair, compare_sides


def _require_positive_params(x: int, y: int) -> None:
    if x < 1 or y < 1:
        raise ValueError(f"beta parameters must be integers >= 1, got x={x}, y={y}")


def _beta_integrand(x: int, y: int) -> Polynomial:
    """t^(x-1) (1-t)^(y-1) as an exact polynomial in t."""
    return poly_shift(linear_power(1, -1, y - 1), x - 1)


def beta_exact(x: int, y: int) -> Fraction:
    """B(x, y) = (x-1)! (y-1)! / (x+y-1)! for integer x, y >= 1."""
    _require_positive_params(x, y)
    return Fraction(math.factorial(x - 1) * math.factorial(y - 1),
                    math.factorial(x + y - 1))


def beta_via_integral(x: int, y: int) -> Fraction:
    """Independent cross-check path for beta_exact: integrate the density.

    B(x, y) = integral_0^1 t^(x-1) (1-t)^(y-1) dt.  A widely reprinted
    "closed form" (x+y)/x * C(x+y, x)^-1 does NOT equal this (try x=2,
    y=3: 1/4 versus 1/12); the factorial form in beta_exact does, and the
    test suite pins the discrepancy.
    """
    _require_positive_params(x, y)
    return poly_definite_integral(_beta_integrand(x, y), 0, 1)


def incomplete_beta(p, x: int, y: int) -> Fraction:
    """B_p(x, y) = integral_0^p t^(x-1) (1-t)^(y-1) dt, exact."""
    _require_positive_params(x, y)
    p = Fraction(p)
    if not 0 <= p <= 1:
        raise ValueError(f"incomplete_beta requires p in [0, 1], got {p}")
    return poly_definite_integral(_beta_integrand(x, y), 0, p)


def regularized_beta(p, x: int, y: int) -> Fraction:
    """I_p(x, y) = B_p(x, y) / B(x, y), exact."""
    return incomplete_beta(p, x, y) / beta_exact(x, y)


def binom_tail_sides(n: int, a: int, p) -> SidePair:
    """Binomial upper tail versus its regularized-beta closed form.

    lhs = sum_{a<=s<=n} C(n, s) p^s (1-p)^(n-s)
    rhs = I_p(a, n-a+1)
    """
    if n < 1:
        raise ValueError(f"binom_tail_sides requires n >= 1, got {n}")
    if not 1 <= a <= n:
        raise ValueError(f"binom_tail_sides requires 1 <= a <= n, got a={a}, n={n}")
    p = Fraction(p)
    if not 0 <= p <= 1:
        raise ValueError(f"binom_tail_sides requires p in [0, 1], got {p}")
    q = 1 - p
    p_pows = [Fraction(1)]
    q_pows = [Fraction(1)]
    for _ in range(n):
        p_pows.append(p_pows[-1] * p)
        q_pows.append(q_pows[-1] * q)
    lhs = Fraction(0)
    for s in range(a, n + 1):
        lhs += binomial(n, s) * p_pows[s] * q_pows[n - s]
    rhs = regularized_beta(p, a, n - a + 1)
    return compare_sides(lhs, rhs)


def negbinom_cdf_sides(r: int, k: int, p) -> SidePair:
    """Negative binomial CDF versus its regularized-beta closed form.

    lhs = sum_{0<=s<=k} C(r+s-1, s) p^r (1-p)^s
    rhs = I_p(r, k+1)

    This is the finite identity that holds exactly; the matching tail
    statement only holds with the failure count summed to infinity, which
    negbinom_tail_partial approaches monotonically.
    """
    if r < 1:
        raise ValueError(f"negbinom_cdf_sides requires r >= 1, got {r}")
    if k < 0:
        raise ValueError(f"negbinom_cdf_sides requires k >= 0, got {k}")
    p = Fraction(p)
    if not 0 < p <= 1:
        raise ValueError(f"negbinom_cdf_sides requires p in (0, 1], got {p}")
    q = 1 - p
    p_r = p ** r
    lhs = Fraction(0)
    q_pow = Fraction(1)
    for s in range(k + 1):
        lhs += binomial(r + s - 1, s) * p_r * q_pow
        q_pow *= q
    rhs = regularized_beta(p, r, k + 1)
    return compare_sides(lhs, rhs)


def negbinom_tail_partial(r: int, a: int, p, m_max: int) -> Fraction:
    """Partial negative binomial survivor mass sum_{a<=s<=m_max}.

    Each term is C(r+s-1, s) p^r (1-p)^s.  The partial sums are
    nondecreasing in m_max and converge upward to the survivor value
    I_(1-p)(a, r) = 1 - I_p(r, a); the gap shrinks geometrically.
    """
    if r < 1 or a < 1:
        raise ValueError(f"negbinom_tail_partial requires r, a >= 1, got r={r}, a={a}")
    if m_max < a:
        raise ValueError(f"negbinom_tail_partial requires m_max >= a, got m_max={m_max}, a={a}")
    p = Fraction(p)
    if not 0 < p < 1:
        raise ValueError(f"negbinom_tail_partial requires p in (0, 1), got {p}")
    q = 1 - p
    p_r = p ** r
    total = Fraction(0)
    q_pow = q ** a
    for s in range(a, m_max + 1):
        total += binomial(r + s - 1, s) * p_r * q_pow
        q_pow *= q
    return total
