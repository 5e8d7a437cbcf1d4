"""Exact scalar arithmetic and dense univariate polynomials over the rationals.

Scalars are arbitrary precision: plain ``int`` for integers and
``fractions.Fraction`` for rationals (eagerly normalized, denominator > 0,
zero is 0/1).  A polynomial is a plain ``list`` of Fraction coefficients in
ascending degree order with no trailing zero coefficient.  The zero
polynomial is the empty list; its degree is -1 by convention.

Everything in this module is a pure function over values that are never
mutated after construction, so concurrent callers need no locking.
"""

from __future__ import annotations

import json
import math
from fractions import Fraction

Rational = Fraction
Polynomial = list[Fraction]


class InternalInconsistencyError(RuntimeError):
    """Two redundant computation paths disagreed: an implementation bug."""


def binomial(n: int, k: int) -> int:
    """Binomial coefficient C(n, k), with C(n, k) = 0 for k < 0 or k > n.

    The out-of-range convention keeps reindexed sums honest: a bad index
    contributes nothing instead of crashing, so an off-by-one surfaces as a
    value mismatch rather than an exception.  Negative n is rejected
    because no sum here ever needs it.
    """
    if n < 0:
        raise ValueError(f"binomial requires n >= 0, got n={n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def poly_normalize(coeffs) -> Polynomial:
    """Coerce coefficients to Fraction and strip trailing zeros."""
    out = [Fraction(c) for c in coeffs]
    while out and not out[-1]:
        out.pop()
    return out


def poly_degree(p: Polynomial) -> int:
    return len(p) - 1


def poly_add(a: Polynomial, b: Polynomial) -> Polynomial:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = out[i] + c
    return poly_normalize(out)


def poly_neg(p: Polynomial) -> Polynomial:
    return [-c for c in p]


def poly_sub(a: Polynomial, b: Polynomial) -> Polynomial:
    return poly_add(a, poly_neg(b))


def poly_scale(p: Polynomial, c) -> Polynomial:
    c = Fraction(c)
    if not c:
        return []
    # scaling by a nonzero constant cannot create a trailing zero
    return [c * x for x in p]


def poly_mul(a: Polynomial, b: Polynomial) -> Polynomial:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if not ca:
            continue
        for j, cb in enumerate(b):
            if cb:
                out[i + j] += ca * cb
    return poly_normalize(out)


def poly_pow(p: Polynomial, exponent: int) -> Polynomial:
    """p**exponent by iterated multiplication; exponent 0 gives [1]."""
    if exponent < 0:
        raise ValueError(f"poly_pow requires exponent >= 0, got {exponent}")
    out = [Fraction(1)]
    for _ in range(exponent):
        out = poly_mul(out, p)
    return out


def linear_power(c0, c1, exponent: int) -> Polynomial:
    """Expansion of (c0 + c1*x)**exponent by the binomial theorem.

    Equivalent to poly_pow([c0, c1], exponent) but O(exponent) products,
    which matters when it sits inside a doubly indexed verification sweep.
    """
    if exponent < 0:
        raise ValueError(f"linear_power requires exponent >= 0, got {exponent}")
    c0 = Fraction(c0)
    c1 = Fraction(c1)
    pows0 = [Fraction(1)]
    pows1 = [Fraction(1)]
    for _ in range(exponent):
        pows0.append(pows0[-1] * c0)
        pows1.append(pows1[-1] * c1)
    coeffs = [binomial(exponent, i) * pows0[exponent - i] * pows1[i]
              for i in range(exponent + 1)]
    return poly_normalize(coeffs)


def poly_shift(p: Polynomial, k: int) -> Polynomial:
    """Multiply by x**k (shift coefficients up by k places)."""
    if k < 0:
        raise ValueError(f"poly_shift requires k >= 0, got {k}")
    if not p:
        return []
    return [Fraction(0)] * k + list(p)


def poly_compose(p: Polynomial, q: Polynomial) -> Polynomial:
    """p(q(x)) with exact coefficients, by Horner's scheme over polynomials."""
    out: Polynomial = []
    for c in reversed(p):
        out = poly_mul(out, q)
        if c:
            out = poly_add(out, [c])
    return out


def poly_eval(p: Polynomial, x) -> Fraction:
    """Exact Horner evaluation; the zero polynomial evaluates to 0."""
    x = Fraction(x)
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def poly_definite_integral(p: Polynomial, lo, hi) -> Fraction:
    """Exact definite integral of p over [lo, hi].

    Term-by-term antiderivative c_i x^i -> c_i x^(i+1) / (i+1), evaluated
    at hi minus lo.  Reversed bounds (lo > hi) simply flip the sign.
    """
    anti = [Fraction(0)] + [c / (i + 1) for i, c in enumerate(p)]
    return poly_eval(anti, hi) - poly_eval(anti, lo)


def format_rational(q) -> str:
    """Serialize as "num/den", or just "num" when the denominator is 1."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text)


def format_polynomial(p: Polynomial) -> str:
    """Serialize as a JSON array of rational strings, ascending degree."""
    return json.dumps([format_rational(c) for c in p])


def parse_polynomial(text: str) -> Polynomial:
    data = json.loads(text)
    if not isinstance(data, list):
        raise ValueError(f"polynomial serialization must be a JSON array, got {text!r}")
    return poly_normalize(Fraction(item) for item in data)


def rational_to_float(q: Fraction) -> float:
    """Convert to float with relative error below 1e-12.

    Works for numerators and denominators far beyond the float range by
    keeping only the leading 64 bits of each and re-applying the dropped
    power of two with ldexp.  Truncation contributes < 2**-63 relative
    error per operand and the 64-bit division is correctly rounded, so the
    total error is around 1e-16.
    """
    num, den = q.numerator, q.denominator
    if num == 0:
        return 0.0
    sign = -1.0 if num < 0 else 1.0
    num = abs(num)
    drop_num = max(num.bit_length() - 64, 0)
    drop_den = max(den.bit_length() - 64, 0)
    return sign * math.ldexp((num >> drop_num) / (den >> drop_den), drop_num - drop_den)
