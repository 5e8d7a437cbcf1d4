"""Dual-path verification of a family of binomial-sum and integral identities.

Every checker here builds both sides of one identity by genuinely different
routes: term-by-term summation on one side, polynomial algebra plus exact
integration on the other.  The routes share nothing beyond the binomial and
rational primitives, so exact agreement is strong evidence that neither
path is wrong.  All results are exact; there is no tolerance anywhere.

The cast of identities:

* the Comtet pair: a partial binomial sum written as a scaled definite
  integral, and a negative-binomial-shaped sum equal to a binomial-shaped
  sum (with its reindexed form and the f/g proof families);
* their corollaries specialised to the (3n, 2n) exponent pattern, whose
  scaled-integral and polynomial forms appear below as corollary1/2;
* the Alzer-Prodinger polynomial families A, B, C, D with the shift
  relations A_n(x+1) = B_n(x) and C_n(x+1) = D_n(x);
* the four-way Ruehr chain A_n(3) = B_n(2) = D_n(-4) = C_n(-3);
* the Kimura-Ruehr moment equality for the kernel 3x^2 - 2x^3.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Literal, Union

from .exact_math import (
    InternalInconsistencyError,
    Polynomial,
    binomial,
    linear_power,
    poly_add,
    poly_definite_integral,
    poly_eval,
    poly_mul,
    poly_normalize,
    poly_pow,
    poly_scale,
    poly_shift,
)


class SumFamily(Enum):
    """Selector for the four Alzer-Prodinger coefficient families."""

    A = "A"
    B = "B"
    C = "C"
    D = "D"


Side = Union[Fraction, Polynomial]


@dataclass(frozen=True)
class SidePair:
    """Both sides of one identity instance plus the exact-equality verdict."""

    lhs: Side
    rhs: Side
    equal: bool


def compare_sides(lhs: Side, rhs: Side) -> SidePair:
    """Pair two exactly computed sides; equality is exact, never approximate."""
    return SidePair(lhs=lhs, rhs=rhs, equal=(lhs == rhs))


def _one_minus_x_powers(top: int) -> list[Polynomial]:
    """[(1-x)^0, (1-x)^1, ..., (1-x)^top] as exact polynomials."""
    pows = [poly_normalize([1])]
    base = poly_normalize([1, -1])
    for _ in range(top):
        pows.append(poly_mul(pows[-1], base))
    return pows


def family_polynomial(fam: SumFamily, n: int) -> Polynomial:
    """Coefficient polynomial of one of the four families.

    A_n(x) = sum_{0<=j<=n}  C(3n-j, 2n)   x^j   (degree n)
    B_n(x) = sum_{0<=j<=n}  C(3n+1, n-j)  x^j   (degree n)
    C_n(x) = sum_{0<=j<=2n} C(3n-j, n)    x^j   (degree 2n)
    D_n(x) = sum_{0<=j<=2n} C(3n+1, n+1+j) x^j  (degree 2n)
    """
    if n < 0:
        raise ValueError(f"family_polynomial requires n >= 0, got {n}")
    if fam is SumFamily.A:
        coeffs = [binomial(3 * n - j, 2 * n) for j in range(n + 1)]
    elif fam is SumFamily.B:
        coeffs = [binomial(3 * n + 1, n - j) for j in range(n + 1)]
    elif fam is SumFamily.C:
        coeffs = [binomial(3 * n - j, n) for j in range(2 * n + 1)]
    elif fam is SumFamily.D:
        coeffs = [binomial(3 * n + 1, n + 1 + j) for j in range(2 * n + 1)]
    else:
        raise ValueError(f"unknown family {fam!r}")
    return poly_normalize(coeffs)


def ruehr_sums_direct(n: int) -> tuple[int, int, int, int]:
    """The four chain sums by direct big-integer summation.

    Returns (A_n(3), B_n(2), D_n(-4), C_n(-3)) where each entry is the
    corresponding weighted binomial sum, evaluated term by term with a
    running power so no polynomial machinery is involved.
    """
    if n < 0:
        raise ValueError(f"ruehr_sums_direct requires n >= 0, got {n}")
    a3 = 0
    pw = 1
    for j in range(n + 1):
        a3 += pw * binomial(3 * n - j, 2 * n)
        pw *= 3
    b2 = 0
    pw = 1
    for j in range(n + 1):
        b2 += pw * binomial(3 * n + 1, n - j)
        pw *= 2
    d4 = 0
    pw = 1
    for j in range(2 * n + 1):
        d4 += pw * binomial(3 * n + 1, n + 1 + j)
        pw *= -4
    c3 = 0
    pw = 1
    for j in range(2 * n + 1):
        c3 += pw * binomial(3 * n - j, n)
        pw *= -3
    return (a3, b2, d4, c3)


def ruehr_polynomial_values(n: int) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    """The four chain values via family_polynomial + Horner evaluation."""
    return (
        poly_eval(family_polynomial(SumFamily.A, n), 3),
        poly_eval(family_polynomial(SumFamily.B, n), 2),
        poly_eval(family_polynomial(SumFamily.D, n), -4),
        poly_eval(family_polynomial(SumFamily.C, n), -3),
    )


def ruehr_chain(n: int) -> tuple[int, int, int, int]:
    """(A_n(3), B_n(2), D_n(-4), C_n(-3)), each computed by both paths.

    Raises InternalInconsistencyError if the direct-summation path and the
    polynomial-evaluation path disagree on any single component; that would
    be an implementation bug, not a failure of the chain identity.  Whether
    the four returned components are equal to each other is the caller's
    check.
    """
    direct = ruehr_sums_direct(n)
    via_poly = ruehr_polynomial_values(n)
    for label, d, e in zip(("A(3)", "B(2)", "D(-4)", "C(-3)"), direct, via_poly):
        if d != e:
            raise InternalInconsistencyError(
                f"ruehr_chain n={n}: summation and polynomial paths disagree "
                f"on {label}: {d} vs {e}"
            )
    return direct


def comtet1_sides(n: int, k: int, a, b) -> SidePair:
    """Partial binomial sum versus its integral representation.

    lhs = sum_{0<=i<=k} C(n,i) a^(n-i) b^i
    rhs = (n-k) C(n,k) * integral_b^(a+b) t^k (a+b-t)^(n-k-1) dt

    Requires 0 <= k < n (k >= n would put a negative exponent in the
    integrand).  Both sides are exact rationals for any rational a, b.
    """
    if n < 0:
        raise ValueError(f"comtet1_sides requires n >= 0, got n={n}")
    if not 0 <= k < n:
        raise ValueError(f"comtet1_sides requires 0 <= k < n, got k={k}, n={n}")
    a = Fraction(a)
    b = Fraction(b)

    a_pows = [Fraction(1)]
    for _ in range(n):
        a_pows.append(a_pows[-1] * a)
    b_pows = [Fraction(1)]
    for _ in range(k):
        b_pows.append(b_pows[-1] * b)
    lhs = Fraction(0)
    for i in range(k + 1):
        lhs += binomial(n, i) * a_pows[n - i] * b_pows[i]

    integrand = poly_shift(linear_power(a + b, -1, n - k - 1), k)
    rhs = (n - k) * binomial(n, k) * poly_definite_integral(integrand, b, a + b)
    return compare_sides(lhs, rhs)


def comtet2_sides(m: int, n: int) -> SidePair:
    """Negative-binomial-shaped sum versus binomial-shaped sum, in x.

    lhs = sum_{m<=k<=n} C(k-1, m-1) x^m (1-x)^(k-m)
    rhs = sum_{m<=k<=n} C(n, k)     x^k (1-x)^(n-k)

    Both sides are built as exact polynomials and compared coefficient-wise.
    """
    if not 1 <= m <= n:
        raise ValueError(f"comtet2_sides requires 1 <= m <= n, got m={m}, n={n}")
    pows = _one_minus_x_powers(n - m)
    lhs: Polynomial = []
    rhs: Polynomial = []
    for k in range(m, n + 1):
        lhs = poly_add(lhs, poly_shift(poly_scale(pows[k - m], binomial(k - 1, m - 1)), m))
        rhs = poly_add(rhs, poly_shift(poly_scale(pows[n - k], binomial(n, k)), k))
    return compare_sides(lhs, rhs)


def comtet3_sides(m: int, big_n: int) -> SidePair:
    """Reindexed form of comtet2 as an identity between the f and g families.

    lhs = sum_{0<=j<=N} C(m-1+j, m-1) (1-x)^j
    rhs = sum_{0<=j<=N} C(N+m, j) x^(N-j) (1-x)^j
    """
    return compare_sides(proof_helper("f", m, big_n), proof_helper("g", m, big_n))


def proof_helper(kind: Literal["f", "g"], m: int, big_n: int) -> Polynomial:
    """The f/g polynomial families whose shared recurrence proves comtet3.

    f(m,N) = sum_{0<=j<=N} C(m-1+j, m-1) (1-x)^j
    g(m,N) = sum_{0<=j<=N} C(N+m, j) x^(N-j) (1-x)^j

    Both satisfy a Pascal-rule recurrence in m (checked in the tests), and
    f(1,N) = g(1,N) for every N, which together give f = g everywhere.
    """
    if kind not in ("f", "g"):
        raise ValueError(f"proof_helper kind must be 'f' or 'g', got {kind!r}")
    if m < 1:
        raise ValueError(f"proof_helper requires m >= 1, got {m}")
    if big_n < 0:
        raise ValueError(f"proof_helper requires N >= 0, got {big_n}")
    pows = _one_minus_x_powers(big_n)
    acc: Polynomial = []
    for j in range(big_n + 1):
        if kind == "f":
            term = poly_scale(pows[j], binomial(m - 1 + j, m - 1))
        else:
            term = poly_shift(poly_scale(pows[j], binomial(big_n + m, j)), big_n - j)
        acc = poly_add(acc, term)
    return acc


def corollary1_sides(n: int, variant: Literal["pos", "neg"]) -> SidePair:
    """The weight-2 and weight-(-4) chain sums as scaled integrals.

    pos: sum_{0<=j<=n}  2^j   C(3n+1, n-j)
         = (n+1) C(3n+1, 2n) * integral_0^1 (3-2x)^n x^(2n) dx
    neg: sum_{0<=j<=2n} (-4)^j C(3n+1, n+1+j)
         = (n+1)/2 C(3n+1, 2n) * integral_(-1/2)^(3/2) (3-2x)^n x^(2n) dx
    """
    if n < 0:
        raise ValueError(f"corollary1_sides requires n >= 0, got {n}")
    integrand = poly_shift(linear_power(3, -2, n), 2 * n)
    scale = (n + 1) * binomial(3 * n + 1, 2 * n)
    if variant == "pos":
        total = 0
        pw = 1
        for j in range(n + 1):
            total += pw * binomial(3 * n + 1, n - j)
            pw *= 2
        rhs = scale * poly_definite_integral(integrand, 0, 1)
    elif variant == "neg":
        total = 0
        pw = 1
        for j in range(2 * n + 1):
            total += pw * binomial(3 * n + 1, n + 1 + j)
            pw *= -4
        rhs = Fraction(scale, 2) * poly_definite_integral(
            integrand, Fraction(-1, 2), Fraction(3, 2)
        )
    else:
        raise ValueError(f"corollary1_sides variant must be 'pos' or 'neg', got {variant!r}")
    return compare_sides(Fraction(total), rhs)


def corollary2_sides(n: int, variant: Literal["first", "second"]) -> SidePair:
    """Polynomial forms of the chain equalities, compared coefficient-wise.

    first:  sum_{0<=j<=n}  C(3n-j, 2n) (1-x)^(n-j)
            = sum_{0<=j<=n}  C(3n+1, n-j)   x^j (1-x)^(n-j)
    second: sum_{0<=j<=2n} C(3n-j, n)  (1-x)^(2n-j)
            = sum_{0<=k<=2n} C(3n+1, n+1+k) x^k (1-x)^(2n-k)

    Polynomial equality subsumes every numeric specialization; the spot
    values at x = 2/3 and x = 4/3 that recover the chain are kept as
    separate checks in the harness.
    """
    if n < 0:
        raise ValueError(f"corollary2_sides requires n >= 0, got {n}")
    if variant == "first":
        top = n
        pows = _one_minus_x_powers(top)
        lhs: Polynomial = []
        rhs: Polynomial = []
        for j in range(top + 1):
            lhs = poly_add(lhs, poly_scale(pows[n - j], binomial(3 * n - j, 2 * n)))
            rhs = poly_add(
                rhs, poly_shift(poly_scale(pows[n - j], binomial(3 * n + 1, n - j)), j)
            )
    elif variant == "second":
        top = 2 * n
        pows = _one_minus_x_powers(top)
        lhs = []
        rhs = []
        for j in range(top + 1):
            lhs = poly_add(lhs, poly_scale(pows[2 * n - j], binomial(3 * n - j, n)))
            rhs = poly_add(
                rhs,
                poly_shift(poly_scale(pows[2 * n - j], binomial(3 * n + 1, n + 1 + j)), j),
            )
    else:
        raise ValueError(
            f"corollary2_sides variant must be 'first' or 'second', got {variant!r}"
        )
    return compare_sides(lhs, rhs)


def kimura_ruehr_moments(n: int) -> SidePair:
    """Moment equality of the kernel 3x^2 - 2x^3 at exponent n.

    lhs = integral_(-1/2)^(3/2) (3x^2 - 2x^3)^n dx
    rhs = 2 * integral_0^1      (3x^2 - 2x^3)^n dx
    """
    if n < 0:
        raise ValueError(f"kimura_ruehr_moments requires n >= 0, got {n}")
    kernel_power = poly_pow(poly_normalize([0, 0, 3, -2]), n)
    lhs = poly_definite_integral(kernel_power, Fraction(-1, 2), Fraction(3, 2))
    rhs = 2 * poly_definite_integral(kernel_power, 0, 1)
    return compare_sides(lhs, rhs)
