"""Generalized divide-or-affine orbit maps and their large-deviation tail sums.

The map divides by d on multiples of d and otherwise sends ell to
(mult*ell - r)/d, where r is the unique representative of mult*ell in a
complete residue system modulo d.  The classical 3x+1 map is mult=3, d=2
with residues {0, -1}.  Orbits are computed with cycle detection.

The density argument for these maps needs an exact large-deviation bound:
the normalized sum of C(k, i) (d-1)^i over indices i deviating from the
mean (d-1)k/d by more than eps*k.  tail_sum computes it exactly,
eta_profile witnesses its geometric decay, and partial_sum_sides checks
the partial sums against the same integral representation verified in
identities.comtet1_sides.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Optional, Sequence

from .exact_math import (
    InternalInconsistencyError,
    binomial,
    linear_power,
    poly_definite_integral,
    poly_shift,
    rational_to_float,
)
from .identities import SidePair, compare_sides


@dataclass(frozen=True)
class GenCollatzConfig:
    """Parameters (mult, div, residues) of a generalized divide-or-affine map."""

    mult: int
    div: int
    residues: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "residues", tuple(self.residues))
        if self.mult < 1:
            raise ValueError(f"mult must be >= 1, got {self.mult}")
        if self.div < 2:
            raise ValueError(f"div must be >= 2, got {self.div}")
        if math.gcd(self.div, self.mult) != 1:
            raise ValueError(f"mult={self.mult} and div={self.div} must be coprime")
        if len(self.residues) != self.div:
            raise ValueError(
                f"need exactly div={self.div} residues, got {len(self.residues)}"
            )
        if len({r % self.div for r in self.residues}) != self.div:
            raise ValueError(
                f"residues {self.residues} are not pairwise distinct modulo {self.div}"
            )


CLASSICAL = GenCollatzConfig(mult=3, div=2, residues=(0, -1))


@dataclass(frozen=True)
class OrbitResult:
    """Recorded orbit prefix, how iteration stopped, and the cycle if found."""

    steps: list[int]
    terminated: Literal["cycle-found", "max-steps-reached"]
    cycle: Optional[list[int]]


@dataclass(frozen=True)
class TailSumQuery:
    """Inputs of the large-deviation tail sum: length k, base d, margin eps."""

    k: int
    d: int
    eps: Fraction

    def __post_init__(self):
        object.__setattr__(self, "eps", Fraction(self.eps))
        if self.k < 1:
            raise ValueError(f"k must be >= 1, got {self.k}")
        if self.d < 2:
            raise ValueError(f"d must be >= 2, got {self.d}")
        if not 0 < self.eps < 1:
            raise ValueError(f"eps must lie in (0, 1), got {self.eps}")


def g_step(ell: int, cfg: GenCollatzConfig) -> int:
    """One application of the map: ell/d on multiples of d, else (mult*ell - r)/d."""
    if ell < 1:
        raise ValueError(f"g_step requires ell >= 1, got {ell}")
    if ell % cfg.div == 0:
        return ell // cfg.div
    scaled = cfg.mult * ell
    for r in cfg.residues:
        if (scaled - r) % cfg.div == 0:
            numerator = scaled - r
            if numerator % cfg.div != 0:
                raise InternalInconsistencyError(
                    f"division not exact for ell={ell} with {cfg}"
                )
            return numerator // cfg.div
    raise InternalInconsistencyError(
        f"no residue matches {scaled} modulo {cfg.div}; residue system invalid: {cfg}"
    )


def orbit(ell: int, cfg: GenCollatzConfig, max_steps: int) -> OrbitResult:
    """Iterate g_step from ell until a value repeats or max_steps applications.

    The recorded steps include the starting value and, when a cycle is
    found, the first repeated value at the end; the cycle field is the
    segment from that value's first occurrence up to the repeat.
    """
    if max_steps < 1:
        raise ValueError(f"orbit requires max_steps >= 1, got {max_steps}")
    steps = [ell]
    first_seen = {ell: 0}
    for _ in range(max_steps):
        value = g_step(steps[-1], cfg)
        steps.append(value)
        if value in first_seen:
            cycle = steps[first_seen[value]:-1]
            return OrbitResult(steps=steps, terminated="cycle-found", cycle=cycle)
        first_seen[value] = len(steps) - 1
    return OrbitResult(steps=steps, terminated="max-steps-reached", cycle=None)


def tail_sum(query: TailSumQuery) -> Fraction:
    """Exact large-deviation tail mass.

    (1/d^k) * sum of C(k, i) (d-1)^i over 0 <= i <= k with
    |i - (d-1)k/d| > eps*k.  The membership test is exact rational
    comparison with strict inequality, so boundary indices are excluded.
    """
    k, d, eps = query.k, query.d, query.eps
    center = Fraction((d - 1) * k, d)
    margin = eps * k
    total = 0
    pw = 1
    for i in range(k + 1):
        if abs(i - center) > margin:
            total += binomial(k, i) * pw
        pw *= d - 1
    return Fraction(total, d ** k)


def eta_profile(d: int, eps, k_values: Sequence[int]) -> list[tuple[int, float]]:
    """(k, tail_sum^(1/k)) for each requested k, as floats.

    The exact tail sum is converted to float through leading-64-bit scaling
    (relative error below 1e-12 regardless of magnitude) before taking the
    k-th root.  A decay rate below 1 over the profile witnesses the
    geometric bound on the tested range; max over the pairs gives it.
    """
    eps = Fraction(eps)
    out = []
    for k in k_values:
        mass = tail_sum(TailSumQuery(k=k, d=d, eps=eps))
        root = 0.0 if mass == 0 else rational_to_float(mass) ** (1.0 / k)
        out.append((k, root))
    return out


def partial_sum_sides(k: int, m: int, d: int) -> SidePair:
    """Leading binomial partial sum versus its integral representation.

    lhs = sum_{0<=i<=m} C(k, i) (d-1)^i
    rhs = (k-m) C(k, m) * integral_(d-1)^d t^m (d-t)^(k-m-1) dt

    This is the a=1, b=d-1 instance of identities.comtet1_sides and must
    agree with it exactly; requires 0 <= m < k.
    """
    if d < 2:
        raise ValueError(f"partial_sum_sides requires d >= 2, got {d}")
    if not 0 <= m < k:
        raise ValueError(f"partial_sum_sides requires 0 <= m < k, got m={m}, k={k}")
    total = 0
    pw = 1
    for i in range(m + 1):
        total += binomial(k, i) * pw
        pw *= d - 1
    integrand = poly_shift(linear_power(d, -1, k - m - 1), m)
    rhs = (k - m) * binomial(k, m) * poly_definite_integral(integrand, d - 1, d)
    return compare_sides(Fraction(total), rhs)
