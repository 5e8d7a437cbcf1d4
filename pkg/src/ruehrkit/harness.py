"""Deterministic check harness: seeded fuzzing, reports, suites, renderers.

A suite is expanded into check instances up front, in a fixed order, with
every fuzz draw taken from one linear-congruential source during that
expansion.  Execution may then fan out to a thread pool; results are
sorted back by (check_name, generation index), so the same seed and flags
always produce byte-identical output apart from the elapsed_ms field.

Report records carry exactly the fields check_name, params, lhs, rhs,
equal, elapsed_ms; rationals serialize as "num/den" and polynomials (or
value tuples) as JSON arrays of rational strings.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from . import beta_dist, collatz_bound, identities
from .exact_math import (format_rational, poly_add, poly_compose, poly_eval,
                         poly_mul, poly_sub)
from .identities import SumFamily

MASK64 = (1 << 64) - 1
LCG_MULTIPLIER = 6364136223846793005
LCG_INCREMENT = 1442695040888963407


@dataclass
class FuzzSource:
    """64-bit linear congruential generator with pinned constants.

    state' = (6364136223846793005 * state + 1442695040888963407) mod 2^64.
    The constants are fixed so identical seeds fuzz identical parameter
    streams everywhere the harness runs.
    """

    state: int

    def __post_init__(self):
        self.state &= MASK64

    def next_word(self) -> int:
        self.state = (LCG_MULTIPLIER * self.state + LCG_INCREMENT) & MASK64
        return self.state


def fuzz_int(src: FuzzSource, lo: int, hi: int) -> int:
    """Uniform-ish integer in [lo, hi]; consumes one generator step."""
    if hi < lo:
        raise ValueError(f"fuzz_int requires lo <= hi, got [{lo}, {hi}]")
    return lo + src.next_word() % (hi - lo + 1)


def fuzz_rational(src: FuzzSource, num_bound: int, den_bound: int) -> Fraction:
    """Nonzero rational with |num| <= num_bound, den <= den_bound, normalized.

    The numerator is drawn from [-num_bound, num_bound] without 0 and the
    denominator from [1, den_bound]; consumes exactly two generator steps.
    """
    if num_bound < 1 or den_bound < 1:
        raise ValueError("fuzz_rational bounds must be >= 1")
    folded = src.next_word() % (2 * num_bound) - num_bound
    num = folded if folded < 0 else folded + 1
    den = src.next_word() % den_bound + 1
    return Fraction(num, den)


def fuzz_probability(src: FuzzSource, den_bound: int, *,
                     lo_open: bool = False, hi_open: bool = False) -> Fraction:
    """Rational probability with denominator <= den_bound; two generator steps.

    Endpoints are included unless lo_open / hi_open exclude them.
    """
    if den_bound < 2 and lo_open and hi_open:
        raise ValueError("open-open interval needs den_bound >= 2")
    if lo_open and hi_open:
        den = fuzz_int(src, 2, den_bound)
        num = fuzz_int(src, 1, den - 1)
    elif lo_open:
        den = fuzz_int(src, 1, den_bound)
        num = fuzz_int(src, 1, den)
    elif hi_open:
        den = fuzz_int(src, 1, den_bound)
        num = fuzz_int(src, 0, den - 1)
    else:
        den = fuzz_int(src, 1, den_bound)
        num = fuzz_int(src, 0, den)
    return Fraction(num, den)


@dataclass
class CheckReport:
    """One verified identity instance in serialized form."""

    check_name: str
    params: dict
    lhs: str
    rhs: str
    equal: bool
    elapsed_ms: int


@dataclass
class CheckInstance:
    """A named, parametrized check waiting to run.

    run() returns (lhs, rhs, equal) with both sides already serialized.
    """

    check_name: str
    params: dict
    run: Callable[[], tuple[str, str, bool]] = field(repr=False)


def serialize_value(value) -> str:
    """Rational -> "num/den"; list/tuple of rationals -> JSON array of them."""
    if isinstance(value, (list, tuple)):
        return json.dumps([format_rational(item) for item in value])
    return format_rational(value)


def _sides_thunk(fn, *args) -> Callable[[], tuple[str, str, bool]]:
    def run():
        pair = fn(*args)
        return serialize_value(pair.lhs), serialize_value(pair.rhs), pair.equal
    return run


SUITE_ORDER = ("ruehr", "moments", "comtet", "corollaries", "polynomials",
               "beta", "negbinom", "tailsum", "orbit")

_DEFAULT_MAX_N = {"ruehr": 20, "moments": 20, "comtet": 30, "corollaries": 15,
                  "polynomials": 10, "beta": 20, "negbinom": 20, "orbit": 1000,
                  "tailsum": 40}
_DEFAULT_TRIALS = {"comtet": 25, "beta": 20, "negbinom": 20, "tailsum": 20}


def _suite_ruehr(src: FuzzSource, max_n: int, trials: int) -> list[CheckInstance]:
    out = []
    for n in range(max_n + 1):
        def run(n=n):
            direct = identities.ruehr_sums_direct(n)
            via_poly = identities.ruehr_polynomial_values(n)
            equal = all(v == direct[0] for v in direct) and \
                all(d == e for d, e in zip(direct, via_poly))
            return serialize_value(direct), serialize_value(via_poly), equal
        out.append(CheckInstance("ruehr_chain", {"n": str(n)}, run))
    return out


def _suite_moments(src: FuzzSource, max_n: int, trials: int) -> list[CheckInstance]:
    return [
        CheckInstance("kimura_ruehr_moments", {"n": str(n)},
                      _sides_thunk(identities.kimura_ruehr_moments, n))
        for n in range(max_n + 1)
    ]


def _suite_comtet(src: FuzzSource, max_n: int, trials: int) -> list[CheckInstance]:
    out = []
    top = max(max_n, 1)
    for trial in range(trials):
        n = fuzz_int(src, 1, top)
        k = fuzz_int(src, 0, n - 1)
        a = fuzz_rational(src, 9, 9)
        b = fuzz_rational(src, 9, 9)
        params = {"trial": str(trial), "n": str(n), "k": str(k),
                  "a": format_rational(a), "b": format_rational(b)}
        out.append(CheckInstance("comtet1", params,
                                 _sides_thunk(identities.comtet1_sides, n, k, a, b)))
    return out


def _suite_corollaries(src: FuzzSource, max_n: int, trials: int) -> list[CheckInstance]:
    out = []
    for n in range(max_n + 1):
        for variant in ("pos", "neg"):
            out.append(CheckInstance(
                "corollary1", {"n": str(n), "variant": variant},
                _sides_thunk(identities.corollary1_sides, n, variant)))
        for variant in ("first", "second"):
            out.append(CheckInstance(
                "corollary2", {"n": str(n), "variant": variant},
                _sides_thunk(identities.corollary2_sides, n, variant)))
        # numeric spot checks that recover the chain values from the
        # polynomial identities: x=2/3 scaled by 3^n and x=4/3 by 9^n
        def run_spot_a(n=n):
            poly = identities.corollary2_sides(n, "first").lhs
            lhs = poly_eval(poly, Fraction(2, 3)) * 3 ** n
            rhs = Fraction(identities.ruehr_sums_direct(n)[0])
            return serialize_value(lhs), serialize_value(rhs), lhs == rhs
        out.append(CheckInstance(
            "ruehr_specialization", {"n": str(n), "point": "2/3"}, run_spot_a))

        def run_spot_d(n=n):
            poly = identities.corollary2_sides(n, "second").lhs
            lhs = poly_eval(poly, Fraction(4, 3)) * 9 ** n
            rhs = Fraction(identities.ruehr_sums_direct(n)[2])
            return serialize_value(lhs), serialize_value(rhs), lhs == rhs
        out.append(CheckInstance(
            "ruehr_specialization", {"n": str(n), "point": "4/3"}, run_spot_d))
    return out


def _one_minus_x() -> list:
    return [Fraction(1), Fraction(-1)]


def _suite_polynomials(src: FuzzSource, max_n: int, trials: int) -> list[CheckInstance]:
    out = []
    shift = [Fraction(1), Fraction(1)]
    for n in range(max_n + 1):
        for left, right in ((SumFamily.A, SumFamily.B), (SumFamily.C, SumFamily.D)):
            def run(n=n, left=left, right=right):
                lhs = poly_compose(identities.family_polynomial(left, n), shift)
                rhs = identities.family_polynomial(right, n)
                return serialize_value(lhs), serialize_value(rhs), lhs == rhs
            out.append(CheckInstance(
                "alzer_shift", {"n": str(n), "pair": left.value + right.value}, run))
    for n in range(1, max_n + 1):
        for m in range(1, n + 1):
            out.append(CheckInstance(
                "comtet2", {"m": str(m), "n": str(n)},
                _sides_thunk(identities.comtet2_sides, m, n)))
    for m in range(1, max_n + 1):
        for big_n in range(max_n + 1):
            out.append(CheckInstance(
                "comtet3", {"m": str(m), "N": str(big_n)},
                _sides_thunk(identities.comtet3_sides, m, big_n)))
    for j in range(1, max_n + 1):
        for big_n in range(1, max_n + 1):
            def run_f(j=j, big_n=big_n):
                lhs = identities.proof_helper("f", j + 1, big_n)
                rhs = poly_add(
                    poly_mul(_one_minus_x(), identities.proof_helper("f", j + 1, big_n - 1)),
                    identities.proof_helper("f", j, big_n))
                return serialize_value(lhs), serialize_value(rhs), lhs == rhs
            out.append(CheckInstance(
                "recurrence_f", {"j": str(j), "N": str(big_n)}, run_f))

            def run_g(j=j, big_n=big_n):
                lhs = identities.proof_helper("g", j + 1, big_n)
                rhs = poly_add(
                    identities.proof_helper("g", j, big_n),
                    poly_mul(_one_minus_x(), identities.proof_helper("g", j + 1, big_n - 1)))
                return serialize_value(lhs), serialize_value(rhs), lhs == rhs
            out.append(CheckInstance(
                "recurrence_g", {"j": str(j), "N": str(big_n)}, run_g))
    for big_n in range(max_n + 1):
        def run_base(big_n=big_n):
            lhs = identities.proof_helper("f", 1, big_n)
            rhs = identities.proof_helper("g", 1, big_n)
            return serialize_value(lhs), serialize_value(rhs), lhs == rhs
        out.append(CheckInstance("fg_base", {"N": str(big_n)}, run_base))
    for m in range(1, max(max_n // 2, 1) + 1):
        for big_n in range(1, max(max_n // 2, 1) + 1):
            out.append(CheckInstance(
                "telescoping", {"m": str(m), "N": str(big_n)},
                lambda m=m, big_n=big_n: _telescoping_sides(m, big_n)))
    return out


def _telescoping_sides(m: int, big_n: int) -> tuple[str, str, bool]:
    """Both sides of the telescoping consequence of the f/g recurrences."""
    def f(mm, nn):
        return identities.proof_helper("f", mm, nn)

    def g(mm, nn):
        return identities.proof_helper("g", mm, nn)

    lhs: list = []
    for j in range(1, m + 1):
        lhs = poly_add(lhs, poly_sub(f(j + 1, big_n), f(j, big_n)))
        lhs = poly_sub(lhs, poly_sub(g(j + 1, big_n), g(j, big_n)))
    inner: list = []
    for j in range(1, m + 1):
        inner = poly_add(inner, poly_sub(f(j + 1, big_n - 1), g(j + 1, big_n - 1)))
    rhs = poly_mul(_one_minus_x(), inner)
    return serialize_value(lhs), serialize_value(rhs), lhs == rhs


def _suite_beta(src: FuzzSource, max_n: int, trials: int) -> list[CheckInstance]:
    out = []
    for x in range(1, 9):
        for y in range(1, 9):
            def run_cross(x=x, y=y):
                lhs = beta_dist.beta_exact(x, y)
                rhs = beta_dist.beta_via_integral(x, y)
                return serialize_value(lhs), serialize_value(rhs), lhs == rhs
            out.append(CheckInstance("beta_cross", {"x": str(x), "y": str(y)}, run_cross))
    for trial in range(trials):
        x = fuzz_int(src, 1, 12)
        y = fuzz_int(src, 1, 12)
        p = fuzz_probability(src, 12)
        def run_comp(x=x, y=y, p=p):
            lhs = beta_dist.regularized_beta(p, x, y) + beta_dist.regularized_beta(1 - p, y, x)
            return serialize_value(lhs), serialize_value(Fraction(1)), lhs == 1
        out.append(CheckInstance(
            "beta_complement",
            {"trial": str(trial), "x": str(x), "y": str(y), "p": format_rational(p)},
            run_comp))
    for trial in range(trials):
        n = fuzz_int(src, 1, max(max_n, 1))
        a = fuzz_int(src, 1, n)
        p = fuzz_probability(src, 9)
        out.append(CheckInstance(
            "binom_tail",
            {"trial": str(trial), "n": str(n), "a": str(a), "p": format_rational(p)},
            _sides_thunk(beta_dist.binom_tail_sides, n, a, p)))
    return out


def _suite_negbinom(src: FuzzSource, max_n: int, trials: int) -> list[CheckInstance]:
    out = []
    for trial in range(trials):
        r = fuzz_int(src, 1, 10)
        k = fuzz_int(src, 0, max(max_n, 1))
        p = fuzz_probability(src, 9, lo_open=True)
        out.append(CheckInstance(
            "negbinom_cdf",
            {"trial": str(trial), "r": str(r), "k": str(k), "p": format_rational(p)},
            _sides_thunk(beta_dist.negbinom_cdf_sides, r, k, p)))
    p_half = Fraction(1, 2)
    for r in range(1, 4):
        for a in range(1, 4):
            def run_gap(r=r, a=a):
                limit = 1 - beta_dist.regularized_beta(p_half, r, a)
                later = beta_dist.negbinom_tail_partial(r, a, p_half, 60)
                earlier = beta_dist.negbinom_tail_partial(r, a, p_half, 50)
                ok = earlier < later < limit and limit - later < Fraction(1, 10 ** 6)
                return serialize_value(later), serialize_value(limit), ok
            out.append(CheckInstance(
                "negbinom_tail_gap",
                {"r": str(r), "a": str(a), "p": "1/2", "m_max": "60"}, run_gap))
    return out


def _suite_tailsum(src: FuzzSource, max_n: int, trials: int) -> list[CheckInstance]:
    out = []
    for trial in range(trials):
        k = fuzz_int(src, 1, max(max_n, 1))
        m = fuzz_int(src, 0, k - 1)
        d = fuzz_int(src, 2, 6)
        params = {"trial": str(trial), "k": str(k), "m": str(m), "d": str(d)}
        out.append(CheckInstance(
            "partial_sum", dict(params),
            _sides_thunk(collatz_bound.partial_sum_sides, k, m, d)))

        def run_cross(k=k, m=m, d=d):
            ours = collatz_bound.partial_sum_sides(k, m, d)
            ref = identities.comtet1_sides(k, m, 1, d - 1)
            ok = ours.lhs == ref.lhs and ours.rhs == ref.rhs and ours.equal and ref.equal
            return serialize_value(ours.rhs), serialize_value(ref.rhs), ok
        out.append(CheckInstance("tailsum_comtet1", dict(params), run_cross))
    for trial in range(trials // 2):
        k = fuzz_int(src, 1, max(max_n, 1))
        d = fuzz_int(src, 2, 4)
        eps = fuzz_probability(src, 9, lo_open=True, hi_open=True)
        def run_mono(k=k, d=d, eps=eps):
            wide = collatz_bound.tail_sum(collatz_bound.TailSumQuery(k=k, d=d, eps=eps / 2))
            narrow = collatz_bound.tail_sum(collatz_bound.TailSumQuery(k=k, d=d, eps=eps))
            return serialize_value(wide), serialize_value(narrow), wide >= narrow
        out.append(CheckInstance(
            "tailsum_monotone",
            {"trial": str(trial), "k": str(k), "d": str(d), "eps": format_rational(eps)},
            run_mono))
    bound = Fraction(19, 20)
    for k in (50, 100, 200, 400):
        def run_eta(k=k):
            mass = collatz_bound.tail_sum(
                collatz_bound.TailSumQuery(k=k, d=2, eps=Fraction(1, 4)))
            cap = bound ** k
            return serialize_value(mass), serialize_value(cap), mass < cap
        out.append(CheckInstance(
            "eta_bound", {"k": str(k), "d": "2", "eps": "1/4", "root_bound": "19/20"},
            run_eta))
    return out


def _suite_orbit(src: FuzzSource, max_n: int, trials: int) -> list[CheckInstance]:
    max_steps = 10_000
    def run(max_start=max_n):
        converged = 0
        for ell in range(1, max_start + 1):
            result = collatz_bound.orbit(ell, collatz_bound.CLASSICAL, max_steps)
            if result.terminated == "cycle-found" and set(result.cycle) == {1, 2}:
                converged += 1
        return serialize_value(converged), serialize_value(max_start), converged == max_start
    return [CheckInstance(
        "orbit_cycle",
        {"max_start": str(max_n), "max_steps": str(max_steps), "preset": "classical"},
        run)]


_SUITE_BUILDERS = {
    "ruehr": _suite_ruehr,
    "moments": _suite_moments,
    "comtet": _suite_comtet,
    "corollaries": _suite_corollaries,
    "polynomials": _suite_polynomials,
    "beta": _suite_beta,
    "negbinom": _suite_negbinom,
    "tailsum": _suite_tailsum,
    "orbit": _suite_orbit,
}


def build_suite(name: str, src: FuzzSource,
                max_n: Optional[int] = None,
                trials: Optional[int] = None) -> list[CheckInstance]:
    """Expand one suite into its check instances, drawing fuzz now.

    max_n and trials fall back to per-suite defaults when None.
    """
    if name not in _SUITE_BUILDERS:
        raise ValueError(f"unknown suite {name!r}; choose from {SUITE_ORDER} or 'all'")
    effective_max_n = _DEFAULT_MAX_N.get(name, 20) if max_n is None else max_n
    effective_trials = _DEFAULT_TRIALS.get(name, 20) if trials is None else trials
    return _SUITE_BUILDERS[name](src, effective_max_n, effective_trials)


def build_suites(names, seed: int,
                 max_n: Optional[int] = None,
                 trials: Optional[int] = None) -> list[CheckInstance]:
    """Expand several suites in order against a single seeded source."""
    src = FuzzSource(seed)
    instances: list[CheckInstance] = []
    for name in names:
        instances.extend(build_suite(name, src, max_n=max_n, trials=trials))
    return instances


def run_instances(instances, jobs: int = 1) -> list[CheckReport]:
    """Execute instances (optionally on a thread pool) and sort reports.

    The final order is (check_name, generation index); generation order
    already enumerates parameters ascending, so this realizes the sort by
    check name then parameter tuple no matter how workers interleave.
    """
    def execute(indexed):
        idx, inst = indexed
        started = time.perf_counter()
        lhs, rhs, equal = inst.run()
        elapsed_ms = int((time.perf_counter() - started) * 1000)
        return idx, CheckReport(inst.check_name, dict(inst.params),
                                lhs, rhs, equal, elapsed_ms)

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(execute, enumerate(instances)))
    else:
        results = [execute(pair) for pair in enumerate(instances)]
    results.sort(key=lambda pair: (pair[1].check_name, pair[0]))
    return [report for _, report in results]


def report_to_json(report: CheckReport) -> str:
    payload = {
        "check_name": report.check_name,
        "params": {key: report.params[key] for key in sorted(report.params)},
        "lhs": report.lhs,
        "rhs": report.rhs,
        "equal": report.equal,
        "elapsed_ms": report.elapsed_ms,
    }
    return json.dumps(payload)


CSV_COLUMNS = ("check_name", "params", "lhs", "rhs", "equal", "elapsed_ms")


def report_to_csv_row(report: CheckReport) -> list[str]:
    params = ";".join(f"{key}={report.params[key]}" for key in sorted(report.params))
    return [report.check_name, params, report.lhs, report.rhs,
            "true" if report.equal else "false", str(report.elapsed_ms)]


def report_to_text(report: CheckReport) -> str:
    status = "ok  " if report.equal else "FAIL"
    params = " ".join(f"{key}={report.params[key]}" for key in sorted(report.params))
    return f"[{status}] {report.check_name} {params} lhs={report.lhs} rhs={report.rhs}"
