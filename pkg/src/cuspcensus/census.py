"""Census of reciprocal geodesics by word length and excursion count.

Ties the other modules together: the combinatorial counts (compositions),
the word-level brute-force oracle (words), and the certified constants
(spectral) meet here in cross-checked census tables and tolerance-based
convergence reports.

Counts are produced by two unrelated routes and compared cell by cell:

* the DP route counts compositions of t with exactly n parts bigger
  than D;
* the oracle route enumerates all 2^t sign tuples, projectivizes them,
  verifies the two-to-one collapse, and tallies run sequences.

Asymptotic statements are limits, so they are verified as convergence
checks with explicit tolerances; every tolerance appears in the emitted
report.
"""

from __future__ import annotations

import math
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

import mpmath

from .compositions import (
    binomial,
    count_all,
    count_bounded,
    count_exact_excursions,
    two_excursion_sum,
)
from .spectral import (
    bounds_two_excursions,
    closed_form_count,
    coefficient_d,
    excursion_term_report,
    limit_constant,
    solve_alpha,
)
from .words import (
    EpsilonSeq,
    canonical_cyclic_form,
    excursion_parts,
    projectivize,
    reciprocal_word,
    run_sequence,
)

Number = Union[int, float, Fraction]

#: largest t for which the tuple-space oracle runs by default (2^18 tuples)
DEFAULT_ORACLE_CAP = 18

#: largest t for which normal forms are grouped by cyclic conjugacy
CONJUGACY_CAP = 14

#: decimal digits used when forming large-count ratios in log space
RATIO_DPS = 50

_ALPHA_TOL = Fraction(1, 10**12)


class CapExceeded(ValueError):
    """Requested an oracle sweep beyond its configured exhaustive cap."""


@dataclass(frozen=True)
class CensusRow:
    """One census cell: reciprocal geodesics of word length 4t with
    exactly 2n excursions of depth bigger than D."""

    t: int
    D: int
    n: int
    count: int
    source: str  # "dp" | "closed_form" | "oracle"


@dataclass(frozen=True)
class Check:
    """A single named verification with its numbers pinned.

    comparison "within": passes iff |measured - expected| <= tolerance,
    scaled by |expected| when relative is set.  comparison "below": passes
    iff measured < expected (strict, one-sided); tolerance is ignored.
    All comparisons are exact (Fraction arithmetic on the stored values).
    """

    name: str
    parameters: tuple
    measured: Number
    expected: Number
    tolerance: Number
    relative: bool
    comparison: str
    passed: bool


@dataclass(frozen=True)
class VerificationReport:
    name: str
    checks: tuple[Check, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


def _within(name, parameters, measured, expected, tolerance, relative=False) -> Check:
    m, e, tol = Fraction(measured), Fraction(expected), Fraction(tolerance)
    bound = tol * abs(e) if relative else tol
    return Check(
        name, tuple(parameters), measured, expected, tolerance, relative,
        "within", abs(m - e) <= bound,
    )


def _below(name, parameters, measured, expected) -> Check:
    return Check(
        name, tuple(parameters), measured, expected, 0, False,
        "below", Fraction(measured) < Fraction(expected),
    )


def excursion_census(t: int, D: int) -> list[CensusRow]:
    """DP census rows for word length 4t, one per admissible n.

    Row counts sum to 2^{t-1}: the census partitions all reciprocal
    geodesics of that length.
    """
    if t < 1:
        raise ValueError(f"t must be >= 1, got {t}")
    if D < 1:
        raise ValueError(f"D must be >= 1, got {D}")
    return [
        CensusRow(t, D, n, count_exact_excursions(t, n, D), "dp")
        for n in range(t // (D + 1) + 1)
    ]


def _signs_of_mask(t: int, mask: int) -> tuple[int, ...]:
    return tuple(-1 if mask >> i & 1 else 1 for i in range(t))


def _canonical_tally(t: int, lo: int, hi: int) -> Counter:
    tally: Counter = Counter()
    for mask in range(lo, hi):
        eps = EpsilonSeq(_signs_of_mask(t, mask))
        canon = projectivize(eps).canonical.signs
        tally[sum(1 << i for i, s in enumerate(canon) if s == -1)] += 1
    return tally


_oracle_runs_cache: dict[int, tuple[tuple[int, ...], ...]] = {}


def _oracle_run_sequences(t: int, threads: int = 1) -> tuple[tuple[int, ...], ...]:
    """Run sequences of all projective classes at size t, via the word
    route: enumerate every sign tuple, projectivize, check the collapse is
    exactly two-to-one, then read runs off the canonical representatives.

    Results are cached per t; the thread count only splits the enumeration
    range and cannot affect the outcome.
    """
    cached = _oracle_runs_cache.get(t)
    if cached is not None:
        return cached
    total = 1 << t
    if threads > 1:
        step = -(-total // threads)
        chunks = [(lo, min(lo + step, total)) for lo in range(0, total, step)]
        with ThreadPoolExecutor(max_workers=threads) as ex:
            parts = list(ex.map(lambda c: _canonical_tally(t, *c), chunks))
        tally: Counter = Counter()
        for part in parts:
            tally.update(part)
    else:
        tally = _canonical_tally(t, 0, total)
    if len(tally) != count_all(t) or set(tally.values()) != {2}:
        raise RuntimeError(f"projectivization is not two-to-one at t={t}")
    runs = tuple(
        run_sequence(EpsilonSeq(_signs_of_mask(t, mask))).parts
        for mask in sorted(tally)
    )
    _oracle_runs_cache[t] = runs
    return runs


_conjugacy_cache: dict[int, Counter] = {}


def conjugacy_class_sizes(t: int) -> Counter:
    """Group the 2^t reciprocal normal forms at size t by canonical cyclic
    form; maps each class representative to its number of normal forms.

    Every class must have size exactly 2.  Word-level work grows fast, so
    this is capped at t = CONJUGACY_CAP.
    """
    if not 1 <= t <= CONJUGACY_CAP:
        raise CapExceeded(f"conjugacy grouping is capped at t <= {CONJUGACY_CAP}")
    cached = _conjugacy_cache.get(t)
    if cached is None:
        cached = Counter(
            str(canonical_cyclic_form(reciprocal_word(EpsilonSeq(_signs_of_mask(t, m))).word))
            for m in range(1 << t)
        )
        _conjugacy_cache[t] = cached
    return cached


def oracle_census(
    t: int, D: int, cap: int = DEFAULT_ORACLE_CAP, threads: int = 1
) -> list[CensusRow]:
    """Brute-force census over sign tuples; independent of the DP route.

    For t within the conjugacy cap, additionally verifies that grouping
    normal forms by cyclic conjugacy gives classes of size exactly 2.
    """
    if t < 1:
        raise ValueError(f"t must be >= 1, got {t}")
    if D < 1:
        raise ValueError(f"D must be >= 1, got {D}")
    if t > cap:
        raise CapExceeded(f"oracle census capped at t <= {cap}, got {t}")
    if t <= CONJUGACY_CAP:
        sizes = conjugacy_class_sizes(t)
        if len(sizes) != count_all(t) or set(sizes.values()) != {2}:
            raise RuntimeError(f"cyclic conjugacy classes are not paired at t={t}")
    hist: Counter = Counter()
    for parts in _oracle_run_sequences(t, threads):
        hist[sum(1 for p in parts if p > D)] += 1
    return [
        CensusRow(t, D, n, hist.get(n, 0), "oracle")
        for n in range(t // (D + 1) + 1)
    ]


def _to_mpf(x: Fraction):
    return mpmath.mpf(x.numerator) / x.denominator


def _ratio_to_limit(count: int, t: int, power_base: Fraction, t_factor: bool) -> float:
    """count/(t * base^t) or count/base^t in log space; exact inputs, one
    floating-point exponential at the end."""
    ln = mpmath.log(mpmath.mpf(count)) - t * mpmath.log(_to_mpf(power_base))
    if t_factor:
        ln -= mpmath.log(t)
    return float(mpmath.e**ln)


def verify_theorem_2n_depth1(
    n: int,
    t_list: Sequence[int],
    tolerance: Fraction = Fraction(1, 1000),
) -> VerificationReport:
    """At depth 1: the census count equals C(t, 2n) exactly, and
    C(t,2n)/t^{2n} converges to 1/(2n)! with the deviation shrinking along
    t_list and below tolerance at its last entry."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if list(t_list) != sorted(set(t_list)) or not t_list:
        raise ValueError("t_list must be nonempty and strictly ascending")
    checks = []
    deviations = []
    factorial = math.factorial(2 * n)
    for t in t_list:
        count = count_exact_excursions(t, n, 1)
        checks.append(
            _within("depth1_count_is_binomial", (t, n), count, binomial(t, 2 * n), 0)
        )
        # exact rational deviation of the ratio from its limit 1/(2n)!
        deviations.append((t, abs(Fraction(count * factorial, t ** (2 * n)) - 1)))
    for (t1, d1), (t2, d2) in zip(deviations, deviations[1:]):
        if d1 == d2 == 0:
            checks.append(_within("deviation_stays_zero", (n, t1, t2), 0, 0, 0))
        else:
            checks.append(_below("deviation_decreases", (n, t1, t2), d2, d1))
    t_last, dev_last = deviations[-1]
    checks.append(
        _within("final_deviation", (n, t_last), dev_last, 0, tolerance)
    )
    return VerificationReport(f"depth1_excursions_n={n}", tuple(checks))


def verify_theorem_two_excursions(
    D: int,
    t_list: Sequence[int] = (500, 1000, 2000),
    tolerance: Fraction = Fraction(1, 50),
) -> VerificationReport:
    """The single-deep-excursion count over t*alpha_D^t converges to
    d_D^2/(alpha_D^D (alpha_D - 1)): relative error below tolerance at the
    last t and strictly shrinking between consecutive t.

    Counts are exact and alpha comes from a certified enclosure whose
    width contributes well under a tenth of the tolerance; floating point
    enters only in the final reported ratio.
    """
    if D < 2:
        raise ValueError(f"D must be >= 2, got {D}")
    if list(t_list) != sorted(set(t_list)) or not t_list:
        raise ValueError("t_list must be nonempty and strictly ascending")
    alpha = solve_alpha(D, _ALPHA_TOL)
    limit = float(limit_constant("two_excursions_D", D).midpoint())
    errors = []
    with mpmath.workdps(RATIO_DPS):
        for t in t_list:
            count = count_exact_excursions(t, 1, D)
            ratio = _ratio_to_limit(count, t, alpha.interval().midpoint(), True)
            errors.append((t, abs(ratio - limit) / limit))
    checks = [
        _below("error_decreases", (D, t1, t2), e2, e1)
        for (t1, e1), (t2, e2) in zip(errors, errors[1:])
    ]
    t_last, err_last = errors[-1]
    checks.append(
        _within("final_relative_error", (D, t_last), err_last, 0, tolerance)
    )
    return VerificationReport(f"two_excursions_D={D}", tuple(checks))


@dataclass(frozen=True)
class Table1Row:
    """One family row of the headline growth table."""

    family: str
    t: int
    D: Optional[int]
    n: Optional[int]
    exact: int
    approx: Optional[float]


def table1(t: int, D: int, n_max: int = 3) -> list[Table1Row]:
    """The four census families at word length 4t: all reciprocal
    geodesics, the D-low-lying ones, those with 2n depth-1 excursions for
    n = 1..n_max, and those with two depth-D excursions; exact counts next
    to their asymptotic approximations."""
    if t < 1:
        raise ValueError(f"t must be >= 1, got {t}")
    if D < 2:
        raise ValueError(f"D must be >= 2, got {D}")
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    alpha_mid = solve_alpha(D, _ALPHA_TOL).interval().midpoint()
    d_mid = coefficient_d(D, _ALPHA_TOL).midpoint()
    limit_mid = limit_constant("two_excursions_D", D).midpoint()
    with mpmath.workdps(RATIO_DPS):
        a = _to_mpf(alpha_mid)
        power = a**t
        rows = [
            Table1Row("all", t, None, None, count_all(t), None),
            Table1Row(
                "low_lying", t, D, None,
                count_bounded(t, D), float(_to_mpf(d_mid) * power),
            ),
        ]
        for n in range(1, n_max + 1):
            rows.append(
                Table1Row(
                    "depth_one", t, 1, n,
                    binomial(t, 2 * n),
                    float(mpmath.mpf(t) ** (2 * n) / math.factorial(2 * n)),
                )
            )
        rows.append(
            Table1Row(
                "two_excursions", t, D, 1,
                count_exact_excursions(t, 1, D),
                float(_to_mpf(limit_mid) * t * power),
            )
        )
    return rows


# -- verification suites ---------------------------------------------------------
#
# Each suite aggregates the checks behind one headline claim, sized so the
# full battery stays within interactive runtimes at its defaults.


def suite_bijection(t_max: int = 14) -> VerificationReport:
    """Normal forms at every t <= t_max pair up two-to-one under cyclic
    conjugacy into 2^{t-1} classes."""
    checks = []
    for t in range(1, t_max + 1):
        sizes = conjugacy_class_sizes(t)
        checks.append(
            _within("conjugacy_class_count", (t,), len(sizes), count_all(t), 0)
        )
        off = sum(1 for v in sizes.values() if v != 2)
        checks.append(_within("classes_not_of_size_two", (t,), off, 0, 0))
    return VerificationReport("bijection", tuple(checks))


def suite_partition(
    t_max: int = 20, d_max: int = 5, oracle_max_t: int = DEFAULT_ORACLE_CAP,
    threads: int = 1,
) -> VerificationReport:
    """Census rows partition the 2^{t-1} geodesics, and the DP census
    matches the tuple-space oracle cell by cell."""
    checks = []
    for D in range(1, d_max + 1):
        for t in range(1, t_max + 1):
            rows = excursion_census(t, D)
            checks.append(
                _within(
                    "row_sum", (t, D), sum(r.count for r in rows), count_all(t), 0
                )
            )
            if t <= oracle_max_t:
                oracle = oracle_census(t, D, cap=oracle_max_t, threads=threads)
                mismatches = sum(
                    1 for a, b in zip(rows, oracle)
                    if (a.t, a.D, a.n, a.count) != (b.t, b.D, b.n, b.count)
                ) + abs(len(rows) - len(oracle))
                checks.append(_within("dp_vs_oracle_cells", (t, D), mismatches, 0, 0))
    return VerificationReport("partition", tuple(checks))


def suite_closed_form(t_max: int = 500, d_max: int = 12) -> VerificationReport:
    """rnd(d_D alpha_D^t) equals the exact bounded count everywhere."""
    checks = []
    for D in range(2, d_max + 1):
        mismatches = sum(
            1 for t in range(t_max + 1) if closed_form_count(t, D) != count_bounded(t, D)
        )
        checks.append(_within("closed_form_mismatches", (D, t_max), mismatches, 0, 0))
    return VerificationReport("closed-form", tuple(checks))


def suite_double_sum(
    t_max: int = 300, d_max: int = 8, bounds_t_max: int = 200, bounds_d_max: int = 6
) -> VerificationReport:
    """The positional double sum reproduces the one-excursion census, and
    the closed-form estimates sandwich it."""
    checks = []
    for D in range(2, d_max + 1):
        mismatches = sum(
            1
            for t in range(1, t_max + 1)
            if two_excursion_sum(t, D) != count_exact_excursions(t, 1, D)
        )
        checks.append(_within("double_sum_mismatches", (D, t_max), mismatches, 0, 0))
    for D in range(2, bounds_d_max + 1):
        violations = 0
        for t in range(1, bounds_t_max + 1):
            lo, hi = bounds_two_excursions(t, D)
            if not lo <= count_exact_excursions(t, 1, D) <= hi:
                violations += 1
        checks.append(
            _within("sandwich_violations", (D, bounds_t_max), violations, 0, 0)
        )
    return VerificationReport("double-sum", tuple(checks))


def suite_thm32(
    exact_t_max: int = 1000,
    t_list: Sequence[int] = (1000, 10000, 100000),
    tolerance: Fraction = Fraction(1, 1000),
) -> VerificationReport:
    """Depth-1 census equals C(t,2n) exactly, with the normalized ratio
    converging to 1/(2n)!."""
    checks = []
    mismatches = sum(
        1
        for t in range(1, exact_t_max + 1)
        for n in range(t // 2 + 1)
        if count_exact_excursions(t, n, 1) != binomial(t, 2 * n)
    )
    checks.append(
        _within("depth1_exact_sweep_mismatches", (exact_t_max,), mismatches, 0, 0)
    )
    for n in (1, 2, 3):
        checks.extend(verify_theorem_2n_depth1(n, t_list, tolerance).checks)
    return VerificationReport("thm32", tuple(checks))


def suite_thm34(
    d_list: Sequence[int] = (2, 3, 4),
    t_list: Sequence[int] = (500, 1000, 2000),
    tolerance: Fraction = Fraction(1, 50),
) -> VerificationReport:
    """Convergence of the one-excursion count to its t alpha^t asymptote."""
    checks = []
    for D in d_list:
        checks.extend(verify_theorem_two_excursions(D, t_list, tolerance).checks)
    return VerificationReport("thm34", tuple(checks))


def _fit_drift(rows: Sequence[tuple], index: int) -> tuple[float, float]:
    """Least-squares drift (slope times span) of one ratio column over the
    given rows, and the column mean."""
    ts = [float(r[0]) for r in rows]
    ys = [float(r[index]) for r in rows]
    n = len(ts)
    tbar = sum(ts) / n
    ybar = sum(ys) / n
    sxy = sum((x - tbar) * (y - ybar) for x, y in zip(ts, ys))
    sxx = sum((x - tbar) ** 2 for x in ts)
    slope = sxy / sxx
    return slope * (ts[-1] - ts[0]), ybar


def suite_lemma33(
    D: int = 2, t_ref: int = 500, t_max: int = 2000,
    tolerance: Fraction = Fraction(1, 50),
) -> VerificationReport:
    """The dominant term tracks its t alpha^t asymptote and the two cross
    terms stay bounded: their fitted drift over the tail is zero within
    noise."""
    rep = excursion_term_report(D, t_max)
    checks = []
    ratio_ref = rep.rows[t_ref - 1][1]
    checks.append(
        _within(
            "term1_ratio_at_reference", (D, t_ref),
            ratio_ref, rep.term1_limit, tolerance, relative=True,
        )
    )
    tail = rep.rows[t_max // 2 :]
    for label, index in (("term2", 2), ("term3", 3)):
        drift, mean = _fit_drift(tail, index)
        checks.append(
            _within(
                f"{label}_tail_drift", (D, t_max // 2, t_max),
                drift, 0, 1e-6 * mean,
            )
        )
        growth = rep.rows[-1][index] / rep.rows[t_max // 2][index] - 1
        checks.append(
            _within(f"{label}_tail_growth", (D, t_max // 2, t_max), growth, 0, 1e-9)
        )
    return VerificationReport("lemma33", tuple(checks))


def suite_matrices(t_max: int = 12) -> VerificationReport:
    """Generator relations, parabolicity of ab, and hyperbolicity plus the
    involution factorization of every normal form."""
    from .matrices import GEN_A, GEN_B, PSL2Element, classify, evaluate, reciprocity_check
    from .words import GroupWord

    a = PSL2Element.of(GEN_A)
    b = PSL2Element.of(GEN_B)
    checks = [
        _within("a_squared_is_identity", (), int((a * a).is_identity()), 1, 0),
        _within("b_cubed_is_identity", (), int((b * b * b).is_identity()), 1, 0),
        _within(
            "ab_is_parabolic", (),
            int(classify(evaluate(GroupWord.from_string("ab"))) == "parabolic"), 1, 0,
        ),
    ]
    for t in range(1, t_max + 1):
        bad = 0
        for mask in range(1 << t):
            eps = EpsilonSeq(_signs_of_mask(t, mask))
            word = reciprocal_word(eps).word
            if classify(evaluate(word)) != "hyperbolic" or not reciprocity_check(eps):
                bad += 1
        checks.append(_within("non_reciprocal_normal_forms", (t,), bad, 0, 0))
    return VerificationReport("matrices", tuple(checks))


SUITES = {
    "bijection": suite_bijection,
    "partition": suite_partition,
    "closed-form": suite_closed_form,
    "double-sum": suite_double_sum,
    "thm32": suite_thm32,
    "thm34": suite_thm34,
    "lemma33": suite_lemma33,
    "matrices": suite_matrices,
}
