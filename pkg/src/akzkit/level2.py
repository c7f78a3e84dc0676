"""Level-two analogues: parity-restricted sums, T values, and psi.

The level-two polylogarithm attaches the parity pattern m_i = i mod 2 to
the summation variables; at z = 1 it gives the parity-restricted zeta
values whose 2^depth multiples are written T here.  psi(k; s) is the
interpolation with the hyperbolic kernel

    psi(k; s) = 2^depth / Gamma(s) * integral of
                t^(s-1) * Ath(k; tanh(t/2)) / sinh(t)  over t > 0,

where Ath(k; z) is that polylogarithm.  The module evaluates psi on the
height-one family two independent ways, checks the binomial-sum identity
mixing the (m, r) parameters, the height-one duality, the depth-one
product expression for odd-argument zeta, and the integral
representation itself by direct quadrature.
"""

from __future__ import annotations

import math
from fractions import Fraction

import mpmath

from .exact_series import TruncatedSeries, mpl_coeffs
from .index_algebra import compositions, require_index
from .mzv_numeric import (
    EvalResult,
    PoleError,
    polylog_near_one,
    sum_results,
    t0_value,
    t_value,
    zeta,
)
from .reports import (
    SKIPPED_POLE,
    Stopwatch,
    VerificationReport,
    report_numeric,
    report_exact,
    report_skip,
)

__all__ = [
    "ath_coeffs",
    "ath_series_identities",
    "psi_at_positive",
    "psi_alternating_form",
    "psi_depth1_integral",
    "psi_formula_crosscheck",
    "height_one_duality_check",
    "t_binomial_identity_check",
    "psi_depth1_integral_check",
    "odd_zeta_relation_check",
]

_ZERO = Fraction(0)


def ath_coeffs(k, cap: int) -> TruncatedSeries:
    """Taylor coefficients of the level-two polylogarithm: the sum of
    z^{m_r} / (m_1^{k_1} ... m_r^{k_r}) over 0 < m_1 < ... < m_r with
    m_i = i mod 2.

    >>> ath_coeffs((1,), 5).coeffs[3]
    Fraction(1, 3)
    >>> ath_coeffs((1, 1), 6).coeffs[4]
    Fraction(1, 3)
    """
    parts = require_index(k)
    h = [_ZERO] * (cap + 1)
    for m in range(1, cap + 1, 2):
        h[m] = Fraction(1, m ** parts[0])
    for pos, e in enumerate(parts[1:], start=2):
        running = _ZERO
        nxt = [_ZERO] * (cap + 1)
        for m in range(1, cap + 1):
            running += h[m - 1]
            if m % 2 == pos % 2:
                nxt[m] = Fraction(1, m**e) * running
        h = nxt
    return TruncatedSeries(tuple(h))


def _arctanh_series(cap: int) -> TruncatedSeries:
    return TruncatedSeries(
        tuple(Fraction(1, n) if n % 2 == 1 else _ZERO for n in range(cap + 1))
    )


def _indices_up_to_weight(max_weight: int) -> list[tuple[int, ...]]:
    out = []
    for w in range(1, max_weight + 1):
        for r in range(1, w + 1):
            out += [tuple(c + 1 for c in comp) for comp in compositions(w - r, r)]
    return sorted(set(out))


def ath_series_identities(cap: int = 32) -> list[VerificationReport]:
    """Exact structural facts about the level-two polylogarithm:

    * depth one splits off the even part: Ath_k(z) = Li_k(z) - 2^(-k) Li_k(z^2);
    * the all-ones index is a pure power: Ath(1,...,1; z) = arctanh(z)^r / r!;
    * one derivative strips the innermost integration, against dt/t when
      the last part exceeds 1 and against dt/(1-t^2) when it equals 1;
    * composing with tanh gives the identity series (arctanh(tanh t) = t).
    """
    out = []
    for k in range(1, 9):
        watch = Stopwatch()
        li = mpl_coeffs((k,), cap)
        squared = [_ZERO] * (cap + 1)
        for n in range(0, cap + 1, 2):
            squared[n] = li.coeffs[n // 2] * Fraction(1, 2**k)
        rhs = li - TruncatedSeries(tuple(squared))
        out.append(
            report_exact(
                "level2.ath-even-part-split",
                {"k": k, "cap": cap},
                lhs="ath-coefficients",
                rhs="li-minus-even-part",
                equal=ath_coeffs((k,), cap).coeffs == rhs.coeffs,
                elapsed=watch.elapsed(),
            )
        )
    for r in range(1, 7):
        watch = Stopwatch()
        power = TruncatedSeries.from_list([1], cap)
        at = _arctanh_series(cap)
        for _ in range(r):
            power = power * at
        power = power.scale(Fraction(1, math.factorial(r)))
        out.append(
            report_exact(
                "level2.ath-all-ones-power",
                {"r": r, "cap": cap},
                lhs="ath-coefficients",
                rhs="arctanh-power",
                equal=ath_coeffs((1,) * r, cap).coeffs == power.coeffs,
                elapsed=watch.elapsed(),
            )
        )
    for k in _indices_up_to_weight(6):
        if len(k) == 1 and k[0] == 1:
            continue
        watch = Stopwatch()
        series = ath_coeffs(k, cap)
        deriv = series.derivative()
        if k[-1] >= 2:
            lowered = k[:-1] + (k[-1] - 1,)
            # z * d/dz reproduces the series with the last exponent lowered.
            shifted = TruncatedSeries((_ZERO,) + deriv.coeffs)
            ok = shifted.coeffs == ath_coeffs(lowered, cap).coeffs
            case = "dt/t"
        else:
            one_minus_sq = TruncatedSeries.from_list([1, 0, -1], cap - 1)
            ok = (deriv * one_minus_sq).coeffs == ath_coeffs(k[:-1], cap - 1).coeffs
            case = "dt/(1-t^2)"
        out.append(
            report_exact(
                "level2.ath-derivative-recursion",
                {"index": k, "case": case},
                lhs="derivative",
                rhs="lowered-index",
                equal=ok,
                elapsed=watch.elapsed(),
            )
        )
    watch = Stopwatch()
    small = 24
    sinh = TruncatedSeries.from_list(
        [Fraction(1, math.factorial(n)) if n % 2 == 1 else 0 for n in range(small + 1)]
    )
    cosh = TruncatedSeries.from_list(
        [Fraction(1, math.factorial(n)) if n % 2 == 0 else 0 for n in range(small + 1)]
    )
    tanh = sinh.divide(cosh)
    composed = _arctanh_series(small).compose(tanh)
    identity = TruncatedSeries.from_list([0, 1], small)
    out.append(
        report_exact(
            "level2.arctanh-tanh-identity",
            {"cap": small},
            lhs="arctanh(tanh t)",
            rhs="t",
            equal=composed.coeffs == identity.coeffs,
            elapsed=watch.elapsed(),
        )
    )
    return out


def _height_one(r: int, k: int) -> tuple[int, ...]:
    return (1,) * (r - 1) + (k,)


def _validate_rk(r: int, k: int) -> None:
    for name, v in (("r", r), ("k", k)):
        if not isinstance(v, int) or isinstance(v, bool) or v < 1:
            raise ValueError(f"{name} must be an integer >= 1, got {v!r}")


def psi_at_positive(r: int, k: int, m: int) -> EvalResult:
    """psi on the height-one index (1^(r-1), k) at an integer m >= 1.

    At m = 1 the value is a single T value with the last part raised; for
    m >= 2 it is the pole-free binomial combination

        sum over compositions a of m-1 into k parts of
        C(a_k + r, r) * T(a_1 + 1, ..., a_(k-1) + 1, a_k + r + 1).
    """
    _validate_rk(r, k)
    if not isinstance(m, int) or isinstance(m, bool) or m < 1:
        raise ValueError(f"m must be an integer >= 1, got {m!r}")
    if m == 1:
        return t_value(_height_one(r, k + 1))
    terms = []
    for a in compositions(m - 1, k):
        idx = tuple(ai + 1 for ai in a[:-1]) + (a[-1] + r + 1,)
        terms.append(t_value(idx).scale(math.comb(a[-1] + r, r)))
    return sum_results(terms, "binomial-T-combination")


def psi_alternating_form(r: int, k: int, m: int) -> EvalResult:
    """The alternative expression for the same height-one value:

        (-1)^(k-1) * sum over compositions a of r into k parts of
        C(m + a_k - 1, a_k) * T(a_1 + 1, ..., a_(k-1) + 1, a_k + m)
        + sum_{j=0}^{k-2} (-1)^j T(1^(r-1), k-j) * T(1^j, m).

    Divergent constituents (m = 1 with k >= 2) raise PoleError.
    """
    _validate_rk(r, k)
    first = []
    for a in compositions(r, k):
        idx = tuple(ai + 1 for ai in a[:-1]) + (a[-1] + m,)
        first.append(t_value(idx).scale(math.comb(m + a[-1] - 1, a[-1])))
    total = sum_results(first, "alternate-T-combination").scale((-1) ** (k - 1))
    for j in range(k - 1):
        left = t_value((1,) * (r - 1) + (k - j,))
        right = t_value((1,) * j + (m,))
        total = total + (left * right).scale((-1) ** j)
    return EvalResult(total.value, total.error_bound, "alternate-T-combination")


def psi_formula_crosscheck(
    max_r: int = 3, max_k: int = 3, m_values: tuple[int, ...] = (1, 2, 3), tolerance: float = 1e-8
) -> list[VerificationReport]:
    """The two closed expressions for height-one psi against each other.
    Instances whose alternate route hits a divergent T value are reported
    as skipped."""
    out = []
    for r in range(1, max_r + 1):
        for k in range(1, max_k + 1):
            for m in m_values:
                watch = Stopwatch()
                try:
                    alt = psi_alternating_form(r, k, m)
                except PoleError as exc:
                    out.append(
                        report_skip(
                            "level2.psi-family-crosscheck",
                            {"r": r, "k": k, "m": m},
                            SKIPPED_POLE,
                            str(exc),
                            elapsed=watch.elapsed(),
                        )
                    )
                    continue
                out.append(
                    report_numeric(
                        "level2.psi-family-crosscheck",
                        {"r": r, "k": k, "m": m},
                        psi_at_positive(r, k, m),
                        alt,
                        tolerance,
                        elapsed=watch.elapsed(),
                    )
                )
    return out


def height_one_duality_check(max_rk: int = 4, tolerance: float = 1e-8) -> list[VerificationReport]:
    """T(1^(r-1), k+1) = T(1^(k-1), r+1), the height-one duality."""
    out = []
    for r in range(1, max_rk + 1):
        for k in range(r, max_rk + 1):
            watch = Stopwatch()
            out.append(
                report_numeric(
                    "level2.ht1-duality",
                    {"r": r, "k": k},
                    t_value(_height_one(r, k + 1)),
                    t_value(_height_one(k, r + 1)),
                    tolerance,
                    elapsed=watch.elapsed(),
                )
            )
    return out


def t_binomial_identity_check(
    m_values: tuple[int, ...] = (1, 2),
    r_values: tuple[int, ...] = (1, 2),
    k_values: tuple[int, ...] = (2, 3),
    tolerance: float = 1e-8,
) -> list[VerificationReport]:
    """The symmetric binomial-sum identity mixing the two parameters:

        sum over a |= m into k of C(a_k + r, r) T(a+1 ..., a_k + r + 1)
        + (-1)^k sum over a |= r into k of C(a_k + m, m) T(..., a_k + m + 1)
        = sum_{j=0}^{k-2} (-1)^j T(1^(r-1), k-j) T(1^j, m+1),

    plus its depth-two display at k = 2, r = 1 written in the
    parity-restricted values directly."""
    out = []
    for m in m_values:
        for r in r_values:
            for k in k_values:
                watch = Stopwatch()
                left = []
                for a in compositions(m, k):
                    idx = tuple(ai + 1 for ai in a[:-1]) + (a[-1] + r + 1,)
                    left.append(t_value(idx).scale(math.comb(a[-1] + r, r)))
                for a in compositions(r, k):
                    idx = tuple(ai + 1 for ai in a[:-1]) + (a[-1] + m + 1,)
                    left.append(t_value(idx).scale((-1) ** k * math.comb(a[-1] + m, m)))
                rhs_terms = []
                for j in range(k - 1):
                    prod = t_value((1,) * (r - 1) + (k - j,)) * t_value((1,) * j + (m + 1,))
                    rhs_terms.append(prod.scale((-1) ** j))
                out.append(
                    report_numeric(
                        "level2.t-binomial-symmetry",
                        {"m": m, "r": r, "k": k},
                        sum_results(left),
                        sum_results(rhs_terms),
                        tolerance,
                        elapsed=watch.elapsed(),
                    )
                )
    for m in m_values:
        watch = Stopwatch()
        pieces = [
            t0_value((m - a + 1, a + 2)).scale(a + 1) for a in range(m + 1)
        ]
        pieces.append(t0_value((2, m + 1)))
        pieces.append(t0_value((1, m + 2)).scale(m + 1))
        rhs = t0_value((2,)) * t0_value((m + 1,))
        out.append(
            report_numeric(
                "level2.oddeven-display",
                {"m": m},
                sum_results(pieces),
                rhs,
                tolerance,
                elapsed=watch.elapsed(),
            )
        )
    return out


def psi_depth1_integral(k: int, s: int, upper: float = 60.0, maxdegree: int = 8) -> EvalResult:
    """psi(k; s) for depth one by direct quadrature of the hyperbolic
    integral, split at t = 1.

    Below the split the level-two series converges fast in tanh(t/2);
    above it the integrand is rebuilt from the polylogarithm near 1 via
    u = 2 arctanh(e^(-t)), which avoids cancellation for large t.  The
    quadrature contributes its own error estimate (taken with a safety
    factor of ten); the discarded range beyond `upper` is covered by an
    explicit incomplete-gamma bound.
    """
    if not isinstance(k, int) or isinstance(k, bool) or k < 2:
        raise ValueError(f"k must be an integer >= 2, got {k!r}")
    if not isinstance(s, int) or isinstance(s, bool) or s < 1:
        raise ValueError(f"s must be an integer >= 1, got {s!r}")
    cap = 140
    series = [mpmath.mpf(c.numerator) / c.denominator for c in ath_coeffs((k,), cap).coeffs]
    gamma_s = math.factorial(s - 1)

    def low(t):
        z = mpmath.tanh(t / 2)
        acc = mpmath.mpf(0)
        for n in range(cap, 0, -1):
            acc = acc * z + series[n]
        acc *= z
        return t ** (s - 1) * acc / mpmath.sinh(t)

    def high(t):
        u = 2 * mpmath.atanh(mpmath.e ** (-t))
        ath = polylog_near_one(k, u).value - polylog_near_one(k, 2 * u).value / 2**k
        return t ** (s - 1) * ath / mpmath.sinh(t)

    v1, e1 = mpmath.quad(low, [0, 1], error=True, maxdegree=maxdegree)
    v2, e2 = mpmath.quad(high, [1, upper], error=True, maxdegree=maxdegree)
    zk = zeta(k)
    tail = (
        4
        * zk.value
        / ((1 - mpmath.e**-2) * gamma_s)
        * mpmath.gammainc(s, upper)
    )
    value = 2 * (v1 + v2) / gamma_s
    # Series truncation below the split and polylogarithm bounds above it
    # are orders of magnitude under the quadrature estimate; a flat cover
    # for them rides along with the tenfold-inflated estimates.
    bound = 2 * (10 * (e1 + e2) + mpmath.mpf(10) ** -40) / gamma_s + tail
    return EvalResult(value, bound, "hyperbolic-quadrature")


def psi_depth1_integral_check(
    k_values: tuple[int, ...] = (2, 3),
    s_values: tuple[int, ...] = (1, 2),
    tolerance: float = 1e-8,
) -> list[VerificationReport]:
    """Quadrature of the defining integral against the closed T-value
    expression, for depth-one indices."""
    out = []
    for k in k_values:
        for s in s_values:
            watch = Stopwatch()
            out.append(
                report_numeric(
                    "level2.psi-integral-representation",
                    {"k": k, "s": s},
                    psi_depth1_integral(k, s),
                    psi_at_positive(1, k, s),
                    tolerance,
                    elapsed=watch.elapsed(),
                )
            )
    return out


def odd_zeta_relation_check(
    s_values: tuple[int, ...] = (2, 3, 4, 5, 6, 7, 8), tolerance: float = 1e-8
) -> list[VerificationReport]:
    """Depth one of the parity-restricted family is an explicit multiple
    of zeta: the odd-argument sum equals (1 - 2^(-s)) zeta(s)."""
    out = []
    for s in s_values:
        watch = Stopwatch()
        out.append(
            report_numeric(
                "level2.odd-zeta-product",
                {"s": s},
                t0_value((s,)),
                zeta(s).scale(1 - Fraction(1, 2**s)),
                tolerance,
                elapsed=watch.elapsed(),
            )
        )
    return out
