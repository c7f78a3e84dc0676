"""The xi and eta interpolations of multiple zeta values.

xi(k; s) and eta(k; s) interpolate, in the second argument, the families
obtained from an index k by appending or twisting one extra summation.
At positive integers both reduce to finite combinations of multiple zeta
(respectively zeta-star) values; at nonpositive integers they specialize
to poly-Bernoulli numbers; at a negative index they collapse to finite
Dirichlet polynomials in s.  This module implements each of those faces
plus the identities connecting them, with every identity packaged as a
check returning VerificationReport rows.

Conventions.  Indices are tuples of positive integers, depth r, with no
admissibility requirement unless stated.  A "negative index" is passed
as the tuple of magnitudes (k_1, ..., k_r) standing for (-k_1, ..., -k_r).
"""

from __future__ import annotations

import math
from fractions import Fraction

import mpmath

from .exact_series import TruncatedSeries, mpl_coeffs
from .index_algebra import (
    b_coefficient,
    compositions,
    depth,
    dual,
    plus_one,
    refinements,
    require_index,
    require_signed_parts,
    weight,
)
from .mzv_numeric import (
    EvalResult,
    PoleError,
    exact_result,
    mzsv,
    mzv,
    sum_results,
    zeta,
)
from .pbn import (
    B_symbolic,
    DirichletPolynomial,
    multi_poly_bernoulli,
    negative_polylog_exp_form,
)
from .reports import (
    NOT_COVERED,
    SKIPPED_POLE,
    Stopwatch,
    VerificationReport,
    report_exact,
    report_numeric,
    report_skip,
)

__all__ = [
    "xi_at_positive",
    "eta_at_positive",
    "xi_nonpositive",
    "eta_nonpositive_value",
    "eta_closed_nonpositive",
    "xitilde_closed",
    "xi_explicit_family",
    "eta_symmetric_oracle",
    "xi_series_oracle",
    "landen_check",
    "etaxi_relation_check",
    "eta_value_formulas_check",
    "eta_symmetry_check",
    "eta_threeway_check",
    "eta_dual_pair_check",
    "xi_depth1_enumeration_check",
    "xi_series_representation_check",
    "xi_family_crosscheck",
    "eta_closed_vs_symbolic_check",
    "nonpositive_specialization_check",
    "display_identities_check",
]


def _require_positive_arg(m: int) -> None:
    if not isinstance(m, int) or isinstance(m, bool) or m < 1:
        raise ValueError(f"argument must be an integer >= 1, got {m!r}")


def _finite_base(k: tuple[int, ...]) -> tuple[int, ...]:
    # The admissible index whose shifted family carries the values of
    # xi and eta at positive integers: dualize after raising the last part.
    return dual(plus_one(k))


def xi_at_positive(k, m: int) -> EvalResult:
    """xi(k; m) at an integer m >= 1 as a finite positive combination of
    multiple zeta values:

        xi(k; m) = sum over compositions j of m-1 of
                   b(base; j) * mzv(base + j),

    with base the dual of k with its last part raised, and b the product
    of binomial coefficients C(base_i + j_i - 1, j_i).
    """
    parts = require_index(k)
    _require_positive_arg(m)
    base = _finite_base(parts)
    terms = [
        mzv(tuple(b + j for b, j in zip(base, comp))).scale(b_coefficient(base, comp))
        for comp in compositions(m - 1, len(base))
    ]
    return sum_results(terms, "zeta-combination")


def eta_at_positive(k, m: int) -> EvalResult:
    """eta(k; m) at an integer m >= 1: the same combination as xi but
    with zeta-star values and the sign (-1)^(depth-1)."""
    parts = require_index(k)
    _require_positive_arg(m)
    base = _finite_base(parts)
    terms = [
        mzsv(tuple(b + j for b, j in zip(base, comp))).scale(b_coefficient(base, comp))
        for comp in compositions(m - 1, len(base))
    ]
    return sum_results(terms, "zeta-star-combination").scale((-1) ** (len(parts) - 1))


def xi_nonpositive(k, m: int) -> Fraction:
    """xi(k; -m) for m >= 0, exactly: (-1)^m times the C-family number."""
    parts = require_index(k)
    if not isinstance(m, int) or isinstance(m, bool) or m < 0:
        raise ValueError(f"m must be an integer >= 0, got {m!r}")
    return (-1) ** m * multi_poly_bernoulli(m, parts, "C")


def eta_nonpositive_value(k, m: int) -> Fraction:
    """eta(k; -m) for m >= 0, exactly: the B-family number.  The index
    may contain arbitrary integers."""
    if not isinstance(m, int) or isinstance(m, bool) or m < 0:
        raise ValueError(f"m must be an integer >= 0, got {m!r}")
    return multi_poly_bernoulli(m, tuple(k), "B")


def _exp_form_quotient(parts: tuple[int, ...]) -> tuple[Fraction, ...]:
    # Divide the exponential form A(x) by (x - 1); exact since A(1) = 0.
    a = negative_polylog_exp_form(parts)
    d = len(a) - 1
    q = [Fraction(0)] * d
    carry = Fraction(0)
    for j in range(d, 0, -1):
        carry = a[j] + carry
        q[j - 1] = carry
    return tuple(q)


def eta_closed_nonpositive(parts) -> DirichletPolynomial:
    """eta at the negative index -parts, as a finite Dirichlet polynomial
    in s, valid for every s.

    >>> str(eta_closed_nonpositive((1,)))
    '2^-s'
    """
    ps = require_signed_parts(parts)
    q = _exp_form_quotient(ps)
    return DirichletPolynomial.from_dict({j + 1: c for j, c in enumerate(q) if c})


def xitilde_closed(parts) -> DirichletPolynomial:
    """The companion interpolation at the negative index -parts, again a
    finite Dirichlet polynomial in s.  Undefined when every part is zero
    (the quotient then keeps a constant term, which has no Dirichlet
    image); that case raises ValueError."""
    ps = require_signed_parts(parts)
    q = _exp_form_quotient(ps)
    if q and q[0]:
        raise ValueError(f"no Dirichlet form at the all-zero index {ps!r}")
    return DirichletPolynomial.from_dict({j: c for j, c in enumerate(q) if j >= 1 and c})


def xi_explicit_family(index, m: int) -> EvalResult:
    """Closed-form xi evaluation for the two implemented index shapes:

    * height one, (1, ..., 1, k) with k >= 1 (depth one included);
    * (2, 1, ..., 1) with at least one trailing 1.

    Other shapes raise ValueError.  Divergent constituents (for example
    at m = 1 when k >= 2) surface as PoleError.
    """
    parts = require_index(index)
    _require_positive_arg(m)
    r = len(parts)
    if all(p == 1 for p in parts[:-1]):
        k = parts[-1]
        first = []
        for a in compositions(r, k):
            idx = tuple(ai + 1 for ai in a[:-1]) + (a[-1] + m,)
            first.append(mzv(idx).scale(math.comb(m + a[-1] - 1, a[-1])))
        total = sum_results(first, "explicit-family").scale((-1) ** (k - 1))
        for j in range(k - 1):
            left = mzv((1,) * (r - 1) + (k - j,))
            right = zeta(m) if j == 0 else mzv((1,) * j + (m,))
            total = total + (left * right).scale((-1) ** j)
        return EvalResult(total.value, total.error_bound, "explicit-family")
    if parts[0] == 2 and all(p == 1 for p in parts[1:]) and r >= 2:
        t = r - 1
        pieces = [
            mzv((t + 2, m)).scale(-(t + 1)),
            mzv((t + 1, m + 1)).scale(-m),
        ]
        for j in range(t + 1):
            coeff = (-1) ** j * (t - j + 1) * math.comb(m + j - 1, j)
            pieces.append((zeta(t - j + 2) * zeta(m + j)).scale(coeff))
        return sum_results(pieces, "explicit-family").scale((-1) ** t)
    raise ValueError(f"no explicit closed form implemented for index {parts!r}")


# ---------------------------------------------------------------------------
# Low-accuracy series oracles built from harmonic iterates.


_g_table_cache: dict[tuple[int, int], list] = {}


def _g_tables(max_order: int, cutoff: int) -> list:
    """Arrays G_0, ..., G_max with G_j[c] = sum_{a <= c} G_(j-1)[a] / a
    and G_0 = 1 (index 0 unused)."""
    import numpy as np

    key = (max_order, cutoff)
    hit = _g_table_cache.get(key)
    if hit is not None:
        return hit
    inv = np.zeros(cutoff + 1)
    inv[1:] = 1.0 / np.arange(1, cutoff + 1)
    tables = [np.ones(cutoff + 1)]
    tables[0][0] = 0.0
    for _ in range(max_order):
        tables.append(np.cumsum(tables[-1] * inv))
    _g_table_cache[key] = tables
    return tables


def _iterated_log_tail(q: int, power: int, cutoff: int):
    """Bound for sum_{c > cutoff} (1 + ln c)^q / c^power via integral plus
    maximal term; (1 + ln c)^q dominates the harmonic iterates without a
    factorial saving, so none is claimed."""
    v0 = 1 + mpmath.log(cutoff)
    s = power - 1
    integral = mpmath.e**s * mpmath.gammainc(q + 1, s * v0) / mpmath.mpf(s) ** (q + 1)

    def g(x):
        return (1 + mpmath.log(x)) ** q * mpmath.mpf(x) ** (-power)

    peak = mpmath.e ** (q / power - 1)
    return integral + (g(cutoff) if cutoff >= peak else g(peak))


def eta_symmetric_oracle(k: int, n: int, cutoff: int = 1_000_000) -> EvalResult:
    """Manifestly symmetric series for the depth-one eta at (k, n):

        sum_c G_(k-1)(c) G_(n-1)(c) / c^2.

    Low accuracy (the harmonic iterates shrink slowly); the bound is
    honest and often dominates any tolerance, which the combined pass
    criterion accounts for.
    """
    import numpy as np

    if min(k, n) < 1:
        raise ValueError("both orders must be >= 1")
    tables = _g_tables(max(k, n) - 1, cutoff)
    inv = np.zeros(cutoff + 1)
    inv[1:] = 1.0 / np.arange(1, cutoff + 1)
    value = float(np.sum(tables[k - 1] * tables[n - 1] * inv * inv))
    tail = _iterated_log_tail(k + n - 2, 2, cutoff)
    rounding = abs(value) * (k + n) * cutoff * 2.3e-16 * 8
    return EvalResult(mpmath.mpf(value), tail + rounding, "symmetric-series")


def xi_series_oracle(k: int, n: int, cutoff: int = 1_000_000) -> EvalResult:
    """Depth-one xi at (k, n) as sum_c G_(n-1)(c) / c^(k+1)."""
    import numpy as np

    if min(k, n) < 1:
        raise ValueError("both orders must be >= 1")
    tables = _g_tables(n - 1, cutoff)
    c = np.arange(cutoff + 1, dtype=np.float64)
    c[0] = 1.0
    powers = c ** float(-(k + 1))
    powers[0] = 0.0
    value = float(np.sum(tables[n - 1] * powers))
    tail = _iterated_log_tail(n - 1, k + 1, cutoff)
    rounding = abs(value) * (n + 1) * cutoff * 2.3e-16 * 8
    return EvalResult(mpmath.mpf(value), tail + rounding, "harmonic-series")


# ---------------------------------------------------------------------------
# Checks.


def _indices_up_to_weight(max_weight: int) -> list[tuple[int, ...]]:
    out = []
    for w in range(1, max_weight + 1):
        for r in range(1, w + 1):
            out += [tuple(c + 1 for c in comp) for comp in compositions(w - r, r)]
    return sorted(set(out))


def landen_check(max_weight: int = 5, order: int = 20) -> list[VerificationReport]:
    """Exact Taylor identity under the substitution z -> z/(z-1):

        Li_k(z/(z-1)) = (-1)^depth(k) * sum of Li_k'(z) over refinements k',

    compared coefficientwise through the given order for every index of
    weight up to max_weight."""
    inner = TruncatedSeries.from_list([0] + [-1] * order)  # z/(z-1)
    out = []
    for k in _indices_up_to_weight(max_weight):
        watch = Stopwatch()
        lhs = mpl_coeffs(k, order).compose(inner)
        rhs = TruncatedSeries.zero(order)
        for ref in refinements(k):
            rhs = rhs + mpl_coeffs(ref, order)
        rhs = rhs.scale((-1) ** depth(k))
        out.append(
            report_exact(
                "akzeta.landen-refinement-sum",
                {"index": k, "order": order},
                lhs="lhs-coefficients",
                rhs="rhs-coefficients",
                equal=lhs.coeffs == rhs.coeffs,
                elapsed=watch.elapsed(),
            )
        )
    return out


def etaxi_relation_check(
    max_weight: int = 5, m_values: tuple[int, ...] = (1, 2, 3), tolerance: float = 1e-8
) -> list[VerificationReport]:
    """The reflection pair tying the two interpolations together:

        eta(k; s) = (-1)^(depth-1) * sum of xi(k'; s) over refinements,
        xi(k; s)  = (-1)^(depth-1) * sum of eta(k'; s) over refinements,

    checked numerically at the given integer arguments."""
    out = []
    for k in _indices_up_to_weight(max_weight):
        sign = (-1) ** (depth(k) - 1)
        for m in m_values:
            watch = Stopwatch()
            lhs = eta_at_positive(k, m)
            rhs = sum_results([xi_at_positive(ref, m) for ref in refinements(k)]).scale(sign)
            out.append(
                report_numeric(
                    "akzeta.eta-from-xi-reflection",
                    {"index": k, "m": m},
                    lhs,
                    rhs,
                    tolerance,
                    elapsed=watch.elapsed(),
                )
            )
            watch = Stopwatch()
            lhs2 = xi_at_positive(k, m)
            rhs2 = sum_results([eta_at_positive(ref, m) for ref in refinements(k)]).scale(sign)
            out.append(
                report_numeric(
                    "akzeta.xi-from-eta-reflection",
                    {"index": k, "m": m},
                    lhs2,
                    rhs2,
                    tolerance,
                    elapsed=watch.elapsed(),
                )
            )
    return out


def _comb0(n: int, k: int) -> int:
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


def eta_value_formulas_check(
    max_k: int = 4, max_m: int = 4, tolerance: float = 1e-8
) -> list[VerificationReport]:
    """Depth-one eta written directly in plain multiple zeta values:

        eta(k; m) = sum over r <= k and compositions (k_1, ..., k_r) of
        k + m with k_r >= 2 of [sum_{i=1}^{k_r - 1} C(k+m-r-i, m-i)]
        times mzv(k_1, ..., k_r),

    against the zeta-star combination route."""
    out = []
    for k in range(1, max_k + 1):
        for m in range(1, max_m + 1):
            watch = Stopwatch()
            lhs = eta_at_positive((k,), m)
            pieces = []
            for r in range(1, k + 1):
                for comp in compositions(k + m - r, r):
                    idx = tuple(c + 1 for c in comp)
                    if idx[-1] < 2:
                        continue
                    coeff = sum(_comb0(k + m - r - i, m - i) for i in range(1, idx[-1]))
                    if coeff:
                        pieces.append(mzv(idx).scale(coeff))
            rhs = sum_results(pieces, "zeta-expansion")
            out.append(
                report_numeric(
                    "akzeta.eta-depth1-zeta-expansion",
                    {"k": k, "m": m},
                    lhs,
                    rhs,
                    tolerance,
                    elapsed=watch.elapsed(),
                )
            )
    return out


def eta_symmetry_check(
    max_k: int = 4, max_n: int = 4, tolerance: float = 1e-8
) -> list[VerificationReport]:
    """Symmetry of depth-one eta in its two slots: eta(k; n) = eta(n; k)."""
    out = []
    for k in range(1, max_k + 1):
        for n in range(k, max_n + 1):
            watch = Stopwatch()
            out.append(
                report_numeric(
                    "akzeta.eta-two-slot-symmetry",
                    {"k": k, "n": n},
                    eta_at_positive((k,), n),
                    eta_at_positive((n,), k),
                    tolerance,
                    elapsed=watch.elapsed(),
                )
            )
    return out


_THREEWAY_PAIRS = ((1, 1), (1, 2), (2, 2), (1, 3), (2, 3), (3, 3), (2, 4), (3, 4), (4, 4))


def eta_threeway_check(
    pairs: tuple[tuple[int, int], ...] = _THREEWAY_PAIRS,
    tolerance: float = 1e-4,
    cutoff: int = 1_000_000,
) -> list[VerificationReport]:
    """Three routes to depth-one eta: the zeta-star combination at (k, n),
    the same at (n, k), and the manifestly symmetric harmonic series.
    The first two agree to full precision; the series oracle joins at its
    own honest accuracy."""
    out = []
    for k, n in pairs:
        watch = Stopwatch()
        a = eta_at_positive((k,), n)
        b = eta_at_positive((n,), k)
        oracle = eta_symmetric_oracle(k, n, cutoff)
        out.append(
            report_numeric(
                "akzeta.eta-value-threeway",
                {"k": k, "n": n, "legs": "star-combination-vs-swapped"},
                a,
                b,
                1e-8,
                elapsed=watch.elapsed(),
            )
        )
        watch = Stopwatch()
        out.append(
            report_numeric(
                "akzeta.eta-value-threeway",
                {"k": k, "n": n, "legs": "star-combination-vs-series"},
                a,
                oracle,
                tolerance,
                elapsed=watch.elapsed(),
                detail=f"series tail bound {mpmath.nstr(oracle.error_bound, 3)}",
            )
        )
    return out


def eta_dual_pair_check(max_k: int = 8, max_n: int = 8) -> list[VerificationReport]:
    """Exact two-slot symmetry of the companion interpolation at negative
    depth-one indices and nonpositive arguments:

        value of the (k+1)-form at -n  ==  value of the (n+1)-form at -k,

    both finite Dirichlet polynomials evaluated exactly."""
    out = []
    for k in range(0, max_k + 1):
        for n in range(k, max_n + 1):
            watch = Stopwatch()
            lhs = xitilde_closed((k + 1,)).evaluate_exact(-n)
            rhs = xitilde_closed((n + 1,)).evaluate_exact(-k)
            out.append(
                report_exact(
                    "akzeta.xitilde-two-slot-symmetry",
                    {"k": k, "n": n},
                    lhs,
                    rhs,
                    elapsed=watch.elapsed(),
                )
            )
    return out


def xi_depth1_enumeration_check(
    max_k: int = 4, max_m: int = 4, tolerance: float = 1e-8
) -> list[VerificationReport]:
    """Depth-one xi and eta by direct enumeration:

        xi(k; m)  = sum over j_1..j_(k-1) >= 1, j_k >= 2 with total k + m
                    of (j_k - 1) * mzv(j), and eta likewise with the
                    star value.

    Both compared against the general combination route."""
    out = []
    for k in range(1, max_k + 1):
        for m in range(1, max_m + 1):
            xi_pieces = []
            eta_pieces = []
            for comp in compositions(m, k):
                j = tuple(c + 1 for c in comp)
                if j[-1] < 2:
                    continue
                xi_pieces.append(mzv(j).scale(j[-1] - 1))
                eta_pieces.append(mzsv(j).scale(j[-1] - 1))
            watch = Stopwatch()
            out.append(
                report_numeric(
                    "akzeta.xi-depth1-enumeration",
                    {"k": k, "m": m},
                    xi_at_positive((k,), m),
                    sum_results(xi_pieces, "enumeration"),
                    tolerance,
                    elapsed=watch.elapsed(),
                )
            )
            watch = Stopwatch()
            out.append(
                report_numeric(
                    "akzeta.eta-depth1-enumeration",
                    {"k": k, "m": m},
                    eta_at_positive((k,), m),
                    sum_results(eta_pieces, "enumeration"),
                    tolerance,
                    elapsed=watch.elapsed(),
                )
            )
    return out


def xi_series_representation_check(
    max_k: int = 3, max_n: int = 3, tolerance: float = 1e-4, cutoff: int = 1_000_000
) -> list[VerificationReport]:
    """Depth-one xi against the harmonic-iterate series oracle."""
    out = []
    for k in range(1, max_k + 1):
        for n in range(1, max_n + 1):
            watch = Stopwatch()
            oracle = xi_series_oracle(k, n, cutoff)
            out.append(
                report_numeric(
                    "akzeta.xi-series-representation",
                    {"k": k, "n": n},
                    xi_at_positive((k,), n),
                    oracle,
                    tolerance,
                    elapsed=watch.elapsed(),
                    detail=f"series tail bound {mpmath.nstr(oracle.error_bound, 3)}",
                )
            )
    return out


_FAMILY_CASES = (
    ((2,), (2, 3)),
    ((3,), (2, 3)),
    ((4,), (2,)),
    ((1,), (1, 2, 3)),
    ((1, 1), (1, 2)),
    ((1, 1, 1), (1, 2)),
    # m = 1 sends a divergent zeta through the explicit route; the
    # crosscheck must report it as skipped rather than compare garbage
    ((1, 2), (1, 2, 3)),
    ((1, 3), (2,)),
    ((1, 1, 2), (2,)),
    ((1, 1, 3), (2,)),
    ((2, 1), (2, 3)),
    ((2, 1, 1), (2, 3)),
    ((2, 1, 1, 1), (2,)),
)


def xi_family_crosscheck(tolerance: float = 1e-8) -> list[VerificationReport]:
    """Explicit closed-form families against the general combination
    route, at arguments where every constituent converges."""
    out = []
    for index, args in _FAMILY_CASES:
        for m in args:
            watch = Stopwatch()
            try:
                lhs = xi_explicit_family(index, m)
            except PoleError as exc:
                out.append(
                    report_skip(
                        "akzeta.explicit-family-crosscheck",
                        {"index": index, "m": m},
                        SKIPPED_POLE,
                        str(exc),
                        elapsed=watch.elapsed(),
                    )
                )
                continue
            out.append(
                report_numeric(
                    "akzeta.explicit-family-crosscheck",
                    {"index": index, "m": m},
                    lhs,
                    xi_at_positive(index, m),
                    tolerance,
                    elapsed=watch.elapsed(),
                )
            )
    return out


def eta_closed_vs_symbolic_check(max_k: int = 10) -> list[VerificationReport]:
    """eta at the depth-one negative index -k is the k-th B-family number
    read as a function of the upper argument; the two Dirichlet
    polynomials must match term for term."""
    out = []
    for k in range(0, max_k + 1):
        watch = Stopwatch()
        lhs = eta_closed_nonpositive((k,))
        rhs = B_symbolic(k)
        out.append(
            report_exact(
                "akzeta.eta-negative-index-closed-form",
                {"k": k},
                str(lhs),
                str(rhs),
                equal=lhs == rhs,
                elapsed=watch.elapsed(),
            )
        )
    return out


def nonpositive_specialization_check(
    max_total: int = 6, max_m: int = 8
) -> list[VerificationReport]:
    """Both closed Dirichlet forms, specialized at nonpositive integer
    arguments, against the generating-series numbers:

        eta form at -m   ==  B-family number of the negated index,
        companion at -m  ==  C-family number of the negated index,

    for every negative index with weight + depth <= max_total."""
    out = []
    for r in range(1, max_total + 1):
        for w in range(0, max_total - r + 1):
            for parts in compositions(w, r):
                negated = tuple(-p for p in parts)
                watch = Stopwatch()
                eta_form = eta_closed_nonpositive(parts)
                bad = [
                    m
                    for m in range(max_m + 1)
                    if eta_form.evaluate_exact(-m) != multi_poly_bernoulli(m, negated, "B")
                ]
                out.append(
                    report_exact(
                        "akzeta.eta-nonpositive-specialization",
                        {"index": negated, "max_m": max_m},
                        lhs="dirichlet-form",
                        rhs="generating-series",
                        equal=not bad,
                        elapsed=watch.elapsed(),
                        detail=f"mismatch at m={bad}" if bad else None,
                    )
                )
                watch = Stopwatch()
                if w == 0:
                    out.append(
                        report_skip(
                            "akzeta.xitilde-nonpositive-specialization",
                            {"index": negated, "max_m": max_m},
                            NOT_COVERED,
                            "companion form undefined at all-zero indices",
                            elapsed=watch.elapsed(),
                        )
                    )
                    continue
                tilde_form = xitilde_closed(parts)
                bad = [
                    m
                    for m in range(max_m + 1)
                    if tilde_form.evaluate_exact(-m) != multi_poly_bernoulli(m, negated, "C")
                ]
                out.append(
                    report_exact(
                        "akzeta.xitilde-nonpositive-specialization",
                        {"index": negated, "max_m": max_m},
                        lhs="dirichlet-form",
                        rhs="generating-series",
                        equal=not bad,
                        elapsed=watch.elapsed(),
                        detail=f"mismatch at m={bad}" if bad else None,
                    )
                )
    return out


def display_identities_check(tolerance: float = 1e-8) -> list[VerificationReport]:
    """Two pinned-down consequences, kept as literal displays.

    First, the weight-five relation produced by expanding the two-slot
    symmetry of eta at (3, 2) into plain multiple zeta values.  Second,
    the value xi(2,1; 2) = 2 mzv(3,2) + 2 mzv(2,3)."""
    out = []
    watch = Stopwatch()
    lhs = sum_results(
        [
            mzv((1, 2, 2)),
            mzv((2, 1, 2)),
            mzv((1, 1, 3)).scale(2),
            (zeta(2) * mzv((1, 2))).scale(-1),
            mzv((3, 2)),
            mzv((1, 4)).scale(-3),
            (zeta(2) * zeta(3)).scale(2),
            zeta(5).scale(4),
        ]
    )
    rhs = sum_results(
        [
            zeta(5).scale(6),
            mzv((1, 4)).scale(-3),
            mzv((2, 3)).scale(-1),
            zeta(2) * zeta(3),
        ]
    )
    out.append(
        report_numeric(
            "akzeta.weight5-symmetric-display",
            {"pair": (3, 2)},
            lhs,
            rhs,
            tolerance,
            elapsed=watch.elapsed(),
        )
    )
    watch = Stopwatch()
    out.append(
        report_numeric(
            "akzeta.xi21-value-display",
            {"index": (2, 1), "m": 2},
            xi_explicit_family((2, 1), 2),
            sum_results([mzv((3, 2)).scale(2), mzv((2, 3)).scale(2)]),
            tolerance,
            elapsed=watch.elapsed(),
        )
    )
    return out
