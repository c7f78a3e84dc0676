"""Exact truncated power series and closed rational forms.

Everything in this module is exact rational arithmetic: truncated Taylor
series with Fraction coefficients, composition with 1 - e^(s*t), multiple
polylogarithm coefficient tables for arbitrary integer exponents, and the
closed form P(z)/(1-z)^d of a multiple polylogarithm at nonpositive
exponents, together with a certificate checker for that closed form.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction

from .index_algebra import compositions
from .reports import VerificationReport, Stopwatch, report_exact

__all__ = [
    "TruncatedSeries",
    "one_minus_exp",
    "compose_one_minus_exp",
    "mpl_coeffs",
    "stirling2",
    "RationalFunctionRep",
    "negative_mpl",
    "negative_mpl_certificate_check",
]

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass(frozen=True)
class TruncatedSeries:
    """A power series known exactly through degree ``cap``.

    ``coeffs[n]`` is the coefficient of t^n; the tuple always has length
    cap + 1.  Instances are immutable and safe to share.
    """

    coeffs: tuple[Fraction, ...]

    @property
    def cap(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def from_list(cls, values: list[Fraction | int], cap: int | None = None) -> "TruncatedSeries":
        cs = [Fraction(v) for v in values]
        if cap is not None:
            cs = cs[: cap + 1] + [_ZERO] * (cap + 1 - len(cs))
        if not cs:
            raise ValueError("a series needs at least the constant coefficient")
        return cls(tuple(cs))

    @classmethod
    def zero(cls, cap: int) -> "TruncatedSeries":
        return cls((_ZERO,) * (cap + 1))

    def coefficient(self, n: int) -> Fraction:
        if not 0 <= n <= self.cap:
            raise IndexError(f"coefficient {n} outside known range 0..{self.cap}")
        return self.coeffs[n]

    def valuation(self) -> int:
        """Index of the first nonzero coefficient (cap + 1 if all zero)."""
        for n, c in enumerate(self.coeffs):
            if c:
                return n
        return self.cap + 1

    def truncate(self, cap: int) -> "TruncatedSeries":
        if cap > self.cap:
            raise ValueError(f"cannot extend cap {self.cap} to {cap}")
        return TruncatedSeries(self.coeffs[: cap + 1])

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = min(self.cap, other.cap)
        return TruncatedSeries(tuple(a + b for a, b in zip(self.coeffs[: n + 1], other.coeffs[: n + 1])))

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = min(self.cap, other.cap)
        return TruncatedSeries(tuple(a - b for a, b in zip(self.coeffs[: n + 1], other.coeffs[: n + 1])))

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(tuple(-c for c in self.coeffs))

    def scale(self, q: Fraction | int) -> "TruncatedSeries":
        q = Fraction(q)
        return TruncatedSeries(tuple(q * c for c in self.coeffs))

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        cap = min(self.cap, other.cap)
        out = [_ZERO] * (cap + 1)
        for i, a in enumerate(self.coeffs[: cap + 1]):
            if not a:
                continue
            for j in range(cap + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] += a * b
        return TruncatedSeries(tuple(out))

    def divide(self, other: "TruncatedSeries") -> "TruncatedSeries":
        """Long division; the divisor must have a nonzero constant term.

        Series sharing a t^j factor should be shifted down by the caller
        (see shift_down) before dividing.
        """
        if other.coeffs[0] == 0:
            raise ValueError("division requires a unit constant term")
        cap = min(self.cap, other.cap)
        inv0 = 1 / other.coeffs[0]
        out: list[Fraction] = []
        for n in range(cap + 1):
            acc = self.coeffs[n]
            for i in range(n):
                acc -= out[i] * other.coeffs[n - i]
            out.append(acc * inv0)
        return TruncatedSeries(tuple(out))

    def shift_down(self, j: int) -> "TruncatedSeries":
        """Divide by t^j; the first j coefficients must vanish."""
        if any(self.coeffs[i] for i in range(j)):
            raise ValueError(f"series is not divisible by t^{j}")
        return TruncatedSeries(self.coeffs[j:])

    def derivative(self) -> "TruncatedSeries":
        if self.cap == 0:
            return TruncatedSeries((_ZERO,))
        return TruncatedSeries(tuple(Fraction(n) * self.coeffs[n] for n in range(1, self.cap + 1)))

    def compose(self, inner: "TruncatedSeries") -> "TruncatedSeries":
        """Substitute ``inner`` (valuation >= 1) for the variable.

        The result cap is inner.cap.  Outer coefficients beyond self.cap
        are treated as genuinely zero, so a caller holding a truncation
        rather than a polynomial must supply cap >= inner.cap.
        """
        if inner.coeffs[0] != 0:
            raise ValueError("composition needs an inner series with zero constant term")
        cap = inner.cap
        acc = TruncatedSeries.zero(cap)
        for a in reversed(self.coeffs):
            acc = acc * inner
            if a:
                acc = TruncatedSeries((acc.coeffs[0] + a,) + acc.coeffs[1:])
        return acc


def one_minus_exp(sign: int, cap: int) -> TruncatedSeries:
    """The series of 1 - e^(sign*t); sign must be +1 or -1."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    coeffs = [_ZERO]
    power = _ONE
    for j in range(1, cap + 1):
        power = power * sign / j
        coeffs.append(-power)
    return TruncatedSeries(tuple(coeffs))


def compose_one_minus_exp(a: TruncatedSeries, sign: int, cap: int) -> TruncatedSeries:
    """Evaluate a(1 - e^(sign*t)) through t^cap.

    ``a`` must have zero constant term and be known at least through
    degree cap, since the substitution has valuation one.
    """
    if a.coeffs[0] != 0:
        raise ValueError("outer series must have zero constant term")
    if a.cap < cap:
        raise ValueError(f"outer series cap {a.cap} is below requested cap {cap}")
    return a.truncate(cap).compose(one_minus_exp(sign, cap))


def _power_factor(m: int, e: int) -> Fraction:
    # m^(-e) for any integer e, kept exact.
    return Fraction(1, m**e) if e >= 0 else Fraction(m ** (-e))


def mpl_coeffs(exponents: tuple[int, ...], cap: int) -> TruncatedSeries:
    """Taylor coefficients of the multiple polylogarithm with the given
    integer exponents: sum over 0 < m_1 < ... < m_r of
    z^{m_r} / (m_1^{e_1} * ... * m_r^{e_r}).

    Exponents may be any integers (nonpositive included).

    >>> [str(c) for c in mpl_coeffs((2,), 4).coeffs]
    ['0', '1', '1/4', '1/9', '1/16']
    >>> mpl_coeffs((-1,), 5).coeffs[4]
    Fraction(4, 1)
    """
    if not exponents:
        raise ValueError("need at least one exponent")
    h = [_ZERO] * (cap + 1)
    for m in range(1, cap + 1):
        h[m] = _power_factor(m, exponents[0])
    for e in exponents[1:]:
        running = _ZERO
        nxt = [_ZERO] * (cap + 1)
        for m in range(1, cap + 1):
            running += h[m - 1]
            nxt[m] = _power_factor(m, e) * running
        h = nxt
    return TruncatedSeries(tuple(h))


@functools.lru_cache(maxsize=None)
def _stirling2(n: int, m: int) -> int:
    if n == 0:
        return 1 if m == 0 else 0
    if m <= 0 or m > n:
        return 0
    return m * _stirling2(n - 1, m) + _stirling2(n - 1, m - 1)


def stirling2(n: int, m: int) -> int:
    """Stirling number of the second kind (partitions of n into m blocks).

    >>> stirling2(4, 2)
    7
    """
    if n < 0 or m < 0:
        raise ValueError("arguments must be nonnegative")
    return _stirling2(n, m)


def _poly_trim(p: list[Fraction]) -> tuple[Fraction, ...]:
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return tuple(p)


@dataclass(frozen=True)
class RationalFunctionRep:
    """A rational function P(z)/(1-z)^d with P stored by ascending degree."""

    numerator: tuple[Fraction, ...]
    pole_order: int

    @property
    def degree(self) -> int:
        for i in range(len(self.numerator) - 1, -1, -1):
            if self.numerator[i]:
                return i
        return -1

    def taylor_coefficients(self, cap: int) -> TruncatedSeries:
        d = self.pole_order
        if d == 0:
            return TruncatedSeries.from_list(list(self.numerator), cap)
        out = [_ZERO] * (cap + 1)
        for i, p in enumerate(self.numerator):
            if not p or i > cap:
                continue
            for n in range(i, cap + 1):
                out[n] += p * math.comb(n - i + d - 1, d - 1)
        return TruncatedSeries(tuple(out))

    def evaluate(self, z: Fraction) -> Fraction:
        if z == 1:
            raise ZeroDivisionError("pole at z = 1")
        num = _ZERO
        for p in reversed(self.numerator):
            num = num * z + p
        return num / (1 - z) ** self.pole_order


def negative_mpl(parts: tuple[int, ...]) -> RationalFunctionRep:
    """Closed form of the multiple polylogarithm with exponents
    (-parts[0], ..., -parts[r-1]), each part a nonnegative integer.

    The result is P(z)/(1-z)^(w+r) with w the sum of the parts; P has
    degree w+r-1 (or r when all parts vanish) and is divisible by z^r.
    """
    if not parts:
        raise ValueError("need at least one part")
    if any(not isinstance(p, int) or isinstance(p, bool) or p < 0 for p in parts):
        raise ValueError(f"parts must be nonnegative integers, got {parts!r}")
    poly: list[Fraction] = [_ONE]
    d = 0
    for p in parts:
        # Append a fresh summation variable: multiply by z/(1-z).
        poly = [_ZERO] + poly
        d += 1
        for _ in range(p):
            # Apply z*d/dz to poly/(1-z)^d.
            deriv = [Fraction(n) * poly[n] for n in range(1, len(poly))]
            termA = [_ZERO] + [deriv[i] - (deriv[i - 1] if i > 0 else _ZERO) for i in range(len(deriv))] + [
                -deriv[-1] if deriv else _ZERO
            ]
            termB = [_ZERO] + [Fraction(d) * c for c in poly]
            size = max(len(termA), len(termB))
            poly = [
                (termA[i] if i < len(termA) else _ZERO) + (termB[i] if i < len(termB) else _ZERO)
                for i in range(size)
            ]
            d += 1
    return RationalFunctionRep(_poly_trim(poly), d)


def negative_mpl_certificate_check(max_total: int = 10, taylor_cap: int = 25) -> list[VerificationReport]:
    """Certify every closed form with weight + depth <= max_total.

    Each index gets one report covering four facts: the pole order is
    weight + depth, the numerator degree matches (weight + depth - 1 in
    general, depth when every exponent is zero, where the numerator is
    exactly z^depth), the numerator is divisible by z^depth, and the
    Taylor expansion agrees with the defining sum through taylor_cap.
    """
    out: list[VerificationReport] = []
    for r in range(1, max_total + 1):
        for w in range(0, max_total - r + 1):
            for parts in compositions(w, r):
                watch = Stopwatch()
                rep = negative_mpl(parts)
                problems: list[str] = []
                if rep.pole_order != w + r:
                    problems.append(f"pole order {rep.pole_order} != {w + r}")
                expected_deg = r if w == 0 else w + r - 1
                if rep.degree != expected_deg:
                    problems.append(f"degree {rep.degree} != {expected_deg}")
                if any(rep.numerator[i] for i in range(min(r, len(rep.numerator)))):
                    problems.append(f"numerator not divisible by z^{r}")
                if w == 0:
                    monomial = (_ZERO,) * r + (_ONE,)
                    if rep.numerator != monomial:
                        problems.append("all-zero index numerator is not z^depth")
                taylor = rep.taylor_coefficients(taylor_cap)
                direct = mpl_coeffs(tuple(-p for p in parts), taylor_cap)
                if taylor.coeffs != direct.coeffs:
                    problems.append(f"Taylor mismatch within degree {taylor_cap}")
                out.append(
                    report_exact(
                        "exact_series.negative-polylog-certificate",
                        {"exponents": tuple(-p for p in parts)},
                        lhs="certificate",
                        rhs="certificate",
                        equal=not problems,
                        elapsed=watch.elapsed(),
                        detail="; ".join(problems) if problems else None,
                    )
                )
    return out
