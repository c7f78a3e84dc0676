"""High-precision multiple zeta and T values with tracked error bounds.

Every public evaluator returns an EvalResult carrying a value, a rigorous
error bound, and the method used.  Two independent routes exist for each
family: a fast convolution of iterated-integral tails at an interior
point (the default), and a plain truncated nested sum with an analytic
tail estimate (the oracle).  Checks elsewhere compare the routes and
treat the bounds as part of the pass criterion, never as decoration.

Words here encode iterated integrals over three one-forms: symbol 0 for
dt/t, symbol 1 for dt/(1-t), symbol 2 for dt/(1-t^2).  An index
(k_1, ..., k_r) maps to the word 0^(k_r-1) a 0^(k_(r-1)-1) a ... with
a = 1 at level one and a = 2 at level two; the level-two form introduces
the parity pattern m_i = i mod 2 in the underlying sums.

Precision is global and meant to be configured once, before evaluation
begins; after the first evaluation it is locked.  All caches are plain
dicts populated under the interpreter lock, and cached objects are
immutable, so concurrent readers are safe.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any

import mpmath

from .index_algebra import coarsenings, compositions, depth, dual, require_index
from .reports import Stopwatch, report_numeric

__all__ = [
    "PoleError",
    "EvalResult",
    "configure",
    "current_precision",
    "set_perturbation",
    "perturbation_enabled",
    "zeta",
    "mzv",
    "mzsv",
    "mpl_numeric",
    "t0_value",
    "t_value",
    "mzv_direct",
    "t0_direct",
    "polylog_near_one",
    "zeta_nonpositive",
    "bernoulli_number",
    "duality_numeric_check",
    "direct_oracle_check",
]


class PoleError(ValueError):
    """An evaluation point where the requested function diverges."""


_DEFAULT_PREC = 256

_state = {"prec": _DEFAULT_PREC, "locked": False, "perturb": False}
_state_lock = threading.Lock()

_series_cache: dict[tuple, tuple] = {}
_value_cache: dict[tuple, tuple] = {}
_result_cache: dict[tuple, "EvalResult"] = {}


def configure(prec_bits: int = _DEFAULT_PREC) -> None:
    """Set the working precision in bits.  Call before any evaluation;
    changing it afterwards raises, since cached values would go stale."""
    if prec_bits < 64:
        raise ValueError("precision below 64 bits defeats the bound tracking")
    with _state_lock:
        if _state["locked"] and prec_bits != _state["prec"]:
            raise RuntimeError("precision is locked after the first evaluation")
        _state["prec"] = prec_bits
        mpmath.mp.prec = prec_bits


def current_precision() -> int:
    return _state["prec"]


def _activate() -> None:
    # Entry point of every evaluator: pin mpmath to the configured
    # precision and lock further configuration.
    if not _state["locked"]:
        with _state_lock:
            mpmath.mp.prec = _state["prec"]
            _state["locked"] = True


def set_perturbation(enabled: bool) -> None:
    """Deliberately corrupt one interior value (used to prove the checks
    can fail).  Cached clean values stay clean; the nudge is applied on
    the way out."""
    _state["perturb"] = bool(enabled)


def perturbation_enabled() -> bool:
    return _state["perturb"]


def _mpf(x: Any):
    if isinstance(x, Fraction):
        return mpmath.mpf(x.numerator) / x.denominator
    return mpmath.mpf(x)


def _smear(value) -> Any:
    # Generous cover for accumulated rounding: dozens of guard bits below
    # working precision, far under every tolerance used by the checks.
    return (abs(value) + 1) * mpmath.mpf(2) ** (40 - _state["prec"])


@dataclass(frozen=True)
class EvalResult:
    """A numeric value plus a bound on its total error."""

    value: Any
    error_bound: Any
    method: str

    def __add__(self, other: "EvalResult") -> "EvalResult":
        v = self.value + other.value
        return EvalResult(v, self.error_bound + other.error_bound + _smear(v), "composite")

    def __sub__(self, other: "EvalResult") -> "EvalResult":
        v = self.value - other.value
        return EvalResult(v, self.error_bound + other.error_bound + _smear(v), "composite")

    def __mul__(self, other: "EvalResult") -> "EvalResult":
        v = self.value * other.value
        b = (
            abs(self.value) * other.error_bound
            + abs(other.value) * self.error_bound
            + self.error_bound * other.error_bound
        )
        return EvalResult(v, b + _smear(v), "composite")

    def scale(self, c: Any) -> "EvalResult":
        c = _mpf(c)
        return EvalResult(self.value * c, self.error_bound * abs(c) + _smear(self.value * c), self.method)


def exact_result(x: Any, method: str = "exact") -> EvalResult:
    v = _mpf(x)
    return EvalResult(v, _smear(v), method)


def sum_results(items: list[EvalResult], method: str = "composite") -> EvalResult:
    value = mpmath.mpf(0)
    bound = mpmath.mpf(0)
    for item in items:
        value += item.value
        bound += item.error_bound
    return EvalResult(value, bound + _smear(value), method)


# ---------------------------------------------------------------------------
# The word engine.


def word_level1(parts: tuple[int, ...]) -> tuple[int, ...]:
    w: list[int] = []
    for p in reversed(parts):
        w.extend([0] * (p - 1))
        w.append(1)
    return tuple(w)


def word_level2(parts: tuple[int, ...]) -> tuple[int, ...]:
    w: list[int] = []
    for p in reversed(parts):
        w.extend([0] * (p - 1))
        w.append(2)
    return tuple(w)


def _tail_series(word: tuple[int, ...], cap: int) -> tuple:
    """Taylor coefficients (as mpf, indices 0..cap) of the iterated
    integral along the word, innermost form last."""
    key = (word, cap, _state["prec"])
    hit = _series_cache.get(key)
    if hit is not None:
        return hit
    coeffs = [mpmath.mpf(0)] * (cap + 1)
    coeffs[0] = mpmath.mpf(1)
    for sym in reversed(word):
        if sym == 0:
            if coeffs[0]:
                raise PoleError(f"word {word!r} is not integrable at the origin")
            coeffs = [mpmath.mpf(0)] + [coeffs[n] / n for n in range(1, cap + 1)]
        elif sym == 1:
            nxt = [mpmath.mpf(0)] * (cap + 1)
            running = mpmath.mpf(0)
            for n in range(1, cap + 1):
                running += coeffs[n - 1]
                nxt[n] = running / n
            coeffs = nxt
        elif sym == 2:
            nxt = [mpmath.mpf(0)] * (cap + 1)
            even_run = mpmath.mpf(0)  # sum of coeffs at even m below n
            odd_run = mpmath.mpf(0)
            for n in range(1, cap + 1):
                if (n - 1) % 2 == 0:
                    even_run += coeffs[n - 1]
                    nxt[n] = even_run / n
                else:
                    odd_run += coeffs[n - 1]
                    nxt[n] = odd_run / n
            coeffs = nxt
        else:
            raise ValueError(f"unknown word symbol {sym!r}")
    result = tuple(coeffs)
    _series_cache[key] = result
    return result


def _series_cap_for(z, ones: int) -> int:
    # Coefficients are bounded by C(n-1, ones-1); pick the cap so the
    # geometric tail at |z| lands far below working precision.
    target_bits = _state["prec"] + 24
    log2z = -mpmath.log(abs(z), 2)
    cap = int(target_bits / log2z) + 4 * max(ones, 1) + 48
    return max(cap, 96)


def _word_value(word: tuple[int, ...], z) -> tuple:
    """(value, rigorous tail + rounding bound) of the word integral at z."""
    if not word:
        return (mpmath.mpf(1), mpmath.mpf(0))
    ones = sum(1 for s in word if s != 0)
    cap = _series_cap_for(z, ones)
    key = (word, str(z), cap, _state["prec"])
    hit = _value_cache.get(key)
    if hit is not None:
        return hit
    coeffs = _tail_series(word, cap)
    value = mpmath.mpf(0)
    for n in range(cap, 0, -1):
        value = value * z + coeffs[n]
    value *= z
    rho = abs(z) * (cap + 1) / (cap + 2 - ones)
    if rho >= 1:
        raise RuntimeError("series cap too small for this evaluation point")
    tail = math.comb(cap, max(ones - 1, 0)) * abs(z) ** (cap + 1) / (1 - rho)
    out = (value, tail + _smear(value))
    _value_cache[key] = out
    return out


def _swap1(prefix: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(1 - s for s in reversed(prefix))


def _swap2(prefix: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(2 - s for s in reversed(prefix))


# ---------------------------------------------------------------------------
# Level one: multiple zeta values.


def _require_admissible(k) -> tuple[int, ...]:
    parts = require_index(k)
    if parts[-1] < 2:
        raise PoleError(f"divergent series: index {parts!r} must end with a part >= 2")
    return parts


def _mzv_clean(parts: tuple[int, ...]) -> EvalResult:
    key = ("zeta", parts, _state["prec"])
    hit = _result_cache.get(key)
    if hit is not None:
        return hit
    word = word_level1(parts)
    half = mpmath.mpf(1) / 2
    total = mpmath.mpf(0)
    bound = mpmath.mpf(0)
    # Split the path at 1/2: the upper piece maps onto a lower piece of
    # the reversed, letter-swapped word, turning the value into a finite
    # convolution of rapidly converging pieces.
    for j in range(len(word) + 1):
        a, ea = _word_value(_swap1(word[:j]), half)
        b, eb = _word_value(word[j:], half)
        total += a * b
        bound += abs(a) * eb + abs(b) * ea + ea * eb
    res = EvalResult(total, bound + _smear(total), "path-split-convolution")
    _result_cache[key] = res
    return res


def mzv(k) -> EvalResult:
    """The multiple zeta value of an admissible index, summing
    1/(m_1^{k_1} ... m_r^{k_r}) over 0 < m_1 < ... < m_r.

    Raises PoleError when the last part is 1.
    """
    _activate()
    parts = _require_admissible(k)
    res = _mzv_clean(parts)
    if _state["perturb"] and parts == (1, 2):
        return EvalResult(res.value * (1 + mpmath.mpf("1e-6")), res.error_bound, res.method + "+nudge")
    return res


def zeta(s: int) -> EvalResult:
    """Depth-one value; integer argument at least 2.

    Raises PoleError at and below 1, where the series diverges.
    """
    if not isinstance(s, int) or isinstance(s, bool):
        raise ValueError(f"argument must be an integer, got {s!r}")
    if s <= 1:
        raise PoleError(f"pole or divergence at argument {s}")
    return mzv((s,))


def mzsv(k) -> EvalResult:
    """The star variant: summation over weakly increasing tuples,
    equivalently the sum of plain values over all coarsenings."""
    _activate()
    parts = _require_admissible(k)
    return sum_results([mzv(c) for c in coarsenings(parts)], "coarsening-sum")


def mpl_numeric(k, z) -> EvalResult:
    """Multiple polylogarithm at a real point with |z| <= 0.95, any index
    of positive integers (admissibility is not needed inside the disk)."""
    _activate()
    parts = require_index(k)
    zv = _mpf(z)
    if abs(zv) > mpmath.mpf("0.95"):
        raise ValueError("evaluation point must satisfy |z| <= 0.95")
    if zv == 0:
        return exact_result(0, "series")
    value, err = _word_value(word_level1(parts), zv)
    return EvalResult(value, err, "series")


# ---------------------------------------------------------------------------
# Level two: T values via the involution t -> (1-t)/(1+t).


@lru_cache(maxsize=4)
def _special_point(prec: int):
    with mpmath.workprec(prec):
        return mpmath.sqrt(2) - 1


def _t0_clean(parts: tuple[int, ...]) -> EvalResult:
    key = ("t0", parts, _state["prec"])
    hit = _result_cache.get(key)
    if hit is not None:
        return hit
    word = word_level2(parts)
    zstar = _special_point(_state["prec"])
    total = mpmath.mpf(0)
    bound = mpmath.mpf(0)
    # The fixed point of t -> (1-t)/(1+t) splits the path; the involution
    # exchanges the two one-forms up to the constant factors below.
    factor = mpmath.mpf(1)
    for j in range(len(word) + 1):
        if j > 0:
            factor *= 2 if word[j - 1] == 0 else mpmath.mpf(1) / 2
        a, ea = _word_value(_swap2(word[:j]), zstar)
        b, eb = _word_value(word[j:], zstar)
        total += factor * a * b
        bound += factor * (abs(a) * eb + abs(b) * ea + ea * eb)
    res = EvalResult(total, bound + _smear(total), "path-split-convolution")
    _result_cache[key] = res
    return res


def t0_value(k) -> EvalResult:
    """The parity-restricted zeta value: the defining sum runs over
    0 < m_1 < ... < m_r with m_i = i mod 2."""
    _activate()
    parts = _require_admissible(k)
    return _t0_clean(parts)


def t_value(k) -> EvalResult:
    """2^depth times the parity-restricted value."""
    parts = _require_admissible(k)
    return t0_value(parts).scale(2 ** depth(parts))


# ---------------------------------------------------------------------------
# Direct-sum oracles with analytic tail bounds.


def _tail_bound_direct(parts: tuple[int, ...], cutoff: int):
    """Upper bound for the discarded terms of the nested sum truncated at
    m_r <= cutoff.

    Relax every inner part >= 2 to an independent full sum (factor Z),
    keep the q inner parts equal to 1 mutually ordered so their harmonic
    product is at most (1 + ln m)^q / q!, then compare the remaining sum
    over m > cutoff with an integral plus one maximal term.
    """
    kr = parts[-1]
    q = sum(1 for p in parts[:-1] if p == 1)
    z_factor = mpmath.mpf(1)
    for p in parts[:-1]:
        if p >= 2:
            z_factor *= 1 + mpmath.mpf(1) / (p - 1)
    v0 = 1 + mpmath.log(cutoff)
    integral = (
        mpmath.e ** (kr - 1)
        * mpmath.gammainc(q + 1, (kr - 1) * v0)
        / mpmath.mpf(kr - 1) ** (q + 1)
    )

    def g(x):
        return (1 + mpmath.log(x)) ** q * mpmath.mpf(x) ** (-kr)

    peak = mpmath.e ** (q / kr - 1)
    g_max = g(cutoff) if cutoff >= peak else g(peak)
    return z_factor * (integral + g_max) / math.factorial(q)


def _nested_sum(parts: tuple[int, ...], cutoff: int, parity: bool):
    import numpy as np

    m = np.arange(cutoff + 1, dtype=np.float64)
    m[0] = 1.0  # placeholder; slot 0 is zeroed after each power
    h = np.ones(cutoff + 1, dtype=np.float64)
    for i, p in enumerate(parts):
        if i > 0:
            prefix = np.concatenate(([0.0], np.cumsum(h)[:-1]))
            h = prefix
        h = h * m ** float(-p)
        h[0] = 0.0
        if parity:
            mask = (np.arange(cutoff + 1) % 2) == ((i + 1) % 2)
            h = np.where(mask, h, 0.0)
    total = float(np.sum(h))
    # float64 rounding: relative error per cumsum stage grows linearly in
    # the length; r stages over cutoff terms, with margin.
    rounding = abs(total) * len(parts) * cutoff * 2.3e-16 * 8
    return mpmath.mpf(total), mpmath.mpf(rounding)


def mzv_direct(k, cutoff: int = 100_000) -> EvalResult:
    """Truncated nested sum for the multiple zeta value.  Slow and
    low-accuracy by design; its honest tail bound makes it an oracle."""
    _activate()
    parts = _require_admissible(k)
    value, rounding = _nested_sum(parts, int(cutoff), parity=False)
    return EvalResult(value, _tail_bound_direct(parts, int(cutoff)) + rounding, "direct-sum")


def t0_direct(k, cutoff: int = 100_000) -> EvalResult:
    """Truncated nested sum for the parity-restricted value.  The level
    one tail bound applies: dropping the parity constraint only adds
    positive terms."""
    _activate()
    parts = _require_admissible(k)
    value, rounding = _nested_sum(parts, int(cutoff), parity=True)
    return EvalResult(value, _tail_bound_direct(parts, int(cutoff)) + rounding, "direct-sum-parity")


# ---------------------------------------------------------------------------
# The polylogarithm just below 1, and exact zeta values at integers <= 0.


@lru_cache(maxsize=None)
def _bernoulli_list(n: int) -> tuple[Fraction, ...]:
    items = [Fraction(1)]
    for m in range(1, n + 1):
        acc = Fraction(0)
        for j in range(m):
            acc += math.comb(m + 1, j) * items[j]
        items.append(-acc / (m + 1))
    return tuple(items)


def bernoulli_number(n: int) -> Fraction:
    """Exact Bernoulli number (convention with value -1/2 at n = 1).

    >>> bernoulli_number(4)
    Fraction(-1, 30)
    """
    if n < 0:
        raise ValueError("index must be nonnegative")
    return _bernoulli_list(n)[n]


def zeta_nonpositive(n: int) -> Fraction:
    """Exact zeta value at an integer <= 0."""
    if n > 0:
        raise ValueError("argument must be <= 0")
    if n == 0:
        return Fraction(-1, 2)
    m = -n
    return -bernoulli_number(m + 1) / (m + 1)


def polylog_near_one(k: int, u) -> EvalResult:
    """Li_k(e^(-u)) for integer k >= 2 and u > 0.

    For u >= 1 the defining series converges fast.  Below 1 the series in
    u is used instead: a single logarithmic term
    (-u)^(k-1)/(k-1)! (H_(k-1) - ln u) plus sum_j zeta(k-j) (-u)^j / j!
    over j != k-1, with exact values at nonpositive integers.  The two
    branches agree at the seam, which tests pin down.
    """
    _activate()
    if not isinstance(k, int) or isinstance(k, bool) or k < 2:
        raise ValueError(f"k must be an integer >= 2, got {k!r}")
    uv = _mpf(u)
    if uv <= 0:
        raise ValueError("u must be positive")
    if uv >= 1:
        n_terms = int((_state["prec"] + 16) * math.log(2) / float(uv)) + 2
        q = mpmath.e ** (-uv)
        qn = mpmath.mpf(1)
        total = mpmath.mpf(0)
        for n in range(1, n_terms + 1):
            qn *= q
            total += qn / mpmath.mpf(n) ** k
        tail = qn * q / (1 - q)
        return EvalResult(total, tail + _smear(total), "exponential-series")

    j_top = _state["prec"] // 2 + 48
    harmonic = sum(Fraction(1, i) for i in range(1, k))
    log_term = (-uv) ** (k - 1) / math.factorial(k - 1) * (_mpf(harmonic) - mpmath.log(uv))
    total = log_term
    bound = mpmath.mpf(0)
    for j in range(j_top + 1):
        if j == k - 1:
            continue
        if k - j >= 2:
            zr = mzv((k - j,))
            zval, zerr = zr.value, zr.error_bound
        else:
            zq = zeta_nonpositive(k - j)
            zval, zerr = _mpf(zq), mpmath.mpf(0)
        term = zval * (-uv) ** j / math.factorial(j)
        total += term
        bound += zerr * uv**j / math.factorial(j)
    # Remaining terms involve zeta at negative integers; via the Bernoulli
    # growth rate |zeta(-m)| <= 4 m! / (2 pi)^(m+1) they are dominated by
    # a geometric series in u/(2 pi).
    ratio = uv / (2 * mpmath.pi)
    tail = 4 / (2 * mpmath.pi) * uv**k * ratio ** (j_top + 1 - k) / (1 - ratio)
    return EvalResult(total, bound + tail + _smear(total), "near-one-expansion")


# ---------------------------------------------------------------------------
# Checks owned by this module.


def duality_numeric_check(max_weight: int = 8, tolerance: float = 1e-8):
    """Value equality under index duality, across every admissible index
    of weight up to max_weight (each dual pair checked once)."""
    out = []
    seen = set()
    for w in range(2, max_weight + 1):
        for k in _admissible_indices(w):
            d = dual(k)
            if (d, k) in seen:
                continue
            seen.add((k, d))
            watch = Stopwatch()
            out.append(
                report_numeric(
                    "mzv.duality",
                    {"index": k, "dual": d},
                    mzv(k),
                    mzv(d),
                    tolerance,
                    elapsed=watch.elapsed(),
                )
            )
    return out


def _admissible_indices(weight: int) -> list[tuple[int, ...]]:
    out = []
    for r in range(1, weight):
        for comp in compositions(weight - r, r):
            cand = tuple(c + 1 for c in comp)
            if cand[-1] >= 2:
                out.append(cand)
    return sorted(out)


_ORACLE_SLATE_ZETA = ((2,), (3,), (4,), (1, 2), (2, 2), (1, 3), (1, 1, 2), (2, 3), (1, 2, 2), (1, 1, 1, 2))
_ORACLE_SLATE_T0 = ((2,), (3,), (1, 2), (2, 2), (1, 1, 2), (2, 3))


def direct_oracle_check(cutoff: int = 100_000, tolerance: float = 1e-8):
    """Convolution route against the truncated nested sum, both families.

    The oracle's tail bound enters the pass criterion, so the comparison
    stays honest even where the truncation error dwarfs the tolerance.
    """
    out = []
    for parts in _ORACLE_SLATE_ZETA:
        watch = Stopwatch()
        out.append(
            report_numeric(
                "mzv.direct-sum-crosscheck",
                {"index": parts, "cutoff": cutoff},
                mzv(parts),
                mzv_direct(parts, cutoff),
                tolerance,
                elapsed=watch.elapsed(),
            )
        )
    for parts in _ORACLE_SLATE_T0:
        watch = Stopwatch()
        out.append(
            report_numeric(
                "t0.direct-sum-crosscheck",
                {"index": parts, "cutoff": cutoff},
                t0_value(parts),
                t0_direct(parts, cutoff),
                tolerance,
                elapsed=watch.elapsed(),
            )
        )
    return out
