"""Scalar special-function kernels with attached error estimates.

All kernels are pure functions returning a :class:`FnEvalResult` (value plus
a claimed absolute-error bound).  The error fields are engineering bounds --
truncation estimate plus a rounding allowance -- kept honest by the test
suite rather than by formal proof.  Private ``_raw`` helpers return bare
floats and are what the quadrature/series hot loops call.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import (
    DomainError,
    PoleError,
    RangeOverflowError,
    RouteInconsistencyError,
    UnsupportedOrderError,
)

__all__ = [
    "FnEvalResult",
    "ConstantsCache",
    "get_constants",
    "log_gamma",
    "digamma",
    "polygamma",
    "lambda_fn",
    "sici",
    "sine_integral",
    "exp_integral",
    "zeta_family",
    "stieltjes_gamma1",
    "log_barnes_g",
    "clausen_cl2",
    "bernoulli_poly",
]

_EPS = 2.220446049250313e-16
_LOG_2PI = math.log(2.0 * math.pi)


@dataclass(frozen=True)
class FnEvalResult:
    """A function value with a claimed absolute-error bound."""

    value: float | complex
    abs_err: float

    def __post_init__(self) -> None:
        if self.abs_err < 0.0 or not math.isfinite(self.abs_err):
            raise ValueError("abs_err must be finite and non-negative")


def _require_finite(x: float, name: str = "x") -> float:
    x = float(x)
    if not math.isfinite(x):
        raise DomainError(f"{name} must be finite, got {x!r}")
    return x


# ---------------------------------------------------------------------------
# Bernoulli numbers (exact) and derived coefficient tables
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _bernoulli_fractions(n_max: int) -> tuple[Fraction, ...]:
    """B_0 .. B_{n_max} via the defining recurrence, exactly."""
    bs = [Fraction(1)]
    for m in range(1, n_max + 1):
        acc = Fraction(0)
        for k in range(m):
            acc += math.comb(m + 1, k) * bs[k]
        bs.append(-acc / (m + 1))
    return tuple(bs)


@lru_cache(maxsize=None)
def _bernoulli_float(n: int) -> float:
    return float(_bernoulli_fractions(max(n, 2))[n])


# ---------------------------------------------------------------------------
# Riemann zeta at integer s >= 2 (cached; used by several Taylor series)
# ---------------------------------------------------------------------------

def _hurwitz_em(s: float, a: float, order: int = 0, n_front: int = 24,
                k_tail: int = 12) -> float:
    """Euler-Maclaurin evaluation of zeta(s, a) or its first/second
    s-derivative (``order`` 0, 1 or 2).  Requires s > 1, a > 0."""
    front0 = front1 = front2 = 0.0
    for n in range(n_front):
        base = a + n
        p = base ** (-s)
        front0 += p
        if order >= 1:
            lg = math.log(base)
            front1 -= lg * p
            if order >= 2:
                front2 += lg * lg * p
    q = a + n_front
    lq = math.log(q)
    q1s = q ** (1.0 - s)
    qs = q ** (-s)
    sm1 = s - 1.0
    total0 = front0 + q1s / sm1 + 0.5 * qs
    total1 = front1 - q1s * (lq / sm1 + 1.0 / sm1 ** 2) - 0.5 * lq * qs
    total2 = (front2 + q1s * (lq * lq / sm1 + 2.0 * lq / sm1 ** 2
                              + 2.0 / sm1 ** 3) + 0.5 * lq * lq * qs)
    # tail: sum_k B_{2k}/(2k)! * (s)_{2k-1} * q^{-s-2k+1}
    pw = qs / q  # q^{-s-1}
    prod = s
    sum_inv = 1.0 / s
    sum_inv2 = 1.0 / (s * s)
    fact = 1.0
    j_hi = 1
    for k in range(1, k_tail + 1):
        fact *= (2 * k - 1) * (2 * k)
        while j_hi < 2 * k - 1:
            sj = s + j_hi
            prod *= sj
            sum_inv += 1.0 / sj
            sum_inv2 += 1.0 / (sj * sj)
            j_hi += 1
        c = _bernoulli_float(2 * k) / fact
        t0 = c * prod * pw
        total0 += t0
        if order >= 1:
            total1 += t0 * (sum_inv - lq)
            if order >= 2:
                total2 += t0 * (sum_inv * sum_inv - sum_inv2
                                - 2.0 * sum_inv * lq + lq * lq)
        pw /= q * q
    return (total0, total1, total2)[order]


@lru_cache(maxsize=None)
def _zeta_int(k: int) -> float:
    """zeta(k) for integer k >= 2."""
    if k > 52:
        # 2^-k already below double precision relative to 1
        return 1.0 + 2.0 ** (-k) + 3.0 ** (-k)
    return _hurwitz_em(float(k), 1.0)


@lru_cache(maxsize=None)
def _zeta_prime_int(k: int) -> float:
    """zeta'(k) for integer k >= 2."""
    if k > 56:
        return -math.log(2.0) * 2.0 ** (-k) - math.log(3.0) * 3.0 ** (-k)
    return _hurwitz_em(float(k), 1.0, order=1)


# ---------------------------------------------------------------------------
# log Gamma
# ---------------------------------------------------------------------------

_STIRLING_TERMS = 9


def _stirling_lgamma(x: float) -> float:
    """Asymptotic series, reliable for x >= 10."""
    acc = (x - 0.5) * math.log(x) - x + 0.5 * _LOG_2PI
    inv2 = 1.0 / (x * x)
    pw = 1.0 / x
    for j in range(1, _STIRLING_TERMS + 1):
        acc += _bernoulli_float(2 * j) / ((2 * j) * (2 * j - 1)) * pw
        pw *= inv2
    return acc


@lru_cache(maxsize=None)
def _lgamma1p_coeffs() -> tuple[float, ...]:
    # log Gamma(1+y) = -gamma*y + sum_{k>=2} (-1)^k zeta(k)/k * y^k
    return tuple((-1.0) ** k * _zeta_int(k) / k for k in range(2, 58))


def _lgamma1p(y: float) -> float:
    """log Gamma(1+y) for |y| <= 0.5, accurate near the zero at y=0."""
    acc = 0.0
    pw = y * y
    for c in _lgamma1p_coeffs():
        t = c * pw
        acc += t
        if abs(t) < 1e-18 * (abs(acc) + 1e-30):
            break
        pw *= y
    return acc - _euler_gamma() * y


def _lgamma(x: float) -> float:
    """log Gamma(x) for x > 0."""
    if x <= 0.0:
        raise DomainError(f"log_gamma requires x > 0, got {x}")
    if x < 0.5:
        return _lgamma1p(x) - math.log(x)
    if x <= 1.5:
        return _lgamma1p(x - 1.0)
    if x <= 2.5:
        w = x - 2.0
        return _lgamma1p(w) + math.log1p(w)
    if x >= 10.0:
        v = _stirling_lgamma(x)
        if math.isinf(v):
            raise RangeOverflowError(f"log Gamma overflows at x={x}")
        return v
    shift = 0.0
    y = x
    while y < 10.0:
        shift += math.log(y)
        y += 1.0
    return _stirling_lgamma(y) - shift


def log_gamma(x: float) -> FnEvalResult:
    """log Gamma(x) for x > 0, via a shifted asymptotic evaluation."""
    x = _require_finite(x)
    v = _lgamma(x)
    return FnEvalResult(v, 1e-14 * max(1.0, abs(v)))


# ---------------------------------------------------------------------------
# digamma (real and complex)
# ---------------------------------------------------------------------------

_PSI_SHIFT_TO = 8.0
_PSI_TERMS = 7


def _digamma_pos(x: float) -> float:
    """psi(x) for x > 0."""
    acc = 0.0
    while x < _PSI_SHIFT_TO:
        acc -= 1.0 / x
        x += 1.0
    acc += math.log(x) - 0.5 / x
    inv2 = 1.0 / (x * x)
    pw = inv2
    for j in range(1, _PSI_TERMS + 1):
        acc -= _bernoulli_float(2 * j) / (2 * j) * pw
        pw *= inv2
    return acc


def _cot_pi(x: float) -> float:
    """cot(pi*x) computed from the fractional part, for accuracy."""
    f = x - math.floor(x)
    if f == 0.0:
        raise PoleError(f"cot(pi*x) pole at x={x}")
    # use the half-period symmetry to keep the argument small
    if f > 0.5:
        return -math.cos(math.pi * (1.0 - f)) / math.sin(math.pi * (1.0 - f))
    return math.cos(math.pi * f) / math.sin(math.pi * f)


def _digamma_real(x: float) -> float:
    if x <= 0.0:
        if x == math.floor(x):
            raise PoleError(f"digamma pole at non-positive integer x={x}")
        # reflection: psi(x) = psi(1-x) - pi*cot(pi*x)
        return _digamma_pos(1.0 - x) - math.pi * _cot_pi(x)
    return _digamma_pos(x)


def _digamma_complex(z: complex) -> complex:
    acc = 0.0 + 0.0j
    while abs(z) < _PSI_SHIFT_TO:
        if z == 0:
            raise PoleError("digamma pole at 0")
        acc -= 1.0 / z
        z += 1.0
    acc += cmath.log(z) - 0.5 / z
    inv2 = 1.0 / (z * z)
    pw = inv2
    for j in range(1, _PSI_TERMS + 1):
        acc -= _bernoulli_float(2 * j) / (2 * j) * pw
        pw *= inv2
    return acc


def digamma(z: float | complex) -> FnEvalResult:
    """psi(z); real arguments give exactly-real results."""
    if isinstance(z, complex) and z.imag != 0.0:
        if not (math.isfinite(z.real) and math.isfinite(z.imag)):
            raise DomainError("digamma requires finite arguments")
        v = _digamma_complex(z)
        return FnEvalResult(v, 1e-13 * max(1.0, abs(v)))
    x = _require_finite(z.real if isinstance(z, complex) else z)
    if x <= 0.0 and x == math.floor(x):
        raise PoleError(f"digamma pole at non-positive integer x={x}")
    v = _digamma_real(x)
    if isinstance(z, complex):
        return FnEvalResult(complex(v, 0.0), 1e-13 * max(1.0, abs(v)))
    return FnEvalResult(v, 1e-13 * max(1.0, abs(v)))


def _psi1(x: float) -> float:
    """trigamma via psi'(x) = zeta(2, x)."""
    return _hurwitz_em(2.0, x)


def _psi2(x: float) -> float:
    """tetragamma via psi''(x) = -2 zeta(3, x)."""
    return -2.0 * _hurwitz_em(3.0, x)


def polygamma(k: int, x: float) -> FnEvalResult:
    """psi'(x) or psi''(x), through the Hurwitz-zeta relation."""
    if k not in (1, 2):
        raise UnsupportedOrderError(f"polygamma order must be 1 or 2, got {k}")
    x = _require_finite(x)
    if x <= 0.0:
        raise DomainError(f"polygamma requires x > 0, got {x}")
    v = _psi1(x) if k == 1 else _psi2(x)
    return FnEvalResult(v, 1e-13 * max(1.0, abs(v)))


@lru_cache(maxsize=1)
def _euler_gamma() -> float:
    # gamma = -psi(1); deeper shift than the general kernel, since this
    # constant feeds nearly every closed form downstream
    acc = 0.0
    x = 1.0
    while x < 24.0:
        acc -= 1.0 / x
        x += 1.0
    acc += math.log(x) - 0.5 / x
    inv2 = 1.0 / (x * x)
    pw = inv2
    for j in range(1, 10):
        acc -= _bernoulli_float(2 * j) / (2 * j) * pw
        pw *= inv2
    return -acc


# ---------------------------------------------------------------------------
# Lambda: the regularised sum  lim ( sum j/(j^2+v^2) - log n )
# ---------------------------------------------------------------------------

_LAMBDA_N = 10_000


def _lambda_series(v: float, n_terms: int = _LAMBDA_N) -> tuple[float, float]:
    """Direct series with an Euler-Maclaurin tail; returns (value, err)."""
    v2 = v * v
    acc = 0.0
    comp = 0.0
    for j in range(1, n_terms):
        t = j / (j * j + v2) - math.log1p(1.0 / j)
        y = t - comp
        s = acc + y
        comp = (s - acc) - y
        acc = s
    n = float(n_terms)
    # integral_N^inf [x/(x^2+v^2) - log(1+1/x)] dx, rearranged so that no
    # two ~N*log(N) quantities are subtracted
    tail_int = ((n + 1.0) * math.log1p(1.0 / n) - 1.0
                - 0.5 * math.log1p(v2 / (n * n)))
    f_n = n / (n * n + v2) - math.log1p(1.0 / n)
    fp_n = (v2 - n * n) / (n * n + v2) ** 2 + 1.0 / (n * (n + 1.0))
    tail = tail_int + 0.5 * f_n - fp_n / 12.0
    err = abs(fp_n) * 1e-3 + 40.0 * _EPS + n_terms * _EPS * 1e-2
    return acc + tail, err


def _lambda_digamma(v: float) -> tuple[float, float]:
    if v == 0.0:
        g = _euler_gamma()
        return g, 1e-14
    val = -_digamma_complex(complex(1.0, v)).real
    return val, 1e-13 * max(1.0, abs(val))


def lambda_fn(v: float) -> FnEvalResult:
    """The log-regularised sum; computed by two routes that must agree."""
    v = _require_finite(v, "v")
    a_val, a_err = _lambda_digamma(v)
    b_val, b_err = _lambda_series(v)
    budget = a_err + b_err
    if abs(a_val - b_val) > 10.0 * max(budget, 1e-12):
        raise RouteInconsistencyError(
            f"lambda routes disagree at v={v}: {a_val} vs {b_val}")
    return FnEvalResult(a_val, max(a_err, b_err))


# ---------------------------------------------------------------------------
# sine / cosine integrals
# ---------------------------------------------------------------------------

def _e1_cf(z: complex) -> complex:
    """E1(z) by a modified-Lentz continued fraction; |z| should be >= ~3."""
    tiny = 1e-300
    b = z + 1.0
    c = 1.0 / tiny
    d = 1.0 / b
    h = d
    for i in range(1, 40_000):
        a = -float(i * i)
        b += 2.0
        d = a * d + b
        if d == 0:
            d = tiny
        c = b + a / c
        if c == 0:
            c = tiny
        d = 1.0 / d
        delta = c * d
        h *= delta
        if abs(delta - 1.0) < 5e-17:
            break
    return h * cmath.exp(-z)


def _sici_raw(x: float) -> tuple[float, float]:
    """(Si(x), Ci(x)) for x > 0."""
    if x <= 4.0:
        x2 = x * x
        si = x
        u = x
        k = 0
        while True:
            k += 1
            u *= -x2 / ((2 * k) * (2 * k + 1))
            t = u / (2 * k + 1)
            si += t
            if abs(t) < 1e-18 * abs(si):
                break
        cin = 0.0
        v = -1.0
        k = 0
        while True:
            k += 1
            v *= -x2 / ((2 * k - 1) * (2 * k))
            t = v / (2 * k)
            cin += t
            if abs(t) < 1e-18 * max(abs(cin), 1e-30):
                break
        ci = _euler_gamma() + math.log(x) - cin
        return si, ci
    e1 = _e1_cf(complex(0.0, x))
    return e1.imag + 0.5 * math.pi, -e1.real


def sici(x: float) -> tuple[FnEvalResult, FnEvalResult]:
    """(Si(x), Ci(x)); Ci has a logarithmic singularity at 0."""
    x = _require_finite(x)
    if x < 0.0:
        raise DomainError(f"sici requires x >= 0, got {x}")
    if x == 0.0:
        raise PoleError("Ci(0) diverges logarithmically; "
                        "use sine_integral for Si(0)")
    si, ci = _sici_raw(x)
    err = 1e-14 + 1e-15 * abs(si)
    return (FnEvalResult(si, err), FnEvalResult(ci, 1e-14 + 1e-15 * abs(ci)))


def sine_integral(x: float) -> FnEvalResult:
    """Si(x) alone, defined for all x >= 0."""
    x = _require_finite(x)
    if x < 0.0:
        raise DomainError(f"sine_integral requires x >= 0, got {x}")
    if x == 0.0:
        return FnEvalResult(0.0, 0.0)
    si, _ = _sici_raw(x)
    return FnEvalResult(si, 1e-14 + 1e-15 * abs(si))


# lattice caches: the series catalog needs Si/si/Ci at multiples of pi
@lru_cache(maxsize=None)
def _si_small_at_pi_mult(n: int, twice: bool = True) -> float:
    """si(2*pi*n) (twice=True) or si(pi*n); asymptotic beyond n=200."""
    x = (2.0 * math.pi if twice else math.pi) * n
    if n <= 200:
        si, _ = _sici_raw(x)
        return si - 0.5 * math.pi
    sgn = 1.0 if twice else (-1.0) ** (n % 2)
    x2 = x * x
    f = (1.0 / x) * (1.0 - 2.0 / x2 + 24.0 / (x2 * x2)
                     - 720.0 / (x2 * x2 * x2))
    return -sgn * f


@lru_cache(maxsize=None)
def _ci_at_2pi_mult(n: int) -> float:
    """Ci(2*pi*n); asymptotic beyond n=200."""
    x = 2.0 * math.pi * n
    if n <= 200:
        _, ci = _sici_raw(x)
        return ci
    x2 = x * x
    return -(1.0 / x2) * (1.0 - 6.0 / x2 + 120.0 / (x2 * x2))


# ---------------------------------------------------------------------------
# exponential integral  Ei(x) for x < 0
# ---------------------------------------------------------------------------

def exp_integral(x: float) -> FnEvalResult:
    """Ei(x) for strictly negative x."""
    x = _require_finite(x)
    if x >= 0.0:
        raise DomainError(f"exp_integral requires x < 0, got {x}")
    u = -x
    if u <= 1.0:
        # Ei(-u) = gamma + log u + sum (-1)^k u^k / (k * k!)
        acc = _euler_gamma() + math.log(u)
        term = 1.0
        k = 0
        while True:
            k += 1
            term *= -u / k
            t = term / k
            acc += t
            if abs(t) < 1e-18 * max(abs(acc), 1e-30):
                break
        v = acc
    else:
        v = -_e1_cf(complex(u, 0.0)).real
    return FnEvalResult(v, 1e-14 * max(1.0, abs(v)))


# ---------------------------------------------------------------------------
# zeta family dispatcher
# ---------------------------------------------------------------------------

def zeta_family(kind: str, s: float | None = None,
                a: float | None = None) -> FnEvalResult:
    """zeta(s), zeta(s,a), zeta'(s), zeta''(2) and zeta'(-1).

    zeta'(-1) is *constructed* from zeta'(2) through
    zeta'(-1) = (1 - gamma - log 2pi)/12 + zeta'(2)/(2 pi^2),
    which doubles as a cross-check against its independently tabulated value.
    """
    if kind in ("zeta", "zeta_prime"):
        if s is None or not s > 1.0:
            raise DomainError(f"{kind} requires s > 1, got {s}")
        v = _hurwitz_em(float(s), 1.0, order=0 if kind == "zeta" else 1)
    elif kind == "hurwitz":
        if s is None or not s > 1.0:
            raise DomainError(f"hurwitz requires s > 1, got {s}")
        if a is None or not a > 0.0:
            raise DomainError(f"hurwitz requires a > 0, got {a}")
        v = _hurwitz_em(float(s), float(a))
    elif kind == "zeta_prime2_at_2":
        v = _hurwitz_em(2.0, 1.0, order=2)
    elif kind == "zeta_prime_neg1":
        g = _euler_gamma()
        v = (1.0 - g - _LOG_2PI) / 12.0 + _hurwitz_em(2.0, 1.0, order=1) / (
            2.0 * math.pi ** 2)
    else:
        raise DomainError(f"unknown zeta kind {kind!r}")
    return FnEvalResult(v, 1e-13 * max(1.0, abs(v)))


def _hurwitz(s: float, a: float) -> float:
    return _hurwitz_em(s, a)


def _hurwitz_prime(s: float, a: float) -> float:
    """d/ds zeta(s, a): used for the log-weighted tail expansions."""
    return _hurwitz_em(s, a, order=1)


# ---------------------------------------------------------------------------
# first Stieltjes constant
# ---------------------------------------------------------------------------

@lru_cache(maxsize=1)
def _gamma1_value() -> float:
    n = 100_000
    acc = 0.0
    comp = 0.0
    log = math.log
    for k in range(2, n + 1):
        t = log(k) / k
        y = t - comp
        s = acc + y
        comp = (s - acc) - y
        acc = s
    ln = log(n)
    # corrections: -f(N)/2 - f'(N)/12 with f = log x / x
    return acc - 0.5 * ln * ln - 0.5 * ln / n - (1.0 - ln) / (12.0 * n * n)


def stieltjes_gamma1() -> FnEvalResult:
    """gamma_1, from its limit definition with Euler-Maclaurin corrections."""
    return FnEvalResult(_gamma1_value(), 1e-12)


# ---------------------------------------------------------------------------
# Barnes G
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _lnG_taylor_coeffs() -> tuple[float, ...]:
    # log G(1+w) = (log(2pi)-1)/2 * w - (1+gamma)/2 * w^2
    #              + sum_{n>=2} (-1)^n zeta(n)/(n+1) * w^(n+1)
    return tuple((-1.0) ** n * _zeta_int(n) / (n + 1) for n in range(2, 60))


def _lnG_base(w: float) -> float:
    """log G(1+w) for |w| <= 0.5."""
    acc = 0.5 * (_LOG_2PI - 1.0) * w - 0.5 * (1.0 + _euler_gamma()) * w * w
    pw = w ** 3
    for c in _lnG_taylor_coeffs():
        t = c * pw
        acc += t
        if abs(t) < 1e-18 * (abs(acc) + 1e-30):
            break
        pw *= w
    return acc


def _lnG(x: float) -> float:
    """log G(x) for 0 < x <= 4, via Taylor plus the functional equation."""
    if x < 0.5:
        return _lnG(x + 1.0) - _lgamma(x)
    if x > 1.5:
        return _lnG(x - 1.0) + _lgamma(x - 1.0)
    return _lnG_base(x - 1.0)


def log_barnes_g(x: float) -> FnEvalResult:
    """log G(x) on (0, 4]."""
    x = _require_finite(x)
    if x <= 0.0:
        raise DomainError(f"log_barnes_g requires x > 0, got {x}")
    if x > 4.0:
        raise DomainError(f"log_barnes_g implemented only on (0, 4], got {x}")
    v = _lnG(x)
    return FnEvalResult(v, 1e-13 * max(1.0, abs(v)))


# ---------------------------------------------------------------------------
# Clausen function Cl2
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _cl2_coeffs() -> tuple[float, ...]:
    # Cl2(t) = t - t*log t + sum zeta(2n)/(n(2n+1)) * t * (t/2pi)^(2n)
    return tuple(_zeta_int(2 * n) / (n * (2 * n + 1)) for n in range(1, 40))


def _cl2(theta: float) -> float:
    t = math.fmod(theta, 2.0 * math.pi)
    if t < 0.0:
        return -_cl2(-t)
    if t == 0.0:
        return 0.0
    if t > math.pi:
        return -_cl2(2.0 * math.pi - t)
    acc = t - t * math.log(t)
    r = (t / (2.0 * math.pi)) ** 2
    pw = t * r
    for c in _cl2_coeffs():
        term = c * pw
        acc += term
        if abs(term) < 1e-18 * (abs(acc) + 1e-30):
            break
        pw *= r
    return acc


def clausen_cl2(theta: float) -> FnEvalResult:
    """Cl2(theta) = sum sin(n theta)/n^2, with periodic reduction."""
    theta = _require_finite(theta, "theta")
    v = _cl2(theta)
    return FnEvalResult(v, 2e-15 * (1.0 + abs(v)))


# ---------------------------------------------------------------------------
# Bernoulli polynomials (exact rational coefficients, n <= 12)
# ---------------------------------------------------------------------------

_BPOLY_MAX = 12


@lru_cache(maxsize=None)
def _bpoly_coeffs(n: int) -> tuple[float, ...]:
    """Coefficients of B_n(x), highest power first."""
    bs = _bernoulli_fractions(n)
    cs = [Fraction(math.comb(n, k)) * bs[k] for k in range(n + 1)]
    return tuple(float(c) for c in cs)


def _bpoly(n: int, x: float) -> float:
    acc = 0.0
    for c in _bpoly_coeffs(n):
        acc = acc * x + c
    return acc


def bernoulli_poly(n: int, x: float) -> FnEvalResult:
    """B_n(x) by exact polynomial evaluation, for 0 <= n <= 12."""
    if not isinstance(n, int) or n < 0:
        raise UnsupportedOrderError(f"order must be a non-negative int, got {n}")
    if n > _BPOLY_MAX:
        raise UnsupportedOrderError(f"order capped at {_BPOLY_MAX}, got {n}")
    x = _require_finite(x)
    v = _bpoly(n, x)
    scale = sum(abs(c) * max(1.0, abs(x)) ** k
                for k, c in enumerate(reversed(_bpoly_coeffs(n))))
    return FnEvalResult(v, (n + 1) * _EPS * scale)


# ---------------------------------------------------------------------------
# shared constants
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ConstantsCache:
    """Read-only bundle of the constants the catalogs keep reaching for."""

    gamma: float
    gamma1: float
    log_2pi: float
    zeta2: float
    zeta3: float
    zeta_prime_2: float
    zeta_prime_neg1: float
    log_A: float
    catalan: float


def _catalan_value() -> float:
    # beta(2) by alternating-series acceleration (Chebyshev weights)
    n = 40
    d = (3.0 + math.sqrt(8.0)) ** n
    d = 0.5 * (d + 1.0 / d)
    b = -1.0
    c = -d
    s = 0.0
    for k in range(n):
        c = b - c
        s += c / (2 * k + 1) ** 2
        b *= (k + n) * (k - n) / ((k + 0.5) * (k + 1.0))
    return s / d


@lru_cache(maxsize=1)
def get_constants() -> ConstantsCache:
    g = _euler_gamma()
    zp2 = _hurwitz_em(2.0, 1.0, order=1)
    zp_neg1 = (1.0 - g - _LOG_2PI) / 12.0 + zp2 / (2.0 * math.pi ** 2)
    return ConstantsCache(
        gamma=g,
        gamma1=_gamma1_value(),
        log_2pi=_LOG_2PI,
        zeta2=math.pi ** 2 / 6.0,
        zeta3=_zeta_int(3),
        zeta_prime_2=zp2,
        zeta_prime_neg1=zp_neg1,
        log_A=1.0 / 12.0 - zp_neg1,
        catalan=_catalan_value(),
    )
