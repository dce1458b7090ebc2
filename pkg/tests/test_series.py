"""Series engine and catalog tests."""

import math

import numpy as np
import pytest

from gammalab import kernels as K
from gammalab.errors import DomainError, EvaluationError, UnknownKeyError
from gammalab.series import (
    Alternating,
    ClosedTail,
    EulerMaclaurin,
    NoTail,
    SeriesSpec,
    cvz_alternating,
    sum_series,
)
from gammalab.series_catalog import (
    power_series_eval,
    sum_catalog,
    _tail_pow_quad,
)

C = K.get_constants()
PI = math.pi


# ---------------------------------------------------------------------------
# generic engine
# ---------------------------------------------------------------------------

def test_engine_quarter_square_telescoping_reference():
    # telescoping oracle: sum 1/(4n^2-1) = (1 - 1/(2N+1))/2 -> 1/2
    spec = SeriesSpec(term=lambda n: 1.0 / (4.0 * n * n - 1.0), n0=1,
                      tail=EulerMaclaurin(
                          degree=2,
                          smooth=lambda x: 1.0 / (4.0 * x * x - 1.0)),
                      max_terms=10_000)
    r = sum_series(spec)
    assert r.value == pytest.approx(0.5, abs=1e-12)
    assert abs(r.value - 0.5) <= r.abs_err


def test_engine_zero_series():
    spec = SeriesSpec(term=lambda n: 0.0, n0=1, tail=NoTail(), max_terms=50)
    r = sum_series(spec)
    assert r.value == 0.0 and r.abs_err < 1e-13


def test_engine_em_degree_two():
    spec = SeriesSpec(term=lambda n: n / (4.0 * n * n - 1.0) ** 2, n0=1,
                      tail=EulerMaclaurin(
                          degree=2,
                          smooth=lambda x: x / (4.0 * x * x - 1.0) ** 2),
                      max_terms=10_000)
    r = sum_series(spec)
    assert r.value == pytest.approx(0.125, abs=1e-10)


def test_engine_closed_tail():
    # geometric series with exact tail
    spec = SeriesSpec(term=lambda n: 0.5 ** n, n0=1,
                      tail=ClosedTail(lambda n0: (0.5 ** n0 * 2.0, 1e-16)),
                      max_terms=30)
    r = sum_series(spec)
    assert r.value == pytest.approx(1.0, rel=1e-14)


def test_engine_alternating_and_tail_bound_property():
    spec = SeriesSpec(term=lambda n: (-1.0) ** (n + 1) / n ** 2, n0=1,
                      tail=Alternating(), max_terms=100_000)
    r = sum_series(spec, tol=1e-9)
    exact = PI ** 2 / 12.0
    assert abs(r.value - exact) <= r.abs_err
    # |value - partial(N)| <= |term(N+1)| for alternating truncations
    for n_stop in (10, 100, 1000):
        partial = sum((-1.0) ** (n + 1) / n ** 2 for n in range(1, n_stop + 1))
        assert abs(exact - partial) <= 1.0 / (n_stop + 1) ** 2


def test_engine_nonfinite_term_raises():
    spec = SeriesSpec(term=lambda n: math.inf if n == 5 else 0.0, n0=1,
                      tail=NoTail(), max_terms=10)
    with pytest.raises(EvaluationError):
        sum_series(spec)


def test_engine_validates_spec():
    with pytest.raises(DomainError):
        SeriesSpec(term=lambda n: 0.0, n0=-1)
    with pytest.raises(DomainError):
        SeriesSpec(term=lambda n: 0.0, max_terms=0)


def test_cvz_alternating_log2():
    v, e = cvz_alternating(lambda k: 1.0 / (k + 1.0))
    assert v == pytest.approx(math.log(2.0), abs=1e-13)
    assert abs(v - math.log(2.0)) <= max(e, 1e-15)


def test_terms_used_never_exceeds_budget():
    for spec in (
        SeriesSpec(term=lambda n: 1.0 / n ** 2, n0=1, tail=NoTail(),
                   max_terms=500),
        SeriesSpec(term=lambda n: (-1.0) ** n / n, n0=1, tail=Alternating(),
                   max_terms=500),
    ):
        assert sum_series(spec).terms_used <= spec.max_terms
    r = sum_catalog("S-6.3", max_terms=800)
    assert r.terms_used <= 800


# ---------------------------------------------------------------------------
# coth closed form and the Taylor-vs-direct lemmas
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("x", [0.5, 1.0, 2.0, 5.0])
def test_coth_closed_form(x):
    spec = SeriesSpec(
        term=lambda n: 2.0 * x / (x * x + 4.0 * PI ** 2 * n * n), n0=1,
        tail=EulerMaclaurin(
            degree=2,
            smooth=lambda t: 2.0 * x / (x * x + 4.0 * PI ** 2 * t * t)),
        max_terms=10_000)
    closed = 1.0 / math.expm1(x) - 1.0 / x + 0.5
    assert sum_series(spec).value == pytest.approx(closed, abs=1e-10)


@pytest.mark.parametrize("u", [0.1, 0.3, 0.5])
def test_lemma_taylor_vs_direct(u):
    # direct sums against their zeta(')-Taylor expansions
    direct_log = sum_catalog("S-1.20", (u,)).value
    taylor_log = sum((-1.0) ** m * K._zeta_prime_int(2 * m) * u ** (2 * m - 2)
                     for m in range(1, 40))
    assert abs(direct_log - taylor_log) < 1e-9

    direct = sum_catalog("S-1.23", (u,)).value
    taylor = sum((-1.0) ** (m + 1) * K._zeta_int(2 * m) * u ** (2 * m - 2)
                 for m in range(1, 40))
    assert abs(direct - taylor) < 1e-10


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_partial_fraction_lemma(n):
    # sum_{m != n} 1/(m^2-n^2) = 3/(4n^2)
    m_hi = 20_000
    m = np.arange(1, m_hi + 1, dtype=float)
    den = m * m - float(n * n)
    den[n - 1] = 1.0
    vals = 1.0 / den
    vals[n - 1] = 0.0
    total = float(vals.sum()) + _tail_pow_quad(m_hi, float(n * n), 0)
    assert abs(total - 0.75 / (n * n)) < 1e-10


@pytest.mark.parametrize("k", [3, 10])
@pytest.mark.parametrize("x", [0.25, 0.4])
def test_finite_cot_sum(k, x):
    lhs = -2.0 * x * sum(1.0 / (n * n - x * x) for n in range(1, k + 1))
    cot = math.cos(PI * x) / math.sin(PI * x)
    rhs = (K.digamma(1.0 + k + x).value - K.digamma(1.0 + k - x).value
           + PI * cot - 1.0 / x)
    assert abs(lhs - rhs) < 1e-11


# ---------------------------------------------------------------------------
# catalog values
# ---------------------------------------------------------------------------

def test_catalog_unknown_id():
    with pytest.raises(UnknownKeyError):
        sum_catalog("S-0.0")


def test_catalog_param_validation():
    with pytest.raises(DomainError):
        sum_catalog("S-6.3", (1.0,))
    with pytest.raises(DomainError):
        sum_catalog("S-5.13", (2.0,))  # pole at integer argument


def test_catalog_spot_values():
    g = C.gamma
    assert sum_catalog("S-5.13", (0.5,)).value == pytest.approx(
        -1.0 + g + math.log(4.0), abs=1e-10)
    assert sum_catalog("S-6.3").value == pytest.approx(-math.log(2.0),
                                                       abs=1e-12)
    assert sum_catalog("S-5.46.2").value == pytest.approx(0.25, abs=1e-10)
    # brute-force oracle (numpy partial sum to 1e7 plus integral correction)
    assert sum_catalog("S-4.4-Tn", (1,)).value == pytest.approx(
        1.0231387264281, abs=1e-10)
    assert sum_catalog("S-8.11").value == pytest.approx(0.5, abs=1e-12)


def test_si_lattice_sums():
    # frozen from the lattice oracle: sum Si(2 pi n)/n^2
    assert sum_catalog("S-4.26").value == pytest.approx(2.39933343078027,
                                                        abs=1e-10)
    r = sum_catalog("S-3.8", (1.0,))
    assert r.value * 2.0 / PI == pytest.approx(
        3.0 + K._sici_raw(PI)[1] - C.gamma - math.log(4.0 * PI), abs=1e-12)


def test_power_series_examples():
    g = C.gamma
    # constant term only
    assert power_series_eval("PS-5.1", 0.0).value == pytest.approx(g,
                                                                   abs=1e-15)
    v = power_series_eval("PS-5.32", 0.5).value
    closed = (0.5 * math.log(PI / 2.0 / math.sin(PI / 2)) * 1.0)
    rhs = (0.5 * math.log(PI * 0.5 / math.sin(PI * 0.5)) - g * 0.5
           - K.log_gamma(1.5).value)
    assert v == pytest.approx(rhs, abs=1e-13)
    assert v == pytest.approx(0.0579657578, abs=1e-9)
    v17 = power_series_eval("PS-5.17", 0.5).value
    rhs17 = (-(1.0 + g) * 0.25 - K.log_barnes_g(1.5).value
             - K.log_barnes_g(0.5).value)
    # value frozen only after both routes above agreed to <1e-13
    assert v17 == pytest.approx(rhs17, abs=1e-13)
    assert v17 == pytest.approx(0.0441972499, abs=1e-9)
    with pytest.raises(DomainError):
        power_series_eval("PS-5.1", 1.0)
    with pytest.raises(UnknownKeyError):
        power_series_eval("PS-9.9", 0.1)


def test_alternating_catalog_entries():
    assert sum_catalog("S-6.5").value == pytest.approx(math.log(PI / 2),
                                                       abs=1e-12)
    assert sum_catalog("S-7.11").value == pytest.approx(-0.176011999819,
                                                        abs=1e-9)
    assert sum_catalog("S-7.11-aux").value == pytest.approx(0.04400299995,
                                                            abs=1e-9)


def test_quartic_and_sextic_lattice_sums():
    # sum n/(4n^2-1)^2 = 1/8 and its cubic companion
    assert sum_catalog("S-6.24-aux", (2,)).value == pytest.approx(0.125,
                                                                  abs=1e-12)
    assert sum_catalog("S-6.24-aux", (3,)).value == pytest.approx(
        (7.0 * K._zeta_int(3) - 6.0) / 64.0, abs=1e-12)


@pytest.mark.parametrize("n_stop", [10, 100, 1000])
def test_alternating_entries_respect_tail_bound(n_stop):
    # |value - partial(N)| <= |term(N+1)| for the alternating entries
    value = sum_catalog("S-7.11").value
    partial = sum((-1.0) ** n * math.log1p(1.0 / n) / (2 * n + 1)
                  for n in range(1, n_stop + 1))
    nxt = math.log1p(1.0 / (n_stop + 1)) / (2 * n_stop + 3)
    assert abs(value - partial) <= nxt
    value = sum_catalog("S-6.33").value
    partial = sum((-1.0) ** (n % 2) * n / (4.0 * n * n - 1.0) ** 3
                  for n in range(1, n_stop + 1))
    nxt = (n_stop + 1.0) / (4.0 * (n_stop + 1.0) ** 2 - 1.0) ** 3
    assert abs(value - partial) <= nxt


def test_fourier_partial_sums():
    # the Lerch-type cosine series against its digamma closed form
    for x in (0.2, 0.45, 0.8):
        lhs = -sum_catalog("FS-6.2", (x,)).value
        rhs = (math.log(2.0) + 0.5 * PI * math.sin(2 * PI * x)
               + (1.0 - math.cos(2 * PI * x))
               * (math.log(PI) + C.gamma + K.digamma(x).value))
        assert abs(lhs - rhs) < 1e-10, x
    # the sine series against its digamma closed form
    for x in (0.2, 0.45, 0.8):
        lhs = -sum_catalog("FS-7.1", (x,)).value
        rhs = (K.digamma(x).value * math.sin(PI * x)
               + 0.5 * PI * math.cos(PI * x)
               + (C.gamma + C.log_2pi) * math.sin(PI * x))
        assert abs(lhs - rhs) < 1e-9, x
