"""Evaluation of the Lerch zeta function family across the s-plane.

The one-sided series

    zeta(s, a, c) = sum_{n>=0} e^(2 pi i n a) (n + c)^(-s)

converges absolutely for Re(s) > 1 and conditionally (non-integer a) for
Re(s) > 0; everywhere else values are taken in the sense of analytic
continuation.  Evaluation strategies, per point:

* integer ``a``: the sum is a Hurwitz zeta value; Euler-Maclaurin, valid
  for every s != 1.
* ``a`` within ``small_a_cutoff`` of an integer: expansion of the series
  around the degenerate point in powers of the offset, with Hurwitz zeta
  coefficients (a Hurwitz splitting of the slowly oscillating sum).
* oscillatory ``a``: Levin u-acceleration of the partial sums, after a
  decimation step that splits the series into m interleaved subseries so
  the effective multiplier e^(2 pi i m a) sits near the optimally
  conditioned point -1.
* Re(s) <= ``sigma_lo`` with non-integer a: reflection through the
  functional equation to 1 - s, where the series strategies apply.
* Re(s) >= ``sigma_hi`` when the absolute tail bound is cheap: plain
  truncated summation (the only strategy whose error estimate is the
  absolute tail bound rather than a stabilization or remainder estimate).

The extended function zeta_star (two-sided support n + c > 0) and the
symmetrized pair L^+/L^- are linear combinations of one-sided values; the
completed functions multiply in the archimedean gamma factor.  Bases
(n + c) are positive reals throughout, so (n + c)^(-s) carries no branch
ambiguity.
"""

from __future__ import annotations

import enum
import math
import os
from dataclasses import dataclass, field

import numpy as np

from .acceleration import levin_sum
from .errors import (
    DegenerateParameterError,
    DomainError,
    NonConvergenceError,
)
from .special_functions import Parity, complex_gamma, gamma_R, root_number, tate_gamma

__all__ = [
    "Strategy",
    "LerchParams",
    "EvalResult",
    "StrategyConfig",
    "DEFAULT_CONFIG",
    "zeta_direct",
    "lerch_star",
    "lerch_star_many",
    "L_pm",
    "l_pm_many",
    "eval_strip",
    "eval_reflected",
    "completed_L",
    "hurwitz",
    "hurwitz_many",
    "riemann_zeta",
]

_INT_TOL = 1e-14
_EULER_GAMMA = 0.5772156649015328606
TWO_PI = 2.0 * math.pi


class Strategy(enum.Enum):
    DIRECT_SERIES = "direct_series"
    ACCELERATED = "accelerated"
    REFLECTED = "reflected"


@dataclass(frozen=True)
class LerchParams:
    """The parameter triple (s, a, c) with grid-position classification."""

    s: complex
    a: float
    c: float

    @property
    def a_integral(self) -> bool:
        return abs(self.a - round(self.a)) <= _INT_TOL

    @property
    def c_integral(self) -> bool:
        return abs(self.c - round(self.c)) <= _INT_TOL


@dataclass(frozen=True)
class EvalResult:
    """A value together with an a-posteriori error estimate.

    ``direct_series`` results carry the absolute tail bound, ``accelerated``
    results the stabilization estimate of successive transforms (or the
    Euler-Maclaurin remainder bound on the Hurwitz path), and ``reflected``
    results propagate the source estimates through the gamma factors.
    """

    value: complex
    error_estimate: float
    strategy: Strategy


def _env_tol(default: float) -> float:
    raw = os.environ.get("LERCHLAB_TOL")
    if raw is None:
        return default
    try:
        return float(raw)
    except ValueError:
        raise DomainError(f"LERCHLAB_TOL is not a number: {raw!r}") from None


@dataclass
class StrategyConfig:
    """Evaluation thresholds and budgets.

    ``sigma_hi``/``sigma_lo`` bound the direct-series and reflection
    regimes; the strip in between is handled by acceleration.  Direct
    summation is additionally gated on its absolute tail bound being
    reachable within ``direct_cheap_terms`` terms, since near sigma_hi
    that bound needs astronomically many terms at tight tolerances.  The
    environment variable LERCHLAB_TOL overrides ``target_tol`` at
    construction time.
    """

    sigma_hi: float = 1.5
    sigma_lo: float = -0.5
    max_terms: int = 2_000_000
    target_tol: float = field(default_factory=lambda: _env_tol(1e-12))
    near_integer_a: float = 1e-6
    small_a_cutoff: float = 0.02
    direct_cheap_terms: int = 50_000
    levin_max_order: int = 90

    def __post_init__(self):
        if not self.sigma_lo < self.sigma_hi:
            raise DomainError("sigma_lo must be below sigma_hi")
        if self.max_terms < 64:
            raise DomainError("max_terms must be at least 64")


DEFAULT_CONFIG = StrategyConfig()


# ---------------------------------------------------------------------------
# Hurwitz zeta by Euler-Maclaurin
# ---------------------------------------------------------------------------

# B_2 .. B_32
_BERNOULLI_EVEN = np.array([
    1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0, 5.0 / 66.0,
    -691.0 / 2730.0, 7.0 / 6.0, -3617.0 / 510.0, 43867.0 / 798.0,
    -174611.0 / 330.0, 854513.0 / 138.0, -236364091.0 / 2730.0,
    8553103.0 / 6.0, -23749461029.0 / 870.0, 8615841276005.0 / 14322.0,
    -7709321041217.0 / 510.0,
])


def _hurwitz_em(s: complex, x: np.ndarray, tol: float):
    """Vectorized zeta_H(s, x) for x > 0, s != 1, with a remainder bound.

    Truncated sum over n < N plus integral, half-term and Bernoulli
    corrections; N doubles until the remainder bound sits below ``tol``.
    """
    s = complex(s)
    if abs(s - 1.0) <= _INT_TOL:
        raise DegenerateParameterError("Hurwitz zeta has its pole at s = 1")
    x = np.asarray(x, dtype=float)
    if np.any(x <= 0.0):
        raise DomainError("Hurwitz zeta requires x > 0")
    J = 14
    sigma = s.real
    rise = 1.0
    for m in range(2 * J + 1):
        rise *= abs(s + m)
    safety = max(1.0, abs(s + 2 * J + 1) / (sigma + 2 * J + 1))
    bcoef = abs(_BERNOULLI_EVEN[J]) / math.factorial(2 * J + 2)
    N = int(max(10.0, 0.4 * (abs(s) + 2 * J), 2.0 - sigma))
    xmin = float(np.min(x))
    for _ in range(40):
        bound_worst = rise * safety * bcoef * (N + xmin) ** (-(sigma + 2 * J + 1))
        if bound_worst <= tol or N > 1_000_000:
            break
        N *= 2
    n = np.arange(N)[:, None]
    head = np.sum((n + x[None, :]) ** (-s), axis=0)
    y = (N + x).astype(complex)
    tail = y ** (1.0 - s) / (s - 1.0) + 0.5 * y ** (-s)
    poch = s
    for j in range(1, J + 1):
        tail = tail + (
            _BERNOULLI_EVEN[j - 1] / math.factorial(2 * j)
        ) * poch * y ** (-(s + 2 * j - 1))
        poch = poch * (s + 2 * j - 1) * (s + 2 * j)
    values = head + tail
    bound = rise * safety * bcoef * np.abs(y) ** (-(sigma + 2 * J + 1))
    # rounding floor keyed to the largest summand, which dominates the
    # value itself when sigma < 0
    largest = np.abs(y) ** max(0.0, -sigma)
    errors = bound + 1e-16 * math.sqrt(N) * np.maximum(np.abs(values), largest)
    return values, errors


def hurwitz_many(s: complex, x, tol: float = 1e-13):
    """Array version of :func:`hurwitz`; returns (values, error bounds)."""
    x_arr = np.atleast_1d(np.asarray(x, dtype=float))
    vals, errs = _hurwitz_em(s, x_arr.ravel(), tol)
    return vals.reshape(x_arr.shape), errs.reshape(x_arr.shape)


def hurwitz(s: complex, x: float, cfg: StrategyConfig | None = None) -> EvalResult:
    """Hurwitz zeta zeta_H(s, x) = zeta(s, 0, x) for x > 0, s != 1."""
    cfg = cfg or DEFAULT_CONFIG
    vals, errs = _hurwitz_em(s, np.array([float(x)]), cfg.target_tol)
    return EvalResult(complex(vals[0]), float(errs[0]), Strategy.ACCELERATED)


def riemann_zeta(s: complex, tol: float = 1e-13) -> complex:
    """Riemann zeta via the Hurwitz path (s != 1)."""
    vals, _ = _hurwitz_em(s, np.array([1.0]), tol)
    return complex(vals[0])


# ---------------------------------------------------------------------------
# digamma (real arguments), needed by the near-integer-a expansion
# ---------------------------------------------------------------------------

def _digamma(x: float) -> float:
    if x <= 0.0:
        raise DomainError("digamma implemented for x > 0 only")
    acc = 0.0
    while x < 10.0:
        acc -= 1.0 / x
        x += 1.0
    inv2 = 1.0 / (x * x)
    series = 0.0
    for j in range(7, 0, -1):
        series += _BERNOULLI_EVEN[j - 1] / (2 * j) * inv2 ** j
    return acc + math.log(x) - 0.5 / x - series


# ---------------------------------------------------------------------------
# near-integer a: expansion in the offset with Hurwitz-zeta coefficients
# ---------------------------------------------------------------------------

def _phi_small_a(s: complex, a_off: np.ndarray, c: np.ndarray, tol: float):
    """sum_{n>=0} e^(2 pi i n a) (n+c)^(-s) for a = nearest integer + a_off.

    Expansion around the degenerate point in powers of w = 2 pi i a_off:

        Phi = e^(-w c) [ Gamma(1-s) (-w)^(s-1)
                         + sum_{k>=0} zeta_H(s-k, c) w^k / k! ]

    for non-integer s; at a positive integer s = m the k = m-1 term and
    the gamma term merge into the finite limit
    w^(m-1)/(m-1)! (psi(m) - psi(c) - log(-w)).  Effective convergence
    rate is |a_off| per order, so this path is reserved for small offsets.
    """
    s = complex(s)
    w = (2j * math.pi) * a_off
    worst = float(np.max(np.abs(a_off)))
    kmax = min(60, max(10, int(math.log(max(tol, 1e-17)) /
                               math.log(max(worst, 1e-17))) + 6))
    m = round(s.real)
    s_is_pos_int = abs(s - m) <= _INT_TOL and m >= 1

    values = np.zeros(a_off.shape, dtype=np.complex128)
    errors = np.zeros(a_off.shape, dtype=float)
    log_neg_w = np.log(-w)
    if s_is_pos_int:
        psi_m = sum(1.0 / j for j in range(1, m)) - _EULER_GAMMA
        psi_c = np.array([_digamma(ci) for ci in c])
        lead = w ** (m - 1) / math.factorial(m - 1) * (psi_m - psi_c - log_neg_w)
    else:
        g = complex_gamma(1.0 - s).require_finite("Gamma(1-s)")
        lead = g * np.exp((s - 1.0) * log_neg_w)
    values += lead
    errors += 4e-16 * np.abs(lead)

    wk = np.ones_like(w)  # w^k / k!
    term = np.zeros_like(w)
    for k in range(kmax + 1):
        if not (s_is_pos_int and k == m - 1):
            zh, zh_err = _hurwitz_em(s - k, c, tol)
            term = zh * wk
            values += term
            errors += zh_err * np.abs(wk) + 1e-16 * np.abs(term)
            if k >= 2 and np.all(np.abs(term) < 0.25 * tol):
                break
        wk = wk * w / (k + 1.0)
    errors += np.abs(term)  # crude bound on the omitted tail
    twist = np.exp(-w * c)
    return twist * values, np.abs(twist) * errors


# ---------------------------------------------------------------------------
# oscillatory a: decimation + Levin acceleration
# ---------------------------------------------------------------------------

def _phi_levin(s: complex, a: np.ndarray, c: np.ndarray, tol: float,
               max_order: int = 90, head: int = 8):
    """Levin-accelerated one-sided sum for well-separated a."""
    n_head = np.arange(head)[:, None]
    phase = np.exp(2j * math.pi * np.mod(n_head * a[None, :], 1.0))
    head_sum = np.sum(phase * (n_head + c[None, :]) ** (-s), axis=0)

    def term(n):
        idx = head + n
        ph = np.exp(2j * math.pi * np.mod(idx * a, 1.0))
        return ph * (idx + c) ** (-s)

    res = levin_sum(term, a.shape, tol, max_order=max_order)
    return head_sum + res.value, res.error + 1e-16 * np.abs(head_sum)


def _phi_oscillatory(s: complex, a: np.ndarray, c: np.ndarray, tol: float,
                     max_order: int = 90):
    """Decimate into m interleaved subseries, then accelerate.

    zeta(s, a, c) = m^(-s) sum_{r<m} e^(2 pi i r a) zeta(s, m a, (r+c)/m),
    with m chosen per point so that frac(m a) sits near 1/2; the identity
    is the n = m j + r reindexing of the defining series and transfers to
    the continuation.
    """
    a_off = a - np.round(a)
    dist = np.abs(a_off)
    m_pt = np.maximum(1, np.round(0.5 / np.maximum(dist, 1e-12)).astype(int))
    m_pt[dist >= 0.35] = 1

    values = np.zeros(a.shape, dtype=np.complex128)
    errors = np.zeros(a.shape, dtype=float)
    for m in np.unique(m_pt):
        sel = np.nonzero(m_pt == m)[0]
        if m == 1:
            v, e = _phi_levin(s, a[sel], c[sel], tol, max_order)
            values[sel] = v
            errors[sel] = e
            continue
        r = np.arange(m)[:, None]
        inner_a = np.broadcast_to(m * a[sel][None, :], (m, sel.size)).ravel()
        inner_c = ((r + c[sel][None, :]) / m).ravel()
        v, e = _phi_levin(s, inner_a, inner_c, tol / math.sqrt(m), max_order)
        v = v.reshape(m, sel.size)
        e = e.reshape(m, sel.size)
        coeff = np.exp(2j * math.pi * np.mod(r * a[sel][None, :], 1.0))
        m_pow = np.exp(-complex(s) * math.log(m))
        values[sel] = m_pow * np.sum(coeff * v, axis=0)
        errors[sel] = abs(m_pow) * (np.sum(e, axis=0)
                                    + 1e-16 * np.sum(np.abs(v), axis=0))
    return values, errors


# ---------------------------------------------------------------------------
# one-sided series: per-point path dispatch (requires Re(s) > sigma_lo)
# ---------------------------------------------------------------------------

def _phi_dispatch(s: complex, a: np.ndarray, c: np.ndarray,
                  cfg: StrategyConfig, tol: float):
    """Analytic continuation of sum_{n>=0} e^(2 pi i n a)(n+c)^(-s), c > 0.

    Chooses the integer-a / small-offset / oscillatory path per point.
    Callers reflect first for Re(s) <= sigma_lo; this routine itself is
    meaningful whenever the Levin resummation stabilizes (in practice down
    to moderately negative Re(s)).
    """
    if np.any(c <= 0.0):
        raise DomainError("one-sided series requires c > 0")
    a_off = a - np.round(a)
    dist = np.abs(a_off)
    is_int = dist <= _INT_TOL
    is_small = (~is_int) & (dist < cfg.small_a_cutoff)
    is_osc = ~(is_int | is_small)

    values = np.zeros(a.shape, dtype=np.complex128)
    errors = np.zeros(a.shape, dtype=float)
    if np.any(is_int):
        v, e = _hurwitz_em(s, c[is_int], tol)
        values[is_int], errors[is_int] = v, e
    if np.any(is_small):
        v, e = _phi_small_a(s, a_off[is_small], c[is_small], tol)
        values[is_small], errors[is_small] = v, e
    if np.any(is_osc):
        v, e = _phi_oscillatory(s, a[is_osc], c[is_osc], tol,
                                max_order=cfg.levin_max_order)
        values[is_osc], errors[is_osc] = v, e
    return values, errors


# ---------------------------------------------------------------------------
# zeta_star and the symmetrized pair on the fundamental cell
# ---------------------------------------------------------------------------

def _reduce_to_cell(a: np.ndarray, c: np.ndarray):
    """Map (a, c) to a in [0,1), c in (0,1], collecting the twist phase.

    zeta_star(s, a, c) = phase * zeta_star(s, a_red, c_red) with
    phase = e^(-2 pi i k a) for the c-shift by k; a-shifts are free.
    """
    a_red = np.mod(a, 1.0)
    k = np.ceil(c).astype(int) - 1
    c_red = c - k
    phase = np.exp(-2j * math.pi * np.mod(k * a_red, 1.0))
    return a_red, c_red, phase


def _lpm_series_cell(s: complex, a: np.ndarray, c: np.ndarray,
                     cfg: StrategyConfig, tol: float):
    """L^+ and L^- on the cell via the two one-sided halves.

    L^pm(s,a,c) = zeta(s,a,c) +- e^(-2 pi i a) zeta(s,1-a,1-c); both
    halves are returned so L^+ + L^- = 2 zeta_star holds by construction.
    """
    za, ea = _phi_dispatch(s, a, c, cfg, tol)
    zb, eb = _phi_dispatch(s, 1.0 - a, 1.0 - c, cfg, tol)
    cross = np.exp(-2j * math.pi * a) * zb
    err = ea + eb + 1e-16 * (np.abs(za) + np.abs(zb))
    return za + cross, za - cross, err


def _lpm_reflected_cell(s: complex, a: np.ndarray, c: np.ndarray,
                        cfg: StrategyConfig, tol: float):
    """L^+ and L^- on the cell through the functional equation.

    L^pm(s,a,c) = w_pm gamma^pm(1-s) e^(-2 pi i a c) L^pm(1-s, 1-c, a),
    with the right-hand pair expanded in one-sided sums at 1-s.
    """
    sp = 1.0 - complex(s)
    lp_in, lm_in, err_in = _lpm_series_cell(sp, 1.0 - c, a, cfg, tol)
    gp = tate_gamma(sp, Parity.PLUS)
    gm = tate_gamma(sp, Parity.MINUS)
    if gp.is_pole or gm.is_pole:
        raise DegenerateParameterError(
            "gamma factor at a pole; switch to the alternate basis")
    pre = np.exp(-2j * math.pi * a * c)
    lp = gp.value * pre * lp_in
    lm = root_number(Parity.MINUS) * gm.value * pre * lm_in
    gmax = max(abs(gp.value), abs(gm.value))
    err = gmax * err_in + 1e-15 * (np.abs(lp) + np.abs(lm))
    return lp, lm, err


def _lpm_engine(s: complex, a: np.ndarray, c: np.ndarray,
                cfg: StrategyConfig, tol: float):
    """(L^+, L^-, error, strategy) on arbitrary non-grid real (a, c)."""
    s = complex(s)
    a_red, c_red, phase = _reduce_to_cell(a, c)
    bad_a = np.abs(a_red - np.round(a_red)) <= _INT_TOL
    bad_c = np.abs(c_red - np.round(c_red)) <= _INT_TOL
    if np.any(bad_a) or np.any(bad_c):
        raise DegenerateParameterError(
            "L^+/L^- need non-integer a and c (two-sided series degenerates)")
    if s.real <= cfg.sigma_lo:
        lp, lm, err = _lpm_reflected_cell(s, a_red, c_red, cfg, tol)
        strat = Strategy.REFLECTED
    else:
        lp, lm, err = _lpm_series_cell(s, a_red, c_red, cfg, tol)
        strat = Strategy.ACCELERATED
    return phase * lp, phase * lm, err, strat


def _zeta_star_engine(s: complex, a: np.ndarray, c: np.ndarray,
                      cfg: StrategyConfig, tol: float):
    """zeta_star on arbitrary real (a, c), integer c excluded.

    Integer a goes through the Hurwitz path directly (valid for all
    s != 1); other points use the series strategies above sigma_lo and the
    L-pair reflection below it.
    """
    s = complex(s)
    a_red, c_red, phase = _reduce_to_cell(a, c)
    is_int_a = np.abs(a_red - np.round(a_red)) <= _INT_TOL
    values = np.zeros(a_red.shape, dtype=np.complex128)
    errors = np.zeros(a_red.shape, dtype=float)
    strat = Strategy.ACCELERATED
    if np.any(is_int_a):
        v, e = _hurwitz_em(s, c_red[is_int_a], tol)
        values[is_int_a], errors[is_int_a] = v, e
    rest = ~is_int_a
    if np.any(rest):
        if s.real <= cfg.sigma_lo:
            lp, lm, err = _lpm_reflected_cell(s, a_red[rest], c_red[rest],
                                              cfg, tol)
            values[rest] = 0.5 * (lp + lm)
            errors[rest] = err
            strat = Strategy.REFLECTED
        else:
            v, e = _phi_dispatch(s, a_red[rest], c_red[rest], cfg, tol)
            values[rest], errors[rest] = v, e
    return phase * values, errors, strat


# ---------------------------------------------------------------------------
# public operations
# ---------------------------------------------------------------------------

def zeta_direct(p: LerchParams, cfg: StrategyConfig | None = None) -> EvalResult:
    """Truncated direct summation with the absolute integral tail bound.

    Only valid in the absolute-convergence region Re(s) > 1, c > 0; raises
    :class:`NonConvergenceError` when the bound cannot reach ``target_tol``
    within ``max_terms`` terms.
    """
    cfg = cfg or DEFAULT_CONFIG
    s = complex(p.s)
    sigma = s.real
    if sigma <= 1.0 or p.c <= 0.0:
        raise DomainError("zeta_direct requires Re(s) > 1 and c > 0")
    tol = cfg.target_tol
    # sum_{n>=N} (n+c)^(-sigma) <= (N-1+c)^(1-sigma)/(sigma-1)
    needed = ((sigma - 1.0) * tol) ** (-1.0 / (sigma - 1.0)) + 1.0 - p.c
    if needed > cfg.max_terms:
        raise NonConvergenceError(
            f"absolute tail bound needs ~{needed:.3g} terms "
            f"(max_terms = {cfg.max_terms})")
    N = int(max(8, math.ceil(needed)))
    total = 0.0 + 0.0j
    chunk = 500_000
    for start in range(0, N, chunk):
        n = np.arange(start, min(start + chunk, N), dtype=float)
        phases = np.exp(2j * math.pi * np.mod(n * p.a, 1.0))
        total += np.sum(phases * (n + p.c) ** (-s))
    bound = (N - 1.0 + p.c) ** (1.0 - sigma) / (sigma - 1.0)
    return EvalResult(complex(total), float(bound + 1e-16 * abs(total) * math.sqrt(N)),
                      Strategy.DIRECT_SERIES)


def _direct_is_cheap(sigma: float, c: float, cfg: StrategyConfig) -> bool:
    if sigma <= 1.0:
        return False
    needed = ((sigma - 1.0) * cfg.target_tol) ** (-1.0 / (sigma - 1.0)) + 1.0 - c
    return needed <= cfg.direct_cheap_terms


def lerch_star(p: LerchParams, cfg: StrategyConfig | None = None) -> EvalResult:
    """The extended function zeta_star(s, a, c) = sum_{n+c>0} e^(2 pi i n a)|n+c|^(-s).

    Dispatcher entry point: reduces (a, c) to the fundamental cell using
    twisted-periodicity and picks the regime strategy.  Agrees with the
    plain Lerch zeta function for 0 < c < 1.
    """
    cfg = cfg or DEFAULT_CONFIG
    s = complex(p.s)
    if p.c_integral and abs(s - 1.0) <= _INT_TOL:
        raise DegenerateParameterError("simple pole at s = 1 on integer lines")
    if p.a_integral and abs(s - 1.0) <= _INT_TOL:
        raise DegenerateParameterError("simple pole at s = 1 on integer lines")
    a = np.array([p.a], dtype=float)
    c = np.array([p.c], dtype=float)
    if (not p.a_integral) and s.real >= cfg.sigma_hi \
            and _direct_is_cheap(s.real, p.c, cfg):
        a_red, c_red, phase = _reduce_to_cell(a, c)
        inner = zeta_direct(LerchParams(s, float(a_red[0]), float(c_red[0])), cfg)
        return EvalResult(complex(phase[0]) * inner.value, inner.error_estimate,
                          Strategy.DIRECT_SERIES)
    values, errors, strat = _zeta_star_engine(s, a, c, cfg, cfg.target_tol)
    return EvalResult(complex(values[0]), float(errors[0]), strat)


def lerch_star_many(s: complex, a, c, cfg: StrategyConfig | None = None,
                    tol: float | None = None):
    """Vectorized zeta_star over broadcast arrays; returns (values, errors).

    This is the engine entry used by the twisted-function layer; it skips
    the direct-summation gate and always uses the continuation strategies.
    """
    cfg = cfg or DEFAULT_CONFIG
    tol = cfg.target_tol if tol is None else tol
    a_arr, c_arr = np.broadcast_arrays(np.asarray(a, dtype=float),
                                       np.asarray(c, dtype=float))
    shape = a_arr.shape
    values, errors, _ = _zeta_star_engine(complex(s), a_arr.ravel().copy(),
                                          c_arr.ravel().copy(), cfg, tol)
    return values.reshape(shape), errors.reshape(shape)


def lerch_zeta(p: LerchParams, cfg: StrategyConfig | None = None) -> EvalResult:
    """The one-sided function zeta(s, a, c) = sum_{n>=0} e^(2 pi i n a)(n+c)^(-s).

    Requires c > 0.  Coincides with zeta_star for 0 < c <= 1; for larger c
    the extended function picks up the finitely many n < 0 terms with
    n + c > 0, which are subtracted off here.
    """
    cfg = cfg or DEFAULT_CONFIG
    if p.c <= 0.0:
        raise DomainError("lerch_zeta requires c > 0")
    base = lerch_star(p, cfg)
    K = math.ceil(p.c) - 1
    if K <= 0:
        return base
    n = -np.arange(1, K + 1)
    extra = np.sum(np.exp(2j * math.pi * n * p.a)
                   * np.abs(n + p.c) ** (-complex(p.s)))
    value = base.value - complex(extra)
    return EvalResult(value, base.error_estimate + 1e-15 * abs(extra),
                      base.strategy)


def L_pm(p: LerchParams, parity: Parity,
         cfg: StrategyConfig | None = None) -> EvalResult:
    """The symmetrized combination L^+/L^- at (s, a, c).

    L^+ = sum_{n in Z} e^(2 pi i n a)|n+c|^(-s) and L^- the sgn(n+c)-signed
    variant; both are assembled from the same pair of one-sided values, so
    the identity L^+ + L^- = 2 zeta_star holds by construction.
    """
    cfg = cfg or DEFAULT_CONFIG
    if p.a_integral or p.c_integral:
        raise DegenerateParameterError("L^+/L^- need non-integer a and c")
    lp, lm, err, strat = _lpm_engine(p.s, np.array([p.a]), np.array([p.c]),
                                     cfg, cfg.target_tol)
    value = lp[0] if parity is Parity.PLUS else lm[0]
    return EvalResult(complex(value), float(err[0]), strat)


def l_pm_many(s: complex, parity: Parity, a, c,
              cfg: StrategyConfig | None = None, tol: float | None = None):
    """Vectorized L^+/L^- over broadcast arrays; returns (values, errors)."""
    cfg = cfg or DEFAULT_CONFIG
    tol = cfg.target_tol if tol is None else tol
    a_arr, c_arr = np.broadcast_arrays(np.asarray(a, dtype=float),
                                       np.asarray(c, dtype=float))
    shape = a_arr.shape
    lp, lm, err, _ = _lpm_engine(complex(s), a_arr.ravel().copy(),
                                 c_arr.ravel().copy(), cfg, tol)
    vals = lp if parity is Parity.PLUS else lm
    return vals.reshape(shape), err.reshape(shape)


def eval_strip(p: LerchParams, cfg: StrategyConfig | None = None) -> EvalResult:
    """Acceleration of the conditionally convergent series, Re(s) > 0.

    Pure oscillatory-series route (decimation + Levin); rejects a within
    ``near_integer_a`` of an integer, where conditional convergence
    degrades.  Raises :class:`AccelerationFailureError` if the transforms
    do not stabilize below ``target_tol``.
    """
    cfg = cfg or DEFAULT_CONFIG
    s = complex(p.s)
    if s.real <= 0.0:
        raise DomainError("eval_strip requires Re(s) > 0")
    if abs(p.a - round(p.a)) < cfg.near_integer_a:
        raise DomainError(
            f"eval_strip requires a at least {cfg.near_integer_a:g} from integers")
    if p.c <= 0.0:
        raise DomainError("eval_strip requires c > 0")
    v, e = _phi_oscillatory(s, np.array([p.a]), np.array([p.c]),
                            cfg.target_tol, max_order=cfg.levin_max_order)
    return EvalResult(complex(v[0]), float(e[0]), Strategy.ACCELERATED)


def eval_reflected(p: LerchParams, parity: Parity,
                   cfg: StrategyConfig | None = None) -> EvalResult:
    """L^pm(s, a, c) through the functional equation, for Re(s) < sigma_lo.

    Computes w_pm gamma^pm(1-s) e^(-2 pi i a c) L^pm(1-s, 1-c, a), with
    the inner pair evaluated in its convergent regime.
    """
    cfg = cfg or DEFAULT_CONFIG
    s = complex(p.s)
    if s.real >= cfg.sigma_lo:
        raise DomainError("eval_reflected requires Re(s) < sigma_lo")
    if p.a_integral or p.c_integral:
        raise DegenerateParameterError("L^+/L^- need non-integer a and c")
    a = np.array([p.a], dtype=float)
    c = np.array([p.c], dtype=float)
    a_red, c_red, phase = _reduce_to_cell(a, c)
    lp, lm, err = _lpm_reflected_cell(s, a_red, c_red, cfg, cfg.target_tol)
    value = (lp if parity is Parity.PLUS else lm)[0] * phase[0]
    return EvalResult(complex(value), float(err[0]), Strategy.REFLECTED)


def lpm_is_identically_zero(s: complex, parity: Parity) -> bool:
    """Whether L^pm(s, ., .) vanishes identically in (a, c).

    This happens exactly where the Tate factor gamma^pm(1-s) has a zero
    (the functional equation then forces the L-side to vanish): the
    non-positive integers of matching parity.
    """
    g = tate_gamma(1.0 - complex(s), parity)
    return (not g.is_pole) and g.value == 0


def r_pm_is_identically_zero(s: complex, parity: Parity) -> bool:
    """Whether R_s^pm = e^(-2 pi i a c) L^pm(1-s, 1-c, a) vanishes
    identically: the pole set of gamma^pm(1-s) (positive integers of
    matching parity)."""
    return tate_gamma(1.0 - complex(s), parity).is_pole


def completed_L(p: LerchParams, parity: Parity,
                cfg: StrategyConfig | None = None) -> EvalResult:
    """Completed function: pi^(-(s+eps)/2) Gamma((s+eps)/2) L^pm(s, a, c).

    The gamma prefactor is exactly gamma_R of the matching parity.  Under
    (s, a, c) -> (1-s, 1-c, a) it satisfies the clean functional equations
    with root numbers 1 and i.
    """
    cfg = cfg or DEFAULT_CONFIG
    g = gamma_R(p.s, parity)
    if g.is_pole:
        raise DegenerateParameterError(
            "completed function undefined: gamma factor at a pole")
    inner = L_pm(p, parity, cfg)
    value = g.value * inner.value
    err = abs(g.value) * inner.error_estimate + 1e-15 * abs(value)
    return EvalResult(value, err, inner.strategy)
