"""Twisted-periodic functions on the plane and the functional operators
acting on them.

A :class:`TwistedFn` is determined by an evaluator on the open unit square
together with the extension rules

    F(a + 1, c) = F(a, c),        F(a, c + 1) = e^(-2 pi i a) F(a, c),

and an admissible denominator d: its discontinuities are confined to the
lattice lines (1/d)Z in each variable, where evaluation is refused.
Operators compose lazily: applying a Hecke operator returns a new
TwistedFn whose core sums shifted/dilated evaluations of the argument via
its extension, and whose denominator is multiplied by the operator index
(discontinuity lattices refine, they are never recomputed).

The four Hecke families are

    T_m f(a,c)     = (1/m) sum_k f((a+k)/m, m c)
    S_m f(a,c)     = (1/m) sum_k e^(2 pi i k a) f(m a, (c+k)/m)
    T_m_vee f(a,c) = (1/m) sum_k e^(2 pi i ((1-m)a+k)/m) f((a+k)/m, 1+m(c-1))
    S_m_vee f(a,c) = (1/m) sum_k e^(2 pi i (m-k-1) a) f(1+m(a-1), (c+m-k-1)/m)

(the conjugates of T_m by powers of the order-4 operator
R f(a,c) = e^(-2 pi i a c) f(1-c, a)).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import DomainError, LatticePointError
from .lerch_core import StrategyConfig, DEFAULT_CONFIG, l_pm_many, lerch_star_many
from .special_functions import Parity

__all__ = [
    "TwistedFn",
    "OperatorKind",
    "OperatorSpec",
    "twisted_from_core",
    "lerch_star_twisted",
    "l_pm_twisted",
    "apply_hecke",
    "apply_R",
    "kubert_1d",
    "dilation_1d",
    "zeta_operator_partial",
]

GRID_TOL = 1e-13
TWO_PI = 2.0 * math.pi


class OperatorKind(enum.Enum):
    T = "T"
    S = "S"
    T_VEE = "T_vee"
    S_VEE = "S_vee"
    R_POW = "R_pow"
    J = "J"
    D_PLUS = "D_plus"
    D_MINUS = "D_minus"
    D_L = "D_L"
    DELTA_L = "Delta_L"


_HECKE_KINDS = {OperatorKind.T, OperatorKind.S, OperatorKind.T_VEE,
                OperatorKind.S_VEE}
_DIFFERENTIAL_KINDS = {OperatorKind.D_PLUS, OperatorKind.D_MINUS,
                       OperatorKind.D_L, OperatorKind.DELTA_L}


@dataclass(frozen=True)
class OperatorSpec:
    """Identifies one operator for composition and residual tests.

    Hecke kinds carry the index m >= 1; ``R_POW`` carries the power
    0..3; the remaining kinds take no index.
    """

    kind: OperatorKind
    index: int | None = None

    def __post_init__(self):
        if self.kind in _HECKE_KINDS:
            if self.index is None or self.index < 1:
                raise DomainError(f"{self.kind.value} needs an index m >= 1")
        elif self.kind is OperatorKind.R_POW:
            if self.index is None or not 0 <= self.index <= 3:
                raise DomainError("R_pow needs a power in 0..3")
        elif self.index is not None:
            raise DomainError(f"{self.kind.value} takes no index")

    @property
    def is_differential(self) -> bool:
        return self.kind in _DIFFERENTIAL_KINDS


class TwistedFn:
    """A function known on the open unit square, twisted-periodic beyond.

    ``core`` must accept broadcastable float arrays (a, c) with values in
    the open square and return complex values.  Instances are immutable;
    operators build new instances and never mutate inputs.
    """

    __slots__ = ("core", "denominator", "label")

    def __init__(self, core: Callable[[np.ndarray, np.ndarray], np.ndarray],
                 denominator: int = 1, label: str = ""):
        if denominator < 1:
            raise DomainError("denominator must be a positive integer")
        self.core = core
        self.denominator = int(denominator)
        self.label = label

    def __repr__(self):
        return f"TwistedFn({self.label or 'anonymous'}, d={self.denominator})"

    def _check_off_grid(self, a: np.ndarray, c: np.ndarray):
        d = self.denominator
        for name, x in (("a", a), ("c", c)):
            scaled = x * d
            dist = np.abs(scaled - np.round(scaled)) / d
            if np.any(dist <= GRID_TOL):
                bad = np.asarray(x).ravel()[np.argmin(dist.ravel())]
                raise LatticePointError(
                    f"{name} = {bad!r} lies on the 1/{d} discontinuity lattice")

    def extend(self, a, c):
        """Evaluate anywhere off the discontinuity lattice.

        Reduction: F(a, c) = e^(-2 pi i floor(c) a') core(a', c') with
        a' = a mod 1 and c' = c mod 1 (the a-rule first, then the c-rule
        floor(c) times; the order is immaterial since the a-shift carries
        no phase).
        """
        a_arr = np.asarray(a, dtype=float)
        c_arr = np.asarray(c, dtype=float)
        scalar = a_arr.ndim == 0 and c_arr.ndim == 0
        a_arr, c_arr = np.broadcast_arrays(np.atleast_1d(a_arr),
                                           np.atleast_1d(c_arr))
        self._check_off_grid(a_arr, c_arr)
        a_red = np.mod(a_arr, 1.0)
        k = np.floor(c_arr)
        c_red = c_arr - k
        phase = np.exp(-2j * math.pi * np.mod(k * a_red, 1.0))
        values = phase * np.asarray(self.core(a_red, c_red),
                                    dtype=np.complex128)
        if scalar:
            return complex(values.ravel()[0])
        return values

    def __call__(self, a, c):
        return self.extend(a, c)


def twisted_from_core(core, denominator: int = 1, label: str = "") -> TwistedFn:
    """Wrap a vectorized evaluator on the open unit square."""
    return TwistedFn(core, denominator, label)


def lerch_star_twisted(s: complex, cfg: StrategyConfig | None = None,
                       tol: float | None = None) -> TwistedFn:
    """zeta_star(s, ., .) as a TwistedFn (admissible denominator 1)."""
    cfg = cfg or DEFAULT_CONFIG

    def core(a, c):
        return lerch_star_many(s, a, c, cfg, tol)[0]

    return TwistedFn(core, 1, f"zeta*({s})")


def l_pm_twisted(s: complex, parity: Parity,
                 cfg: StrategyConfig | None = None,
                 tol: float | None = None) -> TwistedFn:
    """L^pm(s, ., .) as a TwistedFn (admissible denominator 1)."""
    cfg = cfg or DEFAULT_CONFIG

    def core(a, c):
        return l_pm_many(s, parity, a, c, cfg, tol)[0]

    return TwistedFn(core, 1, f"L{parity.value}({s})")


# ---------------------------------------------------------------------------
# Hecke operators
# ---------------------------------------------------------------------------

def apply_hecke(kind: OperatorKind, m: int, F: TwistedFn) -> TwistedFn:
    """Apply one of the four Hecke families; the result has denominator m*d."""
    if kind not in _HECKE_KINDS:
        raise DomainError(f"not a Hecke family: {kind}")
    if m < 1:
        raise DomainError("Hecke index m must be >= 1")
    m = int(m)

    if kind is OperatorKind.T:
        def core(a, c, _m=m, _F=F):
            k = np.arange(_m).reshape((_m,) + (1,) * np.ndim(a))
            vals = _F.extend((a[None] + k) / _m, _m * c[None])
            return vals.sum(axis=0) / _m
    elif kind is OperatorKind.S:
        def core(a, c, _m=m, _F=F):
            k = np.arange(_m).reshape((_m,) + (1,) * np.ndim(a))
            phase = np.exp(2j * math.pi * k * a[None])
            vals = _F.extend(_m * a[None], (c[None] + k) / _m)
            return (phase * vals).sum(axis=0) / _m
    elif kind is OperatorKind.T_VEE:
        def core(a, c, _m=m, _F=F):
            k = np.arange(_m).reshape((_m,) + (1,) * np.ndim(a))
            phase = np.exp(2j * math.pi * ((1 - _m) * a[None] + k) / _m)
            vals = _F.extend((a[None] + k) / _m, 1.0 + _m * (c[None] - 1.0))
            return (phase * vals).sum(axis=0) / _m
    else:  # S_VEE
        def core(a, c, _m=m, _F=F):
            k = np.arange(_m).reshape((_m,) + (1,) * np.ndim(a))
            phase = np.exp(2j * math.pi * (_m - (k + 1)) * a[None])
            vals = _F.extend(1.0 + _m * (a[None] - 1.0),
                             (c[None] + _m - (k + 1)) / _m)
            return (phase * vals).sum(axis=0) / _m

    label = f"{kind.value}_{m}({F.label})"
    return TwistedFn(core, m * F.denominator, label)


# ---------------------------------------------------------------------------
# R-operator powers
# ---------------------------------------------------------------------------

def apply_R(F: TwistedFn, power: int = 1) -> TwistedFn:
    """Powers of R f(a,c) = e^(-2 pi i a c) f(1-c, a); power 2 is the
    reflection involution J and power 0 the identity."""
    if not 0 <= power <= 3:
        raise DomainError("R power must be in 0..3")
    if power == 0:
        return F
    if power == 1:
        def core(a, c, _F=F):
            return np.exp(-2j * math.pi * a * c) * _F.extend(1.0 - c, a)
    elif power == 2:
        def core(a, c, _F=F):
            return np.exp(-2j * math.pi * a) * _F.extend(1.0 - a, 1.0 - c)
    else:
        def core(a, c, _F=F):
            return (np.exp(-2j * math.pi * (a * c - c))
                    * _F.extend(c, 1.0 - a))
    return TwistedFn(core, F.denominator, f"R^{power}({F.label})")


def apply_functional(spec: OperatorSpec, F: TwistedFn) -> TwistedFn:
    """Apply a non-differential operator spec."""
    if spec.kind in _HECKE_KINDS:
        return apply_hecke(spec.kind, spec.index, F)
    if spec.kind is OperatorKind.R_POW:
        return apply_R(F, spec.index)
    if spec.kind is OperatorKind.J:
        return apply_R(F, 2)
    raise DomainError(
        f"{spec.kind.value} is a differential operator; use diff_ops.apply_D")


# ---------------------------------------------------------------------------
# one-variable specializations
# ---------------------------------------------------------------------------

def kubert_1d(m: int, f: Callable, x) -> complex | np.ndarray:
    """One-variable averaging operator (1/m) sum_{k<m} f((x+k)/m), x in (0,1)."""
    if m < 1:
        raise DomainError("Kubert index m must be >= 1")
    x_arr = np.asarray(x, dtype=float)
    if np.any(x_arr <= 0.0) or np.any(x_arr >= 1.0):
        raise DomainError("Kubert operator needs x in the open interval (0,1)")
    scalar = x_arr.ndim == 0
    x_arr = np.atleast_1d(x_arr)
    k = np.arange(m).reshape((m,) + (1,) * x_arr.ndim)
    vals = np.asarray(f((x_arr[None] + k) / m), dtype=np.complex128)
    out = vals.sum(axis=0) / m
    return complex(out[0]) if scalar else out


def dilation_1d(m: int, f: Callable, c) -> complex | np.ndarray:
    """Dilation operator f(m c); composes multiplicatively in m."""
    if m < 1:
        raise DomainError("dilation index m must be >= 1")
    return f(np.asarray(c, dtype=float) * m)


# ---------------------------------------------------------------------------
# zeta-operator partial sums
# ---------------------------------------------------------------------------

def zeta_operator_partial(M: int, F: TwistedFn, a: float, c: float) -> complex:
    """Partial sum sum_{m=1..M} (T_m F)(a, c).

    All (m, k) shifts are evaluated through a single extension call; for
    F = zeta(s, ., .) with Re(s) > 1 the sum converges to
    zeta_Riemann(s) * F(a, c) as M grows.
    """
    if M < 1:
        raise DomainError("M must be >= 1")
    ms = []
    ks = []
    for m in range(1, M + 1):
        ms.extend([m] * m)
        ks.extend(range(m))
    ms = np.array(ms, dtype=float)
    ks = np.array(ks, dtype=float)
    vals = F.extend((a + ks) / ms, ms * c)
    return complex(np.sum(vals / ms))
