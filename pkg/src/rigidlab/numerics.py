"""Log-scaled complex/real arithmetic and Vandermonde-type products.

Products of hundreds of pairwise distances span far more orders of magnitude
than a double can hold, so everything downstream works with natural-log
magnitudes.  A complex value is (log_mag, phase), a signed real is
(log_mag, sign); zero is log_mag = -inf.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import gammaln

NEG_INF = float("-inf")


class DomainError(ValueError):
    """An argument is outside the operation's stated domain."""


class ConstraintError(ValueError):
    """A candidate violates an equality constraint (e.g. the fixed sum)."""


class InfeasibleError(RuntimeError):
    """No feasible point exists (or none was found within bounded retries)."""


def wrap_phase(p):
    """Wrap angle(s) into (-pi, pi]."""
    w = np.remainder(np.asarray(p, dtype=float) + np.pi, 2.0 * np.pi) - np.pi
    w = np.where(w == -np.pi, np.pi, w)
    if np.ndim(p) == 0:
        return float(w)
    return w


@dataclass(frozen=True)
class LogComplex:
    """A complex number stored as log-modulus and phase in (-pi, pi]."""

    log_mag: float
    phase: float = 0.0

    @staticmethod
    def from_complex(z) -> "LogComplex":
        z = complex(z)
        if z == 0:
            return LogComplex(NEG_INF, 0.0)
        return LogComplex(math.log(abs(z)), wrap_phase(np.angle(z)))

    def to_complex(self) -> complex:
        if self.log_mag == NEG_INF:
            return 0j
        return math.exp(self.log_mag) * complex(math.cos(self.phase), math.sin(self.phase))

    @property
    def is_zero(self) -> bool:
        return self.log_mag == NEG_INF

    def __mul__(self, other: "LogComplex") -> "LogComplex":
        if self.is_zero or other.is_zero:
            return LogComplex(NEG_INF, 0.0)
        return LogComplex(self.log_mag + other.log_mag,
                          wrap_phase(self.phase + other.phase))

    def __add__(self, other: "LogComplex") -> "LogComplex":
        lm, ph = logc_add(np.array([self.log_mag]), np.array([self.phase]),
                          np.array([other.log_mag]), np.array([other.phase]))
        return LogComplex(float(lm[0]), float(ph[0]))


@dataclass(frozen=True)
class LogReal:
    """A signed real stored as log-modulus plus a sign in {+1, -1, 0}."""

    log_mag: float
    sign: int = 1

    @staticmethod
    def from_float(x: float) -> "LogReal":
        if x == 0:
            return LogReal(NEG_INF, 0)
        return LogReal(math.log(abs(x)), 1 if x > 0 else -1)

    def to_float(self) -> float:
        if self.sign == 0 or self.log_mag == NEG_INF:
            return 0.0
        return self.sign * math.exp(self.log_mag)

    def __mul__(self, other: "LogReal") -> "LogReal":
        s = self.sign * other.sign
        if s == 0:
            return LogReal(NEG_INF, 0)
        return LogReal(self.log_mag + other.log_mag, s)

    def __add__(self, other: "LogReal") -> "LogReal":
        # max-shift rule: factor out the larger magnitude
        if self.sign == 0:
            return other
        if other.sign == 0:
            return self
        a, b = self, other
        if b.log_mag > a.log_mag:
            a, b = b, a
        t = a.sign + b.sign * math.exp(b.log_mag - a.log_mag)
        if t == 0:
            return LogReal(NEG_INF, 0)
        return LogReal(a.log_mag + math.log(abs(t)), 1 if t > 0 else -1)


@dataclass(frozen=True)
class DiskDomain:
    """Open disk centered at the origin; boundary points classify as outside."""

    radius: float
    center: complex = 0j

    def __post_init__(self):
        if self.radius <= 0:
            raise DomainError(f"radius must be positive, got {self.radius}")

    def contains(self, z) -> np.ndarray | bool:
        """Strict-interior membership test (vectorized)."""
        r = np.abs(np.asarray(z) - self.center) < self.radius
        if np.ndim(z) == 0:
            return bool(r)
        return r


def logc_add(l1, p1, l2, p2):
    """Elementwise addition of complex numbers given in log-polar form.

    Returns (log_mag, phase) arrays.  -inf log magnitudes act as the
    additive identity.
    """
    l1 = np.asarray(l1, dtype=float)
    p1 = np.asarray(p1, dtype=float)
    l2 = np.asarray(l2, dtype=float)
    p2 = np.asarray(p2, dtype=float)
    l1, p1, l2, p2 = np.broadcast_arrays(l1, p1, l2, p2)
    # order so the first operand has the larger magnitude
    swap = l2 > l1
    la = np.where(swap, l2, l1)
    pa = np.where(swap, p2, p1)
    lb = np.where(swap, l1, l2)
    pb = np.where(swap, p1, p2)
    out_l = np.full(la.shape, NEG_INF)
    out_p = np.zeros(la.shape)
    ok = la > NEG_INF
    with np.errstate(invalid="ignore"):
        ratio = np.exp(np.where(ok, lb - la, NEG_INF))
    z = 1.0 + ratio * np.exp(1j * (pb - pa))
    az = np.abs(z)
    cancel = ok & (az == 0.0)
    good = ok & (az > 0.0)
    with np.errstate(divide="ignore"):
        out_l = np.where(good, la + np.log(np.where(good, az, 1.0)), out_l)
    out_p = np.where(good, wrap_phase(pa + np.angle(z)), out_p)
    out_l = np.where(cancel, NEG_INF, out_l)
    return out_l, out_p


def logc_from_complex_array(z):
    """(log_mag, phase) arrays for a complex array; zeros map to -inf."""
    z = np.asarray(z, dtype=complex)
    az = np.abs(z)
    with np.errstate(divide="ignore"):
        lm = np.where(az > 0, np.log(np.where(az > 0, az, 1.0)), NEG_INF)
    ph = wrap_phase(np.angle(z))
    ph = np.where(az > 0, ph, 0.0)
    return lm, ph


def vandermonde_sq_log(points) -> LogReal:
    """log of the squared modulus of the Vandermonde product.

    Returns log |Delta(points)|^2 = sum_{i<j} 2 log |p_i - p_j| as a LogReal.
    Length 0 or 1 gives the empty product (log 0 magnitude 1).  Coincident
    points give the zero element (sign 0).
    """
    p = np.asarray(points, dtype=complex).ravel()
    n = p.size
    if n <= 1:
        return LogReal(0.0, 1)
    iu, ju = np.triu_indices(n, k=1)
    d = np.abs(p[iu] - p[ju])
    if np.any(d == 0.0):
        return LogReal(NEG_INF, 0)
    return LogReal(float(2.0 * np.sum(np.log(d))), 1)


def cross_product_log(alpha, beta) -> LogReal:
    """log Gamma(alpha, beta)^2 where Gamma is the product of all |a_i - b_j|."""
    a = np.asarray(alpha, dtype=complex).ravel()
    b = np.asarray(beta, dtype=complex).ravel()
    if a.size == 0 or b.size == 0:
        return LogReal(0.0, 1)
    d = np.abs(a[:, None] - b[None, :])
    if np.any(d == 0.0):
        return LogReal(NEG_INF, 0)
    return LogReal(float(2.0 * np.sum(np.log(d))), 1)


def log_binom_factorial(n: int, k: int) -> float:
    """log( C(n,k) * k! ) = log( n! / (n-k)! ), via log-gamma."""
    if not (0 <= k <= n):
        raise DomainError(f"need 0 <= k <= n, got n={n}, k={k}")
    return float(gammaln(n + 1) - gammaln(n - k + 1))
