"""Elementary symmetric functions, Newton's identities, reciprocal series.

Convention: sigma_k is the plain sum of k-fold products (no alternating
signs), so sigma(t) = prod_i (1 + x_i t) = sum_k sigma_k t^k.

sigma sequences are held log-scaled (sigma_k of ~100 points overflows
doubles); an exact mode using ordinary complex arithmetic exists for
oracle tests on small integer inputs.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .numerics import (
    NEG_INF,
    LogComplex,
    logc_add,
    logc_from_complex_array,
    wrap_phase,
)


@dataclass
class SymmetricProfile:
    """sigma_0..sigma_N of a point vector, log-scaled.

    log_mag[k], phase[k] encode sigma_k; sigma_0 is exactly 1.
    """

    log_mag: np.ndarray
    phase: np.ndarray
    source_len: int

    def __len__(self) -> int:
        return self.log_mag.size

    def sigma(self, k: int) -> LogComplex:
        return LogComplex(float(self.log_mag[k]), float(self.phase[k]))

    def as_complex(self, shift: float = 0.0) -> np.ndarray:
        """Demote to complex doubles after multiplying by exp(-shift)."""
        with np.errstate(over="ignore"):
            mag = np.exp(self.log_mag - shift)
        return mag * np.exp(1j * self.phase)


@dataclass
class PowerSums:
    """Power sums s_1..s_L, s_k = sum_j x_j^k, in ordinary doubles."""

    s: np.ndarray = field(default_factory=lambda: np.zeros(0, dtype=complex))

    def __len__(self) -> int:
        return self.s.size


def power_sums(points, l_max: int) -> PowerSums:
    p = np.asarray(points, dtype=complex).ravel()
    if p.size == 0:
        return PowerSums(np.zeros(l_max, dtype=complex))
    ks = np.arange(1, l_max + 1)
    return PowerSums(np.sum(p[None, :] ** ks[:, None], axis=1))


def elem_sym(points, exact: bool = False) -> SymmetricProfile | np.ndarray:
    """Elementary symmetric functions by incremental polynomial multiplication.

    Returns a log-scaled SymmetricProfile, or (exact=True) a plain complex
    array sigma_0..sigma_N with no rescaling, exact for small integer data.
    """
    p = np.asarray(points, dtype=complex).ravel()
    n = p.size
    if exact:
        sig = np.zeros(n + 1, dtype=complex)
        sig[0] = 1.0
        for i, x in enumerate(p):
            sig[1:i + 2] = sig[1:i + 2] + x * sig[0:i + 1]
        return sig
    lm = np.full(n + 1, NEG_INF)
    ph = np.zeros(n + 1)
    lm[0] = 0.0
    lx, px = logc_from_complex_array(p)
    for i in range(n):
        # sigma_k <- sigma_k + x * sigma_{k-1}, top-down
        tl = lm[0:i + 1] + lx[i]
        tp = wrap_phase(ph[0:i + 1] + px[i])
        lm[1:i + 2], ph[1:i + 2] = logc_add(lm[1:i + 2], ph[1:i + 2], tl, tp)
    return SymmetricProfile(lm, ph, n)


def sigma_concat(u_profile: SymmetricProfile, v_profile: SymmetricProfile) -> SymmetricProfile:
    """Profile of the concatenated point set: the convolution of the sigmas."""
    nu, nv = u_profile.source_len, u_profile.source_len  # noqa: F841 (clarity below)
    nu = u_profile.source_len
    nv = v_profile.source_len
    n = nu + nv
    lm = np.full(n + 1, NEG_INF)
    ph = np.zeros(n + 1)
    for r in range(nu + 1):
        tl = u_profile.log_mag[r] + v_profile.log_mag
        tp = wrap_phase(u_profile.phase[r] + v_profile.phase)
        lm[r:r + nv + 1], ph[r:r + nv + 1] = logc_add(lm[r:r + nv + 1], ph[r:r + nv + 1], tl, tp)
    return SymmetricProfile(lm, ph, n)


def newton_e_from_p(s: PowerSums | np.ndarray, l_max: int) -> np.ndarray:
    """e_1..e_{l_max} from power sums via l*e_l = sum_i (-1)^(i-1) e_{l-i} s_i."""
    sv = s.s if isinstance(s, PowerSums) else np.asarray(s, dtype=complex)
    if sv.size < l_max:
        raise ValueError(f"need {l_max} power sums, got {sv.size}")
    e = np.zeros(l_max + 1, dtype=complex)
    e[0] = 1.0
    for l in range(1, l_max + 1):
        acc = 0j
        for i in range(1, l + 1):
            acc += (-1) ** (i - 1) * e[l - i] * sv[i - 1]
        e[l] = acc / l
    return e[1:]


def reciprocal_series_g(zeta, r_max: int) -> np.ndarray:
    """Coefficients g_1..g_{r_max} of the reciprocal of prod_i (1 + zeta_i u).

    With these, sigma_k(omega) = sigma_k(zeta, omega)
    + sum_{r=1}^k g_r sigma_{k-r}(zeta, omega) holds identically.
    """
    if r_max < 1:
        raise ValueError("r_max must be >= 1")
    z = np.asarray(zeta, dtype=complex).ravel()
    m = z.size
    c = elem_sym(z, exact=True)  # inside points are O(1): no range hazard
    g = np.zeros(r_max + 1, dtype=complex)
    g[0] = 1.0
    for r in range(1, r_max + 1):
        acc = 0j
        for i in range(1, min(r, m) + 1):
            acc += c[i] * g[r - i]
        g[r] = -acc
    return g[1:]
