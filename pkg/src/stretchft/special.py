"""Real-argument special functions: Gamma and Bessel J of real order.

All routines are scalar-in/scalar-out unless noted; ``bessel_j`` also
accepts numpy arrays for the argument. Everything here is a pure function
of its inputs and safe to call from multiple threads.

The Bessel evaluator is a three-regime hybrid:

* power series for small argument,
* Hankel's asymptotic expansion for large argument (exact, terminating,
  for half-integer orders),
* Miller's downward recurrence with the Neumann-type normalization
  sum_k (nu+2k) Gamma(nu+k)/k! * J_{nu+2k}(x) = (x/2)^nu
  in the intermediate range, where neither expansion reaches 1e-12.
"""

from __future__ import annotations

import math

import numpy as np

__all__ = [
    "gamma_real",
    "bessel_j",
    "bessel_j_zero",
    "GammaPoleError",
]

_SERIES_MAX_X = 12.0      # power series loses ~e^x/sqrt(x) ulps; safe below this
_GAMMA_OVERFLOW_X = 171.624  # Gamma(x) > DBL_MAX beyond this


class GammaPoleError(ValueError):
    """Gamma evaluated at a non-positive integer."""


# Lanczos approximation, g = 7, 9 coefficients (relative error < 1e-15
# for positive arguments; combined with reflection below for negatives).
_LANCZOS_G = 7.0
_LANCZOS_C = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)


def _sin_pi(x: float) -> float:
    """sin(pi*x) with exact argument reduction to avoid pi*x rounding."""
    r = x - round(x)
    s = math.sin(math.pi * r)
    return s if round(x) % 2 == 0 else -s


def gamma_real(x: float) -> float:
    """Gamma function for real non-pole arguments.

    Negative non-integer arguments go through the reflection identity
    Gamma(x)*Gamma(1-x) = pi/sin(pi*x). Accuracy is ~1 ulp of the Lanczos
    approximation, comfortably beyond 13 significant digits for |x| <= 50.

    Raises
    ------
    GammaPoleError
        if x is zero or a negative integer.
    OverflowError
        once Gamma(x) exceeds the double range (x > ~171.6 and the
        reflected equivalents).
    """
    x = float(x)
    if not math.isfinite(x):
        raise ValueError(f"gamma_real requires a finite argument, got {x!r}")
    if x <= 0.0 and x == math.floor(x):
        raise GammaPoleError(f"Gamma pole at x = {x:g}")
    if x < 0.5:
        # reflection: Gamma(x) = pi / (sin(pi x) * Gamma(1 - x))
        return math.pi / (_sin_pi(x) * gamma_real(1.0 - x))
    if x > _GAMMA_OVERFLOW_X:
        raise OverflowError(f"Gamma({x:g}) exceeds double precision range")
    z = x - 1.0
    acc = _LANCZOS_C[0]
    for i, c in enumerate(_LANCZOS_C[1:], start=1):
        acc += c / (z + i)
    t = z + _LANCZOS_G + 0.5
    return math.sqrt(2.0 * math.pi) * t ** (z + 0.5) * math.exp(-t) * acc


def _bessel_series(nu: float, x: np.ndarray) -> np.ndarray:
    """Ascending power series; reliable for x <= _SERIES_MAX_X."""
    q = 0.25 * x * x
    with np.errstate(divide="ignore"):
        # (x/2)^nu / Gamma(nu+1); x == 0 handled by the caller
        term = np.exp(nu * np.log(0.5 * x) - math.lgamma(nu + 1.0))
    total = term.copy()
    for k in range(200):
        term = term * (-q) / ((k + 1.0) * (nu + k + 1.0))
        total += term
        if np.all(np.abs(term) <= 1e-18 * (np.abs(total) + 1e-30)):
            break
    return total


def _bessel_asymptotic(nu: float, x: np.ndarray) -> np.ndarray:
    """Hankel expansion J_nu ~ sqrt(2/(pi x)) (P cos chi - Q sin chi).

    The a_k coefficients terminate exactly for half-integer nu, making the
    expansion an identity there (spherical Bessel closed forms). For other
    orders the caller only uses this beyond the order-dependent cutoff
    where the smallest term is below 1e-16.
    """
    mu = 4.0 * nu * nu
    inv_x = 1.0 / x
    p = np.ones_like(x)
    q = np.zeros_like(x)
    a_k = 1.0
    pow_ix = np.ones_like(x)
    for k in range(1, 40):
        a_k = a_k * (mu - (2 * k - 1) ** 2) / (k * 8.0)
        if a_k == 0.0:
            break  # half-integer order: expansion terminates, exact
        pow_ix = pow_ix * inv_x
        contrib = a_k * pow_ix
        if k % 2 == 1:
            q += contrib if k % 4 == 1 else -contrib
        else:
            p += contrib if k % 4 == 0 else -contrib
        if np.all(np.abs(contrib) < 1e-18):
            break
    chi = x - (0.5 * nu + 0.25) * math.pi
    return np.sqrt(2.0 / (math.pi * x)) * (p * np.cos(chi) - q * np.sin(chi))


def _bessel_miller_scalar(nu: float, x: float) -> float:
    """Miller downward recurrence for one scalar in the mid range.

    Recurses J_{mu-1} = (2 mu / x) J_mu - J_{mu+1} from a negligible seed
    well above the turning point, then fixes the overall scale with the
    Neumann-type sum (valid for every real nu > -1 once the k = 0 term is
    written as Gamma(nu+1)):

        sum_k (nu + 2k) Gamma(nu + k) / k! * J_{nu+2k}(x) = (x/2)^nu
    """
    m = int(1.5 * x + 45.0)
    if m % 2 == 1:
        m += 1
    # normalization coefficients c_k = (nu+2k) Gamma(nu+k)/k!, c_0 = Gamma(nu+1)
    c = [gamma_real(nu + 1.0)]
    for k in range(m // 2):
        if k == 0:
            c.append(c[0] * (nu + 2.0) / 1.0)
        else:
            c.append(c[k] * (nu + 2 * k + 2) / (nu + 2 * k) * (nu + k) / (k + 1))
    j_hi = 0.0
    j_cur = 1e-30
    norm = 0.0
    j_nu = 0.0
    for i in range(m - 1, -1, -1):
        j_lo = (2.0 * (nu + i + 1) / x) * j_cur - j_hi
        j_hi = j_cur
        j_cur = j_lo
        if i % 2 == 0:
            norm += c[i // 2] * j_cur
        if abs(j_cur) > 1e250:
            j_cur *= 1e-250
            j_hi *= 1e-250
            norm *= 1e-250
    j_nu = j_cur
    scale = (0.5 * x) ** nu / norm
    return j_nu * scale


def bessel_j(nu: float, x):
    """Bessel function of the first kind, real order nu >= -0.5, x >= 0.

    Accepts a scalar or ndarray ``x``; absolute error <= 1e-12 over the
    supported range (validated against the three-term recurrence and
    half-integer closed forms in the test suite).

    >>> bessel_j(0.0, 0.0)
    1.0
    """
    nu = float(nu)
    if not (nu >= -0.5):
        raise ValueError(f"order must satisfy nu >= -0.5, got {nu}")
    scalar_in = np.isscalar(x) or (isinstance(x, np.ndarray) and x.ndim == 0)
    xs = np.atleast_1d(np.asarray(x, dtype=float))
    if np.any(xs < 0.0) or not np.all(np.isfinite(xs)):
        raise ValueError("argument must be finite and >= 0")
    if nu < 0.0 and np.any(xs == 0.0):
        raise ValueError(f"J_nu(0) diverges for nu = {nu} < 0")

    out = np.empty_like(xs)
    zero = xs == 0.0
    out[zero] = 1.0 if nu == 0.0 else 0.0

    half_integer = abs(2.0 * nu - round(2.0 * nu)) < 1e-14 and round(2.0 * nu) % 2 != 0
    asym_cutoff = _SERIES_MAX_X if half_integer else max(30.0, nu * nu + 6.0)

    small = (~zero) & (xs <= _SERIES_MAX_X)
    large = (~zero) & (xs > asym_cutoff)
    mid = (~zero) & ~small & ~large

    if np.any(small):
        out[small] = _bessel_series(nu, xs[small])
    if np.any(large):
        out[large] = _bessel_asymptotic(nu, xs[large])
    if np.any(mid):
        out[mid] = [_bessel_miller_scalar(nu, float(v)) for v in xs[mid]]

    return float(out[0]) if scalar_in else out.reshape(np.shape(x))


def _bessel_j_prime(nu: float, x: float) -> float:
    # J_nu'(x) = (nu/x) J_nu(x) - J_{nu+1}(x), valid for all nu >= -0.5
    return (nu / x) * bessel_j(nu, x) - bessel_j(nu + 1.0, x)


_zero_cache: dict[tuple[float, int], float] = {}


def bessel_j_zero(nu: float, k: int) -> float:
    """k-th positive zero of J_nu (k >= 1), via McMahon's expansion plus
    a safeguarded Newton refinement against the series/recurrence evaluator.
    """
    if k < 1:
        raise ValueError("zero index k must be >= 1")
    nu = float(nu)
    key = (nu, k)
    hit = _zero_cache.get(key)
    if hit is not None:
        return hit

    mu = 4.0 * nu * nu
    beta = (k + 0.5 * nu - 0.25) * math.pi
    b8 = 8.0 * beta
    z = beta - (mu - 1.0) / b8 \
        - 4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * b8 ** 3) \
        - 32.0 * (mu - 1.0) * (83.0 * mu * mu - 982.0 * mu + 3779.0) / (15.0 * b8 ** 5)
    z = max(z, 0.1)

    for _ in range(60):
        f = bessel_j(nu, z)
        step = f / _bessel_j_prime(nu, z)
        if abs(step) > 1.0:  # wild step: damp, McMahon was off
            step = math.copysign(1.0, step)
        z -= step
        if abs(step) < 1e-13 * max(1.0, z):
            break
    # polish once more and sanity-check the residual
    f = bessel_j(nu, z)
    z -= f / _bessel_j_prime(nu, z)
    if abs(bessel_j(nu, z)) > 1e-9:
        raise ArithmeticError(f"zero refinement failed for nu={nu}, k={k}")
    _zero_cache[key] = z
    return z
