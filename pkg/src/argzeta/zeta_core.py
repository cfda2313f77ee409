"""Evaluation of zeta, the Riemann-Siegel theta and Hardy Z functions,
zero location/counting, and the normalized critical-line argument S(t).

Two independent routes to S(t) are provided:

* method A tracks the continuous argument of zeta along the polygonal
  path 2 -> 2 + it -> 1/2 + it, with adaptive halving so that no single
  step changes log zeta by pi/2 or more.  On the vertical segment the
  image of the sigma = 2 line lies in the disk |w - 1| <= zeta(2) - 1
  inside the right half-plane, so the continuous argument coincides with
  the principal one and a single step is exact.
* method B counts zeros: S(t) = N(t) - theta(t)/pi - 1 with N(t) taken
  from a certified zero table.

The Euler-Maclaurin evaluation uses N ~ |s|/3.5 main-sum terms with up to
26 tail corrections; the Riemann-Siegel evaluation of Z(t) adds up to
four correction terms whose coefficient functions are derivatives of
psi(p) = cos(2 pi (p^2 - p - 1/16)) / cos(2 pi p), obtained from Cauchy
integrals and cached as Chebyshev series.

The remainder-bound check in the Euler-Maclaurin tail uses the last
computed correction term, which overestimates the first omitted one, so
the reported precision guarantee is conservative.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Optional, Sequence, Union

import numpy as np
from scipy.special import loggamma, zeta as real_zeta

from .errors import (
    CertificationError,
    CrossCheckError,
    MissedZerosError,
    PreconditionError,
    PrecisionUnreachableError,
    TableFormatError,
)

TWO_PI = 2.0 * math.pi
EM_CROSSOVER_DEFAULT = 1.0e3   # |Im s| above which Z switches to Riemann-Siegel
DESK_LIMIT_DEFAULT = 1.0e7     # zero finding refuses heights above this
_EM_RATIO = 3.0                # main-sum length N = |s| / _EM_RATIO
_MAX_EM_CORRECTIONS = 26
_TRACK_MAX_DEPTH = 48

# sigma ladder for argument tracking; adaptive halving refines where the
# per-step increment of log zeta reaches pi/2
_SIGMA_LADDER = (
    2.0, 1.6, 1.3, 1.1, 0.95, 0.85, 0.77, 0.71, 0.66, 0.62,
    0.585, 0.555, 0.53, 0.51, 0.5,
)


@dataclass(frozen=True)
class EvalPrecision:
    """Evaluation budget: absolute tolerance, main-sum cap, and the number
    of Riemann-Siegel correction terms (0..4)."""

    abs_tol: float = 1e-10
    max_terms: int = 2_000_000
    rs_correction_terms: int = 2

    def __post_init__(self):
        if self.abs_tol <= 0:
            raise PreconditionError("abs_tol must be positive")
        if not (0 <= self.rs_correction_terms <= 4):
            raise PreconditionError("rs_correction_terms must lie in [0, 4]")


DEFAULT_PRECISION = EvalPrecision()


@dataclass(frozen=True)
class ZeroRecord:
    """One nontrivial zero beta + i*gamma."""

    beta: float
    gamma: float

    def __post_init__(self):
        if not (0.0 < self.beta < 1.0):
            raise PreconditionError(f"beta must lie in (0,1), got {self.beta}")
        if self.gamma <= 0:
            raise PreconditionError(f"gamma must be positive, got {self.gamma}")


@dataclass(frozen=True)
class CriticalSample:
    """Joint record of Z, theta and both S(t) routes at one height."""

    t: float
    z: float
    theta: float
    s_arg: float
    s_count: float
    n_t: float


# ----------------------------------------------------------------------
# Euler-Maclaurin evaluation
# ----------------------------------------------------------------------


@lru_cache(maxsize=None)
def _bernoulli_over_factorial(k: int) -> float:
    """B_{2k} / (2k)!  via  (-1)^{k+1} * 2 * zeta(2k) / (2 pi)^{2k}."""
    if k < 1:
        raise ValueError("k >= 1")
    return (-1.0) ** (k + 1) * 2.0 * float(real_zeta(2 * k)) / TWO_PI ** (2 * k)


def _em_main_terms(tmax: float, prec: EvalPrecision) -> int:
    n = max(64, math.ceil(max(tmax, 1.0) / _EM_RATIO))
    if n > prec.max_terms:
        raise PrecisionUnreachableError(
            f"Euler-Maclaurin needs {n} terms but max_terms={prec.max_terms}"
        )
    return n


def _em_tail(sig: float, ts: np.ndarray, n_main: int, prec: EvalPrecision) -> np.ndarray:
    """Boundary and Bernoulli correction terms past the main sum, plus the
    standard remainder-bound check."""
    s = sig + 1j * ts
    nn = float(n_main)
    tail = nn ** (1.0 - s) / (s - 1.0) + 0.5 * nn ** (-s)
    term = _bernoulli_over_factorial(1) * s * nn ** (-s - 1.0)
    k = 1
    while True:
        tail += term
        bound = np.max(np.abs(term) * np.abs(s + 2 * k + 1)) / (sig + 2 * k + 1)
        if bound < 0.5 * prec.abs_tol or k >= _MAX_EM_CORRECTIONS:
            break
        ratio = (
            _bernoulli_over_factorial(k + 1)
            / _bernoulli_over_factorial(k)
            * (s + 2 * k - 1)
            * (s + 2 * k)
            / nn**2
        )
        term = term * ratio
        k += 1
    if bound > prec.abs_tol:
        raise PrecisionUnreachableError(
            f"Euler-Maclaurin remainder {bound:.2e} exceeds "
            f"abs_tol={prec.abs_tol:.2e} at sigma={sig}"
        )
    return tail


def zeta_em_matrix(
    sigmas: Sequence[float],
    ts: np.ndarray,
    prec: EvalPrecision = DEFAULT_PRECISION,
) -> np.ndarray:
    """zeta(sigma_i + i t_j) as a (len(sigmas), len(ts)) array, t_j >= 0.

    The phase matrix exp(-i t log n) is computed once per n-block and
    reused across every sigma, which is what makes argument tracking on a
    sigma ladder affordable at large heights.
    """
    ts = np.asarray(ts, dtype=float)
    if np.any(ts < 0):
        raise PreconditionError("matrix evaluation expects nonnegative heights")
    sig = np.asarray(sigmas, dtype=float)
    n_main = _em_main_terms(float(np.max(ts, initial=0.0)), prec)
    block = max(256, int(4_000_000 // max(len(ts), 1)))
    acc = np.zeros((len(sig), len(ts)), dtype=complex)
    for start in range(1, n_main, block):
        stop = min(start + block, n_main)
        n = np.arange(start, stop, dtype=float)
        phases = np.exp(-1j * np.log(n)[:, None] * ts[None, :])  # (B, T)
        weights = n[None, :] ** (-sig[:, None])                  # (S, B)
        acc += weights.astype(complex) @ phases
    for i, sg in enumerate(sig):
        acc[i] += _em_tail(float(sg), ts, n_main, prec)
    return acc


def zeta_em_values(
    sig: float, ts: np.ndarray, prec: EvalPrecision = DEFAULT_PRECISION
) -> np.ndarray:
    """Vector of zeta(sig + i t) over heights ts (signs mixed is fine)."""
    ts = np.asarray(ts, dtype=float)
    out = np.empty(len(ts), dtype=complex)
    for mask, signed in ((ts >= 0, 1.0), (ts < 0, -1.0)):
        if not np.any(mask):
            continue
        vals = zeta_em_matrix([sig], signed * ts[mask], prec)[0]
        out[mask] = vals if signed > 0 else np.conj(vals)
    return out


def zeta(s: complex, prec: EvalPrecision = DEFAULT_PRECISION,
         *, em_crossover: float = EM_CROSSOVER_DEFAULT) -> complex:
    """zeta(s) to abs_tol: Euler-Maclaurin up to the crossover height, the
    Riemann-Siegel route on the critical line above it."""
    s = complex(s)
    if s == 1.0:
        raise PreconditionError("zeta has a pole at s = 1")
    t = s.imag
    if abs(t) > em_crossover and abs(s.real - 0.5) < 1e-12:
        z = rs_z_values(np.array([abs(t)]), prec)[0]
        val = z * np.exp(-1j * rs_theta(abs(t)))
        return complex(val) if t >= 0 else complex(np.conj(val))
    vals = zeta_em_values(s.real, np.array([t]), prec)
    return complex(vals[0])


# ----------------------------------------------------------------------
# Riemann-Siegel theta and Z
# ----------------------------------------------------------------------


def rs_theta(t: Union[float, np.ndarray]):
    """Continuous phase theta(t) with theta(0) = 0, odd in t.

    For |t| >= 10 the asymptotic series (three correction terms, absolute
    error below 4e-11) is used; below that, direct log-Gamma evaluation.
    """
    t = np.asarray(t, dtype=float)
    scalar = t.ndim == 0
    t = np.atleast_1d(t)
    out = np.empty_like(t)
    big = np.abs(t) >= 10.0
    tb = np.abs(t[big])
    out[big] = (
        0.5 * tb * np.log(tb / TWO_PI)
        - 0.5 * tb
        - math.pi / 8.0
        + 1.0 / (48.0 * tb)
        + 7.0 / (5760.0 * tb**3)
        + 31.0 / (80640.0 * tb**5)
    )
    ts = np.abs(t[~big])
    out[~big] = np.imag(loggamma(0.25 + 0.5j * ts)) - 0.5 * ts * math.log(math.pi)
    out = out * np.sign(t)
    return float(out[0]) if scalar else out


def _psi_direct(w):
    """cos(2 pi (w^2 - w - 1/16)) / cos(2 pi w); entire after removing the
    common zeros, but evaluated directly away from them."""
    return np.cos(TWO_PI * (w * w - w - 1.0 / 16.0)) / np.cos(TWO_PI * w)


@lru_cache(maxsize=None)
def _psi_deriv_cheb(k: int):
    """Chebyshev series of the k-th derivative of psi on [0, 1].

    Values come from the Cauchy integral on a circle of radius 0.5 with
    half-offset trapezoid nodes, which keeps every sample safely away from
    the removable-singularity points of the direct formula.
    """
    n_phi = 512
    radius = 0.5
    phi = TWO_PI * (np.arange(n_phi) + 0.5) / n_phi
    ring = radius * np.exp(1j * phi)
    xs = 0.5 + 0.5 * np.cos(np.pi * (np.arange(160) + 0.5) / 160)  # Chebyshev pts in [0,1]
    samples = _psi_direct(xs[:, None] + ring[None, :])
    weights = np.exp(-1j * k * phi) * math.factorial(k) / radius**k
    vals = np.real(samples @ weights) / n_phi
    return np.polynomial.chebyshev.Chebyshev.fit(xs, vals, deg=80, domain=[0.0, 1.0])


def _rs_correction_coeffs(p: np.ndarray, n_terms: int) -> List[np.ndarray]:
    """C_0(p) .. C_{n_terms-1}(p) for the Riemann-Siegel remainder."""
    d = {k: _psi_deriv_cheb(k)(p) for k in range(10)}
    pi2 = math.pi**2
    coeffs = [
        d[0],
        -d[3] / (96.0 * pi2),
        d[2] / (64.0 * pi2) + d[6] / (18432.0 * pi2**2),
        -d[1] / (64.0 * pi2) - d[5] / (3840.0 * pi2**2) - d[9] / (5308416.0 * pi2**3),
    ]
    return coeffs[:n_terms]


def rs_z_values(ts: np.ndarray, prec: EvalPrecision = DEFAULT_PRECISION) -> np.ndarray:
    """Hardy Z by the Riemann-Siegel main sum plus correction terms.

    Valid for t large enough that the main sum has at least one term;
    accuracy improves like (t/2pi)^{-(2k+3)/4} with k correction terms.
    """
    ts = np.asarray(ts, dtype=float)
    if np.any(ts < 2.0 * TWO_PI):
        raise PreconditionError("Riemann-Siegel route needs t >= 4 pi")
    tau = np.sqrt(ts / TWO_PI)
    m = np.floor(tau).astype(int)
    p = tau - m
    theta = rs_theta(ts)
    out = np.zeros(len(ts))
    for mm in np.unique(m):
        idx = m == mm
        n = np.arange(1, mm + 1, dtype=float)
        out[idx] = 2.0 * (
            np.cos(theta[idx][:, None] - ts[idx][:, None] * np.log(n)[None, :])
            @ (1.0 / np.sqrt(n))
        )
    if prec.rs_correction_terms > 0:
        corr = np.zeros(len(ts))
        scale = np.ones(len(ts))
        for c in _rs_correction_coeffs(p, prec.rs_correction_terms):
            corr += c * scale
            scale /= tau
        out += np.where(m % 2 == 0, -1.0, 1.0) * corr / np.sqrt(tau)
    return out


def hardy_Z(t: float, prec: EvalPrecision = DEFAULT_PRECISION,
            *, em_crossover: float = EM_CROSSOVER_DEFAULT) -> float:
    """Real rotation exp(i theta(t)) zeta(1/2 + it); even in t."""
    return float(z_values(np.array([abs(t)]), prec, em_crossover=em_crossover)[0])


def z_values(ts: np.ndarray, prec: EvalPrecision = DEFAULT_PRECISION,
             *, em_crossover: float = EM_CROSSOVER_DEFAULT) -> np.ndarray:
    """Vectorized Hardy Z over nonnegative heights, dispatching between the
    Euler-Maclaurin and Riemann-Siegel routes at the crossover."""
    ts = np.asarray(ts, dtype=float)
    if np.any(ts < 0):
        raise PreconditionError("z_values expects nonnegative heights")
    out = np.empty(len(ts))
    low = ts <= em_crossover
    if np.any(low):
        vals = zeta_em_matrix([0.5], ts[low], prec)[0]
        rotated = np.exp(1j * rs_theta(ts[low])) * vals
        resid = np.max(np.abs(rotated.imag))
        if resid > 50.0 * prec.abs_tol * max(1.0, float(np.max(np.abs(rotated)))):
            raise PrecisionUnreachableError(
                f"imaginary residue {resid:.2e} of the rotated value exceeds tolerance"
            )
        out[low] = rotated.real
    if np.any(~low):
        out[~low] = rs_z_values(ts[~low], prec)
    return out


# ----------------------------------------------------------------------
# argument tracking (method A)
# ----------------------------------------------------------------------


def _principal_log_ratio(hi: np.ndarray, lo: np.ndarray) -> np.ndarray:
    return np.log(lo / hi)


def _track_delta(
    sig_hi: float,
    sig_lo: float,
    ts: np.ndarray,
    z_hi: np.ndarray,
    z_lo: np.ndarray,
    prec: EvalPrecision,
    depth: int,
) -> np.ndarray:
    delta = _principal_log_ratio(z_hi, z_lo)
    bad = np.abs(delta) >= 0.5 * math.pi
    if not np.any(bad):
        return delta
    if depth >= _TRACK_MAX_DEPTH:
        raise CertificationError(
            f"argument tracking failed to converge between sigma={sig_hi} and "
            f"{sig_lo} (zero too close to the path)"
        )
    mid = 0.5 * (sig_hi + sig_lo)
    z_mid = zeta_em_matrix([mid], ts[bad], prec)[0]
    delta_bad = _track_delta(sig_hi, mid, ts[bad], z_hi[bad], z_mid, prec, depth + 1)
    delta_bad += _track_delta(mid, sig_lo, ts[bad], z_mid, z_lo[bad], prec, depth + 1)
    delta[bad] = delta_bad
    return delta


def log_zeta_values(
    sigma: float, ts: np.ndarray, prec: EvalPrecision = DEFAULT_PRECISION
) -> np.ndarray:
    """Continuous-branch log zeta(sigma + i t), real at sigma = 2, t = 0.

    sigma must be >= 1/2; heights of either sign are accepted (negative
    heights by conjugation).  Branch convention: horizontal continuation
    from the right, so the cut of each zero/pole extends to its left.
    """
    if sigma < 0.5:
        raise PreconditionError("continuous log is only tracked for sigma >= 1/2")
    ts = np.asarray(ts, dtype=float)
    out = np.empty(len(ts), dtype=complex)
    for mask, signed in ((ts >= 0, 1.0), (ts < 0, -1.0)):
        if not np.any(mask):
            continue
        tt = signed * ts[mask]
        ladder = [s for s in _SIGMA_LADDER if s > sigma + 1e-12]
        ladder.append(sigma)
        zmat = zeta_em_matrix(ladder, tt, prec)
        logz = np.log(zmat[0])  # principal = continuous on the sigma=2 line
        for j in range(len(ladder) - 1):
            logz += _track_delta(
                ladder[j], ladder[j + 1], tt, zmat[j], zmat[j + 1], prec, 0
            )
        out[mask] = logz if signed > 0 else np.conj(logz)
    return out


def s_values(ts: np.ndarray, prec: EvalPrecision = DEFAULT_PRECISION) -> np.ndarray:
    """S(t) by argument tracking for an array of heights (method A)."""
    return np.imag(log_zeta_values(0.5, ts, prec)) / math.pi


def s_of_t(
    t: float,
    prec: EvalPrecision = DEFAULT_PRECISION,
    *,
    ordinate_eps: float = 1e-5,
) -> float:
    """S(t) by argument tracking, jump-averaged at zero ordinates.

    At a height that sits on a zero (detected by the tracker failing to
    converge, or |Z| at rounding level), the two-sided average
    (S(t+eps) + S(t-eps))/2 is returned, confirmed by an eps/2 repeat.
    """
    if t == 0.0:
        return 0.0  # symmetric convention: S(0-) = -S(0+)
    if t < 0:
        return -s_of_t(-t, prec, ordinate_eps=ordinate_eps)
    try:
        z = hardy_Z(t, prec)
        at_zero = abs(z) < 1e3 * prec.abs_tol
    except PrecisionUnreachableError:
        at_zero = True
    if not at_zero:
        try:
            return float(s_values(np.array([t]), prec)[0])
        except CertificationError:
            pass  # fall through to the two-sided average
    eps = ordinate_eps
    pair = s_values(np.array([t + eps, t - eps, t + eps / 2, t - eps / 2]), prec)
    avg1 = 0.5 * (pair[0] + pair[1])
    avg2 = 0.5 * (pair[2] + pair[3])
    if abs(avg1 - avg2) > 1e-3:
        raise CrossCheckError(
            f"two-sided averages at t={t} disagree: {avg1} vs {avg2}"
        )
    return float(avg2)


# ----------------------------------------------------------------------
# zero location, counting, tables (method B support)
# ----------------------------------------------------------------------


def _scan_step(t_hi: float) -> float:
    gap = TWO_PI / math.log(max(t_hi, 20.0) / TWO_PI)
    return min(0.5, gap / 5.0)


def _counting_value(t: float, prec: EvalPrecision) -> float:
    return rs_theta(t) / math.pi + 1.0 + s_of_t(t, prec)


def _certified_count(t: float, prec: EvalPrecision) -> int:
    """round(theta/pi + 1 + S) at a point nudged off any zero."""
    x = t
    for _ in range(8):
        val = _counting_value(x, prec)
        if abs(val - round(val)) < 0.26:
            return int(round(val))
        x += 0.0123
    raise CertificationError(f"counting value refuses to settle near t={t}")


def find_zeros(
    t_lo: float,
    t_hi: float,
    prec: EvalPrecision = DEFAULT_PRECISION,
    *,
    desk_limit: float = DESK_LIMIT_DEFAULT,
    _refine_rounds: int = 3,
) -> np.ndarray:
    """Ordinates of the critical-line zeros in (t_lo, t_hi), ascending.

    Sign changes of Z on a scan grid are refined by bisection; the count
    is certified against the counting formula at both endpoints, with the
    grid halved (up to three rounds) if zeros were missed.
    """
    if not (0.0 <= t_lo < t_hi):
        raise PreconditionError("need 0 <= t_lo < t_hi")
    if t_hi > desk_limit:
        raise PreconditionError(f"t_hi={t_hi} above the desk limit {desk_limit}")
    lo = max(t_lo, 1.0)  # no zeros below t = 1
    if lo >= t_hi:
        return np.empty(0)
    expected = _certified_count(t_hi, prec) - _certified_count(t_lo, prec) if t_lo > 1.0 \
        else _certified_count(t_hi, prec)
    step = _scan_step(t_hi)
    for attempt in range(_refine_rounds):
        grid = np.linspace(lo, t_hi, max(8, int(math.ceil((t_hi - lo) / step))) + 1)
        z = z_values(grid, prec)
        sign_change = np.nonzero(np.sign(z[:-1]) * np.sign(z[1:]) < 0)[0]
        a = grid[sign_change].copy()
        b = grid[sign_change + 1].copy()
        za = z[sign_change].copy()
        for _ in range(52):
            if np.all(b - a < 1e-12 * np.maximum(1.0, b)):
                break
            mid = 0.5 * (a + b)
            zm = z_values(mid, prec)
            left = np.sign(zm) == np.sign(za)
            a = np.where(left, mid, a)
            za = np.where(left, zm, za)
            b = np.where(left, b, mid)
        ordinates = 0.5 * (a + b)
        if len(ordinates) == expected:
            return np.sort(ordinates)
        if len(ordinates) > expected:
            break  # spurious extra sign changes would mean a real inconsistency
        step /= 2.0
    raise MissedZerosError(
        f"zero scan found {len(ordinates)} zeros in ({t_lo}, {t_hi}) but the "
        f"counting formula certifies {expected}",
        expected=expected,
        found=len(ordinates),
    )


class ZeroTable:
    """Ascending critical-line ordinates with half-weight exact counting."""

    def __init__(self, ordinates: Sequence[float]):
        arr = np.asarray(ordinates, dtype=float)
        if len(arr) and np.any(np.diff(arr) <= 0):
            raise PreconditionError("ordinates must be strictly increasing")
        self.ordinates = arr

    def __len__(self) -> int:
        return len(self.ordinates)

    @property
    def t_max(self) -> float:
        return float(self.ordinates[-1]) if len(self.ordinates) else 0.0

    def count_below(self, t: float) -> float:
        """N(t): zeros with 0 < gamma < t, half-weight at gamma = t."""
        left = float(np.searchsorted(self.ordinates, t, side="left"))
        right = float(np.searchsorted(self.ordinates, t, side="right"))
        return left + 0.5 * (right - left)

    @classmethod
    def from_range(cls, t_hi: float, prec: EvalPrecision = DEFAULT_PRECISION) -> "ZeroTable":
        return cls(find_zeros(0.0, t_hi, prec))

    @classmethod
    def from_records(cls, records: Sequence[ZeroRecord]) -> "ZeroTable":
        return cls([r.gamma for r in records])


def load_zero_table(path) -> List[ZeroRecord]:
    """Read one decimal ordinate per line ('#' comments, blank lines, and
    CRLF endings allowed); returns ascending records with beta = 1/2."""
    records: List[ZeroRecord] = []
    prev = 0.0
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            try:
                gamma = float(line)
            except ValueError as exc:
                raise TableFormatError(
                    f"line {lineno}: cannot parse ordinate {line!r}", line=lineno
                ) from exc
            if gamma <= prev:
                raise TableFormatError(
                    f"line {lineno}: ordinate {gamma} not above previous {prev}",
                    line=lineno,
                )
            records.append(ZeroRecord(0.5, gamma))
            prev = gamma
    return records


def critical_sample(
    t: float,
    table: ZeroTable,
    prec: EvalPrecision = DEFAULT_PRECISION,
    *,
    cross_tol: float = 1e-6,
) -> CriticalSample:
    """Evaluate Z, theta and both S(t) routes at t and cross-check them."""
    if t <= 0 or t > table.t_max:
        raise PreconditionError("height must be positive and covered by the table")
    theta = float(rs_theta(t))
    z = hardy_Z(t, prec)
    s_arg = s_of_t(t, prec)
    n_t = table.count_below(t)
    s_count = n_t - theta / math.pi - 1.0
    if abs(s_arg - s_count) > cross_tol:
        raise CrossCheckError(
            f"S(t) methods disagree at t={t}: tracking {s_arg} vs counting {s_count}"
        )
    return CriticalSample(t, z, theta, s_arg, s_count, n_t)


def functional_equation_factor(s: complex) -> complex:
    """chi(s) = 2^s pi^(s-1) sin(pi s / 2) Gamma(1 - s), via stable logs."""
    s = complex(s)
    z = 0.5 * math.pi * s
    if z.imag > 8.0:
        logsin = -1j * z - np.log(2j) + np.log1p(-np.exp(2j * z))
    elif z.imag < -8.0:
        logsin = 1j * z - np.log(2j) + np.log1p(-np.exp(-2j * z))
    else:
        logsin = np.log(np.sin(z))
    logchi = s * math.log(2.0) + (s - 1.0) * math.log(math.pi) + logsin + loggamma(1.0 - s)
    return complex(np.exp(logchi))
