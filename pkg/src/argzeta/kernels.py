"""Signed smoothing kernels built on the Fejer window.

The window is omega(u) = (sin(u/2)/(u/2))^2 / (2*pi), whose Fourier
transform (convention  f_hat(v) = int f(u) exp(-i v u) du) is the triangle
max(0, 1-|v|).  The two signed kernels scale the window by a*lam and
modulate it with 1 -/+ sin((2/3)*lam*u), giving a pointwise-nonnegative
(sign=+1) or nonpositive (sign=-1) kernel whose transform is a sum of
three shifted triangles.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field, asdict
from typing import List, Sequence, Union

import numpy as np

from .errors import PreconditionError
from .quadrature import oscillatory_inv_u2_tail, panel_quad

MODULATION_RATE = 2.0 / 3.0  # frequency of the sin factor, in units of lam


@dataclass(frozen=True)
class KernelParams:
    """Scale and sign of a smoothing kernel: width parameter a in (0, 1/3),
    frequency scale lam > 0, sign +1 or -1."""

    a: float
    lam: float
    sign: int = +1

    def __post_init__(self):
        if not (0.0 < self.a < 1.0 / 3.0):
            raise PreconditionError(f"a must lie in (0, 1/3), got {self.a}")
        if self.lam <= 0:
            raise PreconditionError(f"lam must be positive, got {self.lam}")
        if self.sign not in (+1, -1):
            raise PreconditionError(f"sign must be +1 or -1, got {self.sign}")

    @property
    def alpha(self) -> float:
        """Window scale a*lam."""
        return self.a * self.lam

    @property
    def mod_freq(self) -> float:
        """Modulation frequency (2/3)*lam."""
        return MODULATION_RATE * self.lam

    @property
    def transform_support(self) -> float:
        """Half-width (2/3 + a)*lam of the transform's support."""
        return self.mod_freq + self.alpha


_SMALL = 1e-4


def omega(u: Union[float, complex, np.ndarray]):
    """Fejer window (sin(u/2)/(u/2))^2 / (2*pi), entire in u.

    The removable singularity at 0 is evaluated by the even Taylor series
    for |u| < 1e-4.
    """
    u = np.asarray(u)
    scalar = u.ndim == 0
    u = np.atleast_1d(u)
    out = np.empty(u.shape, dtype=complex if np.iscomplexobj(u) else float)
    small = np.abs(u) < _SMALL
    us = u[small]
    # (sin x / x)^2 = 1 - x^2/3 + 2x^4/45 - ...,  x = u/2
    out[small] = (1.0 - us**2 / 12.0 + us**4 / 240.0) / (2.0 * math.pi)
    ub = u[~small]
    x = ub / 2.0
    out[~small] = (np.sin(x) / x) ** 2 / (2.0 * math.pi)
    if not np.iscomplexobj(u):
        out = out.real if np.iscomplexobj(out) else out
    return out[0] if scalar else out


def omega_hat(v: Union[float, np.ndarray]):
    """Triangle transform max(0, 1-|v|) of the Fejer window."""
    v = np.asarray(v, dtype=float)
    out = np.maximum(0.0, 1.0 - np.abs(v))
    return float(out) if out.ndim == 0 else out


def K(params: KernelParams, z: Union[float, complex, np.ndarray]):
    """Signed kernel a*lam * omega(a*lam*z) * (sign - sin((2/3)*lam*z)).

    Analytic in z; callers that integrate over a horizontal strip should
    stay within |Im z| <= 2, where the growth bounds hold.
    """
    z = np.asarray(z)
    if np.iscomplexobj(z) and np.any(np.abs(z.imag) > 2.0 + 1e-12):
        raise PreconditionError("kernel evaluated outside the strip |Im z| <= 2")
    al = params.alpha
    val = al * omega(al * z) * (params.sign - np.sin(params.mod_freq * z))
    return val


def K_hat(params: KernelParams, v: Union[float, np.ndarray]):
    """Closed-form transform: three shifted triangles.

    sign * tri(v/(a lam)) + (i/2) tri((v - (2/3)lam)/(a lam))
                          - (i/2) tri((v + (2/3)lam)/(a lam)).
    """
    v = np.asarray(v, dtype=float)
    al = params.alpha
    b = params.mod_freq
    out = np.asarray(
        params.sign * omega_hat(v / al)
        + 0.5j * omega_hat((v - b) / al)
        - 0.5j * omega_hat((v + b) / al)
    )
    return complex(out) if out.ndim == 0 else out


# ----------------------------------------------------------------------
# numeric Fourier transforms: Gauss-Legendre panels on [-U, U] plus the
# exact sici tail of the (1 - cos)(sign - sin)/u^2 expansion
# ----------------------------------------------------------------------


def _kernel_exp_terms(params: KernelParams):
    """Coefficients and frequencies of K(u)*pi*alpha*u^2 as a sum of
    complex exponentials."""
    s = params.sign
    al = params.alpha
    b = params.mod_freq
    return [
        (s, 0.0),
        (0.5j, b),
        (-0.5j, -b),
        (-0.5 * s, al),
        (-0.5 * s, -al),
        (-0.25j, b + al),
        (0.25j, -(b + al)),
        (-0.25j, b - al),
        (0.25j, -(b - al)),
    ]


def kernel_fourier_numeric(
    params: KernelParams, v: float, *, big_u: float = 0.0, order: int = 16
) -> complex:
    """int K(u) exp(-i v u) du by panel quadrature with an exact tail.

    Independent of K_hat: the finite part is direct quadrature of K, and
    the |u| > U remainder is integrated in closed form via Si.
    """
    al = params.alpha
    if big_u <= 0:
        big_u = 60.0 + 40.0 / al
    fmax = params.transform_support + abs(v)
    width = 0.5 * math.pi / max(fmax, 1.0)

    def f(u):
        return K(params, u) * np.exp(-1j * v * u)

    finite = panel_quad(f, -big_u, big_u, max_width=width, order=order)
    tail_terms = [(c, fr - v) for c, fr in _kernel_exp_terms(params)]
    tail = oscillatory_inv_u2_tail(tail_terms, big_u) / (math.pi * al)
    return complex(finite + tail)


def omega_fourier_numeric(v: float, *, big_u: float = 200.0, order: int = 16) -> complex:
    """int omega(u) exp(-i v u) du by panel quadrature with an exact tail."""
    width = 0.5 * math.pi / max(1.0 + abs(v), 1.0)

    def f(u):
        return omega(u) * np.exp(-1j * v * u)

    finite = panel_quad(f, -big_u, big_u, max_width=width, order=order)
    terms = [(1.0, -v), (-0.5, 1.0 - v), (-0.5, -1.0 - v)]
    tail = oscillatory_inv_u2_tail(terms, big_u) / math.pi
    return complex(finite + tail)


def kernel_abs_integral(params: KernelParams, *, big_u: float = 0.0) -> float:
    """Quadrature value of int |K(u)| du plus an envelope tail estimate."""
    al = params.alpha
    if big_u <= 0:
        big_u = 60.0 + 60.0 / al
    width = 0.5 * math.pi / max(params.transform_support, 1.0)

    def f(u):
        return np.abs(K(params, u))

    finite = panel_quad(f, -big_u, big_u, max_width=width).real
    tail = 8.0 / (math.pi * al * big_u)  # |K(u)| <= 4/(pi*alpha*u^2)
    return finite + tail


def kernel_l2_norm(params: KernelParams, *, big_u: float = 0.0) -> float:
    """(int K(u)^2 du)^(1/2) on the real line."""
    al = params.alpha
    if big_u <= 0:
        big_u = 60.0 + 60.0 / al
    width = 0.5 * math.pi / max(params.transform_support, 1.0)

    def f(u):
        k = K(params, u)
        return k * k

    finite = panel_quad(f, -big_u, big_u, max_width=width).real
    tail = 32.0 / (3.0 * math.pi**2 * al**2 * big_u**3)
    return math.sqrt(finite + tail)


# ----------------------------------------------------------------------
# property verification report
# ----------------------------------------------------------------------


@dataclass
class PropertyCheck:
    prop_id: str
    passed: bool
    residual: float
    grid: str


@dataclass
class KernelPropertyReport:
    params_a: float
    params_lam: float
    params_sign: int
    tol: float
    checks: List[PropertyCheck] = field(default_factory=list)

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def check(self, prop_id: str) -> PropertyCheck:
        for c in self.checks:
            if c.prop_id == prop_id:
                return c
        raise KeyError(prop_id)

    def to_json(self, indent: int = 2) -> str:
        return json.dumps(asdict(self), indent=indent)


def verify_kernel_properties(
    params: KernelParams,
    tol: float = 1e-6,
    *,
    sign_grid: int = 10_000,
    transform_grid: int = 81,
    strip_constant_cap: float = 10.0,
) -> KernelPropertyReport:
    """Numerically certify the four kernel properties.

    (i) fixed sign on the real line; (ii) total absolute mass <= 2;
    (iii) a moderate fitted constant in the strip growth bound for the
    imaginary part; (iv) the closed-form transform matches direct
    quadrature.  Failures are reported, not raised.
    """
    if tol <= 0:
        raise PreconditionError("tol must be positive")
    report = KernelPropertyReport(params.a, params.lam, params.sign, tol)

    # (i) sign on a real grid
    xs = np.linspace(-100.0, 100.0, sign_grid)
    vals = params.sign * np.asarray(K(params, xs)).real
    worst = float(np.min(vals))
    resid = max(0.0, -worst)
    report.checks.append(
        PropertyCheck("sign", resid <= tol, resid, f"{sign_grid} pts in [-100, 100]")
    )

    # (ii) absolute integral <= 2
    mass = kernel_abs_integral(params)
    resid = max(0.0, mass - 2.0)
    report.checks.append(
        PropertyCheck("abs-mass", resid <= tol, resid, f"|u| <= {60.0 + 60.0 / params.alpha:.0f}")
    )

    # (iii) fitted strip constant for |Im K(x+iy)|
    al = params.alpha
    lam = params.lam
    xg = np.linspace(-50.0, 50.0, 201)
    yg = np.linspace(-2.0, -0.01, 41)
    X, Y = np.meshgrid(xg, yg)
    Z = X + 1j * Y
    imk = np.abs(np.asarray(K(params, Z)).imag)
    envelope = lam**2 * np.abs(Y) * np.exp(lam * np.abs(Y)) / (1.0 + (al * X) ** 2 + (al * Y) ** 2)
    fitted = float(np.max(imk / envelope))
    report.checks.append(
        PropertyCheck(
            "strip-growth",
            fitted <= strip_constant_cap,
            fitted,
            f"{len(xg)}x{len(yg)} grid on [-50,50]x[-2,-0.01], cap {strip_constant_cap}",
        )
    )

    # (iv) transform matches the closed form
    vmax = 2.0 * lam
    vg = np.linspace(-vmax, vmax, transform_grid)
    worst = 0.0
    for v in vg:
        num = kernel_fourier_numeric(params, float(v))
        worst = max(worst, abs(num - K_hat(params, float(v))))
    report.checks.append(
        PropertyCheck("transform", worst <= tol, worst, f"{transform_grid} pts in [-2 lam, 2 lam]")
    )
    return report
