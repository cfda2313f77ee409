"""Quadrature helpers used by the kernel and convolution modules.

Two styles live here:

* fixed-width Gauss-Legendre panels, vectorized, with the panel width
  capped below the shortest oscillation wavelength of the integrand;
* closed-form tails for integrands of the form exp(i f u) / u**2, via the
  sine/cosine integrals, so that quadratically decaying oscillatory
  integrals can be truncated at moderate |u| without losing accuracy.
"""

from __future__ import annotations

import math
from typing import Callable, Iterable, Sequence

import numpy as np
from scipy.integrate import quad
from scipy.special import sici


def gauss_nodes(order: int = 12):
    x, w = np.polynomial.legendre.leggauss(order)
    return x, w


def panel_edges(a: float, b: float, max_width: float, split_at: Sequence[float] = ()) -> np.ndarray:
    """Panel boundaries covering [a, b], split at the given interior points
    and then subdivided so that no panel is wider than max_width."""
    pts = [a, b] + [float(s) for s in split_at if a < s < b]
    pts = sorted(set(pts))
    edges = [pts[0]]
    for left, right in zip(pts, pts[1:]):
        n = max(1, math.ceil((right - left) / max_width))
        edges.extend(left + (right - left) * (k + 1) / n for k in range(n))
    return np.asarray(edges)


def panel_quad(
    f: Callable[[np.ndarray], np.ndarray],
    a: float,
    b: float,
    *,
    max_width: float,
    order: int = 12,
    split_at: Sequence[float] = (),
) -> complex:
    """Integrate f over [a, b] with Gauss-Legendre panels.

    f must accept a flat numpy array of nodes and return values of the
    same shape (real or complex).
    """
    if b <= a:
        return 0.0
    edges = panel_edges(a, b, max_width, split_at)
    x, w = gauss_nodes(order)
    mid = 0.5 * (edges[1:] + edges[:-1])
    half = 0.5 * (edges[1:] - edges[:-1])
    nodes = (mid[:, None] + half[:, None] * x[None, :]).ravel()
    vals = np.asarray(f(nodes)).reshape(len(mid), len(x))
    return (half * (vals * w[None, :]).sum(axis=1)).sum()


def adaptive_quad(f: Callable[[float], float], a: float, b: float, *, tol: float = 1e-10,
                  limit: int = 200) -> float:
    """Scalar adaptive quadrature (QUADPACK Gauss-Kronrod panels)."""
    val, _ = quad(f, a, b, epsabs=tol, epsrel=0.0, limit=limit)
    return val


def cos_over_u2_tail(freq: float, big_u: float) -> float:
    """Exact value of the two-sided tail  int_{|u|>U} cos(f u)/u^2 du.

    Equals 2*(cos(fU)/U - f*(pi/2 - Si(fU))) for f >= 0; the sine part of
    exp(i f u)/u^2 integrates to zero over the symmetric tail.
    """
    f = abs(freq)
    if big_u <= 0:
        raise ValueError("tail start must be positive")
    if f == 0.0:
        return 2.0 / big_u
    si, _ = sici(f * big_u)
    return 2.0 * (math.cos(f * big_u) / big_u - f * (0.5 * math.pi - si))


def oscillatory_inv_u2_tail(terms: Iterable[tuple], big_u: float) -> complex:
    """Tail of sum_j c_j * exp(i f_j u) / u^2 over |u| > U.

    ``terms`` is an iterable of (coefficient, frequency) pairs; the result
    is exact up to double-precision evaluation of Si.
    """
    total = 0j
    for c, f in terms:
        total += c * cos_over_u2_tail(f, big_u)
    return total
