"""2x2 complex linear algebra and the Bloch-Wigner dilogarithm.

Vectors are length-2 complex numpy arrays, matrices 2x2 complex arrays.
"""
from fractions import Fraction
from math import factorial

import numpy as np

from .config import TOL
from .errors import DegenerateShape, SingularMatrix

ID2 = np.eye(2, dtype=complex)


def vec(a, b):
    return np.array([a, b], dtype=complex)


def mat(a, b, c, d):
    return np.array([[a, b], [c, d]], dtype=complex)


def det2(u, v):
    """The pairing u1 v2 - u2 v1."""
    return u[0] * v[1] - u[1] * v[0]


def mat_mul(*ms):
    out = ID2
    for m in ms:
        out = out @ m
    return out


def mat_det(m):
    return m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]


def mat_inv(m):
    d = mat_det(m)
    if abs(d) < TOL.degenerate:
        raise SingularMatrix(f"determinant {d} too small to invert")
    return np.array([[m[1, 1], -m[0, 1]], [-m[1, 0], m[0, 0]]], dtype=complex) / d


def mat_trace(m):
    return m[0, 0] + m[1, 1]


def mat_apply(m, v):
    return m @ v


def rel_err(a, b):
    """max |a-b| scaled by the largest magnitude involved (at least 1)."""
    a, b = np.asarray(a, dtype=complex), np.asarray(b, dtype=complex)
    scale = max(1.0, float(np.max(np.abs(a), initial=0)), float(np.max(np.abs(b), initial=0)))
    return float(np.max(np.abs(a - b), initial=0)) / scale


def close_to_pm_identity(m, tol=TOL.identity):
    """Return (sign, residual) with sign the closer of +Id / -Id."""
    rp = float(np.max(np.abs(m - ID2)))
    rm = float(np.max(np.abs(m + ID2)))
    return (1, rp) if rp <= rm else (-1, rm)


# ---------------------------------------------------------------- dilogarithm

def _bernoulli(nmax):
    b = [Fraction(0)] * (nmax + 1)
    b[0] = Fraction(1)
    for m in range(1, nmax + 1):
        b[m] = -sum(Fraction(factorial(m + 1), factorial(k) * factorial(m + 1 - k)) * b[k]
                    for k in range(m)) / (m + 1)
    return b


_NTERMS = 60
# Li2(z) = sum_k B_k u^(k+1)/(k+1)!, u = -log(1-z); B_1 = -1/2 convention
_LI2_COEFFS = [float(bk) / factorial(k + 1) for k, bk in enumerate(_bernoulli(_NTERMS))]


def _li2_near(z):
    u = -np.log(1 - z)
    total, p = 0j, u
    for c in _LI2_COEFFS:
        if c:
            total += c * p
        p *= u
    return total


def _bw_direct(z):
    return _li2_near(z).imag + np.angle(1 - z) * np.log(abs(z))


def bloch_wigner(z) -> float:
    """D(z) = Im Li2(z) + arg(1-z) log|z|.

    z is moved into {|w| <= 1, Re w <= 1/2} with the six-fold symmetry
    D(z) = D(1-1/z) = D(1/(1-z)) = -D(1/z) = -D(1-z) = -D(z/(z-1)),
    where the Bernoulli series in -log(1-w) converges fast.
    """
    z = complex(z)
    if abs(z) < TOL.degenerate or abs(z - 1) < TOL.degenerate:
        raise DegenerateShape(f"Bloch-Wigner undefined at {z}")
    if z.imag == 0:
        return 0.0
    orbit = [
        (z, 1), (1 - 1 / z, 1), (1 / (1 - z), 1),
        (1 / z, -1), (1 - z, -1), (z / (z - 1), -1),
    ]
    best = min(orbit, key=lambda ws: (abs(ws[0]) > 1 + 1e-12 or ws[0].real > 0.5 + 1e-12,
                                      abs(np.log(1 - ws[0]))))
    w, sign = best
    return sign * float(_bw_direct(w))
