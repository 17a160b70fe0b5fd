import math

import mpmath
import numpy as np
import pytest
from hypothesis import assume, given
from scipy.special import zeta

from clusterknot.errors import DegenerateShape, SingularMatrix
from clusterknot.linalg import bloch_wigner, det2, mat_inv, rel_err

from conftest import cplx


def clausen_pi_3():
    # Cl2(pi/3) from Hurwitz zeta values, independent of any dilogarithm
    return sum(math.sin(r * math.pi / 3) * zeta(2, r / 6) for r in range(1, 6)) / 36


def test_oracle_value():
    assert abs(clausen_pi_3() - 1.0149416064096536) < 1e-14
    assert abs(bloch_wigner(complex(0.5, math.sqrt(3) / 2)) - clausen_pi_3()) < 1e-13


def mp_bw(z):
    z = mpmath.mpc(z)
    return float(mpmath.im(mpmath.polylog(2, z)) + mpmath.arg(1 - z) * mpmath.log(abs(z)))


@given(cplx(-6, 6))
def test_against_mpmath(z):
    assume(abs(z) > 1e-3 and abs(z - 1) > 1e-3)
    assert abs(bloch_wigner(z) - mp_bw(z)) < 1e-10


@given(cplx(-4, 4))
def test_six_fold_symmetry(z):
    assume(abs(z) > 1e-2 and abs(z - 1) > 1e-2)
    d = bloch_wigner(z)
    for w, s in [(1 - 1 / z, 1), (1 / (1 - z), 1), (1 / z, -1), (1 - z, -1), (z.conjugate(), -1)]:
        assert abs(bloch_wigner(w) - s * d) < 1e-10


def test_real_line_and_poles():
    assert bloch_wigner(2.5) == 0.0
    for z in (0, 1):
        with pytest.raises(DegenerateShape):
            bloch_wigner(z)


@given(cplx(), cplx(), cplx(), cplx())
def test_inverse(a, b, c, d):
    m = np.array([[a, b], [c, d]])
    assume(abs(a * d - b * c) > 1e-3)
    assert rel_err(m @ mat_inv(m), np.eye(2)) < 1e-8 * max(1, np.abs(m).max() ** 2 / abs(a * d - b * c))


def test_singular():
    with pytest.raises(SingularMatrix):
        mat_inv(np.array([[1, 2], [2, 4]]))


@given(cplx(), cplx(), cplx(), cplx())
def test_det_antisymmetric(a, b, c, d):
    u, v = np.array([a, b]), np.array([c, d])
    assert det2(u, v) == -det2(v, u)
