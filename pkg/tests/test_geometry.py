import math

import numpy as np
import pytest
from hypothesis import assume, given

from clusterknot import fixtures
from clusterknot.braid import closure_diagram, parse_braid_word
from clusterknot.decoration import Decoration, generic_decoration
from clusterknot.errors import DegenerateTetrahedron
from clusterknot.geometry import (TetShape, all_shapes, gluing_residual, shape_cycle, tet_shape,
                                  volume)
from clusterknot.linalg import bloch_wigner
from clusterknot.ptolemy import EDGES, extend_assignment
from clusterknot.decoration import assemble_solution
from clusterknot.representation import solve_parabolic

from conftest import cplx

VOL_41 = 2.029883212819307


def pt(w):
    return np.array([w, 1], dtype=complex)


@given(cplx(), cplx(-2, 2).filter(lambda t: abs(t) > 0.1))
def test_shape_homogeneous(w, t):
    assume(min(abs(w), abs(w - 1)) > 1e-2)
    v = [pt(0), pt(1), np.array([1, 0], dtype=complex), pt(w)]
    z = tet_shape(*v)
    v[2] = t * v[2]
    assert abs(tet_shape(*v) - z) < 1e-9 * max(1, abs(z))


def test_shape_at_sixth_root():
    w = complex(0.5, math.sqrt(3) / 2)
    # points 0, inf, 1, w: cross-ratio lands on the unit circle
    z = tet_shape(pt(0), np.array([1, 0]), pt(1), pt(w))
    assert abs(abs(z) - 1) < 1e-12


def test_degenerate_tet():
    with pytest.raises(DegenerateTetrahedron):
        tet_shape(pt(0), pt(0), pt(1), pt(2))


@given(cplx())
def test_shape_cycle_product(z):
    assume(min(abs(z), abs(z - 1)) > 1e-3)
    a, b, c = shape_cycle(z)
    assert abs(a * b * c + 1) < 1e-9 * max(1, abs(a * b * c))


def test_fixture_volume_and_gluing(d41, rep41, dec41):
    shapes = all_shapes(dec41, d41, rep41)
    assert len(shapes) == 25
    assert all(abs(s.z) > 1e-9 and abs(s.z - 1) > 1e-9 for s in shapes)
    assert abs(volume(shapes) - VOL_41) < 1e-9
    g = gluing_residual(shapes, d41)
    assert len(g.residuals) == 27 and g.passed


def test_angle_sums_are_whole_turns(d41, rep41, dec41):
    g = gluing_residual(all_shapes(dec41, d41, rep41), d41)
    for s in g.angle_sums.values():
        assert abs(s / (2 * math.pi) - round(s / (2 * math.pi))) < 1e-9


def test_conjugate_rep_negates(d41):
    rep = fixtures.representation(lam=np.conj(fixtures.LAMBDA), d=d41)
    dec = generic_decoration(d41, rep, seed=2)
    assert abs(volume(all_shapes(dec, d41, rep)) + VOL_41) < 1e-9


@pytest.mark.parametrize("seed", range(4))
def test_volume_independent_of_decoration(d41, rep41, seed):
    dec = generic_decoration(d41, rep41, seed=seed)
    assert abs(volume(all_shapes(dec, d41, rep41)) - VOL_41) < 1e-9


@given(cplx(-2, 2).filter(lambda t: abs(t) > 0.2), cplx(-2, 2).filter(lambda t: abs(t) > 0.2))
def test_volume_scaling_invariant(s, t):
    d = fixtures.diagram()
    rep = fixtures.representation(d=d)
    base = generic_decoration(d, rep, seed=0)
    dec = Decoration(s * base.W, {j: t * v for j, v in base.V.items()}, base.H, base.params)
    assert abs(volume(all_shapes(dec, d, rep)) - VOL_41) < 1e-8


def test_volume_conjugation_invariant(d41, rep41):
    g = np.array([[1.2, 0.3 - 0.5j], [0.4j, 1]], dtype=complex)
    g = g / np.sqrt(np.linalg.det(g))
    base = generic_decoration(d41, rep41, seed=0)
    rep = rep41.conjugate(g)
    dec = Decoration(g @ base.W, {j: g @ v for j, v in base.V.items()},
                     {a: g @ h for a, h in base.H.items()}, base.params)
    assert abs(volume(all_shapes(dec, d41, rep)) - VOL_41) < 1e-8


def test_ptolemy_ratio_compatibility(d41, rep41, dec41):
    a = extend_assignment(d41, assemble_solution(d41, dec41))
    shapes = all_shapes(dec41, d41, rep41)
    for s in shapes:
        o = a.crossings[s.crossing - 1]
        v = s.vertices

        def c(i, j):
            lab, sg = EDGES[o.sign][(min(i, j), max(i, j))]
            return (sg if i < j else -sg) * o.value(lab)
        zc = c(v[0], v[2]) * c(v[1], v[3]) / (c(v[0], v[3]) * c(v[1], v[2]))
        assert abs(zc - s.z) < 1e-9 * max(1, abs(s.z))


def test_trefoil_flat():
    d = closure_diagram(parse_braid_word("[1,1,1]"))
    rep = solve_parabolic(d, seed=0)[0]
    shapes = all_shapes(generic_decoration(d, rep, seed=0), d, rep)
    assert abs(volume(shapes)) < 1e-6
    assert gluing_residual(shapes, d).passed


def test_non_solution_breaks_gluing(d41, rep41, dec41):
    shapes = all_shapes(dec41, d41, rep41)
    rng = np.random.default_rng(0)
    noisy = [TetShape(s.crossing, s.vertices, s.z * (1 + 0.3 * rng.normal())) for s in shapes]
    assert gluing_residual(noisy, d41).max_residual > 1e-2


def test_bloch_wigner_sum():
    assert abs(2 * bloch_wigner(complex(0.5, math.sqrt(3) / 2)) - VOL_41) < 1e-13


def test_five_two_volume():
    # 5_2 with a kink; its geometric volume is 2.82812208833...
    d = closure_diagram(parse_braid_word("[1,1,1,2,-1,2,3]"))
    vols = [volume(all_shapes(generic_decoration(d, r, seed=0), d, r)) for r in solve_parabolic(d, seed=0)]
    assert max(abs(v) for v in vols) == pytest.approx(2.8281220883307827, abs=1e-8)
