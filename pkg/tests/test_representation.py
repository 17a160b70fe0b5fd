import numpy as np
import pytest
from hypothesis import given

from clusterknot import fixtures
from clusterknot.braid import closure_diagram, parse_braid_word
from clusterknot.errors import InvalidRepresentation, NoSolutionFound
from clusterknot.linalg import mat_trace
from clusterknot.representation import (WirtingerRep, equivalent, obstruction_class, parabolic,
                                        solve_parabolic, trace_invariants, verify_relations)

from conftest import cplx


def test_fixture_relations(rep41):
    r = verify_relations(rep41)
    assert r.passed and r.signs == [1] * 5


def test_fixture_obstruction(rep41):
    assert obstruction_class(rep41) == -1


def test_validation(d41):
    mats = fixtures.matrices()
    mats[2] = -np.eye(2)
    with pytest.raises(InvalidRepresentation):
        WirtingerRep(d41, mats)
    mats = fixtures.matrices()
    mats[3] = np.array([[1, 1], [0, 1]])
    with pytest.raises(InvalidRepresentation):
        WirtingerRep(d41, mats)
    with pytest.raises(InvalidRepresentation):
        WirtingerRep(d41, {1: fixtures.matrices()[1]})


def test_json_round_trip(d41, rep41):
    back = WirtingerRep.from_json(d41, rep41.to_json())
    for a in d41.arcs:
        assert np.allclose(back[a], rep41[a], atol=1e-15)


@given(cplx(), cplx())
def test_parabolic_form(a, b):
    m = parabolic((a, b))
    u = np.array([a, b])
    assert abs(mat_trace(m) + 2) < 1e-9
    assert np.allclose(m @ u, -u, atol=1e-8 * max(1, abs(a) ** 3 + abs(b) ** 3))


@given(cplx(), cplx(), cplx(), cplx())
def test_conjugation_invariance(a, b, c, d):
    g = np.array([[a, b], [c, d]])
    det = a * d - b * c
    if abs(det) < 0.3:
        return
    g = g / np.sqrt(det)
    rep = fixtures.representation()
    assert equivalent(rep, rep.conjugate(g), tol=1e-6)
    assert obstruction_class(rep.conjugate(g)) == -1


def test_solver_figure_eight():
    d = closure_diagram(parse_braid_word("[1,-2,1,-2]"))
    reps = solve_parabolic(d, seed=0)
    ts = set()
    for r in reps:
        assert verify_relations(r, 1e-9).passed
        t = mat_trace(r[1] @ r[2]) - 2
        assert abs(t * t - t + 1) < 1e-8
        ts.add(round(t.imag, 6))
        assert obstruction_class(r) == -1
    assert len(ts) == 2  # the geometric rep and its conjugate


def test_solver_unknot():
    d = closure_diagram(parse_braid_word("[1]", width=2))
    with pytest.raises(NoSolutionFound):
        solve_parabolic(d, attempts=10)


def test_solver_trefoil_matches_known_invariant():
    d = closure_diagram(parse_braid_word("[1,1,1]"))
    reps = solve_parabolic(d, seed=1)
    # trefoil: a single non-abelian parabolic class, tr(g_i g_j) = 1
    assert len(reps) == 1
    assert abs(mat_trace(reps[0][1] @ reps[0][2]) - 1) < 1e-8


def test_trace_invariants_distinguish(rep41):
    other = fixtures.representation(lam=np.conj(fixtures.LAMBDA))
    assert not equivalent(rep41, other)
    assert trace_invariants(rep41.matrices).shape == trace_invariants(other.matrices).shape
