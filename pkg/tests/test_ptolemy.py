import numpy as np
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from clusterknot.braid import closure_diagram, parse_braid_word
from clusterknot.cluster import apply_R
from clusterknot.errors import DegenerateInput, PathNotRecorded
from clusterknot.linalg import det2, mat_trace, rel_err
from clusterknot.ptolemy import (EDGES, RELATIONS, TETS, boundary_holonomies, braid_obstruction,
                                 cocycle_matrices, developed_meridian, edge_classes,
                                 extend_assignment, face_sign, lift_cocycle, meridian_holonomy,
                                 meridian_loops, octahedron_vertices, solve_relations,
                                 triangle_products, verify_crossing_relations)
from clusterknot.representation import trace_invariants

from conftest import nonzero_window


@pytest.fixture(scope="module")
def assignment(d41, tuples41):
    return extend_assignment(d41, tuples41)


def test_ten_relations(assignment):
    chk = verify_crossing_relations(assignment)
    assert chk.passed and chk.max_residual < 1e-12
    assert all(len(row) == 5 for row in chk.residuals)


def test_relations_fail_off_solution(d41, tuples41, rng):
    noisy = [x * (1 + 0.1 * rng.normal(size=x.shape)) for x in tuples41]
    noisy[-1] = noisy[0]
    assert not verify_crossing_relations(extend_assignment(d41, noisy)).passed


@given(nonzero_window(), st.sampled_from([1, -1]))
def test_solved_relations_are_R(x, s):
    xt, _ = solve_relations(s, x)
    r = apply_R(s, x)
    assume(max(abs(v) for v in r) < 1e6)
    assert rel_err(xt, r) < 1e-9


def test_tables_cover_every_edge_once():
    for s in (1, -1):
        assert len(EDGES[s]) == 14 and (0, 1) not in EDGES[s]
        assert set(RELATIONS[s]) == set(TETS)


def test_determinants_match_labels(d41, rep41, dec41, assignment):
    for c, o in zip(d41.crossings, assignment.crossings):
        v = octahedron_vertices(c, dec41, rep41)
        for (i, j), (lab, s) in EDGES[c.sign].items():
            assert abs(det2(v[i], v[j]) - s * o.value(lab)) < 1e-12 * max(1, abs(o.value(lab)))


def test_signed_pluecker(assignment):
    # label values times edge signs satisfy c02 c13 = c03 c12 + c01 c23 exactly
    for o in assignment.crossings:
        def c(i, j):
            return EDGES[o.sign][(i, j)][1] * o.value(EDGES[o.sign][(i, j)][0])
        for a, b, cc, d in TETS:
            lhs = c(a, cc) * c(b, d)
            rhs = c(a, d) * c(b, cc) + c(a, b) * c(cc, d)
            assert abs(lhs - rhs) < 1e-10 * max(1, abs(lhs))


def test_face_sign_is_product_of_edge_signs():
    for s in (1, -1):
        for t in TETS:
            for face in [tuple(v for v in t if v != k) for k in t]:
                i, j, k = face
                assert face_sign(s, face) == EDGES[s][(i, j)][1] * EDGES[s][(i, k)][1] * EDGES[s][(j, k)][1]


def test_triangles_close(assignment):
    rows = triangle_products(assignment)
    assert len(rows) == 5 * 5 * 4
    assert max(r["residual"] for r in rows) < 1e-9


def test_cocycle_inverse_pairs(assignment):
    m = cocycle_matrices(assignment)
    for (ci, t, key), a in m.items():
        if key[0] == "l":
            b = m[(ci, t, ("l", key[2], key[1]))]
            assert np.allclose(a @ b, -np.eye(2)) or np.allclose(a @ b, np.eye(2))
        else:
            b = m[(ci, t, ("s", key[1], key[3], key[2]))]
            assert np.allclose(a @ b, np.eye(2))


def test_meridians_recover_rep(d41, rep41, dec41, assignment):
    mer = {a: developed_meridian(assignment, dec41, rep41, a) for a in d41.arcs}
    for a, m in mer.items():
        assert rel_err(m, rep41[a]) < 1e-10
        assert abs(mat_trace(m) + 2) < 1e-10
        assert abs(mat_trace(meridian_holonomy(assignment, d41, a)) + 2) < 1e-12
    assert np.max(np.abs(trace_invariants(mer) - trace_invariants(rep41.matrices))) < 1e-9


def test_boundary_diagonal(assignment, rep41, dec41):
    mu, lam = boundary_holonomies(assignment, dec41, rep41)
    assert np.allclose(np.diag(mu), [-1, -1], atol=1e-12)
    assert np.allclose(np.diag(lam), [1, 1], atol=1e-9)
    assert abs(mu[1, 0]) < 1e-12 and abs(lam[1, 0]) < 1e-9


def test_lift_values(assignment):
    lifted = lift_cocycle(assignment)
    assert set(lifted) == set(assignment.diagram.arcs)
    for m in lifted.values():
        assert m[0, 0] == -1 and m[1, 1] == -1


def test_path_not_recorded(d41, assignment):
    with pytest.raises(PathNotRecorded):
        meridian_holonomy(assignment, d41, 99)
    assert set(meridian_loops(d41)) == set(d41.arcs)


def test_obstruction_and_classes(d41):
    assert braid_obstruction(5) == -1 and braid_obstruction(4) == 1
    # ideal triangulation of S^3 minus three points: edges = tetrahedra + 2
    assert len(set(edge_classes(d41).values())) == 5 * d41.n + 2


@pytest.mark.parametrize("text", ["[1,1,1]", "[1,1,1,1,1]", "[1,2,-1,2,3,-2,3]"])
def test_edge_class_count(text):
    d = closure_diagram(parse_braid_word(text))
    assert len(set(edge_classes(d).values())) == 5 * d.n + 2


def test_degenerate_extension(d41, tuples41):
    bad = [x.copy() for x in tuples41]
    bad[0][8] = 0  # x3 of the first window, a y-denominator at a negative crossing
    with pytest.raises(DegenerateInput):
        extend_assignment(d41, bad)
