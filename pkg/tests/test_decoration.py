import numpy as np
import pytest
from hypothesis import assume, given

from clusterknot import fixtures
from clusterknot.braid import closure_diagram, parse_braid_word
from clusterknot.cluster import check_nondegenerate, evolve, is_solution
from clusterknot.decoration import (arc_colorings, assemble_solution, build_decoration,
                                    generic_decoration, minus_one_eigenvector, region_colorings)
from clusterknot.errors import InconsistentColoring, ObstructionMismatch
from clusterknot.linalg import det2, rel_err

from conftest import cplx


def test_tables_at_tabulated_params(d41, rep41):
    a, b, g = fixtures.DEFAULT_PARAMS
    dec = fixtures.decoration()
    for i, h in fixtures.H_table().items():
        assert rel_err(dec.H[i], h) < 1e-12
    for j, v in fixtures.V_table(a, b).items():
        assert rel_err(dec.V[j], v) < 1e-12
    for x, e in zip(assemble_solution(d41, dec), fixtures.x_tables(a, b, g)):
        assert rel_err(x, e) < 1e-12


def test_tabulated_params_are_degenerate(d41):
    # alpha = 2 beta kills an entry of x^4; the tables are still exact
    tuples = assemble_solution(d41, fixtures.decoration())
    assert not check_nondegenerate(tuples, d41.braid).passed
    assert is_solution(tuples)


@given(cplx(-2, 2), cplx(-2, 2), cplx(-2, 2))
def test_closed_forms_everywhere(a, b, g):
    assume(abs(a) + abs(b) > 0.1)
    d = fixtures.diagram()
    dec = build_decoration(d, fixtures.representation(d=d), (a, b), (g, 1), h_seed=(1, 0))
    for x, e in zip(assemble_solution(d, dec), fixtures.x_tables(a, b, g)):
        assert rel_err(x, e) < 1e-10


def test_eigenvector(rep41):
    for a, m in rep41.matrices.items():
        v = minus_one_eigenvector(m)
        assert rel_err(m @ v, -v) < 1e-12 and np.abs(v).max() > 0


def test_parity_gate():
    d = closure_diagram(parse_braid_word(fixtures.EVEN_BRAID_TEXT))
    from clusterknot.representation import solve_parabolic
    rep = solve_parabolic(d, seed=0)[0]
    with pytest.raises(ObstructionMismatch) as e:
        arc_colorings(d, rep)
    assert (e.value.rep_parity, e.value.braid_parity) == (-1, 1)


def test_bad_seed(d41, rep41):
    with pytest.raises(InconsistentColoring):
        arc_colorings(d41, rep41, h_seed=(0, 1))


def test_region_rule(d41, rep41):
    V = region_colorings(d41, rep41, (0.3, 1.1))
    # every arc separates two regions related by its generator
    for arcs, gaps in zip(d41.strand_arcs, d41.region_gaps):
        for p, a in enumerate(arcs, start=1):
            assert rel_err(rep41[a] @ V[gaps[p]], V[gaps[p - 1]]) < 1e-12


def test_generic_decoration_reproducible(d41, rep41):
    a = generic_decoration(d41, rep41, seed=3)
    b = generic_decoration(d41, rep41, seed=3)
    assert a.to_json() == b.to_json()
    tuples = assemble_solution(d41, a)
    assert check_nondegenerate(tuples, d41.braid).passed
    assert is_solution(evolve(d41.braid, tuples[0]), 1e-8)


def test_determinant_scaling(d41, rep41, dec41):
    # W -> tW scales R and O slots by t and leaves U slots alone
    t = 1.7 - 0.3j
    dec = build_decoration(d41, rep41, dec41.V[1], t * dec41.W, h_seed=dec41.H[1])
    for lev, a, b in zip(d41.levels, assemble_solution(d41, dec41), assemble_solution(d41, dec)):
        for s, u, v in zip(lev, a, b):
            assert abs(v - (u if s.kind == "U" else t * u)) < 1e-12 * max(1, abs(u))
    assert det2(dec.W, dec41.W) == 0
