"""Colourings of arcs and regions and the determinant construction of a solution.

Conventions (strands downward, fixed by the 4_1 example):

* arc rule: at a crossing of sign s the under-strand vector changes by
  H_out = rho(g_over)^s H_in;
* region rule: V_right = rho(g_arc)^-1 V_left across an arc, left/right
  as drawn;
* slot values: Region(j) -> det(V_j, W), Under(a, j) -> det(V_j, H_a),
  Over(a) -> det(H_a, W).
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .braid import Diagram
from .cluster import check_nondegenerate
from .config import TOL
from .errors import GenericityExhausted, InconsistentColoring, ObstructionMismatch
from .linalg import det2, mat_inv, rel_err
from .representation import WirtingerRep


@dataclass
class Decoration:
    W: np.ndarray
    V: dict   # region id -> vector
    H: dict   # arc id -> vector
    params: dict = field(default_factory=dict)

    def to_json(self):
        def enc(v):
            return [[float(z.real), float(z.imag)] for z in v]
        return {"W": enc(self.W),
                "V": {str(j): enc(v) for j, v in sorted(self.V.items())},
                "H": {str(i): enc(v) for i, v in sorted(self.H.items())},
                "params": {k: [float(complex(v).real), float(complex(v).imag)]
                           for k, v in self.params.items()}}


def minus_one_eigenvector(m):
    """Kernel direction of m + Id for a parabolic m != -Id."""
    a, b = m[0, 0] + 1, m[0, 1]
    c, d = m[1, 0], m[1, 1] + 1
    cand = [np.array([b, -a]), np.array([d, -c])]
    v = max(cand, key=lambda u: np.abs(u).max())
    return v / v[np.argmax(np.abs(v))] if np.abs(v).max() > 0 else v


def arc_colorings(d: Diagram, rep: WirtingerRep, h_seed=None, tol=TOL.closure):
    """Propagate H along the knot from arc 1; the result must close up.

    Closing up with H_1 -> -H_1 means the representation's obstruction class
    differs from (-1)^n and raises ObstructionMismatch.
    """
    H1 = minus_one_eigenvector(rep[1]) if h_seed is None else np.asarray(h_seed, dtype=complex)
    if rel_err(rep[1] @ H1, -H1) > tol:
        raise InconsistentColoring("seed is not a -1 eigenvector of rho(g_1)")
    H = {1: H1}
    cur = H1
    for level, role in d.traversal:
        if role != "under":
            continue
        c = d.crossings[level - 1]
        A = rep[c.over] if c.sign == 1 else mat_inv(rep[c.over])
        cur = A @ cur
        if c.under_out == 1:
            break
        H[c.under_out] = cur
    braid_parity = (-1) ** d.n
    if rel_err(cur, H1) <= tol:
        pass
    elif rel_err(cur, -H1) <= tol:
        raise ObstructionMismatch(
            "arc colouring closes up with a sign flip: obstruction class is "
            f"{-braid_parity}, braid length parity (-1)^{d.n} = {braid_parity}",
            rep_parity=-braid_parity, braid_parity=braid_parity)
    else:
        raise InconsistentColoring(f"arc colouring fails to close (residual {rel_err(cur, H1):.3g})")
    for a, h in H.items():
        if rel_err(rep[a] @ h, -h) > tol:
            raise InconsistentColoring(f"H_{a} is not a -1 eigenvector of rho(g_{a})")
    return H


def region_colorings(d: Diagram, rep: WirtingerRep, v_seed, tol=TOL.closure):
    """Spread V from region 1 with the region rule, checking every adjacency."""
    V = {1: np.asarray(v_seed, dtype=complex)}
    inv = {a: mat_inv(m) for a, m in rep.matrices.items()}
    edges = []  # (left region, arc, right region)
    for i, (arcs, gaps) in enumerate(zip(d.strand_arcs, d.region_gaps)):
        for p, a in enumerate(arcs, start=1):
            edges.append((gaps[p - 1], a, gaps[p]))
    changed = True
    while changed:
        changed = False
        for left, a, right in edges:
            if left in V and right not in V:
                V[right] = inv[a] @ V[left]
                changed = True
            elif right in V and left not in V:
                V[left] = rep[a] @ V[right]
                changed = True
    if len(V) != len(d.regions):
        raise InconsistentColoring("region adjacency graph is disconnected")
    worst = max(rel_err(V[right], inv[a] @ V[left]) for left, a, right in edges)
    if worst > tol:
        raise InconsistentColoring(f"region colouring inconsistent (residual {worst:.3g})")
    return V


def assemble_solution(d: Diagram, dec: Decoration):
    """x^1..x^{n+1} from the determinant rules."""
    out = []
    for slots in d.levels:
        row = []
        for s in slots:
            if s.kind == "R":
                row.append(det2(dec.V[s.region], dec.W))
            elif s.kind == "U":
                row.append(det2(dec.V[s.region], dec.H[s.arc]))
            else:
                row.append(det2(dec.H[s.arc], dec.W))
        out.append(np.array(row, dtype=complex))
    return out


def build_decoration(d, rep, v1, w, h_seed=None, params=None):
    H = arc_colorings(d, rep, h_seed)
    V = region_colorings(d, rep, v1)
    return Decoration(np.asarray(w, dtype=complex), V, H, dict(params or {}))


def _draw(rng):
    # uniform on the unit square, pushed away from 0
    return complex(rng.uniform(0.1, 1.1), rng.uniform(0.1, 1.1)) * (1 if rng.random() < 0.5 else -1)


def generic_decoration(d: Diagram, rep: WirtingerRep, seed=0, retries=100):
    """Random (alpha, beta, gamma, H-scale) until the assembled solution is non-degenerate.

    V_1 = (alpha, beta), W = (gamma, 1), H_1 = scale * (-1 eigenvector of g_1).
    """
    rng = np.random.default_rng(seed)
    H0 = arc_colorings(d, rep)  # parity failures surface here, before any retry
    for attempt in range(retries):
        alpha, beta, gamma, t = (_draw(rng) for _ in range(4))
        H = {a: t * h for a, h in H0.items()}
        V = region_colorings(d, rep, (alpha, beta))
        dec = Decoration(np.array([gamma, 1], dtype=complex), V, H,
                         {"alpha": alpha, "beta": beta, "gamma": gamma, "h_scale": t})
        if _generic(rep, dec) and check_nondegenerate(assemble_solution(d, dec), d.braid).passed:
            dec.params["attempt"] = attempt
            return dec
    raise GenericityExhausted(f"no non-degenerate decoration in {retries} draws")


def _generic(rep, dec, tol=1e-9):
    """W and every V_j avoid the fixed directions of every generator."""
    for h in dec.H.values():
        hn = h / np.linalg.norm(h)
        for v in [dec.W, *dec.V.values()]:
            if abs(det2(hn, v / np.linalg.norm(v))) < tol:
                return False
    return True
