"""Per-crossing octahedra, Ptolemy assignments and their cocycles.

Each crossing carries an ideal octahedron with vertices 0..5 cut into five
tetrahedra.  Vertex roles (decoration vectors, A = rho(g_over)):

    vertex   positive crossing     negative crossing
    0        H_over                H_over
    1        H_in                  A^-1 H_in  (= H_out)
    2        V_right               V_right
    3        V_top                 V_bottom
    4        A^-1 W                A^-1 W
    5        W                     W

With these, det(v_i, v_j) equals s * (edge label value) for the signs in
EDGES below; the obstruction sign on a face is the product of s over its
three edges.  Those face signs reproduce the ten signed Ptolemy relations.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .braid import Diagram, _UnionFind
from .cluster import window, y_values
from .config import TOL
from .errors import DegenerateInput, PathNotRecorded
from .linalg import close_to_pm_identity, det2, mat_inv

TETS = ((0, 3, 4, 5), (1, 2, 3, 5), (2, 3, 4, 5), (0, 2, 4, 5), (1, 2, 3, 4))

# (i, j) -> (label, s): c(l_ij) = s * value(label)
EDGES = {
    1: {(0, 2): ("xt5", -1), (0, 3): ("x2", -1), (0, 4): ("xt6", -1), (0, 5): ("x3", 1),
        (1, 2): ("x5", -1), (1, 3): ("xt2", 1), (1, 4): ("xt3", 1), (1, 5): ("x6", 1),
        (2, 3): ("y2", 1), (2, 4): ("xt4", 1), (2, 5): ("x7", 1),
        (3, 4): ("x1", 1), (3, 5): ("x4", 1), (4, 5): ("y1", 1)},
    -1: {(0, 2): ("x5", -1), (0, 3): ("xt2", -1), (0, 4): ("xt3", -1), (0, 5): ("x6", 1),
         (1, 2): ("xt5", -1), (1, 3): ("x2", 1), (1, 4): ("x3", 1), (1, 5): ("xt6", 1),
         (2, 3): ("y2", 1), (2, 4): ("x4", 1), (2, 5): ("x7", 1),
         (3, 4): ("x1", 1), (3, 5): ("xt4", 1), (4, 5): ("y1", 1)},
}

# the ten relations, written lhs = rhs1 + rhs2 with each side a pair of labels
RELATIONS = {
    1: {(0, 3, 4, 5): (("x2", "y1"), ("x3", "x4"), ("x1", "x3")),
        (1, 2, 3, 5): (("x6", "y2"), ("x5", "x7"), ("x4", "x5")),
        (2, 3, 4, 5): (("x4", "xt4"), ("x1", "x7"), ("y1", "y2")),
        (0, 2, 4, 5): (("xt5", "y1"), ("x3", "xt4"), ("x3", "x7")),
        (1, 2, 3, 4): (("xt3", "y2"), ("x5", "xt4"), ("x1", "x5"))},
    -1: {(0, 2, 4, 5): (("y1", "x5"), ("x4", "x6"), ("x6", "x7")),
         (1, 2, 3, 4): (("x3", "y2"), ("x1", "x2"), ("x2", "x4")),
         (2, 3, 4, 5): (("x4", "xt4"), ("y1", "y2"), ("x1", "x7")),
         (0, 3, 4, 5): (("xt2", "y1"), ("x6", "xt4"), ("x1", "x6")),
         (1, 2, 3, 5): (("xt6", "y2"), ("x2", "x7"), ("x2", "xt4"))},
}

# edges of one octahedron identified inside the pinched block
IDENTIFIED = {1: (("xt2", "x5"), ("xt6", "x3")), -1: (("xt3", "x6"), ("xt5", "x2"))}


def edge_sign(sign, i, j):
    return EDGES[sign][(min(i, j), max(i, j))][1]


def face_sign(sign, face):
    """Obstruction sign on a triangular face {i, j, k}."""
    out = 1
    for i, j in combinations(sorted(face), 2):
        out *= edge_sign(sign, i, j)
    return out


@dataclass
class CrossingOctahedron:
    index: int
    k: int
    sign: int
    x: np.ndarray    # x_1..x_7 above
    xt: np.ndarray   # x~_1..x~_7 below
    y: tuple

    def value(self, label):
        if label.startswith("xt"):
            return self.xt[int(label[2:]) - 1]
        if label.startswith("x"):
            return self.x[int(label[1:]) - 1]
        return self.y[int(label[1:]) - 1]

    def c(self, i, j):
        """Ptolemy value on the oriented edge i -> j (c(-e) = -c(e))."""
        if i < j:
            return self.value(EDGES[self.sign][(i, j)][0])
        return -self.value(EDGES[self.sign][(j, i)][0])


@dataclass
class PtolemyAssignment:
    diagram: Diagram
    crossings: list
    obstruction: int                      # (-1)^n, the class of the braid cocycle
    edge_class: dict = field(default_factory=dict)  # (crossing, label) -> class id

    def to_json(self):
        def enc(z):
            return [float(z.real), float(z.imag)]
        return {"obstruction": self.obstruction,
                "crossings": [{"index": o.index, "sign": o.sign,
                               "x": [enc(v) for v in o.x], "xt": [enc(v) for v in o.xt],
                               "y": [enc(v) for v in o.y]} for o in self.crossings]}


def braid_obstruction(n: int) -> int:
    return -1 if n % 2 else 1


def edge_classes(d: Diagram):
    """Union-find of (crossing, label) over level overlaps, closure and pinching."""
    n = d.n
    uf = _UnionFind()
    for i, (k, s) in enumerate(d.braid.letters, start=1):
        for j in range(1, 8):
            uf.union((i, f"x{j}"), ("slot", i, 3 * k - 3 + j))
            uf.union((i, f"xt{j}"), ("slot", i + 1, 3 * k - 3 + j))
        for a, b in IDENTIFIED[s]:
            uf.union((i, a), (i, b))
        uf.find((i, "y1"))
        uf.find((i, "y2"))
        for j in range(1, 3 * d.width + 2):
            if not 3 * k - 2 < j < 3 * k + 4:
                uf.union(("slot", i, j), ("slot", i + 1, j))
    for j in range(1, 3 * d.width + 2):
        uf.union(("slot", n + 1, j), ("slot", 1, j))
    roots, out = {}, {}
    for i in range(1, n + 1):
        for lab in [f"x{j}" for j in range(1, 8)] + [f"xt{j}" for j in range(1, 8)] + ["y1", "y2"]:
            r = uf.find((i, lab))
            out[(i, lab)] = roots.setdefault(r, len(roots))
    return out


def extend_assignment(d: Diagram, tuples) -> PtolemyAssignment:
    """Attach (y1, y2) at every crossing; all values must be non-zero."""
    octs = []
    for i, (k, s) in enumerate(d.braid.letters, start=1):
        x = np.asarray(tuples[i - 1], dtype=complex)[window(k)]
        xt = np.asarray(tuples[i], dtype=complex)[window(k)]
        try:
            y = y_values(s, x)
        except DegenerateInput as e:
            raise DegenerateInput(f"crossing {i}: {e}", level=i, window=k) from None
        o = CrossingOctahedron(i, k, s, x, xt, y)
        scale = max(1.0, float(np.abs(np.concatenate([x, xt])).max()))
        for lab, _ in EDGES[s].values():
            if abs(o.value(lab)) <= TOL.degenerate * scale:
                raise DegenerateInput(f"crossing {i}: edge {lab} vanishes", level=i, window=k)
        octs.append(o)
    return PtolemyAssignment(d, octs, braid_obstruction(d.n), edge_classes(d))


@dataclass
class RelationCheck:
    residuals: list   # per crossing: {tet: relative residual}
    tol: float = TOL.identity

    @property
    def max_residual(self):
        return max((r for row in self.residuals for r in row.values()), default=0.0)

    @property
    def passed(self):
        return self.max_residual <= self.tol

    def failures(self):
        return [(i + 1, t) for i, row in enumerate(self.residuals) for t, r in row.items() if r > self.tol]

    def to_json(self):
        return {"passed": self.passed, "max_residual": self.max_residual,
                "per_crossing": [{"-".join(map(str, t)): r for t, r in row.items()}
                                 for row in self.residuals]}


def relation_residual(o: CrossingOctahedron, rel):
    (a, b), (c, d), (e, f) = rel
    v = o.value
    lhs, r1, r2 = v(a) * v(b), v(c) * v(d), v(e) * v(f)
    return abs(lhs - r1 - r2) / max(abs(lhs), abs(r1), abs(r2), 1e-300)


def verify_crossing_relations(a: PtolemyAssignment, tol=TOL.identity) -> RelationCheck:
    rows = [{t: relation_residual(o, rel) for t, rel in RELATIONS[o.sign].items()} for o in a.crossings]
    return RelationCheck(rows, tol)


def solve_relations(sign, x):
    """(x~, y) from the five relations alone, solved in sequence."""
    x1, x2, x3, x4, x5, x6, x7 = x
    if sign == 1:
        y1 = (x3 * x4 + x1 * x3) / x2
        y2 = (x5 * x7 + x4 * x5) / x6
        t4 = (x1 * x7 + y1 * y2) / x4
        t5 = (x3 * t4 + x3 * x7) / y1
        t3 = (x5 * t4 + x1 * x5) / y2
        return (x1, x5, t3, t4, t5, x3, x7), (y1, y2)
    y1 = (x4 * x6 + x6 * x7) / x5
    y2 = (x1 * x2 + x2 * x4) / x3
    t4 = (y1 * y2 + x1 * x7) / x4
    t2 = (x6 * t4 + x1 * x6) / y1
    t6 = (x2 * x7 + x2 * t4) / y2
    return (x1, t2, x6, t4, x2, t6, x7), (y1, y2)


# ------------------------------------------------------------------ cocycles

def long_matrix(c):
    return np.array([[0, -1 / c], [c, 0]], dtype=complex)


def short_matrix(o: CrossingOctahedron, k, i, j):
    """Short edge near vertex k, from the side of i to the side of j."""
    sig = face_sign(o.sign, (i, j, k))
    return np.array([[1, sig * o.c(j, i) / (o.c(k, i) * o.c(k, j))], [0, 1]], dtype=complex)


def cocycle_matrices(a: PtolemyAssignment):
    """{(crossing, tet, edge key): matrix}; keys ('l', i, j) or ('s', k, i, j)."""
    out = {}
    for o in a.crossings:
        for t in TETS:
            for i in t:
                for j in t:
                    if i != j:
                        out[(o.index, t, ("l", i, j))] = long_matrix(o.c(i, j))
            for k in t:
                for i in t:
                    for j in t:
                        if len({i, j, k}) == 3:
                            out[(o.index, t, ("s", k, i, j))] = short_matrix(o, k, i, j)
    return out


def triangle_products(a: PtolemyAssignment):
    """Product of the three short edges around each truncation triangle."""
    rows = []
    for o in a.crossings:
        for t in TETS:
            for k in t:
                i, j, l = [v for v in t if v != k]
                m = short_matrix(o, k, i, j) @ short_matrix(o, k, j, l) @ short_matrix(o, k, l, i)
                sgn, res = close_to_pm_identity(m)
                rows.append({"crossing": o.index, "tet": t, "vertex": k, "sign": sgn, "residual": res})
    return rows


def meridian_loops(d: Diagram):
    """arc -> (crossing index, cusp vertex, (from, to)) for one-edge meridian loops.

    The over-strand vertex 0 has edges to 4 and 5 glued together, so the short
    edge from the 4-side to the 5-side closes up around the over arc.  The
    under-strand vertex 1 has its edges to 2 and 3 glued, giving a loop around
    H_in (positive crossing) or H_out (negative crossing).
    """
    loops = {}
    for c in d.crossings:
        loops.setdefault(c.over, (c.index, 0, (4, 5)))
    for c in d.crossings:
        arc = c.under_in if c.sign == 1 else c.under_out
        loops.setdefault(arc, (c.index, 1, (2, 3)))
    return loops


def lift_cocycle(a: PtolemyAssignment, eps=None):
    """Sign-twisted short-edge matrices on the recorded meridian loops.

    ``eps`` maps loop keys to +-1; the default gives every meridian loop the
    value -1, the meridian value of the braid cocycle.  Returns
    {arc: eps * Phi(loop)}.
    """
    d = a.diagram
    out = {}
    for arc, (ci, k, (p, q)) in meridian_loops(d).items():
        e = -1 if eps is None else eps[arc]
        out[arc] = e * short_matrix(a.crossings[ci - 1], k, p, q)
    return out


def meridian_holonomy(a: PtolemyAssignment, d: Diagram, arc: int):
    """Lifted holonomy of the recorded meridian loop of ``arc`` (corner frame)."""
    loops = meridian_loops(d)
    if arc not in loops:
        raise PathNotRecorded(f"no one-edge meridian loop recorded for arc {arc}")
    ci, k, (p, q) = loops[arc]
    return -short_matrix(a.crossings[ci - 1], k, p, q)


# ------------------------------------------------------------------ developing

def octahedron_vertices(c, dec, rep):
    """Decoration vectors of vertices 0..5 of the octahedron at crossing ``c``."""
    Ainv = mat_inv(rep[c.over])
    h_under = dec.H[c.under_in] if c.sign == 1 else Ainv @ dec.H[c.under_in]
    mid = c.top if c.sign == 1 else c.bottom
    return [dec.H[c.over], h_under, dec.V[c.right], dec.V[mid], Ainv @ dec.W, dec.W]


def corner_frame(vk, va):
    """SL(2) frame (v_k, v_a / det(v_k, v_a)) at the corner of vertex k facing a."""
    return np.column_stack([vk, va / det2(vk, va)])


def developed_meridian(a: PtolemyAssignment, dec, rep, arc):
    """Meridian holonomy moved from its corner frame into the developing frame."""
    d = a.diagram
    loops = meridian_loops(d)
    if arc not in loops:
        raise PathNotRecorded(f"no one-edge meridian loop recorded for arc {arc}")
    ci, k, (p, _) = loops[arc]
    v = octahedron_vertices(d.crossings[ci - 1], dec, rep)
    F = corner_frame(v[k], v[p])
    return F @ meridian_holonomy(a, d, arc) @ mat_inv(F)


def boundary_holonomies(a: PtolemyAssignment, dec, rep):
    """(mu, lambda_bf) lifted holonomies in the corner frame of the arc-1 loop.

    lambda_bf is composed from the developed meridians along the blackboard
    longitude word.  Both are upper triangular; their diagonals are the
    values of the boundary sign cocycle.
    """
    from .braid import longitude_word

    d = a.diagram
    mats = {}
    for arc in set(g for g, _ in longitude_word(d)[0]) | {1}:
        mats[arc] = developed_meridian(a, dec, rep, arc)
    lam_bf = np.eye(2, dtype=complex)
    for g, e in longitude_word(d)[0]:
        lam_bf = lam_bf @ (mats[g] if e == 1 else mat_inv(mats[g]))
    ci, k, (p, _) = meridian_loops(d)[1]
    v = octahedron_vertices(d.crossings[ci - 1], dec, rep)
    F = corner_frame(v[k], v[p])
    Fi = mat_inv(F)
    return Fi @ mats[1] @ F, Fi @ lam_bf @ F
