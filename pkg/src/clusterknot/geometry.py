"""Shapes of the octahedral tetrahedra, gluing equations and volume.

Conventions fixed here (checked against the 4_1 volume and the gluing
equations of the example):

* a tetrahedron with ordered vertices (v0, v1, v2, v3) has shape
  z = det(v0,v2) det(v1,v3) / (det(v0,v3) det(v1,v2));
* z sits on edges 01 and 23, z' = 1/(1-z) on 02 and 13, z'' = 1 - 1/z on
  03 and 12;
* orientation: in a positive crossing the tetrahedra 2345, 0245, 1234 keep
  sorted order and 0345, 1235 swap their last two vertices; negative
  crossings use the opposite choice.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .braid import Diagram
from .config import TOL
from .errors import DegenerateTetrahedron
from .linalg import bloch_wigner, det2
from .ptolemy import EDGES, TETS, edge_classes, octahedron_vertices

ORIENTATION = {(2, 3, 4, 5): 1, (0, 3, 4, 5): -1, (0, 2, 4, 5): 1, (1, 2, 3, 5): -1, (1, 2, 3, 4): 1}
_PAIRS = (((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2)))


def tet_shape(v0, v1, v2, v3, tol=TOL.degenerate):
    vs = [np.asarray(v, dtype=complex) for v in (v0, v1, v2, v3)]
    vs = [v / np.abs(v).max() if np.abs(v).max() > 0 else v for v in vs]
    for i in range(4):
        for j in range(i + 1, 4):
            if abs(det2(vs[i], vs[j])) <= tol:
                raise DegenerateTetrahedron(f"vertices {i} and {j} coincide")
    return det2(vs[0], vs[2]) * det2(vs[1], vs[3]) / (det2(vs[0], vs[3]) * det2(vs[1], vs[2]))


def shape_cycle(z):
    return z, 1 / (1 - z), 1 - 1 / z


@dataclass
class TetShape:
    crossing: int
    vertices: tuple       # octahedron vertex labels in oriented order
    z: complex
    vectors: list = field(repr=False, default_factory=list)

    def edge_shapes(self):
        """{(a, b): shape parameter at the edge between octahedron vertices a < b}."""
        out = {}
        for val, pair in zip(shape_cycle(self.z), _PAIRS):
            for i, j in pair:
                a, b = self.vertices[i], self.vertices[j]
                out[(min(a, b), max(a, b))] = val
        return out

    @property
    def flat(self):
        return abs(complex(self.z).imag) <= 1e-9 * max(1.0, abs(self.z))

    def to_json(self):
        return {"crossing": self.crossing, "vertices": list(self.vertices),
                "z": [float(self.z.real), float(self.z.imag)]}


def oriented(tet, sign):
    e = ORIENTATION[tet] * sign
    return tet if e == 1 else (tet[0], tet[1], tet[3], tet[2])


def all_shapes(dec, d: Diagram, rep):
    out = []
    for c in d.crossings:
        v = octahedron_vertices(c, dec, rep)
        for t in TETS:
            order = oriented(t, c.sign)
            try:
                z = tet_shape(*[v[i] for i in order])
            except DegenerateTetrahedron as e:
                raise DegenerateTetrahedron(f"crossing {c.index}, tetrahedron {t}: {e}") from None
            out.append(TetShape(c.index, order, z, [v[i] for i in order]))
    return out


def volume(shapes):
    return float(sum(bloch_wigner(s.z) for s in shapes))


@dataclass
class GluingReport:
    residuals: dict        # edge class -> |prod - 1|
    angle_sums: dict       # edge class -> sum of arguments
    tol: float = TOL.closure

    @property
    def max_residual(self):
        return max(self.residuals.values(), default=0.0)

    @property
    def passed(self):
        return self.max_residual <= self.tol

    def to_json(self):
        return {"passed": self.passed, "max_residual": self.max_residual,
                "residuals": {str(k): v for k, v in sorted(self.residuals.items())},
                "angle_sums": {str(k): v for k, v in sorted(self.angle_sums.items())}}


def gluing_residual(shapes, d: Diagram, tol=TOL.closure):
    """Product of edge shapes around each edge class, and the summed arguments."""
    cls = edge_classes(d)
    sign = {c.index: c.sign for c in d.crossings}
    prod, args = {}, {}
    for s in shapes:
        for (a, b), val in s.edge_shapes().items():
            k = cls[(s.crossing, EDGES[sign[s.crossing]][(a, b)][0])]
            prod[k] = prod.get(k, 1) * val
            args[k] = args.get(k, 0.0) + float(np.angle(val))
    res = {k: abs(v - 1) for k, v in prod.items()}
    return GluingReport(res, args, tol)
