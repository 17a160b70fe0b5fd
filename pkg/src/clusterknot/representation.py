"""Boundary-parabolic representations given on Wirtinger generators.

Representations are stored as the lift with every generator of trace -2.
"""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field

import numpy as np

from .braid import Diagram, longitude_word, wirtinger_presentation
from .config import TOL
from .errors import InvalidRepresentation, NoSolutionFound, NotParabolicOnBoundary
from .linalg import ID2, close_to_pm_identity, det2, mat_det, mat_inv, mat_trace

log = logging.getLogger(__name__)


@dataclass
class RelationReport:
    residuals: list   # per crossing, max-norm distance to the closer of +-Id
    signs: list
    tol: float = TOL.identity

    @property
    def passed(self):
        return all(r <= self.tol for r in self.residuals)

    @property
    def max_residual(self):
        return max(self.residuals, default=0.0)

    def to_json(self):
        return {"passed": self.passed, "max_residual": self.max_residual,
                "residuals": self.residuals, "signs": self.signs}


@dataclass
class WirtingerRep:
    diagram: Diagram
    matrices: dict            # arc id -> 2x2 complex array
    tol: float = TOL.identity
    provenance: dict = field(default_factory=dict)

    def __post_init__(self):
        self.matrices = {int(a): np.asarray(m, dtype=complex) for a, m in self.matrices.items()}
        missing = set(self.diagram.arcs) - set(self.matrices)
        if missing:
            raise InvalidRepresentation(f"no matrix for arcs {sorted(missing)}")
        for a, m in self.matrices.items():
            if m.shape != (2, 2):
                raise InvalidRepresentation(f"arc {a}: matrix must be 2x2")
            if abs(mat_det(m) - 1) > TOL.det_one * max(1.0, np.abs(m).max() ** 2):
                raise InvalidRepresentation(f"arc {a}: det {mat_det(m)} != 1")
            if abs(mat_trace(m) + 2) > self.tol * max(1.0, np.abs(m).max()):
                raise InvalidRepresentation(f"arc {a}: trace {mat_trace(m)} != -2")
            if np.abs(m + ID2).max() <= self.tol:
                raise InvalidRepresentation(f"arc {a}: matrix is -Id (trivial on the meridian)")

    def __getitem__(self, arc):
        return self.matrices[arc]

    def plus_lift(self):
        """The other lift (all generator traces +2), as a plain dict."""
        return {a: -m for a, m in self.matrices.items()}

    def conjugate(self, g):
        gi = mat_inv(g)
        return WirtingerRep(self.diagram, {a: g @ m @ gi for a, m in self.matrices.items()}, self.tol)

    def to_json(self):
        out = {"arcs": {str(a): [[[float(z.real), float(z.imag)] for z in row] for row in m]
                        for a, m in sorted(self.matrices.items())}}
        if self.provenance:
            out["provenance"] = self.provenance
        return out

    @classmethod
    def from_json(cls, diagram, data, tol=TOL.identity):
        arcs = data.get("arcs", data)
        mats = {int(a): np.array([[complex(*z) for z in row] for row in m]) for a, m in arcs.items()}
        return cls(diagram, mats, tol, provenance=data.get("provenance", {}))


def evaluate_word(rep, word):
    """Ordered product of generator matrices (left to right)."""
    out = ID2.copy()
    mats = rep.matrices if isinstance(rep, WirtingerRep) else rep
    for g, e in word:
        m = mats[g]
        out = out @ (m if e == 1 else mat_inv(m))
    return out


def verify_relations(rep: WirtingerRep, tol=TOL.identity) -> RelationReport:
    _, rels = wirtinger_presentation(rep.diagram)
    res, signs = [], []
    for r in rels:
        m = evaluate_word(rep, r)
        scale = max(1.0, max(np.abs(rep[g]).max() for g, _ in r) ** 2)
        s, d = close_to_pm_identity(m)
        res.append(d / scale)
        signs.append(s)
    return RelationReport(res, signs, tol)


def obstruction_class(rep: WirtingerRep, tol=1e-6) -> int:
    """Half the trace of the canonical longitude, as +-1."""
    _, lam = longitude_word(rep.diagram)
    t = mat_trace(evaluate_word(rep, lam)) / 2
    for s in (1, -1):
        if abs(t - s) <= tol:
            return s
    raise NotParabolicOnBoundary(f"tr(rho(longitude))/2 = {t}, not +-1")


def trace_invariants(mats, arcs=None):
    """tr(g_i g_j) for i<j and tr(g_1 g_i g_j) for 1<i<j: separates irreducible reps."""
    arcs = sorted(mats) if arcs is None else arcs
    out = [mat_trace(mats[i] @ mats[j]) for i, j in itertools.combinations(arcs, 2)]
    a0 = arcs[0]
    out += [mat_trace(mats[a0] @ mats[i] @ mats[j]) for i, j in itertools.combinations(arcs[1:], 2)]
    return np.array(out)


def equivalent(rep_a, rep_b, tol=1e-8):
    ta, tb = trace_invariants(rep_a.matrices), trace_invariants(rep_b.matrices)
    return float(np.max(np.abs(ta - tb), initial=0)) <= tol * max(1.0, float(np.max(np.abs(ta), initial=0)))


# ------------------------------------------------------------------ solver

def parabolic(u):
    """[[-1-ab, a^2], [-b^2, -1+ab]] for u = (a, b): trace -2, det 1, fixes u with eigenvalue -1."""
    a, b = u
    return np.array([[-1 - a * b, a * a], [-b * b, -1 + a * b]], dtype=complex)


def _system(d, U, tau):
    """Residual u_out - tau_c * A u_in with A = g(u_o)^s, and its Jacobian."""
    n = d.n
    F = np.zeros(2 * n, dtype=complex)
    J = np.zeros((2 * n, 2 * n), dtype=complex)
    for row, c in enumerate(d.crossings):
        t, s = tau[row], c.sign
        uo, ui = U[c.over - 1], U[c.under_in - 1]
        dt = det2(uo, ui)
        # g(u)^s v = -v + s det(u, v) u
        F[2 * row:2 * row + 2] = U[c.under_out - 1] - t * (-ui + s * dt * uo)
        r = slice(2 * row, 2 * row + 2)
        J[r, 2 * (c.under_out - 1):2 * c.under_out] += np.eye(2)
        ddt_dui = np.array([-uo[1], uo[0]])
        ddt_duo = np.array([ui[1], -ui[0]])
        J[r, 2 * (c.under_in - 1):2 * c.under_in] -= t * (-np.eye(2) + s * np.outer(uo, ddt_dui))
        J[r, 2 * (c.over - 1):2 * c.over] -= t * s * (dt * np.eye(2) + np.outer(uo, ddt_duo))
    return F, J


def _newton(d, U, tau, iters=80, tol=1e-14):
    for _ in range(iters):
        F, J = _system(d, U, tau)
        if np.linalg.norm(F) < tol:
            return U, True
        step = np.linalg.lstsq(J[:, 2:], -F, rcond=None)[0]  # u_1 pinned
        U = U.copy()
        U[1:] += step.reshape(-1, 2)
        if not np.all(np.isfinite(U)) or np.abs(U).max() > 1e8:
            return U, False
    F, _ = _system(d, U, tau)
    return U, bool(np.linalg.norm(F) < 1e-11)


def _is_abelian(U, tol=1e-6):
    scale = max(1.0, float(np.abs(U).max()) ** 2)
    return all(abs(det2(U[0], u)) <= tol * scale for u in U[1:])


def solve_parabolic(d: Diagram, seed: int = 0, attempts: int = 40, residual_tol=1e-10):
    """Non-abelian boundary-parabolic representations found by Newton iteration.

    Each generator is parametrized as ``parabolic(u_i)``; the relation at a
    crossing becomes u_out = +-A u_in, linear in u_out.  Gauge: u_1 = (1, 0).
    Both global sign classes of the relation signs are searched (they
    correspond to the two values of the colouring closure sign).  Results are
    deduplicated up to conjugation through trace invariants.
    """
    rng = np.random.default_rng(seed)
    n = d.n
    found = []
    patterns = [tuple([1] * n), tuple([1] * (n - 1) + [-1])]
    for attempt in range(attempts):
        for tau in patterns:
            U = rng.normal(size=(n, 2)) + 1j * rng.normal(size=(n, 2))
            U[0] = (1, 0)
            U, ok = _newton(d, U, tau)
            if not ok or _is_abelian(U):
                continue
            try:
                rep = WirtingerRep(d, {a: parabolic(U[a - 1]) for a in d.arcs})
            except InvalidRepresentation:
                continue
            rr = verify_relations(rep, residual_tol)
            if not rr.passed:
                continue
            if any(equivalent(rep, r) for r in found):
                continue
            rep.provenance = {"seed": seed, "attempt": attempt, "residual": rr.max_residual}
            found.append(rep)
    if not found:
        raise NoSolutionFound(f"no non-abelian parabolic representation after {attempts} attempts")
    log.info("solve_parabolic: %d representation(s)", len(found))
    return found
