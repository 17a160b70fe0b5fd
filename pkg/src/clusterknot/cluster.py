"""Cluster dynamics along a braid: the R-operators, evolution and predicates."""
from dataclasses import dataclass, field

import numpy as np

from .config import TOL
from .errors import DegenerateInput, StrandIndexError


def _need_nonzero(vals, names, where):
    for v, nm in zip(vals, names):
        if abs(v) < TOL.degenerate:
            raise DegenerateInput(f"{where}: {nm} vanishes")


def apply_R(sign, x):
    """One mutation step on a 7-entry window; sign=+1 is R, sign=-1 is R^-1."""
    x1, x2, x3, x4, x5, x6, x7 = x
    if sign == 1:
        _need_nonzero((x2, x4, x6), ("x2", "x4", "x6"), "R+")
        t3 = (x1 * x3 * x5 + x3 * x4 * x5 + x1 * x2 * x6) / (x2 * x4)
        t4 = (x1 * x3 * x4 * x5 + x3 * x4 ** 2 * x5 + x1 * x3 * x5 * x7
              + x3 * x4 * x5 * x7 + x1 * x2 * x6 * x7) / (x2 * x4 * x6)
        t5 = (x3 * x4 * x5 + x3 * x5 * x7 + x2 * x6 * x7) / (x4 * x6)
        return (x1, x5, t3, t4, t5, x3, x7)
    if sign == -1:
        _need_nonzero((x3, x4, x5), ("x3", "x4", "x5"), "R-")
        t2 = (x1 * x3 * x5 + x1 * x2 * x6 + x2 * x4 * x6) / (x3 * x4)
        t4 = (x1 * x2 * x4 * x6 + x2 * x4 ** 2 * x6 + x1 * x3 * x5 * x7
              + x1 * x2 * x6 * x7 + x2 * x4 * x6 * x7) / (x3 * x4 * x5)
        t6 = (x3 * x5 * x7 + x2 * x4 * x6 + x2 * x6 * x7) / (x4 * x5)
        return (x1, t2, x6, t4, x2, t6, x7)
    raise ValueError(f"sign must be +-1, got {sign}")


def window(k):
    """0-based slice of the 7 slots touched by a crossing at strand k."""
    return slice(3 * k - 3, 3 * k + 4)


def apply_R_k(k, sign, x):
    x = np.asarray(x, dtype=complex)
    m = (len(x) - 1) // 3
    if len(x) != 3 * m + 1:
        raise ValueError(f"cluster tuple length {len(x)} is not 3m+1")
    if not 1 <= k <= m - 1:
        raise StrandIndexError(f"strand index {k} outside 1..{m - 1}")
    out = x.copy()
    try:
        out[window(k)] = apply_R(sign, x[window(k)])
    except DegenerateInput as e:
        raise DegenerateInput(str(e), window=k) from None
    return out


def evolve(braid, x1):
    """[x^1, ..., x^{n+1}] with x^{i+1} = R_{k_i}^{e_i}(x^i)."""
    x = np.asarray(x1, dtype=complex)
    if len(x) != 3 * braid.width + 1:
        raise ValueError(f"initial tuple has {len(x)} entries, braid needs {3 * braid.width + 1}")
    out = [x]
    for i, (k, s) in enumerate(braid.letters, start=1):
        try:
            x = apply_R_k(k, s, x)
        except DegenerateInput as e:
            raise DegenerateInput(f"level {i}: {e}", level=i, window=k) from None
        out.append(x)
    return out


def is_solution(tuples, tol=TOL.identity):
    a, b = np.asarray(tuples[0]), np.asarray(tuples[-1])
    scale = max(float(np.max(np.abs(a))), float(np.max(np.abs(b))), 1e-300)
    return float(np.max(np.abs(a - b))) <= tol * scale


def y_values(sign, x):
    """Values on the two added diagonal edges of the octahedron at a crossing."""
    x1, x2, x3, x4, x5, x6, x7 = x
    if sign == 1:
        _need_nonzero((x2, x6), ("x2", "x6"), "y+")
        return x3 * (x1 + x4) / x2, x5 * (x4 + x7) / x6
    if sign == -1:
        _need_nonzero((x5, x3), ("x5", "x3"), "y-")
        return x6 * (x4 + x7) / x5, x2 * (x1 + x4) / x3
    raise ValueError(f"sign must be +-1, got {sign}")


@dataclass
class NondegeneracyReport:
    zero_entries: list = field(default_factory=list)      # (level, slot), 1-based
    opposite_pairs: list = field(default_factory=list)    # (level, j): x_{3j-2} = -x_{3j+1}
    y_zeros: list = field(default_factory=list)           # (crossing, which)

    @property
    def passed(self):
        return not (self.zero_entries or self.opposite_pairs or self.y_zeros)

    def to_json(self):
        return {"passed": self.passed, "zero_entries": self.zero_entries,
                "opposite_pairs": self.opposite_pairs, "y_zeros": self.y_zeros}


def check_nondegenerate(tuples, braid=None, tol=TOL.degenerate):
    """Per-level non-vanishing checks; with ``braid`` also the y-edge values.

    The level conditions and the y-value conditions are equivalent in exact
    arithmetic; both are reported so a failure can be located.
    """
    rep = NondegeneracyReport()
    for i, x in enumerate(tuples, start=1):
        x = np.asarray(x)
        scale = max(1.0, float(np.max(np.abs(x))))
        m = (len(x) - 1) // 3
        for j, v in enumerate(x, start=1):
            if abs(v) <= tol * scale:
                rep.zero_entries.append((i, j))
        for j in range(1, m + 1):
            if abs(x[3 * j - 3] + x[3 * j]) <= tol * scale:
                rep.opposite_pairs.append((i, j))
    if braid is not None:
        for i, (k, s) in enumerate(braid.letters, start=1):
            w = np.asarray(tuples[i - 1])[window(k)]
            try:
                ys = y_values(s, w)
            except DegenerateInput:
                rep.y_zeros.append((i, 0))
                continue
            scale = max(1.0, float(np.max(np.abs(w))))
            for which, y in enumerate(ys, start=1):
                if abs(y) <= tol * scale:
                    rep.y_zeros.append((i, which))
    return rep
