"""The 4_1 knot drawn with a kink: braid, representation and closed-form tables.

Braid s3^-1 s2 s3^-1 s2 s1^-1 on four strands.  The letter sequence and the
region numbering are read off the closed-form level tables below; arcs come out in
traversal order with no override.
"""
import numpy as np

from .braid import closure_diagram, parse_braid_word
from .representation import WirtingerRep

BRAID_TEXT = "[-3,2,-3,2,-1]"
WIDTH = 4
# new region id j (1-based) <- id produced by the default sweep
REGION_ORDER = [1, 2, 3, 7, 6, 4, 5]
EVEN_BRAID_TEXT = "[1,-2,1,-2]"

LAMBDA = (1 + 1j * np.sqrt(3)) / 2   # root of t^2 - t + 1
DEFAULT_PARAMS = (2.0, 1.0, 3.0)     # (alpha, beta, gamma)


def diagram():
    return closure_diagram(parse_braid_word(BRAID_TEXT, WIDTH), region_order=REGION_ORDER)


def matrices(lam=LAMBDA):
    return {
        1: np.array([[-1, -1], [0, -1]], dtype=complex),
        2: np.array([[-1, -1], [0, -1]], dtype=complex),
        3: np.array([[-1, 0], [-lam, -1]], dtype=complex),
        4: np.array([[-1 - lam, lam], [-lam, -1 + lam]], dtype=complex),
        5: np.array([[-2, lam], [-1 + lam, 0]], dtype=complex),
    }


def representation(lam=LAMBDA, d=None):
    return WirtingerRep(diagram() if d is None else d, matrices(lam))


def H_table(lam=LAMBDA):
    return {
        1: np.array([1, 0], dtype=complex),
        2: np.array([-1, 0], dtype=complex),
        3: np.array([0, -1 + lam], dtype=complex),
        4: np.array([1 - lam, 1 - lam], dtype=complex),
        5: np.array([-1 + lam, lam], dtype=complex),
    }


def V_table(a, b, lam=LAMBDA):
    l = lam
    return {
        1: np.array([a, b], dtype=complex),
        2: np.array([-a + b, -b], dtype=complex),
        3: np.array([a - 2 * b, b], dtype=complex),
        4: np.array([a * (1 - l) + b * (-1 + 2 * l), -a * l + b * (1 + 2 * l)], dtype=complex),
        5: np.array([-a + 2 * b, a * l - b * (1 + 2 * l)], dtype=complex),
        6: np.array([a * (-1 + l) + b * (2 - 3 * l), a * l - b * (1 + 3 * l)], dtype=complex),
        7: np.array([a * (1 - l) + b * (-2 + 3 * l), -a * (1 + l) + 2 * b * (2 + l)], dtype=complex),
    }


def x_tables(a, b, g, lam=LAMBDA):
    """Closed forms of x^1..x^5 exactly as tabulated for the example."""
    l = lam
    c1 = a - b * g
    c2 = b
    c4 = -a + b * g + b
    c7 = a - b * (g + 2)
    c13 = a * ((g - 1) * l + g + 1) - b * (2 * g * (l + 2) - 3 * l + 2)
    x1 = [c1, c2, 1, c4, b, -1, c7,
          (l - 1) * (a - 3 * b), (g - 1) * (l - 1),
          a * (-g * l + l - 1) + b * (3 * (g - 1) * l + g + 2),
          a * l - b * (2 * l + 1), g - g * l, c13]
    x2 = [c1, c2, 1, c4, b, -1, c7,
          l ** 2 * (-(a - 2 * b)), g - g * l,
          b * (2 * g * l + g + 2) - a * (g * l + 1),
          (l - 1) * (a - 3 * b), -g * l + l - 1, c13]
    x3 = [c1, c2, 1, c4,
          (l - 1) * (-(a - 2 * b)), (g - 1) * (l - 1),
          (g - 1) * l * (a - 2 * b) + a - b * (g + 1),
          a * l - b * (2 * l + 1), -1,
          b * (2 * g * l + g + 2) - a * (g * l + 1),
          (l - 1) * (a - 3 * b), -g * l + l - 1, c13]
    x4 = [c1, c2, 1, c4,
          (l - 1) * (-(a - 2 * b)), (g - 1) * (l - 1),
          (g - 1) * l * (a - 2 * b) + a - b * (g + 1),
          -b, -g * l + l - 1,
          a * (-g * l + l - 1) + b * (3 * (g - 1) * l + g + 2),
          a * l - b * (2 * l + 1), g - g * l, c13]
    x5 = [c1, c2, 1, c4, -b, 1, c7,
          (l - 1) * (a - 3 * b), (g - 1) * (l - 1),
          a * (-g * l + l - 1) + b * (3 * (g - 1) * l + g + 2),
          a * l - b * (2 * l + 1), g - g * l, c13]
    return [np.array(x, dtype=complex) for x in (x1, x2, x3, x4, x5)]


def decoration(params=DEFAULT_PARAMS, lam=LAMBDA, d=None):
    from .decoration import build_decoration
    a, b, g = params
    d = diagram() if d is None else d
    return build_decoration(d, representation(lam, d), (a, b), (g, 1), h_seed=(1, 0),
                            params={"alpha": a, "beta": b, "gamma": g})
