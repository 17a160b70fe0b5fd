"""Solve, decorate and measure every boundary-parabolic rep of a few small knots.

Braids of even length get a kink (a stabilizing letter on a new strand) so
that the parity gate admits the reps with obstruction class -1.

    python3 scripts/volume_survey.py [--seed N]
"""
import argparse

from clusterknot.braid import closure_diagram, parse_braid_word
from clusterknot.decoration import generic_decoration
from clusterknot.errors import ClusterKnotError
from clusterknot.geometry import all_shapes, gluing_residual, volume
from clusterknot.representation import obstruction_class, solve_parabolic

KNOTS = {
    "3_1": "[1,1,1]",
    "4_1": "[1,-2,1,-2]",
    "5_1": "[1,1,1,1,1]",
    "5_2": "[1,1,1,2,-1,2]",
    "6_1": "[1,1,2,-1,-3,2,-3]",
}


def with_kink(text):
    b = parse_braid_word(text)
    letters = [k * s for k, s in b.letters] + [b.width]
    return "[" + ",".join(map(str, letters)) + "]", b.width + 1


def survey(seed):
    rows = []
    for name, text in KNOTS.items():
        b = parse_braid_word(text)
        width = b.width
        if b.n % 2 == 0:
            text, width = with_kink(text)
        d = closure_diagram(parse_braid_word(text, width))
        try:
            reps = solve_parabolic(d, seed=seed)
        except ClusterKnotError as e:
            rows.append((name, text, "-", type(e).__name__, ""))
            continue
        for r in reps:
            try:
                shapes = all_shapes(generic_decoration(d, r, seed=seed), d, r)
                glue = gluing_residual(shapes, d)
                rows.append((name, text, obstruction_class(r), f"{volume(shapes):+.9f}", f"{glue.max_residual:.1e}"))
            except ClusterKnotError as e:
                rows.append((name, text, obstruction_class(r), type(e).__name__, ""))
    return rows


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    print(f"{'knot':5} {'braid':28} {'obs':>4} {'volume':>14} {'gluing':>8}")
    for row in survey(args.seed):
        print(f"{row[0]:5} {row[1]:28} {str(row[2]):>4} {row[3]:>14} {row[4]:>8}")
