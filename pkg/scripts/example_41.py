"""Walk the 4_1 kink fixture end to end and print what each stage produces.

    python3 scripts/example_41.py [--params a,b,c]
"""
import argparse

import numpy as np

from clusterknot import fixtures
from clusterknot.cluster import check_nondegenerate, evolve
from clusterknot.decoration import assemble_solution
from clusterknot.geometry import all_shapes, gluing_residual, volume
from clusterknot.linalg import rel_err
from clusterknot.ptolemy import extend_assignment, verify_crossing_relations
from clusterknot.representation import obstruction_class

np.set_printoptions(precision=4, suppress=True, linewidth=140)

ap = argparse.ArgumentParser()
ap.add_argument("--params", default="0.7+0.2j,1.3-0.4j,0.3+0.9j")
a, b, g = (complex(t) for t in ap.parse_args().params.split(","))

d = fixtures.diagram()
rep = fixtures.representation(d=d)
print("braid", d.braid, "width", d.width, "writhe", d.writhe)
for c in d.crossings:
    print(f"  crossing {c.index}: sign {c.sign:+d}, over {c.over}, under {c.under_in}->{c.under_out}")
print("obstruction class", obstruction_class(rep), "vs (-1)^n =", (-1) ** d.n)

dec = fixtures.decoration((a, b, g), d=d)
tuples = assemble_solution(d, dec)
print("\nlevels (assembled):")
for i, x in enumerate(tuples, 1):
    print(f"  x^{i}", x)
print("closed-form table error", max(rel_err(x, e) for x, e in zip(tuples, fixtures.x_tables(a, b, g))))
print("evolution error", max(rel_err(x, e) for x, e in zip(evolve(d.braid, tuples[0]), tuples)))
nd = check_nondegenerate(tuples, d.braid)
print("non-degenerate", nd.passed, "" if nd.passed else nd.to_json())
if not nd.passed:
    raise SystemExit("pick generic parameters to continue")

chk = verify_crossing_relations(extend_assignment(d, tuples))
print("Ptolemy relations max residual", chk.max_residual)
shapes = all_shapes(dec, d, rep)
for s in shapes:
    print(f"  crossing {s.crossing} tet {s.vertices}: z = {s.z:.6f}")
print("gluing max residual", gluing_residual(shapes, d).max_residual)
print(f"volume {volume(shapes):.12f}")
