"""Length parity against obstruction class: one 4_1 rep on braids of both parities.

Each extra kink flips (-1)^n; the arc colouring closes exactly when it
matches the representation's class.

    python3 scripts/parity_gate.py
"""
from clusterknot.braid import closure_diagram, parse_braid_word
from clusterknot.decoration import arc_colorings
from clusterknot.errors import ObstructionMismatch
from clusterknot.representation import obstruction_class, solve_parabolic

BRAIDS = [("[1,-2,1,-2]", 3), ("[1,-2,1,-2,3]", 4), ("[1,-2,1,-2,3,4]", 5), ("[1,-2,1,-2,3,-4,-5]", 6)]

for text, width in BRAIDS:
    d = closure_diagram(parse_braid_word(text, width))
    rep = solve_parabolic(d, seed=0)[0]
    try:
        arc_colorings(d, rep)
        verdict = "colouring closes"
    except ObstructionMismatch as e:
        verdict = f"ObstructionMismatch (rep {e.rep_parity:+d}, braid {e.braid_parity:+d})"
    print(f"{text:22} n={d.n}  obstruction {obstruction_class(rep):+d}  (-1)^n {(-1) ** d.n:+d}  {verdict}")
