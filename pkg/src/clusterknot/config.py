"""Global numerical tolerances."""
from dataclasses import dataclass


@dataclass(frozen=True)
class Tolerances:
    identity: float = 1e-9     # relation / identity residuals, scaled by operand size
    degenerate: float = 1e-12  # denominators treated as zero below this
    det_one: float = 1e-9      # |det - 1| for representation matrices
    closure: float = 1e-8      # colouring consistency


TOL = Tolerances()
