"""Chain complexes of free abelian groups and their homology.

A chain complex here is a list of ranks (one free group per degree) and one
integer matrix per degree mapping it to the degree below, with the square of
the boundary required to vanish.  Homology in degree k is computed from the
Smith normal forms of the two adjacent boundary matrices: free rank from a
rank count, torsion from the elementary divisors.

Run me directly:  python3 demos/02_chain_complexes.py
"""

from nmshom import ChainComplex, IntegerMatrix

# --- The circle -----------------------------------------------------------
# One vertex, one edge glued to it at both ends, so the boundary of the edge
# cancels: d_1 = [0].
circle = ChainComplex((1, 1), (IntegerMatrix.from_rows([[0]]),))
print("circle:", ", ".join(f"H_{g.degree} = {g}" for g in circle.homology()))

# --- The two-sphere, with an empty middle degree --------------------------
# Degrees with zero generators are explicit, and the boundary maps touching
# them are 0 x n or n x 0 matrices rather than special cases.
sphere = ChainComplex(
    (1, 0, 1),
    (IntegerMatrix.zeros(1, 0), IntegerMatrix.zeros(0, 1)),
)
print("sphere:", ", ".join(f"H_{g.degree} = {g}" for g in sphere.homology()))

# --- The Klein bottle: torsion appears ------------------------------------
# Cell structure with one 0-cell, two 1-cells a and b, one 2-cell glued along
# a b a b^-1: the boundary of the 2-cell is 2b.
klein = ChainComplex(
    (1, 2, 1),
    (
        IntegerMatrix.zeros(1, 2),
        IntegerMatrix.from_rows([[0], [2]]),
    ),
    generator_labels=[["v"], ["a", "b"], ["f"]],
)
print("klein bottle:", ", ".join(f"H_{g.degree} = {g}" for g in klein.homology()))
print("klein bottle euler characteristic:", klein.euler_characteristic())

# --- The boundary condition is checked, not assumed -----------------------
# Complexes with d.d != 0 can be *represented* (so you can inspect what went
# wrong) but homology refuses them.  The report names the offending
# generators and the nonzero product.
broken = ChainComplex(
    (1, 1, 1),
    (IntegerMatrix.from_rows([[2]]), IntegerMatrix.from_rows([[3]])),
    generator_labels=[["bottom"], ["middle"], ["top"]],
)
report = broken.check_boundary_condition()
print()
print("a broken complex:")
print(report.describe())
try:
    broken.homology()
except Exception as err:
    print("homology refused:", type(err).__name__)
