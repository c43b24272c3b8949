"""Two ways to count singularities: local standard bases at given points,
and the generalized kernel of multiplication by f on the global Milnor algebra.

Run: python demos/milnor_routes.py
"""

from logchern import milnor
from logchern.errors import ChartFailureError
from logchern.polyarith import parse_homog, parse_poly

XYZ = ("x", "y", "z")
for k in range(1, 6):
    f = parse_poly(f"x^{k + 1} + y^2 + z^2", XYZ)
    print(f"A_{k}: local {milnor.local_milnor(f, (0, 0, 0))}, global "
          f"{milnor.affine_milnor_sum(f)[0]}")

# The Cayley cubic has a node at each coordinate point, so every coordinate
# chart has one at infinity. A linear change of coordinates fixes that.
P3 = ("x0", "x1", "x2", "x3")
F = parse_homog("x0*x1*x2 + x0*x1*x3 + x0*x2*x3 + x1*x2*x3", P3)
try:
    milnor.milnor_total(F)
except ChartFailureError as exc:
    print("without a change:", exc)
corners = [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)]
report = milnor.certify_points(F, corners, allow_change=True)
print("Cayley total", report.total, "per point",
      [c.local_milnor for c in report.per_point], "complete", report.certified_complete)

# Critical points off the zero level do not count.
print("x^3 - 3x + y^2 + z^2:", milnor.affine_milnor_sum(parse_poly("x^3 - 3*x + y^2 + z^2", XYZ)))

# Complete intersection: plane section of a cubic with a node.
z = parse_poly("z", XYZ)
print("ICIS node", milnor.icis_milnor(z, parse_poly("y^2 - x^3 - x^2", XYZ), (0, 0, 0)))
print("ICIS cusp", milnor.icis_milnor(z, parse_poly("y^2 - x^3", XYZ), (0, 0, 0)))
