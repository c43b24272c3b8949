"""A diagonal vector field tangent to the quadric cone.

v = diag(0, 2, 1, 5) has four isolated zeros at the coordinate points. Two
of them lie on the smooth part of the cone; the vertex is a zero too.

Run: python demos/poincare_hopf.py
"""

from pathlib import Path

import logchern
from logchern import indices, theorems
from logchern.cli import load_problem, point_text

FIXTURES = Path(logchern.__file__).parent / "fixtures"

spec = load_problem(FIXTURES / "quadric_cone.json")
v, D = spec.field, spec.single_divisor()
print("v(F) =", indices.derivative_along(v, D.F), "  tangent:", indices.is_logarithmic(v, D))
zeros, total, complete = indices.ph_total(v)
for p, index in zeros:
    where = "on D" if indices.on_divisor(D, p) else "off D"
    if indices.on_divisor(D, p) and indices.is_singular_point(D, p):
        where = "vertex of D"
    print(f"  zero {point_text(p)}: PH {index}, {where}")
print("PH total", total, "GSV total", indices.gsv_total(v, D))
report = theorems.verify_poincare_hopf(spec)
print("chi(P^3 - D) =", report.lhs)
for name, value in sorted(report.rhs_variants.items()):
    print(f"  {name:30s} {value:>3}  {report.verdicts[name]}")
