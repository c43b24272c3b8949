"""A plane and a smooth cubic surface meeting in a nodal plane cubic.

The mu(C) term of the two-divisor identity can be read with either sign;
this fixture separates them.

Run: python demos/sign_adjudication.py
"""

from pathlib import Path

import logchern
from logchern import theorems
from logchern.cli import load_problem

FIXTURES = Path(logchern.__file__).parent / "fixtures"

spec = load_problem(FIXTURES / "hyperplane_cubic_node.json")
report = theorems.verify_gauss_bonnet(spec)
for entry in report.ledger:
    print(f"  {entry.quantity:40s} {str(entry.value):>4s}   [{entry.route}]")
print("left side:", report.lhs)
for name, value in sorted(report.rhs_variants.items()):
    print(f"  {name:28s} {value:>3}  {report.verdicts[name]}")
for note in report.notes:
    print("note:", note)
