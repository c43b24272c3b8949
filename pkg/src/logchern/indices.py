"""Holomorphic vector fields on P^n induced by linear endomorphisms.

A rational ``(n+1) x (n+1)`` matrix ``A`` induces the field ``v_A`` on P^n;
``A`` and ``A + c I`` give the same field. Zeros of ``v_A`` are the
projectivized eigenvectors. Poincaré–Hopf indices are local intersection
multiplicities of the chart components, GSV totals are Chern integrals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import gb, linalg
from .chow import Decomposition, DivisorOnPn, chern_integral
from .errors import (
    DegenerateFieldError,
    DegenerateZeroError,
    DimensionMismatchError,
    NonIsolatedError,
    NotAZeroError,
    NotLogarithmicError,
    PointOnSingularLocusError,
)
from .milnor import local_algebra_dim, normalize_point
from .polyarith import Poly, differentiate, evaluate, substitute


@dataclass(frozen=True)
class VectorFieldPn:
    matrix: tuple

    def __post_init__(self):
        rows = tuple(tuple(Fraction(a) for a in row) for row in self.matrix)
        if any(len(r) != len(rows) for r in rows) or len(rows) < 2:
            raise DimensionMismatchError("the field needs a square matrix of size n+1 >= 2")
        object.__setattr__(self, "matrix", rows)
        if all(rows[i][j] == (rows[0][0] if i == j else 0)
               for i in range(len(rows)) for j in range(len(rows))):
            raise DegenerateFieldError("a scalar matrix induces the zero field on P^n")

    @property
    def n(self):
        return len(self.matrix) - 1

    @property
    def trace_free(self):
        t = sum(self.matrix[i][i] for i in range(self.n + 1)) / (self.n + 1)
        return tuple(
            tuple(a - t if i == j else a for j, a in enumerate(row))
            for i, row in enumerate(self.matrix)
        )

    def shifted(self, c):
        """The representative A + c I of the same field."""
        c = Fraction(c)
        return VectorFieldPn(tuple(
            tuple(a + c if i == j else a for j, a in enumerate(row))
            for i, row in enumerate(self.matrix)
        ))

    def lift(self, variables):
        """Components (A x)_i of the homogeneous lift, as polynomials."""
        xs = [Poly.var(v, variables) for v in variables]
        out = []
        for row in self.matrix:
            comp = Poly.zero(variables)
            for a, x in zip(row, xs):
                if a:
                    comp = comp + x * a
            out.append(comp)
        return out


@dataclass(frozen=True)
class IndexReport:
    zeros: tuple  # (point, PH index) pairs
    ph_total: int
    complete: bool
    gsv_total_per_divisor: dict
    residual_gsv_at_singular: dict


def _default_variables(n):
    return tuple(f"x{i}" for i in range(n + 1))


def zeros_of_field(v):
    """Projective zeros of v and whether the list is known to be complete.

    The list is complete when every root of the characteristic polynomial is
    rational. A repeated eigenvalue with several independent eigenvectors
    gives a positive-dimensional zero set and is rejected.
    """
    a = [list(r) for r in v.matrix]
    roots = linalg.rational_roots(linalg.charpoly(a))
    points = []
    for lam in sorted(roots):
        shifted = [[x - lam if i == j else x for j, x in enumerate(r)] for i, r in enumerate(a)]
        kernel = linalg.nullspace(shifted)
        if len(kernel) > 1:
            raise NonIsolatedError(
                f"eigenvalue {lam} has a {len(kernel)}-dimensional eigenspace; "
                "the zeros of the field are not isolated"
            )
        points.append(normalize_point(kernel[0]))
    complete = sum(roots.values()) == v.n + 1
    return points, complete


def chart_components(v, point, variables=None):
    """Affine components of v at a zero, in the chart of the first nonzero
    coordinate, translated so that the point sits at the origin."""
    variables = variables or _default_variables(v.n)
    point = normalize_point(point)
    k = next(i for i, c in enumerate(point) if c)
    affine_vars = variables[:k] + variables[k + 1:]
    # x_k = 1, x_j = y_j + p_j
    images = []
    j = 0
    for i in range(v.n + 1):
        if i == k:
            images.append(Poly.constant(1, affine_vars))
        else:
            images.append(Poly.var(affine_vars[j], affine_vars) + point[i])
            j += 1
    lifted = [substitute(c, images) for c in v.lift(variables)]
    comps = []
    for i in range(v.n + 1):
        if i != k:
            comps.append(lifted[i] - images[i] * lifted[k])
    return comps


def is_zero_of(v, point):
    point = normalize_point(point)
    vec = [sum(a * x for a, x in zip(row, point)) for row in v.matrix]
    # A p is proportional to p
    return all(vec[i] * point[j] == vec[j] * point[i]
               for i in range(len(point)) for j in range(len(point)))


def ph_index_at(v, p):
    """Poincaré–Hopf index of v at an isolated zero p."""
    if len(p) != v.n + 1:
        raise DimensionMismatchError("point and field dimensions differ")
    if not is_zero_of(v, p):
        raise NotAZeroError(f"the field does not vanish at {tuple(map(str, p))}")
    return local_algebra_dim(chart_components(v, p))


def local_ph_index(components, point=None):
    """Local intersection multiplicity of arbitrary affine components."""
    return local_algebra_dim(components, point)


def is_nondegenerate_zero(v, p):
    comps = chart_components(v, p)
    origin = (0,) * (len(comps))
    jac = [[evaluate(differentiate(c, i), origin) for i in range(len(comps))] for c in comps]
    return linalg.bareiss_det(jac) != 0


def ph_total(v):
    zeros, complete = zeros_of_field(v)
    indexed = tuple((p, ph_index_at(v, p)) for p in zeros)
    return indexed, sum(i for _, i in indexed), complete


def derivative_along(v, F):
    """v(F) = sum_i (A x)_i dF/dx_i for the homogeneous lift."""
    poly = F.poly
    lift = v.lift(poly.variables)
    acc = Poly.zero(poly.variables)
    for i, comp in enumerate(lift):
        acc = acc + comp * differentiate(poly, i)
    return acc


def is_logarithmic(v, D):
    """True iff v is tangent to D, i.e. v(F) lies in the ideal (F)."""
    F = D.F if isinstance(D, DivisorOnPn) else D
    if len(F.variables) != v.n + 1:
        raise DimensionMismatchError("field and divisor live on different P^n")
    return gb.ideal_membership(derivative_along(v, F), [F.poly], gb.GREVLEX)


def _require_logarithmic(v, divisors):
    for D in divisors:
        if not is_logarithmic(v, D):
            raise NotLogarithmicError(f"the field is not tangent to {D.name}")


def gsv_total(v, target):
    """Total GSV index along a divisor or along C = D1 ∩ D2, as the Chern
    integral of T P^n minus the normal bundle."""
    if isinstance(target, Decomposition):
        _require_logarithmic(v, (target.D1, target.D2))
        return chern_integral(target.n, target.degrees)
    _require_logarithmic(v, (target,))
    return chern_integral(target.n, (target.degree,))


def on_divisor(D, point):
    return evaluate(D.F.poly, normalize_point(point)) == 0


def is_singular_point(D, point):
    point = normalize_point(point)
    poly = D.F.poly
    return all(evaluate(differentiate(poly, i), point) == 0 for i in range(poly.nvars))


def gsv_residual_at_singular(v, D, smooth_zero_points):
    """GSV total minus the PH indices of non-degenerate zeros on D_reg; this is
    the GSV index carried by the singular points of D."""
    total = gsv_total(v, D)
    for p in smooth_zero_points:
        if not on_divisor(D, p):
            raise NotAZeroError(f"point {tuple(map(str, p))} is not on {D.name}")
        if is_singular_point(D, p):
            raise PointOnSingularLocusError(
                f"point {tuple(map(str, p))} is a singular point of {D.name}"
            )
        if not is_nondegenerate_zero(v, p):
            raise DegenerateZeroError(f"zero {tuple(map(str, p))} is degenerate")
        total -= ph_index_at(v, p)
    return total


def index_report(v, divisors):
    """PH indices of all zeros, GSV totals and residuals per divisor."""
    zeros, total, complete = ph_total(v)
    gsv = {}
    residual = {}
    for D in divisors:
        gsv[D.name] = gsv_total(v, D)
        smooth = [p for p, _ in zeros
                  if on_divisor(D, p) and not is_singular_point(D, p)
                  and is_nondegenerate_zero(v, p)]
        residual[D.name] = gsv_residual_at_singular(v, D, smooth)
    return IndexReport(zeros, total, complete, gsv, residual)
