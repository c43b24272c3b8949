"""Milnor numbers of isolated hypersurface and complete intersection singularities.

Two independent routes are provided:

* local: translate a rational point to the origin and count the staircase of
  the Jacobian ideal under a local order (Mora standard basis);
* global: on the Milnor algebra ``Q[x]/J(f)`` of an affine chart, the sum of
  Milnor numbers over critical points on the zero level is the algebraic
  multiplicity of eigenvalue 0 of multiplication by ``f``. No point is ever
  located.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from itertools import product

from . import gb, linalg
from .errors import (
    ChartFailureError,
    NonIsolatedError,
    NotRegularSequenceError,
    NotSingularError,
    NotZeroDimensionalError,
    SingularitiesAtInfinityError,
)
from .polyarith import (
    HomogPoly,
    Poly,
    dehomogenize,
    evaluate,
    gradient,
    linear_change,
    translate,
)


@dataclass(frozen=True)
class SingularPointCert:
    point: tuple
    local_milnor: int
    chart: int


@dataclass(frozen=True)
class CoordinateChange:
    """Substitution x = M y; ``inverse`` maps old coordinates to new ones."""

    matrix: tuple
    inverse: tuple

    def apply(self, F):
        return HomogPoly(linear_change(F.poly, self.matrix), F.degree)

    def new_coordinates(self, point):
        return tuple(sum(Fraction(a) * p for a, p in zip(row, point)) for row in self.inverse)


@dataclass(frozen=True)
class GlobalMilnor:
    total: int
    chart: int
    change: CoordinateChange | None = None
    algebra_dim: int | None = None  # Milnor algebra dimension, hypersurface route only


@dataclass(frozen=True)
class MilnorReport:
    total: int
    per_point: tuple = ()
    certified_complete: bool = True
    route: GlobalMilnor | None = None
    notes: tuple = ()


def normalize_point(point):
    """Projective rational point scaled so that its first nonzero entry is 1."""
    point = tuple(Fraction(a) for a in point)
    lead = next((a for a in point if a), None)
    if lead is None:
        raise ValueError("the zero vector is not a projective point")
    return tuple(a / lead for a in point)


def local_algebra_dim(gens, point=None):
    """dim O_p / (gens) for the local ring at ``point`` (default: origin)."""
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        raise NonIsolatedError("the zero ideal has an infinite-dimensional local algebra")
    if point is not None and any(point):
        gens = [translate(g, point) for g in gens]
    basis = gb.mora_standard_basis(gens, gb.LOCAL)
    try:
        return gb.quotient_algebra(basis).dimension
    except NotZeroDimensionalError as exc:
        raise NonIsolatedError(f"local algebra is infinite-dimensional: {exc}") from None


def local_milnor(f, p):
    """Milnor number of the isolated singular point ``p`` of ``{f = 0}``."""
    p = tuple(Fraction(a) for a in p)
    if evaluate(f, p) != 0:
        raise NotSingularError(f"point {_fmt(p)} is not on the hypersurface")
    grad = gradient(f)
    if any(evaluate(g, p) for g in grad):
        raise NotSingularError(f"gradient does not vanish at {_fmt(p)}")
    return local_algebra_dim(grad, p)


def milnor_orlik_oracle(weights, d):
    """Milnor number of a weighted homogeneous isolated singularity,
    prod_i (d / w_i - 1), for weights w_i and weighted degree d."""
    d = Fraction(d)
    return reduce(lambda acc, w: acc * (d / Fraction(w) - 1), weights, Fraction(1))


def global_milnor_algebra(f):
    """Quotient algebra of the affine Jacobian ideal (grevlex)."""
    grad = [g for g in gradient(f) if not g.is_zero()]
    if not grad:
        raise NonIsolatedError("f has an identically vanishing gradient")
    basis = gb.groebner(grad, gb.GREVLEX)
    try:
        return gb.quotient_algebra(basis)
    except NotZeroDimensionalError as exc:
        raise NonIsolatedError(f"critical locus of the affine equation is not finite: {exc}") \
            from None


def affine_milnor_sum(f):
    """Sum of Milnor numbers over the critical points of f lying on f = 0."""
    if f.is_constant() and not f.is_zero():
        return 0, 0  # empty zero level: the hypersurface lies at infinity
    algebra = global_milnor_algebra(f)
    if algebra.dimension == 0:
        return 0, 0
    mat = gb.mult_matrix(algebra, f)
    return linalg.generalized_kernel_dim(mat), algebra.dimension


def milnor_sum_on_zero_level(F, chart=None):
    """Total Milnor number of the projective hypersurface F = 0, computed in
    the affine chart ``x_chart != 0`` (default: the last coordinate)."""
    nv = len(F.variables)
    chart = nv - 1 if chart is None else chart
    if not gb.no_singularities_at_infinity(F, chart):
        raise SingularitiesAtInfinityError(
            f"a singular point lies on the hyperplane {F.variables[chart]} = 0; "
            "try another chart or a linear change of coordinates"
        )
    total, _ = affine_milnor_sum(dehomogenize(F, chart))
    return total


def coordinate_changes(nv, chart, tries=24):
    """Deterministic sequence of changes replacing x_chart by a generic form."""
    others = [i for i in range(nv) if i != chart]
    patterns = [
        [1] * len(others),
        [i + 1 for i in range(len(others))],
        [(-1) ** i * (i + 1) for i in range(len(others))],
        [(i + 1) ** 2 for i in range(len(others))],
    ]
    for c in product(range(-2, 4), repeat=len(others)):
        if len(patterns) >= tries:
            break
        if any(c) and list(c) not in patterns:
            patterns.append(list(c))
    for coeffs in patterns:
        inverse = linalg.identity(nv)
        matrix = linalg.identity(nv)
        for i, c in zip(others, coeffs):
            inverse[chart][i] = Fraction(c)
            matrix[chart][i] = Fraction(-c)
        yield CoordinateChange(tuple(map(tuple, matrix)), tuple(map(tuple, inverse)))


def milnor_total(F, chart=None, allow_change=False):
    """Global Milnor total with the chart policy: the requested chart (default
    last), then every coordinate chart, then, only when ``allow_change`` is
    set, deterministic linear changes of coordinates."""
    nv = len(F.variables)
    charts = [nv - 1 if chart is None else chart]
    if chart is None:
        charts += [k for k in range(nv) if k not in charts]
    for k in charts:
        if gb.no_singularities_at_infinity(F, k):
            total, dim = affine_milnor_sum(dehomogenize(F, k))
            return GlobalMilnor(total, k, None, dim)
    if allow_change:
        k = charts[0]
        for change in coordinate_changes(nv, k):
            G = change.apply(F)
            if gb.no_singularities_at_infinity(G, k):
                total, dim = affine_milnor_sum(dehomogenize(G, k))
                return GlobalMilnor(total, k, change, dim)
    tried = ", ".join(F.variables[k] for k in charts)
    raise ChartFailureError(
        f"every tried chart ({tried}) has singular points at infinity; "
        "allow a linear change of coordinates to proceed"
    )


def _fmt(point):
    return "(" + ", ".join(str(a) for a in point) + ")"


def _projective_local(F, point):
    point = normalize_point(point)
    k = next(i for i, a in enumerate(point) if a)
    affine = point[:k] + point[k + 1:]
    return dehomogenize(F, k), affine, k, point


def local_certificates(F, points):
    """Check each projective point is singular and compute its Milnor number."""
    certs = []
    seen = set()
    for raw in points:
        f, affine, k, point = _projective_local(F, raw)
        if point in seen:
            raise ValueError(f"point {_fmt(point)} listed twice")
        seen.add(point)
        if any(evaluate(g, point) for g in gradient(F.poly)):
            raise NotSingularError(f"gradient of F does not vanish at {_fmt(point)}")
        certs.append(SingularPointCert(point, local_milnor(f, affine), k))
    return tuple(certs)


def certify_points(F, points, chart=None, allow_change=False):
    """Local Milnor numbers at user-supplied projective points, compared with
    the global total."""
    certs = local_certificates(F, points)
    route = milnor_total(F, chart, allow_change)
    local_total = sum(c.local_milnor for c in certs)
    return MilnorReport(route.total, certs, local_total == route.total, route)


# -- complete intersections ----------------------------------------------


def _minors(g1, g2):
    out = []
    n = len(g1)
    for i in range(n):
        for j in range(i + 1, n):
            m = g1[i] * g2[j] - g1[j] * g2[i]
            if not m.is_zero():
                out.append(m)
    return out


def lg_ideal(f1, f2):
    """Generators of (f1) + (2x2 minors of the Jacobian of (f1, f2))."""
    return [f1] + _minors(gradient(f1), gradient(f2))


def _icis_one_order(f1, f2, p):
    if any(evaluate(g, p) for g in gradient(f1)):
        mu1 = 0
    else:
        mu1 = local_milnor(f1, p)
    return local_algebra_dim(lg_ideal(f1, f2), p) - mu1


def icis_milnor(f1, f2, p):
    """Milnor number of the curve or surface germ {f1 = f2 = 0} at p by the
    Lê–Greuel formula  mu(f1) + mu(f1, f2) = dim O/((f1) + I_2(Jac))."""
    p = tuple(Fraction(a) for a in p)
    if evaluate(f1, p) or evaluate(f2, p):
        raise NotSingularError(f"point {_fmt(p)} is not on the complete intersection")
    if f1.is_zero() or f2.is_zero():
        raise NotRegularSequenceError("a zero equation is not part of a regular sequence")
    if gb.ideal_membership(translate(f2, p), [translate(f1, p)], gb.LOCAL) or \
            gb.ideal_membership(translate(f1, p), [translate(f2, p)], gb.LOCAL):
        raise NotRegularSequenceError("one equation lies in the ideal of the other at p")
    values = []
    errors = []
    for a, b in ((f1, f2), (f2, f1)):
        try:
            values.append(_icis_one_order(a, b, p))
        except NonIsolatedError as exc:
            errors.append(exc)
    if not values:
        raise errors[0]
    assert len(set(values)) == 1, f"Lê–Greuel orderings disagree: {values}"
    return values[0]


def _homogeneous_minors(F1, F2):
    return _minors(gradient(F1.poly), gradient(F2.poly))


def icis_no_singularities_at_infinity(F1, F2, chart):
    ctx = F1.variables
    gens = [F1.poly, F2.poly, Poly.var(ctx[chart], ctx)] + _homogeneous_minors(F1, F2)
    return gb.is_zero_dimensional(gb.groebner(gens, gb.GREVLEX))


def _affine_icis_sum(f1, f2):
    # sum over p in C of mu_p(f1) + mu_p(C)
    basis = gb.groebner(lg_ideal(f1, f2), gb.GREVLEX)
    try:
        algebra = gb.quotient_algebra(basis)
    except NotZeroDimensionalError as exc:
        raise NonIsolatedError(f"critical locus of f2 on f1 = 0 is not finite: {exc}") from None
    combined = 0
    if algebra.dimension:
        combined = linalg.generalized_kernel_dim(gb.mult_matrix(algebra, f2))
    # sum over p in C of mu_p(f1)
    jac = global_milnor_algebra(f1) if any(not g.is_zero() for g in gradient(f1)) else None
    mu1 = 0
    if jac is not None and jac.dimension:
        mu1 = linalg.joint_generalized_kernel_dim(
            [gb.mult_matrix(jac, f1), gb.mult_matrix(jac, f2)]
        )
    return combined - mu1


def icis_milnor_total(F1, F2, chart=None, allow_change=False):
    """Total Milnor number of C = {F1 = F2 = 0} without locating points."""
    nv = len(F1.variables)
    charts = [nv - 1 if chart is None else chart]
    if chart is None:
        charts += [k for k in range(nv) if k not in charts]

    def attempt(G1, G2, k):
        values = []
        errors = []
        for a, b in ((G1, G2), (G2, G1)):
            try:
                values.append(_affine_icis_sum(dehomogenize(a, k), dehomogenize(b, k)))
            except NonIsolatedError as exc:
                errors.append(exc)
        if not values:
            raise errors[0]
        assert len(set(values)) == 1, f"Lê–Greuel orderings disagree: {values}"
        return values[0]

    for k in charts:
        if icis_no_singularities_at_infinity(F1, F2, k):
            return GlobalMilnor(attempt(F1, F2, k), k)
    if allow_change:
        k = charts[0]
        for change in coordinate_changes(nv, k):
            G1, G2 = change.apply(F1), change.apply(F2)
            if icis_no_singularities_at_infinity(G1, G2, k):
                return GlobalMilnor(attempt(G1, G2, k), k, change)
    raise ChartFailureError("every tried chart has singular points of C at infinity")


def local_icis_certificates(F1, F2, points):
    certs = []
    for raw in points:
        point = normalize_point(raw)
        k = next(i for i, a in enumerate(point) if a)
        affine = point[:k] + point[k + 1:]
        f1, f2 = dehomogenize(F1, k), dehomogenize(F2, k)
        certs.append(SingularPointCert(point, icis_milnor(f1, f2, affine), k))
    return tuple(certs)


def certify_icis_points(F1, F2, points, chart=None, allow_change=False):
    certs = local_icis_certificates(F1, F2, points)
    route = icis_milnor_total(F1, F2, chart, allow_change)
    local_total = sum(c.local_milnor for c in certs)
    return MilnorReport(route.total, certs, local_total == route.total, route)
