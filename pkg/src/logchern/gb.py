"""Gröbner bases, Mora standard bases and zero-dimensional quotient algebras.

Global orders (grevlex, lex) use Buchberger's algorithm with the normal
selection strategy and both Buchberger criteria. The local order
(negdegrevlex, where 1 is the largest monomial) uses Mora's tangent cone
algorithm: S-polynomials are reduced with the weak normal form, choosing
divisors of minimal ecart.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import product

from . import linalg
from .errors import ContextMismatchError, NotZeroDimensionalError
from .polyarith import HomogPoly, Poly, differentiate


class MonOrder(Enum):
    GREVLEX = "global-grevlex"
    LEX = "global-lex"
    NEGDEGREVLEX = "local-negdegrevlex"

    @property
    def is_local(self):
        return self is MonOrder.NEGDEGREVLEX

    def key(self, exps):
        """Sort key; a larger key is a larger monomial."""
        if self is MonOrder.LEX:
            return exps
        rev = tuple(-e for e in reversed(exps))
        if self is MonOrder.GREVLEX:
            return (sum(exps), rev)
        return (-sum(exps), rev)


GREVLEX = MonOrder.GREVLEX
LEX = MonOrder.LEX
LOCAL = MonOrder.NEGDEGREVLEX


# -- helpers on raw term dicts --------------------------------------------


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _leading(terms, key):
    exps = max(terms, key=key)
    return exps, terms[exps]


def _sub_multiple(f, g, coeff, shift):
    """f - coeff * x^shift * g, on term dicts."""
    out = dict(f)
    for e, c in g.items():
        m = tuple(a + b for a, b in zip(e, shift))
        v = out.get(m, 0) - coeff * c
        if v:
            out[m] = v
        else:
            out.pop(m, None)
    return out


def _monic(terms, key):
    _, lc = _leading(terms, key)
    return {e: c / lc for e, c in terms.items()}


def _ecart(terms, lead):
    return max(sum(e) for e in terms) - sum(lead)


class _Element:
    __slots__ = ("terms", "lm", "lc", "ecart")

    def __init__(self, terms, key):
        self.terms = terms
        self.lm, self.lc = _leading(terms, key)
        self.ecart = _ecart(terms, self.lm)


# -- reduction --------------------------------------------------------------


def _full_reduce(f, basis, key):
    """Complete division of f by basis (global orders)."""
    f = dict(f)
    remainder = {}
    while f:
        lm, lc = _leading(f, key)
        for g in basis:
            if _divides(g.lm, lm):
                shift = tuple(a - b for a, b in zip(lm, g.lm))
                f = _sub_multiple(f, g.terms, lc / g.lc, shift)
                break
        else:
            remainder[lm] = lc
            del f[lm]
    return remainder


def _truncate(terms, cutoff, lead=None):
    """Drop terms of degree >= cutoff, keeping ``lead`` if given."""
    if cutoff is None:
        return terms
    return {e: c for e, c in terms.items() if sum(e) < cutoff or e == lead}


def _corner_cutoff(lms, nvars):
    """N with m^N inside the lead ideal, when it contains a pure power of
    every variable; None otherwise."""
    powers = [None] * nvars
    for m in lms:
        support = [i for i, a in enumerate(m) if a]
        if len(support) == 1:
            i = support[0]
            if powers[i] is None or m[i] < powers[i]:
                powers[i] = m[i]
    if nvars == 0 or any(a is None for a in powers):
        return None
    return sum(a - 1 for a in powers) + 1


def _mora_reduce(f, basis, key, cutoff=None):
    """Mora's weak normal form: lead term of the result is not divisible by
    any lead term in ``basis`` (or the result is zero).

    With a ``cutoff`` N such that m^N lies in the ideal, terms of degree >= N
    are discarded as they appear; this keeps tails from growing.
    """
    h = _truncate(dict(f), cutoff)
    pool = list(basis)
    while h:
        lm, lc = _leading(h, key)
        candidates = [g for g in pool if _divides(g.lm, lm)]
        if not candidates:
            break
        g = min(candidates, key=lambda el: el.ecart)
        ecart_h = _ecart(h, lm)
        if g.ecart > ecart_h:
            pool.append(_Element(dict(h), key))
        shift = tuple(a - b for a, b in zip(lm, g.lm))
        h = _truncate(_sub_multiple(h, g.terms, lc / g.lc, shift), cutoff)
    return h


def _spoly(f, g):
    m = _lcm(f.lm, g.lm)
    sf = tuple(a - b for a, b in zip(m, f.lm))
    sg = tuple(a - b for a, b in zip(m, g.lm))
    out = {}
    for e, c in f.terms.items():
        out[tuple(a + b for a, b in zip(e, sf))] = c / f.lc
    return _sub_multiple(out, g.terms, 1 / g.lc, sg)


# -- results ----------------------------------------------------------------


@dataclass(frozen=True)
class BasisResult:
    generators: tuple
    order: MonOrder
    reduced: bool
    staircase_generators: frozenset  # minimal generators of the lead ideal
    variables: tuple = ()

    def leading_monomials(self):
        key = self.order.key
        return [max(g.terms, key=key) for g in self.generators]

    def is_unit(self):
        return any(not any(e) for e in self.staircase_generators)


def _check_context(gens):
    gens = list(gens)
    if not gens:
        raise ValueError("at least one generator is required")
    ctx = gens[0].variables
    for g in gens:
        if g.variables != ctx:
            raise ContextMismatchError(f"context {g.variables} differs from {ctx}")
    return gens, ctx


def _minimal_lead_set(lms):
    lms = set(lms)
    return frozenset(m for m in lms if not any(o != m and _divides(o, m) for o in lms))


def groebner(gens, order=GREVLEX):
    """Reduced Gröbner basis for a global monomial order."""
    if order.is_local:
        raise ValueError("groebner() needs a global order; use mora_standard_basis()")
    gens, ctx = _check_context(gens)
    key = order.key
    basis = []
    pairs = set()

    def add(terms):
        el = _Element(_monic(terms, key), key)
        idx = len(basis)
        basis.append(el)
        pairs.update((j, idx) for j in range(idx))

    for g in gens:
        r = _full_reduce(g.terms, basis, key)
        if r:
            add(r)
    while pairs:
        i, j = min(pairs, key=lambda p: key(_lcm(basis[p[0]].lm, basis[p[1]].lm)))
        pairs.discard((i, j))
        fi, fj = basis[i], basis[j]
        m = _lcm(fi.lm, fj.lm)
        # Product criterion.
        if all(a == 0 or b == 0 for a, b in zip(fi.lm, fj.lm)):
            continue
        # Chain criterion.
        chain = False
        for k, fk in enumerate(basis):
            if k in (i, j):
                continue
            if _divides(fk.lm, m):
                pik = (min(i, k), max(i, k))
                pjk = (min(j, k), max(j, k))
                if pik not in pairs and pjk not in pairs:
                    chain = True
                    break
        if chain:
            continue
        r = _full_reduce(_spoly(fi, fj), basis, key)
        if r:
            add(r)
    return _reduce_basis(basis, ctx, order)


def _reduce_basis(elements, ctx, order):
    key = order.key
    minimal = []
    for e in sorted(elements, key=lambda el: key(el.lm)):
        if not any(_divides(m.lm, e.lm) for m in minimal):
            minimal.append(e)
    reduced = []
    for i, e in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        tail = dict(e.terms)
        del tail[e.lm]
        tail = _full_reduce(tail, others, key)
        tail[e.lm] = Fraction(1)
        reduced.append(tail)
    reduced.sort(key=lambda t: key(max(t, key=key)), reverse=True)
    polys = tuple(Poly(ctx, t) for t in reduced)
    lms = [max(t, key=key) for t in reduced]
    return BasisResult(polys, order, True, _minimal_lead_set(lms), ctx)


def mora_standard_basis(gens, order=LOCAL):
    """Standard basis of the ideal in the localization at the origin."""
    if not order.is_local:
        raise ValueError("mora_standard_basis() needs a local order")
    gens, ctx = _check_context(gens)
    key = order.key
    basis = []
    pairs = []
    zero = (0,) * len(ctx)
    cutoff = None  # highest-corner bound, once the lead ideal contains m^N

    def add(terms):
        nonlocal cutoff
        el = _Element(_monic(terms, key), key)
        for j in range(len(basis)):
            pairs.append((j, len(basis)))
        basis.append(el)
        bound = _corner_cutoff([e.lm for e in basis], len(ctx))
        if bound is not None and (cutoff is None or bound < cutoff):
            cutoff = bound
            for k, e in enumerate(basis):
                basis[k] = _Element(_truncate(e.terms, cutoff, e.lm), key)
        return el.lm == zero

    for g in gens:
        if g.terms and add(g.terms):
            return _unit_result(ctx, order)
    while pairs:
        # lowest-degree lcm first: the largest monomial under a local order
        pairs.sort(key=lambda p: key(_lcm(basis[p[0]].lm, basis[p[1]].lm)))
        i, j = pairs.pop()
        h = _mora_reduce(_spoly(basis[i], basis[j]), basis, key, cutoff)
        if h and add(h):
            return _unit_result(ctx, order)
    minimal = []
    for e in sorted(basis, key=lambda el: (key(el.lm), -el.ecart)):
        if not any(_divides(m.lm, e.lm) for m in minimal):
            minimal.append(e)
    minimal.sort(key=lambda el: key(el.lm), reverse=True)
    polys = tuple(Poly(ctx, e.terms) for e in minimal)
    return BasisResult(polys, order, False, _minimal_lead_set(e.lm for e in minimal), ctx)


def _unit_result(ctx, order):
    one = Poly.constant(1, ctx)
    return BasisResult((one,), order, True, frozenset({(0,) * len(ctx)}), ctx)


def standard_basis(gens, order):
    return mora_standard_basis(gens, order) if order.is_local else groebner(gens, order)


def normal_form(p, basis):
    """Normal form of p modulo a basis: complete reduction for global orders,
    Mora's weak normal form for the local order."""
    if p.variables != basis.variables:
        raise ContextMismatchError("polynomial and basis live in different contexts")
    key = basis.order.key
    elements = [_Element(g.terms, key) for g in basis.generators]
    if basis.order.is_local:
        return Poly(p.variables, _mora_reduce(p.terms, elements, key))
    return Poly(p.variables, _full_reduce(p.terms, elements, key))


def ideal_membership(p, gens, order=GREVLEX):
    """True iff p lies in the ideal (in the local ring for the local order)."""
    basis = gens if isinstance(gens, BasisResult) else standard_basis(gens, order)
    return normal_form(p, basis).is_zero()


# -- quotient algebras ---------------------------------------------------


@dataclass(frozen=True)
class QuotientAlgebra:
    basis_monomials: tuple
    source: BasisResult

    @property
    def dimension(self):
        return len(self.basis_monomials)

    @property
    def variables(self):
        return self.source.variables


def staircase_bounds(lead_set, nvars):
    """Smallest pure power of each variable among lead monomials, or None."""
    bounds = []
    for i in range(nvars):
        pure = [m[i] for m in lead_set if all(e == 0 for k, e in enumerate(m) if k != i)]
        bounds.append(min(pure) if pure else None)
    return bounds


def is_zero_dimensional(basis):
    if basis.is_unit():
        return True
    return None not in staircase_bounds(basis.staircase_generators, len(basis.variables))


def quotient_algebra(basis):
    """Monomial basis of the quotient, in increasing monomial order."""
    nvars = len(basis.variables)
    if basis.is_unit():
        return QuotientAlgebra((), basis)
    bounds = staircase_bounds(basis.staircase_generators, nvars)
    missing = [basis.variables[i] for i, b in enumerate(bounds) if b is None]
    if missing:
        raise NotZeroDimensionalError(
            f"no pure power of {', '.join(missing)} among the leading terms"
        )
    lead = basis.staircase_generators
    monos = [
        m for m in product(*(range(b) for b in bounds))
        if not any(_divides(g, m) for g in lead)
    ]
    monos.sort(key=basis.order.key)
    return QuotientAlgebra(tuple(monos), basis)


def mult_matrix(algebra, p):
    """Matrix of [q] -> [p q] in the monomial basis (columns are images)."""
    basis = algebra.source
    if basis.order.is_local:
        raise ValueError("multiplication matrices need a global order")
    if p.variables != algebra.variables:
        raise ContextMismatchError("polynomial and algebra live in different contexts")
    index = {m: i for i, m in enumerate(algebra.basis_monomials)}
    n = algebra.dimension
    mat = linalg.zeros(n)
    for j, m in enumerate(algebra.basis_monomials):
        image = normal_form(p * Poly.monomial(m, p.variables), basis)
        for e, c in image.terms.items():
            mat[index[e]][j] = c
    return mat


def generalized_kernel_dim(m):
    return linalg.generalized_kernel_dim(m)


def no_singularities_at_infinity(F, chart):
    """True iff no singular point of {F = 0} lies on the hyperplane x_chart = 0."""
    poly = F.poly if isinstance(F, HomogPoly) else F
    ctx = poly.variables
    gens = [differentiate(poly, i) for i in range(len(ctx))]
    gens.append(Poly.var(ctx[chart], ctx))
    gens = [g for g in gens if not g.is_zero()]
    return is_zero_dimensional(groebner(gens, GREVLEX))
