"""Sparse multivariate polynomials over the rationals.

A :class:`Poly` carries an explicit, ordered tuple of variable names and a
map from exponent tuples to :class:`fractions.Fraction` coefficients.
Binary operations require identical variable tuples.

>>> p = parse_poly("(x + y)^2", ("x", "y"))
>>> str(p)
'x^2 + 2*x*y + y^2'
>>> str(differentiate(p, "x"))
'2*x + 2*y'
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce

from .errors import (
    ContextMismatchError,
    NegativeExponentError,
    NotHomogeneousError,
    ParseError,
    UnknownVariableError,
)

Rat = Fraction

_SCALARS = (int, Fraction)


def grevlex_key(exps):
    """Sort key: larger key means larger monomial in graded reverse lex."""
    return (sum(exps), tuple(-e for e in reversed(exps)))


class Poly:
    """Immutable sparse polynomial with rational coefficients."""

    __slots__ = ("variables", "terms", "_hash")

    def __init__(self, variables, terms=None):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise ContextMismatchError(f"repeated variable names in {variables}")
        nvars = len(variables)
        clean = {}
        for exps, c in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != nvars or any(e < 0 for e in exps):
                raise ContextMismatchError(
                    f"monomial {exps} does not fit context {variables}"
                )
            c = Fraction(c)
            if c:
                clean[exps] = c
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def constant(cls, c, variables):
        variables = tuple(variables)
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def zero(cls, variables):
        return cls(variables)

    @classmethod
    def var(cls, name, variables):
        variables = tuple(variables)
        if name not in variables:
            raise UnknownVariableError(name)
        exps = tuple(int(v == name) for v in variables)
        return cls(variables, {exps: 1})

    @classmethod
    def monomial(cls, exps, variables, coeff=1):
        return cls(variables, {tuple(exps): coeff})

    # -- basic queries ------------------------------------------------

    @property
    def nvars(self):
        return len(self.variables)

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(not any(e) for e in self.terms)

    def constant_term(self):
        return self.terms.get((0,) * self.nvars, Fraction(0))

    def total_degree(self):
        """Largest total degree of a term; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self):
        return len({sum(e) for e in self.terms}) <= 1

    def coefficient(self, exps):
        return self.terms.get(tuple(exps), Fraction(0))

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __call__(self, *point):
        if len(point) == 1 and isinstance(point[0], (list, tuple)):
            point = point[0]
        return evaluate(self, point)

    # -- arithmetic ---------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.variables != self.variables:
                raise ContextMismatchError(
                    f"context {other.variables} differs from {self.variables}"
                )
            return other
        if isinstance(other, _SCALARS):
            return Poly.constant(other, self.variables)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, 0) + c
        return Poly(self.variables, terms)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if isinstance(other, _SCALARS):
            return Poly(self.variables, {e: c * other for e, c in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return Poly(self.variables, terms)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = Poly.constant(1, self.variables)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, _SCALARS):
            other = Poly.constant(other, self.variables)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.variables == other.variables and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(
                self, "_hash", hash((self.variables, frozenset(self.terms.items())))
            )
        return self._hash

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Poly({format_poly(self)!r}, {self.variables})"


@dataclass(frozen=True)
class HomogPoly:
    """A nonzero homogeneous polynomial together with its degree."""

    poly: Poly
    degree: int

    def __post_init__(self):
        if self.poly.is_zero():
            raise NotHomogeneousError("the zero polynomial has no degree")
        degrees = {sum(e) for e in self.poly.terms}
        if degrees != {self.degree}:
            raise NotHomogeneousError(
                f"not homogeneous: terms of degrees {sorted(degrees)} "
                f"in a form of degree {self.degree}"
            )
        if self.degree < 1:
            raise NotHomogeneousError("homogeneous forms must have positive degree")
        assert euler_check(self)

    @classmethod
    def from_poly(cls, poly):
        return cls(poly, poly.total_degree())

    @property
    def variables(self):
        return self.poly.variables

    def __str__(self):
        return str(self.poly)


# -- formatting ------------------------------------------------------


def _format_monomial(exps, variables):
    parts = []
    for name, e in zip(variables, exps):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_poly(p):
    """Canonical text form, terms in decreasing graded-reverse-lex order."""
    if p.is_zero():
        return "0"
    out = []
    for exps in sorted(p.terms, key=grevlex_key, reverse=True):
        c = p.terms[exps]
        sign = "-" if c < 0 else "+"
        a = abs(c)
        mono = _format_monomial(exps, p.variables)
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        out.append((sign, body))
    first_sign, first = out[0]
    text = ("-" if first_sign == "-" else "") + first
    for sign, body in out[1:]:
        text += f" {sign} {body}"
    return text


# -- parsing ---------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S))")


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        if m.group(1) is not None:
            tokens.append(("int", int(m.group(1)), m.start(1)))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), m.start(2)))
        elif m.group(3) is not None:
            ch = m.group(3)
            if ch not in "+-*^/()":
                raise ParseError(f"unexpected character {ch!r}", m.start(3))
            tokens.append((ch, ch, m.start(3)))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text, variables):
        self.tokens = _tokenize(text)
        self.i = 0
        self.variables = tuple(variables)

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind=None):
        tok = self.tokens[self.i]
        if kind is not None and tok[0] != kind:
            what = "end of input" if tok[0] == "end" else repr(tok[1])
            raise ParseError(f"expected {kind!r}, found {what}", tok[2])
        self.i += 1
        return tok

    def parse(self):
        if self.peek()[0] == "end":
            raise ParseError("empty expression", 0)
        result = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"unexpected token {tok[1]!r}", tok[2])
        return result

    def expr(self):
        # A leading sign is accepted on the first term.
        sign = 1
        if self.peek()[0] in "+-":
            sign = -1 if self.take()[0] == "-" else 1
        result = self.term() * sign
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            t = self.term()
            result = result + t if op == "+" else result - t
        return result

    def term(self):
        result = self.factor()
        while self.peek()[0] == "*":
            self.take()
            result = result * self.factor()
        return result

    def factor(self):
        base = self.base()
        if self.peek()[0] == "^":
            self.take()
            tok = self.peek()
            if tok[0] == "-":
                raise NegativeExponentError("negative exponent", tok[2])
            if tok[0] != "int":
                raise ParseError("exponent must be a non-negative integer", tok[2])
            self.take()
            return base ** tok[1]
        return base

    def base(self):
        tok = self.peek()
        kind = tok[0]
        if kind == "int":
            self.take()
            value = Fraction(tok[1])
            if self.peek()[0] == "/":
                self.take()
                den = self.peek()
                if den[0] != "int" or den[1] == 0:
                    raise ParseError("denominator must be a positive integer", den[2])
                self.take()
                value /= den[1]
            return Poly.constant(value, self.variables)
        if kind == "name":
            self.take()
            if tok[1] not in self.variables:
                raise UnknownVariableError(tok[1], tok[2])
            return Poly.var(tok[1], self.variables)
        if kind == "(":
            self.take()
            inner = self.expr()
            self.take(")")
            return inner
        what = "end of input" if kind == "end" else repr(tok[1])
        raise ParseError(f"unexpected {what}", tok[2])


def parse_poly(text, variables):
    """Parse ``text`` into a fully expanded :class:`Poly` over ``variables``.

    Grammar: ``+ - * ^`` and parentheses over integer or ``p/q`` literals
    and the given variable names. Multiplication must be explicit.
    """
    return _Parser(text, variables).parse()


def parse_homog(text, variables):
    return HomogPoly.from_poly(parse_poly(text, variables))


# -- calculus and substitutions ---------------------------------------


def _index(p, var):
    if isinstance(var, int):
        if not 0 <= var < p.nvars:
            raise IndexError(f"variable index {var} out of range")
        return var
    if var not in p.variables:
        raise UnknownVariableError(var)
    return p.variables.index(var)


def differentiate(p, var):
    """Formal partial derivative with respect to a variable name or index."""
    i = _index(p, var)
    terms = {}
    for exps, c in p.terms.items():
        e = exps[i]
        if e:
            new = exps[:i] + (e - 1,) + exps[i + 1:]
            terms[new] = c * e
    return Poly(p.variables, terms)


def gradient(p):
    return [differentiate(p, i) for i in range(p.nvars)]


def evaluate(p, point):
    point = [Fraction(a) for a in point]
    if len(point) != p.nvars:
        raise ContextMismatchError(f"point of length {len(point)} for {p.nvars} variables")
    total = Fraction(0)
    for exps, c in p.terms.items():
        term = c
        for a, e in zip(point, exps):
            if e:
                term *= a ** e
        total += term
    return total


def substitute(p, images):
    """Replace the i-th variable by ``images[i]`` (polys sharing one context)."""
    if len(images) != p.nvars:
        raise ContextMismatchError("one image per variable is required")
    target = images[0].variables if images else ()
    powers = [{0: Poly.constant(1, target)} for _ in images]

    def power(i, e):
        cache = powers[i]
        if e not in cache:
            cache[e] = power(i, e - 1) * images[i]
        return cache[e]

    result = Poly.zero(target)
    for exps, c in p.terms.items():
        term = Poly.constant(c, target)
        for i, e in enumerate(exps):
            if e:
                term = term * power(i, e)
        result = result + term
    return result


def translate(p, point):
    """Return ``p(x + point)``."""
    if len(point) != p.nvars:
        raise ContextMismatchError(f"point of length {len(point)} for {p.nvars} variables")
    images = [Poly.var(v, p.variables) + Fraction(a) for v, a in zip(p.variables, point)]
    return substitute(p, images)


def linear_change(p, matrix):
    """Return ``p(M x)`` for a square rational matrix ``M`` (list of rows)."""
    n = p.nvars
    xs = [Poly.var(v, p.variables) for v in p.variables]
    images = [
        reduce(lambda a, b: a + b, (xs[j] * Fraction(matrix[i][j]) for j in range(n)),
               Poly.zero(p.variables))
        for i in range(n)
    ]
    return substitute(p, images)


def dehomogenize(F, chart):
    """Set the chart variable to 1; the context loses that variable."""
    poly = F.poly if isinstance(F, HomogPoly) else F
    k = _index(poly, chart)
    variables = poly.variables[:k] + poly.variables[k + 1:]
    terms = {}
    for exps, c in poly.terms.items():
        e = exps[:k] + exps[k + 1:]
        terms[e] = terms.get(e, 0) + c
    return Poly(variables, terms)


def homogenize(p, degree, chart, name):
    """Inverse of :func:`dehomogenize`: insert ``name`` at position ``chart``."""
    if p.total_degree() > degree:
        raise NotHomogeneousError(f"degree {p.total_degree()} exceeds {degree}")
    variables = p.variables[:chart] + (name,) + p.variables[chart:]
    terms = {}
    for exps, c in p.terms.items():
        terms[exps[:chart] + (degree - sum(exps),) + exps[chart:]] = c
    return HomogPoly(Poly(variables, terms), degree)


def euler_check(F):
    """True iff sum_i x_i dF/dx_i == deg(F) * F."""
    poly = F.poly
    acc = Poly.zero(poly.variables)
    for i, v in enumerate(poly.variables):
        acc = acc + Poly.var(v, poly.variables) * differentiate(poly, i)
    return acc == poly * F.degree
