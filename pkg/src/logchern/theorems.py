"""Both sides of the Gauss–Bonnet and Poincaré–Hopf type identities for
complements of divisors in P^n, computed by independent routes.

Every report carries a ledger of intermediate quantities and the route that
produced each one. Where a statement and its derivation use
different sign conventions, each convention is evaluated as a named variant;
``proof-sign`` is the default.
"""

from __future__ import annotations

from dataclasses import dataclass
from dataclasses import field as dc_field
from fractions import Fraction

from . import chow, indices, milnor
from .chow import Decomposition
from .errors import (
    ChartFailureError,
    IncompleteZerosError,
    InputError,
    MissingDataError,
    NotLogarithmicError,
    RouteDisagreementError,
    SingularitiesAtInfinityError,
)

PROOF_SIGN = "proof-sign"
STATEMENT_SIGN = "statement-sign"


@dataclass
class LedgerEntry:
    quantity: str
    value: Fraction | int
    route: str


@dataclass
class ProblemSpec:
    n: int
    divisors: dict
    decomposition: tuple | None = None
    field: indices.VectorFieldPn | None = None
    singular_points: dict = dc_field(default_factory=dict)
    chart: int | None = None
    allow_change: bool = False
    probes: bool = False
    target: str | None = None
    name: str = ""

    def __post_init__(self):
        for D in self.divisors.values():
            if D.n != self.n:
                raise InputError(f"divisor {D.name} does not live on P^{self.n}")
        if self.decomposition is not None:
            for name in self.decomposition:
                if name not in self.divisors:
                    raise InputError(f"decomposition names unknown divisor {name!r}")
        if self.field is not None and self.field.n != self.n:
            raise InputError("vector field matrix must be (n+1) x (n+1)")

    @property
    def warnings(self):
        if self.n < 3:
            return [f"n = {self.n} < 3: outside the hypotheses of the singular-divisor theorems"]
        return []

    def decomposition_pair(self):
        if self.decomposition is None:
            raise MissingDataError("this formula needs a decomposition D = D1 ∪ D2")
        a, b = self.decomposition
        return Decomposition(self.divisors[a], self.divisors[b])

    def single_divisor(self):
        if self.target is not None:
            return self.divisors[self.target]
        if not self.divisors:
            raise MissingDataError("no divisor given")
        return next(iter(self.divisors.values()))


@dataclass
class VerificationReport:
    formula: str
    lhs: Fraction | int
    rhs_variants: dict
    default_variant: str
    ledger: list = dc_field(default_factory=list)
    notes: list = dc_field(default_factory=list)

    @property
    def residuals(self):
        return {k: v - self.lhs for k, v in self.rhs_variants.items()}

    @property
    def verdicts(self):
        return {k: ("pass" if r == 0 else "fail") for k, r in self.residuals.items()}

    @property
    def passed(self):
        return self.verdicts[self.default_variant] == "pass"


# -- Euler characteristics -------------------------------------------------


def euler_projective_space(n):
    """chi(P^n) as the degree of c_n(T P^n)."""
    return chow.require_integer(chow.integrate(chow.tangent_class(n)), "chi(P^n)")


def euler_hypersurface(D, milnor_total):
    """chi(D) = int_D c_{n-1}(T - [D]) - (-1)^(n-1) * (total Milnor number)."""
    n = D.n
    return chow.chern_integral(n, (D.degree,)) - (-1) ** (n - 1) * milnor_total


def euler_intersection_curve(dec, milnor_total_C):
    """chi(C) = int_C c_{n-2}(T - [D1] - [D2]) - (-1)^(n-2) * mu(C)."""
    n = dec.n
    return chow.chern_integral(n, dec.degrees) - (-1) ** (n - 2) * milnor_total_C


def _route_name(route):
    if route is None:
        return "certified points only"
    text = f"global generalized-kernel route, chart {route.chart}"
    if route.change is not None:
        text += ", after a linear change of coordinates"
    return text


def _milnor_with_points(name, points, certify, local_only, global_only):
    ledger = []
    if points is None:
        route = global_only()
        ledger.append(LedgerEntry(f"mu({name})", route.total, _route_name(route)))
        return route.total, ledger
    try:
        report = certify()
    except (ChartFailureError, SingularitiesAtInfinityError) as exc:
        certs = local_only()
        total = sum(c.local_milnor for c in certs)
        ledger.append(LedgerEntry(f"mu({name})", total,
                                  f"certified points only; global route unavailable ({exc.code})"))
        return total, ledger
    local = sum(c.local_milnor for c in report.per_point)
    ledger.append(LedgerEntry(f"mu({name})", report.total, _route_name(report.route)))
    ledger.append(LedgerEntry(
        f"mu({name}) at certified points", local,
        "local standard basis, "
        + ("complete" if report.certified_complete else "INCOMPLETE: differs from global total"),
    ))
    return report.total, ledger


def divisor_milnor(spec, D):
    """Total Milnor number of D with its ledger entries."""
    points = spec.singular_points.get(D.name)
    return _milnor_with_points(
        D.name, points,
        lambda: milnor.certify_points(D.F, points, spec.chart, spec.allow_change),
        lambda: milnor.local_certificates(D.F, points),
        lambda: milnor.milnor_total(D.F, spec.chart, spec.allow_change),
    )


def intersection_milnor(spec, dec, name="C"):
    """Total Milnor number of C = D1 ∩ D2 (Lê–Greuel) with ledger entries."""
    points = spec.singular_points.get(name)
    F1, F2 = dec.D1.F, dec.D2.F
    return _milnor_with_points(
        name, points,
        lambda: milnor.certify_icis_points(F1, F2, points, spec.chart, spec.allow_change),
        lambda: milnor.local_icis_certificates(F1, F2, points),
        lambda: milnor.icis_milnor_total(F1, F2, spec.chart, spec.allow_change),
    )


@dataclass
class _TwoDivisorData:
    dec: Decomposition
    mu1: int
    mu2: int
    muC: int
    chi_pn: int
    chi1: int
    chi2: int
    chiC: int
    int_pn: int
    int1: int
    int2: int
    intC: int
    lhs: int
    ledger: list

    @property
    def chi_inclusion_exclusion(self):
        return self.chi_pn - self.chi1 - self.chi2 + self.chiC


def _two_divisor_data(spec):
    dec = spec.decomposition_pair()
    n = dec.n
    ledger = []
    mu1, entries = divisor_milnor(spec, dec.D1)
    ledger += entries
    mu2, entries = divisor_milnor(spec, dec.D2)
    ledger += entries
    muC, entries = intersection_milnor(spec, dec)
    ledger += entries
    int_pn = euler_projective_space(n)
    int1 = chow.chern_integral(n, (dec.D1.degree,))
    int2 = chow.chern_integral(n, (dec.D2.degree,))
    intC = chow.chern_integral(n, dec.degrees)
    lhs = chow.require_integer(chow.integrate(chow.log_chern_class(n, dec.degrees)),
                               "int c_n(Omega^1(log D))")
    chi1 = euler_hypersurface(dec.D1, mu1)
    chi2 = euler_hypersurface(dec.D2, mu2)
    chiC = euler_intersection_curve(dec, muC)
    names = (dec.D1.name, dec.D2.name)
    ledger += [
        LedgerEntry("int c_n(Omega^1(log D))", lhs,
                    "h^n coefficient of (1-h)^(n+1)/((1-d1 h)(1-d2 h))"),
        LedgerEntry("int c_n(T P^n) = chi(P^n)", int_pn, "h^n coefficient of (1+h)^(n+1)"),
        LedgerEntry(f"int_{names[0]} c_(n-1)(T - [{names[0]}])", int1, "Chow ring"),
        LedgerEntry(f"int_{names[1]} c_(n-1)(T - [{names[1]}])", int2, "Chow ring"),
        LedgerEntry("int_C c_(n-2)(T - [D1] - [D2])", intC, "Chow ring"),
        LedgerEntry(f"chi({names[0]})", chi1, "Chern integral minus Milnor correction"),
        LedgerEntry(f"chi({names[1]})", chi2, "Chern integral minus Milnor correction"),
        LedgerEntry("chi(C)", chiC, "Chern integral minus Milnor correction"),
    ]
    return _TwoDivisorData(dec, mu1, mu2, muC, int_pn, chi1, chi2, chiC,
                           int_pn, int1, int2, intC, lhs, ledger)


def euler_complement(spec):
    """chi(P^n minus D) by the log-Chern route and by inclusion–exclusion.

    Returns ``(value, ledger)``; raises :class:`RouteDisagreementError` when
    the two routes differ.
    """
    n = spec.n
    if spec.decomposition is not None:
        data = _two_divisor_data(spec)
        ledger = list(data.ledger)
        via_log = (-1) ** n * (data.lhs - data.mu1 - data.mu2 - data.muC)
        via_ie = data.chi_inclusion_exclusion
    else:
        D = spec.single_divisor()
        mu, ledger = divisor_milnor(spec, D)
        lhs = chow.require_integer(chow.integrate(chow.log_chern_class(n, [D.degree])),
                                   "int c_n(Omega^1(log D))")
        chi_pn = euler_projective_space(n)
        chi_D = euler_hypersurface(D, mu)
        ledger += [
            LedgerEntry("int c_n(Omega^1(log D))", lhs,
                        "h^n coefficient of (1-h)^(n+1)/(1-d h)"),
            LedgerEntry("chi(P^n)", chi_pn, "h^n coefficient of (1+h)^(n+1)"),
            LedgerEntry(f"chi({D.name})", chi_D, "Chern integral minus Milnor correction"),
        ]
        via_log = (-1) ** n * (lhs - mu)
        via_ie = chi_pn - chi_D
    ledger.append(LedgerEntry("chi(complement)", via_log, "log-Chern route"))
    ledger.append(LedgerEntry("chi(complement)", via_ie, "inclusion-exclusion route"))
    if via_log != via_ie:
        raise RouteDisagreementError(
            "Euler characteristic routes disagree",
            {"log-chern": via_log, "inclusion-exclusion": via_ie},
        )
    return via_ie, ledger


def verify_gauss_bonnet(spec):
    """Two-divisor Gauss–Bonnet identity with both signs of the mu(C) term."""
    data = _two_divisor_data(spec)
    n = spec.n
    chi = data.chi_inclusion_exclusion
    base = (-1) ** n * chi + data.mu1 + data.mu2
    variants = {
        PROOF_SIGN: base + data.muC,
        STATEMENT_SIGN: base - data.muC,
        "chern-integrals-bracketed":
            (-1) ** n * (data.int_pn - data.int1 - data.int2 + data.intC),
        "chern-integrals-outside":
            (-1) ** n * (data.int_pn - data.int1 - data.int2) + data.intC,
    }
    ledger = data.ledger + [
        LedgerEntry("chi(complement)", chi, "inclusion-exclusion route"),
    ]
    report = VerificationReport("gauss-bonnet", data.lhs, variants, PROOF_SIGN, ledger,
                                list(spec.warnings))
    if report.verdicts[STATEMENT_SIGN] != report.verdicts[PROOF_SIGN]:
        report.notes.append(
            f"sign discrepancy: with '- mu(C)' the right side is {variants[STATEMENT_SIGN]}, "
            f"with '+ mu(C)' it is {variants[PROOF_SIGN]}; the left side is {data.lhs}"
        )
    elif data.muC == 0:
        report.notes.append("mu(C) = 0: the two sign conventions cannot be distinguished")
    return report


def _require_field(spec, divisors):
    v = spec.field
    if v is None:
        raise MissingDataError("this formula needs a vector field")
    for D in divisors:
        if not indices.is_logarithmic(v, D):
            raise NotLogarithmicError(f"the vector field is not tangent to {D.name}")
    return v


def verify_poincare_hopf(spec):
    """Poincaré–Hopf type identity: chi(complement) from PH and GSV totals."""
    n = spec.n
    two = spec.decomposition is not None
    if two:
        dec = spec.decomposition_pair()
        divisors = (dec.D1, dec.D2)
    else:
        divisors = (spec.single_divisor(),)
    v = _require_field(spec, divisors)
    zeros, complete = indices.zeros_of_field(v)
    if not complete:
        raise IncompleteZerosError("the field has irrational zeros; PH total cannot be certified")
    ph = [(p, indices.ph_index_at(v, p)) for p in zeros]
    ph_total = sum(i for _, i in ph)
    chi, ledger = euler_complement(spec)
    ledger = list(ledger)
    for p, i in ph:
        ledger.append(LedgerEntry(f"PH at [{':'.join(map(str, p))}]", i,
                                  "local intersection multiplicity"))
    ledger.append(LedgerEntry("PH total", ph_total, "sum over zeros"))
    ledger.append(LedgerEntry("chi(P^n)", euler_projective_space(n), "Chern integral"))
    notes = list(spec.warnings)
    if ph_total != euler_projective_space(n):
        notes.append(f"PH total {ph_total} differs from chi(P^n)")
    sign = (-1) ** (n - 1)
    if two:
        gsv1 = indices.gsv_total(v, dec.D1)
        gsv2 = indices.gsv_total(v, dec.D2)
        gsvC = indices.gsv_total(v, dec)
        mu1, _ = divisor_milnor(spec, dec.D1)
        mu2, _ = divisor_milnor(spec, dec.D2)
        muC, _ = intersection_milnor(spec, dec)
        ledger += [
            LedgerEntry(f"GSV total along {dec.D1.name}", gsv1, "Chern integral"),
            LedgerEntry(f"GSV total along {dec.D2.name}", gsv2, "Chern integral"),
            LedgerEntry("GSV total along C", gsvC, "Chern integral"),
        ]
        base = ph_total - gsv1 - gsv2 + gsvC
        variants = {
            PROOF_SIGN: base + sign * (mu1 + mu2 + muC),
            STATEMENT_SIGN: base + sign * (mu1 + mu2 - muC),
        }
    else:
        D = divisors[0]
        gsv = indices.gsv_total(v, D)
        mu, _ = divisor_milnor(spec, D)
        ledger.append(LedgerEntry(f"GSV total along {D.name}", gsv, "Chern integral"))
        variants = {PROOF_SIGN: ph_total - gsv + sign * mu}
        if all(indices.is_nondegenerate_zero(v, p) for p in zeros):
            smooth = [p for p in zeros
                      if indices.on_divisor(D, p) and not indices.is_singular_point(D, p)]
            residual = indices.gsv_residual_at_singular(v, D, smooth)
            ph_off = sum(i for p, i in ph if p not in smooth)
            ledger.append(LedgerEntry(f"GSV at Sing({D.name})", residual,
                                      "GSV total minus PH at zeros on the smooth part"))
            ledger.append(LedgerEntry(f"PH off the smooth part of {D.name}", ph_off,
                                      "sum over zeros"))
            variants["nondegenerate-proof-sign"] = ph_off - residual + sign * mu
            variants["nondegenerate-statement-sign"] = ph_off - (residual + sign * mu)
    report = VerificationReport("poincare-hopf", chi, variants, PROOF_SIGN, ledger, notes)
    failing = [k for k, verdict in report.verdicts.items() if verdict == "fail"]
    if failing:
        report.notes.append("variants with nonzero residual: " + ", ".join(sorted(failing)))
    return report


def nsa_baseline(n, degrees):
    """Smooth normal crossings case: int c_n(Omega^1(log D)) = (-1)^n chi."""
    degrees = list(degrees)
    lhs = chow.require_integer(chow.integrate(chow.log_chern_class_snc(n, degrees)),
                               "int c_n(Omega^1(log D))")
    chi = chow.snc_complement_euler(n, degrees)
    ledger = [
        LedgerEntry("int c_n(Omega^1(log D))", lhs,
                    "h^n coefficient of (1-h)^(n+1)/prod(1-d_j h)"),
        LedgerEntry("chi(complement)", chi,
                    "inclusion-exclusion over smooth complete intersections"),
    ]
    notes = ["smoothness and normal crossings are assumed, not verified"]
    return VerificationReport("nsa", lhs, {"default": (-1) ** n * chi}, "default", ledger, notes)


def sigma_probe(n, d1, d2):
    """Direct h^n coefficient and the two symmetric-function expressions."""
    direct = chow.integrate(chow.log_chern_class(n, [d1, d2]))
    args = (d1 - 1, d2 - 1)
    derived = chow.complete_symmetric(n, args)
    summed = sum(chow.complete_symmetric(n - i, args) for i in range(n + 1))
    return {"direct": direct, "sigma_n": derived, "signed-sigma-sum": (-1) ** n * summed}


PROBES = ((2, 1, 1), (3, 1, 2), (3, 2, 3), (2, 2, 3))


def corollary_pn_report(spec):
    """Closed forms on P^n against the ground-truth Euler characteristic."""
    n = spec.n
    chi, ledger = euler_complement(spec)
    ledger = list(ledger)
    notes = list(spec.warnings)
    if spec.decomposition is None:
        D = spec.single_divisor()
        mu, _ = divisor_milnor(spec, D)
        d = D.degree
        closed = sum((-1) ** i * (d - 1) ** i for i in range(n + 1))
        ledger.append(LedgerEntry("sum_i (-1)^i (d-1)^i", closed, "closed form"))
        ledger.append(LedgerEntry("c_n(T (x) O(-d))", chow.twisted_top_chern(n, d),
                                  "sum_i (1-d)^i, cross-checked by binomial expansion"))
        variants = {"closed-form": closed + (-1) ** (n + 1) * mu}
        default = "closed-form"
    else:
        dec = spec.decomposition_pair()
        d1, d2 = dec.degrees
        mu1, _ = divisor_milnor(spec, dec.D1)
        mu2, _ = divisor_milnor(spec, dec.D2)
        muC, _ = intersection_milnor(spec, dec)
        args = (d1 - 1, d2 - 1)
        sigma_n = chow.complete_symmetric(n, args)
        sigma_sum = sum(chow.complete_symmetric(n - i, args) for i in range(n + 1))
        ledger.append(LedgerEntry("sigma_n(d1-1, d2-1)", sigma_n, "complete symmetric function"))
        ledger.append(LedgerEntry("sum_i sigma_(n-i)(d1-1, d2-1)", sigma_sum,
                                  "complete symmetric functions"))
        sign = (-1) ** (n + 1)
        variants = {
            "sigma-n-proof-sign": (-1) ** n * sigma_n + sign * (mu1 + mu2 + muC),
            "sigma-sum-statement-sign": (-1) ** n * sigma_sum + sign * (mu1 + mu2 - muC),
        }
        default = "sigma-n-proof-sign"
    report = VerificationReport("corollary-pn", chi, variants, default, ledger, notes)
    for k, verdict in sorted(report.verdicts.items()):
        if verdict == "fail":
            report.notes.append(f"{k} disagrees with the ground truth {chi}: {variants[k]}")
    if spec.probes:
        for pn, a, b in PROBES:
            values = sigma_probe(pn, a, b)
            report.ledger.append(LedgerEntry(
                f"probe n={pn} d=({a},{b})", values["direct"],
                f"direct; sigma_n = {values['sigma_n']}, "
                f"signed sigma sum = {values['signed-sigma-sum']}",
            ))
    return report


FORMULAS = {
    "gauss-bonnet": verify_gauss_bonnet,
    "poincare-hopf": verify_poincare_hopf,
    "nsa": lambda spec: nsa_baseline(spec.n, [D.degree for D in _nsa_divisors(spec)]),
    "corollary-pn": corollary_pn_report,
}


def _nsa_divisors(spec):
    if spec.decomposition is not None:
        return [spec.divisors[k] for k in spec.decomposition]
    return list(spec.divisors.values())


def verify(spec, formula):
    try:
        fn = FORMULAS[formula]
    except KeyError:
        raise InputError(f"unknown formula {formula!r}; choose from {sorted(FORMULAS)}") \
            from None
    return fn(spec)
