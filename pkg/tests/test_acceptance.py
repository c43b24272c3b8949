"""Acceptance criteria, each checked exactly (tolerance 0).

Every test carries a ``criterion`` marker; the terminal summary prints one
PASS/FAIL line per criterion.
"""

import json
import os
import random
import subprocess
import sys
import time
from fractions import Fraction
from itertools import permutations
from math import comb

import pytest

from logchern import chow, gb, indices, milnor, theorems
from logchern.cli import load_problem
from logchern.indices import VectorFieldPn
from logchern.polyarith import HomogPoly, dehomogenize, gradient, linear_change, parse_poly

from conftest import FIXTURES

FIXTURE_NAMES = sorted(p.stem for p in FIXTURES.glob("*.json"))
FORMULAS = sorted(theorems.FORMULAS)


# -- 1 ------------------------------------------------------------------------


@pytest.mark.criterion(1, "Gauss-Bonnet on P^n: int c_n(T P^n) = n+1, n = 1..8")
def test_c1_gauss_bonnet_pn(criterion):
    for n in range(1, 9):
        assert chow.integrate(chow.tangent_class(n)) == n + 1


# -- 2 ------------------------------------------------------------------------


@pytest.mark.criterion(2, "smooth normal crossings baseline")
def test_c2_nsa_baseline(criterion):
    report = theorems.nsa_baseline(3, [1, 2])
    chi = next(e.value for e in report.ledger if e.quantity == "chi(complement)")
    assert (report.lhs, chi, report.rhs_variants["default"]) == (1, -1, 1)
    report = theorems.nsa_baseline(2, [1, 1])
    assert report.lhs == 0 == report.rhs_variants["default"]


# -- 3 ------------------------------------------------------------------------


@pytest.mark.criterion(3, "single-divisor complements: quadric 0, cone 1, Cayley -1")
@pytest.mark.parametrize("name,chi", [
    ("smooth_quadric", 0), ("quadric_cone", 1), ("cayley_cubic", -1),
])
def test_c3_single_divisor_complements(criterion, fixture_path, name, chi):
    spec = load_problem(fixture_path(name))
    value, ledger = theorems.euler_complement(spec)  # raises if the routes disagree
    assert value == chi
    assert theorems.corollary_pn_report(spec).passed
    if name == "cayley_cubic":
        F = spec.single_divisor().F
        report = milnor.certify_points(F, spec.singular_points["D"], allow_change=True)
        assert report.total == 4
        assert sum(c.local_milnor for c in report.per_point) == 4


# -- 4 ------------------------------------------------------------------------


@pytest.mark.criterion(4, "two-divisor identity: proof sign passes, statement sign reported")
def test_c4_sign_adjudication(criterion, fixture_path):
    report = theorems.verify_gauss_bonnet(load_problem(fixture_path("hyperplane_cubic_node")))
    assert report.lhs == 8
    assert report.rhs_variants[theorems.PROOF_SIGN] == 8
    assert report.verdicts[theorems.PROOF_SIGN] == "pass"
    assert report.rhs_variants[theorems.STATEMENT_SIGN] == 6
    assert report.verdicts[theorems.STATEMENT_SIGN] == "fail"
    assert any("sign discrepancy" in note for note in report.notes)


# -- 5 ------------------------------------------------------------------------


@pytest.mark.criterion(5, "Poincare-Hopf type identity on the quadric cone")
def test_c5_poincare_hopf_cone(criterion, fixture_path):
    spec = load_problem(fixture_path("quadric_cone"))
    D = spec.single_divisor()
    v = spec.field
    assert indices.derivative_along(v, D.F) == D.F.poly * 2
    assert gb.ideal_membership(indices.derivative_along(v, D.F), [D.F.poly])
    report = theorems.verify_poincare_hopf(spec)
    values = {e.quantity: e.value for e in report.ledger}
    assert values["PH total"] == 4
    assert values["GSV total along D"] == 4
    assert values["mu(D)"] == 1
    assert report.lhs == 1
    assert report.rhs_variants[theorems.PROOF_SIGN] == 1 and report.passed


# -- 6 ------------------------------------------------------------------------


CERTIFIED = [
    (name, key)
    for name in FIXTURE_NAMES
    for key in sorted(json.loads((FIXTURES / f"{name}.json").read_text())
                      .get("singular_points", {}))
]


@pytest.mark.criterion(6, "Milnor routes agree; A_k matches the weighted oracle")
@pytest.mark.parametrize("name,key", CERTIFIED)
def test_c6_route_equivalence(criterion, fixture_path, name, key):
    spec = load_problem(fixture_path(name))
    points = spec.singular_points[key]
    if key == "C":
        dec = spec.decomposition_pair()
        report = milnor.certify_icis_points(dec.D1.F, dec.D2.F, points,
                                            spec.chart, spec.allow_change)
    else:
        report = milnor.certify_points(spec.divisors[key].F, points,
                                       spec.chart, spec.allow_change)
    assert report.certified_complete
    assert sum(c.local_milnor for c in report.per_point) == report.total


@pytest.mark.criterion(6, "Milnor routes agree; A_k matches the weighted oracle")
@pytest.mark.parametrize("k", range(1, 6))
def test_c6_a_k_oracle(criterion, k):
    variables = ("x", "y", "z")
    f = parse_poly(f"x^{k + 1} + y^2 + z^2", variables)
    oracle = milnor.milnor_orlik_oracle([Fraction(1, k + 1), Fraction(1, 2), Fraction(1, 2)], 1)
    assert milnor.local_milnor(f, (0, 0, 0)) == oracle == k
    # the global route sees the same single singular point
    assert milnor.affine_milnor_sum(f)[0] == k


# -- 7 ------------------------------------------------------------------------


def _series_top(n, d1, d2=None):
    """h^n coefficient of (1-h)^(n+1) / prod (1 - d h), by explicit
    truncated power series with integer lists."""
    num = [comb(n + 1, i) * (-1) ** i for i in range(n + 1)]
    for d in (d1, d2):
        if d is None:
            continue
        geo = [d ** i for i in range(n + 1)]
        num = [sum(num[j] * geo[i - j] for j in range(i + 1)) for i in range(n + 1)]
    return num[n]


def _sigma(k, a, b):
    return sum(a ** i * b ** (k - i) for i in range(k + 1))


@pytest.mark.criterion(7, "sigma identity and single-divisor coefficient, 2<=n<=8, d<=9")
def test_c7_sigma_identity(criterion):
    for n in range(2, 9):
        for d1 in range(1, 10):
            for d2 in range(1, 10):
                top = chow.integrate(chow.log_chern_class(n, [d1, d2]))
                assert top == _series_top(n, d1, d2) == _sigma(n, d1 - 1, d2 - 1)


@pytest.mark.criterion(7, "sigma identity and single-divisor coefficient, 2<=n<=8, d<=9")
def test_c7_single_divisor(criterion):
    for n in range(2, 9):
        for d in range(1, 10):
            closed = sum((1 - d) ** i for i in range(n + 1))
            # c_n(T (x) O(-d)) carries the closed form; the log class differs by (-1)^n
            assert chow.twisted_tangent_class(n, d).top() == closed
            assert chow.integrate(chow.log_chern_class(n, [d])) == _series_top(n, d)
            assert _series_top(n, d) == (-1) ** n * closed


# -- 8 ------------------------------------------------------------------------


def _unimodular_pair(rng, size):
    """A random integer matrix of determinant 1 and its inverse."""
    m = [[Fraction(int(i == j)) for j in range(size)] for i in range(size)]
    inv = [row[:] for row in m]
    for _ in range(2 * size):
        i, j = rng.sample(range(size), 2)
        c = rng.choice([-2, -1, 1, 2])
        m = [[m[r][s] + (c * m[j][s] if r == i else 0) for s in range(size)]
             for r in range(size)]
        # E^{-1} subtracts the row operation on the right
        inv = [[inv[r][s] - (c * inv[r][i] if s == j else 0) for s in range(size)]
               for r in range(size)]
    return m, inv


def _apply(matrix, point):
    return tuple(sum(a * p for a, p in zip(row, point)) for row in matrix)


@pytest.mark.criterion(8, "invariance: coordinate changes, field shifts, generator order")
@pytest.mark.parametrize("name,key", CERTIFIED)
def test_c8_milnor_invariance(criterion, fixture_path, name, key):
    rng = random.Random(f"{name}/{key}")
    spec = load_problem(fixture_path(name))
    points = spec.singular_points[key]
    if key == "C":
        dec = spec.decomposition_pair()
        forms = [dec.D1.F, dec.D2.F]
    else:
        forms = [spec.divisors[key].F]

    def local_values(Fs, pts):
        if len(Fs) == 2:
            return [c.local_milnor for c in milnor.local_icis_certificates(*Fs, pts)]
        return [c.local_milnor for c in milnor.local_certificates(Fs[0], pts)]

    reference = local_values(forms, points)
    for _ in range(20):
        m, inv = _unimodular_pair(rng, spec.n + 1)
        assert [[sum(a * b for a, b in zip(r, c)) for c in zip(*inv)] for r in m] == \
            [[int(i == j) for j in range(spec.n + 1)] for i in range(spec.n + 1)]
        # G(x) = F(M x) vanishes at M^{-1} p
        changed = [HomogPoly(linear_change(F.poly, m), F.degree) for F in forms]
        moved = [_apply(inv, p) for p in points]
        assert local_values(changed, moved) == reference


@pytest.mark.criterion(8, "invariance: coordinate changes, field shifts, generator order")
def test_c8_logarithmic_shift_invariance(criterion, fixture_path):
    rng = random.Random(8)
    checked = 0
    for name in FIXTURE_NAMES:
        spec = load_problem(fixture_path(name))
        fields = [spec.field] if spec.field is not None else []
        n = spec.n
        fields.append(VectorFieldPn(tuple(
            tuple(Fraction(rng.randint(-3, 3)) for _ in range(n + 1)) for _ in range(n + 1))))
        for v in fields:
            for D in spec.divisors.values():
                expected = indices.is_logarithmic(v, D)
                for c in (-2, Fraction(1, 3), 5):
                    assert indices.is_logarithmic(v.shifted(c), D) == expected
                    checked += 1
    assert checked > 0


@pytest.mark.criterion(8, "invariance: coordinate changes, field shifts, generator order")
def test_c8_groebner_permutation_invariance(criterion, fixture_path):
    for name in FIXTURE_NAMES:
        spec = load_problem(fixture_path(name))
        for D in spec.divisors.values():
            f = dehomogenize(D.F, spec.n)
            gens = [g for g in gradient(f) if not g.is_zero()] + [f]
            ref = gb.groebner(gens).generators
            for perm in permutations(gens):
                assert gb.groebner(list(perm)).generators == ref


# -- 9 ------------------------------------------------------------------------


def _verify_json(path, formula, seed):
    env = dict(os.environ, PYTHONHASHSEED=str(seed))
    proc = subprocess.run(
        [sys.executable, "-m", "logchern", "verify", str(path), formula, "--json"],
        capture_output=True, check=False, env=env,
    )
    return proc.returncode, proc.stdout


@pytest.mark.criterion(9, "determinism: byte-identical verify --json reports")
@pytest.mark.parametrize("name", FIXTURE_NAMES)
def test_c9_determinism(criterion, fixture_path, name):
    for formula in FORMULAS:
        start = time.perf_counter()
        first = _verify_json(fixture_path(name), formula, 1)
        elapsed = time.perf_counter() - start
        second = _verify_json(fixture_path(name), formula, 2)
        assert first == second
        assert first[1]  # every run, error or not, emits a JSON document
        json.loads(first[1])
        assert elapsed < 10
