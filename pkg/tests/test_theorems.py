import pytest

from logchern import theorems
from logchern.chow import DivisorOnPn
from logchern.cli import load_problem
from logchern.errors import MissingDataError, NotLogarithmicError
from logchern.indices import VectorFieldPn
from logchern.polyarith import parse_homog

P2 = ("x0", "x1", "x2")


def test_euler_of_projective_space():
    for n in range(1, 9):
        assert theorems.euler_projective_space(n) == n + 1


def test_hypersurface_euler_characteristics(fixture_path):
    cases = {"smooth_quadric": 4, "quadric_cone": 3, "cayley_cubic": 5}
    for name, chi in cases.items():
        spec = load_problem(fixture_path(name))
        D = spec.single_divisor()
        mu, _ = theorems.divisor_milnor(spec, D)
        assert theorems.euler_hypersurface(D, mu) == chi


def test_intersection_curve_euler_characteristics(fixture_path):
    cases = {"plane_quadric_transverse": 2, "hyperplane_cubic_node": 1}
    for name, chi in cases.items():
        spec = load_problem(fixture_path(name))
        dec = spec.decomposition_pair()
        mu, _ = theorems.intersection_milnor(spec, dec)
        assert theorems.euler_intersection_curve(dec, mu) == chi


def test_two_hyperplanes_meet_in_a_line():
    V = ("x0", "x1", "x2", "x3")
    spec = theorems.ProblemSpec(3, {
        "A": DivisorOnPn("A", parse_homog("x0", V)),
        "B": DivisorOnPn("B", parse_homog("x1", V)),
    }, decomposition=("A", "B"))
    dec = spec.decomposition_pair()
    assert theorems.euler_intersection_curve(dec, 0) == 2


@pytest.mark.parametrize("name,chi", [
    ("smooth_quadric", 0), ("quadric_cone", 1), ("cayley_cubic", -1),
    ("plane_quadric_transverse", -1), ("hyperplane_cubic_node", -7),
    ("plane_cone_field", 0), ("two_lines_p2", 0), ("three_lines_p2", 0),
])
def test_euler_complement_routes_agree(fixture_path, name, chi):
    value, ledger = theorems.euler_complement(load_problem(fixture_path(name)))
    assert value == chi
    routes = {e.route: e.value for e in ledger if e.quantity == "chi(complement)"}
    assert routes == {"log-Chern route": chi, "inclusion-exclusion route": chi}


def test_gauss_bonnet_sign_adjudication(fixture_path):
    report = theorems.verify_gauss_bonnet(load_problem(fixture_path("hyperplane_cubic_node")))
    assert report.lhs == 8
    assert report.rhs_variants["proof-sign"] == 8
    assert report.rhs_variants["statement-sign"] == 6
    assert report.verdicts == {
        "proof-sign": "pass", "statement-sign": "fail",
        "chern-integrals-bracketed": "pass", "chern-integrals-outside": "pass",
    }
    assert report.passed
    assert any("sign discrepancy" in note for note in report.notes)


def test_gauss_bonnet_transverse_signs_indistinguishable(fixture_path):
    report = theorems.verify_gauss_bonnet(load_problem(fixture_path("plane_quadric_transverse")))
    assert report.lhs == 1
    assert report.rhs_variants["proof-sign"] == report.rhs_variants["statement-sign"] == 1
    # with the C-term outside the bracket the Chern integrals do not balance
    assert report.verdicts["chern-integrals-outside"] == "fail"


def test_decomposition_invariance(fixture_path):
    chis = set()
    for name in ("three_lines_p2", "three_lines_p2_swapped"):
        spec = load_problem(fixture_path(name))
        report = theorems.verify_gauss_bonnet(spec)
        assert report.passed
        chis.add(next(e.value for e in report.ledger if e.quantity == "chi(complement)"))
        spec.decomposition = tuple(reversed(spec.decomposition))
        swapped = theorems.verify_gauss_bonnet(spec)
        assert swapped.lhs == report.lhs and swapped.rhs_variants == report.rhs_variants
    assert chis == {0}


def test_smooth_degeneration_matches_nsa(fixture_path):
    spec = load_problem(fixture_path("plane_quadric_transverse"))
    gb_report = theorems.verify_gauss_bonnet(spec)
    nsa = theorems.nsa_baseline(3, [1, 2])
    assert gb_report.lhs == nsa.lhs == 1
    assert gb_report.rhs_variants["proof-sign"] == nsa.rhs_variants["default"]


def test_nsa_examples():
    assert theorems.nsa_baseline(3, [1, 2]).passed
    report = theorems.nsa_baseline(2, [1, 1])
    assert report.lhs == 0 and report.passed


def test_poincare_hopf_cone(fixture_path):
    report = theorems.verify_poincare_hopf(load_problem(fixture_path("quadric_cone")))
    assert report.lhs == 1 and report.passed
    values = {e.quantity: e.value for e in report.ledger}
    assert values["PH total"] == 4
    assert values["GSV total along D"] == 4
    assert values["GSV at Sing(D)"] == 2
    # the non-degenerate formula with the statement grouping fails here
    assert report.verdicts["nondegenerate-statement-sign"] == "fail"
    assert report.verdicts["nondegenerate-proof-sign"] == "pass"


def test_poincare_hopf_smooth_quadric(fixture_path):
    report = theorems.verify_poincare_hopf(load_problem(fixture_path("smooth_quadric_field")))
    assert report.lhs == 0 and report.passed


def test_poincare_hopf_two_divisors(fixture_path):
    report = theorems.verify_poincare_hopf(load_problem(fixture_path("plane_cone_field")))
    assert report.lhs == 0 and report.passed


def test_poincare_hopf_preconditions(fixture_path):
    spec = load_problem(fixture_path("quadric_cone"))
    spec.field = VectorFieldPn(((1, 0, 0, 0), (0, 0, 0, 0), (0, 0, 0, 0), (0, 0, 0, 0)))
    with pytest.raises(NotLogarithmicError):
        theorems.verify_poincare_hopf(spec)
    spec.field = None
    with pytest.raises(MissingDataError):
        theorems.verify_poincare_hopf(spec)


@pytest.mark.parametrize("name,chi", [
    ("smooth_quadric", 0), ("cayley_cubic", -1), ("quadric_cone", 1),
    ("plane_quadric_transverse", -1), ("hyperplane_cubic_node", -7),
])
def test_corollary_pn(fixture_path, name, chi):
    report = theorems.corollary_pn_report(load_problem(fixture_path(name)))
    assert report.lhs == chi and report.passed


def test_corollary_pn_flags_summed_sigma(fixture_path):
    report = theorems.corollary_pn_report(load_problem(fixture_path("plane_quadric_transverse")))
    assert report.rhs_variants["sigma-sum-statement-sign"] == -4
    assert report.verdicts["sigma-sum-statement-sign"] == "fail"


def test_sigma_probes():
    assert theorems.sigma_probe(3, 1, 2) == {"direct": 1, "sigma_n": 1, "signed-sigma-sum": -4}
    for n, a, b in theorems.PROBES:
        probe = theorems.sigma_probe(n, a, b)
        assert probe["direct"] == probe["sigma_n"]


def test_probes_in_ledger(fixture_path):
    spec = load_problem(fixture_path("plane_quadric_transverse"))
    spec.probes = True
    report = theorems.corollary_pn_report(spec)
    assert sum(e.quantity.startswith("probe") for e in report.ledger) == len(theorems.PROBES)


def test_low_dimension_warning():
    spec = theorems.ProblemSpec(2, {"L": DivisorOnPn("L", parse_homog("x0", P2))})
    assert spec.warnings
