import random
from fractions import Fraction

import pytest

from logchern import milnor
from logchern.errors import (
    ChartFailureError, NonIsolatedError, NotSingularError, SingularitiesAtInfinityError,
)
from logchern.polyarith import linear_change, parse_homog, parse_poly

XY = ("x", "y")
XYZ = ("x", "y", "z")
P3 = ("x0", "x1", "x2", "x3")
CAYLEY = "x0*x1*x2 + x0*x1*x3 + x0*x2*x3 + x1*x2*x3"
CORNERS = [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)]


def test_node():
    assert milnor.local_milnor(parse_poly("x^2 + y^2 + z^2", XYZ), (0, 0, 0)) == 1


@pytest.mark.parametrize("k", range(1, 6))
def test_a_k_series_matches_oracle(k):
    f = parse_poly(f"x^{k + 1} + y^2 + z^2", XYZ)
    weights = [Fraction(1, k + 1), Fraction(1, 2), Fraction(1, 2)]
    assert milnor.local_milnor(f, (0, 0, 0)) == k == milnor.milnor_orlik_oracle(weights, 1)


def test_triple_point():
    f = parse_poly("x^2*y + x*y^2", XY)
    assert milnor.local_milnor(f, (0, 0)) == 4 == milnor.milnor_orlik_oracle([1, 1], 3)


def test_oracle_examples():
    assert milnor.milnor_orlik_oracle([1, 1, 1], 2) == 1
    for k in range(1, 6):
        assert milnor.milnor_orlik_oracle([1, Fraction(k + 1, 2), Fraction(k + 1, 2)], k + 1) == k


def test_local_milnor_off_origin():
    # node of y^2 - x^2 (x + 1) translated to (1, 2)
    f = parse_poly("(y - 2)^2 - (x - 1)^2*x", XY)
    assert milnor.local_milnor(f, (1, 2)) == 1


def test_smooth_point_rejected():
    with pytest.raises(NotSingularError):
        milnor.local_milnor(parse_poly("x + y^2", XY), (0, 0))
    with pytest.raises(NotSingularError):
        milnor.local_milnor(parse_poly("x^2 + y^2 + 1", XY), (0, 0))


def test_non_isolated_rejected():
    with pytest.raises(NonIsolatedError):
        milnor.local_milnor(parse_poly("x^2", XY), (0, 0))


def test_global_totals():
    assert milnor.milnor_sum_on_zero_level(parse_homog("x0^2 + x1^2 + x2^2 + x3^2", P3)) == 0
    assert milnor.milnor_sum_on_zero_level(parse_homog("x0*x1 - x2^2", P3), 3) == 1


def test_off_level_critical_points_ignored():
    # critical values +-2 are nonzero
    total, dim = milnor.affine_milnor_sum(parse_poly("x^3 - 3*x + y^2 + z^2", XYZ))
    assert (total, dim) == (0, 2)


def test_hyperplane_entirely_at_infinity():
    assert milnor.milnor_total(parse_homog("x3", P3), 3).total == 0


def test_cayley_cubic_routes_agree():
    F = parse_homog(CAYLEY, P3)
    report = milnor.certify_points(F, CORNERS, allow_change=True)
    assert report.total == 4
    assert [c.local_milnor for c in report.per_point] == [1, 1, 1, 1]
    assert report.certified_complete


def test_cayley_cubic_needs_coordinate_change():
    F = parse_homog(CAYLEY, P3)
    with pytest.raises(ChartFailureError):
        milnor.milnor_total(F)


def test_incomplete_point_list_detected():
    F = parse_homog(CAYLEY, P3)
    report = milnor.certify_points(F, CORNERS[:3], allow_change=True)
    assert report.total == 4 and not report.certified_complete


def test_smooth_empty_list():
    report = milnor.certify_points(parse_homog("x0^2 + x1^2 + x2^2 + x3^2", P3), [])
    assert report.total == 0 and report.certified_complete


def test_fixed_chart_with_singularity_at_infinity():
    cusp = parse_homog("x1^2*x2 - x0^3", ("x0", "x1", "x2"))
    with pytest.raises(SingularitiesAtInfinityError):
        milnor.milnor_sum_on_zero_level(cusp, 0)
    with pytest.raises(ChartFailureError):
        milnor.milnor_total(cusp, 0)
    # the policy without a fixed chart finds a good chart
    assert milnor.milnor_total(cusp).total == 2


def test_icis_examples():
    z = parse_poly("z", XYZ)
    assert milnor.icis_milnor(z, parse_poly("y^2 - x^3 - x^2", XYZ), (0, 0, 0)) == 1
    assert milnor.icis_milnor(z, parse_poly("y^2 - x^3", XYZ), (0, 0, 0)) == 2
    assert milnor.icis_milnor(z, parse_poly("x^2 + y^2 - z + y", XYZ), (0, 0, 0)) == 0


def test_icis_global_matches_local():
    F1 = parse_homog("x3", P3)
    F2 = parse_homog("x1^2*x2 - x0^3 - x0^2*x2 + x3*x2^2 + x3^3", P3)
    report = milnor.certify_icis_points(F1, F2, [(0, 0, 1, 0)])
    assert report.total == 1 and report.certified_complete


def _random_unimodular(rng, size):
    m = [[Fraction(int(i == j)) for j in range(size)] for i in range(size)]
    for _ in range(3 * size):
        i, j = rng.sample(range(size), 2)
        c = rng.randint(-2, 2)
        m[i] = [a + c * b for a, b in zip(m[i], m[j])]
    return m


def test_local_milnor_invariant_under_coordinate_change():
    rng = random.Random(11)
    f = parse_poly("x^4 + y^2 + z^2 + x*y*z", XYZ)
    mu = milnor.local_milnor(f, (0, 0, 0))
    for _ in range(10):
        assert milnor.local_milnor(linear_change(f, _random_unimodular(rng, 3)), (0, 0, 0)) == mu
