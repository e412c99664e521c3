from fractions import Fraction

import pytest

from chitop.errors import PreconditionError
from chitop.polyparse import parse_poly
from chitop.wps import (
    CyclicQuotientLocus, WeightedLocus, WeightedSpace, chi_cyclic_quotient, chi_quotient_average, chi_wps,
    effective_action, exceptional_divisor_chi, initial_form,
)

XYZU = ("x", "y", "z", "u")


def P(expr, vars):
    return parse_poly(expr, vars)


def wps(weights, vars, *exprs, quotient="cover"):
    return chi_wps(WeightedLocus.of(weights, [P(e, vars) for e in exprs], vars), quotient=quotient)


def quot(m, w, vars, *exprs):
    q = CyclicQuotientLocus.of(m, w, vars, [P(e, vars) for e in exprs])
    return chi_cyclic_quotient(q), chi_quotient_average(q)


def test_space_validation():
    with pytest.raises(PreconditionError):
        WeightedSpace((1, 0, 2))
    assert WeightedSpace((1, 2, 3)).dim == 2


def test_homogeneity_required():
    with pytest.raises(PreconditionError):
        WeightedLocus.of((1, 2), [P("x + y", ("x", "y"))], ("x", "y"))


def test_semi_invariance_required():
    with pytest.raises(PreconditionError):
        CyclicQuotientLocus.of(2, (1, 0), ("x", "y"), [P("x + y", ("x", "y"))])


def test_effective_action():
    assert effective_action(4, (2, 2, 0)) == (2, (1, 1, 0))
    assert effective_action(3, (0, 3)) == (1, (0, 0))


def test_quotient_examples():
    assert quot(1, (0, 0), ("x", "y"), "x*y - 1") == (0, 0)
    # (chi(A^2) + chi(origin)) / 2
    assert quot(2, (1, 1), ("x", "y")) == (1, 1)
    assert quot(3, (1,), ("x",)) == (1, 1)
    # (chi(A^3) + chi(fixed axis)) / 2
    assert quot(2, (1, 1, 0), ("x", "y", "z")) == (1, 1)
    # mu_3 acts freely on the hyperbola xy = 1, so chi stays 0
    assert quot(3, (1, 2), ("x", "y"), "x*y - 1") == (0, 0)
    # a conic through the fixed point: (chi(C) + 1)/2 with chi(C) = 1 for the pair of lines x*y = 0
    assert quot(2, (1, 1), ("x", "y"), "x*y") == (1, 1)


@pytest.mark.parametrize("weights,expected", [
    ((1, 1), 2),
    ((2, 3, 5), 3),
    ((1, 1, 1), 3),
    ((1, 2, 2, 3), 4),
])
def test_zero_ideal(weights, expected):
    vars = ("a", "b", "c", "d")[:len(weights)]
    assert wps(weights, vars) == expected
    assert wps(weights, vars, quotient="average") == expected


@pytest.mark.parametrize("delta,expected", [(1, 2), (2, 2), (3, 0)])
def test_fermat_curves(delta, expected):
    # smooth plane curve: 2 - (delta-1)(delta-2)
    vars = ("x", "y", "z")
    assert wps((1, 1, 1), vars, f"x^{delta} + y^{delta} + z^{delta}") == expected


def test_ex52_instance():
    assert wps((1, 5, 1, 2), XYZU, "x*y + z^6 + u^3") == 5
    assert wps((1, 5, 1, 2), XYZU, "x*y + z^6 + u^3", quotient="average") == 5


def test_ex51_instance_matches_group_average():
    # engine value; a hand count gives -1 as well: the cone point plus
    # the curve x^2 + z^10 + u^5 in P(5,1,2), whose chart z != 0 is a genus 2
    # curve minus one point (chi -3) and whose z = 0 part is one point
    cover = wps((5, 7, 1, 2), XYZU, "x^2 + z^10 + u^5")
    assert cover == wps((5, 7, 1, 2), XYZU, "x^2 + z^10 + u^5", quotient="average")
    assert cover == -1


def test_permutation_invariance():
    a = wps((1, 2, 3), ("x", "y", "z"), "x^6 + y^3 + z^2")
    b = wps((3, 1, 2), ("z", "x", "y"), "x^6 + y^3 + z^2")
    assert a == b


def test_initial_form():
    f = P("x^2 + y^2 + z^10 + u^5", XYZU)
    init, low = initial_form(f, (5, 7, 1, 2))
    assert init == P("x^2 + z^10 + u^5", XYZU)
    assert low == 10


def test_blowup_smooth_point():
    q = CyclicQuotientLocus.of(1, (0, 0, 0), ("x", "y", "z"), [])
    r = exceptional_divisor_chi(q, (1, 1, 1))
    assert (r.chi_e, r.delta_chi) == (3, 2)


def test_blowup_cA_example():
    q = CyclicQuotientLocus.of(2, (1, 1, 1, 0), XYZU, [P("x*y + z^6 + u^3", XYZU)])
    r = exceptional_divisor_chi(q, [Fraction(1, 2), Fraction(5, 2), Fraction(1, 2), 1])
    assert (r.chi_e, r.delta_chi) == (5, 4)
    assert r.weights == (1, 5, 1, 2)


def test_blowup_errors():
    q = CyclicQuotientLocus.of(1, (0, 0), ("x", "y"), [P("x*y - 1", ("x", "y"))])
    with pytest.raises(PreconditionError):
        exceptional_divisor_chi(q, (1, 1))
    q = CyclicQuotientLocus.of(1, (0, 0), ("x", "y"), [P("x^3 + y^4", ("x", "y"))])
    with pytest.raises(PreconditionError, match="x\\^3"):
        exceptional_divisor_chi(q, (1, 1), max_degree=2)
