from fractions import Fraction

import pytest

from branchforms import (BranchParametrization, DomainError, Poly,
                         characteristic_sequence, default_precision, nu,
                         semigroup_of, standard_basis_of_ring)
from branchforms.series import AbovePrecision


def test_characteristic_exponents_direct():
    phi = BranchParametrization.plane(6, {9: 1, 10: 1})
    assert characteristic_sequence(phi).exponents == (6, 9, 10)
    assert semigroup_of(phi).generators == (6, 9, 19)

    phi = BranchParametrization.plane(4, {6: 1, 7: 1})
    assert characteristic_sequence(phi).exponents == (4, 6, 7)
    assert semigroup_of(phi).generators == (4, 6, 13)


def test_characteristic_skips_non_contributing_exponents():
    # ord(y) is a multiple of n: 8 contributes nothing, 10 and 13 do
    phi = BranchParametrization.plane(4, {8: 1, 10: 1, 13: 1})
    assert characteristic_sequence(phi).exponents == (4, 10, 13)


def test_smooth_branch():
    phi = BranchParametrization.plane(1, {})
    assert characteristic_sequence(phi).exponents == (1,)
    assert semigroup_of(phi).generators == (1,)


def test_non_primitive_rejected():
    with pytest.raises(DomainError):
        characteristic_sequence(BranchParametrization.plane(4, {6: 1}))
    with pytest.raises(DomainError):
        characteristic_sequence(BranchParametrization.plane(2, {}))


def test_nu_pullback_orders():
    phi = BranchParametrization.plane(2, {3: 1})
    x = Poly.variable(0, 2)
    y = Poly.variable(1, 2)
    assert nu(phi, x) == 2
    assert nu(phi, y) == 3
    assert nu(phi, y * y - x * x * x) == AbovePrecision(default_precision(semigroup_of(phi)))
    assert nu(phi, x * y + y) == 3


def test_standard_basis_values():
    phi = BranchParametrization.plane(6, {9: 1, 10: 1})
    sb = standard_basis_of_ring(phi)
    assert sb.values == (6, 9, 19)
    for p, s, v in zip(sb.polys, sb.pullbacks, sb.values):
        assert s.order() == v
        # pullback really is the substitution of the polynomial
        args = phi.series(s.precision)
        assert p.eval_series(args) == s


def test_standard_basis_degenerate_y_order():
    # ord(y) = 8 = 2*4 lies in <4>, so y must be raised before the tower
    phi = BranchParametrization.plane(4, {8: 1, 10: 1, 13: 1})
    gamma = semigroup_of(phi)
    assert gamma.generators == (4, 10, 23)
    sb = standard_basis_of_ring(phi)
    assert sb.values == (4, 10, 23)
    assert [s.order() for s in sb.pullbacks] == [4, 10, 23]


def test_standard_basis_four_generator_tower():
    phi = BranchParametrization.plane(8, {12: 1, 14: 1, 15: 1})
    gamma = semigroup_of(phi)
    assert characteristic_sequence(phi).exponents == (8, 12, 14, 15)
    sb = standard_basis_of_ring(phi)
    assert sb.values == gamma.generators
    assert [s.order() for s in sb.pullbacks] == list(gamma.generators)


def test_parametrization_repr_and_cleanup():
    phi = BranchParametrization([{2: Fraction(1)}, {3: Fraction(1), 5: Fraction(0)}])
    assert phi.coords[1] == ((3, Fraction(1)),)
    assert phi.multiplicity == 2
