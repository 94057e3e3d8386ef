"""Plane-branch model: parametrizations, characteristic exponents, the
value semigroup, pullback valuations and a minimal standard basis of the
local ring.

A parametrization is stored exactly as sparse coordinate polynomials in t,
so truncated series can be materialized at any precision the computation
needs; the default working precision for a branch is conductor + v_0 + 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import DomainError, ValidationError
from .poly import Poly
from .semigroup import (CharacteristicSequence, NumericalSemigroup,
                        semigroup_from_characteristic)
from .series import AbovePrecision, TruncatedSeries


def _is_constant_coeff(c):
    if isinstance(c, (int, Fraction)):
        return True
    return c.is_constant()


def _constant_value(c):
    if isinstance(c, (int, Fraction)):
        return Fraction(c)
    return c.constant_value()


class BranchParametrization:
    """Coordinates x(t), y(t)[, z(t), ...] as exact sparse polynomials in t."""

    __slots__ = ("coords",)

    def __init__(self, coords):
        cleaned = []
        for coord in coords:
            pairs = coord.items() if isinstance(coord, dict) else coord
            terms = {}
            for e, c in pairs:
                e = int(e)
                if e < 0:
                    raise ValidationError("negative exponent in parametrization")
                if c:
                    terms[e] = terms.get(e, 0) + c
            cleaned.append(tuple(sorted((e, c) for e, c in terms.items() if c)))
        if not cleaned:
            raise ValidationError("parametrization needs at least one coordinate")
        self.coords = tuple(cleaned)

    @staticmethod
    def plane(n, y_terms, extra=()):
        """Puiseux form (t^n, y(t)) with optional extra coordinates."""
        coords = [{int(n): Fraction(1)}, dict(y_terms)]
        coords.extend(dict(z) for z in extra)
        return BranchParametrization(coords)

    # -- structure ----------------------------------------------------------

    @property
    def ncoords(self):
        return len(self.coords)

    def coord_order(self, i):
        if not self.coords[i]:
            return None
        return self.coords[i][0][0]

    @property
    def multiplicity(self):
        n = self.coord_order(0)
        if n is None or n < 1:
            raise ValidationError("x(t) must vanish at the origin to positive order")
        return n

    def is_plane_puiseux(self):
        if self.ncoords != 2:
            return False
        x = self.coords[0]
        return len(x) == 1 and x[0][1] == 1

    def series(self, precision):
        return tuple(TruncatedSeries.from_terms(c, precision) for c in self.coords)

    def map_coeffs(self, fn):
        return BranchParametrization(
            [[(e, fn(c)) for e, c in coord] for coord in self.coords])

    def __repr__(self):
        def render(coord):
            return " + ".join(f"{c}*t^{e}" for e, c in coord) or "0"
        return "(" + ", ".join(render(c) for c in self.coords) + ")"


def characteristic_sequence(phi):
    """Characteristic exponents read directly off the parametrization."""
    if phi.ncoords != 2:
        raise DomainError("characteristic exponents are defined for plane branches only")
    if not phi.is_plane_puiseux():
        raise DomainError("parametrization must have x(t) = t^n")
    n = phi.multiplicity
    if n == 1:
        return CharacteristicSequence((1,))
    y = phi.coords[1]
    if not y:
        raise DomainError("parametrization is not primitive (y = 0 with n > 1)")
    if y[0][0] < n:
        raise ValidationError("Puiseux form requires ord(y) >= n")
    beta = [n]
    e = n
    for exp, _c in y:
        if exp % e != 0:
            beta.append(exp)
            e = gcd(e, exp)
            if e == 1:
                break
    if e != 1:
        raise DomainError("parametrization is not primitive (gcd of exponents > 1)")
    return CharacteristicSequence(tuple(beta))


def semigroup_of(phi):
    return semigroup_from_characteristic(characteristic_sequence(phi))


def default_precision(gamma):
    """Working precision: conductor + v_0 + 2, enough for basis products
    and the t-shift in 1-form values."""
    return gamma.conductor + gamma.multiplicity + 2


def nu(phi, h, precision=None):
    """Order of the pullback of a bivariate polynomial, or AbovePrecision."""
    if not h:
        raise ValidationError("nu is undefined for the zero polynomial")
    if precision is None:
        precision = default_precision(semigroup_of(phi))
    args = phi.series(precision)
    return h.eval_series(args).order()


@dataclass(frozen=True)
class StandardBasisOf:
    """Representatives h_0 = x, h_1, ..., h_g with nu(h_i) = v_i, together
    with their pullback series."""

    polys: tuple
    pullbacks: tuple
    values: tuple
    gamma: NumericalSemigroup


def _cancel_leading(target_poly, target_pull, lc, prod_poly, prod_pull, lp):
    """Subtract a multiple of prod from target so their leading terms cancel.

    When the leading coefficient of prod is constant this is an ordinary
    subtraction; otherwise the target is cross-multiplied by lp (nonzero
    under the run's assumptions), which preserves all orders.
    """
    if _is_constant_coeff(lp):
        lam = lc / _constant_value(lp)
        return (target_poly - prod_poly.scale(lam),
                target_pull - prod_pull.scale(lam))
    return (target_poly.scale(lp) - prod_poly.scale(lc),
            target_pull.scale(lp) - prod_pull.scale(lc))


def standard_basis_of_ring(phi, gamma=None, oracle=None, precision=None):
    """Minimal standard basis of the local ring via a semiroot tower.

    Starting from {x, y}, each next representative is obtained from the
    power h_k^{n_k} by cancelling leading terms against monomials in the
    earlier representatives until the target value v_{k+1} is reached.
    Orders below the target always lie in <v_0, ..., v_k>, which supplies
    the cancelling monomial.
    """
    if gamma is None:
        gamma = semigroup_of(phi)
    is_zero = oracle.is_zero if oracle is not None else None
    v = gamma.generators
    e = gamma.e
    n = gamma.n
    g = gamma.g
    if precision is None:
        precision = default_precision(gamma)
    xs, ys = phi.series(precision)[:2]
    if xs.order() != v[0]:
        raise DomainError("x(t) must have order v_0")

    x_poly = Poly.variable(0, 2)
    y_poly = Poly.variable(1, 2)
    polys = [x_poly]
    pulls = [xs]
    values = [v[0]]
    if g == 0:
        return StandardBasisOf(tuple(polys), tuple(pulls), tuple(values), gamma)

    # Raise y to value v_1 (handles ord(y) a multiple of v_0).  Positions
    # below the target are cancelled without a zero test: subtracting a
    # value-matched multiple is a no-op when the coefficient vanishes, so
    # only the coefficient at the target itself ever needs the oracle.
    h_poly, h_pull = y_poly, ys
    for o in range(v[1]):
        c = h_pull.coeffs[o]
        if not c:
            continue
        if o % v[0] != 0:
            raise DomainError(f"unexpected order {o} while normalizing y to value {v[1]}")
        k = o // v[0]
        h_poly, h_pull = _cancel_leading(h_poly, h_pull, c, x_poly ** k, xs ** k, 1)
    lc = h_pull.coeffs[v[1]]
    if (is_zero(lc) if is_zero is not None else not lc):
        raise DomainError("y(t) pullback vanished below the target value v_1")
    polys.append(h_poly)
    pulls.append(h_pull)
    values.append(v[1])

    for k in range(1, g):
        target = v[k + 1]
        scaled = NumericalSemigroup(tuple(vi // e[k] for vi in v[: k + 1]))
        if len(scaled.generators) != k + 1:
            raise DomainError("scaled generator system is not minimal")
        c_poly = polys[k] ** n[k]
        c_pull = pulls[k] ** n[k]
        for o in range(n[k] * v[k], target):
            c = c_pull.coeffs[o]
            if not c:
                continue
            if o % e[k] != 0:
                raise DomainError(f"intermediate order {o} outside <v_0..v_{k}>")
            member, s = scaled.membership(o // e[k])
            if not member:
                raise DomainError(f"intermediate order {o} outside <v_0..v_{k}>")
            prod_poly = Poly.constant(Fraction(1), 2)
            prod_pull = TruncatedSeries.monomial(0, Fraction(1), precision)
            for i, si in enumerate(s):
                if si:
                    prod_poly = prod_poly * polys[i] ** si
                    prod_pull = prod_pull * pulls[i] ** si
            plead = prod_pull.leading()
            assert not isinstance(plead, AbovePrecision) and plead[0] == o
            c_poly, c_pull = _cancel_leading(c_poly, c_pull, c,
                                             prod_poly, prod_pull, plead[1])
        lc = c_pull.coeffs[target]
        if (is_zero(lc) if is_zero is not None else not lc):
            raise DomainError(f"semiroot pullback vanished at target value {target}")
        polys.append(c_poly)
        pulls.append(c_pull)
        values.append(target)

    return StandardBasisOf(tuple(polys), tuple(pulls), tuple(values), gamma)
