"""Polynomials in the coordinate variables (x, y[, z, ...]).

Used for standard basis representatives and 1-form coefficients.  The
coefficients live in whatever exact ring the rest of the computation uses
(Fraction or ParamPoly); substitution into a parametrization produces a
TruncatedSeries.
"""

from __future__ import annotations

from fractions import Fraction

from .series import TruncatedSeries


class Poly:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms):
        self.nvars = nvars
        self.terms = {e: c for e, c in terms.items() if c}

    # -- constructors ---------------------------------------------------

    @staticmethod
    def zero(nvars):
        return Poly(nvars, {})

    @staticmethod
    def constant(c, nvars):
        return Poly(nvars, {(0,) * nvars: c})

    @staticmethod
    def variable(i, nvars):
        e = [0] * nvars
        e[i] = 1
        return Poly(nvars, {tuple(e): Fraction(1)})

    @staticmethod
    def monomial(exponents, c):
        return Poly(len(exponents), {tuple(exponents): c})

    # -- arithmetic --------------------------------------------------------

    def _check(self, other):
        if self.nvars != other.nvars:
            raise ValueError("mixed variable counts")

    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e, 0) + c
            if s:
                terms[e] = s
            else:
                del terms[e]
        return Poly(self.nvars, terms)

    def __neg__(self):
        return Poly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = terms.get(e, 0) + c1 * c2
                if s:
                    terms[e] = s
                else:
                    del terms[e]
        return Poly(self.nvars, terms)

    def scale(self, c):
        if not c:
            return Poly.zero(self.nvars)
        return Poly(self.nvars, {e: c * v for e, v in self.terms.items()})

    def __pow__(self, k):
        result = Poly.constant(Fraction(1), self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def partial(self, i):
        """Partial derivative with respect to variable i."""
        terms = {}
        for e, c in self.terms.items():
            if e[i]:
                d = list(e)
                d[i] -= 1
                terms[tuple(d)] = c * e[i]
        return Poly(self.nvars, terms)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.nvars == other.nvars and not (self - other)

    def map_coeffs(self, fn):
        return Poly(self.nvars, {e: fn(c) for e, c in self.terms.items()})

    # -- evaluation ------------------------------------------------------------

    def eval_series(self, args, power_cache=None):
        """Substitute TruncatedSeries for the variables.

        args must have one series per variable; the result precision is the
        minimum of the argument precisions.
        """
        if len(args) != self.nvars:
            raise ValueError("argument count does not match variable count")
        prec = min(a.precision for a in args)
        if power_cache is None:
            power_cache = {}
        total = TruncatedSeries.zero(prec)
        for e, c in self.terms.items():
            term = None
            for i, d in enumerate(e):
                if not d:
                    continue
                key = (i, d)
                if key not in power_cache:
                    power_cache[key] = args[i] ** d
                factor = power_cache[key]
                term = factor if term is None else term * factor
            if term is None:
                total = total + TruncatedSeries.monomial(0, c, prec)
            else:
                total = total + term.scale(c)
        return total

    def __repr__(self):
        names = ("x", "y", "z", "w")[: self.nvars] if self.nvars <= 4 else \
            tuple(f"x{i}" for i in range(self.nvars))
        parts = []
        for e in sorted(self.terms):
            c = self.terms[e]
            mono = "*".join(f"{names[i]}^{d}" if d > 1 else names[i]
                            for i, d in enumerate(e) if d)
            parts.append(f"{c}" + (f"*{mono}" if mono else ""))
        return " + ".join(parts) if parts else "0"
