"""Numerical semigroup arithmetic for plane branches.

A plane branch's value semigroup is generated by v_0 < ... < v_g with
gcd 1; the gcd chain e_i, ratios n_i and the conductor are the basic
derived data.  Everything here is exact integer arithmetic on immutable
objects.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import DomainError, ValidationError


def _gcd_chain(values):
    es = []
    e = 0
    for v in values:
        e = gcd(e, v)
        es.append(e)
    return es


@dataclass(frozen=True)
class CharacteristicSequence:
    """Characteristic exponents beta_0 < beta_1 < ... < beta_g."""

    exponents: tuple

    def __post_init__(self):
        beta = tuple(int(b) for b in self.exponents)
        object.__setattr__(self, "exponents", beta)
        if not beta:
            raise ValidationError("empty characteristic sequence")
        if any(b <= 0 for b in beta):
            raise ValidationError("characteristic exponents must be positive")
        if any(b1 >= b2 for b1, b2 in zip(beta, beta[1:])):
            raise ValidationError("characteristic exponents must be strictly increasing")
        es = _gcd_chain(beta)
        if es[-1] != 1:
            raise ValidationError("gcd of characteristic exponents must be 1")
        for i in range(1, len(beta)):
            if beta[i] % es[i - 1] == 0:
                raise ValidationError(
                    f"exponent {beta[i]} is divisible by gcd {es[i - 1]} of the previous ones")

    @property
    def e(self):
        return tuple(_gcd_chain(self.exponents))

    @property
    def g(self):
        return len(self.exponents) - 1


@dataclass(frozen=True)
class NumericalSemigroup:
    """A numerical semigroup held by its minimal generator system."""

    generators: tuple

    def __post_init__(self):
        gens = sorted({int(v) for v in self.generators})
        if not gens:
            raise ValidationError("no generators given")
        if gens[0] <= 0:
            raise ValidationError("generators must be positive")
        es = _gcd_chain(gens)
        if es[-1] != 1:
            raise DomainError("gcd of generators must be 1")
        gens = _minimalize(gens)
        object.__setattr__(self, "generators", tuple(gens))

    # -- derived data --------------------------------------------------------

    @property
    def g(self):
        return len(self.generators) - 1

    @property
    def multiplicity(self):
        return self.generators[0]

    @property
    def e(self):
        return tuple(_gcd_chain(self.generators))

    @property
    def n(self):
        es = self.e
        return (1,) + tuple(es[i - 1] // es[i] for i in range(1, len(es)))

    @property
    def is_free(self):
        """True when n_i * v_i always lies in <v_0, ..., v_{i-1}>; the
        unique-representation arithmetic below is valid exactly then.
        Plane branch semigroups are always free."""
        cached = getattr(self, "_free", None)
        if cached is None:
            v = self.generators
            n = self.n
            cached = all(_in_semigroup_of(n[i] * v[i], list(v[:i]))
                         for i in range(1, len(v)))
            object.__setattr__(self, "_free", cached)
        return cached

    def _table(self):
        """Reachability table for the general (non-free) case."""
        cached = getattr(self, "_tbl", None)
        if cached is None:
            v = self.generators
            bound = v[0] * v[-1] + v[0] + 1
            while True:
                cached = [False] * bound
                cached[0] = True
                for gen in v:
                    for k in range(gen, bound):
                        if cached[k - gen]:
                            cached[k] = True
                # the table must end in a full run of v_0 members, so that
                # everything beyond it is certainly reachable
                if all(cached[-v[0]:]):
                    break
                bound *= 2
            object.__setattr__(self, "_tbl", cached)
        return cached

    @property
    def conductor(self):
        if self.is_free:
            v = self.generators
            n = self.n
            mu = sum((n[i] - 1) * v[i] for i in range(1, len(v))) - v[0] + 1
            return max(mu, 0)
        tbl = self._table()
        gap = -1
        for z in range(len(tbl) - 1, -1, -1):
            if not tbl[z]:
                gap = z
                break
        return gap + 1

    # -- membership ------------------------------------------------------------

    def membership(self, z):
        """Unique representation z = sum s_i v_i with 0 <= s_i < n_i for i >= 1.

        Returns (member, s) where member is True iff s[0] >= 0.  Only free
        generator systems admit this representation.
        """
        if not self.is_free:
            raise DomainError(
                "membership representation requires a free generator system")
        v = self.generators
        n = self.n
        es = self.e
        s = [0] * len(v)
        rem = int(z)
        for i in range(len(v) - 1, 0, -1):
            # rem is divisible by e_i here; solve rem = s_i v_i mod e_{i-1}.
            m = n[i]
            vi = v[i] // es[i]
            r = rem // es[i]
            si = (r * pow(vi, -1, m)) % m
            s[i] = si
            rem -= si * v[i]
        assert rem % v[0] == 0
        s[0] = rem // v[0]
        return s[0] >= 0, tuple(s)

    def __contains__(self, z):
        if z < 0:
            return False
        if z == 0:
            return True
        if self.is_free:
            return self.membership(z)[0]
        tbl = self._table()
        return tbl[z] if z < len(tbl) else True

    def members_up_to(self, bound):
        """Sorted list of members in [0, bound)."""
        return [z for z in range(0, bound) if z in self]

    def gaps(self):
        return [z for z in range(1, self.conductor) if z not in self]


def _minimalize(gens):
    """Drop generators expressible from the others (keeps a minimal system)."""
    gens = sorted(set(gens))
    if gens == [1]:
        return [1]
    changed = True
    while changed:
        changed = False
        for i in range(len(gens) - 1, 0, -1):
            others = gens[:i] + gens[i + 1 :]
            if _in_semigroup_of(gens[i], others):
                del gens[i]
                changed = True
                break
    return gens


def _in_semigroup_of(z, gens):
    if not gens:
        return z == 0
    reachable = [False] * (z + 1)
    reachable[0] = True
    for v in gens:
        for k in range(v, z + 1):
            if reachable[k - v]:
                reachable[k] = True
    return reachable[z]


def is_plane_branch_semigroup(values):
    """Bresinsky's test: gcd 1, every n_i >= 2 and n_{i-1} v_{i-1} < v_i.

    Returns (ok, reason); reason names the first violated condition.
    """
    vals = [int(v) for v in values]
    if not vals:
        raise ValidationError("empty generator list")
    if any(v <= 0 for v in vals):
        raise ValidationError("generators must be positive")
    if any(a >= b for a, b in zip(vals, vals[1:])):
        raise ValidationError("generators must be strictly increasing")
    es = _gcd_chain(vals)
    if es[-1] != 1:
        return False, f"gcd of generators is {es[-1]}, not 1"
    n = [1] + [es[i - 1] // es[i] for i in range(1, len(es))]
    for i in range(1, len(vals)):
        if n[i] < 2:
            return False, f"n_{i} = {n[i]} < 2 (generator {vals[i]} is redundant)"
    for i in range(1, len(vals)):
        if n[i - 1] * vals[i - 1] >= vals[i]:
            return False, (f"n_{i - 1}*v_{i - 1} = {n[i - 1] * vals[i - 1]} "
                           f">= v_{i} = {vals[i]}")
    return True, "plane branch semigroup"


def semigroup_from_characteristic(beta):
    """Minimal generators from characteristic exponents: v_0 = beta_0 and
    v_i = n_{i-1} v_{i-1} + beta_i - beta_{i-1}."""
    if not isinstance(beta, CharacteristicSequence):
        beta = CharacteristicSequence(tuple(beta))
    b = beta.exponents
    es = beta.e
    n = (1,) + tuple(es[i - 1] // es[i] for i in range(1, len(es)))
    v = [b[0]]
    for i in range(1, len(b)):
        v.append(n[i - 1] * v[i - 1] + b[i] - b[i - 1])
    return NumericalSemigroup(tuple(v))


def characteristic_from_semigroup(gamma):
    """Inverse of semigroup_from_characteristic; requires a plane semigroup."""
    ok, reason = is_plane_branch_semigroup(gamma.generators)
    if not ok:
        raise DomainError(f"not a plane branch semigroup: {reason}")
    v = gamma.generators
    n = gamma.n
    b = [v[0]]
    for i in range(1, len(v)):
        b.append(v[i] - n[i - 1] * v[i - 1] + b[i - 1])
    return CharacteristicSequence(tuple(b))


def gamma_star_apery(gamma):
    """Apery set of the punctured semigroup Gamma \\ {0}: the smallest
    positive member in each residue class mod v_0.  For free semigroups
    this equals {v_0} plus the nonzero sums sum s_i v_i with 0 <= s_i < n_i."""
    v0 = gamma.multiplicity
    bound = gamma.conductor + v0 + 1
    reps = {}
    for z in range(1, bound):
        if z in gamma and z % v0 not in reps:
            reps[z % v0] = z
    assert len(reps) == v0
    return sorted(reps.values())
