"""1-forms on a branch and the standard basis of their pullback module.

The value of a 1-form w = A dx + B dy is ord_t(t * phi^*(w)).  Starting
from the differentials of a standard basis of the local ring, the
completion loop repeatedly forms minimal S-processes of basis pairs and
reduces them; surviving elements carry the values that make up the set
Lambda beyond the semigroup.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
import heapq
import itertools

from .branch import (_constant_value, _is_constant_coeff, default_precision,
                     semigroup_of, standard_basis_of_ring)
from .errors import DomainError, PrecisionError, ValidationError
from .poly import Poly
from .series import AbovePrecision, TruncatedSeries
from .valueset import ValueSet


@dataclass(frozen=True)
class OneForm:
    """w = sum_i A_i dx_i with polynomial coefficients, one per coordinate."""

    coeffs: tuple

    def __post_init__(self):
        if not self.coeffs:
            raise ValidationError("a 1-form needs at least one coefficient")

    @property
    def ncoords(self):
        return len(self.coeffs)

    def __bool__(self):
        return any(self.coeffs)

    def scale(self, c):
        return OneForm(tuple(a.scale(c) for a in self.coeffs))

    def mul_poly(self, p):
        return OneForm(tuple(p * a for a in self.coeffs))

    def __sub__(self, other):
        return OneForm(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __add__(self, other):
        return OneForm(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))


def differential(h):
    """d(h) as a OneForm."""
    return OneForm(tuple(h.partial(i) for i in range(h.nvars)))


def pullback_form(form, coord_series):
    """phi^*(w) = sum phi^*(A_i) * x_i'(t); precision drops by one from the
    coordinate derivatives."""
    if not form:
        raise ValidationError("zero 1-form")
    if form.ncoords > len(coord_series):
        raise ValidationError("form has more coordinates than the parametrization")
    total = None
    cache = {}
    args = coord_series[: form.coeffs[0].nvars]
    for a, coord in zip(form.coeffs, coord_series):
        if not a:
            continue
        piece = a.eval_series(args, cache) * coord.derivative()
        total = piece if total is None else total + piece
    return total


def eval_form_order(phi, form, precision=None):
    """nu(w) = 1 + ord(phi^*(w)), or AbovePrecision when the pullback
    vanishes to within precision."""
    if precision is None:
        precision = default_precision(semigroup_of(phi))
    pull = pullback_form(form, phi.series(precision))
    o = pull.order()
    if isinstance(o, AbovePrecision):
        return o
    return o + 1


def eval_form_orders_multi(branches, form, precision=60):
    """Componentwise value tuple of one form on several branches."""
    out = []
    for i, phi in enumerate(branches):
        pull = pullback_form(form, phi.series(precision))
        o = pull.order()
        if isinstance(o, AbovePrecision):
            raise DomainError(
                f"form pulls back to zero on branch {i} (to precision {o.precision})")
        out.append(o + 1)
    return tuple(out)


# -- minimal S-process solutions ---------------------------------------------


@lru_cache(maxsize=None)
def _vectors_by_value(gens, bound):
    """value -> exponent tuples alpha with sum(alpha_i * gens_i) == value <= bound."""
    out = {}

    def rec(i, prefix, total):
        if i == len(gens):
            out.setdefault(total, []).append(tuple(prefix))
            return
        k = 0
        while total + k * gens[i] <= bound:
            rec(i + 1, prefix + [k], total + k * gens[i])
            k += 1

    rec(0, [], 0)
    return out


@lru_cache(maxsize=None)
def minimal_s_processes(nu_p, nu_q, gens, cap):
    """Componentwise-minimal nonnegative solutions (alpha, gamma) of

        sum v_i alpha_i + nu_p == sum v_i gamma_i + nu_q == matched <= cap.

    Returns a tuple of (alpha, gamma, matched) sorted by matched value.
    """
    vecs = _vectors_by_value(gens, cap)
    sols = []
    for m in range(max(nu_p, nu_q), cap + 1):
        for alpha in vecs.get(m - nu_p, ()):
            for gamma_v in vecs.get(m - nu_q, ()):
                sols.append((alpha, gamma_v, m))
    # Dominated solutions reduce to products of smaller ones; keep the
    # componentwise-minimal concatenated vectors only.
    sols.sort(key=lambda s: (sum(s[0]) + sum(s[1]), s[2]))
    minimal = []
    for alpha, gamma_v, m in sols:
        cat = alpha + gamma_v
        if any(all(a <= b for a, b in zip(k[0] + k[1], cat)) for k in minimal):
            continue
        minimal.append((alpha, gamma_v, m))
    minimal.sort(key=lambda s: s[2])
    return tuple(minimal)


# -- Algorithm 1 ----------------------------------------------------------------


@dataclass
class FormEntry:
    form: OneForm
    pull: TruncatedSeries
    value: int
    minimal: bool = False


@dataclass(frozen=True)
class FormValueBasis:
    entries: tuple
    lambda_set: ValueSet
    gamma: object

    @property
    def minimal_entries(self):
        return tuple(e for e in self.entries if e.minimal)

    @property
    def minimal_values(self):
        return tuple(e.value for e in self.entries if e.minimal)


class _ProductCache:
    """Products of powers of the ring standard basis, polys and pullbacks."""

    def __init__(self, sb):
        self.sb = sb
        self._pow = {}
        self._prod = {}

    def _power(self, i, k):
        key = (i, k)
        if key not in self._pow:
            self._pow[key] = (self.sb.polys[i] ** k, self.sb.pullbacks[i] ** k)
        return self._pow[key]

    def product(self, delta):
        delta = tuple(delta)
        if delta not in self._prod:
            poly = None
            pull = None
            for i, d in enumerate(delta):
                if not d:
                    continue
                p, s = self._power(i, d)
                poly = p if poly is None else poly * p
                pull = s if pull is None else pull * s
            if poly is None:
                poly = Poly.constant(Fraction(1), self.sb.polys[0].nvars)
                pull = TruncatedSeries.monomial(
                    0, Fraction(1), self.sb.pullbacks[0].precision)
            self._prod[delta] = (poly, pull)
        return self._prod[delta]


def _cancel_form(target_form, target_pull, lc, red_form, red_pull, lp):
    """Make target's leading term cancel against a basis multiple.

    Constant reducer lead: ordinary subtraction.  Parametric lead (nonzero
    under the run's assumptions): cross-multiply, which rescales the target
    without moving any order."""
    if _is_constant_coeff(lp):
        lam = lc / _constant_value(lp)
        return target_form - red_form.scale(lam), target_pull - red_pull.scale(lam)
    return (target_form.scale(lp) - red_form.scale(lc),
            target_pull.scale(lp) - red_pull.scale(lc))


def reduce_form(form, pull, entries, gamma, bound, cache, oracle=None):
    """Final reduction of (form, pull) modulo the current basis.

    Returns a FormEntry with the surviving value, or None (discard) when
    the chain leaves the bound.  Positions whose value is reducible by the
    basis are cancelled without a zero test: subtracting (c/lp) times a
    value-matched multiple is a no-op when c happens to vanish, so only
    coefficients at genuinely new values ever need the oracle (this is
    what keeps parametric runs from splitting on every intermediate
    coefficient).
    """
    is_zero = oracle.is_zero if oracle is not None else None
    if pull.precision < bound:
        raise PrecisionError("series shorter than the reduction bound",
                             required=bound + 1)
    o = 0
    while True:
        while o < bound and not pull.coeffs[o]:
            o += 1
        if o >= bound:
            return None
        c = pull.coeffs[o]
        value = o + 1
        reducer = None
        for entry in entries:
            d = value - entry.value
            if d < 0:
                continue
            member, s = gamma.membership(d)
            if member:
                reducer = (entry, s)
                break
        if reducer is None:
            if is_zero is not None and is_zero(c):
                o += 1
                continue
            return FormEntry(form, pull, value)
        entry, delta = reducer
        prod_poly, prod_pull = cache.product(delta)
        red_pull = prod_pull * entry.pull
        red_form = entry.form.mul_poly(prod_poly)
        rlead = red_pull.leading()
        assert not isinstance(rlead, AbovePrecision) and rlead[0] == o
        form, pull = _cancel_form(form, pull, c, red_form, red_pull, rlead[1])
        o += 1


def algorithm1_core(sb, coords, oracle=None, bound=None):
    """Completion loop over the differentials of the ring standard basis.

    coords are the parametrization series (x(t), y(t)).  Returns the list
    of FormEntry making up a standard basis of the pulled-back 1-form
    module, in discovery order.
    """
    gamma = sb.gamma
    mu = gamma.conductor
    if bound is None:
        bound = mu - 1
    cache = _ProductCache(sb)

    # Basis pullbacks keep exact (syntactic) zeros below their order, so
    # lead extraction here never needs the parametric oracle.
    entries = []
    for h, v in zip(sb.polys, sb.values):
        form = differential(h)
        pull = pullback_form(form, coords)
        lead = pull.leading()
        assert not isinstance(lead, AbovePrecision) and lead[0] + 1 == v, \
            f"nu(dh) = {lead} expected value {v}"
        entries.append(FormEntry(form, pull, v))

    gens = gamma.generators
    cap = bound + gens[-1]
    if cap < 0:
        return entries
    heap = []
    counter = itertools.count()
    seen_pairs = set()

    def push_new(i):
        for j in range(len(entries)):
            if j == i:
                continue
            p, q = (i, j) if i < j else (j, i)
            if (p, q) in seen_pairs:
                continue
            seen_pairs.add((p, q))
            for alpha, gamma_v, m in minimal_s_processes(
                    entries[p].value, entries[q].value, gens, cap):
                if m < bound:
                    heapq.heappush(heap, (m, next(counter), p, q, alpha, gamma_v))

    for i in range(len(entries)):
        push_new(i)

    while heap:
        m, _, p, q, alpha, gamma_v = heapq.heappop(heap)
        ep, eq = entries[p], entries[q]
        pa_poly, pa_pull = cache.product(alpha)
        pg_poly, pg_pull = cache.product(gamma_v)
        sp_pull = pa_pull * ep.pull
        sq_pull = pg_pull * eq.pull
        lp = sp_pull.leading()
        lq = sq_pull.leading()
        assert not isinstance(lp, AbovePrecision) and lp[0] == m - 1
        assert not isinstance(lq, AbovePrecision) and lq[0] == m - 1
        s_pull = sp_pull.scale(lq[1]) - sq_pull.scale(lp[1])
        s_form = (ep.form.mul_poly(pa_poly).scale(lq[1])
                  - eq.form.mul_poly(pg_poly).scale(lp[1]))
        result = reduce_form(s_form, s_pull, entries, gamma, bound, cache, oracle)
        if result is not None:
            entries.append(result)
            push_new(len(entries) - 1)

    return entries


def assemble_lambda(entries, gamma):
    """Minimal basis flags plus the value set Lambda = union(nu_i + Gamma)."""
    mu = gamma.conductor
    by_value = sorted(entries, key=lambda e: e.value)
    kept_values = []
    for e in by_value:
        reducible = any((e.value - kv) in gamma for kv in kept_values)
        e.minimal = not reducible
        if not reducible:
            kept_values.append(e.value)
    cof = max(mu, 1)
    members = set()
    for v in kept_values:
        for z in gamma.members_up_to(max(cof - v, 0)):
            if 0 < v + z < cof:
                members.add(v + z)
    return ValueSet(tuple(members), cof)


def algorithm1_lambda(phi, gamma=None, oracle=None, precision=None):
    """Standard basis of the pulled-back 1-form module and the set Lambda."""
    if phi.ncoords != 2:
        raise DomainError("Lambda computation is for plane branches only")
    if gamma is None:
        gamma = semigroup_of(phi)
    attempts = 0
    if precision is None:
        precision = default_precision(gamma)
    precision = max(precision, default_precision(gamma))
    while True:
        try:
            sb = standard_basis_of_ring(phi, gamma=gamma, oracle=oracle,
                                        precision=precision)
            entries = algorithm1_core(sb, phi.series(precision), oracle=oracle)
            break
        except PrecisionError:
            attempts += 1
            if attempts > 3:
                raise
            precision *= 2
    lam = assemble_lambda(entries, gamma)
    return FormValueBasis(tuple(entries), lam, gamma)
