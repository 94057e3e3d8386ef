"""Decide whether a cofinite set L of positive integers is the value set
of 1-forms of some plane branch.

Three gates, cheapest first: (1) L must be covered by its Apery set;
(2) the candidate generators u_i = max(B_i(L)) must satisfy the numerical
constraints of a plane-branch semigroup (eta_i >= 2 and
eta_{i-1} u_{i-1} < u_i); (3) <u_0, ..., u_rho> is stratified and L is
compared against every attainable Lambda.
"""

from __future__ import annotations

from dataclasses import dataclass

from .branch import BranchParametrization
from .errors import DomainError
from .forms import algorithm1_lambda
from .semigroup import NumericalSemigroup, is_plane_branch_semigroup
from .strata import stratify
from .valueset import ValueSet, apery_set, b_sets, epsilon_eta, is_covered


@dataclass(frozen=True)
class Decision:
    verdict: str              # "yes" | "no" | "unresolved"
    stage: str                # not-covered | eta-or-bresinsky-failed |
                              # no-matching-stratum | matched
    evidence: str
    witness: object = None    # BranchParametrization for "yes"
    gamma: object = None      # candidate semigroup, when gate 1 passed


def _yes(stage, evidence, witness, expected, gamma=None):
    """Final soundness check: the witness must reproduce L concretely."""
    lam = algorithm1_lambda(witness).lambda_set
    if lam != expected:
        raise DomainError(
            f"witness validation failed: computed {lam}, expected {expected}")
    return Decision("yes", stage, evidence, witness, gamma)


def decide(L, max_splits=60, seed=0, jobs=1):
    if not isinstance(L, ValueSet):
        L = ValueSet.from_members(tuple(L), max(L) + 1)

    covered, missing = is_covered(L, with_witness=True)
    if not covered:
        if missing is None:
            ap = apery_set(L)
            ev = (f"Apery set has {len(ap)} residue classes, "
                  f"need {ap[0]} for min(L) = {ap[0]}")
        else:
            a0 = L.min()
            ev = f"{missing} lies on an Apery progression mod {a0} but not in L"
        return Decision("no", "not-covered", ev)

    _eps, eta, rho = epsilon_eta(L)
    if rho == 0:
        # min(L) = 1, so L is all positive integers: the smooth branch.
        witness = BranchParametrization.plane(1, {})
        return _yes("matched", "L is the full set of positive integers",
                    witness, L, NumericalSemigroup((1,)))

    try:
        u = tuple(max(b) for b in b_sets(L))
    except DomainError as exc:
        return Decision("no", "eta-or-bresinsky-failed", str(exc))

    for i in range(1, rho + 1):
        if eta[i] < 2:
            return Decision(
                "no", "eta-or-bresinsky-failed",
                f"eta_{i} = {eta[i]} < 2")
        if eta[i - 1] * u[i - 1] >= u[i]:
            return Decision(
                "no", "eta-or-bresinsky-failed",
                f"{u[i]} = max(B_{i}(L)) < eta_{i - 1}*max(B_{i - 1}(L)) "
                f"= {eta[i - 1] * u[i - 1]}")

    ok, reason = is_plane_branch_semigroup(u)
    if not ok:
        return Decision("no", "eta-or-bresinsky-failed", reason)
    gamma = NumericalSemigroup(u)

    report = stratify(gamma, max_splits=max_splits, seed=seed, jobs=jobs)
    unresolved = False
    for stratum in report.strata:
        if stratum.status != "resolved":
            unresolved = True
            continue
        if stratum.lambda_set == L:
            witness = report.family.member(stratum.witness)
            ev = ("matched a stratum of <" +
                  ", ".join(map(str, gamma.generators)) + ">")
            return _yes("matched", ev, witness, L, gamma)
    if unresolved:
        return Decision(
            "unresolved", "no-matching-stratum",
            "no resolved stratum matches and some strata are unresolved",
            gamma=gamma)
    return Decision(
        "no", "no-matching-stratum",
        "L is none of the attainable value sets for <" +
        ", ".join(map(str, gamma.generators)) + ">",
        gamma=gamma)
