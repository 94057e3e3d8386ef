import random
from fractions import Fraction

import pytest

from branchforms import (BranchParametrization, NumericalSemigroup,
                         characteristic_from_semigroup, semigroup_of)

CORPUS_GENS = [(2, 3), (2, 5), (3, 4), (4, 6, 13), (6, 9, 19)] + \
    [(4, 6, 2 * k + 1) for k in range(7, 11)]


def random_branch(gens, rng, tail_density=0.4):
    """Random plane branch with the given value semigroup: unit coefficients
    at the characteristic exponents, random rational tail above them."""
    gamma = NumericalSemigroup(gens)
    beta = characteristic_from_semigroup(gamma).exponents
    terms = {b: Fraction(rng.randint(1, 5)) for b in beta[1:]}
    for i in range(beta[-1] + 1, gamma.conductor + 2):
        if rng.random() < tail_density:
            terms[i] = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
    phi = BranchParametrization.plane(beta[0], terms)
    assert semigroup_of(phi).generators == gamma.generators
    return phi


@pytest.fixture(scope="session")
def corpus():
    """One deterministic random branch per corpus semigroup."""
    rng = random.Random(20240817)
    return [(gens, random_branch(gens, rng)) for gens in CORPUS_GENS]
