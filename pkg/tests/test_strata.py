import random
from fractions import Fraction

import pytest

from branchforms import (DomainError, NumericalSemigroup, ValueSet,
                         algorithm1_lambda, is_covered, normal_form_family,
                         recover_gamma, stratify)

ROWS_6919 = [
    (16, 22, 26, 29, 32, 35, 41),
    (16, 22, 26, 32, 35, 41),
    (16, 22, 29, 32, 35, 41),
    (16, 22, 29, 35, 41),
]


def lam_minus_gamma(lam, gamma):
    return tuple(z for z in lam.up_to(max(gamma.conductor, 1))
                 if z not in gamma)


@pytest.fixture(scope="module")
def report_6919():
    return stratify(NumericalSemigroup((6, 9, 19)), seed=5)


def test_family_support_6919():
    fam = normal_form_family(NumericalSemigroup((6, 9, 19)))
    assert fam.exponents == (10, 11, 14, 16, 17, 20, 23, 26, 29, 35)
    assert fam.fixed == ((10, Fraction(1)),)
    assert fam.free_names == ("a11", "a14", "a16", "a17", "a20",
                              "a23", "a26", "a29", "a35")


def test_family_support_trivial():
    fam = normal_form_family(NumericalSemigroup((2, 3)))
    assert fam.exponents == ()
    fam = normal_form_family(NumericalSemigroup((2, 5)))
    assert fam.exponents == ()


def test_family_rejects_non_plane():
    with pytest.raises(DomainError):
        normal_form_family(NumericalSemigroup((4, 5, 6)))


def test_stratification_6919_table(report_6919):
    rep = report_6919
    assert all(s.status == "resolved" for s in rep.strata)
    got = {lam_minus_gamma(l, rep.gamma) for l in rep.lambdas}
    assert got == set(ROWS_6919)
    # the generic stratum (no equalities) carries the full row
    generic = [s for s in rep.strata if not s.equalities]
    assert len(generic) == 1
    assert lam_minus_gamma(generic[0].lambda_set, rep.gamma) == ROWS_6919[0]


def test_stratum_witnesses_cross_validate(report_6919):
    rep = report_6919
    for s in rep.strata:
        assert s.witness is not None
        phi = rep.family.member(s.witness)
        assert algorithm1_lambda(phi).lambda_set == s.lambda_set


def test_stratum_lambdas_recover_gamma(report_6919):
    rep = report_6919
    for l in rep.lambdas:
        assert is_covered(l)
        assert recover_gamma(l).generators == rep.gamma.generators


def test_coverage_partition(report_6919):
    rep = report_6919
    rng = random.Random(99)
    pool = [Fraction(n, d) for n in range(-5, 6) for d in (1, 2, 3)]
    for _ in range(60):
        point = {n: rng.choice(pool) for n in rep.family.ring.names}
        homes = [s for s in rep.strata if s.contains(point)]
        assert len(homes) == 1
        lam = algorithm1_lambda(rep.family.member(point),
                                gamma=rep.gamma).lambda_set
        assert lam == homes[0].lambda_set


def test_single_stratum_classes():
    rep = stratify(NumericalSemigroup((2, 3)))
    assert len(rep.strata) == 1
    assert rep.strata[0].lambda_set == ValueSet((), 2)

    rep = stratify(NumericalSemigroup((2, 5)))
    assert rep.strata[0].lambda_set == ValueSet((2,), 4)


def test_4_6_13_matches_random_members():
    gamma = NumericalSemigroup((4, 6, 13))
    rep = stratify(gamma)
    observed = set()
    rng = random.Random(42)
    fam = rep.family
    pool = [Fraction(n, d) for n in range(-5, 6) for d in (1, 2)]
    for _ in range(50):
        point = {n: rng.choice(pool) for n in fam.ring.names}
        observed.add(algorithm1_lambda(fam.member(point),
                                       gamma=gamma).lambda_set)
    assert observed == set(rep.lambdas)


def test_split_budget_reports_unresolved():
    rep = stratify(NumericalSemigroup((6, 9, 19)), max_splits=0)
    assert any(s.status == "unresolved" for s in rep.strata)
