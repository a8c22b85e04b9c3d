import pytest

from growthdiagrams import (
    DomainError,
    Rule,
    apply_rule,
    down_set,
    size,
    unapply_rule,
    up_set,
)
from growthdiagrams.interlacing import down_sets_through, up_sets_through
from growthdiagrams.partitions import enumerate_partitions

# the worked insertion table for lam = rho = (3,2), k = 2
TABLE_ROW = {
    (3, 2): (5, 2),
    (2, 2): (4, 3),
    (3, 1): (4, 2, 1),
    (2, 1): (3, 3, 1),
    (3,): (3, 2, 2),
}
TABLE_COL = {
    (3, 2): (3, 2, 2),
    (2, 2): (4, 2, 1),
    (3, 1): (3, 3, 1),
    (2, 1): (5, 2),
    (3,): (4, 3),
}


@pytest.mark.parametrize("rule,table", [(Rule.ROW, TABLE_ROW), (Rule.COL, TABLE_COL)])
def test_worked_table(rule, table):
    lam = (3, 2)
    for mu, nu in table.items():
        assert apply_rule(rule, lam, lam, 2, mu) == nu


def test_unapply_examples():
    lam = (3, 2)
    assert unapply_rule(Rule.ROW, lam, lam, (5, 2)) == ((3, 2), 2)
    # a = |nu| + |mu| - |lam| - |rho| = 7 + 3 - 10 = 0 here
    assert unapply_rule(Rule.COL, lam, lam, (5, 2)) == ((2, 1), 0)
    # k = 0 forces the trivial square for every rule
    for rule in Rule:
        assert unapply_rule(rule, (2, 1), (2, 2), (2, 2)) == ((2, 1), 0)
        assert apply_rule(rule, (2, 1), (2, 2), 0, (2, 1)) == (2, 2)


def test_domain_errors():
    lam = (3, 2)
    with pytest.raises(DomainError):
        apply_rule(Rule.ROW, lam, lam, 1, (2, 1))  # |R(mu)| = 2 > k
    with pytest.raises(DomainError):
        apply_rule(Rule.DUAL_ROW, lam, lam, 3, (3, 2))  # |R| = 0 not in {3, 2}
    with pytest.raises(DomainError):
        apply_rule(Rule.ROW, lam, lam, -1, (3, 2))
    with pytest.raises(DomainError):
        unapply_rule(Rule.ROW, lam, lam, (3, 2, 2, 1))  # not in any up set


def test_bijectivity_box():
    """Every rule maps its stated domain bijectively onto the up set, and
    unapply inverts elementwise; 3x3 box, k <= 4."""
    box = [p for p in enumerate_partitions(9, (3, 3))]
    for lam in box:
        for rho in box:
            D = down_sets_through(lam, rho, 4)
            U = up_sets_through(lam, rho, 4)
            Ds = down_sets_through(lam, rho, 4, dual=True)
            Us = up_sets_through(lam, rho, 4, dual=True)
            dom = []
            for k in range(5):
                dom.extend(D[k])
                ddom = Ds[k] + (Ds[k - 1] if k else [])
                for rule, els, target in (
                    (Rule.ROW, dom, U[k]),
                    (Rule.COL, dom, U[k]),
                    (Rule.DUAL_ROW, ddom, Us[k]),
                    (Rule.DUAL_COL, ddom, Us[k]),
                ):
                    image = []
                    for mu in els:
                        nu = apply_rule(rule, lam, rho, k, mu)
                        image.append(nu)
                        back, a = unapply_rule(rule, lam, rho, nu)
                        assert back == mu
                        assert a == size(nu) + size(mu) - size(lam) - size(rho)
                        assert a >= 0
                        if rule.dual:
                            assert a in (0, 1)
                    assert sorted(image) == target, (rule, lam, rho, k)


def test_symmetry():
    """Row and col rules are symmetric in (lam, rho)."""
    box = enumerate_partitions(6)
    for lam in box:
        for rho in box:
            for k in range(4):
                for mu in down_set(lam, rho, k):
                    for kk in range(k, 5):
                        for rule in (Rule.ROW, Rule.COL):
                            assert apply_rule(rule, lam, rho, kk, mu) == apply_rule(
                                rule, rho, lam, kk, mu
                            )


def test_degree_bookkeeping():
    lam, rho = (4, 2, 1), (3, 3)
    for k in range(5):
        for mu in down_set(lam, rho, 2):
            if 2 <= k:
                from growthdiagrams.partitions import join, meet

                nu = apply_rule(Rule.ROW, lam, rho, k, mu)
                assert size(nu) - size(join(lam, rho)) == k
                assert (size(meet(lam, rho)) - size(mu)) + (
                    size(nu) + size(mu) - size(lam) - size(rho)
                ) == k
