import pytest

from growthdiagrams import (
    DomainError,
    Family,
    FrobeniusCoords,
    Rule,
    StarVariant,
    asym_indices,
    enumerate_partitions,
    family_down_set,
    family_up_set,
    from_frobenius,
    halves,
    phi_double,
    phi_halve,
    proj_apply,
    proj_domain,
    proj_rule,
    proj_sets,
    proj_unapply,
    size,
    up_set,
    down_set,
)


def test_proj_sets_examples():
    # for the full family the sets coincide with the self-pair up/down sets
    lam = (3, 2)
    for k in range(4):
        down, up = proj_sets(Family.ALL, lam, k)
        assert up == up_set(lam, lam, k)
        assert sorted(set(down)) == sorted(
            {mu for i in range(k + 1) for mu in down_set(lam, lam, i)}
        )
    # even columns: nonempty only at k = number of odd columns
    assert proj_sets(Family.EVEN_COLS, (2, 2), 0) == ([(2, 2)], [(2, 2)])
    assert proj_sets(Family.EVEN_COLS, (2, 2), 1) == ([], [])
    assert proj_sets(Family.ASYM_PLUS, (), 0) == ([()], [()])


def test_phi():
    assert halves((11, 6, 3)) == ((5, 3, 1), (6, 3, 2))
    assert phi_double((5, 3, 1)) == (10, 6, 2)
    assert phi_halve((10, 6, 2)) == (5, 3, 1)
    with pytest.raises(DomainError):
        phi_halve((3, 2))
    from growthdiagrams.partitions import odd_part_count

    assert odd_part_count((11, 6, 3)) == 2


def test_asym_indices_figures():
    lam = from_frobenius(FrobeniusCoords((7, 5, 3, 2, 0), (10, 7, 4, 2, 1)))
    idx = asym_indices(lam, 1)
    assert idx.exists
    assert idx.r_indices == (2, 3, 5)
    assert idx.s_indices == (1, 3, 5)
    lam = from_frobenius(FrobeniusCoords((7, 5, 3, 2), (8, 5, 2, 0)))
    idx = asym_indices(lam, -1)
    assert idx.exists
    assert idx.r_indices == (2, 3)
    assert idx.s_indices == (1, 3, 5)
    empty_plus = asym_indices((), 1)
    assert empty_plus.exists and empty_plus.r_indices == () and empty_plus.s_indices == ()
    assert asym_indices((), -1).s_indices == (1,)


def test_asym_indices_nonexistence():
    # (3,3,3) has Frobenius (2,1,0 | 2,1,0); vertical-strip -1-partners need
    # a_i <= b_i + 2 and a_i >= b_{i+1} + 2, which fails here
    idx = asym_indices((3, 3, 3), -1)
    assert not idx.exists and idx.r_indices == () and idx.s_indices == ()
    for lam in enumerate_partitions(8):
        for sign in (1, -1):
            idx = asym_indices(lam, sign)
            has_partner = bool(
                family_up_set(Family.ASYM_PLUS if sign == 1 else Family.ASYM_MINUS,
                              lam, 0)
                or any(
                    family_up_set(
                        Family.ASYM_PLUS if sign == 1 else Family.ASYM_MINUS, lam, k
                    )
                    for k in range(sum(lam) + 3)
                )
            )
            assert idx.exists == has_partner, (lam, sign)


def test_zigzag_counts():
    for lam in enumerate_partitions(10):
        plus = asym_indices(lam, 1)
        minus = asym_indices(lam, -1)
        if plus.exists:
            assert len(plus.s_indices) == len(plus.r_indices)
        if minus.exists:
            assert len(minus.s_indices) == len(minus.r_indices) + 1


def test_proj_apply_examples():
    assert proj_apply(proj_rule(Family.ALL, Rule.ROW), (3, 2), 2, (2, 1)) == (3, 3, 1)
    # even columns: (2,2,1,1)' = (4,2) has no odd column, the map is forced
    pf = proj_rule(Family.EVEN_COLS)
    assert proj_apply(pf, (2, 2, 1, 1), 0, (2, 2, 1, 1)) == (2, 2, 1, 1)
    assert proj_unapply(pf, (2, 2, 1, 1), (2, 2, 1, 1)) == ((2, 2, 1, 1), 0)
    # (3,1)' = (2,1,1): columns 2 and 3 are odd, so two cells move
    down, up = proj_sets(Family.EVEN_COLS, (3, 1), 2)
    assert down == [(1, 1)] and up == [(3, 3)]
    assert proj_apply(pf, (3, 1), 2, (1, 1)) == (3, 3)


def test_proj_errors():
    with pytest.raises(DomainError):
        proj_apply(proj_rule(Family.EVEN_COLS), (3, 1), 1, (2,))
    with pytest.raises(DomainError):
        proj_apply(proj_rule(Family.EVEN_ROWS), (2, 2), 1, (2, 2))
    with pytest.raises(DomainError):
        proj_apply(proj_rule(Family.ASYM_MINUS), (3, 3, 3), 0, (3, 3, 3))
    with pytest.raises(ValueError):
        proj_rule(Family.ASYM_PLUS, star=StarVariant.COL_STAR)
    with pytest.raises(ValueError):
        proj_rule(Family.ALL, Rule.DUAL_ROW)


@pytest.mark.parametrize(
    "family,variants",
    [
        (Family.ALL, [proj_rule(Family.ALL, Rule.ROW), proj_rule(Family.ALL, Rule.COL)]),
        (Family.EVEN_ROWS, [proj_rule(Family.EVEN_ROWS, Rule.COL),
                            proj_rule(Family.EVEN_ROWS, Rule.ROW)]),
        (Family.EVEN_COLS, [proj_rule(Family.EVEN_COLS)]),
        (Family.ASYM_PLUS, [proj_rule(Family.ASYM_PLUS)]),
        (Family.ASYM_MINUS, [proj_rule(Family.ASYM_MINUS),
                             proj_rule(Family.ASYM_MINUS, star=StarVariant.COL_STAR)]),
    ],
)
def test_proj_bijectivity(family, variants):
    for lam in enumerate_partitions(8):
        for k in range(5):
            down, up = proj_sets(family, lam, k)
            assert len(down) == len(up)
            for pf in variants:
                image = []
                for mu in down:
                    nu = proj_apply(pf, lam, k, mu)
                    image.append(nu)
                    back, c = proj_unapply(pf, lam, nu)
                    assert back == mu
                    assert c == k - (size(lam) - size(mu))
                assert sorted(image) == up, (family, lam, k)


def test_projection_cardinality_laws():
    for lam in enumerate_partitions(8):
        for k in range(5):
            assert len(family_up_set(Family.ALL, lam, k)) == sum(
                len(family_down_set(Family.ALL, lam, i)) for i in range(k + 1)
            )
            assert len(family_up_set(Family.EVEN_ROWS, lam, k)) == sum(
                len(family_down_set(Family.EVEN_ROWS, lam, k - 2 * i))
                for i in range(k // 2 + 1)
            )
            assert len(family_up_set(Family.EVEN_COLS, lam, k)) == len(
                family_down_set(Family.EVEN_COLS, lam, k)
            )
            assert len(family_up_set(Family.ASYM_PLUS, lam, k)) == len(
                family_down_set(Family.ASYM_PLUS, lam, k)
            )
            expect = len(family_down_set(Family.ASYM_MINUS, lam, k))
            if k >= 2:
                expect += len(family_down_set(Family.ASYM_MINUS, lam, k - 2))
            assert len(family_up_set(Family.ASYM_MINUS, lam, k)) == expect


def test_asym_size_relations():
    """+1 transports preserve size; -1 transports change it by 0 or 2."""
    pf_plus = proj_rule(Family.ASYM_PLUS)
    for lam in enumerate_partitions(8):
        for k in range(5):
            for mu in proj_domain(Family.ASYM_PLUS, lam, k):
                nu = proj_apply(pf_plus, lam, k, mu)
                assert size(nu) - size(lam) == size(lam) - size(mu)
            for mu in proj_domain(Family.ASYM_MINUS, lam, k):
                nu = proj_apply(proj_rule(Family.ASYM_MINUS), lam, k, mu)
                assert (size(nu) - size(lam)) - (size(lam) - size(mu)) in (0, 2)
