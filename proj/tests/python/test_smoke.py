import pytest

import fdpi

SEXTIC_FIELDS = [[-3, 0, 1], [-2, 0, 0, 1]]
DODECIC_FIELDS = [[19, 1, 1, 1], [5, -7, -6, 0, 1]]


def brute_roots(f, p):
    return [x for x in range(p) if sum(c * x**i for i, c in enumerate(f)) % p == 0]


def test_composite_resultant():
    assert fdpi.composite_resultant([-3, 0, 1], [-2, 0, 0, 1]) == [-23, -36, 27, -4, -9, 0, 1]
    assert fdpi.composite_resultant([1, 0, 1], [-2, 0, 1]) == [9, 0, -2, 0, 1]


def test_discriminant():
    assert fdpi.discriminant([-1, -3, 0, 1]) == 81
    assert fdpi.discriminant([19, 1, 1, 1]) == -9484


def test_roots_mod_p_matches_brute_force():
    f = [-23, -36, 27, -4, -9, 0, 1]
    for p in (2, 3, 17, 101, 211):
        assert fdpi.roots_mod_p(f, p) == brute_roots(f, p)


def test_big_integers_round_trip():
    p = 2**89 - 1
    assert fdpi.roots_mod_p([-(10**20), 1], p) == [10**20]


def test_build_compositum():
    spec = fdpi.build_compositum(SEXTIC_FIELDS)
    assert spec["degree"] == 6
    assert spec["polynomial"] == [-23, -36, 27, -4, -9, 0, 1]


def test_factor_base_strategies():
    standard = fdpi.factor_base(SEXTIC_FIELDS, 20)
    composite = fdpi.factor_base(SEXTIC_FIELDS, 20, "composite")
    assert (17, 13) in standard
    assert (17, 13) not in composite
    assert set(composite) <= set(standard)
    assert fdpi.factor_base(SEXTIC_FIELDS, 1) == []


def test_census():
    rows, misses = fdpi.bench_census([[-2, 0, 1], [-1, -3, 0, 1]], 5000, buckets=4)
    assert len(rows) == 4
    assert all(std == comp for _, _, std, comp in rows)
    assert misses == []


def test_divisibility():
    chi_a, chi_b = fdpi.chi_generator(DODECIC_FIELDS, 1, 1)
    assert chi_a == [-50, -23, -4]
    assert chi_b == [-18, 2, 2, 1]
    assert fdpi.combination_divides(DODECIC_FIELDS, 1, 3, 11, 1, 1) is None


def test_ideal_norm():
    # N(1 + sqrt 2) = -1
    assert fdpi.ideal_norm([-2, 0, 1], 1, 1) == -1


def test_verify_paper_examples():
    ok, text = fdpi.verify_paper_examples()
    assert ok
    assert "PASS 12/12 assertions" in text
    bad, text = fdpi.verify_paper_examples("Example only1normal resultant")
    assert not bad


def test_errors_carry_kind():
    with pytest.raises(fdpi.Error) as info:
        fdpi.build_compositum([[-2, 0, 1], [-2, 0, 1]])
    assert info.value.kind == "not-disjoint"
    with pytest.raises(ValueError):
        fdpi.ideal_norm([-2, 0, 1], 2, 4)
