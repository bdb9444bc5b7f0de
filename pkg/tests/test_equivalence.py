import itertools
import random

import pytest

from hullcensus.equivalence import (CENSUS_COLUMNS, ClassificationBoundError, all_classes,
                                    apply_monomial, aut_order, canonical_form, census_rows,
                                    classify, conjecture_check, group_order,
                                    lcd_length_recursion, lcd_length_recursion_as_printed,
                                    mass_formula_check, orbit_size)
from hullcensus.gf_linalg import code_from_string, field_of_order, make_code

from conftest import random_code


def C(text, q=2):
    return code_from_string(field_of_order(q), text)


def _random_monomial(rng, n, q):
    perm = list(range(n))
    rng.shuffle(perm)
    return [rng.randrange(1, q) for _ in range(n)], perm


class TestCanonicalForm:
    def test_self_dual_four_pairings(self):
        assert canonical_form(C("1100 0011")) == canonical_form(C("1010 0101"))
        assert canonical_form(C("1100 0011")) != canonical_form(C("1110 0101"))

    def test_ternary_scaling(self):
        assert canonical_form(C("11", 3)) == canonical_form(C("12", 3))

    @pytest.mark.parametrize("n,k,q", [(4, 2, 2), (6, 3, 2), (7, 3, 2), (8, 4, 2),
                                       (4, 2, 3), (5, 2, 3), (6, 3, 3)])
    def test_class_function_on_random_transforms(self, n, k, q):
        rng = random.Random(n * 100 + k * 10 + q)
        for _ in range(500):
            c = random_code(rng, n, k, q)
            scales, perm = _random_monomial(rng, n, q)
            d = apply_monomial(c, scales, perm)
            assert canonical_form(c) == canonical_form(d)
            assert aut_order(c) == aut_order(d)

    def test_canonical_form_is_in_the_class(self):
        rng = random.Random(7)
        f = field_of_order(3)
        for _ in range(50):
            c = random_code(rng, 5, 2, 3)
            canon = make_code(f, canonical_form(c).to_rows(), 5)
            assert canonical_form(canon) == canonical_form(c)
            assert canon.key() <= c.key()  # least element of the orbit

    def test_bounds(self):
        with pytest.raises(ClassificationBoundError):
            canonical_form(C("1" * 11))
        with pytest.raises(ClassificationBoundError):
            canonical_form(C("11", 5))
        with pytest.raises(ClassificationBoundError):
            all_classes(9, 4, 2)


def _stabilizer_order(c):
    """Brute force over the full monomial group."""
    n, q = c.n, c.field.q
    target = c.rows
    count = 0
    for perm in itertools.permutations(range(n)):
        for scales in itertools.product(range(1, q), repeat=n):
            if apply_monomial(c, scales, perm).rows == target:
                count += 1
    return count


class TestAutomorphisms:
    def test_repetition_code(self):
        assert aut_order(C("1111")) == 24

    def test_self_dual_four(self):
        c6 = C("1100 0011")
        assert orbit_size(c6) == 3 and aut_order(c6) == 8

    def test_zero_column_ternary(self):
        # the zero column contributes a factor 2 for its free scaling
        assert aut_order(C("110", 3)) == _stabilizer_order(C("110", 3))

    @pytest.mark.parametrize("n,k,q", [(4, 2, 2), (5, 2, 2), (5, 3, 2), (3, 1, 3), (4, 2, 3)])
    def test_against_full_stabilizer(self, n, k, q):
        for rec in all_classes(n, k, q):
            c = make_code(field_of_order(q), rec.canonical_generator.to_rows(), n)
            assert rec.aut_order == aut_order(c) == _stabilizer_order(c)


class TestClassify:
    def test_four_two_binary(self):
        every = classify(4, 2, 2)
        assert len(every.records) == 6
        assert every.census.by_hull() == [4, 1, 1]
        good = classify(4, 2, 2, min_d=2, min_dd=2)
        assert len(good.records) == 2
        assert sorted(r.hull_dim for r in good.records) == [0, 2]
        assert sorted(r.aut_order for r in good.records) == [4, 8]

    def test_binary_six_three_filtered(self):
        t = classify(6, 3, 2, 2, 2).census.totals()
        assert t == {"linear": 8, "even": 3, "SO": 1, "LCD": 2}

    def test_ternary_six_three_filtered(self):
        t = classify(6, 3, 3, 2, 2).census.totals()
        assert (t["linear"], t["SO"], t["LCD"]) == (14, 0, 7)

    def test_records_sorted_and_deterministic(self):
        a = [r.canonical_bytes() for r in all_classes(6, 3, 2)]
        assert a == sorted(a)
        assert a == [r.canonical_bytes() for r in all_classes(6, 3, 2)]


class TestMassFormula:
    @pytest.mark.parametrize("n,k,q", [(4, 2, 2), (6, 3, 2), (7, 3, 2), (5, 2, 3), (4, 2, 3)])
    def test_all_hull_dimensions(self, n, k, q):
        recs = all_classes(n, k, q)
        for l in range(k + 1):
            assert mass_formula_check(recs, n, k, l, q)

    def test_mismatch_is_reported(self):
        recs = all_classes(4, 2, 2)[1:]
        bad = [mass_formula_check(recs, 4, 2, l, 2) for l in range(3)]
        assert not all(bad)
        assert any(c.labeled_total != c.formula_total for c in bad)

    def test_group_order(self):
        assert group_order(4, 2) == 24 and group_order(3, 3) == 48


def _lcd_tables(q, top):
    b, bs = {}, {}
    for m in range(1, top + 1):
        b[(m, 0)] = 1
        for k in range(1, m + 1):
            recs = [r for r in all_classes(m, k, q) if r.hull_dim == 0]
            b[(m, k)] = len(recs)
            bs[(m, k)] = sum(1 for r in recs if r.min_d >= 2 and r.dual_d >= 2)
    return b, bs


class TestLcdRecursion:
    @pytest.mark.parametrize("q,top", [(2, 7), (3, 5)])
    def test_matches_direct_classification(self, q, top):
        b, bs = _lcd_tables(q, top)
        for n in range(2, top + 1):
            for k in range(1, n):
                assert lcd_length_recursion(bs, n, k) == b[(n, k)], (q, n, k)

    def test_printed_second_term_overcounts(self):
        b, bs = _lcd_tables(2, 6)
        assert lcd_length_recursion_as_printed(bs, b, 6, 3) == 12
        assert b[(6, 3)] == 8


class TestConjecture:
    def test_four_two_reports_failure(self):
        rep = conjecture_check(4, 2, 2)
        assert rep.counts == (4, 1, 1) and rep.holds is False

    def test_computed_instances(self):
        assert conjecture_check(6, 3, 2).counts == (8, 11, 2, 1)
        assert conjecture_check(8, 4, 2).counts == (42, 32, 26, 4, 2)
        assert conjecture_check(6, 3, 3).counts == (17, 10, 4, 0)

    def test_needs_n_at_least_2k(self):
        with pytest.raises(ValueError):
            conjecture_check(5, 3, 2)


def test_census_rows():
    rows = census_rows(classify(4, 2, 2).records)
    assert len(rows) == 6
    assert all(set(r) == set(CENSUS_COLUMNS) for r in rows)
    sd = [r for r in rows if r["hull_dim"] == 2]
    assert sd[0]["flags"] == "even|SO" and sd[0]["aut_order"] == "8"
