"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line."""
import random
import time
from contextlib import contextmanager

from hullcensus import hull_census, qcombinatorics
from hullcensus.brute_oracle import brute_spectrum
from hullcensus.equivalence import (all_classes, apply_monomial, canonical_form, classify,
                                    mass_formula_check)
from hullcensus.gf_linalg import hull_dimension, hull_dimension_by_intersection
from hullcensus.hull_census import product_count, sendrier_count, spectrum
from hullcensus.qcombinatorics import gaussian_binomial, gaussian_identity_suite
from hullcensus.ratio_lab import (DegenerateRatio, mu, predicted_mu, ratio_report,
                                  verify_main_theorem)

from conftest import ACCEPTANCE_LINES, random_code


@contextmanager
def criterion(number, title, limit=None):
    t0 = time.perf_counter()
    ok = False
    try:
        yield
        ok = True
    finally:
        dt = time.perf_counter() - t0
        slow = limit is not None and dt >= limit
        status = "PASS" if ok and not slow else "FAIL"
        budget = f" (limit {limit:g}s)" if limit is not None else ""
        line = f"criterion {number}: {status}  {title}  [{dt:.2f}s{budget}]"
        ACCEPTANCE_LINES[number] = line
        print(line)
    assert not slow, line


def _clear_caches():
    for fn in (hull_census.sigma, hull_census.sendrier_count, hull_census.product_count_even_q,
               hull_census.product_count_odd_q, hull_census.lcd_count_closed,
               qcombinatorics.gaussian_binomial):
        fn.cache_clear()


WORKED_SPECTRA = {
    (8, 4, 3): (48958182, 23587200, 3276000, 89600, 2240),
    (9, 4, 3): (3965612742, 1958327280, 241768800, 8265600, 91840),
    (10, 5, 2): (46792704, 46701312, 13708800, 1943100, 73440, 2295),
    (9, 4, 2): (1462272, 1370880, 428400, 45900, 2295),
    (8, 4, 4): (4598071296, 1520762880, 101359440, 1414400, 5525),
    (4, 2, 2): (20, 12, 3),
}


def test_criterion_1_worked_values():
    _clear_caches()
    with criterion(1, "worked-example values, both routes", limit=1.0):
        checked = 0
        for (n, k, q), values in WORKED_SPECTRA.items():
            for l, v in enumerate(values):
                assert sendrier_count(n, k, l, q) == v, (n, k, l, q)
                assert product_count(n, k, l, q) == v, (n, k, l, q)
                checked += 1
        assert checked == 29  # every entry of the six spectra


def test_criterion_2_cross_formula():
    _clear_caches()
    with criterion(2, "sendrier = product on n <= 14, q in {2,3,4,5}", limit=60.0):
        for q in (2, 3, 4, 5):
            for n in range(1, 15):
                for k in range(0, n // 2 + 1):
                    for l in range(k + 1):
                        assert sendrier_count(n, k, l, q) == product_count(n, k, l, q), (n, k, l, q)


def test_criterion_3_brute_force():
    with criterion(3, "brute force = closed forms (q=2 n<=9, q=3 n<=6, q=4 n<=5)", limit=600.0):
        for q, top in ((2, 9), (3, 6), (4, 5)):
            for n in range(2, top + 1):
                for k in range(1, n // 2 + 1):
                    assert brute_spectrum(n, k, q).counts == spectrum(n, k, q).counts, (n, k, q)


def test_criterion_4_monotonicity():
    with criterion(4, "ratio theorem on q in {2,3,4,5,7}, n <= 14"):
        reports, violations, excluded = verify_main_theorem((2, 3, 4, 5, 7), 14)
        assert violations == []
        assert all(q % 4 == 3 and n % 4 == 2 and l + 1 == k == n // 2 for q, n, k, l in excluded)
        half = [r for r in reports if r.regime == "half"]
        assert half and all(r.ratio >= r.bound for r in half)
        tight = {(r.q, r.n, r.k, r.l) for r in reports if r.tight}
        for r in reports:
            at_top = 2 * r.k == r.n and r.l == r.k - 1
            if r.regime == "half" and at_top:
                assert r.ratio == (r.q ** (r.l + 1) - 1) / 2
                assert (r.q, r.n, r.k, r.l) in tight
        assert all(r.regime == "half" for r in reports if r.tight)
        rep = ratio_report(8, 4, 3, 3)
        assert rep.ratio == 40 and rep.tight and rep.holds


def test_criterion_5_mu():
    with criterion(5, "mu values and predicted_mu consistency"):
        assert mu(9, 4, 3, 2) == 20
        assert mu(9, 4, 2, 2) == 9
        assert mu(10, 5, 4, 2) == 32
        assert mu(8, 4, 3, 3) == 40
        exact = 0
        for q in (2, 3, 4, 5):
            for n in range(2, 15):
                for k in range(1, n // 2 + 1):
                    for l in range(k):
                        try:
                            m = mu(n, k, l, q)
                        except DegenerateRatio:
                            continue
                        p = predicted_mu(n, k, l, q)
                        if p.kind == "exact":
                            exact += 1
                            assert m == p.value, (n, k, l, q)
                        elif p.kind == "lower_bound":
                            assert m >= p.value, (n, k, l, q)
        assert exact > 0


def test_criterion_6_classification():
    with criterion(6, "classification of the worked example and table cells", limit=300.0):
        every = classify(4, 2, 2)
        assert len(every.records) == 6 and every.census.by_hull() == [4, 1, 1]
        assert len(classify(4, 2, 2, 2, 2).records) == 2
        t = classify(6, 3, 2, 2, 2).census.totals()
        assert (t["linear"], t["even"], t["SO"], t["LCD"]) == (8, 3, 1, 2)
        t = classify(6, 3, 3, 2, 2).census.totals()
        assert (t["linear"], t["SO"], t["LCD"]) == (14, 0, 7)


def test_criterion_7_mass_formula():
    with criterion(7, "mass formula, q=2 n<=8 k<=4 and q=3 n<=6 k<=3"):
        for q, top, kmax in ((2, 8, 4), (3, 6, 3)):
            for n in range(1, top + 1):
                for k in range(1, min(kmax, n) + 1):
                    recs = all_classes(n, k, q)
                    for l in range(k + 1):
                        c = mass_formula_check(recs, n, k, l, q)
                        assert c.ok, (q, n, k, l, c)


def test_criterion_8_property_suites():
    with criterion(8, "property suites"):
        for q in range(2, 6):
            for n in range(1, 21):
                for k in range(0, n):
                    assert gaussian_identity_suite(n, k, q)
        for q in (2, 3, 4, 5, 7):
            for n in range(2, 15):
                for k in range(1, n):
                    counts = [sendrier_count(n, k, l, q) for l in range(k + 1)]
                    assert sum(counts) == gaussian_binomial(n, k, q)
                    for l in range(k + 1):
                        dual = sendrier_count(n, n - k, l, q) if l <= n - k else 0
                        assert counts[l] == dual
        rng = random.Random(8)
        for q in (2, 3, 4, 5, 7, 8, 9):
            for _ in range(1000):
                n = rng.randint(1, 10)
                c = random_code(rng, n, rng.randint(0, n), q)
                assert hull_dimension(c) == hull_dimension_by_intersection(c)
        for n, k, q in ((4, 2, 2), (6, 3, 2), (8, 4, 2), (5, 2, 3), (6, 3, 3)):
            for _ in range(500):
                c = random_code(rng, n, k, q)
                perm = list(range(n))
                rng.shuffle(perm)
                scales = [rng.randrange(1, q) for _ in range(n)]
                assert canonical_form(c) == canonical_form(apply_monomial(c, scales, perm))
