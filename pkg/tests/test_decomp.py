import random
from math import gcd

import pytest

from lpdiv.curves import dk_curve, gsum
from lpdiv.decomp import (
    F3_LC,
    F3_LD,
    SplitResult,
    Verdict,
    check_main_theorem,
    check_main_theorem_lpolys,
    converse_counts_check,
    counterexample_f3,
    gsum_invariance_scan,
    master_identity_check,
    split_two_prime,
    verify_conjecture_dk,
)
from lpdiv.intpoly import IntPoly
from lpdiv.zeta import LPolynomial, counts_from_lpoly, lpoly_from_counts

import oracles

L_D1 = LPolynomial(q=2, g=2, poly=IntPoly([1, 1, 0, 2, 4]))
L_X3 = LPolynomial(q=2, g=1, poly=IntPoly([1, 0, 2]))


class TestCheckMainTheorem:
    def test_d1_d2_holds(self):
        rep = check_main_theorem(dk_curve(1), dk_curve(2), 2, 10)
        assert rep.verdict is Verdict.HOLDS
        assert rep.quotient == IntPoly([1, 0, 2])
        assert rep.quotient_in_tk
        assert rep.hyp1_ok and rep.hyp2_squarefree

    def test_identical_curves_trivial(self):
        rep = check_main_theorem(dk_curve(1), dk_curve(1), 2, 10)
        assert rep.verdict is Verdict.HOLDS
        assert rep.quotient == IntPoly([1])

    def test_f3_pair_hypothesis_fails(self):
        rep = check_main_theorem_lpolys(F3_LC, F3_LD, 6, 12)
        assert rep.verdict is Verdict.HYPOTHESIS_FAILS
        assert rep.hyp1_first_fail == 2
        assert not rep.divides

    def test_hyp1_table_skips_multiples_of_k(self):
        rep = check_main_theorem_lpolys(L_D1, L_D1, 3, 9)
        assert [m for m, _ in rep.hyp1_equal] == [1, 2, 4, 5, 7, 8]

    def test_k_one_rejected(self):
        with pytest.raises(ValueError):
            check_main_theorem(dk_curve(1), dk_curve(2), 1, 10)

    def test_horizon_must_determine_lpolys(self):
        with pytest.raises(ValueError):
            check_main_theorem(dk_curve(1), dk_curve(2), 2, 2)

    def test_mismatched_base_fields(self):
        with pytest.raises(ValueError):
            check_main_theorem_lpolys(L_D1, F3_LD, 2, 8)

    def test_report_json_shape(self):
        rep = check_main_theorem(dk_curve(1), dk_curve(2), 2, 6)
        obj = rep.to_json_dict()
        assert obj["schema"] == 1
        assert obj["verdict"] == "TheoremApplies&Holds"
        assert obj["quotient"] == "2t^2+1"


class TestMasterIdentity:
    def test_symmetric(self):
        for k in (1, 2, 3):
            assert master_identity_check(L_D1, L_D1, k)

    def test_d1_d2(self):
        ld2 = verify_conjecture_dk(2).lpoly
        assert master_identity_check(L_D1, ld2, 2)

    def test_unequal_counts_fail(self):
        assert not master_identity_check(L_D1, L_X3, 2)

    def test_equivalence_with_count_equality(self):
        # built pairs with counts equal away from multiples of k satisfy the
        # identity; independently generated pairs almost surely do not
        rng = random.Random(17)
        for _ in range(20):
            q = rng.choice([2, 3])
            k = rng.choice([2, 3])
            lc = oracles.make_weil_lpoly(rng, q, 2)
            qpoly = oracles.make_weil_lpoly(rng, q**k, 1).poly
            ld = LPolynomial(q=q, g=lc.g + k, poly=qpoly.inflate(k) * lc.poly)
            assert master_identity_check(lc, ld, k)


class TestConverse:
    def test_d2_construction(self):
        assert converse_counts_check(L_D1, IntPoly([1, 2]), 2, 9)
        ld2 = verify_conjecture_dk(2).lpoly
        assert IntPoly([1, 2]).inflate(2) * L_D1.poly == ld2.poly

    def test_unit_quotient(self):
        assert converse_counts_check(L_D1, IntPoly([1]), 2, 10)

    def test_k3_horizon8(self):
        assert converse_counts_check(L_D1, IntPoly([1, 2]), 3, 8)

    def test_constant_term_required(self):
        with pytest.raises(ValueError):
            converse_counts_check(L_D1, IntPoly([2, 1]), 2, 5)

    def test_synthetic_always_true(self):
        rng = random.Random(23)
        for _ in range(50):
            q = rng.choice([2, 3, 4, 5])
            lc = oracles.make_weil_lpoly(rng, q, rng.randint(1, 4))
            qpoly = oracles.make_weil_lpoly(rng, q, rng.randint(0, 2)).poly
            k = rng.choice([2, 3, 5])
            assert converse_counts_check(lc, qpoly, k, 15)


class TestVerifyConjectureDk:
    def test_k1_unit(self):
        rep = verify_conjecture_dk(1)
        assert rep.divides and rep.quotient == IntPoly([1])
        assert rep.structure.kind == "unit"

    def test_k3_quotient(self):
        rep = verify_conjecture_dk(3)
        assert rep.divides
        assert rep.quotient == IntPoly([1, 0, 0, -4, 0, 0, 8])
        assert rep.structure.kind == "prime_power"
        assert rep.structure.primes == (3,)
        assert rep.structure.parts[0] == IntPoly([1, -4, 8])

    def test_k4_quotient(self):
        rep = verify_conjecture_dk(4)
        assert rep.divides
        expected = IntPoly([1, 0, 2] + [0] * 9 + [64, 0, 128])
        assert rep.quotient == expected
        assert rep.structure.kind == "prime_power"
        assert rep.structure.primes == (2,)

    def test_two_ranks(self):
        for k in (1, 2, 3):
            rep = verify_conjecture_dk(k)
            assert rep.lpoly_two_rank == 1
            assert rep.quotient_two_rank == 0

    def test_longer_horizon_cross_checks(self):
        rep = verify_conjecture_dk(2, horizon=8)
        assert rep.horizon == 8
        assert rep.divides


class TestSplitTwoPrime:
    def test_mixed_product(self):
        q = IntPoly([1, 0, 2]) * IntPoly([1, 0, 0, -1])
        res = split_two_prime(q, 2, 3)
        assert res.status == "split"
        assert res.a == IntPoly([1, 2])
        assert res.b == IntPoly([1, -1])
        assert res.a.inflate(2) * res.b.inflate(3) == q

    def test_one_factor_absent(self):
        res = split_two_prime(IntPoly([1, 0, 2]), 2, 3)
        assert res.status == "split"
        assert res.a == IntPoly([1, 2])
        assert res.b == IntPoly([1])

    def test_no_split(self):
        assert split_two_prime(IntPoly([1, 1, 1]), 2, 3).status == "no_split"

    def test_impossible_degree(self):
        assert split_two_prime(IntPoly([1, 1]), 2, 3).status == "no_split"

    def test_prime_order_swapped(self):
        q = IntPoly([1, 0, 2]) * IntPoly([1, 0, 0, -1])
        res = split_two_prime(q, 3, 2)
        assert res.status == "split"
        assert res.a == IntPoly([1, -1])  # the t^3 part now comes first
        assert res.b == IntPoly([1, 2])

    def test_pure_b_side(self):
        q = IntPoly([1, -1]).inflate(3)
        res = split_two_prime(q, 2, 3)
        assert res.status == "split"
        assert res.a == IntPoly([1]) and res.b == IntPoly([1, -1])

    def test_odd_odd_trivial_only(self):
        q = IntPoly([1, 2]).inflate(3)
        res = split_two_prime(q, 3, 5)
        assert res.status == "split"
        assert res.a == IntPoly([1, 2]) and res.b == IntPoly([1])

    def test_odd_odd_inconclusive(self):
        q = IntPoly([1, 2]).inflate(3) * IntPoly([1, 1]).inflate(5)
        assert split_two_prime(q, 3, 5).status == "inconclusive"

    def test_requires_unit_constant(self):
        with pytest.raises(ValueError):
            split_two_prime(IntPoly([2, 0, 1]), 2, 3)

    def test_requires_distinct_primes(self):
        with pytest.raises(ValueError):
            split_two_prime(IntPoly([1, 0, 1]), 2, 2)

    def test_random_products_recovered(self):
        rng = random.Random(31)
        hits = 0
        for _ in range(60):
            a = IntPoly([1] + [rng.randint(-3, 3) for _ in range(rng.randint(0, 3))])
            b = IntPoly([1] + [rng.randint(-3, 3) for _ in range(rng.randint(0, 3))])
            q = a.inflate(2) * b.inflate(3)
            res = split_two_prime(q, 2, 3)
            assert res.status in ("split", "inconclusive")
            if res.status == "split":
                hits += 1
                assert res.a.inflate(2) * res.b.inflate(3) == q
        assert hits >= 50  # the gcd route resolves almost all of them


class TestGsumScan:
    def test_small_scan_clean(self):
        table = gsum_invariance_scan(3, 10)
        assert table.mismatches == ()
        assert len(table.entries) == 30

    def test_entries_match_direct_recomputation(self):
        table = gsum_invariance_scan(3, 8)
        for k, m, v in table.entries:
            assert v == gsum(k, m)

    def test_gcd_rule_examples(self):
        table = gsum_invariance_scan(4, 6)
        assert table.value(2, 4) == table.value(2, 4)  # gcd(2,4)=2: self
        assert table.value(4, 6) == table.value(2, 6)  # gcd(4,6)=2


class TestCounterexample:
    def test_all_assertions_pass(self):
        rep = counterexample_f3()
        assert rep.ok
        assert rep.valid_lpolys
        assert rep.counts_equal_coprime_to_6
        assert rep.counts_differ_at_m2
        assert rep.s2_values == (-5, 5)
        assert rep.not_divisible
        assert rep.extensions_squarefree

    def test_metadata_flagged_unverified(self):
        rep = counterexample_f3()
        assert rep.curve_equations_metadata["verified"] is False

    def test_general_family_same_counts_coprime_to_6(self):
        # qt^2 - at + 1 against q^2 t^4 - aq t^3 + (a^2-q) t^2 - at + 1:
        # counts agree whenever gcd(m, 6) = 1
        for q, a in [(3, -1), (3, 1), (5, 2), (7, 3), (2, 1)]:
            l1 = IntPoly([1, -a, q])
            l2 = IntPoly([1, -a, a * a - q, -a * q, q * q])
            from lpdiv.intpoly import power_sums_from_poly

            s1 = power_sums_from_poly(l1, 20)
            s2 = power_sums_from_poly(l2, 20)
            for m in range(1, 21):
                if gcd(m, 6) == 1:
                    assert s1[m - 1] == s2[m - 1]


class TestTheoremOracles:
    def test_never_violation_on_synthetic_pairs(self):
        rng = random.Random(41)
        holds = 0
        for _ in range(40):
            q = rng.choice([2, 3, 4, 5])
            k = rng.choice([2, 3, 5])
            lc = oracles.make_weil_lpoly(rng, q, rng.randint(1, 3))
            if rng.random() < 0.7:
                # a pair satisfying hypothesis 1 by construction
                qpoly = IntPoly([1] + [rng.randint(-4, 4) for _ in range(rng.randint(0, 2))])
                ld = LPolynomial(q=q, g=lc.g + (k * qpoly.degree + 1) // 2,
                                 poly=qpoly.inflate(k) * lc.poly)
            else:
                ld = oracles.make_weil_lpoly(rng, q, rng.randint(1, 3))
            rep = check_main_theorem_lpolys(lc, ld, k, 2 * (lc.g + ld.g) + 1)
            assert rep.verdict is not Verdict.VIOLATION
            holds += rep.verdict is Verdict.HOLDS
        assert holds >= 10  # the criterion must actually fire, not just abstain
