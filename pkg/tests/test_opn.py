import random
from fractions import Fraction

import pytest

from conftest import assert_consistent
from abundancy.arith import factorize, primes_up_to
from abundancy.interval import Comparison, decide
from abundancy.opn import (
    CheckStatus,
    EulerianCandidate,
    OrderPredicates,
    PremiseError,
    ResidualCase,
    acquaah_konyagin_holds,
    ceiling_interval,
    ceiling_scan,
    euler_sum_bound,
    euler_sum_bound_limit,
    order_predicates,
    residual_case_classify,
    sample_surrogate,
    validate_eulerian,
)
from abundancy.interval import sqrt_ratio


def candidate(q, k, n):
    return EulerianCandidate(q, k, factorize(n))


# ---------------------------------------------------------------------------
# candidate model
# ---------------------------------------------------------------------------


def test_candidate_reconstruction():
    c = candidate(5, 1, 3)
    assert c.value == 45
    assert c.euler_part == 5
    assert c.root == 3
    assert str(c.full_factorization()) == "3^2*5"
    assert c.least_prime() == 3


def test_candidate_parse_round_trip():
    c = EulerianCandidate.parse("q=5 k=1 n=3^2")
    assert (c.q, c.k, c.root) == (5, 1, 9)
    assert str(c) == "q=5 k=1 n=3^2"
    assert EulerianCandidate.parse("q=13 k=1 n=9").root == 9
    with pytest.raises(ValueError):
        EulerianCandidate.parse("q=5 k=1")
    with pytest.raises(ValueError):
        EulerianCandidate.parse("5 1 9")


def test_candidate_syntax_validation():
    with pytest.raises(ValueError):
        EulerianCandidate(1, 1, factorize(3))
    with pytest.raises(ValueError):
        EulerianCandidate(5, 0, factorize(3))


def test_candidate_conjecture_flag():
    assert candidate(5, 1, 3).descartes_frenicle_sorli
    assert not candidate(5, 5, 3).descartes_frenicle_sorli


# ---------------------------------------------------------------------------
# validate_eulerian
# ---------------------------------------------------------------------------


def test_validate_small_candidate():
    report = validate_eulerian(candidate(5, 1, 3))
    names = [c.name for c in report.checks]
    assert len(names) == len(set(names))  # every check exactly once
    assert report.status_of("q prime") is CheckStatus.PASS
    assert report.status_of("q = 1 (mod 4)") is CheckStatus.PASS
    assert report.status_of("N > 10^1500") is CheckStatus.FAIL
    assert report.status_of("omega(N) >= 10") is CheckStatus.FAIL
    residual = next(c for c in report.checks if c.name == "sigma(N) = 2N")
    assert residual.status is CheckStatus.FAIL
    assert "78/45" in residual.witness and "26/15" in residual.witness


def test_validate_form_checks_pass():
    report = validate_eulerian(candidate(13, 1, 9))
    for name in ("q prime", "q = 1 (mod 4)", "k = 1 (mod 4)", "gcd(q, n) = 1", "n odd"):
        assert report.status_of(name) is CheckStatus.PASS
    assert report.status_of("N > 10^1500") is CheckStatus.FAIL
    assert report.status_of("omega(N) >= 10") is CheckStatus.FAIL
    # I(9) = 13/9 > 1.44440557..., decided exactly against the enclosure
    assert report.status_of("I(n) > index lower bound") is CheckStatus.PASS
    assert report.status_of("I(q^k) < 5/4") is CheckStatus.PASS


def test_validate_k_residue_failure():
    report = validate_eulerian(candidate(5, 2, 3))
    assert report.status_of("k = 1 (mod 4)") is CheckStatus.FAIL


def test_validate_k_gt_one_estimate_flag():
    # k > 1 and q >= n violates the q < n estimate
    report = validate_eulerian(candidate(13, 5, 9))
    assert report.status_of("q < n for k > 1") is CheckStatus.FAIL
    report = validate_eulerian(candidate(5, 5, 9))
    assert report.status_of("q < n for k > 1") is CheckStatus.PASS


def test_validate_nonprime_and_even_candidates():
    report = validate_eulerian(candidate(9, 1, 5))
    assert report.status_of("q prime") is CheckStatus.FAIL
    report = validate_eulerian(candidate(5, 1, 6))
    assert report.status_of("n odd") is CheckStatus.FAIL
    assert report.status_of("I(n) > index lower bound") is CheckStatus.FAIL


def test_validate_coprimality_failure():
    report = validate_eulerian(candidate(5, 1, 15))
    assert report.status_of("gcd(q, n) = 1") is CheckStatus.FAIL


def test_validate_huge_candidate_size_check_passes():
    # q^k with k = 1 (mod 4) large enough to clear 10^1500 exactly
    report = validate_eulerian(candidate(5, 2161, 3))
    assert report.status_of("N > 10^1500") is CheckStatus.PASS
    assert report.status_of("k = 1 (mod 4)") is CheckStatus.PASS


# ---------------------------------------------------------------------------
# Acquaah-Konyagin exact test
# ---------------------------------------------------------------------------


def test_acquaah_konyagin_examples():
    assert acquaah_konyagin_holds(5, 3)  # 25 < 27
    assert not acquaah_konyagin_holds(13, 7)  # 169 > 147
    assert acquaah_konyagin_holds(13, 8)  # 169 < 192


def test_acquaah_konyagin_matches_enclosures():
    rng = random.Random(17)
    for _ in range(100):
        q = rng.randrange(1, 10**6)
        n = rng.randrange(1, 10**6)
        verdict, _ = decide(lambda bits: sqrt_ratio(3 * n * n, bits), q)
        # sqrt(3 n^2) is irrational for n >= 1, so the verdict is never UNDECIDED
        assert verdict is not Comparison.UNDECIDED
        assert acquaah_konyagin_holds(q, n) == (verdict is Comparison.GREATER)


# ---------------------------------------------------------------------------
# order predicates
# ---------------------------------------------------------------------------


def test_order_predicates_examples():
    p = order_predicates(candidate(5, 1, 9))
    assert (p.euler_lt_root, p.cross_lt, p.sigma_lt) == (True, True, True)

    p = order_predicates(candidate(13, 1, 9))
    assert (p.euler_lt_root, p.cross_lt, p.sigma_lt) == (False, False, False)

    p = order_predicates(candidate(5, 1, 3))
    assert (p.euler_lt_root, p.cross_lt, p.sigma_lt) == (False, False, False)
    assert p.implications_hold


def test_order_predicates_premise_errors():
    with pytest.raises(PremiseError):
        order_predicates(candidate(5, 1, 5**2))  # I(25)^3 < 2
    with pytest.raises(ValueError):
        order_predicates(candidate(9, 1, 3))  # q not prime


def test_order_predicates_implication_logic():
    assert OrderPredicates(True, True, True).implications_hold
    assert not OrderPredicates(True, False, False).implications_hold
    assert not OrderPredicates(False, True, False).implications_hold
    assert OrderPredicates(False, False, True).implications_hold  # converse failing is fine
    assert not OrderPredicates(False, False, True).converse_observed


def test_order_predicates_corpus():
    rng = random.Random(23)
    converse_failures = 0
    for _ in range(300):
        c = sample_surrogate(rng)
        p = order_predicates(c)
        assert p.implications_hold, str(c)
        converse_failures += not p.converse_observed
    # informational: the converse is not asserted, only observed
    assert converse_failures >= 0


def test_surrogate_sampler_contract():
    rng = random.Random(31)
    from abundancy.index import abundancy_index

    for _ in range(40):
        c = sample_surrogate(rng)
        assert c.q % 4 == 1 and c.k % 4 == 1
        assert c.root % 2 == 1
        from math import gcd

        assert gcd(c.q, c.root) == 1
        assert abundancy_index(c.n) ** 3 > 2


# ---------------------------------------------------------------------------
# Euler-prime bound and ceiling scan
# ---------------------------------------------------------------------------


def test_euler_sum_bound_frozen_values():
    assert_consistent(euler_sum_bound(5, 5), "f(5,5)")
    assert_consistent(euler_sum_bound(13, 5), "f(13,5)")
    assert_consistent(euler_sum_bound(5, 3), "f(5,3)")
    assert_consistent(euler_sum_bound_limit(5), "limit(5)")
    assert_consistent(euler_sum_bound_limit(3), "limit(3)")
    assert_consistent(ceiling_interval(), "1+sqrt(3)")


def test_euler_sum_bound_rejects_bad_inputs():
    with pytest.raises(ValueError):
        euler_sum_bound(7, 5)  # q = 3 (mod 4)
    with pytest.raises(ValueError):
        euler_sum_bound(4, 5)
    with pytest.raises(ValueError):
        euler_sum_bound(5, 4)


def test_exponent_equals_reciprocal_exponent():
    # the exponent in f(q, u) is 1/x(u): enclosures must overlap
    from abundancy.index import prime_power_exponent, reciprocal_exponent

    for u in (3, 5):
        recip = reciprocal_exponent(u, 256)
        x = prime_power_exponent(u, 1).value
        assert (recip * x).contains(1)


def test_ceiling_scan_u5_all_clear_with_margin():
    report = ceiling_scan(100, 5)
    per_q = [c for c in report.checks if c.name.startswith("f(")]
    assert len(per_q) == len([q for q in primes_up_to(100) if q % 4 == 1 and q >= 5])
    assert all(c.status is CheckStatus.PASS for c in per_q)
    minimum = next(c for c in report.checks if c.name == "minimum over scan")
    assert "q = 5" in minimum.witness
    limit = next(c for c in report.checks if c.name == "limit as q grows")
    assert limit.status is CheckStatus.PASS
    assert report.all_pass


def test_ceiling_scan_u3_no_contradiction():
    report = ceiling_scan(100, 3)
    per_q = [c for c in report.checks if c.name.startswith("f(")]
    assert all(c.status is CheckStatus.PASS for c in per_q)  # PASS means f < ceiling here
    limit = next(c for c in report.checks if c.name == "limit as q grows")
    assert limit.status is CheckStatus.PASS


def test_ceiling_scan_empty_grid():
    report = ceiling_scan(4, 5)
    per_q = [c for c in report.checks if c.name.startswith("f(")]
    assert per_q == []


def test_ceiling_scan_margin_failure_is_certified():
    # an absurd margin requirement must FAIL (certified), not hang or pass
    report = ceiling_scan(30, 5, required_margin=Fraction(1, 2))
    per_q = [c for c in report.checks if c.name.startswith("f(")]
    assert all(c.status is CheckStatus.FAIL for c in per_q)


def test_euler_sum_bound_increases_on_grid():
    values = [euler_sum_bound(q, 5) for q in primes_up_to(200) if q % 4 == 1 and q >= 5]
    for smaller, bigger in zip(values, values[1:]):
        assert smaller.hi < bigger.lo
    values = [euler_sum_bound(q, 3) for q in primes_up_to(200) if q % 4 == 1 and q >= 5]
    for smaller, bigger in zip(values, values[1:]):
        assert smaller.hi < bigger.lo


# ---------------------------------------------------------------------------
# residual classification
# ---------------------------------------------------------------------------


def test_residual_classify_examples():
    assert residual_case_classify(5).case is ResidualCase.CASE_Q5
    assert residual_case_classify(17).case is ResidualCase.CASE_5_MOD_12
    assert residual_case_classify(13).case is ResidualCase.CASE_1_MOD_12


def test_residual_classify_notes():
    assert "Iannucci" in residual_case_classify(5).notes
    assert "(q+1)/2 = 9" in residual_case_classify(17).notes
    assert "not divisible by 3" in residual_case_classify(13).notes


def test_residual_classify_rejects_bad_q():
    with pytest.raises(ValueError):
        residual_case_classify(9)
    with pytest.raises(ValueError):
        residual_case_classify(7)  # 7 = 3 (mod 4)


def test_residual_partition():
    # each admissible q below 1e5 lands in exactly one class, and the classes
    # with forced 3 | n^2 are exactly those with 3 | (q+1)/2
    seen = {case: 0 for case in ResidualCase}
    for q in primes_up_to(10**5):
        if q % 4 != 1:
            continue
        result = residual_case_classify(q)
        seen[result.case] += 1
        divisible = (q + 1) // 2 % 3 == 0
        in_divisible_classes = result.case in (ResidualCase.CASE_Q5, ResidualCase.CASE_5_MOD_12)
        assert divisible == in_divisible_classes, q
    assert seen[ResidualCase.CASE_Q5] == 1
    assert seen[ResidualCase.CASE_5_MOD_12] > 0 and seen[ResidualCase.CASE_1_MOD_12] > 0


def test_margin_at_minimum_matches_derived_value():
    f55 = euler_sum_bound(5, 5)
    margin = f55 - ceiling_interval()
    derived = Fraction("0.009763022968414144")  # frozen to 16 places
    tol = Fraction(1, 10**15)
    assert derived - tol <= margin.lo <= margin.hi <= derived + tol
    assert margin.lo > Fraction(1, 1000)
