import random
import re
from fractions import Fraction

import pytest

from conftest import assert_consistent
from abundancy.interval import (
    Comparison,
    IntervalReal,
    PrecisionConfig,
    decide,
    decide_order,
    exp_interval,
    exp_ratio,
    ln_ratio,
    pow_interval,
    sqrt_ratio,
)


def test_precision_config_validation():
    with pytest.raises(ValueError):
        PrecisionConfig(512, 256)
    assert list(PrecisionConfig(256, 1024).ladder()) == [256, 512, 1024]
    assert list(PrecisionConfig(256, 256).ladder()) == [256]


def test_interval_invariant():
    with pytest.raises(ValueError):
        IntervalReal(Fraction(2), Fraction(1), 256)


def test_ln_of_one_is_exact_zero():
    x = ln_ratio(1)
    assert x.lo == 0 and x.hi == 0


def test_ln_rejects_nonpositive():
    with pytest.raises(ValueError):
        ln_ratio(0)
    with pytest.raises(ValueError):
        ln_ratio(Fraction(-3, 2))


def test_ln_frozen_values():
    assert_consistent(ln_ratio(Fraction(4, 3)), "ln(4/3)")
    assert_consistent(ln_ratio(Fraction(13, 9)), "ln(13/9)")
    assert_consistent(ln_ratio(2), "ln(2)")


def test_ln_width_contract():
    # achieved width stays below 2^-bits (the guard bits absorb rounding)
    for r in (Fraction(4, 3), Fraction(10**13 + 7, 11), Fraction(1, 97)):
        x = ln_ratio(r, 256)
        assert x.width < Fraction(1, 2**256)


def test_exp_of_zero():
    x = exp_ratio(0)
    assert x.contains(1)
    assert x.width < Fraction(1, 2**256)


def test_exp_ln_containment():
    rng = random.Random(3)
    for _ in range(60):
        r = Fraction(rng.randrange(1, 10**6), rng.randrange(1, 10**5))
        enclosure = exp_interval(ln_ratio(r, 192), 192)
        assert enclosure.contains(r), r


def test_exp_negative_arguments():
    x = exp_ratio(Fraction(-41, 5), 128)
    y = exp_ratio(Fraction(41, 5), 128)
    product = x * y
    assert product.contains(1)


def test_pow_identity_exponent():
    out = pow_interval(IntervalReal.exact(Fraction(7, 3)), IntervalReal.exact(1))
    assert out.contains(Fraction(7, 3))
    assert out.width < Fraction(1, 2**200)
    rng = random.Random(13)
    for _ in range(40):
        r = Fraction(rng.randrange(1, 10**4), rng.randrange(1, 10**3))
        out = pow_interval(IntervalReal.exact(r, 128), IntervalReal.exact(1, 128), 128)
        assert out.contains(r), r


def test_pow_square_root_agrees_with_isqrt_refinement():
    via_pow = pow_interval(IntervalReal.exact(2), IntervalReal.exact(Fraction(1, 2)))
    via_isqrt = sqrt_ratio(2)
    assert_consistent(via_pow, "sqrt(2)")
    assert_consistent(via_isqrt, "sqrt(2)")
    assert via_pow.overlaps(via_isqrt)


def test_pow_frozen_bound():
    expo = ln_ratio(Fraction(4, 3)) / ln_ratio(Fraction(13, 9))
    out = pow_interval(IntervalReal.exact(Fraction(8, 5)), expo)
    assert_consistent(out, "bound(8/5,3)")
    assert out.width < Fraction(1, 10**10)


def test_pow_rejects_nonpositive_base():
    with pytest.raises(ValueError):
        pow_interval(IntervalReal(Fraction(-1), Fraction(1), 256), IntervalReal.exact(2))


def test_sqrt_three_ceiling():
    x = sqrt_ratio(3) + 1
    assert_consistent(x, "1+sqrt(3)")


def test_sqrt_containment_squares():
    rng = random.Random(5)
    for _ in range(40):
        r = Fraction(rng.randrange(1, 10**8), rng.randrange(1, 10**4))
        s = sqrt_ratio(r, 128)
        assert s.lo * s.lo <= r <= s.hi * s.hi


def test_directed_rounding_ring_ops():
    # endpoint arithmetic is exact, so the interval image always contains the
    # exact rational result
    rng = random.Random(9)
    for _ in range(100):
        a = Fraction(rng.randrange(-10**6, 10**6), rng.randrange(1, 10**4))
        b = Fraction(rng.randrange(-10**6, 10**6), rng.randrange(1, 10**4))
        ia, ib = IntervalReal.exact(a), IntervalReal.exact(b)
        assert (ia + ib).contains(a + b)
        assert (ia * ib).contains(a * b)
        assert (ia - ib).contains(a - b)
        if b != 0:
            if b > 0 or b < 0:
                assert (ia / ib).contains(a / b)


def test_monotone_refinement():
    for r in (Fraction(4, 3), Fraction(13, 9), Fraction(31, 25)):
        w256 = ln_ratio(r, 256).width
        w512 = ln_ratio(r, 512).width
        assert w512 <= w256


def test_division_rejects_interval_through_zero():
    with pytest.raises(ZeroDivisionError):
        IntervalReal.exact(1) / IntervalReal(Fraction(-1), Fraction(1), 256)


def test_compare_one_shot():
    assert ln_ratio(Fraction(4, 3)).compare(Fraction(1, 3)) is Comparison.LESS
    assert ln_ratio(2).compare(Fraction(1, 3)) is Comparison.GREATER
    assert IntervalReal.exact(0).compare(0) is Comparison.UNDECIDED  # touching


def test_decide_escalates():
    base = sqrt_ratio(2, 256)
    threshold = base.midpoint  # straddles at 256 bits by construction
    assert base.compare(threshold) is Comparison.UNDECIDED
    verdict, enclosure = decide(lambda bits: sqrt_ratio(2, bits), threshold)
    assert verdict is not Comparison.UNDECIDED
    assert enclosure.bits > 256


def test_decide_touching_stays_undecided():
    verdict, _ = decide(lambda bits: IntervalReal.exact(0, bits), 0, PrecisionConfig(64, 256))
    assert verdict is Comparison.UNDECIDED


def test_decide_against_rational_proxy():
    # 1 + 2^(ln(6/5)/ln(31/25)) ~ 2.7995 is above the sqrt(3) proxy 2.732050808
    def limit(bits):
        expo = ln_ratio(Fraction(6, 5), bits) / ln_ratio(Fraction(31, 25), bits)
        return pow_interval(IntervalReal.exact(2, bits), expo, bits) + 1

    verdict, _ = decide(limit, Fraction(2732050808, 10**9))
    assert verdict is Comparison.GREATER


def test_decide_order():
    verdict, a, b = decide_order(
        lambda bits: ln_ratio(Fraction(4, 3), bits),
        lambda bits: ln_ratio(Fraction(13, 9), bits),
    )
    assert verdict is Comparison.LESS
    assert a.hi < b.lo


def test_render_format():
    text = ln_ratio(Fraction(4, 3)).render()
    assert re.fullmatch(r"0\.2876820725 ± \de-\d+ @256b", text)
    bound = pow_interval(
        IntervalReal.exact(Fraction(8, 5)),
        ln_ratio(Fraction(4, 3)) / ln_ratio(Fraction(13, 9)),
    )
    assert bound.render().startswith("1.444405574 ")
    assert bound.render().endswith("@256b")


def test_render_edge_cases():
    assert IntervalReal.exact(0).render().startswith("0 ±")
    assert IntervalReal.exact(Fraction(-3, 2)).render().startswith("-1.5")
    small = IntervalReal.exact(Fraction(1, 10**20))
    assert "e-20" in small.render()
