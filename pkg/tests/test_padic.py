import math
from fractions import Fraction

import pytest

from twistbern.bernoulli import TwistContext, bernoulli_numbers
from twistbern.cyclo import cyclo_field
from twistbern.padic import (INFINITE, convergence_check, padic_context,
                             pi_valuation, shift_identity_check,
                             shift_identity_report, volkenborn_partial)


def test_pi_valuation_examples():
    p3 = padic_context(3, 1)
    f3 = cyclo_field(3)
    assert pi_valuation(f3.from_rational(3), p3) == 1
    assert pi_valuation(f3.one - f3.root(1), p3) == Fraction(1, 2)
    assert pi_valuation(f3.from_rational(2), p3) == 0
    assert pi_valuation(f3.zero, p3) == INFINITE
    with pytest.raises(ValueError):
        pi_valuation(cyclo_field(4).one, p3)


def test_pi_valuation_is_a_valuation():
    for (p, s) in ((3, 1), (2, 2)):
        pctx = padic_context(p, s)
        f = pctx.field
        samples = [f.from_rational(Fraction(p, 2)) if p > 2 else
                   f.from_rational(Fraction(2, 3)),
                   f.one - f.root(1), f.root(1) + 1,
                   f.from_rational(p**2), f.root(1) * 3 - 5]
        for a in samples:
            for b in samples:
                assert pi_valuation(a * b, pctx) == \
                    pi_valuation(a, pctx) + pi_valuation(b, pctx)
                if not (a + b).is_zero():
                    assert pi_valuation(a + b, pctx) >= \
                        min(pi_valuation(a, pctx), pi_valuation(b, pctx))


def test_volkenborn_partial_examples():
    ctx = TwistContext.from_orders(1, 0, 1, 1, p=3, s=0)
    assert volkenborn_partial(ctx, 0, 1) == 1
    assert volkenborn_partial(ctx, 1, 1) == 1
    assert volkenborn_partial(ctx, 1, 2) == 4


def test_convergence_classic_rates():
    ctx = TwistContext.from_orders(1, 0, 1, 1, p=3, s=0)
    rep = convergence_check(ctx, 1, 5)
    assert rep.passed
    assert [v for _, v in rep.rows] == [Fraction(n) for n in range(1, 6)]
    rep0 = convergence_check(ctx, 0, 4)
    assert rep0.passed
    assert all(v == INFINITE for _, v in rep0.rows)


def test_convergence_with_ramified_twist():
    ctx = TwistContext.from_orders(1, 0, 2, 1, p=2, s=1)
    rep = convergence_check(ctx, 1, 5)
    assert rep.passed
    ctx3 = TwistContext.from_orders(3, 1, 3, 1, p=3, s=1)
    rep = convergence_check(ctx3, 3, 5)
    assert rep.passed
    # valuations are genuinely fractional in the ramified case
    assert any(v != INFINITE and v.denominator == 2 for _, v in rep.rows)


def test_convergence_rejects_complex_characters():
    ctx = TwistContext.from_orders(5, 1, 5, 1, p=5, s=1)
    with pytest.raises(ValueError, match="unsupported"):
        convergence_check(ctx, 1, 3)
    plain = TwistContext.from_orders(1, 0, 2, 1)   # no p recorded
    with pytest.raises(ValueError):
        convergence_check(plain, 1, 3)


def test_partial_sum_matches_bernoulli_limit_exactly_when_periodic():
    # with xi of order 3 and k=1 the partial averages stabilize at B_1
    ctx = TwistContext.from_orders(1, 0, 3, 1, p=3, s=1)
    b1 = bernoulli_numbers(ctx, 1)[1]
    for level in (1, 2, 3):
        assert volkenborn_partial(ctx, 1, level) == b1


def test_shift_identity_examples():
    assert shift_identity_check(1, 1)   # B_1(1) - B_1 = 1
    assert shift_identity_check(3, 4)   # Faulhaber: 3*(0+1+4+9) = 42
    assert shift_identity_check(0, 5)   # constant function
    ctx = TwistContext.from_orders(1, 0, 1, 1)
    from twistbern.bernoulli import bernoulli_polynomial
    lhs = bernoulli_polynomial(ctx, 3, Fraction(4)) - bernoulli_numbers(ctx, 3)[3]
    assert lhs == 42


def test_shift_identity_rectangle():
    rep = shift_identity_report(8, 6)
    assert rep.passed


def test_padic_context_validation():
    with pytest.raises(ValueError):
        padic_context(4, 1)
    with pytest.raises(ValueError):
        padic_context(3, -1)
    pctx = padic_context(2, 2)
    assert pctx.ramification == 2
    assert pctx.field.order == 4
