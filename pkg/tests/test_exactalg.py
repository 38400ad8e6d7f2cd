import random
from fractions import Fraction

import pytest

from bowcalc.exactalg import (
    Character,
    LinearForm,
    LocalizedScalar,
    MultiPoly,
    NotDivisibleError,
    PureHWeightError,
    RingMap,
    WindowMismatchError,
    ZeroWeightError,
    factor_s_forms,
)
from bowcalc.permcalc import Permutation


def t(i, n=3):
    return MultiPoly.t(i, n)


def h(n=3):
    return MultiPoly.h(n)


def random_poly(rng, window, degree=3, terms=5):
    p = MultiPoly.zero(window)
    for _ in range(terms):
        mono = [0] * (window + 1)
        for _ in range(rng.randint(0, degree)):
            mono[rng.randrange(window + 1)] += 1
        p = p + MultiPoly(window, {tuple(mono): rng.randint(-4, 4)})
    return p


def test_binomial_square():
    p = t(1) - t(2)
    assert p * p == t(1) ** 2 - 2 * t(1) * t(2) + t(2) ** 2


def test_additive_inverse():
    p = 3 * t(1) * t(2) - h() ** 2
    assert (p + (-p)).is_zero()


def test_mul_div_roundtrip():
    a = (t(1) - t(2) + h()) * (t(1) - t(2))
    assert a.exact_div(t(1) - t(2)) == t(1) - t(2) + h()
    assert a.exact_div(t(1) - t(2) + h()) == t(1) - t(2)


def test_window_mismatch_raises():
    with pytest.raises(WindowMismatchError):
        t(1, 2) + t(1, 3)


def test_not_divisible():
    with pytest.raises(NotDivisibleError):
        (t(1) - t(2)).exact_div(t(1) - t(3))


def test_exact_div_h_power():
    x = t(1) * t(2) - 5 * t(3) + 1
    assert (x * h() ** 2).exact_div(h() ** 2) == x


def test_h_valuation():
    assert (h() ** 2 * (t(1) + h())).h_valuation() == 2
    assert MultiPoly.zero(3).h_valuation() == float("inf")
    assert (t(1) + 1).h_valuation() == 0


def test_ring_axioms_randomized():
    rng = random.Random(20240)
    for _ in range(40):
        a = random_poly(rng, 3)
        b = random_poly(rng, 3)
        c = random_poly(rng, 3)
        assert (a + b) + c == a + (b + c)
        assert a * (b + c) == a * b + a * c
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a


def test_exact_div_randomized():
    rng = random.Random(7)
    for _ in range(40):
        a = random_poly(rng, 3)
        b = random_poly(rng, 3)
        if b.is_zero():
            continue
        assert (a * b).exact_div(b) == a


def test_act_perm():
    w = Permutation.parse("213")
    p = t(1) - t(2)
    assert p.act_perm(w) == t(2) - t(1)
    assert p.act_perm(Permutation.identity(3)) == p
    rng = random.Random(99)
    for _ in range(20):
        q = random_poly(rng, 3)
        assert q.act_perm(w).act_perm(w.inverse()) == q


def test_act_perm_is_ring_map():
    rng = random.Random(5)
    w = Permutation.parse("312")
    a, b = random_poly(rng, 3), random_poly(rng, 3)
    assert (a * b).act_perm(w) == a.act_perm(w) * b.act_perm(w)


def test_ring_map_multiplicative():
    rng = random.Random(12)
    f = RingMap(3, 2, [MultiPoly.t(1, 2), MultiPoly.t(1, 2) - MultiPoly.h(2), MultiPoly.t(2, 2)])
    for _ in range(20):
        a = random_poly(rng, 3)
        b = random_poly(rng, 3)
        assert f(a * b) == f(a) * f(b)
        assert f(a + b) == f(a) + f(b)


def test_h_shift_inverse_roundtrip():
    f = RingMap.h_shift(3, {2: 1})
    g = RingMap.h_shift(3, {2: -1})
    rng = random.Random(3)
    p = random_poly(rng, 3)
    assert g(f(p)) == p
    assert f.compose(g)(p) == p


def test_canonical_string():
    p = t(1) * h() ** 2 - MultiPoly.const(Fraction(3, 2), 3) * t(2) * h() + 1
    assert str(p) == "t1*h^2 - 3/2*t2*h + 1"
    assert str(MultiPoly.zero(3)) == "0"
    s = p.structured()
    assert s[0] == {"coef": "1/1", "exps": {"t1": 1, "h": 2}}


def test_euler_and_characters():
    empty = Character(2)
    assert empty.euler() == MultiPoly.one(2)
    # one chargeless line against a pair of later ones
    c = Character(2)
    for l in range(2):
        c = c.plus(Character.weight(2, {1: 1, 2: -1}, l + 1))
    e = c.euler()
    t1, t2, H = MultiPoly.t(1, 2), MultiPoly.t(2, 2), MultiPoly.h(2)
    assert e == (t1 - t2 + H) * (t1 - t2 + 2 * H)

    with pytest.raises(ZeroWeightError):
        Character(2, [(0, 0, 0)]).euler()


def test_character_dual_tensor_union():
    a = Character.weight(2, {1: 1, 2: -1}, 1)
    b = Character.weight(2, {2: 1, 1: -1}, 0)
    assert a.dual().dual() == a
    assert a.tensor(b) == Character.weight(2, {}, 1)
    assert (a.plus(b)).euler() == a.euler() * b.euler()
    assert a.plus(b).rank() == 2


def test_chamber_split():
    c = Character.weight(3, {1: 1, 2: -1}, 2).plus(Character.weight(3, {3: 1, 2: -1}, 0))
    pos, neg = c.split_by_chamber(Permutation.identity(3))
    # t1 - t2 + 2h: z(1) < z(2) -> negative; t3 - t2: z(3) > z(2) -> positive
    assert neg == Character.weight(3, {1: 1, 2: -1}, 2)
    assert pos == Character.weight(3, {3: 1, 2: -1}, 0)
    assert pos.plus(neg) == c

    # dual splits with the parts swapped
    dpos, dneg = c.dual().split_by_chamber(Permutation.identity(3))
    assert dpos == neg.dual() and dneg == pos.dual()

    # the longest chamber swaps the parts of h-free weights
    w0 = Permutation.longest(3)
    c2 = Character.weight(3, {1: 1, 3: -1}, 0)
    p1, n1 = c2.split_by_chamber(Permutation.identity(3))
    p2, n2 = c2.split_by_chamber(w0)
    assert p1 == n2 and n1 == p2

    with pytest.raises(PureHWeightError):
        Character.weight(3, {}, 1).split_by_chamber(w0)


def test_linear_form_normalization():
    form, sgn = LinearForm.normalized(3, 1, 2)
    assert (form.i, form.j, form.m) == (1, 3, -2) and sgn == -1
    assert str(LinearForm(1, 2, 1)) == "t1-t2+h"


def test_localized_scalar_cancellation():
    t1, t2, t3, H = t(1), t(2), t(3), h()
    num = (t1 - t2) * (t2 - t3 + H)
    s = LocalizedScalar(num, [LinearForm(1, 2), LinearForm(1, 3)])
    assert s.denoms == (LinearForm(1, 3),)
    assert not s.is_polynomial()
    # equality by cross multiplication
    s2 = LocalizedScalar(num * (t1 - t3), [LinearForm(1, 2), LinearForm(1, 3)])
    assert s2 == (t2 - t3 + H)
    assert s2.to_poly() == t2 - t3 + H


def test_localized_scalar_sum():
    t1, t2 = t(1, 2), t(2, 2)
    a = LocalizedScalar(MultiPoly.one(2), [LinearForm(1, 2)])
    b = LocalizedScalar(-MultiPoly.one(2), [LinearForm(1, 2)])
    assert not (a + b)
    c = LocalizedScalar(t1, [LinearForm(1, 2)]) + LocalizedScalar(-t2, [LinearForm(1, 2)])
    assert c.is_polynomial() and c.to_poly() == MultiPoly.one(2)


def test_localized_congruence_mod_h():
    # all S-forms are invertible mod h, so congruence is decided after
    # clearing denominators
    t1, t2, H = t(1, 2), t(2, 2), h(2)
    a = LocalizedScalar(H, [LinearForm(1, 2)])
    b = LocalizedScalar(H * (t1 - t2) + H ** 2 * (t1 - t2) ** 2, [LinearForm(1, 2, 0), LinearForm(1, 2, 0)])
    assert a.h_congruent(b, 2)
    assert not a.h_congruent(b + LocalizedScalar.from_poly(H), 2)


def test_factor_s_forms():
    t1, t2, t3, H = t(1), t(2), t(3), h()
    p = 6 * H ** 2 * (t1 - t2 + H) * (t1 - t3) ** 2
    const, hpow, forms = factor_s_forms(p)
    assert const == 6 and hpow == 2
    assert forms == [LinearForm(1, 2, 1), LinearForm(1, 3), LinearForm(1, 3)]
    with pytest.raises(NotDivisibleError):
        factor_s_forms(t1 * t2 + 1)
