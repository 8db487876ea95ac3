"""Tests for skew elements of S = P[s; sigma] and their arithmetic."""

import random

import pytest

from skewgb.endo import ShiftEndo
from skewgb.field import QQ
from skewgb.poly import (
    DEGLEX,
    LEX,
    MONO_ONE,
    Polynomial,
    mono,
    mono_from_pairs,
    var_code,
)
from skewgb.skew import (
    SkewElement,
    SkewMonomial,
    left_divides,
    p_divides,
    shift_left,
    shift_right,
    skew_mono_mul,
    skew_mul,
    two_sided_divides,
)

SHIFT = ShiftEndo()


def p(terms, ordering=LEX):
    return Polynomial([(m, QQ.of(c)) for m, c in terms], ordering)


def rand_poly(rng, ordering=LEX, letters=2, max_place=2, max_len=3, terms=3):
    tt = []
    for _ in range(rng.randint(0, terms)):
        pairs = [
            (var_code(rng.randrange(letters), rng.randrange(max_place + 1)), 1)
            for _ in range(rng.randint(0, max_len))
        ]
        tt.append((mono_from_pairs(pairs), QQ.of(rng.randint(-3, 3))))
    return Polynomial(tt, ordering)


def rand_skew(rng, ordering=LEX, max_sdeg=2):
    parts = {}
    for i in range(rng.randint(0, max_sdeg) + 1):
        f = rand_poly(rng, ordering)
        if f:
            parts[i] = f
    return SkewElement(parts)


def test_construction_normalizes():
    f = p([(mono((0, 1, 1)), 1)])
    a = SkewElement({0: f, 2: f, 1: Polynomial.zero(LEX)})
    assert [i for i, _ in a.parts] == [2, 0]  # descending, zeros dropped
    b = SkewElement([(2, f), (0, f)])
    assert a == b
    assert SkewElement({}).is_zero()
    assert SkewElement.zero() == SkewElement({})
    assert not SkewElement.zero()


def test_of_poly():
    f = p([(mono((0, 1, 1)), 2)])
    a = SkewElement.of_poly(f, 3)
    assert a.parts == ((3, f),)
    assert a.sdeg() == 3
    assert a.is_s_homogeneous()
    assert SkewElement.of_poly(Polynomial.zero(LEX), 5).is_zero()


def test_s_homogeneity():
    f = p([(mono((0, 1, 1)), 1)])
    assert SkewElement({1: f}).is_s_homogeneous()
    assert not SkewElement({0: f, 1: f}).is_s_homogeneous()
    assert SkewElement.zero().is_s_homogeneous()


def test_leading_data_is_sdeg_major():
    low = p([(mono((0, 3, 1), (0, 0, 2)), 5)])   # big in P
    high = p([(mono((0, 0, 1)), -2)])            # small in P
    a = SkewElement({0: low, 1: high})
    assert a.lm() == SkewMonomial(mono((0, 0, 1)), 1)
    assert a.lc() == -2
    assert a.lt() == SkewElement({1: p([(mono((0, 0, 1)), -2)])})
    assert a.sdeg() == 1
    with pytest.raises(ValueError):
        SkewElement.zero().lm()


def test_component():
    f = p([(mono((0, 1, 1)), 1)])
    g = p([(mono((0, 0, 1)), 1)])
    a = SkewElement({0: f, 2: g})
    assert a.component(0) == f
    assert a.component(2) == g
    assert a.component(1) is None


def test_addition_by_layer():
    f = p([(mono((0, 1, 1)), 1)])
    g = p([(mono((0, 0, 1)), 1)])
    a = SkewElement({0: f, 1: g})
    b = SkewElement({1: -g, 2: f})
    c = a + b
    assert c == SkewElement({0: f, 2: f})
    assert a - a == SkewElement.zero()
    assert -a + a == SkewElement.zero()
    assert a.scale(QQ.of(3)) == SkewElement({0: f.scale(QQ.of(3)),
                                             1: g.scale(QQ.of(3))})
    assert a.scale(QQ.zero).is_zero()


def test_s_times_poly_twists():
    # s * f = sigma(f) * s, checked through the product.
    f = p([(mono((0, 0, 1)), 1)])  # x(0)
    s = SkewElement.of_poly(p([(MONO_ONE, 1)]), 1)
    sf = skew_mul(s, SkewElement.of_poly(f), SHIFT)
    assert sf == SkewElement.of_poly(p([(mono((0, 1, 1)), 1)]), 1)
    fs = skew_mul(SkewElement.of_poly(f), s, SHIFT)
    assert fs == SkewElement.of_poly(f, 1)
    assert sf != fs


def test_skew_mono_mul():
    v = SkewMonomial(mono((0, 1, 1)), 2)
    w = SkewMonomial(mono((0, 0, 1)), 1)
    vw = skew_mono_mul(v, w, SHIFT)
    assert vw == SkewMonomial(mono((0, 2, 1), (0, 1, 1)), 3)
    wv = skew_mono_mul(w, v, SHIFT)
    assert wv == SkewMonomial(mono((0, 2, 1), (0, 0, 1)), 3)


def test_shift_left_right():
    f = p([(mono((0, 1, 1)), 1), (MONO_ONE, 4)])
    a = SkewElement.of_poly(f, 1)
    la = shift_left(2, a, SHIFT)
    assert la == SkewElement.of_poly(p([(mono((0, 3, 1)), 1), (MONO_ONE, 4)]), 3)
    ra = shift_right(a, 2)
    assert ra == SkewElement.of_poly(f, 3)
    assert shift_left(0, a, SHIFT) == a
    assert shift_right(a, 0) == a
    with pytest.raises(ValueError):
        shift_left(-1, a, SHIFT)
    with pytest.raises(ValueError):
        shift_right(a, -1)
    # s^k a equals the product with the bare power of s.
    sk = SkewElement.of_poly(p([(MONO_ONE, 1)]), 2)
    assert skew_mul(sk, a, SHIFT) == shift_left(2, a, SHIFT)
    assert skew_mul(a, sk, SHIFT) == shift_right(a, 2)


def test_skew_mul_associative_random():
    rng = random.Random(31)
    for _ in range(150):
        a = rand_skew(rng)
        b = rand_skew(rng)
        c = rand_skew(rng)
        left = skew_mul(skew_mul(a, b, SHIFT), c, SHIFT)
        right = skew_mul(a, skew_mul(b, c, SHIFT), SHIFT)
        assert left == right
        assert skew_mul(a, b + c, SHIFT) == (
            skew_mul(a, b, SHIFT) + skew_mul(a, c, SHIFT)
        )


def test_skew_mul_lm_multiplicative():
    rng = random.Random(57)
    for ordering in (LEX, DEGLEX):
        for _ in range(150):
            a = rand_skew(rng, ordering)
            b = rand_skew(rng, ordering)
            if a.is_zero() or b.is_zero():
                continue
            ab = skew_mul(a, b, SHIFT)
            assert not ab.is_zero()
            assert ab.lm() == skew_mono_mul(a.lm(), b.lm(), SHIFT)
            assert ab.lc() == a.lc() * b.lc()


def test_monic():
    f = p([(mono((0, 1, 1)), -2), (MONO_ONE, 6)])
    a = SkewElement({1: f, 0: p([(MONO_ONE, 8)])})
    m = a.monic()
    assert m.lc() == 1
    assert m == SkewElement({1: p([(mono((0, 1, 1)), 1), (MONO_ONE, -3)]),
                             0: p([(MONO_ONE, -4)])})


def test_left_divides():
    v = SkewMonomial(mono((0, 0, 1)), 1)       # x(0) s
    w = SkewMonomial(mono((0, 2, 1), (0, 1, 1)), 2)  # x(2)x(1) s^2
    q = left_divides(v, w, SHIFT)
    assert q == SkewMonomial(mono((0, 2, 1)), 1)
    # Verify the witness: q * v = w.
    assert skew_mono_mul(q, v, SHIFT) == w
    assert left_divides(w, v, SHIFT) is None
    miss = SkewMonomial(mono((1, 0, 1)), 1)
    assert left_divides(miss, w, SHIFT) is None


def test_p_divides():
    v = SkewMonomial(mono((0, 1, 1)), 1)
    w = SkewMonomial(mono((0, 1, 2), (0, 0, 1)), 1)
    assert p_divides(v, w) == mono((0, 1, 1), (0, 0, 1))
    assert p_divides(v, SkewMonomial(w.mono, 2)) is None
    assert p_divides(SkewMonomial(mono((1, 1, 1)), 1), w) is None


def test_two_sided_divides():
    sigma = SHIFT
    v = SkewMonomial(mono((0, 1, 1)), 1)      # x(1) s
    w = SkewMonomial(mono((0, 2, 1), (0, 0, 1)), 3)  # x(2)x(0) s^3
    hit = two_sided_divides(v, w, sigma)
    assert hit == (1, 1, mono((0, 0, 1)))
    i, j, q = hit
    # Verify: q * s^i * v * s^j has the monomial of w.
    m = skew_mono_mul(SkewMonomial(q, i), v, sigma)
    m = SkewMonomial(m.mono, m.sdeg + j)
    assert m == w
    assert two_sided_divides(w, v, sigma) is None
    # x(5) s^2 is not reachable from x(1) s by shifts 0..1.
    far = SkewMonomial(mono((0, 5, 1)), 2)
    assert two_sided_divides(v, far, sigma) is None


def test_two_sided_prefers_smallest_left_shift():
    v = SkewMonomial(mono((0, 1, 1)), 0)
    w = SkewMonomial(mono((0, 2, 1), (0, 1, 1)), 2)
    assert two_sided_divides(v, w, SHIFT) == (0, 2, mono((0, 2, 1)))


def test_hash_and_repr():
    f = p([(mono((0, 1, 1)), 1)])
    a = SkewElement({1: f})
    b = SkewElement([(1, f)])
    assert hash(a) == hash(b)
    assert len({a, b}) == 1
    assert "s" in repr(a)
