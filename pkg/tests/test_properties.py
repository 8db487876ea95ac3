"""Bulk randomized invariant suites: 10^4 cases per algebraic law."""

import random

from skewgb.endo import ShiftEndo
from skewgb.engine import spoly, spoly_poly
from skewgb.field import QQ
from skewgb.letterplace import (
    FreePolynomial,
    iota,
    iota_inv,
    iota_prime,
    iota_prime_inv,
    iota_word,
    word_of_mono,
)
from skewgb.poly import (
    DEGLEX,
    LEX,
    MONO_ONE,
    W_BOTTOM,
    Polynomial,
    mono,
    mono_div,
    mono_divides,
    mono_gcd,
    mono_lcm,
    mono_mul,
    weight,
)
from skewgb.skew import SkewElement, shift_left, skew_mono_mul, skew_mul

N = 10_000
SIGMA = ShiftEndo()


def rand_mono(rng):
    k = rng.randint(0, 3)
    return mono(
        *((rng.randrange(3), rng.randrange(3), rng.randint(1, 2))
          for _ in range(k))
    )


def rand_poly(rng, ordering, terms=2):
    f = Polynomial(
        [(rand_mono(rng), QQ.of(rng.randint(-3, 3)))
         for _ in range(rng.randint(1, terms))],
        ordering,
    )
    return f


def rand_skew(rng, ordering):
    parts = {}
    for _ in range(rng.randint(1, 2)):
        f = rand_poly(rng, ordering)
        if not f.is_zero():
            parts[rng.randint(0, 2)] = f
    return SkewElement(parts)


def test_ordering_axioms_bulk():
    rng = random.Random(81)
    for i in range(N):
        ordering = LEX if i % 2 else DEGLEX
        a, b, c = rand_mono(rng), rand_mono(rng), rand_mono(rng)
        ka, kb = ordering.key(a), ordering.key(b)
        assert (ka < kb) + (ka > kb) + (a == b) == 1
        assert ordering.key(MONO_ONE) <= ka
        if ka < kb:
            assert ordering.key(mono_mul(a, c)) < ordering.key(mono_mul(b, c))
        assert ka <= ordering.key(mono_mul(a, c))


def test_gcd_lcm_shift_compat_bulk():
    rng = random.Random(82)
    for _ in range(N):
        m, n = rand_mono(rng), rand_mono(rng)
        k = rng.randint(0, 3)
        g, l = mono_gcd(m, n), mono_lcm(m, n)
        assert mono_mul(g, l) == mono_mul(m, n)
        assert mono_divides(g, m) and mono_divides(g, n)
        assert mono_divides(m, l) and mono_divides(n, l)
        assert mono_gcd(SIGMA.mono(m, k), SIGMA.mono(n, k)) == SIGMA.mono(g, k)
        assert mono_lcm(SIGMA.mono(m, k), SIGMA.mono(n, k)) == SIGMA.mono(l, k)
        assert SIGMA.mono(mono_mul(m, n), k) == mono_mul(
            SIGMA.mono(m, k), SIGMA.mono(n, k)
        )
        assert mono_divides(m, n) == mono_divides(
            SIGMA.mono(m, k), SIGMA.mono(n, k)
        )
        if mono_divides(m, n):
            assert mono_mul(m, mono_div(n, m)) == n


def test_skew_mul_associativity_and_lm_bulk():
    rng = random.Random(83)
    for i in range(N):
        ordering = LEX if i % 2 else DEGLEX
        a = rand_skew(rng, ordering)
        b = rand_skew(rng, ordering)
        c = rand_skew(rng, ordering)
        ab = skew_mul(a, b, SIGMA)
        assert skew_mul(ab, c, SIGMA) == skew_mul(a, skew_mul(b, c, SIGMA), SIGMA)
        if not (a.is_zero() or b.is_zero()):
            va, vb = a.lm(), b.lm()
            vab = ab.lm()
            assert vab.sdeg == va.sdeg + vb.sdeg
            assert vab.mono == mono_mul(va.mono, SIGMA.mono(vb.mono, va.sdeg))
            assert ab.lc() == a.lc() * b.lc()


def test_spoly_identities_bulk():
    rng = random.Random(84)
    for i in range(N):
        ordering = LEX if i % 2 else DEGLEX
        f = rand_poly(rng, ordering, terms=3)
        g = rand_poly(rng, ordering, terms=3)
        if f.is_zero() or g.is_zero():
            continue
        sp = spoly_poly(f, g)
        l = mono_lcm(f.lm(), g.lm())
        if not sp.is_zero():
            assert ordering.key(sp.lm()) < ordering.key(l)
        assert SIGMA.poly(sp, 2) == spoly_poly(SIGMA.poly(f, 2), SIGMA.poly(g, 2))
        assert spoly_poly(f, f).is_zero()
        k = rng.randint(0, 2)
        sf = SkewElement.of_poly(f, k)
        sg = SkewElement.of_poly(g, k)
        ssp = spoly(sf, sg)
        assert shift_left(1, ssp, SIGMA) == spoly(
            shift_left(1, sf, SIGMA), shift_left(1, sg, SIGMA)
        )
        if not ssp.is_zero():
            v = ssp.lm()
            assert (v.sdeg, ordering.key(v.mono)) < (k, ordering.key(l))


def test_iota_homomorphism_bulk():
    rng = random.Random(85)
    for _ in range(N):
        u = tuple(rng.randrange(3) for _ in range(rng.randint(0, 3)))
        v = tuple(rng.randrange(3) for _ in range(rng.randint(0, 3)))
        iu, iv = iota_word(u), iota_word(v)
        assert iota_word(u + v) == skew_mono_mul(iu, iv, SIGMA)
        assert iu.sdeg == len(u)
        if u:
            assert word_of_mono(iu.mono) == u
        f = FreePolynomial(
            [(u, QQ.of(rng.randint(-3, 3))), (v, QQ.of(rng.randint(-3, 3)))]
        )
        assert iota_inv(iota(f)) == f
        assert iota_prime_inv(iota_prime(f)) == f
        if not f.is_zero():
            assert iota(f).lm() == iota_word(f.lm())


def test_weight_lemmas_bulk():
    rng = random.Random(86)
    assert weight(MONO_ONE) is W_BOTTOM
    assert max(W_BOTTOM, 0) == 0
    assert W_BOTTOM + 5 is W_BOTTOM
    for i in range(N):
        ordering = LEX if i % 2 else DEGLEX
        m, n = rand_mono(rng), rand_mono(rng)
        k = rng.randint(0, 3)
        assert weight(mono_mul(m, n)) == max(weight(m), weight(n))
        if m != MONO_ONE:
            assert weight(SIGMA.mono(m, k)) == k + weight(m)
        assert weight(m) < 10**9
        f = rand_poly(rng, ordering)
        g = rand_poly(rng, ordering)
        if not (f.is_zero() or g.is_zero()):
            assert (f * g).weight() == max(f.weight(), g.weight())
