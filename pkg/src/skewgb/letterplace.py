"""Free-algebra front end via the letterplace embedding.

A word in letters x_1..x_n of length d embeds into the skew ring as

    iota(x_{i_1} ... x_{i_d}) = x_{i_1}(1) x_{i_2}(2) ... x_{i_d}(d) s^d,

an injective algebra homomorphism onto the subalgebra R of S; composing
with the s-erasing projection pi gives the linear embedding iota' into P
whose image V consists of the "one variable per place 1..d" monomials.
Noncommutative Gröbner bases of homogeneous two-sided ideals are computed
by running the difference-ideal (or two-sided skew) completion on the
embedded generators while discarding every critical pair whose lcm falls
outside V (resp. R): the surviving pairs are exactly the alignments of
shifted copies that correspond to genuine word overlaps, so no separate
overlap enumeration is needed.

Words are compared length first, then letter by letter from the last
place backwards — the order induced by restricting the skew-monomial
ordering to R.  Both lex and deglex on P induce this same word order.
"""

from __future__ import annotations

from dataclasses import replace

from . import engine
from .endo import ShiftEndo
from .poly import (
    LETTER_BITS,
    MONO_ONE,
    Monomial,
    MonomialOrdering,
    LEX,
    Polynomial,
    mono_divides,
    weight,
)
from .skew import SkewElement, SkewMonomial

__all__ = [
    "Word",
    "word_key",
    "FreePolynomial",
    "iota_word",
    "iota",
    "iota_inv",
    "iota_prime_word",
    "iota_prime",
    "iota_prime_inv",
    "word_of_mono",
    "pi",
    "xi",
    "in_V",
    "in_R",
    "free_gbasis",
    "free_gbasis2",
    "certify_free",
    "free_oracle_match",
]

Word = tuple

_LETTER_MASK = (1 << LETTER_BITS) - 1


def word_key(w: Word):
    """Sort key realizing the induced word ordering."""
    return (len(w), tuple(reversed(w)))


class FreePolynomial:
    """A noncommutative polynomial; terms descend under the word ordering."""

    __slots__ = ("terms",)

    def __init__(self, terms, _sorted: bool = False):
        if _sorted:
            self.terms = tuple(terms)
            return
        acc: dict[Word, object] = {}
        for w, c in terms:
            if w in acc:
                acc[w] = acc[w] + c
            else:
                acc[w] = c
        self.terms = tuple(
            sorted(
                ((w, c) for w, c in acc.items() if c),
                key=lambda t: word_key(t[0]),
                reverse=True,
            )
        )

    @classmethod
    def zero(cls) -> "FreePolynomial":
        return cls((), _sorted=True)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def leading(self):
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        w, c = self.terms[0]
        return c, w

    def lm(self) -> Word:
        if not self.terms:
            raise ValueError("zero polynomial has no leading word")
        return self.terms[0][0]

    def lc(self):
        if not self.terms:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.terms[0][1]

    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(len(w) for w, _ in self.terms)

    def is_homogeneous(self) -> bool:
        if not self.terms:
            return True
        d = len(self.terms[0][0])
        return all(len(w) == d for w, _ in self.terms)

    def __add__(self, other: "FreePolynomial") -> "FreePolynomial":
        return FreePolynomial(self.terms + other.terms)

    def __sub__(self, other: "FreePolynomial") -> "FreePolynomial":
        return self + (-other)

    def __neg__(self) -> "FreePolynomial":
        return FreePolynomial(
            tuple((w, -c) for w, c in self.terms), _sorted=True
        )

    def scale(self, c) -> "FreePolynomial":
        if not c:
            return FreePolynomial.zero()
        return FreePolynomial(
            tuple((w, coef * c) for w, coef in self.terms), _sorted=True
        )

    def __mul__(self, other: "FreePolynomial") -> "FreePolynomial":
        acc: dict[Word, object] = {}
        for u, c in self.terms:
            for v, d in other.terms:
                w = u + v
                if w in acc:
                    acc[w] = acc[w] + c * d
                else:
                    acc[w] = c * d
        return FreePolynomial(acc.items())

    def monic(self) -> "FreePolynomial":
        if not self.terms:
            return self
        lc = self.terms[0][1]
        one = lc / lc
        if lc == one:
            return self
        return self.scale(one / lc)

    def letters(self) -> set:
        return {x for w, _ in self.terms for x in w}

    def __eq__(self, other):
        if isinstance(other, FreePolynomial):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash(self.terms)

    def __repr__(self):
        from .textio import format_free

        return f"<{format_free(self)}>"


# ---------------------------------------------------------------------------
# The embeddings


def iota_word(w: Word) -> SkewMonomial:
    """x_{i_1}...x_{i_d} -> x_{i_1}(1)...x_{i_d}(d) s^d."""
    d = len(w)
    mono = tuple(
        ((p << LETTER_BITS) | w[p - 1], 1) for p in range(d, 0, -1)
    )
    return SkewMonomial(mono, d)


def iota_prime_word(w: Word) -> Monomial:
    """The same placing without the s-power."""
    return iota_word(w).mono


def iota(f: FreePolynomial, ordering: MonomialOrdering = LEX) -> SkewElement:
    """Linear extension of the embedding into S."""
    parts: dict[int, list] = {}
    for w, c in f.terms:
        parts.setdefault(len(w), []).append((iota_prime_word(w), c))
    return SkewElement(
        {i: Polynomial(ts, ordering) for i, ts in parts.items()}
    )


def iota_prime(f: FreePolynomial, ordering: MonomialOrdering = LEX) -> Polynomial:
    """pi after iota: the embedding into P."""
    return Polynomial(
        ((iota_prime_word(w), c) for w, c in f.terms), ordering
    )


def word_of_mono(m: Monomial) -> Word | None:
    """Decode a monomial of V back to its word, or None."""
    k = len(m)
    letters = [0] * k
    expect = k
    for c, e in m:
        if e != 1 or (c >> LETTER_BITS) != expect:
            return None
        letters[expect - 1] = c & _LETTER_MASK
        expect -= 1
    return tuple(letters)


def _word_len(m: Monomial) -> int | None:
    """Length of the word a monomial encodes, or None if not in V."""
    expect = len(m)
    for c, e in m:
        if e != 1 or (c >> LETTER_BITS) != expect:
            return None
        expect -= 1
    return len(m)


def iota_prime_inv(f: Polynomial) -> FreePolynomial:
    """Inverse of iota_prime; every monomial must lie in V."""
    terms = []
    for m, c in f.terms:
        w = word_of_mono(m)
        if w is None:
            raise ValueError(f"monomial outside V: multidegree is not 1^d")
        terms.append((w, c))
    return FreePolynomial(terms)


def iota_inv(a: SkewElement) -> FreePolynomial:
    """Inverse of iota; every component must lie in R."""
    terms = []
    for k, p in a.parts:
        for m, c in p.terms:
            w = word_of_mono(m)
            if w is None or len(w) != k:
                raise ValueError("element outside R")
            terms.append((w, c))
    return FreePolynomial(terms)


def pi(a: SkewElement, ordering: MonomialOrdering | None = None) -> Polynomial:
    """Erase the s-powers, summing the components in P."""
    if a.is_zero():
        return Polynomial.zero(ordering if ordering is not None else LEX)
    acc = Polynomial.zero(a.ordering())
    for _, f in a.parts:
        acc = acc + f
    return acc


def xi(f: Polynomial) -> SkewElement:
    """Decorate each weight-homogeneous piece f_i with s^i.

    Defined for polynomials whose pieces all have weight >= 1; a nonzero
    constant part (weight bottom) or a weight-0 piece is rejected.
    """
    pieces: dict[int, list] = {}
    for m, c in f.terms:
        w = weight(m)
        if w.is_bottom:
            raise ValueError("xi: input has a nonzero constant part")
        iw = int(w)
        if iw < 1:
            raise ValueError("xi: input has a weight-0 piece")
        pieces.setdefault(iw, []).append((m, c))
    return SkewElement(
        {i: Polynomial(ts, f.ordering, _sorted=True) for i, ts in pieces.items()}
    )


def in_V(f: Polynomial) -> bool:
    """True iff every monomial has multidegree 1^d for its degree d."""
    return all(_word_len(m) is not None for m, _ in f.terms)


def in_R(a: SkewElement) -> bool:
    """True iff every s-degree-i component is multi-homogeneous of type 1^i."""
    for i, p in a.parts:
        for m, _ in p.terms:
            if _word_len(m) != i:
                return False
    return True


# ---------------------------------------------------------------------------
# Noncommutative Gröbner bases


def _validate_input(H):
    gens = []
    seen = set()
    for h in H:
        if h.is_zero():
            continue
        if not h.is_homogeneous():
            raise ValueError(
                "free-algebra mode needs homogeneous generators; "
                "homogenize before calling"
            )
        if h.degree() < 1:
            raise ValueError("constant generator: the ideal is the whole algebra")
        h = h.monic()
        if h not in seen:
            seen.add(h)
            gens.append(h)
    return gens


def _v_filter(l: Monomial, stratum: int) -> bool:
    return _word_len(l) is not None


def _r_filter(l: Monomial, level: int) -> bool:
    return _word_len(l) == level


def _normalize_output(out: list) -> list:
    out = sorted(out, key=lambda f: word_key(f.lm()), reverse=True)
    out.sort(key=lambda f: f.degree())
    return out


def _free_run(H, cfg: engine.GBConfig):
    """Difference-ideal completion of iota'(H) under the V pair filter."""
    cfg.check_sigma()
    gens = _validate_input(H)
    ecfg = replace(cfg, mode="sigma")
    seeds, _ = engine._prepare_seeds(
        ((iota_prime(h, cfg.ordering), 0) for h in gens), ecfg
    )
    trace = [] if cfg.trace else None
    entries, stats, trace = engine._complete(
        seeds, ecfg, pair_filter=_v_filter, collect_trace=trace
    )
    polys = [e.poly for e in entries]
    if cfg.interreduce:
        polys = engine.interreduce(polys, ecfg)
    return _normalize_output([iota_prime_inv(p) for p in polys]), stats, trace


def _free2_run(H, cfg: engine.GBConfig):
    """Two-sided skew completion of iota(H) under the R pair filter."""
    cfg.check_sigma()
    gens = _validate_input(H)
    ecfg = replace(cfg, mode="skew")
    seeds, _ = engine._prepare_seeds(
        ((iota_prime(h, cfg.ordering), h.degree()) for h in gens), ecfg
    )
    trace = [] if cfg.trace else None
    entries, stats, trace = engine._complete(
        seeds, ecfg, pair_filter=_r_filter, collect_trace=trace
    )
    basis = [SkewElement.of_poly(e.poly, e.sdeg) for e in entries]
    if cfg.interreduce:
        basis = engine.interreduce(basis, ecfg)
    return _normalize_output([iota_inv(a) for a in basis]), stats, trace


def free_gbasis(H, cfg: engine.GBConfig) -> list:
    """d-truncated homogeneous Gröbner basis of the two-sided ideal <H>."""
    if cfg.mode != "free":
        raise ValueError("config mode must be 'free'")
    return _free_run(H, cfg)[0]


def free_gbasis2(H, cfg: engine.GBConfig) -> list:
    """Same contract as free_gbasis, computed inside S on iota(H)."""
    if cfg.mode != "free2":
        raise ValueError("config mode must be 'free2'")
    return _free2_run(H, cfg)[0]


def certify_free(G, cfg: engine.GBConfig, two_sided: bool = False):
    """Exhaustive in-window pair check of a free basis through its embedding."""
    if two_sided:
        ecfg = replace(cfg, mode="skew")
        basis = [iota(g, cfg.ordering) for g in G]
        return engine.certify(basis, ecfg, pair_filter=_r_filter)
    ecfg = replace(cfg, mode="sigma")
    basis = [iota_prime(g, cfg.ordering) for g in G]
    return engine.certify(basis, ecfg, pair_filter=_v_filter)


def _is_subword(u: Word, w: Word) -> bool:
    lu = len(u)
    return any(w[i : i + lu] == u for i in range(len(w) - lu + 1))


def free_oracle_match(
    G, H, cfg: engine.GBConfig, compare_bound: int | None = None
) -> bool:
    """Compare the word lm-ideal of G with the commutative oracle's.

    The oracle expands iota'(H) through the in-window shifts and runs the
    bare commutative Buchberger; a word of length <= d is covered by G iff
    some leading word is a contiguous subword, and covered by the oracle
    iff some oracle leading monomial divides the word's placing.
    """
    from itertools import product as iproduct

    d = cfg.degree_bound if compare_bound is None else compare_bound
    letters = set()
    for f in list(G) + list(H):
        letters |= f.letters()
    n = max(letters) + 1 if letters else 1
    ecfg = engine.GBConfig(
        mode="sigma", degree_bound=d, ordering=cfg.ordering, sigma=cfg.sigma
    )
    # The generators are homogeneous, so capping the oracle's pairs at the
    # window degree is exact for the compared part of the lm-ideal.
    oracle = engine.oracle_gbasis_truncated(
        [iota_prime(h, cfg.ordering) for h in H], ecfg, degree_cap=d
    )
    B = [b.lm() for b in oracle.basis if b]
    lms = [g.lm() for g in G]
    for length in range(1, d + 1):
        for w in iproduct(range(n), repeat=length):
            main_hit = any(_is_subword(u, w) for u in lms)
            placed = iota_prime_word(w)
            oracle_hit = any(mono_divides(b, placed) for b in B)
            if main_hit != oracle_hit:
                return False
    return True
