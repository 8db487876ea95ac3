"""Truncated Buchberger machinery for skew polynomial rings.

Four computations share one pair-completion core:

* ``skew_gbasis``  — two-sided bases of s-homogeneous ideals of S, truncated
  by s-degree;
* ``left_gbasis``  — left-module bases in S, no homogeneity assumption;
* ``sigma_gbasis`` — Gröbner bases of difference ideals of P closed under the
  shift, truncated by weight;
* ``oracle_gbasis_truncated`` — a deliberately naive commutative (module)
  Buchberger run on the fully expanded, finite window of shifted generators.
  It shares only the arithmetic layer with the main algorithms and exists to
  cross-check their leading-monomial ideals inside the window.

Critical pairs carry a shift decoration: the pair (a, b, k) stands for
spoly(a, sigma**k . b) with the appropriate s-power bookkeeping in skew
modes.  One pair per decoration class suffices: shifting a pair shifts its
whole reduction trace, so only shift-minimal representatives are enumerated.
Truncation is mandatory; the undecorated enumerations do not terminate.

Criteria: the product criterion is applied only in ideal modes (difference
ideals and the letterplace image of free ideals) where coprime leading
monomials really do force a trivial syzygy; it is unsound for modules and
stays off in skew modes.  The chain criterion is applied everywhere, but
only when both sub-pairs have strictly smaller lcm, which keeps it sound
without treated-pair bookkeeping.
"""

from __future__ import annotations

import heapq
import warnings
from dataclasses import dataclass, field as dc_field

from .endo import MonomialEndomorphism, ShiftEndo
from .poly import (
    LETTER_BITS,
    MONO_ONE,
    Monomial,
    MonomialOrdering,
    LEX,
    Polynomial,
    mono_coprime,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
    top_place,
)
from .skew import SkewElement, SkewMonomial, shift_left

__all__ = [
    "EndomorphismRejected",
    "WindowExceeded",
    "GBConfig",
    "GBResult",
    "PairStats",
    "spoly_poly",
    "spoly",
    "normal_form",
    "sigma_gbasis",
    "skew_gbasis",
    "left_gbasis",
    "interreduce",
    "member",
    "certify",
    "oracle_gbasis_truncated",
    "lm_window_match",
]

MODES = ("sigma", "skew", "left", "free", "free2")


class EndomorphismRejected(ValueError):
    """The engine refuses to run with an unsuitable endomorphism."""


class WindowExceeded(ValueError):
    """The query lies above the truncation window of the given basis."""


@dataclass
class PairStats:
    """Counters for one completion run."""

    considered: int = 0
    product_skipped: int = 0
    chain_skipped: int = 0
    reduced_to_zero: int = 0
    added: int = 0

    def as_text(self) -> str:
        return (
            f"pairs={self.considered} product={self.product_skipped} "
            f"chain={self.chain_skipped} zero={self.reduced_to_zero} "
            f"added={self.added}"
        )


@dataclass(frozen=True)
class GBConfig:
    """Mode, truncation bound, ordering, endomorphism and criteria toggles."""

    mode: str
    degree_bound: int
    ordering: MonomialOrdering = LEX
    sigma: MonomialEndomorphism = dc_field(default_factory=ShiftEndo)
    product_criterion: bool | None = None  # None = on exactly in ideal modes
    chain_criterion: bool = True
    interreduce: bool = True
    trace: bool = False

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.degree_bound < 1:
            raise ValueError("truncation bound must be at least 1")

    def product_enabled(self) -> bool:
        if self.product_criterion is None:
            return self.mode == "sigma"
        return self.product_criterion and self.mode == "sigma"

    def check_sigma(self):
        if not self.sigma.div_compatible:
            raise EndomorphismRejected(
                "endomorphism is not divisibility compatible; "
                "shift-decorated criteria would be unsound"
            )
        if self.mode in ("sigma", "free", "free2") and not isinstance(
            self.sigma, ShiftEndo
        ):
            raise EndomorphismRejected(
                "this mode truncates by weight, which measures powers of "
                "the shift; use the shift endomorphism"
            )


@dataclass
class GBResult:
    """A computed basis with its truncation bound and run statistics."""

    basis: list
    mode: str
    degree_bound: int
    stats: PairStats
    trace: list[str] | None = None


# ---------------------------------------------------------------------------
# S-polynomials


def spoly_poly(f: Polynomial, g: Polynomial) -> Polynomial:
    """S-polynomial in P: cancel the leading terms over lcm(lm f, lm g)."""
    if f.is_zero() or g.is_zero():
        raise ValueError("spoly of a zero polynomial")
    af, mf = f.leading()
    ag, mg = g.leading()
    l = mono_lcm(mf, mg)
    one = af / af
    left = f.mul_mono(mono_div(l, mf)).scale(one / af)
    right = g.mul_mono(mono_div(l, mg)).scale(one / ag)
    return left - right


def spoly(f: SkewElement, g: SkewElement) -> SkewElement:
    """S-polynomial in S of elements with equal leading s-degree."""
    if f.is_zero() or g.is_zero():
        raise ValueError("spoly of a zero element")
    vf, vg = f.lm(), g.lm()
    if vf.sdeg != vg.sdeg:
        raise ValueError(
            f"leading s-degrees differ: {vf.sdeg} vs {vg.sdeg}"
        )
    af, ag = f.lc(), g.lc()
    l = mono_lcm(vf.mono, vg.mono)
    one = af / af
    left = f.mul_mono(mono_div(l, vf.mono)).scale(one / af)
    right = g.mul_mono(mono_div(l, vg.mono)).scale(one / ag)
    return left - right


# ---------------------------------------------------------------------------
# Basis entries and reduction


class _Entry:
    """A monic basis element with cached shifted images."""

    __slots__ = ("poly", "sdeg", "lm", "lmw", "index", "_shifted", "_shifted_lm")

    def __init__(self, poly: Polynomial, sdeg: int, index: int):
        self.poly = poly
        self.sdeg = sdeg
        self.index = index
        self.lm = poly.lm()
        self.lmw = top_place(self.lm) if self.lm else -1
        self._shifted = {0: poly}
        self._shifted_lm = {0: self.lm}

    def shifted(self, sigma: MonomialEndomorphism, u: int) -> Polynomial:
        p = self._shifted.get(u)
        if p is None:
            p = sigma.poly(self.poly, u)
            self._shifted[u] = p
        return p

    def shifted_lm(self, sigma: MonomialEndomorphism, u: int) -> Monomial:
        m = self._shifted_lm.get(u)
        if m is None:
            m = sigma.mono(self.lm, u)
            self._shifted_lm[u] = m
        return m


def _make_finder(entries: list[_Entry], cfg: GBConfig, level_capped: bool):
    """Reducer search over the lazily shifted basis closure.

    Returns find(m, level) -> (entry, shift, shifted_lm) or None, choosing
    the candidate with the smallest shifted leading monomial, ties broken by
    insertion index.  In level-capped (skew) modes the shift may not push the
    reducer past the working s-degree; in weight mode the shift range is
    bounded by the weight gap, which is exact for the place shift.
    """
    sigma = cfg.sigma
    okey = cfg.ordering.key
    is_shift = isinstance(sigma, ShiftEndo)

    def find(m: Monomial, level: int):
        if not m:
            # A constant is divisible only by a constant leading monomial,
            # and every shift fixes that; first such entry wins.
            for ent in entries:
                if not ent.lm and (not level_capped or ent.sdeg <= level):
                    return (ent, 0, MONO_ONE)
            return None
        wm = m[0][0] >> LETTER_BITS
        md = dict(m)
        best_sel = None
        best = None
        for ent in entries:
            if level_capped:
                ucap = level - ent.sdeg
                if ucap < 0:
                    continue
                if is_shift:
                    ucap = min(ucap, wm - ent.lmw)
            else:
                ucap = wm - ent.lmw
            if ucap < 0:
                continue
            lm0 = ent.lm
            if is_shift:
                for u in range(ucap + 1):
                    step = u << LETTER_BITS
                    for c, e in lm0:
                        if md.get(c + step, 0) < e:
                            break
                    else:
                        img = ent.shifted_lm(sigma, u)
                        sel = (okey(img), ent.index, u)
                        if best_sel is None or sel < best_sel:
                            best_sel, best = sel, (ent, u, img)
                        break
            else:
                seen = set()
                for u in range(ucap + 1):
                    img = ent.shifted_lm(sigma, u)
                    if img in seen:
                        break
                    seen.add(img)
                    if img and img[0][0] >> LETTER_BITS > wm:
                        continue
                    for c, e in img:
                        if md.get(c, 0) < e:
                            break
                    else:
                        sel = (okey(img), ent.index, u)
                        if best_sel is None or sel < best_sel:
                            best_sel, best = sel, (ent, u, img)
                        break
        return best

    return find


def _nf_terms(terms, level, find, sigma, ordering, record=None):
    """Full normal form of a term list against a reducer finder.

    Returns the irreducible terms in descending order.  When ``record`` is a
    list, every reduction step appends (coeff, cofactor, shift, entry index),
    reconstructing the subtracted combination exactly.
    """
    work = dict(terms)
    out = []
    key = ordering.key
    while work:
        m = max(work, key=key)
        c = work.pop(m)
        hit = find(m, level)
        if hit is None:
            out.append((m, c))
            continue
        ent, u, img = hit
        g = ent.shifted(sigma, u)
        q = mono_div(m, img)
        if record is not None:
            record.append((c, q, u, ent.index))
        for mm, cc in g.terms[1:]:
            t = mono_mul(q, mm)
            prev = work.get(t)
            if prev is None:
                work[t] = -c * cc
            else:
                s = prev - c * cc
                if s:
                    work[t] = s
                else:
                    del work[t]
    return out


# ---------------------------------------------------------------------------
# The completion core (sigma and two-sided skew modes)


def _complete(seeds, cfg: GBConfig, pair_filter=None, collect_trace=None):
    """Run pair completion on monic (polynomial, s-degree) seeds.

    ``pair_filter(lcm, level)`` may veto structurally irrelevant pairs (the
    letterplace membership filters).  Returns (entries, stats, trace).
    """
    skew_mode = cfg.mode == "skew"
    sigma = cfg.sigma
    ordering = cfg.ordering
    okey = ordering.key
    d = cfg.degree_bound
    product_on = cfg.product_enabled()
    chain_on = cfg.chain_criterion

    entries: list[_Entry] = []
    stats = PairStats()
    trace = collect_trace
    heap: list = []
    seq = 0
    find = _make_finder(entries, cfg, level_capped=skew_mode)

    def describe(a, b, sh, stratum):
        return f"(g{a + 1}, sigma^{sh}.g{b + 1})@{stratum}"

    def push_pairs(t: int):
        nonlocal seq
        for j in range(t + 1):
            for a, b, sh0 in (
                ((t, t, 1),) if j == t else ((j, t, 0), (t, j, 1))
            ):
                ea, eb = entries[a], entries[b]
                if skew_mode:
                    if ea.sdeg > d:
                        continue
                    sh_hi = d - eb.sdeg
                else:
                    if ea.lmw > d:
                        continue
                    sh_hi = d - eb.lmw
                for sh in range(sh0, sh_hi + 1):
                    blm = eb.shifted_lm(sigma, sh)
                    l = mono_lcm(ea.lm, blm)
                    if skew_mode:
                        stratum = max(ea.sdeg, eb.sdeg + sh)
                    else:
                        stratum = max(ea.lmw, sh + eb.lmw)
                    if stratum > d:
                        continue
                    if pair_filter is not None and not pair_filter(l, stratum):
                        continue
                    stats.considered += 1
                    heapq.heappush(heap, (stratum, okey(l), seq, a, b, sh, l))
                    seq += 1

    def chain_kills(a, b, sh, l, level) -> bool:
        ea, eb = entries[a], entries[b]
        lkey = okey(l)
        wl = l[0][0] >> LETTER_BITS if l else -1
        blm = eb.shifted_lm(sigma, sh)
        for ent in entries:
            if skew_mode:
                ucap = level - ent.sdeg
            else:
                ucap = wl - ent.lmw
            if ucap < 0:
                continue
            for u in range(ucap + 1):
                img = ent.shifted_lm(sigma, u)
                if not mono_divides(img, l):
                    continue
                k1 = okey(mono_lcm(ea.lm, img))
                if not k1 < lkey:
                    continue
                k2 = okey(mono_lcm(img, blm))
                if k2 < lkey:
                    return True
        return False

    def add_element(poly: Polynomial, sdeg: int):
        ent = _Entry(poly, sdeg, len(entries))
        entries.append(ent)
        stats.added += 1
        push_pairs(ent.index)
        return ent

    for poly, sdeg in seeds:
        add_element(poly, sdeg)

    while heap:
        stratum, lkey, _, a, b, sh, l = heapq.heappop(heap)
        ea, eb = entries[a], entries[b]
        if product_on and mono_coprime(ea.lm, eb.shifted_lm(sigma, sh)):
            stats.product_skipped += 1
            if trace is not None:
                trace.append(f"{describe(a, b, sh, stratum)} skip:product")
            continue
        if chain_on and chain_kills(a, b, sh, l, stratum):
            stats.chain_skipped += 1
            if trace is not None:
                trace.append(f"{describe(a, b, sh, stratum)} skip:chain")
            continue
        s = spoly_poly(ea.poly, eb.shifted(sigma, sh))
        level = stratum if skew_mode else 0
        nf = _nf_terms(s.terms, level, find, sigma, ordering)
        if not nf:
            stats.reduced_to_zero += 1
            if trace is not None:
                trace.append(f"{describe(a, b, sh, stratum)} -> 0")
            continue
        h = Polynomial(nf, ordering, _sorted=True).monic()
        if not skew_mode and h.lm() == MONO_ONE:
            warnings.warn("basis contains a constant: unit ideal")
            one = Polynomial.constant(h.lc(), ordering)
            return [_Entry(one, 0, 0)], stats, trace
        ent = add_element(h, level)
        if trace is not None:
            trace.append(
                f"{describe(a, b, sh, stratum)} -> g{ent.index + 1}"
            )

    return entries, stats, trace


def _prepare_seeds(polys_with_sdeg, cfg: GBConfig):
    """Drop zeros, normalize to monic, deduplicate; None on unit ideal."""
    seeds = []
    seen = set()
    for poly, sdeg in polys_with_sdeg:
        if poly.is_zero():
            continue
        p = poly.monic()
        if cfg.mode != "skew" and p.lm() == MONO_ONE:
            warnings.warn("constant generator: unit ideal")
            return None, p
        key = (p, sdeg)
        if key in seen:
            continue
        seen.add(key)
        seeds.append((p, sdeg))
    return seeds, None


def sigma_gbasis(H, cfg: GBConfig) -> GBResult:
    """d-truncated Gröbner basis of the difference ideal generated by H.

    H is a set of polynomials of P; the ideal is closed under the shift, and
    every S-polynomial spoly(f, sigma**k . g) whose lcm has weight <= d
    reduces to zero modulo the shifted basis closure.
    """
    if cfg.mode != "sigma":
        raise ValueError("config mode must be 'sigma'")
    cfg.check_sigma()
    seeds, unit = _prepare_seeds(((h, 0) for h in H), cfg)
    if seeds is None:
        return GBResult([unit], cfg.mode, cfg.degree_bound, PairStats(), None)
    trace = [] if cfg.trace else None
    entries, stats, trace = _complete(seeds, cfg, collect_trace=trace)
    basis = [e.poly for e in entries]
    if cfg.interreduce:
        basis = interreduce(basis, cfg)
    return GBResult(basis, cfg.mode, cfg.degree_bound, stats, trace)


def skew_gbasis(H, cfg: GBConfig) -> GBResult:
    """d-truncated two-sided Gröbner basis for s-homogeneous generators."""
    if cfg.mode != "skew":
        raise ValueError("config mode must be 'skew'")
    cfg.check_sigma()
    pairs = []
    for h in H:
        if h.is_zero():
            continue
        if not h.is_s_homogeneous():
            raise ValueError("two-sided mode needs s-homogeneous generators")
        sdeg, poly = h.parts[0]
        pairs.append((poly, sdeg))
    seeds, _ = _prepare_seeds(pairs, cfg)
    trace = [] if cfg.trace else None
    entries, stats, trace = _complete(seeds, cfg, collect_trace=trace)
    basis = [SkewElement.of_poly(e.poly, e.sdeg) for e in entries]
    if cfg.interreduce:
        basis = interreduce(basis, cfg)
    return GBResult(basis, cfg.mode, cfg.degree_bound, stats, trace)


# ---------------------------------------------------------------------------
# Left module mode


class _LeftEntry:
    __slots__ = ("element", "lm", "index", "_shifted")

    def __init__(self, element: SkewElement, index: int):
        self.element = element
        self.lm = element.lm()
        self.index = index
        self._shifted = {0: element}

    def shifted(self, sigma, u: int) -> SkewElement:
        g = self._shifted.get(u)
        if g is None:
            g = shift_left(u, self.element, sigma)
            self._shifted[u] = g
        return g


def _nf_left(element: SkewElement, entries, cfg: GBConfig):
    """Full left-module normal form against s-power multiples of entries."""
    sigma = cfg.sigma
    okey = cfg.ordering.key
    work: dict[tuple[int, Monomial], object] = {}
    for i, p in element.parts:
        for m, c in p.terms:
            work[(i, m)] = c
    out: dict[int, list] = {}
    while work:
        e, m = max(work, key=lambda k: (k[0], okey(k[1])))
        c = work.pop((e, m))
        best_sel = None
        best = None
        for ent in entries:
            u = e - ent.lm.sdeg
            if u < 0:
                continue
            img = sigma.mono(ent.lm.mono, u)
            if mono_divides(img, m):
                sel = (okey(img), ent.index)
                if best_sel is None or sel < best_sel:
                    best_sel, best = sel, (ent, u, img)
        if best is None:
            out.setdefault(e, []).append((m, c))
            continue
        ent, u, img = best
        g = ent.shifted(sigma, u)
        q = mono_div(m, img)
        lead = True
        for i, p in g.parts:
            for mm, cc in p.terms:
                if lead:
                    lead = False
                    continue
                t = (i, mono_mul(q, mm))
                prev = work.get(t)
                if prev is None:
                    work[t] = -c * cc
                else:
                    s2 = prev - c * cc
                    if s2:
                        work[t] = s2
                    else:
                        del work[t]
    ordering = cfg.ordering
    return SkewElement(
        {e: Polynomial(terms, ordering) for e, terms in out.items()}
    )


def left_gbasis(H, cfg: GBConfig) -> GBResult:
    """d-truncated left Gröbner basis; no homogeneity assumption."""
    if cfg.mode != "left":
        raise ValueError("config mode must be 'left'")
    cfg.check_sigma()
    okey = cfg.ordering.key
    sigma = cfg.sigma
    d = cfg.degree_bound
    entries: list[_LeftEntry] = []
    stats = PairStats()
    trace = [] if cfg.trace else None
    heap: list = []
    seq = 0

    def push_pairs(t: int):
        nonlocal seq
        A = entries[t]
        for j in range(t):
            B = entries[j]
            da, db = A.lm.sdeg, B.lm.sdeg
            if da >= db:
                a, b, sh = t, j, da - db
            else:
                a, b, sh = j, t, db - da
            ea, eb = entries[a], entries[b]
            e = ea.lm.sdeg
            if e > d:
                continue
            l = mono_lcm(ea.lm.mono, sigma.mono(eb.lm.mono, sh))
            stats.considered += 1
            heapq.heappush(heap, (e, okey(l), seq, a, b, sh, l))
            seq += 1

    def chain_kills(a, b, sh, l, e) -> bool:
        ea, eb = entries[a], entries[b]
        lkey = okey(l)
        blm = sigma.mono(eb.lm.mono, sh)
        for ent in entries:
            u = e - ent.lm.sdeg
            if u < 0:
                continue
            img = sigma.mono(ent.lm.mono, u)
            if not mono_divides(img, l):
                continue
            if okey(mono_lcm(ea.lm.mono, img)) < lkey and okey(
                mono_lcm(img, blm)
            ) < lkey:
                return True
        return False

    seen = set()
    for h in H:
        if h.is_zero():
            continue
        g = h.monic()
        if g in seen:
            continue
        seen.add(g)
        entries.append(_LeftEntry(g, len(entries)))
        push_pairs(len(entries) - 1)

    while heap:
        e, lkey, _, a, b, sh, l = heapq.heappop(heap)
        if cfg.chain_criterion and chain_kills(a, b, sh, l, e):
            stats.chain_skipped += 1
            if trace is not None:
                trace.append(f"(g{a + 1}, s^{sh}.g{b + 1})@{e} skip:chain")
            continue
        ea, eb = entries[a], entries[b]
        s = spoly(ea.element, eb.shifted(sigma, sh))
        nf = _nf_left(s, entries, cfg) if s else s
        if nf.is_zero():
            stats.reduced_to_zero += 1
            if trace is not None:
                trace.append(f"(g{a + 1}, s^{sh}.g{b + 1})@{e} -> 0")
            continue
        entries.append(_LeftEntry(nf.monic(), len(entries)))
        stats.added += 1
        if trace is not None:
            trace.append(
                f"(g{a + 1}, s^{sh}.g{b + 1})@{e} -> g{len(entries)}"
            )
        push_pairs(len(entries) - 1)

    basis = [ent.element for ent in entries]
    if cfg.interreduce:
        basis = interreduce(basis, cfg)
    return GBResult(basis, cfg.mode, cfg.degree_bound, stats, trace)


# ---------------------------------------------------------------------------
# Normal form, interreduction, membership


def normal_form(f, G, cfg: GBConfig, record=None):
    """Normal form of f against the lazily shifted closure of G.

    In sigma mode f and G are polynomials of P and the closure is all
    sigma-power images; in skew/left modes they are skew elements and the
    closure carries the matching s-power decorations.
    """
    cfg.check_sigma()
    if cfg.mode == "sigma":
        entries = [_Entry(g.monic(), 0, i) for i, g in enumerate(G) if g]
        find = _make_finder(entries, cfg, level_capped=False)
        nf = _nf_terms(f.terms, 0, find, cfg.sigma, cfg.ordering, record)
        return Polynomial(nf, cfg.ordering, _sorted=True)
    if cfg.mode == "left":
        entries = [_LeftEntry(g.monic(), i) for i, g in enumerate(G) if g]
        return _nf_left(f, entries, cfg)
    # two-sided: reduce each s-homogeneous layer at its own level
    entries = []
    for i, g in enumerate(G):
        if not g:
            continue
        if not g.is_s_homogeneous():
            raise ValueError("two-sided reducers must be s-homogeneous")
        sdeg, poly = g.parts[0]
        entries.append(_Entry(poly.monic(), sdeg, i))
    find = _make_finder(entries, cfg, level_capped=True)
    parts = {}
    for level, poly in f.parts:
        nf = _nf_terms(poly.terms, level, find, cfg.sigma, cfg.ordering, record)
        if nf:
            parts[level] = Polynomial(nf, cfg.ordering, _sorted=True)
    return SkewElement(parts)


def _tail_reduce_entry(poly: Polynomial, sdeg: int, entries, cfg: GBConfig):
    """Reduce every term below the leading one; the lm is already minimal."""
    find = _make_finder(entries, cfg, level_capped=(cfg.mode == "skew"))
    level = sdeg if cfg.mode == "skew" else 0
    nf = _nf_terms(poly.terms[1:], level, find, cfg.sigma, cfg.ordering)
    return Polynomial((poly.terms[0],) + tuple(nf), poly.ordering, _sorted=True)


def interreduce(basis, cfg: GBConfig):
    """Minimalize lm-redundant elements, reduce all tails, sort canonically."""
    cfg.check_sigma()
    sigma = cfg.sigma
    okey = cfg.ordering.key

    if cfg.mode in ("sigma", "skew"):
        skew_mode = cfg.mode == "skew"
        if skew_mode:
            items = [(g.parts[0][1].monic(), g.parts[0][0]) for g in basis if g]
        else:
            items = [(g.monic(), 0) for g in basis if g]
        items.sort(key=lambda t: (t[1], okey(t[0].lm())))
        kept: list[tuple[Polynomial, int]] = []

        def dominated(lm, sdeg):
            wl = top_place(lm) if lm else -1
            for p, sd in kept:
                plm = p.lm()
                if skew_mode:
                    ucap = sdeg - sd
                    if ucap < 0:
                        continue
                    if not plm:
                        return True
                    if isinstance(sigma, ShiftEndo):
                        ucap = min(ucap, wl - top_place(plm))
                        if ucap < 0:
                            continue
                else:
                    ucap = wl - top_place(plm)
                    if ucap < 0:
                        continue
                for u in range(ucap + 1):
                    if mono_divides(sigma.mono(plm, u), lm):
                        return True
            return False

        for poly, sdeg in items:
            if not dominated(poly.lm(), sdeg):
                kept.append((poly, sdeg))
        entries = [_Entry(p, sd, i) for i, (p, sd) in enumerate(kept)]
        out = [
            (_tail_reduce_entry(p, sd, entries, cfg), sd) for p, sd in kept
        ]
        if skew_mode:
            return [SkewElement.of_poly(p, sd) for p, sd in out]
        return [p for p, _ in out]

    # left mode
    items = [g.monic() for g in basis if g]
    items.sort(key=lambda g: (g.lm().sdeg, okey(g.lm().mono)))
    kept = []
    for g in items:
        v = g.lm()
        hit = False
        for p in kept:
            u = v.sdeg - p.lm().sdeg
            if u >= 0 and mono_divides(sigma.mono(p.lm().mono, u), v.mono):
                hit = True
                break
        if not hit:
            kept.append(g)
    entries = [_LeftEntry(g, i) for i, g in enumerate(kept)]
    out = []
    for g in kept:
        lt = g.lt()
        nf = _nf_left(g - lt, entries, cfg)
        out.append(lt + nf)
    return out


def member(f, basis, cfg: GBConfig) -> bool:
    """Ideal membership of f against a d-truncated basis.

    Only decidable inside the window: in sigma mode every monomial of f must
    have weight <= d, in skew/left modes s-degree <= d.
    """
    if isinstance(f, Polynomial):
        if f.is_zero():
            return True
        if cfg.mode == "sigma" and not f.weight() <= cfg.degree_bound:
            raise WindowExceeded(
                f"weight of query exceeds truncation bound {cfg.degree_bound}"
            )
    else:
        if f.is_zero():
            return True
        if f.sdeg() > cfg.degree_bound:
            raise WindowExceeded(
                f"s-degree of query exceeds truncation bound {cfg.degree_bound}"
            )
    return not normal_form(f, basis, cfg)


# ---------------------------------------------------------------------------
# Post-hoc certification


def certify(basis, cfg: GBConfig, pair_filter=None):
    """Re-enumerate every in-window critical pair with no criteria and check
    that each S-polynomial reduces to zero.  Returns (ok, failures)."""
    cfg.check_sigma()
    sigma = cfg.sigma
    d = cfg.degree_bound
    failures: list[str] = []

    if cfg.mode in ("sigma", "skew"):
        skew_mode = cfg.mode == "skew"
        if skew_mode:
            items = [(g.parts[0][1], g.parts[0][0]) for g in basis if g]
        else:
            items = [(g, 0) for g in basis if g]
        entries = [_Entry(p.monic(), sd, i) for i, (p, sd) in enumerate(items)]
        find = _make_finder(entries, cfg, level_capped=skew_mode)
        n = len(entries)
        for a in range(n):
            for b in range(n):
                ea, eb = entries[a], entries[b]
                if skew_mode:
                    sh_hi = d - eb.sdeg
                else:
                    if ea.lmw > d:
                        continue
                    sh_hi = d - eb.lmw
                sh_lo = 1 if a >= b else 0
                for sh in range(sh_lo, sh_hi + 1):
                    blm = eb.shifted_lm(sigma, sh)
                    l = mono_lcm(ea.lm, blm)
                    if skew_mode:
                        stratum = max(ea.sdeg, eb.sdeg + sh)
                    else:
                        stratum = max(ea.lmw, sh + eb.lmw)
                    if stratum > d:
                        continue
                    if pair_filter is not None and not pair_filter(l, stratum):
                        continue
                    s = spoly_poly(ea.poly, eb.shifted(sigma, sh))
                    level = stratum if skew_mode else 0
                    nf = _nf_terms(
                        s.terms, level, find, sigma, cfg.ordering
                    )
                    if nf:
                        failures.append(
                            f"pair (g{a + 1}, sigma^{sh}.g{b + 1}) does not "
                            f"reduce to zero"
                        )
        return not failures, failures

    # left mode
    entries = [_LeftEntry(g.monic(), i) for i, g in enumerate(basis) if g]
    n = len(entries)
    for a in range(n):
        for b in range(n):
            ea, eb = entries[a], entries[b]
            sh = ea.lm.sdeg - eb.lm.sdeg
            if sh < 0 or (sh == 0 and a >= b):
                continue
            if ea.lm.sdeg > d:
                continue
            s = spoly(ea.element, eb.shifted(sigma, sh))
            if s and not _nf_left(s, entries, cfg).is_zero():
                failures.append(
                    f"pair (g{a + 1}, s^{sh}.g{b + 1}) does not reduce to zero"
                )
    return not failures, failures


# ---------------------------------------------------------------------------
# The independent oracle


def _oracle_nf(f: SkewElement, gens: list[SkewElement], ordering):
    """Plain module normal form: first listed generator whose lm divides."""
    okey = ordering.key
    work: dict[tuple[int, Monomial], object] = {}
    for i, p in f.parts:
        for m, c in p.terms:
            work[(i, m)] = c
    out: dict[int, list] = {}
    while work:
        e, m = max(work, key=lambda k: (k[0], okey(k[1])))
        c = work.pop((e, m))
        red = None
        for g in gens:
            v = g.lm()
            if v.sdeg == e and mono_divides(v.mono, m):
                red = g
                break
        if red is None:
            out.setdefault(e, []).append((m, c))
            continue
        q = mono_div(m, red.lm().mono)
        lead = True
        for i, p in red.parts:
            for mm, cc in p.terms:
                if lead:
                    lead = False
                    continue
                t = (i, mono_mul(q, mm))
                prev = work.get(t)
                if prev is None:
                    work[t] = -c * cc
                else:
                    s2 = prev - c * cc
                    if s2:
                        work[t] = s2
                    else:
                        del work[t]
    return SkewElement({e: Polynomial(ts, ordering) for e, ts in out.items()})


def _oracle_buchberger(gens: list[SkewElement], ordering, degree_cap=None):
    """Textbook module Buchberger: no shifts, no criteria, FIFO pairs.

    degree_cap skips pairs whose lcm exceeds that total degree, which is
    exact for the capped part of the lm-ideal when the input is homogeneous.
    """
    G: list[SkewElement] = []
    seen = set()
    for g in gens:
        if g.is_zero():
            continue
        g = g.monic()
        if g not in seen:
            seen.add(g)
            G.append(g)
    pairs = [(i, j) for j in range(len(G)) for i in range(j)]
    k = 0
    while k < len(pairs):
        i, j = pairs[k]
        k += 1
        vi, vj = G[i].lm(), G[j].lm()
        if vi.sdeg != vj.sdeg:
            continue
        if degree_cap is not None:
            l = mono_lcm(vi.mono, vj.mono)
            if sum(e for _, e in l) > degree_cap:
                continue
        s = spoly(G[i], G[j])
        if s.is_zero():
            continue
        nf = _oracle_nf(s, G, ordering)
        if nf.is_zero():
            continue
        G.append(nf.monic())
        t = len(G) - 1
        pairs.extend((i2, t) for i2 in range(t))
    return G


def expand_window_sigma(H, cfg: GBConfig):
    """All shift images of H whose polynomial weight stays within d."""
    out = []
    for h in H:
        if h.is_zero():
            continue
        w = h.weight()
        if w.is_bottom:  # constant: shift-invariant
            out.append(h)
            continue
        for i in range(cfg.degree_bound - int(w) + 1):
            out.append(cfg.sigma.poly(h, i))
    return out


def expand_window_skew(H, cfg: GBConfig):
    """All s**i . h . s**j images of H with total s-degree within d."""
    out = []
    for h in H:
        if h.is_zero():
            continue
        sdeg, poly = h.parts[0]
        for i in range(cfg.degree_bound - sdeg + 1):
            img = cfg.sigma.poly(poly, i)
            for lvl in range(sdeg + i, cfg.degree_bound + 1):
                out.append(SkewElement.of_poly(img, lvl))
    return out


def oracle_gbasis_truncated(H, cfg: GBConfig, degree_cap=None) -> GBResult:
    """Independent cross-check: expand the shifted generators inside the
    window and run a bare commutative (module) Buchberger over them."""
    cfg.check_sigma()
    if cfg.mode == "sigma":
        expanded = [SkewElement.of_poly(p) for p in expand_window_sigma(H, cfg)]
    elif cfg.mode == "skew":
        for h in H:
            if h and not h.is_s_homogeneous():
                raise ValueError("two-sided mode needs s-homogeneous generators")
        expanded = expand_window_skew(H, cfg)
    else:
        raise ValueError("oracle supports sigma and skew modes")
    G = _oracle_buchberger(expanded, cfg.ordering, degree_cap)
    basis: list = []
    for g in G:
        if cfg.mode == "sigma":
            basis.append(g.parts[0][1] if g else Polynomial.zero(cfg.ordering))
        else:
            basis.append(g)
    stats = PairStats()
    return GBResult(basis, cfg.mode, cfg.degree_bound, stats, None)


def lm_window_match(main: GBResult, oracle: GBResult, cfg: GBConfig) -> bool:
    """Window-restricted equality of leading-monomial ideals.

    The main basis is expanded through its shift decorations inside the
    window; the oracle basis is already a module basis over the window ring.
    The two generate the same truncated lm-ideal iff each side's generators
    are divisible by the other's.
    """
    d = cfg.degree_bound
    sigma = cfg.sigma
    if cfg.mode == "sigma":
        A = set()
        for g in main.basis:
            if g.is_zero():
                continue
            lm = g.lm()
            if not lm:
                A.add(MONO_ONE)
                continue
            w = top_place(lm)
            for i in range(d - w + 1):
                A.add(sigma.mono(lm, i))
        B = {
            b.lm()
            for b in oracle.basis
            if b and (not b.lm() or top_place(b.lm()) <= d)
        }
        return _mutually_divisible(A, B)
    if cfg.mode == "skew":
        A = set()
        for g in main.basis:
            if g.is_zero():
                continue
            v = g.lm()
            for i in range(d - v.sdeg + 1):
                img = sigma.mono(v.mono, i)
                for lvl in range(v.sdeg + i, d + 1):
                    A.add((lvl, img))
        B = set()
        for b in oracle.basis:
            if b.is_zero():
                continue
            v = b.lm()
            B.add((v.sdeg, v.mono))
        return _mutually_divisible_leveled(A, B)
    raise ValueError("lm window comparison supports sigma and skew modes")


def _mutually_divisible(A: set, B: set) -> bool:
    for a in A:
        if not any(mono_divides(b, a) for b in B):
            return False
    for b in B:
        if not any(mono_divides(a, b) for a in A):
            return False
    return True


def _mutually_divisible_leveled(A: set, B: set) -> bool:
    for la, a in A:
        if not any(lb == la and mono_divides(b, a) for lb, b in B):
            return False
    for lb, b in B:
        if not any(la == lb and mono_divides(a, b) for la, a in A):
            return False
    return True
