"""Monomials and polynomials in doubly indexed variables x_letter(place).

A variable is identified by a packed integer code ``place << 20 | letter``,
so that comparing codes compares (place, letter) pairs: the precedence is
place-major and letter-minor, ascending.  A monomial is a tuple of
(code, exponent) pairs sorted by code descending; with that layout native
tuple comparison of two monomials is exactly the lex comparison, and the
variable of largest place sits in front.

Two monomial orderings are provided, lex and deglex, both well-orderings
compatible with the place-shift endomorphism.  The weight of a monomial is
its largest place (with a distinguished bottom value for the monomial 1);
it bounds how far a shifted divisor can sit inside a multiple and drives
all truncation windows downstream.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple

__all__ = [
    "LETTER_BITS",
    "PLACE_STEP",
    "Variable",
    "Monomial",
    "MONO_ONE",
    "var_code",
    "code_letter",
    "code_place",
    "mono",
    "mono_from_pairs",
    "mono_mul",
    "mono_pow",
    "mono_divides",
    "mono_div",
    "mono_gcd",
    "mono_lcm",
    "mono_coprime",
    "mono_degree",
    "mono_variables",
    "multidegree",
    "Weight",
    "W_BOTTOM",
    "weight",
    "top_place",
    "MonomialOrdering",
    "LEX",
    "DEGLEX",
    "ORDERINGS",
    "compare",
    "Polynomial",
]

LETTER_BITS = 20
PLACE_STEP = 1 << LETTER_BITS
_LETTER_MASK = PLACE_STEP - 1

# A monomial is a tuple of (code, exponent) pairs, codes strictly descending,
# exponents positive.  The empty tuple is the monomial 1.
Monomial = tuple
MONO_ONE: Monomial = ()


def var_code(letter: int, place: int) -> int:
    """Pack a (letter, place) pair into a single comparable code."""
    if letter < 0 or letter >= PLACE_STEP:
        raise ValueError(f"letter index {letter} out of range")
    if place < 0:
        raise ValueError(f"place {place} must be nonnegative")
    return (place << LETTER_BITS) | letter


def code_letter(code: int) -> int:
    return code & _LETTER_MASK


def code_place(code: int) -> int:
    return code >> LETTER_BITS


class Variable(NamedTuple):
    """A doubly indexed variable x_letter(place)."""

    letter: int
    place: int

    @property
    def code(self) -> int:
        return var_code(self.letter, self.place)

    @classmethod
    def from_code(cls, code: int) -> "Variable":
        return cls(code_letter(code), code_place(code))


def mono(*pairs: tuple[int, int, int]) -> Monomial:
    """Build a monomial from (letter, place, exponent) triples."""
    return mono_from_pairs((var_code(l, p), e) for l, p, e in pairs)


def mono_from_pairs(pairs: Iterable[tuple[int, int]]) -> Monomial:
    """Normalize (code, exponent) pairs: merge duplicates, drop zeros, sort."""
    acc: dict[int, int] = {}
    for code, exp in pairs:
        if exp < 0:
            raise ValueError("negative exponent")
        if exp:
            acc[code] = acc.get(code, 0) + exp
    return tuple(sorted(acc.items(), reverse=True))


def mono_mul(m: Monomial, n: Monomial) -> Monomial:
    """Product of two monomials (merge of sorted exponent vectors)."""
    if not m:
        return n
    if not n:
        return m
    out = []
    i = j = 0
    lm, ln = len(m), len(n)
    while i < lm and j < ln:
        cm, em = m[i]
        cn, en = n[j]
        if cm > cn:
            out.append(m[i])
            i += 1
        elif cm < cn:
            out.append(n[j])
            j += 1
        else:
            out.append((cm, em + en))
            i += 1
            j += 1
    out.extend(m[i:])
    out.extend(n[j:])
    return tuple(out)


def mono_pow(m: Monomial, k: int) -> Monomial:
    if k < 0:
        raise ValueError("negative exponent")
    if k == 0:
        return MONO_ONE
    return tuple((c, e * k) for c, e in m)


def mono_divides(m: Monomial, n: Monomial) -> bool:
    """True iff m divides n."""
    i = 0
    ln = len(n)
    for cm, em in m:
        while i < ln and n[i][0] > cm:
            i += 1
        if i == ln or n[i][0] != cm or n[i][1] < em:
            return False
        i += 1
    return True


def mono_div(m: Monomial, n: Monomial) -> Monomial:
    """Exact quotient m / n; raises ValueError if n does not divide m."""
    out = []
    j = 0
    lm = len(m)
    for cn, en in n:
        while j < lm and m[j][0] > cn:
            out.append(m[j])
            j += 1
        if j == lm or m[j][0] != cn or m[j][1] < en:
            raise ValueError("not divisible")
        if m[j][1] > en:
            out.append((cn, m[j][1] - en))
        j += 1
    out.extend(m[j:])
    return tuple(out)


def mono_gcd(m: Monomial, n: Monomial) -> Monomial:
    out = []
    i = j = 0
    lm, ln = len(m), len(n)
    while i < lm and j < ln:
        cm, em = m[i]
        cn, en = n[j]
        if cm > cn:
            i += 1
        elif cm < cn:
            j += 1
        else:
            out.append((cm, em if em < en else en))
            i += 1
            j += 1
    return tuple(out)


def mono_lcm(m: Monomial, n: Monomial) -> Monomial:
    if not m:
        return n
    if not n:
        return m
    out = []
    i = j = 0
    lm, ln = len(m), len(n)
    while i < lm and j < ln:
        cm, em = m[i]
        cn, en = n[j]
        if cm > cn:
            out.append(m[i])
            i += 1
        elif cm < cn:
            out.append(n[j])
            j += 1
        else:
            out.append((cm, em if em > en else en))
            i += 1
            j += 1
    out.extend(m[i:])
    out.extend(n[j:])
    return tuple(out)


def mono_coprime(m: Monomial, n: Monomial) -> bool:
    """True iff gcd(m, n) = 1, without building the gcd."""
    i = j = 0
    lm, ln = len(m), len(n)
    while i < lm and j < ln:
        cm = m[i][0]
        cn = n[j][0]
        if cm > cn:
            i += 1
        elif cm < cn:
            j += 1
        else:
            return False
    return True


def mono_degree(m: Monomial) -> int:
    """Total degree."""
    return sum(e for _, e in m)


def mono_variables(m: Monomial) -> list[Variable]:
    return [Variable.from_code(c) for c, _ in m]


def multidegree(m: Monomial) -> dict[int, int]:
    """Per-place variable count (with multiplicity), as a sparse map."""
    out: dict[int, int] = {}
    for c, e in m:
        p = c >> LETTER_BITS
        out[p] = out.get(p, 0) + e
    return out


class Weight:
    """An element of {-inf} union N under (max, +).

    The bottom element -inf (the weight of the monomial 1) is a genuine
    distinguished value, absorbing under addition and below every natural
    number; it is never conflated with an integer.
    """

    __slots__ = ("value",)

    def __init__(self, value: int | None = None):
        if value is not None and value < 0:
            raise ValueError("weights are nonnegative (or bottom)")
        self.value = value

    @property
    def is_bottom(self) -> bool:
        return self.value is None

    def _key(self):
        return (0, 0) if self.value is None else (1, self.value)

    def __lt__(self, other):
        return self._key() < _as_weight(other)._key()

    def __le__(self, other):
        return self._key() <= _as_weight(other)._key()

    def __gt__(self, other):
        return self._key() > _as_weight(other)._key()

    def __ge__(self, other):
        return self._key() >= _as_weight(other)._key()

    def __eq__(self, other):
        if isinstance(other, (Weight, int)):
            return self._key() == _as_weight(other)._key()
        return NotImplemented

    def __hash__(self):
        return hash(self._key())

    def __add__(self, other):
        other = _as_weight(other)
        if self.value is None or other.value is None:
            return W_BOTTOM
        return Weight(self.value + other.value)

    __radd__ = __add__

    def __int__(self) -> int:
        if self.value is None:
            raise ValueError("bottom weight has no integer value")
        return self.value

    def __repr__(self):
        return "-inf" if self.value is None else str(self.value)


def _as_weight(x) -> Weight:
    if isinstance(x, Weight):
        return x
    if isinstance(x, int):
        return Weight(x)
    raise TypeError(f"cannot compare Weight with {type(x).__name__}")


W_BOTTOM = Weight()


def weight(m: Monomial) -> Weight:
    """Largest place occurring in m; bottom for the monomial 1."""
    if not m:
        return W_BOTTOM
    return Weight(m[0][0] >> LETTER_BITS)


def top_place(m: Monomial) -> int:
    """Largest place of a nontrivial monomial (precondition: m != 1)."""
    return m[0][0] >> LETTER_BITS


class MonomialOrdering:
    """lex or deglex with place-major, letter-minor variable precedence."""

    __slots__ = ("kind",)

    def __init__(self, kind: str):
        if kind not in ("lex", "deglex"):
            raise ValueError(f"unknown ordering {kind!r}")
        self.kind = kind

    def key(self, m: Monomial):
        """A key whose native comparison realizes the ordering."""
        if self.kind == "lex":
            return m
        return (sum(e for _, e in m), m)

    def compare(self, m: Monomial, n: Monomial) -> int:
        km, kn = self.key(m), self.key(n)
        if km < kn:
            return -1
        if km > kn:
            return 1
        return 0

    def __eq__(self, other):
        return isinstance(other, MonomialOrdering) and other.kind == self.kind

    def __hash__(self):
        return hash(self.kind)

    def __repr__(self):
        return self.kind


LEX = MonomialOrdering("lex")
DEGLEX = MonomialOrdering("deglex")
ORDERINGS = {"lex": LEX, "deglex": DEGLEX}


def compare(m: Monomial, n: Monomial, ordering: MonomialOrdering) -> int:
    """Three-way comparison of monomials under the given ordering."""
    return ordering.compare(m, n)


class Polynomial:
    """A polynomial with terms stored strictly descending under its ordering.

    Terms are (monomial, coefficient) pairs with nonzero coefficients; the
    zero polynomial has no terms.  All operands of a binary operation must
    share the same ordering.
    """

    __slots__ = ("terms", "ordering")

    def __init__(self, terms, ordering: MonomialOrdering, _sorted: bool = False):
        if _sorted:
            self.terms = tuple(terms)
        else:
            acc: dict[Monomial, object] = {}
            for m, c in terms:
                if m in acc:
                    acc[m] = acc[m] + c
                else:
                    acc[m] = c
            key = ordering.key
            self.terms = tuple(
                sorted(((m, c) for m, c in acc.items() if c), key=lambda t: key(t[0]), reverse=True)
            )
        self.ordering = ordering

    @classmethod
    def zero(cls, ordering: MonomialOrdering) -> "Polynomial":
        return cls((), ordering, _sorted=True)

    @classmethod
    def constant(cls, c, ordering: MonomialOrdering) -> "Polynomial":
        return cls(((MONO_ONE, c),) if c else (), ordering, _sorted=True)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def leading(self):
        """The (coefficient, monomial) pair of the leading term."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        m, c = self.terms[0]
        return c, m

    def lm(self) -> Monomial:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return self.terms[0][0]

    def lc(self):
        if not self.terms:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.terms[0][1]

    def tail(self) -> "Polynomial":
        return Polynomial(self.terms[1:], self.ordering, _sorted=True)

    def _check(self, other: "Polynomial"):
        if self.ordering != other.ordering:
            raise ValueError("mixed monomial orderings")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        acc = dict(self.terms)
        for m, c in other.terms:
            if m in acc:
                s = acc[m] + c
                if s:
                    acc[m] = s
                else:
                    del acc[m]
            else:
                acc[m] = c
        key = self.ordering.key
        return Polynomial(
            sorted(acc.items(), key=lambda t: key(t[0]), reverse=True),
            self.ordering,
            _sorted=True,
        )

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __neg__(self) -> "Polynomial":
        return Polynomial(
            tuple((m, -c) for m, c in self.terms), self.ordering, _sorted=True
        )

    def scale(self, c) -> "Polynomial":
        """Multiply by a nonzero scalar (returns zero if c is zero)."""
        if not c:
            return Polynomial.zero(self.ordering)
        return Polynomial(
            tuple((m, coef * c) for m, coef in self.terms), self.ordering, _sorted=True
        )

    def mul_mono(self, q: Monomial) -> "Polynomial":
        """Multiply by a monomial; term order is preserved."""
        if not q:
            return self
        return Polynomial(
            tuple((mono_mul(q, m), c) for m, c in self.terms),
            self.ordering,
            _sorted=True,
        )

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        acc: dict[Monomial, object] = {}
        for m, c in self.terms:
            for n, d in other.terms:
                mn = mono_mul(m, n)
                if mn in acc:
                    acc[mn] = acc[mn] + c * d
                else:
                    acc[mn] = c * d
        return Polynomial(acc.items(), self.ordering)

    def monic(self) -> "Polynomial":
        if not self.terms:
            return self
        lc = self.terms[0][1]
        one = lc / lc
        if lc == one:
            return self
        return self.scale(one / lc)

    def degree(self) -> int:
        """Maximal total degree of a monomial (-1 for the zero polynomial)."""
        if not self.terms:
            return -1
        return max(mono_degree(m) for m, _ in self.terms)

    def weight(self) -> Weight:
        """Maximal weight over the monomials (bottom for zero)."""
        w = W_BOTTOM
        for m, _ in self.terms:
            wm = weight(m)
            if wm > w:
                w = wm
        return w

    def monomials(self) -> list[Monomial]:
        return [m for m, _ in self.terms]

    def coeff(self, m: Monomial):
        """Coefficient of the monomial m, or None if absent."""
        for mm, c in self.terms:
            if mm == m:
                return c
        return None

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash(self.terms)

    def __repr__(self):
        from .textio import format_poly

        return f"<{format_poly(self)}>"
