"""Exact ordinal arithmetic in Cantor normal form below epsilon_0.

An ordinal is a finite sum ``w^e1*c1 + ... + w^ek*ck`` with ordinal
exponents ``e1 > ... > ek`` and positive integer coefficients.  The empty
sum is 0.  Values are immutable and every operation is pure, so they are
safe to share between threads.

The distinguished value ``INFINITY`` compares above every ordinal and is
accepted by the extended-order helpers (``gamma_of``, ``is_gamma_number``).
"""

from __future__ import annotations

from typing import Iterable, Tuple, Union

from .errors import NotALimitError, ParseError

# Nesting depth of the exponent tower; exceeding it raises OverflowError
# instead of recursing without bound.  Process-wide, adjustable below.
MAX_NESTING_DEPTH = 64


def set_max_nesting_depth(depth: int) -> int:
    """Set the tower-depth bound; returns the previous value."""
    global MAX_NESTING_DEPTH
    if not isinstance(depth, int) or depth < 1:
        raise ValueError("depth bound must be a positive integer")
    previous = MAX_NESTING_DEPTH
    MAX_NESTING_DEPTH = depth
    return previous


class Ordinal:
    """An ordinal below epsilon_0, kept in canonical Cantor normal form."""

    __slots__ = ("_terms", "_depth", "_hash")

    def __init__(self, value: int = 0):
        if not isinstance(value, int):
            raise TypeError("Ordinal() takes a non-negative int; use parse_ordinal for text")
        if value < 0:
            raise ValueError("ordinals are non-negative")
        self._terms: Tuple[Tuple["Ordinal", int], ...]
        self._terms = ((ZERO, value),) if value else ()
        self._depth = 1 if value else 0
        self._hash = None

    @classmethod
    def from_terms(cls, terms: Iterable[Tuple["Ordinal", int]]) -> "Ordinal":
        """Build an ordinal from (exponent, coefficient) pairs.

        The pairs must already be canonical: exponents strictly decreasing,
        coefficients >= 1.
        """
        tt = tuple((e, c) for e, c in terms)
        depth = 0
        prev = None
        for e, c in tt:
            if not isinstance(e, Ordinal):
                raise TypeError("exponents must be Ordinal values")
            if not isinstance(c, int) or c < 1:
                raise ValueError("coefficients must be positive integers")
            if prev is not None and not prev > e:
                raise ValueError("exponents must be strictly decreasing")
            prev = e
            depth = max(depth, e._depth)
        if tt:
            depth += 1
        if depth > MAX_NESTING_DEPTH:
            raise OverflowError(f"ordinal nesting depth exceeds {MAX_NESTING_DEPTH}")
        obj = cls.__new__(cls)
        obj._terms = tt
        obj._depth = depth
        obj._hash = None
        return obj

    # -- structure ---------------------------------------------------------

    @property
    def terms(self) -> Tuple[Tuple["Ordinal", int], ...]:
        return self._terms

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_finite(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and self._terms[0][0].is_zero)

    @property
    def is_successor(self) -> bool:
        return bool(self._terms) and self._terms[-1][0].is_zero

    @property
    def is_limit(self) -> bool:
        return bool(self._terms) and not self._terms[-1][0].is_zero

    @property
    def leading_exponent(self) -> "Ordinal":
        if not self._terms:
            raise ValueError("0 has no leading exponent")
        return self._terms[0][0]

    @property
    def leading_coefficient(self) -> int:
        if not self._terms:
            raise ValueError("0 has no leading coefficient")
        return self._terms[0][1]

    def finite_part(self) -> int:
        """The coefficient of w^0, i.e. the trailing natural number."""
        if self.is_successor:
            return self._terms[-1][1]
        return 0

    def limit_part(self) -> "Ordinal":
        """Self with the trailing natural number removed."""
        if self.is_successor:
            return Ordinal.from_terms(self._terms[:-1])
        return self

    def predecessor(self) -> "Ordinal":
        if not self.is_successor:
            raise ValueError("only successor ordinals have a predecessor")
        head, (e, c) = self._terms[:-1], self._terms[-1]
        if c > 1:
            return Ordinal.from_terms(head + ((e, c - 1),))
        return Ordinal.from_terms(head)

    def __int__(self) -> int:
        if not self.is_finite:
            raise OverflowError("ordinal is not finite")
        return self._terms[0][1] if self._terms else 0

    def __bool__(self) -> bool:
        return bool(self._terms)

    # -- ordering ----------------------------------------------------------

    def _cmp(self, other: "Ordinal") -> int:
        for (e1, c1), (e2, c2) in zip(self._terms, other._terms):
            r = e1._cmp(e2)
            if r:
                return r
            if c1 != c2:
                return -1 if c1 < c2 else 1
        if len(self._terms) != len(other._terms):
            return -1 if len(self._terms) < len(other._terms) else 1
        return 0

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._terms)
        return self._hash

    def __lt__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self._cmp(other) < 0

    def __le__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self._cmp(other) <= 0

    def __gt__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self._cmp(other) > 0

    def __ge__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self._cmp(other) >= 0

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero:
            return self
        if self.is_zero:
            return other
        lead = other._terms[0][0]
        keep = [t for t in self._terms if t[0] > lead]
        rest = self._terms[len(keep):]
        if rest and rest[0][0] == lead:
            merged = ((lead, rest[0][1] + other._terms[0][1]),) + other._terms[1:]
            return Ordinal.from_terms(tuple(keep) + merged)
        return Ordinal.from_terms(tuple(keep) + other._terms)

    def __radd__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other + self

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if self.is_zero or other.is_zero:
            return ZERO
        e1 = self.leading_exponent
        out = ZERO
        for f, d in other._terms:
            if f.is_zero:
                # finite right factor scales the leading coefficient only
                part = Ordinal.from_terms(
                    ((e1, self.leading_coefficient * d),) + self._terms[1:]
                )
            else:
                part = Ordinal.from_terms(((e1 + f, d),))
            out = out + part
        return out

    def __rmul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other * self

    def __pow__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero:
            return ONE
        if self.is_zero:
            return ZERO
        if self == ONE:
            return ONE
        if self.is_finite:
            return _pow_finite_base(int(self), other)
        limit, fin = other.limit_part(), other.finite_part()
        out = ONE
        if limit:
            # a^limit = w^(e1 * limit) for infinite a
            out = Ordinal.from_terms(((self.leading_exponent * limit, 1),))
        if fin:
            out = out * _pow_nat(self, fin)
        return out

    def __divmod__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("ordinal division by zero")
        q = ZERO
        r = self
        while r >= other:
            e1, c1 = r._terms[0]
            f1, d1 = other._terms[0]
            if e1 > f1:
                delta = left_subtract(f1, e1)
                q = q + Ordinal.from_terms(((delta, c1),))
                r = Ordinal.from_terms(r._terms[1:])
            else:
                k = c1 // d1
                cand = other * k
                if cand > r:
                    k -= 1
                    cand = other * k
                q = q + Ordinal(k)
                r = left_subtract(cand, r)
        return q, r

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    # -- text --------------------------------------------------------------

    def __str__(self) -> str:
        return render_ordinal(self)

    def __repr__(self) -> str:
        return f"Ordinal({render_ordinal(self)!r})"


def _coerce(x):
    if isinstance(x, Ordinal):
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        return Ordinal(x)
    return None


def _pow_nat(a: Ordinal, k: int) -> Ordinal:
    """a**k for a natural exponent, by square and multiply."""
    out = ONE
    base = a
    while k:
        if k & 1:
            out = out * base
        k >>= 1
        if k:
            base = base * base
    return out


def _pow_finite_base(n: int, b: Ordinal) -> Ordinal:
    """n**b for finite n >= 2 and an arbitrary ordinal exponent b."""
    limit, fin = b.limit_part(), b.finite_part()
    if limit.is_zero:
        return Ordinal(n ** fin)
    # n^(w^e * c) = w^(w^(e') * c) where 1 + e' = e
    exp_terms = []
    for e, c in limit.terms:
        exp_terms.append((left_subtract(ONE, e), c))
    head = Ordinal.from_terms(exp_terms)
    return Ordinal.from_terms(((head, n ** fin if fin else 1),))


def left_subtract(small: Ordinal, big: Ordinal) -> Ordinal:
    """The unique g with small + g == big; requires small <= big."""
    i = 0
    ts, tb = small.terms, big.terms
    while i < len(ts) and i < len(tb) and ts[i] == tb[i]:
        i += 1
    if i == len(ts):
        return Ordinal.from_terms(tb[i:])
    if i == len(tb):
        raise ValueError("left_subtract: minuend is smaller")
    (e, c), (e2, c2) = ts[i], tb[i]
    if e == e2 and c < c2:
        return Ordinal.from_terms(((e, c2 - c),) + tb[i + 1:])
    if e < e2:
        return Ordinal.from_terms(tb[i:])
    raise ValueError("left_subtract: minuend is smaller")


# -- distinguished values --------------------------------------------------

ZERO = Ordinal(0)
ONE = Ordinal(1)
OMEGA = Ordinal.from_terms(((ONE, 1),))


def omega_pow(exponent, coefficient: int = 1) -> Ordinal:
    """w^exponent * coefficient."""
    e = _coerce(exponent)
    if e is None:
        raise TypeError("exponent must be an Ordinal or int")
    if coefficient < 1:
        raise ValueError("coefficient must be positive")
    return Ordinal.from_terms(((e, coefficient),))


class InfinityType:
    """Absorbing top element of the extended ordinal order."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return isinstance(other, InfinityType)

    def __hash__(self):
        return hash("szlenkcalc.infinity")

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return isinstance(other, InfinityType)

    def __gt__(self, other):
        return not isinstance(other, InfinityType)

    def __ge__(self, other):
        return True

    def __str__(self):
        return "infinity"

    def __repr__(self):
        return "INFINITY"


INFINITY = InfinityType()

ExtOrdinal = Union[Ordinal, InfinityType]


# -- gamma numbers, cofinality, fundamental sequences ----------------------

def is_gamma_number(x: ExtOrdinal) -> bool:
    """True for 0, the powers w^z (including 1 = w^0), and infinity.

    These are exactly the values closed under addition from below: a gamma
    number exceeds the sum of any two smaller ordinals.
    """
    if isinstance(x, InfinityType):
        return True
    a = _coerce(x)
    if a.is_zero:
        return True
    return len(a.terms) == 1 and a.terms[0][1] == 1


def gamma_of(x: ExtOrdinal) -> ExtOrdinal:
    """Least gamma number >= x; infinity maps to infinity."""
    if isinstance(x, InfinityType):
        return INFINITY
    a = _coerce(x)
    if a is None:
        raise TypeError("gamma_of expects an ordinal or INFINITY")
    if is_gamma_number(a):
        return a
    return omega_pow(a.leading_exponent + ONE)


def cofinality(x) -> Ordinal:
    """0 for 0, 1 for successors, w for limits (all limits here are countable)."""
    a = _coerce(x)
    if a is None:
        raise TypeError("cofinality expects an ordinal")
    if a.is_zero:
        return ZERO
    if a.is_successor:
        return ONE
    return OMEGA


def fundamental_sequence(x, n: int) -> Ordinal:
    """The n-th element of the canonical fundamental sequence of a limit.

    Rules, applied to the last normal-form term w^e * c of a:
      c > 1            ->  a[n] = (a with c-1) + (w^e)[n]
      e = f + 1        ->  (w^e)[n] = w^f * n
      e a limit        ->  (w^e)[n] = w^(e[n])
    The values increase strictly in n with supremum a.
    """
    a = _coerce(x)
    if not isinstance(n, int) or n < 1:
        raise ValueError("index must be a positive integer")
    if a is None or not a.is_limit:
        raise NotALimitError("fundamental sequences exist only for limit ordinals")
    head, (e, c) = a.terms[:-1], a.terms[-1]
    prefix = Ordinal.from_terms(head + ((e, c - 1),)) if c > 1 else Ordinal.from_terms(head)
    if e.is_successor:
        step = omega_pow(e.predecessor(), n)
    else:
        step = omega_pow(fundamental_sequence(e, n))
    return prefix + step


# -- parsing and rendering -------------------------------------------------

_DIGITS = set("0123456789")


class _Tokenizer:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def _skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self._skip_ws()
        if self.pos >= len(self.text):
            return None, self.pos
        ch = self.text[self.pos]
        if ch in "+*^()":
            return ch, self.pos
        if ch in ("w", "ω"):
            return "w", self.pos
        if ch in _DIGITS:
            j = self.pos
            while j < len(self.text) and self.text[j] in _DIGITS:
                j += 1
            return self.text[self.pos:j], self.pos
        raise ParseError(f"unexpected character {ch!r}", self.pos)

    def take(self):
        tok, pos = self.peek()
        if tok is not None:
            self.pos = pos + len(tok) if tok[0] in _DIGITS else pos + 1
        return tok, pos


class _OrdinalParser:
    """Recursive descent for: sum := prod ('+' prod)*; prod := pow ('*' pow)*;
    pow := atom ('^' pow)?; atom := 'w' | nat | '(' sum ')'."""

    def __init__(self, text: str):
        self.toks = _Tokenizer(text)

    def parse(self) -> Ordinal:
        value = self.sum()
        tok, pos = self.toks.peek()
        if tok is not None:
            raise ParseError(f"unexpected trailing token {tok!r}", pos)
        return value

    def sum(self) -> Ordinal:
        value = self.prod()
        while True:
            tok, _ = self.toks.peek()
            if tok != "+":
                return value
            self.toks.take()
            value = value + self.prod()

    def prod(self) -> Ordinal:
        value = self.power()
        while True:
            tok, _ = self.toks.peek()
            if tok != "*":
                return value
            self.toks.take()
            value = value * self.power()

    def power(self) -> Ordinal:
        value = self.atom()
        tok, _ = self.toks.peek()
        if tok == "^":
            self.toks.take()
            value = value ** self.power()
        return value

    def atom(self) -> Ordinal:
        tok, pos = self.toks.take()
        if tok is None:
            raise ParseError("unexpected end of input", pos)
        if tok == "w":
            return OMEGA
        if tok[0] in _DIGITS:
            return Ordinal(int(tok))
        if tok == "(":
            value = self.sum()
            tok2, pos2 = self.toks.take()
            if tok2 != ")":
                raise ParseError("expected ')'", pos2)
            return value
        raise ParseError(f"unexpected token {tok!r}", pos)


def parse_ordinal(text: str) -> Ordinal:
    """Parse ordinal expression text (ascii 'w' or unicode omega) to canonical form."""
    if not isinstance(text, str):
        raise TypeError("parse_ordinal expects text")
    return _OrdinalParser(text).parse()


def render_ordinal(x, style: str = "ascii") -> str:
    """Canonical text: decreasing terms, 'w^(E)*c' with sugar for small cases."""
    a = _coerce(x)
    if a is None:
        raise TypeError("render_ordinal expects an ordinal")
    if style not in ("ascii", "unicode"):
        raise ValueError("style must be 'ascii' or 'unicode'")
    w = "w" if style == "ascii" else "ω"
    if a.is_zero:
        return "0"
    parts = []
    for e, c in a.terms:
        if e.is_zero:
            parts.append(str(c))
            continue
        if e == ONE:
            body = w
        elif e.is_finite:
            body = f"{w}^{int(e)}"
        elif e == OMEGA:
            body = f"{w}^{w}"
        else:
            body = f"{w}^({render_ordinal(e, style)})"
        parts.append(body if c == 1 else f"{body}*{c}")
    return "+".join(parts)


def parse_ext_ordinal(text: str) -> ExtOrdinal:
    """Like parse_ordinal but also accepts the token 'infinity' (or 'inf')."""
    stripped = text.strip().lower()
    if stripped in ("infinity", "inf", "∞"):
        return INFINITY
    return parse_ordinal(text)


def render_ext_ordinal(x: ExtOrdinal, style: str = "ascii") -> str:
    if isinstance(x, InfinityType):
        return "infinity"
    return render_ordinal(x, style)
