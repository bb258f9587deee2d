"""Multivariate polynomials over Z, Q and F_p, Groebner bases and ideal operations.

Polynomials are sparse: a dictionary from exponent tuples to nonzero
coefficients.  Integer coefficients are Python ints, rational ones are
:class:`fractions.Fraction`, and elements of ``F_p`` are ints in ``[0, p)``.

Over the integers the module computes *strong* Groebner bases (every leading
monomial of an ideal member, coefficient included, is a multiple of a basis
leading monomial) with Buchberger's algorithm extended by GCD-polynomials.
Over fields it computes reduced Groebner bases.  Every ideal operation used by
the primary decomposition code (intersection, colon, saturation, contraction
from Q, lifting from F_p, the constant of ``I cap Z``) is built on top of that.
"""

from __future__ import annotations

import heapq
import math
import re
from fractions import Fraction
from typing import Iterable, Optional, Sequence

__all__ = [
    "ZZ",
    "QQ",
    "GF",
    "PolyRing",
    "Poly",
    "Ideal",
    "PolySyntaxError",
    "strong_groebner",
    "field_groebner",
    "groebner",
    "normal_form",
    "is_strong_groebner",
    "ideal_intersect",
    "ideal_quotient",
    "saturate",
    "one_representation",
    "coefficient_map",
    "contract_to_Z",
    "lift_from_Fp",
    "elim_constant",
]


# ---------------------------------------------------------------------------
# coefficient domains


class IntegerRing:
    field = False
    characteristic = 0
    name = "ZZ"

    def norm(self, c):
        return int(c)

    def __repr__(self):
        return "ZZ"

    def __eq__(self, other):
        return isinstance(other, IntegerRing)

    def __hash__(self):
        return hash("ZZ")


class RationalField:
    field = True
    characteristic = 0
    name = "QQ"

    def norm(self, c):
        return c if isinstance(c, Fraction) else Fraction(c)

    def inv(self, c):
        return 1 / Fraction(c)

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")


class PrimeField:
    field = True

    def __init__(self, p: int):
        from .factorize import is_prime

        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.name = f"GF({p})"

    def norm(self, c):
        if isinstance(c, Fraction):
            return c.numerator * pow(c.denominator, -1, self.p) % self.p
        return int(c) % self.p

    def inv(self, c):
        return pow(c, -1, self.p)

    def __repr__(self):
        return self.name

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))


ZZ = IntegerRing()
QQ = RationalField()


def GF(p: int) -> PrimeField:
    return PrimeField(p)


# ---------------------------------------------------------------------------
# term orders


def _degrevlex_key(e):
    return (sum(e),) + tuple(-a for a in reversed(e))


def _lex_key(e):
    return e


class TermOrder:
    """A term order given by name.

    ``"degrevlex"`` and ``"lex"`` are the usual orders.  ``("elim", k)`` is the
    block order that compares the first ``k`` exponents by degrevlex and breaks
    ties with degrevlex on the rest; it eliminates the first ``k`` variables.
    """

    def __init__(self, spec="degrevlex"):
        if isinstance(spec, TermOrder):
            spec = spec.spec
        self.spec = spec
        if spec == "degrevlex":
            self._key = _degrevlex_key
        elif spec == "lex":
            self._key = _lex_key
        elif isinstance(spec, tuple) and spec[0] == "elim":
            k = spec[1]
            self._key = lambda e: _degrevlex_key(e[:k]) + _degrevlex_key(e[k:])
        else:
            raise ValueError(f"unknown term order {spec!r}")

    def key(self, e):
        return self._key(e)

    def __eq__(self, other):
        return isinstance(other, TermOrder) and self.spec == other.spec

    def __hash__(self):
        return hash(self.spec)

    def __repr__(self):
        return f"TermOrder({self.spec!r})"


# ---------------------------------------------------------------------------
# rings and polynomials


class PolySyntaxError(ValueError):
    """Raised by :meth:`PolyRing.parse`; ``col`` is the 1-based column."""

    def __init__(self, msg, col):
        super().__init__(f"column {col}: {msg}")
        self.msg = msg
        self.col = col


class PolyRing:
    """Polynomial ring ``domain[names]`` with a fixed term order."""

    def __init__(self, names, order="degrevlex", domain=ZZ):
        if isinstance(names, int):
            names = [f"x{i + 1}" for i in range(names)]
        self.names = tuple(names)
        self.nvars = len(self.names)
        self.order = TermOrder(order)
        self.domain = domain
        self._keys: dict = {}
        self.zero_exp = (0,) * self.nvars

    def key(self, e):
        k = self._keys.get(e)
        if k is None:
            k = self.order.key(e)
            self._keys[e] = k
        return k

    def __eq__(self, other):
        return (isinstance(other, PolyRing) and self.names == other.names
                and self.order == other.order and self.domain == other.domain)

    def __hash__(self):
        return hash((self.names, self.order, self.domain))

    def __repr__(self):
        return f"PolyRing({list(self.names)}, order={self.order.spec!r}, domain={self.domain!r})"

    # constructors
    def __call__(self, c=0) -> "Poly":
        if isinstance(c, Poly):
            return self.convert(c)
        if isinstance(c, str):
            return self.parse(c)
        return self.from_dict({self.zero_exp: c})

    def from_dict(self, d: dict) -> "Poly":
        norm = self.domain.norm
        out = {}
        for e, c in d.items():
            c = norm(c)
            if c:
                out[tuple(e)] = c
        return Poly(self, out)

    def _make(self, d: dict) -> "Poly":
        return Poly(self, d)

    def gen(self, i: int) -> "Poly":
        e = [0] * self.nvars
        e[i] = 1
        return Poly(self, {tuple(e): 1})

    @property
    def gens(self) -> list["Poly"]:
        return [self.gen(i) for i in range(self.nvars)]

    def monomial(self, e, c=1) -> "Poly":
        return self.from_dict({tuple(e): c})

    def convert(self, f: "Poly") -> "Poly":
        """Move ``f`` into this ring, mapping variables by position."""
        if f.ring == self:
            return f
        if f.ring.nvars != self.nvars:
            raise ValueError("variable count mismatch")
        return self.from_dict(f.terms)

    def with_domain(self, domain) -> "PolyRing":
        return PolyRing(self.names, self.order.spec, domain)

    def with_order(self, order) -> "PolyRing":
        return PolyRing(self.names, order, self.domain)

    # parsing
    def parse(self, text: str) -> "Poly":
        """Parse integer-coefficient polynomial syntax such as ``2*y1^2 - y1 + 3``.

        Whitespace is ignored; ``+ - * ^`` and parentheses are supported and
        ``**`` is accepted as a synonym for ``^``.
        """
        return _Parser(self, text).parse()

    def format(self, f: "Poly") -> str:
        return str(f)


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\*\*|[-+*^()]))")


class _Parser:
    def __init__(self, ring: PolyRing, text: str):
        self.ring = ring
        self.text = text
        self.toks = []
        pos = 0
        index = {n: i for i, n in enumerate(ring.names)}
        while True:
            while pos < len(text) and text[pos].isspace():
                pos += 1
            if pos >= len(text):
                break
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                raise PolySyntaxError(f"unexpected character {text[pos]!r}", pos + 1)
            col = m.start(m.lastindex) + 1
            if m.group(1):
                self.toks.append(("int", int(m.group(1)), col))
            elif m.group(2):
                name = m.group(2)
                if name not in index:
                    raise PolySyntaxError(f"unknown variable {name!r}", col)
                self.toks.append(("var", index[name], col))
            else:
                op = m.group(3)
                self.toks.append(("op", "^" if op == "**" else op, col))
            pos = m.end()
        self.toks.append(("end", None, len(text) + 1))
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def parse(self):
        if self.peek()[0] == "end":
            raise PolySyntaxError("empty polynomial", 1)
        f = self.expr()
        t = self.peek()
        if t[0] != "end":
            raise PolySyntaxError(f"unexpected {t[1]!r}", t[2])
        return f

    def expr(self):
        sign = 1
        t = self.peek()
        if t[0] == "op" and t[1] in "+-":
            self.take()
            sign = -1 if t[1] == "-" else 1
        f = self.term()
        if sign < 0:
            f = -f
        while True:
            t = self.peek()
            if t[0] == "op" and t[1] in "+-":
                self.take()
                g = self.term()
                f = f + g if t[1] == "+" else f - g
            else:
                return f

    def term(self):
        f = self.power()
        while True:
            t = self.peek()
            if t[0] == "op" and t[1] == "*":
                self.take()
                f = f * self.power()
            elif t[0] in ("int", "var") or (t[0] == "op" and t[1] == "("):
                f = f * self.power()  # implicit multiplication, e.g. 2x1
            else:
                return f

    def power(self):
        f = self.atom()
        t = self.peek()
        if t[0] == "op" and t[1] == "^":
            self.take()
            e = self.take()
            if e[0] != "int":
                raise PolySyntaxError("exponent must be a non-negative integer", e[2])
            f = f ** e[1]
        return f

    def atom(self):
        t = self.take()
        if t[0] == "int":
            return self.ring(t[1])
        if t[0] == "var":
            return self.ring.gen(t[1])
        if t[0] == "op" and t[1] == "(":
            f = self.expr()
            c = self.take()
            if not (c[0] == "op" and c[1] == ")"):
                raise PolySyntaxError("expected ')'", c[2])
            return f
        if t[0] == "op" and t[1] == "-":
            return -self.atom()
        if t[0] == "end":
            raise PolySyntaxError("unexpected end of input", t[2])
        raise PolySyntaxError(f"unexpected {t[1]!r}", t[2])


def _add_exp(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _divides(a, b):
    """Whether the term with exponents ``a`` divides the one with ``b``."""
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _sub_exp(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _lcm_exp(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


class Poly:
    """Sparse polynomial; treat as immutable."""

    __slots__ = ("ring", "terms", "_lt")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms
        self._lt = None

    # leading data
    def LT(self):
        """Leading exponent tuple (``None`` for zero)."""
        if self._lt is None and self.terms:
            key = self.ring.key
            self._lt = max(self.terms, key=key)
        return self._lt

    def LC(self):
        return self.terms[self.LT()] if self.terms else 0

    def LM(self):
        return (self.LC(), self.LT())

    def sorted_terms(self):
        key = self.ring.key
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self):
        return all(not any(e) for e in self.terms)

    def constant_value(self):
        return self.terms.get(self.ring.zero_exp, 0)

    def degree(self):
        return max((sum(e) for e in self.terms), default=-1)

    # arithmetic
    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.ring != self.ring:
                raise ValueError("polynomials from different rings")
            return other
        return self.ring(other)

    def __add__(self, other):
        other = self._coerce(other)
        norm = self.ring.domain.norm
        d = dict(self.terms)
        for e, c in other.terms.items():
            v = norm(d.get(e, 0) + c)
            if v:
                d[e] = v
            else:
                d.pop(e, None)
        return Poly(self.ring, d)

    __radd__ = __add__

    def __neg__(self):
        norm = self.ring.domain.norm
        return Poly(self.ring, {e: norm(-c) for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return self.scale(other)
        other = self._coerce(other)
        norm = self.ring.domain.norm
        d: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = _add_exp(e1, e2)
                d[e] = d.get(e, 0) + c1 * c2
        return Poly(self.ring, {e: v for e, v in ((e, norm(c)) for e, c in d.items()) if v})

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c):
        norm = self.ring.domain.norm
        c = norm(c)
        if not c:
            return Poly(self.ring, {})
        return Poly(self.ring, {e: v for e, v in ((e, norm(a * c)) for e, a in self.terms.items()) if v})

    def mul_term(self, e, c=1):
        norm = self.ring.domain.norm
        return Poly(self.ring, {_add_exp(x, e): v for x, v in ((x, norm(a * c)) for x, a in self.terms.items()) if v})

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative exponent")
        out = self.ring(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.ring == other.ring and self.terms == other.terms
        try:
            return self.terms == self.ring(other).terms
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def substitute(self, values):
        """Evaluate with ``values[i]`` for variable ``i`` (any ring-like objects)."""
        total = None
        for e, c in self.sorted_terms():
            t = c
            for v, k in zip(values, e):
                if k:
                    t = t * v ** k
            total = t if total is None else total + t
        return 0 if total is None else total

    def __str__(self):
        if not self.terms:
            return "0"
        names = self.ring.names
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k)
            if isinstance(c, Fraction) and c.denominator != 1:
                cs = f"{abs(c.numerator)}/{c.denominator}"
                neg = c < 0
            else:
                neg = c < 0
                cs = str(abs(int(c)))
            if mono:
                body = mono if cs == "1" else f"{cs}*{mono}"
            else:
                body = cs
            if not parts:
                parts.append(f"-{body}" if neg else body)
            else:
                parts.append(f"- {body}" if neg else f"+ {body}")
        return " ".join(parts)

    def __repr__(self):
        return f"Poly({self})"

    def sort_key(self):
        """Deterministic key for sorting polynomials (by terms, then coefficients)."""
        key = self.ring.key
        return tuple((key(e), c) for e, c in self.sorted_terms())


# ---------------------------------------------------------------------------
# Buchberger core
#
# Internally a polynomial is a dict plus its cached leading exponent.  Over Z
# reduction is "strong": a term c*t is reduced by g when LT(g) | t and the
# remainder of c modulo LC(g) is smaller than c.


class _Entry:
    __slots__ = ("p", "lt", "lc", "track")

    def __init__(self, p: Poly, track=None):
        self.p = p
        self.lt = p.LT()
        self.lc = p.LC()
        self.track = track


def _sub_mul(ring, f: dict, g: dict, e, c):
    """``f - c * x^e * g`` in place on ``f``."""
    norm = ring.domain.norm
    for x, a in g.items():
        y = _add_exp(x, e) if e is not None else x
        v = norm(f.get(y, 0) - c * a)
        if v:
            f[y] = v
        else:
            f.pop(y, None)


def _reduce(ring: PolyRing, f: Poly, basis: Sequence[_Entry], full=True, track=None,
            canonical=False):
    """Reduce ``f`` by ``basis``.

    With ``full=False`` only the leading term is reduced.  Over Z the leading
    coefficient of a term is replaced by its remainder modulo a suitable basis
    leading coefficient whenever no exact division is possible; with
    ``canonical=True`` remainders are taken in ``[0, d)`` where ``d`` is the
    smallest applicable leading coefficient, which yields a canonical normal
    form for a minimal strong basis.

    Returns the reduced polynomial and (if ``track`` is given) the updated
    tracked companion.
    """
    field = ring.domain.field
    key = ring.key
    h = dict(f.terms)
    tr = dict(track.terms) if track is not None else None
    heap = [tuple(-k for k in key(e)) + (e,) for e in h]
    heapq.heapify(heap)
    kept = set()
    norm = ring.domain.norm
    inv = ring.domain.inv if field else None
    while heap:
        e = heapq.heappop(heap)[-1]
        if e in kept:
            continue
        c = h.get(e)
        if not c:
            continue
        best = None
        for g in basis:
            if _divides(g.lt, e):
                if field or c % g.lc == 0:
                    best = g
                    break
                if best is None or abs(g.lc) < abs(best.lc):
                    best = g
        q = 0
        if best is not None:
            if field:
                q = norm(c * inv(best.lc))
            elif c % best.lc == 0:
                q = c // best.lc
            elif canonical:
                q = c // best.lc if best.lc > 0 else -(c // -best.lc)
            else:
                q = _round_quot(c, best.lc)
        if q:
            shift = _sub_exp(e, best.lt)
            for x, a in best.p.terms.items():
                y = _add_exp(x, shift)
                old = h.get(y)
                v = norm((old or 0) - q * a)
                if v:
                    h[y] = v
                    if old is None:
                        heapq.heappush(heap, tuple(-k for k in key(y)) + (y,))
                elif old is not None:
                    del h[y]
            if tr is not None:
                _sub_mul(ring, tr, best.track.terms, shift, q)
        if e in h:
            kept.add(e)
            if not full:
                break
    out = Poly(ring, h)
    if tr is not None:
        return out, Poly(ring, tr)
    return out


def _round_quot(c, d):
    """Quotient for a remainder of least absolute value (Z only)."""
    q, r = divmod(c, d)
    if 2 * abs(r) > abs(d):
        q += 1 if (r > 0) == (d > 0) else -1
    return q


def _spoly(ring, f: _Entry, g: _Entry):
    T = _lcm_exp(f.lt, g.lt)
    if ring.domain.field:
        inv = ring.domain.inv
        a = ring.domain.norm(inv(f.lc))
        b = ring.domain.norm(inv(g.lc))
    else:
        m = abs(f.lc * g.lc) // math.gcd(f.lc, g.lc)
        a = m // f.lc
        b = m // g.lc
    p = f.p.mul_term(_sub_exp(T, f.lt), a) - g.p.mul_term(_sub_exp(T, g.lt), b)
    tr = None
    if f.track is not None:
        tr = f.track.mul_term(_sub_exp(T, f.lt), a) - g.track.mul_term(_sub_exp(T, g.lt), b)
    return p, tr


def _gpoly(ring, f: _Entry, g: _Entry):
    T = _lcm_exp(f.lt, g.lt)
    _, u, v = _xgcd(f.lc, g.lc)
    p = f.p.mul_term(_sub_exp(T, f.lt), u) + g.p.mul_term(_sub_exp(T, g.lt), v)
    tr = None
    if f.track is not None:
        tr = f.track.mul_term(_sub_exp(T, f.lt), u) + g.track.mul_term(_sub_exp(T, g.lt), v)
    return p, tr


def _xgcd(a, b):
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        return -a, -s0, -t0
    return a, s0, t0


def _coprime_terms(a, b):
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def _buchberger(ring: PolyRing, polys: Sequence[Poly], tracks=None, stop_at_unit=False):
    """Core loop; returns a list of :class:`_Entry` (not yet minimalized)."""
    field = ring.domain.field
    G: list[_Entry] = []
    pairs: list = []
    counter = [0]

    def pair_key(i, j):
        T = _lcm_exp(G[i].lt, G[j].lt)
        return (sum(T), ring.key(T), i, j)

    def add(p: Poly, tr):
        if field and p.LC() != 1:
            inv = ring.domain.norm(ring.domain.inv(p.LC()))
            p = p.scale(inv)
            if tr is not None:
                tr = tr.scale(inv)
        elif not field and p.LC() < 0:
            p = -p
            if tr is not None:
                tr = -tr
        ent = _Entry(p, tr)
        G.append(ent)
        k = len(G) - 1
        for i in range(k):
            if G[i] is None:
                continue
            heapq.heappush(pairs, pair_key(i, k))
        counter[0] += 1
        return ent

    order = sorted(range(len(polys)), key=lambda i: (ring.key(polys[i].LT()) if polys[i] else (), i))
    for i in order:
        p = polys[i]
        if not p:
            continue
        tr = tracks[i] if tracks is not None else None
        live = [g for g in G if g is not None]
        if tracks is not None:
            r, tr = _reduce(ring, p, live, full=False, track=tr)
        else:
            r = _reduce(ring, p, live, full=False)
        if r:
            add(r, tr)
            if stop_at_unit and r.is_constant() and abs(r.LC()) == 1:
                return G
    while pairs:
        _, _, i, j = heapq.heappop(pairs)
        f, g = G[i], G[j]
        if f is None or g is None:
            continue
        cands = []
        if field:
            if not _coprime_terms(f.lt, g.lt):
                cands.append(_spoly(ring, f, g))
        else:
            a, b = f.lc, g.lc
            if not (_coprime_terms(f.lt, g.lt) and math.gcd(a, b) == 1):
                cands.append(_spoly(ring, f, g))
            if a % b and b % a:
                cands.append(_gpoly(ring, f, g))
        for p, tr in cands:
            if not p:
                continue
            live = [e for e in G if e is not None]
            if tr is not None:
                r, tr = _reduce(ring, p, live, full=False, track=tr)
            else:
                r = _reduce(ring, p, live, full=False)
            if r:
                add(r, tr)
                if stop_at_unit and r.is_constant() and abs(r.LC()) == 1:
                    return G
    return G


def _lm_divides(g: _Entry, f: _Entry, field: bool) -> bool:
    if not _divides(g.lt, f.lt):
        return False
    return field or f.lc % g.lc == 0


def _minimalize(ring: PolyRing, G: list[_Entry]) -> list[_Entry]:
    field = ring.domain.field
    G = [g for g in G if g is not None]
    # sort so that for equal LM the earliest survives deterministically
    G.sort(key=lambda g: (ring.key(g.lt), abs(g.lc) if not field else 0))
    out: list[_Entry] = []
    for idx, g in enumerate(G):
        redundant = False
        for jdx, h in enumerate(G):
            if jdx == idx:
                continue
            if _lm_divides(h, g, field):
                # equal leading monomials: keep the first one only
                if _lm_divides(g, h, field) and jdx > idx:
                    continue
                redundant = True
                break
        if not redundant:
            out.append(g)
    return out


def _interreduce(ring: PolyRing, G: list[_Entry]) -> list[Poly]:
    out = []
    for idx, g in enumerate(G):
        others = [h for j, h in enumerate(G) if j != idx]
        lead = Poly(ring, {g.lt: g.lc})
        tail = Poly(ring, {e: c for e, c in g.p.terms.items() if e != g.lt})
        red = _reduce(ring, tail, others, full=True, canonical=True)
        out.append(lead + red)
    out.sort(key=lambda p: ring.key(p.LT()))
    return out


def groebner(polys: Iterable[Poly], ring: Optional[PolyRing] = None) -> list[Poly]:
    """Minimal, tail-reduced Groebner basis (strong over Z, reduced over fields).

    Leading coefficients are positive over Z and one over fields; elements are
    sorted by increasing leading term.
    """
    polys = [p for p in polys]
    if ring is None:
        if not polys:
            raise ValueError("need a ring for an empty generator list")
        ring = polys[0].ring
    polys = [ring.convert(p) for p in polys if p]
    if not polys:
        return []
    G = _buchberger(ring, polys)
    G = _minimalize(ring, G)
    if any(g.lt == ring.zero_exp and (ring.domain.field or abs(g.lc) == 1) for g in G):
        return [ring(1)]
    return _interreduce(ring, G)


def normal_form(f: Poly, G: Sequence[Poly]) -> Poly:
    """Canonical remainder of ``f`` modulo a (strong) Groebner basis ``G``.

    Over Z each coefficient is reduced into ``[0, d)`` where ``d`` is the
    smallest leading coefficient among basis elements whose leading term
    divides the current term; for a minimal strong basis this makes the result
    depend on the ideal only.
    """
    if not G:
        return f
    ring = f.ring
    entries = [_Entry(ring.convert(g)) for g in G if g]
    if not ring.domain.field:
        entries.sort(key=lambda g: abs(g.lc))
    return _reduce(ring, f, entries, full=True, canonical=True)


def is_strong_groebner(G: Sequence[Poly]) -> bool:
    """Check that every S-polynomial and GCD-polynomial of ``G`` reduces to zero."""
    G = [g for g in G if g]
    if not G:
        return True
    ring = G[0].ring
    entries = [_Entry(g) for g in G]
    field = ring.domain.field
    red_basis = sorted(entries, key=lambda g: abs(g.lc)) if not field else entries
    for i in range(len(entries)):
        for j in range(i + 1, len(entries)):
            f, g = entries[i], entries[j]
            cands = [_spoly(ring, f, g)[0]]
            if not field and f.lc % g.lc and g.lc % f.lc:
                cands.append(_gpoly(ring, f, g)[0])
            for p in cands:
                if _strong_reduce_full(ring, p, red_basis):
                    return False
    return True


def _strong_reduce_full(ring, f: Poly, basis):
    """Reduce using only exact leading-monomial divisions (no remainders)."""
    field = ring.domain.field
    h = dict(f.terms)
    key = ring.key
    while h:
        e = max(h, key=key)
        c = h[e]
        for g in basis:
            if _divides(g.lt, e) and (field or c % g.lc == 0):
                q = ring.domain.norm(c * ring.domain.inv(g.lc)) if field else c // g.lc
                _sub_mul(ring, h, g.p.terms, _sub_exp(e, g.lt), q)
                break
        else:
            return Poly(ring, h)
    return Poly(ring, h)


def strong_groebner(I: "Ideal") -> list[Poly]:
    if I.ring.domain.field:
        raise ValueError("strong_groebner expects an ideal over ZZ")
    return I.gb()


def field_groebner(I: "Ideal") -> list[Poly]:
    if not I.ring.domain.field:
        raise ValueError("field_groebner expects an ideal over QQ or GF(p)")
    return I.gb()


# ---------------------------------------------------------------------------
# ideals


class Ideal:
    """An ideal given by generators; the Groebner basis is computed lazily and cached."""

    def __init__(self, ring: PolyRing, gens: Iterable = ()):
        self.ring = ring
        gs = []
        for g in gens:
            if isinstance(g, str):
                g = ring.parse(g)
            elif not isinstance(g, Poly):
                g = ring(g)
            else:
                g = ring.convert(g)
            if g:
                gs.append(g)
        self.gens = tuple(gs)
        self._gb: Optional[list[Poly]] = None

    @classmethod
    def from_basis(cls, ring, basis):
        I = cls(ring, basis)
        I._gb = list(I.gens)
        return I

    def gb(self) -> list[Poly]:
        if self._gb is None:
            self._gb = groebner(self.gens, self.ring)
        return self._gb

    def normal_form(self, f) -> Poly:
        if isinstance(f, str):
            f = self.ring.parse(f)
        elif not isinstance(f, Poly):
            f = self.ring(f)
        return normal_form(f, self.gb())

    def contains(self, f) -> bool:
        return not self.normal_form(f)

    __contains__ = contains

    def issubset(self, other: "Ideal") -> bool:
        return all(other.contains(g) for g in self.gens)

    def __le__(self, other):
        return self.issubset(other)

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.ring == other.ring and self.issubset(other) and other.issubset(self)

    def __hash__(self):
        return hash(tuple(self.gb()))

    def is_one(self) -> bool:
        gb = self.gb()
        return len(gb) == 1 and gb[0].is_constant() and (self.ring.domain.field or gb[0].LC() == 1)

    def is_zero(self) -> bool:
        return not self.gens

    def __add__(self, other) -> "Ideal":
        if isinstance(other, Ideal):
            return Ideal(self.ring, self.gens + other.gens)
        return Ideal(self.ring, self.gens + tuple(other))

    def __mul__(self, other: "Ideal") -> "Ideal":
        return Ideal(self.ring, [f * g for f in self.gens for g in other.gens])

    def power(self, k: int) -> "Ideal":
        out = Ideal(self.ring, [1])
        for _ in range(k):
            out = out * self
            out = Ideal(self.ring, out.gb())
        return out

    def intersect(self, other: "Ideal") -> "Ideal":
        return ideal_intersect(self, other)

    def quotient(self, other: "Ideal") -> "Ideal":
        return ideal_quotient(self, other)

    def saturate(self, other: "Ideal") -> "Ideal":
        return saturate(self, other)

    def elim_constant(self) -> int:
        return elim_constant(self)

    def canonical(self) -> tuple:
        """Hashable canonical form (the sorted reduced basis)."""
        return tuple(sorted(g.sort_key() for g in self.gb()))

    def __repr__(self):
        return f"Ideal<{', '.join(str(g) for g in self.gens)}>"

    def __str__(self):
        return "<" + ", ".join(str(g) for g in self.gens) + ">"


def _eliminate(ring: PolyRing, polys: Sequence[Poly], k: int) -> list[Poly]:
    """Groebner basis of ``<polys> cap D[x_{k+1}, ...]`` (first ``k`` variables removed)."""
    ering = PolyRing(ring.names, ("elim", k), ring.domain)
    G = groebner([ering.from_dict(p.terms) for p in polys], ering)
    return [g for g in G if all(not any(e[:k]) for e in g.terms)]


def ideal_intersect(I: Ideal, J: Ideal) -> Ideal:
    """``I cap J`` via the auxiliary-variable construction ``t*I + (1-t)*J``."""
    ring = I.ring
    if J.ring != ring:
        raise ValueError("ideals live in different rings")
    if I.is_zero() or J.is_zero():
        return Ideal(ring, [])
    if I.is_one():
        return J
    if J.is_one():
        return I
    # constant-only shortcut: <a> cap <b> for integers
    bring = PolyRing(("_t",) + ring.names, "degrevlex", ring.domain)
    t = bring.gen(0)

    def lift(p):
        return bring.from_dict({(0,) + e: c for e, c in p.terms.items()})

    gens = [t * lift(f) for f in I.gb()] + [(1 - t) * lift(g) for g in J.gb()]
    elim = _eliminate(bring, gens, 1)
    res = [ring.from_dict({e[1:]: c for e, c in g.terms.items()}) for g in elim]
    out = Ideal(ring, res)
    out._gb = groebner(res, ring) if res else []
    return out


def _exact_divide(f: Poly, g: Poly) -> Poly:
    """``f / g`` when the division is exact; raises otherwise."""
    ring = f.ring
    field = ring.domain.field
    q: dict = {}
    r = dict(f.terms)
    glt, glc = g.LT(), g.LC()
    key = ring.key
    while r:
        e = max(r, key=key)
        c = r[e]
        if not _divides(glt, e):
            raise ArithmeticError("inexact polynomial division")
        if field:
            a = ring.domain.norm(c * ring.domain.inv(glc))
        else:
            if c % glc:
                raise ArithmeticError("inexact polynomial division")
            a = c // glc
        s = _sub_exp(e, glt)
        q[s] = a
        _sub_mul(ring, r, g.terms, s, a)
    return Poly(ring, q)


def ideal_quotient(I: Ideal, J: Ideal) -> Ideal:
    """``I : J``, computed generator by generator as ``(I cap <g>) / g``."""
    ring = I.ring
    if J.is_zero():
        return Ideal(ring, [1])
    result = None
    for g in J.gens:
        inter = ideal_intersect(I, Ideal(ring, [g]))
        part = Ideal(ring, [_exact_divide(h, g) for h in inter.gb()])
        result = part if result is None else ideal_intersect(result, part)
    result = Ideal(ring, result.gb())
    return result


def saturate(I: Ideal, J: Ideal) -> Ideal:
    """``I : J^infinity`` by iterating the colon until it stabilises."""
    cur = Ideal(I.ring, I.gb())
    while True:
        nxt = ideal_quotient(cur, J)
        if nxt.issubset(cur):
            return cur
        cur = nxt


def one_representation(I: Ideal, J: Ideal) -> tuple[Poly, Poly]:
    """Return ``(p, q)`` with ``p in I``, ``q in J`` and ``p + q = 1``.

    Runs the Buchberger loop on the joint generators while tracking, for every
    intermediate polynomial, its component coming from ``I``.
    """
    ring = I.ring
    if I.is_one():
        return ring(1), ring(0)
    if J.is_one():
        return ring(0), ring(1)
    gens = list(I.gb()) + list(J.gb())
    tracks = list(I.gb()) + [ring(0)] * len(J.gb())
    G = _buchberger(ring, gens, tracks=tracks, stop_at_unit=True)
    for g in G:
        if g is not None and g.p.is_constant():
            c = g.p.LC()
            if ring.domain.field or abs(c) == 1:
                inv = ring.domain.norm(ring.domain.inv(c)) if ring.domain.field else c
                p = g.track.scale(inv)
                q = ring(1) - p
                return p, q
    raise ValueError("ideals are not comaximal")


def coefficient_map(I: Ideal, target) -> Ideal:
    """Image of an integer ideal under ``Z -> Q`` or ``Z -> F_p``."""
    if isinstance(target, int):
        target = GF(target)
    ring2 = I.ring.with_domain(target)
    return Ideal(ring2, [ring2.from_dict(g.terms) for g in I.gens])


def contract_to_Z(I: Ideal) -> Ideal:
    """``I cap Z[x]`` for an ideal ``I`` of ``Q[x]``."""
    zring = I.ring.with_domain(ZZ)
    gb = I.gb()
    gens = []
    lcs = []
    for g in gb:
        den = 1
        for c in g.terms.values():
            den = den * c.denominator // math.gcd(den, c.denominator)
        h = zring.from_dict({e: int(c * den) for e, c in g.terms.items()})
        cont = 0
        for c in h.terms.values():
            cont = math.gcd(cont, c)
        if cont > 1:
            h = zring.from_dict({e: c // cont for e, c in h.terms.items()})
        gens.append(h)
        lcs.append(abs(h.LC()))
    J = Ideal(zring, gens)
    N = 1
    for c in lcs:
        N = N * c // math.gcd(N, c)
    if N == 1:
        return Ideal(zring, J.gb())
    return saturate(J, Ideal(zring, [N]))


def lift_from_Fp(I: Ideal, p: Optional[int] = None) -> Ideal:
    """Preimage in ``Z[x]`` of an ideal of ``F_p[x]``: canonical lifts plus ``p``."""
    dom = I.ring.domain
    if p is None:
        p = dom.p
    zring = I.ring.with_domain(ZZ)
    gens = [zring(p)] + [zring.from_dict({e: int(c) % p for e, c in g.terms.items()}) for g in I.gens]
    return Ideal(zring, gens)


def elim_constant(I: Ideal) -> int:
    """The non-negative generator of ``I cap Z``."""
    for g in I.gb():
        if g.is_constant():
            return abs(int(g.LC()))
    return 0
