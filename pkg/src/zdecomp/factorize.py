"""Integer factorization and univariate factorization over F_p and Q.

Univariate polynomials are handled as dense coefficient lists in increasing
degree, ``[c0, c1, ..., cd]`` with ``cd != 0``.  The public functions also
accept univariate :class:`~zdecomp.polyring.Poly` objects and then return
factors of the same kind.

Randomized steps (Pollard rho, equal-degree splitting) draw from a
``random.Random(seed)`` instance, so equal seeds give equal outputs.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction
from itertools import combinations
from typing import Optional

__all__ = [
    "is_prime",
    "factor_integer",
    "factor_mod_p",
    "factor_over_Q",
    "roots_mod_p",
]

_SMALL_PRIMES = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41]


def is_prime(n: int) -> bool:
    """Miller-Rabin with the first 13 primes as witnesses.

    Deterministic for ``n < 3.3 * 10**24``; a strong probable-prime test above.
    """
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _SMALL_PRIMES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_brent(n: int, rng: random.Random) -> int:
    """A nontrivial factor of the composite ``n``."""
    if n % 2 == 0:
        return 2
    while True:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def factor_integer(q: int, seed: int = 0) -> list[tuple[int, int]]:
    """Prime factorization of ``q >= 1`` as sorted ``(prime, exponent)`` pairs.

    Trial division by primes below ``10**4`` followed by Pollard's rho with
    Brent's cycle detection.
    """
    if q < 1:
        raise ValueError("factor_integer expects a positive integer")
    out: dict[int, int] = {}
    n = q
    d = 2
    while d * d <= n and d < 10_000:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    rng = random.Random(seed)
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        r = math.isqrt(m)
        if r * r == m:
            stack += [r, r]
            continue
        f = _pollard_brent(m, rng)
        stack += [f, m // f]
    return sorted(out.items())


# ---------------------------------------------------------------------------
# dense polynomial arithmetic modulo p


def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _padd(a, b, p):
    n = max(len(a), len(b))
    return _trim([((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % p for i in range(n)])


def _psub(a, b, p):
    n = max(len(a), len(b))
    return _trim([((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)])


def _pmul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim([c % p for c in out])


def _pdivmod(a, b, p):
    if not b:
        raise ZeroDivisionError
    a = list(a)
    inv = pow(b[-1], -1, p)
    q = [0] * max(len(a) - len(b) + 1, 0)
    db = len(b) - 1
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] * inv % p
        if c:
            q[i - db] = c
            for j in range(len(b)):
                a[i - db + j] = (a[i - db + j] - c * b[j]) % p
    return _trim(q), _trim(a[:db])


def _pmod(a, b, p):
    return _pdivmod(a, b, p)[1]


def _pmonic(a, p):
    if not a:
        return a
    inv = pow(a[-1], -1, p)
    return [c * inv % p for c in a]


def _pgcd(a, b, p):
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _pmod(a, b, p)
    return _pmonic(a, p)


def _pderiv(a, p):
    return _trim([i * a[i] % p for i in range(1, len(a))])


def _ppowmod(a, e, m, p):
    out = [1]
    base = _pmod(a, m, p)
    while e:
        if e & 1:
            out = _pmod(_pmul(out, base, p), m, p)
        e >>= 1
        if e:
            base = _pmod(_pmul(base, base, p), m, p)
    return out


def _squarefree_mod_p(f, p):
    """Squarefree decomposition of monic ``f``: list of (g, multiplicity)."""
    out = []

    def rec(f, mult):
        if len(f) <= 1:
            return
        fp = _pderiv(f, p)
        if not fp:
            # f is a p-th power: take the p-th root coefficientwise
            root = [f[i] for i in range(0, len(f), p)]
            rec(root, mult * p)
            return
        c = _pgcd(f, fp, p)
        w = _pdivmod(f, c, p)[0]
        i = 1
        while len(w) > 1:
            y = _pgcd(w, c, p)
            z = _pdivmod(w, y, p)[0]
            if len(z) > 1:
                out.append((z, i * mult))
            i += 1
            w = y
            c = _pdivmod(c, y, p)[0]
        if len(c) > 1:
            root = [c[i] for i in range(0, len(c), p)]
            rec(root, mult * p)

    rec(f, 1)
    return out


def _distinct_degree(f, p):
    out = []
    h = [0, 1]
    d = 0
    g = list(f)
    while len(g) - 1 >= 2 * (d + 1):
        d += 1
        h = _ppowmod(h, p, g, p)
        r = _pgcd(g, _psub(h, [0, 1], p), p)
        if len(r) > 1:
            out.append((r, d))
            g = _pdivmod(g, r, p)[0]
            h = _pmod(h, g, p)
    if len(g) > 1:
        out.append((g, len(g) - 1))
    return out


def _equal_degree(f, d, p, rng):
    n = len(f) - 1
    if n == d:
        return [f]
    while True:
        a = _trim([rng.randrange(p) for _ in range(n)])
        if len(a) <= 1:
            continue
        if p == 2:
            t = list(a)
            s = list(a)
            for _ in range(d - 1):
                s = _pmod(_pmul(s, s, p), f, p)
                t = _padd(t, s, p)
            # trace map over F_{2^d}
            g = _pgcd(f, t, p)
        else:
            e = (p ** d - 1) // 2
            b = _psub(_ppowmod(a, e, f, p), [1], p)
            g = _pgcd(f, b, p)
        if 1 < len(g) < len(f):
            return (_equal_degree(g, d, p, rng)
                    + _equal_degree(_pdivmod(f, g, p)[0], d, p, rng))


def _factor_dense_mod_p(f, p, seed=0):
    f = _trim([c % p for c in f])
    if not f:
        raise ValueError("cannot factor the zero polynomial")
    unit = f[-1]
    f = _pmonic(f, p)
    rng = random.Random(seed)
    result = []
    for g, m in _squarefree_mod_p(f, p):
        for h, d in _distinct_degree(g, p):
            for k in _equal_degree(h, d, p, rng):
                result.append((k, m))
    result.sort(key=lambda t: (len(t[0]), t[0][::-1], t[1]))
    return unit, result


def roots_mod_p(f, p):
    """Roots in ``F_p`` of a dense polynomial, by enumeration (small ``p`` only)."""
    f = [c % p for c in f]
    return [x for x in range(p) if sum(c * pow(x, i, p) for i, c in enumerate(f)) % p == 0]


# ---------------------------------------------------------------------------
# factorization over Q


def _zmul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _zdivexact(a, b):
    """Exact quotient over Z, or ``None``."""
    a = list(a)
    q = [0] * max(len(a) - len(b) + 1, 0)
    db = len(b) - 1
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c:
            if c % b[-1]:
                return None
            c //= b[-1]
            q[i - db] = c
            for j in range(len(b)):
                a[i - db + j] -= c * b[j]
    if any(a[:db]):
        return None
    return _trim(q)


def _content(a):
    g = 0
    for c in a:
        g = math.gcd(g, c)
    return g


def _primitive(a):
    g = _content(a)
    a = [c // g for c in a]
    if a[-1] < 0:
        a = [-c for c in a]
    return a


def _qgcd(a, b):
    """Monic gcd over Q of integer polynomials, returned as primitive integer poly."""
    a = [Fraction(c) for c in a]
    b = [Fraction(c) for c in b]
    _trim(a)
    _trim(b)
    while b:
        # a mod b
        a = list(a)
        db = len(b) - 1
        for i in range(len(a) - 1, db - 1, -1):
            c = a[i] / b[-1]
            if c:
                for j in range(len(b)):
                    a[i - db + j] -= c * b[j]
        a = _trim(a[:db])
        a, b = b, a
    den = 1
    for c in a:
        den = den * c.denominator // math.gcd(den, c.denominator)
    return _primitive([int(c * den) for c in a])


def _squarefree_over_Z(f):
    """Yun's algorithm for a primitive integer polynomial."""
    out = []
    fp = _trim([i * f[i] for i in range(1, len(f))])
    c = _qgcd(f, fp)
    w = _zdivexact(f, c)
    i = 1
    while len(w) > 1:
        y = _qgcd(w, c)
        z = _zdivexact(w, y)
        if len(z) > 1:
            out.append((_primitive(z), i))
        i += 1
        w = y
        c = _zdivexact(c, y)
    return out


def _hensel_step(f, g, h, p, k):
    """Lift ``f = g h mod p`` (``g`` monic, ``g, h`` coprime mod p) to modulus ``p**k``.

    Linear lifting: one power of ``p`` per round with fixed Bezout
    coefficients modulo ``p``.
    """
    s, t = _pxgcd(g, h, p)
    g, h = list(g), list(h)
    m = p
    for _ in range(k - 1):
        e = _zsub(f, _zmul(g, h))
        e = _trim([(c // m) % p for c in e])  # exact: f = g h mod m
        q, r = _pdivmod(_pmul(t, e, p), g, p)
        dh = _padd(_pmul(s, e, p), _pmul(q, h, p), p)
        g = _trim([c % (m * p) for c in _zadd(g, [m * c for c in r])])
        h = _trim([c % (m * p) for c in _zadd(h, [m * c for c in dh])])
        m *= p
    return g, h


def _zadd(a, b):
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def _zsub(a, b):
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)])


def _zdivmod_monic(a, b, m):
    """Division by ``b`` whose leading coefficient is a unit mod ``m``."""
    a = [c % m for c in a]
    inv = pow(b[-1], -1, m)
    db = len(b) - 1
    q = [0] * max(len(a) - db, 0)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] * inv % m
        if c:
            q[i - db] = c
            for j in range(len(b)):
                a[i - db + j] = (a[i - db + j] - c * b[j]) % m
    return _trim(q), _trim(a[:db])


def _pxgcd(a, b, p):
    """``(s, t)`` with ``s a + t b = 1 mod p`` for coprime ``a, b``."""
    r0, r1 = _trim([c % p for c in a]), _trim([c % p for c in b])
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = _pdivmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _psub(s0, _pmul(q, s1, p), p)
        t0, t1 = t1, _psub(t0, _pmul(q, t1, p), p)
    inv = pow(r0[0], -1, p)
    return [c * inv % p for c in s0], [c * inv % p for c in t0]


def _factor_squarefree_Z(f, seed=0):
    """Irreducible factors over Z of a primitive squarefree polynomial with positive lc."""
    n = len(f) - 1
    if n <= 1:
        return [f]
    lc = f[-1]
    # choose a good prime: does not divide lc and keeps f squarefree
    p = 3
    while True:
        if lc % p and is_prime(p):
            fm = [c % p for c in f]
            if len(_pgcd(fm, _pderiv(fm, p), p)) == 1:
                break
        p += 2
    _, facs = _factor_dense_mod_p(f, p, seed)
    mods = [g for g, _ in facs]
    if len(mods) == 1:
        return [f]
    # coefficient bound (Mignotte) for factors of lc * f
    norm = math.isqrt(sum(c * c for c in f)) + 1
    bound = 2 * abs(lc) * (2 ** n) * norm
    k = 1
    while p ** k <= 2 * bound:
        k += 1
    M = p ** k
    # multifactor lift by peeling off one factor at a time
    lifted = []
    rest = [c * pow(lc, -1, M) % M for c in f]  # monic mod M
    rest_mod_p = _pmonic([c % p for c in f], p)
    for g in mods[:-1]:
        hp = _pdivmod(rest_mod_p, g, p)[0]
        G, H = _hensel_step(rest, g, hp, p, k)
        lifted.append(G)
        rest = H
        rest_mod_p = hp
    lifted.append(_trim([c % M for c in rest]))

    def sym(c):
        c %= M
        return c - M if c > M // 2 else c

    factors = []
    remaining = list(range(len(lifted)))
    target = list(f)
    s = 1
    while 2 * s <= len(remaining):
        found = False
        for sub in combinations(remaining, s):
            prod = [lc % M]
            for i in sub:
                prod = [c % M for c in _zmul(prod, lifted[i])]
            cand = _trim([sym(c) for c in prod])
            cand = _primitive(cand)
            q = _zdivexact(target, cand)
            if q is not None:
                factors.append(cand)
                target = q
                lc = target[-1]
                remaining = [i for i in remaining if i not in sub]
                found = True
                break
        if not found:
            s += 1
    factors.append(_primitive(target))
    return factors


# ---------------------------------------------------------------------------
# public wrappers


def _to_dense(f):
    """Dense coefficients of a univariate Poly (or pass a list through)."""
    if isinstance(f, (list, tuple)):
        return list(f), None
    ring = f.ring
    nz = {i for e in f.terms for i, a in enumerate(e) if a}
    if len(nz) > 1:
        raise ValueError("expected a univariate polynomial")
    var = nz.pop() if nz else 0
    deg = max((e[var] for e in f.terms), default=-1)
    out = [0] * (deg + 1)
    for e, c in f.terms.items():
        out[e[var]] = c
    return out, (ring, var)


def _from_dense(coeffs, ctx):
    if ctx is None:
        return coeffs
    ring, var = ctx
    d = {}
    for i, c in enumerate(coeffs):
        if c:
            e = [0] * ring.nvars
            e[var] = i
            d[tuple(e)] = c
    return ring.from_dict(d)


def factor_mod_p(f, p: Optional[int] = None, seed: int = 0):
    """Irreducible factorization over ``F_p``.

    Args:
        f: dense coefficient list (then ``p`` is required) or univariate Poly
            over ``GF(p)``.
        p: the prime.
        seed: seed for equal-degree splitting.

    Returns:
        ``(unit, [(monic_factor, multiplicity), ...])`` sorted by degree.
    """
    coeffs, ctx = _to_dense(f)
    if p is None:
        if ctx is None:
            raise ValueError("prime required for a coefficient list")
        p = ctx[0].domain.p
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    unit, facs = _factor_dense_mod_p(coeffs, p, seed)
    return unit, [(_from_dense(g, ctx), m) for g, m in facs]


def factor_over_Q(f, seed: int = 0):
    """Irreducible factorization over ``Q``.

    Args:
        f: dense coefficient list of ints/Fractions or a univariate Poly over
            ``QQ`` or ``ZZ``.

    Returns:
        ``(unit, [(factor, multiplicity), ...])`` where each factor is a
        primitive integer polynomial with positive leading coefficient and
        ``unit`` is a Fraction.
    """
    coeffs, ctx = _to_dense(f)
    coeffs = _trim([Fraction(c) for c in coeffs])
    if not coeffs:
        raise ValueError("cannot factor the zero polynomial")
    den = 1
    for c in coeffs:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in coeffs]
    prim = _primitive(ints)
    unit = Fraction(ints[-1], prim[-1]) / den
    out = []
    if len(prim) > 1:
        for g, m in _squarefree_over_Z(prim):
            for h in _factor_squarefree_Z(g, seed):
                out.append((h, m))
    out.sort(key=lambda t: (len(t[0]), t[0][::-1], t[1]))
    if ctx is not None:
        ring, var = ctx
        return unit, [(_from_dense(g, ctx), m) for g, m in out]
    return unit, out
