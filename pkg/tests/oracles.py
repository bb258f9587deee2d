"""Brute-force oracles used by the tests.

Nothing here calls into the Groebner or lattice code of the package; the
finite rings are modelled directly by coefficient arrays.
"""

from __future__ import annotations

import itertools
import math
import random
from fractions import Fraction


# -- integer linear algebra --------------------------------------------------


def matvec(A, x):
    return [sum(a * b for a, b in zip(row, x)) for row in A]


def rank_over_Q(A):
    rows = [[Fraction(a) for a in r] for r in A]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][c]:
                f = rows[i][c] / rows[rank][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def det(A):
    n = len(A)
    if n == 0:
        return 1
    M = [[Fraction(a) for a in r] for r in A]
    d = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if M[i][c]), None)
        if piv is None:
            return 0
        if piv != c:
            M[c], M[piv] = M[piv], M[c]
            d = -d
        d *= M[c][c]
        for i in range(c + 1, n):
            f = M[i][c] / M[c][c]
            M[i] = [a - f * b for a, b in zip(M[i], M[c])]
    return int(d)


def box(dim, bound):
    return itertools.product(range(-bound, bound + 1), repeat=dim)


def in_span_small(basis, x, bound=6):
    """Whether ``x`` is an integer combination of ``basis`` with small coefficients."""
    if not basis:
        return not any(x)
    for coeffs in box(len(basis), bound):
        if all(sum(c * b[i] for c, b in zip(coeffs, basis)) == x[i] for i in range(len(x))):
            return True
    return False


def trial_factor(q):
    out = []
    d = 2
    while d * d <= q:
        e = 0
        while q % d == 0:
            q //= d
            e += 1
        if e:
            out.append((d, e))
        d += 1
    if q > 1:
        out.append((q, 1))
    return out


# -- finite commutative rings Z/m[x_1..x_k]/(g_1(x_1), ..., g_k(x_k)) ------------


class TensorQuotient:
    """``Z/m[x_1..x_k] / (g_1(x_1), ..., g_k(x_k))`` with monic ``g_i``.

    Elements are dicts from exponent tuples (each ``e_i < deg g_i``) to
    residues mod ``m``; arithmetic is schoolbook multiplication followed by
    reduction with each monic univariate modulus.
    """

    def __init__(self, m, moduli):
        self.m = m
        self.moduli = [list(g) for g in moduli]  # dense, low degree first, monic
        self.degs = [len(g) - 1 for g in self.moduli]
        self.basis = list(itertools.product(*[range(d) for d in self.degs]))

    @property
    def size(self):
        return self.m ** len(self.basis)

    def _reduce_var(self, elem, i):
        g = self.moduli[i]
        d = self.degs[i]
        elem = dict(elem)
        while True:
            high = [e for e in elem if e[i] >= d and elem[e] % self.m]
            if not high:
                return {e: c % self.m for e, c in elem.items() if e[i] < d and c % self.m}
            e = max(high, key=lambda t: t[i])
            c = elem.pop(e)
            shift = e[i] - d
            for k in range(d):
                f = e[:i] + (shift + k,) + e[i + 1:]
                elem[f] = elem.get(f, 0) - c * g[k]

    def reduce(self, elem):
        for i in range(len(self.degs)):
            elem = self._reduce_var(elem, i)
        return {e: c for e, c in elem.items() if c}

    def mul(self, a, b):
        out = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return self.reduce(out)

    def add(self, a, b):
        out = dict(a)
        for e, c in b.items():
            out[e] = out.get(e, 0) + c
        return {e: c % self.m for e, c in out.items() if c % self.m}

    def key(self, a):
        return tuple(a.get(e, 0) for e in self.basis)

    def elements(self):
        for coeffs in itertools.product(range(self.m), repeat=len(self.basis)):
            yield {e: c for e, c in zip(self.basis, coeffs) if c}

    def from_terms(self, terms):
        """Image of a polynomial given as ``{exponent: integer}``."""
        return self.reduce({tuple(e): int(c) for e, c in terms.items()})

    def idempotents(self):
        return [a for a in self.elements() if self.key(self.mul(a, a)) == self.key(a)]

    def primitive_idempotents(self):
        idem = [a for a in self.idempotents() if a]
        keys = [self.key(a) for a in idem]
        out = []
        for a, ka in zip(idem, keys):
            smaller = False
            for b, kb in zip(idem, keys):
                if kb != ka and self.key(self.mul(a, b)) == kb:
                    smaller = True
                    break
            if not smaller:
                out.append(ka)
        return set(out)


def random_tensor_quotient(rng: random.Random, max_size=2000):
    """A random ``TensorQuotient`` with at most ``max_size`` elements."""
    while True:
        k = rng.choice([1, 1, 2])
        m = rng.randint(2, 16)
        degs = [rng.randint(1, 3) for _ in range(k)]
        size = m ** math.prod(degs)
        if 2 <= size <= max_size:
            break
    moduli = [[rng.randrange(m) for _ in range(d)] + [1] for d in degs]
    return TensorQuotient(m, moduli)


# -- random ideals with finite quotient ----------------------------------------


def random_finite_ideal(rng: random.Random, ring_for):
    """Generators of a random ideal of Z[x, y, z][:n] with a finite quotient.

    Up to three variables and four generators of degree at most two.  One
    monic pure power per variable keeps ``Z[x]/I`` finite; the remaining
    generators are random integers or random polynomials.
    """
    n = rng.choice([1, 1, 2, 2, 3])
    R = ring_for(n)
    gens = []
    for i in range(n):
        d = rng.choice([1, 2])
        e = [0] * n
        e[i] = d
        g = R.monomial(e)
        for _ in range(rng.randint(0, 2)):
            m = [0] * n
            m[rng.randrange(n)] = rng.randint(0, d - 1)
            g = g + R.monomial(m, rng.randint(-3, 3))
        gens.append(g)
    for _ in range(rng.randint(0, 4 - n)):
        if rng.random() < 0.5:
            gens.append(R(rng.choice([2, 3, 4, 5, 6, 8, 9, 12])))
        else:
            g = R(0)
            for _ in range(rng.randint(1, 3)):
                m = [0] * n
                for _ in range(rng.randint(0, 2)):
                    m[rng.randrange(n)] += 1
                g = g + R.monomial(m, rng.randint(-4, 4))
            if g:
                gens.append(g)
    return R, gens


def random_poly(rng: random.Random, R, max_deg=2, max_terms=3, coeff=5):
    f = R(0)
    n = R.nvars
    for _ in range(rng.randint(1, max_terms)):
        m = [0] * n
        for _ in range(rng.randint(0, max_deg)):
            m[rng.randrange(n)] += 1
        f = f + R.monomial(m, rng.randint(-coeff, coeff))
    return f


def minor_gcd(A, k):
    """gcd of all ``k x k`` minors of ``A`` (0 if there are none or all vanish)."""
    g = 0
    m, n = len(A), len(A[0]) if A else 0
    for rows in itertools.combinations(range(m), k):
        for cols in itertools.combinations(range(n), k):
            g = math.gcd(g, det([[A[i][j] for j in cols] for i in rows]))
    return g


def integer_solvable(A, b):
    """Heger's criterion: ``Ax = b`` has an integer solution iff ``A`` and
    ``[A | b]`` have equal rank ``r`` and equal gcd of ``r x r`` minors."""
    r = rank_over_Q(A) if A and A[0] else 0
    Ab = [list(row) + [c] for row, c in zip(A, b)]
    if rank_over_Q(Ab) != r:
        return False
    if r == 0:
        return True
    return minor_gcd(A, r) == minor_gcd(Ab, r)
