"""Primary decomposition of ideals ``I`` of ``Z[x_1..x_n]`` with ``Z[x]/I`` finite over Z.

The integer case follows the classical reduction to fields.  When ``I``
contains no nonzero integer it is split as ``(I : N^infinity) cap (I + N^k)``
where ``N`` is the lcm of the leading coefficients of a minimal strong
Groebner basis and ``N^k`` kills the torsion.
The first part is decomposed over Q and contracted back, and the second part
is handled recursively.  When ``I cap Z = <q>``, each prime power
``p^nu || q`` is treated separately.  For ``nu = 1`` the components are
lifted from ``F_p``.  For ``nu > 1`` the primes are lifted and every
primary component is found as ``I + P^k`` for the first ``k`` that passes the
test ``(I + P^k) cap (I : P^infinity) = I``.

Zero-dimensional ideals over Q and F_p are decomposed by splitting with
minimal polynomials of elements of the quotient algebra.  Variables are tried
first, then seeded random linear forms over Q, or Frobenius-fixed elements
over F_p.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .factorize import factor_integer, factor_mod_p, factor_over_Q
from .polyring import (
    QQ,
    ZZ,
    GF,
    Ideal,
    Poly,
    PolyRing,
    coefficient_map,
    contract_to_Z,
    elim_constant,
    ideal_intersect,
    ideal_quotient,
    lift_from_Fp,
    saturate,
)

__all__ = [
    "PrimdecError",
    "PrimaryComponent",
    "DecompositionResult",
    "QuotientAlgebra",
    "is_finite_quotient",
    "torsion_split",
    "zerodim_decompose_field",
    "primary_decomposition",
    "primary_decomposition_with_primes",
    "intersect_all",
]

GENERIC = "generic"
MAXIMAL = "maximal"


class PrimdecError(ValueError):
    """The input violates a precondition (e.g. the quotient is not finite)."""


@dataclass(frozen=True, eq=False)
class PrimaryComponent:
    """A primary ideal, optionally with its radical.

    ``height_class`` is ``"generic"`` when the component meets Z only in 0
    and ``"maximal"`` when it contains a prime power.
    """

    primary: Ideal
    prime: Optional[Ideal]
    height_class: str

    def __repr__(self):
        p = f", prime={self.prime}" if self.prime is not None else ""
        return f"PrimaryComponent({self.primary}{p}, {self.height_class})"


@dataclass(frozen=True, eq=False)
class DecompositionResult:
    """The components of a primary decomposition of ``ideal``."""

    ideal: Ideal
    components: tuple

    def __len__(self):
        return len(self.components)

    def __iter__(self):
        return iter(self.components)

    def __getitem__(self, i):
        return self.components[i]

    def intersection(self) -> Ideal:
        return intersect_all([c.primary for c in self.components], self.ideal.ring)

    def check_intersection(self) -> bool:
        """Whether the components intersect exactly to the input ideal."""
        return self.intersection() == self.ideal

    def is_irredundant(self) -> bool:
        """No component contains the intersection of the others."""
        comps = [c.primary for c in self.components]
        if len(comps) < 2:
            return True
        for i in range(len(comps)):
            rest = intersect_all(comps[:i] + comps[i + 1:], self.ideal.ring)
            if rest.issubset(comps[i]):
                return False
        return True


def intersect_all(ideals: Sequence[Ideal], ring: PolyRing) -> Ideal:
    """Intersection of a list of ideals (the unit ideal for an empty list)."""
    if not ideals:
        return Ideal(ring, [1])
    cur = ideals[0]
    for J in ideals[1:]:
        cur = ideal_intersect(cur, J)
    return cur


# ---------------------------------------------------------------------------
# finiteness and torsion


def is_finite_quotient(I: Ideal) -> bool:
    """Whether ``Z[x]/I`` is a finitely generated Z-module.

    This holds iff for every variable the strong Groebner basis has an element
    whose leading monomial is a pure power of that variable with coefficient
    one.  Over a field the coefficient condition is vacuous.
    """
    gb = I.gb()
    n = I.ring.nvars
    if I.is_one():
        return True
    field = I.ring.domain.field
    for i in range(n):
        ok = False
        for g in gb:
            e = g.LT()
            if e[i] and sum(e) == e[i] and (field or abs(g.LC()) == 1):
                ok = True
                break
        if not ok:
            return False
    return True


def _lcm(values) -> int:
    out = 1
    for v in values:
        v = abs(int(v))
        out = out * v // math.gcd(out, v)
    return out


def torsion_split(I: Ideal) -> tuple[Ideal, Ideal, int]:
    """Split ``I = (I : N^infinity) cap (I + N^k)``.

    ``N`` is the lcm of the leading coefficients of the strong Groebner basis
    and ``k`` the least exponent with ``I : N^k = I : N^(k+1)``.  The first
    ideal is the preimage of ``I Q[x]`` and its quotient by ``I`` is the
    torsion of ``Z[x]/I``.  Usually ``k = 1``, but not always: for
    ``<x^2 - 2x, y^2, z, y - 3x>`` the basis gives ``N = 6`` while ``x``
    has additive order 18, so ``k = 2``.

    Requires ``I cap Z = 0``.

    Returns:
        ``(I : N^infinity, I + N^k, N)``.
    """
    if elim_constant(I):
        raise PrimdecError("torsion_split needs an ideal with I cap Z = 0")
    gb = I.gb()
    N = _lcm(g.LC() for g in gb)
    ring = I.ring
    if N == 1:
        return Ideal(ring, gb), Ideal(ring, [1]), 1
    cur = Ideal(ring, gb)
    k = 0
    while True:
        nxt = ideal_quotient(cur, Ideal(ring, [N]))
        if nxt.issubset(cur):
            break
        cur = Ideal(ring, nxt.gb())
        k += 1
    side = Ideal(ring, list(gb) + [ring(N ** max(k, 1))])
    return cur, side, N


# ---------------------------------------------------------------------------
# zero-dimensional ideals over fields


class QuotientAlgebra:
    """The finite-dimensional algebra ``K[x]/J`` for a zero-dimensional ``J``.

    Elements are represented by coordinate lists over the standard monomials
    (terms not divisible by a leading term of the reduced basis).
    """

    def __init__(self, J: Ideal):
        self.ideal = J
        self.ring = J.ring
        self.domain = J.ring.domain
        if not self.domain.field:
            raise PrimdecError("quotient algebras are only built over fields")
        self.gb = J.gb()
        if not is_finite_quotient(J):
            raise PrimdecError("ideal is not zero-dimensional")
        self.basis = self._standard_monomials()
        self.index = {e: i for i, e in enumerate(self.basis)}

    def _standard_monomials(self):
        if any(g.is_constant() for g in self.gb):
            return []
        lts = [g.LT() for g in self.gb]
        n = self.ring.nvars

        def standard(e):
            return not any(all(a <= b for a, b in zip(t, e)) for t in lts)

        start = (0,) * n
        seen = {start}
        todo = [start]
        while todo:
            e = todo.pop()
            for i in range(n):
                f = e[:i] + (e[i] + 1,) + e[i + 1:]
                if f not in seen and standard(f):
                    seen.add(f)
                    todo.append(f)
        return sorted(seen, key=self.ring.key)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def reduce(self, f: Poly) -> Poly:
        return self.ideal.normal_form(f)

    def vector(self, f: Poly) -> list:
        v = [self.domain.norm(0)] * self.dim
        for e, c in self.reduce(f).terms.items():
            v[self.index[e]] = c
        return v

    def min_poly(self, f: Poly) -> list:
        """Monic minimal polynomial of ``f`` as a dense list (low degree first)."""
        dom = self.domain
        rows = []  # echelon rows: (pivot, vector, combination over powers)
        power = self.ring(1)
        k = 0
        while True:
            v = self.vector(power)
            comb = [dom.norm(0)] * (k + 1)
            comb[k] = dom.norm(1)
            for piv, rv, rc in rows:
                c = v[piv]
                if c:
                    v = [dom.norm(a - c * b) for a, b in zip(v, rv)]
                    comb = [dom.norm(a - c * (rc[i] if i < len(rc) else 0)) for i, a in enumerate(comb)]
            piv = next((i for i, a in enumerate(v) if a), None)
            if piv is None:
                return comb
            inv = dom.inv(v[piv])
            rows.append((piv, [dom.norm(a * inv) for a in v], [dom.norm(a * inv) for a in comb]))
            power = self.reduce(power * f)
            k += 1

    def evaluate(self, coeffs: Sequence, f: Poly) -> Poly:
        """``g(f)`` reduced modulo the ideal, for ``g`` given densely."""
        out = self.ring(0)
        for c in reversed(coeffs):
            out = self.reduce(out * f + self.ring(c))
        return out

    def frobenius_fixed(self) -> list[Poly]:
        """Basis of ``{a : a^p = a}`` for a quotient over ``F_p``."""
        p = self.domain.p
        n = self.dim
        images = [self.vector(self.ring.monomial(e) ** p) for e in self.basis]
        # rows of (F - I)^T acting on coordinate vectors: solve sum_i c_i (img_i - e_i) = 0
        cols = []
        for i in range(n):
            col = list(images[i])
            col[i] = (col[i] - 1) % p
            cols.append(col)
        kernel = _nullspace_mod_p(cols, n, p)
        return [self.ring.from_dict({self.basis[i]: c for i, c in enumerate(k) if c}) for k in kernel]


def _nullspace_mod_p(cols: list[list[int]], n: int, p: int) -> list[list[int]]:
    """Vectors ``c`` with ``sum_i c_i cols[i] = 0`` over ``F_p``."""
    # matrix with columns = cols; row-reduce
    A = [[cols[j][i] % p for j in range(n)] for i in range(len(cols[0]) if cols else 0)]
    pivots = []
    r = 0
    for c in range(n):
        pr = next((i for i in range(r, len(A)) if A[i][c]), None)
        if pr is None:
            continue
        A[r], A[pr] = A[pr], A[r]
        inv = pow(A[r][c], -1, p)
        A[r] = [a * inv % p for a in A[r]]
        for i in range(len(A)):
            if i != r and A[i][c]:
                f = A[i][c]
                A[i] = [(a - f * b) % p for a, b in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(n) if c not in pivots]
    out = []
    for fc in free:
        v = [0] * n
        v[fc] = 1
        for i, pc in enumerate(pivots):
            v[pc] = (-A[i][fc]) % p
        out.append(v)
    return out


def _factor_dense(coeffs, domain, seed):
    """Distinct irreducible factors with multiplicities, as dense domain lists."""
    if domain.characteristic == 0:
        _, facs = factor_over_Q(list(coeffs), seed=seed)
        return [([Fraction(c) for c in f], m) for f, m in facs]
    _, facs = factor_mod_p([int(c) for c in coeffs], domain.p, seed=seed)
    return facs


def _dense_pow(f, m, domain):
    out = [domain.norm(1)]
    for _ in range(m):
        new = [domain.norm(0)] * (len(out) + len(f) - 1)
        for i, a in enumerate(out):
            for j, b in enumerate(f):
                new[i + j] = domain.norm(new[i + j] + a * b)
        out = new
    return out


def _split_by(A: QuotientAlgebra, f: Poly, seed: int) -> Optional[list[Ideal]]:
    """Split ``A.ideal`` along the factorization of the minimal polynomial of ``f``."""
    mp = A.min_poly(f)
    facs = _factor_dense(mp, A.domain, seed)
    if len(facs) < 2:
        return None
    J = A.ideal
    return [Ideal(J.ring, list(A.gb) + [A.evaluate(_dense_pow(g, m, A.domain), f)]) for g, m in facs]


def zerodim_decompose_field(I: Ideal, seed: int = 0) -> list[tuple[Ideal, Ideal]]:
    """Primary decomposition with radicals of a zero-dimensional ideal over Q or F_p.

    Returns:
        Pairs ``(primary, prime)`` sorted by the canonical form of the primary
        ideal.  The unit ideal has no components.
    """
    if not I.ring.domain.field:
        raise PrimdecError("zerodim_decompose_field expects a field of coefficients")
    if I.is_one():
        return []
    if not is_finite_quotient(I):
        raise PrimdecError("ideal is not zero-dimensional")
    rng = random.Random(seed)
    out: list[tuple[Ideal, Ideal]] = []
    todo = [Ideal(I.ring, I.gb())]
    while todo:
        J = todo.pop()
        if J.is_one():
            continue
        res = _split_once(J, rng, seed)
        if isinstance(res, list):
            todo.extend(res)
        else:
            out.append((Ideal(J.ring, J.gb()), res))
    out.sort(key=lambda qp: qp[0].canonical())
    return out


def _split_once(J: Ideal, rng: random.Random, seed: int):
    """Either a list of finer ideals, or the prime radical of ``J`` when primary."""
    A = QuotientAlgebra(J)
    ring = J.ring
    sqfree = []
    for x in ring.gens:
        mp = A.min_poly(x)
        facs = _factor_dense(mp, A.domain, seed)
        if len(facs) > 1:
            dom = A.domain
            return [Ideal(ring, list(A.gb) + [A.evaluate(_dense_pow(g, m, dom), x)]) for g, m in facs]
        sqfree.append(A.evaluate(facs[0][0], x))
    # the variables have prime-power minimal polynomials; adding the
    # irreducible parts gives the radical
    R = Ideal(ring, list(A.gb) + sqfree)
    AR = QuotientAlgebra(R)
    if AR.dim == 1:
        return Ideal(ring, R.gb())
    if A.domain.characteristic:
        fixed = AR.frobenius_fixed()
        if len(fixed) <= 1:
            return Ideal(ring, R.gb())
        for b in fixed:
            if not b.is_constant():
                parts = _split_by(A, b, seed)
                if parts:
                    return parts
        raise PrimdecError("failed to split a non-primary ideal over F_p")
    bound = 3
    for attempt in range(200):
        coeffs = [rng.randint(-bound, bound) for _ in ring.gens]
        ell = sum((c * x for c, x in zip(coeffs, ring.gens)), ring(0))
        if not ell:
            continue
        mpR = AR.min_poly(ell)
        if len(mpR) - 1 == AR.dim:
            facs = _factor_dense(mpR, A.domain, seed)
            if len(facs) == 1:
                return Ideal(ring, R.gb())
            return _split_by(A, ell, seed)
        if attempt % 20 == 19:
            bound *= 2
    raise PrimdecError("no separating linear form found")


# ---------------------------------------------------------------------------
# Algorithm over the integers


def _check_finite(I: Ideal) -> None:
    if not is_finite_quotient(I):
        raise PrimdecError("Z[x]/I is not a finitely generated Z-module")


def _power_component(I: Ideal, P: Ideal) -> Ideal:
    """The ``P``-primary component ``I + P^k`` for the least passing ``k``.

    Uses ``I + P (I + P^k) = I + P^(k+1)`` so that every step multiplies
    by a basis that is already reduced modulo ``I``.
    """
    ring = I.ring
    sat = saturate(I, P)
    Pgb = P.gb()
    Q = Ideal(ring, list(I.gb()) + list(Pgb))
    for _ in range(64):
        if ideal_intersect(Q, sat) == I:
            return Ideal(ring, Q.gb())
        Q = Ideal(ring, list(I.gb()) + [p * q for p in Pgb for q in Q.gb()])
    raise PrimdecError("primary component exponent search did not stabilise")


def _decompose(I: Ideal, seed: int) -> list[PrimaryComponent]:
    _check_finite(I)
    ring = I.ring
    q = elim_constant(I)
    if q == 1:
        return []
    if q == 0:
        generic, side, N = torsion_split(I)
        L = []
        for Qb, Pb in zerodim_decompose_field(coefficient_map(I, QQ), seed):
            L.append(PrimaryComponent(contract_to_Z(Qb), contract_to_Z(Pb), GENERIC))
        M = _decompose(side, seed) if N != 1 else []
        if M:
            J = intersect_all([c.primary for c in L], ring)
            M = [c for c in M if not J.issubset(c.primary)]
        return L + M
    M = []
    for p, nu in factor_integer(q, seed=seed):
        comps = zerodim_decompose_field(coefficient_map(I, GF(p)), seed)
        for Qb, Pb in comps:
            P = lift_from_Fp(Pb, p)
            P = Ideal(ring, P.gb())
            if nu == 1:
                Q = lift_from_Fp(Qb, p)
                Q = Ideal(ring, Q.gb())
            else:
                Q = _power_component(I, P)
            M.append(PrimaryComponent(Q, P, MAXIMAL))
    return M


def primary_decomposition_with_primes(I: Ideal, seed: int = 0) -> DecompositionResult:
    """Primary decomposition of ``I`` together with the prime of every component.

    Components are sorted by the canonical form of their primary ideal.
    """
    if I.ring.domain != ZZ:
        raise PrimdecError("primary_decomposition expects an ideal of Z[x]")
    comps = _decompose(I, seed)
    comps.sort(key=lambda c: (c.height_class != GENERIC, c.primary.canonical()))
    return DecompositionResult(I, tuple(comps))


def primary_decomposition(I: Ideal, seed: int = 0) -> DecompositionResult:
    """Primary decomposition of ``I``; see :func:`primary_decomposition_with_primes`."""
    res = primary_decomposition_with_primes(I, seed)
    return DecompositionResult(I, tuple(PrimaryComponent(c.primary, None, c.height_class)
                                        for c in res.components))
