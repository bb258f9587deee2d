"""Primary decomposition over Z and the torsion split it starts from.

Run with ``python3 demos/primary_decomposition.py``.
"""

from zdecomp.idempotents import connected_components, primitive_idempotents
from zdecomp.polyring import Ideal, PolyRing, ideal_quotient
from zdecomp.primdec import primary_decomposition_with_primes, torsion_split

R = PolyRing(["x", "y", "z"])
I = Ideal(R, ["x^2 - 2*x", "y^2", "z", "y - 3*x"])
print("I =", I)
print("strong GB:", [str(g) for g in I.gb()])

generic, torsion, N = torsion_split(I)
print("\nN = lcm of leading coefficients =", N)
# one quotient by N falls short of the saturation here
once = ideal_quotient(I, Ideal(R, [N]))
print("I : N    =", [str(g) for g in once.gb()])
print("I : N^oo =", [str(g) for g in generic.gb()])
print("I + N^k  =", [str(g) for g in torsion.gb()])

res = primary_decomposition_with_primes(I)
print("\ncomponents:")
for c in res:
    print(f"  [{c.height_class}] primary {[str(g) for g in c.primary.gb()]}  prime {[str(g) for g in c.prime.gb()]}")
print("intersection recovers I:", res.check_intersection(), " irredundant:", res.is_irredundant())

print("\nclusters:", [c.members for c in connected_components(res)])
E = primitive_idempotents(I)
print("primitive idempotents:", [str(e) for e in E], " axioms hold:", E.check_axioms())
