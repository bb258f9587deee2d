"""Walk through the decomposition of the five-generator Lie ring fixture.

Run with ``python3 demos/lie_ring_walkthrough.py``.
"""

import warnings

from zdecomp import fixture_path
from zdecomp.decompose import decompose_algebra, evaluate_idempotent
from zdecomp.docformat import read_document
from zdecomp.scalars import annihilators, max_scalars_algebra

# The structure constants are not compatible with the torsion relations, so
# the document is lenient and construction only warns.
with warnings.catch_warnings():
    warnings.simplefilter("ignore")
    L = read_document(fixture_path("example_6_5.alg")).algebra()

print("additive group:", L.group)
left, right, both = annihilators(L)
print("two-sided annihilator (Hermite rows):", both)

S = max_scalars_algebra(L)
print("\nring of scalars on", S.rank, "generators")
for k, g in enumerate(S.generators, 1):
    print(f"  y{k} acts on L/Ann by the diagonal", [g.first[i][i] for i in range(L.n)])
print("presentation:", [str(g) for g in S.presentation.gb()])

report = decompose_algebra(L, seed=0)
print("\nprimitive idempotents:", [str(e) for e in report.idempotents])
for e, factor in zip(report.idempotents, report.factors):
    E = evaluate_idempotent(e, S.generators)
    print(f"  e = {e}: first block diagonal {[E.first[i][i] for i in range(L.n)]}")
    print("     factor generated by", [list(v) for v in factor.generators])

print("\nindecomposability certificate:", report.indecomposable_certified)
