"""Three small algebras: one that splits, one that splits without a
certificate, and one the scalar ring cannot split although it decomposes.

Run with ``python3 demos/algebra_gallery.py``.
"""

from zdecomp import fixture_path
from zdecomp.decompose import certify_indecomposable, decompose_algebra, verify_decomposition
from zdecomp.docformat import read_document
from zdecomp.scalars import r_squared_lattice


def show(name):
    doc = read_document(fixture_path(name))
    R = doc.algebra()
    rep = decompose_algebra(R)
    print(f"== {name}")
    print("   Ann(R):", [list(v) for v in rep.ann_basis])
    print("   R^2:   ", r_squared_lattice(R))
    print("   idempotents:", [str(e) for e in rep.idempotents])
    for f in rep.factors:
        print("   factor:", [list(v) for v in f.generators])
    print("   verified:", verify_decomposition(R, rep), " certified indecomposable:", certify_indecomposable(R))
    if doc.factors:
        print("   hand-made split", [[list(v) for v in f] for f in doc.factors],
              "verifies:", verify_decomposition(R, [list(f) for f in doc.factors]))
    print()


for name in ("example_6_10.alg", "example_6_11.alg", "example_6_9.alg"):
    show(name)
