"""Direct decompositions of finite Z-algebras through their maximal ring of scalars.

The pipeline goes from an algebra given by generators, relations and
structure constants, to its annihilators and maximal ring of scalars, then
to a presentation ``Z[y]/I`` of that ring, the primitive idempotents of
``Z[y]/I`` (by primary decomposition over the integers), and finally the
factors of ``R/Ann(R)``.
"""

from importlib import resources

from .decompose import (
    certify_indecomposable,
    decompose_algebra,
    decompose_bilinear,
    evaluate_idempotent,
    verify_decomposition,
)
from .exactlin import FpAbelianGroup, smith_normal_form
from .idempotents import connected_components, primitive_idempotents
from .polyring import Ideal, PolyRing
from .primdec import primary_decomposition, primary_decomposition_with_primes
from .scalars import BilinearMap, ZAlgebra, annihilators, max_scalars_algebra, max_scalars_bilinear

__version__ = "0.1.0"

FIXTURES = ("example_4_5.ideal", "example_6_5.alg", "example_6_9.alg",
            "example_6_10.alg", "example_6_11.alg")


def fixture_path(name: str) -> str:
    """Filesystem path of a bundled example document."""
    return str(resources.files(__package__).joinpath("fixtures", name))


__all__ = [
    "BilinearMap",
    "FpAbelianGroup",
    "Ideal",
    "PolyRing",
    "ZAlgebra",
    "annihilators",
    "certify_indecomposable",
    "connected_components",
    "decompose_algebra",
    "decompose_bilinear",
    "evaluate_idempotent",
    "fixture_path",
    "max_scalars_algebra",
    "max_scalars_bilinear",
    "primary_decomposition",
    "primary_decomposition_with_primes",
    "primitive_idempotents",
    "smith_normal_form",
    "verify_decomposition",
]
