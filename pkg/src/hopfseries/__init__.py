"""Exact-arithmetic engine for the non-commutative Hopf algebras of formal
power series: invertible series under multiplication, formal diffeomorphisms
under composition, their planar-binary-tree extensions, and the double tensor
bialgebra, with degree-bounded verification of their structural identities."""

from .freealg import (
    CommPoly,
    CommTensor,
    LinComb,
    NCPoly,
    TensorElement,
    abelianize,
    abelianize_tensor,
    free_product_embed,
    free_product_project,
    letter,
    word,
)
from .series import Matrix, MatrixAlgebra, Rationals, TruncatedSeries

__version__ = "0.1.0"

__all__ = [
    "CommPoly",
    "CommTensor",
    "LinComb",
    "Matrix",
    "MatrixAlgebra",
    "NCPoly",
    "Rationals",
    "TensorElement",
    "TruncatedSeries",
    "abelianize",
    "abelianize_tensor",
    "free_product_embed",
    "free_product_project",
    "letter",
    "word",
    "__version__",
]
