"""Hopf algebra dual to multiplication of invertible series, the coaction of
the diffeomorphism algebra on it, and the smash (semi-direct) coproduct.

Generators b_1, b_2, ... with coproduct(b_n) = sum b_k (x) b_{n-k}; the
algebra is free, the coproduct co-commutative on generators.  Mixed tensors
keep the convention that b-words and a-words never share a slot: the coaction
lands in (b-slot, a-slot), the smash carrier is (a, b, a, b).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from . import diffeo
from .freealg import (
    Letter,
    NCPoly,
    TensorElement,
    free_product_embed,
    poly_antimap,
    poly_map,
    substitute,
)


def generator(n: int) -> NCPoly:
    if n < 1:
        raise ValueError(f"generator index must be >= 1, got {n}")
    return NCPoly.generator(n)


@lru_cache(maxsize=None)
def coproduct_generator(n: int) -> TensorElement:
    if n < 1:
        raise ValueError(f"generator index must be >= 1, got {n}")
    terms: dict = {}
    for k in range(n + 1):
        left = () if k == 0 else ((k, 1),)
        right = () if k == n else ((n - k, 1),)
        terms[(left, right)] = 1
    return TensorElement(terms, rank=2)


def _coproduct_image(lt: Letter) -> TensorElement:
    i, tag = lt
    if tag != 1:
        raise ValueError("the tensor-valued coproduct acts on untagged elements")
    return coproduct_generator(i)


def coproduct(p: NCPoly) -> TensorElement:
    return poly_map(p, _coproduct_image, TensorElement.unit(2), TensorElement.zero(2))


def counit(p: NCPoly) -> Fraction:
    return Fraction(p.coefficient(()))


@lru_cache(maxsize=None)
def antipode_generator(n: int) -> NCPoly:
    """Graded recursion S(b_n) = -b_n - sum_{k<n} S(b_k) b_{n-k}; dual to the
    coefficient recursion of the reciprocal series."""
    if n < 1:
        raise ValueError(f"generator index must be >= 1, got {n}")
    out = -generator(n)
    for k in range(1, n):
        out = out - antipode_generator(k) * generator(n - k)
    return out


def antipode(p: NCPoly) -> NCPoly:
    def image(lt: Letter) -> NCPoly:
        i, tag = lt
        if tag != 1:
            raise ValueError("the antipode acts on untagged elements")
        return antipode_generator(i)

    return poly_antimap(p, image, NCPoly.one(), NCPoly.zero())


@lru_cache(maxsize=None)
def coproduct_star_generator(n: int) -> NCPoly:
    return free_product_embed(coproduct_generator(n))


def coproduct_star(p: NCPoly) -> NCPoly:
    """Free-product lift of the coproduct; coassociative, unlike the lift on
    the diffeomorphism side."""

    def image(lt: Letter) -> NCPoly:
        i, tag = lt
        if tag != 1:
            raise ValueError("the lift acts on untagged elements")
        return coproduct_star_generator(i)

    return substitute(p, image)


# -- coaction of the diffeomorphism algebra ---------------------------------

@lru_cache(maxsize=None)
def coaction_generator(n: int) -> TensorElement:
    """coaction(b_n) = sum_k b_k (x) Q(n-k, k-1): slot 1 over b, slot 2 over a."""
    if n < 1:
        raise ValueError(f"generator index must be >= 1, got {n}")
    terms: dict = {}
    for k in range(n + 1):
        left = () if k == 0 else ((k, 1),)
        for w, c in diffeo.q_polynomial(n - k, k - 1).items():
            key = (left, w)
            terms[key] = terms.get(key, 0) + c
    return TensorElement(terms, rank=2)


def coaction(p: NCPoly) -> TensorElement:
    """Multiplicative extension of the generator coaction to b-words."""

    def image(lt: Letter) -> TensorElement:
        i, tag = lt
        if tag != 1:
            raise ValueError("the coaction acts on untagged elements")
        return coaction_generator(i)

    return poly_map(p, image, TensorElement.unit(2), TensorElement.zero(2))


# -- smash coproduct ---------------------------------------------------------

def smash_coproduct(x: TensorElement) -> TensorElement:
    """Coproduct on the a (x) b carrier dual to the semi-direct group law.

    For basis tensors a (x) b it returns

        sum (a<1> (x) b<1>') (x) (a<2> b<1>'' (x) b<2>)

    where the coproducts split a and b and the coaction splits b<1>.  The
    b-leg of the coaction stays in its slot; the a-leg multiplies the second
    a-factor from the right.  Coassociativity of this placement is a suite
    check.  The result is only a coalgebra structure: no compatibility with
    the product is claimed or tested.
    """
    if x.rank != 2:
        raise ValueError(f"smash coproduct expects rank 2, got {x.rank}")
    out: dict = {}
    for (wa, wb), c in x.items():
        da = diffeo.coproduct(NCPoly.monomial(wa))
        db = coproduct(NCPoly.monomial(wb))
        for (a1, a2), c1 in da.items():
            for (b1, b2), c2 in db.items():
                dd = coaction(NCPoly.monomial(b1))
                for (b1p, b1pp), c3 in dd.items():
                    key = (a1, b1p, a2 + b1pp, b2)
                    coeff = c * c1 * c2 * c3
                    out[key] = out.get(key, 0) + coeff
    return TensorElement(out, rank=4)


def smash_counit(x: TensorElement) -> Fraction:
    if x.rank != 2:
        raise ValueError(f"smash counit expects rank 2, got {x.rank}")
    return Fraction(x.coefficient(((), ())))


def smash_coassociativity_sides(x: TensorElement) -> tuple[TensorElement, TensorElement]:
    """Expand the smash coproduct once more in the first or the second pair
    of slots; both rank-6 results must agree."""
    base = smash_coproduct(x)
    left: dict = {}
    right: dict = {}
    for (a1, b1, a2, b2), c in base.items():
        for (u1, v1, u2, v2), d in smash_coproduct(
            TensorElement({(a1, b1): 1}, rank=2)
        ).items():
            key = (u1, v1, u2, v2, a2, b2)
            left[key] = left.get(key, 0) + c * d
        for (u1, v1, u2, v2), d in smash_coproduct(
            TensorElement({(a2, b2): 1}, rank=2)
        ).items():
            key = (a1, b1, u1, v1, u2, v2)
            right[key] = right.get(key, 0) + c * d
    return TensorElement(left, rank=6), TensorElement(right, rank=6)
