"""Hopf algebra dual to composition of formal diffeomorphisms.

The algebra is free on generators a_1, a_2, ... (single-letter words), graded
by the sum of letter indices.  The coproduct of a generator is

    coproduct(a_n) = sum_{k=0}^{n} a_k (x) Q(n-k, k),

where Q(m, n) sums the words a_{j_0}...a_{j_n} over all decompositions
j_0 + ... + j_n = m with j_i >= 0 and a_0 read as the unit.  Equivalently,
Q(m, n) is the coefficient of x^{m+n+1} in the (n+1)-st power of the
generating series x + a_1 x^2 + a_2 x^3 + ...; that power formulation drives
the recurrence, quadratic and resolvent identities checked by the test suite.

The antipode is computed two ways: by the graded recursion, and by the closed
formula whose integer weights lambda(n_1, ..., n_k) sum binomial products
over constrained integer tuples (the same tuples the Catalan bijection module
enumerates).  Both must agree identically; the equivalence is an acceptance
criterion.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .combinat import compositions, partitions, positive_compositions
from .freealg import (
    CommTensor,
    Letter,
    NCPoly,
    TensorElement,
    free_product_embed,
    poly_map,
    substitute,
    word,
)


def generator(n: int) -> NCPoly:
    if n < 1:
        raise ValueError(f"generator index must be >= 1, got {n}")
    return NCPoly.generator(n)


@lru_cache(maxsize=None)
def q_polynomial(m: int, n: int, a0_is_unit: bool = True) -> NCPoly:
    """Sum of a_{j_0}...a_{j_n} over j_0+...+j_n = m, j_i >= 0.

    With ``a0_is_unit`` the index-0 letters are dropped (they are the unit);
    otherwise they are kept as literal a_0 letters, which is the variant used
    by the free bialgebra with an unidentified a_0.  n = -1 is allowed and
    gives 1 for m = 0, else 0.
    """
    if m < 0:
        raise ValueError(f"degree must be >= 0, got {m}")
    if n < -1:
        raise ValueError(f"power index must be >= -1, got {n}")
    if n == -1:
        return NCPoly.one() if m == 0 else NCPoly.zero()
    terms: dict = {}
    for comp in compositions(m, n + 1):
        if a0_is_unit:
            w = tuple((j, 1) for j in comp if j)
        else:
            w = tuple((j, 1) for j in comp)
        terms[w] = terms.get(w, 0) + 1
    return NCPoly(terms)


@lru_cache(maxsize=None)
def q_polynomial_via_binomials(m: int, n: int, a0_is_unit: bool = True) -> NCPoly:
    """Binomial form of ``q_polynomial``: sum over l of C(n+1, l) times the
    positive decompositions of m into l parts.  Requires the unit reading of
    a_0 (the rewriting collapses the unit letters) and n >= 0."""
    if not a0_is_unit:
        raise ValueError("the binomial form assumes a_0 is the unit")
    if n < 0:
        raise ValueError(f"power index must be >= 0, got {n}")
    terms: dict = {}
    for length in range(m + 1):
        coeff = math.comb(n + 1, length)
        if coeff == 0:
            continue
        for comp in positive_compositions(m, length):
            w = word(*comp)
            terms[w] = terms.get(w, 0) + coeff
    return NCPoly(terms)


@lru_cache(maxsize=None)
def coproduct_generator(n: int) -> TensorElement:
    if n < 1:
        raise ValueError(f"generator index must be >= 1, got {n}")
    terms: dict = {}
    for k in range(n + 1):
        left = () if k == 0 else ((k, 1),)
        for w, c in q_polynomial(n - k, k).items():
            key = (left, w)
            terms[key] = terms.get(key, 0) + c
    return TensorElement(terms, rank=2)


def _coproduct_image(lt: Letter) -> TensorElement:
    i, tag = lt
    if i == 0:
        raise ValueError("index-0 letters are the unit here and never occur in words")
    if tag != 1:
        raise ValueError("the tensor-valued coproduct acts on untagged elements")
    return coproduct_generator(i)


def coproduct(p: NCPoly) -> TensorElement:
    """Multiplicative extension of the generator coproduct."""
    return poly_map(p, _coproduct_image, TensorElement.unit(2), TensorElement.zero(2))


def counit(p: NCPoly) -> Fraction:
    return Fraction(p.coefficient(()))


@lru_cache(maxsize=None)
def antipode_recursive(n: int) -> NCPoly:
    """Graded recursion: S(a_n) = -a_n - sum_{p<n} a_p S(Q(n-p, p))."""
    if n < 1:
        raise ValueError(f"generator index must be >= 1, got {n}")
    out = -generator(n)
    for p in range(1, n):
        out = out - generator(p) * antipode(q_polynomial(n - p, p))
    return out


def antipode(p: NCPoly) -> NCPoly:
    """Antipode on arbitrary elements: the anti-homomorphic extension of the
    generator values, which is what the Hopf axioms force."""
    from .freealg import poly_antimap

    def image(lt: Letter) -> NCPoly:
        i, tag = lt
        if tag != 1:
            raise ValueError("the antipode acts on untagged elements")
        return antipode_recursive(i)

    return poly_antimap(p, image, NCPoly.one(), NCPoly.zero())


def _lambda_summation_tuples(k: int):
    """Tuples (m_1..m_k) of non-negative integers with total k whose first
    k-1 partial sums dominate their position."""

    def rec(prefix: tuple[int, ...], total: int):
        h = len(prefix)
        if h == k:
            if total == k:
                yield prefix
            return
        for v in range(k - total + 1):
            if h + 1 <= k - 1 and total + v < h + 1:
                continue
            yield from rec(prefix + (v,), total + v)

    yield from rec((), 0)


@lru_cache(maxsize=None)
def lambda_coefficient(entries: tuple[int, ...]) -> int:
    """Integer weight of a monomial in the closed-form antipode."""
    if not entries:
        raise ValueError("the coefficient needs at least one entry")
    if any(n < 1 for n in entries):
        raise ValueError(f"entries must be positive, got {entries}")
    k = len(entries)
    total = 0
    for m in _lambda_summation_tuples(k):
        prod = 1
        for n_i, m_i in zip(entries, m):
            prod *= math.comb(n_i + 1, m_i)
            if prod == 0:
                break
        total += prod
    return total


@lru_cache(maxsize=None)
def antipode_closed(n: int) -> NCPoly:
    """Closed form of the antipode on a generator.

    The weight of a word a_{n_1}...a_{n_k} a_{n_{k+1}} is
    (-1)^{k+1} lambda(n_1,...,n_k); it does not depend on the last letter.
    """
    if n < 1:
        raise ValueError(f"generator index must be >= 1, got {n}")
    terms: dict = {word(n): -1}
    for k in range(1, n):
        sign = -((-1) ** k)
        for comp in positive_compositions(n, k + 1):
            lam = lambda_coefficient(comp[:k])
            w = word(*comp)
            terms[w] = terms.get(w, 0) + sign * lam
    return NCPoly(terms)


def binomial_identity_residual(q: int, entries: tuple[int, ...]) -> int:
    """Left-hand side of the alternating binomial identity behind the closed
    antipode; it vanishes for every q >= 1 and positive (n_1..n_{q+1})."""
    if q < 1:
        raise ValueError(f"q must be >= 1, got {q}")
    entries = tuple(entries)
    if len(entries) != q + 1:
        raise ValueError(f"expected {q + 1} entries, got {len(entries)}")
    if any(n < 1 for n in entries):
        raise ValueError(f"entries must be positive, got {entries}")
    total = -math.comb(entries[0] + 1, q)
    for k in range(1, q + 1):
        lam = lambda_coefficient(entries[:k])
        total += (-1) ** (k + 1) * lam * math.comb(sum(entries[: k + 1]) + 1, q - k)
    return total


# -- free-product lift -----------------------------------------------------

@lru_cache(maxsize=None)
def coproduct_star_generator(n: int) -> NCPoly:
    return free_product_embed(coproduct_generator(n))


def coproduct_star(p: NCPoly) -> NCPoly:
    """Lift of the coproduct into the two-tagged free product algebra.

    Unlike the tensor-valued coproduct this lift is not coassociative; the
    defect first shows at degree 3.
    """

    def image(lt: Letter) -> NCPoly:
        i, tag = lt
        if tag != 1:
            raise ValueError("the lift acts on untagged elements")
        return coproduct_star_generator(i)

    return substitute(p, image)


# -- commutative cross-check ------------------------------------------------

def faa_di_bruno_u(n: int) -> CommTensor:
    """Classical Faa di Bruno coproduct of u_n in the divided-power basis
    (commutative), computed from the multinomial partition formula."""
    if n < 1:
        raise ValueError(f"index must be >= 1, got {n}")
    terms: dict = {}
    for alpha in partitions(n):
        k = sum(alpha.values())
        denom = 1
        for part, count in alpha.items():
            denom *= math.factorial(count) * math.factorial(part) ** count
        coeff = Fraction(math.factorial(n), denom)
        mono = tuple(sorted(part for part, count in alpha.items() for _ in range(count)))
        key = ((k,), mono)
        terms[key] = terms.get(key, 0) + coeff
    return CommTensor(terms, rank=2)


def faa_di_bruno_coproduct(n: int) -> CommTensor:
    """Commutative coproduct of a_n, obtained from the u-variable formula by
    the substitution u_j = j! a_{j-1} with a_0 = 1.  Must agree with the
    abelianisation of the non-commutative coproduct."""
    if n < 1:
        raise ValueError(f"generator index must be >= 1, got {n}")
    terms: dict = {}
    for ((k,), mono), c in faa_di_bruno_u(n + 1).items():
        scale = Fraction(math.factorial(k), math.factorial(n + 1))
        for j in mono:
            scale *= math.factorial(j)
        left = () if k == 1 else (k - 1,)
        right = tuple(sorted(j - 1 for j in mono if j >= 2))
        key = (left, right)
        terms[key] = terms.get(key, 0) + c * scale
    return CommTensor(terms, rank=2)


# -- resolvent identity of the double generating function -------------------

def _tri_mul(A: dict, B: dict, x_order: int, y_order: int) -> dict:
    out: dict = {}
    for (i1, j1, m1), p1 in A.items():
        for (i2, j2, m2), p2 in B.items():
            i, j, m = i1 + i2, j1 + j2, m1 + m2
            if i > x_order or j > x_order or m > y_order:
                continue
            key = (i, j, m)
            prod = p1 * p2
            out[key] = out[key] + prod if key in out else prod
    return {k: v for k, v in out.items() if v}


def _tri_shift(A: dict, axis: int, x_order: int) -> dict:
    out: dict = {}
    for key, p in A.items():
        lst = list(key)
        lst[axis] += 1
        if lst[axis] > x_order:
            continue
        out[tuple(lst)] = p
    return out


def resolvent_identity_holds(x_order: int, y_order: int) -> bool:
    """Check Q(x,y) = Q(z,y) + (x - z) Q(x,y) Q(z,y) coefficient-wise on the
    truncated trivariate series whose coefficients are the Q polynomials.
    x and z share the first truncation order, y uses the second."""
    if x_order < 0 or y_order < 0:
        raise ValueError("truncation orders must be >= 0")
    q_xy = {(n, 0, m): q_polynomial(m, n) for n in range(x_order + 1) for m in range(y_order + 1)}
    q_zy = {(0, n, m): q_polynomial(m, n) for n in range(x_order + 1) for m in range(y_order + 1)}
    prod = _tri_mul(q_xy, q_zy, x_order, y_order)
    lhs: dict = dict(q_xy)

    def sub_into(acc: dict, other: dict) -> None:
        for key, p in other.items():
            acc[key] = acc[key] - p if key in acc else -p

    sub_into(lhs, q_zy)
    sub_into(lhs, _tri_shift(prod, 0, x_order))
    for key, p in _tri_shift(prod, 1, x_order).items():
        lhs[key] = lhs[key] + p if key in lhs else p
    return all(p.is_zero() for p in lhs.values())
