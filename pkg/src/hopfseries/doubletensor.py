"""Double tensor bialgebra over the trivial base and its word realization.

Over the one-dimensional base bialgebra every inner tensor power collapses to
a single basis vector, so a basis element of the double tensor algebra is a
word of block sizes: block n stands for the n-fold inner tensor.  Three
linear operators act on the first block, mirroring multiplication at the
three depths of the construction:

    A: leave the word alone        (inner product with the unit),
    B: grow the first block by one (prepend to the inner tensor),
    C: prepend a new block of one  (prepend at the outer level).

On the empty word B and C both create the block [1]; A is the identity.
The coproduct is defined block-wise by the recursion D(B w) = (A (x) B +
B (x) C) D(w) and extended multiplicatively over block concatenation.

Sending block n to the letter a_{n-1} identifies this bialgebra with the
free algebra on a_0, a_1, ... whose coproduct keeps a_0 as a genuine letter;
deleting a_0 afterwards recovers the diffeomorphism Hopf algebra.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Mapping

from . import diffeo
from .freealg import LinComb, Letter, NCPoly, TensorElement, poly_map

BlockWord = tuple[int, ...]


def _check_block_word(w: BlockWord) -> BlockWord:
    w = tuple(w)
    if any(b < 1 for b in w):
        raise ValueError(f"block sizes must be >= 1, got {w}")
    return w


def block_word_sort_key(w: BlockWord):
    return (sum(w), len(w), w)


class BlockPoly(LinComb):
    """Rational combination of block words; product is concatenation."""

    __slots__ = ()

    @staticmethod
    def _mul_key(a, b):
        return a + b

    _sort_key = staticmethod(block_word_sort_key)

    @classmethod
    def one(cls) -> "BlockPoly":
        return cls({(): 1})

    @classmethod
    def word(cls, w: BlockWord, coeff=1) -> "BlockPoly":
        return cls({_check_block_word(w): coeff})


class BlockTensor(LinComb):
    """Tensor square of the block-word algebra."""

    __slots__ = ("rank",)

    def __init__(self, terms: Mapping | None = None, rank: int | None = None):
        super().__init__(terms)
        if rank is None:
            if not self._terms:
                raise ValueError("rank is required for an empty tensor")
            rank = len(next(iter(self._terms)))
        self.rank = rank

    @staticmethod
    def _mul_key(a, b):
        return tuple(wa + wb for wa, wb in zip(a, b))

    @staticmethod
    def _sort_key(key):
        return tuple(block_word_sort_key(w) for w in key)

    def _make(self, terms):
        return BlockTensor(terms, rank=self.rank)

    def _check_compat(self, other) -> None:
        if self.rank != other.rank:
            raise ValueError(f"rank mismatch: {self.rank} != {other.rank}")

    def _extra_state(self):
        return self.rank

    @classmethod
    def unit(cls, rank: int) -> "BlockTensor":
        return cls({((),) * rank: 1}, rank=rank)


def _op_a_key(w: BlockWord) -> BlockWord:
    return w


def _op_b_key(w: BlockWord) -> BlockWord:
    if not w:
        return (1,)
    return (w[0] + 1,) + w[1:]


def _op_c_key(w: BlockWord) -> BlockWord:
    return (1,) + w


def _linear(key_map):
    def apply(p: BlockPoly) -> BlockPoly:
        out: dict = {}
        for w, c in p.items():
            k = key_map(w)
            out[k] = out.get(k, 0) + c
        return BlockPoly(out)

    return apply


op_a = _linear(_op_a_key)
op_b = _linear(_op_b_key)
op_c = _linear(_op_c_key)


@lru_cache(maxsize=None)
def coproduct_block(n: int) -> BlockTensor:
    """Coproduct of a single block, by the operator recursion."""
    if n < 1:
        raise ValueError(f"block size must be >= 1, got {n}")
    if n == 1:
        return BlockTensor({((1,), (1,)): 1}, rank=2)
    out: dict = {}
    for (u, v), c in coproduct_block(n - 1).items():
        k1 = (_op_a_key(u), _op_b_key(v))
        out[k1] = out.get(k1, 0) + c
        k2 = (_op_b_key(u), _op_c_key(v))
        out[k2] = out.get(k2, 0) + c
    return BlockTensor(out, rank=2)


def coproduct_ttb(p: BlockPoly) -> BlockTensor:
    """Multiplicative extension of the block coproduct to block words."""
    out = BlockTensor({}, rank=2)
    for w, c in p.items():
        acc = BlockTensor.unit(2)
        for b in w:
            acc = acc * coproduct_block(b)
        out = out + c * acc
    return out


def counit_ttb(p: BlockPoly) -> Fraction:
    """Blocks of size one hit the base counit (value 1); longer blocks die."""
    total = Fraction(0)
    for w, c in p.items():
        if all(b == 1 for b in w):
            total += c
    return total


# -- the word realization ----------------------------------------------------

def phi_iso_word(w: BlockWord) -> tuple[Letter, ...]:
    return tuple((b - 1, 1) for b in w)


def phi_iso(p: BlockPoly) -> NCPoly:
    """Algebra isomorphism: block n goes to the letter a_{n-1}."""
    out: dict = {}
    for w, c in p.items():
        k = phi_iso_word(w)
        out[k] = out.get(k, 0) + c
    return NCPoly(out)


def phi_iso_tensor(t: BlockTensor) -> TensorElement:
    out: dict = {}
    for key, c in t.items():
        k = tuple(phi_iso_word(w) for w in key)
        out[k] = out.get(k, 0) + c
    return TensorElement(out, rank=t.rank)


@lru_cache(maxsize=None)
def coproduct_bdif_generator(n: int) -> TensorElement:
    """Same shape as the diffeomorphism coproduct but with literal a_0."""
    if n < 0:
        raise ValueError(f"generator index must be >= 0, got {n}")
    terms: dict = {}
    for k in range(n + 1):
        left = ((k, 1),)
        for w, c in diffeo.q_polynomial(n - k, k, a0_is_unit=False).items():
            key = (left, w)
            terms[key] = terms.get(key, 0) + c
    return TensorElement(terms, rank=2)


def coproduct_bdif(p: NCPoly) -> TensorElement:
    """Coproduct on the free algebra with a_0 unidentified; a bialgebra but
    not a Hopf algebra (a_0 has no antipode)."""

    def image(lt: Letter) -> TensorElement:
        i, tag = lt
        if tag != 1:
            raise ValueError("the coproduct acts on untagged elements")
        return coproduct_bdif_generator(i)

    return poly_map(p, image, TensorElement.unit(2), TensorElement.zero(2))


def counit_bdif(p: NCPoly) -> Fraction:
    """a_0 goes to 1, every higher generator to 0."""
    total = Fraction(0)
    for w, c in p.items():
        if all(i == 0 for i, _ in w):
            total += c
    return total


def quotient_a0(p: NCPoly) -> NCPoly:
    """Identify a_0 with the unit: delete index-0 letters."""
    out: dict = {}
    for w, c in p.items():
        k = tuple(lt for lt in w if lt[0] != 0)
        out[k] = out.get(k, 0) + c
    return NCPoly(out)


def quotient_a0_tensor(t: TensorElement) -> TensorElement:
    out: dict = {}
    for key, c in t.items():
        k = tuple(tuple(lt for lt in w if lt[0] != 0) for w in key)
        out[k] = out.get(k, 0) + c
    return TensorElement(out, rank=t.rank)


def _word_op_a(w):
    return w


def _word_op_b(w):
    if not w:
        return ((0, 1),)
    (i, tag), rest = w[0], w[1:]
    return ((i + 1, tag),) + rest


def _word_op_c(w):
    return ((0, 1),) + w


@lru_cache(maxsize=None)
def coproduct_dif_via_recursion(n: int) -> TensorElement:
    """Coproduct of a_n in the a_0-keeping algebra built purely from the
    operator recursion, starting at a_0 (x) a_0; must match the direct
    formula."""
    if n < 0:
        raise ValueError(f"generator index must be >= 0, got {n}")
    if n == 0:
        a0 = ((0, 1),)
        return TensorElement({(a0, a0): 1}, rank=2)
    out: dict = {}
    for (u, v), c in coproduct_dif_via_recursion(n - 1).items():
        k1 = (_word_op_a(u), _word_op_b(v))
        out[k1] = out.get(k1, 0) + c
        k2 = (_word_op_b(u), _word_op_c(v))
        out[k2] = out.get(k2, 0) + c
    return TensorElement(out, rank=2)
