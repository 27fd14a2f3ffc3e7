"""Sparse exact arithmetic for free associative algebras and their tensor powers.

Words are tuples of letters; a letter is a pair ``(index, tag)`` with
``index >= 0`` and ``tag >= 1``.  The tag marks which copy of the algebra a
letter belongs to inside a free product; plain elements carry tag 1
throughout.  The degree of a word is the sum of its letter indices.

Coefficients are exact rationals: ``fractions.Fraction`` everywhere, with
plain ``int`` accepted interchangeably.  Zero coefficients are stripped
eagerly, so equality of elements is structural equality of their term maps.
All values are immutable after construction and every operation is a pure
function, which makes concurrent reads and memoisation safe.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Mapping

Letter = tuple[int, int]
WordKey = tuple[Letter, ...]

_SCALARS = (int, Fraction)


def letter(index: int, tag: int = 1) -> Letter:
    if index < 0:
        raise ValueError(f"letter index must be >= 0, got {index}")
    if tag < 1:
        raise ValueError(f"letter tag must be >= 1, got {tag}")
    return (index, tag)


def word(*indices: int, tag: int = 1) -> WordKey:
    """Word on the given generator indices, all letters sharing one tag."""
    return tuple(letter(i, tag) for i in indices)


def word_degree(w: WordKey) -> int:
    return sum(i for i, _ in w)


def word_sort_key(w: WordKey):
    """Canonical order: by degree, then length, then lexicographic letters."""
    return (word_degree(w), len(w), w)


def retag(w: WordKey, tag: int) -> WordKey:
    return tuple((i, tag) for i, _ in w)


class LinComb:
    """Finite linear combination of basis keys with rational coefficients.

    Subclasses fix the basis (words, commutative monomials, trees, forests,
    block words, or tensor products of those) by providing the key product
    ``_mul_key`` and a canonical ``_sort_key``.  The basis is multiplicative,
    so the bilinear product of two elements is induced by the key product.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping | None = None):
        clean = {}
        if terms:
            for k, v in terms.items():
                if v:
                    clean[k] = v
        self._terms = clean

    # -- subclass hooks -------------------------------------------------
    @staticmethod
    def _mul_key(a, b):
        raise NotImplementedError

    @staticmethod
    def _sort_key(key):
        return key

    def _make(self, terms):
        return type(self)(terms)

    def _check_compat(self, other) -> None:
        pass

    # -- container protocol ---------------------------------------------
    def items(self):
        return self._terms.items()

    def sorted_items(self):
        return sorted(self._terms.items(), key=lambda kv: self._sort_key(kv[0]))

    def coefficient(self, key) -> Fraction | int:
        return self._terms.get(key, 0)

    def support(self):
        return set(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return self._terms == other._terms and self._extra_state() == other._extra_state()

    def __hash__(self) -> int:
        return hash((type(self).__name__, self._extra_state(), frozenset(self._terms.items())))

    def _extra_state(self):
        return None

    def __repr__(self) -> str:
        if not self._terms:
            return f"{type(self).__name__}(0)"
        bits = ", ".join(f"{k!r}: {v}" for k, v in self.sorted_items())
        return f"{type(self).__name__}({bits})"

    # -- linear structure -------------------------------------------------
    def __add__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        self._check_compat(other)
        terms = dict(self._terms)
        for k, v in other._terms.items():
            terms[k] = terms.get(k, 0) + v
        return self._make(terms)

    def __radd__(self, other):
        if other == 0:
            return self
        return NotImplemented

    def __sub__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        self._check_compat(other)
        terms = dict(self._terms)
        for k, v in other._terms.items():
            terms[k] = terms.get(k, 0) - v
        return self._make(terms)

    def __neg__(self):
        return self._make({k: -v for k, v in self._terms.items()})

    def _scaled(self, c):
        if not c:
            return self._make({})
        return self._make({k: c * v for k, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, _SCALARS):
            return self._scaled(other)
        if type(other) is type(self):
            self._check_compat(other)
            terms: dict = {}
            for k1, c1 in self._terms.items():
                for k2, c2 in other._terms.items():
                    k = self._mul_key(k1, k2)
                    terms[k] = terms.get(k, 0) + c1 * c2
            return self._make(terms)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, _SCALARS):
            return self._scaled(other)
        return NotImplemented


def _concat(a: tuple, b: tuple) -> tuple:
    return a + b


class NCPoly(LinComb):
    """Element of a free associative algebra: words with rational coefficients."""

    __slots__ = ()

    _mul_key = staticmethod(_concat)
    _sort_key = staticmethod(word_sort_key)

    @classmethod
    def zero(cls) -> "NCPoly":
        return cls({})

    @classmethod
    def one(cls) -> "NCPoly":
        return cls({(): 1})

    @classmethod
    def scalar(cls, c) -> "NCPoly":
        return cls({(): c})

    @classmethod
    def monomial(cls, w: WordKey, coeff=1) -> "NCPoly":
        return cls({w: coeff})

    @classmethod
    def generator(cls, index: int, tag: int = 1) -> "NCPoly":
        return cls({(letter(index, tag),): 1})

    def degrees(self) -> list[int]:
        return sorted({word_degree(w) for w in self._terms})

    def degree(self) -> int | None:
        """Maximal degree of the support, or None for the zero element."""
        if not self._terms:
            return None
        return max(word_degree(w) for w in self._terms)

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def homogeneous_component(self, d: int) -> "NCPoly":
        return NCPoly({w: c for w, c in self._terms.items() if word_degree(w) == d})


class TensorElement(LinComb):
    """Rational combination of r-tuples of words: an element of the r-fold
    tensor power of the free algebra, with slot-wise concatenation product."""

    __slots__ = ("rank",)

    def __init__(self, terms: Mapping | None = None, rank: int | None = None):
        super().__init__(terms)
        if rank is None:
            if not self._terms:
                raise ValueError("rank is required for an empty tensor")
            rank = len(next(iter(self._terms)))
        if rank < 1:
            raise ValueError(f"tensor rank must be >= 1, got {rank}")
        for key in self._terms:
            if len(key) != rank:
                raise ValueError(f"tensor key {key!r} does not have rank {rank}")
        self.rank = rank

    @staticmethod
    def _mul_key(a, b):
        return tuple(wa + wb for wa, wb in zip(a, b))

    @staticmethod
    def _sort_key(key):
        return tuple(word_sort_key(w) for w in key)

    def _make(self, terms):
        return TensorElement(terms, rank=self.rank)

    def _check_compat(self, other) -> None:
        if self.rank != other.rank:
            raise ValueError(f"rank mismatch: {self.rank} != {other.rank}")

    def _extra_state(self):
        return self.rank

    @classmethod
    def unit(cls, rank: int) -> "TensorElement":
        return cls({((),) * rank: 1}, rank=rank)

    @classmethod
    def zero(cls, rank: int) -> "TensorElement":
        return cls({}, rank=rank)

    @classmethod
    def from_polys(cls, *polys: NCPoly) -> "TensorElement":
        """p1 (x) p2 (x) ... as a tensor, distributing over all terms."""
        rank = len(polys)
        acc: dict = {(): Fraction(1)}
        for p in polys:
            nxt: dict = {}
            for key, c in acc.items():
                for w, cw in p.items():
                    k = key + (w,)
                    nxt[k] = nxt.get(k, 0) + c * cw
            acc = nxt
        return cls(acc, rank=rank)

    def to_poly(self) -> NCPoly:
        if self.rank != 1:
            raise ValueError(f"cannot flatten a rank-{self.rank} tensor to a polynomial")
        return NCPoly({key[0]: c for key, c in self._terms.items()})

    def slot_poly(self, key, slot: int) -> NCPoly:
        return NCPoly.monomial(key[slot])

    def apply_in_slot(self, slot: int, f: Callable[[NCPoly], object]):
        """Apply a linear map to one slot, splicing its image in place.

        ``f`` receives the slot content as an NCPoly and may return an
        NCPoly (rank preserved), a TensorElement of rank k (rank grows by
        k - 1), or a scalar (slot removed).  Returns a scalar if no slots
        remain.
        """
        if not 0 <= slot < self.rank:
            raise ValueError(f"slot {slot} out of range for rank {self.rank}")
        out: dict = {}
        new_rank: int | None = None
        for key, c in self._terms.items():
            img = f(NCPoly.monomial(key[slot]))
            if isinstance(img, _SCALARS):
                pieces = [((), img)] if img else []
                k = 0
            elif isinstance(img, NCPoly):
                pieces = [((w,), cc) for w, cc in img.items()]
                k = 1
            elif isinstance(img, TensorElement):
                pieces = list(img.items())
                k = img.rank
            else:
                raise TypeError(f"slot image of unsupported type {type(img).__name__}")
            r = self.rank - 1 + k
            if new_rank is None:
                new_rank = r
            elif new_rank != r:
                raise ValueError("slot images do not have a uniform rank")
            for piece, cc in pieces:
                nk = key[:slot] + piece + key[slot + 1:]
                out[nk] = out.get(nk, 0) + c * cc
        if new_rank is None:
            new_rank = self.rank
        if new_rank == 0:
            return sum(out.values(), Fraction(0))
        return TensorElement(out, rank=new_rank)

    def multiply_slots(self, i: int, j: int) -> "TensorElement":
        """Concatenate slot j onto the end of slot i and drop slot j."""
        if i == j:
            raise ValueError("slots to merge must differ")
        out: dict = {}
        for key, c in self._terms.items():
            merged = key[i] + key[j]
            nk = tuple(
                merged if s == i else w
                for s, w in enumerate(key)
                if s != j
            )
            out[nk] = out.get(nk, 0) + c
        return TensorElement(out, rank=self.rank - 1)

    def swap_slots(self, i: int, j: int) -> "TensorElement":
        out: dict = {}
        for key, c in self._terms.items():
            lst = list(key)
            lst[i], lst[j] = lst[j], lst[i]
            nk = tuple(lst)
            out[nk] = out.get(nk, 0) + c
        return TensorElement(out, rank=self.rank)


def tensor_mul(s: TensorElement, t: TensorElement) -> TensorElement:
    """Slot-wise product in the tensor power algebra."""
    return s * t


class CommPoly(LinComb):
    """Commutative polynomial: monomials are sorted multisets of indices."""

    __slots__ = ()

    @staticmethod
    def _mul_key(a, b):
        return tuple(sorted(a + b))

    @staticmethod
    def _sort_key(key):
        return (sum(key), len(key), key)

    @classmethod
    def one(cls) -> "CommPoly":
        return cls({(): 1})


class CommTensor(LinComb):
    """Tensor power of the commutative polynomial ring."""

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
        return tuple(tuple(sorted(ma + mb)) for ma, mb in zip(a, b))

    @staticmethod
    def _sort_key(key):
        return tuple((sum(m), len(m), m) for m in key)

    def _make(self, terms):
        return CommTensor(terms, rank=self.rank)

    def _check_compat(self, other) -> None:
        if self.rank != other.rank:
            raise ValueError(f"rank mismatch: {self.rank} != {other.rank}")

    def _extra_state(self):
        return self.rank


def abelianize_word(w: WordKey) -> tuple[int, ...]:
    return tuple(sorted(i for i, _ in w))


def abelianize(p: NCPoly) -> CommPoly:
    """Algebra homomorphism onto the polynomial ring: letters commute."""
    out: dict = {}
    for w, c in p.items():
        m = abelianize_word(w)
        out[m] = out.get(m, 0) + c
    return CommPoly(out)


def abelianize_tensor(t: TensorElement) -> CommTensor:
    out: dict = {}
    for key, c in t.items():
        m = tuple(abelianize_word(w) for w in key)
        out[m] = out.get(m, 0) + c
    return CommTensor(out, rank=t.rank)


# -- free products over a tagged alphabet --------------------------------

def free_product_embed(t: TensorElement) -> NCPoly:
    """Embed a rank-2 tensor in the free product: a (x) b -> a^(1) b^(2)."""
    if t.rank != 2:
        raise ValueError(f"free product embedding expects rank 2, got {t.rank}")
    out: dict = {}
    for (w1, w2), c in t.items():
        w = retag(w1, 1) + retag(w2, 2)
        out[w] = out.get(w, 0) + c
    return NCPoly(out)


def free_product_project(p: NCPoly, rank: int) -> TensorElement:
    """Gather the letters of each word by tag, preserving within-tag order.

    This is the algebra homomorphism from the free product onto the tensor
    power; the result words carry the default tag.
    """
    out: dict = {}
    for w, c in p.items():
        slots: list[list[Letter]] = [[] for _ in range(rank)]
        for i, tag in w:
            if not 1 <= tag <= rank:
                raise ValueError(f"letter tag {tag} outside 1..{rank}")
            slots[tag - 1].append((i, 1))
        key = tuple(tuple(s) for s in slots)
        out[key] = out.get(key, 0) + c
    return TensorElement(out, rank=rank)


def substitute(p: NCPoly, image: Callable[[Letter], NCPoly]) -> NCPoly:
    """Algebra homomorphism determined by images of tagged generators."""
    out = NCPoly.zero()
    for w, c in p.items():
        acc = NCPoly.one()
        for lt in w:
            acc = acc * image(lt)
        out = out + acc._scaled(c)
    return out


def retag_poly(p: NCPoly, mapping: Mapping[int, int]) -> NCPoly:
    out: dict = {}
    for w, c in p.items():
        nw = tuple((i, mapping.get(t, t)) for i, t in w)
        out[nw] = out.get(nw, 0) + c
    return NCPoly(out)


def star_coassociativity_sides(
    p_star: NCPoly, star_generator: Callable[[int], NCPoly]
) -> tuple[NCPoly, NCPoly]:
    """Both triple expansions of a free-product coproduct value.

    ``p_star`` lives in the two-tagged free algebra; the left expansion sends
    tag-1 letters through the lift again (tags 1,2) and moves tag-2 letters
    to tag 3, the right expansion is the mirror image.  Equality of the two
    results is coassociativity of the lift.
    """

    def left_image(lt: Letter) -> NCPoly:
        i, t = lt
        if t == 1:
            return star_generator(i)
        return NCPoly.generator(i, 3)

    def right_image(lt: Letter) -> NCPoly:
        i, t = lt
        if t == 1:
            return NCPoly.generator(i, 1)
        return retag_poly(star_generator(i), {1: 2, 2: 3})

    return substitute(p_star, left_image), substitute(p_star, right_image)


def poly_map(p: NCPoly, image: Callable[[Letter], object], unit, zero):
    """Linear-multiplicative extension of generator images to all of ``p``.

    Works for any target whose values support ``+`` and ``*`` and scalar
    multiplication by rationals (other LinComb classes, Fraction, matrices).
    """
    out = zero
    for w, c in p.items():
        acc = unit
        for lt in w:
            acc = acc * image(lt)
        out = out + c * acc
    return out


def poly_antimap(p: NCPoly, image: Callable[[Letter], object], unit, zero):
    """Anti-homomorphic extension: images are multiplied in reversed order."""
    out = zero
    for w, c in p.items():
        acc = unit
        for lt in reversed(w):
            acc = acc * image(lt)
        out = out + c * acc
    return out
