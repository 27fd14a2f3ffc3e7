"""Planar binary trees and the tree Hopf algebras extending the series ones.

A tree is a leaf or a pair of trees; its size is the number of internal
nodes, so there are Catalan(n) trees of size n.  Three associative products
appear:

* ``over(t, s)``  grafts the root of t onto the left-most leaf of s,
* ``under(t, s)`` grafts the root of s onto the right-most leaf of t,
* forests (words of trees) concatenate.

The single-tree span with the over product carries the coproduct/coaction
pair defined by structural recursion on t = l v r (``vee`` grafts two trees
on a new root).  The free algebra on trees carries two further coproducts,
dual to under and over; all three restrict to the series Hopf algebras along
t_n = sum of all trees of size n.

Text form: ``L`` is a leaf, ``(l r)`` an internal node; whitespace between
tokens is ignored when parsing.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Callable, Iterator, Mapping

from .combinat import compositions
from .freealg import LinComb, NCPoly, poly_map


class Tree:
    """Immutable planar binary tree with precomputed size and hash."""

    __slots__ = ("left", "right", "size", "_hash")

    def __init__(self, left: "Tree | None", right: "Tree | None"):
        self.left = left
        self.right = right
        if left is None:
            self.size = 0
            self._hash = hash(("leaf",))
        else:
            self.size = left.size + right.size + 1
            self._hash = hash((left._hash, right._hash))

    def is_leaf(self) -> bool:
        return self.left is None

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if not isinstance(other, Tree):
            return NotImplemented
        if self._hash != other._hash or self.size != other.size:
            return False
        if self.left is None:
            return other.left is None
        if other.left is None:
            return False
        return self.left == other.left and self.right == other.right

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Tree[{tree_to_string(self)}]"


LEAF = Tree(None, None)
Y = Tree(LEAF, LEAF)


def node(left: Tree, right: Tree) -> Tree:
    return Tree(left, right)


def vee(left: Tree, right: Tree) -> Tree:
    """Graft two trees on a new root; every non-leaf tree splits uniquely."""
    return Tree(left, right)


def v_graft(t: Tree) -> Tree:
    """The special grafting with a leaf on the left."""
    return Tree(LEAF, t)


def over(t: Tree, s: Tree) -> Tree:
    """t over s: root of t replaces the left-most leaf of s."""
    if s.is_leaf():
        return t
    return Tree(over(t, s.left), s.right)


def under(t: Tree, s: Tree) -> Tree:
    """t under s: root of s replaces the right-most leaf of t."""
    if t.is_leaf():
        return s
    return Tree(t.left, under(t.right, s))


def tree_to_string(t: Tree) -> str:
    if t.is_leaf():
        return "L"
    return f"({tree_to_string(t.left)} {tree_to_string(t.right)})"


def parse_tree(text: str) -> Tree:
    pos = 0
    s = text

    def skip_ws() -> None:
        nonlocal pos
        while pos < len(s) and s[pos].isspace():
            pos += 1

    def parse() -> Tree:
        nonlocal pos
        skip_ws()
        if pos >= len(s):
            raise ValueError(f"unexpected end of tree text {text!r}")
        ch = s[pos]
        if ch == "L":
            pos += 1
            return LEAF
        if ch == "(":
            pos += 1
            left = parse()
            right = parse()
            skip_ws()
            if pos >= len(s) or s[pos] != ")":
                raise ValueError(f"missing ')' in tree text {text!r}")
            pos += 1
            return Tree(left, right)
        raise ValueError(f"unexpected character {ch!r} in tree text {text!r}")

    out = parse()
    skip_ws()
    if pos != len(s):
        raise ValueError(f"trailing input in tree text {text!r}")
    return out


@lru_cache(maxsize=None)
def trees_of_size(n: int) -> tuple[Tree, ...]:
    """All planar binary trees with n internal nodes, deterministic order."""
    if n < 0:
        raise ValueError("size must be >= 0")
    if n == 0:
        return (LEAF,)
    out = []
    for k in range(n):
        for l in trees_of_size(k):
            for r in trees_of_size(n - 1 - k):
                out.append(Tree(l, r))
    return tuple(out)


def tree_sort_key(t: Tree):
    return (t.size, tree_to_string(t))


def forest_sort_key(f: tuple[Tree, ...]):
    return (sum(t.size for t in f), len(f), tuple(tree_to_string(t) for t in f))


class TreePoly(LinComb):
    """Span of single trees, multiplied by the over product."""

    __slots__ = ()

    _mul_key = staticmethod(over)
    _sort_key = staticmethod(tree_sort_key)

    @classmethod
    def zero(cls) -> "TreePoly":
        return cls({})

    @classmethod
    def one(cls) -> "TreePoly":
        return cls({LEAF: 1})

    @classmethod
    def of(cls, t: Tree, coeff=1) -> "TreePoly":
        return cls({t: coeff})


class TreeTensor(LinComb):
    """Tensor power of the single-tree algebra, slot-wise over product."""

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
        return tuple(over(ta, tb) for ta, tb in zip(a, b))

    @staticmethod
    def _sort_key(key):
        return tuple(tree_sort_key(t) for t in key)

    def _make(self, terms):
        return TreeTensor(terms, rank=self.rank)

    def _check_compat(self, other) -> None:
        if self.rank != other.rank:
            raise ValueError(f"rank mismatch: {self.rank} != {other.rank}")

    def _extra_state(self):
        return self.rank

    @classmethod
    def unit(cls, rank: int) -> "TreeTensor":
        return cls({(LEAF,) * rank: 1}, rank=rank)

    @classmethod
    def of(cls, *polys: TreePoly) -> "TreeTensor":
        acc: dict = {(): 1}
        for p in polys:
            nxt: dict = {}
            for key, c in acc.items():
                for t, ct in p.items():
                    k = key + (t,)
                    nxt[k] = nxt.get(k, 0) + c * ct
            acc = nxt
        return cls(acc, rank=len(polys))

    def apply_in_slot(self, slot: int, f: Callable[[Tree], "TreeTensor | TreePoly"]) -> "TreeTensor":
        out: dict = {}
        new_rank = None
        for key, c in self._terms.items():
            img = f(key[slot])
            if isinstance(img, TreePoly):
                pieces = [((t,), cc) for t, cc in img.items()]
                k = 1
            else:
                pieces = list(img.items())
                k = img.rank
            r = self.rank - 1 + k
            if new_rank is None:
                new_rank = r
            elif new_rank != r:
                raise ValueError("slot images do not have a uniform rank")
            for piece, cc in pieces:
                nk = key[:slot] + piece + key[slot + 1:]
                out[nk] = out.get(nk, 0) + c * cc
        return TreeTensor(out, rank=self.rank if new_rank is None else new_rank)


class ForestPoly(LinComb):
    """Free algebra on non-leaf trees: forests multiply by concatenation and
    the leaf is identified with the unit (the empty forest)."""

    __slots__ = ()

    @staticmethod
    def _mul_key(a, b):
        return a + b

    _sort_key = staticmethod(forest_sort_key)

    @classmethod
    def zero(cls) -> "ForestPoly":
        return cls({})

    @classmethod
    def one(cls) -> "ForestPoly":
        return cls({(): 1})

    @classmethod
    def of_tree(cls, t: Tree, coeff=1) -> "ForestPoly":
        return cls({(() if t.is_leaf() else (t,)): coeff})


class ForestTensor(LinComb):
    """Tensor power of the forest algebra, slot-wise concatenation."""

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
        return tuple(fa + fb for fa, fb in zip(a, b))

    @staticmethod
    def _sort_key(key):
        return tuple(forest_sort_key(f) for f in key)

    def _make(self, terms):
        return ForestTensor(terms, rank=self.rank)

    def _check_compat(self, other) -> None:
        if self.rank != other.rank:
            raise ValueError(f"rank mismatch: {self.rank} != {other.rank}")

    def _extra_state(self):
        return self.rank

    @classmethod
    def unit(cls, rank: int) -> "ForestTensor":
        return cls({((),) * rank: 1}, rank=rank)

    def apply_in_slot(self, slot: int, f: Callable[[tuple], "ForestTensor"]) -> "ForestTensor":
        out: dict = {}
        new_rank = None
        for key, c in self._terms.items():
            img = f(key[slot])
            k = img.rank
            r = self.rank - 1 + k
            if new_rank is None:
                new_rank = r
            elif new_rank != r:
                raise ValueError("slot images do not have a uniform rank")
            for piece, cc in img.items():
                nk = key[:slot] + piece + key[slot + 1:]
                out[nk] = out.get(nk, 0) + c * cc
        return ForestTensor(out, rank=self.rank if new_rank is None else new_rank)


def t_sum(n: int) -> TreePoly:
    """Sum of all trees of one size: the generator images of the embeddings."""
    return TreePoly({t: 1 for t in trees_of_size(n)})


def t_sum_forest(n: int) -> ForestPoly:
    if n == 0:
        return ForestPoly.one()
    return ForestPoly({(t,): 1 for t in trees_of_size(n)})


@lru_cache(maxsize=None)
def tree_q(m: int, n: int) -> TreePoly:
    """The composition polynomials with t-sums substituted for the
    generators and the over product for multiplication."""
    if n < -1:
        raise ValueError(f"power index must be >= -1, got {n}")
    if n == -1:
        return TreePoly.one() if m == 0 else TreePoly.zero()
    acc = TreePoly.zero()
    for comp in compositions(m, n + 1):
        prod = TreePoly.one()
        for j in comp:
            if j:
                prod = prod * t_sum(j)
        acc = acc + prod
    return acc


# -- coproduct and coaction on single trees ----------------------------------

@lru_cache(maxsize=None)
def coproduct_alpha_tree(t: Tree) -> TreeTensor:
    if t.is_leaf():
        return TreeTensor.unit(2)
    if t.left.is_leaf():
        return TreeTensor({(LEAF, t): 1}, rank=2) + coaction_alpha_tree(t)
    return coproduct_alpha_tree(t.left) * coproduct_alpha_tree(v_graft(t.right))


@lru_cache(maxsize=None)
def coaction_alpha_tree(t: Tree) -> TreeTensor:
    if t.is_leaf():
        return TreeTensor.unit(2)
    if t.left.is_leaf():
        inner = coaction_alpha_tree(t.right)
        return TreeTensor({(v_graft(u), v): c for (u, v), c in inner.items()}, rank=2)
    return coproduct_alpha_tree(t.left) * coaction_alpha_tree(v_graft(t.right))


def coproduct_alpha(x: TreePoly) -> TreeTensor:
    out = TreeTensor({}, rank=2)
    for t, c in x.items():
        out = out + c * coproduct_alpha_tree(t)
    return out


def coaction_alpha(x: TreePoly) -> TreeTensor:
    out = TreeTensor({}, rank=2)
    for t, c in x.items():
        out = out + c * coaction_alpha_tree(t)
    return out


# -- propagator coproducts on the free algebra on trees ----------------------

@lru_cache(maxsize=None)
def coproduct_e_tree(t: Tree) -> ForestTensor:
    """Dual of the under product on a single tree, by the recursion
    D(l v r) = 1 (x) t + sum (l v r<1>) (x) r<2>."""
    if t.is_leaf():
        return ForestTensor.unit(2)
    terms: dict = {((), (t,)): 1}
    for (f1, f2), c in coproduct_e_tree(t.right).items():
        s1 = f1[0] if f1 else LEAF
        key = ((vee(t.left, s1),), f2)
        terms[key] = terms.get(key, 0) + c
    return ForestTensor(terms, rank=2)


@lru_cache(maxsize=None)
def coproduct_gamma_tree(t: Tree) -> ForestTensor:
    """Dual of the over product on a single tree, the mirror recursion
    D(l v r) = t (x) 1 + sum l<1> (x) (l<2> v r)."""
    if t.is_leaf():
        return ForestTensor.unit(2)
    terms: dict = {((t,), ()): 1}
    for (f1, f2), c in coproduct_gamma_tree(t.left).items():
        s2 = f2[0] if f2 else LEAF
        key = (f1, (vee(s2, t.right),))
        terms[key] = terms.get(key, 0) + c
    return ForestTensor(terms, rank=2)


def _forest_extension(tree_map: Callable[[Tree], ForestTensor]) -> Callable[[ForestPoly], ForestTensor]:
    def extended(x: ForestPoly) -> ForestTensor:
        out = ForestTensor({}, rank=2)
        for forest, c in x.items():
            acc = ForestTensor.unit(2)
            for t in forest:
                acc = acc * tree_map(t)
            out = out + c * acc
        return out

    return extended


coproduct_e = _forest_extension(coproduct_e_tree)
coproduct_gamma = _forest_extension(coproduct_gamma_tree)


# -- embeddings of the series Hopf algebras ----------------------------------

def omega_embed(p: NCPoly) -> TreePoly:
    """a_n -> t_n, extended multiplicatively with the over product."""

    def image(lt) -> TreePoly:
        i, tag = lt
        if i < 1 or tag != 1:
            raise ValueError(f"not a generator letter: {lt}")
        return t_sum(i)

    return poly_map(p, image, TreePoly.one(), TreePoly.zero())


def omega_embed_b(p: NCPoly) -> ForestPoly:
    """b_n -> t_n, landing in the free algebra on trees (forests)."""

    def image(lt) -> ForestPoly:
        i, tag = lt
        if i < 1 or tag != 1:
            raise ValueError(f"not a generator letter: {lt}")
        return t_sum_forest(i)

    return poly_map(p, image, ForestPoly.one(), ForestPoly.zero())


def right_brush(n: int) -> Tree:
    """The tree whose internal nodes hang along the right-most path."""
    if n < 1:
        raise ValueError("the right brush needs size >= 1")
    t = Y
    for _ in range(n - 1):
        t = v_graft(t)
    return t
