"""Catalan tuples and their bijection with planar binary trees.

A valid k-tuple (m_1, ..., m_k) has non-negative entries, total sum k, and
partial sums m_1 + ... + m_h >= h for h < k.  These tuples index the
closed-form antipode weights; there are Catalan(k) of them, and the maps
``to_tree`` / ``to_tuple`` realize the bijection with trees of size k.
"""

from __future__ import annotations

from .trees import LEAF, Tree, Y, over, under


def is_mtuple(m: tuple[int, ...]) -> bool:
    k = len(m)
    if k < 1 or any(v < 0 for v in m):
        return False
    total = 0
    for h, v in enumerate(m, start=1):
        total += v
        if h <= k - 1 and total < h:
            return False
    return total == k


def enumerate_mtuples(k: int) -> list[tuple[int, ...]]:
    """All valid k-tuples in lexicographic order; depth-first generation with
    partial-sum pruning keeps the Catalan-sized search exact."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    out: list[tuple[int, ...]] = []

    def rec(prefix: tuple[int, ...], total: int) -> None:
        h = len(prefix)
        if h == k:
            if total == k:
                out.append(prefix)
            return
        if h == k - 1:
            v = k - total
            rec(prefix + (v,), k)
            return
        start = max(0, h + 1 - total)
        for v in range(start, k - total + 1):
            rec(prefix + (v,), total + v)

    rec((), 0)
    return out


def decompose(m: tuple[int, ...]) -> int | None:
    """Least l < k such that the prefix (m_1..m_l) is itself a valid tuple,
    or None when the tuple is indecomposable.

    Inside a valid tuple the prefix condition reduces to the prefix sum
    hitting l exactly; indecomposable tuples end in 0 and start above 1.
    """
    if not is_mtuple(m):
        raise ValueError(f"not a valid tuple: {m}")
    total = 0
    for l, v in enumerate(m[:-1], start=1):
        total += v
        if total == l:
            return l
    return None


def to_tree(m: tuple[int, ...]) -> Tree:
    """The recursive bijection onto trees: the split case maps to the under
    product, the indecomposable case peels one over-grafted node."""
    m = tuple(m)
    if not is_mtuple(m):
        raise ValueError(f"not a valid tuple: {m}")
    if m == (1,):
        return Y
    l = decompose(m)
    if l is not None:
        return under(to_tree(m[:l]), to_tree(m[l:]))
    return over(to_tree((m[0] - 1,) + m[1:-1]), Y)


def to_tuple(t: Tree) -> tuple[int, ...]:
    """Inverse of ``to_tree``; exactly one of the three cases applies."""
    if t.is_leaf():
        raise ValueError("the unit tree has no tuple")
    if t == Y:
        return (1,)
    if not t.right.is_leaf():
        return to_tuple(Tree(t.left, LEAF)) + to_tuple(t.right)
    m = to_tuple(t.left)
    return (m[0] + 1,) + m[1:] + (0,)
