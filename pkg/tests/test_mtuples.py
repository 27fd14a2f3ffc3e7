import pytest

from hopfseries.combinat import catalan
from hopfseries.mtuples import decompose, enumerate_mtuples, is_mtuple, to_tree, to_tuple
from hopfseries.trees import Y, over, trees_of_size, under


class TestEnumeration:
    def test_base(self):
        assert enumerate_mtuples(1) == [(1,)]
        assert enumerate_mtuples(2) == [(1, 1), (2, 0)]

    def test_counts(self):
        for k in range(1, 13):
            assert len(enumerate_mtuples(k)) == catalan(k)

    def test_all_valid(self):
        for k in range(1, 8):
            for m in enumerate_mtuples(k):
                assert is_mtuple(m)

    def test_validity_predicate(self):
        assert is_mtuple((2, 1, 0))
        assert not is_mtuple((0, 2, 1))
        assert not is_mtuple((1, 1, 1, 0))
        assert not is_mtuple(())


class TestDecompose:
    def test_examples(self):
        assert decompose((1, 1)) == 1
        assert decompose((2, 0)) is None
        assert decompose((4, 0, 1, 0, 0, 2, 1, 0)) == 5

    def test_rejects_invalid(self):
        with pytest.raises(ValueError, match="tuple"):
            decompose((0, 2))

    def test_split_parts_are_valid(self):
        for k in range(1, 9):
            for m in enumerate_mtuples(k):
                l = decompose(m)
                if l is not None:
                    assert is_mtuple(m[:l]) and is_mtuple(m[l:])
                else:
                    # indecomposable: either the base tuple or the peeling case
                    assert m == (1,) or (m[-1] == 0 and m[0] > 1)


class TestBijection:
    def test_base(self):
        assert to_tree((1,)) == Y
        assert to_tuple(Y) == (1,)

    def test_worked_examples(self):
        assert to_tree((2, 1, 0)) == over(under(Y, Y), Y)
        assert to_tuple(over(under(Y, Y), Y)) == (2, 1, 0)

    def test_paper_display(self):
        # (4,0,1,0,0,2,1,0) splits into (4,0,1,0,0) and (2,1,0); the image is
        # [((Y/Y)\Y)/Y/Y] \ [(Y\Y)/Y]
        left = over(over(under(over(Y, Y), Y), Y), Y)
        right = over(under(Y, Y), Y)
        assert to_tree((4, 0, 1, 0, 0)) == left
        assert to_tree((2, 1, 0)) == right
        assert to_tree((4, 0, 1, 0, 0, 2, 1, 0)) == under(left, right)

    def test_roundtrip_tuples(self):
        for k in range(1, 11):
            for m in enumerate_mtuples(k):
                t = to_tree(m)
                assert t.size == k
                assert to_tuple(t) == m

    def test_roundtrip_trees(self):
        for k in range(1, 11):
            images = {to_tree(m) for m in enumerate_mtuples(k)}
            assert images == set(trees_of_size(k))

    def test_rejects_leaf(self):
        from hopfseries.trees import LEAF

        with pytest.raises(ValueError, match="unit"):
            to_tuple(LEAF)

    def test_rejects_invalid_tuple(self):
        with pytest.raises(ValueError, match="tuple"):
            to_tree((2, 2))
