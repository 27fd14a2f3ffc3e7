import pytest

from hopfseries import diffeo, invertible, trees
from hopfseries.combinat import catalan, positive_compositions
from hopfseries.freealg import NCPoly, word
from hopfseries.trees import (
    LEAF,
    ForestPoly,
    ForestTensor,
    TreePoly,
    TreeTensor,
    Y,
    coaction_alpha_tree,
    coproduct_alpha_tree,
    coproduct_e,
    coproduct_e_tree,
    coproduct_gamma,
    coproduct_gamma_tree,
    omega_embed,
    omega_embed_b,
    over,
    parse_tree,
    right_brush,
    t_sum,
    t_sum_forest,
    tree_q,
    tree_to_string,
    trees_of_size,
    under,
    v_graft,
    vee,
)


class TestGrafting:
    def test_over_under_on_y(self):
        assert tree_to_string(over(Y, Y)) == "((L L) L)"
        assert tree_to_string(under(Y, Y)) == "(L (L L))"

    def test_unit_laws(self):
        for n in range(4):
            for t in trees_of_size(n):
                assert over(LEAF, t) == t == over(t, LEAF)
                assert under(LEAF, t) == t == under(t, LEAF)

    def test_associativity(self):
        small = [t for n in range(3) for t in trees_of_size(n)]
        for a in small:
            for b in small:
                for c in small:
                    assert over(a, over(b, c)) == over(over(a, b), c)
                    assert under(a, under(b, c)) == under(under(a, b), c)

    def test_size_additive(self):
        a = trees_of_size(2)[0]
        b = trees_of_size(3)[1]
        assert over(a, b).size == 5 and under(a, b).size == 5

    def test_vee(self):
        assert vee(LEAF, LEAF) == Y
        assert tree_to_string(v_graft(Y)) == "(L (L L))"
        for n in range(1, 5):
            for t in trees_of_size(n):
                assert vee(t.left, t.right) == t
                assert vee(t.left, t.right).size == t.left.size + t.right.size + 1


class TestEnumeration:
    def test_counts(self):
        assert [len(trees_of_size(n)) for n in range(8)] == [catalan(n) for n in range(8)]
        assert len(trees_of_size(0)) == 1
        assert len(trees_of_size(3)) == 5
        assert len(trees_of_size(5)) == 42

    def test_serialization_roundtrip(self):
        for n in range(5):
            for t in trees_of_size(n):
                assert parse_tree(tree_to_string(t)) == t

    def test_parser_ignores_whitespace(self):
        assert parse_tree(" ( L  ( L L ) ) ") == v_graft(Y)

    def test_parser_errors(self):
        for bad in ["", "(L", "(L L) L", "x"]:
            with pytest.raises(ValueError):
                parse_tree(bad)


class TestAlphaStructure:
    def test_base_cases(self):
        assert coproduct_alpha_tree(LEAF) == TreeTensor.unit(2)
        assert coproduct_alpha_tree(Y) == TreeTensor(
            {(Y, LEAF): 1, (LEAF, Y): 1}, rank=2
        )
        assert coaction_alpha_tree(Y) == TreeTensor({(Y, LEAF): 1}, rank=2)

    def test_coassociativity_small(self):
        for n in range(6):
            for t in trees_of_size(n):
                d = coproduct_alpha_tree(t)
                assert d.apply_in_slot(0, coproduct_alpha_tree) == d.apply_in_slot(
                    1, coproduct_alpha_tree
                )

    def test_coaction_law_small(self):
        for n in range(6):
            for t in trees_of_size(n):
                ca = coaction_alpha_tree(t)
                assert ca.apply_in_slot(0, coaction_alpha_tree) == ca.apply_in_slot(
                    1, coproduct_alpha_tree
                )

    def test_embedding_identities(self):
        for n in range(7):
            lhs = sum(
                (coproduct_alpha_tree(t) for t in trees_of_size(n)),
                TreeTensor({}, rank=2),
            )
            rhs = sum(
                (TreeTensor.of(t_sum(k), tree_q(n - k, k)) for k in range(n + 1)),
                TreeTensor({}, rank=2),
            )
            assert lhs == rhs
            lhs = sum(
                (coaction_alpha_tree(t) for t in trees_of_size(n)),
                TreeTensor({}, rank=2),
            )
            rhs = sum(
                (TreeTensor.of(t_sum(k), tree_q(n - k, k - 1)) for k in range(n + 1)),
                TreeTensor({}, rank=2),
            )
            assert lhs == rhs

    def test_sum_recurrence(self):
        for n in range(6):
            lhs = t_sum(n + 1)
            rhs = TreePoly.zero()
            for m in range(n + 1):
                rhs = rhs + t_sum(n - m) * TreePoly(
                    {v_graft(t): 1 for t in trees_of_size(m)}
                )
            assert lhs == rhs


class TestPropagator:
    def test_y(self):
        want = ForestTensor({((), (Y,)): 1, ((Y,), ()): 1}, rank=2)
        assert coproduct_e_tree(Y) == want
        assert coproduct_gamma_tree(Y) == want

    def test_matches_series_coproduct(self):
        for n in range(7):
            te = sum(
                (coproduct_e_tree(t) for t in trees_of_size(n)), ForestTensor({}, rank=2)
            )
            tg = sum(
                (coproduct_gamma_tree(t) for t in trees_of_size(n)), ForestTensor({}, rank=2)
            )
            want = ForestTensor({}, rank=2)
            for k in range(n + 1):
                for t1 in trees_of_size(k):
                    for t2 in trees_of_size(n - k):
                        key = ((t1,) if t1.size else (), (t2,) if t2.size else ())
                        want = want + ForestTensor({key: 1}, rank=2)
            assert te == want
            assert tg == want

    def test_multiplicative(self):
        f = ForestPoly({(Y, v_graft(Y)): 1})
        assert coproduct_e(f) == coproduct_e_tree(Y) * coproduct_e_tree(v_graft(Y))
        assert coproduct_gamma(f) == coproduct_gamma_tree(Y) * coproduct_gamma_tree(v_graft(Y))

    def test_coassociative_small(self):
        for cop in (coproduct_e_tree, coproduct_gamma_tree):
            def ext(f, cop=cop):
                acc = ForestTensor.unit(2)
                for u in f:
                    acc = acc * cop(u)
                return acc

            for n in range(1, 5):
                for t in trees_of_size(n):
                    d = cop(t)
                    assert d.apply_in_slot(0, ext) == d.apply_in_slot(1, ext)


class TestEmbeddings:
    def test_generators(self):
        assert omega_embed(NCPoly.generator(1)) == TreePoly({Y: 1})
        assert omega_embed(NCPoly.generator(2)) == t_sum(2)
        assert len(t_sum(2)) == 2

    def test_coalgebra_homomorphism(self):
        # coproduct commutes with the embedding on generators
        for n in range(1, 6):
            lhs = trees.coproduct_alpha(omega_embed(NCPoly.generator(n)))
            rhs = TreeTensor({}, rank=2)
            for (wl, wr), c in diffeo.coproduct_generator(n).items():
                rhs = rhs + c * TreeTensor.of(
                    omega_embed(NCPoly.monomial(wl)), omega_embed(NCPoly.monomial(wr))
                )
            assert lhs == rhs

    def test_b_embedding_coproduct(self):
        for n in range(1, 6):
            fe = coproduct_e(omega_embed_b(NCPoly.generator(n)))
            fg = coproduct_gamma(omega_embed_b(NCPoly.generator(n)))
            want = ForestTensor({}, rank=2)
            for (wl, wr), c in invertible.coproduct_generator(n).items():
                left = omega_embed_b(NCPoly.monomial(wl))
                right = omega_embed_b(NCPoly.monomial(wr))
                for lf, cl in left.items():
                    for rf, cr in right.items():
                        want = want + ForestTensor({(lf, rf): c * cl * cr}, rank=2)
            assert fe == want
            assert fg == want

    def test_right_brush_shape(self):
        assert right_brush(1) == Y
        assert tree_to_string(right_brush(3)) == "(L (L (L L)))"

    def test_injectivity_witness(self):
        for total in range(1, 7):
            for parts in range(1, total + 1):
                for comp in positive_compositions(total, parts):
                    brush = LEAF
                    for i in comp:
                        brush = over(brush, right_brush(i))
                    image = omega_embed(NCPoly.monomial(word(*comp)))
                    assert image.coefficient(brush) == 1
