import json
from fractions import Fraction

from hopfseries import diffeo, formats, invertible
from hopfseries.doubletensor import coproduct_block
from hopfseries.freealg import NCPoly, TensorElement, word
from hopfseries.series import Matrix, MatrixAlgebra, RATIONALS, TruncatedSeries
from hopfseries.trees import coproduct_alpha_tree, Y


class TestText:
    def test_canonical_antipode_form(self):
        assert formats.ncpoly_text(diffeo.antipode_recursive(3)) == (
            "-a3 + 2 a1 a2 + 3 a2 a1 - 5 a1^3"
        )
        assert formats.ncpoly_text(diffeo.antipode_recursive(4)) == (
            "-a4 + 2 a1 a3 + 3 a2^2 + 4 a3 a1"
            " - 5 a1^2 a2 - 7 a1 a2 a1 - 9 a2 a1^2 + 14 a1^4"
        )

    def test_units_and_scalars(self):
        assert formats.ncpoly_text(NCPoly.zero()) == "0"
        assert formats.ncpoly_text(NCPoly.one()) == "1"
        assert formats.ncpoly_text(NCPoly.scalar(Fraction(-3, 2))) == "-3/2"
        assert formats.ncpoly_text(NCPoly.generator(1) * -1) == "-a1"

    def test_power_compression(self):
        p = NCPoly.monomial(word(1, 1, 2, 1))
        assert formats.ncpoly_text(p) == "a1^2 a2 a1"

    def test_tagged_letters(self):
        p = NCPoly.monomial(((1, 1), (2, 2)))
        assert formats.ncpoly_text(p) == "a1 a2(2)"

    def test_symbol_choice(self):
        assert formats.ncpoly_text(invertible.antipode_generator(2), "b") == "-b2 + b1^2"

    def test_tensor(self):
        t = diffeo.coproduct_generator(2)
        assert formats.tensor_text(t) == "1 (x) a2 + 2 a1 (x) a1 + a2 (x) 1"

    def test_tensor_labels(self):
        t = invertible.coaction_generator(2)
        assert formats.tensor_text(t, ("b", "a")) == "b1 (x) a1 + b2 (x) 1"

    def test_tree_tensor(self):
        assert formats.tree_tensor_text(coproduct_alpha_tree(Y)) == (
            "L (x) (L L) + (L L) (x) L"
        )

    def test_block_tensor(self):
        assert formats.block_tensor_text(coproduct_block(2)) == (
            "[1] (x) [2] + [2] (x) [1,1]"
        )


class TestJson:
    def test_ncpoly_shape(self):
        p = NCPoly.monomial(((3, 1),), -1)
        doc = formats.ncpoly_json(p)
        assert doc == {"rank": 1, "terms": [{"word": [[3, 1]], "coeff": "-1"}]}

    def test_ncpoly_roundtrip(self):
        for n in range(1, 6):
            p = diffeo.antipode_recursive(n)
            assert formats.parse_ncpoly(json.loads(json.dumps(formats.ncpoly_json(p)))) == p

    def test_fraction_coeffs(self):
        p = NCPoly.monomial(word(1), Fraction(2, 3))
        doc = formats.ncpoly_json(p)
        assert doc["terms"][0]["coeff"] == "2/3"
        assert formats.parse_ncpoly(doc) == p

    def test_tensor_roundtrip(self):
        for n in range(1, 6):
            t = diffeo.coproduct_generator(n)
            assert formats.parse_tensor(json.loads(json.dumps(formats.tensor_json(t)))) == t

    def test_tensor_labels_emitted(self):
        t = invertible.coaction_generator(2)
        doc = formats.tensor_json(t, ("b", "a"))
        assert doc["labels"] == ["b", "a"]

    def test_series_roundtrip_rational(self):
        f = TruncatedSeries("diffeo", 3, RATIONALS, [Fraction(1, 2), Fraction(-2), Fraction(0)])
        doc = json.loads(json.dumps(formats.series_json(f)))
        assert formats.parse_series(doc) == f
        assert doc["coeffs"] == ["1/2", "-2", "0"]

    def test_series_roundtrip_matrix(self):
        M = MatrixAlgebra(2)
        f = TruncatedSeries(
            "invertible", 2, M, [Matrix.elementary(2, 1, 2), Matrix.identity(2)]
        )
        doc = json.loads(json.dumps(formats.series_json(f)))
        assert doc["algebra"] == {"type": "matrix", "dim": 2}
        assert formats.parse_series(doc) == f

    def test_deterministic_dump(self):
        t = diffeo.coproduct_generator(4)
        assert formats.dumps(formats.tensor_json(t)) == formats.dumps(formats.tensor_json(t))
