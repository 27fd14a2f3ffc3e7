import json

import pytest

from hopfseries import diffeo, formats
from hopfseries.cli import run


class TestAntipode:
    def test_paper_table(self):
        code, doc = run(["antipode", "dif", "--method", "closed", "--gen", "3"])
        assert code == 0
        assert doc == "-a3 + 2 a1 a2 + 3 a2 a1 - 5 a1^3"

    def test_methods_agree(self):
        for n in (1, 2, 3, 4, 5):
            rec = run(["antipode", "dif", "--method", "recursive", "--gen", str(n)])
            clo = run(["antipode", "dif", "--method", "closed", "--gen", str(n)])
            assert rec == clo

    def test_inv(self):
        code, doc = run(["antipode", "inv", "--gen", "2"])
        assert (code, doc) == (0, "-b2 + b1^2")

    def test_inv_has_no_closed_form(self):
        code, doc = run(["antipode", "inv", "--method", "closed", "--gen", "2"])
        assert code == 2
        assert "--method" in doc


class TestCoproduct:
    def test_all_variants_run(self):
        for alg in ("dif", "inv", "alpha", "e", "gamma", "ttb", "bdif"):
            gen = "1" if alg == "ttb" else "2"
            code, doc = run(["coproduct", alg, "--gen", gen])
            assert code == 0 and doc

    def test_json_roundtrip(self):
        code, doc = run(["--format", "json", "coproduct", "dif", "--gen", "4"])
        assert code == 0
        assert formats.parse_tensor(json.loads(doc)) == diffeo.coproduct_generator(4)

    def test_bad_generator(self):
        code, doc = run(["coproduct", "dif", "--gen", "0"])
        assert code == 2 and "--gen" in doc


class TestSmallCommands:
    def test_lambda(self):
        assert run(["lambda", "--tuple", "1"]) == (0, "2")
        assert run(["lambda", "--tuple", "2,1,3"]) == (0, "46")

    def test_lambda_bad_tuple(self):
        code, doc = run(["lambda", "--tuple", "1,x"])
        assert code == 2 and "--tuple" in doc
        code, doc = run(["lambda", "--tuple", "0,1"])
        assert code == 2

    def test_qpoly_flags_and_query(self):
        a = run(["qpoly", "--m", "2", "--n", "1"])
        b = run(["qpoly", "Q[2,1]"])
        assert a == b == (0, "2 a2 + a1^2")

    def test_qpoly_missing_args(self):
        code, doc = run(["qpoly", "--m", "2"])
        assert code == 2 and "--n" in doc

    def test_bijection(self):
        code, doc = run(["bijection", "to-tree", "2,1,0"])
        assert (code, doc) == (0, "((L (L L)) L)")
        code, doc = run(["bijection", "to-tuple", "((L (L L)) L)"])
        assert (code, doc) == (0, "2,1,0")

    def test_bijection_bad_input(self):
        code, doc = run(["bijection", "to-tree", "2,2"])
        assert code == 2 and "argument" in doc
        code, doc = run(["bijection", "to-tuple", "(L"])
        assert code == 2

    def test_trees(self):
        code, doc = run(["trees", "--enumerate", "3"])
        assert code == 0 and len(doc.splitlines()) == 5
        code, doc = run(["--format", "json", "trees", "--enumerate", "4"])
        assert code == 0 and json.loads(doc)["count"] == 14


class TestSeries:
    def mk_input(self, tmp_path, payload):
        path = tmp_path / "series.json"
        path.write_text(json.dumps(payload))
        return str(path)

    def diffeo_obj(self, *coeffs):
        return {
            "kind": "diffeo",
            "order": len(coeffs),
            "algebra": {"type": "rational"},
            "coeffs": [str(c) for c in coeffs],
        }

    def test_compose(self, tmp_path):
        path = self.mk_input(
            tmp_path, [self.diffeo_obj(1, 0, 0, 0), self.diffeo_obj(1, 0, 0, 0)]
        )
        code, doc = run(["--format", "json", "series", "compose", "--input", path])
        assert code == 0
        assert json.loads(doc)["coeffs"] == ["2", "2", "1", "0"]

    def test_inverse_diffeo(self, tmp_path):
        path = self.mk_input(tmp_path, self.diffeo_obj(1, 0, 0, 0))
        code, doc = run(["--format", "json", "series", "inverse-diffeo", "--input", path])
        assert code == 0
        assert json.loads(doc)["coeffs"] == ["-1", "2", "-5", "14"]

    def test_mul_and_inv(self, tmp_path):
        inv_obj = {
            "kind": "invertible",
            "order": 2,
            "algebra": {"type": "rational"},
            "coeffs": ["1", "0"],
        }
        path = self.mk_input(tmp_path, inv_obj)
        code, doc = run(["--format", "json", "series", "inv", "--input", path])
        assert code == 0
        assert json.loads(doc)["coeffs"] == ["-1", "1"]
        path = self.mk_input(tmp_path, [inv_obj, json.loads(doc)])
        code, doc = run(["--format", "json", "series", "mul", "--input", path])
        assert json.loads(doc)["coeffs"] == ["0", "0"]

    def test_associator_matrix(self, tmp_path):
        def mat_series(c1):
            zero = [["0", "0"], ["0", "0"]]
            return {
                "kind": "diffeo",
                "order": 4,
                "algebra": {"type": "matrix", "dim": 2},
                "coeffs": [c1, zero, zero, zero],
            }

        e12 = [["0", "1"], ["0", "0"]]
        e21 = [["0", "0"], ["1", "0"]]
        e11 = [["1", "0"], ["0", "0"]]
        path = self.mk_input(tmp_path, [mat_series(e12), mat_series(e21), mat_series(e11)])
        code, doc = run(["--format", "json", "series", "associator", "--input", path])
        assert code == 0
        coeffs = json.loads(doc)["coeffs"]
        assert coeffs[2] == [["-1", "0"], ["0", "0"]]

    def test_text_output(self, tmp_path):
        path = self.mk_input(tmp_path, self.diffeo_obj(1, 0))
        code, doc = run(["series", "inverse-diffeo", "--input", path])
        assert (code, doc) == (0, "x + (-1) x^2 + (2) x^3")

    def test_missing_file(self, tmp_path):
        code, doc = run(["series", "inv", "--input", str(tmp_path / "missing.json")])
        assert code == 2 and "--input" in doc

    def test_wrong_arity(self, tmp_path):
        path = self.mk_input(tmp_path, self.diffeo_obj(1))
        code, doc = run(["series", "compose", "--input", path])
        assert code == 2 and "expected 2 series" in doc

    def test_malformed_json(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{not json")
        code, doc = run(["series", "inv", "--input", str(path)])
        assert code == 2 and "--input" in doc


class TestVerify:
    def test_suite_pass(self):
        code, doc = run(["verify", "--suite", "antipode-equivalence", "--max-degree", "6"])
        assert code == 0
        assert doc.endswith("suite antipode-equivalence: 6 checks, 0 failed")

    def test_json_format(self):
        code, doc = run(
            ["--format", "json", "verify", "--suite", "coaction-laws", "--max-degree", "4"]
        )
        assert code == 0
        data = json.loads(doc)
        assert data["failures"] == 0 and data["checks"] == 8

    def test_unknown_suite_lists_available(self):
        code, doc = run(["verify", "--suite", "nope", "--max-degree", "3"])
        assert code == 2
        assert "available" in doc and "hopf-axioms-dif" in doc

    def test_seed_is_reproducible(self):
        a = run(["verify", "--suite", "binomial-identity", "--max-degree", "3", "--seed", "5"])
        b = run(["verify", "--suite", "binomial-identity", "--max-degree", "3", "--seed", "5"])
        assert a == b


class TestDeterminism:
    def test_byte_identical_repeats(self):
        for argv in (
            ["antipode", "dif", "--method", "closed", "--gen", "5"],
            ["--format", "json", "coproduct", "dif", "--gen", "5"],
            ["trees", "--enumerate", "4"],
            ["qpoly", "Q[4,2]"],
        ):
            assert run(argv) == run(argv)

    def test_unknown_command_exits_2(self):
        code, _ = run(["frobnicate"])
        assert code == 2
