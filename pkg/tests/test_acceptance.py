"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest -s tests/test_acceptance.py`` to see the per-criterion
lines; everything is exact arithmetic, so the only tolerances are the stated
runtime ceilings.
"""

import time
from contextlib import contextmanager
from fractions import Fraction

from hopfseries import diffeo, invertible, series, suites, trees
from hopfseries.cli import run
from hopfseries.combinat import catalan, positive_compositions
from hopfseries.freealg import (
    NCPoly,
    TensorElement,
    free_product_project,
    star_coassociativity_sides,
    word,
)
from hopfseries.mtuples import enumerate_mtuples, to_tree, to_tuple
from hopfseries.series import Matrix, MatrixAlgebra, RATIONALS, TruncatedSeries


@contextmanager
def criterion(name, limit=None):
    start = time.perf_counter()
    try:
        yield
    except BaseException:
        print(f"[acceptance] {name}: FAIL")
        raise
    elapsed = time.perf_counter() - start
    if limit is not None and elapsed >= limit:
        print(f"[acceptance] {name}: FAIL (took {elapsed:.1f}s, limit {limit}s)")
        raise AssertionError(f"{name} exceeded runtime limit: {elapsed:.1f}s >= {limit}s")
    print(f"[acceptance] {name}: PASS ({elapsed:.2f}s)")


def _no_failures(checks):
    bad = [c for c in checks if not c.ok]
    assert bad == [], f"failed checks: {[c.check_id for c in bad][:5]}"


def test_criterion_01_antipode_tables():
    with criterion("1 antipode tables", limit=1.0):
        expected = {
            1: "-a1",
            2: "-a2 + 2 a1^2",
            3: "-a3 + 2 a1 a2 + 3 a2 a1 - 5 a1^3",
            4: "-a4 + 2 a1 a3 + 3 a2^2 + 4 a3 a1"
               " - 5 a1^2 a2 - 7 a1 a2 a1 - 9 a2 a1^2 + 14 a1^4",
        }
        for n, text in expected.items():
            for method in ("recursive", "closed"):
                code, doc = run(["antipode", "dif", "--method", method, "--gen", str(n)])
                assert code == 0 and doc == text, (n, method, doc)


def test_criterion_02_closed_form_equivalence():
    with criterion("2 closed-form equivalence n<=9", limit=30.0):
        for n in range(1, 10):
            assert diffeo.antipode_closed(n) == diffeo.antipode_recursive(n), n
        code, _ = run(["verify", "--suite", "antipode-equivalence", "--max-degree", "9"])
        assert code == 0


def test_criterion_03_hopf_axioms_dif():
    with criterion("3 Hopf axioms (composition side)", limit=60.0):
        _no_failures(suites.run_suite("hopf-axioms-dif", 8))


def test_criterion_04_q_identities():
    with criterion("4 Q identities and resolvent"):
        for n in range(9):
            for m in range(9):
                lhs = diffeo.q_polynomial(m, n)
                left = sum(
                    (NCPoly.generator(l) * diffeo.q_polynomial(m - l, n - 1)
                     for l in range(1, m + 1)),
                    diffeo.q_polynomial(m, n - 1),
                )
                right = sum(
                    (diffeo.q_polynomial(m - l, n - 1) * NCPoly.generator(l)
                     for l in range(1, m + 1)),
                    diffeo.q_polynomial(m, n - 1),
                )
                assert lhs == left == right, ("recurrence", m, n)
        for l in range(-1, 9):
            for n in range(-1, 9):
                for m in range(9):
                    rhs = NCPoly.zero()
                    for k in range(m + 1):
                        rhs = rhs + diffeo.q_polynomial(k, l) * diffeo.q_polynomial(m - k, n)
                    assert diffeo.q_polynomial(m, l + n + 1) == rhs, ("quadratic", l, n, m)
        assert diffeo.resolvent_identity_holds(5, 4)


def test_criterion_05_coaction_and_smash():
    with criterion("5 coaction and smash laws"):
        _no_failures(suites.run_suite("coaction-laws", 8))
        _no_failures(suites.run_suite("smash-coassoc", 6))


def test_criterion_06_free_product():
    with criterion("6 free-product lifts"):
        _no_failures(suites.run_suite("free-product", 6))
        st3 = diffeo.coproduct_star(NCPoly.generator(3))
        lhs, rhs = star_coassociativity_sides(st3, diffeo.coproduct_star_generator)
        assert not (lhs - rhs).is_zero()
        assert free_product_project(lhs, 3) == free_product_project(rhs, 3)


def test_criterion_07_tree_embedding():
    with criterion("7 tree embeddings", limit=120.0):
        assert len(trees.trees_of_size(6)) == 132
        _no_failures(suites.run_suite("tree-embedding", 6))
        _no_failures(suites.run_suite("propagator-coproducts", 6))


def test_criterion_08_catalan_bijection():
    with criterion("8 Catalan bijection"):
        for k in range(1, 13):
            assert len(enumerate_mtuples(k)) == catalan(k), k
        for k in range(1, 11):
            tuples = enumerate_mtuples(k)
            for m in tuples:
                assert to_tuple(to_tree(m)) == m
            assert {to_tree(m) for m in tuples} == set(trees.trees_of_size(k))
        assert len(enumerate_mtuples(10)) == 16796
        left = trees.over(
            trees.over(trees.under(trees.over(trees.Y, trees.Y), trees.Y), trees.Y), trees.Y
        )
        right = trees.over(trees.under(trees.Y, trees.Y), trees.Y)
        assert to_tree((4, 0, 1, 0, 0, 2, 1, 0)) == trees.under(left, right)


def test_criterion_09_series_duality():
    with criterion("9 series duality"):
        _no_failures(suites.run_suite("series-duality", 8))
        # the displayed reciprocal coefficients, with formal coefficients
        formal = series.FormalCoefficients()
        f = TruncatedSeries("invertible", 2, formal,
                            [NCPoly.generator(1), NCPoly.generator(2)])
        inv = series.series_inv(f)
        f1, f2 = NCPoly.generator(1), NCPoly.generator(2)
        assert inv.coeffs[0] == -f1
        assert inv.coeffs[1] == -f2 + f1 * f1
        # the displayed associator leading term for matrix units
        M = MatrixAlgebra(2)
        E = Matrix.elementary

        def mk(c1):
            return TruncatedSeries("diffeo", 4, M, [c1, M.zero, M.zero, M.zero])

        diff = series.associator(mk(E(2, 1, 2)), mk(E(2, 2, 1)), mk(E(2, 1, 1)))
        assert diff[2] == -E(2, 1, 1)


def test_criterion_10_double_tensor():
    with criterion("10 double tensor bialgebra"):
        _no_failures(suites.run_suite("ttb-iso", 8))


def test_criterion_11_binomial_identity():
    with criterion("11 binomial identity"):
        checks = suites.run_suite("binomial-identity", 6)
        assert len(checks) == 200
        _no_failures(checks)
