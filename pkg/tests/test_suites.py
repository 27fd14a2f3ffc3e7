import pytest

from hopfseries import suites


@pytest.mark.parametrize("name", sorted(suites.SUITES))
def test_suite_passes_at_small_degree(name):
    degree = {"catalan-bijection": 6, "resolvent": 3}.get(name, 4)
    checks = suites.run_suite(name, degree)
    failures = [c for c in checks if not c.ok]
    assert failures == []
    assert checks == sorted(checks, key=lambda c: c.check_id)


def test_unknown_suite():
    with pytest.raises(ValueError, match="available"):
        suites.run_suite("bogus", 3)


def test_seed_determinism():
    a = suites.run_suite("binomial-identity", 4, seed=1)
    b = suites.run_suite("binomial-identity", 4, seed=1)
    assert a == b
