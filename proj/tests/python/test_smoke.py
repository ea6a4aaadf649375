import json
from fractions import Fraction

import pytest

import surfcount


@pytest.fixture()
def eng():
    return surfcount.Engine()


def test_counts(eng):
    assert eng.G(1, [4]) == 13
    assert eng.N(0, [2, 2, 2, 2]) == 96
    assert eng.G(0, [1, 2]) == 0
    assert eng.G(0, [24]) == surfcount.catalan(12)
    assert eng.lattice(1, [4]) == Fraction(1, 4)


def test_big_counts_are_exact(eng):
    v = eng.G(0, [60])
    assert isinstance(v, int)
    assert v == surfcount.catalan(30) == 3814986502092304


def test_closed_forms(eng):
    assert surfcount.closed_G(0, 2, [2, 2]) == eng.G(0, [2, 2])
    assert surfcount.closed_N(1, 1, [4]) == 3
    with pytest.raises(surfcount.Unsupported):
        surfcount.closed_G(2, 1, [2])


def test_fit_and_psi(eng):
    assert surfcount.fit_nhat(eng, 0, 3, "e,e,e")["polynomial"] == "1"
    report = json.loads(surfcount.fit_nhat(eng, 1, 1, "e")["json"])
    assert report["target"] == "Nhat"
    assert surfcount.extract_psi(eng, 1, 1) == [([1], Fraction(1, 24))]


def test_sums():
    assert surfcount.sum_direct("A", 0, 0, 4) == 8
    assert surfcount.fit_sum("A", 0)["e"] == "1/12*k^3 + 2/3*k"


def test_series(eng):
    s = json.loads(surfcount.series_json(eng, "fN", 0, 2, 4))
    assert s["aux"] == "none"
    assert json.loads(surfcount.series_json(eng, "pullback", 0, 2, 6))["terms"] == []
    assert surfcount.closed_form_matches(eng, "fN02", 8)


def test_oracles():
    assert len(surfcount.disc_matchings(5)) == 42
    assert len(surfcount.pants_search(6, 2, 2)) == 1


def test_suite():
    names = surfcount.suite_names()
    assert names[-1] == "all"
    results = surfcount.run_suite("sums")
    assert results and all(r["pass"] for r in results)
