import json

import pytest

from rankmatch import FieldSpec, Matrix, mu, nu
from rankmatch.space import AffineSpace, leading_graph, max_rank_oracle
from rankmatch.theorem import (
    counterexample_spaces,
    verify_all,
    verify_cor3,
    verify_counterexamples_f2,
    verify_erdos_gallai,
    verify_thm1,
    verify_thm2,
    verify_thm4,
    verify_thm5,
    witness_search_alt,
)
from rankmatch.theorem.report import TrialOutcome, VerificationReport


def test_counterexamples():
    r = verify_counterexamples_f2()
    assert r.verdict == "PASS" and r.passed == 2
    for S, (m, rho) in zip(counterexample_spaces(2), ((2, 1), (3, 2))):
        G = leading_graph(S)
        assert (mu(G), max_rank_oracle(S), nu(G)) == (m, rho, rho)


def test_thm1_default():
    r = verify_thm1(trials=200)
    assert (r.passed, r.failed) == (200, 0)
    assert r.checks["prop1_coefficient_nonzero"] == 200


def test_thm1_trivial_and_full():
    assert verify_thm1(n=2, p=3, d=0, trials=10).passed == 10
    r = verify_thm1(n=3, p=5, d=6, trials=5)
    assert r.passed == 5 and r.checks["oracle_rho_ge_mu"] == 5


def test_thm1_rejects_gf2():
    with pytest.raises(ValueError, match=r"\|F\| >= 3"):
        verify_thm1(p=2)


def test_thm2_default_and_full():
    assert verify_thm2(trials=200).passed == 200
    r = verify_thm2(n=4, p=2, d=6, trials=5)
    assert r.passed == 5


def test_thm2_small_translate():
    F2 = FieldSpec(2)
    S = AffineSpace(F2, 2, Matrix(F2, [[0, 1], [1, 0]]), (Matrix(F2, [[0, 1], [1, 0]]),), "alternating")
    assert mu(leading_graph(S)) == 2 and max_rank_oracle(S) == 2
    assert witness_search_alt(S).achieved_rank == 2


def test_cor3_counterexample_spaces_are_tight():
    for S in counterexample_spaces(2):
        assert nu(leading_graph(S)) == max_rank_oracle(S)


def test_cor3_suite_reports_only_the_equality_link():
    r = verify_cor3(n=4, d=3, trials=200)
    failing = {f["check"] for f in r.failures}
    assert failing <= {"nu_preserved"}
    for name in ("rho_double_eq_2rho", "rho_ge_nu", "rho_ge_nu_double", "nu_double_ge_nu"):
        assert r.checks[name] == 200


def test_bound_suites():
    r4 = verify_thm4(n=5, p=2, trials=100)
    r5 = verify_thm5(n=4, p=3, trials=100)
    assert r4.verdict == r5.verdict == "PASS"
    assert r4.checks["bound_attained"] == 3 and r5.checks["bound_attained"] == 5


def test_bound_suites_single_k():
    r = verify_thm4(n=6, k=4, p=2, trials=20)
    assert r.verdict == "PASS" and r.checks["bound_attained"] == 1
    with pytest.raises(ValueError):
        verify_thm4(n=6, k=3)
    with pytest.raises(ValueError):
        verify_thm5(p=2)


def test_erdos_gallai_examples():
    r = verify_erdos_gallai(4, loops=False)
    assert r.passed == 64 + 2 and r.failed == 0
    r = verify_erdos_gallai(2, loops=True)
    assert r.verdict == "PASS" and r.checks["tight_exhaustive"] == 3
    r = verify_erdos_gallai(8, loops=False, trials=50, seed=1)
    assert r.params["mode"] == "sampled" and r.verdict == "PASS"


def test_workers_do_not_change_reports():
    a = verify_thm2(trials=30, workers=1).to_json()
    b = verify_thm2(trials=30, workers=2).to_json()
    assert a == b


def test_report_serialization():
    rep = VerificationReport("x", {"n": 1})
    out = TrialOutcome()
    out.check("ok", True)
    rep.add(out)
    bad = TrialOutcome()
    bad.check("broken", False, expected=1, got=2, space_text="field 2\n", trial=3)
    rep.add(bad)
    d = json.loads(rep.to_json())
    assert (d["pass"], d["fail"], d["skip"], d["verdict"]) == (1, 1, 0, "FAIL")
    assert d["failures"][0] == {"check": "broken", "trial": 3, "expected": "1", "got": "2",
                                "space_text": "field 2\n"}
    assert "! broken" in rep.to_text()


@pytest.mark.slow
def test_verify_all_is_seed_deterministic():
    a = [r.to_json() for r in verify_all(trials=20, seed=5)]
    b = [r.to_json() for r in verify_all(trials=20, seed=5)]
    assert a == b
