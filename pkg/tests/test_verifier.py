from __future__ import annotations

import json

import pytest

from gradedrings.errors import ShapeMismatch
from gradedrings.finring import Cyclic, build_ring
from gradedrings.grading import trivial_grading
from gradedrings.verifier import (
    ALL_STATEMENTS,
    _is_prime_power,
    default_corpus,
    run_suite,
    search_counterexample,
    verify,
)


def triv(n):
    return trivial_grading(build_ring(Cyclic(n)), label=f"Z/{n}")


def test_default_corpus_shape(corpus):
    labels = [e.label for e in corpus]
    assert len(labels) == len(set(labels))
    kinds = {e.kind for e in corpus}
    assert kinds == {"base", "product", "quotient", "localization"}
    for entry in corpus:
        if entry.kind == "product":
            assert len(entry.parents) == 2


def test_suite_has_no_failures(corpus):
    reports = run_suite(corpus=corpus, n_range=(2, 32))
    assert reports
    assert all(r.outcome in {"PASS", "FAIL", "VACUOUS"} for r in reports)
    failures = [r for r in reports if r.outcome == "FAIL"]
    assert failures == [], [r.format_text() for r in failures]


def test_thm_2_6_on_z6():
    # Z/6: not graded local and Grad({0}) = {0} is not prime, so no
    # graded strongly 1-absorbing primary ideal may exist
    (report,) = verify("THM_2_6", triv(6))
    assert report.outcome == "PASS"
    assert report.counters.get("existence_instances", 0) == 0
    assert any("strongly ideal exists: False" in n for n in report.notes)


def test_thm_2_2_on_z9():
    (report,) = verify("THM_2_2", triv(9))
    assert report.outcome == "PASS"
    assert report.counters["strongly_instances"] >= 1


def test_cor_2_7_prime_power_table():
    (report,) = verify("COR_2_7", (2, 32))
    assert report.outcome == "PASS"
    expected = sum(1 for n in range(2, 33) if _is_prime_power(n))
    assert report.counters["existence_instances"] == expected
    assert report.counters["rings"] == 31
    with pytest.raises(ShapeMismatch):
        verify("COR_2_7", triv(6))


def test_is_prime_power_oracle():
    # independent sieve-style oracle
    def oracle(n):
        for p in range(2, n + 1):
            if all(p % d for d in range(2, p)):
                m = n
                while m % p == 0:
                    m //= p
                if m == 1:
                    return True
        return False

    for n in range(2, 128):
        assert _is_prime_power(n) == oracle(n), n


def test_cor_2_8_products_only(corpus):
    reports = verify("COR_2_8", corpus=corpus)
    assert len(reports) == sum(1 for e in corpus if e.kind == "product")
    assert all(r.outcome == "PASS" for r in reports)
    non_product = next(e for e in corpus if e.kind != "product")
    with pytest.raises(ShapeMismatch):
        verify("COR_2_8", non_product)


def test_unknown_statement_rejected():
    with pytest.raises(ShapeMismatch):
        verify("THM_9_9")
    with pytest.raises(ShapeMismatch):
        verify("THM_2_2", (2, 3))


def test_prop_3_4_reduction_labels_derived_claims():
    (report,) = verify("PROP_3_4_REDUCTION", triv(9))
    assert report.outcome == "PASS"
    assert any("NOT independently verified" in n for n in report.notes)


def test_reports_are_deterministic(corpus):
    a = [r.to_dict() for r in run_suite(corpus=corpus, n_range=(2, 16))]
    b = [r.to_dict() for r in run_suite(corpus=default_corpus(), n_range=(2, 16))]
    assert json.dumps(a, sort_keys=True, default=str) == json.dumps(
        b, sort_keys=True, default=str
    )


def test_all_statements_registered():
    assert "THM_2_2" in ALL_STATEMENTS
    assert "COR_2_7" in ALL_STATEMENTS
    assert len(ALL_STATEMENTS) == len(set(ALL_STATEMENTS)) == 20


def test_search_separating_examples(corpus):
    # a graded prime that is not graded strongly 1-absorbing primary
    hits = search_counterexample(
        corpus, "graded_prime", "graded_strongly_1abs_primary"
    )
    by_ring = {h["ring"]: h for h in hits}
    z6 = by_ring["Z/6"]
    assert sorted(z6["ideal"]) in (["0", "2", "4"], ["0", "3"])
    three_r = next(h for h in hits if h["ring"] == "Z/6" and h["ideal"] == ["0", "3"])
    assert three_r["witness"] == ["2", "2", "3"]
    # 2-absorbing primary but not 1-absorbing primary
    hits = search_counterexample(corpus, "graded_2abs_primary", "graded_1abs_primary")
    z36 = next(
        h for h in hits if h["ring"] == "Z/36" and h["ideal"] == ["0", "12", "24"]
    )
    assert z36["witness"] == ["2", "2", "3"]
    # nothing separates strongly from 1-absorbing in the wrong direction
    assert (
        search_counterexample(corpus, "graded_strongly_1abs_primary", "graded_1abs_primary")
        == []
    )


def test_verify_single_target_matches_corpus_entry(corpus):
    entry = next(e for e in corpus if e.label == "Z/9")
    (solo,) = verify("THM_2_2", entry.gr)
    from_corpus = next(
        r for r in verify("THM_2_2", corpus=corpus) if r.subject == "Z/9"
    )
    assert solo.to_dict() == from_corpus.to_dict()
