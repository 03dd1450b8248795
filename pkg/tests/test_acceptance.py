"""Acceptance suite: one test per release criterion, each printing a
single pass/fail line (run with -s or read captured output)."""

from __future__ import annotations

import time

from gradedrings.classify import (
    is_graded_1abs_primary,
    is_graded_2abs_primary,
    is_graded_prime,
    is_graded_strongly_1abs_primary,
    radical_of,
    ring_predicates,
    strongly_1abs_ideal_form,
)
from gradedrings.finring import Cyclic, GaussMod, PolyQuotient, build_ring
from gradedrings.grading import Z2, attach_grading, trivial_grading
from gradedrings.ideals import enumerate_graded_ideals, proper_graded_ideals
from gradedrings.transport import MultiplicativeSet, localize, product
from gradedrings.verifier import default_corpus, verify

from test_ideals import brute_force_graded_ideals
from test_transport import oracle_localization_classes


def _report(criterion: int, ok: bool, detail: str) -> None:
    print(f"ACCEPTANCE {criterion}: {'PASS' if ok else 'FAIL'} - {detail}")
    assert ok, detail


def _prime_powers(lo: int, hi: int) -> set[int]:
    out = set()
    for p in range(2, hi + 1):
        if any(p % d == 0 for d in range(2, p)):
            continue
        q = p
        while q <= hi:
            if q >= lo:
                out.add(q)
            q *= p
    return out


def test_criterion_1_prime_power_table():
    start = time.perf_counter()
    (report,) = verify("COR_2_7", (2, 64))
    elapsed = time.perf_counter() - start
    expected = _prime_powers(2, 64)
    ok = (
        report.outcome == "PASS"
        and report.counters["rings"] == 63
        and report.counters["existence_instances"] == len(expected)
        and elapsed < 10.0
    )
    _report(1, ok, f"existence over Z/n, n=2..64 matches the {len(expected)} prime powers in {elapsed:.2f}s")


def test_criterion_2_z9_example():
    gr = trivial_grading(build_ring(Cyclic(9)), label="Z/9")
    proper = proper_graded_ideals(gr)
    all_strongly = all(is_graded_strongly_1abs_primary(gr, p)[0] for p in proper)
    profile = ring_predicates(gr)
    ok = (
        len(proper) == 2
        and all_strongly
        and profile.every_homogeneous_nilpotent_or_unit
    )
    _report(2, ok, "both proper graded ideals of Z/9 are strongly; homogeneous elements all nilpotent-or-unit")


def test_criterion_3_graded_field_with_zero_divisors():
    ring = build_ring(PolyQuotient(Cyclic(3), (2, 0, 1)))
    gr = attach_grading(
        ring, Z2, {(0,): frozenset({0, 1, 2}), (1,): frozenset({0, 3, 6})}
    )
    profile = ring_predicates(gr)
    has_zero_divisors = ring.mul(ring.parse("1+u"), ring.parse("1-u")) == ring.zero
    ok = profile.graded_field and has_zero_divisors
    _report(3, ok, "F3[u]/(u^2-1) with Z2 grading is a graded field yet (1+u)(1-u)=0")


def test_criterion_4_products_have_no_strongly_ideals():
    def gauss_z2(n):
        ring = build_ring(GaussMod(n))
        return attach_grading(
            ring,
            Z2,
            {(0,): frozenset(range(n)), (1,): frozenset(b * n for b in range(n))},
        )

    p1 = product(trivial_grading(build_ring(Cyclic(4))), trivial_grading(build_ring(Cyclic(9))))
    p2 = product(gauss_z2(2), gauss_z2(2))
    counts = []
    for gr in (p1, p2):
        lattice = proper_graded_ideals(gr)
        counts.append(
            sum(1 for p in lattice if is_graded_strongly_1abs_primary(gr, p)[0])
        )
    ok = counts == [0, 0]
    _report(4, ok, "Z/4 x Z/9 and Z/2[i] x Z/2[i] carry zero strongly ideals across their full lattices")


RING_STATEMENT_IDS = (
    "THM_2_2",
    "COR_2_4",
    "LEMMA_GRAD_PRIME",
    "LEMMA_2",
    "THM_2_6",
    "PROP_2_9",
    "PROP_2_10",
    "PROP_2_11",
    "PROP_2_12",
    "PROP_2_14",
    "PROP_2_17",
    "LEMMA_2_18",
    "PROP_2_19",
)

# provably unrealizable on any finite desk-scale corpus, expected VACUOUS
EXPECTED_VACUOUS_EVERYWHERE = {"PROP_2_19"}


def test_criterion_5_statement_suite(corpus):
    start = time.perf_counter()
    failures = []
    never_fired = []
    for sid in RING_STATEMENT_IDS:
        reports = verify(sid, corpus=corpus)
        failures.extend(r for r in reports if r.outcome == "FAIL")
        fired = any(r.outcome == "PASS" for r in reports)
        if not fired and sid not in EXPECTED_VACUOUS_EVERYWHERE:
            never_fired.append(sid)
    # the central equivalence must exercise both of its branches somewhere
    totals: dict[str, int] = {}
    for r in verify("THM_2_2", corpus=corpus):
        for k, v in r.counters.items():
            totals[k] = totals.get(k, 0) + v
    elapsed = time.perf_counter() - start
    ok = (
        not failures
        and not never_fired
        and totals.get("branch1_instances", 0) > 0
        and totals.get("branch2_instances", 0) > 0
        and totals.get("strongly_instances", 0) > 0
        and elapsed < 60.0
    )
    _report(
        5,
        ok,
        f"{len(RING_STATEMENT_IDS)} statements over {len(corpus)} rings: 0 FAIL, "
        f"all realizable branches fired, {elapsed:.2f}s",
    )


def test_criterion_6_transport_suite(corpus):
    failures = []
    instances = 0
    for sid in ("PROP_3_1", "COR_3_2", "COR_RE", "PROP_3_3"):
        for r in verify(sid, corpus=corpus):
            if r.outcome == "FAIL":
                failures.append(r)
            instances += sum(r.counters.values())
    ok = not failures and instances >= 20
    _report(6, ok, f"transport statements: 0 counterexamples, {instances} instances (need >= 20)")


def test_criterion_7_oracle_equivalences(corpus):
    # (a) element-form vs ideal-form strongly classification
    agree = all(
        strongly_1abs_ideal_form(e.gr, p)[0]
        == is_graded_strongly_1abs_primary(e.gr, p)[0]
        for e in corpus
        for p in proper_graded_ideals(e.gr)
    )
    # (b) lattice enumeration vs brute-force subset filtering
    lattice_ok = all(
        {i.elements for i in enumerate_graded_ideals(e.gr)}
        == brute_force_graded_ideals(e.gr)
        for e in corpus
        if e.gr.ring.size <= 16
    )
    # (c) localization sizes vs independent class counting
    fixed = [(12, {1, 3, 9}, 4), (6, {1, 2, 4}, 3), (9, {1, 4, 7}, 9)]
    loc_ok = True
    for n, s_elems, expected in fixed:
        gr = trivial_grading(build_ring(Cyclic(n)), label=f"Z/{n}")
        s = MultiplicativeSet.create(gr, s_elems)
        lgr, _ = localize(gr, s)
        loc_ok = loc_ok and (
            lgr.ring.size == expected == oracle_localization_classes(gr.ring, s.elements)
        )
    ok = agree and lattice_ok and loc_ok
    _report(7, ok, "ideal-form agreement, lattice brute force, and localization class counts all match")


def test_criterion_8_separation_witnesses(corpus):
    from gradedrings.verifier import search_counterexample

    hits = search_counterexample(corpus, "graded_prime", "graded_strongly_1abs_primary")
    z6 = next(h for h in hits if h["ring"] == "Z/6" and h["ideal"] == ["0", "3"])
    gr6 = z6["graded_ring"]
    x, y, z = z6["witness_raw"]
    r6 = gr6.ring
    grad_zero = gr6.graded_nilradical()
    z6_valid = (
        z6["witness"] == ["2", "2", "3"]
        and r6.mul(r6.mul(x, y), z) in z6["ideal_raw"].elements
        and r6.mul(x, y) not in z6["ideal_raw"].elements
        and z not in grad_zero
        and is_graded_prime(gr6, z6["ideal_raw"])[0]
    )

    hits = search_counterexample(corpus, "graded_2abs_primary", "graded_1abs_primary")
    z36 = next(
        h for h in hits if h["ring"] == "Z/36" and h["ideal"] == ["0", "12", "24"]
    )
    gr36 = z36["graded_ring"]
    x, y, z = z36["witness_raw"]
    r36 = gr36.ring
    rad = radical_of(gr36, z36["ideal_raw"]).elements
    z36_valid = (
        z36["witness"] == ["2", "2", "3"]
        and r36.mul(r36.mul(x, y), z) in z36["ideal_raw"].elements
        and r36.mul(x, y) not in z36["ideal_raw"].elements
        and z not in rad
        and is_graded_2abs_primary(gr36, z36["ideal_raw"])[0]
        and not is_graded_1abs_primary(gr36, z36["ideal_raw"])[0]
    )
    ok = z6_valid and z36_valid
    _report(8, ok, "deterministic witnesses (Z/6, 3R, (2,2,3)) and (Z/36, 12R, (2,2,3)) re-validate")
