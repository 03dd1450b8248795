from __future__ import annotations

from itertools import combinations

import pytest

from gradedrings.errors import NotGraded
from gradedrings.finring import Cyclic, GaussMod, build_ring
from gradedrings.grading import Z2, attach_grading, trivial_grading
from gradedrings.ideals import (
    IdealSet,
    colon,
    combine,
    enumerate_graded_ideals,
    graded_radical,
    ideal_generated,
    is_graded_ideal,
    proper_graded_ideals,
    unit_ideal,
    zero_ideal,
)


def gauss_z2(n):
    ring = build_ring(GaussMod(n))
    return attach_grading(
        ring,
        Z2,
        {(0,): frozenset(range(n)), (1,): frozenset(b * n for b in range(n))},
    )


# ------------------------------------------------------------ oracle helpers


def oracle_closure(ring, gens):
    out = {ring.zero, *gens}
    changed = True
    while changed:
        changed = False
        for x in list(out):
            for y in list(out):
                s = ring.add(x, y)
                if s not in out:
                    out.add(s)
                    changed = True
    return frozenset(out)


def oracle_is_ideal(ring, s):
    return all(ring.mul(r, x) in s for x in s for r in ring.elements())


def oracle_is_graded(gr, s):
    return all(part in s for x in s for part in gr.decompose(x).values())


def brute_force_graded_ideals(gr):
    """Subset filtering: every additive subgroup (closure of <= 4 generators)
    that absorbs multiplication and contains all components of its members."""
    ring = gr.ring
    assert ring.size <= 16
    subgroups = set()
    elems = list(ring.elements())
    for k in range(5):
        for gens in combinations(elems, k):
            subgroups.add(oracle_closure(ring, gens))
    return {
        s for s in subgroups if oracle_is_ideal(ring, s) and oracle_is_graded(gr, s)
    }


# -------------------------------------------------------------------- tests


def test_ideal_generated_examples():
    c12 = build_ring(Cyclic(12))
    assert ideal_generated(c12, (4,)).elements == {0, 4, 8}
    c9 = build_ring(Cyclic(9))
    assert ideal_generated(c9, (3,)).elements == {0, 3, 6}
    gr = gauss_z2(4)
    two = gr.ring.parse("2")
    two_i = gr.ring.parse("2i")
    ideal = ideal_generated(gr.ring, (two, two_i))
    # oracle: 2*R by direct scan
    assert ideal.elements == {gr.ring.mul(two, x) for x in gr.ring.elements()}
    assert len(ideal) == 4


def test_is_graded_ideal():
    gr = gauss_z2(4)
    triv = trivial_grading(build_ring(Cyclic(12)))
    for ideal in [zero_ideal(triv.ring), ideal_generated(triv.ring, (4,))]:
        assert is_graded_ideal(triv, ideal) == (True, None)
    # principal ideal of a homogeneous element is graded
    ok, _ = is_graded_ideal(gr, ideal_generated(gr.ring, (gr.ring.parse("2"),)))
    assert ok
    # 1+i is not homogeneous and generates a non-graded ideal
    one_plus_i = gr.ring.parse("1+i")
    ok, witness = is_graded_ideal(gr, ideal_generated(gr.ring, (one_plus_i,)))
    assert not ok
    assert witness == one_plus_i


def test_graded_radical_examples():
    triv12 = trivial_grading(build_ring(Cyclic(12)))
    rad = graded_radical(triv12, IdealSet(triv12.ring, {0, 4, 8}))
    assert rad.elements == {0, 2, 4, 6, 8, 10}
    triv9 = trivial_grading(build_ring(Cyclic(9)))
    assert graded_radical(triv9, zero_ideal(triv9.ring)).elements == {0, 3, 6}


def test_graded_radical_requires_graded():
    gr = gauss_z2(4)
    bad = ideal_generated(gr.ring, (gr.ring.parse("1+i"),))
    if bad.is_proper():
        with pytest.raises(NotGraded):
            graded_radical(gr, bad)


def test_graded_radical_of_improper_is_ring():
    triv = trivial_grading(build_ring(Cyclic(12)))
    assert graded_radical(triv, unit_ideal(triv.ring)) == unit_ideal(triv.ring)


def test_colon_examples():
    c12 = build_ring(Cyclic(12))
    p = IdealSet(c12, {0, 4, 8})
    k = IdealSet(c12, {0, 2, 4, 6, 8, 10})
    # oracle: direct scan of 2r mod 12 in {0,4,8}
    expected = {r for r in range(12) if all((r * x) % 12 in {0, 4, 8} for x in k.elements)}
    got = colon(c12, p, k)
    assert got.elements == expected == {0, 2, 4, 6, 8, 10}
    assert colon(c12, p, unit_ideal(c12)) == p
    assert colon(c12, k, p) == unit_ideal(c12)  # P contained in K


def test_combine_examples():
    c12 = build_ring(Cyclic(12))
    i = IdealSet(c12, {0, 4, 8})
    j = IdealSet(c12, {0, 6})
    assert combine(i, zero_ideal(c12), "sum") == i
    assert combine(i, j, "product").elements == {0}
    assert combine(i, j, "intersection").elements == {0}
    assert combine(i, j, "sum").elements == {0, 2, 4, 6, 8, 10}


def test_radical_properties_on_corpus(corpus):
    for entry in corpus:
        gr = entry.gr
        lattice = proper_graded_ideals(gr)
        for ideal in lattice:
            rad = graded_radical(gr, ideal)
            assert is_graded_ideal(gr, rad)[0]
            assert ideal.elements <= rad.elements
            assert graded_radical(gr, rad) == rad or not rad.is_proper()
        for a in lattice:
            for b in lattice:
                if a.elements <= b.elements:
                    assert (
                        graded_radical(gr, a).elements
                        <= graded_radical(gr, b).elements
                    )


def test_colon_and_combine_stay_graded_on_corpus(corpus):
    for entry in corpus:
        gr = entry.gr
        lattice = enumerate_graded_ideals(gr)
        for a in lattice:
            for b in lattice:
                assert is_graded_ideal(gr, colon(gr.ring, a, b))[0]
                for op in ("sum", "product", "intersection"):
                    assert is_graded_ideal(gr, combine(a, b, op))[0]


def test_enumerate_matches_divisor_lattice():
    triv = trivial_grading(build_ring(Cyclic(12)))
    lattice = enumerate_graded_ideals(triv)
    assert len(lattice) == 6  # one ideal per divisor of 12


def test_enumerate_graded_field():
    from gradedrings.verifier import _graded_field

    gr = _graded_field(3)
    assert [len(i) for i in enumerate_graded_ideals(gr)] == [1, 9]


def test_enumerate_matches_brute_force(small_corpus):
    for entry in small_corpus:
        gr = entry.gr
        got = {i.elements for i in enumerate_graded_ideals(gr)}
        assert got == brute_force_graded_ideals(gr), entry.label
