import itertools
import json

import numpy as np
import pytest

from cyclesmith.generators import named
from cyclesmith.graph import distance
from cyclesmith.hypothesis import (
    HypothesisReport,
    Violation,
    check,
    check_bcs,
    check_fan,
    check_shi,
    check_thm4,
)
from cyclesmith.oracle import scan_motifs_naive


def test_fan_examples(petersen):
    r = check_fan(named("cycle", n=5), 5)
    assert not r.holds
    assert r.violation.kind == "distance2_degree" and r.violation.degrees == (2, 2)
    assert all(check_fan(named("complete", n=4), c).holds for c in range(3, 7))
    assert check_fan(petersen, 6).holds
    assert not check_fan(petersen, 7).holds


def test_bcs_examples(petersen, k23):
    r = check_bcs(k23, 5)
    assert not r.holds and r.violation.kind == "claw_degree"
    assert r.violation.degrees == (2, 2)
    assert check_bcs(petersen, 6).holds
    # C6 has no claws and no modified claws
    assert all(check_bcs(named("cycle", n=6), c).holds for c in range(3, 20))


def test_shi_examples(k23):
    assert check_shi(named("prism")).holds
    r = check_shi(k23)
    assert not r.holds and r.violation.kind == "claw"
    r = check_shi(named("cycle", n=6))
    assert not r.holds
    assert r.violation.kind == "distance2_common" and r.violation.common_neighbor_count == 1
    assert r.c is None


def test_thm4_examples(petersen, k23):
    assert check_thm4(petersen, 6).holds
    for n in range(4, 9):
        assert all(check_thm4(named("cycle", n=n), c).holds for c in range(3, 2 * n))
    r = check_thm4(k23, 5)
    assert not r.holds and r.failed_clause == "a"
    assert r.violation.motif.center in (0, 1)


def test_thm4_clause_b():
    r = check_thm4(named("modified_claw"), 3)
    assert not r.holds and r.failed_clause == "b"
    assert r.violation.common_neighbor_count == 1
    assert r.violation.recheck(named("modified_claw"), 3)


def test_integer_threshold():
    # degree 2 meets c=4 exactly (2*2 >= 4) but not c=5
    c5 = named("cycle", n=5)
    assert check_fan(c5, 4).holds
    assert not check_fan(c5, 5).holds


def test_invalid_target():
    with pytest.raises(ValueError):
        check_fan(named("cycle", n=5), 2)
    with pytest.raises(ValueError):
        check(named("cycle", n=5), "nope", 3)


def test_report_invariant():
    with pytest.raises(ValueError):
        HypothesisReport("fan", 3, False)
    with pytest.raises(ValueError):
        HypothesisReport("fan", 3, True, Violation("distance2_degree", (0, 1)))


def test_json_shape(k23):
    out = check_thm4(k23, 5).to_json()
    json.dumps(out)
    assert out["theorem"] == "thm4" and out["c"] == 5 and out["holds"] is False
    assert set(out["violation"]) >= {"kind", "vertices", "degrees"}
    out = check_shi(named("cycle", n=6)).to_json()
    assert out["violation"]["commonNeighborCount"] == 1


def naive_pairs(g):
    claws, mods = scan_motifs_naive(g)
    claw_pairs = {frozenset(p) for w in claws for p in itertools.combinations(w.leaves, 2)}
    mod_pairs = {frozenset((w.pendant, x)) for w in mods for x in (w.b, w.c)}
    return claw_pairs, mod_pairs


def naive_thm4(g, c):
    claw_pairs, mod_pairs = naive_pairs(g)
    deg = g.degrees()
    return all(2 * max(deg[u] for u in p) >= c for p in claw_pairs) and all(
        (g.adj[min(p)] & g.adj[max(p)]).bit_count() >= 2 for p in mod_pairs
    )


def test_subsumption_and_rechecks(corpus):
    for g in corpus[::7]:
        shi = check_shi(g)
        if not shi.holds:
            assert shi.violation.recheck(g, None)
        for c in range(3, g.n + 3):
            fan, bcs, thm4 = check_fan(g, c), check_bcs(g, c), check_thm4(g, c)
            if fan.holds:
                assert bcs.holds
            if shi.holds:
                assert thm4.holds
            assert thm4.holds == naive_thm4(g, c)
            for r in (fan, bcs, thm4):
                if not r.holds:
                    assert r.violation.recheck(g, c)


def test_bcs_pairs_are_at_distance_two(corpus):
    for g in corpus[::11]:
        claw_pairs, mod_pairs = naive_pairs(g)
        for p in claw_pairs | mod_pairs:
            u, v = sorted(p)
            assert distance(g, u, v) == 2


def test_thm4_relabeling_invariant(corpus):
    rng = np.random.Generator(np.random.PCG64(5))
    for g in corpus[::37]:
        perm = [int(x) for x in rng.permutation(g.n)]
        h = g.relabel(perm)
        for c in range(3, g.n + 3):
            assert check_thm4(g, c).holds == check_thm4(h, c).holds
