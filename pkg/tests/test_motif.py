import numpy as np
import pytest

from cyclesmith.generators import line_graph, named, random_graph
from cyclesmith.graph import from_edge_list
from cyclesmith.motif import (
    ClawWitness,
    ModifiedClawWitness,
    enumerate_claws,
    enumerate_modified_claws,
    is_claw_free,
    nonadjacent_pairs,
)
from cyclesmith.oracle import scan_motifs_naive


def canonical_sets(g):
    claws, mods = scan_motifs_naive(g)
    return set(claws), set(mods)


def test_claw_graph():
    assert enumerate_claws(named("claw")) == [ClawWitness(0, (1, 2, 3))]
    assert enumerate_modified_claws(named("claw")) == []


def test_petersen(petersen):
    claws = enumerate_claws(petersen)
    assert len(claws) == 10
    assert sorted(w.center for w in claws) == list(range(10))
    assert enumerate_modified_claws(petersen) == []


def test_c5_and_cycles():
    assert enumerate_claws(named("cycle", n=5)) == []
    for n in range(4, 10):
        assert is_claw_free(named("cycle", n=n))


def test_modified_claw_graph():
    assert enumerate_modified_claws(named("modified_claw")) == [ModifiedClawWitness(0, 1, 2, 3)]
    assert enumerate_claws(named("modified_claw")) == []


def test_k4_has_no_induced_motifs():
    k4 = named("complete", n=4)
    assert enumerate_claws(k4) == [] and enumerate_modified_claws(k4) == []


def test_k23_not_claw_free(k23):
    assert not is_claw_free(k23)


def test_order_is_center_major():
    g = named("star", k=4)
    assert [w.leaves for w in enumerate_claws(g)] == [(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)]


def test_nonadjacent_pairs():
    assert nonadjacent_pairs(ClawWitness(0, (1, 2, 3))) == [(1, 2), (1, 3), (2, 3)]
    assert nonadjacent_pairs(ModifiedClawWitness(0, 1, 2, 3)) == [(3, 1), (3, 2)]


def random_graphs(count, max_n, seed):
    rng = np.random.Generator(np.random.PCG64(seed))
    for _ in range(count):
        n = int(rng.integers(4, max_n + 1))
        yield random_graph(n, float(rng.uniform(0.15, 0.85)), rng)


@pytest.mark.parametrize("seed", range(5))
def test_matches_naive_oracle(seed):
    for g in random_graphs(100, 12, seed):
        claws, mods = enumerate_claws(g), enumerate_modified_claws(g)
        assert len(set(claws)) == len(claws)
        assert len(set(mods)) == len(mods)
        assert (set(claws), set(mods)) == canonical_sets(g)
        assert is_claw_free(g) == (not claws)
        for w in claws + mods:
            assert w.is_valid(g)
            assert all(not g.has_edge(u, v) for u, v in nonadjacent_pairs(w))


def test_attachment_is_unique():
    # a 4-set inducing a modified claw yields exactly one labeling
    for g in random_graphs(200, 9, 99):
        quads = [frozenset(w.vertices) for w in enumerate_modified_claws(g)]
        assert len(quads) == len(set(quads))


def test_counts_invariant_under_relabeling():
    rng = np.random.Generator(np.random.PCG64(7))
    for g in random_graphs(50, 10, 3):
        perm = [int(x) for x in rng.permutation(g.n)]
        h = g.relabel(perm)
        assert len(enumerate_claws(h)) == len(enumerate_claws(g))
        assert len(enumerate_modified_claws(h)) == len(enumerate_modified_claws(g))
        assert {frozenset(perm[v] for v in w.vertices) for w in enumerate_claws(g)} == {
            frozenset(w.vertices) for w in enumerate_claws(h)
        }


def test_line_graphs_claw_free():
    for g in random_graphs(100, 9, 11):
        if g.num_edges == 0:
            continue
        lg = line_graph(g)
        assert is_claw_free(lg)
        if lg.n <= 16:
            assert scan_motifs_naive(lg)[0] == []


def test_witness_json():
    assert ClawWitness(0, (1, 2, 3)).to_json() == {"kind": "claw", "center": 0, "leaves": [1, 2, 3]}
    w = ModifiedClawWitness(0, 1, 2, 3).to_json()
    assert w["attach"] == 0 and w["pendant"] == 3 and w["triangle"] == [0, 1, 2]
    assert not ClawWitness(0, (1, 2, 3)).is_valid(from_edge_list(4, [(0, 1), (0, 2)]))
