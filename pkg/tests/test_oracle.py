import itertools

import networkx as nx
import pytest

from cyclesmith.generators import named
from cyclesmith.oracle import (
    OracleCapExceeded,
    brute_longest_path,
    circumference,
    is_hamiltonian,
    scan_motifs_naive,
)


def nx_graph(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def test_petersen_circumference(petersen):
    length, cyc = circumference(petersen)
    assert length == 9
    cyc.require_valid(petersen)
    # independent check: a hand-built 9-cycle in networkx's Petersen, which is isomorphic to ours
    ref = nx.petersen_graph()
    assert nx.is_isomorphic(ref, nx_graph(petersen))
    nine = [0, 1, 6, 8, 5, 7, 2, 3, 4]
    assert all(ref.has_edge(nine[k - 1], nine[k]) for k in range(9))


def test_petersen_not_hamiltonian(petersen):
    assert is_hamiltonian(petersen) == (False, None)
    # permutation brute force on networkx's copy
    ref = nx.petersen_graph()
    assert not any(
        all(ref.has_edge(c[k - 1], c[k]) for k in range(10))
        for c in ((0, *perm) for perm in itertools.permutations(range(1, 10)))
    )


def test_small_values():
    assert circumference(named("cycle", n=7))[0] == 7
    assert circumference(named("path", n=6)) is None
    assert circumference(named("star", k=5)) is None
    assert brute_longest_path(named("path", n=6)).vertices == tuple(range(6))
    assert len(brute_longest_path(named("complete", n=5))) == 5


def test_hamiltonicity():
    ok, cyc = is_hamiltonian(named("complete_bipartite", a=3, b=3))
    assert ok and cyc.is_valid(named("complete_bipartite", a=3, b=3))
    assert not is_hamiltonian(named("complete_bipartite", a=2, b=3))[0]


def test_motif_templates():
    assert tuple(map(len, scan_motifs_naive(named("claw")))) == (1, 0)
    assert tuple(map(len, scan_motifs_naive(named("modified_claw")))) == (0, 1)


def test_caps():
    with pytest.raises(OracleCapExceeded):
        circumference(named("cycle", n=15))
    with pytest.raises(OracleCapExceeded):
        scan_motifs_naive(named("cycle", n=17))
