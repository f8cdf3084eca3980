"""Named graph families, seeded random 2-connected graphs, line graphs, and
isomorph-free exhaustive corpora."""

from __future__ import annotations

import json
from collections.abc import Callable
from importlib import resources
from itertools import combinations
from pathlib import Path as FsPath

import networkx as nx
import numpy as np

from .graph import Graph, GraphError, bits, from_edge_list, is_two_connected, read_graph6_lines, write_graph6
from .motif import is_claw_free

__all__ = [
    "FAMILIES",
    "RNG_ALGORITHM",
    "named",
    "random_two_connected",
    "random_graph",
    "line_graph",
    "all_graphs",
    "biconnected_graphs",
    "claw_free_graphs",
    "claw_free_biconnected_graphs",
    "write_corpus",
    "bundled_corpus",
    "BUNDLED_CORPORA",
]

#: Shipped graph6 corpora, regenerable with ``cyclesmith gen``.
BUNDLED_CORPORA = ("biconnected_3-8", "clawfree_biconnected_3-9")

FAMILIES = (
    "complete", "cycle", "path", "complete_bipartite", "star",
    "petersen", "prism", "claw", "modified_claw",
)
RNG_ALGORITHM = "numpy.random.PCG64"


def _need(params: dict, key: str, minimum: int) -> int:
    if key not in params:
        raise GraphError(f"missing parameter {key!r}")
    value = int(params[key])
    if value < minimum:
        raise GraphError(f"parameter {key}={value} must be >= {minimum}")
    return value


def named(family: str, **params) -> Graph:
    """Canonical construction of a named family on vertices ``0..n-1``.

    ``complete``/``cycle``/``path`` take ``n``; ``complete_bipartite`` takes
    ``a`` and ``b`` (side ``0..a-1`` first); ``star`` takes ``k`` leaves with
    hub 0; ``prism`` takes ``k`` (default 3) for C_k x K_2; ``modified_claw``
    is the triangle 0-1-2 with pendant 3 on vertex 0.
    """
    if family == "complete":
        n = _need(params, "n", 1)
        return from_edge_list(n, combinations(range(n), 2))
    if family == "cycle":
        n = _need(params, "n", 3)
        return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])
    if family == "path":
        n = _need(params, "n", 1)
        return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])
    if family == "complete_bipartite":
        a, b = _need(params, "a", 1), _need(params, "b", 1)
        return from_edge_list(a + b, [(i, a + j) for i in range(a) for j in range(b)])
    if family in ("star", "claw"):
        k = 3 if family == "claw" else _need(params, "k", 1)
        return from_edge_list(k + 1, [(0, i) for i in range(1, k + 1)])
    if family == "petersen":
        pairs = list(combinations(range(5), 2))
        return from_edge_list(
            10,
            [(i, j) for i, j in combinations(range(10), 2) if not set(pairs[i]) & set(pairs[j])],
        )
    if family == "prism":
        k = int(params.get("k", 3))
        if k < 3:
            raise GraphError("prism needs k >= 3")
        edges = [(i, (i + 1) % k) for i in range(k)]
        edges += [(k + i, k + (i + 1) % k) for i in range(k)]
        edges += [(i, k + i) for i in range(k)]
        return from_edge_list(2 * k, edges)
    if family == "modified_claw":
        return from_edge_list(4, [(0, 1), (0, 2), (1, 2), (0, 3)])
    raise GraphError(f"unknown family {family!r}; expected one of {FAMILIES}")


def random_two_connected(n: int, extra_edges: int, seed: int) -> Graph:
    """The cycle 0..n-1 plus ``extra_edges`` distinct chords chosen by a seeded PCG64."""
    if n < 3:
        raise GraphError("random_two_connected needs n >= 3")
    chords = [(u, v) for u, v in combinations(range(n), 2) if (v - u) % n not in (1, n - 1)]
    if not 0 <= extra_edges <= len(chords):
        raise GraphError(f"extra_edges={extra_edges} outside 0..{len(chords)} available chords")
    rng = np.random.Generator(np.random.PCG64(seed))
    picked = rng.choice(len(chords), size=extra_edges, replace=False) if extra_edges else []
    edges = [(i, (i + 1) % n) for i in range(n)] + [chords[k] for k in sorted(picked)]
    return from_edge_list(n, edges)


def random_graph(n: int, p: float, rng: np.random.Generator) -> Graph:
    """Erdős–Rényi G(n, p) from the given generator."""
    draws = rng.random(n * (n - 1) // 2)
    pairs = combinations(range(n), 2)
    return from_edge_list(n, [e for e, x in zip(pairs, draws) if x < p])


def line_graph(g: Graph) -> Graph:
    """Vertices are the edges of ``g`` in lexicographic order; adjacent when they share an end."""
    edges = g.edges()
    if not edges:
        raise GraphError("line graph of an edgeless graph is empty")
    return from_edge_list(
        len(edges),
        [(i, j) for i, j in combinations(range(len(edges)), 2) if set(edges[i]) & set(edges[j])],
    )


# exhaustive corpora


def _invariant(adj: tuple[int, ...]) -> tuple:
    deg = [row.bit_count() for row in adj]
    per_vertex = []
    for v, row in enumerate(adj):
        tri = sum((adj[w] & row).bit_count() for w in bits(row)) // 2
        per_vertex.append((deg[v], tri, tuple(sorted(deg[w] for w in bits(row)))))
    return tuple(sorted(per_vertex))


def _to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def _augment(parents: list[Graph], keep: Callable[[Graph], bool] | None) -> list[Graph]:
    # every graph arises from deleting one of its minimum-degree vertices
    buckets: dict[tuple, list[tuple[Graph, nx.Graph]]] = {}
    out: list[Graph] = []
    for parent in parents:
        k = parent.n
        deg = parent.degrees()
        for s in range(1 << k):
            size = s.bit_count()
            if any(deg[u] + (s >> u & 1) < size for u in range(k)):
                continue
            adj = tuple(row | ((s >> u & 1) << k) for u, row in enumerate(parent.adj)) + (s,)
            g = Graph(k + 1, adj)
            if keep is not None and not keep(g):
                continue
            key = _invariant(adj)
            reps = buckets.setdefault(key, [])
            if reps:
                h = _to_nx(g)
                if any(nx.is_isomorphic(h, r) for _, r in reps):
                    continue
                reps.append((g, h))
            else:
                reps.append((g, _to_nx(g)))
            out.append(g)
    return out


def _levels(n: int, keep: Callable[[Graph], bool] | None) -> list[Graph]:
    level = [Graph(1, (0,))] if n >= 1 else [Graph(0, ())]
    for _ in range(1, n):
        level = _augment(level, keep)
    return sorted(level, key=lambda g: (g.num_edges, write_graph6(g)))


def all_graphs(n: int) -> list[Graph]:
    """One representative of every isomorphism class of graphs on ``n`` vertices."""
    return _levels(n, None)


def biconnected_graphs(n: int) -> list[Graph]:
    return [g for g in all_graphs(n) if is_two_connected(g)]


def claw_free_graphs(n: int) -> list[Graph]:
    """Isomorphism classes of claw-free graphs on ``n`` vertices (hereditary pruning)."""
    return _levels(n, is_claw_free)


def claw_free_biconnected_graphs(n: int) -> list[Graph]:
    return [g for g in claw_free_graphs(n) if is_two_connected(g)]


def bundled_corpus(name: str) -> list[Graph]:
    if name not in BUNDLED_CORPORA:
        raise KeyError(f"unknown corpus {name!r}; expected one of {BUNDLED_CORPORA}")
    text = resources.files("cyclesmith").joinpath(f"data/{name}.g6").read_text()
    return [g for _, g in read_graph6_lines(text.splitlines())]


def write_corpus(graphs: list[Graph], path: str | FsPath, manifest: dict) -> None:
    """Write graph6 lines plus a ``<path>.json`` sidecar manifest."""
    path = FsPath(path)
    path.write_text("".join(write_graph6(g) + "\n" for g in graphs))
    meta = dict(manifest, count=len(graphs), format="graph6")
    FsPath(str(path) + ".json").write_text(json.dumps(meta, indent=2, sort_keys=True) + "\n")
