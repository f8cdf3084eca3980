"""Brute-force ground truth.

Nothing here reuses the bitset DP code it is meant to check: traversal is
plain recursive backtracking over neighbor lists, and motif detection tests
every 4-subset against the two degree-sequence templates.
"""

from __future__ import annotations

from itertools import combinations

from .graph import Graph
from .motif import ClawWitness, ModifiedClawWitness
from .paths import Cycle, Path

ORACLE_CAP = 14
MOTIF_CAP = 16


class OracleCapExceeded(RuntimeError):
    pass


def _cap(g: Graph, cap: int) -> list[list[int]]:
    if g.n > cap:
        raise OracleCapExceeded(f"n={g.n} exceeds oracle cap {cap}")
    return [[w for w in range(g.n) if g.adj[v] >> w & 1] for v in range(g.n)]


def circumference(g: Graph) -> tuple[int, Cycle] | None:
    """Exact longest cycle length and one witness; None if ``g`` is a forest."""
    nbrs = _cap(g, ORACLE_CAP)
    best: list[int] = []
    on = [False] * g.n

    def extend(path: list[int], start: int) -> None:
        nonlocal best
        u = path[-1]
        for w in nbrs[u]:
            if w == start and len(path) >= 3 and len(path) > len(best):
                best = path[:]
            if w > start and not on[w]:
                on[w] = True
                path.append(w)
                extend(path, start)
                path.pop()
                on[w] = False

    for s in range(g.n):
        if len(best) >= g.n - s:
            break
        on[s] = True
        extend([s], s)
        on[s] = False
    if not best:
        return None
    return len(best), Cycle(tuple(best))


def brute_longest_path(g: Graph) -> Path:
    """Longest path by exhaustive backtracking; lexicographically least among ties."""
    nbrs = _cap(g, ORACLE_CAP)
    if g.n == 0:
        raise ValueError("the empty graph has no paths")
    best: list[int] = []
    on = [False] * g.n

    def extend(path: list[int]) -> None:
        nonlocal best
        if len(path) > len(best):
            best = path[:]
        for w in nbrs[path[-1]]:
            if not on[w]:
                on[w] = True
                path.append(w)
                extend(path)
                path.pop()
                on[w] = False

    for s in range(g.n):
        on[s] = True
        extend([s])
        on[s] = False
    return Path(tuple(best))


def is_hamiltonian(g: Graph) -> tuple[bool, Cycle | None]:
    nbrs = _cap(g, ORACLE_CAP)
    if g.n < 3:
        return False, None
    on = [False] * g.n
    on[0] = True

    def extend(path: list[int]) -> list[int] | None:
        u = path[-1]
        if len(path) == g.n:
            return path[:] if g.adj[u] & 1 else None
        for w in nbrs[u]:
            if not on[w]:
                on[w] = True
                path.append(w)
                found = extend(path)
                path.pop()
                on[w] = False
                if found:
                    return found
        return None

    cyc = extend([0])
    return (True, Cycle(tuple(cyc))) if cyc else (False, None)


def scan_motifs_naive(g: Graph) -> tuple[list[ClawWitness], list[ModifiedClawWitness]]:
    """Test every 4-vertex subset for an induced claw or modified claw."""
    _cap(g, MOTIF_CAP)
    claws = []
    mods = []
    for quad in combinations(range(g.n), 4):
        deg = {v: sum(1 for w in quad if w != v and g.has_edge(v, w)) for v in quad}
        edges = sum(deg.values()) // 2
        by_degree = sorted(quad, key=lambda v: (deg[v], v))
        profile = sorted(deg.values())
        if edges == 3 and profile == [1, 1, 1, 3]:
            center = by_degree[3]
            claws.append(ClawWitness(center, tuple(sorted(by_degree[:3]))))
        elif edges == 4 and profile == [1, 2, 2, 3]:
            pendant, b, c, attach = by_degree
            mods.append(ModifiedClawWitness(attach, min(b, c), max(b, c), pendant))
    return claws, mods
