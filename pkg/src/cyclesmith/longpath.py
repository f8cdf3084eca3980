"""Exact longest paths and the end-degree rotation engine.

The engine takes a longest path ``v_1 .. v_m`` whose free end ``v_1`` has
``2 * d(v_1) < c`` and applies length-preserving rotations that keep
``v_m`` fixed. Each rotation strictly increases ``t(P)``, the largest index
``j`` with ``v_1 v_j`` an edge, so the loop ends in at most ``m`` steps,
either with a free end of degree at least ``c/2`` or with a concrete
violation of the claw / modified-claw hypothesis.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import lru_cache

from .graph import Graph, bits, is_two_connected
from .hypothesis import Violation, validate_target
from .motif import ClawWitness, ModifiedClawWitness
from .paths import Cycle, Path

__all__ = [
    "DEFAULT_MAX_N",
    "DP_LIMIT",
    "SizeCapExceeded",
    "PreconditionError",
    "HypothesisViolation",
    "TraceStep",
    "RotationTrace",
    "Finished",
    "Rotated",
    "StepViolation",
    "HamiltonCycle",
    "LongerPathFound",
    "ImproveResult",
    "size_cap",
    "longest_path",
    "longest_path_ending_at",
    "longest_path_length",
    "t_of",
    "lemma2_step",
    "lemma2_improve",
]

DEFAULT_MAX_N = 18
# subset DP up to here, branch and bound above
DP_LIMIT = 16

RULES = (
    "Claim1-HamiltonBranch",
    "Claim2-Claw-Finish",
    "Claim2-Chord-Rotate",
    "Claim3-PickCommonNeighbor",
    "Claim3-ChordRotate",
    "Claim3-Claw-Finish",
    "Claim3-ModClaw-Rotate",
)


class SizeCapExceeded(RuntimeError):
    pass


class PreconditionError(ValueError):
    """The input path or graph does not meet the engine's preconditions."""


class HypothesisViolation(Exception):
    """Raised by :func:`lemma2_improve` when a rotation exposes a failing pair."""

    def __init__(self, violation: Violation, trace: RotationTrace):
        super().__init__(f"hypothesis violated: {violation.kind} on {violation.vertices}")
        self.violation = violation
        self.trace = trace


def size_cap(max_n: int | None = None) -> int:
    if max_n is not None:
        return max_n
    env = os.environ.get("CYCLESMITH_MAX_N")
    return int(env) if env else DEFAULT_MAX_N


def _check_cap(g: Graph, max_n: int | None) -> None:
    cap = size_cap(max_n)
    if g.n > cap:
        raise SizeCapExceeded(f"n={g.n} exceeds the exact-search cap {cap}")


# exact longest paths


@lru_cache(maxsize=4096)
def _reach_table(g: Graph) -> tuple[int, ...]:
    """``reach[mask]`` = bitset of vertices ending a path whose vertex set is ``mask``."""
    reach = [0] * (1 << g.n)
    adj = g.adj
    for v in range(g.n):
        reach[1 << v] = 1 << v
    for mask in range(1, 1 << g.n):
        ends = reach[mask]
        if not ends:
            continue
        for v in bits(ends):
            for w in bits(adj[v] & ~mask):
                reach[mask | 1 << w] |= 1 << w
    return tuple(reach)


def _dp_length(g: Graph) -> int:
    reach = _reach_table(g)
    return max((m.bit_count() for m in range(1, 1 << g.n) if reach[m]), default=0)


def _dp_lexmin(g: Graph, length: int, end: int | None) -> tuple[int, ...] | None:
    """Lexicographically least path with ``length`` vertices (ending at ``end``)."""
    adj = g.adj
    memo: dict[tuple[int, int], bool] = {}

    def completes(mask: int, u: int) -> bool:
        key = (mask, u)
        hit = memo.get(key)
        if hit is not None:
            return hit
        k = mask.bit_count()
        if k == length:
            ok = end is None or u == end
        elif end is not None and mask >> end & 1:
            ok = False
        else:
            ok = any(completes(mask | 1 << w, w) for w in bits(adj[u] & ~mask))
        memo[key] = ok
        return ok

    for s in range(g.n):
        if completes(1 << s, s):
            seq = [s]
            mask = 1 << s
            while len(seq) < length:
                for w in bits(adj[seq[-1]] & ~mask):
                    if completes(mask | 1 << w, w):
                        seq.append(w)
                        mask |= 1 << w
                        break
            return tuple(seq)
    return None


def _reachable_count(adj: tuple[int, ...], u: int, free: int) -> int:
    seen = 1 << u
    frontier = seen
    while frontier:
        nxt = 0
        for w in bits(frontier):
            nxt |= adj[w]
        frontier = nxt & free & ~seen
        seen |= frontier
    return seen.bit_count()


def _bnb_lexmin(g: Graph, length: int | None, end: int | None) -> tuple[int, ...] | None:
    """Depth-first search in lexicographic order with a reachability bound.

    With ``length=None`` this finds the maximum length first; the first path
    met at a given length in lexicographic DFS order is the least one.
    """
    adj = g.adj
    full = (1 << g.n) - 1
    best: list[int] = []
    target = length

    def dfs(seq: list[int], mask: int) -> bool:
        nonlocal best
        u = seq[-1]
        if target is not None:
            if len(seq) == target:
                if end is None or u == end:
                    best = list(seq)
                    return True
                return False
            if end is not None and mask >> end & 1:
                return False
            if len(seq) - 1 + _reachable_count(adj, u, full & ~mask) < target:
                return False
        else:
            if len(seq) > len(best):
                best = list(seq)
                if len(best) == g.n:
                    return True
            if len(seq) - 1 + _reachable_count(adj, u, full & ~mask) <= len(best):
                return False
        for w in bits(adj[u] & ~mask):
            seq.append(w)
            if dfs(seq, mask | 1 << w):
                return True
            seq.pop()
        return False

    for s in range(g.n):
        if dfs([s], 1 << s):
            break
    if target is not None and len(best) != target:
        return None
    return tuple(best) if best else None


@lru_cache(maxsize=4096)
def _longest_length(g: Graph) -> int:
    if g.n == 0:
        return 0
    if g.n <= DP_LIMIT:
        return _dp_length(g)
    return len(_bnb_lexmin(g, None, None))


def longest_path_length(g: Graph, max_n: int | None = None) -> int:
    """Vertex count of a longest path."""
    _check_cap(g, max_n)
    return _longest_length(g)


@lru_cache(maxsize=4096)
def _cached_longest(g: Graph, end: int | None) -> tuple[int, ...] | None:
    length = _longest_length(g)
    if g.n <= DP_LIMIT:
        return _dp_lexmin(g, length, end)
    return _bnb_lexmin(g, length, end)


def longest_path(g: Graph, max_n: int | None = None) -> Path:
    """A longest path; the lexicographically least vertex sequence among them."""
    _check_cap(g, max_n)
    if g.n == 0:
        raise ValueError("the empty graph has no paths")
    return Path(_cached_longest(g, None))


def longest_path_ending_at(g: Graph, v: int, max_n: int | None = None) -> Path | None:
    """A globally longest path whose last vertex is ``v``, or None if none ends there."""
    _check_cap(g, max_n)
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    seq = _cached_longest(g, v)
    return None if seq is None else Path(seq)


def t_of(g: Graph, p: Path) -> int:
    """1-based index of the farthest path vertex adjacent to ``v_1``."""
    if len(p) < 2:
        raise ValueError("t(P) needs a path with at least two vertices")
    row = g.adj[p[0]]
    for j in range(len(p) - 1, 0, -1):
        if row >> p[j] & 1:
            return j + 1
    raise PreconditionError(f"{p.vertices} is not a path: v_1 has no neighbor on it")


# rotation engine


@dataclass(frozen=True)
class TraceStep:
    rule: str
    t_before: int
    t_after: int
    path_after: Path

    def to_json(self) -> dict:
        return {
            "rule": self.rule,
            "tBefore": self.t_before,
            "tAfter": self.t_after,
            "pathAfter": list(self.path_after.vertices),
        }


@dataclass
class RotationTrace:
    steps: list[TraceStep] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    def to_json(self) -> list[dict]:
        return [s.to_json() for s in self.steps]


@dataclass(frozen=True)
class Finished:
    path: Path
    rule: str
    picked: tuple[int, ...] = ()


@dataclass(frozen=True)
class Rotated:
    path: Path
    rule: str
    picked: tuple[int, ...] = ()


@dataclass(frozen=True)
class StepViolation:
    violation: Violation
    rule: str


@dataclass(frozen=True)
class HamiltonCycle:
    cycle: Cycle
    rule: str = "Claim1-HamiltonBranch"


@dataclass(frozen=True)
class LongerPathFound:
    path: Path
    rule: str = "Claim1-HamiltonBranch"


StepOutcome = Finished | Rotated | StepViolation | HamiltonCycle | LongerPathFound


def _deg(g: Graph, v: int) -> int:
    return g.adj[v].bit_count()


def _unroll(g: Graph, p: Path) -> Path | None:
    """Close ``p`` into a cycle and leave it through an outside neighbor."""
    on_path = 0
    for v in p:
        on_path |= 1 << v
    for k, x in enumerate(p):
        outside = g.adj[x] & ~on_path
        if outside:
            y = (outside & -outside).bit_length() - 1
            return Path((y,) + p[k:] + p[:k])
    return None


def lemma2_step(g: Graph, p: Path, c: int) -> StepOutcome:
    """Apply one branch of the rotation decision tree to ``p``.

    ``p`` must be a longest path whose first vertex has ``2 * d < c``.
    Indices below are 1-based as in ``v_1 .. v_m``; ``t`` is :func:`t_of`.
    """
    validate_target(c)
    p.require_valid(g)
    m = len(p)
    v1, vm = p[0], p[-1]
    if 2 * _deg(g, v1) >= c:
        raise PreconditionError(f"free end {v1} already has degree >= c/2")
    if m < 3:
        raise PreconditionError("a longest path in a 2-connected graph has >= 3 vertices")

    def v(i: int) -> int:
        return p[i - 1]

    # (0) closing edge: Hamilton cycle, or a longer path through the cycle
    if g.has_edge(v1, vm):
        if m == g.n:
            return HamiltonCycle(Cycle(p.vertices))
        longer = _unroll(g, p)
        if longer is None:
            raise PreconditionError("graph is disconnected: no edge leaves the path's vertex set")
        return LongerPathFound(longer)

    t = t_of(g, p)
    if t < 3:
        raise PreconditionError(
            f"free end {v1} has a single neighbor on a longest path; graph is not 2-connected"
        )
    a, center, b = v(t - 1), v(t), v(t + 1)
    # prefix v_1..v_{t-1} reversed, then v_t..v_m
    chord_rotation = Path(p[: t - 1][::-1] + p[t - 1:])

    # (2) induced claw centered at v_t with leaves v_1, v_{t-1}, v_{t+1}
    if not g.has_edge(v1, a) and not g.has_edge(a, b):
        if 2 * _deg(g, a) >= c:
            return Finished(chord_rotation, "Claim2-Claw-Finish")
        leaves = tuple(sorted((v1, a, b)))
        return StepViolation(
            Violation("claw_degree", (v1, a), ClawWitness(center, leaves), degrees=(_deg(g, v1), _deg(g, a))),
            "Claim2-Claw-Finish",
        )

    # (3) chord v_{t-1} v_{t+1}
    if g.has_edge(a, b):
        return Rotated(chord_rotation, "Claim2-Chord-Rotate")

    # (4) v_1 v_{t-1} is an edge: triangle {v_1, v_{t-1}, v_t} with pendant v_{t+1}
    common = g.adj[v1] & g.adj[b]
    if common.bit_count() < 2:
        lo, hi = sorted((v1, a))
        return StepViolation(
            Violation(
                "modified_claw_common", (v1, b), ModifiedClawWitness(center, lo, hi, b),
                common_neighbor_count=common.bit_count(),
            ),
            "Claim3-PickCommonNeighbor",
        )
    i = next((k for k in range(2, t - 1) if common >> v(k) & 1), None)
    if i is None:
        raise PreconditionError("v_1 has a neighbor off the path; the path is not longest")
    vi, vi1 = v(i), v(i + 1)

    # (4a) chord v_1 v_{i+1}
    if g.has_edge(v1, vi1):
        return Rotated(Path(p[:i][::-1] + p[i:]), "Claim3-ChordRotate", (vi,))

    # v_{i+1} .. v_t, v_1 .. v_i, v_{t+1} .. v_m
    splice = Path(p[i:t] + p[:i] + p[t:])
    # (4b) induced claw centered at v_i with leaves v_1, v_{i+1}, v_{t+1}
    if not g.has_edge(vi1, b):
        if 2 * _deg(g, vi1) >= c:
            return Finished(splice, "Claim3-Claw-Finish", (vi,))
        leaves = tuple(sorted((v1, vi1, b)))
        return StepViolation(
            Violation("claw_degree", (v1, vi1), ClawWitness(vi, leaves), degrees=(_deg(g, v1), _deg(g, vi1))),
            "Claim3-Claw-Finish",
        )
    # (4c) {v_1, v_i, v_{i+1}, v_{t+1}} is a modified claw
    return Rotated(splice, "Claim3-ModClaw-Rotate", (vi,))


@dataclass(frozen=True)
class ImproveResult:
    """Outcome of :func:`lemma2_improve`.

    ``path`` is a longest path ending at the original fixed end whose free
    end meets the degree bound; when the engine closes a Hamilton cycle
    instead, ``hamilton`` holds it and ``path`` is the path it came from.
    """

    path: Path
    trace: RotationTrace
    hamilton: Cycle | None = None


def lemma2_improve(g: Graph, p: Path, c: int, max_n: int | None = None) -> ImproveResult:
    """Rotate ``p`` until its free end has degree >= c/2, keeping ``p[-1]`` fixed.

    Raises :class:`HypothesisViolation` when the claw / modified-claw
    hypothesis fails along the way, :class:`PreconditionError` if ``g`` is
    not 2-connected or ``p`` is not a longest path ending at its last vertex.
    """
    validate_target(c)
    _check_cap(g, max_n)
    p.require_valid(g)
    if not is_two_connected(g):
        raise PreconditionError("lemma2_improve needs a 2-connected graph")
    trace = RotationTrace()
    fixed = p.last
    rotations = 0
    while 2 * _deg(g, p.first) < c:
        t_before = t_of(g, p) if len(p) >= 2 else 1
        out = lemma2_step(g, p, c)
        if isinstance(out, StepViolation):
            raise HypothesisViolation(out.violation, trace)
        if isinstance(out, HamiltonCycle):
            trace.steps.append(TraceStep(out.rule, t_before, t_before, p))
            return ImproveResult(p, trace, out.cycle)
        if isinstance(out, LongerPathFound):
            # the input was not a longest path; restart from one ending at the fixed end
            trace.steps.append(TraceStep(out.rule, t_before, t_before, out.path))
            q = longest_path_ending_at(g, fixed, max_n)
            if q is None:
                raise PreconditionError(
                    f"found a path with {len(out.path)} vertices; no longest path ends at {fixed}"
                )
            p = q
            rotations = 0
            continue
        new = out.path
        if len(new) != len(p) or new.last != fixed:
            raise PreconditionError("rotation changed the path length or the fixed end")
        new.require_valid(g)
        t_after = t_of(g, new)
        if out.picked:
            trace.steps.append(TraceStep("Claim3-PickCommonNeighbor", t_before, t_before, p))
        trace.steps.append(TraceStep(out.rule, t_before, t_after, new))
        if isinstance(out, Finished):
            return ImproveResult(new, trace)
        if t_after <= t_before:
            raise AssertionError(f"rotation {out.rule} did not increase t ({t_before} -> {t_after})")
        p = new
        rotations += 1
        if rotations > len(p):
            raise AssertionError("rotation loop exceeded m steps")
    return ImproveResult(p, trace)
