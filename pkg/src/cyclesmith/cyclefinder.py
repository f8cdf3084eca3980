"""Cycle extraction from a longest path and the end-to-end long-cycle driver."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .graph import Graph, bits, is_two_connected
from .hypothesis import HypothesisReport, check_thm4, validate_target
from .longpath import (
    HypothesisViolation,
    RotationTrace,
    SizeCapExceeded,
    _check_cap,
    lemma2_improve,
    longest_path,
)
from .paths import Cycle, Path

__all__ = [
    "TheoremCounterexample",
    "FindResult",
    "cycle_from_path",
    "longest_cycle",
    "find_long_cycle",
]


class TheoremCounterexample(AssertionError):
    """A guarantee that should be unconditional failed on a concrete input."""

    def __init__(self, message: str, graph: Graph, c: int | None = None):
        super().__init__(message)
        self.graph = graph
        self.c = c


@lru_cache(maxsize=4096)
def _longest_cycle(g: Graph) -> tuple[int, ...] | None:
    # cycles are rooted at their least vertex s; DP over subsets of vertices >= s
    best: tuple[int, ...] | None = None
    adj = g.adj
    for s in range(g.n - 2):
        if best is not None and len(best) >= g.n - s:
            break
        allowed = ~((1 << s) - 1)
        reach: dict[int, int] = {1 << s: 1 << s}
        parent: dict[tuple[int, int], int] = {}
        for size in range(1, g.n - s):
            layer = {}
            for mask, ends in reach.items():
                for v in bits(ends):
                    for w in bits(adj[v] & allowed & ~mask):
                        nm = mask | 1 << w
                        if not layer.get(nm, 0) >> w & 1:
                            layer[nm] = layer.get(nm, 0) | 1 << w
                            parent[(nm, w)] = v
            if not layer:
                break
            reach = layer
            length = size + 1
            if length < 3 or (best is not None and length <= len(best)):
                continue
            for mask, ends in reach.items():
                closing = ends & adj[s]
                if closing:
                    v = (closing & -closing).bit_length() - 1
                    seq = [v]
                    cur = mask
                    while v != s:
                        prev = parent[(cur, v)]
                        cur &= ~(1 << v)
                        v = prev
                        seq.append(v)
                    best = tuple(reversed(seq))
                    break
    return best


def longest_cycle(g: Graph, max_n: int | None = None) -> Cycle | None:
    """A maximum-length cycle by subset DP, or None for a forest."""
    _check_cap(g, max_n)
    seq = _longest_cycle(g)
    return None if seq is None else Cycle(seq)


def _crossing_cycle(g: Graph, p: Path) -> Cycle | None:
    """Cycle on V(p) from the closing edge or a crossing pair v_1 v_{i+1}, v_i v_m."""
    vs = p.vertices
    x, y = vs[0], vs[-1]
    if len(vs) >= 3 and g.has_edge(x, y):
        return Cycle(vs)
    for i in range(1, len(vs) - 1):
        if g.has_edge(x, vs[i + 1]) and g.has_edge(vs[i], y):
            # v_1 .. v_i, v_m, v_{m-1} .. v_{i+1}
            return Cycle(vs[: i + 1] + vs[i + 1:][::-1])
    return None


def cycle_from_path(g: Graph, p: Path, max_n: int | None = None) -> Cycle:
    """A cycle of length >= min(n, d(x) + d(y)) for a longest path with ends x, y.

    Tries the crossing-chord cycle on V(p) first and falls back to an exact
    longest-cycle search. Raises :class:`TheoremCounterexample` if even the
    longest cycle misses the bound.
    """
    p.require_valid(g)
    bound = min(g.n, g.adj[p.first].bit_count() + g.adj[p.last].bit_count())
    fast = _crossing_cycle(g, p)
    if fast is not None and fast.length >= bound:
        return fast
    best = longest_cycle(g, max_n)
    if best is None or best.length < bound:
        got = 0 if best is None else best.length
        raise TheoremCounterexample(
            f"longest cycle has length {got} < min(n, d(x)+d(y)) = {bound} for path {p.vertices}", g
        )
    return best


@dataclass
class FindResult:
    """Outcome of :func:`find_long_cycle`.

    kind is ``hamilton``, ``long_cycle``, ``hypothesis_failed``,
    ``not_two_connected`` or ``size_cap_exceeded``.
    """

    kind: str
    c: int
    cycle: Cycle | None = None
    report: HypothesisReport | None = None
    path: Path | None = None
    traces: list[RotationTrace] = field(default_factory=list)

    @property
    def length(self) -> int | None:
        return None if self.cycle is None else self.cycle.length

    def to_json(self, trace: bool = False) -> dict:
        out: dict = {"result": self.kind, "c": self.c}
        if self.cycle is not None:
            out["cycle"] = list(self.cycle.vertices)
            out["achievedLength"] = self.cycle.length
        if self.report is not None:
            out["report"] = self.report.to_json()
        if trace:
            out["traces"] = [t.to_json() for t in self.traces]
        return out


def find_long_cycle(g: Graph, c: int, max_n: int | None = None) -> FindResult:
    """Return a Hamilton cycle or a cycle of length >= c, or say why not.

    Pipeline: 2-connectivity guard, hypothesis check, longest path, rotate
    the free end to degree >= c/2, reverse and rotate the other end, then
    extract a cycle from the path.
    """
    validate_target(c)
    if not is_two_connected(g):
        return FindResult("not_two_connected", c)
    report = check_thm4(g, c)
    if not report.holds:
        return FindResult("hypothesis_failed", c, report=report)
    try:
        _check_cap(g, max_n)
    except SizeCapExceeded:
        return FindResult("size_cap_exceeded", c, report=report)

    p = longest_path(g, max_n)
    if len(p) == g.n and g.has_edge(p.first, p.last):
        return FindResult("hamilton", c, Cycle(p.vertices), report, p)

    traces = []
    for _ in range(2):
        try:
            res = lemma2_improve(g, p, c, max_n)
        except HypothesisViolation as exc:
            raise TheoremCounterexample(
                f"rotation engine hit {exc.violation.kind} on {exc.violation.vertices} "
                "although the hypothesis holds", g, c,
            ) from exc
        traces.append(res.trace)
        if res.hamilton is not None:
            return FindResult("hamilton", c, res.hamilton, report, res.path, traces)
        p = res.path.reversed()
    p = p.reversed()

    if 2 * g.adj[p.first].bit_count() < c or 2 * g.adj[p.last].bit_count() < c:
        raise TheoremCounterexample(f"path {p.vertices} does not have both ends of degree >= c/2", g, c)
    cycle = cycle_from_path(g, p, max_n)
    cycle.require_valid(g)
    if cycle.length == g.n:
        return FindResult("hamilton", c, cycle, report, p, traces)
    if cycle.length < c:
        raise TheoremCounterexample(f"cycle of length {cycle.length} < c={c} and not Hamilton", g, c)
    return FindResult("long_cycle", c, cycle, report, p, traces)
