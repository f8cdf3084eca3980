"""Hypothesis checkers for four long-cycle theorems, with violation witnesses.

``fan``   every pair at distance two has max degree >= c/2.
``bcs``   every nonadjacent pair inside an induced claw or induced modified
          claw has max degree >= c/2.
``shi``   claw-free, and every pair at distance two has >= 2 common neighbors.
``thm4``  claw pairs satisfy the degree bound, and modified-claw pairs have
          >= 2 common neighbors.

The bound max{d(u), d(v)} >= c/2 is always tested as ``2 * d >= c`` in
integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .graph import Graph, bits, distance
from .motif import (
    ClawWitness,
    ModifiedClawWitness,
    enumerate_claws,
    enumerate_modified_claws,
    nonadjacent_pairs,
)

__all__ = [
    "THEOREMS",
    "HypothesisReport",
    "Violation",
    "check",
    "check_fan",
    "check_bcs",
    "check_shi",
    "check_thm4",
    "validate_target",
]

THEOREMS = ("fan", "bcs", "shi", "thm4")

Motif = ClawWitness | ModifiedClawWitness


def validate_target(c: int) -> int:
    if isinstance(c, bool) or not isinstance(c, int):
        raise TypeError(f"cycle target must be an int, got {type(c).__name__}")
    if c < 3:
        raise ValueError(f"cycle target must be >= 3, got {c}")
    return c


@dataclass(frozen=True)
class Violation:
    """A concrete pair (or claw) showing that a hypothesis fails.

    kind is one of ``distance2_degree``, ``claw_degree``,
    ``modified_claw_degree``, ``modified_claw_common``, ``claw`` (a
    claw-freeness failure) and ``distance2_common``.
    """

    kind: str
    vertices: tuple[int, ...]
    motif: Motif | None = None
    degrees: tuple[int, int] | None = None
    common_neighbor_count: int | None = None

    @property
    def clause(self) -> str | None:
        """Which clause of the thm4 hypothesis this refutes, if any."""
        if self.kind == "claw_degree":
            return "a"
        if self.kind == "modified_claw_common":
            return "b"
        return None

    def to_json(self) -> dict:
        out: dict = {"kind": self.kind, "vertices": list(self.vertices)}
        if self.motif is not None:
            out["motif"] = self.motif.to_json()
        if self.degrees is not None:
            out["degrees"] = list(self.degrees)
        if self.common_neighbor_count is not None:
            out["commonNeighborCount"] = self.common_neighbor_count
        return out

    def recheck(self, g: Graph, c: int | None) -> bool:
        """True if this violation is genuine on ``g``."""
        if self.kind == "claw":
            return isinstance(self.motif, ClawWitness) and self.motif.is_valid(g)
        u, v = self.vertices
        if g.has_edge(u, v):
            return False
        if self.kind.startswith("distance2"):
            if distance(g, u, v) != 2:
                return False
        else:
            if self.motif is None or not self.motif.is_valid(g):
                return False
            if (min(u, v), max(u, v)) not in {tuple(sorted(p)) for p in nonadjacent_pairs(self.motif)}:
                return False
        if self.kind.endswith("_degree"):
            du, dv = g.adj[u].bit_count(), g.adj[v].bit_count()
            return self.degrees == (du, dv) and c is not None and 2 * max(du, dv) < c
        count = (g.adj[u] & g.adj[v]).bit_count()
        return self.common_neighbor_count == count and count < 2


@dataclass(frozen=True)
class HypothesisReport:
    theorem: str
    c: int | None
    holds: bool
    violation: Violation | None = None

    def __post_init__(self) -> None:
        if self.holds == (self.violation is not None):
            raise ValueError("holds must be False exactly when a violation is present")

    @property
    def failed_clause(self) -> str | None:
        return None if self.violation is None else self.violation.clause

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem,
            "c": self.c,
            "holds": self.holds,
            "violation": None if self.violation is None else self.violation.to_json(),
        }


def _pair(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@lru_cache(maxsize=8192)
def _distance2_pairs(g: Graph) -> tuple[tuple[int, int], ...]:
    out = []
    for u in range(g.n):
        two_step = 0
        for w in bits(g.adj[u]):
            two_step |= g.adj[w]
        two_step &= ~g.adj[u] & ~((2 << u) - 1)
        out.extend((u, v) for v in bits(two_step))
    return tuple(out)


@lru_cache(maxsize=8192)
def _motif_pairs(g: Graph, which: str) -> tuple[tuple[tuple[int, int], Motif], ...]:
    """Distinct nonadjacent motif pairs, each with the first motif containing it."""
    motifs: list[Motif] = []
    if which in ("claw", "both"):
        motifs.extend(enumerate_claws(g))
    if which in ("modified", "both"):
        motifs.extend(enumerate_modified_claws(g))
    seen: dict[tuple[int, int], Motif] = {}
    for m in motifs:
        for u, v in nonadjacent_pairs(m):
            seen.setdefault(_pair(u, v), m)
    return tuple(seen.items())


def _degree_violation(g: Graph, c: int, u: int, v: int) -> tuple[int, int] | None:
    du, dv = g.adj[u].bit_count(), g.adj[v].bit_count()
    if 2 * max(du, dv) < c:
        return du, dv
    return None


def check_fan(g: Graph, c: int) -> HypothesisReport:
    validate_target(c)
    for u, v in _distance2_pairs(g):
        degs = _degree_violation(g, c, u, v)
        if degs:
            return HypothesisReport("fan", c, False, Violation("distance2_degree", (u, v), degrees=degs))
    return HypothesisReport("fan", c, True)


def check_bcs(g: Graph, c: int) -> HypothesisReport:
    validate_target(c)
    for (u, v), motif in _motif_pairs(g, "both"):
        degs = _degree_violation(g, c, u, v)
        if degs:
            kind = "claw_degree" if isinstance(motif, ClawWitness) else "modified_claw_degree"
            return HypothesisReport("bcs", c, False, Violation(kind, (u, v), motif, degrees=degs))
    return HypothesisReport("bcs", c, True)


def check_shi(g: Graph) -> HypothesisReport:
    claws = enumerate_claws(g)
    if claws:
        w = claws[0]
        return HypothesisReport("shi", None, False, Violation("claw", w.vertices, w))
    for u, v in _distance2_pairs(g):
        count = (g.adj[u] & g.adj[v]).bit_count()
        if count < 2:
            return HypothesisReport(
                "shi", None, False,
                Violation("distance2_common", (u, v), common_neighbor_count=count),
            )
    return HypothesisReport("shi", None, True)


def check_thm4(g: Graph, c: int) -> HypothesisReport:
    validate_target(c)
    for (u, v), motif in _motif_pairs(g, "claw"):
        degs = _degree_violation(g, c, u, v)
        if degs:
            return HypothesisReport("thm4", c, False, Violation("claw_degree", (u, v), motif, degrees=degs))
    for (u, v), motif in _motif_pairs(g, "modified"):
        count = (g.adj[u] & g.adj[v]).bit_count()
        if count < 2:
            return HypothesisReport(
                "thm4", c, False,
                Violation("modified_claw_common", (u, v), motif, common_neighbor_count=count),
            )
    return HypothesisReport("thm4", c, True)


def check(g: Graph, theorem: str, c: int | None = None) -> HypothesisReport:
    """Dispatch by theorem name; ``c`` is ignored for ``shi``."""
    if theorem == "shi":
        return check_shi(g)
    if theorem not in THEOREMS:
        raise ValueError(f"unknown theorem {theorem!r}; expected one of {THEOREMS}")
    if c is None:
        raise ValueError(f"theorem {theorem!r} needs a cycle target c")
    return {"fan": check_fan, "bcs": check_bcs, "thm4": check_thm4}[theorem](g, c)
