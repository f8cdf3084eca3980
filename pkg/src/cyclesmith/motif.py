"""Induced claws and induced modified claws (a triangle plus a pendant edge)."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, bits

__all__ = [
    "ClawWitness",
    "ModifiedClawWitness",
    "enumerate_claws",
    "enumerate_modified_claws",
    "is_claw_free",
    "nonadjacent_pairs",
]


@dataclass(frozen=True, slots=True)
class ClawWitness:
    """Induced K_{1,3}: ``center`` joined to three pairwise nonadjacent leaves."""

    center: int
    leaves: tuple[int, int, int]

    @property
    def vertices(self) -> tuple[int, ...]:
        return (self.center, *self.leaves)

    def to_json(self) -> dict:
        return {"kind": "claw", "center": self.center, "leaves": list(self.leaves)}

    def is_valid(self, g: Graph) -> bool:
        a, b, c = self.leaves
        return (
            a < b < c
            and all(g.has_edge(self.center, x) for x in self.leaves)
            and not (g.has_edge(a, b) or g.has_edge(a, c) or g.has_edge(b, c))
        )


@dataclass(frozen=True, slots=True)
class ModifiedClawWitness:
    """Induced triangle ``{attach, b, c}`` with ``pendant`` joined to ``attach`` only."""

    attach: int
    b: int
    c: int
    pendant: int

    @property
    def vertices(self) -> tuple[int, ...]:
        return (self.attach, self.b, self.c, self.pendant)

    @property
    def triangle(self) -> tuple[int, int, int]:
        return (self.attach, self.b, self.c)

    def to_json(self) -> dict:
        return {
            "kind": "modified_claw",
            "attach": self.attach,
            "triangle": [self.attach, self.b, self.c],
            "pendant": self.pendant,
        }

    def is_valid(self, g: Graph) -> bool:
        a, b, c, p = self.attach, self.b, self.c, self.pendant
        return (
            b < c
            and g.has_edge(a, b) and g.has_edge(a, c) and g.has_edge(b, c)
            and g.has_edge(p, a)
            and not g.has_edge(p, b) and not g.has_edge(p, c)
        )


def enumerate_claws(g: Graph) -> list[ClawWitness]:
    """All induced claws, center-major then leaves lexicographic."""
    adj = g.adj
    out = []
    for v in range(g.n):
        nv = adj[v]
        if nv.bit_count() < 3:
            continue
        for a in bits(nv):
            rest_a = nv & ~adj[a] & ~((2 << a) - 1)
            for b in bits(rest_a):
                rest_b = rest_a & ~adj[b] & ~((2 << b) - 1)
                for c in bits(rest_b):
                    out.append(ClawWitness(v, (a, b, c)))
    return out


def enumerate_modified_claws(g: Graph) -> list[ModifiedClawWitness]:
    """All induced modified claws, ordered by (attach, b, c, pendant).

    Every induced copy contains exactly one triangle and the pendant touches
    exactly one of its vertices, so each copy is produced once.
    """
    adj = g.adj
    out = []
    for a in range(g.n):
        na = adj[a]
        if na.bit_count() < 3:
            continue
        for b in bits(na):
            for c in bits(na & adj[b] & ~((2 << b) - 1)):
                pend = na & ~adj[b] & ~adj[c] & ~(1 << b) & ~(1 << c)
                for p in bits(pend):
                    out.append(ModifiedClawWitness(a, b, c, p))
    return out


def is_claw_free(g: Graph) -> bool:
    adj = g.adj
    for v in range(g.n):
        nv = adj[v]
        if nv.bit_count() < 3:
            continue
        for a in bits(nv):
            rest_a = nv & ~adj[a] & ~((2 << a) - 1)
            for b in bits(rest_a):
                if rest_a & ~adj[b] & ~((2 << b) - 1):
                    return False
    return True


def nonadjacent_pairs(w: ClawWitness | ModifiedClawWitness) -> list[tuple[int, int]]:
    """The vertex pairs of the motif that are not edges."""
    if isinstance(w, ClawWitness):
        a, b, c = w.leaves
        return [(a, b), (a, c), (b, c)]
    return [(w.pendant, w.b), (w.pendant, w.c)]
