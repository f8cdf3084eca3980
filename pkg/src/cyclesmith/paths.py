"""Path and cycle value types."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph


class InvalidPathError(ValueError):
    pass


@dataclass(frozen=True, slots=True)
class Path:
    """Vertex sequence v_1..v_m; ``first`` is the free end, ``last`` the fixed one."""

    vertices: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.vertices:
            raise InvalidPathError("a path has at least one vertex")
        if len(set(self.vertices)) != len(self.vertices):
            raise InvalidPathError(f"repeated vertex in path {self.vertices}")

    @classmethod
    def of(cls, vertices) -> Path:
        return cls(tuple(vertices))

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __getitem__(self, i):
        return self.vertices[i]

    @property
    def m(self) -> int:
        return len(self.vertices)

    @property
    def first(self) -> int:
        return self.vertices[0]

    @property
    def last(self) -> int:
        return self.vertices[-1]

    def reversed(self) -> Path:
        return Path(self.vertices[::-1])

    def is_valid(self, g: Graph) -> bool:
        vs = self.vertices
        return all(0 <= v < g.n for v in vs) and all(
            g.has_edge(vs[k], vs[k + 1]) for k in range(len(vs) - 1)
        )

    def require_valid(self, g: Graph) -> None:
        if not self.is_valid(g):
            raise InvalidPathError(f"{self.vertices} is not a path of {g!r}")


@dataclass(frozen=True, slots=True)
class Cycle:
    """Cyclic vertex sequence; the wrap edge last -> first is implied."""

    vertices: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.vertices) < 3:
            raise InvalidPathError("a cycle has at least three vertices")
        if len(set(self.vertices)) != len(self.vertices):
            raise InvalidPathError(f"repeated vertex in cycle {self.vertices}")

    @classmethod
    def of(cls, vertices) -> Cycle:
        return cls(tuple(vertices))

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def length(self) -> int:
        return len(self.vertices)

    def is_valid(self, g: Graph) -> bool:
        vs = self.vertices
        return all(0 <= v < g.n for v in vs) and all(
            g.has_edge(vs[k - 1], vs[k]) for k in range(len(vs))
        )

    def require_valid(self, g: Graph) -> None:
        if not self.is_valid(g):
            raise InvalidPathError(f"{self.vertices} is not a cycle of {g!r}")
