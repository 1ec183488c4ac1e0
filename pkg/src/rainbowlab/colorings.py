"""Edge colorings: data model, canonical relabeling and color queries."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DomainError, StructuralError
from .graphs import GraphSpec, incident_edges


@dataclass(frozen=True)
class Coloring:
    """A color id for every edge of ``spec``, indexed by edge id."""

    spec: GraphSpec
    colors: tuple[int, ...]

    def __init__(self, spec: GraphSpec, colors: Iterable[int]):
        colors = tuple(int(c) for c in colors)
        if len(colors) != spec.edge_count:
            raise StructuralError(
                f"{spec} has {spec.edge_count} edges but {len(colors)} colors were given")
        if any(c < 0 for c in colors):
            raise StructuralError("color ids must be nonnegative")
        object.__setattr__(self, "spec", spec)
        object.__setattr__(self, "colors", colors)

    def __len__(self) -> int:
        return len(self.colors)

    def __getitem__(self, e: int) -> int:
        return self.colors[e]

    @property
    def num_colors(self) -> int:
        return len(set(self.colors))

    def is_canonical(self) -> bool:
        return self.colors == canonical_colors(self.colors)

    def is_proper(self) -> bool:
        """True when no two incident edges share a color."""
        return all(len(vertex_palette(self, x)) == self.spec.degree(x)
                   for x in self.spec.vertices())


def canonical_colors(colors: Sequence[int]) -> tuple[int, ...]:
    relabel: dict[int, int] = {}
    return tuple(relabel.setdefault(c, len(relabel)) for c in colors)


def canonicalize(c: Coloring) -> Coloring:
    """Relabel colors in order of first occurrence along edge ids."""
    return Coloring(c.spec, canonical_colors(c.colors))


def color_classes(c: Coloring) -> list[frozenset[int]]:
    """Color classes ordered by their smallest edge id."""
    classes: dict[int, list[int]] = {}
    for e, col in enumerate(c.colors):
        classes.setdefault(col, []).append(e)
    return [frozenset(es) for es in classes.values()]


def colors_on(c: Coloring, edges: Iterable[int]) -> int:
    """Number of distinct colors on ``edges`` (0 for the empty set)."""
    m = len(c.colors)
    seen = set()
    for e in edges:
        if not 0 <= e < m:
            raise DomainError(f"edge id {e} out of range for {c.spec}")
        seen.add(c.colors[e])
    return len(seen)


def vertex_palette(c: Coloring, x: int) -> set[int]:
    c.spec.check_vertex(x)
    return {c.colors[e] for e in incident_edges(c.spec)[x]}
