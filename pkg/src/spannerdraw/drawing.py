"""The Drawing value type: a graph plus exact rational coordinates."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graph import Graph

Point = tuple[Fraction, Fraction]


@dataclass(frozen=True)
class Drawing:
    """A straight-line drawing: every vertex mapped to an exact rational point."""

    graph: Graph
    coords: tuple[Point, ...]

    def __post_init__(self):
        assert len(self.coords) == self.graph.n
        for x, y in self.coords:
            assert isinstance(x, Fraction) and isinstance(y, Fraction)

    @staticmethod
    def of(graph: Graph, coords) -> "Drawing":
        return Drawing(
            graph,
            tuple((Fraction(x), Fraction(y)) for x, y in coords),
        )
