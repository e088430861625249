"""Piecewise-linear models of patterns: maps, covering graphs, and germs.

A pattern of period n determines the connect-the-dots map on [1, n] that
sends i to pi(i) and is affine on every basic interval J_i = [i, i+1].  The
covering graph records which basic intervals each image stretches across;
closed walks in it are the raw material for orbit realization.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .patterns import Pattern, PatternError, is_convergent


class DivergentPatternError(ValueError):
    """Raised when an operation needs the single-fixed-point (convergent) case."""


LEFT = "L"
RIGHT = "R"


class Germ(NamedTuple):
    """A one-sided neighborhood of an orbit point: the point plus a side."""

    point: int
    side: str


class PLinearMap:
    """The connect-the-dots map of a pattern, evaluated exactly."""

    def __init__(self, pattern: Pattern):
        self.pattern = pattern
        self.n = pattern.period
        images = pattern.images
        self._slopes = tuple(
            images[i] - images[i - 1] for i in range(1, self.n)
        )
        self._offsets = tuple(
            images[i - 1] - self._slopes[i - 1] * i for i in range(1, self.n)
        )

    def piece(self, i: int):
        """(slope, offset) of the affine piece on J_i = [i, i+1]."""
        if not 1 <= i <= self.n - 1:
            raise ValueError(f"basic intervals run J_1..J_{self.n - 1}, got J_{i}")
        return self._slopes[i - 1], self._offsets[i - 1]

    def __call__(self, x):
        """Exact image of a number in [1, n]."""
        if self.n == 1:
            if x != 1:
                raise ValueError(f"point {x} outside [1, 1]")
            return Fraction(1)
        if not 1 <= x <= self.n:
            raise ValueError(f"point {x} outside [1, {self.n}]")
        i = min(int(x), self.n - 1)
        slope, offset = self._slopes[i - 1], self._offsets[i - 1]
        return slope * x + offset

    def fixed_points(self) -> list[Fraction]:
        """All fixed points, ascending."""
        if self.n == 1:
            return [Fraction(1)]
        out = []
        for i in range(1, self.n):
            slope, offset = self._slopes[i - 1], self._offsets[i - 1]
            if slope == 1:
                continue
            x = Fraction(offset, 1 - slope)
            if i <= x <= i + 1 and (not out or out[-1] != x):
                out.append(x)
        return out

    def __repr__(self) -> str:
        return f"PLinearMap({self.pattern!r})"


def p_linear(pattern: Pattern) -> PLinearMap:
    """The pattern-linear map of a pattern."""
    return PLinearMap(pattern)


@dataclass(frozen=True)
class MarkovGraph:
    """Covering graph on basic intervals; vertex i stands for J_i."""

    num_vertices: int
    adjacency: tuple[tuple[bool, ...], ...]

    def has_edge(self, i: int, k: int) -> bool:
        return self.adjacency[i - 1][k - 1]

    def successors(self, i: int) -> tuple[int, ...]:
        return tuple(
            k for k in range(1, self.num_vertices + 1) if self.adjacency[i - 1][k - 1]
        )


def markov_graph(pattern: Pattern) -> MarkovGraph:
    """The covering graph: J_i -> J_k when the image of J_i stretches over J_k."""
    n = pattern.period
    if n < 2:
        raise PatternError("covering graphs need period at least 2")
    images = pattern.images
    rows = []
    for i in range(1, n):
        lo = min(images[i - 1], images[i])
        hi = max(images[i - 1], images[i])
        rows.append(tuple(lo <= k and k + 1 <= hi for k in range(1, n)))
    return MarkovGraph(n - 1, tuple(rows))


def fixed_point(pattern: Pattern):
    """(a, i) with a the unique fixed point, inside the basic interval J_i.

    Defined for convergent patterns of period >= 2; the fixed point is always
    interior to its interval.
    """
    n = pattern.period
    if n < 2:
        raise PatternError("fixed-point data needs period at least 2")
    if not is_convergent(pattern):
        raise DivergentPatternError(
            f"pattern {pattern} has more than one fixed point"
        )
    images = pattern.images
    for i in range(1, n):
        if images[i - 1] > i and images[i] < i + 1:
            slope = images[i] - images[i - 1]
            offset = images[i - 1] - slope * i
            return Fraction(offset, 1 - slope), i
    raise AssertionError("convergent pattern without a descending interval")


def germ_map(pattern: Pattern, germ: Germ) -> Germ:
    """Image of a germ: the image point, with the side carried by the local slope."""
    n = pattern.period
    point, side = germ
    if side == RIGHT:
        if not 1 <= point <= n - 1:
            raise ValueError(f"germ ({point}, R) has no interval to the right")
        i = point
    elif side == LEFT:
        if not 2 <= point <= n:
            raise ValueError(f"germ ({point}, L) has no interval to the left")
        i = point - 1
    else:
        raise ValueError(f"germ side must be L or R, got {side!r}")
    slope = pattern.images[i] - pattern.images[i - 1]
    image_side = side if slope > 0 else (LEFT if side == RIGHT else RIGHT)
    return Germ(pattern.image(point), image_side)


def _germ_interval(germ: Germ) -> int:
    """Index of the basic interval a germ lives in."""
    return germ.point if germ.side == RIGHT else germ.point - 1


def fundamental_loop(pattern: Pattern):
    """The germ orbit of (1, R) and the basic intervals it passes through.

    The germ returns to (1, R) after exactly one full period; the interval
    sequence is a closed walk in the covering graph that realizes the pattern
    itself.
    """
    n = pattern.period
    if n < 2:
        raise PatternError("germ orbits need period at least 2")
    germs = []
    g = Germ(1, RIGHT)
    for _ in range(n):
        germs.append(g)
        g = germ_map(pattern, g)
    intervals = tuple(_germ_interval(g) for g in germs)
    return tuple(germs), intervals


def fundamental_loop_pprime(pattern: Pattern) -> tuple[str, ...]:
    """The fundamental loop over the refined intervals split at the fixed point.

    Interval J_i containing the fixed point a splits into Il = [i, a] and
    Ir = [a, i+1]; all other intervals keep their J labels.  Convergent
    patterns only.
    """
    a, split = fixed_point(pattern)
    germs, intervals = fundamental_loop(pattern)
    labels = []
    for germ, interval in zip(germs, intervals):
        if interval != split:
            labels.append(f"J{interval}")
        elif germ.point < a:
            labels.append("Il")
        else:
            labels.append("Ir")
    return tuple(labels)
