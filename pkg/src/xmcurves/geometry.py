"""Exact rational primitives for x-monotone polyline curves.

Curves are piecewise-linear with `fractions.Fraction` vertices, so every
predicate here is decided by exact sign tests; there is no floating point
and no tolerance anywhere.  "Crossing" always means a proper transversal
crossing: the vertical order of the two curves strictly swaps.  Every
other kind of contact (tangency, endpoint-on-curve, collinear overlap,
crossing at a polyline vertex, three curves through one point) is treated
as a general-position defect and surfaces in a ValidationReport instead.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import DegenerateCurve, NotCrossingAxis

RationalLike = Union[Fraction, int, str]


def rat(value: RationalLike) -> Fraction:
    """Coerce ints, `p/q` strings, or Fractions to an exact Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floats are not allowed; pass Fraction, int, or 'p/q'")
    return Fraction(value)


@dataclass(frozen=True)
class Point:
    x: Fraction
    y: Fraction

    def __str__(self) -> str:
        return f"({self.x},{self.y})"


def pt(x: RationalLike, y: RationalLike) -> Point:
    return Point(rat(x), rat(y))


@dataclass(frozen=True)
class PolyCurve:
    """An x-monotone polyline; right-flag curves start on the y-axis.

    Construction does not enforce the invariants: validators report
    defects as data so that broken inputs can be diagnosed rather than
    rejected at parse time.
    """

    id: int
    vertices: tuple[Point, ...]

    @property
    def x_start(self) -> Fraction:
        return self.vertices[0].x

    @property
    def x_end(self) -> Fraction:
        return self.vertices[-1].x

    @property
    def right_end_x(self) -> Fraction:
        """Abscissa of the right endpoint."""
        return self.vertices[-1].x

    def is_x_monotone(self) -> bool:
        if len(self.vertices) < 2:
            return False
        return all(a.x < b.x for a, b in zip(self.vertices, self.vertices[1:]))

    def is_right_flag(self) -> bool:
        return self.is_x_monotone() and self.vertices[0].x == 0

    def y_at(self, x: Fraction) -> Fraction:
        """Exact height of the curve at abscissa x; requires coverage."""
        if not (self.x_start <= x <= self.x_end):
            raise ValueError(f"x={x} outside curve {self.id} range")
        xs = [v.x for v in self.vertices]
        i = bisect.bisect_right(xs, x) - 1
        if i == len(xs) - 1:
            return self.vertices[-1].y
        a, b = self.vertices[i], self.vertices[i + 1]
        return a.y + (b.y - a.y) * (x - a.x) / (b.x - a.x)

    def with_id(self, new_id: int) -> PolyCurve:
        return PolyCurve(new_id, self.vertices)


def curve(cid: int, *coords: tuple[RationalLike, RationalLike]) -> PolyCurve:
    """Shorthand constructor from (x, y) coordinate pairs."""
    return PolyCurve(cid, tuple(pt(x, y) for x, y in coords))


@dataclass(frozen=True)
class Arc:
    """A prefix of a parent curve, truncated at a crossing with an anchor."""

    parent: int
    geometry: PolyCurve


VIOLATION_KINDS = (
    "NotXMonotone",
    "NotRightFlag",
    "SharedIntercept",
    "MultipleCrossings",
    "Tangency",
    "OverlapOrDegenerate",
)


@dataclass(frozen=True)
class Violation:
    kind: str
    curves: tuple[int, ...]
    witness: Point | None = None

    def __str__(self) -> str:
        ids = ",".join(str(c) for c in self.curves)
        at = f" at={self.witness}" if self.witness is not None else ""
        return f"violation {self.kind} curves={ids}{at}"


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def lines(self) -> list[str]:
        if self.ok:
            return ["ok"]
        return [str(v) for v in self.violations]


def _require_monotone(c: PolyCurve) -> None:
    if len(c.vertices) < 2:
        raise DegenerateCurve(f"curve {c.id} has fewer than 2 vertices")
    if not c.is_x_monotone():
        raise DegenerateCurve(f"curve {c.id} is not strictly x-monotone")


def _sign(f: Fraction) -> int:
    return (f > 0) - (f < 0)


@dataclass(frozen=True)
class PairContact:
    """Full classification of how two x-monotone curves meet.

    `crossings` are proper transversal crossings strictly inside both
    curves.  `vertex_crossings` swap the vertical order too, but happen
    exactly at a polyline vertex; they count as crossings yet break the
    general-position discipline.  The rest never count as crossings.
    """

    crossings: tuple[Point, ...]
    vertex_crossings: tuple[Point, ...]
    tangencies: tuple[Point, ...]
    endpoint_touches: tuple[Point, ...]
    overlaps: tuple[tuple[Point, Point], ...]

    def all_crossings(self) -> list[Point]:
        return sorted(self.crossings + self.vertex_crossings, key=lambda p: p.x)


def pair_contacts(c1: PolyCurve, c2: PolyCurve) -> PairContact:
    _require_monotone(c1)
    _require_monotone(c2)
    lo = max(c1.x_start, c2.x_start)
    hi = min(c1.x_end, c2.x_end)
    empty: tuple = ()
    if lo > hi:
        return PairContact(empty, empty, empty, empty, empty)

    xs = sorted(
        {lo, hi}
        | {v.x for v in c1.vertices if lo <= v.x <= hi}
        | {v.x for v in c2.vertices if lo <= v.x <= hi}
    )
    diff = [c1.y_at(x) - c2.y_at(x) for x in xs]

    crossings: list[Point] = []
    vertex_crossings: list[Point] = []
    tangencies: list[Point] = []
    endpoint_touches: list[Point] = []
    overlaps: list[tuple[Point, Point]] = []

    # The difference is piecewise linear with breakpoints xs; it vanishes
    # on a whole segment iff both segment ends vanish.
    i = 0
    m = len(xs)
    while i < m:
        if diff[i] == 0:
            j = i
            while j + 1 < m and diff[j + 1] == 0:
                j += 1
            if j > i:
                p0 = Point(xs[i], c1.y_at(xs[i]))
                p1 = Point(xs[j], c1.y_at(xs[j]))
                overlaps.append((p0, p1))
            else:
                p = Point(xs[i], c1.y_at(xs[i]))
                if xs[i] == lo or xs[i] == hi:
                    endpoint_touches.append(p)
                elif _sign(diff[i - 1]) * _sign(diff[i + 1]) < 0:
                    vertex_crossings.append(p)
                else:
                    tangencies.append(p)
            i = j + 1
            continue
        if i + 1 < m and diff[i + 1] != 0 and _sign(diff[i]) != _sign(diff[i + 1]):
            x_star = xs[i] - diff[i] * (xs[i + 1] - xs[i]) / (diff[i + 1] - diff[i])
            crossings.append(Point(x_star, c1.y_at(x_star)))
        i += 1

    return PairContact(
        tuple(crossings),
        tuple(vertex_crossings),
        tuple(tangencies),
        tuple(endpoint_touches),
        tuple(overlaps),
    )


def crossing_points(c1: PolyCurve, c2: PolyCurve) -> list[Point]:
    """All proper transversal crossings of two curves, in increasing x.

    Tangencies, endpoint contacts, and collinear overlaps are not
    crossings; they are reported by validate_family instead.  Symmetric
    in its arguments.
    """
    return pair_contacts(c1, c2).all_crossings()


def validate_family(curves: Sequence[PolyCurve]) -> ValidationReport:
    """Check the simple right-flag family discipline and report defects.

    ok means: every curve is a strictly x-monotone right-flag polyline,
    y-intercepts are pairwise distinct, every pair of curves crosses at
    most once and properly, no pair touches without crossing, no curve
    endpoint lies on another curve, no crossing sits on a polyline
    vertex, and no three curves pass through one point.
    """
    violations: list[Violation] = []
    usable: list[PolyCurve] = []

    for c in curves:
        if len(c.vertices) < 2:
            violations.append(Violation("OverlapOrDegenerate", (c.id,)))
            continue
        if not c.is_x_monotone():
            violations.append(Violation("NotXMonotone", (c.id,)))
            continue
        if c.vertices[0].x != 0 or any(v.x < 0 for v in c.vertices):
            violations.append(Violation("NotRightFlag", (c.id,), c.vertices[0]))
        usable.append(c)

    by_intercept: dict[Fraction, list[int]] = {}
    for c in usable:
        if c.vertices[0].x == 0:
            by_intercept.setdefault(c.vertices[0].y, []).append(c.id)
    for y0, ids in sorted(by_intercept.items()):
        if len(ids) > 1:
            violations.append(
                Violation("SharedIntercept", tuple(sorted(ids)), Point(Fraction(0), y0))
            )

    point_to_curves: dict[Point, set[int]] = {}
    for idx, ca in enumerate(usable):
        for cb in usable[idx + 1 :]:
            contact = pair_contacts(ca, cb)
            pair = tuple(sorted((ca.id, cb.id)))
            all_cross = contact.all_crossings()
            if len(all_cross) > 1:
                violations.append(Violation("MultipleCrossings", pair, all_cross[1]))
            for p in contact.vertex_crossings:
                violations.append(Violation("OverlapOrDegenerate", pair, p))
            for p in contact.tangencies:
                violations.append(Violation("Tangency", pair, p))
            for p in contact.endpoint_touches:
                violations.append(Violation("Tangency", pair, p))
            for p0, _p1 in contact.overlaps:
                violations.append(Violation("OverlapOrDegenerate", pair, p0))
            for p in all_cross:
                point_to_curves.setdefault(p, set()).update(pair)

    for p, ids in sorted(point_to_curves.items(), key=lambda kv: (kv[0].x, kv[0].y)):
        if len(ids) > 2:
            violations.append(Violation("OverlapOrDegenerate", tuple(sorted(ids)), p))

    return ValidationReport(tuple(violations))


def split_at_y_axis(c: PolyCurve) -> tuple[PolyCurve, PolyCurve]:
    """Split a two-sided curve at x = 0 into (left_flag, right_flag).

    The left part is mirrored (x -> -x) into right-flag convention so all
    right-flag machinery applies to it; the axis point is the shared
    grounded endpoint of both parts.
    """
    _require_monotone(c)
    if not (c.x_start < 0 < c.x_end):
        raise NotCrossingAxis(f"curve {c.id} lies entirely in one closed half-plane")
    y0 = c.y_at(Fraction(0))
    axis = Point(Fraction(0), y0)
    left_raw = [v for v in c.vertices if v.x < 0] + [axis]
    right_raw = [axis] + [v for v in c.vertices if v.x > 0]
    mirrored = tuple(Point(-v.x, v.y) for v in reversed(left_raw))
    return PolyCurve(c.id, mirrored), PolyCurve(c.id, tuple(right_raw))


def join_at_y_axis(left_flag: PolyCurve, right_flag: PolyCurve) -> PolyCurve:
    """Inverse of split_at_y_axis: un-mirror the left part and rejoin.

    The axis vertex is kept only when it bends the polyline; a collinear
    axis vertex was interpolated by the split and is dropped, so curves
    whose vertex lists are canonical round-trip exactly.
    """
    if left_flag.vertices[0].x != 0 or right_flag.vertices[0].x != 0:
        raise ValueError("both parts must start on the y-axis")
    if left_flag.vertices[0].y != right_flag.vertices[0].y:
        raise ValueError("parts do not share the axis point")
    unmirrored = tuple(Point(-v.x, v.y) for v in reversed(left_flag.vertices))
    joined = unmirrored + right_flag.vertices[1:]
    k = len(unmirrored) - 1  # position of the axis vertex
    if 0 < k < len(joined) - 1:
        before, axis, after = joined[k - 1], joined[k], joined[k + 1]
        if (axis.y - before.y) * (after.x - axis.x) == (after.y - axis.y) * (
            axis.x - before.x
        ):
            joined = joined[:k] + joined[k + 1 :]
    return PolyCurve(right_flag.id, joined)


def perturb_vertically(
    curves: Iterable[PolyCurve], eps: RationalLike
) -> list[PolyCurve]:
    """Shift the i-th curve's vertices up by i*eps (1-based, exact).

    A deterministic general-position repair for generator output.
    """
    e = rat(eps)
    out = []
    for i, c in enumerate(curves, start=1):
        out.append(PolyCurve(c.id, tuple(Point(v.x, v.y + i * e) for v in c.vertices)))
    return out
