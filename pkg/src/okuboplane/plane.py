"""Affine plane over any of the three algebras, its projective completion,
and the Veronese model used to verify it.

Points and lines are tagged unions over the affine chart, mirroring the case
analyses that define join and meet; the 27-dimensional Veronese vectors exist
as a verification layer (the bilinear form ``beta`` vanishes exactly on
incident point/line images) and as the coordinate system in which the triality
collineation is a plain cyclic shift.

For the octonionic plane the third slot of a point image is ``y * conj(x)``
and the Veronese conditions carry conjugations on the outer slots; this is the
unique placement under which point images, line data and ``beta``-incidence
are mutually consistent (checked exactly in the test suite).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Union

from .algebra import (
    AlgebraKind,
    Vec8,
    conjugate_oct,
    mul,
    norm,
    polar,
    random_vec,
)
from .scalar import QS_ONE, QS_ZERO, QSqrt3, render


class EqualPoints(ValueError):
    """join() of a point with itself."""


class EqualLines(ValueError):
    """meet() of a line with itself."""


class InfiniteElement(ValueError):
    """An operation restricted to affine elements received an infinite one."""


class NotVeronese(ValueError):
    """A vector violating the Veronese conditions where they are required."""


@dataclass(frozen=True)
class AffinePoint:
    x: Vec8
    y: Vec8

    def to_json(self) -> dict:
        return {"t": "affine", "x": self.x.to_json(), "y": self.y.to_json()}

    def __str__(self) -> str:
        return f"({self.x}, {self.y})"


@dataclass(frozen=True)
class SlopePoint:
    """The point at infinity shared by all lines of slope s."""

    s: Vec8

    def to_json(self) -> dict:
        return {"t": "slope", "s": self.s.to_json()}

    def __str__(self) -> str:
        return f"({self.s})"


@dataclass(frozen=True)
class InfinityPoint:
    """The point at infinity of vertical lines and of the line at infinity."""

    def to_json(self) -> dict:
        return {"t": "infinity"}

    def __str__(self) -> str:
        return "(inf)"


@dataclass(frozen=True)
class FiniteLine:
    """[s, t] = all points (x, s o x + t)."""

    s: Vec8
    t: Vec8

    def to_json(self) -> dict:
        return {"t": "line", "slope": self.s.to_json(), "offset": self.t.to_json()}

    def __str__(self) -> str:
        return f"[{self.s}, {self.t}]"


@dataclass(frozen=True)
class VerticalLine:
    """[c] = {c} x algebra."""

    c: Vec8

    def to_json(self) -> dict:
        return {"t": "vertical", "c": self.c.to_json()}

    def __str__(self) -> str:
        return f"[{self.c}]"


@dataclass(frozen=True)
class LineAtInfinity:
    def to_json(self) -> dict:
        return {"t": "line-at-infinity"}

    def __str__(self) -> str:
        return "[inf]"


PjPoint = Union[AffinePoint, SlopePoint, InfinityPoint]
PjLine = Union[FiniteLine, VerticalLine, LineAtInfinity]

INFINITY_POINT = InfinityPoint()
LINE_AT_INFINITY = LineAtInfinity()


def point_from_json(data: dict) -> PjPoint:
    tag = data["t"]
    if tag == "affine":
        return AffinePoint(Vec8.from_json(data["x"]), Vec8.from_json(data["y"]))
    if tag == "slope":
        return SlopePoint(Vec8.from_json(data["s"]))
    if tag == "infinity":
        return INFINITY_POINT
    raise ValueError(f"unknown point tag {tag!r}")


def line_from_json(data: dict) -> PjLine:
    tag = data["t"]
    if tag == "line":
        return FiniteLine(Vec8.from_json(data["slope"]), Vec8.from_json(data["offset"]))
    if tag == "vertical":
        return VerticalLine(Vec8.from_json(data["c"]))
    if tag == "line-at-infinity":
        return LINE_AT_INFINITY
    raise ValueError(f"unknown line tag {tag!r}")


@dataclass(frozen=True)
class VeroneseVec:
    """A vector (x1, x2, x3; l1, l2, l3) of the 27-dimensional model space."""

    x1: Vec8
    x2: Vec8
    x3: Vec8
    l1: QSqrt3
    l2: QSqrt3
    l3: QSqrt3

    def scale(self, s: QSqrt3) -> VeroneseVec:
        return VeroneseVec(
            self.x1.scale(s), self.x2.scale(s), self.x3.scale(s),
            self.l1 * s, self.l2 * s, self.l3 * s,
        )

    def cyclic(self) -> VeroneseVec:
        """(x1,x2,x3; l1,l2,l3) -> (x2,x3,x1; l2,l3,l1)."""
        return VeroneseVec(self.x2, self.x3, self.x1, self.l2, self.l3, self.l1)

    def __bool__(self) -> bool:
        return bool(self.x1) or bool(self.x2) or bool(self.x3) or bool(self.l1) or bool(self.l2) or bool(self.l3)

    def to_json(self) -> dict:
        return {
            "x": [self.x1.to_json(), self.x2.to_json(), self.x3.to_json()],
            "l": [render(self.l1), render(self.l2), render(self.l3)],
        }

    @staticmethod
    def from_json(data: dict) -> VeroneseVec:
        from .scalar import parse

        xs = [Vec8.from_json(v) for v in data["x"]]
        ls = [parse(v) for v in data["l"]]
        return VeroneseVec(xs[0], xs[1], xs[2], ls[0], ls[1], ls[2])


def beta(v: VeroneseVec, w: VeroneseVec) -> QSqrt3:
    """Symmetric bilinear form: sum of slot polarisations plus lambda products."""
    return (
        polar(v.x1, w.x1) + polar(v.x2, w.x2) + polar(v.x3, w.x3)
        + v.l1 * w.l1 + v.l2 * w.l2 + v.l3 * w.l3
    )


_HALF = QSqrt3(1) / QSqrt3(2)


def qform(v: VeroneseVec) -> QSqrt3:
    """q(v) = beta(v, v)/2 = n(x1)+n(x2)+n(x3) + (l1^2+l2^2+l3^2)/2."""
    return (
        norm(v.x1) + norm(v.x2) + norm(v.x3)
        + (v.l1 * v.l1 + v.l2 * v.l2 + v.l3 * v.l3) * _HALF
    )


@dataclass(frozen=True)
class Plane:
    """One of the three planes; the kind selects product, slope/meet formulas
    and the Veronese variant."""

    kind: AlgebraKind

    def mul(self, x: Vec8, y: Vec8) -> Vec8:
        return mul(self.kind, x, y)

    # -- incidence ---------------------------------------------------------

    def incident(self, p: PjPoint, l: PjLine) -> bool:
        if isinstance(p, AffinePoint):
            if isinstance(l, FiniteLine):
                return p.y == self.mul(l.s, p.x) + l.t
            if isinstance(l, VerticalLine):
                return p.x == l.c
            return False
        if isinstance(p, SlopePoint):
            if isinstance(l, FiniteLine):
                return p.s == l.s
            return isinstance(l, LineAtInfinity)
        # infinity point
        return isinstance(l, (VerticalLine, LineAtInfinity))

    # -- join / meet -------------------------------------------------------

    def _slope_through(self, dx: Vec8, dy: Vec8) -> Vec8:
        """The unique s with s o dx = dy, for dx != 0."""
        n_inv = norm(dx).inv()
        if self.kind is AlgebraKind.OCTONION:
            return self.mul(dy, conjugate_oct(dx)).scale(n_inv)
        return self.mul(dx, dy).scale(n_inv)

    def join(self, p: PjPoint, q: PjPoint) -> PjLine:
        """The unique line through two distinct points (verified on exit)."""
        if p == q:
            raise EqualPoints(f"join of equal points {p}")
        out = self._join(p, q)
        assert self.incident(p, out) and self.incident(q, out)
        return out

    def _join(self, p: PjPoint, q: PjPoint) -> PjLine:
        if isinstance(p, AffinePoint) and isinstance(q, AffinePoint):
            if p.x == q.x:
                return VerticalLine(p.x)
            s = self._slope_through(p.x - q.x, p.y - q.y)
            return FiniteLine(s, p.y - self.mul(s, p.x))
        if isinstance(q, AffinePoint):
            p, q = q, p
        if isinstance(p, AffinePoint):
            if isinstance(q, SlopePoint):
                return FiniteLine(q.s, p.y - self.mul(q.s, p.x))
            return VerticalLine(p.x)
        return LINE_AT_INFINITY

    def meet(self, l: PjLine, m: PjLine) -> PjPoint:
        """The unique common point of two distinct lines (verified on exit)."""
        if l == m:
            raise EqualLines(f"meet of equal lines {l}")
        out = self._meet(l, m)
        assert self.incident(out, l) and self.incident(out, m)
        return out

    def _meet(self, l: PjLine, m: PjLine) -> PjPoint:
        if isinstance(l, FiniteLine) and isinstance(m, FiniteLine):
            if l.s == m.s:
                return SlopePoint(l.s)
            ds = l.s - m.s
            n_inv = norm(ds).inv()
            if self.kind is AlgebraKind.OCTONION:
                x = self.mul(conjugate_oct(ds), m.t - l.t).scale(n_inv)
            else:
                x = self.mul(m.t - l.t, ds).scale(n_inv)
            return AffinePoint(x, self.mul(l.s, x) + l.t)
        if isinstance(m, FiniteLine):
            l, m = m, l
        if isinstance(l, FiniteLine):
            if isinstance(m, VerticalLine):
                return AffinePoint(m.c, self.mul(l.s, m.c) + l.t)
            return SlopePoint(l.s)
        return INFINITY_POINT

    def parallel_through(self, l: PjLine, p: AffinePoint) -> PjLine:
        """The unique affine line through p parallel to l."""
        if isinstance(l, FiniteLine):
            return FiniteLine(l.s, p.y - self.mul(l.s, p.x))
        if isinstance(l, VerticalLine):
            return VerticalLine(p.x)
        raise InfiniteElement("no affine parallel to the line at infinity")

    # -- Veronese correspondence -------------------------------------------

    def point_to_veronese(self, p: PjPoint) -> VeroneseVec:
        if isinstance(p, AffinePoint):
            if self.kind is AlgebraKind.OCTONION:
                z = self.mul(p.y, conjugate_oct(p.x))
            else:
                z = self.mul(p.x, p.y)
            return VeroneseVec(p.x, p.y, z, norm(p.y), norm(p.x), QS_ONE)
        if isinstance(p, SlopePoint):
            return VeroneseVec(Vec8.zero(), Vec8.zero(), p.s, norm(p.s), QS_ONE, QS_ZERO)
        return VeroneseVec(Vec8.zero(), Vec8.zero(), Vec8.zero(), QS_ONE, QS_ZERO, QS_ZERO)

    def line_to_veronese(self, l: PjLine) -> VeroneseVec:
        if isinstance(l, FiniteLine):
            if self.kind is AlgebraKind.OCTONION:
                w1 = self.mul(conjugate_oct(l.s), l.t)
            else:
                w1 = self.mul(l.t, l.s)
            return VeroneseVec(w1, -l.t, -l.s, QS_ONE, norm(l.s), norm(l.t))
        if isinstance(l, VerticalLine):
            return VeroneseVec(-l.c, Vec8.zero(), Vec8.zero(), QS_ZERO, QS_ONE, norm(l.c))
        return VeroneseVec(Vec8.zero(), Vec8.zero(), Vec8.zero(), QS_ZERO, QS_ZERO, QS_ONE)

    def point_from_veronese(self, v: VeroneseVec) -> PjPoint:
        """Decode a nonzero Veronese vector back to a projective point."""
        if v.l3:
            inv = v.l3.inv()
            return AffinePoint(v.x1.scale(inv), v.x2.scale(inv))
        if v.l2:
            return SlopePoint(v.x3.scale(v.l2.inv()))
        if v.l1:
            return INFINITY_POINT
        raise NotVeronese("vector does not represent a point")

    def line_from_veronese(self, w: VeroneseVec) -> PjLine:
        """Decode a nonzero Veronese line datum back to a projective line."""
        if w.l1:
            inv = w.l1.inv()
            return FiniteLine((-w.x3).scale(inv), (-w.x2).scale(inv))
        if w.l2:
            return VerticalLine((-w.x1).scale(w.l2.inv()))
        if w.l3:
            return LINE_AT_INFINITY
        raise NotVeronese("vector does not represent a line")

    def is_veronese(self, v: VeroneseVec) -> bool:
        """The six kind-specific Veronese conditions, checked exactly."""
        if (
            norm(v.x1) != v.l2 * v.l3
            or norm(v.x2) != v.l3 * v.l1
            or norm(v.x3) != v.l1 * v.l2
        ):
            return False
        if self.kind is AlgebraKind.OCTONION:
            return (
                v.x1.scale(v.l1) == self.mul(conjugate_oct(v.x3), v.x2)
                and v.x2.scale(v.l2) == self.mul(v.x3, v.x1)
                and v.x3.scale(v.l3) == self.mul(v.x2, conjugate_oct(v.x1))
            )
        return (
            v.x1.scale(v.l1) == self.mul(v.x2, v.x3)
            and v.x2.scale(v.l2) == self.mul(v.x3, v.x1)
            and v.x3.scale(v.l3) == self.mul(v.x1, v.x2)
        )

    def normalize_veronese(self, v: VeroneseVec) -> tuple[VeroneseVec, bool]:
        """Rescale so that l1+l2+l3 = 1; flag False when the sum vanishes.

        Point representatives produced by ``point_to_veronese`` always have
        nonnegative lambdas with positive sum, so they normalise; the flag
        only matters for hand-built vectors.
        """
        if not v:
            raise NotVeronese("cannot normalise the zero vector")
        if not self.is_veronese(v):
            raise NotVeronese("vector violates the Veronese conditions")
        total = v.l1 + v.l2 + v.l3
        if not total:
            return v, False
        return v.scale(total.inv()), True

    def distance(self, p: PjPoint, q: PjPoint) -> QSqrt3:
        """Elliptic-chart distance n(dx)^2 + n(dy)^2 between affine points."""
        if not isinstance(p, AffinePoint) or not isinstance(q, AffinePoint):
            raise InfiniteElement("distance is defined for affine points only")
        nx = norm(p.x - q.x)
        ny = norm(p.y - q.y)
        return nx * nx + ny * ny


OKUBO_PLANE = Plane(AlgebraKind.OKUBO)
PARA_PLANE = Plane(AlgebraKind.PARA_OCTONION)
OCTONION_PLANE = Plane(AlgebraKind.OCTONION)

PLANES = {
    AlgebraKind.OKUBO: OKUBO_PLANE,
    AlgebraKind.PARA_OCTONION: PARA_PLANE,
    AlgebraKind.OCTONION: OCTONION_PLANE,
}


# -- randomized sampling helpers (shared by suites and tests) ---------------

def random_affine_point(rng: random.Random) -> AffinePoint:
    return AffinePoint(random_vec(rng), random_vec(rng))


def random_point(plane: Plane, rng: random.Random) -> PjPoint:
    r = rng.random()
    if r < 0.85:
        return random_affine_point(rng)
    if r < 0.97:
        return SlopePoint(random_vec(rng))
    return INFINITY_POINT


def random_line(plane: Plane, rng: random.Random) -> PjLine:
    r = rng.random()
    if r < 0.80:
        return FiniteLine(random_vec(rng), random_vec(rng))
    if r < 0.96:
        return VerticalLine(random_vec(rng))
    return LINE_AT_INFINITY


def random_point_on(plane: Plane, l: PjLine, rng: random.Random) -> PjPoint:
    if isinstance(l, FiniteLine):
        if rng.random() < 0.05:
            return SlopePoint(l.s)
        x = random_vec(rng)
        return AffinePoint(x, plane.mul(l.s, x) + l.t)
    if isinstance(l, VerticalLine):
        if rng.random() < 0.05:
            return INFINITY_POINT
        return AffinePoint(l.c, random_vec(rng))
    if rng.random() < 0.1:
        return INFINITY_POINT
    return SlopePoint(random_vec(rng))


def random_incident_pair(plane: Plane, rng: random.Random) -> tuple[PjPoint, PjLine]:
    l = random_line(plane, rng)
    return random_point_on(plane, l, rng), l


def random_non_incident_pair(plane: Plane, rng: random.Random) -> tuple[PjPoint, PjLine]:
    while True:
        p = random_point(plane, rng)
        l = random_line(plane, rng)
        if not plane.incident(p, l):
            return p, l
