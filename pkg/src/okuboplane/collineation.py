"""Closed-form collineations and the cross-plane isomorphisms.

Translations and shears are elations of a single plane; the triality map is a
cyclic shift of Veronese coordinates (meaningful on the Okubo and para planes,
whose Veronese conditions are themselves cyclic); the maps between planes
rewrite slopes through the trivolution and conjugation so that
``s * x = tau(conj(s)) . tau2(conj(x))`` turns incidence in one plane into
incidence in the other.

The coordinate swap (x, y) -> (y, x) is a collineation of the octonionic
plane (``OctReflection``) but not of the Okubo plane; its transport through
the isomorphism is the closed form (tau(conj(y)), tau2(conj(x))).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .algebra import (
    AlgebraKind,
    E,
    Vec8,
    conjugate_oct,
    mul,
    norm,
    random_vec,
    trial_rng,
    trivolution,
    trivolution_basis_images,
    trivolution_sq,
)
from .plane import (
    INFINITY_POINT,
    LINE_AT_INFINITY,
    AffinePoint,
    FiniteLine,
    PjLine,
    PjPoint,
    Plane,
    PLANES,
    SlopePoint,
    VerticalLine,
    InfiniteElement,
    random_incident_pair,
    random_affine_point,
)
from .report import TheoremReport, stopwatch
from .scalar import QS_ONE, QS_ZERO, QSqrt3


class KindMismatch(TypeError):
    """A collineation applied to an element of the wrong plane kind."""


class Collineation:
    """Base: a plane map with fixed source and target kinds."""

    source: AlgebraKind
    target: AlgebraKind

    def apply_point(self, p: PjPoint) -> PjPoint:
        raise NotImplementedError

    def apply_line(self, l: PjLine) -> PjLine:
        raise NotImplementedError

    def invert(self) -> Collineation:
        raise NotImplementedError

    def to_json(self) -> dict:
        """Descriptor sufficient to reconstruct the map (see from_json)."""
        raise NotImplementedError

    @property
    def source_plane(self) -> Plane:
        return PLANES[self.source]

    @property
    def target_plane(self) -> Plane:
        return PLANES[self.target]


@dataclass(frozen=True)
class Translation(Collineation):
    """(x, y) -> (x + a, y + b); fixes the line at infinity pointwise."""

    kind: AlgebraKind
    a: Vec8
    b: Vec8

    @property
    def source(self) -> AlgebraKind:
        return self.kind

    @property
    def target(self) -> AlgebraKind:
        return self.kind

    def apply_point(self, p: PjPoint) -> PjPoint:
        if isinstance(p, AffinePoint):
            return AffinePoint(p.x + self.a, p.y + self.b)
        return p

    def apply_line(self, l: PjLine) -> PjLine:
        if isinstance(l, FiniteLine):
            return FiniteLine(l.s, l.t - mul(self.kind, l.s, self.a) + self.b)
        if isinstance(l, VerticalLine):
            return VerticalLine(l.c + self.a)
        return l

    def to_json(self) -> dict:
        return {"type": "translation", "kind": self.kind.value,
                "a": self.a.to_json(), "b": self.b.to_json()}

    def invert(self) -> Translation:
        return Translation(self.kind, -self.a, -self.b)


@dataclass(frozen=True)
class Shear(Collineation):
    """(x, y) -> (x, y + a o x); axis [0], center the infinity point."""

    kind: AlgebraKind
    a: Vec8

    @property
    def source(self) -> AlgebraKind:
        return self.kind

    @property
    def target(self) -> AlgebraKind:
        return self.kind

    def apply_point(self, p: PjPoint) -> PjPoint:
        if isinstance(p, AffinePoint):
            return AffinePoint(p.x, p.y + mul(self.kind, self.a, p.x))
        if isinstance(p, SlopePoint):
            return SlopePoint(p.s + self.a)
        return p

    def apply_line(self, l: PjLine) -> PjLine:
        if isinstance(l, FiniteLine):
            return FiniteLine(l.s + self.a, l.t)
        return l

    def to_json(self) -> dict:
        return {"type": "shear", "kind": self.kind.value, "a": self.a.to_json()}

    def invert(self) -> Shear:
        return Shear(self.kind, -self.a)


@dataclass(frozen=True)
class Triality(Collineation):
    """Cyclic shift of Veronese coordinates, read back on the affine chart.

    Defined on the Okubo and para planes, whose Veronese conditions are
    themselves invariant under the shift; the octonionic conditions are not.
    """

    kind: AlgebraKind = AlgebraKind.OKUBO
    inverse: bool = False

    def __post_init__(self) -> None:
        if self.kind is AlgebraKind.OCTONION:
            raise KindMismatch("triality shift is defined on the Okubo and para planes")

    @property
    def source(self) -> AlgebraKind:
        return self.kind

    @property
    def target(self) -> AlgebraKind:
        return self.kind

    def apply_point(self, p: PjPoint) -> PjPoint:
        plane = self.source_plane
        v = plane.point_to_veronese(p).cyclic()
        if self.inverse:
            v = v.cyclic()
        return plane.point_from_veronese(v)

    def apply_line(self, l: PjLine) -> PjLine:
        plane = self.source_plane
        w = plane.line_to_veronese(l).cyclic()
        if self.inverse:
            w = w.cyclic()
        return plane.line_from_veronese(w)

    def to_json(self) -> dict:
        return {"type": "triality", "kind": self.kind.value, "inverse": self.inverse}

    def invert(self) -> Triality:
        return Triality(self.kind, not self.inverse)


@dataclass(frozen=True)
class Phi(Collineation):
    """Okubo plane -> octonionic plane: (x, y) -> (tau2(conj x), y)."""

    @property
    def source(self) -> AlgebraKind:
        return AlgebraKind.OKUBO

    @property
    def target(self) -> AlgebraKind:
        return AlgebraKind.OCTONION

    def apply_point(self, p: PjPoint) -> PjPoint:
        if isinstance(p, AffinePoint):
            return AffinePoint(trivolution_sq(conjugate_oct(p.x)), p.y)
        if isinstance(p, SlopePoint):
            return SlopePoint(trivolution(conjugate_oct(p.s)))
        return p

    def apply_line(self, l: PjLine) -> PjLine:
        if isinstance(l, FiniteLine):
            return FiniteLine(trivolution(conjugate_oct(l.s)), l.t)
        if isinstance(l, VerticalLine):
            return VerticalLine(trivolution_sq(conjugate_oct(l.c)))
        return l

    def to_json(self) -> dict:
        return {"type": "phi"}

    def invert(self) -> PhiInv:
        return PhiInv()


@dataclass(frozen=True)
class PhiInv(Collineation):
    """Octonionic plane -> Okubo plane: (x, y) -> (tau(conj x), y)."""

    @property
    def source(self) -> AlgebraKind:
        return AlgebraKind.OCTONION

    @property
    def target(self) -> AlgebraKind:
        return AlgebraKind.OKUBO

    def apply_point(self, p: PjPoint) -> PjPoint:
        if isinstance(p, AffinePoint):
            return AffinePoint(trivolution(conjugate_oct(p.x)), p.y)
        if isinstance(p, SlopePoint):
            return SlopePoint(trivolution_sq(conjugate_oct(p.s)))
        return p

    def apply_line(self, l: PjLine) -> PjLine:
        if isinstance(l, FiniteLine):
            return FiniteLine(trivolution_sq(conjugate_oct(l.s)), l.t)
        if isinstance(l, VerticalLine):
            return VerticalLine(trivolution(conjugate_oct(l.c)))
        return l

    def to_json(self) -> dict:
        return {"type": "phi-inverse"}

    def invert(self) -> Phi:
        return Phi()


@dataclass(frozen=True)
class PPhi(Collineation):
    """Okubo plane -> para-octonionic plane: (x, y) -> (tau2(x), y)."""

    @property
    def source(self) -> AlgebraKind:
        return AlgebraKind.OKUBO

    @property
    def target(self) -> AlgebraKind:
        return AlgebraKind.PARA_OCTONION

    def apply_point(self, p: PjPoint) -> PjPoint:
        if isinstance(p, AffinePoint):
            return AffinePoint(trivolution_sq(p.x), p.y)
        if isinstance(p, SlopePoint):
            return SlopePoint(trivolution(p.s))
        return p

    def apply_line(self, l: PjLine) -> PjLine:
        if isinstance(l, FiniteLine):
            return FiniteLine(trivolution(l.s), l.t)
        if isinstance(l, VerticalLine):
            return VerticalLine(trivolution_sq(l.c))
        return l

    def to_json(self) -> dict:
        return {"type": "pphi"}

    def invert(self) -> PPhiInv:
        return PPhiInv()


@dataclass(frozen=True)
class PPhiInv(Collineation):
    """Para-octonionic plane -> Okubo plane: (x, y) -> (tau(x), y)."""

    @property
    def source(self) -> AlgebraKind:
        return AlgebraKind.PARA_OCTONION

    @property
    def target(self) -> AlgebraKind:
        return AlgebraKind.OKUBO

    def apply_point(self, p: PjPoint) -> PjPoint:
        if isinstance(p, AffinePoint):
            return AffinePoint(trivolution(p.x), p.y)
        if isinstance(p, SlopePoint):
            return SlopePoint(trivolution_sq(p.s))
        return p

    def apply_line(self, l: PjLine) -> PjLine:
        if isinstance(l, FiniteLine):
            return FiniteLine(trivolution_sq(l.s), l.t)
        if isinstance(l, VerticalLine):
            return VerticalLine(trivolution(l.c))
        return l

    def to_json(self) -> dict:
        return {"type": "pphi-inverse"}

    def invert(self) -> PPhi:
        return PPhi()


def _oct_inverse(s: Vec8) -> Vec8:
    return conjugate_oct(s).scale(norm(s).inv())


@dataclass(frozen=True)
class OctReflection(Collineation):
    """The octonionic swap (x, y) -> (y, x), extended projectively.

    On slopes it inverts: (s) -> (s^-1), (0) <-> (inf).  Line images follow
    from the point images; in particular the line at infinity is fixed
    set-wise and [0] goes to the x axis [0, 0].
    """

    @property
    def source(self) -> AlgebraKind:
        return AlgebraKind.OCTONION

    @property
    def target(self) -> AlgebraKind:
        return AlgebraKind.OCTONION

    def apply_point(self, p: PjPoint) -> PjPoint:
        if isinstance(p, AffinePoint):
            return AffinePoint(p.y, p.x)
        if isinstance(p, SlopePoint):
            if not p.s:
                return INFINITY_POINT
            return SlopePoint(_oct_inverse(p.s))
        return SlopePoint(Vec8.zero())

    def apply_line(self, l: PjLine) -> PjLine:
        oct_mul = lambda a, b: mul(AlgebraKind.OCTONION, a, b)
        if isinstance(l, FiniteLine):
            if not l.s:
                return VerticalLine(l.t)
            s_inv = _oct_inverse(l.s)
            return FiniteLine(s_inv, -oct_mul(s_inv, l.t))
        if isinstance(l, VerticalLine):
            return FiniteLine(Vec8.zero(), l.c)
        return LINE_AT_INFINITY

    def to_json(self) -> dict:
        return {"type": "octonion-reflection"}

    def invert(self) -> OctReflection:
        return OctReflection()


@dataclass(frozen=True)
class Composite(Collineation):
    """Left-to-right chain of collineations with matching kinds."""

    steps: tuple[Collineation, ...]

    def __post_init__(self) -> None:
        if not self.steps:
            raise ValueError("empty composite")
        for first, second in zip(self.steps, self.steps[1:]):
            if first.target is not second.source:
                raise KindMismatch(
                    f"cannot chain {first.target.value} -> {second.source.value}"
                )

    @property
    def source(self) -> AlgebraKind:
        return self.steps[0].source

    @property
    def target(self) -> AlgebraKind:
        return self.steps[-1].target

    def apply_point(self, p: PjPoint) -> PjPoint:
        for step in self.steps:
            p = step.apply_point(p)
        return p

    def apply_line(self, l: PjLine) -> PjLine:
        for step in self.steps:
            l = step.apply_line(l)
        return l

    def to_json(self) -> dict:
        return {"type": "composite", "steps": [s.to_json() for s in self.steps]}

    def invert(self) -> Composite:
        return Composite(tuple(step.invert() for step in reversed(self.steps)))


def compose(*colls: Collineation) -> Composite:
    """compose(c1, c2)(p) applies c1 first, then c2."""
    steps: list[Collineation] = []
    for c in colls:
        steps.extend(c.steps if isinstance(c, Composite) else (c,))
    return Composite(tuple(steps))


def collineation_from_json(data: dict) -> Collineation:
    """Rebuild a collineation from its descriptor, for report replay."""
    tag = data["type"]
    if tag == "translation":
        return Translation(
            AlgebraKind.from_label(data["kind"]),
            Vec8.from_json(data["a"]),
            Vec8.from_json(data["b"]),
        )
    if tag == "shear":
        return Shear(AlgebraKind.from_label(data["kind"]), Vec8.from_json(data["a"]))
    if tag == "triality":
        return Triality(AlgebraKind.from_label(data["kind"]), data.get("inverse", False))
    simple = {
        "phi": Phi,
        "phi-inverse": PhiInv,
        "pphi": PPhi,
        "pphi-inverse": PPhiInv,
        "octonion-reflection": OctReflection,
    }
    if tag in simple:
        return simple[tag]()
    if tag == "composite":
        return Composite(tuple(collineation_from_json(s) for s in data["steps"]))
    raise ValueError(f"unknown collineation descriptor {tag!r}")


def preserves_incidence(c: Collineation, trials: int, seed: int) -> TheoremReport:
    """Sample incident pairs in the source plane, check images are incident in
    the target plane, and the converse through the inverse map."""
    src, dst = c.source_plane, c.target_plane
    inv = c.invert()
    failures = []
    with stopwatch() as elapsed:
        for i in range(trials):
            rng = trial_rng(seed, i)
            p, l = random_incident_pair(src, rng)
            if not dst.incident(c.apply_point(p), c.apply_line(l)):
                failures.append({"direction": "forward", "point": p.to_json(), "line": l.to_json()})
            q, m = random_incident_pair(dst, rng)
            if not src.incident(inv.apply_point(q), inv.apply_line(m)):
                failures.append({"direction": "inverse", "point": q.to_json(), "line": m.to_json()})
    return TheoremReport(
        name=f"incidence-preservation:{type(c).__name__}",
        kind=c.source.value,
        seed=seed,
        trials=trials,
        mode="expect-pass",
        failures=failures,
        elapsed_ms=elapsed(),
    )


def is_isometry(c: Collineation, trials: int, seed: int) -> TheoremReport:
    """Exact equality of n(dx)^2 + n(dy)^2 before and after the map, on
    random affine pairs."""
    src, dst = c.source_plane, c.target_plane
    failures = []
    with stopwatch() as elapsed:
        for i in range(trials):
            rng = trial_rng(seed, i)
            p, q = random_affine_point(rng), random_affine_point(rng)
            d_before = src.distance(p, q)
            pi, qi = c.apply_point(p), c.apply_point(q)
            if not (isinstance(pi, AffinePoint) and isinstance(qi, AffinePoint)):
                failures.append({"point": p.to_json(), "reason": "image not affine"})
                continue
            if dst.distance(pi, qi) != d_before:
                failures.append({"p": p.to_json(), "q": q.to_json()})
    return TheoremReport(
        name=f"isometry:{type(c).__name__}",
        kind=c.source.value,
        seed=seed,
        trials=trials,
        mode="expect-pass",
        failures=failures,
        elapsed_ms=elapsed(),
    )


def transported_reflection(p: PjPoint) -> PjPoint:
    """The octonionic swap conjugated into the Okubo plane.

    For affine points the closed form (tau(conj y), tau2(conj x)) is computed
    alongside the composite Phi^-1 o swap o Phi and both must agree; infinite
    elements go through the composite only.
    """
    composite = compose(Phi(), OctReflection(), PhiInv())
    image = composite.apply_point(p)
    if isinstance(p, AffinePoint):
        closed = transported_reflection_closed_form(p)
        assert closed == image
    return image


def transported_reflection_closed_form(p: PjPoint) -> AffinePoint:
    """(x, y) -> (tau(conj y), tau2(conj x)); affine points only."""
    if not isinstance(p, AffinePoint):
        raise InfiniteElement("closed form is stated for affine points")
    return AffinePoint(
        trivolution(conjugate_oct(p.y)),
        trivolution_sq(conjugate_oct(p.x)),
    )


class LinMap8:
    """An 8x8 exact matrix acting on coordinates; rows of QSqrt3."""

    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence[QSqrt3]]) -> None:
        object.__setattr__(self, "rows", tuple(tuple(r) for r in rows))
        if len(self.rows) != 8 or any(len(r) != 8 for r in self.rows):
            raise ValueError("LinMap8 needs an 8x8 matrix")

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("LinMap8 is immutable")

    @classmethod
    def identity(cls) -> LinMap8:
        return cls([[QS_ONE if i == j else QS_ZERO for j in range(8)] for i in range(8)])

    @classmethod
    def from_basis_images(cls, images: Sequence[Vec8]) -> LinMap8:
        """Columns are the images of the basis vectors."""
        return cls([[images[j].c[i] for j in range(8)] for i in range(8)])

    @classmethod
    def trivolution(cls) -> LinMap8:
        return cls.from_basis_images(trivolution_basis_images())

    def apply(self, v: Vec8) -> Vec8:
        out = []
        for row in self.rows:
            acc = QS_ZERO
            for rij, vj in zip(row, v.c):
                if rij and vj:
                    acc = acc + rij * vj
            out.append(acc)
        return Vec8(tuple(out))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinMap8):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)


def g2_triple_check(a: LinMap8, b: LinMap8, c: LinMap8, trials: int, seed: int) -> bool:
    """Related-triple conditions with respect to the Okubo product:
    B(s*x) = C(s)*A(x), B(e*x) = e*A(x), B(x*e) = C(x)*e, and the three maps
    fix e.  Sampled on random pairs; any exact violation returns False."""
    ok = AlgebraKind.OKUBO
    if a.apply(E) != E or b.apply(E) != E or c.apply(E) != E:
        return False
    for i in range(trials):
        rng = trial_rng(seed, i)
        x, s = random_vec(rng), random_vec(rng)
        if b.apply(mul(ok, s, x)) != mul(ok, c.apply(s), a.apply(x)):
            return False
        if b.apply(mul(ok, E, x)) != mul(ok, E, a.apply(x)):
            return False
        if b.apply(mul(ok, x, E)) != mul(ok, c.apply(x), E):
            return False
    return True
