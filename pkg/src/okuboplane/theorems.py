"""End-to-end incidence-theorem harness.

Little Desargues configurations are built by the eight-step procedure (pick
axis and center, grow two perspective triangles through joins and meets) and
verified by checking that the last intersection point lands on the axis; the
same construction with the center off the axis searches for an exact
counterexample to the full Desargues theorem.  The remaining operations
produce the witnesses that separate the three planes: the planar ternary ring
of the Okubo plane is not linear, the diagonal points (x, x) are not
collinear, and the non-alternative products violate the Moufang identities.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, replace
from typing import Optional

from .algebra import (
    AlgebraKind,
    E,
    Vec8,
    check_identity,
    mul,
    random_vec,
    trial_rng,
)
from .plane import (
    AffinePoint,
    EqualLines,
    EqualPoints,
    FiniteLine,
    PjLine,
    PjPoint,
    Plane,
    line_from_json,
    point_from_json,
)
from .report import TheoremReport, stopwatch


class DegenerateConfig(ValueError):
    """A configuration collapsed (coincident points or lines) during verify."""


class DegenerateAfterRetries(RuntimeError):
    """Random draws stayed degenerate past the retry budget."""


_RETRIES = 64


@dataclass(frozen=True)
class DesarguesConfig:
    """Two triangles a b c and a' b' c' perspective from ``center``, with the
    side intersections l2, l3 already placed on ``axis`` by construction."""

    center: PjPoint
    axis: PjLine
    a: PjPoint
    b: PjPoint
    c: PjPoint
    a1: PjPoint
    b1: PjPoint
    c1: PjPoint
    l2: PjPoint
    l3: PjPoint
    l1: Optional[PjPoint] = None

    def to_json(self) -> dict:
        data = {
            "center": self.center.to_json(),
            "axis": self.axis.to_json(),
            "a": self.a.to_json(),
            "b": self.b.to_json(),
            "c": self.c.to_json(),
            "a1": self.a1.to_json(),
            "b1": self.b1.to_json(),
            "c1": self.c1.to_json(),
            "l2": self.l2.to_json(),
            "l3": self.l3.to_json(),
        }
        if self.l1 is not None:
            data["l1"] = self.l1.to_json()
        return data

    @staticmethod
    def from_json(data: dict) -> DesarguesConfig:
        return DesarguesConfig(
            center=point_from_json(data["center"]),
            axis=line_from_json(data["axis"]),
            a=point_from_json(data["a"]),
            b=point_from_json(data["b"]),
            c=point_from_json(data["c"]),
            a1=point_from_json(data["a1"]),
            b1=point_from_json(data["b1"]),
            c1=point_from_json(data["c1"]),
            l2=point_from_json(data["l2"]),
            l3=point_from_json(data["l3"]),
            l1=point_from_json(data["l1"]) if "l1" in data else None,
        )


def _affine_point_on(plane: Plane, l: PjLine, rng: random.Random) -> AffinePoint:
    if isinstance(l, FiniteLine):
        x = random_vec(rng)
        return AffinePoint(x, plane.mul(l.s, x) + l.t)
    return AffinePoint(l.c, random_vec(rng))  # vertical


def _draw(rng: random.Random, reject, make) -> PjPoint:
    for _ in range(_RETRIES):
        p = make(rng)
        if not reject(p):
            return p
    raise DegenerateAfterRetries("point draws stayed degenerate; widen the generator range")


def _build_config(plane: Plane, seed: int, center_on_axis: bool) -> DesarguesConfig:
    for attempt in range(_RETRIES):
        rng = trial_rng(seed, attempt)
        try:
            return _try_build(plane, rng, center_on_axis)
        except (EqualPoints, EqualLines, _Retry):
            continue
    raise DegenerateAfterRetries("no non-degenerate configuration within the retry budget")


class _Retry(Exception):
    """Internal: restart the whole configuration draw."""


def _try_build(plane: Plane, rng: random.Random, center_on_axis: bool) -> DesarguesConfig:
    axis = FiniteLine(random_vec(rng), random_vec(rng))
    if center_on_axis:
        center: PjPoint = _affine_point_on(plane, axis, rng)
    else:
        center = _draw(
            rng,
            lambda p: plane.incident(p, axis),
            lambda r: AffinePoint(random_vec(r), random_vec(r)),
        )

    a = _draw(
        rng,
        lambda p: plane.incident(p, axis) or p == center,
        lambda r: AffinePoint(random_vec(r), random_vec(r)),
    )
    line_ap = plane.join(a, center)
    a1 = _draw(
        rng,
        lambda p: p == a or p == center or plane.incident(p, axis),
        lambda r: _affine_point_on(plane, line_ap, r),
    )

    b = _draw(
        rng,
        lambda p: plane.incident(p, axis) or plane.incident(p, line_ap),
        lambda r: AffinePoint(random_vec(r), random_vec(r)),
    )
    line_ab = plane.join(a, b)
    l3 = plane.meet(line_ab, axis)
    line_bp = plane.join(b, center)
    line_l3a1 = plane.join(l3, a1)
    if line_l3a1 == line_bp:
        raise _Retry
    b1 = plane.meet(line_l3a1, line_bp)
    if b1 == b or b1 == center or b1 == a1:
        raise _Retry

    c = _draw(
        rng,
        lambda p: (
            plane.incident(p, axis)
            or plane.incident(p, line_ap)
            or plane.incident(p, line_bp)
            or plane.incident(p, line_ab)
        ),
        lambda r: AffinePoint(random_vec(r), random_vec(r)),
    )
    line_ac = plane.join(a, c)
    l2 = plane.meet(line_ac, axis)
    line_cp = plane.join(c, center)
    line_l2a1 = plane.join(l2, a1)
    if line_l2a1 == line_cp:
        raise _Retry
    c1 = plane.meet(line_l2a1, line_cp)
    if c1 == c or c1 == center or c1 == b1 or c1 == a1:
        raise _Retry

    if plane.join(c, b) == plane.join(c1, b1):
        raise _Retry
    return DesarguesConfig(center, axis, a, b, c, a1, b1, c1, l2, l3)


def little_desargues_build(plane: Plane, seed: int) -> DesarguesConfig:
    """A random perspective configuration whose center lies on the axis."""
    return _build_config(plane, seed, center_on_axis=True)


def desargues_l1(plane: Plane, cfg: DesarguesConfig) -> PjPoint:
    """The intersection of side cb with side c'b'."""
    try:
        return plane.meet(plane.join(cfg.c, cfg.b), plane.join(cfg.c1, cfg.b1))
    except (EqualPoints, EqualLines) as exc:
        raise DegenerateConfig(str(exc)) from exc


def little_desargues_verify(plane: Plane, cfg: DesarguesConfig) -> bool:
    """True iff l1 = (cb) meet (c'b') is incident to the axis."""
    return plane.incident(desargues_l1(plane, cfg), cfg.axis)


def _subseed(seed: int, trial: int) -> int:
    return seed * 1_000_003 + trial


def desargues_falsify(
    plane: Plane, seed: int, max_trials: int
) -> Optional[DesarguesConfig]:
    """Search for a perspective configuration with the center off the axis
    whose conclusion fails; returns it with l1 filled, or None on budget
    exhaustion (a witness is normally found within a few trials)."""
    for trial in range(max_trials):
        cfg = _build_config(plane, _subseed(seed, trial), center_on_axis=False)
        try:
            l1 = desargues_l1(plane, cfg)
        except DegenerateConfig:
            continue
        if not plane.incident(l1, cfg.axis):
            return replace(cfg, l1=l1)
    return None


def config_incidences(plane: Plane, cfg: DesarguesConfig) -> list[str]:
    """Names of violated construction incidences (empty for a sound config)."""
    on = plane.incident
    j = plane.join
    checks = {
        "a1 on join(a, center)": on(cfg.a1, j(cfg.a, cfg.center)),
        "b1 on join(b, center)": on(cfg.b1, j(cfg.b, cfg.center)),
        "c1 on join(c, center)": on(cfg.c1, j(cfg.c, cfg.center)),
        "l3 on axis": on(cfg.l3, cfg.axis),
        "l3 on join(a, b)": on(cfg.l3, j(cfg.a, cfg.b)),
        "l3 on join(a1, b1)": on(cfg.l3, j(cfg.a1, cfg.b1)),
        "l2 on axis": on(cfg.l2, cfg.axis),
        "l2 on join(a, c)": on(cfg.l2, j(cfg.a, cfg.c)),
        "l2 on join(a1, c1)": on(cfg.l2, j(cfg.a1, cfg.c1)),
    }
    return [name for name, ok in checks.items() if not ok]


# -- planar ternary ring over the Okubo plane -------------------------------

def ptr_theta(s: Vec8, x: Vec8, t: Vec8) -> Vec8:
    """theta(s, x, t): the unique y with (x, y) on [s, t] in the Okubo plane.

    Coordinatisation relabels the basis identically (e <-> 1, ik <-> ik), so
    the operation is s*x + t with the Okubo product.
    """
    return mul(AlgebraKind.OKUBO, s, x) + t


def ptr_product(s: Vec8, x: Vec8) -> Vec8:
    """Associated product s x := theta(s, x, 0)."""
    return ptr_theta(s, x, Vec8.zero())


def ptr_sum(x: Vec8, t: Vec8) -> Vec8:
    """Associated sum x + t := theta(1, x, t), with 1 the unit label of e."""
    return ptr_theta(E, x, t)


def ptr_nonlinearity_witness() -> tuple[Vec8, Vec8, Vec8, Vec8]:
    """Basis pair (s, x) with theta(s, x, 0) != s . x (octonion product);
    returns (s, x, lhs, rhs).  The scan is guaranteed to find one."""
    for i in range(8):
        for j in range(8):
            s, x = Vec8.basis(i), Vec8.basis(j)
            lhs = ptr_product(s, x)
            rhs = mul(AlgebraKind.OCTONION, s, x)
            if lhs != rhs:
                return s, x, lhs, rhs
    raise AssertionError("PTR is linear on the basis; products disagree nowhere")


# -- separation witnesses ----------------------------------------------------

def collinearity_witness(plane: Plane, trials: int = 100, seed: int = 0) -> TheoremReport:
    """Okubo/para: exhibit x, y with (y, y) off the line joining (0,0) and
    (x, x).  Octonion: verify (0,0), (x, x), (y, y) all sit on [e, 0]."""
    origin = AffinePoint(Vec8.zero(), Vec8.zero())
    if plane.kind is AlgebraKind.OCTONION:
        line = FiniteLine(E, Vec8.zero())
        failures = []
        with stopwatch() as elapsed:
            for i in range(trials):
                rng = trial_rng(seed, i)
                x = random_vec(rng)
                if not plane.incident(AffinePoint(x, x), line):
                    failures.append({"x": x.to_json()})
        return TheoremReport(
            name="diagonal-points-collinear",
            kind=plane.kind.value,
            seed=seed,
            trials=trials,
            mode="expect-pass",
            failures=failures,
            elapsed_ms=elapsed(),
        )

    report = TheoremReport(
        name="diagonal-points-not-collinear",
        kind=plane.kind.value,
        seed=seed,
        trials=trials,
        mode="expect-witness",
    )
    with stopwatch() as elapsed:
        for i in range(trials):
            rng = trial_rng(seed, i)
            x = random_vec(rng) if i else E
            y = random_vec(rng) if i else Vec8.basis(1)
            px, py = AffinePoint(x, x), AffinePoint(y, y)
            if px == origin or py == origin or px == py:
                continue
            line = plane.join(origin, px)
            if not plane.incident(py, line):
                report.witnesses.append(
                    {"x": x.to_json(), "y": y.to_json(), "line": line.to_json()}
                )
                break
    report.elapsed_ms = elapsed()
    report.require_witness("no non-collinear diagonal triple found")
    return report


_MOUFANG_NAMES = ("Moufang1", "Moufang2", "Moufang3", "AlternativeLeft", "AlternativeRight")


def moufang_failure_witness(
    kind: AlgebraKind, trials: int = 500, seed: int = 0
) -> TheoremReport:
    """Okubo/para: an exact violating triple for each Moufang identity and
    each alternativity law (basis scan).  Octonion: no violations expected on
    random triples."""
    if kind is AlgebraKind.OCTONION:
        failures = []
        with stopwatch() as elapsed:
            for i in range(trials):
                rng = trial_rng(seed, i)
                x, y, z = random_vec(rng), random_vec(rng), random_vec(rng)
                for name in _MOUFANG_NAMES:
                    if not check_identity(kind, name, x, y, z):
                        failures.append(
                            {"identity": name, "x": x.to_json(), "y": y.to_json(), "z": z.to_json()}
                        )
        return TheoremReport(
            name="moufang-identities-hold",
            kind=kind.value,
            seed=seed,
            trials=trials,
            mode="expect-pass",
            failures=failures,
            elapsed_ms=elapsed(),
        )

    report = TheoremReport(
        name="moufang-identities-fail",
        kind=kind.value,
        seed=seed,
        trials=trials,
        mode="expect-witness",
    )
    with stopwatch() as elapsed:
        for name in _MOUFANG_NAMES:
            witness = _basis_violation(kind, name)
            if witness is None:
                report.failures.append({"reason": f"no witness found: {name}"})
            else:
                x, y, z = witness
                report.witnesses.append(
                    {"identity": name, "x": x.to_json(), "y": y.to_json(), "z": z.to_json()}
                )
    report.elapsed_ms = elapsed()
    return report


def _basis_violation(kind: AlgebraKind, name: str) -> Optional[tuple[Vec8, Vec8, Vec8]]:
    for i in range(8):
        for j in range(8):
            for k in range(8):
                x, y, z = Vec8.basis(i), Vec8.basis(j), Vec8.basis(k)
                if not check_identity(kind, name, x, y, z):
                    return x, y, z
    return None
