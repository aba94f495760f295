"""Exact arithmetic in the real quadratic field Q(sqrt 3) and its complexification.

Every coordinate in this package is a ``QSqrt3`` value ``a + b*sqrt(3)`` with
rational ``a, b``.  Equality is structural: because sqrt(3) is irrational,
``a + b*sqrt(3) = 0`` forces ``a = b = 0``, so component-wise comparison of
canonical representations decides equality exactly.  Floating point appears
only in ``__float__`` for report rendering, never in a correctness decision.

Internally a value is stored as one integer triple ``(p + q*sqrt3)/d`` with
``d > 0`` and ``gcd(p, q, d) = 1``; join/meet/Veronese chains square and
divide coordinates, so arbitrary-precision integers are mandatory and the
single shared denominator keeps the gcd work per operation minimal.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction


class ZeroInverse(ZeroDivisionError):
    """Raised when inverting the zero element of Q(sqrt 3)."""


_SQRT3_FLOAT = math.sqrt(3.0)
_gcd = math.gcd


class QSqrt3:
    """An element ``a + b*sqrt(3)`` of Q(sqrt 3).

    Construct from ints or Fractions; instances are immutable and canonical,
    so ``==`` is exact component comparison.
    """

    __slots__ = ("p", "q", "d")

    def __init__(self, a: int | Fraction = 0, b: int | Fraction = 0) -> None:
        if type(a) is int:
            pa, da = a, 1
        else:
            f = Fraction(a)
            pa, da = f.numerator, f.denominator
        if type(b) is int:
            qb, db = b, 1
        else:
            f = Fraction(b)
            qb, db = f.numerator, f.denominator
        p, q, d = pa * db, qb * da, da * db
        g = _gcd(p, q, d)
        if g > 1:
            p //= g
            q //= g
            d //= g
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "d", d)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("QSqrt3 is immutable")

    @staticmethod
    def _raw(p: int, q: int, d: int) -> QSqrt3:
        # assumes d > 0 and gcd(p, q, d) == 1
        out = object.__new__(QSqrt3)
        object.__setattr__(out, "p", p)
        object.__setattr__(out, "q", q)
        object.__setattr__(out, "d", d)
        return out

    @staticmethod
    def _norm3(p: int, q: int, d: int) -> QSqrt3:
        if d < 0:
            p, q, d = -p, -q, -d
        g = _gcd(p, q, d)
        if g > 1:
            p //= g
            q //= g
            d //= g
        return QSqrt3._raw(p, q, d)

    @classmethod
    def of(cls, num: int, den: int = 1, *, sqrt3: bool = False) -> QSqrt3:
        """Shorthand for ``num/den`` or ``(num/den)*sqrt(3)``."""
        return cls._norm3(0, num, den) if sqrt3 else cls._norm3(num, 0, den)

    @property
    def a(self) -> Fraction:
        """Rational part, as a canonical Fraction."""
        return Fraction(self.p, self.d)

    @property
    def b(self) -> Fraction:
        """Coefficient of sqrt(3), as a canonical Fraction."""
        return Fraction(self.q, self.d)

    def __add__(self, other: QSqrt3) -> QSqrt3:
        d1, d2 = self.d, other.d
        if d1 == d2:
            return QSqrt3._norm3(self.p + other.p, self.q + other.q, d1)
        return QSqrt3._norm3(self.p * d2 + other.p * d1, self.q * d2 + other.q * d1, d1 * d2)

    def __sub__(self, other: QSqrt3) -> QSqrt3:
        d1, d2 = self.d, other.d
        if d1 == d2:
            return QSqrt3._norm3(self.p - other.p, self.q - other.q, d1)
        return QSqrt3._norm3(self.p * d2 - other.p * d1, self.q * d2 - other.q * d1, d1 * d2)

    def __neg__(self) -> QSqrt3:
        return QSqrt3._raw(-self.p, -self.q, self.d)

    def __mul__(self, other: QSqrt3) -> QSqrt3:
        # (p1 + q1 s)(p2 + q2 s) = (p1 p2 + 3 q1 q2) + (p1 q2 + q1 p2) s
        q1, q2 = self.q, other.q
        if q1 == 0 and q2 == 0:
            return QSqrt3._norm3(self.p * other.p, 0, self.d * other.d)
        p1, p2 = self.p, other.p
        return QSqrt3._norm3(p1 * p2 + 3 * q1 * q2, p1 * q2 + q1 * p2, self.d * other.d)

    def inv(self) -> QSqrt3:
        """Exact inverse: (a - b*sqrt3) / (a^2 - 3*b^2)."""
        p, q, d = self.p, self.q, self.d
        if p == 0 and q == 0:
            raise ZeroInverse("zero element of Q(sqrt 3) has no inverse")
        return QSqrt3._norm3(d * p, -d * q, p * p - 3 * q * q)

    def __truediv__(self, other: QSqrt3) -> QSqrt3:
        return self * other.inv()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QSqrt3):
            return NotImplemented
        return self.p == other.p and self.q == other.q and self.d == other.d

    def __hash__(self) -> int:
        return hash((self.p, self.q, self.d))

    def __bool__(self) -> bool:
        return self.p != 0 or self.q != 0

    def is_rational(self) -> bool:
        return self.q == 0

    def sign(self) -> int:
        """Exact sign of the real embedding a + b*1.732..., in {-1, 0, 1}.

        Decided from the component signs and, in the mixed case, comparison
        of a^2 with 3*b^2; no floating point involved.
        """
        p, q = self.p, self.q
        if p == 0 and q == 0:
            return 0
        if p >= 0 and q >= 0:
            return 1
        if p <= 0 and q <= 0:
            return -1
        if p > 0:  # q < 0: positive iff p^2 > 3 q^2
            return 1 if p * p > 3 * q * q else -1
        return 1 if 3 * q * q > p * p else -1

    def __float__(self) -> float:
        return (self.p + self.q * _SQRT3_FLOAT) / self.d

    def __str__(self) -> str:
        return render(self)

    def __repr__(self) -> str:
        return f"QSqrt3({self.a!r}, {self.b!r})"


QS_ZERO = QSqrt3._raw(0, 0, 1)
QS_ONE = QSqrt3._raw(1, 0, 1)
QS_TWO = QSqrt3._raw(2, 0, 1)
QS_HALF = QSqrt3._raw(1, 0, 2)
SQRT3 = QSqrt3._raw(0, 1, 1)


def _render_fraction(f: Fraction) -> str:
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def render(x: QSqrt3) -> str:
    """Canonical text form ``p/q + r/s*sqrt3`` (terms dropped when zero)."""
    a, b = x.a, x.b
    if not b:
        return _render_fraction(a)
    bs = "sqrt3" if b == 1 else ("-sqrt3" if b == -1 else f"{_render_fraction(b)}*sqrt3")
    if not a:
        return bs
    if b < 0:
        return f"{_render_fraction(a)} - {bs.lstrip('-')}"
    return f"{_render_fraction(a)} + {bs}"


_TERM_RE = re.compile(
    r"\s*(?P<sign>[+-])?\s*(?:"
    r"(?P<coef>\d+(?:/\d+)?)\s*(?:\*\s*(?P<root1>sqrt3))?"
    r"|(?P<root2>sqrt3)"
    r")\s*"
)


def parse(text: str) -> QSqrt3:
    """Parse the textual form produced by :func:`render`.

    Accepts e.g. ``"2"``, ``"-1/2"``, ``"sqrt3"``, ``"3/2*sqrt3"`` and
    ``"1/2 - 5*sqrt3"``.  Raises ``ValueError`` on anything else.
    """
    pos = 0
    a = None
    b = None
    while pos < len(text):
        m = _TERM_RE.match(text, pos)
        if m is None or m.end() == pos:
            raise ValueError(f"cannot parse Q(sqrt 3) scalar: {text!r}")
        if m.group("sign") is None and (a is not None or b is not None):
            raise ValueError(f"missing sign between terms in {text!r}")
        sign = -1 if m.group("sign") == "-" else 1
        coef = Fraction(m.group("coef")) if m.group("coef") else Fraction(1)
        if m.group("root1") or m.group("root2"):
            if b is not None:
                raise ValueError(f"duplicate sqrt3 term in {text!r}")
            b = sign * coef
        else:
            if a is not None:
                raise ValueError(f"duplicate rational term in {text!r}")
            a = sign * coef
        pos = m.end()
    if a is None and b is None:
        raise ValueError("empty Q(sqrt 3) scalar")
    return QSqrt3(a or 0, b or 0)


class CQSqrt3:
    """Complexified scalar ``re + i*im`` with QSqrt3 components."""

    __slots__ = ("re", "im")

    def __init__(self, re: QSqrt3 = QS_ZERO, im: QSqrt3 = QS_ZERO) -> None:
        object.__setattr__(self, "re", re)
        object.__setattr__(self, "im", im)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("CQSqrt3 is immutable")

    def __add__(self, other: CQSqrt3) -> CQSqrt3:
        return CQSqrt3(self.re + other.re, self.im + other.im)

    def __sub__(self, other: CQSqrt3) -> CQSqrt3:
        return CQSqrt3(self.re - other.re, self.im - other.im)

    def __neg__(self) -> CQSqrt3:
        return CQSqrt3(-self.re, -self.im)

    def __mul__(self, other: CQSqrt3) -> CQSqrt3:
        return CQSqrt3(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def conj(self) -> CQSqrt3:
        return CQSqrt3(self.re, -self.im)

    def scale(self, s: QSqrt3) -> CQSqrt3:
        return CQSqrt3(self.re * s, self.im * s)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CQSqrt3):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self) -> int:
        return hash((self.re, self.im))

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __str__(self) -> str:
        return f"({render(self.re)}) + i*({render(self.im)})"

    def __repr__(self) -> str:
        return f"CQSqrt3({self.re!r}, {self.im!r})"


CQ_ZERO = CQSqrt3(QS_ZERO, QS_ZERO)
CQ_ONE = CQSqrt3(QS_ONE, QS_ZERO)
CQ_I = CQSqrt3(QS_ZERO, QS_ONE)

# mu = (3 + i*sqrt3)/6, the twist constant of the 3x3 matrix product
MU = CQSqrt3(QS_HALF, QSqrt3._raw(0, 1, 6))
MU_BAR = MU.conj()
