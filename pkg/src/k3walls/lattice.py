"""Exact arithmetic in the algebraic Mukai lattice of a K3 surface with Pic = Z.H.

A class is a triple ``(r, c, s)``: rank, coefficient of ``H`` and degree-four
part.  With ``H^2 = 2d`` the Mukai pairing is ``2d c c' - r s' - r' s``.
Components are :class:`fractions.Fraction` so that rational functionals (not
only genuine Mukai vectors) can be manipulated; :attr:`MukaiClass.is_integral`
tells the two apart.
"""

from __future__ import annotations

import enum
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Iterable, Union

from .errors import NotSpherical, ZeroClass

Rational = Union[int, Fraction, str]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def to_fraction(value: Rational) -> Fraction:
    """Convert ``int``, ``Fraction`` or a ``"p/q"`` string to a Fraction.

    Floats are refused on purpose: every quantity here is exact.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        m = _RATIONAL_RE.match(value)
        if not m:
            raise ValueError(f"malformed rational {value!r}; expected 'p/q' or an integer")
        num = int(m.group(1))
        den = int(m.group(2)) if m.group(2) is not None else 1
        if den == 0:
            raise ValueError(f"zero denominator in {value!r}")
        return Fraction(num, den)
    raise TypeError(f"cannot interpret {type(value).__name__} {value!r} as an exact rational")


def frac_str(x: Fraction) -> str:
    """Serialize as ``"p/q"`` with an explicit denominator."""
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def rational_sqrt(x: Fraction) -> Fraction | None:
    """Exact square root of a non-negative rational, or None if irrational."""
    x = Fraction(x)
    if x < 0:
        return None
    p, q = math.isqrt(x.numerator), math.isqrt(x.denominator)
    if p * p == x.numerator and q * q == x.denominator:
        return Fraction(p, q)
    return None


@dataclass(frozen=True)
class SurfaceData:
    """A K3 surface with Pic = Z.H and H^2 = 2d."""

    d: int
    label: str | None = None

    def __post_init__(self) -> None:
        if isinstance(self.d, bool) or not isinstance(self.d, int) or self.d < 1:
            raise ValueError(f"d must be a positive integer, got {self.d!r}")


@dataclass(frozen=True, order=True)
class MukaiClass:
    r: Fraction
    c: Fraction
    s: Fraction

    def __init__(self, r: Rational, c: Rational, s: Rational) -> None:
        object.__setattr__(self, "r", to_fraction(r))
        object.__setattr__(self, "c", to_fraction(c))
        object.__setattr__(self, "s", to_fraction(s))

    @classmethod
    def parse(cls, text: str) -> "MukaiClass":
        """Parse ``"r,c,s"`` (optionally wrapped in brackets or parentheses)."""
        body = text.strip().strip("[]()")
        parts = [p for p in body.split(",")]
        if len(parts) != 3:
            raise ValueError(f"expected three comma-separated rationals, got {text!r}")
        return cls(*(to_fraction(p.strip()) for p in parts))

    def as_tuple(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.r, self.c, self.s)

    @property
    def is_integral(self) -> bool:
        return all(x.denominator == 1 for x in self.as_tuple())

    @property
    def is_zero(self) -> bool:
        return self.r == 0 and self.c == 0 and self.s == 0

    def __add__(self, other: "MukaiClass") -> "MukaiClass":
        return MukaiClass(self.r + other.r, self.c + other.c, self.s + other.s)

    def __sub__(self, other: "MukaiClass") -> "MukaiClass":
        return MukaiClass(self.r - other.r, self.c - other.c, self.s - other.s)

    def __neg__(self) -> "MukaiClass":
        return MukaiClass(-self.r, -self.c, -self.s)

    def scale(self, k: Rational) -> "MukaiClass":
        k = to_fraction(k)
        return MukaiClass(k * self.r, k * self.c, k * self.s)

    def __str__(self) -> str:
        return "(" + ", ".join(str(x) for x in self.as_tuple()) + ")"

    def to_strings(self) -> list[str]:
        return [frac_str(x) for x in self.as_tuple()]


def _gcd_all(values: Iterable[int]) -> int:
    return reduce(math.gcd, (abs(v) for v in values), 0)


def primitive(v: MukaiClass) -> MukaiClass:
    """The primitive integral class on the positive ray of ``v``."""
    if v.is_zero:
        raise ZeroClass("the zero class has no primitive representative")
    lcm = reduce(lambda a, b: a * b // math.gcd(a, b), (x.denominator for x in v.as_tuple()), 1)
    ints = [int(x * lcm) for x in v.as_tuple()]
    g = _gcd_all(ints)
    return MukaiClass(*(i // g for i in ints))


def is_primitive(v: MukaiClass) -> bool:
    if not v.is_integral or v.is_zero:
        return False
    return _gcd_all(int(x) for x in v.as_tuple()) == 1


def proportional(v: MukaiClass, w: MukaiClass) -> bool:
    """True if v and w are linearly dependent (zero counts as dependent)."""
    a, b = v.as_tuple(), w.as_tuple()
    return all(a[i] * b[j] == a[j] * b[i] for i in range(3) for j in range(i + 1, 3))


def mukai_pairing(v: MukaiClass, w: MukaiClass, X: SurfaceData) -> Fraction:
    return 2 * X.d * v.c * w.c - v.r * w.s - w.r * v.s


def square(v: MukaiClass, X: SurfaceData) -> Fraction:
    return 2 * X.d * v.c * v.c - 2 * v.r * v.s


class SquareType(enum.Enum):
    SPHERICAL = "Spherical"
    ISOTROPIC = "Isotropic"
    POSITIVE_SQUARE = "PositiveSquare"
    NEGATIVE_SQUARE_OTHER = "NegativeSquareOther"


@dataclass(frozen=True)
class ClassKind:
    kind: SquareType
    positive_vector: bool
    square: Fraction


def classify(v: MukaiClass, X: SurfaceData) -> ClassKind:
    if v.is_zero:
        raise ZeroClass("cannot classify the zero class")
    sq = square(v, X)
    if sq == -2:
        kind = SquareType.SPHERICAL
    elif sq == 0:
        kind = SquareType.ISOTROPIC
    elif sq > 0:
        kind = SquareType.POSITIVE_SQUARE
    else:
        kind = SquareType.NEGATIVE_SQUARE_OTHER
    # Picard rank one: an effective divisor class is c.H with c > 0.
    positive = (
        sq >= -2
        and is_primitive(v)
        and (v.r > 0 or (v.r == 0 and v.c > 0 and v.s != 0) or (v.r == 0 and v.c == 0 and v.s > 0))
    )
    return ClassKind(kind, positive, sq)


def tensor_line_bundle(v: MukaiClass, m: int, X: SurfaceData) -> MukaiClass:
    """Numerical action of ``- (x) O(mH)``, i.e. multiplication by exp(mH)."""
    d = X.d
    return MukaiClass(v.r, v.c + v.r * m, v.s + 2 * d * m * v.c + v.r * d * m * m)


def spherical_reflect(xi: MukaiClass, x: MukaiClass, X: SurfaceData) -> MukaiClass:
    """K-theoretic action of the spherical twist at an object of class ``xi``."""
    if square(xi, X) != -2:
        raise NotSpherical(f"{xi} has square {square(xi, X)}, not -2")
    return x + xi.scale(mukai_pairing(x, xi, X))
