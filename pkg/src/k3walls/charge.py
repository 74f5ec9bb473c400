"""Central charge on the (b, T) slice, with omega = tH, beta = bH and T = t^2.

Z(v) = (exp(beta + i omega), v) has real part ``2dbc - s - rd(b^2 - T)`` and
imaginary part ``t * 2d(c - rb)``.  Only ``Im Z / t`` is stored, so every
comparison is a sign computation on rationals and ``t`` is never needed.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .errors import NonPositiveRank, OutsideHalfPlane, ZeroCharge
from .lattice import MukaiClass, Rational, SurfaceData, square, to_fraction


@dataclass(frozen=True)
class StabilityPoint:
    b: Fraction
    T: Fraction

    def __init__(self, b: Rational, T: Rational) -> None:
        b, T = to_fraction(b), to_fraction(T)
        if T <= 0:
            raise ValueError(f"T = t^2 must be positive, got {T}")
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "T", T)


@dataclass(frozen=True)
class ChargeValue:
    re: Fraction
    im_over_t: Fraction

    @property
    def is_zero(self) -> bool:
        return self.re == 0 and self.im_over_t == 0

    def __add__(self, other: "ChargeValue") -> "ChargeValue":
        return ChargeValue(self.re + other.re, self.im_over_t + other.im_over_t)

    def __neg__(self) -> "ChargeValue":
        return ChargeValue(-self.re, -self.im_over_t)


def charge_re(v: MukaiClass, b: Fraction, T: Fraction, X: SurfaceData) -> Fraction:
    d = X.d
    return 2 * d * b * v.c - v.s - v.r * d * (b * b - T)


def charge_im(v: MukaiClass, b: Fraction, X: SurfaceData) -> Fraction:
    return 2 * X.d * (v.c - v.r * b)


def central_charge(v: MukaiClass, p: StabilityPoint, X: SurfaceData) -> ChargeValue:
    return ChargeValue(charge_re(v, p.b, p.T, X), charge_im(v, p.b, X))


def normalize(z: ChargeValue) -> tuple[int, ChargeValue]:
    """Sign ``e`` and ``e*z`` lying in {im > 0} or on the negative real axis."""
    if z.is_zero:
        raise ZeroCharge("Z(v) = 0 has no phase")
    if z.im_over_t < 0 or (z.im_over_t == 0 and z.re > 0):
        return -1, -z
    return 1, z


class Ordering(enum.Enum):
    LESS = "Less"
    EQUAL = "Equal"
    GREATER = "Greater"


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def phase_compare(
    v: MukaiClass, w: MukaiClass, p: StabilityPoint, X: SurfaceData, *, strict: bool = False
) -> Ordering:
    """How the phase of ``Z(w)`` compares with the phase of ``Z(v)`` at ``p``.

    Charges in the lower half-plane are negated first.  A charge on the
    positive real axis is given phase 0, the limit of phases from the upper
    half-plane.  Two real charges are real-proportional, so ``p`` lies on
    their numerical wall and they compare ``EQUAL``; so does a vanishing
    charge.  With ``strict=True`` a charge on the positive real axis raises
    ``OutsideHalfPlane`` and a vanishing one raises ``ZeroCharge``.
    """
    zv, zw = central_charge(v, p, X), central_charge(w, p, X)
    if zv.is_zero or zw.is_zero:
        if strict:
            raise ZeroCharge("phase comparison with a vanishing central charge")
        return Ordering.EQUAL
    if zv.im_over_t < 0:
        zv = -zv
    if zw.im_over_t < 0:
        zw = -zw
    if strict and any(z.im_over_t == 0 and z.re > 0 for z in (zv, zw)):
        raise OutsideHalfPlane("charge on the positive real axis")
    if zv.im_over_t == 0 and zw.im_over_t == 0:
        return Ordering.EQUAL
    cross = zv.re * zw.im_over_t - zv.im_over_t * zw.re
    return {1: Ordering.GREATER, 0: Ordering.EQUAL, -1: Ordering.LESS}[_sign(cross)]


def twisted(v: MukaiClass, b: Fraction, X: SurfaceData) -> MukaiClass:
    """``exp(-bH) . v`` = (r, c - rb, s - 2dbc + rdb^2)."""
    d = X.d
    return MukaiClass(v.r, v.c - v.r * b, v.s - 2 * d * b * v.c + v.r * d * b * b)


def slope_and_discrepancy(v: MukaiClass, b: Rational, X: SurfaceData) -> tuple[Fraction, Fraction]:
    """Scale-free slope ``mu/t`` and discrepancy ``delta`` (independent of T)."""
    b = to_fraction(b)
    if v.r <= 0:
        raise NonPositiveRank(f"slope needs positive rank, got r = {v.r}")
    d = X.d
    vb = twisted(v, b, X)
    mu_hat = 2 * d * vb.c / v.r
    delta = -vb.s / v.r + 1 + d * vb.c * vb.c / (v.r * v.r)
    return mu_hat, delta


def hodge_index_bound(v: MukaiClass, X: SurfaceData) -> Fraction:
    """Lower bound ``(v^2 + 2)/(2r^2) + (1 - 1/r^2)`` for the discrepancy."""
    r2 = v.r * v.r
    return (square(v, X) + 2) / (2 * r2) + (1 - 1 / r2)


def spherical_obstruction(b: Rational, X: SurfaceData) -> MukaiClass | None:
    """The spherical class with Im Z = 0 along the vertical line at ``b``, if integral.

    Writing ``b = p/q`` in lowest terms, a spherical class of positive rank
    with ``c = rb`` must be ``(q, p, (dp^2 + 1)/q)``.
    """
    b = to_fraction(b)
    p, q = b.numerator, b.denominator
    num = X.d * p * p + 1
    if num % q:
        return None
    return MukaiClass(q, p, num // q)


def is_geometric(p: StabilityPoint, X: SurfaceData) -> tuple[bool, MukaiClass | None]:
    """Whether ``Z(F)`` avoids the non-positive real axis for every spherical sheaf F.

    Fails exactly when ``(q, p, (dp^2+1)/q)`` is integral and ``T <= 1/(d q^2)``;
    the failing class is returned as witness.
    """
    xi = spherical_obstruction(p.b, X)
    if xi is None:
        return True, None
    q = p.b.denominator
    if p.T <= Fraction(1, X.d * q * q):
        return False, xi
    return True, None
