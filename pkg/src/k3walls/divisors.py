"""Nef divisor classes attached to points of the stability slice.

For a class v and a point (b, T) the divisor class on the moduli space is the
image under the Mukai homomorphism of the class

    w_raw = y * e_re - x * e_im,   e_re = (1, b, d(b^2 - T)),  e_im = (0, 1, 2db),

where ``x + i t y`` is ``Z(v)``.  It lies in ``v^perp`` and has positive
square.  On the Hilbert scheme (v = (1, 0, 1 - n)) classes in ``v^perp`` are
written in the basis ``H~, B`` of NS(Hilb^n).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .charge import StabilityPoint, central_charge, charge_im, charge_re
from .errors import HypothesisFailed, NotOrthogonal, ZeroCharge, ZeroVector
from .lattice import (
    MukaiClass,
    Rational,
    SurfaceData,
    frac_str,
    mukai_pairing,
    primitive,
    rational_sqrt,
    to_fraction,
)
from .walls import spherical_solver


@dataclass(frozen=True)
class OrthogonalClass:
    """A class ``w`` with ``(w, host) = 0``; built by the functions below."""

    w: MukaiClass
    host: MukaiClass


def _orthogonal(w: MukaiClass, v: MukaiClass, X: SurfaceData) -> OrthogonalClass:
    if mukai_pairing(w, v, X) != 0:
        raise NotOrthogonal(f"{w} is not orthogonal to {v}")
    return OrthogonalClass(w, v)


def w_raw_components(v: MukaiClass, b: Fraction, T: Fraction, X: SurfaceData) -> MukaiClass:
    """Unscaled ``y e_re - x e_im``; T may be 0 here (the t -> 0 limit)."""
    d = X.d
    x = charge_re(v, b, T, X)
    y = charge_im(v, b, X)
    return MukaiClass(y, y * b - x, y * d * (b * b - T) - 2 * d * b * x)


def w_raw(v: MukaiClass, p: StabilityPoint, X: SurfaceData) -> MukaiClass:
    return w_raw_components(v, p.b, p.T, X)


def w_sigma(v: MukaiClass, p: StabilityPoint, X: SurfaceData) -> OrthogonalClass:
    """Primitive integral class on the ray of ``w_raw`` at ``p``.

    The class is computed from v exactly as given.  Replacing v by -v flips
    ``w_raw`` and also the Mukai homomorphism, so the divisor is unchanged.
    """
    if central_charge(v, p, X).is_zero:
        raise ZeroCharge(f"Z(v) vanishes at b={p.b}, T={p.T}")
    return _orthogonal(primitive(w_raw(v, p, X)), v, X)


def w_limit_zero(v: MukaiClass, b: Rational, X: SurfaceData) -> OrthogonalClass:
    b = to_fraction(b)
    raw = w_raw_components(v, b, Fraction(0), X)
    if raw.is_zero:
        raise ZeroVector(f"the t -> 0 limit vanishes for v={v}, b={b}")
    return _orthogonal(primitive(raw), v, X)


def w_limit_infinity_raw(v: MukaiClass, X: SurfaceData) -> MukaiClass:
    d = X.d
    return MukaiClass(0, -v.r * d, -2 * d * d * v.c)


def w_limit_infinity(v: MukaiClass, X: SurfaceData) -> OrthogonalClass:
    raw = w_limit_infinity_raw(v, X)
    if raw.is_zero:
        raise ZeroVector(f"the t -> infinity limit vanishes for v={v}")
    return _orthogonal(primitive(raw), v, X)


# --------------------------------------------------------------------------
# Hilbert scheme of points


@dataclass(frozen=True)
class HilbDivisor:
    """``x H~ + y B`` on Hilb^n."""

    x: Fraction
    y: Fraction
    n: int

    def __init__(self, x: Rational, y: Rational, n: int) -> None:
        object.__setattr__(self, "x", to_fraction(x))
        object.__setattr__(self, "y", to_fraction(y))
        object.__setattr__(self, "n", n)

    def normalized(self) -> "HilbDivisor":
        """Rescale so that the H~ coefficient is 1 (or y = +-1 when x = 0)."""
        k = abs(self.x) if self.x != 0 else abs(self.y)
        if k == 0:
            return self
        return HilbDivisor(self.x / k, self.y / k, self.n)

    def proportional_to(self, other: "HilbDivisor") -> bool:
        return self.x * other.y == self.y * other.x and (self.x * other.x + self.y * other.y) > 0

    def canonical(self) -> str:
        """``"p/q H~ +- p/q B"`` with explicit denominators."""
        sign = "-" if self.y < 0 else "+"
        return f"{frac_str(self.x)} H~ {sign} {frac_str(abs(self.y))} B"

    def __str__(self) -> str:
        parts = []
        if self.x != 0:
            parts.append("H~" if self.x == 1 else ("-H~" if self.x == -1 else f"{self.x} H~"))
        if self.y != 0:
            mag = abs(self.y)
            term = "B" if mag == 1 else f"{mag} B"
            if parts:
                parts.append(("- " if self.y < 0 else "+ ") + term)
            else:
                parts.append(("-" if self.y < 0 else "") + term)
        return " ".join(parts) if parts else "0"


@dataclass(frozen=True)
class CurveClass:
    """``p h + q b``, dual to ``H~, B``: h.H~ = 2d, b.B = 1, h.B = b.H~ = 0."""

    p: Fraction
    q: Fraction

    def __init__(self, p: Rational, q: Rational) -> None:
        object.__setattr__(self, "p", to_fraction(p))
        object.__setattr__(self, "q", to_fraction(q))

    def __str__(self) -> str:
        return f"{self.p} h + {self.q} b"


def theta_hilb(w: OrthogonalClass | MukaiClass, n: int) -> HilbDivisor:
    """Image of ``w in v^perp`` for ``v = (1, 0, 1 - n)``: (0,-1,0) -> H~, (1,0,n-1) -> -B."""
    if isinstance(w, OrthogonalClass):
        if w.host != MukaiClass(1, 0, 1 - n):
            raise NotOrthogonal(f"host class {w.host} is not (1, 0, {1 - n})")
        w = w.w
    if w.s != w.r * (n - 1):
        raise NotOrthogonal(f"{w} is not orthogonal to (1, 0, {1 - n})")
    return HilbDivisor(-w.c, -w.r, n)


def bb_square(D: HilbDivisor, X: SurfaceData) -> Fraction:
    return 2 * X.d * D.x * D.x - (2 * D.n - 2) * D.y * D.y


def bb_pairing(D: HilbDivisor, E: HilbDivisor, X: SurfaceData) -> Fraction:
    return 2 * X.d * D.x * E.x - (2 * D.n - 2) * D.y * E.y


def curve_divisor_pairing(R: CurveClass, D: HilbDivisor, d: int) -> Fraction:
    return 2 * d * R.p * D.x + R.q * D.y


def curve_bb_square(R: CurveClass, d: int, n: int) -> Fraction:
    """Square of a curve class under N_1 = N^1 induced by the BB form.

    ``h`` corresponds to ``H~`` and ``b`` to ``-B/(2n-2)``.
    """
    return 2 * d * R.p * R.p - R.q * R.q / (2 * n - 2)


@dataclass(frozen=True)
class HilbNefCone:
    d: int
    n: int
    generators: tuple[HilbDivisor, HilbDivisor]
    extremal_curve: CurveClass
    extremal_curve_square: Fraction


def hilb_nef_cone(d: int, n: int) -> HilbNefCone:
    """Nef cone of Hilb^n on a K3 with H^2 = 2d, valid for n >= (d+3)/2."""
    if d < 1:
        raise ValueError("d must be positive")
    if 2 * n < d + 3:
        raise HypothesisFailed(
            f"n = {n} < (d+3)/2 = {Fraction(d + 3, 2)}: a g^1_n exists on every smooth curve in |H| "
            "if and only if n >= (d+3)/2, so the O(-H) wall need not contract a curve"
        )
    gens = (HilbDivisor(1, 0, n), HilbDivisor(1, Fraction(-2 * d, d + n), n))
    R = CurveClass(1, d + n)
    return HilbNefCone(d, n, gens, R, curve_bb_square(R, d, n))


@dataclass(frozen=True)
class LagrangianData:
    d: int
    n: int
    k: int
    h: int
    square_zero_ray: HilbDivisor
    cone_kind: str | None  # "nef" or "movable"
    cone_generators: tuple[HilbDivisor, HilbDivisor] | None
    # limit classes that produce the cone generators
    w_limits: tuple[MukaiClass, MukaiClass] | None = None


def square_zero_solution(d: int, n: int) -> tuple[int, int] | None:
    """Coprime (k, h) with ``d h^2 = k^2 (n - 1)``, or None."""
    if n < 2:
        return None
    root = rational_sqrt(Fraction(d, n - 1))
    if root is None:
        return None
    return root.numerator, root.denominator


def obstruction_constraints(d: int, n: int, k: int) -> list[tuple[MukaiClass, Fraction]]:
    """Linear conditions on a spherical factor of a flopping-type wall on the path b = -2/k."""
    u = MukaiClass(0, Fraction(1, k), 1 - n)
    v = MukaiClass(1, 0, 1 - n)
    return [(u, Fraction(n - 1, 2)), (v, Fraction(-1))]


def lagrangian_check(d: int, n: int) -> LagrangianData | None:
    """Square-zero ray of Hilb^n and, where the numerics allow, the cone it bounds.

    h = 1, k >= 2: nef cone {H~, H~ - kB}.  h = 2, k odd: movable cone
    {H~, 2H~ - kB}, after checking that no spherical class obstructs the
    wall-crossings along b = -2/k.
    """
    if d < 1 or n < 2:
        raise ValueError("need d >= 1 and n >= 2")
    sol = square_zero_solution(d, n)
    if sol is None:
        return None
    k, h = sol
    X = SurfaceData(d)
    ray = HilbDivisor(h, -k, n)
    assert bb_square(ray, X) == 0
    v = MukaiClass(1, 0, 1 - n)
    if h == 1 and k >= 2:
        w0 = w_limit_zero(v, Fraction(-1, k), X).w
        winf = w_limit_infinity(v, X).w
        gens = (theta_hilb(winf, n), theta_hilb(w0, n))
        return LagrangianData(d, n, k, h, ray, "nef", gens, (winf, w0))
    if h == 2 and k % 2 == 1:
        if spherical_solver(obstruction_constraints(d, n, k), X):
            return LagrangianData(d, n, k, h, ray, None, None)
        w0 = w_limit_zero(v, Fraction(-2, k), X).w
        winf = w_limit_infinity(v, X).w
        gens = (theta_hilb(winf, n), theta_hilb(w0, n))
        return LagrangianData(d, n, k, h, ray, "movable", gens, (winf, w0))
    return LagrangianData(d, n, k, h, ray, None, None)
