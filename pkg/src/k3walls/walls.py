"""Numerical walls for a class v in the (b, t) upper half-plane.

The locus where ``Z(w)`` and ``Z(v)`` are real-proportional is

    -d D (b^2 + T) + b (s_v r_w - r_v s_w) + (c_v s_w - c_w s_v) = 0,
    D = c_v r_w - r_v c_w,

a semicircle ``(b - b0)^2 + t^2 = R^2`` when ``D != 0`` and a vertical line
otherwise.  A class w *destabilizes along the wall* at a point when
``Z(w) = lam * Z(v)`` with ``0 <= lam <= 1`` there, i.e. when both ``Z(w)`` and
``Z(v - w)`` lie on the segment from 0 to ``Z(v)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .charge import charge_re, slope_and_discrepancy
from .errors import (
    DegeneratePath,
    EmptyRegion,
    ForeignWall,
    NonPositiveRank,
    NonPositiveSlope,
    ProportionalClasses,
    UnderdeterminedSystem,
)
from .lattice import (
    MukaiClass,
    Rational,
    SurfaceData,
    mukai_pairing,
    proportional,
    rational_sqrt,
    square,
    to_fraction,
)


@dataclass(frozen=True, order=True)
class Semicircle:
    center_b: Fraction
    radius_sq: Fraction

    def T_at(self, b: Fraction) -> Fraction:
        return self.radius_sq - (b - self.center_b) ** 2

    def contains(self, b: Fraction, T: Fraction) -> bool:
        return self.T_at(b) == T


@dataclass(frozen=True, order=True)
class VerticalLine:
    b: Fraction

    def contains(self, b: Fraction, T: Fraction) -> bool:
        return b == self.b


WallGeometry = Union[Semicircle, VerticalLine]


def _geometry_key(g: WallGeometry) -> tuple:
    if isinstance(g, Semicircle):
        return (g.center_b, g.radius_sq, 1)
    return (g.b, Fraction(0), 0)


@dataclass(frozen=True)
class Decomposition:
    """A potential destabilizer ``w`` together with ``v - w`` and ``(w, v - w)``."""

    w: MukaiClass
    complement: MukaiClass
    pairing: Fraction
    square_w: Fraction
    square_complement: Fraction
    # w^2 + (v-w)^2 <= v^2 - 2: only meaningful for distinct stable factors
    mukai_inequality: bool
    # closed b-intervals of the region on which the charge sandwich holds
    active: tuple[tuple[Fraction, Fraction], ...] = ()

    def active_at(self, b: Fraction) -> bool:
        return any(lo <= b <= hi for lo, hi in self.active)


@dataclass(frozen=True)
class Wall:
    geometry: WallGeometry
    destabilizers: tuple[Decomposition, ...]


@dataclass(frozen=True)
class Region:
    """``b_min <= b <= b_max`` and ``T_min <= T <= T_max`` intersected with T > 0."""

    b_min: Fraction
    b_max: Fraction
    T_min: Fraction
    T_max: Fraction

    def __init__(self, b_min: Rational, b_max: Rational, T_min: Rational, T_max: Rational) -> None:
        vals = [to_fraction(x) for x in (b_min, b_max, T_min, T_max)]
        for name, val in zip(("b_min", "b_max", "T_min", "T_max"), vals):
            object.__setattr__(self, name, val)
        if self.b_min > self.b_max or self.T_min > self.T_max or self.T_max <= 0:
            raise EmptyRegion(f"empty region b in [{self.b_min}, {self.b_max}], T in [{self.T_min}, {self.T_max}]")


@dataclass(frozen=True)
class GiesekerBoundReport:
    Dv: tuple[MukaiClass, ...]
    mu_max_hat: Fraction
    T_bound: Fraction
    mu_hat: Fraction
    delta: Fraction


@dataclass(frozen=True)
class WallFlags:
    has_spherical_destabilizer: bool
    has_isotropic_destabilizer: bool
    pairing_one_with_spherical: bool
    pairing_at_least_two: bool
    hilbert_chow: bool
    totally_semistable_hint: bool
    notes: tuple[str, ...] = field(default=())


def default_rank_bound(v: MukaiClass) -> int:
    return 2 * abs(math.ceil(abs(v.r))) + 4


# --------------------------------------------------------------------------
# wall of a pair


def wall_of_pair(v: MukaiClass, w: MukaiClass, X: SurfaceData) -> WallGeometry | None:
    if proportional(v, w):
        raise ProportionalClasses(f"{w} is proportional to {v}")
    d = X.d
    delta = v.c * w.r - v.r * w.c
    if delta != 0:
        center = -(v.r * w.s - w.r * v.s) / (2 * d * delta)
        radius_sq = center * center - (w.c * v.s - v.c * w.s) / (d * delta)
        return Semicircle(center, radius_sq) if radius_sq > 0 else None
    den = v.r * w.s - w.r * v.s
    if den == 0:
        return None
    return VerticalLine((v.c * w.s - w.c * v.s) / den)


# --------------------------------------------------------------------------
# enumeration helpers


def _linear_ge_zero(a: Fraction, k: Fraction, lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction] | None:
    """Sub-interval of [lo, hi] where ``a + k*b >= 0``."""
    if k == 0:
        return (lo, hi) if a >= 0 else None
    root = -a / k
    if k > 0:
        lo = max(lo, root)
    else:
        hi = min(hi, root)
    return (lo, hi) if lo <= hi else None


def _sandwich_intervals(
    v: MukaiClass, r_w: int, c_w: int, b_lo: Fraction, b_hi: Fraction
) -> list[tuple[Fraction, Fraction]]:
    """Closed b-intervals in [b_lo, b_hi] where Im Z(w) lies between 0 and Im Z(v).

    Pieces are split where Im Z(v) vanishes; such a point is never part of an
    interval unless the classes have proportional (r, c) parts.
    """
    pieces = [(b_lo, b_hi)]
    if v.r != 0:
        b_star = v.c / v.r
        if b_lo < b_star < b_hi:
            pieces = [(b_lo, b_star), (b_star, b_hi)]
    out = []
    for lo, hi in pieces:
        mid = (lo + hi) / 2
        sigma = 1 if v.c - v.r * mid > 0 else -1
        if v.c - v.r * mid == 0:
            # the whole piece is a single degenerate point
            continue
        # sigma*(c_w - r_w b) >= 0  and  sigma*((c_v - c_w) - (r_v - r_w) b) >= 0
        iv = _linear_ge_zero(Fraction(sigma * c_w), Fraction(-sigma * r_w), lo, hi)
        if iv is None:
            continue
        iv = _linear_ge_zero(sigma * (v.c - c_w), -sigma * (v.r - r_w), *iv)
        if iv is not None:
            out.append(iv)
    return out


def _floor(x: Fraction) -> int:
    return math.floor(x)


def _ceil(x: Fraction) -> int:
    return math.ceil(x)


def _s_bounds_from_squares(v: MukaiClass, r_w: int, c_w: int, X: SurfaceData) -> tuple[Fraction | None, Fraction | None]:
    """Bounds on s_w from w^2 >= -2 and (v - w)^2 >= -2 (None = unbounded)."""
    d = X.d
    lo: Fraction | None = None
    hi: Fraction | None = None

    def tighten_hi(x: Fraction) -> None:
        nonlocal hi
        hi = x if hi is None else min(hi, x)

    def tighten_lo(x: Fraction) -> None:
        nonlocal lo
        lo = x if lo is None else max(lo, x)

    # r_w s_w <= d c_w^2 + 1
    bound = Fraction(d * c_w * c_w + 1)
    if r_w > 0:
        tighten_hi(bound / r_w)
    elif r_w < 0:
        tighten_lo(bound / r_w)
    # (r_v - r_w)(s_v - s_w) <= d (c_v - c_w)^2 + 1
    rr = v.r - r_w
    bound2 = d * (v.c - c_w) ** 2 + 1
    if rr > 0:
        tighten_lo(v.s - bound2 / rr)
    elif rr < 0:
        tighten_hi(v.s - bound2 / rr)
    return lo, hi


def _max_abs_on(values: Iterable[Fraction]) -> Fraction:
    return max(abs(x) for x in values)


def _exists_nonneg(A: Fraction, B: Fraction, C: Fraction, lo: Fraction, hi: Fraction) -> bool:
    """Does ``A T^2 + B T + C >= 0`` hold for some T in [lo, hi] with T > 0?"""
    def q(T: Fraction) -> Fraction:
        return (A * T + B) * T + C

    pts = [lo, hi]
    if A != 0:
        pts.append(-B / (2 * A))
    if any(q(T) >= 0 for T in pts if lo <= T <= hi and T > 0):
        return True
    if lo <= 0 < hi:
        # behaviour just above T = 0
        return C > 0 or (C == 0 and (B > 0 or (B == 0 and A >= 0)))
    return False


def _semicircle_meets(g: Semicircle, bl: Fraction, bh: Fraction, region: Region) -> bool:
    b_peak = min(max(g.center_b, bl), bh)
    t_max = g.T_at(b_peak)
    t_min = min(g.T_at(bl), g.T_at(bh))
    lo = max(t_min, region.T_min)
    hi = min(t_max, region.T_max)
    return lo <= hi and hi > 0


def _decomposition(
    v: MukaiClass, w: MukaiClass, X: SurfaceData, active: Iterable[tuple[Fraction, Fraction]] = ()
) -> Decomposition:
    u = v - w
    sw, su = square(w, X), square(u, X)
    return Decomposition(
        w=w,
        complement=u,
        pairing=mukai_pairing(w, u, X),
        square_w=sw,
        square_complement=su,
        mukai_inequality=sw + su <= square(v, X) - 2,
        active=tuple(sorted(set(active))),
    )


def _c_range(v: MukaiClass, r_w: int, region: Region) -> range:
    lows, highs = [], []
    for b in (region.b_min, region.b_max):
        y = v.c - v.r * b
        lows.append(r_w * b + min(0, y))
        highs.append(r_w * b + max(0, y))
    return range(_ceil(min(lows)), _floor(max(highs)) + 1)


def _s_window(
    v: MukaiClass, r_w: int, c_w: int, k: Fraction, bl: Fraction, bh: Fraction, T_lo: Fraction, T_hi: Fraction,
    pieces: int = 16,
) -> tuple[Fraction, Fraction]:
    """Range of s_w = N(b, T) / D(b) over the box, by interval arithmetic on sub-intervals.

    On the wall ``N = k (b^2 + T) - b s_v r_w + c_w s_v`` with ``k = d * Delta``
    and ``D = c_v - r_v b``, which keeps one sign on ``[bl, bh]``.
    """
    if bl == bh:
        pieces = 1
    lo: Fraction | None = None
    hi: Fraction | None = None
    step = (bh - bl) / pieces
    for i in range(pieces):
        b0, b1 = bl + i * step, bl + (i + 1) * step
        sq_lo = Fraction(0) if b0 <= 0 <= b1 else min(b0 * b0, b1 * b1)
        sq_hi = max(b0 * b0, b1 * b1)
        quad = sorted((k * (sq_lo + T_lo), k * (sq_hi + T_hi), k * (sq_lo + T_hi), k * (sq_hi + T_lo)))
        lin = sorted((-b0 * v.s * r_w, -b1 * v.s * r_w))
        n_lo = quad[0] + lin[0] + c_w * v.s
        n_hi = quad[-1] + lin[-1] + c_w * v.s
        ds = (v.c - v.r * b0, v.c - v.r * b1)
        qs = [n / dd for n in (n_lo, n_hi) for dd in ds]
        lo = min(qs) if lo is None else min(lo, min(qs))
        hi = max(qs) if hi is None else max(hi, max(qs))
    assert lo is not None and hi is not None
    return lo, hi


def _semicircle_candidates(
    v: MukaiClass, r_w: int, c_w: int, region: Region, X: SurfaceData
) -> Iterable[tuple[MukaiClass, Semicircle, tuple[Fraction, Fraction]]]:
    d = X.d
    delta = v.c * r_w - v.r * c_w
    sq_lo, sq_hi = _s_bounds_from_squares(v, r_w, c_w, X)
    T_hi = region.T_max
    T_lo = max(region.T_min, Fraction(0))
    for bl, bh in _sandwich_intervals(v, r_w, c_w, region.b_min, region.b_max):
        lo, hi = _s_window(v, r_w, c_w, delta * d, bl, bh, T_lo, T_hi)
        if sq_lo is not None:
            lo = max(lo, sq_lo)
        if sq_hi is not None:
            hi = min(hi, sq_hi)
        for s_w in range(_ceil(lo), _floor(hi) + 1):
            w = MukaiClass(r_w, c_w, s_w)
            if square(w, X) < -2 or square(v - w, X) < -2:
                continue
            g = wall_of_pair(v, w, X)
            if isinstance(g, Semicircle) and _semicircle_meets(g, bl, bh, region):
                yield w, g, (bl, bh)


def _vertical_candidates(
    v: MukaiClass, r_w: int, c_w: int, region: Region, X: SurfaceData
) -> Iterable[tuple[MukaiClass, VerticalLine, tuple[Fraction, Fraction]]]:
    # (r_w, c_w) = mu (r_v, c_v); the only possible vertical wall is b* = c_v / r_v
    if v.r == 0:
        return
    b_star = v.c / v.r
    if not (region.b_min <= b_star <= region.b_max):
        return
    d = X.d
    mu = Fraction(r_w) / v.r
    T_lo, T_hi = max(region.T_min, Fraction(0)), region.T_max
    # x_v(T) = K + r_v d T at b*, and x_w = mu (x_v + s_v) - s_w
    K = charge_re(v, b_star, Fraction(0), X)
    x_abs = _max_abs_on([K + v.r * d * T_lo, K + v.r * d * T_hi])
    spread = max(abs(mu), abs(mu - 1)) * x_abs
    lo, hi = mu * v.s - spread, mu * v.s + spread
    sq_lo, sq_hi = _s_bounds_from_squares(v, r_w, c_w, X)
    if sq_lo is not None:
        lo = max(lo, sq_lo)
    if sq_hi is not None:
        hi = min(hi, sq_hi)
    for s_w in range(_ceil(lo), _floor(hi) + 1):
        w = MukaiClass(r_w, c_w, s_w)
        if w.is_zero or proportional(v, w):
            continue
        if square(w, X) < -2 or square(v - w, X) < -2:
            continue
        g = wall_of_pair(v, w, X)
        if not isinstance(g, VerticalLine) or g.b != b_star:
            continue
        # need x_w (x_v - x_w) >= 0 for some admissible T; both are linear in T
        a0, a1 = mu * (K + v.s) - s_w, mu * v.r * d  # x_w = a0 + a1 T
        b0, b1 = K - a0, v.r * d - a1  # x_v - x_w
        if _exists_nonneg(a1 * b1, a0 * b1 + a1 * b0, a0 * b0, T_lo, T_hi):
            yield w, g, (b_star, b_star)


def potential_destabilizers(
    v: MukaiClass,
    region: Region,
    rank_bound: int,
    X: SurfaceData,
    *,
    require_mukai_inequality: bool = False,
) -> list[Wall]:
    """All numerical walls for ``v`` meeting ``region`` with destabilizers of rank ``<= rank_bound``.

    Candidates satisfy ``w^2 >= -2``, ``(v-w)^2 >= -2`` and the charge sandwich
    at some point of the wall inside the region.  The sharper Mukai inequality
    is recorded on each decomposition and only filters when requested.
    """
    if rank_bound < 0:
        raise ValueError("rank_bound must be non-negative")
    if v.r == 0 and v.c == 0:
        # Im Z(v) = 0 identically: nothing has imaginary part strictly in between
        return []
    if region.b_min == region.b_max and v.c - v.r * region.b_min == 0:
        raise DegeneratePath(f"Im Z(v) vanishes on the whole line b = {region.b_min}")

    found: dict[WallGeometry, dict[MukaiClass, list[tuple[Fraction, Fraction]]]] = {}
    for r_w in range(-rank_bound, rank_bound + 1):
        for c_w in _c_range(v, r_w, region):
            delta = v.c * r_w - v.r * c_w
            if delta != 0:
                cands = _semicircle_candidates(v, r_w, c_w, region, X)
            else:
                cands = _vertical_candidates(v, r_w, c_w, region, X)
            for w, g, iv in cands:
                found.setdefault(g, {}).setdefault(w, []).append(iv)

    walls = []
    for g in sorted(found, key=_geometry_key):
        decs = [_decomposition(v, w, X, found[g][w]) for w in sorted(found[g])]
        if require_mukai_inequality:
            decs = [dec for dec in decs if dec.mukai_inequality]
        if decs:
            walls.append(Wall(g, tuple(decs)))
    return walls


def walls_on_vertical_path(
    v: MukaiClass,
    b: Rational,
    T_range: tuple[Rational, Rational],
    rank_bound: int,
    X: SurfaceData,
) -> list[tuple[Fraction, Wall]]:
    """Walls crossed by the path ``t -> (b, t)``, ordered by decreasing T."""
    b = to_fraction(b)
    if v.c - v.r * b == 0:
        raise DegeneratePath(f"Im Z(v) vanishes on the whole line b = {b}")
    region = Region(b, b, T_range[0], T_range[1])
    crossings = []
    for wall in potential_destabilizers(v, region, rank_bound, X):
        assert isinstance(wall.geometry, Semicircle)
        crossings.append((wall.geometry.T_at(b), wall))
    crossings.sort(key=lambda tw: (-tw[0], _geometry_key(tw[1].geometry)))
    return crossings


# --------------------------------------------------------------------------
# Gieseker chamber


def in_Dv(w: MukaiClass, v: MukaiClass, b: Fraction, X: SurfaceData) -> bool:
    if not (0 < w.r <= v.r) or square(w, X) < -2:
        return False
    mu_v, delta_v = slope_and_discrepancy(v, b, X)
    mu_w, delta_w = slope_and_discrepancy(w, b, X)
    return 0 < mu_w < mu_v and delta_w < delta_v


def gieseker_bound(v: MukaiClass, b: Rational, X: SurfaceData) -> GiesekerBoundReport:
    """Finite set D_v, the maximal slope below mu(v), and the resulting bound on T.

    Above ``T_bound`` twisted Gieseker stable sheaves of class v are stable.
    """
    b = to_fraction(b)
    if v.r <= 0:
        raise NonPositiveRank(f"needs positive rank, got r = {v.r}")
    d = X.d
    mu_v, delta_v = slope_and_discrepancy(v, b, X)
    if mu_v <= 0:
        raise NonPositiveSlope(f"needs positive slope at b = {b}, got {mu_v}")
    cb_v = v.c - v.r * b
    Dv = []
    for r_w in range(1, _floor(v.r) + 1):
        # 0 < c_w - r_w b < r_w (c_v - r_v b) / r_v
        c_lo, c_hi = r_w * b, r_w * b + r_w * cb_v / v.r
        for c_w in range(_floor(c_lo) + 1, _ceil(c_hi)):
            cb = c_w - r_w * b
            s_hi = Fraction(d * c_w * c_w + 1, r_w)
            s_lo = r_w * (1 + d * cb * cb / (r_w * r_w) - delta_v) + 2 * d * b * c_w - r_w * d * b * b
            for s_w in range(_floor(s_lo) + 1, _floor(s_hi) + 1):
                w = MukaiClass(r_w, c_w, s_w)
                if in_Dv(w, v, b, X):
                    Dv.append(w)
    slopes = [slope_and_discrepancy(w, b, X)[0] for w in Dv]
    mu_max = max(slopes + [v.r / (v.r + 1) * mu_v])
    ratio = mu_max / (mu_v - mu_max)
    T_bound = (2 + 2 * ratio * delta_v) / (2 * d)
    return GiesekerBoundReport(tuple(sorted(Dv)), mu_max, T_bound, mu_v, delta_v)


# --------------------------------------------------------------------------
# classification


def hilbert_n(v: MukaiClass) -> int | None:
    """n if ``v = (1, 0, 1 - n)`` with n >= 1, else None."""
    if v.r == 1 and v.c == 0 and v.s.denominator == 1 and v.s <= 0:
        return int(1 - v.s)
    return None


def classify_wall(v: MukaiClass, wall: Wall, X: SurfaceData, hilb_n: int | None = None) -> WallFlags:
    """Annotate a wall with the decomposition data of its destabilizers.

    The flags are numerical hints; they do not decide whether a wall is
    totally semistable, fake, flopping or bouncing.
    """
    for dec in wall.destabilizers:
        if dec.w + dec.complement != v or wall_of_pair(v, dec.w, X) != wall.geometry:
            raise ForeignWall(f"{dec.w} does not define this wall for {v}")
    if hilb_n is None:
        hilb_n = hilbert_n(v)
    elif hilbert_n(v) != hilb_n:
        raise ForeignWall(f"{v} is not the class (1, 0, {1 - hilb_n}) of an ideal sheaf")

    def is_sph(x: Fraction) -> bool:
        return x == -2

    spherical = any(is_sph(dec.square_w) or is_sph(dec.square_complement) for dec in wall.destabilizers)
    isotropic = any(dec.square_w == 0 or dec.square_complement == 0 for dec in wall.destabilizers)
    one_sph = any(
        dec.pairing == 1 and (is_sph(dec.square_w) or is_sph(dec.square_complement)) for dec in wall.destabilizers
    )
    ge_two = any(dec.pairing >= 2 for dec in wall.destabilizers)
    hc = hilb_n is not None and wall.geometry == VerticalLine(Fraction(0))
    hint = False
    notes = ["boundary walls of type C_k cannot occur in Picard rank one"]
    if hilb_n is not None:
        o_minus_h = MukaiClass(1, -1, X.d + 1)
        if any(o_minus_h in (dec.w, dec.complement) for dec in wall.destabilizers):
            hint = hilb_n <= X.d + 1
            notes.append(f"O(-H) wall: ideal sheaves on curves in |H| exist for all Y iff n <= {X.d + 1}")
    return WallFlags(spherical, isotropic, one_sph, ge_two, hc, hint, tuple(notes))


# --------------------------------------------------------------------------
# spherical classes under linear constraints


def _rref(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    m = [row[:] for row in rows]
    pivots: list[int] = []
    ncols = len(m[0]) - 1 if m else 0
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][col]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col] != 0:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
    return m, pivots


def spherical_solver(constraints: Sequence[tuple[MukaiClass, Rational]], X: SurfaceData) -> list[MukaiClass]:
    """Integral classes xi with ``(u_i, xi) = a_i`` for all constraints and ``xi^2 = -2``.

    The affine solution set of the linear equations must be at most a line.
    An empty result certifies that no such class exists.
    """
    d = X.d
    # (u, xi) = -s_u r + 2d c_u c - r_u s in the unknowns (r, c, s)
    rows = [[-u.s, 2 * d * u.c, -u.r, to_fraction(a)] for u, a in constraints]
    if not rows:
        raise UnderdeterminedSystem("no constraints given")
    m, pivots = _rref(rows)
    if any(all(x == 0 for x in row[:3]) and row[3] != 0 for row in m):
        return []
    free = [j for j in range(3) if j not in pivots]
    if len(free) >= 2:
        raise UnderdeterminedSystem(f"solution set has dimension {len(free)}")
    base = [Fraction(0)] * 3
    for i, col in enumerate(pivots):
        base[col] = m[i][3]
    xi0 = MukaiClass(*base)
    if not free:
        return [xi0] if xi0.is_integral and square(xi0, X) == -2 else []
    f = free[0]
    direction = [Fraction(0)] * 3
    direction[f] = Fraction(1)
    for i, col in enumerate(pivots):
        direction[col] = -m[i][f]
    n = MukaiClass(*direction)
    # (xi0 + a n)^2 = -2  <=>  A a^2 + 2 B a + C = 0
    A = square(n, X)
    B = mukai_pairing(xi0, n, X)
    C = square(xi0, X) + 2
    if A == 0:
        if B == 0:
            if C == 0:
                raise UnderdeterminedSystem("every point of the solution line is spherical")
            return []
        roots = [-C / (2 * B)]
    else:
        disc = B * B - A * C
        root = rational_sqrt(disc)
        if root is None:
            return []
        roots = sorted({(-B + root) / A, (-B - root) / A})
    sols = {xi0 + n.scale(a) for a in roots}
    return sorted(xi for xi in sols if xi.is_integral and square(xi, X) == -2)


__all__ = [
    "Decomposition",
    "GiesekerBoundReport",
    "Region",
    "Semicircle",
    "VerticalLine",
    "Wall",
    "WallFlags",
    "WallGeometry",
    "classify_wall",
    "default_rank_bound",
    "gieseker_bound",
    "hilbert_n",
    "potential_destabilizers",
    "spherical_solver",
    "wall_of_pair",
    "walls_on_vertical_path",
]
