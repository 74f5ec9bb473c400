"""Analysis configurations, dispatch, and the JSON / text / SVG emitters.

Rationals are serialized as ``"p/q"`` strings everywhere; floats appear only
as SVG drawing coordinates.
"""

from __future__ import annotations

import json
import math
import os
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable, Mapping
from xml.sax.saxutils import escape

from . import __version__
from .charge import (
    StabilityPoint,
    central_charge,
    is_geometric,
    slope_and_discrepancy,
    spherical_obstruction,
)
from .divisors import (
    CurveClass,
    HilbDivisor,
    bb_square,
    curve_divisor_pairing,
    hilb_nef_cone,
    lagrangian_check,
    theta_hilb,
    w_limit_infinity,
    w_limit_zero,
    w_raw,
    w_sigma,
)
from .errors import ConfigError, K3WallsError, UnsupportedFormat
from .lattice import MukaiClass, SurfaceData, classify, frac_str, is_primitive, to_fraction
from .walls import (
    Region,
    Semicircle,
    VerticalLine,
    Wall,
    classify_wall,
    default_rank_bound,
    gieseker_bound,
    hilbert_n,
    potential_destabilizers,
    spherical_solver,
    walls_on_vertical_path,
)

COMMANDS = (
    "walls",
    "path",
    "gieseker-bound",
    "nef-divisor",
    "hilb-nef",
    "lagrangian",
    "is-geometric",
    "spherical-solve",
    "classify",
)
FORMATS = ("text", "json", "svg")
CONFIG_KEYS = (
    "command", "d", "label", "vector", "b", "T", "n", "rank_bound",
    "region", "T_range", "constraints", "formats", "out",
)
RANK_BOUND_ENV = "K3WALLS_RANK_BOUND"
HOLE_DENOMINATOR_BOUND = 12
DEFAULT_T_RANGE = (Fraction(0), Fraction(4))

_REQUIRED: dict[str, tuple[str, ...]] = {
    "walls": ("d", "vector", "region"),
    "path": ("d", "vector", "b"),
    "gieseker-bound": ("d", "vector", "b"),
    "nef-divisor": ("d", "vector", "b", "T"),
    "hilb-nef": ("d", "n"),
    "lagrangian": ("d", "n"),
    "is-geometric": ("d", "b", "T"),
    "spherical-solve": ("d", "constraints"),
    "classify": ("d", "vector"),
}


# --------------------------------------------------------------------------
# configuration


def _rationals(text: str, count: int, key: str) -> tuple[Fraction, ...]:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != count:
        raise ConfigError(f"{key}: expected {count} comma-separated rationals, got {text!r}")
    try:
        return tuple(to_fraction(p) for p in parts)
    except ValueError as exc:
        raise ConfigError(f"{key}: {exc}") from None


def _integer(text: str, key: str) -> int:
    try:
        x = to_fraction(text)
    except ValueError as exc:
        raise ConfigError(f"{key}: {exc}") from None
    if x.denominator != 1:
        raise ConfigError(f"{key}: expected an integer, got {text!r}")
    return int(x)


@dataclass
class AnalysisConfig:
    command: str
    d: int | None = None
    label: str | None = None
    vector: MukaiClass | None = None
    b: Fraction | None = None
    T: Fraction | None = None
    n: int | None = None
    rank_bound: int | None = None
    region: Region | None = None
    T_range: tuple[Fraction, Fraction] | None = None
    constraints: list[tuple[MukaiClass, Fraction]] | None = None
    formats: tuple[str, ...] = ("text",)
    out: str | None = None
    raw: dict[str, str] = field(default_factory=dict)

    @classmethod
    def from_mapping(cls, values: Mapping[str, str]) -> "AnalysisConfig":
        unknown = sorted(set(values) - set(CONFIG_KEYS))
        if unknown:
            raise ConfigError(f"unknown configuration keys: {', '.join(unknown)}")
        raw = {k: str(v).strip() for k, v in values.items() if v is not None and str(v).strip() != ""}
        command = raw.get("command")
        if command is None:
            raise ConfigError("missing field 'command'")
        if command not in COMMANDS:
            raise ConfigError(f"unknown command {command!r}; expected one of {', '.join(COMMANDS)}")
        cfg = cls(command=command, raw=raw)
        if "d" in raw:
            cfg.d = _integer(raw["d"], "d")
            if cfg.d < 1:
                raise ConfigError("d must be a positive integer")
        cfg.label = raw.get("label")
        if "vector" in raw:
            try:
                cfg.vector = MukaiClass.parse(raw["vector"])
            except ValueError as exc:
                raise ConfigError(f"vector: {exc}") from None
        if "b" in raw:
            (cfg.b,) = _rationals(raw["b"], 1, "b")
        if "T" in raw:
            (cfg.T,) = _rationals(raw["T"], 1, "T")
            if cfg.T <= 0:
                raise ConfigError("T must be positive")
        if "n" in raw:
            cfg.n = _integer(raw["n"], "n")
        if "rank_bound" in raw:
            cfg.rank_bound = _integer(raw["rank_bound"], "rank_bound")
            if cfg.rank_bound < 0:
                raise ConfigError("rank_bound must be non-negative")
        if "region" in raw:
            vals = _rationals(raw["region"], 4, "region")
            if vals[0] > vals[1] or vals[2] > vals[3] or vals[3] <= 0 or vals[2] < 0:
                raise ConfigError(f"region: need b_min <= b_max and 0 <= T_min <= T_max, T_max > 0; got {raw['region']!r}")
            cfg.region = Region(*vals)
        if "T_range" in raw:
            lo, hi = _rationals(raw["T_range"], 2, "T_range")
            if lo < 0 or lo > hi or hi <= 0:
                raise ConfigError(f"T_range: need 0 <= T_min <= T_max, T_max > 0; got {raw['T_range']!r}")
            cfg.T_range = (lo, hi)
        if "constraints" in raw:
            cfg.constraints = _parse_constraints(raw["constraints"])
        if "formats" in raw:
            fmts = tuple(f.strip() for f in raw["formats"].split(",") if f.strip())
            bad = [f for f in fmts if f not in FORMATS]
            if bad or not fmts:
                raise UnsupportedFormat(f"unsupported format(s) {bad or fmts}; choose from {', '.join(FORMATS)}")
            cfg.formats = fmts
        cfg.out = raw.get("out")
        missing = [k for k in _REQUIRED[command] if getattr(cfg, k) is None]
        if missing:
            raise ConfigError(f"{command}: missing field(s) {', '.join(missing)}")
        return cfg

    def echo(self) -> dict[str, str]:
        """Normalized key/value echo of the analysis inputs (no output options)."""
        out: dict[str, str] = {"command": self.command}
        if self.d is not None:
            out["d"] = str(self.d)
        if self.label is not None:
            out["label"] = self.label
        if self.vector is not None:
            out["vector"] = ",".join(self.vector.to_strings())
        for key in ("b", "T"):
            val = getattr(self, key)
            if val is not None:
                out[key] = frac_str(val)
        if self.n is not None:
            out["n"] = str(self.n)
        if self.rank_bound is not None:
            out["rank_bound"] = str(self.rank_bound)
        if self.region is not None:
            r = self.region
            out["region"] = ",".join(frac_str(x) for x in (r.b_min, r.b_max, r.T_min, r.T_max))
        if self.T_range is not None:
            out["T_range"] = ",".join(frac_str(x) for x in self.T_range)
        if self.constraints is not None:
            out["constraints"] = "; ".join(
                ",".join(u.to_strings()) + ":" + frac_str(a) for u, a in self.constraints
            )
        return out


def _parse_constraints(text: str) -> list[tuple[MukaiClass, Fraction]]:
    out = []
    for item in text.split(";"):
        item = item.strip()
        if not item:
            continue
        if ":" not in item:
            raise ConfigError(f"constraints: expected 'r,c,s:a' items separated by ';', got {item!r}")
        vec, target = item.split(":", 1)
        try:
            out.append((MukaiClass.parse(vec), to_fraction(target.strip())))
        except ValueError as exc:
            raise ConfigError(f"constraints: {exc}") from None
    if not out:
        raise ConfigError("constraints: empty list")
    return out


def parse_config_text(text: str) -> dict[str, str]:
    """``key = value`` lines; blank lines and ``#`` comments are ignored."""
    values: dict[str, str] = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected key=value, got {line!r}")
        key, val = (s.strip() for s in line.split("=", 1))
        if key == "format":
            key = "formats"
        if key in values:
            raise ConfigError(f"line {lineno}: duplicate key {key!r}")
        values[key] = val
    return values


def load_config(path: str | Path) -> dict[str, str]:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from None
    return parse_config_text(text)


def resolve_rank_bound(cfg: AnalysisConfig, env: Mapping[str, str] | None = None) -> int:
    if cfg.rank_bound is not None:
        return cfg.rank_bound
    env = os.environ if env is None else env
    if env.get(RANK_BOUND_ENV):
        value = _integer(env[RANK_BOUND_ENV], RANK_BOUND_ENV)
        if value < 0:
            raise ConfigError(f"{RANK_BOUND_ENV} must be non-negative")
        return value
    assert cfg.vector is not None
    return default_rank_bound(cfg.vector)


# --------------------------------------------------------------------------
# report


@dataclass(frozen=True)
class AnalysisReport:
    command: str
    config: dict[str, str]
    result: dict[str, Any]
    rank_bound: int | None = None
    version: str = __version__

    def to_dict(self) -> dict[str, Any]:
        return {
            "tool": "k3walls",
            "version": self.version,
            "command": self.command,
            "config": self.config,
            "rank_bound": self.rank_bound,
            "result": self.result,
        }

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "AnalysisReport":
        return cls(
            command=data["command"],
            config=dict(data["config"]),
            result=data["result"],
            rank_bound=data.get("rank_bound"),
            version=data["version"],
        )

    @classmethod
    def from_json(cls, text: str | bytes) -> "AnalysisReport":
        return cls.from_dict(json.loads(text))


def _vec(v: MukaiClass) -> list[str]:
    return v.to_strings()


def _geometry_json(g: Semicircle | VerticalLine) -> dict[str, str]:
    if isinstance(g, Semicircle):
        return {"type": "semicircle", "center": frac_str(g.center_b), "radius_sq": frac_str(g.radius_sq)}
    return {"type": "vertical", "b": frac_str(g.b)}


def _wall_json(v: MukaiClass, wall: Wall, X: SurfaceData, hilb_n: int | None) -> dict[str, Any]:
    flags = classify_wall(v, wall, X, hilb_n)
    return {
        **_geometry_json(wall.geometry),
        "destabilizers": [
            {
                "w": _vec(dec.w),
                "complement": _vec(dec.complement),
                "pairing": frac_str(dec.pairing),
                "square_w": frac_str(dec.square_w),
                "square_complement": frac_str(dec.square_complement),
                "mukai_inequality": dec.mukai_inequality,
                "active_b": [[frac_str(lo), frac_str(hi)] for lo, hi in dec.active],
            }
            for dec in wall.destabilizers
        ],
        "flags": {
            "has_spherical_destabilizer": flags.has_spherical_destabilizer,
            "has_isotropic_destabilizer": flags.has_isotropic_destabilizer,
            "pairing_one_with_spherical": flags.pairing_one_with_spherical,
            "pairing_at_least_two": flags.pairing_at_least_two,
            "hilbert_chow": flags.hilbert_chow,
            "totally_semistable_hint": flags.totally_semistable_hint,
        },
        "notes": list(flags.notes),
    }


def _holes(b_min: Fraction, b_max: Fraction, X: SurfaceData) -> list[dict[str, Any]]:
    """Spherical holes b = p/q in [b_min, b_max] with q <= HOLE_DENOMINATOR_BOUND."""
    seen = set()
    out = []
    for q in range(1, HOLE_DENOMINATOR_BOUND + 1):
        for p in range(math.ceil(b_min * q), math.floor(b_max * q) + 1):
            b = Fraction(p, q)
            if b in seen:
                continue
            seen.add(b)
            xi = spherical_obstruction(b, X)
            if xi is not None:
                out.append({"b": frac_str(b), "T_max": frac_str(Fraction(1, X.d * b.denominator ** 2)), "witness": _vec(xi)})
    out.sort(key=lambda h: Fraction(h["b"]))
    return out


def _divisor_entry(D: HilbDivisor) -> str:
    return D.canonical()


def _run_walls(cfg: AnalysisConfig, X: SurfaceData, rank_bound: int) -> dict[str, Any]:
    assert cfg.vector is not None and cfg.region is not None
    v, region = cfg.vector, cfg.region
    hilb = cfg.n if cfg.n is not None else hilbert_n(v)
    walls = potential_destabilizers(v, region, rank_bound, X)
    return {
        "region": {
            "b_min": frac_str(region.b_min), "b_max": frac_str(region.b_max),
            "T_min": frac_str(region.T_min), "T_max": frac_str(region.T_max),
        },
        "walls": [_wall_json(v, w, X, hilb) for w in walls],
        "holes": _holes(region.b_min, region.b_max, X),
        "hole_denominator_bound": HOLE_DENOMINATOR_BOUND,
        "completeness": f"destabilizers enumerated up to |rank| <= {rank_bound}",
    }


def _run_path(cfg: AnalysisConfig, X: SurfaceData, rank_bound: int) -> dict[str, Any]:
    assert cfg.vector is not None and cfg.b is not None
    v, b = cfg.vector, cfg.b
    T_lo, T_hi = cfg.T_range or DEFAULT_T_RANGE
    crossings = walls_on_vertical_path(v, b, (T_lo, T_hi), rank_bound, X)
    hilb = cfg.n if cfg.n is not None else hilbert_n(v)
    # chambers: maximal open T-intervals between consecutive crossings
    cuts = [T_hi] + [T for T, _ in crossings if T_lo < T < T_hi] + [T_lo]
    chambers = []
    for hi, lo in zip(cuts, cuts[1:]):
        if lo < hi:
            chambers.append({"T_from": frac_str(lo), "T_to": frac_str(hi)})
    res: dict[str, Any] = {
        "b": frac_str(b),
        "T_range": [frac_str(T_lo), frac_str(T_hi)],
        "crossings": [{"T": frac_str(T), **_wall_json(v, w, X, hilb)} for T, w in crossings],
        "chambers": chambers,
        "holes": [h for h in _holes(b, b, X)],
        "completeness": f"destabilizers enumerated up to |rank| <= {rank_bound}",
    }
    if v.r > 0 and slope_and_discrepancy(v, b, X)[0] > 0:
        res["gieseker_T_bound"] = frac_str(gieseker_bound(v, b, X).T_bound)
    return res


def _run_gieseker(cfg: AnalysisConfig, X: SurfaceData) -> dict[str, Any]:
    assert cfg.vector is not None and cfg.b is not None
    rep = gieseker_bound(cfg.vector, cfg.b, X)
    return {
        "b": frac_str(cfg.b),
        "Dv": [_vec(w) for w in rep.Dv],
        "mu_hat": frac_str(rep.mu_hat),
        "delta": frac_str(rep.delta),
        "mu_max_hat": frac_str(rep.mu_max_hat),
        "T_bound": frac_str(rep.T_bound),
    }


def _run_nef_divisor(cfg: AnalysisConfig, X: SurfaceData) -> dict[str, Any]:
    assert cfg.vector is not None and cfg.b is not None and cfg.T is not None
    v = cfg.vector
    p = StabilityPoint(cfg.b, cfg.T)
    z = central_charge(v, p, X)
    geo, witness = is_geometric(p, X)
    ws = w_sigma(v, p, X).w
    res: dict[str, Any] = {
        "point": {"b": frac_str(p.b), "T": frac_str(p.T)},
        "charge": {"re": frac_str(z.re), "im_over_t": frac_str(z.im_over_t)},
        "geometric": geo,
        "witness": _vec(witness) if witness is not None else None,
        "w_raw": _vec(w_raw(v, p, X)),
        "w_sigma": _vec(ws),
        "normalization": "primitive integral representative on the ray of w_raw; the scale is not canonical",
    }
    limits: dict[str, Any] = {}
    for name, fn in (("w_limit_zero", lambda: w_limit_zero(v, p.b, X)), ("w_limit_infinity", lambda: w_limit_infinity(v, X))):
        try:
            limits[name] = _vec(fn().w)
        except K3WallsError as exc:
            limits[name] = None
            res.setdefault("limit_errors", {})[name] = str(exc)
    res.update(limits)
    n = cfg.n if cfg.n is not None else hilbert_n(v)
    if n is not None and hilbert_n(v) == n and n >= 2:
        res["hilb"] = {
            "n": n,
            "w_sigma": _divisor_entry(theta_hilb(ws, n)),
            **{k: (_divisor_entry(theta_hilb(MukaiClass.parse(",".join(val)), n)) if val else None) for k, val in limits.items()},
        }
    return res


def _run_hilb_nef(cfg: AnalysisConfig) -> dict[str, Any]:
    assert cfg.d is not None and cfg.n is not None
    cone = hilb_nef_cone(cfg.d, cfg.n)
    R = cone.extremal_curve
    shifted = CurveClass(1, cfg.d + cfg.n + 1)
    return {
        "d": cfg.d,
        "n": cfg.n,
        "nef_generators": [_divisor_entry(D) for D in cone.generators],
        "nef_generators_pretty": [str(D) for D in cone.generators],
        "extremal_curve": f"{frac_str(R.p)} h + {frac_str(R.q)} b",
        "extremal_curve_square": frac_str(cone.extremal_curve_square),
        "extremal_curve_pairings": [frac_str(curve_divisor_pairing(R, D, cfg.d)) for D in cone.generators],
        "shifted_curve": f"{frac_str(shifted.p)} h + {frac_str(shifted.q)} b",
        "shifted_curve_pairing": frac_str(curve_divisor_pairing(shifted, cone.generators[1], cfg.d)),
    }


def _run_lagrangian(cfg: AnalysisConfig) -> dict[str, Any]:
    assert cfg.d is not None and cfg.n is not None
    data = lagrangian_check(cfg.d, cfg.n)
    res: dict[str, Any] = {"d": cfg.d, "n": cfg.n}
    if data is None:
        res["square_zero"] = None
        return res
    X = SurfaceData(cfg.d)
    res["square_zero"] = {
        "k": data.k,
        "h": data.h,
        "ray": _divisor_entry(data.square_zero_ray),
        "bb_square": frac_str(bb_square(data.square_zero_ray, X)),
    }
    res["cone_kind"] = data.cone_kind
    if data.cone_generators is not None:
        res[f"{data.cone_kind}_generators"] = [_divisor_entry(D) for D in data.cone_generators]
        res[f"{data.cone_kind}_generators_pretty"] = [str(D) for D in data.cone_generators]
    if data.w_limits is not None:
        res["limit_classes"] = [_vec(w) for w in data.w_limits]
    return res


def _run_is_geometric(cfg: AnalysisConfig, X: SurfaceData) -> dict[str, Any]:
    assert cfg.b is not None and cfg.T is not None
    geo, witness = is_geometric(StabilityPoint(cfg.b, cfg.T), X)
    return {
        "b": frac_str(cfg.b),
        "T": frac_str(cfg.T),
        "geometric": geo,
        "witness": _vec(witness) if witness is not None else None,
    }


def _run_spherical(cfg: AnalysisConfig, X: SurfaceData) -> dict[str, Any]:
    assert cfg.constraints is not None
    sols = spherical_solver(cfg.constraints, X)
    return {
        "constraints": [{"u": _vec(u), "value": frac_str(a)} for u, a in cfg.constraints],
        "solutions": [_vec(x) for x in sols],
    }


def _run_classify(cfg: AnalysisConfig, X: SurfaceData) -> dict[str, Any]:
    assert cfg.vector is not None
    kind = classify(cfg.vector, X)
    return {
        "vector": _vec(cfg.vector),
        "square": frac_str(kind.square),
        "kind": kind.kind.value,
        "positive_vector": kind.positive_vector,
        "integral": cfg.vector.is_integral,
        "primitive": is_primitive(cfg.vector),
    }


def run(cfg: AnalysisConfig, env: Mapping[str, str] | None = None) -> AnalysisReport:
    assert cfg.d is not None
    X = SurfaceData(cfg.d, cfg.label)
    rank_bound = None
    if cfg.command in ("walls", "path"):
        rank_bound = resolve_rank_bound(cfg, env)
    dispatch: dict[str, Callable[[], dict[str, Any]]] = {
        "walls": lambda: _run_walls(cfg, X, rank_bound),
        "path": lambda: _run_path(cfg, X, rank_bound),
        "gieseker-bound": lambda: _run_gieseker(cfg, X),
        "nef-divisor": lambda: _run_nef_divisor(cfg, X),
        "hilb-nef": lambda: _run_hilb_nef(cfg),
        "lagrangian": lambda: _run_lagrangian(cfg),
        "is-geometric": lambda: _run_is_geometric(cfg, X),
        "spherical-solve": lambda: _run_spherical(cfg, X),
        "classify": lambda: _run_classify(cfg, X),
    }
    try:
        result = dispatch[cfg.command]()
    except K3WallsError as exc:
        raise type(exc)(f"{cfg.command}: {exc}") from exc
    return AnalysisReport(cfg.command, cfg.echo(), result, rank_bound)


# --------------------------------------------------------------------------
# emitters


def emit(report: AnalysisReport, fmt: str) -> bytes:
    if fmt == "json":
        return (json.dumps(report.to_dict(), sort_keys=True, indent=2) + "\n").encode("utf-8")
    if fmt == "text":
        return render_text(report).encode("utf-8")
    if fmt == "svg":
        return render_svg(report).encode("utf-8")
    raise UnsupportedFormat(f"unsupported format {fmt!r}; choose from {', '.join(FORMATS)}")


def _table(headers: list[str], rows: list[list[str]]) -> list[str]:
    widths = [max(len(h), *(len(r[i]) for r in rows)) if rows else len(h) for i, h in enumerate(headers)]
    fmt = "  ".join(f"{{:<{w}}}" for w in widths)
    lines = [fmt.format(*headers).rstrip(), "  ".join("-" * w for w in widths)]
    lines += [fmt.format(*r).rstrip() for r in rows]
    return lines


def _vec_str(v: list[str] | None) -> str:
    if v is None:
        return "-"
    return "(" + ", ".join(str(Fraction(x)) for x in v) + ")"


def _geom_str(w: Mapping[str, Any]) -> str:
    if w["type"] == "semicircle":
        return f"semicircle c={Fraction(w['center'])} R^2={Fraction(w['radius_sq'])}"
    return f"vertical b={Fraction(w['b'])}"


def _flag_str(flags: Mapping[str, bool]) -> str:
    short = {
        "has_spherical_destabilizer": "sph",
        "has_isotropic_destabilizer": "iso",
        "pairing_one_with_spherical": "(,)=1+sph",
        "pairing_at_least_two": "(,)>=2",
        "hilbert_chow": "HC",
        "totally_semistable_hint": "tss?",
    }
    on = [short[k] for k in short if flags.get(k)]
    return ",".join(on) or "-"


def _wall_rows(walls: list[Mapping[str, Any]], lead: list[str] | None = None) -> list[list[str]]:
    rows = []
    for i, w in enumerate(walls):
        dest = " ".join(_vec_str(dec["w"]) for dec in w["destabilizers"])
        rows.append(([lead[i]] if lead else []) + [_geom_str(w), dest, _flag_str(w["flags"])])
    return rows


def render_text(report: AnalysisReport) -> str:
    res = report.result
    lines = [f"k3walls {report.version}  command: {report.command}"]
    lines.append("config: " + "  ".join(f"{k}={v}" for k, v in sorted(report.config.items())))
    if report.rank_bound is not None:
        lines.append(f"rank bound: {report.rank_bound}")
    lines.append("")
    if report.command == "walls":
        lines += _table(["wall", "destabilizers", "flags"], _wall_rows(res["walls"]))
        if not res["walls"]:
            lines.append("(no walls)")
    elif report.command == "path":
        lead = [str(Fraction(c["T"])) for c in res["crossings"]]
        lines += _table(["T", "wall", "destabilizers", "flags"], _wall_rows(res["crossings"], lead))
        lines.append("")
        lines.append("chambers (T intervals): " + ", ".join(
            f"({Fraction(c['T_from'])}, {Fraction(c['T_to'])})" for c in res["chambers"]))
        if "gieseker_T_bound" in res:
            lines.append(f"Gieseker chamber for T > {Fraction(res['gieseker_T_bound'])}")
    else:
        rows = []
        for key in sorted(res):
            val = res[key]
            if isinstance(val, list) and val and isinstance(val[0], str) and all("/" in x for x in val) and len(val) == 3:
                shown = _vec_str(val)
            elif isinstance(val, (dict, list)):
                shown = json.dumps(val, sort_keys=True)
            else:
                shown = "-" if val is None else str(val)
            rows.append([key, shown])
        lines += _table(["quantity", "value"], rows)
    return "\n".join(lines) + "\n"


def render_svg(report: AnalysisReport, width: int = 640, height: int = 400, margin: int = 48) -> str:
    """Walls in the (b, t) half-plane; exact data is kept in ``data-*`` attributes."""
    res = report.result
    if report.command == "walls":
        reg = res["region"]
        b_min, b_max = Fraction(reg["b_min"]), Fraction(reg["b_max"])
        T_max = Fraction(reg["T_max"])
        walls = res["walls"]
    elif report.command == "path":
        b = Fraction(res["b"])
        b_min, b_max = b - 1, b + 1
        T_max = Fraction(res["T_range"][1])
        walls = res["crossings"]
    else:
        raise UnsupportedFormat(f"svg output is only available for 'walls' and 'path', not {report.command!r}")
    if b_min == b_max:
        b_min, b_max = b_min - 1, b_max + 1
    t_max = math.sqrt(T_max)
    sx = (width - 2 * margin) / float(b_max - b_min)
    sy = (height - 2 * margin) / t_max

    def X(bv: float) -> float:
        return margin + (bv - float(b_min)) * sx

    def Y(tv: float) -> float:
        return height - margin - tv * sy

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}" data-command="{escape(report.command)}">',
        f'<defs><clipPath id="region"><rect x="{margin}" y="{margin}" width="{width - 2 * margin}" '
        f'height="{height - 2 * margin}"/></clipPath></defs>',
        f'<rect x="{margin}" y="{margin}" width="{width - 2 * margin}" height="{height - 2 * margin}" '
        'fill="none" stroke="#999"/>',
        f'<text x="{margin}" y="{height - margin / 3:.1f}" font-size="11" '
        f'data-b-min="{frac_str(b_min)}">b = {b_min}</text>',
        f'<text x="{width - margin}" y="{height - margin / 3:.1f}" font-size="11" text-anchor="end" '
        f'data-b-max="{frac_str(b_max)}">b = {b_max}</text>',
        f'<text x="{margin / 4:.1f}" y="{margin - 6}" font-size="11" data-T-max="{frac_str(T_max)}">t^2 = {T_max}</text>',
        '<g clip-path="url(#region)">',
    ]
    for hole in res.get("holes", []):
        hb, hT = Fraction(hole["b"]), Fraction(hole["T_max"])
        if not (b_min <= hb <= b_max):
            continue
        ht = math.sqrt(hT)
        out.append(
            f'<line class="hole" x1="{X(float(hb)):.3f}" y1="{Y(0):.3f}" x2="{X(float(hb)):.3f}" y2="{Y(ht):.3f}" '
            f'stroke="#c33" stroke-dasharray="3,3" data-b="{hole["b"]}" data-T-max="{hole["T_max"]}"/>'
        )
        out.append(f'<circle class="hole" cx="{X(float(hb)):.3f}" cy="{Y(0):.3f}" r="2.5" fill="#c33" data-b="{hole["b"]}"/>')
    for w in walls:
        label = escape(" ".join(_vec_str(dec["w"]) for dec in w["destabilizers"][:2]))
        if w["type"] == "semicircle":
            c, R2 = Fraction(w["center"]), Fraction(w["radius_sq"])
            R = math.sqrt(R2)
            x1, x2 = X(float(c) - R), X(float(c) + R)
            out.append(
                f'<path class="wall" d="M {x1:.3f} {Y(0):.3f} A {R * sx:.3f} {R * sy:.3f} 0 0 1 {x2:.3f} {Y(0):.3f}" '
                f'fill="none" stroke="#236" data-center="{w["center"]}" data-radius-sq="{w["radius_sq"]}"/>'
            )
            lx = min(max(float(c), float(b_min)), float(b_max))
            ly = math.sqrt(max(float(R2) - (lx - float(c)) ** 2, 0.0))
            out.append(f'<text x="{X(lx):.3f}" y="{Y(ly) - 3:.3f}" font-size="9" text-anchor="middle">{label}</text>')
        else:
            bx = Fraction(w["b"])
            out.append(
                f'<line class="wall" x1="{X(float(bx)):.3f}" y1="{Y(0):.3f}" x2="{X(float(bx)):.3f}" y2="{Y(t_max):.3f}" '
                f'stroke="#236" data-b="{w["b"]}"/>'
            )
            out.append(f'<text x="{X(float(bx)) + 3:.3f}" y="{Y(t_max) + 12:.3f}" font-size="9">{label}</text>')
    if report.command == "path":
        bx = float(Fraction(res["b"]))
        out.append(
            f'<line class="path" x1="{X(bx):.3f}" y1="{Y(0):.3f}" x2="{X(bx):.3f}" y2="{Y(t_max):.3f}" '
            f'stroke="#393" stroke-width="2" data-b="{res["b"]}"/>'
        )
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
