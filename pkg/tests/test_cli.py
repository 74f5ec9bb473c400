from __future__ import annotations

import json
import re
import subprocess
import sys
from pathlib import Path
from xml.etree import ElementTree

import jsonschema
import pytest

from k3walls.cli import EXIT_CONFIG, EXIT_MATH, EXIT_OK, main
from k3walls.errors import ConfigError, UnsupportedFormat, ZeroCharge
from k3walls.report import AnalysisConfig, AnalysisReport, emit, parse_config_text, resolve_rank_bound, run

SCHEMA = json.loads((Path(__file__).resolve().parents[1] / "docs" / "report.schema.json").read_text())

FIRST_WALL = {"command": "walls", "d": "2", "vector": "1,0,-4", "region": "-3/2,-1/2,0,2", "rank_bound": "3"}


def report_for(values: dict[str, str], env: dict[str, str] | None = None) -> AnalysisReport:
    return run(AnalysisConfig.from_mapping(values), env={} if env is None else env)


def as_json(report: AnalysisReport) -> dict:
    return json.loads(emit(report, "json"))


class TestConfig:
    def test_parse_text(self):
        text = "# first wall\ncommand = walls\nd=2\nvector = 1,0,-4  # O(-H) family\n\nregion=-3/2,-1/2,0,2\nformat=json,svg\n"
        values = parse_config_text(text)
        cfg = AnalysisConfig.from_mapping(values)
        assert cfg.formats == ("json", "svg")
        assert cfg.region.b_min == -1.5 and str(cfg.region.T_max) == "2"

    @pytest.mark.parametrize(
        "values",
        [
            {"command": "walls", "d": "2", "vector": "1,0,-4", "region": "-3/2,-1/2,0"},
            {"command": "walls", "d": "2", "vector": "1,0,-4", "region": "0,-1,0,2"},
            {"command": "walls", "d": "2", "vector": "1,0,-4", "region": "a,b,c,d"},
            {"command": "walls", "d": "2", "vector": "1,0,-4"},
            {"command": "walls", "d": "2.5", "vector": "1,0,-4", "region": "0,1,0,1"},
            {"command": "is-geometric", "d": "1", "b": "0.5", "T": "1"},
            {"command": "is-geometric", "d": "1", "b": "0", "T": "0"},
            {"command": "fly", "d": "1"},
            {"d": "1"},
            {"command": "classify", "d": "1", "vector": "1,0,1", "colour": "red"},
        ],
    )
    def test_config_errors(self, values):
        with pytest.raises(ConfigError):
            AnalysisConfig.from_mapping(values)

    def test_bad_format(self):
        with pytest.raises(UnsupportedFormat):
            AnalysisConfig.from_mapping({"command": "classify", "d": "1", "vector": "1,0,1", "formats": "pdf"})
        rep = report_for({"command": "classify", "d": "1", "vector": "1,0,1"})
        with pytest.raises(UnsupportedFormat):
            emit(rep, "xml")
        with pytest.raises(UnsupportedFormat):
            emit(rep, "svg")

    def test_duplicate_and_malformed_lines(self):
        with pytest.raises(ConfigError):
            parse_config_text("d=1\nd=2\n")
        with pytest.raises(ConfigError):
            parse_config_text("just words\n")

    def test_rank_bound_resolution(self):
        cfg = AnalysisConfig.from_mapping({k: v for k, v in FIRST_WALL.items() if k != "rank_bound"})
        assert resolve_rank_bound(cfg, {}) == 6
        assert resolve_rank_bound(cfg, {"K3WALLS_RANK_BOUND": "2"}) == 2
        with pytest.raises(ConfigError):
            resolve_rank_bound(cfg, {"K3WALLS_RANK_BOUND": "many"})
        explicit = AnalysisConfig.from_mapping(FIRST_WALL)
        assert resolve_rank_bound(explicit, {"K3WALLS_RANK_BOUND": "2"}) == 3


class TestRun:
    def test_hilb_nef(self):
        res = report_for({"command": "hilb-nef", "d": "2", "vector": "1,0,-4", "n": "5"}).result
        assert res["nef_generators_pretty"] == ["H~", "H~ - 4/7 B"]
        assert res["nef_generators"] == ["1/1 H~ + 0/1 B", "1/1 H~ - 4/7 B"]
        assert res["extremal_curve_square"] == "-17/8"

    def test_is_geometric(self):
        res = report_for({"command": "is-geometric", "d": "1", "b": "0", "T": "1/4"}).result
        assert res["geometric"] is False and res["witness"] == ["1/1", "0/1", "1/1"]

    def test_lagrangian_json(self):
        data = as_json(report_for({"command": "lagrangian", "d": "9", "n": "5"}))
        assert data["result"]["movable_generators"] == ["1/1 H~ + 0/1 B", "2/1 H~ - 3/1 B"]
        assert data["result"]["square_zero"]["bb_square"] == "0/1"

    def test_walls_payload(self):
        rep = report_for(FIRST_WALL)
        assert rep.rank_bound == 3
        walls = rep.result["walls"]
        first = next(w for w in walls if w["type"] == "semicircle" and w["center"] == "-7/4")
        assert first["radius_sq"] == "17/16"
        assert ["1/1", "-1/1", "3/1"] in [dec["w"] for dec in first["destabilizers"]]

    def test_empty_walls(self):
        rep = report_for({"command": "walls", "d": "1", "vector": "2,1,0", "region": "-1/4,1/4,4,8", "rank_bound": "4"})
        data = as_json(rep)
        assert data["result"]["walls"] == []
        jsonschema.validate(data, SCHEMA)

    def test_path_and_chambers(self):
        rep = report_for({"command": "path", "d": "2", "vector": "1,0,-4", "b": "-1", "T_range": "0,2", "rank_bound": "3"})
        res = rep.result
        assert res["crossings"][0]["T"] == "1/2"
        assert res["chambers"][0] == {"T_from": "1/2", "T_to": "2/1"}
        assert res["gieseker_T_bound"] == "3/1"

    def test_core_error_carries_operation(self):
        with pytest.raises(ZeroCharge, match="^nef-divisor: "):
            report_for({"command": "nef-divisor", "d": "1", "vector": "1,0,1", "b": "0", "T": "1"})

    @pytest.mark.parametrize(
        "values",
        [
            FIRST_WALL,
            {"command": "path", "d": "9", "vector": "1,0,-4", "b": "-2/3", "T_range": "0,4", "rank_bound": "5"},
            {"command": "gieseker-bound", "d": "1", "vector": "1,2,0", "b": "0"},
            {"command": "nef-divisor", "d": "2", "vector": "1,0,-4", "b": "-7/4", "T": "17/16"},
            {"command": "hilb-nef", "d": "3", "n": "5"},
            {"command": "lagrangian", "d": "16", "n": "5"},
            {"command": "lagrangian", "d": "3", "n": "5"},
            {"command": "is-geometric", "d": "2", "b": "1/2", "T": "1/3"},
            {"command": "spherical-solve", "d": "1", "constraints": "0,0,1:-1; 1,0,-4:3"},
            {"command": "classify", "d": "1", "vector": "0,0,1"},
        ],
    )
    def test_schema_roundtrip_determinism(self, values):
        rep = report_for(values)
        raw = emit(rep, "json")
        data = json.loads(raw)
        jsonschema.validate(data, SCHEMA)
        assert AnalysisReport.from_json(raw) == rep
        assert emit(AnalysisReport.from_json(raw), "json") == raw
        assert emit(report_for(values), "json") == raw
        # rationals only as strings, never JSON numbers
        assert not re.search(r":\s*-?\d+\.\d", raw.decode())
        assert emit(rep, "text").decode().startswith("k3walls ")

    def test_nef_divisor_hilbert_coordinates(self):
        res = report_for({"command": "nef-divisor", "d": "2", "vector": "1,0,-4", "b": "-7/4", "T": "17/16"}).result
        assert res["w_sigma"] == ["4/1", "-7/1", "16/1"]
        assert res["hilb"]["w_sigma"] == "7/1 H~ - 4/1 B"


class TestSvg:
    def test_first_wall_arc(self):
        svg = emit(report_for(FIRST_WALL), "svg").decode()
        root = ElementTree.fromstring(svg)
        ns = {"s": "http://www.w3.org/2000/svg"}
        arcs = root.findall(".//s:path[@class='wall']", ns)
        meta = {(a.get("data-center"), a.get("data-radius-sq")) for a in arcs}
        assert ("-7/4", "17/16") in meta
        # (1, -1, 3) is spherical with Im Z = 0 on b = -1, so T <= 1/2 there is a hole
        holes = {(h.get("data-b"), h.get("data-T-max")) for h in root.findall(".//s:line[@class='hole']", ns)}
        assert ("-1/1", "1/2") in holes
        assert "clipPath" in svg

    def test_path_svg(self):
        rep = report_for({"command": "path", "d": "1", "vector": "1,0,-2", "b": "-1", "T_range": "0,4", "rank_bound": "3"})
        svg = emit(rep, "svg").decode()
        ElementTree.fromstring(svg)
        assert 'class="path"' in svg and 'data-b="-1/1"' in svg


class TestCommandLine:
    def test_exit_codes(self, tmp_path, capsys):
        assert main(["hilb-nef", "--d", "2", "--n", "5"]) == EXIT_OK
        assert "H~ - 4/7 B" in capsys.readouterr().out
        assert main(["walls", "--d", "2", "--vector", "1,0,-4", "--region", "1,0,0,2"]) == EXIT_CONFIG
        assert "configuration error" in capsys.readouterr().err
        assert main(["nef-divisor", "--d", "1", "--vector", "1,0,1", "--b", "0", "--T", "1"]) == EXIT_MATH
        assert "ZeroCharge" in capsys.readouterr().err
        assert main(["hilb-nef", "--d", "4", "--n", "3"]) == EXIT_MATH
        assert main(["teleport"]) == EXIT_CONFIG
        assert main(["classify", "--config", str(tmp_path / "missing.cfg")]) == EXIT_CONFIG

    def test_config_file_and_outputs(self, tmp_path):
        cfg = tmp_path / "first.cfg"
        cfg.write_text("command = walls\nd = 2\nvector = 1,0,-4\nregion = -3/2,-1/2,0,2\nrank_bound = 3\n", encoding="utf-8")
        out = tmp_path / "first"
        argv = ["walls", "--config", str(cfg), "--format", "json", "--format", "svg", "--out", str(out)]
        assert main(argv) == EXIT_OK
        first = (tmp_path / "first.json").read_bytes()
        assert (tmp_path / "first.svg").exists()
        assert main(argv) == EXIT_OK
        assert (tmp_path / "first.json").read_bytes() == first
        # flags override the file
        assert main(["walls", "--config", str(cfg), "--rank-bound", "1", "--format", "json", "--out", str(out)]) == EXIT_OK
        assert json.loads(out.read_text())["rank_bound"] == 1

    def test_command_mismatch(self, tmp_path):
        cfg = tmp_path / "x.cfg"
        cfg.write_text("command = walls\n", encoding="utf-8")
        assert main(["classify", "--config", str(cfg)]) == EXIT_CONFIG

    def test_env_rank_bound(self, monkeypatch, capsys):
        monkeypatch.setenv("K3WALLS_RANK_BOUND", "2")
        assert main(["path", "--d", "2", "--vector", "1,0,-4", "--b=-1", "--format", "json"]) == EXIT_OK
        assert json.loads(capsys.readouterr().out)["rank_bound"] == 2

    def test_console_script_module(self):
        proc = subprocess.run(
            [sys.executable, "-m", "k3walls.cli", "lagrangian", "--d", "9", "--n", "5", "--format", "json"],
            capture_output=True, text=True, check=False,
        )
        assert proc.returncode == 0
        assert json.loads(proc.stdout)["result"]["movable_generators"] == ["1/1 H~ + 0/1 B", "2/1 H~ - 3/1 B"]
