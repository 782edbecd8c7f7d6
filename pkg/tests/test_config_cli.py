import csv
import io
from contextlib import redirect_stdout
from pathlib import Path

import numpy as np
import pytest

from spheredisp import ConfigError, StressChoice, parse_config
from spheredisp.cli import (EXIT_CONFIG, EXIT_CONVERGENCE, EXIT_CRITERION,
                            EXIT_OK, main)
from spheredisp.config import parse_response
from spheredisp.constants import HBAR

from conftest import rel_err

CONFIG_DIR = Path(__file__).resolve().parent.parent / "configs"
VACUUM_CONFIG = str(CONFIG_DIR / "single_oscillator_vacuum.ini")
MAGNETO_CONFIG = str(CONFIG_DIR / "magnetodielectric.ini")


def run_cli(*argv):
    out = io.StringIO()
    with redirect_stdout(out):
        code = main(list(argv))
    return code, out.getvalue()


def write_config(tmp_path, text, name="system.ini"):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


MINIMAL = """
[medium]
eps = constant 1.0
mu = constant 1.0

[sphere1]
radius = 1e-9
eps = oscillator 1e16 1e16 0.0

[sphere2]
radius = 1e-9
eps = oscillator 1e16 1e16 0.0

[system]
separation = 1e-8
"""


class TestParseResponse:
    def test_constant(self):
        assert parse_response("constant 1.5").value == 1.5

    def test_oscillator_triples(self):
        response = parse_response("oscillator 1e16 1e16 0.0 5e15 2e16 1e13")
        assert len(response.oscillators) == 2
        assert response.oscillators[1].damping == 1e13

    def test_table(self):
        response = parse_response("table 1e14:1.8 1e15:1.4 1e16:1.1")
        assert response(1e14) == pytest.approx(1.8, rel=1e-12)

    @pytest.mark.parametrize("text", [
        "", "constant", "constant abc", "oscillator 1e16 1e16",
        "table 1e14", "wavelets 1 2 3", "constant 0.5",
        "oscillator 1e16 0.0 0.0",
    ])
    def test_rejects_malformed(self, text):
        with pytest.raises(ConfigError):
            parse_response(text)


class TestParseConfig:
    def test_reference_configs_load(self):
        for path in (VACUUM_CONFIG, MAGNETO_CONFIG):
            config = parse_config(path)
            assert config.sphere1.radius > 0.0
            assert config.quadrature.rtol == 1e-9

    def test_quadrature_scale_defaults_to_strongest_resonance(self, tmp_path):
        config = parse_config(write_config(tmp_path, MINIMAL))
        assert config.quadrature.scale == 1e16

    def test_missing_file(self):
        with pytest.raises(ConfigError):
            parse_config("/nonexistent/path.ini")

    def test_missing_sphere_section(self, tmp_path):
        broken = MINIMAL.replace("[sphere2]", "[sphereX]")
        with pytest.raises(ConfigError):
            parse_config(write_config(tmp_path, broken))

    def test_bad_number(self, tmp_path):
        broken = MINIMAL.replace("radius = 1e-9", "radius = tiny", 1)
        with pytest.raises(ConfigError):
            parse_config(write_config(tmp_path, broken))

    def test_species_parsed(self):
        config = parse_config(VACUUM_CONFIG)
        assert "species1" in config.species
        assert config.species["species1"].number_density == 1e27

    def test_system_requires_separation_somewhere(self, tmp_path):
        text = MINIMAL.replace("[system]\nseparation = 1e-8\n", "")
        config = parse_config(write_config(tmp_path, text))
        with pytest.raises(ConfigError):
            config.system()
        assert config.system(2e-8).separation == 2e-8


class TestC6Command:
    def test_vacuum_rows_agree(self, tmp_path):
        out_csv = tmp_path / "c6.csv"
        code, _ = run_cli("c6", "--config", VACUUM_CONFIG,
                          "--output", str(out_csv))
        assert code == EXIT_OK
        rows = list(csv.DictReader(out_csv.open()))
        assert [r["choice"] for r in rows] == ["abraham", "maxwell"]
        a = float(rows[0]["C6_total (J*m^6)"])
        m = float(rows[1]["C6_total (J*m^6)"])
        assert rel_err(m, a) < 1e-12

    def test_matches_closed_form(self, tmp_path):
        out_csv = tmp_path / "c6.csv"
        run_cli("c6", "--config", VACUUM_CONFIG, "--output", str(out_csv))
        rows = list(csv.DictReader(out_csv.open()))
        wp = w0 = 1e16
        a = np.sqrt((wp ** 2 + 3 * w0 ** 2) / 3.0)
        expected = -(3.0 * HBAR * (1e-9) ** 6 / np.pi) * np.pi * wp ** 4 / (36.0 * a ** 3)
        assert rel_err(float(rows[0]["C6_total (J*m^6)"]), expected) <= 1e-9

    def test_zero_excess_sphere_rows_exactly_zero(self, tmp_path):
        text = MINIMAL.replace(
            "[medium]\neps = constant 1.0",
            "[medium]\neps = oscillator 1e16 1e16 0.0").replace(
            "[sphere2]\nradius = 1e-9\neps = oscillator 1e16 1e16 0.0",
            "[sphere2]\nradius = 1e-9\neps = oscillator 1e16 1e16 0.0\nmu = constant 1.0")
        out_csv = tmp_path / "zero.csv"
        code, _ = run_cli("c6", "--config", write_config(tmp_path, text),
                          "--output", str(out_csv))
        assert code == EXIT_OK
        for row in csv.DictReader(out_csv.open()):
            assert float(row["C6_total (J*m^6)"]) == 0.0
            assert float(row["U (J)"]) == 0.0

    def test_csv_round_trips_exactly(self, tmp_path):
        out_csv = tmp_path / "c6.csv"
        run_cli("c6", "--config", MAGNETO_CONFIG, "--output", str(out_csv))
        rows = list(csv.DictReader(out_csv.open()))
        from spheredisp import c6
        config = parse_config(MAGNETO_CONFIG)
        system = config.system()
        breakdown = c6(system, StressChoice.ABRAHAM, config.quadrature)
        assert float(rows[0]["C6_total (J*m^6)"]) == breakdown.total

    def test_lf_line_endings(self, tmp_path):
        out_csv = tmp_path / "c6.csv"
        run_cli("c6", "--config", VACUUM_CONFIG, "--output", str(out_csv))
        raw = out_csv.read_bytes()
        assert b"\r" not in raw
        assert raw.count(b"\n") == 3

    def test_small_separation_warns(self, tmp_path, capsys):
        code, _ = run_cli("c6", "--config", VACUUM_CONFIG, "--r12", "3e-9")
        assert code == EXIT_OK
        assert "warning" in capsys.readouterr().err

    def test_deterministic_stdout(self):
        first = run_cli("c6", "--config", MAGNETO_CONFIG)
        second = run_cli("c6", "--config", MAGNETO_CONFIG)
        assert first == second


class TestC3Command:
    def test_vacuum_choices_agree(self, tmp_path):
        out_csv = tmp_path / "c3.csv"
        code, _ = run_cli("c3", "--config", VACUUM_CONFIG, "--output", str(out_csv))
        assert code == EXIT_OK
        rows = list(csv.DictReader(out_csv.open()))
        assert float(rows[0]["C3 (J*m^3)"]) == float(rows[1]["C3 (J*m^3)"])

    def test_zero_excess(self, tmp_path):
        text = MINIMAL.replace("eps = constant 1.0",
                               "eps = oscillator 1e16 1e16 0.0", 1)
        out_csv = tmp_path / "c3.csv"
        run_cli("c3", "--config", write_config(tmp_path, text),
                "--output", str(out_csv))
        for row in csv.DictReader(out_csv.open()):
            assert float(row["C3 (J*m^3)"]) == 0.0


class TestExitCodes:
    def test_config_error(self, tmp_path, capsys):
        code, _ = run_cli("c6", "--config", str(tmp_path / "missing.ini"))
        assert code == EXIT_CONFIG
        assert "config error" in capsys.readouterr().err

    def test_convergence_error(self, tmp_path, capsys):
        text = MINIMAL.replace("[medium]\neps = constant 1.0",
                               "[medium]\neps = constant 2.0")
        code, _ = run_cli("c6", "--config", write_config(tmp_path, text))
        assert code == EXIT_CONVERGENCE
        assert "convergence error" in capsys.readouterr().err

    def test_criterion_failure_maps_to_exit_code(self, monkeypatch):
        from spheredisp import cli as cli_module

        class FailingReport:
            original = {c: type("B", (), {"total": 1.0})() for c in StressChoice}
            dual = original
            relative_delta = {c: 1.0 for c in StressChoice}
            invariant = {c: False for c in StressChoice}
            passed = False

        monkeypatch.setattr(cli_module, "check_duality",
                            lambda system, quad: FailingReport())
        code, out = run_cli("verify", "--criterion", "duality",
                            "--config", MAGNETO_CONFIG)
        assert code == EXIT_CRITERION
        assert "FAIL" in out


class TestVerifyCommand:
    def test_duality_passes_on_magnetodielectric(self):
        code, out = run_cli("verify", "--criterion", "duality",
                            "--config", MAGNETO_CONFIG)
        assert code == EXIT_OK
        assert "PASS" in out
        assert "NOT invariant" in out      # the Maxwell row

    def test_duality_degenerate_pass_on_self_dual(self, tmp_path):
        text = """
[medium]
eps = oscillator 1e16 1e16 0.0
mu = oscillator 1e16 1e16 0.0

[sphere1]
radius = 1e-9
eps = oscillator 2e16 1e16 0.0
mu = oscillator 2e16 1e16 0.0

[sphere2]
radius = 1e-9
eps = oscillator 2e16 1e16 0.0
mu = oscillator 2e16 1e16 0.0

[system]
separation = 1e-8
"""
        code, out = run_cli("verify", "--criterion", "duality",
                            "--config", write_config(tmp_path, text))
        assert code == EXIT_OK
        assert "NOT invariant" not in out

    def test_correspondence(self):
        code, out = run_cli("verify", "--criterion", "correspondence",
                            "--config", VACUUM_CONFIG)
        assert code == EXIT_OK
        assert "PASS" in out

    def test_correspondence_needs_species(self):
        code, _ = run_cli("verify", "--criterion", "correspondence",
                          "--config", MAGNETO_CONFIG)
        assert code == EXIT_CONFIG

    def test_microscopic_reports_both_ratios(self):
        code, out = run_cli("verify", "--criterion", "microscopic",
                            "--config", VACUUM_CONFIG)
        assert code == EXIT_OK
        assert "1.000000" in out
        assert "2.500000" in out


class TestOracleCommand:
    def test_quadrature_oracle(self):
        code, out = run_cli("oracle", "--which", "quadrature",
                            "--config", VACUUM_CONFIG)
        assert code == EXIT_OK
        assert "relative deviation" in out

    def test_hamaker_oracle(self):
        code, out = run_cli("oracle", "--which", "hamaker",
                            "--config", VACUUM_CONFIG)
        assert code == EXIT_OK
        assert "G*r12^6/(V1*V2)" in out

    def test_axilrod_teller_oracle(self, tmp_path):
        text = MINIMAL.replace("radius = 1e-9", "radius = 5e-10") \
            + "\n[mc]\nsamples = 200000\nseed = 1\nchunks = 16\n"
        code, out = run_cli("oracle", "--which", "axilrod-teller",
                            "--config", write_config(tmp_path, text))
        assert code == EXIT_OK
        assert "8*pi/3" in out


class TestSweepCommand:
    def test_r12_sweep_power_law(self, tmp_path):
        out_csv = tmp_path / "sweep.csv"
        code, _ = run_cli("sweep", "--config", VACUUM_CONFIG,
                          "--variable", "r12", "--start", "5e-9",
                          "--stop", "4e-8", "--steps", "4",
                          "--output", str(out_csv))
        assert code == EXIT_OK
        rows = list(csv.DictReader(out_csv.open()))
        assert len(rows) == 4
        c6_col = [float(r["C6_Abraham (J*m^6)"]) for r in rows]
        assert len(set(c6_col)) == 1       # C6 independent of separation
        for row in rows:
            r12 = float(row["r12 (m)"])
            u = float(row["U_Abraham (J)"])
            assert u == float(row["C6_Abraham (J*m^6)"]) / r12 ** 6

    def test_density_sweep_converges_to_vacuum(self, tmp_path):
        out_csv = tmp_path / "density.csv"
        code, _ = run_cli("sweep", "--config", MAGNETO_CONFIG,
                          "--variable", "density", "--start", "1e-6",
                          "--stop", "1.0", "--steps", "3", "--log",
                          "--output", str(out_csv))
        assert code == EXIT_OK
        rows = list(csv.DictReader(out_csv.open()))
        first = rows[0]     # nearly empty medium
        a = float(first["C6_Abraham (J*m^6)"])
        m = float(first["C6_Maxwell (J*m^6)"])
        assert rel_err(m, a) < 1e-4
        last = rows[-1]     # full medium: prescriptions split
        assert rel_err(float(last["C6_Maxwell (J*m^6)"]),
                       float(last["C6_Abraham (J*m^6)"])) > 0.1

    def test_radius_sweep_scales_as_r6(self, tmp_path):
        out_csv = tmp_path / "radius.csv"
        code, _ = run_cli("sweep", "--config", VACUUM_CONFIG,
                          "--variable", "radius", "--start", "1e-9",
                          "--stop", "2e-9", "--steps", "2",
                          "--output", str(out_csv))
        assert code == EXIT_OK
        rows = list(csv.DictReader(out_csv.open()))
        small = float(rows[0]["C6_Abraham (J*m^6)"])
        big = float(rows[1]["C6_Abraham (J*m^6)"])
        assert big == 64.0 * small

    def test_bad_range_rejected(self):
        code, _ = run_cli("sweep", "--config", VACUUM_CONFIG,
                          "--variable", "r12", "--start", "1e-9",
                          "--stop", "1e-8", "--steps", "1")
        assert code == EXIT_CONFIG
