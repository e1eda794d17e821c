import json

import pytest

from eitspec import cli

CATALOG = "species,branch,omega_ge_cm1,gamma_cm1,strength\nX,R1,100.0,0.01,1.0\n"


def test_run_writes_outputs_and_figure(tmp_path, capsys):
    out = tmp_path / "result"
    status = cli.main(["run", "--scenario", "fig4-two-lines", "--out", str(out)])
    assert status == 0
    assert (out / "spectrum.csv").is_file()
    assert (out / "report.csv").is_file()
    assert (out / "spectrum.png").stat().st_size > 0
    stdout = capsys.readouterr().out
    assert "spectrum.csv" in stdout
    assert "residual_at_target" in stdout


def test_run_no_plot_skips_figure(tmp_path):
    out = tmp_path / "result"
    status = cli.main(
        ["run", "--scenario", "fig4-two-lines", "--out", str(out), "--no-plot"]
    )
    assert status == 0
    assert not (out / "spectrum.png").exists()


def test_run_without_out_prints_metrics(capsys):
    assert cli.main(["run", "--scenario", "methanol"]) == 0
    assert "residual_at_target" in capsys.readouterr().out


def test_run_unknown_scenario_exits_1_and_lists_names(capsys):
    status = cli.main(["run", "--scenario", "nosuch"])
    assert status == 1
    err = capsys.readouterr().err
    for name in ("fig4-two-lines", "fig5-congested", "cl2-inter", "cl2-intra", "methanol"):
        assert name in err


def test_run_is_byte_deterministic(tmp_path):
    a = tmp_path / "a"
    b = tmp_path / "b"
    for out in (a, b):
        assert cli.main(
            ["run", "--scenario", "cl2-intra", "--out", str(out), "--no-plot"]
        ) == 0
    assert (a / "spectrum.csv").read_bytes() == (b / "spectrum.csv").read_bytes()
    assert (a / "report.csv").read_bytes() == (b / "report.csv").read_bytes()


def test_run_config_file(tmp_path, capsys):
    cfg = {
        "name": "custom",
        "catalog": "fig4_model",
        "controls": [
            {"line": "model A", "omega_c": 100.0, "rabi": 2.5, "omega_es": 100.0}
        ],
        "grid": {"center": 100.0, "halfwidth": 8.0, "step": 0.02},
    }
    path = tmp_path / "cfg.json"
    path.write_text(json.dumps(cfg), encoding="utf-8")
    assert cli.main(["run", "--config", str(path)]) == 0
    assert "b_peak_shift_cm1" in capsys.readouterr().out


def test_run_bad_config_exits_2(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text("{not json", encoding="utf-8")
    assert cli.main(["run", "--config", str(path)]) == 2
    assert "data error" in capsys.readouterr().err


def test_convert_ghz_anchor(capsys):
    assert cli.main(["convert", "--wavenumber", "0.025", "--to", "ghz"]) == 0
    out = capsys.readouterr().out.strip()
    assert out.startswith("0.74948")
    assert abs(float(out) - 0.75) / 0.75 < 0.003


def test_convert_intensity(capsys):
    status = cli.main(
        ["convert", "--wavenumber", "0.025", "--to", "intensity", "--mu", "0.1"]
    )
    assert status == 0
    value = float(capsys.readouterr().out.strip())
    assert value == pytest.approx(294180.79991830996, rel=1e-9)


def test_convert_intensity_requires_mu(capsys):
    assert cli.main(["convert", "--wavenumber", "0.025", "--to", "intensity"]) == 1
    assert "--mu" in capsys.readouterr().err


def test_convert_invalid_mu_is_data_error(capsys):
    status = cli.main(
        ["convert", "--wavenumber", "0.025", "--to", "intensity", "--mu", "-1"]
    )
    assert status == 2


def test_plan_uniform_es_map(tmp_path, capsys):
    path = tmp_path / "lines.csv"
    path.write_text(CATALOG, encoding="utf-8")
    status = cli.main(
        ["plan", "--catalog", str(path), "--control", "100.0,0.01,91.0"]
    )
    assert status == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0].startswith("label,role,delta_prime_cm1")
    cells = out[1].split(",")
    assert cells[0] == "X R1"
    assert float(cells[2]) == 9.0
    assert cells[-1] == "untouched"


def test_plan_with_es_map_file(tmp_path, capsys):
    path = tmp_path / "lines.csv"
    path.write_text(CATALOG, encoding="utf-8")
    es_path = tmp_path / "es.json"
    es_path.write_text(json.dumps({"X R1": None}), encoding="utf-8")
    status = cli.main(
        [
            "plan",
            "--catalog",
            str(path),
            "--control",
            "100.0,0.01,91.0",
            "--es-map",
            str(es_path),
        ]
    )
    assert status == 0
    out = capsys.readouterr().out.splitlines()
    assert out[1].split(",")[2] == "inf"


def test_plan_bad_control_triple(capsys, tmp_path):
    path = tmp_path / "lines.csv"
    path.write_text(CATALOG, encoding="utf-8")
    assert cli.main(["plan", "--catalog", str(path), "--control", "1,2"]) == 1


def test_spectrum_to_stdout(tmp_path, capsys):
    cat = tmp_path / "lines.csv"
    cat.write_text(CATALOG, encoding="utf-8")
    controls = tmp_path / "controls.json"
    controls.write_text(
        json.dumps(
            [{"line": "X R1", "omega_c": 50.0, "rabi": 0.025, "omega_es": 50.0}]
        ),
        encoding="utf-8",
    )
    status = cli.main(
        [
            "spectrum",
            "--catalog",
            str(cat),
            "--controls",
            str(controls),
            "--grid",
            "100.0,0.5,0.001",
        ]
    )
    assert status == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "energy_cm1,total,X R1"
    assert len(out) == 1002


def test_spectrum_to_file(tmp_path, capsys):
    cat = tmp_path / "lines.csv"
    cat.write_text(CATALOG, encoding="utf-8")
    controls = tmp_path / "controls.json"
    controls.write_text("[]", encoding="utf-8")
    out_file = tmp_path / "spec.csv"
    status = cli.main(
        [
            "spectrum",
            "--catalog",
            str(cat),
            "--controls",
            str(controls),
            "--grid",
            "100.0,0.5,0.001",
            "--out",
            str(out_file),
        ]
    )
    assert status == 0
    assert out_file.is_file()


def test_spectrum_missing_catalog_exits_2(tmp_path, capsys):
    controls = tmp_path / "controls.json"
    controls.write_text("[]", encoding="utf-8")
    status = cli.main(
        [
            "spectrum",
            "--catalog",
            str(tmp_path / "nope.csv"),
            "--controls",
            str(controls),
            "--grid",
            "1,1,0.1",
        ]
    )
    assert status == 2


def test_catalog_parse_error_exits_2(tmp_path, capsys):
    bad = tmp_path / "bad.csv"
    bad.write_text(
        "species,branch,omega_ge_cm1,gamma_cm1,strength\nX,R1,1.0,0.0,1.0\n",
        encoding="utf-8",
    )
    controls = tmp_path / "controls.json"
    controls.write_text("[]", encoding="utf-8")
    status = cli.main(
        [
            "spectrum",
            "--catalog",
            str(bad),
            "--controls",
            str(controls),
            "--grid",
            "1,1,0.1",
        ]
    )
    assert status == 2
    assert "gamma_cm1" in capsys.readouterr().err


def test_numerical_errors_exit_3(monkeypatch, capsys):
    from eitspec.errors import SingularMatrixError

    def boom(cfg, out_dir=None):
        raise SingularMatrixError("synthetic failure")

    monkeypatch.setattr(cli, "run_scenario", boom)
    assert cli.main(["run", "--scenario", "methanol"]) == 3
    assert "numerical error" in capsys.readouterr().err


def test_list_subcommand(capsys):
    assert cli.main(["list"]) == 0
    out = capsys.readouterr().out
    for name in ("cl2-inter", "cl2-intra", "fig4-two-lines", "fig5-congested", "methanol"):
        assert name in out


def test_help_screens_exit_0(capsys):
    assert cli.main(["--help"]) == 0
    for sub in ("run", "spectrum", "plan", "convert", "list"):
        assert cli.main([sub, "--help"]) == 0
    assert "usage" in capsys.readouterr().out


def test_version_flag(capsys):
    assert cli.main(["--version"]) == 0
    assert "eitspec" in capsys.readouterr().out


def test_missing_subcommand_is_usage_error(capsys):
    assert cli.main([]) == 1


def test_usage_error_on_unknown_flag(capsys):
    assert cli.main(["run", "--scenario", "methanol", "--bogus"]) == 1
