from pathlib import Path

import pytest

from hideseek.cli import main
from hideseek.scenario import parse_scenario_record


def run_cli(args, capsys):
    code = main(args)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_scenario_dump_to_stdout(capsys):
    code, out, err = run_cli(["scenario-dump", "--m", "3", "--s", "1"], capsys)
    assert code == 0
    assert err == ""
    sc = parse_scenario_record(out)
    assert sc.m == 3 and sc.s == 1


def test_output_flag_writes_file(tmp_path, capsys):
    target = tmp_path / "dump.csv"
    code, out, _ = run_cli(["scenario-dump", "--m", "3", "--s", "1",
                            "--output", str(target)], capsys)
    assert code == 0
    assert out == ""
    assert parse_scenario_record(target.read_text()).m == 3


def test_quantiles_tiny_run(capsys):
    code, out, _ = run_cli([
        "quantiles", "--m", "4", "--s", "1", "--trials", "2",
        "--n1-sweep", "5", "--deltas", "0.5", "--nbar2", "2",
        "--seed", "3"], capsys)
    assert code == 0
    assert out.startswith("kind,n1,k1,delta")


def test_config_file_and_flag_precedence(tmp_path, capsys):
    config = tmp_path / "run.cfg"
    config.write_text(
        "# comment line\n"
        "m = 3\n"
        "s = 1\n"
        "master-seed = 5\n")
    code, from_file, _ = run_cli(["scenario-dump", "--config", str(config)], capsys)
    assert code == 0
    assert parse_scenario_record(from_file).m == 3

    # flag overrides the file value
    code, overridden, _ = run_cli(["scenario-dump", "--config", str(config),
                                   "--seed", "6"], capsys)
    assert code == 0
    assert overridden != from_file

    code, explicit, _ = run_cli(["scenario-dump", "--m", "3", "--s", "1",
                                 "--seed", "5"], capsys)
    assert explicit == from_file


def test_env_seed_fallback(monkeypatch, capsys):
    monkeypatch.setenv("HIDESEEK_SEED", "17")
    code, from_env, _ = run_cli(["scenario-dump", "--m", "3", "--s", "1"], capsys)
    assert code == 0
    monkeypatch.delenv("HIDESEEK_SEED")
    code, explicit, _ = run_cli(["scenario-dump", "--m", "3", "--s", "1",
                                 "--seed", "17"], capsys)
    assert from_env == explicit

    # flag wins over the environment
    monkeypatch.setenv("HIDESEEK_SEED", "17")
    code, flagged, _ = run_cli(["scenario-dump", "--m", "3", "--s", "1",
                                "--seed", "18"], capsys)
    assert flagged != from_env


def test_bad_env_seed_is_config_error(monkeypatch, capsys):
    monkeypatch.setenv("HIDESEEK_SEED", "not-a-number")
    code, _, err = run_cli(["scenario-dump", "--m", "3", "--s", "1"], capsys)
    assert code == 1
    assert "HIDESEEK_SEED" in err


def test_unknown_config_key_is_config_error(tmp_path, capsys):
    config = tmp_path / "bad.cfg"
    config.write_text("mm = 3\n")
    code, _, err = run_cli(["scenario-dump", "--config", str(config)], capsys)
    assert code == 1
    assert "mm" in err


def test_missing_config_file_is_config_error(tmp_path, capsys):
    code, _, err = run_cli(["scenario-dump", "--config",
                            str(tmp_path / "absent.cfg")], capsys)
    assert code == 1


def test_bad_flag_value_is_config_error(capsys):
    code, _, _ = run_cli(["scenario-dump", "--m", "three"], capsys)
    assert code == 1


def test_unknown_subcommand_is_config_error(capsys):
    code, _, _ = run_cli(["frobnicate"], capsys)
    assert code == 1


def test_help_exits_zero(capsys):
    code, _, _ = run_cli(["--help"], capsys)
    assert code == 0


def test_domain_error_maps_to_exit_one(capsys):
    # m=1 is structurally valid JSON but the harness rejects deriving s
    code, _, err = run_cli(["scenario-dump", "--m", "1"], capsys)
    assert code == 1
    assert "error" in err


def test_unreachable_server_is_failure(capsys):
    code, _, err = run_cli(["scenario-dump", "--m", "3", "--s", "1",
                            "--server", "http://127.0.0.1:9"], capsys)
    assert code == 2
    assert "request failed" in err


def test_list_flags_parse(capsys):
    code, out, _ = run_cli([
        "compare", "--m", "3", "--s", "1", "--trials", "2",
        "--n1-sweep", "4,6", "--geometries", "2", "--alpha", "0.5",
        "--deltas", "0.5", "--nbar2", "2", "--seed", "1"], capsys)
    assert code == 0
    header = out.splitlines()[0]
    assert header.endswith("v_bar_q0p5_n1_4,v_bar_q0p5_n1_6")
