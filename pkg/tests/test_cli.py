import io

import pytest

from weylkit import checks, cli
from weylkit.errors import ConfigError


def run_cli(argv):
    import contextlib
    out = io.StringIO()
    err = io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = cli.main(argv)
    return code, out.getvalue(), err.getvalue()


def test_parse_config_defaults():
    config, warnings = cli.parse_config("")
    assert config == cli.SuiteConfig()
    assert warnings == []


def test_parse_config_values_and_comments():
    text = "\n".join([
        "# a comment",
        "suite pgl2 witt",
        "q 3",
        "prec 10   # trailing comment",
        "",
    ])
    config, warnings = cli.parse_config(text)
    assert config.suites == ("pgl2", "witt")
    assert config.q == 3
    assert config.prec == 10
    assert warnings == []


def test_parse_config_duplicate_key_last_wins():
    config, warnings = cli.parse_config("q 3\nq 5\n")
    assert config.q == 5
    assert len(warnings) == 1
    assert "line 2" in warnings[0]


def test_parse_config_unknown_key_reports_line():
    with pytest.raises(ConfigError) as info:
        cli.parse_config("q 3\nbogus 7\n")
    assert info.value.line == 2


def test_parse_config_rejects_non_prime_power_q():
    with pytest.raises(ConfigError):
        cli.parse_config("q 1\n")
    with pytest.raises(ConfigError):
        cli.parse_config("q 6\n")


def test_parse_config_unknown_suite():
    with pytest.raises(ConfigError):
        cli.parse_config("suite nonsense\n")


def test_render_parse_round_trip():
    config = cli.SuiteConfig(q=4, prec=5)
    text = cli.render_config(config)
    again, warnings = cli.parse_config(text)
    assert again == config
    assert warnings == []


def test_config_file_errors_exit_2(tmp_path):
    bad = tmp_path / "bad.cfg"
    bad.write_text("nonsense 1\n")
    code, out, err = run_cli(["--config", str(bad), "verify"])
    assert code == 2
    assert "usage error" in err


def test_verify_single_suite_tsv():
    code, out, err = run_cli(["verify", "--suite", "coxeter"])
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "check_id\tanchor\tstatus\twitness"
    assert len(lines) == 2
    fields = lines[1].split("\t")
    assert fields[0] == "C1"
    assert fields[1] == "quotient-coxeter"
    assert fields[2] == "PASS"


def test_verify_output_is_deterministic():
    code1, out1, _ = run_cli(["verify", "--suite", "coxeter",
                              "--suite", "witt"])
    code2, out2, _ = run_cli(["verify", "--suite", "coxeter",
                              "--suite", "witt"])
    assert code1 == code2 == 0
    assert out1 == out2


def test_weyl_subcommand():
    code, out, _ = run_cli(["weyl", "--type", "C2", "--j", "1"])
    assert code == 0
    assert "coxeter_row" in out
    assert "generator" in out


def test_cells_subcommand():
    code, out, _ = run_cli(["cells", "--type", "A1"])
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "point\tcell\ttorus_order\ttorus_coords"
    assert len(lines) == 14  # header + 13 grid points


def test_fourier_subcommand():
    code, out, _ = run_cli(["fourier", "--group", "z2"])
    assert code == 0
    assert out.count("\n") == 5  # header + 4 rows


def test_pgl2_subcommand():
    code, out, _ = run_cli(["pgl2", "--q", "2",
                            "--matrix", "0,1;e,0", "--op", "all"])
    assert code == 0
    assert "I2" in out
    assert "discriminant_valuation\t1" in out
    assert "fixed_point_count\t2" in out


def test_witt_subcommand():
    code, out, _ = run_cli(["witt", "--p", "3", "--m", "2"])
    assert code == 0
    assert "oracle\tPASS" in out
    assert "p_image\t(0,1)" in out


def test_witt_enum_subcommand():
    code, out, _ = run_cli(["witt", "--enum", "--p", "3", "--n", "1"])
    assert code == 0
    assert "count\t5" in out
    assert "direct_count\t5" in out


def test_out_file_written(tmp_path):
    target = tmp_path / "report.tsv"
    cfg = tmp_path / "run.cfg"
    cfg.write_text(f"suite coxeter\nout {target}\n")
    code, out, _ = run_cli(["--config", str(cfg), "verify"])
    assert code == 0
    assert target.read_text() == out


def test_registry_covers_all_suites():
    assert set(checks.SUITES) == {c.suite for c in checks.REGISTRY}
    ids = [c.check_id for c in checks.REGISTRY]
    assert ids == [f"C{i}" for i in range(1, 12)]
