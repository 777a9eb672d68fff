import json

import pytest
import yaml

from frobtail import BettiTable
from frobtail.cli import (EXIT_CHECK, EXIT_COMPUTE, EXIT_CONFIG, EXIT_OK, ReportBundle, config_from_dict,
                          load_config, main, render_betti, reproduce_table, run)
from frobtail.errors import BudgetExceeded, ConfigError

FERMAT = {"p": 5, "vars": ["x", "y", "z"], "f": "x^3+y^3+z^3", "ideal": ["x^5", "y^5", "z^5"]}
QUADRICS_P2_JOB = {"p": 2, "vars": ["x", "y", "z"], "f": "x^3+y^3+z^3",
           "ideal": ["x^2", "xz", "xy+z^2", "yz", "y^2"]}


def write(tmp_path, data, name="job.yaml"):
    path = tmp_path / name
    path.write_text(yaml.safe_dump(data))
    return str(path)


def test_fermat_bundle_all_pass():
    cfg = config_from_dict(dict(FERMAT, exponents=[0, 1], checks=["theorem", "cor21", "mf"]))
    bundle = run(cfg)
    assert [r["e"] for r in bundle.rows] == [0, 1]
    assert bundle.rows[0]["betti"]["2"] == [[8, 3], [9, 1]]
    assert bundle.rows[1]["betti"]["1"] == [[25, 3]]
    assert bundle.rows[0]["checks"]["cor21"]["n"] == 30
    found = {(e, name) for e, name, res in bundle.check_results() if res["asserted"]}
    assert found == {(0, "theorem"), (1, "theorem"), (0, "cor21"), (0, "mf"), (1, "mf")}
    assert bundle.exit_code() == EXIT_OK and not bundle.failures


def test_quadrics_p2_bundle_flags_hypotheses():
    bundle = run(config_from_dict(dict(QUADRICS_P2_JOB, exponents=[0, 1, 2, 3])))
    holds = [r["hypotheses"]["a_holds"] and r["hypotheses"]["b_holds"] and r["hypotheses"]["c_holds"]
             for r in bundle.rows]
    assert holds == [False, False, True, True]
    th = [r["checks"]["theorem"] for r in bundle.rows]
    assert [t["asserted"] for t in th] == [False, False, True, True]
    assert all(t["passed"] for t in th[2:])
    assert bundle.exit_code() == EXIT_OK


@pytest.mark.parametrize("patch,path", [
    ({"vars": ["x", "y", "z", "w"]}, "vars"),
    ({"p": 6}, "p"),
    ({"f": "x^3 + q"}, "f"),
    ({"ideal": ["x^5", "y^5+z"]}, "ideal[1]"),
    ({"exponents": [0, -1]}, "exponents[1]"),
    ({"checks": ["theorem", "oops"]}, "checks[1]"),
    ({"format": "xml"}, "format"),
    ({"colour": "red"}, "colour"),
    ({"max_position": 1}, "max_position"),
])
def test_config_errors_carry_field_path(patch, path):
    with pytest.raises(ConfigError) as exc:
        config_from_dict(dict(FERMAT, **patch))
    assert exc.value.path == path


def test_config_missing_field():
    data = dict(FERMAT)
    del data["ideal"]
    with pytest.raises(ConfigError) as exc:
        config_from_dict(data)
    assert exc.value.path == "ideal"


def test_load_config_file(tmp_path):
    cfg = load_config(write(tmp_path, dict(FERMAT, exponents=[2, 0], seed=3)))
    assert cfg.exponents == [0, 2] and cfg.seed == 3 and cfg.max_position == 4
    bad = tmp_path / "bad.yaml"
    bad.write_text("p: [unclosed")
    with pytest.raises(ConfigError):
        load_config(str(bad))


def test_render_betti():
    t = BettiTable.from_twists({0: [0], 1: [5, 5, 5], 2: [8, 8, 8, 9]})
    lines = render_betti(t).splitlines()
    assert lines[0].split() == ["pos", "0", "pos", "1", "pos", "2"]
    assert lines[1].endswith("8:3 9:1")
    assert render_betti(BettiTable({})) == ""
    assert "1250:5" in render_betti(BettiTable.from_twists({0: [0], 1: [1250] * 5}))


def test_bundle_json_roundtrip_and_determinism():
    cfg = config_from_dict(dict(FERMAT, exponents=[0], checks=["theorem", "mf"], seed=11))
    a, b = run(cfg), run(cfg)
    assert a.to_json() == b.to_json()
    back = ReportBundle.from_json(a.to_json())
    assert back.to_dict() == a.to_dict()
    assert "timing" not in json.loads(a.to_json())
    assert "timing" in run(cfg, timing=True).to_dict()


def test_reproduce_small_rows():
    assert reproduce_table("section0", 1).passed
    res = reproduce_table("example44_p5", 0)
    assert res.passed and res.rows[0]["socle"] == "2:1"
    assert [res.rows[0][f"pos {k}"] for k in range(1, 5)] == ["2:5", "3:6", "5:6", "6:6"]
    assert reproduce_table("example44_p2", 3).passed


def test_reproduce_budget():
    with pytest.raises(BudgetExceeded) as exc:
        reproduce_table("section0", 3)
    assert exc.value.last_completed == 2
    assert exc.value.result.passed
    with pytest.raises(ConfigError):
        reproduce_table("nowhere", 0)


def test_main_exit_codes(tmp_path, capsys):
    ok = write(tmp_path, dict(FERMAT, exponents=[0], checks=["theorem", "mf"]), "ok.yaml")
    out = tmp_path / "out.json"
    assert main(["--config", ok, "--json", str(out)]) == EXIT_OK
    assert json.loads(out.read_text())["rows"][0]["socle"] == "6:1 7:3"
    assert "8:3 9:1" in capsys.readouterr().out

    failing = write(tmp_path, dict(FERMAT, exponents=[0], checks=["prop45"]), "fail.yaml")
    assert main(["--config", failing]) == EXIT_CHECK

    bad = write(tmp_path, dict(FERMAT, vars=["x", "y"]), "bad.yaml")
    assert main(["--config", bad]) == EXIT_CONFIG

    broken = write(tmp_path, dict(FERMAT, ideal=["x^2"]), "broken.yaml")
    assert main(["--config", broken]) == EXIT_COMPUTE

    assert main(["--reproduce", "example44_p2", "--e-max", "1"]) == EXIT_OK
    assert main(["--reproduce", "section0", "--e-max", "4"]) == EXIT_COMPUTE
    assert main(["--config", ok, "--e-max", "0", "--max-position", "3", "--seed", "2"]) == EXIT_OK


def test_large_exponents_need_flag(tmp_path):
    path = write(tmp_path, dict(FERMAT, exponents=[0, 5]))
    assert main(["--config", path]) == EXIT_CONFIG
