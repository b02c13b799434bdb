from qclgame import game_ng
from qclgame.checks import PROPERTIES, run_checks
from qclgame.cli import main
from qclgame.game import Domain

# negatives compared in natural order instead of inverted: one branch flipped
BROKEN_GCL = Domain("broken", key=lambda d: (d > 0, -d if d > 0 else d), winning=lambda d: d > 0)


def test_small_run_passes():
    report = run_checks(seed=3, count=40)
    assert report.ok
    assert [r.name for r in report.results] == list(PROPERTIES)
    assert report.lines() == ["all properties passed (40 formulas)"]


def test_empty_run_is_vacuous():
    report = run_checks(seed=7, count=0)
    assert report.ok and all(r.cases == 0 for r in report.results)


def test_broken_order_is_caught():
    report = run_checks(seed=7, count=200, properties=["theorem2", "theorem1"], gcl_domain=BROKEN_GCL)
    by_name = {r.name: r for r in report.results}
    assert by_name["theorem1"].ok
    assert not by_name["theorem2"].ok
    assert "formula" in by_name["theorem2"].counterexample
    lines = report.lines()
    assert lines[0].startswith("FAIL theorem2")
    assert lines[-1] == "1 properties failed (seed 7, 200 formulas)"


def test_cli_check_reports_counterexample(monkeypatch, capsys):
    monkeypatch.setattr(game_ng, "GCL_DOMAIN", BROKEN_GCL)
    assert main(["check", "--seed", "7", "--count", "100"]) == 1
    out = capsys.readouterr().out
    assert "FAIL theorem2" in out and "counterexample: formula" in out
