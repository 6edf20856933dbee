import json

import pytest

from fcy.cli import main


def run(runner, *args):
    return runner.invoke(main, [str(a) for a in args])


def test_coxeter_json(runner):
    r = run(runner, "coxeter", "--m", 1, "--n", 1, "--format", "json")
    assert r.exit_code == 0
    data = json.loads(r.stdout)
    assert data["schema"] == "fcy/1"
    assert (data["exponent"], data["sign"], data["holds"]) == (3, -1, True)


def test_orbit_worked_instance(runner):
    r = run(runner, "orbit", "--m", 5, "--n", 7, "--alpha", "0,2,3,7,7", "--format", "json")
    assert r.exit_code == 0
    data = json.loads(r.stdout)
    assert data["steps"] == 13 and data["sum"] == 35 and data["closes"]
    assert len(data["trace"]) == 13
    text = run(runner, "orbit", "--m", 5, "--n", 7, "--alpha", "0,2,3,7,7").stdout
    assert "steps: 13  sum |S|: 35" in text


def test_verify_instance(runner):
    r = run(runner, "verify", "--m", 2, "--n", 2)
    assert r.exit_code == 0
    lines = [l for l in r.stdout.splitlines() if l.startswith("[")]
    assert len(lines) == 11 and all(l.startswith("[PASS]") for l in lines)


def test_verify_detects_a_corrupted_sign(runner, monkeypatch):
    import fcy.ycat
    monkeypatch.setattr(fcy.ycat, "square_sign", lambda k, l: -1)
    r = run(runner, "verify", "--m", 2, "--n", 3)
    assert r.exit_code == 1
    assert "[FAIL] criterion  8" in r.stdout


COMMANDS = [
    ("lattice", "--m", 2, "--n", 3, "--format", "dot"),
    ("antichain", "--m", 2, "--n", 2),
    ("antichain", "--m", 3, "--n", 2, "--alpha", "0,1,2", "--format", "json"),
    ("resolve", "--m", 2, "--n", 2, "--alpha", "1,2"),
    ("hom", "--m", 2, "--n", 2, "--format", "csv"),
    ("presentation", "--m", 2, "--n", 3, "--variant", "w", "--format", "json"),
    ("auslander", "--s", 3, "--d", 1, "--dual", "--format", "dot"),
    ("verify", "--m", 1, "--n", 2, "--format", "json"),
]


@pytest.mark.parametrize("args", COMMANDS, ids=lambda a: a[0])
def test_deterministic_output(runner, args):
    first, second = run(runner, *args), run(runner, *args)
    assert first.exit_code == 0, first.stderr
    assert first.stdout == second.stdout and first.stdout


def test_formats(runner):
    dot = run(runner, "lattice", "--m", 1, "--n", 2, "--format", "dot").stdout
    assert '"0" -> "1";' in dot and '"1" -> "2";' in dot
    csv = run(runner, "hom", "--m", 2, "--n", 1, "--format", "csv").stdout.splitlines()
    assert csv[0] == "alpha,beta,degree,J,agrees" and len(csv) == 10
    res = json.loads(run(runner, "resolve", "--m", 2, "--n", 2, "--alpha", "1,2",
                         "--format", "json").stdout)
    assert res["complex"]["degrees"] == [["1,2"], ["0,2", "1,1"], ["0,1"]]
    assert res["complex"]["boundaries"] == [[[0, 0, "-1"], [0, 1, "-1"]], [[0, 0, "1"], [1, 0, "-1"]]]


def test_presentation_export_round_trips(runner, tmp_path):
    from fcy.quiver import presentation_from_json
    from fcy.ycat import presentation

    out = tmp_path / "q.json"
    r = run(runner, "presentation", "--m", 2, "--n", 2, "--variant", "v", "--format", "json", "--out", out)
    assert r.exit_code == 0 and r.stdout == ""
    data = json.loads(out.read_text())
    Q = presentation_from_json(data["quiver"])
    assert Q.to_json() == presentation(2, 2, "v").to_json()


def test_auslander_with_tilting(runner):
    r = run(runner, "auslander", "--s", 3, "--d", 2, "--m", 2, "--n", 3, "--format", "json")
    assert r.exit_code == 0
    assert json.loads(r.stdout)["checks"] == {"dimensions": True, "self_dual": True,
                                              "end_tilting": True, "anticommuting_dual": True}


@pytest.mark.parametrize("args,needle", [
    (("lattice", "--m", 3, "--n", 3, "--cap", 19), "above the cap"),
    (("orbit", "--m", 2, "--n", 2, "--alpha", "1,5"), "values must lie"),
    (("orbit", "--m", 2, "--n", 2, "--alpha", "2,1"), "non-decreasing"),
    (("orbit", "--m", 2, "--n", 2), "alpha"),
    (("coxeter", "--m", 0, "--n", 2), "m"),
    (("coxeter", "--m", 2, "--n", 2, "--format", "dot"), "no DOT"),
    (("verify", "--m", 2), "both --m and --n"),
    (("auslander", "--s", 3, "--d", 1, "--m", 3, "--n", 3), "corresponds to"),
])
def test_errors_go_to_stderr(runner, args, needle):
    r = run(runner, *args)
    assert r.exit_code == 2
    assert needle in r.stderr and r.stdout == ""


def test_bad_flag_values(runner):
    assert run(runner, "presentation", "--m", 2, "--n", 2, "--variant", "q").exit_code == 2
    assert run(runner, "orbit", "--m", 2, "--n", 2, "--alpha", "a,b").exit_code == 2


def test_remote_mode_matches_local(runner, monkeypatch):
    import httpx
    from fastapi.testclient import TestClient
    from fcy.service.api import app

    client = TestClient(app)

    def fake_post(url, json=None, timeout=None):
        return client.post("/" + url.rsplit("/", 1)[1], json=json)

    monkeypatch.setattr(httpx, "post", fake_post)
    args = ("presentation", "--m", 2, "--n", 2, "--variant", "w")
    remote = run(runner, *args, "--url", "http://fcy.test")
    assert remote.exit_code == 0
    assert remote.stdout == run(runner, *args).stdout
    bad = run(runner, "orbit", "--m", 2, "--n", 2, "--alpha", "1,5", "--url", "http://fcy.test")
    assert bad.exit_code == 2 and "400" in bad.stderr


def test_worker_pool_does_not_change_output(runner):
    serial = run(runner, "verify", "--m", 2, "--n", 2, "--format", "json")
    pooled = run(runner, "verify", "--m", 2, "--n", 2, "--jobs", 3, "--format", "json")
    assert serial.exit_code == pooled.exit_code == 0
    assert serial.stdout == pooled.stdout
