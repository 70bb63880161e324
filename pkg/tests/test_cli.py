import json

import pytest

from jacklr.cli import main


@pytest.fixture(autouse=True)
def private_cache(tmp_path, monkeypatch, isolated_store):
    monkeypatch.setenv("JACKLR_CACHE", str(tmp_path / "default_cache"))


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_lr(capsys):
    assert run(capsys, "lr", "2,1", "2,1", "3,2,1")[:2] == (0, "2\n")
    assert run(capsys, "lr", "1", "1")[1] == "(2):1, (1,1):1\n"
    code, out, _ = run(capsys, "lr", "1", "1", "--json")
    assert json.loads(out) == {"coeffs": {"2": 1, "1,1": 1}}
    assert list(json.loads(out)["coeffs"]) == ["2", "1,1"]


def test_jack(capsys, isolated_store):
    assert run(capsys, "jack", "2", "2", "--no-cache")[1] == "m[2] + (2 / (a + 1))·m[1,1]\n"
    assert run(capsys, "jack", "1,1", "2", "--no-cache")[1] == "m[1,1]\n"
    assert run(capsys, "jack", "2", "2", "--at", "1", "--no-cache")[1] == "m[2] + m[1,1]\n"


def test_struct(capsys, tmp_path):
    out = run(capsys, "struct", "1", "1", "--no-cache")[1].splitlines()
    assert [line.split(None, 1) for line in out] == [["(2)", "1"], ["(1,1)", "2*a / (a + 1)"]]
    out = run(capsys, "struct", "1", "1", "--at", "1", "--no-cache", "--json")[1]
    assert json.loads(out)["coeffs"] == {"2": "1", "1,1": "1"}
    out = run(capsys, "struct", "1", "1", "--rank", "1", "--no-cache")[1]
    assert out.split() == ["(2)", "1"]
    fig = tmp_path / "f.png"
    assert run(capsys, "struct", "2", "1", "--no-cache", "--plot", str(fig))[0] == 0
    assert fig.stat().st_size > 0


def test_stanley_cases_support_mult(capsys):
    assert run(capsys, "stanley", "1", "1", "1,1", "--no-cache")[1] == "2*a^2\nPolynomialNonneg\n"
    code, out, _ = run(capsys, "cases", "--json")
    assert code == 0 and any(c["literal"] == "evii" for c in json.loads(out)["cases"])
    code, out, _ = run(capsys, "support", "sp:2", "1", "1", "1,1", "--json", "--no-cache")
    assert json.loads(out)["verdict"] == "InSupport" and json.loads(out)["value"] == "4/3"
    code, out, _ = run(capsys, "mult", "evii", "2,1", "2,1", "3,2,1", "--json")
    assert json.loads(out)["conjectural"] is True


@pytest.mark.parametrize("argv", [
    ("lr", "1,2", "1"),
    ("mult", "su:0,1", "1", "1", "2"),
    ("support", "sp:2", "1,1,1", "1", "2,1,1,1"),
    ("scan", "stanley", "--max-size", "20", "--no-cache"),
])
def test_operational_errors_exit_1(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 1 and "error" in err


def test_cache_cold_then_warm(capsys, tmp_path, isolated_store):
    cold = run(capsys, "jack", "3,1", "4", "--cache", str(tmp_path))[1]
    files = sorted(p.name for p in tmp_path.iterdir())
    assert "jack_3-1_n4.txt" in files
    warm = run(capsys, "jack", "3,1", "4", "--cache", str(tmp_path))[1]
    assert cold == warm
    target = tmp_path / "jack_3-1_n4.txt"
    good = target.read_bytes()
    target.write_bytes(good[:10])
    again = run(capsys, "jack", "3,1", "4", "--cache", str(tmp_path))[1]
    assert again == cold and target.read_bytes() == good


def test_scan_clean_exit_and_report(capsys, tmp_path):
    out = tmp_path / "r.json"
    fig = tmp_path / "r.png"
    code, _, _ = run(capsys, "scan", "pieri", "--max-size", "4", "--no-cache", "--out", str(out),
                     "--plot", str(fig))
    assert code == 0
    rep = json.loads(out.read_text())
    assert rep["format_version"] == 1 and rep["counterexamples"] == []
    assert (tmp_path / "r.runtime.json").exists() and fig.stat().st_size > 0


def test_scan_exit_2_on_counterexample(capsys, monkeypatch):
    from jacklr import scan
    monkeypatch.setattr(scan, "check_duality", lambda lam, mu, nu: False)
    code, out, _ = run(capsys, "scan", "duality", "--max-size", "2", "--no-cache")
    assert code == 2 and "counterexample" in out


def test_scan_deterministic_across_workers_and_cache(capsys, tmp_path, isolated_store):
    outs = []
    for i, extra in enumerate([("--workers", "1", "--no-cache"),
                               ("--workers", "3", "--cache", str(tmp_path / "c")),
                               ("--workers", "2", "--cache", str(tmp_path / "c"))]):
        path = tmp_path / f"r{i}.json"
        assert run(capsys, "scan", "conjB", "--cases", "sp:2,su:2,2", "--max-size", "4",
                   "--out", str(path), *extra)[0] == 0
        outs.append(path.read_bytes())
    assert outs[0] == outs[1] == outs[2]
