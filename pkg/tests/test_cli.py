from __future__ import annotations

from xmcurves.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def gen_file(tmp_path, capsys, name, *argv):
    code, out, _ = run(capsys, "gen", *argv)
    assert code == 0
    path = tmp_path / name
    path.write_text(out, encoding="utf-8")
    return str(path)


def test_gen_validate_round_trip(tmp_path, capsys):
    path = gen_file(
        tmp_path, capsys, "f.xmc", "--kind", "rightflagpolylines", "--n", "7", "--seed", "3"
    )
    code, out, _ = run(capsys, "validate", "--file", path)
    assert code == 0 and out.strip() == "ok"


def test_gen_determinism(capsys):
    args = ("gen", "--kind", "unitsegments", "--n", "9", "--seed", "5")
    code1, out1, _ = run(capsys, *args)
    code2, out2, _ = run(capsys, *args)
    assert code1 == code2 == 0 and out1 == out2


def test_chi_on_crossing_fan(tmp_path, capsys):
    path = gen_file(
        tmp_path, capsys, "fan.xmc", "--kind", "crossingfan", "--n", "3", "--k", "3", "--seed", "1"
    )
    code, out, _ = run(capsys, "chi", "--exact", "--file", path)
    lines = out.splitlines()
    assert code == 0 and lines[0] == "chi 3"
    assert sorted(lines[1:]) == [f"color {v} {v}" for v in (1, 2, 3)]
    code, out, _ = run(capsys, "omega", "--file", path)
    assert code == 0 and out.splitlines() == ["omega 3", "clique 1 2 3"]


def test_detect_round_trip(tmp_path, capsys):
    code, out, _ = run(capsys, "plant", "--type", "3", "--k", "2", "--seed", "4")
    assert code == 0
    planted = [line for line in out.splitlines() if line.startswith("# witness")][0]
    path = tmp_path / "t3.xmc"
    path.write_text(out, encoding="utf-8")
    code, out, _ = run(capsys, "detect", "--type", "3", "--k", "2", "--file", str(path))
    assert code == 0 and out.strip() == planted[2:]


def test_validate_failure_exits_1(tmp_path, capsys):
    bad = "xmcurves 1\ncurve 1 : 0,0 2,3 4,0\ncurve 2 : 0,2 4,2\n"
    path = tmp_path / "bad.xmc"
    path.write_text(bad, encoding="utf-8")
    code, out, _ = run(capsys, "validate", "--file", str(path))
    assert code == 1
    assert "MultipleCrossings" in out


def test_precondition_failure_exits_1(tmp_path, capsys):
    path = gen_file(tmp_path, capsys, "f.xmc", "--kind", "crossingfan", "--n", "3", "--k", "3")
    code, _, err = run(capsys, "gapsub", "--file", path, "--a", "3", "--b", "3")
    assert code == 1 and "must exceed" in err
    code, _, err = run(capsys, "keylemma", "--file", path, "--a", "1", "--b", "9")
    assert code == 1


def test_budget_exceeded_exits_2(tmp_path, capsys):
    # seed 5 at n=12 yields a graph whose clique bound undershoots, so
    # the exact solver really has to branch
    path = gen_file(
        tmp_path, capsys, "f.xmc",
        "--kind", "rightflagpolylines", "--n", "12", "--seed", "5", "--segments", "2",
    )
    code, _, err = run(capsys, "chi", "--exact", "--budget", "1", "--file", path)
    assert code == 2 and "budget" in err
    code, _, err = run(capsys, "detect", "--type", "1", "--k", "2", "--cap", "3", "--file", path)
    assert code == 2


def test_layers_alphaseq_shortcheck(tmp_path, capsys):
    path = gen_file(
        tmp_path, capsys, "f.xmc", "--kind", "rightflagpolylines", "--n", "8", "--seed", "3",
        "--segments", "2",
    )
    code, out, _ = run(capsys, "layers", "--file", path, "--source", "1")
    assert code == 0 and out.startswith("layer 0 : 1")
    assert "max_layer_chi" in out

    code, out, _ = run(capsys, "alphaseq", "--file", path, "--alpha", "2")
    assert code == 0 and out.splitlines()[0] == "alpha 2"

    code, out, _ = run(capsys, "shortcheck", "--file", path)
    assert code == 0 and out.startswith("ok checked=")


def test_keylemma_and_arcs_report(tmp_path, capsys):
    path = gen_file(
        tmp_path, capsys, "f.xmc", "--kind", "rightflagpolylines", "--n", "8", "--seed", "3",
        "--segments", "2",
    )
    code, out, _ = run(capsys, "keylemma", "--file", path, "--a", "1", "--b", "5", "--k", "2")
    assert code == 0
    assert "set meets_low : 4" in out
    assert "isolation ok" in out
    assert "slack k=2" in out

    code, out, _ = run(capsys, "arcs", "--file", path, "--a", "1", "--b", "5", "--side", "a")
    assert code == 0 and "class 1 :" in out and "flagged" in out


def test_graph_formats(tmp_path, capsys):
    path = gen_file(tmp_path, capsys, "fan.xmc", "--kind", "crossingfan", "--n", "3", "--k", "3")
    code, out, _ = run(capsys, "graph", "--file", path)
    assert code == 0 and out.splitlines()[0] == "1: 2 3"
    code, out, _ = run(capsys, "graph", "--format", "dot", "--file", path)
    assert code == 0 and out.startswith("graph G {")


def test_split_files_reload(tmp_path, capsys):
    path = gen_file(tmp_path, capsys, "two.xmc", "--kind", "twosided", "--n", "4", "--seed", "8")
    prefix = str(tmp_path / "parts")
    code, out, _ = run(capsys, "split", "--file", path, "--out", prefix)
    assert code == 0
    for side in ("right", "left"):
        code, out, _ = run(capsys, "validate", "--file", f"{prefix}.{side}.xmcurves")
        assert code == 0


def test_experiment_table(capsys):
    code, out, _ = run(
        capsys, "experiment", "--kind", "unitsegments", "--n", "10", "--trials", "5",
        "--seed", "2",
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("instance\tn\tkind")
    rows = [line.split("\t") for line in lines[1:] if not line.startswith("#")]
    assert len(rows) == 5
    for row in rows:
        omega, chi, dsatur = int(row[4]), int(row[5]), int(row[6])
        assert omega <= chi <= dsatur
        assert row[9] == ""  # timings stay blank unless requested
    assert any(line.startswith("# omega=") for line in lines)

    # deterministic by default
    code2, out2, _ = run(
        capsys, "experiment", "--kind", "unitsegments", "--n", "10", "--trials", "5",
        "--seed", "2",
    )
    assert out2 == out


def test_missing_file_exits_1(capsys):
    code, _, err = run(capsys, "validate", "--file", "/nonexistent/zzz.xmc")
    assert code == 1 and "error" in err


def test_round_trip_for_every_family_kind(tmp_path, capsys):
    from xmcurves.generators import GEN_KINDS

    for kind in GEN_KINDS:
        if kind == "twosided":
            continue  # not right-flag; its check is split-then-validate
        path = gen_file(
            tmp_path, capsys, f"{kind}.xmc",
            "--kind", kind, "--n", "5", "--k", "2", "--seed", "6",
        )
        code, out, _ = run(capsys, "validate", "--file", path)
        assert code == 0 and out.strip() == "ok"


def test_console_script_stdin_and_cross_process_determinism(tmp_path):
    import subprocess

    args = ["xmcurves", "gen", "--kind", "rays", "--n", "6", "--seed", "44"]
    first = subprocess.run(args, capture_output=True, text=True)
    second = subprocess.run(args, capture_output=True, text=True)
    assert first.returncode == second.returncode == 0
    assert first.stdout == second.stdout

    piped = subprocess.run(
        ["xmcurves", "validate", "--file", "-"],
        input=first.stdout,
        capture_output=True,
        text=True,
    )
    assert piped.returncode == 0 and piped.stdout.strip() == "ok"
