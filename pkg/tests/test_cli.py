import json

import pytest

from wpline.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_normal_form(capsys):
    code, out = run(capsys, "normal-form", "--weights", "2,3,6", "w")
    assert code == 0
    assert out.strip() == "(1,2,5;-2)"


def test_normal_form_expression(capsys):
    code, out = run(capsys, "normal-form", "--weights", "3,3,3", "2*x2 - c + xbar1")
    assert code == 0


def test_delta(capsys):
    code, out = run(capsys, "delta", "--weights", "2,3,6", "c")
    assert code == 0 and out.strip() == "6"


def test_hom_dim(capsys):
    code, out = run(capsys, "hom-dim", "--weights", "2,3,6", "0", "c")
    assert code == 0 and out.strip() == "hom=2 ext1=0"


def test_k0_reduce_json(capsys):
    code, out = run(capsys, "k0-reduce", "--weights", "2,4,4", "--json", "x1+x2")
    assert code == 0
    data = json.loads(out)
    assert data["schema"] == "1" and sum(data["coefficients"]) == 1


def test_euler(capsys):
    code, out = run(capsys, "euler", "--weights", "2,3,6", "0", "c")
    assert code == 0 and out.strip() == "2"


def test_bundle_eq_true(capsys):
    code, out = run(
        capsys, "bundle-eq", "--weights", "2,4,4", "E<0,2,0>(x3)", "E<0,0,0>(x1-x2+x3)"
    )
    assert code == 0 and out.strip() == "true"


def test_bundle_eq_false(capsys):
    code, out = run(capsys, "bundle-eq", "--weights", "2,4,4", "E<0,2,0>", "E<0,0,0>")
    assert code == 1 and out.strip() == "false"


def test_suspend(capsys):
    code, out = run(capsys, "suspend", "--weights", "3,3,3", "E<1,0,1>")
    assert code == 0 and out.strip().startswith("E<")


def test_hulls(capsys):
    code, out = run(capsys, "hulls", "--weights", "3,3,3", "E<0,0,0>")
    assert code == 0 and out.startswith("I:")


def test_slope(capsys):
    code, out = run(capsys, "slope", "--weights", "2,4,4", "E<0,2,2>")
    assert code == 0 and out.strip() == "2"


def test_mutate_fixture(capsys):
    code, out = run(capsys, "mutate", "--quiver", "tbar_cluster_333", "--vertex", "1")
    assert code == 0
    data = json.loads(out)
    assert len(data["vertices"]) == 8


def test_apply_and_iso(capsys):
    code, out = run(
        capsys, "apply", "--quiver", "tbar_cluster_333", "--sequence", "1,2,3", "--json"
    )
    assert code == 0
    quiver = json.loads(out)["quiver"]
    path = "/tmp/wpline_cli_test_quiver.json"
    with open(path, "w") as fh:
        json.dump(quiver, fh)
    code, out = run(capsys, "iso", "--quiver", path, "--target", "target_tubular_333")
    assert code == 0 and out.strip() == "isomorphic"


def test_iso_negative_exit(capsys):
    code, out = run(capsys, "iso", "--quiver", "tbar_cluster_333", "--target", "target_tubular_333")
    assert code == 1


def test_search(capsys):
    code, out = run(
        capsys,
        "search",
        "--quiver",
        "tbar_cluster_333",
        "--target",
        "target_tubular_333",
        "--max-depth",
        "3",
    )
    assert code == 0
    seq = [int(v) for v in out.strip().split(",")]
    assert 1 <= len(seq) <= 3


def test_fixtures_listing(capsys):
    code, out = run(capsys, "fixtures")
    assert code == 0 and "cuboid_cluster_244" in out
    code, out = run(capsys, "fixtures", "cuboid_cluster_236")
    assert code == 0 and json.loads(out)["layout"]


def test_replay_exit_code(capsys, tmp_path):
    out_file = tmp_path / "report.json"
    code, out = run(capsys, "replay", "333", "--json", str(out_file))
    assert code == 0
    assert "PASS" in out
    report = json.loads(out_file.read_text())
    assert report["pass"] is True and report["schema"] == "1"


def test_usage_error_exit_code(capsys):
    assert main(["normal-form", "--weights", "2,3", "w"]) == 2
    assert main(["fixtures", "bogus"]) == 2


def test_argparse_usage_exits_2():
    with pytest.raises(SystemExit) as exc:
        main(["not-a-command"])
    assert exc.value.code == 2
