import json

import pytest

from permutomino.cli import main, parse_permutation
from permutomino.errors import ParseError
from permutomino.render import cells_from_ascii


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_parse_permutation():
    assert parse_permutation("2 1 3") == (2, 1, 3)
    assert parse_permutation("2,1,3") == (2, 1, 3)
    for text, position in [("2 x 3", 2), ("1 2 4", 3), ("1 2 2", 3), ("0 1", 1)]:
        with pytest.raises(ParseError) as exc:
            parse_permutation(text)
        assert exc.value.position == position


def test_classify_member(capsys):
    code, out, _ = run(capsys, "classify", "2 1 3 4 7 6 5")
    assert code == 0
    assert "upper envelope: 2 3 4 7 6 5" in out
    assert "lower envelope: 2 1 5" in out
    assert "square: yes" in out
    assert "odd-vertex realizable: yes" in out
    assert "free fixed points: 3 4" in out
    assert "fiber size: 4" in out


def test_classify_non_member_witness(capsys):
    code, out, _ = run(capsys, "classify", "5 9 8 7 6 3 1 2 4")
    assert code == 0
    assert "decomposable at split 5" in out
    code, out, _ = run(capsys, "classify", "1")
    assert code == 0 and "odd-vertex realizable: yes" in out


def test_classify_parse_error(capsys):
    code, _, err = run(capsys, "classify", "1 2 5")
    assert code == 2 and "parse error" in err


def test_build_single_and_fiber(capsys):
    code, out, _ = run(capsys, "build", "1 2")
    assert code == 0 and out.strip() == "#"
    code, out, _ = run(capsys, "build", "2 1 3 4 5", "--all")
    assert code == 0
    grids = [g for g in out.strip().split("\n\n") if g.strip()]
    assert len(grids) == 4
    assert len({frozenset(cells_from_ascii(g)) for g in grids}) == 4


def test_build_not_realizable(capsys):
    code, _, err = run(capsys, "build", "2 1")
    assert code == 3 and "not realizable" in err


def test_build_json(capsys):
    code, out, _ = run(capsys, "build", "3 1 6 8 2 4 7 5", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["v"] == 1
    assert payload["pi1"] == [3, 1, 6, 8, 2, 4, 7, 5]
    assert payload["classes"]["convex"] is True


def test_build_out_files(tmp_path, capsys):
    target = tmp_path / "shape.svg"
    code, out, _ = run(capsys, "build", "1 2 3", "--format", "svg", "--out", str(target))
    assert code == 0 and out == "" and target.exists()
    code, _, _ = run(capsys, "build", "2 1 3 4 5", "--all", "--format", "json",
                     "--out", str(tmp_path / "fiber.json"))
    assert code == 0
    payload = json.loads((tmp_path / "fiber.json").read_text())
    assert isinstance(payload, list) and len(payload) == 4  # one array document
    code, _, _ = run(capsys, "build", "2 1 3 4 5", "--all", "--format", "svg",
                     "--out", str(tmp_path / "fiber.svg"))
    assert code == 0
    assert len(sorted(tmp_path.glob("fiber-*.svg"))) == 4  # numbered files per shape


def test_enumerate_counts(capsys):
    assert run(capsys, "enumerate", "convex", "5")[1].splitlines()[0] == "84"
    assert run(capsys, "enumerate", "ctilde", "7", "--workers", "1")[1].strip() == "1450"
    assert run(capsys, "enumerate", "square", "5")[1].strip() == "104"
    assert run(capsys, "enumerate", "decomposable", "4")[1].strip() == "11"
    assert run(capsys, "enumerate", "convex", "4", "--method", "intervals")[1].strip() == "18"
    assert run(capsys, "enumerate", "symmetric", "6")[1].strip() == "22"
    assert run(capsys, "enumerate", "column-convex", "3")[1].splitlines()[0] == "4"


def test_enumerate_stratified(capsys):
    code, out, _ = run(capsys, "enumerate", "ctilde", "4", "--by", "fixed-points")
    assert code == 0
    assert out.splitlines()[0] == "13"
    assert "free-fixed-points 0: 10" in out
    assert "free-fixed-points 2: 1" in out
    code, out, _ = run(capsys, "enumerate", "square", "4", "--by", "components")
    assert "components 1: 13" in out
    assert "components 2: 7" in out


def test_enumerate_listing(capsys):
    code, out, _ = run(capsys, "enumerate", "convex", "3", "--list")
    lines = out.splitlines()
    assert lines[0] == "4" and len(lines) == 5
    assert all("pi1=" in line for line in lines[1:])
    code, out, _ = run(capsys, "enumerate", "ctilde", "3", "--list")
    assert out.splitlines()[1:] == ["1 2 3", "1 3 2", "2 1 3"]


def test_enumerate_size_too_large(capsys):
    code, _, err = run(capsys, "enumerate", "column-convex", "9")
    assert code == 4 and "size too large" in err
    code, _, err = run(capsys, "enumerate", "ctilde", "12")
    assert code == 4


def test_verify_text_and_json(capsys):
    code, out, _ = run(capsys, "verify", "--max-size", "4")
    assert code == 0
    assert "all identities pass" in out
    code, out, _ = run(capsys, "verify", "--max-size", "4", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["ok"] is True
    row = next(e for e in payload["entries"] if e["name"] == "ctilde = square - decomposable")
    assert row["status"] == "pass" and row["detail"] == "n=4: 13 = 24 - 11"


def test_verify_strict_paper(capsys):
    code, out, _ = run(capsys, "verify", "--max-size", "4", "--strict-paper")
    assert code == 0  # discrepancies are reported, not failed
    assert "discrepant" in out


def test_decompose(capsys):
    code, out, _ = run(capsys, "decompose", "3 2 1")
    assert code == 0
    assert "components: 3" in out
    assert out.count("(empty)") == 3
    code, out, _ = run(
        capsys, "decompose", "16 15 18 19 17 14 12 13 9 7 11 10 8 3 1 6 5 2 4")
    assert code == 0
    assert "components: 5" in out
    assert "pi2=3 5 4 1 2" in out


def test_decompose_domain_errors(capsys):
    code, _, err = run(capsys, "decompose", "1 2 3")
    assert code == 5 and "bijection domain" in err
    code, _, err = run(capsys, "decompose", "5 2 3 4 1")
    assert code == 5


def test_decompose_render(capsys):
    code, out, _ = run(capsys, "decompose", "3 4 1 2", "--render")
    assert code == 0
    assert "#" in out
