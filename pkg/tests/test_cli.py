from __future__ import annotations

import io
import json

import pytest

from surfclass.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture()
def sphere_file(tmp_path):
    p = tmp_path / "sphere.cw2"
    p.write_text("F: 0 1 2\nF: 0 1 3\nF: 0 2 3\nF: 1 2 3\n", encoding="utf-8")
    return str(p)


@pytest.fixture()
def twisted_file(tmp_path):
    p = tmp_path / "twisted.cw2"
    p.write_text("F: 0 1 2 3\nF: 2 3 4 5\nF: 0 1 4 5\n", encoding="utf-8")
    return str(p)


def test_classify_sphere_line(capsys, sphere_file):
    code, out, _ = run(capsys, "classify", sphere_file)
    assert code == 0
    assert out == "S2: orientable genus 0, 0 boundary, χ=2\n"


def test_classify_json_carries_same_verdict(capsys, sphere_file):
    code, out, _ = run(capsys, "classify", sphere_file, "--format", "json")
    assert code == 0
    obj = json.loads(out)
    assert obj["components"] == [
        {"name": "S2", "orientable": True, "genus": 0, "boundary": 0, "euler": 2}
    ]


def test_classify_multi_component_prefixes(capsys, tmp_path):
    p = tmp_path / "two.scx"
    p.write_text("0 1 2\n3 4 5\n", encoding="utf-8")
    code, out, _ = run(capsys, "classify", str(p))
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("component 0: F_{0,1}:")
    assert lines[1].startswith("component 1: F_{0,1}:")


def test_classify_non_surface_exits_4_with_verdict(capsys, tmp_path):
    p = tmp_path / "bad.scx"
    p.write_text("0 1 2\n0 1 3\n0 1 4\n", encoding="utf-8")
    code, out, _ = run(capsys, "classify", str(p))
    assert code == 4
    assert "verdict: no" in out


def test_components_output(capsys, tmp_path):
    p = tmp_path / "graph.scx"
    p.write_text("1\n2\n3\n4\n5\n6\n1 2\n3 5\n2 4\n1 4\n", encoding="utf-8")
    code, out, _ = run(capsys, "components", str(p))
    assert code == 0
    assert out.splitlines() == [
        "3 components",
        "component 0: 1 2 4",
        "component 1: 3 5",
        "component 2: 6",
    ]


def test_surface_check_pass_and_fail(capsys, sphere_file, tmp_path):
    code, out, _ = run(capsys, "surface-check", sphere_file)
    assert code == 0
    assert out.splitlines() == ["surface: yes", "closed: yes", "boundary components: 0"]
    p = tmp_path / "pinch.scx"
    p.write_text("0 1 2\n0 3 4\n", encoding="utf-8")
    code, out, _ = run(capsys, "surface-check", str(p))
    assert code == 4
    assert out.splitlines()[0] == "surface: no"


def test_orient_conflict_line(capsys, twisted_file):
    code, out, _ = run(capsys, "orient", twisted_file)
    assert code == 0
    assert out == "non-orientable (conflict on edge {4,5})\n"


def test_orient_witness(capsys, sphere_file):
    code, out, _ = run(capsys, "orient", sphere_file)
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "orientable"
    assert len(lines) == 5


def test_orient_json(capsys, twisted_file):
    code, out, _ = run(capsys, "orient", twisted_file, "--format", "json")
    assert code == 0
    obj = json.loads(out)
    assert obj["orientable"] is False
    assert obj["conflict"] == ["4", "5"]


def test_orient_dispatches_to_dimension_3(capsys, tmp_path):
    p = tmp_path / "tet.scx"
    p.write_text("0 1 2 3\n", encoding="utf-8")
    code, out, _ = run(capsys, "orient", str(p))
    assert code == 0
    assert out.splitlines() == ["orientable", "0 1 2 3"]


def test_classify3(capsys, tmp_path):
    p = tmp_path / "tet.scx"
    p.write_text("0 1 2 3\n", encoding="utf-8")
    code, out, _ = run(capsys, "classify3", str(p))
    assert code == 0
    assert out.splitlines() == ["3-manifold: yes", "closed: no", "boundary: S2"]
    p2 = tmp_path / "tri.scx"
    p2.write_text("0 1 2\n", encoding="utf-8")
    code, out, _ = run(capsys, "classify3", str(p2))
    assert code == 4
    assert out.splitlines()[0] == "3-manifold: no"


def test_stdin_input(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("0 1 2\n0 1 3\n"))
    code, out, _ = run(capsys, "classify", "-")
    assert code == 0
    assert out.startswith("F_{0,1}:")


def test_input_format_flag(capsys, tmp_path):
    p = tmp_path / "amb.txt"
    p.write_text("0 1 2\n", encoding="utf-8")
    code, out, _ = run(capsys, "classify", str(p), "--input", "scx")
    assert code == 0
    code, _, err = run(capsys, "classify", str(p), "--input", "cw2")
    assert code == 3
    assert "error:" in err


def test_parse_error_exit_3(capsys, tmp_path):
    p = tmp_path / "bad.scx"
    p.write_text("0 0 1\n", encoding="utf-8")
    code, _, err = run(capsys, "classify", str(p))
    assert code == 3
    assert "line 1" in err


def test_missing_file_exit_3(capsys):
    code, _, err = run(capsys, "classify", "no-such-file")
    assert code == 3


def test_slw_equiv_and_classify(capsys, tmp_path):
    a = tmp_path / "a.slw"
    a.write_text("graph:\nv P\ne a P P\ne b P P\nlist n=0:\na b a^-1 b^-1\n", encoding="utf-8")
    b = tmp_path / "b.slw"
    b.write_text("graph:\nv Q\ne x Q Q\ne y Q Q\nlist n=0:\nx y x^-1 y^-1\n", encoding="utf-8")
    code, out, _ = run(capsys, "slw", "equiv", str(a), str(b))
    assert code == 0
    assert out.splitlines()[0] == "equivalent"
    k = tmp_path / "k.slw"
    k.write_text("graph:\nv P\ne a P P\ne b P P\nlist n=0:\na a b b\n", encoding="utf-8")
    code, out, _ = run(capsys, "slw", "equiv", str(a), str(k))
    assert code == 0
    assert out == "not equivalent\n"
    s = tmp_path / "s.slw"
    s.write_text("graph:\nv P\ne a P P\nlist n=0:\na\nlist n=0:\na^-1\n", encoding="utf-8")
    code, out, _ = run(capsys, "slw", "equiv", str(a), str(s))
    assert code == 0
    assert out.startswith("not equivalent (")
    code, out, _ = run(capsys, "slw", "classify", str(k))
    assert code == 0
    assert out.startswith("Kl:")


def test_rot_classify_inline_and_file(capsys, tmp_path):
    code, out, _ = run(capsys, "rot", "classify", "{1212}, u={- +}")
    assert code == 0
    assert out.startswith("Kl:")
    p = tmp_path / "r.rot"
    p.write_text("{12, 12}\n", encoding="utf-8")
    code, out, _ = run(capsys, "rot", "classify", str(p))
    assert code == 0
    assert out.startswith("S2:")


def test_chord_commands(capsys):
    code, out, _ = run(capsys, "chord", "canon", "2121")
    assert (code, out) == (0, "1212\n")
    code, out, _ = run(capsys, "chord", "iso", "1212", "1122")
    assert (code, out) == (0, "not isomorphic\n")
    code, out, _ = run(capsys, "chord", "enum", "3")
    assert code == 0
    assert len(out.splitlines()) == 5
    code, out, _ = run(capsys, "chord", "enum", "3", "--genus", "0")
    assert out.splitlines() == ["112233", "112332"]


def test_chord_enum_bound_exit_2(capsys):
    code, _, err = run(capsys, "chord", "enum", "9")
    assert code == 2
    assert "bound" in err


def test_catalog_list_and_show(capsys):
    code, out, _ = run(capsys, "catalog", "list")
    assert code == 0
    names = out.splitlines()
    assert "rcc/mobius" in names and names == sorted(names)
    code, out, _ = run(capsys, "catalog", "show", "rot/R21")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "name: rot/R21"
    assert "expected: T2" in lines
    assert lines[-1] == "{{1,2,1,2}}"


def test_catalog_show_unknown_exit_2(capsys):
    code, _, err = run(capsys, "catalog", "show", "nope")
    assert code == 2


def test_reruns_are_byte_identical(capsys, sphere_file):
    _, out1, _ = run(capsys, "classify", sphere_file)
    _, out2, _ = run(capsys, "classify", sphere_file)
    assert out1 == out2
    _, j1, _ = run(capsys, "classify", sphere_file, "--format", "json")
    _, j2, _ = run(capsys, "classify", sphere_file, "--format", "json")
    assert j1 == j2
