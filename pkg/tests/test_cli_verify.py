import json
import subprocess
import sys

from dangul.canonical_orient import ddm_orient
from dangul.cli import main
from dangul.counting import brown_t, brown_q
from dangul.draw import map_svg, mobile_svg
from dangul.generate import generate_maps, generate_d_angulations
from dangul.map_core import girth, INFINITE
from dangul.bijections import phi_minus, unrooted_code
from dangul.mobiles import Mobile, excess, is_d_branching
from dangul.verify import (verify, report_lines, all_passed, check_orientation_fixture,
                           girth_d_maps)

from helpers import tetrahedron, two_edge_path


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    return code, capsys.readouterr().out


def write(tmp_path, name, data):
    p = tmp_path / name
    p.write_text(json.dumps(data))
    return p


def test_series_golden(capsys):
    code, out = run(capsys, "series", "--d", 5, "--order", 10)
    assert code == 0
    assert out.split() == ["0", "1", "0", "5", "0", "121", "0", "4690", "0", "228065", "0"]
    code, out = run(capsys, "series", "--d", 6, "--order", 6, "--format", "json")
    assert json.loads(out) == [0, 1, 3, 17, 128, 1131, 11070]


def test_series_annular(capsys):
    code, out = run(capsys, "series", "--d", 3, "--p", 4, "--order", 5, "--format", "json")
    assert json.loads(out) == [0, 4, 0, 20, 0, 120]
    assert run(capsys, "series", "--d", 4, "--p", 5, "--order", 3)[0] == 2


def test_brown(capsys):
    assert run(capsys, "brown", "--family", "t", "--p", 3, "--n", 2)[1].strip() == "3"
    code, out = run(capsys, "brown", "--family", "q", "--p", 2, "--n", 2, "--format", "json")
    assert json.loads(out) == 6


def test_girth(capsys, tmp_path):
    p = write(tmp_path, "tet.json", tetrahedron().to_dict())
    assert run(capsys, "girth", p)[1].strip() == "3"
    p = write(tmp_path, "path.json", two_edge_path().to_dict())
    assert run(capsys, "girth", p)[1].strip() == "infinite"


def test_orient_open_close_roundtrip(capsys, tmp_path):
    m = write(tmp_path, "tet.json", tetrahedron().face_rooted().to_dict())
    svg = tmp_path / "o.svg"
    code, out = run(capsys, "orient", m, "--d", 3, "--svg", svg)
    assert code == 0 and svg.read_text().startswith("<svg")
    o = write(tmp_path, "o.json", json.loads(out))
    code, out = run(capsys, "open", o, "--svg", tmp_path / "t.svg")
    assert code == 0
    mob = json.loads(out)
    assert is_d_branching(Mobile.from_dict(mob), 3) and excess(Mobile.from_dict(mob)) == -3
    t = write(tmp_path, "t.json", mob)
    code, out = run(capsys, "close", t)
    assert code == 0
    t2 = write(tmp_path, "t2.json", json.loads(out))
    code, out2 = run(capsys, "open", t2)
    again = Mobile.from_dict(json.loads(out2))
    assert unrooted_code(again) == unrooted_code(Mobile.from_dict(mob))


def test_orient_low_girth_fails(capsys, tmp_path):
    m = next(x for x in generate_maps(3, 3, 4) if girth(x) < 3)
    p = write(tmp_path, "low.json", m.face_rooted().to_dict())
    assert run(capsys, "orient", p, "--d", 3)[0] == 1


def test_open_modes(capsys, tmp_path):
    b = ddm_orient(tetrahedron().face_rooted(), 3)
    p = write(tmp_path, "o.json", b.to_dict())
    code, out = run(capsys, "open", p, "--mode", "plus")
    assert code == 0
    plus = json.loads(out)
    code, out = run(capsys, "open", p, "--mode", "minus")
    minus = json.loads(out)
    assert len(plus["alpha"]) != len(minus["alpha"])


def test_dual(capsys, tmp_path):
    m = tetrahedron().face_rooted()
    p = write(tmp_path, "m.json", m.to_dict())
    out = json.loads(run(capsys, "dual", p, "--format", "json")[1])
    assert len(out["alpha"]) == m.n_half
    b = ddm_orient(m, 3)
    p = write(tmp_path, "o.json", b.to_dict())
    out = json.loads(run(capsys, "dual", p)[1])
    assert "dir" in out


def test_bad_input_exit_code(capsys, tmp_path):
    assert main(["girth", str(tmp_path / "missing.json")]) == 2
    p = write(tmp_path, "bad.json", {"alpha": [0], "sigma": [0]})
    assert main(["girth", str(p)]) == 2


def test_generate(capsys):
    code, out = run(capsys, "generate", "--d", 3, "--max-faces", 8, "--girth", 3, "--count")
    assert int(out) == 1 + 1 + 3 + 13
    code, out = run(capsys, "generate", "--d", 4, "--max-faces", 3)
    maps = [json.loads(line) for line in out.splitlines()]
    assert len(maps) == len(generate_d_angulations(4, 3))


def test_generator_matches_closed_forms():
    by_faces = {}
    for m in girth_d_maps(3, 7):
        by_faces[m.n_faces - 1] = by_faces.get(m.n_faces - 1, 0) + 1
    for k in range(4):
        assert by_faces.get(2 * k + 1, 0) == brown_t(3, k)
    by_faces = {}
    for m in girth_d_maps(4, 4):
        by_faces[m.n_faces - 1] = by_faces.get(m.n_faces - 1, 0) + 1
    for k in range(4):
        assert by_faces.get(k + 1, 0) == brown_q(2, k)


def test_low_girth_generated_for_each_d():
    for d in (3, 4, 5):
        assert any(girth(m) is not INFINITE and girth(m) < d for m in generate_d_angulations(d, 3))


def test_verify_3_3_4():
    records = verify(3, 3, 4)
    assert all_passed(records)
    suites = [r["suite"] for r in records]
    assert suites == sorted(suites) and "census" in suites and "annular" in suites
    census = next(r for r in records if r["suite"] == "census")
    assert census["series"] == census["maps"] == census["mobiles"] == [0, 1, 0, 1, 0]


def test_verify_5_6_2():
    records = verify(5, 6, 2)
    assert all_passed(records)
    annular = next(r for r in records if r["suite"] == "annular")
    assert annular["series"] == annular["mobiles"] == [0, 6, 0]


def test_verify_is_deterministic():
    assert report_lines(verify(4, 4, 2)) == report_lines(verify(4, 4, 2))


def test_verify_cli(capsys):
    code, out = run(capsys, "verify", "--d", 3, "--n-max", 3)
    assert code == 0
    assert all(json.loads(line)["status"] == "pass" for line in out.splitlines())


def _fixture():
    b = ddm_orient(tetrahedron().face_rooted(), 3)
    return {"d": 3, "orientation": b.to_dict()}


def test_fixture_ok():
    assert check_orientation_fixture(_fixture())["status"] == "pass"


def test_corrupted_fixture_names_invariant(capsys, tmp_path):
    data = _fixture()
    w = data["orientation"]["weight"]
    i = next(i for i, x in enumerate(w) if x == 1 and data["orientation"]["dir"][i] == "in")
    w[i] = 2
    rec = check_orientation_fixture(data)
    assert rec["status"] == "fail"
    assert any(f.startswith("vertex_weight") for f in rec["failures"])
    assert any(f.startswith("edge_weight") for f in rec["failures"])
    p = write(tmp_path, "bad.json", data)
    code, out = run(capsys, "verify", "--fixture", p)
    assert code == 1 and "vertex_weight" in out


def test_fixture_direction_mismatch():
    data = _fixture()
    dirs = data["orientation"]["dir"]
    i = dirs.index("in")
    dirs[i] = "out"
    rec = check_orientation_fixture(data)
    assert any(f.startswith("consistency") for f in rec["failures"])


def test_svg_deterministic():
    b = ddm_orient(tetrahedron().face_rooted(), 3)
    assert map_svg(b.map, b.ingoing) == map_svg(b.map, b.ingoing)
    t = phi_minus(b)
    assert mobile_svg(t) == mobile_svg(t)
    assert mobile_svg(t).count("<circle") == len(t.vertices)


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "dangul", "series", "--d", "3", "--order", "3"],
                         capture_output=True, text=True, check=True).stdout
    assert out.split() == ["0", "1", "0", "1"]
