from __future__ import annotations

import pytest

from orthoradial.cli import ENV_MAX_CYCLES, main
from orthoradial.io import parse_drawing, parse_instance_file
from orthoradial.rectangulation import is_rectangular


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_validate_valid(capsys, fixture_dir):
    code, out, _ = run(capsys, "validate", "-i", str(fixture_dir / "annulus.ori"))
    assert code == 0
    assert out.startswith("status: valid")


def test_validate_invalid_prints_certificate(capsys, fixture_dir):
    code, out, _ = run(capsys, "validate", "-i", str(fixture_dir / "spiral.ori"))
    assert code == 1
    assert "monotone-cycle:" in out and "labels:" in out


def test_parse_errors_exit_two(capsys, tmp_path, fixture_dir):
    bad = tmp_path / "bad.ori"
    bad.write_text((fixture_dir / "triangle.ori").read_text().replace("angle t01+ 180", "angle t01+ 45"))
    code, _, err = run(capsys, "validate", "-i", str(bad))
    assert code == 2 and "line" in err
    code, _, _ = run(capsys, "validate", "-i", str(tmp_path / "missing.ori"))
    assert code == 2
    code, _, _ = run(capsys, "frobnicate")
    assert code == 2


def test_cycle_cap_is_inconclusive(capsys, fixture_dir):
    code, out, _ = run(capsys, "validate", "--max-cycles", "2", "-i", str(fixture_dir / "annulus.ori"))
    assert code == 3
    assert "inconclusive" in out


def test_env_var_sets_cycle_cap(capsys, monkeypatch, fixture_dir):
    path = str(fixture_dir / "annulus.ori")
    monkeypatch.setenv(ENV_MAX_CYCLES, "2")
    assert run(capsys, "validate", "-i", path)[0] == 3
    # the flag wins over the environment
    assert run(capsys, "validate", "--max-cycles", "0", "-i", path)[0] == 0
    monkeypatch.setenv(ENV_MAX_CYCLES, "0")
    assert run(capsys, "validate", "-i", path)[0] == 0


def test_rectangulate(capsys, fixture_dir):
    code, out, _ = run(capsys, "rectangulate", "-i", str(fixture_dir / "l-shape.ori"))
    assert code == 0
    inst = parse_instance_file(out)
    assert is_rectangular(inst.rep)
    assert inst.provenance.added_edges


def test_rectangulate_refuses_invalid(capsys, fixture_dir):
    code, out, err = run(capsys, "rectangulate", "-i", str(fixture_dir / "spiral.ori"))
    assert code == 1 and not out and "monotone-cycle" in err


def test_draw_and_render(capsys, tmp_path, fixture_dir):
    target = tmp_path / "triangle.ord"
    code, _, _ = run(capsys, "draw", "-i", str(fixture_dir / "triangle.ori"), "-o", str(target))
    assert code == 0
    d = parse_drawing(target.read_text())
    assert d.circumference == 3
    for view in ("polar", "unrolled"):
        code, out, _ = run(capsys, "render", "-i", str(target), "--view", view)
        assert code == 0 and out.count('class="edge"') == 3
    code, out, _ = run(capsys, "draw", "--view", "polar", "-i", str(fixture_dir / "annulus.ori"))
    assert code == 0 and out.startswith("<svg")


def test_draw_refuses_invalid(capsys, fixture_dir):
    assert run(capsys, "draw", "-i", str(fixture_dir / "spiral-in-ring.ori"))[0] == 1


@pytest.mark.parametrize("name", ["triangle", "annulus", "spiral"])
def test_oracle_on_file(capsys, fixture_dir, name):
    code, out, _ = run(capsys, "oracle", "-i", str(fixture_dir / f"{name}.ori"))
    assert code == 0
    assert "counterexamples: 0" in out


def test_oracle_fuzz(capsys):
    code, out, _ = run(capsys, "oracle", "--seed", "3", "--count", "5")
    assert code == 0
    assert "instances: 5" in out and "counterexamples: 0" in out


def test_stdin(capsys, monkeypatch, fixture_dir):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO((fixture_dir / "triangle.ori").read_text()))
    assert run(capsys, "validate")[0] == 0
