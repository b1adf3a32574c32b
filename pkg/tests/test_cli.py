import io
import subprocess
import sys

import numpy as np
import pytest

from solidangle import cli
from solidangle.cli import format_value, main, read_polygon_file, sweep_rows
from solidangle.cones import cones_intersection
from solidangle.exceptions import QuadratureError

SQRT3 = np.sqrt(3.0)


def run(argv):
    out = io.StringIO()
    code = main(argv, out=out)
    return code, out.getvalue()


def write_vectors(path, vectors):
    path.write_text("".join(" ".join(repr(float(x)) for x in v) + "\n" for v in vectors))
    return str(path)


@pytest.fixture
def cube_file(tmp_path, cube_face):
    return write_vectors(tmp_path / "cube.txt", cube_face)


def test_polycone_cube(cube_file):
    assert run(["polycone", cube_file]) == (0, "2.094395102393\n")


def test_polycone_octant(tmp_path, octant):
    path = write_vectors(tmp_path / "octant.txt", octant)
    assert run(["polycone", path]) == (0, "1.570796326795\n")


def test_polycone_comments_and_rays(tmp_path):
    path = tmp_path / "raw.txt"
    path.write_text("# raw cube corners\n1 -1 1\n\n1 1 1\n-1 1 1\n-1 -1 1\n")
    assert run(["polycone", "--rays", str(path)]) == (0, "2.094395102393\n")
    code, _ = run(["polycone", str(path)])
    assert code == 2


def test_polycone_two_vertices(tmp_path, capsys):
    path = write_vectors(tmp_path / "two.txt", np.eye(3)[:2])
    code, out = run(["polycone", path])
    assert code == 2 and out == ""
    assert "at least 3" in capsys.readouterr().err


def test_polycone_bad_line(tmp_path, capsys):
    path = tmp_path / "bad.txt"
    path.write_text("1 0 0\n0 1 zero\n0 0 1\n")
    assert run(["polycone", str(path)])[0] == 2
    assert "bad.txt:2" in capsys.readouterr().err


def test_polycone_missing_file(tmp_path):
    assert run(["polycone", str(tmp_path / "nope.txt")])[0] == 2


def test_read_polygon_file(cube_file, cube_face):
    assert np.allclose(read_polygon_file(cube_file), cube_face)


@pytest.mark.parametrize("argv, expected", [
    (["--theta1", "1.5707963267948966", "--theta2", "1.5707963267948966", "--alpha", "1"],
     "4.283185307180"),
    (["--theta1", "0.3", "--theta2", "0.5", "--alpha", "1"], "0.000000000000"),
    (["--theta1", "90", "--theta2", "90", "--alpha", "57.29577951308232", "--degrees"],
     "4.283185307180"),
])
def test_intersect(argv, expected):
    code, out = run(["intersect", *argv])
    assert code == 0 and out.strip() == expected


def test_intersect_verbose():
    code, out = run(["intersect", "--theta1", "0.6", "--theta2", "0.9", "--alpha", "0.8",
                     "--verbose"])
    fields = dict(line.split(" ", 1) for line in out.splitlines())
    assert code == 0 and fields["branch"] == "general"
    inter = float(fields["intersection"])
    assert inter == pytest.approx(cones_intersection(0.6, 0.9, 0.8), rel=1e-12)
    assert float(fields["union"]) == pytest.approx(
        float(fields["omega1"]) + float(fields["omega2"]) - inter, rel=1e-12)


@pytest.mark.parametrize("argv", [
    ["--theta1", "0", "--theta2", "0.5", "--alpha", "1"],
    ["--theta1", "0.5", "--theta2", "0.5", "--alpha", "4"],
])
def test_intersect_out_of_range(argv):
    assert run(["intersect", *argv])[0] == 2


def test_usage_error_exits_2():
    with pytest.raises(SystemExit) as exc:
        main(["intersect", "--theta1", "1"], out=io.StringIO())
    assert exc.value.code == 2


def test_format_round_trip(rng):
    for x in np.concatenate([rng.uniform(0, 4 * np.pi, 200), [1e-9, 3e-300, 12.566370614359172]]):
        assert abs(float(format_value(x)) - x) <= 1e-11 * abs(x)


def sweep_csv(seed=0, threads=1):
    code, out = run(["sweep", "--theta1", "0.8", "--theta2", "1.1", "--steps", "9",
                     "--mc-samples", "20000", "--seed", str(seed), "--threads", str(threads)])
    assert code == 0
    return out


def test_sweep_shape_and_endpoints():
    lines = sweep_csv().splitlines()
    assert lines[0] == "alpha,omega_exact,omega_linear,omega_mc,mc_stderr"
    rows = np.array([[float(x) for x in line.split(",")] for line in lines[1:]])
    assert rows.shape == (9, 5)
    assert rows[0, 0] == 0.0 and rows[-1, 0] == pytest.approx(np.pi)
    assert rows[0, 1] == pytest.approx(2 * np.pi * (1 - np.cos(0.8)))
    assert rows[-1, 1] == 0.0
    assert np.all(np.abs(rows[:, 1] - rows[:, 3]) <= 4 * rows[:, 4])


def test_sweep_reproducible():
    assert sweep_csv(seed=3) == sweep_csv(seed=3)
    assert sweep_csv(seed=3, threads=2) == sweep_csv(seed=3, threads=2)
    assert sweep_csv(seed=3) != sweep_csv(seed=4)


def test_sweep_differs_from_linear():
    rows = sweep_rows(0.8, 1.1, 17, 1000, seed=0)
    assert max(abs(r.omega_exact - r.omega_linear) for r in rows) > 0.01


def test_sweep_metadata_on_stderr(capsys):
    sweep_csv()
    err = capsys.readouterr().err
    assert "generator=numpy PCG64" in err and "seed=0" in err


def test_bench():
    code, out = run(["bench", "--vertices", "2000", "--reps", "2"])
    fields = dict(line.split(" ", 1) for line in out.splitlines())
    assert code == 0
    assert float(fields["difference"]) < 1e-12
    assert float(fields["product_seconds"]) > 0


def test_curve_circle():
    code, out = run(["curve-circle", "--theta", "1.0"])
    fields = dict(line.split(" ", 1) for line in out.splitlines())
    assert code == 0
    assert float(fields["abs_error"]) < 1e-9
    assert fields["closed_form"] == format_value(2 * np.pi * (1 - np.cos(1.0)))


def test_curve_circle_bad_tolerance():
    assert run(["curve-circle", "--theta", "1.0", "--tol", "-1"])[0] == 2


def test_quadrature_failure_exits_3(monkeypatch):
    def fail(*args, **kwargs):
        raise QuadratureError("did not converge")
    monkeypatch.setattr(cli, "curve_solid_angle", fail)
    assert run(["curve-circle", "--theta", "1.0"])[0] == 3


def test_module_entry_point(cube_file):
    proc = subprocess.run([sys.executable, "-m", "solidangle", "polycone", cube_file],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout == "2.094395102393\n"
