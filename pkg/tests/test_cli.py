import json

import pytest
from pydantic import ValidationError
from typer.testing import CliRunner

from hp0.cli.frames import read_frame
from hp0.cli.main import app
from hp0.cli.report import build_report
from hp0.matroid import FrameError, GaleFrame
from hp0.record import OutputFormat, RunConfig

runner = CliRunner()


@pytest.fixture
def frame_file(tmp_path):
    def write(text: str, name: str = "f.frame"):
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return write


TRI_TEXT = "2 3\n1 0 1\n0 1 1\n"


def test_read_text_and_json(tmp_path):
    text = tmp_path / "tri.frame"
    text.write_text("# triangle\n" + TRI_TEXT)
    doc = tmp_path / "tri.json"
    doc.write_text(json.dumps({"k": 2, "n": 3, "rows": [[1, 0, 1], [0, 1, 1]]}))
    assert read_frame(text) == read_frame(doc) == GaleFrame.from_rows([[1, 0, 1], [0, 1, 1]])


@pytest.mark.parametrize(
    "text, message",
    [
        ("2 3\n1 0 1\n0 x 1\n", "line 3, field 2"),
        ("2 3\n1 0 1\n", "k=2"),
        ("2 3\n1 0 1\n0 1\n", "line 3: expected 3"),
        ("", "empty"),
        ("2\n1 0\n", "header"),
    ],
)
def test_text_parse_errors(tmp_path, text, message):
    path = tmp_path / "bad.frame"
    path.write_text(text)
    with pytest.raises(FrameError, match=message):
        read_frame(path)


def test_json_parse_errors_are_positional(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"k": 1, "n": 2, "rows": [[1, "a"]]}))
    with pytest.raises(FrameError, match=r"rows\[1\]\[2\]"):
        read_frame(path)
    path.write_text(json.dumps({"k": 1, "n": 3, "rows": [[1, 1]]}))
    with pytest.raises(FrameError, match="expected 3"):
        read_frame(path)


def test_missing_file(tmp_path):
    with pytest.raises(FrameError, match="cannot read"):
        read_frame(tmp_path / "nope.frame")


def test_run_config():
    config = RunConfig(input="x.frame", command="hilbert", ordering="3,1,2")
    assert config.ordering == (3, 1, 2)
    assert config.format is OutputFormat.JSON
    frame = config.apply(GaleFrame.from_rows([[1, 0, 1], [0, 1, 1]]))
    assert frame.rows == ((1, 1, 0), (1, 0, 1))
    with pytest.raises(FrameError):
        RunConfig(input="x", command="c", ordering="1,1,2").apply(GaleFrame.from_rows([[1, 0, 1], [0, 1, 1]]))
    with pytest.raises(ValidationError):
        RunConfig(input="x", command="c", d_max=-1)
    with pytest.raises(ValidationError):
        RunConfig(input="x", command="c", ordering="a,b")


def test_hilbert_command(frame_file):
    result = runner.invoke(app, ["hilbert", "--d-max", "3", frame_file(TRI_TEXT)])
    assert result.exit_code == 0, result.output
    assert json.loads(result.stdout)["hilbert"] == [1, 3, 5, 7]


def test_hilbert_tsv_paper_degrees(frame_file):
    result = runner.invoke(
        app, ["hilbert", "--d-max", "2", "--format", "tsv", "--paper-degrees", frame_file(TRI_TEXT)]
    )
    assert result.exit_code == 0
    assert result.stdout.splitlines() == ["0\t1", "2\t3", "4\t5"]


def test_hilbert_rbc(frame_file):
    result = runner.invoke(app, ["hilbert", "--d-max", "3", "--sheaf", "rbc", frame_file(TRI_TEXT)])
    assert json.loads(result.stdout)["hilbert"] == [1, 3, 5, 7]


def test_circuits_identity(frame_file):
    result = runner.invoke(app, ["circuits", frame_file("2 2\n1 0\n0 1\n")])
    assert result.exit_code == 0
    payload = json.loads(result.stdout)
    assert payload["circuits"] == []
    assert payload["kirwan_lines"] == [1, 2]


def test_circuits_ordering(frame_file):
    result = runner.invoke(app, ["circuits", "--ordering", "3,1,2", frame_file(TRI_TEXT)])
    assert json.loads(result.stdout)["circuits"] == [{"coeffs": [1, -1, -1], "support": [1, 2, 3]}]


def test_betti(frame_file):
    result = runner.invoke(app, ["betti", "--d-max", "3", frame_file(TRI_TEXT)])
    assert result.exit_code == 0
    payload = json.loads(result.stdout)
    assert payload["h"] == [1, 1, 0]
    assert payload["broken_circuits"] == [[1, 2]]
    assert payload["ih_betti"] == {"0": 1, "1": 1}
    assert payload["dual_top_h_ok"] is True


def test_degenerate(frame_file):
    result = runner.invoke(app, ["degenerate", "--d-max", "4", frame_file(TRI_TEXT)])
    assert result.exit_code == 0
    payload = json.loads(result.stdout)
    assert payload["degeneration_ok"] is True
    assert [d["initial"] for d in payload["degrees"]] == [0, 0, 1, 3, 6]
    assert payload["containment_ok"] is True
    assert all(d["contains"] for d in payload["degrees"])


def test_fiber_with_lambda(frame_file):
    result = runner.invoke(app, ["fiber", "--d-max", "5", "--lambda", "1,2", frame_file(TRI_TEXT)])
    assert result.exit_code == 0, result.output
    payload = json.loads(result.stdout)
    assert payload["central_fiber"][:3] == [1, 1, 0]
    assert payload["h_poly"] == [1, 1]
    assert payload["fiber_checks"][0]["dim"] == 2


def test_fiber_seeded(frame_file):
    args = ["fiber", "--d-max", "4", "--seed", "3", frame_file(TRI_TEXT)]
    first = runner.invoke(app, args)
    assert first.exit_code == 0
    checks = json.loads(first.stdout)["fiber_checks"]
    assert [c["seed"] for c in checks] == [3, 4, 5]
    assert all(c["dim"] == 2 for c in checks)
    assert runner.invoke(app, args).stdout == first.stdout


def test_fiber_bad_lambda(frame_file):
    result = runner.invoke(app, ["fiber", "--d-max", "3", "--lambda", "1", frame_file(TRI_TEXT)])
    assert result.exit_code == 1


def test_flats(frame_file):
    result = runner.invoke(app, ["flats", frame_file(TRI_TEXT)])
    payload = json.loads(result.stdout)
    assert [f["flat"] for f in payload["flats"]] == ["{}", "{1}", "{2}", "{3}", "{1,2,3}"]
    assert payload["mode"] == "full"
    assert len(payload["flats"][-1]["open"]) == 5


def test_sheaf(frame_file):
    result = runner.invoke(app, ["sheaf", "--d-max", "4", "--sheaf", "rbc", frame_file(TRI_TEXT)])
    assert result.exit_code == 0
    assert '"flabby_ok": true' in result.stdout
    assert '"{1,2,3}": [\n      1,\n      3,\n      5' in result.stdout


def test_report_u13(frame_file):
    result = runner.invoke(app, ["report", "--d-max", "4", frame_file("1 3\n1 1 1\n", "u13.frame")])
    assert result.exit_code == 0, result.output
    payload = json.loads(result.stdout)
    assert payload["ok"] is True
    assert payload["degeneration_ok"] is True
    assert payload["containment_ok"] is True
    assert payload["h"] == [1, 0]
    assert [c["dim"] for c in payload["fiber_checks"]] == [1, 1, 1]
    assert "lambda" in payload["fiber_checks"][0]
    assert payload["oracle_ok"] is True
    assert payload["mes"]["mode"] == "full"


def test_report_is_reproducible(frame_file):
    path = frame_file(TRI_TEXT)
    args = ["report", "--d-max", "3", "--seed", "9", path]
    assert runner.invoke(app, args).stdout == runner.invoke(app, args).stdout


def test_report_with_loops():
    frame = GaleFrame.from_rows([[1, 1, 0]])
    report = build_report(frame, RunConfig(input="l.frame", command="report", d_max=3), show_progress=False)
    assert report.ok
    assert report.hilbert == [0, 0, 0, 0]
    assert report.h == []
    assert report.oracle == [0, 0, 0, 0]
    assert report.mes.applicable is False


@pytest.mark.parametrize(
    "text, args, needle",
    [
        ("2 3\n1 0 1\n0 1 2\n", [], "not totally unimodular"),
        ("2 3\n1 0 1\n0 1 z\n", [], "line 3"),
        (TRI_TEXT, ["--ordering", "1,2,2"], "permutation"),
        (TRI_TEXT, ["--d-max", "-1"], "d_max"),
    ],
)
def test_input_errors_exit_1(frame_file, text, args, needle):
    result = runner.invoke(app, ["hilbert", *args, frame_file(text)])
    assert result.exit_code == 1
    assert needle in result.output
