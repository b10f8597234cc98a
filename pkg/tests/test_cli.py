import csv
import io
import json
import subprocess
import sys

import pytest

from chordspace import formats
from chordspace.cli import NumeralError, main, parse_chords


def run(*args):
	return subprocess.run([sys.executable, "-m", "chordspace", *args], capture_output=True, text=True)


def call(capsys, *args):
	code = main(list(args))
	return code, capsys.readouterr().out


@pytest.mark.parametrize("text, degrees", [
	("I,IV,V,I", [1, 4, 5, 1]),
	("ii, V ,i", [2, 5, 1]),
	("1,6,4,5", [1, 6, 4, 5]),
	("vii,VI,3", [7, 6, 3]),
])
def test_parse_chords(text, degrees):
	assert parse_chords(text) == degrees


@pytest.mark.parametrize("text, message", [
	("VIII", "unknown numeral 'VIII' at position 1"),
	("I,IV,X", "unknown numeral 'X' at position 3"),
	("I,,V", "unknown numeral '' at position 2"),
	("0", "unknown numeral '0' at position 1"),
])
def test_parse_chords_errors(text, message):
	with pytest.raises(NumeralError, match=message):
		parse_chords(text)


def test_table_csv(capsys):
	code, out = call(capsys, "table", "--key", "C", "--kind", "major", "--set", "2", "--format", "csv")
	assert code == 0
	rows = list(csv.reader(io.StringIO(out)))[1:]
	assert len(rows) == 7
	assert [float(r[-1]) for r in rows] == pytest.approx([0, 3, 1, 2.23607, 2.23607, 2, 3], abs=1e-5)


def test_table_text_a_minor(capsys):
	code, out = call(capsys, "table", "--key", "A", "--kind", "minor", "--set", "2")
	assert code == 0
	assert "B diminished" in out and "(2,5,11)" in out


def test_table_json_round_trip(capsys, tmp_path):
	target = tmp_path / "t.json"
	assert main(["table", "--key", "C", "--format", "json", "--out", str(target)]) == 0
	table = formats.parse_table_json(target.read_text())
	assert formats.render_table_json(table) == target.read_text()


@pytest.mark.parametrize("kind, row", [
	("major", "Leading Tone Diminished Tonic Minor 3rd The flat 5th"),
	("minor", "The seventh Major Tonic Major 3rd Dominant"),
])
def test_inversions(capsys, kind, row):
	code, out = call(capsys, "inversions", "--kind", kind)
	assert code == 0
	assert row in [" ".join(line.split()) for line in out.splitlines()]


def test_progression_anchor_json(capsys):
	code, out = call(capsys, "progression", "--key", "C", "--kind", "major", "--chords", "I,IV,V,I", "--mode", "anchor", "--format", "json")
	assert code == 0
	assert [c["placement"] for c in json.loads(out)["chords"]] == [[4, 7, 12], [5, 9, 12], [2, 7, 11], [4, 7, 12]]


def test_progression_midi(tmp_path):
	target = tmp_path / "i.mid"
	assert main(["progression", "--key", "C", "--kind", "major", "--chords", "I", "--format", "midi", "--out", str(target)]) == 0
	data = target.read_bytes()
	assert data[:14] == bytes.fromhex("4D546864000000060000000101E0")
	for note in (52, 55, 60):
		assert bytes((0x90, note, 80)) in data
	assert data.endswith(b"\x00\xff\x2f\x00")


def test_verify_json(capsys):
	code, out = call(capsys, "verify", "--format", "json")
	assert code == 0
	data = json.loads(out)
	assert data["cases"] == 504 and data["mismatches"] == [] and data["ties"] == []


def test_verify_text(capsys):
	code, out = call(capsys, "verify", "--window", "36")
	assert code == 0
	assert out.startswith("504 cases, 0 mismatches, cumulative = 13.47214")


def test_verify_failure_exit_code(capsys, monkeypatch):
	from chordspace import cli, oracle

	real = oracle.verify_all

	def broken(window):
		summary = real(window)
		summary.mismatches.append("forced")
		return summary

	monkeypatch.setattr(cli, "verify_all", broken)
	code, out = call(capsys, "verify")
	assert code == 1 and "MISMATCH forced" in out


# -- end-to-end, separate process ---------------------------------------------


def test_e2e_bad_numeral():
	proc = run("progression", "--chords", "VIII")
	assert proc.returncode == 2
	assert "unknown numeral 'VIII' at position 1" in proc.stderr


def test_e2e_bad_key():
	proc = run("table", "--key", "H")
	assert proc.returncode == 2
	assert "'H'" in proc.stderr


def test_e2e_bad_format():
	proc = run("table", "--format", "xml")
	assert proc.returncode == 2
	proc = run("table", "--format", "midi", "--out", "x.mid")
	assert proc.returncode == 2


def test_e2e_midi_needs_out():
	proc = run("progression", "--chords", "I", "--format", "midi")
	assert proc.returncode == 2


def test_e2e_success():
	proc = run("table", "--key", "Bb", "--kind", "major", "--set", "1", "--format", "csv")
	assert proc.returncode == 0
	assert proc.stdout.splitlines()[1].startswith("1,A# major,major,Tonic")
