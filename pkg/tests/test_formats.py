import csv
import io
import json

import pytest

from chordspace import formats
from chordspace.diatonic import ScaleKind, build_scale
from chordspace.optimizer import voicing_table
from chordspace.pitch_space import PitchClass, pitch_class_of

ALL_CASES = [(t, k, s) for k in ScaleKind for t in range(12) for s in (1, 2, 3)]


def table(key="C", kind=ScaleKind.MAJOR, choice=2):
	return voicing_table(build_scale(pitch_class_of(key), kind), choice)


@pytest.mark.parametrize("tonic, kind, choice", ALL_CASES)
def test_csv_round_trip(tonic, kind, choice):
	t = voicing_table(build_scale(PitchClass(tonic), kind), choice)
	assert formats.parse_table_csv(formats.render_table_csv(t)) == t


@pytest.mark.parametrize("tonic, kind, choice", ALL_CASES)
def test_json_round_trip(tonic, kind, choice):
	t = voicing_table(build_scale(PitchClass(tonic), kind), choice)
	assert formats.parse_table_json(formats.render_table_json(t)) == t


def test_csv_layout():
	rows = list(csv.reader(io.StringIO(formats.render_table_csv(table()))))
	assert rows[0] == formats.CSV_HEADER
	assert rows[2] == ["2", "D minor", "minor", "Minor 3rd", "5", "9", "14", "3.00000"]
	assert [r[-1] for r in rows[1:]] == ["0.00000", "3.00000", "1.00000", "2.23607", "2.23607", "2.00000", "3.00000"]


def test_json_schema():
	data = json.loads(formats.render_table_json(table("A", ScaleKind.NATURAL_MINOR)))
	assert set(data) == {"key", "kind", "set", "anchor", "rows", "cumulative"}
	assert data["key"] == "A" and data["kind"] == "minor" and data["set"] == 2
	assert data["anchor"] == [0, 4, 9]
	assert set(data["rows"][0]) == {"degree", "chord", "quality", "first_note", "placement", "distance"}
	assert data["rows"][5]["placement"] == [0, 5, 9]
	assert data["cumulative"] == 13.47214


def test_json_rejects_tampered_placement():
	data = json.loads(formats.render_table_json(table()))
	data["rows"][1]["placement"] = [2, 5, 9]
	with pytest.raises(formats.TableFormatError):
		formats.parse_table_json(json.dumps(data))


def test_csv_rejects_wrong_distance():
	text = formats.render_table_csv(table()).replace("2,D minor,minor,Minor 3rd,5,9,14,3.00000", "2,D minor,minor,Minor 3rd,5,9,14,3.10000")
	with pytest.raises(formats.TableFormatError, match="row 2"):
		formats.parse_table_csv(text)


def test_csv_rejects_bad_header():
	with pytest.raises(formats.TableFormatError):
		formats.parse_table_csv("a,b\n1,2\n")


def test_text_table_layout():
	text = formats.render_table_text(table())
	assert "Location of chord a = (4,7,12)" in text
	assert "Leading Tone  B diminished" in text
	assert text.rstrip().endswith("Cumulative distance: 13.47214")


def test_distance_rounding_is_not_truncation():
	assert formats.fmt_distance(5 ** 0.5) == "2.23607"


@pytest.mark.parametrize("fmt", ["text", "csv", "json"])
def test_inversions_have_three_columns(fmt):
	out = formats.render_inversions(ScaleKind.MAJOR, fmt)
	if fmt == "json":
		assert all(len(r["first_notes"]) == 3 for r in json.loads(out)["rows"])
	elif fmt == "csv":
		rows = list(csv.reader(io.StringIO(out)))
		assert len(rows) == 8 and all(len(r) == 6 for r in rows)
	else:
		assert "First note of inversion - 3" in out


def test_progression_records():
	from chordspace.pitch_space import TriadPlacement
	records = formats.progression_records("C", ScaleKind.MAJOR, [1, 5], [TriadPlacement(4, 7, 12), TriadPlacement(-1, 2, 7)])
	assert records[0]["notes"] == ["E0", "G0", "C1"]
	assert records[1]["notes"] == ["B-1", "D0", "G0"]
	assert records[1]["first_note"] == "Major 3rd"
