"""Text, CSV and JSON renderings of voicing and inversion tables.

CSV and JSON can be parsed back into a :class:`VoicingTable`.  Printed
distances are rounded to 5 places, so the parsers recompute each distance
from the integer placements and only use the printed value as a
consistency check.
"""

from __future__ import annotations

import csv
import io
import json
import typing

from chordspace.diatonic import DEGREE_LABELS, ScaleKind, build_scale, diatonic_triad, quality_row
from chordspace.optimizer import (
	INVERSIONS,
	VoicingTable,
	inversion_of,
	inversion_set,
	make_table,
	member_label,
)
from chordspace.pitch_space import TriadPlacement, note_name, pitch_class_of

CSV_HEADER = ["degree", "chord", "quality", "first_note", "x", "y", "z", "distance"]
PLACES = 5
_TOLERANCE = 0.5 * 10 ** -PLACES + 1e-12


class TableFormatError(ValueError):
	"""Raised when serialized table data is inconsistent or malformed."""


def fmt_distance (d: float) -> str:
	return f"{d:.{PLACES}f}"


def _grid (header: typing.Sequence[str], rows: typing.Sequence[typing.Sequence[str]]) -> str:
	widths = [max(len(str(c)) for c in col) for col in zip(header, *rows)]
	lines = ["  ".join(str(c).ljust(w) for c, w in zip(line, widths)).rstrip() for line in [header, *rows]]
	lines.insert(1, "  ".join("-" * w for w in widths))
	return "\n".join(lines)


# -- voicing tables ---------------------------------------------------------


def render_table_text (table: VoicingTable) -> str:
	labels = DEGREE_LABELS[table.scale.kind]
	rows = [
		[labels[r.degree - 1], r.triad.name, r.first_note, str(r.placement), fmt_distance(r.distance)]
		for r in table.rows
	]
	return "\n".join([
		f"{table.scale.name} scale, inversion set {table.choice}",
		f"Location of chord a = {table.anchor}",
		"",
		_grid(["Degree", "Chord of interest (b)", "First note in the inversion", "Closest location to a", "Distance"], rows),
		"",
		f"Cumulative distance: {fmt_distance(table.cumulative)}",
	]) + "\n"


def render_table_csv (table: VoicingTable) -> str:
	buf = io.StringIO()
	writer = csv.writer(buf, lineterminator="\n")
	writer.writerow(CSV_HEADER)
	for r in table.rows:
		writer.writerow([r.degree, r.triad.name, r.triad.quality.value, r.first_note, *r.placement, fmt_distance(r.distance)])
	return buf.getvalue()


def table_to_dict (table: VoicingTable) -> typing.Dict[str, typing.Any]:
	return {
		"key": table.scale.tonic.name,
		"kind": table.scale.kind.value,
		"set": table.choice,
		"anchor": list(table.anchor),
		"rows": [
			{
				"degree": r.degree,
				"chord": r.triad.name,
				"quality": r.triad.quality.value,
				"first_note": r.first_note,
				"placement": list(r.placement),
				"distance": round(r.distance, PLACES),
			}
			for r in table.rows
		],
		"cumulative": round(table.cumulative, PLACES),
	}


def render_table_json (table: VoicingTable) -> str:
	return json.dumps(table_to_dict(table), indent=2) + "\n"


def _check_rows (table: VoicingTable, printed: typing.Sequence[typing.Dict[str, typing.Any]]) -> None:
	if len(printed) != 7:
		raise TableFormatError(f"expected 7 rows, got {len(printed)}")
	for row, data in zip(table.rows, printed):
		if int(data["degree"]) != row.degree:
			raise TableFormatError(f"row {row.degree}: degree {data['degree']!r} out of order")
		for field, expected in (("chord", row.triad.name), ("quality", row.triad.quality.value), ("first_note", row.first_note)):
			if data[field] != expected:
				raise TableFormatError(f"row {row.degree}: {field} {data[field]!r} != {expected!r}")
		if abs(float(data["distance"]) - row.distance) > _TOLERANCE:
			raise TableFormatError(f"row {row.degree}: distance {data['distance']!r} != {row.distance!r}")


def parse_table_json (text: str) -> VoicingTable:
	data = json.loads(text)
	try:
		scale = build_scale(pitch_class_of(data["key"]), ScaleKind.parse(data["kind"]))
		anchor = TriadPlacement(*data["anchor"])
		placements = [TriadPlacement(*row["placement"]) for row in data["rows"]]
		table = make_table(scale, int(data["set"]), anchor, placements)
		if inversion_of(diatonic_triad(scale, 1), anchor) != table.choice:
			raise TableFormatError(f"anchor {anchor} is not inversion set {table.choice}")
		_check_rows(table, data["rows"])
	except (KeyError, TypeError, ValueError) as exc:
		if isinstance(exc, TableFormatError):
			raise
		raise TableFormatError(f"malformed table JSON: {exc}") from exc
	if abs(float(data["cumulative"]) - table.cumulative) > _TOLERANCE:
		raise TableFormatError(f"cumulative {data['cumulative']!r} != {table.cumulative!r}")
	return table


def parse_table_csv (text: str) -> VoicingTable:

	"""Rebuild a table from CSV.

	The key, scale kind and anchor set are read off the tonic row: its chord
	name gives the key and quality, its placement is the anchor.
	"""

	reader = csv.DictReader(io.StringIO(text))
	if reader.fieldnames != CSV_HEADER:
		raise TableFormatError(f"unexpected CSV header {reader.fieldnames!r}")
	rows = list(reader)
	if not rows:
		raise TableFormatError("CSV has no rows")
	try:
		tonic_row = rows[0]
		kind = ScaleKind.parse(tonic_row["quality"])
		scale = build_scale(pitch_class_of(tonic_row["chord"].split()[0]), kind)
		placements = [TriadPlacement(int(r["x"]), int(r["y"]), int(r["z"])) for r in rows]
		anchor = placements[0]
		choice = inversion_of(diatonic_triad(scale, 1), anchor)
		table = make_table(scale, choice, anchor, placements)
		_check_rows(table, rows)
	except (KeyError, IndexError, ValueError) as exc:
		if isinstance(exc, TableFormatError):
			raise
		raise TableFormatError(f"malformed table CSV: {exc}") from exc
	return table


# -- inversion sets ---------------------------------------------------------


def inversion_rows (kind: ScaleKind) -> typing.List[typing.List[str]]:
	columns = [inversion_set(kind, choice) for choice in INVERSIONS]
	labels = DEGREE_LABELS[kind]
	qualities = quality_row(kind)
	return [[labels[i], qualities[i].title, *(col[i] for col in columns)] for i in range(7)]


def render_inversions (kind: ScaleKind, fmt: str) -> str:
	rows = inversion_rows(kind)
	if fmt == "text":
		header = ["Tonic of the chord", "Chord Type"] + [f"First note of inversion - {c}" for c in INVERSIONS]
		return _grid(header, rows) + "\n"
	if fmt == "csv":
		buf = io.StringIO()
		writer = csv.writer(buf, lineterminator="\n")
		writer.writerow(["degree", "degree_name", "chord_type", "inversion_1", "inversion_2", "inversion_3"])
		for degree, row in enumerate(rows, start=1):
			writer.writerow([degree, *row])
		return buf.getvalue()
	if fmt == "json":
		payload = {
			"kind": kind.value,
			"rows": [
				{"degree": degree, "degree_name": row[0], "chord_type": row[1], "first_notes": row[2:]}
				for degree, row in enumerate(rows, start=1)
			],
		}
		return json.dumps(payload, indent=2) + "\n"
	raise ValueError(f"unsupported format {fmt!r}")


# -- progressions -----------------------------------------------------------


def progression_records (key: str, kind: ScaleKind, degrees: typing.Sequence[int], placements: typing.Sequence[TriadPlacement]) -> typing.List[typing.Dict[str, typing.Any]]:
	scale = build_scale(pitch_class_of(key), kind)
	records = []
	for degree, p in zip(degrees, placements):
		triad = diatonic_triad(scale, degree)
		records.append({
			"degree": degree,
			"chord": triad.name,
			"first_note": member_label(triad, inversion_of(triad, p)),
			"placement": list(p),
			"notes": ["{}{}".format(*note_name(n)) for n in p],
		})
	return records


def render_progression (records: typing.Sequence[typing.Dict[str, typing.Any]], fmt: str, header: typing.Dict[str, typing.Any]) -> str:
	if fmt == "json":
		return json.dumps({**header, "chords": list(records)}, indent=2) + "\n"
	if fmt == "csv":
		buf = io.StringIO()
		writer = csv.writer(buf, lineterminator="\n")
		writer.writerow(["index", "degree", "chord", "first_note", "x", "y", "z", "notes"])
		for i, r in enumerate(records, start=1):
			writer.writerow([i, r["degree"], r["chord"], r["first_note"], *r["placement"], " ".join(r["notes"])])
		return buf.getvalue()
	if fmt == "text":
		rows = [
			[str(i), str(r["degree"]), r["chord"], r["first_note"], "({},{},{})".format(*r["placement"]), " ".join(r["notes"])]
			for i, r in enumerate(records, start=1)
		]
		title = f"{header['key']} {header['kind']}, {header['mode']} mode, inversion set {header['set']}"
		return title + "\n\n" + _grid(["#", "Degree", "Chord", "First note", "Placement", "Notes"], rows) + "\n"
	raise ValueError(f"unsupported format {fmt!r}")
