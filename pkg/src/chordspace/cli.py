"""Command-line entry point.

Subcommands: ``table``, ``inversions``, ``progression``, ``verify``.
Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
import typing

from chordspace import formats
from chordspace.diatonic import ScaleKind, build_scale
from chordspace.midi import MidiConfig, write_smf
from chordspace.optimizer import CUMULATIVE_CONSTANT, DEFAULT_SET, ProgressionMode, ProgressionSpec, voice_progression, voicing_table
from chordspace.oracle import DEFAULT_WINDOW, verify_all
from chordspace.pitch_space import InvalidNoteError, pitch_class_of

ROMAN = {"I": 1, "II": 2, "III": 3, "IV": 4, "V": 5, "VI": 6, "VII": 7}


class NumeralError(ValueError):
	pass


def parse_chords (text: str) -> typing.List[int]:

	"""Parse ``"I,IV,V"`` or ``"1,4,5"`` (mixed, case-insensitive) into degrees."""

	degrees = []
	for position, raw in enumerate(text.split(","), start=1):
		token = raw.strip()
		if token.isdigit() and 1 <= int(token) <= 7:
			degrees.append(int(token))
		elif token.upper() in ROMAN:
			degrees.append(ROMAN[token.upper()])
		else:
			raise NumeralError(f"unknown numeral {token!r} at position {position}")
	return degrees


def _key (text: str) -> str:
	try:
		return pitch_class_of(text).name
	except InvalidNoteError as exc:
		raise argparse.ArgumentTypeError(str(exc)) from exc


def _kind (text: str) -> ScaleKind:
	try:
		return ScaleKind.parse(text)
	except ValueError as exc:
		raise argparse.ArgumentTypeError(str(exc)) from exc


def _window (text: str) -> int:
	value = int(text)
	if value < 24:
		raise argparse.ArgumentTypeError(f"window must be >= 24, got {value}")
	return value


def build_parser () -> argparse.ArgumentParser:
	output = argparse.ArgumentParser(add_help=False)
	output.add_argument("--format", choices=["text", "csv", "json", "midi"], default="text")
	output.add_argument("--out", help="output path (default stdout; required for midi)")

	key = argparse.ArgumentParser(add_help=False)
	key.add_argument("--key", type=_key, default="C", help="tonic, e.g. C, F#, Bb")
	key.add_argument("--kind", type=_kind, default=ScaleKind.MAJOR, help="major or minor (natural)")
	key.add_argument("--set", type=int, choices=[1, 2, 3], default=DEFAULT_SET, dest="anchor_set",
		help="tonic-triad inversion: 1 root, 2 third, 3 fifth lowest")

	parser = argparse.ArgumentParser(prog="chordspace", description="Minimum-movement triad inversions.")
	sub = parser.add_subparsers(dest="command", required=True)

	table = sub.add_parser("table", parents=[key, output], help="voicing table for one key and anchor set")

	inv = sub.add_parser("inversions", parents=[output], help="all three inversion sets for a scale kind")
	inv.add_argument("--kind", type=_kind, default=ScaleKind.MAJOR)

	prog = sub.add_parser("progression", parents=[key, output], help="voice a chord progression")
	prog.add_argument("--chords", required=True, help="comma-separated numerals (I-VII) or degrees (1-7)")
	prog.add_argument("--mode", choices=[m.value for m in ProgressionMode], default=ProgressionMode.ANCHOR.value)
	prog.add_argument("--base-note", type=int, default=MidiConfig.base_note)
	prog.add_argument("--velocity", type=int, default=MidiConfig.velocity)
	prog.add_argument("--tempo", type=float, default=MidiConfig.tempo_bpm)

	ver = sub.add_parser("verify", parents=[output], help="brute-force check of every key, kind and set")
	ver.add_argument("--window", type=_window, default=DEFAULT_WINDOW)

	for p in (table, inv, prog, ver):
		p.set_defaults(subparser=p)
	return parser


def _emit (data: typing.Union[str, bytes], out: typing.Optional[str]) -> None:
	if out is None:
		if isinstance(data, bytes):
			sys.stdout.buffer.write(data)
		else:
			sys.stdout.write(data)
		return
	mode = "wb" if isinstance(data, bytes) else "w"
	with open(out, mode) as fh:
		fh.write(data)


def _verify_text (summary) -> str:
	lines = [f"{summary.cases} cases, {len(summary.mismatches)} mismatches, cumulative = {CUMULATIVE_CONSTANT:.5f}"]
	for kind, values in summary.cumulative.items():
		spread = max(abs(v - CUMULATIVE_CONSTANT) for v in values)
		lines.append(f"  {kind}: {len(values)} tables, max |cumulative - {CUMULATIVE_CONSTANT:.5f}| = {spread:.1e}")
	lines.append(f"  ties: {len(summary.ties)}")
	for r in summary.ties:
		lines.append(f"    {r.case}: " + " ".join(str(p) for p in r.optima))
	for m in summary.mismatches:
		lines.append(f"  MISMATCH {m}")
	return "\n".join(lines) + "\n"


def main (argv: typing.Optional[typing.Sequence[str]] = None) -> int:
	parser = build_parser()
	args = parser.parse_args(argv)
	fmt = args.format

	if fmt == "midi":
		if args.command != "progression":
			args.subparser.error("--format midi is only valid for 'progression'")
		if not args.out:
			args.subparser.error("--format midi requires --out")

	if args.command == "table":
		table = voicing_table(build_scale(pitch_class_of(args.key), args.kind), args.anchor_set)
		render = {"text": formats.render_table_text, "csv": formats.render_table_csv, "json": formats.render_table_json}
		_emit(render[fmt](table), args.out)
		return 0

	if args.command == "inversions":
		_emit(formats.render_inversions(args.kind, fmt), args.out)
		return 0

	if args.command == "progression":
		try:
			degrees = parse_chords(args.chords)
		except NumeralError as exc:
			args.subparser.error(str(exc))
		spec = ProgressionSpec(pitch_class_of(args.key), args.kind, tuple(degrees), ProgressionMode(args.mode))
		placements = voice_progression(spec, args.anchor_set)
		if fmt == "midi":
			try:
				config = MidiConfig(base_note=args.base_note, velocity=args.velocity, tempo_bpm=args.tempo)
				data = write_smf(placements, config)
			except ValueError as exc:
				args.subparser.error(str(exc))
			_emit(data, args.out)
			return 0
		records = formats.progression_records(args.key, args.kind, degrees, placements)
		header = {"key": args.key, "kind": args.kind.value, "set": args.anchor_set, "mode": args.mode}
		_emit(formats.render_progression(records, fmt, header), args.out)
		return 0

	summary = verify_all(args.window)
	if fmt == "json":
		_emit(json.dumps(summary.to_dict(), indent=2) + "\n", args.out)
	elif fmt == "csv":
		rows = ["tonic,kind,set,degree,x,y,z,distance,tie_count"]
		for r in summary.reports:
			c = r.case
			rows.append(f"{c.tonic},{c.kind},{c.anchor_set},{c.degree},{r.optima[0].x},{r.optima[0].y},{r.optima[0].z},{formats.fmt_distance(r.distance)},{r.tie_count}")
		_emit("\n".join(rows) + "\n", args.out)
	else:
		_emit(_verify_text(summary), args.out)
	return 0 if summary.ok else 1


if __name__ == "__main__":
	sys.exit(main())
