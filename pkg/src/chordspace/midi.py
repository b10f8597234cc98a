"""Minimal type-0 Standard MIDI File writer for auditioning voicings."""

from __future__ import annotations

import dataclasses
import struct
import typing

from chordspace.pitch_space import TriadPlacement


@dataclasses.dataclass(frozen=True)
class MidiConfig:

	base_note: int = 48  # MIDI note for index 0 (C3)
	ticks_per_quarter: int = 480
	velocity: int = 80
	chord_ticks: int = 480
	channel: int = 0
	tempo_bpm: float = 120.0

	def __post_init__ (self) -> None:
		if not 0 <= self.channel <= 15:
			raise ValueError(f"channel must be 0..15, got {self.channel}")
		if not 1 <= self.velocity <= 127:
			raise ValueError(f"velocity must be 1..127, got {self.velocity}")
		if not 0 < self.ticks_per_quarter < 0x8000:
			raise ValueError(f"ticks_per_quarter out of range: {self.ticks_per_quarter}")
		if self.chord_ticks <= 0 or self.tempo_bpm <= 0:
			raise ValueError("chord_ticks and tempo_bpm must be positive")


def encode_vlq (value: int) -> bytes:

	"""MIDI variable-length quantity, 7 bits per byte, high bit = continue."""

	if value < 0:
		raise ValueError("VLQ value must be non-negative")
	out = [value & 0x7F]
	value >>= 7
	while value:
		out.append(0x80 | (value & 0x7F))
		value >>= 7
	return bytes(reversed(out))


def midi_notes (placement: TriadPlacement, config: MidiConfig) -> typing.List[int]:
	notes = [config.base_note + n for n in placement]
	for n in notes:
		if not 0 <= n <= 127:
			raise ValueError(f"{placement} maps to MIDI note {n}, outside 0..127 with base_note {config.base_note}")
	return notes


def write_smf (placements: typing.Sequence[TriadPlacement], config: MidiConfig = MidiConfig()) -> bytes:

	"""Render block chords, one per ``config.chord_ticks``, as SMF bytes."""

	note_on = 0x90 | config.channel
	note_off = 0x80 | config.channel
	tempo = round(60_000_000 / config.tempo_bpm)

	track = bytearray()
	track += b"\x00\xff\x51\x03" + tempo.to_bytes(3, "big")
	for p in placements:
		notes = midi_notes(p, config)
		for n in notes:
			track += b"\x00" + bytes((note_on, n, config.velocity))
		for i, n in enumerate(notes):
			delta = config.chord_ticks if i == 0 else 0
			track += encode_vlq(delta) + bytes((note_off, n, 0))
	track += b"\x00\xff\x2f\x00"

	header = b"MThd" + struct.pack(">IHHH", 6, 0, 1, config.ticks_per_quarter)
	return header + b"MTrk" + struct.pack(">I", len(track)) + bytes(track)
