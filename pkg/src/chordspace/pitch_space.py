"""Integer pitch encoding and the Euclidean chord metric.

Pitches are plain integers counting semitones from a reference C (0).  The
lattice is unbounded in both directions; 0..23 is only a convenient window
for printing two octaves.

A triad voicing is a strictly ascending triple of such integers, which makes
it a point in 3-space.  Distances between voicings are ordinary Euclidean
distances, but every comparison in this package goes through the exact
integer :func:`squared_distance`.
"""

from __future__ import annotations

import dataclasses
import math
import typing


class InvalidNoteError(ValueError):
	"""Raised for a note name that is not one of the twelve spellings."""


PITCH_CLASS_NAMES: typing.Tuple[str, ...] = (
	"C", "C#", "D", "D#", "E", "F", "F#", "G", "G#", "A", "A#", "B",
)

_FLATS: typing.Dict[str, str] = {
	"Db": "C#",
	"Eb": "D#",
	"Gb": "F#",
	"Ab": "G#",
	"Bb": "A#",
}

NOTE_NAME_TO_PC: typing.Dict[str, int] = {name: pc for pc, name in enumerate(PITCH_CLASS_NAMES)}
NOTE_NAME_TO_PC.update({flat: NOTE_NAME_TO_PC[sharp] for flat, sharp in _FLATS.items()})


@dataclasses.dataclass(frozen=True, order=True)
class PitchClass:

	"""One of the twelve pitch classes, spelled with sharps."""

	value: int

	def __post_init__ (self) -> None:
		if not 0 <= self.value < 12:
			raise ValueError(f"pitch class out of range: {self.value}")

	@property
	def name (self) -> str:
		return PITCH_CLASS_NAMES[self.value]

	def transpose (self, semitones: int) -> "PitchClass":
		return PitchClass((self.value + semitones) % 12)

	def __str__ (self) -> str:
		return self.name


def pitch_class_of (name: str) -> PitchClass:

	"""Parse a note name into its pitch class.

	Accepts the sharp spellings ``C`` .. ``B`` and the flats ``Db``, ``Eb``,
	``Gb``, ``Ab``, ``Bb``.  Flats map onto their sharp equivalents.

	Raises:
		InvalidNoteError: If ``name`` is not a recognised spelling.
	"""

	token = name.strip()
	if token[:1].islower():
		token = token[:1].upper() + token[1:]
	if token not in NOTE_NAME_TO_PC:
		raise InvalidNoteError(f"invalid note name {name!r}")
	return PitchClass(NOTE_NAME_TO_PC[token])


def note_name (n: int) -> typing.Tuple[str, int]:

	"""Return ``(spelling, octave offset)`` for a note index.

	The octave offset is ``floor(n / 12)`` so that -1 is B one octave below
	the reference.
	"""

	octave, pc = divmod(n, 12)
	return PITCH_CLASS_NAMES[pc], octave


@dataclasses.dataclass(frozen=True, order=True)
class TriadPlacement:

	"""A concrete three-note voicing ``x < y < z``.

	Construction only checks ordering and that the three pitch classes are
	distinct; the close-position bound (``z - x <= 12``) is a property of
	optimizer output, not of the type.
	"""

	x: int
	y: int
	z: int

	def __post_init__ (self) -> None:
		if not self.x < self.y < self.z:
			raise ValueError(f"placement must be strictly ascending: {self.as_tuple()}")
		if len({self.x % 12, self.y % 12, self.z % 12}) != 3:
			raise ValueError(f"placement repeats a pitch class: {self.as_tuple()}")

	def as_tuple (self) -> typing.Tuple[int, int, int]:
		return (self.x, self.y, self.z)

	def __iter__ (self) -> typing.Iterator[int]:
		return iter(self.as_tuple())

	@property
	def span (self) -> int:
		return self.z - self.x

	def shift (self, k: int) -> "TriadPlacement":
		"""Translate every note by ``k`` semitones."""
		return TriadPlacement(self.x + k, self.y + k, self.z + k)

	def note_names (self) -> typing.List[str]:
		return [note_name(n)[0] for n in self]

	def __str__ (self) -> str:
		return f"({self.x},{self.y},{self.z})"


def squared_distance (a: TriadPlacement, b: TriadPlacement) -> int:
	return (b.x - a.x) ** 2 + (b.y - a.y) ** 2 + (b.z - a.z) ** 2


def distance (a: TriadPlacement, b: TriadPlacement) -> float:

	"""Euclidean distance between two voicings."""

	return math.sqrt(squared_distance(a, b))
