"""Major and natural-minor scales and their seven diatonic triads."""

from __future__ import annotations

import dataclasses
import enum
import typing

from chordspace.pitch_space import PitchClass


class InvalidDegreeError(ValueError):
	"""Raised for a scale degree outside 1..7."""


class ScaleKind(enum.Enum):
	MAJOR = "major"
	NATURAL_MINOR = "minor"

	@classmethod
	def parse (cls, text: str) -> "ScaleKind":
		key = text.strip().lower()
		aliases = {"major": cls.MAJOR, "minor": cls.NATURAL_MINOR, "natural_minor": cls.NATURAL_MINOR, "natural-minor": cls.NATURAL_MINOR}
		if key not in aliases:
			raise ValueError(f"unknown scale kind {text!r} (expected 'major' or 'minor')")
		return aliases[key]


class ChordQuality(enum.Enum):
	MAJOR = "major"
	MINOR = "minor"
	DIMINISHED = "diminished"

	@property
	def title (self) -> str:
		return self.value.capitalize()


SCALE_STEPS: typing.Dict[ScaleKind, typing.Tuple[int, ...]] = {
	ScaleKind.MAJOR: (0, 2, 4, 5, 7, 9, 11),
	ScaleKind.NATURAL_MINOR: (0, 2, 3, 5, 7, 8, 10),
}

# (third, fifth) above the root -> quality
_QUALITY_BY_INTERVALS: typing.Dict[typing.Tuple[int, int], ChordQuality] = {
	(4, 7): ChordQuality.MAJOR,
	(3, 7): ChordQuality.MINOR,
	(3, 6): ChordQuality.DIMINISHED,
}

# Row labels used when printing inversion and voicing tables.
DEGREE_LABELS: typing.Dict[ScaleKind, typing.Tuple[str, ...]] = {
	ScaleKind.MAJOR: (
		"Tonic", "Supertonic", "Major 3rd", "Subdominant", "Dominant", "Major 6th", "Leading Tone",
	),
	ScaleKind.NATURAL_MINOR: (
		"Tonic", "Major 2nd", "Minor 3rd", "Subdominant", "Dominant", "Minor 6th", "The seventh",
	),
}


@dataclasses.dataclass(frozen=True)
class Scale:

	tonic: PitchClass
	kind: ScaleKind
	degrees: typing.Tuple[PitchClass, ...]

	@property
	def name (self) -> str:
		return f"{self.tonic.name} {self.kind.value}"

	def __contains__ (self, pc: PitchClass) -> bool:
		return pc in self.degrees


@dataclasses.dataclass(frozen=True)
class DiatonicTriad:

	"""A triad on one scale degree; ``pitch_classes`` is (root, third, fifth)."""

	degree: int
	quality: ChordQuality
	pitch_classes: typing.Tuple[PitchClass, PitchClass, PitchClass]

	@property
	def root (self) -> PitchClass:
		return self.pitch_classes[0]

	@property
	def name (self) -> str:
		return f"{self.root.name} {self.quality.value}"

	@property
	def intervals (self) -> typing.Tuple[int, int]:
		root, third, fifth = (pc.value for pc in self.pitch_classes)
		return (third - root) % 12, (fifth - root) % 12


def build_scale (tonic: PitchClass, kind: ScaleKind) -> Scale:
	return Scale(tonic, kind, tuple(tonic.transpose(step) for step in SCALE_STEPS[kind]))


def diatonic_triad (scale: Scale, degree: int) -> DiatonicTriad:

	"""Stack thirds from ``degree`` using only notes of ``scale``.

	Raises:
		InvalidDegreeError: If ``degree`` is not in 1..7.
	"""

	if isinstance(degree, bool) or not isinstance(degree, int) or not 1 <= degree <= 7:
		raise InvalidDegreeError(f"invalid scale degree {degree!r} (expected 1..7)")

	i = degree - 1
	pcs = (scale.degrees[i], scale.degrees[(i + 2) % 7], scale.degrees[(i + 4) % 7])
	third = (pcs[1].value - pcs[0].value) % 12
	fifth = (pcs[2].value - pcs[0].value) % 12
	return DiatonicTriad(degree, _QUALITY_BY_INTERVALS[(third, fifth)], pcs)


def diatonic_triads (scale: Scale) -> typing.List[DiatonicTriad]:
	return [diatonic_triad(scale, d) for d in range(1, 8)]


def quality_row (kind: ScaleKind) -> typing.List[ChordQuality]:

	"""Triad qualities on degrees 1..7 of any scale of this kind."""

	return [t.quality for t in diatonic_triads(build_scale(PitchClass(0), kind))]
