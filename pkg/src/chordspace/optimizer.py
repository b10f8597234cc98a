"""Nearest-placement search for diatonic triads.

Inversions are numbered by which chord member sounds lowest: 1 for the root,
2 for the third, 3 for the fifth.  Note that this makes the root-lowest
voicing "inversion 1", not "root position" as in most harmony textbooks.

An *anchor set* picks the inversion of the tonic triad.  Every other
diatonic triad is then placed as close as possible (Euclidean, on the
integer lattice) to that anchor.  Set 2 puts the tonic on top of the tonic
triad and is the default.
"""

from __future__ import annotations

import dataclasses
import enum
import math
import typing

from chordspace.diatonic import (
	DiatonicTriad,
	Scale,
	ScaleKind,
	build_scale,
	diatonic_triad,
	diatonic_triads,
)
from chordspace.pitch_space import PitchClass, TriadPlacement, distance, squared_distance

INVERSIONS: typing.Tuple[int, ...] = (1, 2, 3)
DEFAULT_SET = 2
MAX_SPAN = 12

# 9 + 2*sqrt(5): the cumulative distance every voicing table should hit.
CUMULATIVE_CONSTANT = 9 + 2 * math.sqrt(5)


class EmptyWindowError(ValueError):
	"""Raised when no close-position placement fits inside a window."""


class InvalidInversionError(ValueError):
	"""Raised for an inversion / anchor-set number outside 1..3."""


def check_inversion (value: int) -> int:
	if isinstance(value, bool) or not isinstance(value, int) or value not in INVERSIONS:
		raise InvalidInversionError(f"invalid inversion {value!r} (expected 1, 2 or 3)")
	return value


def member_label (triad: DiatonicTriad, member: int) -> str:

	"""Name of chord member 1/2/3 relative to the triad's own root."""

	third, fifth = triad.intervals
	if member == 1:
		return "Tonic"
	if member == 2:
		return "Major 3rd" if third == 4 else "Minor 3rd"
	if member == 3:
		return "Dominant" if fifth == 7 else "The flat 5th"
	raise InvalidInversionError(f"invalid chord member {member!r}")


def inversion_of (triad: DiatonicTriad, placement: TriadPlacement) -> int:

	"""Which chord member (1 root, 2 third, 3 fifth) is the lowest note."""

	lowest = placement.x % 12
	for member, pc in enumerate(triad.pitch_classes, start=1):
		if pc.value == lowest:
			return member
	raise ValueError(f"{placement} is not a voicing of {triad.name}")


def _close_voicing (triad: DiatonicTriad, bass: int) -> TriadPlacement:
	# the two upper members sit in the octave above the bass note
	uppers = sorted(bass + (pc.value - bass) % 12 for pc in triad.pitch_classes if pc.value != bass % 12)
	return TriadPlacement(bass, uppers[0], uppers[1])


def enumerate_placements (triad: DiatonicTriad, window_low: int, window_high: int) -> typing.List[TriadPlacement]:

	"""All close-position voicings of ``triad`` inside ``[window_low, window_high]``.

	Each octave contributes three voicings, one per lowest member.  Results
	are sorted by bass note.

	Raises:
		EmptyWindowError: If nothing fits.
	"""

	members = {pc.value for pc in triad.pitch_classes}
	placements = []
	for bass in range(window_low, window_high + 1):
		if bass % 12 not in members:
			continue
		p = _close_voicing(triad, bass)
		if p.z <= window_high:
			placements.append(p)
	if not placements:
		raise EmptyWindowError(f"no placement of {triad.name} fits in [{window_low}, {window_high}]")
	return placements


def placement_rank (anchor: TriadPlacement, p: TriadPlacement) -> typing.Tuple[int, int, typing.Tuple[int, int, int]]:

	"""Sort key for candidates: squared distance, then lower top note, then lexicographic."""

	return squared_distance(anchor, p), p.z, p.as_tuple()


def tonic_anchor (scale: Scale, choice: int = DEFAULT_SET) -> TriadPlacement:

	"""Tonic-triad voicing for anchor set ``choice``, bass note in 0..11."""

	check_inversion(choice)
	tonic = diatonic_triad(scale, 1)
	return _close_voicing(tonic, tonic.pitch_classes[choice - 1].value)


def nearest_placement (anchor: TriadPlacement, triad: DiatonicTriad) -> typing.Tuple[TriadPlacement, int, float]:

	"""Closest voicing of ``triad`` to ``anchor``.

	Searches one octave beyond the anchor on both sides; anything farther is
	beaten by its own octave transposition back toward the anchor.

	Returns:
		``(placement, inversion, distance)``
	"""

	candidates = enumerate_placements(triad, anchor.x - 12, anchor.z + 12)
	best = min(candidates, key=lambda p: placement_rank(anchor, p))
	return best, inversion_of(triad, best), distance(anchor, best)


@dataclasses.dataclass(frozen=True)
class VoicingRow:

	degree: int
	triad: DiatonicTriad
	placement: TriadPlacement
	inversion: int
	distance: float

	@property
	def first_note (self) -> str:
		return member_label(self.triad, self.inversion)


@dataclasses.dataclass(frozen=True)
class VoicingTable:

	"""Per-degree nearest voicings against one tonic anchor."""

	scale: Scale
	choice: int
	anchor: TriadPlacement
	rows: typing.Tuple[VoicingRow, ...]
	cumulative: float

	def row (self, degree: int) -> VoicingRow:
		return self.rows[degree - 1]

	@property
	def placements (self) -> typing.List[TriadPlacement]:
		return [r.placement for r in self.rows]


def make_table (scale: Scale, choice: int, anchor: TriadPlacement, placements: typing.Sequence[TriadPlacement]) -> VoicingTable:

	"""Assemble a table from already chosen placements (used by the parsers too)."""

	rows = []
	for triad, p in zip(diatonic_triads(scale), placements):
		rows.append(VoicingRow(triad.degree, triad, p, inversion_of(triad, p), distance(anchor, p)))
	cumulative = math.fsum(r.distance for r in rows if r.degree != 1)
	return VoicingTable(scale, choice, anchor, tuple(rows), cumulative)


def voicing_table (scale: Scale, choice: int = DEFAULT_SET) -> VoicingTable:
	anchor = tonic_anchor(scale, choice)
	placements = [nearest_placement(anchor, t)[0] for t in diatonic_triads(scale)]
	return make_table(scale, choice, anchor, placements)


def inversion_set (kind: ScaleKind, choice: int = DEFAULT_SET) -> typing.List[str]:

	"""Lowest-member labels for degrees 1..7 under anchor set ``choice``.

	The result does not depend on the key, so C is used.
	"""

	table = voicing_table(build_scale(PitchClass(0), kind), choice)
	return [r.first_note for r in table.rows]


class ProgressionMode(enum.Enum):

	#: every chord uses its voicing-table placement
	ANCHOR = "anchor"
	#: each chord moves as little as possible from the previous one
	CHAIN = "chain"


@dataclasses.dataclass(frozen=True)
class ProgressionSpec:

	tonic: PitchClass
	kind: ScaleKind
	chords: typing.Tuple[int, ...]
	mode: ProgressionMode = ProgressionMode.ANCHOR

	def __post_init__ (self) -> None:
		if not self.chords:
			raise ValueError("progression needs at least one chord")
		scale = build_scale(self.tonic, self.kind)
		for d in self.chords:
			diatonic_triad(scale, d)


def voice_progression (spec: ProgressionSpec, choice: int = DEFAULT_SET) -> typing.List[TriadPlacement]:
	scale = build_scale(spec.tonic, spec.kind)
	table = voicing_table(scale, choice)

	if spec.mode is ProgressionMode.ANCHOR:
		return [table.row(d).placement for d in spec.chords]

	voiced = [table.row(spec.chords[0]).placement]
	for d in spec.chords[1:]:
		voiced.append(nearest_placement(voiced[-1], diatonic_triad(scale, d))[0])
	return voiced
