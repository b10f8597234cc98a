"""Minimum-movement triad inversions on the integer pitch lattice.

Triads are points ``(x, y, z)`` of ascending semitone indices.  For each
diatonic triad of a key, the voicing nearest (Euclidean) to a chosen tonic
voicing gives a set of inversions that keep chord changes small.
"""

from chordspace.diatonic import ChordQuality, DiatonicTriad, Scale, ScaleKind, build_scale, diatonic_triad, quality_row
from chordspace.optimizer import (
	CUMULATIVE_CONSTANT,
	ProgressionMode,
	ProgressionSpec,
	VoicingTable,
	enumerate_placements,
	inversion_set,
	nearest_placement,
	tonic_anchor,
	voice_progression,
	voicing_table,
)
from chordspace.oracle import brute_force_nearest, verify_all
from chordspace.pitch_space import PitchClass, TriadPlacement, distance, note_name, pitch_class_of

__version__ = "0.1.0"
