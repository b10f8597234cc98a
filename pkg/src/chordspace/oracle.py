"""Exhaustive cross-check of the nearest-placement optimizer.

Nothing here reuses the optimizer's candidate generation: the scan walks
every integer triple in a wide window and keeps the ones that happen to be
close-position voicings of the triad.  Agreement between the two routes is
what :func:`verify_all` reports.
"""

from __future__ import annotations

import dataclasses
import math
import typing

from chordspace.diatonic import DiatonicTriad, ScaleKind, build_scale, diatonic_triad
from chordspace.optimizer import (
	CUMULATIVE_CONSTANT,
	INVERSIONS,
	nearest_placement,
	tonic_anchor,
)
from chordspace.pitch_space import PitchClass, TriadPlacement

DEFAULT_WINDOW = 24
CUMULATIVE_TOLERANCE = 1e-9


@dataclasses.dataclass(frozen=True)
class CaseId:

	tonic: int
	kind: str
	anchor_set: int
	degree: int

	def __str__ (self) -> str:
		return f"{PitchClass(self.tonic).name} {self.kind} set {self.anchor_set} degree {self.degree}"


@dataclasses.dataclass(frozen=True)
class OracleReport:

	case: typing.Optional[CaseId]
	optima: typing.Tuple[TriadPlacement, ...]
	squared_distance: int

	@property
	def distance (self) -> float:
		return math.sqrt(self.squared_distance)

	@property
	def tie_count (self) -> int:
		return len(self.optima)


def brute_force_nearest (
	anchor: TriadPlacement,
	triad: DiatonicTriad,
	window_half_width: int = DEFAULT_WINDOW,
	case: typing.Optional[CaseId] = None,
) -> OracleReport:

	"""Every minimum-distance close voicing of ``triad`` around ``anchor``.

	All optima are returned, unsorted by any tie-break, in scan order.
	"""

	if window_half_width < 24:
		raise ValueError(f"window_half_width must be >= 24, got {window_half_width}")

	lo = anchor.x - window_half_width
	hi = anchor.z + window_half_width
	wanted = sorted(pc.value for pc in triad.pitch_classes)
	ax, ay, az = anchor.x, anchor.y, anchor.z

	best: typing.Optional[int] = None
	optima: typing.List[TriadPlacement] = []
	for x in range(lo, hi + 1):
		for y in range(x + 1, hi + 1):
			for z in range(y + 1, hi + 1):
				if z - x > 12:
					break
				if sorted((x % 12, y % 12, z % 12)) != wanted:
					continue
				d2 = (x - ax) ** 2 + (y - ay) ** 2 + (z - az) ** 2
				if best is None or d2 < best:
					best = d2
					optima = [TriadPlacement(x, y, z)]
				elif d2 == best:
					optima.append(TriadPlacement(x, y, z))

	assert best is not None
	return OracleReport(case, tuple(optima), best)


def apply_tie_break (optima: typing.Iterable[TriadPlacement]) -> TriadPlacement:
	"""Lowest top note wins, then the lexicographically smallest triple."""
	return min(optima, key=lambda p: (p.z, p.as_tuple()))


@dataclasses.dataclass
class VerificationSummary:

	window: int
	reports: typing.List[OracleReport] = dataclasses.field(default_factory=list)
	mismatches: typing.List[str] = dataclasses.field(default_factory=list)
	cumulative: typing.Dict[str, typing.List[float]] = dataclasses.field(default_factory=dict)

	@property
	def cases (self) -> int:
		return len(self.reports)

	@property
	def ties (self) -> typing.List[OracleReport]:
		return [r for r in self.reports if r.tie_count > 1]

	@property
	def ok (self) -> bool:
		return not self.mismatches

	def optima_by_case (self) -> typing.Dict[CaseId, typing.Tuple[TriadPlacement, ...]]:
		return {r.case: r.optima for r in self.reports}

	def to_dict (self) -> typing.Dict[str, typing.Any]:
		return {
			"window": self.window,
			"cases": self.cases,
			"mismatches": list(self.mismatches),
			"ties": [
				{"case": str(r.case), "optima": [list(p) for p in r.optima]} for r in self.ties
			],
			"cumulative": {
				kind: {"min": min(values), "max": max(values), "expected": CUMULATIVE_CONSTANT}
				for kind, values in self.cumulative.items()
			},
		}


def verify_all (window_half_width: int = DEFAULT_WINDOW) -> VerificationSummary:

	"""Check all 12 tonics x 2 kinds x 3 anchor sets x 7 degrees.

	A case mismatches when the optimizer's placement differs from the
	oracle's tie-broken optimum, or their distances differ.  Each
	(tonic, kind, set) table must also sum to the cumulative constant.
	"""

	summary = VerificationSummary(window_half_width)
	for kind in ScaleKind:
		totals = summary.cumulative.setdefault(kind.value, [])
		for tonic in range(12):
			scale = build_scale(PitchClass(tonic), kind)
			for anchor_set in INVERSIONS:
				anchor = tonic_anchor(scale, anchor_set)
				table_sum = 0.0
				for degree in range(1, 8):
					case = CaseId(tonic, kind.value, anchor_set, degree)
					triad = diatonic_triad(scale, degree)
					report = brute_force_nearest(anchor, triad, window_half_width, case)
					summary.reports.append(report)

					chosen, _, dist = nearest_placement(anchor, triad)
					expected = apply_tie_break(report.optima)
					if chosen != expected or dist != report.distance:
						summary.mismatches.append(f"{case}: optimizer {chosen} vs oracle {expected}")
					if degree != 1:
						table_sum += report.distance
				totals.append(table_sum)
				if abs(table_sum - CUMULATIVE_CONSTANT) >= CUMULATIVE_TOLERANCE:
					summary.mismatches.append(
						f"{PitchClass(tonic).name} {kind.value} set {anchor_set}: cumulative {table_sum!r}"
					)
	return summary
