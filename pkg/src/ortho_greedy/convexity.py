"""Convexity of a rectilinear representation.

Convex means: every internal face is a rectangle and the external boundary
is an orthoconvex polygon.  Both are decided combinatorially from the face
walks, without coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .repgraph import SLOT_NAMES, E, N, RectilinearRepresentation, S, W


@dataclass(frozen=True)
class ConvexityReport:
    is_convex: bool
    offending_internal_faces: tuple[int, ...]
    # (direction, start of first run, start of a second run) on the external walk
    orthoconvexity_witness: tuple[str, int, int] | None

    def to_dict(self) -> dict:
        w = self.orthoconvexity_witness
        return {
            "is_convex": self.is_convex,
            "offending_internal_faces": list(self.offending_internal_faces),
            "orthoconvexity_witness": None if w is None else
            {"direction": w[0], "first_run": w[1], "second_run": w[2]},
        }


def is_rectangular(angles: Sequence[int]) -> bool:
    return sum(a == 90 for a in angles) == 4 and all(a in (90, 180) for a in angles)


def run_witness(directions: Sequence[int]) -> tuple[str, int, int] | None:
    """Check that, in a cyclic sequence of travel directions, each compass
    direction forms at most one maximal run once the sequence is projected
    on its axis (vertical moves are skipped when counting east/west runs and
    vice versa).  Returns the first violation found."""
    for axis in ((E, W), (N, S)):
        idx = [i for i, d in enumerate(directions) if d in axis]
        if not idx:
            continue
        proj = [directions[i] for i in idx]
        k = len(proj)
        for d in axis:
            starts = [idx[i] for i in range(k) if proj[i] == d and proj[i - 1] != d]
            if len(starts) > 1:
                return SLOT_NAMES[d], starts[0], starts[1]
    return None


def check_convex(rep: RectilinearRepresentation) -> ConvexityReport:
    bad = tuple(f.index for f in rep.internal_faces
                if not is_rectangular([c.angle for c in f.corners]))
    ext = rep.external_face
    witness = run_witness([c.leave for c in ext.corners])
    return ConvexityReport(not bad and witness is None, bad, witness)
