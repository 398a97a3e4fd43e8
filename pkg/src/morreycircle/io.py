"""Step function file format.

A JSON object with fields "breakpoints_rad" (strictly increasing angles
in (-pi, pi]) and "values" (one value per circular gap).  An optional
"segment_lengths_rad" field carries the authoritative segment lengths;
the writer always emits it so that distribution-exact functions (e.g. a
decreasing rearrangement) survive a round trip bit-for-bit.  Files
without it are read with lengths recovered from breakpoint differences.
"""

from __future__ import annotations

import json
from math import tau

from .circle_step import StepFunction, _gap_lengths, make_step
from .errors import MorreyCircleError

# stored lengths may disagree with breakpoint gaps only at rounding level
_LENGTH_SLACK = 1e-9


def load_step_function(path):
    with open(path, "r", encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise MorreyCircleError(f"{path}: not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise MorreyCircleError(f"{path}: expected a JSON object")
    try:
        bps = doc["breakpoints_rad"]
        vals = doc["values"]
    except KeyError as exc:
        raise MorreyCircleError(f"{path}: missing field {exc}") from exc
    if not isinstance(bps, list) or not isinstance(vals, list):
        raise MorreyCircleError(f"{path}: breakpoints_rad and values must be arrays")
    lengths = doc.get("segment_lengths_rad")
    if lengths is not None:
        if not isinstance(lengths, list) or len(lengths) != len(bps):
            raise MorreyCircleError(
                f"{path}: segment_lengths_rad must match breakpoints_rad in length"
            )
        gaps = _gap_lengths(tuple(float(b) for b in bps))
        for got, gap in zip(lengths, gaps):
            if not (0.0 < got <= tau) or abs(got - gap) > _LENGTH_SLACK:
                raise MorreyCircleError(
                    f"{path}: segment length {got} inconsistent with breakpoints"
                )
    return make_step(bps, vals, lengths)


def save_step_function(f: StepFunction, path):
    doc = {
        "breakpoints_rad": list(f.breakpoints),
        "values": list(f.values),
        "segment_lengths_rad": list(f.lengths),
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, indent=2)
        fh.write("\n")
