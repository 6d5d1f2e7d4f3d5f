"""Shared JSON conventions.

All emitted JSON uses one canonical layout (sorted keys, two-space
indent) so output is byte-stable and survives a parse/reserialize
round trip unchanged.  Integer data values are encoded as decimal
strings: coefficients overflow 64-bit JSON numbers well before k = 30.
"""

from __future__ import annotations

import json

__all__ = ["canonical_json"]


def canonical_json(payload: object) -> str:
    return json.dumps(payload, indent=2, sort_keys=True)
