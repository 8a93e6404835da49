"""JSON payloads for series: exact strings, deterministic ordering.

Coefficients are serialized through the ring's exact string form ("num/den"
for rationals, comma-joined coordinate vectors for cyclotomic elements),
never floats, so round-tripping is the identity.  Term lists are sorted by
multi-index so emitted files are diff-stable.
"""

from __future__ import annotations

from .rings import ring_from_tag
from .series import TruncatedSeries


def series_to_payload(series: TruncatedSeries) -> dict:
    return {
        "vars": list(series.names),
        "truncation": series.trunc,
        "ring": series.ring.tag,
        "terms": [
            {"exp": list(exp), "coeff": series.ring.coeff_to_str(series.terms[exp])}
            for exp in sorted(series.terms)
        ],
    }


def series_from_payload(payload: dict) -> TruncatedSeries:
    ring = ring_from_tag(payload["ring"])
    names = tuple(payload["vars"])
    terms = {}
    for item in payload["terms"]:
        coeff = ring.coeff_from_str(item["coeff"])
        if not ring.is_zero(coeff):
            terms[tuple(item["exp"])] = coeff
    return TruncatedSeries(ring, len(names), payload["truncation"], terms, names)
