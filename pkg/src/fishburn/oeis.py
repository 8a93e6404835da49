"""OEIS b-file ingestion and sequence cross-checks.

b-files are plain ASCII, one "index value" pair per line, '#' comments and
blank lines allowed, indices strictly increasing.  Cross-checks are
offline-first: files come from disk; `fetch_b_file` can download one when
explicitly asked for, but nothing here requires the network.
"""

from __future__ import annotations

from collections import namedtuple

from .errors import BFileFormatError, ParameterError
from .qseries import fishburn_numbers, row_fishburn_numbers

BFileRecord = namedtuple("BFileRecord", "index value")

# the two sequences this library materializes
SEQUENCES = {
    "A022493": ("Fishburn numbers (interval orders by size)", fishburn_numbers),
    "A158691": ("row-Fishburn matrices by size", row_fishburn_numbers),
}


def parse_b_file_lines(lines, source="<memory>"):
    records = []
    last_index = None
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise BFileFormatError(
                f"{source}:{lineno}: expected 'index value', got {line!r}")
        try:
            idx, val = int(parts[0]), int(parts[1])
        except ValueError:
            raise BFileFormatError(
                f"{source}:{lineno}: non-integer field in {line!r}") from None
        if last_index is not None and idx <= last_index:
            raise BFileFormatError(
                f"{source}:{lineno}: index {idx} not increasing after {last_index}")
        last_index = idx
        records.append(BFileRecord(idx, val))
    return records


def parse_b_file(path: str):
    """Parse an OEIS b-file from disk into (index, value) records."""
    with open(path, encoding="utf-8") as fh:
        return parse_b_file_lines(fh, source=path)


def cross_check(tag: str, records, max_n=None) -> dict:
    """Compare ingested values against the library's own sequence.

    Returns {"tag", "checked", "matches", "rows": [(n, ours, theirs, ok)]}.
    Negative or out-of-range indices are skipped (b-files may carry offsets
    the library does not materialize).
    """
    if tag not in SEQUENCES:
        raise ParameterError(
            f"unsupported sequence {tag!r}; supported: {', '.join(sorted(SEQUENCES))}")
    usable = [r for r in records if r.index >= 0]
    if max_n is not None:
        usable = [r for r in usable if r.index <= max_n]
    if not usable:
        return {"tag": tag, "checked": 0, "matches": 0, "rows": []}
    top = max(r.index for r in usable)
    ours = SEQUENCES[tag][1](top)
    rows = []
    matches = 0
    for rec in usable:
        mine = ours[rec.index]
        ok = mine == rec.value
        matches += ok
        rows.append((rec.index, mine, rec.value, ok))
    return {"tag": tag, "checked": len(rows), "matches": matches, "rows": rows}


def fetch_b_file(tag: str, dest_path: str, timeout: float = 30.0) -> str:
    """Download https://oeis.org/<tag>/b<digits>.txt to dest_path.

    Only invoked behind an explicit --fetch; never needed by the test suite.
    """
    import urllib.request

    digits = tag.lstrip("A")
    url = f"https://oeis.org/{tag}/b{digits}.txt"
    with urllib.request.urlopen(url, timeout=timeout) as resp:
        data = resp.read()
    with open(dest_path, "wb") as fh:
        fh.write(data)
    return dest_path
