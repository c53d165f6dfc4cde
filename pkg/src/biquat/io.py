"""Canonical text file format for biquaternion matrices.

A matrix document is JSON with three fields::

    {
      "rows": m,
      "cols": n,
      "entries": [[[re, im], [re, im], [re, im], [re, im]], ...]
    }

``entries`` is row-major, one 4-tuple of complex components per entry, each
complex number a two-element ``[re, im]`` list of decimal floats.  Floats
are written with ``repr``-style shortest round-trip decimals, so any value
representable in double precision survives a save/load cycle bit-exactly.
"""

from __future__ import annotations

import json
from typing import IO

from .matrix import BqMatrix
from .scalar import Biquaternion


def to_document(a: BqMatrix) -> dict:
    entries = []
    for i in range(a.rows):
        for j in range(a.cols):
            e = a.entry(i, j)
            entries.append([[c.real, c.imag] for c in e.components])
    return {"rows": a.rows, "cols": a.cols, "entries": entries}


def from_document(doc: dict) -> BqMatrix:
    try:
        rows, cols = int(doc["rows"]), int(doc["cols"])
        entries = doc["entries"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed matrix document: {exc}") from exc
    if rows < 0 or cols < 0:
        raise ValueError("matrix document has negative dimensions")
    if len(entries) != rows * cols:
        raise ValueError(
            f"matrix document has {len(entries)} entries, expected {rows * cols}"
        )
    grid = []
    for i in range(rows):
        row = []
        for j in range(cols):
            raw = entries[i * cols + j]
            if len(raw) != 4 or any(len(pair) != 2 for pair in raw):
                raise ValueError(f"entry ({i}, {j}) is not four [re, im] pairs")
            row.append(Biquaternion(*(complex(float(re), float(im)) for re, im in raw)))
        grid.append(row)
    if rows == 0 or cols == 0:
        return BqMatrix.zeros(rows, cols)
    return BqMatrix.from_entries(grid)


def dumps(a: BqMatrix) -> str:
    return json.dumps(to_document(a), indent=1)


def loads(text: str) -> BqMatrix:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"invalid JSON in matrix document: {exc}") from exc
    return from_document(doc)


def save_matrix(a: BqMatrix, fp: IO[str] | str) -> None:
    if isinstance(fp, str):
        with open(fp, "w") as handle:
            handle.write(dumps(a) + "\n")
    else:
        fp.write(dumps(a) + "\n")


def load_matrix(fp: IO[str] | str) -> BqMatrix:
    if isinstance(fp, str):
        with open(fp) as handle:
            return loads(handle.read())
    return loads(fp.read())
