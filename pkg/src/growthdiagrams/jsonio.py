"""JSON codecs for the wire formats.

Partitions are arrays of positive integers ([] is empty); matrices are arrays
of arrays; tableaux are {"chain": [[...], ...], "steps": "horizontal"}; the
other shapes are documented on their codec.  Dumps are deterministic: sorted
keys, fixed separators.
"""

from __future__ import annotations

import json
from typing import Any

from .growth import GrowthGrid
from .interlacing import INFINITE, PositionMultiset, RibbonProfile
from .partitions import FrobeniusCoords, Partition, partition
from .tableaux import StepKind, TableauChain
from .triangular import TriangularArray, TriGrid


class FormatError(ValueError):
    """Malformed JSON input; the message names the offending field."""


def dumps(data: Any) -> str:
    return json.dumps(data, sort_keys=True, separators=(",", ":")) + "\n"


def loads(text: str, what: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{what}: invalid JSON ({exc.msg} at char {exc.pos})") from exc


def partition_to_json(p: Partition) -> list[int]:
    return list(p)


def partition_from_json(data: Any, field: str = "partition") -> Partition:
    if not isinstance(data, list) or not all(isinstance(v, int) for v in data):
        raise FormatError(f"{field}: expected an array of integers")
    try:
        return partition(data)
    except ValueError as exc:
        raise FormatError(f"{field}: {exc}") from exc


def frobenius_to_json(coords: FrobeniusCoords) -> dict:
    return {"arms": list(coords.arms), "legs": list(coords.legs)}


def frobenius_from_json(data: Any) -> FrobeniusCoords:
    if not isinstance(data, dict) or set(data) != {"arms", "legs"}:
        raise FormatError('frobenius: expected {"arms": [...], "legs": [...]}')
    for key in ("arms", "legs"):
        if not isinstance(data[key], list) or not all(isinstance(v, int) for v in data[key]):
            raise FormatError(f"frobenius.{key}: expected an array of integers")
    return FrobeniusCoords(tuple(data["arms"]), tuple(data["legs"]))


def multiset_to_json(counts: PositionMultiset) -> dict:
    return {"counts": {str(pos): c for pos, c in sorted(counts.items())}}


def multiset_from_json(data: Any) -> PositionMultiset:
    if not isinstance(data, dict) or "counts" not in data:
        raise FormatError('multiset: expected {"counts": {...}}')
    out = {}
    for key, val in data["counts"].items():
        try:
            pos = int(key)
        except ValueError as exc:
            raise FormatError(f"multiset.counts: non-integer key {key!r}") from exc
        if not isinstance(val, int) or val < 0:
            raise FormatError(f"multiset.counts[{key}]: expected a non-negative integer")
        out[pos] = val
    return out


def profile_to_json(prof: RibbonProfile) -> list[dict]:
    return [
        {
            "position": e.position,
            "row": e.row,
            "capacity": "inf" if e.capacity == INFINITE else int(e.capacity),
        }
        for e in prof.entries
    ]


def matrix_from_json(data: Any, field: str = "matrix") -> list[list[int]]:
    if not isinstance(data, list) or not data or not all(isinstance(r, list) for r in data):
        raise FormatError(f"{field}: expected a non-empty array of arrays")
    width = len(data[0])
    for i, row in enumerate(data):
        if len(row) != width:
            raise FormatError(f"{field}[{i}]: expected {width} entries, got {len(row)}")
        for j, v in enumerate(row):
            if not isinstance(v, int) or v < 0:
                raise FormatError(f"{field}[{i}][{j}]: expected a non-negative integer")
    return data


def tableau_to_json(t: TableauChain) -> dict:
    return {"chain": [list(p) for p in t.chain], "steps": t.steps.value}


def tableau_from_json(data: Any, field: str = "tableau") -> TableauChain:
    if not isinstance(data, dict) or "chain" not in data:
        raise FormatError(f'{field}: expected {{"chain": [...], "steps": ...}}')
    steps_raw = data.get("steps", "horizontal")
    try:
        steps = StepKind(steps_raw)
    except ValueError as exc:
        raise FormatError(f"{field}.steps: unknown step kind {steps_raw!r}") from exc
    if not isinstance(data["chain"], list) or not data["chain"]:
        raise FormatError(f"{field}.chain: expected a non-empty array of partitions")
    chain = tuple(
        partition_from_json(p, f"{field}.chain[{i}]") for i, p in enumerate(data["chain"])
    )
    try:
        return TableauChain(chain, steps)
    except ValueError as exc:
        raise FormatError(f"{field}: {exc}") from exc


def grid_to_json(grid: GrowthGrid) -> dict:
    return {
        "vertices": [[list(p) for p in row] for row in grid.vertices],
        "matrix": [list(r) for r in grid.matrix],
        "dual": grid.dual,
    }


def triarray_to_json(arr: TriangularArray, variant: str | None = None) -> dict:
    out: dict = {"n": arr.n, "rows": [list(r) for r in arr.rows]}
    if variant is not None:
        out["variant"] = variant
    return out


def triarray_from_json(data: Any, field: str = "array") -> TriangularArray:
    if not isinstance(data, dict) or "rows" not in data:
        raise FormatError(f'{field}: expected {{"n": ..., "rows": [...]}}')
    rows = data["rows"]
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise FormatError(f"{field}.rows: expected an array of arrays")
    n = data.get("n", len(rows))
    if n != len(rows):
        raise FormatError(f"{field}.n: {n} does not match {len(rows)} rows")
    for i, row in enumerate(rows):
        for j, v in enumerate(row):
            if not isinstance(v, int) or v < 0:
                raise FormatError(f"{field}.rows[{i}][{j}]: expected a non-negative integer")
        if len(row) != n - i:
            raise FormatError(f"{field}.rows[{i}]: expected {n - i} entries, got {len(row)}")
    try:
        return TriangularArray(n, tuple(tuple(r) for r in rows))
    except ValueError as exc:
        raise FormatError(f"{field}: {exc}") from exc


def trigrid_to_json(grid: TriGrid) -> dict:
    return {
        "vertices": [[list(p) for p in row] for row in grid.rows],
        "array": triarray_to_json(grid.array, grid.variant.family.value),
    }
