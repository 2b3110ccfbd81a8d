"""Instance file interchange: JSON, schema version "tensorbound/1".

Complex entries are two-element arrays [re, im]; matrices are row-major
arrays of rows. Indices in files are 0-based (graph edges included),
unlike reports, which are 1-based. Floats are written with Python's
shortest round-tripping representation, so serialize(parse(f)) preserves
every value bit-exactly.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .bounds import InstanceValidationError, TensorSumInstance
from .graphs import InteractionGraph

SCHEMA_VERSION = "tensorbound/1"


def _entry_from_json(cell, where: str) -> complex:
    if (
        not isinstance(cell, (list, tuple))
        or len(cell) != 2
        or not all(isinstance(p, (int, float)) and not isinstance(p, bool) for p in cell)
    ):
        raise InstanceValidationError(
            f"{where}: each entry must be a two-element [re, im] array, got {cell!r}"
        )
    re, im = float(cell[0]), float(cell[1])
    if not (np.isfinite(re) and np.isfinite(im)):
        raise InstanceValidationError(f"{where}: entries must be finite, got {cell!r}")
    return complex(re, im)


def matrix_from_json(rows, dim: int, where: str) -> np.ndarray:
    if not isinstance(rows, list) or len(rows) != dim:
        raise InstanceValidationError(
            f"{where}: expected {dim} rows, got "
            f"{len(rows) if isinstance(rows, list) else type(rows).__name__}"
        )
    out = np.zeros((dim, dim), dtype=complex)
    for r, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != dim:
            raise InstanceValidationError(
                f"{where}: row {r} must have {dim} entries"
            )
        for c, cell in enumerate(row):
            out[r, c] = _entry_from_json(cell, f"{where}[{r}][{c}]")
    return out


def matrix_to_json(a: np.ndarray) -> list:
    return [[[float(v.real), float(v.imag)] for v in row] for row in np.asarray(a, dtype=complex)]


def _positive_int(value, name: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool) or value < 1:
        raise InstanceValidationError(f"{name} must be a positive integer, got {value!r}")
    return value


def graph_from_json(obj, m: int) -> InteractionGraph:
    """Graph object {"edges": [[i, j], ...]} with 0-based vertex indices."""
    if not isinstance(obj, dict):
        raise InstanceValidationError("graph must be an object with an 'edges' array")
    if "m" in obj and obj["m"] != m:
        raise InstanceValidationError(
            f"graph declares m={obj['m']} but the instance has m={m}"
        )
    edges_raw = obj.get("edges")
    if not isinstance(edges_raw, list):
        raise InstanceValidationError("graph.edges must be an array of [i, j] pairs")
    edges = []
    for k, pair in enumerate(edges_raw):
        if (
            not isinstance(pair, list)
            or len(pair) != 2
            or not all(isinstance(v, int) and not isinstance(v, bool) for v in pair)
        ):
            raise InstanceValidationError(
                f"graph.edges[{k}]: expected a pair of integers, got {pair!r}"
            )
        i, j = pair
        if not (0 <= i < m and 0 <= j < m):
            raise InstanceValidationError(
                f"graph.edges[{k}] = [{i}, {j}] out of range for m={m} (0-based)"
            )
        edges.append((i + 1, j + 1))
    try:
        return InteractionGraph(m, edges)
    except ValueError as exc:
        raise InstanceValidationError(f"graph: {exc}") from exc


def graph_to_json(g: InteractionGraph) -> dict:
    return {"edges": [[i - 1, j - 1] for i, j in g.edges]}


def instance_from_dict(doc) -> tuple[TensorSumInstance, InteractionGraph | None]:
    if not isinstance(doc, dict):
        raise InstanceValidationError("instance file must hold a JSON object")
    version = doc.get("schema_version")
    if version != SCHEMA_VERSION:
        raise InstanceValidationError(
            f"unsupported schema_version {version!r}, expected {SCHEMA_VERSION!r}"
        )
    dim_h = _positive_int(doc.get("dim_h"), "dim_h")
    dim_k = _positive_int(doc.get("dim_k"), "dim_k")
    x_raw = doc.get("x")
    y_raw = doc.get("y")
    if not isinstance(x_raw, list) or not x_raw:
        raise InstanceValidationError("x must be a nonempty array of matrices")
    if not isinstance(y_raw, list) or len(y_raw) != len(x_raw):
        raise InstanceValidationError(
            f"y must be an array of {len(x_raw)} matrices to match x"
        )
    m = len(x_raw)
    x = [matrix_from_json(rows, dim_h, f"x[{k}]") for k, rows in enumerate(x_raw)]
    y = [matrix_from_json(rows, dim_k, f"y[{k}]") for k, rows in enumerate(y_raw)]
    weights = doc.get("weights")
    if weights is not None:
        if not isinstance(weights, list) or len(weights) != m:
            raise InstanceValidationError(f"weights must be an array of {m} numbers")
        if not all(
            isinstance(v, (int, float)) and not isinstance(v, bool) for v in weights
        ):
            raise InstanceValidationError("weights must be numbers")
    inst = TensorSumInstance(x, y, weights)
    graph = None
    if doc.get("graph") is not None:
        graph = graph_from_json(doc["graph"], m)
    return inst, graph


def instance_to_dict(
    inst: TensorSumInstance, graph: InteractionGraph | None = None
) -> dict:
    doc = {
        "schema_version": SCHEMA_VERSION,
        "dim_h": inst.dim_h,
        "dim_k": inst.dim_k,
        "x": [matrix_to_json(a) for a in inst.x],
        "y": [matrix_to_json(b) for b in inst.y],
        "weights": [float(c) for c in inst.weights],
    }
    if graph is not None:
        doc["graph"] = graph_to_json(graph)
    return doc


def load_instance(path) -> tuple[TensorSumInstance, InteractionGraph | None]:
    text = Path(path).read_text(encoding="utf-8")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceValidationError(f"{path}: not valid JSON: {exc}") from exc
    return instance_from_dict(doc)


def save_instance(
    path, inst: TensorSumInstance, graph: InteractionGraph | None = None
) -> None:
    doc = instance_to_dict(inst, graph)
    Path(path).write_text(json.dumps(doc, indent=2) + "\n", encoding="utf-8")


def load_graph(path, m: int) -> InteractionGraph:
    """Standalone graph file: {"edges": [[i, j], ...]}, 0-based."""
    text = Path(path).read_text(encoding="utf-8")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceValidationError(f"{path}: not valid JSON: {exc}") from exc
    return graph_from_json(doc, m)
