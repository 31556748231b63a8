"""CSV formats for signals, coordinates, edge lists and sweep output.

Signals are ``N`` rows by ``T`` columns; entries are plain reals or complex
numbers written as ``re+imj``. Every number is written with 17 significant
digits so that files round-trip exactly.
"""
from __future__ import annotations

import csv
import json
from pathlib import Path

import numpy as np

from ..errors import DimensionMismatch, ParseError
from ..graph import Graph


def format_number(x) -> str:
    if isinstance(x, (complex, np.complexfloating)):
        return f"{x.real:.17g}{x.imag:+.17g}j"
    return f"{float(x):.17g}"


def _parse_entry(text, path, line):
    text = text.strip()
    try:
        if text.endswith("j"):
            value = complex(text.replace(" ", ""))
        else:
            value = float(text)
    except ValueError:
        raise ParseError(f"cannot parse number {text!r}", path, line) from None
    if not np.isfinite(value):
        raise ParseError(f"non-finite value {text!r}", path, line)
    return value


def _rows(path):
    path = Path(path)
    try:
        with path.open(newline="") as fh:
            return [(i + 1, row) for i, row in enumerate(csv.reader(fh)) if any(c.strip() for c in row)]
    except OSError as exc:
        raise ParseError(str(exc), path) from exc


def read_signal_csv(path, header: bool = False) -> np.ndarray:
    """Read an ``N x T`` joint signal. Returns a real array unless any entry is complex."""
    rows = _rows(path)
    if header and rows:
        rows = rows[1:]
    if not rows:
        raise ParseError("file contains no data", path)
    width = len(rows[0][1])
    values = []
    for line, row in rows:
        if len(row) != width:
            raise ParseError(f"expected {width} columns, found {len(row)}", path, line)
        values.append([_parse_entry(c, path, line) for c in row])
    if any(isinstance(v, complex) for r in values for v in r):
        return np.array(values, dtype=complex)
    return np.array(values, dtype=float)


def write_signal_csv(path, X: np.ndarray) -> None:
    X = np.asarray(X)
    with Path(path).open("w", newline="") as fh:
        for row in X:
            fh.write(",".join(format_number(v) for v in row) + "\n")


def read_coords_csv(path):
    """Read ``vertex_id,x,y[,z]`` or ``vertex_id,lat,lon``.

    Returns ``(coords, metric)`` where ``metric`` is ``"haversine"`` for
    latitude/longitude files and ``"euclidean"`` otherwise. Rows are ordered by
    vertex id, which must cover ``0..N-1``.
    """
    rows = _rows(path)
    if not rows:
        raise ParseError("file contains no data", path)
    head = [c.strip().lower() for c in rows[0][1]]
    if head[0] != "vertex_id" or len(head) < 2:
        raise ParseError("header must start with vertex_id", path, rows[0][0])
    metric = "haversine" if head[1:] == ["lat", "lon"] else "euclidean"
    ids, coords = [], []
    for line, row in rows[1:]:
        if len(row) != len(head):
            raise ParseError(f"expected {len(head)} columns, found {len(row)}", path, line)
        try:
            ids.append(int(row[0]))
        except ValueError:
            raise ParseError(f"bad vertex id {row[0]!r}", path, line) from None
        coords.append([float(_parse_entry(c, path, line).real) for c in row[1:]])
    if not coords:
        raise ParseError("file contains no data rows", path)
    order = np.argsort(ids, kind="stable")
    if sorted(ids) != list(range(len(ids))):
        raise ParseError("vertex ids must be exactly 0..N-1", path)
    return np.array(coords)[order], metric


def write_coords_csv(path, coords: np.ndarray) -> None:
    coords = np.asarray(coords)
    names = ["x", "y", "z"][: coords.shape[1]]
    with Path(path).open("w", newline="") as fh:
        fh.write(",".join(["vertex_id"] + names) + "\n")
        for i, row in enumerate(coords):
            fh.write(",".join([str(i)] + [format_number(v) for v in row]) + "\n")


def read_edge_csv(path, n_vertices: int | None = None) -> Graph:
    """Read an undirected weighted edge list ``src,dst,weight`` (0-indexed, with header)."""
    rows = _rows(path)
    if not rows:
        raise ParseError("file contains no data", path)
    edges = []
    for line, row in rows[1:]:
        if len(row) != 3:
            raise ParseError(f"expected 3 columns, found {len(row)}", path, line)
        try:
            m, n, w = int(row[0]), int(row[1]), float(row[2])
        except ValueError:
            raise ParseError("bad edge row", path, line) from None
        if m < 0 or n < 0 or m == n or w < 0:
            raise ParseError("edges need distinct nonnegative endpoints and weight >= 0", path, line)
        edges.append((m, n, w))
    top = max((max(m, n) for m, n, _ in edges), default=-1) + 1
    size = top if n_vertices is None else n_vertices
    if size < top:
        raise DimensionMismatch(f"edge list references vertex {top - 1} but N={size}")
    adj = np.zeros((size, size))
    for m, n, w in edges:
        adj[m, n] = adj[n, m] = w
    return Graph(adjacency=adj)


def write_edge_csv(path, g: Graph) -> None:
    with Path(path).open("w", newline="") as fh:
        fh.write("src,dst,weight\n")
        for m, n, w in g.edges():
            fh.write(f"{m},{n},{format_number(w)}\n")


def write_table_csv(path, header, rows) -> None:
    with Path(path).open("w", newline="") as fh:
        fh.write(",".join(header) + "\n")
        for row in rows:
            fh.write(",".join(v if isinstance(v, str) else format_number(v) for v in row) + "\n")


def write_json(path, payload) -> None:
    with Path(path).open("w") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")
