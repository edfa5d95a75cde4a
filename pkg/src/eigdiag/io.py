"""Matrix files and edge lists.

Matrix file: JSON ``{"n": int, "entries": [[re, im], ...]}`` row-major.
Floats are written with Python's shortest round-trip repr, so reading a
written file reproduces every entry bitwise.

Edge list: ``n <count>`` on the first non-comment line, then one
``u v weight`` per line with 1-based vertices; ``#`` starts a comment.
"""

from __future__ import annotations

import json
import math
from pathlib import Path

import numpy as np

from eigdiag.classes import WeightedGraph
from eigdiag.errors import ParseError
from eigdiag.linalg import HermitianMatrix, make_hermitian


def matrix_to_doc(A: HermitianMatrix) -> dict:
    return {
        "n": A.n,
        "entries": [[float(z.real), float(z.imag)] for z in A.data.ravel()],
    }


def matrix_from_doc(doc) -> HermitianMatrix:
    if not isinstance(doc, dict) or "n" not in doc or "entries" not in doc:
        raise ParseError('matrix document needs keys "n" and "entries"')
    n = doc["n"]
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise ParseError(f'"n" must be a positive integer, got {n!r}')
    entries = doc["entries"]
    if not isinstance(entries, list):
        raise ParseError('"entries" must be a list')
    if len(entries) != n * n:
        raise ParseError(f"expected {n * n} entries for n = {n}, got {len(entries)}")
    raw = np.empty(n * n, dtype=np.complex128)
    for i, pair in enumerate(entries):
        if (
            not isinstance(pair, list)
            or len(pair) != 2
            or not all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in pair)
        ):
            raise ParseError(f"entry {i} is not a [re, im] pair of numbers: {pair!r}")
        raw[i] = complex(pair[0], pair[1])
    return make_hermitian(raw.reshape(n, n))


def dumps_matrix(A: HermitianMatrix) -> str:
    return json.dumps(matrix_to_doc(A)) + "\n"


def write_matrix(A: HermitianMatrix, path) -> None:
    Path(path).write_text(dumps_matrix(A))


def loads_matrix(text: str) -> HermitianMatrix:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    return matrix_from_doc(doc)


def read_matrix(path) -> HermitianMatrix:
    return loads_matrix(Path(path).read_text())


def parse_edge_list(text: str) -> WeightedGraph:
    n = None
    edges = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if n is None:
            if len(tokens) != 2 or tokens[0] != "n":
                raise ParseError(f"line {lineno}: expected 'n <count>', got {line!r}")
            try:
                n = int(tokens[1])
            except ValueError:
                raise ParseError(f"line {lineno}: bad vertex count {tokens[1]!r}") from None
            continue
        if len(tokens) != 3:
            raise ParseError(f"line {lineno}: expected 'u v weight', got {line!r}")
        try:
            u, v, w = int(tokens[0]), int(tokens[1]), float(tokens[2])
        except ValueError:
            raise ParseError(f"line {lineno}: cannot parse {line!r}") from None
        if not math.isfinite(w):
            raise ParseError(f"line {lineno}: non-finite weight")
        edges.append((u, v, w))
    if n is None:
        raise ParseError("missing 'n <count>' header")
    return WeightedGraph(n, tuple(edges))


def read_edge_list(path) -> WeightedGraph:
    return parse_edge_list(Path(path).read_text())
