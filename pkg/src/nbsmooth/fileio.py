"""Dense matrix CSV and edge-list file formats."""

from __future__ import annotations

import logging
from typing import Iterable, Optional, TextIO

import numpy as np

from .errors import FormatError

log = logging.getLogger(__name__)


def parse_edge_list(stream: Iterable[str], indexing: str = "zero", n: Optional[int] = None,
                    return_dropped: bool = False):
    """Read ``u v`` (or ``u,v``) pairs into a dense symmetric 0/1 matrix.

    Lines that are blank or start with ``#`` are skipped. Duplicate and reversed
    pairs collapse to one edge; self-loops are dropped and counted. The node
    range is ``n`` if given, otherwise inferred from the largest id.
    """
    if indexing not in ("zero", "one"):
        raise ValueError(f"indexing must be 'zero' or 'one', got {indexing!r}")
    offset = 1 if indexing == "one" else 0
    edges = []
    for lineno, raw in enumerate(stream, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.replace(",", " ").split()
        if len(tokens) != 2:
            raise FormatError(f"line {lineno}: expected two node ids, got {line!r}")
        try:
            u, v = (int(t) - offset for t in tokens)
        except ValueError:
            raise FormatError(f"line {lineno}: non-integer node id in {line!r}") from None
        if u < 0 or v < 0:
            raise FormatError(f"line {lineno}: negative node id in {line!r}")
        edges.append((u, v))
    size = max((max(e) for e in edges), default=-1) + 1
    if n is not None:
        if size > n:
            raise FormatError(f"node id {size - 1 + offset} outside declared range of {n} nodes")
        size = n
    A = np.zeros((size, size), dtype=float)
    dropped = 0
    for u, v in edges:
        if u == v:
            dropped += 1
            continue
        A[u, v] = A[v, u] = 1.0
    if dropped:
        log.warning("dropped %d self-loop(s)", dropped)
    return (A, dropped) if return_dropped else A


def write_edge_list(A, fh: TextIO, indexing: str = "zero") -> None:
    offset = 1 if indexing == "one" else 0
    rows, cols = np.nonzero(np.triu(np.asarray(A), 1))
    for u, v in zip(rows, cols):
        fh.write(f"{u + offset} {v + offset}\n")


def write_matrix_csv(M, path, header: bool = True) -> None:
    """Comma-separated, 17 significant digits, optional ``# n=<rows>`` header."""
    M = np.asarray(M, dtype=float)
    if M.ndim == 1:
        M = M[:, None]
    if not np.all(np.isfinite(M)):
        raise FormatError("matrix has non-finite entries")
    with open(path, "w") as fh:
        if header:
            fh.write(f"# n={M.shape[0]}\n")
        for row in M:
            fh.write(",".join(format(x, ".17g") for x in row))
            fh.write("\n")


def read_matrix_csv(path) -> np.ndarray:
    rows = []
    with open(path) as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            try:
                rows.append([float(t) for t in line.split(",")])
            except ValueError:
                raise FormatError(f"{path}:{lineno}: non-numeric entry") from None
            if len(rows[-1]) != len(rows[0]):
                raise FormatError(f"{path}:{lineno}: ragged row ({len(rows[-1])} vs {len(rows[0])} columns)")
    if not rows:
        raise FormatError(f"{path}: no data")
    return np.array(rows)
