"""Synthetic graphons: the four benchmark functions, block models and custom callables.

All evaluators are vectorized: ``u`` and ``v`` may be scalars or arrays that
broadcast against each other.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Optional

import numpy as np

from .errors import InvalidSpecError, ModelViolationError

KINDS = ("table1_g1", "table1_g2", "table1_g3", "table1_g4", "blockmodel", "custom")

# below this squared radius graphon 4 returns its limit value at the origin
_G4_ORIGIN_R2 = 1e-300


@dataclass(frozen=True, eq=False)
class GraphonSpec:
    kind: str
    n_ref: Optional[int] = None
    B: Optional[np.ndarray] = field(default=None, repr=False)
    boundaries: Optional[np.ndarray] = field(default=None, repr=False)
    func: Optional[Callable] = field(default=None, repr=False)
    name: Optional[str] = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise InvalidSpecError(f"unknown graphon kind {self.kind!r}")
        if self.kind == "table1_g1" and (self.n_ref is None or self.n_ref < 3):
            # K = floor(log n) must be at least 1
            raise InvalidSpecError("table1_g1 needs n_ref >= 3")
        if self.kind == "custom" and not callable(self.func):
            raise InvalidSpecError("custom graphon needs a callable")
        if self.kind == "blockmodel":
            _check_blockmodel(self.B, self.boundaries)

    @property
    def label(self) -> str:
        if self.name is not None:
            return self.name
        if self.kind.startswith("table1_g"):
            return self.kind[-1]
        return self.kind

    @property
    def n_blocks(self) -> Optional[int]:
        if self.kind == "table1_g1":
            return g1_blocks(self.n_ref)
        if self.kind == "blockmodel":
            return self.B.shape[0]
        return None


def g1_blocks(n: int) -> int:
    """Number of blocks of graphon 1 for a network of ``n`` nodes (natural log)."""
    return int(math.floor(math.log(n)))


def _check_blockmodel(B, boundaries):
    if B is None or boundaries is None:
        raise InvalidSpecError("blockmodel needs B and boundaries")
    if B.ndim != 2 or B.shape[0] != B.shape[1] or B.shape[0] < 1:
        raise InvalidSpecError(f"B must be a square matrix, got shape {B.shape}")
    if not np.array_equal(B, B.T):
        raise InvalidSpecError("B must be symmetric")
    if np.any(B < 0) or np.any(B > 1) or not np.all(np.isfinite(B)):
        raise InvalidSpecError("B entries must lie in [0, 1]")
    K = B.shape[0]
    if boundaries.shape != (K + 1,):
        raise InvalidSpecError(f"need {K + 1} boundaries for {K} blocks, got {boundaries.shape}")
    if boundaries[0] != 0.0 or boundaries[-1] != 1.0:
        raise InvalidSpecError("boundaries must start at 0 and end at 1")
    if np.any(np.diff(boundaries) <= 0):
        raise InvalidSpecError("boundaries must be strictly increasing")


def table1_graphon(index: int, n: Optional[int] = None) -> GraphonSpec:
    """One of the four benchmark graphons; graphon 1 needs the network size ``n``."""
    if index not in (1, 2, 3, 4):
        raise InvalidSpecError(f"benchmark graphons are 1..4, got {index}")
    if index == 1:
        if n is None:
            raise InvalidSpecError("graphon 1 depends on n; pass n")
        return GraphonSpec("table1_g1", n_ref=int(n))
    return GraphonSpec(f"table1_g{index}")


def make_blockmodel_spec(B, boundaries=None, name: Optional[str] = None) -> GraphonSpec:
    """Step-function graphon with block matrix ``B``.

    ``boundaries`` defaults to K equal-width intervals of [0, 1].
    """
    B = np.array(B, dtype=float, ndmin=2)
    if boundaries is None:
        boundaries = np.linspace(0.0, 1.0, B.shape[0] + 1)
    boundaries = np.asarray(boundaries, dtype=float)
    return GraphonSpec("blockmodel", B=B, boundaries=boundaries, name=name)


def custom_graphon(func: Callable, name: str = "custom") -> GraphonSpec:
    """Wrap a vectorized callable ``f(u, v)``; symmetry is the caller's responsibility."""
    return GraphonSpec("custom", func=func, name=name)


def load_blockmodel(path) -> GraphonSpec:
    """Read a block model from JSON: ``{"B": [[...]], "boundaries": [...]}``."""
    path = Path(path)
    try:
        data = json.loads(path.read_text())
        B = data["B"]
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise InvalidSpecError(f"{path}: not a blockmodel JSON file ({exc})") from exc
    return make_blockmodel_spec(B, data.get("boundaries"), name=f"blockmodel:{path.name}")


def from_identifier(ident: str, n: Optional[int] = None) -> GraphonSpec:
    """Resolve a CLI identifier: ``"1"``..``"4"`` or ``"blockmodel:<file>"``."""
    ident = str(ident).strip()
    if ident in ("1", "2", "3", "4"):
        return table1_graphon(int(ident), n)
    if ident.startswith("blockmodel:"):
        return load_blockmodel(ident[len("blockmodel:"):])
    raise InvalidSpecError(f"unknown graphon {ident!r}; valid: 1, 2, 3, 4, blockmodel:<file>")


def _bin_index(x, edges):
    # half-open bins [x_s, x_{s+1}), last bin closed
    idx = np.searchsorted(edges, x, side="right") - 1
    return np.clip(idx, 0, len(edges) - 2)


def _g1(u, v, n_ref):
    K = g1_blocks(n_ref)
    ku = np.minimum(np.floor(u * K), K - 1)
    kv = np.minimum(np.floor(v * K), K - 1)
    return np.where(ku == kv, (ku + 1) / (K + 1), 0.3 / (K + 1))


def _g2(u, v):
    return np.sin(5 * np.pi * (u + v - 1) + 1) / 2 + 0.5


def _g3(u, v):
    z = 15 * (0.8 * np.abs(u - v)) ** 0.8 - 0.1
    return 1 - 1 / (1 + np.exp(z))


def _g4(u, v):
    r2 = u * u + v * v
    small = r2 < _G4_ORIGIN_R2
    safe = np.where(small, 1.0, r2)
    out = safe / 3 * np.cos(1 / safe) + 0.15
    return np.where(small, 0.15, out)


def eval_graphon(spec: GraphonSpec, u, v):
    """Evaluate ``f(u, v)``; scalars in give a float out, arrays broadcast."""
    u_arr = np.asarray(u, dtype=float)
    v_arr = np.asarray(v, dtype=float)
    k = spec.kind
    if k == "table1_g1":
        out = _g1(u_arr, v_arr, spec.n_ref)
    elif k == "table1_g2":
        out = _g2(u_arr, v_arr)
    elif k == "table1_g3":
        out = _g3(u_arr, v_arr)
    elif k == "table1_g4":
        out = _g4(u_arr, v_arr)
    elif k == "blockmodel":
        out = spec.B[_bin_index(u_arr, spec.boundaries), _bin_index(v_arr, spec.boundaries)]
    else:
        out = np.asarray(spec.func(u_arr, v_arr), dtype=float)
        out = np.broadcast_to(out, np.broadcast_shapes(u_arr.shape, v_arr.shape))
    if not np.all((out >= 0) & (out <= 1)):
        raise ModelViolationError(f"graphon {spec.label} evaluated outside [0, 1]")
    if out.ndim == 0:
        return float(out)
    return out
