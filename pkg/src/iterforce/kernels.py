"""Backend selection and packing for the search kernels.

Two backends run the same code from ``_kernels``: "numba" (njit-compiled,
the default) and "python" (the identical functions interpreted).  Select
with the ITERFORCE_BACKEND environment variable or explicitly by name.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import _kernels as _src
from .graphs import Graph

__all__ = [
    "Backend",
    "available_backends",
    "default_backend_name",
    "get_backend",
    "pack_graph",
    "pack_bits",
    "unpack_words",
]

ENV_BACKEND = "ITERFORCE_BACKEND"

try:
    import numba

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    numba = None
    HAVE_NUMBA = False


@dataclass(frozen=True)
class Backend:
    name: str
    closure_count: Callable
    zf_level: Callable
    fort_level: Callable


_PYTHON = Backend(
    "python",
    _src.closure_count,
    _src.zf_level,
    _src.fort_level,
)

_numba_backend: Backend | None = None


def _build_numba() -> Backend:
    global _numba_backend
    if _numba_backend is None:
        jit = numba.njit(cache=True, nogil=True)
        _numba_backend = Backend(
            "numba",
            jit(_src.closure_count),
            jit(_src.zf_level),
            jit(_src.fort_level),
        )
    return _numba_backend


def available_backends() -> list[str]:
    return ["numba", "python"] if HAVE_NUMBA else ["python"]


def default_backend_name() -> str:
    env = os.environ.get(ENV_BACKEND, "").strip().lower()
    if env:
        return env
    return "numba" if HAVE_NUMBA else "python"


def get_backend(name: str | None = None) -> Backend:
    name = (name or default_backend_name()).lower()
    if name == "python":
        return _PYTHON
    if name == "numba":
        if not HAVE_NUMBA:
            raise RuntimeError("numba backend requested but numba is not importable")
        return _build_numba()
    raise ValueError(f"unknown backend {name!r}; expected 'numba' or 'python'")


def pack_graph(g: Graph) -> tuple[np.ndarray, int, int]:
    """Adjacency int masks -> C-contiguous (n, nwords) uint64 matrix."""
    n = g.n
    nwords = max(1, (n + 63) // 64)
    out = np.zeros((n, nwords), dtype=np.uint64)
    mask64 = (1 << 64) - 1
    for v, row in enumerate(g.adj):
        w = 0
        while row:
            out[v, w] = np.uint64(row & mask64)
            row >>= 64
            w += 1
    return np.ascontiguousarray(out), n, nwords


def pack_bits(bits: int, nwords: int) -> np.ndarray:
    out = np.zeros(nwords, dtype=np.uint64)
    mask64 = (1 << 64) - 1
    w = 0
    while bits:
        out[w] = np.uint64(bits & mask64)
        bits >>= 64
        w += 1
    return out


def unpack_words(words: np.ndarray) -> int:
    bits = 0
    for w in range(len(words) - 1, -1, -1):
        bits = (bits << 64) | int(words[w])
    return bits
