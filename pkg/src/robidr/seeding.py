"""Deterministic RNG substreams.

Every stochastic component draws from a named substream of a base seed so
that replications are bitwise reproducible and independent of scheduling
(parallel and serial execution must agree).
"""

from __future__ import annotations

import zlib

import numpy as np

__all__ = ["substream", "child_seed"]


def _label_key(label) -> int:
    if isinstance(label, (int, np.integer)):
        return int(label) & 0xFFFFFFFF
    return zlib.crc32(str(label).encode("utf-8"))


def substream(base_seed: int, *labels) -> np.random.Generator:
    """Generator for the substream named by ``labels`` under ``base_seed``.

    Labels may be strings or ints; the same (seed, labels) always yields the
    same stream, and distinct label paths are statistically independent.
    """
    key = tuple(_label_key(lab) for lab in labels)
    return np.random.default_rng(np.random.SeedSequence(int(base_seed) & (2**63 - 1), spawn_key=key))


def child_seed(base_seed: int, *labels) -> int:
    """A plain integer seed derived from a named substream (for configs)."""
    return int(substream(base_seed, *labels).integers(0, 2**31 - 1))
