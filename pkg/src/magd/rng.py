"""Deterministic random-stream derivation.

Every stochastic component (chain transitions, batch-size sampler, initial
point draws, Monte Carlo trials) pulls from its own generator, derived from
a (seed, role) pair.  Streams for distinct roles are statistically
independent and individually reproducible, so re-running one seed never
perturbs another and a component can be replayed in isolation.
"""

from __future__ import annotations

import zlib

import numpy as np


def role_key(*labels: str | int) -> tuple[int, ...]:
    """Map role labels to a stable integer tuple (CRC32 for strings)."""
    key = []
    for lab in labels:
        if isinstance(lab, str):
            key.append(zlib.crc32(lab.encode("utf-8")))
        else:
            key.append(int(lab) & 0xFFFFFFFFFFFFFFFF)
    return tuple(key)


def derive_rng(seed: int, *labels: str | int) -> np.random.Generator:
    """Return a PCG64 generator for stream (seed, *labels)."""
    entropy = (int(seed) & 0xFFFFFFFFFFFFFFFF,) + role_key(*labels)
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(entropy)))
