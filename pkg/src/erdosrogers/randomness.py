"""Seeded, order-independent randomness for the randomized constructions.

Every random object drawn by a construction (a pair color, a color map, a
k-set target, a k-set bijection, a sampling trial) gets its own substream
keyed by (seed, kind, index).  Substream keys are the first 8 bytes of
SHA-256("seed|kind|index") feeding a Mersenne Twister, and bijections are
sampled with an explicit Fisher-Yates shuffle.  This derivation is part of
the package's compatibility contract: outputs for a given seed are stable
across runs, platforms, and versions, and independent of iteration order.
"""

from __future__ import annotations

import hashlib
import random
from typing import Sequence


def substream(seed: int, kind: str, index: int) -> random.Random:
    """Deterministic generator for one named random object."""
    key = hashlib.sha256(f"{seed}|{kind}|{index}".encode()).digest()
    return random.Random(int.from_bytes(key[:8], "big"))


def shuffled(items: Sequence, rng: random.Random) -> list:
    """Fisher-Yates shuffle into a new list (uniform over permutations)."""
    a = list(items)
    for i in range(len(a) - 1, 0, -1):
        j = rng.randrange(i + 1)
        a[i], a[j] = a[j], a[i]
    return a


def sample_sorted(rng: random.Random, n: int, w: int) -> tuple[int, ...]:
    """Uniform w-subset of range(n), returned sorted (partial Fisher-Yates)."""
    pool = list(range(n))
    for i in range(w):
        j = rng.randrange(i, n)
        pool[i], pool[j] = pool[j], pool[i]
    return tuple(sorted(pool[:w]))
