"""Deterministic seed derivation.

All randomized pieces of the package draw their seeds through this module so
that a single master seed reproduces every experiment bit for bit, regardless
of worker count or evaluation order.  Two mechanisms are provided:

* ``derive_seed`` / ``seed_stream`` fold string labels and integers into a
  64-bit seed with a splitmix64-style mixer.  The derived values feed
  ``numpy.random.default_rng`` or further derivations.
* ``chain`` exposes the raw one-step mixer for incremental hashing, used by
  seeker policies to map growing observation histories to actions.  Chaining
  one token at a time means a history's hash extends the hash of every prefix,
  so simulation can update it in O(1) per step.
"""
from __future__ import annotations

import hashlib

MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def mix64(x: int) -> int:
    """splitmix64 finalizer: a fixed bijective scramble of a 64-bit value."""
    x &= MASK64
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9 & MASK64
    x = (x ^ (x >> 27)) * 0x94D049BB133111EB & MASK64
    return x ^ (x >> 31)


def chain(state: int, token: int) -> int:
    """Absorb one integer token into a running 64-bit hash state."""
    return mix64((state + _GOLDEN + (token & MASK64)) & MASK64)


def label64(name: str) -> int:
    """Stable 64-bit tag for a string label (independent of PYTHONHASHSEED)."""
    digest = hashlib.blake2b(name.encode("utf-8"), digest_size=8).digest()
    return int.from_bytes(digest, "big")


def derive_seed(master: int, *parts: int | str) -> int:
    """Derive a child seed from a master seed and a sequence of labels/indices."""
    state = mix64(master)
    for part in parts:
        token = label64(part) if isinstance(part, str) else int(part)
        state = chain(state, token)
    return state


def seed_stream(master: int, label: str, count: int) -> list[int]:
    """First ``count`` seeds of the labeled stream derived from ``master``."""
    if count < 0:
        raise ValueError("count must be nonnegative")
    base = derive_seed(master, label)
    return [chain(base, i) for i in range(count)]
