"""Deterministic seed derivation.

Parallel sweeps must produce identical results regardless of scheduling, so
every work cell derives its seed from the base seed plus its own key instead
of consuming a shared generator.
"""

import hashlib

import numpy as np


def derive_seed(base_seed: int, *key_parts) -> int:
    """Stable 63-bit seed for a named work unit."""
    tag = "|".join([str(int(base_seed))] + [str(p) for p in key_parts])
    digest = hashlib.blake2b(tag.encode("utf-8"), digest_size=8).digest()
    return int.from_bytes(digest, "big") >> 1


def rng_for(base_seed: int, *key_parts) -> np.random.Generator:
    return np.random.default_rng(derive_seed(base_seed, *key_parts))
