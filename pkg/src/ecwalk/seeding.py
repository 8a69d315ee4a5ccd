"""Deterministic, explicitly non-cryptographic randomness.

All draws come from :class:`random.Random` seeded with a 64-bit integer; the
seed fully determines every value. Sub-seeds for independent trials are
derived by hashing the parent seed together with labels (BLAKE2b, 8-byte
digest), so a trial's stream depends only on its own labels.

None of this is suitable for generating real keys.
"""

import hashlib
import random

SEED_MASK = (1 << 64) - 1


def make_rng(seed: int) -> random.Random:
    return random.Random(seed & SEED_MASK)


def derive_seed(seed: int, *labels) -> int:
    text = ":".join([str(seed & SEED_MASK), *(str(label) for label in labels)])
    digest = hashlib.blake2b(text.encode(), digest_size=8).digest()
    return int.from_bytes(digest, "big")
