"""Deterministic random-stream derivation.

All randomness in this package flows through counter-based Philox
generators keyed by a master seed plus an integer spawn key, so any
sub-computation can be reproduced in isolation and results are identical
across platforms and process schedules.
"""

import numpy as np


def stream(seed, *key):
    """Return a Generator for the substream identified by ``key``.

    ``seed`` is the master seed; ``key`` is a tuple of small nonnegative
    integers (for experiments: (experiment_id, d, n, trial)). The same
    (seed, key) pair always yields the same stream.
    """
    ss = np.random.SeedSequence(entropy=int(seed), spawn_key=tuple(int(k) for k in key))
    return np.random.Generator(np.random.Philox(ss))


def substream_seed(seed, *key):
    """Derive a plain integer seed for APIs that take one.

    Hashes (seed, key) through SeedSequence into a single 64-bit value.
    """
    ss = np.random.SeedSequence(entropy=int(seed), spawn_key=tuple(int(k) for k in key))
    return int(ss.generate_state(1, np.uint64)[0])
