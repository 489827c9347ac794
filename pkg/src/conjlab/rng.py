"""Deterministic random-stream construction shared by the stochastic helpers.

Every randomized routine in this package draws from a counter-based Philox
generator keyed by ``(seed, index)``.  Streams for distinct indices are
statistically independent and, crucially, do not depend on the order in
which they are created or consumed, so results are identical no matter how
work is split across workers.
"""

import numpy as np

__all__ = ["substream"]


def substream(seed: int, index: int) -> np.random.Generator:
    """Return the Philox generator for logical stream ``index`` under ``seed``."""
    return np.random.Generator(np.random.Philox(np.random.SeedSequence([seed, index])))
