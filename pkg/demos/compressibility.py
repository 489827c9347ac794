"""Two-part description length as a computable stand-in for randomness.

A pattern the phrase parser can copy from its own past compresses far
below its bit length; uniformly random bits never do. Orbit parities
show both faces: once an orbit falls to 1 it parks in the 1-2 cycle and
the parity tail turns into pure period-2 structure, while the stretch
before arrival is indistinguishable from coin flips to this estimator.
The counting argument lives in that second face: compressible vectors
are rare because short descriptions are scarce.
"""

import numpy as np

from conjlab.parity import description_length_estimate, parity_vector, random_fraction
from conjlab.rng import substream


def show(label, x):
    s = description_length_estimate(x)
    print(f"{label:24s} length {s.length:>7d}  estimate {s.estimate:>7d}  "
          f"deficiency {s.deficiency:>8d}")


show("alternating 1e6", "01" * 500_000)
show("constant 1024", "0" * 1024)
show("period-7 pattern 1024", "".join("1" if (i * i) % 7 < 3 else "0" for i in range(1024)))
show("random 1024", substream(99, 0).integers(0, 2, size=1024, dtype=np.uint8))

# 27 reaches 1 after 70 steps; the remaining 954 parities are the 1-2
# cycle, i.e. '10' repeated, and the estimator pounces on it
show("orbit of 27, k=1024", parity_vector(27, 1024))

# starts with ~1200 bits have not arrived by step 4096, so their parity
# windows score like coin flips
for i in range(3):
    n = int.from_bytes(substream(7, i).bytes(150), "big") | 1
    show(f"orbit of ~2^1200 #{i}", parity_vector(n, 4096))

frac = random_fraction(1024, 400, seed=12)
print(f"fraction of random 1024-bit vectors below the default threshold: {frac}")
