"""Parity vectors: every k-bit pattern is hit by exactly one residue
class mod 2^k, and the witness can be built bit by bit.

The inversion never searches. Flipping the i-th parity of the current
candidate only requires adding 2^i, because that addition shifts the
i-th iterate by an odd multiple of 3^(number of odd steps so far).
"""

from conjlab.parity import bijection_check, parity_vector, realize

# exhaustive check at small k: residues {1..2^k} <-> bit patterns
for k in (1, 4, 8, 12):
    print(f"k={k:2d} bijection: {bijection_check(k)}")

# invert a pattern nothing obvious satisfies
x = (1, 1, 0, 1, 0, 0, 1, 1, 1, 0, 1, 0)
r = realize(x)
print(f"pattern {''.join(map(str, x))} -> witness {r.witness} (residue {r.residue} mod 2^{r.k})")
print(f"round trip ok: {parity_vector(r.witness, r.k).bits == x}")

# the witness is minimal: nothing smaller shares the pattern
smaller = [n for n in range(1, r.witness) if parity_vector(n, r.k).bits == x]
print(f"smaller realizations below witness: {smaller}")

# all-ones is the pattern of 2^k - 1 (the slowest climbers)
for k in (3, 5, 10, 20):
    w = realize("1" * k).witness
    print(f"all-ones k={k:2d}: witness {w} = 2^{k}-1 is {w == 2**k - 1}")
