"""Why orbits should fall: the multiplicative walk model.

Odd steps multiply by about 3/2, even steps by exactly 1/2. If parities
were fair coin flips the log of an orbit would drift down at
(1/2) log(3/4) = -0.1438 per step, and measured orbit parities are very
close to fair, which is the heuristic (not a proof, the whole point of
the exercise) for universal descent."""

from conjlab.stochastic import (
    WalkConfig,
    empirical_parity_frequency,
    expected_step_drift,
    heuristic_walk,
)

model = expected_step_drift()
print(f"model drift/step: {model:+.6f}")

for steps in (100, 10_000, 1_000_000):
    s = heuristic_walk(WalkConfig(trials=200, steps=steps, seed=8))
    sig = abs(s.mean_step_drift - model) / s.std_error if s.std_error else 0.0
    print(f"steps {steps:>8d}: drift {s.mean_step_drift:+.6f} "
          f"(se {s.std_error:.2e}, {sig:.2f} sigma off), "
          f"descended {s.fraction_descended:.0%}")

# biased coins change the sign of the story
for p in (0.0, 0.5, 0.63, 1.0):
    print(f"p_odd={p:.2f}: model drift {expected_step_drift(p):+.5f}")

# do real orbits flip fair coins? pool parities over many starts
for lo, count in ((3, 5_000), (2**20, 5_000), (2**40, 5_000)):
    f = empirical_parity_frequency(lo, count, 64)
    print(f"odd fraction near {lo:>15d}: {f:.4f}")
