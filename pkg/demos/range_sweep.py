"""Sweep a range of starts under a step budget and show that the report
does not depend on how the work was chunked or how many workers ran."""

from conjlab.collatz import total_stopping_time, trajectory, verify_range

LO, HI, BUDGET = 1, 2_000_000, 100_000

rep = verify_range(LO, HI, BUDGET)
print(f"[{LO}, {HI}] budget {BUDGET}")
print(f"  verified            : {rep.verified_count}")
print(f"  candidates          : {len(rep.counterexample_candidates)}")
print(f"  max stopping time   : {rep.max_stopping_time_seen}")
print(f"  chunks x wall       : {rep.chunk_count} x {rep.wall_time:.2f}s")

# same range, different chunking and worker count: identical report
alt = verify_range(LO, HI, BUDGET, chunk_size=1 << 12, workers=8)
print(f"  chunking-invariant  : {alt.to_json() == rep.to_json()}")

# the budget is a tool, not a verdict: a tiny budget manufactures
# candidates, and each candidate records where it was abandoned
tight = verify_range(27, 40, 4)
for c in tight.counterexample_candidates:
    print(f"  abandoned n={c.n} after {c.steps_taken} steps at {c.last_iterate}")

# the record holder in range, inspected directly
rec = max(
    (total_stopping_time(n, 10_000) for n in range(1, 100_000)),
    key=lambda r: r.total_stopping_time,
)
print(f"  slowest start below 1e5: {rec.n} ({rec.total_stopping_time} steps, "
      f"peak {rec.max_excursion})")

t = trajectory(27, 200)
print(f"  orbit of 27 visits {len(t.iterates)} values, peak {max(t.iterates)}")
