"""Mertens partial sums against square-root growth.

M(n) sums the Mobius function. RH is equivalent to M(n) = O(n^(1/2+eps))
for every eps > 0, so the statistic sup |M(n)| / sqrt(n) staying small
(and in fact < 1 far beyond this desk) is the square-root cancellation
story in one number. A genuine +-1 random walk of the same length is
the yardstick: M is tamer than almost every walk."""

from conjlab.mobius import growth_statistic, mertens, random_walk_compare

N = 10_000_000
series = mertens(N)
print(f"M({N}) = {series.partial_sums[N]}  (range [{series.min}, {series.max}])")

for eps in (0.0, 0.01, 0.05):
    g = growth_statistic(series, eps)
    print(f"eps={eps:.2f}: sup |M(n)|/n^{0.5 + eps:.2f} = {g.sup_statistic:.6f} "
          f"at n={g.argmax_n}")

cmp = random_walk_compare(1_000_000, 200, seed=4, workers=8)
print(f"walks of length {cmp.walk_length} (squarefree count up to {cmp.n_limit}):")
print(f"  Mertens statistic   : {cmp.mertens_statistic:.4f}")
print(f"  mean walk statistic : {cmp.walk_mean_statistic:.4f}")
print(f"  percentile of M     : {cmp.percentile_rank:.0%} "
      f"(fraction of walks at or below M)")
print(f"  walk endpoint check : {cmp.mean_final_position:+.2f} "
      f"+- {cmp.final_position_sem:.2f}")
