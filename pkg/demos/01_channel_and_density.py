"""Burst deletions, the 0^k 1^k marker and dense strings.

Run with ``python3 demos/01_channel_and_density.py``.  Cells are separated by
``# %%`` so the file also opens as a notebook in editors that support it.
"""

# %%
import numpy as np

from burstcodes import apply_burst, ball_exact, ball_upto, burst_pattern, gap_vector, indicator, is_dense
from burstcodes.pattern import dense_count_exact, dense_fraction_mc, nondense_bound

# %% A burst keeps a prefix of length ell and drops the next k' symbols.
x = "01010011000110"
print("x              ", x)
for ell in (0, 4, 12):
    print(f"ell={ell:2d}, k'=2    ", apply_burst(x, ell, 2))

# Bursts inside a run give the same output, so balls are often small.
print("|B_2(x)| =", len(ball_exact(x, 2)), " |B_<=2(x)| =", len(ball_upto(x, 2)))

# %% The marker p = 0011 and the gaps between its occurrences.
p = burst_pattern(2)
print("indicator", indicator(x, p), " gaps", gap_vector(x, p))

# A string is (p, delta)-dense when every window of delta symbols holds p.
for delta in (6, 8, 10):
    print(f"dense at delta={delta}: {is_dense(x, p, delta)}")

# %% How many strings are dense?  Exact counts for small n.
print("\n n  delta  dense fraction (k=2)")
for n in (10, 12, 14, 16):
    for delta in (8, 10, 12):
        frac = dense_count_exact(n, p, delta) / 2**n
        print(f"{n:2d}  {delta:5d}  {frac:.4f}")

# %% For long strings the union bound n^(1 - log2 e) caps the non-dense share.
# With k = 1 and delta = 8 * ceil(log2 n) the actual share is far smaller.
rows = []
for logn in (8, 10, 12):
    n = 2**logn
    est = dense_fraction_mc(n, "01", 8 * logn, samples=5000, seed=logn)
    rows.append((n, 8 * logn, est.nondense_fraction, nondense_bound(n)))
table = np.array(rows)
print("\n     n  delta  non-dense   bound")
for n, delta, frac, bound in table:
    print(f"{int(n):6d}  {int(delta):5d}  {frac:9.5f}  {bound:.5f}")
