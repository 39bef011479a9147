"""Systematic encoding: information word in, burst-protected codeword out.

The codeword has three segments: the densified information word, the
densified syndromes of that, and a repeated copy of the syndromes of the
syndromes.  Decoding runs right to left.
"""

# %%
import numpy as np

from burstcodes import PipelineParams, encode, pipeline_decode

# %% Segment layout for a few information lengths.
print("   d  k  delta    m1   m2   m3     n  redundancy  log-form")
for d in (16, 64, 256, 1024):
    for k in (2, 3):
        pp = PipelineParams(d, k)
        print(
            f"{d:4d}  {k}  {pp.delta:5d}  {pp.m1:4d} {pp.m2:4d} {pp.m3:4d}  {pp.length:4d}"
            f"  {pp.redundancy:10d}  {pp.target_redundancy():8.1f}"
        )
# The marker densifier costs 2k bits per block, so the measured redundancy
# grows with d instead of tracking the log-form.

# %% Round trips under random bursts.
pp = PipelineParams(64, 2)
rng = np.random.default_rng(2024)
ok = 0
trials = 500
for _ in range(trials):
    u = "".join(map(str, rng.integers(0, 2, size=pp.d)))
    x = str(encode(u, pp))
    kp = int(rng.integers(0, pp.k + 1))
    ell = int(rng.integers(0, len(x) - kp + 1))
    ok += pipeline_decode(x[:ell] + x[ell + kp :], pp) == u
print(f"\n{ok}/{trials} random bursts decoded at d={pp.d}, k={pp.k}, n={pp.length}")

# %% A burst straddling the first segment boundary.
u = "1" * 64
x = str(encode(u, pp))
y = x[: pp.m1 - 1] + x[pp.m1 + 1 :]
print("straddling burst decoded:", pipeline_decode(y, pp) == u)
