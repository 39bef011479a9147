"""One burst, decoded step by step.

The locator narrows the burst to a short window of kept-prefix lengths.
Inside that window each residue subsequence lost exactly one symbol, which a
shifted VT code repairs.
"""

# %%
from burstcodes import CodeInstance, CodeParams, apply_burst, decode, enumerate_code, locate, search_best
from burstcodes.bitseq import residue_length
from burstcodes.burstcode import _residue_window
from burstcodes.errors import AmbiguityError, DecodeFailure
from burstcodes.locator import LocSyndromes
from burstcodes.vtcodes import SvtParams, svt_decode

# %% Pick the largest code at n = 16, k = 2, delta = 12 and one codeword.
params = CodeParams(16, 2, 12)
res = search_best(params)
code = CodeInstance(params, res.best)
x = enumerate_code(code)[0]
print("codeword x", x, " syndromes", res.best)

# %% Send it through the channel.
ell, kp = 7, 2
y = str(apply_burst(x, ell, kp))
print(f"burst at ell={ell}, length {kp}:  y = {y}")

# %% Step 1: locate.  The change in marker count picks the case; the gap
# VT deficit picks the gap.
loc = locate(y, params.pattern_params, LocSyndromes(res.best.c0, res.best.c1, params.n))
print("case", loc.case, "candidates", loc.candidates, "tags", loc.tags)

# %% Step 2: for each candidate window, repair every residue subsequence.
for lo, hi in loc.candidates:
    parts = []
    for i in range(1, kp + 1):
        length = residue_length(i, params.n, kp)
        window = _residue_window(lo, hi, i, kp, length)
        s = SvtParams(res.best.v_at(i, kp), res.best.b_at(i, kp), params.delta, length)
        try:
            parts.append(str(svt_decode(y[i - 1 :: kp], s, window)))
        except (DecodeFailure, AmbiguityError) as exc:  # wrong window
            parts.append(f"<{type(exc).__name__}>")
    print(f"window [{lo}, {hi}] -> residues {parts}")

# %% The decoder does all of this and keeps the one candidate that verifies.
print("decode(y) == x:", decode(y, code) == x)
