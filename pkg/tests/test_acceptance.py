"""Acceptance criteria 1-8, each reported as one PASS/FAIL line.

Run alone with ``pytest tests/test_acceptance.py -v``; the verdicts are
repeated in the terminal summary.
"""

import itertools
import math
import time

import numpy as np
import pytest

from burstcodes.bitseq import BitString
from burstcodes.burstcode import CodeParams, search_best, syndrome_space_size
from burstcodes.channel import apply_burst, is_burst_code
from burstcodes.errors import AmbiguityError, DecodeFailure
from burstcodes.pattern import count_patterns, dense_count_exact, dense_fraction_mc, gap_vector, nondense_bound
from burstcodes.sysenc import PipelineParams, encode, pipeline_decode, repetition_decode, repetition_encode
from burstcodes.vtcodes import SvtParams, svt_decode, vt_checksum

from conftest import all_strings, record
from sweeps import chosen_buckets, locate_sweep, random_words, roundtrip_sweep

CONFIGS = [CodeParams(n, k, delta) for n in (12, 14, 16) for k in (2, 3) for delta in (8, 10, 12)]
EXAMPLE = ["01010011000110", "10000111110011", "10010011100111"]


@pytest.fixture(scope="module")
def sweeps():
    """Bucket every configuration once and run the round-trip sweep on it."""
    out = {}
    for i, params in enumerate(CONFIGS):
        buckets, picked = chosen_buckets(params, seed=1000 + i)
        out[params] = (buckets, picked, roundtrip_sweep(params, buckets, picked))
    return out


def _label(params):
    return f"n={params.n},k={params.k},delta={params.delta}"


def test_criterion_1_example_code():
    start = time.perf_counter()
    disjoint = is_burst_code(EXAMPLE, 2)
    elapsed = time.perf_counter() - start
    c0 = [count_patterns(x, "0011") % 4 for x in EXAMPLE]
    c1 = [vt_checksum(gap_vector(x, "0011")) % 28 for x in EXAMPLE]
    ok = disjoint and elapsed < 1.0 and c0 == [2, 2, 2] and c1 == [2, 2, 2]
    record(1, ok, f"disjoint={disjoint} c0={c0} c1={c1} time={elapsed:.4f}s")
    assert ok


def test_criterion_2_roundtrip(sweeps):
    bad, vacuous, trials = [], [], 0
    for params, (buckets, picked, st) in sweeps.items():
        trials += st.trials
        if not buckets:
            vacuous.append(_label(params))
        elif st.buckets < min(4, len(buckets)) or st.wrong or st.failures or st.ambiguous:
            bad.append((_label(params), st.wrong, st.failures, st.ambiguous, st.examples[:2]))
    detail = f"{len(CONFIGS)} configs, {trials} decodes, failing={bad}"
    if vacuous:
        detail += f", no dense strings (vacuous) at {vacuous}"
    record(2, not bad, detail)
    assert not bad


def test_criterion_3_partition(sweeps):
    bad = []
    for params, (buckets, _, _) in sweeps.items():
        total = sum(len(ws) for ws in buckets.values())
        exact = dense_count_exact(params.n, "0" * params.k + "1" * params.k, params.delta)
        if total != exact:
            bad.append((_label(params), total, exact))
    record(3, not bad, f"{len(CONFIGS)} configs, mismatches={bad}")
    assert not bad


def test_criterion_4_pigeonhole(sweeps):
    bad, rows = [], []
    for params, (buckets, _, _) in sweeps.items():
        res = search_best(params, buckets)
        space = syndrome_space_size(params)
        # integer form of cardinality >= dense / space
        if res.cardinality * space < res.dense_count:
            bad.append(_label(params))
        rows.append(f"{res.cardinality}>={res.dense_count}/{space}")
    record(4, not bad, f"violations={bad}; best>=dense/space per config: " + " ".join(rows))
    assert not bad


def test_criterion_5_svt_window_decoding():
    n, decodes, bad = 12, 0, []
    words = all_strings(n)
    for p in (4, 6):
        for x in words:
            s = SvtParams(vt_checksum(x) % p, x.count("1") % 2, p, n)
            for ell in range(1, n + 1):
                y = x[: ell - 1] + x[ell:]
                # every interval of p - 1 positions that contains ell
                for lo in range(max(1, ell - p + 2), min(ell, n - p + 2) + 1):
                    decodes += 1
                    try:
                        if svt_decode(y, s, (lo, lo + p - 2)) != x:
                            bad.append((p, x, ell, lo))
                    except (DecodeFailure, AmbiguityError):
                        bad.append((p, x, ell, lo))
    # separation of colliding codewords
    collisions = violations = 0
    by_y = {}
    for x in words:
        for ell in range(1, n + 1):
            by_y.setdefault(x[: ell - 1] + x[ell:], {}).setdefault(x, []).append(ell)
    for pre in by_y.values():
        for (c, lc), (d, ld) in itertools.combinations(pre.items(), 2):
            if c.count("1") % 2 != d.count("1") % 2:
                continue
            diff = vt_checksum(c) - vt_checksum(d)
            gap = min(abs(a - b) for a in lc for b in ld)
            for p in (4, 6):
                if diff % p == 0:
                    collisions += 1
                    violations += gap < p
    ok = not bad and violations == 0
    record(5, ok, f"{decodes} windowed decodes, {len(bad)} wrong; {collisions} colliding pairs, {violations} closer than p")
    assert ok


def test_criterion_6_locator():
    bad, received, max_cands = [], 0, 0
    for params in CONFIGS:
        st = locate_sweep(params.n, params.k, params.delta)
        received += st.received
        max_cands = max(max_cands, st.max_candidates)
        if st.misses or st.too_long or st.out_of_range:
            bad.append((_label(params), len(st.misses), st.too_long, st.out_of_range, st.misses[:2]))
    record(6, not bad, f"{received} received strings, max {max_cands} candidates, failing={bad}")
    assert not bad


def _avoid_prob_exact(delta, p):
    """Probability that a uniform length-delta string has no copy of p (automaton count)."""
    m = len(p)
    fail = [0] * (m + 1)
    for i in range(1, m):
        j = fail[i]
        while j and p[i] != p[j]:
            j = fail[j]
        fail[i + 1] = j + 1 if p[i] == p[j] and i else 0
    counts = [1] + [0] * (m - 1)
    for _ in range(delta):
        nxt = [0] * m
        for state, c in enumerate(counts):
            for bit in "01":
                s = state
                while s and p[s] != bit:
                    s = fail[s]
                s = s + 1 if p[s] == bit else 0
                if s < m:
                    nxt[s] += c
        counts = nxt
    return sum(counts) / 2**delta


def test_criterion_7_density():
    start = time.perf_counter()
    exact_rows, exact_bad = [], []
    skipped = []
    for k in (1, 2, 3):
        p = "0" * k + "1" * k
        for n in range(5, 21):
            target = n ** (-math.log2(math.e))
            # smallest delta whose single-window miss probability meets the union-bound budget
            delta = next((d for d in range(2 * k + 1, n + 1) if _avoid_prob_exact(d, p) <= target), None)
            if delta is None:
                skipped.append((k, n))
                continue
            count = dense_count_exact(n, p, delta)
            bound = 2**n * (1 - nondense_bound(n))
            exact_rows.append(f"k={k},n={n},delta={delta}:{count}>={bound:.1f}")
            if count < bound:
                exact_bad.append((k, n, delta))
    est = dense_fraction_mc(2**14, "01", 112, 100_000, seed=7)
    limit = nondense_bound(2**14) + 3 * est.stderr
    mc_ok = est.nondense_fraction <= limit
    elapsed = time.perf_counter() - start
    ok = exact_rows and not exact_bad and mc_ok and elapsed < 60
    record(
        7,
        ok,
        f"exact: {len(exact_rows)} cases checked, violations={exact_bad}, "
        f"no admissible delta<=n for {len(skipped)} (k,n) pairs "
        f"(k=1: n={[n for kk, n in skipped if kk == 1]}, every n for k=2,3); "
        f"mc: nondense={est.nondense_fraction:.5f} <= {limit:.5f} "
        f"(bound {nondense_bound(2**14):.5f}, {est.samples} samples, seed {est.seed}); time={elapsed:.1f}s",
    )
    assert ok


def test_criterion_8_pipeline():
    bad = []
    rows = []
    for d, k in itertools.product((64, 256), (2, 3)):
        params = PipelineParams(d, k)
        rng = np.random.default_rng(8000 + 10 * d + k)
        words = random_words(rng, 10_000, d)
        kps = rng.integers(0, k + 1, size=len(words))
        for u, kp in zip(words, kps):
            x = str(encode(u, params))
            ell = int(rng.integers(0, len(x) - kp + 1))
            y = x[:ell] + x[ell + kp :]
            try:
                if pipeline_decode(y, params) != u:
                    bad.append((d, k, u, int(kp), ell))
            except (DecodeFailure, AmbiguityError) as exc:
                bad.append((d, k, u, int(kp), ell, str(exc)[:80]))
        rows.append(f"d={d},k={k}:10000 trials,n={params.length}")
    exhaustive = 0
    for k in (2, 3):
        params = PipelineParams(16, k)
        rng = np.random.default_rng(1600 + k)
        for u in random_words(rng, 20, 16) + ["0" * 16, "1" * 16]:
            x = str(encode(u, params))
            outs = [x] + [x[:e] + x[e + kp :] for kp in range(1, k + 1) for e in range(len(x) - kp + 1)]
            for y in outs:
                exhaustive += 1
                try:
                    if pipeline_decode(y, params) != u:
                        bad.append((16, k, u))
                except (DecodeFailure, AmbiguityError):
                    bad.append((16, k, u))
    rep_cases = 0
    for k in (1, 2, 3):
        for m in range(1, 9):
            for u in map("".join, itertools.product("01", repeat=m)):
                x = str(repetition_encode(u, k))
                for kp in range(0, k + 1):
                    for e in range(len(x) - kp + 1 if kp else 1):
                        rep_cases += 1
                        if repetition_decode(x[:e] + x[e + kp :], m, k) != u:
                            bad.append(("rep", k, u, kp, e))
    record(
        8,
        not bad,
        f"{'; '.join(rows)}; d=16 exhaustive over {exhaustive} received strings; "
        f"repetition rule {rep_cases} cases; failures={bad[:3]}",
    )
    assert not bad


@pytest.mark.parametrize("p", ["01", "0011", "000111", "0110"])
def test_avoidance_probability_matches_enumeration(p):
    for delta in range(len(p), 13):
        brute = sum(p not in x for x in all_strings(delta)) / 2**delta
        assert _avoid_prob_exact(delta, p) == pytest.approx(brute, abs=1e-15)
