#!/usr/bin/env python3
"""Show the self-correcting error ratio of the unified eviction policy.

A calm stream suddenly floods with long, overlapping transactions; the
candidate table explodes past the budget k, forcing size-driven eviction
and a spike in the error ratio delta/i above epsilon. Once the flood
passes, eviction is epsilon-driven again and the ratio drifts back down
on its own. The run prints a coarse sparkline of delta/i over time.
"""

from parasol import StreamState, burst_stream, process_transaction

EPS = 0.015
K = 400

stream = burst_stream()
state = StreamState(k=K, epsilon=EPS)
ratios = []
for t in stream:
    process_transaction(state, t)
    ratios.append(state.delta / state.i)

peak = max(ratios)
peak_i = ratios.index(peak) + 1
print(f"n={state.i}  k(n)={len(state.table)}  delta={state.delta}")
print(f"epsilon={EPS}  peak ratio={peak:.4f} at i={peak_i}  final={ratios[-1]:.4f}")

BARS = " .:-=+*#%@"
width = 80
bucket = max(1, len(ratios) // width)
print("\nerror ratio over time (each column = "
      f"{bucket} transactions, scaled to the peak):")
row = []
for j in range(0, len(ratios), bucket):
    chunk = ratios[j : j + bucket]
    level = max(chunk) / peak
    row.append(BARS[min(len(BARS) - 1, int(level * (len(BARS) - 1)))])
print("".join(row))
marker = ["-"] * len(row)
for j in range(0, len(ratios), bucket):
    if any(r > EPS for r in ratios[j : j + bucket]):
        marker[j // bucket] = "^"
print("".join(marker))
print("(^ marks stretches where the ratio exceeded epsilon)")
