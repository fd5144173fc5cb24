#!/usr/bin/env python3
"""Walk a tiny stream through the miner and read the guarantees off it.

The stream is five transactions over the items 1..5; the budget k=3 is
deliberately too small, so the engine must evict and accumulate error.
The point to watch: even after heavy eviction, every frequent itemset is
still covered by some surviving superset within the tracked error.
"""

from parasol import (
    StreamState,
    Transaction,
    delta_compress,
    enumerate_fis,
    process_transaction,
    query,
    true_support,
    verify_delta_covered_set,
)

UNIVERSE = (1, 2, 3, 4, 5)
stream = [
    Transaction(tuple(x for x in UNIVERSE if x != i), i) for i in range(1, 5)
]
stream.append(Transaction((1, 3, 5), 5))

state = StreamState(k=3)
for t in stream:
    process_transaction(state, t)
    print(f"i={state.i}  entries={len(state.table)}  max_error={state.delta}")

print("\nstored entries (itemset, estimated count, error bound):")
for e in state.snapshot():
    s = true_support(stream, e.alpha)
    print(f"  {e.alpha}  count={e.count} err={e.err}   true support={s}"
          f"   bracket holds: {e.count - e.err <= s <= e.count}")

sigma = 0.6
res = query(state, sigma)
print(f"\nquery at sigma={sigma}: threshold count > {sigma * state.i}")
for e in res.entries:
    print(f"  {e.alpha}  ({e.count}, {e.err})")
print("guarantee weak?", res.weak_guarantee)

fis = enumerate_fis(stream, sigma)
print(f"\ntrue frequent itemsets at sigma={sigma}: {sorted(fis)}")
print(
    "every one covered within delta:",
    verify_delta_covered_set(res.entries, stream, sigma, state.delta),
)

compact = delta_compress(state.snapshot(), state.delta)
print("\nafter compression:")
for e in compact:
    print(f"  {e.alpha}  ({e.count}, {e.err})")
