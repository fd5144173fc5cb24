"""The flat mining loop: incremental intersection plus min-entry eviction.

Each arriving transaction is intersected with every stored itemset; the
resulting candidates replace or extend the table, then the configured
deletion policy trims it. Deleting a minimum entry folds its count into
the running maximum error delta, so every surviving entry keeps the
bracket count - err <= support <= count, and the table stays a
delta-covered summary of the frequent itemsets.

Two deletion policies are provided. `rc_delete` evicts only while the
table exceeds the size budget k. `parasol_delete` additionally evicts
while the minimum count is at most epsilon * i, which keeps delta below
epsilon * i whenever the size budget never binds; after a burst forces
size-driven evictions, the error ratio delta/i decays back toward
epsilon on its own as i grows.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Union

from .itemsets import Entry, Items, Transaction
from .table import EntryTable
from .wtree import WeepingTree


class TimestampGap(ValueError):
    """Raised when a transaction's timestamp is not the next consecutive one."""


@dataclass(frozen=True)
class StepStats:
    """Work accounting for one processed transaction."""

    i: int
    pre_size: int  # entries before the update
    intersections: int  # candidate intersections computed (<= pre_size + 1)
    peak_size: int  # entries after the update, before eviction (<= 2k + 1)
    post_size: int  # entries after eviction (<= k)
    visits: int  # tree nodes touched; == intersections on the flat backend


@dataclass
class StreamState:
    """Single-writer mining state advanced one transaction at a time.

    k is the size budget (math.inf = unbounded); epsilon enables the
    unified deletion policy, None means size-only eviction. Exact mining
    is the configuration k=inf with epsilon None (or 0): nothing is ever
    evicted and the table holds exactly the closed itemsets.
    """

    k: float = math.inf
    epsilon: float | None = None
    backend: str = "flat"
    i: int = 0
    delta: int = 0
    table: Union[EntryTable, WeepingTree] = None  # type: ignore[assignment]
    metrics: list[tuple[int, int, int]] = field(default_factory=list)
    steps: list[StepStats] = field(default_factory=list)

    def __post_init__(self) -> None:
        if self.k != math.inf and (self.k < 1 or int(self.k) != self.k):
            raise ValueError("k must be a positive integer or math.inf")
        if self.epsilon is not None and not 0.0 <= self.epsilon < 1.0:
            raise ValueError("epsilon must lie in [0, 1)")
        if self.table is None:
            if self.backend == "flat":
                self.table = EntryTable()
            elif self.backend == "wtree":
                self.table = WeepingTree()
            else:
                raise ValueError(f"unknown backend {self.backend!r}")

    def snapshot(self) -> list[Entry]:
        return self.table.snapshot()


@dataclass(frozen=True)
class QueryResult:
    """Anytime query output: entries whose count clears the threshold.

    weak_guarantee flags that delta exceeded sigma * i, in which case the
    covering guarantee does not hold; the entries are still returned.
    """

    entries: list[Entry]
    weak_guarantee: bool
    sigma: float
    i: int
    delta: int


def intersect_step(table: EntryTable, t: Transaction, delta_prev: int) -> EntryTable:
    """Fold one transaction into the table; no eviction happens here.

    If the transaction's itemset is new it is inserted first with estimate
    (delta_prev, delta_prev) so it takes part in the intersection sweep;
    its count therefore ends at delta_prev + 1. Every stored itemset with
    a non-empty overlap contributes a candidate (overlap, count + 1, err);
    colliding candidates keep the maximum count, breaking count ties
    toward the smaller err. Candidates then replace or extend the table,
    except that an entry predating this step keeps its own err when its
    count rises by exactly one. The result has at most 2 * len + 1
    entries.
    """
    items = t.items
    if items not in table:
        table.insert(items, delta_prev, delta_prev, birth=t.timestamp, own=True)
        fresh = True
    else:
        fresh = False

    tset = set(items)
    buf: dict[Items, tuple[int, int]] = {}
    for alpha, rec in table.records():
        beta = tuple(x for x in alpha if x in tset)
        if not beta:
            continue
        cand = (rec[0] + 1, rec[1])
        prev = buf.get(beta)
        if prev is None or cand[0] > prev[0] or (cand[0] == prev[0] and cand[1] < prev[1]):
            buf[beta] = cand

    for beta, (count, err) in buf.items():
        old = table.get(beta)
        if old is None:
            table.insert(beta, count, err, birth=t.timestamp, own=(beta == items))
        elif beta == items and fresh:
            table.set_count(beta, count, err)
        elif count == old.count + 1:
            table.set_count(beta, count, old.err)
        else:
            table.set_count(beta, count, err)
    return table


def rc_delete(table: EntryTable, k: float, delta_prev: int) -> tuple[EntryTable, int]:
    """Evict minimum entries while the table exceeds k; returns the new delta."""
    delta = delta_prev
    while len(table) > k:
        _, count = table.pop_min()
        delta = max(delta, count)
    return table, delta


def parasol_delete(
    table: EntryTable, k: float, epsilon: float, i: int, delta_prev: int
) -> tuple[EntryTable, int]:
    """Evict while the table exceeds k or the minimum count is <= epsilon * i."""
    delta = delta_prev
    bound = epsilon * i
    while True:
        head = table.peek_min()
        if head is None:
            break
        _, count = head
        if len(table) <= k and count > bound:
            break
        table.pop_min()
        delta = max(delta, count)
    return table, delta


def process_transaction(state: StreamState, t: Transaction) -> StreamState:
    """Advance the state by one transaction: update, evict, record metrics."""
    if t.timestamp != state.i + 1:
        raise TimestampGap(f"expected timestamp {state.i + 1}, got {t.timestamp}")
    i = t.timestamp
    table = state.table
    pre = len(table)

    if isinstance(table, WeepingTree):
        visits, intersections = table.update(t.items, state.delta, i)
        peak = len(table)
        if state.epsilon is None:
            k = state.k
            delta = table.delete_minima(lambda c, size: size > k, state.delta)
        else:
            k, eps = state.k, state.epsilon
            delta = table.delete_minima(
                lambda c, size: size > k or c <= eps * i, state.delta
            )
    else:
        fresh = t.items not in table
        intersect_step(table, t, state.delta)
        peak = len(table)
        if state.epsilon is None:
            _, delta = rc_delete(table, state.k, state.delta)
        else:
            _, delta = parasol_delete(table, state.k, state.epsilon, i, state.delta)
        intersections = pre + 1 if fresh else pre  # every swept entry costs one
        visits = intersections

    state.i = i
    state.delta = delta
    state.metrics.append((i, len(table), delta))
    state.steps.append(StepStats(i, pre, intersections, peak, len(table), visits))
    return state


def query(state: StreamState, sigma: float) -> QueryResult:
    """Entries with count > sigma * i, as an immutable snapshot.

    When delta <= sigma * i the returned itemsets delta-cover every
    frequent itemset at threshold sigma; otherwise weak_guarantee is set.
    """
    if not 0.0 <= sigma <= 1.0:
        raise ValueError("sigma must lie in [0, 1]")
    threshold = sigma * state.i
    picked = [e for e in state.snapshot() if e.count > threshold]
    return QueryResult(
        entries=picked,
        weak_guarantee=state.delta > threshold,
        sigma=sigma,
        i=state.i,
        delta=state.delta,
    )


def replay(
    transactions,
    k: float = math.inf,
    epsilon: float | None = None,
    backend: str = "flat",
) -> StreamState:
    """Feed a whole finite stream through a fresh state; convenience wrapper."""
    state = StreamState(k=k, epsilon=epsilon, backend=backend)
    for t in transactions:
        process_transaction(state, t)
    return state
