"""Exact minimum-color search, partition census and implication scanning.

Two independent engines compute the minimum number of colors a constraint
allows:

* :func:`min_colors_bb` -- depth-first branch and bound over canonical colorings,
  optionally split across worker processes.
* :func:`min_colors_exhaustive` -- a vectorized scan of every set partition of
  the edges, used as the oracle for the former.

Both return the lexicographically smallest canonical optimal coloring.
"""
from __future__ import annotations

import multiprocessing as mp
import os
import time
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import numpy as np

from .colorings import Coloring
from .constraints import Constraint, verify
from .construct import rainbow
from .errors import BudgetError, DomainError
from .graphs import GraphSpec, check_admissible, members
from .partitions import bell, rgs_blocks

EXHAUSTIVE_CAP = 12
DEFAULT_MAX_NODES = 10**8


@dataclass(frozen=True)
class Budget:
    max_nodes: Optional[int] = DEFAULT_MAX_NODES
    max_seconds: Optional[float] = None

    def __post_init__(self):
        if self.max_nodes is not None and self.max_nodes <= 0:
            raise DomainError("max_nodes must be positive")
        if self.max_seconds is not None and self.max_seconds <= 0:
            raise DomainError("max_seconds must be positive")


@dataclass
class SearchResult:
    min_colors: int
    optimal: Coloring
    nodes_explored: int
    proven_optimal: bool
    elapsed: float


@dataclass
class CensusReport:
    spec: GraphSpec
    constraints: list[Constraint]
    total: int
    pass_counts: list[int]
    # contains[i][j]: every partition passing constraints[i] also passes constraints[j]
    contains: list[list[bool]]
    counterexamples: dict[tuple[int, int], Coloring] = field(default_factory=dict)


def default_threads() -> int:
    env = os.environ.get("RAINBOWLAB_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise DomainError(f"RAINBOWLAB_THREADS must be an integer, got {env!r}") from None
    return os.cpu_count() or 1


# ---------------------------------------------------------------------------
# Branch and bound
# ---------------------------------------------------------------------------

class _Exhausted(Exception):
    pass


class _Search:
    """Mutable DFS state for one (spec, constraint) pair.

    Each member keeps a slack: how many more repeated colors it can absorb before
    dropping below q distinct colors. A branch dies as soon as any slack goes
    negative.
    """

    def __init__(self, spec: GraphSpec, k: Constraint, best: int, best_colors: Sequence[int],
                 max_nodes: Optional[int], deadline: Optional[float], shared=None):
        self.m = spec.edge_count
        ms = members(spec, k.family)
        self.mem_of: list[list[int]] = [[] for _ in range(self.m)]
        for i, mem in enumerate(ms):
            for e in mem:
                self.mem_of[e].append(i)
        self.slack = [len(mem) - k.q for mem in ms]
        self.cnt = [0] * (len(ms) * max(self.m, 1))
        self.colors = [0] * self.m
        self.best = best
        self.best_colors = tuple(best_colors)
        self.found = False
        self.nodes = 0
        self.max_nodes = max_nodes
        self.deadline = deadline
        # shared = (best Value, nodes Value) when running under a worker pool
        self.shared = shared
        self._flushed = 0
        self._check_at = self._next_check()

    def assign(self, e: int, col: int) -> bool:
        ok = True
        m, cnt, slack = self.m, self.cnt, self.slack
        for i in self.mem_of[e]:
            idx = i * m + col
            if cnt[idx]:
                slack[i] -= 1
                if slack[i] < 0:
                    ok = False
            cnt[idx] += 1
        self.colors[e] = col
        return ok

    def unassign(self, e: int, col: int) -> None:
        m, cnt, slack = self.m, self.cnt, self.slack
        for i in self.mem_of[e]:
            idx = i * m + col
            cnt[idx] -= 1
            if cnt[idx]:
                slack[i] += 1

    def bound(self) -> int:
        """Branches must stay strictly below this many colors."""
        if self.shared is None:
            return self.best
        # Ties with the global best are kept alive so the lexicographically first
        # optimum in every subtree survives, whatever the schedule.
        return min(self.best, self.shared[0].value + 1)

    def _next_check(self) -> int:
        step = self.nodes + 1024
        if self.shared is None and self.max_nodes is not None:
            step = min(step, self.max_nodes + 1)
        return step

    def tick(self) -> None:
        if self.shared is not None:
            with self.shared[1].get_lock():
                self.shared[1].value += self.nodes - self._flushed
                total = self.shared[1].value
            self._flushed = self.nodes
        else:
            total = self.nodes
        if self.max_nodes is not None and total > self.max_nodes:
            raise _Exhausted
        if self.deadline is not None and time.perf_counter() > self.deadline:
            raise _Exhausted
        self._check_at = self._next_check()

    def record(self, used: int) -> None:
        self.best = used
        self.best_colors = tuple(self.colors)
        self.found = True
        if self.shared is not None:
            with self.shared[0].get_lock():
                if used < self.shared[0].value:
                    self.shared[0].value = used

    def dfs(self, e: int, used: int) -> None:
        self.nodes += 1
        if self.nodes >= self._check_at:
            self.tick()
        if e == self.m:
            if used < self.best:
                self.record(used)
            return
        bound = self.bound()
        if used >= bound:
            return
        limit = used + 1 if used + 1 < bound else used
        for col in range(limit):
            if self.assign(e, col):
                self.dfs(e + 1, used + 1 if col == used else used)
            self.unassign(e, col)

    def prefixes(self, depth: int) -> list[tuple[int, ...]]:
        """Feasible canonical prefixes of length ``depth``, in lexicographic order."""
        out: list[tuple[int, ...]] = []

        def walk(e, used):
            if e == depth:
                out.append(tuple(self.colors[:depth]))
                return
            limit = used + 1 if used + 1 < self.best else used
            for col in range(limit):
                if self.assign(e, col):
                    walk(e + 1, used + 1 if col == used else used)
                self.unassign(e, col)

        walk(0, 0)
        return out


def _incumbent(spec: GraphSpec, k: Constraint) -> Coloring:
    start = rainbow(spec)
    if not verify(start, k):
        raise DomainError(f"no coloring of {spec} satisfies {k}")
    return start


def min_colors_bb(spec: GraphSpec, k: Constraint, budget: Optional[Budget] = None,
                  threads: int = 1) -> SearchResult:
    """Minimum colors for ``k`` on ``spec`` by branch and bound.

    Edges are colored in index order and edge e may only use colors up to one
    more than the largest color on earlier edges, which removes all
    color-permutation symmetry. If the budget runs out the best coloring found
    so far is returned with ``proven_optimal=False``.
    """
    check_admissible(spec, k.family)
    budget = budget or Budget()
    if threads < 1:
        raise DomainError("threads must be at least 1")
    t0 = time.perf_counter()
    start = _incumbent(spec, k)
    deadline = t0 + budget.max_seconds if budget.max_seconds is not None else None

    if threads == 1 or spec.edge_count < 4:
        s = _Search(spec, k, spec.edge_count, start.colors, budget.max_nodes, deadline)
        proven = True
        try:
            s.dfs(0, 0)
        except _Exhausted:
            proven = False
        return SearchResult(s.best, Coloring(spec, s.best_colors), s.nodes, proven,
                            time.perf_counter() - t0)
    return _parallel_bb(spec, k, budget, threads, start, deadline, t0)


_shared = None


def _init_worker(best_value, nodes_value):
    global _shared
    _shared = (best_value, nodes_value)


def _run_prefix(args):
    spec, k, prefix, start_best, start_colors, max_nodes, deadline = args
    s = _Search(spec, k, start_best, start_colors, max_nodes, deadline, shared=_shared)
    used = 0
    for e, col in enumerate(prefix):
        s.assign(e, col)
        used = max(used, col + 1)
    proven = True
    try:
        s.dfs(len(prefix), used)
        s.tick()
    except _Exhausted:
        proven = False
    return s.best if s.found else None, s.best_colors, s.nodes, proven


def _parallel_bb(spec, k, budget, threads, start, deadline, t0) -> SearchResult:
    m = spec.edge_count
    probe = _Search(spec, k, m, start.colors, None, None)
    depth = 1
    tasks = probe.prefixes(depth)
    while len(tasks) < 8 * threads and depth < m - 1:
        depth += 1
        tasks = probe.prefixes(depth)

    ctx = mp.get_context("fork")
    best_value = ctx.Value("i", m)
    nodes_value = ctx.Value("q", 0)
    args = [(spec, k, p, m, start.colors, budget.max_nodes, deadline) for p in tasks]
    with ctx.Pool(threads, initializer=_init_worker, initargs=(best_value, nodes_value)) as pool:
        results = pool.map(_run_prefix, args, chunksize=1)

    best, best_colors = m, start.colors
    nodes = 0
    proven = True
    # Tasks are in lexicographic prefix order, so a strict comparison keeps the
    # lexicographically first optimum.
    for value, colors, n_nodes, ok in results:
        nodes += n_nodes
        proven = proven and ok
        if value is not None and value < best:
            best, best_colors = value, colors
    return SearchResult(best, Coloring(spec, best_colors), nodes, proven,
                        time.perf_counter() - t0)


# ---------------------------------------------------------------------------
# Exhaustive scans over all set partitions
# ---------------------------------------------------------------------------

def _check_cap(spec: GraphSpec) -> None:
    if spec.edge_count > EXHAUSTIVE_CAP:
        raise BudgetError(
            f"{spec} has {spec.edge_count} edges; exhaustive scans are capped at {EXHAUSTIVE_CAP}")


def pass_mask(block: np.ndarray, spec: GraphSpec, k: Constraint) -> np.ndarray:
    """Boolean mask of the rows of ``block`` (colorings) that satisfy ``k``."""
    ok = np.ones(len(block), dtype=bool)
    for mem in members(spec, k.family):
        if len(mem) < k.q:
            ok[:] = False
            break
        sub = np.sort(block[:, list(mem)], axis=1)
        distinct = 1 + np.count_nonzero(np.diff(sub, axis=1), axis=1)
        ok &= distinct >= k.q
    return ok


def min_colors_exhaustive(spec: GraphSpec, k: Constraint) -> SearchResult:
    """Minimum colors for ``k`` by scanning every partition of the edge set."""
    check_admissible(spec, k.family)
    _check_cap(spec)
    t0 = time.perf_counter()
    best = None
    best_row = None
    scanned = 0
    for block in rgs_blocks(spec.edge_count):
        scanned += len(block)
        ok = pass_mask(block, spec, k)
        if not ok.any():
            continue
        ncolors = np.where(ok, block.max(axis=1, initial=-1).astype(np.int64) + 1,
                           np.iinfo(np.int64).max)
        i = int(np.argmin(ncolors))
        if best is None or ncolors[i] < best:
            best = int(ncolors[i])
            best_row = block[i]
    if best is None:
        raise DomainError(f"no coloring of {spec} satisfies {k}")
    return SearchResult(best, Coloring(spec, best_row.tolist()), scanned, True,
                        time.perf_counter() - t0)


def census(spec: GraphSpec, ks: Iterable[Constraint]) -> CensusReport:
    """Evaluate every constraint on every partition of the edges of ``spec``."""
    ks = list(ks)
    for k in ks:
        check_admissible(spec, k.family)
    _check_cap(spec)
    r = len(ks)
    counts = [0] * r
    contains = [[True] * r for _ in range(r)]
    examples: dict[tuple[int, int], Coloring] = {}
    for block in rgs_blocks(spec.edge_count):
        masks = [pass_mask(block, spec, k) for k in ks]
        for i in range(r):
            counts[i] += int(masks[i].sum())
            for j in range(r):
                if i == j or (i, j) in examples:
                    continue
                bad = np.flatnonzero(masks[i] & ~masks[j])
                if len(bad):
                    contains[i][j] = False
                    examples[(i, j)] = Coloring(spec, block[bad[0]].tolist())
    return CensusReport(spec, ks, bell(spec.edge_count), counts, contains, examples)


def implication_scan(spec: GraphSpec, a: Constraint, b: Constraint) -> Optional[Coloring]:
    """First canonical coloring (in RGS order) that passes ``a`` but fails ``b``."""
    check_admissible(spec, a.family)
    check_admissible(spec, b.family)
    _check_cap(spec)
    if a == b:
        return None
    for block in rgs_blocks(spec.edge_count):
        bad = np.flatnonzero(pass_mask(block, spec, a) & ~pass_mask(block, spec, b))
        if len(bad):
            return Coloring(spec, block[bad[0]].tolist())
    return None
