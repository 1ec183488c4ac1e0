"""Graph specifications, canonical edge indexing and subgraph-family enumeration.

Two graph kinds are supported:

* ``complete:n`` -- the complete graph K_n on vertices ``0..n-1``. Edges are
  indexed lexicographically over pairs ``(a, b)`` with ``a < b``.
* ``bipartite2:n`` -- K_{2,n}. Vertex ``0`` is ``u``, vertex ``1`` is ``v`` and
  column ``j`` (``w_j``) is vertex ``2 + j``. Edges are indexed row-major:
  ``(u, w_j) -> j`` and ``(v, w_j) -> n + j``.

Members of every subgraph family are returned as sorted tuples of edge ids, in
lexicographic order of those tuples.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb, perm
from typing import Iterable, Iterator, Optional, Sequence

from .errors import DomainError

COMPLETE = "complete"
BIPARTITE2 = "bipartite2"

U = 0
V = 1


@dataclass(frozen=True)
class GraphSpec:
    kind: str
    n: int

    def __post_init__(self):
        if self.kind not in (COMPLETE, BIPARTITE2):
            raise DomainError(f"unknown graph kind {self.kind!r}")
        if not isinstance(self.n, int) or self.n < 1:
            raise DomainError(f"graph size must be a positive integer, got {self.n!r}")

    @classmethod
    def complete(cls, n: int) -> "GraphSpec":
        return cls(COMPLETE, n)

    @classmethod
    def bipartite2(cls, n: int) -> "GraphSpec":
        return cls(BIPARTITE2, n)

    @classmethod
    def parse(cls, text: str) -> "GraphSpec":
        """Parse ``complete:N`` or ``bipartite2:N``."""
        kind, sep, size = text.strip().partition(":")
        if not sep:
            raise DomainError(f"graph spec must look like KIND:N, got {text!r}")
        try:
            n = int(size)
        except ValueError:
            raise DomainError(f"bad graph size in {text!r}") from None
        return cls(kind.lower(), n)

    def __str__(self) -> str:
        return f"{self.kind}:{self.n}"

    @property
    def is_complete(self) -> bool:
        return self.kind == COMPLETE

    @property
    def edge_count(self) -> int:
        if self.is_complete:
            return self.n * (self.n - 1) // 2
        return 2 * self.n

    @property
    def vertex_count(self) -> int:
        return self.n if self.is_complete else self.n + 2

    def vertices(self) -> range:
        return range(self.vertex_count)

    def column(self, j: int) -> int:
        """Vertex id of column ``w_j`` in a bipartite spec."""
        if self.is_complete:
            raise DomainError("columns exist only in bipartite2 specs")
        if not 0 <= j < self.n:
            raise DomainError(f"column {j} out of range for {self}")
        return 2 + j

    def degree(self, x: int) -> int:
        self.check_vertex(x)
        if self.is_complete:
            return self.n - 1
        return self.n if x in (U, V) else 2

    def check_vertex(self, x: int) -> None:
        if not isinstance(x, int) or not 0 <= x < self.vertex_count:
            raise DomainError(f"vertex {x!r} does not exist in {self}")

    def vertex_label(self, x: int) -> str:
        """Label used in coloring files: ``u``/``v`` for the left side, else the index."""
        self.check_vertex(x)
        if self.is_complete:
            return str(x)
        if x == U:
            return "u"
        if x == V:
            return "v"
        return str(x - 2)

    def vertex_from_label(self, label: str) -> int:
        label = label.strip()
        if not self.is_complete and label in ("u", "v"):
            return U if label == "u" else V
        try:
            idx = int(label)
        except ValueError:
            raise DomainError(f"bad vertex label {label!r} for {self}") from None
        if self.is_complete:
            self.check_vertex(idx)
            return idx
        return self.column(idx)


def edge_index(spec: GraphSpec, a: int, b: int) -> int:
    """Canonical id of the edge ``{a, b}``."""
    spec.check_vertex(a)
    spec.check_vertex(b)
    if a == b:
        raise DomainError("loops are not edges")
    if spec.is_complete:
        if a > b:
            a, b = b, a
        return a * spec.n - a * (a + 1) // 2 + (b - a - 1)
    if a > b:
        a, b = b, a
    if b <= V or a > V:
        raise DomainError(f"({a}, {b}) is not an edge of {spec}: same side of the bipartition")
    return a * spec.n + (b - 2)


def endpoints(spec: GraphSpec, e: int) -> tuple[int, int]:
    """Inverse of :func:`edge_index`: ``(a, b)`` with ``a < b``, or ``(left, column)``."""
    return edge_list(spec)[_check_edge(spec, e)]


def _check_edge(spec: GraphSpec, e: int) -> int:
    if not isinstance(e, int) or not 0 <= e < spec.edge_count:
        raise DomainError(f"edge id {e!r} out of range for {spec}")
    return e


@lru_cache(maxsize=None)
def edge_list(spec: GraphSpec) -> tuple[tuple[int, int], ...]:
    if spec.is_complete:
        return tuple(combinations(range(spec.n), 2))
    return tuple((left, 2 + j) for left in (U, V) for j in range(spec.n))


@lru_cache(maxsize=None)
def incident_edges(spec: GraphSpec) -> tuple[tuple[int, ...], ...]:
    """Edge ids incident to each vertex, in increasing order."""
    inc: list[list[int]] = [[] for _ in spec.vertices()]
    for e, (a, b) in enumerate(edge_list(spec)):
        inc[a].append(e)
        inc[b].append(e)
    return tuple(tuple(x) for x in inc)


# ---------------------------------------------------------------------------
# Subgraph families
# ---------------------------------------------------------------------------

CLIQUES = "cliques"
BICOLUMNS = "bicolumns"
PATHS_CYCLES4 = "paths_cycles4"
SMALL_FOUR_EDGE = "small_four_edge"


@dataclass(frozen=True)
class Family:
    """Identifier of a subgraph family; ``size`` is ``p`` for cliques, ``t`` for columns."""

    kind: str
    size: int = 0

    def __post_init__(self):
        if self.kind in (CLIQUES, BICOLUMNS):
            if not isinstance(self.size, int) or self.size < 1:
                raise DomainError(f"{self.kind} needs a positive size, got {self.size!r}")
        elif self.kind in (PATHS_CYCLES4, SMALL_FOUR_EDGE):
            if self.size != 0:
                raise DomainError(f"{self.kind} takes no size")
        else:
            raise DomainError(f"unknown family {self.kind!r}")

    def __str__(self) -> str:
        return f"{self.kind}({self.size})" if self.size else self.kind

    def member_size(self) -> int:
        if self.kind == CLIQUES:
            return comb(self.size, 2)
        if self.kind == BICOLUMNS:
            return 2 * self.size
        return 4


def cliques(p: int) -> Family:
    return Family(CLIQUES, p)


def bicolumns(t: int) -> Family:
    return Family(BICOLUMNS, t)


PATHS_CYCLES = Family(PATHS_CYCLES4)
SMALL_FOUR = Family(SMALL_FOUR_EDGE)


def check_admissible(spec: GraphSpec, family: Family) -> None:
    # A family larger than the graph is vacuous, not an error.
    if family.kind == CLIQUES and not spec.is_complete:
        raise DomainError(f"{family} requires a complete graph, got {spec}")
    if family.kind == BICOLUMNS and spec.is_complete:
        raise DomainError(f"{family} requires a bipartite2 graph, got {spec}")


def is_admissible(spec: GraphSpec, family: Family) -> bool:
    try:
        check_admissible(spec, family)
    except DomainError:
        return False
    return True


@lru_cache(maxsize=None)
def members(spec: GraphSpec, family: Family) -> tuple[tuple[int, ...], ...]:
    """All members of ``family`` in ``spec``, sorted lexicographically."""
    check_admissible(spec, family)
    if family.kind == CLIQUES:
        found = [_clique_edges(spec, vs) for vs in combinations(range(spec.n), family.size)]
    elif family.kind == BICOLUMNS:
        n = spec.n
        found = [cols + tuple(n + j for j in cols)
                 for cols in combinations(range(n), family.size)]
    elif family.kind == PATHS_CYCLES4:
        found = _paths_and_cycles(spec)
    else:
        found = _small_four_edge(spec)
    return tuple(sorted(found))


def enumerate_members(spec: GraphSpec, family: Family) -> Iterator[tuple[int, ...]]:
    """Yield every member of ``family`` once, as a sorted tuple of edge ids."""
    yield from members(spec, family)


@lru_cache(maxsize=None)
def member_masks(spec: GraphSpec, family: Family) -> tuple[int, ...]:
    return tuple(sum(1 << e for e in m) for m in members(spec, family))


def count_members(spec: GraphSpec, family: Family) -> int:
    check_admissible(spec, family)
    n = spec.n
    if family.kind == CLIQUES:
        return comb(n, family.size)
    if family.kind == BICOLUMNS:
        return comb(n, family.size)
    if family.kind == PATHS_CYCLES4:
        if spec.is_complete:
            return perm(n, 5) // 2 + 3 * comb(n, 4)
        # paths w-u-w-v-w (each counted once), cycles u-w-v-w
        return perm(n, 3) + comb(n, 2)
    if spec.is_complete:
        return sum(comb(n, k) * _spanning_quadruples(k) for k in (4, 5))
    # both sides on 2 or 3 columns, or one side on 4 columns
    return comb(n, 2) + 12 * comb(n, 3) + 2 * comb(n, 4)


def _spanning_quadruples(k: int) -> int:
    """Number of 4-edge sets in K_k that touch all k vertices (inclusion-exclusion)."""
    return sum((-1) ** j * comb(k, j) * comb(comb(k - j, 2), 4) for j in range(k + 1))


def _clique_edges(spec: GraphSpec, vs: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(sorted(edge_index(spec, a, b) for a, b in combinations(vs, 2)))


def _adjacency(spec: GraphSpec) -> list[set[int]]:
    adj: list[set[int]] = [set() for _ in spec.vertices()]
    for a, b in edge_list(spec):
        adj[a].add(b)
        adj[b].add(a)
    return adj


def _paths_and_cycles(spec: GraphSpec) -> set[tuple[int, ...]]:
    adj = _adjacency(spec)
    eid = {pair: e for e, pair in enumerate(edge_list(spec))}

    def edge_of(a, b):
        return eid[(a, b) if a < b else (b, a)]

    found: set[tuple[int, ...]] = set()

    def walk(seq):
        if len(seq) == 5:
            found.add(tuple(sorted(edge_of(seq[i], seq[i + 1]) for i in range(4))))
            return
        if len(seq) == 4 and seq[0] in adj[seq[3]]:
            cyc = seq + [seq[0]]
            found.add(tuple(sorted(edge_of(cyc[i], cyc[i + 1]) for i in range(4))))
        for nxt in adj[seq[-1]]:
            if nxt not in seq:
                walk(seq + [nxt])

    for start in spec.vertices():
        walk([start])
    return found


def vertex_span(spec: GraphSpec, edges: Iterable[int]) -> set[int]:
    ends = edge_list(spec)
    span: set[int] = set()
    for e in edges:
        span.update(ends[e])
    return span


def is_path_or_cycle(spec: GraphSpec, edges: Sequence[int]) -> bool:
    """True when four edges form a path on five vertices or a cycle on four."""
    if len(edges) != 4:
        return False
    ends = edge_list(spec)
    deg: dict[int, int] = {}
    for e in edges:
        for x in ends[e]:
            deg[x] = deg.get(x, 0) + 1
    degs = sorted(deg.values())
    if degs == [2, 2, 2, 2]:
        return True  # four vertices of degree two can only be C4
    if degs != [1, 1, 2, 2, 2]:
        return False
    # rule out a triangle plus a disjoint edge: walk from one leaf
    leaf = next(x for x, d in deg.items() if d == 1)
    remaining = [ends[e] for e in edges]
    at, steps = leaf, 0
    while True:
        nxt = next((pair for pair in remaining if at in pair), None)
        if nxt is None:
            break
        remaining.remove(nxt)
        at = nxt[0] if nxt[1] == at else nxt[1]
        steps += 1
    return steps == 4


def first_member_containing(spec: GraphSpec, family: Family,
                            core: Iterable[int]) -> Optional[tuple[int, ...]]:
    """Lexicographically first member of ``family`` that contains every edge of ``core``."""
    core = sorted(set(core))
    if family.kind in (CLIQUES, BICOLUMNS):
        if family.kind == CLIQUES:
            picked = vertex_span(spec, core)
        else:
            picked = {e % spec.n for e in core}
        if len(picked) > family.size:
            return None
        # Padding with the smallest unused vertices/columns gives the lex-first superset.
        for x in range(spec.n):
            if len(picked) == family.size:
                break
            picked.add(x)
        if len(picked) < family.size:
            return None
        chosen = sorted(picked)
        if family.kind == CLIQUES:
            return _clique_edges(spec, tuple(chosen))
        return tuple(chosen) + tuple(spec.n + j for j in chosen)

    if len(core) > 4:
        return None
    if family.kind == PATHS_CYCLES4:
        fits = lambda quad: is_path_or_cycle(spec, quad)  # noqa: E731
    else:
        fits = lambda quad: len(vertex_span(spec, quad)) <= 5  # noqa: E731
    if len(core) == 4:
        return tuple(core) if fits(core) else None
    rest = [e for e in range(spec.edge_count) if e not in core]
    best = None
    for extra in combinations(rest, 4 - len(core)):
        quad = tuple(sorted(core + list(extra)))
        if (best is None or quad < best) and fits(quad):
            best = quad
    return best


def _small_four_edge(spec: GraphSpec) -> list[tuple[int, ...]]:
    ends = edge_list(spec)
    out = []
    for quad in combinations(range(spec.edge_count), 4):
        span = set()
        for e in quad:
            span.update(ends[e])
        if len(span) <= 5:
            out.append(quad)
    return out
