"""Constraint families over colorings and their verification."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Optional

from .colorings import Coloring, colors_on, vertex_palette
from .errors import DomainError
from .graphs import (BIPARTITE2, PATHS_CYCLES, SMALL_FOUR, U, V, Family, bicolumns,
                     check_admissible, cliques, count_members, first_member_containing,
                     members)


@dataclass(frozen=True)
class Constraint:
    """Every member of ``family`` must carry at least ``q`` distinct colors."""

    family: Family
    q: int
    name: str = ""

    def __post_init__(self):
        if not isinstance(self.q, int) or self.q < 1:
            raise DomainError(f"q must be a positive integer, got {self.q!r}")
        if not self.name:
            object.__setattr__(self, "name", f"{self.family}>={self.q}")

    def __str__(self) -> str:
        return self.name


C59 = Constraint(cliques(5), 9, "c59")
B235 = Constraint(bicolumns(3), 5, "b235")
B247 = Constraint(bicolumns(4), 7, "b247")
PC3 = Constraint(PATHS_CYCLES, 3, "pc3")
SFE3 = Constraint(SMALL_FOUR, 3, "sfe3")

NAMED: dict[str, Constraint] = {k.name: k for k in (C59, B235, B247, PC3, SFE3)}


def named(name: str) -> Constraint:
    try:
        return NAMED[name.strip().lower()]
    except KeyError:
        raise DomainError(
            f"unknown constraint {name!r}; expected one of {', '.join(NAMED)}") from None


@dataclass(frozen=True)
class Witness:
    edges: tuple[int, ...]
    observed: int
    required: int


@dataclass(frozen=True)
class Verdict:
    passed: bool
    witness: Optional[Witness] = None
    violations: Optional[int] = None  # only filled in exhaustive mode

    def __bool__(self) -> bool:
        return self.passed


def verify(c: Coloring, k: Constraint, exhaustive: bool = False) -> Verdict:
    """Check ``c`` against ``k``.

    The witness is always the first violating member in enumeration order. With
    ``exhaustive=True`` every member is checked and the number of violations is
    reported as well.
    """
    check_admissible(c.spec, k.family)
    if not exhaustive:
        cores = _violation_cores(c, k)
        if cores is not None:
            return _verify_from_cores(c, k, cores)
    return _verify_members(c, k, exhaustive)


def _verify_members(c: Coloring, k: Constraint, exhaustive: bool) -> Verdict:
    colors = c.colors
    q = k.q
    witness = None
    violations = 0
    for m in members(c.spec, k.family):
        seen = len({colors[e] for e in m})
        if seen < q:
            if witness is None:
                witness = Witness(m, seen, q)
                if not exhaustive:
                    break
            violations += 1
    return Verdict(witness is None, witness, violations if exhaustive else None)


def _violation_cores(c: Coloring, k: Constraint,
                     force: bool = False) -> Optional[list[tuple[int, ...]]]:
    """Minimal edge sets whose presence makes a member violate ``k``.

    A member violates when it holds more than ``size - q`` repeated colors. For a
    slack of 0 the cores are same-colored edge pairs; for a slack of 1 they are
    monochromatic triples and pairs of same-colored pairs in two different
    colors. Returns None when member enumeration is the cheaper route (or the
    slack is outside {0, 1}).
    """
    slack = k.family.member_size() - k.q
    if slack not in (0, 1):
        return None
    groups: dict[int, list[int]] = {}
    for e, col in enumerate(c.colors):
        groups.setdefault(col, []).append(e)
    multi = [g for g in groups.values() if len(g) > 1]
    pair_counts = [comb(len(g), 2) for g in multi]
    # Padding a clique or column core is cheap; growing a short core into a
    # 4-edge member scans one extra edge per missing edge.
    four_edge = k.family.kind in (PATHS_CYCLES.kind, SMALL_FOUR.kind)
    m = c.spec.edge_count
    if slack == 0:
        cost = sum(pair_counts) * (m * m if four_edge else 1)
    else:
        total = sum(pair_counts)
        cost = sum(comb(len(g), 3) for g in multi) * (m if four_edge else 1) \
            + (total * total - sum(x * x for x in pair_counts)) // 2
    if not force and cost >= count_members(c.spec, k.family):
        return None
    if slack == 0:
        return [p for g in multi for p in combinations(g, 2)]
    cores = [t for g in multi for t in combinations(g, 3)]
    pairs = [[p for p in combinations(g, 2)] for g in multi]
    for i in range(len(pairs)):
        for j in range(i + 1, len(pairs)):
            cores.extend(a + b for a in pairs[i] for b in pairs[j])
    return cores


def _verify_from_cores(c: Coloring, k: Constraint, cores) -> Verdict:
    # Every violating member contains a core, so the least member over all cores
    # is the first violation in enumeration order.
    first = None
    for core in cores:
        m = first_member_containing(c.spec, k.family, core)
        if m is not None and (first is None or m < first):
            first = m
    if first is None:
        return Verdict(True)
    return Verdict(False, Witness(first, colors_on(c, first), k.q))


@dataclass(frozen=True)
class Eq1Stats:
    shared: int
    symdiff: int
    union: int
    eq1_holds: bool
    eq2_holds: bool


def eq1_stats(c: Coloring) -> Eq1Stats:
    """Palette statistics of the two left vertices of a K_{2,n} coloring.

    ``eq1_holds`` tests |c(u) & c(v)| <= floor(|c(u) ^ c(v)| / 2) and
    ``eq2_holds`` tests |c(u) | c(v)| >= ceil(3n/2). Nothing is asserted here;
    both flags are only claimed under extra hypotheses on the coloring.
    """
    if c.spec.kind != BIPARTITE2:
        raise DomainError(f"eq1_stats needs a bipartite2 coloring, got {c.spec}")
    pu = vertex_palette(c, U)
    pv = vertex_palette(c, V)
    shared = len(pu & pv)
    symdiff = len(pu ^ pv)
    union = len(pu | pv)
    n = c.spec.n
    return Eq1Stats(shared, symdiff, union,
                    eq1_holds=shared <= symdiff // 2,
                    eq2_holds=union >= -(-3 * n // 2))
