"""Explicit colorings: the ceil(3n/2)-color K_{2,n} coloring and trivial baselines."""
from __future__ import annotations

from .colorings import Coloring
from .errors import DomainError
from .graphs import GraphSpec


def construct_k2n(n: int) -> Coloring:
    """Color K_{2,n} with ceil(3n/2) colors so every K_{2,3} sees five colors.

    With r = n // 2, the edges (u, w_i) and (v, w_{n-1-i}) share color i for
    i < r. Every other edge gets its own fresh color, handed out in edge-index
    order, which keeps the result canonical.
    """
    if not isinstance(n, int) or n < 2:
        raise DomainError(f"construct_k2n needs n >= 2, got {n!r}")
    r = n // 2
    u_row = list(range(n))
    # v-edges on the first n - r columns are fresh; the last r reuse u's colors.
    v_row = [n + j if j < n - r else n - 1 - j for j in range(n)]
    return Coloring(GraphSpec.bipartite2(n), u_row + v_row)


def rainbow(spec: GraphSpec) -> Coloring:
    return Coloring(spec, range(spec.edge_count))


def monochrome(spec: GraphSpec) -> Coloring:
    return Coloring(spec, [0] * spec.edge_count)
