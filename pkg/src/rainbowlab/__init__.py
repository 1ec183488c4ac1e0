"""Exact small-case verification of rainbow-type edge-coloring constraints.

Covers (p,q)-colorings of K_n and (H,q)-colorings of K_{2,n}: constraint
verifiers with witnesses, the ceil(3n/2) construction for K_{2,n}, exact
minimum-color search with an exhaustive oracle, partition census, and the
closed-form bounds on f(n,5,9).
"""
from .bounds import bound_table, claimed_bound, eq3_min_s, reference_bounds
from .colorings import Coloring, canonicalize, color_classes, colors_on, vertex_palette
from .constraints import B235, B247, C59, NAMED, PC3, SFE3, Constraint, Verdict, Witness, eq1_stats, verify
from .construct import construct_k2n, monochrome, rainbow
from .errors import BudgetError, DomainError, RainbowLabError, StructuralError
from .graphs import (GraphSpec, Family, U, V, bicolumns, cliques, count_members, edge_index,
                     endpoints, enumerate_members, PATHS_CYCLES, SMALL_FOUR)
from .search import (Budget, CensusReport, SearchResult, census, implication_scan,
                     min_colors_bb, min_colors_exhaustive)

__version__ = "0.1.0"
