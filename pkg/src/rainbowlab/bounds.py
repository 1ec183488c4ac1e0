"""Closed-form bounds on f(n,5,9), computed exactly.

The counting inequality from the pigeonhole argument,

    s >= 2C/s - 1 + 2C/s - 1 - 1 + (3/2)(n - 2C/s),    C = n(n-1)/2,

is evaluated as written (no clamping of the last term). Multiplying through by
2s gives the integer form ``2s^2 - (3n-6)s - n(n-1) >= 0`` used for every
decision below; floating point only produces the reported root.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError

GOLDEN = (1 + math.sqrt(5)) / 2


def _check_n(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise DomainError(f"n must be a positive integer, got {n!r}")


def claimed_bound(n: int) -> Fraction:
    """(11n - 23)/4."""
    _check_n(n)
    if n < 5:
        warnings.warn(f"the lower bound is stated for n >= 5; n={n} is outside it", stacklevel=2)
    return Fraction(11 * n - 23, 4)


def ceil_fraction(x: Fraction) -> int:
    return -((-x.numerator) // x.denominator)


def counting_slack(n: int, s: int) -> int:
    """2s^2 - (3n-6)s - n(n-1); nonnegative exactly when s satisfies the inequality."""
    return 2 * s * s - (3 * n - 6) * s - n * (n - 1)


@dataclass(frozen=True)
class Eq3Result:
    root: float
    min_integer_s: int


def eq3_min_s(n: int) -> Eq3Result:
    """Positive root and smallest positive integer solution of the counting inequality."""
    _check_n(n)
    b = 3 * n - 6
    disc = b * b + 8 * n * (n - 1)
    r = math.isqrt(disc)
    root = (b + r) / 4 if r * r == disc else (b + math.sqrt(disc)) / 4
    # The float root only seeds the scan; the integer tests decide.
    s = max(1, math.floor(root) - 2)
    while s > 1 and counting_slack(n, s - 1) >= 0:
        s -= 1
    while counting_slack(n, s) < 0:
        s += 1
    return Eq3Result(root, s)


@dataclass(frozen=True)
class ReferenceBounds:
    axenovich: float
    toth: int
    proper_case: int
    lemma_value: int


def reference_bounds(n: int) -> ReferenceBounds:
    _check_n(n)
    return ReferenceBounds(
        axenovich=GOLDEN * n,
        toth=2 * n - 6,
        proper_case=3 * n - 7,
        lemma_value=-(-3 * n // 2),
    )


@dataclass(frozen=True)
class BoundsRow:
    n: int
    claimed: Fraction
    claimed_ceil: int
    eq3_root: float
    eq3_ceil: int
    axenovich: float
    toth: int
    proper_case: int
    lemma_value: int

    @property
    def discrepancy(self) -> bool:
        """The stated closed form exceeds what the counting inequality yields."""
        return self.claimed_ceil > self.eq3_ceil


def bound_row(n: int) -> BoundsRow:
    _check_n(n)
    claimed = Fraction(11 * n - 23, 4)
    eq3 = eq3_min_s(n)
    ref = reference_bounds(n)
    return BoundsRow(n, claimed, ceil_fraction(claimed), eq3.root, eq3.min_integer_s,
                     ref.axenovich, ref.toth, ref.proper_case, ref.lemma_value)


def bound_table(n_from: int, n_to: int) -> list[BoundsRow]:
    if not (isinstance(n_from, int) and isinstance(n_to, int)) or not 1 <= n_from <= n_to:
        raise DomainError(f"need 1 <= n_from <= n_to, got ({n_from!r}, {n_to!r})")
    return [bound_row(n) for n in range(n_from, n_to + 1)]


TABLE_FOOTER = (
    "eq3 column: smallest s with 2s^2-(3n-6)s-n(n-1) >= 0, the counting inequality "
    "evaluated as printed (the (3/2)(n-2C/s) term is not clamped when 2C/s > n). "
    "flag=1 marks rows where ceil((11n-23)/4) exceeds it."
)
