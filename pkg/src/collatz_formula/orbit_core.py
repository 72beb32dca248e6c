"""Accelerated Collatz map, orbits and growth-point classification.

``col_step`` folds one ``3x+1`` with every halving that follows it, so odd
inputs map to odd outputs.  Even inputs are only halved down to their odd
part.  All values are plain Python ints, so there is no overflow.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .errors import DomainError


def _check_positive(x: int, name: str = "x") -> None:
    if not isinstance(x, int) or isinstance(x, bool):
        raise TypeError(f"{name} must be an int, got {type(x).__name__}")
    if x < 1:
        raise DomainError(f"{name} must be a positive integer (got {x})")


def valuation2(n: int) -> int:
    """Exponent of the largest power of two dividing ``n`` (``n != 0``)."""
    if n == 0:
        raise ValueError("2-adic valuation of 0 is infinite")
    return (n & -n).bit_length() - 1


class OrbitStep(NamedTuple):
    value: int
    step_size: int


def col_step(x: int) -> OrbitStep:
    """One application of the accelerated map.

    Odd ``x`` gives ``((3x+1) / 2**v, v)`` with ``v`` the 2-adic valuation of
    ``3x+1``.  Even ``x`` gives ``(x / 2**v, v)`` with no ``3x+1``.  The
    value is always odd; ``col_step(1) == (1, 2)``.
    """
    _check_positive(x)
    if x & 1:
        x = 3 * x + 1
    v = valuation2(x)
    return OrbitStep(x >> v, v)


@dataclass(frozen=True)
class OrbitRecord:
    start: int
    steps: tuple[OrbitStep, ...]
    terminated: bool

    @property
    def values(self) -> list[int]:
        return [s.value for s in self.steps]

    @property
    def step_sizes(self) -> list[int]:
        return [s.step_size for s in self.steps]

    def __len__(self) -> int:
        return len(self.steps)

    def x(self, n: int) -> int:
        """The n-th orbit element, 1-based, with ``x(1) == start``."""
        if n < 1:
            raise IndexError(n)
        return self.start if n == 1 else self.steps[n - 2].value


def orbit(x1: int, max_steps: int) -> OrbitRecord:
    """Iterate ``col_step`` from ``x1`` for at most ``max_steps`` steps.

    Iteration stops early the first time the value 1 is produced.
    """
    _check_positive(x1, "x1")
    _check_positive(max_steps, "max_steps")
    steps = []
    x = x1
    for _ in range(max_steps):
        # inlined col_step; the hot path of every sweep
        y = 3 * x + 1 if x & 1 else x
        v = (y & -y).bit_length() - 1
        x = y >> v
        steps.append(OrbitStep(x, v))
        if x == 1:
            return OrbitRecord(x1, tuple(steps), True)
    return OrbitRecord(x1, tuple(steps), False)


def is_growth_point(x: int) -> bool:
    """True iff ``Col(x) > x``, decided by comparing the values themselves."""
    return col_step(x).value > x


@dataclass(frozen=True)
class GrowthClass:
    residue: int
    is_growth: bool


def classify_mod4(x: int) -> GrowthClass:
    _check_positive(x)
    r = x & 3
    return GrowthClass(r, r == 3)
