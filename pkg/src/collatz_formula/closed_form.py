"""Exact evaluation of the closed-form orbit expression.

For an odd start ``x1`` and step sizes ``m_1 .. m_{n-1}`` the n-th orbit
value is

    x_n = (3^(n-1) x1 + sum_{i=0}^{n-2} 3^(n-2-i) P_i) / P_{n-1},
    P_i = 2^(m_0 + m_1 + ... + m_i),  with 2^(m_0) = 1.

Every result is a :class:`fractions.Fraction`; integrality is the signal
the growth-point tests look at, so nothing is ever rounded.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import DomainError, PrefixMismatch
from .orbit_core import _check_positive

ExactRational = Fraction


def _check_prefix(prefix: Sequence[int]) -> tuple[int, ...]:
    sizes = tuple(prefix)
    for m in sizes:
        if not isinstance(m, int) or m < 1:
            raise DomainError(f"step sizes must be positive integers, got {m!r}")
    return sizes


def _numerator_parts(x1: int, sizes: tuple[int, ...]) -> tuple[int, int]:
    # Horner form of the sum: acc_{k+1} = 3*acc_k + P_k, with P_0 = 1.
    acc = 0
    exp = 0  # log2 of P_i
    for i in range(len(sizes)):
        acc = 3 * acc + (1 << exp)
        exp += sizes[i]
    n = len(sizes) + 1
    return 3 ** (n - 1) * x1 + acc, exp


def xn_closed_form(x1: int, prefix: Sequence[int]) -> Fraction:
    """Value of ``x_n`` predicted from ``x1`` and the step sizes before it.

    ``n = len(prefix) + 1``.  With the true rhythm of an odd start this is
    an integer equal to ``Col^(n-1)(x1)``; other prefixes give whatever
    rational the algebra produces.
    """
    _check_positive(x1, "x1")
    sizes = _check_prefix(prefix)
    num, exp = _numerator_parts(x1, sizes)
    return Fraction(num, 1 << exp)


def X_value(x1: int, prefix: Sequence[int]) -> Fraction:
    """``y_n + 1`` from the formula expression ``4 y_n + 3 = x_n``.

    Equal to ``(x_n + 1) / 4`` for any prefix; an integer exactly when
    ``x_n`` has the growth-point form ``4y + 3``.
    """
    _check_positive(x1, "x1")
    sizes = _check_prefix(prefix)
    num, exp = _numerator_parts(x1, sizes)
    return Fraction(num + (1 << exp), 4 << exp)


def is_growth_point_by_formula(x1: int, prefix: Sequence[int]) -> bool:
    """Growth test on ``x_n`` using only the formula.

    The prefix must be the real rhythm of ``x1``.  A non-integral ``x_n``
    proves it is not, and so does an even one after at least one step,
    since the map only produces odd values.  Both raise
    :class:`PrefixMismatch`.
    """
    xn = xn_closed_form(x1, prefix)
    if not is_orbit_value(xn, len(prefix)):
        raise PrefixMismatch(
            f"prefix {list(prefix)} gives x_n = {xn} for x1 = {x1}, not an orbit value"
        )
    return X_value(x1, prefix).denominator == 1


def is_orbit_value(xn: Fraction, steps: int) -> bool:
    # an under-sized step leaves an even value, an over-sized one a fraction;
    # either stays detectable at every later step
    return xn.denominator == 1 and (steps == 0 or xn.numerator & 1 == 1)


def equal_step_X(x1: int, n: int, m: int) -> Fraction:
    """``X`` for a uniform rhythm ``m, m, ..., m`` of ``n - 1`` steps.

    Uses the summed geometric series rather than the general loop:

        3^(n-1) / (4 * 2^(m(n-1))) * (x1 - 1/(2^m - 3)) + 1/(4(2^m - 3)) + 1/4

    ``2^m - 3`` is -1 for ``m == 1``; the signed arithmetic handles it.
    """
    _check_positive(x1, "x1")
    _check_positive(n, "n")
    _check_positive(m, "m")
    d = (1 << m) - 3
    scale = Fraction(3 ** (n - 1), 4 << (m * (n - 1)))
    return scale * (x1 - Fraction(1, d)) + Fraction(1, 4 * d) + Fraction(1, 4)
