"""Starts whose orbits move monotonically with a constant step size.

Increasing runs use step size 1: ``x1 = K * 2^(n+1) - 1`` climbs for ``n``
steps and lands on ``6K * 3^(n-1) - 1``.

Decreasing runs use a fixed step size ``m >= 2``.  With ``d = 2^m - 3``
and ``u = d*x - 1`` the step ``x -> (3x+1) / 2^m`` becomes ``u -> 3u / 2^m``,
so choosing ``u_1 = K' * 2^(m n)`` gives

    x_i = (K' * 3^(i-1) * 2^(m(n-i+1)) + 1) / d,   i = 1 .. n+1.

All of these are integers once ``K' * 3^n == -1 (mod d)``, and ``x_1 .. x_n``
are odd automatically.  ``x_{n+1}`` is odd iff ``K'`` is even, which is what
pins the last step to valuation exactly ``m``; of the two smallest
residue-class candidates exactly one is even.

Every constructor re-runs the orbit and raises
:class:`VerificationError` if iteration disagrees with the prediction.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, VerificationError
from .orbit_core import _check_positive, orbit


@dataclass(frozen=True)
class MonotoneSpec:
    direction: str  # "increasing" or "decreasing"
    n: int
    m: int
    K: int
    x1: int
    predicted_final: int
    sequence: tuple[int, ...]  # x_1 .. x_{n+1}, iteration-verified
    step_sizes: tuple[int, ...]

    @property
    def final(self) -> int:
        return self.sequence[-1]


def _verify(direction, n, m, K, x1, predicted_final) -> MonotoneSpec:
    rec = orbit(x1, n)
    seq = (x1, *rec.values)
    sizes = tuple(rec.step_sizes)
    if len(sizes) != n:
        raise VerificationError(f"orbit of {x1} stopped after {len(sizes)} of {n} steps")
    if any(s != m for s in sizes):
        raise VerificationError(f"orbit of {x1} has step sizes {sizes}, expected all {m}")
    if direction == "increasing":
        ok = all(a < b for a, b in zip(seq, seq[1:]))
    else:
        ok = all(a > b for a, b in zip(seq, seq[1:]))
    if not ok:
        raise VerificationError(f"orbit of {x1} is not strictly {direction}")
    if seq[-1] != predicted_final:
        raise VerificationError(
            f"orbit of {x1} ends at {seq[-1]}, predicted {predicted_final}"
        )
    return MonotoneSpec(direction, n, m, K, x1, predicted_final, seq, sizes)


def construct_increasing(n: int, K: int = 1) -> MonotoneSpec:
    """Start of an ``n``-step strictly increasing run, all step sizes 1."""
    _check_positive(n, "n")
    _check_positive(K, "K")
    x1 = (K << (n + 1)) - 1
    return _verify("increasing", n, 1, K, x1, 6 * K * 3 ** (n - 1) - 1)


def decreasing_multiplier(n: int, m: int, t: int = 0) -> int:
    """The multiplier ``K'`` of the ``t``-th member of the decreasing family.

    ``t = 0`` is the smallest valid multiplier; later members step by
    ``2d`` so both the congruence and the parity condition are kept.
    """
    _check_positive(n, "n")
    if m < 2:
        raise DomainError(f"decreasing runs need step size m >= 2 (got {m})")
    if t < 0:
        raise DomainError(f"family index must be non-negative (got {t})")
    d = (1 << m) - 3
    k0 = (-pow(3, -n, d)) % d if d > 1 else 0
    if k0 == 0:
        k0 = d
    k = k0 if k0 % 2 == 0 else k0 + d
    return k + 2 * d * t


def construct_decreasing(n: int, m: int, t: int = 0) -> MonotoneSpec:
    """Start of an ``n``-step strictly decreasing run with every step size ``m``.

    ``t = 0`` gives the smallest start the construction produces; larger
    ``t`` walks further along the same family.
    """
    K = decreasing_multiplier(n, m, t)
    d = (1 << m) - 3
    x1, r = divmod((K << (m * n)) + 1, d)
    if r:
        raise VerificationError(f"multiplier {K} does not give an integral start")
    final, r = divmod(K * 3 ** n + 1, d)
    if r:
        raise VerificationError(f"multiplier {K} does not give an integral endpoint")
    return _verify("decreasing", n, m, K, x1, final)
