"""Orbit rhythms (step-size sequences) and the progressions that share them.

Two starts that differ by a multiple of ``D(n) = 4 * 2^(m_1 + ... + m_{n-1})``
agree on their first ``n - 1`` step sizes.  The n-th step size carries over
whenever ``m_n == 1``; otherwise it can change, so class members are always
checked by iteration instead of being trusted.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import OrbitTooShort
from .orbit_core import _check_positive, orbit

Rhythm = tuple  # tuple[int, ...] of positive step sizes


def rhythm_of(x1: int, n: int) -> Rhythm:
    """The first ``n`` step sizes of the orbit of ``x1``.

    Raises :class:`OrbitTooShort` when the orbit reaches 1 before ``n``
    steps are done; ``x1 == 1`` is already at the end of its orbit.
    """
    _check_positive(x1, "x1")
    _check_positive(n, "n")
    if x1 == 1:
        raise OrbitTooShort(x1, n, 0)
    rec = orbit(x1, n)
    if len(rec) < n:
        raise OrbitTooShort(x1, n, len(rec))
    return tuple(rec.step_sizes)


def same_rhythm(a: int, b: int, n: int) -> bool:
    return rhythm_of(a, n) == rhythm_of(b, n)


def modulus(rhythm: Rhythm) -> int:
    """``D(n)`` for a rhythm of length n; the last step size does not enter."""
    return 4 << sum(rhythm[:-1])


@dataclass(frozen=True)
class RhythmClass:
    base: int
    n: int
    rhythm: Rhythm
    D: int

    def member(self, R: int) -> int:
        return self.base + R * self.D


def class_of(x1: int, n: int) -> RhythmClass:
    r = rhythm_of(x1, n)
    return RhythmClass(x1, n, r, modulus(r))


@dataclass(frozen=True)
class ClassMember:
    R: int
    start: int
    rhythm: Rhythm | None  # None when the orbit is too short to have one
    verified: bool


@dataclass(frozen=True)
class ClassEnumeration:
    cls: RhythmClass
    entries: tuple[ClassMember, ...] = field(default_factory=tuple)

    @property
    def members(self) -> list[int]:
        return [e.start for e in self.entries]

    @property
    def all_verified(self) -> bool:
        return all(e.verified for e in self.entries)

    @property
    def counterexamples(self) -> list[ClassMember]:
        return [e for e in self.entries if not e.verified]


def enumerate_class(cls: RhythmClass, count: int) -> ClassEnumeration:
    """The first ``count`` members ``base + R*D`` with each rhythm checked.

    Members whose rhythm differs from the base are kept in the result and
    flagged ``verified=False``; see :attr:`ClassEnumeration.counterexamples`.
    """
    _check_positive(count, "count")
    entries = []
    for R in range(count):
        start = cls.member(R)
        try:
            r = rhythm_of(start, cls.n)
        except OrbitTooShort:
            r = None
        entries.append(ClassMember(R, start, r, r == cls.rhythm))
    return ClassEnumeration(cls, tuple(entries))
