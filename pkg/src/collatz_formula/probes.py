"""Bounded probes for cycles and divergence, and a range verifier.

``cycle_probe`` and ``growth_census`` follow a single orbit with Python
ints.  ``verify_range`` and ``cycle_scan`` sweep many starts at once with
numpy int64 arrays; any orbit whose next ``3x+1`` could overflow int64 is
handed back to the exact scalar code, so results never depend on width.
Ranges are cut into fixed-size chunks that do not depend on the worker
count, and chunk results are folded in start order, so output is the same
for any ``workers``.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError, VerificationError
from .orbit_core import _check_positive, col_step, orbit

# largest x with 3x + 1 <= 2**63 - 1
INT64_SAFE = (2**63 - 2) // 3
CHUNK = 1 << 16


@dataclass(frozen=True)
class CycleReport:
    start: int
    cycle_found: bool
    cycle_members: tuple[int, ...]
    is_trivial: bool
    steps: int  # col_step evaluations spent by the detector
    inconclusive: bool = False


def certify_cycle(members) -> bool:
    """True iff ``col_step`` maps each member to the next, wrapping around."""
    if not members:
        return False
    for a, b in zip(members, (*members[1:], members[0])):
        if col_step(a).value != b:
            return False
    return True


def _brent(x1, max_steps):
    # returns (meeting value, cycle length, steps) or None when over budget
    power = lam = 1
    tortoise = x1
    hare = col_step(x1).value
    steps = 1
    while tortoise != hare:
        if steps >= max_steps:
            return None
        if power == lam:
            tortoise = hare
            power *= 2
            lam = 0
        hare = col_step(hare).value
        lam += 1
        steps += 1
    return hare, lam, steps


def cycle_probe(x1: int, max_steps: int) -> CycleReport:
    """Look for a repeated value in the orbit of ``x1`` with Brent's method.

    Memory use is constant.  If ``max_steps`` map evaluations pass without
    a repeat the report is marked ``inconclusive``.  Found cycles are listed
    starting from their smallest member and certified before returning.
    """
    _check_positive(x1, "x1")
    _check_positive(max_steps, "max_steps")
    hit = _brent(x1, max_steps)
    if hit is None:
        return CycleReport(x1, False, (), False, max_steps, inconclusive=True)
    meet, lam, steps = hit
    members = [meet]
    for _ in range(lam - 1):
        members.append(col_step(members[-1]).value)
    k = members.index(min(members))
    members = tuple(members[k:] + members[:k])
    if not certify_cycle(members):
        raise VerificationError(f"cycle {members} from {x1} failed certification")
    return CycleReport(x1, True, members, members == (1,), steps)


@dataclass(frozen=True)
class GrowthCensus:
    start: int
    horizon: int
    growth_indices: tuple[int, ...]
    y_values: tuple[int, ...]
    steps_walked: int
    terminated: bool

    @property
    def distinct_y(self) -> int:
        return len(set(self.y_values))


def growth_census(x1: int, horizon: int) -> GrowthCensus:
    """Growth points among ``x_1 .. x_horizon`` with their ``y = (x - 3) / 4``.

    ``x_i`` counts as a growth point when its own step goes up, so the walk
    takes ``horizon`` steps; it stops early if the orbit reaches 1.
    """
    rec = orbit(x1, horizon)
    idx, ys = [], []
    prev = x1
    for i, step in enumerate(rec.steps, start=1):
        if step.value > prev:
            idx.append(i)
            ys.append((prev - 3) >> 2)
        prev = step.value
    return GrowthCensus(x1, horizon, tuple(idx), tuple(ys), len(rec), rec.terminated)


# --- range verification ---------------------------------------------------


@dataclass(frozen=True)
class RangeSummary:
    lo: int
    hi: int
    all_converged: bool
    max_excursion: int  # largest odd value met by any orbit, start included
    worst_start: int  # smallest start attaining max_excursion
    total_steps: int
    first_unconverged: int | None = None


def _walk(x, steps, peak, budget):
    """Continue one orbit exactly; returns (converged, steps, peak)."""
    while x != 1 or steps == 0:
        if steps >= budget:
            return False, steps, peak
        y = 3 * x + 1 if x & 1 else x
        x = y >> ((y & -y).bit_length() - 1)
        steps += 1
        if x > peak:
            peak = x
    return True, steps, peak


def _fold(acc, part):
    if acc is None:
        return part
    lo, _, conv, exc, worst, total, first = acc
    _, hi, conv2, exc2, worst2, total2, first2 = part
    if exc2 > exc:
        exc, worst = exc2, worst2
    if first is None:
        first = first2
    return (lo, hi, conv and conv2, exc, worst, total + total2, first)


def _scan_scalar(lo, hi, budget):
    acc = None
    for s in range(lo, hi + 1):
        conv, steps, peak = _walk(s, 0, s if s & 1 else 0, budget)
        acc = _fold(acc, (s, s, conv, peak, s, steps, None if conv else s))
    return acc


def _scan_chunk(args):
    lo, hi, budget, limit = args
    if hi > limit:
        return _scan_scalar(lo, hi, budget)
    starts = np.arange(lo, hi + 1, dtype=np.int64)
    size = starts.size
    out_steps = np.zeros(size, dtype=np.int64)
    out_peak = np.zeros(size, dtype=np.int64)
    out_conv = np.zeros(size, dtype=bool)
    big_results = {}  # position -> exact (converged, steps, peak)

    pos = np.arange(size)
    x = starts.copy()
    steps = np.zeros(size, dtype=np.int64)
    peak = np.where(starts & 1, starts, 0)
    while pos.size:
        big = x > limit
        if big.any():
            for p, xv, sv, pv in zip(pos[big], x[big], steps[big], peak[big]):
                big_results[int(p)] = _walk(int(xv), int(sv), int(pv), budget)
            out_conv[pos[big]] = True  # real flag merged from big_results below
            keep = ~big
            pos, x, steps, peak = pos[keep], x[keep], steps[keep], peak[keep]
        y = np.where(x & 1, 3 * x + 1, x)
        x = y // (y & -y)
        steps += 1
        np.maximum(peak, x, out=peak)
        done = x == 1
        fin = done | (steps >= budget)
        if fin.any():
            p = pos[fin]
            out_steps[p] = steps[fin]
            out_peak[p] = peak[fin]
            out_conv[p] = done[fin]
            keep = ~fin
            pos, x, steps, peak = pos[keep], x[keep], steps[keep], peak[keep]

    total = int(out_steps.sum())
    conv = bool(out_conv.all())
    best = int(out_peak.max())
    worst = lo + int(np.argmax(out_peak)) if best else lo
    first = None if conv else lo + int(np.argmin(out_conv))
    if big_results:
        # exact values may exceed int64; merge them in start order
        for p in sorted(big_results):
            c, st, pk = big_results[p]
            total += st
            s = lo + p
            if pk > best or (pk == best and s < worst):
                best, worst = pk, s
            if not c:
                conv = False
                first = s if first is None else min(first, s)
    return (lo, hi, conv, best, worst, total, first)


def _chunks(lo, hi, size):
    a = lo
    while a <= hi:
        b = min(hi, a + size - 1)
        yield a, b
        a = b + 1


def _run(func, jobs, workers):
    if workers == 1 or len(jobs) == 1:
        return [func(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(func, jobs))


def verify_range(lo: int, hi: int, step_budget: int = 10**5, workers: int = 1,
                 *, limit: int = INT64_SAFE) -> RangeSummary:
    """Run every start in ``[lo, hi]`` to 1 or until ``step_budget`` steps.

    Steps are ``col_step`` applications, so start 1 costs one step (the
    trivial cycle) just as :func:`orbit` records it.  ``limit`` is the
    largest value handled in int64 before switching to exact ints; it is
    exposed for testing the fallback.
    """
    _check_positive(lo, "lo")
    _check_positive(step_budget, "step_budget")
    _check_positive(workers, "workers")
    if hi < lo:
        raise DomainError(f"empty range: hi ({hi}) < lo ({lo})")
    jobs = [(a, b, step_budget, limit) for a, b in _chunks(lo, hi, CHUNK)]
    acc = None
    for part in _run(_scan_chunk, jobs, workers):
        acc = _fold(acc, part)
    _, _, conv, exc, worst, total, first = acc
    return RangeSummary(lo, hi, conv, exc, worst, total, first)


# --- batch cycle probing --------------------------------------------------


@dataclass(frozen=True)
class CycleScan:
    lo: int
    hi: int
    max_steps: int
    trivial: int  # starts whose detector closed on the fixed point 1
    nontrivial: tuple[CycleReport, ...] = field(default_factory=tuple)
    inconclusive: tuple[int, ...] = field(default_factory=tuple)

    @property
    def only_trivial(self) -> bool:
        return not self.nontrivial and not self.inconclusive


def _cycle_chunk(args):
    # Brent's method, one lane per start, in lock-step with _brent
    lo, hi, max_steps, limit = args
    if hi > limit:
        reports = [cycle_probe(s, max_steps) for s in range(lo, hi + 1)]
        return _tally(reports)
    starts = np.arange(lo, hi + 1, dtype=np.int64)
    y = np.where(starts & 1, 3 * starts + 1, starts)
    hare = y // (y & -y)
    tort = starts.copy()
    power = np.ones_like(starts)
    lam = np.ones_like(starts)
    steps = np.ones_like(starts)
    trivial = 0
    odd_cases = []  # starts needing the exact scalar probe
    while starts.size:
        met = tort == hare
        if met.any():
            triv = met & (hare == 1) & (lam == 1)
            trivial += int(triv.sum())
            odd_cases.extend(starts[met & ~triv].tolist())
        left = ~met
        over = left & (steps >= max_steps)
        big = left & ~over & (hare > limit)
        odd_cases.extend(starts[over | big].tolist())
        keep = left & ~over & ~big
        starts, tort, hare = starts[keep], tort[keep], hare[keep]
        power, lam, steps = power[keep], lam[keep], steps[keep]
        tele = power == lam
        tort = np.where(tele, hare, tort)
        power = np.where(tele, power * 2, power)
        lam = np.where(tele, 0, lam)
        y = np.where(hare & 1, 3 * hare + 1, hare)
        hare = y // (y & -y)
        lam += 1
        steps += 1
    extra = _tally(cycle_probe(int(s), max_steps) for s in sorted(odd_cases))
    return (trivial + extra[0], extra[1], extra[2])


def _tally(reports):
    trivial, nontrivial, inconclusive = 0, [], []
    for r in reports:
        if r.inconclusive:
            inconclusive.append(r.start)
        elif r.is_trivial:
            trivial += 1
        else:
            nontrivial.append(r)
    return trivial, nontrivial, inconclusive


def cycle_scan(lo: int, hi: int, max_steps: int = 10**5, workers: int = 1,
               *, limit: int = INT64_SAFE) -> CycleScan:
    """:func:`cycle_probe` for every start in ``[lo, hi]``, tallied."""
    _check_positive(lo, "lo")
    _check_positive(max_steps, "max_steps")
    _check_positive(workers, "workers")
    if hi < lo:
        raise DomainError(f"empty range: hi ({hi}) < lo ({lo})")
    jobs = [(a, b, max_steps, limit) for a, b in _chunks(lo, hi, CHUNK)]
    trivial, nontrivial, inconclusive = 0, [], []
    for t, nt, inc in _run(_cycle_chunk, jobs, workers):
        trivial += t
        nontrivial.extend(nt)
        inconclusive.extend(inc)
    return CycleScan(lo, hi, max_steps, trivial, tuple(nontrivial), tuple(inconclusive))
