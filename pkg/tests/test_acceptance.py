"""Exit criteria for the package, one test per criterion.

Run ``pytest tests/test_acceptance.py`` for a PASS/FAIL line per criterion
in the terminal summary.  Every check is exact; there are no tolerances.
"""

from pathlib import Path

import pytest

from collatz_formula.cli import main
from collatz_formula.closed_form import X_value, equal_step_X, xn_closed_form
from collatz_formula.constructors import construct_decreasing, construct_increasing
from collatz_formula.errors import OrbitTooShort
from collatz_formula.orbit_core import is_growth_point, orbit
from collatz_formula.probes import cycle_probe, cycle_scan, growth_census, verify_range
from collatz_formula.rhythm import class_of, enumerate_class, rhythm_of

GOLDEN = Path(__file__).parent / "golden"
criterion = pytest.mark.criterion


@criterion(1, "growth point <=> x = 3 (mod 4) for all x in [1, 10^6]")
def test_ac1_growth_equivalence():
    bad = [x for x in range(1, 10**6 + 1) if is_growth_point(x) != (x % 4 == 3)]
    assert bad == []


@criterion(2, "closed form equals iterated x_n; X integral <=> x_n = 3 (mod 4)")
def test_ac2_closed_form_agreement(record_property):
    checked = 0
    for x1 in range(1, 10**4 + 1, 2):
        rec = orbit(x1, 30)
        sizes = rec.step_sizes
        for k in range(len(sizes) + 1):
            xn = xn_closed_form(x1, sizes[:k])
            assert xn.denominator == 1 and xn == rec.x(k + 1), (x1, k)
            assert (X_value(x1, sizes[:k]).denominator == 1) == (rec.x(k + 1) % 4 == 3), (x1, k)
            checked += 1
    record_property("detail", f"{checked} prefixes")


@criterion(3, "figure 1 data: K=1,2,3, n=7, byte-stable CSV")
def test_ac3_figure1(capsys):
    assert main(["figure1"]) == 0
    out = capsys.readouterr().out
    assert out.encode() == (GOLDEN / "figure1_default.csv").read_bytes()
    rows = [list(map(int, line.split(","))) for line in out.splitlines()[1:]]
    columns = list(zip(*rows))[1:]
    assert [c[0] for c in columns] == [255, 511, 767]
    assert [c[-1] for c in columns] == [4373, 8747, 13121]
    for K, col in zip((1, 2, 3), columns):
        assert len(col) == 8
        assert all(a < b for a, b in zip(col, col[1:]))
        assert orbit(col[0], 7).step_sizes == [1] * 7
        assert col[-1] == 6 * K * 3**6 - 1


@criterion(4, "increasing construction for (n, K) in [1,20] x [1,10]")
def test_ac4_increasing_sweep():
    for n in range(1, 21):
        for K in range(1, 11):
            spec = construct_increasing(n, K)
            assert spec.step_sizes == (1,) * n
            assert all(v % 4 == 3 for v in spec.sequence[:-1])
            assert spec.final == 6 * K * 3 ** (n - 1) - 1


@criterion(5, "decreasing construction for (n, m) in [1,12] x [2,5]")
def test_ac5_decreasing_sweep():
    assert construct_decreasing(3, 2).sequence == (129, 97, 73, 55)
    assert construct_decreasing(2, 3).sequence == (77, 29, 11)
    for n in range(1, 13):
        for m in range(2, 6):
            spec = construct_decreasing(n, m)
            assert orbit(spec.x1, n).step_sizes == [m] * n
            assert all(a > b for a, b in zip(spec.sequence, spec.sequence[1:]))


@criterion(6, "rhythm class of 9: D(3) = 32, members 9, 41, 73, 105")
def test_ac6_rhythm_class_of_9():
    cls = class_of(9, 3)
    assert cls.rhythm == (2, 1, 1) and cls.D == 32
    res = enumerate_class(cls, 4)
    assert res.members == [9, 41, 73, 105]
    assert all(rhythm_of(x, 3) == (2, 1, 1) for x in res.members)


@criterion(7, "rhythm classes verified for odd x1 in [3, 2*10^4], n in [1, 8]")
def test_ac7_rhythm_sweep(record_property):
    total = ok = 0
    last_one_total = last_one_ok = 0
    for x1 in range(3, 2 * 10**4 + 1, 2):
        for n in range(1, 9):
            try:
                cls = class_of(x1, n)
            except OrbitTooShort:
                break
            res = enumerate_class(cls, 10)
            for e in res.entries[1:]:
                total += 1
                ok += e.verified
                if cls.rhythm[-1] == 1:
                    last_one_total += 1
                    last_one_ok += e.verified
    record_property(
        "detail",
        f"all: {ok}/{total} = {ok / total:.2%}; "
        f"m_n = 1: {last_one_ok}/{last_one_total}",
    )
    assert last_one_total > 0
    assert last_one_ok == last_one_total


@criterion(8, "starts 1..10^6 converge (workers 1/2/8 identical); only the trivial cycle")
def test_ac8_desk_scale(record_property):
    one = verify_range(1, 10**6, 10**5, 1)
    assert one.all_converged
    assert verify_range(1, 10**6, 10**5, 2) == one
    assert verify_range(1, 10**6, 10**5, 8) == one
    scan = cycle_scan(1, 10**6, 10**5)
    assert scan.only_trivial and scan.trivial == 10**6
    record_property("detail", f"max excursion {one.max_excursion} from {one.worst_start}")


@criterion(9, "arbitrary precision: every path exercised above 2^128")
def test_ac9_exactness_stress():
    spec = construct_increasing(200, 1)
    assert spec.x1 == 2**201 - 1
    assert spec.final == 6 * 3**199 - 1
    assert equal_step_X(spec.x1, 200, 1) == 3**199
    assert X_value(spec.x1, [1] * 199) == 3**199
    assert xn_closed_form(spec.x1, [1] * 199) == spec.sequence[199]

    dec = construct_decreasing(40, 5)
    assert dec.x1 > 2**128 and dec.step_sizes == (5,) * 40

    cls = class_of(spec.x1, 150)
    assert cls.D == 4 << 149
    assert enumerate_class(cls, 3).all_verified

    census = growth_census(spec.x1, 201)
    assert census.growth_indices == tuple(range(1, 201))

    assert cycle_probe(spec.x1, 10**5).is_trivial
    lo = 2**130 + 1
    s = verify_range(lo, lo + 100, 10**5, 1)
    assert s.all_converged and s.max_excursion > 2**128
