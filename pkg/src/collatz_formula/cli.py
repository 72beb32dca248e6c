"""Command-line front end.

Exit codes: 0 success, 2 usage or domain error, 3 computation error
(orbit too short, inconclusive probe, unconverged range, failed
self-verification).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys

from . import closed_form, constructors, probes, rhythm
from .errors import DomainError, OrbitTooShort, PrefixMismatch, VerificationError
from .orbit_core import orbit

EXIT_USAGE = 2
EXIT_COMPUTE = 3

_DECIMAL = re.compile(r"[0-9]+\Z")


class ComputationError(Exception):
    pass


def _nat(text: str) -> int:
    # plain decimal digits only; int() would also take "1_000", "+5", " 7"
    if not _DECIMAL.match(text):
        raise argparse.ArgumentTypeError(f"expected a decimal integer, got {text!r}")
    return int(text)


def _nat_list(text: str) -> list[int]:
    return [_nat(part) for part in text.split(",")]


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


# --- subcommands ----------------------------------------------------------
# each returns the rendered text; errors propagate to main()


def cmd_orbit(args) -> str:
    rec = orbit(args.x1, args.steps)
    if args.format == "csv":
        rows = [(i, s.value, s.step_size) for i, s in enumerate(rec.steps, 1)]
        return _csv(("index", "value", "step_size"), rows)
    if args.format == "json":
        return _json({
            "start": rec.start,
            "terminated": rec.terminated,
            "steps": [{"value": s.value, "m": s.step_size} for s in rec.steps],
            "rhythm": rec.step_sizes,
        })
    lines = [f"start {rec.start}"]
    lines += [f"{i:>6}  {s.value}  (m={s.step_size})" for i, s in enumerate(rec.steps, 1)]
    lines.append("terminated at 1" if rec.terminated else f"stopped after {len(rec)} steps")
    return "\n".join(lines) + "\n"


def cmd_construct(args) -> str:
    if args.direction == "inc":
        if args.m is not None and args.m != 1:
            raise DomainError("increasing runs have step size 1; drop --m")
        spec = constructors.construct_increasing(args.n, args.k)
    else:
        if args.m is None:
            raise DomainError("--direction dec requires --m (m >= 2)")
        if args.m < 2:
            raise DomainError(f"--m must be >= 2 for decreasing runs (got {args.m})")
        spec = constructors.construct_decreasing(args.n, args.m, args.t)
    if args.format == "csv":
        sizes = list(spec.step_sizes) + [""]
        return _csv(("i", "value", "step_size"),
                    [(i, v, m) for i, (v, m) in enumerate(zip(spec.sequence, sizes))])
    if args.format == "json":
        return _json({
            "direction": spec.direction,
            "n": spec.n,
            "m": spec.m,
            "K": spec.K,
            "start": spec.x1,
            "sequence": list(spec.sequence),
            "rhythm": list(spec.step_sizes),
            "predicted_final": spec.predicted_final,
            "final": spec.final,
            "verified": True,
        })
    lines = [
        f"{spec.direction} run: n={spec.n} m={spec.m} K={spec.K}",
        "sequence: " + " -> ".join(map(str, spec.sequence)),
        "step sizes: " + " ".join(map(str, spec.step_sizes)),
        f"predicted final {spec.predicted_final}, actual {spec.final} (verified)",
    ]
    return "\n".join(lines) + "\n"


def figure1_table(n: int, ks: list[int]) -> tuple[list[str], list[list[int]]]:
    specs = [constructors.construct_increasing(n, k) for k in ks]
    header = ["i"] + [f"K={k}" for k in ks]
    rows = [[i] + [s.sequence[i] for s in specs] for i in range(n + 1)]
    return header, rows


def cmd_figure1(args) -> str:
    header, rows = figure1_table(args.n, args.k_list)
    if args.format == "json":
        return _json({
            "n": args.n,
            "series": {h: [r[j] for r in rows] for j, h in enumerate(header) if j},
        })
    return _csv(header, rows)


def cmd_rhythm(args) -> str:
    cls = rhythm.class_of(args.x1, args.n)
    res = rhythm.enumerate_class(cls, args.enumerate)
    tag = "-".join(map(str, cls.rhythm))
    if args.format == "csv":
        return _csv(("R", "start", "D", "rhythm", "verified"),
                    [(e.R, e.start, cls.D, "-".join(map(str, e.rhythm or ())),
                      int(e.verified)) for e in res.entries])
    if args.format == "json":
        return _json({
            "start": cls.base,
            "n": cls.n,
            "rhythm": list(cls.rhythm),
            "D": cls.D,
            "members": res.members,
            "verified": [e.verified for e in res.entries],
            "counterexamples": [
                {"R": e.R, "start": e.start,
                 "rhythm": list(e.rhythm) if e.rhythm else None}
                for e in res.counterexamples
            ],
        })
    lines = [f"rhythm of {cls.base} (n={cls.n}): <{', '.join(map(str, cls.rhythm))}>",
             f"D = {cls.D}"]
    for e in res.entries:
        mark = "ok" if e.verified else f"DIFFERS ({'-'.join(map(str, e.rhythm or ())) or 'too short'})"
        lines.append(f"  R={e.R:<4} {e.start}  {mark}")
    if not res.all_verified:
        lines.append(f"{len(res.counterexamples)} member(s) do not share <{tag}>")
    return "\n".join(lines) + "\n"


def cmd_verify(args) -> str:
    if args.hi < args.lo:
        raise DomainError(f"invalid range: --hi {args.hi} < --lo {args.lo}")
    s = probes.verify_range(args.lo, args.hi, args.budget, args.workers)
    fields = {
        "lo": s.lo,
        "hi": s.hi,
        "budget": args.budget,
        "all_converged": s.all_converged,
        "max_excursion": s.max_excursion,
        "worst_start": s.worst_start,
        "total_steps": s.total_steps,
        "first_unconverged": s.first_unconverged,
    }
    if args.format == "csv":
        row = ["" if v is None else (str(v).lower() if isinstance(v, bool) else v)
               for v in fields.values()]
        text = _csv(list(fields), [row])
    elif args.format == "json":
        text = _json(fields)
    else:
        text = (
            f"range [{s.lo}, {s.hi}], budget {args.budget} steps\n"
            f"all converged: {'yes' if s.all_converged else 'NO'}\n"
            f"max excursion {s.max_excursion} (start {s.worst_start})\n"
            f"total steps {s.total_steps}\n"
        )
        if s.first_unconverged is not None:
            text += f"first unconverged start: {s.first_unconverged}\n"
    if not s.all_converged:
        raise ComputationError(text)
    return text


def cmd_cycle(args) -> str:
    r = probes.cycle_probe(args.x1, args.steps)
    fields = {
        "start": r.start,
        "cycle_found": r.cycle_found,
        "cycle_members": list(r.cycle_members),
        "is_trivial": r.is_trivial,
        "inconclusive": r.inconclusive,
        "steps": r.steps,
    }
    if args.format == "json":
        text = _json(fields)
    elif args.format == "csv":
        text = _csv(("start", "cycle_found", "is_trivial", "inconclusive", "steps", "cycle_members"),
                    [(r.start, str(r.cycle_found).lower(), str(r.is_trivial).lower(),
                      str(r.inconclusive).lower(), r.steps,
                      "-".join(map(str, r.cycle_members)))])
    elif r.inconclusive:
        text = f"{r.start}: no repeat within {r.steps} steps (inconclusive)\n"
    else:
        kind = "trivial cycle" if r.is_trivial else "NON-TRIVIAL cycle"
        text = f"{r.start}: {kind} {list(r.cycle_members)} detected after {r.steps} steps\n"
    if r.inconclusive:
        raise ComputationError(text)
    return text


def cmd_census(args) -> str:
    c = probes.growth_census(args.x1, args.horizon)
    if args.format == "csv":
        return _csv(("index", "y"), zip(c.growth_indices, c.y_values))
    if args.format == "json":
        return _json({
            "start": c.start,
            "horizon": c.horizon,
            "growth_indices": list(c.growth_indices),
            "y_values": list(c.y_values),
            "distinct_y": c.distinct_y,
            "steps_walked": c.steps_walked,
            "terminated": c.terminated,
        })
    lines = [f"start {c.start}, {c.steps_walked} step(s) walked"
             + (", reached 1" if c.terminated else "")]
    lines += [f"  x_{i} = 4*{y}+3" for i, y in zip(c.growth_indices, c.y_values)]
    lines.append(f"{len(c.growth_indices)} growth point(s), {c.distinct_y} distinct y")
    return "\n".join(lines) + "\n"


def cmd_formula(args) -> str:
    prefix = args.prefix or []
    xn = closed_form.xn_closed_form(args.x1, prefix)
    X = closed_form.X_value(args.x1, prefix)
    growth = X.denominator == 1 if closed_form.is_orbit_value(xn, len(prefix)) else None
    fields = {"start": args.x1, "rhythm": prefix, "n": len(prefix) + 1,
              "x_n": str(xn), "X": str(X), "growth": growth}
    if args.format == "json":
        return _json(fields)
    if args.format == "csv":
        return _csv(list(fields), [[
            args.x1, "-".join(map(str, prefix)), len(prefix) + 1, xn, X,
            "" if growth is None else str(growth).lower()]])
    note = {True: "growth point", False: "not a growth point",
            None: "prefix is not a real orbit rhythm"}[growth]
    return f"x_{len(prefix) + 1} = {xn}\nX = {X}  ({note})\n"


# --- wiring ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("human", "csv", "json"),
                        help="output encoding (default: human; csv for figure1)")
    common.add_argument("--out", metavar="PATH", help="write output here instead of stdout")

    p = argparse.ArgumentParser(
        prog="collatz-formula",
        description="Accelerated Collatz orbits, growth points and rhythm classes.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("orbit", parents=[common], help="orbit and step sizes of a start")
    s.add_argument("x1", type=_nat)
    s.add_argument("--steps", type=_nat, default=10**6)
    s.set_defaults(func=cmd_orbit)

    s = sub.add_parser("construct", parents=[common], help="monotone runs with a fixed step size")
    s.add_argument("--direction", choices=("inc", "dec"), required=True)
    s.add_argument("--n", type=_nat, required=True)
    s.add_argument("--k", type=_nat, default=1, help="multiplier for increasing runs")
    s.add_argument("--m", type=_nat, help="step size for decreasing runs (>= 2)")
    s.add_argument("--t", type=_nat, default=0, help="family index for decreasing runs")
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("figure1", parents=[common], help="increasing-run table, one column per K")
    s.add_argument("--n", type=_nat, default=7)
    s.add_argument("--k-list", type=_nat_list, default=[1, 2, 3])
    s.set_defaults(func=cmd_figure1, default_format="csv")

    s = sub.add_parser("rhythm", parents=[common], help="rhythm class of a start")
    s.add_argument("x1", type=_nat)
    s.add_argument("--n", type=_nat, required=True)
    s.add_argument("--enumerate", type=_nat, default=1, metavar="COUNT")
    s.set_defaults(func=cmd_rhythm)

    s = sub.add_parser("verify", parents=[common], help="run a range of starts to 1")
    s.add_argument("--lo", type=_nat, required=True)
    s.add_argument("--hi", type=_nat, required=True)
    s.add_argument("--budget", type=_nat, default=10**5)
    s.add_argument("--workers", type=_nat, default=1)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("cycle", parents=[common], help="bounded cycle detection")
    s.add_argument("x1", type=_nat)
    s.add_argument("--steps", type=_nat, default=10**6)
    s.set_defaults(func=cmd_cycle)

    s = sub.add_parser("census", parents=[common], help="growth points along an orbit")
    s.add_argument("x1", type=_nat)
    s.add_argument("--horizon", type=_nat, default=1000)
    s.set_defaults(func=cmd_census)

    s = sub.add_parser("formula", parents=[common], help="closed-form x_n and X for a prefix")
    s.add_argument("x1", type=_nat)
    s.add_argument("--prefix", type=_nat_list, help="step sizes m_1,...,m_{n-1}")
    s.set_defaults(func=cmd_formula)
    return p


def _emit(text: str, path: str | None, stream) -> None:
    if path:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        stream.write(text)


def main(argv=None) -> int:
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)
    args = build_parser().parse_args(argv)
    if args.format is None:
        args.format = getattr(args, "default_format", "human")
    try:
        text = args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ComputationError as exc:
        _emit(str(exc), args.out, sys.stdout)
        return EXIT_COMPUTE
    except (OrbitTooShort, PrefixMismatch, VerificationError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_COMPUTE
    _emit(text, args.out, sys.stdout)
    return 0


if __name__ == "__main__":
    sys.exit(main())
