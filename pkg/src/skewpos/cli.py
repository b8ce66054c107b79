"""Batch command-line interface.

Subcommands: inspect, sample, splice, verify, quiver, plabic, mutate.
Exit codes: 0 success, 1 property failure, 2 input error.  All output is
deterministic for a fixed configuration: keys are sorted and rationals are
serialized canonically.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import random
import sys

from .braid import beta, render
from .cluster import exchange_ratio, mutate, quiver_dot, quiver_json, seed_at
from .diagram import BoxRef, Partition, SkewDiagram
from .linalg import rat_to_str
from .permutations import baf, necklace, necklace_to_baf, verify_f_factorization, w_skew
from .plabic import ascii_grid, trips_json, verify_trips
from .splicing import chart_is_everything, in_U_a, splice_report
from .variety import PointV, membership, omega, sample, xi


def subseed(seed: int, *parts) -> int:
    """Deterministic sub-seed derived from the run seed and a tag tuple."""
    digest = hashlib.sha256(repr((seed,) + parts).encode()).hexdigest()
    return int(digest[:16], 16)


def load_diagram(source: str) -> SkewDiagram:
    """Accept a path to a JSON file or an inline JSON object."""
    text = source
    if not source.lstrip().startswith("{"):
        with open(source) as fh:
            text = fh.read()
    return SkewDiagram.from_json(json.loads(text))


def load_point(source: str) -> PointV:
    text = source
    if not source.lstrip().startswith("{"):
        with open(source) as fh:
            text = fh.read()
    return PointV.from_json(json.loads(text))


def emit(doc, out: str | None) -> None:
    text = doc if isinstance(doc, str) else json.dumps(doc, sort_keys=True, indent=2)
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def random_diagram(rng: random.Random, max_n: int = 12) -> SkewDiagram:
    n = rng.randint(4, max_n)
    k = rng.randint(1, n - 1)
    lam = []
    prev = n - k
    for _ in range(k):
        prev = rng.randint(0, prev)
        lam.append(prev)
    lam = [p for p in lam if p > 0]
    mu = []
    prev = None
    for lj in lam:
        hi = lj if prev is None else min(lj, prev)
        prev = rng.randint(0, hi)
        mu.append(prev)
    return SkewDiagram(n, k, Partition(tuple(lam)), Partition(tuple(mu)))


# -- subcommands ------------------------------------------------------------------


def cmd_inspect(args) -> int:
    d = load_diagram(args.diagram)
    word, _, columns = beta(d)
    rib = d.ribbon()
    doc = {
        "diagram": d.to_json(),
        "necklace": [list(e) for e in necklace(d).entries],
        "f": list(baf(d).window),
        "I_mu": list(d.I_mu()),
        "I_lambda": list(d.I_lambda()),
        "labels": {
            f"a{b.a}i{b.i}": list(d.long_label(b.a, b.i)) for b in d.boxes()
        },
        "braid": {"k": word.strands, "letters": list(word.letters),
                  "columns": [list(c) for c in columns], "text": render(word, columns)},
        "ribbon": {
            "R": [[b.a, b.i] for b in rib.R],
            "Rbar": [[b.a, b.i] for b in rib.Rbar],
            "R1": [[b.a, b.i] for b in rib.R1],
        },
        "quiver": quiver_json(d),
    }
    emit(doc, args.out)
    return 0


def cmd_sample(args) -> int:
    d = load_diagram(args.diagram)
    V = sample(d, args.seed, bound=args.bound, normalize_r1=args.normalize_r1)
    emit(V.to_json(), args.out)
    return 0


def cmd_quiver(args) -> int:
    d = load_diagram(args.diagram)
    if args.format == "dot":
        emit(quiver_dot(d), args.out)
    else:
        emit(quiver_json(d), args.out)
    return 0


def cmd_plabic(args) -> int:
    d = load_diagram(args.diagram)
    if args.format == "text":
        emit(ascii_grid(d), args.out)
    else:
        emit(trips_json(d), args.out)
    return 0


def cmd_splice(args) -> int:
    d = load_diagram(args.diagram)
    if args.point:
        V = load_point(args.point)
        if V.diagram != d:
            print("point diagram differs from --diagram", file=sys.stderr)
            return 2
    else:
        V = sample(d, args.seed, bound=args.bound)
    a = args.column
    if not in_U_a(V, a):
        bad = next(
            i for i in range(d.mu_bar[a] + 1, d.lambda_bar[a] + 1)
            if V.delta(d.long_label(a, i)) == 0
        )
        print(
            f"point not in the column-{a} chart: minor at {sorted(d.long_label(a, bad))} vanishes",
            file=sys.stderr,
        )
        return 1
    doc = splice_report(V, a)
    emit(doc, args.out)
    checks = doc["checks"]
    return 0 if all(v == "pass" for v in checks.values()) else 1


def cmd_mutate(args) -> int:
    d = load_diagram(args.diagram)
    V = load_point(args.point) if args.point else sample(d, args.seed, bound=args.bound)
    s = seed_at(V)
    box = BoxRef(*map(int, args.box.split(",")))
    try:
        new = mutate(s, box)
        ratio = exchange_ratio(s, box)
    except (ValueError, ZeroDivisionError) as exc:
        print(str(exc), file=sys.stderr)
        return 2
    emit(
        {
            "box": [box.a, box.i],
            "old_value": rat_to_str(s.value(box)),
            "new_value": rat_to_str(new.value(box)),
            "exchange_ratio": rat_to_str(ratio),
            "values": {f"a{b.a}i{b.i}": rat_to_str(x) for b, x in new.values},
        },
        args.out,
    )
    return 0


def _trial_checks(d: SkewDiagram, seed: int, only: str | None, column: int | None):
    """Run one property-trial; yields (name, ok, detail)."""
    def want(name):
        return only is None or only == name

    if want("combinatorics"):
        ok = necklace_to_baf(necklace(d)).window == baf(d).window and verify_f_factorization(d)
        ok = ok and len(w_skew(d).word) == d.size()
        word = beta(d)[0]
        ok = ok and len(word) + len(d.ribbon().R1) == d.size()
        yield "combinatorics", ok, None
    if want("plabic"):
        try:
            verify_trips(d)
            yield "plabic", True, None
        except AssertionError as exc:
            yield "plabic", False, str(exc)
    if only in (None, "membership", "roundtrip", "splice"):
        V = sample(d, seed)
        if want("membership"):
            ok = membership(V.matrix, d)
            yield "membership", ok, None
        if want("roundtrip"):
            ok = xi(omega(V)).matrix == V.matrix
            yield "roundtrip", ok, None
        if want("splice"):
            columns = [column] if column else list(range(1, d.n - d.k + 1))
            for a in columns:
                if not in_U_a(V, a):
                    # a fully frozen column must contain every point of the variety
                    if chart_is_everything(d, a):
                        yield f"splice@{a}", False, "point escaped a frozen-column chart"
                    continue
                rep = splice_report(V, a)
                ok = all(v == "pass" for v in rep["checks"].values())
                yield f"splice@{a}", ok, None if ok else rep["checks"]


def cmd_verify(args) -> int:
    base = args.seed
    failures = []
    results = []
    if args.diagram:
        diagrams = [(0, load_diagram(args.diagram))]
    else:
        diagrams = []
        for t in range(args.trials):
            rng = random.Random(subseed(base, "diagram", t))
            diagrams.append((t, random_diagram(rng)))
    for t, d in diagrams:
        for name, ok, detail in _trial_checks(d, subseed(base, "point", t), args.only, args.column):
            results.append({"trial": t, "diagram": d.to_json(), "check": name, "ok": ok})
            if not ok:
                failures.append(
                    {"trial": t, "diagram": d.to_json(), "seed": subseed(base, "point", t),
                     "check": name, "column": args.column, "detail": detail}
                )
    doc = {
        "trials": len(diagrams),
        "checks": len(results),
        "failures": failures,
        "status": "pass" if not failures else "fail",
    }
    emit(doc, args.out)
    return 0 if not failures else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="skewpos", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, point=False, needs_diagram=True, formats=("json",)):
        p.add_argument("--diagram", required=needs_diagram, help="path to diagram JSON or inline JSON")
        p.add_argument("--seed", type=int, default=1)
        p.add_argument("--bound", type=int, default=100)
        p.add_argument("--trials", type=int, default=50)
        p.add_argument("--out", default=None)
        p.add_argument("--format", choices=list(formats), default=formats[0])
        if point:
            p.add_argument("--point", default=None, help="path to point JSON or inline JSON")

    p = sub.add_parser("inspect", help="labels, necklace, affine permutation, braid, ribbon, quiver")
    common(p)
    p.set_defaults(func=cmd_inspect)

    p = sub.add_parser("sample", help="sample an exact rational point")
    common(p)
    p.add_argument("--normalize-r1", action="store_true",
                   help="rescale free columns so the top-of-column minors equal 1")
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("quiver", help="emit the initial quiver")
    common(p, formats=("json", "dot"))
    p.set_defaults(func=cmd_quiver)

    p = sub.add_parser("plabic", help="emit lattice trips and the label table")
    common(p, formats=("json", "text"))
    p.set_defaults(func=cmd_plabic)

    p = sub.add_parser("splice", help="split a point along a column and verify the identities")
    common(p, point=True)
    p.add_argument("--column", type=int, required=True)
    p.set_defaults(func=cmd_splice)

    p = sub.add_parser("mutate", help="mutate the initial seed at a box")
    common(p, point=True)
    p.add_argument("--box", required=True, help="box as 'a,i'")
    p.set_defaults(func=cmd_mutate)

    p = sub.add_parser("verify", help="run the property suite on random diagrams and points")
    common(p, needs_diagram=False)
    p.add_argument("--column", type=int, default=None)
    p.add_argument(
        "--only",
        choices=["combinatorics", "plabic", "membership", "roundtrip", "splice"],
        default=None,
    )
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (OSError, json.JSONDecodeError, ValueError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
