"""Command-line front end: run a verification pipeline and report both sides."""
from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass
from typing import Any, Callable, Sequence

from . import checks
from .positivity import EXPANSIONS, ORDERINGS
from .tower import CONVENTIONS


@dataclass(frozen=True)
class Report:
    command: str
    inputs: dict[str, Any]
    expected: Any
    computed: Any
    match: bool
    ordering_used: str | None
    convention: str | None
    elapsed_ms: int

    def to_json(self) -> str:
        return json.dumps(self.__dict__, sort_keys=True, indent=2) + "\n"

    def to_text(self) -> str:
        lines = [f"command: {self.command}"]
        for k in sorted(self.inputs):
            lines.append(f"  {k} = {self.inputs[k]}")
        for tag in ("ordering_used", "convention"):
            if getattr(self, tag) is not None:
                lines.append(f"{tag}: {getattr(self, tag)}")
        exp = dict(_flatten(self.expected)) if self.expected is not None else {}
        com = dict(_flatten(self.computed))
        keys = list(com) + [k for k in exp if k not in com]
        width = max((len(k) for k in keys), default=0)
        lines.append(f"{'':{width}}  {'expected':>14}  computed")
        for k in keys:
            e = exp.get(k, "-") if self.expected is not None else "n/a"
            c = com.get(k, "-")
            flag = "" if self.expected is None or e == c else "   <-- differs"
            if len(str(e)) > 14 or len(str(c)) > 40:
                lines.append(f"{k}{flag}")
                lines.append(f"    expected: {e}")
                lines.append(f"    computed: {c}")
            else:
                lines.append(f"{k:{width}}  {e!s:>14}  {c}{flag}")
        if self.expected is None:
            lines.append("match: no published value to compare")
        else:
            lines.append(f"match: {'yes' if self.match else 'NO'}")
        if self.elapsed_ms:
            lines.append(f"elapsed: {self.elapsed_ms} ms")
        return "\n".join(lines) + "\n"


def _flatten(x, prefix: str = ""):
    if isinstance(x, dict):
        for k, v in x.items():
            yield from _flatten(v, f"{prefix}.{k}" if prefix else str(k))
    elif isinstance(x, list) and x and all(isinstance(v, (dict, list)) for v in x):
        for i, v in enumerate(x):
            yield from _flatten(v, f"{prefix}[{i}]")
    else:
        yield (prefix or "value"), x


def _ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _add_format(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out", metavar="PATH", help="also write the report to PATH")
    p.add_argument("--timing", action="store_true", help="record elapsed_ms (otherwise 0, keeping output deterministic)")


def _add_morse_opts(p: argparse.ArgumentParser) -> None:
    p.add_argument("--expansion", choices=EXPANSIONS, default="capped")
    p.add_argument("--convention", choices=CONVENTIONS, default="printed")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jettower", description="Exact intersection computations on a jet tower of a hypersurface in P^4."
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("verify", help="relations, Chern classes of V_1, Whitney checks, Z_2")
    p.add_argument("what", choices=("rel1", "rel2", "rel3", "chern-v1", "whitney", "z2"))
    p.add_argument("--convention", choices=CONVENTIONS, default="printed")
    p.add_argument("--d", type=int, default=None, help="degree (whitney, z2); symbolic when omitted")

    p = sub.add_parser("morse", help="the Morse quantity on Z_2")
    p.add_argument("--weights", type=_ints, default=checks.ref.MORSE_WEIGHTS, help="a_1,a_2 (default 5,1)")
    p.add_argument("--htwist", type=int, default=checks.ref.MORSE_H_TWIST)
    p.add_argument("--gtwist", type=int, default=checks.ref.MORSE_G_TWIST)
    p.add_argument("--d", type=int, default=None, help="numeric degree; symbolic when omitted")
    p.add_argument("--ordering", choices=("auto",) + ORDERINGS, default="auto")
    _add_morse_opts(p)

    for name, hlp in (
        ("threshold", "least d with a positive Morse quantity"),
        ("alpha", "the Morse quantity with G = 24h + delta K_X"),
        ("bound93", "effective degree bound for degeneracy"),
    ):
        _add_morse_opts(sub.add_parser(name, help=hlp))

    p = sub.add_parser("ranks", help="rank of the Green-Griffiths bundle against brute force")
    p.add_argument("--pmax", type=int, default=2)
    p.add_argument("--kmax", type=int, default=2)
    p.add_argument("--mmax", type=int, default=4)
    p.add_argument("--nmax", type=int, default=3)

    sub.add_parser("vanishing", help="vanishing predicates")

    p = sub.add_parser("euler-char", help="chi of the (m,m,0) Schur power of the cotangent bundle")
    p.add_argument("--d", type=_ints, default=(6, 7, 10), help="comma-separated degrees")
    p.add_argument("--mroutes", type=int, default=4, help="compare both routes for m <= this")

    p = sub.add_parser("tangency", help="coefficient vector fields tangent to the jet ideal")
    p.add_argument("--d", type=_ints, default=(3, 4), help="comma-separated degrees in 3..6")

    p = sub.add_parser("pole-audit", help="Cramer-rule pole order of the vector fields")
    p.add_argument("--d", type=int, default=3)

    p = sub.add_parser("dims", help="tower dimensions and ranks")
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--r", type=int, default=3)
    p.add_argument("--kmax", type=int, default=4)

    sub.add_parser("anchors", help="Schubert calculus anchors")

    p = sub.add_parser("nef", help="nef weights from the recursion")
    p.add_argument("--p", type=int, default=2)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--variant", choices=("A", "B"), default="B")

    for p in sub.choices.values():
        _add_format(p)
    return parser


_VERIFY: dict[str, Callable[..., checks.CheckResult]] = {
    "rel1": lambda a: checks.level1_relation(a.convention),
    "rel2": lambda a: checks.level2_relation("rel2"),
    "rel3": lambda a: checks.level2_relation("rel3"),
    "chern-v1": lambda a: checks.v1_chern(a.convention),
    "whitney": lambda a: checks.whitney(a.d, a.convention),
    "z2": lambda a: checks.z2(a.d),
}


def _dispatch(args: argparse.Namespace) -> tuple[str, dict, checks.CheckResult]:
    c = args.command
    if c == "verify":
        inputs = {"what": args.what, "convention": args.convention, "d": args.d}
        return f"verify {args.what}", inputs, _VERIFY[args.what](args)
    if c == "morse":
        inputs = {
            "weights": list(args.weights),
            "htwist": args.htwist,
            "gtwist": args.gtwist,
            "d": args.d,
            "ordering": args.ordering,
            "expansion": args.expansion,
        }
        res = checks.morse(args.weights, args.htwist, args.gtwist, args.d, args.ordering, args.expansion, args.convention)
        return c, inputs, res
    if c in ("threshold", "alpha", "bound93"):
        fn = {"threshold": checks.threshold, "alpha": checks.alpha, "bound93": checks.bound}[c]
        return c, {"expansion": args.expansion}, fn(args.expansion, args.convention)
    if c == "ranks":
        inputs = {"pmax": args.pmax, "kmax": args.kmax, "mmax": args.mmax, "nmax": args.nmax}
        return c, inputs, checks.ranks_grid(args.pmax, args.kmax, args.mmax, args.nmax)
    if c == "vanishing":
        return c, {}, checks.vanishing_cases()
    if c == "euler-char":
        return c, {"d": list(args.d), "mroutes": args.mroutes}, checks.euler_char(args.d, args.mroutes)
    if c == "tangency":
        return c, {"d": list(args.d)}, checks.tangency(args.d)
    if c == "pole-audit":
        return c, {"d": args.d}, checks.pole_audit(args.d)
    if c == "dims":
        return c, {"n": args.n, "r": args.r, "kmax": args.kmax}, checks.dims(args.n, args.r, args.kmax)
    if c == "anchors":
        return c, {}, checks.schubert_anchors()
    if c == "nef":
        return c, {"p": args.p, "k": args.k, "variant": args.variant}, checks.nef_weights(args.p, args.k, args.variant)
    raise AssertionError(c)


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    start = time.perf_counter()
    try:
        command, inputs, res = _dispatch(args)
    except ValueError as exc:
        parser.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return 2
    elapsed = int((time.perf_counter() - start) * 1000) if args.timing else 0
    report = Report(
        command=command,
        inputs=inputs,
        expected=res.expected,
        computed=res.computed,
        match=res.match,
        ordering_used=res.tags.get("ordering_used"),
        convention=res.tags.get("convention"),
        elapsed_ms=elapsed,
    )
    text = report.to_json() if args.format == "json" else report.to_text()
    sys.stdout.write(text)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    # nothing published to compare against counts as "no mismatch"
    return 0 if report.match or report.expected is None else 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
