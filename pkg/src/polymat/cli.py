"""Command-line entry point.

Exit status: 0 success, 1 a checked property failed, 2 invalid input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from .cone import ConeDescription, build_cone, verify_facets
from .core import CapacityError, FamilyParams, PolymatError, Presentation, family_presentation
from .diagram import render
from .hilbert import (
    InconsistentHilbertError,
    check_canonical_shift,
    check_gorenstein_symmetry,
    check_normality,
    hilbert_data,
)
from .intersect import (
    NotABaseRingError,
    PairParams,
    decide_general,
    intersection_base_set,
    sweep_theorem,
    verify_witness,
    witness,
)
from .polymatroid import (
    BaseSet,
    check_base_exchange,
    enumerate_bases,
    exhaustive_recognize,
    recognize_transversal,
)

EXIT_OK, EXIT_FAILED, EXIT_INVALID = 0, 1, 2
DEFAULT_ENUM_MAX_N = 8


class UsageError(PolymatError):
    pass


def enumeration_cap() -> int:
    raw = os.environ.get("POLYMAT_MAX_N")
    return int(raw) if raw else DEFAULT_ENUM_MAX_N


@dataclass
class Source:
    """What a command operates on: a base set, plus the family cone when it is known."""

    n: int
    gens: BaseSet
    families: list[FamilyParams] | None = None
    presentation: Presentation | None = None
    pair: PairParams | None = None

    @property
    def cone(self) -> ConeDescription | None:
        return build_cone(self.families, self.n) if self.families else None


def _load_json(path: str) -> dict:
    try:
        return json.loads(Path(path).read_text())
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path} is not valid JSON: {exc}") from None


def _check_cap(n: int) -> None:
    cap = enumeration_cap()
    if n > cap:
        raise CapacityError(f"n = {n} exceeds the enumeration limit {cap} (set POLYMAT_MAX_N to override)")


def _source(args: argparse.Namespace) -> Source:
    if getattr(args, "input", None):
        data = _load_json(args.input)
        if isinstance(data, dict) and "sets" in data:
            P = Presentation.from_dict(data)
            _check_cap(P.n)
            return Source(P.n, enumerate_bases(P), presentation=P)
        if isinstance(data, dict) and "points" in data:
            B = BaseSet.from_dict(data)
            _check_cap(B.n)
            return Source(B.n, B)
        raise UsageError(f"{args.input} holds neither a presentation ('sets') nor a base set ('points')")
    pair = getattr(args, "pair", None)
    if pair:
        p = PairParams.parse(pair)
        _check_cap(p.n)
        return Source(p.n, intersection_base_set(p), families=[p.first, p.second], pair=p)
    fams = getattr(args, "family", None)
    if fams:
        families = [FamilyParams.parse(f) for f in fams]
        n = families[0].n
        if any(f.n != n for f in families):
            raise UsageError("all --family arguments must share n")
        _check_cap(n)
        points = None
        for f in families:
            pts = enumerate_bases(family_presentation(f)).points
            points = pts if points is None else points & pts
        P = family_presentation(families[0]) if len(families) == 1 else None
        return Source(n, BaseSet(n, points), families=families, presentation=P)
    raise UsageError("give --input FILE, --pair n,i1,i2,t2 or --family n,i,t")


def _pair_from_args(args: argparse.Namespace) -> tuple[int, int, int, int, int]:
    if args.input:
        data = _load_json(args.input)
        try:
            return data["n"], data["i1"], data.get("t1", 0), data["i2"], data["t2"]
        except (KeyError, TypeError, AttributeError):
            raise UsageError("pair JSON needs keys n, i1, i2, t2") from None
    if args.pair:
        p = PairParams.parse(args.pair)
        return p.n, p.i1, args.t1, p.i2, p.t2
    if None in (args.n, args.i1, args.i2, args.t2):
        raise UsageError("give --pair n,i1,i2,t2 or all of -n, --i1, --i2, --t2")
    return args.n, args.i1, args.t1, args.i2, args.t2


# -- commands ---------------------------------------------------------------


def cmd_bases(args) -> tuple[dict, int]:
    src = _source(args)
    violation = check_base_exchange(src.gens)
    report = src.gens.to_dict()
    report["count"] = len(src.gens)
    report["exchange_axiom"] = violation is None
    if violation is not None:
        report["violation"] = {"u": list(violation.u), "v": list(violation.v), "index": violation.index}
    return report, EXIT_OK if violation is None else EXIT_FAILED


def cmd_cone(args) -> tuple[dict, int]:
    src = _source(args)
    C = src.cone
    if C is None:
        raise UsageError("cone needs --family or --pair")
    facets = verify_facets(C, src.gens, max_degree=args.facet_degree)
    report = C.to_dict()
    report["facets"] = facets.to_dict()
    report["checks"] = [f"irreducible facet representation: {'ok' if facets.passed else 'FAILED'}"]
    return report, EXIT_OK if facets.passed else EXIT_FAILED


def cmd_hilbert(args) -> tuple[dict, int]:
    src = _source(args)
    try:
        data = hilbert_data(src.gens, src.n, max_degree=args.max_degree)
    except InconsistentHilbertError as exc:
        return {"n": src.n, "error": str(exc)}, EXIT_FAILED
    return data.to_dict(), EXIT_OK


def cmd_gorenstein(args) -> tuple[dict, int]:
    src = _source(args)
    C = src.cone
    if C is None:
        raise UsageError("gorenstein needs --family or --pair")
    normal_fail = check_normality(src.gens, C, args.normality_degree)
    shift_fail = check_canonical_shift(C, args.shift_degree)
    try:
        data = hilbert_data(src.gens, src.n)
        a, symmetric, h = data.a_invariant, data.gorenstein_symmetric, data.h
    except InconsistentHilbertError:
        a, symmetric, h = None, False, None
    ok = normal_fail is None and shift_fail is None and a == -1 and symmetric
    report = {
        "n": src.n,
        "normality": {"max_degree": args.normality_degree, "first_failure": normal_fail},
        "canonical_shift": {"max_degree": args.shift_degree, "first_failure": shift_fail},
        "h": list(h) if h is not None else None,
        "a_invariant": a,
        "gorenstein_symmetric": symmetric,
        "checks": [
            f"normality up to degree {args.normality_degree}: {'ok' if normal_fail is None else 'FAILED'}",
            f"canonical module = (x_1...x_n) R up to degree {args.shift_degree}: {'ok' if shift_fail is None else 'FAILED'}",
            f"a-invariant = -1: {'ok' if a == -1 else 'FAILED'}",
            f"palindromic h-vector: {'ok' if symmetric else 'FAILED'}",
        ],
        "passed": ok,
    }
    return report, EXIT_OK if ok else EXIT_FAILED


def cmd_decide(args) -> tuple[dict, int]:
    n, i1, t1, i2, t2 = _pair_from_args(args)
    out = decide_general(n, i1, t1, i2, t2)
    return out.to_dict(), EXIT_OK


def cmd_witness(args) -> tuple[dict, int]:
    n, i1, t1, i2, t2 = _pair_from_args(args)
    out = decide_general(n, i1, t1, i2, t2)
    if not out.is_base_ring:
        raise NotABaseRingError(f"({n}, {i1}, {i2}, {t2}) is not a base ring; no witness exists")
    ok = verify_witness(out.params)
    report = {"condition": out.condition, "lemma_case": out.lemma_case, "witness": out.witness.to_dict(), "verified": ok}
    return report, EXIT_OK if ok else EXIT_FAILED


def cmd_sweep(args) -> tuple[dict, int]:
    report = sweep_theorem(args.n, jobs=args.jobs)
    return report.to_dict(), EXIT_OK if report.passed else EXIT_FAILED


def cmd_recognize(args) -> tuple[dict, int]:
    src = _source(args)
    result = exhaustive_recognize(src.gens) if args.exhaustive else recognize_transversal(src.gens)
    return result.to_dict(), EXIT_OK


def cmd_diagram(args) -> tuple[str, int]:
    if args.pair_witness:
        p = PairParams.parse(args.pair_witness)
        P = witness(p)
    else:
        src = _source(args)
        if src.presentation is None:
            raise UsageError("diagram needs a presentation: --input with 'sets', a single --family, or --pair-witness")
        P = src.presentation
    return render(P, args.format), EXIT_OK


# -- output -----------------------------------------------------------------


def format_table(report: dict) -> str:
    width = max((len(k) for k in report), default=0)
    lines = []
    for key, value in report.items():
        if not isinstance(value, str):
            value = json.dumps(value, separators=(",", ":"))
        lines.append(f"{key.ljust(width)}  {value}")
    return "\n".join(lines) + "\n"


def emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="polymat", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp: argparse.ArgumentParser, source: bool = True, fmt: bool = True) -> None:
        if source:
            sp.add_argument("--family", action="append", metavar="N,I,T", help="family shorthand; repeat to intersect")
            sp.add_argument("--pair", metavar="N,I1,I2,T2", help="intersection of (n,i1,0) and (n,i2,t2)")
            sp.add_argument("--input", metavar="FILE", help="presentation or base set JSON (overrides inline params)")
        if fmt:
            sp.add_argument("--format", choices=["json", "table"], default="json")
        sp.add_argument("--output", metavar="PATH")
        sp.add_argument("--jobs", type=int, default=1, help="worker count hint")

    sp = sub.add_parser("bases", help="enumerate a base set and check the exchange axiom")
    common(sp)
    sp.set_defaults(func=cmd_bases)

    sp = sub.add_parser("cone", help="facet normals and irredundancy report")
    common(sp)
    sp.add_argument("--facet-degree", type=_positive, default=2)
    sp.set_defaults(func=cmd_cone)

    sp = sub.add_parser("hilbert", help="Hilbert function, h-vector, a-invariant")
    common(sp)
    sp.add_argument("--max-degree", type=_positive, default=None)
    sp.set_defaults(func=cmd_hilbert)

    sp = sub.add_parser("gorenstein", help="normality, canonical shift, symmetry and a-invariant")
    common(sp)
    sp.add_argument("--normality-degree", type=_positive, default=3)
    sp.add_argument("--shift-degree", type=_positive, default=4)
    sp.set_defaults(func=cmd_gorenstein)

    for name, func, text in (
        ("decide", cmd_decide, "is K[A ∩ B] the base ring of a transversal polymatroid?"),
        ("witness", cmd_witness, "explicit presentation for a yes-instance"),
    ):
        sp = sub.add_parser(name, help=text)
        common(sp, source=False)
        sp.add_argument("--pair", metavar="N,I1,I2,T2")
        sp.add_argument("--input", metavar="FILE", help="pair JSON {n,i1,i2,t2[,t1]}")
        sp.add_argument("-n", type=int)
        sp.add_argument("--i1", type=int)
        sp.add_argument("--i2", type=int)
        sp.add_argument("--t1", type=int, default=0)
        sp.add_argument("--t2", type=int)
        sp.set_defaults(func=func)

    sp = sub.add_parser("sweep", help="exhaustive cross-check of the decision procedure")
    common(sp, source=False)
    sp.add_argument("-n", type=int, required=True)
    sp.set_defaults(func=cmd_sweep)

    sp = sub.add_parser("recognize", help="is a base set transversal?")
    common(sp)
    sp.add_argument("--exhaustive", action="store_true", help="use brute-force search (n <= 5)")
    sp.set_defaults(func=cmd_recognize)

    sp = sub.add_parser("diagram", help="render a polymatroidal diagram")
    common(sp, fmt=False)
    sp.add_argument("--pair-witness", metavar="N,I1,I2,T2", help="draw the witness presentation of a pair")
    sp.add_argument("--format", choices=["ascii", "svg"], default="ascii")
    sp.set_defaults(func=cmd_diagram)
    return parser


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("degree bounds must be >= 1")
    return value


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INVALID if exc.code else EXIT_OK
    try:
        report, status = args.func(args)
    except (PolymatError, ValueError) as exc:
        sys.stderr.write(f"polymat: error: {exc}\n")
        return EXIT_INVALID
    if isinstance(report, str):
        text = report
    elif args.format == "table":
        text = format_table(report)
    else:
        text = json.dumps(report, ensure_ascii=False) + "\n"
    emit(text, args.output)
    return status


if __name__ == "__main__":
    sys.exit(main())
