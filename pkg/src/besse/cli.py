"""Command-line front end.

Every subcommand writes one JSON document (or flat ``key: value`` text
with ``--format text``) to stdout.  Exit status is 0 on success, 1 on
invalid input and 2 when two independent computations disagree.

    besse realizable --seifert "0;(1,0)"
    besse compare --first "0;(2,3)" --second "0;(1,1),(2,1)"
    besse cohomology --weights 2,3 --euler-coeff 5
    besse example --hopf 2 3
    besse selftest --seed 7
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction
from math import gcd
from typing import Any

from . import cohomology as coh
from .classify import (
    PeriodSpectrum,
    classify,
    finitely_covered_by_trivial,
    is_besse_realizable,
    prime_period_spectrum,
)
from .errors import InconsistencyError
from .generators import ellipsoid_boundary, trivial_fibration, weighted_hopf
from .moves import random_invariants, random_move_sequence
from .orbifold import base_of, geometry_type, is_developable, orbifold_euler_characteristic
from .seifert import (
    SeifertInvariants,
    euler_number,
    normalize,
    parse_seifert,
    reverse_orientation,
)

SEIFERT_GRAMMAR = "g;(a1,b1),(a2,b2),...  with g a signed integer, a >= 1, gcd(a,b) = 1 when a >= 2"


class UsageError(Exception):
    def __init__(self, message: str, token: str | None = None, expected: str | None = None):
        super().__init__(message)
        self.token = token
        self.expected = expected


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message, expected=self.format_usage().strip())


def fraction_str(x: Fraction) -> str:
    """Lowest-terms ``p/q`` with an explicit sign; zero is ``0/1``."""
    x = Fraction(x)
    if x == 0:
        return "0/1"
    sign = "+" if x > 0 else "-"
    return f"{sign}{abs(x.numerator)}/{x.denominator}"


def spectrum_json(p: PeriodSpectrum) -> list[str]:
    return [fraction_str(v) for v in p.sorted()]


def base_report(s: SeifertInvariants) -> dict[str, Any]:
    o = base_of(s)
    return {
        "orbifold": str(o),
        "orientable": o.orientable,
        "genus": o.genus,
        "cone_orders": list(o.cone_orders),
        "chi_orb": fraction_str(orbifold_euler_characteristic(o)),
        "developable": is_developable(o),
        "geometry": geometry_type(o).value,
    }


def realizability_report(s: SeifertInvariants) -> dict[str, Any]:
    e = euler_number(s)
    ok = is_besse_realizable(s)
    covered = finitely_covered_by_trivial(s)
    if ok == covered:
        raise InconsistencyError(
            f"realizable={ok} and finitely_covered_by_trivial={covered} for {s}"
        )
    if ok:
        reason = f"euler_number = {fraction_str(e)} != 0"
    else:
        reason = "euler_number = 0"
    return {
        "realizable": ok,
        "finitely_covered_by_trivial": covered,
        "reason": reason,
    }


def seifert_report(s: SeifertInvariants) -> dict[str, Any]:
    e = euler_number(s)
    doc = {
        "input": str(s),
        "normal_form": str(normalize(s)),
        "euler_number": fraction_str(e),
        "base": base_report(s),
        "realizability": realizability_report(s),
        "spectrum": spectrum_json(prime_period_spectrum(s)) if e != 0 else None,
    }
    if not s.orientable_base:
        doc["note"] = "nonorientable base: only vanishing of the Euler number is convention-independent"
    return doc


def _seifert_arg(text: str, flag: str) -> SeifertInvariants:
    try:
        return parse_seifert(text)
    except ValueError as exc:
        raise UsageError(str(exc), token=text, expected=f"{flag} '{SEIFERT_GRAMMAR}'")


def _int_list(text: str, flag: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise UsageError(f"{flag} expects comma-separated integers", token=text,
                         expected=f"{flag} a0,a1,...,an")


def _rational(text: str, flag: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"{flag} expects a rational number", token=text, expected=f"{flag} p/q")


def cmd_normalize(args):
    s = _seifert_arg(args.seifert, "--seifert")
    return {
        "command": "normalize",
        "input": str(s),
        "normal_form": str(normalize(s)),
        "euler_number": fraction_str(euler_number(s)),
    }


def cmd_euler(args):
    s = _seifert_arg(args.seifert, "--seifert")
    return {"command": "euler", "input": str(s), "euler_number": fraction_str(euler_number(s))}


def cmd_base(args):
    s = _seifert_arg(args.seifert, "--seifert")
    return {"command": "base", "input": str(s), "base": base_report(s)}


def cmd_realizable(args):
    s = _seifert_arg(args.seifert, "--seifert")
    doc = seifert_report(s)
    doc["command"] = "realizable"
    doc["verdict"] = doc["realizability"]["realizable"]
    return doc


def cmd_spectrum(args):
    s = _seifert_arg(args.seifert, "--seifert")
    if not is_besse_realizable(s):
        raise UsageError(
            f"{s} has euler_number = 0 and is not realized by a Besse Reeb flow",
            token=args.seifert,
            expected="Seifert data with nonzero Euler number",
        )
    return {
        "command": "spectrum",
        "input": str(s),
        "euler_number": fraction_str(euler_number(s)),
        "spectrum": spectrum_json(prime_period_spectrum(s)),
        "units": "2*pi",
    }


def cmd_compare(args):
    s1 = _seifert_arg(args.first, "--first")
    s2 = _seifert_arg(args.second, "--second")
    res = classify(s1, s2, args.allow_reversal)
    # the verdict kind must not depend on argument order
    if classify(s2, s1, args.allow_reversal).verdict is not res.verdict:
        raise InconsistencyError(f"classify is not symmetric on {s1} and {s2}")
    doc = {
        "command": "compare",
        "allow_reversal": args.allow_reversal,
        "first": seifert_report(s1),
        "second": seifert_report(s2),
        "verdict": res.verdict.value,
    }
    if res.side is not None:
        doc["not_realizable_side"] = res.side.value
    if "spectra_match" in res.witness:
        doc["spectra_match"] = res.witness["spectra_match"]
    if args.allow_reversal:
        doc["second_reversed_normal_form"] = str(normalize(reverse_orientation(s2)))
    return doc


def cmd_cohomology(args):
    if (args.weights is None) == (args.cyclic is None):
        raise UsageError("give exactly one of --weights or --cyclic",
                         expected="cohomology (--weights a0,...,an | --cyclic k) [--euler-coeff k]")
    if args.weights is not None:
        weights = _int_list(args.weights, "--weights")
        try:
            r = coh.weighted_projective_ring(weights)
        except ValueError as exc:
            raise UsageError(str(exc), token=args.weights, expected="--weights a0,...,an with ai >= 1")
        source = {"weighted_projective": weights}
        orbifold_dim = 2 * (len(weights) - 1)
    else:
        if args.cyclic < 1:
            raise UsageError("--cyclic expects k >= 1", token=str(args.cyclic), expected="--cyclic k")
        r = coh.cyclic_quotient_ring(args.cyclic)
        source = {"cyclic_quotient": args.cyclic}
        orbifold_dim = 2
    top = max(2 * r.d + 2, 8)
    doc = {
        "command": "cohomology",
        "source": source,
        "ring": {"d": r.d, "m": r.m, "presentation": str(r)},
        "groups": {str(i): str(coh.cohomology_group(r, i)) for i in range(top + 1)},
        "orbifold_is_manifold": coh.orbifold_is_manifold(r),
        "bundle_classes": str(coh.count_bundle_classes(r)),
        "thresholds": {
            "stable_range_from": r.stable_degree,
            "besse_bundle_threshold": orbifold_dim + 1,
        },
    }
    if args.euler_coeff is not None:
        e = coh.EulerClassCoeff.in_ring(r, args.euler_coeff)
        holds = coh.euler_condition_holds(r, e)
        brute = coh.multiplication_is_bijective(e.k, r.m)
        if brute != (gcd(e.k, r.m) == 1):
            raise InconsistencyError(f"brute-force and gcd disagree for {r}, k={e.k}")
        doc["euler_class"] = {
            "k": e.k,
            "gcd_k_m": gcd(e.k, r.m),
            "euler_condition_holds": holds,
            "multiplication_bijective": brute,
            "total_space_is_manifold": coh.total_space_is_manifold(r, e),
        }
    return doc


def cmd_example(args):
    if args.hopf is not None:
        p, q = args.hopf
        try:
            s, spec = weighted_hopf(p, q)
        except ValueError as exc:
            raise UsageError(str(exc), token=f"{p} {q}", expected="--hopf p q with gcd(p,q) = 1")
        provenance = {"kind": "weighted_hopf", "p": min(p, q), "q": max(p, q)}
    elif args.ellipsoid is not None:
        a = _rational(args.ellipsoid[0], "--ellipsoid")
        b = _rational(args.ellipsoid[1], "--ellipsoid")
        try:
            s, spec = ellipsoid_boundary(a, b)
        except ValueError as exc:
            raise UsageError(str(exc), token=" ".join(args.ellipsoid),
                             expected="--ellipsoid a b with a, b > 0")
        provenance = {
            "kind": "ellipsoid_boundary",
            "a": fraction_str(a),
            "b": fraction_str(b),
            "invariants_via": "weighted_hopf of b/a = q/p (Bezout construction)",
        }
    elif args.trivial is not None:
        s, spec = trivial_fibration(args.trivial), None
        provenance = {"kind": "trivial_fibration", "g": args.trivial}
    else:
        raise UsageError("example needs one of --hopf, --ellipsoid, --trivial",
                         expected="example (--hopf p q | --ellipsoid a b | --trivial g)")
    doc = seifert_report(s)
    doc["command"] = "example"
    doc["provenance"] = provenance
    if spec is not None and doc["spectrum"] != spectrum_json(spec):
        raise InconsistencyError("generator spectrum differs from the classifier's")
    return doc


def selftest(seed: int, trials: int) -> dict[str, Any]:
    """Randomized cross-checks between independent code paths."""
    rng = random.Random(seed)
    failures: list[str] = []
    for _ in range(trials):
        s = random_invariants(rng)
        if is_besse_realizable(s) == finitely_covered_by_trivial(s):
            failures.append(f"realizable/covered agree on {s}")
        n = normalize(s)
        if normalize(n) != n or euler_number(n) != euler_number(s):
            failures.append(f"normalize broken on {s}")
        for t in random_move_sequence(s, rng, 3)[1:]:
            if euler_number(t) != euler_number(s) or normalize(t) != n:
                failures.append(f"move changed invariants: {s} -> {t}")
        k, m = rng.randint(0, 200), rng.randint(1, 200)
        if coh.multiplication_is_bijective(k, m) != (gcd(k, m) == 1):
            failures.append(f"cup check disagrees with gcd for k={k}, m={m}")
    return {
        "command": "selftest",
        "seed": seed,
        "trials": trials,
        "failures": failures[:20],
        "failure_count": len(failures),
        "ok": not failures,
    }


def cmd_selftest(args):
    doc = selftest(args.seed, args.trials)
    if not doc["ok"]:
        raise InconsistencyError(json.dumps(doc, sort_keys=True))
    return doc


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=["json", "text"], default="json")

    parser = _Parser(prog="besse", description="Besse Reeb flows on Seifert fibered 3-manifolds.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    for name, func, helptext in [
        ("normalize", cmd_normalize, "normal form of Seifert invariants"),
        ("euler", cmd_euler, "Euler number -sum(b/a)"),
        ("base", cmd_base, "base 2-orbifold summary"),
        ("realizable", cmd_realizable, "decide Besse realizability"),
        ("spectrum", cmd_spectrum, "prime period spectrum in units of 2*pi"),
    ]:
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("--seifert", required=True, metavar="'g;(a,b),...'")
        p.set_defaults(func=func)

    p = sub.add_parser("compare", parents=[common], help="classify two fibrations")
    p.add_argument("--first", required=True)
    p.add_argument("--second", required=True)
    p.add_argument("--allow-reversal", action="store_true")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("cohomology", parents=[common], help="cyclic orbifold cohomology")
    p.add_argument("--weights", help="weighted projective weights a0,...,an")
    p.add_argument("--cyclic", type=int, help="cyclic quotient C/Z_k")
    p.add_argument("--euler-coeff", type=int, help="Euler class e = k u")
    p.set_defaults(func=cmd_cohomology)

    p = sub.add_parser("example", parents=[common], help="generate example fibrations")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--hopf", nargs=2, type=int, metavar=("P", "Q"))
    g.add_argument("--ellipsoid", nargs=2, metavar=("A", "B"))
    g.add_argument("--trivial", type=int, metavar="G")
    p.set_defaults(func=cmd_example)

    p = sub.add_parser("selftest", parents=[common], help="randomized consistency checks")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=10_000)
    p.set_defaults(func=cmd_selftest)
    return parser


def _flatten(doc, prefix=""):
    if isinstance(doc, dict):
        for key in sorted(doc):
            yield from _flatten(doc[key], f"{prefix}{key}.")
    elif isinstance(doc, list) and not all(isinstance(v, (str, int)) for v in doc):
        for i, v in enumerate(doc):
            yield from _flatten(v, f"{prefix}{i}.")
    else:
        if isinstance(doc, list):
            doc = "[" + ", ".join(map(str, doc)) + "]"
        yield f"{prefix[:-1]}: {doc}"


def render(doc: dict[str, Any], fmt: str = "json") -> str:
    if fmt == "text":
        return "\n".join(_flatten(doc)) + "\n"
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


_VALUE_FLAGS = {"--seifert", "--first", "--second", "--trivial", "--cyclic", "--euler-coeff"}


def _glue_values(argv: list[str]) -> list[str]:
    # "-1;(2,1)" would otherwise be read as an option
    out, i = [], 0
    while i < len(argv):
        if argv[i] in _VALUE_FLAGS and i + 1 < len(argv):
            out.append(f"{argv[i]}={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def main(argv: list[str] | None = None) -> int:
    argv = _glue_values(sys.argv[1:] if argv is None else list(argv))
    fmt = "text" if "--format=text" in argv or _follows(argv, "--format", "text") else "json"
    try:
        args = build_parser().parse_args(argv)
        doc, status = args.func(args), 0
    except UsageError as exc:
        doc, status = {"error": str(exc), "token": exc.token, "expected": exc.expected}, 1
    except InconsistencyError as exc:
        doc, status = {"error": "internal inconsistency", "detail": str(exc)}, 2
    sys.stdout.write(render(doc, fmt))
    return status


def _follows(argv, flag, value):
    return any(a == flag and b == value for a, b in zip(argv, argv[1:]))


if __name__ == "__main__":
    sys.exit(main())
