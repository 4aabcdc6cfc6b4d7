"""Command-line front end.

One polynomial per invocation (from --poly text or a named corpus entry),
one analysis subcommand, deterministic output for a fixed seed.  --json
emits a machine-readable report with the request echoed back; --strict
turns analysis-negative verdicts (NotTame, a critical-point witness, a
failed containment test) into exit code 2.  Errors exit with code 1.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import arcs, constructors, degeneracy, newton, zeta
from .errors import MixedMilnorError
from .poly import MixedPoly, parse_poly

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_NEGATIVE = 2


def _parse_complex(text: str) -> complex:
    return complex(text.strip().replace(" ", "").replace("i", "j") or "0")


def _parse_point(text: str):
    return [_parse_complex(part) for part in text.split(",")]


def _parse_ints(text: str):
    return [int(x) for x in text.replace(",", " ").split()]


def _load_poly(args, suffix="") -> MixedPoly:
    poly_text = getattr(args, "poly" + suffix, None)
    corpus_name = getattr(args, "corpus" + suffix, None)
    if poly_text and corpus_name:
        raise MixedMilnorError(f"give either --poly{suffix} or --corpus{suffix}, not both")
    if poly_text:
        return parse_poly(poly_text)
    if corpus_name:
        params = getattr(args, "params" + suffix, None)
        return constructors.corpus(corpus_name, _parse_ints(params) if params else ())
    raise MixedMilnorError(f"missing input: --poly{suffix} or --corpus{suffix}")


def _subset(args):
    if not args.subset:
        return None
    return frozenset(_parse_ints(args.subset))


# ---------------------------------------------------------------------------
# Command implementations: each returns (result dict, negative flag, text)
# ---------------------------------------------------------------------------


def cmd_newton(args):
    f = _load_poly(args)
    result = newton.newton_report(f)
    lines = [
        f"polynomial: {f.to_text()}",
        f"vertices: {result['vertices']}",
        f"convenient: {result['convenient']}",
    ]
    for fc in result["essential_faces"]:
        lines.append(
            f"essential face I={fc['I']}: generators {fc['generators']}, "
            f"witness {fc['witness']}, d={fc['d']}"
        )
    for fc in result["inessential_faces"]:
        lines.append(f"inessential face I={fc['I']}: generators {fc['generators']}")
    return result, False, "\n".join(lines)


def cmd_vanishing(args):
    f = _load_poly(args)
    report = newton.vanishing_subsets(f)
    result = {
        "vanishing": sorted(sorted(I) for I in report.vanishing),
        "nonvanishing": sorted(sorted(I) for I in report.nonvanishing),
    }
    text = f"vanishing subsets: {result['vanishing']}"
    return result, False, text


def cmd_faces(args):
    f = _load_poly(args)
    faces = newton.all_faces(f)
    result = {"faces": [newton.face_to_json(fc) for fc in faces]}
    lines = [
        f"{fc['kind']} dim={fc['dim']} generators={fc['generators']} I={fc['I']}"
        for fc in result["faces"]
    ]
    return result, False, "\n".join(lines)


def cmd_nondeg(args):
    f = _load_poly(args)
    verdicts = degeneracy.falsify_nondegeneracy(f, budget=args.budget, seed=args.seed)
    result = {"verdicts": [degeneracy.nondeg_verdict_to_json(v) for v in verdicts]}
    negative = any(
        v.status is not degeneracy.NondegStatus.NO_CRITICAL_POINT_FOUND
        for v in verdicts
    )
    lines = [
        f"face {v['face']['generators']} ({v['face']['kind']}): {v['status']}"
        for v in result["verdicts"]
    ]
    return result, negative, "\n".join(lines)


def cmd_tame(args):
    f = _load_poly(args)
    report = newton.vanishing_subsets(f)
    subset = _subset(args)
    subsets = [subset] if subset else sorted(report.vanishing, key=sorted)
    entries = []
    negative = False
    for I in subsets:
        verdict = degeneracy.local_tameness_check(
            f, I, probe_radius=args.radius, budget=args.budget, seed=args.seed
        )
        entries.append(degeneracy.tameness_verdict_to_json(I, verdict))
        if verdict.status is degeneracy.TameStatus.NOT_TAME:
            negative = True
    result = {"subspaces": entries}
    lines = [f"I={e['I']}: {e['status']} (radius {e['radius']})" for e in entries]
    if not entries:
        lines = ["no vanishing coordinate subspaces; tameness is vacuous"]
    return result, negative, "\n".join(lines)


def cmd_zeta(args):
    f = _load_poly(args)
    z = zeta.zeta_function(f)
    result = zeta.zeta_to_json(z)
    text = f"zeta(t) = {result['product']}"
    return result, False, text


def cmd_arc_limit(args):
    f = _load_poly(args)
    arc = arcs.parse_arc(args.arc, n=f.n)
    limit = arcs.limit_tangent(f, arc)
    result = arcs.limit_to_json(limit)
    text = (
        f"covector_g = {limit.covector_g}\ncovector_h = {limit.covector_h}\n"
        f"independent = {limit.independent}, steps = {len(limit.reduction_steps)}"
    )
    return result, False, text


def cmd_af_test(args):
    f = _load_poly(args)
    if not args.subset:
        raise MixedMilnorError("af-test needs --subset")
    I = frozenset(_parse_ints(args.subset))
    arc = arcs.parse_arc(args.arc, n=f.n)
    verdict = arcs.af_test_arc(f, arc, I)
    result = arcs.af_verdict_to_json(verdict)
    negative = verdict.contains_CI is False
    text = f"contains C^{sorted(I)}: {verdict.contains_CI}"
    return result, negative, text


def cmd_transversality(args):
    f = _load_poly(args)
    report = arcs.transversality_scan(
        f,
        radius=args.radius,
        delta=args.delta,
        samples=args.samples,
        seed=args.seed,
    )
    result = {
        "samples_drawn": report.samples_drawn,
        "accepted": report.accepted,
        "skipped_singular": report.skipped_singular,
        "min_residual": report.min_residual,
        "mean_residual": report.mean_residual,
    }
    text = (
        f"accepted {report.accepted} samples; min residual {report.min_residual:.6g}"
    )
    return result, False, text


def cmd_openness(args):
    f = _load_poly(args)
    if not args.point:
        raise MixedMilnorError("openness needs --point")
    p = _parse_point(args.point)
    report = arcs.boundary_openness_probe(
        f, p, epsilon=args.epsilon, samples=args.samples, seed=args.seed
    )
    result = {
        "arg_coverage": report.arg_coverage,
        "sector_halfwidth": report.sector_halfwidth,
        "nonzero_samples": report.nonzero_samples,
    }
    text = f"coverage {report.arg_coverage:.4f}" + (
        f", sector halfwidth {report.sector_halfwidth:.4f}"
        if report.sector_halfwidth is not None
        else ""
    )
    return result, False, text


def cmd_pullback(args):
    f = _load_poly(args)
    if not args.cover_a:
        raise MixedMilnorError("pullback needs --cover-a (and optionally --cover-b)")
    a = tuple(_parse_ints(args.cover_a))
    b = tuple(_parse_ints(args.cover_b)) if args.cover_b else (0,) * len(a)
    spec = constructors.PullbackSpec(a, b)
    out = constructors.pullback_cyclic(f, spec)
    result = {"polynomial": out.to_text(), "a": list(a), "b": list(b)}
    return result, False, out.to_text()


def cmd_join(args):
    f = _load_poly(args)
    g = _load_poly(args, suffix="2")
    joined, index_map = constructors.join(f, g)
    result = {
        "polynomial": joined.to_text(),
        "index_map": {f"{side}:{j}": k for (side, j), k in sorted(index_map.items())},
        "has_linear_term": constructors.has_linear_term(joined),
    }
    return result, False, joined.to_text()


def cmd_corpus(args):
    if args.corpus:
        f = _load_poly(args)
        result = {
            "name": args.corpus,
            "polynomial": f.to_text(),
            "formula": constructors.corpus_formula(args.corpus),
            "n": f.n,
        }
        return result, False, f.to_text()
    names = constructors.corpus_names()
    result = {"names": names}
    return result, False, "\n".join(names)


_COMMANDS = {
    "newton": cmd_newton,
    "vanishing": cmd_vanishing,
    "faces": cmd_faces,
    "nondeg": cmd_nondeg,
    "tame": cmd_tame,
    "zeta": cmd_zeta,
    "arc-limit": cmd_arc_limit,
    "af-test": cmd_af_test,
    "transversality": cmd_transversality,
    "openness": cmd_openness,
    "pullback": cmd_pullback,
    "join": cmd_join,
    "corpus": cmd_corpus,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mixed-milnor",
        description="Newton boundary, tameness, limit tangent, and zeta analysis "
        "of mixed polynomials",
    )
    sub = parser.add_subparsers(dest="command", required=False)
    for name in _COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("poly_positional", nargs="?", help="polynomial text")
        p.add_argument("--poly", help="polynomial text, e.g. 'z1^3 + z2*zb2'")
        p.add_argument("--corpus", help="named corpus polynomial")
        p.add_argument("--params", help="corpus parameters, comma separated")
        p.add_argument("--poly2", help="second polynomial (join)")
        p.add_argument("--corpus2", help="second corpus name (join)")
        p.add_argument("--params2", help="second corpus parameters (join)")
        p.add_argument("--arc", help="arc text, e.g. 'z1 = 1; z2 = t'")
        p.add_argument("--subset", help="variable subset, e.g. '1,3'")
        p.add_argument("--point", help="complex point, e.g. '1, 0' or '(1+2i), 0'")
        p.add_argument("--cover-a", help="pullback exponents a, comma separated")
        p.add_argument("--cover-b", help="pullback exponents b, comma separated")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--budget", type=int, default=64)
        p.add_argument("--radius", type=float, default=None)
        p.add_argument("--epsilon", type=float, default=0.1)
        p.add_argument("--delta", type=float, default=1e-3)
        p.add_argument("--samples", type=int, default=None)
        p.add_argument("--json", action="store_true", dest="as_json")
        p.add_argument("--strict", action="store_true")
        p.add_argument("--batch", help="JSON-lines request file")
    return parser


_RADIUS_DEFAULT = {"tame": 0.1, "transversality": 1.0}
_SAMPLES_DEFAULT = {"transversality": 10_000, "openness": 20_000}


def _apply_defaults(args):
    if args.radius is None:
        args.radius = _RADIUS_DEFAULT.get(args.command, 0.1)
    if args.samples is None:
        args.samples = _SAMPLES_DEFAULT.get(args.command, 10_000)
    if args.poly_positional and not args.poly and not args.corpus:
        args.poly = args.poly_positional


def _request_echo(args) -> dict:
    fields = (
        "poly",
        "corpus",
        "params",
        "poly2",
        "corpus2",
        "params2",
        "arc",
        "subset",
        "point",
        "cover_a",
        "cover_b",
        "budget",
        "radius",
        "epsilon",
        "delta",
        "samples",
        "strict",
    )
    return {k: getattr(args, k) for k in fields if getattr(args, k, None) not in (None, False)}


def _run_one(args) -> int:
    _apply_defaults(args)
    handler = _COMMANDS[args.command]
    try:
        result, negative, text = handler(args)
    except MixedMilnorError as exc:
        payload = {
            "command": args.command,
            "seed": args.seed,
            "error": {"type": type(exc).__name__, "message": str(exc)},
        }
        if args.as_json:
            print(json.dumps(payload, indent=2))
        else:
            print(f"error [{type(exc).__name__}]: {exc}", file=sys.stderr)
        return EXIT_ERROR
    if args.as_json:
        report = {
            "command": args.command,
            "seed": args.seed,
            "request": _request_echo(args),
            "result": result,
        }
        print(json.dumps(report, indent=2))
    else:
        print(text)
    if args.strict and negative:
        return EXIT_NEGATIVE
    return EXIT_OK


def _run_batch(args, parser) -> int:
    worst = EXIT_OK
    with open(args.batch, "r", encoding="utf-8") as handle:
        for line in handle:
            line = line.strip()
            if not line:
                continue
            request = json.loads(line)
            argv = [request.pop("command")]
            for key, value in request.items():
                flag = "--" + key.replace("_", "-")
                if isinstance(value, bool):
                    if value:
                        argv.append(flag)
                else:
                    argv.extend([flag, str(value)])
            sub_args = parser.parse_args(argv)
            code = _run_one(sub_args)
            worst = max(worst, code)
    return worst


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if not args.command:
        parser.print_help()
        return EXIT_ERROR
    try:
        if getattr(args, "batch", None):
            return _run_batch(args, parser)
        return _run_one(args)
    except MixedMilnorError as exc:
        print(f"error [{type(exc).__name__}]: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
