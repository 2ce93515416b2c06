"""Command line surface.

Every subcommand prints a single JSON report to standard output and returns a
conventional exit code: 0 for a decided/constructed result, 1 when a decision
command answers "absent/false", 2 for usage or file-format errors, 3 when an
exact computation exceeds its declared capacity.  Hypergraphs are read from
.hg text files (or .json); logs and diagnostics go to standard error.

Results are bit-reproducible: re-running a command with the echoed inputs
(including the seed) yields an identical report except for wall_time_ms, for
any value of --threads.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from . import constructions, exact, exponents, hgio, morphisms
from .errors import CapacityError, HgFormatError, InvalidParameterError
from .hypergraph import iterated_blowup, shadow
from .isomorphism import Embedding
from .morphisms import SetMap, ShadowHomWitness


def _fraction_str(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def _embedding_obj(emb: Embedding | None):
    return None if emb is None else {"images": list(emb.images)}


def _setmap_obj(sm: SetMap, names: tuple[str, str, str]) -> dict:
    src, tgt, img = names
    return {src: list(sm.source), tgt: list(sm.target), img: list(sm.images)}


def _witness_obj(w: ShadowHomWitness | None):
    if w is None:
        return None
    return {
        "k": w.k,
        "shadow_map": [_setmap_obj(sm, ("S", "f_S", "g_S")) for sm in w.shadow_map],
        "edge_map": [_setmap_obj(em, ("e", "f_e", "g_e")) for em in w.edge_map],
    }


def _cmd_shadow(args):
    h = hgio.load_hg(args.file)
    result = {"hypergraph": hgio.to_json_obj(shadow(h, args.k))}
    return 0, {"file": args.file, "k": args.k}, result, None


def _cmd_hom(args):
    g = hgio.load_hg(args.g_file)
    f = hgio.load_hg(args.f_file)
    witness = morphisms.find_homomorphism(g, f)
    found = witness is not None
    result = {
        "found": found,
        "witness": None if witness is None else {"images": list(witness.images)},
    }
    return (0 if found else 1), {"G": args.g_file, "F": args.f_file}, result, None


def _cmd_shadow_hom(args):
    g = hgio.load_hg(args.g_file)
    f = hgio.load_hg(args.f_file)
    witness = morphisms.find_shadow_homomorphism(g, f, args.k)
    found = witness is not None
    result = {"found": found, "witness": _witness_obj(witness)}
    inputs = {"G": args.g_file, "F": args.f_file, "k": args.k}
    return (0 if found else 1), inputs, result, None


def _cmd_tight(args):
    g = hgio.load_hg(args.g_file)
    order = morphisms.is_k_tightly_connected(g, args.k)
    found = order is not None
    result = {
        "found": found,
        "order": None if order is None else [list(e) for e in order.order],
    }
    return (0 if found else 1), {"G": args.g_file, "k": args.k}, result, None


def _cmd_blowup_member(args):
    g = hgio.load_hg(args.g_file)
    f = hgio.load_hg(args.f_file)
    cert = morphisms.is_sub_iterated_blowup(g, f, args.max_steps)
    found = cert is not None
    result = {
        "found": found,
        "steps": None if cert is None else list(cert.steps),
        "embedding": _embedding_obj(cert.embedding if cert else None),
    }
    inputs = {"G": args.g_file, "F": args.f_file, "max_steps": args.max_steps}
    return (0 if found else 1), inputs, result, None


def _density_result(report) -> dict:
    return {
        "value": _fraction_str(report.value),
        "witness_vertices": list(report.witness_vertices),
        "witness_edges": [list(e) for e in report.witness_edges],
        "numerator_offset": report.numerator_offset,
    }


def _cmd_alpha(args):
    f = hgio.load_hg(args.f_file)
    return 0, {"F": args.f_file}, _density_result(exponents.alpha(f)), None


def _cmd_beta(args):
    f = hgio.load_hg(args.f_file)
    return 0, {"F": args.f_file}, _density_result(exponents.beta(f)), None


def _cmd_construct(args):
    f = hgio.load_hg(args.pattern)
    params = constructions.ConstructionParams(
        c1=Fraction(args.c1), c2=Fraction(args.c2), seed=args.seed
    )
    if args.mode == "coloring":
        h, cert = constructions.construct_coloring(args.n, f, params)
        cert_obj = constructions.pair_coloring_to_json(cert)
        extra = {"ell": cert.ell}
    else:
        if args.k is None:
            raise InvalidParameterError("labeling mode requires -k")
        h, cert = constructions.construct_shadow_labeling(args.n, f, args.k, params)
        cert_obj = constructions.shadow_labeling_to_json(cert)
        extra = {"k": cert.k}
    if args.out:
        hgio.save_hg(h, args.out)
    if args.cert:
        with open(args.cert, "w") as fobj:
            json.dump(cert_obj, fobj, indent=2)
            fobj.write("\n")
    result = {
        "mode": args.mode,
        "hypergraph": hgio.to_json_obj(h),
        "edge_count": len(h.edges),
        "output_file": args.out,
        "certificate_file": args.cert,
        **extra,
    }
    inputs = {
        "mode": args.mode,
        "n": args.n,
        "F": args.pattern,
        "k": args.k,
        "c1": args.c1,
        "c2": args.c2,
    }
    return 0, inputs, result, args.seed


def _cmd_verify_gfree(args):
    h = hgio.load_hg(args.h_file)
    g = hgio.load_hg(args.g_file)
    violation = constructions.verify_g_free(h, g)
    g_free = violation is None
    result = {"g_free": g_free, "violation": _embedding_obj(violation)}
    return (0 if g_free else 1), {"H": args.h_file, "G": args.g_file}, result, None


def _cmd_cover(args):
    h = hgio.load_hg(args.h_file)
    f = hgio.load_hg(args.f_file)
    est = constructions.estimate_f_cover(
        h, f, args.w, args.trials, args.seed, exhaustive=args.exhaustive
    )
    result = {
        "fraction": est.fraction,
        "half_width": est.half_width,
        "hits": est.hits,
        "trials": est.trials,
        "exhaustive": est.exhaustive,
    }
    inputs = {
        "H": args.h_file,
        "F": args.f_file,
        "w": args.w,
        "trials": args.trials,
        "exhaustive": args.exhaustive,
    }
    return 0, inputs, result, args.seed


def _cmd_extract(args):
    h = hgio.load_hg(args.h_file)
    f = hgio.load_hg(args.f_file)
    steps = [int(s) for s in args.steps.split(",") if s != ""] if args.steps else []
    emb = constructions.extract_blowup_copy(h, f, steps)
    found = emb is not None
    result = {
        "found": found,
        "steps": steps,
        "embedding": _embedding_obj(emb),
        "blowup": hgio.to_json_obj(iterated_blowup(f, steps)) if found else None,
    }
    inputs = {"H": args.h_file, "F": args.f_file, "steps": steps}
    return (0 if found else 1), inputs, result, None


def _cmd_maxfree(args):
    h = hgio.load_hg(args.h_file)
    f = hgio.load_hg(args.f_file)
    res = exact.max_f_free_subset(h, f)
    result = {"size": res.size, "witness": list(res.witness)}
    return 0, {"H": args.h_file, "F": args.f_file}, result, None


def _cmd_f_exact(args):
    f = hgio.load_hg(args.f_file)
    g = hgio.load_hg(args.g_file)
    res = exact.f_exact(f, g, args.n)
    result = {"value": res.value, "extremal": hgio.to_json_obj(res.extremal)}
    return 0, {"F": args.f_file, "G": args.g_file, "n": args.n}, result, None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--threads",
        type=int,
        default=1,
        help="reserved; searches run sequentially and results do not depend on it",
    )
    parser = argparse.ArgumentParser(
        prog="erog",
        description="Constructive Erdos-Rogers computations for uniform hypergraphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("shadow", parents=[common], help="k-shadow of a hypergraph")
    p.add_argument("file")
    p.add_argument("-k", type=int, required=True)
    p.set_defaults(handler=_cmd_shadow)

    p = sub.add_parser("hom", parents=[common], help="homomorphism from G to F")
    p.add_argument("g_file")
    p.add_argument("f_file")
    p.set_defaults(handler=_cmd_hom)

    p = sub.add_parser(
        "shadow-hom", parents=[common], help="k-shadow-homomorphism from G to F"
    )
    p.add_argument("g_file")
    p.add_argument("f_file")
    p.add_argument("-k", type=int, required=True)
    p.set_defaults(handler=_cmd_shadow_hom)

    p = sub.add_parser("tight", parents=[common], help="k-tight connectivity of G")
    p.add_argument("g_file")
    p.add_argument("-k", type=int, required=True)
    p.set_defaults(handler=_cmd_tight)

    p = sub.add_parser(
        "blowup-member",
        parents=[common],
        help="is G a subgraph of an F-iterated blowup (bounded depth)",
    )
    p.add_argument("g_file")
    p.add_argument("f_file")
    p.add_argument("--max-steps", type=int, default=4)
    p.set_defaults(handler=_cmd_blowup_member)

    p = sub.add_parser("alpha", parents=[common], help="offset-1 density exponent")
    p.add_argument("f_file")
    p.set_defaults(handler=_cmd_alpha)

    p = sub.add_parser("beta", parents=[common], help="offset-0 density exponent")
    p.add_argument("f_file")
    p.set_defaults(handler=_cmd_beta)

    p = sub.add_parser(
        "construct", parents=[common], help="seeded randomized constructions"
    )
    p.add_argument("mode", choices=["coloring", "labeling"])
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-F", dest="pattern", required=True)
    p.add_argument("-k", type=int, default=None)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--c1", default="1")
    p.add_argument("--c2", default="1")
    p.add_argument("-o", dest="out", default=None)
    p.add_argument("--cert", default=None)
    p.set_defaults(handler=_cmd_construct)

    p = sub.add_parser(
        "verify-gfree", parents=[common], help="exhaustive G-freeness check of H"
    )
    p.add_argument("h_file")
    p.add_argument("g_file")
    p.set_defaults(handler=_cmd_verify_gfree)

    p = sub.add_parser(
        "cover", parents=[common], help="fraction of w-subsets of H containing F"
    )
    p.add_argument("h_file")
    p.add_argument("f_file")
    p.add_argument("-w", type=int, required=True)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--exhaustive", action="store_true")
    p.set_defaults(handler=_cmd_cover)

    p = sub.add_parser(
        "extract", parents=[common], help="extract an iterated-blowup copy from H"
    )
    p.add_argument("h_file")
    p.add_argument("f_file")
    p.add_argument("--steps", default="")
    p.set_defaults(handler=_cmd_extract)

    p = sub.add_parser(
        "maxfree", parents=[common], help="maximum F-free induced subset of H"
    )
    p.add_argument("h_file")
    p.add_argument("f_file")
    p.set_defaults(handler=_cmd_maxfree)

    p = sub.add_parser(
        "f-exact", parents=[common], help="exact extremal value at tiny n"
    )
    p.add_argument("f_file")
    p.add_argument("g_file")
    p.add_argument("-n", type=int, required=True)
    p.set_defaults(handler=_cmd_f_exact)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code if isinstance(exc.code, int) else 2
        return code
    start = time.perf_counter()
    try:
        code, inputs, result, seed = args.handler(args)
    except HgFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InvalidParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    report = {"command": args.command, "inputs": inputs, "result": result}
    if seed is not None:
        report["seed"] = seed
    report["wall_time_ms"] = round((time.perf_counter() - start) * 1000.0, 3)
    print(json.dumps(report, indent=2))
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
