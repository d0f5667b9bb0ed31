"""Command-line front end: parses jobs, dispatches to the engine modules,
and emits re-verifiable JSON certificates.

Certificates are deterministic given (job, seed); the timing field is
informational and excluded when `verify` compares verdicts.
"""
from __future__ import annotations

import argparse
import dataclasses
import json
import sys
import time

from . import __version__
from .core import (
    CertificationError,
    DomainError,
    EngineError,
    InfeasibleError,
    MonomialIdeal,
    ParseError,
    PreconditionError,
    RingContext,
    format_ideal,
    minimal_generators,
    parse_ideal,
    ring,
    unit_ideal,
)
from .corpus import corpus_instances
from .decomposition import (
    associated_primes,
    ideal_dimension,
    primary_decomposition,
)
from .depth import cyclic_module, koszul_depth, quotient_module
from .filtration import (
    PrimeFiltration,
    build_clean_cm2,
    build_clean_dim1,
    build_fdepth1_filtration,
    build_pretty_clean_n5,
    verify_filtration,
)
from .polarize import IdealPair, full_polarization, reduce_step
from .stanley import (
    sdepth_exact,
    stanley_n5,
)

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_INFEASIBLE = 4
EXIT_CERTIFICATION = 5


def parse_ring_spec(spec: str, char: int) -> RingContext:
    """Ring syntax: "x1..x5" for a numbered range, or a comma list "x,y,z"."""
    spec = spec.strip()
    if ".." in spec:
        lo, hi = spec.split("..", 1)
        import re
        m1 = re.fullmatch(r"([A-Za-z_]+)(\d+)", lo.strip())
        m2 = re.fullmatch(r"([A-Za-z_]+)(\d+)", hi.strip())
        if not m1 or not m2 or m1.group(1) != m2.group(1):
            raise ParseError(f"bad ring range {spec!r}")
        base, a, b = m1.group(1), int(m1.group(2)), int(m2.group(2))
        if b < a:
            raise ParseError(f"empty ring range {spec!r}")
        names = [f"{base}{i}" for i in range(a, b + 1)]
    else:
        names = [s.strip() for s in spec.split(",") if s.strip()]
    return RingContext(len(names), tuple(names), char)


# ---------------------------------------------------------------------------
# serialization helpers

def ring_to_json(rc: RingContext) -> dict:
    return {"n": rc.n, "vars": list(rc.var_names), "char": rc.char}


def ring_from_json(data: dict) -> RingContext:
    return RingContext(data["n"], tuple(data["vars"]), data["char"])


def ideal_to_json(I: MonomialIdeal) -> list:
    return [list(g) for g in I.gens]


def ideal_from_json(data: list, rc: RingContext) -> MonomialIdeal:
    return minimal_generators([tuple(g) for g in data], rc)


def filtration_to_json(F: PrimeFiltration) -> dict:
    return {
        "numerator": ideal_to_json(F.module.J),
        "denominator": ideal_to_json(F.module.I),
        "steps": [{"monomial": list(m), "prime": list(P.vars)}
                  for m, P in F.steps],
    }


def verdict_to_json(v) -> dict:
    out = dataclasses.asdict(v)
    if "support" in out:
        out["support"] = sorted(list(p.vars) for p in v.support)
    if "witness" in out and out["witness"] is not None:
        out["witness"] = list(out["witness"])
    return out


def decomposition_to_json(D) -> dict:
    return {
        "numerator": ideal_to_json(D.module.J),
        "denominator": ideal_to_json(D.module.I),
        "spaces": [{"base": list(s.base), "free_vars": list(s.free_vars)}
                   for s in D.spaces],
        "sdepth": D.sdepth(),
    }


# ---------------------------------------------------------------------------
# job execution (shared by the subcommands and `verify`)

def run(job: dict) -> dict:
    """Execute a job description and return its certificate."""
    start = time.perf_counter()
    command = job["command"]
    rc = ring_from_json(job["ring"]) if job.get("ring") else None
    options = job.get("options", {})

    def load(key: str) -> MonomialIdeal:
        return ideal_from_json(job[key], rc)

    if command == "depth":
        I = load("ideal")
        J = load("mod_ideal") if job.get("mod_ideal") is not None else unit_ideal(rc)
        report = koszul_depth(quotient_module(J, I),
                              box_margin=options.get("box_margin", 1))
        verdicts = dataclasses.asdict(report)
    elif command == "primary-dec":
        I = load("ideal")
        dec = primary_decomposition(I)
        ass, mins, dim = associated_primes(I)
        verdicts = {
            "components": [{"prime": list(c.prime.vars),
                            "gens": ideal_to_json(c.ideal)}
                           for c in dec.components],
            "associated_primes": [list(p.vars) for p in ass],
            "minimal_primes": [list(p.vars) for p in mins],
            "dimension": ideal_dimension(I),
        }
    elif command == "polarize":
        I = load("ideal")
        U = load("mod_ideal") if job.get("mod_ideal") is not None else unit_ideal(rc)
        pair = IdealPair(U, I)
        before = koszul_depth(quotient_module(U, I)).depth if U != I else None
        reduced = reduce_step(pair)
        after = (koszul_depth(quotient_module(reduced.U, reduced.I)).depth
                 if reduced.U != reduced.I else None)
        pol, var_map = full_polarization(I)
        pol_depth = koszul_depth(cyclic_module(pol)).depth
        added = pol.ring.n - rc.n
        verdicts = {
            "reduced_numerator": ideal_to_json(reduced.U),
            "reduced_denominator": ideal_to_json(reduced.I),
            "depth_before": before,
            "depth_after": after,
            "monotone": (before is None or after is None or after >= before),
            "polarized_gens": ideal_to_json(pol),
            "polarized_ring": ring_to_json(pol.ring),
            "added_vars": added,
            "depth_identity": (pol_depth - added
                               == koszul_depth(cyclic_module(I)).depth),
        }
    elif command == "filtrate":
        I = load("ideal")
        J = load("mod_ideal") if job.get("mod_ideal") is not None else unit_ideal(rc)
        mode = options.get("mode", "clean")
        M = quotient_module(J, I)
        if mode == "pretty-clean":
            if not J.is_unit():
                raise PreconditionError("pretty-clean mode expects a cyclic S/I")
            F, verdict = build_pretty_clean_n5(I)
        elif mode == "fdepth1":
            F = build_fdepth1_filtration(M)
            verdict = verify_filtration(F)
        elif mode == "clean":
            report = koszul_depth(M)
            if report.dim <= 1:
                F = build_clean_dim1(M)
            elif report.dim == 2:
                F = build_clean_cm2(J, I)
            else:
                raise PreconditionError(
                    f"no clean builder for a module of dimension {report.dim}")
            verdict = verify_filtration(F)
        else:
            raise ParseError(f"unknown filtrate mode {mode!r}")
        verdicts = {"filtration": filtration_to_json(F),
                    "verdict": verdict_to_json(verdict)}
    elif command == "decompose":
        I = load("ideal")
        report = stanley_n5(I, node_cap=options.get("search_cap", 200_000))
        verdicts = {
            "decomposition": decomposition_to_json(report.decomposition),
            "depth": report.depth,
            "sdepth_lb": report.sdepth_lb,
            "fdepth_lb": report.fdepth_lb,
        }
    elif command == "sdepth":
        I = load("ideal")
        J = load("mod_ideal") if job.get("mod_ideal") is not None else unit_ideal(rc)
        value, witness = sdepth_exact(quotient_module(J, I),
                                      search_cap=options.get("search_cap", 2_000_000))
        verdicts = {"sdepth": value,
                    "witness": decomposition_to_json(witness)}
    elif command == "check-stanley":
        I = load("ideal")
        report = stanley_n5(I, node_cap=options.get("search_cap", 200_000))
        verdicts = {
            "depth": report.depth,
            "sdepth_lb": report.sdepth_lb,
            "fdepth_lb": report.fdepth_lb,
            "stanley": report.sdepth_lb >= report.depth,
            "decomposition": decomposition_to_json(report.decomposition),
        }
    elif command == "corpus":
        verdicts = run_corpus(
            seed=options.get("seed", 0),
            count=options.get("count", 10),
            n=rc.n,
            max_degree=options.get("max_degree", 3),
            char=rc.char,
            search_cap=options.get("search_cap", 200_000))
    else:
        raise ParseError(f"unknown command {command!r}")

    return {
        "command": command,
        "job": job,
        "verdicts": verdicts,
        "timing": time.perf_counter() - start,
        "version": __version__,
    }


def run_corpus(seed: int, count: int, n: int, max_degree: int,
               char: int = 0, search_cap: int = 200_000) -> dict:
    """Run the full pipeline over a random corpus; any certification
    failure halts with the offending instance serialized for replay."""
    gaps: dict[int, int] = {}
    certified = 0
    for index, I in corpus_instances(seed, count, n, max_degree=max_degree,
                                     char=char):
        try:
            report = stanley_n5(I, node_cap=search_cap)
        except EngineError as exc:
            raise CertificationError(
                f"instance {index} (seed {seed}) failed: {exc}; "
                f"ideal {format_ideal(I)}") from exc
        gap = report.sdepth_lb - report.depth
        gaps[gap] = gaps.get(gap, 0) + 1
        certified += 1
    return {"count": count, "certified": certified,
            "gap_distribution": {str(k): v for k, v in sorted(gaps.items())}}


# ---------------------------------------------------------------------------
# argument parsing

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stanleydec",
        description="Exact Stanley decompositions, prime filtrations and "
                    "depth invariants of monomial ideals (n <= 5 pipeline).")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, needs_ideal=True):
        p.add_argument("--ring", help='ring spec: "x1..x5" or "x,y,z"')
        p.add_argument("--n", type=int, help="shorthand for --ring x1..xN")
        p.add_argument("--char", type=int, default=0,
                       help="field characteristic (0 or prime)")
        if needs_ideal:
            p.add_argument("--ideal", required=True,
                           help='ideal, e.g. "[x1^2*x3, x2]"')
            p.add_argument("--mod-ideal", dest="mod_ideal",
                           help="larger ideal J for the module J/I")
        p.add_argument("--box-margin", dest="box_margin", type=int, default=1)
        p.add_argument("--search-cap", dest="search_cap", type=int)
        p.add_argument("--json", action="store_true",
                       help="print the full JSON certificate")

    for name in ["depth", "primary-dec", "polarize", "filtrate",
                 "decompose", "sdepth", "check-stanley"]:
        p = sub.add_parser(name)
        common(p)
        if name == "filtrate":
            p.add_argument("--mode", choices=["clean", "pretty-clean", "fdepth1"],
                           default="clean")

    p = sub.add_parser("corpus")
    common(p, needs_ideal=False)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=10)
    p.add_argument("--max-degree", dest="max_degree", type=int, default=3)

    p = sub.add_parser("verify")
    p.add_argument("--certificate", required=True,
                   help="path to a certificate JSON produced by another run")
    p.add_argument("--json", action="store_true")
    return parser


def job_from_args(args) -> dict:
    if args.ring:
        rc = parse_ring_spec(args.ring, args.char)
    elif args.n:
        rc = ring(args.n, char=args.char)
    else:
        raise ParseError("give --ring or --n")
    job = {"command": args.command, "ring": ring_to_json(rc)}
    if getattr(args, "ideal", None) is not None:
        job["ideal"] = ideal_to_json(parse_ideal(args.ideal, rc))
        mod = getattr(args, "mod_ideal", None)
        job["mod_ideal"] = (ideal_to_json(parse_ideal(mod, rc))
                            if mod is not None else None)
    options = {"box_margin": args.box_margin}
    if args.search_cap is not None:
        options["search_cap"] = args.search_cap
    if args.command == "filtrate":
        options["mode"] = args.mode
    if args.command == "corpus":
        options["seed"] = args.seed
        options["count"] = args.count
        options["max_degree"] = args.max_degree
    job["options"] = options
    return job


def summarize(cert: dict) -> str:
    v = cert["verdicts"]
    cmd = cert["command"]
    if cmd == "depth":
        return (f"depth {v['depth']}  dim {v['dim']}  "
                f"CM {v['is_cm']}  char {v['field_char']}")
    if cmd == "primary-dec":
        return (f"{len(v['components'])} primary components, "
                f"dimension {v['dimension']}")
    if cmd == "polarize":
        return (f"reduced pair depth {v['depth_before']} -> {v['depth_after']}; "
                f"monotone {v['monotone']}; polarization identity "
                f"{v['depth_identity']}")
    if cmd == "filtrate":
        fv = v["verdict"]
        return (f"valid {fv['valid']}  clean {fv['clean']}  "
                f"pretty_clean {fv['pretty_clean']}  fdepth {fv['fdepth']}  "
                f"steps {len(v['filtration']['steps'])}")
    if cmd in ("decompose", "check-stanley"):
        line = (f"depth {v['depth']}  sdepth_lb {v['sdepth_lb']}  "
                f"fdepth_lb {v['fdepth_lb']}")
        if cmd == "check-stanley":
            line += f"  stanley {v['stanley']}"
        return line
    if cmd == "sdepth":
        return f"sdepth {v['sdepth']} ({len(v['witness']['spaces'])} spaces)"
    if cmd == "corpus":
        return (f"{v['certified']}/{v['count']} certified; "
                f"sdepth-depth gaps {v['gap_distribution']}")
    return json.dumps(v)


def strip_timing(cert: dict) -> dict:
    out = dict(cert)
    out.pop("timing", None)
    return out


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            with open(args.certificate) as fh:
                previous = json.load(fh)
            fresh = run(previous["job"])
            same = strip_timing(fresh) == strip_timing(previous)
            if args.json:
                print(json.dumps({"identical": same,
                                  "certificate": fresh}, sort_keys=True))
            else:
                print(f"re-verification {'identical' if same else 'DIVERGED'}")
            return EXIT_OK if same else EXIT_CERTIFICATION
        job = job_from_args(args)
        cert = run(job)
        if args.json:
            print(json.dumps(cert, sort_keys=True))
        else:
            print(summarize(cert))
        return EXIT_OK
    except ParseError as exc:
        print(json.dumps({"error": "parse", "message": str(exc)}), file=sys.stderr)
        return EXIT_PARSE
    except InfeasibleError as exc:
        print(json.dumps({"error": "infeasible", "message": str(exc)}),
              file=sys.stderr)
        return EXIT_INFEASIBLE
    except CertificationError as exc:
        print(json.dumps({"error": "certification", "message": str(exc)}),
              file=sys.stderr)
        return EXIT_CERTIFICATION
    except (DomainError, PreconditionError, EngineError) as exc:
        print(json.dumps({"error": "precondition", "message": str(exc)}),
              file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
