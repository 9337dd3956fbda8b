"""Command-line interface: ``qubatch <command> ...``.

Exit codes: 0 success, 1 verification failed, 2 domain error, 3 resource cap,
4 corrupted data (not a codeword).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from .batch import (BatchCode, build_from_positions, build_full_lattice_batch_code,
                    parse_request, serve_request)
from .errors import CapExceededError, DomainError, NotACodewordError, QubatchError
from .fplinalg import FpVector, check_modulus
from .lattice import DEFAULT_CAP, enumerate_lattice, enumerate_subspaces
from .oracle import DEFAULT_SEED, run_verification
from .quasicode import SubgroupSystem, format_word, parse_word
from .recovery import (build_bipartite_graph, build_halfdim_graph, connected_components,
                       degree_profile, max_bipartite_matching, max_general_matching)

EXIT_OK, EXIT_FAILED, EXIT_DOMAIN, EXIT_CAP, EXIT_CORRUPT = 0, 1, 2, 3, 4


def _cap(args) -> int:
    if args.cap is not None:
        return args.cap
    env = os.environ.get("QUBATCH_CAP")
    return int(env) if env else DEFAULT_CAP


def _emit(args, payload: str, summary: str) -> None:
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(payload)
        print(summary)
    else:
        sys.stdout.write(payload)


def _dumps(data) -> str:
    return json.dumps(data, indent=2) + "\n"


def _load_code(path: str) -> BatchCode:
    with open(path, encoding="utf-8") as fh:
        return BatchCode.from_json(json.load(fh))


def cmd_subgroups(args) -> int:
    check_modulus(args.p)
    cap = _cap(args)
    if args.dim is not None:
        if not 1 <= args.dim <= args.k - 1:
            raise DomainError(f"--dim must lie in 1..{args.k - 1} (nontrivial subgroups)")
        slices = [enumerate_subspaces(args.k, args.dim, args.p, cap)]
    else:
        slices = enumerate_lattice(args.k, args.p, cap)
    counts = {sl.dim: len(sl) for sl in slices}
    summary = f"p={args.p} k={args.k} counts " + " ".join(f"{d}:{c}" for d, c in counts.items())
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["dim", "index", "subspace"])
        for sl in slices:
            for i, s in enumerate(sl):
                w.writerow([sl.dim, i, str(s)])
        payload = buf.getvalue()
    elif args.format == "text":
        lines = [summary]
        for sl in slices:
            lines += [f"dim {sl.dim}: {len(sl)}"] + [f"  {s}" for s in sl]
        payload = "\n".join(lines) + "\n"
    elif len(slices) == 1:
        payload = _dumps(slices[0].to_json())
    else:
        payload = _dumps({"p": args.p, "k": args.k,
                          "counts": {str(d): c for d, c in counts.items()},
                          "total": sum(counts.values()),
                          "slices": [sl.to_json() for sl in slices]})
    _emit(args, payload, summary)
    return EXIT_OK


def cmd_build(args) -> int:
    check_modulus(args.p)
    cap = _cap(args)
    if args.full:
        bc = build_full_lattice_batch_code(args.k, args.p, cap)
    else:
        if not args.dims:
            raise DomainError("give --dims or --full")
        dims = sorted({int(d) for d in args.dims.split(",")})
        if any(not 1 <= d <= args.k - 1 for d in dims):
            raise DomainError(f"--dims entries must lie in 1..{args.k - 1}")
        spaces = [s for d in dims for s in enumerate_subspaces(args.k, d, args.p, cap)]
        bc = build_from_positions(SubgroupSystem(args.p, args.k, tuple(spaces)))
    prm = bc.params
    summary = f"(n,k,t,r) = ({prm.n},{prm.k},{prm.t},{prm.r})"
    _emit(args, _dumps(bc.to_json()), summary)
    return EXIT_OK


def cmd_encode(args) -> int:
    bc = _load_code(args.code)
    word = bc.code.encode(FpVector.from_string(args.info, bc.code.p))
    print(format_word(word))
    return EXIT_OK


def cmd_decode(args) -> int:
    bc = _load_code(args.code)
    word = parse_word(args.word)
    if args.positions:
        g = bc.code.decode_subset(word, [int(i) for i in args.positions.split(",")])
    else:
        g = bc.code.decode_full(word)
    print(g)
    return EXIT_OK


def cmd_serve(args) -> int:
    bc = _load_code(args.code)
    got = serve_request(bc, parse_word(args.word), parse_request(args.request))
    print(_dumps({"requests": list(got.requests),
                  "pairs": [list(p) for p in got.pairs],
                  "values": list(got.values)}), end="")
    return EXIT_OK


def cmd_match(args) -> int:
    check_modulus(args.p)
    cap = _cap(args)
    if 2 * args.m == args.k:
        g = build_halfdim_graph(args.k, args.p, cap)
        matching = max_general_matching(g)
    else:
        g = build_bipartite_graph(args.k, args.m, args.p, cap)
        matching = max_bipartite_matching(g)
    comps = connected_components(g)
    profile = degree_profile(g)
    summary = (f"{g.kind} graph: {len(g)} vertices, degrees {profile}, "
               f"{len(comps)} component(s), matching {matching.size} pairs")
    if args.format == "dot":
        payload = g.to_dot(matching)
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["degree", "count"])
        for d, c in profile.items():
            w.writerow([d, c])
        payload = buf.getvalue()
    else:
        data = g.to_json(matching)
        data.update({"components": len(comps), "component_sizes": [len(c) for c in comps],
                     "degree_profile": {str(d): c for d, c in profile.items()},
                     "matching_size": matching.size})
        payload = _dumps(data)
    _emit(args, payload, summary)
    return EXIT_OK


def cmd_verify(args) -> int:
    bc = _load_code(args.code)
    report = run_verification(bc, args.max_subset, sample=args.sample, seed=args.seed)
    lines = [f"{'PASS' if c['passed'] else 'FAIL'} {c['name']}: {c['detail']}"
             for c in report["checks"]]
    _emit(args, _dumps(report), "\n".join(lines))
    if not args.out:
        print("\n".join(lines), file=sys.stderr)
    return EXIT_OK if report["passed"] else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qubatch", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, fmt=("json",)):
        sp.add_argument("--out", help="write the full output here; print a summary instead")
        sp.add_argument("--cap", type=int, help="resource cap (default $QUBATCH_CAP or 10^6)")
        sp.add_argument("--format", choices=fmt, default=fmt[0])

    sp = sub.add_parser("subgroups", help="list subgroups of (Z_p)^k")
    sp.add_argument("--p", type=int, default=2)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--dim", type=int)
    common(sp, ("json", "csv", "text"))
    sp.set_defaults(func=cmd_subgroups)

    sp = sub.add_parser("build", help="build a batch code descriptor")
    sp.add_argument("--p", type=int, default=2)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--dims", help="comma-separated subgroup dimensions to use")
    sp.add_argument("--full", action="store_true", help="all nontrivial subgroups")
    common(sp)
    sp.set_defaults(func=cmd_build)

    sp = sub.add_parser("encode", help="encode an information vector")
    sp.add_argument("--code", required=True)
    sp.add_argument("--info", required=True, help="base-p digits, e.g. 011")
    sp.set_defaults(func=cmd_encode)

    sp = sub.add_parser("decode", help="decode a codeword")
    sp.add_argument("--code", required=True)
    sp.add_argument("--word", required=True, help="comma-separated labels")
    sp.add_argument("--positions", help="decode from these 0-based positions only")
    sp.set_defaults(func=cmd_decode)

    sp = sub.add_parser("serve", help="serve a batch request from a codeword")
    sp.add_argument("--code", required=True)
    sp.add_argument("--word", required=True)
    sp.add_argument("--request", required=True, help="1-based symbol indices, e.g. 1,2,2")
    sp.set_defaults(func=cmd_serve)

    sp = sub.add_parser("match", help="matching on a trivial-intersection graph")
    sp.add_argument("--p", type=int, default=2)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--m", type=int, required=True)
    common(sp, ("json", "dot", "csv"))
    sp.set_defaults(func=cmd_match)

    sp = sub.add_parser("verify", help="run the brute-force oracle suite on a descriptor")
    sp.add_argument("--code", required=True)
    sp.add_argument("--max-subset", type=int, default=3)
    sp.add_argument("--sample", action="store_true", help="sample subsets when n > 20")
    sp.add_argument("--seed", type=lambda s: int(s, 0), default=DEFAULT_SEED)
    common(sp)
    sp.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NotACodewordError as exc:
        print(f"error: not a codeword: {exc}", file=sys.stderr)
        return EXIT_CORRUPT
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (QubatchError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
