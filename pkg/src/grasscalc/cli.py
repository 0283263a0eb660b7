"""Command-line entry point.

Every subcommand prints deterministic, machine-readable output: exact
integers and polynomial strings only.  Exit codes: 0 success, 1
computation error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bott import GrassContext, cohomology
from .errors import GrasscalcError
from .ext_engine import FamilyConfig, ext_simples
from .gl_characters import (
    cauchy_layer,
    lr_coefficient,
    wedge_plethysm_general,
    wedge_plethysm_hooks,
)
from .geometric_complex import complex_terms, mcm_criterion, mcm_witness_search
from .hilbert_series import (
    invert_series_matrix,
    module_series,
    resolution_of_simple,
    series_matrix,
)
from .partitions import normalize
from .quiver_builder import build_named, emit, quiver_from_ext


def _parse_weight(text: str) -> tuple[int, ...]:
    if text is None or text == "":
        return ()
    return tuple(int(x) for x in text.split(","))


def _parse_partition(text: str) -> tuple[int, ...]:
    return normalize(_parse_weight(text))


def _family_config(args) -> FamilyConfig:
    name = {"sym": "sym", "skew": "skew", "kapranov": "custom"}.get(args.family, args.family)
    if args.family == "kapranov":
        return FamilyConfig("custom", args.n, args.r, delta=())
    d = getattr(args, "d", None)
    return FamilyConfig(name, args.n, args.r, d=d)


def _print(text: str):
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _cmd_lr(args) -> int:
    value = lr_coefficient(
        _parse_partition(args.mu), _parse_partition(args.alpha), _parse_partition(args.beta)
    )
    if args.format == "json":
        _print(json.dumps({"coefficient": value}))
    else:
        _print(str(value))
    return 0


def _cmd_bott(args) -> int:
    ctx = GrassContext(args.n, args.k)
    out = cohomology(ctx, _parse_weight(args.r_label), _parse_weight(args.q_label))
    _print(json.dumps(out.to_json(), sort_keys=True))
    return 0


def _cmd_plethysm(args) -> int:
    if args.hooks:
        tag = "sym2" if args.delta == "2" else "wedge2"
        lams = wedge_plethysm_hooks(args.s, tag)
        payload = {"terms": [{"weight": list(l), "mult": 1} for l in lams]}
    elif args.cauchy:
        lams = cauchy_layer(args.s, args.cauchy)
        payload = {"terms": [{"weight": list(l), "mult": 1} for l in lams]}
    else:
        dec = wedge_plethysm_general(_parse_partition(args.delta), args.s, args.rank)
        payload = dec.to_json()
    if args.format == "json":
        _print(json.dumps(payload, sort_keys=True))
    else:
        for term in payload["terms"]:
            _print(f"{term['weight']} x {term['mult']}")
    return 0


def _cmd_ext(args) -> int:
    cfg = _family_config(args)
    dec = ext_simples(cfg, _parse_partition(args.alpha), _parse_partition(args.beta), args.t_max)
    if args.format == "json":
        _print(json.dumps(dec.to_json(), sort_keys=True))
    else:
        for t in sorted(dec.layers):
            terms = " + ".join(
                f"{m}x{list(w)}" for w, m in dec.layers[t].sorted_terms()
            )
            _print(f"Ext^{t}: {terms}")
    return 0


def _cmd_quiver(args) -> int:
    if args.family in ("beilinson", "rational_curve", "wedge_rank", "sym_maxminor") or (
        args.family == "kapranov" and not args.from_ext
    ):
        q = build_named(args.family, args.n, r=args.r, d=args.d)
    else:
        q = quiver_from_ext(_family_config(args))
    if args.seed_order:
        q = q.reorder([int(x) for x in args.seed_order.split(",")])
    _print(emit(q, args.format))
    return 0


def _cmd_hilbert_matrix(args) -> int:
    cfg = _family_config(args)
    mat = series_matrix(cfg)
    if args.invert:
        inv = invert_series_matrix(mat)
        if args.format == "csv":
            for row in inv:
                _print(",".join(f'"{p}"' for p in row))
        else:
            _print(json.dumps({"entries": [[str(p) for p in row] for row in inv]}, sort_keys=True))
        return 0
    if args.format == "csv":
        for row in mat.entries:
            _print(",".join(f'"{e}"' for e in row))
    else:
        _print(json.dumps(
            {
                "vertices": [list(v) for v in mat.vertices],
                "entries": [[str(e) for e in row] for row in mat.entries],
            },
            sort_keys=True,
        ))
    return 0


def _cmd_resolution(args) -> int:
    cfg = _family_config(args)
    vertex = cfg.vertices()[args.vertex]
    table = resolution_of_simple(cfg, vertex, args.steps)
    if args.format == "json":
        _print(json.dumps(table.to_json(), sort_keys=True))
    else:
        for i, step in enumerate(table.steps):
            terms = " + ".join(f"{m}x{list(w)}(P{v})" for w, v, m in step)
            _print(f"step {i}: {terms if terms else '0'}")
    return 0


def _cmd_presentation(args) -> int:
    terms = complex_terms(args.m, args.n, args.r, _parse_partition(args.alpha), args.i_max)
    payload = {
        str(i): [s.to_json() for s in terms[i]] for i in sorted(terms)
    }
    _print(json.dumps(payload, sort_keys=True))
    return 0


def _cmd_mcm_check(args) -> int:
    cfg = _family_config(args)
    criterion = mcm_criterion(cfg)
    payload = {"criterion": criterion.to_json()}
    if args.max_degree is not None:
        payload["search"] = mcm_witness_search(cfg, args.max_degree).to_json()
    _print(json.dumps(payload, sort_keys=True))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="grasscalc",
        description="exact Grassmannian-bundle combinatorics: Bott cohomology, quivers, Hilbert series",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lr", help="Littlewood-Richardson coefficient")
    p.add_argument("--mu", required=True)
    p.add_argument("--alpha", default="0")
    p.add_argument("--beta", default="0")
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.set_defaults(func=_cmd_lr)

    p = sub.add_parser("bott", help="cohomology of a homogeneous bundle")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r-label", dest="r_label", default="")
    p.add_argument("--q-label", dest="q_label", default="")
    p.add_argument("--format", choices=("json",), default="json")
    p.set_defaults(func=_cmd_bott)

    p = sub.add_parser("plethysm", help="exterior powers of Schur functors")
    p.add_argument("--delta", default="2")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--rank", type=int, default=6)
    p.add_argument("--hooks", action="store_true", help="use the hook closed form")
    p.add_argument("--cauchy", choices=("sym2", "wedge2", "tensor_pair"))
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=_cmd_plethysm)

    p = sub.add_parser("ext", help="Ext between equivariant simples")
    p.add_argument("--family", choices=("sym", "skew", "tensor_antisym", "tensor_sym", "kapranov"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--d", type=int)
    p.add_argument("--alpha", default="0")
    p.add_argument("--beta", default="0")
    p.add_argument("--t-max", dest="t_max", type=int, default=2)
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=_cmd_ext)

    p = sub.add_parser("quiver", help="equivariant quiver with relations")
    p.add_argument(
        "--family",
        choices=(
            "sym", "skew", "tensor_antisym", "tensor_sym", "kapranov",
            "beilinson", "sym_maxminor", "rational_curve", "wedge_rank",
        ),
        required=True,
    )
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--from-ext", action="store_true", help="force the Ext-engine route")
    p.add_argument("--seed-order", dest="seed_order", help="comma-separated vertex permutation")
    p.add_argument("--format", choices=("json", "dot", "text"), default="json")
    p.set_defaults(func=_cmd_quiver)

    p = sub.add_parser("hilbert-matrix", help="matrix of Hom Hilbert series")
    p.add_argument("--family", choices=("sym", "skew"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--invert", action="store_true")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=_cmd_hilbert_matrix)

    p = sub.add_parser("resolution", help="projective resolution of a simple")
    p.add_argument("--family", choices=("sym", "skew"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--vertex", type=int, required=True)
    p.add_argument("--steps", type=int, default=6)
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=_cmd_resolution)

    p = sub.add_parser("presentation", help="geometric-technique complex terms")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--alpha", default="0")
    p.add_argument("--i-max", dest="i_max", type=int, default=1)
    p.add_argument("--format", choices=("json",), default="json")
    p.set_defaults(func=_cmd_presentation)

    p = sub.add_parser("mcm-check", help="maximal Cohen-Macaulay verdicts")
    p.add_argument("--family", choices=("sym", "skew", "tensor_antisym", "tensor_sym"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--d", type=int)
    p.add_argument("--max-degree", dest="max_degree", type=int)
    p.add_argument("--format", choices=("json",), default="json")
    p.set_defaults(func=_cmd_mcm_check)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except GrasscalcError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, AssertionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
