"""Command-line front end.

    steenrod-kit <diag|sq|homology|info|verify> [options]

Exit codes: 0 = all requested checks passed, 1 = verification failures,
2 = input error (unreadable file, malformed document, bad arguments).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from .bar import e
from .chains import Simplex, render_chain
from .cochains import sq_matrix
from .diagonal import xi_cell, xi_simplex
from .documents import load_complex, load_table, resolve_cache_dir, save_table
from .homology import cohomology, homology
from .rings import F2, Ring, ZZ
from .simplicial import DeltaComplex, SimplicialSetPresentation, core, forget_degeneracies, is_degeneracy_free
from .suite import SuiteConfig, run_suite

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="steenrod-kit",
        description="Exact-arithmetic Steenrod diagonals, squares, homology, and verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--input", help="complex document (JSON)")
        p.add_argument("--ring", default=None, help="coefficients: z, q, f2, f3, f5, ... (default z; sq defaults to f2)")
        p.add_argument("--truncation", type=int, default=5, help="truncation dimension for simplicial constructions")
        p.add_argument("--cache", help="diagonal table cache directory (else $STEENROD_CACHE, else ~/.cache/steenrod-kit)")
        p.add_argument("--json", action="store_true", help="machine-readable output")

    p_diag = sub.add_parser("diag", help="print ξ(e_n⊗σ) in canonical term order")
    common(p_diag)
    p_diag.add_argument("--n", type=int, default=0, help="bar resolution level")
    p_diag.add_argument("--simplex", help="comma-separated vertex list, e.g. 0,1,2 (weakly increasing)")
    p_diag.add_argument("--cell", help="cell of the input complex as dim,index")

    p_sq = sub.add_parser("sq", help="matrices of Steenrod squares on H^*(X;F2)")
    common(p_sq)
    p_sq.add_argument("--i", type=int, default=None, help="which square (default: all)")
    p_sq.add_argument("--p", type=int, default=None, help="source cohomology degree (default: all)")

    p_hom = sub.add_parser("homology", help="homology groups of the input complex per degree")
    common(p_hom)

    p_info = sub.add_parser("info", help="cell counts, degeneracy-freeness, core size")
    common(p_info)

    p_verify = sub.add_parser("verify", help="run the named-invariant verification suite")
    common(p_verify)
    p_verify.add_argument("--only", help="run a single named invariant")
    p_verify.add_argument("--max-k", type=int, default=6, help="maximum simplex dimension for the eta_k checks")
    p_verify.add_argument("--slow", action="store_true", help="include the slow tier (RP⁴ squares)")
    return parser


def _ring(args, default: Ring = ZZ) -> Ring:
    if args.ring is None:
        return default
    return Ring.from_name(args.ring)


def _load_input(args):
    if not args.input:
        raise ValueError("this command needs --input FILE")
    return load_complex(args.input)


def _cmd_diag(args) -> int:
    ring = _ring(args)
    cache_dir = resolve_cache_dir(args.cache)
    table = load_table(cache_dir)
    if args.simplex:
        try:
            vertices = tuple(int(v) for v in args.simplex.split(","))
        except ValueError as exc:
            raise ValueError(f"bad --simplex: {exc}") from exc
        chain = xi_simplex(e(args.n), Simplex(vertices), table, ring)
        label = f"xi(e{args.n} ⊗ {Simplex(vertices)})"
    elif args.input:
        space = _load_input(args)
        if args.cell is None:
            raise ValueError("diag on a complex document needs --cell dim,index")
        try:
            dim, idx = (int(v) for v in args.cell.split(","))
        except ValueError as exc:
            raise ValueError(f"bad --cell: {exc}") from exc
        if dim not in space.cells or not 0 <= idx < len(space.cells[dim]):
            raise ValueError(f"no cell ({dim},{idx}) in {space.name or 'the input'}")
        chain = xi_cell(e(args.n), space, dim, idx, table, ring)
        label = f"xi(e{args.n} ⊗ cell({dim},{idx}))"
    else:
        raise ValueError("diag needs --simplex or --input with --cell")
    save_table(table, cache_dir)
    if args.json:
        print(json.dumps({"query": label, "value": render_chain(chain)}))
    else:
        print(f"{label} = {render_chain(chain)}")
    return EXIT_OK


def _as_delta(space) -> DeltaComplex:
    if isinstance(space, SimplicialSetPresentation):
        return forget_degeneracies(space)
    return space


def _cmd_sq(args) -> int:
    ring = _ring(args, default=F2)
    if ring != F2:
        raise ValueError("Steenrod squares are computed over f2")
    space = _as_delta(_load_input(args))
    cache_dir = resolve_cache_dir(args.cache)
    table = load_table(cache_dir)
    complex_ = space.chains(F2)
    results = []
    ps = [args.p] if args.p is not None else list(range(space.dimension + 1))
    for p in ps:
        dim_p = cohomology(complex_, p).dimension
        if dim_p == 0:
            continue
        squares = [args.i] if args.i is not None else list(range(space.dimension - p + 1))
        for i in squares:
            if p + i > space.dimension:
                continue
            matrix = sq_matrix(i, p, space, F2, table)
            results.append({"i": i, "p": p, "matrix": matrix})
    save_table(table, cache_dir)
    if args.json:
        print(json.dumps({"space": space.name, "squares": results}))
    else:
        for r in results:
            print(f"Sq^{r['i']}: H^{r['p']} -> H^{r['p'] + r['i']}  columns = {r['matrix']}")
    return EXIT_OK


def _cmd_homology(args) -> int:
    ring = _ring(args)
    space = _load_input(args)
    if isinstance(space, SimplicialSetPresentation):
        complex_ = space.normalized_chains(ring)
        top = space.truncation_dim - 1
    else:
        complex_ = space.chains(ring)
        top = space.dimension
    rows = []
    for degree in range(top + 1):
        h = homology(complex_, degree)
        rows.append({"degree": degree, "group": str(h)})
    if args.json:
        print(json.dumps({"space": space.name, "ring": str(ring), "homology": rows}))
    else:
        for r in rows:
            print(f"H_{r['degree']} = {r['group']}")
    return EXIT_OK


def _cmd_info(args) -> int:
    space = _load_input(args)
    counts = {n: len(space.cells[n]) for n in sorted(space.cells)}
    info = {"name": space.name, "cells": counts}
    if isinstance(space, SimplicialSetPresentation):
        info["kind"] = "simplicial"
        info["truncation_dim"] = space.truncation_dim
        info["strict"] = space.strict
        info["degeneracy_free"] = is_degeneracy_free(space)
        core_complex, _ = core(space)
        info["core_cells"] = {n: len(core_complex.cells[n]) for n in sorted(core_complex.cells)}
    else:
        info["kind"] = "delta"
        info["degeneracy_free"] = True  # freely-degenerate closure of a delta-complex
        info["core_cells"] = counts
    if args.json:
        print(json.dumps(info))
    else:
        print(f"name: {info['name']}")
        print(f"kind: {info['kind']}")
        print(f"cells per dimension: {info['cells']}")
        print(f"degeneracy-free: {str(info['degeneracy_free']).lower()}")
        print(f"core cells per dimension: {info['core_cells']}")
    return EXIT_OK


def _cmd_verify(args) -> int:
    cache_dir = resolve_cache_dir(args.cache)
    table = load_table(cache_dir)
    cfg = SuiteConfig(
        only=args.only,
        max_k=args.max_k,
        include_slow=args.slow,
        truncation=min(args.truncation, 4),
        table=table,
    )
    report = run_suite(cfg)
    save_table(table, cache_dir)
    if args.json:
        print(json.dumps(report))
    else:
        for item in report["items"]:
            print(f"[{item['status']:9s}] {item['name']}: {item['detail']}")
        print(f"{'PASS' if report['passed'] else 'FAIL'} ({report['failures']} failures)")
    return EXIT_OK if report["passed"] else EXIT_FAIL


def main(argv: Optional[list] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "diag": _cmd_diag,
        "sq": _cmd_sq,
        "homology": _cmd_homology,
        "info": _cmd_info,
        "verify": _cmd_verify,
    }
    try:
        return handlers[args.command](args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
