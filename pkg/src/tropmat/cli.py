"""Command line front end.

Input is a graph (JSON file), an explicit basis list (JSON file), or a
uniform matroid given by rank and torus dimension.  Every subcommand prints
deterministically; --format switches between readable text and JSON.

Exit codes: 0 on success, 1 on invalid input or arguments, 2 when a
cross validation or internal consistency check fails.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from math import factorial

from .cells import (
    CapExceeded,
    cross_validate,
    enumerate_all_cells,
    enumerate_maximal_cells,
    hypersimplex_coarse_types,
    maximal_cell_coarse_types,
)
from .halfspaces import (
    ContainmentError,
    HalfspaceSystem,
    hypersimplex_halfspaces,
    inequality_str,
    is_minimal_halfspace,
    verify_exterior_description,
)
from .ideals import (
    ideal_generators,
    ideal_membership,
    is_minimal_generating,
    monomial_str,
    resolution_ranks,
)
from .matroids import (
    GraphError,
    MatroidError,
    check_exchange,
    enumerate_bases,
    non_bases,
    parse_bases,
    parse_graph,
    uniform_matroid,
)
from .minplus import (
    TropicalHalfspace,
    TropicalPoint,
    fine_type,
    rational_to_json,
    to_rational,
)
from .polytopes import (
    PolytopeModel,
    build_polytope,
    corner,
    maximal_bounded_cells,
    pseudovertex_label,
    pseudovertices,
    skeleton_dot,
)

DEFAULT_CAP = 10**7

BUNDLED_FIXTURES = ("running-example", "k3", "k4", "u23", "u24")


class CheckFailure(RuntimeError):
    """An invariant of the full validation suite does not hold."""


# ---------------------------------------------------------------------------
# formatting


def _fmt_q(q: Fraction) -> str:
    return str(q)


def _fmt_point(pt: TropicalPoint) -> str:
    return "(" + ", ".join(_fmt_q(c) for c in pt.coords) + ")"


def _fmt_set(s) -> str:
    return "{" + ", ".join(str(i) for i in sorted(s)) + "}"


def _fmt_type(ft) -> str:
    """(12345, 1267, ...) when indices are single digits, brace sets otherwise."""
    if all(i <= 9 for i in ft.union()):
        body = ", ".join("".join(str(i) for i in sorted(e)) or "-" for e in ft.entries)
    else:
        body = ", ".join(_fmt_set(e) for e in ft.entries)
    return "(" + body + ")"


def _point_json(pt: TropicalPoint) -> list:
    return [rational_to_json(c) for c in pt.coords]


def _emit(args, text_lines, json_obj) -> None:
    if args.format == "json":
        print(json.dumps(json_obj, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


# ---------------------------------------------------------------------------
# input loading


def _load_matroid(args):
    kinds = [args.graph is not None, args.bases is not None, args.uniform is not None]
    if sum(kinds) != 1:
        raise MatroidError("exactly one of --graph, --bases, --uniform is required")
    if args.graph is not None:
        with open(args.graph, encoding="utf-8") as fh:
            return enumerate_bases(parse_graph(fh.read()))
    if args.bases is not None:
        with open(args.bases, encoding="utf-8") as fh:
            return parse_bases(fh.read())
    k, d = args.uniform
    return uniform_matroid(k, d + 1)


def _load_polytope(args) -> PolytopeModel:
    return build_polytope(_load_matroid(args))


# ---------------------------------------------------------------------------
# subcommands


def _cmd_bases(args) -> int:
    m = _load_matroid(args)
    lines = [f"ground size {m.ground_size}, rank {m.rank}, {len(m.bases)} bases"]
    lines += [f"B{i + 1} = {_fmt_set(b)}" for i, b in enumerate(m.bases)]
    _emit(args, lines, m.to_json_obj())
    return 0


def _cmd_nonbases(args) -> int:
    m = _load_matroid(args)
    nb = non_bases(m)
    lines = [f"{len(nb)} non bases"] + [_fmt_set(s) for s in nb]
    _emit(args, lines, {"non_bases": [sorted(s) for s in nb]})
    return 0


def _cmd_generators(args) -> int:
    p = _load_polytope(args)
    lines = [f"v{i + 1} = {_fmt_point(v)}" for i, v in enumerate(p.generators)]
    _emit(args, lines, {"generators": [_point_json(v) for v in p.generators]})
    return 0


def _cmd_origin_type(args) -> int:
    p = _load_polytope(args)
    ft = p.origin_type
    lines = [f"type at 0: {_fmt_type(ft)}", f"coarse: {ft.coarse()}"]
    _emit(args, lines, ft.to_json())
    return 0


def _cmd_corners(args) -> int:
    p = _load_polytope(args)
    lines, objs = [], []
    for i in range(1, p.n_coords + 1):
        c = corner(p, i)
        lines.append(f"c_{i} = {_fmt_point(c)}")
        objs.append({"index": i, "point": _point_json(c)})
    _emit(args, lines, {"corners": objs})
    return 0


def _cmd_pseudovertices(args) -> int:
    p = _load_polytope(args)
    pvs = pseudovertices(p)
    lines = [f"{len(pvs)} pseudovertices"]
    objs = []
    for pv in pvs:
        label = pseudovertex_label(p, pv)
        lines.append(f"{label}: {_fmt_point(pv.point)} type {_fmt_type(pv.fine_type)}")
        objs.append(
            {
                "label": label,
                "support": sorted(pv.support),
                "point": _point_json(pv.point),
                "type": pv.fine_type.to_json(),
            }
        )
    _emit(args, lines, {"pseudovertices": objs})
    return 0


def _cmd_bounded_cells(args) -> int:
    p = _load_polytope(args)
    cells = maximal_bounded_cells(p)
    lines = [f"{len(cells)} maximal bounded cells"]
    objs = []
    for bc in cells:
        seq = "(" + ", ".join(str(i) for i in bc.sequence) + ")"
        lines.append(
            f"sequence {seq} basis B{bc.basis_index}"
            f" interior type {_fmt_type(bc.interior_type)}"
        )
        objs.append(
            {
                "sequence": list(bc.sequence),
                "basis_index": bc.basis_index,
                "chain": [_point_json(pt) for pt in bc.chain],
                "interior_type": bc.interior_type.to_json(),
            }
        )
    _emit(args, lines, {"bounded_cells": objs})
    return 0


def _cmd_complex(args) -> int:
    p = _load_polytope(args)
    cx = enumerate_all_cells(p, cap=args.cap)
    fv = list(cx.f_vector)
    if args.with_empty_face:
        fv = [1] + fv
    if args.fvector:
        _emit(args, [str(fv)], fv)
        return 0
    lines = [f"f-vector {fv}", f"{len(cx.cells)} cells"]
    for rec in cx.cells:
        tag = "bounded" if rec.bounded else "unbounded"
        lines.append(f"dim {rec.dim} {tag} type {_fmt_type(rec.fine_type)}")
    _emit(
        args,
        lines,
        {
            "n_coords": cx.n_coords,
            "f_vector": fv,
            "cells": [rec.to_json_obj() for rec in cx.cells],
        },
    )
    return 0


def _cmd_coarse_types(args) -> int:
    modes = [args.formula, args.brute, args.cross_validate]
    if sum(modes) != 1:
        raise MatroidError("pick exactly one of --formula, --brute, --cross-validate")
    if args.formula:
        m = _load_matroid(args)
        rows = maximal_cell_coarse_types(m)
        lines = [f"{len(rows)} coarse types from the counting formula"]
        lines += [f"sequence {seq}: {t}" for seq, t in rows]
        _emit(
            args,
            lines,
            [{"sequence": list(seq), "coarse": list(t)} for seq, t in rows],
        )
        return 0
    p = _load_polytope(args)
    if args.brute:
        recs = enumerate_maximal_cells(p, cap=args.cap)
        lines = [f"{len(recs)} maximal cells by enumeration"]
        lines += [str(rec.coarse) for rec in recs]
        _emit(args, lines, [list(rec.coarse) for rec in recs])
        return 0
    report = cross_validate(p, cap=args.cap)
    _emit(args, [report.summary()], report.to_json_obj())
    return 0 if report.ok else 2


def _cmd_ideal(args) -> int:
    m = _load_matroid(args)
    ideal = ideal_generators(m)
    shift = 0 if args.zero_based_vars else 1
    lines = [f"{len(ideal.generators)} generators in {ideal.n_vars} variables"]
    lines += [
        monomial_str(t, zero_based=args.zero_based_vars) for t in ideal.generators
    ]
    _emit(
        args,
        lines,
        {
            "n_vars": ideal.n_vars,
            "first_var": shift,
            "minimal": is_minimal_generating(ideal),
            "generators": [list(t) for t in ideal.generators],
        },
    )
    return 0


def _cmd_hypersimplex_halfspaces(args) -> int:
    system = hypersimplex_halfspaces(args.k, args.d)
    lines = [f"{len(system)} halfspaces for the uniform matroid ({args.k}, {args.d})"]
    lines += [inequality_str(h) for h in system]
    _emit(args, lines, system.to_json_obj())
    return 0


def _parse_apex(text: str, n_coords: int) -> TropicalPoint:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != n_coords:
        raise MatroidError(f"apex needs {n_coords} comma separated coordinates")
    return TropicalPoint(to_rational(Fraction(p)) for p in parts)


def _cmd_check_minimal(args) -> int:
    p = _load_polytope(args)
    apex = _parse_apex(args.apex, p.n_coords)
    sectors = frozenset(int(s) for s in args.sectors.split(","))
    h = TropicalHalfspace(apex, sectors)
    minimal = is_minimal_halfspace(h, p.generators)
    _emit(
        args,
        [f"{inequality_str(h)}: {'minimal' if minimal else 'not minimal'}"],
        {"inequality": inequality_str(h), "minimal": minimal},
    )
    return 0


def _cmd_verify_exterior(args) -> int:
    if args.uniform is None:
        raise MatroidError("verify-exterior needs --uniform K D")
    k, d = args.uniform
    p = build_polytope(uniform_matroid(k, d + 1))
    system = hypersimplex_halfspaces(k, d)
    report = verify_exterior_description(system, p.generators, probe_budget=args.probe_budget)
    lines = [
        f"{report.probes} probes, {len(report.counterexamples)} counterexamples",
        "exterior description verified" if report.ok else "exterior description FAILED",
    ]
    _emit(args, lines, report.to_json_obj())
    return 0 if report.ok else 2


def _cmd_skeleton(args) -> int:
    p = _load_polytope(args)
    cx = enumerate_all_cells(p, cap=args.cap)
    print(skeleton_dot(p, cx.cells))
    return 0


# ---------------------------------------------------------------------------
# the aggregated validation suite


def _require(cond: bool, what: str) -> None:
    if not cond:
        raise CheckFailure(what)


def _check_polytope(name: str, m, cap: int) -> list[str]:
    notes = []
    check_exchange(m)
    p = build_polytope(m)
    n, d = p.n_generators, p.n_coords - 1
    _require(p.origin_type.union() == frozenset(range(1, n + 1)),
             f"{name}: origin type does not cover all generators")
    _require(sum(p.origin_type.coarse()) >= n, f"{name}: coarse undercount at 0")

    pvs = pseudovertices(p)
    for pv in pvs:
        _require(pv.fine_type.dimension() == 0, f"{name}: pseudovertex of positive dim")
        _require(fine_type(pv.point, p.generators).entries == pv.fine_type.entries,
                 f"{name}: pseudovertex type mismatch at its own point")

    bounded = maximal_bounded_cells(p)
    _require(len(bounded) == len(m.bases) * factorial(d + 1 - m.rank),
             f"{name}: bounded cell count off")
    for bc in bounded:
        _require(bc.interior_type.is_bounded(), f"{name}: unbounded interior type")
        _require(bc.interior_type.dimension() == d + 1 - m.rank,
                 f"{name}: bounded cell of wrong dimension")
    notes.append(f"{len(pvs)} pseudovertices, {len(bounded)} bounded cells")

    try:
        cx = enumerate_all_cells(p, cap=cap)
    except CapExceeded as exc:
        notes.append(f"complex skipped ({exc})")
        return notes

    report = cross_validate(p, cap=cap)
    _require(report.ok, f"{name}: formula and enumeration disagree")
    _require(cx.counts_ok(), f"{name}: f-vector does not count the cells")
    # open cells decompose the torus, a copy of R^d, so the alternating
    # sum is its compactly supported Euler characteristic
    euler = sum((-1) ** i * c for i, c in enumerate(cx.f_vector))
    _require(euler == (-1) ** d, f"{name}: Euler characteristic {euler} != (-1)^{d}")
    zero_cells = {rec.witness for rec in cx.cells if rec.dim == 0}
    _require(zero_cells == {pv.point for pv in pvs},
             f"{name}: 0-cells and pseudovertices disagree")

    ideal = ideal_generators(m)
    _require(is_minimal_generating(ideal), f"{name}: ideal generators not minimal")
    for rec in cx.cells:
        _require(ideal_membership(rec.coarse, ideal),
                 f"{name}: witness coarse type escapes the ideal")
    _require(resolution_ranks(cx) == tuple(reversed(cx.f_vector)),
             f"{name}: resolution ranks disagree with the f-vector")
    notes.append(f"f-vector {cx.f_vector}, {report.summary()}")
    return notes


def _fixture_matroid(tag: str):
    import importlib.resources as ir

    if tag == "running-example":
        data = ir.files("tropmat").joinpath("data/running_example.json").read_text()
        return enumerate_bases(parse_graph(data))
    if tag == "k3":
        return enumerate_bases(parse_graph(
            ir.files("tropmat").joinpath("data/k3.json").read_text()))
    if tag == "k4":
        return enumerate_bases(parse_graph(
            ir.files("tropmat").joinpath("data/k4.json").read_text()))
    if tag == "u23":
        return uniform_matroid(2, 3)
    if tag == "u24":
        return uniform_matroid(2, 4)
    raise MatroidError(f"unknown fixture {tag!r}")


def _cmd_check(args) -> int:
    if args.graph or args.bases or args.uniform:
        targets = [("input", _load_matroid(args))]
    else:
        targets = [(tag, _fixture_matroid(tag)) for tag in BUNDLED_FIXTURES]
    failures = 0
    for name, m in targets:
        try:
            notes = _check_polytope(name, m, args.cap)
        except CheckFailure as exc:
            failures += 1
            print(f"{name}: FAIL ({exc})")
            continue
        print(f"{name}: ok ({'; '.join(notes)})")
    if failures:
        print(f"{failures} of {len(targets)} checks failed")
        return 2
    print(f"all {len(targets)} checks passed")
    return 0


# ---------------------------------------------------------------------------
# argument parsing


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tropmat",
        description="exact combinatorics of tropical matroid polytopes",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, needs_input=True, **kwargs):
        sp = sub.add_parser(name, **kwargs)
        sp.set_defaults(func=func)
        sp.add_argument("--format", choices=("text", "json"), default="text")
        sp.add_argument("--cap", type=int, default=DEFAULT_CAP,
                        help="largest admissible assignment space (d+1)^n")
        if needs_input:
            sp.add_argument("--graph", help="graph JSON file")
            sp.add_argument("--bases", help="basis list JSON file")
            sp.add_argument("--uniform", nargs=2, type=int, metavar=("K", "D"),
                            help="uniform matroid of rank K in the torus of dimension D")
        return sp

    add("bases", _cmd_bases, help="list the bases")
    add("nonbases", _cmd_nonbases, help="list the non bases")
    add("generators", _cmd_generators, help="list the polytope generators")
    add("origin-type", _cmd_origin_type, help="fine type at the origin")
    add("corners", _cmd_corners, help="corner points")
    add("pseudovertices", _cmd_pseudovertices, help="0-dimensional cells")
    add("bounded-cells", _cmd_bounded_cells, help="maximal bounded cells")

    sp = add("complex", _cmd_complex, help="the full cell complex")
    sp.add_argument("--fvector", action="store_true", help="print only the f-vector")
    sp.add_argument("--with-empty-face", action="store_true",
                    help="prepend the empty face to the f-vector")

    sp = add("coarse-types", _cmd_coarse_types, help="maximal cell coarse types")
    sp.add_argument("--formula", action="store_true")
    sp.add_argument("--brute", action="store_true")
    sp.add_argument("--cross-validate", action="store_true")

    sp = add("ideal", _cmd_ideal, help="coarse type ideal generators")
    sp.add_argument("--zero-based-vars", action="store_true")

    sp = add("hypersimplex-halfspaces", _cmd_hypersimplex_halfspaces,
             needs_input=False, help="minimal exterior description")
    sp.add_argument("-k", type=int, required=True)
    sp.add_argument("-d", type=int, required=True)

    sp = add("check-minimal", _cmd_check_minimal, help="apex criteria for one halfspace")
    sp.add_argument("--apex", required=True, help="comma separated coordinates")
    sp.add_argument("--sectors", required=True, help="comma separated sector indices")

    sp = add("verify-exterior", _cmd_verify_exterior,
             help="probe a halfspace description against membership")
    sp.add_argument("--probe-budget", type=int, default=20000)

    sp = add("skeleton", _cmd_skeleton, help="1-skeleton of the bounded subcomplex")
    sp.add_argument("--dot", action="store_true", help="emit Graphviz DOT (the default)")

    add("check", _cmd_check, help="run the full invariant suite")
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GraphError, MatroidError, ContainmentError, CapExceeded,
            OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except AssertionError as exc:
        print(f"internal check failed: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
