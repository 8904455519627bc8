"""Tropical matroid polytopes.

The polytope of a matroid is the tropical convex hull of one 0/1 generator
per basis: coordinate i of generator v_B is 0 for i in B and 1 otherwise.
The combinatorics below (origin type, corners, pseudovertices, maximal
bounded cells) all reduce to basis bookkeeping and are computed by closed
formulas; the brute force enumeration lives in cells.py and is used to
cross-check them.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, Sequence

from .matroids import GroundMatroid
from .minplus import FineType, TropicalPoint


@dataclass(frozen=True)
class PolytopeModel:
    """A matroid together with its generators and the type of the origin."""

    matroid: GroundMatroid
    generators: tuple[TropicalPoint, ...]
    origin_type: FineType

    @property
    def n_coords(self) -> int:
        return self.matroid.ground_size

    @property
    def n_generators(self) -> int:
        return len(self.generators)

    def to_json_obj(self) -> dict:
        return {
            "ground_size": self.matroid.ground_size,
            "rank": self.matroid.rank,
            "generators": [g.to_json() for g in self.generators],
            "origin_type": self.origin_type.to_json(),
        }


@dataclass(frozen=True)
class PseudoVertex:
    """A 0-cell of the complex; support is the basis union J defining it."""

    support: frozenset[int]
    point: TropicalPoint
    fine_type: FineType


@dataclass(frozen=True)
class BoundedCell:
    """A maximal bounded cell, recorded through its defining sequence.

    The chain lists the pseudovertices 0, e_{i_1}, ..., e_{i_1..i_m}; the
    last one is the generator of the complementary basis.
    """

    sequence: tuple[int, ...]
    basis: frozenset[int]
    basis_index: int
    chain: tuple[TropicalPoint, ...]
    interior_type: FineType


def build_polytope(m: GroundMatroid) -> PolytopeModel:
    """Generators and origin type of the tropical polytope of a matroid.

    Entry i of the origin type is the set of bases containing i.
    """
    n = m.ground_size
    gens = tuple(
        TropicalPoint(0 if i in b else 1 for i in range(1, n + 1))
        for b in m.bases
    )
    origin = FineType(
        [{j for j, b in enumerate(m.bases, start=1) if i in b}
         for i in range(1, n + 1)]
    )
    return PolytopeModel(m, gens, origin)


def corner(p: PolytopeModel, i: int) -> TropicalPoint:
    """The i-th corner, the tropical combination with coefficients -v_{j,i}."""
    from .minplus import corner_point

    return corner_point(p.generators, i)


def _support_point(n: int, support: frozenset[int]) -> TropicalPoint:
    """Canonical point of -e_J: zero on J, one on the complement."""
    return TropicalPoint(0 if i in support else 1 for i in range(1, n + 1))


def _union_type(p: PolytopeModel, support: frozenset[int]) -> FineType:
    """Fine type of -e_J for a union of bases J, by the closed formula.

    With T0 the origin type and J^C = {i_1, ..., i_r}: entry j is
    T0_j minus the union of the T0_{i_l} when j lies in J, and otherwise
    T0_j together with the complement of that union.
    """
    t0 = p.origin_type.entries
    n = p.n_coords
    full = frozenset(range(1, p.n_generators + 1))
    comp = [i for i in range(1, n + 1) if i not in support]
    hit = frozenset().union(*(t0[i - 1] for i in comp)) if comp else frozenset()
    entries = []
    for j in range(1, n + 1):
        if j in support:
            entries.append(t0[j - 1] - hit)
        else:
            entries.append(t0[j - 1] | (full - hit))
    return FineType(entries)


def pseudovertices(p: PolytopeModel) -> list[PseudoVertex]:
    """All 0-cells of the complex: points -e_J for J a union of bases.

    Candidate supports are the union closure of the basis list; a candidate
    only counts when its type is actually zero dimensional (the support of
    all bases can land in the interior of a bigger cell).  Sorted by
    (|J|, lex J).
    """
    closure: set[frozenset[int]] = set(p.matroid.bases)
    frontier = set(closure)
    while frontier:
        new = set()
        for j in frontier:
            for b in p.matroid.bases:
                u = j | b
                if u not in closure:
                    new.add(u)
        closure |= new
        frontier = new
    out = []
    for support in sorted(closure, key=lambda s: (len(s), tuple(sorted(s)))):
        ft = _union_type(p, support)
        if ft.dimension() == 0:
            out.append(PseudoVertex(support, _support_point(p.n_coords, support), ft))
    return out


def valid_sequences(p: PolytopeModel, length: int) -> list[tuple[int, ...]]:
    """Duplicate-free coordinate tuples whose complement contains a basis."""
    d_plus_1 = p.n_coords
    max_len = d_plus_1 - p.matroid.rank
    if not 0 <= length <= max_len:
        raise ValueError(f"sequence length must lie in 0..{max_len}")
    bases = p.matroid.bases
    out = []
    for seq in permutations(range(1, d_plus_1 + 1), length):
        s = set(seq)
        if any(b.isdisjoint(s) for b in bases):
            out.append(seq)
    return out


def maximal_bounded_cells(p: PolytopeModel) -> list[BoundedCell]:
    """One maximal bounded cell per complete valid sequence.

    A complete sequence orders the complement of a basis B; the cell is the
    tropical convex hull of the chain 0, e_{i_1}, ..., e_{i_1..i_m} ending at
    the generator of B, and its interior type peels the origin type along
    the sequence while the coordinates of B keep exactly the index of B.
    """
    m = p.matroid
    n = p.n_coords
    t0 = p.origin_type.entries
    full_len = n - m.rank
    cells = []
    for seq in valid_sequences(p, full_len):
        basis = frozenset(range(1, n + 1)) - set(seq)
        bindex = m.basis_index(basis)
        chain = tuple(
            _support_point(n, frozenset(range(1, n + 1)) - set(seq[:r]))
            for r in range(full_len + 1)
        )
        entries: list[frozenset[int]] = [frozenset()] * n
        eaten: frozenset[int] = frozenset()
        for i in seq:
            entries[i - 1] = t0[i - 1] - eaten
            eaten |= t0[i - 1]
        for j in basis:
            entries[j - 1] = t0[j - 1] - eaten
        cells.append(
            BoundedCell(seq, basis, bindex, chain, FineType(entries))
        )
    return cells


def interior_point(cell: BoundedCell) -> TropicalPoint:
    """Ordinary average of the chain, a relative interior point of the cell."""
    n = cell.chain[0].n_coords
    m = len(cell.chain)
    return TropicalPoint(
        sum(pt.coords[j] for pt in cell.chain) / m for j in range(n)
    ).canonical()


def pseudovertex_label(p: PolytopeModel, pv: PseudoVertex) -> str:
    """Short node name: 0 for the origin, v<i> for generators, e_<...> else."""
    n = p.n_coords
    comp = sorted(set(range(1, n + 1)) - pv.support)
    if not comp:
        return "0"
    if pv.support in p.matroid.bases:
        return f"v{p.matroid.basis_index(pv.support)}"
    return "e_" + "_".join(str(i) for i in comp)


def skeleton_dot(p: PolytopeModel, records: Iterable) -> str:
    """Graphviz source for the 1-skeleton of the bounded subcomplex.

    Nodes are the pseudovertices; records is the full cell enumeration and
    contributes one edge per bounded one dimensional cell, joining the two
    pseudovertices whose types contain the cell type.
    """
    pvs = pseudovertices(p)
    labels = {pv: pseudovertex_label(p, pv) for pv in pvs}
    lines = ["graph skeleton {"]
    for pv in pvs:
        lines.append(f'  "{labels[pv]}";')
    edges = []
    for rec in records:
        if rec.dim != 1 or not rec.bounded:
            continue
        ends = [pv for pv in pvs if pv.fine_type.contains(rec.fine_type)]
        if len(ends) != 2:
            raise AssertionError(
                f"bounded segment with {len(ends)} pseudovertex endpoints"
            )
        a, b = sorted(labels[pv] for pv in ends)
        edges.append((a, b))
    for a, b in sorted(edges):
        lines.append(f'  "{a}" -- "{b}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
