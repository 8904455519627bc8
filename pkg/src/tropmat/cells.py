"""Cell complex of a tropical polytope, two ways.

The brute force side enumerates cells as feasibility classes of strict
difference constraint systems: fixing, for every generator, the set of
coordinates where its minimum is attained cuts the torus into relatively
open cells.  Feasibility, witnesses and forced equalities are all decided
exactly with a lexicographic Bellman-Ford (rational value, strictness
count) so that open and closed constraints never blur.

The closed form side evaluates the basis counting formula for the coarse
types of maximal cells and the hypersimplex specialisation.  cross_validate
compares the two.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from math import comb
from typing import Iterable, Sequence

from .matroids import GroundMatroid, count_b
from .minplus import FineType, TropicalPoint, fine_type
from .polytopes import PolytopeModel

DEFAULT_CAP = 10**7


class CapExceeded(ValueError):
    """The candidate space (d+1)^n is larger than the configured cap."""


def cell_dimension(t: FineType) -> int:
    """Dimension of the cell with fine type t (component count formula)."""
    return t.dimension()


# ---------------------------------------------------------------------------
# difference constraint systems
#
# An edge (u, v) -> (c, s) encodes x_v - x_u <= c + s*eps for an
# infinitesimal eps > 0; s is 0 for closed constraints and -1 for strict
# ones.  Weights compare lexicographically.


def _lex_bf(n_nodes: int, edges: dict) -> list | None:
    """Shortest path potentials from a virtual source, or None on a
    lexicographically negative cycle (infeasible system)."""
    dist = [(0, 0)] * n_nodes
    items = list(edges.items())
    for _ in range(n_nodes):
        changed = False
        for (u, v), (c, s) in items:
            du = dist[u]
            cand = (du[0] + c, du[1] + s)
            if cand < dist[v]:
                dist[v] = cand
                changed = True
        if not changed:
            return dist
    for (u, v), (c, s) in items:
        du = dist[u]
        if (du[0] + c, du[1] + s) < dist[v]:
            return None
    return dist


def _witness_coords(potentials: list, edges: dict) -> list[Fraction]:
    """Substitute a concrete eps small enough that no slack constraint
    becomes tight, then read coordinates off the potentials."""
    bounds = []
    for (u, v), (c, s) in edges.items():
        da = potentials[v][0] - potentials[u][0]
        ds = potentials[v][1] - potentials[u][1]
        if da < c and ds > 0:
            bounds.append(Fraction(c - da, ds))
    eps = min(bounds) / 2 if bounds else Fraction(1)
    return [p[0] + p[1] * eps for p in potentials]


def _merge(edges: dict, u: int, v: int, c, s: int) -> None:
    w = (c, s)
    old = edges.get((u, v))
    if old is None or w < old:
        edges[(u, v)] = w


def _coord_matrix(generators: Sequence[TropicalPoint]) -> list[list]:
    """Raw coordinates; kept as ints when exact, which they are for the 0/1
    generators of matroid polytopes (integer arithmetic is much faster)."""
    return [
        [int(c) if c.denominator == 1 else c for c in g.coords]
        for g in generators
    ]


# ---------------------------------------------------------------------------
# maximal cells by exhaustive search over argmin assignments


@dataclass(frozen=True)
class CellRecord:
    """One relatively open cell: its type, dimension, boundedness and a
    rational point in its relative interior."""

    fine_type: FineType
    dim: int
    bounded: bool
    witness: TropicalPoint

    @property
    def coarse(self) -> tuple[int, ...]:
        return self.fine_type.coarse()

    def to_json_obj(self) -> dict:
        return {
            "type": self.fine_type.to_json(),
            "dim": self.dim,
            "bounded": self.bounded,
            "coarse": list(self.coarse),
            "witness": self.witness.to_json(),
        }


@dataclass(frozen=True)
class CellComplexModel:
    """All cells of the type decomposition, with the f-vector by dimension."""

    n_coords: int
    cells: tuple[CellRecord, ...]
    f_vector: tuple[int, ...]

    def counts_ok(self) -> bool:
        return sum(self.f_vector) == len(self.cells)


def _as_generators(p: PolytopeModel | Sequence[TropicalPoint]) -> tuple[TropicalPoint, ...]:
    """Accept a polytope model or a bare generator sequence."""
    gens = tuple(p.generators) if isinstance(p, PolytopeModel) else tuple(p)
    if not gens:
        raise ValueError("need at least one generator")
    return gens


def _check_cap(gens: Sequence[TropicalPoint], cap: int) -> None:
    n, m = gens[0].n_coords, len(gens)
    if n**m > cap:
        raise CapExceeded(f"{n}^{m} argmin assignments exceed cap {cap}")


def _strict_edges_for(v: list, k: int, edges: dict) -> None:
    # generator with coordinates v assigned to sector k (0-based):
    # x_j - x_k < v_j - v_k for every other coordinate j
    vk = v[k]
    for j in range(len(v)):
        if j != k:
            _merge(edges, k, j, v[j] - vk, -1)


def _record_from_assignment(
    gens: Sequence[TropicalPoint], matrix: list, sigma: Sequence[int], edges: dict
) -> CellRecord:
    n = len(matrix[0])
    potentials = _lex_bf(n, edges)
    assert potentials is not None
    witness = TropicalPoint(_witness_coords(potentials, edges)).canonical()
    entries: list[set[int]] = [set() for _ in range(n)]
    for g, k in enumerate(sigma):
        entries[k].add(g + 1)
    ft = FineType(entries)
    if fine_type(witness, gens).entries != ft.entries:
        raise AssertionError("witness does not reproduce the assignment type")
    return CellRecord(ft, ft.dimension(), ft.is_bounded(), witness)


def enumerate_maximal_cells(
    p: PolytopeModel | Sequence[TropicalPoint], cap: int = DEFAULT_CAP
) -> list[CellRecord]:
    """All full dimensional cells of the complex, by exhaustive search.

    Every map sending each generator to a single argmin coordinate is
    tested for strict feasibility; infeasible prefixes are pruned, which
    only skips assignments whose constraint systems are already
    contradictory.  Feasible maps correspond bijectively to maximal cells.
    Results are sorted by fine type.
    """
    gens = _as_generators(p)
    _check_cap(gens, cap)
    matrix = _coord_matrix(gens)
    n_nodes = gens[0].n_coords
    n_gens = len(matrix)
    found: list[CellRecord] = []
    sigma = [0] * n_gens

    def descend(g: int, edges: dict) -> None:
        if g == n_gens:
            found.append(_record_from_assignment(gens, matrix, sigma, edges))
            return
        for k in range(n_nodes):
            child = dict(edges)
            _strict_edges_for(matrix[g], k, child)
            if _lex_bf(n_nodes, child) is not None:
                sigma[g] = k
                descend(g + 1, child)

    descend(0, {})
    found.sort(key=lambda r: r.fine_type.key())
    d = n_nodes - 1
    for rec in found:
        if rec.dim != d:
            raise AssertionError("argmin assignment produced a non maximal cell")
    return found


# ---------------------------------------------------------------------------
# the full complex by closing down from the maximal cells


def _argmin_sets(ft: FineType) -> tuple[frozenset[int], ...]:
    """Per generator sets of argmin coordinates (0-based), from a fine type."""
    n_gens = max(ft.union())
    sets: list[set[int]] = [set() for _ in range(n_gens)]
    for k, entry in enumerate(ft.entries):
        for g in entry:
            sets[g - 1].add(k)
    return tuple(frozenset(s) for s in sets)


def _closed_system(matrix: list, arg_sets: Sequence[frozenset[int]],
                   extra: tuple[int, int] | None = None):
    """Value edges and the set of equality directed edges for the closed
    cell of an argmin assignment, optionally with one extra tie forced."""
    n = len(matrix[0])
    values: dict[tuple[int, int], object] = {}
    hard: set[tuple[int, int]] = set()

    def add_value(u, v, c, is_eq):
        old = values.get((u, v))
        if old is None or c < old:
            values[(u, v)] = c
        if is_eq:
            hard.add((u, v))

    for g, s in enumerate(arg_sets):
        members = set(s)
        if extra is not None and g == extra[0]:
            members.add(extra[1])
        rep = min(members)
        row = matrix[g]
        for b in members:
            if b != rep:
                c = row[b] - row[rep]
                add_value(rep, b, c, True)
                add_value(b, rep, -c, True)
        for t in range(n):
            if t not in members:
                add_value(rep, t, row[t] - row[rep], False)
    return values, hard


def _floyd_warshall(n: int, values: dict) -> list | None:
    dist = [[None] * n for _ in range(n)]
    for i in range(n):
        dist[i][i] = 0
    for (u, v), c in values.items():
        if dist[u][v] is None or c < dist[u][v]:
            dist[u][v] = c
    for m in range(n):
        dm = dist[m]
        for i in range(n):
            dim_ = dist[i][m]
            if dim_ is None:
                continue
            di = dist[i]
            for j in range(n):
                if dm[j] is None:
                    continue
                c = dim_ + dm[j]
                if di[j] is None or c < di[j]:
                    di[j] = c
    for i in range(n):
        if dist[i][i] < 0:
            return None
    return dist


def _face_cell(gens, matrix, arg_sets, i0: int, j0: int):
    """Relative interior data of the face of the closed cell of arg_sets
    obtained by forcing coordinate j0 into generator i0's argmin set.

    Returns (fine type, witness point, argmin sets) or None when empty.
    Constraints implied tight everywhere on the face stay closed; all other
    inequalities are opened by an infinitesimal so the witness lands in the
    relative interior, whose type is then read off directly.
    """
    n = len(matrix[0])
    values, hard = _closed_system(matrix, arg_sets, (i0, j0))
    dist = _floyd_warshall(n, values)
    if dist is None:
        return None
    lex_edges = {}
    for (u, v), c in values.items():
        if (u, v) in hard or (dist[v][u] is not None and dist[v][u] == -c):
            lex_edges[(u, v)] = (c, 0)
        else:
            lex_edges[(u, v)] = (c, -1)
    potentials = _lex_bf(n, lex_edges)
    assert potentials is not None
    witness = TropicalPoint(_witness_coords(potentials, lex_edges)).canonical()
    ft = fine_type(witness, gens)
    new_sets = _argmin_sets(ft)
    for g, s in enumerate(arg_sets):
        want = s | {j0} if g == i0 else s
        if not want <= new_sets[g]:
            raise AssertionError("face witness lost a required tie")
    return ft, witness, new_sets


def enumerate_all_cells(
    p: PolytopeModel | Sequence[TropicalPoint], cap: int = DEFAULT_CAP
) -> CellComplexModel:
    """Every cell of the complex, of all dimensions.

    Faces are generated by tightening one inequality of a known cell at a
    time and reading the type at a relative interior witness, which also
    picks up any ties the tightening forces.  Cells are deduplicated by
    fine type; the f-vector counts them by dimension 0..d.
    """
    gens = _as_generators(p)
    maximal = enumerate_maximal_cells(gens, cap)
    matrix = _coord_matrix(gens)
    n = gens[0].n_coords
    visited: dict[tuple, CellRecord] = {}
    queue: deque[tuple[frozenset[int], ...]] = deque()
    for rec in maximal:
        visited[rec.fine_type.key()] = rec
        queue.append(_argmin_sets(rec.fine_type))
    while queue:
        arg_sets = queue.popleft()
        for i0, s in enumerate(arg_sets):
            for j0 in range(n):
                if j0 in s:
                    continue
                direct = tuple(
                    fs | {j0} if g == i0 else fs for g, fs in enumerate(arg_sets)
                )
                if _sets_key(direct, n) in visited:
                    continue
                face = _face_cell(gens, matrix, arg_sets, i0, j0)
                if face is None:
                    continue
                ft, witness, new_sets = face
                key = ft.key()
                if key in visited:
                    continue
                visited[key] = CellRecord(ft, ft.dimension(), ft.is_bounded(), witness)
                queue.append(new_sets)
    cells = tuple(sorted(visited.values(), key=lambda r: (r.dim, r.fine_type.key())))
    d = n - 1
    fv = [0] * (d + 1)
    for rec in cells:
        fv[rec.dim] += 1
    return CellComplexModel(n, cells, tuple(fv))


def _sets_key(arg_sets: Sequence[frozenset[int]], n: int) -> tuple:
    entries: list[set[int]] = [set() for _ in range(n)]
    for g, s in enumerate(arg_sets):
        for k in s:
            entries[k].add(g + 1)
    return tuple(tuple(sorted(e)) for e in entries)


def affine_cell_dim(p: PolytopeModel | Sequence[TropicalPoint], ft: FineType) -> int:
    """Affine dimension of the cell of type ft, from its constraint system.

    Coordinates whose difference is pinned by the closed system (shortest
    path there and back sums to zero) fall in one affine class; the
    dimension is the number of classes minus one.  Must agree with
    cell_dimension for every realized type.
    """
    gens = _as_generators(p)
    matrix = _coord_matrix(gens)
    n = gens[0].n_coords
    values, _ = _closed_system(matrix, _argmin_sets(ft))
    dist = _floyd_warshall(n, values)
    if dist is None:
        raise ValueError("type is not realized: empty constraint system")
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for u in range(n):
        for v in range(u + 1, n):
            if (
                dist[u][v] is not None
                and dist[v][u] is not None
                and dist[u][v] + dist[v][u] == 0
            ):
                ru, rv = find(u), find(v)
                if ru != rv:
                    parent[ru] = rv
    return len({find(i) for i in range(n)}) - 1


# ---------------------------------------------------------------------------
# closed form coarse types


def maximal_cell_coarse_types(m: GroundMatroid) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Coarse types of maximal cells from basis counting.

    For every duplicate-free tuple (i_1, ..., i_{d'}) whose complement
    contains a basis (d' from 0 to d-k+1) and every further coordinate
    i_{d'+1}, the type puts b_{i_1,empty} + b_{empty,{i_1..i_{d'+1}}} at
    i_1, b_{i_l,{i_1..i_{l-1}}} at i_l for l >= 2, and zero elsewhere.
    Returns (full tuple, coarse type) pairs.
    """
    n = m.ground_size
    out = []
    for dp in range(0, n - m.rank + 1):
        for seq in permutations(m.ground(), dp):
            s = set(seq)
            if not any(b.isdisjoint(s) for b in m.bases):
                continue
            for last in m.ground():
                if last in s:
                    continue
                full = seq + (last,)
                t = [0] * n
                t[full[0] - 1] = count_b(m, {full[0]}, ()) + count_b(m, (), full)
                for l in range(1, dp + 1):
                    t[full[l] - 1] = count_b(m, {full[l]}, full[:l])
                out.append((full, tuple(t)))
    return out


def hypersimplex_coarse_types(k: int, d: int) -> tuple[tuple[int, ...], ...]:
    """Coarse types of maximal cells of the hypersimplex, one representative
    per coordinate permutation orbit.

    For a = 1..d+2-k the representative starts with C(d+1-a, k) + C(d, k-1),
    continues with C(d-1, k-1), ..., C(d-(a-1), k-1) and is padded with
    zeros.  a = 0 is excluded: its leading entry would exceed the number of
    generators.
    """
    if not 2 <= k <= d:
        raise ValueError("hypersimplex coarse types require 2 <= k <= d")
    out = []
    for a in range(1, d + 2 - k + 1):
        row = [comb(d + 1 - a, k) + comb(d, k - 1)]
        row += [comb(d - l, k - 1) for l in range(1, a)]
        row += [0] * (d + 1 - a)
        out.append(tuple(row))
    return tuple(out)


@dataclass(frozen=True)
class CrossValidationReport:
    """Comparison of enumerated maximal cell coarse types with the formula."""

    cell_count: int
    formula_count: int
    multiset_equal: bool
    set_equal: bool
    only_enumerated: tuple[tuple[tuple[int, ...], int], ...]
    only_formula: tuple[tuple[tuple[int, ...], int], ...]

    @property
    def ok(self) -> bool:
        return self.multiset_equal

    def summary(self) -> str:
        if self.ok:
            return f"OK: {self.cell_count} cells, formula == enumeration"
        parts = [
            f"MISMATCH: {self.cell_count} enumerated vs {self.formula_count} from formula",
            f"set_equal={self.set_equal}",
        ]
        if self.only_enumerated:
            parts.append(f"only enumerated: {list(self.only_enumerated)}")
        if self.only_formula:
            parts.append(f"only formula: {list(self.only_formula)}")
        return "; ".join(parts)

    def to_json_obj(self) -> dict:
        return {
            "ok": self.ok,
            "cell_count": self.cell_count,
            "formula_count": self.formula_count,
            "multiset_equal": self.multiset_equal,
            "set_equal": self.set_equal,
            "only_enumerated": [[list(t), c] for t, c in self.only_enumerated],
            "only_formula": [[list(t), c] for t, c in self.only_formula],
        }


def cross_validate(p: PolytopeModel, cap: int = DEFAULT_CAP) -> CrossValidationReport:
    """Check the coarse type formula against the brute force enumeration."""
    cells = enumerate_maximal_cells(p, cap)
    formula = maximal_cell_coarse_types(p.matroid)
    emu = Counter(rec.coarse for rec in cells)
    fmu = Counter(t for _, t in formula)
    only_e = tuple(sorted((emu - fmu).items()))
    only_f = tuple(sorted((fmu - emu).items()))
    return CrossValidationReport(
        cell_count=len(cells),
        formula_count=len(formula),
        multiset_equal=emu == fmu,
        set_equal=set(emu) == set(fmu),
        only_enumerated=only_e,
        only_formula=only_f,
    )
