"""Exact min-plus geometry kernel.

Points live in the tropical torus: rational vectors of length d+1 taken
modulo adding a constant to every coordinate.  Tropical addition is min and
tropical multiplication is +.  All arithmetic is exact; ties between minima
carry the combinatorial content (types), so floats are rejected outright.

Indexing is 1-based throughout the public interface: coordinates are
1..d+1 and generators are 1..n.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence


class DimensionMismatch(ValueError):
    """Operands live in tropical tori of different dimension."""


def to_rational(value) -> Fraction:
    """Coerce ints, Fractions and "p/q" strings to Fraction; reject floats."""
    if isinstance(value, (float, bool)):
        raise TypeError(f"exact rational required, got {value!r}")
    return Fraction(value)


def rational_to_json(q: Fraction):
    """Ints stay ints, everything else becomes a "p/q" string."""
    return int(q) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True, init=False, eq=False)
class TropicalPoint:
    """A point of the tropical torus, stored as one representative vector.

    Two points are equal when their representatives differ by a constant
    vector; equality and hashing go through canonical coordinates.
    """

    coords: tuple[Fraction, ...]

    def __init__(self, coords: Iterable) -> None:
        cs = tuple(to_rational(c) for c in coords)
        if not cs:
            raise ValueError("a tropical point needs at least one coordinate")
        object.__setattr__(self, "coords", cs)

    @classmethod
    def of(cls, *coords) -> "TropicalPoint":
        return cls(coords)

    @classmethod
    def origin(cls, n_coords: int) -> "TropicalPoint":
        return cls([0] * n_coords)

    @classmethod
    def unit(cls, i: int, n_coords: int) -> "TropicalPoint":
        """The i-th unit vector e_i (1-based)."""
        if not 1 <= i <= n_coords:
            raise ValueError(f"unit index {i} out of range 1..{n_coords}")
        return cls([1 if j == i else 0 for j in range(1, n_coords + 1)])

    @property
    def n_coords(self) -> int:
        return len(self.coords)

    @property
    def dim(self) -> int:
        """Dimension d of the ambient torus (one less than the vector length)."""
        return len(self.coords) - 1

    def canonical(self) -> "TropicalPoint":
        """Representative with minimum coordinate zero (all entries >= 0)."""
        m = min(self.coords)
        return TropicalPoint(c - m for c in self.coords)

    def c0(self) -> tuple[Fraction, ...]:
        """Chart (x_2 - x_1, ..., x_{d+1} - x_1) identifying the torus with R^d."""
        first = self.coords[0]
        return tuple(c - first for c in self.coords[1:])

    @classmethod
    def from_c0(cls, chart: Iterable) -> "TropicalPoint":
        return cls([0, *chart])

    def translate(self, deltas) -> "TropicalPoint":
        """Shift by a vector, or by a scalar applied to every coordinate.

        A scalar shift does not move the point in the torus; it only
        changes the representative.
        """
        if isinstance(deltas, (int, str, Fraction)):
            ds = (to_rational(deltas),) * len(self.coords)
        else:
            ds = tuple(to_rational(d) for d in deltas)
        if len(ds) != len(self.coords):
            raise DimensionMismatch("translation vector has wrong length")
        return TropicalPoint(c + d for c, d in zip(self.coords, ds))

    def __eq__(self, other) -> bool:
        if not isinstance(other, TropicalPoint):
            return NotImplemented
        return self.canonical().coords == other.canonical().coords

    def __hash__(self) -> int:
        return hash(self.canonical().coords)

    def __repr__(self) -> str:
        return f"TropicalPoint({[str(c) for c in self.coords]})"

    def to_json(self) -> list:
        return [rational_to_json(c) for c in self.coords]

    @classmethod
    def from_json(cls, arr: Sequence) -> "TropicalPoint":
        return cls(arr)


def canonical(p: TropicalPoint) -> TropicalPoint:
    return p.canonical()


def c0_chart(p: TropicalPoint) -> tuple[Fraction, ...]:
    return p.c0()


def _same_torus(points: Iterable[TropicalPoint]) -> int:
    it = iter(points)
    try:
        n = next(it).n_coords
    except StopIteration:
        raise ValueError("at least one point required") from None
    for p in it:
        if p.n_coords != n:
            raise DimensionMismatch("points live in different tori")
    return n


def trop_combination(coeffs: Iterable, points: Sequence[TropicalPoint]) -> TropicalPoint:
    """Tropical linear combination: componentwise min of (c_i + p_i)."""
    cs = [to_rational(c) for c in coeffs]
    if len(cs) != len(points):
        raise ValueError("one coefficient per point required")
    n = _same_torus(points)
    return TropicalPoint(
        min(c + p.coords[j] for c, p in zip(cs, points)) for j in range(n)
    )


def trop_segment(x: TropicalPoint, y: TropicalPoint) -> list[TropicalPoint]:
    """Breakpoints of the tropical segment from x to y, endpoints included.

    The segment is the image of (lam + x) min (mu + y); only t = mu - lam
    matters up to the class.  Coordinate j switches from the x-side to the
    y-side as t drops below x_j - y_j, so the breakpoints sit at the distinct
    coordinate differences.  There are at most d+1 of them.
    """
    _same_torus((x, y))
    cuts = sorted({xj - yj for xj, yj in zip(x.coords, y.coords)}, reverse=True)
    out = []
    for t in cuts:
        z = TropicalPoint(min(xj, t + yj) for xj, yj in zip(x.coords, y.coords))
        out.append(z.canonical())
    return out


@dataclass(frozen=True, init=False)
class FineType:
    """Fine type of a point: entry k lists the generators whose sector k
    contains the point (equivalently, whose min is attained at coordinate k).
    """

    entries: tuple[frozenset[int], ...]

    def __init__(self, entries: Iterable[Iterable[int]]) -> None:
        object.__setattr__(
            self, "entries", tuple(frozenset(e) for e in entries)
        )
        if not self.entries:
            raise ValueError("a fine type needs at least one entry")

    @property
    def n_coords(self) -> int:
        return len(self.entries)

    def coarse(self) -> tuple[int, ...]:
        """Coarse type: entrywise cardinalities."""
        return tuple(len(e) for e in self.entries)

    def union(self) -> frozenset[int]:
        return frozenset().union(*self.entries)

    def is_bounded(self) -> bool:
        """Cells of this type are bounded exactly when no entry is empty."""
        return all(self.entries)

    def dimension(self) -> int:
        """Dimension of the cell with this type.

        Count connected components of the graph on coordinates 1..d+1 whose
        edges join coordinates with intersecting entries (empty entries stay
        isolated), then subtract one.
        """
        n = len(self.entries)
        parent = list(range(n))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for i in range(n):
            if not self.entries[i]:
                continue
            for j in range(i + 1, n):
                if self.entries[i] & self.entries[j]:
                    ri, rj = find(i), find(j)
                    if ri != rj:
                        parent[ri] = rj
        roots = {find(i) for i in range(n)}
        return len(roots) - 1

    def contains(self, other: "FineType") -> bool:
        """Entrywise superset; closed cells nest opposite to type containment."""
        if self.n_coords != other.n_coords:
            raise DimensionMismatch("types have different lengths")
        return all(a >= b for a, b in zip(self.entries, other.entries))

    def key(self) -> tuple[tuple[int, ...], ...]:
        """Deterministic sortable form."""
        return tuple(tuple(sorted(e)) for e in self.entries)

    def to_json(self) -> list[list[int]]:
        return [sorted(e) for e in self.entries]

    @classmethod
    def from_json(cls, arr: Iterable[Iterable[int]]) -> "FineType":
        return cls(arr)


def fine_type(x: TropicalPoint, generators: Sequence[TropicalPoint]) -> FineType:
    """Fine type of x with respect to the generators.

    Generator i belongs to entry k iff v_{i,k} - x_k <= v_{i,j} - x_j for
    every coordinate j.
    """
    if not generators:
        raise ValueError("fine_type needs at least one generator")
    n = _same_torus([x, *generators])
    entries: list[set[int]] = [set() for _ in range(n)]
    for idx, v in enumerate(generators, start=1):
        diffs = [vc - xc for vc, xc in zip(v.coords, x.coords)]
        m = min(diffs)
        for k, dk in enumerate(diffs):
            if dk == m:
                entries[k].add(idx)
    return FineType(entries)


def coarse_type(x: TropicalPoint, generators: Sequence[TropicalPoint]) -> tuple[int, ...]:
    return fine_type(x, generators).coarse()


def in_tconv(x: TropicalPoint, generators: Sequence[TropicalPoint]) -> bool:
    """Membership in the tropical convex hull: no empty fine type entry."""
    return fine_type(x, generators).is_bounded()


@dataclass(frozen=True, init=False)
class TropicalHalfspace:
    """Tropical halfspace with the given apex and sector set I.

    Contains x iff min over i in I of (a_i + x_i) is at most the min over
    the complement, where a = -apex is the defining linear form.  I must be
    a nonempty proper subset of the coordinates.
    """

    apex: TropicalPoint
    sectors: frozenset[int]

    def __init__(self, apex: TropicalPoint, sectors: Iterable[int]) -> None:
        sec = frozenset(int(s) for s in sectors)
        n = apex.n_coords
        if not sec or len(sec) >= n:
            raise ValueError("sector set must be a nonempty proper subset")
        if any(s < 1 or s > n for s in sec):
            raise ValueError(f"sector indices must lie in 1..{n}")
        object.__setattr__(self, "apex", apex)
        object.__setattr__(self, "sectors", sec)

    def to_json(self) -> dict:
        return {"apex": self.apex.to_json(), "sectors": sorted(self.sectors)}

    @classmethod
    def from_json(cls, obj: dict) -> "TropicalHalfspace":
        return cls(TropicalPoint.from_json(obj["apex"]), obj["sectors"])


def halfspace_contains(h: TropicalHalfspace, x: TropicalPoint) -> bool:
    if h.apex.n_coords != x.n_coords:
        raise DimensionMismatch("halfspace and point live in different tori")
    form = [-c for c in h.apex.coords]
    lhs = min(form[i - 1] + x.coords[i - 1] for i in h.sectors)
    rhs = min(
        form[j] + x.coords[j]
        for j in range(x.n_coords)
        if (j + 1) not in h.sectors
    )
    return lhs <= rhs


def corner_point(generators: Sequence[TropicalPoint], i: int) -> TropicalPoint:
    """The i-th corner of the generators: min over g of (g - g_i * ones),
    in canonical coordinates."""
    n = _same_torus(generators)
    if not 1 <= i <= n:
        raise ValueError(f"corner index {i} out of range 1..{n}")
    return TropicalPoint(
        min(g.coords[j] - g.coords[i - 1] for g in generators) for j in range(n)
    ).canonical()
