"""Simple graphs and their spanning tree matroids, plus explicit basis lists.

Edges are numbered 1..d+1 by their position in the input list; bases are
k-subsets of edge labels.  Graphs must be simple, connected and free of
bridges so that every edge lies in some spanning tree and misses some other.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

EXHAUSTIVE_LIMIT = 10**6


class GraphError(ValueError):
    """Base class for graph validation failures."""


class GraphFormatError(GraphError):
    """Input is syntactically valid JSON but not a graph description."""


class LoopEdgeError(GraphError):
    pass


class ParallelEdgeError(GraphError):
    pass


class DisconnectedGraphError(GraphError):
    pass


class BridgeEdgeError(GraphError):
    pass


class MatroidError(ValueError):
    """Basis list fails one of the matroid axioms or conventions."""


@dataclass(frozen=True, init=False)
class LabeledGraph:
    """A simple connected bridgeless graph with positionally labeled edges."""

    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]

    def __init__(self, vertices: Iterable[str], edges: Iterable[Sequence[str]]) -> None:
        vs = tuple(str(v) for v in vertices)
        es = tuple((str(e[0]), str(e[1])) for e in edges)
        object.__setattr__(self, "vertices", vs)
        object.__setattr__(self, "edges", es)
        self._validate()

    def _validate(self) -> None:
        vs, es = self.vertices, self.edges
        if len(set(vs)) != len(vs):
            raise GraphFormatError("duplicate vertex names")
        if not vs or not es:
            raise GraphFormatError("graph needs vertices and edges")
        vset = set(vs)
        seen: set[frozenset[str]] = set()
        for u, v in es:
            if u not in vset or v not in vset:
                raise GraphFormatError(f"edge ({u},{v}) uses unknown vertices")
            if u == v:
                raise LoopEdgeError(f"loop at vertex {u}")
            key = frozenset((u, v))
            if key in seen:
                raise ParallelEdgeError(f"parallel edge ({u},{v})")
            seen.add(key)
        if not _connected(vs, es):
            raise DisconnectedGraphError("graph is not connected")
        for i in range(len(es)):
            rest = es[:i] + es[i + 1:]
            if not _connected(vs, rest):
                raise BridgeEdgeError(f"edge {i + 1} = {es[i]} is a bridge")

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def to_json_obj(self) -> dict:
        return {"vertices": list(self.vertices), "edges": [list(e) for e in self.edges]}


def _connected(vertices: Sequence[str], edges: Iterable[tuple[str, str]]) -> bool:
    if not vertices:
        return False
    adj: dict[str, list[str]] = {v: [] for v in vertices}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    stack = [vertices[0]]
    seen = {vertices[0]}
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(vertices)


def graph_from_obj(obj) -> LabeledGraph:
    if not isinstance(obj, dict):
        raise GraphFormatError("graph JSON must be an object")
    try:
        vertices = obj["vertices"]
        edges = obj["edges"]
    except (KeyError, TypeError) as exc:
        raise GraphFormatError("graph JSON needs 'vertices' and 'edges'") from exc
    if not isinstance(vertices, list) or not isinstance(edges, list):
        raise GraphFormatError("'vertices' and 'edges' must be lists")
    for e in edges:
        if not isinstance(e, list) or len(e) != 2:
            raise GraphFormatError(f"edge {e!r} is not a two element list")
    return LabeledGraph(vertices, edges)


def parse_graph(text: str) -> LabeledGraph:
    """Parse a {"vertices": [...], "edges": [[u, v], ...]} JSON document."""
    return graph_from_obj(json.loads(text))


@dataclass(frozen=True, init=False)
class GroundMatroid:
    """A matroid given by its list of bases over ground set 1..ground_size."""

    ground_size: int
    rank: int
    bases: tuple[frozenset[int], ...]

    def __init__(self, ground_size: int, rank: int, bases: Iterable[frozenset[int]]) -> None:
        object.__setattr__(self, "ground_size", int(ground_size))
        object.__setattr__(self, "rank", int(rank))
        object.__setattr__(self, "bases", tuple(bases))

    @property
    def n_bases(self) -> int:
        return len(self.bases)

    def ground(self) -> range:
        return range(1, self.ground_size + 1)

    def basis_index(self, basis: frozenset[int]) -> int:
        """1-based position of a basis in the lexicographic list."""
        for i, b in enumerate(self.bases, start=1):
            if b == basis:
                return i
        raise MatroidError(f"{sorted(basis)} is not a basis")

    def to_json_obj(self) -> dict:
        return {
            "ground_size": self.ground_size,
            "bases": [sorted(b) for b in self.bases],
        }


def _exchange_ok(bases: Sequence[frozenset[int]]) -> bool:
    bset = set(bases)
    for bu in bases:
        for bv in bases:
            if bu == bv:
                continue
            for u in bu - bv:
                if not any((bu - {u}) | {v} in bset for v in bv - bu):
                    return False
    return True


def check_exchange(bases) -> bool:
    """Basis exchange property for a GroundMatroid or a raw collection of sets."""
    if isinstance(bases, GroundMatroid):
        return _exchange_ok(bases.bases)
    return _exchange_ok([frozenset(b) for b in bases])


def matroid_from_bases(ground_size: int, bases: Iterable[Iterable[int]]) -> GroundMatroid:
    """Validate a basis list and build the matroid.

    Requirements: at least one basis, equal cardinalities, elements within
    1..ground_size, the exchange property, and every element both present in
    some basis and absent from some basis (no loops, no coloops).
    """
    blist = sorted({frozenset(int(e) for e in b) for b in bases},
                   key=lambda b: tuple(sorted(b)))
    if not blist:
        raise MatroidError("empty basis list")
    rank = len(blist[0])
    if any(len(b) != rank for b in blist):
        raise MatroidError("bases have unequal cardinalities")
    ground = set(range(1, ground_size + 1))
    for b in blist:
        if not b <= ground:
            raise MatroidError(f"basis {sorted(b)} leaves the ground set 1..{ground_size}")
    if not _exchange_ok(blist):
        raise MatroidError("exchange property violated")
    covered = frozenset().union(*blist)
    if covered != ground:
        missing = sorted(ground - covered)
        raise MatroidError(f"elements {missing} lie in no basis")
    common = frozenset(ground).intersection(*blist)
    if common:
        raise MatroidError(f"elements {sorted(common)} lie in every basis")
    return GroundMatroid(ground_size, rank, blist)


def uniform_matroid(rank: int, ground_size: int) -> GroundMatroid:
    """U_{k,m}: every k-subset of 1..m is a basis."""
    if not 1 <= rank <= ground_size:
        raise MatroidError(f"rank {rank} invalid for ground size {ground_size}")
    return matroid_from_bases(
        ground_size, combinations(range(1, ground_size + 1), rank)
    )


def _spanning_trees_exhaustive(graph: LabeledGraph) -> list[frozenset[int]]:
    vidx = {v: i for i, v in enumerate(graph.vertices)}
    n_vertices = len(graph.vertices)
    k = n_vertices - 1
    out = []
    for combo in combinations(range(len(graph.edges)), k):
        parent = list(range(n_vertices))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        acyclic = True
        for ei in combo:
            u, v = graph.edges[ei]
            ru, rv = find(vidx[u]), find(vidx[v])
            if ru == rv:
                acyclic = False
                break
            parent[ru] = rv
        if acyclic:
            out.append(frozenset(ei + 1 for ei in combo))
    return out


def _spanning_trees_dc(n_vertices: int, edges: list[tuple[int, int, int]]) -> Iterable[frozenset[int]]:
    """Deletion/contraction enumeration on a multigraph given as
    (u, v, label) triples with integer vertices 0..n_vertices-1."""
    if n_vertices == 1:
        yield frozenset()
        return
    live = [(u, v, lab) for u, v, lab in edges if u != v]
    # connectivity on the contracted graph
    adj: dict[int, set[int]] = {}
    verts: set[int] = set()
    for u, v, _ in live:
        verts.update((u, v))
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)
    if len(verts) < n_vertices or not verts:
        return
    stack = [next(iter(verts))]
    seen = {stack[0]}
    while stack:
        for w in adj.get(stack.pop(), ()):
            if w not in seen:
                seen.add(w)
                stack.append(w)
    if len(seen) < n_vertices:
        return
    u0, v0, lab0 = live[0]
    # contract: merge v0 into u0
    contracted = [
        (u0 if u == v0 else u, u0 if v == v0 else v, lab)
        for u, v, lab in live[1:]
    ]
    for tree in _spanning_trees_dc(n_vertices - 1, contracted):
        yield tree | {lab0}
    # delete
    yield from _spanning_trees_dc(n_vertices, live[1:])


def enumerate_bases(graph: LabeledGraph) -> GroundMatroid:
    """All spanning trees of the graph as a matroid over the edge labels.

    Uses the exhaustive subset scan while C(d+1, k) stays small and a
    deletion/contraction recursion beyond that.
    """
    k = len(graph.vertices) - 1
    if comb(graph.n_edges, k) <= EXHAUSTIVE_LIMIT:
        trees = _spanning_trees_exhaustive(graph)
    else:
        vidx = {v: i for i, v in enumerate(graph.vertices)}
        triples = [
            (vidx[u], vidx[v], i + 1) for i, (u, v) in enumerate(graph.edges)
        ]
        trees = list(_spanning_trees_dc(len(graph.vertices), triples))
    return matroid_from_bases(graph.n_edges, trees)


def non_bases(m: GroundMatroid) -> list[frozenset[int]]:
    """Rank-size subsets of the ground set that are not bases, in lex order."""
    bset = set(m.bases)
    return [
        frozenset(c)
        for c in combinations(m.ground(), m.rank)
        if frozenset(c) not in bset
    ]


def count_b(m: GroundMatroid, include: Iterable[int], avoid: Iterable[int]) -> int:
    """Number of bases containing every element of `include` and none of `avoid`."""
    inc = frozenset(int(e) for e in include)
    avd = frozenset(int(e) for e in avoid)
    if inc & avd:
        raise ValueError(f"include and avoid overlap on {sorted(inc & avd)}")
    out_of_range = (inc | avd) - set(m.ground())
    if out_of_range:
        raise ValueError(f"elements {sorted(out_of_range)} leave the ground set")
    return sum(1 for b in m.bases if inc <= b and not (avd & b))


def parse_bases(text: str) -> GroundMatroid:
    """Parse a {"ground_size": m, "bases": [[...], ...]} JSON document."""
    obj = json.loads(text)
    if not isinstance(obj, dict) or "ground_size" not in obj or "bases" not in obj:
        raise MatroidError("basis JSON needs 'ground_size' and 'bases'")
    return matroid_from_bases(obj["ground_size"], obj["bases"])
