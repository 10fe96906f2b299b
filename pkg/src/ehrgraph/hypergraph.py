"""Hypergraphs on vertices 1..k: parsing, classification, incidence matrices,
total unimodularity and the standard graph families."""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable, Optional, Sequence


class HypergraphError(ValueError):
    """Raised for malformed hypergraph input or invalid family parameters."""


@dataclass(frozen=True)
class Hypergraph:
    k: int
    edges: tuple[frozenset[int], ...]

    def __init__(self, k: int, edges: Iterable[Iterable[int]]):
        edges = tuple(frozenset(e) for e in edges)
        if k < 1:
            raise HypergraphError(f"vertex count must be positive, got {k}")
        if not edges:
            raise HypergraphError("at least one edge is required")
        for i, e in enumerate(edges, 1):
            if not e:
                raise HypergraphError(f"edge {i} is empty")
            bad = [v for v in e if not 1 <= v <= k]
            if bad:
                raise HypergraphError(f"edge {i}: vertex id {min(bad)} outside 1..{k}")
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "edges", edges)

    @property
    def r(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return sum(v in e for e in self.edges)

    def to_text(self) -> str:
        lines = [f"vertices: {self.k}"]
        lines += ["edge: " + " ".join(map(str, sorted(e))) for e in self.edges]
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {"vertices": self.k, "edges": [sorted(e) for e in self.edges]}


@dataclass(frozen=True)
class HypergraphProperties:
    is_simple: bool
    is_connected: bool
    is_covering: bool
    has_loops: bool
    has_repeated_edges: bool
    uniform_s: Optional[int]
    is_graph: bool


def _parse_json(text: str) -> Hypergraph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise HypergraphError(f"line {exc.lineno}: invalid JSON ({exc.msg})") from None
    if not isinstance(doc, dict) or "vertices" not in doc or "edges" not in doc:
        raise HypergraphError("JSON hypergraph needs 'vertices' and 'edges'")
    k, edges = doc["vertices"], doc["edges"]
    if not isinstance(k, int) or isinstance(k, bool) or k < 1:
        raise HypergraphError("'vertices' must be a positive integer")
    if not isinstance(edges, list):
        raise HypergraphError("'edges' must be an array")
    for i, e in enumerate(edges, 1):
        if not isinstance(e, list) or not all(isinstance(v, int) and not isinstance(v, bool) for v in e):
            raise HypergraphError(f"edge {i}: expected an array of integers")
        if len(set(e)) != len(e):
            raise HypergraphError(f"edge {i}: duplicate vertex id")
    return Hypergraph(k, edges)


def parse_hypergraph(text: str) -> Hypergraph:
    """Parse the line format (``vertices: k`` then ``edge: i j ...``) or the
    JSON equivalent. Errors name the offending line."""
    if text.lstrip().startswith("{"):
        return _parse_json(text)

    k = None
    edges: list[list[int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, rest = line.partition(":")
        if not sep:
            raise HypergraphError(f"line {lineno}: expected 'vertices:' or 'edge:'")
        key = key.strip()
        fields = rest.split()
        if key == "vertices":
            if k is not None:
                raise HypergraphError(f"line {lineno}: duplicate header")
            if len(fields) != 1 or not fields[0].isdigit() or int(fields[0]) < 1:
                raise HypergraphError(f"line {lineno}: vertex count must be a positive integer")
            k = int(fields[0])
        elif key == "edge":
            if k is None:
                raise HypergraphError(f"line {lineno}: edge before 'vertices:' header")
            if not fields:
                raise HypergraphError(f"line {lineno}: empty edge")
            try:
                ids = [int(f) for f in fields]
            except ValueError:
                raise HypergraphError(f"line {lineno}: vertex ids must be integers") from None
            for v in ids:
                if not 1 <= v <= k:
                    raise HypergraphError(f"line {lineno}: vertex id {v} outside 1..{k}")
            if len(set(ids)) != len(ids):
                raise HypergraphError(f"line {lineno}: duplicate vertex id in edge")
            edges.append(ids)
        else:
            raise HypergraphError(f"line {lineno}: unknown key {key!r}")
    if k is None:
        raise HypergraphError("missing 'vertices:' header")
    if not edges:
        raise HypergraphError("no edges")
    return Hypergraph(k, edges)


def _components(h: Hypergraph) -> int:
    parent = list(range(h.k + 1))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for e in h.edges:
        first, *rest = sorted(e)
        for v in rest:
            parent[find(v)] = find(first)
    return len({find(v) for v in range(1, h.k + 1)})


def validate(h: Hypergraph) -> HypergraphProperties:
    edges = h.edges
    repeated = len(set(edges)) != len(edges)
    simple = not any(
        edges[i] <= edges[j] for i in range(len(edges)) for j in range(len(edges)) if i != j
    )
    sizes = {len(e) for e in edges}
    return HypergraphProperties(
        is_simple=simple,
        is_connected=_components(h) == 1,
        is_covering=frozenset().union(*edges) == frozenset(range(1, h.k + 1)),
        has_loops=1 in sizes,
        has_repeated_edges=repeated,
        uniform_s=next(iter(sizes)) if len(sizes) == 1 else None,
        is_graph=sizes == {2} and not repeated,
    )


def is_bipartite(h: Hypergraph) -> bool:
    """Two-colourability of a graph (every edge of size 2)."""
    adj: dict[int, list[int]] = {v: [] for v in range(1, h.k + 1)}
    for e in h.edges:
        if len(e) != 2:
            raise HypergraphError("bipartiteness is defined here for graphs only")
        a, b = sorted(e)
        adj[a].append(b)
        adj[b].append(a)
    colour: dict[int, int] = {}
    for start in adj:
        if start in colour:
            continue
        colour[start] = 0
        stack = [start]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in colour:
                    colour[w] = 1 - colour[v]
                    stack.append(w)
                elif colour[w] == colour[v]:
                    return False
    return True


# Incidence matrices are plain tuples of 0/1 row tuples.
IncidenceMatrix = tuple[tuple[int, ...], ...]


def incidence_matrix(h: Hypergraph) -> IncidenceMatrix:
    return tuple(tuple(int(j in e) for j in range(1, h.k + 1)) for e in h.edges)


def edges_from_matrix(m: IncidenceMatrix) -> list[frozenset[int]]:
    return [frozenset(j + 1 for j, a in enumerate(row) if a) for row in m]


def det_bareiss(m: Sequence[Sequence[int]]) -> int:
    """Exact integer determinant by fraction-free (Bareiss) elimination."""
    a = [list(row) for row in m]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for i in range(n - 1):
        if a[i][i] == 0:
            for p in range(i + 1, n):
                if a[p][i] != 0:
                    a[i], a[p] = a[p], a[i]
                    sign = -sign
                    break
            else:
                return 0
        for r in range(i + 1, n):
            for c in range(i + 1, n):
                a[r][c] = (a[r][c] * a[i][i] - a[r][i] * a[i][c]) // prev
        prev = a[i][i]
    return sign * a[n - 1][n - 1]


@dataclass(frozen=True)
class TUWitness:
    rows: tuple[int, ...]
    cols: tuple[int, ...]
    det: int


@dataclass(frozen=True)
class TUVerdict:
    """``unimodular`` is True, False (with ``witness``) or None when the
    submatrix count exceeded the work cap."""

    unimodular: Optional[bool]
    witness: Optional[TUWitness] = None
    submatrices: int = 0

    @property
    def label(self) -> str:
        return {True: "true", False: "false", None: "indeterminate"}[self.unimodular]


DEFAULT_TU_CAP = 10**7


def submatrix_count(r: int, k: int) -> int:
    return sum(comb(r, t) * comb(k, t) for t in range(1, min(r, k) + 1))


def is_totally_unimodular(m: IncidenceMatrix, work_cap: int = DEFAULT_TU_CAP) -> TUVerdict:
    """Brute-force scan of every square submatrix.

    Submatrices are visited in lexicographic (size, rows, cols) order, so the
    reported witness is the first offending one in that order.
    """
    r = len(m)
    k = len(m[0]) if r else 0
    total = submatrix_count(r, k)
    if total > work_cap:
        return TUVerdict(None, submatrices=total)
    for t in range(1, min(r, k) + 1):
        for rows in combinations(range(r), t):
            sub_rows = [m[i] for i in rows]
            for cols in combinations(range(k), t):
                d = det_bareiss([[row[j] for j in cols] for row in sub_rows])
                if d not in (-1, 0, 1):
                    return TUVerdict(False, TUWitness(rows, cols, d), total)
    return TUVerdict(True, submatrices=total)


FAMILIES = ("path", "cycle", "complete", "complete_bipartite", "hypercube")


def generate_family(family: str, params: Sequence[int]) -> Hypergraph:
    def need(count: int, minimum: Sequence[int]) -> list[int]:
        if len(params) != count:
            raise HypergraphError(f"{family} takes {count} parameter(s), got {len(params)}")
        for p, lo in zip(params, minimum):
            if p < lo:
                raise HypergraphError(f"{family}: parameter {p} below minimum {lo}")
        return list(params)

    if family == "path":
        (n,) = need(1, [1])
        if n == 1:
            return Hypergraph(1, [[1]])
        return Hypergraph(n, [[i, i + 1] for i in range(1, n)])
    if family == "cycle":
        (n,) = need(1, [3])
        return Hypergraph(n, [[i, i % n + 1] for i in range(1, n + 1)])
    if family == "complete":
        (n,) = need(1, [2])
        return Hypergraph(n, [list(p) for p in combinations(range(1, n + 1), 2)])
    if family == "complete_bipartite":
        a, b = need(2, [1, 1])
        return Hypergraph(a + b, [[i, a + j] for i in range(1, a + 1) for j in range(1, b + 1)])
    if family == "hypercube":
        (d,) = need(1, [1])
        # vertex id = 1 + integer whose binary digits are the coordinates
        edges = [[v + 1, (v | 1 << bit) + 1] for v in range(2**d) for bit in range(d) if not v >> bit & 1]
        return Hypergraph(2**d, edges)
    raise HypergraphError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
