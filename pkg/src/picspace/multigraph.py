"""Immutable labeled multigraphs, vertex partitions and the graph file format.

Vertex and edge ids are opaque strings ordered lexicographically. Loops and
parallel edges are allowed everywhere; contraction keeps every loop and
parallel edge it creates.
"""

from __future__ import annotations

from dataclasses import dataclass
from types import MappingProxyType
from typing import Iterable, Iterator

from .errors import GraphError, GraphParseError, GuardExceeded

__all__ = [
    "Multigraph",
    "Partition",
    "partitions",
    "unconstrained_count",
    "parse_graph",
    "read_graph",
    "format_graph",
    "MAX_PARTITION_VERTICES",
]

MAX_PARTITION_VERTICES = 14


class _UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if rb < ra:
            ra, rb = rb, ra
        self.parent[rb] = ra
        return True


class Multigraph:
    """A finite multigraph ``(V, E)`` with string ids.

    ``edges`` maps each edge id to its endpoint pair ``(u, w)`` with
    ``u <= w``; a loop has ``u == w``.
    """

    __slots__ = ("vertices", "edges", "edge_ids", "_key")

    def __init__(self, vertices: Iterable, edges=()):
        verts = [str(v) for v in vertices]
        if not verts:
            raise GraphError("a graph needs at least one vertex")
        if len(set(verts)) != len(verts):
            raise GraphError("duplicate vertex id")
        vset = set(verts)
        items = edges.items() if hasattr(edges, "items") else ((e[0], e[1:]) for e in edges)
        table = {}
        for eid, (u, w) in items:
            eid, u, w = str(eid), str(u), str(w)
            if eid in table:
                raise GraphError(f"duplicate edge id {eid!r}")
            for x in (u, w):
                if x not in vset:
                    raise GraphError(f"edge {eid!r} uses undeclared vertex {x!r}")
            table[eid] = (u, w) if u <= w else (w, u)
        self.vertices = tuple(sorted(verts))
        self.edges = MappingProxyType(table)
        self.edge_ids = tuple(sorted(table))
        self._key = None

    # -- counts -----------------------------------------------------------

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def num_components(self) -> int:
        return len(self._blocks(self.edge_ids))

    def __repr__(self):
        es = ", ".join(f"{e}:{u}-{w}" for e, (u, w) in sorted(self.edges.items()))
        return f"Multigraph(V={list(self.vertices)}, E=[{es}])"

    def __eq__(self, other):
        if not isinstance(other, Multigraph):
            return NotImplemented
        return self.vertices == other.vertices and dict(self.edges) == dict(other.edges)

    def __hash__(self):
        return hash((self.vertices, tuple(sorted(self.edges.items()))))

    # -- local structure --------------------------------------------------

    def _check_edge(self, e):
        if e not in self.edges:
            raise GraphError(f"unknown edge id {e!r}")

    def endpoints(self, e: str) -> tuple[str, str]:
        self._check_edge(e)
        return self.edges[e]

    def incident(self, v: str) -> tuple[str, ...]:
        """``E(v)``: ids of edges having ``v`` as an endpoint, sorted."""
        if v not in self.vertices:
            raise GraphError(f"unknown vertex id {v!r}")
        return tuple(e for e in self.edge_ids if v in self.edges[e])

    def loops(self) -> tuple[str, ...]:
        return tuple(e for e in self.edge_ids if self.edges[e][0] == self.edges[e][1])

    def is_loop(self, e: str) -> bool:
        u, w = self.endpoints(e)
        return u == w

    def is_isthmus(self, e: str) -> bool:
        u, w = self.endpoints(e)
        if u == w:
            return False
        uf = _UnionFind(self.vertices)
        for f in self.edge_ids:
            if f != e:
                uf.union(*self.edges[f])
        return uf.find(u) != uf.find(w)

    def isthmuses(self) -> tuple[str, ...]:
        return tuple(e for e in self.edge_ids if self.is_isthmus(e))

    # -- deletion / contraction -------------------------------------------

    def delete(self, e: str) -> Multigraph:
        self._check_edge(e)
        return Multigraph(self.vertices, {f: uw for f, uw in self.edges.items() if f != e})

    def contract(self, e: str) -> Multigraph:
        """Identify the endpoints of ``e``; the merged vertex keeps the smaller id."""
        self._check_edge(e)
        keep, gone = self.edges[e]
        if keep == gone:
            raise GraphError(f"cannot contract loop {e!r}")
        verts = [v for v in self.vertices if v != gone]
        edges = {}
        for f, (u, w) in self.edges.items():
            if f == e:
                continue
            edges[f] = (keep if u == gone else u, keep if w == gone else w)
        return Multigraph(verts, edges)

    # -- rank and components -----------------------------------------------

    def _blocks(self, edge_subset) -> list[list[str]]:
        uf = _UnionFind(self.vertices)
        for f in edge_subset:
            uf.union(*self.edges[f])
        groups: dict[str, list[str]] = {}
        for v in self.vertices:
            groups.setdefault(uf.find(v), []).append(v)
        return sorted(groups.values())

    def rank(self, F: Iterable[str] = None) -> int:
        """Graphic matroid rank ``r(F) = v - c`` of the spanning subgraph ``(V, F)``.

        Isolated vertices contribute equally to ``v`` and ``c``, so this agrees
        with the edge-induced definition and gives ``r(E) = v(G) - c(G)``.
        """
        F = self.edge_ids if F is None else list(F)
        for f in F:
            self._check_edge(f)
        uf = _UnionFind(self.vertices)
        return sum(uf.union(*self.edges[f]) for f in F)

    def components(self) -> list[Multigraph]:
        """Connected components, ordered by their smallest vertex id."""
        out = []
        for block in self._blocks(self.edge_ids):
            bs = set(block)
            out.append(Multigraph(block, {f: uw for f, uw in self.edges.items() if uw[0] in bs}))
        return out

    def canonical_key(self) -> bytes:
        """Labeled-graph memo key: sorted vertex ids plus sorted endpoint multiset.

        Edge ids are not part of the key, since none of the invariants
        computed here depend on them.
        """
        if self._key is None:
            pairs = sorted(self.edges.values())
            text = "\x1e".join(self.vertices) + "\x1d" + "\x1e".join(u + "\x1f" + w for u, w in pairs)
            self._key = text.encode("utf-8")
        return self._key

    # -- constructors -----------------------------------------------------

    @classmethod
    def complete(cls, n: int) -> Multigraph:
        vs = [str(i) for i in range(1, n + 1)]
        return cls(vs, {f"{i}{j}" if n < 10 else f"{i}-{j}": (str(i), str(j))
                        for i in range(1, n + 1) for j in range(i + 1, n + 1)})

    @classmethod
    def empty(cls, n: int) -> Multigraph:
        return cls([str(i) for i in range(1, n + 1)])

    @classmethod
    def bouquet(cls, loops: int) -> Multigraph:
        """One vertex carrying ``loops`` loops (``L_1`` for one loop)."""
        return cls(["1"], {f"l{i}": ("1", "1") for i in range(1, loops + 1)})

    @classmethod
    def banana(cls, k: int) -> Multigraph:
        """Two vertices joined by ``k`` parallel edges (digon for 2, acetylene for 3)."""
        return cls(["1", "2"], {f"e{i}": ("1", "2") for i in range(1, k + 1)})

    @classmethod
    def path(cls, n: int) -> Multigraph:
        vs = [str(i) for i in range(1, n + 1)]
        return cls(vs, {f"{i}{i + 1}": (str(i), str(i + 1)) for i in range(1, n)})

    def disjoint_union(self, other: Multigraph, tags=("a", "b")) -> Multigraph:
        """Union with ids prefixed by ``tags`` to keep them apart."""
        s, t = tags
        verts = [s + v for v in self.vertices] + [t + v for v in other.vertices]
        edges = {s + e: (s + u, s + w) for e, (u, w) in self.edges.items()}
        edges.update({t + e: (t + u, t + w) for e, (u, w) in other.edges.items()})
        return Multigraph(verts, edges)

    def with_edges(self, extra) -> Multigraph:
        """Copy with additional edges ``{id: (u, w)}``."""
        edges = dict(self.edges)
        edges.update(extra)
        return Multigraph(self.vertices, edges)


@dataclass(frozen=True)
class Partition:
    """Set partition of a vertex set; blocks are stored sorted."""

    blocks: tuple[tuple[str, ...], ...]

    def __post_init__(self):
        blocks = tuple(sorted(tuple(sorted(str(v) for v in b)) for b in self.blocks))
        seen = set()
        for b in blocks:
            if not b:
                raise ValueError("empty block")
            if seen.intersection(b) or len(set(b)) != len(b):
                raise ValueError("blocks overlap")
            seen.update(b)
        object.__setattr__(self, "blocks", blocks)

    def __len__(self):
        return len(self.blocks)

    def ground_set(self) -> frozenset:
        return frozenset(v for b in self.blocks for v in b)

    def block_index(self) -> dict[str, int]:
        return {v: i for i, b in enumerate(self.blocks) for v in b}

    def __str__(self):
        return "|".join(",".join(b) for b in self.blocks)


def _growth_strings(n: int) -> Iterator[list[int]]:
    # restricted growth strings a[0]=0, a[i] <= 1 + max(a[:i])
    if n == 0:
        yield []
        return
    a = [0] * n
    m = [0] * n  # m[i] = max(a[:i+1])
    while True:
        yield a
        i = n - 1
        while i > 0 and a[i] > m[i - 1]:
            i -= 1
        if i == 0:
            return
        a[i] += 1
        m[i] = max(m[i - 1], a[i])
        for j in range(i + 1, n):
            a[j] = 0
            m[j] = m[i]


def partitions(vertices: Iterable[str], force: bool = False) -> Iterator[Partition]:
    """Every set partition of ``vertices`` (Bell-number many)."""
    vs = sorted(str(v) for v in vertices)
    if len(vs) > MAX_PARTITION_VERTICES and not force:
        raise GuardExceeded(
            f"{len(vs)} vertices exceeds the partition guard of {MAX_PARTITION_VERTICES}")
    for rgs in _growth_strings(len(vs)):
        blocks: list[list[str]] = [[] for _ in range(max(rgs, default=-1) + 1)]
        for v, b in zip(vs, rgs):
            blocks[b].append(v)
        yield Partition(tuple(tuple(b) for b in blocks))


def unconstrained_count(g: Multigraph, A: Partition) -> int:
    """Number of edges (loops included) with both endpoints in one block."""
    if A.ground_set() != frozenset(g.vertices):
        raise ValueError("partition does not cover the vertex set")
    where = A.block_index()
    return sum(where[u] == where[w] for u, w in g.edges.values())


# -- file format -------------------------------------------------------------


def parse_graph(text: str) -> Multigraph:
    """Parse ``v <id>`` / ``e <id> <u> <w>`` lines; ``#`` starts a comment line."""
    verts: list[str] = []
    declared: set[str] = set()
    edges: dict[str, tuple[str, str]] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        kind = fields[0]
        if kind == "v" and len(fields) == 2:
            v = fields[1]
            if v in declared:
                raise GraphParseError(f"line {lineno}: vertex {v!r} declared twice")
            declared.add(v)
            verts.append(v)
        elif kind == "e" and len(fields) == 4:
            e, u, w = fields[1:]
            if e in edges:
                raise GraphParseError(f"line {lineno}: edge {e!r} declared twice")
            for x in (u, w):
                if x not in declared:
                    raise GraphParseError(f"line {lineno}: vertex {x!r} used before declaration")
            edges[e] = (u, w)
        else:
            raise GraphParseError(f"line {lineno}: cannot parse {raw!r}")
    if not verts:
        raise GraphParseError("graph file declares no vertices")
    return Multigraph(verts, edges)


def read_graph(path) -> Multigraph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


def format_graph(g: Multigraph) -> str:
    lines = [f"v {v}" for v in g.vertices]
    lines += [f"e {e} {u} {w}" for e, (u, w) in sorted(g.edges.items())]
    return "\n".join(lines) + "\n"
