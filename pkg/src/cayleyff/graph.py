"""The Cayley graph G_d(n, q, alpha) on the unit group of F_q[x]/(f).

Vertices are element indices 1..q^n-1 (index 0 is the zero element and
never a vertex). Edges run b1 -> b2 whenever b2/b1 = g(alpha) for a monic
primary g of degree d, so the out-neighbours of v are v * g(alpha).
Neighbours are produced through one permutation array per connection
element; no adjacency matrix is ever built.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import CollisionDetected, UnknownFormat, UsageError
from .field import ExtField, Xelt
from .primary import PrimaryRecord, enumerate_primary
from . import poly


def thm8_holds(q: int, n: int, d: int) -> bool:
    """Exact test of n < q^(d/2) + 1, the connectivity regime."""
    return n <= 1 or (n - 1) ** 2 < q**d


@dataclass(frozen=True)
class GraphSpec:
    ext: ExtField
    d: int

    def __post_init__(self):
        if not 1 <= self.d < self.ext.n:
            raise UsageError(f"need 1 <= d < n, got d={self.d}, n={self.ext.n}")

    @property
    def q(self) -> int:
        return self.ext.q

    @property
    def n(self) -> int:
        return self.ext.n

    @property
    def N(self) -> int:
        return self.ext.N

    @cached_property
    def connection(self) -> ConnectionSet:
        return connection_set(self)

    @cached_property
    def perms(self) -> np.ndarray:
        """Row i maps every vertex index v to index(v * e_i) for the i-th connection element."""
        return self.ext.mul_perms([v for v, _ in self.connection.elements])


@dataclass(frozen=True)
class ConnectionSet:
    ext: ExtField
    elements: tuple  # of (Xelt, PrimaryRecord)

    @property
    def size(self) -> int:
        return len(self.elements)

    @property
    def values(self) -> list[Xelt]:
        return [v for v, _ in self.elements]

    @property
    def indices(self) -> np.ndarray:
        return np.array([v.index for v, _ in self.elements], dtype=np.int64)

    @property
    def weights(self) -> np.ndarray:
        return np.array([g.lam for _, g in self.elements], dtype=np.int64)


@dataclass(frozen=True)
class SubgroupDescriptor:
    order: int
    index: int

    def __post_init__(self):
        assert self.order * self.index > 0


def connection_set(spec: GraphSpec) -> ConnectionSet:
    """E_d = {g(alpha) : g in P_d}, paired with the generating records."""
    ext = spec.ext
    records: list[PrimaryRecord] = enumerate_primary(ext.base, spec.d)
    elems = []
    seen = set()
    one = ext.one
    for g in records:
        v = ext.evaluate(g.poly)
        if not v or v == one or v.c in seen:
            raise CollisionDetected(f"g = {poly.format_list(g.poly)} collides in E_d")
        seen.add(v.c)
        elems.append((v, g))
    return ConnectionSet(ext, tuple(elems))


def subgroup_closure(cs: ConnectionSet) -> SubgroupDescriptor:
    """|<E_d>| by worklist closure under multiplication (vectorized rows)."""
    ext = cs.ext
    ext.check_size()
    gens = np.array([v.c for v in cs.values], dtype=np.int64)
    member = np.zeros(ext.size, dtype=bool)
    member[1] = True
    frontier = ext.coeff_array([1])
    k = len(gens)
    while len(frontier):
        prod = ext.vmul(np.repeat(frontier, k, axis=0), np.tile(gens, (len(frontier), 1)))
        idx = np.unique(ext.index_array(prod))
        idx = idx[~member[idx]]
        member[idx] = True
        frontier = ext.coeff_array(idx)
    order = int(member.sum())
    N = ext.N
    if N % order:
        raise AssertionError(f"closure size {order} does not divide N={N}")
    return SubgroupDescriptor(order, N // order)


def component_labels(spec: GraphSpec) -> tuple[int, np.ndarray]:
    """Label every vertex by BFS along out-edges; returns (count, labels).

    ``labels[0]`` is -2 (the zero element is not a vertex).
    """
    spec.ext.check_size()
    P = spec.perms
    label = np.full(spec.ext.size, -1, dtype=np.int64)
    label[0] = -2
    count = 0
    pos = 1
    while True:
        rest = np.flatnonzero(label[pos:] == -1)
        if not len(rest):
            break
        start = pos + int(rest[0])
        pos = start + 1
        label[start] = count
        frontier = np.array([start], dtype=np.int64)
        while len(frontier):
            nb = P[:, frontier].ravel()
            lab = label[nb]
            if np.any((lab >= 0) & (lab != count)):
                raise AssertionError("out-edge leaves a component: graph is not a union of cosets")
            nb = np.unique(nb[lab == -1])
            label[nb] = count
            frontier = nb
        count += 1
    return count, label


def components_bfs(spec: GraphSpec) -> int:
    return component_labels(spec)[0]


def distances_from_one(spec: GraphSpec) -> np.ndarray:
    """BFS distance of every vertex index from 1 (-1 when unreachable)."""
    spec.ext.check_size()
    P = spec.perms
    dist = np.full(spec.ext.size, -1, dtype=np.int64)
    dist[1] = 0
    frontier = np.array([1], dtype=np.int64)
    level = 0
    while len(frontier):
        level += 1
        nb = P[:, frontier].ravel()
        nb = np.unique(nb[dist[nb] == -1])
        dist[nb] = level
        frontier = nb
    return dist


def diameter_bfs(spec: GraphSpec) -> int | None:
    """Largest BFS distance from 1, or None when some vertex is unreachable.

    The graph is vertex-transitive, so the eccentricity of 1 is the diameter.
    """
    dist = distances_from_one(spec)[1:]
    if np.any(dist < 0):
        return None
    return int(dist.max())


FORMATS = ("edge-list", "dot", "adjacency-csv")


def export_graph(spec: GraphSpec, fmt: str) -> str:
    if fmt not in FORMATS:
        raise UnknownFormat(f"unknown format {fmt!r}; choose from {', '.join(FORMATS)}")
    ext = spec.ext
    ext.check_size()
    P = spec.perms
    w = spec.connection.weights
    verts = range(1, ext.size)
    lines: list[str] = []
    if fmt == "edge-list":
        for v in verts:
            for i in range(len(P)):
                lines.append(f"{v} {P[i, v]} {w[i]}")
    elif fmt == "adjacency-csv":
        lines.append("vertex," + ",".join(f"nbr{i}" for i in range(len(P))))
        for v in verts:
            lines.append(f"{v}," + ",".join(str(P[i, v]) for i in range(len(P))))
    else:
        lines.append("digraph G {")
        for v in verts:
            lab = poly.format_list(ext.from_index(v).c)
            lines.append(f'  {v} [label="{lab}"];')
        for v in verts:
            for i in range(len(P)):
                lines.append(f'  {v} -> {P[i, v]} [label="{w[i]}"];')
        lines.append("}")
    return "\n".join(lines) + "\n"
