"""Immutable simple graphs on at most 64 vertices as bitmask adjacency rows.

Vertices are labeled 0..n-1 and each row ``adj[v]`` is an int whose bit u
says whether uv is an edge.  All mutating operations return new graphs.
The module also carries the graph6 codec and the canonical code used to
compare graphs up to isomorphism.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from . import kernels
from .errors import CapacityError

MAX_VERTICES = 64

#: default vertex cap for canonical labeling (kernel packs adjacency
#: columns into int64, hence the hard limit of 32)
CANONICAL_CAP = 32

_G6_HEADER = ">>graph6<<"


def _bits(x: int) -> Iterator[int]:
    while x:
        b = x & -x
        yield b.bit_length() - 1
        x ^= b


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count {self.n} outside 1..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency row count does not match n")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"row {v} has bits outside 0..{self.n - 1}")
            if (row >> v) & 1:
                raise ValueError(f"self-loop at vertex {v}")
        for v, row in enumerate(self.adj):
            for u in _bits(row):
                if not (self.adj[u] >> v) & 1:
                    raise ValueError(f"edge {v}-{u} is not symmetric")

    # -- construction ---------------------------------------------------

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {u}-{v} outside 0..{n - 1}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if (rows[u] >> v) & 1:
                raise ValueError(f"duplicate edge {u}-{v}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return Graph(n, tuple(rows))

    # -- basic queries ---------------------------------------------------

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(row.bit_count() for row in self.adj)

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.adj[v]))

    def edges(self) -> Iterator[tuple[int, int]]:
        for v in range(self.n):
            rest = self.adj[v] >> (v + 1)
            for off in _bits(rest):
                yield (v, v + 1 + off)

    def pendent_vertices(self) -> list[int]:
        return [v for v in range(self.n) if self.adj[v].bit_count() == 1]

    # -- connectivity ----------------------------------------------------

    def is_connected(self) -> bool:
        seen = 1
        while True:
            nxt = seen
            for v in _bits(seen):
                nxt |= self.adj[v]
            if nxt == seen:
                return seen == (1 << self.n) - 1
            seen = nxt

    def component_count(self) -> int:
        left = (1 << self.n) - 1
        count = 0
        while left:
            seed = left & -left
            seen = seed
            while True:
                nxt = seen
                for v in _bits(seen):
                    nxt |= self.adj[v]
                if nxt == seen:
                    break
                seen = nxt
            left &= ~seen
            count += 1
        return count

    def cyclomatic_number(self) -> int:
        return self.edge_count - self.n + self.component_count()

    def is_bicyclic(self) -> bool:
        return self.edge_count == self.n + 1 and self.is_connected()

    # -- edits (pure) ------------------------------------------------------

    def add_edge(self, u: int, v: int) -> "Graph":
        self._check_pair(u, v)
        if self.has_edge(u, v):
            raise ValueError(f"edge {u}-{v} already present")
        rows = list(self.adj)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.n, tuple(rows))

    def remove_edge(self, u: int, v: int) -> "Graph":
        self._check_pair(u, v)
        if not self.has_edge(u, v):
            raise ValueError(f"edge {u}-{v} not present")
        rows = list(self.adj)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph(self.n, tuple(rows))

    def delete_vertex(self, v: int) -> "Graph":
        """Drop v; the highest label moves into the gap."""
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range")
        if self.n == 1:
            raise ValueError("cannot delete the only vertex")
        w = self.n - 1
        perm = list(range(self.n))
        perm[v] = w  # new label v <- old vertex w (no-op when v == w)
        perm.pop()
        return self.relabel(perm)

    def add_pendant(self, v: int) -> "Graph":
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range")
        if self.n >= MAX_VERTICES:
            raise CapacityError(f"vertex cap {MAX_VERTICES} reached")
        rows = [row for row in self.adj] + [1 << v]
        rows[v] |= 1 << self.n
        return Graph(self.n + 1, tuple(rows))

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """New graph whose vertex i is old vertex perm[i]; edge (i, j)
        exists iff (perm[i], perm[j]) was an edge.  A perm shorter than
        n yields the induced subgraph on its image."""
        m = len(perm)
        if any(not 0 <= p < self.n for p in perm):
            raise ValueError("relabel entries out of range")
        pos = {old: new for new, old in enumerate(perm)}
        if len(pos) != m:
            raise ValueError("relabel entries repeat")
        rows = []
        for i in range(m):
            acc = 0
            row = self.adj[perm[i]]
            for old in _bits(row):
                j = pos.get(old)
                if j is not None:
                    acc |= 1 << j
            rows.append(acc)
        return Graph(m, tuple(rows))

    def _check_pair(self, u: int, v: int) -> None:
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise ValueError(f"vertex pair {u},{v} out of range")
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")


# -- graph6 codec ---------------------------------------------------------


def to_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        head = chr(63 + n)
    else:
        head = "~" + "".join(
            chr(63 + ((n >> s) & 63)) for s in (12, 6, 0)
        )
    out = []
    acc = 0
    nbits = 0
    for j in range(1, n):
        for i in range(j):
            acc = (acc << 1) | ((g.adj[j] >> i) & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + acc))
                acc = 0
                nbits = 0
    if nbits:
        acc <<= 6 - nbits
        out.append(chr(63 + acc))
    return head + "".join(out)


def from_graph6(line: str) -> Graph:
    s = line.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
    if not s:
        raise ValueError("empty graph6 string")
    pos = 0
    if s[0] == "~":
        if len(s) < 4:
            raise ValueError("truncated graph6 size block")
        if s[1] == "~":
            raise ValueError("8-byte graph6 sizes not supported")
        n = 0
        for pos in range(1, 4):
            c = ord(s[pos]) - 63
            if not 0 <= c < 64:
                raise ValueError(f"bad graph6 character at offset {pos}")
            n = (n << 6) | c
        pos = 4
    else:
        n = ord(s[0]) - 63
        if not 1 <= n <= 62:
            raise ValueError("bad graph6 size character at offset 0")
        pos = 1
    if n > MAX_VERTICES:
        raise CapacityError(f"graph6 declares {n} vertices, cap is {MAX_VERTICES}")
    if n < 1:
        raise ValueError("graph6 declares an empty vertex set")
    need_bits = n * (n - 1) // 2
    need_chars = (need_bits + 5) // 6
    body = s[pos:]
    if len(body) != need_chars:
        raise ValueError(
            f"graph6 body for n={n} needs {need_chars} characters, got {len(body)}"
        )
    bits = 0
    for i, ch in enumerate(body):
        c = ord(ch) - 63
        if not 0 <= c < 64:
            raise ValueError(f"bad graph6 character at offset {pos + i}")
        bits = (bits << 6) | c
    pad = need_chars * 6 - need_bits
    if bits & ((1 << pad) - 1):
        raise ValueError("nonzero padding bits in graph6 body")
    bits >>= pad
    rows = [0] * n
    for idx in range(need_bits - 1, -1, -1):
        # walk the column-major order backwards, consuming bits LSB-first
        b = bits & 1
        bits >>= 1
        if b:
            i, j = _pair_at(idx)
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    return Graph(n, tuple(rows))


def _pair_at(idx: int) -> tuple[int, int]:
    # inverse of the column-major enumeration (0,1),(0,2),(1,2),(0,3),...
    j = 1
    while j * (j + 1) // 2 <= idx:
        j += 1
    i = idx - j * (j - 1) // 2
    return i, j


# -- canonical codes --------------------------------------------------------


def canonical_graph(g: Graph, cap: int | None = None) -> Graph:
    """Isomorphism-class representative: relabeling that maximizes the
    graph6 bit string (see kernels.canonical_perm)."""
    limit = CANONICAL_CAP if cap is None else cap
    if g.n > limit:
        raise CapacityError(f"canonical labeling capped at {limit} vertices")
    if g.n > kernels.KERNEL_VERTEX_CAP:
        raise CapacityError(
            f"canonical kernel supports at most {kernels.KERNEL_VERTEX_CAP} vertices"
        )
    rows = np.array(g.adj, dtype=np.int64)
    perm = kernels.canonical_perm(rows)
    return g.relabel([int(p) for p in perm])


def canonical_code(g: Graph, cap: int | None = None) -> bytes:
    return to_graph6(canonical_graph(g, cap)).encode("ascii")
