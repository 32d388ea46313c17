"""Undirected simple graphs on vertices 0..n-1, named families, and queries."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional, Tuple

from . import errors


@dataclass(frozen=True)
class Graph:
    n: int
    edges: Tuple[Tuple[int, int], ...]  # sorted pairs (u, v) with u < v, deduplicated

    def neighbors(self, v: int) -> tuple:
        out = []
        for a, b in self.edges:
            if a == v:
                out.append(b)
            elif b == v:
                out.append(a)
        return tuple(sorted(out))

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def is_connected(self) -> bool:
        if self.n == 1:
            return True
        seen = {0}
        queue = deque([0])
        while queue:
            u = queue.popleft()
            for w in self.neighbors(u):
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return len(seen) == self.n


def build(n: int, edges) -> Graph:
    if n < 1:
        raise errors.BadSize("n must be >= 1")
    norm = set()
    for u, v in edges:
        u, v = int(u), int(v)
        if u == v:
            raise errors.SelfLoop(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise errors.IndexOutOfRange(f"edge ({u},{v}) out of range for n={n}")
        norm.add((min(u, v), max(u, v)))
    return Graph(n=n, edges=tuple(sorted(norm)))


def family(name: str, n: Optional[int] = None) -> Graph:
    """Named graph families: star, line, cycle, triangle, complete."""
    if name == "triangle":
        if n not in (None, 3):
            raise errors.BadSize("triangle has exactly 3 vertices")
        return build(3, [(0, 1), (1, 2), (0, 2)])
    if n is None:
        raise errors.BadSize(f"family {name!r} needs a vertex count")
    n = int(n)
    if name == "star":
        if n < 2:
            raise errors.BadSize("star needs n >= 2")
        return build(n, [(0, j) for j in range(1, n)])
    if name == "line":
        if n < 2:
            raise errors.BadSize("line needs n >= 2")
        return build(n, [(j, j + 1) for j in range(n - 1)])
    if name == "cycle":
        if n < 3:
            raise errors.BadSize("cycle needs n >= 3")
        return build(n, [(j, j + 1) for j in range(n - 1)] + [(0, n - 1)])
    if name == "complete":
        if n < 1:
            raise errors.BadSize("complete needs n >= 1")
        return build(n, [(i, j) for i in range(n) for j in range(i + 1, n)])
    raise errors.UnknownName(f"unknown graph family {name!r}")


def bipartition(G: Graph) -> Optional[Tuple[frozenset, frozenset]]:
    """BFS 2-coloring. (V1, V2) with V1 holding the lowest vertex of each
    component, or None when an odd cycle exists."""
    color = {}
    for root in range(G.n):
        if root in color:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in G.neighbors(u):
                if w not in color:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return None
    v1 = frozenset(v for v, c in color.items() if c == 0)
    v2 = frozenset(v for v, c in color.items() if c == 1)
    return v1, v2
