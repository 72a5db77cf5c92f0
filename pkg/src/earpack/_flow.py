"""Unit-capacity max-flow (Dinic) plus the undirected helpers used for edge
cuts, Menger-style disjoint path counts and flow-path extraction."""

from __future__ import annotations

from .graphs import Edge, Graph, edge_key


class Dinic:
    """Max flow on a directed network with integer capacities.

    Arc insertion order is fixed by the caller, and the algorithm scans arcs
    in that order, so results are deterministic.
    """

    def __init__(self, n: int):
        self.n = n
        self.head: list[list[int]] = [[] for _ in range(n)]
        self.to: list[int] = []
        self.cap: list[int] = []

    def add_arc(self, u: int, v: int, cap: int) -> int:
        """Add arc u->v with the given capacity; returns its index."""
        idx = len(self.to)
        self.head[u].append(idx)
        self.to.append(v)
        self.cap.append(cap)
        self.head[v].append(idx + 1)
        self.to.append(u)
        self.cap.append(0)
        return idx

    def add_undirected(self, u: int, v: int) -> int:
        """Add a unit-capacity undirected edge (capacity 1 each way)."""
        idx = len(self.to)
        self.head[u].append(idx)
        self.to.append(v)
        self.cap.append(1)
        self.head[v].append(idx + 1)
        self.to.append(u)
        self.cap.append(1)
        return idx

    def max_flow(self, s: int, t: int, cutoff: float | None = None) -> int:
        """Total flow from s to t; stops early once ``cutoff`` is reached."""
        flow = 0
        while cutoff is None or flow < cutoff:
            level = self._levels(s, t)
            if level[t] < 0:
                break
            it = [0] * self.n
            while True:
                pushed = self._dfs(s, t, float("inf"), level, it)
                if not pushed:
                    break
                flow += pushed
                if cutoff is not None and flow >= cutoff:
                    break
        return flow

    def _levels(self, s: int, t: int) -> list[int]:
        level = [-1] * self.n
        level[s] = 0
        queue = [s]
        head = 0
        while head < len(queue):
            v = queue[head]
            head += 1
            for idx in self.head[v]:
                w = self.to[idx]
                if self.cap[idx] > 0 and level[w] < 0:
                    level[w] = level[v] + 1
                    queue.append(w)
        return level

    def _dfs(self, v: int, t: int, limit: float, level: list[int], it: list[int]) -> int:
        if v == t:
            return int(limit)
        while it[v] < len(self.head[v]):
            idx = self.head[v][it[v]]
            w = self.to[idx]
            if self.cap[idx] > 0 and level[w] == level[v] + 1:
                pushed = self._dfs(w, t, min(limit, self.cap[idx]), level, it)
                if pushed:
                    self.cap[idx] -= pushed
                    self.cap[idx ^ 1] += pushed
                    return pushed
            it[v] += 1
        return 0

    def residual_side(self, s: int) -> frozenset[int]:
        """Vertices reachable from s in the residual network."""
        seen = {s}
        queue = [s]
        head = 0
        while head < len(queue):
            v = queue[head]
            head += 1
            for idx in self.head[v]:
                w = self.to[idx]
                if self.cap[idx] > 0 and w not in seen:
                    seen.add(w)
                    queue.append(w)
        return frozenset(seen)


def min_edge_cut(
    g: Graph,
    sources: frozenset[int] | set[int],
    sinks: frozenset[int] | set[int],
    cutoff: float | None = None,
) -> tuple[int, frozenset[Edge], frozenset[int]]:
    """Minimum number of edges separating ``sources`` from ``sinks``.

    Returns (size, cut edge set, source-side vertex set).  With ``cutoff``
    the flow stops once it reaches the cutoff; the returned size is then a
    lower bound and the cut fields are not meaningful.
    """
    if not sources or not sinks:
        raise ValueError("terminal sets must be nonempty")
    if set(sources) & set(sinks):
        raise ValueError("terminal sets must be disjoint")
    net = Dinic(g.n + 2)
    s, t = g.n, g.n + 1
    big = g.edge_count + 1
    arcs: list[tuple[int, Edge]] = []
    for u, v in g.edges():
        arcs.append((net.add_undirected(u, v), (u, v)))
    for x in sorted(sources):
        net.add_arc(s, x, big)
    for y in sorted(sinks):
        net.add_arc(y, t, big)
    value = net.max_flow(s, t, cutoff=cutoff)
    if cutoff is not None and value >= cutoff:
        return value, frozenset(), frozenset()
    side = net.residual_side(s) - {s}
    cut = frozenset(
        edge_key(u, v) for u, v in g.edges() if (u in side) != (v in side)
    )
    return value, cut, frozenset(v for v in side if v < g.n)


def edge_disjoint_paths(
    g: Graph,
    sources: frozenset[int] | set[int],
    sinks: frozenset[int] | set[int],
) -> list[tuple[int, ...]]:
    """A maximum family of edge-disjoint paths from ``sources`` to ``sinks``.

    Paths are simple (flow cycles are erased during extraction) and pairwise
    edge-disjoint; endpoints may repeat across paths.
    """
    if not sources or not sinks:
        return []
    if set(sources) & set(sinks):
        raise ValueError("terminal sets must be disjoint")
    net = Dinic(g.n + 2)
    s, t = g.n, g.n + 1
    big = g.edge_count + 1
    edge_arcs: list[tuple[int, int, int]] = []
    for u, v in g.edges():
        edge_arcs.append((net.add_arc(u, v, 1), u, v))
        edge_arcs.append((net.add_arc(v, u, 1), v, u))
    for x in sorted(sources):
        net.add_arc(s, x, big)
    for y in sorted(sinks):
        net.add_arc(y, t, big)
    net.max_flow(s, t)
    # net usage per undirected edge (opposite unit flows cancel)
    used: dict[Edge, int] = {}
    for idx, u, v in edge_arcs:
        if net.cap[idx] == 0:  # saturated u->v
            e = edge_key(u, v)
            direction = 1 if (u, v) == e else -1
            used[e] = used.get(e, 0) + direction
    out: dict[int, list[int]] = {v: [] for v in range(g.n)}
    for e, d in sorted(used.items()):
        if d > 0:
            out[e[0]].append(e[1])
        elif d < 0:
            out[e[1]].append(e[0])
    for v in out:
        out[v].sort(reverse=True)  # pop() takes the lowest
    sink_set = set(sinks)
    paths: list[tuple[int, ...]] = []
    for start in sorted(sources):
        while out[start]:
            walk = [start]
            position = {start: 0}
            while walk[-1] not in sink_set or len(walk) == 1:
                here = walk[-1]
                if not out[here]:
                    break
                nxt = out[here].pop()
                if nxt in position:
                    # erase a flow rotation
                    del walk[position[nxt] + 1:]
                    for w in list(position):
                        if position[w] > position[nxt]:
                            del position[w]
                    continue
                walk.append(nxt)
                position[nxt] = len(walk) - 1
            if len(walk) > 1 and walk[-1] in sink_set:
                paths.append(tuple(walk))
            else:
                break
    return paths


def max_vertex_disjoint_paths(
    g: Graph,
    sources: frozenset[int] | set[int],
    sinks: frozenset[int] | set[int],
) -> int:
    """Maximum number of fully vertex-disjoint paths from sources to sinks."""
    if not sources or not sinks:
        return 0
    if set(sources) & set(sinks):
        raise ValueError("terminal sets must be disjoint")
    # split v into in=2v, out=2v+1 with unit capacity through each vertex
    net = Dinic(2 * g.n + 2)
    s, t = 2 * g.n, 2 * g.n + 1
    for v in range(g.n):
        net.add_arc(2 * v, 2 * v + 1, 1)
    for u, v in g.edges():
        net.add_arc(2 * u + 1, 2 * v, 1)
        net.add_arc(2 * v + 1, 2 * u, 1)
    for x in sorted(sources):
        net.add_arc(s, 2 * x, 1)
    for y in sorted(sinks):
        net.add_arc(2 * y + 1, t, 1)
    return net.max_flow(s, t)
