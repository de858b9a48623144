"""Simple undirected graphs on dense labels 0..n-1.

This module holds the universal input object of the toolkit plus the
structural transforms (coning, 2-sums, 2-separations) and the connectivity
primitives (local connectivity, vertex connectivity, minimum mixed cuts)
that the rigidity layers are built on. Everything here is exact, pure and
deterministic.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations


class GraphError(ValueError):
    """Invalid graph data or an operation applied outside its domain."""


class ParseError(GraphError):
    """Malformed edge-list text; carries the 1-based offending line."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def _canon_edges(n: int, edges) -> tuple[tuple[int, int], ...]:
    canon = []
    for e in edges:
        u, v = e
        if not (isinstance(u, int) and isinstance(v, int)):
            raise GraphError(f"edge endpoints must be ints, got {e!r}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
        canon.append((u, v) if u < v else (v, u))
    canon.sort()
    for a, b in zip(canon, canon[1:]):
        if a == b:
            raise GraphError(f"duplicate edge {a}")
    return tuple(canon)


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph; edges are kept sorted with u < v."""

    n: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise GraphError("vertex count must be nonnegative")
        object.__setattr__(self, "edges", _canon_edges(self.n, self.edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_set(self) -> frozenset:
        return frozenset(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def min_degree(self) -> int:
        if self.n == 0:
            raise GraphError("empty graph has no degrees")
        return min(len(a) for a in self.adjacency)

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edge_set

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def add_edge(self, u: int, v: int) -> "Graph":
        if self.has_edge(u, v):
            raise GraphError(f"edge ({u}, {v}) already present")
        return Graph(self.n, self.edges + (((u, v) if u < v else (v, u)),))

    def delete_edge(self, u, v=None) -> "Graph":
        if v is None:
            u, v = u
        e = (u, v) if u < v else (v, u)
        if e not in self.edge_set:
            raise GraphError(f"edge {e} not present")
        return Graph(self.n, tuple(f for f in self.edges if f != e))

    def delete_vertex(self, v: int) -> "Graph":
        """Remove v; vertices above v shift down by one."""
        if not (0 <= v < self.n):
            raise GraphError(f"vertex {v} out of range")
        relabel = lambda x: x if x < v else x - 1
        return Graph(self.n - 1,
                     tuple((relabel(a), relabel(b)) for a, b in self.edges
                           if a != v and b != v))

    def induced(self, vertices) -> "Graph":
        """Induced subgraph, relabeled by the sorted order of ``vertices``."""
        verts = sorted(set(vertices))
        if verts and not (0 <= verts[0] and verts[-1] < self.n):
            raise GraphError("induced vertex out of range")
        index = {v: i for i, v in enumerate(verts)}
        keep = set(verts)
        return Graph(len(verts),
                     tuple((index[a], index[b]) for a, b in self.edges
                           if a in keep and b in keep))

    def edge_subgraph(self, edges) -> tuple["Graph", tuple[int, ...]]:
        """Subgraph spanned by an edge subset.

        Returns the relabeled graph and the original labels of its vertices
        (sorted; position i of the tuple is the original label of vertex i).
        """
        edges = [((u, v) if u < v else (v, u)) for u, v in edges]
        for e in edges:
            if e not in self.edge_set:
                raise GraphError(f"edge {e} not in graph")
        verts = sorted({x for e in edges for x in e})
        index = {v: i for i, v in enumerate(verts)}
        return Graph(len(verts), tuple((index[a], index[b]) for a, b in edges)), tuple(verts)

    def disjoint_union(self, other: "Graph") -> "Graph":
        shifted = tuple((u + self.n, v + self.n) for u, v in other.edges)
        return Graph(self.n + other.n, self.edges + shifted)

    def connected_components(self) -> list[list[int]]:
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            comp = []
            queue = deque([s])
            seen[s] = True
            while queue:
                u = queue.popleft()
                comp.append(u)
                for w in self.adjacency[u]:
                    if not seen[w]:
                        seen[w] = True
                        queue.append(w)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.connected_components()) == 1

    def serialize(self) -> str:
        lines = [f"{self.n} {self.m}"]
        lines.extend(f"{u} {v}" for u, v in self.edges)
        return "\n".join(lines) + "\n"

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def parse_edge_list(text: str) -> Graph:
    """Parse the canonical edge-list format: a header "n m", then m lines "u v".

    Raises ParseError with the offending 1-based line number on any
    malformed line, out-of-range vertex, duplicate edge or self-loop.
    """
    lines = text.split("\n")
    if not lines or not lines[0].strip():
        raise ParseError(1, "missing 'n m' header")
    head = lines[0].split()
    if len(head) != 2:
        raise ParseError(1, f"header must be 'n m', got {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise ParseError(1, f"header must hold two integers, got {lines[0]!r}") from None
    if n < 0 or m < 0:
        raise ParseError(1, "negative counts in header")

    edges = []
    seen = set()
    for k in range(m):
        lineno = k + 2
        if lineno - 1 >= len(lines) or not lines[lineno - 1].strip():
            raise ParseError(lineno, f"expected {m} edge lines, found {k}")
        parts = lines[lineno - 1].split()
        if len(parts) != 2:
            raise ParseError(lineno, f"edge line must be 'u v', got {lines[lineno - 1]!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(lineno, f"edge line must hold two integers, got {lines[lineno - 1]!r}") from None
        if u == v:
            raise ParseError(lineno, f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(lineno, f"vertex out of range in edge ({u}, {v})")
        e = (u, v) if u < v else (v, u)
        if e in seen:
            raise ParseError(lineno, f"duplicate edge {e}")
        seen.add(e)
        edges.append(e)
    for extra in range(m + 2, len(lines) + 1):
        if lines[extra - 1].strip():
            raise ParseError(extra, "trailing content after edge list")
    return Graph(n, tuple(edges))


# ---------------------------------------------------------------------------
# generators

def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete(n) needs n >= 1")
    return Graph(n, tuple(combinations(range(n), 2)))


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise GraphError("complete_bipartite(a, b) needs a, b >= 1")
    return Graph(a + b, tuple((i, a + j) for i in range(a) for j in range(b)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle(n) needs n >= 3")
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError("path(n) needs n >= 1")
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def cone(g: Graph) -> Graph:
    """Add a universal vertex with the new label n."""
    return Graph(g.n + 1, g.edges + tuple((i, g.n) for i in range(g.n)))


def wheel(rim: int) -> Graph:
    """Wheel with ``rim`` rim vertices plus a hub (label rim)."""
    return cone(cycle(rim))


def icosahedron() -> Graph:
    """Skeleton of the icosahedron: 12 vertices, 30 edges, 5-regular.

    Fixed labeling: 0 is an apex on ring 1..5, 11 is the opposite apex on
    ring 6..10, ring vertex 1+i meets 6+i and 6+((i+1) mod 5).
    """
    edges = [(0, i) for i in range(1, 6)]
    edges += [(1 + i, 1 + (i + 1) % 5) for i in range(5)]
    edges += [(6 + i, 6 + (i + 1) % 5) for i in range(5)]
    edges += [(11, i) for i in range(6, 11)]
    edges += [(1 + i, 6 + i) for i in range(5)]
    edges += [(1 + i, 6 + (i + 1) % 5) for i in range(5)]
    return Graph(12, tuple(edges))


def icosahedron_braced() -> Graph:
    """Icosahedron skeleton plus one bracing edge between vertices at
    graph distance 2; the lexicographically least such pair is (0, 6)."""
    return icosahedron().add_edge(0, 6)


def k4e_chain(blocks: int) -> Graph:
    """``blocks`` copies of K4 minus an edge glued along the missing pair.

    The two hub vertices 0 and 1 stay nonadjacent; block i contributes the
    private pair (2 + 2i, 3 + 2i). Yields 2*blocks + 2 vertices and
    5*blocks edges.
    """
    if blocks < 1:
        raise GraphError("k4e_chain(blocks) needs blocks >= 1")
    edges = []
    for i in range(blocks):
        a, b = 2 + 2 * i, 3 + 2 * i
        edges += [(0, a), (0, b), (1, a), (1, b), (a, b)]
    return Graph(2 * blocks + 2, tuple(edges))


GENERATORS = {
    "complete": (complete, 1),
    "complete_bipartite": (complete_bipartite, 2),
    "cycle": (cycle, 1),
    "wheel": (wheel, 1),
    "path": (path, 1),
    "icosahedron_braced": (icosahedron_braced, 0),
    "k4e_chain": (k4e_chain, 1),
}


def generate(name: str, *params: int) -> Graph:
    if name not in GENERATORS:
        raise GraphError(f"unknown generator {name!r}; known: {sorted(GENERATORS)}")
    fn, arity = GENERATORS[name]
    if len(params) != arity:
        raise GraphError(f"generator {name!r} takes {arity} parameter(s), got {len(params)}")
    return fn(*params)


# ---------------------------------------------------------------------------
# 2-sums and 2-separations

@dataclass(frozen=True)
class TwoSumSpec:
    """Designated edges for a 2-sum; u1 is identified with u2, v1 with v2."""

    edge1: tuple[int, int]
    edge2: tuple[int, int]


def two_sum(g1: Graph, g2: Graph, spec: TwoSumSpec | None = None) -> Graph:
    """Glue g1 and g2 along designated edges, dropping both copies.

    The identified vertices keep g1's labels; g2's remaining vertices are
    appended in g2 order. Defaults to the first canonical edge of each
    operand when no spec is given.
    """
    if spec is None:
        if not g1.edges or not g2.edges:
            raise GraphError("two_sum operands need at least one edge")
        spec = TwoSumSpec(g1.edges[0], g2.edges[0])
    u1, v1 = spec.edge1
    u2, v2 = spec.edge2
    if not g1.has_edge(u1, v1):
        raise GraphError(f"designated edge {spec.edge1} not in first operand")
    if not g2.has_edge(u2, v2):
        raise GraphError(f"designated edge {spec.edge2} not in second operand")

    relabel = {u2: u1, v2: v1}
    nxt = g1.n
    for w in range(g2.n):
        if w not in relabel:
            relabel[w] = nxt
            nxt += 1
    e1 = ((u1, v1) if u1 < v1 else (v1, u1))
    e2 = ((u2, v2) if u2 < v2 else (v2, u2))
    edges = [e for e in g1.edges if e != e1]
    edges += [(relabel[a], relabel[b]) for a, b in g2.edges if (a, b) != e2]
    return Graph(g1.n + g2.n - 2, tuple(edges))


def two_separation(g: Graph, u: int, v: int, add_edge: bool) -> tuple[Graph, Graph]:
    """Split g along the separating pair {u, v}.

    When uv is an edge the operation is a cleaving: uv is removed first.
    The first piece is the component of G - {u, v} holding the smallest
    vertex; remaining components merge into the second piece. Both pieces
    are relabeled by sorted vertex order, and with ``add_edge`` each piece
    gains the designated edge uv, which makes the operation invert two_sum.
    """
    if u == v or not (0 <= u < g.n and 0 <= v < g.n):
        raise GraphError("u, v must be distinct vertices")
    h = g.delete_edge(u, v) if g.has_edge(u, v) else g
    rest = [w for w in range(g.n) if w not in (u, v)]
    comps = h.induced(rest).connected_components()
    if len(comps) < 2:
        raise GraphError(f"{{{u}, {v}}} is not a separating pair")
    back = {i: w for i, w in enumerate(rest)}
    comps = [sorted(back[i] for i in comp) for comp in comps]
    comps.sort(key=lambda c: c[0])
    sides = [set(comps[0]), set(x for c in comps[1:] for x in c)]

    pieces = []
    for side in sides:
        verts = sorted(side | {u, v})
        index = {w: i for i, w in enumerate(verts)}
        edges = [(index[a], index[b]) for a, b in h.edges
                 if a in index and b in index]
        if add_edge:
            edges.append((index[u], index[v]) if index[u] < index[v]
                         else (index[v], index[u]))
        pieces.append(Graph(len(verts), tuple(edges)))
    return pieces[0], pieces[1]


# ---------------------------------------------------------------------------
# max-flow core and connectivity

class _FlowNet:
    """Tiny deterministic max-flow network (BFS augmentation, integer caps)."""

    def __init__(self, nodes: int):
        self.nodes = nodes
        self.to: list[int] = []
        self.cap: list[int] = []
        self.head: list[list[int]] = [[] for _ in range(nodes)]

    def add_arc(self, u: int, v: int, cap: int) -> None:
        self.head[u].append(len(self.to))
        self.to.append(v)
        self.cap.append(cap)
        self.head[v].append(len(self.to))
        self.to.append(u)
        self.cap.append(0)

    def max_flow(self, s: int, t: int, limit: int | None = None) -> int:
        flow = 0
        while limit is None or flow < limit:
            parent_arc = [-1] * self.nodes
            parent_arc[s] = -2
            queue = deque([s])
            while queue and parent_arc[t] == -1:
                u = queue.popleft()
                for a in self.head[u]:
                    w = self.to[a]
                    if parent_arc[w] == -1 and self.cap[a] > 0:
                        parent_arc[w] = a
                        queue.append(w)
            if parent_arc[t] == -1:
                break
            bottleneck = None
            w = t
            while w != s:
                a = parent_arc[w]
                bottleneck = self.cap[a] if bottleneck is None else min(bottleneck, self.cap[a])
                w = self.to[a ^ 1]
            w = t
            while w != s:
                a = parent_arc[w]
                self.cap[a] -= bottleneck
                self.cap[a ^ 1] += bottleneck
                w = self.to[a ^ 1]
            flow += bottleneck
        return flow

    def reachable(self, s: int) -> set[int]:
        seen = {s}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for a in self.head[u]:
                w = self.to[a]
                if w not in seen and self.cap[a] > 0:
                    seen.add(w)
                    queue.append(w)
        return seen


def _split_network(g: Graph, s: int, t: int, vertex_cap: int):
    """Vertex-split transformation: w_in = 2w, w_out = 2w + 1."""
    net = _FlowNet(2 * g.n)
    big = 2 * g.n + 2 * g.m + 1
    for w in range(g.n):
        net.add_arc(2 * w, 2 * w + 1, big if w in (s, t) else vertex_cap)
    for a, b in g.edges:
        net.add_arc(2 * a + 1, 2 * b, 1)
        net.add_arc(2 * b + 1, 2 * a, 1)
    return net


def local_connectivity(g: Graph, u: int, v: int, limit: int | None = None) -> int:
    """kappa(u, v): the maximum number of internally disjoint u-v paths."""
    if u == v:
        raise GraphError("local connectivity needs u != v")
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise GraphError("vertex out of range")
    if g.has_edge(u, v):
        inner = local_connectivity(g.delete_edge(u, v), u, v,
                                   None if limit is None else limit - 1)
        return 1 + inner
    net = _split_network(g, u, v, vertex_cap=1)
    return net.max_flow(2 * u + 1, 2 * v, limit=limit)


def vertex_connectivity(g: Graph) -> int:
    """Standard vertex connectivity; complete graphs give n - 1."""
    if g.n < 2:
        raise GraphError("vertex connectivity needs n >= 2")
    if g.is_complete():
        return g.n - 1
    best = g.n - 2
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if g.has_edge(u, v):
                continue
            k = local_connectivity(g, u, v, limit=best + 1)
            if k < best:
                best = k
                if best == 0:
                    return 0
    return best


def articulation_points(g: Graph) -> set[int]:
    """Cut vertices, by the usual lowpoint DFS."""
    visited = [False] * g.n
    depth = [0] * g.n
    low = [0] * g.n
    cut = set()

    for root in range(g.n):
        if visited[root]:
            continue
        # iterative DFS so deep graphs cannot overflow the stack
        stack = [(root, -1, iter(g.adjacency[root]))]
        visited[root] = True
        root_children = 0
        while stack:
            u, parent, it = stack[-1]
            advanced = False
            for w in it:
                if not visited[w]:
                    visited[w] = True
                    depth[w] = depth[u] + 1
                    low[w] = depth[w]
                    if u == root:
                        root_children += 1
                    stack.append((w, u, iter(g.adjacency[w])))
                    advanced = True
                    break
                elif w != parent:
                    low[u] = min(low[u], depth[w])
            if not advanced:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    low[p] = min(low[p], low[u])
                    if p != root and low[u] >= depth[p]:
                        cut.add(p)
        if root_children >= 2:
            cut.add(root)
    return cut


def is_k_connected(g: Graph, k: int) -> bool:
    """Vertex connectivity at least k; cheap paths for k <= 2, capped flows
    above."""
    if k < 1:
        return True
    if g.n < k + 1:
        return False
    if not g.is_connected():
        return False
    if k == 1:
        return True
    if k == 2:
        return not articulation_points(g)
    if g.min_degree() < k:
        return False
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if g.has_edge(u, v):
                continue
            if local_connectivity(g, u, v, limit=k) < k:
                return False
    return True


@dataclass(frozen=True)
class MixedCut:
    """A disconnecting pair (S, F) of vertices and edges with cost 2|S| + |F|.

    F never contains an edge incident to S; such edges are redundant and
    rejected at construction time.
    """

    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    cost: int

    def __post_init__(self):
        s = set(self.vertices)
        for a, b in self.edges:
            if a in s or b in s:
                raise GraphError(f"cut edge ({a}, {b}) is incident to the vertex part")
        if self.cost != 2 * len(self.vertices) + len(self.edges):
            raise GraphError("mixed cut cost must equal 2|S| + |F|")

    def disconnects(self, g: Graph) -> bool:
        remaining = [w for w in range(g.n) if w not in set(self.vertices)]
        if len(remaining) < 2:
            return False
        drop = set(self.edges)
        keep = g.induced(remaining)
        index = {w: i for i, w in enumerate(remaining)}
        pruned = Graph(keep.n, tuple(e for e in keep.edges
                                     if (remaining[e[0]], remaining[e[1]]) not in drop))
        del index
        return len(pruned.connected_components()) >= 2


def min_mixed_cut(g: Graph) -> MixedCut:
    """A minimum-cost mixed cut of g.

    Computed as the minimum over vertex pairs s, t of the s-t cut in the
    vertex-split network (internal vertices cost 2, edges cost 1), decoded
    back into (S, F). The graph is mixed k-connected iff the returned cost
    is >= k. On complete graphs this isolates a cheapest vertex.
    """
    if g.n < 2:
        raise GraphError("mixed cut needs n >= 2")
    best: tuple[int, set, set] | None = None
    for s in range(g.n):
        for t in range(s + 1, g.n):
            limit = None if best is None else best[0]
            net = _split_network(g, s, t, vertex_cap=2)
            f = net.max_flow(2 * s + 1, 2 * t, limit=limit)
            if limit is not None and f >= limit:
                continue
            reach = net.reachable(2 * s + 1)
            cut_s = {w for w in range(g.n)
                     if 2 * w in reach and 2 * w + 1 not in reach}
            cut_f = set()
            for a, b in g.edges:
                if (2 * a + 1 in reach and 2 * b not in reach) or \
                   (2 * b + 1 in reach and 2 * a not in reach):
                    if a not in cut_s and b not in cut_s:
                        cut_f.add((a, b))
            assert 2 * len(cut_s) + len(cut_f) == f
            best = (f, cut_s, cut_f)
            if f == 0:
                break
        if best is not None and best[0] == 0:
            break
    assert best is not None
    cost, cut_s, cut_f = best
    cut = MixedCut(tuple(sorted(cut_s)), tuple(sorted(cut_f)), cost)
    if not cut.disconnects(g):
        raise AssertionError("internal error: decoded cut does not disconnect")
    return cut


def find_cycle(g: Graph) -> list[int] | None:
    """Vertices of some cycle, in order, or None on forests."""
    color = [0] * g.n
    parent = [-1] * g.n
    for root in range(g.n):
        if color[root]:
            continue
        stack = [(root, -1)]
        while stack:
            u, p = stack.pop()
            if color[u]:
                continue
            color[u] = 1
            parent[u] = p
            for w in g.adjacency[u]:
                if w == p:
                    continue
                if color[w]:
                    # back edge u-w closes a cycle through the tree path
                    cyc = [u]
                    x = u
                    while x != w and parent[x] != -1:
                        x = parent[x]
                        cyc.append(x)
                    if cyc[-1] == w:
                        return cyc
                else:
                    stack.append((w, u))
    return None
