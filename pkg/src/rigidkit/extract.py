"""Extraction of highly connected and globally rigid subgraphs from dense graphs.

The core routine peels a graph down to a mixed k-connected subgraph whenever
the density premise 2|E| > (k-1)(2|V| - k) holds (k even; odd k is promoted
to k+1 and recorded). Every step either deletes a vertex while the premise
survives or splits along a cheap mixed cut into a side that still satisfies
it, so termination and correctness follow from the counting in the premise.
On top of that sit a two-dimensional pipeline (mixed 6-connected subgraphs
are redundantly globally rigid in the plane) and a certified lower-bound
estimator for the largest dimension admitting a nontrivial globally rigid
subgraph.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .field import Rng
from .graph import Graph, GraphError, min_mixed_cut
from .rigidity import _rng
from .global_rigidity import is_globally_rigid, is_redundantly_globally_rigid


class ExtractionError(GraphError):
    """Premise of an extraction routine is violated; message cites the inequality."""


@dataclass(frozen=True)
class DeleteVertex:
    vertex: int
    reason: str  # "degree" (degree < k) or "minimality"


@dataclass(frozen=True)
class CutSplit:
    cut_vertices: tuple[int, ...]
    cut_edges: tuple[tuple[int, int], ...]
    side: tuple[int, ...]  # surviving vertices, original labels


@dataclass(frozen=True)
class ExtractionTrace:
    requested_k: int
    k: int  # after odd promotion
    steps: tuple
    vertices: tuple[int, ...]  # final subgraph, original labels, sorted

    @property
    def promoted(self) -> bool:
        return self.k != self.requested_k


def _edge_premise(nv: int, ne: int, k: int) -> bool:
    # |E| > (k-1)(|V| - k/2), kept in integers
    return 2 * ne > (k - 1) * (2 * nv - k)


def _premise(nv: int, ne: int, k: int) -> bool:
    return nv >= k + 1 and _edge_premise(nv, ne, k)


class _State:
    """Mutable working copy of a subgraph, in original labels."""

    def __init__(self, g: Graph):
        self.vertices = set(range(g.n))
        self.edges = set(g.edges)
        self.adj = {v: set() for v in range(g.n)}
        for u, v in g.edges:
            self.adj[u].add(v)
            self.adj[v].add(u)

    @property
    def nv(self) -> int:
        return len(self.vertices)

    @property
    def ne(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def delete_vertex(self, v: int) -> None:
        for w in self.adj[v]:
            self.adj[w].discard(v)
            self.edges.discard((v, w) if v < w else (w, v))
        del self.adj[v]
        self.vertices.discard(v)

    def restrict(self, keep, drop_edges) -> None:
        keep = set(keep)
        drop = set(drop_edges)
        for v in list(self.vertices - keep):
            self.delete_vertex(v)
        for u, v in drop:
            self.adj[u].discard(v)
            self.adj[v].discard(u)
            self.edges.discard((u, v) if u < v else (v, u))

    def graph(self) -> tuple[Graph, tuple[int, ...]]:
        verts = sorted(self.vertices)
        index = {v: i for i, v in enumerate(verts)}
        return Graph(len(verts),
                     tuple((index[a], index[b]) for a, b in sorted(self.edges))), tuple(verts)


def mixed_k_connected_subgraph(g: Graph, k: int) -> tuple[Graph, ExtractionTrace]:
    """Extract a mixed k-connected subgraph under the density premise.

    Odd k is promoted to k + 1 (a mixed (k+1)-connected graph is mixed
    k-connected) and recorded in the trace. Vertices of degree below k are
    stripped up front: isolating such a vertex costs less than k, so none
    can survive in any mixed k-connected subgraph and removing them loses
    nothing. The density premise is then required of the stripped core.
    The output is re-verified: its minimum mixed cut costs at least k.
    """
    requested = k
    if k < 1:
        raise ExtractionError("k must be >= 1")
    if k % 2 == 1:
        k += 1

    st = _State(g)
    steps = []
    while True:
        low = [v for v in st.vertices if st.degree(v) < k]
        if not low:
            break
        v = min(low, key=lambda x: (st.degree(x), x))
        steps.append(DeleteVertex(vertex=v, reason="degree"))
        st.delete_vertex(v)

    if st.nv < k + 1:
        raise ExtractionError(
            f"premise violated: |V| = {st.nv} < {k + 1} = k + 1 "
            f"after stripping degree < {k} vertices (input had |V| = {g.n})")
    if not _edge_premise(st.nv, st.ne, k):
        raise ExtractionError(
            f"premise violated: |E| = {st.ne} is not greater than "
            f"(k-1)(|V| - k/2) = {(k - 1) * (2 * st.nv - k) // 2} with "
            f"k = {k}, |V| = {st.nv} (after stripping degree < {k} vertices)")

    while True:
        # deletion phase: drop vertices while the premise survives,
        # cheapest (minimum degree) first
        while True:
            cands = [v for v in st.vertices
                     if _premise(st.nv - 1, st.ne - st.degree(v), k)]
            if not cands:
                break
            v = min(cands, key=lambda x: (st.degree(x), x))
            steps.append(DeleteVertex(
                vertex=v, reason="degree" if st.degree(v) < k else "minimality"))
            st.delete_vertex(v)

        cur, labels = st.graph()
        cut = min_mixed_cut(cur)
        if cut.cost >= k:
            trace = ExtractionTrace(requested_k=requested, k=k,
                                    steps=tuple(steps), vertices=labels)
            return cur, trace

        # split along the cheap cut; at least one side keeps the premise
        cut_vertices = tuple(sorted(labels[i] for i in cut.vertices))
        cut_edges = tuple(sorted((labels[a], labels[b]) for a, b in cut.edges))
        removed = set(cut_vertices)
        dropped = set(cut_edges)
        survivors = [v for v in st.vertices if v not in removed]
        comp_graph = {v: set() for v in survivors}
        for u, v in st.edges:
            if u in removed or v in removed:
                continue
            if ((u, v) if u < v else (v, u)) in dropped:
                continue
            comp_graph[u].add(v)
            comp_graph[v].add(u)
        comps = []
        seen = set()
        for s in sorted(survivors):
            if s in seen:
                continue
            comp = {s}
            stack = [s]
            seen.add(s)
            while stack:
                x = stack.pop()
                for y in comp_graph[x]:
                    if y not in seen:
                        seen.add(y)
                        comp.add(y)
                        stack.append(y)
            comps.append(comp)
        if len(comps) < 2:
            raise AssertionError("internal error: cheap cut fails to disconnect")

        best_side = None
        for comp in comps:
            side = comp | set(cut_vertices)
            inside = sum(1 for u, v in st.edges
                         if u in side and v in side
                         and ((u, v) if u < v else (v, u)) not in dropped)
            if _premise(len(side), inside, k):
                key = (len(side), tuple(sorted(side)))
                if best_side is None or key < best_side[0]:
                    best_side = (key, side)
        if best_side is None:
            raise AssertionError("internal error: no side satisfies the premise")
        side = best_side[1]
        steps.append(CutSplit(cut_vertices=cut_vertices, cut_edges=cut_edges,
                              side=tuple(sorted(side))))
        st.restrict(side, dropped)


def replay_trace(g: Graph, trace: ExtractionTrace) -> Graph:
    """Reapply a trace to its input; must reproduce the extracted subgraph."""
    st = _State(g)
    for step in trace.steps:
        if isinstance(step, DeleteVertex):
            st.delete_vertex(step.vertex)
        else:
            st.restrict(set(step.side), set(step.cut_edges))
    out, labels = st.graph()
    if labels != trace.vertices:
        raise AssertionError("trace replay reached a different vertex set")
    return out


def globally_rigid_subgraph_2d(g: Graph, rng: Rng | None = None,
                               verify: bool = True, with_trace: bool = False):
    """A redundantly globally rigid planar-dimension subgraph of a dense graph.

    Guaranteed for |V| >= 7 and |E| >= 5|V| - 14: the mixed 6-connected
    subgraph extracted under that premise is redundantly globally rigid in
    dimension 2. Returns None exactly when the density premise fails.
    """
    rng = _rng(rng)
    if g.n < 7 or g.m < 5 * g.n - 14:
        return None
    sub, trace = mixed_k_connected_subgraph(g, 6)
    if sub.n < 7:
        raise AssertionError("internal error: mixed 6-connected output below 7 vertices")
    if verify and not is_redundantly_globally_rigid(sub, 2, rng.child(0)):
        raise AssertionError(
            "randomized fault: extracted subgraph failed redundant global rigidity")
    if with_trace:
        return sub, trace
    return sub


@dataclass(frozen=True)
class GrnEstimate:
    """Certified lower bound for the largest dimension with a nontrivial
    globally rigid subgraph; 0 when not even a cycle exists."""

    lower_bound: int
    witness: Graph | None
    witness_vertices: tuple[int, ...] | None


def _iterated_core(g: Graph, min_deg: int) -> tuple[int, ...]:
    """Vertices of the subgraph left by stripping degree < min_deg repeatedly."""
    alive = set(range(g.n))
    deg = {v: g.degree(v) for v in alive}
    changed = True
    while changed:
        changed = False
        for v in sorted(alive):
            if deg[v] < min_deg:
                alive.discard(v)
                for w in g.adjacency[v]:
                    if w in alive:
                        deg[w] -= 1
                changed = True
    return tuple(sorted(alive))


def _mader_descent(g: Graph, k: int) -> Graph | None:
    """Shrink toward a k-connected candidate: delete minimum-degree vertices
    while |E| > (2k-3)(|V| - k - 1) and |V| > 2k - 1 survive."""
    if g.n < 2 * k - 1 or g.m <= (2 * k - 3) * (g.n - k - 1):
        return None
    st = _State(g)
    while True:
        cands = [v for v in st.vertices
                 if st.nv - 1 >= 2 * k - 1
                 and st.ne - st.degree(v) > (2 * k - 3) * (st.nv - 1 - k - 1)]
        if not cands:
            break
        st.delete_vertex(min(cands, key=lambda x: (st.degree(x), x)))
    out, _ = st.graph()
    return out


def estimate_grn(g: Graph, d_max: int, rng: Rng | None = None) -> GrnEstimate:
    """Certified lower bound on the globally-rigid-subgraph dimension.

    Tries, for each d from d_max down to 1, a small set of candidate
    subgraphs (the (d+1)-core, a connectivity-driven descent, the
    two-dimensional pipeline, cycles for d = 1) and certifies the first
    that passes the global rigidity test on at least d + 2 vertices. The
    result is a lower bound only; it is never claimed tight.
    """
    if d_max < 1:
        raise GraphError("d_max must be >= 1")
    rng = _rng(rng)
    for d in range(d_max, 0, -1):
        sub = rng.child(d)
        candidates: list[tuple[Graph, tuple[int, ...]]] = []
        core = _iterated_core(g, d + 1)
        if len(core) >= d + 2:
            candidates.append((g.induced(core), core))
        mader = _mader_descent(g, d * (d + 1) + 1)
        if mader is not None and mader.n >= d + 2:
            candidates.append((mader, ()))
        if d == 2:
            piped = globally_rigid_subgraph_2d(g, sub.child(0), verify=False)
            if piped is not None:
                candidates.append((piped, ()))
        if d == 1:
            from .graph import find_cycle

            cyc = find_cycle(g)
            if cyc is not None and len(cyc) >= 3:
                ring = Graph(len(cyc), tuple(
                    (i, (i + 1) % len(cyc)) if i < (i + 1) % len(cyc)
                    else ((i + 1) % len(cyc), i) for i in range(len(cyc))))
                candidates.append((ring, tuple(sorted(cyc))))
        for ci, (cand, verts) in enumerate(candidates):
            if cand.n >= d + 2 and is_globally_rigid(cand, d, sub.child(1 + ci)):
                return GrnEstimate(lower_bound=d, witness=cand,
                                   witness_vertices=verts or None)
    return GrnEstimate(lower_bound=0, witness=None, witness_vertices=None)


def conditional_grn_bound(g: Graph) -> int:
    """floor(sqrt(|E| / (6|V|))): a lower bound for the globally rigid
    subgraph dimension that is conditional on the sufficient-connectivity
    conjecture. Reported for context, never asserted."""
    if g.n == 0:
        raise GraphError("empty graph")
    return math.isqrt(g.m // (6 * g.n))
