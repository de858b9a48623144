"""The generic rigidity matroid of a graph, evaluated exactly over Z_p.

"Generic" coordinates are replaced by uniform random field elements. Every
randomized quantity here has one-sided error: a random realization can only
under-shoot a generic rank, never overshoot it, so rank-style results take
the maximum over a fixed number of independent trials and any trial that
reaches the known upper bound settles the answer. With p = 2**61 - 1 the
per-trial failure probability is bounded by (total degree)/p, which is
negligible at the scales this package targets.
"""

from __future__ import annotations

from dataclasses import dataclass

from .field import PRIME, FieldMatrix, Rng, nullspace_basis, rank_of_rows
from .graph import Graph, GraphError

TRIALS = 3
DEFAULT_SEED = 1729


def _rng(rng: Rng | None) -> Rng:
    return rng if rng is not None else Rng(DEFAULT_SEED)


@dataclass(frozen=True)
class Realization:
    """A point configuration p : V -> Z_p^d standing in for a generic one."""

    d: int
    coords: tuple[tuple[int, ...], ...]
    seed: int

    def __post_init__(self):
        if self.d < 1:
            raise GraphError("dimension must be >= 1")
        for c in self.coords:
            if len(c) != self.d:
                raise GraphError("every vertex needs exactly d coordinates")


def sample_realization(g: Graph, d: int, rng: Rng | None = None) -> Realization:
    rng = _rng(rng)
    seed = rng.seed
    coords = tuple(tuple(rng.field_element() for _ in range(d)) for _ in range(g.n))
    return Realization(d=d, coords=coords, seed=seed)


def _edge_row(real: Realization, n: int, u: int, v: int) -> list[int]:
    d = real.d
    row = [0] * (d * n)
    pu, pv = real.coords[u], real.coords[v]
    for k in range(d):
        diff = (pu[k] - pv[k]) % PRIME
        row[d * u + k] = diff
        row[d * v + k] = (-diff) % PRIME
    return row


def _rows_for(g: Graph, real: Realization, edges) -> list[list[int]]:
    return [_edge_row(real, g.n, u, v) for u, v in edges]


def rigidity_matrix(g: Graph, real: Realization) -> FieldMatrix:
    """The |E| x d|V| matrix whose row for uv carries p(u)-p(v) in u's
    column block and the negation in v's block. Rows follow canonical edge
    order, columns are vertex-major."""
    if len(real.coords) != g.n:
        raise GraphError("realization does not match the vertex count")
    return FieldMatrix(g.m, real.d * g.n, _rows_for(g, real, g.edges))


def rank_upper_bound(n: int, m: int, d: int) -> int:
    """Tight a priori bound on the generic rank of an n-vertex, m-edge graph."""
    if n <= d + 1:
        return min(m, n * (n - 1) // 2)
    return min(m, d * n - (d + 1) * d // 2)


def rigid_rank_target(n: int, d: int) -> int:
    return d * n - (d + 1) * d // 2


def _subset_rank(g: Graph, d: int, edges, rng: Rng, upper: int | None = None) -> int:
    """Generic rank of an edge subset: max over trials, early exit at the bound."""
    edges = list(edges)
    if not edges:
        return 0
    if upper is None:
        upper = rank_upper_bound(g.n, len(edges), d)
    best = 0
    for t in range(TRIALS):
        real = sample_realization(g, d, rng.child(t))
        r = rank_of_rows(_rows_for(g, real, edges), d * g.n)
        if r > best:
            best = r
        if best >= upper:
            break
    return best


def generic_rank(g: Graph, d: int, rng: Rng | None = None) -> int:
    """r_d(G), the rank of the d-dimensional rigidity matroid."""
    if d < 1:
        raise GraphError("dimension must be >= 1")
    return _subset_rank(g, d, g.edges, _rng(rng))


def is_rigid(g: Graph, d: int, rng: Rng | None = None) -> bool:
    """Generic rigidity in dimension d.

    For n <= d vertices the convention is rigid iff complete; from n = d + 1
    on, rigid iff the generic rank hits d*n - d(d+1)/2.
    """
    if g.n <= d:
        return g.is_complete()
    return generic_rank(g, d, rng) == rigid_rank_target(g.n, d)


def is_redundantly_rigid(g: Graph, d: int, rng: Rng | None = None) -> bool:
    """Rigid, and still rigid after deleting any single edge."""
    rng = _rng(rng)
    if not is_rigid(g, d, rng.child(0)):
        return False
    return not bridges(g, d, rng.child(1))


def is_vertex_redundantly_rigid(g: Graph, d: int, rng: Rng | None = None) -> bool:
    """Rigid after deleting any single vertex."""
    if g.n < 2:
        raise GraphError("needs at least two vertices")
    rng = _rng(rng)
    return all(is_rigid(g.delete_vertex(v), d, rng.child(v)) for v in range(g.n))


def is_independent(g: Graph, d: int, rng: Rng | None = None) -> bool:
    return generic_rank(g, d, rng) == g.m


def is_circuit(g: Graph, d: int, rng: Rng | None = None) -> bool:
    """A minimal dependent edge set: rank |E| - 1 and no rank-dropping edge."""
    rng = _rng(rng)
    if g.m == 0:
        return False
    if generic_rank(g, d, rng.child(0)) != g.m - 1:
        return False
    return not bridges(g, d, rng.child(1))


def bridges(g: Graph, d: int, rng: Rng | None = None) -> tuple[tuple[int, int], ...]:
    """Edges whose deletion drops the generic rank.

    Computed from cokernel supports: at a realization achieving the generic
    rank, an edge row is spanned by the others exactly when some cokernel
    vector is nonzero there, and at such realizations the detected
    non-bridge set can only be a subset of the generic one. Trials whose
    rank falls short are discarded.
    """
    rng = _rng(rng)
    if g.m == 0:
        return ()
    upper = rank_upper_bound(g.n, g.m, d)
    trials = []
    for t in range(TRIALS):
        real = sample_realization(g, d, rng.child(t))
        mat = rigidity_matrix(g, real)
        cok = nullspace_basis(mat, side="row")
        r = g.m - len(cok)
        nonb = set()
        for vec in cok:
            nonb.update(i for i, x in enumerate(vec) if x)
        trials.append((r, nonb))
        if r >= upper and len(nonb) == g.m:
            break
    best = max(r for r, _ in trials)
    nonbridges: set[int] = set()
    for r, nonb in trials:
        if r == best:
            nonbridges |= nonb
    return tuple(e for i, e in enumerate(g.edges) if i not in nonbridges)


def rigid_basis(g: Graph, d: int, rng: Rng | None = None) -> tuple[tuple[int, int], ...]:
    """A maximal independent edge set, grown greedily in canonical edge order.

    For a rigid graph this is a minimally rigid spanning subgraph.
    """
    rng = _rng(rng)
    if g.m == 0:
        return ()
    upper = rank_upper_bound(g.n, g.m, d)
    cols = d * g.n
    best: tuple[tuple[int, int], ...] = ()
    for t in range(TRIALS):
        real = sample_realization(g, d, rng.child(t))
        pivots: list[tuple[int, list[int]]] = []
        chosen = []
        for e in g.edges:
            row = _edge_row(real, g.n, *e)
            for c, prow in pivots:
                f = row[c]
                if f:
                    row = [(a - f * b) % PRIME for a, b in zip(row, prow)]
            lead = next((c for c in range(cols) if row[c]), None)
            if lead is None:
                continue
            inv = pow(row[lead], -1, PRIME)
            pivots.append((lead, [(x * inv) % PRIME for x in row]))
            chosen.append(e)
        if len(chosen) > len(best):
            best = tuple(chosen)
        if len(best) >= upper:
            break
    return best


def fundamental_circuit(g: Graph, d: int, basis, e, rng: Rng | None = None
                        ) -> tuple[tuple[int, int], ...]:
    """The unique circuit inside basis + e, found by rank queries.

    Membership of a basis edge f is decided by whether (basis - f) + e stays
    independent, one rank query per f plus one to confirm e is spanned.
    """
    rng = _rng(rng)
    basis = tuple(basis)
    e = (e[0], e[1]) if e[0] < e[1] else (e[1], e[0])
    basis_set = set(basis)
    if e in basis_set:
        raise GraphError(f"edge {e} lies in the basis")
    if e not in g.edge_set:
        raise GraphError(f"edge {e} not in graph")
    if not basis_set <= g.edge_set:
        raise GraphError("basis contains edges outside the graph")
    k = len(basis)
    if _subset_rank(g, d, basis, rng.child(0), upper=k) != k:
        raise GraphError("the given edge set is not independent")
    if _subset_rank(g, d, basis + (e,), rng.child(1), upper=k + 1) != k:
        raise GraphError("edge is independent of the basis; not spanned, so no circuit")

    members = [e]
    for i, f in enumerate(basis):
        probe = [x for x in basis if x != f] + [e]
        if _subset_rank(g, d, probe, rng.child(2 + i), upper=k) == k:
            members.append(f)
    members.sort()
    return tuple(members)


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra


def matroid_components(g: Graph, d: int, rng: Rng | None = None
                       ) -> tuple[tuple[tuple[int, int], ...], ...]:
    """Connected components of the rigidity matroid, as edge sets.

    Found by union-find over the fundamental circuits of the non-basis
    edges; basis edges touched by no circuit stay as singletons (they are
    exactly the bridges).
    """
    rng = _rng(rng)
    if g.m == 0:
        return ()
    basis = rigid_basis(g, d, rng.child(0))
    index = {e: i for i, e in enumerate(g.edges)}
    uf = _UnionFind(g.m)
    basis_set = set(basis)
    for j, e in enumerate(g.edges):
        if e in basis_set:
            continue
        circuit = fundamental_circuit(g, d, basis, e, rng.child(1 + j))
        root = index[circuit[0]]
        for f in circuit[1:]:
            uf.union(root, index[f])
    groups: dict[int, list] = {}
    for e in g.edges:
        groups.setdefault(uf.find(index[e]), []).append(e)
    comps = sorted(groups.values(), key=lambda c: c[0])
    return tuple(tuple(c) for c in comps)


def is_matroid_connected(g: Graph, d: int, rng: Rng | None = None) -> bool:
    comps = matroid_components(g, d, rng)
    return len(comps) == 1 and g.m >= 1


def is_redundantly_matroid_connected(g: Graph, d: int, rng: Rng | None = None) -> bool:
    """Matroid-connected after deleting any single edge."""
    rng = _rng(rng)
    return all(is_matroid_connected(g.delete_edge(e), d, rng.child(i))
               for i, e in enumerate(g.edges))


@dataclass(frozen=True)
class MatroidReport:
    """Summary of the d-dimensional rigidity matroid of one graph."""

    d: int
    rank: int
    independent: bool
    circuit: bool
    bridges: tuple[tuple[int, int], ...]
    components: tuple[tuple[tuple[int, int], ...], ...]
    basis: tuple[tuple[int, int], ...]


def matroid_report(g: Graph, d: int, rng: Rng | None = None) -> MatroidReport:
    rng = _rng(rng)
    basis = rigid_basis(g, d, rng.child(0))
    r = len(basis)
    brs = bridges(g, d, rng.child(1))
    comps = matroid_components(g, d, rng.child(2))
    report = MatroidReport(
        d=d,
        rank=r,
        independent=(r == g.m),
        circuit=(g.m > 0 and r == g.m - 1 and not brs),
        bridges=brs,
        components=comps,
        basis=basis,
    )
    if r > rank_upper_bound(g.n, g.m, d):
        raise AssertionError("internal error: rank exceeds its a priori bound")
    if sum(len(c) for c in comps) != g.m:
        raise AssertionError("internal error: components do not partition E")
    return report
