"""Linked and globally linked vertex pairs, plus a conjecture explorer.

A pair {u, v} is linked in dimension d when adding the edge uv leaves the
generic rank unchanged. Globally linked pairs (the distance between u and v
agrees in every equivalent generic realization) are fully understood only in
special situations; the two-dimensional query below answers "yes" or "no"
exactly on matroid-connected graphs via the local connectivity threshold 3,
answers "yes" through a circuit-based reduction when the pair is linked in
dimension 3, and otherwise reports "unknown" rather than guessing.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .field import Rng
from .graph import Graph, GraphError, local_connectivity
from .rigidity import (
    _rng,
    bridges,
    fundamental_circuit,
    generic_rank,
    is_matroid_connected,
    is_redundantly_matroid_connected,
    rigid_basis,
)

YES = "yes"
NO = "no"
UNKNOWN = "unknown"

REASON_EDGE = "edge-present"
REASON_KAPPA = "kappa-criterion"
REASON_CIRCUIT = "r3-circuit-route"
REASON_OPEN = "open"


@dataclass(frozen=True)
class PairVerdict:
    """Answer for one vertex pair; "yes" verdicts carry a checkable witness."""

    pair: tuple[int, int]
    linked: dict = field(default_factory=dict)  # dimension -> bool, as queried
    globally_linked: str = UNKNOWN
    reason: str = REASON_OPEN
    witness: tuple[tuple[int, int], ...] | None = None


def is_linked(g: Graph, u: int, v: int, d: int, rng: Rng | None = None) -> bool:
    """True when adding uv does not raise the generic rank (edges count)."""
    if u == v:
        raise GraphError("linkedness needs u != v")
    if g.has_edge(u, v):
        return True
    rng = _rng(rng)
    r_before = generic_rank(g, d, rng.child(0))
    r_after = generic_rank(g.add_edge(u, v), d, rng.child(1))
    return r_after == r_before


def is_globally_linked_2d(g: Graph, u: int, v: int, rng: Rng | None = None) -> PairVerdict:
    """Globally linked query in dimension 2 with explicit reason codes.

    Resolution order: present edges are globally linked; on matroid-connected
    graphs the answer is exactly kappa(u, v) >= 3; otherwise, when the pair
    is linked in dimension 3, the fundamental circuit C of uv certifies
    "yes" provided kappa(u, v; C - uv) >= 3 and C - uv is matroid-connected
    in dimension 2. Anything else stays "unknown".
    """
    if u == v:
        raise GraphError("pair needs u != v")
    rng = _rng(rng)
    pair = (u, v) if u < v else (v, u)
    if g.has_edge(u, v):
        return PairVerdict(pair=pair, linked={2: True, 3: True},
                           globally_linked=YES, reason=REASON_EDGE)

    if is_matroid_connected(g, 2, rng.child(0)):
        kappa = local_connectivity(g, u, v)
        verdict = YES if kappa >= 3 else NO
        return PairVerdict(pair=pair, linked={2: is_linked(g, u, v, 2, rng.child(1))},
                           globally_linked=verdict, reason=REASON_KAPPA)

    linked3 = is_linked(g, u, v, 3, rng.child(2))
    if not linked3:
        return PairVerdict(pair=pair, linked={3: False},
                           globally_linked=UNKNOWN, reason=REASON_OPEN)
    gplus = g.add_edge(u, v)
    basis = rigid_basis(g, 3, rng.child(3))
    circuit = fundamental_circuit(gplus, 3, basis, pair, rng.child(4))
    cgraph, labels = gplus.edge_subgraph(circuit)
    pos = {w: i for i, w in enumerate(labels)}
    cminus = cgraph.delete_edge(pos[u], pos[v])
    if local_connectivity(cminus, pos[u], pos[v]) >= 3 and \
            is_matroid_connected(cminus, 2, rng.child(5)):
        return PairVerdict(pair=pair, linked={3: True},
                           globally_linked=YES, reason=REASON_CIRCUIT,
                           witness=circuit)
    return PairVerdict(pair=pair, linked={3: True},
                       globally_linked=UNKNOWN, reason=REASON_OPEN)


def globally_linked_1d(g: Graph, u: int, v: int) -> bool:
    """Exact one-dimensional criterion: an edge, or two disjoint paths."""
    return g.has_edge(u, v) or local_connectivity(g, u, v) >= 2


# ---------------------------------------------------------------------------
# conjecture explorer

CONJECTURES = ("linked-gl", "redundant-mc", "bridge")


@dataclass(frozen=True)
class CorpusSpec:
    """What graphs to sweep: exhaustive up to max_n, or a random family."""

    mode: str = "exhaustive"
    max_n: int = 6
    count: int = 0
    n: int = 0
    edge_prob: float = 0.5
    isomorph_reject: bool = False

    def __post_init__(self):
        if self.mode not in ("exhaustive", "random"):
            raise ValueError(f"unknown corpus mode {self.mode!r}")
        if self.mode == "exhaustive" and self.max_n < 1:
            raise ValueError("exhaustive corpus needs max_n >= 1")
        if self.mode == "random" and (self.count < 1 or self.n < 1):
            raise ValueError("random corpus needs count >= 1 and n >= 1")


def _corpus_graphs(spec: CorpusSpec, rng: Rng):
    from . import corpus as corpus_mod

    if spec.mode == "exhaustive":
        for n in range(1, spec.max_n + 1):
            if spec.isomorph_reject:
                yield from corpus_mod.nonisomorphic_graphs(n)
            else:
                yield from corpus_mod.all_graphs(n)
    else:
        for i in range(spec.count):
            yield corpus_mod.random_graph(spec.n, spec.edge_prob, rng.child(i))


def _graph_payload(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.edges]}


def explore_conjecture(kind: str, dim: int, spec: CorpusSpec,
                       rng: Rng | None = None) -> dict:
    """Sweep a corpus for one conjecture and tally the outcomes.

    For every case whose hypothesis holds, the strongest checkable
    conclusion is evaluated: confirmed, unknown (no sound oracle applies),
    or a counterexample candidate with a full certificate. Unknowns are
    never treated as refutations.

    Kinds:
      linked-gl      pair linked in dimension dim+1 implies globally linked
                     in dimension dim (dim=1 exact, dim=2 via the circuit
                     route, higher dims always unknown)
      redundant-mc   matroid-connected in dim+1 implies every single-edge
                     deletion stays matroid-connected in dim
      bridge         matroid-connected in dim and G-e not implies e drops
                     the rank in dim+1
    """
    if kind not in CONJECTURES:
        raise ValueError(f"unknown conjecture {kind!r}; known: {CONJECTURES}")
    if dim < 1:
        raise GraphError("dimension must be >= 1")
    rng = _rng(rng)

    confirmed = 0
    unknown = 0
    candidates = []
    graphs_seen = 0
    cases = 0

    for gi, g in enumerate(_corpus_graphs(spec, rng.child(0))):
        graphs_seen += 1
        sub = rng.child(1 + gi)
        if kind == "linked-gl":
            for pi, (u, v) in enumerate(
                    (u, v) for u in range(g.n) for v in range(u + 1, g.n)):
                if not is_linked(g, u, v, dim + 1, sub.child(2 * pi)):
                    continue
                cases += 1
                if dim == 1:
                    if globally_linked_1d(g, u, v):
                        confirmed += 1
                    else:
                        candidates.append({"graph": _graph_payload(g),
                                           "pair": [u, v],
                                           "detail": "linked in dim 2 but not globally linked in dim 1"})
                elif dim == 2:
                    verdict = is_globally_linked_2d(g, u, v, sub.child(2 * pi + 1))
                    if verdict.globally_linked == YES:
                        confirmed += 1
                    elif verdict.globally_linked == NO:
                        candidates.append({"graph": _graph_payload(g),
                                           "pair": [u, v],
                                           "reason": verdict.reason,
                                           "detail": "linked in dim 3 but globally-linked oracle says no"})
                    else:
                        unknown += 1
                else:
                    unknown += 1
        elif kind == "redundant-mc":
            # single-edge matroids are connected only vacuously (the lone
            # edge is its own class); the implication is about circuit-rich
            # graphs, so the hypothesis asks for at least two edges
            if g.m < 2 or not is_matroid_connected(g, dim + 1, sub.child(0)):
                continue
            cases += 1
            if is_redundantly_matroid_connected(g, dim, sub.child(1)):
                confirmed += 1
            else:
                failing = [list(e) for e in g.edges
                           if not is_matroid_connected(g.delete_edge(e), dim, sub.child(2))]
                candidates.append({"graph": _graph_payload(g),
                                   "failing_edges": failing})
        else:  # bridge
            if not is_matroid_connected(g, dim, sub.child(0)):
                continue
            upper_bridges = set(bridges(g, dim + 1, sub.child(1)))
            for ei, e in enumerate(g.edges):
                if is_matroid_connected(g.delete_edge(e), dim, sub.child(2 + ei)):
                    continue
                cases += 1
                if e in upper_bridges:
                    confirmed += 1
                else:
                    candidates.append({"graph": _graph_payload(g),
                                       "edge": list(e)})

    return {
        "conjecture": kind,
        "dim": dim,
        "corpus": {
            "mode": spec.mode,
            "max_n": spec.max_n,
            "count": spec.count,
            "n": spec.n,
            "edge_prob": spec.edge_prob,
            "isomorph_reject": spec.isomorph_reject,
        },
        "counts": {
            "graphs": graphs_seen,
            "cases": cases,
            "confirmed": confirmed,
            "unknown": unknown,
            "counterexample_candidates": len(candidates),
        },
        "candidates": candidates,
        "seed": rng.seed,
    }
