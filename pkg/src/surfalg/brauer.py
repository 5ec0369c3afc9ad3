"""Brauer graphs as ribbon graphs, and their dictionary with biserial quivers.

A Brauer graph is stored through its half-edges.  Each edge owns two
half-edges (a loop edge has both at the same vertex), and each vertex
lists its half-edges in cyclic order.  Two permutations of the
half-edges describe everything:

``partner``
    swaps the two half-edges of an edge;
``succ``
    moves to the next half-edge around the same vertex.

The associated quiver has one vertex per edge and one arrow per
half-edge ``h``, going from the edge of ``h`` to the edge of
``succ(h)``.  Then ``g = succ``, ``bar = partner`` and ``f = bar o g``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property
from types import MappingProxyType
from typing import Mapping

from .errors import GenerationFailed, InvalidBrauerGraph, UnknownArrow
from .quiver import Arrow, BiserialQuiver, Quiver


def _rotate_min(seq) -> tuple:
    seq = tuple(seq)
    i = seq.index(min(seq))
    return seq[i:] + seq[:i]


@dataclass(frozen=True)
class BrauerGraph:
    cyclic_order: Mapping[str, tuple]
    multiplicity: Mapping[str, int]
    edges: Mapping[str, tuple]

    def __post_init__(self):
        order = {str(v): tuple(map(str, hs)) for v, hs in dict(self.cyclic_order).items()}
        mult = dict(self.multiplicity)
        edges = {str(e): tuple(map(str, hs)) for e, hs in dict(self.edges).items()}
        if not edges:
            raise InvalidBrauerGraph("a Brauer graph needs at least one edge")
        if set(mult) != set(order):
            raise InvalidBrauerGraph("multiplicities and cyclic orders name different vertices")
        for v, e in mult.items():
            if isinstance(e, bool) or not isinstance(e, int) or e < 1:
                raise InvalidBrauerGraph(f"multiplicity of {v!r} must be a positive integer")
        edge_halves = []
        for e, hs in edges.items():
            if len(hs) != 2 or hs[0] == hs[1]:
                raise InvalidBrauerGraph(f"edge {e!r} needs two distinct half-edges")
            edge_halves.extend(hs)
        if len(set(edge_halves)) != len(edge_halves):
            raise InvalidBrauerGraph("a half-edge belongs to two edges")
        placed = [h for hs in order.values() for h in hs]
        if len(set(placed)) != len(placed):
            raise InvalidBrauerGraph("a half-edge appears twice in the cyclic orders")
        if set(placed) != set(edge_halves):
            stray = sorted(set(placed) ^ set(edge_halves))
            raise InvalidBrauerGraph(f"half-edges not matched between edges and cyclic orders: {stray}")
        for v, hs in order.items():
            if not hs:
                raise InvalidBrauerGraph(f"vertex {v!r} has no half-edges")
        object.__setattr__(
            self, "cyclic_order", MappingProxyType({v: _rotate_min(order[v]) for v in sorted(order)})
        )
        object.__setattr__(self, "multiplicity", MappingProxyType({v: mult[v] for v in sorted(mult)}))
        object.__setattr__(self, "edges", MappingProxyType({e: tuple(sorted(edges[e])) for e in sorted(edges)}))
        if not self._connected():
            raise InvalidBrauerGraph("the graph is not connected")

    def _connected(self) -> bool:
        start = next(iter(self.attachment))
        seen, stack = {start}, [start]
        while stack:
            h = stack.pop()
            for k in (self.partner[h], self.succ[h]):
                if k not in seen:
                    seen.add(k)
                    stack.append(k)
        return len(seen) == len(self.attachment)

    @property
    def vertices(self) -> tuple:
        return tuple(self.cyclic_order)

    @cached_property
    def attachment(self) -> Mapping[str, str]:
        return MappingProxyType({h: v for v, hs in self.cyclic_order.items() for h in hs})

    @cached_property
    def edge_of(self) -> Mapping[str, str]:
        return MappingProxyType({h: e for e, hs in self.edges.items() for h in hs})

    @cached_property
    def partner(self) -> Mapping[str, str]:
        out = {}
        for h1, h2 in self.edges.values():
            out[h1], out[h2] = h2, h1
        return MappingProxyType(out)

    @cached_property
    def succ(self) -> Mapping[str, str]:
        out = {}
        for hs in self.cyclic_order.values():
            for i, h in enumerate(hs):
                out[h] = hs[(i + 1) % len(hs)]
        return MappingProxyType(out)

    def valency(self, v: str) -> int:
        """Number of half-edges at ``v``; loops count twice."""
        return len(self.cyclic_order[v])


def brauer_to_biserial(graph: BrauerGraph) -> tuple[BiserialQuiver, dict]:
    """The biserial quiver of a Brauer graph and its weights (keyed by
    g-orbit representative)."""
    arrows = [Arrow(h, graph.edge_of[h], graph.edge_of[graph.succ[h]]) for h in graph.attachment]
    f = {h: graph.partner[graph.succ[h]] for h in graph.attachment}
    bq = BiserialQuiver(Quiver(graph.edges, arrows), f)
    weights = {o[0]: graph.multiplicity[graph.attachment[o[0]]] for o in bq.g_orbits}
    return bq, weights


def biserial_to_brauer(bq: BiserialQuiver, weights: Mapping[str, int], vertex_names: Mapping[str, str] | None = None) -> BrauerGraph:
    """One ribbon vertex per g-orbit, one edge per quiver vertex.

    ``weights`` may be keyed by any arrow of an orbit.  Ribbon vertices
    are called ``v_<representative>`` unless ``vertex_names`` maps the
    orbit representative to a name.
    """
    w = {bq.g_rep(a): m for a, m in weights.items()}
    names = dict(vertex_names or {})
    order, mult = {}, {}
    for o in bq.g_orbits:
        name = names.get(o[0], f"v_{o[0]}")
        if name in order:
            raise InvalidBrauerGraph(f"vertex name {name!r} used twice")
        order[name] = o
        mult[name] = w[o[0]]
    edges = {v: bq.quiver.outgoing[v] for v in bq.vertices}
    return BrauerGraph(order, mult, edges)


def classify_loop(graph: BrauerGraph, arrow: str) -> str:
    """``external``, ``internal`` or ``not-a-loop``."""
    if arrow not in graph.attachment:
        raise UnknownArrow(arrow)
    bq, _ = brauer_to_biserial(graph)
    if bq.g[arrow] == arrow:
        return "external"
    if bq.quiver.arrow[arrow].is_loop:
        return "internal"
    return "not-a-loop"


def green_walks(bq: BiserialQuiver) -> list[tuple]:
    """For each f-orbit, the quiver vertices (Brauer edges) visited."""
    return [tuple(bq.source(a) for a in o) for o in bq.f_orbits]


def random_brauer_graph(n_edges: int, seed: int, *, max_multiplicity: int = 3, max_attempts: int = 10_000) -> BrauerGraph:
    """Random connected ribbon graph with ``n_edges`` edges.

    Half-edges ``h0, h1, ...`` are paired consecutively into edges, and a
    uniformly random permutation supplies the cyclic orders.
    """
    if n_edges < 1:
        raise ValueError("n_edges must be >= 1")
    rng = random.Random(seed)
    width = len(str(2 * n_edges - 1))
    halves = [f"h{i:0{width}d}" for i in range(2 * n_edges)]
    edges = {str(i + 1): (halves[2 * i], halves[2 * i + 1]) for i in range(n_edges)}
    for _ in range(max_attempts):
        perm = halves[:]
        rng.shuffle(perm)
        succ = dict(zip(halves, perm))
        order, seen = {}, set()
        for h in halves:
            if h in seen:
                continue
            cyc = [h]
            seen.add(h)
            while succ[cyc[-1]] != h:
                cyc.append(succ[cyc[-1]])
                seen.add(cyc[-1])
            order[f"v{len(order) + 1}"] = tuple(cyc)
        mult = {v: rng.randint(1, max_multiplicity) for v in order}
        try:
            return BrauerGraph(order, mult, edges)
        except InvalidBrauerGraph:
            continue
    raise GenerationFailed(f"no connected ribbon graph after {max_attempts} attempts")
