"""Idempotent reduction, the star and sharp enlargements, barycentric
division and the periodic envelope.

Generated identifiers
---------------------
For an arrow ``a`` the star construction creates the vertex ``x_a`` and
the arrows ``a'``, ``a''`` and ``eps_a``.  Identifiers that are not a
plain word (letters, digits, underscore) are parenthesised first, so a
second application produces ``(a')'`` rather than the ambiguous ``a''``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

from .brauer import BrauerGraph, biserial_to_brauer, brauer_to_biserial
from .errors import EmptyBorder, EmptySelection, UnknownVertex
from .iso import isomorphic
from .quiver import Arrow, BiserialQuiver, Quiver, border_loops, is_triangulation_quiver
from .scalars import is_one
from .weighted import WeightedBiserialQuiver

_WORD = re.compile(r"^[A-Za-z0-9_]+$")


def _atom(name: str) -> str:
    return name if _WORD.match(name) else f"({name})"


def x_name(a: str) -> str:
    return f"x_{_atom(a)}"


def prime(a: str) -> str:
    return f"{_atom(a)}'"


def dprime(a: str) -> str:
    return f"{_atom(a)}''"


def eps_name(a: str) -> str:
    return f"eps_{_atom(a)}"


@dataclass(frozen=True)
class IdempotentSelection:
    selected: frozenset

    def __init__(self, selected: Iterable[str]):
        object.__setattr__(self, "selected", frozenset(map(str, selected)))
        if not self.selected:
            raise EmptySelection("no vertex selected")

    def check(self, bq: BiserialQuiver) -> None:
        unknown = sorted(self.selected - set(bq.vertices))
        if unknown:
            raise UnknownVertex(f"not vertices of the quiver: {unknown}")


# -- reduction ------------------------------------------------------------


def reduce(wbq: WeightedBiserialQuiver, sel: IdempotentSelection | Iterable[str]) -> list[WeightedBiserialQuiver]:
    """Pass to e B e for the idempotent e of the selected vertices.

    Every arrow ``a`` starting at a kept vertex becomes the run
    ``a, g(a), ..., g^p(a)`` up to the first kept target; the new arrow
    keeps the id of ``a``.  The new f sends a run to the run beginning
    with f of its last arrow.  Components are returned sorted by their
    smallest vertex.
    """
    if not isinstance(sel, IdempotentSelection):
        sel = IdempotentSelection(sel)
    bq = wbq.bq
    sel.check(bq)
    keep = sel.selected
    g, f = bq.g, bq.f
    last = {}
    arrows = []
    for a in bq.arrow_ids:
        if bq.source(a) not in keep:
            continue
        x = a
        while bq.target(x) not in keep:
            x = g[x]
        last[a] = x
        arrows.append(Arrow(a, bq.source(a), bq.target(x)))
    f_red = {a: f[x] for a, x in last.items()}
    full = Quiver(keep, arrows)
    parts = []
    for comp in sorted(full.components(), key=min):
        sub_arrows = [a for a in arrows if a.source in comp]
        sub = BiserialQuiver(Quiver(comp, sub_arrows), {a.id: f_red[a.id] for a in sub_arrows})
        weights = {a.id: wbq.m(a.id) for a in sub_arrows}
        border = None
        if wbq.border is not None:
            border = {v: s for v, s in wbq.border.items() if v in comp}
        params = None
        if wbq.params is not None:
            params = {a.id: wbq.c(a.id) for a in sub_arrows}
        parts.append(WeightedBiserialQuiver(sub, weights, border=border, params=params, p=wbq.p))
    return parts


# -- star and sharp -------------------------------------------------------


def _enlarge(bq: BiserialQuiver, weight_of, kept: set) -> tuple[BiserialQuiver, dict]:
    """Star every arrow outside ``kept``; arrows in ``kept`` stay as they are.

    ``kept`` must be a union of f-orbits.
    """
    f = bq.f
    vertices = list(bq.vertices)
    arrows, f_new, weights = [], {}, {}
    for a in bq.arrows:
        if a.id in kept:
            arrows.append(a)
            f_new[a.id] = f[a.id]
            weights[a.id] = weight_of(a.id)
            continue
        x = x_name(a.id)
        vertices.append(x)
        arrows += [
            Arrow(prime(a.id), a.source, x),
            Arrow(dprime(a.id), x, a.target),
            Arrow(eps_name(a.id), x_name(f[a.id]), x),
        ]
        f_new[dprime(a.id)] = prime(f[a.id])
        f_new[prime(f[a.id])] = eps_name(a.id)
        f_new[eps_name(a.id)] = dprime(a.id)
        weights[prime(a.id)] = weight_of(a.id)
        weights[eps_name(a.id)] = 1
    return BiserialQuiver(Quiver(vertices, arrows), f_new), weights


def _minimal_kept(bq: BiserialQuiver) -> set:
    kept = set()
    for o in bq.f_orbits:
        loops = [a for a in o if bq.quiver.arrow[a].is_loop]
        if (len(o) == 3 and not loops) or (len(o) == 1 and loops):
            kept.update(o)
    return kept


def star(wbq: WeightedBiserialQuiver, minimal: bool = False) -> WeightedBiserialQuiver:
    """The triangulation quiver (Q*, f*) with weights m*.

    Border and parameter data are dropped.  With ``minimal`` the f-orbits
    that are already triangles without loops, and the f-fixed loops, are
    left untouched.
    """
    kept = _minimal_kept(wbq.bq) if minimal else set()
    bq, weights = _enlarge(wbq.bq, wbq.m, kept)
    return WeightedBiserialQuiver(bq, weights, p=wbq.p)


def sharp(wbq: WeightedBiserialQuiver) -> WeightedBiserialQuiver:
    """Star every arrow except the border loops, keeping the border values."""
    loops = set(border_loops(wbq.bq))
    if not loops:
        raise EmptyBorder("the quiver has no f-fixed loops")
    bq, weights = _enlarge(wbq.bq, wbq.m, loops)
    border = dict(wbq.border) if wbq.border is not None else {}
    return WeightedBiserialQuiver(bq, weights, border=border, p=wbq.p)


def double_star(wbq: WeightedBiserialQuiver) -> WeightedBiserialQuiver:
    return star(star(wbq))


# -- Brauer graph side ----------------------------------------------------


def barycentric_division(graph: BrauerGraph) -> BrauerGraph:
    """The Brauer graph of the star of the quiver of ``graph``.

    Old vertices keep their names and multiplicities.  The new vertex of
    the f-orbit with smallest arrow ``a`` is called ``v_<a>``.
    """
    bq, weights = brauer_to_biserial(graph)
    sbq, sweights = _enlarge(bq, lambda a: weights[bq.g_rep(a)], set())
    names = {}
    for o in sbq.g_orbits:
        rep = o[0]
        for a in bq.arrow_ids:
            if rep == prime(a) or rep == dprime(a):
                names[rep] = graph.attachment[a]
                break
            if rep == eps_name(a):
                names[rep] = f"v_{bq.f_orbits.orbit_of(a)[0]}"
                break
    return biserial_to_brauer(sbq, sweights, vertex_names=names)


# -- periodicity ----------------------------------------------------------


def _tetrahedral() -> WeightedBiserialQuiver:
    arrows = [
        ("alpha", "3", "1"), ("beta", "4", "2"), ("gamma", "4", "1"), ("delta", "1", "5"),
        ("epsilon", "2", "5"), ("eta", "5", "4"), ("mu", "6", "3"), ("nu", "1", "6"),
        ("omega", "6", "4"), ("rho", "2", "6"), ("sigma", "3", "2"), ("xi", "5", "3"),
    ]
    triangles = [("delta", "eta", "gamma"), ("beta", "rho", "omega"), ("epsilon", "xi", "sigma"), ("nu", "mu", "alpha")]
    f = {t[i]: t[(i + 1) % 3] for t in triangles for i in range(3)}
    bq = BiserialQuiver(Quiver([str(i) for i in range(1, 7)], arrows), f)
    return WeightedBiserialQuiver(bq, {o[0]: 1 for o in bq.g_orbits})


TETRAHEDRAL = _tetrahedral()


def is_singular_tetrahedral(wbq: WeightedBiserialQuiver) -> bool:
    """Trivial weights and parameters on the tetrahedral quiver.

    Missing parameters count as trivial.
    """
    bq = wbq.bq
    if len(bq.vertices) != 6 or not is_triangulation_quiver(bq):
        return False
    if any(m != 1 for m in wbq.weights.values()):
        return False
    if wbq.params is not None and not all(is_one(c) for c in wbq.params.values()):
        return False
    bare = WeightedBiserialQuiver(bq, wbq.weights)
    return isomorphic(bare, TETRAHEDRAL) is not None


def periodic_envelope(wbq: WeightedBiserialQuiver) -> tuple[WeightedBiserialQuiver, IdempotentSelection]:
    """Iterated star, with trivial parameters, until every arrow has m*n >= 3.

    One star suffices for loopless inputs whose f-orbits all have length
    at least 3, two suffice when no arrow is f-fixed, three always do.
    The selection recovers the input by :func:`reduce`.
    """
    out = wbq
    for _ in range(3):
        out = star(out)
        if all(out.mn(a) >= 3 for a in out.arrow_ids):
            break
    params = {o[0]: 1 for o in out.bq.g_orbits}
    return out.with_(params=params), IdempotentSelection(wbq.vertices)
