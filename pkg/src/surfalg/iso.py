"""Exhaustive isomorphism search for small quivers and ribbon graphs.

Both kinds of object reduce to the same problem: a finite set carrying a
few permutations and a labelling of its elements.  A weighted biserial
quiver is its arrow set with ``f`` and ``bar`` (vertices are the
``bar``-orbits, so sources and targets follow), a ribbon graph is its
half-edge set with the edge involution and the cyclic successor.  We
look for a bijection conjugating each permutation and preserving labels.
"""

from __future__ import annotations

from dataclasses import dataclass
from types import MappingProxyType
from typing import Hashable, Mapping, Sequence

from .errors import SizeLimitExceeded

DEFAULT_MAX_VERTICES = 12


def conjugating_bijection(
    perms_a: Sequence[Mapping],
    labels_a: Mapping[str, Hashable],
    perms_b: Sequence[Mapping],
    labels_b: Mapping[str, Hashable],
) -> dict | None:
    """A bijection phi with phi(p_a(x)) = p_b(phi(x)) and equal labels, or None.

    Backtracks over the image of one seed element per orbit of the group
    generated by the permutations; everything else in that orbit is then
    forced, so a choice is checked by propagation.
    """
    elems_a, elems_b = sorted(labels_a), sorted(labels_b)
    if len(elems_a) != len(elems_b) or len(perms_a) != len(perms_b):
        return None
    if sorted(map(repr, labels_a.values())) != sorted(map(repr, labels_b.values())):
        return None
    inv_a = [{v: k for k, v in p.items()} for p in perms_a]
    inv_b = [{v: k for k, v in p.items()} for p in perms_b]
    moves_a = list(perms_a) + inv_a
    moves_b = list(perms_b) + inv_b

    def extend(phi: dict, used: set, seed: str, image: str):
        # forced propagation along the group orbit of seed
        new = {seed: image}
        if image in used or labels_a[seed] != labels_b[image]:
            return None
        queue = [seed]
        while queue:
            x = queue.pop()
            y = new[x]
            for ma, mb in zip(moves_a, moves_b):
                x2, y2 = ma[x], mb[y]
                known = new.get(x2, phi.get(x2))
                if known is not None:
                    if known != y2:
                        return None
                    continue
                if y2 in used or labels_a[x2] != labels_b[y2] or y2 in new.values():
                    return None
                new[x2] = y2
                queue.append(x2)
        return new

    def search(phi: dict, used: set):
        free = [x for x in elems_a if x not in phi]
        if not free:
            return dict(phi)
        seed = free[0]
        for image in elems_b:
            if image in used:
                continue
            new = extend(phi, used, seed, image)
            if new is None:
                continue
            phi.update(new)
            used.update(new.values())
            found = search(phi, used)
            if found is not None:
                return found
            for k in new:
                del phi[k]
            used.difference_update(new.values())
        return None

    return search({}, set())


@dataclass(frozen=True)
class Isomorphism:
    """A witness: a vertex bijection and an arrow (or half-edge) bijection."""

    vertex_map: Mapping[str, str]
    arrow_map: Mapping[str, str]

    def inverse(self) -> "Isomorphism":
        return Isomorphism(
            MappingProxyType({v: k for k, v in self.vertex_map.items()}),
            MappingProxyType({v: k for k, v in self.arrow_map.items()}),
        )


def _quiver_labels(w) -> dict:
    bq = w.bq
    return {
        a: (w.m(a), str(w.b(bq.source(a))), str(w.c(a)) if w.params is not None else None)
        for a in bq.arrow_ids
    }


def isomorphic(a, b, max_vertices: int = DEFAULT_MAX_VERTICES) -> Isomorphism | None:
    """Isomorphism of weighted biserial quivers preserving f, weights,
    border values and parameters; ``None`` when there is none."""
    for w in (a, b):
        if len(w.bq.vertices) > max_vertices:
            raise SizeLimitExceeded(
                f"{len(w.bq.vertices)} vertices exceeds the search bound {max_vertices}"
            )
    if len(a.bq.vertices) != len(b.bq.vertices):
        return None
    phi = conjugating_bijection(
        [a.bq.f, a.bq.bar], _quiver_labels(a), [b.bq.f, b.bq.bar], _quiver_labels(b)
    )
    if phi is None:
        return None
    vmap = {a.bq.source(x): b.bq.source(y) for x, y in phi.items()}
    return Isomorphism(MappingProxyType(dict(sorted(vmap.items()))), MappingProxyType(dict(sorted(phi.items()))))


def ribbon_isomorphic(a, b, max_vertices: int = DEFAULT_MAX_VERTICES) -> Isomorphism | None:
    """Isomorphism of Brauer graphs (ribbon graphs with multiplicities).

    The bound applies to the number of edges, which are the vertices of
    the associated quiver.
    """
    for g in (a, b):
        if len(g.edges) > max_vertices:
            raise SizeLimitExceeded(f"{len(g.edges)} edges exceeds the search bound {max_vertices}")
    if len(a.edges) != len(b.edges) or len(a.vertices) != len(b.vertices):
        return None

    def labels(g):
        return {h: g.multiplicity[g.attachment[h]] for h in g.attachment}

    phi = conjugating_bijection([a.partner, a.succ], labels(a), [b.partner, b.succ], labels(b))
    if phi is None:
        return None
    vmap = {a.attachment[h]: b.attachment[k] for h, k in phi.items()}
    return Isomorphism(MappingProxyType(dict(sorted(vmap.items()))), MappingProxyType(dict(sorted(phi.items()))))
