"""2-regular quivers, admissible permutations and their orbits.

A :class:`BiserialQuiver` is a connected quiver in which every vertex is
the source and the target of exactly two arrows, together with a
permutation ``f`` of the arrows such that ``f(a)`` starts where ``a``
ends.  Two further permutations are derived from it:

* ``bar(a)``: the other arrow with the same source as ``a``;
* ``g(a) = bar(f(a))``, again admissible.

Identifiers are opaque strings.  Everything sorts lexicographically by
identifier so that output does not depend on insertion order.
"""

from __future__ import annotations

import random
from collections import defaultdict
from dataclasses import dataclass, field
from functools import cached_property
from types import MappingProxyType
from typing import Iterable, Mapping

from .errors import PROBLEM_CLASSES, GenerationFailed, NotBijective, NotTriangulation


@dataclass(frozen=True, order=True)
class Arrow:
    id: str
    source: str
    target: str

    @property
    def is_loop(self) -> bool:
        return self.source == self.target


@dataclass(frozen=True)
class Quiver:
    """A finite quiver; arrows and vertices are stored sorted by id.

    Only basic integrity (unique arrow ids, declared endpoints) is checked
    here.  2-regularity and connectedness belong to :func:`validate`,
    since e.g. a Gabriel quiver is a legitimate non-2-regular quiver.
    """

    vertices: tuple
    arrows: tuple

    def __init__(self, vertices: Iterable[str], arrows: Iterable):
        verts = [str(v) for v in vertices]
        arrs = [a if isinstance(a, Arrow) else Arrow(*map(str, a)) for a in arrows]
        problems = []
        if len(set(verts)) != len(verts):
            problems.append(("MalformedQuiver", "duplicate vertex ids"))
        seen = set()
        for a in arrs:
            if a.id in seen:
                problems.append(("MalformedQuiver", f"duplicate arrow id {a.id!r}"))
            seen.add(a.id)
        vs = set(verts)
        for a in arrs:
            for end in (a.source, a.target):
                if end not in vs:
                    problems.append(
                        ("MalformedQuiver", f"arrow {a.id!r} uses undeclared vertex {end!r}")
                    )
        if problems:
            raise PROBLEM_CLASSES["MalformedQuiver"](problems)
        object.__setattr__(self, "vertices", tuple(sorted(vs)))
        object.__setattr__(self, "arrows", tuple(sorted(arrs, key=lambda a: a.id)))

    @cached_property
    def arrow(self) -> Mapping[str, Arrow]:
        return MappingProxyType({a.id: a for a in self.arrows})

    @property
    def arrow_ids(self) -> tuple:
        return tuple(a.id for a in self.arrows)

    def source(self, a: str) -> str:
        return self.arrow[a].source

    def target(self, a: str) -> str:
        return self.arrow[a].target

    @cached_property
    def outgoing(self) -> Mapping[str, tuple]:
        out = defaultdict(list)
        for a in self.arrows:
            out[a.source].append(a.id)
        return MappingProxyType({v: tuple(out[v]) for v in self.vertices})

    @cached_property
    def incoming(self) -> Mapping[str, tuple]:
        inc = defaultdict(list)
        for a in self.arrows:
            inc[a.target].append(a.id)
        return MappingProxyType({v: tuple(inc[v]) for v in self.vertices})

    def components(self) -> list[frozenset]:
        """Vertex sets of the connected components of the underlying graph."""
        adj = defaultdict(set)
        for a in self.arrows:
            adj[a.source].add(a.target)
            adj[a.target].add(a.source)
        left = set(self.vertices)
        comps = []
        for v in self.vertices:
            if v not in left:
                continue
            comp, stack = set(), [v]
            while stack:
                u = stack.pop()
                if u in comp:
                    continue
                comp.add(u)
                stack.extend(adj[u] - comp)
            left -= comp
            comps.append(frozenset(comp))
        return comps

    def loops(self) -> tuple:
        return tuple(a.id for a in self.arrows if a.is_loop)


def _diagnose(quiver: Quiver, f: Mapping[str, str]) -> list:
    problems = []
    ids = set(quiver.arrow_ids)
    if not quiver.vertices:
        problems.append(("Disconnected", "quiver has no vertices"))
    for v in quiver.vertices:
        n_out, n_in = len(quiver.outgoing[v]), len(quiver.incoming[v])
        if n_out != 2 or n_in != 2:
            problems.append(
                ("NotTwoRegular", f"vertex {v!r} has out-degree {n_out}, in-degree {n_in}")
            )
    keys, values = set(f), list(f.values())
    if keys != ids:
        missing = sorted(ids - keys)
        extra = sorted(keys - ids)
        if missing:
            problems.append(("NotBijective", f"f undefined on {missing}"))
        if extra:
            problems.append(("NotBijective", f"f defined on unknown arrows {extra}"))
    if set(values) - ids:
        problems.append(("NotBijective", f"f maps to unknown arrows {sorted(set(values) - ids)}"))
    if len(set(values)) != len(values):
        problems.append(("NotBijective", "f is not injective"))
    for a in sorted(keys & ids):
        b = f[a]
        if b in ids and quiver.source(b) != quiver.target(a):
            problems.append(
                ("NotAdmissible", f"s(f({a})) = {quiver.source(b)!r} != t({a}) = {quiver.target(a)!r}")
            )
    if quiver.vertices and len(quiver.components()) > 1:
        problems.append(("Disconnected", f"{len(quiver.components())} connected components"))
    return problems


@dataclass(frozen=True)
class OrbitDecomposition:
    """Cycles of a permutation, each rotated to start at its smallest id."""

    orbits: tuple
    index: Mapping[str, tuple]

    def orbit_of(self, a: str) -> tuple:
        return self.orbits[self.index[a][0]]

    def lengths(self) -> list[int]:
        return sorted(len(o) for o in self.orbits)

    def __len__(self):
        return len(self.orbits)

    def __iter__(self):
        return iter(self.orbits)


def orbits(perm: Mapping[str, str], arrows: Iterable[str] | None = None) -> OrbitDecomposition:
    """Decompose ``perm`` into cycles.

    >>> orbits({"a": "b", "b": "a", "c": "c"}).orbits
    (('a', 'b'), ('c',))
    """
    domain = set(perm) if arrows is None else set(arrows)
    if set(perm) != domain or set(perm.values()) != domain:
        raise NotBijective([("NotBijective", "permutation is not a bijection of the arrow set")])
    cycles = []
    seen = set()
    for start in sorted(domain):
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        nxt = perm[start]
        while nxt != start:
            if nxt in seen:
                raise NotBijective([("NotBijective", f"{nxt!r} reached twice")])
            cyc.append(nxt)
            seen.add(nxt)
            nxt = perm[nxt]
        cycles.append(tuple(cyc))  # start is the minimum of its cycle
    index = {}
    for i, cyc in enumerate(cycles):
        for pos, a in enumerate(cyc):
            index[a] = (i, pos)
    return OrbitDecomposition(tuple(cycles), MappingProxyType(index))


def _invert(perm: Mapping[str, str]) -> dict:
    return {v: k for k, v in perm.items()}


@dataclass(frozen=True)
class BiserialQuiver:
    """A validated pair (Q, f).  Construction raises on any violation."""

    quiver: Quiver
    f: Mapping[str, str] = field(repr=False)

    def __post_init__(self):
        f = {str(k): str(v) for k, v in dict(self.f).items()}
        problems = _diagnose(self.quiver, f)
        if problems:
            raise PROBLEM_CLASSES[problems[0][0]](problems)
        object.__setattr__(self, "f", MappingProxyType(dict(sorted(f.items()))))

    # -- derived permutations -------------------------------------------

    @cached_property
    def bar(self) -> Mapping[str, str]:
        b = {}
        for v, (a1, a2) in self.quiver.outgoing.items():
            b[a1], b[a2] = a2, a1
        return MappingProxyType(dict(sorted(b.items())))

    @cached_property
    def g(self) -> Mapping[str, str]:
        return MappingProxyType({a: self.bar[self.f[a]] for a in self.arrow_ids})

    @cached_property
    def f_inv(self) -> Mapping[str, str]:
        return MappingProxyType(_invert(self.f))

    @cached_property
    def g_inv(self) -> Mapping[str, str]:
        return MappingProxyType(_invert(self.g))

    @cached_property
    def f_orbits(self) -> OrbitDecomposition:
        return orbits(self.f)

    @cached_property
    def g_orbits(self) -> OrbitDecomposition:
        return orbits(self.g)

    # -- conveniences ---------------------------------------------------

    @property
    def vertices(self) -> tuple:
        return self.quiver.vertices

    @property
    def arrows(self) -> tuple:
        return self.quiver.arrows

    @property
    def arrow_ids(self) -> tuple:
        return self.quiver.arrow_ids

    def source(self, a: str) -> str:
        return self.quiver.source(a)

    def target(self, a: str) -> str:
        return self.quiver.target(a)

    def n(self, a: str) -> int:
        """Length of the g-orbit of ``a``."""
        return len(self.g_orbits.orbit_of(a))

    def r(self, a: str) -> int:
        """Length of the f-orbit of ``a``."""
        return len(self.f_orbits.orbit_of(a))

    def g_rep(self, a: str) -> str:
        return self.g_orbits.orbit_of(a)[0]

    def relabel(self, vertex_map: Mapping[str, str], arrow_map: Mapping[str, str]) -> "BiserialQuiver":
        q = Quiver(
            [vertex_map[v] for v in self.vertices],
            [Arrow(arrow_map[a.id], vertex_map[a.source], vertex_map[a.target]) for a in self.arrows],
        )
        return BiserialQuiver(q, {arrow_map[a]: arrow_map[b] for a, b in self.f.items()})


def validate(quiver: Quiver, f: Mapping[str, str]) -> BiserialQuiver:
    """Check every invariant of (quiver, f) and return the validated pair.

    On failure the raised :class:`~surfalg.errors.InvalidQuiver` subclass
    corresponds to the first problem found and lists all of them.
    """
    return BiserialQuiver(quiver, f)


def diagnose(quiver: Quiver, f: Mapping[str, str]) -> list:
    """All violated invariants as ``(code, detail)`` pairs; empty if valid."""
    return _diagnose(quiver, {str(k): str(v) for k, v in f.items()})


def derive_g(bq: BiserialQuiver) -> Mapping[str, str]:
    return bq.g


def is_triangulation_quiver(bq: BiserialQuiver) -> bool:
    f = bq.f
    return all(f[f[f[a]]] == a for a in bq.arrow_ids)


def border_vertices(bq: BiserialQuiver) -> frozenset:
    """Vertices carrying a loop fixed by f."""
    return frozenset(a.source for a in bq.arrows if a.is_loop and bq.f[a.id] == a.id)


def border_loops(bq: BiserialQuiver) -> tuple:
    return tuple(a.id for a in bq.arrows if a.is_loop and bq.f[a.id] == a.id)


def self_folded_triangles(bq: BiserialQuiver) -> list[tuple]:
    """The f-orbits of length 3 containing a loop."""
    if not is_triangulation_quiver(bq):
        raise NotTriangulation("f^3 is not the identity")
    loops = set(bq.quiver.loops())
    return [o for o in bq.f_orbits if len(o) == 3 and loops.intersection(o)]


def flags(bq: BiserialQuiver) -> list[str]:
    """Non-fatal remarks about a valid quiver."""
    out = []
    if len(bq.vertices) == 1 and is_triangulation_quiver(bq):
        # surface operations refuse these
        out.append("single-vertex-triangulation")
    return out


def random_biserial_quiver(n_vertices: int, seed: int, *, max_attempts: int = 10_000) -> BiserialQuiver:
    """A seeded random connected biserial quiver on ``n_vertices`` vertices.

    Out-slots are paired with in-slots by a random permutation; at every
    vertex a coin flip decides how f matches the two incoming arrows with
    the two outgoing ones.  Disconnected draws are resampled.
    """
    if n_vertices < 1:
        raise ValueError("n_vertices must be >= 1")
    rng = random.Random(seed)
    verts = [str(i) for i in range(1, n_vertices + 1)]
    width = len(str(2 * n_vertices - 1))
    names = [f"a{i:0{width}d}" for i in range(2 * n_vertices)]
    for _ in range(max_attempts):
        heads = [v for v in verts for _ in range(2)]
        rng.shuffle(heads)
        arrows = [Arrow(names[k], verts[k // 2], heads[k]) for k in range(2 * n_vertices)]
        q = Quiver(verts, arrows)
        if len(q.components()) > 1:
            continue
        f = {}
        for v in verts:
            i1, i2 = q.incoming[v]
            o1, o2 = q.outgoing[v]
            if rng.random() < 0.5:
                f[i1], f[i2] = o1, o2
            else:
                f[i1], f[i2] = o2, o1
        return BiserialQuiver(q, f)
    raise GenerationFailed(f"no connected quiver after {max_attempts} attempts")
