"""Relation families, bases, dimensions and Cartan matrices.

Paths are read left to right: ``a*b`` means ``a`` followed by ``b``, so
the target of ``a`` is the source of ``b``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from .errors import EmptyBorder, NotTriangulation, TooShort, UnknownArrow, WeightTooSmall
from .quiver import Quiver, border_loops, is_triangulation_quiver
from .scalars import Scalar, coerce, is_zero, parse_scalar
from .weighted import WeightedBiserialQuiver

KINDS = ("biserial", "border", "weighted-triangulation")


@dataclass(frozen=True, order=True)
class Path:
    """A path given by its start vertex and arrow sequence.

    The empty sequence is the stationary path ``e_start``.
    """

    start: str
    arrows: tuple = ()

    def __len__(self):
        return len(self.arrows)

    def end(self, quiver) -> str:
        return quiver.target(self.arrows[-1]) if self.arrows else self.start

    def is_valid(self, quiver) -> bool:
        cur = self.start
        for a in self.arrows:
            if a not in quiver.arrow or quiver.source(a) != cur:
                return False
            cur = quiver.target(a)
        return True

    def __str__(self):
        return "*".join(self.arrows) if self.arrows else f"e_{self.start}"


def _path(bq, arrows: Sequence[str]) -> Path:
    return Path(bq.source(arrows[0]), tuple(arrows))


@dataclass(frozen=True)
class Relation:
    """``left = 0`` (kind ``zero``) or ``left = scalar * right`` (kind ``binomial``)."""

    kind: str
    left: Path
    scalar: Scalar | None = None
    right: Path | None = None

    def __str__(self):
        if self.kind == "zero":
            return f"{self.left} = 0"
        s = str(self.scalar)
        if " " in s:
            s = f"({s})"
        return f"{self.left} = {s} * {self.right}"


def zero(p: Path) -> Relation:
    return Relation("zero", p)


def binomial(left: Path, scalar: Scalar, right: Path) -> Relation:
    if is_zero(scalar):
        return zero(left)
    return Relation("binomial", left, scalar, right)


@dataclass(frozen=True)
class AlgebraPresentation:
    wbq: WeightedBiserialQuiver
    kind: str
    relations: tuple
    virtual_loops: frozenset
    gabriel_arrows: tuple

    def text(self) -> str:
        return "\n".join(str(r) for r in self.relations)


def cycle_B(wbq: WeightedBiserialQuiver, a: str) -> Path:
    bq = wbq.bq
    if a not in bq.quiver.arrow:
        raise UnknownArrow(a)
    orbit = bq.g_orbits.orbit_of(a)
    i = orbit.index(a)
    rotated = orbit[i:] + orbit[:i]
    return _path(bq, rotated * wbq.m(a))


def path_A(wbq: WeightedBiserialQuiver, a: str) -> Path:
    B = cycle_B(wbq, a)
    if len(B) < 2:
        raise TooShort(f"m*n = 1 for {a!r}")
    return Path(B.start, B.arrows[:-1])


def _unit(wbq):
    return coerce(parse_scalar(1), wbq.p)


def _socle_relations(wbq) -> list[Relation]:
    bq = wbq.bq
    one = _unit(wbq)
    rels = []
    for v in bq.vertices:
        a, b = sorted(bq.quiver.outgoing[v])
        rels.append(binomial(cycle_B(wbq, a), one, cycle_B(wbq, b)))
    return rels


def _presentation(wbq, kind, relations, virtual) -> AlgebraPresentation:
    arrows = tuple(a for a in wbq.arrow_ids if a not in virtual)
    return AlgebraPresentation(wbq, kind, tuple(sorted(relations, key=str)), frozenset(virtual), arrows)


def relations_biserial(wbq: WeightedBiserialQuiver) -> AlgebraPresentation:
    bq = wbq.bq
    rels = [zero(_path(bq, (a, bq.f[a]))) for a in bq.arrow_ids]
    rels += _socle_relations(wbq)
    return _presentation(wbq, "biserial", rels, wbq.virtual_loops)


def relations_border(wbq: WeightedBiserialQuiver) -> AlgebraPresentation:
    bq = wbq.bq
    loops = set(border_loops(bq))
    if not loops:
        raise EmptyBorder("the quiver has no f-fixed loops")
    rels = []
    for a in bq.arrow_ids:
        left = _path(bq, (a, bq.f[a]))
        if a in loops:
            rels.append(binomial(left, wbq.b(bq.source(a)), cycle_B(wbq, a)))
        else:
            rels.append(zero(left))
    rels += _socle_relations(wbq)
    return _presentation(wbq, "border", rels, wbq.virtual_loops)


def relations_weighted_triangulation(wbq: WeightedBiserialQuiver) -> AlgebraPresentation:
    """Missing parameters are read as the constant function 1."""
    bq = wbq.bq
    if not is_triangulation_quiver(bq):
        raise NotTriangulation("f^3 is not the identity")
    small = [a for a in bq.arrow_ids if wbq.mn(a) < 3]
    if small:
        raise WeightTooSmall(small)
    f, g, bar = bq.f, bq.g, bq.bar
    rels = []
    for a in bq.arrow_ids:
        rels.append(binomial(_path(bq, (a, f[a])), wbq.c(bar[a]), path_A(wbq, bar[a])))
        rels.append(zero(_path(bq, (a, f[a], g[f[a]]))))
    return _presentation(wbq, "weighted-triangulation", rels, frozenset())


def basis_paths(pres: AlgebraPresentation) -> list[Path]:
    """e_i, the proper nonempty prefixes of both cycles at i, and one socle path."""
    if pres.kind not in ("biserial", "border"):
        raise ValueError("basis enumeration needs a biserial or border presentation")
    wbq = pres.wbq
    bq = wbq.bq
    basis = []
    for v in bq.vertices:
        a, b = sorted(bq.quiver.outgoing[v])
        basis.append(Path(v))
        for x in (a, b):
            B = cycle_B(wbq, x)
            basis.extend(Path(v, B.arrows[:k]) for k in range(1, len(B)))
        basis.append(cycle_B(wbq, a))
    return basis


def dimension(pres: AlgebraPresentation) -> int:
    wbq = pres.wbq
    return sum(wbq.weights[o[0]] * len(o) ** 2 for o in wbq.bq.g_orbits)


def cartan_matrix(pres: AlgebraPresentation) -> tuple:
    """Rows and columns follow the sorted vertex order."""
    q = pres.wbq.bq.quiver
    counts = Counter((p.start, p.end(q)) for p in basis_paths(pres))
    return tuple(tuple(counts[(i, j)] for j in q.vertices) for i in q.vertices)


def gabriel_quiver(pres: AlgebraPresentation) -> Quiver:
    q = pres.wbq.bq.quiver
    return Quiver(q.vertices, [a for a in q.arrows if a.id not in pres.virtual_loops])


def build(wbq: WeightedBiserialQuiver, kind: str) -> AlgebraPresentation:
    return {
        "biserial": relations_biserial,
        "border": relations_border,
        "weighted": relations_weighted_triangulation,
        "weighted-triangulation": relations_weighted_triangulation,
    }[kind](wbq)
