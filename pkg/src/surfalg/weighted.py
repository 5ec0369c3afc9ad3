"""Weighted biserial quivers: weights per g-orbit, plus optional border and
parameter functions."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import cached_property
from types import MappingProxyType
from typing import Mapping

from .errors import ExcludedDegenerate, GenerationFailed, InvalidWeights
from .quiver import BiserialQuiver, border_vertices, random_biserial_quiver
from .scalars import Scalar, coerce, is_zero, parse_scalar


def _normalize_orbit_keyed(bq: BiserialQuiver, data: Mapping, what: str) -> dict:
    out = {}
    for key, value in data.items():
        if key not in bq.g_orbits.index:
            raise InvalidWeights(f"{what} key {key!r} is not an arrow")
        rep = bq.g_rep(key)
        if rep in out and out[rep] != value:
            raise InvalidWeights(f"conflicting {what} values on the g-orbit of {rep!r}")
        out[rep] = value
    return out


@dataclass(frozen=True)
class WeightedBiserialQuiver:
    """A biserial quiver with a weight on every g-orbit.

    ``weights`` and ``params`` may be keyed by any arrow of an orbit; they
    are stored keyed by the orbit's smallest arrow id.  ``border`` maps
    border vertices to scalars, and a missing key means zero.  ``p``
    selects the coefficient field: ``None`` for the rationals, a prime for
    F_p.
    """

    bq: BiserialQuiver
    weights: Mapping[str, int]
    border: Mapping[str, Scalar] | None = None
    params: Mapping[str, Scalar] | None = None
    p: int | None = field(default=None)

    def __post_init__(self):
        bq = self.bq
        w = _normalize_orbit_keyed(bq, dict(self.weights), "weight")
        for rep, m in w.items():
            if isinstance(m, bool) or not isinstance(m, int) or m < 1:
                raise InvalidWeights(f"weight of the g-orbit of {rep!r} must be a positive integer, got {m!r}")
        missing = [o[0] for o in bq.g_orbits if o[0] not in w]
        if missing:
            raise InvalidWeights(f"no weight for the g-orbits of {missing}")
        object.__setattr__(self, "weights", MappingProxyType(dict(sorted(w.items()))))

        if self.border is not None:
            allowed = border_vertices(bq)
            b = {}
            for v, s in dict(self.border).items():
                if v not in allowed:
                    raise InvalidWeights(f"border key {v!r} is not a border vertex")
                try:
                    b[v] = coerce(parse_scalar(s), self.p)
                except ValueError as exc:
                    raise InvalidWeights(f"border value at {v!r}: {exc}") from None
            object.__setattr__(self, "border", MappingProxyType(dict(sorted(b.items()))))

        if self.params is not None:
            raw = {}
            for k, s in dict(self.params).items():
                try:
                    raw[k] = coerce(parse_scalar(s), self.p)
                except ValueError as exc:
                    raise InvalidWeights(f"parameter at {k!r}: {exc}") from None
            c = _normalize_orbit_keyed(bq, raw, "parameter")
            for rep, s in c.items():
                if is_zero(s):
                    raise InvalidWeights(f"parameter of the g-orbit of {rep!r} is zero")
            object.__setattr__(self, "params", MappingProxyType(dict(sorted(c.items()))))

        if self.is_degenerate():
            raise ExcludedDegenerate("one vertex with two virtual loops (the algebra K[X]/(X^2))")

    def m(self, a: str) -> int:
        return self.weights[self.bq.g_rep(a)]

    def n(self, a: str) -> int:
        return self.bq.n(a)

    def mn(self, a: str) -> int:
        return self.m(a) * self.bq.n(a)

    def b(self, v: str) -> Scalar:
        """Border value at ``v``; zero when unset."""
        zero = coerce(parse_scalar(0), self.p)
        if self.border is None:
            return zero
        return self.border.get(v, zero)

    def c(self, a: str) -> Scalar:
        """Parameter of the g-orbit of ``a``; one when no parameters are set."""
        one = coerce(parse_scalar(1), self.p)
        if self.params is None:
            return one
        return self.params.get(self.bq.g_rep(a), one)

    @cached_property
    def virtual_loops(self) -> frozenset:
        return frozenset(a for a in self.bq.arrow_ids if self.mn(a) == 1)

    def is_degenerate(self) -> bool:
        return len(self.bq.vertices) == 1 and len(self.virtual_loops) == 2

    def with_(self, **changes) -> "WeightedBiserialQuiver":
        kw = dict(bq=self.bq, weights=self.weights, border=self.border, params=self.params, p=self.p)
        kw.update(changes)
        return WeightedBiserialQuiver(**kw)

    @property
    def vertices(self):
        return self.bq.vertices

    @property
    def arrows(self):
        return self.bq.arrows

    @property
    def arrow_ids(self):
        return self.bq.arrow_ids


def trivial_weights(bq: BiserialQuiver) -> dict:
    return {o[0]: 1 for o in bq.g_orbits}


def random_weighted_quiver(
    n_vertices: int,
    seed: int,
    *,
    max_weight: int = 3,
    with_border: bool = False,
) -> WeightedBiserialQuiver:
    """Random quiver with weights in ``1..max_weight``.

    With ``with_border`` every border vertex gets a random small rational.
    The excluded degenerate configuration is skipped by reseeding.
    """
    rng = random.Random(seed)
    for _ in range(10_000):
        bq = random_biserial_quiver(n_vertices, rng.randrange(2**32))
        weights = {o[0]: rng.randint(1, max_weight) for o in bq.g_orbits}
        border = None
        if with_border:
            border = {v: str(rng.randint(-3, 3)) for v in sorted(border_vertices(bq))}
        try:
            return WeightedBiserialQuiver(bq, weights, border=border)
        except ExcludedDegenerate:
            continue
    raise GenerationFailed("only degenerate draws")
