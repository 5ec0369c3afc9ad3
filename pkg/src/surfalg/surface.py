"""Invariants of the closed ribbon surface of a biserial quiver.

Thickening the Brauer graph gives an oriented surface whose boundary
components are the f-orbits; capping each with a disk closes it up.
Different surfaces can share a quiver, so these numbers describe this
particular surface only.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

from .errors import TooSmall
from .quiver import BiserialQuiver, border_loops


@dataclass(frozen=True)
class SurfaceReport:
    n_g_orbits: int
    n_quiver_vertices: int
    n_f_orbits: int
    euler_characteristic: int
    genus: int | None
    n_border_loops: int
    n_triangle_faces: int

    def as_dict(self) -> dict:
        return asdict(self)


def surface_report(bq: BiserialQuiver) -> SurfaceReport:
    if len(bq.vertices) < 2:
        raise TooSmall("surface invariants need at least two vertices")
    ng, nv, nf = len(bq.g_orbits), len(bq.vertices), len(bq.f_orbits)
    chi = ng - nv + nf
    genus = (2 - chi) // 2 if chi % 2 == 0 and chi <= 2 else None
    return SurfaceReport(
        n_g_orbits=ng,
        n_quiver_vertices=nv,
        n_f_orbits=nf,
        euler_characteristic=chi,
        genus=genus,
        n_border_loops=len(border_loops(bq)),
        n_triangle_faces=sum(1 for o in bq.f_orbits if len(o) == 3),
    )
