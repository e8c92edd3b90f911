"""Nondominance filtering, ideal points, and inner-stage efficient fronts."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .instances import DEFAULT_TOL, Instance, Tolerance, Vec
from .relations import VecRel, vec_cmp


class Orientation(Enum):
    MIN = "min"
    MAX = "max"


@dataclass(frozen=True)
class FrontSet:
    """A nondominated set, lexicographically ordered for determinism."""

    points: tuple[Vec, ...]
    orientation: Orientation

    def __iter__(self):
        return iter(self.points)

    def __len__(self):
        return len(self.points)


def _vec_eq(a: Vec, b: Vec, tol: Tolerance) -> bool:
    return all(tol.eq(a[i], b[i]) for i in range(len(a)))


def nondominated(points, orientation: Orientation = Orientation.MIN,
                 tol: Tolerance = DEFAULT_TOL) -> FrontSet:
    """Keep exactly the members no other member dominates; collapse duplicates.

    Domination is the componentwise <=-and-not-equal relation (reversed for
    MAX).  Reference O(|S|^2) pairwise filter; duplicates under tolerance
    equality keep one representative (the lexicographically smallest).
    """
    pts = sorted(tuple(p) for p in points)
    if not pts:
        raise ValueError("nondominated() requires a non-empty point set")
    keep: list[Vec] = []
    for p in pts:
        if orientation is Orientation.MIN:
            dominated = any(vec_cmp(q, p, VecRel.LEQ, tol) for q in pts)
        else:
            dominated = any(vec_cmp(p, q, VecRel.LEQ, tol) for q in pts)
        if dominated:
            continue
        if any(_vec_eq(p, k, tol) for k in keep):
            continue
        keep.append(p)
    return FrontSet(tuple(keep), orientation)


def inner_efficient(inst: Instance, x: str, u: str,
                    tol: Tolerance = DEFAULT_TOL) -> FrontSet:
    """Efficient front of the recourse image at one (decision, scenario) pair."""
    key = ("front", x, u, tol.tau)
    hit = inst._cache.get(key)
    if hit is None:
        hit = nondominated(inst.points(x, u), Orientation.MIN, tol)
        inst._cache[key] = hit
    return hit


def ideal(points, orientation: Orientation = Orientation.MIN) -> Vec:
    """Componentwise minimum (MIN) or maximum (MAX) over a non-empty set."""
    pts = [tuple(p) for p in points]
    if not pts:
        raise ValueError("ideal() requires a non-empty point set")
    n = len(pts[0])
    agg = min if orientation is Orientation.MIN else max
    return tuple(agg(p[i] for p in pts) for i in range(n))
