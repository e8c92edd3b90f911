"""Three computational concepts for finite three-stage instances.

* weighted sum: scalarize with simplex weights first, then take the
  worst-case best recourse value, ``f_lambda``;
* constraint: cap all objectives but one, minimize the free one, worst case
  over scenarios, ``f_eps_j`` (an empty admissible set yields +inf);
* point-based: per-objective worst-case best value, ``f_pb``.

The first two come with scenario-independent guarantees; the point-based
value is bounded only by the ideal points of the reachable outcome set.
Selection semantics on scalar values: the plain efficient set is the
minimizer set, the strict one is the unique minimizer (ties empty it).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .efficiency import Strictness
from .instances import DEFAULT_TOL, INF, Instance, InstanceError, Tolerance, Vec
from .pareto import Orientation, ideal
from .relations import VecRel, Weight, dot, vec_cmp

_VEC_REL = {
    Strictness.STRICT: VecRel.LEQQ,
    Strictness.PLAIN: VecRel.LEQ,
    Strictness.WEAK: VecRel.LT,
}


@dataclass(frozen=True)
class GenBound:
    """Generating bound for the constraint concept: caps ``eps_i`` for every
    objective ``i`` except the (1-based) minimized index ``j``; ``eps_j`` is
    stored but never read."""

    eps: Vec
    j: int

    def __post_init__(self):
        object.__setattr__(self, "eps", tuple(float(c) for c in self.eps))
        if not isinstance(self.j, int) or self.j < 1 or self.j > len(self.eps):
            raise ValueError(f"objective index must lie in 1..{len(self.eps)}, got {self.j}")
        for c in self.eps:
            if math.isnan(c):
                raise ValueError("generating bound entries must not be NaN")


@dataclass(frozen=True)
class Guarantee:
    """Scenario-independent bound certified for an efficient decision."""

    value: float
    concept: str  # "ws" or "eps"
    lam: Vec | None = None
    eps: Vec | None = None
    j: int | None = None


@dataclass(frozen=True)
class Selection:
    """Efficient decisions of a scalar concept, with guarantees and flags.

    ``strict_empty_tie`` marks a strict selection emptied by ties, in which
    case ``plain_guarantee`` reports the minimizer-set guarantee instead;
    ``infeasible`` marks a constraint selection where every decision is +inf.
    """

    entries: tuple[tuple[str, Guarantee], ...]
    strict_empty_tie: bool = False
    plain_guarantee: float | None = None
    infeasible: bool = False

    @property
    def decisions(self) -> tuple[str, ...]:
        return tuple(x for x, _ in self.entries)


def f_lambda(inst: Instance, x: str, lam: Weight) -> float:
    """Worst case over scenarios of the best weighted sum over recourse."""
    if len(lam.values) != inst.n:
        raise InstanceError(f"weight length {len(lam.values)} != objective count {inst.n}")
    if x not in inst.decisions:
        raise InstanceError(f"unknown decision {x!r}")
    return max(min(dot(lam.values, p) for p in inst.points(x, u)) for u in inst.scenarios)


def f_eps_j(inst: Instance, x: str, gb: GenBound, tol: Tolerance = DEFAULT_TOL) -> float:
    """Worst case over scenarios of the capped minimum of objective ``j``.

    Scenarios whose recourse image violates some cap everywhere contribute
    +inf; with at least one scenario present the -inf convention for an
    empty outer maximization can never fire, but ``max`` over a non-empty
    sequence matches it anyway.
    """
    if len(gb.eps) != inst.n:
        raise InstanceError(f"bound length {len(gb.eps)} != objective count {inst.n}")
    k = gb.j - 1
    per_scenario = []
    for u in inst.scenarios:
        best = INF
        for p in inst.points(x, u):
            if all(tol.leq(p[i], gb.eps[i]) for i in range(inst.n) if i != k):
                if p[k] < best:
                    best = p[k]
        per_scenario.append(best)
    return max(per_scenario)


def f_pb(inst: Instance, x: str) -> Vec:
    """Per-objective worst case over scenarios of the best recourse value."""
    if x not in inst.decisions:
        raise InstanceError(f"unknown decision {x!r}")
    return tuple(
        max(min(p[i] for p in inst.points(x, u)) for u in inst.scenarios)
        for i in range(inst.n)
    )


def _select_minimizers(inst: Instance, values: dict[str, float],
                       strictness: Strictness, tol: Tolerance):
    if strictness is Strictness.WEAK:
        raise ValueError("scalar concepts come in strict/plain variants only")
    beats = tol.leq if strictness is Strictness.STRICT else tol.lt
    selected = tuple(
        x for x in inst.decisions
        if not any(beats(values[xp], values[x]) for xp in inst.decisions if xp != x)
    )
    strict_empty = strictness is Strictness.STRICT and not selected
    plain_guarantee = min(values.values()) if strict_empty else None
    return selected, strict_empty, plain_guarantee


def ws_efficient_set(inst: Instance, lam: Weight,
                     strictness: Strictness = Strictness.PLAIN,
                     tol: Tolerance = DEFAULT_TOL) -> Selection:
    values = {x: f_lambda(inst, x, lam) for x in inst.decisions}
    selected, strict_empty, plain_g = _select_minimizers(inst, values, strictness, tol)
    entries = tuple(
        (x, Guarantee(values[x], "ws", lam=lam.values)) for x in selected
    )
    return Selection(entries, strict_empty_tie=strict_empty, plain_guarantee=plain_g)


def eps_efficient_set(inst: Instance, gb: GenBound,
                      strictness: Strictness = Strictness.PLAIN,
                      tol: Tolerance = DEFAULT_TOL) -> Selection:
    values = {x: f_eps_j(inst, x, gb, tol) for x in inst.decisions}
    selected, strict_empty, plain_g = _select_minimizers(inst, values, strictness, tol)
    entries = tuple(
        (x, Guarantee(values[x], "eps", eps=gb.eps, j=gb.j)) for x in selected
    )
    return Selection(
        entries,
        strict_empty_tie=strict_empty,
        plain_guarantee=plain_g,
        infeasible=all(v == INF for v in values.values()),
    )


def pb_efficient_set(inst: Instance, strictness: Strictness = Strictness.PLAIN,
                     tol: Tolerance = DEFAULT_TOL) -> tuple[str, ...]:
    """Decisions whose point-based value no competitor relates below."""
    rel = _VEC_REL[strictness]
    values = {x: f_pb(inst, x) for x in inst.decisions}
    return tuple(
        x for x in inst.decisions
        if not any(vec_cmp(values[xp], values[x], rel, tol)
                   for xp in inst.decisions if xp != x)
    )


def _gval(g) -> float:
    return g.value if isinstance(g, Guarantee) else float(g)


def check_ws_bound(inst: Instance, x: str, lam: Weight, g,
                   tol: Tolerance = DEFAULT_TOL) -> bool:
    """Every scenario admits a recourse point with weighted sum within the
    guarantee."""
    gv = _gval(g)
    return all(
        any(tol.leq(dot(lam.values, p), gv) for p in inst.points(x, u))
        for u in inst.scenarios
    )


def check_eps_bound(inst: Instance, x: str, gb: GenBound, g,
                    tol: Tolerance = DEFAULT_TOL) -> bool:
    """Every scenario admits a point meeting all caps and the guarantee on
    objective ``j``.  An infinite guarantee can only verify when every
    scenario is cap-feasible, so genuinely infeasible guarantees fail."""
    gv = _gval(g)
    k = gb.j - 1
    return all(
        any(
            all(tol.leq(p[i], gb.eps[i]) for i in range(inst.n) if i != k)
            and tol.leq(p[k], gv)
            for p in inst.points(x, u)
        )
        for u in inst.scenarios
    )


def pb_trivial_bounds(inst: Instance, x: str,
                      tol: Tolerance = DEFAULT_TOL) -> tuple[Vec, Vec, bool]:
    """Ideal-point sandwich around the point-based value: the componentwise
    min and max of the outcome set reachable by ``x``, and whether the value
    lies between them."""
    union = [p for u in inst.scenarios for p in inst.points(x, u)]
    lo = ideal(union, Orientation.MIN)
    hi = ideal(union, Orientation.MAX)
    v = f_pb(inst, x)
    holds = vec_cmp(lo, v, VecRel.LEQQ, tol) and vec_cmp(v, hi, VecRel.LEQQ, tol)
    return lo, hi, holds
