"""Efficiency checkers for finite three-stage instances.

The three-stage notions compare, per scenario, the efficient fronts of the
recourse images of two decisions under a selected set relation:

* flimsy: some scenario has no dominating competitor,
* highly: no scenario has a dominating competitor,
* multi-scenario (strict only): no competitor dominates in every scenario
  simultaneously.

Strict variants use the non-strict set relation, weak variants the strict
one.  Negative verdicts carry a replayable witness: the dominating decision
per scenario at which the defining relation held.

``mro_efficient`` evaluates the corresponding single-valued robust notions
(plus the point-based one) on instances whose recourse images are all
singletons, where the three-stage problem collapses to a two-stage one.
``smaro_set`` computes the stagewise min/max/min nondominance nesting; the
fixtures FIG2L/FIG2R document why membership in it is not a trustworthy
efficiency notion.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from enum import Enum

from .instances import DEFAULT_TOL, Instance, InstanceError, Tolerance
from .pareto import FrontSet, Orientation, inner_efficient, nondominated
from .relations import SetRelSpec, VecRel, set_cmp, vec_cmp


class Kind(Enum):
    FLIMSY = "flimsy"
    HIGHLY = "highly"
    MULTI_SCENARIO = "multi-scenario"
    POINT_BASED = "point-based"


class Strictness(Enum):
    STRICT = "strict"
    PLAIN = "plain"
    WEAK = "weak"


@dataclass(frozen=True)
class Witness:
    """Dominating competitor(s): (scenario, dominator) pairs plus the
    representative dominator.  Replaying each pair through the deciding
    relation reproduces the domination."""

    xprime: str
    scenario_map: tuple[tuple[str, str], ...]


@dataclass(frozen=True)
class Verdict:
    efficient: bool
    witness: Witness | None = None

    def __post_init__(self):
        if self.efficient == (self.witness is not None):
            raise ValueError("witness present iff not efficient")


_EFFICIENT = Verdict(True, None)


def derived_set_relation(spec: SetRelSpec, strictness: Strictness) -> SetRelSpec:
    """Strictness of the deciding set relation is derived from the notion:
    strict notions use the non-strict relation, weak notions the strict one."""
    return replace(spec, strict=(strictness is Strictness.WEAK))


def _check_decision(inst: Instance, x: str):
    if x not in inst.decisions:
        raise InstanceError(f"unknown decision {x!r}")


def maro_efficient(inst: Instance, x: str, kind: Kind, strictness: Strictness,
                   spec: SetRelSpec, tol: Tolerance = DEFAULT_TOL) -> Verdict:
    """Decide three-stage efficiency of ``x`` under the selected set relation.

    Competitors are scanned in lexicographic order and scenarios in document
    order, so negative verdicts are deterministic.
    """
    _check_decision(inst, x)
    if kind is Kind.POINT_BASED:
        raise ValueError("point-based efficiency is a vector notion; "
                         "see mro_efficient or pb_efficient_set")
    if strictness is Strictness.PLAIN:
        raise ValueError("three-stage notions come in strict/weak variants only")
    if kind is Kind.MULTI_SCENARIO and strictness is not Strictness.STRICT:
        raise ValueError("weak multi-scenario efficiency is undefined")
    rel = derived_set_relation(spec, strictness)
    others = sorted(d for d in inst.decisions if d != x)

    def dominates(xp: str, u: str) -> bool:
        return set_cmp(inner_efficient(inst, xp, u, tol).points,
                       inner_efficient(inst, x, u, tol).points, rel, tol)

    if kind is Kind.MULTI_SCENARIO:
        for xp in others:
            if all(dominates(xp, u) for u in inst.scenarios):
                return Verdict(False, Witness(xp, tuple((u, xp) for u in inst.scenarios)))
        return _EFFICIENT

    per_scenario: list[tuple[str, str]] = []
    for u in inst.scenarios:
        dom = next((xp for xp in others if dominates(xp, u)), None)
        if dom is None:
            if kind is Kind.FLIMSY:
                return _EFFICIENT
        else:
            if kind is Kind.HIGHLY:
                return Verdict(False, Witness(dom, ((u, dom),)))
            per_scenario.append((u, dom))
    if kind is Kind.HIGHLY:
        return _EFFICIENT
    # flimsy failed: every scenario produced a dominator
    return Verdict(False, Witness(per_scenario[0][1], tuple(per_scenario)))


@dataclass(frozen=True)
class SmaroResult:
    decisions: tuple[str, ...]
    front: FrontSet


def smaro_set(inst: Instance, tol: Tolerance = DEFAULT_TOL) -> SmaroResult:
    """Stagewise nesting: per (x,u) the min-front of the recourse image, per x
    the max-front of their union over scenarios, then the min-front of the
    union over decisions.  Returns the surviving points and every decision
    contributing at least one of them."""
    mid: dict[str, FrontSet] = {}
    pool: list = []
    for x in inst.decisions:
        union = {p for u in inst.scenarios for p in inner_efficient(inst, x, u, tol).points}
        mid[x] = nondominated(union, Orientation.MAX, tol)
        pool.extend(mid[x].points)
    outer = nondominated(set(pool), Orientation.MIN, tol)

    def _eq(a, b):
        return all(tol.eq(a[i], b[i]) for i in range(len(a)))

    survivors = tuple(
        x for x in inst.decisions
        if any(_eq(p, q) for p in mid[x].points for q in outer.points)
    )
    return SmaroResult(survivors, outer)


_VEC_REL = {
    Strictness.STRICT: VecRel.LEQQ,
    Strictness.PLAIN: VecRel.LEQ,
    Strictness.WEAK: VecRel.LT,
}


def _singleton_values(inst: Instance) -> dict[tuple[str, str], tuple[float, ...]]:
    vals = {}
    for key, pts in inst.recourse.items():
        if len(pts) != 1:
            raise InstanceError(
                f"recourse.{key[0]}.{key[1]}: two-stage robust notions need "
                f"singleton recourse sets, found {len(pts)} points"
            )
        vals[key] = pts[0]
    return vals


def mro_efficient(inst: Instance, x: str, kind: Kind, strictness: Strictness,
                  tol: Tolerance = DEFAULT_TOL) -> Verdict:
    """Two-stage robust efficiency on singleton-recourse instances.

    Strictness selects the vector relation (strict: componentwise <=;
    plain: <= and not equal; weak: componentwise <).  The multi-scenario
    notion exists in strict and plain variants only.
    """
    _check_decision(inst, x)
    vals = _singleton_values(inst)
    if kind is Kind.MULTI_SCENARIO and strictness is Strictness.WEAK:
        raise ValueError("weak multi-scenario efficiency is undefined")
    rel = _VEC_REL[strictness]
    others = sorted(d for d in inst.decisions if d != x)

    if kind is Kind.POINT_BASED:
        def maxvec(d):
            return tuple(max(vals[(d, u)][i] for u in inst.scenarios)
                         for i in range(inst.n))
        mine = maxvec(x)
        for xp in others:
            if vec_cmp(maxvec(xp), mine, rel, tol):
                return Verdict(False, Witness(xp, ()))
        return _EFFICIENT

    if kind is Kind.MULTI_SCENARIO:
        for xp in others:
            leqq_all = all(
                vec_cmp(vals[(xp, u)], vals[(x, u)], VecRel.LEQQ, tol)
                for u in inst.scenarios
            )
            if not leqq_all:
                continue
            if strictness is Strictness.PLAIN and not any(
                vec_cmp(vals[(xp, u)], vals[(x, u)], VecRel.LEQ, tol)
                for u in inst.scenarios
            ):
                continue
            return Verdict(False, Witness(xp, tuple((u, xp) for u in inst.scenarios)))
        return _EFFICIENT

    per_scenario: list[tuple[str, str]] = []
    for u in inst.scenarios:
        dom = next(
            (xp for xp in others if vec_cmp(vals[(xp, u)], vals[(x, u)], rel, tol)),
            None,
        )
        if dom is None:
            if kind is Kind.FLIMSY:
                return _EFFICIENT
        else:
            if kind is Kind.HIGHLY:
                return Verdict(False, Witness(dom, ((u, dom),)))
            per_scenario.append((u, dom))
    if kind is Kind.HIGHLY:
        return _EFFICIENT
    return Verdict(False, Witness(per_scenario[0][1], tuple(per_scenario)))
