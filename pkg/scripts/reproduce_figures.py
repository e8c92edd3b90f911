#!/usr/bin/env python3
"""Walk every built-in fixture and print the facts it was built to show.

Usage: python scripts/reproduce_figures.py
"""

from __future__ import annotations

from maro import (
    GenBound,
    Kind,
    SetRelFamily,
    SetRelSpec,
    Strictness,
    VecRel,
    Weight,
    WeightGrid,
    eps_efficient_set,
    f_pb,
    fixture,
    fixture_meta,
    image_ws_grid,
    inner_efficient,
    maro_efficient,
    pb_efficient_set,
    pb_trivial_bounds,
    smaro_set,
    vec_cmp,
    ws_efficient_set,
    ws_image_gaps,
)

LOWER = SetRelSpec(SetRelFamily.LOWER)


def fig2():
    for name, story in (("FIG2L", "nesting set drops x1 although nothing beats it"),
                        ("FIG2R", "nesting set keeps x1 although x2 beats it everywhere")):
        inst = fixture(name)
        print(f"{name}: {story}")
        for x in inst.decisions:
            v = maro_efficient(inst, x, Kind.MULTI_SCENARIO, Strictness.STRICT, LOWER)
            tail = "" if v.efficient else f" (dominated by {v.witness.xprime})"
            print(f"  {x}: strictly multi-scenario efficient (lower) = {v.efficient}{tail}")
        print(f"  nesting-set decisions: {smaro_set(inst).decisions}")


def fig3():
    inst = fixture("FIG3S")
    grid = WeightGrid(2, 100)
    pts = sorted({p for _, p in image_ws_grid(inst, grid)})
    dominated = sum(
        1 for p in pts if any(q != p and vec_cmp(q, p, VecRel.LT) for q in pts)
    )
    print(f"FIG3S: weighted-sum grid image has {len(pts)} points, "
          f"{dominated} strictly dominated (so the image is no Pareto front)")
    for g in ws_image_gaps(inst, grid):
        print(f"  gap at lambda={g.lam}: {g.a} .. {g.b} (distance {g.distance:.2f})")


def fig4():
    inst = fixture("FIG4")
    print("FIG4: point-based values can only be bounded by the ideal points")
    for x in inst.decisions:
        lo, hi, _ = pb_trivial_bounds(inst, x)
        print(f"  f_pb({x}) = {f_pb(inst, x)}, ideal sandwich {lo} .. {hi}")
    print(f"  plain point-based efficient set: {pb_efficient_set(inst)}")


def fig5():
    inst = fixture("FIG5")
    print("FIG5: a point-based value can sit on either side of real outcomes")
    v1, v3 = f_pb(inst, "x1"), f_pb(inst, "x3")
    print(f"  f_pb(x1) = {v1}, weakly dominated by (2,8) in x1's own outcomes: "
          f"{vec_cmp((2.0, 8.0), v1, VecRel.LEQ)}")
    f31 = inner_efficient(inst, 'x3', 'u1').points
    f32 = inner_efficient(inst, 'x3', 'u2').points
    print(f"  f_pb(x3) = {v3}, above all of {f31}, below all of {f32}")


def fig6():
    for name in ("FIG6L", "FIG6R"):
        inst = fixture(name)
        sep = fixture_meta(name)["separation"]
        lam, gb = Weight(sep["lambda"]), GenBound(sep["eps"], sep["j"])
        ws = ws_efficient_set(inst, lam).decisions
        ep = eps_efficient_set(inst, gb).decisions
        print(f"{name}: lambda={sep['lambda']} -> ws set {ws}; "
              f"eps={sep['eps']}, j={sep['j']} -> eps set {ep}")


if __name__ == "__main__":
    for block in (fig2, fig3, fig4, fig5, fig6):
        block()
        print()
