#!/usr/bin/env python3
"""Sweep weights and generating bounds on the FIG6 fixtures to find
parameters separating the weighted-sum and constraint concepts.

FIG6L wants (lambda, eps, j) with x1 constraint-efficient but not
weighted-sum efficient; FIG6R wants the reverse.  The winners frozen into
the fixture metadata came out of this sweep.

Usage: python scripts/fig6_witness_sweep.py [--grid-k 20]
"""

from __future__ import annotations

import argparse

from maro import (
    GenBound,
    Weight,
    eps_efficient_set,
    fixture,
    fixture_meta,
    simplex_grid,
    ws_efficient_set,
)


def sweep(name: str, want_eps: bool, grid_k: int):
    # the fixture's x1 sits on exactly one side: in the eps set and out of
    # the ws set (want_eps), or the other way around
    want_ws = not want_eps
    inst = fixture(name)
    lam_hits = []
    for lam in simplex_grid(2, grid_k):
        in_ws = "x1" in ws_efficient_set(inst, Weight(lam)).decisions
        if in_ws == want_ws:
            lam_hits.append(lam)
    eps_hits = []
    coords = sorted({c for pts in inst.recourse.values() for p in pts for c in p})
    lo, hi = coords[0], coords[-1]
    steps = [lo + i * (hi - lo) / 40 for i in range(41)]
    for j in (1, 2):
        for cap in steps:
            eps = tuple(cap if i != j - 1 else 0.0 for i in range(2))
            sel = eps_efficient_set(inst, GenBound(eps, j))
            if sel.infeasible:
                continue
            if ("x1" in sel.decisions) == want_eps:
                eps_hits.append((eps, j))
    print(f"{name}: x1 should be {'constraint' if want_eps else 'weighted-sum'}-side")
    print(f"  weights with x1 {'outside' if want_eps else 'inside'} the ws set: "
          f"{len(lam_hits)} (e.g. {lam_hits[:3]})")
    print(f"  bounds with x1 {'inside' if want_eps else 'outside'} the eps set: "
          f"{len(eps_hits)} (e.g. {eps_hits[:3]})")
    frozen = fixture_meta(name)["separation"]
    lam = Weight(frozen["lambda"])
    gb = GenBound(frozen["eps"], frozen["j"])
    ws_ok = ("x1" in ws_efficient_set(inst, lam).decisions) == frozen["ws_efficient"]
    eps_ok = ("x1" in eps_efficient_set(inst, gb).decisions) == frozen["eps_efficient"]
    print(f"  frozen metadata {frozen['lambda']}, {frozen['eps']}, j={frozen['j']}: "
          f"{'confirmed' if ws_ok and eps_ok else 'MISMATCH'}")
    return ws_ok and eps_ok


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--grid-k", type=int, default=20)
    args = ap.parse_args()
    ok = sweep("FIG6L", want_eps=True, grid_k=args.grid_k)
    ok &= sweep("FIG6R", want_eps=False, grid_k=args.grid_k)
    raise SystemExit(0 if ok else 1)


if __name__ == "__main__":
    main()
