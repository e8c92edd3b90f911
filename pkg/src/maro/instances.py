"""Finite instances of multicriteria three-stage min-max-min problems.

An :class:`Instance` holds the first-stage decisions, the uncertainty
scenarios, and for every (decision, scenario) pair a non-empty finite set of
objective vectors: the image of the recourse stage in objective space.  All
downstream operations (order relations, efficiency checks, scalarizations)
read only this image, so recourse feasibility sets never appear explicitly.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

Vec = tuple[float, ...]

INF = math.inf


class InstanceError(ValueError):
    """An instance document violates the schema or an instance invariant."""


@dataclass(frozen=True)
class Tolerance:
    """Comparison policy for reals: ``a <= b`` is accepted iff ``a - b <= tau``.

    Infinite operands are compared exactly; the slack applies only between
    finite values.  ``tau`` must be non-negative.
    """

    tau: float = 1e-9

    def __post_init__(self):
        if not (self.tau >= 0.0) or math.isinf(self.tau):
            raise ValueError(f"tolerance must be a finite non-negative real, got {self.tau}")

    def leq(self, a: float, b: float) -> bool:
        if math.isinf(a) or math.isinf(b):
            return a <= b
        return a - b <= self.tau

    def lt(self, a: float, b: float) -> bool:
        if math.isinf(a) or math.isinf(b):
            return a < b
        return b - a > self.tau

    def eq(self, a: float, b: float) -> bool:
        if math.isinf(a) or math.isinf(b):
            return a == b
        return abs(a - b) <= self.tau


DEFAULT_TOL = Tolerance()


@dataclass(frozen=True)
class Instance:
    """A validated finite problem instance.

    ``recourse`` maps every ``(decision, scenario)`` pair to a non-empty
    tuple of objective vectors of length ``n``.  Instances are immutable
    after construction; ``_cache`` only memoizes derived fronts and is
    excluded from equality.
    """

    name: str
    n: int
    decisions: tuple[str, ...]
    scenarios: tuple[str, ...]
    recourse: dict[tuple[str, str], tuple[Vec, ...]]
    sampled: bool = False
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise InstanceError(f"n: objective count must be a positive integer, got {self.n!r}")
        for label, ids in (("decisions", self.decisions), ("scenarios", self.scenarios)):
            if not ids:
                raise InstanceError(f"{label}: must be non-empty")
            seen = set()
            for d in ids:
                if d in seen:
                    raise InstanceError(f"{label}: duplicate identifier {d!r}")
                seen.add(d)
        for x in self.decisions:
            for u in self.scenarios:
                pts = self.recourse.get((x, u))
                if pts is None:
                    raise InstanceError(f"recourse.{x}.{u}: missing recourse set at ({x},{u})")
                if len(pts) == 0:
                    raise InstanceError(f"recourse.{x}.{u}: empty recourse set at ({x},{u})")
                for idx, p in enumerate(pts):
                    if len(p) != self.n:
                        raise InstanceError(
                            f"recourse.{x}.{u}[{idx}]: expected {self.n} objectives, got {len(p)}"
                        )
                    for c in p:
                        if not math.isfinite(c):
                            raise InstanceError(
                                f"recourse.{x}.{u}[{idx}]: non-finite entry {c!r}"
                            )
        if len(self.recourse) != len(self.decisions) * len(self.scenarios):
            extra = set(self.recourse) - {
                (x, u) for x in self.decisions for u in self.scenarios
            }
            raise InstanceError(f"recourse: unexpected keys {sorted(extra)}")

    def points(self, x: str, u: str) -> tuple[Vec, ...]:
        """Recourse image for a pair, with identifier checking."""
        if x not in self.recourse and all(k[0] != x for k in self.recourse):
            raise InstanceError(f"unknown decision {x!r}")
        try:
            return self.recourse[(x, u)]
        except KeyError:
            if u not in self.scenarios:
                raise InstanceError(f"unknown scenario {u!r}") from None
            raise InstanceError(f"unknown decision {x!r}") from None


def make_instance(
    name: str,
    n: int,
    decisions: list[str] | tuple[str, ...],
    scenarios: list[str] | tuple[str, ...],
    recourse,
    sampled: bool = False,
) -> Instance:
    """Normalize raw containers (lists, ints) into a validated Instance.

    ``recourse`` may be keyed by ``(decision, scenario)`` tuples or nested
    ``{decision: {scenario: [...]}}`` dicts.
    """
    flat: dict[tuple[str, str], tuple[Vec, ...]] = {}
    if recourse and all(isinstance(k, tuple) for k in recourse):
        items = recourse.items()
    else:
        items = (((x, u), pts) for x, by_u in recourse.items() for u, pts in by_u.items())
    for key, pts in items:
        flat[key] = tuple(tuple(float(c) for c in p) for p in pts)
    return Instance(
        name=str(name),
        n=int(n),
        decisions=tuple(str(d) for d in decisions),
        scenarios=tuple(str(u) for u in scenarios),
        recourse=flat,
        sampled=bool(sampled),
    )


def _require(cond: bool, path: str, msg: str):
    if not cond:
        raise InstanceError(f"{path}: {msg}")


def load_instance(text: str) -> Instance:
    """Parse and validate the JSON instance schema.

    Every violation is reported with the offending document path.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise InstanceError(f"$: not valid JSON ({e.msg} at line {e.lineno})") from None
    _require(isinstance(doc, dict), "$", "document must be a JSON object")
    for key in ("name", "n", "decisions", "scenarios", "recourse"):
        _require(key in doc, key, "missing required field")
    unknown = set(doc) - {"name", "n", "decisions", "scenarios", "recourse", "sampled"}
    _require(not unknown, "$", f"unknown fields {sorted(unknown)}")
    _require(isinstance(doc["name"], str), "name", "must be a string")
    _require(isinstance(doc["n"], int) and not isinstance(doc["n"], bool), "n", "must be an integer")
    for key in ("decisions", "scenarios"):
        _require(isinstance(doc[key], list) and doc[key], key, "must be a non-empty array")
        for i, d in enumerate(doc[key]):
            _require(isinstance(d, str), f"{key}[{i}]", "identifiers must be strings")
    _require(isinstance(doc["recourse"], dict), "recourse", "must be an object")
    sampled = doc.get("sampled", False)
    _require(isinstance(sampled, bool), "sampled", "must be a boolean")

    n = doc["n"]
    recourse = {}
    for x, by_u in doc["recourse"].items():
        _require(x in doc["decisions"], f"recourse.{x}", "not a declared decision")
        _require(isinstance(by_u, dict), f"recourse.{x}", "must be an object")
        for u, pts in by_u.items():
            path = f"recourse.{x}.{u}"
            _require(u in doc["scenarios"], path, "not a declared scenario")
            _require(isinstance(pts, list), path, "must be an array of points")
            _require(len(pts) > 0, path, f"empty recourse set at ({x},{u})")
            for i, p in enumerate(pts):
                _require(isinstance(p, list), f"{path}[{i}]", "point must be an array")
                _require(
                    len(p) == n, f"{path}[{i}]", f"expected {n} objectives, got {len(p)}"
                )
                for c in p:
                    _require(
                        isinstance(c, (int, float)) and not isinstance(c, bool),
                        f"{path}[{i}]",
                        f"coordinates must be numbers, got {c!r}",
                    )
                    _require(math.isfinite(c), f"{path}[{i}]", f"non-finite entry {c!r}")
            recourse[(x, u)] = tuple(tuple(float(c) for c in p) for p in pts)
    for x in doc["decisions"]:
        for u in doc["scenarios"]:
            _require((x, u) in recourse, f"recourse.{x}.{u}", f"missing recourse set at ({x},{u})")
    return Instance(
        name=doc["name"],
        n=n,
        decisions=tuple(doc["decisions"]),
        scenarios=tuple(doc["scenarios"]),
        recourse=recourse,
        sampled=sampled,
    )


def _fmt(v: float) -> str:
    # 17 significant digits round-trips every float64 exactly.
    return f"{v:.17g}"


def dump_instance(inst: Instance) -> str:
    """Serialize to the JSON instance schema with 17-significant-digit reals.

    Output bytes are deterministic for equal instances; ``sampled`` is
    emitted only when set, so minimal documents keep the minimal schema.
    """
    lines = ["{"]
    lines.append(f'  "name": {json.dumps(inst.name)},')
    lines.append(f'  "n": {inst.n},')
    lines.append(f'  "decisions": {json.dumps(list(inst.decisions))},')
    lines.append(f'  "scenarios": {json.dumps(list(inst.scenarios))},')
    if inst.sampled:
        lines.append('  "sampled": true,')
    lines.append('  "recourse": {')
    for xi, x in enumerate(inst.decisions):
        lines.append(f'    {json.dumps(x)}: {{')
        for ui, u in enumerate(inst.scenarios):
            pts = ", ".join(
                "[" + ", ".join(_fmt(c) for c in p) + "]" for p in inst.recourse[(x, u)]
            )
            comma = "," if ui + 1 < len(inst.scenarios) else ""
            lines.append(f'      {json.dumps(u)}: [{pts}]{comma}')
        comma = "," if xi + 1 < len(inst.decisions) else ""
        lines.append(f'    }}{comma}')
    lines.append("  }")
    lines.append("}")
    return "\n".join(lines) + "\n"
