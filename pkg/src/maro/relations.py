"""Order relations on objective vectors and on finite sets of them.

Three componentwise vector relations (``<=`` everywhere, ``<=`` everywhere
and not equal, ``<`` everywhere) and three families of set relations built
on top of them:

* upper type: every point of A lies below some point of B,
* lower type: every point of B lies above some point of A,
* weighted minimum: the best weighted sums of A and B are compared.

For finite sets the cone-containment definitions of the upper/lower
relations reduce exactly to the pointwise exists/forall characterizations
used here.  All comparisons go through the injected :class:`Tolerance`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .instances import DEFAULT_TOL, Tolerance, Vec


class VecRel(Enum):
    LEQQ = "leqq"  # a_i <= b_i for all i
    LEQ = "leq"    # LEQQ and a != b
    LT = "lt"      # a_i < b_i for all i


class SetRelFamily(Enum):
    UPPER = "u"
    LOWER = "l"
    LAMBDA_MIN = "lmin"


def _check_lam(lam: Vec):
    if any(c < 0 for c in lam):
        raise ValueError(f"weight vector must be componentwise non-negative, got {lam}")
    if all(c == 0 for c in lam):
        raise ValueError("weight vector must not be the zero vector")


@dataclass(frozen=True)
class SetRelSpec:
    """A selected set relation: family, strictness, and weights if needed.

    ``lam`` is required exactly for the weighted-minimum family; it must be
    non-negative and non-zero but need not be normalized.
    """

    family: SetRelFamily
    strict: bool = False
    lam: Vec | None = None

    def __post_init__(self):
        if self.family is SetRelFamily.LAMBDA_MIN:
            if self.lam is None:
                raise ValueError("lambda-min set relation requires a weight vector")
            object.__setattr__(self, "lam", tuple(float(c) for c in self.lam))
            _check_lam(self.lam)
        elif self.lam is not None:
            raise ValueError(f"{self.family.value}: weight vector only applies to lambda-min")


@dataclass(frozen=True)
class Weight:
    """A point on the weight simplex: non-negative entries summing to one."""

    values: Vec

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(float(c) for c in self.values))
        _check_lam(self.values)
        s = math.fsum(self.values)
        if abs(s - 1.0) > 1e-9:
            raise ValueError(f"weights must sum to 1, got {s!r}")

    def __len__(self):
        return len(self.values)


def dot(lam: Vec, p: Vec) -> float:
    s = 0.0
    for i in range(len(lam)):
        s += lam[i] * p[i]
    return s


def vec_cmp(a: Vec, b: Vec, rel: VecRel, tol: Tolerance = DEFAULT_TOL) -> bool:
    """Compare two objective vectors under the selected relation."""
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} vs {len(b)}")
    if rel is VecRel.LT:
        return all(tol.lt(a[i], b[i]) for i in range(len(a)))
    leqq = all(tol.leq(a[i], b[i]) for i in range(len(a)))
    if rel is VecRel.LEQQ:
        return leqq
    return leqq and not all(tol.eq(a[i], b[i]) for i in range(len(a)))


def weighted_min(points, lam: Vec) -> float:
    return min(dot(lam, p) for p in points)


def set_cmp(A, B, spec: SetRelSpec, tol: Tolerance = DEFAULT_TOL) -> bool:
    """Compare two non-empty finite point sets under the selected relation."""
    A = tuple(A)
    B = tuple(B)
    if not A or not B:
        raise ValueError("set relations are defined for non-empty sets only")
    dims = {len(p) for p in A} | {len(p) for p in B}
    if len(dims) != 1:
        raise ValueError(f"dimension mismatch across sets: {sorted(dims)}")
    if spec.family is SetRelFamily.LAMBDA_MIN:
        if len(spec.lam) not in dims:
            raise ValueError(f"weight vector has length {len(spec.lam)}, points have {dims.pop()}")
        cmp = tol.lt if spec.strict else tol.leq
        return cmp(weighted_min(A, spec.lam), weighted_min(B, spec.lam))
    below = VecRel.LT if spec.strict else VecRel.LEQQ
    if spec.family is SetRelFamily.UPPER:
        return all(any(vec_cmp(a, b, below, tol) for b in B) for a in A)
    return all(any(vec_cmp(a, b, below, tol) for a in A) for b in B)


def parse_relation(text: str):
    """Parse a CLI relation selector.

    Vector relations: ``leqq``, ``leq``, ``lt``.  Set relations: ``u``,
    ``u-strict``, ``l``, ``l-strict``, ``lmin:<csv>``, ``lmin-strict:<csv>``.
    """
    t = text.strip()
    if t in ("leqq", "leq", "lt"):
        return VecRel(t)
    if t in ("u", "l"):
        return SetRelSpec(SetRelFamily(t), strict=False)
    if t in ("u-strict", "l-strict"):
        return SetRelSpec(SetRelFamily(t.split("-")[0]), strict=True)
    for prefix, strict in (("lmin-strict:", True), ("lmin:", False)):
        if t.startswith(prefix):
            body = t[len(prefix):]
            try:
                lam = tuple(float(c) for c in body.split(","))
            except ValueError:
                raise ValueError(f"bad weight list in relation {text!r}") from None
            return SetRelSpec(SetRelFamily.LAMBDA_MIN, strict=strict, lam=lam)
    raise ValueError(
        f"unknown relation {text!r}; expected one of leqq, leq, lt, u[-strict], "
        f"l[-strict], lmin[-strict]:<csv>"
    )
