"""Decides whether an area tuple is attainable and produces exact certificates.

Two semantics are offered for parallel-sided realizations:

* ``audited`` (the default) accepts the whole open face a*ab + b*dc with
  a, b > 0, which trapezoids with independent side scalings realize;
* ``strict`` accepts from that face only the equal-scaling ray a = b.

Everything else is common: in the spatial case a tuple is attainable iff it
is a strictly positive combination of the two ratio vectors and one cumulant
vector (branch q1 with the head cumulants, q2 with the tail cumulants); in
the planar case iff it is a strictly positive combination of the two cumulant
vectors.  Boundary points of these open regions are rejected.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Optional, Sequence

from .cone import ConeFrame, classify, evaluate_plane, frame, hyperplanes
from .division import DivisionSpec, fraction_tuple
from .errors import InvalidInputError
from .linalg import solve2, solve3

Mode = Literal["strict", "audited"]

REASON_OFF_SUBSPACE = "off-subspace"
REASON_BOUNDARY = "boundary"
REASON_NEGATIVE = "negative-coefficient"
REASON_NON_POSITIVE = "non-positive-entry"


@dataclass(frozen=True)
class Interval:
    """Feasible values for the cumulant coefficient of a re-decomposition.

    Open interval when lo < hi; the single point lo when lo == hi (the
    proportional planar case pins the coefficient uniquely).
    """

    lo: Fraction
    hi: Fraction

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains(self, value: Fraction) -> bool:
        if self.is_point:
            return value == self.lo
        return self.lo < value < self.hi


@dataclass(frozen=True)
class Certificate:
    """Exact positive coefficients expressing the tuple in a frame basis.

    branch "q1": coeffs (a, b, c) with x = a*ab + b*dc + c*head
    branch "q2": coeffs (a, b, c) with x = a*ab + b*dc + c*tail
    branch "face": coeffs (a, b) with x = a*ab + b*dc
    branch "ray": coeffs (t,) with x = t*(ab + dc)
    branch "degenerate" (planar case): coeffs (a, b) with x = a*head + b*tail,
    plus the feasible coefficient intervals of the q1/q2 re-decompositions
    (None when that branch admits none).
    """

    branch: str
    coeffs: tuple[Fraction, ...]
    q1_interval: Optional[Interval] = None
    q2_interval: Optional[Interval] = None


@dataclass(frozen=True)
class Verdict:
    attainable: bool
    certificate: Optional[Certificate] = None
    reason: Optional[str] = None
    prefix_certified: bool = False


def _combine(fr: ConeFrame, a: Fraction, b: Fraction, c: Fraction, arm: Sequence[Fraction]):
    return tuple(a * u + b * v + c * w for u, v, w in zip(fr.ab, fr.dc, arm))


def _independent_pair(u: Sequence[Fraction], v: Sequence[Fraction]):
    """Two coordinate indices where (u, v) has a nonzero 2x2 minor, or None."""
    for j in range(1, len(u)):
        if u[0] * v[j] != u[j] * v[0]:
            return (0, j)
    return None


def _face_solution(fr: ConeFrame, x: Sequence[Fraction]):
    """(a, b) with x = a*ab + b*dc exactly, or None."""
    pair = _independent_pair(fr.ab, fr.dc)
    if pair is None:
        # proportional ratio vectors: x must be a positive multiple of ab + dc
        direction = fr.parallel
        t = x[0] / direction[0]
        if all(t * d == xi for d, xi in zip(direction, x)):
            return (t, t)
        return None
    i, j = pair
    sol = solve2([[fr.ab[i], fr.dc[i]], [fr.ab[j], fr.dc[j]]], [x[i], x[j]])
    assert sol is not None
    a, b = sol
    if all(a * u + b * v == xi for u, v, xi in zip(fr.ab, fr.dc, x)):
        return (a, b)
    return None


def _coefficient_interval(
    ab: Sequence[Fraction],
    dc: Sequence[Fraction],
    arm_vec: Sequence[Fraction],
    x: Sequence[Fraction],
    a: Fraction,
    b: Fraction,
    arm_is_head: bool,
):
    """Feasible cumulant coefficients for x = A*ab + B*dc + c*arm with A, B, c > 0.

    Only meaningful in the planar case, where (a, b) is the canonical
    decomposition of x on (head, tail).  The vectors may carry an extra
    virtual coordinate holding exact tail sums.  Returns an Interval or None.
    """
    pair = _independent_pair(ab, dc)
    if pair is None:
        # proportional: x = g*(ab-direction) + c*arm with g, c pinned uniquely
        c = a - b if arm_is_head else b - a
        return Interval(c, c) if c > 0 else None
    i, j = pair
    base = solve2([[ab[i], dc[i]], [ab[j], dc[j]]], [x[i], x[j]])
    slope = solve2([[ab[i], dc[i]], [ab[j], dc[j]]], [arm_vec[i], arm_vec[j]])
    assert base is not None and slope is not None
    lo = Fraction(0)
    hi: Optional[Fraction] = None
    for coef, intercept in zip(slope, base):
        # constraint: intercept - c*coef > 0
        if coef > 0:
            bound = intercept / coef
            hi = bound if hi is None else min(hi, bound)
        elif coef < 0:
            lo = max(lo, intercept / coef)
        elif intercept <= 0:
            return None
    assert hi is not None, "the feasible coefficient range is always bounded above"
    return Interval(lo, hi) if lo < hi else None


def _redecomposition_interval(fr: ConeFrame, x, a: Fraction, b: Fraction, arm: str):
    arm_vec = fr.head if arm == "head" else fr.tail
    return _coefficient_interval(fr.ab, fr.dc, arm_vec, x, a, b, arm == "head")


def _spatial_verdict(spec: DivisionSpec, fr: ConeFrame, pivot: int, x, mode: Mode) -> Verdict:
    n = spec.n
    if n >= 4:
        for plane in hyperplanes(spec):
            if evaluate_plane(plane, x) != 0:
                return Verdict(False, reason=REASON_OFF_SUBSPACE)
    cols = (pivot - 2, pivot - 1, pivot)
    rows = [[fr.ab[c], fr.dc[c], fr.head[c]] for c in cols]
    sol = solve3(rows, [x[c] for c in cols])
    assert sol is not None, "pivot solve is regular whenever the discriminant is nonzero"
    a, b, c = sol
    if _combine(fr, a, b, c, fr.head) != tuple(x):
        return Verdict(False, reason=REASON_OFF_SUBSPACE)
    total_ab = sum(fr.ab)
    total_dc = sum(fr.dc)
    a2, b2, c2 = a + c * total_dc, b + c * total_ab, -c
    if a > 0 and b > 0 and c > 0:
        return Verdict(True, Certificate("q1", (a, b, c)))
    if a2 > 0 and b2 > 0 and c2 > 0:
        return Verdict(True, Certificate("q2", (a2, b2, c2)))
    if c == 0 and a > 0 and b > 0:
        if a == b:
            return Verdict(True, Certificate("ray", (a,)))
        if mode == "audited":
            return Verdict(True, Certificate("face", (a, b)))
        return Verdict(False, reason=REASON_BOUNDARY)
    closed = (a >= 0 and b >= 0 and c >= 0) or (a2 >= 0 and b2 >= 0 and c2 >= 0)
    return Verdict(False, reason=REASON_BOUNDARY if closed else REASON_NEGATIVE)


def _planar_verdict(spec: DivisionSpec, fr: ConeFrame, x) -> Verdict:
    n = spec.n
    if n >= 3:
        for plane in hyperplanes(spec):
            if evaluate_plane(plane, x) != 0:
                return Verdict(False, reason=REASON_OFF_SUBSPACE)
    # the (first, last) minor of (head, tail) is provably nonzero
    rows = [[fr.head[0], fr.tail[0]], [fr.head[n - 1], fr.tail[n - 1]]]
    sol = solve2(rows, [x[0], x[n - 1]])
    assert sol is not None
    a, b = sol
    if any(a * h + b * t != xi for h, t, xi in zip(fr.head, fr.tail, x)):
        return Verdict(False, reason=REASON_OFF_SUBSPACE)
    if a > 0 and b > 0:
        cert = Certificate(
            "degenerate",
            (a, b),
            q1_interval=_redecomposition_interval(fr, x, a, b, "head"),
            q2_interval=_redecomposition_interval(fr, x, a, b, "tail"),
        )
        return Verdict(True, cert)
    if a >= 0 and b >= 0:
        return Verdict(False, reason=REASON_BOUNDARY)
    return Verdict(False, reason=REASON_NEGATIVE)


def member(spec: DivisionSpec, x: Sequence[Fraction], mode: Mode = "audited") -> Verdict:
    """Decide attainability of an area tuple and certify the answer.

    Rejections carry one of four reasons: "non-positive-entry" (some entry of
    x is not strictly positive), "off-subspace" (x misses the linear span of
    the frame), "boundary" (x sits on the boundary of the open attainable
    regions), "negative-coefficient" (the exact decomposition has a strictly
    negative coordinate).
    """
    if len(x) != spec.n:
        raise InvalidInputError("area tuple length does not match the division spec")
    x = fraction_tuple(x)
    if any(entry <= 0 for entry in x):
        return Verdict(False, reason=REASON_NON_POSITIVE)
    label = classify(spec)
    fr = frame(spec)
    if label.spatial:
        return _spatial_verdict(spec, fr, label.pivot, x, mode)
    return _planar_verdict(spec, fr, x)


def proportional_bounds(p: Sequence[Fraction]):
    """Plane and open ratio window for equal ratio tuples of length three.

    For p_prime = p, a positive tuple x is attainable exactly when it lies on
    the returned plane and x3/x1 falls strictly inside the returned window.
    """
    p = fraction_tuple(p)
    if len(p) != 3 or any(v <= 0 for v in p):
        raise InvalidInputError("expects three positive ratios")
    spec = DivisionSpec(p, p)
    plane = hyperplanes(spec)[0]
    p1, p2, p3 = p
    lo = p3 * p3 / (p1 * (p1 + 2 * p2 + 2 * p3))
    hi = p3 * (2 * p1 + 2 * p2 + p3) / (p1 * p1)
    return plane, (lo, hi)


def parallel_diagnosis(spec: DivisionSpec, x: Sequence[Fraction]) -> str:
    """Classify an area tuple by which realizations it admits.

    "forced-parallel": attainable, but only by quadrilaterals whose divided
    sides are parallel (no q1 and no q2 realization exists).
    "not-forced": attainable with at least one apex realization.
    "not-attainable": not attainable at all (audited semantics).
    """
    verdict = member(spec, x, "audited")
    if not verdict.attainable:
        return "not-attainable"
    cert = verdict.certificate
    if cert.branch in ("q1", "q2"):
        return "not-forced"
    if cert.branch == "degenerate":
        if cert.q1_interval is not None or cert.q2_interval is not None:
            return "not-forced"
        return "forced-parallel"
    return "forced-parallel"
