"""Randomized geometric validation of the algebraic membership predicates.

Quads are generated by construction (apex and trapezoid families plus random
affine images), so convexity and exact rational strip areas are guaranteed and
both apex branches get covered.  Reports are deterministic functions of
(spec, mode, seed, count): each sample index derives its own draw stream, so
generation could be partitioned across workers without changing the output.

Draw stream contract (reproducible across implementations):

* 64-bit linear congruential generator: state' = (M*state + I) mod 2**64 with
  M = 6364136223846793005 and I = 1442695040888963407;
* sample index i starts from state = (seed + (i+1)*0x9E3779B97F4A7C15) mod 2**64;
* each draw advances the state once and uses value = (state >> 40) % n;
* grid draws map value onto {1/8, 2/8, ..., 64/8}; signed grid draws map onto
  {-64/8, ..., -1/8, 1/8, ..., 64/8}.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .cone import classify, discriminants, frame
from .division import DivisionSpec
from .errors import DegenerateCollapseError, InvalidInputError
from .geometry import ApexFrame, ConvexQuad, ParallelMarker, Point, apex_of, strip_areas
from .membership import Mode, Verdict, member
from .reduction import member_via_collapse
from .witness import apex_quad

_MULT = 6364136223846793005
_INC = 1442695040888963407
_MIX = 0x9E3779B97F4A7C15
_MASK = (1 << 64) - 1


class _Stream:
    def __init__(self, seed: int, index: int):
        self.state = (seed + (index + 1) * _MIX) & _MASK

    def next_value(self, n: int) -> int:
        self.state = (_MULT * self.state + _INC) & _MASK
        return (self.state >> 40) % n

    def grid(self) -> Fraction:
        return Fraction(self.next_value(64) + 1, 8)

    def signed_grid(self) -> Fraction:
        k = self.next_value(128) - 64
        if k >= 0:
            k += 1
        return Fraction(k, 8)


@dataclass(frozen=True)
class Violation:
    quad: Optional[ConvexQuad]
    x: tuple[Fraction, ...]
    reason: str


@dataclass(frozen=True)
class SampleReport:
    spec: DivisionSpec
    mode: str
    total: int
    accepted: int
    violations: tuple[Violation, ...]
    seed: int

    def to_jsonable(self) -> dict:
        return {
            "p": [str(v) for v in self.spec.p],
            "pp": [str(v) for v in self.spec.p_prime],
            "mode": self.mode,
            "total": self.total,
            "accepted": self.accepted,
            "seed": self.seed,
            "violations": [
                {
                    "quad": v.quad.text() if v.quad is not None else None,
                    "x": [str(e) for e in v.x],
                    "reason": v.reason,
                }
                for v in self.violations
            ],
        }


def _affine_image(stream: _Stream, quad: ConvexQuad) -> ConvexQuad:
    while True:
        m11, m12, m21, m22 = (stream.grid() for _ in range(4))
        if m11 * m22 - m12 * m21 > 0:
            break
    tx, ty = stream.signed_grid(), stream.signed_grid()

    def image(p: Point) -> Point:
        return Point(m11 * p.x + m12 * p.y + tx, m21 * p.x + m22 * p.y + ty)

    return ConvexQuad(*(image(v) for v in quad.vertices))


def _certificate_matches(spec: DivisionSpec, verdict: Verdict, geo: ApexFrame) -> Optional[str]:
    """None when the certificate agrees with the geometric apex data, else a reason."""
    cert = verdict.certificate
    expected = (
        geo.scale * geo.p0_prime,
        geo.scale * geo.p0,
        geo.scale,
    )
    if classify(spec).spatial:
        if cert.branch != geo.branch:
            return f"branch {cert.branch} != geometric {geo.branch}"
        if cert.coeffs != expected:
            return "certificate coefficients differ from the apex parameters"
        return None
    interval = cert.q1_interval if geo.branch == "q1" else cert.q2_interval
    if interval is None or not interval.contains(geo.scale):
        return "geometric area unit outside the certified re-decomposition range"
    return None


def sample_convex_quads(spec: DivisionSpec, count: int, seed: int) -> SampleReport:
    """Generate quads (apex q1, apex q2, affine images in rotation) and audit them.

    Every geometric sample must be accepted in audited mode with a certificate
    matching the apex data; failures are recorded as violations, never raised.
    """
    if count < 1:
        raise InvalidInputError("count must be at least 1")
    violations = []
    for index in range(count):
        stream = _Stream(seed, index)
        slot = index % 3
        if slot == 0:
            branch = "q1"
        elif slot == 1:
            branch = "q2"
        else:
            branch = "q1" if (index // 3) % 2 == 0 else "q2"
        p0, p0_prime, scale = stream.grid(), stream.grid(), stream.grid()
        quad = apex_quad(spec, p0, p0_prime, scale, branch)
        if slot == 2:
            quad = _affine_image(stream, quad)
        x = strip_areas(quad, spec)
        verdict = member(spec, x, "audited")
        if not verdict.attainable:
            violations.append(Violation(quad, x, f"rejected: {verdict.reason}"))
            continue
        geo = apex_of(quad, spec)
        if isinstance(geo, ParallelMarker):
            violations.append(Violation(quad, x, "apex construction came out parallel"))
            continue
        mismatch = _certificate_matches(spec, verdict, geo)
        if mismatch is not None:
            violations.append(Violation(quad, x, mismatch))
    return SampleReport(spec, "audited", count, count - len(violations), tuple(violations), seed)


def sample_parallel_family(
    spec: DivisionSpec, count: int, seed: int, mode: Mode = "audited"
) -> SampleReport:
    """Trapezoids with independent side scalings, checked under the given mode.

    Audited mode must accept every sample; strict mode records each rejected
    sample (unequal scalings on a spatial spec) as a data point.
    """
    if count < 1:
        raise InvalidInputError("count must be at least 1")
    violations = []
    for index in range(count):
        stream = _Stream(seed, index)
        mu, mu_prime = stream.grid(), stream.grid()
        offset = stream.signed_grid()
        quad = ConvexQuad(
            Point(Fraction(0), Fraction(0)),
            Point(mu * sum(spec.p), Fraction(0)),
            Point(offset + mu_prime * sum(spec.p_prime), Fraction(1)),
            Point(offset, Fraction(1)),
        )
        x = strip_areas(quad, spec)
        verdict = member(spec, x, mode)
        if not verdict.attainable:
            violations.append(Violation(quad, x, f"rejected: {verdict.reason}"))
            continue
        if not isinstance(apex_of(quad, spec), ParallelMarker):
            violations.append(Violation(quad, x, "trapezoid construction not parallel"))
    return SampleReport(spec, mode, count, count - len(violations), tuple(violations), seed)


def cross_validate(spec: DivisionSpec, count: int, seed: int) -> SampleReport:
    """Compare the direct decision with the fold-based one on random tuples.

    Draws positive combinations hitting every branch plus off-span
    perturbations, and requires identical verdicts (attainability, branch,
    coefficients, reason) at every usable pivot.  Pivots whose folds are both
    planar cannot decide and are skipped rather than counted as disagreement.
    """
    if count < 1:
        raise InvalidInputError("count must be at least 1")
    label = classify(spec)
    if not label.spatial or spec.n < 4:
        raise InvalidInputError("cross validation applies to spatial specs of length >= 4")
    fr = frame(spec)
    pivots = [i + 2 for i, d in enumerate(discriminants(spec)) if d != 0]
    violations = []
    for index in range(count):
        stream = _Stream(seed, index)
        a, b, c = stream.grid(), stream.grid(), stream.grid()
        kind = index % 5
        if kind == 0:
            x = tuple(a * u + b * v + c * w for u, v, w in zip(fr.ab, fr.dc, fr.head))
        elif kind == 1:
            x = tuple(a * u + b * v + c * w for u, v, w in zip(fr.ab, fr.dc, fr.tail))
        elif kind == 2:
            x = tuple(a * u + b * v + c * w for u, v, w in zip(fr.ab, fr.dc, fr.head))
            bump = list(x)
            bump[stream.next_value(spec.n)] += stream.grid()
            x = tuple(bump)
        elif kind == 3:
            x = tuple(a * u + b * v for u, v in zip(fr.ab, fr.dc))
        else:
            x = tuple(a * (u + v) for u, v in zip(fr.ab, fr.dc))
        direct = member(spec, x, "audited")
        for pivot in pivots:
            try:
                folded = member_via_collapse(spec, x, pivot, "audited")
            except DegenerateCollapseError:
                continue
            if (
                folded.attainable != direct.attainable
                or folded.reason != direct.reason
                or (direct.attainable and folded.certificate != direct.certificate)
            ):
                violations.append(Violation(None, x, f"fold at pivot {pivot} disagrees"))
                break
    return SampleReport(spec, "audited", count, count - len(violations), tuple(violations), seed)
