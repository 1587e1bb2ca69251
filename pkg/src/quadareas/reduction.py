"""Tail-summed sequences and the fold of long instances down to three coordinates.

A summable infinite sequence is represented by an exact finite prefix plus the
exact sum of everything after it.  Verdicts produced from such data are
"prefix-certified": linear constraints living entirely beyond the prefix
cannot be checked from a tail sum alone and remain the caller's
responsibility.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .cone import classify, cumulants, discriminants, evaluate_plane, frame, hyperplanes
from .division import DivisionSpec, RationalLike, to_fraction, fraction_tuple
from .errors import (
    DegenerateCollapseError,
    DegenerateDenominatorError,
    InvalidInputError,
    InvalidPivotError,
)
from .linalg import solve2, solve3
from .membership import (
    Certificate,
    Mode,
    REASON_BOUNDARY,
    REASON_NEGATIVE,
    REASON_NON_POSITIVE,
    REASON_OFF_SUBSPACE,
    Verdict,
    _coefficient_interval,
)


@dataclass(frozen=True)
class TailSummedSequence:
    """A summable sequence as an exact prefix plus the exact sum of its tail.

    Ratio sequences must be strictly positive (use require_positive); candidate
    area sequences may carry any prefix values and are screened by the
    membership deciders.  A zero tail sum embeds a plain finite tuple.
    """

    prefix: tuple[Fraction, ...]
    tail_sum: Fraction = Fraction(0)

    def __post_init__(self):
        if not all(isinstance(v, Fraction) for v in self.prefix):
            object.__setattr__(self, "prefix", fraction_tuple(self.prefix))
        if not isinstance(self.tail_sum, Fraction):
            object.__setattr__(self, "tail_sum", to_fraction(self.tail_sum))
        if len(self.prefix) < 1:
            raise InvalidInputError("a sequence needs a nonempty prefix")
        if self.tail_sum < 0:
            raise InvalidInputError("a tail sum cannot be negative")

    @classmethod
    def of(cls, prefix: Iterable[RationalLike], tail: RationalLike = 0) -> "TailSummedSequence":
        return cls(fraction_tuple(prefix), to_fraction(tail))

    @classmethod
    def parse(cls, text: str) -> "TailSummedSequence":
        """Parse the text format "a,b,c | tail=r" (the suffix is optional)."""
        tail = Fraction(0)
        body = text
        if "|" in text:
            body, _, suffix = text.partition("|")
            suffix = suffix.strip()
            if not suffix.startswith("tail="):
                raise InvalidInputError("the tail suffix is written as '| tail=r'")
            tail = to_fraction(suffix[len("tail="):])
        prefix = fraction_tuple(part for part in body.split(",") if part.strip())
        return cls(prefix, tail)

    def text(self) -> str:
        body = ",".join(str(v) for v in self.prefix)
        return body if self.tail_sum == 0 else f"{body} | tail={self.tail_sum}"

    @property
    def m(self) -> int:
        return len(self.prefix)

    @property
    def total(self) -> Fraction:
        return sum(self.prefix, Fraction(0)) + self.tail_sum

    @property
    def finite(self) -> bool:
        return self.tail_sum == 0

    def require_positive(self, name: str) -> None:
        for i, entry in enumerate(self.prefix, start=1):
            if entry <= 0:
                raise InvalidInputError(f"{name} entry {i} must be positive")


SpecLike = Union[DivisionSpec, tuple[TailSummedSequence, TailSummedSequence]]


def _as_sequences(spec: SpecLike) -> tuple[TailSummedSequence, TailSummedSequence]:
    if isinstance(spec, DivisionSpec):
        return TailSummedSequence(spec.p), TailSummedSequence(spec.p_prime)
    p, q = spec
    if p.m != q.m:
        raise InvalidInputError("ratio sequences must share a prefix length")
    p.require_positive("p")
    q.require_positive("p_prime")
    return p, q


def tail_cumulants(
    p: TailSummedSequence, p_prime: TailSummedSequence
) -> tuple[tuple[Fraction, ...], tuple[Fraction, ...]]:
    """Head and tail cumulants over the shared prefix, with tail-exact tail sums."""
    if p.m != p_prime.m:
        raise InvalidInputError("sequences must share a prefix length")
    return cumulants(p.prefix, p_prime.prefix, p.tail_sum, p_prime.tail_sum)


def cumulant_tail_sums(
    p: TailSummedSequence, p_prime: TailSummedSequence
) -> tuple[Fraction, Fraction]:
    """Exact sums of the head and tail cumulants beyond the prefix.

    Both follow from telescoping: partial sums of head cumulants are products
    of partial ratio sums, partial tail sums of tail cumulants are products of
    ratio tail sums.
    """
    head_total = p.total * p_prime.total
    pm = sum(p.prefix, Fraction(0))
    qm = sum(p_prime.prefix, Fraction(0))
    return head_total - pm * qm, p.tail_sum * p_prime.tail_sum


@dataclass(frozen=True)
class CollapsedInstance:
    """A three-coordinate instance equivalent to a long one at a usable pivot."""

    spec3: DivisionSpec
    x3: tuple[Fraction, ...]
    pivot: int
    branch: str


def collapse(spec: SpecLike, x, pivot: int, branch: str) -> CollapsedInstance:
    """Fold an instance to three coordinates around a pivot with nonzero discriminant.

    branch "q1" sums everything before the pivot into the first coordinate;
    branch "q2" sums everything after it (tail sums included exactly) into the
    last one.
    """
    p, q = _as_sequences(spec)
    xs = x if isinstance(x, TailSummedSequence) else TailSummedSequence(fraction_tuple(x))
    m = p.m
    if xs.m != m:
        raise InvalidInputError("x must share the prefix length of the ratio sequences")
    if branch not in ("q1", "q2"):
        raise InvalidInputError("branch must be 'q1' or 'q2'")
    if not 2 <= pivot <= m - 1:
        raise InvalidPivotError(f"pivot {pivot} outside the usable range 2..{m - 1}")
    deltas = discriminants(DivisionSpec(p.prefix, q.prefix))
    if deltas[pivot - 2] == 0:
        raise InvalidPivotError(f"pivot {pivot} has a zero discriminant")
    k = pivot - 1  # 0-based
    if branch == "q1":
        spec3 = DivisionSpec(
            (sum(p.prefix[:k], Fraction(0)), p.prefix[k], p.prefix[k + 1]),
            (sum(q.prefix[:k], Fraction(0)), q.prefix[k], q.prefix[k + 1]),
        )
        x3 = (sum(xs.prefix[:k], Fraction(0)), xs.prefix[k], xs.prefix[k + 1])
    else:
        spec3 = DivisionSpec(
            (p.prefix[k - 1], p.prefix[k], sum(p.prefix[k + 1:], Fraction(0)) + p.tail_sum),
            (q.prefix[k - 1], q.prefix[k], sum(q.prefix[k + 1:], Fraction(0)) + q.tail_sum),
        )
        x3 = (
            xs.prefix[k - 1],
            xs.prefix[k],
            sum(xs.prefix[k + 1:], Fraction(0)) + xs.tail_sum,
        )
    return CollapsedInstance(spec3, x3, pivot, branch)


def member_via_collapse(
    spec: DivisionSpec, x: Sequence[Fraction], pivot: int, mode: Mode = "audited"
) -> Verdict:
    """Decide a finite spatial instance through its three-coordinate folds.

    A fold is injective on the relevant span only when the folded triple is
    itself spatial; a planar fold can cancel a negative coordinate against
    later positive ones and is never trusted.  One injective fold suffices:
    the other basis follows exactly from head + tail = total(dc)*ab +
    total(ab)*dc.  Only a pivot whose folds are both planar is refused.
    """
    if len(x) != spec.n:
        raise InvalidInputError("area tuple length does not match the division spec")
    x = fraction_tuple(x)
    if any(entry <= 0 for entry in x):
        return Verdict(False, reason=REASON_NON_POSITIVE)
    label = classify(spec)
    if not label.spatial:
        raise InvalidInputError("folding applies to spatial specs only")
    if spec.n >= 4:
        for plane in hyperplanes(spec):
            if evaluate_plane(plane, x) != 0:
                return Verdict(False, reason=REASON_OFF_SUBSPACE)

    folded = {}
    for branch in ("q1", "q2"):
        instance = collapse(spec, x, pivot, branch)
        if not classify(instance.spec3).spatial:
            continue
        fr3 = frame(instance.spec3)
        arm = fr3.head if branch == "q1" else fr3.tail
        rows = [[fr3.ab[i], fr3.dc[i], arm[i]] for i in range(3)]
        sol = solve3(rows, list(instance.x3))
        assert sol is not None
        folded[branch] = sol
    if not folded:
        raise DegenerateCollapseError(
            f"both folds at pivot {pivot} are planar; use another pivot"
        )

    total_ab, total_dc = sum(spec.p), sum(spec.p_prime)
    if "q1" in folded:
        a, b, c = folded["q1"]
        a2, b2, c2 = a + c * total_dc, b + c * total_ab, -c
    else:
        a2, b2, c2 = folded["q2"]
        a, b, c = a2 + c2 * total_dc, b2 + c2 * total_ab, -c2
    if a > 0 and b > 0 and c > 0:
        return Verdict(True, Certificate("q1", (a, b, c)))
    if a2 > 0 and b2 > 0 and c2 > 0:
        return Verdict(True, Certificate("q2", (a2, b2, c2)))
    fr = frame(spec)
    if c == 0 and a > 0 and b > 0:
        # face of the original instance: confirm componentwise
        if all(a * u + b * v == xi for u, v, xi in zip(fr.ab, fr.dc, x)):
            if a == b:
                return Verdict(True, Certificate("ray", (a,)))
            if mode == "audited":
                return Verdict(True, Certificate("face", (a, b)))
            return Verdict(False, reason=REASON_BOUNDARY)
    closed = (a >= 0 and b >= 0 and c >= 0) or (a2 >= 0 and b2 >= 0 and c2 >= 0)
    return Verdict(False, reason=REASON_BOUNDARY if closed else REASON_NEGATIVE)


def planar_ratio_bounds(
    p: TailSummedSequence, p_prime: TailSummedSequence
) -> tuple[Fraction, Fraction]:
    """Open window for x2/x1 in the planar case: (tail2/tail1, head2/head1)."""
    head, tail = tail_cumulants(p, p_prime)
    return tail[1] / tail[0], head[1] / head[0]


def _verify_combination(
    vectors: Sequence[Sequence[Fraction]],
    tails: Sequence[Fraction],
    coeffs: Sequence[Fraction],
    x: TailSummedSequence,
) -> bool:
    for idx in range(x.m):
        if sum((c * vec[idx] for c, vec in zip(coeffs, vectors)), Fraction(0)) != x.prefix[idx]:
            return False
    forced_tail = sum((c * t for c, t in zip(coeffs, tails)), Fraction(0))
    return forced_tail == x.tail_sum


def member_tail(
    p: TailSummedSequence,
    p_prime: TailSummedSequence,
    x: TailSummedSequence,
    mode: Mode = "audited",
) -> Verdict:
    """Decide attainability for tail-summed sequences; the verdict is prefix-certified.

    The prefix coordinates are checked exactly against the certified
    combination, and the tail sum of x must equal the value the combination
    forces through the exact cumulant tail sums.  Constraints at individual
    indices beyond the prefix are not representable and are not checked.
    """
    if not (p.m == p_prime.m == x.m):
        raise InvalidInputError("all three sequences must share a prefix length")
    if p.m < 3:
        raise InvalidInputError("tail-summed decisions need a prefix of length at least 3")
    p.require_positive("p")
    p_prime.require_positive("p_prime")
    if any(entry <= 0 for entry in x.prefix):
        return Verdict(False, reason=REASON_NON_POSITIVE, prefix_certified=True)
    ratios_finite = p.finite and p_prime.finite
    if ratios_finite and x.tail_sum != 0:
        return Verdict(False, reason=REASON_OFF_SUBSPACE, prefix_certified=True)
    if not ratios_finite and x.tail_sum == 0:
        # infinitely many strictly positive strips cannot sum to zero
        return Verdict(False, reason=REASON_NON_POSITIVE, prefix_certified=True)

    prefix_spec = DivisionSpec(p.prefix, p_prime.prefix)
    head, tail = tail_cumulants(p, p_prime)
    head_tail, tail_tail = cumulant_tail_sums(p, p_prime)
    deltas = discriminants(prefix_spec)

    if all(d == 0 for d in deltas):
        for plane in hyperplanes(prefix_spec):
            if evaluate_plane(plane, x.prefix) != 0:
                return Verdict(False, reason=REASON_OFF_SUBSPACE, prefix_certified=True)
        ext_head = list(head) + [head_tail]
        ext_tail = list(tail) + [tail_tail]
        ext_x = list(x.prefix) + [x.tail_sum]
        pair = _independent_pair_ext(ext_head, ext_tail)
        assert pair is not None, "the cumulant vectors are never proportional"
        i, j = pair
        sol = solve2(
            [[ext_head[i], ext_tail[i]], [ext_head[j], ext_tail[j]]], [ext_x[i], ext_x[j]]
        )
        assert sol is not None
        a, b = sol
        if not _verify_combination((head, tail), (head_tail, tail_tail), (a, b), x):
            return Verdict(False, reason=REASON_OFF_SUBSPACE, prefix_certified=True)
        if a > 0 and b > 0:
            # re-decomposition intervals over the prefix plus the virtual
            # tail-sum coordinate, so inconsistent tails are caught too
            ext_ab = list(p.prefix) + [p.tail_sum]
            ext_dc = list(p_prime.prefix) + [p_prime.tail_sum]
            cert = Certificate(
                "degenerate",
                (a, b),
                q1_interval=_coefficient_interval(
                    ext_ab, ext_dc, ext_head, ext_x, a, b, True
                ),
                q2_interval=_coefficient_interval(
                    ext_ab, ext_dc, ext_tail, ext_x, a, b, False
                ),
            )
            return Verdict(True, cert, prefix_certified=True)
        reason = REASON_BOUNDARY if (a >= 0 and b >= 0) else REASON_NEGATIVE
        return Verdict(False, reason=reason, prefix_certified=True)

    pivot = next(i for i, d in enumerate(deltas) if d != 0) + 2
    cols = (pivot - 2, pivot - 1, pivot)
    ab, dc = p.prefix, p_prime.prefix
    rows = [[ab[cidx], dc[cidx], head[cidx]] for cidx in cols]
    sol = solve3(rows, [x.prefix[cidx] for cidx in cols])
    assert sol is not None, "pivot solve is regular whenever the discriminant is nonzero"
    a, b, c = sol
    if not _verify_combination(
        (ab, dc, head), (p.tail_sum, p_prime.tail_sum, head_tail), (a, b, c), x
    ):
        return Verdict(False, reason=REASON_OFF_SUBSPACE, prefix_certified=True)
    # the two bases are linked through head + tail = total(p')*ab + total(p)*dc
    a2, b2, c2 = a + c * p_prime.total, b + c * p.total, -c
    if a > 0 and b > 0 and c > 0:
        return Verdict(True, Certificate("q1", (a, b, c)), prefix_certified=True)
    if a2 > 0 and b2 > 0 and c2 > 0:
        return Verdict(True, Certificate("q2", (a2, b2, c2)), prefix_certified=True)
    if c == 0 and a > 0 and b > 0:
        if a == b:
            return Verdict(True, Certificate("ray", (a,)), prefix_certified=True)
        if mode == "audited":
            return Verdict(True, Certificate("face", (a, b)), prefix_certified=True)
        return Verdict(False, reason=REASON_BOUNDARY, prefix_certified=True)
    closed = (a >= 0 and b >= 0 and c >= 0) or (a2 >= 0 and b2 >= 0 and c2 >= 0)
    return Verdict(
        False,
        reason=REASON_BOUNDARY if closed else REASON_NEGATIVE,
        prefix_certified=True,
    )


def _independent_pair_ext(u: Sequence[Fraction], v: Sequence[Fraction]):
    for j in range(1, len(u)):
        if u[0] * v[j] != u[j] * v[0]:
            return (0, j)
    return None


def extend_solution(
    p: Sequence[Fraction],
    p_prime: Sequence[Fraction],
    x1: Fraction,
    x2: Fraction,
    i: int,
) -> Fraction:
    """The unique next coordinate keeping (x1, x2, x_{i+1}) dependent on the ratio rows.

    Returns the x_{i+1} that makes the 3x3 determinant with rows
    (p1, p2, p_{i+1}), (p'1, p'2, p'_{i+1}), (x1, x2, x_{i+1}) vanish; needs
    the first two ratio columns to be independent.
    """
    p = fraction_tuple(p)
    p_prime = fraction_tuple(p_prime)
    x1, x2 = to_fraction(x1), to_fraction(x2)
    if i < 2 or i >= len(p) or i >= len(p_prime):
        raise InvalidInputError("index out of range for the extension formula")
    denom = p[1] * p_prime[0] - p[0] * p_prime[1]
    if denom == 0:
        raise DegenerateDenominatorError("the first two ratio columns are proportional")
    numer = x1 * (p[1] * p_prime[i] - p[i] * p_prime[1]) - x2 * (
        p[0] * p_prime[i] - p[i] * p_prime[0]
    )
    return numer / denom


@dataclass(frozen=True)
class StationCoefficients:
    """Arithmetic-progression stations for proportional sequences.

    sigma[i] places the i-th scaled coordinate on the affine line through the
    first two; the bounds window the second scaled coordinate's ratio to the
    first.  Stations are strictly increasing.
    """

    sigma: tuple[Fraction, ...]
    bounds: tuple[Fraction, Fraction]


@dataclass(frozen=True)
class StationReport:
    coefficients: StationCoefficients
    scaled: tuple[Fraction, ...]
    ratio: Fraction
    progression_ok: bool
    accepted: bool
    reason: str | None = None


def station_coefficients(p: TailSummedSequence) -> StationCoefficients:
    if p.m < 3:
        raise InvalidInputError("stations need a prefix of length at least 3")
    p.require_positive("p")
    base = p.prefix[0] + p.prefix[1]
    sigma = []
    running = Fraction(0)
    for i in range(2, p.m):  # 0-based index i corresponds to station i+1
        running += p.prefix[i - 1]
        sigma.append((p.prefix[0] + p.prefix[i]) / base + 2 * running / base)
    after_first = p.total - p.prefix[0]
    lower = 1 - base / (p.prefix[0] + 2 * after_first)
    upper = 2 + p.prefix[1] / p.prefix[0]
    return StationCoefficients(tuple(sigma), (lower, upper))


def station_check(p: TailSummedSequence, x: TailSummedSequence) -> StationReport:
    """Check a candidate sequence against the proportional-case progression law.

    Applies when both sides carry the same ratio sequence p.  The scaled
    values x_i/p_i must advance as an exact arithmetic progression in the
    stations, and the ratio of the second to the first must fall strictly
    inside the open bounds.
    """
    if x.m != p.m:
        raise InvalidInputError("sequences must share a prefix length")
    coeffs = station_coefficients(p)
    scaled = tuple(xi / pi for xi, pi in zip(x.prefix, p.prefix))
    if scaled[0] <= 0:
        return StationReport(coeffs, scaled, Fraction(0), False, False, REASON_NON_POSITIVE)
    step = scaled[1] - scaled[0]
    progression_ok = all(
        scaled[i] == scaled[0] + coeffs.sigma[i - 2] * step for i in range(2, p.m)
    )
    ratio = scaled[1] / scaled[0]
    lower, upper = coeffs.bounds
    if not progression_ok:
        return StationReport(coeffs, scaled, ratio, False, False, REASON_OFF_SUBSPACE)
    if ratio == lower or ratio == upper:
        return StationReport(coeffs, scaled, ratio, True, False, REASON_BOUNDARY)
    if not lower < ratio < upper:
        return StationReport(coeffs, scaled, ratio, True, False, REASON_NEGATIVE)
    return StationReport(coeffs, scaled, ratio, True, True, None)
