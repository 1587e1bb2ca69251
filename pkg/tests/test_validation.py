"""Input validation and boundary behavior across the public surface."""
from fractions import Fraction as F

import pytest

from quadareas import (
    ConvexQuad,
    DivisionSpec,
    Interval,
    InvalidInputError,
    TailSummedSequence,
    apex_quad,
    frame,
    member,
    pt,
    strip_areas,
    synthesize_witness,
    to_fraction,
)


class TestDivisionSpecValidation:
    def test_single_segment_rejected(self):
        with pytest.raises(InvalidInputError):
            DivisionSpec.of((1,), (1,))

    def test_length_mismatch(self):
        with pytest.raises(InvalidInputError):
            DivisionSpec.of((1, 2), (1, 2, 3))

    def test_zero_ratio_named(self):
        with pytest.raises(InvalidInputError) as info:
            DivisionSpec.of((1, 0, 2), (1, 1, 1))
        assert "entry 2" in str(info.value)

    def test_negative_ratio(self):
        with pytest.raises(InvalidInputError):
            DivisionSpec.of((1, 1), (1, -3))


class TestRationalParsing:
    def test_accepts_integers_and_fractions(self):
        assert to_fraction("4/6") == F(2, 3)
        assert to_fraction("-7") == F(-7)

    def test_rejects_decimals(self):
        with pytest.raises(InvalidInputError):
            to_fraction("1.5")

    def test_rejects_zero_denominator(self):
        with pytest.raises(InvalidInputError):
            to_fraction("1/0")

    def test_rejects_garbage(self):
        with pytest.raises(InvalidInputError):
            to_fraction("a/b")


class TestSequenceParsing:
    def test_malformed_suffix(self):
        with pytest.raises(InvalidInputError):
            TailSummedSequence.parse("1,2 | rest=3")

    def test_empty_prefix(self):
        with pytest.raises(InvalidInputError):
            TailSummedSequence.parse(" | tail=1")


class TestQuadParsing:
    def test_wrong_point_count(self):
        with pytest.raises(InvalidInputError):
            ConvexQuad.parse("0,0;1,0;1,1")

    def test_round_trip(self):
        quad = ConvexQuad.parse("2,0;8,0;0,4;0,1")
        assert ConvexQuad.parse(quad.text()) == quad


class TestApexQuadValidation:
    SPEC = DivisionSpec.of((1, 2), (2, 1))

    def test_invalid_branch(self):
        with pytest.raises(InvalidInputError):
            apex_quad(self.SPEC, F(1), F(1), F(1), "q3")

    def test_non_positive_parameters(self):
        for bad in ((F(0), F(1), F(1)), (F(1), F(-1), F(1)), (F(1), F(1), F(0))):
            with pytest.raises(InvalidInputError):
                apex_quad(self.SPEC, *bad)


class TestMembershipEdges:
    def test_zero_middle_entry(self):
        v = member(DivisionSpec.of((1, 1, 1), (1, 1, 1)), (F(1), F(0), F(1)))
        assert not v.attainable and v.reason == "non-positive-entry"

    def test_q2_witness_for_two_segments(self):
        spec = DivisionSpec.of((1, 2), (2, 1))
        fr = frame(spec)
        x = tuple(F(1, 2) * h + 2 * t for h, t in zip(fr.head, fr.tail))
        out = synthesize_witness(spec, x)
        assert out.construction == "apex-q2"
        assert strip_areas(out.quad, spec) == x


class TestInterval:
    def test_open_contains_excludes_endpoints(self):
        window = Interval(F(1), F(3))
        assert window.contains(F(2))
        assert not window.contains(F(1))
        assert not window.contains(F(3))
        assert window.midpoint == F(2)

    def test_point_interval(self):
        point = Interval(F(5, 2), F(5, 2))
        assert point.is_point
        assert point.contains(F(5, 2))
        assert not point.contains(F(2)) and point.midpoint == F(5, 2)


class TestClockwiseCanonicalization:
    def test_swap_recovers_the_original_labeling(self):
        # a reversed traversal of a valid quad is clockwise; canonicalization
        # swaps B and D back, recovering the same divided sides
        ccw = ConvexQuad.of(pt(2, 0), pt(8, 0), pt(0, 4), pt(0, 1))
        spec = DivisionSpec.of((1, 1, 1), (1, 1, 1))
        swapped = ConvexQuad.of(ccw.a, ccw.d, ccw.c, ccw.b)
        assert swapped == ccw
        assert strip_areas(swapped, spec) == strip_areas(ccw, spec)
