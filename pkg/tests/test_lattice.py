from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from k3walls.errors import NotSpherical, ZeroClass
from k3walls.lattice import (
    MukaiClass,
    SquareType,
    SurfaceData,
    classify,
    frac_str,
    is_primitive,
    mukai_pairing,
    primitive,
    proportional,
    rational_sqrt,
    spherical_reflect,
    square,
    tensor_line_bundle,
    to_fraction,
)

from conftest import integral_classes, rational_classes, rationals, surfaces

X1, X2 = SurfaceData(1), SurfaceData(2)


class TestParsing:
    def test_to_fraction_forms(self):
        assert to_fraction("-7/4") == Fraction(-7, 4)
        assert to_fraction(" 3 ") == 3
        assert to_fraction(Fraction(1, 3)) == Fraction(1, 3)

    @pytest.mark.parametrize("bad", ["1.5", "abc", "1/0", "", "1/-2"])
    def test_malformed_rationals(self, bad):
        with pytest.raises(ValueError):
            to_fraction(bad)

    def test_floats_refused(self):
        with pytest.raises(TypeError):
            to_fraction(0.5)
        with pytest.raises(TypeError):
            to_fraction(True)

    def test_frac_str_keeps_denominator(self):
        assert frac_str(Fraction(3)) == "3/1"
        assert frac_str(Fraction(-4, 7)) == "-4/7"

    def test_parse_class(self):
        assert MukaiClass.parse("(1, 0, -4)") == MukaiClass(1, 0, -4)
        assert MukaiClass.parse("0,1/3,-4").c == Fraction(1, 3)
        with pytest.raises(ValueError):
            MukaiClass.parse("1,2")

    def test_rational_sqrt(self):
        assert rational_sqrt(Fraction(9, 4)) == Fraction(3, 2)
        assert rational_sqrt(Fraction(3, 4)) is None
        assert rational_sqrt(Fraction(-1)) is None

    def test_surface_validation(self):
        with pytest.raises(ValueError):
            SurfaceData(0)


class TestPairing:
    def test_h_tilde_square(self):
        assert mukai_pairing(MukaiClass(0, -1, 0), MukaiClass(0, -1, 0), X2) == 4

    @pytest.mark.parametrize("d", [1, 2, 7])
    def test_hilbert_vector_square(self, d):
        v = MukaiClass(1, 0, -4)
        assert mukai_pairing(v, v, SurfaceData(d)) == 8

    @pytest.mark.parametrize("d", [1, 5])
    def test_rank_against_point(self, d):
        assert mukai_pairing(MukaiClass(1, 0, 0), MukaiClass(0, 0, 1), SurfaceData(d)) == -1

    @pytest.mark.parametrize("n", range(0, 51))
    def test_hilbert_square_all_n(self, n):
        assert square(MukaiClass(1, 0, 1 - n), X1) == 2 * n - 2

    @given(rational_classes(), rational_classes(), rational_classes(), rationals(), rationals(), surfaces)
    def test_bilinear_and_symmetric(self, u, v, w, a, b, X):
        combo = u.scale(a) + v.scale(b)
        assert mukai_pairing(combo, w, X) == a * mukai_pairing(u, w, X) + b * mukai_pairing(v, w, X)
        assert mukai_pairing(u, v, X) == mukai_pairing(v, u, X)
        assert square(u, X) == mukai_pairing(u, u, X)


class TestClassify:
    @pytest.mark.parametrize("d", [1, 3])
    def test_examples(self, d):
        X = SurfaceData(d)
        assert classify(MukaiClass(1, 0, 1), X).kind is SquareType.SPHERICAL
        point = classify(MukaiClass(0, 0, 1), X)
        assert point.kind is SquareType.ISOTROPIC and point.positive_vector
        assert classify(MukaiClass(1, 0, -4), X).kind is SquareType.POSITIVE_SQUARE

    def test_negative_and_nonpositive(self):
        other = classify(MukaiClass(1, 0, 2), X1)
        assert other.kind is SquareType.NEGATIVE_SQUARE_OTHER and not other.positive_vector
        assert not classify(MukaiClass(0, 0, -1), X1).positive_vector
        assert not classify(MukaiClass(2, 0, 2), X1).positive_vector  # not primitive
        assert classify(MukaiClass(0, 1, 3), X1).positive_vector
        assert not classify(MukaiClass(0, -1, 3), X1).positive_vector

    def test_zero_class(self):
        with pytest.raises(ZeroClass):
            classify(MukaiClass(0, 0, 0), X1)


class TestPrimitive:
    def test_primitive(self):
        assert primitive(MukaiClass(4, -6, 2)) == MukaiClass(2, -3, 1)
        assert primitive(MukaiClass(Fraction(1, 2), 0, Fraction(-3, 4))) == MukaiClass(2, 0, -3)
        assert primitive(MukaiClass(0, -5, 0)) == MukaiClass(0, -1, 0)
        assert is_primitive(MukaiClass(2, -3, 1)) and not is_primitive(MukaiClass(2, 0, 2))
        with pytest.raises(ZeroClass):
            primitive(MukaiClass(0, 0, 0))

    @given(rational_classes(), st.integers(1, 9))
    def test_primitive_is_positive_multiple(self, v, k):
        if v.is_zero:
            return
        p = primitive(v)
        assert is_primitive(p) and proportional(p, v)
        assert primitive(v.scale(k)) == p
        # same ray, not the opposite one
        ratio = next(a / b for a, b in zip(v.as_tuple(), p.as_tuple()) if b != 0)
        assert ratio > 0


class TestTensorAndReflection:
    def test_tensor_examples(self):
        assert tensor_line_bundle(MukaiClass(1, 0, 1), -1, X1) == MukaiClass(1, -1, 2)
        assert tensor_line_bundle(MukaiClass(3, 2, -5), 0, X2) == MukaiClass(3, 2, -5)
        assert tensor_line_bundle(MukaiClass(0, 0, 1), 5, X2) == MukaiClass(0, 0, 1)

    @given(integral_classes(), st.integers(-5, 5), surfaces)
    def test_tensor_matches_cohomology_product(self, v, m, X):
        # (1, mH, m^2 H^2 / 2) . (r, cH, s) computed term by term
        d = X.d
        expected = MukaiClass(v.r, v.c + m * v.r, v.s + 2 * d * m * v.c + Fraction(m * m * 2 * d, 2) * v.r)
        assert tensor_line_bundle(v, m, X) == expected

    def test_reflection_examples(self):
        xi = MukaiClass(1, 0, 1)
        assert spherical_reflect(xi, MukaiClass(0, 1, -2), X1) == MukaiClass(2, 1, 0)
        assert spherical_reflect(xi, xi, X2) == -xi
        once = spherical_reflect(xi, MukaiClass(0, 1, -2), X1)
        assert spherical_reflect(xi, once, X1) == MukaiClass(0, 1, -2)

    def test_reflection_needs_spherical(self):
        with pytest.raises(NotSpherical):
            spherical_reflect(MukaiClass(1, 0, 0), MukaiClass(0, 0, 1), X1)

    @given(integral_classes(), integral_classes(), st.integers(-4, 4), surfaces)
    def test_isometries(self, u, w, m, X):
        assert mukai_pairing(tensor_line_bundle(u, m, X), tensor_line_bundle(w, m, X), X) == mukai_pairing(u, w, X)
        xi = tensor_line_bundle(MukaiClass(1, 0, 1), m, X)
        assert square(xi, X) == -2
        ru, rw = spherical_reflect(xi, u, X), spherical_reflect(xi, w, X)
        assert mukai_pairing(ru, rw, X) == mukai_pairing(u, w, X)
        assert spherical_reflect(xi, ru, X) == u
