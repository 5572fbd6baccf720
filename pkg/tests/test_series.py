import random

import pytest

from quivermotive.lrat import LRat
from quivermotive.series import MSeries, exponents_upto

ONE = LRat.from_int(1)


def geometric(bound):
    # 1/(1 - T) truncated
    return MSeries(1, bound, {(k,): ONE for k in range(bound + 1)})


def random_series(rng, nvars, bound, unit=False):
    coeffs = {}
    for exp in exponents_upto(nvars, bound):
        if rng.random() < 0.65:
            num = [rng.randint(-3, 3) for _ in range(rng.randint(1, 3))]
            den = [rng.randint(-3, 3) for _ in range(rng.randint(1, 3))]
            if not any(den):
                den = [1]
            c = LRat(num, den)
            if c:
                coeffs[exp] = c
    if unit:
        coeffs[(0,) * nvars] = LRat.from_int(rng.choice((1, -1, 2)))
    return MSeries(nvars, bound, coeffs)


class TestConstruction:
    def test_drops_zero_coefficients(self):
        s = MSeries(1, 2, {(0,): LRat(), (1,): ONE})
        assert s.coeffs == {(1,): ONE}

    def test_rejects_overflowing_exponent(self):
        with pytest.raises(ValueError, match="exceeds truncation bound"):
            MSeries(1, 2, {(3,): ONE})

    def test_rejects_bad_vector(self):
        with pytest.raises(ValueError):
            MSeries(2, 2, {(1,): ONE})

    def test_exponents_graded_lex(self):
        assert exponents_upto(2, 2) == (
            (0, 0),
            (0, 1),
            (1, 0),
            (0, 2),
            (1, 1),
            (2, 0),
        )


class TestAddMul:
    def test_product_of_conjugates(self):
        one_plus = MSeries(1, 2, {(0,): ONE, (1,): ONE})
        one_minus = MSeries(1, 2, {(0,): ONE, (1,): -ONE})
        assert one_plus * one_minus == MSeries(1, 2, {(0,): ONE, (2,): -ONE})

    def test_sum(self):
        one_plus = MSeries(1, 2, {(0,): ONE, (1,): ONE})
        one_minus = MSeries(1, 2, {(0,): ONE, (1,): -ONE})
        assert one_plus + one_minus == MSeries.constant(1, 2, 2)

    def test_mismatched_bound_rejected(self):
        with pytest.raises(ValueError, match="mismatched series shapes"):
            MSeries.constant(1, 2, 1) * MSeries.constant(1, 3, 1)
        with pytest.raises(ValueError, match="mismatched series shapes"):
            MSeries.constant(1, 2, 1) + MSeries.constant(2, 2, 1)

    def test_truncation_drops_high_degree(self):
        t = MSeries(1, 1, {(1,): ONE})
        assert t * t == MSeries(1, 1, {})


class TestInvert:
    def test_geometric_series(self):
        one_minus = MSeries(1, 5, {(0,): ONE, (1,): -ONE})
        assert one_minus.invert() == geometric(5)

    def test_constant(self):
        assert MSeries.constant(1, 3, 2).invert() == MSeries.constant(1, 3, LRat(1, 2))

    def test_no_constant_term(self):
        with pytest.raises(ValueError, match="series not invertible"):
            MSeries(1, 3, {(1,): ONE}).invert()

    def test_round_trip_random(self):
        rng = random.Random(42)
        for _ in range(25):
            nvars = rng.choice((1, 2))
            bound = rng.randint(1, 6 if nvars == 1 else 4)
            s = random_series(rng, nvars, bound, unit=True)
            assert s.invert().invert() == s
            assert s * s.invert() == MSeries.constant(nvars, bound, 1)


class TestCoefficient:
    def test_geometric(self):
        assert geometric(5).coefficient((3,)) == ONE

    def test_absent_is_zero(self):
        s = MSeries(1, 2, {(0,): ONE, (2,): -ONE})
        assert s.coefficient((1,)) == LRat()

    def test_beyond_bound_rejected(self):
        with pytest.raises(ValueError, match="outside truncation bound"):
            geometric(5).coefficient((6,))


class TestAlgebraicProperties:
    def test_mul_commutative_associative(self):
        rng = random.Random(7)
        for _ in range(20):
            nvars = rng.choice((1, 2))
            bound = rng.randint(1, 5 if nvars == 1 else 4)
            a = random_series(rng, nvars, bound)
            b = random_series(rng, nvars, bound)
            c = random_series(rng, nvars, bound)
            assert a * b == b * a
            assert (a * b) * c == a * (b * c)

    def test_truncation_consistency(self):
        rng = random.Random(8)
        for _ in range(20):
            nvars = rng.choice((1, 2))
            bound = rng.randint(2, 5)
            smaller = rng.randint(1, bound - 1)
            a = random_series(rng, nvars, bound)
            b = random_series(rng, nvars, bound)
            direct = a.restrict(smaller) * b.restrict(smaller)
            assert (a * b).restrict(smaller) == direct
            u = random_series(rng, nvars, bound, unit=True)
            assert u.invert().restrict(smaller) == u.restrict(smaller).invert()
