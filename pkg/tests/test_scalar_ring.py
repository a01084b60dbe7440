"""Laurent and rational scalar arithmetic, text round-trips, specialization."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qskein.scalar_ring import (
    Laurent,
    RationalScalar,
    SpecPoint,
    frac_normalize,
    integer,
    laurent_arith,
    q_pow,
    specialize,
    v_pow,
)


def lau(text):
    return Laurent.parse(text)


laurents = st.builds(
    Laurent,
    st.dictionaries(st.integers(-6, 6), st.integers(-9, 9), max_size=5),
)


class TestLaurent:
    def test_unit_cancellation(self):
        assert v_pow(2) * v_pow(-2) == Laurent.one()

    def test_q_arith(self):
        # (q - q^-1) * q = v^8 - 1
        q, qinv = q_pow(1), q_pow(-1)
        assert (q - qinv) * q == lau("1*v^8 + -1")

    def test_a_power(self):
        # -A^(5/2) in integer v-powers is -v^5
        assert lau("-1*A^2") * lau("-1*v") == v_pow(5)
        assert -v_pow(5) == lau("-1*v^5")

    def test_canonical_no_zero_coeffs(self):
        x = lau("1*v^2 + -1*v^2")
        assert x.is_zero and x.terms() == {}

    def test_render_examples(self):
        assert (-v_pow(5)).render() == "-1*v^5"
        assert (q_pow(2) - integer(1)).render() == "1*v^8 + -1"
        assert Laurent.zero().render() == "0"
        assert v_pow(1).render() == "1*v"

    def test_parse_aliases(self):
        assert lau("q") == v_pow(4)
        assert lau("A^3") == v_pow(6)
        assert lau("2*q^-1 + 3") == Laurent({-4: 2, 0: 3})

    def test_parse_error_position(self):
        with pytest.raises(ValueError, match="token 1"):
            Laurent.parse("1*v^2 + 3*w")

    def test_unit_inverse(self):
        assert v_pow(3, -1).unit_inverse() == v_pow(-3, -1)
        with pytest.raises(ValueError):
            (v_pow(1) + integer(1)).unit_inverse()
        with pytest.raises(ValueError):
            v_pow(0, 2).unit_inverse()

    def test_arith_dispatch(self):
        assert laurent_arith(v_pow(1), v_pow(2), "add") == Laurent({1: 1, 2: 1})
        assert laurent_arith(v_pow(1), None, "neg") == v_pow(1, -1)
        with pytest.raises(ValueError):
            laurent_arith(v_pow(1), v_pow(1), "div")

    @given(laurents, laurents, laurents)
    @settings(max_examples=100, deadline=None)
    def test_ring_axioms(self, x, y, z):
        assert x + y == y + x
        assert x * y == y * x
        assert (x + y) + z == x + (y + z)
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
        assert x + Laurent.zero() == x
        assert x * Laurent.one() == x

    @given(laurents)
    @settings(max_examples=100, deadline=None)
    def test_render_parse_round_trip(self, x):
        assert Laurent.parse(x.render()) == x


class TestSpecialize:
    def test_spec_examples(self):
        assert specialize(q_pow(2) - integer(1), SpecPoint.integers()) == 0
        assert specialize(v_pow(2, 3) + integer(5), SpecPoint.prime_field(3)) == 2

    def test_nonprime_rejected(self):
        with pytest.raises(ValueError):
            SpecPoint.prime_field(4)
        with pytest.raises(ValueError):
            SpecPoint.prime_field(1)
        with pytest.raises(ValueError):
            SpecPoint("integers", 3)

    @given(laurents, laurents)
    @settings(max_examples=100, deadline=None)
    def test_specialize_is_ring_hom(self, x, y):
        for at in (SpecPoint.integers(), SpecPoint.prime_field(5)):
            sx, sy = specialize(x, at), specialize(y, at)
            red = (lambda n: n % 5) if at.p else (lambda n: n)
            assert specialize(x + y, at) == red(sx + sy)
            assert specialize(x * y, at) == red(sx * sy)


class TestRational:
    def test_frac_normalize_examples(self):
        # (v^2 - 1)/(v - 1) reduces to (v + 1)/1
        r = frac_normalize((-1, 0, 1), (-1, 1))
        assert r.as_pair() == ((1, 1), (1,))
        # zero numerator forces the canonical (0, 1) pair
        assert frac_normalize((), (0, 0, 1)).as_pair() == ((), (1,))

    def test_zero_denominator_rejected(self):
        with pytest.raises(ZeroDivisionError):
            frac_normalize((1,), ())

    def test_inverse(self):
        r = frac_normalize((1, 1), (1,))
        assert r.inverse().as_pair() == ((1,), (1, 1))
        with pytest.raises(ZeroDivisionError):
            RationalScalar.zero().inverse()

    def test_eager_normalization_idempotent(self):
        r = frac_normalize((2, 2), (4,))
        assert r.as_pair() == ((1, 1), (2,))
        assert RationalScalar(*r.as_pair()).as_pair() == r.as_pair()

    def test_negative_leading_denominator_flipped(self):
        r = frac_normalize((1,), (0, -1))
        assert r.as_pair() == ((-1,), (0, 1))

    def test_to_laurent(self):
        x = Laurent({-2: 1, 0: 3})
        assert x.to_rational().to_laurent() == x
        with pytest.raises(ValueError):
            frac_normalize((1,), (1, 1)).to_laurent()

    def test_embed_agreement_bulk(self):
        # Laurent arithmetic and rational arithmetic agree through the embedding.
        rng = random.Random(20260819)
        for _ in range(1000):
            x = Laurent({rng.randint(-5, 5): rng.randint(-9, 9) for _ in range(rng.randint(0, 4))})
            y = Laurent({rng.randint(-5, 5): rng.randint(-9, 9) for _ in range(rng.randint(0, 4))})
            assert (x + y).to_rational() == x.to_rational() + y.to_rational()
            assert (x * y).to_rational() == x.to_rational() * y.to_rational()
            assert (x - y).to_rational() == x.to_rational() - y.to_rational()

    def test_field_axioms_small(self):
        a = frac_normalize((1, 2), (1, 0, 1))
        b = frac_normalize((0, 1), (1, 1))
        c = frac_normalize((3,), (2, 1))
        assert (a + b) * c == a * c + b * c
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * a.inverse() == RationalScalar.one()

    def test_rational_specialize(self):
        r = frac_normalize((1, 1), (2,))  # (v + 1)/2 -> 1 at v = 1
        assert r.specialize(SpecPoint.integers()) == 1
        assert frac_normalize((1, 1), (3,)).specialize(SpecPoint.prime_field(5)) == 4
