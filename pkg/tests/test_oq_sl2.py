"""Quantized coordinate ring: Hopf structure maps, the co-R-matrix pair, the
half twist and its convolution relatives, conjugation and rotation."""

import random

import pytest

from qskein.nc_rewrite import NcPoly, UNIT_WORD
from qskein.oq_sl2 import Functional, OQ_NAMES, GEN_A, GEN_B, GEN_C, GEN_D
from qskein.scalar_ring import Laurent, RationalScalar, q_pow, v_pow

GENS = [(GEN_A,), (GEN_B,), (GEN_C,), (GEN_D,)]


def el(oq, text):
    return NcPoly.parse(text, OQ_NAMES)


def word_pool(oq, degree, rng, count):
    pool = oq.rewrite.filtered_basis(degree)
    return [rng.choice(pool) for _ in range(count)] + GENS


class TestHopfAxioms:
    def test_coproduct_matrix_pattern(self, oq):
        cp = {legs: c for legs, c in oq.coproduct(oq.gen("a")).items()}
        assert cp == {
            ((GEN_A,), (GEN_A,)): Laurent.one(),
            ((GEN_B,), (GEN_C,)): Laurent.one(),
        }
        assert oq.coproduct_words(UNIT_WORD, 2) == (((UNIT_WORD, UNIT_WORD), Laurent.one()),)

    def test_counit_identity_pattern(self, oq):
        vals = [oq.counit_word(g) for g in GENS]
        assert [v.render() for v in vals] == ["1", "0", "0", "1"]

    def test_antipode_table(self, oq):
        images = [oq.antipode_word(g).render(OQ_NAMES) for g in GENS]
        assert images == ["1 * d", "-1*v^4 * b", "-1*v^-4 * c", "1 * a"]
        assert oq.antipode(el(oq, "1 * a.b")) == el(oq, "-1*v^4 * b.d")

    def test_coassociativity(self, oq):
        rng = random.Random(10)
        for w in word_pool(oq, 2, rng, 50):
            left, right = {}, {}
            for (l1, l2), c in oq.coproduct_words(w, 2):
                for (m1, m2), c2 in oq.coproduct_words(l1, 2):
                    k = (m1, m2, l2)
                    left[k] = left.get(k, Laurent.zero()) + c * c2
                for (m1, m2), c2 in oq.coproduct_words(l2, 2):
                    k = (l1, m1, m2)
                    right[k] = right.get(k, Laurent.zero()) + c * c2
            clean = lambda d: {k: v for k, v in d.items() if v}
            tri = {legs: c for legs, c in oq.coproduct_words(w, 3)}
            assert clean(left) == clean(right) == clean(tri)

    def test_counit_law(self, oq):
        rng = random.Random(11)
        for w in word_pool(oq, 2, rng, 50):
            lhs = NcPoly.zero()
            rhs = NcPoly.zero()
            for (l1, l2), c in oq.coproduct_words(w, 2):
                lhs = lhs + NcPoly.monomial(l2).scale(c * oq.counit_word(l1))
                rhs = rhs + NcPoly.monomial(l1).scale(c * oq.counit_word(l2))
            assert lhs == rhs == NcPoly.monomial(w)

    def test_antipode_law(self, oq):
        rng = random.Random(12)
        for w in word_pool(oq, 2, rng, 50):
            lhs = NcPoly.zero()
            rhs = NcPoly.zero()
            for (l1, l2), c in oq.coproduct_words(w, 2):
                lhs = lhs + oq.rewrite.mul(oq.antipode_word(l1), NcPoly.monomial(l2)).scale(c)
                rhs = rhs + oq.rewrite.mul(NcPoly.monomial(l1), oq.antipode_word(l2)).scale(c)
            unit = NcPoly.monomial(UNIT_WORD).scale(oq.counit_word(w))
            assert lhs == unit and rhs == unit

    def test_antipode_antihomomorphism(self, oq):
        rng = random.Random(13)
        pool = oq.rewrite.filtered_basis(2)
        for _ in range(30):
            x, y = NcPoly.monomial(rng.choice(pool)), NcPoly.monomial(rng.choice(pool))
            assert oq.antipode(oq.rewrite.mul(x, y)) == oq.rewrite.mul(
                oq.antipode(y), oq.antipode(x)
            )


class TestCoRMatrix:
    def test_generator_table(self, oq):
        table = {
            ("a", "a"): "1*v^2",
            ("a", "d"): "1*v^-2",
            ("d", "a"): "1*v^-2",
            ("d", "d"): "1*v^2",
            ("b", "c"): "1*v^2 + -1*v^-6",
        }
        for n1 in "abcd":
            for n2 in "abcd":
                got = oq.r_pair(oq.gen(n1), oq.gen(n2)).render()
                assert got == table.get((n1, n2), "0")

    def test_unit_legs(self, oq):
        assert oq.r_pair_words(UNIT_WORD, (GEN_A,)) == Laurent.one()
        assert oq.r_pair_words(UNIT_WORD, (GEN_B,)) == Laurent.zero()
        assert oq.r_pair_words((GEN_B,), UNIT_WORD) == Laurent.zero()
        assert oq.r_pair_words(UNIT_WORD, UNIT_WORD) == Laurent.one()

    def test_intertwining_law(self, oq):
        # r(x2,y2) y1 x1 summed equals x2 y2 r(x1,y1) summed
        rng = random.Random(14)
        pairs = [(g1, g2) for g1 in GENS for g2 in GENS]
        pool = oq.rewrite.filtered_basis(2)
        pairs += [(rng.choice(pool), rng.choice(pool)) for _ in range(25)]
        for wx, wy in pairs:
            lhs, rhs = NcPoly.zero(), NcPoly.zero()
            for (x1, x2), cx in oq.coproduct_words(wx, 2):
                for (y1, y2), cy in oq.coproduct_words(wy, 2):
                    c = cx * cy
                    lhs = lhs + oq.rewrite.mul(
                        NcPoly.monomial(y1), NcPoly.monomial(x1)
                    ).scale(c * oq.r_pair_words(x2, y2))
                    rhs = rhs + oq.rewrite.mul(
                        NcPoly.monomial(x2), NcPoly.monomial(y2)
                    ).scale(c * oq.r_pair_words(x1, y1))
            assert lhs == rhs

    def test_r_bar_is_convolution_inverse(self, oq):
        rng = random.Random(15)
        pool = oq.rewrite.filtered_basis(2)
        pairs = [(g1, g2) for g1 in GENS for g2 in GENS]
        pairs += [(rng.choice(pool), rng.choice(pool)) for _ in range(25)]
        for wx, wy in pairs:
            target = oq.counit_word(wx) * oq.counit_word(wy)
            fwd = Laurent.zero()
            bwd = Laurent.zero()
            for (x1, x2), cx in oq.coproduct_words(wx, 2):
                for (y1, y2), cy in oq.coproduct_words(wy, 2):
                    c = cx * cy
                    fwd = fwd + c * oq.r_pair_words(x1, y1) * oq.r_bar_pair_words(x2, y2)
                    bwd = bwd + c * oq.r_bar_pair_words(x1, y1) * oq.r_pair_words(x2, y2)
            assert fwd == target and bwd == target

    def test_matrices(self, oq):
        def rows(mat):
            return [[c.render() for c in row] for row in mat]

        assert rows(oq.r_matrix()) == [
            ["1*v^2", "0", "0", "0"],
            ["0", "1*v^-2", "1*v^2 + -1*v^-6", "0"],
            ["0", "0", "1*v^-2", "0"],
            ["0", "0", "0", "1*v^2"],
        ]
        # the braiding matrix is the flip composed with the co-R-matrix
        r, rhat = oq.r_matrix(), oq.braiding_matrix()
        for i in range(2):
            for j in range(2):
                for k in range(2):
                    for l in range(2):
                        assert rhat[2 * i + j][2 * k + l] == r[2 * j + i][2 * k + l]


class TestHalfTwist:
    def test_generator_values(self, oq):
        vals = [oq.half_twist_word(g).render() for g in GENS]
        assert vals == ["0", "-1*v^5", "1*v", "0"]
        assert oq.half_twist_word(UNIT_WORD) == Laurent.one()

    def test_degree_two_values(self, oq):
        nonzero = {
            w: oq.half_twist_word(w).render()
            for w in oq.rewrite.graded_basis(2)
            if oq.half_twist_word(w)
        }
        assert nonzero == {(GEN_B, GEN_B): "1*v^12", (GEN_C, GEN_C): "1*v^4"}

    def test_product_value(self, oq):
        # t(b c) through the rewritten product q(ad) - q(1)
        prod = oq.rewrite.mul(oq.gen("b"), oq.gen("c"))
        assert oq.half_twist(prod) == -q_pow(1)

    def test_inverse_values(self, oq):
        got = [oq.t_inverse.value(g) for g in GENS]
        expect = [
            RationalScalar.zero(),
            RationalScalar.coerce(v_pow(-1)),
            RationalScalar.coerce(-v_pow(-5)),
            RationalScalar.zero(),
        ]
        assert got == expect

    def test_square_is_cotwist(self, oq):
        for d in range(4):
            for w in oq.rewrite.graded_basis(d):
                acc = Laurent.zero()
                for (l1, l2), c in oq.coproduct_words(w, 2):
                    acc = acc + c * oq.half_twist_word(l1) * oq.half_twist_word(l2)
                assert acc == oq.cotwist_word(w)

    def test_convolution_inverse_two_sided(self, oq):
        for d in range(4):
            for w in oq.rewrite.graded_basis(d):
                fwd = RationalScalar.zero()
                bwd = RationalScalar.zero()
                for (l1, l2), c in oq.coproduct_words(w, 2):
                    rc = RationalScalar.coerce(c)
                    fwd = fwd + rc * RationalScalar.coerce(
                        oq.half_twist_word(l1)
                    ) * oq.t_inverse.value(l2)
                    bwd = bwd + rc * oq.t_inverse.value(l1) * RationalScalar.coerce(
                        oq.half_twist_word(l2)
                    )
                target = RationalScalar.coerce(oq.counit_word(w))
                assert fwd == target and bwd == target


class TestCotwist:
    def test_generator_values(self, oq):
        vals = [oq.cotwist_word(g).render() for g in GENS]
        assert vals == ["-1*v^6", "0", "0", "-1*v^6"]
        assert oq.cotwist_word(UNIT_WORD) == Laurent.one()

    def test_inverse_values(self, oq):
        minus = RationalScalar.coerce(-v_pow(-6))
        got = [oq.cotwist_inverse.value(g) for g in GENS]
        assert got == [minus, RationalScalar.zero(), RationalScalar.zero(), minus]

    def test_antipode_invariance(self, oq):
        for d in range(3):
            for w in oq.rewrite.graded_basis(d):
                assert oq.cotwist(oq.antipode_word(w)) == oq.cotwist_word(w)

    def test_dead_functional_rejected(self, oq):
        with pytest.raises(ValueError, match="vanishes on the unit"):
            oq.conv_inverse(Functional("dead", lambda w: Laurent.zero()))


class TestConjugationRotation:
    def test_conjugation_table(self, oq):
        images = [oq.c_t_word(g).render(OQ_NAMES) for g in GENS]
        assert images == ["1 * d", "-1*v^4 * c", "-1*v^-4 * b", "1 * a"]

    def test_conjugation_involutive(self, oq):
        rng = random.Random(16)
        for w in word_pool(oq, 2, rng, 30):
            p = NcPoly.monomial(w)
            assert oq.c_t(oq.c_t(p)) == p

    def test_conjugation_antimultiplicative(self, oq):
        rng = random.Random(17)
        pool = oq.rewrite.filtered_basis(2)
        for _ in range(30):
            x, y = NcPoly.monomial(rng.choice(pool)), NcPoly.monomial(rng.choice(pool))
            assert oq.c_t(oq.rewrite.mul(x, y)) == oq.rewrite.mul(oq.c_t(y), oq.c_t(x))

    def test_rotation_values(self, oq):
        assert oq.rot(oq.gen("b")) == el(oq, "1 * c")
        assert oq.rot(el(oq, "1 * a.b")) == el(oq, "1 * a.c")

    def test_rotation_multiplicative(self, oq):
        rng = random.Random(18)
        pool = oq.rewrite.filtered_basis(2)
        for _ in range(30):
            x, y = NcPoly.monomial(rng.choice(pool)), NcPoly.monomial(rng.choice(pool))
            assert oq.rot(oq.rewrite.mul(x, y)) == oq.rewrite.mul(oq.rot(x), oq.rot(y))


class TestFlags:
    def test_default_flags(self, oq):
        assert oq.flags() == {
            "r_table_transposed": False,
            "r_second_law_swapped": False,
        }
