"""Transmuted algebra: presented relations vs the categorical product formula,
the basis change, braided antipode and adjoint coactions, the derived pairing."""

import random

import pytest

from qskein.bq_sl2 import BQ_RULES, bq_rewrite_system, derive_bq_rules, render_arc_dictionary
from qskein.nc_rewrite import NcPoly, UNIT_WORD
from qskein.oq_sl2 import OQ_NAMES, OqContext
from qskein.scalar_ring import Laurent, RationalScalar, q_pow

GENS = [(0,), (1,), (2,), (3,)]
R = RationalScalar.coerce


def el(bq, text):
    return NcPoly.parse(text, OQ_NAMES)


def clean(d):
    return {k: v for k, v in d.items() if v}


class TestPresentation:
    def test_shipped_rules_match_derivation(self):
        assert tuple(BQ_RULES) == tuple(derive_bq_rules())

    def test_defining_relations(self, bq):
        # ba = q^2 ab, da = ad, ad - q^2 cb = 1
        assert bq.mul_words((1,), (0,)) == el(bq, "1*v^8 * a.b")
        assert bq.mul_words((3,), (0,)) == el(bq, "1 * a.d")
        residue = bq.mul_words((0,), (3,)) - bq.mul_words((2,), (1,)).scale(q_pow(2))
        assert residue == NcPoly.monomial(UNIT_WORD)

    def test_rule_leads(self):
        leads = {lead for lead, _ in bq_rewrite_system().rules}
        assert leads == {(1, 0), (1, 2), (2, 0), (2, 1), (3, 0), (3, 1), (3, 2)}


class TestTransmutedProduct:
    def test_cross_check_generator_pairs(self, bq):
        for g1 in GENS:
            for g2 in GENS:
                assert bq.mul_words(g1, g2) == bq.transmuted_mul_words(g1, g2)

    def test_cross_check_random(self, bq):
        rng = random.Random(21)
        pool = bq.rewrite.filtered_basis(2)
        for _ in range(60):
            w1, w2 = rng.choice(pool), rng.choice(pool)
            assert bq.mul_words(w1, w2) == bq.transmuted_mul_words(w1, w2)

    def test_unit_laws(self, bq):
        for g in GENS:
            m = NcPoly.monomial(g)
            assert bq.transmuted_mul(NcPoly.monomial(UNIT_WORD), m) == m
            assert bq.transmuted_mul(m, NcPoly.monomial(UNIT_WORD)) == m


class TestBasisChange:
    def test_identity_on_degree_one(self, bq):
        for g in GENS:
            assert bq.phi_word(g) == NcPoly.monomial(g)

    def test_degree_two_table(self, bq):
        expect = {
            "a.a": "1 * a.a",
            "a.b": "1 * a.b",
            "a.c": "1*v^8 * a.c",
            "a.d": "1*v^8 * a.d + (-1*v^8 + 1) * 1",
            "b.b": "1*v^4 * b.b",
            "b.d": "1*v^4 * b.d + (-1 + 1*v^-8) * a.b",
            "c.c": "1*v^4 * c.c",
            "c.d": "1*v^4 * c.d",
            "d.d": "1 * d.d + (-1 + 1*v^-8) * a.d + (1 + -1*v^-8) * 1",
        }
        for w in bq.rewrite.graded_basis(2):
            name = ".".join(OQ_NAMES[g] for g in w)
            assert bq.phi_word(w) == el(bq, expect[name])

    def test_round_trip(self, bq):
        rng = random.Random(22)
        pool = bq.rewrite.filtered_basis(3)
        for _ in range(40):
            p = NcPoly.from_pairs(
                [(rng.choice(pool), Laurent({rng.randint(-2, 2): rng.choice([-1, 1])}))]
            )
            assert bq.to_transmuted(bq.to_ambient(p)) == p


class TestBraidedAntipode:
    def test_generator_table(self, bq):
        expect = {
            (0,): "1*v^8 * d + (-1*v^8 + 1) * a",
            (1,): "-1*v^8 * b",
            (2,): "-1*v^8 * c",
            (3,): "1 * a",
        }
        for g in GENS:
            assert bq.transmuted_antipode(NcPoly.monomial(g)) == el(bq, expect[g])

    def test_antipode_axiom_two_sided(self, bq):
        for w in bq.rewrite.filtered_basis(2):
            left = NcPoly.zero()
            right = NcPoly.zero()
            for (l1, l2), c in bq.coproduct_words(w, 2):
                left = left + bq.transmuted_mul(
                    bq.transmuted_antipode(NcPoly.monomial(l1)), NcPoly.monomial(l2)
                ).scale(c)
                right = right + bq.transmuted_mul(
                    NcPoly.monomial(l1), bq.transmuted_antipode(NcPoly.monomial(l2))
                ).scale(c)
            unit = NcPoly.monomial(UNIT_WORD).scale(bq.counit_word(w))
            assert left == unit and right == unit

    def test_braided_antihomomorphism(self, bq):
        rng = random.Random(23)
        pool = bq.rewrite.filtered_basis(2)
        pairs = [(g1, g2) for g1 in GENS for g2 in GENS]
        pairs += [(rng.choice(pool), rng.choice(pool)) for _ in range(15)]
        for w1, w2 in pairs:
            lhs = bq.transmuted_antipode(bq.mul_words(w1, w2))
            rhs = NcPoly.zero()
            for (u, w), c in bq.braiding_pair_words(w1, w2).items():
                rhs = rhs + bq.transmuted_mul(
                    bq.transmuted_antipode(NcPoly.monomial(u)),
                    bq.transmuted_antipode(NcPoly.monomial(w)),
                ).scale(c)
            assert lhs == rhs


class TestBraidedBialgebra:
    def test_product_coproduct_compatibility(self, bq):
        rng = random.Random(24)
        pool = bq.rewrite.filtered_basis(2)
        pairs = [(g1, g2) for g1 in GENS for g2 in GENS]
        pairs += [(rng.choice(pool), rng.choice(pool)) for _ in range(10)]
        for w1, w2 in pairs:
            lhs = {}
            for pw, pc in bq.mul_words(w1, w2).items():
                for (l1, l2), c in bq.coproduct_words(pw, 2):
                    lhs[(l1, l2)] = lhs.get((l1, l2), Laurent.zero()) + pc * c
            rhs = {}
            for (x1, x2), cx in bq.coproduct_words(w1, 2):
                for (y1, y2), cy in bq.coproduct_words(w2, 2):
                    for (m, n), cb in bq.braiding_pair_words(x2, y1).items():
                        for p1, c1 in bq.mul_words(x1, m).items():
                            for p2, c2 in bq.mul_words(n, y2).items():
                                k = (p1, p2)
                                rhs[k] = rhs.get(k, Laurent.zero()) + cx * cy * cb * c1 * c2
            assert clean(lhs) == clean(rhs)


class TestAdjointCoaction:
    def test_unit(self, bq):
        assert clean(bq.adjoint_coaction(NcPoly.monomial(UNIT_WORD))) == {
            (UNIT_WORD, UNIT_WORD): Laurent.one()
        }

    def test_generator_expansion(self, bq, oq):
        # Ad(a) = a (x) da + b (x) dc - q c (x) ba - q d (x) bc, legs normalized
        mul = oq.rewrite.mul
        mono = NcPoly.monomial
        expect = {}
        for body, left, right, scale in [
            ((0,), (3,), (0,), Laurent.one()),
            ((1,), (3,), (2,), Laurent.one()),
            ((2,), (1,), (0,), -q_pow(1)),
            ((3,), (1,), (2,), -q_pow(1)),
        ]:
            for w, c in mul(mono(left), mono(right)).items():
                expect[(body, w)] = expect.get((body, w), Laurent.zero()) + scale * c
        assert clean(bq.adjoint_coaction(NcPoly.monomial((0,)))) == clean(expect)

    def test_counit_leg(self, bq):
        for g in GENS:
            acc = NcPoly.zero()
            for (body, ow), c in bq.adjoint_coaction(NcPoly.monomial(g)).items():
                acc = acc + NcPoly.monomial(body).scale(c * bq.oq.counit_word(ow))
            assert acc == NcPoly.monomial(g)

    def test_coaction_axiom(self, bq):
        rng = random.Random(25)
        pool = bq.rewrite.filtered_basis(2)
        for w in GENS + [rng.choice(pool) for _ in range(10)]:
            lhs, rhs = {}, {}
            for (b1, o1) , c in bq.adjoint_coaction_words(w):
                for (b2, o2), c2 in bq.adjoint_coaction_words(b1):
                    k = (b2, o2, o1)
                    lhs[k] = lhs.get(k, Laurent.zero()) + c * c2
                for (l1, l2), c2 in bq.oq.coproduct_words(o1, 2):
                    k = (b1, l1, l2)
                    rhs[k] = rhs.get(k, Laurent.zero()) + c * c2
            assert clean(lhs) == clean(rhs)


class TestBraidedAdjointCoaction:
    def test_unit(self, bq):
        assert clean(bq.braided_adjoint(NcPoly.monomial(UNIT_WORD))) == {
            (UNIT_WORD, UNIT_WORD): Laurent.one()
        }

    def test_generator_tables(self, bq):
        expect = {
            (0,): "a:a.d 1 | b:c.d 1 | c:a.b -1*v^8 | d:1 1 | d:a.d -1",
            (1,): (
                "a:a.b 1 + -1*v^-8 | a:b.d 1 | b:1 -1*v^-8 + 1*v^-16 | "
                "b:a.d 1*v^-8 + -1*v^-16 | b:d.d 1 | c:b.b -1 | "
                "d:a.b -1 + 1*v^-8 | d:b.d -1"
            ),
            (2,): "a:a.c -1*v^-8 | b:c.c -1*v^-8 | c:a.a 1 | d:a.c 1*v^-8",
            (3,): (
                "a:1 1*v^-8 | a:a.d -1*v^-8 | b:c.d -1*v^-8 | c:a.b 1 | "
                "d:1 1 + -1*v^-8 | d:a.d 1*v^-8"
            ),
        }

        def render(table):
            parts = []
            for (body, ow), c in sorted(table.items()):
                bname = ".".join(OQ_NAMES[g] for g in body) if body else "1"
                oname = ".".join(OQ_NAMES[g] for g in ow) if ow else "1"
                parts.append(f"{bname}:{oname} {c.render()}")
            return " | ".join(parts)

        for g in GENS:
            assert render(clean(bq.braided_adjoint(NcPoly.monomial(g)))) == expect[g]

    def test_counit_leg(self, bq):
        for w in bq.rewrite.filtered_basis(2):
            acc = NcPoly.zero()
            for (body, ow), c in bq.braided_adjoint(NcPoly.monomial(w)).items():
                acc = acc + NcPoly.monomial(body).scale(c * bq.counit_word(ow))
            assert acc == NcPoly.monomial(w)

    def test_coaction_axiom(self, bq):
        rng = random.Random(26)
        pool = bq.rewrite.filtered_basis(2)
        for w in GENS + [rng.choice(pool) for _ in range(8)]:
            lhs, rhs = {}, {}
            for (b1, o1), c in bq.braided_adjoint_words(w):
                for (b2, o2), c2 in bq.braided_adjoint_words(b1):
                    k = (b2, o2, o1)
                    lhs[k] = lhs.get(k, Laurent.zero()) + c * c2
                for (l1, l2), c2 in bq.coproduct_words(o1, 2):
                    k = (b1, l1, l2)
                    rhs[k] = rhs.get(k, Laurent.zero()) + c * c2
            assert clean(lhs) == clean(rhs)


class TestQuantumTrace:
    def test_value(self, bq):
        assert bq.quantum_trace() == el(bq, "1*v^-4 * a + 1*v^4 * d")

    def test_coinvariant_both_coactions(self, bq):
        tau = bq.quantum_trace()
        expect = {(w, UNIT_WORD): c for w, c in tau.items()}
        assert clean(bq.adjoint_coaction(tau)) == expect
        assert clean(bq.braided_adjoint(tau)) == expect


@pytest.fixture(scope="module")
def pairings(bq):
    oq = bq.oq

    def theta_t(w):
        out = RationalScalar.zero()
        for ow, oc in bq.phi_word(w).items():
            out = out + R(oc) * R(oq.cotwist_word(ow))
        return out

    def theta_inv_t(w):
        out = RationalScalar.zero()
        for ow, oc in bq.phi_word(w).items():
            out = out + R(oc) * oq.cotwist_inverse.value(ow)
        return out

    def pair(wx, wy):
        out = RationalScalar.zero()
        for (x1, x2), cx in bq.coproduct_words(wx, 2):
            s1 = theta_inv_t(x1)
            if s1.is_zero:
                continue
            for (y1, y2), cy in bq.coproduct_words(wy, 2):
                s3 = theta_inv_t(y2)
                if s3.is_zero:
                    continue
                mid = RationalScalar.zero()
                for mw, mc in bq.transmuted_mul_words(x2, y1).items():
                    mid = mid + R(mc) * theta_t(mw)
                out = out + R(cx * cy) * s1 * mid * s3
        return out

    def pair_rev(wx, wy):
        out = RationalScalar.zero()
        for (x1, x2), cx in bq.coproduct_words(wx, 2):
            s1 = theta_t(x1)
            if s1.is_zero:
                continue
            for (y1, y2), cy in bq.coproduct_words(wy, 2):
                s3 = theta_t(y2)
                if s3.is_zero:
                    continue
                mid = RationalScalar.zero()
                for (u, w), cb in bq.braiding_pair_words(x2, y1).items():
                    for mw, mc in bq.transmuted_mul_words(u, w).items():
                        mid = mid + R(cb * mc) * theta_inv_t(mw)
                out = out + R(cx * cy) * s1 * mid * s3
        return out

    return pair, pair_rev

class TestDerivedPairing:
    def test_forward_generator_table(self, bq, pairings):
        pair, _ = pairings
        expect = {
            ("a", "a"): "1*v^4",
            ("a", "d"): "(1*v^16 + -1*v^8 + 1) / (1*v^12)",
            ("b", "c"): "(1*v^8 + -1) / (1*v^20)",
            ("c", "b"): "(1*v^8 + -1) / (1*v^12)",
            ("d", "a"): "(1*v^16 + -1*v^8 + 1) / (1*v^12)",
            ("d", "d"): "(1*v^24 + -1*v^16 + 2*v^8 + -1) / (1*v^20)",
        }
        for i, n1 in enumerate("abcd"):
            for j, n2 in enumerate("abcd"):
                got = pair((i,), (j,))
                want = expect.get((n1, n2))
                if want is None:
                    assert got.is_zero
                else:
                    assert got.render() == want

    def test_reversed_generator_table(self, bq, pairings):
        _, pair_rev = pairings
        expect = {
            ("a", "a"): "(1*v^16 + -1*v^8 + 1) / (1*v^12)",
            ("a", "d"): "(1*v^24 + -1*v^16 + 2*v^8 + -1) / (1*v^20)",
            ("b", "c"): "(-1*v^8 + 1) / (1*v^28)",
            ("c", "b"): "(-1*v^8 + 1) / (1*v^20)",
            ("d", "a"): "(1*v^24 + -1*v^16 + 2*v^8 + -1) / (1*v^20)",
            ("d", "d"): "(1*v^32 + -1*v^24 + 2*v^16 + -2*v^8 + 1) / (1*v^28)",
        }
        for i, n1 in enumerate("abcd"):
            for j, n2 in enumerate("abcd"):
                got = pair_rev((i,), (j,))
                want = expect.get((n1, n2))
                if want is None:
                    assert got.is_zero
                else:
                    assert got.render() == want

    def test_unit_legs_give_counit(self, bq, pairings):
        pair, _ = pairings
        for w in bq.rewrite.filtered_basis(2):
            assert pair(UNIT_WORD, w) == R(bq.counit_word(w))
            assert pair(w, UNIT_WORD) == R(bq.counit_word(w))

    def test_product_compatibility(self, bq, pairings):
        # pairing of a product against z factors through the braiding
        pair, _ = pairings
        rng = random.Random(27)
        deg1 = [UNIT_WORD] + GENS
        triples = [(rng.choice(deg1), rng.choice(deg1), rng.choice(deg1)) for _ in range(40)]
        for wx, wy, wz in triples:
            lhs = RationalScalar.zero()
            for pw, pc in bq.mul_words(wx, wy).items():
                lhs = lhs + R(pc) * pair(pw, wz)
            rhs = RationalScalar.zero()
            for (z1, z2), cz in bq.coproduct_words(wz, 2):
                for (m1, m2), cb in bq.braiding_pair_words(wy, z1).items():
                    rhs = rhs + R(cz * cb) * pair(wx, m1) * pair(m2, z2)
            assert lhs == rhs


class TestArcDictionary:
    def test_rendered_constants(self):
        text = render_arc_dictionary()
        assert "a = -1*v^5 * beta[-+]" in text
        assert "b = -1*v^5 * beta[--]" in text
        assert "c = 1*v * beta[++]" in text
        assert "d = 1*v * beta[+-]" in text
