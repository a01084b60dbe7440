"""The braided-commutative transmutation of the quantized coordinate ring.

Transmutation keeps the coalgebra and the underlying space of the quantized
coordinate ring and replaces the product; generators map to generators.  On
monomials of degree two and higher the generator-to-generator identification
is NOT the identity on basis words, so this module maintains an explicit
change of basis:

* *ambient coordinates*: elements written in the PBW basis of the coordinate
  ring, where a word means the coordinate-ring product of its letters;
* *transmuted coordinates*: elements written in the same set of normal
  words, where a word means the transmuted product of its letters.

The transform ``to_ambient`` sends a transmuted-basis word to its iterated
transmuted product computed in ambient coordinates; ``to_transmuted`` inverts
it degree by degree.  Public operations take and return transmuted
coordinates (the basis shared with the rewrite system); the categorical
formulas are evaluated in ambient coordinates internally.

Two independent routes to the product are kept deliberately:

* a rewrite system derived symbolically from the presented relations by
  leading-term elimination (``derive_bq_rules``, frozen as ``BQ_RULES``), and
* the transmuted product computed from the coproduct, antipode and braiding
  functional (``transmuted_mul``).

Their agreement is the convention anchor pinning the braiding-functional
flags.
"""

from __future__ import annotations

from . import _linalg
from .nc_rewrite import NcPoly, RewriteSystem, UNIT_WORD, Word
from .oq_sl2 import GEN_A, GEN_B, GEN_C, GEN_D, OQ_NAMES, OqContext
from .scalar_ring import Laurent, RationalScalar, q_pow, v_pow


def presented_relations() -> list[NcPoly]:
    """Defining relations of the transmuted algebra, each written as a
    polynomial equal to zero."""
    one = Laurent.one()
    lam = one - q_pow(-2)
    a, b, c, d = GEN_A, GEN_B, GEN_C, GEN_D
    return [
        NcPoly({(b, a): one, (a, b): -q_pow(2)}),
        NcPoly({(c, a): one, (a, c): -q_pow(-2)}),
        NcPoly({(d, a): one, (a, d): -one}),
        NcPoly({(b, c): one, (c, b): -one, (a, d): -lam, (a, a): lam}),
        NcPoly({(d, b): one, (b, d): -one, (a, b): -lam}),
        NcPoly({(c, d): one, (d, c): -one, (c, a): -lam}),
        NcPoly({(a, d): one, (c, b): -q_pow(2), UNIT_WORD: -one}),
    ]


def derive_bq_rules() -> tuple[tuple[Word, NcPoly], ...]:
    """Eliminate the presented relations into a deg-lex rewrite system.

    Each relation is made monic on its deg-lex leading word and reduced
    against the rules read off the other relations, until no relation can be
    reduced further.  Relations that collapse to zero are duplicates and are
    dropped.
    """

    def monic(p: NcPoly) -> NcPoly:
        lead = max(p.terms(), key=lambda w: (len(w), w))
        return p.scale(p.coeff(lead).unit_inverse())

    def as_rule(p: NcPoly) -> tuple[Word, NcPoly]:
        lead = max(p.terms(), key=lambda w: (len(w), w))
        return lead, (NcPoly.monomial(lead) - p)

    rels = [monic(p) for p in presented_relations()]
    changed = True
    while changed:
        changed = False
        for i in range(len(rels)):
            if not rels[i]:
                continue
            others = [as_rule(rels[j]) for j in range(len(rels)) if j != i and rels[j]]
            reduced = RewriteSystem(OQ_NAMES, others).normal_form(rels[i])
            if reduced != rels[i]:
                rels[i] = monic(reduced) if reduced else reduced
                changed = True
    rules = sorted((as_rule(p) for p in rels if p), key=lambda rule: rule[0])
    return tuple(rules)


def _shipped_rules() -> tuple[tuple[Word, NcPoly], ...]:
    one = Laurent.one()
    a, b, c, d = GEN_A, GEN_B, GEN_C, GEN_D
    rules = [
        ((b, a), NcPoly({(a, b): v_pow(8)})),
        ((b, c), NcPoly({(a, d): one, (a, a): v_pow(-8) - one, UNIT_WORD: -v_pow(-8)})),
        ((c, a), NcPoly({(a, c): v_pow(-8)})),
        ((c, b), NcPoly({(a, d): v_pow(-8), UNIT_WORD: -v_pow(-8)})),
        ((d, a), NcPoly({(a, d): one})),
        ((d, b), NcPoly({(b, d): one, (a, b): one - v_pow(-8)})),
        ((d, c), NcPoly({(c, d): one, (a, c): v_pow(-16) - v_pow(-8)})),
    ]
    return tuple(rules)


BQ_RULES = _shipped_rules()


def bq_rewrite_system() -> RewriteSystem:
    """Rewrite rules presenting the transmuted algebra on the shared words."""
    return RewriteSystem(OQ_NAMES, list(BQ_RULES))


PairTable = dict[tuple[Word, Word], Laurent]


class BqContext:
    """Transmuted algebra bundled with its structure maps.

    Word-valued inputs and outputs are in transmuted coordinates unless the
    name says ``ambient``.
    """

    def __init__(self, oq: OqContext | None = None):
        self.oq = oq if oq is not None else OqContext()
        self.rewrite = bq_rewrite_system()
        self._star_cache: dict[tuple[Word, Word], NcPoly] = {}
        self._phi_cache: dict[Word, NcPoly] = {UNIT_WORD: NcPoly.one()}
        self._grade_inv: dict[int, list[list[RationalScalar]]] = {}
        self._tmul_cache: dict[tuple[Word, Word], NcPoly] = {}
        self._tantipode_cache: dict[Word, NcPoly] = {}
        self._adjoint_cache: dict[Word, tuple] = {}
        self._adjoint_shared_cache: dict[Word, tuple] = {}
        self._braided_adjoint_cache: dict[Word, tuple] = {}
        self._braid_cache: dict[tuple[Word, Word], PairTable] = {}
        self._braid_inv_cache: dict[tuple[Word, Word], PairTable] = {}

    def flags(self) -> dict[str, bool]:
        return self.oq.flags()

    def gen(self, name: str) -> NcPoly:
        return NcPoly.monomial((OQ_NAMES.index(name),))

    def element(self, text: str) -> NcPoly:
        return self.rewrite.normal_form(NcPoly.parse(text, OQ_NAMES))

    def mul_words(self, w1: Word, w2: Word) -> NcPoly:
        return self.rewrite.mul(NcPoly.monomial(tuple(w1)), NcPoly.monomial(tuple(w2)))

    def mul(self, x: NcPoly, y: NcPoly) -> NcPoly:
        """Product in the transmuted algebra via the rewrite rules."""
        out = NcPoly.zero()
        for w1, c1 in x.items():
            for w2, c2 in y.items():
                out = out + self.mul_words(w1, w2).scale(c1 * c2)
        return out

    # -- transmuted product, ambient coordinates --------------------------------

    def star_words(self, w1: Word, w2: Word) -> NcPoly:
        """Transmuted product of two ambient basis words, in ambient
        coordinates: braid the antipode legs of the left factor around the
        right factor through the braiding functional."""
        key = (tuple(w1), tuple(w2))
        hit = self._star_cache.get(key)
        if hit is not None:
            return hit
        oq = self.oq
        out = NcPoly.zero()
        ydec = oq.coproduct_words(key[1], 2)
        for (x1, x2, x3), cx in oq.coproduct_words(key[0], 3):
            left = oq.rewrite.mul(oq.antipode_word(x1), NcPoly.monomial(x3))
            if not left:
                continue
            for (y1, y2), cy in ydec:
                sy = oq.antipode_word(y1)
                scal = Laurent.zero()
                for lw, lc in left.items():
                    for sw, sc in sy.items():
                        val = oq.r_pair_words(lw, sw)
                        if val:
                            scal = scal + lc * sc * val
                if not scal:
                    continue
                prod = oq.rewrite.mul(NcPoly.monomial(x2), NcPoly.monomial(y2))
                out = out + prod.scale(cx * cy * scal)
        self._star_cache[key] = out
        return out

    def star(self, x: NcPoly, y: NcPoly) -> NcPoly:
        out = NcPoly.zero()
        for w1, c1 in x.items():
            for w2, c2 in y.items():
                out = out + self.star_words(w1, w2).scale(c1 * c2)
        return out

    # -- change of basis ----------------------------------------------------------

    def phi_word(self, w: Word) -> NcPoly:
        """Ambient-coordinate expansion of a transmuted basis word: the
        left-to-right transmuted product of its letters."""
        w = tuple(w)
        hit = self._phi_cache.get(w)
        if hit is None:
            hit = self.star(NcPoly.monomial(w[:1]), self.phi_word(w[1:]))
            self._phi_cache[w] = hit
        return hit

    def to_ambient(self, p: NcPoly) -> NcPoly:
        out = NcPoly.zero()
        for w, c in p.items():
            out = out + self.phi_word(w).scale(c)
        return out

    def _grade_inverse(self, d: int) -> list[list[RationalScalar]]:
        inv = self._grade_inv.get(d)
        if inv is None:
            basis = self.rewrite.graded_basis(d)
            index = {w: i for i, w in enumerate(basis)}
            zero = RationalScalar.zero()
            mat = [[zero] * len(basis) for _ in basis]
            for j, w in enumerate(basis):
                for ow, oc in self.phi_word(w).items():
                    if len(ow) == d:
                        mat[index[ow]][j] = RationalScalar.coerce(oc)
            inv = _linalg.invert_dense(mat)
            self._grade_inv[d] = inv
        return inv

    def _from_ambient(self, terms: dict[Word, RationalScalar]) -> dict[Word, RationalScalar]:
        zero = RationalScalar.zero()
        out: dict[Word, RationalScalar] = {}
        rem = {w: c for w, c in terms.items() if c}
        while rem:
            d = max(len(w) for w in rem)
            if d == 0:
                out[UNIT_WORD] = out.get(UNIT_WORD, zero) + rem[UNIT_WORD]
                break
            basis = self.rewrite.graded_basis(d)
            inv = self._grade_inverse(d)
            vec = [rem.get(w, zero) for w in basis]
            for i, w in enumerate(basis):
                coord = zero
                for j, vj in enumerate(vec):
                    if vj:
                        coord = coord + inv[i][j] * vj
                if not coord:
                    continue
                out[w] = out.get(w, zero) + coord
                for ow, oc in self.phi_word(w).items():
                    rem[ow] = rem.get(ow, zero) - coord * RationalScalar.coerce(oc)
            rem = {w: c for w, c in rem.items() if c and len(w) < d}
        return out

    def to_transmuted(self, p: NcPoly) -> NcPoly:
        """Express an ambient-coordinate element in the transmuted basis.

        The result of every structure map on integral inputs is integral;
        a denominator surviving here signals an internal error.
        """
        terms = {w: RationalScalar.coerce(c) for w, c in p.items()}
        return NcPoly({w: c.to_laurent() for w, c in self._from_ambient(terms).items() if c})

    def _convert_axes(self, terms: dict, axes: tuple[int, ...]) -> dict:
        """Apply the ambient-to-transmuted transform to the chosen legs of a
        dict keyed by word tuples."""
        cur: dict = {k: RationalScalar.coerce(c) for k, c in terms.items() if c}
        for axis in axes:
            nxt: dict = {}
            groups: dict = {}
            for legs, c in cur.items():
                rest = legs[:axis] + legs[axis + 1:]
                groups.setdefault(rest, {})[legs[axis]] = c
            for rest, sub in groups.items():
                for bw, bc in self._from_ambient(sub).items():
                    if not bc:
                        continue
                    key = rest[:axis] + (bw,) + rest[axis:]
                    prev = nxt.get(key)
                    nxt[key] = bc if prev is None else prev + bc
            cur = {k: c for k, c in nxt.items() if c}
        return {k: c.to_laurent() for k, c in cur.items()}

    # -- structure maps -------------------------------------------------------------

    def transmuted_mul_words(self, w1: Word, w2: Word) -> NcPoly:
        key = (tuple(w1), tuple(w2))
        hit = self._tmul_cache.get(key)
        if hit is None:
            hit = self.to_transmuted(self.star(self.phi_word(key[0]), self.phi_word(key[1])))
            self._tmul_cache[key] = hit
        return hit

    def transmuted_mul(self, x: NcPoly, y: NcPoly) -> NcPoly:
        """Transmuted product computed from the coproduct, antipode and
        braiding functional; input and output in the shared basis."""
        out = NcPoly.zero()
        for w1, c1 in x.items():
            for w2, c2 in y.items():
                out = out + self.transmuted_mul_words(w1, w2).scale(c1 * c2)
        return out

    def _sbar_ambient(self, p: NcPoly) -> NcPoly:
        oq = self.oq
        out = NcPoly.zero()
        for w, c in p.items():
            hit = self._tantipode_cache.get(w)
            if hit is None:
                hit = NcPoly.zero()
                for (x1, x2, x3, x4), cc in oq.coproduct_words(w, 4):
                    arg = oq.rewrite.mul(oq.antipode(oq.antipode_word(x3)), oq.antipode_word(x1))
                    scal = Laurent.zero()
                    for aw, ac in arg.items():
                        val = oq.r_pair_words(aw, x4)
                        if val:
                            scal = scal + ac * val
                    if scal:
                        hit = hit + oq.antipode_word(x2).scale(cc * scal)
                self._tantipode_cache[w] = hit
            out = out + hit.scale(c)
        return out

    def transmuted_antipode(self, x: NcPoly) -> NcPoly:
        """Braided antipode, computed in ambient coordinates and expressed
        back in the shared basis."""
        return self.to_transmuted(self._sbar_ambient(self.to_ambient(x)))

    def adjoint_coaction_words(self, w: Word) -> tuple:
        """Adjoint coaction of a transmuted basis word: pairs
        ((body word, coordinate-ring word), coeff), body leg transmuted,
        coefficient leg ambient."""
        w = tuple(w)
        hit = self._adjoint_cache.get(w)
        if hit is not None:
            return hit
        oq = self.oq
        acc: dict[tuple[Word, Word], Laurent] = {}
        for ow, oc in self.phi_word(w).items():
            for (x1, x2, x3), c in oq.coproduct_words(ow, 3):
                coef = oq.rewrite.mul(oq.antipode_word(x1), NcPoly.monomial(x3))
                for cw, cc in coef.items():
                    key = (x2, cw)
                    acc[key] = acc.get(key, Laurent.zero()) + oc * c * cc
        result = tuple(self._convert_axes({k: v for k, v in acc.items() if v}, (0,)).items())
        self._adjoint_cache[w] = result
        return result

    def adjoint_coaction(self, p: NcPoly) -> dict[tuple[Word, Word], Laurent]:
        acc: dict[tuple[Word, Word], Laurent] = {}
        for w, c in p.items():
            for pair, cc in self.adjoint_coaction_words(w):
                acc[pair] = acc.get(pair, Laurent.zero()) + c * cc
        return {k: v for k, v in acc.items() if v}

    def adjoint_coaction_shared_words(self, w: Word) -> tuple:
        """Adjoint coaction with BOTH legs expressed in the shared basis.
        Same map as ``adjoint_coaction_words``; only the coordinate system of
        the coefficient leg differs."""
        w = tuple(w)
        hit = self._adjoint_shared_cache.get(w)
        if hit is not None:
            return hit
        oq = self.oq
        acc: dict[tuple[Word, Word], Laurent] = {}
        for ow, oc in self.phi_word(w).items():
            for (x1, x2, x3), c in oq.coproduct_words(ow, 3):
                coef = oq.rewrite.mul(oq.antipode_word(x1), NcPoly.monomial(x3))
                for cw, cc in coef.items():
                    key = (x2, cw)
                    acc[key] = acc.get(key, Laurent.zero()) + oc * c * cc
        result = tuple(self._convert_axes({k: v for k, v in acc.items() if v}, (0, 1)).items())
        self._adjoint_shared_cache[w] = result
        return result

    def braiding_pair_words(self, w1: Word, w2: Word) -> PairTable:
        """Braiding of two transmuted basis words, through the adjoint
        coaction and the braiding functional."""
        key = (tuple(w1), tuple(w2))
        hit = self._braid_cache.get(key)
        if hit is not None:
            return hit
        oq = self.oq
        out: PairTable = {}
        for (u0, u1), cu in self.adjoint_coaction_words(key[0]):
            for (v0, v1), cv in self.adjoint_coaction_words(key[1]):
                val = oq.r_pair_words(u1, v1)
                if not val:
                    continue
                pair = (v0, u0)
                out[pair] = out.get(pair, Laurent.zero()) + cu * cv * val
        out = {k: c for k, c in out.items() if c}
        self._braid_cache[key] = out
        return out

    def braiding_inverse_pair_words(self, w1: Word, w2: Word) -> PairTable:
        key = (tuple(w1), tuple(w2))
        hit = self._braid_inv_cache.get(key)
        if hit is not None:
            return hit
        oq = self.oq
        out: PairTable = {}
        for (u0, u1), cu in self.adjoint_coaction_words(key[0]):
            for (v0, v1), cv in self.adjoint_coaction_words(key[1]):
                val = oq.r_bar_pair_words(v1, u1)
                if not val:
                    continue
                pair = (v0, u0)
                out[pair] = out.get(pair, Laurent.zero()) + cu * cv * val
        out = {k: c for k, c in out.items() if c}
        self._braid_inv_cache[key] = out
        return out

    def braided_adjoint_words(self, w: Word) -> tuple:
        """Braided adjoint coaction of a transmuted basis word: the braided
        antipode acts on the first coproduct leg, braids past the body, and
        closes up with the transmuted product; both output legs are in the
        transmuted basis."""
        w = tuple(w)
        hit = self._braided_adjoint_cache.get(w)
        if hit is not None:
            return hit
        oq = self.oq
        acc: dict[tuple[Word, Word], Laurent] = {}
        for ow, oc in self.phi_word(w).items():
            for (x1, x2, x3), c in oq.coproduct_words(ow, 3):
                for sw, sc in self._sbar_ambient(NcPoly.monomial(x1)).items():
                    for (left, mid), cb in self._psi_ambient_words(sw, x2).items():
                        prod = self.star_words(mid, x3)
                        for pw, pc in prod.items():
                            pair = (left, pw)
                            acc[pair] = acc.get(pair, Laurent.zero()) + oc * c * sc * cb * pc
        result = tuple(self._convert_axes({k: v for k, v in acc.items() if v}, (0, 1)).items())
        self._braided_adjoint_cache[w] = result
        return result

    def braided_adjoint(self, p: NcPoly) -> dict[tuple[Word, Word], Laurent]:
        acc: dict[tuple[Word, Word], Laurent] = {}
        for w, c in p.items():
            for pair, cc in self.braided_adjoint_words(w):
                acc[pair] = acc.get(pair, Laurent.zero()) + c * cc
        return {k: v for k, v in acc.items() if v}

    def _ad_ambient_words(self, w: Word):
        """Adjoint coaction of an ambient word, both legs ambient."""
        oq = self.oq
        acc: dict[tuple[Word, Word], Laurent] = {}
        for (x1, x2, x3), c in oq.coproduct_words(tuple(w), 3):
            coef = oq.rewrite.mul(oq.antipode_word(x1), NcPoly.monomial(x3))
            for cw, cc in coef.items():
                key = (x2, cw)
                acc[key] = acc.get(key, Laurent.zero()) + c * cc
        return acc

    def _psi_ambient_words(self, w1: Word, w2: Word) -> PairTable:
        """Braiding of two ambient words, both legs ambient."""
        oq = self.oq
        out: PairTable = {}
        for (u0, u1), cu in self._ad_ambient_words(w1).items():
            if not cu:
                continue
            for (v0, v1), cv in self._ad_ambient_words(w2).items():
                if not cv:
                    continue
                val = oq.r_pair_words(u1, v1)
                if not val:
                    continue
                pair = (v0, u0)
                out[pair] = out.get(pair, Laurent.zero()) + cu * cv * val
        return {k: c for k, c in out.items() if c}

    def coproduct_words(self, w: Word, nlegs: int) -> tuple:
        """Iterated coproduct of a transmuted basis word, every leg in the
        transmuted basis.  Transmutation keeps the coproduct as a map; only
        the coordinates of the legs change."""
        ambient: dict[tuple[Word, ...], Laurent] = {}
        for ow, oc in self.phi_word(tuple(w)).items():
            for legs, c in self.oq.coproduct_words(ow, nlegs):
                ambient[legs] = ambient.get(legs, Laurent.zero()) + oc * c
        converted = self._convert_axes(
            {k: v for k, v in ambient.items() if v}, tuple(range(nlegs))
        )
        return tuple(converted.items())

    def counit_word(self, w: Word) -> Laurent:
        return self.oq.counit_word(tuple(w))

    def counit(self, p: NcPoly) -> Laurent:
        total = Laurent.zero()
        for w, c in p.items():
            total = total + c * self.counit_word(w)
        return total

    # -- distinguished elements ---------------------------------------------------

    def quantum_trace(self) -> NcPoly:
        """The degree-one invariant of the adjoint coaction besides the unit."""
        return NcPoly({(GEN_A,): q_pow(-1), (GEN_D,): q_pow(1)})


# Boundary-arc names for the generators, printed verbatim in reports: each
# generator is a scalar multiple of a single arc class.
ARC_DICTIONARY = {
    "a": ("-1*v^5", "beta[-+]"),
    "b": ("-1*v^5", "beta[--]"),
    "c": ("1*v", "beta[++]"),
    "d": ("1*v", "beta[+-]"),
}


def render_arc_dictionary() -> str:
    lines = [f"{g} = {scal} * {arc}" for g, (scal, arc) in ARC_DICTIONARY.items()]
    return "\n".join(lines)
