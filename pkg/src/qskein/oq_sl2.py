"""The quantized coordinate ring of SL2 as a dual-quasitriangular Hopf
algebra with a half twist.

Generators a, b, c, d are ordered a < b < c < d; normal words are the
monomials a^i b^j d^k and a^i c^j d^k, a shared PBW basis reused verbatim by
the transmuted algebra.  The module carries the Hopf structure maps, the
braiding functional r with its two convention flags, the half twist t, the
cotwist computed as the convolution square of t, convolution inversion of
functionals, the conjugation C_t, and the rotation automorphism.

Convention flags (both pinned by the transmutation cross-check, and both
echoed into reports):

* ``r_table_transposed`` swaps the argument order used to read the generator
  table of r.
* ``r_second_law_swapped`` swaps which coproduct leg pairs with the inner
  factor in the one-letter extension law of r.
"""

from __future__ import annotations

from typing import Callable

from . import _linalg
from .nc_rewrite import NcPoly, RewriteSystem, UNIT_WORD, Word
from .scalar_ring import Laurent, RationalScalar, integer, q_pow, v_pow

OQ_NAMES = ("a", "b", "c", "d")
GEN_A, GEN_B, GEN_C, GEN_D = range(4)

# Matrix position of each generator (row, column), 1-based.
_POS = {GEN_A: (1, 1), GEN_B: (1, 2), GEN_C: (2, 1), GEN_D: (2, 2)}
_GEN_AT = {pos: g for g, pos in _POS.items()}

# b counts +1 and c counts -1; r vanishes unless the two balances cancel.
_BALANCE = {GEN_A: 0, GEN_B: 1, GEN_C: -1, GEN_D: 0}


def oq_rewrite_system() -> RewriteSystem:
    """Rewrite rules presenting the quantized coordinate ring."""
    q = q_pow(1)
    one = Laurent.one()
    rules = [
        ((GEN_B, GEN_A), NcPoly({(GEN_A, GEN_B): q})),
        ((GEN_C, GEN_A), NcPoly({(GEN_A, GEN_C): q})),
        ((GEN_C, GEN_B), NcPoly({(GEN_B, GEN_C): one})),
        ((GEN_D, GEN_B), NcPoly({(GEN_B, GEN_D): q})),
        ((GEN_D, GEN_C), NcPoly({(GEN_C, GEN_D): q})),
        ((GEN_B, GEN_C), NcPoly({(GEN_A, GEN_D): q, UNIT_WORD: -q})),
        ((GEN_D, GEN_A), NcPoly({(GEN_A, GEN_D): q_pow(2), UNIT_WORD: one - q_pow(2)})),
    ]
    return RewriteSystem(OQ_NAMES, rules)


# Generator table of the braiding functional: value on (row gen, column gen).
# The defining matrix is printed in braid form (flip composed with the
# R-matrix); the pairing below reads the R-matrix itself.
_R_TABLE = {
    (GEN_A, GEN_A): v_pow(2),
    (GEN_D, GEN_D): v_pow(2),
    (GEN_A, GEN_D): v_pow(-2),
    (GEN_D, GEN_A): v_pow(-2),
    (GEN_B, GEN_C): v_pow(2) - v_pow(-6),
}

# Half twist on generators; the alternate stored variant is kept as data only.
_T_TABLE = {GEN_A: Laurent.zero(), GEN_B: -v_pow(5), GEN_C: v_pow(1), GEN_D: Laurent.zero()}
T2_TABLE = {GEN_A: Laurent.zero(), GEN_B: v_pow(3), GEN_C: -v_pow(3), GEN_D: Laurent.zero()}

_COUNIT = {GEN_A: Laurent.one(), GEN_B: Laurent.zero(), GEN_C: Laurent.zero(), GEN_D: Laurent.one()}


class Functional:
    """Scalar-valued linear functional defined on normal words, memoized."""

    def __init__(self, name: str, fn: Callable[[Word], Laurent | RationalScalar]):
        self.name = name
        self._fn = fn
        self._cache: dict[Word, Laurent | RationalScalar] = {}

    def value(self, word: Word):
        word = tuple(word)
        hit = self._cache.get(word)
        if hit is None:
            hit = self._fn(word)
            self._cache[word] = hit
        return hit

    def __call__(self, word: Word):
        return self.value(word)

    def apply(self, p: NcPoly) -> RationalScalar:
        total = RationalScalar.zero()
        for w, c in p.items():
            val = self.value(w)
            if val:
                total = total + RationalScalar.coerce(c) * RationalScalar.coerce(val)
        return total


class _ConvInverse(Functional):
    """Convolution inverse of a functional, solved degree block by block.

    The coproduct never raises leg degree, so the unknown values at degree d
    satisfy a square linear system over the rational scalars whose right-hand
    side involves only already-solved lower degrees.
    """

    def __init__(self, ctx: "OqContext", base: Functional, name: str):
        self.ctx = ctx
        self.base = base
        unit = RationalScalar.coerce(base.value(UNIT_WORD))
        if unit.is_zero:
            raise ValueError(f"{base.name} has no convolution inverse: vanishes on the unit word")
        self._values: dict[Word, RationalScalar] = {UNIT_WORD: unit.inverse()}
        self._solved = 0
        super().__init__(name, self._lookup)

    def _lookup(self, word: Word) -> RationalScalar:
        self.ensure(len(word))
        return self._values.get(tuple(word), RationalScalar.zero())

    def ensure(self, degree: int) -> None:
        while self._solved < degree:
            self._solve_block(self._solved + 1)
            self._solved += 1

    def _solve_block(self, d: int) -> None:
        words = self.ctx.rewrite.graded_basis(d)
        index = {w: i for i, w in enumerate(words)}
        n = len(words)
        zero = RationalScalar.zero()
        a = [[zero] * n for _ in range(n)]
        rhs = []
        for i, w in enumerate(words):
            acc = RationalScalar.coerce(self.ctx.counit_word(w))
            for (l1, l2), c in self.ctx.coproduct_words(w, 2):
                fval = self.base.value(l1)
                if not fval:
                    continue
                coef = RationalScalar.coerce(c) * RationalScalar.coerce(fval)
                if len(l2) == d:
                    a[i][index[l2]] = a[i][index[l2]] + coef
                else:
                    acc = acc - coef * self._values.get(l2, zero)
            rhs.append(acc)
        try:
            sol = _linalg.solve_dense(a, rhs)
        except ValueError as exc:
            raise ValueError(
                f"{self.base.name} has no convolution inverse at degree {d}"
            ) from exc
        for w, val in zip(words, sol):
            self._values[w] = val
        # The one-sided solve must also invert from the left.
        for w in words:
            acc = RationalScalar.zero()
            for (l1, l2), c in self.ctx.coproduct_words(w, 2):
                gval = self._values.get(l1) if len(l1) <= d else None
                if gval is None or gval.is_zero:
                    continue
                acc = acc + RationalScalar.coerce(c) * gval * RationalScalar.coerce(self.base.value(l2))
            if acc != RationalScalar.coerce(self.ctx.counit_word(w)):
                raise ValueError(
                    f"one-sided convolution inverse of {self.base.name} fails on the left at degree {d}"
                )


class OqContext:
    """The quantized coordinate ring with its braided structure maps."""

    def __init__(self, r_table_transposed: bool = False, r_second_law_swapped: bool = False):
        self.r_table_transposed = r_table_transposed
        self.r_second_law_swapped = r_second_law_swapped
        self.rewrite = oq_rewrite_system()
        self._coproduct_cache: dict[tuple[Word, int], tuple] = {}
        self._antipode_cache: dict[Word, NcPoly] = {}
        self._r_cache: dict[tuple[Word, Word], Laurent] = {}
        self._t_cache: dict[Word, Laurent] = {UNIT_WORD: Laurent.one()}
        self._theta_cache: dict[Word, Laurent] = {}
        self._ct_cache: dict[Word, NcPoly] = {}
        self._t_inv: _ConvInverse | None = None
        self._theta_inv: _ConvInverse | None = None

    def flags(self) -> dict[str, bool]:
        return {
            "r_table_transposed": self.r_table_transposed,
            "r_second_law_swapped": self.r_second_law_swapped,
        }

    # -- element helpers -----------------------------------------------------

    def gen(self, name: str) -> NcPoly:
        return NcPoly.monomial((OQ_NAMES.index(name),))

    def element(self, text: str) -> NcPoly:
        return self.rewrite.normal_form(NcPoly.parse(text, OQ_NAMES))

    # -- coalgebra ------------------------------------------------------------

    @staticmethod
    def _gen_paths(g: int, nlegs: int) -> list[tuple[int, ...]]:
        i, j = _POS[g]
        paths = [(i,)]
        for _ in range(nlegs - 1):
            paths = [p + (k,) for p in paths for k in (1, 2)]
        return [
            tuple(_GEN_AT[(p[m], p[m + 1])] for m in range(nlegs))
            for p in (path + (j,) for path in paths)
        ]

    def coproduct_words(self, w: Word, nlegs: int) -> tuple:
        """Iterated coproduct of a word: ((leg words...), coeff) with every
        leg in normal form."""
        key = (tuple(w), nlegs)
        hit = self._coproduct_cache.get(key)
        if hit is not None:
            return hit
        items: dict[tuple[Word, ...], Laurent] = {(UNIT_WORD,) * nlegs: Laurent.one()}
        for g in w:
            new: dict[tuple[Word, ...], Laurent] = {}
            for legs, c in items.items():
                for glegs in self._gen_paths(g, nlegs):
                    stack = [((), c)]
                    for m in range(nlegs):
                        prod = self.rewrite.mul(
                            NcPoly.monomial(legs[m]), NcPoly.monomial((glegs[m],))
                        )
                        nxt = []
                        for pref, pc in stack:
                            for pw, pcoef in prod.items():
                                nxt.append((pref + (pw,), pc * pcoef))
                        stack = nxt
                    for full, pc in stack:
                        new[full] = new.get(full, Laurent.zero()) + pc
            items = new
        result = tuple((legs, c) for legs, c in items.items() if c)
        self._coproduct_cache[key] = result
        return result

    def coproduct(self, p: NcPoly):
        from .tensor_power import TensorElement

        terms: dict[tuple[Word, Word], Laurent] = {}
        for w, c in p.items():
            for (l1, l2), cc in self.coproduct_words(w, 2):
                key = (l1, l2)
                terms[key] = terms.get(key, Laurent.zero()) + c * cc
        return TensorElement(2, terms)

    def counit_word(self, w: Word) -> Laurent:
        out = Laurent.one()
        for g in w:
            out = out * _COUNIT[g]
            if not out:
                break
        return out

    def counit(self, p: NcPoly) -> Laurent:
        total = Laurent.zero()
        for w, c in p.items():
            total = total + c * self.counit_word(w)
        return total

    # -- antipode ---------------------------------------------------------------

    _S_TABLE = None  # built lazily; depends on NcPoly

    def _antipode_table(self) -> dict[int, NcPoly]:
        if OqContext._S_TABLE is None:
            OqContext._S_TABLE = {
                GEN_A: NcPoly.monomial((GEN_D,)),
                GEN_B: NcPoly.monomial((GEN_B,), -q_pow(1)),
                GEN_C: NcPoly.monomial((GEN_C,), -q_pow(-1)),
                GEN_D: NcPoly.monomial((GEN_A,)),
            }
        return OqContext._S_TABLE

    def antipode_word(self, w: Word) -> NcPoly:
        w = tuple(w)
        hit = self._antipode_cache.get(w)
        if hit is not None:
            return hit
        table = self._antipode_table()
        out = NcPoly.one()
        for g in reversed(w):
            out = self.rewrite.mul(out, table[g])
        self._antipode_cache[w] = out
        return out

    def antipode(self, p: NcPoly) -> NcPoly:
        out = NcPoly.zero()
        for w, c in p.items():
            out = out + self.antipode_word(w).scale(c)
        return out

    # -- braiding functional r ----------------------------------------------------

    @staticmethod
    def _balance(w: Word) -> int:
        return sum(_BALANCE[g] for g in w)

    def _r_base(self, g1: int, g2: int) -> Laurent:
        key = (g2, g1) if self.r_table_transposed else (g1, g2)
        return _R_TABLE.get(key, Laurent.zero())

    def r_pair_words(self, w1: Word, w2: Word) -> Laurent:
        if self._balance(w1) + self._balance(w2) != 0:
            return Laurent.zero()
        key = (tuple(w1), tuple(w2))
        hit = self._r_cache.get(key)
        if hit is not None:
            return hit
        w1, w2 = key
        if not w1:
            out = self.counit_word(w2)
        elif not w2:
            out = self.counit_word(w1)
        elif len(w1) == 1 and len(w2) == 1:
            out = self._r_base(w1[0], w2[0])
        elif len(w1) > 1:
            u, rest = w1[:1], w1[1:]
            out = Laurent.zero()
            for (l1, l2), c in self.coproduct_words(w2, 2):
                s1 = self.r_pair_words(u, l1)
                if not s1:
                    continue
                s2 = self.r_pair_words(rest, l2)
                if s2:
                    out = out + c * s1 * s2
        else:
            first, rest = w2[:1], w2[1:]
            out = Laurent.zero()
            for (g1, g2) in self._gen_paths(w1[0], 2):
                if self.r_second_law_swapped:
                    s1 = self.r_pair_words((g1,), first)
                    s2 = self.r_pair_words((g2,), rest) if s1 else None
                else:
                    s1 = self.r_pair_words((g1,), rest)
                    s2 = self.r_pair_words((g2,), first) if s1 else None
                if s1 and s2:
                    out = out + s1 * s2
        self._r_cache[key] = out
        return out

    def r_pair(self, x: NcPoly, y: NcPoly) -> Laurent:
        total = Laurent.zero()
        for w1, c1 in x.items():
            for w2, c2 in y.items():
                val = self.r_pair_words(w1, w2)
                if val:
                    total = total + c1 * c2 * val
        return total

    def r_bar_pair_words(self, w1: Word, w2: Word) -> Laurent:
        """Convolution inverse of r: r composed with the antipode on the left."""
        total = Laurent.zero()
        for sw, sc in self.antipode_word(w1).items():
            val = self.r_pair_words(sw, w2)
            if val:
                total = total + sc * val
        return total

    def r_matrix(self) -> list[list[Laurent]]:
        """Generator table of r as a 4x4 matrix over pair indices
        (1,1),(1,2),(2,1),(2,2)."""
        pairs = [(1, 1), (1, 2), (2, 1), (2, 2)]
        return [
            [
                self._r_base(_GEN_AT[(row[0], col[0])], _GEN_AT[(row[1], col[1])])
                for col in pairs
            ]
            for row in pairs
        ]

    def braiding_matrix(self) -> list[list[Laurent]]:
        """Matrix of the braiding on the square of the defining comodule,
        rows indexed by the output basis pair, columns by the input pair."""
        pairs = [(1, 1), (1, 2), (2, 1), (2, 2)]
        mat = [[Laurent.zero()] * 4 for _ in range(4)]
        for ci, (i, k) in enumerate(pairs):
            for j in (1, 2):
                for l in (1, 2):
                    val = self.r_pair_words(
                        (_GEN_AT[(j, i)],), (_GEN_AT[(l, k)],)
                    )
                    if val:
                        ri = pairs.index((l, j))
                        mat[ri][ci] = mat[ri][ci] + val
        return mat

    # -- half twist and cotwist ------------------------------------------------------

    def half_twist_word(self, w: Word) -> Laurent:
        w = tuple(w)
        hit = self._t_cache.get(w)
        if hit is not None:
            return hit
        if len(w) == 1:
            out = _T_TABLE[w[0]]
        else:
            out = Laurent.zero()
            for (g1, g2) in self._gen_paths(w[0], 2):
                tg = _T_TABLE[g1]
                if not tg:
                    continue
                for (l1, l2), c in self.coproduct_words(w[1:], 2):
                    tl = self.half_twist_word(l1)
                    if not tl:
                        continue
                    rv = self.r_pair_words((g2,), l2)
                    if rv:
                        out = out + c * tg * tl * rv
        self._t_cache[w] = out
        return out

    def half_twist(self, p: NcPoly) -> Laurent:
        total = Laurent.zero()
        for w, c in p.items():
            total = total + c * self.half_twist_word(w)
        return total

    def cotwist_word(self, w: Word) -> Laurent:
        w = tuple(w)
        hit = self._theta_cache.get(w)
        if hit is not None:
            return hit
        out = Laurent.zero()
        for (l1, l2), c in self.coproduct_words(w, 2):
            t1 = self.half_twist_word(l1)
            if not t1:
                continue
            t2 = self.half_twist_word(l2)
            if t2:
                out = out + c * t1 * t2
        self._theta_cache[w] = out
        return out

    def cotwist(self, p: NcPoly) -> Laurent:
        total = Laurent.zero()
        for w, c in p.items():
            total = total + c * self.cotwist_word(w)
        return total

    # -- convolution inversion ------------------------------------------------------

    def conv_inverse(self, f: Functional, degree: int = 0) -> Functional:
        inv = _ConvInverse(self, f, f"{f.name}^-1")
        inv.ensure(degree)
        return inv

    @property
    def half_twist_functional(self) -> Functional:
        return Functional("t", self.half_twist_word)

    @property
    def t_inverse(self) -> Functional:
        if self._t_inv is None:
            self._t_inv = _ConvInverse(self, Functional("t", self.half_twist_word), "t^-1")
        return self._t_inv

    @property
    def cotwist_inverse(self) -> Functional:
        if self._theta_inv is None:
            self._theta_inv = _ConvInverse(self, Functional("Theta", self.cotwist_word), "Theta^-1")
        return self._theta_inv

    # -- conjugation and rotation -------------------------------------------------------

    def c_t_word(self, w: Word) -> NcPoly:
        w = tuple(w)
        hit = self._ct_cache.get(w)
        if hit is not None:
            return hit
        acc: dict[Word, RationalScalar] = {}
        for (l1, l2, l3), c in self.coproduct_words(w, 3):
            s1 = self.half_twist_word(l1)
            if not s1:
                continue
            s3 = self.t_inverse.value(l3)
            if not s3:
                continue
            coef = RationalScalar.coerce(c * s1) * s3
            acc[l2] = acc.get(l2, RationalScalar.zero()) + coef
        out = NcPoly({u: coef.to_laurent() for u, coef in acc.items() if coef})
        self._ct_cache[w] = out
        return out

    def c_t(self, p: NcPoly) -> NcPoly:
        out = NcPoly.zero()
        for w, c in p.items():
            out = out + self.c_t_word(w).scale(c)
        return out

    def rot(self, p: NcPoly) -> NcPoly:
        """Rotation automorphism: the conjugation followed by the antipode."""
        return self.antipode(self.c_t(p))
