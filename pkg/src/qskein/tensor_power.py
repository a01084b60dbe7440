"""Braided tensor powers of the transmuted algebra.

An arity-n element is a linear combination of n-tuples of basis words; the
product braids factors of the right operand leftwards past factors of the
left operand before contracting slotwise, so slot i of a product only ever
meets slot i of the other operand after the crossings are paid for.

Two exchange operators live here and must not be confused:

* ``braiding`` is the categorical exchange of two tensorands computed from
  the adjoint coaction and the braiding functional.  It degenerates to the
  plain flip when v = 1.
* ``braid_act`` is the braid-group action by algebra automorphisms.  The
  generator acting on slots (i, i+1) conjugates the slot-i generator matrix
  by itself around the slot-(i+1) matrix, with matrix products taken inside
  the braided power and the matrix inverse given by the braided antipode.
  At v = 1 it becomes the pullback of X_i -> X_i X_{i+1} X_i^{-1},
  X_{i+1} -> X_i on tuples of matrices.

The twist operator contracts the total coordinate-ring coaction against the
cotwist functional; the twisted opposite product composes the twist with the
coordinate-ring braiding of the whole power.
"""

from __future__ import annotations

import re

from .bq_sl2 import BqContext
from .nc_rewrite import NcPoly, UNIT_WORD, Word
from .oq_sl2 import OQ_NAMES
from .scalar_ring import Laurent, RationalScalar

Legs = tuple[Word, ...]
TermMap = dict[Legs, Laurent]


class BraidParseError(ValueError):
    """Raised on malformed braid words; carries the 1-based token position."""

    def __init__(self, message: str, position: int):
        super().__init__(message)
        self.position = position


_TOKEN = re.compile(r"^s(\d+)(\^-1)?$")


class BraidWord:
    """A braid-group element as a sequence of signed generator letters.

    Text grammar: whitespace-separated tokens ``s<i>`` and ``s<i>^-1`` with
    1 <= i <= strands-1; the empty word is the identity braid.
    """

    def __init__(self, strands: int, letters: tuple[tuple[int, int], ...] = ()):
        if strands < 1:
            raise ValueError(f"strand count must be positive, got {strands}")
        for (i, sign) in letters:
            if not 1 <= i <= strands - 1:
                raise ValueError(
                    f"generator index {i} exceeds strands-1={strands - 1}"
                )
            if sign not in (1, -1):
                raise ValueError(f"letter sign must be +-1, got {sign}")
        self.strands = strands
        self.letters = tuple(letters)

    @classmethod
    def parse(cls, text: str, strands: int) -> "BraidWord":
        letters = []
        for pos, tok in enumerate(text.split(), start=1):
            m = _TOKEN.match(tok)
            if not m:
                raise BraidParseError(
                    f"token {pos}: {tok!r} is not s<i> or s<i>^-1", pos
                )
            i = int(m.group(1))
            if not 1 <= i <= strands - 1:
                raise BraidParseError(
                    f"token {pos}: generator index {i} exceeds strands-1={strands - 1}",
                    pos,
                )
            letters.append((i, -1 if m.group(2) else 1))
        return cls(strands, tuple(letters))

    def inverse(self) -> "BraidWord":
        return BraidWord(
            self.strands, tuple((i, -s) for (i, s) in reversed(self.letters))
        )

    def mirrored(self) -> "BraidWord":
        return BraidWord(self.strands, tuple((i, -s) for (i, s) in self.letters))

    def render(self) -> str:
        return " ".join(f"s{i}" if s == 1 else f"s{i}^-1" for (i, s) in self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, BraidWord)
            and self.strands == other.strands
            and self.letters == other.letters
        )

    def __repr__(self) -> str:
        return f"BraidWord({self.strands}, {self.render()!r})"


class TensorElement:
    """Linear combination of n-tuples of normal basis words."""

    __slots__ = ("arity", "terms")

    def __init__(self, arity: int, terms: TermMap | None = None):
        if arity < 1:
            raise ValueError(f"arity must be positive, got {arity}")
        clean: TermMap = {}
        for legs, c in (terms or {}).items():
            legs = tuple(tuple(w) for w in legs)
            if len(legs) != arity:
                raise ValueError(f"term {legs} has {len(legs)} legs, expected {arity}")
            if c:
                clean[legs] = c
        self.arity = arity
        self.terms = clean

    @classmethod
    def unit(cls, arity: int) -> "TensorElement":
        return cls(arity, {(UNIT_WORD,) * arity: Laurent.one()})

    @classmethod
    def basis(cls, legs: Legs, coeff: Laurent | None = None) -> "TensorElement":
        return cls(len(legs), {tuple(legs): coeff if coeff is not None else Laurent.one()})

    def __add__(self, other: "TensorElement") -> "TensorElement":
        self._check(other)
        out = dict(self.terms)
        for legs, c in other.terms.items():
            out[legs] = out.get(legs, Laurent.zero()) + c
        return TensorElement(self.arity, out)

    def __sub__(self, other: "TensorElement") -> "TensorElement":
        return self + other.scale(-Laurent.one())

    def scale(self, c: Laurent) -> "TensorElement":
        return TensorElement(self.arity, {legs: cc * c for legs, cc in self.terms.items()})

    def degree(self) -> int:
        """Largest total leg length, or -1 for the zero element."""
        return max((sum(len(w) for w in legs) for legs in self.terms), default=-1)

    def items(self):
        return self.terms.items()

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, TensorElement)
            and self.arity == other.arity
            and self.terms == other.terms
        )

    def __repr__(self) -> str:
        def wname(w):
            return ".".join(OQ_NAMES[i] for i in w) if w else "1"

        if not self.terms:
            return "TensorElement(0)"
        parts = []
        for legs in sorted(self.terms):
            c = self.terms[legs]
            body = " | ".join(wname(w) for w in legs)
            parts.append(f"({c.render()})*[{body}]")
        return " + ".join(parts)

    def _check(self, other: "TensorElement") -> None:
        if self.arity != other.arity:
            raise ValueError(f"arity mismatch: {self.arity} vs {other.arity}")


def _add_term(acc: dict, key, c: Laurent) -> None:
    got = acc.get(key)
    acc[key] = c if got is None else got + c


def _clean(d: dict) -> dict:
    return {k: v for k, v in d.items() if v}


class PowerContext:
    """Operations on braided tensor powers, bundled with their caches.

    ``mirror`` swaps the roles of positive and negative braid letters in
    ``braid_act``; every other operation ignores it.
    """

    def __init__(self, bq: BqContext | None = None, mirror: bool = False):
        self.bq = bq if bq is not None else BqContext()
        self.mirror = mirror
        self._mul_cache: dict[tuple[int, Legs, Legs], TermMap] = {}
        self._sigma_gen: dict[tuple[int, int, int], dict] = {}
        self._sigma_term: dict[tuple[int, int, int], dict[Legs, TermMap]] = {}
        self._coaction_cache: dict[Legs, dict] = {}
        self._braided_coaction_cache: dict[Legs, TermMap] = {}
        self._twist_cache: dict[Legs, TermMap] = {}
        self._twist_inv_cache: dict[Legs, TermMap] = {}
        self._sbar_gen = {
            g: self.bq.transmuted_antipode(NcPoly.monomial((g,))) for g in range(4)
        }

    def flags(self) -> dict[str, bool]:
        out = dict(self.bq.flags())
        out["mirror"] = self.mirror
        return out

    # -- braiding of two tensorands ------------------------------------------------

    def braiding(self, x: TensorElement) -> TensorElement:
        """Categorical exchange of the two legs of an arity-2 element."""
        if x.arity != 2:
            raise ValueError(f"braiding needs arity 2, got {x.arity}")
        out: TermMap = {}
        for (w1, w2), c in x.items():
            for pair, cc in self.bq.braiding_pair_words(w1, w2).items():
                _add_term(out, pair, c * cc)
        return TensorElement(2, out)

    def braiding_inverse(self, x: TensorElement) -> TensorElement:
        if x.arity != 2:
            raise ValueError(f"braiding needs arity 2, got {x.arity}")
        out: TermMap = {}
        for (w1, w2), c in x.items():
            for pair, cc in self.bq.braiding_inverse_pair_words(w1, w2).items():
                _add_term(out, pair, c * cc)
        return TensorElement(2, out)

    # -- product --------------------------------------------------------------------

    def _mul_legs(self, la: Legs, lb: Legs) -> TermMap:
        n = len(la)
        key = (n, la, lb)
        hit = self._mul_cache.get(key)
        if hit is not None:
            return hit
        bq = self.bq
        work: TermMap = {la + lb: Laurent.one()}
        for j in range(n):
            # incoming leg j sits at index n; walk it left to slot j
            for pos in range(n - 1, j, -1):
                nxt: TermMap = {}
                for legs, c in work.items():
                    for (bm, am), cc in bq.braiding_pair_words(
                        legs[pos], legs[pos + 1]
                    ).items():
                        _add_term(nxt, legs[:pos] + (bm, am) + legs[pos + 2:], c * cc)
                work = _clean(nxt)
            nxt = {}
            for legs, c in work.items():
                for mw, mc in bq.mul_words(legs[j], legs[j + 1]).items():
                    _add_term(nxt, legs[:j] + (mw,) + legs[j + 2:], c * mc)
            work = _clean(nxt)
        self._mul_cache[key] = work
        return work

    def mul(self, x: TensorElement, y: TensorElement) -> TensorElement:
        """Product of the braided power: right-operand legs braid leftwards
        into place, then slots contract."""
        x._check(y)
        out: TermMap = {}
        for la, ca in x.items():
            for lb, cb in y.items():
                for legs, c in self._mul_legs(la, lb).items():
                    _add_term(out, legs, ca * cb * c)
        return TensorElement(x.arity, out)

    # -- coactions -------------------------------------------------------------------

    def total_coaction(self, x: TensorElement) -> dict[tuple[Legs, Word], Laurent]:
        """Coordinate-ring coaction of the whole power: adjoint coaction on
        each slot, coefficient legs multiplied in slot order into a single
        trailing coordinate-ring word."""
        out: dict[tuple[Legs, Word], Laurent] = {}
        for legs, c in x.items():
            for (body, ow), cc in self._coact_legs(legs).items():
                _add_term(out, (body, ow), c * cc)
        return _clean(out)

    def _coact_legs(self, legs: Legs) -> dict:
        hit = self._coaction_cache.get(legs)
        if hit is not None:
            return hit
        oq = self.bq.oq
        acc: dict = {((), UNIT_WORD): Laurent.one()}
        for w in legs:
            nxt: dict = {}
            for (body, ow), c in acc.items():
                for (b, o), cc in self.bq.adjoint_coaction_words(w):
                    for prod, pc in oq.rewrite.mul(
                        NcPoly.monomial(ow), NcPoly.monomial(o)
                    ).items():
                        _add_term(nxt, (body + (b,), prod), c * cc * pc)
            acc = _clean(nxt)
        self._coaction_cache[legs] = acc
        return acc

    def braided_total_coaction(self, x: TensorElement) -> TensorElement:
        """Transmuted-coefficient coaction of the whole power: braided
        adjoint coaction on each slot, coefficient legs exchanged past later
        bodies and multiplied into a single trailing transmuted leg.  The
        result has arity n+1."""
        out: TermMap = {}
        for legs, c in x.items():
            for key, cc in self._braided_coact_legs(legs).items():
                _add_term(out, key, c * cc)
        return TensorElement(x.arity + 1, out)

    def _braided_coact_legs(self, legs: Legs) -> TermMap:
        hit = self._braided_coaction_cache.get(legs)
        if hit is not None:
            return hit
        bq = self.bq
        acc: TermMap = {(UNIT_WORD,): Laurent.one()}
        for w in legs:
            nxt: TermMap = {}
            for prev, c in acc.items():
                coef, bodies = prev[-1], prev[:-1]
                for (b, o), cc in bq.braided_adjoint_words(w):
                    # exchange the accumulated coefficient past the new body
                    for (b2, coef2), cb in bq.braiding_pair_words(coef, b).items():
                        for prod, pc in bq.mul_words(coef2, o).items():
                            _add_term(nxt, bodies + (b2, prod), c * cc * cb * pc)
            acc = _clean(nxt)
        self._braided_coaction_cache[legs] = acc
        return acc

    # -- twist and the twisted opposite product --------------------------------------

    def twist(self, x: TensorElement) -> TensorElement:
        """Contract the total coaction against the cotwist functional."""
        return self._twist_with(x, self.bq.oq.cotwist_word, self._twist_cache)

    def twist_inverse(self, x: TensorElement) -> TensorElement:
        return self._twist_with(x, self.bq.oq.cotwist_inverse.value, self._twist_inv_cache)

    def _twist_with(self, x, word_value, cache) -> TensorElement:
        out: TermMap = {}
        for legs, c in x.items():
            hit = cache.get(legs)
            if hit is None:
                acc: dict[Legs, RationalScalar] = {}
                for (body, ow), cc in self._coact_legs(legs).items():
                    val = RationalScalar.coerce(word_value(ow))
                    if val.is_zero:
                        continue
                    got = acc.get(body)
                    term = val * cc.to_rational()
                    acc[body] = term if got is None else got + term
                hit = {
                    body: val.to_laurent()
                    for body, val in acc.items()
                    if not val.is_zero
                }
                cache[legs] = hit
            for body, cc in hit.items():
                _add_term(out, body, c * cc)
        return TensorElement(x.arity, out)

    def twisted_opposite_mul(self, x: TensorElement, y: TensorElement) -> TensorElement:
        """Twist the left operand, exchange it past the right operand through
        the coordinate-ring braiding of the power, then multiply."""
        x._check(y)
        tx = self.twist(x)
        oq = self.bq.oq
        out: TermMap = {}
        for (xb, xo), cx in self.total_coaction(tx).items():
            for (yb, yo), cy in self.total_coaction(y).items():
                val = oq.r_pair_words(xo, yo)
                if not val:
                    continue
                for legs, c in self._mul_legs(yb, xb).items():
                    _add_term(out, legs, cx * cy * val * c)
        return TensorElement(x.arity, out)

    # -- braid-group action ------------------------------------------------------------

    def braid_act(self, w: BraidWord, x: TensorElement) -> TensorElement:
        """Apply a braid word, letters acting in reading order."""
        if w.strands != x.arity:
            raise ValueError(f"arity mismatch: braid on {w.strands} strands, element arity {x.arity}")
        for (i, sign) in w.letters:
            if self.mirror:
                sign = -sign
            x = self._sigma(x, i - 1, sign)
        return x

    def _sigma(self, x: TensorElement, slot: int, sign: int) -> TensorElement:
        n = x.arity
        memo = self._sigma_term.setdefault((n, slot, sign), {})
        out: TermMap = {}
        for legs, c in x.items():
            hit = memo.get(legs)
            if hit is None:
                img = self._sigma_images(n, slot, sign)
                acc: TermMap = {(UNIT_WORD,) * n: Laurent.one()}
                for s in range(n):
                    for g in legs[s]:
                        nxt: TermMap = {}
                        for la, ca in acc.items():
                            for lb, cb in img[(s, g)].items():
                                for key, cc in self._mul_legs(la, lb).items():
                                    _add_term(nxt, key, ca * cb * cc)
                        acc = _clean(nxt)
                hit = acc
                memo[legs] = hit
            for key, cc in hit.items():
                _add_term(out, key, c * cc)
        return TensorElement(n, out)

    def _sigma_images(self, n: int, slot: int, sign: int) -> dict:
        key = (n, slot, sign)
        hit = self._sigma_gen.get(key)
        if hit is not None:
            return hit
        mat = {(1, 1): 0, (1, 2): 1, (2, 1): 2, (2, 2): 3}
        lo, hi = slot, slot + 1

        def embed(p: NcPoly, s: int) -> TermMap:
            out: TermMap = {}
            for w, c in p.items():
                legs = [UNIT_WORD] * n
                legs[s] = w
                out[tuple(legs)] = c
            return out

        def mul_maps(t1: TermMap, t2: TermMap) -> TermMap:
            out: TermMap = {}
            for la, ca in t1.items():
                for lb, cb in t2.items():
                    for kk, cc in self._mul_legs(la, lb).items():
                        _add_term(out, kk, ca * cb * cc)
            return _clean(out)

        img: dict = {}
        for s in range(n):
            for g in range(4):
                img[(s, g)] = embed(NcPoly.monomial((g,)), s)
        if sign == 1:
            # slot lo matrix conjugates the pair: K_lo -> K_lo K_hi K_lo^{-1}
            for (r, j), g in mat.items():
                acc: TermMap = {}
                for k in (1, 2):
                    for l in (1, 2):
                        t = mul_maps(
                            embed(NcPoly.monomial((mat[(r, k)],)), lo),
                            embed(NcPoly.monomial((mat[(k, l)],)), hi),
                        )
                        t = mul_maps(t, embed(self._sbar_gen[mat[(l, j)]], lo))
                        for kk, cc in t.items():
                            _add_term(acc, kk, cc)
                img[(lo, g)] = _clean(acc)
            for g in range(4):
                img[(hi, g)] = embed(NcPoly.monomial((g,)), lo)
        else:
            # K_lo -> K_hi,  K_hi -> K_hi^{-1} K_lo K_hi
            for g in range(4):
                img[(lo, g)] = embed(NcPoly.monomial((g,)), hi)
            for (r, j), g in mat.items():
                acc = {}
                for k in (1, 2):
                    for l in (1, 2):
                        t = mul_maps(
                            embed(self._sbar_gen[mat[(r, k)]], hi),
                            embed(NcPoly.monomial((mat[(k, l)],)), lo),
                        )
                        t = mul_maps(t, embed(NcPoly.monomial((mat[(l, j)],)), hi))
                        for kk, cc in t.items():
                            _add_term(acc, kk, cc)
                img[(hi, g)] = _clean(acc)
        self._sigma_gen[key] = img
        return img
