"""Exact scalars: Laurent polynomials in v, reduced rational functions in v,
and evaluation at v = 1 over the integers or a prime field.

The base variable is v; the parser also accepts the aliases q = v^4 and
A = v^2.  A Laurent scalar is a sparse exponent-to-coefficient map holding no
zero coefficients, so value equality is representation equality.  A rational
scalar is a fraction of integer polynomials in v, eagerly normalized: the
denominator is nonzero with positive leading coefficient, the pair carries no
common polynomial factor and no common integer content.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable


class Laurent:
    """Element of the ring of integer Laurent polynomials in v."""

    __slots__ = ("_terms",)

    def __init__(self, terms: dict[int, int] | None = None):
        self._terms = {e: c for e, c in (terms or {}).items() if c}

    # -- construction ------------------------------------------------------

    @classmethod
    def zero(cls) -> "Laurent":
        return cls()

    @classmethod
    def one(cls) -> "Laurent":
        return cls({0: 1})

    @classmethod
    def from_int(cls, n: int) -> "Laurent":
        return cls({0: n})

    @classmethod
    def v_pow(cls, e: int, coeff: int = 1) -> "Laurent":
        return cls({e: coeff})

    @classmethod
    def q_pow(cls, e: int, coeff: int = 1) -> "Laurent":
        return cls({4 * e: coeff})

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]]) -> "Laurent":
        data: dict[int, int] = {}
        for e, c in pairs:
            data[e] = data.get(e, 0) + c
        return cls(data)

    # -- ring structure ----------------------------------------------------

    def __add__(self, other: "Laurent") -> "Laurent":
        data = dict(self._terms)
        for e, c in other._terms.items():
            data[e] = data.get(e, 0) + c
        return Laurent(data)

    def __sub__(self, other: "Laurent") -> "Laurent":
        data = dict(self._terms)
        for e, c in other._terms.items():
            data[e] = data.get(e, 0) - c
        return Laurent(data)

    def __neg__(self) -> "Laurent":
        return Laurent({e: -c for e, c in self._terms.items()})

    def __mul__(self, other: "Laurent") -> "Laurent":
        if not (self._terms and other._terms):
            return Laurent()
        data: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                data[e] = data.get(e, 0) + c1 * c2
        return Laurent(data)

    def __pow__(self, n: int) -> "Laurent":
        if n < 0:
            return self.unit_inverse() ** (-n)
        out = Laurent.one()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Laurent) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __repr__(self) -> str:
        return f"Laurent({self.render()!r})"

    # -- queries -----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_one(self) -> bool:
        return self._terms == {0: 1}

    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def min_exp(self) -> int:
        return min(self._terms)

    def max_exp(self) -> int:
        return max(self._terms)

    def int_content(self) -> int:
        return math.gcd(*self._terms.values()) if self._terms else 0

    def times_v(self, k: int) -> "Laurent":
        return Laurent({e + k: c for e, c in self._terms.items()})

    def div_int_exact(self, g: int) -> "Laurent":
        out = {}
        for e, c in self._terms.items():
            if c % g:
                raise ValueError(f"coefficient {c} not divisible by {g}")
            out[e] = c // g
        return Laurent(out)

    def unit_inverse(self) -> "Laurent":
        """Inverse of a unit c*v^k with c in {1, -1}."""
        if len(self._terms) != 1:
            raise ValueError(f"not a unit: {self.render()}")
        (e, c), = self._terms.items()
        if c not in (1, -1):
            raise ValueError(f"not a unit: {self.render()}")
        return Laurent({-e: c})

    # -- evaluation and conversion ------------------------------------------

    def specialize(self, at: "SpecPoint") -> int:
        total = sum(self._terms.values())
        return total % at.p if at.kind == "prime-field" else total

    def to_rational(self) -> "RationalScalar":
        if not self._terms:
            return RationalScalar.zero()
        low = min(self._terms)
        shift = max(0, -low)
        num = [0] * (max(self._terms) + shift + 1)
        for e, c in self._terms.items():
            num[e + shift] = c
        den = [0] * shift + [1]
        return RationalScalar(tuple(num), tuple(den))

    # -- text format ---------------------------------------------------------

    def render(self) -> str:
        if not self._terms:
            return "0"
        chunks = []
        for e in sorted(self._terms, reverse=True):
            c = self._terms[e]
            if e == 0:
                chunks.append(str(c))
            elif e == 1:
                chunks.append(f"{c}*v")
            else:
                chunks.append(f"{c}*v^{e}")
        return " + ".join(chunks)

    _TERM_RE = re.compile(
        r"^(?:(?P<coeff>[+-]?\d+)(?:\s*\*\s*(?P<var1>[vqA])(?:\^(?P<exp1>-?\d+))?)?"
        r"|(?P<var2>[vqA])(?:\^(?P<exp2>-?\d+))?)$"
    )
    _VAR_WEIGHT = {"v": 1, "A": 2, "q": 4}

    @classmethod
    def parse(cls, text: str) -> "Laurent":
        text = text.strip()
        if text == "0":
            return cls.zero()
        pairs = []
        for k, raw in enumerate(text.split("+")):
            tok = raw.strip()
            m = cls._TERM_RE.match(tok)
            if not m:
                raise ValueError(f"token {k}: cannot parse scalar term {tok!r}")
            coeff = int(m.group("coeff")) if m.group("coeff") is not None else 1
            var = m.group("var1") or m.group("var2")
            if var is None:
                exp = 0
            else:
                raw_exp = m.group("exp1") or m.group("exp2")
                exp = cls._VAR_WEIGHT[var] * (int(raw_exp) if raw_exp is not None else 1)
            pairs.append((exp, coeff))
        return cls.from_pairs(pairs)


def v_pow(e: int, coeff: int = 1) -> Laurent:
    return Laurent.v_pow(e, coeff)


def q_pow(e: int, coeff: int = 1) -> Laurent:
    return Laurent.q_pow(e, coeff)


def integer(n: int) -> Laurent:
    return Laurent.from_int(n)


_ARITH = {
    "add": lambda x, y: x + y,
    "sub": lambda x, y: x - y,
    "mul": lambda x, y: x * y,
    "neg": lambda x, _: -x,
}


def laurent_arith(x: Laurent, y: Laurent | None, op: str) -> Laurent:
    """Dispatch one ring operation by name: add, sub, mul, neg."""
    if op not in _ARITH:
        raise ValueError(f"unknown operation {op!r}")
    return _ARITH[op](x, y)


# -- specialization points ---------------------------------------------------


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class SpecPoint:
    """Evaluation point v = 1 over the integers or over a prime field."""

    kind: str
    p: int | None = None

    def __post_init__(self):
        if self.kind == "integers":
            if self.p is not None:
                raise ValueError("integer specialization takes no modulus")
        elif self.kind == "prime-field":
            if self.p is None or not _is_prime(self.p):
                raise ValueError(f"modulus {self.p!r} is not prime")
        else:
            raise ValueError(f"unknown specialization kind {self.kind!r}")

    @classmethod
    def integers(cls) -> "SpecPoint":
        return cls("integers")

    @classmethod
    def prime_field(cls, p: int) -> "SpecPoint":
        return cls("prime-field", p)


def specialize(x: Laurent, at: SpecPoint) -> int:
    return x.specialize(at)


# -- dense integer polynomials in v (constant coefficient first) -------------


def _ptrim(t: Iterable[int]) -> tuple[int, ...]:
    out = list(t)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _padd(f, g):
    n = max(len(f), len(g))
    return _ptrim([(f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0) for i in range(n)])


def _pneg(f):
    return tuple(-c for c in f)


def _psub(f, g):
    return _padd(f, _pneg(g))


def _pmul(f, g):
    if not f or not g:
        return ()
    out = [0] * (len(f) + len(g) - 1)
    for i, ci in enumerate(f):
        if ci:
            for j, cj in enumerate(g):
                out[i + j] += ci * cj
    return _ptrim(out)


def _pcontent(f) -> int:
    return math.gcd(*f) if f else 0


def _pprimitive(f):
    c = _pcontent(f)
    if c in (0, 1):
        return f
    return tuple(x // c for x in f)


def _prem(f, g):
    """Pseudo-remainder of f by g: rem(lc(g)^(deg f - deg g + 1) * f, g)."""
    if not g:
        raise ZeroDivisionError("pseudo-remainder by zero polynomial")
    f = list(f)
    dg, lg = len(g) - 1, g[-1]
    while len(f) - 1 >= dg and _ptrim(f):
        df = len(f) - 1
        lf = f[-1]
        f = [lg * c for c in f]
        for i, c in enumerate(g):
            f[df - dg + i] -= lf * c
        f = list(_ptrim(f))
    return _ptrim(f)


def _pgcd(f, g):
    """Primitive gcd via the primitive pseudo-remainder sequence."""
    f, g = _pprimitive(_ptrim(f)), _pprimitive(_ptrim(g))
    if not f:
        f, g = g, f
    while g:
        f, g = g, _pprimitive(_prem(f, g))
    if f and f[-1] < 0:
        f = _pneg(f)
    return f


def _pdiv_exact(f, g):
    """Exact quotient f / g; raises if the division leaves a remainder."""
    if not g:
        raise ZeroDivisionError("division by zero polynomial")
    if not f:
        return ()
    fq = [Fraction(c) for c in f]
    dg, lg = len(g) - 1, Fraction(g[-1])
    out = [Fraction(0)] * (len(f) - len(g) + 1)
    while len(fq) - 1 >= dg and any(fq):
        while fq and fq[-1] == 0:
            fq.pop()
        if len(fq) - 1 < dg:
            break
        k = len(fq) - 1 - dg
        coef = fq[-1] / lg
        out[k] = coef
        for i, c in enumerate(g):
            fq[k + i] -= coef * c
    if any(fq):
        raise ValueError("inexact polynomial division")
    res = []
    for c in out:
        if c.denominator != 1:
            raise ValueError("inexact polynomial division")
        res.append(int(c))
    return _ptrim(res)


class RationalScalar:
    """Reduced fraction of integer polynomials in v."""

    __slots__ = ("_num", "_den")

    def __init__(self, num: Iterable[int], den: Iterable[int] = (1,)):
        num, den = _ptrim(num), _ptrim(den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            den = (1,)
        else:
            g = _pgcd(num, den)
            if len(g) > 1 or g[0] != 1:
                num, den = _pdiv_exact(num, g), _pdiv_exact(den, g)
            c = math.gcd(_pcontent(num), _pcontent(den))
            if c > 1:
                num = tuple(x // c for x in num)
                den = tuple(x // c for x in den)
        if den[-1] < 0:
            num, den = _pneg(num), _pneg(den)
        self._num, self._den = num, den

    # -- construction ------------------------------------------------------

    @classmethod
    def zero(cls) -> "RationalScalar":
        return cls((), (1,))

    @classmethod
    def one(cls) -> "RationalScalar":
        return cls((1,), (1,))

    @classmethod
    def from_int(cls, n: int) -> "RationalScalar":
        return cls((n,), (1,))

    @classmethod
    def from_laurent(cls, x: Laurent) -> "RationalScalar":
        return x.to_rational()

    @classmethod
    def coerce(cls, x) -> "RationalScalar":
        if isinstance(x, RationalScalar):
            return x
        if isinstance(x, Laurent):
            return x.to_rational()
        if isinstance(x, int):
            return cls.from_int(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to RationalScalar")

    # -- field structure -----------------------------------------------------

    def __add__(self, other) -> "RationalScalar":
        other = RationalScalar.coerce(other)
        num = _padd(_pmul(self._num, other._den), _pmul(other._num, self._den))
        return RationalScalar(num, _pmul(self._den, other._den))

    __radd__ = __add__

    def __sub__(self, other) -> "RationalScalar":
        return self + (-RationalScalar.coerce(other))

    def __rsub__(self, other) -> "RationalScalar":
        return RationalScalar.coerce(other) + (-self)

    def __neg__(self) -> "RationalScalar":
        out = RationalScalar.__new__(RationalScalar)
        out._num, out._den = _pneg(self._num), self._den
        return out

    def __mul__(self, other) -> "RationalScalar":
        other = RationalScalar.coerce(other)
        return RationalScalar(_pmul(self._num, other._num), _pmul(self._den, other._den))

    __rmul__ = __mul__

    def inverse(self) -> "RationalScalar":
        if not self._num:
            raise ZeroDivisionError("inverse of zero")
        return RationalScalar(self._den, self._num)

    def __truediv__(self, other) -> "RationalScalar":
        return self * RationalScalar.coerce(other).inverse()

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (Laurent, int)):
            other = RationalScalar.coerce(other)
        if not isinstance(other, RationalScalar):
            return NotImplemented
        return self._num == other._num and self._den == other._den

    def __hash__(self) -> int:
        return hash((self._num, self._den))

    def __bool__(self) -> bool:
        return bool(self._num)

    @property
    def is_zero(self) -> bool:
        return not self._num

    def as_pair(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        return self._num, self._den

    def to_laurent(self) -> Laurent:
        """Convert back when the reduced denominator is a unit +-v^k."""
        nz = [i for i, c in enumerate(self._den) if c]
        if len(nz) != 1 or self._den[nz[0]] not in (1, -1):
            raise ValueError(f"denominator {self._den} is not a unit in the Laurent ring")
        k, sign = nz[0], self._den[nz[0]]
        return Laurent({i - k: sign * c for i, c in enumerate(self._num) if c})

    def specialize(self, at: SpecPoint) -> int:
        num, den = sum(self._num), sum(self._den)
        if at.kind == "integers":
            if num % den:
                raise ValueError("specialization is not an integer")
            return num // den
        if den % at.p == 0:
            raise ZeroDivisionError("denominator vanishes at the specialization point")
        return num * pow(den, -1, at.p) % at.p

    def render(self) -> str:
        def side(t):
            return Laurent({i: c for i, c in enumerate(t) if c}).render()

        if self._den == (1,):
            return side(self._num)
        return f"({side(self._num)}) / ({side(self._den)})"

    def __repr__(self) -> str:
        return f"RationalScalar({self.render()!r})"


def frac_normalize(num: Iterable[int], den: Iterable[int]) -> RationalScalar:
    """Normalize a raw fraction of integer polynomials in v."""
    return RationalScalar(num, den)
