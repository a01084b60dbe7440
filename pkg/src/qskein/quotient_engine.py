"""Degree-truncated quotient presentations over the rational-function field.

Relation families for braid-closure complements and mapping tori are spanned
inside a braided tensor power, closed under degree-1 multiplication up to a
working degree, and echelonized exactly.  Reported graded dimensions are
upper bounds for the true quotient; the per-degree stabilization flag records
whether the pivot set settled between the last two working degrees.

The classical comparison specializes the degree-1 relation family at v = 1,
reads tensor monomials as products of matrix entries over a finite field, and
counts common zeros against an independent free-group substitution oracle.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from ._linalg import Echelon, nullspace_dense
from .nc_rewrite import UNIT_WORD, Word
from .scalar_ring import Laurent, RationalScalar, SpecPoint
from .tensor_power import BraidWord, Legs, PowerContext, TensorElement

__all__ = [
    "FilteredQuotient",
    "PointCount",
    "ResourceLimitError",
    "relation_generators",
    "link_quotient",
    "mapping_torus_quotient",
    "coinvariants",
    "classical_points",
]

# enumeration budget for finite-field point counts: tuples x relation polys
_EVAL_BUDGET = 2_000_000


class ResourceLimitError(RuntimeError):
    """Instance exceeds the engine's desk-scale enumeration budget."""


def _legs_key(legs: Legs) -> tuple:
    return (sum(len(w) for w in legs), legs)


def _power_basis(ctx: PowerContext, arity: int, degree: int) -> list[Legs]:
    """Monomial legs of the arity-fold power with total degree == degree."""
    rew = ctx.bq.rewrite
    out: list[Legs] = []
    for comp in itertools.product(range(degree + 1), repeat=arity):
        if sum(comp) != degree:
            continue
        for legs in itertools.product(*(rew.graded_basis(d) for d in comp)):
            out.append(tuple(legs))
    return sorted(out)


def _power_basis_upto(ctx: PowerContext, arity: int, degree: int) -> list[Legs]:
    out: list[Legs] = []
    for d in range(degree + 1):
        out.extend(_power_basis(ctx, arity, d))
    return out


def _degree_one_monomials(ctx: PowerContext, arity: int) -> list[TensorElement]:
    return [TensorElement.basis(legs) for legs in _power_basis(ctx, arity, 1)]


# -- relation families -----------------------------------------------------------


def relation_generators(
    ctx: PowerContext,
    beta: BraidWord,
    degree: int,
    variant: str = "mu-top",
) -> list[TensorElement]:
    """Family r_{x,y} over basis pairs with total degree <= degree.

    mu-top variant: r = twisted_opposite_mul(x, y) - mul(braid_act(beta, x), y).
    mvdv variant:   r = mul(x, y) - mul(braid_act(beta, x), y).
    Zero elements are dropped.  Braid images can exceed the degree bound; the
    vectors are returned whole (truncation is the caller's policy).
    """
    if variant not in ("mu-top", "mvdv"):
        raise ValueError(f"unknown variant {variant!r}")
    n = beta.strands
    basis = _power_basis_upto(ctx, n, degree)
    out: list[TensorElement] = []
    acted: dict[Legs, TensorElement] = {}
    for x_legs in basis:
        dx = sum(len(w) for w in x_legs)
        x = TensorElement.basis(x_legs)
        if x_legs not in acted:
            acted[x_legs] = ctx.braid_act(beta, x)
        for y_legs in basis:
            if dx + sum(len(w) for w in y_legs) > degree:
                continue
            y = TensorElement.basis(y_legs)
            first = ctx.twisted_opposite_mul(x, y) if variant == "mu-top" else ctx.mul(x, y)
            r = first - ctx.mul(acted[x_legs], y)
            if r:
                out.append(r)
    return out


@dataclass
class FilteredQuotient:
    """Echelonized relation span of a braided power, reported per degree.

    graded_dims[d] counts degree-d monomials not hit by a pivot; stabilized[d]
    records whether the pivot set at degree <= d was already identical at
    working degree working_degree - 1.
    """

    arity: int
    degree: int
    working_degree: int
    echelon: Echelon
    pivots_by_degree: dict[int, set[Legs]]
    graded_dims: list[int]
    stabilized: list[bool]
    _ctx: PowerContext = field(repr=False)

    def quotient_basis(self, d: int) -> list[Legs]:
        pivots = self.pivots_by_degree.get(d, set())
        return [legs for legs in _power_basis(self._ctx, self.arity, d) if legs not in pivots]

    def contains(self, x: TensorElement) -> bool:
        return self.echelon.contains({legs: c for legs, c in x.items()})


def _truncated_rows(relations: list[TensorElement], degree: int) -> list[dict]:
    """Keep only relation vectors entirely supported in degree <= degree."""
    rows = []
    for r in relations:
        if r.degree() <= degree:
            rows.append({legs: c for legs, c in r.items()})
    return rows


def _close_and_echelonize(
    ctx: PowerContext,
    arity: int,
    rows: list[dict],
    degree: int,
) -> Echelon:
    """Echelon of the span closed under two-sided degree-1 multiplication."""
    ech = Echelon(_legs_key)
    monomials = _degree_one_monomials(ctx, arity)
    pending = [TensorElement(arity, r) for r in rows]
    while pending:
        elem = pending.pop()
        rem = ech.reduce({legs: c for legs, c in elem.items()})
        if not rem:
            continue
        ech.rows[max(rem, key=_legs_key)] = rem
        reduced = TensorElement(arity, rem)
        if reduced.degree() >= degree:
            continue
        for m in monomials:
            for prod in (ctx.mul(m, reduced), ctx.mul(reduced, m)):
                if prod and prod.degree() <= degree:
                    pending.append(prod)
    return ech


def _pivots_by_degree(ech: Echelon) -> dict[int, set[Legs]]:
    out: dict[int, set[Legs]] = {}
    for legs in ech.pivots():
        out.setdefault(sum(len(w) for w in legs), set()).add(legs)
    return out


def _assemble(
    ctx: PowerContext,
    arity: int,
    degree: int,
    working_degree: int,
    gen: "callable",
) -> FilteredQuotient:
    """Run the closure at working_degree and working_degree - 1; compare."""
    ech = _close_and_echelonize(ctx, arity, gen(working_degree), working_degree)
    prev_deg = max(working_degree - 1, 0)
    prev = _close_and_echelonize(ctx, arity, gen(prev_deg), prev_deg)
    pivots = _pivots_by_degree(ech)
    prev_pivots = _pivots_by_degree(prev)
    dims, stab = [], []
    for d in range(degree + 1):
        dims.append(len(_power_basis(ctx, arity, d)) - len(pivots.get(d, set())))
        stab.append(
            all(pivots.get(k, set()) == prev_pivots.get(k, set()) for k in range(d + 1))
        )
    return FilteredQuotient(
        arity=arity,
        degree=degree,
        working_degree=working_degree,
        echelon=ech,
        pivots_by_degree=pivots,
        graded_dims=dims,
        stabilized=stab,
        _ctx=ctx,
    )


def link_quotient(
    ctx: PowerContext,
    beta: BraidWord,
    degree: int,
    slack: int = 0,
    variant: str = "mu-top",
) -> FilteredQuotient:
    """Quotient of the braided power by the closure relation family."""
    if degree < 1 or slack < 0:
        raise ValueError("degree >= 1 and slack >= 0 required")
    wdeg = degree + slack

    def gen(d: int) -> list[dict]:
        return _truncated_rows(relation_generators(ctx, beta, d, variant), d)

    return _assemble(ctx, beta.strands, degree, wdeg, gen)


def mapping_torus_quotient(
    ctx: PowerContext,
    beta: BraidWord,
    degree: int,
    slack: int = 0,
) -> FilteredQuotient:
    """Quotient presenting the mapping torus of the braid automorphism.

    The ambient power has arity n+1: factors 1..n carry the handlebody
    representation, factor n+1 the boundary leg.  For x in the arity-n power
    and y in the ambient power, r = mul(embed(braid_act(beta, x)), y)
    - twisted_opposite_mul(adjoint_embed(x), y) with adjoint_embed the
    coefficient-braided total coaction (its coacting leg is factor n+1).
    """
    if degree < 1 or slack < 0:
        raise ValueError("degree >= 1 and slack >= 0 required")
    n = beta.strands
    wdeg = degree + slack

    def embed(x: TensorElement) -> TensorElement:
        return TensorElement(
            n + 1, {legs + (UNIT_WORD,): c for legs, c in x.items()}
        )

    def gen(d: int) -> list[dict]:
        inner = _power_basis_upto(ctx, n, d)
        ambient = _power_basis_upto(ctx, n + 1, d)
        rels = []
        for x_legs in inner:
            dx = sum(len(w) for w in x_legs)
            x = TensorElement.basis(x_legs)
            acted = embed(ctx.braid_act(beta, x))
            coacted = ctx.braided_total_coaction(x)
            for y_legs in ambient:
                if dx + sum(len(w) for w in y_legs) > d:
                    continue
                y = TensorElement.basis(y_legs)
                r = ctx.mul(acted, y) - ctx.twisted_opposite_mul(coacted, y)
                if r:
                    rels.append(r)
        return _truncated_rows(rels, d)

    return _assemble(ctx, n + 1, degree, wdeg, gen)


# -- coinvariants ----------------------------------------------------------------


def _exact_reduce(ech: Echelon, vec: dict) -> dict:
    """Normal form against the echelon with true field scalars (no unit drift)."""
    out = {k: RationalScalar.coerce(c) for k, c in vec.items() if not _rs_zero(c)}
    while True:
        hits = [k for k in out if k in ech.rows]
        if not hits:
            return out
        lead = max(hits, key=ech.label_key)
        row = ech.rows[lead]
        f = out[lead] * RationalScalar.coerce(row[lead]).inverse()
        for k, c in row.items():
            cur = out.get(k, RationalScalar.zero()) - f * RationalScalar.coerce(c)
            if cur.is_zero:
                out.pop(k, None)
            else:
                out[k] = cur


def _rs_zero(c) -> bool:
    return c.is_zero if isinstance(c, (Laurent, RationalScalar)) else not c


def coinvariants(
    ctx: PowerContext,
    space: int | FilteredQuotient,
    degree: int,
    braided: bool = False,
) -> list[TensorElement]:
    """Basis of x with total coaction x (x) unit, solved exactly up to degree.

    space is an arity (free power) or a FilteredQuotient (solve on the
    quotient basis, conditions reduced modulo the relation span).  The
    braided route replaces the coordinate-ring coaction with the
    coefficient-braided one; the two solves agree on free powers.
    """
    if isinstance(space, FilteredQuotient):
        arity, quot = space.arity, space
    else:
        arity, quot = space, None
    if quot is None:
        basis = _power_basis_upto(ctx, arity, degree)
    else:
        basis = [legs for d in range(degree + 1) for legs in quot.quotient_basis(d)]
    rows: dict[tuple, dict[int, RationalScalar]] = {}

    def add(row_key, col, val):
        if _rs_zero(val):
            return
        rows.setdefault(row_key, {})[col] = (
            rows.get(row_key, {}).get(col, RationalScalar.zero()) + RationalScalar.coerce(val)
        )

    for j, b_legs in enumerate(basis):
        x = TensorElement.basis(b_legs)
        if braided:
            delta = {
                (legs[:-1], legs[-1]): c
                for legs, c in ctx.braided_total_coaction(x).items()
            }
        else:
            delta = dict(ctx.total_coaction(x))
        # delta(x) - x (x) unit, grouped per coacting word
        by_word: dict[Word, dict[Legs, RationalScalar]] = {}
        for (legs, w), c in delta.items():
            by_word.setdefault(w, {})[legs] = (
                by_word.get(w, {}).get(legs, RationalScalar.zero())
                + RationalScalar.coerce(c)
            )
        unit_block = by_word.setdefault(UNIT_WORD, {})
        unit_block[b_legs] = (
            unit_block.get(b_legs, RationalScalar.zero()) - RationalScalar.one()
        )
        for w, vec in by_word.items():
            reduced = _exact_reduce(quot.echelon, vec) if quot else {
                k: v for k, v in vec.items() if not v.is_zero
            }
            for legs, val in reduced.items():
                add((w, legs), j, val)

    if not rows:
        return [TensorElement.basis(b) for b in basis]
    matrix = [
        [rows[rk].get(j, RationalScalar.zero()) for j in range(len(basis))]
        for rk in sorted(rows, key=lambda k: (k[0], _legs_key(k[1])))
    ]
    out = []
    for vec in nullspace_dense(matrix):
        terms: dict[Legs, Laurent] = {}
        scale = _common_denominator(vec)
        for j, c in enumerate(vec):
            if not c.is_zero:
                terms[basis[j]] = (c * scale).to_laurent()
        out.append(TensorElement(arity, terms))
    return out


def _common_denominator(vec: list[RationalScalar]) -> RationalScalar:
    dens = {c.as_pair()[1] for c in vec if not c.is_zero}
    acc = RationalScalar.one()
    for den in dens:
        if den != (1,):
            acc = acc * RationalScalar(den, (1,))
    return acc


# -- classical specialization ------------------------------------------------------


@dataclass(frozen=True)
class PointCount:
    """Finite-field comparison: engine count vs free-group oracle count."""

    prime: int
    braid: BraidWord
    count: int
    oracle_count: int

    @property
    def match(self) -> bool:
        return self.count == self.oracle_count


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % k for k in range(2, int(p**0.5) + 1))


def _sl2_elements(p: int) -> list[tuple[int, int, int, int]]:
    out = []
    for a, b, c, d in itertools.product(range(p), repeat=4):
        if (a * d - b * c) % p == 1:
            out.append((a, b, c, d))
    return out


# commutative polynomials over F_p in the 4n strand-entry variables:
# dict[exponent tuple -> coeff], variable index = 4*strand + generator


def _cpoly_mul(f: dict, g: dict, p: int) -> dict:
    out: dict = {}
    for e1, c1 in f.items():
        for e2, c2 in g.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            out[e] = (out.get(e, 0) + c1 * c2) % p
    return {e: c for e, c in out.items() if c}


def _cpoly_add(f: dict, g: dict, scale: int, p: int) -> dict:
    out = dict(f)
    for e, c in g.items():
        out[e] = (out.get(e, 0) + scale * c) % p
    return {e: c for e, c in out.items() if c}


def _strand_matrix(nvars: int, strand: int) -> list[list[dict]]:
    def var(g: int) -> dict:
        e = [0] * nvars
        e[4 * strand + g] = 1
        return {tuple(e): 1}

    return [[var(0), var(1)], [var(2), var(3)]]


def _adjugate(m: list[list[dict]], p: int) -> list[list[dict]]:
    neg = lambda f: {e: (-c) % p for e, c in f.items()}
    return [[m[1][1], neg(m[0][1])], [neg(m[1][0]), m[0][0]]]


def _mat_mul_cpoly(a, b, p):
    return [
        [
            _cpoly_add(_cpoly_mul(a[i][0], b[0][j], p), _cpoly_mul(a[i][1], b[1][j], p), 1, p)
            for j in range(2)
        ]
        for i in range(2)
    ]


def _braid_substitution(beta: BraidWord, p: int, mirror: bool = False) -> list[list[list[dict]]]:
    """Image of each strand's entry matrix under the v=1 braid action.

    Positive letter at strand i: lower matrix maps to X_i X_{i+1} adj(X_i),
    upper to X_i; the inverse letter mirrors.  Letters apply left to right.
    """
    n = beta.strands
    nvars = 4 * n
    mats = [_strand_matrix(nvars, s) for s in range(n)]
    for idx, sign in beta.letters:
        if mirror:
            sign = -sign
        lo, hi = idx - 1, idx
        a, b = mats[lo], mats[hi]
        if sign > 0:
            mats[lo] = _mat_mul_cpoly(_mat_mul_cpoly(a, b, p), _adjugate(a, p), p)
            mats[hi] = a
        else:
            mats[lo] = b
            mats[hi] = _mat_mul_cpoly(_mat_mul_cpoly(_adjugate(b, p), a, p), b, p)
    return mats


def classical_points(ctx: PowerContext, beta: BraidWord, p: int) -> PointCount:
    """Count common zeros of the v=1 degree-1 relation family over F_p.

    A tensor monomial evaluates at a strand tuple (A_1..A_n) as the product
    of the matrix entries of C A_i, with C the fixed sign matrix ((0,-1),(1,0));
    counts are independent of that unit change of coordinates.  The oracle
    substitutes the braid's free-group automorphism into the tuple directly
    and counts fixed tuples; the two pipelines share no algebra code.
    """
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    n = beta.strands
    if n > 3 or p > 7:
        raise ResourceLimitError(f"instance out of desk scale: strands={n}, p={p}")
    group = _sl2_elements(p)
    if len(group) ** n * 4 * n > _EVAL_BUDGET:
        raise ResourceLimitError(
            f"enumeration budget exceeded: {len(group)}^{n} tuples"
        )

    # engine side: theta(x) - beta_*(x) at v = 1 for the 4n degree-1 monomials;
    # theta is evaluated symbolically, the braid image by the v=1 substitution
    # (specialization is a ring map, so this equals specializing braid_act)
    nvars = 4 * n
    point = SpecPoint.prime_field(p)
    mats = _braid_substitution(beta, p, mirror=ctx.mirror)
    relations: list[list[tuple[int, tuple]]] = []
    for strand in range(n):
        for g in range(4):
            legs = tuple(
                (g,) if s == strand else UNIT_WORD for s in range(n)
            )
            poly: dict = {}
            for t_legs, c in ctx.twist(TensorElement.basis(legs)).items():
                mono: dict = {tuple([0] * nvars): c.specialize(point) % p}
                for s, w in enumerate(t_legs):
                    for gen in w:
                        mono = _cpoly_mul(mono, _strand_matrix(nvars, s)[gen // 2][gen % 2], p)
                poly = _cpoly_add(poly, mono, 1, p)
            poly = _cpoly_add(poly, mats[strand][g // 2][g % 2], -1, p)
            if poly:
                relations.append(sorted(poly.items()))

    sign = [[0, -1], [1, 0]]
    count = 0
    for tup in itertools.product(group, repeat=n):
        vals = []
        for (a, b, c, d) in tup:
            m = [[a, b], [c, d]]
            cm = [
                [(sign[i][0] * m[0][j] + sign[i][1] * m[1][j]) % p for j in range(2)]
                for i in range(2)
            ]
            vals.extend([cm[0][0], cm[0][1], cm[1][0], cm[1][1]])
        ok = True
        for poly in relations:
            acc = 0
            for exps, coeff in poly:
                term = coeff
                for vi, e in enumerate(exps):
                    if e:
                        term = term * pow(vals[vi], e, p) % p
                acc = (acc + term) % p
            if acc:
                ok = False
                break
        if ok:
            count += 1

    oracle = _artin_fixed_count(beta, p, group)
    return PointCount(prime=p, braid=beta, count=count, oracle_count=oracle)


def _artin_words(beta: BraidWord) -> list[tuple[tuple[int, int], ...]]:
    """Free-group image of each generator; letters apply left to right."""
    n = beta.strands
    words: list[tuple[tuple[int, int], ...]] = [((i, 1),) for i in range(n)]

    def sub(word, images):
        out: list[tuple[int, int]] = []
        for idx, e in word:
            piece = images[idx] if e > 0 else tuple((i, -s) for i, s in reversed(images[idx]))
            for item in piece:
                if out and out[-1][0] == item[0] and out[-1][1] == -item[1]:
                    out.pop()
                else:
                    out.append(item)
        return tuple(out)

    for idx, sign in beta.letters:
        lo, hi = idx - 1, idx
        images = [((i, 1),) for i in range(n)]
        if sign > 0:
            images[lo] = ((lo, 1), (hi, 1), (lo, -1))
            images[hi] = ((lo, 1),)
        else:
            images[lo] = ((hi, 1),)
            images[hi] = ((hi, -1), (lo, 1), (hi, 1))
        words = [sub(w, images) for w in words]
    return words


def _artin_fixed_count(beta: BraidWord, p: int, group) -> int:
    words = _artin_words(beta)
    idm = (1, 0, 0, 1)

    def mul(x, y):
        return (
            (x[0] * y[0] + x[1] * y[2]) % p,
            (x[0] * y[1] + x[1] * y[3]) % p,
            (x[2] * y[0] + x[3] * y[2]) % p,
            (x[2] * y[1] + x[3] * y[3]) % p,
        )

    def inv(x):
        return (x[3], (-x[1]) % p, (-x[2]) % p, x[0])

    count = 0
    for tup in itertools.product(group, repeat=len(words)):
        ok = True
        for i, w in enumerate(words):
            acc = idm
            for idx, e in w:
                acc = mul(acc, tup[idx] if e > 0 else inv(tup[idx]))
            if acc != tup[i]:
                ok = False
                break
        if ok:
            count += 1
    return count
