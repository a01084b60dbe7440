"""Exact linear algebra helpers.

Dense Gaussian elimination over the rational-function field backs the small
convolution and coinvariant solves.  The fraction-free echelon keeps rows as
sparse Laurent vectors with per-row content stripping, so the large quotient
eliminations never leave the Laurent ring; its ranks agree with rational
elimination because content factors are units of the field.
"""

from __future__ import annotations

from typing import Callable, Hashable, Iterable

from .scalar_ring import Laurent, RationalScalar, _pdiv_exact, _pgcd

# -- dense elimination over RationalScalar -----------------------------------


def solve_dense(a: list[list[RationalScalar]], b: list[RationalScalar]) -> list[RationalScalar]:
    """Solve a square system exactly; raises ValueError when singular."""
    n = len(a)
    m = [row[:] + [b[i]] for i, row in enumerate(a)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col]), None)
        if piv is None:
            raise ValueError("singular system")
        m[col], m[piv] = m[piv], m[col]
        inv = m[col][col].inverse()
        m[col] = [x * inv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return [m[i][n] for i in range(n)]


def nullspace_dense(a: list[list[RationalScalar]]) -> list[list[RationalScalar]]:
    """Basis of the right kernel {x : a @ x = 0}, one vector per free column."""
    if not a:
        return []
    rows, cols = len(a), len(a[0])
    m = [row[:] for row in a]
    pivots: list[tuple[int, int]] = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = m[r][c].inverse()
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append((r, c))
        r += 1
        if r == rows:
            break
    pivot_cols = {c for _, c in pivots}
    basis = []
    for free in range(cols):
        if free in pivot_cols:
            continue
        vec = [RationalScalar.zero()] * cols
        vec[free] = RationalScalar.one()
        for pr, pc in pivots:
            vec[pc] = -m[pr][free]
        basis.append(vec)
    return basis


def rank_dense(a: list[list[RationalScalar]]) -> int:
    if not a:
        return 0
    cols = len(a[0])
    return cols - len(nullspace_dense(a))


def invert_dense(a: list[list[RationalScalar]]) -> list[list[RationalScalar]]:
    """Exact inverse of a square matrix; raises ValueError when singular."""
    n = len(a)
    zero, one = RationalScalar.zero(), RationalScalar.one()
    m = [row[:] + [one if i == j else zero for j in range(n)] for i, row in enumerate(a)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col]), None)
        if piv is None:
            raise ValueError("singular system")
        m[col], m[piv] = m[piv], m[col]
        inv = m[col][col].inverse()
        m[col] = [x * inv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return [row[n:] for row in m]


# -- Laurent matrices (exact, small) ------------------------------------------


def mat_mul(a: list[list[Laurent]], b: list[list[Laurent]]) -> list[list[Laurent]]:
    n, k, m = len(a), len(b), len(b[0])
    out = [[Laurent.zero() for _ in range(m)] for _ in range(n)]
    for i in range(n):
        for t in range(k):
            if not a[i][t]:
                continue
            for j in range(m):
                out[i][j] = out[i][j] + a[i][t] * b[t][j]
    return out


def mat_kron(a: list[list[Laurent]], b: list[list[Laurent]]) -> list[list[Laurent]]:
    na, nb = len(a), len(b)
    ma, mb = len(a[0]), len(b[0])
    return [
        [a[i // nb][j // mb] * b[i % nb][j % mb] for j in range(ma * mb)]
        for i in range(na * nb)
    ]


def mat_identity(n: int) -> list[list[Laurent]]:
    return [
        [Laurent.one() if i == j else Laurent.zero() for j in range(n)]
        for i in range(n)
    ]


# -- fraction-free echelon over Laurent rows -----------------------------------


def _dense(c: Laurent) -> tuple[int, tuple[int, ...]]:
    mn = c.min_exp()
    out = [0] * (c.max_exp() - mn + 1)
    for e, x in c.terms().items():
        out[e - mn] = x
    return mn, tuple(out)


def _strip_content(row: dict[Hashable, Laurent]) -> dict[Hashable, Laurent]:
    if not row:
        return row
    coeffs = list(row.values())
    g = 0
    for c in coeffs:
        g = _gcd_int(g, c.int_content())
    shift = min(c.min_exp() for c in coeffs)
    if g > 1 or shift:
        row = {k: c.div_int_exact(g).times_v(-shift) for k, c in row.items()}
    # polynomial content: divide out the gcd of the entries as Z[v]-polynomials
    # (a unit of the function field), keeping elimination entries small
    pg = None
    for c in row.values():
        pg = _dense(c)[1] if pg is None else _pgcd(pg, _dense(c)[1])
        if len(pg) <= 1:
            pg = None
            break
    if pg:
        row = {
            k: Laurent(dict(enumerate(_pdiv_exact(_dense(c)[1], pg), start=_dense(c)[0])))
            for k, c in row.items()
        }
    return row


def _gcd_int(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


class Echelon:
    """Row space over the rational-function field held as Laurent rows.

    Rows are sparse label-to-Laurent maps; the pivot of a row is its largest
    label under the supplied key.  Cross-multiplication elimination with
    content stripping keeps entries in the Laurent ring; the stripped factors
    are field units, so the span and pivot set match rational elimination.
    """

    def __init__(self, label_key: Callable[[Hashable], tuple]):
        self.label_key = label_key
        self.rows: dict[Hashable, dict[Hashable, Laurent]] = {}

    def _lead(self, vec: dict[Hashable, Laurent]) -> Hashable:
        return max(vec, key=self.label_key)

    def reduce(self, vec: dict[Hashable, Laurent]) -> dict[Hashable, Laurent]:
        """Eliminate pivot hits from the top until the lead is pivot-free."""
        vec = {k: c for k, c in vec.items() if c}
        while vec:
            lead = self._lead(vec)
            row = self.rows.get(lead)
            if row is None:
                break
            vec = self._eliminate(vec, lead, row)
        return _strip_content(vec)

    def reduce_full(self, vec: dict[Hashable, Laurent]) -> dict[Hashable, Laurent]:
        """Eliminate every pivot-labelled coordinate (full normal form)."""
        vec = {k: c for k, c in vec.items() if c}
        while True:
            hits = [k for k in vec if k in self.rows]
            if not hits:
                return _strip_content(vec)
            lead = max(hits, key=self.label_key)
            vec = self._eliminate(vec, lead, self.rows[lead])

    def _eliminate(
        self,
        vec: dict[Hashable, Laurent],
        lead: Hashable,
        row: dict[Hashable, Laurent],
    ) -> dict[Hashable, Laurent]:
        a, b = row[lead], vec[lead]
        out = {k: c * a for k, c in vec.items()}
        for k, c in row.items():
            out[k] = out.get(k, Laurent.zero()) - b * c
        return _strip_content({k: c for k, c in out.items() if c})

    def insert(self, vec: dict[Hashable, Laurent]) -> bool:
        """Reduce and adjoin; returns True when the row enlarges the span."""
        rem = self.reduce(vec)
        if not rem:
            return False
        self.rows[self._lead(rem)] = rem
        return True

    def contains(self, vec: dict[Hashable, Laurent]) -> bool:
        return not self.reduce(vec)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def pivots(self) -> set[Hashable]:
        return set(self.rows)
