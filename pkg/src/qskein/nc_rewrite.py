"""Free noncommutative polynomials over the Laurent scalars and reduction to
normal form against a fixed terminating rewrite system.

A word is a tuple of generator indices into the system's ordered alphabet;
the monomial order is degree-lexicographic (length first, then letters).
Every rule maps a leading word to a polynomial whose words are strictly
smaller, so reduction terminates.  One reduction step acts at the leftmost
position carrying any redex and, among the rules applicable there, uses the
one with the largest leading word.  Reducing the zero polynomial returns the
zero polynomial.  Confluence is not completed symbolically; shipped rule sets
are validated empirically by the randomized probe below.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from random import Random
from typing import Iterable, Iterator

from .scalar_ring import Laurent

Word = tuple[int, ...]

UNIT_WORD: Word = ()


class NcPoly:
    """Finite Laurent-linear combination of words; no zero coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: dict[Word, Laurent] | None = None):
        self._terms = {w: c for w, c in (terms or {}).items() if c}

    @classmethod
    def zero(cls) -> "NcPoly":
        return cls()

    @classmethod
    def one(cls) -> "NcPoly":
        return cls({UNIT_WORD: Laurent.one()})

    @classmethod
    def monomial(cls, word: Word, coeff: Laurent | None = None) -> "NcPoly":
        return cls({tuple(word): coeff if coeff is not None else Laurent.one()})

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[Word, Laurent]]) -> "NcPoly":
        data: dict[Word, Laurent] = {}
        for w, c in pairs:
            data[w] = data.get(w, Laurent.zero()) + c
        return cls(data)

    def __add__(self, other: "NcPoly") -> "NcPoly":
        data = dict(self._terms)
        for w, c in other._terms.items():
            data[w] = data.get(w, Laurent.zero()) + c
        return NcPoly(data)

    def __sub__(self, other: "NcPoly") -> "NcPoly":
        data = dict(self._terms)
        for w, c in other._terms.items():
            data[w] = data.get(w, Laurent.zero()) - c
        return NcPoly(data)

    def __neg__(self) -> "NcPoly":
        return NcPoly({w: -c for w, c in self._terms.items()})

    def scale(self, s: Laurent) -> "NcPoly":
        if not s:
            return NcPoly()
        return NcPoly({w: c * s for w, c in self._terms.items()})

    def free_mul(self, other: "NcPoly") -> "NcPoly":
        """Concatenation product in the free algebra (no reduction)."""
        data: dict[Word, Laurent] = {}
        for w1, c1 in self._terms.items():
            for w2, c2 in other._terms.items():
                w = w1 + w2
                prod = c1 * c2
                data[w] = data.get(w, Laurent.zero()) + prod
        return NcPoly(data)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, NcPoly) and self._terms == other._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def items(self) -> Iterator[tuple[Word, Laurent]]:
        return iter(self._terms.items())

    def terms(self) -> dict[Word, Laurent]:
        return dict(self._terms)

    def coeff(self, word: Word) -> Laurent:
        return self._terms.get(tuple(word), Laurent.zero())

    def degree(self) -> int:
        return max((len(w) for w in self._terms), default=-1)

    def map_coeffs(self, fn) -> "NcPoly":
        return NcPoly({w: fn(c) for w, c in self._terms.items()})

    # -- text format --------------------------------------------------------

    def render(self, names: tuple[str, ...]) -> str:
        if not self._terms:
            return "0"
        chunks = []
        for w in sorted(self._terms, key=lambda u: (len(u), u), reverse=True):
            scalar = self._terms[w].render()
            if len(self._terms[w].terms()) > 1:
                scalar = f"({scalar})"
            word = ".".join(names[g] for g in w) if w else "1"
            chunks.append(f"{scalar} * {word}")
        return " + ".join(chunks)

    @classmethod
    def parse(cls, text: str, names: tuple[str, ...]) -> "NcPoly":
        text = text.strip()
        if text == "0":
            return cls.zero()
        index = {n: i for i, n in enumerate(names)}
        pairs = []
        # Split on '+' at paren depth zero so parenthesized scalars survive.
        chunks, depth, cur = [], 0, []
        for ch in text:
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
            if ch == "+" and depth == 0:
                chunks.append("".join(cur))
                cur = []
            else:
                cur.append(ch)
        chunks.append("".join(cur))
        for k, chunk in enumerate(chunks):
            if "*" not in chunk:
                raise ValueError(f"term {k}: missing ' * ' separator in {chunk.strip()!r}")
            scalar_text, _, word_text = chunk.rpartition("*")
            scalar_text, word_text = scalar_text.strip(), word_text.strip()
            if scalar_text.startswith("(") and scalar_text.endswith(")"):
                scalar_text = scalar_text[1:-1]
            word_text = word_text.strip()
            if word_text == "1":
                word: Word = UNIT_WORD
            else:
                try:
                    word = tuple(index[n] for n in word_text.split("."))
                except KeyError as exc:
                    raise ValueError(f"term {k}: unknown generator {exc.args[0]!r}") from exc
            pairs.append((word, Laurent.parse(scalar_text)))
        return cls.from_pairs(pairs)

    def __repr__(self) -> str:
        return f"NcPoly({dict(self._terms)!r})"


def deg_lex_key(word: Word) -> tuple[int, Word]:
    return (len(word), word)


@dataclass(frozen=True)
class ProbeWitness:
    poly: NcPoly
    first: NcPoly
    second: NcPoly


@dataclass(frozen=True)
class ProbeReport:
    degree: int
    trials: int
    mismatches: tuple[ProbeWitness, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return not self.mismatches


class RewriteSystem:
    """Ordered alphabet plus a terminating rule list (leading word -> poly)."""

    def __init__(
        self,
        names: tuple[str, ...],
        rules: Iterable[tuple[Word, NcPoly]],
        check_decreasing: bool = True,
    ):
        self.names = tuple(names)
        self.rules = tuple((tuple(lead), rhs) for lead, rhs in rules)
        if check_decreasing:
            self.validate()
        self._by_first: dict[int, list[tuple[Word, NcPoly]]] = {}
        for lead, rhs in self.rules:
            self._by_first.setdefault(lead[0], []).append((lead, rhs))
        self._nf_cache: dict[Word, NcPoly] = {}
        self._mul_cache: dict[tuple[Word, Word], NcPoly] = {}

    def validate(self) -> None:
        for lead, rhs in self.rules:
            if not lead:
                raise ValueError("empty leading word")
            for w in rhs.terms():
                if deg_lex_key(w) >= deg_lex_key(lead):
                    raise ValueError(
                        f"rule for {lead} is not strictly decreasing at {w}"
                    )

    # -- single-step machinery ------------------------------------------------

    def word(self, text: str) -> Word:
        if text == "1":
            return UNIT_WORD
        index = {n: i for i, n in enumerate(self.names)}
        return tuple(index[ch] for ch in text.split("."))

    def redexes(self, w: Word) -> list[tuple[int, Word, NcPoly]]:
        out = []
        for i, g in enumerate(w):
            for lead, rhs in self._by_first.get(g, ()):
                if w[i : i + len(lead)] == lead:
                    out.append((i, lead, rhs))
        return out

    def _leftmost_redex(self, w: Word) -> tuple[int, Word, NcPoly] | None:
        for i, g in enumerate(w):
            best = None
            for lead, rhs in self._by_first.get(g, ()):
                if w[i : i + len(lead)] == lead:
                    if best is None or deg_lex_key(lead) > deg_lex_key(best[0]):
                        best = (lead, rhs)
            if best is not None:
                return (i, best[0], best[1])
        return None

    def is_normal(self, w: Word) -> bool:
        return self._leftmost_redex(w) is None

    # -- reduction -------------------------------------------------------------

    def nf_word(self, w: Word) -> NcPoly:
        cached = self._nf_cache.get(w)
        if cached is not None:
            return cached
        out: dict[Word, Laurent] = {}
        stack: list[tuple[Word, Laurent]] = [(w, Laurent.one())]
        while stack:
            u, c = stack.pop()
            hit = self._nf_cache.get(u)
            if hit is not None:
                for nw, nc in hit.items():
                    out[nw] = out.get(nw, Laurent.zero()) + c * nc
                continue
            m = self._leftmost_redex(u)
            if m is None:
                out[u] = out.get(u, Laurent.zero()) + c
                continue
            i, lead, rhs = m
            for rw, rc in rhs.items():
                stack.append((u[:i] + rw + u[i + len(lead) :], c * rc))
        result = NcPoly(out)
        self._nf_cache[w] = result
        return result

    def normal_form(self, p: NcPoly) -> NcPoly:
        out = NcPoly.zero()
        for w, c in p.items():
            out = out + self.nf_word(w).scale(c)
        return out

    def mul(self, p: NcPoly, q: NcPoly) -> NcPoly:
        """Product reduced to normal form, memoized on word pairs."""
        out = NcPoly.zero()
        for w1, c1 in p.items():
            for w2, c2 in q.items():
                key = (w1, w2)
                prod = self._mul_cache.get(key)
                if prod is None:
                    prod = self.nf_word(w1 + w2)
                    self._mul_cache[key] = prod
                out = out + prod.scale(c1 * c2)
        return out

    # -- graded bases ------------------------------------------------------------

    def graded_basis(self, d: int) -> list[Word]:
        """All normal words of length exactly d, in lexicographic order."""
        leads = [lead for lead, _ in self.rules]
        out: list[Word] = []

        def extend(w: Word) -> None:
            if len(w) == d:
                out.append(w)
                return
            for g in range(len(self.names)):
                w2 = w + (g,)
                if any(
                    len(L) <= len(w2) and w2[-len(L) :] == L for L in leads
                ):
                    continue
                extend(w2)

        extend(UNIT_WORD)
        return out

    def filtered_basis(self, d: int) -> list[Word]:
        out: list[Word] = []
        for k in range(d + 1):
            out.extend(self.graded_basis(k))
        return out

    # -- randomized confluence probe -----------------------------------------

    def _random_poly(self, rng: Random, degree: int) -> NcPoly:
        pairs = []
        for _ in range(rng.randint(1, 3)):
            w = tuple(
                rng.randrange(len(self.names)) for _ in range(rng.randint(0, degree))
            )
            coeff = Laurent({rng.randint(-4, 4): rng.choice([-2, -1, 1, 2])})
            pairs.append((w, coeff))
        return NcPoly.from_pairs(pairs)

    def _reduce_random(self, p: NcPoly, rng: Random) -> NcPoly:
        terms = p.terms()
        while True:
            sites = []
            for w in terms:
                for i, lead, rhs in self.redexes(w):
                    sites.append((w, i, lead, rhs))
            if not sites:
                return NcPoly(terms)
            w, i, lead, rhs = sites[rng.randrange(len(sites))]
            c = terms.pop(w)
            for rw, rc in rhs.items():
                nw = w[:i] + rw + w[i + len(lead) :]
                terms[nw] = terms.get(nw, Laurent.zero()) + c * rc
            terms = {u: cc for u, cc in terms.items() if cc}

    def confluence_probe(self, degree: int, trials: int, seed: int = 0) -> ProbeReport:
        """Reduce random polynomials under two independent randomized
        strategies and report any normal-form disagreement."""
        rng = Random(seed)
        mismatches = []
        for _ in range(trials):
            p = self._random_poly(rng, degree)
            r1 = self._reduce_random(p, Random(rng.getrandbits(32)))
            r2 = self._reduce_random(p, Random(rng.getrandbits(32)))
            if r1 != r2:
                mismatches.append(ProbeWitness(p, r1, r2))
        return ProbeReport(degree, trials, tuple(mismatches))
