"""Division with remainder on noncommutative polynomials, and interreduction.

Reduction is total (tails included) and deterministic: always rewrite the
order-largest reducible monomial, choose the lowest divisor index, then the
leftmost occurrence of its leading word.  Every call returns a certificate
``input == sum(coeff * left * divisor * right) + remainder`` that holds
bit-exactly, with ``deg(left) + deg(divisor) + deg(right) <= deg(input)``
for every quotient term (the order is graded).

Two subword matchers implement the same contract: a naive scan (reference)
and an Aho-Corasick automaton (default); tests run them differentially.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple

from .algebra import (AlgebraError, Monomial, NcPoly, Quiver, split_factor,
                      subword_positions)
from .ordering import OrderSpec


@dataclass(frozen=True)
class QuotientTerm:
    coefficient: Fraction
    left: Monomial
    divisor: int
    right: Monomial


@dataclass(frozen=True)
class ReductionCertificate:
    """Outcome of a division: quotient terms plus a fully reduced remainder."""

    quotients: Tuple[QuotientTerm, ...]
    remainder: NcPoly

    def reconstruct(self, divisors: Sequence[NcPoly]) -> NcPoly:
        """Evaluate sum(coeff*left*divisor*right) + remainder exactly."""
        acc = self.remainder
        q = acc.quiver
        for t in self.quotients:
            piece = NcPoly(q, {t.left: t.coefficient}) * divisors[t.divisor]
            piece = piece * NcPoly(q, {t.right: Fraction(1)})
            acc = acc + piece
        return acc


class SubwordIndex:
    """Aho-Corasick matcher for a fixed list of leading monomials.

    Patterns with empty words (vertex idempotents) are matched by vertex;
    a pattern with a t power only matches monomials carrying at least it.
    """

    def __init__(self, patterns: Sequence[Monomial]):
        self.patterns = list(patterns)
        self._by_vertex: List[Tuple[int, Monomial]] = []
        worded = []
        for i, p in enumerate(self.patterns):
            if p.word:
                worded.append((i, p))
            else:
                self._by_vertex.append((i, p))
        # trie over arrow names
        self._goto: List[dict] = [{}]
        self._fail: List[int] = [0]
        self._out: List[List[Tuple[int, int, int]]] = [[]]  # (index, wordlen, tpow)
        for i, p in worded:
            node = 0
            for a in p.word:
                nxt = self._goto[node].get(a)
                if nxt is None:
                    self._goto.append({})
                    self._fail.append(0)
                    self._out.append([])
                    nxt = len(self._goto) - 1
                    self._goto[node][a] = nxt
                node = nxt
            self._out[node].append((i, len(p.word), p.tpow))
        queue = deque()
        for child in self._goto[0].values():
            queue.append(child)
        while queue:
            node = queue.popleft()
            for a, child in self._goto[node].items():
                queue.append(child)
                f = self._fail[node]
                while f and a not in self._goto[f]:
                    f = self._fail[f]
                f = self._goto[f].get(a, 0)
                if f == child:
                    f = 0
                self._fail[child] = f
                self._out[child] = self._out[child] + self._out[f]

    # automaton walk, reused by the forbidden-subword counter
    root = 0

    def step(self, node: int, arrow: str) -> int:
        goto = self._goto
        while node and arrow not in goto[node]:
            node = self._fail[node]
        return goto[node].get(arrow, 0)

    def is_terminal(self, node: int) -> bool:
        return bool(self._out[node])

    def dead_vertices(self):
        """Vertices whose idempotent is a pattern (t-free)."""
        return {p.vertex for _, p in self._by_vertex if p.tpow == 0}

    def matches(self, m: Monomial):
        """All divisor occurrences in m as (divisor index, start position)."""
        for i, p in self._by_vertex:
            if p.tpow <= m.tpow:
                for pos in subword_positions(m, p):
                    yield i, pos
        node = 0
        for end, a in enumerate(m.word, start=1):
            while node and a not in self._goto[node]:
                node = self._fail[node]
            node = self._goto[node].get(a, 0)
            for i, wlen, tpow in self._out[node]:
                if tpow <= m.tpow:
                    yield i, end - wlen

    def find(self, m: Monomial) -> Optional[Tuple[int, int]]:
        """The match minimizing (divisor index, position), or None."""
        best = None
        for hit in self.matches(m):
            if best is None or hit < best:
                best = hit
        return best


class NaiveIndex:
    """Reference matcher: scan divisors in index order, leftmost occurrence."""

    def __init__(self, patterns: Sequence[Monomial]):
        self.patterns = list(patterns)

    def find(self, m: Monomial) -> Optional[Tuple[int, int]]:
        for i, p in enumerate(self.patterns):
            if p.tpow > m.tpow:
                continue
            for pos in subword_positions(m, p):
                return i, pos
        return None

    def matches(self, m: Monomial):
        for i, p in enumerate(self.patterns):
            if p.tpow > m.tpow:
                continue
            for pos in subword_positions(m, p):
                yield i, pos


def _make_index(patterns, matcher: str):
    if matcher == "automaton":
        return SubwordIndex(patterns)
    if matcher == "naive":
        return NaiveIndex(patterns)
    raise ValueError(f"unknown matcher {matcher!r}")


def normal_form(f: NcPoly, divisors: Sequence[NcPoly], order: OrderSpec,
                *, matcher: str = "automaton") -> ReductionCertificate:
    """Totally reduce f modulo the divisor list.

    The remainder contains no leading word of any divisor as a factor,
    anywhere.  Divisors need not be monic; quotient coefficients absorb
    the leading coefficients.
    """
    divisors = list(divisors)
    leads = []
    for g in divisors:
        if not isinstance(g, NcPoly) or g.quiver != f.quiver:
            raise AlgebraError("divisor does not belong to the same algebra")
        if not g:
            raise AlgebraError("zero divisor")
        m = order.leading_monomial(g)
        leads.append((m, g.coefficient(m)))
    index = _make_index([m for m, _ in leads], matcher)

    work = dict(f.terms())
    remainder: dict = {}
    quotients: List[QuotientTerm] = []
    key = order.key
    while work:
        m = max(work, key=key)
        c = work.pop(m)
        hit = index.find(m)
        if hit is None:
            remainder[m] = c
            continue
        i, pos = hit
        lead, lc = leads[i]
        left, right = split_factor(m, lead, pos)
        coeff = c / lc
        quotients.append(QuotientTerm(coeff, left, i, right))
        for u, a in divisors[i].terms():
            if u is lead or u == lead:
                continue  # cancels m exactly
            p = left * u
            p = p * right if p is not None else None
            if p is None:
                continue
            s = work.get(p, Fraction(0)) - coeff * a
            if s:
                work[p] = s
            else:
                work.pop(p, None)
    return ReductionCertificate(tuple(quotients), NcPoly(f.quiver, remainder))


def interreduce(polys: Iterable[NcPoly], order: OrderSpec,
                *, track: bool = False):
    """Reduce a set against itself until no element rewrites another.

    Output elements are monic, mutually irreducible (no monomial of one
    contains another's leading word), span the same ideal, and come sorted
    by the order of their leading monomials.  With ``track=True`` also
    returns, per output element, quotient terms expressing it as a
    combination of the *input* elements.
    """
    items: List[NcPoly] = []
    combos: List[Tuple[QuotientTerm, ...]] = []
    for k, p in enumerate(polys):
        if not p:
            raise AlgebraError("zero element in interreduction input")
        lc = order.leading_coefficient(p)
        items.append(p * (1 / lc))
        combos.append(scale_combo(1 / lc, identity_combo(p.quiver, k)))

    changed = True
    while changed:
        changed = False
        idx = sorted(range(len(items)), key=lambda i: order.key(order.leading_monomial(items[i])))
        items = [items[i] for i in idx]
        combos = [combos[i] for i in idx]
        for i in range(len(items)):
            rest = items[:i] + items[i + 1:]
            if not rest:
                continue
            cert = normal_form(items[i], rest, order)
            r = cert.remainder
            if r == items[i]:
                continue
            changed = True
            used = combos[:i] + combos[i + 1:]
            combo = combos[i]
            for t in cert.quotients:
                combo = add_combos(combo, conjugate_combo(
                    -t.coefficient, t.left, used[t.divisor], t.right))
            if r:
                lc = order.leading_coefficient(r)
                items[i] = r * (1 / lc)
                combos[i] = scale_combo(1 / lc, combo)
            else:
                del items[i]
                del combos[i]
            break
    # listed by leading-monomial degree, greatest first within a degree
    idx = sorted(range(len(items)),
                 key=lambda i: order.key(order.leading_monomial(items[i])),
                 reverse=True)
    idx.sort(key=lambda i: order.leading_monomial(items[i]).degree)
    items = [items[i] for i in idx]
    combos = [combos[i] for i in idx]
    if track:
        return items, combos
    return items


# -- quotient-term combinations over a fixed generator list -----------------
# A "combo" is a tuple of QuotientTerm whose divisor field indexes a list of
# reference polynomials; evaluating it yields the represented element.

def identity_combo(quiver: Quiver, index: int) -> Tuple[QuotientTerm, ...]:
    """Terms summing to 1 * p_index * 1 (Peirce pieces over the vertices)."""
    one = Fraction(1)
    return tuple(QuotientTerm(one, quiver.idempotent(v), index, quiver.idempotent(w))
                 for v in quiver.vertices for w in quiver.vertices)


def scale_combo(c: Fraction, combo) -> Tuple[QuotientTerm, ...]:
    if not c:
        return ()
    return tuple(QuotientTerm(t.coefficient * c, t.left, t.divisor, t.right)
                 for t in combo)


def conjugate_combo(c: Fraction, left: Monomial, combo, right: Monomial):
    """Terms for c * left * (combo) * right, dropping annihilated pieces."""
    out = []
    for t in combo:
        l = left * t.left
        if l is None:
            continue
        r = t.right * right
        if r is None:
            continue
        out.append(QuotientTerm(c * t.coefficient, l, t.divisor, r))
    return tuple(out)


def add_combos(*combos) -> Tuple[QuotientTerm, ...]:
    merged: dict = {}
    for combo in combos:
        for t in combo:
            k = (t.left, t.divisor, t.right)
            s = merged.get(k, Fraction(0)) + t.coefficient
            if s:
                merged[k] = s
            else:
                del merged[k]
    return tuple(QuotientTerm(c, l, i, r) for (l, i, r), c in merged.items())


def evaluate_combo(combo, reference: Sequence[NcPoly], quiver: Quiver) -> NcPoly:
    acc = quiver.zero()
    for t in combo:
        piece = NcPoly(quiver, {t.left: t.coefficient}) * reference[t.divisor]
        piece = piece * NcPoly(quiver, {t.right: Fraction(1)})
        acc = acc + piece
    return acc
