"""Overlap analysis and degree-bounded noncommutative Buchberger completion.

Completion processes ambiguities in increasing superposition degree (FIFO
within a degree), reduces each S-polynomial to normal form, and adjoins
nonzero remainders.  Ambiguities above the degree bound are discarded but
recorded: the result is then marked ``truncated`` and certifies membership
decisions only up to the bound.  With the graded ordering this normal
strategy is complete degree by degree, so everything concluded in degrees
up to the bound stays valid for any larger bound.

Every output element carries quotient terms expressing it over the input
generators, and every input carries a reduction certificate to zero over
the output; together these certify that the ideal is preserved.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

from .algebra import (AlgebraError, IdealPresentation, Monomial, NcPoly,
                      Quiver, subword_positions, vertex_at)
from .ordering import OrderSpec
from .reduction import (QuotientTerm, ReductionCertificate, add_combos,
                        conjugate_combo, identity_combo, interreduce,
                        normal_form, scale_combo)


class UnitIdealError(AlgebraError):
    """The presented ideal is the whole algebra; quotient-level questions are void."""


class PairBudgetExceeded(RuntimeError):
    """Raised when completion runs out of its ambiguity budget.

    Carries the elements computed so far and the number of processed
    ambiguities so callers can report diagnostics.
    """

    def __init__(self, processed: int, elements: Sequence[NcPoly]):
        super().__init__(f"ambiguity budget exhausted after {processed} pairs")
        self.processed = processed
        self.elements = tuple(elements)


@dataclass(frozen=True)
class Ambiguity:
    """A minimal double-reducibility site between two leading words.

    ``word`` is the superposition, factored both ways:
    ``word == left_i * LM(g_i) * right_i == left_j * LM(g_j) * right_j``.
    Overlaps glue a proper suffix of LM(g_i) onto a proper prefix of
    LM(g_j); inclusions embed LM(g_j) inside LM(g_i).
    """

    kind: str
    i: int
    j: int
    word: Monomial
    left_i: Monomial
    right_i: Monomial
    left_j: Monomial
    right_j: Monomial

    @property
    def degree(self) -> int:
        return self.word.degree


@dataclass(frozen=True)
class GroebnerCheck:
    """Outcome of an up-to-bound diamond check."""

    ok: bool
    bound: int
    witness: Optional[Ambiguity] = None
    remainder: Optional[NcPoly] = None


@dataclass(frozen=True)
class TruncatedGB:
    """A (possibly degree-truncated) reduced Groebner basis.

    ``status`` is ``"complete"`` when every ambiguity among the elements was
    resolved, ``"truncated"`` when some above the bound were discarded.
    ``provenance[k]`` expresses ``elements[k]`` over ``inputs``;
    ``input_certificates[k]`` reduces ``inputs[k]`` to zero over
    ``elements``.
    """

    quiver: Quiver
    order: OrderSpec
    bound: int
    elements: Tuple[NcPoly, ...]
    status: str
    spans_unit_ideal: bool
    inputs: Tuple[NcPoly, ...]
    input_certificates: Tuple[ReductionCertificate, ...]
    provenance: Tuple[Tuple[QuotientTerm, ...], ...]
    discarded: int = 0
    budget_exhausted: bool = False

    def leading_monomials(self) -> Tuple[Monomial, ...]:
        return tuple(self.order.leading_monomial(g) for g in self.elements)


def _leading_words(polys: Sequence[NcPoly], order: OrderSpec) -> List[Monomial]:
    lms = []
    for g in polys:
        if not g:
            raise AlgebraError("zero element")
        m = order.leading_monomial(g)
        if m.tpow:
            raise AlgebraError("ambiguity search needs t-free leading monomials")
        lms.append(m)
    return lms


def _pair_ambiguities(lms: Sequence[Monomial], i: int, j: int) -> List[Ambiguity]:
    """All ambiguities of the ordered pair (i, j): overlaps, and inclusions of j in i."""
    q = lms[i].quiver
    wi, wj = lms[i], lms[j]
    out: List[Ambiguity] = []
    ni, nj = len(wi.word), len(wj.word)
    for k in range(1, min(ni, nj)):
        if wi.word[ni - k:] != wj.word[:k]:
            continue
        word = q.monomial(wi.word + wj.word[k:])
        out.append(Ambiguity(
            "overlap", i, j, word,
            left_i=q.idempotent(wi.source), right_i=q.monomial(wj.word[k:]),
            left_j=q.monomial(wi.word[:ni - k]), right_j=q.idempotent(wj.target)))
    if (nj < ni and i != j) or (wi == wj and i < j):
        for pos in subword_positions(wi, wj):
            lword = wi.word[:pos]
            rword = wi.word[pos + nj:]
            out.append(Ambiguity(
                "inclusion", i, j, wi,
                left_i=q.idempotent(wi.source), right_i=q.idempotent(wi.target),
                left_j=q.monomial(lword, None if lword else vertex_at(wi, pos)),
                right_j=q.monomial(rword, None if rword else vertex_at(wi, pos + nj))))
    return out


def _amb_sort_key(a: Ambiguity):
    offset = len(a.left_j.word)
    return (a.degree, a.i, a.j, offset, a.kind)


def find_ambiguities(polys: Sequence[NcPoly], order: OrderSpec,
                     involving: Optional[int] = None) -> List[Ambiguity]:
    """Every overlap and inclusion ambiguity among the given elements.

    Self-pairs are included; equal leading words of distinct elements are
    reported as a degenerate inclusion so that checks stay sound on raw
    input sets.  ``involving`` restricts to ambiguities that mention one
    index (used when a new element joins a basis).
    """
    lms = _leading_words(polys, order)
    out: List[Ambiguity] = []
    n = len(lms)
    if involving is None:
        pairs = itertools.product(range(n), repeat=2)
    else:
        k = involving
        pairs = itertools.chain(((k, j) for j in range(n)),
                                ((i, k) for i in range(n) if i != k))
    for i, j in pairs:
        out.extend(_pair_ambiguities(lms, i, j))
    out.sort(key=_amb_sort_key)
    return out


def s_polynomial(amb: Ambiguity, polys: Sequence[NcPoly], order: OrderSpec) -> NcPoly:
    """The cancellation element of an ambiguity; its superposition terms cancel."""
    gi, gj = polys[amb.i], polys[amb.j]
    q = gi.quiver
    ci = order.leading_coefficient(gi)
    cj = order.leading_coefficient(gj)
    lhs = NcPoly(q, {amb.left_i: 1 / ci}) * gi * NcPoly(q, {amb.right_i: Fraction(1)})
    rhs = NcPoly(q, {amb.left_j: 1 / cj}) * gj * NcPoly(q, {amb.right_j: Fraction(1)})
    return lhs - rhs


def is_groebner(polys: Sequence[NcPoly], order: OrderSpec, bound: int) -> GroebnerCheck:
    """Diamond check: do all S-polynomials of degree <= bound reduce to zero?

    Returns the first failing ambiguity (in the deterministic ambiguity
    order) together with its nonzero normal form.
    """
    polys = list(polys)
    if not polys:
        return GroebnerCheck(True, bound)
    for amb in find_ambiguities(polys, order):
        if amb.degree > bound:
            break
        s = s_polynomial(amb, polys, order)
        if not s:
            continue
        r = normal_form(s, polys, order).remainder
        if r:
            return GroebnerCheck(False, bound, amb, r)
    return GroebnerCheck(True, bound)


def _unit_basis(quiver: Quiver) -> List[NcPoly]:
    return [NcPoly(quiver, {quiver.idempotent(v): Fraction(1)}) for v in quiver.vertices]


def _try_unit_short_circuit(quiver, order, elements, combos):
    """If the unit reduces to zero, the ideal is everything: return its reduced basis."""
    cert = normal_form(quiver.unit(), elements, order)
    if cert.remainder:
        return None
    unit_combo = add_combos(*[
        conjugate_combo(t.coefficient, t.left, combos[t.divisor], t.right)
        for t in cert.quotients])
    new_elements = _unit_basis(quiver)
    new_combos = []
    for v in quiver.vertices:
        ev = quiver.idempotent(v)
        new_combos.append(conjugate_combo(Fraction(1), ev, unit_combo, ev))
    return new_elements, new_combos


def complete(presentation: Union[IdealPresentation, Sequence[NcPoly]],
             order: OrderSpec, bound: int,
             max_pairs: int = 100000, *, on_budget: str = "raise") -> TruncatedGB:
    """Degree-bounded completion of a generating set to a reduced Groebner basis.

    Preconditions: nonzero t-free generators, ``bound`` at least their top
    degree.  Detects the unit ideal (reporting its idempotent basis with
    ``spans_unit_ideal`` set) instead of failing; raises
    :class:`PairBudgetExceeded` when ``max_pairs`` ambiguities were
    processed without exhausting the queue.  With ``on_budget="truncate"``
    the partial basis is finished and returned instead, flagged
    ``budget_exhausted`` (such a basis certifies nothing, not even below
    the bound).
    """
    if on_budget not in ("raise", "truncate"):
        raise ValueError(f"unknown on_budget policy {on_budget!r}")
    if isinstance(presentation, IdealPresentation):
        quiver, inputs = presentation.quiver, presentation.generators
    else:
        inputs = tuple(presentation)
        if not inputs:
            raise AlgebraError("empty generating set")
        quiver = inputs[0].quiver
        IdealPresentation(quiver, inputs)  # runs the validity checks
    order.validate_for(quiver)
    for f in inputs:
        if not f.is_tpow_free():
            raise AlgebraError("generators must not carry t powers")
    top = max(f.degree() for f in inputs)
    if bound < top:
        raise AlgebraError(f"bound {bound} is below the generator degree {top}")

    elements, combos = interreduce(inputs, order, track=True)
    discarded = 0
    out_of_budget = False
    seq = itertools.count()
    heap: list = []

    def push(ambs):
        nonlocal discarded
        for amb in ambs:
            if amb.degree > bound:
                discarded += 1
            else:
                heapq.heappush(heap, (amb.degree, next(seq), amb))

    def finish(elements, combos, unit: bool):
        final, transform = interreduce(elements, order, track=True)
        final_combos = []
        for combo in transform:
            final_combos.append(add_combos(*[
                conjugate_combo(t.coefficient, t.left, combos[t.divisor], t.right)
                for t in combo]))
        certs = tuple(normal_form(f, final, order) for f in inputs)
        return TruncatedGB(
            quiver=quiver, order=order, bound=bound, elements=tuple(final),
            status="truncated" if discarded or out_of_budget else "complete",
            spans_unit_ideal=unit, inputs=inputs,
            input_certificates=certs, provenance=tuple(final_combos),
            discarded=discarded, budget_exhausted=out_of_budget)

    def unit_check():
        if any(order.leading_monomial(g).degree == 0 for g in elements):
            hit = _try_unit_short_circuit(quiver, order, elements, combos)
            if hit is not None:
                return finish(hit[0], hit[1], unit=True)
        return None

    done = unit_check()
    if done is not None:
        return done

    push(find_ambiguities(elements, order))
    processed = 0
    while heap:
        _, _, amb = heapq.heappop(heap)
        processed += 1
        if processed > max_pairs:
            if on_budget == "raise":
                raise PairBudgetExceeded(processed, elements)
            out_of_budget = True
            discarded += 1 + len(heap)
            break
        s = s_polynomial(amb, elements, order)
        if not s:
            continue
        cert = normal_form(s, elements, order)
        r = cert.remainder
        if not r:
            continue
        ci = order.leading_coefficient(elements[amb.i])
        cj = order.leading_coefficient(elements[amb.j])
        s_combo = add_combos(
            conjugate_combo(1 / ci, amb.left_i, combos[amb.i], amb.right_i),
            conjugate_combo(-1 / cj, amb.left_j, combos[amb.j], amb.right_j))
        r_combo = add_combos(s_combo, *[
            conjugate_combo(-t.coefficient, t.left, combos[t.divisor], t.right)
            for t in cert.quotients])
        lc = order.leading_coefficient(r)
        elements.append(r * (1 / lc))
        combos.append(scale_combo(1 / lc, r_combo))
        new_index = len(elements) - 1
        push(find_ambiguities(elements, order, involving=new_index))
        if order.leading_monomial(elements[new_index]).degree == 0:
            done = unit_check()
            if done is not None:
                return done
    return finish(elements, combos, unit=False)
