"""Filtration analysis of ungraded quotients: homogenization, the general
PBW decision procedure, associated-graded and Rees presentations, Hilbert
functions, and the quadratic Koszulity criterion.

An ungraded quotient A = R/<F> carries the filtration induced by path
length.  Its associated graded algebra is presented by the top homogeneous
parts of a Groebner basis of <F>, and its Rees algebra by their
homogenizations with respect to a central degree-1 variable t.  The
general PBW property asks whether the top parts of F alone already present
the associated graded algebra; it is decided here by comparing the ideal
of top parts of F against the top parts of a completed basis, entirely
inside the base algebra.

All verdicts are explicit about truncation: a degree bound that could hide
a low-degree consequence never produces a definite answer.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

from .algebra import (AlgebraError, IdealPresentation, Monomial, NcPoly,
                      Quiver, ZeroPolynomialError, iter_paths)
from .completion import (GroebnerCheck, PairBudgetExceeded, TruncatedGB,
                         UnitIdealError, complete, is_groebner)
from .ordering import OrderSpec
from .reduction import NaiveIndex, SubwordIndex, normal_form


# -- homogenization ----------------------------------------------------------

def homogenize(f: NcPoly) -> NcPoly:
    """Pad each term of a t-free polynomial with the t power reaching its top degree.

    The result is homogeneous of degree ``f.degree()`` in the mixed
    gradation (t is central of degree 1).
    """
    if not f:
        raise ZeroPolynomialError("cannot homogenize the zero polynomial")
    if not f.is_tpow_free():
        raise AlgebraError("polynomial already carries t powers")
    p = f.degree()
    return NcPoly(f.quiver, {m.with_tpow(p - m.degree): c for m, c in f.terms()})


def dehomogenize(f: NcPoly) -> NcPoly:
    """Substitute t = 1: strip t powers and merge colliding monomials."""
    return NcPoly(f.quiver, [(m.word_part(), c) for m, c in f.terms()])


# -- graded presentations ----------------------------------------------------

@dataclass(frozen=True)
class GradedPresentation:
    """A graded quotient presentation: R/<relations> or R[t]/<relations>.

    ``kind`` records what the presentation describes ("associated-graded"
    or "rees"); Rees relations live in the central extension and are
    homogeneous in the mixed gradation.
    """

    quiver: Quiver
    relations: Tuple[NcPoly, ...]
    kind: str
    central_extension: bool = False

    def __post_init__(self):
        for r in self.relations:
            if not r.is_homogeneous() or not r:
                raise AlgebraError("presentation relations must be homogeneous and nonzero")
            if not self.central_extension and not r.is_tpow_free():
                raise AlgebraError("base-algebra relations must be t-free")


# -- Hilbert function --------------------------------------------------------

def count_normal_words(quiver: Quiver, forbidden: Sequence[Monomial],
                       bound: int) -> List[int]:
    """Per-degree counts of paths avoiding every forbidden word as a factor.

    This is the Hilbert function of the monomial quotient by the forbidden
    words, computed by dynamic programming over the subword automaton.
    (:func:`normal_monomials` is the naive reference enumeration.)
    """
    for p in forbidden:
        if p.tpow:
            raise AlgebraError("forbidden words must be t-free")
    index = SubwordIndex(list(forbidden))
    dead = index.dead_vertices()
    counts = [0] * (bound + 1)
    counts[0] = sum(1 for v in quiver.vertices if v not in dead)
    by_source: dict = {}
    for a in quiver.arrows:
        if a.source not in dead and a.target not in dead:
            by_source.setdefault(a.source, []).append(a)
    state = {(v, index.root): 1 for v in quiver.vertices if v not in dead}
    for d in range(1, bound + 1):
        nxt: dict = {}
        for (v, node), cnt in state.items():
            for a in by_source.get(v, ()):
                n2 = index.step(node, a.name)
                if index.is_terminal(n2):
                    continue
                k = (a.target, n2)
                nxt[k] = nxt.get(k, 0) + cnt
        state = nxt
        counts[d] = sum(state.values())
    return counts


def normal_monomials(quiver: Quiver, forbidden: Sequence[Monomial],
                     degree: int) -> List[Monomial]:
    """All degree-d paths containing no forbidden word, by direct enumeration."""
    index = NaiveIndex(list(forbidden))
    return [m for m in iter_paths(quiver, degree) if index.find(m) is None]


def hilbert_function(gb: TruncatedGB, bound: int) -> List[int]:
    """Graded dimensions of the quotient by the basis' leading-word ideal.

    When the basis is complete this is the Hilbert function of the
    associated graded algebra; when truncated, the entries are certified
    only up to the basis bound.
    """
    return count_normal_words(gb.quiver, gb.leading_monomials(), bound)


# -- relation classification -------------------------------------------------

@dataclass(frozen=True)
class RelationClassification:
    """Shape of a generating set with respect to the grading filtration.

    ``spans_lower_filtration`` is true when some nonzero combination of the
    generators drops below the top degree (either a generator of lower
    degree, or top parts that are linearly dependent).
    """

    top_degree: int
    uniform_top_degree: bool
    homogeneous: bool
    spans_lower_filtration: bool


def _span_rank(polys: Sequence[NcPoly], order: OrderSpec) -> int:
    pivots: dict = {}
    for p in polys:
        row = dict(p.terms())
        while row:
            m = max(row, key=order.key)
            pivot = pivots.get(m)
            if pivot is None:
                break
            c = row[m]
            for u, a in pivot.items():
                s = row.get(u, Fraction(0)) - c * a
                if s:
                    row[u] = s
                else:
                    row.pop(u, None)
        if row:
            m = max(row, key=order.key)
            lc = row[m]
            pivots[m] = {u: a / lc for u, a in row.items()}
    return len(pivots)


def classify_relations(presentation: IdealPresentation) -> RelationClassification:
    """Degree shape of the generators: top degree, uniformity, homogeneity,
    and whether their span meets the next-lower filtration level."""
    gens = presentation.generators
    order = OrderSpec(presentation.quiver.generator_names())
    n = max(g.degree() for g in gens)
    uniform = all(g.degree() == n for g in gens)
    homogeneous = all(g.is_homogeneous() for g in gens)
    tops = [g.leading_homogeneous() for g in gens if g.degree() == n]
    spans_lower = (not uniform) or _span_rank(gens, order) > _span_rank(tops, order)
    return RelationClassification(
        top_degree=n, uniform_top_degree=uniform, homogeneous=homogeneous,
        spans_lower_filtration=spans_lower)


# -- the PBW decision --------------------------------------------------------

@dataclass(frozen=True)
class PbwReport:
    """Outcome of the general PBW check for a presented quotient.

    ``verdict`` is "holds", "fails", or "undecided" (bound too small or
    budget exhausted; see ``diagnostics``).  ``witnesses`` lists, on
    failure, basis elements whose top part does not reduce to zero over
    the completed ideal of generator top parts, with the nonzero (and
    necessarily homogeneous) remainder.
    """

    verdict: str
    gb: TruncatedGB
    lh_gb: TruncatedGB
    witnesses: Tuple[Tuple[NcPoly, NcPoly], ...]
    assoc_graded: GradedPresentation
    rees: GradedPresentation
    hilbert: Tuple[int, ...]
    diagnostics: Optional[str] = None


def pbw_check(presentation: Union[IdealPresentation, Sequence[NcPoly]],
              order: OrderSpec, bound: int,
              max_pairs: int = 100000) -> PbwReport:
    """Decide whether the presented quotient has the general PBW property.

    Procedure: complete the generators, complete their top homogeneous
    parts, then reduce each basis element's top part modulo the latter.
    The property holds iff every remainder vanishes; a nonzero remainder
    within certified degrees is a definite failure witness even when a
    completion was truncated.  The report always carries the
    associated-graded presentation (top parts of the basis), the Rees
    presentation (their homogenizations), and the Hilbert table of the
    associated graded algebra up to the bound.
    """
    if not isinstance(presentation, IdealPresentation):
        presentation = IdealPresentation(presentation[0].quiver, presentation)
    quiver = presentation.quiver
    gb = complete(presentation, order, bound, max_pairs, on_budget="truncate")
    if gb.spans_unit_ideal:
        raise UnitIdealError("the generators present the unit ideal")
    lh_inputs = [g.leading_homogeneous() for g in presentation.generators]
    lh_gb = complete(lh_inputs, order, bound, max_pairs, on_budget="truncate")
    if lh_gb.spans_unit_ideal:
        raise UnitIdealError("the top parts of the generators present the unit ideal")

    witnesses = []
    for g in gb.elements:
        top = g.leading_homogeneous()
        r = normal_form(top, lh_gb.elements, order).remainder
        if r:
            witnesses.append((g, r))

    out_of_budget = gb.budget_exhausted or lh_gb.budget_exhausted
    diagnostics = None
    if out_of_budget:
        verdict = "undecided"
        diagnostics = "ambiguity budget exhausted; nothing is certified"
    elif witnesses:
        verdict = "fails"
    elif gb.status == "complete" and lh_gb.status == "complete":
        verdict = "holds"
    else:
        verdict = "undecided"
        which = [name for name, res in (("ideal", gb), ("top-part ideal", lh_gb))
                 if res.status == "truncated"]
        diagnostics = (f"completion of the {' and '.join(which)} was truncated at "
                       f"degree {bound}; raise the bound for a definite verdict")
    if out_of_budget:
        witnesses = []  # uncertified, do not present as evidence

    assoc = GradedPresentation(
        quiver, tuple(g.leading_homogeneous() for g in gb.elements),
        kind="associated-graded")
    rees = GradedPresentation(
        quiver, tuple(homogenize(g) for g in gb.elements),
        kind="rees", central_extension=True)
    hilbert = tuple(hilbert_function(gb, bound))
    return PbwReport(verdict=verdict, gb=gb, lh_gb=lh_gb,
                     witnesses=tuple(witnesses), assoc_graded=assoc,
                     rees=rees, hilbert=hilbert, diagnostics=diagnostics)


# -- consistency triad -------------------------------------------------------

@dataclass(frozen=True)
class TriadReport:
    """Groebner verdicts for a basis, its top parts, and its homogenization.

    For a complete basis all three must pass; ``consistent`` going False on
    one is an internal-consistency failure.  On an incomplete input the
    original and homogenized checks fail together at the same superposition
    word, while the top-part set may still confluence on its own (it
    generates a smaller ideal), so an inconsistent triad also serves as a
    completeness alarm.  Each failed check carries its offending ambiguity.
    """

    original: GroebnerCheck
    top_graded: GroebnerCheck
    homogenized: GroebnerCheck

    @property
    def consistent(self) -> bool:
        return self.original.ok == self.top_graded.ok == self.homogenized.ok


def check_groebner_triad(basis: Union[TruncatedGB, Sequence[NcPoly]],
                         order: Optional[OrderSpec] = None,
                         bound: Optional[int] = None) -> TriadReport:
    """Run the diamond check on a basis and its two graded avatars.

    The top-part check runs in the base algebra; the homogenized check runs
    in the central extension under the t-extended ordering.
    """
    if isinstance(basis, TruncatedGB):
        elements = basis.elements
        order = order or basis.order
        bound = bound if bound is not None else basis.bound
    else:
        elements = tuple(basis)
        if order is None or bound is None:
            raise ValueError("order and bound are required for a raw element list")
    original = is_groebner(elements, order, bound)
    top = is_groebner([g.leading_homogeneous() for g in elements], order, bound)
    homog = is_groebner([homogenize(g) for g in elements], order, bound)
    return TriadReport(original=original, top_graded=top, homogenized=homog)


# -- Koszulity by quadratic bases --------------------------------------------

@dataclass(frozen=True)
class KoszulReport:
    """Verdict of the quadratic-basis Koszulity criterion.

    "koszul-by-gb": a complete basis within the quadratic filtration level
    certifies that both the associated graded algebra and the Rees algebra
    are Koszul.  "inconclusive": some basis element exceeds degree 2, and
    the criterion (sufficient, not necessary) does not apply.
    "not-applicable": truncated below certainty at this bound.
    """

    verdict: str
    gb: TruncatedGB


def koszul_quadratic_criterion(presentation: Union[IdealPresentation, Sequence[NcPoly]],
                               order: OrderSpec, bound: int,
                               max_pairs: int = 100000) -> KoszulReport:
    gb = complete(presentation, order, bound, max_pairs, on_budget="truncate")
    if gb.spans_unit_ideal:
        raise UnitIdealError("the generators present the unit ideal")
    if gb.budget_exhausted:
        return KoszulReport("not-applicable", gb)
    if any(g.degree() > 2 for g in gb.elements):
        # definite even when truncated: low-degree elements of the reduced
        # basis are stable under raising the bound
        return KoszulReport("inconclusive", gb)
    if gb.status != "complete":
        return KoszulReport("not-applicable", gb)
    return KoszulReport("koszul-by-gb", gb)
