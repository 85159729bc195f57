import random

import pytest

from ncpbw import (AlgebraError, IdealPresentation, PairBudgetExceeded,
                   complete, find_ambiguities, hilbert_function, is_groebner,
                   normal_form, parse_polynomial, s_polynomial)
from ncpbw.reduction import evaluate_combo

from oracle import quotient_graded_dims, random_poly


def _polys(quiver, *exprs):
    return [parse_polynomial(s, quiver) for s in exprs]


# -- ambiguity search ---------------------------------------------------------

def test_weyl_has_no_ambiguities(free2, ord2):
    assert find_ambiguities(_polys(free2, "x*y - y*x - 1"), ord2) == []


def test_self_overlap_of_square(free2, ord2):
    ambs = find_ambiguities(_polys(free2, "x*x - y"), ord2)
    assert len(ambs) == 1
    amb = ambs[0]
    assert amb.kind == "overlap" and (amb.i, amb.j) == (0, 0)
    assert amb.word == free2.monomial(["x", "x", "x"])
    lm = free2.monomial(["x", "x"])
    assert amb.left_i * lm * amb.right_i == amb.word
    assert amb.left_j * lm * amb.right_j == amb.word
    assert amb.left_i != amb.left_j


def test_pair_overlap(free2, ord2):
    g = _polys(free2, "x*x - y", "x*y - y*x")
    words = {a.word for a in find_ambiguities(g, ord2)}
    assert free2.monomial(["x", "x", "y"]) in words  # x.x | x.y glued on x
    assert free2.monomial(["x", "x", "x"]) in words


def test_inclusion_ambiguity(free2, ord2):
    g = _polys(free2, "x*y*x - 1", "y - 1")
    ambs = [a for a in find_ambiguities(g, ord2) if a.kind == "inclusion"]
    assert len(ambs) == 1
    amb = ambs[0]
    assert (amb.i, amb.j) == (0, 1)
    assert amb.left_j == free2.monomial(["x"])
    assert amb.right_j == free2.monomial(["x"])


def test_equal_leading_words_give_one_degenerate_inclusion(free2, ord2):
    g = _polys(free2, "x*y - y*x", "x*y - 1")
    ambs = find_ambiguities(g, ord2)
    assert len(ambs) == 1
    assert ambs[0].kind == "inclusion" and (ambs[0].i, ambs[0].j) == (0, 1)


def test_idempotent_inclusions(loop_quiver, loop_order):
    g = [parse_polynomial("a*b - e1", loop_quiver),
         parse_polynomial("e2", loop_quiver)]
    ambs = find_ambiguities(g, loop_order)
    # e2 sits inside a*b at the middle vertex only
    assert [(a.kind, a.i, a.j) for a in ambs] == [("inclusion", 0, 1)]
    assert ambs[0].left_j == loop_quiver.monomial(["a"])


def test_ambiguities_sorted_by_degree_then_indices(free2, ord2):
    g = _polys(free2, "x*x - y", "x*y - y*x")
    ambs = find_ambiguities(g, ord2)
    keys = [(a.degree, a.i, a.j) for a in ambs]
    assert keys == sorted(keys)


# -- S-polynomials ------------------------------------------------------------

def test_s_polynomial_self_overlap(free2, ord2):
    g = _polys(free2, "x*x - y")
    amb = find_ambiguities(g, ord2)[0]
    # (x*x - y)*x - x*(x*x - y) with this orientation
    assert s_polynomial(amb, g, ord2) == parse_polynomial("x*y - y*x", free2)


def test_s_polynomial_pair(free2, ord2):
    g = _polys(free2, "x*x - y", "x*y - y*x")
    amb = [a for a in find_ambiguities(g, ord2)
           if a.word == free2.monomial(["x", "x", "y"])][0]
    assert (amb.i, amb.j) == (0, 1)
    assert s_polynomial(amb, g, ord2) == parse_polynomial("x*y*x - y*y", free2)


def test_s_polynomial_cancels_superposition(free2, ord2):
    rng = random.Random(6)
    for _ in range(40):
        g = [random_poly(rng, free2, 3) for _ in range(rng.randint(1, 3))]
        for amb in find_ambiguities(g, ord2):
            s = s_polynomial(amb, g, ord2)
            if s:
                assert ord2.compare(ord2.leading_monomial(s), amb.word) == -1


# -- completion ---------------------------------------------------------------

def test_weyl_completes_to_itself(free2, ord2):
    gb = complete(_polys(free2, "x*y - y*x - 1"), ord2, 6)
    assert gb.status == "complete"
    assert list(gb.elements) == _polys(free2, "x*y - y*x - 1")


def test_parabola_completion(free2, ord2):
    gb = complete(_polys(free2, "x*x - y"), ord2, 4)
    assert gb.status == "complete"
    assert list(gb.elements) == _polys(free2, "x*x - y", "x*y - y*x")
    # dimensions against the independent linear-algebra referee
    dims = quotient_graded_dims(free2, list(gb.inputs), ord2, 4)
    assert hilbert_function(gb, 4) == dims


def test_sl2_completes_to_inputs(free3, ord3, sl2_relations):
    gb = complete(sl2_relations, ord3, 5)
    assert gb.status == "complete"
    assert set(gb.elements) == set(sl2_relations)


def test_accepts_presentation_object(free2, ord2):
    pres = IdealPresentation(free2, tuple(_polys(free2, "x*x - y")))
    gb = complete(pres, ord2, 4)
    assert gb.status == "complete"


def test_truncation_is_reported(free2, ord2):
    # x*x - x*y rewrites forever: x*y^n*x -> x*y^(n+1), one element per degree
    gen = _polys(free2, "x*x - x*y")
    low = complete(gen, ord2, 4)
    assert low.status == "truncated"
    assert low.discarded > 0
    high = complete(gen, ord2, 6)
    assert len(high.elements) > len(low.elements)
    # everything certified at the low bound stays in the higher run
    assert set(low.elements) <= set(high.elements)


def test_budget_error_carries_partial_state(free2, ord2):
    gen = _polys(free2, "x*x - x*y")
    with pytest.raises(PairBudgetExceeded) as exc:
        complete(gen, ord2, 12, max_pairs=2)
    assert exc.value.elements
    soft = complete(gen, ord2, 12, max_pairs=2, on_budget="truncate")
    assert soft.budget_exhausted and soft.status == "truncated"


def test_bound_below_generators_rejected(free2, ord2):
    with pytest.raises(AlgebraError):
        complete(_polys(free2, "x*x*x - y"), ord2, 2)


def test_unit_ideal_free(free2, ord2):
    gb = complete(_polys(free2, "x", "x - 1"), ord2, 4)
    assert gb.spans_unit_ideal
    assert list(gb.elements) == [free2.unit()]
    assert gb.status == "complete"
    for cert in gb.input_certificates:
        assert not cert.remainder
    for combo, g in zip(gb.provenance, gb.elements):
        assert evaluate_combo(combo, gb.inputs, free2) == g


def test_unit_ideal_path(loop_quiver, loop_order):
    gens = [parse_polynomial("e1", loop_quiver),
            parse_polynomial("e2", loop_quiver)]
    gb = complete(gens, loop_order, 2)
    assert gb.spans_unit_ideal
    assert len(gb.elements) == 2


def test_single_idempotent_is_not_unit(loop_quiver, loop_order):
    gb = complete([parse_polynomial("e1", loop_quiver)], loop_order, 3)
    assert not gb.spans_unit_ideal
    assert gb.status == "complete"
    # killing vertex 1 leaves only the loop-free part at vertex 2
    assert hilbert_function(gb, 3) == [1, 0, 0, 0]


# -- Groebner checking --------------------------------------------------------

def test_is_groebner_examples(free2, ord2):
    assert is_groebner(_polys(free2, "x*y - y*x - 1"), ord2, 10).ok
    res = is_groebner(_polys(free2, "x*x - y"), ord2, 6)
    assert not res.ok
    assert res.witness.word == free2.monomial(["x", "x", "x"])
    assert res.remainder == parse_polynomial("x*y - y*x", free2)
    assert is_groebner([], ord2, 4).ok


def test_completion_passes_diamond_check_beyond_bound(free2, ord2, free3, ord3,
                                                      sl2_relations,
                                                      loop_quiver, loop_order,
                                                      loop_relation):
    cases = [
        (complete(_polys(free2, "x*y - y*x - 1"), ord2, 6), ord2),
        (complete(_polys(free2, "x*x - y"), ord2, 6), ord2),
        (complete(_polys(free2, "x*y - 2*y*x"), ord2, 6), ord2),
        (complete(sl2_relations, ord3, 5), ord3),
        (complete([loop_relation], loop_order, 6), loop_order),
    ]
    for gb, order in cases:
        assert gb.status == "complete"
        assert is_groebner(gb.elements, order, gb.bound + 2).ok
        for f in gb.inputs:
            assert not normal_form(f, gb.elements, order).remainder


def test_ideal_preservation_certificates(free2, ord2):
    rng = random.Random(88)
    for _ in range(15):
        gens = [random_poly(rng, free2, 3) for _ in range(2)]
        gb = complete(gens, ord2, 5, max_pairs=5000, on_budget="truncate")
        if gb.budget_exhausted:
            continue
        for combo, g in zip(gb.provenance, gb.elements):
            assert evaluate_combo(combo, gb.inputs, free2) == g
        for f, cert in zip(gb.inputs, gb.input_certificates):
            assert not cert.remainder
            assert cert.reconstruct(list(gb.elements)) == f


def test_completion_is_deterministic(free3, ord3, sl2_relations):
    a = complete(sl2_relations, ord3, 6)
    b = complete(sl2_relations, ord3, 6)
    assert a == b


def test_random_ideals_against_oracle(free2, ord2):
    rng = random.Random(0xBEEF)
    for _ in range(8):
        gens = [random_poly(rng, free2, 3, max_terms=3, coeff_bound=4)
                for _ in range(2)]
        gb = complete(gens, ord2, 5, max_pairs=20000, on_budget="truncate")
        assert not gb.budget_exhausted
        dims = quotient_graded_dims(free2, gens, ord2, 5)
        assert hilbert_function(gb, 5) == dims
