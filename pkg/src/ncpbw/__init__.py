"""Noncommutative Groebner bases over free and path algebras, with
degree-bounded completion and PBW/associated-graded/Rees analysis."""

from .algebra import (AlgebraError, Arrow, IdealPresentation, Monomial,
                      NcPoly, Quiver, ZeroPolynomialError, iter_paths,
                      split_factor, subword_positions, vertex_at)
from .completion import (Ambiguity, GroebnerCheck, PairBudgetExceeded,
                         TruncatedGB, UnitIdealError, complete,
                         find_ambiguities, is_groebner, s_polynomial)
from .ordering import OrderSpec
from .parsing import (ExpressionError, InputError, JobSpec, format_monomial,
                      format_polynomial, parse_input, parse_polynomial,
                      render_input)
from .pbw import (GradedPresentation, KoszulReport, PbwReport,
                  RelationClassification, TriadReport, check_groebner_triad,
                  classify_relations, count_normal_words, dehomogenize,
                  hilbert_function, homogenize, koszul_quadratic_criterion,
                  normal_monomials, pbw_check)
from .reduction import (NaiveIndex, QuotientTerm, ReductionCertificate,
                        SubwordIndex, evaluate_combo, interreduce, normal_form)

__version__ = "0.1.0"

__all__ = [
    "AlgebraError", "Ambiguity", "Arrow", "ExpressionError", "GradedPresentation",
    "GroebnerCheck", "IdealPresentation", "InputError", "JobSpec", "KoszulReport",
    "Monomial", "NaiveIndex", "NcPoly", "OrderSpec", "PairBudgetExceeded",
    "PbwReport", "QuotientTerm", "Quiver", "ReductionCertificate",
    "RelationClassification", "SubwordIndex", "TriadReport", "TruncatedGB",
    "UnitIdealError", "ZeroPolynomialError", "check_groebner_triad",
    "classify_relations", "complete", "count_normal_words", "dehomogenize",
    "evaluate_combo", "find_ambiguities", "format_monomial", "format_polynomial",
    "hilbert_function", "homogenize", "interreduce", "is_groebner", "iter_paths",
    "koszul_quadratic_criterion", "normal_form", "normal_monomials",
    "parse_input", "parse_polynomial", "pbw_check", "render_input",
    "s_polynomial", "split_factor", "subword_positions", "vertex_at",
]
