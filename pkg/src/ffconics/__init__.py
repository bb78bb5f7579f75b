"""ffconics: solution counts for quadratic curves over finite fields.

Builds explicit models of F_{p^n}, enumerates the solutions of the
hyperbola, parabola, circle and mixed-term conic by brute force, and
checks the enumerated counts against exact closed-form predictors.
"""
from .curves import (
    CurveEquation,
    SolutionSet,
    char2_zero_locus_count,
    count_solutions,
    diagonal_to_circle,
    enumerate_solutions,
    evaluate,
    hyperbola_param,
    mixed_reduce,
    solve_unit_trinomial,
)
from .field import FieldCtx, FieldElement, PrimePower, diagonal_coeff_int, make_field
from .formulas import (
    Prediction,
    char2_growth_delta,
    corollary_even_degree,
    pow2_mod3,
    predict_circle,
    predict_hyperbola,
    predict_mixed,
    predict_parabola,
    sin_sign,
)
from .polys import PolyOverFp, is_irreducible, smallest_irreducible

__version__ = "0.1.0"

__all__ = [
    "CurveEquation",
    "FieldCtx",
    "FieldElement",
    "PolyOverFp",
    "Prediction",
    "PrimePower",
    "SolutionSet",
    "char2_growth_delta",
    "char2_zero_locus_count",
    "corollary_even_degree",
    "count_solutions",
    "diagonal_coeff_int",
    "diagonal_to_circle",
    "enumerate_solutions",
    "evaluate",
    "hyperbola_param",
    "is_irreducible",
    "make_field",
    "mixed_reduce",
    "pow2_mod3",
    "predict_circle",
    "predict_hyperbola",
    "predict_mixed",
    "predict_parabola",
    "sin_sign",
    "smallest_irreducible",
    "solve_unit_trinomial",
]
