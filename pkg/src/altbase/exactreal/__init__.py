"""Exact real algebraic arithmetic: number fields, signs, floors, roots."""
from altbase.exactreal.algebraic import RealAlgebraic, count_sign_variation_roots, real_roots
from altbase.exactreal.complexroots import ComplexRoot, complex_roots, roots_of
from altbase.exactreal.field import (
    DEFAULT_DEGREE_CAP,
    FieldElement,
    NumberFieldContext,
    extend_context,
    field_arith,
    floor_of,
    make_context,
    minimal_polynomial,
    sign_of,
)

__all__ = [
    "ComplexRoot",
    "DEFAULT_DEGREE_CAP",
    "FieldElement",
    "NumberFieldContext",
    "RealAlgebraic",
    "complex_roots",
    "count_sign_variation_roots",
    "extend_context",
    "field_arith",
    "floor_of",
    "make_context",
    "minimal_polynomial",
    "real_roots",
    "roots_of",
    "sign_of",
]
