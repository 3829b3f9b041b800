"""Algebraic consequences of eventually periodic expansions: polynomial relations, conjugate bounds, circle geometry and sharpness instances."""
from altbase.spectra.circles import CirclesResult, Curve, Tangency, circles, find_tangencies, tangency_note, to_csv, to_svg
from altbase.spectra.conjugates import (
    BoundReport,
    ConjugateEntry,
    Verdict,
    conjugate_bound_check,
    eq2_residual,
    relative_minimal_polynomial,
    rotated,
    subfield_basis,
    with_point,
)
from altbase.spectra.eq1 import (
    AlgebraicityCertificate,
    PeriodicPolynomial,
    algebraicity_certificate,
    eq1_polynomial,
    leading_coefficients,
)
from altbase.spectra.sharpness import ALTERNATING, Seed, SharpnessInstance, build_sharpness, eisenstein_check
from altbase.spectra.table1 import kappa, table1_bound, upsilon
from altbase.spectra.zbound import z_bound, z_bound_oracle

__all__ = [
    "ALTERNATING",
    "AlgebraicityCertificate",
    "BoundReport",
    "CirclesResult",
    "ConjugateEntry",
    "Curve",
    "PeriodicPolynomial",
    "Seed",
    "SharpnessInstance",
    "Tangency",
    "Verdict",
    "algebraicity_certificate",
    "build_sharpness",
    "circles",
    "conjugate_bound_check",
    "eisenstein_check",
    "eq1_polynomial",
    "eq2_residual",
    "find_tangencies",
    "kappa",
    "leading_coefficients",
    "relative_minimal_polynomial",
    "rotated",
    "subfield_basis",
    "table1_bound",
    "tangency_note",
    "to_csv",
    "to_svg",
    "upsilon",
    "with_point",
    "z_bound",
    "z_bound_oracle",
]
