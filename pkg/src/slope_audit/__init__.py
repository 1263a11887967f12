"""Exact root analysis of the secant-slope polynomial family of the Fermat curve."""
from .errors import AuditError, DomainError, ParameterError, PreconditionError, ToleranceError
from .numerics import Interval, binomial_coefficient, interval_arith, nth_root_interval
from .polynomial import Polynomial, derivative, evaluate, scale_to_integer, square_free_part
from .roots import (
    descartes_negative,
    descartes_positive,
    isolate_real_roots,
    newton_dugua_check,
    rational_root_test,
    refine_root,
    sign_variations,
    sturm_real_root_count,
    vieta_product,
)
from .family import (
    FamilyParams,
    FermatTriple,
    alpha,
    build_family_by_expansion,
    build_family_closed_form,
    fermat_residual,
    geometric_slope_d,
    integer_family_poly,
)
from .report import AuditReport, ClaimVerdict, parse_report, render_report
from .audit import (
    audit_grid,
    audit_instance,
    audit_triple,
    brute_force_search,
    diagonal_check,
    reduce_exponent,
)

__version__ = "0.1.0"
