"""Exact zeta polynomials for weight-enumerator-like polynomials, formal
weight enumerators in the rational invariant ring of G8, and the
verification suite around them: functional equation signs, root modulus
checks, exact root multiplicities, derivative divisibility and the
sharpened minimum-index bound."""

from .algebra import (HomogeneousPoly, Matrix2, QuadRational, Rational,
                      SingularMatrixError, UniPoly, apply_diff_operator,
                      exact_divide, solve_linear, substitute_linear)
from .analysis import (BoundReport, DivisibilityReport, RhReport,
                       RootFindingError, RootSet, check_divisibility,
                       check_operator_substitution, check_rh,
                       derivative_closed_form, exact_sqrt2_multiplicities,
                       find_roots, mallows_sloane_bound, verify_root_pairing)
from .files import (EnumeratorFormatError, GoldenTableEntry,
                    load_golden_table, read_enumerator_file,
                    write_enumerator_file)
from .fwe import (W8, W12, W24_PRIME, FweBasisElement, FweCheck,
                  FweCombination, build_extremal, check_invariance_g8,
                  enumerate_basis, extremal_min_index, generator,
                  is_formal_weight_enumerator, min_weight_index,
                  symmetry_checks)
from .zeta import (EnumeratorContext, ZetaPolynomial, ZetaSolveSystem,
                   compute_zeta, functional_equation_sign, genus,
                   macwilliams_transform, zeta_oracle)

__version__ = "0.1.0"
