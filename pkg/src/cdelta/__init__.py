"""c-differential spectrum analysis over GF(p^n).

Exhaustive computation of the counts #{x : F(x+a) - c*F(x) = b}, their
per-c spectra and uniformities, and machine-checked comparison against
the closed-form predictions known for power maps (Gold-type exponents,
Dickson preimage sizes, quadratic character sums, APN exponent tables).
"""

from .field import (Field, FieldError, SizeLimitError, build_field,
                    find_primitive_modulus, parse_modulus)
from .functions import (DicksonMap, Family, FamilyError, Monomial, Polynomial,
                        Terms, dickson_eval, dickson_table, evaluate,
                        family_conditions, family_exponent, function_dict,
                        is_permutation, value_table)
from .harness import THEOREM_IDS, VerificationRecord, run_verify
from .predict import (Prediction, cgm_preimage_formula, gcd_closed_form,
                      predict_gold, predict_gold_root_counts,
                      predict_halfgold, predict_hrs_apn, predict_pn3,
                      predict_prior_results, predict_3n3half)
from .spectra import (BudgetError, DistributionReport, SpectrumReport,
                      classify, delta_count, dickson_preimage_distribution,
                      gold_equation_distribution, jacobsthal_sum, sweep,
                      uniformity)

__version__ = "0.1.0"

__all__ = [
    "Field", "FieldError", "SizeLimitError", "build_field",
    "find_primitive_modulus", "parse_modulus",
    "Monomial", "Polynomial", "Terms", "DicksonMap", "Family", "FamilyError",
    "evaluate", "value_table", "dickson_eval", "dickson_table",
    "family_conditions", "family_exponent", "function_dict", "is_permutation",
    "SpectrumReport", "DistributionReport", "BudgetError", "classify",
    "delta_count", "uniformity", "sweep", "gold_equation_distribution",
    "dickson_preimage_distribution", "jacobsthal_sum",
    "Prediction", "gcd_closed_form", "predict_gold",
    "predict_gold_root_counts", "predict_pn3", "predict_halfgold",
    "predict_3n3half", "predict_prior_results", "cgm_preimage_formula",
    "predict_hrs_apn",
    "run_verify", "VerificationRecord", "THEOREM_IDS",
]
