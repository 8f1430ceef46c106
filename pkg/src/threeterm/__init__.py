"""Three-term Eisenstein polynomials over local fields.

Exact, precision-tracked arithmetic for ramification invariants of
Eisenstein polynomials, the reduction of degree-p^k extensions with two
indices of inseparability to a canonical three-term form, the enumeration of
all such forms, and the Galois criterion for them.
"""

from .classify_galois import (ClassificationRequest, GaloisVerdict, SplittingFieldDescr,
                              count_standard_forms, enumerate_standard_forms, is_galois,
                              splitting_field)
from .eisenstein import (EisensteinPoly, InsepProfile, eis_validate, indices, l_equiv,
                         phi_j, phi_LK, ram_break, rho, tilde_indices)
from .errors import *  # noqa: F401,F403
from .ext_arith import LElem, charpoly, l_mul, minpoly_uniformizer, mul_matrix, norm, pi_L
from .local_field import (INF, BelowPrecision, KElem, LocalField, k_add, k_inv, k_make,
                          k_mul, k_neg, k_val, teich_digits, teich_lift)
from .reduce import (ReductionTrace, StandardForm, normalize_constant, one_standard,
                     perturb_predict, predict_two_index, reduce_step, reduce_to_standard)
from .serialize import (FIXTURES, field_from_json, fixture, fixture_path, load_field, load_poly,
                        poly_from_json, poly_to_json, standard_form_from_json,
                        standard_form_to_json)
from .residue_field import (AdditiveMapAnalysis, ResidueField, RFElem, coset_reps,
                            psi_bar_eval, rf_is_nth_power, rf_make, rf_pk_root)

__version__ = "0.1.0"
