from .polymethod import (
    DET_POLY_MAX_ORDER,
    PF_POLY_MAX_ORDER,
    WitnessNotFound,
    WitnessResult,
    coeff_check_pf,
    coeff_check_prop1,
    colex_sorted,
    det_polynomial,
    pf_closed_form,
    pf_polynomial,
    witness_search_alt,
    witness_search_ws,
)
from .polynomial import Polynomial
from .report import TrialOutcome, VerificationReport
from .suites import (
    SUITES,
    hypothesis_guard,
    counterexample_spaces,
    verify_all,
    verify_cor3,
    verify_counterexamples_f2,
    verify_erdos_gallai,
    verify_thm1,
    verify_thm2,
    verify_thm4,
    verify_thm5,
)
