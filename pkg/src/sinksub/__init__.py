"""Nim-sequences of subtraction games under the sink and wall conventions,
with closed-form periods and block constructions for additive sets
``{m, m + delta, 2m + delta}``."""
from .additive import (
    AdditiveParams, Case, UnsupportedDelta, WrongCase, block_indices, build_block,
    build_period_word_case2, candidate_word, candidate_word_case1, oracle_prefix_word,
    period_formula, period_length, product_structure, product_word, reduce_params,
)
from .explorer import ScanRow, duality_report, scan_additive
from .nimcore import Convention, GrundySequence, SubtractionSet, grundy_sequence, mex
from .period import HorizonExhausted, PeriodInfo, detect_period, minimal_rotation_equivalent
from .render import render_family
from .verifier import (
    AuditFailure, AuditRecord, MexViolation, audit_tables, check_block_structure,
    check_lemma_identities, verify_mex_consistency,
)
from .words import Factor, PeriodWord

__version__ = "0.1.0"
