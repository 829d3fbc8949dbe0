"""Combinatorics and parameter bookkeeping for intertwining functors on partial flag varieties."""

from .errors import (AlphaInI, ConditionStarViolated, FactorizationNotFound, GroupTooLarge,
                     IndexOutOfRange, InvalidCartan, InvalidChain, MuNotCharacter, NotARoot,
                     NotInSubspace, ParseError, RadonFlagError, RankMismatch, UnknownSuite)
from .oracle import Oracle, SuiteResult, verify_all, verify_suite
from .parabolic import (FactorizationStep, all_factorizations, bh_factorize, condition_star,
                        condition_star_triples, det_twist, fiber_dimension, v_elem)
from .parameters import (GvmLabel, PsiVerdict, TdoLabel, annihilator_label, annihilator_partner,
                         in_h_mod_hI, is_antidominant, is_character, is_regular, psi_iso_check,
                         transport)
from .root_system import RootSystem, Weight, build_root_system, cartan_matrix, pair, rho_nil, rho_of
from .theorems import (ChainStep, IntertwinerSpec, Irreducibility, TheoremReport, Verdict,
                       check_equivalence, check_main_theorem2, gvm_irreducible_sufficient,
                       inverse_label, lambda_chain, mu_for_untwisted)
from .weyl import (WeylElem, act, element_from_word, enumerate_group, longest_element,
                   parabolic_subgroup, star_act)

__version__ = "0.1.0"
