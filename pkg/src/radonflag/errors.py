"""Exception hierarchy.

Every error carries a machine-readable ``code`` which the command line
prints alongside the message.
"""


class RadonFlagError(Exception):
    code = "error"


class InvalidCartan(RadonFlagError, ValueError):
    code = "invalid_cartan"


class IndexOutOfRange(RadonFlagError, ValueError):
    code = "index_out_of_range"


class NotARoot(RadonFlagError, ValueError):
    code = "not_a_root"


class RankMismatch(RadonFlagError, ValueError):
    code = "rank_mismatch"


class GroupTooLarge(RadonFlagError):
    code = "group_too_large"

    def __init__(self, cap):
        super().__init__(f"Weyl group has more than {cap} elements")
        self.cap = cap


class AlphaInI(RadonFlagError, ValueError):
    code = "alpha_in_I"


class ConditionStarViolated(RadonFlagError, ValueError):
    code = "condition_star_violated"


class FactorizationNotFound(RadonFlagError):
    code = "factorization_not_found"


class NotInSubspace(RadonFlagError, ValueError):
    code = "not_in_subspace"


class MuNotCharacter(RadonFlagError, ValueError):
    code = "mu_not_character"


class InvalidChain(RadonFlagError, ValueError):
    code = "invalid_chain"


class UnknownSuite(RadonFlagError, ValueError):
    code = "unknown_suite"


class ParseError(RadonFlagError, ValueError):
    code = "parse_error"
