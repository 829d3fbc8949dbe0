"""Weight-parameter predicates and transports.

A parameter ``lam`` for ``G/P_I`` lives in ``(h/h_I)^*``, i.e. it pairs to
zero with every simple coroot in ``I``.  The Radon transform along the
orbit of ``w`` (with ``w J = I``) and twist ``mu`` moves it to the
parameter ``w^{-1} * lam + w^{-1} mu`` on ``G/P_J``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import ConditionStarViolated, MuNotCharacter, NotInSubspace
from .parabolic import condition_star
from .root_system import RootSystem, Weight, pair, rho_nil, subset
from .weyl import WeylElem, act, star_act


@dataclass(frozen=True)
class TdoLabel:
    """Parameter ``param`` of a TDO on ``G/P_variety``."""

    variety: frozenset[int]
    param: Weight


@dataclass(frozen=True)
class GvmLabel:
    """Label of the generalized Verma module of ``l_levi`` induced from ``p_parabolic``."""

    levi: frozenset[int]
    parabolic: frozenset[int]
    highest_weight: Weight


class PsiVerdict(str, enum.Enum):
    ISO_BY_REGULARITY = "iso_by_regularity"
    ISO_BY_SURJ_CONDITION = "iso_by_surj_condition"
    UNKNOWN = "unknown"


def _is_positive_integer(x: Fraction) -> bool:
    return x.denominator == 1 and x >= 1


def in_h_mod_hI(lam: Weight, I: Iterable[int]) -> bool:
    """Whether ``lam`` vanishes on every simple coroot indexed by ``I``."""
    return all(lam[i - 1] == 0 for i in I)


def _require_subspace(rs, lam, I):
    lam = rs.check_weight(lam)
    I = subset(rs, I)
    if not in_h_mod_hI(lam, I):
        raise NotInSubspace(f"{lam} does not vanish on the coroots of I={sorted(I)}")
    return lam, I


def is_regular(lam: Weight, rs: RootSystem) -> bool:
    shifted = rs.check_weight(lam) - rs.rho
    return all(pair(rs, shifted, b) != 0 for b in rs.positive_roots)


def is_antidominant(lam: Weight, rs: RootSystem, K: Iterable[int] | None = None) -> bool:
    """No pairing of ``lam - rho`` with a positive coroot of ``Delta_K`` is a positive integer.

    ``K`` defaults to all of ``Pi``.  On ``Delta_K`` the shift by ``rho``
    agrees with the shift by ``rho_K``, so one test serves both the global
    and the Levi-restricted notion.
    """
    roots = rs.positive_roots if K is None else rs.roots_in(K)
    shifted = rs.check_weight(lam) - rs.rho
    return not any(_is_positive_integer(pair(rs, shifted, b)) for b in roots)


def is_character(rs: RootSystem, mu: Weight, I: Iterable[int]) -> bool:
    """``mu`` in ``X*(P_I)``: integral with zero ``I``-coordinates."""
    mu = rs.check_weight(mu)
    return mu.is_integral() and in_h_mod_hI(mu, subset(rs, I))


def transport(lam: Weight, w: WeylElem, mu: Weight, I: Iterable[int],
              J: Iterable[int]) -> TdoLabel:
    """Target parameter of the Radon transform ``R^{w, mu}``."""
    rs = w.rs
    lam, I = _require_subspace(rs, lam, I)
    J = subset(rs, J)
    mu = rs.check_weight(mu)
    if not condition_star(w, I, J):
        raise ConditionStarViolated(f"{w} does not map J={sorted(J)} onto I={sorted(I)}")
    if not is_character(rs, mu, I):
        raise MuNotCharacter(f"{mu} is not a character of P_I for I={sorted(I)}")
    winv = w.inverse()
    param = star_act(winv, lam) + act(winv, mu)
    if not in_h_mod_hI(param, J):
        raise RuntimeError(f"transported parameter {param} left (h/h_J)^*")
    return TdoLabel(J, param)


def annihilator_label(lam: Weight, I: Iterable[int], rs: RootSystem) -> GvmLabel:
    """Module whose annihilator cuts out ``U^lam_I``: highest weight ``lam - 2 rho_{n_I}``."""
    lam, I = _require_subspace(rs, lam, I)
    return GvmLabel(rs.indices, I, lam - 2 * rho_nil(rs, I))


def annihilator_partner(lam: Weight, w: WeylElem, I: Iterable[int],
                        J: Iterable[int]) -> Weight:
    """``w^{-1}(lam + rho) - rho``, whose ``p_J`` annihilator equals that of ``lam`` for ``p_I``."""
    rs = w.rs
    lam = rs.check_weight(lam)
    if not condition_star(w, I, J):
        raise ConditionStarViolated(f"{w} does not map J={sorted(J)} onto I={sorted(I)}")
    return act(w.inverse(), lam + rs.rho) - rs.rho


def psi_iso_check(lam: Weight, I: Iterable[int], rs: RootSystem) -> PsiVerdict:
    """Which sufficient condition (if any) makes ``psi^lam`` an isomorphism."""
    lam, I = _require_subspace(rs, lam, I)
    if is_regular(lam, rs):
        return PsiVerdict.ISO_BY_REGULARITY
    inner = set(rs.roots_in(I))
    shifted = lam + rs.rho
    if not any(_is_positive_integer(pair(rs, shifted, b))
               for b in rs.positive_roots if b not in inner):
        return PsiVerdict.ISO_BY_SURJ_CONDITION
    return PsiVerdict.UNKNOWN
