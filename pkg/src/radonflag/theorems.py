"""Applicability reports for the equivalence and global-sections theorems.

Nothing here proves anything about categories of D-modules.  The reports
record which combinatorial hypotheses hold and the parameter labels the
theorems speak about.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Sequence

from .errors import ConditionStarViolated, InvalidChain, NotInSubspace
from .parabolic import (FactorizationStep, bh_factorize, condition_star, factor_product,
                        image_of)
from .parameters import TdoLabel, in_h_mod_hI, is_antidominant, is_regular, transport
from .root_system import RootSystem, Weight, subset
from .weyl import WeylElem, act, star_act


class Irreducibility(str, enum.Enum):
    IRREDUCIBLE = "Irreducible"
    UNKNOWN = "Unknown"


class Verdict(str, enum.Enum):
    APPLIES = "Applies"
    INCONCLUSIVE = "Inconclusive"
    FAILS_REGULARITY = "FailsRegularity"
    FAILS_CONDITION_STAR = "FailsConditionStar"


@dataclass(frozen=True)
class IntertwinerSpec:
    """``R^{w, mu}_+`` with its inverse ``R^{w^-1, -w^-1 mu}_!``."""

    w: WeylElem
    mu: Weight
    source: TdoLabel
    target: TdoLabel
    inverse_w: WeylElem
    inverse_mu: Weight


@dataclass(frozen=True)
class ChainStep:
    step: FactorizationStep
    lambda_i: Weight
    eta_i: Weight
    irreducibility: Irreducibility


@dataclass(frozen=True)
class TheoremReport:
    regular: bool
    chain: tuple[ChainStep, ...]
    verdict: Verdict
    conclusion: str | None = field(default=None)


def check_equivalence(lam: Weight, w: WeylElem, mu: Weight, I, J) -> IntertwinerSpec:
    rs = w.rs
    I = subset(rs, I)
    J = subset(rs, J)
    target = transport(lam, w, mu, I, J)
    winv = w.inverse()
    inverse_mu = -act(winv, rs.check_weight(mu))
    return IntertwinerSpec(w, rs.check_weight(mu), TdoLabel(I, rs.check_weight(lam)),
                           target, winv, inverse_mu)


def inverse_label(spec: IntertwinerSpec) -> TdoLabel:
    """Transport the target back along the inverse intertwiner."""
    return transport(spec.target.param, spec.inverse_w, spec.inverse_mu,
                     spec.target.variety, spec.source.variety)


def lambda_chain(lam: Weight, steps: Sequence[FactorizationStep], I) -> list[Weight]:
    """``lam_0 = lam`` and ``lam_k = v[a_k, I_k]^{-1} * lam_{k-1}``."""
    if not steps:
        lam = Weight(lam)
        if not in_h_mod_hI(lam, I):
            raise NotInSubspace(f"{lam} does not vanish on the coroots of I={sorted(I)}")
        return [lam]
    rs = steps[0].factor.rs
    lam = rs.check_weight(lam)
    current = subset(rs, I)
    if not in_h_mod_hI(lam, current):
        raise NotInSubspace(f"{lam} does not vanish on the coroots of I={sorted(current)}")
    out = [lam]
    for k, st in enumerate(steps, 1):
        if st.alpha in st.inner:
            raise InvalidChain(f"step {k}: alpha_{st.alpha} lies in its inner subset")
        try:
            img = image_of(st.factor, st.inner)
        except ConditionStarViolated:
            img = None
        if img != current:
            raise InvalidChain(f"step {k} does not map {sorted(st.inner)} onto {sorted(current)}")
        lam = star_act(st.factor.inverse(), lam)
        if not in_h_mod_hI(lam, st.inner):
            raise NotInSubspace(f"chain weight {lam} left (h/h_I)^* at step {k}")
        out.append(lam)
        current = st.inner
    return out


def gvm_irreducible_sufficient(rs: RootSystem, K, eta: Weight) -> Irreducibility:
    """Antidominance of ``eta`` over ``Delta_K`` implies irreducibility; otherwise unknown."""
    if is_antidominant(eta, rs, K):
        return Irreducibility.IRREDUCIBLE
    return Irreducibility.UNKNOWN


def check_main_theorem2(lam: Weight, w: WeylElem, I, J,
                        steps: Sequence[FactorizationStep] | None = None) -> TheoremReport:
    """Check the hypotheses of the global-sections theorem along a factorization.

    ``steps`` defaults to the canonical factorization from :func:`bh_factorize`;
    any other factorization of ``w`` may be supplied instead.
    """
    rs = w.rs
    lam = rs.check_weight(lam)
    I = subset(rs, I)
    J = subset(rs, J)
    if not in_h_mod_hI(lam, I):
        raise NotInSubspace(f"{lam} does not vanish on the coroots of I={sorted(I)}")
    regular = is_regular(lam, rs)
    if not condition_star(w, I, J):
        return TheoremReport(regular, (), Verdict.FAILS_CONDITION_STAR)

    if steps is None:
        steps = bh_factorize(w, I, J)
    elif factor_product(rs, steps) != w:
        raise InvalidChain("the supplied steps do not multiply to w")
    lams = lambda_chain(lam, steps, I)
    chain = []
    for st, prev, nxt in zip(steps, lams, lams[1:]):
        eta = act(st.factor.inverse(), prev)
        chain.append(ChainStep(st, nxt, eta, gvm_irreducible_sufficient(rs, st.levi, eta)))

    if not regular:
        verdict = Verdict.FAILS_REGULARITY
    elif all(c.irreducibility is Irreducibility.IRREDUCIBLE for c in chain):
        verdict = Verdict.APPLIES
    else:
        verdict = Verdict.INCONCLUSIVE
    conclusion = None
    if verdict is Verdict.APPLIES:
        conclusion = ("I^w_+ : RGamma^lambda_I -> RGamma^(w^-1*lambda)_J o R^w_+ "
                      "and I^w_! are isomorphisms of functors")
    return TheoremReport(regular, tuple(chain), verdict, conclusion)


def mu_for_untwisted(w: WeylElem) -> Weight:
    """The twist ``mu = rho - w rho`` of the untwisted specialization."""
    rs = w.rs
    return rs.rho - act(w, rs.rho)

