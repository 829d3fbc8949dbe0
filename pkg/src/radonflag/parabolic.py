"""Condition (*), the parabolic elements ``v[alpha, I]`` and their factorizations.

``condition_star(w, I, J)`` holds when ``w`` carries the simple roots indexed
by ``J`` bijectively onto those indexed by ``I``.  For such ``w`` the
orbit projections between ``G/P_J`` and ``G/P_I`` are affine-space
fibrations of dimension ``l(w)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .errors import AlphaInI, ConditionStarViolated, FactorizationNotFound, RankMismatch
from .root_system import RootSystem, Weight, subset
from .weyl import WeylElem, act, enumerate_group, longest_element


@dataclass(frozen=True)
class FactorizationStep:
    """One factor ``v[alpha, inner]`` of a Brink-Howlett factorization."""

    alpha: int
    inner: frozenset[int]
    factor: WeylElem

    @property
    def levi(self) -> frozenset[int]:
        return self.inner | {self.alpha}

    @property
    def image(self) -> frozenset[int]:
        """The subset ``factor * inner``."""
        return image_of(self.factor, self.inner)


def image_of(w: WeylElem, J: Iterable[int]) -> frozenset[int]:
    """``w J`` for a subset ``J`` that ``w`` maps into simple roots."""
    out = set()
    for j in J:
        i = w.simple_image(j)
        if i is None:
            raise ConditionStarViolated(f"{w} does not send alpha_{j} to a simple root")
        out.add(i)
    return frozenset(out)


def condition_star(w: WeylElem, I: Iterable[int], J: Iterable[int]) -> bool:
    """True iff ``w`` maps the simple roots of ``J`` bijectively onto those of ``I``."""
    I = subset(w.rs, I)
    J = subset(w.rs, J)
    if len(I) != len(J):
        return False
    for j in J:
        i = w.simple_image(j)
        if i is None or i not in I:
            return False
    return True


def _require_star(w, I, J):
    if not condition_star(w, I, J):
        raise ConditionStarViolated(
            f"{w} does not map J={sorted(J)} onto I={sorted(I)}")


def v_elem(rs: RootSystem, alpha: int, I: Iterable[int]) -> WeylElem:
    """``v[alpha, I] = w_0^{I + alpha} w_0^I``."""
    I = subset(rs, I)
    rs._check_index(alpha)
    if alpha in I:
        raise AlphaInI(f"alpha_{alpha} lies in I={sorted(I)}")
    return _v_cached(rs, alpha, I)


@lru_cache(maxsize=4096)
def _v_cached(rs, alpha, I):
    big = longest_element(rs, I | {alpha})
    small = longest_element(rs, I)
    v = big * small
    if v.length != big.length - small.length or not condition_star(v, image_of(v, I), I):
        raise RuntimeError(f"v[{alpha}, {sorted(I)}] failed its length/subset check")
    return v


def _peel(w: WeylElem, I: frozenset, J: frozenset, memo: dict) -> list | None:
    """Canonical factorization of ``w`` (mapping ``J`` onto ``I``), or None."""
    key = (w, J)
    if key in memo:
        return memo[key]
    result = None
    if w.is_identity():
        result = [] if I == J else None
    else:
        rs = w.rs
        lw = w.length
        for alpha in sorted(rs.indices - J):
            v = v_elem(rs, alpha, J)
            rest = w * v.inverse()
            if rest.length != lw - v.length:
                continue
            K = image_of(v, J)
            if not condition_star(rest, I, K):
                continue
            head = _peel(rest, I, K, memo)
            if head is not None:
                result = head + [FactorizationStep(alpha, J, v)]
                break
    memo[key] = result
    return result


def bh_factorize(w: WeylElem, I: Iterable[int], J: Iterable[int]) -> list[FactorizationStep]:
    """Brink-Howlett factorization ``w = v[a_1, I_1] ... v[a_r, I_r]``.

    Factors are peeled from the right, trying the smallest admissible
    ``alpha`` first, with backtracking.  The returned steps satisfy
    ``I_{k-1} = v[a_k, I_k] I_k``, ``I_r = J``, ``a_k not in I_k`` and
    ``l(w) = sum l(v[a_k, I_k])``.
    """
    I = subset(w.rs, I)
    J = subset(w.rs, J)
    _require_star(w, I, J)
    steps = _peel(w, I, J, {})
    if steps is None:
        raise FactorizationNotFound(f"no factorization found for {w}, I={sorted(I)}, J={sorted(J)}")
    return steps


def all_factorizations(w: WeylElem, I: Iterable[int],
                       J: Iterable[int]) -> Iterator[list[FactorizationStep]]:
    """Every length-additive factorization of ``w`` (small ranks only)."""
    I = subset(w.rs, I)
    J = subset(w.rs, J)
    _require_star(w, I, J)

    def walk(u, Jc):
        if u.is_identity():
            if Jc == I:
                yield []
            return
        for alpha in sorted(u.rs.indices - Jc):
            v = v_elem(u.rs, alpha, Jc)
            rest = u * v.inverse()
            if rest.length != u.length - v.length:
                continue
            K = image_of(v, Jc)
            if not condition_star(rest, I, K):
                continue
            for head in walk(rest, K):
                yield head + [FactorizationStep(alpha, Jc, v)]

    yield from walk(w, J)


def factor_product(rs: RootSystem, steps: Iterable[FactorizationStep]) -> WeylElem:
    out = WeylElem.identity(rs)
    for st in steps:
        out = out * st.factor
    return out


def fiber_dimension(w: WeylElem, I: Iterable[int], J: Iterable[int]) -> int:
    """Dimension ``l(w)`` of the fibres of the orbit projections."""
    I = subset(w.rs, I)
    J = subset(w.rs, J)
    _require_star(w, I, J)
    for beta in w.rs.roots_in(J):
        if not w.rs.is_positive_root(w.act_root(beta)):
            raise RuntimeError(f"{w} sends the J-root {beta} to a negative root")
    return w.length


def det_twist(w: WeylElem, I: Iterable[int], J: Iterable[int]) -> Weight:
    """The weight ``w rho - rho`` of the relative canonical twist."""
    rs = w.rs
    I = subset(rs, I)
    J = subset(rs, J)
    _require_star(w, I, J)
    twist = act(w, rs.rho) - rs.rho
    if not twist.is_integral() or any(twist[i - 1] != 0 for i in I):
        raise RuntimeError(f"det twist {twist} is not a character of P_I")
    winv = w.inverse()
    inverted = Weight.zero(rs.rank)
    for beta in rs.positive_roots:
        if not rs.is_positive_root(winv.act_root(beta)):
            inverted = inverted + rs.root_weight(beta)
    if inverted != -twist:
        raise RuntimeError("rho - w rho differs from the sum of inverted roots")
    return twist


def condition_star_triples(rs: RootSystem, elements: Iterable[WeylElem] | None = None,
                           I: Iterable[int] | None = None, J: Iterable[int] | None = None):
    """Yield every ``(w, I, J)`` with ``w J = I`` (optionally filtered)."""
    if elements is None:
        elements = enumerate_group(rs)
    want_I = None if I is None else subset(rs, I)
    want_J = None if J is None else subset(rs, J)
    n = rs.rank
    for w in elements:
        if w.rs != rs:
            raise RankMismatch("element from another root system")
        hits = {j: w.simple_image(j) for j in range(1, n + 1)}
        movable = sorted(j for j, i in hits.items() if i is not None)
        for mask in range(1 << len(movable)):
            JJ = frozenset(movable[k] for k in range(len(movable)) if mask >> k & 1)
            II = frozenset(hits[j] for j in JJ)
            if want_J is not None and JJ != want_J:
                continue
            if want_I is not None and II != want_I:
                continue
            yield w, II, JJ
