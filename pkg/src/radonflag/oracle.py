"""Brute-force verification over small Weyl groups.

The :class:`Oracle` rebuilds everything from the Cartan matrix along a
separate route: positive roots from root strings (not reflection
closure), coroots from a symmetrized bilinear form (not reflection
tracking), group elements as permutations of the full root set, lengths
as inversion counts, and the weight action through pairings with
permuted roots.  The main implementation is only bridged in through
reduced words, and only on the side under test.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Callable

from . import parabolic, parameters, theorems
from .errors import GroupTooLarge, UnknownSuite
from .root_system import RootSystem, Weight, rho_nil, rho_of
from .weyl import act, element_from_word, enumerate_group, star_act

DEFAULT_ORACLE_CAP = 1_000
DENOMINATORS = (1, 2, 3, 5, 7)
NUMERATOR_RANGE = (-20, 20)
# group-law checks per star_action run; exhaustive while |W|^2 fits per weight
STAR_PAIR_BUDGET = 10_000


class Oracle:
    """Independent model of a root system and its Weyl group."""

    def __init__(self, cartan, cap: int = DEFAULT_ORACLE_CAP):
        self.C = [list(map(int, row)) for row in cartan]
        self.n = n = len(self.C)
        self.d = self._symmetrizer()
        self._coroots = {}
        self._longest = {}
        self.positive = self._string_roots()
        self.roots = self.positive + [tuple(-x for x in b) for b in self.positive]
        self.index = {b: k for k, b in enumerate(self.roots)}
        self.npos = len(self.positive)
        self.simple_idx = [self.index[tuple(int(i == k) for k in range(n))] for i in range(n)]
        self.gens = [self._reflection_perm(self.roots[self.simple_idx[i]]) for i in range(n)]
        self.identity = tuple(range(len(self.roots)))
        self.elements = self._closure(range(n), cap)

    # -- roots and forms -------------------------------------------------

    def _symmetrizer(self):
        n, C = self.n, self.C
        d = [None] * n
        for start in range(n):
            if d[start] is not None:
                continue
            d[start] = Fraction(1)
            stack = [start]
            while stack:
                i = stack.pop()
                for j in range(n):
                    if j != i and C[i][j] != 0 and d[j] is None:
                        d[j] = d[i] * C[i][j] / C[j][i]
                        stack.append(j)
        return d

    def form(self, b, g) -> Fraction:
        """``(b, g)`` with ``(alpha_i, alpha_i) = 2 d_i``."""
        return sum((self.d[i] * self.C[i][j] * b[i] * g[j]
                    for i in range(self.n) for j in range(self.n) if b[i] and g[j]),
                   Fraction(0))

    def _string_roots(self):
        n, C = self.n, self.C
        simple = [tuple(int(i == k) for k in range(n)) for i in range(n)]
        found = set(simple)
        layer = list(simple)
        while layer:
            nxt = []
            for b in layer:
                for i in range(n):
                    # p: how far the alpha_i-string extends below b
                    p = 0
                    while True:
                        c = list(b)
                        c[i] -= p + 1
                        if tuple(c) in found:
                            p += 1
                        else:
                            break
                    q = p - sum(C[i][j] * b[j] for j in range(n))
                    if q > 0:
                        c = list(b)
                        c[i] += 1
                        c = tuple(c)
                        if c not in found:
                            found.add(c)
                            nxt.append(c)
            layer = nxt
            if len(found) > 10_000:
                raise ValueError("root strings do not terminate")
        return sorted(found, key=lambda b: (sum(b), tuple(-x for x in b)))

    def root_pairing(self, b, g) -> Fraction:
        """``<b, coroot(g)> = 2 (b, g) / (g, g)``."""
        return 2 * self.form(b, g) / self.form(g, g)

    def coroot_coeffs(self, g) -> tuple[Fraction, ...]:
        cached = self._coroots.get(g)
        if cached is None:
            gg = self.form(g, g)
            cached = self._coroots[g] = tuple(2 * g[j] * self.d[j] / gg for j in range(self.n))
        return cached

    def pair(self, lam, g) -> Fraction:
        return sum((c * Fraction(x) for c, x in zip(self.coroot_coeffs(g), lam)), Fraction(0))

    def root_weight(self, b) -> Weight:
        return Weight(self.root_pairing(b, self.roots[self.simple_idx[i]]) for i in range(self.n))

    def rho_K(self, K) -> Weight:
        total = Weight.zero(self.n)
        for b in self.positive:
            if all(b[i] == 0 or i + 1 in K for i in range(self.n)):
                total = total + self.root_weight(b)
        return total * Fraction(1, 2)

    @property
    def rho(self) -> Weight:
        if "_rho" not in self.__dict__:
            self._rho = self.rho_K(set(range(1, self.n + 1)))
        return self._rho

    # -- group -----------------------------------------------------------

    def _reflection_perm(self, g):
        out = []
        for b in self.roots:
            c = self.root_pairing(b, g)
            img = tuple(int(x - c * y) for x, y in zip(b, g))
            out.append(self.index[img])
        return tuple(out)

    @staticmethod
    def compose(p, q):
        """``(p q)(b) = p(q(b))``."""
        return tuple(p[k] for k in q)

    @staticmethod
    def invert(p):
        out = [0] * len(p)
        for k, v in enumerate(p):
            out[v] = k
        return tuple(out)

    def _closure(self, gens, cap):
        """Element -> a word for it, breadth first."""
        words = {self.identity: ()}
        queue = deque([self.identity])
        while queue:
            p = queue.popleft()
            for i in gens:
                q = self.compose(p, self.gens[i])
                if q not in words:
                    words[q] = words[p] + (i + 1,)
                    if len(words) > cap:
                        raise GroupTooLarge(cap)
                    queue.append(q)
        return words

    def perm(self, word) -> tuple[int, ...]:
        p = self.identity
        for i in word:
            p = self.compose(p, self.gens[i - 1])
        return p

    def length(self, p) -> int:
        return sum(1 for k in range(self.npos) if p[k] >= self.npos)

    def inversion_set(self, p) -> set:
        return {self.roots[k] for k in range(self.npos) if p[k] >= self.npos}

    def act(self, p, lam) -> Weight:
        """``<w lam, coroot_i> = <lam, coroot(w^-1 alpha_i)>``."""
        pinv = self.invert(p)
        return Weight(self.pair(lam, self.roots[pinv[self.simple_idx[i]]]) for i in range(self.n))

    def star(self, p, lam) -> Weight:
        rho = self.rho
        return self.act(p, Weight(lam) - rho) + rho

    def is_regular(self, lam) -> bool:
        shifted = Weight(lam) - self.rho
        return all(self.pair(shifted, b) != 0 for b in self.positive)

    def simple_target(self, p, j):
        k = p[self.simple_idx[j - 1]]
        if k in self.simple_idx:
            return self.simple_idx.index(k) + 1
        return None

    def condition_star(self, p, I, J) -> bool:
        return len(I) == len(J) and all(self.simple_target(p, j) in I for j in J)

    def longest(self, K):
        K = frozenset(K)
        if K not in self._longest:
            sub = self._closure([i - 1 for i in sorted(K)], cap=10 ** 7)
            self._longest[K] = max(sub, key=self.length)
        return self._longest[K]

    def v(self, alpha, I):
        return self.compose(self.longest(set(I) | {alpha}), self.invert(self.longest(I)))

    def subset_image(self, p, J):
        return frozenset(self.simple_target(p, j) for j in J)

    def triples(self):
        """All ``(perm, I, J)`` with ``w J = I``, by brute force over subsets."""
        idx = range(1, self.n + 1)
        subsets = [frozenset(c) for k in range(self.n + 1) for c in combinations(idx, k)]
        out = []
        for p in self.elements:
            for J in subsets:
                for I in subsets:
                    if self.condition_star(p, I, J):
                        out.append((p, I, J))
        return out

    def word(self, p):
        return self.elements[p]

    def bh_factorizations(self, p, I, J):
        """All factorizations of ``w`` as lists of ``(alpha, I_k)``, built left to right.

        Every candidate ``I_k`` is tried (any subset of the right size
        avoiding ``alpha``), so nothing here mirrors the peeling search.
        """
        n = self.n
        target_len = self.length(p)
        subsets = [frozenset(c) for k in range(n + 1) for c in combinations(range(1, n + 1), k)]
        found = []

        def extend(prefix, current, steps, used):
            if used == target_len:
                if prefix == p and current == frozenset(J):
                    found.append(list(steps))
                return
            for alpha in range(1, n + 1):
                for inner in subsets:
                    if alpha in inner or len(inner) != len(current):
                        continue
                    v = self.v(alpha, inner)
                    ell = self.length(v)
                    if used + ell > target_len or not self.condition_star(v, current, inner):
                        continue
                    nxt = self.compose(prefix, v)
                    if self.length(nxt) != used + ell:
                        continue
                    steps.append((alpha, inner))
                    extend(nxt, inner, steps, used + ell)
                    steps.pop()

        extend(self.identity, frozenset(I), [], 0)
        return found

    def canonical_bh(self, p, I, J):
        """The factorization whose alphas, read right to left, are lexicographically least."""
        return min(self.bh_factorizations(p, I, J),
                   key=lambda steps: [a for a, _ in reversed(steps)])


# -- suites -----------------------------------------------------------------


@dataclass
class SuiteResult:
    suite: str
    instances_checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, ok: bool, description: Callable[[], str] | str):
        self.instances_checked += 1
        if not ok and len(self.failures) < 50:
            self.failures.append(description() if callable(description) else description)

    def merge(self, other: SuiteResult) -> SuiteResult:
        """Combine results of the same suite run over disjoint instances."""
        if other.suite != self.suite:
            raise ValueError(f"cannot merge {other.suite!r} into {self.suite!r}")
        return SuiteResult(self.suite, self.instances_checked + other.instances_checked,
                           (self.failures + other.failures)[:50])


def random_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(*NUMERATOR_RANGE), rng.choice(DENOMINATORS))


def random_weight(rng, rank, zero_on=(), integral=False) -> Weight:
    coords = []
    for i in range(1, rank + 1):
        if i in zero_on:
            coords.append(0)
        elif integral:
            coords.append(rng.randint(*NUMERATOR_RANGE))
        else:
            coords.append(random_rational(rng))
    return Weight(coords)


def _impl(rs, orc, p):
    return element_from_word(rs, orc.word(p))


def _suite_lengths(rs, orc, rng, res, n_weights):
    impl_all = enumerate_group(rs, cap=len(orc.elements))
    res.check(len(set(impl_all)) == len(orc.elements),
              lambda: f"|W| = {len(impl_all)} (impl) vs {len(orc.elements)} (oracle)")
    perms = list(orc.elements)
    impl = {p: _impl(rs, orc, p) for p in perms}
    for p, w in impl.items():
        ell = orc.length(p)
        res.check(w.length == ell, lambda: f"l({orc.word(p)}) = {w.length}, oracle {ell}")
        res.check(len(w.word) == ell and orc.perm(w.word) == p,
                  lambda: f"reduced word {w.word} wrong for {orc.word(p)}")
        res.check(w.inverse().length == ell, lambda: f"l(w^-1) != l(w) for {orc.word(p)}")
        res.check(set(w.inversions()) == orc.inversion_set(p),
                  lambda: f"inversion set mismatch for {orc.word(p)}")
        res.check(w * w.inverse() == impl[orc.identity], lambda: f"w w^-1 != e for {orc.word(p)}")
    pairs = [(a, b) for a in perms for b in perms]
    if len(pairs) > 5000:
        pairs = rng.sample(pairs, 5000)
    for a, b in pairs:
        prod = impl[a] * impl[b]
        res.check(orc.perm(prod.word) == orc.compose(a, b),
                  lambda: f"product {orc.word(a)} * {orc.word(b)} wrong")
    trip_count = 2000 if len(perms) > 12 else None
    triples = ([(a, b, c) for a in perms for b in perms for c in perms] if trip_count is None
               else [tuple(rng.choice(perms) for _ in range(3)) for _ in range(trip_count)])
    for a, b, c in triples:
        res.check((impl[a] * impl[b]) * impl[c] == impl[a] * (impl[b] * impl[c]),
                  lambda: f"associativity fails at {orc.word(a)}, {orc.word(b)}, {orc.word(c)}")


def _suite_star_action(rs, orc, rng, res, n_weights):
    perms = list(orc.elements)
    impl = {p: _impl(rs, orc, p) for p in perms}
    all_pairs = [(a, b) for a in perms for b in perms]
    per_weight = max(64, STAR_PAIR_BUDGET // max(n_weights, 1))
    e = impl[orc.identity]
    for _ in range(n_weights):
        pairs = all_pairs if len(all_pairs) <= per_weight else rng.sample(all_pairs, per_weight)
        lam = random_weight(rng, rs.rank)
        nu = random_weight(rng, rs.rank)
        regular = orc.is_regular(lam)
        res.check(star_act(e, lam) == lam, lambda: f"e * {lam} != {lam}")
        for p in perms:
            w = impl[p]
            s = star_act(w, lam)
            res.check(act(w, lam) == orc.act(p, lam),
                      lambda: f"linear action of {orc.word(p)} on {lam} disagrees with oracle")
            res.check(s == orc.star(p, lam),
                      lambda: f"star action of {orc.word(p)} on {lam} disagrees with oracle")
            res.check(star_act(w, lam + nu) == s + act(w, nu),
                      lambda: f"star action of {orc.word(p)} not affine at {lam}, {nu}")
            res.check(parameters.is_regular(s, rs) == regular,
                      lambda: f"regularity of {lam} not preserved by {orc.word(p)}")
        for a, b in pairs:
            res.check(star_act(impl[a] * impl[b], lam) == star_act(impl[a], star_act(impl[b], lam)),
                      lambda: f"(uv)*lam != u*(v*lam) for u={orc.word(a)}, v={orc.word(b)}, lam={lam}")


def _suite_condition_star(rs, orc, rng, res, n_weights):
    expected = set()
    idx = range(1, rs.rank + 1)
    subsets = [frozenset(c) for k in range(rs.rank + 1) for c in combinations(idx, k)]
    for p in orc.elements:
        w = _impl(rs, orc, p)
        for I in subsets:
            for J in subsets:
                truth = orc.condition_star(p, I, J)
                got = parabolic.condition_star(w, I, J)
                res.check(got == truth,
                          lambda: f"condition_star({orc.word(p)}, {sorted(I)}, {sorted(J)}) = {got}")
                if not truth:
                    continue
                expected.add((p, I, J))
                images = {orc.roots[p[orc.index[b]]] for b in orc.positive
                          if all(b[i] == 0 or i + 1 in J for i in range(rs.rank))}
                delta_I = {b for b in orc.positive
                           if all(b[i] == 0 or i + 1 in I for i in range(rs.rank))}
                res.check(images == delta_I,
                          lambda: f"{orc.word(p)} does not carry Delta+_J onto Delta+_I")
                res.check(parabolic.fiber_dimension(w, I, J) == orc.length(p),
                          lambda: f"fiber dimension wrong for {orc.word(p)}")
    listed = {(orc.perm(w.word), I, J) for w, I, J in parabolic.condition_star_triples(rs)}
    res.check(listed == expected, "condition_star_triples differs from brute-force enumeration")


def _suite_bh(rs, orc, rng, res, n_weights):
    for p, I, J in orc.triples():
        w = _impl(rs, orc, p)
        steps = parabolic.bh_factorize(w, I, J)
        label = f"w={orc.word(p)}, I={sorted(I)}, J={sorted(J)}"
        res.check((len(steps) == 0) == (p == orc.identity), lambda: f"r = 0 iff w = e fails, {label}")
        current = I
        product = orc.identity
        total = 0
        ok_chain = ok_alpha = ok_factor = True
        for st in steps:
            v = orc.v(st.alpha, st.inner)
            ok_factor &= orc.perm(st.factor.word) == v
            ok_alpha &= st.alpha not in st.inner
            ok_chain &= orc.condition_star(v, current, st.inner)
            current = st.inner
            product = orc.compose(product, v)
            total += orc.length(v)
        ok_chain &= current == J
        res.check(ok_chain, lambda: f"subset chain broken, {label}")
        res.check(ok_alpha, lambda: f"alpha_i in I_i, {label}")
        res.check(ok_factor, lambda: f"factor is not v[alpha, I], {label}")
        res.check(product == p, lambda: f"product of factors != w, {label}")
        res.check(total == orc.length(p), lambda: f"lengths not additive, {label}")


def _inverted_sum(orc, p):
    """Sum of positive roots ``a`` with ``w^-1 a < 0``, as a weight."""
    pinv = orc.invert(p)
    total = Weight.zero(orc.n)
    for k in range(orc.npos):
        if pinv[k] >= orc.npos:
            total = total + orc.root_weight(orc.roots[k])
    return total


def _suite_rho(rs, orc, rng, res, n_weights):
    idx = range(1, rs.rank + 1)
    for k in range(rs.rank + 1):
        for K in combinations(idx, k):
            res.check(rho_of(rs, K) == orc.rho_K(set(K)), lambda: f"rho_K wrong for K={K}")
    rho = rs.rho
    res.check(rho == orc.rho, "rho is not the all-ones weight")
    for p in orc.elements:
        w = _impl(rs, orc, p)
        res.check(rho - act(w, rho) == _inverted_sum(orc, p),
                  lambda: f"rho - w rho != sum of inverted roots for {orc.word(p)}")
    for p, I, J in orc.triples():
        w = _impl(rs, orc, p)
        lhs = rho - act(w, rho)
        res.check(lhs == rho_nil(rs, I) - act(w, rho_nil(rs, J)),
                  lambda: f"rho - w rho != rho_nI - w rho_nJ for {orc.word(p)}, {sorted(I)}, {sorted(J)}")
        twist = parabolic.det_twist(w, I, J)
        res.check(twist == -_inverted_sum(orc, p) and twist.is_integral()
                  and all(twist[i - 1] == 0 for i in I),
                  lambda: f"det twist wrong for {orc.word(p)}, {sorted(I)}, {sorted(J)}")


def _oracle_transport(orc, p, lam, mu):
    pinv = orc.invert(p)
    return orc.star(pinv, lam) + orc.act(pinv, mu)


def _suite_transport_composition(rs, orc, rng, res, n_weights):
    by_source = {}
    for t in orc.triples():
        by_source.setdefault(t[1], []).append(t)
    for p1, I, J in orc.triples():
        w1 = _impl(rs, orc, p1)
        for p2, J2, K in by_source.get(J, []):
            w2 = _impl(rs, orc, p2)
            lam = random_weight(rng, rs.rank, zero_on=I)
            mu1 = random_weight(rng, rs.rank, zero_on=I, integral=True)
            mu2 = random_weight(rng, rs.rank, zero_on=J, integral=True)
            step = parameters.transport(lam, w1, mu1, I, J)
            two = parameters.transport(step.param, w2, mu2, J, K)
            one = parameters.transport(lam, w1 * w2, mu1 + act(w1, mu2), I, K)
            truth = _oracle_transport(orc, orc.compose(p1, p2), lam,
                                      mu1 + orc.act(p1, mu2))
            res.check(two == one and one.param == truth and one.variety == K,
                      lambda: f"composition fails for w1={orc.word(p1)}, w2={orc.word(p2)}, "
                              f"I={sorted(I)}, J={sorted(J)}, K={sorted(K)}, lam={lam}")


def _suite_annihilator(rs, orc, rng, res, n_weights):
    rho = orc.rho
    for p, I, J in orc.triples():
        w = _impl(rs, orc, p)
        pinv = orc.invert(p)
        rho_nI = rho - orc.rho_K(I)
        for _ in range(n_weights):
            lam = random_weight(rng, rs.rank, zero_on=I)
            hw = parameters.annihilator_label(lam, I, rs).highest_weight
            via_ideal = parameters.annihilator_partner(hw, w, I, J)
            moved = parameters.transport(lam, w, Weight.zero(rs.rank), I, J).param
            via_transport = parameters.annihilator_label(moved, J, rs).highest_weight
            truth = orc.act(pinv, lam - 2 * rho_nI + rho) - rho
            res.check(via_ideal == via_transport == truth,
                      lambda: f"annihilator routes differ for {orc.word(p)}, {sorted(I)}, "
                              f"{sorted(J)}, lam={lam}")


def _suite_marastoni(rs, orc, rng, res, n_weights):
    zero = Weight.zero(rs.rank)
    for p, I, J in orc.triples():
        w = _impl(rs, orc, p)
        mu = _inverted_sum(orc, p)
        label = parameters.transport(zero, w, mu, I, J)
        res.check(label.param == zero and label.variety == J,
                  lambda: f"transport(0, w, rho - w rho) = {label.param} for {orc.word(p)}")


def _suite_equivalence(rs, orc, rng, res, n_weights):
    rounds = max(1, n_weights // 2)
    for p, I, J in orc.triples():
        w = _impl(rs, orc, p)
        pinv = orc.invert(p)
        for _ in range(rounds):
            lam = random_weight(rng, rs.rank, zero_on=I)
            mu = random_weight(rng, rs.rank, zero_on=I, integral=True)
            spec = theorems.check_equivalence(lam, w, mu, I, J)
            back = theorems.inverse_label(spec)
            res.check(back.variety == I and back.param == lam
                      and orc.perm(spec.inverse_w.word) == pinv
                      and spec.inverse_mu == -orc.act(pinv, mu)
                      and spec.target.param == _oracle_transport(orc, p, lam, mu),
                      lambda: f"equivalence round trip fails for {orc.word(p)}, lam={lam}, mu={mu}")


def _suite_theorem2(rs, orc, rng, res, n_weights):
    rounds = max(1, n_weights // 20)
    for p, I, J in orc.triples():
        w = _impl(rs, orc, p)
        for _ in range(rounds):
            lam = random_weight(rng, rs.rank, zero_on=I)
            rep = theorems.check_main_theorem2(lam, w, I, J)
            end = rep.chain[-1].lambda_i if rep.chain else Weight(lam)
            regular = orc.is_regular(lam)
            res.check(end == _oracle_transport(orc, p, lam, Weight.zero(rs.rank)),
                      lambda: f"chain endpoint != transport for {orc.word(p)}, lam={lam}")
            res.check(rep.regular == regular
                      and all(orc.is_regular(c.lambda_i) == regular for c in rep.chain),
                      lambda: f"chain regularity inconsistent for {orc.word(p)}, lam={lam}")
            irreducible = all(c.irreducibility is theorems.Irreducibility.IRREDUCIBLE
                              for c in rep.chain)
            expected = (theorems.Verdict.FAILS_REGULARITY if not regular else
                        theorems.Verdict.APPLIES if irreducible else
                        theorems.Verdict.INCONCLUSIVE)
            res.check(rep.verdict == expected,
                      lambda: f"verdict {rep.verdict} inconsistent for {orc.word(p)}, lam={lam}")


SUITES = {
    "lengths": _suite_lengths,
    "star_action": _suite_star_action,
    "condition_star": _suite_condition_star,
    "bh_factorization": _suite_bh,
    "rho_identities": _suite_rho,
    "transport_composition": _suite_transport_composition,
    "annihilator_compat": _suite_annihilator,
    "marastoni": _suite_marastoni,
    "equivalence_roundtrip": _suite_equivalence,
    "theorem2_chain": _suite_theorem2,
}


def verify_suite(rs: RootSystem, suite: str, seed: int = 0, cap: int = DEFAULT_ORACLE_CAP,
                 n_weights: int = 100) -> SuiteResult:
    """Run one named brute-force suite; deterministic for a fixed seed."""
    if suite not in SUITES:
        raise UnknownSuite(f"unknown suite {suite!r}; choose from {sorted(SUITES)}")
    orc = Oracle(rs.cartan, cap=cap)
    rng = random.Random(f"{suite}:{seed}")
    res = SuiteResult(suite)
    SUITES[suite](rs, orc, rng, res, n_weights)
    return res


def derived_example_values() -> dict:
    """Worked example values recomputed from definitions only.

    Keys name the example; the acceptance tests compare each value against
    the frozen expectation and against the main implementation.
    """
    from .root_system import cartan_matrix

    A1, A2, A3 = (Oracle(cartan_matrix("A", n)) for n in (1, 2, 3))
    B2, B3, G2 = Oracle(cartan_matrix("B", 2)), Oracle(cartan_matrix("B", 3)), \
        Oracle(cartan_matrix("G", 2))
    out = {}
    out["A2.positive_roots"] = sorted(A2.positive)
    out["A1.positive_roots"] = sorted(A1.positive)
    out["B2.n_positive_roots"] = len(B2.positive)
    out["A2.rho_of[2]"] = A2.rho_K({2})
    out["A2.rho_nil[2]"] = A2.rho - A2.rho_K({2})
    out["A2.pair(rho, a1+a2)"] = A2.pair(A2.rho, (1, 1))
    out["A2.length[1,2,1]"] = A2.length(A2.perm([1, 2, 1]))
    out["A2.act(s1, w1)"] = A2.act(A2.perm([1]), Weight([1, 0]))
    out["A2.act(w0, rho)"] = A2.act(A2.perm([1, 2, 1]), A2.rho)
    out["A1.star(s1, 5)"] = A1.star(A1.perm([1]), Weight([5]))
    out["A2.star(s2s1, (-1,0))"] = A2.star(A2.perm([2, 1]), Weight([-1, 0]))
    out["A2.longest_length"] = A2.length(A2.longest({1, 2}))
    out["B2.longest_length"] = B2.length(B2.longest({1, 2}))
    out["|W(A2)|"] = len(A2.elements)
    out["|W(B2)|"] = len(B2.elements)
    out["|W(B3)|"] = len(B3.elements)
    s1s2 = A2.perm([1, 2])
    out["A2.star(s1s2,{2},{1})"] = A2.condition_star(s1s2, {2}, {1})
    out["A2.star(s1,{2},{1})"] = A2.condition_star(A2.perm([1]), {2}, {1})
    out["A2.v(2,{})"] = A2.word(A2.v(2, set()))
    out["A2.v(2,{1})"] = A2.word(A2.v(2, {1}))
    v = B2.v(2, {1})
    out["B2.v(2,{1}).length"] = B2.length(v)
    out["B2.v(2,{1}).fixes_a1"] = B2.simple_target(v, 1) == 1
    out["A2.bh(s1s2,{2},{1})"] = A2.canonical_bh(s1s2, {2}, {1})
    w = A3.perm([2, 1, 3, 2])
    out["A3.bh(s2s1s3s2,{1},{3})"] = A3.canonical_bh(w, {1}, {3})
    out["A3.bh(s2s1s3s2).factor_lengths"] = [A3.length(A3.v(a, K))
                                              for a, K in A3.canonical_bh(w, {1}, {3})]
    out["A2.fiber(s1s2)"] = A2.length(s1s2)
    out["A3.fiber(s2s1s3s2)"] = A3.length(w)
    out["A2.det_twist(s1s2)"] = -_inverted_sum(A2, s1s2)
    out["B2.det_twist(v)"] = -_inverted_sum(B2, v)
    lam = Weight([-1, 0])
    shifted = lam - A2.rho
    out["A2.pairings(lam - rho)"] = [A2.pair(shifted, b) for b in A2.positive]
    out["A2.regular(-1,0)"] = A2.is_regular(lam)
    out["A2.pairings(w2 - rho)"] = [A2.pair(Weight([0, 1]) - A2.rho, b) for b in A2.positive]
    out["A2.transport((-1,0), s1s2)"] = _oracle_transport(A2, s1s2, lam, Weight([0, 0]))
    hw = lam - 2 * (A2.rho - A2.rho_K({2}))
    out["A2.annihilator_label((-1,0),{2})"] = hw
    s2s1 = A2.invert(s1s2)
    out["A2.annihilator_partner"] = A2.act(s2s1, hw + A2.rho) - A2.rho
    out["A2.rho_nil[1]"] = A2.rho - A2.rho_K({1})
    omega1 = Weight([1, 0])
    out["A2.pairings(w1 - rho)"] = [A2.pair(omega1 - A2.rho, b) for b in A2.positive]
    out["A2.pairings(w1 + rho) off I"] = [A2.pair(omega1 + A2.rho, b)
                                          for b in A2.positive if b != (0, 1)]
    out["A2.eta_1"] = A2.act(s2s1, lam)
    out["A2.inverse_w"] = A2.word(s2s1)
    out["A2.triples"] = len(A2.triples())
    out["B2.triples"] = len(B2.triples())
    out["G2.triples"] = len(G2.triples())
    return out


def verify_all(rs: RootSystem, seed: int = 0, cap: int = DEFAULT_ORACLE_CAP,
               suites=None, n_weights: int = 100) -> list[SuiteResult]:
    return [verify_suite(rs, s, seed, cap, n_weights) for s in (suites or SUITES)]
