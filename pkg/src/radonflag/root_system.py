"""Finite root systems built from Cartan data.

Conventions
-----------
* Simple roots are indexed ``1..rank`` (Bourbaki labelling).
* ``cartan[i][j] = <alpha_j, coroot_i>`` (0-based storage of 1-based labels).
* Roots are integer tuples in the simple-root basis; coroots are integer
  tuples in the simple-coroot basis.
* Weights are exact rational tuples in the fundamental-weight basis, so
  coordinate ``i`` of a weight is its pairing with the ``i``-th simple coroot.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import IndexOutOfRange, InvalidCartan, NotARoot, RankMismatch

Root = tuple[int, ...]

DEFAULT_ROOT_CAP = 10_000


def _rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool) or isinstance(x, float):
        raise TypeError(f"weights take exact rationals, got {x!r}")
    if isinstance(x, (int, str)):
        return Fraction(x)
    if isinstance(x, np.integer):
        return Fraction(int(x))
    raise TypeError(f"cannot read {x!r} as a rational number")


@dataclass(frozen=True)
class Weight:
    """Exact rational weight in fundamental-weight coordinates."""

    coords: tuple[Fraction, ...]

    def __init__(self, coords: Iterable):
        object.__setattr__(self, "coords", tuple(_rational(c) for c in coords))

    @classmethod
    def _make(cls, coords: tuple) -> Weight:
        # internal fast path: coords are already a tuple of Fractions
        out = object.__new__(cls)
        object.__setattr__(out, "coords", coords)
        return out

    @classmethod
    def zero(cls, rank: int) -> Weight:
        return cls([0] * rank)

    @property
    def rank(self) -> int:
        return len(self.coords)

    def __len__(self):
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, k):
        return self.coords[k]

    def _other(self, other) -> Weight:
        if not isinstance(other, Weight):
            other = Weight(other)
        if other.rank != self.rank:
            raise RankMismatch(f"rank {self.rank} weight combined with rank {other.rank}")
        return other

    def __add__(self, other) -> Weight:
        other = self._other(other)
        return Weight._make(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other) -> Weight:
        other = self._other(other)
        return Weight._make(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> Weight:
        return Weight._make(tuple(-a for a in self.coords))

    def __mul__(self, scalar) -> Weight:
        c = _rational(scalar)
        return Weight._make(tuple(c * a for a in self.coords))

    __rmul__ = __mul__

    def is_integral(self) -> bool:
        return all(a.denominator == 1 for a in self.coords)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __repr__(self):
        return "Weight(" + ", ".join(str(a) for a in self.coords) + ")"


def cartan_matrix(series: str, rank: int) -> list[list[int]]:
    """Bourbaki Cartan matrix of the given finite type."""
    s = series.upper()
    n = int(rank)
    minimum = {"A": 1, "B": 2, "C": 2, "D": 3}
    if s in minimum:
        if n < minimum[s]:
            raise InvalidCartan(f"type {s}{n} needs rank >= {minimum[s]}")
    elif s == "E":
        if n not in (6, 7, 8):
            raise InvalidCartan(f"type E{n} does not exist")
    elif s == "F":
        if n != 4:
            raise InvalidCartan(f"type F{n} does not exist")
    elif s == "G":
        if n != 2:
            raise InvalidCartan(f"type G{n} does not exist")
    else:
        raise InvalidCartan(f"unknown series {series!r}")

    C = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i, j):
        C[i - 1][j - 1] = C[j - 1][i - 1] = -1

    if s in "ABC":
        for i in range(1, n):
            link(i, i + 1)
        if s == "B":
            C[n - 1][n - 2] = -2
        elif s == "C":
            C[n - 2][n - 1] = -2
    elif s == "D":
        for i in range(1, n - 1):
            link(i, i + 1)
        link(n - 2, n)
    elif s == "E":
        link(1, 3)
        link(2, 4)
        for i in range(3, n):
            link(i, i + 1)
    elif s == "F":
        link(1, 2)
        link(2, 3)
        link(3, 4)
        C[2][1] = -2
    else:
        C[0][1] = -3
        C[1][0] = -1
    return C


class RootSystem:
    """Positive roots and coroots generated from a Cartan matrix.

    Immutable once built.  Use :func:`build_root_system` for the usual entry
    points (series/rank pairs, explicit matrices, JSON dicts).
    """

    def __init__(self, cartan: Sequence[Sequence[int]], name: str | None = None,
                 cap: int = DEFAULT_ROOT_CAP):
        C = tuple(tuple(int(x) for x in row) for row in cartan)
        n = len(C)
        if n == 0 or any(len(row) != n for row in C):
            raise InvalidCartan("Cartan matrix must be square and non-empty")
        for i in range(n):
            if C[i][i] != 2:
                raise InvalidCartan(f"diagonal entry ({i + 1},{i + 1}) is {C[i][i]}, expected 2")
            for j in range(n):
                if i != j and C[i][j] > 0:
                    raise InvalidCartan(f"off-diagonal entry ({i + 1},{j + 1}) is positive")
                if (C[i][j] == 0) != (C[j][i] == 0):
                    raise InvalidCartan(f"entries ({i + 1},{j + 1}) and ({j + 1},{i + 1}) "
                                        "must vanish together")
        self.rank = n
        self.cartan = C
        self.name = name
        self._cartan_np = np.array(C, dtype=np.int64)
        self._generate(cap)

    def _generate(self, cap):
        n, C = self.rank, self.cartan
        simple = [tuple(int(i == k) for k in range(n)) for i in range(n)]
        coroots: dict[Root, Root] = {a: a for a in simple}
        queue = deque(simple)
        while queue:
            beta = queue.popleft()
            cb = coroots[beta]
            for i in range(n):
                if beta == simple[i]:
                    continue
                p = sum(C[i][j] * beta[j] for j in range(n))
                if p == 0:
                    continue
                gamma = list(beta)
                gamma[i] -= p
                gamma = tuple(gamma)
                if min(gamma) < 0:
                    raise InvalidCartan("reflection produced a root with mixed signs")
                q = sum(cb[j] * C[j][i] for j in range(n))
                cg = list(cb)
                cg[i] -= q
                cg = tuple(cg)
                if gamma in coroots:
                    if coroots[gamma] != cg:
                        raise InvalidCartan("inconsistent coroot data; not of finite type")
                    continue
                coroots[gamma] = cg
                if len(coroots) > cap:
                    raise InvalidCartan(f"more than {cap} positive roots; "
                                        "Cartan matrix is not of finite type")
                queue.append(gamma)
        self.positive_roots: tuple[Root, ...] = tuple(
            sorted(coroots, key=lambda b: (sum(b), tuple(-x for x in b))))
        self.coroot_table: Mapping[Root, Root] = dict(coroots)
        self._positive_np = np.array(self.positive_roots, dtype=np.int64)
        self._root_index = {b: k for k, b in enumerate(self.positive_roots)}

    def __repr__(self):
        label = self.name or f"rank {self.rank}"
        return f"RootSystem({label}, {len(self.positive_roots)} positive roots)"

    def __eq__(self, other):
        return isinstance(other, RootSystem) and self.cartan == other.cartan

    def __hash__(self):
        return hash(self.cartan)

    @property
    def indices(self) -> frozenset[int]:
        return frozenset(range(1, self.rank + 1))

    @property
    def rho(self) -> Weight:
        return Weight([1] * self.rank)

    def simple_root(self, i: int) -> Root:
        self._check_index(i)
        return tuple(int(k == i - 1) for k in range(self.rank))

    def _check_index(self, i):
        if not isinstance(i, (int, np.integer)) or not 1 <= i <= self.rank:
            raise IndexOutOfRange(f"simple root index {i!r} not in 1..{self.rank}")

    def is_root(self, beta: Sequence[int]) -> bool:
        b = tuple(int(x) for x in beta)
        return b in self._root_index or tuple(-x for x in b) in self._root_index

    def is_positive_root(self, beta: Sequence[int]) -> bool:
        return tuple(int(x) for x in beta) in self._root_index

    def coroot(self, beta: Sequence[int]) -> Root:
        b = tuple(int(x) for x in beta)
        if b in self.coroot_table:
            return self.coroot_table[b]
        neg = tuple(-x for x in b)
        if neg in self.coroot_table:
            return tuple(-x for x in self.coroot_table[neg])
        raise NotARoot(f"{b} is not a root")

    def roots_in(self, K: Iterable[int]) -> list[Root]:
        """Positive roots whose support lies in ``K``."""
        K = subset(self, K)
        outside = [i for i in range(self.rank) if i + 1 not in K]
        return [b for b in self.positive_roots if all(b[i] == 0 for i in outside)]

    def root_weight(self, beta: Sequence[int]) -> Weight:
        """A root (simple-root coordinates) in fundamental-weight coordinates."""
        if len(beta) != self.rank:
            raise RankMismatch(f"root of length {len(beta)} in rank {self.rank}")
        return Weight(sum(self.cartan[i][j] * int(beta[j]) for j in range(self.rank))
                      for i in range(self.rank))

    def check_weight(self, lam: Weight) -> Weight:
        if not isinstance(lam, Weight):
            lam = Weight(lam)
        if lam.rank != self.rank:
            raise RankMismatch(f"weight of rank {lam.rank} used with rank {self.rank} system")
        return lam


def subset(rs: RootSystem, indices: Iterable[int]) -> frozenset[int]:
    """Validate a parabolic subset of simple-root indices (1-based)."""
    out = frozenset(indices)
    for i in out:
        rs._check_index(i)
    return out


def build_root_system(spec, cap: int = DEFAULT_ROOT_CAP) -> RootSystem:
    """Build a root system from any of the accepted Cartan inputs.

    Accepts ``"A2"``-style names, ``("B", 3)`` pairs, explicit square
    matrices, or the JSON dicts ``{"series": "A", "rank": 2}`` and
    ``{"cartan": [[2, -1], [-1, 2]]}``.
    """
    if isinstance(spec, RootSystem):
        return spec
    if isinstance(spec, Mapping):
        if "cartan" in spec:
            return RootSystem(spec["cartan"], cap=cap)
        if "series" in spec and "rank" in spec:
            return build_root_system((spec["series"], spec["rank"]), cap=cap)
        raise InvalidCartan("expected keys 'series'+'rank' or 'cartan'")
    if isinstance(spec, str):
        s = spec.strip()
        if len(s) < 2 or not s[1:].isdigit():
            raise InvalidCartan(f"cannot parse type name {spec!r}")
        return build_root_system((s[0], int(s[1:])), cap=cap)
    if isinstance(spec, tuple) and len(spec) == 2 and isinstance(spec[0], str):
        series, rank = spec
        if isinstance(rank, bool) or not isinstance(rank, (int, np.integer)) or rank < 1:
            raise InvalidCartan(f"rank must be a positive integer, got {rank!r}")
        return RootSystem(cartan_matrix(series, rank), name=f"{series.upper()}{rank}", cap=cap)
    return RootSystem(spec, cap=cap)


def rho_of(rs: RootSystem, K: Iterable[int]) -> Weight:
    """Half the sum of the positive roots supported on ``K``."""
    return _rho_of(rs, subset(rs, K))


@lru_cache(maxsize=1024)
def _rho_of(rs, K):
    total = Weight.zero(rs.rank)
    for beta in rs.roots_in(K):
        total = total + rs.root_weight(beta)
    return total * Fraction(1, 2)


def rho_nil(rs: RootSystem, I: Iterable[int]) -> Weight:
    """``rho - rho_I``: half the sum of the roots of the nilradical of ``p_I``."""
    return rs.rho - rho_of(rs, I)


def pair(rs: RootSystem, lam: Weight, beta: Sequence[int]) -> Fraction:
    """``<lam, coroot(beta)>`` for a root ``beta`` given in simple-root coordinates."""
    lam = rs.check_weight(lam)
    if len(beta) != rs.rank:
        raise NotARoot(f"{tuple(beta)} has the wrong length for rank {rs.rank}")
    cb = rs.coroot(beta)
    return sum((c * a for c, a in zip(cb, lam.coords)), Fraction(0))
