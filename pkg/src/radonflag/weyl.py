"""Weyl group elements in canonical matrix form.

An element is stored as the integer matrix of its action on the root
lattice (column ``j`` is the image of the ``j``-th simple root), together
with the inverse matrix.  Equality and hashing use the matrix only; reduced
words are derived on demand.
"""

from __future__ import annotations

from collections import deque
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .errors import GroupTooLarge, IndexOutOfRange, RankMismatch
from .root_system import RootSystem, Weight, subset

DEFAULT_GROUP_CAP = 200_000


@lru_cache(maxsize=None)
def _generators(rs: RootSystem) -> tuple[np.ndarray, ...]:
    gens = []
    for i in range(rs.rank):
        S = np.eye(rs.rank, dtype=np.int64)
        S[i, :] -= rs._cartan_np[i, :]
        S.setflags(write=False)
        gens.append(S)
    return tuple(gens)


class WeylElem:
    __slots__ = ("rs", "_mat", "_inv", "_key", "_length", "_word", "_wmat")

    def __init__(self, rs: RootSystem, mat: np.ndarray, inv: np.ndarray):
        self.rs = rs
        mat.setflags(write=False)
        inv.setflags(write=False)
        self._mat = mat
        self._inv = inv
        self._key = mat.tobytes()
        self._length = None
        self._word = None
        self._wmat = None

    @classmethod
    def identity(cls, rs: RootSystem) -> WeylElem:
        return cls(rs, np.eye(rs.rank, dtype=np.int64), np.eye(rs.rank, dtype=np.int64))

    @classmethod
    def reflection(cls, rs: RootSystem, i: int) -> WeylElem:
        rs._check_index(i)
        S = _generators(rs)[i - 1]
        return cls(rs, S.copy(), S.copy())

    @property
    def matrix(self) -> np.ndarray:
        return self._mat

    def __eq__(self, other):
        return (isinstance(other, WeylElem) and self.rs == other.rs
                and self._key == other._key)

    def __hash__(self):
        return hash(self._key)

    def __mul__(self, other: WeylElem) -> WeylElem:
        if not isinstance(other, WeylElem):
            return NotImplemented
        if other.rs != self.rs:
            raise RankMismatch("Weyl elements from different root systems")
        return WeylElem(self.rs, self._mat @ other._mat, other._inv @ self._inv)

    def inverse(self) -> WeylElem:
        return WeylElem(self.rs, self._inv.copy(), self._mat.copy())

    def is_identity(self) -> bool:
        return self.length == 0

    def act_root(self, beta: Sequence[int]) -> tuple[int, ...]:
        return tuple(int(x) for x in self._mat @ np.asarray(beta, dtype=np.int64))

    def simple_image(self, j: int) -> int | None:
        """Index ``i`` with ``w(alpha_j) = alpha_i``, or ``None``."""
        col = self._mat[:, j - 1]
        nz = np.flatnonzero(col)
        if len(nz) == 1 and col[nz[0]] == 1:
            return int(nz[0]) + 1
        return None

    def inversions(self) -> list[tuple[int, ...]]:
        """Positive roots sent to negative roots."""
        P = self.rs._positive_np
        images = self._mat @ P.T
        neg = images.sum(axis=0) < 0
        return [self.rs.positive_roots[k] for k in np.flatnonzero(neg)]

    @property
    def length(self) -> int:
        if self._length is None:
            images = self._mat @ self.rs._positive_np.T
            self._length = int((images.sum(axis=0) < 0).sum())
        return self._length

    @property
    def word(self) -> tuple[int, ...]:
        """Lexicographically least reduced word (1-based indices)."""
        if self._word is None:
            gens = _generators(self.rs)
            inv = self._inv
            word = []
            while True:
                descents = np.flatnonzero((inv < 0).any(axis=0))
                if len(descents) == 0:
                    break
                i = int(descents[0])
                word.append(i + 1)
                inv = inv @ gens[i]
            self._word = tuple(word)
            self._length = len(word)
        return self._word

    def act(self, lam: Weight) -> Weight:
        return act(self, lam)

    def __repr__(self):
        return f"WeylElem({list(self.word)})"


def element_from_word(rs: RootSystem, word: Iterable[int]) -> WeylElem:
    """The product ``s_{i1} ... s_{ik}`` in canonical form."""
    gens = _generators(rs)
    mat = np.eye(rs.rank, dtype=np.int64)
    inv = np.eye(rs.rank, dtype=np.int64)
    for i in word:
        rs._check_index(i)
        S = gens[i - 1]
        mat = mat @ S
        inv = S @ inv
    return WeylElem(rs, mat, inv)


@lru_cache(maxsize=None)
def _cartan_adjugate(rs: RootSystem) -> tuple[np.ndarray, int]:
    """``(adj(C), det(C))`` with ``C adj(C) = det(C) I``, exactly."""
    n = rs.rank
    C = [[Fraction(x) for x in row] for row in rs.cartan]
    # Gauss-Jordan over the rationals; Cartan matrices are tiny
    aug = [row + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(C)]
    det = Fraction(1)
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        if piv != col:
            aug[col], aug[piv] = aug[piv], aug[col]
            det = -det
        det *= aug[col][col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    d = int(det)
    adj = np.array([[int(x * d) for x in row[n:]] for row in aug], dtype=np.int64)
    return adj, d


def weight_matrix(w: WeylElem) -> np.ndarray:
    """Integer matrix of ``w`` on fundamental-weight coordinates: ``C M C^-1``."""
    if w._wmat is None:
        adj, det = _cartan_adjugate(w.rs)
        num = w.rs._cartan_np @ w._mat @ adj
        wm = num // det
        if not (wm * det == num).all():
            raise RuntimeError("weight action matrix is not integral")
        wm.setflags(write=False)
        w._wmat = wm
    return w._wmat


def act(w: WeylElem, lam: Weight) -> Weight:
    """Linear action of ``w`` on a weight."""
    lam = w.rs.check_weight(lam)
    A = weight_matrix(w).tolist()
    coords = lam.coords
    return Weight._make(tuple(sum((a * c for a, c in zip(row, coords) if a), Fraction(0))
                              for row in A))


def star_act(w: WeylElem, lam: Weight) -> Weight:
    """The rho-shifted action ``w * lam = w(lam - rho) + rho``."""
    lam = w.rs.check_weight(lam)
    rho = w.rs.rho
    return act(w, lam - rho) + rho


def longest_element(rs: RootSystem, I: Iterable[int]) -> WeylElem:
    """Longest element of the parabolic subgroup ``W_I``."""
    I = sorted(subset(rs, I))
    gens = _generators(rs)
    w = WeylElem.identity(rs)
    mat, inv = w._mat, w._inv
    grown = True
    while grown:
        grown = False
        for i in I:
            # w(alpha_i) > 0 means w s_i is longer
            if mat[:, i - 1].sum() > 0:
                mat = mat @ gens[i - 1]
                inv = gens[i - 1] @ inv
                grown = True
    return WeylElem(rs, mat.copy(), inv.copy())


def enumerate_group(rs: RootSystem, cap: int = DEFAULT_GROUP_CAP) -> list[WeylElem]:
    """All elements of ``W``, breadth first under right multiplication."""
    e = WeylElem.identity(rs)
    gens = [WeylElem.reflection(rs, i) for i in range(1, rs.rank + 1)]
    seen = {e}
    out = [e]
    queue = deque([e])
    while queue:
        u = queue.popleft()
        for s in gens:
            v = u * s
            if v in seen:
                continue
            seen.add(v)
            if len(seen) > cap:
                raise GroupTooLarge(cap)
            out.append(v)
            queue.append(v)
    return out


def parabolic_subgroup(rs: RootSystem, I: Iterable[int]) -> list[WeylElem]:
    """All elements of ``W_I``."""
    I = sorted(subset(rs, I))
    e = WeylElem.identity(rs)
    gens = [WeylElem.reflection(rs, i) for i in I]
    seen = {e}
    queue = deque([e])
    while queue:
        u = queue.popleft()
        for s in gens:
            v = u * s
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return list(seen)
