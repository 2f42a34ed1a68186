"""Hall basis of the free Lie algebra on generators 1..n.

Words are ordered by degree first and, inside a degree, by the positions of
their two factors.  A compound word ``(u, v)`` belongs to the Hall set when
``u < v`` and, if ``v = (a, b)`` is itself compound, ``a <= u``.  This is
Marshall Hall's set of basic commutators written with the factors swapped, so
``[1,2]`` rather than ``[2,1]`` is the degree-two basis word.

Internally the word of index ``i`` is stored as an int (generator) or a
pair of indices.  Coordinates use the positive word degree ``d``; the graded
Lie algebra built on top of this places that component in degree ``-d``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Union

Expr = Union[int, tuple, list]

__all__ = [
    "HallWord",
    "HallBasis",
    "hall_basis",
    "witt_dimension",
    "mobius",
    "normal_form",
]


def mobius(n: int) -> int:
    if n < 1:
        raise ValueError("mobius is defined for n >= 1")
    result, k = 1, 2
    while k * k <= n:
        if n % k == 0:
            n //= k
            if n % k == 0:
                return 0
            result = -result
        k += 1
    if n > 1:
        result = -result
    return result


def witt_dimension(n: int, d: int) -> int:
    """Dimension of the degree-d part of the free Lie algebra on n generators."""
    if n < 1 or d < 1:
        raise ValueError("need n >= 1 and d >= 1")
    total = sum(mobius(e) * n ** (d // e) for e in range(1, d + 1) if d % e == 0)
    assert total % d == 0
    return total // d


class HallWord:
    """A Hall word, either a generator index or a bracket of two Hall words."""

    __slots__ = ("left", "right", "gen", "degree")

    def __init__(self, gen: int | None = None, left: "HallWord | None" = None,
                 right: "HallWord | None" = None):
        if gen is not None:
            self.gen, self.left, self.right, self.degree = gen, None, None, 1
        else:
            self.gen, self.left, self.right = None, left, right
            self.degree = left.degree + right.degree

    @property
    def is_generator(self) -> bool:
        return self.gen is not None

    def __eq__(self, other):
        return isinstance(other, HallWord) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def _key(self):
        if self.gen is not None:
            return self.gen
        return (self.left._key(), self.right._key())

    def __str__(self):
        if self.gen is not None:
            return str(self.gen)
        return f"[{self.left},{self.right}]"

    __repr__ = __str__


class HallBasis:
    """Hall words of degree 1..max_degree on ``n`` generators, with bracket rewriting."""

    def __init__(self, n: int, max_degree: int):
        if n < 1 or max_degree < 1:
            raise ValueError("need n >= 1 and max_degree >= 1")
        self.n = n
        self.max_degree = max_degree
        # parts[i] = generator number (int) or (left_index, right_index)
        self.parts: list = []
        self.degree: list[int] = []
        self.by_degree: dict[int, list[int]] = {}
        self._index: dict = {}
        self._memo: dict[tuple[int, int], dict[int, Fraction]] = {}
        self._build()

    def _build(self):
        for g in range(1, self.n + 1):
            self._append(g, 1)
        for d in range(2, self.max_degree + 1):
            found = []
            for d1 in range(1, d):
                d2 = d - d1
                for u in self.by_degree.get(d1, []):
                    for v in self.by_degree.get(d2, []):
                        if u < v and self._hall_pair(u, v):
                            found.append((u, v))
            found.sort()
            for pair in found:
                self._append(pair, d)
        self.words = [self._word(i) for i in range(len(self.parts))]
        self.position = {}
        for d, idx in self.by_degree.items():
            for pos, i in enumerate(idx):
                self.position[i] = pos

    def _append(self, part, d):
        i = len(self.parts)
        self.parts.append(part)
        self.degree.append(d)
        self.by_degree.setdefault(d, []).append(i)
        self._index[part] = i

    def _hall_pair(self, u: int, v: int) -> bool:
        pv = self.parts[v]
        if isinstance(pv, int):
            return True
        return pv[0] <= u

    def _word(self, i: int) -> HallWord:
        p = self.parts[i]
        if isinstance(p, int):
            return HallWord(gen=p)
        return HallWord(left=self._word(p[0]), right=self._word(p[1]))

    def counts(self) -> list[int]:
        return [len(self.by_degree.get(d, [])) for d in range(1, self.max_degree + 1)]

    def generator(self, g: int) -> int:
        return self._index[g]

    def bracket(self, a: int, b: int) -> dict[int, Fraction]:
        """Bracket of Hall words ``a`` and ``b`` (global indices) as a Hall combination.

        Components above ``max_degree`` are dropped.
        """
        if a == b or self.degree[a] + self.degree[b] > self.max_degree:
            return {}
        if a > b:
            return {k: -v for k, v in self.bracket(b, a).items()}
        key = (a, b)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        pb = self.parts[b]
        if isinstance(pb, int) or pb[0] <= a:
            out = {self._index[(a, b)]: Fraction(1)}
        else:
            # [a,[c,d]] = [[a,c],d] + [c,[a,d]] with a < c < d
            c, d = pb
            out: dict[int, Fraction] = {}
            for w, coef in self.bracket(a, c).items():
                _axpy(out, coef, self.bracket(w, d))
            for w, coef in self.bracket(a, d).items():
                _axpy(out, coef, self.bracket(c, w))
        self._memo[key] = out
        return out

    def bracket_combos(self, x: dict[int, Fraction], y: dict[int, Fraction]) -> dict[int, Fraction]:
        out: dict[int, Fraction] = {}
        for a, ca in x.items():
            for b, cb in y.items():
                _axpy(out, ca * cb, self.bracket(a, b))
        return out

    def evaluate(self, expr: Expr) -> dict[int, Fraction]:
        """Sparse Hall coordinates of a bracket expression.

        ``expr`` is a generator number, a pair ``(x, y)`` meaning ``[x, y]``, or
        a list of ``(coefficient, expr)`` terms meaning their sum.
        """
        if isinstance(expr, int):
            if not 1 <= expr <= self.n:
                raise ValueError(f"generator {expr} out of range 1..{self.n}")
            return {self._index[expr]: Fraction(1)}
        if isinstance(expr, tuple) and len(expr) == 2:
            return self.bracket_combos(self.evaluate(expr[0]), self.evaluate(expr[1]))
        if isinstance(expr, list):
            out: dict[int, Fraction] = {}
            for coef, sub in expr:
                _axpy(out, Fraction(coef), self.evaluate(sub))
            return out
        raise TypeError(f"cannot interpret {expr!r} as a bracket expression")


def _axpy(acc: dict, coef, vec: dict):
    if not coef:
        return
    for k, v in vec.items():
        nv = acc.get(k, 0) + coef * v
        if nv:
            acc[k] = nv
        else:
            acc.pop(k, None)


@lru_cache(maxsize=32)
def _cached_basis(n: int, max_degree: int) -> HallBasis:
    return HallBasis(n, max_degree)


def hall_basis(n: int, max_degree: int) -> dict[int, list[HallWord]]:
    hb = _cached_basis(n, max_degree)
    return {d: [hb.words[i] for i in hb.by_degree.get(d, [])] for d in range(1, max_degree + 1)}


def normal_form(expr: Expr, n: int, max_degree: int) -> dict[int, tuple]:
    """Dense Hall coordinates, per positive degree, of a bracket expression."""
    hb = _cached_basis(n, max_degree)
    sparse = hb.evaluate(expr)
    out = {}
    for d in range(1, max_degree + 1):
        idx = hb.by_degree.get(d, [])
        vec = tuple(sparse.get(i, Fraction(0)) for i in idx)
        out[d] = vec
    return out
