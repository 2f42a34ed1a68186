"""Gradations of simple Lie algebras from marked Dynkin diagrams.

Roots are integer vectors of simple-root coordinates.  Simple roots follow
the Bourbaki numbering; pairings use the Gram matrix of the simple roots
(so ``<beta, alpha_i^vee> = 2 (beta, alpha_i) / (alpha_i, alpha_i)``).
A gradation is given by the set of crossed nodes ``Π₁``: node ``i`` gets
mark ``s_i = 1`` if crossed and 0 otherwise, and a root of coordinates
``m`` has degree ``sum(m_i s_i)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations

__all__ = [
    "RootGradation",
    "gram_matrix",
    "positive_roots",
    "highest_root",
    "pairing",
    "canonical_cross",
    "grade_by_marks",
    "dim_top_is_one",
    "component_highest_root",
    "prolongation_exception",
    "SIMPLE_DIMENSIONS",
]

TYPES = ("A", "B", "C", "D", "G")


def _check_rank(typ: str, l: int):
    typ = typ.upper().rstrip("2") if typ.upper() in ("G", "G2") else typ.upper()
    minimum = {"A": 1, "B": 2, "C": 3, "D": 4, "G": 2}
    if typ not in minimum:
        raise ValueError(f"unsupported type {typ!r}; expected one of A, B, C, D, G2")
    if typ == "G" and l != 2:
        raise ValueError("G2 has rank 2")
    if l < minimum[typ]:
        raise ValueError(f"type {typ} needs rank >= {minimum[typ]}")
    return typ


@lru_cache(maxsize=None)
def gram_matrix(typ: str, l: int) -> tuple[tuple[int, ...], ...]:
    """Inner products (alpha_i, alpha_j), normalised so short roots of A/D/B-long have length 2."""
    typ = _check_rank(typ, l)
    g = [[0] * l for _ in range(l)]
    if typ == "G":
        return ((2, -3), (-3, 6))
    for i in range(l):
        g[i][i] = 2
    for i in range(l - 1):
        g[i][i + 1] = g[i + 1][i] = -1
    if typ == "B":
        # alpha_l = e_l is short
        g[l - 1][l - 1] = 1
    elif typ == "C":
        # alpha_l = 2 e_l is long
        g[l - 1][l - 1] = 4
        g[l - 2][l - 1] = g[l - 1][l - 2] = -2
    elif typ == "D":
        g[l - 2][l - 1] = g[l - 1][l - 2] = 0
        g[l - 3][l - 1] = g[l - 1][l - 3] = -1
    return tuple(tuple(r) for r in g)


def pairing(typ: str, l: int, beta, i: int) -> Fraction:
    """<beta, alpha_i^vee> for a root given in simple-root coordinates (i is 1-based)."""
    g = gram_matrix(typ, l)
    ip = sum(b * g[j][i - 1] for j, b in enumerate(beta))
    return Fraction(2 * ip, g[i - 1][i - 1])


@lru_cache(maxsize=None)
def positive_roots(typ: str, l: int) -> tuple[tuple[int, ...], ...]:
    """All positive roots, generated from the simple roots by root strings."""
    typ = _check_rank(typ, l)
    simple = [tuple(int(i == j) for j in range(l)) for i in range(l)]
    roots = set(simple)
    frontier = list(simple)
    while frontier:
        new = []
        for beta in frontier:
            for i in range(l):
                # p = how far beta - k alpha_i stays a root
                p = 0
                probe = list(beta)
                while True:
                    probe[i] -= 1
                    if tuple(probe) in roots:
                        p += 1
                    else:
                        break
                q = p - pairing(typ, l, beta, i + 1)
                if q > 0:
                    gamma = list(beta)
                    gamma[i] += 1
                    gamma = tuple(gamma)
                    if gamma not in roots:
                        roots.add(gamma)
                        new.append(gamma)
        frontier = new
    return tuple(sorted(roots, key=lambda r: (sum(r), r)))


def highest_root(typ: str, l: int) -> tuple[int, ...]:
    return max(positive_roots(typ, l), key=sum)


SIMPLE_DIMENSIONS = {
    "A": lambda l: l * l + 2 * l,
    "B": lambda l: 2 * l * l + l,
    "C": lambda l: 2 * l * l + l,
    "D": lambda l: 2 * l * l - l,
    "G": lambda l: 14,
}


def _diagram_automorphisms(typ: str, l: int) -> list[dict[int, int]]:
    ident = {i: i for i in range(1, l + 1)}
    if typ == "A" and l > 1:
        return [ident, {i: l + 1 - i for i in range(1, l + 1)}]
    if typ == "D":
        swap = dict(ident)
        swap[l - 1], swap[l] = l, l - 1
        autos = [ident, swap]
        if l == 4:
            autos = []
            for perm in permutations((1, 3, 4)):
                a = {2: 2}
                a.update(dict(zip((1, 3, 4), perm)))
                autos.append(a)
        return autos
    return [ident]


def canonical_cross(typ: str, l: int, cross) -> tuple[int, ...]:
    """Smallest image of the crossed-node set under the diagram automorphisms."""
    typ = _check_rank(typ, l)
    cross = tuple(sorted(set(cross)))
    return min(tuple(sorted(a[i] for i in cross)) for a in _diagram_automorphisms(typ, l))


@dataclass(frozen=True)
class RootGradation:
    type: str
    rank: int
    cross: tuple[int, ...]
    positive_roots: tuple[tuple[int, ...], ...]
    theta: tuple[int, ...]
    depth: int
    by_degree: dict  # p > 0 -> positive roots of s-length p (including 0)
    dims: dict  # p -> dim g_p for -depth <= p <= depth

    @property
    def marks(self) -> tuple[int, ...]:
        return tuple(int(i + 1 in self.cross) for i in range(self.rank))

    def s_length(self, root) -> int:
        return sum(m * s for m, s in zip(root, self.marks))

    def dim_vector(self) -> list[int]:
        return [self.dims[p] for p in range(-self.depth, self.depth + 1)]

    @property
    def total_dim(self) -> int:
        return sum(self.dims.values())

    @property
    def canonical(self) -> tuple[str, int, tuple[int, ...]]:
        return (self.type, self.rank, canonical_cross(self.type, self.rank, self.cross))

    def is_fundamental(self) -> bool:
        """Every root of degree p >= 2 is a root of degree p-1 plus a root of degree 1."""
        ones = self.by_degree.get(1, ())
        for p in range(2, self.depth + 1):
            prev = set(self.by_degree.get(p - 1, ()))
            for alpha in self.by_degree.get(p, ()):
                if not any(tuple(a - b for a, b in zip(alpha, g)) in prev for g in ones):
                    return False
        return True

    def report(self) -> dict:
        return {
            "type": self.type,
            "rank": self.rank,
            "cross": list(self.cross),
            "canonical_cross": list(self.canonical[2]),
            "depth": self.depth,
            "theta": list(self.theta),
            "graded_dims": {str(p): d for p, d in sorted(self.dims.items())},
            "dim_vector": self.dim_vector(),
            "total_dim": self.total_dim,
            "fundamental": self.is_fundamental(),
        }


def grade_by_marks(typ: str, l: int, cross) -> RootGradation:
    typ = _check_rank(typ, l)
    cross = tuple(sorted(set(int(i) for i in cross)))
    if not cross:
        raise ValueError("at least one node must be crossed")
    if not all(1 <= i <= l for i in cross):
        raise ValueError(f"crossed nodes must lie in 1..{l}")
    roots = positive_roots(typ, l)
    theta = highest_root(typ, l)
    marks = [int(i + 1 in cross) for i in range(l)]
    length = lambda r: sum(m * s for m, s in zip(r, marks))
    by_degree: dict[int, tuple] = {}
    for r in roots:
        by_degree.setdefault(length(r), []).append(r)
    by_degree = {p: tuple(rs) for p, rs in by_degree.items()}
    depth = length(theta)
    dims = {}
    for p in range(1, depth + 1):
        dims[p] = dims[-p] = len(by_degree.get(p, ()))
    dims[0] = l + 2 * len(by_degree.get(0, ()))
    dims = dict(sorted(dims.items()))
    return RootGradation(typ, l, cross, roots, theta, depth, by_degree, dims)


@dataclass(frozen=True)
class TopDimensionCheck:
    dim_is_one: bool
    criterion_holds: bool

    @property
    def agree(self) -> bool:
        return self.dim_is_one == self.criterion_holds

    def __bool__(self):
        return self.agree


def dim_top_is_one(rg: RootGradation) -> TopDimensionCheck:
    """Compare ``dim g_{-mu} == 1`` with the pairing test on the uncrossed nodes."""
    count = rg.dims[-rg.depth]
    crit = all(
        pairing(rg.type, rg.rank, rg.theta, i) == 0
        for i in range(1, rg.rank + 1)
        if i not in rg.cross
    )
    return TopDimensionCheck(count == 1, crit)


def component_highest_root(rg: RootGradation, i: int) -> tuple[tuple[int, ...], bool]:
    """Highest root of the diagram component through node ``i`` of the uncrossed nodes plus ``i``.

    Returns the root (full-length coordinates) and whether ``m_i`` of it is 1,
    the abelian test for the ``i``-th summand of ``g_-1``.
    """
    if i not in rg.cross:
        raise ValueError(f"node {i} is not crossed")
    g = gram_matrix(rg.type, rg.rank)
    nodes = {j for j in range(1, rg.rank + 1) if j not in rg.cross} | {i}
    comp, stack = {i}, [i]
    while stack:
        a = stack.pop()
        for b in nodes:
            if b not in comp and g[a - 1][b - 1] != 0:
                comp.add(b)
                stack.append(b)
    support = [r for r in rg.positive_roots if all(r[j - 1] == 0 for j in range(1, rg.rank + 1) if j not in comp)]
    theta_i = max(support, key=sum)
    return theta_i, theta_i[i - 1] == 1


def prolongation_exception(rg: RootGradation) -> str:
    """For one crossed node: ``"is-prolongation"`` or which exception applies.

    The exceptions are depth one, and depth two with a one-dimensional
    degree -2 component.
    """
    if len(rg.cross) != 1:
        raise ValueError("needs exactly one crossed node (irreducible g_-1)")
    if rg.depth == 1:
        return "exception-first-kind"
    if rg.depth == 2 and rg.dims[-2] == 1:
        return "exception-second-kind-dim1"
    return "is-prolongation"
