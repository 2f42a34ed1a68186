"""Finite graded Lie algebras with exact structure constants.

A basis element is addressed as ``(p, i)``: the ``i``-th basis vector of the
degree ``p`` component.  Brackets are stored only for ``a < b`` in the
lexicographic order on these pairs; the other triangle follows from
antisymmetry.  Elements of one homogeneous component are passed around either
as dense tuples or as sparse ``{index: Fraction}`` dicts.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .exactlin import (
    Echelon,
    Matrix,
    Subspace,
    kernel_basis,
    rational_from_str,
    rational_to_str,
    solve,
)

__all__ = [
    "GradedLieAlgebra",
    "PseudoProduct",
    "GradedMap",
    "CheckResult",
    "HomomorphismError",
    "check_jacobi",
    "check_grading",
    "check_antisymmetry",
    "is_fundamental",
    "is_nondegenerate",
    "centralizer_of_gm2_in_gm1",
    "graded_ideal_generated_by",
    "quotient",
    "subalgebra_generated_by",
    "extend_hom",
    "extend_graded_automorphism",
    "ad_power",
]


class HomomorphismError(ValueError):
    """A linear map on degree -1 does not extend to a bracket-preserving map."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


@dataclass(frozen=True)
class CheckResult:
    ok: bool
    witness: object = None
    detail: str = ""

    def __bool__(self):
        return self.ok


def _axpy(acc: dict, coef, vec: Mapping):
    if not coef:
        return
    for k, v in vec.items():
        nv = acc.get(k, 0) + coef * v
        if nv:
            acc[k] = nv
        else:
            acc.pop(k, None)


def sparse(vec: Iterable) -> dict[int, Fraction]:
    return {i: Fraction(x) for i, x in enumerate(vec) if x}


def dense(vec: Mapping, dim: int) -> tuple:
    out = [Fraction(0)] * dim
    for i, x in vec.items():
        out[i] = x
    return tuple(out)


class GradedLieAlgebra:
    """Finite-dimensional graded Lie algebra given by structure constants.

    ``brackets`` maps ``((p, i), (q, j))`` to a sparse vector in degree
    ``p + q``.  Either triangle may be supplied; the stored copy keeps ``a < b``.
    When ``top`` is set the algebra is a truncation: brackets landing above
    ``top`` are discarded rather than rejected.
    """

    def __init__(
        self,
        dims: Mapping[int, int],
        brackets: Mapping | None = None,
        labels: Mapping[int, Sequence[str]] | None = None,
        pseudo_product: "PseudoProduct | None" = None,
        top: int | None = None,
    ):
        self.dims = {int(p): int(d) for p, d in sorted(dims.items()) if d}
        self.degrees = sorted(self.dims)
        self.top = top
        if labels is None:
            labels = {}
        self.labels = {
            p: tuple(labels.get(p, [f"g{p}[{i}]" for i in range(d)]))
            for p, d in self.dims.items()
        }
        table: dict[tuple, dict[int, Fraction]] = {}
        for (a, b), vec in (brackets or {}).items():
            a, b = tuple(a), tuple(b)
            self._check_basis(a)
            self._check_basis(b)
            if isinstance(vec, Mapping):
                vec = {int(k): Fraction(v) for k, v in vec.items() if v}
            else:
                vec = sparse(vec)
            if not vec:
                continue
            if a == b:
                raise ValueError(f"nonzero self-bracket at {a}")
            deg = a[0] + b[0]
            if deg not in self.dims:
                if top is not None and deg > top:
                    continue
                raise ValueError(f"bracket {a},{b} lands in absent degree {deg}")
            if max(vec) >= self.dims[deg]:
                raise ValueError(f"bracket {a},{b} has coordinates outside degree {deg}")
            if b < a:
                a, b = b, a
                vec = {k: -v for k, v in vec.items()}
            if (a, b) in table and table[(a, b)] != vec:
                raise ValueError(f"conflicting entries for bracket {a},{b}")
            table[(a, b)] = vec
        self._table = table
        self.pseudo_product = pseudo_product

    def _check_basis(self, a):
        p, i = a
        if p not in self.dims or not 0 <= i < self.dims[p]:
            raise ValueError(f"basis element {a} does not exist")

    # basic structure

    @property
    def dim(self) -> int:
        return sum(self.dims.values())

    @property
    def depth(self) -> int:
        neg = [p for p in self.degrees if p < 0]
        return -min(neg) if neg else 0

    def dim_of(self, p: int) -> int:
        return self.dims.get(p, 0)

    def basis(self) -> list[tuple[int, int]]:
        return [(p, i) for p in self.degrees for i in range(self.dims[p])]

    def dim_vector(self) -> dict[int, int]:
        return dict(self.dims)

    def structure_constants(self):
        """Iterate over stored ``((p,i),(q,j)) -> sparse vector`` entries with ``a < b``."""
        return iter(self._table.items())

    def bracket_basis(self, a, b) -> dict[int, Fraction]:
        """Bracket of two basis elements, as a sparse vector in degree ``a[0]+b[0]``."""
        if a == b:
            return {}
        if a < b:
            return self._table.get((a, b), {})
        v = self._table.get((b, a))
        return {k: -x for k, x in v.items()} if v else {}

    def bracket(self, p: int, x: Mapping, q: int, y: Mapping) -> dict[int, Fraction]:
        """Bracket of ``x`` in degree ``p`` with ``y`` in degree ``q`` (sparse in, sparse out)."""
        out: dict[int, Fraction] = {}
        if p + q not in self.dims:
            return out
        for i, a in x.items():
            for j, b in y.items():
                _axpy(out, a * b, self.bracket_basis((p, i), (q, j)))
        return out

    def bracket_dense(self, p: int, x: Sequence, q: int, y: Sequence) -> tuple:
        return dense(self.bracket(p, sparse(x), q, sparse(y)), self.dim_of(p + q))

    def negative_part(self) -> "GradedLieAlgebra":
        dims = {p: d for p, d in self.dims.items() if p < 0}
        table = {k: v for k, v in self._table.items() if k[0][0] < 0 and k[1][0] < 0}
        return GradedLieAlgebra(
            dims, table, {p: self.labels[p] for p in dims}, self.pseudo_product
        )

    def with_bracket(self, a, b, vec) -> "GradedLieAlgebra":
        """Copy with one structure constant replaced (used to build broken examples)."""
        table = dict(self._table)
        a, b = tuple(a), tuple(b)
        if b < a:
            a, b = b, a
            vec = {k: -v for k, v in (vec.items() if isinstance(vec, Mapping) else sparse(vec).items())}
        table[(a, b)] = vec
        return GradedLieAlgebra(self.dims, table, self.labels, self.pseudo_product, self.top)

    def __eq__(self, other):
        if not isinstance(other, GradedLieAlgebra):
            return NotImplemented
        return self.dims == other.dims and self._table == other._table and self.top == other.top

    def __repr__(self):
        dims = ", ".join(f"{p}: {d}" for p, d in self.dims.items())
        return f"GradedLieAlgebra({{{dims}}})"

    # serialization

    def to_dict(self) -> dict:
        out = {
            "degrees": self.degrees,
            "dims": {str(p): d for p, d in self.dims.items()},
            "brackets": [
                {
                    "p": a[0],
                    "i": a[1],
                    "q": b[0],
                    "j": b[1],
                    "out": [rational_to_str(x) for x in dense(vec, self.dims[a[0] + b[0]])],
                }
                for (a, b), vec in sorted(self._table.items())
            ],
            "labels": {str(p): list(ls) for p, ls in self.labels.items()},
        }
        if self.top is not None:
            out["top"] = self.top
        if self.pseudo_product is not None:
            out["pseudo_product"] = self.pseudo_product.to_dict()
        return out

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    @classmethod
    def from_dict(cls, data: Mapping) -> "GradedLieAlgebra":
        dims = {int(p): int(d) for p, d in data["dims"].items()}
        brackets = {}
        for entry in data.get("brackets", []):
            a = (int(entry["p"]), int(entry["i"]))
            b = (int(entry["q"]), int(entry["j"]))
            brackets[(a, b)] = [rational_from_str(x) for x in entry["out"]]
        labels = {int(p): ls for p, ls in data.get("labels", {}).items()}
        pp = None
        if data.get("pseudo_product"):
            pp = PseudoProduct.from_dict(data["pseudo_product"], dims.get(-1, 0))
        return cls(dims, brackets, labels, pp, data.get("top"))

    @classmethod
    def from_json(cls, text: str) -> "GradedLieAlgebra":
        return cls.from_dict(json.loads(text))


@dataclass(frozen=True)
class PseudoProduct:
    """Splitting of the degree -1 component into two abelian halves ``e`` and ``f``."""

    e: Subspace
    f: Subspace

    def validate(self, g: GradedLieAlgebra) -> CheckResult:
        n = g.dim_of(-1)
        if self.e.ambient_dim != n or self.f.ambient_dim != n:
            return CheckResult(False, None, "e and f must live in degree -1")
        if self.e.dim + self.f.dim != n or self.e.intersect(self.f).dim != 0:
            return CheckResult(False, None, "e and f do not split degree -1")
        for half, name in ((self.e, "e"), (self.f, "f")):
            for x, y in combinations(half.vectors, 2):
                if g.bracket(-1, sparse(x), -1, sparse(y)):
                    return CheckResult(False, (name, x, y), f"[{name},{name}] != 0")
        return CheckResult(True)

    def to_dict(self) -> dict:
        return {
            "e": [[rational_to_str(x) for x in v] for v in self.e.vectors],
            "f": [[rational_to_str(x) for x in v] for v in self.f.vectors],
        }

    @classmethod
    def from_dict(cls, data: Mapping, n: int) -> "PseudoProduct":
        conv = lambda rows: [[rational_from_str(x) for x in r] for r in rows]
        return cls(Subspace.span(conv(data["e"]), n), Subspace.span(conv(data["f"]), n))

    @classmethod
    def split(cls, m: int, n: int) -> "PseudoProduct":
        """First ``m`` basis vectors span ``e``, the next ``n`` span ``f``."""
        unit = lambda k: [Fraction(int(j == k)) for j in range(m + n)]
        return cls(
            Subspace.span([unit(k) for k in range(m)], m + n),
            Subspace.span([unit(k) for k in range(m, m + n)], m + n),
        )


@dataclass(frozen=True)
class GradedMap:
    """Linear map shifting degrees by ``shift``; ``components[p]`` maps degree ``p``
    of the source to degree ``p + shift`` of the target (columns = source basis)."""

    source: GradedLieAlgebra
    target: GradedLieAlgebra
    shift: int
    components: dict = field(default_factory=dict)

    def component(self, p: int) -> Matrix:
        m = self.components.get(p)
        if m is None:
            return Matrix.zeros(self.target.dim_of(p + self.shift), self.source.dim_of(p))
        return m

    def apply(self, p: int, vec: Sequence) -> tuple:
        return self.component(p).apply(vec)

    def compose(self, inner: "GradedMap") -> "GradedMap":
        """``self ∘ inner``."""
        comps = {
            p: self.component(p + inner.shift) @ inner.component(p)
            for p in inner.source.degrees
        }
        return GradedMap(inner.source, self.target, self.shift + inner.shift, comps)

    def ranks(self) -> dict[int, int]:
        return {p: self.component(p).rank() for p in self.source.degrees}

    def is_injective(self) -> bool:
        return all(self.ranks()[p] == self.source.dims[p] for p in self.source.degrees)

    def is_surjective(self) -> bool:
        r = self.ranks()
        return all(
            r.get(q - self.shift, 0) == d for q, d in self.target.dims.items()
        )

    def is_bijective(self) -> bool:
        return self.is_injective() and self.is_surjective()

    def inverse(self) -> "GradedMap":
        if self.shift != 0 or not self.is_bijective():
            raise ValueError("only bijective degree-preserving maps can be inverted")
        comps = {}
        for p in self.source.degrees:
            m = self.component(p)
            n = m.rows
            cols = [solve(m, [Fraction(int(i == k)) for i in range(n)]) for k in range(n)]
            comps[p] = Matrix.from_rows(cols, n).transpose()
        return GradedMap(self.target, self.source, 0, comps)

    def bracket_violation(self):
        """First basis pair ``(a, b)`` with ``f[a,b] != [f a, f b]``, or None."""
        s, t, r = self.source, self.target, self.shift
        if r != 0:
            raise ValueError("bracket compatibility is checked for degree-0 maps")
        cols = {p: [self.component(p).column(i) for i in range(s.dims[p])] for p in s.degrees}
        basis = s.basis()
        for x in range(len(basis)):
            a = basis[x]
            for y in range(x + 1, len(basis)):
                b = basis[y]
                deg = a[0] + b[0]
                tdim = t.dim_of(deg)
                if s.dim_of(deg):
                    lhs = self.apply(deg, dense(s.bracket_basis(a, b), s.dim_of(deg)))
                else:
                    lhs = (Fraction(0),) * tdim
                rhs = t.bracket_dense(a[0], cols[a[0]][a[1]], b[0], cols[b[0]][b[1]])
                if lhs != rhs:
                    return (a, b, lhs, rhs)
        return None

    def matrices_equal(self, other: "GradedMap") -> bool:
        degs = set(self.source.degrees) | set(other.source.degrees)
        return self.shift == other.shift and all(
            self.component(p) == other.component(p) for p in degs
        )


# checks


def check_antisymmetry(g: GradedLieAlgebra) -> CheckResult:
    for a in g.basis():
        if g.bracket_basis(a, a):
            return CheckResult(False, (a, a), "nonzero self-bracket")
        for b in g.basis():
            x, y = g.bracket_basis(a, b), g.bracket_basis(b, a)
            if {k: -v for k, v in y.items()} != x:
                return CheckResult(False, (a, b), "antisymmetry fails")
    return CheckResult(True)


def check_grading(g: GradedLieAlgebra) -> CheckResult:
    for (a, b), vec in g.structure_constants():
        deg = a[0] + b[0]
        if deg not in g.dims or max(vec) >= g.dims[deg]:
            return CheckResult(False, (a, b), "bracket leaves the grading")
    return CheckResult(True)


def check_jacobi(g: GradedLieAlgebra, max_degree: int | None = None) -> CheckResult:
    """Exact Jacobi identity on all basis triples.

    For truncated algebras (``g.top`` set, or ``max_degree`` given) only triples
    whose pairwise brackets all stay at or below the cut are checked.
    """
    cut = max_degree if max_degree is not None else g.top
    basis = g.basis()
    nb = len(basis)
    for x in range(nb):
        a = basis[x]
        for y in range(x + 1, nb):
            b = basis[y]
            if cut is not None and a[0] + b[0] > cut:
                continue
            for z in range(y + 1, nb):
                c = basis[z]
                if cut is not None and (b[0] + c[0] > cut or a[0] + c[0] > cut):
                    continue
                tot = a[0] + b[0] + c[0]
                if tot not in g.dims:
                    continue
                acc: dict = {}
                for u, v, w in ((a, b, c), (b, c, a), (c, a, b)):
                    inner = g.bracket_basis(u, v)
                    for k, coef in inner.items():
                        _axpy(acc, coef, g.bracket_basis((u[0] + v[0], k), w))
                if acc:
                    return CheckResult(False, (a, b, c), f"Jacobi fails: {acc}")
    return CheckResult(True)


def _span_of_brackets(g, p, q) -> Subspace:
    """Span of [g_p, g_q] inside g_{p+q}."""
    n = g.dim_of(p + q)
    ech = Echelon(n)
    for i in range(g.dim_of(p)):
        for j in range(g.dim_of(q)):
            ech.add(g.bracket_basis((p, i), (q, j)))
    return Subspace._from_echelon(ech)


def is_fundamental(g: GradedLieAlgebra) -> CheckResult:
    """Negative part generated by degree -1: ``g_{p-1} = [g_p, g_{-1}]``."""
    neg = [p for p in g.degrees if p < 0]
    if not neg or g.dim_of(-1) == 0:
        return CheckResult(False, -1, "degree -1 is zero")
    mu = -min(neg)
    for p in range(-1, -mu, -1):
        if g.dim_of(p - 1) == 0:
            return CheckResult(False, p - 1, "gap in the negative degrees")
        if _span_of_brackets(g, p, -1).dim != g.dim_of(p - 1):
            return CheckResult(False, p - 1, f"[g_{p}, g_-1] does not span g_{p - 1}")
    return CheckResult(True)


def _ad_on(g, p: int, q: int) -> Matrix:
    """Matrix of x -> ([x, e_j])_j from g_p into (g_{p+q})^{dim g_q}."""
    rows = []
    n = g.dim_of(p + q)
    for j in range(g.dim_of(q)):
        cols = [dense(g.bracket_basis((p, i), (q, j)), n) for i in range(g.dim_of(p))]
        for r in range(n):
            rows.append([c[r] for c in cols])
    return Matrix.from_rows(rows, g.dim_of(p)) if rows else Matrix.zeros(0, g.dim_of(p))


def _kernel(m: Matrix) -> Subspace:
    if m.rows == 0:
        return Subspace.full(m.cols)
    return kernel_basis(m)


def is_nondegenerate(g: GradedLieAlgebra) -> CheckResult:
    ker = _kernel(_ad_on(g, -1, -1))
    if ker.dim:
        return CheckResult(False, ker.vectors[0], "degree -1 has a central direction")
    return CheckResult(True)


def centralizer_of_gm2_in_gm1(g: GradedLieAlgebra) -> Subspace:
    if g.depth < 2:
        raise ValueError("centralizer of g_-2 needs depth >= 2")
    return _kernel(_ad_on(g, -1, -2))


# ideals, quotients, subalgebras


def graded_ideal_generated_by(
    g: GradedLieAlgebra, generators: Mapping[int, Subspace | Iterable[Sequence]]
) -> dict[int, Subspace]:
    """Smallest graded ideal containing the given homogeneous vectors."""
    ech = {p: Echelon(d) for p, d in g.dims.items()}
    work = []
    for p, vecs in generators.items():
        if p not in g.dims:
            raise ValueError(f"degree {p} is not stored")
        if isinstance(vecs, Subspace):
            vecs = vecs.vectors
        for v in vecs:
            sv = sparse(v)
            if ech[p].add(sv):
                work.append((p, sv))
    basis = g.basis()
    while work:
        p, v = work.pop()
        for q, j in basis:
            if p + q not in g.dims:
                continue
            w = g.bracket(p, v, q, {j: Fraction(1)})
            if w and ech[p + q].add(w):
                work.append((p + q, w))
    return {p: Subspace._from_echelon(e) for p, e in ech.items()}


def _is_ideal(g, ideal: Mapping[int, Subspace]):
    for p, sub in ideal.items():
        for v in sub.vectors:
            sv = sparse(v)
            for q, j in g.basis():
                if p + q not in g.dims:
                    continue
                w = g.bracket(p, sv, q, {j: Fraction(1)})
                if w and not ideal[p + q].contains(dense(w, g.dims[p + q])):
                    return (p, v, (q, j))
    return None


def quotient(g: GradedLieAlgebra, ideal: Mapping[int, Subspace]):
    """Quotient algebra and the projection map.

    The quotient basis of each degree is the set of unit vectors on the
    non-pivot columns of the ideal's RREF basis.
    """
    ideal = {p: ideal.get(p, Subspace.zero(d)) for p, d in g.dims.items()}
    bad = _is_ideal(g, ideal)
    if bad is not None:
        raise ValueError(f"not a graded ideal; witness {bad}")
    proj, keep = {}, {}
    for p, sub in ideal.items():
        proj[p], _ = sub.quotient_map()
        pset = set(sub.pivots)
        keep[p] = [c for c in range(g.dims[p]) if c not in pset]
    dims = {p: len(keep[p]) for p in g.degrees}
    table = {}
    for p in g.degrees:
        for x, c in enumerate(keep[p]):
            for q in g.degrees:
                if p + q not in g.dims or dims[p + q] == 0:
                    continue
                for y, c2 in enumerate(keep[q]):
                    if (p, x) >= (q, y):
                        continue
                    w = g.bracket_basis((p, c), (q, c2))
                    if w:
                        img = sparse(proj[p + q].apply(dense(w, g.dims[p + q])))
                        if img:
                            table[((p, x), (q, y))] = img
    labels = {p: [g.labels[p][c] for c in keep[p]] for p in g.degrees}
    pp = None
    if g.pseudo_product is not None and dims.get(-1):
        e = Subspace.span([proj[-1].apply(v) for v in g.pseudo_product.e.vectors], dims[-1])
        f = Subspace.span([proj[-1].apply(v) for v in g.pseudo_product.f.vectors], dims[-1])
        pp = PseudoProduct(e, f)
    top = g.top
    q_alg = GradedLieAlgebra(dims, table, labels, pp, top)
    comps = {p: proj[p] for p in g.degrees}
    return q_alg, GradedMap(g, q_alg, 0, comps)


def subalgebra_generated_by(g: GradedLieAlgebra, w: Subspace):
    """Graded subalgebra generated by ``w`` inside degree -1, with its inclusion map."""
    if w.ambient_dim != g.dim_of(-1):
        raise ValueError("generating subspace must lie in degree -1")
    spans: dict[int, Subspace] = {}
    if w.dim:
        spans[-1] = w
    d = -2
    while spans and d >= min(g.degrees):
        if d not in g.dims:
            break
        ech = Echelon(g.dims[d])
        for a in range(-1, d // 2 - 1, -1):
            b = d - a
            if a not in spans or b not in spans:
                continue
            for x in spans[a].vectors:
                for y in spans[b].vectors:
                    ech.add(g.bracket(a, sparse(x), b, sparse(y)))
        if not len(ech):
            break
        spans[d] = Subspace._from_echelon(ech)
        d -= 1
    dims = {p: s.dim for p, s in spans.items()}
    table = {}
    for p, sp in spans.items():
        for q, sq in spans.items():
            if p + q not in spans:
                continue
            for i, x in enumerate(sp.vectors):
                for j, y in enumerate(sq.vectors):
                    if (p, i) >= (q, j):
                        continue
                    v = g.bracket_dense(p, x, q, y)
                    if any(v):
                        table[((p, i), (q, j))] = spans[p + q].coordinates(v)
    sub = GradedLieAlgebra(dims, table)
    comps = {p: s.basis.transpose() for p, s in spans.items()}
    return sub, GradedMap(sub, g, 0, comps)


# homomorphisms


def _product_basis(g: GradedLieAlgebra, p: int):
    """Pairs (i, j) such that the brackets [e_{p,i}, e_{-1,j}] form a basis of g_{p-1}."""
    n = g.dim_of(p - 1)
    ech = Echelon(n)
    chosen, vecs = [], []
    for i in range(g.dim_of(p)):
        for j in range(g.dim_of(-1)):
            v = g.bracket_basis((p, i), (-1, j))
            if v and ech.add(v):
                chosen.append((i, j))
                vecs.append(dense(v, n))
            if len(chosen) == n:
                return chosen, vecs
    if len(chosen) != n:
        raise ValueError(f"degree {p - 1} is not generated from degree {p}")
    return chosen, vecs


def extend_hom(
    source: GradedLieAlgebra,
    phi: Matrix,
    target: GradedLieAlgebra,
    check_pseudo_product: bool = True,
) -> GradedMap:
    """Extend ``phi`` (degree -1 of source to degree -1 of target) to a graded homomorphism.

    Each basis element of degree ``p-1`` is written as a combination of brackets
    ``[x, y]`` with ``x`` of degree ``p`` and ``y`` of degree -1; its image is the
    same combination of brackets of images.  The result is verified on every
    basis pair and :class:`HomomorphismError` is raised with a witness when the
    target does not satisfy the source's relations.
    """
    if not is_fundamental(source):
        raise ValueError("source must be fundamental")
    if phi.cols != source.dim_of(-1) or phi.rows != target.dim_of(-1):
        raise ValueError("phi must map degree -1 of source to degree -1 of target")
    if check_pseudo_product and source.pseudo_product and target.pseudo_product:
        for a, b in (
            (source.pseudo_product.e, target.pseudo_product.e),
            (source.pseudo_product.f, target.pseudo_product.f),
        ):
            for v in a.vectors:
                if not b.contains(phi.apply(v)):
                    raise ValueError("phi does not respect the pseudo-product structure")
    comps = {-1: phi}
    for p in range(-1, -source.depth, -1):
        chosen, vecs = _product_basis(source, p)
        n = len(vecs)
        basis_m = Matrix.from_rows(vecs, n).transpose()
        tdim = target.dim_of(p - 1)
        prev = comps[p]
        images = []
        for i, j in chosen:
            xi = prev.column(i)
            yj = phi.column(j)
            img = target.bracket_dense(p, xi, -1, yj) if tdim else ()
            images.append(img)
        # component = images * basis_m^{-1}
        cols = []
        for k in range(n):
            c = solve(basis_m, [Fraction(int(r == k)) for r in range(n)])
            col = [Fraction(0)] * tdim
            for coef, img in zip(c, images):
                if coef:
                    for r in range(tdim):
                        col[r] += coef * img[r]
            cols.append(col)
        comps[p - 1] = Matrix.from_rows(cols, tdim).transpose() if cols else Matrix.zeros(tdim, 0)
    result = GradedMap(source, target, 0, comps)
    bad = result.bracket_violation()
    if bad is not None:
        raise HomomorphismError("phi does not extend to a homomorphism", bad)
    return result


def extend_graded_automorphism(m: GradedLieAlgebra, phi: Matrix) -> GradedMap:
    """Unique graded automorphism of ``m`` restricting to ``phi`` on degree -1."""
    n = m.dim_of(-1)
    if phi.rows != n or phi.cols != n or phi.rank() != n:
        raise ValueError("phi must be an invertible map of degree -1")
    if m.pseudo_product is not None:
        pp = m.pseudo_product
        for half in (pp.e, pp.f):
            if not all(half.contains(phi.apply(v)) for v in half.vectors):
                raise ValueError("phi must preserve e and f")
    ext = extend_hom(m, phi, m)
    if not ext.is_bijective():
        raise ValueError("extension is not bijective")  # pragma: no cover
    return ext


def ad_power(g: GradedLieAlgebra, x: Sequence, k: int, y: Sequence) -> tuple[int, tuple]:
    """``ad(x)^k (y)`` for ``x, y`` in degree -1; returns ``(degree, vector)``."""
    deg, vec = -1, sparse(y)
    sx = sparse(x)
    for _ in range(k):
        vec = g.bracket(-1, sx, deg, vec)
        deg -= 1
    return deg, dense(vec, g.dim_of(deg))
