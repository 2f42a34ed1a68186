"""Polynomial vector fields with weighted gradations: truncated W(m; s) and K(n).

A polynomial is a dict ``{exponent tuple: Fraction}``.  A vector field is a
tuple of polynomials, component ``i`` multiplying ``∂/∂x_i``.  A field is
homogeneous of degree ``p`` for weights ``s`` when component ``i`` is spanned
by monomials of weight ``p + s_i``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, NamedTuple, Sequence

from .exactlin import Echelon, Subspace
from .fgla import CheckResult, GradedLieAlgebra

__all__ = [
    "WeightedMonomial",
    "PolyVectorField",
    "FieldLayer",
    "weighted_monomials",
    "weighted_poly_dim",
    "w_layer",
    "k_layer",
    "contact_weights",
    "w_algebra",
    "k_algebra",
    "check_transitive_cartan",
]

Poly = dict


class WeightedMonomial(NamedTuple):
    exponents: tuple
    weights: tuple

    @property
    def weight(self) -> int:
        return sum(s * a for s, a in zip(self.weights, self.exponents))


def _padd(acc: Poly, coef, poly: Poly):
    if not coef:
        return
    for e, c in poly.items():
        nv = acc.get(e, 0) + coef * c
        if nv:
            acc[e] = nv
        else:
            acc.pop(e, None)


def _pmul(a: Poly, b: Poly) -> Poly:
    out: Poly = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            _padd(out, ca * cb, {tuple(x + y for x, y in zip(ea, eb)): 1})
    return out


def _pdiff(f: Poly, i: int) -> Poly:
    out: Poly = {}
    for e, c in f.items():
        if e[i]:
            d = list(e)
            d[i] -= 1
            out[tuple(d)] = c * e[i]
    return out


@dataclass(frozen=True)
class PolyVectorField:
    components: tuple  # of Poly

    @property
    def nvars(self) -> int:
        return len(self.components)

    @classmethod
    def monomial(cls, nvars: int, exponents, i: int, coef=1) -> "PolyVectorField":
        comps = [dict() for _ in range(nvars)]
        comps[i] = {tuple(exponents): Fraction(coef)}
        return cls(tuple(comps))

    def apply(self, f: Poly) -> Poly:
        out: Poly = {}
        for i, pi in enumerate(self.components):
            if pi:
                _padd(out, 1, _pmul(pi, _pdiff(f, i)))
        return out

    def bracket(self, other: "PolyVectorField") -> "PolyVectorField":
        comps = []
        for j in range(self.nvars):
            c = self.apply(other.components[j])
            _padd(c, -1, other.apply(self.components[j]))
            comps.append(c)
        return PolyVectorField(tuple(comps))

    def is_zero(self) -> bool:
        return not any(self.components)

    def degree(self, weights: Sequence[int]) -> int | None:
        """Weighted degree if homogeneous, None for zero; raises if inhomogeneous."""
        degs = set()
        for i, pi in enumerate(self.components):
            for e in pi:
                degs.add(sum(s * a for s, a in zip(weights, e)) - weights[i])
        if not degs:
            return None
        if len(degs) > 1:
            raise ValueError("field is not homogeneous")
        return degs.pop()

    def __add__(self, other):
        comps = []
        for a, b in zip(self.components, other.components):
            c = dict(a)
            _padd(c, 1, b)
            comps.append(c)
        return PolyVectorField(tuple(comps))

    def scale(self, c) -> "PolyVectorField":
        c = Fraction(c)
        return PolyVectorField(tuple({e: c * v for e, v in p.items() if c * v} for p in self.components))

    def __str__(self):
        terms = []
        for i, pi in enumerate(self.components):
            for e, c in sorted(pi.items()):
                mono = "*".join(
                    f"x{k + 1}" + (f"^{a}" if a > 1 else "") for k, a in enumerate(e) if a
                ) or "1"
                terms.append(f"{c}*{mono}*d{i + 1}")
        return " + ".join(terms) or "0"


def weighted_monomials(weights: Sequence[int], q: int) -> Iterator[tuple]:
    """Exponent vectors of weighted degree ``q`` (lexicographically descending)."""
    weights = tuple(weights)
    if any(s < 1 for s in weights):
        raise ValueError("weights must be positive")
    m = len(weights)

    def rec(i, rest):
        if i == m - 1:
            if rest % weights[i] == 0:
                yield (rest // weights[i],)
            return
        for a in range(rest // weights[i], -1, -1):
            for tail in rec(i + 1, rest - a * weights[i]):
                yield (a,) + tail

    if q < 0:
        return iter(())
    return rec(0, q)


def weighted_poly_dim(m: int, weights: Sequence[int], q: int) -> int:
    if len(weights) != m:
        raise ValueError("need one weight per variable")
    if q < 0:
        return 0
    return sum(1 for _ in weighted_monomials(weights, q))


def w_layer(m: int, weights: Sequence[int], p: int) -> list[PolyVectorField]:
    """Monomial basis ``x^a ∂_i`` of the degree-``p`` part of W(m; weights), ordered by ``i`` then ``a``."""
    weights = tuple(weights)
    if len(weights) != m:
        raise ValueError("need one weight per variable")
    out = []
    for i in range(m):
        for exp in weighted_monomials(weights, p + weights[i]):
            out.append(PolyVectorField.monomial(m, exp, i))
    return out


class FieldLayer:
    """Basis of a homogeneous space of fields, with coordinates via the W-layer monomial basis."""

    def __init__(self, nvars: int, weights: Sequence[int], p: int, fields: Sequence[PolyVectorField]):
        self.nvars = nvars
        self.weights = tuple(weights)
        self.p = p
        self.ambient = w_layer(nvars, self.weights, p)
        self.index = {}
        for t, f in enumerate(self.ambient):
            i = next(k for k, c in enumerate(f.components) if c)
            (e,) = f.components[i].keys()
            self.index[(i, e)] = t
        vecs = [self.flatten(f) for f in fields]
        self.space = Subspace.from_sparse(vecs, len(self.ambient))
        self.fields = [self.unflatten(v) for v in self.space.vectors]
        self._pivots = self.space.pivots if self.space.dim else []

    def __len__(self):
        return len(self.fields)

    @property
    def dim(self) -> int:
        return len(self.fields)

    def flatten(self, f: PolyVectorField) -> dict:
        out = {}
        for i, pi in enumerate(f.components):
            for e, c in pi.items():
                if (i, e) not in self.index:
                    raise ValueError(f"field has a term outside degree {self.p}")
                out[self.index[(i, e)]] = c
        return out

    def unflatten(self, v) -> PolyVectorField:
        comps = [dict() for _ in range(self.nvars)]
        for t, c in enumerate(v):
            if c:
                f = self.ambient[t]
                i = next(k for k, cc in enumerate(f.components) if cc)
                (e,) = f.components[i].keys()
                comps[i][e] = Fraction(c)
        return PolyVectorField(tuple(comps))

    def coordinates(self, f: PolyVectorField) -> dict[int, Fraction]:
        """Sparse coordinates in this layer's basis; raises if ``f`` lies outside."""
        v = self.flatten(f)
        coords = {k: v[pc] for k, pc in enumerate(self._pivots) if v.get(pc)}
        recon: dict = {}
        for k, c in coords.items():
            for t, x in enumerate(self.space.vectors[k]):
                if x:
                    recon[t] = recon.get(t, 0) + c * x
        recon = {t: x for t, x in recon.items() if x}
        if recon != v:
            raise ValueError("field is not in this layer")
        return coords


def contact_weights(n: int) -> tuple[int, ...]:
    return (1,) * (2 * n) + (2,)


def _contact_form(n: int) -> list[Poly]:
    """Coefficients of ω = dx_{2n+1} - Σ x_{i+n} dx_i."""
    nv = 2 * n + 1
    zero = (0,) * nv
    form: list[Poly] = [dict() for _ in range(nv)]
    for i in range(n):
        e = [0] * nv
        e[i + n] = 1
        form[i] = {tuple(e): Fraction(-1)}
    form[2 * n] = {zero: Fraction(1)}
    return form


def _lie_derivative(field: PolyVectorField, form: list[Poly]) -> list[Poly]:
    """Coefficients of D(Σ a_j dx_j) = Σ (D a_j) dx_j + Σ a_i d(P_i)."""
    out = []
    for j in range(len(form)):
        c = field.apply(form[j])
        for i, ai in enumerate(form):
            if ai:
                _padd(c, 1, _pmul(ai, _pdiff(field.components[i], j)))
        out.append(c)
    return out


def k_layer(n: int, p: int) -> list[PolyVectorField]:
    """Basis of K(n)_p, cut out of W(2n+1; (1,..,1,2))_p by the contact condition.

    ``D ω ∈ A ω`` holds iff, with ``f`` the ``dx_{2n+1}`` coefficient of ``Dω``,
    the remaining coefficients equal ``f`` times those of ``ω``.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    nv = 2 * n + 1
    weights = contact_weights(n)
    ambient = w_layer(nv, weights, p)
    form = _contact_form(n)
    eqs: dict = {}
    for t, field in enumerate(ambient):
        ld = _lie_derivative(field, form)
        f = ld[nv - 1]
        for j in range(nv - 1):
            cond = dict(ld[j])
            _padd(cond, -1, _pmul(f, form[j]))
            for e, c in cond.items():
                eqs.setdefault((j, e), {})[t] = c
    ech = Echelon(len(ambient))
    for row in eqs.values():
        row = {t: c for t, c in row.items() if c}
        if row:
            ech.add(row)
    space = Subspace.from_sparse(ech.kernel_vectors(), len(ambient))
    fields = []
    for v in space.vectors:
        acc = PolyVectorField(tuple(dict() for _ in range(nv)))
        for t, c in enumerate(v):
            if c:
                acc = acc + ambient[t].scale(c)
        fields.append(acc)
    return fields


def _algebra(nvars, weights, layers: dict[int, FieldLayer], top: int) -> GradedLieAlgebra:
    degs = sorted(p for p, lay in layers.items() if lay.dim)
    dims = {p: layers[p].dim for p in degs}
    labels = {p: [str(f) for f in layers[p].fields] for p in degs}
    table = {}
    for x, p in enumerate(degs):
        for q in degs[x:]:
            if p + q > top or p + q not in dims:
                continue
            for i, fa in enumerate(layers[p].fields):
                for j, fb in enumerate(layers[q].fields):
                    if (p, i) >= (q, j):
                        continue
                    br = fa.bracket(fb)
                    if not br.is_zero():
                        table[((p, i), (q, j))] = layers[p + q].coordinates(br)
    return GradedLieAlgebra(dims, table, labels, top=top)


def w_algebra(m: int, weights: Sequence[int], lo: int, hi: int) -> GradedLieAlgebra:
    """W(m; weights) truncated to degrees ``lo..hi`` (``lo`` at most the bottom degree)."""
    weights = tuple(weights)
    lo = max(lo, -max(weights))
    layers = {p: FieldLayer(m, weights, p, w_layer(m, weights, p)) for p in range(lo, hi + 1)}
    return _algebra(m, weights, layers, hi)


def k_algebra(n: int, lo: int, hi: int) -> GradedLieAlgebra:
    """K(n) truncated to degrees ``max(lo, -2)..hi``."""
    nv = 2 * n + 1
    weights = contact_weights(n)
    lo = max(lo, -2)
    layers = {p: FieldLayer(nv, weights, p, k_layer(n, p)) for p in range(lo, hi + 1)}
    return _algebra(nv, weights, layers, hi)


def check_transitive_cartan(layers: dict[int, Sequence[PolyVectorField]]) -> CheckResult:
    """Nonnegative layers act faithfully on the negative ones (fields given explicitly)."""
    negative = [f for p, fs in layers.items() if p < 0 for f in fs]
    for p, fs in sorted(layers.items()):
        if p < 0 or not fs:
            continue
        # X -> ([X, e])_e is injective iff the stacked images are independent
        ech = Echelon(0)
        vectors = []
        for f in fs:
            images = {}
            for e_idx, e in enumerate(negative):
                br = f.bracket(e)
                for i, comp in enumerate(br.components):
                    for mono, c in comp.items():
                        images[(e_idx, i, mono)] = c
            vectors.append(images)
        keys = sorted({k for v in vectors for k in v})
        pos = {k: t for t, k in enumerate(keys)}
        ech = Echelon(len(keys))
        for idx, v in enumerate(vectors):
            if not ech.add({pos[k]: c for k, c in v.items()}):
                return CheckResult(False, (p, idx), f"degree {p} fields act dependently")
    return CheckResult(True)
