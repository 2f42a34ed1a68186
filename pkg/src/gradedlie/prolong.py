"""Tanaka prolongation of a fundamental graded Lie algebra, degree by degree.

An element of layer ``k >= 0`` is stored as the graded linear map it induces
on the negative part ``m``: for every degree ``p < 0`` a matrix sending
``m_p`` to ``g_{p+k}``.  Targets in nonnegative degrees are expressed in the
basis of the corresponding lower layer, so the layers form a tower.  Layer
``k`` is the solution space of the derivation rule

    X([u, v]) = [X(u), v] + [u, X(v)]        (u, v in m)

with all component matrices as unknowns, ordered by degree ``p`` ascending
and row-major inside each block.  The basis of every layer is the RREF basis
of that solution space.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exactlin import Echelon, Matrix, Subspace
from .fgla import CheckResult, GradedLieAlgebra, PseudoProduct, _axpy, dense, is_fundamental

__all__ = [
    "ProlongationLayer",
    "TruncatedProlongation",
    "derivations_degree0",
    "restricted_derivations_degree0",
    "prolong_layer",
    "restricted_prolong_layer",
    "truncated_prolongation",
    "verify_transitive",
]


@dataclass(frozen=True)
class ProlongationLayer:
    k: int
    basis: tuple  # of dict[p -> Matrix(dim g_{p+k} x dim m_p)]
    pivots: tuple = ()

    @property
    def dim(self) -> int:
        return len(self.basis)


class _Tower:
    def __init__(self, m: GradedLieAlgebra, layers: Sequence[ProlongationLayer]):
        self.m = m
        self.mu = m.depth
        self.neg = sorted(p for p in m.degrees if p < 0)
        self.layers = list(layers)
        # cols[s][a][(q, j)] = sparse image of basis vector j of m_q under element a of layer s
        self.cols = []
        for layer in self.layers:
            per = []
            for comp in layer.basis:
                d = {}
                for q in self.neg:
                    mat = comp[q]
                    for j in range(m.dims[q]):
                        col = {r: mat[r, j] for r in range(mat.rows) if mat[r, j]}
                        if col:
                            d[(q, j)] = col
                per.append(d)
            self.cols.append(per)

    def dim(self, s: int) -> int:
        if s < 0:
            return self.m.dim_of(s)
        if s < len(self.layers):
            return self.layers[s].dim
        raise IndexError(f"layer {s} not built yet")

    def act(self, s: int, a: int, u) -> dict:
        """[g_s[a], u] for a basis element u = (q, j) of m."""
        if s < 0:
            return self.m.bracket_basis((s, a), u)
        return self.cols[s][a].get(u, {})

    def _offsets(self, k: int):
        offs, n = {}, 0
        for p in self.neg:
            offs[p] = n
            n += self.dim(p + k) * self.m.dims[p]
        return offs, n

    def equations(self, k: int):
        """Sparse rows of the derivation rule for unknown degree-k maps."""
        m = self.m
        offs, nunk = self._offsets(k)
        unk = lambda p, r, c: offs[p] + r * m.dims[p] + c
        basis = m.basis()
        rows = []
        for x in range(len(basis)):
            a = basis[x]
            p, i = a
            for y in range(x + 1, len(basis)):
                b = basis[y]
                q, j = b
                tdeg = p + q + k
                if tdeg < -self.mu or self.dim(tdeg) == 0:
                    continue
                eq: dict[int, dict] = {}
                for l, coef in m.bracket_basis(a, b).items():
                    for c in range(self.dim(tdeg)):
                        _axpy(eq.setdefault(c, {}), coef, {unk(p + q, c, l): 1})
                for s_idx in range(self.dim(p + k)):
                    for c, coef in self.act(p + k, s_idx, b).items():
                        _axpy(eq.setdefault(c, {}), -coef, {unk(p, s_idx, i): 1})
                for s_idx in range(self.dim(q + k)):
                    for c, coef in self.act(q + k, s_idx, a).items():
                        _axpy(eq.setdefault(c, {}), coef, {unk(q, s_idx, j): 1})
                rows.extend(r for r in eq.values() if r)
        return rows, offs, nunk

    def solve_layer(self, k: int, extra_rows=()) -> ProlongationLayer:
        rows, offs, nunk = self.equations(k)
        ech = Echelon(nunk)
        for r in rows:
            ech.add(r)
        for r in extra_rows:
            ech.add(r)
        space = Subspace.from_sparse(ech.kernel_vectors(), nunk)
        return self._layer_from_vectors(k, space.vectors, offs, space.pivots if space.dim else [])

    def _layer_from_vectors(self, k, vectors, offs, pivots):
        comps = []
        for v in vectors:
            comp = {}
            for p in self.neg:
                rows, cols = self.dim(p + k), self.m.dims[p]
                o = offs[p]
                comp[p] = Matrix(rows, cols, tuple(v[o:o + rows * cols]))
            comps.append(comp)
        return ProlongationLayer(k, tuple(comps), tuple(pivots))

    def flatten(self, k: int, images: dict) -> list:
        """Unknown-ordered vector of the map u -> images[u] (sparse vectors in g_{p+k})."""
        offs, nunk = self._offsets(k)
        v = [Fraction(0)] * nunk
        for (p, j), img in images.items():
            for r, coef in img.items():
                v[offs[p] + r * self.m.dims[p] + j] = coef
        return v


def _pp_rows(m: GradedLieAlgebra, pp: PseudoProduct, offs: dict) -> list:
    """Linear conditions D(e) ⊂ e and D(f) ⊂ f on the degree -1 block of a degree-0 map."""
    n = m.dims[-1]
    o = offs[-1]
    rows = []
    for half in (pp.e, pp.f):
        ann = half.annihilator()
        for x in half.vectors:
            for lam in ann.vectors:
                row = {}
                for r in range(n):
                    if not lam[r]:
                        continue
                    for c in range(n):
                        if x[c]:
                            row[o + r * n + c] = row.get(o + r * n + c, 0) + lam[r] * x[c]
                row = {k: v for k, v in row.items() if v}
                if row:
                    rows.append(row)
    return rows


def _negative(m: GradedLieAlgebra) -> GradedLieAlgebra:
    if any(p >= 0 for p in m.degrees):
        m = m.negative_part()
    if not is_fundamental(m):
        raise ValueError("prolongation needs a fundamental graded Lie algebra")
    return m


def derivations_degree0(m: GradedLieAlgebra) -> ProlongationLayer:
    """All degree-0 derivations of ``m``."""
    return _Tower(_negative(m), []).solve_layer(0)


def restricted_derivations_degree0(
    m: GradedLieAlgebra, pp: PseudoProduct | None = None
) -> ProlongationLayer:
    """Degree-0 derivations preserving both halves of the pseudo-product structure."""
    m = _negative(m)
    pp = pp or m.pseudo_product
    if pp is None:
        raise ValueError("no pseudo-product structure given")
    check = pp.validate(m)
    if not check:
        raise ValueError(f"invalid pseudo-product structure: {check.detail}")
    tower = _Tower(m, [])
    offs, _ = tower._offsets(0)
    return tower.solve_layer(0, _pp_rows(m, pp, offs))


def prolong_layer(m: GradedLieAlgebra, previous: Sequence[ProlongationLayer]) -> ProlongationLayer:
    """Layer ``k = len(previous)`` of the prolongation built on ``previous``."""
    if not previous:
        raise ValueError("layer 0 comes from derivations_degree0")
    return _Tower(_negative(m), previous).solve_layer(len(previous))


def restricted_prolong_layer(
    m: GradedLieAlgebra, pp: PseudoProduct | None, previous: Sequence[ProlongationLayer]
) -> ProlongationLayer:
    """Layer ``k`` of the prolongation of ``(m, g_0)``.

    ``previous`` must start with the restricted degree-0 algebra.  Maps are
    solved with values in the previous restricted layers, which is the same
    as keeping the unrestricted maps that send ``g_p`` into ``g_{p+k}``.
    """
    m = _negative(m)
    pp = pp or m.pseudo_product
    if pp is not None and previous:
        tower = _Tower(m, [])
        offs, _ = tower._offsets(0)
        for row in _pp_rows(m, pp, offs):
            for comp in previous[0].basis:
                v = tower.flatten(0, _images(comp, m))
                if sum(v[c] * x for c, x in row.items()):
                    raise ValueError("previous[0] does not preserve the pseudo-product")
    return prolong_layer(m, previous)


def _images(comp: dict, m: GradedLieAlgebra) -> dict:
    out = {}
    for p, mat in comp.items():
        for j in range(m.dims[p]):
            col = {r: mat[r, j] for r in range(mat.rows) if mat[r, j]}
            if col:
                out[(p, j)] = col
    return out


@dataclass
class TruncatedProlongation:
    base: GradedLieAlgebra
    layers: list
    status: str  # "terminated" or "truncated"
    algebra: GradedLieAlgebra
    restricted: bool = False
    pseudo_product: PseudoProduct | None = None

    @property
    def layer_dims(self) -> list[int]:
        return [layer.dim for layer in self.layers]

    @property
    def graded_dims(self) -> dict[int, int]:
        out = {p: d for p, d in self.base.dims.items()}
        for layer in self.layers:
            if layer.dim:
                out[layer.k] = layer.dim
        return out

    @property
    def total_dim(self) -> int:
        return sum(self.graded_dims.values())

    def report(self) -> dict:
        return {
            "layer_dims": self.layer_dims,
            "status": self.status,
            "restricted": self.restricted,
            "graded_dims": {str(p): d for p, d in sorted(self.graded_dims.items())},
            "total_dim": self.total_dim if self.status == "terminated" else None,
        }


class _BracketTable:
    """Brackets between nonnegative layers via [X,Y](u) = [X,[Y,u]] - [Y,[X,u]]."""

    def __init__(self, tower: _Tower):
        self.t = tower
        self.memo: dict = {}

    def elem(self, s: int, a: int, deg: int, vec: dict) -> dict:
        """[g_s[a], y] for y a sparse element of degree ``deg``; s >= 0."""
        out: dict = {}
        for t_idx, coef in vec.items():
            if deg < 0:
                _axpy(out, coef, self.t.act(s, a, (deg, t_idx)))
            else:
                _axpy(out, coef, self.layer(s, a, deg, t_idx))
        return out

    def layer(self, k: int, a: int, l: int, b: int) -> dict:
        if (k, a) == (l, b):
            return {}
        if (k, a) > (l, b):
            return {c: -v for c, v in self.layer(l, b, k, a).items()}
        key = (k, a, l, b)
        if key in self.memo:
            return self.memo[key]
        t = self.t
        top = k + l
        images = {}
        for u in t.m.basis():
            p = u[0]
            if p + top < -t.mu:
                continue
            y_u = t.act(l, b, u)
            x_u = t.act(k, a, u)
            img = dict(self.elem(k, a, l + p, y_u)) if y_u else {}
            if x_u:
                _axpy(img, -1, self.elem(l, b, k + p, x_u))
            if img:
                images[u] = img
        layer = t.layers[top]
        if layer.dim == 0:
            if images:
                raise ArithmeticError(f"bracket of layers {k},{l} leaves the prolongation")
            out = {}
        else:
            v = t.flatten(top, images)
            coords = {i: v[pc] for i, pc in enumerate(layer.pivots) if v[pc]}
            recon = [Fraction(0)] * len(v)
            offs, _ = t._offsets(top)
            for i, c in coords.items():
                comp = layer.basis[i]
                for p in t.neg:
                    mat = comp[p]
                    for idx, x in enumerate(mat.entries):
                        if x:
                            recon[offs[p] + idx] += c * x
            if recon != v:
                raise ArithmeticError(f"bracket of layers {k},{l} leaves layer {top}")
            out = coords
        self.memo[key] = out
        return out


def truncated_prolongation(
    m: GradedLieAlgebra,
    max_degree: int,
    pseudo_product: PseudoProduct | bool | None = None,
) -> TruncatedProlongation:
    """Layers ``0..max_degree`` of the prolongation, stopping at the first zero layer.

    ``pseudo_product=True`` uses the structure stored on ``m``; a
    :class:`PseudoProduct` instance overrides it.  Either restricts degree 0 to
    derivations preserving ``e`` and ``f``.
    """
    if max_degree < 0:
        raise ValueError("max_degree must be >= 0")
    m = _negative(m)
    pp = None
    if pseudo_product is True:
        pp = m.pseudo_product
        if pp is None:
            raise ValueError("algebra carries no pseudo-product structure")
    elif isinstance(pseudo_product, PseudoProduct):
        pp = pseudo_product
    layers = [restricted_derivations_degree0(m, pp) if pp else derivations_degree0(m)]
    status = "terminated" if layers[0].dim == 0 else "truncated"
    while status == "truncated" and len(layers) <= max_degree:
        layer = _Tower(m, layers).solve_layer(len(layers))
        layers.append(layer)
        if layer.dim == 0:
            status = "terminated"
    tower = _Tower(m, layers)
    algebra = _assemble(tower, status)
    return TruncatedProlongation(m, layers, status, algebra, pp is not None, pp)


def _assemble(tower: _Tower, status: str) -> GradedLieAlgebra:
    m = tower.m
    top = len(tower.layers) - 1
    dims = dict(m.dims)
    labels = {p: list(m.labels[p]) for p in m.degrees}
    for layer in tower.layers:
        dims[layer.k] = layer.dim
        labels[layer.k] = [f"X{layer.k}[{i}]" for i in range(layer.dim)]
    table = dict(m.structure_constants())
    for s, layer in enumerate(tower.layers):
        for a in range(layer.dim):
            for u, img in tower.cols[s][a].items():
                table[((s, a), u)] = img
    bt = _BracketTable(tower)
    for k in range(top + 1):
        for l in range(k, top + 1 - k):
            for a in range(tower.layers[k].dim):
                for b in range(tower.layers[l].dim):
                    if (k, a) < (l, b):
                        vec = bt.layer(k, a, l, b)
                        if vec:
                            table[((k, a), (l, b))] = vec
    cut = None if status == "terminated" else top
    return GradedLieAlgebra(dims, table, labels, m.pseudo_product, cut)


def verify_transitive(g: GradedLieAlgebra | TruncatedProlongation) -> CheckResult:
    """Every nonnegative degree acts faithfully on the negative part."""
    if isinstance(g, TruncatedProlongation):
        g = g.algebra
    neg = [p for p in g.degrees if p < 0]
    for k in (p for p in g.degrees if p >= 0):
        ech = Echelon(g.dims[k])
        # rows of the matrix X -> ([X, e_u])_u, one row per output coordinate
        for q in neg:
            for j in range(g.dims[q]):
                cols = [g.bracket_basis((k, i), (q, j)) for i in range(g.dims[k])]
                for r in range(g.dim_of(k + q)):
                    row = {i: c[r] for i, c in enumerate(cols) if c.get(r)}
                    if row:
                        ech.add(row)
        if len(ech) != g.dims[k]:
            kernel = ech.kernel_vectors()[0]
            return CheckResult(False, (k, dense(kernel, g.dims[k])), f"degree {k} has elements acting trivially")
    return CheckResult(True)
