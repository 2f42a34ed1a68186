"""Builders for the concrete fundamental graded Lie algebras.

Symmetric tensors are stored on the monomial basis.  The symmetric product of
two vectors ``v_i``, ``v_k`` is the monomial ``x_i x_k`` with coefficient one
(also when ``i == k``), so every structure constant below is an integer.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, combinations_with_replacement

from .exactlin import Subspace
from .fgla import GradedLieAlgebra, PseudoProduct, graded_ideal_generated_by, quotient
from .freelie import HallBasis

__all__ = [
    "free_fgla",
    "universal_fgla",
    "free_pseudoproduct_fgla",
    "contact_algebra",
    "model_mn3",
    "monomials",
]


def monomials(nvars: int, degree: int) -> list[tuple[int, ...]]:
    """Exponent vectors of total ``degree`` in ``nvars`` variables, lexicographic in the variable multiset."""
    out = []
    for combo in combinations_with_replacement(range(nvars), degree):
        exp = [0] * nvars
        for v in combo:
            exp[v] += 1
        out.append(tuple(exp))
    return out


def _mono_label(exp, names):
    parts = []
    for name, e in zip(names, exp):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) or "1"


def free_fgla(n: int, mu: int) -> GradedLieAlgebra:
    """Free FGLA of type ``(n, mu)`` realised on the Hall basis of degrees 1..mu."""
    if n < 2:
        raise ValueError("a free FGLA needs at least two generators")
    if mu < 1:
        raise ValueError("depth must be positive")
    hb = HallBasis(n, mu)
    dims = {-d: len(hb.by_degree.get(d, [])) for d in range(1, mu + 1)}
    table = {}
    for a in range(len(hb.parts)):
        for b in range(a + 1, len(hb.parts)):
            da, db = hb.degree[a], hb.degree[b]
            if da + db > mu:
                continue
            vec = hb.bracket(a, b)
            if vec:
                table[((-da, hb.position[a]), (-db, hb.position[b]))] = {
                    hb.position[w]: c for w, c in vec.items()
                }
    labels = {-d: [str(hb.words[i]) for i in hb.by_degree.get(d, [])] for d in range(1, mu + 1)}
    return GradedLieAlgebra(dims, table, labels)


def _wedge_add(acc: dict, index: dict, coef, x, y):
    if x == y or not coef:
        return
    if y < x:
        x, y = y, x
        coef = -coef
    k = index[(x, y)]
    nv = acc.get(k, 0) + coef
    if nv:
        acc[k] = nv
    else:
        acc.pop(k, None)


def universal_fgla(n: int, mu: int) -> GradedLieAlgebra:
    """Universal FGLA ``b(V, mu)`` with ``dim V = n``, built by the wedge-quotient recursion.

    ``b_{-1} = V``, ``b_{-2} = Λ²V``.  For ``k <= -3``, ``c_k`` is the span of
    ``x ∧ y`` with ``deg x + deg y = k``, ``A_k`` the span of the cyclic sums
    ``[x,y]∧z + [y,z]∧x + [z,x]∧y``, and ``b_k = c_k / A_k`` with the bracket
    of a pair given by the projection of its wedge.
    """
    if n < 2 or mu < 2:
        raise ValueError("need n >= 2 and mu >= 2")
    dims = {-1: n, -2: n * (n - 1) // 2}
    labels = {-1: [f"e{i + 1}" for i in range(n)], -2: []}
    table: dict = {}
    for idx, (i, j) in enumerate(combinations(range(n), 2)):
        table[((-1, i), (-1, j))] = {idx: Fraction(1)}
        labels[-2].append(f"e{i + 1}^e{j + 1}")

    def bracket(x, y):
        if x == y:
            return {}
        if x < y:
            return table.get((x, y), {})
        return {k: -v for k, v in table.get((y, x), {}).items()}

    for k in range(-3, -mu - 1, -1):
        elems = [(p, i) for p in range(-1, k, -1) for i in range(dims[p])]
        pairs = [
            (x, y) for x, y in combinations(sorted(elems), 2) if x[0] + y[0] == k
        ]
        index = {pr: t for t, pr in enumerate(pairs)}
        rels = []
        for x, y, z in combinations(sorted(elems), 3):
            if x[0] + y[0] + z[0] != k:
                continue
            acc: dict = {}
            for u, v, w in ((x, y, z), (y, z, x), (z, x, y)):
                for t, c in bracket(u, v).items():
                    _wedge_add(acc, index, c, (u[0] + v[0], t), w)
            if acc:
                rels.append(acc)
        a_k = Subspace.from_sparse(rels, len(pairs))
        proj, _ = a_k.quotient_map()
        pivots = set(a_k.pivots)
        keep = [t for t in range(len(pairs)) if t not in pivots]
        dims[k] = len(keep)
        labels[k] = [f"({_lab(labels, pairs[t][0])})^({_lab(labels, pairs[t][1])})" for t in keep]
        for t, (x, y) in enumerate(pairs):
            col = {r: proj[r, t] for r in range(proj.rows) if proj[r, t]}
            if col:
                table[(x, y)] = col
    return GradedLieAlgebra(dims, table, labels)


def _lab(labels, x):
    return labels[x[0]][x[1]]


def free_pseudoproduct_fgla(m: int, n: int, mu: int) -> GradedLieAlgebra:
    """Free pseudo-product FGLA of type ``(m, n, mu)``.

    The free FGLA on ``e ⊕ f`` (generators ``1..m`` span ``e``, ``m+1..m+n``
    span ``f``) modulo the graded ideal generated by ``[e,e] + [f,f]``.
    """
    if m < 1 or n < 1 or mu < 2:
        raise ValueError("need m, n >= 1 and mu >= 2")
    g = free_fgla(m + n, mu)
    dim2 = g.dim_of(-2)
    rels = []
    for lo, hi in ((0, m), (m, m + n)):
        for i, j in combinations(range(lo, hi), 2):
            rels.append(dict(g.bracket_basis((-1, i), (-1, j))))
    seed = {-2: Subspace.from_sparse(rels, dim2)}
    ideal = graded_ideal_generated_by(g, seed)
    g = GradedLieAlgebra(g.dims, dict(g.structure_constants()), g.labels, PseudoProduct.split(m, n))
    q, _ = quotient(g, ideal)
    return q


def contact_algebra(k: int, n: int, m: int) -> GradedLieAlgebra:
    """Contact algebra of order ``k`` with ``dim V = n`` and ``dim W = m``.

    Degree -1 is ``V ⊕ W⊗S^k(V*)`` (``V`` first); degree ``p`` in
    ``[-k-1, -2]`` is ``W⊗S^{k+p+1}(V*)``.  The only nonzero brackets are
    ``[w⊗s, v_i] = w⊗∂_i s``.
    """
    if k < 1 or n < 1 or m < 1:
        raise ValueError("need k, n, m >= 1")
    vnames = [f"v{i + 1}" for i in range(n)]
    xnames = [f"x{i + 1}" for i in range(n)]
    dims: dict[int, int] = {}
    labels: dict[int, list[str]] = {}
    index: dict[tuple, tuple[int, int]] = {}
    for r in range(k, -1, -1):
        p = r - k - 1
        base = n if p == -1 else 0
        lab = list(vnames) if p == -1 else []
        mons = monomials(n, r)
        for a in range(m):
            for exp in mons:
                index[(a, exp)] = (p, base + len(lab) - (n if p == -1 else 0))
                lab.append(f"w{a + 1}*{_mono_label(exp, xnames)}")
        dims[p] = len(lab)
        labels[p] = lab
    table = {}
    for (a, exp), x in index.items():
        for i in range(n):
            if exp[i] == 0:
                continue
            lower = list(exp)
            lower[i] -= 1
            y = index[(a, tuple(lower))]
            table[(x, (-1, i))] = {y[1]: Fraction(exp[i])}
    nd = dims[-1]
    unit = lambda j: [Fraction(int(t == j)) for t in range(nd)]
    pp = PseudoProduct(
        Subspace.span([unit(j) for j in range(n)], nd),
        Subspace.span([unit(j) for j in range(n, nd)], nd),
    )
    return GradedLieAlgebra(dims, table, labels, pp)


def model_mn3(m: int, n: int) -> GradedLieAlgebra:
    """Explicit model of the free pseudo-product FGLA of type ``(m, n, 3)``.

    ``g_-1 = V ⊕ W``, ``g_-2 = V⊗W``, ``g_-3 = V⊗S²W ⊕ S²V⊗W`` with
    ``[v, w] = v⊗w``, ``[v, v'⊗w] = vv'⊗w`` and ``[v⊗w, w'] = v⊗ww'``.
    """
    if m < 1 or n < 1:
        raise ValueError("need m, n >= 1")
    v_pairs = list(combinations_with_replacement(range(m), 2))
    w_pairs = list(combinations_with_replacement(range(n), 2))
    vw = {(i, j): i * n + j for i in range(m) for j in range(n)}
    v_s2w = {(i, pr): t for t, (i, pr) in enumerate((i, pr) for i in range(m) for pr in w_pairs)}
    off = len(v_s2w)
    s2v_w = {(pr, j): off + t for t, (pr, j) in enumerate((pr, j) for pr in v_pairs for j in range(n))}
    dims = {-1: m + n, -2: m * n, -3: len(v_s2w) + len(s2v_w)}
    labels = {
        -1: [f"v{i + 1}" for i in range(m)] + [f"w{j + 1}" for j in range(n)],
        -2: [f"v{i + 1}*w{j + 1}" for i in range(m) for j in range(n)],
        -3: [f"v{i + 1}*w{a + 1}w{b + 1}" for i in range(m) for a, b in w_pairs]
        + [f"v{a + 1}v{b + 1}*w{j + 1}" for a, b in v_pairs for j in range(n)],
    }
    one = Fraction(1)
    table = {}
    for i in range(m):
        for j in range(n):
            table[((-1, i), (-1, m + j))] = {vw[(i, j)]: one}
    for i in range(m):
        for k in range(m):
            for j in range(n):
                pr = (min(i, k), max(i, k))
                table[((-1, i), (-2, vw[(k, j)]))] = {s2v_w[(pr, j)]: one}
    for k in range(m):
        for j in range(n):
            for l in range(n):
                pr = (min(j, l), max(j, l))
                table[((-2, vw[(k, j)]), (-1, m + l))] = {v_s2w[(k, pr)]: one}
    return GradedLieAlgebra(dims, table, labels, PseudoProduct.split(m, n))
