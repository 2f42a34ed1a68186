"""Acceptance criteria 1-11.  Every comparison is exact; each test records one line."""

import random
import time
from fractions import Fraction
from itertools import product

from gradedlie.cartantype import k_algebra, w_algebra
from gradedlie.construct import (
    contact_algebra,
    free_fgla,
    free_pseudoproduct_fgla,
    model_mn3,
    universal_fgla,
)
from gradedlie.exactlin import Matrix, Subspace
from gradedlie.fgla import (
    ad_power,
    centralizer_of_gm2_in_gm1,
    check_antisymmetry,
    check_grading,
    check_jacobi,
    extend_graded_automorphism,
    extend_hom,
    graded_ideal_generated_by,
    is_fundamental,
    quotient,
    subalgebra_generated_by,
)
from gradedlie.freelie import witt_dimension
from gradedlie.prolong import (
    derivations_degree0,
    restricted_derivations_degree0,
    truncated_prolongation,
    verify_transitive,
)
from gradedlie.rootgrade import grade_by_marks


def lyndon_count(n: int, d: int) -> int:
    return sum(
        1 for w in product(range(n), repeat=d) if all(w < w[i:] + w[:i] for i in range(1, d))
    )


def vector(dims: dict) -> list[int]:
    return [dims[p] for p in sorted(dims)]


def test_criterion_1_free_dims(record):
    start = time.perf_counter()
    bad = []
    for n in (2, 3, 4):
        for mu in range(1, 7):
            g = free_fgla(n, mu)
            got = [g.dim_of(-d) for d in range(1, mu + 1)]
            oracle = [witt_dimension(n, d) for d in range(1, mu + 1)]
            if got != oracle:
                bad.append((n, mu, got, oracle))
    elapsed = time.perf_counter() - start
    # the oracle itself is cross-checked against brute-force Lyndon counts
    for n in (2, 3):
        for d in range(1, 7):
            if witt_dimension(n, d) != lyndon_count(n, d):
                bad.append(("witt", n, d))
    ok = not bad and elapsed < 10
    record(1, ok, f"free_fgla vs Witt/Lyndon, n in 2..4, mu <= 6 ({elapsed:.2f}s < 10s) {bad or ''}")
    assert ok


def test_criterion_2_universal_isomorphic_to_free(record):
    start = time.perf_counter()
    bad = []
    for n in (2, 3):
        for mu in (2, 3, 4):
            u, f = universal_fgla(n, mu), free_fgla(n, mu)
            ext = extend_hom(u, Matrix.identity(n), f)
            if not ext.is_bijective() or u.dims != f.dims:
                bad.append((n, mu, ext.ranks()))
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 30
    record(2, ok, f"universal ~ free via bijective extension, n in 2..3, mu <= 4 ({elapsed:.2f}s < 30s) {bad or ''}")
    assert ok


def test_criterion_3_pseudo_product_dims(record):
    start = time.perf_counter()
    bad = []
    for m in range(1, 5):
        for n in range(1, 5):
            g = free_pseudoproduct_fgla(m, n, 3)
            got = (g.dim_of(-1), g.dim_of(-2), g.dim_of(-3))
            expected = (m + n, m * n, m * n * (m + n + 2) // 2)
            if got != expected:
                bad.append((m, n, got, expected))
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 30
    record(3, ok, f"pp(m,n,3) dims = (m+n, mn, mn(m+n+2)/2), 1 <= m,n <= 4 ({elapsed:.2f}s < 30s) {bad or ''}")
    assert ok


def test_criterion_4_degree_zero_derivations(record):
    bad = []
    for n in (2, 3, 4):
        for mu in (1, 2, 3, 4):
            d = derivations_degree0(free_fgla(n, mu)).dim
            if d != n * n:
                bad.append(("free", n, mu, d))
    for m in (1, 2, 3):
        for n in (1, 2, 3):
            for mu in (2, 3):
                d = restricted_derivations_degree0(free_pseudoproduct_fgla(m, n, mu)).dim
                if d != m * m + n * n:
                    bad.append(("pp", m, n, mu, d))
    ok = not bad
    record(4, ok, f"dim Der_0 = n^2 (free), m^2+n^2 restricted (pp) {bad or ''}")
    assert ok


def test_criterion_5_free_prolongations(record):
    start = time.perf_counter()
    bad = []
    tp = truncated_prolongation(free_fgla(2, 2), 3)
    if vector(tp.graded_dims) != [1, 2, 4, 6, 9, 12] or vector(tp.graded_dims) != vector(k_algebra(1, -2, 3).dims):
        bad.append(("free(2,2)", vector(tp.graded_dims)))
    tp = truncated_prolongation(free_fgla(3, 2), 6)
    if vector(tp.graded_dims) != grade_by_marks("B", 3, [3]).dim_vector() or tp.layer_dims != [9, 3, 3, 0]:
        bad.append(("free(3,2)", tp.layer_dims))
    if tp.status != "terminated":
        bad.append(("free(3,2) status", tp.status))
    tp = truncated_prolongation(free_fgla(2, 3), 6)
    if vector(tp.graded_dims) != grade_by_marks("G", 2, [1]).dim_vector() or tp.status != "terminated":
        bad.append(("free(2,3)", tp.layer_dims, tp.status))
    for n, mu in ((3, 3), (2, 4), (4, 3)):
        tp = truncated_prolongation(free_fgla(n, mu), 1)
        if tp.layer_dims[1:2] != [0]:
            bad.append((f"free({n},{mu})", tp.layer_dims))
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 120
    record(5, ok, f"free prolongations vs K(1), (B3,{{3}}), (G2,{{1}}), layer 1 = 0 cases ({elapsed:.2f}s < 120s) {bad or ''}")
    assert ok


def test_criterion_6_restricted_prolongations(record):
    start = time.perf_counter()
    bad = []
    for m, n in ((1, 2), (2, 2), (2, 3)):
        tp = truncated_prolongation(free_pseudoproduct_fgla(m, n, 2), 5, pseudo_product=True)
        rg = grade_by_marks("A", m + n, [m, m + 1])
        if vector(tp.graded_dims) != rg.dim_vector() or tp.layer_dims[0] != m * m + n * n:
            bad.append((m, n, vector(tp.graded_dims), rg.dim_vector()))
        if tp.status != "terminated":
            bad.append((m, n, tp.status))
    for m, n in ((1, 1), (2, 1)):
        tp = truncated_prolongation(free_pseudoproduct_fgla(m, n, 3), 1, pseudo_product=True)
        if tp.layer_dims[1:2] != [0]:
            bad.append((m, n, 3, tp.layer_dims))
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 120
    record(6, ok, f"restricted pp prolongations vs (A_(m+n),{{m,m+1}}), layer 1 = 0 at depth 3 ({elapsed:.2f}s < 120s) {bad or ''}")
    assert ok


def test_criterion_7_unrestricted_pseudo_product(record):
    start = time.perf_counter()
    bad = []
    tp = truncated_prolongation(free_pseudoproduct_fgla(2, 1, 2), 1)
    w = w_algebra(3, (1, 2, 2), -2, 1)
    if vector(tp.graded_dims) != [2, 3, 7, 9] or vector(w.dims) != [2, 3, 7, 9]:
        bad.append(("pp(2,1,2)", vector(tp.graded_dims), vector(w.dims)))
    tp = truncated_prolongation(free_pseudoproduct_fgla(1, 1, 2), 3)
    if vector(tp.graded_dims) != vector(k_algebra(1, -2, 3).dims):
        bad.append(("pp(1,1,2)", vector(tp.graded_dims)))
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 60
    record(7, ok, f"pp(2,1,2) vs W(3;(1,2,2)), pp(1,1,2) vs K(1) ({elapsed:.2f}s < 60s) {bad or ''}")
    assert ok


def _independent_pairs(rng, count):
    pairs = [((1, 0), (0, 1)), ((0, 1), (1, 0))]
    while len(pairs) < count:
        x = tuple(Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(2))
        y = tuple(Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(2))
        if x[0] * y[1] - x[1] * y[0]:
            pairs.append((x, y))
    return pairs


def test_criterion_8_ad_identities(record):
    rng = random.Random(8)
    bad = []
    for mu in (3, 4):
        g = free_fgla(2, mu)
        for x, y in _independent_pairs(rng, 10):
            if any(ad_power(g, x, mu, y)[1]):
                bad.append((mu, "ad(X)^mu Y", x, y))
            if not any(ad_power(g, x, mu - 1, y)[1]):
                bad.append((mu, "ad(X)^(mu-1) Y", x, y))
            for k, want_zero in ((mu - 1, True), (mu - 2, False)):
                deg, v = ad_power(g, x, k, y)
                w = g.bracket(-1, {i: c for i, c in enumerate(y) if c}, deg, {i: c for i, c in enumerate(v) if c})
                if bool(w) == want_zero:
                    bad.append((mu, f"ad(Y) ad(X)^{k} Y", x, y))
    ok = not bad
    record(8, ok, f"four ad-identities on free (2,3), (2,4) {bad or ''}")
    assert ok


def test_criterion_9_centralizer(record):
    bad = []
    for m in (1, 2, 3):
        for n in (1, 2, 3):
            c = centralizer_of_gm2_in_gm1(free_pseudoproduct_fgla(m, n, 3))
            if c.dim:
                bad.append(("pp", m, n, c.dim))
    for k, n, m in ((2, 1, 1), (2, 2, 1), (2, 2, 2), (3, 2, 1), (3, 1, 2)):
        g = contact_algebra(k, n, m)
        c = centralizer_of_gm2_in_gm1(g)
        nd = g.dim_of(-1)
        block = Subspace.span([[int(t == j) for t in range(nd)] for j in range(n, nd)], nd)
        if not c.contains_subspace(block):
            bad.append(("contact", k, n, m, c.dim))
    ok = not bad
    record(9, ok, f"centralizer of g_-2 in g_-1: zero on pp(m,n,3), contains W(x)S^k on contact k >= 2 {bad or ''}")
    assert ok


def _random_invertible(rng, n):
    while True:
        m = Matrix.from_rows(
            [[Fraction(rng.randint(-4, 4), rng.randint(1, 4)) for _ in range(n)] for _ in range(n)]
        )
        if m.rank() == n:
            return m


def _block_diag(a: Matrix, b: Matrix) -> Matrix:
    n = a.rows + b.rows
    rows = [[0] * n for _ in range(n)]
    for i in range(a.rows):
        for j in range(a.cols):
            rows[i][j] = a[i, j]
    for i in range(b.rows):
        for j in range(b.cols):
            rows[a.rows + i][a.cols + j] = b[i, j]
    return Matrix.from_rows(rows)


def test_criterion_10_automorphism_extension(record):
    rng = random.Random(10)
    bad = []
    cases = [
        (free_fgla(3, 2), lambda: _random_invertible(rng, 3)),
        (
            free_pseudoproduct_fgla(2, 2, 2),
            lambda: _block_diag(_random_invertible(rng, 2), _random_invertible(rng, 2)),
        ),
    ]
    total = 0
    for alg, draw in cases:
        maps = [draw() for _ in range(50)]
        exts = []
        for phi in maps:
            ext = extend_graded_automorphism(alg, phi)
            total += 1
            if not ext.is_bijective() or ext.bracket_violation() is not None:
                bad.append((alg.dims, "not an automorphism"))
            exts.append(ext)
        for i in range(len(maps) - 1):
            prod = extend_graded_automorphism(alg, maps[i] @ maps[i + 1])
            if not prod.matrices_equal(exts[i].compose(exts[i + 1])):
                bad.append((alg.dims, i, "Ext(phi psi) != Ext(phi) Ext(psi)"))
    ok = not bad and total == 100
    record(10, ok, f"{total} random maps extend to automorphisms; Ext multiplicative {bad or ''}")
    assert ok


def _constructed_algebras():
    out = []
    for n, mu in ((2, 2), (2, 3), (3, 3), (2, 5), (4, 3)):
        out.append((f"free({n},{mu})", free_fgla(n, mu), True, False))
    for n, mu in ((2, 4), (3, 3)):
        out.append((f"universal({n},{mu})", universal_fgla(n, mu), True, False))
    for m, n, mu in ((1, 1, 2), (2, 1, 3), (2, 2, 3), (3, 2, 2)):
        out.append((f"pp({m},{n},{mu})", free_pseudoproduct_fgla(m, n, mu), True, False))
    for k, n, m in ((1, 1, 1), (2, 2, 1), (3, 1, 2)):
        out.append((f"contact({k},{n},{m})", contact_algebra(k, n, m), True, False))
    for m, n in ((1, 1), (2, 2), (3, 1)):
        out.append((f"model3({m},{n})", model_mn3(m, n), True, False))
    g = free_fgla(3, 3)
    (k,) = g.bracket_basis((-1, 0), (-1, 1))
    ideal = graded_ideal_generated_by(g, {-2: Subspace.span([[int(i == k) for i in range(3)]], 3)})
    out.append(("free(3,3)/ideal", quotient(g, ideal)[0], True, False))
    out.append(("subalgebra of free(3,3)", subalgebra_generated_by(g, Subspace.span([[1, 0, 0], [0, 1, 1]], 3))[0], True, False))
    for label, m, k, pp in (
        ("prolong free(2,2)", free_fgla(2, 2), 3, None),
        ("prolong free(2,3)", free_fgla(2, 3), 5, None),
        ("prolong free(3,2)", free_fgla(3, 2), 4, None),
        ("prolong pp(1,2,2) restricted", free_pseudoproduct_fgla(1, 2, 2), 4, True),
        ("prolong pp(2,2,2) restricted", free_pseudoproduct_fgla(2, 2, 2), 4, True),
        ("prolong pp(2,1,2)", free_pseudoproduct_fgla(2, 1, 2), 1, None),
    ):
        out.append((label, truncated_prolongation(m, k, pseudo_product=pp).algebra, True, True))
    out.append(("K(1) -2..3", k_algebra(1, -2, 3), True, True))
    out.append(("K(2) -2..1", k_algebra(2, -2, 1), True, True))
    out.append(("W(3;(1,2,2)) -2..2", w_algebra(3, (1, 2, 2), -2, 2), True, True))
    return out


def test_criterion_11_invariants(record):
    bad = []
    algebras = _constructed_algebras()
    for label, g, fundamental, transitive in algebras:
        for name, res in (
            ("antisymmetry", check_antisymmetry(g)),
            ("grading", check_grading(g)),
            ("jacobi", check_jacobi(g)),
        ):
            if not res:
                bad.append((label, name, res.witness))
        if fundamental and not is_fundamental(g.negative_part()):
            bad.append((label, "fundamental"))
        if transitive and not verify_transitive(g):
            bad.append((label, "transitive"))
        if g.pseudo_product is not None and not g.pseudo_product.validate(g):
            bad.append((label, "pseudo-product"))
    ok = not bad
    record(11, ok, f"{len(algebras)} algebras pass antisymmetry, grading, Jacobi, fundamentality, transitivity {bad or ''}")
    assert ok
