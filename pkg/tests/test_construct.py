import pytest

from gradedlie.construct import (
    contact_algebra,
    free_fgla,
    free_pseudoproduct_fgla,
    model_mn3,
    monomials,
    universal_fgla,
)
from gradedlie.exactlin import Matrix
from gradedlie.fgla import (
    centralizer_of_gm2_in_gm1,
    check_jacobi,
    extend_hom,
    is_fundamental,
    is_nondegenerate,
)
from gradedlie.freelie import witt_dimension


def test_monomials():
    assert monomials(2, 2) == [(2, 0), (1, 1), (0, 2)]
    assert len(monomials(3, 3)) == 10


@pytest.mark.parametrize("n,mu", [(2, 3), (3, 3), (2, 5)])
def test_free_dims(n, mu):
    g = free_fgla(n, mu)
    assert [g.dim_of(-d) for d in range(1, mu + 1)] == [witt_dimension(n, d) for d in range(1, mu + 1)]
    assert g.depth == mu


@pytest.mark.parametrize("n,mu", [(2, 3), (3, 3), (2, 4)])
def test_universal_matches_free(n, mu):
    u, f = universal_fgla(n, mu), free_fgla(n, mu)
    assert u.dims == f.dims
    assert check_jacobi(u) and is_fundamental(u)
    ext = extend_hom(u, Matrix.identity(n), f)
    assert ext.is_bijective()


def test_universal_small_values():
    assert universal_fgla(2, 3).dim_of(-3) == 2
    assert universal_fgla(3, 3).dim_of(-3) == 8


@pytest.mark.parametrize("m,n", [(1, 1), (2, 1), (2, 2), (3, 2)])
def test_pseudo_product_depth3_matches_model(m, n):
    g, model = free_pseudoproduct_fgla(m, n, 3), model_mn3(m, n)
    assert g.dims == model.dims == {-1: m + n, -2: m * n, -3: m * n * (m + n + 2) // 2}
    assert check_jacobi(model) and is_fundamental(model)
    ext = extend_hom(g, Matrix.identity(m + n), model)
    assert ext.is_bijective()
    assert centralizer_of_gm2_in_gm1(g).dim == 0


def test_pseudo_product_relations():
    g = free_pseudoproduct_fgla(2, 2, 2)
    pp = g.pseudo_product
    assert pp.validate(g)
    assert g.bracket_basis((-1, 0), (-1, 1)) == {}
    assert g.bracket_basis((-1, 2), (-1, 3)) == {}


def test_contact_algebra():
    g = contact_algebra(2, 2, 1)
    assert g.dims == {-1: 5, -2: 2, -3: 1}
    assert check_jacobi(g) and is_fundamental(g) and is_nondegenerate(g)
    c = centralizer_of_gm2_in_gm1(g)
    assert c.dim == 3
    # exactly the W (x) S^2 block of degree -1
    for j in range(2, 5):
        assert c.contains([int(t == j) for t in range(5)])
    assert contact_algebra(1, 1, 1).dims == {-1: 2, -2: 1}


@pytest.mark.parametrize(
    "call",
    [
        lambda: free_fgla(1, 3),
        lambda: free_fgla(2, 0),
        lambda: universal_fgla(2, 1),
        lambda: free_pseudoproduct_fgla(0, 1, 2),
        lambda: contact_algebra(0, 1, 1),
        lambda: model_mn3(0, 2),
    ],
)
def test_bad_parameters(call):
    with pytest.raises(ValueError):
        call()
