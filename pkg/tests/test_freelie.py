from itertools import product

import pytest

from gradedlie.freelie import HallBasis, hall_basis, mobius, normal_form, witt_dimension


def lyndon_count(n: int, d: int) -> int:
    """Brute force: words strictly smaller than all their proper rotations."""
    count = 0
    for w in product(range(n), repeat=d):
        if all(w < w[i:] + w[:i] for i in range(1, d)):
            count += 1
    return count


def test_mobius():
    assert [mobius(k) for k in range(1, 11)] == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1]


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_hall_counts_match_lyndon_and_witt(n):
    hb = hall_basis(n, 6)
    for d in range(1, 7):
        assert len(hb.get(d, [])) == witt_dimension(n, d) == lyndon_count(n, d)


def test_hall_words_are_well_formed():
    hb = HallBasis(3, 5)
    for i, part in enumerate(hb.parts):
        if isinstance(part, tuple):
            a, b = part
            assert hb.degree[i] == hb.degree[a] + hb.degree[b]
            assert a < b
            # right factor is a generator, or its left factor is at most a
            if isinstance(hb.parts[b], tuple):
                assert hb.parts[b][0] <= a


def test_antisymmetry_and_printing():
    hb = HallBasis(2, 3)
    x1, x2 = hb.generator(1), hb.generator(2)
    fwd = hb.bracket(x1, x2)
    back = hb.bracket(x2, x1)
    assert back == {k: -v for k, v in fwd.items()}
    assert hb.bracket(x1, x1) == {}
    assert str(hb.words[next(iter(fwd))]) == "[1,2]"
    nf = normal_form((2, 1), 2, 3)
    assert nf[2] == (-1,)


def test_normal_form_drops_high_degrees():
    nf = normal_form((1, (1, (1, 2))), 2, 3)
    assert not any(any(v) for v in nf.values())


@pytest.mark.parametrize("n,max_degree", [(2, 5), (3, 5)])
def test_jacobi_on_hall_words(n, max_degree):
    hb = HallBasis(n, max_degree)
    idx = range(len(hb.parts))
    for a in idx:
        for b in idx:
            for c in idx:
                if hb.degree[a] + hb.degree[b] + hb.degree[c] > max_degree:
                    continue
                total: dict = {}
                for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
                    inner = hb.bracket(y, z)
                    for k, v in hb.bracket_combos({x: 1}, inner).items():
                        total[k] = total.get(k, 0) + v
                assert not any(total.values()), (a, b, c)


def test_evaluate_linear_combination():
    hb = HallBasis(2, 3)
    expr = [(2, (1, 2)), (3, (2, 1))]
    out = hb.evaluate(expr)
    assert list(out.values()) == [-1]
