import random
from fractions import Fraction

import pytest

from regionchoice.zlinalg import (EchelonForm, NotE00Error, determinant,
                                  kernel_basis, minimize_in_family,
                                  reduce_to_e00, replay, rref_rational,
                                  solve_gf2, solve_integral)

CURL = ((2, 1, 1),)
TREFOIL = ((1, 1, 1, 1, 0),
           (1, 1, 0, 1, 1),
           (0, 1, 1, 1, 1))


def test_curl_reduces_to_e00():
    d = reduce_to_e00(CURL)
    assert d.s == ((1, 0, 0),)
    assert d.is_e00
    assert d.diagonal() == (1,)


def test_reduction_self_consistency():
    d = reduce_to_e00(TREFOIL)
    assert d.is_e00
    # P A Q must equal S when recomputed by hand
    pa = [[sum(d.p[i][k] * d.matrix[k][j] for k in range(3))
           for j in range(5)] for i in range(3)]
    paq = [[sum(pa[i][k] * d.q[k][j] for k in range(5))
            for j in range(5)] for i in range(3)]
    assert tuple(tuple(r) for r in paq) == d.s


def test_operation_log_replays_to_s():
    d = reduce_to_e00(TREFOIL)
    assert replay(d.matrix, d.log) == d.s


def test_unimodular_transforms():
    for m in (CURL, TREFOIL):
        d = reduce_to_e00(m)
        assert abs(determinant(d.p)) == 1
        assert abs(determinant(d.q)) == 1


def test_determinant_values():
    assert determinant(((2, 1), (1, 2))) == 3
    assert determinant(((1, 2), (3, 4))) == -2
    assert determinant(((5,),)) == 5
    # integer result even when intermediate fractions would appear
    assert determinant(((2, 4, 2), (4, 2, 0), (0, 2, 2))) == -8


def test_solve_integral_residual_and_kernel():
    b = (3, -7, 11)
    fam = solve_integral(TREFOIL, b)
    for u in (fam.particular, fam.member(2, -3), fam.member(-1, 5)):
        assert all(isinstance(x, int) for x in u)
        out = [sum(r * x for r, x in zip(row, u)) + bv
               for row, bv in zip(TREFOIL, b)]
        assert out == [0, 0, 0]


def test_kernel_basis_spans_lattice():
    k1, k2 = kernel_basis(TREFOIL)
    for k in (k1, k2):
        assert all(sum(r * x for r, x in zip(row, k)) == 0 for row in TREFOIL)
    # some 2x2 minor of the basis matrix is +-1, so the lattice is primitive
    minors = [k1[i] * k2[j] - k2[i] * k1[j]
              for i in range(5) for j in range(i + 1, 5)]
    assert any(m in (1, -1) for m in minors)


def test_wrong_shape_rejected():
    with pytest.raises(NotE00Error):
        solve_integral(((1, 0), (0, 1)), (1, 1))


def test_bad_b_length():
    with pytest.raises(ValueError):
        solve_integral(TREFOIL, (1, 2))


def test_minimize_improves_or_matches():
    rng = random.Random(3)
    for _ in range(25):
        b = tuple(rng.randint(-50, 50) for _ in range(3))
        fam = solve_integral(TREFOIL, b)
        for norm in ("Linf", "L2"):
            best = minimize_in_family(fam, norm)
            if norm == "Linf":
                measure = lambda u: max(abs(x) for x in u)
            else:
                measure = lambda u: sum(x * x for x in u)
            assert measure(best) <= measure(fam.particular)
            # at least as good as everything in a coefficient window
            assert measure(best) <= min(
                measure(fam.member(a, c))
                for a in range(-8, 9) for c in range(-8, 9))


def test_minimize_rejects_unknown_norm():
    fam = solve_integral(TREFOIL, (0, 0, 0))
    with pytest.raises(ValueError):
        minimize_in_family(fam, "L1")


def test_solve_gf2_basic():
    sol = solve_gf2(((1, 1, 0), (0, 1, 1)), (1, 0))
    assert sol is not None
    assert [(sum(r * x for r, x in zip(row, sol)) % 2)
            for row in ((1, 1, 0), (0, 1, 1))] == [1, 0]


def test_solve_gf2_unsolvable_returns_none():
    assert solve_gf2(((1, 1), (1, 1)), (0, 1)) is None


def test_rref_of_trefoil_matrix():
    e = rref_rational(TREFOIL)
    assert e.pivot_cols == (0, 1, 2)
    assert e.coeffs == (
        (1, 0, 0, 0, -1),
        (0, 1, 0, 1, 2),
        (0, 0, 1, 0, -1))
    assert e.b_coeffs == (
        (1, 0, -1),
        (-1, 1, 1),
        (1, -1, 0))


def test_rref_evaluate_solves():
    e = rref_rational(TREFOIL)
    rng = random.Random(9)
    for _ in range(20):
        b = tuple(rng.randint(-30, 30) for _ in range(3))
        free = (rng.randint(-5, 5), rng.randint(-5, 5))
        u = e.evaluate(b, free)
        for row, bv in zip(TREFOIL, b):
            assert sum(Fraction(r) * x for r, x in zip(row, u)) == bv


def test_rref_wrong_free_count():
    e = rref_rational(TREFOIL)
    with pytest.raises(ValueError):
        e.evaluate((0, 0, 0), (1,))
