import random

import pytest

from regionchoice.catalog import catalog
from regionchoice.diagram import (D0, FlatDiagram, InternalInvariantError,
                                  random_diagram)
from regionchoice.incidence import DOUBLE, SINGLE, apply, build_matrix, residual
from regionchoice.solvers import (PinnedKernelRequest, add1_algebraic,
                                  add1_geometric, arc_unimodularity_report,
                                  kernel_basis, pinned_kernel, solve,
                                  solve_mod2, solve_single_via_double, verify)


def unit(n, v):
    return tuple(1 if i == v else 0 for i in range(n))


def test_solve_trefoil_known_family():
    D = catalog("3_1")
    fam = solve(D, SINGLE, (1, 0, 0))
    assert fam.particular == (-1, 1, -1, 0, 0)
    assert fam.kernel == ((0, -1, 0, 1, 0), (1, -2, 1, 0, 1))


def test_solve_rejects_links():
    link = FlatDiagram(((1, 2, 3, 4), (1, 4, 3, 2)))
    with pytest.raises(ValueError):
        solve(link, DOUBLE, (0, 0))


def test_solve_curl_double():
    fam = solve(D0, DOUBLE, (5,))
    assert apply(build_matrix(D0, DOUBLE), fam.particular) == (-5,)


def test_verify_reports_per_crossing():
    D = catalog("4_1")
    b = (2, -1, 0, 7)
    fam = solve(D, SINGLE, b)
    report = verify(D, SINGLE, fam.particular, b)
    assert report.passed
    assert report.residual == (0, 0, 0, 0)
    assert report.per_crossing == (("v1", 0), ("v2", 0), ("v3", 0), ("v4", 0))
    bad = verify(D, SINGLE, fam.particular, (0, 0, 0, 0))
    assert not bad.passed


def test_kernel_contains_checkerboard():
    from regionchoice.diagram import checkerboard
    for name in ("3_1", "5_2", "example2_4"):
        D = catalog(name)
        M = build_matrix(D, DOUBLE)
        assert apply(M, checkerboard(D).signs) == (0,) * D.crossing_count


def test_pinned_kernel_values():
    D = catalog("3_1")
    u = pinned_kernel(D, PinnedKernelRequest(arc=1, a=0, b=1))
    assert u == (0, -1, 0, 1, 0)
    # the requested values sit on the two sides of arc 1
    from regionchoice.diagram import arc_by_label
    r1, r2 = arc_by_label(D, 1).sides
    assert (u[r1], u[r2]) == (0, 1)


def test_pinned_kernel_arbitrary_pairs():
    D = catalog("5_1")
    from regionchoice.diagram import arc_by_label
    for a, b in ((0, 1), (3, -2), (7, 7)):
        u = pinned_kernel(D, PinnedKernelRequest(arc=4, a=a, b=b))
        r1, r2 = arc_by_label(D, 4).sides
        assert (u[r1], u[r2]) == (a, b)
        assert apply(build_matrix(D, DOUBLE), u) == (0,) * 5


def test_arc_unimodularity_on_catalog():
    for name in ("d0", "3_1", "4_1", "example2_4"):
        D = catalog(name)
        for rule in (SINGLE, DOUBLE):
            report = arc_unimodularity_report(D, rule)
            assert set(report.values()) == {1}


def test_add1_algebraic_unit_residual():
    D = catalog("4_1")
    for v in range(4):
        for rule in (SINGLE, DOUBLE):
            cert = add1_algebraic(D, rule, v)
            assert cert.residual == unit(4, v)


def test_add1_algebraic_bad_crossing():
    with pytest.raises(ValueError):
        add1_algebraic(D0, SINGLE, 5)


def test_add1_geometric_unit_residual():
    for name in ("d0", "3_1", "example2_4"):
        D = catalog(name)
        for v in range(D.crossing_count):
            cert = add1_geometric(D, v)
            assert cert.residual == unit(D.crossing_count, v)
            assert cert.rule == DOUBLE


def test_add1_paths_differ_by_kernel():
    D = catalog("3_1")
    M = build_matrix(D, DOUBLE)
    for v in range(3):
        g = add1_geometric(D, v).assignment
        a = add1_algebraic(D, DOUBLE, v).assignment
        diff = tuple(x - y for x, y in zip(g, a))
        assert apply(M, diff) == (0, 0, 0)


def test_single_via_double_matches_direct():
    D = catalog("example2_4")
    M = build_matrix(D, SINGLE)
    rng = random.Random(11)
    for _ in range(10):
        b = tuple(rng.randint(-20, 20) for _ in range(4))
        u = solve_single_via_double(D, b)
        assert residual(M, u, b) == (0, 0, 0, 0)
        direct = solve(D, SINGLE, b).particular
        diff = tuple(x - y for x, y in zip(u, direct))
        assert apply(M, diff) == (0, 0, 0, 0)


def test_mod2_solutions_verify():
    rng = random.Random(2)
    for name in ("3_1", "5_2", "example2_4"):
        D = catalog(name)
        M = build_matrix(D, SINGLE)
        n = D.crossing_count
        for _ in range(20):
            b = tuple(rng.randint(0, 1) for _ in range(n))
            chosen = solve_mod2(D, b)
            u = tuple(1 if r in chosen else 0 for r in range(D.region_count))
            assert all(x % 2 == 0 for x in residual(M, u, b))


def test_kernel_basis_spans_for_random_diagrams():
    for seed in (3, 8, 21):
        D = random_diagram(seed, 6)
        for rule in (SINGLE, DOUBLE):
            k1, k2 = kernel_basis(D, rule)
            M = build_matrix(D, rule)
            assert apply(M, k1) == (0,) * D.crossing_count
            assert apply(M, k2) == (0,) * D.crossing_count
