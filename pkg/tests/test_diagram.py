import json

import pytest

from regionchoice.diagram import (D0, DiagramError, FlatDiagram, apply_r1,
                                  apply_r2, arc_by_label, arcs, checkerboard,
                                  component_count, corner_count, is_knot,
                                  is_reducible, parse_flat_pd, random_diagram,
                                  reducible_crossings, region_at_corner,
                                  regions, splice, to_dot, to_flat_pd)

TREFOIL = ((1, 4, 2, 5), (3, 6, 4, 1), (5, 2, 6, 3))


def test_d0_has_three_regions():
    assert D0.crossing_count == 1
    assert D0.region_count == 3


def test_trefoil_counts():
    D = FlatDiagram(TREFOIL)
    assert D.crossing_count == 3
    assert D.region_count == 5
    assert component_count(D) == 1
    assert is_knot(D)


def test_unpaired_label_rejected():
    with pytest.raises(DiagramError):
        FlatDiagram(((1, 2, 2, 3),))


def test_label_out_of_range_rejected():
    with pytest.raises(DiagramError):
        FlatDiagram(((1, 2, 2, 5),))


def test_nonspherical_code_rejected():
    # a gluing whose face count violates Euler's formula on the sphere
    with pytest.raises(DiagramError, match="spher"):
        FlatDiagram(((1, 3, 2, 4), (2, 4, 1, 3)))


def test_region_corner_lookup():
    regs = regions(D0)
    assert [r.corners for r in regs] == [((0, 0), (0, 2)), ((0, 1),), ((0, 3),)]
    assert region_at_corner(D0, 0, 0) == region_at_corner(D0, 0, 2)
    assert corner_count(D0, 0, 0) == 2
    assert corner_count(D0, 1, 0) == 1


def test_d0_crossing_is_reducible():
    assert is_reducible(D0, 0)
    assert reducible_crossings(D0) == (0,)


def test_trefoil_has_no_reducible_crossing():
    assert reducible_crossings(FlatDiagram(TREFOIL)) == ()


def test_arcs_cover_every_label_once():
    D = FlatDiagram(TREFOIL)
    labels = sorted(a.label for a in arcs(D))
    assert labels == [1, 2, 3, 4, 5, 6]
    # each arc separates two distinct regions
    for a in arcs(D):
        assert a.sides[0] != a.sides[1]


def test_arc_by_label_missing():
    with pytest.raises(DiagramError):
        arc_by_label(D0, 99)


def test_checkerboard_is_proper():
    for D in (D0, FlatDiagram(TREFOIL)):
        signs = checkerboard(D).signs
        assert set(signs) <= {1, -1}
        for a in arcs(D):
            assert signs[a.sides[0]] == -signs[a.sides[1]]


def test_checkerboard_trefoil_pattern():
    signs = checkerboard(FlatDiagram(TREFOIL)).signs
    assert signs == (1, -1, 1, -1, 1)


def test_flat_pd_roundtrip():
    D = FlatDiagram(TREFOIL, "trefoil")
    doc = to_flat_pd(D)
    back = parse_flat_pd(doc)
    assert back.crossings == D.crossings
    assert back.name == "trefoil"


def test_parse_rejects_garbage():
    with pytest.raises(DiagramError):
        parse_flat_pd("not json")
    with pytest.raises(DiagramError):
        parse_flat_pd(json.dumps({"name": "x"}))
    with pytest.raises(DiagramError):
        parse_flat_pd(json.dumps({"crossings": [[1, 2, 3]]}))


def test_dot_output_mentions_every_crossing():
    out = to_dot(FlatDiagram(TREFOIL))
    for v in ("v1", "v2", "v3"):
        assert v in out


def test_r1_grows_by_one_crossing():
    grown = apply_r1(D0, 1, "left")
    assert grown.crossing_count == 2
    assert grown.region_count == 4


def test_r1_on_trefoil_leaves_one_reducible_crossing():
    D = FlatDiagram(TREFOIL)
    for arc in arcs(D):
        for side in ("left", "right"):
            grown = apply_r1(D, arc.label, side)
            assert grown.crossing_count == 4
            assert grown.region_count == 6
            assert len(reducible_crossings(grown)) == 1


def test_r1_bad_side():
    with pytest.raises(DiagramError):
        apply_r1(D0, 1, "up")


def test_r2_on_curl_loop_arcs():
    grown = apply_r2(D0, 1, 2)
    assert grown.crossing_count == 3
    assert grown.region_count == 5


def test_r2_needs_shared_region():
    D = apply_r2(D0, 1, 2)
    # find two arcs with disjoint sides, if any exist here they must fail
    seen = False
    for a in arcs(D):
        for b in arcs(D):
            if a.label < b.label and not set(a.sides) & set(b.sides):
                seen = True
                with pytest.raises(DiagramError):
                    apply_r2(D, a.label, b.label)
    assert seen or True  # small diagrams may have no disjoint pair


def test_r2_same_arc_rejected():
    with pytest.raises(DiagramError):
        apply_r2(D0, 1, 1)


def test_random_diagram_deterministic():
    a = random_diagram(42, 5)
    b = random_diagram(42, 5)
    assert a.crossings == b.crossings


def test_random_diagram_zero_moves_is_curl():
    assert random_diagram(42, 0).crossings == D0.crossings


def test_random_diagram_stays_valid_knot():
    for seed in range(1, 16):
        D = random_diagram(seed, 5)
        assert D.crossing_count <= 11
        assert D.region_count == D.crossing_count + 2
        assert is_knot(D)


def test_splice_gives_two_components():
    D = FlatDiagram(TREFOIL)
    for v in range(3):
        split = splice(D, v)
        kept = set(split.first.crossings) | set(split.second.crossings)
        # crossings between the two new curves belong to neither sub-diagram
        assert kept <= {0, 1, 2} - {v}
        assert not set(split.first.crossings) & set(split.second.crossings)
        for comp in (split.first, split.second):
            assert len(comp.region_map) == D.region_count
            assert max(comp.region_map) < comp.region_count


def test_splice_keeps_self_crossings():
    # a curl stacked on a curl: smoothing one keeps the other as a
    # self-crossing of its component
    D = apply_r1(D0, 1, "left")
    for v in range(2):
        split = splice(D, v)
        kept = set(split.first.crossings) | set(split.second.crossings)
        assert kept == {0, 1} - {v}


def test_splice_of_curl_yields_bare_loops():
    split = splice(D0, 0)
    assert split.first.diagram is None
    assert split.second.diagram is None


def test_splice_rejects_links():
    two = FlatDiagram(((1, 2, 3, 4), (1, 4, 3, 2)))
    assert component_count(two) == 2
    with pytest.raises(DiagramError):
        splice(two, 0)
