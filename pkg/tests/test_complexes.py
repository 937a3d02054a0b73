from __future__ import annotations

import itertools
import json

import pytest

from surfclass import (
    CWComplex2,
    MalformedFace,
    NotRegular,
    ParseError,
    SimplicialComplex,
    UnsupportedDimension,
    close,
    cw_complex,
    euler_characteristic,
    induced_subcomplex,
    parse_complex,
    parse_cw2,
    parse_simplicial,
    relabel,
    skeleton1,
    to_json_obj,
    to_text,
)


def test_close_generates_all_faces():
    cx = close([("0", "1", "2")])
    assert cx.vertex_set() == {"0", "1", "2"}
    assert cx.edge_set() == {("0", "1"), ("0", "2"), ("1", "2")}
    assert cx.triangles() == (("0", "1", "2"),)
    assert cx.tetrahedra() == ()


def test_close_is_idempotent():
    cx = close([("a", "b", "c", "d"), ("x", "y")])
    assert close(cx.simplices) == cx


def test_close_counts_triangle_plus_disjoint_edge():
    # oracle: every nonempty subset of each generator is a face
    cx = close([("0", "1", "2"), ("3", "4")])
    expect = set()
    for gen in [("0", "1", "2"), ("3", "4")]:
        for r in range(1, len(gen) + 1):
            expect.update(tuple(sorted(s)) for s in itertools.combinations(gen, r))
    assert set(cx.simplices) == expect
    assert len(cx.vertex_set()) == 5
    assert len(cx.edge_set()) == 4
    assert len(cx.triangles()) == 1


def test_simplices_are_stored_sorted_and_deduplicated():
    cx = close([("2", "1"), ("1", "2")])
    assert cx.edge_set() == {("1", "2")}


def test_simplex_rejects_repeats_and_high_dimension():
    with pytest.raises(ParseError):
        close([("a", "a")])
    with pytest.raises(UnsupportedDimension):
        close([("0", "1", "2", "3", "4")])


def test_cw_complex_stores_canonical_cycles():
    cx = cw_complex([("2", "3", "0", "1")])
    assert cx.faces == (("0", "1", "2", "3"),)
    # reversal gives the same stored cycle
    assert cw_complex([("1", "0", "3", "2")]).faces == (("0", "1", "2", "3"),)


def test_cw_complex_derives_edges_and_vertices():
    cx = cw_complex([("0", "1", "2", "3")], extra_edges=[("4", "5")], extra_vertices=["9"])
    assert ("4", "5") in cx.edge_set()
    assert "9" in cx.vertex_set()
    assert cx.edge_set() >= {("0", "1"), ("1", "2"), ("2", "3"), ("0", "3")}


def test_cw_complex_rejects_degenerate_cycles():
    with pytest.raises(MalformedFace):
        cw_complex([("0", "1")])
    with pytest.raises(NotRegular):
        cw_complex([("0", "1", "0", "2")])


def test_parse_simplicial_lines():
    cx = parse_simplicial("0 1 2\n\n# comment\n3 4\n")
    assert cx == close([("0", "1", "2"), ("3", "4")])


def test_parse_simplicial_error_carries_line_number():
    with pytest.raises(ParseError) as ei:
        parse_simplicial("0 1 2\n1 1\n")
    assert "line 2" in str(ei.value)


def test_parse_cw2_lines():
    text = "F: 0 1 2 3\nE: 4 5\nV: 9\n"
    cx = parse_cw2(text)
    assert isinstance(cx, CWComplex2)
    assert cx.faces == (("0", "1", "2", "3"),)
    assert ("4", "5") in cx.edge_set()
    assert "9" in cx.vertex_set()


def test_parse_cw2_rejects_unknown_prefix():
    with pytest.raises(ParseError) as ei:
        parse_cw2("F: 0 1 2\nQ: zzz\n")
    assert "line 2" in str(ei.value)


def test_parse_complex_auto_detection():
    assert isinstance(parse_complex("0 1 2\n"), SimplicialComplex)
    assert isinstance(parse_complex("F: 0 1 2\n"), CWComplex2)
    j = json.dumps({"simplices": [["0", "1"]]})
    assert isinstance(parse_complex(j), SimplicialComplex)


def test_parse_complex_explicit_format_overrides():
    with pytest.raises(ParseError):
        parse_complex("0 1 2\n", fmt="cw2")
    # under scx the prefix is just another vertex label
    cx = parse_complex("F: 0 1 2\n", fmt="scx")
    assert "F:" in cx.vertex_set()


def test_text_round_trip_simplicial():
    cx = close([("0", "1", "2"), ("2", "3"), ("9",)])
    assert parse_complex(to_text(cx)) == cx


def test_text_round_trip_cw():
    cx = cw_complex([("0", "1", "2", "3"), ("0", "1", "4")], extra_edges=[("7", "8")])
    assert parse_complex(to_text(cx)) == cx


def test_json_round_trip():
    for cx in (close([("0", "1", "2")]), cw_complex([("0", "1", "2", "3")])):
        back = parse_complex(json.dumps(to_json_obj(cx)))
        assert back == cx


def test_euler_characteristic_tetra_boundary():
    cx = close([t for t in itertools.combinations("0123", 3)])
    assert euler_characteristic(cx) == 4 - 6 + 4 == 2


def test_euler_characteristic_counts_tetrahedra():
    cx = close([("0", "1", "2", "3")])
    assert euler_characteristic(cx) == 4 - 6 + 4 - 1


def test_skeleton1_drops_higher_cells():
    cx = close([("0", "1", "2")])
    sk = skeleton1(cx)
    assert sk.vertices == cx.vertex_set()
    assert sk.edges == cx.edge_set()


def test_relabel_applies_bijection():
    cx = close([("0", "1", "2")])
    out = relabel(cx, {"0": "a", "1": "b", "2": "c"})
    assert out == close([("a", "b", "c")])


def test_relabel_rejects_collisions():
    cx = close([("0", "1")])
    with pytest.raises(ValueError):
        relabel(cx, {"0": "x", "1": "x"})


def test_induced_subcomplex_keeps_contained_cells():
    cx = close([("0", "1", "2"), ("2", "3", "4")])
    sub = induced_subcomplex(cx, {"0", "1", "2", "3"})
    assert sub.triangles() == (("0", "1", "2"),)
    assert ("2", "3") in sub.edge_set()
    assert "4" not in sub.vertex_set()
