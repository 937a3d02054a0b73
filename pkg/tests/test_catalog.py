from __future__ import annotations

import pytest

from surfclass import (
    NonOrientable,
    SurfaceType,
    UnknownFixture,
    catalog_get,
    catalog_list,
    chord_to_rotation,
    classify_embedding,
    classify_slw,
    classify_surface,
    components,
    orient2,
)


def _recompute(fx):
    if fx.name == "example/three-components":
        return components(fx.payload).components
    if fx.name == "example/twisted-quads":
        res = orient2(fx.payload)
        return "non-orientable" if isinstance(res, NonOrientable) else "orientable"
    if fx.kind in ("scx", "cw2"):
        types = classify_surface(fx.payload)
        assert len(types) == 1
        return types[0]
    if fx.kind == "rot":
        return classify_embedding(fx.payload)
    if fx.kind == "chord":
        return classify_embedding(chord_to_rotation(fx.payload))
    if fx.kind == "slw":
        return classify_slw(fx.payload)
    raise AssertionError(fx.kind)


def test_listing_is_sorted_and_complete():
    names = catalog_list()
    assert names == sorted(names)
    assert len(names) == 65
    assert "rcc/sphere" in names
    assert "rot/R21" in names
    assert "chord/Ch9" in names
    assert "slw/klein" in names


def test_unknown_fixture():
    with pytest.raises(UnknownFixture):
        catalog_get("rcc/does-not-exist")


@pytest.mark.parametrize("name", catalog_list())
def test_fixture_verdict_recomputes(name):
    fx = catalog_get(name)
    assert _recompute(fx) == fx.expected


def test_expected_types_by_family():
    for i in range(1, 21):
        assert catalog_get(f"rot/R{i}").expected == SurfaceType(True, 0, 0, 2)
    for i in range(21, 28):
        assert catalog_get(f"rot/R{i}").expected == SurfaceType(True, 1, 0, 0)
    for i in range(28, 32):
        assert catalog_get(f"rot/R{i}").expected == SurfaceType(True, 2, 0, -2)
    for i in range(32, 37):
        assert catalog_get(f"rot/R{i}").expected == SurfaceType(False, 1, 0, 1)
    for i in range(37, 39):
        assert catalog_get(f"rot/R{i}").expected == SurfaceType(False, 2, 0, 0)
