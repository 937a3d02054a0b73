from __future__ import annotations

import itertools
from collections import Counter

from hypothesis import given, settings, strategies as st

from surfclass import (
    OrientationWitness,
    catalog_get,
    chord_canonical,
    classify_slw,
    classify_surface,
    close,
    components,
    euler_characteristic,
    induced_edge_orientations,
    orient2,
    relabel,
    rotation_system,
    slw_euler,
    slw_from_complex,
    trace_faces,
)

SURFACE_FIXTURES = [
    "example/two-triangles",
    "example/tetra-boundary",
    "rcc/sphere",
    "rcc/torus",
    "rcc/rp2",
    "rcc/klein",
    "rcc/cylinder",
    "rcc/mobius",
    "rcc/F03",
    "rcc/F11",
]

labels = st.text(alphabet="abcdefgh", min_size=1, max_size=2)
simplices = st.lists(
    st.lists(labels, min_size=1, max_size=4, unique=True).map(tuple),
    min_size=1,
    max_size=8,
)


@given(simplices)
def test_close_is_idempotent(gens):
    cx = close(gens)
    assert close(cx.simplices) == cx


@given(simplices)
def test_close_output_is_face_closed(gens):
    cx = close(gens)
    faces = set(cx.simplices)
    for s in faces:
        for r in range(1, len(s)):
            for sub in itertools.combinations(s, r):
                assert tuple(sorted(sub)) in faces


@given(st.sampled_from(SURFACE_FIXTURES), st.randoms(use_true_random=False))
def test_classification_is_relabel_invariant(name, rng):
    cx = catalog_get(name).payload
    verts = sorted(cx.vertex_set())
    shuffled = verts[:]
    rng.shuffle(shuffled)
    mapping = {v: f"n{w}" for v, w in zip(verts, shuffled)}
    assert classify_surface(relabel(cx, mapping)) == classify_surface(cx)


@given(st.sampled_from(SURFACE_FIXTURES), st.randoms(use_true_random=False))
def test_component_count_is_relabel_invariant(name, rng):
    cx = catalog_get(name).payload
    verts = sorted(cx.vertex_set())
    shuffled = verts[:]
    rng.shuffle(shuffled)
    mapping = dict(zip(verts, shuffled))
    assert components(relabel(cx, mapping)).count() == components(cx).count()


@given(st.sampled_from(["example/tetra-boundary", "rcc/sphere", "rcc/torus",
                        "rcc/cylinder", "rcc/F03", "rcc/F11"]))
@settings(deadline=None)
def test_orientable_surfaces_admit_exactly_two_orientations(name):
    cx = catalog_get(name).payload
    res = orient2(cx)
    assert isinstance(res, OrientationWitness)
    cells = cx.cells2()
    valid = 0
    for signs in itertools.product((0, 1), repeat=len(cells)):
        per_edge: dict = {}
        for cell, s in zip(cells, signs):
            oriented = cell if s == 0 else (cell[0],) + tuple(reversed(cell[1:]))
            for a, b in induced_edge_orientations(oriented):
                per_edge.setdefault(frozenset((a, b)), []).append((a, b))
        if all(len(d) == 1 or d[0] == (d[1][1], d[1][0]) for d in per_edge.values()):
            valid += 1
    assert valid == 2


def _random_rotation(rng, n_edges):
    darts = [(str(e), end) for e in range(1, n_edges + 1) for end in (0, 1)]
    rng.shuffle(darts)
    cuts = sorted(rng.sample(range(1, len(darts)), rng.randint(0, min(3, len(darts) - 1))))
    rotations = []
    prev = 0
    for c in cuts + [len(darts)]:
        rotations.append(tuple(lbl for lbl, _ in darts[prev:c]))
        prev = c
    signs = {str(e): rng.choice((1, -1)) for e in range(1, n_edges + 1)}
    return rotation_system([r for r in rotations if r], signs)


@given(st.randoms(use_true_random=False), st.integers(min_value=1, max_value=5))
def test_face_tracing_conserves_flags(rng, n_edges):
    rs = _random_rotation(rng, n_edges)
    tr = trace_faces(rs)
    assert tr.faces == len(tr.walks)
    assert sum(len(wk) for wk in tr.walks) == 2 * rs.edge_count()
    counts = Counter(lbl for wk in tr.walks for lbl in wk)
    assert all(c == 2 for c in counts.values())


def _involution_code(rng, n):
    points = list(range(1, 2 * n + 1))
    rng.shuffle(points)
    mate = {}
    for i in range(0, 2 * n, 2):
        a, b = points[i], points[i + 1]
        mate[a] = b
        mate[b] = a
    label: dict = {}
    out = []
    for p in range(1, 2 * n + 1):
        key = min(p, mate[p])
        if key not in label:
            label[key] = str(len(label) + 1)
        out.append(label[key])
    return tuple(out)


def _orbit_canonical(code):
    best = None
    k = len(code)
    for refl in (False, True):
        seq = code[::-1] if refl else code
        for r in range(k):
            rot = seq[r:] + seq[:r]
            lab: dict = {}
            out = []
            for c in rot:
                if c not in lab:
                    lab[c] = str(len(lab) + 1)
                out.append(lab[c])
            t = tuple(out)
            if best is None or t < best:
                best = t
    return best


@given(st.randoms(use_true_random=False), st.integers(min_value=1, max_value=5))
def test_chord_canonical_matches_orbit_oracle(rng, n):
    code = _involution_code(rng, n)
    canon = chord_canonical(code)
    assert canon == _orbit_canonical(code)
    assert chord_canonical(canon) == canon


@given(st.sampled_from(SURFACE_FIXTURES))
def test_slw_conversion_cross_oracle(name):
    cx = catalog_get(name).payload
    s = slw_from_complex(cx)
    assert slw_euler(s) == euler_characteristic(cx)
    assert classify_slw(s) == classify_surface(cx)[0]
