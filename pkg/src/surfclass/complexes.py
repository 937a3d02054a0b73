"""Core combinatorial complexes and their text/JSON formats.

Two cell-complex flavors are supported: simplicial complexes of dimension
at most 3 (vertices, edges, triangles, tetrahedra) and regular CW
2-complexes whose 2-cells are cycles of pairwise distinct vertices.
Vertices are opaque string labels throughout; edges are unordered label
pairs, stored as sorted tuples.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Mapping

from .errors import (
    EmptyComplex,
    MalformedFace,
    NotRegular,
    ParseError,
    UnsupportedDimension,
)

Vertex = str
Edge = tuple[str, str]
Simplex = tuple[str, ...]
Cycle = tuple[str, ...]


def norm_edge(a: str, b: str) -> Edge:
    """Return the unordered edge {a, b} as a sorted pair."""
    if a == b:
        raise ValueError(f"degenerate edge ({a!r}, {b!r})")
    return (a, b) if a < b else (b, a)


def simplex(vertices: Iterable[str], line: int | None = None) -> Simplex:
    """Normalize a vertex collection into a sorted simplex tuple.

    Rejects duplicate vertices and anything above dimension 3 (more than
    4 vertices).
    """
    verts = tuple(sorted(str(v) for v in vertices))
    if not verts:
        raise ParseError("empty simplex", line)
    if len(set(verts)) != len(verts):
        raise ParseError(f"duplicate vertex in simplex {' '.join(verts)}", line)
    if len(verts) > 4:
        raise UnsupportedDimension(
            f"simplex with {len(verts)} vertices exceeds dimension 3", line
        )
    return verts


def canonical_cycle(seq: Iterable[str]) -> Cycle:
    """Rotate/reflect a face cycle into its canonical presentation.

    The smallest vertex comes first and its smaller neighbor second, so
    equal cycles (up to rotation and direction) get equal tuples.
    """
    cyc = tuple(str(v) for v in seq)
    k = len(cyc)
    i = cyc.index(min(cyc))
    rotated = cyc[i:] + cyc[:i]
    if rotated[1] > rotated[-1]:
        rotated = (rotated[0],) + tuple(reversed(rotated[1:]))
    return rotated


def cycle_edges(cycle: Cycle) -> list[Edge]:
    """Edges of a face cycle: consecutive pairs including last-first."""
    k = len(cycle)
    return [norm_edge(cycle[i], cycle[(i + 1) % k]) for i in range(k)]


# =====================================================================
# Simplicial complexes
# =====================================================================


@dataclass(frozen=True)
class SimplicialComplex:
    """A face-closed set of simplices of dimension at most 3."""

    simplices: frozenset[Simplex]

    def vertex_set(self) -> frozenset[str]:
        return frozenset(s[0] for s in self.simplices if len(s) == 1)

    def edge_set(self) -> frozenset[Edge]:
        return frozenset(s for s in self.simplices if len(s) == 2)  # type: ignore[misc]

    def triangles(self) -> tuple[Simplex, ...]:
        return tuple(sorted(s for s in self.simplices if len(s) == 3))

    def tetrahedra(self) -> tuple[Simplex, ...]:
        return tuple(sorted(s for s in self.simplices if len(s) == 4))

    def cells2(self) -> tuple[Cycle, ...]:
        """The 2-cells as cycles; a triangle (a,b,c) is its own 3-cycle."""
        return self.triangles()

    def dim(self) -> int:
        return max(len(s) for s in self.simplices) - 1 if self.simplices else -1

    def counts(self) -> tuple[int, int, int, int]:
        ns = [0, 0, 0, 0]
        for s in self.simplices:
            ns[len(s) - 1] += 1
        return tuple(ns)  # type: ignore[return-value]


def close(simplices: Iterable[Iterable[str]]) -> SimplicialComplex:
    """Face closure: add every nonempty subset of every given simplex."""
    out: set[Simplex] = set()
    for raw in simplices:
        top = simplex(raw)
        for k in range(1, len(top) + 1):
            out.update(combinations(top, k))
    return SimplicialComplex(frozenset(out))


# =====================================================================
# Regular CW 2-complexes
# =====================================================================


@dataclass(frozen=True)
class CWComplex2:
    """A regular CW 2-complex.

    Faces are cycles of pairwise distinct vertices; 1-cells are
    identified by their unordered endpoint pair, so there are no
    parallel edges (rotation systems cover multigraph needs).
    """

    vertices: frozenset[str]
    edges: frozenset[Edge]
    faces: tuple[Cycle, ...]

    def vertex_set(self) -> frozenset[str]:
        return self.vertices

    def edge_set(self) -> frozenset[Edge]:
        return self.edges

    def cells2(self) -> tuple[Cycle, ...]:
        return self.faces

    def dim(self) -> int:
        if self.faces:
            return 2
        if self.edges:
            return 1
        return 0 if self.vertices else -1

    def counts(self) -> tuple[int, int, int]:
        return (len(self.vertices), len(self.edges), len(self.faces))


def cw_complex(
    faces: Iterable[Iterable[str]],
    extra_edges: Iterable[tuple[str, str]] = (),
    extra_vertices: Iterable[str] = (),
) -> CWComplex2:
    """Build a CW 2-complex from face cycles plus optional loose cells."""
    canon_faces = []
    for raw in faces:
        cyc = tuple(str(v) for v in raw)
        if len(cyc) < 3:
            raise MalformedFace(f"face cycle {' '.join(cyc)} has fewer than 3 vertices")
        if len(set(cyc)) != len(cyc):
            raise NotRegular(f"face cycle {' '.join(cyc)} repeats a vertex")
        canon_faces.append(canonical_cycle(cyc))
    edges: set[Edge] = set()
    for cyc in canon_faces:
        edges.update(cycle_edges(cyc))
    for a, b in extra_edges:
        edges.add(norm_edge(str(a), str(b)))
    vertices: set[str] = set(str(v) for v in extra_vertices)
    for cyc in canon_faces:
        vertices.update(cyc)
    for a, b in edges:
        vertices.add(a)
        vertices.add(b)
    return CWComplex2(frozenset(vertices), frozenset(edges), tuple(sorted(canon_faces)))


Complex = SimplicialComplex | CWComplex2


# =====================================================================
# Parsing
# =====================================================================


def _content_lines(text: str) -> list[tuple[int, str]]:
    # '#' starts a comment; blank lines are skipped
    out = []
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append((no, line))
    return out


def parse_simplicial(text: str) -> SimplicialComplex:
    """Parse the one-simplex-per-line text format and take the closure."""
    tops = []
    for no, line in _content_lines(text):
        tops.append(simplex(line.split(), no))
    if not tops:
        raise ParseError("empty input: no simplices")
    out: set[Simplex] = set()
    for top in tops:
        for k in range(1, len(top) + 1):
            out.update(combinations(top, k))
    return SimplicialComplex(frozenset(out))


def parse_cw2(text: str) -> CWComplex2:
    """Parse the F:/E:/V: line format for CW 2-complexes."""
    faces: list[tuple[str, ...]] = []
    extra_edges: list[tuple[str, str]] = []
    extra_vertices: list[str] = []
    seen = False
    for no, line in _content_lines(text):
        seen = True
        if line.startswith("F:"):
            cyc = tuple(line[2:].split())
            if len(cyc) < 3:
                raise MalformedFace(f"face cycle {' '.join(cyc)} has fewer than 3 vertices", no)
            if len(set(cyc)) != len(cyc):
                raise NotRegular(f"face cycle {' '.join(cyc)} repeats a vertex", no)
            faces.append(cyc)
        elif line.startswith("E:"):
            ends = line[2:].split()
            if len(ends) != 2 or ends[0] == ends[1]:
                raise ParseError(f"edge needs two distinct endpoints: {line!r}", no)
            extra_edges.append((ends[0], ends[1]))
        elif line.startswith("V:"):
            labels = line[2:].split()
            if len(labels) != 1:
                raise ParseError(f"vertex line needs exactly one label: {line!r}", no)
            extra_vertices.append(labels[0])
        else:
            raise ParseError(f"expected F:/E:/V: line, got {line!r}", no)
    if not seen:
        raise ParseError("empty input: no cells")
    return cw_complex(faces, extra_edges, extra_vertices)


def _parse_json_obj(obj: object) -> Complex:
    if not isinstance(obj, dict):
        raise ParseError("JSON document must be an object")
    if "simplices" in obj:
        items = obj["simplices"]
        if not isinstance(items, list) or not items:
            raise ParseError('"simplices" must be a nonempty list')
        return close(tuple(str(v) for v in s) for s in items)
    if "faces" in obj or "edges" in obj or "vertices" in obj:
        faces = obj.get("faces", [])
        edges = obj.get("edges", [])
        vertices = obj.get("vertices", [])
        if not (faces or edges or vertices):
            raise ParseError("empty input: no cells")
        return cw_complex(
            (tuple(str(v) for v in f) for f in faces),
            ((str(a), str(b)) for a, b in edges),
            (str(v) for v in vertices),
        )
    raise ParseError('JSON document needs "simplices" or "faces"/"edges"/"vertices"')


def parse_complex(text: str, fmt: str = "auto") -> Complex:
    """Parse a complex in scx, cw2, or JSON form.

    With fmt="auto", a leading "{" selects JSON, any F:/E:/V: line
    selects cw2, and anything else is read as simplicial text.
    """
    if fmt not in ("auto", "scx", "cw2"):
        raise ValueError(f"unknown format {fmt!r}")
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad JSON: {exc}") from None
        return _parse_json_obj(obj)
    if fmt == "scx":
        return parse_simplicial(text)
    if fmt == "cw2":
        return parse_cw2(text)
    for _, line in _content_lines(text):
        if line.startswith(("F:", "E:", "V:")):
            return parse_cw2(text)
    return parse_simplicial(text)


# =====================================================================
# Serialization
# =====================================================================


def to_text(cx: Complex) -> str:
    """Canonical text form; parse(to_text(cx)) == cx."""
    if isinstance(cx, SimplicialComplex):
        return "\n".join(" ".join(s) for s in sorted(cx.simplices)) + "\n"
    lines = [f"F: {' '.join(cyc)}" for cyc in cx.faces]
    in_faces: set[Edge] = set()
    for cyc in cx.faces:
        in_faces.update(cycle_edges(cyc))
    covered = set(v for e in cx.edges for v in e)
    for a, b in sorted(cx.edges - in_faces):
        lines.append(f"E: {a} {b}")
    for v in sorted(cx.vertices - covered - set(v for c in cx.faces for v in c)):
        lines.append(f"V: {v}")
    return "\n".join(lines) + "\n"


def to_json_obj(cx: Complex) -> dict:
    """Canonical JSON-ready dict mirroring the text format."""
    if isinstance(cx, SimplicialComplex):
        return {"simplices": [list(s) for s in sorted(cx.simplices)]}
    in_faces: set[Edge] = set()
    for cyc in cx.faces:
        in_faces.update(cycle_edges(cyc))
    covered = set(v for e in cx.edges for v in e)
    return {
        "faces": [list(c) for c in cx.faces],
        "edges": [list(e) for e in sorted(cx.edges - in_faces)],
        "vertices": sorted(cx.vertices - covered - set(v for c in cx.faces for v in c)),
    }


# =====================================================================
# Basic invariants
# =====================================================================


@dataclass(frozen=True)
class Skeleton1:
    """The 1-skeleton: all vertices and all 1-cells."""

    vertices: frozenset[str]
    edges: frozenset[Edge]


def skeleton1(cx: Complex) -> Skeleton1:
    return Skeleton1(cx.vertex_set(), cx.edge_set())


def euler_characteristic(cx: Complex) -> int:
    """Alternating sum of cell counts (V - E + F - T)."""
    if isinstance(cx, SimplicialComplex):
        v, e, f, t = cx.counts()
        return v - e + f - t
    v, e, f = cx.counts()
    return v - e + f


def relabel(cx: Complex, mapping: Mapping[str, str]) -> Complex:
    """Apply a vertex relabeling; the map must be injective on vertices."""
    verts = cx.vertex_set()
    image = {mapping.get(v, v) for v in verts}
    if len(image) != len(verts):
        raise ValueError("relabeling is not injective on the vertex set")

    def m(v: str) -> str:
        return str(mapping.get(v, v))

    if isinstance(cx, SimplicialComplex):
        return SimplicialComplex(frozenset(tuple(sorted(m(v) for v in s)) for s in cx.simplices))
    return CWComplex2(
        frozenset(m(v) for v in cx.vertices),
        frozenset(norm_edge(m(a), m(b)) for a, b in cx.edges),
        tuple(sorted(canonical_cycle(tuple(m(v) for v in cyc)) for cyc in cx.faces)),
    )


def induced_subcomplex(cx: Complex, vertices: Iterable[str]) -> Complex:
    """Restrict to the cells whose vertices all lie in the given set."""
    keep = set(vertices)
    if isinstance(cx, SimplicialComplex):
        return SimplicialComplex(frozenset(s for s in cx.simplices if set(s) <= keep))
    return CWComplex2(
        frozenset(v for v in cx.vertices if v in keep),
        frozenset(e for e in cx.edges if set(e) <= keep),
        tuple(c for c in cx.faces if set(c) <= keep),
    )


def empty_check(cx: Complex) -> None:
    """Raise EmptyComplex when there is not a single vertex."""
    if not cx.vertex_set():
        raise EmptyComplex("complex has no vertices")
