"""Rotation systems of embedded graphs and chord diagrams.

A rotation system lists the edge ends around each vertex in cyclic
order and carries a per-edge sign vector u; a - sign records that the
local orientations at the edge's two ends disagree. Face tracing on
traversal flags recovers the face count, hence the Euler characteristic
and the genus of the embedding. Chord diagrams are the one-vertex,
all-+ case.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Mapping, Sequence

from .classify import SurfaceType, genus
from .errors import BoundExceeded, Disconnected, ParseError

Dart = tuple[int, int]  # (vertex index, position in its rotation)
Flag = tuple[int, int, int]  # dart plus a side bit
ChordCode = tuple[str, ...]


def _label_key(label: str) -> tuple:
    # numeric labels sort numerically, everything else lexicographically
    return (0, int(label), "") if label.isdigit() else (1, 0, label)


@dataclass(frozen=True)
class RotationSystem:
    """Cyclic dart orders per vertex plus the sign vector u."""

    rotations: tuple[tuple[str, ...], ...]
    signs: tuple[tuple[str, int], ...]  # (edge label, +1/-1), label-sorted

    def labels(self) -> tuple[str, ...]:
        return tuple(label for label, _ in self.signs)

    def sign_map(self) -> dict[str, int]:
        return dict(self.signs)

    def edge_count(self) -> int:
        return len(self.signs)

    def vertex_count(self) -> int:
        return len(self.rotations)


def rotation_system(
    rotations: Iterable[Iterable[str]],
    signs: Mapping[str, int] | None = None,
) -> RotationSystem:
    """Validate dart multiplicities and complete the sign vector."""
    rots = tuple(tuple(str(d) for d in vertex) for vertex in rotations)
    counts: dict[str, int] = {}
    for vertex in rots:
        for label in vertex:
            counts[label] = counts.get(label, 0) + 1
    for label, n in sorted(counts.items()):
        if n != 2:
            raise ParseError(f"edge {label} appears {n} times (need 2)")
    labels = sorted(counts, key=_label_key)
    if signs is None:
        signs = {}
    else:
        signs = {str(k): v for k, v in signs.items()}
        unknown = set(signs) - set(labels)
        if unknown:
            raise ParseError(f"sign given for unknown edge {sorted(unknown)[0]!r}")
    for v in signs.values():
        if v not in (1, -1):
            raise ParseError(f"signs must be +1 or -1, got {v!r}")
    return RotationSystem(rots, tuple((l, signs.get(l, 1)) for l in labels))


# =====================================================================
# Text format
# =====================================================================


def _split_top(text: str, sep: str) -> list[str]:
    out, depth, cur = [], 0, []
    for ch in text:
        if ch == "{":
            depth += 1
        elif ch == "}":
            depth -= 1
            if depth < 0:
                raise ParseError("unbalanced braces in rotation system")
        if ch == sep and depth == 0:
            out.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    if depth != 0:
        raise ParseError("unbalanced braces in rotation system")
    out.append("".join(cur))
    return out


def _wholly_braced(text: str) -> bool:
    if not (text.startswith("{") and text.endswith("}")):
        return False
    depth = 0
    for i, ch in enumerate(text):
        if ch == "{":
            depth += 1
        elif ch == "}":
            depth -= 1
            if depth == 0:
                return i == len(text) - 1
    return False


def _parse_vertex_group(group: str) -> tuple[str, ...]:
    group = group.strip()
    if _wholly_braced(group):
        group = group[1:-1].strip()
    if not group:
        raise ParseError("empty vertex group in rotation system")
    if "," in group:
        labels = tuple(tok.strip() for tok in group.split(","))
        if any(not tok for tok in labels):
            raise ParseError(f"empty label in vertex group {group!r}")
        return labels
    if group.isdigit():
        return tuple(group)  # digit string: one dart per digit
    return (group,)


def _parse_rotation_groups(body: str) -> tuple[tuple[str, ...], ...]:
    """Resolve the vertex groups of the rotation body.

    Braced groups are explicit. A bare comma list of single characters
    is one vertex's rotation ("{1,1}" is a loop); once any multi-
    character token appears, each token stands for its own vertex
    ("{12,12}" is two vertices joined by two edges).
    """
    groups = [g.strip() for g in _split_top(body, ",")]
    if any(not g for g in groups):
        raise ParseError("empty vertex group in rotation system")
    if any(g.startswith("{") for g in groups):
        return tuple(_parse_vertex_group(g) for g in groups)
    if len(groups) > 1 and all(len(g) == 1 for g in groups):
        return (tuple(groups),)
    return tuple(_parse_vertex_group(g) for g in groups)


def _parse_signs(text: str, labels: Sequence[str]) -> dict[str, int]:
    text = text.strip().rstrip(";").strip()
    if _wholly_braced(text):
        text = text[1:-1]
    tokens = text.replace(",", " ").split()
    if len(tokens) == 1 and len(tokens[0]) > 1 and set(tokens[0]) <= {"+", "-"}:
        tokens = list(tokens[0])
    for tok in tokens:
        if tok not in ("+", "-"):
            raise ParseError(f"bad sign {tok!r} in u vector")
    if len(tokens) != len(labels):
        raise ParseError(
            f"sign list length mismatch: {len(tokens)} signs for {len(labels)} edges"
        )
    return {l: (1 if tok == "+" else -1) for l, tok in zip(labels, tokens)}


def parse_rotation(text: str) -> RotationSystem:
    """Parse brace/CSV rotation notation with an optional u= sign vector.

    Vertices are comma-separated groups: braced groups hold
    comma-separated labels, bare digit strings give one dart per digit.
    Signs follow the edges in label order.
    """
    parts = text.strip().split("u=")
    if len(parts) > 2:
        raise ParseError("multiple u= sections in rotation system")
    rot_text = parts[0].strip().rstrip(";,").strip()
    if not rot_text:
        raise ParseError("empty rotation system")
    if _wholly_braced(rot_text):
        rot_text = rot_text[1:-1].strip()
    rotations = _parse_rotation_groups(rot_text)
    labels: list[str] = []
    seen: set[str] = set()
    for vertex in rotations:
        for label in vertex:
            if label not in seen:
                seen.add(label)
                labels.append(label)
    labels.sort(key=_label_key)
    signs = _parse_signs(parts[1], labels) if len(parts) == 2 else None
    return rotation_system(rotations, signs)


def serialize_rotation(rs: RotationSystem) -> str:
    """Nested-brace form; parse_rotation(serialize_rotation(rs)) == rs."""
    body = ",".join("{" + ",".join(vertex) + "}" for vertex in rs.rotations)
    out = "{" + body + "}"
    if any(s < 0 for _, s in rs.signs):
        out += "; u={" + ",".join("+" if s > 0 else "-" for _, s in rs.signs) + "}"
    return out


# =====================================================================
# Face tracing and classification
# =====================================================================


@dataclass(frozen=True)
class FaceTrace:
    faces: int
    walks: tuple[tuple[str, ...], ...]  # edge labels along one side of each face


def trace_faces(rs: RotationSystem) -> FaceTrace:
    """Partition the traversal flags into closed face walks.

    A flag is a dart plus a side bit; stepping through an edge flips
    the side exactly when the edge sign is -. Orbits come in mirror
    pairs (one per traversal direction); geometric faces are the pairs.
    """
    darts: list[Dart] = [
        (v, p) for v, vertex in enumerate(rs.rotations) for p in range(len(vertex))
    ]
    if not darts:
        return FaceTrace(len(rs.rotations), tuple(() for _ in rs.rotations))
    sign = rs.sign_map()
    by_label: dict[str, list[Dart]] = {}
    for d in darts:
        by_label.setdefault(rs.rotations[d[0]][d[1]], []).append(d)
    partner: dict[Dart, Dart] = {}
    for pair in by_label.values():
        a, b = pair
        partner[a], partner[b] = b, a

    def rho(d: Dart, step: int) -> Dart:
        v, p = d
        return (v, (p + step) % len(rs.rotations[v]))

    def label(d: Dart) -> str:
        return rs.rotations[d[0]][d[1]]

    def step(flag: Flag) -> Flag:
        v, p, s = flag
        s2 = s * sign[label((v, p))]
        nxt = rho(partner[(v, p)], s2)
        return (nxt[0], nxt[1], s2)

    def mirror(flag: Flag) -> Flag:
        v, p, s = flag
        d = rho((v, p), -s)
        return (d[0], d[1], -s)

    all_flags = sorted((v, p, s) for v, p in darts for s in (1, -1))
    orbit_of: dict[Flag, int] = {}
    orbits: list[list[Flag]] = []
    for flag in all_flags:
        if flag in orbit_of:
            continue
        orbit = []
        cur = flag
        while cur not in orbit_of:
            orbit_of[cur] = len(orbits)
            orbit.append(cur)
            cur = step(cur)
        assert cur == flag  # orbits of a permutation close where they start
        orbits.append(orbit)
    # pair each orbit with its mirror image
    assert len(orbit_of) == len(all_flags)
    walks = []
    paired: set[int] = set()
    for i, orbit in enumerate(orbits):
        if i in paired:
            continue
        j = orbit_of[mirror(orbit[0])]
        assert j != i and j not in paired and len(orbits[j]) == len(orbit)
        paired.add(i)
        paired.add(j)
        walks.append(tuple(label((v, p)) for v, p, _ in orbit))
    assert sum(map(len, walks)) == 2 * rs.edge_count()
    return FaceTrace(len(walks), tuple(walks))


def _vertex_adjacency(rs: RotationSystem) -> dict[int, set[int]]:
    ends: dict[str, list[int]] = {}
    for v, vertex in enumerate(rs.rotations):
        for label in vertex:
            ends.setdefault(label, []).append(v)
    adj: dict[int, set[int]] = {v: set() for v in range(len(rs.rotations))}
    for a, b in ends.values():
        adj[a].add(b)
        adj[b].add(a)
    return adj


def _require_connected(rs: RotationSystem) -> None:
    if not rs.rotations:
        raise Disconnected("rotation system has no vertices")
    adj = _vertex_adjacency(rs)
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    if len(seen) != len(rs.rotations):
        raise Disconnected("the underlying graph is disconnected")


def rs_orientable(rs: RotationSystem) -> bool:
    """Signed-graph balance: can vertex flips make every sign +?

    A - loop is immediately non-orientable; otherwise the system is
    orientable iff every cycle carries an even number of - edges.
    """
    _require_connected(rs)
    sign = rs.sign_map()
    ends: dict[str, list[int]] = {}
    for v, vertex in enumerate(rs.rotations):
        for label in vertex:
            ends.setdefault(label, []).append(v)
    edges = []
    for label, (a, b) in ends.items():
        if a == b:
            if sign[label] < 0:
                return False
        else:
            edges.append((a, b, sign[label]))
    adj: dict[int, list[tuple[int, int]]] = {v: [] for v in range(len(rs.rotations))}
    for a, b, s in edges:
        adj[a].append((b, s))
        adj[b].append((a, s))
    colors: dict[int, int] = {}
    for start in range(len(rs.rotations)):
        if start in colors:
            continue
        colors[start] = 1
        stack = [start]
        while stack:
            v = stack.pop()
            for w, s in adj[v]:
                want = colors[v] * s
                if w not in colors:
                    colors[w] = want
                    stack.append(w)
                elif colors[w] != want:
                    return False
    return True


def classify_embedding(rs: RotationSystem) -> SurfaceType:
    """Closed-surface type of the embedding: genus from chi = V - E + F."""
    _require_connected(rs)
    f = trace_faces(rs).faces
    chi = rs.vertex_count() - rs.edge_count() + f
    orientable = rs_orientable(rs)
    return SurfaceType(orientable, genus(chi, orientable, 0), 0, chi)


# =====================================================================
# Chord diagrams
# =====================================================================


def parse_chord_code(text: str) -> ChordCode:
    """Read a chord code as a digit string or a comma list."""
    text = text.strip()
    if _wholly_braced(text):
        text = text[1:-1].strip()
    if "," in text:
        labels = tuple(tok.strip() for tok in text.split(","))
        if any(not tok for tok in labels):
            raise ParseError("empty label in chord code")
    else:
        labels = tuple(text)
    if not labels:
        raise ParseError("empty chord code")
    counts: dict[str, int] = {}
    for label in labels:
        counts[label] = counts.get(label, 0) + 1
    for label, n in sorted(counts.items()):
        if n != 2:
            raise ParseError(f"chord label {label!r} appears {n} times (need 2)")
    return labels


def chord_text(code: ChordCode) -> str:
    return "".join(code) if all(len(l) == 1 for l in code) else ",".join(code)


def chord_to_rotation(code: ChordCode) -> RotationSystem:
    """The one-vertex, all-+ rotation system reading the code."""
    return rotation_system((tuple(code),))


def _relabel_first_occurrence(seq: Sequence[str]) -> tuple[int, ...]:
    names: dict[str, int] = {}
    out = []
    for label in seq:
        if label not in names:
            names[label] = len(names) + 1
        out.append(names[label])
    return tuple(out)


def chord_canonical(code: ChordCode) -> ChordCode:
    """Least code over all rotations, reflections, and relabelings.

    Two chord diagrams are isomorphic iff their canonical codes agree.
    """
    if not code:
        return ()
    k = len(code)
    best: tuple[int, ...] | None = None
    for flip, r in product((False, True), range(k)):
        seq = code[::-1] if flip else code
        cand = _relabel_first_occurrence(seq[r:] + seq[:r])
        if best is None or cand < best:
            best = cand
    assert best is not None
    return tuple(str(i) for i in best)


def chord_isomorphic(c1: ChordCode, c2: ChordCode) -> bool:
    return chord_canonical(c1) == chord_canonical(c2)


def permutation_to_code(pairs: Iterable[tuple[int, int]]) -> ChordCode:
    """Code of a fixed-point-free involution given as transpositions."""
    mate: dict[int, int] = {}
    for a, b in pairs:
        if a == b:
            raise ValueError(f"fixed point {a} in chord permutation")
        if a in mate or b in mate:
            raise ValueError(f"point {a if a in mate else b} paired twice")
        mate[a] = b
        mate[b] = a
    k = len(mate)
    if sorted(mate) != list(range(1, k + 1)):
        raise ValueError(f"points must be exactly 1..{k}")
    labels: dict[int, int] = {}
    out = []
    for pos in range(1, k + 1):
        key = min(pos, mate[pos])
        if key not in labels:
            labels[key] = len(labels) + 1
        out.append(str(labels[key]))
    return tuple(out)


def code_to_permutation(code: ChordCode, start: int = 0) -> tuple[tuple[int, int], ...]:
    """Position pairing read from the code rotated to begin at `start`."""
    if not code:
        return ()
    rotated = code[start % len(code) :] + code[: start % len(code)]
    where: dict[str, list[int]] = {}
    for pos, label in enumerate(rotated, start=1):
        where.setdefault(label, []).append(pos)
    pairs = []
    for label, positions in where.items():
        if len(positions) != 2:
            raise ValueError(f"chord label {label!r} appears {len(positions)} times")
        pairs.append((positions[0], positions[1]))
    return tuple(sorted(pairs))


def enumerate_chords(
    n: int, genus_filter: int | None = None, bound: int = 8
) -> list[ChordCode]:
    """All chord-diagram classes with n chords, as sorted canonical codes."""
    if n < 0:
        raise ValueError("chord count must be nonnegative")
    if n > bound:
        raise BoundExceeded(f"n={n} exceeds the enumeration bound {bound}")
    if n == 0:
        out: list[ChordCode] = [()]
    else:
        size = 2 * n
        seen: set[ChordCode] = set()
        code: list[str | None] = [None] * size

        def fill(next_label: int) -> None:
            try:
                i = code.index(None)
            except ValueError:
                seen.add(chord_canonical(tuple(code)))  # type: ignore[arg-type]
                return
            code[i] = str(next_label)
            for j in range(i + 1, size):
                if code[j] is None:
                    code[j] = str(next_label)
                    fill(next_label + 1)
                    code[j] = None
            code[i] = None

        fill(1)
        out = sorted(seen, key=lambda c: tuple(map(int, c)))
    if genus_filter is not None:
        out = [
            c
            for c in out
            if classify_embedding(chord_to_rotation(c)).genus == genus_filter
        ]
    return out
