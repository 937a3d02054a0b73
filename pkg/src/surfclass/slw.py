"""SLW-graphs: directed multigraphs carrying sets of lists of words.

An SLW-graph encodes a stratified 2-dimensional set: a directed
multigraph plus, for every attached surface stratum, a list holding the
stratum's genus number n (negative = non-orientable of genus -n) and
one boundary word per boundary circle. Words are closed walks written
with letters a / a^-1 naming graph edges.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from typing import Iterable, Mapping, NamedTuple, Sequence

from .classify import SurfaceType, genus
from .errors import (
    Disconnected,
    EmptyComplex,
    MalformedWord,
    NotIsomorphism,
    NotSurface,
    ParseError,
    SizeMismatch,
)
from .complexes import Complex, _content_lines, norm_edge


class Letter(NamedTuple):
    edge: str
    exp: int  # +1 or -1


Word = tuple[Letter, ...]


@dataclass(frozen=True)
class WordList:
    """One stratum: genus number n plus one word per boundary circle."""

    n: int
    words: tuple[Word, ...]


@dataclass(frozen=True)
class SLWGraph:
    vertices: frozenset[str]
    edges: tuple[tuple[str, str, str], ...]  # (label, tail, head), by label
    lists: tuple[WordList, ...]

    def edge_map(self) -> dict[str, tuple[str, str]]:
        return {label: (tail, head) for label, tail, head in self.edges}

    def labels(self) -> tuple[str, ...]:
        return tuple(label for label, _, _ in self.edges)


def letter_text(letter: Letter) -> str:
    return letter.edge if letter.exp == 1 else f"{letter.edge}^-1"


def word_text(w: Word) -> str:
    return " ".join(letter_text(letter) for letter in w)


def _word_key(w: Word) -> tuple:
    return (len(w), tuple(w))


def _list_key(wl: WordList) -> tuple:
    return (wl.n, len(wl.words), tuple(map(_word_key, wl.words)))


def _walk_ends(letter: Letter, edge_map: Mapping[str, tuple[str, str]]) -> tuple[str, str]:
    # (departure vertex, arrival vertex) of one letter traversal
    tail, head = edge_map[letter.edge]
    return (tail, head) if letter.exp == 1 else (head, tail)


def word_list(n: int, words: Iterable[Word]) -> WordList:
    return WordList(n, tuple(sorted(words, key=_word_key)))


def slw_graph(
    vertices: Iterable[str],
    edges: Iterable[tuple[str, str, str]],
    lists: Iterable[WordList],
) -> SLWGraph:
    """Validate and canonicalize an SLW-graph.

    Edge endpoints are added to the vertex set implicitly; every letter
    must name an edge and every word must read as a closed walk.
    """
    edge_list: list[tuple[str, str, str]] = []
    seen: set[str] = set()
    verts = set(str(v) for v in vertices)
    for label, tail, head in edges:
        label, tail, head = str(label), str(tail), str(head)
        if label in seen:
            raise ParseError(f"duplicate edge label {label!r}")
        seen.add(label)
        edge_list.append((label, tail, head))
        verts.add(tail)
        verts.add(head)
    edge_list.sort()
    emap = {label: (tail, head) for label, tail, head in edge_list}
    canon_lists = []
    for wl in lists:
        for w in wl.words:
            _validate_word(w, emap)
        canon_lists.append(word_list(wl.n, wl.words))
    canon_lists.sort(key=_list_key)
    return SLWGraph(frozenset(verts), tuple(edge_list), tuple(canon_lists))


def _validate_word(w: Word, emap: Mapping[str, tuple[str, str]], line: int | None = None) -> None:
    if not w:
        raise MalformedWord("empty word", line)
    for letter in w:
        if letter.edge not in emap:
            raise MalformedWord(f"word names a missing edge {letter.edge!r}", line)
        if letter.exp not in (1, -1):
            raise MalformedWord(f"letter {letter.edge!r} has exponent {letter.exp}", line)
    for i, letter in enumerate(w):
        nxt = w[(i + 1) % len(w)]
        if _walk_ends(letter, emap)[1] != _walk_ends(nxt, emap)[0]:
            raise MalformedWord(f"word ({word_text(w)}) is not a closed walk", line)


# =====================================================================
# Text format
# =====================================================================


def _parse_letter(token: str, line: int) -> Letter:
    if token.endswith("^-1"):
        label = token[:-3]
        if not label or "^" in label:
            raise MalformedWord(f"bad letter {token!r}", line)
        return Letter(label, -1)
    if "^" in token:
        raise MalformedWord(f"bad letter {token!r} (only ^-1 is allowed)", line)
    return Letter(token, 1)


def parse_slw(text: str) -> SLWGraph:
    """Parse the graph:/v/e/list block format."""
    lines = _content_lines(text)
    if not lines:
        raise ParseError("empty input: no SLW-graph")
    no, first = lines[0]
    if first != "graph:":
        raise ParseError(f"expected 'graph:' header, got {first!r}", no)
    vertices: list[str] = []
    edges: list[tuple[str, str, str]] = []
    emap: dict[str, tuple[str, str]] = {}
    lists: list[WordList] = []
    words: list[Word] | None = None  # words of the open list block
    ns: list[int] = []
    for no, line in lines[1:]:
        fields = line.split()
        if fields[0] == "v":
            if words is not None or len(fields) != 2:
                raise ParseError(f"misplaced or malformed vertex line {line!r}", no)
            vertices.append(fields[1])
        elif fields[0] == "e":
            if words is not None or len(fields) != 4:
                raise ParseError(f"misplaced or malformed edge line {line!r}", no)
            label, tail, head = fields[1:]
            if label in emap:
                raise ParseError(f"duplicate edge label {label!r}", no)
            emap[label] = (tail, head)
            edges.append((label, tail, head))
        elif fields[0] == "list":
            spec = line[4:].strip()
            if not spec.startswith("n=") or not spec.endswith(":"):
                raise ParseError(f"expected 'list n=<int>:', got {line!r}", no)
            try:
                n = int(spec[2:-1])
            except ValueError:
                raise ParseError(f"bad genus number in {line!r}", no) from None
            if words is not None:
                lists.append(WordList(ns.pop(), tuple(words)))
            ns.append(n)
            words = []
        else:
            if words is None:
                raise ParseError(f"word outside any list block: {line!r}", no)
            w = tuple(_parse_letter(tok, no) for tok in fields)
            _validate_word(w, emap, no)
            words.append(w)
    if words is not None:
        lists.append(WordList(ns.pop(), tuple(words)))
    return slw_graph(vertices, edges, lists)


def slw_to_text(s: SLWGraph) -> str:
    """Canonical text form; parse_slw(slw_to_text(s)) == s."""
    lines = ["graph:"]
    lines.extend(f"v {v}" for v in sorted(s.vertices))
    lines.extend(f"e {label} {tail} {head}" for label, tail, head in s.edges)
    for wl in s.lists:
        lines.append(f"list n={wl.n}:")
        lines.extend(word_text(w) for w in wl.words)
    return "\n".join(lines) + "\n"


# =====================================================================
# Word and list equivalence
# =====================================================================


def word_equivalent(w1: Word, w2: Word) -> bool:
    """True iff w2 is a cyclic rotation of w1."""
    if len(w1) != len(w2):
        return False
    return any(w1[k:] + w1[:k] == w2 for k in range(len(w1)))


def word_reverse(w: Word) -> Word:
    """Reverse the letter order and negate every exponent."""
    return tuple(Letter(letter.edge, -letter.exp) for letter in reversed(w))


def word_substitute(w: Word, letter_map: Mapping[str, str]) -> Word:
    return tuple(Letter(letter_map[letter.edge], letter.exp) for letter in w)


def _match_words(left: Sequence[Word], right: Sequence[Word], ok) -> bool:
    # backtracking perfect matching between two word multisets
    if not left:
        return True
    first, rest = left[0], left[1:]
    for j, cand in enumerate(right):
        if ok(first, cand) and _match_words(rest, right[:j] + right[j + 1 :], ok):
            return True
    return False


def list_equivalent(l1: WordList, l2: WordList, letter_map: Mapping[str, str]) -> bool:
    """Decide list equivalence under a letter substitution.

    Each matched word pair must be equivalent or reverse; orientable
    lists (n >= 0) must use one of the two modes uniformly.
    """
    if l1.n != l2.n or len(l1.words) != len(l2.words):
        return False
    subbed = tuple(word_substitute(w, letter_map) for w in l1.words)

    def eq(a: Word, b: Word) -> bool:
        return word_equivalent(a, b)

    def rev(a: Word, b: Word) -> bool:
        return word_equivalent(word_reverse(a), b)

    if l1.n >= 0:
        return _match_words(subbed, l2.words, eq) or _match_words(subbed, l2.words, rev)
    return _match_words(subbed, l2.words, lambda a, b: eq(a, b) or rev(a, b))


# =====================================================================
# SLW-graph equivalence
# =====================================================================


def _match_lists(left: Sequence[WordList], right: Sequence[WordList], letter_map) -> bool:
    if not left:
        return True
    first, rest = left[0], left[1:]
    for j, cand in enumerate(right):
        if list_equivalent(first, cand, letter_map) and _match_lists(
            rest, right[:j] + right[j + 1 :], letter_map
        ):
            return True
    return False


def _list_signature(wl: WordList) -> tuple:
    return (wl.n, tuple(sorted(len(w) for w in wl.words)))


def _letter_profile(s: SLWGraph, label: str) -> tuple:
    # occurrence pattern of one letter, invariant under relabeling
    per_list = []
    for wl in s.lists:
        count = sum(1 for w in wl.words for letter in w if letter.edge == label)
        if count:
            per_list.append((_list_signature(wl), count))
    return tuple(sorted(per_list))


def slw_equivalent(
    s1: SLWGraph, s2: SLWGraph, letter_map: Mapping[str, str] | None = None
) -> dict[str, str] | None:
    """Find a letter bijection making the two SLWs equivalent.

    Returns the witness bijection (a dict), or None when the SLWs are
    inequivalent. With letter_map given, only that bijection is tried.
    Raises SizeMismatch when the edge or list counts differ.
    """
    if len(s1.edges) != len(s2.edges):
        raise SizeMismatch(f"edge counts differ: {len(s1.edges)} vs {len(s2.edges)}")
    if len(s1.lists) != len(s2.lists):
        raise SizeMismatch(f"list counts differ: {len(s1.lists)} vs {len(s2.lists)}")
    labels1, labels2 = s1.labels(), s2.labels()
    if letter_map is not None:
        m = {str(k): str(v) for k, v in letter_map.items()}
        if sorted(m) != sorted(labels1) or sorted(m.values()) != sorted(labels2):
            raise ValueError("letter map is not a bijection between the edge labels")
        return dict(m) if _match_lists(s1.lists, s2.lists, m) else None
    if sorted(map(_list_signature, s1.lists)) != sorted(map(_list_signature, s2.lists)):
        return None
    prof2: dict[tuple, list[str]] = defaultdict(list)
    for label in labels2:
        prof2[_letter_profile(s2, label)].append(label)
    order = sorted(labels1, key=lambda e: _letter_profile(s1, e))

    def search(i: int, m: dict[str, str], used: set[str]) -> dict[str, str] | None:
        if i == len(order):
            return dict(m) if _match_lists(s1.lists, s2.lists, m) else None
        label = order[i]
        for cand in prof2.get(_letter_profile(s1, label), ()):
            if cand in used:
                continue
            m[label] = cand
            used.add(cand)
            found = search(i + 1, m, used)
            if found is not None:
                return found
            used.discard(cand)
            del m[label]
        return None

    return search(0, {}, set())


def extends_to_homeomorphism(
    k: SLWGraph,
    k2: SLWGraph,
    vertex_map: Mapping[str, str],
    edge_map: Mapping[str, str],
) -> bool:
    """Decide whether a directed-graph isomorphism extends to the strata.

    The maps must form an isomorphism of the underlying directed
    multigraphs; the verdict is then whether substituting the edge
    names turns one SLW into a set equivalent to the other.
    """
    vm = {str(a): str(b) for a, b in vertex_map.items()}
    em = {str(a): str(b) for a, b in edge_map.items()}
    if sorted(vm) != sorted(k.vertices) or sorted(vm.values()) != sorted(k2.vertices):
        raise NotIsomorphism("vertex map is not a bijection between the vertex sets")
    if sorted(em) != sorted(k.labels()) or sorted(em.values()) != sorted(k2.labels()):
        raise NotIsomorphism("edge map is not a bijection between the edge labels")
    emap2 = k2.edge_map()
    for label, tail, head in k.edges:
        if emap2[em[label]] != (vm[tail], vm[head]):
            raise NotIsomorphism(f"edge {label!r} is not mapped to a matching directed edge")
    try:
        return slw_equivalent(k, k2, letter_map=em) is not None
    except SizeMismatch:
        return False


# =====================================================================
# Surface conditions, Euler characteristic, classification
# =====================================================================


@dataclass(frozen=True)
class SLWSurfaceCheck:
    edges_ok: bool
    vertices_ok: bool


def _occurrences(s: SLWGraph) -> Counter[str]:
    counts: Counter[str] = Counter()
    for wl in s.lists:
        for w in wl.words:
            for letter in w:
                counts[letter.edge] += 1
    return counts


def _corner_classes(s: SLWGraph) -> dict[str, int]:
    """Number of dart equivalence classes at every vertex.

    Darts are edge ends; each adjacent letter pair in a word (cyclic)
    welds the arrival end of the first arc to the departure end of the
    second at their shared vertex.
    """
    parent: dict[tuple[str, str], tuple[str, str]] = {}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[rx] = ry

    darts_at: dict[str, list[tuple[str, str]]] = defaultdict(list)
    for label, tail, head in s.edges:
        for dart in ((label, "tail"), (label, "head")):
            parent[dart] = dart
        darts_at[tail].append((label, "tail"))
        darts_at[head].append((label, "head"))
    for wl in s.lists:
        for w in wl.words:
            for i, letter in enumerate(w):
                nxt = w[(i + 1) % len(w)]
                arrive = (letter.edge, "head" if letter.exp == 1 else "tail")
                depart = (nxt.edge, "tail" if nxt.exp == 1 else "head")
                union(arrive, depart)
    return {v: len({find(d) for d in darts_at[v]}) for v in s.vertices}


def slw_surface_check(s: SLWGraph) -> SLWSurfaceCheck:
    """Closed-surface conditions: edge coverage and vertex corner classes."""
    counts = _occurrences(s)
    edges_ok = all(counts[label] == 2 for label in s.labels())
    vertices_ok = all(k == 1 for k in _corner_classes(s).values())
    return SLWSurfaceCheck(edges_ok, vertices_ok)


def _stratum_euler(wl: WordList) -> int:
    b = len(wl.words)
    return 2 - 2 * wl.n - b if wl.n >= 0 else 2 + wl.n - b


def slw_euler(s: SLWGraph) -> int:
    """Euler characteristic of the stratified set: chi(graph) + sum chi(strata)."""
    return (len(s.vertices) - len(s.edges)) + sum(map(_stratum_euler, s.lists))


def _slw_components(s: SLWGraph) -> int:
    nodes: list[object] = [("v", v) for v in s.vertices]
    nodes.extend(("list", i) for i in range(len(s.lists)))
    parent = {x: x for x in nodes}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[rx] = ry

    emap = s.edge_map()
    for _, tail, head in s.edges:
        union(("v", tail), ("v", head))
    for i, wl in enumerate(s.lists):
        for w in wl.words:
            for letter in w:
                union(("list", i), ("v", emap[letter.edge][0]))
    return len({find(x) for x in nodes})


def _boundary_circles(s: SLWGraph, counts: Counter[str]) -> int:
    """Circles formed by the once-covered edges (the free boundary)."""
    free = [label for label in s.labels() if counts[label] == 1]
    if not free:
        return 0
    parent = {label: label for label in free}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    emap = s.edge_map()
    at_vertex: dict[str, list[str]] = defaultdict(list)
    for label in free:
        tail, head = emap[label]
        at_vertex[tail].append(label)
        at_vertex[head].append(label)
    for labels in at_vertex.values():
        for other in labels[1:]:
            ra, rb = find(labels[0]), find(other)
            if ra != rb:
                parent[ra] = rb
    return len({find(label) for label in free})


def _orientable_gluing(s: SLWGraph) -> bool:
    """Search for stratum orientations making every doubled edge cancel.

    Reversing a stratum reverses all its boundary words at once; the
    glued surface is orientable iff signs exist under which each
    twice-covered edge is traversed once each way.
    """
    if any(wl.n < 0 for wl in s.lists):
        return False
    hits: dict[str, list[tuple[int, int]]] = defaultdict(list)
    for i, wl in enumerate(s.lists):
        for w in wl.words:
            for letter in w:
                hits[letter.edge].append((i, letter.exp))
    constraints: dict[int, list[tuple[int, int]]] = defaultdict(list)
    for occ in hits.values():
        if len(occ) != 2:
            continue
        (i, x), (j, y) = occ
        if i == j:
            if x != -y:
                return False
        else:
            # required sign product of the two strata
            constraints[i].append((j, -x * y))
            constraints[j].append((i, -x * y))
    sign: dict[int, int] = {}
    for start in range(len(s.lists)):
        if start in sign:
            continue
        sign[start] = 1
        stack = [start]
        while stack:
            i = stack.pop()
            for j, r in constraints[i]:
                want = sign[i] * r
                if j not in sign:
                    sign[j] = want
                    stack.append(j)
                elif sign[j] != want:
                    return False
    return True


def classify_slw(s: SLWGraph) -> SurfaceType:
    """Topological type of the surface carried by an SLW-graph.

    Every edge must lie under one stratum arc (boundary) or two
    (interior); every vertex must carry a single corner class.
    """
    if not s.vertices and not s.lists:
        raise EmptyComplex("SLW-graph has no cells")
    counts = _occurrences(s)
    for label in s.labels():
        if counts[label] not in (1, 2):
            raise NotSurface(
                f"edge {label!r} appears {counts[label]} times in the words"
            )
    for v, k in sorted(_corner_classes(s).items()):
        if k != 1:
            raise NotSurface(f"vertex {v!r} carries {k} corner classes")
    if _slw_components(s) != 1:
        raise Disconnected("the stratified set is disconnected")
    chi = slw_euler(s)
    b = _boundary_circles(s, counts)
    orientable = _orientable_gluing(s)
    return SurfaceType(orientable, genus(chi, orientable, b), b, chi)


# =====================================================================
# Conversion from cell complexes
# =====================================================================


def slw_from_complex(cx: Complex) -> SLWGraph:
    """Rebuild a 2-complex as disk strata over its 1-skeleton.

    Every 2-cell becomes one genus-0 stratum whose single boundary word
    reads the face cycle; edges are named "a-b" and directed from the
    smaller endpoint.
    """
    edges = [(f"{a}-{b}", a, b) for a, b in sorted(cx.edge_set())]
    lists = []
    for cyc in cx.cells2():
        letters = []
        k = len(cyc)
        for i in range(k):
            a, b = cyc[i], cyc[(i + 1) % k]
            lo, hi = norm_edge(a, b)
            letters.append(Letter(f"{lo}-{hi}", 1 if a == lo else -1))
        lists.append(WordList(0, (tuple(letters),)))
    return slw_graph(cx.vertex_set(), edges, lists)
